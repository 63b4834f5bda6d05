//! Fixtures shared by the benchmarks.

use grainlat::lattice::build_incremental_to;
use grainlat::LatticeDiagram;

/// Levels at which single incremental steps are timed.
pub const STEP_LEVELS: [u32; 4] = [20, 30, 40, 50];

/// `L_B(n)` with room reserved for one more step, so timing a step never
/// includes a rehash.
pub fn level_ready_to_grow(n: u32) -> LatticeDiagram {
    let mut d = build_incremental_to(n);
    // p(n+1)/p(n) stays below 1.25 from n = 20 on.
    d.reserve(d.node_count() / 4 + 64);
    d
}
