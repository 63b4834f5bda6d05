//! Wall-clock cost of each incremental step, per added element and edge.

use std::time::{Duration, Instant};

use crate::error::ScalingError;
use crate::lattice::{build_incremental_to, LatticeDiagram, StepStats};
use crate::tree::CountTable;

/// Time spent repeating a cheap step before its minimum is trusted.
const MIN_SAMPLE: Duration = Duration::from_millis(30);
const MAX_REPEATS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    /// The step builds `L_B(n+1)` from `L_B(n)`.
    pub n: u32,
    pub stats: StepStats,
    pub nanos: u128,
    pub repeats: usize,
}

impl ScalingRow {
    pub fn added_items(&self) -> usize {
        self.stats.added_items()
    }

    pub fn ns_per_item(&self) -> f64 {
        self.nanos as f64 / self.added_items() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScalingReport {
    pub rows: Vec<ScalingRow>,
    /// Steps left out because they insert no edge.
    pub skipped: Vec<u32>,
}

impl ScalingReport {
    /// Largest over smallest time per item.
    pub fn ratio(&self) -> f64 {
        let per: Vec<f64> = self.rows.iter().map(ScalingRow::ns_per_item).collect();
        let max = per.iter().copied().fold(f64::MIN, f64::max);
        let min = per.iter().copied().fold(f64::MAX, f64::min);
        max / min
    }
}

fn timed_step(d: &mut LatticeDiagram) -> Result<(StepStats, Duration), ScalingError> {
    let start = Instant::now();
    let stats = d.grow()?;
    Ok((stats, start.elapsed()))
}

/// Times the steps `L_B(n) → L_B(n+1)` for `n` in `from..to`.
///
/// Storage for the final level is reserved up front so no step pays for a
/// rehash. Steps quicker than a few tens of milliseconds are repeated on
/// copies and the fastest run is kept. Steps that insert no edge are skipped.
pub fn measure_incremental(from: u32, to: u32) -> Result<ScalingReport, ScalingError> {
    if from >= to {
        return Err(ScalingError::EmptyRange { from, to });
    }
    let mut counts = CountTable::new();
    let final_size: usize = counts
        .partition_count(u64::from(to))
        .try_into()
        .unwrap_or(usize::MAX);
    let mut d = build_incremental_to(from);
    d.reserve(final_size.saturating_sub(d.node_count()));

    let mut report = ScalingReport::default();
    let mut last = Duration::ZERO;
    for n in from..to {
        let (stats, best, repeats) = if last < MIN_SAMPLE {
            let mut spent = Duration::ZERO;
            let mut best = Duration::MAX;
            let mut repeats = 0;
            let mut grown = None;
            while spent < MIN_SAMPLE && repeats < MAX_REPEATS {
                let mut copy = d.clone();
                copy.reserve(final_size.saturating_sub(copy.node_count()));
                let (stats, took) = timed_step(&mut copy)?;
                spent += took;
                best = best.min(took);
                repeats += 1;
                grown = Some((copy, stats));
            }
            let (copy, stats) = grown.expect("at least one run");
            d = copy;
            (stats, best, repeats)
        } else {
            let (stats, took) = timed_step(&mut d)?;
            (stats, took, 1)
        };
        last = best;
        if stats.inserted_edges == 0 {
            report.skipped.push(n);
            continue;
        }
        report.rows.push(ScalingRow {
            n,
            stats,
            nanos: best.as_nanos(),
            repeats,
        });
    }
    if report.rows.is_empty() {
        return Err(ScalingError::NothingMeasured { from, to });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges() {
        assert!(matches!(measure_incremental(3, 3), Err(ScalingError::EmptyRange { .. })));
        assert!(matches!(measure_incremental(0, 1), Err(ScalingError::NothingMeasured { .. })));
        let r = measure_incremental(0, 6).unwrap();
        assert_eq!(r.skipped, vec![0]);
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.rows[0].stats.added_nodes, 1);
        assert!(r.ratio() >= 1.0);
    }
}
