//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! binary exits nonzero if any fails. Runs without the libtest harness so
//! the timing criterion has the machine to itself.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use grainlat::infinite::{chi, inf_join, inf_meet, inf_transitions, pi_embed, union_transitions};
use grainlat::lattice::format::{export, Format};
use grainlat::lattice::{build_incremental_to, build_naive, join, meet};
use grainlat::oracle::{
    covers_bruteforce, dominates, enumerate_partitions, join_bruteforce, meet_bruteforce,
    partition_count_dp,
};
use grainlat::scaling::measure_incremental;
use grainlat::tree::{children, level, parent, xk_subtree};
use grainlat::{CountTable, InfPartition, Partition};
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cover_exactness() -> Outcome {
    for n in 0..=12 {
        let rules: BTreeSet<(Partition, Partition)> = enumerate_partitions(n)
            .iter()
            .flat_map(|s| s.transitions())
            .map(|t| (t.source, t.target))
            .collect();
        let covers = covers_bruteforce(n).map_err(|e| e.to_string())?;
        if rules != covers {
            return Err(format!("n = {n}: {} transitions vs {} covers", rules.len(), covers.len()));
        }
    }
    Ok("transitions = covers for n <= 12".into())
}

fn incremental_equals_naive() -> Outcome {
    for n in 0..=12 {
        let (a, b) = (build_incremental_to(n), build_naive(n));
        for f in [Format::Edges, Format::Dot, Format::Json, Format::Text] {
            if export(&a, f) != export(&b, f) {
                return Err(format!("n = {n}: {f:?} exports differ"));
            }
        }
    }
    Ok("byte-identical exports for n <= 12".into())
}

/// `s ≤ t` in `L_B(∞)`, through dominance of the finite stand-ins with a
/// tall enough first column.
fn inf_leq_by_dominance(s: &Partition, t: &Partition, tall: u32) -> bool {
    let pad = |x: &Partition| {
        let mut parts = vec![tall - x.weight()];
        parts.extend_from_slice(x.parts());
        Partition::new(parts).unwrap()
    };
    dominates(&pad(t), &pad(s))
}

fn meet_join_formulas() -> Outcome {
    let mut pairs = 0usize;
    for n in 0..=10 {
        let all = enumerate_partitions(n);
        for s in &all {
            for t in &all {
                let m = meet(s, t).map_err(|e| e.to_string())?;
                let j = join(s, t).map_err(|e| e.to_string())?;
                if m != meet_bruteforce(s, t).map_err(|e| e.to_string())? {
                    return Err(format!("meet of {s} and {t}"));
                }
                if j != join_bruteforce(s, t).map_err(|e| e.to_string())? {
                    return Err(format!("join of {s} and {t}"));
                }
                pairs += 1;
            }
        }
    }
    let filter: Vec<Partition> = (0..=8).flat_map(enumerate_partitions).collect();
    let tall = 17;
    for s in &filter {
        for t in &filter {
            let lower: Vec<&Partition> = filter
                .iter()
                .filter(|u| inf_leq_by_dominance(u, s, tall) && inf_leq_by_dominance(u, t, tall))
                .collect();
            let greatest: Vec<&&Partition> = lower
                .iter()
                .filter(|g| lower.iter().all(|u| inf_leq_by_dominance(u, g, tall)))
                .collect();
            let [g] = greatest.as_slice() else {
                return Err(format!("no unique infimum of {s} and {t} in the filter"));
            };
            if inf_meet(&chi(s), &chi(t)) != chi(g) {
                return Err(format!("inf_meet of {s} and {t}"));
            }
        }
    }
    Ok(format!("{pairs} pairs for n <= 10; {} pairs in the weight <= 8 filter", filter.len().pow(2)))
}

fn embedding_laws() -> Outcome {
    for n in 1..=8 {
        let all = enumerate_partitions(n);
        for s in &all {
            for t in &all {
                let (ps, pt) = (pi_embed(s).unwrap(), pi_embed(t).unwrap());
                if pi_embed(&meet(s, t).unwrap()).unwrap() != inf_meet(&ps, &pt) {
                    return Err(format!("π does not preserve the meet of {s} and {t}"));
                }
                if pi_embed(&join(s, t).unwrap()).unwrap() != inf_join(&ps, &pt) {
                    return Err(format!("π does not preserve the join of {s} and {t}"));
                }
            }
        }
    }
    let mut checked = 0;
    for n in 0..=8 {
        for s in enumerate_partitions(n) {
            let shifted: BTreeSet<(usize, InfPartition)> = union_transitions(&s)
                .into_iter()
                .map(|(i, t)| (i + 1, chi(&t)))
                .collect();
            let direct: BTreeSet<(usize, InfPartition)> = inf_transitions(&chi(&s)).into_iter().collect();
            if shifted != direct {
                return Err(format!("χ label shift fails at {s}"));
            }
            checked += shifted.len();
        }
    }
    Ok(format!("π preserves meet/join for n <= 8; {checked} χ-shifted transitions"))
}

fn tree_levels() -> Outcome {
    for n in 0..=15 {
        let lv = level(n);
        let set: BTreeSet<Partition> = lv.iter().cloned().collect();
        let want: BTreeSet<Partition> = enumerate_partitions(n).into_iter().collect();
        if set != want || lv.len() != want.len() {
            return Err(format!("level {n}: {} nodes, {} distinct, p = {}", lv.len(), set.len(), want.len()));
        }
        if n == 0 {
            continue;
        }
        for s in &want {
            let fathers: Vec<(usize, Partition)> = enumerate_partitions(n - 1)
                .into_iter()
                .flat_map(|f| {
                    children(&f)
                        .into_iter()
                        .filter(|(_, c)| c == s)
                        .map(move |(l, _)| (l, f.clone()))
                })
                .collect();
            if fathers.len() != 1 || parent(s).ok().as_ref() != fathers.first() {
                return Err(format!("{s} has parents {fathers:?}"));
            }
        }
    }
    Ok("levels and unique parents for n <= 15".into())
}

fn counting() -> Outcome {
    let mut table = CountTable::new();
    for n in 0..=40u32 {
        if table.partition_count(u64::from(n)) != partition_count_dp(n) {
            return Err(format!("c({n},{n}) differs from p({n})"));
        }
    }
    for n in 0..=30u32 {
        let all = enumerate_partitions(n);
        for k in 0..=n {
            let want = all.iter().filter(|s| s.len() == k as usize).count();
            let got = match table.count_length_exact(u64::from(n), u64::from(k)) {
                Ok(v) => v,
                Err(_) if want == 0 => continue,
                Err(e) => return Err(e.to_string()),
            };
            if got != BigUint::from(want) {
                return Err(format!("length-{k} count of {n}: {got} vs {want}"));
            }
        }
    }
    Ok("c(n,n) = p(n) for n <= 40; length counts for n <= 30".into())
}

fn length_k_subtree() -> Outcome {
    for k in 1..=6usize {
        let sub = xk_subtree(&Partition::ones(k), 20);
        for max in 0..=20 {
            let got: BTreeSet<&Partition> = sub.iter().filter(|s| s.weight() <= max).collect();
            let all: Vec<Partition> = (0..=max).flat_map(enumerate_partitions).collect();
            let want: BTreeSet<&Partition> = all.iter().filter(|s| s.len() == k).collect();
            if got != want {
                return Err(format!("k = {k}, N = {max}: {} vs {}", got.len(), want.len()));
            }
        }
    }
    Ok("subtree under (1^k) = length-k partitions for k <= 6, N <= 20".into())
}

fn linear_time() -> Outcome {
    let report = measure_incremental(30, 60).map_err(|e| e.to_string())?;
    let ratio = report.ratio();
    let detail = format!(
        "max/min ns per item = {ratio:.2} over {} steps (n = 30..60)",
        report.rows.len()
    );
    if ratio <= 5.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 cover exactness", cover_exactness),
        ("2 incremental = naive", incremental_equals_naive),
        ("3 meet/join formulas", meet_join_formulas),
        ("4 embedding laws", embedding_laws),
        ("5 tree levels", tree_levels),
        ("6 counting", counting),
        ("7 length-k subtree", length_k_subtree),
        ("8 linear-time scaling", linear_time),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
