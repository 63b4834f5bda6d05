use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grainlat::oracle::partition_count_dp;
use grainlat::CountTable;

fn counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("p(n)");
    for n in [100u32, 400] {
        group.bench_with_input(BenchmarkId::new("path_counts", n), &n, |b, &n| {
            b.iter(|| CountTable::new().partition_count(u64::from(n)))
        });
        group.bench_with_input(BenchmarkId::new("dp", n), &n, |b, &n| b.iter(|| partition_count_dp(n)));
    }
    group.finish();
}

criterion_group!(benches, counts);
criterion_main!(benches);
