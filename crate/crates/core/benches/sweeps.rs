use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use demazure::rootsys::RootSystemData;
use demazure::supports::PairOrder;
use demazure::sweep::{classification_grid, dimension_sweep, saturation_sweep, word_independence_sweep, Execution};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    m.push(("parallel", Execution::Parallel));
    m
}

fn sweeps(c: &mut Criterion) {
    let a2 = RootSystemData::parse_type("A2").unwrap();
    let a3 = RootSystemData::parse_type("A3").unwrap();

    let mut group = c.benchmark_group("saturation_a2_l15");
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| saturation_sweep(&a2, 15, &PRIMES, PairOrder::Bruhat, exec).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("classification_a2_l20");
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| classification_grid(&a2, 20, &PRIMES, exec).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("dimension_a2_l12");
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| dimension_sweep(&a2, 12, exec).unwrap()));
    }
    group.finish();

    let mut group = c.benchmark_group("words_a3_l3");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| word_independence_sweep(&a3, 3, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
