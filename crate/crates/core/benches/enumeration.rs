use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nbstab::enumerate::Execution;
use nbstab::families;

fn exact_distance(c: &mut Criterion) {
    let codes = [
        ("hamming-h(2,3)", families::quantum_hamming_hermitian(2, 3).unwrap()),
        ("qr(3,13)", families::quantum_qr(3, 13).unwrap()),
        ("bch-e(2,4,3)", families::quantum_bch_euclidean(2, 4, 3).unwrap()),
    ];
    let mut group = c.benchmark_group("exact-distance");
    group.sample_size(10);
    for (name, code) in &codes {
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), code, |b, code| {
                b.iter(|| {
                    let mut c = code.clone();
                    c.upgrade_distance(exec).unwrap();
                    c.distance()
                })
            });
        }
    }
    group.finish();
}

fn dual_enumerator(c: &mut Criterion) {
    let code = families::quantum_hamming_hermitian(3, 2).unwrap();
    let dual = code.dual();
    let mut group = c.benchmark_group("dual-enumerator");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}/hamming-h(3,2)"), |b| {
            b.iter(|| dual.weight_enumerator(exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_distance, dual_enumerator);
criterion_main!(benches);
