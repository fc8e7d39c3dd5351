use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pathenergy::graph::random_connected;
use pathenergy::{eigenvalues, path_matrix, SymmetricMatrix};

fn bench_jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [20, 50, 100] {
        let g = random_connected(n, 3 * n, 1).unwrap();
        let m = SymmetricMatrix::from(&path_matrix(&g));
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| eigenvalues(m, 1e-10).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_jacobi);
criterion_main!(benches);
