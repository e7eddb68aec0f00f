use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use monomial_residues::exec::ExecMode;
use monomial_residues::ideal::Exponent;
use monomial_residues::newton::integral_closure_of_power_with;

fn exp(coords: &[i64]) -> Exponent {
    Exponent::new(coords.to_vec()).unwrap()
}

/// A 3-dimensional Artinian exponent set with a large enough box that
/// the lattice scan dominates.
fn workload() -> Vec<Exponent> {
    vec![
        exp(&[9, 0, 0]),
        exp(&[0, 9, 0]),
        exp(&[0, 0, 9]),
        exp(&[5, 3, 0]),
        exp(&[0, 4, 4]),
        exp(&[2, 2, 5]),
        exp(&[6, 0, 2]),
    ]
}

fn bench_closure_scan(c: &mut Criterion) {
    let a = workload();
    let mut group = c.benchmark_group("integral_closure_of_power");
    for r in [1u32, 2] {
        group.bench_with_input(BenchmarkId::new("sequential", r), &r, |b, &r| {
            b.iter(|| integral_closure_of_power_with(&a, r, ExecMode::Sequential).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", r), &r, |b, &r| {
            b.iter(|| integral_closure_of_power_with(&a, r, ExecMode::Parallel).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_closure_scan);
criterion_main!(benches);
