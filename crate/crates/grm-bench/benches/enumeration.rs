use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use grm_core::repcat::{enumerate_ind, CategoryLengthFunction, Fp, Quiver};
use grm_core::verify::check_main_property;

fn kronecker() -> std::sync::Arc<Quiver> {
    Quiver::new(
        ["1", "2"],
        [
            ("1".to_owned(), "2".to_owned()),
            ("1".to_owned(), "2".to_owned()),
        ],
    )
    .unwrap()
}

fn bench_enumeration(c: &mut Criterion) {
    let quiver = kronecker();
    let mut group = c.benchmark_group("enumerate_ind");
    group.sample_size(10);
    for (p, max_len) in [(2u8, 4usize), (2, 5), (3, 4)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("F{}_len{}", p, max_len)),
            &(p, max_len),
            |b, &(p, max_len)| {
                b.iter(|| {
                    black_box(enumerate_ind(&quiver, Fp::new(p).unwrap(), max_len).unwrap())
                });
            },
        );
    }
    group.finish();
}

fn bench_main_property(c: &mut Criterion) {
    let quiver = kronecker();
    let ip = enumerate_ind(&quiver, Fp::new(2).unwrap(), 5).unwrap();
    let ell1 = CategoryLengthFunction::composition_length(2);
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("main_property_kronecker_len5", |b| {
        b.iter(|| black_box(check_main_property(&ip, &ell1, 2).unwrap()));
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_main_property);
criterion_main!(benches);
