use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use grm_core::measure::{iterate_measure, measure_dp, measure_oracle};
use grm_core::order::{dyadic_encode, lex_compare, Chain, Poset};
use grm_core::testing;

fn bench_measure_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("measure");
    for n in [6usize, 8] {
        let mut rng = testing::rng(2024 + n as u64);
        let poset = testing::random_poset(&mut rng, n, 0.4);
        let lambda = testing::random_length_function(&mut rng, &poset);
        group.bench_with_input(BenchmarkId::new("dp", n), &lambda, |b, lambda| {
            b.iter(|| black_box(measure_dp(lambda).unwrap()));
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &lambda, |b, lambda| {
            b.iter(|| {
                for e in lambda.poset().elements() {
                    black_box(measure_oracle(lambda, e.as_str()).unwrap());
                }
            });
        });
    }
    group.finish();
}

fn bench_iterates(c: &mut Criterion) {
    let mut rng = testing::rng(7);
    let poset = testing::random_poset(&mut rng, 6, 0.4);
    let lambda = testing::random_length_function(&mut rng, &poset);
    c.bench_function("iterate_4", |b| {
        b.iter(|| black_box(iterate_measure(&lambda, 4).unwrap()));
    });
}

fn bench_lex_order(c: &mut Criterion) {
    let n = 8usize;
    let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<_> = (1..n)
        .map(|i| (i.to_string().into(), (i + 1).to_string().into()))
        .collect();
    let poset = Poset::from_relations(elements, pairs).unwrap();
    let chains: Vec<Chain> = (0u32..(1 << n))
        .map(|mask| {
            Chain::new(
                &poset,
                (1..=n)
                    .filter(|i| mask & (1 << (i - 1)) != 0)
                    .map(|i| i.to_string()),
            )
            .unwrap()
        })
        .collect();
    c.bench_function("lex_compare_all_pairs_2^8", |b| {
        b.iter(|| {
            for x in &chains {
                for y in &chains {
                    black_box(lex_compare(x, y, &poset).unwrap());
                }
            }
        });
    });
    c.bench_function("dyadic_encode_2^8", |b| {
        b.iter(|| {
            for x in &chains {
                black_box(dyadic_encode(x).unwrap());
            }
        });
    });
}

criterion_group!(benches, bench_measure_kernels, bench_iterates, bench_lex_order);
criterion_main!(benches);
