//! Seeded generators for randomized checks and benchmarks.
//!
//! Everything here is deterministic in the seed; the library proper never
//! draws randomness.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::length::LengthFunction;
use crate::order::{ChainValue, ElementId, Poset};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset on `n` elements `e0..e{n-1}` listed in shuffled order.
/// Edges are drawn on an underlying linear arrangement, so the relation is
/// acyclic by construction.
pub fn random_poset(rng: &mut TestRng, n: usize, edge_prob: f64) -> Arc<Poset> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let names: Vec<String> = (0..n).map(|i| format!("e{}", i)).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(edge_prob) {
                pairs.push((
                    ElementId::new(names[order[i]].clone()),
                    ElementId::new(names[order[j]].clone()),
                ));
            }
        }
    }
    Poset::from_relations(names, pairs).expect("generated relation is acyclic")
}

/// A random depth-0 length function on `poset`. Values are `height + jitter`
/// with jitter in {0, 1/4, 1/2, 3/4}, which keeps (L1) while allowing ties
/// between incomparable elements.
pub fn random_length_function(rng: &mut TestRng, poset: &Arc<Poset>) -> LengthFunction {
    let n = poset.len();
    let mut height = vec![0i64; n];
    for &i in &poset.topological_order() {
        height[i] = poset
            .strict_predecessors(i)
            .iter()
            .map(|&j| height[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let values: Vec<ChainValue> = (0..n)
        .map(|i| {
            let jitter = rng.gen_range(0..4i64);
            ChainValue::scalar(BigRational::new(
                BigInt::from(4 * height[i] + jitter),
                BigInt::from(4),
            ))
        })
        .collect();
    LengthFunction::from_values(Arc::clone(poset), values).expect("construction satisfies L1-L3")
}

/// A random uniform-depth chain value over small rational scalars.
pub fn random_chain_value(rng: &mut TestRng, depth: usize) -> ChainValue {
    if depth == 0 {
        let numer = rng.gen_range(-8i64..=8);
        let denom = rng.gen_range(1i64..=3);
        return ChainValue::scalar(BigRational::new(numer.into(), denom.into()));
    }
    let len = rng.gen_range(0..=3usize);
    let mut entries: Vec<ChainValue> = Vec::new();
    for _ in 0..len {
        let v = random_chain_value(rng, depth - 1);
        if !entries
            .iter()
            .any(|e| crate::order::compare_values(e, &v).unwrap() == crate::CompareResult::Equal)
        {
            entries.push(v);
        }
    }
    entries.sort_by(|a, b| {
        match crate::order::compare_values(a, b).unwrap() {
            crate::CompareResult::LessThan => std::cmp::Ordering::Less,
            crate::CompareResult::GreaterThan => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        }
    });
    ChainValue::chain(entries).expect("sorted distinct entries form a chain")
}

/// Random positive rational values, one per entry of `labels`.
pub fn random_positive_rationals(rng: &mut TestRng, count: usize) -> Vec<BigRational> {
    (0..count)
        .map(|_| {
            let numer = rng.gen_range(1i64..=6);
            let denom = rng.gen_range(1i64..=3);
            BigRational::new(numer.into(), denom.into())
        })
        .collect()
}
