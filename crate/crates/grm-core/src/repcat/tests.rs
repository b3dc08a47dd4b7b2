use std::sync::Arc;

use num_rational::BigRational;

use super::rep::{
    decompose, end_basis, exists_mono, hom_basis, is_indecomposable, is_isomorphic,
    socle_simples,
};
use super::*;
use crate::error::Error;

pub(crate) fn a2_quiver() -> Arc<Quiver> {
    Quiver::new(["1", "2"], [("1".to_owned(), "2".to_owned())]).unwrap()
}

pub(crate) fn a3_linear() -> Arc<Quiver> {
    Quiver::new(
        ["1", "2", "3"],
        [
            ("1".to_owned(), "2".to_owned()),
            ("2".to_owned(), "3".to_owned()),
        ],
    )
    .unwrap()
}

pub(crate) fn kronecker() -> Arc<Quiver> {
    Quiver::new(
        ["1", "2"],
        [
            ("1".to_owned(), "2".to_owned()),
            ("1".to_owned(), "2".to_owned()),
        ],
    )
    .unwrap()
}

fn f2() -> Fp {
    Fp::new(2).unwrap()
}

/// The projective (k → k, identity) on A_2.
fn a2_projective() -> Representation {
    let q = a2_quiver();
    Representation::new(
        Arc::clone(&q),
        f2(),
        vec![1, 1],
        vec![FpMat::from_rows(vec![vec![1]])],
    )
    .unwrap()
}

fn simple(q: &Arc<Quiver>, v: usize) -> Representation {
    Representation::simple(Arc::clone(q), f2(), v)
}

#[test]
fn quiver_rejects_cycles_and_loops() {
    assert!(Quiver::new(
        ["1", "2"],
        [
            ("1".to_owned(), "2".to_owned()),
            ("2".to_owned(), "1".to_owned())
        ]
    )
    .is_err());
    assert!(Quiver::new(["1"], [("1".to_owned(), "1".to_owned())]).is_err());
}

#[test]
fn field_characteristic_validation() {
    assert!(Fp::new(4).is_err());
    assert!(Fp::new(11).is_err());
    for p in [2, 3, 5, 7] {
        assert!(Fp::new(p).is_ok());
    }
}

#[test]
fn field_arithmetic_sane() {
    for p in [2u8, 3, 5, 7] {
        let f = Fp::new(p).unwrap();
        for a in 1..p {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        for a in 0..p {
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
    }
}

#[test]
fn rank_and_nullspace() {
    let f = Fp::new(3).unwrap();
    let m = FpMat::from_rows(vec![vec![1, 2, 0], vec![0, 1, 1]]);
    assert_eq!(f.rank(&m), 2);
    let null = f.nullspace(&m);
    assert_eq!(null.len(), 1);
    // A dependent pair: the second row is twice the first mod 3.
    let dep = FpMat::from_rows(vec![vec![1, 2, 0], vec![2, 1, 0]]);
    assert_eq!(f.rank(&dep), 1);
    assert_eq!(f.nullspace(&dep).len(), 2);
    for x in &null {
        for i in 0..m.rows {
            let s = (0..m.cols).fold(0, |acc, j| f.add(acc, f.mul(m.get(i, j), x[j])));
            assert_eq!(s, 0);
        }
    }
}

/// Independent oracle: all block tuples over F_2, filtered by the
/// intertwining equations directly.
fn brute_force_hom_dim_a2(a: &Representation, b: &Representation) -> usize {
    let f = a.field();
    let (r1, c1) = (b.dims()[0], a.dims()[0]);
    let (r2, c2) = (b.dims()[1], a.dims()[1]);
    let n1 = r1 * c1;
    let n2 = r2 * c2;
    let mut count = 0usize;
    for bits in 0u32..(1 << (n1 + n2)) {
        let mut phi1 = FpMat::zero(r1, c1);
        let mut phi2 = FpMat::zero(r2, c2);
        for k in 0..n1 {
            phi1.data[k] = ((bits >> k) & 1) as u8;
        }
        for k in 0..n2 {
            phi2.data[k] = ((bits >> (n1 + k)) & 1) as u8;
        }
        let lhs = f.matmul(&phi2, &a.maps()[0]);
        let rhs = f.matmul(&b.maps()[0], &phi1);
        if lhs == rhs {
            count += 1;
        }
    }
    // |Hom| = 2^dim over F_2.
    count.trailing_zeros() as usize
}

#[test]
fn hom_dimensions_on_a2() {
    let q = a2_quiver();
    let s1 = simple(&q, 0);
    let s2 = simple(&q, 1);
    let p = a2_projective();
    let cases = [
        (&s1, &s1, 1usize),
        (&s1, &s2, 0),
        // S_2 is the socle of P, not a quotient: no nonzero map P → S_2.
        (&p, &s2, 0),
        (&s2, &p, 1),
        (&p, &s1, 1),
        (&p, &p, 1),
        (&s2, &s1, 0),
    ];
    for (a, b, expected) in cases {
        let basis = hom_basis(a, b).unwrap();
        assert_eq!(basis.len(), expected, "{:?} -> {:?}", a.dims(), b.dims());
        assert_eq!(basis.len(), brute_force_hom_dim_a2(a, b));
    }
}

#[test]
fn hom_requires_same_quiver() {
    let s = simple(&a2_quiver(), 0);
    let t = simple(&kronecker(), 0);
    assert!(matches!(hom_basis(&s, &t), Err(Error::QuiverMismatch)));
}

#[test]
fn indecomposability_examples() {
    let q = a2_quiver();
    let s1 = simple(&q, 0);
    assert!(is_indecomposable(&s1).unwrap());
    let double = s1.direct_sum(&s1).unwrap();
    assert!(!is_indecomposable(&double).unwrap());
    assert!(is_indecomposable(&a2_projective()).unwrap());
    assert_eq!(end_basis(&a2_projective()).unwrap().len(), 1);
    let zero = Representation::zero(Arc::clone(&q), f2());
    assert!(matches!(
        is_indecomposable(&zero),
        Err(Error::ZeroRepresentation)
    ));
}

#[test]
fn decompose_examples() {
    let q = a2_quiver();
    let zero = Representation::zero(Arc::clone(&q), f2());
    assert!(decompose(&zero).unwrap().is_empty());

    let s1 = simple(&q, 0);
    let p = a2_projective();
    let sum = s1.direct_sum(&p).unwrap();
    let parts = decompose(&sum).unwrap();
    assert_eq!(parts.len(), 2);
    let mut dims: Vec<Vec<usize>> = parts.iter().map(|r| r.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![1, 0], vec![1, 1]]);
    assert!(parts.iter().any(|r| is_isomorphic(r, &s1).unwrap()));
    assert!(parts.iter().any(|r| is_isomorphic(r, &p).unwrap()));
}

#[test]
fn decompose_round_trips() {
    // Re-summing the parts is isomorphic to the original.
    let q = a3_linear();
    let f = f2();
    let reps = [
        Representation::new(
            Arc::clone(&q),
            f,
            vec![1, 2, 1],
            vec![
                FpMat::from_rows(vec![vec![1], vec![0]]),
                FpMat::from_rows(vec![vec![0, 1]]),
            ],
        )
        .unwrap(),
        Representation::new(
            Arc::clone(&q),
            f,
            vec![2, 2, 2],
            vec![
                FpMat::from_rows(vec![vec![1, 0], vec![0, 0]]),
                FpMat::from_rows(vec![vec![0, 1], vec![0, 0]]),
            ],
        )
        .unwrap(),
    ];
    for rep in &reps {
        let parts = decompose(rep).unwrap();
        let total: usize = parts.iter().map(Representation::total_dim).sum();
        assert_eq!(total, rep.total_dim());
        let mut rebuilt = Representation::zero(Arc::clone(&q), f);
        for part in &parts {
            assert!(is_indecomposable(part).unwrap());
            rebuilt = rebuilt.direct_sum(part).unwrap();
        }
        assert!(is_isomorphic(&rebuilt, rep).unwrap());
    }
}

#[test]
fn krull_schmidt_multiset_deterministic() {
    // Decomposing a shuffled direct sum yields the same dimension-vector
    // multiset no matter the assembly order.
    let q = a2_quiver();
    let s1 = simple(&q, 0);
    let s2 = simple(&q, 1);
    let p = a2_projective();
    let orders: Vec<Vec<&Representation>> = vec![
        vec![&s1, &s2, &p],
        vec![&p, &s1, &s2],
        vec![&s2, &p, &s1],
    ];
    let mut outcomes = Vec::new();
    for order in orders {
        let mut sum = order[0].clone();
        for r in &order[1..] {
            sum = sum.direct_sum(r).unwrap();
        }
        let mut dims: Vec<Vec<usize>> = decompose(&sum)
            .unwrap()
            .iter()
            .map(|r| r.dims().to_vec())
            .collect();
        dims.sort();
        outcomes.push(dims);
    }
    assert!(outcomes.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(outcomes[0], vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
}

#[test]
fn exists_mono_examples() {
    let q = a2_quiver();
    let s1 = simple(&q, 0);
    let s2 = simple(&q, 1);
    let p = a2_projective();
    assert!(exists_mono(&s2, &p).unwrap());
    assert!(!exists_mono(&s1, &p).unwrap());
    assert!(exists_mono(&p, &p).unwrap());
    assert!(exists_mono(&Representation::zero(Arc::clone(&q), f2()), &s1).unwrap());
}

#[test]
fn socle_examples() {
    let q = a2_quiver();
    assert_eq!(socle_simples(&simple(&q, 0)).unwrap(), vec![0]);
    assert_eq!(socle_simples(&a2_projective()).unwrap(), vec![1]);
    // R_1(1,0) on the Kronecker quiver: only the sink simple embeds.
    let k = kronecker();
    let r10 = Representation::new(
        Arc::clone(&k),
        f2(),
        vec![1, 1],
        vec![
            FpMat::from_rows(vec![vec![1]]),
            FpMat::from_rows(vec![vec![0]]),
        ],
    )
    .unwrap();
    assert_eq!(socle_simples(&r10).unwrap(), vec![1]);
    assert!(matches!(
        socle_simples(&Representation::zero(Arc::clone(&k), f2())),
        Err(Error::ZeroRepresentation)
    ));
}

#[test]
fn module_length_examples() {
    let q = a2_quiver();
    let p = a2_projective();
    let ell1 = CategoryLengthFunction::composition_length(2);
    assert_eq!(
        module_length(&p, &ell1).unwrap(),
        BigRational::from_integer(2.into())
    );
    let ell = CategoryLengthFunction::new(vec![
        BigRational::from_integer(2.into()),
        BigRational::from_integer(1.into()),
    ])
    .unwrap();
    assert_eq!(
        module_length(&p, &ell).unwrap(),
        BigRational::from_integer(3.into())
    );
    let zero = Representation::zero(Arc::clone(&q), f2());
    assert_eq!(
        module_length(&zero, &ell).unwrap(),
        BigRational::from_integer(0.into())
    );
}

#[test]
fn module_length_additive_on_sums() {
    let q = a3_linear();
    let ell = CategoryLengthFunction::new(vec![
        BigRational::new(3.into(), 2.into()),
        BigRational::from_integer(1.into()),
        BigRational::new(1.into(), 3.into()),
    ])
    .unwrap();
    let mut rng = crate::testing::rng(7);
    for _ in 0..10 {
        use rand::Rng;
        let d1: Vec<usize> = (0..3).map(|_| rng.gen_range(0..3)).collect();
        let d2: Vec<usize> = (0..3).map(|_| rng.gen_range(0..3)).collect();
        let mk = |dims: &Vec<usize>| {
            let maps = q
                .arrows()
                .iter()
                .map(|&(s, t)| FpMat::zero(dims[t], dims[s]))
                .collect();
            Representation::new(Arc::clone(&q), f2(), dims.clone(), maps).unwrap()
        };
        let a = mk(&d1);
        let b = mk(&d2);
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(
            module_length(&sum, &ell).unwrap(),
            module_length(&a, &ell).unwrap() + module_length(&b, &ell).unwrap()
        );
    }
}

#[test]
fn enumerate_a2_max_len_2() {
    let ip = enumerate_ind(&a2_quiver(), f2(), 2).unwrap();
    let labels: Vec<&str> = ip.classes().iter().map(|c| c.label.as_str()).collect();
    assert_eq!(labels, vec!["S2", "S1", "[1..2]"]);
    let poset = ip.poset();
    assert!(poset.leq("S2", "[1..2]").unwrap());
    assert!(!poset.leq("S1", "[1..2]").unwrap());
    assert!(!poset.leq("S1", "S2").unwrap());
    assert!(ip.is_truncated());
}

#[test]
fn enumerate_a1_vector_spaces() {
    let q = Quiver::new(["1"], []).unwrap();
    let ip = enumerate_ind(&q, f2(), 3).unwrap();
    assert_eq!(ip.classes().len(), 1);
    assert_eq!(ip.classes()[0].label, "S1");
    assert!(!ip.is_truncated());
}

#[test]
fn enumerate_kronecker_regulars() {
    let ip = enumerate_ind(&kronecker(), f2(), 2).unwrap();
    let labels: Vec<&str> = ip.classes().iter().map(|c| c.label.as_str()).collect();
    // |P¹(F_2)| = 3 regular classes in dimension (1,1).
    assert_eq!(
        labels,
        vec!["P1", "Q1", "R1(0:1)", "R1(1:0)", "R1(1:1)"]
    );
    let ip3 = enumerate_ind(&kronecker(), Fp::new(3).unwrap(), 2).unwrap();
    let regulars = ip3
        .classes()
        .iter()
        .filter(|c| c.rep.dims() == [1, 1])
        .count();
    assert_eq!(regulars, 4); // |P¹(F_3)| = 4
}

#[test]
fn enumeration_matches_indecomposability_checker() {
    // The inductive sum tables and the endomorphism-based checker agree.
    for (quiver, max_len) in [(a2_quiver(), 4), (a3_linear(), 4), (kronecker(), 4)] {
        let table = super::enumerate::enumerate_classes(&quiver, f2(), max_len).unwrap();
        for class in &table.classes {
            assert_eq!(
                is_indecomposable(&class.rep).unwrap(),
                class.indec,
                "{:?} on {:?}",
                class.rep.dims(),
                quiver.arrows()
            );
        }
    }
}

/// Independent oracle for enumeration at small sizes: list every matrix
/// tuple, class representatives by pairwise isomorphism tests (Hom-scan
/// route), and decide indecomposability with the endomorphism route.
#[test]
fn enumeration_matches_pairwise_iso_oracle() {
    for quiver in [a2_quiver(), kronecker()] {
        for dims in [vec![1usize, 1], vec![0, 2], vec![1, 2], vec![2, 1]] {
            let entry_count: usize = quiver
                .arrows()
                .iter()
                .map(|&(s, t)| dims[t] * dims[s])
                .sum();
            let mut reps: Vec<Representation> = Vec::new();
            for bits in 0u32..(1 << entry_count) {
                let mut offset = 0;
                let maps: Vec<FpMat> = quiver
                    .arrows()
                    .iter()
                    .map(|&(s, t)| {
                        let mut m = FpMat::zero(dims[t], dims[s]);
                        for k in 0..m.data.len() {
                            m.data[k] = ((bits >> (offset + k)) & 1) as u8;
                        }
                        offset += m.data.len();
                        m
                    })
                    .collect();
                reps.push(
                    Representation::new(Arc::clone(&quiver), f2(), dims.clone(), maps).unwrap(),
                );
            }
            let mut oracle_classes: Vec<Representation> = Vec::new();
            for rep in &reps {
                if !oracle_classes
                    .iter()
                    .any(|c| is_isomorphic(c, rep).unwrap())
                {
                    oracle_classes.push(rep.clone());
                }
            }
            let oracle_indec = oracle_classes
                .iter()
                .filter(|c| is_indecomposable(c).unwrap())
                .count();

            let total: usize = dims.iter().sum();
            let table = super::enumerate::enumerate_classes(&quiver, f2(), total).unwrap();
            let found: Vec<&super::enumerate::ClassInfo> = table
                .classes
                .iter()
                .filter(|c| c.rep.dims() == dims.as_slice())
                .collect();
            assert_eq!(found.len(), oracle_classes.len(), "dims {:?}", dims);
            assert_eq!(
                found.iter().filter(|c| c.indec).count(),
                oracle_indec,
                "dims {:?}",
                dims
            );
        }
    }
}

#[test]
fn subobject_relation_monotone_in_length() {
    let ip = enumerate_ind(&kronecker(), f2(), 4).unwrap();
    let ell1 = CategoryLengthFunction::composition_length(2);
    for x in ip.classes() {
        for y in ip.classes() {
            if x.label != y.label && exists_mono(&x.rep, &y.rep).unwrap() {
                let lx = module_length(&x.rep, &ell1).unwrap();
                let ly = module_length(&y.rep, &ell1).unwrap();
                assert!(lx < ly, "{} in {}", x.label, y.label);
            }
        }
    }
}

/// The stored class order is exactly the monomorphism relation (reflexive
/// closure included), which also forces its transitivity.
#[test]
fn subobject_relation_is_exactly_exists_mono() {
    for quiver in [a3_linear(), kronecker()] {
        let ip = enumerate_ind(&quiver, f2(), 4).unwrap();
        for x in ip.classes() {
            for y in ip.classes() {
                let mono = exists_mono(&x.rep, &y.rep).unwrap();
                let stored = ip.poset().leq(&x.label, &y.label).unwrap();
                assert_eq!(stored, mono, "{} vs {}", x.label, y.label);
            }
        }
    }
}

#[test]
fn truncation_is_exact_on_shared_classes() {
    for quiver in [a3_linear(), kronecker()] {
        let small = enumerate_ind(&quiver, f2(), 3).unwrap();
        let large = enumerate_ind(&quiver, f2(), 5).unwrap();
        let ell1 = CategoryLengthFunction::composition_length(quiver.vertex_count());
        let m_small = small.measure(&ell1).unwrap();
        let m_large = large.measure(&ell1).unwrap();
        for class in small.classes() {
            let vs = m_small.value(&class.label).unwrap();
            let vl = m_large.value(&class.label).unwrap();
            assert_eq!(vs, vl, "{} changed between truncations", class.label);
        }
    }
}

#[test]
fn budget_exceeded_reports_dimension_vector() {
    let err = enumerate_ind(&kronecker(), Fp::new(7).unwrap(), 7).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded(_)));
}

#[test]
fn max_len_cap_enforced() {
    assert!(enumerate_ind(&a2_quiver(), f2(), 8).is_err());
    assert!(enumerate_ind(&a2_quiver(), f2(), 0).is_err());
}
