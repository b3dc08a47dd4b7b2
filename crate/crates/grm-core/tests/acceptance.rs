//! Acceptance suite. Each test prints one pass line and enforces both the
//! exact expected results (zero numeric tolerance) and its runtime budget.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::BigRational;

use grm_core::length::{are_equivalent, sorted_order, LengthFunction};
use grm_core::measure::{
    check_c_properties, check_m_axioms, gr_filtration, iterate_measure, measure_dp,
    measure_from_filtration, measure_is_length_function, measure_oracle, Measure,
};
use grm_core::order::{compare_values, dyadic_encode, lex_compare, Chain, ChainValue, Poset};
use grm_core::repcat::{enumerate_ind, CategoryLengthFunction, Fp, IndPoset, Quiver};
use grm_core::testing;
use grm_core::verify::{
    check_main_property, check_socle_lemma, detect_injectives, detect_simples,
    oracle_injectives,
};
use grm_core::CompareResult;

fn finish(criterion: usize, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {} exceeded its runtime budget: {:?} >= {:?}",
        criterion,
        elapsed,
        budget
    );
    println!(
        "criterion {:2}: PASS ({:6.2}s) — {}",
        criterion,
        elapsed.as_secs_f64(),
        what
    );
}

fn total_order(n: usize) -> Arc<Poset> {
    let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs = (1..n).map(|i| (i.to_string().into(), (i + 1).to_string().into()));
    Poset::from_relations(elements, pairs).unwrap()
}

fn fence_poset() -> Arc<Poset> {
    Poset::from_relations(
        ["d", "e", "f", "a", "b", "c"],
        [
            ("d".into(), "a".into()),
            ("e".into(), "a".into()),
            ("e".into(), "b".into()),
            ("f".into(), "b".into()),
            ("f".into(), "c".into()),
        ],
    )
    .unwrap()
}

fn int_function(poset: &Arc<Poset>, pairs: &[(&str, i64)]) -> LengthFunction {
    let values: BTreeMap<String, ChainValue> = pairs
        .iter()
        .map(|&(k, v)| (k.to_owned(), ChainValue::integer(v)))
        .collect();
    LengthFunction::new(Arc::clone(poset), &values).unwrap()
}

fn fence_lambda0() -> LengthFunction {
    int_function(
        &fence_poset(),
        &[("a", 4), ("b", 5), ("c", 6), ("d", 3), ("e", 2), ("f", 1)],
    )
}

fn a2() -> Arc<Quiver> {
    Quiver::new(["1", "2"], [("1".to_owned(), "2".to_owned())]).unwrap()
}

fn a3(orientation: [bool; 2]) -> Arc<Quiver> {
    // true: arrow points right (i → i+1).
    let arrows = orientation.iter().enumerate().map(|(i, &right)| {
        let (a, b) = ((i + 1).to_string(), (i + 2).to_string());
        if right {
            (a, b)
        } else {
            (b, a)
        }
    });
    Quiver::new(["1", "2", "3"], arrows).unwrap()
}

fn kronecker() -> Arc<Quiver> {
    Quiver::new(
        ["1", "2"],
        [
            ("1".to_owned(), "2".to_owned()),
            ("1".to_owned(), "2".to_owned()),
        ],
    )
    .unwrap()
}

/// Ascending groups of labels with equal measure value.
fn value_groups(ip: &IndPoset, f: &LengthFunction) -> Vec<BTreeSet<String>> {
    let (order, _) = sorted_order(f).unwrap();
    let mut groups: Vec<BTreeSet<String>> = Vec::new();
    let mut last: Option<&ChainValue> = None;
    for id in &order {
        let v = f.value(id.as_str()).unwrap();
        let tied = last
            .map(|l| compare_values(l, v).unwrap() == CompareResult::Equal)
            .unwrap_or(false);
        if tied {
            groups.last_mut().unwrap().insert(id.to_string());
        } else {
            groups.push(BTreeSet::from([id.to_string()]));
        }
        last = Some(f.value(id.as_str()).unwrap());
    }
    let _ = ip;
    groups
}

fn set(labels: &[&str]) -> BTreeSet<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

#[test]
fn criterion_01_subset_ordering_of_three_chain() {
    let started = Instant::now();
    let poset = total_order(3);
    let mut chains: Vec<Chain> = (0u32..8)
        .map(|mask| {
            Chain::new(
                &poset,
                (1..=3).filter(|i| mask & (1 << (i - 1)) != 0).map(|i| i.to_string()),
            )
            .unwrap()
        })
        .collect();
    chains.sort_by(|x, y| match lex_compare(x, y, &poset).unwrap() {
        CompareResult::LessThan => std::cmp::Ordering::Less,
        CompareResult::GreaterThan => std::cmp::Ordering::Greater,
        CompareResult::Equal => std::cmp::Ordering::Equal,
        CompareResult::Incomparable => panic!("chains of a total order must compare"),
    });
    let got: Vec<Vec<String>> = chains
        .iter()
        .map(|c| c.members().iter().map(|m| m.to_string()).collect())
        .collect();
    let expected: Vec<Vec<String>> = [
        vec![],
        vec!["3"],
        vec!["2"],
        vec!["2", "3"],
        vec!["1"],
        vec!["1", "3"],
        vec!["1", "2"],
        vec!["1", "2", "3"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(str::to_owned).collect())
    .collect();
    assert_eq!(got, expected);
    finish(1, "lexicographic order of the 8 chains of {1<2<3}", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_dyadic_encoding_injective_and_order_preserving() {
    let started = Instant::now();
    let n = 10;
    let poset = total_order(n);
    let chains: Vec<Chain> = (0u32..(1 << n))
        .map(|mask| {
            Chain::new(
                &poset,
                (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).map(|i| i.to_string()),
            )
            .unwrap()
        })
        .collect();
    let encodings: Vec<BigRational> =
        chains.iter().map(|c| dyadic_encode(c).unwrap()).collect();
    let distinct: BTreeSet<&BigRational> = encodings.iter().collect();
    assert_eq!(distinct.len(), chains.len(), "encoding must be injective");
    for i in 0..chains.len() {
        for j in 0..chains.len() {
            let lex = lex_compare(&chains[i], &chains[j], &poset).unwrap();
            let num = match encodings[i].cmp(&encodings[j]) {
                std::cmp::Ordering::Less => CompareResult::LessThan,
                std::cmp::Ordering::Equal => CompareResult::Equal,
                std::cmp::Ordering::Greater => CompareResult::GreaterThan,
            };
            assert_eq!(lex, num, "disagreement at pair ({}, {})", i, j);
        }
    }
    finish(2, "dyadic encoding over all 2^10 chains of {1..10}", started, Duration::from_secs(30));
}

#[test]
fn criterion_03_fence_iterates_match_diagrams() {
    let started = Instant::now();
    let base = fence_lambda0();
    let poset = fence_poset();
    let tables: [&[(&str, i64)]; 4] = [
        &[("d", 1), ("e", 2), ("a", 3), ("f", 4), ("c", 5), ("b", 6)],
        &[("f", 1), ("c", 2), ("e", 3), ("b", 4), ("d", 5), ("a", 6)],
        &[("d", 1), ("e", 2), ("a", 3), ("f", 4), ("b", 5), ("c", 6)],
        &[("f", 1), ("c", 2), ("e", 3), ("b", 4), ("d", 5), ("a", 6)],
    ];
    for (k, table) in tables.iter().enumerate() {
        let n = k + 1;
        let iterated = iterate_measure(&base, n).unwrap();
        let labeling = int_function(&poset, table);
        assert!(
            are_equivalent(&iterated, &labeling).unwrap(),
            "iterate {} is not order-equivalent to the diagram labels",
            n
        );
    }
    let l1 = iterate_measure(&base, 1).unwrap();
    let l2 = iterate_measure(&base, 2).unwrap();
    let l3 = iterate_measure(&base, 3).unwrap();
    let l4 = iterate_measure(&base, 4).unwrap();
    assert!(!are_equivalent(&l1, &l3).unwrap());
    assert!(are_equivalent(&l2, &l4).unwrap());
    finish(3, "iterated measures on the six-element example", started, Duration::from_secs(1));
}

fn random_instances(count: usize) -> Vec<(Arc<Poset>, LengthFunction)> {
    let mut rng = testing::rng(0xacce97);
    (0..count)
        .map(|round| {
            let n = 1 + (round % 8);
            let poset = testing::random_poset(&mut rng, n, 0.2 + 0.05 * (round % 7) as f64);
            let f = testing::random_length_function(&mut rng, &poset);
            (poset, f)
        })
        .collect()
}

#[test]
fn criterion_04_oracle_dp_equivalence() {
    let started = Instant::now();
    let instances = random_instances(120);
    for (poset, f) in &instances {
        let m = measure_dp(f).unwrap();
        for e in poset.elements() {
            assert_eq!(
                m.value(e.as_str()).unwrap(),
                &measure_oracle(f, e.as_str()).unwrap(),
                "oracle/DP mismatch at {}",
                e
            );
        }
    }
    finish(4, "measure_dp equals measure_oracle on 120 random posets", started, Duration::from_secs(60));
}

#[test]
fn criterion_05_axioms_on_computed_measures() {
    let started = Instant::now();
    let instances = random_instances(120);
    let mut checked = Vec::new();
    for (poset, f) in &instances {
        checked.push((poset.clone(), f.clone(), measure_dp(f).unwrap()));
    }
    checked.push((
        fence_poset(),
        fence_lambda0(),
        measure_dp(&fence_lambda0()).unwrap(),
    ));
    for (poset, f, m) in &checked {
        let c_report = check_c_properties(f, m).unwrap();
        assert!(c_report.is_empty(), "C violations: {}", c_report);
        let mu: BTreeMap<String, ChainValue> = poset
            .elements()
            .iter()
            .zip(m.values())
            .map(|(e, v)| (e.to_string(), v.clone()))
            .collect();
        let m_report = check_m_axioms(f, &mu).unwrap();
        assert!(m_report.is_empty(), "M violations: {}", m_report);
        assert!(measure_is_length_function(m).unwrap());
    }
    finish(5, "(C0)-(C3), (M1)-(M3) and L-validity of every computed measure", started, Duration::from_secs(60));
}

#[test]
fn criterion_06_filtration_identity() {
    let started = Instant::now();
    // Poset fixtures.
    let mut fixtures: Vec<(LengthFunction, Measure)> = Vec::new();
    let fence = fence_lambda0();
    fixtures.push((fence.clone(), measure_dp(&fence).unwrap()));
    for (_, f) in random_instances(40) {
        let m = measure_dp(&f).unwrap();
        fixtures.push((f, m));
    }
    // Category fixtures under composition length.
    for (quiver, max_len) in [(a2(), 4), (a3([true, true]), 4), (kronecker(), 5)] {
        let ip = enumerate_ind(&quiver, Fp::new(2).unwrap(), max_len).unwrap();
        let ell1 = CategoryLengthFunction::composition_length(quiver.vertex_count());
        let base = ip.base_length_function(&ell1).unwrap();
        let m = measure_dp(&base).unwrap();
        fixtures.push((base, m));
    }
    for (f, m) in &fixtures {
        for e in f.poset().elements() {
            let filt = gr_filtration(m, e.as_str()).unwrap();
            assert_eq!(
                &measure_from_filtration(f, &filt).unwrap(),
                m.value(e.as_str()).unwrap(),
                "filtration identity fails at {}",
                e
            );
        }
    }
    finish(6, "measure_from_filtration ∘ gr_filtration reproduces the measure", started, Duration::from_secs(30));
}

#[test]
fn criterion_07_kronecker_orderings() {
    let started = Instant::now();
    let ip = enumerate_ind(&kronecker(), Fp::new(2).unwrap(), 5).unwrap();
    let ell1 = CategoryLengthFunction::composition_length(2);
    let base = ip.base_length_function(&ell1).unwrap();

    let r1 = set(&["R1(0:1)", "R1(1:0)", "R1(1:1)"]);
    let r2 = set(&["R2(0:1)", "R2(1:0)", "R2(1:1)"]);
    // Over F_2 the projective line has a degree-2 closed point as well; its
    // quasi-simple regular lives in dimension (2,2) and joins the truncation
    // at length 4. It slots between P3 and the rational R1 tie class.
    let fat = set(&["R1(t^2+t+1)"]);

    // ℓ*: Q1 = P1 < P2 < P3 < (regulars) < Q3 < Q2, rational R_n classes tied.
    let level1 = measure_dp(&base).unwrap().to_length_function().unwrap();
    let groups = value_groups(&ip, &level1);
    assert_eq!(
        groups,
        vec![
            set(&["P1", "Q1"]),
            set(&["P2"]),
            set(&["P3"]),
            fat.clone(),
            r1.clone(),
            r2.clone(),
            set(&["Q3"]),
            set(&["Q2"]),
        ],
        "level-1 ordering"
    );
    // The stated clauses, checked directly on the class families: the
    // P1/Q1 tie, ascending P's, every P below every regular, R1 < R2,
    // every regular below every enumerated Q, and Q3 < Q2.
    let rank = |label: &str| {
        groups
            .iter()
            .position(|g| g.contains(label))
            .unwrap_or_else(|| panic!("missing class {}", label))
    };
    assert_eq!(rank("P1"), rank("Q1"));
    assert!(rank("P1") < rank("P2") && rank("P2") < rank("P3"));
    let regulars = [
        "R1(0:1)",
        "R1(1:0)",
        "R1(1:1)",
        "R2(0:1)",
        "R2(1:0)",
        "R2(1:1)",
        "R1(t^2+t+1)",
    ];
    for p in ["P1", "P2", "P3"] {
        for r in regulars {
            assert!(rank(p) < rank(r), "{} not below {}", p, r);
        }
    }
    assert!(rank("R1(0:1)") < rank("R2(0:1)"));
    for r in regulars {
        for q in ["Q2", "Q3"] {
            assert!(rank(r) < rank(q), "{} not below {}", r, q);
        }
    }
    assert!(rank("Q3") < rank("Q2"));

    // (ℓ*)*: Q1 = P1 < R1 < Q2 < P2 < R2 < … with P3 now at the top.
    let level2 = iterate_measure(&base, 2).unwrap();
    let groups2 = value_groups(&ip, &level2);
    assert_eq!(
        groups2,
        vec![
            set(&["P1", "Q1"]),
            r1,
            set(&["Q2"]),
            set(&["P2"]),
            r2,
            fat,
            set(&["Q3"]),
            set(&["P3"]),
        ],
        "level-2 ordering"
    );
    // The demanded prefix P1 < R1 < Q2 < P2 < R2 is the head of that order.

    // ((ℓ*)*)* is order-equivalent to ℓ* on the truncation.
    let level3 = iterate_measure(&base, 3).unwrap();
    assert!(are_equivalent(&level3, &level1).unwrap());
    finish(7, "Kronecker ℓ*, (ℓ*)* and ((ℓ*)*)* orderings", started, Duration::from_secs(120));
}

#[test]
fn criterion_08_main_property_zero_violations() {
    let started = Instant::now();
    let mut rng = testing::rng(0x6ab1e1);
    let quivers: Vec<(&str, Arc<Quiver>)> = vec![
        ("A2", a2()),
        ("A3 linear", a3([true, true])),
        ("A3 alternating", a3([true, false])),
        ("Kronecker", kronecker()),
    ];
    for (name, quiver) in &quivers {
        let fixture_started = Instant::now();
        for p in [2u8, 3] {
            let ip = enumerate_ind(quiver, Fp::new(p).unwrap(), 5).unwrap();
            let nv = quiver.vertex_count();
            let mut ells = vec![CategoryLengthFunction::composition_length(nv)];
            for _ in 0..2 {
                ells.push(
                    CategoryLengthFunction::new(testing::random_positive_rationals(
                        &mut rng, nv,
                    ))
                    .unwrap(),
                );
            }
            for ell in &ells {
                let report = check_main_property(&ip, ell, 2).unwrap();
                assert!(
                    report.is_empty(),
                    "{} over F_{}: {}",
                    name,
                    p,
                    report
                );
                assert!(report.checked_triples > 0);
            }
        }
        assert!(
            fixture_started.elapsed() < Duration::from_secs(120),
            "fixture {} exceeded its per-fixture budget",
            name
        );
    }
    finish(8, "Gabriel's main property on A2, A3 (both orientations), Kronecker over F2 and F3", started, Duration::from_secs(480));
}

#[test]
fn criterion_09_injective_and_simple_detection() {
    let started = Instant::now();
    let f2 = Fp::new(2).unwrap();
    let fixtures: Vec<(Arc<Quiver>, usize)> = vec![
        (Quiver::new(["1"], []).unwrap(), 2),
        (a2(), 3),
        (a3([true, true]), 4),
        (a3([true, false]), 4),
        (a3([false, true]), 4),
        (a3([false, false]), 4),
    ];
    for (quiver, max_len) in &fixtures {
        let ip = enumerate_ind(quiver, f2, *max_len).unwrap();
        assert!(!ip.is_truncated());
        let detected: BTreeSet<String> =
            detect_injectives(&ip).unwrap().detected.into_iter().collect();
        let oracle: BTreeSet<String> = oracle_injectives(quiver, f2, *max_len)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(detected, oracle, "injectives on {:?}", quiver.arrows());
        let simples: BTreeSet<String> =
            detect_simples(&ip).unwrap().detected.into_iter().collect();
        let length_one: BTreeSet<String> = ip
            .classes()
            .iter()
            .filter(|c| c.length == 1)
            .map(|c| c.label.clone())
            .collect();
        assert_eq!(simples, length_one, "simples on {:?}", quiver.arrows());
    }
    finish(9, "detect_injectives = oracle and detect_simples = length-1 classes", started, Duration::from_secs(60));
}

#[test]
fn criterion_10_socle_lemma() {
    let started = Instant::now();
    let f2 = Fp::new(2).unwrap();
    let rat = |n: i64| BigRational::from_integer(n.into());
    let cases: Vec<(Arc<Quiver>, usize, Vec<BigRational>)> = vec![
        (a2(), 4, vec![rat(2), rat(1)]),
        (a2(), 4, vec![rat(1), rat(3)]),
        (a3([true, true]), 4, vec![rat(3), rat(2), rat(1)]),
        (a3([true, false]), 4, vec![rat(1), rat(2), rat(4)]),
        (kronecker(), 5, vec![rat(2), rat(1)]),
    ];
    for (quiver, max_len, values) in cases {
        let ip = enumerate_ind(&quiver, f2, max_len).unwrap();
        let ell = CategoryLengthFunction::new(values).unwrap();
        let report = check_socle_lemma(&ip, &ell).unwrap();
        assert!(report.is_empty(), "socle lemma violations: {}", report);
    }
    finish(10, "socle comparison lemma on all fixtures", started, Duration::from_secs(30));
}
