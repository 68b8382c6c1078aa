//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its instance counts. All comparisons are exact.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use forest_specht::diagram::{graph_to_diagram, split_diagram, Diagram, Transversal};
use forest_specht::enumerate;
use forest_specht::generate::{self, SplitMix64};
use forest_specht::graph::Color;
use forest_specht::partition::{factorial, Partition};
use forest_specht::specht;
use forest_specht::symfunc::{
    exp_specialize, principal_specialize, s_forest, schur_coeffs, schur_monomial_expansion,
};
use forest_specht::tableaux;
use forest_specht::volume::{
    count_standard_labelings, m_count, m_count_diagram, v_apm, v_ehrhart_with, v_leaf,
};
use forest_specht::Caps;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn wide_caps() -> Caps {
    Caps {
        specht_n_max: 10,
        ehrhart_n_max: 10,
        ..Caps::default()
    }
}

#[test]
fn criterion_1_pinned_numbers() {
    let caps = wide_caps();
    // V(T_n) = 1 for n = 1..=10 on all four routes.
    for n in 1..=10u32 {
        let start = Instant::now();
        let g = generate::star(n, Color::White);
        assert_eq!(v_apm(&g).unwrap(), big(1), "v_apm T_{n}");
        assert_eq!(v_leaf(&g).unwrap(), big(1), "v_leaf T_{n}");
        assert_eq!(v_ehrhart_with(&g, &caps).unwrap(), big(1), "v_ehrhart T_{n}");
        assert_eq!(
            count_standard_labelings(&g).unwrap(),
            big(1),
            "labelings T_{n}"
        );
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs_f64() < 1.0, "T_{n} took {elapsed:?}");
    }
    // The four-cycle: volume 4, Specht dimension 2.
    let c4 = generate::cycle4();
    let start = Instant::now();
    assert_eq!(v_ehrhart_with(&c4, &caps).unwrap(), big(4));
    assert_eq!(
        specht::specht_dim_with(&graph_to_diagram(&c4), &caps).unwrap(),
        big(2)
    );
    assert!(start.elapsed().as_secs_f64() < 1.0);
    // A row of n boxes carries the trivial representation.
    for n in 1..=10u32 {
        let start = Instant::now();
        let row = Diagram::new((1..=n).map(|c| (1, c))).unwrap();
        assert_eq!(specht::specht_dim_with(&row, &caps).unwrap(), big(1));
        assert!(start.elapsed().as_secs_f64() < 1.0, "row of {n}");
    }
    println!("criterion 1 (pinned numbers): PASS");
}

#[test]
fn criterion_2_theorem_main_at_desk_scale() {
    let caps = Caps::default();
    let start = Instant::now();
    let mut instances = 0usize;
    for g in enumerate::forests_up_to(6) {
        let v = v_apm(&g).unwrap();
        assert_eq!(v_leaf(&g).unwrap(), v, "{}", g.to_json_string());
        assert_eq!(
            count_standard_labelings(&g).unwrap(),
            v,
            "{}",
            g.to_json_string()
        );
        assert_eq!(
            specht::specht_dim_with(&graph_to_diagram(&g), &caps).unwrap(),
            v,
            "{}",
            g.to_json_string()
        );
        instances += 1;
    }
    let mut rng = SplitMix64::new(0x5eed2);
    for _ in 0..50 {
        let g = generate::random_forest(7, rng.next_u64());
        let v = v_apm(&g).unwrap();
        assert_eq!(v_leaf(&g).unwrap(), v, "{}", g.to_json_string());
        assert_eq!(
            count_standard_labelings(&g).unwrap(),
            v,
            "{}",
            g.to_json_string()
        );
        assert_eq!(
            specht::specht_dim_with(&graph_to_diagram(&g), &caps).unwrap(),
            v,
            "{}",
            g.to_json_string()
        );
        instances += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "criterion 2 exceeded ten minutes: {elapsed:?}"
    );
    println!(
        "criterion 2 (theorem main, {instances} forests, {:.1?}): PASS",
        elapsed
    );
}

#[test]
fn criterion_3_ehrhart_oracle_equivalence() {
    let caps = Caps::default();
    let mut instances = 0usize;
    for g in enumerate::forests_up_to(6) {
        assert_eq!(
            v_ehrhart_with(&g, &caps).unwrap(),
            v_apm(&g).unwrap(),
            "{}",
            g.to_json_string()
        );
        instances += 1;
    }
    println!("criterion 3 (Ehrhart oracle, {instances} forests): PASS");
}

#[test]
fn criterion_4_symmetric_function_identities() {
    let caps = Caps::default();
    let mut instances = 0usize;
    for g in enumerate::forests_up_to(6) {
        let name = g.to_json_string();
        let v = v_apm(&g).unwrap();
        let s = s_forest(&g).unwrap();
        let n = g.n_edges() as u32;
        // n! * exponential specialization recovers the volume.
        let exp = BigRational::from_integer(factorial(n)) * exp_specialize(&s);
        assert_eq!(exp, BigRational::from_integer(v.clone()), "{name}");
        // Hook-length dimension sum recovers the volume.
        let se = schur_coeffs(&g).unwrap();
        assert_eq!(se.dimension(), v, "{name}");
        // Nonnegativity and agreement with the explicit module.
        assert!(se.is_nonnegative(), "{name}");
        let module = specht::specht_decompose_with(&graph_to_diagram(&g), &caps).unwrap();
        assert_eq!(se, module, "{name}");
        instances += 1;
    }
    println!("criterion 4 (symmetric function identities, {instances} forests): PASS");
}

#[test]
fn criterion_5_specialization_and_ssyt_web() {
    let caps = Caps::default();
    let mut instances = 0usize;
    for g in enumerate::forests_up_to(5) {
        let name = g.to_json_string();
        let d = graph_to_diagram(&g);
        let s = s_forest(&g).unwrap();
        let se = schur_coeffs(&g).unwrap();
        for n_vars in 1..=3u32 {
            let m = m_count(&g, n_vars).unwrap();
            assert_eq!(
                principal_specialize(&s, n_vars).unwrap(),
                m,
                "{name} N={n_vars}"
            );
            let ssyt = tableaux::ssyt_enumerate(&d, n_vars).unwrap();
            assert_eq!(BigInt::from(ssyt.len()), m, "{name} N={n_vars}");
            let tensor = specht::schur_tensor_span_with(&d, n_vars, &caps).unwrap();
            assert_eq!(tensor.dimension, m, "{name} N={n_vars}");
            let gf = tableaux::ssyt_generating_function(&d, n_vars).unwrap();
            let expansion = schur_monomial_expansion(&se, n_vars).unwrap();
            assert_eq!(gf, expansion, "{name} N={n_vars}");
            instances += 1;
        }
    }
    println!("criterion 5 (specialization/SSYT web, {instances} instances): PASS");
}

#[test]
fn criterion_6_recurrence_property_suites() {
    let caps = Caps::default();
    // 100 leaf-recurrence triples: volume, symmetric function, and
    // decomposition additivity.
    for i in 0..100u64 {
        let t = generate::random_leaf_triple(3, 0xabc ^ i);
        let name = t.g.to_json_string();
        assert_eq!(
            v_apm(&t.g).unwrap(),
            v_apm(&t.g1).unwrap() + v_apm(&t.g2).unwrap(),
            "volume additivity {name}"
        );
        assert_eq!(
            s_forest(&t.g).unwrap(),
            s_forest(&t.g1).unwrap().add(&s_forest(&t.g2).unwrap()),
            "s additivity {name}"
        );
        let dg = specht::specht_decompose_with(&graph_to_diagram(&t.g), &caps).unwrap();
        let d1 = specht::specht_decompose_with(&graph_to_diagram(&t.g1), &caps).unwrap();
        let d2 = specht::specht_decompose_with(&graph_to_diagram(&t.g2), &caps).unwrap();
        assert_eq!(dg, d1.add(&d2), "decomposition additivity {name}");
    }
    // 100 random almost-perfect-matching instances: deletion recursion
    // and the corner-branching multiset identity.
    let mut rng = SplitMix64::new(0xdef);
    for i in 0..100u64 {
        let g = generate::random_forest(2 + (rng.below(5)) as u32, rng.next_u64());
        let apms = enumerate::all_apms(&g);
        let m = &apms[rng.below(apms.len() as u64) as usize];
        let name = format!("#{i} {}", g.to_json_string());
        let v: BigInt = m
            .edge_ids()
            .iter()
            .map(|&e| v_apm(&g.delete_edge(e)).unwrap())
            .sum();
        assert_eq!(v_apm(&g).unwrap(), v, "apm recursion {name}");

        let restriction = specht::specht_decompose_with(&graph_to_diagram(&g), &caps)
            .unwrap()
            .restriction_multiset();
        let mut branched: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for &e in m.edge_ids() {
            let sub =
                specht::specht_decompose_with(&graph_to_diagram(&g.delete_edge(e)), &caps)
                    .unwrap();
            for (lam, c) in sub.terms() {
                *branched.entry(lam.clone()).or_insert_with(BigInt::zero) += c;
            }
        }
        branched.retain(|_, v| !v.is_zero());
        assert_eq!(restriction, branched, "corner branching {name}");
    }
    // Strip identity m_D(N) = sum over strips of m_{D minus strip}(N-1).
    for g in enumerate::forests_up_to(6) {
        let d = graph_to_diagram(&g);
        for n_vars in 2..=3u32 {
            let left = m_count_diagram(&d, n_vars).unwrap();
            let mut right = BigInt::zero();
            for strip in tableaux::canonical_strips(&d).unwrap() {
                let removed = strip.iter().copied().collect();
                right += m_count_diagram(&d.without(&removed), n_vars - 1).unwrap();
            }
            assert_eq!(left, right, "{} N={n_vars}", g.to_json_string());
        }
    }
    println!("criterion 6 (recurrence property suites): PASS");
}

#[test]
fn criterion_7_choice_independence() {
    for g in enumerate::forests_up_to(5) {
        let name = g.to_json_string();
        let labelings = count_standard_labelings(&g).unwrap();
        for m in enumerate::all_apms(&g) {
            let via: BigInt = m
                .edge_ids()
                .iter()
                .map(|&e| count_standard_labelings(&g.delete_edge(e)).unwrap())
                .sum();
            assert_eq!(via, labelings, "labelings via {:?} on {name}", m.edge_ids());
        }
        let (d, boxes) = forest_specht::diagram::graph_to_diagram_with_edges(&g);
        for n_vars in 1..=3u32 {
            let reference = BigInt::from(tableaux::ssyt_enumerate(&d, n_vars).unwrap().len());
            for m in enumerate::all_apms(&g) {
                let t = Transversal::new(&d, m.edge_ids().iter().map(|&e| boxes[e])).unwrap();
                let count =
                    tableaux::ssyt_count_with_top_transversal(&d, n_vars, &t).unwrap();
                assert_eq!(
                    count,
                    reference,
                    "ssyt via {:?} on {name} N={n_vars}",
                    m.edge_ids()
                );
            }
        }
    }
    println!("criterion 7 (choice independence): PASS");
}

#[test]
fn criterion_8_inequality_sandwiches() {
    let caps = Caps::default();
    let mut restrict_instances = 0usize;
    let mut split_instances = 0usize;
    for g in enumerate::bipartite_graphs_up_to(5) {
        let d = graph_to_diagram(&g);
        let dim = specht::specht_dim_with(&d, &caps).unwrap();
        for t in enumerate::all_special_transversals(&d) {
            let sum: BigInt = t
                .boxes()
                .iter()
                .map(|&b| specht::specht_dim_with(&d.without_box(b), &caps).unwrap())
                .sum();
            assert!(
                dim >= sum,
                "restriction bound fails on {:?} with {:?}",
                d.box_list(),
                t.boxes()
            );
            restrict_instances += 1;
        }
        let boxes = d.box_list();
        for &b1 in &boxes {
            for &b2 in &boxes {
                if b1 >= b2 {
                    continue;
                }
                let Ok((da, db)) = split_diagram(&d, b1, b2) else {
                    continue;
                };
                let sum = specht::specht_dim_with(&da, &caps).unwrap()
                    + specht::specht_dim_with(&db, &caps).unwrap();
                assert!(
                    dim >= sum,
                    "split bound fails on {:?} at {b1:?},{b2:?}",
                    d.box_list()
                );
                split_instances += 1;
            }
        }
    }
    println!(
        "criterion 8 (inequality sandwiches, {restrict_instances} restrictions, {split_instances} splits): PASS"
    );
}
