//! Property tests over randomly grown forests and relabelings.

use proptest::prelude::*;

use forest_specht::canon;
use forest_specht::diagram::{graph_to_diagram, Diagram};
use forest_specht::enumerate;
use forest_specht::generate::{self, SplitMix64};
use forest_specht::graph::{find_apm, is_almost_perfect, is_special, BipartiteGraph};
use forest_specht::symfunc::{hpoly_mul, s_forest, HPoly};
use forest_specht::volume::{v_apm, v_leaf};

fn forest_strategy(max_edges: u32) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_edges, any::<u64>()).prop_map(|(n, seed)| generate::random_forest(n, seed))
}

/// Random vertex relabeling plus edge reordering, preserving the graph's
/// isomorphism class.
fn relabel(g: &BipartiteGraph, seed: u64) -> BipartiteGraph {
    let mut rng = SplitMix64::new(seed);
    let mut ids: Vec<u32> = g.vertices().iter().map(|&(v, _)| v).collect();
    // Fisher-Yates with the deterministic stream.
    for i in (1..ids.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        ids.swap(i, j);
    }
    let fresh: std::collections::BTreeMap<u32, u32> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, &(v, _))| (v, 1000 + ids[k % ids.len()] + k as u32 * 101))
        .collect();
    let mut vertices: Vec<_> = g
        .vertices()
        .iter()
        .map(|&(v, c)| (fresh[&v], c))
        .collect();
    vertices.reverse();
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(a, b)| if rng.below(2) == 0 { (fresh[&a], fresh[&b]) } else { (fresh[&b], fresh[&a]) })
        .collect();
    edges.reverse();
    BipartiteGraph::new(vertices, edges).expect("relabeling preserves validity")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_json_round_trips_byte_exactly(g in forest_strategy(9)) {
        let text = g.to_json_string();
        let back = BipartiteGraph::from_json_str(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn diagram_ascii_round_trips(g in forest_strategy(8)) {
        let d = graph_to_diagram(&g);
        let text = d.to_ascii();
        let back = Diagram::parse_ascii(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_ascii(), text);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(g in forest_strategy(8), seed in any::<u64>()) {
        let h = relabel(&g, seed);
        prop_assert!(canon::isomorphic(&g, &h));
    }

    #[test]
    fn apm_construction_is_almost_perfect(g in forest_strategy(9)) {
        let m = find_apm(&g).unwrap();
        prop_assert!(is_almost_perfect(&g, &m));
    }

    #[test]
    fn forest_matchings_are_special(g in forest_strategy(7), pick in any::<u64>()) {
        let ms = enumerate::all_matchings(&g);
        let m = &ms[(pick % ms.len() as u64) as usize];
        prop_assert!(is_special(&g, m));
    }

    #[test]
    fn volume_routes_agree(g in forest_strategy(8)) {
        prop_assert_eq!(v_apm(&g).unwrap(), v_leaf(&g).unwrap());
    }

    #[test]
    fn s_forest_is_homogeneous_of_degree_n(g in forest_strategy(7)) {
        let s = s_forest(&g).unwrap();
        prop_assert_eq!(s.homogeneous_degree(), Some(g.n_edges() as u32));
    }

    #[test]
    fn hpoly_multiplication_is_commutative_and_associative(
        a in (1u32..=4, any::<u64>()),
        b in (1u32..=4, any::<u64>()),
        c in (1u32..=4, any::<u64>()),
    ) {
        let build = |(n, seed): (u32, u64)| -> HPoly {
            s_forest(&generate::random_forest(n, seed)).unwrap()
        };
        let (pa, pb, pc) = (build(a), build(b), build(c));
        prop_assert_eq!(hpoly_mul(&pa, &pb), hpoly_mul(&pb, &pa));
        prop_assert_eq!(
            hpoly_mul(&hpoly_mul(&pa, &pb), &pc),
            hpoly_mul(&pa, &hpoly_mul(&pb, &pc))
        );
    }
}
