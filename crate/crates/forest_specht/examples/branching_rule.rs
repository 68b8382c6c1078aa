//! The restriction branching rule for forests: deleting the edges of an
//! almost perfect matching plays the role that corner boxes play for
//! partition shapes.
//!
//! Run with: `cargo run --example branching_rule`

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use forest_specht::diagram::graph_to_diagram;
use forest_specht::graph::find_apm;
use forest_specht::partition::Partition;
use forest_specht::specht::specht_decompose;
use forest_specht::{enumerate, generate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("path with 4 edges", generate::path(4)),
        ("caterpillar spine 2, one leg each", generate::caterpillar(2, 1)),
        ("random forest, 5 edges, seed 9", generate::random_forest(5, 9)),
    ] {
        let d = graph_to_diagram(&g);
        let decomposition = specht_decompose(&d)?;
        let m = find_apm(&g)?;
        println!("{name}");
        print!("  module:");
        for (lambda, c) in decomposition.terms() {
            print!(" {c}*S{lambda}");
        }
        println!("\n  matching edges: {:?}", m.edge_ids());

        // Restrict by removing one corner box from every constituent...
        let restricted = decomposition.restriction_multiset();
        // ...or by deleting one matching edge at a time.
        let mut branched: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for &e in m.edge_ids() {
            let sub = specht_decompose(&graph_to_diagram(&g.delete_edge(e)))?;
            for (lambda, c) in sub.terms() {
                *branched.entry(lambda.clone()).or_insert_with(BigInt::zero) += c;
            }
        }
        branched.retain(|_, v| !v.is_zero());
        assert_eq!(restricted, branched);
        print!("  restriction:");
        for (lambda, c) in &restricted {
            print!(" {c}*S{lambda}");
        }
        println!("\n  (identical whichever almost perfect matching is used)");
        for m in enumerate::all_apms(&g) {
            let mut alt: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for &e in m.edge_ids() {
                let sub = specht_decompose(&graph_to_diagram(&g.delete_edge(e)))?;
                for (lambda, c) in sub.terms() {
                    *alt.entry(lambda.clone()).or_insert_with(BigInt::zero) += c;
                }
            }
            alt.retain(|_, v| !v.is_zero());
            assert_eq!(alt, restricted);
        }
        println!();
    }
    Ok(())
}
