//! Builds Specht modules of diagrams explicitly and reads off dimension,
//! character, and irreducible decomposition; checks the dimension against
//! the matching-polytope volume on forests.
//!
//! Run with: `cargo run --example specht_module`

use forest_specht::diagram::{graph_to_diagram, Diagram};
use forest_specht::generate;
use forest_specht::specht::{specht_report, symmetrizer};
use forest_specht::volume::v_apm;
use forest_specht::Caps;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();

    // The symmetrizer itself, on a small diagram: the full 2x2 square has
    // |C| = |R| = 4, so 16 signed terms.
    let square = Diagram::new([(1, 1), (1, 2), (2, 1), (2, 2)])?;
    let e = symmetrizer(&square)?;
    println!("2x2 square symmetrizer has {} group-algebra terms", e.len());

    for (name, g) in [
        ("path with 3 edges", generate::path(3)),
        ("path with 5 edges", generate::path(5)),
        ("caterpillar spine 2, one leg each", generate::caterpillar(2, 1)),
        ("random forest, 6 edges, seed 3", generate::random_forest(6, 3)),
    ] {
        let d = graph_to_diagram(&g);
        let report = specht_report(&d, &caps)?;
        println!("\n{name}: diagram\n{}", indent(&d.to_ascii()));
        println!("  dimension = {}", report.dimension);
        assert_eq!(report.dimension, v_apm(&g)?);
        println!("  (equals the normalized polytope volume)");
        print!("  decomposition:");
        for (lambda, c) in report.decomposition.terms() {
            print!(" {c}*S{lambda}");
        }
        println!();
        println!("  character by cycle type:");
        for (rho, value) in report.character.values() {
            println!("    {rho} -> {value}");
        }
    }

    // On the four-cycle the module is a single irreducible of dimension 2.
    let c4 = graph_to_diagram(&generate::cycle4());
    let report = specht_report(&c4, &caps)?;
    println!("\nfour-cycle: dimension = {}", report.dimension);
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
