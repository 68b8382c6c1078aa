//! Computes the normalized matching-polytope volume of several forests by
//! all four routes and shows they agree; also shows the four-cycle, where
//! the volume and the Specht dimension differ.
//!
//! Run with: `cargo run --example volume_routes`

use forest_specht::diagram::graph_to_diagram;
use forest_specht::generate;
use forest_specht::graph::Color;
use forest_specht::specht::specht_dim;
use forest_specht::volume::{count_standard_labelings, v_apm, v_ehrhart, v_leaf};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = vec![
        ("star T_5 (white center)", generate::star(5, Color::White)),
        ("star with black center", generate::star(5, Color::Black)),
        ("path with 4 edges", generate::path(4)),
        ("path with 6 edges", generate::path(6)),
        ("caterpillar spine 3, one leg each", generate::caterpillar(3, 1)),
        ("random forest, 6 edges, seed 42", generate::random_forest(6, 42)),
    ];

    println!(
        "{:<34} {:>6} {:>6} {:>8} {:>10}",
        "forest", "apm", "leaf", "ehrhart", "labelings"
    );
    for (name, g) in cases {
        let apm = v_apm(&g)?;
        let leaf = v_leaf(&g)?;
        let ehrhart = v_ehrhart(&g)?;
        let labelings = count_standard_labelings(&g)?;
        assert_eq!(apm, leaf);
        assert_eq!(apm, ehrhart);
        assert_eq!(apm, labelings);
        println!("{name:<34} {apm:>6} {leaf:>6} {ehrhart:>8} {labelings:>10}");
    }

    // Cycles are outside the forest theory: the polytope volume and the
    // module dimension genuinely differ on the four-cycle.
    let c4 = generate::cycle4();
    let volume = v_ehrhart(&c4)?;
    let dim = specht_dim(&graph_to_diagram(&c4))?;
    println!("\nfour-cycle: volume = {volume}, module dimension = {dim}");
    assert_ne!(volume, dim);
    Ok(())
}
