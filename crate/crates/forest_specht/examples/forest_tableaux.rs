//! Horizontal strips and tableaux of forest diagrams: the strip poset of
//! a diagram, semistandard enumeration, standard tableaux, and the
//! generating function.
//!
//! Run with: `cargo run --example forest_tableaux`

use forest_specht::diagram::graph_to_diagram;
use forest_specht::generate;
use forest_specht::tableaux::{
    canonical_apm_transversal, horizontal_strips, ssyt_enumerate, ssyt_generating_function,
    standard_tableaux,
};
use forest_specht::volume::v_apm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate::path(3);
    let d = graph_to_diagram(&g);
    println!("path with 3 edges, diagram:\n{}", d.to_ascii());

    let u = canonical_apm_transversal(&d)?;
    println!("canonical matching transversal: {:?}", u.boxes());
    println!("horizontal strips:");
    for strip in horizontal_strips(&d, &u)? {
        println!("  {:?}", strip.iter().collect::<Vec<_>>());
    }

    for n_labels in 1..=3 {
        let tabs = ssyt_enumerate(&d, n_labels)?;
        println!("\nsemistandard tableaux with labels <= {n_labels}: {}", tabs.len());
        for t in &tabs {
            println!("  {t:?}");
        }
    }

    println!("\ngenerating function at 3 variables:");
    for (content, count) in ssyt_generating_function(&d, 3)? {
        println!("  x^{content:?}: {count}");
    }

    // Standard tableau counts equal the polytope volume.
    for (name, g) in [
        ("star T_4", generate::star(4, forest_specht::graph::Color::White)),
        ("path with 4 edges", generate::path(4)),
        ("random forest, 5 edges, seed 5", generate::random_forest(5, 5)),
    ] {
        let d = graph_to_diagram(&g);
        let count = standard_tableaux(&d)?.len();
        let volume = v_apm(&g)?;
        println!("\n{name}: {count} standard tableaux, volume {volume}");
        assert_eq!(num_bigint::BigInt::from(count), volume);
    }
    Ok(())
}
