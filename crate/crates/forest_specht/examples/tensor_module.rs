//! Spans the tensor-space module of a diagram for small variable counts:
//! its dimension matches the restricted lattice count and the principal
//! specialization, and its monomial character matches the Schur expansion.
//!
//! Run with: `cargo run --example tensor_module`

use forest_specht::diagram::{graph_to_diagram, Diagram};
use forest_specht::generate;
use forest_specht::specht::schur_tensor_span;
use forest_specht::symfunc::{principal_specialize, s_forest, schur_coeffs, schur_monomial_expansion};
use forest_specht::volume::m_count;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A single column with one variable dies under the antisymmetrizer.
    let column = Diagram::new([(1, 1), (2, 1)])?;
    let rep = schur_tensor_span(&column, 1)?;
    println!("column of 2 with N = 1: dimension {}", rep.dimension);

    for (name, g) in [
        ("path with 3 edges", generate::path(3)),
        ("path with 4 edges", generate::path(4)),
        ("random forest, 5 edges, seed 11", generate::random_forest(5, 11)),
    ] {
        let d = graph_to_diagram(&g);
        let s = s_forest(&g)?;
        println!("\n{name}");
        for n_vars in 1..=3u32 {
            let rep = schur_tensor_span(&d, n_vars)?;
            assert_eq!(rep.dimension, m_count(&g, n_vars)?);
            assert_eq!(rep.dimension, principal_specialize(&s, n_vars)?);
            println!("  N = {n_vars}: dimension {}", rep.dimension);
            // The per-content ranks agree with the Schur expansion's
            // monomial coefficients.
            let expansion = schur_monomial_expansion(&schur_coeffs(&g)?, n_vars)?;
            assert_eq!(rep.character, expansion);
            for (content, mult) in &rep.character {
                println!("    content {content:?}: {mult}");
            }
        }
    }
    Ok(())
}
