//! The symmetric function of a forest: complete homogeneous expansion,
//! Schur expansion, and the two specializations that recover the volume
//! and the restricted lattice count.
//!
//! Run with: `cargo run --example schur_function`

use num_rational::BigRational;

use forest_specht::generate;
use forest_specht::graph::Color;
use forest_specht::partition::factorial;
use forest_specht::symfunc::{
    exp_specialize, principal_specialize, s_forest, schur_coeffs,
};
use forest_specht::volume::{m_count, v_apm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = vec![
        ("white star T_3", generate::star(3, Color::White)),
        ("black-centered star, 3 edges", generate::star(3, Color::Black)),
        ("path with 3 edges", generate::path(3)),
        ("path with 5 edges", generate::path(5)),
        ("random forest, 5 edges, seed 7", generate::random_forest(5, 7)),
    ];

    for (name, g) in cases {
        let s = s_forest(&g)?;
        let se = schur_coeffs(&g)?;
        println!("{name}");
        print!("  h basis:");
        for (mu, c) in s.terms() {
            print!(" {c}*h{mu}");
        }
        println!();
        print!("  Schur basis:");
        for (lambda, c) in se.terms() {
            print!(" {c}*s{lambda}");
        }
        println!();

        // n! times the exponential specialization is the volume.
        let n = g.n_edges() as u32;
        let vol = BigRational::from_integer(factorial(n)) * exp_specialize(&s);
        assert_eq!(vol, BigRational::from_integer(v_apm(&g)?));
        println!("  n! * exponential specialization = {vol} = volume");

        // The principal specialization counts restricted lattice points.
        for n_vars in 1..=3 {
            let p = principal_specialize(&s, n_vars)?;
            assert_eq!(p, m_count(&g, n_vars)?);
            println!("  at {n_vars} ones: {p} (= restricted lattice count)");
        }
        println!();
    }
    Ok(())
}
