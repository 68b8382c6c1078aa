//! The pendant-edge recurrence in action: the three related forests, the
//! additivity of volume and of the symmetric function, and the universal
//! evaluation of the same rules in other rings.
//!
//! Run with: `cargo run --example leaf_recurrence`

use num_bigint::BigInt;

use forest_specht::generate;
use forest_specht::graph::leaf_step;
use forest_specht::symfunc::{hpoly_specialize, leaf_eval, s_forest, IntegersMod, Ring};
use forest_specht::volume::v_apm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One explicit rewrite step: a black-centered star rooted at a leaf
    // splits into two disjoint edges and a white star.
    let black_star = generate::star(2, forest_specht::graph::Color::Black);
    let root = black_star.canonical_root().unwrap();
    let step = leaf_step(&black_star, root)?;
    println!(
        "black 2-star: H has {} components, Gp is a star centered at {:?}",
        step.h.components().len(),
        step.gp.star_center()
    );

    // Random triples satisfy the two additivity laws.
    for seed in 0..5u64 {
        let t = generate::random_leaf_triple(3, seed);
        let (vg, v1, v2) = (v_apm(&t.g)?, v_apm(&t.g1)?, v_apm(&t.g2)?);
        assert_eq!(vg, &v1 + &v2);
        println!("seed {seed}: V = {vg} = {v1} + {v2}");
        let sg = s_forest(&t.g)?;
        assert_eq!(sg, s_forest(&t.g1)?.add(&s_forest(&t.g2)?));
    }

    // Any assignment on white stars extends uniquely to all forests by
    // the product rule plus the recurrence, and the extension factors
    // through the symmetric function.
    let ring = IntegersMod(1_000_003);
    let star_value = |r: &IntegersMod, n: u32| r.from_bigint(&BigInt::from(2 * n + 1));
    for seed in 0..5u64 {
        let g = generate::random_forest(5, seed);
        let direct = leaf_eval(&ring, &g, &star_value)?;
        let via_s = hpoly_specialize(&ring, &s_forest(&g)?, &star_value);
        assert_eq!(direct, via_s);
        println!("seed {seed}: universal evaluation = {direct} both ways");
    }
    Ok(())
}
