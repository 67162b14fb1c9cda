//! Relative normal forms: syllables, relative length and parabolic
//! membership in a free product.
//!
//! cargo run --example relative_syllables

use relconj::groups::catalog::{modular_group, z_star_z2};
use relconj::relative::{parabolic_membership, relative_length, RelativeWord};

fn main() {
    let g = z_star_z2();
    for w in ["u u v w u^-1", "v w^-1 v", "", "u v u^-1 v^-1"] {
        let e = g.parse_elem(w).unwrap();
        let rw = RelativeWord::of(&g, &e).unwrap();
        println!(
            "{w:<16} {:<28} relative length {}, X-length {}, membership {:?}",
            rw.display(&g),
            relative_length(&g, &e).unwrap(),
            g.x_length(&e),
            parabolic_membership(&g, &e).unwrap()
        );
    }

    // replacing the middle syllable by the identity merges its neighbours
    let m = modular_group();
    let x = RelativeWord::of(&m, &m.parse_elem("t s t").unwrap()).unwrap();
    let s_identity = m.factors()[0].identity();
    let y = x.splice(&m, 1, &s_identity).unwrap();
    println!("splice identity at 1: {}  ->  {}", x.display(&m), y.display(&m));
}
