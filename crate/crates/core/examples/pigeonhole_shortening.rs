//! Shortening a conjugator by cutting between repeated trace tuples.
//!
//! cargo run --example pigeonhole_shortening

use relconj::gcp::{shorten_to_fixpoint, tuple_trace, ConjugacyInstance};
use relconj::groups::catalog::free_as_product;
use relconj::relative::RelativeWord;

fn main() {
    let g = free_as_product(&["p", "q"]).unwrap();
    let x = g.parse_elem("p p q p^-1 q^-1 q p q").unwrap();
    let a = vec![g.parse_elem("p").unwrap(), g.parse_elem("q p").unwrap()];
    let b = a.iter().map(|e| g.conj(e, &x)).collect();
    let inst = ConjugacyInstance::new(&g, a, b).unwrap();

    let word = RelativeWord::of(&g, &x).unwrap();
    println!("x = {}  (relative length {})", word.display(&g), word.len());
    for (j, entry) in tuple_trace(&word, &inst).unwrap().entries().iter().enumerate() {
        let tuple: Vec<String> = entry.iter().map(|e| g.format(e)).collect();
        println!("  x_{j}: ({})", tuple.join(", "));
    }

    let fix = shorten_to_fixpoint(&word, &inst).unwrap();
    for (s, t, len) in &fix.steps {
        println!("repeat at ({s}, {t}) -> relative length {len}");
    }
    println!("fixpoint: {} = {}", fix.word.display(&g), g.format(&fix.word.evaluate(&g)));
    assert!(inst.is_conjugated_by(&fix.word.evaluate(&g)));
}
