//! Replacing parabolic syllables by witnesses from the factor oracles.
//!
//! cargo run --example parabolic_compression

use relconj::gcp::{compress_parabolic_components, ConjugacyInstance, SyllableCase};
use relconj::groups::catalog::{s3, z_star_z};
use relconj::groups::Group;
use relconj::oracles::ParabolicOracles;
use relconj::relative::RelativeWord;

fn run(g: &Group, a: &[&str], x: &str) {
    let x = g.parse_elem(x).unwrap();
    let a: Vec<_> = a.iter().map(|w| g.parse_elem(w).unwrap()).collect();
    let b = a.iter().map(|e| g.conj(e, &x)).collect();
    let inst = ConjugacyInstance::new(g, a, b).unwrap();
    let word = RelativeWord::of(g, &x).unwrap();
    let c = compress_parabolic_components(&word, &inst, &ParabolicOracles::for_group(g)).unwrap();
    println!("{}  ->  {}", word.display(g), c.word.display(g));
    for r in &c.reports {
        let f = &g.factors()[r.factor];
        match r.case {
            SyllableCase::Unlinked => println!("  [{}] {} kept", r.position, f.format(&r.original)),
            SyllableCase::Linked => println!(
                "  [{}] {} -> `{}` (theta {})",
                r.position,
                f.format(&r.original),
                f.format(r.replacement.as_ref().unwrap()),
                r.theta_bound.unwrap()
            ),
        }
    }
}

fn main() {
    run(&z_star_z(), &["u"], "u u u v");
    // S3 factor: the oracle may return a shorter element of the same coset
    let g = Group::free_product(vec![s3(), Group::abelian(&["u"], 1, &[]).unwrap()]).unwrap();
    run(&g, &["a b a"], "a b a b a u");
    run(&g, &["a", "u"], "b a b u");
}
