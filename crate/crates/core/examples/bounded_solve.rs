//! Deciding list conjugacy by bounded search.
//!
//! cargo run --example bounded_solve

use num_bigint::BigUint;
use relconj::gcp::{search, solve, solve_bounded, ConjugacyInstance, ConstantsProfile, Mode, SearchConfig};
use relconj::groups::catalog::{free_as_product, modular_group};

fn main() {
    let g = modular_group();
    let config = SearchConfig::default();

    let inst = ConjugacyInstance::parse(&g, &["s t", "t s t^-1"], &["t s", "s t s t^-1 s"]).unwrap();
    let d = search(&inst, &config).unwrap();
    let w = d.witness().unwrap();
    println!("witness {} after {} candidates", g.format(w), d.stats.candidates_checked);

    let inst = ConjugacyInstance::parse(&g, &["t"], &["t t"]).unwrap();
    let r = BigUint::from(4u32);
    println!("t vs t^2, heuristic: {:?}", solve_bounded(&inst, &r, false, &config).unwrap().verdict);
    println!("t vs t^2, certified: {:?}", solve_bounded(&inst, &r, true, &config).unwrap().verdict);

    let f = free_as_product(&["p", "q"]).unwrap();
    let inst = ConjugacyInstance::parse(&f, &["p", "q"], &["q^-1 p q", "q"]).unwrap();
    let profile = ConstantsProfile::from_json(
        r#"{"chi":{"1":1},"eta":{"1,0,1":1},"theta":{"1":1},"certified":true,"monotone_extend":true}"#,
    )
    .unwrap();
    let certified = SearchConfig { mode: Mode::Certified, max_elements: 100_000, ..SearchConfig::default() };
    let d = solve(&inst, &profile, &certified).unwrap();
    println!("p,q -> q^-1 p q, q: {:?}", d.witness().map(|w| f.format(w)));

    // the bound here is far beyond the element cap: never a false negative
    let inst = ConjugacyInstance::parse(&f, &["p"], &["q"]).unwrap();
    let d = solve(&inst, &profile, &certified).unwrap();
    println!("p vs q: {:?}, truncated {}", d.verdict, d.stats.truncated);
}
