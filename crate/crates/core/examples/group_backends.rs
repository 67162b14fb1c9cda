//! The four group backends and their JSON descriptions.
//!
//! cargo run --example group_backends

use relconj::groups::catalog::s3;
use relconj::groups::{Group, GroupSpec};

fn show(name: &str, g: &Group, words: &[&str]) {
    println!("{name} ({}), |X| = {}", g.kind(), g.alphabet().len());
    for w in words {
        let e = g.parse_elem(w).unwrap();
        println!("  {w:<16} = {:<12} |.|_X = {}", g.format(&e), g.x_length(&e));
    }
}

fn main() {
    let free = Group::free(&["p", "q"]).unwrap();
    show("F(p,q)", &free, &["p q q^-1 p", "q^-1 p q"]);

    // Z^2 x Z/4
    let ab = Group::abelian(&["x", "y", "r"], 2, &[4]).unwrap();
    show("Z^2 x Z/4", &ab, &["x y x^-1 r r r", "r r r r"]);

    let sym = s3();
    show("S3", &sym, &["a b", "a b a", "b a b"]);
    println!("  order {}, diameter {}", sym.order().unwrap(), sym.diameter().unwrap());

    let spec = r#"{"kind":"free_product","factors":[
        {"kind":"finite","generators":["s"],"elements":["e","s"],"table":[[0,1],[1,0]],"generator_map":{"s":1}},
        {"kind":"abelian","generators":["u"],"rank":1}]}"#;
    let g = GroupSpec::from_json(spec).unwrap().build().unwrap();
    show("Z/2 * Z", &g, &["s u s u^-1 u", "u s s u"]);

    let x = g.parse_elem("s u").unwrap();
    let a = g.parse_elem("u").unwrap();
    println!("  (u)^(s u) = {}", g.format(&g.conjugate(&a, &x).unwrap()));
    // elements carry no handle; the checked entry points catch strays
    let stray = free.parse_elem("p").unwrap();
    println!("  foreign element: {}", g.multiply(&stray, &a).unwrap_err());
}
