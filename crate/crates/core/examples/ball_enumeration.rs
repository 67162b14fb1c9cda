//! Enumerating balls in Cayley graphs, serially and on a thread pool.
//!
//! cargo run --release --example ball_enumeration

use relconj::groups::catalog::modular_group;
use relconj::groups::{ball_enumerate, BallOptions, Group, Layers, Parallelism};

fn main() {
    let g = modular_group();
    let first: Vec<String> = ball_enumerate(&g, 3, &BallOptions::default())
        .map(|e| g.format(&e.unwrap()))
        .collect();
    println!("B_3 in Z/2*Z/3 ({} elements): {}", first.len(), first.join(", "));

    let f = Group::free(&["p", "q"]).unwrap();
    let spheres: Vec<usize> = Layers::new(&f, 8, BallOptions::default())
        .map(|l| l.unwrap().len())
        .collect();
    println!("F(p,q) sphere sizes up to 8: {spheres:?}");

    let serial: Vec<_> = ball_enumerate(&f, 8, &BallOptions::default()).map(Result::unwrap).collect();
    let opts = BallOptions {
        parallelism: Parallelism::with_workers(4),
        ..BallOptions::default()
    };
    let parallel: Vec<_> = ball_enumerate(&f, 8, &opts).map(Result::unwrap).collect();
    println!("parallel order identical: {}", serial == parallel);

    let capped: Result<Vec<_>, _> = ball_enumerate(&f, 8, &BallOptions::with_cap(1000)).collect();
    println!("with a cap of 1000: {}", capped.unwrap_err());
}
