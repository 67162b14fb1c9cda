//! Cross-checking the search against the independent oracles.
//!
//! cargo run --release --example oracle_cross_check

use relconj::gcp::{search, ConjugacyInstance, SearchConfig};
use relconj::groups::catalog::modular_group;
use relconj::oracles::{bfs_conjugator_search, free_product_conjugacy_single};

fn main() {
    let g = modular_group();
    let ball = g.ball(3).unwrap();
    let config = SearchConfig { max_radius: 6, ..SearchConfig::default() };
    let (mut agree, mut conjugate) = (0, 0);
    for a in &ball {
        for b in &ball {
            let criterion = free_product_conjugacy_single(&g, a, b).unwrap();
            let inst = ConjugacyInstance::new(&g, vec![a.clone()], vec![b.clone()]).unwrap();
            let bfs = bfs_conjugator_search(&inst, 6, 1_000_000).unwrap();
            let found = search(&inst, &config).unwrap();
            if criterion == bfs.is_some() && bfs.as_ref() == found.witness() {
                agree += 1;
            } else {
                println!("disagreement: {} vs {}", g.format(a), g.format(b));
            }
            conjugate += usize::from(criterion);
        }
    }
    println!("{agree}/{} pairs agree, {conjugate} conjugate", ball.len() * ball.len());
}
