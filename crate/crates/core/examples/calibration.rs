//! Sampled lower estimates for the synchronous-vertex constant.
//!
//! cargo run --release --example calibration [samples] [seed]

use relconj::groups::catalog::{free_as_product, modular_group, z_star_z2};
use relconj::oracles::{calibrate_chi, replay_witness};

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    for (name, g) in [
        ("Z/2*Z/3", modular_group()),
        ("F(p,q)", free_as_product(&["p", "q"]).unwrap()),
        ("Z*Z^2", z_star_z2()),
    ] {
        let estimates: Vec<String> = (0..=3)
            .map(|k| {
                let r = calibrate_chi(&g, k, samples, seed).unwrap();
                if let Some(w) = &r.witness {
                    assert_eq!(replay_witness(&g, w).unwrap() as u64, r.chi_lower_estimate);
                }
                r.chi_lower_estimate.to_string()
            })
            .collect();
        println!("{name:<8} chi(0..=3) >= {}", estimates.join(", "));
    }
    let r = calibrate_chi(&modular_group(), 2, samples, seed).unwrap();
    println!("{}", serde_json::to_string(&r).unwrap());
}
