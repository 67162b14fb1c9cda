//! Exact evaluation of the conjugator length bounds.
//!
//! cargo run --example bounds

use relconj::gcp::{relative_length_bound_for, theorem4_bound, ConstantsProfile, GcpError};

fn main() {
    for (chi, mu, size) in [(1, 1, 2), (0, 0, 2), (2, 1, 3), (3, 2, 4)] {
        let l = relative_length_bound_for(chi, mu, size).unwrap();
        println!("chi = {chi}, mu = {mu}, |X| = {size}: L = {l}");
    }

    let profile = ConstantsProfile::from_json(
        r#"{"chi":{"1":1,"2":2},"eta":{"1,0,1":3,"1,0,2":3},"theta":{"1":2,"2":2}}"#,
    )
    .unwrap();
    let b = theorem4_bound(1, 2, &profile).unwrap();
    println!("L = {}, g = {}, R = {}", b.relative, b.g, b.radius);
    let big = theorem4_bound(2, 6, &profile).unwrap();
    let digits = big.radius.to_string();
    println!("mu = 2, |X| = 6: R has {} digits, starts {}...", digits.len(), &digits[..20]);

    assert_eq!(theorem4_bound(3, 2, &profile), Err(GcpError::MissingConstant("chi(3)".into())));
    println!("overflow: {:?}", relative_length_bound_for(3, 40, 6));
}
