//! Small named groups used throughout the examples and tests.

use super::{Group, GroupError};

/// `Z/2 * Z/3` generated by `s` (order 2) and `t` (order 3); the modular
/// group `PSL(2, Z)`.
pub fn modular_group() -> Group {
    Group::free_product(vec![
        Group::cyclic("s", 2).expect("Z/2"),
        Group::cyclic("t", 3).expect("Z/3"),
    ])
    .expect("Z/2 * Z/3")
}

/// Free group on `names`, presented as the free product of infinite cyclic
/// factors so that every generator spans its own parabolic subgroup.
pub fn free_as_product<S: AsRef<str>>(names: &[S]) -> Result<Group, GroupError> {
    let factors = names
        .iter()
        .map(|n| Group::free(&[n.as_ref()]))
        .collect::<Result<Vec<_>, _>>()?;
    Group::free_product(factors)
}

/// `Z(u) * Z(v)` with abelian rank-one factors.
pub fn z_star_z() -> Group {
    Group::free_product(vec![
        Group::abelian(&["u"], 1, &[]).expect("Z"),
        Group::abelian(&["v"], 1, &[]).expect("Z"),
    ])
    .expect("Z * Z")
}

/// `Z(u) * Z²(v, w)`.
pub fn z_star_z2() -> Group {
    Group::free_product(vec![
        Group::abelian(&["u"], 1, &[]).expect("Z"),
        Group::abelian(&["v", "w"], 2, &[]).expect("Z^2"),
    ])
    .expect("Z * Z^2")
}

/// Symmetric group on three points generated by the transpositions
/// `a = (1 2)` and `b = (2 3)`.
///
/// Element order: `e, (12), (23), (13), (123), (132)`.
pub fn s3() -> Group {
    // permutations of {0,1,2} as image arrays; composition applies the
    // left factor first
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("perm");
    let table = perms
        .iter()
        .map(|x| {
            perms
                .iter()
                .map(|y| index([y[x[0]], y[x[1]], y[x[2]]]))
                .collect()
        })
        .collect();
    let names = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Group::finite(names, table, &[("a".into(), 1), ("b".into(), 2)], &[]).expect("S3")
}
