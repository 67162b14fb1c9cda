use super::OracleError;
use crate::gcp::ConjugacyInstance;
use crate::groups::{ball_enumerate, BallOptions, Elem};

/// Checks every element of `B_max_radius(1)` in enumeration order and
/// returns the first conjugator. Deliberately naive: one element at a time,
/// conjugation computed as `x⁻¹ a x`.
pub fn bfs_conjugator_search(
    inst: &ConjugacyInstance,
    max_radius: usize,
    max_elements: usize,
) -> Result<Option<Elem>, OracleError> {
    let g = inst.group();
    for x in ball_enumerate(g, max_radius, &BallOptions::with_cap(max_elements)) {
        let x = x?;
        let mut ok = true;
        for (a, b) in inst.a().iter().zip(inst.b()) {
            if g.conjugate(a, &x)? != *b {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::*;
    use crate::groups::{GroupError, DEFAULT_MAX_ELEMENTS};

    #[test]
    fn examples() {
        let f = free_as_product(&["p", "q"]).unwrap();
        let inst = ConjugacyInstance::parse(&f, &["p"], &["q^-1 p q"]).unwrap();
        assert_eq!(
            bfs_conjugator_search(&inst, 1, DEFAULT_MAX_ELEMENTS),
            Ok(Some(f.parse_elem("q").unwrap()))
        );
        let inst = ConjugacyInstance::parse(&f, &["p q"], &["p q"]).unwrap();
        assert_eq!(
            bfs_conjugator_search(&inst, 0, DEFAULT_MAX_ELEMENTS),
            Ok(Some(f.identity()))
        );
        let inst = ConjugacyInstance::parse(&f, &["p"], &["q"]).unwrap();
        assert_eq!(
            bfs_conjugator_search(&inst, 9, 100),
            Err(OracleError::Group(GroupError::ResourceLimit { cap: 100 }))
        );
    }

    #[test]
    fn modular_group_example() {
        // t² s = t^-1 s is not a cyclic permutation of s t, so the search
        // comes back empty; value frozen from running it
        let g = modular_group();
        let inst = ConjugacyInstance::parse(&g, &["s t"], &["t t s"]).unwrap();
        let w = bfs_conjugator_search(&inst, 3, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(w, None);
        let e = |s: &str| g.parse_elem(s).unwrap();
        assert_eq!(
            crate::oracles::free_product_conjugacy_single(&g, &e("s t"), &e("t t s")),
            Ok(false)
        );
    }
}
