use super::OracleError;
use crate::groups::{Elem, Group, GroupKind};
use crate::words::Word;

/// Conjugates off matching outer syllables until the first and last
/// syllables lie in different factors (or at most one is left).
fn cyclic_syllables(group: &Group, e: &Elem) -> Vec<(usize, Elem)> {
    let mut e = e.clone();
    loop {
        let Elem::Product(syl) = &e else {
            unreachable!("free product element")
        };
        if syl.len() >= 2 && syl[0].0 == syl[syl.len() - 1].0 {
            let first = Elem::Product(vec![syl[0].clone()]);
            e = group.conj(&e, &first);
        } else {
            return syl.clone();
        }
    }
}

fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|k| a[k..].iter().chain(&a[..k]).eq(b)))
}

fn free_words_conjugate(group: &Group, a: &Word, b: &Word) -> bool {
    let alphabet = group.alphabet();
    let (ca, _) = alphabet.cyclic_reduce(a);
    let (cb, _) = alphabet.cyclic_reduce(b);
    is_rotation(ca.letters(), cb.letters())
}

fn factor_conjugate(factor: &Group, a: &Elem, b: &Elem) -> Result<bool, OracleError> {
    match factor.kind() {
        GroupKind::Abelian => Ok(a == b),
        GroupKind::Finite => Ok(factor
            .finite_elements()
            .expect("finite")
            .iter()
            .any(|h| factor.conj(a, h) == *b)),
        GroupKind::Free => match (a, b) {
            (Elem::Free(x), Elem::Free(y)) => Ok(free_words_conjugate(factor, x, y)),
            _ => unreachable!("free group element"),
        },
        k => Err(OracleError::UnsupportedBackend(k)),
    }
}

/// Decides whether two single elements of a free product (or of a free
/// group) are conjugate, using cyclically reduced normal forms.
pub fn free_product_conjugacy_single(group: &Group, a: &Elem, b: &Elem) -> Result<bool, OracleError> {
    group.check(a)?;
    group.check(b)?;
    match group.kind() {
        GroupKind::Free => {
            let (Elem::Free(x), Elem::Free(y)) = (a, b) else {
                unreachable!("checked")
            };
            Ok(free_words_conjugate(group, x, y))
        }
        GroupKind::FreeProduct => {
            let sa = cyclic_syllables(group, a);
            let sb = cyclic_syllables(group, b);
            match (sa.len(), sb.len()) {
                (0, 0) => Ok(true),
                (1, 1) => {
                    let ((fa, ea), (fb, eb)) = (&sa[0], &sb[0]);
                    if fa != fb {
                        return Ok(false);
                    }
                    factor_conjugate(&group.factors()[*fa], ea, eb)
                }
                (la, lb) if la >= 2 && lb >= 2 => Ok(is_rotation(&sa, &sb)),
                _ => Ok(false),
            }
        }
        k => Err(OracleError::UnsupportedBackend(k)),
    }
}
