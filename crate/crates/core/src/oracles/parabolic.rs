use super::OracleError;
use crate::groups::{Elem, Group, GroupKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Conjugation is trivial, so lists are conjugate iff equal.
    AbelianEquality,
    /// Tries every element of a finite factor.
    FiniteBruteforce,
}

/// List conjugacy solver for one factor of a free product.
#[derive(Debug, Clone)]
pub struct ParabolicOracle {
    group: Group,
    kind: OracleKind,
}

fn check_lists(group: &Group, g: &[Elem], f: &[Elem]) -> Result<(), OracleError> {
    if g.len() != f.len() {
        return Err(OracleError::LengthMismatch(g.len(), f.len()));
    }
    for e in g.iter().chain(f) {
        group.check(e)?;
    }
    Ok(())
}

/// Identity if the lists agree elementwise, else `None`.
pub fn abelian_gcp(group: &Group, g: &[Elem], f: &[Elem]) -> Result<Option<Elem>, OracleError> {
    check_lists(group, g, f)?;
    Ok((g == f).then(|| group.identity()))
}

/// First `h` in distance-then-shortlex order with `g_i^h = f_i` for all `i`.
pub fn finite_gcp(group: &Group, g: &[Elem], f: &[Elem]) -> Result<Option<Elem>, OracleError> {
    let elements = group
        .finite_elements()
        .ok_or(OracleError::UnsupportedBackend(group.kind()))?;
    check_lists(group, g, f)?;
    Ok(elements
        .into_iter()
        .find(|h| g.iter().zip(f).all(|(a, b)| group.conj(a, h) == *b)))
}

impl ParabolicOracle {
    /// Oracle for a finite, abelian or rank-one free group.
    pub fn new(group: &Group) -> Result<Self, OracleError> {
        let kind = match group.kind() {
            GroupKind::Finite => OracleKind::FiniteBruteforce,
            GroupKind::Abelian => OracleKind::AbelianEquality,
            GroupKind::Free if group.is_commutative() => OracleKind::AbelianEquality,
            k => return Err(OracleError::UnsupportedBackend(k)),
        };
        Ok(Self {
            group: group.clone(),
            kind,
        })
    }

    pub fn kind(&self) -> OracleKind {
        self.kind
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn solve(&self, g: &[Elem], f: &[Elem]) -> Result<Option<Elem>, OracleError> {
        match self.kind {
            OracleKind::AbelianEquality => abelian_gcp(&self.group, g, f),
            OracleKind::FiniteBruteforce => finite_gcp(&self.group, g, f),
        }
    }

    /// Upper bound on the `X`-length of a returned witness. It does not
    /// depend on the input length for these two kinds.
    pub fn theta_bound(&self, _mu: usize) -> usize {
        match self.kind {
            OracleKind::AbelianEquality => 0,
            OracleKind::FiniteBruteforce => self.group.diameter().unwrap_or(0),
        }
    }
}

/// One oracle slot per factor of a free product; free factors of rank two
/// or more have none.
#[derive(Debug, Clone)]
pub struct ParabolicOracles {
    oracles: Vec<Option<ParabolicOracle>>,
}

impl ParabolicOracles {
    pub fn for_group(group: &Group) -> Self {
        let oracles = match group.kind() {
            GroupKind::FreeProduct => group
                .factors()
                .iter()
                .map(|f| ParabolicOracle::new(f).ok())
                .collect(),
            _ => Vec::new(),
        };
        Self { oracles }
    }

    pub fn get(&self, factor: usize) -> Result<&ParabolicOracle, OracleError> {
        self.oracles
            .get(factor)
            .and_then(Option::as_ref)
            .ok_or(OracleError::MissingOracle(factor))
    }

    /// Largest `theta_bound` over the factors that have an oracle.
    pub fn theta(&self, mu: usize) -> usize {
        self.oracles
            .iter()
            .flatten()
            .map(|o| o.theta_bound(mu))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::*;

    #[test]
    fn abelian_examples() {
        let z = Group::abelian(&["u"], 1, &[]).unwrap();
        let u = z.parse_elem("u").unwrap();
        let u2 = z.parse_elem("u u").unwrap();
        assert_eq!(abelian_gcp(&z, &[u.clone()], &[u.clone()]), Ok(Some(z.identity())));
        assert_eq!(abelian_gcp(&z, &[u.clone()], &[u2]), Ok(None));
        assert_eq!(abelian_gcp(&z, &[], &[]), Ok(Some(z.identity())));
        assert_eq!(
            abelian_gcp(&z, &[u], &[]),
            Err(OracleError::LengthMismatch(1, 0))
        );
        let o = ParabolicOracle::new(&z).unwrap();
        assert_eq!(o.theta_bound(7), 0);
    }

    #[test]
    fn finite_examples() {
        let g = s3();
        let (t12, t23, t13) = (Elem::Finite(1), Elem::Finite(2), Elem::Finite(3));
        // exhaustive over the table: (23) and (123) both send (12) to (13);
        // (23) comes first in distance-then-shortlex order
        let all: Vec<Elem> = g
            .finite_elements()
            .unwrap()
            .into_iter()
            .filter(|h| g.conj(&t12, h) == t13)
            .collect();
        assert_eq!(all.len(), 2);
        assert_eq!(finite_gcp(&g, &[t12.clone()], &[t13]), Ok(Some(t23)));
        assert_eq!(finite_gcp(&g, &[t12.clone()], &[t12]), Ok(Some(g.identity())));

        let z3 = Group::cyclic("t", 3).unwrap();
        let t = z3.parse_elem("t").unwrap();
        let t2 = z3.parse_elem("t t").unwrap();
        assert_eq!(finite_gcp(&z3, &[t], &[t2]), Ok(None));
        assert_eq!(ParabolicOracle::new(&g).unwrap().theta_bound(0), 3);
        assert!(finite_gcp(&g, &[Elem::Finite(7)], &[Elem::Finite(0)]).is_err());
    }

    #[test]
    fn finite_agrees_with_double_loop() {
        for g in [s3(), Group::cyclic("r", 4).unwrap()] {
            let els = g.finite_elements().unwrap();
            for a in &els {
                for b in &els {
                    let expected = els.iter().any(|h| g.conj(a, h) == *b);
                    let got = finite_gcp(&g, &[a.clone()], &[b.clone()]).unwrap();
                    assert_eq!(got.is_some(), expected);
                    if let Some(h) = got {
                        assert!(g.x_length(&h) <= g.diameter().unwrap());
                        assert_eq!(g.conj(a, &h), *b);
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_sets() {
        let fp = free_as_product(&["p", "q"]).unwrap();
        let o = ParabolicOracles::for_group(&fp);
        assert_eq!(o.get(0).unwrap().kind(), OracleKind::AbelianEquality);
        assert_eq!(o.get(2).unwrap_err(), OracleError::MissingOracle(2));
        let m = ParabolicOracles::for_group(&modular_group());
        assert_eq!(m.get(1).unwrap().kind(), OracleKind::FiniteBruteforce);
        assert_eq!(m.theta(0), 1);
        let f2 = Group::free(&["x", "y"]).unwrap();
        let mixed = Group::free_product(vec![f2, Group::cyclic("s", 2).unwrap()]).unwrap();
        let o = ParabolicOracles::for_group(&mixed);
        assert_eq!(o.get(0).unwrap_err(), OracleError::MissingOracle(0));
        assert!(o.get(1).is_ok());
    }
}
