use serde::{Deserialize, Serialize};

use super::GcpError;
use crate::groups::{Elem, Group};
use crate::words::Word;

/// Two lists of elements to be conjugated onto each other elementwise.
///
/// Repeated `a` entries are removed on construction (their `b` partners
/// must agree), so the stored `a` list is pairwise distinct. `mu` is the
/// largest `X`-length across both lists.
#[derive(Debug, Clone)]
pub struct ConjugacyInstance {
    group: Group,
    a: Vec<Elem>,
    b: Vec<Elem>,
    mu: usize,
}

/// On-disk form: `{"a":["p p q^-1","q"],"b":["...","..."]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl ConjugacyInstance {
    pub fn new(group: &Group, a: Vec<Elem>, b: Vec<Elem>) -> Result<Self, GcpError> {
        if a.len() != b.len() {
            return Err(GcpError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        if a.is_empty() {
            return Err(GcpError::EmptyLists);
        }
        for e in a.iter().chain(&b) {
            group.check(e)?;
        }
        let mut kept_a: Vec<Elem> = Vec::with_capacity(a.len());
        let mut kept_b: Vec<Elem> = Vec::with_capacity(b.len());
        let mut origin = Vec::with_capacity(a.len());
        for (j, (x, y)) in a.into_iter().zip(b).enumerate() {
            match kept_a.iter().position(|k| *k == x) {
                Some(i) if kept_b[i] != y => {
                    return Err(GcpError::InconsistentDuplicates {
                        first: origin[i],
                        second: j,
                    })
                }
                Some(_) => {}
                None => {
                    kept_a.push(x);
                    kept_b.push(y);
                    origin.push(j);
                }
            }
        }
        let mu = kept_a
            .iter()
            .chain(&kept_b)
            .map(|e| group.x_length(e))
            .max()
            .unwrap_or(0);
        Ok(Self {
            group: group.clone(),
            a: kept_a,
            b: kept_b,
            mu,
        })
    }

    pub fn from_words(group: &Group, a: &[Word], b: &[Word]) -> Result<Self, GcpError> {
        let eval = |ws: &[Word]| {
            ws.iter()
                .map(|w| group.element_of(w))
                .collect::<Result<Vec<_>, _>>()
        };
        Self::new(group, eval(a)?, eval(b)?)
    }

    /// Parses both lists in the textual word format.
    pub fn parse<S: AsRef<str>>(group: &Group, a: &[S], b: &[S]) -> Result<Self, GcpError> {
        let parse = |ws: &[S]| {
            ws.iter()
                .map(|w| group.parse_elem(w.as_ref()))
                .collect::<Result<Vec<_>, _>>()
        };
        Self::new(group, parse(a)?, parse(b)?)
    }

    pub fn from_file(group: &Group, file: &InstanceFile) -> Result<Self, GcpError> {
        Self::parse(group, &file.a, &file.b)
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            a: self.a.iter().map(|e| self.group.format(e)).collect(),
            b: self.b.iter().map(|e| self.group.format(e)).collect(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn a(&self) -> &[Elem] {
        &self.a
    }

    pub fn b(&self) -> &[Elem] {
        &self.b
    }

    /// Number of (deduplicated) positions.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Whether `x` conjugates every `a_i` onto `b_i`. `x` must belong to the
    /// instance's group.
    pub fn is_conjugated_by(&self, x: &Elem) -> bool {
        let g = &self.group;
        let xi = g.inv(x);
        self.a
            .iter()
            .zip(&self.b)
            .all(|(a, b)| g.mul(&g.mul(&xi, a), x) == *b)
    }
}
