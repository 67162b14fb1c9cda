//! Relative structure of elements over `X ∪ H`.
//!
//! In a free product every factor element is a single edge of the relative
//! Cayley graph, so the syllable decomposition of the normal form is a
//! relative geodesic and the relative length is the syllable count. In a
//! free group (all parabolics trivial) every letter is its own syllable.

use std::fmt::Write as _;

use thiserror::Error;

use crate::groups::{Elem, Group, GroupKind};
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelativeError {
    #[error("{0} groups have no relative structure")]
    UnsupportedBackend(GroupKind),
    #[error("index {index} out of range for a relative word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("replacement at position {position} does not lie in the syllable's factor")]
    FactorMismatch { position: usize },
    #[error("element does not belong to the ambient group")]
    NotInGroup,
}

/// One edge of a relative geodesic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// Non-identity element of parabolic factor `factor` (0-based).
    Parabolic { factor: usize, elem: Elem },
    /// A generator of a free ambient group lying in no parabolic.
    Letter(Letter),
}

impl Syllable {
    pub fn factor(&self) -> Option<usize> {
        match self {
            Syllable::Parabolic { factor, .. } => Some(*factor),
            Syllable::Letter(_) => None,
        }
    }

    /// The syllable as an element of the ambient group.
    pub fn to_elem(&self) -> Elem {
        match self {
            Syllable::Parabolic { factor, elem } => Elem::Product(vec![(*factor, elem.clone())]),
            Syllable::Letter(l) => Elem::Free(Word(vec![*l])),
        }
    }

    /// `|·|_X` of the syllable.
    pub fn x_length(&self, group: &Group) -> usize {
        match self {
            Syllable::Parabolic { factor, elem } => group.factors()[*factor].x_length(elem),
            Syllable::Letter(_) => 1,
        }
    }
}

/// Result of [`parabolic_membership`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// The identity, which lies in every parabolic.
    All,
    Factor(usize),
    Outside,
}

impl Membership {
    pub fn admits(self, factor: usize) -> bool {
        match self {
            Membership::All => true,
            Membership::Factor(f) => f == factor,
            Membership::Outside => false,
        }
    }
}

/// Syllable decomposition of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RelativeWord {
    syllables: Vec<Syllable>,
}

fn ensure_relative(group: &Group) -> Result<(), RelativeError> {
    match group.kind() {
        GroupKind::FreeProduct | GroupKind::Free => Ok(()),
        k => Err(RelativeError::UnsupportedBackend(k)),
    }
}

impl RelativeWord {
    /// Relative normal form of `e`.
    pub fn of(group: &Group, e: &Elem) -> Result<Self, RelativeError> {
        ensure_relative(group)?;
        if !group.contains(e) {
            return Err(RelativeError::NotInGroup);
        }
        let syllables = match e {
            Elem::Product(s) => s
                .iter()
                .map(|(f, x)| Syllable::Parabolic {
                    factor: *f,
                    elem: x.clone(),
                })
                .collect(),
            Elem::Free(w) => w.0.iter().map(|&l| Syllable::Letter(l)).collect(),
            _ => unreachable!("checked by contains"),
        };
        Ok(Self { syllables })
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The element spelled by the syllables.
    pub fn evaluate(&self, group: &Group) -> Elem {
        self.prefix_unchecked(group, self.len())
    }

    /// `x_j`, the product of the first `j` syllables.
    pub fn prefix(&self, group: &Group, j: usize) -> Result<Elem, RelativeError> {
        if j > self.len() {
            return Err(RelativeError::IndexOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        Ok(self.prefix_unchecked(group, j))
    }

    fn prefix_unchecked(&self, group: &Group, j: usize) -> Elem {
        // syllables are already in normal form, so any prefix is too
        let head = &self.syllables[..j];
        match group.kind() {
            GroupKind::FreeProduct => Elem::Product(
                head.iter()
                    .map(|s| match s {
                        Syllable::Parabolic { factor, elem } => (*factor, elem.clone()),
                        Syllable::Letter(_) => unreachable!("free product syllable"),
                    })
                    .collect(),
            ),
            _ => Elem::Free(Word(
                head.iter()
                    .map(|s| match s {
                        Syllable::Letter(l) => *l,
                        Syllable::Parabolic { .. } => unreachable!("free group syllable"),
                    })
                    .collect(),
            )),
        }
    }

    /// Product of the syllables from `j` on.
    pub fn suffix(&self, group: &Group, j: usize) -> Result<Elem, RelativeError> {
        if j > self.len() {
            return Err(RelativeError::IndexOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        let tail = RelativeWord {
            syllables: self.syllables[j..].to_vec(),
        };
        Ok(tail.evaluate(group))
    }

    /// Replaces the parabolic syllable at `position` by `replacement` (an
    /// element of the same factor, possibly its identity) and renormalizes;
    /// neighbours merge when the syllable vanishes.
    pub fn splice(
        &self,
        group: &Group,
        position: usize,
        replacement: &Elem,
    ) -> Result<RelativeWord, RelativeError> {
        let syl = self
            .syllables
            .get(position)
            .ok_or(RelativeError::IndexOutOfRange {
                index: position,
                len: self.len(),
            })?;
        let factor = match syl {
            Syllable::Parabolic { factor, .. } => *factor,
            Syllable::Letter(_) => return Err(RelativeError::FactorMismatch { position }),
        };
        let fg = &group.factors()[factor];
        if !fg.contains(replacement) {
            return Err(RelativeError::FactorMismatch { position });
        }
        let middle = if fg.is_identity(replacement) {
            group.identity()
        } else {
            Elem::Product(vec![(factor, replacement.clone())])
        };
        let head = self.prefix_unchecked(group, position);
        let tail = self.suffix(group, position + 1)?;
        let e = group.mul(&group.mul(&head, &middle), &tail);
        RelativeWord::of(group, &e)
    }

    /// Report format: `(A: u u) (B: v) (A: u^-1)`; free letters print as
    /// bare tokens.
    pub fn display(&self, group: &Group) -> String {
        let a = group.alphabet();
        let mut out = String::new();
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            match s {
                Syllable::Parabolic { factor, elem } => {
                    let local = group.factors()[*factor].word_of(elem);
                    let ambient = Word(
                        local
                            .0
                            .iter()
                            .map(|&l| group.ambient_letter(*factor, l))
                            .collect(),
                    );
                    let _ = write!(out, "({}: {})", factor_name(*factor), a.format(&ambient));
                }
                Syllable::Letter(l) => out.push_str(&a.symbol_name(*l)),
            }
        }
        out
    }
}

/// `A`, `B`, ... by factor order.
pub fn factor_name(index: usize) -> String {
    if index < 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        format!("F{}", index + 1)
    }
}

/// `|e|_{X ∪ H}`.
pub fn relative_length(group: &Group, e: &Elem) -> Result<usize, RelativeError> {
    Ok(RelativeWord::of(group, e)?.len())
}

/// Which parabolic factor `e` lies in, if any.
pub fn parabolic_membership(group: &Group, e: &Elem) -> Result<Membership, RelativeError> {
    if group.kind() != GroupKind::FreeProduct {
        return Err(RelativeError::UnsupportedBackend(group.kind()));
    }
    match e {
        Elem::Product(s) if s.is_empty() => Ok(Membership::All),
        Elem::Product(s) if s.len() == 1 => Ok(Membership::Factor(s[0].0)),
        Elem::Product(_) => Ok(Membership::Outside),
        _ => Err(RelativeError::NotInGroup),
    }
}

/// The factor element carried by `e` when `e` lies in factor `factor`.
pub fn factor_component(group: &Group, e: &Elem, factor: usize) -> Option<Elem> {
    match e {
        Elem::Product(s) if s.is_empty() => Some(group.factors()[factor].identity()),
        Elem::Product(s) if s.len() == 1 && s[0].0 == factor => Some(s[0].1.clone()),
        _ => None,
    }
}

/// Embeds a factor element into the ambient free product.
pub fn embed(group: &Group, factor: usize, e: &Elem) -> Elem {
    if group.factors()[factor].is_identity(e) {
        group.identity()
    } else {
        Elem::Product(vec![(factor, e.clone())])
    }
}
