//! Tuple traces along a conjugator and pigeonhole shortening.

use std::collections::HashMap;

use super::{ConjugacyInstance, GcpError};
use crate::groups::Elem;
use crate::relative::RelativeWord;

/// Entry `j` is `(a_1^{x_j}, ..., a_m^{x_j})` for the prefix `x_j` of the
/// conjugator, `j = 0..=len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleTrace {
    entries: Vec<Vec<Elem>>,
}

impl TupleTrace {
    pub fn entries(&self) -> &[Vec<Elem>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last(&self) -> &[Elem] {
        self.entries.last().expect("trace has entry 0")
    }

    /// Lexicographically first `(s, t)`, `s < t`, with equal entries.
    pub fn first_repeat(&self) -> Option<(usize, usize)> {
        let mut first_seen: HashMap<&[Elem], usize> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        for (t, e) in self.entries.iter().enumerate() {
            match first_seen.get(e.as_slice()) {
                // the first repeat of each tuple pairs with its first
                // occurrence; the minimal s wins, then the minimal t
                Some(&s) => {
                    if best.is_none_or(|(bs, _)| s < bs) {
                        best = Some((s, t));
                    }
                }
                None => {
                    first_seen.insert(e, t);
                }
            }
        }
        best
    }

    pub fn distinct_count(&self) -> usize {
        let set: std::collections::HashSet<&Vec<Elem>> = self.entries.iter().collect();
        set.len()
    }

    pub fn all_distinct(&self) -> bool {
        self.distinct_count() == self.entries.len()
    }

    /// Largest `X`-length over every trace entry.
    pub fn max_x_length(&self, inst: &ConjugacyInstance) -> usize {
        let g = inst.group();
        self.entries
            .iter()
            .flatten()
            .map(|e| g.x_length(e))
            .max()
            .unwrap_or(0)
    }
}

fn check_word(x: &RelativeWord, inst: &ConjugacyInstance) -> Result<Elem, GcpError> {
    let e = x.evaluate(inst.group());
    inst.group().check(&e)?;
    Ok(e)
}

pub fn tuple_trace(x: &RelativeWord, inst: &ConjugacyInstance) -> Result<TupleTrace, GcpError> {
    check_word(x, inst)?;
    let g = inst.group();
    let mut entries = Vec::with_capacity(x.len() + 1);
    entries.push(inst.a().to_vec());
    for syl in x.syllables() {
        let h = syl.to_elem();
        let prev = entries.last().expect("nonempty");
        let next = prev.iter().map(|a| g.conj(a, &h)).collect();
        entries.push(next);
    }
    Ok(TupleTrace { entries })
}

/// One shortening step: the repeat `(s, t)` and the resulting conjugator
/// `x_s · x_t⁻¹ · x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortening {
    pub word: RelativeWord,
    pub s: usize,
    pub t: usize,
}

/// Cuts out the segment between the first repeated pair of trace entries.
/// Returns `None` when all entries are distinct.
pub fn pigeonhole_shorten(
    x: &RelativeWord,
    inst: &ConjugacyInstance,
) -> Result<Option<Shortening>, GcpError> {
    let trace = tuple_trace(x, inst)?;
    if trace.last() != inst.b() {
        return Err(GcpError::NotAConjugator);
    }
    let Some((s, t)) = trace.first_repeat() else {
        return Ok(None);
    };
    let g = inst.group();
    let e = g.mul(&x.prefix(g, s)?, &x.suffix(g, t)?);
    let word = RelativeWord::of(g, &e)?;
    debug_assert!(word.len() < x.len());
    debug_assert!(inst.is_conjugated_by(&e));
    Ok(Some(Shortening { word, s, t }))
}

/// Result of iterated shortening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixpoint {
    pub word: RelativeWord,
    /// `(s, t, relative length after the step)` for every step taken.
    pub steps: Vec<(usize, usize, usize)>,
}

pub fn shorten_to_fixpoint(
    x: &RelativeWord,
    inst: &ConjugacyInstance,
) -> Result<Fixpoint, GcpError> {
    let mut word = x.clone();
    let mut steps = Vec::new();
    while let Some(step) = pigeonhole_shorten(&word, inst)? {
        steps.push((step.s, step.t, step.word.len()));
        word = step.word;
    }
    Ok(Fixpoint { word, steps })
}

/// Connector tuples at a syllable: `g_i = a_i^{x_p}` at its start and
/// `f_i = a_i^{x_{p+1}}` at its end, so that `g_i^h = f_i` for the
/// syllable label `h`.
pub fn connectors(
    x: &RelativeWord,
    inst: &ConjugacyInstance,
    position: usize,
) -> Result<(Vec<Elem>, Vec<Elem>), GcpError> {
    if position >= x.len() {
        return Err(crate::relative::RelativeError::IndexOutOfRange {
            index: position,
            len: x.len(),
        }
        .into());
    }
    check_word(x, inst)?;
    let g = inst.group();
    let start = x.prefix(g, position)?;
    let h = x.syllables()[position].to_elem();
    let gs: Vec<Elem> = inst.a().iter().map(|a| g.conj(a, &start)).collect();
    let fs: Vec<Elem> = gs.iter().map(|c| g.conj(c, &h)).collect();
    Ok((gs, fs))
}
