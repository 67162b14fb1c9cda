//! Replacing parabolic syllables by short oracle witnesses.
//!
//! For a syllable `h` of factor `H`, the connectors `g_i` (at its start)
//! and `f_i` (at its end) satisfy `g_i^h = f_i`. When every connector lies
//! in `H`, the two connector lists are conjugate inside `H` and the
//! factor's oracle returns a witness `s` with bounded `X`-length; splicing
//! `s` in place of `h` keeps the conjugation intact.

use super::{connectors, ConjugacyInstance, GcpError};
use crate::groups::Elem;
use crate::oracles::ParabolicOracles;
use crate::relative::{factor_component, parabolic_membership, RelativeWord, Syllable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyllableCase {
    /// Some connector leaves the factor; the syllable is kept.
    Unlinked,
    /// All connectors lie in the factor; the syllable was replaced.
    Linked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableReport {
    /// Position in the word at the time the syllable was examined.
    pub position: usize,
    pub factor: usize,
    pub case: SyllableCase,
    /// Factor element of the examined syllable.
    pub original: Elem,
    /// Oracle witness spliced in (linked syllables only).
    pub replacement: Option<Elem>,
    /// Largest connector `X`-length.
    pub connector_mu: usize,
    /// Oracle bound at `connector_mu` (linked syllables only).
    pub theta_bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compression {
    pub word: RelativeWord,
    pub reports: Vec<SyllableReport>,
}

/// Walks the parabolic syllables left to right on the evolving word. After
/// a deletion the walk steps back one position so that a freshly merged
/// syllable is examined too.
pub fn compress_parabolic_components(
    x: &RelativeWord,
    inst: &ConjugacyInstance,
    oracles: &ParabolicOracles,
) -> Result<Compression, GcpError> {
    let g = inst.group();
    if !inst.is_conjugated_by(&x.evaluate(g)) {
        return Err(GcpError::NotAConjugator);
    }
    let mut word = x.clone();
    let mut reports = Vec::new();
    let mut pos = 0;
    while pos < word.len() {
        let (factor, original) = match &word.syllables()[pos] {
            Syllable::Parabolic { factor, elem } => (*factor, elem.clone()),
            Syllable::Letter(_) => {
                pos += 1;
                continue;
            }
        };
        let (gs, fs) = connectors(&word, inst, pos)?;
        let connector_mu = gs.iter().chain(&fs).map(|e| g.x_length(e)).max().unwrap_or(0);
        let mut linked = true;
        for e in gs.iter().chain(&fs) {
            if !parabolic_membership(g, e)?.admits(factor) {
                linked = false;
                break;
            }
        }
        if !linked {
            reports.push(SyllableReport {
                position: pos,
                factor,
                case: SyllableCase::Unlinked,
                original,
                replacement: None,
                connector_mu,
                theta_bound: None,
            });
            pos += 1;
            continue;
        }
        let local = |es: &[Elem]| -> Vec<Elem> {
            es.iter()
                .map(|e| factor_component(g, e, factor).expect("membership checked"))
                .collect()
        };
        let oracle = oracles.get(factor)?;
        let witness = oracle
            .solve(&local(&gs), &local(&fs))?
            .ok_or(GcpError::OracleFailure {
                position: pos,
                factor,
            })?;
        let bound = oracle.theta_bound(connector_mu);
        let length = g.factors()[factor].x_length(&witness);
        if length > bound {
            return Err(GcpError::WitnessTooLong {
                position: pos,
                length,
                bound,
            });
        }
        let before = word.len();
        word = word.splice(g, pos, &witness)?;
        reports.push(SyllableReport {
            position: pos,
            factor,
            case: SyllableCase::Linked,
            original,
            replacement: Some(witness),
            connector_mu,
            theta_bound: Some(bound),
        });
        if word.len() < before {
            pos = pos.saturating_sub(1);
        } else {
            pos += 1;
        }
    }
    if !inst.is_conjugated_by(&word.evaluate(g)) {
        return Err(GcpError::NotAConjugator);
    }
    debug_assert!(word.len() <= x.len());
    Ok(Compression { word, reports })
}
