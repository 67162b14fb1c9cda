//! Sampled lower estimates for `chi(k)`.
//!
//! Level `j` draws `a` uniformly from `B_j(1)` and a random word `x`, keeps
//! the pair when `|a^x|_X <= j`, and measures the largest `X`-length over
//! the tuple trace of `a` along the relative normal form of `x`. The
//! estimate for `k` is the maximum over levels `0..=k`, so it is
//! nondecreasing in `k` for a fixed seed.
//!
//! Sample `i` of level `j` uses ChaCha8 seeded with `seed` on stream
//! `(j << 32) | i`, which makes every sample independent of the others and
//! of the worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::gcp::{tuple_trace, ConjugacyInstance};
use crate::groups::{Elem, Group, GroupKind, Parallelism};
use crate::relative::RelativeWord;
use crate::words::Word;

/// Longest random conjugator word drawn.
const MAX_X_WORD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationWitness {
    pub a: String,
    pub x: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationReport {
    pub k: u64,
    pub samples: u64,
    pub chi_lower_estimate: u64,
    /// First sample realizing the estimate; absent when no sample was kept.
    pub witness: Option<CalibrationWitness>,
}

fn trace_max(group: &Group, a: &Elem, x: &Elem) -> Result<usize, OracleError> {
    let b = group.conj(a, x);
    let inst = ConjugacyInstance::new(group, vec![a.clone()], vec![b])
        .expect("single-element instance over the group");
    let word = RelativeWord::of(group, x)?;
    let trace = tuple_trace(&word, &inst).expect("x belongs to the group");
    Ok(trace.max_x_length(&inst))
}

/// Replays a report's witness pair and returns its trace maximum.
pub fn replay_witness(group: &Group, witness: &CalibrationWitness) -> Result<usize, OracleError> {
    let a = group.parse_elem(&witness.a)?;
    let x = group.parse_elem(&witness.x)?;
    trace_max(group, &a, &x)
}

pub fn calibrate_chi(group: &Group, k: u64, samples: u64, seed: u64) -> Result<CalibrationReport, OracleError> {
    calibrate_chi_with(group, k, samples, seed, &Parallelism::serial())
}

pub fn calibrate_chi_with(
    group: &Group,
    k: u64,
    samples: u64,
    seed: u64,
    parallelism: &Parallelism,
) -> Result<CalibrationReport, OracleError> {
    match group.kind() {
        GroupKind::Free | GroupKind::FreeProduct => {}
        other => return Err(OracleError::UnsupportedBackend(other)),
    }
    let letters = group.alphabet().len() as u32;
    let mut best: Option<(usize, Elem, Elem)> = None;
    let indices: Vec<u64> = (0..samples).collect();
    for j in 0..=k {
        let ball = group.ball(j as usize)?;
        let draws = parallelism.map(&indices, |&i| -> Result<Option<(usize, Elem, Elem)>, OracleError> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((j << 32) | i);
            let a = ball[rng.gen_range(0..ball.len())].clone();
            let len = rng.gen_range(0..=MAX_X_WORD);
            let word = Word((0..len).map(|_| rng.gen_range(0..letters)).collect());
            let x = group.eval(&word);
            if group.x_length(&group.conj(&a, &x)) as u64 > j {
                return Ok(None);
            }
            Ok(Some((trace_max(group, &a, &x)?, a, x)))
        });
        for d in draws {
            if let Some((m, a, x)) = d? {
                if best.as_ref().is_none_or(|(bm, _, _)| m > *bm) {
                    best = Some((m, a, x));
                }
            }
        }
    }
    Ok(CalibrationReport {
        k,
        samples,
        chi_lower_estimate: best.as_ref().map_or(0, |(m, _, _)| *m as u64),
        witness: best.map(|(_, a, x)| CalibrationWitness {
            a: group.format(&a),
            x: group.format(&x),
        }),
    })
}
