//! Finitely generated abelian groups `Z^r × Z/m_1 × ... × Z/m_t` with the
//! standard ±unit generating set.

use super::GroupError;
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone)]
pub(crate) struct AbelianGroup {
    pub(crate) rank: usize,
    pub(crate) torsion: Vec<i64>,
}

impl AbelianGroup {
    pub(crate) fn new(
        names: &[String],
        rank: usize,
        torsion: Vec<u64>,
        involutions: &[String],
    ) -> Result<(Self, Alphabet), GroupError> {
        if names.len() != rank + torsion.len() {
            return Err(GroupError::InvalidSpec(format!(
                "abelian group with rank {rank} and {} torsion factors needs {} generators, got {}",
                torsion.len(),
                rank + torsion.len(),
                names.len()
            )));
        }
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(GroupError::InvalidSpec(format!("torsion modulus {m} is below 2")));
        }
        let mut spec = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let declared = involutions.contains(name);
            if declared && !(i >= rank && torsion[i - rank] == 2) {
                return Err(GroupError::InvalidSpec(format!(
                    "generator {name} cannot be an involution"
                )));
            }
            spec.push((name.clone(), declared));
        }
        if let Some(name) = involutions.iter().find(|n| !names.contains(n)) {
            return Err(GroupError::InvalidSpec(format!("unknown involution `{name}`")));
        }
        let alphabet = Alphabet::new(spec)?;
        let torsion = torsion.into_iter().map(|m| m as i64).collect();
        Ok((Self { rank, torsion }, alphabet))
    }

    pub(crate) fn dim(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub(crate) fn normalize(&self, v: &mut [i64]) {
        for (x, &m) in v[self.rank..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(m);
        }
    }

    pub(crate) fn is_normal(&self, v: &[i64]) -> bool {
        v.len() == self.dim()
            && v[self.rank..]
                .iter()
                .zip(&self.torsion)
                .all(|(&x, &m)| (0..m).contains(&x))
    }

    pub(crate) fn letter_image(&self, alphabet: &Alphabet, letter: Letter) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[alphabet.generator_of(letter)] = if alphabet.is_inverted(letter) { -1 } else { 1 };
        self.normalize(&mut v);
        v
    }

    pub(crate) fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&mut v);
        v
    }

    pub(crate) fn neg(&self, a: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| -x).collect();
        self.normalize(&mut v);
        v
    }

    pub(crate) fn length(&self, v: &[i64]) -> usize {
        let free: u64 = v[..self.rank].iter().map(|x| x.unsigned_abs()).sum();
        let tors: i64 = v[self.rank..]
            .iter()
            .zip(&self.torsion)
            .map(|(&x, &m)| x.min(m - x))
            .sum();
        free as usize + tors as usize
    }

    /// Shortlex-least geodesic: coordinates in generator order, the positive
    /// letter whenever it is no longer than the inverse letter.
    pub(crate) fn geodesic(&self, alphabet: &Alphabet, v: &[i64]) -> Word {
        let mut out = Vec::with_capacity(self.length(v));
        for (i, &x) in v.iter().enumerate() {
            let pos = alphabet.positive_letter(i);
            let (count, letter) = if i < self.rank {
                if x >= 0 {
                    (x as usize, pos)
                } else {
                    (x.unsigned_abs() as usize, alphabet.inverse(pos))
                }
            } else {
                let m = self.torsion[i - self.rank];
                if x <= m - x {
                    (x as usize, pos)
                } else {
                    ((m - x) as usize, alphabet.inverse(pos))
                }
            };
            out.extend(std::iter::repeat_n(letter, count));
        }
        Word(out)
    }
}
