//! Finite groups given by a multiplication table.

use std::collections::VecDeque;

use super::GroupError;
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone)]
pub(crate) struct FiniteGroup {
    pub(crate) names: Vec<String>,
    order: usize,
    table: Vec<u32>,
    pub(crate) identity: u32,
    inverse: Vec<u32>,
    /// symbol index -> element index
    pub(crate) letter_images: Vec<u32>,
    /// BFS distance from the identity in the Cayley graph
    distance: Vec<u32>,
    /// shortlex-least geodesic word of every element
    geodesic: Vec<Word>,
    /// elements in BFS-distance-then-shortlex order
    pub(crate) bfs_order: Vec<u32>,
    pub(crate) diameter: usize,
}

impl FiniteGroup {
    /// Validates the table (Latin square, identity, inverses, associativity)
    /// and builds the distance table for the given generator images.
    ///
    /// Returns the group together with the generator alphabet; a generator
    /// is self-inverse when its image squares to the identity or when it is
    /// listed in `involutions`.
    pub(crate) fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: &[(String, usize)],
        involutions: &[String],
    ) -> Result<(Self, Alphabet), GroupError> {
        let n = table.len();
        let bad = |msg: String| Err(GroupError::InvalidTable(msg));
        if n == 0 {
            return bad("empty multiplication table".into());
        }
        if names.len() != n {
            return bad(format!("{} element names for a table of order {n}", names.len()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {r} has length {} (expected {n})", row.len()));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return bad(format!("row {r} is not a permutation of 0..{n}"));
                }
                flat.push(v as u32);
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for r in 0..n {
                if std::mem::replace(&mut seen[flat[r * n + c] as usize], true) {
                    return bad(format!("column {c} is not a permutation of 0..{n}"));
                }
            }
        }
        let at = |a: usize, b: usize| flat[a * n + b] as usize;
        let identity = match (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)) {
            Some(e) => e,
            None => return bad("no identity element".into()),
        };
        let mut inverse = vec![0u32; n];
        for (a, slot) in inverse.iter_mut().enumerate() {
            // Latin square: exactly one b with a*b = e
            let b = (0..n).find(|&b| at(a, b) == identity).expect("latin row");
            if at(b, a) != identity {
                return bad(format!("element {a} has no two-sided inverse"));
            }
            *slot = b as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return bad(format!("table is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }

        let mut alphabet_spec = Vec::with_capacity(generators.len());
        for (name, image) in generators {
            if *image >= n {
                return bad(format!("generator {name} maps to missing element {image}"));
            }
            let involutive = at(*image, *image) == identity;
            let declared = involutions.contains(name);
            if declared && !involutive {
                return bad(format!("generator {name} is declared an involution but has order > 2"));
            }
            alphabet_spec.push((name.clone(), involutive));
        }
        for name in involutions {
            if !generators.iter().any(|(g, _)| g == name) {
                return Err(GroupError::InvalidSpec(format!("unknown involution `{name}`")));
            }
        }
        let alphabet = Alphabet::new(alphabet_spec)?;
        let letter_images: Vec<u32> = alphabet
            .letters()
            .map(|l| {
                let g = generators[alphabet.generator_of(l)].1;
                if alphabet.is_inverted(l) {
                    inverse[g]
                } else {
                    g as u32
                }
            })
            .collect();

        let mut distance = vec![u32::MAX; n];
        let mut geodesic = vec![Word::empty(); n];
        let mut bfs_order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([identity as u32]);
        distance[identity] = 0;
        while let Some(e) = queue.pop_front() {
            bfs_order.push(e);
            for (l, &img) in letter_images.iter().enumerate() {
                let next = at(e as usize, img as usize);
                if distance[next] == u32::MAX {
                    distance[next] = distance[e as usize] + 1;
                    let mut w = geodesic[e as usize].clone();
                    w.0.push(l as Letter);
                    geodesic[next] = w;
                    queue.push_back(next as u32);
                }
            }
        }
        if bfs_order.len() != n {
            return bad(format!(
                "generators reach only {} of {n} elements",
                bfs_order.len()
            ));
        }
        let diameter = distance.iter().copied().max().unwrap_or(0) as usize;
        Ok((
            Self {
                names,
                order: n,
                table: flat,
                identity: identity as u32,
                inverse,
                letter_images,
                distance,
                geodesic,
                bfs_order,
                diameter,
            },
            alphabet,
        ))
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub(crate) fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub(crate) fn length(&self, a: u32) -> usize {
        self.distance[a as usize] as usize
    }

    pub(crate) fn geodesic(&self, a: u32) -> &Word {
        &self.geodesic[a as usize]
    }

    pub(crate) fn is_commutative(&self) -> bool {
        let n = self.order as u32;
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}
