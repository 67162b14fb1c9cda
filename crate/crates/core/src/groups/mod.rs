//! Computable group backends: finite tables, finitely generated abelian
//! groups, free groups, and free products of those.
//!
//! A [`Group`] is an immutable, cheaply clonable handle. Elements ([`Elem`])
//! are plain values in canonical form, so equality of elements is equality
//! of payloads. Elements do not carry a back-reference to their group;
//! the checked entry points ([`Group::multiply`], [`Group::conjugate`], ...)
//! verify membership and report [`GroupError::HandleMismatch`].

mod abelian;
mod ball;
pub mod catalog;
mod finite;
mod spec;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::words::{Alphabet, Letter, Word, WordError};

use abelian::AbelianGroup;
use finite::FiniteGroup;

pub use ball::{ball_enumerate, BallOptions, Layers, Parallelism, DEFAULT_MAX_ELEMENTS};
pub use spec::GroupSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("element does not belong to this {0} group")]
    HandleMismatch(GroupKind),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
    #[error("ball enumeration exceeded the cap of {cap} elements")]
    ResourceLimit { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Finite,
    Abelian,
    Free,
    FreeProduct,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Finite => "finite",
            GroupKind::Abelian => "abelian",
            GroupKind::Free => "free",
            GroupKind::FreeProduct => "free_product",
        })
    }
}

/// A group element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    /// Index into the multiplication table.
    Finite(u32),
    /// Coordinates, torsion part reduced into `[0, m)`.
    Abelian(Vec<i64>),
    /// Freely reduced word.
    Free(Word),
    /// Alternating syllables `(factor index, non-identity factor element)`.
    Product(Vec<(usize, Elem)>),
}

#[derive(Debug)]
struct FreeProduct {
    factors: Vec<Group>,
    /// first ambient letter of each factor
    offsets: Vec<Letter>,
    /// ambient letter -> (factor, local letter)
    owner: Vec<(usize, Letter)>,
}

#[derive(Debug)]
enum Backend {
    Finite(FiniteGroup),
    Abelian(AbelianGroup),
    Free,
    FreeProduct(FreeProduct),
}

#[derive(Debug)]
struct GroupData {
    alphabet: Alphabet,
    backend: Backend,
    letter_images: Vec<Elem>,
}

/// Handle to an immutable group backend.
#[derive(Debug, Clone)]
pub struct Group(Arc<GroupData>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Group {
    fn from_parts(alphabet: Alphabet, backend: Backend) -> Self {
        let mut data = GroupData {
            alphabet,
            backend,
            letter_images: Vec::new(),
        };
        let images = data
            .alphabet
            .letters()
            .map(|l| letter_image(&data, l))
            .collect();
        data.letter_images = images;
        Group(Arc::new(data))
    }

    /// Free group on the given generators.
    pub fn free<S: AsRef<str>>(generators: &[S]) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::InvalidSpec("free group needs a generator".into()));
        }
        Ok(Self::from_parts(Alphabet::free(generators)?, Backend::Free))
    }

    /// `Z^rank × Z/torsion[0] × ...`, one generator per coordinate.
    pub fn abelian<S: AsRef<str>>(
        generators: &[S],
        rank: usize,
        torsion: &[u64],
    ) -> Result<Self, GroupError> {
        Self::abelian_with_involutions(generators, rank, torsion, &[])
    }

    pub fn abelian_with_involutions<S: AsRef<str>>(
        generators: &[S],
        rank: usize,
        torsion: &[u64],
        involutions: &[String],
    ) -> Result<Self, GroupError> {
        let names: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        let (g, alphabet) = AbelianGroup::new(&names, rank, torsion.to_vec(), involutions)?;
        Ok(Self::from_parts(alphabet, Backend::Abelian(g)))
    }

    /// Finite group from a multiplication table; `generators` maps each
    /// generator name to an element index.
    pub fn finite(
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: &[(String, usize)],
        involutions: &[String],
    ) -> Result<Self, GroupError> {
        let (g, alphabet) = FiniteGroup::new(elements, table, generators, involutions)?;
        Ok(Self::from_parts(alphabet, Backend::Finite(g)))
    }

    /// Cyclic group `Z/n` as a table, generated by `name`.
    pub fn cyclic(name: &str, n: usize) -> Result<Self, GroupError> {
        let elements = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => name.to_string(),
                _ => format!("{name}{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::finite(elements, table, &[(name.to_string(), 1 % n)], &[])
    }

    /// Free product of finite, abelian or free factors. Factor generator
    /// names must be globally distinct.
    pub fn free_product(factors: Vec<Group>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::InvalidSpec("free product needs a factor".into()));
        }
        let mut gens = Vec::new();
        let mut offsets = Vec::new();
        let mut owner = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            if f.kind() == GroupKind::FreeProduct {
                return Err(GroupError::InvalidSpec(
                    "free product factors must be finite, abelian or free".into(),
                ));
            }
            let a = f.alphabet();
            offsets.push(owner.len() as Letter);
            owner.extend(a.letters().map(|l| (i, l)));
            for (g, name) in a.generator_names().iter().enumerate() {
                gens.push((name.clone(), a.is_self_inverse(g)));
            }
        }
        let alphabet = Alphabet::new(gens).map_err(|e| match e {
            WordError::DuplicateName(n) => GroupError::InvalidSpec(format!(
                "generator `{n}` appears in more than one factor"
            )),
            e => e.into(),
        })?;
        Ok(Self::from_parts(
            alphabet,
            Backend::FreeProduct(FreeProduct {
                factors,
                offsets,
                owner,
            }),
        ))
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        GroupSpec::from_json(text)?.build()
    }

    pub fn kind(&self) -> GroupKind {
        match &self.0.backend {
            Backend::Finite(_) => GroupKind::Finite,
            Backend::Abelian(_) => GroupKind::Abelian,
            Backend::Free => GroupKind::Free,
            Backend::FreeProduct(_) => GroupKind::FreeProduct,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.0.alphabet
    }

    /// Factors of a free product (empty for the other kinds).
    pub fn factors(&self) -> &[Group] {
        match &self.0.backend {
            Backend::FreeProduct(fp) => &fp.factors,
            _ => &[],
        }
    }

    /// Ambient letter of a factor's local letter.
    pub fn ambient_letter(&self, factor: usize, local: Letter) -> Letter {
        match &self.0.backend {
            Backend::FreeProduct(fp) => fp.offsets[factor] + local,
            _ => local,
        }
    }

    /// Factor owning an ambient letter, with the letter's local index.
    pub fn letter_owner(&self, letter: Letter) -> Option<(usize, Letter)> {
        match &self.0.backend {
            Backend::FreeProduct(fp) => Some(fp.owner[letter as usize]),
            _ => None,
        }
    }

    /// Order of a finite group.
    pub fn order(&self) -> Option<usize> {
        match &self.0.backend {
            Backend::Finite(g) => Some(g.order()),
            _ => None,
        }
    }

    /// Diameter of a finite group's Cayley graph.
    pub fn diameter(&self) -> Option<usize> {
        match &self.0.backend {
            Backend::Finite(g) => Some(g.diameter),
            _ => None,
        }
    }

    /// Elements of a finite group in distance-then-shortlex order.
    pub fn finite_elements(&self) -> Option<Vec<Elem>> {
        match &self.0.backend {
            Backend::Finite(g) => Some(g.bfs_order.iter().map(|&i| Elem::Finite(i)).collect()),
            _ => None,
        }
    }

    /// Table name of a finite group element.
    pub fn element_name(&self, e: &Elem) -> Option<&str> {
        match (&self.0.backend, e) {
            (Backend::Finite(g), Elem::Finite(i)) => g.names.get(*i as usize).map(String::as_str),
            _ => None,
        }
    }

    pub fn is_commutative(&self) -> bool {
        match &self.0.backend {
            Backend::Finite(g) => g.is_commutative(),
            Backend::Abelian(_) => true,
            Backend::Free => self.alphabet().generator_count() == 1,
            Backend::FreeProduct(fp) => fp.factors.len() == 1 && fp.factors[0].is_commutative(),
        }
    }

    pub fn identity(&self) -> Elem {
        match &self.0.backend {
            Backend::Finite(g) => Elem::Finite(g.identity),
            Backend::Abelian(g) => Elem::Abelian(vec![0; g.dim()]),
            Backend::Free => Elem::Free(Word::empty()),
            Backend::FreeProduct(_) => Elem::Product(Vec::new()),
        }
    }

    pub fn is_identity(&self, e: &Elem) -> bool {
        match (&self.0.backend, e) {
            (Backend::Finite(g), Elem::Finite(i)) => *i == g.identity,
            (_, Elem::Abelian(v)) => v.iter().all(|&x| x == 0),
            (_, Elem::Free(w)) => w.is_empty(),
            (_, Elem::Product(s)) => s.is_empty(),
            _ => false,
        }
    }

    /// Image of a single symbol.
    pub fn letter_elem(&self, letter: Letter) -> &Elem {
        &self.0.letter_images[letter as usize]
    }

    /// Whether `e` is a canonical element of this group.
    pub fn contains(&self, e: &Elem) -> bool {
        match (&self.0.backend, e) {
            (Backend::Finite(g), Elem::Finite(i)) => (*i as usize) < g.order(),
            (Backend::Abelian(g), Elem::Abelian(v)) => g.is_normal(v),
            (Backend::Free, Elem::Free(w)) => {
                let a = self.alphabet();
                a.check(w).is_ok() && w.0.windows(2).all(|p| p[1] != a.inverse(p[0]))
            }
            (Backend::FreeProduct(fp), Elem::Product(s)) => {
                s.iter().all(|(f, x)| {
                    fp.factors
                        .get(*f)
                        .is_some_and(|g| g.contains(x) && !g.is_identity(x))
                }) && s.windows(2).all(|p| p[0].0 != p[1].0)
            }
            _ => false,
        }
    }

    pub fn check(&self, e: &Elem) -> Result<(), GroupError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(GroupError::HandleMismatch(self.kind()))
        }
    }

    /// Canonical element represented by a word.
    pub fn element_of(&self, word: &Word) -> Result<Elem, GroupError> {
        self.alphabet().check(word)?;
        Ok(self.eval(word))
    }

    /// Parses and evaluates a word in the textual token format.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, GroupError> {
        Ok(self.eval(&self.alphabet().parse(text)?))
    }

    /// [`Group::element_of`] without the alphabet check.
    pub fn eval(&self, word: &Word) -> Elem {
        match &self.0.backend {
            Backend::Free => Elem::Free(self.alphabet().free_reduce(word)),
            Backend::Finite(g) => Elem::Finite(
                word.0
                    .iter()
                    .fold(g.identity, |acc, &l| g.mul(acc, g.letter_images[l as usize])),
            ),
            _ => word
                .0
                .iter()
                .fold(self.identity(), |acc, &l| self.mul(&acc, self.letter_elem(l))),
        }
    }

    /// Product `a·b`. Both arguments must belong to this group.
    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.backend, a, b) {
            (Backend::Finite(g), Elem::Finite(x), Elem::Finite(y)) => Elem::Finite(g.mul(*x, *y)),
            (Backend::Abelian(g), Elem::Abelian(x), Elem::Abelian(y)) => Elem::Abelian(g.add(x, y)),
            (Backend::Free, Elem::Free(x), Elem::Free(y)) => {
                Elem::Free(self.alphabet().concat_reduced(x, y))
            }
            (Backend::FreeProduct(fp), Elem::Product(x), Elem::Product(y)) => {
                Elem::Product(product_mul(fp, x, y))
            }
            _ => panic!("element does not belong to this {} group", self.kind()),
        }
    }

    pub fn inv(&self, a: &Elem) -> Elem {
        match (&self.0.backend, a) {
            (Backend::Finite(g), Elem::Finite(x)) => Elem::Finite(g.inv(*x)),
            (Backend::Abelian(g), Elem::Abelian(x)) => Elem::Abelian(g.neg(x)),
            (Backend::Free, Elem::Free(w)) => Elem::Free(self.alphabet().invert(w)),
            (Backend::FreeProduct(fp), Elem::Product(s)) => Elem::Product(
                s.iter()
                    .rev()
                    .map(|(f, x)| (*f, fp.factors[*f].inv(x)))
                    .collect(),
            ),
            _ => panic!("element does not belong to this {} group", self.kind()),
        }
    }

    /// `a^x = x⁻¹·a·x`.
    pub fn conj(&self, a: &Elem, x: &Elem) -> Elem {
        self.mul(&self.mul(&self.inv(x), a), x)
    }

    pub fn multiply(&self, a: &Elem, b: &Elem) -> Result<Elem, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse_elt(&self, a: &Elem) -> Result<Elem, GroupError> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn conjugate(&self, a: &Elem, x: &Elem) -> Result<Elem, GroupError> {
        self.check(a)?;
        self.check(x)?;
        Ok(self.conj(a, x))
    }

    /// Word length `|a|_X` with respect to this group's alphabet.
    pub fn x_length(&self, a: &Elem) -> usize {
        match (&self.0.backend, a) {
            (Backend::Finite(g), Elem::Finite(x)) => g.length(*x),
            (Backend::Abelian(g), Elem::Abelian(v)) => g.length(v),
            (Backend::Free, Elem::Free(w)) => w.len(),
            (Backend::FreeProduct(fp), Elem::Product(s)) => {
                s.iter().map(|(f, x)| fp.factors[*f].x_length(x)).sum()
            }
            _ => panic!("element does not belong to this {} group", self.kind()),
        }
    }

    /// Shortlex-least geodesic word representing `a`.
    pub fn word_of(&self, a: &Elem) -> Word {
        match (&self.0.backend, a) {
            (Backend::Finite(g), Elem::Finite(x)) => g.geodesic(*x).clone(),
            (Backend::Abelian(g), Elem::Abelian(v)) => g.geodesic(self.alphabet(), v),
            (Backend::Free, Elem::Free(w)) => w.clone(),
            (Backend::FreeProduct(fp), Elem::Product(s)) => Word(
                s.iter()
                    .flat_map(|(f, x)| {
                        let off = fp.offsets[*f];
                        fp.factors[*f].word_of(x).0.into_iter().map(move |l| l + off)
                    })
                    .collect(),
            ),
            _ => panic!("element does not belong to this {} group", self.kind()),
        }
    }

    /// Textual form of `word_of(a)`; the identity prints as the empty string.
    pub fn format(&self, a: &Elem) -> String {
        self.alphabet().format(&self.word_of(a))
    }

    /// Every element of `x_length ≤ radius`, identity first, in
    /// nondecreasing length with shortlex ties.
    pub fn ball(&self, radius: usize) -> Result<Vec<Elem>, GroupError> {
        ball_enumerate(self, radius, &BallOptions::default()).collect()
    }
}

fn letter_image(data: &GroupData, letter: Letter) -> Elem {
    match &data.backend {
        Backend::Finite(g) => Elem::Finite(g.letter_images[letter as usize]),
        Backend::Abelian(g) => Elem::Abelian(g.letter_image(&data.alphabet, letter)),
        Backend::Free => Elem::Free(Word(vec![letter])),
        Backend::FreeProduct(fp) => {
            let (f, local) = fp.owner[letter as usize];
            let factor = &fp.factors[f];
            let x = factor.letter_elem(local);
            if factor.is_identity(x) {
                Elem::Product(Vec::new())
            } else {
                Elem::Product(vec![(f, x.clone())])
            }
        }
    }
}

/// Concatenates syllable sequences, merging across the junction while
/// neighbouring syllables share a factor.
fn product_mul(fp: &FreeProduct, a: &[(usize, Elem)], b: &[(usize, Elem)]) -> Vec<(usize, Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    let mut rest = b;
    while let (Some((fa, xa)), Some(((fb, xb), tail))) = (out.last(), rest.split_first()) {
        if fa != fb {
            break;
        }
        let factor = &fp.factors[*fa];
        let merged = factor.mul(xa, xb);
        let f = *fa;
        out.pop();
        rest = tail;
        if !factor.is_identity(&merged) {
            out.push((f, merged));
            break;
        }
    }
    out.extend_from_slice(rest);
    out
}

#[cfg(test)]
mod tests;
