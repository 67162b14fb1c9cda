//! Alphabets over symmetrized generating sets, words, and free reduction.
//!
//! Every generator contributes one symbol, plus a formal inverse symbol
//! unless it is declared self-inverse. Symbols are ordered generator by
//! generator (`p`, `p^-1`, `q`, `q^-1`, ...); this order is the shortlex
//! order used everywhere else in the crate.
//!
//! Words store symbol indices. The textual format is a whitespace separated
//! list of tokens, each a generator name optionally followed by `^-1`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a symbol in an [`Alphabet`].
pub type Letter = u32;

const INVERSE_SUFFIX: &str = "^-1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("letter {letter} does not belong to an alphabet of {size} symbols")]
    AlphabetMismatch { letter: Letter, size: usize },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Symbol {
    generator: usize,
    inverted: bool,
}

/// A symmetrized generating set: generator names together with the
/// involution pairing every symbol with its formal inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    generators: Vec<String>,
    symbols: Vec<Symbol>,
    involution: Vec<Letter>,
    positive: Vec<Letter>,
    by_name: HashMap<String, usize>,
}

impl Alphabet {
    /// Builds an alphabet from `(name, self_inverse)` pairs.
    pub fn new<I, S>(generators: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (S, bool)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut symbols = Vec::new();
        let mut involution = Vec::new();
        let mut positive = Vec::new();
        let mut by_name = HashMap::new();
        for (generator, (name, self_inverse)) in generators.into_iter().enumerate() {
            let name = name.into();
            validate_name(&name)?;
            if by_name.insert(name.clone(), generator).is_some() {
                return Err(WordError::DuplicateName(name));
            }
            let letter = symbols.len() as Letter;
            positive.push(letter);
            symbols.push(Symbol {
                generator,
                inverted: false,
            });
            if self_inverse {
                involution.push(letter);
            } else {
                symbols.push(Symbol {
                    generator,
                    inverted: true,
                });
                involution.push(letter + 1);
                involution.push(letter);
            }
            names.push(name);
        }
        Ok(Self {
            generators: names,
            symbols,
            involution,
            positive,
            by_name,
        })
    }

    /// Alphabet with no self-inverse generators.
    pub fn free<S: AsRef<str>>(names: &[S]) -> Result<Self, WordError> {
        Self::new(names.iter().map(|n| (n.as_ref().to_string(), false)))
    }

    /// Number of symbols, i.e. the size of the symmetrized generating set.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Index of the generator a symbol belongs to.
    pub fn generator_of(&self, letter: Letter) -> usize {
        self.symbols[letter as usize].generator
    }

    pub fn is_inverted(&self, letter: Letter) -> bool {
        self.symbols[letter as usize].inverted
    }

    /// Symbol for generator `generator` (not its inverse).
    pub fn positive_letter(&self, generator: usize) -> Letter {
        self.positive[generator]
    }

    pub fn is_self_inverse(&self, generator: usize) -> bool {
        let l = self.positive[generator];
        self.involution[l as usize] == l
    }

    pub fn inverse(&self, letter: Letter) -> Letter {
        self.involution[letter as usize]
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.symbols.len() as Letter
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Display name of a symbol: `p` or `p^-1`.
    pub fn symbol_name(&self, letter: Letter) -> String {
        let s = self.symbols[letter as usize];
        let base = &self.generators[s.generator];
        if s.inverted {
            format!("{base}{INVERSE_SUFFIX}")
        } else {
            base.clone()
        }
    }

    pub fn check(&self, word: &Word) -> Result<(), WordError> {
        match word.0.iter().find(|&&l| l as usize >= self.len()) {
            Some(&letter) => Err(WordError::AlphabetMismatch {
                letter,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn parse_token(&self, token: &str) -> Result<Letter, WordError> {
        let (base, inverted) = match token.strip_suffix(INVERSE_SUFFIX) {
            Some(base) => (base, true),
            None => (token, false),
        };
        if base.is_empty() || base.contains('^') {
            return Err(WordError::MalformedToken(token.to_string()));
        }
        let generator = self
            .lookup(base)
            .ok_or_else(|| WordError::UnknownSymbol(base.to_string()))?;
        let letter = self.positive[generator];
        Ok(if inverted { self.inverse(letter) } else { letter })
    }

    /// Parses the whitespace separated token format. Blank text is the
    /// empty word. No reduction is performed.
    pub fn parse(&self, text: &str) -> Result<Word, WordError> {
        text.split_whitespace()
            .map(|t| self.parse_token(t))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn format(&self, word: &Word) -> String {
        let mut out = String::new();
        for (i, &l) in word.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.symbol_name(l));
        }
        out
    }

    /// Deletes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self, word: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(word.len());
        for &l in &word.0 {
            self.push_reduced(&mut out, l);
        }
        Word(out)
    }

    fn push_reduced(&self, out: &mut Vec<Letter>, letter: Letter) {
        if out.last() == Some(&self.inverse(letter)) {
            out.pop();
        } else {
            out.push(letter);
        }
    }

    /// Formal inverse: reversed, with every letter replaced by its inverse.
    pub fn invert(&self, word: &Word) -> Word {
        Word(word.0.iter().rev().map(|&l| self.inverse(l)).collect())
    }

    pub fn concat_reduce(&self, u: &Word, v: &Word) -> Result<Word, WordError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.concat_reduced(u, v))
    }

    /// Concatenation of two freely reduced words, reduced at the junction.
    pub(crate) fn concat_reduced(&self, u: &Word, v: &Word) -> Word {
        let mut out = u.0.clone();
        out.reserve(v.len());
        for &l in &v.0 {
            self.push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Splits a freely reduced word as `conjugator · core · conjugator⁻¹`
    /// with `core` cyclically reduced.
    pub fn cyclic_reduce(&self, word: &Word) -> (Word, Word) {
        let w = &word.0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[hi - 1] == self.inverse(w[lo]) {
            lo += 1;
            hi -= 1;
        }
        (Word(w[lo..hi].to_vec()), Word(w[..lo].to_vec()))
    }
}

fn validate_name(name: &str) -> Result<(), WordError> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | '(' | ')' | ':'));
    if bad {
        Err(WordError::InvalidName(name.to_string()))
    } else {
        Ok(())
    }
}

/// A word over an alphabet; the empty word denotes the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Shortlex comparison: shorter first, then lexicographic by symbol index.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pq() -> Alphabet {
        Alphabet::free(&["p", "q"]).unwrap()
    }

    fn st() -> Alphabet {
        Alphabet::new([("s", true), ("t", false)]).unwrap()
    }

    #[test]
    fn parse_maps_inverse_tokens() {
        let a = pq();
        let w = a.parse("p p^-1 q").unwrap();
        assert_eq!(w.0, vec![0, 1, 2]);
        assert_eq!(a.format(&w), "p p^-1 q");
        assert!(a.parse("").unwrap().is_empty());
        assert!(a.parse("   ").unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        let a = st();
        assert_eq!(a.parse("s z"), Err(WordError::UnknownSymbol("z".into())));
        assert_eq!(a.parse("s^2"), Err(WordError::MalformedToken("s^2".into())));
        assert_eq!(a.parse("^-1"), Err(WordError::MalformedToken("^-1".into())));
        // self-inverse generator: s^-1 is s
        assert_eq!(a.parse("s^-1").unwrap().0, vec![0]);
    }

    #[test]
    fn names_are_validated() {
        assert!(matches!(Alphabet::free(&["a b"]), Err(WordError::InvalidName(_))));
        assert!(matches!(Alphabet::free(&[""]), Err(WordError::InvalidName(_))));
        assert!(matches!(Alphabet::free(&["x^-1"]), Err(WordError::InvalidName(_))));
        assert!(matches!(Alphabet::free(&["x", "x"]), Err(WordError::DuplicateName(_))));
    }

    #[test]
    fn free_reduction_examples() {
        let a = pq();
        let w = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.free_reduce(&w("p p^-1 q")), w("q"));
        assert_eq!(a.free_reduce(&w("p q q^-1 p^-1")), Word::empty());
        let b = st();
        assert_eq!(b.free_reduce(&b.parse("s s").unwrap()), Word::empty());
    }

    #[test]
    fn invert_examples() {
        let a = pq();
        let w = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.invert(&w("p q")), w("q^-1 p^-1"));
        assert_eq!(a.invert(&Word::empty()), Word::empty());
        let b = st();
        assert_eq!(b.invert(&b.parse("s").unwrap()), b.parse("s").unwrap());
    }

    #[test]
    fn concat_reduce_examples() {
        let a = pq();
        let w = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.concat_reduce(&w("p"), &w("p^-1")).unwrap(), Word::empty());
        assert_eq!(a.concat_reduce(&w("p q"), &Word::empty()).unwrap(), w("p q"));
        assert_eq!(a.concat_reduce(&w("p q"), &w("q^-1 p")).unwrap(), w("p p"));
        assert_eq!(
            a.concat_reduce(&w("p"), &Word(vec![9])),
            Err(WordError::AlphabetMismatch { letter: 9, size: 4 })
        );
    }

    #[test]
    fn cyclic_reduce_examples() {
        let a = pq();
        let w = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.cyclic_reduce(&w("q^-1 p q")), (w("p"), w("q^-1")));
        assert_eq!(a.cyclic_reduce(&w("p q")), (w("p q"), Word::empty()));
        assert_eq!(a.cyclic_reduce(&Word::empty()), (Word::empty(), Word::empty()));
    }

    fn word_strategy(size: u32) -> impl Strategy<Value = Word> {
        prop::collection::vec(0..size, 0..24).prop_map(Word)
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent_and_shrinks(w in word_strategy(5)) {
            let a = Alphabet::new([("p", false), ("q", false), ("s", true)]).unwrap();
            let r = a.free_reduce(&w);
            prop_assert_eq!(a.free_reduce(&r), r.clone());
            prop_assert!(r.len() <= w.len());
            let has_pair = w.0.windows(2).any(|p| p[1] == a.inverse(p[0]));
            prop_assert_eq!(r.len() == w.len(), !has_pair);
        }

        #[test]
        fn word_times_inverse_is_trivial(w in word_strategy(5)) {
            let a = Alphabet::new([("p", false), ("q", false), ("s", true)]).unwrap();
            prop_assert!(a.free_reduce(&w.concat(&a.invert(&w))).is_empty());
        }

        #[test]
        fn print_parse_round_trip(w in word_strategy(5)) {
            let a = Alphabet::new([("p", false), ("q", false), ("s", true)]).unwrap();
            prop_assert_eq!(a.parse(&a.format(&w)).unwrap(), w);
        }

        #[test]
        fn cyclic_reduce_recomposes(w in word_strategy(4)) {
            let a = pq();
            let w = a.free_reduce(&w);
            let (core, c) = a.cyclic_reduce(&w);
            let back = a.free_reduce(&c.concat(&core).concat(&a.invert(&c)));
            prop_assert_eq!(back, w);
            if core.len() >= 2 {
                prop_assert_ne!(core.0[0], a.inverse(*core.0.last().unwrap()));
            }
        }
    }
}
