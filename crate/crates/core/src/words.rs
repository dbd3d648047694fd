//! Words in a free group, written over the letters `a`..`z` for generators
//! and `A`..`Z` for their inverses.
//!
//! Two flavours are distinguished at the type level. A [`Word`] is freely
//! reduced and represents a based loop. A [`CyclicWord`] is cyclically
//! reduced and stored in a canonical rotation, so equal values represent the
//! same free homotopy class of its curve on any surface carrying the
//! generators.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A single letter: a generator or the inverse of one.
///
/// Ordering is generator id first, plain letter before inverse; this is the
/// order used to pick canonical rotations of cyclic words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u8, inverse: bool) -> Letter {
        Letter { gen, inverse }
    }

    pub fn from_char(ch: char) -> Result<Letter> {
        match ch {
            'a'..='z' => Ok(Letter::new(ch as u8 - b'a', false)),
            'A'..='Z' => Ok(Letter::new(ch as u8 - b'A', true)),
            _ => Err(Error::Parse(format!("invalid letter {ch:?}"))),
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.inverse { b'A' } else { b'a' };
        (base + self.gen) as char
    }

    pub fn inverted(self) -> Letter {
        Letter::new(self.gen, !self.inverse)
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Removes every adjacent inverse pair, repeatedly, in one stack pass.
pub fn free_reduce(letters: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().is_some_and(|t| t.is_inverse_of(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from arbitrary letters, reducing as needed.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word(free_reduce(letters.into_iter().collect()))
    }

    /// Parses `"aBc"` style input. Whitespace is rejected; an empty string is
    /// the identity.
    pub fn parse(s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(Letter::from_char(ch)?);
        }
        Ok(Word::from_letters(letters))
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

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// Reduced product `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(free_reduce(letters))
    }

    /// Reduced power, with negative exponents inverting first.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The set of generator ids that occur.
    pub fn generators(&self) -> BTreeSet<u8> {
        self.0.iter().map(|l| l.gen).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A cyclically reduced word in its canonical (lexicographically least)
/// rotation. Values compare equal exactly when they are rotations of each
/// other, i.e. when the underlying based words are conjugate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn parse(s: &str) -> Result<CyclicWord> {
        Ok(cyclic_reduce(&Word::parse(s)?).0)
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

    /// Letter at index `i` modulo the length. Panics on the empty word.
    pub fn letter_mod(&self, i: i64) -> Letter {
        let n = self.0.len() as i64;
        self.0[i.rem_euclid(n) as usize]
    }

    /// The canonical rotation read as a based word.
    pub fn linear(&self) -> Word {
        Word(self.0.clone())
    }

    /// The based word for the rotation starting at index `j`.
    pub fn rotation(&self, j: usize) -> Word {
        let n = self.0.len();
        if n == 0 {
            return Word::empty();
        }
        let mut letters = Vec::with_capacity(n);
        for k in 0..n {
            letters.push(self.0[(j + k) % n]);
        }
        Word(letters)
    }

    /// The inverse curve, again canonicalized.
    pub fn inverse(&self) -> CyclicWord {
        let inv: Vec<Letter> = self.0.iter().rev().map(|l| l.inverted()).collect();
        CyclicWord(canonical_rotation(&inv).0)
    }

    pub fn generators(&self) -> BTreeSet<u8> {
        self.0.iter().map(|l| l.gen).collect()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

fn least_rotation_index(letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut best = 0usize;
    for cand in 1..n {
        for k in 0..n {
            let a = letters[(cand + k) % n];
            let b = letters[(best + k) % n];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    best = cand;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    best
}

/// Canonical rotation of a cyclically reduced letter sequence, together with
/// the rotation index that produced it.
fn canonical_rotation(letters: &[Letter]) -> (Vec<Letter>, usize) {
    let n = letters.len();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let j = least_rotation_index(letters);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(letters[(j + k) % n]);
    }
    (out, j)
}

/// Cyclic reduction. Returns the canonical cyclic word `c` and a conjugator
/// `u` with `w = u * c.linear() * u^-1` as based words.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let mut core = w.letters().to_vec();
    let mut prefix: Vec<Letter> = Vec::new();
    while core.len() >= 2 && core[0].is_inverse_of(core[core.len() - 1]) {
        prefix.push(core[0]);
        core.remove(0);
        core.pop();
    }
    let (canon, j) = canonical_rotation(&core);
    // w = prefix * core * prefix^-1 and core = core[..j] * canon-as-based * core[..j]^-1.
    let mut conj = prefix;
    conj.extend_from_slice(&core[..j]);
    (CyclicWord(canon), Word(free_reduce(conj)))
}

/// Whether two based words are conjugate, i.e. trace freely homotopic curves.
pub fn conjugate_eq(w1: &Word, w2: &Word) -> bool {
    cyclic_reduce(w1).0 == cyclic_reduce(w2).0
}

/// A cyclic word expressed as a power of a primitive one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub root: CyclicWord,
    pub k: u32,
}

/// Writes `c` as `root^k` with `root` primitive and `k >= 1`.
///
/// The root is found as the shortest rotation period; it is returned in the
/// same canonical rotation convention as every other cyclic word.
pub fn primitive_root(c: &CyclicWord) -> Result<PrimitiveDecomposition> {
    let n = c.len();
    if n == 0 {
        return Err(Error::Unsupported(
            "the trivial class has no primitive root".into(),
        ));
    }
    let letters = c.letters();
    for p in 1..=n {
        if n % p != 0 {
            continue;
        }
        if (0..n).all(|i| letters[i] == letters[(i + p) % n]) {
            // A prefix of the canonical rotation of a periodic word is the
            // canonical rotation of the period.
            let root = CyclicWord(letters[..p].to_vec());
            debug_assert_eq!(canonical_rotation(&root.0).1, 0);
            return Ok(PrimitiveDecomposition {
                root,
                k: (n / p) as u32,
            });
        }
    }
    unreachable!("period n always divides n");
}

/// Whether a cyclic word is primitive (not a proper power).
pub fn is_primitive(c: &CyclicWord) -> Result<bool> {
    Ok(primitive_root(c)?.k == 1)
}
