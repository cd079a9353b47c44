//! Free-group words stored as runs of generator powers.
//!
//! A [`Word`] is an ordered list of syllables `(generator, exponent)` with
//! arbitrary-precision exponents. Words may be held raw (adjacent syllables
//! over the same generator are allowed); [`Word::reduce`] computes the unique
//! freely reduced normal form.
//!
//! Text syntax: whitespace-separated tokens `g`, `g^-1`, `g^k` with `k` a
//! signed decimal integer; the empty word is spelled `1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Characters that may not appear in generator names, besides whitespace.
const FORBIDDEN: &[char] = &['^', '<', '>', '|', ','];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("cannot parse word token {0:?}")]
    BadToken(String),
}

/// A named free-group generator. Equality and ordering are by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(String);

impl Generator {
    /// Names must be nonempty, contain no whitespace and none of `^ < > | ,`.
    /// The bare token `1` is reserved for the empty word.
    pub fn new(name: impl Into<String>) -> Result<Self, WordError> {
        let name = name.into();
        let ok = !name.is_empty()
            && name != "1"
            && !name
                .chars()
                .any(|c| c.is_whitespace() || FORBIDDEN.contains(&c));
        if ok {
            Ok(Generator(name))
        } else {
            Err(WordError::InvalidGeneratorName(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Generator {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, WordError> {
        Generator::new(s)
    }
}

/// A word in a free group, as a sequence of syllables `generator^exponent`.
///
/// Stored exponents are never zero, but adjacent syllables may repeat a
/// generator; such words are "raw" and [`Word::reduce`] brings them to the
/// freely reduced normal form. The empty sequence is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    syllables: Vec<(Generator, BigInt)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The one-syllable word `g`.
    pub fn generator(g: Generator) -> Self {
        Word::power(g, 1)
    }

    /// The word `g^exp`; the identity when `exp` is zero.
    pub fn power(g: Generator, exp: impl Into<BigInt>) -> Self {
        let exp = exp.into();
        if exp.is_zero() {
            Word::identity()
        } else {
            Word {
                syllables: vec![(g, exp)],
            }
        }
    }

    /// Builds a raw word from syllable pairs, dropping zero exponents.
    pub fn from_syllables<I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = (Generator, BigInt)>,
    {
        Word {
            syllables: syllables
                .into_iter()
                .filter(|(_, e)| !e.is_zero())
                .collect(),
        }
    }

    pub fn syllables(&self) -> &[(Generator, BigInt)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length: the sum of absolute exponents.
    pub fn len(&self) -> BigUint {
        let mut n = BigUint::zero();
        for (_, e) in &self.syllables {
            n += e.magnitude();
        }
        n
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The set of generators occurring in the word.
    pub fn generators(&self) -> BTreeSet<&Generator> {
        self.syllables.iter().map(|(g, _)| g).collect()
    }

    /// The unique freely reduced normal form. Idempotent.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<(Generator, BigInt)> = Vec::with_capacity(self.syllables.len());
        for (g, e) in &self.syllables {
            match out.last_mut() {
                Some((h, f)) if h == g => {
                    *f += e;
                    if f.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((g.clone(), e.clone())),
            }
        }
        Word { syllables: out }
    }

    /// True when adjacent syllables use distinct generators.
    pub fn is_reduced(&self) -> bool {
        self.syllables.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// A cyclically reduced word conjugate to `self`: every cyclic
    /// permutation of its letters is reduced. Already cyclically reduced
    /// words come back unchanged.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.reduce();
        while w.syllables.len() >= 2 {
            let first = &w.syllables[0];
            let last = &w.syllables[w.syllables.len() - 1];
            // Only opposite-sign matching ends cancel under rotation; equal
            // signs (like b.a.b) are already cyclically reduced.
            if first.0 != last.0 || first.1.sign() == last.1.sign() {
                break;
            }
            let mut sy = w.syllables;
            let head = sy.remove(0);
            sy.push(head);
            w = Word { syllables: sy }.reduce();
        }
        w
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_reduced() {
            return false;
        }
        if self.syllables.len() < 2 {
            return true;
        }
        let first = &self.syllables[0];
        let last = &self.syllables[self.syllables.len() - 1];
        first.0 != last.0 || first.1.sign() == last.1.sign()
    }

    /// Reverses syllable order and negates exponents.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    /// Raw concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut sy = self.syllables.clone();
        sy.extend(other.syllables.iter().cloned());
        Word { syllables: sy }
    }

    /// Raw concatenation of many words.
    pub fn product<'a, I>(words: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut sy = Vec::new();
        for w in words {
            sy.extend(w.syllables.iter().cloned());
        }
        Word { syllables: sy }
    }

    /// `self` raised to an arbitrary-precision power, freely reduced.
    ///
    /// The word is first factored as `p c p^-1` with `c` cyclically reduced,
    /// so one-syllable cores (the common case for huge exponents, such as
    /// powers of a single generator) never materialize letter by letter.
    pub fn pow(&self, e: &BigInt) -> Word {
        if e.is_zero() {
            return Word::identity();
        }
        let mut core = self.reduce();
        let mut prefix: Vec<(Generator, BigInt)> = Vec::new();
        while core.syllables.len() >= 2 {
            let n = core.syllables.len();
            if core.syllables[0].0 != core.syllables[n - 1].0 {
                break;
            }
            // g^x m g^y = g^x (m g^{y+x}) g^-x
            let (g, x) = core.syllables[0].clone();
            let (_, y) = core.syllables[n - 1].clone();
            let mut sy = core.syllables;
            sy.pop();
            sy.remove(0);
            let merged = y + &x;
            if !merged.is_zero() {
                sy.push((g.clone(), merged));
            }
            prefix.push((g, x));
            core = Word { syllables: sy }.reduce();
        }
        let powered = if core.syllables.is_empty() {
            Word::identity()
        } else if core.syllables.len() == 1 {
            let (g, k) = core.syllables.into_iter().next().unwrap();
            Word::power(g, k * e)
        } else {
            let times = e
                .magnitude()
                .to_usize()
                .expect("word power exponent too large to expand");
            let unit = if e.is_negative() {
                core.inverse()
            } else {
                core
            };
            let mut sy = Vec::with_capacity(unit.syllables.len() * times);
            for _ in 0..times {
                sy.extend(unit.syllables.iter().cloned());
            }
            Word { syllables: sy }
        };
        let pre = Word { syllables: prefix };
        pre.concat(&powered).concat(&pre.inverse()).reduce()
    }

    /// Homomorphic image under `images`, freely reduced. Every generator
    /// occurring in the word needs an image; identity images are fine.
    pub fn substitute(&self, images: &BTreeMap<Generator, Word>) -> Result<Word, WordError> {
        let mut sy = Vec::new();
        for (g, e) in &self.syllables {
            let img = images
                .get(g)
                .ok_or_else(|| WordError::MissingImage(g.name().to_string()))?;
            sy.extend(img.pow(e).syllables.into_iter());
        }
        Ok(Word { syllables: sy }.reduce())
    }

    /// Sum of the exponents of `g` over all syllables.
    pub fn exponent_sum(&self, g: &Generator) -> BigInt {
        let mut sum = BigInt::zero();
        for (h, e) in &self.syllables {
            if h == g {
                sum += e;
            }
        }
        sum
    }

    /// Expansion into single letters as `(generator, sign)` pairs.
    /// Panics if the letter length does not fit in memory.
    pub fn letters(&self) -> Vec<(Generator, i8)> {
        let mut out = Vec::new();
        for (g, e) in &self.syllables {
            let times = e
                .magnitude()
                .to_usize()
                .expect("word too long to expand into letters");
            let sign = if e.is_negative() { -1 } else { 1 };
            for _ in 0..times {
                out.push((g.clone(), sign));
            }
        }
        out
    }

    /// Rebuilds a word from letters, grouping equal adjacent letters into
    /// syllables without performing any cancellation.
    pub fn from_letters<'a, I>(letters: I) -> Word
    where
        I: IntoIterator<Item = &'a (Generator, i8)>,
    {
        let mut sy: Vec<(Generator, BigInt)> = Vec::new();
        for (g, s) in letters {
            let step = BigInt::from(*s);
            match sy.last_mut() {
                Some((h, e)) if h == g && e.sign() == step.sign() => *e += step,
                _ => sy.push((g.clone(), step)),
            }
        }
        Word { syllables: sy }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, e) in &self.syllables {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *e == BigInt::from(1) {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut sy = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                None => (tok, BigInt::from(1)),
                Some((name, e)) => {
                    let exp = BigInt::from_str(e)
                        .map_err(|_| WordError::BadToken(tok.to_string()))?;
                    (name, exp)
                }
            };
            let g = Generator::new(name).map_err(|_| WordError::BadToken(tok.to_string()))?;
            if !exp.is_zero() {
                sy.push((g, exp));
            }
        }
        Ok(Word { syllables: sy })
    }
}
