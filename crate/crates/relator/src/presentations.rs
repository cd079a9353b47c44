//! Finitely presented groups: deficiency, symmetric closure, specialization
//! (killing generators), checked trivialization replays, and abelianization.
//!
//! Relations given as equations `u = v` are stored as the single relator
//! `reduce(u v^-1)`; every stored relator is cyclically reduced.
//!
//! Text format:
//!
//! ```text
//! gens: a b c d e
//! rel: a c a^-1 c^-1
//! ```
//!
//! JSON mirror: `{"generators": [...], "relations": [[["a", 10], ...], ...]}`
//! with syllable pairs. Exponents outside the 64-bit range are written as
//! decimal strings; both forms are accepted on input.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use thiserror::Error;

use crate::homology::IntegerMatrix;
use crate::words::{Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("relation uses generator {0} that is not listed")]
    UnknownGenerator(String),
    #[error("cannot parse presentation line {0:?}")]
    BadLine(String),
    #[error("bad presentation json: {0}")]
    BadJson(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScriptError {
    #[error("step {0} cites relation index {1} out of range")]
    BadRelationIndex(usize, usize),
    #[error("step {0} repeats victim {1}")]
    RepeatedVictim(usize, String),
    #[error("step {0} names victim {1} that is not a generator")]
    UnknownVictim(usize, String),
}

/// A finite group presentation. Relators are stored cyclically reduced and
/// use only listed generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relations: Vec<Word>,
}

/// Verdict of a trivialization replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayVerdict {
    /// Every generator was killed.
    AllKilled,
    /// The step with this index failed. An index equal to the number of
    /// steps means the script ran out with generators still alive.
    Stuck(usize),
}

/// An ordered list of steps `(relation index, victim generator)`. A step
/// succeeds when, with all previously killed generators set to the identity,
/// the cited relation cyclically reduces to `victim` or `victim^-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrivializationScript {
    pub steps: Vec<(usize, Generator)>,
}

impl Presentation {
    /// Builds a presentation, cyclically reducing every relation.
    pub fn new(
        generators: Vec<Generator>,
        relations: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(PresentationError::DuplicateGenerator(g.name().to_string()));
            }
        }
        let mut stored = Vec::with_capacity(relations.len());
        for r in relations {
            for g in r.generators() {
                if !seen.contains(g) {
                    return Err(PresentationError::UnknownGenerator(g.name().to_string()));
                }
            }
            stored.push(r.cyclic_reduce());
        }
        Ok(Presentation {
            generators,
            relations: stored,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    /// Relations minus generators; may be negative.
    pub fn deficiency(&self) -> i64 {
        self.relations.len() as i64 - self.generators.len() as i64
    }

    /// The set of all cyclic permutations of all relators and of their
    /// inverses. Permutations are taken letter by letter, so the size is at
    /// most twice the total letter length.
    pub fn symmetric_closure(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for r in &self.relations {
            if r.is_identity() {
                continue;
            }
            let letters = r.letters();
            let n = letters.len();
            for offset in 0..n {
                let mut rotated = Vec::with_capacity(n);
                rotated.extend_from_slice(&letters[offset..]);
                rotated.extend_from_slice(&letters[..offset]);
                let word = Word::from_letters(rotated.iter());
                out.insert(word.inverse());
                out.insert(word);
            }
        }
        out
    }

    /// Kills the given generators: they disappear from the generator list and
    /// are replaced by the identity in every relation. Relations that become
    /// empty are dropped. Generators not listed in the presentation are
    /// ignored.
    pub fn specialize(&self, kill: &BTreeSet<Generator>) -> Presentation {
        let keep: Vec<Generator> = self
            .generators
            .iter()
            .filter(|g| !kill.contains(g))
            .cloned()
            .collect();
        let images = self.killing_map(kill);
        let relations: Vec<Word> = self
            .relations
            .iter()
            .map(|r| {
                r.substitute(&images)
                    .expect("all generators have images")
                    .cyclic_reduce()
            })
            .filter(|r| !r.is_identity())
            .collect();
        Presentation::new(keep, relations).expect("specialization keeps relations valid")
    }

    fn killing_map(&self, kill: &BTreeSet<Generator>) -> BTreeMap<Generator, Word> {
        self.generators
            .iter()
            .map(|g| {
                let image = if kill.contains(g) {
                    Word::identity()
                } else {
                    Word::generator(g.clone())
                };
                (g.clone(), image)
            })
            .collect()
    }

    /// Replays a trivialization script step by step; see
    /// [`TrivializationScript`]. Returns `AllKilled` when, after the final
    /// step, every generator has been killed.
    pub fn trivialization_replay(
        &self,
        script: &TrivializationScript,
    ) -> Result<ReplayVerdict, ScriptError> {
        let mut victims = BTreeSet::new();
        for (i, (idx, victim)) in script.steps.iter().enumerate() {
            if *idx >= self.relations.len() {
                return Err(ScriptError::BadRelationIndex(i, *idx));
            }
            if !self.generators.contains(victim) {
                return Err(ScriptError::UnknownVictim(i, victim.name().to_string()));
            }
            if !victims.insert(victim.clone()) {
                return Err(ScriptError::RepeatedVictim(i, victim.name().to_string()));
            }
        }
        let mut killed: BTreeSet<Generator> = BTreeSet::new();
        for (i, (idx, victim)) in script.steps.iter().enumerate() {
            let images = self.killing_map(&killed);
            let rewritten = self.relations[*idx]
                .substitute(&images)
                .expect("all generators have images")
                .cyclic_reduce();
            let hit = match rewritten.syllables() {
                [(g, e)] => g == victim && e.magnitude().is_one(),
                _ => false,
            };
            if !hit {
                return Ok(ReplayVerdict::Stuck(i));
            }
            killed.insert(victim.clone());
        }
        if self.generators.iter().all(|g| killed.contains(g)) {
            Ok(ReplayVerdict::AllKilled)
        } else {
            Ok(ReplayVerdict::Stuck(script.steps.len()))
        }
    }

    /// The m-by-n matrix whose entry (i, j) is the exponent sum of generator
    /// j in relation i.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let rows = self.relations.len();
        let cols = self.generators.len();
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (i, r) in self.relations.iter().enumerate() {
            for (j, g) in self.generators.iter().enumerate() {
                m.set(i, j, r.exponent_sum(g));
            }
        }
        m
    }

    /// Parses the line-oriented text format. Blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut generators: Option<Vec<Generator>> = None;
        let mut relations = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                let mut gens = Vec::new();
                for tok in rest.split_whitespace() {
                    gens.push(
                        Generator::new(tok)
                            .map_err(|_| PresentationError::BadLine(line.to_string()))?,
                    );
                }
                generators = Some(gens);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let word = Word::from_str(rest)
                    .map_err(|_| PresentationError::BadLine(line.to_string()))?;
                relations.push(word);
            } else {
                return Err(PresentationError::BadLine(line.to_string()));
            }
        }
        let generators =
            generators.ok_or_else(|| PresentationError::BadLine("gens: missing".to_string()))?;
        Presentation::new(generators, relations)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.generators.iter().map(|g| g.name()).collect();
        out.push_str(&format!("gens: {}\n", names.join(" ")));
        for r in &self.relations {
            out.push_str(&format!("rel: {r}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|g| Value::String(g.name().to_string()))
            .collect();
        let rels: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                let syllables: Vec<Value> = r
                    .syllables()
                    .iter()
                    .map(|(g, e)| {
                        let exp = match e.to_i64() {
                            Some(v) => json!(v),
                            None => Value::String(e.to_string()),
                        };
                        json!([g.name(), exp])
                    })
                    .collect();
                Value::Array(syllables)
            })
            .collect();
        json!({ "generators": gens, "relations": rels })
    }

    pub fn from_json(value: &Value) -> Result<Self, PresentationError> {
        let bad = |msg: &str| PresentationError::BadJson(msg.to_string());
        let obj = value.as_object().ok_or_else(|| bad("expected object"))?;
        let gens = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generators array"))?;
        let mut generators = Vec::new();
        for g in gens {
            let name = g.as_str().ok_or_else(|| bad("generator must be string"))?;
            generators.push(Generator::new(name).map_err(|e| bad(&e.to_string()))?);
        }
        let rels = obj
            .get("relations")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing relations array"))?;
        let mut relations = Vec::new();
        for rel in rels {
            let syllables = rel.as_array().ok_or_else(|| bad("relation must be array"))?;
            let mut word = Vec::new();
            for s in syllables {
                let pair = s.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                    bad("syllable must be a [generator, exponent] pair")
                })?;
                let name = pair[0]
                    .as_str()
                    .ok_or_else(|| bad("syllable generator must be string"))?;
                let exp = match &pair[1] {
                    Value::Number(n) => n
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| bad("exponent out of i64 range; use a string"))?,
                    Value::String(s) => BigInt::from_str(s)
                        .map_err(|_| bad("exponent string must be a decimal integer"))?,
                    _ => return Err(bad("exponent must be number or string")),
                };
                let g = Generator::new(name).map_err(|e| bad(&e.to_string()))?;
                word.push((g, exp));
            }
            relations.push(Word::from_syllables(word));
        }
        Presentation::new(generators, relations)
    }
}
