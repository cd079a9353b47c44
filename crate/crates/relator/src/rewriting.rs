//! Thue systems (semigroup presentations) with bidirectional rewriting rules
//! on positive words, and bounded breadth-first equivalence search.
//!
//! Word equivalence in a general Thue system is only semi-decidable, so the
//! search here is explicitly bounded: by a breadth-first radius and by a node
//! cap. A negative answer within those bounds proves nothing.
//!
//! File format, one item per line:
//!
//! ```text
//! alphabet: s1 s2
//! rule: s1 s1 s2 s1 s2 <-> s2 s1 s1
//! ```

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{Generator, Word};

/// Default bound on the number of distinct words a search may visit.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("letter {0} is not in the alphabet")]
    LetterOutsideAlphabet(String),
    #[error("alphabet contains duplicate letter {0}")]
    DuplicateLetter(String),
    #[error("rule sides must be nonempty")]
    EmptyRuleSide,
    #[error("cannot parse thue file line {0:?}")]
    BadLine(String),
    #[error("thue file must declare exactly one alphabet line")]
    MissingAlphabet,
}

/// A word with all exponents +1: a plain sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveWord(Vec<Generator>);

impl PositiveWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        PositiveWord(letters)
    }

    pub fn empty() -> Self {
        PositiveWord(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The same word as a free-group word, with equal adjacent letters
    /// grouped into one syllable.
    pub fn to_word(&self) -> Word {
        let letters: Vec<(Generator, i8)> = self.0.iter().map(|g| (g.clone(), 1)).collect();
        Word::from_letters(letters.iter())
    }

    /// Formal inverse as a free-group word.
    pub fn inverse_word(&self) -> Word {
        self.to_word().inverse()
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.0.iter().map(|g| g.name()).collect();
        f.write_str(&names.join(" "))
    }
}

impl FromStr for PositiveWord {
    type Err = RewriteError;

    fn from_str(s: &str) -> Result<Self, RewriteError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let g = Generator::new(tok)
                .map_err(|_| RewriteError::BadLine(tok.to_string()))?;
            letters.push(g);
        }
        Ok(PositiveWord(letters))
    }
}

/// Outcome of a bounded equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReachVerdict {
    /// The target lies at breadth-first distance `d` from the source.
    EquivalentAtDepth(usize),
    /// The full ball of the requested radius was explored without finding
    /// the target. Not a proof of inequivalence.
    NotFoundWithinDepth,
    /// The node cap stopped the search before the ball was exhausted.
    Exhausted,
}

/// A breadth-first ball around a word, with distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub distances: BTreeMap<PositiveWord, usize>,
    /// True when the node cap cut the enumeration short.
    pub exhausted: bool,
}

/// A semigroup presentation: an alphabet plus bidirectional rewriting rules
/// between nonempty positive words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThueSystem {
    alphabet: Vec<Generator>,
    rules: Vec<(PositiveWord, PositiveWord)>,
}

impl ThueSystem {
    pub fn new(
        alphabet: Vec<Generator>,
        rules: Vec<(PositiveWord, PositiveWord)>,
    ) -> Result<Self, RewriteError> {
        let mut seen = BTreeSet::new();
        for g in &alphabet {
            if !seen.insert(g.clone()) {
                return Err(RewriteError::DuplicateLetter(g.name().to_string()));
            }
        }
        let system = ThueSystem { alphabet, rules };
        for (lhs, rhs) in &system.rules {
            if lhs.is_empty() || rhs.is_empty() {
                return Err(RewriteError::EmptyRuleSide);
            }
            system.check_word(lhs)?;
            system.check_word(rhs)?;
        }
        Ok(system)
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[(PositiveWord, PositiveWord)] {
        &self.rules
    }

    fn check_word(&self, w: &PositiveWord) -> Result<(), RewriteError> {
        for g in w.letters() {
            if !self.alphabet.contains(g) {
                return Err(RewriteError::LetterOutsideAlphabet(g.name().to_string()));
            }
        }
        Ok(())
    }

    /// All words obtained from `w` by one rule application, in either
    /// direction, at any position.
    pub fn one_step_neighbors(
        &self,
        w: &PositiveWord,
    ) -> Result<BTreeSet<PositiveWord>, RewriteError> {
        self.check_word(w)?;
        let mut out = BTreeSet::new();
        for (lhs, rhs) in &self.rules {
            for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                let n = from.len();
                if n > w.len() {
                    continue;
                }
                for i in 0..=(w.len() - n) {
                    if &w.letters()[i..i + n] == from.letters() {
                        let mut letters = Vec::with_capacity(w.len() - n + to.len());
                        letters.extend_from_slice(&w.letters()[..i]);
                        letters.extend_from_slice(to.letters());
                        letters.extend_from_slice(&w.letters()[i + n..]);
                        out.insert(PositiveWord(letters));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bounded equivalence search with the default node cap.
    pub fn equivalent_within(
        &self,
        p: &PositiveWord,
        q: &PositiveWord,
        depth: usize,
    ) -> Result<ReachVerdict, RewriteError> {
        self.equivalent_within_capped(p, q, depth, DEFAULT_NODE_CAP)
    }

    /// Breadth-first search from `p` out to radius `depth`. Returns the
    /// minimal distance when `q` is found; `Exhausted` when the node cap
    /// stops the search first.
    pub fn equivalent_within_capped(
        &self,
        p: &PositiveWord,
        q: &PositiveWord,
        depth: usize,
        node_cap: usize,
    ) -> Result<ReachVerdict, RewriteError> {
        self.check_word(p)?;
        self.check_word(q)?;
        if p == q {
            return Ok(ReachVerdict::EquivalentAtDepth(0));
        }
        let mut visited: HashSet<PositiveWord> = HashSet::new();
        visited.insert(p.clone());
        let mut queue: VecDeque<(PositiveWord, usize)> = VecDeque::new();
        queue.push_back((p.clone(), 0));
        while let Some((word, dist)) = queue.pop_front() {
            if dist == depth {
                continue;
            }
            for neighbor in self.one_step_neighbors(&word)? {
                if visited.contains(&neighbor) {
                    continue;
                }
                if neighbor == *q {
                    return Ok(ReachVerdict::EquivalentAtDepth(dist + 1));
                }
                if visited.len() >= node_cap {
                    return Ok(ReachVerdict::Exhausted);
                }
                visited.insert(neighbor.clone());
                queue.push_back((neighbor, dist + 1));
            }
        }
        Ok(ReachVerdict::NotFoundWithinDepth)
    }

    /// The breadth-first ball of the given radius around `center`.
    pub fn ball(
        &self,
        center: &PositiveWord,
        radius: usize,
        node_cap: usize,
    ) -> Result<Ball, RewriteError> {
        self.check_word(center)?;
        let mut distances: BTreeMap<PositiveWord, usize> = BTreeMap::new();
        distances.insert(center.clone(), 0);
        let mut queue: VecDeque<(PositiveWord, usize)> = VecDeque::new();
        queue.push_back((center.clone(), 0));
        while let Some((word, dist)) = queue.pop_front() {
            if dist == radius {
                continue;
            }
            for neighbor in self.one_step_neighbors(&word)? {
                if distances.contains_key(&neighbor) {
                    continue;
                }
                if distances.len() >= node_cap {
                    return Ok(Ball {
                        distances,
                        exhausted: true,
                    });
                }
                distances.insert(neighbor.clone(), dist + 1);
                queue.push_back((neighbor, dist + 1));
            }
        }
        Ok(Ball {
            distances,
            exhausted: false,
        })
    }

    /// Parses the line-oriented file format. Blank lines and lines starting
    /// with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, RewriteError> {
        let mut alphabet: Option<Vec<Generator>> = None;
        let mut rules = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("alphabet:") {
                let letters: PositiveWord = rest.parse()?;
                alphabet = Some(letters.letters().to_vec());
            } else if let Some(rest) = line.strip_prefix("rule:") {
                let (lhs, rhs) = rest
                    .split_once("<->")
                    .ok_or_else(|| RewriteError::BadLine(line.to_string()))?;
                rules.push((lhs.parse()?, rhs.parse()?));
            } else {
                return Err(RewriteError::BadLine(line.to_string()));
            }
        }
        let alphabet = alphabet.ok_or(RewriteError::MissingAlphabet)?;
        ThueSystem::new(alphabet, rules)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.alphabet.iter().map(|g| g.name()).collect();
        out.push_str(&format!("alphabet: {}\n", names.join(" ")));
        for (lhs, rhs) in &self.rules {
            out.push_str(&format!("rule: {lhs} <-> {rhs}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::matiyasevich_system;

    fn pw(text: &str) -> PositiveWord {
        text.parse().unwrap()
    }

    fn fragment() -> ThueSystem {
        matiyasevich_system(None).unwrap().system
    }

    #[test]
    fn neighbors_of_rule_side() {
        let t = fragment();
        let n = t.one_step_neighbors(&pw("s1 s1 s2 s2")).unwrap();
        assert!(n.contains(&pw("s2 s1 s1")));
    }

    #[test]
    fn neighbors_inside_context() {
        let t = fragment();
        let n = t.one_step_neighbors(&pw("s1 s1 s1 s2 s2")).unwrap();
        assert!(n.contains(&pw("s1 s2 s1 s1")));
    }

    #[test]
    fn no_match_means_no_neighbors() {
        let t = fragment();
        assert!(t.one_step_neighbors(&pw("s2")).unwrap().is_empty());
    }

    #[test]
    fn neighbors_reject_foreign_letters() {
        let t = fragment();
        assert_eq!(
            t.one_step_neighbors(&pw("s3")),
            Err(RewriteError::LetterOutsideAlphabet("s3".to_string()))
        );
    }

    #[test]
    fn whole_word_rewrite_found_at_depth_one() {
        let t = fragment();
        assert_eq!(
            t.equivalent_within(&pw("s1 s1 s2 s1 s2"), &pw("s2 s1 s1"), 1)
                .unwrap(),
            ReachVerdict::EquivalentAtDepth(1)
        );
    }

    #[test]
    fn reflexivity_at_depth_zero() {
        let t = fragment();
        assert_eq!(
            t.equivalent_within(&pw("s2"), &pw("s2"), 0).unwrap(),
            ReachVerdict::EquivalentAtDepth(0)
        );
    }

    #[test]
    fn two_step_chain_found_at_depth_two() {
        // s1 s1 s1 s2 s2 -> s1 s2 s1 s1 (rule 2 inside context)
        //                -> s1 s1 s1 s2 s1 s2 (rule 1 backwards)
        // Frozen from the brute-force ball below.
        let t = fragment();
        let source = pw("s1 s1 s1 s2 s2");
        let target = pw("s1 s1 s1 s2 s1 s2");
        assert_eq!(
            t.equivalent_within(&source, &target, 2).unwrap(),
            ReachVerdict::EquivalentAtDepth(2)
        );
        // not reachable in one step
        assert_eq!(
            t.equivalent_within(&source, &target, 1).unwrap(),
            ReachVerdict::NotFoundWithinDepth
        );
    }

    #[test]
    fn node_cap_yields_exhausted() {
        let t = fragment();
        let verdict = t
            .equivalent_within_capped(&pw("s1 s1 s1 s2 s2"), &pw("s2 s2 s2"), 5, 2)
            .unwrap();
        assert_eq!(verdict, ReachVerdict::Exhausted);
    }

    /// Independent ball enumerator: words as strings of letter indices, a
    /// naive scan-and-splice for single rewrites, and plain set iteration.
    fn brute_force_ball(
        rules: &[(Vec<u8>, Vec<u8>)],
        start: &[u8],
        radius: usize,
    ) -> BTreeMap<Vec<u8>, usize> {
        let mut dist: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        dist.insert(start.to_vec(), 0);
        for d in 0..radius {
            let frontier: Vec<Vec<u8>> = dist
                .iter()
                .filter(|(_, v)| **v == d)
                .map(|(k, _)| k.clone())
                .collect();
            for word in frontier {
                let mut next = Vec::new();
                for (l, r) in rules {
                    for (from, to) in [(l, r), (r, l)] {
                        if from.len() > word.len() {
                            continue;
                        }
                        for i in 0..=(word.len() - from.len()) {
                            if &word[i..i + from.len()] == from.as_slice() {
                                let mut n = word[..i].to_vec();
                                n.extend_from_slice(to);
                                n.extend_from_slice(&word[i + from.len()..]);
                                next.push(n);
                            }
                        }
                    }
                }
                for n in next {
                    dist.entry(n).or_insert(d + 1);
                }
            }
        }
        dist
    }

    fn encode(w: &PositiveWord) -> Vec<u8> {
        w.letters()
            .iter()
            .map(|g| if g.name() == "s1" { 1 } else { 2 })
            .collect()
    }

    #[test]
    fn balls_match_brute_force_up_to_length_eight_seeds() {
        let t = fragment();
        let rules: Vec<(Vec<u8>, Vec<u8>)> = t
            .rules()
            .iter()
            .map(|(l, r)| (encode(l), encode(r)))
            .collect();
        let seeds = [
            "s1 s1 s2 s2",
            "s1 s1 s2 s1 s2",
            "s2 s1 s1",
            "s1 s1 s1 s2 s2",
            "s2 s2 s1 s1 s2 s2",
            "s1 s2 s1 s2 s1 s2 s1 s2",
        ];
        for seed in seeds {
            let seed = pw(seed);
            for radius in 0..=3 {
                let ball = t.ball(&seed, radius, DEFAULT_NODE_CAP).unwrap();
                assert!(!ball.exhausted);
                let expected = brute_force_ball(&rules, &encode(&seed), radius);
                let got: BTreeMap<Vec<u8>, usize> = ball
                    .distances
                    .iter()
                    .map(|(w, d)| (encode(w), *d))
                    .collect();
                assert_eq!(got, expected, "seed {seed} radius {radius}");
            }
        }
    }

    #[test]
    fn search_is_symmetric() {
        let t = fragment();
        let p = pw("s1 s1 s1 s2 s2");
        let q = pw("s1 s1 s1 s2 s1 s2");
        for depth in 0..4 {
            let forward = t.equivalent_within(&p, &q, depth).unwrap();
            let backward = t.equivalent_within(&q, &p, depth).unwrap();
            assert_eq!(forward, backward, "depth {depth}");
        }
    }

    #[test]
    fn file_format_round_trip() {
        let t = fragment();
        let text = t.to_text();
        assert_eq!(ThueSystem::parse(&text).unwrap(), t);
        assert!(ThueSystem::parse("rule: s1 <-> s2").is_err());
        assert!(ThueSystem::parse("alphabet: s1 s1").is_err());
    }
}
