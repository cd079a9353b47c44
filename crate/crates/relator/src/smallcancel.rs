//! Pieces, metric and non-metric small cancellation certificates, and a
//! Dehn-style word reducer that is a decision procedure once the metric
//! condition at 1/6 is certified.
//!
//! Pieces are computed over the list of rotation occurrences of the relators
//! and their inverses: two occurrences count as distinct even when they spell
//! the same word, so a relator that is a proper power contributes itself as a
//! piece. For primitive relators this agrees with the plain set reading.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::presentations::Presentation;
use crate::words::{Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScError {
    #[error("lambda must lie strictly between 0 and 1")]
    LambdaOutOfRange,
    #[error("metric condition at 1/6 failed; Dehn reduction needs it")]
    PreconditionFailed,
}

/// Largest piece found as a prefix of one element of the symmetric closure,
/// along with that element's length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceStat {
    pub max_piece: BigUint,
    pub relator_len: BigUint,
}

/// Pieces of a presentation: every maximal common initial segment of two
/// distinct closure occurrences, the largest piece prefixing each closure
/// element, and any elements whose piece exceeds a requested bound.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PieceReport {
    pub pieces: BTreeSet<Word>,
    pub per_relator_max: BTreeMap<Word, PieceStat>,
    /// `(relator, piece)` pairs violating the lambda bound, when one was
    /// given; sorted for determinism.
    pub violations: Vec<(Word, Word)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricVerdict {
    Satisfied,
    Violated { relator: Word, piece: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CVerdict {
    Satisfied,
    Violated {
        relator: Word,
        decomposition: Vec<Word>,
    },
}

/// Every rotation of every relator and of its inverse, kept with
/// multiplicity. Equal-length relators that are proper powers repeat here.
fn closure_occurrences(p: &Presentation) -> Vec<Word> {
    let mut out = Vec::new();
    for r in p.relations() {
        if r.is_identity() {
            continue;
        }
        for base in [r.clone(), r.inverse()] {
            let letters = base.letters();
            let n = letters.len();
            for offset in 0..n {
                let mut rotated = Vec::with_capacity(n);
                rotated.extend_from_slice(&letters[offset..]);
                rotated.extend_from_slice(&letters[..offset]);
                out.push(Word::from_letters(rotated.iter()));
            }
        }
    }
    out
}

/// Letter-by-letter lexicographic comparison of run-length words. Signed
/// letters are ordered by generator name, positives before negatives.
fn letter_lex_cmp(u: &Word, v: &Word) -> Ordering {
    let letter_cmp = |(g1, s1): (&Generator, bool), (g2, s2): (&Generator, bool)| {
        g1.cmp(g2).then(s1.cmp(&s2))
    };
    let mut iu = u.syllables().iter();
    let mut iv = v.syllables().iter();
    let mut ru: Option<(&Generator, bool, BigUint)> = None;
    let mut rv: Option<(&Generator, bool, BigUint)> = None;
    loop {
        if ru.is_none() {
            ru = iu
                .next()
                .map(|(g, e)| (g, e.is_negative(), e.magnitude().clone()));
        }
        if rv.is_none() {
            rv = iv
                .next()
                .map(|(g, e)| (g, e.is_negative(), e.magnitude().clone()));
        }
        match (&mut ru, &mut rv) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((g1, s1, c1)), Some((g2, s2, c2))) => {
                let ord = letter_cmp((g1, *s1), (g2, *s2));
                if ord != Ordering::Equal {
                    return ord;
                }
                let step = c1.clone().min(c2.clone());
                *c1 -= &step;
                *c2 -= &step;
                if c1.is_zero() {
                    ru = None;
                }
                if c2.is_zero() {
                    rv = None;
                }
            }
        }
    }
}

/// Length of the longest common initial letter segment.
fn common_prefix_len(u: &Word, v: &Word) -> BigUint {
    let mut total = BigUint::zero();
    let mut iu = u.syllables().iter();
    let mut iv = v.syllables().iter();
    let mut ru: Option<(&Generator, bool, BigUint)> = None;
    let mut rv: Option<(&Generator, bool, BigUint)> = None;
    loop {
        if ru.is_none() {
            ru = iu
                .next()
                .map(|(g, e)| (g, e.is_negative(), e.magnitude().clone()));
        }
        if rv.is_none() {
            rv = iv
                .next()
                .map(|(g, e)| (g, e.is_negative(), e.magnitude().clone()));
        }
        match (&mut ru, &mut rv) {
            (Some((g1, s1, c1)), Some((g2, s2, c2))) if g1 == g2 && s1 == s2 => {
                let step = c1.clone().min(c2.clone());
                total += &step;
                *c1 -= &step;
                *c2 -= &step;
                if c1.is_zero() {
                    ru = None;
                }
                if c2.is_zero() {
                    rv = None;
                }
            }
            _ => return total,
        }
    }
}

/// The prefix of `u` consisting of the first `n` letters.
fn prefix_word(u: &Word, n: &BigUint) -> Word {
    let mut remaining = n.clone();
    let mut syllables = Vec::new();
    for (g, e) in u.syllables() {
        if remaining.is_zero() {
            break;
        }
        let mag = e.magnitude().clone();
        let take = mag.min(remaining.clone());
        let signed = if e.is_negative() {
            -BigInt::from(take.clone())
        } else {
            BigInt::from(take.clone())
        };
        syllables.push((g.clone(), signed));
        remaining -= take;
    }
    Word::from_syllables(syllables)
}

fn piece_report(p: &Presentation, lambda: Option<&BigRational>) -> PieceReport {
    let mut occ = closure_occurrences(p);
    occ.sort_by(letter_lex_cmp);
    let n = occ.len();
    let mut report = PieceReport::default();
    if n == 0 {
        return report;
    }
    // In letter-lexicographic order the longest common prefix of any pair is
    // realized between sorted neighbors, so adjacent scans find both the
    // piece set and the per-element maxima.
    let mut max_for: Vec<BigUint> = vec![BigUint::zero(); n];
    for i in 0..n.saturating_sub(1) {
        let l = common_prefix_len(&occ[i], &occ[i + 1]);
        if l.is_zero() {
            continue;
        }
        report.pieces.insert(prefix_word(&occ[i], &l));
        if l > max_for[i] {
            max_for[i] = l.clone();
        }
        if l > max_for[i + 1] {
            max_for[i + 1] = l;
        }
    }
    for (word, max) in occ.into_iter().zip(max_for) {
        let len = word.len();
        let entry = report.per_relator_max.entry(word).or_insert(PieceStat {
            max_piece: BigUint::zero(),
            relator_len: len,
        });
        if max > entry.max_piece {
            entry.max_piece = max;
        }
    }
    if let Some(lambda) = lambda {
        let num = lambda.numer().magnitude();
        let den = lambda.denom().magnitude();
        for (word, stat) in &report.per_relator_max {
            // violated when max_piece >= lambda * relator_len
            if &stat.max_piece * den >= &stat.relator_len * num {
                report
                    .violations
                    .push((word.clone(), prefix_word(word, &stat.max_piece)));
            }
        }
    }
    report
}

/// All pieces of the presentation and the per-element maxima.
pub fn pieces(p: &Presentation) -> PieceReport {
    piece_report(p, None)
}

/// The metric small cancellation check: satisfied when every piece that
/// prefixes a closure element `r` is strictly shorter than `lambda * |r|`.
pub fn check_metric(p: &Presentation, lambda: &BigRational) -> Result<MetricVerdict, ScError> {
    if lambda <= &BigRational::zero() || lambda >= &BigRational::one() {
        return Err(ScError::LambdaOutOfRange);
    }
    let report = piece_report(p, Some(lambda));
    match report.violations.into_iter().next() {
        None => Ok(MetricVerdict::Satisfied),
        Some((relator, piece)) => Ok(MetricVerdict::Violated { relator, piece }),
    }
}

pub fn one_sixth() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(6))
}

struct TrieNode {
    children: Vec<(i32, u32)>,
    count: u32,
}

struct PrefixTrie {
    nodes: Vec<TrieNode>,
}

impl PrefixTrie {
    fn build(words: &[Vec<i32>]) -> Self {
        let mut trie = PrefixTrie {
            nodes: vec![TrieNode {
                children: Vec::new(),
                count: 0,
            }],
        };
        for word in words {
            let mut at = 0usize;
            for &letter in word {
                let next = match trie.nodes[at].children.iter().find(|(l, _)| *l == letter) {
                    Some((_, idx)) => *idx as usize,
                    None => {
                        let idx = trie.nodes.len();
                        trie.nodes.push(TrieNode {
                            children: Vec::new(),
                            count: 0,
                        });
                        trie.nodes[at].children.push((letter, idx as u32));
                        idx
                    }
                };
                trie.nodes[next].count += 1;
                at = next;
            }
        }
        trie
    }

    /// How far a walk from the start of `suffix` stays on nodes shared by at
    /// least two of the inserted words.
    fn shared_prefix_len(&self, suffix: &[i32]) -> usize {
        let mut at = 0usize;
        let mut depth = 0;
        for &letter in suffix {
            match self.nodes[at].children.iter().find(|(l, _)| *l == letter) {
                Some((_, idx)) if self.nodes[*idx as usize].count >= 2 => {
                    at = *idx as usize;
                    depth += 1;
                }
                _ => break,
            }
        }
        depth
    }
}

fn letter_codes(p: &Presentation) -> BTreeMap<Generator, i32> {
    p.generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i as i32 + 1))
        .collect()
}

fn encode(word: &Word, codes: &BTreeMap<Generator, i32>) -> Vec<i32> {
    word.letters()
        .iter()
        .map(|(g, s)| {
            let id = codes[g];
            if *s < 0 {
                -id
            } else {
                id
            }
        })
        .collect()
}

fn decode(letters: &[i32], alphabet: &[Generator]) -> Word {
    let expanded: Vec<(Generator, i8)> = letters
        .iter()
        .map(|&l| {
            let g = alphabet[(l.unsigned_abs() - 1) as usize].clone();
            (g, if l < 0 { -1 } else { 1 })
        })
        .collect();
    Word::from_letters(expanded.iter())
}

/// The non-metric condition: satisfied when no closure element decomposes
/// into fewer than `bound` pieces. Every common initial segment of two
/// occurrences counts as a piece here, so the allowed jumps are closed under
/// taking prefixes.
pub fn check_c(p: &Presentation, bound: usize) -> CVerdict {
    let mut occ = closure_occurrences(p);
    occ.sort_by(letter_lex_cmp);
    let codes = letter_codes(p);
    let encoded: Vec<Vec<i32>> = occ.iter().map(|w| encode(w, &codes)).collect();
    let trie = PrefixTrie::build(&encoded);
    let alphabet = p.generators();
    for (idx, word) in occ.iter().enumerate() {
        if idx > 0 && occ[idx - 1] == *word {
            continue;
        }
        let letters = &encoded[idx];
        let n = letters.len();
        // dist[i]: fewest pieces concatenating to the first i letters
        let mut dist = vec![usize::MAX; n + 1];
        let mut parent = vec![0usize; n + 1];
        dist[0] = 0;
        for i in 0..n {
            if dist[i] == usize::MAX {
                continue;
            }
            let reach = trie.shared_prefix_len(&letters[i..]);
            for j in (i + 1)..=(i + reach).min(n) {
                if dist[i] + 1 < dist[j] {
                    dist[j] = dist[i] + 1;
                    parent[j] = i;
                }
            }
        }
        if dist[n] != usize::MAX && dist[n] < bound {
            let mut cuts = Vec::with_capacity(dist[n]);
            let mut at = n;
            while at > 0 {
                cuts.push((parent[at], at));
                at = parent[at];
            }
            cuts.reverse();
            let decomposition = cuts
                .into_iter()
                .map(|(start, end)| decode(&letters[start..end], alphabet))
                .collect();
            return CVerdict::Violated {
                relator: word.clone(),
                decomposition,
            };
        }
    }
    CVerdict::Satisfied
}

/// A word reducer over a presentation certified to satisfy the metric
/// condition at 1/6. Empty output proves the input trivial; by
/// Greendlinger's lemma a nonempty output proves it nontrivial.
pub struct DehnReducer {
    alphabet: Vec<Generator>,
    codes: BTreeMap<Generator, i32>,
    relators: Vec<Vec<i32>>,
    by_first: HashMap<i32, Vec<usize>>,
}

impl DehnReducer {
    /// Certifies the metric condition at 1/6 and indexes the closure.
    pub fn new(p: &Presentation) -> Result<Self, ScError> {
        match check_metric(p, &one_sixth())? {
            MetricVerdict::Satisfied => {}
            MetricVerdict::Violated { .. } => return Err(ScError::PreconditionFailed),
        }
        let codes = letter_codes(p);
        let mut closure: Vec<Word> = p.symmetric_closure().into_iter().collect();
        closure.sort_by(letter_lex_cmp);
        let relators: Vec<Vec<i32>> = closure.iter().map(|w| encode(w, &codes)).collect();
        let mut by_first: HashMap<i32, Vec<usize>> = HashMap::new();
        for (i, r) in relators.iter().enumerate() {
            if let Some(&first) = r.first() {
                by_first.entry(first).or_default().push(i);
            }
        }
        Ok(DehnReducer {
            alphabet: p.generators().to_vec(),
            codes,
            relators,
            by_first,
        })
    }

    fn encode_input(&self, w: &Word) -> Option<Vec<i32>> {
        let mut out = Vec::new();
        for (g, s) in w.letters() {
            // letters outside the presentation can never match a relator,
            // so reject them up front
            let id = *self.codes.get(&g)?;
            out.push(if s < 0 { -id } else { id });
        }
        Some(out)
    }

    /// Repeatedly: freely reduce, then replace the leftmost longest subword
    /// matching more than half of a closure element by the inverse of the
    /// complementary part. Each step strictly shortens the word.
    pub fn reduce(&self, w: &Word) -> Word {
        let Some(mut letters) = self.encode_input(w) else {
            // foreign generators: only free reduction applies
            return w.reduce();
        };
        free_reduce(&mut letters);
        'outer: loop {
            for i in 0..letters.len() {
                let mut best: Option<(usize, usize)> = None;
                if let Some(cands) = self.by_first.get(&letters[i]) {
                    for &ri in cands {
                        let r = &self.relators[ri];
                        let l = match_len(&letters[i..], r);
                        if 2 * l > r.len() {
                            let better = match best {
                                Some((bl, _)) => l > bl,
                                None => true,
                            };
                            if better {
                                best = Some((l, ri));
                            }
                        }
                    }
                }
                if let Some((l, ri)) = best {
                    let r = &self.relators[ri];
                    let mut next = Vec::with_capacity(letters.len() - l + (r.len() - l));
                    next.extend_from_slice(&letters[..i]);
                    next.extend(r[l..].iter().rev().map(|x| -x));
                    next.extend_from_slice(&letters[i + l..]);
                    free_reduce(&mut next);
                    letters = next;
                    continue 'outer;
                }
            }
            break;
        }
        decode(&letters, &self.alphabet)
    }

    /// Whether some subword of `w` matches more than half of a closure
    /// element, i.e. whether a reduction step would apply.
    pub fn has_majority_subword(&self, w: &Word) -> bool {
        let Some(letters) = self.encode_input(w) else {
            return false;
        };
        for i in 0..letters.len() {
            if let Some(cands) = self.by_first.get(&letters[i]) {
                for &ri in cands {
                    let r = &self.relators[ri];
                    if 2 * match_len(&letters[i..], r) > r.len() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn match_len(suffix: &[i32], relator: &[i32]) -> usize {
    suffix
        .iter()
        .zip(relator.iter())
        .take_while(|(a, b)| a == b)
        .count()
}

fn free_reduce(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// One-shot Dehn reduction; certifies the 1/6 condition on every call. For
/// repeated reductions over one presentation build a [`DehnReducer`].
pub fn dehn_reduce(w: &Word, p: &Presentation) -> Result<Word, ScError> {
    Ok(DehnReducer::new(p)?.reduce(w))
}

/// The presentation `<a, b | mu(s1), mu(s2), mu(k), mu(t)>` carrying the
/// envelope's small cancellation certificate.
pub fn mu_presentation() -> Presentation {
    use crate::constructions::{mu_new, MuLetter};
    let a = Generator::new("a").unwrap();
    let b = Generator::new("b").unwrap();
    let relations = MuLetter::ALL.into_iter().map(mu_new).collect();
    Presentation::new(vec![a, b], relations).expect("fixed presentation is valid")
}
