//! Constructors for the named objects the rest of the crate certifies: the
//! two-letter Thue system with its printed rules, the group presentations B,
//! B' and BE built over a Thue system, the two letter encodings into words on
//! `a` and `b`, the 12-relation presentation R, the deficiency-raising family
//! P_w, and target words for equivalence queries.
//!
//! Two inputs are never fabricated: the distinguished Thue word P and the
//! third rewriting rule (sides of 304 and 608 letters). Both are caller
//! parameters; short stand-ins are fine for testing and are flagged.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::presentations::{Presentation, PresentationError};
use crate::rewriting::{PositiveWord, RewriteError, ThueSystem};
use crate::words::{Generator, Word};

/// Documented letter counts of the unprinted third rule sides.
pub const THIRD_RULE_LENGTHS: (usize, usize) = (304, 608);

/// Documented letter count of the distinguished Thue word P.
pub const P_WORD_LENGTH: usize = 304;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("alpha must be greater than {bound}, got {alpha}")]
    AlphaTooSmall { alpha: u64, bound: u64 },
    #[error("{0} must be injective")]
    NotInjective(&'static str),
    #[error("parameter map {0} must have one value per rule")]
    WrongParameterLength(&'static str),
    #[error("parameter values must be positive")]
    NonPositiveParameter,
    #[error("letter {0} is not a letter of this construction")]
    UnknownLetter(String),
    #[error("generator name {0} collides with a construction letter")]
    NameClash(String),
    #[error("word must avoid the reserved vertical-edge letter c")]
    ReservedLetter,
}

fn gen(name: &str) -> Generator {
    Generator::new(name).expect("fixed generator name")
}

fn s_letter(i: usize) -> Generator {
    gen(&format!("s{i}"))
}

/// The two-letter Thue system with the printed rewriting rules, plus the
/// optional third rule. The third rule's sides are never guessed: when it is
/// not supplied the system carries only the two printed rules and is flagged
/// incomplete.
pub fn matiyasevich_system(
    third_rule: Option<(PositiveWord, PositiveWord)>,
) -> Result<MatiyasevichSystem, ConstructionError> {
    let alphabet = vec![s_letter(1), s_letter(2)];
    let mut rules = vec![
        ("s1 s1 s2 s1 s2".parse().unwrap(), "s2 s1 s1".parse().unwrap()),
        ("s1 s1 s2 s2".parse().unwrap(), "s2 s1 s1".parse().unwrap()),
    ];
    let mut warning = None;
    let incomplete = third_rule.is_none();
    if let Some((lhs, rhs)) = third_rule {
        if (lhs.len(), rhs.len()) != THIRD_RULE_LENGTHS {
            warning = Some(format!(
                "third rule has side lengths ({}, {}); the documented rule has {:?}",
                lhs.len(),
                rhs.len(),
                THIRD_RULE_LENGTHS
            ));
        }
        rules.push((lhs, rhs));
    }
    let system = ThueSystem::new(alphabet, rules)?;
    Ok(MatiyasevichSystem {
        system,
        incomplete,
        length_warning: warning,
    })
}

/// A constructed two-letter Thue system together with build metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatiyasevichSystem {
    pub system: ThueSystem,
    /// True when the third rule was not supplied.
    pub incomplete: bool,
    /// Set when a supplied third rule does not have the documented lengths.
    pub length_warning: Option<String>,
}

/// Whether a candidate for the distinguished word P has the documented
/// letter count. Stand-ins of other lengths are fine for testing.
pub fn p_word_is_standard(p: &PositiveWord) -> bool {
    p.len() == P_WORD_LENGTH
}

/// Exponent parameters for the relation family replacing the uniform
/// `d^i F_i e^i c = c d^i E_i e^i`: each rule i gets
/// `d^g(i) F_i e^h(i) c = c d^g'(i) E_i e^h'(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B4Params {
    g: Vec<u64>,
    h: Vec<u64>,
    g_prime: Vec<u64>,
    h_prime: Vec<u64>,
    alpha: u64,
}

impl B4Params {
    /// Each map must be injective with positive values and `alpha` must be
    /// strictly larger than every attained value.
    pub fn new(
        g: Vec<u64>,
        h: Vec<u64>,
        g_prime: Vec<u64>,
        h_prime: Vec<u64>,
        alpha: u64,
    ) -> Result<Self, ConstructionError> {
        let rules = g.len();
        for (name, map) in [
            ("g", &g),
            ("h", &h),
            ("g'", &g_prime),
            ("h'", &h_prime),
        ] {
            if map.len() != rules {
                return Err(ConstructionError::WrongParameterLength(name));
            }
            if map.iter().any(|&v| v == 0) {
                return Err(ConstructionError::NonPositiveParameter);
            }
            let mut sorted = map.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != map.len() {
                return Err(ConstructionError::NotInjective(name));
            }
            if let Some(&max) = map.iter().max() {
                if alpha <= max {
                    return Err(ConstructionError::AlphaTooSmall { alpha, bound: max });
                }
            }
        }
        Ok(B4Params {
            g,
            h,
            g_prime,
            h_prime,
            alpha,
        })
    }

    /// Identity maps `g = h = g' = h' = id` on `1..=rules`.
    pub fn identity(rules: usize, alpha: u64) -> Result<Self, ConstructionError> {
        let id: Vec<u64> = (1..=rules as u64).collect();
        B4Params::new(id.clone(), id.clone(), id.clone(), id, alpha)
    }

    /// The asymmetric exponent scheme used by presentation R's middle
    /// relations: g = h = (1, 3, 4), g' = (2, 3, 4), h' = (1, 3, 5).
    pub fn r_exponents() -> Self {
        B4Params::new(vec![1, 3, 4], vec![1, 3, 4], vec![2, 3, 4], vec![1, 3, 5], 6)
            .expect("fixed parameters are valid")
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn rules(&self) -> usize {
        self.g.len()
    }
}

/// Relator for the equation `lhs = rhs`: `reduce(lhs rhs^-1)`.
fn relator(lhs: Word, rhs: Word) -> Word {
    lhs.concat(&rhs.inverse()).reduce()
}

fn power(name: &str, exp: i64) -> Word {
    Word::power(gen(name), exp)
}

struct BorisovLetters {
    alphabet: Vec<Generator>,
    c: Word,
    d: Generator,
    e: Generator,
    k: Generator,
    t: Generator,
}

fn borisov_letters(system: &ThueSystem) -> Result<BorisovLetters, ConstructionError> {
    let fixed = ["c", "d", "e", "k", "t"];
    for letter in system.alphabet() {
        if fixed.contains(&letter.name()) {
            return Err(ConstructionError::NameClash(letter.name().to_string()));
        }
    }
    Ok(BorisovLetters {
        alphabet: system.alphabet().to_vec(),
        c: Word::generator(gen("c")),
        d: gen("d"),
        e: gen("e"),
        k: gen("k"),
        t: gen("t"),
    })
}

/// The presentation on letters `c, d, e, k, t, s_1, ..., s_N` whose word
/// problem simulates the given Thue system, with uniform exponents:
/// commutation relations for `d`, `e`, `c` against the Thue letters, one
/// relation `d^i F_i e^i c = c d^i E_i e^i` per rule, commutators of `c, d`
/// with `t` and of `c, e` with `k`, and the trailing relation built from P.
pub fn borisov_b(
    system: &ThueSystem,
    p_word: &PositiveWord,
    alpha: u64,
) -> Result<Presentation, ConstructionError> {
    let rules = system.rules().len() as u64;
    if alpha <= rules {
        return Err(ConstructionError::AlphaTooSmall { alpha, bound: rules });
    }
    let params = B4Params::identity(system.rules().len(), alpha)?;
    borisov_family(system, p_word, &params)
}

/// As [`borisov_b`] but with per-rule exponents from `params` in the middle
/// relation family.
pub fn borisov_b_prime(
    system: &ThueSystem,
    p_word: &PositiveWord,
    params: &B4Params,
) -> Result<Presentation, ConstructionError> {
    if params.rules() != system.rules().len() {
        return Err(ConstructionError::WrongParameterLength("g"));
    }
    borisov_family(system, p_word, params)
}

fn borisov_family(
    system: &ThueSystem,
    p_word: &PositiveWord,
    params: &B4Params,
) -> Result<Presentation, ConstructionError> {
    for letter in p_word.letters() {
        if !system.alphabet().contains(letter) {
            return Err(ConstructionError::UnknownLetter(letter.name().to_string()));
        }
    }
    let lt = borisov_letters(system)?;
    let alpha = params.alpha as i64;
    let mut relations = Vec::new();
    // d^alpha s = s d
    for s in &lt.alphabet {
        let s = Word::generator(s.clone());
        relations.push(relator(
            power("d", alpha).concat(&s),
            s.concat(&Word::generator(lt.d.clone())),
        ));
    }
    // e s = s e^alpha
    for s in &lt.alphabet {
        let s = Word::generator(s.clone());
        relations.push(relator(
            Word::generator(lt.e.clone()).concat(&s),
            s.concat(&power("e", alpha)),
        ));
    }
    // s c = c s
    for s in &lt.alphabet {
        let s = Word::generator(s.clone());
        relations.push(relator(s.concat(&lt.c), lt.c.concat(&s)));
    }
    // d^g(i) F_i e^h(i) c = c d^g'(i) E_i e^h'(i)
    for (i, (f, e)) in system.rules().iter().enumerate() {
        let lhs = Word::product([
            &power("d", params.g[i] as i64),
            &f.to_word(),
            &power("e", params.h[i] as i64),
            &lt.c,
        ]);
        let rhs = Word::product([
            &lt.c,
            &power("d", params.g_prime[i] as i64),
            &e.to_word(),
            &power("e", params.h_prime[i] as i64),
        ]);
        relations.push(relator(lhs, rhs));
    }
    let c = lt.c.clone();
    let d = Word::generator(lt.d.clone());
    let e = Word::generator(lt.e.clone());
    let k = Word::generator(lt.k.clone());
    let t = Word::generator(lt.t.clone());
    // ct = tc, dt = td, ck = kc, ek = ke
    relations.push(relator(c.concat(&t), t.concat(&c)));
    relations.push(relator(d.concat(&t), t.concat(&d)));
    relations.push(relator(c.concat(&k), k.concat(&c)));
    relations.push(relator(e.concat(&k), k.concat(&e)));
    // P^-1 t P k = k P^-1 t P
    let p = p_word.to_word();
    let p_inv = p.inverse();
    let conjugated = Word::product([&p_inv, &t, &p]);
    relations.push(relator(
        conjugated.concat(&k),
        k.concat(&conjugated),
    ));

    let mut generators = vec![gen("c"), gen("d"), gen("e"), gen("k"), gen("t")];
    generators.extend(lt.alphabet.iter().cloned());
    Ok(Presentation::new(generators, relations)?)
}

/// The original two-letter encoding: the i-th letter among
/// `s_1, ..., s_N, k, t` becomes
/// `a^-1 b^-1 a b^-i a b^-1 a^-1 b^i a^-1 b a b^-i a b a^-1 b^i`.
/// Both exponent sums are zero.
pub fn borisov_mu_original(index: u64) -> Word {
    assert!(index >= 1, "letter index starts at 1");
    let i = BigInt::from(index);
    let a = gen("a");
    let b = gen("b");
    let one = BigInt::from(1);
    let syllables = vec![
        (a.clone(), -&one),
        (b.clone(), -&one),
        (a.clone(), one.clone()),
        (b.clone(), -&i),
        (a.clone(), one.clone()),
        (b.clone(), -&one),
        (a.clone(), -&one),
        (b.clone(), i.clone()),
        (a.clone(), -&one),
        (b.clone(), one.clone()),
        (a.clone(), one.clone()),
        (b.clone(), -&i),
        (a.clone(), one.clone()),
        (b.clone(), one.clone()),
        (a.clone(), -&one),
        (b.clone(), i.clone()),
    ];
    Word::from_syllables(syllables)
}

/// The letters that receive an encoding in the two-generator presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuLetter {
    S1,
    S2,
    K,
    T,
}

impl MuLetter {
    pub const ALL: [MuLetter; 4] = [MuLetter::S1, MuLetter::S2, MuLetter::K, MuLetter::T];

    fn index(self) -> i64 {
        match self {
            MuLetter::S1 => 1,
            MuLetter::S2 => 2,
            MuLetter::K => 3,
            MuLetter::T => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MuLetter::S1 => "s1",
            MuLetter::S2 => "s2",
            MuLetter::K => "k",
            MuLetter::T => "t",
        }
    }
}

/// The imbalanced encoding used by presentation R. The i-th letter (i from 1
/// for s1 up to 4 for t) becomes the 16-syllable word
/// `a^n b^n a^-(n+1) b^-(n+1) a^-(n+2) b^-(n+2) a^(n+3) b^(n+3)
///  a^(n+4) b^(n+4) a^-(n+5) b^-(n+5) a^-(n+6) b^-(n+6) a^(n+8) b^(n+8)`
/// with `n = 10 i`. Each of `a` and `b` has exponent sum 1, and the letter
/// length is `58 + 160 i`.
pub fn mu_new(letter: MuLetter) -> Word {
    let n = 10 * letter.index();
    let a = gen("a");
    let b = gen("b");
    let signs_offsets: [(i64, i64); 8] = [
        (1, 0),
        (-1, 1),
        (-1, 2),
        (1, 3),
        (1, 4),
        (-1, 5),
        (-1, 6),
        (1, 8),
    ];
    let mut syllables = Vec::with_capacity(16);
    for (sign, offset) in signs_offsets {
        let e = BigInt::from(sign * (n + offset));
        syllables.push((a.clone(), e.clone()));
        syllables.push((b.clone(), e));
    }
    Word::from_syllables(syllables)
}

/// Applies [`mu_new`] letterwise to a positive word on `s1, s2`.
pub fn mu_new_word(word: &PositiveWord) -> Result<Word, ConstructionError> {
    let mut parts = Vec::with_capacity(word.len());
    for letter in word.letters() {
        let mu = match letter.name() {
            "s1" => mu_new(MuLetter::S1),
            "s2" => mu_new(MuLetter::S2),
            other => return Err(ConstructionError::UnknownLetter(other.to_string())),
        };
        parts.push(mu);
    }
    Ok(Word::product(parts.iter()).reduce())
}

/// The presentation on `a, b, c, d, e` obtained from [`borisov_b`] by
/// encoding `s_1, ..., s_N, k, t` through [`borisov_mu_original`] (indices
/// in that order) and replacing their commutators with `c` by the two
/// relations `ac = ca` and `bc = cb`.
pub fn borisov_be(
    system: &ThueSystem,
    p_word: &PositiveWord,
    alpha: u64,
) -> Result<Presentation, ConstructionError> {
    let rules = system.rules().len() as u64;
    if alpha <= rules {
        return Err(ConstructionError::AlphaTooSmall { alpha, bound: rules });
    }
    for letter in p_word.letters() {
        if !system.alphabet().contains(letter) {
            return Err(ConstructionError::UnknownLetter(letter.name().to_string()));
        }
    }
    let lt = borisov_letters(system)?;
    let n = lt.alphabet.len() as u64;
    let mu_index: BTreeMap<Generator, u64> = lt
        .alphabet
        .iter()
        .cloned()
        .zip(1..)
        .collect();
    let mu_of = |w: &PositiveWord| -> Word {
        let parts: Vec<Word> = w
            .letters()
            .iter()
            .map(|l| borisov_mu_original(mu_index[l]))
            .collect();
        Word::product(parts.iter()).reduce()
    };
    let mu_k = borisov_mu_original(n + 1);
    let mu_t = borisov_mu_original(n + 2);
    let alpha_i = alpha as i64;

    let mut relations = Vec::new();
    for s in &lt.alphabet {
        let mu_s = borisov_mu_original(mu_index[s]);
        relations.push(relator(
            power("d", alpha_i).concat(&mu_s),
            mu_s.concat(&Word::generator(lt.d.clone())),
        ));
    }
    for s in &lt.alphabet {
        let mu_s = borisov_mu_original(mu_index[s]);
        relations.push(relator(
            Word::generator(lt.e.clone()).concat(&mu_s),
            mu_s.concat(&power("e", alpha_i)),
        ));
    }
    for (i, (f, e)) in system.rules().iter().enumerate() {
        let exp = (i + 1) as i64;
        let lhs = Word::product([&power("d", exp), &mu_of(f), &power("e", exp), &lt.c]);
        let rhs = Word::product([&lt.c, &power("d", exp), &mu_of(e), &power("e", exp)]);
        relations.push(relator(lhs, rhs));
    }
    let c = lt.c.clone();
    let d = Word::generator(lt.d.clone());
    let e = Word::generator(lt.e.clone());
    relations.push(relator(d.concat(&mu_t), mu_t.concat(&d)));
    relations.push(relator(e.concat(&mu_k), mu_k.concat(&e)));
    let mu_p = mu_of(p_word);
    let conjugated = Word::product([&mu_p.inverse(), &mu_t, &mu_p]).reduce();
    relations.push(relator(conjugated.concat(&mu_k), mu_k.concat(&conjugated)));
    let a = Word::generator(gen("a"));
    let b = Word::generator(gen("b"));
    relations.push(relator(a.concat(&c), c.concat(&a)));
    relations.push(relator(b.concat(&c), c.concat(&b)));

    let generators = vec![gen("a"), gen("b"), gen("c"), gen("d"), gen("e")];
    Ok(Presentation::new(generators, relations)?)
}

/// Presentation R plus build metadata; see [`RBuilder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationR {
    pub presentation: Presentation,
    /// One label per relation, in order.
    pub relation_labels: Vec<String>,
    pub includes_third_rule: bool,
    pub includes_p_word: bool,
    /// True when the supplied P word is a stand-in (wrong letter count).
    pub nonstandard_p: bool,
}

/// Builds presentation R on `a, b, c, d, e`, optionally omitting the pieces
/// that need the unprinted inputs: the relation built from the third Thue
/// rule, and the trailing relation built from P.
pub struct RBuilder {
    alpha: u64,
    p_word: Option<PositiveWord>,
    third_rule: Option<(PositiveWord, PositiveWord)>,
}

impl RBuilder {
    pub fn new(alpha: u64) -> Self {
        RBuilder {
            alpha,
            p_word: None,
            third_rule: None,
        }
    }

    pub fn p_word(mut self, p: PositiveWord) -> Self {
        self.p_word = Some(p);
        self
    }

    pub fn third_rule(mut self, f3: PositiveWord, e3: PositiveWord) -> Self {
        self.third_rule = Some((f3, e3));
        self
    }

    pub fn build(&self) -> Result<PresentationR, ConstructionError> {
        if self.alpha <= 5 {
            return Err(ConstructionError::AlphaTooSmall {
                alpha: self.alpha,
                bound: 5,
            });
        }
        let alpha = self.alpha as i64;
        let mu_s1 = mu_new(MuLetter::S1);
        let mu_s2 = mu_new(MuLetter::S2);
        let mu_k = mu_new(MuLetter::K);
        let mu_t = mu_new(MuLetter::T);
        let c = Word::generator(gen("c"));
        let d = Word::generator(gen("d"));
        let e = Word::generator(gen("e"));

        let f1 = mu_new_word(&"s1 s1 s2 s1 s2".parse().unwrap())?;
        let e1 = mu_new_word(&"s2 s1 s1".parse().unwrap())?;
        let f2 = mu_new_word(&"s1 s1 s2 s2".parse().unwrap())?;
        let e2 = e1.clone();

        let mut relations = Vec::new();
        let mut labels = Vec::new();
        for (i, mu_s) in [(1, &mu_s1), (2, &mu_s2)] {
            relations.push(relator(
                power("d", alpha).concat(mu_s),
                mu_s.concat(&d),
            ));
            labels.push(format!("R1.{i}"));
        }
        for (i, mu_s) in [(1, &mu_s1), (2, &mu_s2)] {
            relations.push(relator(e.concat(mu_s), mu_s.concat(&power("e", alpha))));
            labels.push(format!("R2.{i}"));
        }
        // d mu(F1) e c = c d^2 mu(E1) e
        relations.push(relator(
            Word::product([&d, &f1, &e, &c]),
            Word::product([&c, &power("d", 2), &e1, &e]),
        ));
        labels.push("R3.1".to_string());
        // d^3 mu(F2) e^3 c = c d^3 mu(E2) e^3
        relations.push(relator(
            Word::product([&power("d", 3), &f2, &power("e", 3), &c]),
            Word::product([&c, &power("d", 3), &e2, &power("e", 3)]),
        ));
        labels.push("R3.2".to_string());
        if let Some((f3_word, e3_word)) = &self.third_rule {
            let f3 = mu_new_word(f3_word)?;
            let e3 = mu_new_word(e3_word)?;
            // d^4 mu(F3) e^4 c = c d^4 mu(E3) e^5
            relations.push(relator(
                Word::product([&power("d", 4), &f3, &power("e", 4), &c]),
                Word::product([&c, &power("d", 4), &e3, &power("e", 5)]),
            ));
            labels.push("R3.3".to_string());
        }
        relations.push(relator(d.concat(&mu_t), mu_t.concat(&d)));
        labels.push("R4".to_string());
        relations.push(relator(e.concat(&mu_k), mu_k.concat(&e)));
        labels.push("R5".to_string());
        if let Some(p) = &self.p_word {
            let mu_p = mu_new_word(p)?;
            let conjugated = Word::product([&mu_p.inverse(), &mu_t, &mu_p]).reduce();
            relations.push(relator(conjugated.concat(&mu_k), mu_k.concat(&conjugated)));
            labels.push("R6".to_string());
        }
        let a = Word::generator(gen("a"));
        let b = Word::generator(gen("b"));
        relations.push(relator(a.concat(&c), c.concat(&a)));
        labels.push("R7".to_string());
        relations.push(relator(b.concat(&c), c.concat(&b)));
        labels.push("R8".to_string());

        let generators = vec![gen("a"), gen("b"), gen("c"), gen("d"), gen("e")];
        Ok(PresentationR {
            presentation: Presentation::new(generators, relations)?,
            relation_labels: labels,
            includes_third_rule: self.third_rule.is_some(),
            includes_p_word: self.p_word.is_some(),
            nonstandard_p: self
                .p_word
                .as_ref()
                .map(|p| !p_word_is_standard(p))
                .unwrap_or(false),
        })
    }
}

/// The full 12-relation presentation R. The word P and the third-rule sides
/// F3, E3 are required inputs.
pub fn presentation_r(
    p_word: &PositiveWord,
    alpha: u64,
    f3: &PositiveWord,
    e3: &PositiveWord,
) -> Result<Presentation, ConstructionError> {
    Ok(RBuilder::new(alpha)
        .p_word(p_word.clone())
        .third_rule(f3.clone(), e3.clone())
        .build()?
        .presentation)
}

/// Which printed form of the deficiency-raising relations to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PwVariant {
    /// The relation exponents exactly as printed: the third relation uses
    /// the bare word `w`, the last family pairs `alpha^(i-3)` on the left
    /// with `gamma^-(3+i)` on the right.
    Literal,
    /// The third relation carries the commutator `[w, beta]` and the last
    /// family uses `alpha^-(3+i)`, mirroring the right-hand exponents.
    Symmetric,
}

impl PwVariant {
    pub fn name(self) -> &'static str {
        match self {
            PwVariant::Literal => "literal",
            PwVariant::Symmetric => "symmetric",
        }
    }
}

/// The deficiency-raising family: adds generators `alpha, beta, gamma` to a
/// base presentation and relations tying them to a chosen word `w` and to
/// extra relators `rprime`. The result has `n + 3` generators and
/// `m + m' + 3` relations, so its deficiency is `deficiency(base) + m'`.
pub fn adian_rabin_p_w(
    base: &Presentation,
    rprime: &[Word],
    w: &Word,
    variant: PwVariant,
) -> Result<Presentation, ConstructionError> {
    let al = gen("alpha");
    let be = gen("beta");
    let ga = gen("gamma");
    for fresh in [&al, &be, &ga] {
        if base.generators().contains(fresh) {
            return Err(ConstructionError::NameClash(fresh.name().to_string()));
        }
    }
    let check = |word: &Word| -> Result<(), ConstructionError> {
        for g in word.generators() {
            if !base.generators().contains(g) {
                return Err(ConstructionError::UnknownLetter(g.name().to_string()));
            }
        }
        Ok(())
    };
    check(w)?;
    for r in rprime {
        check(r)?;
    }

    let a = |e: i64| Word::power(al.clone(), e);
    let b = |e: i64| Word::power(be.clone(), e);
    let g = |e: i64| Word::power(ga.clone(), e);

    let mut relations: Vec<Word> = base.relations().to_vec();
    // alpha^-1 beta alpha = gamma^-1 beta^-1 gamma beta gamma
    relations.push(relator(
        Word::product([&a(-1), &b(1), &a(1)]),
        Word::product([&g(-1), &b(-1), &g(1), &b(1), &g(1)]),
    ));
    // alpha^-2 beta^-1 alpha beta alpha^2 = gamma^-2 beta^-1 gamma beta gamma^2
    relations.push(relator(
        Word::product([&a(-2), &b(-1), &a(1), &b(1), &a(2)]),
        Word::product([&g(-2), &b(-1), &g(1), &b(1), &g(2)]),
    ));
    // third relation: alpha^-3 w alpha^-3 = gamma^-3 beta gamma^3, with the
    // commutator [w, beta] in place of w under the symmetric variant
    let middle = match variant {
        PwVariant::Literal => w.clone(),
        PwVariant::Symmetric => {
            Word::product([&w.inverse(), &b(-1), w, &b(1)]).reduce()
        }
    };
    relations.push(relator(
        Word::product([&a(-3), &middle, &a(-3)]),
        Word::product([&g(-3), &b(1), &g(3)]),
    ));
    // one relation per extra relator r'_i
    for (i, r) in rprime.iter().enumerate() {
        let i = (i + 1) as i64;
        let left_exp = match variant {
            PwVariant::Literal => i - 3,
            PwVariant::Symmetric => -(3 + i),
        };
        relations.push(relator(
            Word::product([&a(left_exp), r, &b(1), &a(3 + i)]),
            Word::product([&g(-(3 + i)), &b(1), &g(3 + i)]),
        ));
    }

    let mut generators = base.generators().to_vec();
    generators.extend([al, be, ga]);
    Ok(Presentation::new(generators, relations)?)
}

/// The target word asking whether the encoded word Q commutes with the
/// encoded letter k after conjugating t:
/// `reduce( mu(Q^-1) mu(t) mu(Q) mu(k) (mu(k) mu(Q^-1) mu(t) mu(Q))^-1 )`.
pub fn target_word(q: &PositiveWord) -> Result<Word, ConstructionError> {
    let mu_q = mu_new_word(q)?;
    let mu_t = mu_new(MuLetter::T);
    let mu_k = mu_new(MuLetter::K);
    let conjugated = Word::product([&mu_q.inverse(), &mu_t, &mu_q]).reduce();
    Ok(relator(conjugated.concat(&mu_k), mu_k.concat(&conjugated)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::Zero;

    fn pw(text: &str) -> PositiveWord {
        text.parse().unwrap()
    }

    fn stand_in_rule3() -> (PositiveWord, PositiveWord) {
        (pw("s2 s2"), pw("s1 s1 s2"))
    }

    #[test]
    fn fragment_has_two_rules_and_is_incomplete() {
        let built = matiyasevich_system(None).unwrap();
        assert!(built.incomplete);
        assert!(built.length_warning.is_none());
        assert_eq!(built.system.rules().len(), 2);
        let (lhs, rhs) = &built.system.rules()[0];
        assert_eq!(lhs, &pw("s1 s1 s2 s1 s2"));
        assert_eq!(rhs, &pw("s2 s1 s1"));
    }

    #[test]
    fn supplied_third_rule_of_wrong_length_warns() {
        let (f3, e3) = stand_in_rule3();
        let built = matiyasevich_system(Some((f3, e3))).unwrap();
        assert!(!built.incomplete);
        assert_eq!(built.system.rules().len(), 3);
        assert!(built.length_warning.is_some());
    }

    #[test]
    fn documented_third_rule_lengths_pass_silently() {
        let s1 = s_letter(1);
        let lhs = PositiveWord::new(vec![s1.clone(); 304]);
        let rhs = PositiveWord::new(vec![s1; 608]);
        let built = matiyasevich_system(Some((lhs, rhs))).unwrap();
        assert!(!built.incomplete);
        assert!(built.length_warning.is_none());
    }

    #[test]
    fn third_rule_letters_must_be_s1_s2() {
        let bad = PositiveWord::new(vec![gen("x")]);
        assert!(matiyasevich_system(Some((bad, pw("s1")))).is_err());
    }

    #[test]
    fn mu_new_lengths_match_58_plus_160i() {
        let expected = [218u32, 378, 538, 698];
        for (letter, len) in MuLetter::ALL.into_iter().zip(expected) {
            assert_eq!(mu_new(letter).len(), BigUint::from(len));
        }
    }

    #[test]
    fn mu_new_exponent_sums_are_one() {
        for letter in MuLetter::ALL {
            let word = mu_new(letter);
            assert_eq!(word.exponent_sum(&gen("a")), BigInt::from(1));
            assert_eq!(word.exponent_sum(&gen("b")), BigInt::from(1));
        }
    }

    #[test]
    fn mu_new_words_are_cyclically_reduced() {
        for letter in MuLetter::ALL {
            assert!(mu_new(letter).is_cyclically_reduced());
        }
    }

    #[test]
    fn mu_s1_matches_printed_word() {
        let expected: Word =
            "a^10 b^10 a^-11 b^-11 a^-12 b^-12 a^13 b^13 a^14 b^14 a^-15 b^-15 a^-16 b^-16 a^18 b^18"
                .parse()
                .unwrap();
        assert_eq!(mu_new(MuLetter::S1), expected);
    }

    #[test]
    fn killing_a_collapses_mu_to_b() {
        use std::collections::BTreeMap;
        let mut map = BTreeMap::new();
        map.insert(gen("a"), Word::identity());
        map.insert(gen("b"), Word::generator(gen("b")));
        for letter in [MuLetter::S1, MuLetter::S2] {
            assert_eq!(
                mu_new(letter).substitute(&map).unwrap(),
                Word::generator(gen("b"))
            );
        }
    }

    #[test]
    fn original_encoding_has_zero_exponent_sums() {
        for i in 1..=10 {
            let word = borisov_mu_original(i);
            assert!(word.exponent_sum(&gen("a")).is_zero());
            assert!(word.exponent_sum(&gen("b")).is_zero());
        }
    }

    #[test]
    fn original_encoding_length_is_12_plus_4i() {
        for i in 1..=10u64 {
            assert_eq!(borisov_mu_original(i).len(), BigUint::from(12 + 4 * i));
        }
    }

    #[test]
    fn original_encoding_is_reduced_sixteen_syllables() {
        let word = borisov_mu_original(3);
        assert!(word.is_reduced());
        assert_eq!(word.syllables().len(), 16);
    }

    fn full_system() -> ThueSystem {
        let (f3, e3) = stand_in_rule3();
        matiyasevich_system(Some((f3, e3))).unwrap().system
    }

    #[test]
    fn borisov_b_counts_on_three_rule_system() {
        let p = borisov_b(&full_system(), &pw("s1 s2 s1 s2"), 4).unwrap();
        assert_eq!(p.generators().len(), 7);
        assert_eq!(p.relations().len(), 14);
    }

    #[test]
    fn borisov_b_one_letter_no_rules() {
        let system = ThueSystem::new(vec![s_letter(1)], vec![]).unwrap();
        let p = borisov_b(&system, &pw("s1"), 1).unwrap();
        assert_eq!(p.generators().len(), 6);
        assert_eq!(p.relations().len(), 8);
    }

    #[test]
    fn borisov_b_rejects_small_alpha() {
        assert!(matches!(
            borisov_b(&full_system(), &pw("s1"), 3),
            Err(ConstructionError::AlphaTooSmall { alpha: 3, bound: 3 })
        ));
    }

    #[test]
    fn borisov_b_dt_commutator_relator() {
        let p = borisov_b(&full_system(), &pw("s1"), 4).unwrap();
        // relation order: 2x B1, 2x B2, 2x B3, 3x B4, then ct, dt, ck, ek, P-relation
        let dt = &p.relations()[10];
        assert_eq!(dt, &"d t d^-1 t^-1".parse::<Word>().unwrap());
    }

    #[test]
    fn b_prime_with_identity_params_equals_b() {
        let system = full_system();
        let p_word = pw("s1 s2");
        let alpha = 7;
        let b = borisov_b(&system, &p_word, alpha).unwrap();
        let params = B4Params::identity(3, alpha).unwrap();
        let bp = borisov_b_prime(&system, &p_word, &params).unwrap();
        assert_eq!(b, bp);
    }

    #[test]
    fn b4_params_validation() {
        assert!(B4Params::new(vec![1, 1], vec![1, 2], vec![1, 2], vec![1, 2], 3).is_err());
        assert!(B4Params::new(vec![1, 2], vec![1, 2], vec![1, 2], vec![1, 2], 2).is_err());
        assert!(B4Params::new(vec![0], vec![1], vec![1], vec![1], 2).is_err());
        let r = B4Params::r_exponents();
        assert_eq!(r.alpha(), 6);
        assert_eq!(r.rules(), 3);
    }

    #[test]
    fn borisov_be_counts_and_commutator() {
        let p = borisov_be(&full_system(), &pw("s1 s2 s1 s2"), 4).unwrap();
        assert_eq!(p.generators().len(), 5);
        assert_eq!(p.relations().len(), 12);
        // ac = ca is the second-to-last relation
        let ac = &p.relations()[10];
        assert_eq!(ac, &"a c a^-1 c^-1".parse::<Word>().unwrap());
    }

    #[test]
    fn borisov_be_c_relators_have_zero_c_sum() {
        let p = borisov_be(&full_system(), &pw("s1 s2"), 4).unwrap();
        let c = gen("c");
        for r in p.relations() {
            if r.generators().contains(&c) {
                assert!(r.exponent_sum(&c).is_zero(), "relator {r}");
            }
        }
    }

    #[test]
    fn presentation_r_counts_and_deficiency() {
        let (f3, e3) = stand_in_rule3();
        let p = presentation_r(&pw("s1 s2 s1 s2"), 6, &f3, &e3).unwrap();
        assert_eq!(p.generators().len(), 5);
        assert_eq!(p.relations().len(), 12);
        assert_eq!(p.deficiency(), 7);
    }

    #[test]
    fn presentation_r_rejects_alpha_five() {
        let (f3, e3) = stand_in_rule3();
        assert!(matches!(
            presentation_r(&pw("s1"), 5, &f3, &e3),
            Err(ConstructionError::AlphaTooSmall { alpha: 5, bound: 5 })
        ));
    }

    #[test]
    fn presentation_r_first_middle_relator_shape() {
        let (f3, e3) = stand_in_rule3();
        let p = presentation_r(&pw("s1"), 6, &f3, &e3).unwrap();
        let f1 = mu_new_word(&pw("s1 s1 s2 s1 s2")).unwrap();
        let e1 = mu_new_word(&pw("s2 s1 s1")).unwrap();
        let d = Word::generator(gen("d"));
        let e = Word::generator(gen("e"));
        let c = Word::generator(gen("c"));
        let expected = Word::product([
            &d,
            &f1,
            &e,
            &c,
            &e.inverse(),
            &e1.inverse(),
            &Word::power(gen("d"), -2),
            &c.inverse(),
        ])
        .reduce();
        assert_eq!(p.relations()[4], expected.cyclic_reduce());
    }

    #[test]
    fn presentation_r_c_relators_have_zero_c_sum() {
        let (f3, e3) = stand_in_rule3();
        let p = presentation_r(&pw("s1 s2 s1 s2"), 6, &f3, &e3).unwrap();
        let c = gen("c");
        for r in p.relations() {
            if r.generators().contains(&c) {
                assert!(r.exponent_sum(&c).is_zero(), "relator {r}");
            }
        }
    }

    #[test]
    fn r_builder_flags_gated_pieces() {
        let partial = RBuilder::new(6).build().unwrap();
        assert!(!partial.includes_third_rule);
        assert!(!partial.includes_p_word);
        assert_eq!(partial.presentation.relations().len(), 10);
        assert_eq!(partial.relation_labels.len(), 10);
        let (f3, e3) = stand_in_rule3();
        let full = RBuilder::new(6)
            .p_word(pw("s1 s2 s1 s2"))
            .third_rule(f3, e3)
            .build()
            .unwrap();
        assert!(full.nonstandard_p);
        assert_eq!(full.relation_labels.len(), 12);
        assert_eq!(
            full.relation_labels,
            vec![
                "R1.1", "R1.2", "R2.1", "R2.2", "R3.1", "R3.2", "R3.3", "R4", "R5", "R6",
                "R7", "R8"
            ]
        );
    }

    fn presentation_r_default() -> Presentation {
        let (f3, e3) = stand_in_rule3();
        presentation_r(&pw("s1 s2 s1 s2"), 6, &f3, &e3).unwrap()
    }

    #[test]
    fn p_w_counts_and_deficiency_nine() {
        let base = presentation_r_default();
        let rprime: Vec<Word> = vec!["a".parse().unwrap(), "c".parse().unwrap()];
        let w: Word = "a b^-1 a".parse().unwrap();
        for variant in [PwVariant::Literal, PwVariant::Symmetric] {
            let pw_pres = adian_rabin_p_w(&base, &rprime, &w, variant).unwrap();
            assert_eq!(pw_pres.generators().len(), 8);
            assert_eq!(pw_pres.relations().len(), 17);
            assert_eq!(pw_pres.deficiency(), 9);
        }
    }

    #[test]
    fn p_w_first_added_relation_is_the_printed_relator() {
        let base = presentation_r_default();
        let w: Word = "a".parse().unwrap();
        let pw_pres = adian_rabin_p_w(&base, &[], &w, PwVariant::Literal).unwrap();
        assert_eq!(pw_pres.relations().len(), base.relations().len() + 3);
        let first_added = &pw_pres.relations()[base.relations().len()];
        let expected: Word = "alpha^-1 beta alpha gamma^-1 beta^-1 gamma^-1 beta gamma"
            .parse()
            .unwrap();
        assert_eq!(first_added, &expected.cyclic_reduce());
    }

    #[test]
    fn p_w_empty_rprime_adds_three_relations() {
        let base = presentation_r_default();
        let w: Word = "b".parse().unwrap();
        let pw_pres = adian_rabin_p_w(&base, &[], &w, PwVariant::Literal).unwrap();
        assert_eq!(pw_pres.relations().len(), 15);
    }

    #[test]
    fn p_w_variants_differ_in_exponents() {
        let base = presentation_r_default();
        let rprime: Vec<Word> = vec!["a".parse().unwrap()];
        let w: Word = "b".parse().unwrap();
        let lit = adian_rabin_p_w(&base, &rprime, &w, PwVariant::Literal).unwrap();
        let sym = adian_rabin_p_w(&base, &rprime, &w, PwVariant::Symmetric).unwrap();
        let m = base.relations().len();
        // literal: alpha^(1-3) = alpha^-2 on the left of the r' relation
        let lit_rel = &lit.relations()[m + 3];
        let sym_rel = &sym.relations()[m + 3];
        assert_eq!(lit_rel.syllables()[0].1, BigInt::from(-2));
        assert_eq!(sym_rel.syllables()[0].1, BigInt::from(-4));
        // literal third relation carries bare w; symmetric carries [w, beta]
        assert_ne!(lit.relations()[m + 2], sym.relations()[m + 2]);
    }

    #[test]
    fn target_word_of_empty_q() {
        let t = mu_new(MuLetter::T);
        let k = mu_new(MuLetter::K);
        let expected = Word::product([&t, &k, &t.inverse(), &k.inverse()]).reduce();
        assert_eq!(target_word(&PositiveWord::empty()).unwrap(), expected);
    }

    #[test]
    fn target_words_have_zero_exponent_sums() {
        // all 14 nonempty words over {s1, s2} of length at most 3
        let letters = ["s1", "s2"];
        let mut qs: Vec<String> = Vec::new();
        for a in letters {
            qs.push(a.to_string());
            for b in letters {
                qs.push(format!("{a} {b}"));
                for c in letters {
                    qs.push(format!("{a} {b} {c}"));
                }
            }
        }
        assert_eq!(qs.len(), 14);
        for q in qs {
            let word = target_word(&pw(&q)).unwrap();
            assert!(word.exponent_sum(&gen("a")).is_zero(), "q = {q}");
            assert!(word.exponent_sum(&gen("b")).is_zero(), "q = {q}");
        }
    }

    #[test]
    fn target_word_of_single_letter_is_nonempty() {
        let word = target_word(&pw("s1")).unwrap();
        assert!(!word.is_identity());
    }
}
