//! The end-to-end construction chain as one deterministic, reproducible
//! report: build the Thue system and presentation R, certify the metric
//! small cancellation condition on the four encoding words, replay the
//! trivialization of R plus `a = c = 1`, raise the deficiency with the
//! three-generator extension, and compute homology of R and of the
//! trivialized variant.
//!
//! Stages that need the unprinted inputs (the word P, the third rewriting
//! rule) are skipped when those are absent, and the report says so.
//!
//! Config file: `key = value` lines, `#` comments. Keys:
//!
//! ```text
//! p_word     = s1 s2 s1 s2      # omit to skip the P-dependent relation
//! rule3_lhs  = s2 s2            # omit both rule3 keys to skip the third rule
//! rule3_rhs  = s1 s1 s2
//! alpha      = 6
//! rprime     = a ; c            # extra relators, words separated by ;
//! test_word  = s1               # Thue word Q behind the target word w
//! variant    = literal          # or: symmetric
//! ```

use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    adian_rabin_p_w, matiyasevich_system, target_word, ConstructionError, PwVariant, RBuilder,
};
use crate::homology::{presentation_homology, PresentationHomology};
use crate::presentations::{Presentation, ReplayVerdict, TrivializationScript};
use crate::rewriting::PositiveWord;
use crate::smallcancel::{check_metric, mu_presentation, one_sixth, MetricVerdict};
use crate::words::{Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("config line {0:?} is not `key = value`")]
    BadConfigLine(String),
    #[error("config key {0:?} is unknown")]
    UnknownKey(String),
    #[error("config value for {key}: {message}")]
    BadValue { key: String, message: String },
    #[error("rule3_lhs and rule3_rhs must be given together")]
    HalfRule,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub p_word: Option<PositiveWord>,
    pub rule3: Option<(PositiveWord, PositiveWord)>,
    pub alpha: u64,
    /// Extra relators adjoined when raising the deficiency.
    pub rprime: Vec<Word>,
    /// The Thue word Q; the extension word is `target_word(Q)`.
    pub test_word: PositiveWord,
    pub variant: PwVariant,
}

impl Default for PipelineConfig {
    /// Stand-ins for the unprinted inputs: a length-4 word P and a short
    /// third rule. Both are flagged in the report.
    fn default() -> Self {
        PipelineConfig {
            p_word: Some("s1 s2 s1 s2".parse().unwrap()),
            rule3: Some(("s2 s2".parse().unwrap(), "s1 s1 s2".parse().unwrap())),
            alpha: 6,
            rprime: vec!["a".parse().unwrap(), "c".parse().unwrap()],
            test_word: "s1".parse().unwrap(),
            variant: PwVariant::Literal,
        }
    }
}

impl PipelineConfig {
    /// An empty starting point: nothing supplied, defaults elsewhere. A
    /// parsed config file starts here, so omitted keys mean "not supplied".
    pub fn bare() -> Self {
        PipelineConfig {
            p_word: None,
            rule3: None,
            ..PipelineConfig::default()
        }
    }

    pub fn parse(text: &str) -> Result<Self, PipelineError> {
        let mut config = PipelineConfig::bare();
        let mut rule3_lhs: Option<PositiveWord> = None;
        let mut rule3_rhs: Option<PositiveWord> = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| PipelineError::BadConfigLine(line.to_string()))?;
            let key = key.trim();
            let value = value.trim();
            let bad = |message: &str| PipelineError::BadValue {
                key: key.to_string(),
                message: message.to_string(),
            };
            match key {
                "p_word" => {
                    config.p_word =
                        Some(value.parse().map_err(|_| bad("expected letters"))?);
                }
                "rule3_lhs" => {
                    rule3_lhs = Some(value.parse().map_err(|_| bad("expected letters"))?);
                }
                "rule3_rhs" => {
                    rule3_rhs = Some(value.parse().map_err(|_| bad("expected letters"))?);
                }
                "alpha" => {
                    config.alpha = value.parse().map_err(|_| bad("expected an integer"))?;
                }
                "rprime" => {
                    let mut words = Vec::new();
                    for part in value.split(';') {
                        let part = part.trim();
                        if part.is_empty() {
                            continue;
                        }
                        words.push(part.parse().map_err(|_| bad("expected words"))?);
                    }
                    config.rprime = words;
                }
                "test_word" => {
                    config.test_word =
                        value.parse().map_err(|_| bad("expected letters"))?;
                }
                "variant" => {
                    config.variant = match value {
                        "literal" => PwVariant::Literal,
                        "symmetric" => PwVariant::Symmetric,
                        _ => return Err(bad("expected literal or symmetric")),
                    };
                }
                _ => return Err(PipelineError::UnknownKey(key.to_string())),
            }
        }
        match (rule3_lhs, rule3_rhs) {
            (None, None) => {}
            (Some(l), Some(r)) => config.rule3 = Some((l, r)),
            _ => return Err(PipelineError::HalfRule),
        }
        Ok(config)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StageStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for StageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StageStatus::Pass => "pass",
            StageStatus::Fail => "FAIL",
            StageStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationStats {
    pub generators: usize,
    pub relations: usize,
    pub deficiency: i64,
}

impl PresentationStats {
    fn of(p: &Presentation) -> Self {
        PresentationStats {
            generators: p.generators().len(),
            relations: p.relations().len(),
            deficiency: p.deficiency(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorPieceStat {
    pub label: String,
    pub length: u64,
    pub max_piece: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub status: StageStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyJson {
    pub h0: String,
    pub h1: String,
    pub h2: String,
}

impl HomologyJson {
    fn of(h: &PresentationHomology) -> Self {
        HomologyJson {
            h0: h.h0.to_string(),
            h1: h.h1.to_string(),
            h2: h.h2.to_string(),
        }
    }
}

/// The full deterministic pipeline report. Serialization order is fixed, so
/// equal configs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub schema: u32,
    pub incomplete: bool,
    pub warnings: Vec<String>,
    pub thue_rules: usize,
    pub nonstandard_p: bool,
    pub presentation_r: PresentationStats,
    pub relation_labels: Vec<String>,
    pub sc_lambda: String,
    pub sc_relators: Vec<RelatorPieceStat>,
    pub trivialization: String,
    pub pw: PresentationStats,
    pub pw_variant: String,
    pub pw_word: String,
    pub homology_r: HomologyJson,
    pub homology_r_prime: HomologyJson,
    pub expected_boundary_beta2: i64,
    pub certificates: Vec<Certificate>,
}

impl PipelineReport {
    /// The first failing certificate, if any.
    pub fn first_failure(&self) -> Option<&Certificate> {
        self.certificates
            .iter()
            .find(|c| c.status == StageStatus::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Runs the construction chain. Construction errors (bad alpha, malformed
/// words) surface as `Err`; certificate outcomes land in the report.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineReport, PipelineError> {
    let mut warnings = Vec::new();

    // Thue system
    let thue = matiyasevich_system(config.rule3.clone())?;
    if let Some(warning) = &thue.length_warning {
        warnings.push(warning.clone());
    }

    // presentation R, omitting the pieces whose inputs are absent
    let mut builder = RBuilder::new(config.alpha);
    if let Some(p) = &config.p_word {
        builder = builder.p_word(p.clone());
    } else {
        warnings.push("no P word supplied; the trailing relation is omitted".to_string());
    }
    if let Some((f3, e3)) = &config.rule3 {
        builder = builder.third_rule(f3.clone(), e3.clone());
    } else {
        warnings.push("no third rule supplied; its relation is omitted".to_string());
    }
    let built = builder.build()?;
    if built.nonstandard_p {
        warnings.push(format!(
            "P word is a stand-in of length {}",
            config.p_word.as_ref().map_or(0, PositiveWord::len)
        ));
    }
    let r = &built.presentation;
    let complete = built.includes_third_rule && built.includes_p_word;

    let mut certificates = Vec::new();

    // metric small cancellation on the four encoding words
    let mu = mu_presentation();
    let sc_verdict = check_metric(&mu, &one_sixth()).expect("1/6 lies in (0,1)");
    certificates.push(Certificate {
        name: "small_cancellation_sixth".to_string(),
        status: if sc_verdict == MetricVerdict::Satisfied {
            StageStatus::Pass
        } else {
            StageStatus::Fail
        },
        detail: match &sc_verdict {
            MetricVerdict::Satisfied => "C'(1/6) certified on the encoding words".to_string(),
            MetricVerdict::Violated { relator, .. } => format!("violated at {relator}"),
        },
    });
    let sc_relators = mu_piece_stats();

    // trivialization of R + {a, c}; needs the third rule to kill e
    let (trivialization, replay_status) = if built.includes_third_rule {
        let (r_prime, script) = trivialization_setup(r, &built.relation_labels);
        match r_prime.trivialization_replay(&script) {
            Ok(ReplayVerdict::AllKilled) => ("AllKilled".to_string(), StageStatus::Pass),
            Ok(ReplayVerdict::Stuck(step)) => (format!("Stuck({step})"), StageStatus::Fail),
            Err(e) => (format!("script error: {e}"), StageStatus::Fail),
        }
    } else {
        ("skipped: needs the third rule".to_string(), StageStatus::Skipped)
    };
    certificates.push(Certificate {
        name: "trivialization".to_string(),
        status: replay_status,
        detail: trivialization.clone(),
    });

    // deficiency-raising extension
    let w = target_word(&config.test_word)?;
    let pw_pres = adian_rabin_p_w(r, &config.rprime, &w, config.variant)?;
    let pw_stats = PresentationStats::of(&pw_pres);
    certificates.push(Certificate {
        name: "deficiency_nine".to_string(),
        status: if !complete {
            StageStatus::Skipped
        } else if pw_stats.deficiency == 9 {
            StageStatus::Pass
        } else {
            StageStatus::Fail
        },
        detail: format!("extension deficiency {}", pw_stats.deficiency),
    });

    // homology of R and of R + {a, c}
    let homology_r = presentation_homology(r);
    let r_prime = adjoin_relators(r, &["a", "c"]);
    let homology_r_prime = presentation_homology(&r_prime);
    let h1_trivial = homology_r_prime.h1.betti == 0 && homology_r_prime.h1.torsion.is_empty();
    let expected_boundary_beta2 = 2 * pw_stats.deficiency;
    certificates.push(Certificate {
        name: "h1_trivial_after_adjoining".to_string(),
        status: if built.includes_third_rule {
            if h1_trivial {
                StageStatus::Pass
            } else {
                StageStatus::Fail
            }
        } else {
            StageStatus::Skipped
        },
        detail: format!("H1 = {}", homology_r_prime.h1),
    });

    Ok(PipelineReport {
        schema: 1,
        incomplete: !complete,
        warnings,
        thue_rules: thue.system.rules().len(),
        nonstandard_p: built.nonstandard_p,
        presentation_r: PresentationStats::of(r),
        relation_labels: built.relation_labels.clone(),
        sc_lambda: "1/6".to_string(),
        sc_relators,
        trivialization,
        pw: pw_stats,
        pw_variant: config.variant.name().to_string(),
        pw_word: w.to_string(),
        homology_r: HomologyJson::of(&homology_r),
        homology_r_prime: HomologyJson::of(&homology_r_prime),
        // the boundary formula applied to the extension presentations
        expected_boundary_beta2,
        certificates,
    })
}

/// Per-encoding-word maximum piece lengths, grouped by word length.
fn mu_piece_stats() -> Vec<RelatorPieceStat> {
    use crate::constructions::{mu_new, MuLetter};
    let report = crate::smallcancel::pieces(&mu_presentation());
    let mut out = Vec::new();
    for letter in MuLetter::ALL {
        let length = mu_new(letter).len().to_u64().expect("small length");
        let max_piece = report
            .per_relator_max
            .values()
            .filter(|stat| stat.relator_len.to_u64() == Some(length))
            .map(|stat| stat.max_piece.to_u64().expect("small piece"))
            .max()
            .unwrap_or(0);
        out.push(RelatorPieceStat {
            label: format!("mu_{}", letter.name()),
            length,
            max_piece,
        });
    }
    out
}

fn adjoin_relators(p: &Presentation, names: &[&str]) -> Presentation {
    let mut relations = p.relations().to_vec();
    for name in names {
        relations.push(Word::generator(Generator::new(*name).unwrap()));
    }
    Presentation::new(p.generators().to_vec(), relations).expect("adjoining stays valid")
}

/// R plus the relators `a` and `c`, and the replay script: kill a and c by
/// the adjoined relators, then b from the middle relation with equal d- and
/// e-exponents, e from the third-rule relation, and d from the first.
fn trivialization_setup(
    r: &Presentation,
    labels: &[String],
) -> (Presentation, TrivializationScript) {
    let r_prime = adjoin_relators(r, &["a", "c"]);
    let index_of = |label: &str| {
        labels
            .iter()
            .position(|l| l == label)
            .expect("labeled relation present")
    };
    let g = |name: &str| Generator::new(name).unwrap();
    let steps = vec![
        (r.relations().len(), g("a")),
        (r.relations().len() + 1, g("c")),
        (index_of("R3.2"), g("b")),
        (index_of("R3.3"), g("e")),
        (index_of("R3.1"), g("d")),
    ];
    (r_prime, TrivializationScript { steps })
}
