use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{f_sequent, g_sequent, h_sequent, nn, nn_antecedent, ClassRegistry};
use crate::calculi::{G3cp, G3dm, G3ip, G3sdm};
use crate::error::{Error, Result};
use crate::search::Prover;
use crate::syntax::{DmSequent, IntSequent, SdmSequent, Sequent, Structure, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingKind {
    /// `G3DM ⊢ Σ => φ` iff `G3SDM ⊢ f(Σ) => f(φ)`.
    DmToSdmF,
    /// `G3DM ⊢ Σ => φ` iff `G3SDM ⊢ ~~Σ => ~~φ`; the `~φ` succedent is
    /// measured alongside.
    DmGlivenkoSdm,
    /// `G3SDM ⊢ Γ => φ` iff `G3ip ⊢ k(Γ) => k(φ)`.
    SdmToIntK,
    /// `G3DM ⊢ Σ => φ` iff `G3cp ⊢ h(Σ) => h(φ)`.
    DmToClH,
    /// `G3cp ⊢ X => θ` iff `G3ip ⊢ g(X) => ~~θ`.
    ClToIntG,
    /// `G3ip ⊢ g∘h(Σ) => g∘h(φ)` iff `G3ip ⊢ k∘f(Σ) => k∘f(φ)`.
    Diagram,
}

impl EmbeddingKind {
    pub fn all() -> [EmbeddingKind; 6] {
        use EmbeddingKind::*;
        [DmToSdmF, DmGlivenkoSdm, SdmToIntK, DmToClH, ClToIntG, Diagram]
    }

    pub fn name(self) -> &'static str {
        match self {
            EmbeddingKind::DmToSdmF => "dm-to-sdm-f",
            EmbeddingKind::DmGlivenkoSdm => "dm-glivenko-sdm",
            EmbeddingKind::SdmToIntK => "sdm-to-int-k",
            EmbeddingKind::DmToClH => "dm-to-cl-h",
            EmbeddingKind::ClToIntG => "cl-to-int-g",
            EmbeddingKind::Diagram => "diagram",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::all().into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Source sequents for an embedding check.
#[derive(Clone, Debug)]
pub enum Corpus {
    Dm(Vec<DmSequent>),
    Sdm(Vec<SdmSequent>),
    Cl(Vec<IntSequent>),
}

impl Corpus {
    pub fn len(&self) -> usize {
        match self {
            Corpus::Dm(v) => v.len(),
            Corpus::Sdm(v) => v.len(),
            Corpus::Cl(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn label(&self) -> &'static str {
        match self {
            Corpus::Dm(_) => "G3DM",
            Corpus::Sdm(_) => "G3SDM",
            Corpus::Cl(_) => "G3cp",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub source: String,
    pub image: String,
    pub source_derivable: bool,
    pub target_derivable: bool,
}

/// Agreement count for a side measurement without a pass/fail gate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub label: String,
    pub total: usize,
    pub agreed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub kind: EmbeddingKind,
    pub total: usize,
    pub agreed: usize,
    pub counterexamples: Vec<Counterexample>,
    pub variant: Option<VariantReport>,
}

impl EmbeddingReport {
    pub fn rate(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.agreed as f64 / self.total as f64
        }
    }

    pub fn all_agree(&self) -> bool {
        self.agreed == self.total
    }
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}/{} agree ({:.1}%)", self.kind, self.agreed, self.total, 100.0 * self.rate())?;
        if let Some(v) = &self.variant {
            let rate = if v.total == 0 { 100.0 } else { 100.0 * v.agreed as f64 / v.total as f64 };
            writeln!(f, "  variant {}: {}/{} agree ({rate:.1}%)", v.label, v.agreed, v.total)?;
        }
        for c in &self.counterexamples {
            writeln!(
                f,
                "  {}  [{}]  vs  {}  [{}]",
                c.source,
                verdict(c.source_derivable),
                c.image,
                verdict(c.target_derivable)
            )?;
        }
        Ok(())
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "derivable"
    } else {
        "not derivable"
    }
}

/// Provers for all four calculi and one class registry for `k`, shared
/// across every check run through the same checker.
pub struct EmbeddingChecker {
    pub sdm: Arc<Prover<G3sdm>>,
    pub dm: Prover<G3dm>,
    pub ip: Prover<G3ip>,
    pub cp: Prover<G3cp>,
    pub registry: ClassRegistry,
}

impl Default for EmbeddingChecker {
    fn default() -> Self {
        Self::new()
    }
}

struct Row {
    source: String,
    image: String,
    source_derivable: bool,
    target_derivable: bool,
}

fn tally(kind: EmbeddingKind, rows: Vec<Row>, variant: Option<VariantReport>) -> EmbeddingReport {
    let total = rows.len();
    let mut agreed = 0;
    let mut counterexamples = Vec::new();
    for r in rows {
        if r.source_derivable == r.target_derivable {
            agreed += 1;
        } else {
            counterexamples.push(Counterexample {
                source: r.source,
                image: r.image,
                source_derivable: r.source_derivable,
                target_derivable: r.target_derivable,
            });
        }
    }
    EmbeddingReport { kind, total, agreed, counterexamples, variant }
}

fn plain_sdm(ant: Vec<Term>, succ: Term) -> SdmSequent {
    Sequent::new(ant.into_iter().map(Structure::Plain).collect(), Structure::Plain(succ))
}

impl EmbeddingChecker {
    pub fn new() -> Self {
        let sdm = Arc::new(Prover::new());
        EmbeddingChecker {
            registry: ClassRegistry::with_prover(sdm.clone()),
            sdm,
            dm: Prover::new(),
            ip: Prover::new(),
            cp: Prover::new(),
        }
    }

    fn mismatch(kind: EmbeddingKind, corpus: &Corpus, want: &str) -> Error {
        Error::CorpusMismatch {
            kind: kind.name().into(),
            detail: format!("expected {want} sequents, got {}", corpus.label()),
        }
    }

    pub fn check(&mut self, kind: EmbeddingKind, corpus: &Corpus) -> Result<EmbeddingReport> {
        match (kind, corpus) {
            (EmbeddingKind::DmToSdmF, Corpus::Dm(v)) => {
                let rows = v
                    .par_iter()
                    .map(|s| {
                        let img = f_sequent(s);
                        Row {
                            source: s.to_string(),
                            image: img.to_string(),
                            source_derivable: self.dm.derivable(s),
                            target_derivable: self.sdm.derivable(&img),
                        }
                    })
                    .collect();
                Ok(tally(kind, rows, None))
            }
            (EmbeddingKind::DmGlivenkoSdm, Corpus::Dm(v)) => {
                let results: Vec<(Row, bool)> = v
                    .par_iter()
                    .map(|s| {
                        let ant = nn_antecedent(&s.antecedent);
                        let img = plain_sdm(ant.clone(), nn(&s.succedent));
                        let printed = plain_sdm(ant, Term::neg(s.succedent.clone()));
                        let src = self.dm.derivable(s);
                        let row = Row {
                            source: s.to_string(),
                            image: img.to_string(),
                            source_derivable: src,
                            target_derivable: self.sdm.derivable(&img),
                        };
                        (row, src == self.sdm.derivable(&printed))
                    })
                    .collect();
                let variant = VariantReport {
                    label: "~~Σ => ~φ".into(),
                    total: results.len(),
                    agreed: results.iter().filter(|(_, ok)| *ok).count(),
                };
                Ok(tally(kind, results.into_iter().map(|(r, _)| r).collect(), Some(variant)))
            }
            (EmbeddingKind::SdmToIntK, Corpus::Sdm(v)) => {
                if let Some(bad) = v.iter().find(|s| s.succedent.is_starred()) {
                    return Err(Error::CorpusMismatch {
                        kind: kind.name().into(),
                        detail: format!("`{bad}` has a starred succedent"),
                    });
                }
                let images: Vec<_> = v.iter().map(|s| self.registry.k_sequent(s)).collect();
                let rows = v
                    .par_iter()
                    .zip(images.par_iter())
                    .map(|(s, img)| Row {
                        source: s.to_string(),
                        image: img.to_string(),
                        source_derivable: self.sdm.derivable(s),
                        target_derivable: self.ip.derivable(img),
                    })
                    .collect();
                Ok(tally(kind, rows, None))
            }
            (EmbeddingKind::DmToClH, Corpus::Dm(v)) => {
                let rows = v
                    .par_iter()
                    .map(|s| {
                        let img = h_sequent(s);
                        Row {
                            source: s.to_string(),
                            image: img.to_string(),
                            source_derivable: self.dm.derivable(s),
                            target_derivable: self.cp.derivable(&img),
                        }
                    })
                    .collect();
                Ok(tally(kind, rows, None))
            }
            (EmbeddingKind::ClToIntG, Corpus::Cl(v)) => {
                let rows = v
                    .par_iter()
                    .map(|s| {
                        let img = g_sequent(s);
                        Row {
                            source: s.to_string(),
                            image: img.to_string(),
                            source_derivable: self.cp.derivable(s),
                            target_derivable: self.ip.derivable(&img),
                        }
                    })
                    .collect();
                Ok(tally(kind, rows, None))
            }
            (EmbeddingKind::Diagram, Corpus::Dm(v)) => {
                let kf: Vec<_> = v.iter().map(|s| self.registry.k_sequent(&f_sequent(s))).collect();
                let rows = v
                    .par_iter()
                    .zip(kf.par_iter())
                    .map(|(s, kf)| {
                        let gh = g_sequent(&h_sequent(s));
                        Row {
                            source: format!("{s}  ~>  {gh}"),
                            image: kf.to_string(),
                            source_derivable: self.ip.derivable(&gh),
                            target_derivable: self.ip.derivable(kf),
                        }
                    })
                    .collect();
                Ok(tally(kind, rows, None))
            }
            (EmbeddingKind::SdmToIntK, c) => Err(Self::mismatch(kind, c, "G3SDM")),
            (EmbeddingKind::ClToIntG, c) => Err(Self::mismatch(kind, c, "G3cp")),
            (_, c) => Err(Self::mismatch(kind, c, "G3DM")),
        }
    }
}

/// Runs one embedding check with fresh provers and a fresh class registry.
pub fn check_embedding(kind: EmbeddingKind, corpus: &Corpus) -> Result<EmbeddingReport> {
    EmbeddingChecker::new().check(kind, corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_dm_sequent, parse_int_sequent, parse_sdm_sequent};

    #[test]
    fn dm_to_sdm_on_double_negation_elimination() {
        let c = Corpus::Dm(vec![parse_dm_sequent("~~p => p").unwrap()]);
        let r = check_embedding(EmbeddingKind::DmToSdmF, &c).unwrap();
        assert!(r.all_agree());
    }

    #[test]
    fn k_on_double_negation_introduction() {
        let c = Corpus::Sdm(vec![parse_sdm_sequent("p => ~~p").unwrap()]);
        let r = check_embedding(EmbeddingKind::SdmToIntK, &c).unwrap();
        assert_eq!(r.agreed, 1);
    }

    #[test]
    fn glivenko_on_excluded_middle() {
        let c = Corpus::Cl(vec![parse_int_sequent("=> p | (p -> F)").unwrap()]);
        let r = check_embedding(EmbeddingKind::ClToIntG, &c).unwrap();
        assert!(r.all_agree());
    }

    #[test]
    fn wrong_corpus_is_rejected() {
        let c = Corpus::Sdm(vec![parse_sdm_sequent("p => p").unwrap()]);
        assert!(matches!(check_embedding(EmbeddingKind::DmToClH, &c), Err(Error::CorpusMismatch { .. })));
    }

    #[test]
    fn report_lists_counterexamples() {
        let c = Corpus::Sdm(vec![parse_sdm_sequent("~p => ~(p & q)").unwrap()]);
        let r = check_embedding(EmbeddingKind::SdmToIntK, &c).unwrap();
        assert_eq!(r.counterexamples.len(), 1);
        assert!(r.to_string().contains("p' => #k0"));
    }
}
