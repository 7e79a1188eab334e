//! Checking the transfer statements for derived-discreteness and piecewise
//! heredity along concrete extensions.

use serde::Serialize;

use super::{witness_report, ExtensionKind, ExtensionMorphism};
use crate::algebra::{basic_reduction, block_decomposition, gabriel_quiver, AssocAlgebra};
use crate::error::Result;
use crate::gentle::{classify_derived_discrete, DiscreteReason, Verdict};
use crate::quiver::{PathAlgebra, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ExperimentMode {
    Theorem41,
    Prop51,
    Prop53,
}

impl std::str::FromStr for ExperimentMode {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem41" => Ok(ExperimentMode::Theorem41),
            "prop51" => Ok(ExperimentMode::Prop51),
            "prop53" => Ok(ExperimentMode::Prop53),
            _ => Err(crate::Error::Parse(format!("unknown experiment mode {s}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Consistent,
    Inconclusive,
    Violation,
}

/// Verdict for one connected block, computed from the presentation of its
/// basic algebra.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockVerdict {
    pub dimension: usize,
    pub basic_dimension: usize,
    pub multiplicities: Vec<usize>,
    pub presentation: String,
    pub verdict: Verdict,
    pub piecewise_hereditary: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraVerdict {
    pub field: String,
    pub blocks: Vec<BlockVerdict>,
    pub overall: Verdict,
}

impl AlgebraVerdict {
    pub fn derived_discrete(&self) -> Option<bool> {
        all_of(self.blocks.iter().map(|b| dd(&b.verdict)))
    }

    pub fn piecewise_hereditary(&self) -> Option<bool> {
        all_of(self.blocks.iter().map(|b| b.piecewise_hereditary))
    }

    pub fn gentle_one_cycle_clock(&self) -> Option<bool> {
        all_of(self.blocks.iter().map(|b| gocc(&b.verdict)))
    }

    pub fn has_unknown(&self) -> bool {
        self.blocks.iter().any(|b| !b.verdict.is_definite())
    }
}

/// Conjunction with unknowns: false wins, then unknown.
fn all_of(xs: impl Iterator<Item = Option<bool>>) -> Option<bool> {
    let mut result = Some(true);
    for x in xs {
        match x {
            Some(false) => return Some(false),
            None => result = None,
            Some(true) => {}
        }
    }
    result
}

fn dd(v: &Verdict) -> Option<bool> {
    match v {
        Verdict::DerivedDiscrete(_) => Some(true),
        Verdict::NotDerivedDiscrete(_) => Some(false),
        Verdict::Unknown(_) => None,
    }
}

fn gocc(v: &Verdict) -> Option<bool> {
    match v {
        Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock) => Some(true),
        Verdict::Unknown(_) => None,
        _ => Some(false),
    }
}

/// Piecewise heredity where it is decided: hereditary presentations are,
/// gentle one-cycle presentations with the clock condition are not, and
/// gentle one-cycle presentations without it are iterated tilted of type
/// `Ã`, hence piecewise hereditary.
pub fn piecewise_hereditary(p: &Presentation, verdict: &Verdict) -> Option<bool> {
    if p.relations().is_empty() {
        return Some(true);
    }
    match verdict {
        Verdict::DerivedDiscrete(DiscreteReason::HereditaryDynkin(_)) => Some(true),
        Verdict::DerivedDiscrete(DiscreteReason::GentleOneCycleClock) => Some(false),
        Verdict::NotDerivedDiscrete(_) => Some(true),
        Verdict::Unknown(_) => None,
    }
}

fn combine(blocks: &[BlockVerdict]) -> Verdict {
    if blocks.len() == 1 {
        blocks[0].verdict.clone()
    } else {
        Verdict::combine(blocks.iter().map(|b| &b.verdict))
    }
}

/// Classifies each block of `a` through its basic algebra and recovered
/// Gabriel quiver.
pub fn classify_algebra(a: &AssocAlgebra, seed: u64) -> Result<AlgebraVerdict> {
    let dec = block_decomposition(a, seed)?;
    let mut blocks = Vec::new();
    for block in &dec.blocks {
        let basic = basic_reduction(block, seed)?;
        let g = gabriel_quiver(&basic.algebra, None, seed)?;
        let verdict = classify_derived_discrete(&g.presentation).overall;
        blocks.push(BlockVerdict {
            dimension: block.dim(),
            basic_dimension: basic.algebra.dim(),
            multiplicities: basic.multiplicities.clone(),
            presentation: g.presentation.to_text(),
            piecewise_hereditary: piecewise_hereditary(&g.presentation, &verdict),
            verdict,
        });
    }
    Ok(AlgebraVerdict {
        field: a.field().descriptor(),
        overall: combine(&blocks),
        blocks,
    })
}

/// Classifies each connected component of a presentation directly.
pub fn classify_presentation(p: &Presentation) -> Result<AlgebraVerdict> {
    let mut blocks = Vec::new();
    for vs in p.quiver().connected_components() {
        let sub = p.restrict_to(&vs)?;
        let dim = PathAlgebra::new(&sub)?.algebra().dim();
        let verdict = classify_derived_discrete(&sub).overall;
        blocks.push(BlockVerdict {
            dimension: dim,
            basic_dimension: dim,
            multiplicities: vec![1; vs.len()],
            presentation: sub.to_text(),
            piecewise_hereditary: piecewise_hereditary(&sub, &verdict),
            verdict,
        });
    }
    Ok(AlgebraVerdict {
        field: p.field().descriptor(),
        overall: combine(&blocks),
        blocks,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Premise {
    pub name: String,
    pub value: Option<bool>,
}

fn premise(name: &str, value: Option<bool>) -> Premise {
    Premise {
        name: name.to_string(),
        value,
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ImplicationCheck {
    pub statement: String,
    pub hypotheses: Vec<Premise>,
    pub conclusion: Premise,
    pub status: Outcome,
    /// Whether some hypothesis is false, making the implication vacuous.
    pub vacuous: bool,
}

fn implication(statement: &str, hypotheses: Vec<Premise>, conclusion: Premise) -> ImplicationCheck {
    let vacuous = hypotheses.iter().any(|h| h.value == Some(false));
    let status = if vacuous {
        Outcome::Consistent
    } else if hypotheses.iter().any(|h| h.value.is_none()) {
        Outcome::Inconclusive
    } else {
        match conclusion.value {
            Some(true) => Outcome::Consistent,
            Some(false) => Outcome::Violation,
            None => Outcome::Inconclusive,
        }
    };
    ImplicationCheck {
        statement: statement.to_string(),
        hypotheses,
        conclusion,
        status,
        vacuous,
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessSummary {
    pub split: bool,
    pub separable: bool,
    pub right_projective: bool,
    pub left_projective: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentReport {
    pub mode: ExperimentMode,
    pub extension: ExtensionKind,
    pub witnesses: WitnessSummary,
    pub source: AlgebraVerdict,
    pub target: AlgebraVerdict,
    pub checks: Vec<ImplicationCheck>,
    pub outcome: Outcome,
    pub caveats: Vec<String>,
}

/// Gathers witnesses and verdicts for `A` and `B`, then evaluates the
/// implications of the chosen statement. A violation means a bug.
pub fn run_consistency_experiment(
    phi: &ExtensionMorphism,
    mode: ExperimentMode,
    seed: u64,
) -> Result<ExperimentReport> {
    let w = witness_report(phi, seed)?;
    let witnesses = WitnessSummary {
        split: w.split_retraction.is_some(),
        separable: w.separability_idempotent.is_some(),
        right_projective: w.right_projective.projective,
        left_projective: w.left_projective.projective,
    };
    let source = match phi.source_presentation() {
        Some(p) => classify_presentation(p)?,
        None => classify_algebra(phi.source(), seed)?,
    };
    let mut caveats = vec![
        "the classification of derived-discrete algebras assumes an algebraically closed field; verdicts are computed over the working field".to_string(),
    ];
    let target = if let Some(k) = phi.extension_field() {
        caveats.push(format!(
            "B = A ⊗ K is classified as an algebra over K = {}",
            k.descriptor()
        ));
        classify_algebra(&phi.source().extend_scalars(k)?, seed)?
    } else if let Some(p) = phi.target_presentation() {
        classify_presentation(p)?
    } else {
        classify_algebra(phi.target(), seed)?
    };
    if let ExtensionKind::SkewGroup {
        order_invertible: false,
        ..
    } = phi.kind()
    {
        caveats.push("the group order is not invertible in the field".to_string());
    }
    let known = |b: bool| Some(b);
    let checks = match mode {
        ExperimentMode::Theorem41 => vec![
            implication(
                "split and B derived-discrete imply A derived-discrete",
                vec![premise("split", known(witnesses.split)), premise("B derived-discrete", target.derived_discrete())],
                premise("A derived-discrete", source.derived_discrete()),
            ),
            implication(
                "separable, B_A projective and A derived-discrete imply B derived-discrete",
                vec![
                    premise("separable", known(witnesses.separable)),
                    premise("B_A projective", known(witnesses.right_projective)),
                    premise("A derived-discrete", source.derived_discrete()),
                ],
                premise("B derived-discrete", target.derived_discrete()),
            ),
        ],
        ExperimentMode::Prop51 => vec![
            implication(
                "split and B piecewise hereditary imply A piecewise hereditary",
                vec![
                    premise("split", known(witnesses.split)),
                    premise("B piecewise hereditary", target.piecewise_hereditary()),
                ],
                premise("A piecewise hereditary", source.piecewise_hereditary()),
            ),
            implication(
                "separable, _AB projective and A piecewise hereditary imply B piecewise hereditary",
                vec![
                    premise("separable", known(witnesses.separable)),
                    premise("_AB projective", known(witnesses.left_projective)),
                    premise("A piecewise hereditary", source.piecewise_hereditary()),
                ],
                premise("B piecewise hereditary", target.piecewise_hereditary()),
            ),
        ],
        ExperimentMode::Prop53 => {
            let base = vec![
                premise("split", known(witnesses.split)),
                premise("separable", known(witnesses.separable)),
                premise("B_A projective", known(witnesses.right_projective)),
                premise("_AB projective", known(witnesses.left_projective)),
                premise("A connected", known(source.blocks.len() == 1)),
            ];
            let mut forward = base.clone();
            forward.push(premise("A gentle one-cycle with clock", source.gentle_one_cycle_clock()));
            let mut backward = base;
            backward.push(premise("each block of B gentle one-cycle with clock", target.gentle_one_cycle_clock()));
            vec![
                implication(
                    "A gentle one-cycle with clock implies each block of B is",
                    forward,
                    premise("each block of B gentle one-cycle with clock", target.gentle_one_cycle_clock()),
                ),
                implication(
                    "each block of B gentle one-cycle with clock implies A is",
                    backward,
                    premise("A gentle one-cycle with clock", source.gentle_one_cycle_clock()),
                ),
            ]
        }
    };
    let outcome = if checks.iter().any(|c| c.status == Outcome::Violation) {
        Outcome::Violation
    } else if checks.iter().any(|c| c.status == Outcome::Inconclusive) || source.has_unknown() || target.has_unknown() {
        Outcome::Inconclusive
    } else {
        Outcome::Consistent
    };
    Ok(ExperimentReport {
        mode,
        extension: phi.kind().clone(),
        witnesses,
        source,
        target,
        checks,
        outcome,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::diamond;
    use super::super::*;
    use super::*;
    use crate::quiver::path_basis_algebra;

    #[test]
    fn base_change_is_consistent() {
        let k = parse_extension("Q[x]/(x^2-2)").unwrap();
        let p = diamond("b*a");
        let a = path_basis_algebra(&p).unwrap();
        let m = base_change(&a, &k).unwrap().with_source_presentation(p);
        for mode in [ExperimentMode::Theorem41, ExperimentMode::Prop53] {
            let r = run_consistency_experiment(&m, mode, 0).unwrap();
            assert_eq!(r.outcome, Outcome::Consistent, "{mode:?}");
            assert_eq!(r.target.blocks.len(), 1);
            assert_eq!(r.target.overall, r.source.overall);
        }
    }

    #[test]
    fn example_quotient_is_consistent() {
        let m = quotient_extension(&diamond("b*a"), diamond("").parse_relations(&["d*c"]).unwrap()).unwrap();
        let r = run_consistency_experiment(&m, ExperimentMode::Theorem41, 0).unwrap();
        assert_eq!(r.outcome, Outcome::Consistent);
        assert!(r.witnesses.separable && !r.witnesses.right_projective);
        assert_eq!(r.target.derived_discrete(), Some(false));
    }

    #[test]
    fn trivial_skew_splits_into_two_copies() {
        let p = diamond("b*a");
        let a = path_basis_algebra(&p).unwrap();
        let g = GroupAction::cyclic_trivial(&a, 2);
        let m = skew_group_algebra(&a, &g).unwrap().with_source_presentation(p);
        let r = run_consistency_experiment(&m, ExperimentMode::Prop53, 0).unwrap();
        assert_eq!(r.outcome, Outcome::Consistent);
        assert_eq!(r.target.blocks.len(), 2);
        assert!(r.target.blocks.iter().all(|b| b.verdict == r.source.overall));
    }

    #[test]
    fn hereditary_quotient_for_prop51() {
        let m = quotient_extension(&diamond(""), diamond("").parse_relations(&["b*a"]).unwrap()).unwrap();
        let r = run_consistency_experiment(&m, ExperimentMode::Prop51, 0).unwrap();
        assert_eq!(r.source.piecewise_hereditary(), Some(true));
        assert_eq!(r.target.piecewise_hereditary(), Some(false));
        assert_eq!(r.outcome, Outcome::Consistent);
        assert!(!r.witnesses.left_projective);
    }
}
