//! Decision dispatch and cross-validation of the three engines.

use std::fmt;

use crate::gsix::proof::ProofTree;
use crate::matrix::{m6, Assignment};
use crate::semantics::{falsifying_assignment, Caps, SemanticsError};
use crate::sequent::Sequent;

/// Verdict of a decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionOutcome {
    Provable { witness: Option<ProofTree> },
    NotProvable { counterexample: Option<Assignment> },
    ResourceExceeded { details: String },
}

impl DecisionOutcome {
    pub fn is_provable(&self) -> bool {
        matches!(self, DecisionOutcome::Provable { .. })
    }

    pub fn is_not_provable(&self) -> bool {
        matches!(self, DecisionOutcome::NotProvable { .. })
    }

    pub fn is_resource_exceeded(&self) -> bool {
        matches!(self, DecisionOutcome::ResourceExceeded { .. })
    }

    /// Short verdict name for reports.
    pub fn verdict(&self) -> &'static str {
        match self {
            DecisionOutcome::Provable { .. } => "provable",
            DecisionOutcome::NotProvable { .. } => "not provable",
            DecisionOutcome::ResourceExceeded { .. } => "resource exceeded",
        }
    }
}

/// Search effort counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Stats {
    pub iterations: usize,
    pub states: usize,
}

/// A verdict together with its effort counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub outcome: DecisionOutcome,
    pub stats: Stats,
}

/// Which procedure to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Forward saturation over the generalized-subformula space.
    Saturation,
    /// Backtracking backward proof search.
    Backward,
    /// Exhaustive valuation enumeration.
    Semantic,
    /// All of the above, failing loudly on any disagreement.
    Cross,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Saturation,
        Engine::Backward,
        Engine::Semantic,
        Engine::Cross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Saturation => "saturation",
            Engine::Backward => "backward",
            Engine::Semantic => "semantic",
            Engine::Cross => "cross",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "saturation" => Ok(Engine::Saturation),
            "backward" => Ok(Engine::Backward),
            "semantic" => Ok(Engine::Semantic),
            "cross" => Ok(Engine::Cross),
            other => Err(format!(
                "unknown engine `{other}` (expected saturation, backward, semantic or cross)"
            )),
        }
    }
}

/// A per-engine verdict, kept for disagreement reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineVerdict {
    pub engine: Engine,
    pub verdict: &'static str,
}

/// Decision failures: only cross mode can fail, and only by catching the
/// engines contradicting each other.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecideError {
    #[error("engines disagree on `{sequent}`: {}", format_verdicts(.verdicts))]
    Disagreement {
        sequent: Sequent,
        verdicts: Vec<EngineVerdict>,
    },
}

fn format_verdicts(verdicts: &[EngineVerdict]) -> String {
    verdicts
        .iter()
        .map(|v| format!("{}={}", v.engine, v.verdict))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Decide by exhaustive semantics: provable exactly when valid, with a
/// falsifying assignment as the counterexample otherwise.
pub fn decide_semantic(goal: &Sequent, caps: &Caps) -> Decision {
    let var_count = goal.vars().len();
    let states = m6().value_count().checked_pow(var_count as u32);
    match falsifying_assignment(goal, m6(), caps) {
        Ok(None) => Decision {
            outcome: DecisionOutcome::Provable { witness: None },
            stats: Stats {
                iterations: 0,
                states: states.unwrap_or(usize::MAX),
            },
        },
        Ok(Some(assignment)) => Decision {
            outcome: DecisionOutcome::NotProvable {
                counterexample: Some(assignment),
            },
            stats: Stats::default(),
        },
        Err(SemanticsError::Resource { what, actual, cap }) => Decision {
            outcome: DecisionOutcome::ResourceExceeded {
                details: format!("{what} is {actual}, cap is {cap}"),
            },
            stats: Stats::default(),
        },
        Err(e) => Decision {
            outcome: DecisionOutcome::ResourceExceeded {
                details: e.to_string(),
            },
            stats: Stats::default(),
        },
    }
}

/// Run the selected engine.
///
/// Cross mode runs all three within their caps and returns the combined
/// verdict, preferring a proof witness from the search engines and a
/// counterexample from the semantic one; engines that exceed their caps
/// abstain. Any two contradicting verdicts are an error.
pub fn decide(goal: &Sequent, engine: Engine, caps: &Caps) -> Result<Decision, DecideError> {
    match engine {
        Engine::Semantic => Ok(decide_semantic(goal, caps)),
        Engine::Backward => Ok(crate::gsix::backward::decide_backward(goal)),
        Engine::Saturation => Ok(crate::gsix::saturate::decide_saturation(goal, caps)),
        Engine::Cross => {
            let semantic = decide_semantic(goal, caps);
            let backward = crate::gsix::backward::decide_backward(goal);
            let saturation = crate::gsix::saturate::decide_saturation(goal, caps);
            let runs = [
                (Engine::Semantic, &semantic),
                (Engine::Backward, &backward),
                (Engine::Saturation, &saturation),
            ];
            let provable = runs.iter().any(|(_, d)| d.outcome.is_provable());
            let refuted = runs.iter().any(|(_, d)| d.outcome.is_not_provable());
            if provable && refuted {
                return Err(DecideError::Disagreement {
                    sequent: goal.clone(),
                    verdicts: runs
                        .iter()
                        .map(|(engine, d)| EngineVerdict {
                            engine: *engine,
                            verdict: d.outcome.verdict(),
                        })
                        .collect(),
                });
            }
            let stats = Stats {
                iterations: backward.stats.iterations + saturation.stats.iterations,
                states: backward.stats.states + saturation.stats.states,
            };
            let outcome = if provable {
                // prefer a checkable witness
                let witness = match backward.outcome {
                    DecisionOutcome::Provable { witness } => witness,
                    _ => None,
                }
                .or(match saturation.outcome {
                    DecisionOutcome::Provable { witness } => witness,
                    _ => None,
                });
                DecisionOutcome::Provable { witness }
            } else if refuted {
                let counterexample = match semantic.outcome {
                    DecisionOutcome::NotProvable { counterexample } => counterexample,
                    _ => None,
                };
                DecisionOutcome::NotProvable { counterexample }
            } else {
                DecisionOutcome::ResourceExceeded {
                    details: "every engine exceeded its caps".to_string(),
                }
            };
            Ok(Decision { outcome, stats })
        }
    }
}
