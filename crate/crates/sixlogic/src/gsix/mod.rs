//! The cut-free sequent calculus GSix and its decision procedures.
//!
//! The calculus has the axiom `α => α`, left and right weakening, and 25
//! logic rules, each introducing one principal formula shape on one side.
//! Every rule is context-free; premises repeat the conclusion's context.
//! The submodules provide proof objects and checking ([`proof`]),
//! generalized subformulas ([`gsub`]), the forward-saturation decision
//! procedure ([`saturate`]), backtracking backward proof search
//! ([`backward`]) and the cross-validating dispatcher ([`decide`]).

pub mod backward;
pub mod decide;
pub mod gsub;
pub mod proof;
pub mod saturate;

pub use backward::decide_backward;
pub use decide::{decide, Decision, DecisionOutcome, DecideError, Engine, EngineVerdict, Stats};
pub use gsub::{gsub, gsub_sequent, gsub_sequent_with, gsub_with, GsubMode};
pub use proof::{check_proof, ProofCheckError, ProofTree};
pub use saturate::{decide_saturation, HARD_MAX_GSUB};

use std::fmt;
use std::str::FromStr;

use crate::formula::Formula;
use crate::rules::SchematicRule;
use crate::sequent::Sequent;

/// Which side of a sequent a rule's principal formula lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// What one premise adds to the shared context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremiseDelta {
    pub left: Vec<Formula>,
    pub right: Vec<Formula>,
}

/// Rule tags of the calculus: the axiom, the two weakenings, the 25 logic
/// rules, and a cut tag that checkers only honor when explicitly enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GSixRuleTag {
    Axiom,
    WeakeningLeft,
    WeakeningRight,
    OrLeft,
    OrRight,
    NegOrLeft,
    NegOrRight,
    NablaOrLeft,
    NablaOrRight,
    NablaNegOrLeft,
    NablaNegOrRight,
    AndLeft,
    AndRight,
    NegAndLeft,
    NegAndRight,
    NablaAndLeft,
    NablaAndRight,
    NablaNegAndLeft,
    NablaNegAndRight,
    NegNegLeft,
    NegNegRight,
    NablaNegNegLeft,
    NablaNegNegRight,
    NablaRight,
    NablaNablaLeft,
    NegNablaLeft,
    NegNablaRight,
    NablaNegNablaLeft,
    Cut,
}

use GSixRuleTag::*;

impl GSixRuleTag {
    /// The 25 logic rules, in the order the rule table lists them.
    pub fn logic_rules() -> &'static [GSixRuleTag; 25] {
        &[
            OrLeft,
            OrRight,
            NegOrLeft,
            NegOrRight,
            NablaOrLeft,
            NablaOrRight,
            NablaNegOrLeft,
            NablaNegOrRight,
            AndLeft,
            AndRight,
            NegAndLeft,
            NegAndRight,
            NablaAndLeft,
            NablaAndRight,
            NablaNegAndLeft,
            NablaNegAndRight,
            NegNegLeft,
            NegNegRight,
            NablaNegNegLeft,
            NablaNegNegRight,
            NablaRight,
            NablaNablaLeft,
            NegNablaLeft,
            NegNablaRight,
            NablaNegNablaLeft,
        ]
    }

    pub fn is_logic_rule(self) -> bool {
        !matches!(self, Axiom | WeakeningLeft | WeakeningRight | Cut)
    }

    /// Side of the principal formula; `None` for structural tags.
    pub fn side(self) -> Option<Side> {
        match self {
            Axiom | Cut => None,
            WeakeningLeft => Some(Side::Left),
            WeakeningRight => Some(Side::Right),
            OrLeft | NegOrLeft | NablaOrLeft | NablaNegOrLeft | AndLeft | NegAndLeft
            | NablaAndLeft | NablaNegAndLeft | NegNegLeft | NablaNegNegLeft | NablaNablaLeft
            | NegNablaLeft | NablaNegNablaLeft => Some(Side::Left),
            OrRight | NegOrRight | NablaOrRight | NablaNegOrRight | AndRight | NegAndRight
            | NablaAndRight | NablaNegAndRight | NegNegRight | NablaNegNegRight | NablaRight
            | NegNablaRight => Some(Side::Right),
        }
    }

    /// If `f` matches this rule's principal shape, the premise deltas.
    ///
    /// Each delta lists the formulas one premise adds to the conclusion's
    /// context (with the principal removed). `None` when the shape does
    /// not match or the tag is structural.
    pub fn decompose(self, f: &Formula) -> Option<Vec<PremiseDelta>> {
        use Formula::{And, Nabla, Neg, Or};
        let l = |formulas: &[&Formula]| PremiseDelta {
            left: formulas.iter().map(|f| (*f).clone()).collect(),
            right: vec![],
        };
        let r = |formulas: &[&Formula]| PremiseDelta {
            left: vec![],
            right: formulas.iter().map(|f| (*f).clone()).collect(),
        };
        let neg = |x: &Formula| Formula::neg(x.clone());
        let nab = |x: &Formula| Formula::nabla(x.clone());
        match (self, f) {
            (OrLeft, Or(a, b)) => Some(vec![l(&[a]), l(&[b])]),
            (OrRight, Or(a, b)) => Some(vec![r(&[a, b])]),
            (NegOrLeft, Neg(x)) => match x.as_ref() {
                Or(a, b) => Some(vec![l(&[&neg(a), &neg(b)])]),
                _ => None,
            },
            (NegOrRight, Neg(x)) => match x.as_ref() {
                Or(a, b) => Some(vec![r(&[&neg(a)]), r(&[&neg(b)])]),
                _ => None,
            },
            (NablaOrLeft, Nabla(x)) => match x.as_ref() {
                Or(a, b) => Some(vec![l(&[&nab(a)]), l(&[&nab(b)])]),
                _ => None,
            },
            (NablaOrRight, Nabla(x)) => match x.as_ref() {
                Or(a, b) => Some(vec![r(&[&nab(a), &nab(b)])]),
                _ => None,
            },
            (NablaNegOrLeft, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    Or(a, b) => Some(vec![l(&[&nab(&neg(a)), &nab(&neg(b))])]),
                    _ => None,
                },
                _ => None,
            },
            (NablaNegOrRight, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    Or(a, b) => Some(vec![r(&[&nab(&neg(a))]), r(&[&nab(&neg(b))])]),
                    _ => None,
                },
                _ => None,
            },
            (AndLeft, And(a, b)) => Some(vec![l(&[a, b])]),
            (AndRight, And(a, b)) => Some(vec![r(&[a]), r(&[b])]),
            (NegAndLeft, Neg(x)) => match x.as_ref() {
                And(a, b) => Some(vec![l(&[&neg(a)]), l(&[&neg(b)])]),
                _ => None,
            },
            (NegAndRight, Neg(x)) => match x.as_ref() {
                And(a, b) => Some(vec![r(&[&neg(a), &neg(b)])]),
                _ => None,
            },
            (NablaAndLeft, Nabla(x)) => match x.as_ref() {
                And(a, b) => Some(vec![l(&[&nab(a), &nab(b)])]),
                _ => None,
            },
            (NablaAndRight, Nabla(x)) => match x.as_ref() {
                And(a, b) => Some(vec![r(&[&nab(a)]), r(&[&nab(b)])]),
                _ => None,
            },
            (NablaNegAndLeft, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    And(a, b) => Some(vec![l(&[&nab(&neg(a))]), l(&[&nab(&neg(b))])]),
                    _ => None,
                },
                _ => None,
            },
            (NablaNegAndRight, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    And(a, b) => Some(vec![r(&[&nab(&neg(a)), &nab(&neg(b))])]),
                    _ => None,
                },
                _ => None,
            },
            (NegNegLeft, Neg(x)) => match x.as_ref() {
                Neg(a) => Some(vec![l(&[a])]),
                _ => None,
            },
            (NegNegRight, Neg(x)) => match x.as_ref() {
                Neg(a) => Some(vec![r(&[a])]),
                _ => None,
            },
            (NablaNegNegLeft, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    Neg(a) => Some(vec![l(&[&nab(a)])]),
                    _ => None,
                },
                _ => None,
            },
            (NablaNegNegRight, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    Neg(a) => Some(vec![r(&[&nab(a)])]),
                    _ => None,
                },
                _ => None,
            },
            (NablaRight, Nabla(a)) => Some(vec![PremiseDelta {
                left: vec![neg(a)],
                right: vec![a.as_ref().clone()],
            }]),
            (NablaNablaLeft, Nabla(x)) => match x.as_ref() {
                Nabla(a) => Some(vec![l(&[&nab(a)])]),
                _ => None,
            },
            (NegNablaLeft, Neg(x)) => match x.as_ref() {
                Nabla(a) => Some(vec![r(&[&nab(a)])]),
                _ => None,
            },
            (NegNablaRight, Neg(x)) => match x.as_ref() {
                Nabla(a) => Some(vec![l(&[&nab(a)])]),
                _ => None,
            },
            (NablaNegNablaLeft, Nabla(x)) => match x.as_ref() {
                Neg(y) => match y.as_ref() {
                    Nabla(a) => Some(vec![r(&[&nab(a)])]),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    /// The context-free schema of a logic rule over metavariables `A`, `B`.
    ///
    /// Panics on structural tags, which have no local shape.
    pub fn schematic_rule(self) -> SchematicRule {
        let principal = self
            .principal_schema()
            .expect("structural tags have no schema");
        let deltas = self
            .decompose(&principal)
            .expect("the schema matches its own tag");
        let premises = deltas.into_iter().map(|d| Sequent::new(d.left, d.right));
        let conclusion = match self.side().unwrap() {
            Side::Left => Sequent::new([principal], []),
            Side::Right => Sequent::new([], [principal]),
        };
        SchematicRule::new(self.to_string(), premises, conclusion)
    }

    /// Principal-formula schema over metavariables, for logic rules.
    pub fn principal_schema(self) -> Option<Formula> {
        let a = Formula::var("A");
        let b = Formula::var("B");
        let bin = |c: fn(Formula, Formula) -> Formula| c(a.clone(), b.clone());
        Some(match self {
            OrLeft | OrRight => bin(Formula::or),
            NegOrLeft | NegOrRight => Formula::neg(bin(Formula::or)),
            NablaOrLeft | NablaOrRight => Formula::nabla(bin(Formula::or)),
            NablaNegOrLeft | NablaNegOrRight => Formula::nabla(Formula::neg(bin(Formula::or))),
            AndLeft | AndRight => bin(Formula::and),
            NegAndLeft | NegAndRight => Formula::neg(bin(Formula::and)),
            NablaAndLeft | NablaAndRight => Formula::nabla(bin(Formula::and)),
            NablaNegAndLeft | NablaNegAndRight => {
                Formula::nabla(Formula::neg(bin(Formula::and)))
            }
            NegNegLeft | NegNegRight => Formula::neg(Formula::neg(a)),
            NablaNegNegLeft | NablaNegNegRight => {
                Formula::nabla(Formula::neg(Formula::neg(a)))
            }
            NablaRight => Formula::nabla(a),
            NablaNablaLeft => Formula::nabla(Formula::nabla(a)),
            NegNablaLeft | NegNablaRight => Formula::neg(Formula::nabla(a)),
            NablaNegNablaLeft => Formula::nabla(Formula::neg(Formula::nabla(a))),
            Axiom | WeakeningLeft | WeakeningRight | Cut => return None,
        })
    }
}

impl fmt::Display for GSixRuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom => "axiom",
            WeakeningLeft => "(w=>)",
            WeakeningRight => "(=>w)",
            OrLeft => "(|=>)",
            OrRight => "(=>|)",
            NegOrLeft => "(~|=>)",
            NegOrRight => "(=>~|)",
            NablaOrLeft => "(#|=>)",
            NablaOrRight => "(=>#|)",
            NablaNegOrLeft => "(#~|=>)",
            NablaNegOrRight => "(=>#~|)",
            AndLeft => "(&=>)",
            AndRight => "(=>&)",
            NegAndLeft => "(~&=>)",
            NegAndRight => "(=>~&)",
            NablaAndLeft => "(#&=>)",
            NablaAndRight => "(=>#&)",
            NablaNegAndLeft => "(#~&=>)",
            NablaNegAndRight => "(=>#~&)",
            NegNegLeft => "(~~=>)",
            NegNegRight => "(=>~~)",
            NablaNegNegLeft => "(#~~=>)",
            NablaNegNegRight => "(=>#~~)",
            NablaRight => "(=>#)",
            NablaNablaLeft => "(##=>)",
            NegNablaLeft => "(~#=>)",
            NegNablaRight => "(=>~#)",
            NablaNegNablaLeft => "(#~#=>)",
            Cut => "cut",
        };
        f.write_str(s)
    }
}

/// Error for unrecognized rule names.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule tag `{0}`")]
pub struct ParseRuleTagError(pub String);

impl FromStr for GSixRuleTag {
    type Err = ParseRuleTagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            Axiom,
            WeakeningLeft,
            WeakeningRight,
            Cut,
        ];
        all.iter()
            .chain(GSixRuleTag::logic_rules())
            .copied()
            .find(|t| t.to_string() == s.trim())
            .ok_or_else(|| ParseRuleTagError(s.to_string()))
    }
}

/// Termination weight: variables weigh 1, negation adds 1, nabla adds 3,
/// binary connectives add 1 on top of both sides. Every logic rule, read
/// bottom-up, replaces its principal formula by strictly lighter ones.
pub fn weight(f: &Formula) -> u64 {
    match f {
        Formula::Var(_) => 1,
        Formula::Neg(x) => weight(x) + 1,
        Formula::Nabla(x) => weight(x) + 3,
        Formula::And(x, y) | Formula::Or(x, y) => weight(x) + weight(y) + 1,
    }
}

fn weight_with(f: &Formula, wa: u64, wb: u64) -> u64 {
    match f {
        Formula::Var(name) if name == "A" => wa,
        Formula::Var(name) if name == "B" => wb,
        Formula::Var(_) => 1,
        Formula::Neg(x) => weight_with(x, wa, wb) + 1,
        Formula::Nabla(x) => weight_with(x, wa, wb) + 3,
        Formula::And(x, y) | Formula::Or(x, y) => {
            weight_with(x, wa, wb) + weight_with(y, wa, wb) + 1
        }
    }
}

/// Verify mechanically that each of the 25 logic rules strictly decreases
/// the weight multiset: every formula a premise introduces is lighter than
/// the principal it replaces. The weights are linear in the metavariable
/// weights with small coefficients, so checking the corner points (1,1),
/// (1000,1) and (1,1000) settles the inequality for all weights >= 1.
pub fn verify_weight_decrease() -> Result<(), String> {
    for &tag in GSixRuleTag::logic_rules() {
        let principal = tag.principal_schema().unwrap();
        let deltas = tag.decompose(&principal).unwrap();
        for (wa, wb) in [(1u64, 1u64), (1000, 1), (1, 1000)] {
            let principal_weight = weight_with(&principal, wa, wb);
            for delta in &deltas {
                for f in delta.left.iter().chain(&delta.right) {
                    let w = weight_with(f, wa, wb);
                    if w >= principal_weight {
                        return Err(format!(
                            "rule {tag}: premise formula `{f}` weighs {w}, \
                             principal `{principal}` weighs {principal_weight} \
                             (at A={wa}, B={wb})"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
