//! Schematic-rule algebra: local soundness and admissibility oracles, the
//! streamlining transformations, and the scripted replay that derives the
//! one-premise disjunction rule from the 36 translated disjunction rules.
//!
//! A schematic rule is context-free: premises and conclusion are local
//! sequents over metavariables (`A`, `B`, ...), and arbitrary contexts may
//! be added to all of them uniformly when the rule is applied.

use std::collections::BTreeSet;

use crate::formula::Formula;
use crate::matrix::{assignments, m6, Connective, FiniteMatrix, Val};
use crate::semantics::{satisfies_sequent, Caps, SemanticsError};
use crate::sequent::Sequent;
use crate::translate::translate_rule;
use crate::value::TruthValue;
use crate::witness::six_witnesses;

/// A context-free inference rule over metavariables: a finite premise set
/// and one conclusion, all local sequents. Premises are kept canonical
/// (deduplicated, structurally ordered), so rules compare up to set
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchematicRule {
    pub name: String,
    pub premises: BTreeSet<Sequent>,
    pub conclusion: Sequent,
}

impl SchematicRule {
    pub fn new(
        name: impl Into<String>,
        premises: impl IntoIterator<Item = Sequent>,
        conclusion: Sequent,
    ) -> SchematicRule {
        SchematicRule {
            name: name.into(),
            premises: premises.into_iter().collect(),
            conclusion,
        }
    }

    /// All metavariables (variables) mentioned by the rule.
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut vars = self.conclusion.vars();
        for p in &self.premises {
            vars.extend(p.vars());
        }
        vars
    }
}

impl std::fmt::Display for SchematicRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let premises = self
            .premises
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("  ;  ");
        write!(f, "{}: [{}] / {}", self.name, premises, self.conclusion)
    }
}

/// Errors from rule transformations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleAlgError {
    #[error("rules have different conclusions: `{0}` vs `{1}`")]
    ConclusionMismatch(String, String),
    #[error("premise index {0} is out of range")]
    BadPremiseIndex(usize),
    #[error("replacement must be a componentwise subset of the premise it replaces")]
    ReplacementNotSubset,
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

fn metavar_list(r: &SchematicRule, caps: &Caps) -> Result<Vec<String>, SemanticsError> {
    let vars = r.metavars();
    if vars.len() > caps.max_vars {
        return Err(SemanticsError::Resource {
            what: "metavariable count",
            actual: vars.len(),
            cap: caps.max_vars,
        });
    }
    Ok(vars.into_iter().collect())
}

/// Local soundness: under every assignment of matrix values to the
/// metavariables, if all premises are satisfied then so is the conclusion.
///
/// Satisfaction of a local sequent is the usual one (some left member
/// undesignated or some right member designated); because the check is
/// per-assignment it implies soundness under arbitrary added contexts.
pub fn rule_locally_sound(
    r: &SchematicRule,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<bool, SemanticsError> {
    let vars = metavar_list(r, caps)?;
    for a in assignments(&vars, m) {
        let mut premises_hold = true;
        for premise in &r.premises {
            if !satisfies_sequent(premise, &a, m)? {
                premises_hold = false;
                break;
            }
        }
        if premises_hold && !satisfies_sequent(&r.conclusion, &a, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the schematic admissibility check, kept explicit because a
/// vacuous acceptance (some premise is unsatisfiable at the value level)
/// is a weaker certificate than a genuine entailment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// Some premise fails under some metavariable assignment, so the
    /// implication "all premises valid implies conclusion valid" holds
    /// trivially.
    Vacuous { failing_premise: Sequent },
    /// All premises are valid at the value level and so is the conclusion.
    Entailed,
    /// All premises are valid at the value level but the conclusion is not.
    Refuted,
}

/// Value-level admissibility analysis of a schematic rule.
pub fn admissibility(
    r: &SchematicRule,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<Admissibility, SemanticsError> {
    let vars = metavar_list(r, caps)?;
    for premise in &r.premises {
        for a in assignments(&vars, m) {
            if !satisfies_sequent(premise, &a, m)? {
                return Ok(Admissibility::Vacuous {
                    failing_premise: premise.clone(),
                });
            }
        }
    }
    for a in assignments(&vars, m) {
        if !satisfies_sequent(&r.conclusion, &a, m)? {
            return Ok(Admissibility::Refuted);
        }
    }
    Ok(Admissibility::Entailed)
}

/// Schematic admissibility: if every premise is valid at the value level
/// (satisfied under every metavariable assignment), the conclusion is
/// valid too. Weaker than local soundness; vacuously true when some
/// premise is not valid at the value level.
pub fn rule_admissible_schematic(
    r: &SchematicRule,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<bool, SemanticsError> {
    Ok(admissibility(r, m, caps)? != Admissibility::Refuted)
}

/// A rule is superfluous when its conclusion already sits among its
/// premises (everything compared after canonicalization).
pub fn is_superfluous(r: &SchematicRule) -> bool {
    r.premises.contains(&r.conclusion)
}

/// Merge two context-free rules with the same conclusion into one rule
/// whose premises are all pairwise unions.
pub fn combine_principle3(
    r1: &SchematicRule,
    r2: &SchematicRule,
) -> Result<SchematicRule, RuleAlgError> {
    if r1.conclusion != r2.conclusion {
        return Err(RuleAlgError::ConclusionMismatch(
            r1.conclusion.to_string(),
            r2.conclusion.to_string(),
        ));
    }
    let premises: BTreeSet<Sequent> = r1
        .premises
        .iter()
        .flat_map(|p| r2.premises.iter().map(move |q| p.union(q)))
        .collect();
    Ok(SchematicRule {
        name: format!("merge({},{})", r1.name, r2.name),
        premises,
        conclusion: r1.conclusion.clone(),
    })
}

/// The premise-cancellation reduction: if the two rules share conclusion
/// and premise set except that one has the extra premise `=> φ` and the
/// other the extra premise `φ =>`, the shared premises alone derive the
/// conclusion. Returns that reduced rule, or `None` when no such `φ` fits.
pub fn reduce_propred(r1: &SchematicRule, r2: &SchematicRule) -> Option<SchematicRule> {
    if r1.conclusion != r2.conclusion {
        return None;
    }
    let find = |pos: &SchematicRule, neg: &SchematicRule| -> Option<SchematicRule> {
        // pos carries `=> φ`, neg carries `φ =>`
        for premise in &pos.premises {
            if !premise.left.is_empty() || premise.right.len() != 1 {
                continue;
            }
            let phi = premise.right.first().unwrap().clone();
            let mirrored = Sequent::new([phi.clone()], []);
            if !neg.premises.contains(&mirrored) {
                continue;
            }
            let mut shared_pos = pos.premises.clone();
            shared_pos.remove(premise);
            let mut shared_neg = neg.premises.clone();
            shared_neg.remove(&mirrored);
            if shared_pos == shared_neg {
                return Some(SchematicRule {
                    name: format!("cancel({},{};{phi})", pos.name, neg.name),
                    premises: shared_pos,
                    conclusion: pos.conclusion.clone(),
                });
            }
        }
        None
    };
    find(r1, r2).or_else(|| find(r2, r1))
}

/// Premise dropping: a premise can be dropped when it is subsumed by an
/// axiom (shares a formula on both sides), subsumed by another premise
/// via weakening, or, as a semantic fallback, when the rule without it is
/// still locally sound.
pub fn drop_premise(
    r: &SchematicRule,
    premise: &Sequent,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<Option<SchematicRule>, RuleAlgError> {
    if !r.premises.contains(premise) {
        return Ok(None);
    }
    let mut reduced = r.clone();
    reduced.premises.remove(premise);
    reduced.name = format!("drop({};{premise})", r.name);
    let by_axiom = premise.has_common_formula();
    let by_weakening = reduced.premises.iter().any(|other| other.subset_of(premise));
    if by_axiom || by_weakening || rule_locally_sound(&reduced, m, caps)? {
        Ok(Some(reduced))
    } else {
        Ok(None)
    }
}

/// Replace the `index`-th premise (in canonical order) by a smaller one.
///
/// The replacement must be a componentwise subset of the original premise.
/// The shrink is accepted when the one-premise rule "original premise /
/// replacement" passes the schematic admissibility oracle, which stands in
/// for the derivability side condition. A vacuous acceptance is possible
/// and intended: the shipped uses hinge on premises that are unsatisfiable
/// at the value level.
pub fn shrink_principle4(
    r: &SchematicRule,
    index: usize,
    replacement: Sequent,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<Option<SchematicRule>, RuleAlgError> {
    let original = r
        .premises
        .iter()
        .nth(index)
        .ok_or(RuleAlgError::BadPremiseIndex(index))?
        .clone();
    if !replacement.subset_of(&original) {
        return Err(RuleAlgError::ReplacementNotSubset);
    }
    let bridge = SchematicRule::new("shrink-check", [original.clone()], replacement.clone());
    if !rule_admissible_schematic(&bridge, m, caps)? {
        return Ok(None);
    }
    let mut premises = r.premises.clone();
    premises.remove(&original);
    premises.insert(replacement);
    Ok(Some(SchematicRule {
        name: format!("shrink({})", r.name),
        premises,
        conclusion: r.conclusion.clone(),
    }))
}

/// One executed step of the recorded streamlining script.
#[derive(Debug, Clone)]
pub struct ReplayStep {
    pub id: usize,
    pub inputs: (String, String),
    pub principle: &'static str,
    pub output: SchematicRule,
}

/// The full trace of a streamlining replay.
#[derive(Debug, Clone)]
pub struct ReplayTrace {
    pub steps: Vec<ReplayStep>,
}

impl ReplayTrace {
    pub fn step(&self, id: usize) -> &ReplayStep {
        &self.steps[id - 1]
    }

    pub fn final_rule(&self) -> &SchematicRule {
        &self.steps.last().expect("trace is nonempty").output
    }
}

/// Replay failures.
#[derive(Debug, Clone, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step} failed: {reason}")]
    StepFailed { step: usize, reason: String },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

#[derive(Clone, Copy)]
enum Table1Input {
    /// The translated disjunction rule for this input pair, with the
    /// conclusion variant `=> A | B`.
    Rule(TruthValue, TruthValue),
    /// The output of an earlier step (1-based).
    Step(usize),
}

use Table1Input::{Rule as R, Step as S};
use TruthValue::{One as V1, OneThird as V13, TwoThirds as V23, Zero as V0, B as VB, N as VN};

/// The 18 recorded cancellation steps that reduce the 36 translated
/// disjunction rules to the one-premise rule `=> B / => A | B`.
const TABLE1_SCRIPT: [(Table1Input, Table1Input); 18] = [
    (R(V1, V23), R(V1, V1)),   // 1
    (R(V23, V23), R(V23, V1)), // 2
    (S(1), S(2)),              // 3
    (R(V1, VN), R(V23, VN)),   // 4
    (R(V1, VB), R(V23, VB)),   // 5
    (S(3), S(5)),              // 6
    (R(VN, V1), R(VN, V23)),   // 7
    (S(7), R(VN, VB)),         // 8
    (S(6), S(8)),              // 9
    (R(VB, V1), R(VB, V23)),   // 10
    (S(10), R(VB, VB)),        // 11
    (R(V0, V1), R(V0, V23)),   // 12
    (R(V13, V1), R(V13, V23)), // 13
    (S(12), S(13)),            // 14
    (R(V0, VB), R(V13, VB)),   // 15
    (S(14), S(15)),            // 16
    (S(11), S(16)),            // 17
    (S(9), S(17)),             // 18
];

/// Execute the recorded disjunction streamlining script.
///
/// Every step is a premise cancellation of two rules with conclusion
/// `=> A | B`; the final rule is `[=> B] / => A | B`. Fails if any step's
/// inputs do not reduce.
pub fn replay_table1() -> Result<ReplayTrace, ReplayError> {
    let w = six_witnesses();
    let m = m6();
    let goal = Sequent::new([], [Formula::or(Formula::var("A"), Formula::var("B"))]);
    let disjunction_variant = |i: TruthValue, j: TruthValue| -> Option<SchematicRule> {
        let rule = crate::signed::SignedRule {
            connective: Connective::Or,
            inputs: vec![Val::from(i), Val::from(j)],
            output: m.op(Connective::Or, &[Val::from(i), Val::from(j)]).unwrap(),
        };
        translate_rule(&rule, &w, m)
            .into_iter()
            .find(|r| r.conclusion == goal)
    };

    let mut steps: Vec<ReplayStep> = Vec::with_capacity(18);
    for (idx, (a, b)) in TABLE1_SCRIPT.iter().enumerate() {
        let id = idx + 1;
        let fetch = |input: &Table1Input| -> Result<SchematicRule, ReplayError> {
            match *input {
                Table1Input::Rule(i, j) => {
                    disjunction_variant(i, j).ok_or_else(|| ReplayError::StepFailed {
                        step: id,
                        reason: format!("no `=> A | B` variant of the ({i},{j}) disjunction rule"),
                    })
                }
                Table1Input::Step(n) => Ok(steps[n - 1].output.clone()),
            }
        };
        let r1 = fetch(a)?;
        let r2 = fetch(b)?;
        let mut output = reduce_propred(&r1, &r2).ok_or_else(|| ReplayError::StepFailed {
            step: id,
            reason: format!("`{r1}` and `{r2}` admit no premise cancellation"),
        })?;
        output.name = format!("table1({id})");
        steps.push(ReplayStep {
            id,
            inputs: (r1.name.clone(), r2.name.clone()),
            principle: "premise cancellation",
            output,
        });
    }
    Ok(ReplayTrace { steps })
}

/// The 25 logic rules of the cut-free calculus as context-free schemas,
/// for feeding the soundness oracle.
pub fn gsix_schematic_rules() -> Vec<SchematicRule> {
    crate::gsix::GSixRuleTag::logic_rules()
        .iter()
        .map(|tag| tag.schematic_rule())
        .collect()
}
