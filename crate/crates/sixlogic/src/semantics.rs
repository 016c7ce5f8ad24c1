//! Brute-force semantic oracles: sequent and n-sequent validity,
//! degree-preserving entailment, theoremhood.
//!
//! Everything here enumerates all assignments exhaustively, so each entry
//! point is guarded by a variable cap and reports a resource error rather
//! than silently sampling.

use std::collections::BTreeSet;

use crate::formula::Formula;
use crate::matrix::{assignments, eval, eval6, m6, Assignment, EvalError, FiniteMatrix};
use crate::sequent::{NSequent, Sequent};
use crate::value::One;

/// Resource limits for the exhaustive procedures.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of distinct variables for assignment enumeration.
    pub max_vars: usize,
    /// Maximum number of partitions the translation may enumerate.
    pub max_partitions: usize,
    /// Maximum size of the generalized-subformula closure in saturation.
    pub max_gsub: usize,
    /// Maximum number of sequent states saturation may materialize.
    pub max_states: usize,
    /// Maximum number of saturation iterations.
    pub max_iterations: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_vars: 8,
            max_partitions: 1_000_000,
            max_gsub: 12,
            max_states: 400_000,
            max_iterations: 10_000,
        }
    }
}

/// Errors from the semantic oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("resource limit exceeded: {what} is {actual}, cap is {cap}")]
    Resource {
        what: &'static str,
        actual: usize,
        cap: usize,
    },
    #[error("n-sequent has {actual} cells but the matrix has {expected} values")]
    IndexMismatch { actual: usize, expected: usize },
    #[error("degree entailment requires a nonempty premise list")]
    EmptyPremises,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn checked_vars(vars: BTreeSet<String>, caps: &Caps) -> Result<Vec<String>, SemanticsError> {
    if vars.len() > caps.max_vars {
        return Err(SemanticsError::Resource {
            what: "variable count",
            actual: vars.len(),
            cap: caps.max_vars,
        });
    }
    Ok(vars.into_iter().collect())
}

/// Does the valuation satisfy the sequent: some antecedent formula
/// undesignated or some succedent formula designated?
pub fn satisfies_sequent(
    s: &Sequent,
    a: &Assignment,
    m: &FiniteMatrix,
) -> Result<bool, EvalError> {
    for f in &s.left {
        if !m.is_designated(eval(f, a, m)?) {
            return Ok(true);
        }
    }
    for f in &s.right {
        if m.is_designated(eval(f, a, m)?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// An assignment falsifying the sequent, if one exists.
pub fn falsifying_assignment(
    s: &Sequent,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<Option<Assignment>, SemanticsError> {
    let vars = checked_vars(s.vars(), caps)?;
    for a in assignments(&vars, m) {
        if !satisfies_sequent(s, &a, m)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Validity of an ordinary sequent with respect to the matrix: satisfied
/// by every valuation. Exhaustive over `|values|^#vars` assignments.
pub fn sequent_valid(s: &Sequent, m: &FiniteMatrix, caps: &Caps) -> Result<bool, SemanticsError> {
    Ok(falsifying_assignment(s, m, caps)?.is_none())
}

/// Does the valuation satisfy the n-sequent: some formula takes exactly
/// its cell's value?
pub fn satisfies_nsequent(
    ns: &NSequent,
    a: &Assignment,
    m: &FiniteMatrix,
) -> Result<bool, EvalError> {
    for (i, f) in ns.signed_formulas() {
        if eval(f, a, m)?.index() == i {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Validity of an n-sequent: every valuation satisfies some signed member.
pub fn nsequent_valid(
    ns: &NSequent,
    m: &FiniteMatrix,
    caps: &Caps,
) -> Result<bool, SemanticsError> {
    if ns.width() != m.value_count() {
        return Err(SemanticsError::IndexMismatch {
            actual: ns.width(),
            expected: m.value_count(),
        });
    }
    let vars = checked_vars(ns.vars(), caps)?;
    for a in assignments(&vars, m) {
        if !satisfies_nsequent(ns, &a, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-preserving entailment over the six-valued algebra: for every
/// assignment, the meet of the premises lies below the conclusion in the
/// lattice order. Premises must be nonempty; theoremhood is a separate
/// notion ([`is_theorem`]).
pub fn degree_entails(
    premises: &[Formula],
    conclusion: &Formula,
    caps: &Caps,
) -> Result<bool, SemanticsError> {
    if premises.is_empty() {
        return Err(SemanticsError::EmptyPremises);
    }
    let mut vars = conclusion.vars();
    for p in premises {
        vars.extend(p.vars());
    }
    let vars = checked_vars(vars, caps)?;
    for a in assignments(&vars, m6()) {
        let mut meet = eval6(&premises[0], &a)?;
        for p in &premises[1..] {
            meet = meet.inf(eval6(p, &a)?);
        }
        if !meet.leq(eval6(conclusion, &a)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Theoremhood: the formula takes the value `1` under every assignment.
pub fn is_theorem(f: &Formula, caps: &Caps) -> Result<bool, SemanticsError> {
    let vars = checked_vars(f.vars(), caps)?;
    for a in assignments(&vars, m6()) {
        if eval6(f, &a)? != One {
            return Ok(false);
        }
    }
    Ok(true)
}
