//! Sufficient-expressiveness witnesses.
//!
//! A language is sufficiently expressive for a matrix when each truth
//! value `t` can be pinned down by finitely many one-variable formulas:
//! `v(φ) = t` iff all the value's alpha witnesses (instantiated at `φ`)
//! come out undesignated and all its beta witnesses designated. These
//! witness tables drive the translation of the signed calculus into an
//! ordinary two-sided calculus.

use crate::formula::Formula;
use crate::matrix::{eval, Assignment, FiniteMatrix, Val};
use crate::value::TruthValue;

/// Per truth value: the alpha (must be undesignated) and beta (must be
/// designated) witness formulas, all over the single variable `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRow {
    pub alphas: Vec<Formula>,
    pub betas: Vec<Formula>,
}

impl WitnessRow {
    /// Number of partition slots this row contributes.
    pub fn slots(&self) -> usize {
        self.alphas.len() + self.betas.len()
    }
}

/// A witness table: one row per matrix value, indexed like the values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable {
    rows: Vec<WitnessRow>,
}

impl WitnessTable {
    pub fn new(rows: Vec<WitnessRow>) -> WitnessTable {
        WitnessTable { rows }
    }

    pub fn row(&self, v: Val) -> &WitnessRow {
        &self.rows[v.index()]
    }

    pub fn rows(&self) -> &[WitnessRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// The fixed witness table for the six-valued matrix.
///
/// | value | alphas      | betas       |
/// |-------|-------------|-------------|
/// | `0`   | `p`, `#p`   | `~p`        |
/// | `1/3` | `p`         | `~p`, `#p`  |
/// | `n`   | `p`, `~p`   | —           |
/// | `b`   | —           | `p`, `~p`   |
/// | `2/3` | `~p`        | `p`, `#~p`  |
/// | `1`   | `~p`, `#~p` | `p`         |
pub fn six_witnesses() -> WitnessTable {
    let p = Formula::var("p");
    let np = Formula::neg(p.clone());
    let row = |alphas: &[&Formula], betas: &[&Formula]| WitnessRow {
        alphas: alphas.iter().map(|f| (*f).clone()).collect(),
        betas: betas.iter().map(|f| (*f).clone()).collect(),
    };
    let nabla_p = Formula::nabla(p.clone());
    let nabla_np = Formula::nabla(np.clone());
    WitnessTable::new(vec![
        row(&[&p, &nabla_p], &[&np]),       // 0
        row(&[&p], &[&np, &nabla_p]),       // 1/3
        row(&[&p, &np], &[]),               // n
        row(&[], &[&p, &np]),               // b
        row(&[&np], &[&p, &nabla_np]),      // 2/3
        row(&[&np, &nabla_np], &[&p]),      // 1
    ])
}

/// Which witness condition failed, and where.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("table has {actual} rows but the matrix has {expected} values")]
    RowCount { actual: usize, expected: usize },
    #[error("witness `{formula}` for value {value} is not a one-variable formula over p")]
    NotOneVariable { value: usize, formula: String },
    #[error("condition (i) fails at value {value}: the first {side} witness must be p")]
    ConditionOne { value: usize, side: &'static str },
    #[error("condition (ii) fails for value {value} at input value {at}")]
    ConditionTwo { value: usize, at: usize },
}

/// Does value `x` pass all of row `i`'s witness checks?
fn row_matches(
    row: &WitnessRow,
    x: Val,
    m: &FiniteMatrix,
) -> Result<bool, crate::matrix::EvalError> {
    let a = Assignment::from_pairs([("p", x)]);
    for alpha in &row.alphas {
        if m.is_designated(eval(alpha, &a, m)?) {
            return Ok(false);
        }
    }
    for beta in &row.betas {
        if !m.is_designated(eval(beta, &a, m)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Validate a witness table against a matrix.
///
/// Checks that every witness is a one-variable formula over `p`, that
/// condition (i) holds (the first alpha of an undesignated value and the
/// first beta of a designated value is `p` itself), and condition (ii) at
/// the value level: `x = t` iff row `t` matches at `x`. Because all
/// witnesses are unary, the value-level check is equivalent to the
/// valuation-level definition.
pub fn validate_witnesses(m: &FiniteMatrix, w: &WitnessTable) -> Result<(), WitnessError> {
    if w.len() != m.value_count() {
        return Err(WitnessError::RowCount {
            actual: w.len(),
            expected: m.value_count(),
        });
    }
    let p = Formula::var("p");
    for (i, row) in w.rows().iter().enumerate() {
        for f in row.alphas.iter().chain(&row.betas) {
            let vars = f.vars();
            if vars.len() != 1 || !vars.contains("p") {
                return Err(WitnessError::NotOneVariable {
                    value: i,
                    formula: f.to_string(),
                });
            }
        }
        if m.is_designated(Val(i as u8)) {
            if row.betas.first() != Some(&p) {
                return Err(WitnessError::ConditionOne {
                    value: i,
                    side: "beta",
                });
            }
        } else if row.alphas.first() != Some(&p) {
            return Err(WitnessError::ConditionOne {
                value: i,
                side: "alpha",
            });
        }
    }
    for (i, row) in w.rows().iter().enumerate() {
        for x in m.values() {
            let matched = row_matches(row, x, m).expect("one-variable witnesses evaluate");
            if matched != (x.index() == i) {
                return Err(WitnessError::ConditionTwo {
                    value: i,
                    at: x.index(),
                });
            }
        }
    }
    Ok(())
}

/// The six-valued witness table, validated once. Convenience for callers
/// that need a known-good table.
pub fn six_witnesses_checked() -> WitnessTable {
    let w = six_witnesses();
    validate_witnesses(crate::matrix::m6(), &w).expect("the shipped witness table validates");
    w
}

/// Row lookup by six-valued truth value.
impl WitnessTable {
    pub fn row6(&self, v: TruthValue) -> &WitnessRow {
        &self.rows[v.index()]
    }
}
