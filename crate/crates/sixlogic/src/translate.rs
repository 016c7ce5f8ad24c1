//! Translation of n-sequents and signed rules into ordinary two-sided
//! sequents, via partitions against a witness table.
//!
//! A partition of an n-sequent distributes each formula of cell `i` to one
//! of the cell's witness slots; the induced two-sided sequent collects the
//! alpha-instantiated formulas on the left and the beta-instantiated ones
//! on the right. `TWO` of an n-sequent is the set of sequents over all
//! partitions. Applied to every rule of the signed calculus this produces
//! the two-sided system: over the six-valued matrix, 230 rules with the
//! per-connective breakdown 16 (negation), 18 (nabla), 98 (disjunction),
//! 98 (conjunction).

use std::collections::BTreeSet;

use crate::formula::Formula;
use crate::matrix::Val;
use crate::rules::SchematicRule;
use crate::semantics::{Caps, SemanticsError};
use crate::sequent::{NSequent, Sequent};
use crate::signed::SignedRule;
use crate::witness::WitnessTable;

/// A partition of an n-sequent: for every value, each formula of that cell
/// is assigned to exactly one alpha or beta slot of the witness row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// `alpha_cells[value][slot]` = formulas sent to that alpha witness.
    pub alpha_cells: Vec<Vec<BTreeSet<Formula>>>,
    /// `beta_cells[value][slot]` = formulas sent to that beta witness.
    pub beta_cells: Vec<Vec<BTreeSet<Formula>>>,
}

/// Number of partitions of `ns` under `w`: the product over cells of
/// `slots(value) ^ |cell|`. `None` on overflow.
pub fn partition_count(ns: &NSequent, w: &WitnessTable) -> Option<usize> {
    let mut total: usize = 1;
    for i in 0..ns.width() {
        let slots = w.row(Val(i as u8)).slots();
        for _ in ns.cell(i) {
            total = total.checked_mul(slots)?;
        }
    }
    Some(total)
}

/// All partitions of the n-sequent, in a fixed order: formulas are taken
/// in cell-then-structural order and slot choices cycle last-fastest.
pub fn partitions(
    ns: &NSequent,
    w: &WitnessTable,
    caps: &Caps,
) -> Result<Vec<Partition>, SemanticsError> {
    let count = partition_count(ns, w).unwrap_or(usize::MAX);
    if count > caps.max_partitions {
        return Err(SemanticsError::Resource {
            what: "partition count",
            actual: count,
            cap: caps.max_partitions,
        });
    }
    // flatten to (value, formula, slot count)
    let mut items: Vec<(usize, &Formula, usize)> = Vec::new();
    for i in 0..ns.width() {
        let slots = w.row(Val(i as u8)).slots();
        for f in ns.cell(i) {
            items.push((i, f, slots));
        }
    }
    let empty = Partition {
        alpha_cells: (0..ns.width())
            .map(|i| vec![BTreeSet::new(); w.row(Val(i as u8)).alphas.len()])
            .collect(),
        beta_cells: (0..ns.width())
            .map(|i| vec![BTreeSet::new(); w.row(Val(i as u8)).betas.len()])
            .collect(),
    };
    let mut out = Vec::with_capacity(count);
    let mut choice = vec![0usize; items.len()];
    loop {
        let mut partition = empty.clone();
        for (&slot, &(value, f, _)) in choice.iter().zip(&items) {
            let alphas = w.row(Val(value as u8)).alphas.len();
            if slot < alphas {
                partition.alpha_cells[value][slot].insert(f.clone());
            } else {
                partition.beta_cells[value][slot - alphas].insert(f.clone());
            }
        }
        out.push(partition);
        // advance the odometer
        let mut pos = items.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < items[pos].2 {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The two-sided sequent induced by a partition: alpha witnesses
/// instantiated at their formulas on the left, beta witnesses on the right.
pub fn sequent_of_partition(p: &Partition, w: &WitnessTable) -> Sequent {
    let mut s = Sequent::empty();
    for (value, slots) in p.alpha_cells.iter().enumerate() {
        for (j, formulas) in slots.iter().enumerate() {
            let alpha = &w.row(Val(value as u8)).alphas[j];
            for f in formulas {
                s.left.insert(alpha.substitute("p", f));
            }
        }
    }
    for (value, slots) in p.beta_cells.iter().enumerate() {
        for (k, formulas) in slots.iter().enumerate() {
            let beta = &w.row(Val(value as u8)).betas[k];
            for f in formulas {
                s.right.insert(beta.substitute("p", f));
            }
        }
    }
    s
}

/// `TWO` of an n-sequent: the deduplicated set of sequents over all
/// partitions. The raw partition-indexed list is available from
/// [`partitions`].
pub fn two_of(
    ns: &NSequent,
    w: &WitnessTable,
    caps: &Caps,
) -> Result<BTreeSet<Sequent>, SemanticsError> {
    Ok(partitions(ns, w, caps)?
        .iter()
        .map(|p| sequent_of_partition(p, w))
        .collect())
}

/// Fixed, ordered metavariable names for rule schemas.
pub const METAVARS: [&str; 4] = ["A", "B", "C", "D"];

/// `TWO` of the single signed formula `value : f`, in slot order (alphas
/// first, then betas). This is the building block for rule translation.
pub fn two_of_signed(value: Val, f: &Formula, w: &WitnessTable) -> Vec<Sequent> {
    let row = w.row(value);
    let mut out = Vec::with_capacity(row.slots());
    for alpha in &row.alphas {
        out.push(Sequent::new([alpha.substitute("p", f)], []));
    }
    for beta in &row.betas {
        out.push(Sequent::new([], [beta.substitute("p", f)]));
    }
    out
}

/// Translate one signed rule into two-sided schematic rules.
///
/// The rule's context-free skeleton has single signed metavariable
/// premises; each premise contributes its whole `TWO` set (as a union) and
/// every element of the conclusion's `TWO` set yields one schematic rule.
/// Rules are named after the signed rule with a 1-based conclusion index,
/// e.g. `(~_0)_1`.
pub fn translate_rule(
    rule: &SignedRule,
    w: &WitnessTable,
    m: &crate::matrix::FiniteMatrix,
) -> Vec<SchematicRule> {
    let k = rule.connective.arity();
    let metavars: Vec<Formula> = METAVARS[..k].iter().map(|&v| Formula::var(v)).collect();
    let mut premises: BTreeSet<Sequent> = BTreeSet::new();
    for (i, mv) in metavars.iter().enumerate() {
        premises.extend(two_of_signed(rule.inputs[i], mv, w));
    }
    let compound = rule.connective.apply(&metavars);
    two_of_signed(rule.output, &compound, w)
        .into_iter()
        .enumerate()
        .map(|(idx, conclusion)| SchematicRule {
            name: format!("{}_{}", rule.label(m), idx + 1),
            premises: premises.clone(),
            conclusion,
        })
        .collect()
}

/// Translate a whole signed calculus into its two-sided counterpart,
/// counting one rule per (signed rule, conclusion element) pair.
pub fn translate_calculus(
    rules: &[SignedRule],
    w: &WitnessTable,
    m: &crate::matrix::FiniteMatrix,
) -> Vec<SchematicRule> {
    rules
        .iter()
        .flat_map(|r| translate_rule(r, w, m))
        .collect()
}
