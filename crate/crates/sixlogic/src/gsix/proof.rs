//! Proof trees for the cut-free calculus and their checker.

use std::fmt;

use crate::formula::Formula;
use crate::gsix::{GSixRuleTag, Side};
use crate::sequent::Sequent;

/// A derivation node: a sequent, the rule that concludes it, the principal
/// formula the rule acts on (absent for axioms), and the subderivations of
/// the rule's premises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub sequent: Sequent,
    pub rule: GSixRuleTag,
    pub principal: Option<Formula>,
    pub children: Vec<ProofTree>,
}

impl ProofTree {
    pub fn axiom(f: Formula) -> ProofTree {
        ProofTree {
            sequent: Sequent::new([f.clone()], [f]),
            rule: GSixRuleTag::Axiom,
            principal: None,
            children: vec![],
        }
    }

    /// Total number of nodes.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(ProofTree::node_count).sum::<usize>()
    }

    /// Apply `f` to every node.
    pub fn for_each_node(&self, f: &mut impl FnMut(&ProofTree)) {
        f(self);
        for child in &self.children {
            child.for_each_node(f);
        }
    }

    /// Derive `target` from the axiom on `shared` by weakening in all the
    /// remaining formulas one at a time. `shared` must occur on both sides
    /// of `target`.
    pub fn axiom_with_weakenings(shared: &Formula, target: &Sequent) -> ProofTree {
        debug_assert!(target.left.contains(shared) && target.right.contains(shared));
        let mut tree = ProofTree::axiom(shared.clone());
        for f in &target.left {
            if f != shared {
                let sequent = tree.sequent.with_left(f.clone());
                tree = ProofTree {
                    sequent,
                    rule: GSixRuleTag::WeakeningLeft,
                    principal: Some(f.clone()),
                    children: vec![tree],
                };
            }
        }
        for f in &target.right {
            if f != shared {
                let sequent = tree.sequent.with_right(f.clone());
                tree = ProofTree {
                    sequent,
                    rule: GSixRuleTag::WeakeningRight,
                    principal: Some(f.clone()),
                    children: vec![tree],
                };
            }
        }
        tree
    }
}

impl fmt::Display for ProofTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &ProofTree, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
            writeln!(f, "{}{}  [{}]", "  ".repeat(depth), t.sequent, t.rule)?;
            for child in &t.children {
                go(child, f, depth + 1)?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}

/// Rejection report: the failing node's path (child indices from the
/// root) and what was expected there.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid proof at node {path:?}: {reason}")]
pub struct ProofCheckError {
    pub path: Vec<usize>,
    pub reason: String,
}

/// Check a proof tree against the calculus.
///
/// Axioms must be `f => f`; weakening adds exactly its principal formula;
/// every logic rule must match its tag's shape with context = the node's
/// sequent minus the principal occurrence, and the children must be
/// exactly the prescribed premises. Cut nodes are rejected unless
/// `allow_cut` is set.
pub fn check_proof(t: &ProofTree, allow_cut: bool) -> Result<(), ProofCheckError> {
    let mut path = Vec::new();
    check_node(t, allow_cut, &mut path)
}

fn fail(path: &[usize], reason: impl Into<String>) -> ProofCheckError {
    ProofCheckError {
        path: path.to_vec(),
        reason: reason.into(),
    }
}

fn check_node(t: &ProofTree, allow_cut: bool, path: &mut Vec<usize>) -> Result<(), ProofCheckError> {
    match t.rule {
        GSixRuleTag::Axiom => {
            if !t.children.is_empty() {
                return Err(fail(path, "axioms have no premises"));
            }
            let ok = t.sequent.left.len() == 1
                && t.sequent.right.len() == 1
                && t.sequent.left == t.sequent.right;
            if !ok {
                return Err(fail(
                    path,
                    format!("axioms have the shape `f => f`, found `{}`", t.sequent),
                ));
            }
        }
        GSixRuleTag::WeakeningLeft | GSixRuleTag::WeakeningRight => {
            let side = if t.rule == GSixRuleTag::WeakeningLeft {
                Side::Left
            } else {
                Side::Right
            };
            let added = t
                .principal
                .as_ref()
                .ok_or_else(|| fail(path, "weakening must name the added formula"))?;
            if t.children.len() != 1 {
                return Err(fail(path, "weakening has exactly one premise"));
            }
            let child = &t.children[0].sequent;
            let mut expected_child = t.sequent.clone();
            let present = match side {
                Side::Left => expected_child.left.remove(added),
                Side::Right => expected_child.right.remove(added),
            };
            if !present {
                return Err(fail(
                    path,
                    format!("weakening formula `{added}` does not occur in the conclusion"),
                ));
            }
            if *child != expected_child {
                return Err(fail(
                    path,
                    format!("weakening premise should be `{expected_child}`, found `{child}`"),
                ));
            }
        }
        GSixRuleTag::Cut => {
            if !allow_cut {
                return Err(fail(path, "cut is disabled for this check"));
            }
            let phi = t
                .principal
                .as_ref()
                .ok_or_else(|| fail(path, "cut must name the cut formula"))?;
            if t.children.len() != 2 {
                return Err(fail(path, "cut has exactly two premises"));
            }
            let expected_first = t.sequent.with_right(phi.clone());
            let expected_second = t.sequent.with_left(phi.clone());
            if t.children[0].sequent != expected_first || t.children[1].sequent != expected_second {
                return Err(fail(
                    path,
                    format!(
                        "cut premises should be `{expected_first}` and `{expected_second}`"
                    ),
                ));
            }
        }
        tag => {
            let principal = t
                .principal
                .as_ref()
                .ok_or_else(|| fail(path, "logic rules must name their principal formula"))?;
            let side = tag.side().expect("logic rules have a side");
            let on_side = match side {
                Side::Left => t.sequent.left.contains(principal),
                Side::Right => t.sequent.right.contains(principal),
            };
            if !on_side {
                return Err(fail(
                    path,
                    format!("principal `{principal}` is not on the {side:?} of `{}`", t.sequent),
                ));
            }
            let deltas = tag.decompose(principal).ok_or_else(|| {
                fail(
                    path,
                    format!("principal `{principal}` does not fit the shape of {tag}"),
                )
            })?;
            // context: the node's sequent minus the principal occurrence
            let mut context = t.sequent.clone();
            match side {
                Side::Left => context.left.remove(principal),
                Side::Right => context.right.remove(principal),
            };
            let expected: Vec<Sequent> = deltas
                .iter()
                .map(|d| {
                    let mut premise = context.clone();
                    premise.left.extend(d.left.iter().cloned());
                    premise.right.extend(d.right.iter().cloned());
                    premise
                })
                .collect();
            let actual: Vec<&Sequent> = t.children.iter().map(|c| &c.sequent).collect();
            if actual.len() != expected.len()
                || actual.iter().zip(&expected).any(|(a, e)| **a != *e)
            {
                let want = expected
                    .iter()
                    .map(|s| format!("`{s}`"))
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(fail(
                    path,
                    format!("{tag} on `{principal}` expects premises {want}"),
                ));
            }
        }
    }
    for (i, child) in t.children.iter().enumerate() {
        path.push(i);
        check_node(child, allow_cut, path)?;
        path.pop();
    }
    Ok(())
}
