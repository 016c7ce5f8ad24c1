//! Backtracking backward proof search.
//!
//! A goal closes immediately when the two sides share a formula (axiom
//! plus weakenings). Otherwise every (principal formula, matching rule)
//! pair is tried: the premises repeat the goal minus the principal, plus
//! whatever the rule prescribes. Since sequents are set-based, contraction
//! is absorbed, and every rule read bottom-up replaces its principal by
//! strictly lighter formulas, so the weight multiset decreases and the
//! search always terminates. Verdicts are memoized per sequent.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::gsix::decide::{Decision, DecisionOutcome, Stats};
use crate::gsix::proof::ProofTree;
use crate::gsix::{GSixRuleTag, Side};
use crate::sequent::Sequent;

/// Decide a sequent by backward search. Always terminates; on success the
/// outcome carries a checkable proof tree.
pub fn decide_backward(goal: &Sequent) -> Decision {
    static WEIGHTS_OK: OnceLock<()> = OnceLock::new();
    WEIGHTS_OK.get_or_init(|| {
        crate::gsix::verify_weight_decrease()
            .expect("the rule table satisfies the termination measure");
    });

    let mut search = Search {
        memo: HashMap::new(),
        expanded: 0,
    };
    let proof = search.prove(goal);
    debug_assert!(proof
        .as_ref()
        .map(|t| within_gsub(t, goal))
        .unwrap_or(true));
    let stats = Stats {
        iterations: search.expanded,
        states: search.memo.len(),
    };
    let outcome = match proof {
        Some(witness) => DecisionOutcome::Provable {
            witness: Some(witness),
        },
        None => DecisionOutcome::NotProvable {
            counterexample: None,
        },
    };
    Decision { outcome, stats }
}

/// Generalized subformula property: every sequent in the proof stays
/// inside the closure of the root.
fn within_gsub(t: &ProofTree, root: &Sequent) -> bool {
    let closure = crate::gsix::gsub::gsub_sequent(root);
    let mut ok = true;
    t.for_each_node(&mut |node| {
        ok &= node.sequent.formulas().all(|f| closure.contains(f));
    });
    ok
}

struct Search {
    memo: HashMap<Sequent, Option<ProofTree>>,
    expanded: usize,
}

impl Search {
    fn prove(&mut self, goal: &Sequent) -> Option<ProofTree> {
        if let Some(cached) = self.memo.get(goal) {
            return cached.clone();
        }
        self.expanded += 1;
        let result = self.expand(goal);
        self.memo.insert(goal.clone(), result.clone());
        result
    }

    fn expand(&mut self, goal: &Sequent) -> Option<ProofTree> {
        if let Some(shared) = goal.left.intersection(&goal.right).next() {
            return Some(ProofTree::axiom_with_weakenings(&shared.clone(), goal));
        }
        for &tag in GSixRuleTag::logic_rules() {
            let side = tag.side().expect("logic rules have a side");
            let candidates: Vec<_> = match side {
                Side::Left => goal.left.iter().cloned().collect(),
                Side::Right => goal.right.iter().cloned().collect(),
            };
            for principal in candidates {
                let Some(deltas) = tag.decompose(&principal) else {
                    continue;
                };
                let mut context = goal.clone();
                match side {
                    Side::Left => context.left.remove(&principal),
                    Side::Right => context.right.remove(&principal),
                };
                let mut children = Vec::with_capacity(deltas.len());
                let mut all_proved = true;
                for delta in &deltas {
                    let mut premise = context.clone();
                    premise.left.extend(delta.left.iter().cloned());
                    premise.right.extend(delta.right.iter().cloned());
                    match self.prove(&premise) {
                        Some(proof) => children.push(proof),
                        None => {
                            all_proved = false;
                            break;
                        }
                    }
                }
                if all_proved {
                    return Some(ProofTree {
                        sequent: goal.clone(),
                        rule: tag,
                        principal: Some(principal),
                        children,
                    });
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsix::proof::check_proof;
    use crate::matrix::m6;
    use crate::semantics::{sequent_valid, Caps};
    use crate::sequent::parse_sequent;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn prove(s: &str) -> Option<ProofTree> {
        match decide_backward(&parse_sequent(s).unwrap()).outcome {
            DecisionOutcome::Provable { witness } => witness,
            _ => None,
        }
    }

    fn provable(s: &str) -> bool {
        prove(s).is_some()
    }

    #[test]
    fn modal_axioms_are_provable() {
        let proof = prove("p => #p").unwrap();
        assert_eq!(proof.rule, GSixRuleTag::NablaRight);
        check_proof(&proof, false).unwrap();

        let proof = prove("=> #p | ~#p").unwrap();
        check_proof(&proof, false).unwrap();
    }

    #[test]
    fn worked_sequents_are_provable() {
        assert!(provable("p | q => ~(~p & ~q)"));
        assert!(provable("#~#(p & q) => ~#p | ~#q"));
        assert!(provable("#(p | q) => #p | #q"));
        assert!(provable("p => p"));
    }

    #[test]
    fn unprovable_fixtures() {
        assert!(!provable("=>"));
        assert!(!provable("p, ~p => q"));
        assert!(!provable("p => q"));
        assert!(!provable("=> p | ~p"));
    }

    #[test]
    fn no_contradiction_is_provable() {
        let mut rng = StdRng::seed_from_u64(0x7106);
        for _ in 0..60 {
            let g = crate::testgen::random_formula(&mut rng, &["p", "q"], 3);
            let s = Sequent::new(
                [],
                [crate::formula::Formula::and(
                    g.clone(),
                    crate::formula::Formula::neg(g.clone()),
                )],
            );
            assert!(
                !matches!(
                    decide_backward(&s).outcome,
                    DecisionOutcome::Provable { .. }
                ),
                "derived a contradiction for {g}"
            );
        }
    }

    #[test]
    fn provable_implies_semantically_valid() {
        let caps = Caps::default();
        let mut rng = StdRng::seed_from_u64(0x7107);
        for _ in 0..120 {
            let s = crate::testgen::random_sequent(&mut rng, &["p", "q"], 2, 2);
            if let DecisionOutcome::Provable { witness } = decide_backward(&s).outcome {
                assert!(sequent_valid(&s, m6(), &caps).unwrap(), "unsound on {s}");
                let proof = witness.unwrap();
                assert_eq!(proof.sequent, s);
                check_proof(&proof, false).unwrap();
            }
        }
    }

    #[test]
    fn stats_count_expansions() {
        let d = decide_backward(&parse_sequent("p & q => q & p").unwrap());
        assert!(matches!(d.outcome, DecisionOutcome::Provable { .. }));
        assert!(d.stats.iterations > 0);
        assert!(d.stats.states > 0);
    }
}
