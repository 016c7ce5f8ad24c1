//! Generalized subformulas: the closure that bounds the saturation
//! procedure's search space.
//!
//! Beyond ordinary subformulas the closure follows negation and nabla
//! through the connectives the calculus decomposes: `~a` and `~b` under a
//! negated binary, `a` and `~a` under a nabla, `#a` under `~#a`, and so
//! on. The extended mode additionally closes `#(a | b)` and `#~(a | b)`
//! under `#a`/`#b` and `#~a`/`#~b`, mirroring the conjunction clauses;
//! without it the two nabla-disjunction rules can never fire inside the
//! bounded search space and saturation misses provable sequents such as
//! `#(p | q) => #p | #q`.

use std::collections::BTreeSet;

use crate::formula::Formula;
use crate::sequent::Sequent;

/// Closure flavor: [`GsubMode::Extended`] is the default used by the
/// deciders; [`GsubMode::Literal`] omits the disjunction clauses and is
/// kept for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GsubMode {
    #[default]
    Extended,
    Literal,
}

/// Generalized subformulas of a formula (extended mode).
pub fn gsub(f: &Formula) -> BTreeSet<Formula> {
    gsub_with(f, GsubMode::Extended)
}

/// Generalized subformulas under an explicit mode.
pub fn gsub_with(f: &Formula, mode: GsubMode) -> BTreeSet<Formula> {
    let mut acc = BTreeSet::new();
    let mut visited = BTreeSet::new();
    close(f, mode, &mut acc, &mut visited);
    acc
}

/// Generalized subformulas of a sequent: the union over both sides.
pub fn gsub_sequent(s: &Sequent) -> BTreeSet<Formula> {
    gsub_sequent_with(s, GsubMode::Extended)
}

pub fn gsub_sequent_with(s: &Sequent, mode: GsubMode) -> BTreeSet<Formula> {
    let mut acc = BTreeSet::new();
    let mut visited = BTreeSet::new();
    for f in s.formulas() {
        close(f, mode, &mut acc, &mut visited);
    }
    acc
}

fn close(f: &Formula, mode: GsubMode, acc: &mut BTreeSet<Formula>, visited: &mut BTreeSet<Formula>) {
    use Formula::{And, Nabla, Neg, Or, Var};
    if !visited.insert(f.clone()) {
        return;
    }
    acc.insert(f.clone());
    let extended = mode == GsubMode::Extended;
    match f {
        Var(_) => {}
        And(a, b) | Or(a, b) => {
            close(a, mode, acc, visited);
            close(b, mode, acc, visited);
        }
        Neg(x) => match x.as_ref() {
            And(a, b) | Or(a, b) => {
                close(&Formula::neg(a.as_ref().clone()), mode, acc, visited);
                close(&Formula::neg(b.as_ref().clone()), mode, acc, visited);
            }
            Neg(a) => close(a, mode, acc, visited),
            Nabla(a) => close(&Formula::nabla(a.as_ref().clone()), mode, acc, visited),
            Var(_) => {}
        },
        Nabla(x) => {
            close(x, mode, acc, visited);
            close(&Formula::neg(x.as_ref().clone()), mode, acc, visited);
            match x.as_ref() {
                And(a, b) => {
                    close(&Formula::nabla(a.as_ref().clone()), mode, acc, visited);
                    close(&Formula::nabla(b.as_ref().clone()), mode, acc, visited);
                }
                Or(a, b) if extended => {
                    close(&Formula::nabla(a.as_ref().clone()), mode, acc, visited);
                    close(&Formula::nabla(b.as_ref().clone()), mode, acc, visited);
                }
                Neg(y) => match y.as_ref() {
                    And(a, b) => {
                        close(
                            &Formula::nabla(Formula::neg(a.as_ref().clone())),
                            mode,
                            acc,
                            visited,
                        );
                        close(
                            &Formula::nabla(Formula::neg(b.as_ref().clone())),
                            mode,
                            acc,
                            visited,
                        );
                    }
                    Or(a, b) if extended => {
                        close(
                            &Formula::nabla(Formula::neg(a.as_ref().clone())),
                            mode,
                            acc,
                            visited,
                        );
                        close(
                            &Formula::nabla(Formula::neg(b.as_ref().clone())),
                            mode,
                            acc,
                            visited,
                        );
                    }
                    Neg(a) => {
                        close(&Formula::nabla(a.as_ref().clone()), mode, acc, visited);
                    }
                    _ => {}
                },
                _ => {}
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::sequent::parse_sequent;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn variables_are_their_own_closure() {
        assert_eq!(gsub(&f("p")), BTreeSet::from([f("p")]));
        assert_eq!(gsub(&f("~p")), BTreeSet::from([f("~p")]));
    }

    #[test]
    fn the_worked_example_closure() {
        let s = parse_sequent("#~#(p & q) => ~#p | ~#q").unwrap();
        let expected: BTreeSet<Formula> = [
            "#~#(p & q)",
            "~#(p & q)",
            "~~#(p & q)",
            "~#p | ~#q",
            "#(p & q)",
            "~(p & q)",
            "p & q",
            "~#p",
            "~#q",
            "#p",
            "#q",
            "~p",
            "~q",
            "p",
            "q",
        ]
        .iter()
        .map(|s| f(s))
        .collect();
        assert_eq!(gsub_sequent(&s), expected);
        assert_eq!(gsub_sequent(&s).len(), 15);
    }

    #[test]
    fn nabla_over_disjunction_closes_only_in_extended_mode() {
        let g = f("#(p | q)");
        let extended = gsub_with(&g, GsubMode::Extended);
        assert!(extended.contains(&f("#p")));
        assert!(extended.contains(&f("#q")));
        let literal = gsub_with(&g, GsubMode::Literal);
        assert!(!literal.contains(&f("#p")));
        assert!(literal.contains(&f("~(p | q)")));
        assert!(literal.is_subset(&extended));
    }

    #[test]
    fn remark_consequences() {
        // a and ~a are generalized subformulas of ~#a
        let g = gsub(&f("~#p"));
        assert!(g.contains(&f("p")));
        assert!(g.contains(&f("~p")));
        assert!(g.contains(&f("#p")));

        let g = gsub(&f("##p"));
        assert!(g.contains(&f("#p")));

        let g = gsub(&f("#~#p"));
        for needed in ["p", "~p", "#p"] {
            assert!(g.contains(&f(needed)), "missing {needed}");
        }
    }

    #[test]
    fn gsub_is_a_closure_operator_on_samples() {
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(0x6106);
        for _ in 0..50 {
            let g = crate::testgen::random_formula(&mut rng, &["p", "q"], 3);
            let closure = gsub(&g);
            for member in &closure {
                assert!(
                    gsub(member).is_subset(&closure),
                    "gsub not closed at {member} inside {g}"
                );
            }
        }
    }
}
