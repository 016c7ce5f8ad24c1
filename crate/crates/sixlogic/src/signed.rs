//! The generic signed (n-sequent) calculus for a finite matrix.
//!
//! For every k-ary connective `f` and every input tuple of truth values
//! there is one rule: from premises `Ω, a_i : α_i` conclude
//! `Ω, f̂(ā) : f(ᾱ)`. Axioms assert a formula at every value at once, and
//! weakening may only grow cells. Over the six-valued matrix this yields
//! 36 + 36 + 6 + 6 = 84 logical rules.

use std::fmt;

use crate::formula::Formula;
use crate::matrix::{Connective, FiniteMatrix, Val};
use crate::sequent::NSequent;

/// One generated rule: a connective, its input value tuple and the
/// resulting output value (always the table entry for the inputs).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRule {
    pub connective: Connective,
    pub inputs: Vec<Val>,
    pub output: Val,
}

impl SignedRule {
    /// Display label such as `(|_n,b)`, with value names from the matrix.
    pub fn label(&self, m: &FiniteMatrix) -> String {
        let ins = self
            .inputs
            .iter()
            .map(|&v| m.name(v).to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("({}_{ins})", self.connective.symbol())
    }
}

impl fmt::Display for SignedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ins = self
            .inputs
            .iter()
            .map(|v| v.index().to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "({}_{ins}) -> {}",
            self.connective.symbol(),
            self.output.index()
        )
    }
}

/// All logical rules of the signed calculus for the matrix: one per
/// (connective, input tuple) pair.
pub fn generate_sf(m: &FiniteMatrix) -> Vec<SignedRule> {
    let mut rules = Vec::new();
    let n = m.value_count();
    for conn in m.connectives() {
        let k = conn.arity();
        for code in 0..n.pow(k as u32) {
            let mut tuple = vec![Val(0); k];
            let mut c = code;
            for slot in tuple.iter_mut().rev() {
                *slot = Val((c % n) as u8);
                c /= n;
            }
            let output = m.op(conn, &tuple).expect("table present");
            rules.push(SignedRule {
                connective: conn,
                inputs: tuple,
                output,
            });
        }
    }
    rules
}

/// Errors from rule application and derivation checking.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SfError {
    #[error("rule expects {expected} premises, got {actual}")]
    PremiseCount { expected: usize, actual: usize },
    #[error("premise {index} lacks the signed formula {value}:{formula}")]
    SignedFormulaMissing {
        index: usize,
        value: usize,
        formula: String,
    },
    #[error("premise {index} has a different context than premise 0")]
    ContextMismatch { index: usize },
    #[error("premise {index} has {actual} cells, matrix has {expected}")]
    WidthMismatch {
        index: usize,
        actual: usize,
        expected: usize,
    },
}

/// Apply a signed rule: premise `i` must be a shared context plus the
/// signed formula `inputs[i] : principals[i]`; the conclusion is the
/// context plus `output : connective(principals...)`.
pub fn apply_sf(
    rule: &SignedRule,
    premises: &[NSequent],
    principals: &[Formula],
    m: &FiniteMatrix,
) -> Result<NSequent, SfError> {
    let k = rule.connective.arity();
    if premises.len() != k || principals.len() != k {
        return Err(SfError::PremiseCount {
            expected: k,
            actual: premises.len().max(principals.len()),
        });
    }
    let mut context: Option<NSequent> = None;
    for (i, (premise, principal)) in premises.iter().zip(principals).enumerate() {
        if premise.width() != m.value_count() {
            return Err(SfError::WidthMismatch {
                index: i,
                actual: premise.width(),
                expected: m.value_count(),
            });
        }
        let cell = rule.inputs[i].index();
        if !premise.cell(cell).contains(principal) {
            return Err(SfError::SignedFormulaMissing {
                index: i,
                value: cell,
                formula: principal.to_string(),
            });
        }
        let omega = premise.without(cell, principal);
        match &context {
            None => context = Some(omega),
            Some(ctx) if *ctx == omega => {}
            Some(_) => return Err(SfError::ContextMismatch { index: i }),
        }
    }
    let compound = rule.connective.apply(principals);
    Ok(context
        .expect("arity is at least one")
        .with(rule.output.index(), compound))
}

/// One step of a signed-calculus derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SfStep {
    Axiom,
    Weakening,
    Rule {
        rule: SignedRule,
        principals: Vec<Formula>,
    },
}

/// A derivation tree in the signed calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SfDerivation {
    pub sequent: NSequent,
    pub step: SfStep,
    pub children: Vec<SfDerivation>,
}

/// Why a derivation was rejected, with the path of child indices from the root.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid derivation at node {path:?}: {reason}")]
pub struct SfCheckError {
    pub path: Vec<usize>,
    pub reason: String,
}

/// Check a signed-calculus derivation: leaves are axioms `T : α`,
/// weakening only grows cells, and every rule node is a correct
/// [`apply_sf`] instance.
pub fn check_sf(d: &SfDerivation, m: &FiniteMatrix) -> Result<(), SfCheckError> {
    let mut path = Vec::new();
    check_node(d, m, &mut path)
}

fn check_node(d: &SfDerivation, m: &FiniteMatrix, path: &mut Vec<usize>) -> Result<(), SfCheckError> {
    let fail = |path: &[usize], reason: String| SfCheckError {
        path: path.to_vec(),
        reason,
    };
    if d.sequent.width() != m.value_count() {
        return Err(fail(path, "cell count does not match the matrix".into()));
    }
    match &d.step {
        SfStep::Axiom => {
            if !d.children.is_empty() {
                return Err(fail(path, "axiom nodes have no children".into()));
            }
            let mut formulas = d.sequent.cell(0).iter();
            let witness = formulas.next().cloned();
            let ok = match witness {
                Some(ref f) => (0..d.sequent.width())
                    .all(|i| d.sequent.cell(i).len() == 1 && d.sequent.cell(i).contains(f)),
                None => false,
            };
            if !ok {
                return Err(fail(
                    path,
                    "axiom must assert exactly one formula at every value".into(),
                ));
            }
        }
        SfStep::Weakening => {
            if d.children.len() != 1 {
                return Err(fail(path, "weakening has exactly one child".into()));
            }
            if !d.children[0].sequent.subset_of(&d.sequent) {
                return Err(fail(path, "weakening may only grow cells".into()));
            }
        }
        SfStep::Rule { rule, principals } => {
            let premises: Vec<NSequent> =
                d.children.iter().map(|c| c.sequent.clone()).collect();
            match apply_sf(rule, &premises, principals, m) {
                Ok(conclusion) if conclusion == d.sequent => {}
                Ok(conclusion) => {
                    return Err(fail(
                        path,
                        format!("rule conclusion should be `{conclusion}`, found `{}`", d.sequent),
                    ));
                }
                Err(e) => return Err(fail(path, e.to_string())),
            }
        }
    }
    for (i, child) in d.children.iter().enumerate() {
        path.push(i);
        check_node(child, m, path)?;
        path.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::matrix::{boolean_matrix, m6};
    use crate::semantics::{nsequent_valid, satisfies_nsequent, Caps};
    use crate::value::TruthValue::{self, *};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn rule6(conn: Connective, inputs: &[TruthValue]) -> SignedRule {
        let inputs: Vec<Val> = inputs.iter().map(|&v| Val::from(v)).collect();
        let output = m6().op(conn, &inputs).unwrap();
        SignedRule {
            connective: conn,
            inputs,
            output,
        }
    }

    #[test]
    fn rule_counts() {
        let rules = generate_sf(m6());
        assert_eq!(rules.len(), 84);
        let count = |c: Connective| rules.iter().filter(|r| r.connective == c).count();
        assert_eq!(count(Connective::And), 36);
        assert_eq!(count(Connective::Or), 36);
        assert_eq!(count(Connective::Neg), 6);
        assert_eq!(count(Connective::Nabla), 6);

        assert_eq!(generate_sf(&boolean_matrix()).len(), 10);
    }

    /// The three-valued chain with the collapsing nabla, as a matrix with
    /// only 1 designated.
    fn lukasiewicz3() -> FiniteMatrix {
        use crate::matrix::OpTable;
        use std::collections::BTreeMap;
        let v = |i: u8| Val(i);
        let n = 3u8;
        let binary = |f: fn(u8, u8) -> u8| {
            OpTable::Binary(
                (0..n)
                    .map(|x| (0..n).map(|y| v(f(x, y))).collect())
                    .collect(),
            )
        };
        let tables = BTreeMap::from([
            (Connective::And, binary(|x, y| x.min(y))),
            (Connective::Or, binary(|x, y| x.max(y))),
            (
                Connective::Neg,
                OpTable::Unary((0..n).map(|x| v(n - 1 - x)).collect()),
            ),
            (
                Connective::Nabla,
                OpTable::Unary((0..n).map(|x| v(if x == 0 { 0 } else { n - 1 })).collect()),
            ),
        ]);
        FiniteMatrix::new(
            vec!["0".into(), "1/2".into(), "1".into()],
            vec![v(2)],
            tables,
        )
        .unwrap()
    }

    #[test]
    fn the_generator_is_matrix_generic() {
        let l3 = lukasiewicz3();
        let rules = generate_sf(&l3);
        assert_eq!(rules.len(), 9 + 9 + 3 + 3);
        // nabla collapses the middle value up
        let nabla_mid = rules
            .iter()
            .find(|r| r.connective == Connective::Nabla && r.inputs == vec![Val(1)])
            .unwrap();
        assert_eq!(nabla_mid.output, Val(2));

        // the axiom n-sequent is valid over the chain too
        let axiom = {
            let mut ns = NSequent::new(3);
            for i in 0..3 {
                ns.insert(i, crate::formula::parse_formula("p & q").unwrap());
            }
            ns
        };
        let caps = crate::semantics::Caps::default();
        assert!(crate::semantics::nsequent_valid(&axiom, &l3, &caps).unwrap());
    }

    #[test]
    fn rule_outputs_follow_the_tables() {
        let rules = generate_sf(m6());
        let or_n_b = rules
            .iter()
            .find(|r| {
                r.connective == Connective::Or && r.inputs == vec![Val::from(N), Val::from(B)]
            })
            .unwrap();
        assert_eq!(or_n_b.output, Val::from(TwoThirds));
        assert_eq!(or_n_b.label(m6()), "(|_n,b)");
    }

    #[test]
    fn every_generated_rule_is_per_valuation_sound() {
        // metavariable skeleton: if each premise's signed formula holds,
        // the conclusion's signed formula holds, for all value tuples
        for m in [m6().clone(), boolean_matrix()] {
            for rule in generate_sf(&m) {
                let k = rule.connective.arity();
                let mut tuple = vec![0usize; k];
                let n = m.value_count();
                for code in 0..n.pow(k as u32) {
                    let mut c = code;
                    for slot in tuple.iter_mut().rev() {
                        *slot = c % n;
                        c /= n;
                    }
                    let premises_hold =
                        tuple.iter().zip(&rule.inputs).all(|(&x, a)| x == a.index());
                    if premises_hold {
                        let args: Vec<Val> = tuple.iter().map(|&x| Val(x as u8)).collect();
                        assert_eq!(m.op(rule.connective, &args).unwrap(), rule.output);
                    }
                }
            }
        }
    }

    #[test]
    fn apply_or_rule_at_n_b() {
        let mut omega = NSequent::new(6);
        omega.insert_at(Zero, f("r"));
        let p1 = omega.with(N.index(), f("p"));
        let p2 = omega.with(B.index(), f("q"));
        let rule = rule6(Connective::Or, &[N, B]);
        let conclusion = apply_sf(&rule, &[p1, p2], &[f("p"), f("q")], m6()).unwrap();
        assert_eq!(conclusion, omega.with(TwoThirds.index(), f("p | q")));
    }

    #[test]
    fn apply_unary_rules() {
        let omega = NSequent::new(6);
        let rule = rule6(Connective::Neg, &[N]);
        let conclusion =
            apply_sf(&rule, &[omega.with(N.index(), f("p"))], &[f("p")], m6()).unwrap();
        assert_eq!(conclusion, omega.with(N.index(), f("~p")));

        let rule = rule6(Connective::Nabla, &[OneThird]);
        let conclusion = apply_sf(
            &rule,
            &[omega.with(OneThird.index(), f("p"))],
            &[f("p")],
            m6(),
        )
        .unwrap();
        assert_eq!(conclusion, omega.with(One.index(), f("#p")));
    }

    #[test]
    fn apply_errors() {
        let omega = NSequent::new(6);
        let rule = rule6(Connective::Or, &[N, B]);
        let err = apply_sf(
            &rule,
            &[omega.with(N.index(), f("p")), omega.clone()],
            &[f("p"), f("q")],
            m6(),
        )
        .unwrap_err();
        assert!(matches!(err, SfError::SignedFormulaMissing { index: 1, .. }));

        let other_context = omega.with(Zero.index(), f("r"));
        let err = apply_sf(
            &rule,
            &[
                omega.with(N.index(), f("p")),
                other_context.with(B.index(), f("q")),
            ],
            &[f("p"), f("q")],
            m6(),
        )
        .unwrap_err();
        assert!(matches!(err, SfError::ContextMismatch { index: 1 }));
    }

    /// Derivation of `Ω ∪ {out : a∘b}` from two axioms, where `Ω` has both
    /// `a` and `b` in every cell except the consumed positions.
    fn binary_rule_derivation(rule: &SignedRule, a: Formula, b: Formula) -> SfDerivation {
        let mut omega = NSequent::new(6);
        for i in 0..6 {
            omega.insert(i, a.clone());
            omega.insert(i, b.clone());
        }
        let omega = omega
            .without(rule.inputs[0].index(), &a)
            .without(rule.inputs[1].index(), &b);
        let p1 = omega.with(rule.inputs[0].index(), a.clone());
        let p2 = omega.with(rule.inputs[1].index(), b.clone());
        let conclusion = apply_sf(rule, &[p1.clone(), p2.clone()], &[a.clone(), b.clone()], m6())
            .unwrap();
        let leaf = |g: Formula, weakened: NSequent| SfDerivation {
            sequent: weakened,
            step: SfStep::Weakening,
            children: vec![SfDerivation {
                sequent: NSequent::axiom6(g),
                step: SfStep::Axiom,
                children: vec![],
            }],
        };
        SfDerivation {
            sequent: conclusion,
            step: SfStep::Rule {
                rule: rule.clone(),
                principals: vec![a.clone(), b.clone()],
            },
            children: vec![leaf(a, p1), leaf(b, p2)],
        }
    }

    #[test]
    fn check_accepts_axioms_and_rule_steps() {
        let axiom = SfDerivation {
            sequent: NSequent::axiom6(f("p")),
            step: SfStep::Axiom,
            children: vec![],
        };
        assert!(check_sf(&axiom, m6()).is_ok());

        let d = binary_rule_derivation(&rule6(Connective::And, &[B, TwoThirds]), f("p"), f("q"));
        assert!(check_sf(&d, m6()).is_ok());
    }

    #[test]
    fn check_rejects_cell_removal() {
        let axiom = SfDerivation {
            sequent: NSequent::axiom6(f("p")),
            step: SfStep::Axiom,
            children: vec![],
        };
        let shrunk = axiom.sequent.without(0, &f("p"));
        let d = SfDerivation {
            sequent: shrunk,
            step: SfStep::Weakening,
            children: vec![axiom],
        };
        let err = check_sf(&d, m6()).unwrap_err();
        assert!(err.reason.contains("grow"));
    }

    #[test]
    fn check_rejects_context_mismatch() {
        // two axioms for different formulas combined by (|_0,0): the
        // leftover contexts differ
        let p1 = NSequent::axiom6(f("p"));
        let p2 = NSequent::axiom6(f("q"));
        let rule = rule6(Connective::Or, &[Zero, Zero]);
        let bogus = NSequent::axiom6(f("p")).with(Zero.index(), f("p | q"));
        let d = SfDerivation {
            sequent: bogus,
            step: SfStep::Rule {
                rule,
                principals: vec![f("p"), f("q")],
            },
            children: vec![
                SfDerivation {
                    sequent: p1,
                    step: SfStep::Axiom,
                    children: vec![],
                },
                SfDerivation {
                    sequent: p2,
                    step: SfStep::Axiom,
                    children: vec![],
                },
            ],
        };
        let err = check_sf(&d, m6()).unwrap_err();
        assert!(err.reason.contains("context"));
    }

    #[test]
    fn checked_derivations_have_valid_roots() {
        // soundness spot-check across all 36 conjunction rules
        let caps = Caps::default();
        for rule in generate_sf(m6()) {
            if rule.connective.arity() != 2 {
                continue;
            }
            let d = binary_rule_derivation(&rule, f("p"), f("q"));
            check_sf(&d, m6()).unwrap();
            assert!(nsequent_valid(&d.sequent, m6(), &caps).unwrap());
        }
    }

    #[test]
    fn axiom_is_satisfied_by_every_assignment() {
        let ns = NSequent::axiom6(f("p & #q"));
        let caps = Caps::default();
        assert!(nsequent_valid(&ns, m6(), &caps).unwrap());
        // and in particular by one arbitrary spot assignment
        let a = crate::matrix::Assignment::from_pairs([("p", B), ("q", Zero)]);
        assert!(satisfies_nsequent(&ns, &a, m6()).unwrap());
    }
}
