//! A workbench for the six-valued logic Six.
//!
//! Six is the degree-preserving logic of involutive Stone algebras. It is
//! determined by a single six-element matrix, and that finiteness makes
//! the whole proof-theoretic pipeline mechanizable end to end:
//!
//! * [`value`] / [`matrix`]: the six truth values, generic finite
//!   matrices, and valuation evaluation;
//! * [`semantics`]: exhaustive semantic oracles for sequents,
//!   n-sequents, degree-preserving entailment and theoremhood;
//! * [`formula`] / [`sequent`]: syntax trees, parser and printer for
//!   formulas, two-sided sequents and six-valued n-sequents;
//! * [`signed`]: the generated 84-rule signed calculus;
//! * [`witness`] / [`translate`]: sufficient-expressiveness witnesses
//!   and the partition translation into a 230-rule two-sided calculus;
//! * [`rules`]: schematic-rule algebra with soundness and admissibility
//!   oracles plus the streamlining transformations;
//! * [`gsix`]: the cut-free calculus GSix with proof objects and checking,
//!   generalized subformulas, forward-saturation and backward-search
//!   decision procedures, and a cross-validation harness.
//!
//! ```
//! use sixlogic::prelude::*;
//!
//! let goal = parse_sequent("p | q => ~(~p & ~q)").unwrap();
//! let decision = decide(&goal, Engine::Cross, &Caps::default()).unwrap();
//! assert!(matches!(decision.outcome, DecisionOutcome::Provable { .. }));
//! ```

pub mod export;
pub mod formula;
pub mod gsix;
pub mod matrix;
pub mod rules;
pub mod semantics;
pub mod sequent;
pub mod signed;
pub mod translate;
pub mod value;
pub mod witness;

#[cfg(test)]
pub(crate) mod testgen;

/// The most commonly used items in one import.
pub mod prelude {
    pub use crate::formula::{parse_formula, Formula};
    pub use crate::gsix::{
        check_proof, decide, decide_backward, decide_saturation, gsub, gsub_sequent, Decision,
        DecisionOutcome, Engine, GSixRuleTag, ProofTree,
    };
    pub use crate::matrix::{eval, eval6, m6, Assignment, FiniteMatrix, Val};
    pub use crate::semantics::{
        degree_entails, is_theorem, nsequent_valid, sequent_valid, Caps,
    };
    pub use crate::sequent::{parse_nsequent, parse_sequent, NSequent, Sequent};
    pub use crate::signed::{apply_sf, check_sf, generate_sf, SignedRule};
    pub use crate::translate::{partitions, translate_calculus, two_of};
    pub use crate::value::TruthValue;
    pub use crate::witness::{six_witnesses, validate_witnesses, WitnessTable};
}

// The book's code snippets double as doc-tests, keeping the guide in sync
// with the library.
#[cfg(doctest)]
mod book {
    macro_rules! book_page {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    book_page!(introduction, "../../../book/src/introduction.md");
    book_page!(semantics, "../../../book/src/semantics.md");
    book_page!(syntax, "../../../book/src/syntax.md");
    book_page!(signed_calculus, "../../../book/src/signed-calculus.md");
    book_page!(translation, "../../../book/src/translation.md");
    book_page!(streamlining, "../../../book/src/streamlining.md");
    book_page!(gsix_calculus, "../../../book/src/gsix.md");
    book_page!(deciding, "../../../book/src/deciding.md");
    book_page!(cli, "../../../book/src/cli.md");
}
