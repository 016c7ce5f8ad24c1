//! Seeded random generators shared by unit tests.

use rand::rngs::StdRng;
use rand::Rng;

use crate::formula::Formula;
use crate::sequent::Sequent;

pub(crate) fn random_formula(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.random_range(0..4) == 0 {
        return Formula::var(vars[rng.random_range(0..vars.len())]);
    }
    match rng.random_range(0..4) {
        0 => Formula::neg(random_formula(rng, vars, depth - 1)),
        1 => Formula::nabla(random_formula(rng, vars, depth - 1)),
        2 => Formula::and(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
        _ => Formula::or(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
    }
}

pub(crate) fn random_sequent(
    rng: &mut StdRng,
    vars: &[&str],
    depth: usize,
    max_per_side: usize,
) -> Sequent {
    let side = |rng: &mut StdRng| {
        let n = rng.random_range(0..=max_per_side);
        (0..n)
            .map(|_| {
                let d = rng.random_range(0..=depth);
                random_formula(rng, vars, d)
            })
            .collect::<Vec<_>>()
    };
    Sequent::new(side(rng), side(rng))
}
