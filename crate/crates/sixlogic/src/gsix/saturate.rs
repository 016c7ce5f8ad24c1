//! Forward-saturation decision procedure.
//!
//! The search space is every sequent whose sides draw from the
//! generalized-subformula closure `G` of the goal. Starting from the
//! axioms `f => f` (f in G), each round adds every sequent in the space
//! that is the lower sequent of a weakening or logic inference whose upper
//! sequents are already present, until the goal appears (provable) or a
//! fixpoint is reached (not provable). Sequents are encoded as bit pairs
//! over an indexed `G`, so membership is a bitmap lookup; the closure is
//! expanded semi-naively (only inferences touching the newest layer are
//! tried, which generates exactly the same layers).
//!
//! Each newly derived sequent remembers one generating inference, so a
//! proof tree can be rebuilt on demand.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::formula::Formula;
use crate::gsix::decide::{Decision, DecisionOutcome, Stats};
use crate::gsix::gsub::{gsub_sequent_with, GsubMode};
use crate::gsix::proof::ProofTree;
use crate::gsix::{GSixRuleTag, Side};
use crate::semantics::Caps;
use crate::sequent::Sequent;

/// Hard ceiling on the closure size: the membership bitmaps take
/// `4^|G|` bits, so anything past this is unreasonable to materialize.
pub const HARD_MAX_GSUB: usize = 14;

/// Decide a sequent by saturation under the default (extended) closure.
pub fn decide_saturation(goal: &Sequent, caps: &Caps) -> Decision {
    decide_saturation_with(goal, caps, GsubMode::Extended)
}

/// Decide a sequent by saturation under an explicit closure mode. The
/// literal mode is incomplete for nabla-over-disjunction goals and is kept
/// for comparison.
pub fn decide_saturation_with(goal: &Sequent, caps: &Caps, mode: GsubMode) -> Decision {
    let closure: BTreeSet<Formula> = gsub_sequent_with(goal, mode);
    let cap = caps.max_gsub.min(HARD_MAX_GSUB);
    if closure.len() > cap {
        return Decision {
            outcome: DecisionOutcome::ResourceExceeded {
                details: format!(
                    "generalized-subformula closure has {} formulas, cap is {cap}",
                    closure.len()
                ),
            },
            stats: Stats::default(),
        };
    }
    Saturation::new(closure.into_iter().collect(), goal, caps).run()
}

/// One remembered inference per derived sequent.
#[derive(Debug, Clone)]
enum Origin {
    Axiom,
    Weaken {
        parent: u32,
        side: Side,
        formula: usize,
    },
    Rule {
        tag: GSixRuleTag,
        principal: usize,
        premises: Vec<u32>,
    },
}

/// A logic-rule instance over the indexed closure: principal index plus
/// the premise deltas as (left, right) bit masks.
struct Instance {
    tag: GSixRuleTag,
    side: Side,
    principal: usize,
    deltas: Vec<(u32, u32)>,
}

struct Bitmap {
    words: Vec<u64>,
}

impl Bitmap {
    fn new(bits: usize) -> Bitmap {
        Bitmap {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn get(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1 << (i % 64)) != 0
    }

    fn set(&mut self, i: u32) {
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }
}

struct Saturation<'a> {
    formulas: Vec<Formula>,
    width: usize,
    caps: &'a Caps,
    goal: u32,
    instances: Vec<Instance>,
    /// Sequents in the current layer set S_j.
    current: Bitmap,
    /// Sequents ever generated (S_j plus the pending layer).
    seen: Bitmap,
    origins: HashMap<u32, Origin>,
    frontier: Vec<u32>,
    pending: Vec<u32>,
    state_count: usize,
}

impl<'a> Saturation<'a> {
    fn new(formulas: Vec<Formula>, goal: &Sequent, caps: &'a Caps) -> Saturation<'a> {
        let width = formulas.len();
        let index: HashMap<&Formula, usize> =
            formulas.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mask_of = |set: &BTreeSet<Formula>| -> u32 {
            set.iter().map(|f| 1u32 << index[f]).fold(0, |a, b| a | b)
        };
        let goal_code = mask_of(&goal.left) | mask_of(&goal.right) << width;

        // Every (rule, principal) instance whose premise formulas all stay
        // inside the closure; others can never fire in this space.
        let mut instances = Vec::new();
        for &tag in GSixRuleTag::logic_rules() {
            for (i, f) in formulas.iter().enumerate() {
                let Some(deltas) = tag.decompose(f) else {
                    continue;
                };
                let masks: Option<Vec<(u32, u32)>> = deltas
                    .iter()
                    .map(|d| {
                        let left = d
                            .left
                            .iter()
                            .map(|g| index.get(g).map(|&j| 1u32 << j))
                            .collect::<Option<Vec<_>>>()?
                            .into_iter()
                            .fold(0, |a, b| a | b);
                        let right = d
                            .right
                            .iter()
                            .map(|g| index.get(g).map(|&j| 1u32 << j))
                            .collect::<Option<Vec<_>>>()?
                            .into_iter()
                            .fold(0, |a, b| a | b);
                        Some((left, right))
                    })
                    .collect();
                if let Some(deltas) = masks {
                    instances.push(Instance {
                        tag,
                        side: tag.side().unwrap(),
                        principal: i,
                        deltas,
                    });
                }
            }
        }

        let space_bits = 1usize << (2 * width);
        let mut sat = Saturation {
            formulas,
            width,
            caps,
            goal: goal_code,
            instances,
            current: Bitmap::new(space_bits),
            seen: Bitmap::new(space_bits),
            origins: HashMap::new(),
            frontier: Vec::new(),
            pending: Vec::new(),
            state_count: 0,
        };
        // initial layer: the axioms f => f
        for i in 0..sat.width {
            let code = (1u32 << i) | (1u32 << i) << sat.width;
            sat.offer(code, Origin::Axiom);
        }
        sat.commit();
        sat
    }

    fn offer(&mut self, code: u32, origin: Origin) {
        if !self.seen.get(code) {
            self.seen.set(code);
            self.origins.insert(code, origin);
            self.pending.push(code);
        }
    }

    /// Move the pending layer into the current set and the frontier.
    fn commit(&mut self) {
        self.state_count += self.pending.len();
        for &code in &self.pending {
            self.current.set(code);
        }
        self.frontier = std::mem::take(&mut self.pending);
    }

    fn left_of(&self, code: u32) -> u32 {
        code & ((1u32 << self.width) - 1)
    }

    fn right_of(&self, code: u32) -> u32 {
        code >> self.width
    }

    fn compose(&self, left: u32, right: u32) -> u32 {
        left | right << self.width
    }

    fn run(mut self) -> Decision {
        let mut iterations = 0usize;
        loop {
            if self.current.get(self.goal) {
                let witness = self.extract(self.goal);
                return Decision {
                    outcome: DecisionOutcome::Provable { witness },
                    stats: Stats {
                        iterations,
                        states: self.state_count,
                    },
                };
            }
            if self.frontier.is_empty() {
                // S_j == S_{j-1}: fixpoint without the goal
                return Decision {
                    outcome: DecisionOutcome::NotProvable {
                        counterexample: None,
                    },
                    stats: Stats {
                        iterations,
                        states: self.state_count,
                    },
                };
            }
            iterations += 1;
            if iterations > self.caps.max_iterations {
                return self.exceeded(iterations, "iteration budget exhausted");
            }
            let frontier = std::mem::take(&mut self.frontier);
            for &s in &frontier {
                self.expand(s);
            }
            if self.state_count + self.pending.len() > self.caps.max_states {
                let states = self.state_count + self.pending.len();
                return self.exceeded(iterations, &format!("state budget exhausted ({states})"));
            }
            self.commit();
        }
    }

    fn exceeded(&self, iterations: usize, details: &str) -> Decision {
        Decision {
            outcome: DecisionOutcome::ResourceExceeded {
                details: details.to_string(),
            },
            stats: Stats {
                iterations,
                states: self.state_count,
            },
        }
    }

    /// All lower sequents of inferences with `s` as one upper sequent and
    /// all upper sequents in the current set.
    fn expand(&mut self, s: u32) {
        let (sl, sr) = (self.left_of(s), self.right_of(s));
        // weakening
        for i in 0..self.width {
            let bit = 1u32 << i;
            if sl & bit == 0 {
                self.offer(
                    self.compose(sl | bit, sr),
                    Origin::Weaken {
                        parent: s,
                        side: Side::Left,
                        formula: i,
                    },
                );
            }
            if sr & bit == 0 {
                self.offer(
                    self.compose(sl, sr | bit),
                    Origin::Weaken {
                        parent: s,
                        side: Side::Right,
                        formula: i,
                    },
                );
            }
        }
        // logic rules; deltas are copied out so mutation through offer()
        // does not fight the borrow
        for idx in 0..self.instances.len() {
            let (tag, side, principal) = {
                let inst = &self.instances[idx];
                (inst.tag, inst.side, inst.principal)
            };
            let deltas = self.instances[idx].deltas.clone();
            for (role, &(dl, dr)) in deltas.iter().enumerate() {
                if dl & sl != dl || dr & sr != dr {
                    continue;
                }
                let base_l = sl & !dl;
                let base_r = sr & !dr;
                // the context may keep any subset of the active formulas
                for xl in submasks(dl) {
                    for xr in submasks(dr) {
                        let (gl, gr) = (base_l | xl, base_r | xr);
                        let mut premises = vec![0u32; deltas.len()];
                        premises[role] = s;
                        let mut all_present = true;
                        for (other, &(ol, or)) in deltas.iter().enumerate() {
                            if other == role {
                                continue;
                            }
                            let partner = self.compose(gl | ol, gr | or);
                            if self.current.get(partner) {
                                premises[other] = partner;
                            } else {
                                all_present = false;
                                break;
                            }
                        }
                        if !all_present {
                            continue;
                        }
                        let pbit = 1u32 << principal;
                        let conclusion = match side {
                            Side::Left => self.compose(gl | pbit, gr),
                            Side::Right => self.compose(gl, gr | pbit),
                        };
                        self.offer(
                            conclusion,
                            Origin::Rule {
                                tag,
                                principal,
                                premises,
                            },
                        );
                    }
                }
            }
        }
    }

    fn decode(&self, code: u32) -> Sequent {
        let (l, r) = (self.left_of(code), self.right_of(code));
        let pick = |mask: u32| {
            (0..self.width)
                .filter(move |i| mask & (1 << i) != 0)
                .map(|i| self.formulas[i].clone())
        };
        Sequent::new(pick(l), pick(r))
    }

    /// Rebuild a proof tree from the remembered inferences.
    fn extract(&self, code: u32) -> Option<ProofTree> {
        let mut memo: HashMap<u32, ProofTree> = HashMap::new();
        self.extract_rec(code, &mut memo)
    }

    fn extract_rec(&self, code: u32, memo: &mut HashMap<u32, ProofTree>) -> Option<ProofTree> {
        if let Some(t) = memo.get(&code) {
            return Some(t.clone());
        }
        let sequent = self.decode(code);
        let tree = match self.origins.get(&code)? {
            Origin::Axiom => ProofTree {
                sequent,
                rule: GSixRuleTag::Axiom,
                principal: None,
                children: vec![],
            },
            Origin::Weaken {
                parent,
                side,
                formula,
            } => {
                let child = self.extract_rec(*parent, memo)?;
                ProofTree {
                    sequent,
                    rule: match side {
                        Side::Left => GSixRuleTag::WeakeningLeft,
                        Side::Right => GSixRuleTag::WeakeningRight,
                    },
                    principal: Some(self.formulas[*formula].clone()),
                    children: vec![child],
                }
            }
            Origin::Rule {
                tag,
                principal,
                premises,
            } => {
                // a remembered inference may carry the principal inside its
                // context; the strict checker wants the minimal context, so
                // fall back to direct search for such nodes
                let pbit = 1u32 << *principal;
                let normal = match tag.side().unwrap() {
                    Side::Left => {
                        let gl = self.left_of(code) & !pbit;
                        let gr = self.right_of(code);
                        premises.iter().zip(&self.instances_for(*tag, *principal)).all(
                            |(&premise, &(dl, dr))| {
                                premise == self.compose(gl | dl, gr | dr)
                            },
                        )
                    }
                    Side::Right => {
                        let gl = self.left_of(code);
                        let gr = self.right_of(code) & !pbit;
                        premises.iter().zip(&self.instances_for(*tag, *principal)).all(
                            |(&premise, &(dl, dr))| {
                                premise == self.compose(gl | dl, gr | dr)
                            },
                        )
                    }
                };
                if !normal {
                    return match crate::gsix::backward::decide_backward(&sequent).outcome {
                        DecisionOutcome::Provable { witness } => witness,
                        _ => None,
                    };
                }
                let children = premises
                    .iter()
                    .map(|&p| self.extract_rec(p, memo))
                    .collect::<Option<Vec<_>>>()?;
                ProofTree {
                    sequent,
                    rule: *tag,
                    principal: Some(self.formulas[*principal].clone()),
                    children,
                }
            }
        };
        memo.insert(code, tree.clone());
        Some(tree)
    }

    fn instances_for(&self, tag: GSixRuleTag, principal: usize) -> Vec<(u32, u32)> {
        self.instances
            .iter()
            .find(|i| i.tag == tag && i.principal == principal)
            .map(|i| i.deltas.clone())
            .expect("recorded inferences come from the instance table")
    }
}

/// All submasks of a small mask, the mask itself first.
fn submasks(d: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << d.count_ones().min(4));
    let mut x = d;
    loop {
        out.push(x);
        if x == 0 {
            return out;
        }
        x = (x - 1) & d;
    }
}
