//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its elapsed time (visible under `--nocapture`).
//!
//! The random criteria use fixed seeds, so every run checks the same
//! instances.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sixlogic::formula::{parse_formula, Formula};
use sixlogic::gsix::{
    check_proof, decide, decide_backward, decide_saturation, gsub_sequent, Decision,
    DecisionOutcome, Engine, GSixRuleTag,
};
use sixlogic::matrix::{assignments, eval, eval6, m6, Assignment, Connective};
use sixlogic::rules::{replay_table1, rule_locally_sound, SchematicRule};
use sixlogic::semantics::{degree_entails, nsequent_valid, sequent_valid, Caps};
use sixlogic::sequent::{parse_schema_sequent, parse_sequent, NSequent, Sequent};
use sixlogic::signed::generate_sf;
use sixlogic::translate::{partitions, sequent_of_partition, translate_calculus, two_of};
use sixlogic::value::TruthValue::{self, *};
use sixlogic::witness::{six_witnesses, validate_witnesses, WitnessTable};

fn conclude(criterion: &str, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("acceptance criterion {criterion} ({what}): PASS in {elapsed:.2?}");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:.0?} budget: {elapsed:.2?}"
    );
}

fn random_formula(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
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

#[test]
fn criterion_01_truth_table_fixtures() {
    let started = Instant::now();
    let neg: Vec<TruthValue> = TruthValue::ALL.iter().map(|v| v.neg()).collect();
    assert_eq!(neg, [One, TwoThirds, N, B, OneThird, Zero]);
    let nabla: Vec<TruthValue> = TruthValue::ALL.iter().map(|v| v.nabla()).collect();
    assert_eq!(nabla, [Zero, One, One, One, One, One]);

    let column = |f: &Formula| -> Vec<TruthValue> {
        TruthValue::ALL
            .iter()
            .map(|&v| eval6(f, &Assignment::from_pairs([("p", v)])).unwrap())
            .collect()
    };
    assert_eq!(
        column(&Formula::circ(Formula::var("p"))),
        [One, Zero, Zero, Zero, Zero, One]
    );
    assert_eq!(
        column(&Formula::bullet(Formula::var("p"))),
        [Zero, One, One, One, One, Zero]
    );
    conclude("1", "truth tables", started, Duration::from_millis(1));
}

#[test]
fn criterion_02_rule_counts() {
    let started = Instant::now();
    let sf = generate_sf(m6());
    assert_eq!(sf.len(), 84);

    let w = six_witnesses();
    let two_sided = translate_calculus(&sf, &w, m6());
    assert_eq!(two_sided.len(), 230);

    let by_name = |sym: &str| {
        two_sided
            .iter()
            .filter(|r| r.name.starts_with(&format!("({sym}_")))
            .count()
    };
    assert_eq!(by_name("~"), 16);
    assert_eq!(by_name("#"), 18);
    assert_eq!(by_name("|"), 98);
    assert_eq!(by_name("&"), 98);

    // independent route: each signed rule contributes one translated rule
    // per witness slot of its output value
    let mut derived = std::collections::BTreeMap::new();
    for rule in &sf {
        *derived.entry(rule.connective).or_insert(0usize) += w.row(rule.output).slots();
    }
    assert_eq!(derived[&Connective::Neg], 16);
    assert_eq!(derived[&Connective::Nabla], 18);
    assert_eq!(derived[&Connective::Or], 98);
    assert_eq!(derived[&Connective::And], 98);
    assert_eq!(derived.values().sum::<usize>(), 230);
    conclude("2", "84 and 230 rules", started, Duration::from_secs(1));
}

#[test]
fn criterion_03_axiom_translation() {
    let started = Instant::now();
    let w = six_witnesses();
    let caps = Caps::default();
    let axiom = NSequent::axiom6(Formula::var("a"));
    let parts = partitions(&axiom, &w, &caps).unwrap();
    assert_eq!(parts.len(), 324);
    for p in &parts {
        let s = sequent_of_partition(p, &w);
        assert!(
            s.has_common_formula(),
            "axiom translation `{s}` is not a weakened identity"
        );
    }
    conclude("3", "324 axiom partitions", started, Duration::from_secs(1));
}

#[test]
fn criterion_04_witness_validation() {
    let started = Instant::now();
    let w = six_witnesses();
    assert_eq!(validate_witnesses(m6(), &w), Ok(()));

    // flipping any single entry to the other side must break validation
    let mut flips = 0;
    for value in 0..6 {
        let row = &w.rows()[value];
        for j in 0..row.alphas.len() {
            let mut rows = w.rows().to_vec();
            let moved = rows[value].alphas.remove(j);
            rows[value].betas.push(moved);
            assert!(
                validate_witnesses(m6(), &WitnessTable::new(rows)).is_err(),
                "alpha flip at value {value}, slot {j} went unnoticed"
            );
            flips += 1;
        }
        for k in 0..row.betas.len() {
            let mut rows = w.rows().to_vec();
            let moved = rows[value].betas.remove(k);
            rows[value].alphas.push(moved);
            assert!(
                validate_witnesses(m6(), &WitnessTable::new(rows)).is_err(),
                "beta flip at value {value}, slot {k} went unnoticed"
            );
            flips += 1;
        }
    }
    assert_eq!(flips, 16, "the table has 16 witness entries");
    conclude("4", "witness table", started, Duration::from_secs(1));
}

#[test]
fn criterion_05_soundness_oracle() {
    let started = Instant::now();
    let caps = Caps::default();

    // the 25 cut-free logic rules
    for &tag in GSixRuleTag::logic_rules() {
        assert!(
            rule_locally_sound(&tag.schematic_rule(), m6(), &caps).unwrap(),
            "{tag} is locally unsound"
        );
    }

    // the 84 signed rules: whenever every premise's signed formula holds,
    // the conclusion's does
    let sf = generate_sf(m6());
    assert_eq!(sf.len(), 84);
    let metavars = ["A", "B"];
    for rule in &sf {
        let k = rule.connective.arity();
        let args: Vec<Formula> = metavars[..k].iter().map(|&v| Formula::var(v)).collect();
        let compound = rule.connective.apply(&args);
        let vars: Vec<String> = metavars[..k].iter().map(|s| s.to_string()).collect();
        for a in assignments(&vars, m6()) {
            let premises_hold = (0..k).all(|i| {
                eval(&args[i], &a, m6()).unwrap() == rule.inputs[i]
            });
            if premises_hold {
                assert_eq!(
                    eval(&compound, &a, m6()).unwrap(),
                    rule.output,
                    "signed rule {} unsound",
                    rule.label(m6())
                );
            }
        }
    }

    // the 230 translated rules
    let translated = translate_calculus(&sf, &six_witnesses(), m6());
    assert_eq!(translated.len(), 230);
    for rule in &translated {
        assert!(
            rule_locally_sound(rule, m6(), &caps).unwrap(),
            "{} is locally unsound",
            rule.name
        );
    }
    conclude("5", "339 rules sound", started, Duration::from_secs(5));
}

#[test]
fn criterion_06_streamlining_replay() {
    let started = Instant::now();
    let trace = replay_table1().unwrap();
    assert_eq!(trace.steps.len(), 18);

    let schema = |premises: &[&str], conclusion: &str| -> SchematicRule {
        SchematicRule::new(
            "expected",
            premises
                .iter()
                .map(|p| parse_schema_sequent(p).unwrap())
                .collect::<Vec<_>>(),
            parse_schema_sequent(conclusion).unwrap(),
        )
    };
    let expect = |id: usize, premises: &[&str]| {
        let expected = schema(premises, "=> A | B");
        let step = trace.step(id);
        assert_eq!(step.output.premises, expected.premises, "row {id}");
        assert_eq!(step.output.conclusion, expected.conclusion, "row {id}");
    };
    expect(9, &["~A =>", "=> B"]);
    expect(17, &["=> ~A", "=> B"]);
    expect(18, &["=> B"]);
    assert_eq!(
        trace.final_rule().premises,
        schema(&["=> B"], "=> A | B").premises
    );
    conclude("6", "table1 replay", started, Duration::from_secs(1));
}

#[test]
fn criterion_07_worked_sequents() {
    let started = Instant::now();
    let caps = Caps::default();

    for text in ["p | q => ~(~p & ~q)", "#~#(p & q) => ~#p | ~#q"] {
        let goal = parse_sequent(text).unwrap();
        let decision = decide(&goal, Engine::Cross, &caps).unwrap();
        assert!(
            decision.outcome.is_provable(),
            "`{text}` should be provable, got {}",
            decision.outcome.verdict()
        );
    }

    let goal = parse_sequent("#~#(p & q) => ~#p | ~#q").unwrap();
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
    .map(|s| parse_formula(s).unwrap())
    .collect();
    assert_eq!(expected.len(), 15);
    assert_eq!(gsub_sequent(&goal), expected);
    conclude("7", "worked sequents", started, Duration::from_secs(5));
}

#[test]
fn criterion_08_negative_fixtures() {
    let started = Instant::now();
    // saturation abstains on closures past 8 formulas; semantic and
    // backward search always deliver the verdict
    let caps = Caps {
        max_gsub: 8,
        max_states: 70_000,
        ..Caps::default()
    };

    let empty = decide(&Sequent::empty(), Engine::Cross, &caps).unwrap();
    assert!(empty.outcome.is_not_provable(), "the empty sequent");

    let explosion = decide(
        &parse_sequent("p, ~p => q").unwrap(),
        Engine::Cross,
        &caps,
    )
    .unwrap();
    assert!(explosion.outcome.is_not_provable(), "explosion");

    let mut rng = StdRng::seed_from_u64(0xACC8);
    for i in 0..100 {
        let gamma = random_formula(&mut rng, &["p", "q", "r"], 3);
        let goal = Sequent::new(
            [],
            [Formula::and(gamma.clone(), Formula::neg(gamma.clone()))],
        );
        let decision = decide(&goal, Engine::Cross, &caps).unwrap();
        assert!(
            decision.outcome.is_not_provable(),
            "contradiction {i} over `{gamma}` was derived"
        );
    }
    conclude("8", "negative fixtures", started, Duration::from_secs(10));
}

#[test]
fn criterion_09_modal_axioms() {
    let started = Instant::now();
    let caps = Caps::default();
    for text in ["p => #p", "=> #p | ~#p"] {
        let goal = parse_sequent(text).unwrap();
        assert!(sequent_valid(&goal, m6(), &caps).unwrap(), "`{text}` valid");
        let decision = decide_backward(&goal);
        match decision.outcome {
            DecisionOutcome::Provable { witness } => {
                check_proof(&witness.unwrap(), false).unwrap()
            }
            other => panic!("`{text}` should be provable, got {other:?}"),
        }
    }
    conclude("9", "modal axioms", started, Duration::from_secs(1));
}

#[test]
fn criterion_10_engine_agreement() {
    let started = Instant::now();
    // saturation participates when the closure is small; it abstains (and
    // only abstains) past these caps
    let caps = Caps {
        max_gsub: 8,
        max_states: 70_000,
        ..Caps::default()
    };
    let mut rng = StdRng::seed_from_u64(0xACC10);
    let vars = ["p", "q", "r"];
    let mut saturation_verdicts = 0;
    let mut proofs_checked = 0;
    for round in 0..500 {
        let side = |rng: &mut StdRng| -> Vec<Formula> {
            let n = rng.random_range(0..=3);
            (0..n)
                .map(|_| {
                    let depth = rng.random_range(0..=3);
                    random_formula(rng, &vars, depth)
                })
                .collect()
        };
        let goal = Sequent::new(side(&mut rng), side(&mut rng));

        let semantic = decide(&goal, Engine::Semantic, &caps).unwrap();
        let backward = decide(&goal, Engine::Backward, &caps).unwrap();
        let saturation = decide_saturation(&goal, &caps);

        let verdicts: Vec<(&str, &Decision)> = vec![
            ("semantic", &semantic),
            ("backward", &backward),
            ("saturation", &saturation),
        ];
        let provable = verdicts.iter().any(|(_, d)| d.outcome.is_provable());
        let refuted = verdicts.iter().any(|(_, d)| d.outcome.is_not_provable());
        assert!(
            !(provable && refuted),
            "round {round}: engines disagree on `{goal}`: {:?}",
            verdicts
                .iter()
                .map(|(n, d)| (*n, d.outcome.verdict()))
                .collect::<Vec<_>>()
        );
        if !saturation.outcome.is_resource_exceeded() {
            saturation_verdicts += 1;
        }
        for (_, d) in &verdicts {
            if let DecisionOutcome::Provable {
                witness: Some(proof),
            } = &d.outcome
            {
                assert_eq!(proof.sequent, goal);
                check_proof(proof, false).unwrap();
                proofs_checked += 1;
            }
        }
    }
    println!(
        "  (saturation reached a verdict on {saturation_verdicts}/500; \
         {proofs_checked} witnesses checked cut-free)"
    );
    assert!(saturation_verdicts >= 100, "saturation barely participated");
    assert!(proofs_checked >= 100, "too few proof witnesses");
    conclude("10", "engine agreement x500", started, Duration::from_secs(300));
}

#[test]
fn criterion_11_translation_semantics() {
    let started = Instant::now();
    let w = six_witnesses();
    let caps = Caps::default();
    let mut rng = StdRng::seed_from_u64(0xACC11);
    let vars = ["p", "q"];
    for round in 0..200 {
        let mut ns = NSequent::new(6);
        for cell in 0..6 {
            for _ in 0..rng.random_range(0..=2u32) {
                if rng.random_range(0..3) > 0 {
                    continue; // keep most cells small
                }
                let depth = rng.random_range(0..=2);
                ns.insert(cell, random_formula(&mut rng, &vars, depth));
            }
        }
        let whole = nsequent_valid(&ns, m6(), &caps).unwrap();
        let translated = two_of(&ns, &w, &caps).unwrap();
        let every = translated
            .iter()
            .all(|s| sequent_valid(s, m6(), &caps).unwrap());
        assert_eq!(
            whole, every,
            "round {round}: translation changed validity of `{ns}`"
        );
    }
    conclude("11", "translation semantics x200", started, Duration::from_secs(60));
}

#[test]
fn criterion_12_degree_matrix_agreement() {
    let started = Instant::now();
    let caps = Caps::default();
    let mut rng = StdRng::seed_from_u64(0xACC12);
    let vars = ["p", "q", "r"];
    for round in 0..500 {
        let n = rng.random_range(1..=3);
        let premises: Vec<Formula> = (0..n)
            .map(|_| random_formula(&mut rng, &vars, 2))
            .collect();
        let conclusion = random_formula(&mut rng, &vars, 2);

        let degree = degree_entails(&premises, &conclusion, &caps).unwrap();

        // independent oracle: matrix consequence over the six-valued
        // matrix with its designated filter
        let mut all_vars: BTreeSet<String> = conclusion.vars();
        for p in &premises {
            all_vars.extend(p.vars());
        }
        let var_list: Vec<String> = all_vars.into_iter().collect();
        let matrix = assignments(&var_list, m6()).all(|a| {
            let premises_designated = premises
                .iter()
                .all(|p| eval6(p, &a).unwrap().is_designated());
            !premises_designated || eval6(&conclusion, &a).unwrap().is_designated()
        });
        assert_eq!(
            degree, matrix,
            "round {round}: degree and matrix consequence split on {premises:?} / {conclusion}"
        );
    }
    conclude("12", "degree vs matrix x500", started, Duration::from_secs(60));
}
