mod common;

use anthem::asp::{parse_program, Predicate, Program};
use anthem::atp::{AtpError, Problem, Prover, ProverConfig, ProverResult, ProverStatus};
use anthem::control::{Direction, UserGuide};
use anthem::verify::{
    assemble_external_equivalence, assemble_strong_equivalence, rename_private_predicates, run_verification,
    weak_equivalence_guide, ClaimStatus, ExternalEquivalence, FormulaRepresentation, RunOptions, Side, Verdict,
    VerifyError,
};
use common::*;
use std::collections::BTreeSet;

/// A prover that proves every problem whose conjecture label is not listed.
struct Refusing(Vec<&'static str>);

impl Prover for Refusing {
    fn prove(&self, problem: &Problem) -> Result<ProverResult, AtpError> {
        let refused = self.0.iter().any(|name| problem.name.contains(name));
        Ok(ProverResult {
            status: if refused {
                ProverStatus::Timeout
            } else {
                ProverStatus::Theorem
            },
            seconds: 0.0,
            output: String::new(),
        })
    }
}

fn program(text: &str) -> Program {
    parse_program(text).unwrap()
}

fn programs(left: &str, right: &str, guide: &str) -> ExternalEquivalence {
    ExternalEquivalence {
        left: Side::Program {
            name: "left".into(),
            program: program(left),
        },
        right: Side::Program {
            name: "right".into(),
            program: program(right),
        },
        user_guide: guide.parse().unwrap(),
        outline: Default::default(),
        direction: Direction::Universal,
        bypass_tightness: false,
    }
}

#[test]
fn strong_equivalence_claims_cover_every_rule_in_both_directions() {
    let claims = assemble_strong_equivalence(
        &program("p :- q. q."),
        &program("p. q."),
        FormulaRepresentation::TauStar,
        Direction::Universal,
    );
    let shape: Vec<(String, Direction)> = claims.iter().map(|c| (c.name.clone(), c.direction)).collect();
    assert_eq!(
        shape,
        [
            ("rule_1".to_string(), Direction::Forward),
            ("rule_2".to_string(), Direction::Forward),
            ("rule_1".to_string(), Direction::Backward),
            ("rule_2".to_string(), Direction::Backward),
        ]
    );
    let backward = assemble_strong_equivalence(
        &program("p :- q. q."),
        &program("p. q."),
        FormulaRepresentation::Mu,
        Direction::Backward,
    );
    assert!(backward.iter().all(|c| c.direction == Direction::Backward));
    assert_eq!(backward.len(), 2);
}

#[test]
fn unproven_lemmas_block_dependent_claims() {
    let task = ExternalEquivalence {
        outline: "lemma[helper]: forall X (q(X) -> p(X)).".parse().unwrap(),
        ..programs(
            "p(X) :- q(X).",
            "p(X) :- q(X), not r(X).",
            "input: q/1. input: r/1. output: p/1.",
        )
    };
    let mut claims = assemble_external_equivalence(&task).unwrap();
    assert_eq!(claims[0].name, "helper");
    assert!(claims[1..].iter().all(|c| c.dependencies == [0]));
    let report = run_verification(&mut claims, &Refusing(vec!["helper"]), &RunOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Inconclusive);
    assert_eq!(claims[0].status, ClaimStatus::Timeout);
    assert!(claims[1..].iter().all(|c| c.status == ClaimStatus::Pending));
    assert!(report.to_string().contains("Skipped"));
}

#[test]
fn saved_problems_are_named_after_task_claim_and_direction() {
    let dir = tempfile::tempdir().unwrap();
    let mut claims = assemble_strong_equivalence(
        &program("p :- q."),
        &program("p :- q, q."),
        FormulaRepresentation::TauStar,
        Direction::Universal,
    );
    let options = RunOptions {
        task: "demo".into(),
        save_problems: Some(dir.path().to_path_buf()),
    };
    let report = run_verification(&mut claims, &Refusing(vec![]), &options).unwrap();
    assert_eq!(report.verdict, Verdict::Success);
    let mut files: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    files.sort();
    assert_eq!(files, ["demo_rule_1_backward.p", "demo_rule_1_forward.p"]);
    for file in files {
        tptp_well_formed(&std::fs::read_to_string(dir.path().join(file)).unwrap()).unwrap();
    }
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["verdict"], "success");
}

#[test]
fn private_predicates_are_renamed_apart() {
    let guide: UserGuide = "input: q/1. output: p/1.".parse().unwrap();
    let theory = anthem::translate::tau_star(&program("aux(X) :- q(X). p(X) :- aux(X)."));
    let mut taken: BTreeSet<String> = ["p", "q", "aux"].map(String::from).into();
    let (renamed, map) = rename_private_predicates(&theory, &guide, &mut taken);
    assert_eq!(map[&Predicate::new("aux", 1)], Predicate::new("aux_p", 1));
    assert!(renamed.predicates().contains(&Predicate::new("aux_p", 1)));
    let (_, again) = rename_private_predicates(&theory, &guide, &mut taken);
    assert_eq!(again[&Predicate::new("aux", 1)], Predicate::new("aux_p_p", 1));
}

#[test]
fn weak_equivalence_makes_everything_public() {
    let guide = weak_equivalence_guide(&program("p :- q."), &program("r."));
    assert_eq!(guide.output_predicates().len(), 3);
    assert!(guide.private_predicates(&guide.output_predicates()).is_empty());
}

#[test]
fn refusals() {
    let recursive = programs(
        "aux(X) :- e(X). aux(X) :- aux(X), e(X). p(X) :- aux(X).",
        "p(X) :- e(X).",
        "input: e/1. output: p/1.",
    );
    let error = assemble_external_equivalence(&recursive).unwrap_err();
    assert!(matches!(error, VerifyError::RefusedNotTight { .. }), "{error}");
    // tight, but a and b depend on each other through negation
    let recursive = programs(
        "a :- e, not b. b :- e, not a. p :- a.",
        "p :- e.",
        "input: e/0. output: p/0.",
    );
    let error = assemble_external_equivalence(&recursive).unwrap_err();
    assert!(matches!(error, VerifyError::RefusedPrivateRecursion { .. }), "{error}");
    assert!(error.is_refusal());

    let spec = |name: &str| Side::Specification {
        name: name.into(),
        specification: "spec: p.".parse().unwrap(),
    };
    let two_specs = ExternalEquivalence {
        left: spec("a"),
        right: spec("b"),
        ..programs("p.", "p.", "output: p/0.")
    };
    assert!(matches!(
        assemble_external_equivalence(&two_specs),
        Err(VerifyError::Unsupported(_))
    ));
}

#[test]
fn specification_is_placed_on_the_left() {
    let task = ExternalEquivalence {
        left: Side::Program {
            name: "cover.lp".into(),
            program: program(&read_corpus("cover.lp")),
        },
        right: Side::Specification {
            name: "cover.spec".into(),
            specification: read_corpus("cover.spec").parse().unwrap(),
        },
        ..programs("p.", "p.", &read_corpus("cover.ug"))
    };
    let claims = assemble_external_equivalence(&task).unwrap();
    let forward: Vec<&str> = claims
        .iter()
        .filter(|c| c.direction == Direction::Forward)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(forward, ["in_cover_1", "constraint_1", "constraint_2"]);
    let backward: Vec<&str> = claims
        .iter()
        .filter(|c| c.direction == Direction::Backward)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(backward, ["_spec_1", "_spec_2", "_spec_3"]);
}

#[test]
fn external_equivalence_with_the_prover() {
    let prover = ProverConfig::with_limits(30, 1);
    if !prover.is_available() {
        eprintln!("note: no prover available, skipping");
        return;
    }
    let task = programs(
        &read_corpus("threshold.1.lp"),
        &read_corpus("threshold.2.lp"),
        &read_corpus("threshold.ug"),
    );
    let mut claims = assemble_external_equivalence(&task).unwrap();
    let report = run_verification(&mut claims, &prover, &RunOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Success, "{report}");
}
