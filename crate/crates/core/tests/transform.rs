mod common;

use anthem::asp::{parse_program, Predicate};
use anthem::fol::Theory;
use anthem::transform::{
    completion, completion_except, gamma, is_completable, ordering_axioms, simplify, simplify_formula, HereThereNaming,
    TransformError,
};
use anthem::translate::tau_star;
use common::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::collections::BTreeSet;

fn theory(text: &str) -> Theory {
    text.parse().unwrap()
}

#[test]
fn completion_merges_rules_for_the_same_predicate() {
    let translated = tau_star(&parse_program("p(1). p(X) :- q(X).").unwrap());
    let completed = completion(&translated).unwrap();
    assert_eq!(
        completed,
        theory(
            "forall V1 (p(V1) <-> V1 = 1 or exists X (V1 = X and exists Z (Z = X and q(Z)))).
             forall V1 (q(V1) <-> #false)."
        )
    );
}

#[test]
fn completion_keeps_constraints_and_exempt_predicates() {
    let translated = tau_star(&parse_program("p(X) :- q(X). :- p(3).").unwrap());
    let completed = completion_except(&translated, &[Predicate::new("q", 1)].into()).unwrap();
    assert_eq!(completed.formulas.len(), 2);
    assert_eq!(
        completed.formulas[0],
        "forall V1 (p(V1) <-> exists X (V1 = X and exists Z (Z = X and q(Z))))"
            .parse()
            .unwrap()
    );
    assert_eq!(completed.formulas[1], "not exists Z (Z = 3 and p(Z))".parse().unwrap());
}

#[test]
fn completion_rejects_non_definitional_formulas() {
    let disjunctive = theory("forall X (q(X) -> p(X) or r(X)).");
    assert!(!is_completable(&disjunctive));
    assert!(matches!(
        completion(&disjunctive),
        Err(TransformError::NotCompletable(_))
    ));
    assert!(completion(&theory("forall X (q(X) -> p(X, X)).")).is_err());
}

#[test]
fn gamma_doubles_negation_free_parts() {
    assert_eq!(
        gamma(&theory("p -> q. not p.")),
        theory("(hp -> hq) and (tp -> tq). not tp.")
    );
    assert_eq!(ordering_axioms(&[Predicate::new("p", 0)].into()), theory("hp -> tp."));
}

#[test]
fn here_there_names_avoid_collisions() {
    let predicates: BTreeSet<Predicate> = [Predicate::new("p", 1), Predicate::new("hp", 1)].into();
    let naming = HereThereNaming::new(&predicates);
    let mut names: BTreeSet<String> = predicates.iter().map(|p| p.name.clone()).collect();
    for p in &predicates {
        assert!(names.insert(naming.here(p).name.clone()), "{}", naming.here(p));
        assert!(names.insert(naming.there(p).name.clone()), "{}", naming.there(p));
    }
}

#[test]
fn simplification_removes_neutral_elements_and_unused_variables() {
    assert_eq!(
        simplify(&theory(
            "forall X Y (p(X) and #true -> q(X) or #false). #false -> p. not #false."
        )),
        theory("forall X (p(X) -> q(X)). #true. #true.")
    );
}

/// Simplification preserves here-and-there models.
#[test]
fn simplification_is_an_equivalence_in_here_and_there() {
    let mut rng = StdRng::seed_from_u64(11);
    let atoms = ["p", "q"];
    let worlds: Vec<(BTreeSet<String>, BTreeSet<String>)> = subsets(&atoms.map(String::from))
        .into_iter()
        .flat_map(|there| {
            let there_list: Vec<String> = there.iter().cloned().collect();
            subsets(&there_list).into_iter().map(move |here| (here, there.clone()))
        })
        .collect();
    for _ in 0..300 {
        let formula = random_formula(&mut rng, &atoms, 4);
        let simplified = simplify_formula(&formula);
        for (here, there) in &worlds {
            assert_eq!(
                here_and_there(&formula, here, there),
                here_and_there(&simplified, here, there),
                "{formula} vs {simplified} at ({here:?}, {there:?})"
            );
        }
    }
}
