mod common;

use anthem::analyze::check_regularity;
use anthem::asp::{parse_program, Program};
use anthem::fol::Theory;
use anthem::translate::{mu, natural, tau_star, TranslationError};
use common::*;

fn program(text: &str) -> Program {
    parse_program(text).unwrap()
}

fn theory(text: &str) -> Theory {
    text.parse().unwrap()
}

#[test]
fn tau_star_of_a_fact_with_an_interval() {
    assert_eq!(
        tau_star(&program("p(1..3).")),
        theory("forall V1 (exists I$i J$i K$i (I$i = 1 and J$i = 3 and V1 = K$i and I$i <= K$i <= J$i) -> p(V1)).")
    );
}

#[test]
fn tau_star_of_choice_rules_and_constraints() {
    assert_eq!(
        tau_star(&program("{q(X)} :- p(X). :- q(X), not p(X).")),
        theory(
            "forall V1 X (V1 = X and exists Z (Z = X and p(Z)) and not not q(V1) -> q(V1)).
             forall X (exists Z (Z = X and q(Z)) and exists Z (Z = X and not p(Z)) -> #false)."
        )
    );
}

#[test]
fn natural_translation_of_regular_rules() {
    assert_eq!(
        natural(&program("q(X) :- p(X), not r(X), X > 2. s(X*2) :- p(X).")).unwrap(),
        theory("forall X (p(X) and not r(X) and X > 2 -> q(X)). forall X$i (p(X$i) -> s(X$i * 2)).")
    );
}

#[test]
fn natural_translation_rejects_irregular_rules() {
    let error = natural(&program("p(X/2) :- q(X).")).unwrap_err();
    assert!(matches!(error, TranslationError::NotRegular(_)), "{error}");
}

#[test]
fn mu_falls_back_to_tau_star_for_irregular_rules() {
    let mixed = program("p(X/2) :- q(X). r(X) :- q(X).");
    let translated = mu(&mixed);
    assert_eq!(
        translated.formulas[0],
        tau_star(&program("p(X/2) :- q(X).")).formulas[0]
    );
    assert_eq!(
        translated.formulas[1],
        natural(&program("r(X) :- q(X).")).unwrap().formulas[0]
    );
}

/// On ground instances of the regular corpus programs, all three
/// translations have the same classical models.
#[test]
fn translations_agree_on_corpus_instances() {
    let domain = window(-3, 9);
    let mut compared = 0;
    for case in corpus_cases() {
        let grounding = ground(&case.program, &domain);
        if grounding.candidates.len() > 14 {
            continue;
        }
        let reference = models(&tau_star(&case.program), &grounding.candidates, &domain);
        assert_eq!(
            models(&mu(&case.program), &grounding.candidates, &domain),
            reference,
            "{}",
            case.label
        );
        if check_regularity(&case.program).verdict {
            let natural = natural(&case.program).unwrap();
            assert_eq!(
                models(&natural, &grounding.candidates, &domain),
                reference,
                "{}",
                case.label
            );
        }
        compared += 1;
    }
    assert!(compared > 50, "only {compared} instances compared");
}
