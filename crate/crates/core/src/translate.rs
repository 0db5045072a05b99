//! Translations of mini-gringo programs into target-language theories.
//!
//! - [`tau_star`] handles every rule, expressing arithmetic through value
//!   formulas ([`val`]) so that partial operations such as division and
//!   intervals are captured faithfully.
//! - [`natural`] produces shorter, human-readable formulas for regular rules.
//! - [`mu`] applies the natural translation where possible and τ* elsewhere.
//!
//! Division follows the Euclidean convention `I = J * Q + R`, `0 <= R < J`.
//! This differs from clingo, which truncates towards zero.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::asp::{self, BinaryOperator, BodyLiteral, Head, Rule, Sign, UnaryOperator};
use crate::fol::{self, fresh_name, Formula, Relation, Sort, Term, Theory, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TranslationKind {
    TauStar,
    Natural,
    Mu,
    Completion,
    Gamma,
}

impl TranslationKind {
    /// Whether the translation consumes a program (rather than a theory).
    pub fn takes_program(self) -> bool {
        matches!(
            self,
            TranslationKind::TauStar | TranslationKind::Natural | TranslationKind::Mu
        )
    }
}

impl fmt::Display for TranslationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TranslationKind::TauStar => "tau-star",
            TranslationKind::Natural => "natural",
            TranslationKind::Mu => "mu",
            TranslationKind::Completion => "completion",
            TranslationKind::Gamma => "gamma",
        })
    }
}

impl FromStr for TranslationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "tau-star" => TranslationKind::TauStar,
            "natural" => TranslationKind::Natural,
            "mu" => TranslationKind::Mu,
            "completion" => TranslationKind::Completion,
            "gamma" => TranslationKind::Gamma,
            _ => return Err(format!("unknown translation `{s}`")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("the rule `{0}` is not regular, so the natural translation is undefined for it")]
    NotRegular(Rule),
}

/// Fresh-name supply for one scope of a translation.
#[derive(Clone, Debug, Default)]
struct Names {
    taken: BTreeSet<String>,
}

impl Names {
    fn fresh(&mut self, base: &str) -> String {
        let name = fresh_name(base, &self.taken);
        self.taken.insert(name.clone());
        name
    }

    fn fresh_variable(&mut self, base: &str, sort: Sort) -> Variable {
        Variable::new(&self.fresh(base), sort)
    }
}

fn constant(term: &asp::Term) -> Option<Term> {
    Some(match term {
        asp::Term::Numeral(n) => Term::Numeral(*n),
        asp::Term::Symbol(name) => Term::Symbol(name.clone()),
        asp::Term::Infimum => Term::Infimum,
        asp::Term::Supremum => Term::Supremum,
        asp::Term::Variable(name) => Term::Variable(Variable::general(name)),
        _ => return None,
    })
}

/// A formula expressing that `z` is a value of the program term `term`.
///
/// Helper variables are chosen fresh with respect to `taken`, which should
/// contain every variable name in scope (rule variables and `z` itself).
pub fn val(term: &asp::Term, z: &Variable, taken: &BTreeSet<String>) -> Formula {
    let mut names = Names { taken: taken.clone() };
    names.taken.insert(z.name.clone());
    for name in term_variable_names(term) {
        names.taken.insert(name);
    }
    val_with(term, z, &mut names)
}

fn term_variable_names(term: &asp::Term) -> Vec<String> {
    let mut out = Vec::new();
    term.variables(&mut out);
    out
}

fn val_with(term: &asp::Term, z: &Variable, names: &mut Names) -> Formula {
    if let Some(c) = constant(term) {
        return Formula::equal(z.term(), c);
    }
    match term {
        asp::Term::Unary {
            op: UnaryOperator::Negative,
            arg,
        } => {
            let i = names.fresh_variable("I", Sort::Integer);
            let inner = val_with(arg, &i, names);
            Formula::exists(
                vec![i.clone()],
                Formula::And(vec![Formula::equal(z.term(), Term::negative(i.term())), inner]),
            )
        }
        asp::Term::Unary {
            op: UnaryOperator::AbsoluteValue,
            arg,
        } => {
            let i = names.fresh_variable("I", Sort::Integer);
            let inner = val_with(arg, &i, names);
            let zero = || Term::Numeral(0);
            Formula::exists(
                vec![i.clone()],
                Formula::And(vec![
                    inner,
                    Formula::Or(vec![
                        Formula::And(vec![
                            Formula::comparison(i.term(), Relation::GreaterEqual, zero()),
                            Formula::equal(z.term(), i.term()),
                        ]),
                        Formula::And(vec![
                            Formula::comparison(i.term(), Relation::Less, zero()),
                            Formula::equal(z.term(), Term::negative(i.term())),
                        ]),
                    ]),
                ]),
            )
        }
        asp::Term::Binary { op, lhs, rhs } => {
            let i = names.fresh_variable("I", Sort::Integer);
            let j = names.fresh_variable("J", Sort::Integer);
            match op {
                BinaryOperator::Add | BinaryOperator::Subtract | BinaryOperator::Multiply => {
                    let value = match op {
                        BinaryOperator::Add => Term::add(i.term(), j.term()),
                        BinaryOperator::Subtract => Term::subtract(i.term(), j.term()),
                        _ => Term::multiply(i.term(), j.term()),
                    };
                    let vi = val_with(lhs, &i, names);
                    let vj = val_with(rhs, &j, names);
                    Formula::exists(vec![i, j], Formula::And(vec![Formula::equal(z.term(), value), vi, vj]))
                }
                BinaryOperator::Divide | BinaryOperator::Modulo => {
                    let q = names.fresh_variable("Q", Sort::Integer);
                    let r = names.fresh_variable("R", Sort::Integer);
                    let vi = val_with(lhs, &i, names);
                    let vj = val_with(rhs, &j, names);
                    let result = if *op == BinaryOperator::Divide {
                        q.term()
                    } else {
                        r.term()
                    };
                    Formula::exists(
                        vec![i.clone(), j.clone(), q.clone(), r.clone()],
                        Formula::And(vec![
                            Formula::equal(i.term(), Term::add(Term::multiply(j.term(), q.term()), r.term())),
                            Formula::And(vec![vi, vj]),
                            Formula::And(vec![
                                Formula::comparison(j.term(), Relation::NotEqual, Term::Numeral(0)),
                                Formula::comparison(r.term(), Relation::GreaterEqual, Term::Numeral(0)),
                                Formula::comparison(r.term(), Relation::Less, j.term()),
                            ]),
                            Formula::equal(z.term(), result),
                        ]),
                    )
                }
                BinaryOperator::Interval => {
                    let k = names.fresh_variable("K", Sort::Integer);
                    let vi = val_with(lhs, &i, names);
                    let vj = val_with(rhs, &j, names);
                    Formula::exists(
                        vec![i.clone(), j.clone(), k.clone()],
                        Formula::And(vec![
                            vi,
                            vj,
                            Formula::equal(z.term(), k.term()),
                            Formula::Comparison(fol::Comparison {
                                term: i.term(),
                                guards: vec![
                                    fol::Guard {
                                        relation: Relation::LessEqual,
                                        term: k.term(),
                                    },
                                    fol::Guard {
                                        relation: Relation::LessEqual,
                                        term: j.term(),
                                    },
                                ],
                            }),
                        ]),
                    )
                }
            }
        }
        _ => unreachable!("constants are handled above"),
    }
}

fn signed(sign: Sign, formula: Formula) -> Formula {
    match sign {
        Sign::NoSign => formula,
        Sign::Negation => Formula::not(formula),
        Sign::DoubleNegation => Formula::not(Formula::not(formula)),
    }
}

fn tau_body_literal(literal: &BodyLiteral, rule_names: &Names) -> Formula {
    let mut names = rule_names.clone();
    match literal {
        BodyLiteral::Literal(literal) => {
            let atom = &literal.atom;
            let zs: Vec<Variable> = atom
                .terms
                .iter()
                .map(|_| names.fresh_variable("Z", Sort::General))
                .collect();
            let mut conjuncts: Vec<Formula> = atom
                .terms
                .iter()
                .zip(&zs)
                .map(|(t, z)| val_with(t, z, &mut names))
                .collect();
            conjuncts.push(signed(
                literal.sign,
                Formula::atom(&atom.predicate_symbol, zs.iter().map(Variable::term).collect()),
            ));
            Formula::exists(zs, Formula::conjoin(conjuncts))
        }
        BodyLiteral::Comparison(comparison) => {
            let z = names.fresh_variable("Z", Sort::General);
            let z1 = names.fresh_variable("Z", Sort::General);
            let v1 = val_with(&comparison.lhs, &z, &mut names);
            let v2 = val_with(&comparison.rhs, &z1, &mut names);
            Formula::exists(
                vec![z.clone(), z1.clone()],
                Formula::And(vec![
                    v1,
                    v2,
                    Formula::comparison(z.term(), comparison.relation.into(), z1.term()),
                ]),
            )
        }
    }
}

/// The τ* translation of a single rule.
pub fn tau_star_rule(rule: &Rule) -> Formula {
    let rule_variables = rule.variables();
    let mut names = Names::default();
    names.taken.extend(rule_variables.iter().cloned());

    let head_atom = rule.head.atom();
    let mut index = 0;
    let mut head_variables = Vec::new();
    for _ in head_atom.map(|atom| atom.terms.as_slice()).unwrap_or_default() {
        let name = loop {
            index += 1;
            let name = format!("V{index}");
            if !names.taken.contains(&name) {
                break name;
            }
        };
        names.taken.insert(name.clone());
        head_variables.push(Variable::general(&name));
    }

    let mut antecedent = Vec::new();
    if let Some(atom) = head_atom {
        for (term, v) in atom.terms.iter().zip(&head_variables) {
            let mut scope = names.clone();
            antecedent.push(val_with(term, v, &mut scope));
        }
    }
    for literal in &rule.body {
        antecedent.push(tau_body_literal(literal, &names));
    }

    let consequent = match head_atom {
        Some(atom) => Formula::atom(
            &atom.predicate_symbol,
            head_variables.iter().map(Variable::term).collect(),
        ),
        None => Formula::Falsity,
    };
    if let Head::Choice(_) = rule.head {
        antecedent.push(Formula::not(Formula::not(consequent.clone())));
    }

    let mut bound = head_variables;
    bound.extend(rule_variables.iter().map(|name| Variable::general(name)));
    Formula::forall(bound, Formula::implies(Formula::conjoin(antecedent), consequent))
}

/// The τ* translation of a program: one formula per rule, in rule order.
pub fn tau_star(program: &asp::Program) -> Theory {
    Theory::new(program.rules.iter().map(tau_star_rule).collect())
}

fn is_arithmetic(term: &asp::Term) -> bool {
    matches!(term, asp::Term::Unary { .. } | asp::Term::Binary { .. })
}

/// Whether a term is built from numerals and variables with `+`, `-`, `*`, and unary minus.
fn is_integer_expression(term: &asp::Term) -> bool {
    match term {
        asp::Term::Numeral(_) | asp::Term::Variable(_) => true,
        asp::Term::Unary {
            op: UnaryOperator::Negative,
            arg,
        } => is_integer_expression(arg),
        asp::Term::Binary {
            op: BinaryOperator::Add | BinaryOperator::Subtract | BinaryOperator::Multiply,
            lhs,
            rhs,
        } => is_integer_expression(lhs) && is_integer_expression(rhs),
        _ => false,
    }
}

/// Terms allowed outside interval comparisons in a regular rule: constants,
/// variables, or integer expressions.
fn is_regular_term(term: &asp::Term) -> bool {
    !is_arithmetic(term) || is_integer_expression(term)
}

fn interval_comparison(literal: &BodyLiteral) -> Option<(&str, &asp::Term, &asp::Term)> {
    if let BodyLiteral::Comparison(comparison) = literal {
        if comparison.relation == asp::Relation::Equal {
            if let (
                asp::Term::Variable(name),
                asp::Term::Binary {
                    op: BinaryOperator::Interval,
                    lhs,
                    rhs,
                },
            ) = (&comparison.lhs, &comparison.rhs)
            {
                return Some((name, lhs, rhs));
            }
        }
    }
    None
}

/// Whether the natural translation is defined for a rule.
///
/// A rule is regular when no division, modulo, or absolute value occurs, every
/// arithmetic term is built from numerals and variables, and intervals occur
/// only as `V = l..u` body comparisons with such bounds.
pub fn is_regular(rule: &Rule) -> bool {
    if let Some(atom) = rule.head.atom() {
        if !atom.terms.iter().all(is_regular_term) {
            return false;
        }
    }
    rule.body.iter().all(|literal| match interval_comparison(literal) {
        Some((_, lower, upper)) => is_integer_expression(lower) && is_integer_expression(upper),
        None => literal.terms().into_iter().all(is_regular_term),
    })
}

/// Variables occurring in an integer context: inside arithmetic or as the
/// variable of an interval comparison.
fn integer_variables(rule: &Rule) -> BTreeSet<String> {
    let mut out = Vec::new();
    for term in rule.terms() {
        if is_arithmetic(term) {
            term.variables(&mut out);
        }
    }
    for literal in &rule.body {
        if let Some((name, _, _)) = interval_comparison(literal) {
            out.push(name.to_string());
        }
    }
    out.into_iter().collect()
}

fn natural_term(term: &asp::Term, integers: &BTreeSet<String>) -> Term {
    match term {
        asp::Term::Variable(name) if integers.contains(name) => Term::Variable(Variable::integer(name)),
        asp::Term::Unary {
            op: UnaryOperator::Negative,
            arg,
        } => match natural_term(arg, integers) {
            Term::Numeral(n) if n > 0 => Term::Numeral(-n),
            arg => Term::negative(arg),
        },
        asp::Term::Binary { op, lhs, rhs } => {
            let lhs = natural_term(lhs, integers);
            let rhs = natural_term(rhs, integers);
            match op {
                BinaryOperator::Add => Term::add(lhs, rhs),
                BinaryOperator::Subtract => Term::subtract(lhs, rhs),
                BinaryOperator::Multiply => Term::multiply(lhs, rhs),
                _ => unreachable!("regular rules contain no `{op:?}` outside intervals"),
            }
        }
        other => constant(other).expect("constant term"),
    }
}

fn natural_atom(atom: &asp::Atom, integers: &BTreeSet<String>) -> Formula {
    Formula::atom(
        &atom.predicate_symbol,
        atom.terms.iter().map(|t| natural_term(t, integers)).collect(),
    )
}

/// The natural translation of a single rule.
pub fn natural_rule(rule: &Rule) -> Result<Formula, TranslationError> {
    if !is_regular(rule) {
        return Err(TranslationError::NotRegular(rule.clone()));
    }
    let integers = integer_variables(rule);

    let mut antecedent = Vec::new();
    for literal in &rule.body {
        let formula = match (interval_comparison(literal), literal) {
            (Some((name, lower, upper)), _) => Formula::Comparison(fol::Comparison {
                term: natural_term(lower, &integers),
                guards: vec![
                    fol::Guard {
                        relation: Relation::LessEqual,
                        term: Term::Variable(Variable::integer(name)),
                    },
                    fol::Guard {
                        relation: Relation::LessEqual,
                        term: natural_term(upper, &integers),
                    },
                ],
            }),
            (None, BodyLiteral::Literal(literal)) => signed(literal.sign, natural_atom(&literal.atom, &integers)),
            (None, BodyLiteral::Comparison(comparison)) => Formula::comparison(
                natural_term(&comparison.lhs, &integers),
                comparison.relation.into(),
                natural_term(&comparison.rhs, &integers),
            ),
        };
        antecedent.push(formula);
    }

    let consequent = match rule.head.atom() {
        Some(atom) => natural_atom(atom, &integers),
        None => Formula::Falsity,
    };
    if let Head::Choice(_) = rule.head {
        antecedent.push(Formula::not(Formula::not(consequent.clone())));
    }

    let body = if antecedent.is_empty() {
        consequent
    } else {
        Formula::implies(Formula::conjoin(antecedent), consequent)
    };

    let variables = rule
        .variables()
        .into_iter()
        .map(|name| {
            if integers.contains(&name) {
                Variable::integer(&name)
            } else {
                Variable::general(&name)
            }
        })
        .collect();
    Ok(Formula::forall(variables, body))
}

/// The natural translation of a program; fails on the first non-regular rule.
pub fn natural(program: &asp::Program) -> Result<Theory, TranslationError> {
    program
        .rules
        .iter()
        .map(natural_rule)
        .collect::<Result<Vec<_>, _>>()
        .map(Theory::new)
}

/// The natural translation of a rule if it is regular, its τ* translation otherwise.
pub fn mu_rule(rule: &Rule) -> Formula {
    natural_rule(rule).unwrap_or_else(|_| tau_star_rule(rule))
}

/// The hybrid translation: natural for regular rules, τ* for the rest.
pub fn mu(program: &asp::Program) -> Theory {
    Theory::new(program.rules.iter().map(mu_rule).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asp::{parse_program, parse_term};

    fn theory(text: &str) -> Theory {
        text.parse().unwrap()
    }

    fn program(text: &str) -> asp::Program {
        parse_program(text).unwrap()
    }

    #[test]
    fn division_rule() {
        let expected = theory(
            "forall V1 V2 X Y (V1 = X and V2 = Y and exists Z Z1 (
                exists I$i J$i Q$i R$i (I$i = J$i * Q$i + R$i and (I$i = X and J$i = Y)
                  and (J$i != 0 and R$i >= 0 and R$i < J$i) and Z = Q$i)
                and Z1 = 0 and Z > Z1) -> p(V1, V2)).",
        );
        let actual = tau_star(&program("p(X,Y) :- X / Y > 0."));
        assert_eq!(actual, expected);
        assert_eq!(actual.to_string(), expected.to_string());
    }

    #[test]
    fn choice_rule() {
        let expected = theory("forall V1 X (V1 = X and exists Z (Z = X and p(Z)) and not not q(V1) -> q(V1)).");
        assert_eq!(tau_star(&program("{q(X)} :- p(X).")), expected);
    }

    #[test]
    fn empty_program() {
        assert_eq!(tau_star(&program("")), Theory::default());
    }

    #[test]
    fn facts_and_constraints() {
        assert_eq!(tau_star(&program("p.")), theory("#true -> p."));
        assert_eq!(
            tau_star(&program(":- q(X).")),
            theory("forall X (exists Z (Z = X and q(Z)) -> #false).")
        );
    }

    #[test]
    fn val_of_constants_and_intervals() {
        let z1 = Variable::general("Z1");
        let taken = BTreeSet::new();
        assert_eq!(val(&parse_term("0").unwrap(), &z1, &taken), "Z1 = 0".parse().unwrap());
        let z = Variable::general("Z");
        assert_eq!(
            val(&parse_term("X..Y+1").unwrap(), &z, &taken),
            "exists I$i J$i K$i (I$i = X and exists I1$i J1$i (J$i = I1$i + J1$i and I1$i = Y and J1$i = 1) and Z = K$i and I$i <= K$i <= J$i)"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn fresh_names_avoid_rule_variables() {
        let f = tau_star_rule(&"p(Z) :- q(Z, V1).".parse().unwrap());
        assert_eq!(
            f,
            "forall V2 Z V1 (V2 = Z and exists Z1 Z2 (Z1 = Z and Z2 = V1 and q(Z1, Z2)) -> p(V2))"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn natural_successor() {
        assert_eq!(
            natural(&program("q(X+1) :- p(X).")).unwrap(),
            theory("forall X$i (p(X$i) -> q(X$i + 1)).")
        );
        assert_eq!(
            natural(&program("q(X) :- p(X-1).")).unwrap(),
            theory("forall X$i (p(X$i - 1) -> q(X$i)).")
        );
    }

    #[test]
    fn regularity() {
        for (text, regular) in [
            ("q(X+1) :- p(X).", true),
            ("p(X,Y) :- X / Y > 0.", false),
            (":- q(X).", true),
            ("p(X) :- X = 1..3.", true),
            ("p(1..3).", false),
            ("p(X) :- X = a..3.", false),
            ("p(X) :- q(X \\ 2).", false),
            ("p(|X|) :- q(X).", false),
            ("p(a+1).", false),
            ("p(X) :- X < a.", true),
            ("p(X) :- X != 1..2.", false),
        ] {
            assert_eq!(is_regular(&text.parse().unwrap()), regular, "{text}");
        }
    }

    #[test]
    fn natural_forms() {
        assert_eq!(
            natural(&program(
                "{q(X)} :- p(X). :- q(X), not r(X). p(1). s :- not not t, X = 1..3, q(X)."
            ))
            .unwrap(),
            theory(
                "forall X (p(X) and not not q(X) -> q(X)).
                 forall X (q(X) and not r(X) -> #false).
                 p(1).
                 forall X$i (not not t and 1 <= X$i <= 3 and q(X$i) -> s)."
            )
        );
    }

    #[test]
    fn natural_rejects_irregular_rules() {
        let rule: Rule = "p(X,Y) :- X / Y > 0.".parse().unwrap();
        assert_eq!(
            natural(&program("q(X+1) :- p(X). p(X,Y) :- X / Y > 0.")),
            Err(TranslationError::NotRegular(rule))
        );
    }

    #[test]
    fn mu_dispatches_per_rule() {
        let p = program("q(X+1) :- p(X). p(X,Y) :- X / Y > 0.");
        let expected = Theory::new(vec![natural_rule(&p.rules[0]).unwrap(), tau_star_rule(&p.rules[1])]);
        assert_eq!(mu(&p), expected);
    }
}
