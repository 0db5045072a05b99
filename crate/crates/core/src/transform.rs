//! Theory-to-theory transformations: the here-and-there embedding γ with its
//! ordering axioms, completion of completable theories, and basic simplification.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::asp::Predicate;
use crate::fol::{fresh_name, Atom, Formula, Quantifier, Sort, Term, Theory, Variable};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("the formula `{0}` is not completable: expected a closed implication with an atomic consequent over distinct variables, or with consequent #false")]
    NotCompletable(Formula),
}

/// Names of the "here" and "there" copies of each predicate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HereThereNaming {
    pub map: BTreeMap<Predicate, (Predicate, Predicate)>,
}

impl HereThereNaming {
    /// Prefix every predicate with `h`/`t`, appending underscores until the
    /// generated names collide neither with `predicates` nor with each other.
    pub fn new(predicates: &BTreeSet<Predicate>) -> Self {
        let mut taken: BTreeSet<String> = predicates.iter().map(|p| p.name.clone()).collect();
        let mut fresh = |prefix: &str, predicate: &Predicate| {
            let mut name = format!("{prefix}{}", predicate.name);
            let mut renamed = false;
            while taken.contains(&name) {
                name.push('_');
                renamed = true;
            }
            if renamed {
                log::warn!("renamed the {prefix}-copy of {predicate} to `{name}` to avoid a collision");
            }
            taken.insert(name.clone());
            Predicate::new(&name, predicate.arity)
        };
        let map = predicates
            .iter()
            .map(|p| (p.clone(), (fresh("h", p), fresh("t", p))))
            .collect();
        HereThereNaming { map }
    }

    pub fn here(&self, predicate: &Predicate) -> &Predicate {
        &self.map[predicate].0
    }

    pub fn there(&self, predicate: &Predicate) -> &Predicate {
        &self.map[predicate].1
    }

    fn here_atom(&self, atom: &Atom) -> Formula {
        Formula::atom(&self.here(&atom.predicate()).name, atom.terms.clone())
    }

    /// The formula evaluated in the "there" world.
    pub fn there_formula(&self, formula: &Formula) -> Formula {
        formula.map_atoms(&|atom| Formula::atom(&self.there(&atom.predicate()).name, atom.terms.clone()))
    }
}

fn gamma_formula(formula: &Formula, naming: &HereThereNaming) -> Formula {
    match formula {
        Formula::Truth | Formula::Falsity | Formula::Comparison(_) => formula.clone(),
        Formula::Atom(atom) => naming.here_atom(atom),
        Formula::Not(inner) => Formula::not(naming.there_formula(inner)),
        Formula::And(fs) => Formula::And(fs.iter().map(|f| gamma_formula(f, naming)).collect()),
        Formula::Or(fs) => Formula::Or(fs.iter().map(|f| gamma_formula(f, naming)).collect()),
        Formula::Implies(lhs, rhs) => Formula::And(vec![
            Formula::implies(gamma_formula(lhs, naming), gamma_formula(rhs, naming)),
            Formula::implies(naming.there_formula(lhs), naming.there_formula(rhs)),
        ]),
        Formula::Iff(lhs, rhs) => Formula::And(vec![
            Formula::iff(gamma_formula(lhs, naming), gamma_formula(rhs, naming)),
            Formula::iff(naming.there_formula(lhs), naming.there_formula(rhs)),
        ]),
        Formula::Quantified {
            quantifier,
            variables,
            formula,
        } => Formula::Quantified {
            quantifier: *quantifier,
            variables: variables.clone(),
            formula: Box::new(gamma_formula(formula, naming)),
        },
    }
}

/// γ of a single formula under a given naming, which must cover its predicates.
pub fn gamma_formula_with(formula: &Formula, naming: &HereThereNaming) -> Formula {
    gamma_formula(formula, naming)
}

/// γ of a theory under a given naming, which must cover its predicates.
pub fn gamma_with(theory: &Theory, naming: &HereThereNaming) -> Theory {
    Theory::new(theory.formulas.iter().map(|f| gamma_formula(f, naming)).collect())
}

/// The here-and-there embedding: classical models of the result that satisfy
/// the ordering axioms correspond to the here-and-there models of `theory`.
pub fn gamma(theory: &Theory) -> Theory {
    gamma_with(theory, &HereThereNaming::new(&theory.predicates()))
}

fn argument_variables(arity: usize) -> Vec<Variable> {
    match arity {
        1 => vec![Variable::general("X")],
        2 => vec![Variable::general("X"), Variable::general("Y")],
        3 => ["X", "Y", "Z"].iter().map(|n| Variable::general(n)).collect(),
        _ => (1..=arity).map(|i| Variable::general(&format!("X{i}"))).collect(),
    }
}

/// One axiom `forall X.. (hp(X..) -> tp(X..))` per predicate of the naming.
pub fn ordering_axioms_with(naming: &HereThereNaming) -> Theory {
    Theory::new(
        naming
            .map
            .iter()
            .map(|(predicate, (here, there))| {
                let variables = argument_variables(predicate.arity);
                let terms: Vec<Term> = variables.iter().map(Variable::term).collect();
                Formula::forall(
                    variables,
                    Formula::implies(
                        Formula::atom(&here.name, terms.clone()),
                        Formula::atom(&there.name, terms),
                    ),
                )
            })
            .collect(),
    )
}

/// Ordering axioms for `predicates` under the default naming.
pub fn ordering_axioms(predicates: &BTreeSet<Predicate>) -> Theory {
    ordering_axioms_with(&HereThereNaming::new(predicates))
}

enum Shape {
    Definition {
        head: Atom,
        variables: Vec<Variable>,
        body: Formula,
    },
    Constraint {
        variables: Vec<Variable>,
        body: Formula,
    },
}

fn shape(formula: &Formula) -> Option<Shape> {
    let mut variables: Vec<Variable> = Vec::new();
    let mut current = formula;
    while let Formula::Quantified {
        quantifier: Quantifier::Forall,
        variables: bound,
        formula,
    } = current
    {
        for v in bound {
            variables.retain(|w| w.name != v.name);
            variables.push(v.clone());
        }
        current = formula;
    }
    let Formula::Implies(body, consequent) = current else {
        return None;
    };
    let body = (**body).clone();
    match &**consequent {
        Formula::Falsity => Some(Shape::Constraint { variables, body }),
        Formula::Atom(atom) => {
            let mut seen = BTreeSet::new();
            for term in &atom.terms {
                match term {
                    Term::Variable(v) if variables.contains(v) && seen.insert(v.name.clone()) => {}
                    _ => return None,
                }
            }
            Some(Shape::Definition {
                head: atom.clone(),
                variables,
                body,
            })
        }
        _ => None,
    }
}

/// Whether every formula is a closed implication whose consequent is `#false`
/// or an atom over distinct universally bound variables.
pub fn is_completable(theory: &Theory) -> bool {
    theory
        .formulas
        .iter()
        .all(|f| f.free_variables().is_empty() && shape(f).is_some())
}

fn head_variables(arity: usize) -> Vec<Variable> {
    (1..=arity).map(|i| Variable::general(&format!("V{i}"))).collect()
}

fn rename(formula: &Formula, from: &Variable, to: &Variable) -> Formula {
    formula.substitute(from, &to.term()).expect("renaming preserves sorts")
}

/// The disjunct contributed by one defining formula, over `V1..Vk`.
fn disjunct(head: &Atom, variables: &[Variable], body: &Formula) -> Formula {
    let targets = head_variables(head.terms.len());
    let mut taken: BTreeSet<String> = body.all_variables().into_iter().map(|v| v.name).collect();
    taken.extend(variables.iter().map(|v| v.name.clone()));
    taken.extend(targets.iter().map(|v| v.name.clone()));
    let mut fresh = |base: &str, sort: Sort| {
        let name = fresh_name(base, &taken);
        taken.insert(name.clone());
        Variable::new(&name, sort)
    };

    let head_variables: Vec<&Variable> = head
        .terms
        .iter()
        .map(|t| match t {
            Term::Variable(v) => v,
            _ => unreachable!("checked by the shape test"),
        })
        .collect();

    let mut body = body.clone();
    let mut bound = Vec::new();
    for v in variables.iter().filter(|v| !head_variables.contains(v)) {
        if targets.iter().any(|t| t.name == v.name) {
            let renamed = fresh(&v.name, v.sort);
            body = rename(&body, v, &renamed);
            bound.push(renamed);
        } else {
            bound.push(v.clone());
        }
    }

    let temporaries: Vec<Variable> = head_variables
        .iter()
        .map(|v| fresh(&format!("{}_", v.name), v.sort))
        .collect();
    for (v, temporary) in head_variables.iter().zip(&temporaries) {
        body = rename(&body, v, temporary);
    }
    let mut equalities = Vec::new();
    for ((v, temporary), target) in head_variables.iter().zip(&temporaries).zip(&targets) {
        if v.sort == Sort::General {
            body = rename(&body, temporary, target);
        } else {
            let renamed = if targets.iter().any(|t| t.name == v.name) {
                fresh(&v.name, v.sort)
            } else {
                (*v).clone()
            };
            body = rename(&body, temporary, &renamed);
            equalities.push(Formula::equal(target.term(), renamed.term()));
            bound.push(renamed);
        }
    }
    let body = if equalities.is_empty() {
        body
    } else {
        equalities.push(body);
        Formula::And(equalities)
    };
    Formula::exists(bound, body)
}

fn predicates_in_order(theory: &Theory) -> Vec<Predicate> {
    let mut out: Vec<Predicate> = Vec::new();
    for formula in &theory.formulas {
        formula.visit(&mut |f| {
            if let Formula::Atom(atom) = f {
                let p = atom.predicate();
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        });
    }
    out
}

/// Completion of every predicate occurring in `theory`.
pub fn completion(theory: &Theory) -> Result<Theory, TransformError> {
    completion_except(theory, &BTreeSet::new())
}

/// Completion of the predicates not in `exempt`; formulas defining exempt
/// predicates are kept unchanged.
///
/// Defined predicates come first in order of their first definition, then
/// predicates without definitions (completed to `#false`), then constraints.
pub fn completion_except(theory: &Theory, exempt: &BTreeSet<Predicate>) -> Result<Theory, TransformError> {
    let mut definitions: Vec<(Predicate, Vec<Formula>)> = Vec::new();
    let mut kept = Vec::new();
    let mut constraints = Vec::new();

    for formula in &theory.formulas {
        let closed = formula.clone().universal_closure();
        match shape(&closed) {
            Some(Shape::Definition { head, variables, body }) => {
                let predicate = head.predicate();
                if exempt.contains(&predicate) {
                    kept.push(closed);
                    continue;
                }
                let d = disjunct(&head, &variables, &body);
                match definitions.iter_mut().find(|(p, _)| *p == predicate) {
                    Some((_, ds)) => ds.push(d),
                    None => definitions.push((predicate, vec![d])),
                }
            }
            Some(Shape::Constraint { variables, body }) => {
                constraints.push(Formula::forall(variables, Formula::not(body)));
            }
            None => return Err(TransformError::NotCompletable(formula.clone())),
        }
    }

    for predicate in predicates_in_order(theory) {
        if !exempt.contains(&predicate) && !definitions.iter().any(|(p, _)| *p == predicate) {
            definitions.push((predicate, vec![]));
        }
    }

    let mut formulas: Vec<Formula> = definitions
        .into_iter()
        .map(|(predicate, disjuncts)| {
            let variables = head_variables(predicate.arity);
            let head = Formula::atom(&predicate.name, variables.iter().map(Variable::term).collect());
            let definiens = if disjuncts.is_empty() {
                Formula::Falsity
            } else {
                Formula::disjoin(disjuncts)
            };
            Formula::forall(variables, Formula::iff(head, definiens))
        })
        .collect();
    formulas.extend(kept);
    formulas.extend(constraints);
    Ok(Theory::new(formulas))
}

fn simplify_once(formula: &Formula) -> Formula {
    match formula {
        Formula::Truth | Formula::Falsity | Formula::Atom(_) | Formula::Comparison(_) => formula.clone(),
        Formula::Not(inner) => match simplify_once(inner) {
            Formula::Truth => Formula::Falsity,
            Formula::Falsity => Formula::Truth,
            inner => Formula::not(inner),
        },
        Formula::And(fs) => {
            let fs: Vec<Formula> = fs.iter().map(simplify_once).collect();
            if fs.contains(&Formula::Falsity) {
                return Formula::Falsity;
            }
            Formula::conjoin(fs.into_iter().filter(|f| *f != Formula::Truth).collect())
        }
        Formula::Or(fs) => {
            let fs: Vec<Formula> = fs.iter().map(simplify_once).collect();
            if fs.contains(&Formula::Truth) {
                return Formula::Truth;
            }
            Formula::disjoin(fs.into_iter().filter(|f| *f != Formula::Falsity).collect())
        }
        Formula::Implies(lhs, rhs) => match (simplify_once(lhs), simplify_once(rhs)) {
            (Formula::Truth, rhs) => rhs,
            (Formula::Falsity, _) | (_, Formula::Truth) => Formula::Truth,
            (lhs, rhs) => Formula::implies(lhs, rhs),
        },
        Formula::Iff(lhs, rhs) => Formula::iff(simplify_once(lhs), simplify_once(rhs)),
        Formula::Quantified {
            quantifier,
            variables,
            formula,
        } => {
            let body = simplify_once(formula);
            let free = body.free_variables();
            let variables = variables.iter().filter(|v| free.contains(v)).cloned().collect();
            Formula::quantify(*quantifier, variables, body)
        }
    }
}

/// Basic rewriting, preserving equivalence both classically and in here-and-there:
/// drops neutral `#true`/`#false` operands, propagates absorbing ones, and
/// removes unused quantified variables. Iterates to a fixpoint.
pub fn simplify_formula(formula: &Formula) -> Formula {
    let mut current = formula.clone();
    loop {
        let next = simplify_once(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

pub fn simplify(theory: &Theory) -> Theory {
    Theory::new(theory.formulas.iter().map(simplify_formula).collect())
}
