//! The three-sorted first-order target language.

mod format;
mod parse;
pub mod tptp;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use parse::{parse_formula, parse_term, parse_theory, FormulaParser};

use crate::asp::Predicate;
use crate::lexer::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    General,
    Integer,
    Symbol,
}

impl Sort {
    /// Whether values of sort `self` may stand where sort `other` is expected.
    pub fn is_subsort_of(self, other: Sort) -> bool {
        self == other || other == Sort::General
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Sort::General => "",
            Sort::Integer => "$i",
            Sort::Symbol => "$s",
        }
    }

    pub fn from_suffix(suffix: Option<&str>) -> Option<Sort> {
        match suffix {
            None | Some("g") | Some("general") => Some(Sort::General),
            Some("") | Some("i") | Some("integer") => Some(Sort::Integer),
            Some("s") | Some("symbol") => Some(Sort::Symbol),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    pub name: String,
    pub sort: Sort,
}

impl Variable {
    pub fn new(name: &str, sort: Sort) -> Self {
        Variable {
            name: name.to_string(),
            sort,
        }
    }

    pub fn general(name: &str) -> Self {
        Variable::new(name, Sort::General)
    }

    pub fn integer(name: &str) -> Self {
        Variable::new(name, Sort::Integer)
    }

    pub fn symbol(name: &str) -> Self {
        Variable::new(name, Sort::Symbol)
    }

    pub fn term(&self) -> Term {
        Term::Variable(self.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOperator {
    Add,
    Subtract,
    Multiply,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Numeral(i64),
    /// A symbolic constant.
    Symbol(String),
    /// A symbolic constant whose value is supplied by the program input.
    Placeholder(String, Sort),
    Variable(Variable),
    Infimum,
    Supremum,
    Negative(Box<Term>),
    Binary {
        op: BinaryOperator,
        lhs: Box<Term>,
        rhs: Box<Term>,
    },
}

impl Term {
    pub fn sort(&self) -> Sort {
        match self {
            Term::Numeral(_) | Term::Negative(_) | Term::Binary { .. } => Sort::Integer,
            Term::Symbol(_) => Sort::Symbol,
            Term::Placeholder(_, sort) => *sort,
            Term::Variable(v) => v.sort,
            Term::Infimum | Term::Supremum => Sort::General,
        }
    }

    pub fn binary(op: BinaryOperator, lhs: Term, rhs: Term) -> Term {
        Term::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(lhs: Term, rhs: Term) -> Term {
        Term::binary(BinaryOperator::Add, lhs, rhs)
    }

    pub fn subtract(lhs: Term, rhs: Term) -> Term {
        Term::binary(BinaryOperator::Subtract, lhs, rhs)
    }

    pub fn multiply(lhs: Term, rhs: Term) -> Term {
        Term::binary(BinaryOperator::Multiply, lhs, rhs)
    }

    pub fn negative(arg: Term) -> Term {
        Term::Negative(Box::new(arg))
    }

    pub fn variables(&self, out: &mut BTreeSet<Variable>) {
        match self {
            Term::Variable(v) => {
                out.insert(v.clone());
            }
            Term::Negative(arg) => arg.variables(out),
            Term::Binary { lhs, rhs, .. } => {
                lhs.variables(out);
                rhs.variables(out);
            }
            _ => {}
        }
    }

    fn substitute(&self, variable: &Variable, replacement: &Term) -> Term {
        match self {
            Term::Variable(v) if v == variable => replacement.clone(),
            Term::Negative(arg) => Term::negative(arg.substitute(variable, replacement)),
            Term::Binary { op, lhs, rhs } => Term::binary(
                *op,
                lhs.substitute(variable, replacement),
                rhs.substitute(variable, replacement),
            ),
            other => other.clone(),
        }
    }

    fn map_constants(&self, f: &dyn Fn(&Term) -> Option<Term>) -> Term {
        if let Some(replacement) = f(self) {
            return replacement;
        }
        match self {
            Term::Negative(arg) => Term::negative(arg.map_constants(f)),
            Term::Binary { op, lhs, rhs } => Term::binary(*op, lhs.map_constants(f), rhs.map_constants(f)),
            other => other.clone(),
        }
    }

    pub fn visit(&self, f: &mut dyn FnMut(&Term)) {
        f(self);
        match self {
            Term::Negative(arg) => arg.visit(f),
            Term::Binary { lhs, rhs, .. } => {
                lhs.visit(f);
                rhs.visit(f);
            }
            _ => {}
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Equal,
    NotEqual,
    Less,
    LessEqual,
    Greater,
    GreaterEqual,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::NotEqual => "!=",
            Relation::Less => "<",
            Relation::LessEqual => "<=",
            Relation::Greater => ">",
            Relation::GreaterEqual => ">=",
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<Relation> {
        Some(match symbol {
            "=" => Relation::Equal,
            "!=" => Relation::NotEqual,
            "<" => Relation::Less,
            "<=" => Relation::LessEqual,
            ">" => Relation::Greater,
            ">=" => Relation::GreaterEqual,
            _ => return None,
        })
    }
}

impl From<crate::asp::Relation> for Relation {
    fn from(relation: crate::asp::Relation) -> Self {
        use crate::asp::Relation as R;
        match relation {
            R::Equal => Relation::Equal,
            R::NotEqual => Relation::NotEqual,
            R::Less => Relation::Less,
            R::LessEqual => Relation::LessEqual,
            R::Greater => Relation::Greater,
            R::GreaterEqual => Relation::GreaterEqual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Guard {
    pub relation: Relation,
    pub term: Term,
}

/// A chain of comparisons `term r1 t1 r2 t2 ...`, meaning the conjunction of adjacent pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comparison {
    pub term: Term,
    pub guards: Vec<Guard>,
}

impl Comparison {
    pub fn new(lhs: Term, relation: Relation, rhs: Term) -> Self {
        Comparison {
            term: lhs,
            guards: vec![Guard { relation, term: rhs }],
        }
    }

    /// Adjacent pairs of the chain.
    pub fn pairs(&self) -> Vec<(&Term, Relation, &Term)> {
        let mut out = Vec::new();
        let mut lhs = &self.term;
        for guard in &self.guards {
            out.push((lhs, guard.relation, &guard.term));
            lhs = &guard.term;
        }
        out
    }

    fn terms(&self) -> impl Iterator<Item = &Term> {
        std::iter::once(&self.term).chain(self.guards.iter().map(|g| &g.term))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate_symbol: String,
    pub terms: Vec<Term>,
}

impl Atom {
    pub fn new(predicate_symbol: &str, terms: Vec<Term>) -> Self {
        Atom {
            predicate_symbol: predicate_symbol.to_string(),
            terms,
        }
    }

    pub fn predicate(&self) -> Predicate {
        Predicate::new(&self.predicate_symbol, self.terms.len())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Truth,
    Falsity,
    Atom(Atom),
    Comparison(Comparison),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Quantified {
        quantifier: Quantifier,
        variables: Vec<Variable>,
        formula: Box<Formula>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("sort error: cannot substitute a term of sort {term:?} for variable {variable} of sort {variable_sort:?}")]
    Sort {
        variable: String,
        variable_sort: Sort,
        term: Sort,
    },
    #[error("formula is not closed: free variables {0}")]
    Closure(String),
}

impl Formula {
    pub fn atom(predicate_symbol: &str, terms: Vec<Term>) -> Formula {
        Formula::Atom(Atom::new(predicate_symbol, terms))
    }

    pub fn comparison(lhs: Term, relation: Relation, rhs: Term) -> Formula {
        Formula::Comparison(Comparison::new(lhs, relation, rhs))
    }

    pub fn equal(lhs: Term, rhs: Term) -> Formula {
        Formula::comparison(lhs, Relation::Equal, rhs)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(formula: Formula) -> Formula {
        Formula::Not(Box::new(formula))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(lhs), Box::new(rhs))
    }

    /// Quantify over `variables`; an empty list yields the formula unchanged.
    pub fn quantify(quantifier: Quantifier, variables: Vec<Variable>, formula: Formula) -> Formula {
        if variables.is_empty() {
            formula
        } else {
            Formula::Quantified {
                quantifier,
                variables,
                formula: Box::new(formula),
            }
        }
    }

    pub fn forall(variables: Vec<Variable>, formula: Formula) -> Formula {
        Formula::quantify(Quantifier::Forall, variables, formula)
    }

    pub fn exists(variables: Vec<Variable>, formula: Formula) -> Formula {
        Formula::quantify(Quantifier::Exists, variables, formula)
    }

    /// Conjunction; the empty conjunction is `#true`, a singleton is its element.
    pub fn conjoin(mut formulas: Vec<Formula>) -> Formula {
        match formulas.len() {
            0 => Formula::Truth,
            1 => formulas.pop().unwrap(),
            _ => Formula::And(formulas),
        }
    }

    /// Disjunction; the empty disjunction is `#false`, a singleton is its element.
    pub fn disjoin(mut formulas: Vec<Formula>) -> Formula {
        match formulas.len() {
            0 => Formula::Falsity,
            1 => formulas.pop().unwrap(),
            _ => Formula::Or(formulas),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Formula::Truth | Formula::Falsity | Formula::Atom(_) | Formula::Comparison(_)
        )
    }

    pub fn free_variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_free_variables(&mut out);
        out
    }

    fn collect_free_variables(&self, out: &mut BTreeSet<Variable>) {
        match self {
            Formula::Truth | Formula::Falsity => {}
            Formula::Atom(atom) => {
                for term in &atom.terms {
                    term.variables(out);
                }
            }
            Formula::Comparison(comparison) => {
                for term in comparison.terms() {
                    term.variables(out);
                }
            }
            Formula::Not(f) => f.collect_free_variables(out),
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free_variables(out);
                }
            }
            Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_free_variables(out);
                r.collect_free_variables(out);
            }
            Formula::Quantified { variables, formula, .. } => {
                let mut inner = formula.free_variables();
                for v in variables {
                    inner.remove(v);
                }
                out.extend(inner);
            }
        }
    }

    /// Free variables in order of first occurrence.
    pub fn free_variables_ordered(&self) -> Vec<Variable> {
        fn term_variables(term: &Term, bound: &[Variable], out: &mut Vec<Variable>) {
            term.visit(&mut |t| {
                if let Term::Variable(v) = t {
                    if !bound.contains(v) && !out.contains(v) {
                        out.push(v.clone());
                    }
                }
            });
        }
        fn walk(formula: &Formula, bound: &mut Vec<Variable>, out: &mut Vec<Variable>) {
            match formula {
                Formula::Truth | Formula::Falsity => {}
                Formula::Atom(atom) => {
                    for term in &atom.terms {
                        term_variables(term, bound, out);
                    }
                }
                Formula::Comparison(comparison) => {
                    for term in comparison.terms() {
                        term_variables(term, bound, out);
                    }
                }
                Formula::Not(f) => walk(f, bound, out),
                Formula::And(fs) | Formula::Or(fs) => {
                    for f in fs {
                        walk(f, bound, out);
                    }
                }
                Formula::Implies(l, r) | Formula::Iff(l, r) => {
                    walk(l, bound, out);
                    walk(r, bound, out);
                }
                Formula::Quantified { variables, formula, .. } => {
                    let depth = bound.len();
                    bound.extend(variables.iter().cloned());
                    walk(formula, bound, out);
                    bound.truncate(depth);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Every variable occurring anywhere, bound or free.
    pub fn all_variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Atom(atom) => {
                for term in &atom.terms {
                    term.variables(&mut out);
                }
            }
            Formula::Comparison(comparison) => {
                for term in comparison.terms() {
                    term.variables(&mut out);
                }
            }
            Formula::Quantified { variables, .. } => out.extend(variables.iter().cloned()),
            _ => {}
        });
        out
    }

    /// Pre-order traversal over subformulas.
    pub fn visit(&self, f: &mut dyn FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Not(inner) => inner.visit(f),
            Formula::And(fs) | Formula::Or(fs) => {
                for inner in fs {
                    inner.visit(f);
                }
            }
            Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.visit(f);
                r.visit(f);
            }
            Formula::Quantified { formula, .. } => formula.visit(f),
            _ => {}
        }
    }

    /// Visit every term occurring in an atom or comparison.
    pub fn visit_terms(&self, f: &mut dyn FnMut(&Term)) {
        self.visit(&mut |formula| match formula {
            Formula::Atom(atom) => {
                for term in &atom.terms {
                    term.visit(f);
                }
            }
            Formula::Comparison(comparison) => {
                for term in comparison.terms() {
                    term.visit(f);
                }
            }
            _ => {}
        });
    }

    pub fn predicates(&self) -> BTreeSet<Predicate> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(atom) = f {
                out.insert(atom.predicate());
            }
        });
        out
    }

    /// Symbolic constants (not placeholders) occurring in the formula.
    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_terms(&mut |t| {
            if let Term::Symbol(s) = t {
                out.insert(s.clone());
            }
        });
        out
    }

    /// Capture-avoiding substitution of `term` for the free occurrences of `variable`.
    pub fn substitute(&self, variable: &Variable, term: &Term) -> Result<Formula, FormulaError> {
        if !term.sort().is_subsort_of(variable.sort) {
            return Err(FormulaError::Sort {
                variable: variable.name.clone(),
                variable_sort: variable.sort,
                term: term.sort(),
            });
        }
        let mut term_variables = BTreeSet::new();
        term.variables(&mut term_variables);
        Ok(self.substitute_unchecked(variable, term, &term_variables))
    }

    fn substitute_unchecked(&self, variable: &Variable, term: &Term, term_variables: &BTreeSet<Variable>) -> Formula {
        match self {
            Formula::Truth | Formula::Falsity => self.clone(),
            Formula::Atom(atom) => Formula::Atom(Atom {
                predicate_symbol: atom.predicate_symbol.clone(),
                terms: atom.terms.iter().map(|t| t.substitute(variable, term)).collect(),
            }),
            Formula::Comparison(comparison) => Formula::Comparison(Comparison {
                term: comparison.term.substitute(variable, term),
                guards: comparison
                    .guards
                    .iter()
                    .map(|g| Guard {
                        relation: g.relation,
                        term: g.term.substitute(variable, term),
                    })
                    .collect(),
            }),
            Formula::Not(f) => Formula::not(f.substitute_unchecked(variable, term, term_variables)),
            Formula::And(fs) => Formula::And(
                fs.iter()
                    .map(|f| f.substitute_unchecked(variable, term, term_variables))
                    .collect(),
            ),
            Formula::Or(fs) => Formula::Or(
                fs.iter()
                    .map(|f| f.substitute_unchecked(variable, term, term_variables))
                    .collect(),
            ),
            Formula::Implies(l, r) => Formula::implies(
                l.substitute_unchecked(variable, term, term_variables),
                r.substitute_unchecked(variable, term, term_variables),
            ),
            Formula::Iff(l, r) => Formula::iff(
                l.substitute_unchecked(variable, term, term_variables),
                r.substitute_unchecked(variable, term, term_variables),
            ),
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => {
                if variables.contains(variable) || !formula.free_variables().contains(variable) {
                    return self.clone();
                }
                // rename bound variables that would capture variables of the term
                let mut taken: BTreeSet<String> = formula
                    .all_variables()
                    .into_iter()
                    .chain(term_variables.iter().cloned())
                    .map(|v| v.name)
                    .collect();
                let mut body = (**formula).clone();
                let mut bound = Vec::new();
                for v in variables {
                    if term_variables.contains(v) {
                        let fresh = Variable::new(&fresh_name(&v.name, &taken), v.sort);
                        taken.insert(fresh.name.clone());
                        body = body.substitute_unchecked(v, &fresh.term(), &[fresh.clone()].into());
                        bound.push(fresh);
                    } else {
                        bound.push(v.clone());
                    }
                }
                Formula::Quantified {
                    quantifier: *quantifier,
                    variables: bound,
                    formula: Box::new(body.substitute_unchecked(variable, term, term_variables)),
                }
            }
        }
    }

    /// Bind all free variables universally, in order of first occurrence.
    pub fn universal_closure(self) -> Formula {
        let free = self.free_variables_ordered();
        match self {
            Formula::Quantified {
                quantifier: Quantifier::Forall,
                mut variables,
                formula,
            } if !free.is_empty() => {
                let mut all = free;
                all.append(&mut variables);
                Formula::forall(all, *formula)
            }
            other => Formula::forall(free, other),
        }
    }

    /// Replace atoms by the result of `f` (used for predicate renaming and doubling).
    pub fn map_atoms(&self, f: &dyn Fn(&Atom) -> Formula) -> Formula {
        match self {
            Formula::Atom(atom) => f(atom),
            Formula::Truth | Formula::Falsity | Formula::Comparison(_) => self.clone(),
            Formula::Not(inner) => Formula::not(inner.map_atoms(f)),
            Formula::And(fs) => Formula::And(fs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Implies(l, r) => Formula::implies(l.map_atoms(f), r.map_atoms(f)),
            Formula::Iff(l, r) => Formula::iff(l.map_atoms(f), r.map_atoms(f)),
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => Formula::Quantified {
                quantifier: *quantifier,
                variables: variables.clone(),
                formula: Box::new(formula.map_atoms(f)),
            },
        }
    }

    /// Rename predicates according to `map`; unmapped predicates are kept.
    pub fn rename_predicates(&self, map: &BTreeMap<Predicate, Predicate>) -> Formula {
        self.map_atoms(&|atom| match map.get(&atom.predicate()) {
            Some(target) => Formula::atom(&target.name, atom.terms.clone()),
            None => Formula::Atom(atom.clone()),
        })
    }

    /// Replace constants (symbols, placeholders, `#inf`, `#sup`) according to `f`.
    pub fn map_constants(&self, f: &dyn Fn(&Term) -> Option<Term>) -> Formula {
        match self {
            Formula::Atom(atom) => Formula::Atom(Atom {
                predicate_symbol: atom.predicate_symbol.clone(),
                terms: atom.terms.iter().map(|t| t.map_constants(f)).collect(),
            }),
            Formula::Comparison(comparison) => Formula::Comparison(Comparison {
                term: comparison.term.map_constants(f),
                guards: comparison
                    .guards
                    .iter()
                    .map(|g| Guard {
                        relation: g.relation,
                        term: g.term.map_constants(f),
                    })
                    .collect(),
            }),
            Formula::Truth | Formula::Falsity => self.clone(),
            Formula::Not(inner) => Formula::not(inner.map_constants(f)),
            Formula::And(fs) => Formula::And(fs.iter().map(|g| g.map_constants(f)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|g| g.map_constants(f)).collect()),
            Formula::Implies(l, r) => Formula::implies(l.map_constants(f), r.map_constants(f)),
            Formula::Iff(l, r) => Formula::iff(l.map_constants(f), r.map_constants(f)),
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => Formula::Quantified {
                quantifier: *quantifier,
                variables: variables.clone(),
                formula: Box::new(formula.map_constants(f)),
            },
        }
    }

    /// Flatten nested conjunctions and disjunctions and merge directly nested
    /// quantifiers of the same kind.
    pub fn flatten(&self) -> Formula {
        match self {
            Formula::And(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    match f.flatten() {
                        Formula::And(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                Formula::conjoin(out)
            }
            Formula::Or(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    match f.flatten() {
                        Formula::Or(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                Formula::disjoin(out)
            }
            Formula::Not(f) => Formula::not(f.flatten()),
            Formula::Implies(l, r) => Formula::implies(l.flatten(), r.flatten()),
            Formula::Iff(l, r) => Formula::iff(l.flatten(), r.flatten()),
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => Formula::quantify(*quantifier, variables.clone(), formula.flatten()),
            other => other.clone(),
        }
    }

    /// Rename bound variables canonically (`X1`, `X2`, ... in traversal
    /// order, keeping sorts) so that alpha-equivalent formulas become equal.
    pub fn alpha_normalize(&self) -> Formula {
        let free: BTreeSet<String> = self.free_variables().into_iter().map(|v| v.name).collect();
        let mut counter = 0;
        self.alpha_normalize_with(&free, &mut counter)
    }

    fn alpha_normalize_with(&self, free: &BTreeSet<String>, counter: &mut usize) -> Formula {
        match self {
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => {
                let mut body = (**formula).clone();
                let mut renamed = Vec::new();
                // two-phase renaming avoids clashes between old and new names
                let mut temporaries = Vec::new();
                for (i, v) in variables.iter().enumerate() {
                    let temporary = Variable::new(&format!("__alpha{i}"), v.sort);
                    body = body.substitute_unchecked(v, &temporary.term(), &[temporary.clone()].into());
                    temporaries.push(temporary);
                }
                for temporary in temporaries {
                    let name = loop {
                        *counter += 1;
                        let candidate = format!("X{counter}");
                        if !free.contains(&candidate) {
                            break candidate;
                        }
                    };
                    let target = Variable::new(&name, temporary.sort);
                    body = body.substitute_unchecked(&temporary, &target.term(), &[target.clone()].into());
                    renamed.push(target);
                }
                Formula::Quantified {
                    quantifier: *quantifier,
                    variables: renamed,
                    formula: Box::new(body.alpha_normalize_with(free, counter)),
                }
            }
            Formula::Not(f) => Formula::not(f.alpha_normalize_with(free, counter)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.alpha_normalize_with(free, counter)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.alpha_normalize_with(free, counter)).collect()),
            Formula::Implies(l, r) => {
                let l = l.alpha_normalize_with(free, counter);
                Formula::implies(l, r.alpha_normalize_with(free, counter))
            }
            Formula::Iff(l, r) => {
                let l = l.alpha_normalize_with(free, counter);
                Formula::iff(l, r.alpha_normalize_with(free, counter))
            }
            other => other.clone(),
        }
    }

    /// Canonical form used for equality tests: flattened, then alpha-normalized.
    pub fn normalize(&self) -> Formula {
        self.flatten().alpha_normalize()
    }

    /// Equality up to renaming of bound variables and flattening of conjunctions.
    pub fn alpha_equivalent(&self, other: &Formula) -> bool {
        self.normalize() == other.normalize()
    }
}

/// `base` if not taken, otherwise `base1`, `base2`, ...
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}{i}"))
        .find(|candidate| !taken.contains(candidate))
        .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Theory {
    pub formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(formulas: Vec<Formula>) -> Self {
        Theory { formulas }
    }

    pub fn predicates(&self) -> BTreeSet<Predicate> {
        self.formulas.iter().flat_map(Formula::predicates).collect()
    }

    pub fn symbols(&self) -> BTreeSet<String> {
        self.formulas.iter().flat_map(Formula::symbols).collect()
    }

    pub fn normalize(&self) -> Theory {
        Theory::new(self.formulas.iter().map(Formula::normalize).collect())
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl std::str::FromStr for Theory {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_theory(s)
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

/// Render a formula in the custom syntax.
pub fn format_default(formula: &Formula) -> String {
    formula.to_string()
}
