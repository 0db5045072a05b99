//! Independent semantic oracles shared by the integration tests.
//!
//! - A naive grounder and brute-force stable-model enumerator for programs,
//!   evaluated directly on the program syntax (no translation involved).
//! - A finite-window evaluator for first-order theories, used to enumerate
//!   Herbrand models of completed theories.
//! - Here-and-there semantics for propositional theories.
//! - Random generators for ground programs and propositional theories.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use anthem::asp::{self, BinaryOperator, BodyLiteral, Head, Program, Sign, UnaryOperator};
use anthem::fol::{self, Formula, Quantifier, Sort, Variable};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../res/examples")
        .join(name)
}

pub fn read_corpus(name: &str) -> String {
    std::fs::read_to_string(corpus(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Elements of the Herbrand universe, ordered as in the standard interpretation:
/// `#inf` < integers < symbols < `#sup`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Infimum,
    Integer(i64),
    Symbol(String),
    Supremum,
}

pub type GroundAtom = (String, Vec<Value>);
pub type Interpretation = BTreeSet<GroundAtom>;

/// Integers `low..=high`, one symbol, `#inf`, and `#sup`.
pub fn window(low: i64, high: i64) -> Vec<Value> {
    let mut domain = vec![Value::Infimum];
    domain.extend((low..=high).map(Value::Integer));
    domain.push(Value::Symbol("c".into()));
    domain.push(Value::Supremum);
    domain
}

fn relation_holds(relation: asp::Relation, lhs: &Value, rhs: &Value) -> bool {
    use asp::Relation::*;
    match relation {
        Equal => lhs == rhs,
        NotEqual => lhs != rhs,
        Less => lhs < rhs,
        LessEqual => lhs <= rhs,
        Greater => lhs > rhs,
        GreaterEqual => lhs >= rhs,
    }
}

/// The set of values of a program term under an assignment. Division and
/// modulo follow `I = J * Q + R` with `0 <= R < J`.
pub fn term_values(term: &asp::Term, env: &BTreeMap<String, Value>) -> BTreeSet<Value> {
    let integers = |values: BTreeSet<Value>| -> Vec<i64> {
        values
            .into_iter()
            .filter_map(|v| match v {
                Value::Integer(i) => Some(i),
                _ => None,
            })
            .collect()
    };
    match term {
        asp::Term::Numeral(n) => [Value::Integer(*n)].into(),
        asp::Term::Symbol(s) => [Value::Symbol(s.clone())].into(),
        asp::Term::Infimum => [Value::Infimum].into(),
        asp::Term::Supremum => [Value::Supremum].into(),
        asp::Term::Variable(v) => [env[v].clone()].into(),
        asp::Term::Unary { op, arg } => integers(term_values(arg, env))
            .into_iter()
            .filter_map(|i| match op {
                UnaryOperator::Negative => i.checked_neg(),
                UnaryOperator::AbsoluteValue => i.checked_abs(),
            })
            .map(Value::Integer)
            .collect(),
        asp::Term::Binary { op, lhs, rhs } => {
            let (ls, rs) = (integers(term_values(lhs, env)), integers(term_values(rhs, env)));
            let mut out = BTreeSet::new();
            for &i in &ls {
                for &j in &rs {
                    match op {
                        BinaryOperator::Add => out.extend(i.checked_add(j).map(Value::Integer)),
                        BinaryOperator::Subtract => out.extend(i.checked_sub(j).map(Value::Integer)),
                        BinaryOperator::Multiply => out.extend(i.checked_mul(j).map(Value::Integer)),
                        BinaryOperator::Divide if j > 0 => {
                            out.insert(Value::Integer(i.div_euclid(j)));
                        }
                        BinaryOperator::Modulo if j > 0 => {
                            out.insert(Value::Integer(i.rem_euclid(j)));
                        }
                        BinaryOperator::Divide | BinaryOperator::Modulo => {}
                        BinaryOperator::Interval => out.extend((i..=j).map(Value::Integer)),
                    }
                }
            }
            out
        }
    }
}

fn atom_instances(atom: &asp::Atom, env: &BTreeMap<String, Value>) -> Vec<GroundAtom> {
    let mut tuples: Vec<Vec<Value>> = vec![vec![]];
    for term in &atom.terms {
        let values = term_values(term, env);
        tuples = tuples
            .into_iter()
            .flat_map(|tuple| {
                values.iter().map(move |v| {
                    let mut t = tuple.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    tuples
        .into_iter()
        .map(|args| (atom.predicate_symbol.clone(), args))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HeadKind {
    Basic,
    Choice,
    Constraint,
}

/// One rule under one variable assignment. Each body group is satisfied when
/// some atom of the group satisfies the sign.
#[derive(Clone, Debug)]
struct Instance {
    kind: HeadKind,
    heads: Vec<GroundAtom>,
    positive: Vec<Vec<GroundAtom>>,
    negative: Vec<Vec<GroundAtom>>,
    double_negative: Vec<Vec<GroundAtom>>,
}

/// A program grounded over a finite domain: rule variables range over
/// `domain`, and head atoms with arguments outside `domain` are dropped.
/// The window must contain every value the program can produce from its
/// facts for the two semantics to be compared on it.
pub struct Grounding {
    instances: Vec<Instance>,
    /// Every atom that can be derived, in a fixed order.
    pub candidates: Vec<GroundAtom>,
}

fn assignments(variables: &[String], domain: &[Value]) -> Vec<BTreeMap<String, Value>> {
    let mut out = vec![BTreeMap::new()];
    for v in variables {
        out = out
            .into_iter()
            .flat_map(|env| {
                domain.iter().map(move |value| {
                    let mut e = env.clone();
                    e.insert(v.clone(), value.clone());
                    e
                })
            })
            .collect();
    }
    out
}

pub fn ground(program: &Program, domain: &[Value]) -> Grounding {
    let in_domain = |atom: &GroundAtom| atom.1.iter().all(|v| domain.contains(v));
    let mut instances = Vec::new();
    for rule in &program.rules {
        let variables = rule.variables();
        'assignment: for env in assignments(&variables, domain) {
            let mut instance = Instance {
                kind: HeadKind::Constraint,
                heads: vec![],
                positive: vec![],
                negative: vec![],
                double_negative: vec![],
            };
            for literal in &rule.body {
                match literal {
                    BodyLiteral::Comparison(c) => {
                        let (ls, rs) = (term_values(&c.lhs, &env), term_values(&c.rhs, &env));
                        if !ls.iter().any(|l| rs.iter().any(|r| relation_holds(c.relation, l, r))) {
                            continue 'assignment;
                        }
                    }
                    BodyLiteral::Literal(literal) => {
                        let atoms = atom_instances(&literal.atom, &env);
                        if atoms.is_empty() {
                            continue 'assignment;
                        }
                        match literal.sign {
                            Sign::NoSign => instance.positive.push(atoms),
                            Sign::Negation => instance.negative.push(atoms),
                            Sign::DoubleNegation => instance.double_negative.push(atoms),
                        }
                    }
                }
            }
            match &rule.head {
                Head::Basic(atom) | Head::Choice(atom) => {
                    instance.kind = if matches!(rule.head, Head::Basic(_)) {
                        HeadKind::Basic
                    } else {
                        HeadKind::Choice
                    };
                    instance.heads = atom_instances(atom, &env).into_iter().filter(in_domain).collect();
                    if instance.heads.is_empty() {
                        continue;
                    }
                }
                Head::Falsity => {}
            }
            instances.push(instance);
        }
    }
    // atoms derivable when (double) negations are ignored over-approximate
    // every stable model; instances that can never fire are dropped
    let mut candidates: BTreeSet<GroundAtom> = BTreeSet::new();
    let fires = |instance: &Instance, possible: &BTreeSet<GroundAtom>| {
        instance.positive.iter().all(|g| g.iter().any(|a| possible.contains(a)))
    };
    loop {
        let before = candidates.len();
        for instance in &instances {
            if instance.kind != HeadKind::Constraint && fires(instance, &candidates) {
                candidates.extend(instance.heads.iter().cloned());
            }
        }
        if candidates.len() == before {
            break;
        }
    }
    instances.retain(|instance| fires(instance, &candidates));
    Grounding {
        instances,
        candidates: candidates.into_iter().collect(),
    }
}

impl Grounding {
    fn body_holds(&self, instance: &Instance, positive: &Interpretation, context: &Interpretation) -> bool {
        instance.positive.iter().all(|g| g.iter().any(|a| positive.contains(a)))
            && instance.negative.iter().all(|g| g.iter().any(|a| !context.contains(a)))
            && instance
                .double_negative
                .iter()
                .all(|g| g.iter().any(|a| context.contains(a)))
    }

    /// Whether `x` is a stable model: `x` satisfies every constraint and is
    /// the least model of the reduct of the program with respect to `x`.
    pub fn is_stable(&self, x: &Interpretation) -> bool {
        for instance in &self.instances {
            if instance.kind == HeadKind::Constraint && self.body_holds(instance, x, x) {
                return false;
            }
        }
        let mut model = Interpretation::new();
        loop {
            let mut changed = false;
            for instance in &self.instances {
                if instance.kind == HeadKind::Constraint || !self.body_holds(instance, &model, x) {
                    continue;
                }
                for head in &instance.heads {
                    if (instance.kind == HeadKind::Basic || x.contains(head)) && model.insert(head.clone()) {
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        &model == x
    }

    pub fn stable_models(&self) -> BTreeSet<Interpretation> {
        subsets(&self.candidates)
            .into_iter()
            .filter(|x| self.is_stable(x))
            .collect()
    }
}

pub fn subsets<T: Clone + Ord>(items: &[T]) -> Vec<BTreeSet<T>> {
    assert!(items.len() <= 20, "too many atoms for brute force: {}", items.len());
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .collect()
}

/// Propositional formulas over candidate-atom indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prop {
    True,
    False,
    Atom(usize),
    Not(Box<Prop>),
    And(Vec<Prop>),
    Or(Vec<Prop>),
}

impl Prop {
    fn not(p: Prop) -> Prop {
        match p {
            Prop::True => Prop::False,
            Prop::False => Prop::True,
            Prop::Not(inner) => *inner,
            other => Prop::Not(Box::new(other)),
        }
    }

    fn and(ps: impl IntoIterator<Item = Prop>) -> Prop {
        let mut out = vec![];
        for p in ps {
            match p {
                Prop::False => return Prop::False,
                Prop::True => {}
                other => out.push(other),
            }
        }
        match out.len() {
            0 => Prop::True,
            1 => out.pop().unwrap(),
            _ => Prop::And(out),
        }
    }

    fn or(ps: impl IntoIterator<Item = Prop>) -> Prop {
        let mut out = vec![];
        for p in ps {
            match p {
                Prop::True => return Prop::True,
                Prop::False => {}
                other => out.push(other),
            }
        }
        match out.len() {
            0 => Prop::False,
            1 => out.pop().unwrap(),
            _ => Prop::Or(out),
        }
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        match self {
            Prop::True => true,
            Prop::False => false,
            Prop::Atom(i) => x[*i],
            Prop::Not(p) => !p.eval(x),
            Prop::And(ps) => ps.iter().all(|p| p.eval(x)),
            Prop::Or(ps) => ps.iter().any(|p| p.eval(x)),
        }
    }
}

/// Grounds first-order formulas over a finite window of the universe, with
/// atoms outside `candidates` fixed to false. Existential quantifiers whose
/// body fixes a variable by an equation are resolved directly, so witnesses
/// computed by arithmetic need not lie in the window.
pub struct Evaluator<'a> {
    pub domain: &'a [Value],
    index: BTreeMap<GroundAtom, usize>,
}

type Env = BTreeMap<Variable, Value>;

impl<'a> Evaluator<'a> {
    pub fn new(domain: &'a [Value], candidates: &[GroundAtom]) -> Self {
        Evaluator {
            domain,
            index: candidates.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect(),
        }
    }

    fn range(&self, sort: Sort) -> impl Iterator<Item = &Value> {
        self.domain.iter().filter(move |v| fits(v, sort))
    }

    pub fn term(&self, term: &fol::Term, env: &Env) -> Option<Value> {
        let integer = |t: &fol::Term| match self.term(t, env)? {
            Value::Integer(i) => Some(i),
            _ => None,
        };
        match term {
            fol::Term::Numeral(n) => Some(Value::Integer(*n)),
            fol::Term::Symbol(s) => Some(Value::Symbol(s.clone())),
            fol::Term::Placeholder(name, _) => panic!("uninstantiated placeholder {name}"),
            fol::Term::Variable(v) => Some(env.get(v).unwrap_or_else(|| panic!("unbound {v:?}")).clone()),
            fol::Term::Infimum => Some(Value::Infimum),
            fol::Term::Supremum => Some(Value::Supremum),
            fol::Term::Negative(arg) => integer(arg)?.checked_neg().map(Value::Integer),
            fol::Term::Binary { op, lhs, rhs } => {
                let (i, j) = (integer(lhs)?, integer(rhs)?);
                match op {
                    fol::BinaryOperator::Add => i.checked_add(j),
                    fol::BinaryOperator::Subtract => i.checked_sub(j),
                    fol::BinaryOperator::Multiply => i.checked_mul(j),
                }
                .map(Value::Integer)
            }
        }
    }

    fn compare(&self, relation: fol::Relation, l: &Value, r: &Value) -> bool {
        use fol::Relation::*;
        match relation {
            Equal => l == r,
            NotEqual => l != r,
            Less => l < r,
            LessEqual => l <= r,
            Greater => l > r,
            GreaterEqual => l >= r,
        }
    }

    pub fn ground(&self, formula: &Formula, env: &Env) -> Prop {
        match formula {
            Formula::Truth => Prop::True,
            Formula::Falsity => Prop::False,
            Formula::Atom(atom) => {
                let args: Option<Vec<Value>> = atom.terms.iter().map(|t| self.term(t, env)).collect();
                match args.and_then(|args| self.index.get(&(atom.predicate_symbol.clone(), args))) {
                    Some(i) => Prop::Atom(*i),
                    None => Prop::False,
                }
            }
            Formula::Comparison(comparison) => {
                let mut left = &comparison.term;
                for guard in &comparison.guards {
                    let holds = match (self.term(left, env), self.term(&guard.term, env)) {
                        (Some(l), Some(r)) => self.compare(guard.relation, &l, &r),
                        _ => false,
                    };
                    if !holds {
                        return Prop::False;
                    }
                    left = &guard.term;
                }
                Prop::True
            }
            Formula::Not(f) => Prop::not(self.ground(f, env)),
            Formula::And(fs) => Prop::and(fs.iter().map(|f| self.ground(f, env))),
            Formula::Or(fs) => Prop::or(fs.iter().map(|f| self.ground(f, env))),
            Formula::Implies(a, b) => Prop::or([Prop::not(self.ground(a, env)), self.ground(b, env)]),
            Formula::Iff(a, b) => {
                let (a, b) = (self.ground(a, env), self.ground(b, env));
                Prop::and([Prop::or([Prop::not(a.clone()), b.clone()]), Prop::or([Prop::not(b), a])])
            }
            Formula::Quantified {
                quantifier: Quantifier::Forall,
                variables,
                formula,
            } => {
                let mut out = vec![];
                self.each_assignment(variables, env, &mut |env| out.push(self.ground(formula, env)));
                Prop::and(out)
            }
            Formula::Quantified {
                quantifier: Quantifier::Exists,
                variables,
                formula,
            } => {
                let mut conjuncts = vec![];
                flatten_conjunction(formula, &mut conjuncts);
                self.exists(variables.clone(), &conjuncts, formula, env)
            }
        }
    }

    fn each_assignment(&self, variables: &[Variable], env: &Env, f: &mut dyn FnMut(&Env)) {
        match variables.split_first() {
            None => f(env),
            Some((first, rest)) => {
                for value in self.range(first.sort) {
                    let mut env = env.clone();
                    env.insert(first.clone(), value.clone());
                    self.each_assignment(rest, &env, f);
                }
            }
        }
    }

    fn exists(&self, unbound: Vec<Variable>, conjuncts: &[&Formula], body: &Formula, env: &Env) -> Prop {
        if unbound.is_empty() {
            return self.ground(body, env);
        }
        for conjunct in conjuncts {
            let Formula::Comparison(comparison) = conjunct else {
                continue;
            };
            if comparison.guards.len() != 1 || comparison.guards[0].relation != fol::Relation::Equal {
                continue;
            }
            let sides = [
                (&comparison.term, &comparison.guards[0].term),
                (&comparison.guards[0].term, &comparison.term),
            ];
            for (side, other) in sides {
                let fol::Term::Variable(v) = side else { continue };
                if !unbound.contains(v) {
                    continue;
                }
                let mut used = BTreeSet::new();
                other.variables(&mut used);
                if used.iter().any(|u| unbound.contains(u)) {
                    continue;
                }
                let Some(value) = self.term(other, env) else {
                    return Prop::False;
                };
                if !fits(&value, v.sort) {
                    return Prop::False;
                }
                let mut env = env.clone();
                env.insert(v.clone(), value);
                let rest: Vec<Variable> = unbound.iter().filter(|u| *u != v).cloned().collect();
                return self.exists(rest, conjuncts, body, &env);
            }
        }
        let (first, rest) = unbound.split_first().unwrap();
        Prop::or(
            self.range(first.sort)
                .map(|value| {
                    let mut env = env.clone();
                    env.insert(first.clone(), value.clone());
                    self.exists(rest.to_vec(), conjuncts, body, &env)
                })
                .collect::<Vec<_>>(),
        )
    }

    /// Ground a closed theory into one propositional formula.
    pub fn ground_theory(&self, theory: &fol::Theory) -> Prop {
        Prop::and(theory.formulas.iter().map(|f| self.ground(f, &Env::new())))
    }
}

fn fits(value: &Value, sort: Sort) -> bool {
    match sort {
        Sort::General => true,
        Sort::Integer => matches!(value, Value::Integer(_)),
        Sort::Symbol => matches!(value, Value::Symbol(_)),
    }
}

fn flatten_conjunction<'f>(formula: &'f Formula, out: &mut Vec<&'f Formula>) {
    match formula {
        Formula::And(fs) => fs.iter().for_each(|f| flatten_conjunction(f, out)),
        other => out.push(other),
    }
}

/// All subsets of `candidates` satisfying `theory` over `domain`.
pub fn models(theory: &fol::Theory, candidates: &[GroundAtom], domain: &[Value]) -> BTreeSet<Interpretation> {
    let evaluator = Evaluator::new(domain, candidates);
    let prop = evaluator.ground_theory(theory);
    (0u32..1 << candidates.len())
        .filter_map(|mask| {
            let bits: Vec<bool> = (0..candidates.len()).map(|i| mask & (1 << i) != 0).collect();
            prop.eval(&bits).then(|| {
                candidates
                    .iter()
                    .zip(&bits)
                    .filter(|(_, b)| **b)
                    .map(|(a, _)| a.clone())
                    .collect()
            })
        })
        .collect()
}

/// Replace symbolic constants by integers throughout a program.
pub fn instantiate(program: &Program, values: &BTreeMap<String, i64>) -> Program {
    fn term(t: &asp::Term, values: &BTreeMap<String, i64>) -> asp::Term {
        match t {
            asp::Term::Symbol(s) => values.get(s).map_or_else(|| t.clone(), |n| asp::Term::Numeral(*n)),
            asp::Term::Unary { op, arg } => asp::Term::unary(*op, term(arg, values)),
            asp::Term::Binary { op, lhs, rhs } => asp::Term::binary(*op, term(lhs, values), term(rhs, values)),
            other => other.clone(),
        }
    }
    let atom = |a: &asp::Atom| asp::Atom::new(&a.predicate_symbol, a.terms.iter().map(|t| term(t, values)).collect());
    let rules = program
        .rules
        .iter()
        .map(|rule| asp::Rule {
            head: match &rule.head {
                Head::Basic(a) => Head::Basic(atom(a)),
                Head::Choice(a) => Head::Choice(atom(a)),
                Head::Falsity => Head::Falsity,
            },
            body: rule
                .body
                .iter()
                .map(|literal| match literal {
                    BodyLiteral::Literal(l) => BodyLiteral::Literal(asp::Literal {
                        sign: l.sign,
                        atom: atom(&l.atom),
                    }),
                    BodyLiteral::Comparison(c) => BodyLiteral::Comparison(asp::Comparison {
                        relation: c.relation,
                        lhs: term(&c.lhs, values),
                        rhs: term(&c.rhs, values),
                    }),
                })
                .collect(),
        })
        .collect();
    Program { rules }
}

/// A random ground program over up to three propositional atoms. Positive
/// body atoms of a rule always precede its head in a random atom order, so
/// the program is tight by construction.
pub fn random_tight_program(rng: &mut impl Rng) -> String {
    let mut atoms = vec!["p", "q", "r"];
    atoms.truncate(rng.gen_range(1..=3));
    atoms.shuffle(rng);
    let mut rules = vec![];
    for _ in 0..rng.gen_range(1..=4) {
        let kind = rng.gen_range(0..10);
        let head_position = rng.gen_range(0..atoms.len());
        let mut body = vec![];
        for _ in 0..rng.gen_range(0..=3) {
            let atom = atoms[rng.gen_range(0..atoms.len())];
            let position = atoms.iter().position(|a| *a == atom).unwrap();
            let sign = rng.gen_range(0..10);
            let positive_allowed = kind >= 8 || position < head_position;
            body.push(match sign {
                0..=3 if positive_allowed => atom.to_string(),
                0..=6 => format!("not {atom}"),
                _ => format!("not not {atom}"),
            });
        }
        let head = atoms[head_position];
        let head = match kind {
            0..=4 => head.to_string(),
            5..=7 => format!("{{{head}}}"),
            _ => String::new(),
        };
        if head.is_empty() && body.is_empty() {
            body.push(format!("not {}", atoms[0]));
        }
        rules.push(if body.is_empty() {
            format!("{head}.")
        } else {
            format!("{head} :- {}.", body.join(", "))
        });
    }
    rules.join("\n")
}

/// A random propositional formula over the given atoms.
pub fn random_formula(rng: &mut impl Rng, atoms: &[&str], depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_range(0..4) == 0;
    if leaf {
        return match rng.gen_range(0..10) {
            0 => Formula::Truth,
            1 => Formula::Falsity,
            _ => Formula::atom(atoms[rng.gen_range(0..atoms.len())], vec![]),
        };
    }
    let choice = rng.gen_range(0..5);
    let mut sub = || random_formula(rng, atoms, depth - 1);
    match choice {
        0 => Formula::Not(Box::new(sub())),
        1 => Formula::And(vec![sub(), sub()]),
        2 => Formula::Or(vec![sub(), sub()]),
        3 => Formula::Implies(Box::new(sub()), Box::new(sub())),
        _ => Formula::Iff(Box::new(sub()), Box::new(sub())),
    }
}

/// Classical truth of a propositional formula.
pub fn classical(formula: &Formula, true_atoms: &BTreeSet<String>) -> bool {
    match formula {
        Formula::Truth => true,
        Formula::Falsity => false,
        Formula::Atom(atom) => {
            assert!(atom.terms.is_empty(), "not propositional");
            true_atoms.contains(&atom.predicate_symbol)
        }
        Formula::Not(f) => !classical(f, true_atoms),
        Formula::And(fs) => fs.iter().all(|f| classical(f, true_atoms)),
        Formula::Or(fs) => fs.iter().any(|f| classical(f, true_atoms)),
        Formula::Implies(a, b) => !classical(a, true_atoms) || classical(b, true_atoms),
        Formula::Iff(a, b) => classical(a, true_atoms) == classical(b, true_atoms),
        other => panic!("not propositional: {other}"),
    }
}

/// Satisfaction at the "here" world of the here-and-there interpretation
/// `(here, there)`, `here ⊆ there`.
pub fn here_and_there(formula: &Formula, here: &BTreeSet<String>, there: &BTreeSet<String>) -> bool {
    let ht = |f: &Formula| here_and_there(f, here, there);
    let implication = |a: &Formula, b: &Formula| (!ht(a) || ht(b)) && (!classical(a, there) || classical(b, there));
    match formula {
        Formula::Truth => true,
        Formula::Falsity => false,
        Formula::Atom(atom) => here.contains(&atom.predicate_symbol),
        Formula::Not(f) => !classical(f, there),
        Formula::And(fs) => fs.iter().all(ht),
        Formula::Or(fs) => fs.iter().any(ht),
        Formula::Implies(a, b) => implication(a, b),
        Formula::Iff(a, b) => implication(a, b) && implication(b, a),
        other => panic!("not propositional: {other}"),
    }
}

/// A corpus program together with concrete input: facts for input predicates
/// and integer values for placeholders.
pub struct CorpusCase {
    pub label: String,
    pub program: Program,
}

fn fact_sets(predicate: &str, tuples: &[Vec<i64>]) -> Vec<String> {
    subsets(tuples)
        .into_iter()
        .map(|chosen| {
            chosen
                .iter()
                .map(|t| {
                    let args: Vec<String> = t.iter().map(i64::to_string).collect();
                    format!("{predicate}({}).", args.join(","))
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

/// Tight corpus programs grounded with inputs drawn from at most three integers.
pub fn corpus_cases() -> Vec<CorpusCase> {
    let mut cases = vec![];
    let mut add = |file: &str, facts: &str, placeholders: &[(&str, i64)]| {
        let text = format!("{}\n{facts}", read_corpus(file));
        let program: Program = text.parse().unwrap_or_else(|e| panic!("{file}: {e}"));
        let values: BTreeMap<String, i64> = placeholders.iter().map(|(n, v)| (n.to_string(), *v)).collect();
        cases.push(CorpusCase {
            label: format!("{file} with {facts} {placeholders:?}"),
            program: instantiate(&program, &values),
        });
    };
    let unary: Vec<Vec<i64>> = (0..3).map(|i| vec![i]).collect();
    for file in ["choice.1.lp", "successor.1.lp", "successor.2.lp", "transitive.2.lp"] {
        for facts in fact_sets("p", &unary) {
            add(file, &facts, &[]);
        }
    }
    let thresholds: Vec<Vec<i64>> = (4..7).map(|i| vec![i]).collect();
    for file in ["threshold.1.lp", "threshold.2.lp"] {
        for facts in fact_sets("q", &thresholds) {
            add(file, &facts, &[]);
        }
    }
    let pairs: Vec<Vec<i64>> = vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]];
    for facts in fact_sets("s", &pairs) {
        for n in 0..3 {
            add("cover.lp", &facts, &[("n", n)]);
        }
    }
    for file in ["primes.1.lp", "primes.2.lp", "primes.3.lp"] {
        for a in 1..4 {
            for b in 1..4 {
                add(file, "", &[("a", a), ("b", b)]);
            }
        }
    }
    cases
}

/// Compare brute-force stable models of `program` with the Herbrand models of
/// the completion of its τ* translation, both over `domain`. `extra` atoms are
/// enumerated on the completion side in addition to the derivable ones.
pub fn completion_mismatch(program: &Program, domain: &[Value], extra: &[GroundAtom]) -> Option<String> {
    let grounding = ground(program, domain);
    let stable = grounding.stable_models();
    let completed = anthem::transform::completion(&anthem::translate::tau_star(program))
        .map_err(|e| e.to_string())
        .ok()?;
    let mut candidates: BTreeSet<GroundAtom> = grounding.candidates.iter().cloned().collect();
    candidates.extend(extra.iter().cloned());
    let candidates: Vec<GroundAtom> = candidates.into_iter().collect();
    let supported = models(&completed, &candidates, domain);
    (stable != supported)
        .then(|| format!("stable models {stable:?}\ncompletion models {supported:?}\ncompletion:\n{completed}"))
}

/// Compare the classical models of γ(theory) plus ordering axioms with the
/// here-and-there models of `theory`, mapping `hp`/`tp` to here/there.
pub fn gamma_mismatch(theory: &fol::Theory) -> Option<String> {
    use anthem::transform::{gamma_with, ordering_axioms_with, HereThereNaming};
    let predicates = theory.predicates();
    let naming = HereThereNaming::new(&predicates);
    let mut embedded = gamma_with(theory, &naming);
    embedded.formulas.extend(ordering_axioms_with(&naming).formulas);

    let atoms: Vec<String> = predicates.iter().map(|p| p.name.clone()).collect();
    let mut ht_models = BTreeSet::new();
    for there in subsets(&atoms) {
        let there_atoms: Vec<String> = there.iter().cloned().collect();
        for here in subsets(&there_atoms) {
            if theory.formulas.iter().all(|f| here_and_there(f, &here, &there)) {
                ht_models.insert((here, there.clone()));
            }
        }
    }
    let doubled: Vec<String> = predicates
        .iter()
        .flat_map(|p| [naming.here(p).name.clone(), naming.there(p).name.clone()])
        .collect();
    let mut classical_models = BTreeSet::new();
    for model in subsets(&doubled) {
        if embedded.formulas.iter().all(|f| classical(f, &model)) {
            let pick = |side: &dyn Fn(&asp::Predicate) -> String| -> BTreeSet<String> {
                predicates
                    .iter()
                    .filter(|p| model.contains(&side(p)))
                    .map(|p| p.name.clone())
                    .collect()
            };
            classical_models.insert((
                pick(&|p| naming.here(p).name.clone()),
                pick(&|p| naming.there(p).name.clone()),
            ));
        }
    }
    (ht_models != classical_models).then(|| {
        format!("theory:\n{theory}\nHT models {ht_models:?}\nclassical models of the embedding {classical_models:?}")
    })
}

/// The propositional atoms of a ground program, for enumeration.
pub fn propositional_atoms(program: &Program) -> Vec<GroundAtom> {
    program.predicates().into_iter().map(|p| (p.name, vec![])).collect()
}

/// Parse a TPTP problem with an independent parser; returns the number of
/// annotated formulas.
pub fn tptp_well_formed(text: &str) -> Result<usize, String> {
    use tptp::TPTPIterator;
    let text = format!("{text}\n");
    let mut parser = TPTPIterator::<()>::new(text.as_bytes());
    let mut count = 0;
    for result in &mut parser {
        result.map_err(|e| format!("TPTP syntax error after {count} inputs: {e:?}"))?;
        count += 1;
    }
    if !parser.remaining.iter().all(u8::is_ascii_whitespace) {
        return Err(format!(
            "unparsed TPTP input: {}",
            String::from_utf8_lossy(&parser.remaining[..parser.remaining.len().min(80)])
        ));
    }
    Ok(count)
}
