//! Abstract syntax of mini-gringo programs.

mod format;
mod parse;

use std::collections::BTreeSet;

pub use parse::{parse_program, parse_rule, parse_term};

use crate::lexer::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryOperator {
    Negative,
    AbsoluteValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOperator {
    Add,
    Subtract,
    Multiply,
    Divide,
    Modulo,
    Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Numeral(i64),
    Symbol(String),
    Infimum,
    Supremum,
    Variable(String),
    Unary {
        op: UnaryOperator,
        arg: Box<Term>,
    },
    Binary {
        op: BinaryOperator,
        lhs: Box<Term>,
        rhs: Box<Term>,
    },
}

impl Term {
    pub fn unary(op: UnaryOperator, arg: Term) -> Term {
        Term::Unary { op, arg: Box::new(arg) }
    }

    pub fn binary(op: BinaryOperator, lhs: Term, rhs: Term) -> Term {
        Term::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    pub fn variable(name: &str) -> Term {
        Term::Variable(name.to_string())
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self, out: &mut Vec<String>) {
        match self {
            Term::Variable(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Term::Unary { arg, .. } => arg.variables(out),
            Term::Binary { lhs, rhs, .. } => {
                lhs.variables(out);
                rhs.variables(out);
            }
            Term::Numeral(_) | Term::Symbol(_) | Term::Infimum | Term::Supremum => {}
        }
    }

    pub fn symbols(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Symbol(name) => {
                out.insert(name.clone());
            }
            Term::Unary { arg, .. } => arg.symbols(out),
            Term::Binary { lhs, rhs, .. } => {
                lhs.symbols(out);
                rhs.symbols(out);
            }
            _ => {}
        }
    }

    pub fn contains(&self, predicate: &dyn Fn(&Term) -> bool) -> bool {
        if predicate(self) {
            return true;
        }
        match self {
            Term::Unary { arg, .. } => arg.contains(predicate),
            Term::Binary { lhs, rhs, .. } => lhs.contains(predicate) || rhs.contains(predicate),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Predicate {
    pub name: String,
    pub arity: usize,
}

impl Predicate {
    pub fn new(name: &str, arity: usize) -> Self {
        Predicate {
            name: name.to_string(),
            arity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
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

    pub fn variables(&self, out: &mut Vec<String>) {
        for term in &self.terms {
            term.variables(out);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    NoSign,
    Negation,
    DoubleNegation,
}

impl Sign {
    pub fn count(self) -> usize {
        match self {
            Sign::NoSign => 0,
            Sign::Negation => 1,
            Sign::DoubleNegation => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub sign: Sign,
    pub atom: Atom,
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

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub relation: Relation,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BodyLiteral {
    Literal(Literal),
    Comparison(Comparison),
}

impl BodyLiteral {
    pub fn variables(&self, out: &mut Vec<String>) {
        match self {
            BodyLiteral::Literal(literal) => literal.atom.variables(out),
            BodyLiteral::Comparison(comparison) => {
                comparison.lhs.variables(out);
                comparison.rhs.variables(out);
            }
        }
    }

    pub fn terms(&self) -> Vec<&Term> {
        match self {
            BodyLiteral::Literal(literal) => literal.atom.terms.iter().collect(),
            BodyLiteral::Comparison(comparison) => vec![&comparison.lhs, &comparison.rhs],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Head {
    Basic(Atom),
    Choice(Atom),
    Falsity,
}

impl Head {
    pub fn atom(&self) -> Option<&Atom> {
        match self {
            Head::Basic(atom) | Head::Choice(atom) => Some(atom),
            Head::Falsity => None,
        }
    }

    pub fn predicate(&self) -> Option<Predicate> {
        self.atom().map(Atom::predicate)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: Head,
    pub body: Vec<BodyLiteral>,
}

impl Rule {
    /// Variables of the rule in order of first occurrence (head first, then body).
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(atom) = self.head.atom() {
            atom.variables(&mut out);
        }
        for literal in &self.body {
            literal.variables(&mut out);
        }
        out
    }

    pub fn predicates(&self) -> BTreeSet<Predicate> {
        let mut out = BTreeSet::new();
        if let Some(p) = self.head.predicate() {
            out.insert(p);
        }
        for literal in &self.body {
            if let BodyLiteral::Literal(literal) = literal {
                out.insert(literal.atom.predicate());
            }
        }
        out
    }

    pub fn terms(&self) -> Vec<&Term> {
        let mut out: Vec<&Term> = self.head.atom().map(|a| a.terms.iter().collect()).unwrap_or_default();
        for literal in &self.body {
            out.extend(literal.terms());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Program {
    pub rules: Vec<Rule>,
}

impl Program {
    /// Exactly the predicate symbols occurring in heads or bodies.
    pub fn predicates(&self) -> BTreeSet<Predicate> {
        self.rules.iter().flat_map(Rule::predicates).collect()
    }

    /// Predicates occurring in some rule head, in order of first definition.
    pub fn head_predicates(&self) -> Vec<Predicate> {
        let mut out = Vec::new();
        for rule in &self.rules {
            if let Some(p) = rule.head.predicate() {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Symbolic constants occurring anywhere in the program.
    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            for term in rule.terms() {
                term.symbols(&mut out);
            }
        }
        out
    }
}

impl std::str::FromStr for Program {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_program(s)
    }
}

impl std::str::FromStr for Rule {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rule(s)
    }
}

/// Render a program as text; the output reparses to the same program.
pub fn format_program(program: &Program) -> String {
    program.to_string()
}
