//! The control language: user guides (`.ug`), specifications (`.spec`), and
//! proof outlines (`.po`).
//!
//! Every document is a sequence of `.`-terminated statements of the form
//! `role(direction)[name]: body.` The period after the last statement may be
//! omitted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::asp::Predicate;
use crate::fol::{Formula, FormulaParser, Quantifier, Relation, Sort, Term, Variable};
use crate::lexer::{tokenize, Location, Mode, ParseError, Token, TokenStream};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Assumption,
    Spec,
    Definition,
    Lemma,
    InductiveLemma,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Assumption => "assumption",
            Role::Spec => "spec",
            Role::Definition => "definition",
            Role::Lemma => "lemma",
            Role::InductiveLemma => "inductive-lemma",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    #[default]
    Universal,
    Forward,
    Backward,
}

impl Direction {
    /// Whether a formula annotated with `self` takes part in a proof in direction `other`.
    pub fn applies_to(self, other: Direction) -> bool {
        self == Direction::Universal || other == Direction::Universal || self == other
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Universal => "universal",
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "universal" => Ok(Direction::Universal),
            "forward" => Ok(Direction::Forward),
            "backward" => Ok(Direction::Backward),
            _ => Err(format!("unknown direction `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedFormula {
    pub role: Role,
    pub direction: Direction,
    pub name: Option<String>,
    pub formula: Formula,
    pub location: Location,
}

impl AnnotatedFormula {
    /// The given name, or `_<role>_<index>` for unnamed entries.
    pub fn display_name(&self, index: usize) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!("_{}_{index}", self.role),
        }
    }
}

impl fmt::Display for AnnotatedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.role)?;
        if self.direction != Direction::Universal {
            write!(f, "({})", self.direction)?;
        }
        if let Some(name) = &self.name {
            write!(f, "[{name}]")?;
        }
        write!(f, ": {}.", self.formula)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDeclaration {
    Predicate(Predicate),
    Placeholder { name: String, sort: Sort },
}

impl fmt::Display for InputDeclaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputDeclaration::Predicate(p) => write!(f, "input: {p}."),
            InputDeclaration::Placeholder { name, sort } => write!(f, "input: {name} -> {sort}."),
        }
    }
}

/// Describes the intended use of a program: its inputs (predicates and
/// placeholders), outputs, and assumptions about the inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UserGuide {
    pub inputs: Vec<InputDeclaration>,
    pub outputs: Vec<Predicate>,
    pub assumptions: Vec<AnnotatedFormula>,
}

impl UserGuide {
    pub fn input_predicates(&self) -> BTreeSet<Predicate> {
        self.inputs
            .iter()
            .filter_map(|input| match input {
                InputDeclaration::Predicate(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn output_predicates(&self) -> BTreeSet<Predicate> {
        self.outputs.iter().cloned().collect()
    }

    pub fn placeholders(&self) -> BTreeMap<String, Sort> {
        self.inputs
            .iter()
            .filter_map(|input| match input {
                InputDeclaration::Placeholder { name, sort } => Some((name.clone(), *sort)),
                _ => None,
            })
            .collect()
    }

    /// Predicates that are neither input nor output.
    pub fn private_predicates(&self, predicates: &BTreeSet<Predicate>) -> BTreeSet<Predicate> {
        let inputs = self.input_predicates();
        predicates
            .iter()
            .filter(|p| !inputs.contains(p) && !self.outputs.contains(p))
            .cloned()
            .collect()
    }
}

impl fmt::Display for UserGuide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for input in &self.inputs {
            writeln!(f, "{input}")?;
        }
        for output in &self.outputs {
            writeln!(f, "output: {output}.")?;
        }
        for assumption in &self.assumptions {
            writeln!(f, "{assumption}")?;
        }
        Ok(())
    }
}

/// A first-order specification: assumptions together with the formulas a
/// program is expected to satisfy.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specification {
    pub assumptions: Vec<AnnotatedFormula>,
    pub specs: Vec<AnnotatedFormula>,
}

impl fmt::Display for Specification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in self.assumptions.iter().chain(&self.specs) {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

/// An ordered list of definitions, lemmas, and inductive lemmas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofOutline {
    pub entries: Vec<AnnotatedFormula>,
}

impl fmt::Display for ProofOutline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

/// Replace symbolic constants naming placeholders by placeholder terms.
pub fn replace_placeholders(formula: &Formula, placeholders: &BTreeMap<String, Sort>) -> Formula {
    formula.map_constants(&|term| match term {
        Term::Symbol(name) => placeholders
            .get(name)
            .map(|sort| Term::Placeholder(name.clone(), *sort)),
        _ => None,
    })
}

struct Header {
    role: String,
    direction: Direction,
    name: Option<String>,
    location: Location,
}

fn validation(location: Location, message: impl Into<String>) -> ParseError {
    ParseError::Validation {
        location,
        message: message.into(),
    }
}

fn identifier(stream: &mut TokenStream, expected: &str) -> Result<String, ParseError> {
    match stream.peek().clone() {
        Token::Identifier { name, suffix: None } => {
            stream.next();
            Ok(name)
        }
        _ => Err(stream.error(expected)),
    }
}

fn header(stream: &mut TokenStream) -> Result<Header, ParseError> {
    let location = stream.location();
    let mut role = identifier(stream, "a statement role")?;
    if role == "inductive" && stream.is_symbol("-") {
        stream.next();
        if !stream.eat_keyword("lemma") {
            return Err(stream.error("`lemma`"));
        }
        role = "inductive-lemma".to_string();
    }
    let mut direction = Direction::Universal;
    if stream.eat_symbol("(") {
        let location = stream.location();
        let word = identifier(stream, "a direction")?;
        direction = word.parse().map_err(|_| ParseError::Syntax {
            location,
            expected: "`universal`, `forward`, or `backward`".to_string(),
            found: format!("`{word}`"),
        })?;
        stream.expect_symbol(")")?;
    }
    let mut name = None;
    if stream.eat_symbol("[") {
        name = Some(match stream.peek().clone() {
            Token::Identifier { name, suffix: None } | Token::Variable { name, suffix: None } => {
                stream.next();
                name
            }
            _ => return Err(stream.error("a name")),
        });
        stream.expect_symbol("]")?;
    }
    stream.expect_symbol(":")?;
    Ok(Header {
        role,
        direction,
        name,
        location,
    })
}

fn end_of_statement(stream: &mut TokenStream) -> Result<(), ParseError> {
    if stream.eat_symbol(".") || stream.at_eof() {
        Ok(())
    } else {
        Err(stream.error("`.`"))
    }
}

fn annotated(stream: &mut TokenStream, header: Header, role: Role) -> Result<AnnotatedFormula, ParseError> {
    let formula = FormulaParser::formula(stream)?;
    end_of_statement(stream)?;
    Ok(AnnotatedFormula {
        role,
        direction: header.direction,
        name: header.name,
        formula,
        location: header.location,
    })
}

fn role_error(header: &Header, allowed: &str) -> ParseError {
    ParseError::Syntax {
        location: header.location,
        expected: allowed.to_string(),
        found: format!("`{}`", header.role),
    }
}

fn predicate_declaration(stream: &mut TokenStream, name: String) -> Result<Predicate, ParseError> {
    stream.expect_symbol("/")?;
    match stream.peek().clone() {
        Token::Number(n) if n >= 0 => {
            stream.next();
            Ok(Predicate::new(&name, n as usize))
        }
        _ => Err(stream.error("an arity")),
    }
}

pub fn parse_user_guide(text: &str) -> Result<UserGuide, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let mut guide = UserGuide::default();
    while !stream.at_eof() {
        let header = header(&mut stream)?;
        match header.role.as_str() {
            "input" | "output" => {
                let location = stream.location();
                let name = identifier(&mut stream, "a predicate or placeholder name")?;
                if header.role == "input" && stream.eat_symbol("->") {
                    let sort = match identifier(&mut stream, "`integer` or `symbol`")?.as_str() {
                        "integer" => Sort::Integer,
                        "symbol" => Sort::Symbol,
                        other => {
                            return Err(ParseError::Syntax {
                                location,
                                expected: "`integer` or `symbol`".to_string(),
                                found: format!("`{other}`"),
                            })
                        }
                    };
                    guide.inputs.push(InputDeclaration::Placeholder { name, sort });
                } else {
                    let predicate = predicate_declaration(&mut stream, name)?;
                    if header.role == "input" {
                        guide.inputs.push(InputDeclaration::Predicate(predicate));
                    } else {
                        guide.outputs.push(predicate);
                    }
                }
                end_of_statement(&mut stream)?;
            }
            "assumption" => guide
                .assumptions
                .push(annotated(&mut stream, header, Role::Assumption)?),
            _ => return Err(role_error(&header, "`input`, `output`, or `assumption`")),
        }
    }
    validate_user_guide(&guide)?;
    Ok(guide)
}

fn validate_user_guide(guide: &UserGuide) -> Result<(), ParseError> {
    let start = Location { line: 1, column: 1 };
    let inputs = guide.input_predicates();
    if let Some(p) = guide.outputs.iter().find(|p| inputs.contains(p)) {
        return Err(validation(
            start,
            format!("{p} is declared both as input and as output"),
        ));
    }
    let mut placeholders = BTreeSet::new();
    for input in &guide.inputs {
        if let InputDeclaration::Placeholder { name, .. } = input {
            if !placeholders.insert(name) {
                return Err(validation(start, format!("placeholder `{name}` is declared twice")));
            }
        }
    }
    for assumption in &guide.assumptions {
        if let Some(p) = assumption.formula.predicates().iter().find(|p| !inputs.contains(p)) {
            return Err(validation(
                assumption.location,
                format!("assumptions may only mention input predicates, but {p} is not an input"),
            ));
        }
    }
    Ok(())
}

pub fn parse_specification(text: &str) -> Result<Specification, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let mut specification = Specification::default();
    while !stream.at_eof() {
        let header = header(&mut stream)?;
        match header.role.as_str() {
            "assumption" => specification
                .assumptions
                .push(annotated(&mut stream, header, Role::Assumption)?),
            "spec" => specification.specs.push(annotated(&mut stream, header, Role::Spec)?),
            _ => return Err(role_error(&header, "`spec` or `assumption`")),
        }
    }
    Ok(specification)
}

/// Parse a proof outline. Sequencing and freshness of definitions depend on
/// the programs involved and are checked by [`validate_outline`].
pub fn parse_proof_outline(text: &str) -> Result<ProofOutline, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let mut outline = ProofOutline::default();
    while !stream.at_eof() {
        let header = header(&mut stream)?;
        let role = match header.role.as_str() {
            "definition" => Role::Definition,
            "lemma" => Role::Lemma,
            "inductive-lemma" => Role::InductiveLemma,
            _ => return Err(role_error(&header, "`definition`, `lemma`, or `inductive-lemma`")),
        };
        let entry = annotated(&mut stream, header, role)?;
        match role {
            Role::Definition => {
                definition_shape(&entry)?;
            }
            Role::InductiveLemma => {
                inductive_shape(&entry)?;
            }
            _ => {}
        }
        outline.entries.push(entry);
    }
    Ok(outline)
}

/// The defined predicate of a definition `forall X (p(X) <-> F(X))`.
pub fn definition_shape(entry: &AnnotatedFormula) -> Result<(Predicate, Formula), ParseError> {
    let error = || {
        validation(
            entry.location,
            format!(
                "definition `{}` must have the form forall X (p(X) <-> F(X))",
                entry.formula
            ),
        )
    };
    let closed = entry.formula.clone().universal_closure();
    let (variables, body) = match &closed {
        Formula::Quantified {
            quantifier: Quantifier::Forall,
            variables,
            formula,
        } => (variables.clone(), (**formula).clone()),
        other => (vec![], other.clone()),
    };
    let Formula::Iff(lhs, rhs) = body else {
        return Err(error());
    };
    let Formula::Atom(atom) = *lhs else {
        return Err(error());
    };
    let mut seen = BTreeSet::new();
    for term in &atom.terms {
        match term {
            Term::Variable(v) if variables.contains(v) && seen.insert(v.clone()) => {}
            _ => return Err(error()),
        }
    }
    if seen.len() != variables.len() {
        return Err(error());
    }
    Ok((atom.predicate(), *rhs))
}

/// An inductive lemma `forall X N$ (N$ >= n -> F(X, N$))`, split into the
/// induction variable, its lower bound `n`, the other variables, and `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induction {
    pub variable: Variable,
    pub start: i64,
    pub others: Vec<Variable>,
    pub body: Formula,
}

impl Induction {
    /// `forall X F(X, n)`.
    pub fn base_case(&self) -> Formula {
        let base = self
            .body
            .substitute(&self.variable, &Term::Numeral(self.start))
            .expect("numerals are integers");
        Formula::forall(self.others.clone(), base)
    }

    /// `forall X N (N >= n and F(X, N) -> F(X, N + 1))`.
    pub fn inductive_step(&self) -> Formula {
        let successor = self
            .body
            .substitute(&self.variable, &Term::add(self.variable.term(), Term::Numeral(1)))
            .expect("successor is an integer");
        let mut variables = self.others.clone();
        variables.push(self.variable.clone());
        Formula::forall(
            variables,
            Formula::implies(Formula::And(vec![self.guard(), self.body.clone()]), successor),
        )
    }

    /// `forall X N (N >= n -> F(X, N))`.
    pub fn conclusion(&self) -> Formula {
        let mut variables = self.others.clone();
        variables.push(self.variable.clone());
        Formula::forall(variables, Formula::implies(self.guard(), self.body.clone()))
    }

    fn guard(&self) -> Formula {
        Formula::comparison(self.variable.term(), Relation::GreaterEqual, Term::Numeral(self.start))
    }
}

pub fn inductive_shape(entry: &AnnotatedFormula) -> Result<Induction, ParseError> {
    let error = || {
        validation(
            entry.location,
            format!(
                "inductive lemma `{}` must have the form forall X N$ (N$ >= n -> F(X, N$))",
                entry.formula
            ),
        )
    };
    let closed = entry.formula.clone().universal_closure();
    let Formula::Quantified {
        quantifier: Quantifier::Forall,
        variables,
        formula,
    } = closed
    else {
        return Err(error());
    };
    let Formula::Implies(guard, body) = *formula else {
        return Err(error());
    };
    let Formula::Comparison(comparison) = *guard else {
        return Err(error());
    };
    let [(Term::Variable(variable), Relation::GreaterEqual, bound)] = comparison.pairs()[..] else {
        return Err(error());
    };
    let start = match bound {
        Term::Numeral(n) => *n,
        Term::Negative(inner) => match **inner {
            Term::Numeral(n) => -n,
            _ => return Err(error()),
        },
        _ => return Err(error()),
    };
    if variable.sort != Sort::Integer || !variables.contains(variable) {
        return Err(error());
    }
    Ok(Induction {
        variable: variable.clone(),
        start,
        others: variables.iter().filter(|v| *v != variable).cloned().collect(),
        body: *body,
    })
}

/// Check that definitions introduce fresh predicates and that every entry
/// mentions only `known` predicates or predicates defined earlier in the outline.
pub fn validate_outline(outline: &ProofOutline, known: &BTreeSet<Predicate>) -> Result<(), ParseError> {
    let mut defined: BTreeSet<Predicate> = BTreeSet::new();
    for entry in &outline.entries {
        let (uses, new) = match entry.role {
            Role::Definition => {
                let (predicate, body) = definition_shape(entry)?;
                if known.contains(&predicate) || defined.contains(&predicate) {
                    return Err(validation(
                        entry.location,
                        format!("definition of {predicate} does not introduce a fresh predicate"),
                    ));
                }
                (body.predicates(), Some(predicate))
            }
            _ => (entry.formula.predicates(), None),
        };
        if let Some(p) = uses.iter().find(|p| !known.contains(p) && !defined.contains(p)) {
            return Err(validation(
                entry.location,
                format!(
                    "{} uses {p}, which is neither a program or user guide predicate nor defined earlier in the outline",
                    entry.display_name(0)
                ),
            ));
        }
        defined.extend(new);
    }
    Ok(())
}

impl FromStr for UserGuide {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_user_guide(s)
    }
}

impl FromStr for Specification {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_specification(s)
    }
}

impl FromStr for ProofOutline {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_proof_outline(s)
    }
}
