//! Rendering of target-language formulas in the typed first-order (TFF) dialect of TPTP.
//!
//! General terms live in the TPTP sort `general`; integer terms in `$int` and
//! symbolic constants in `symbol` are embedded into `general` with the
//! injections `f__integer__` and `f__symbolic__`. Order comparisons between
//! integers use the built-in `$less`-family; all other order comparisons use
//! the axiomatized predicates `p__less__`, `p__less_equal__`, ... over `general`.

use std::collections::{BTreeMap, BTreeSet};

use super::{BinaryOperator, Formula, FormulaError, Quantifier, Relation, Sort, Term, Variable};
use crate::asp::Predicate;

pub const GENERAL: &str = "general";
pub const SYMBOL: &str = "symbol";
pub const INTEGER_EMBEDDING: &str = "f__integer__";
pub const SYMBOL_EMBEDDING: &str = "f__symbolic__";
pub const INFIMUM: &str = "c__infimum__";
pub const SUPREMUM: &str = "c__supremum__";
pub const LESS: &str = "p__less__";
pub const LESS_EQUAL: &str = "p__less_equal__";
pub const GREATER: &str = "p__greater__";
pub const GREATER_EQUAL: &str = "p__greater_equal__";
pub const IS_INTEGER: &str = "p__is_integer__";
pub const IS_SYMBOLIC: &str = "p__is_symbolic__";

fn sort_name(sort: Sort) -> &'static str {
    match sort {
        Sort::General => GENERAL,
        Sort::Integer => "$int",
        Sort::Symbol => SYMBOL,
    }
}

/// Names used for variables in one rendered formula; a name bound at several
/// sorts is disambiguated with a sort suffix.
struct Names {
    map: BTreeMap<Variable, String>,
}

impl Names {
    fn new(formula: &Formula) -> Self {
        let variables = formula.all_variables();
        let mut sorts_by_name: BTreeMap<&str, BTreeSet<Sort>> = BTreeMap::new();
        for v in &variables {
            sorts_by_name.entry(&v.name).or_default().insert(v.sort);
        }
        let mut taken: BTreeSet<String> = variables.iter().map(|v| v.name.clone()).collect();
        let mut map = BTreeMap::new();
        for v in &variables {
            let name = if sorts_by_name[v.name.as_str()].len() > 1 && v.sort != Sort::General {
                let base = match v.sort {
                    Sort::Integer => format!("{}_i", v.name),
                    _ => format!("{}_s", v.name),
                };
                let name = super::fresh_name(&base, &taken);
                taken.insert(name.clone());
                name
            } else {
                v.name.clone()
            };
            map.insert(v.clone(), name);
        }
        Names { map }
    }

    fn get(&self, v: &Variable) -> &str {
        &self.map[v]
    }
}

fn integer_term(term: &Term, names: &Names) -> String {
    match term {
        Term::Numeral(n) => n.to_string(),
        Term::Variable(v) => names.get(v).to_string(),
        Term::Placeholder(name, _) => name.clone(),
        Term::Negative(arg) => format!("$uminus({})", integer_term(arg, names)),
        Term::Binary { op, lhs, rhs } => {
            let function = match op {
                BinaryOperator::Add => "$sum",
                BinaryOperator::Subtract => "$difference",
                BinaryOperator::Multiply => "$product",
            };
            format!("{function}({}, {})", integer_term(lhs, names), integer_term(rhs, names))
        }
        other => unreachable!("`{other}` is not an integer term"),
    }
}

fn symbolic_term(term: &Term, names: &Names) -> String {
    match term {
        Term::Symbol(name) | Term::Placeholder(name, _) => name.clone(),
        Term::Variable(v) => names.get(v).to_string(),
        other => unreachable!("`{other}` is not a symbolic term"),
    }
}

fn general_term(term: &Term, names: &Names) -> String {
    match term.sort() {
        Sort::Integer => format!("{INTEGER_EMBEDDING}({})", integer_term(term, names)),
        Sort::Symbol => format!("{SYMBOL_EMBEDDING}({})", symbolic_term(term, names)),
        Sort::General => match term {
            Term::Variable(v) => names.get(v).to_string(),
            Term::Infimum => INFIMUM.to_string(),
            Term::Supremum => SUPREMUM.to_string(),
            other => unreachable!("`{other}` is not a general term"),
        },
    }
}

fn comparison(lhs: &Term, relation: Relation, rhs: &Term, names: &Names) -> String {
    let same_sort = lhs.sort() == rhs.sort();
    match relation {
        Relation::Equal | Relation::NotEqual => {
            let symbol = if relation == Relation::Equal { "=" } else { "!=" };
            let (l, r) = match (same_sort, lhs.sort()) {
                (true, Sort::Integer) => (integer_term(lhs, names), integer_term(rhs, names)),
                (true, Sort::Symbol) => (symbolic_term(lhs, names), symbolic_term(rhs, names)),
                _ => (general_term(lhs, names), general_term(rhs, names)),
            };
            format!("( {l} {symbol} {r} )")
        }
        _ => {
            if same_sort && lhs.sort() == Sort::Integer {
                let predicate = match relation {
                    Relation::Less => "$less",
                    Relation::LessEqual => "$lesseq",
                    Relation::Greater => "$greater",
                    _ => "$greatereq",
                };
                format!(
                    "{predicate}({}, {})",
                    integer_term(lhs, names),
                    integer_term(rhs, names)
                )
            } else {
                let predicate = match relation {
                    Relation::Less => LESS,
                    Relation::LessEqual => LESS_EQUAL,
                    Relation::Greater => GREATER,
                    _ => GREATER_EQUAL,
                };
                format!(
                    "{predicate}({}, {})",
                    general_term(lhs, names),
                    general_term(rhs, names)
                )
            }
        }
    }
}

fn is_unitary(formula: &Formula) -> bool {
    match formula {
        Formula::And(fs) | Formula::Or(fs) => fs.len() <= 1 && fs.iter().all(is_unitary),
        Formula::Comparison(c) => c.guards.len() == 1,
        Formula::Implies(..) | Formula::Iff(..) => false,
        _ => true,
    }
}

fn unitary(formula: &Formula, names: &Names) -> String {
    let text = render(formula, names);
    if is_unitary(formula) {
        text
    } else {
        format!("( {text} )")
    }
}

fn render(formula: &Formula, names: &Names) -> String {
    match formula {
        Formula::Truth => "$true".into(),
        Formula::Falsity => "$false".into(),
        Formula::Atom(atom) => {
            if atom.terms.is_empty() {
                atom.predicate_symbol.clone()
            } else {
                let terms: Vec<String> = atom.terms.iter().map(|t| general_term(t, names)).collect();
                format!("{}({})", atom.predicate_symbol, terms.join(", "))
            }
        }
        Formula::Comparison(c) => {
            let pairs: Vec<String> = c
                .pairs()
                .into_iter()
                .map(|(l, r, t)| comparison(l, r, t, names))
                .collect();
            pairs.join(" & ")
        }
        Formula::Not(inner) => format!("~ {}", unitary(inner, names)),
        Formula::And(fs) | Formula::Or(fs) => {
            let (connective, empty) = match formula {
                Formula::And(_) => (" & ", "$true"),
                _ => (" | ", "$false"),
            };
            match fs.len() {
                0 => empty.into(),
                1 => render(&fs[0], names),
                _ => fs
                    .iter()
                    .map(|f| unitary(f, names))
                    .collect::<Vec<_>>()
                    .join(connective),
            }
        }
        Formula::Implies(l, r) => format!("{} => {}", unitary(l, names), unitary(r, names)),
        Formula::Iff(l, r) => format!("{} <=> {}", unitary(l, names), unitary(r, names)),
        Formula::Quantified {
            quantifier,
            variables,
            formula,
        } => {
            let symbol = match quantifier {
                Quantifier::Forall => "!",
                Quantifier::Exists => "?",
            };
            let variables: Vec<String> = variables
                .iter()
                .map(|v| format!("{}: {}", names.get(v), sort_name(v.sort)))
                .collect();
            format!("{symbol}[{}]: ( {} )", variables.join(", "), render(formula, names))
        }
    }
}

/// Render a closed formula in TPTP TFF syntax.
pub fn format_tptp(formula: &Formula) -> Result<String, FormulaError> {
    let free = formula.free_variables();
    if !free.is_empty() {
        let names: Vec<String> = free.iter().map(Variable::to_string).collect();
        return Err(FormulaError::Closure(names.join(", ")));
    }
    Ok(render(formula, &Names::new(formula)))
}

/// The non-logical symbols a formula uses, for TPTP type declarations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub predicates: BTreeSet<Predicate>,
    pub symbols: BTreeSet<String>,
    pub placeholders: BTreeMap<String, Sort>,
}

impl Signature {
    pub fn add(&mut self, formula: &Formula) {
        self.predicates.extend(formula.predicates());
        formula.visit_terms(&mut |t| match t {
            Term::Symbol(s) => {
                self.symbols.insert(s.clone());
            }
            Term::Placeholder(name, sort) => {
                self.placeholders.insert(name.clone(), *sort);
            }
            _ => {}
        });
    }

    pub fn of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Self {
        let mut signature = Signature::default();
        for formula in formulas {
            signature.add(formula);
        }
        signature
    }

    /// `tff` type declarations for every symbol, sorted by name.
    pub fn declarations(&self) -> Vec<(String, String)> {
        let mut out = BTreeMap::new();
        for predicate in &self.predicates {
            let ty = match predicate.arity {
                0 => "$o".to_string(),
                1 => format!("{GENERAL} > $o"),
                n => format!("({}) > $o", vec![GENERAL; n].join(" * ")),
            };
            out.insert(predicate.name.clone(), ty);
        }
        for symbol in &self.symbols {
            out.insert(symbol.clone(), SYMBOL.to_string());
        }
        for (name, sort) in &self.placeholders {
            out.insert(name.clone(), sort_name(*sort).to_string());
        }
        out.into_iter().collect()
    }
}
