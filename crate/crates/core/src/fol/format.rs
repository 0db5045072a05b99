use std::fmt;

use super::{Atom, BinaryOperator, Comparison, Formula, Quantifier, Sort, Term, Theory, Variable};

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::General => write!(f, "general"),
            Sort::Integer => write!(f, "integer"),
            Sort::Symbol => write!(f, "symbol"),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, self.sort.suffix())
    }
}

fn term_precedence(term: &Term) -> u8 {
    match term {
        Term::Binary {
            op: BinaryOperator::Add | BinaryOperator::Subtract,
            ..
        } => 1,
        Term::Binary {
            op: BinaryOperator::Multiply,
            ..
        } => 2,
        Term::Negative(_) => 3,
        _ => 4,
    }
}

fn write_term_operand(f: &mut fmt::Formatter<'_>, term: &Term, minimum: u8) -> fmt::Result {
    if term_precedence(term) < minimum {
        write!(f, "({term})")
    } else {
        write!(f, "{term}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Numeral(n) => write!(f, "{n}"),
            Term::Symbol(name) => write!(f, "{name}"),
            Term::Placeholder(name, sort) => write!(f, "{name}{}", sort.suffix()),
            Term::Variable(v) => write!(f, "{v}"),
            Term::Infimum => write!(f, "#inf"),
            Term::Supremum => write!(f, "#sup"),
            Term::Negative(arg) => {
                if matches!(**arg, Term::Numeral(_)) {
                    write!(f, "-({arg})")
                } else {
                    write!(f, "-")?;
                    write_term_operand(f, arg, 3)
                }
            }
            Term::Binary { op, lhs, rhs } => {
                let (symbol, level) = match op {
                    BinaryOperator::Add => ("+", 1),
                    BinaryOperator::Subtract => ("-", 1),
                    BinaryOperator::Multiply => ("*", 2),
                };
                write_term_operand(f, lhs, level)?;
                write!(f, " {symbol} ")?;
                write_term_operand(f, rhs, level + 1)
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate_symbol)?;
        if !self.terms.is_empty() {
            let terms: Vec<String> = self.terms.iter().map(Term::to_string).collect();
            write!(f, "({})", terms.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.term)?;
        for guard in &self.guards {
            write!(f, " {} {}", guard.relation.symbol(), guard.term)?;
        }
        Ok(())
    }
}

/// Binding strength; higher binds tighter.
fn precedence(formula: &Formula) -> u8 {
    match formula {
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(fs) if fs.len() > 1 => 3,
        Formula::And(fs) if fs.len() > 1 => 4,
        _ => 5,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, formula: &Formula, parent: u8) -> fmt::Result {
    if precedence(formula) <= parent {
        write!(f, "({formula})")
    } else {
        write!(f, "{formula}")
    }
}

/// Quantifier bodies and negated formulas are parenthesized unless they are
/// atoms, negations, or quantified formulas. Comparisons are parenthesized so
/// that a leading variable is not mistaken for a bound variable.
fn write_prefix_operand(f: &mut fmt::Formatter<'_>, formula: &Formula) -> fmt::Result {
    match formula {
        Formula::Truth | Formula::Falsity | Formula::Atom(_) | Formula::Not(_) | Formula::Quantified { .. } => {
            write!(f, "{formula}")
        }
        Formula::And(fs) | Formula::Or(fs) if fs.len() == 1 => write_prefix_operand(f, &fs[0]),
        _ => write!(f, "({formula})"),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Truth => write!(f, "#true"),
            Formula::Falsity => write!(f, "#false"),
            Formula::Atom(atom) => write!(f, "{atom}"),
            Formula::Comparison(comparison) => write!(f, "{comparison}"),
            Formula::Not(inner) => {
                write!(f, "not ")?;
                write_prefix_operand(f, inner)
            }
            Formula::And(fs) | Formula::Or(fs) => {
                let (connective, empty, level) = match self {
                    Formula::And(_) => ("and", "#true", 4),
                    _ => ("or", "#false", 3),
                };
                match fs.len() {
                    0 => write!(f, "{empty}"),
                    1 => write!(f, "{}", fs[0]),
                    _ => {
                        for (i, operand) in fs.iter().enumerate() {
                            if i > 0 {
                                write!(f, " {connective} ")?;
                            }
                            write_operand(f, operand, level)?;
                        }
                        Ok(())
                    }
                }
            }
            Formula::Implies(lhs, rhs) => {
                write_operand(f, lhs, 2)?;
                write!(f, " -> ")?;
                write_operand(f, rhs, 2)
            }
            Formula::Iff(lhs, rhs) => {
                write_operand(f, lhs, 1)?;
                write!(f, " <-> ")?;
                write_operand(f, rhs, 1)
            }
            Formula::Quantified {
                quantifier,
                variables,
                formula,
            } => {
                match quantifier {
                    Quantifier::Forall => write!(f, "forall")?,
                    Quantifier::Exists => write!(f, "exists")?,
                }
                for v in variables {
                    write!(f, " {v}")?;
                }
                write!(f, " ")?;
                write_prefix_operand(f, formula)
            }
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for formula in &self.formulas {
            writeln!(f, "{formula}.")?;
        }
        Ok(())
    }
}
