use std::fmt;

use super::{
    Atom, BinaryOperator, BodyLiteral, Comparison, Head, Literal, Predicate, Program, Rule, Sign, Term, UnaryOperator,
};

fn precedence(term: &Term) -> u8 {
    match term {
        Term::Binary {
            op: BinaryOperator::Interval,
            ..
        } => 1,
        Term::Binary {
            op: BinaryOperator::Add | BinaryOperator::Subtract,
            ..
        } => 2,
        Term::Binary { .. } => 3,
        Term::Unary {
            op: UnaryOperator::Negative,
            ..
        } => 4,
        _ => 5,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, term: &Term, minimum: u8) -> fmt::Result {
    if precedence(term) < minimum {
        write!(f, "({term})")
    } else {
        write!(f, "{term}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Numeral(n) => write!(f, "{n}"),
            Term::Symbol(name) | Term::Variable(name) => write!(f, "{name}"),
            Term::Infimum => write!(f, "#inf"),
            Term::Supremum => write!(f, "#sup"),
            Term::Unary {
                op: UnaryOperator::Negative,
                arg,
            } => {
                // `-(1)` keeps a negated numeral distinct from the numeral `-1`
                if matches!(**arg, Term::Numeral(_)) {
                    write!(f, "-({arg})")
                } else {
                    write!(f, "-")?;
                    write_operand(f, arg, 4)
                }
            }
            Term::Unary {
                op: UnaryOperator::AbsoluteValue,
                arg,
            } => write!(f, "|{arg}|"),
            Term::Binary { op, lhs, rhs } => {
                let (symbol, level) = match op {
                    BinaryOperator::Interval => ("..", 1),
                    BinaryOperator::Add => ("+", 2),
                    BinaryOperator::Subtract => ("-", 2),
                    BinaryOperator::Multiply => ("*", 3),
                    BinaryOperator::Divide => ("/", 3),
                    BinaryOperator::Modulo => ("\\", 3),
                };
                // left-associative operators; intervals do not associate
                let left_minimum = if *op == BinaryOperator::Interval { 2 } else { level };
                write_operand(f, lhs, left_minimum)?;
                write!(f, "{symbol}")?;
                // a numeral `-1` right of `-` would lex as `--1`, which reparses the same way
                write_operand(f, rhs, level + 1)
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate_symbol)?;
        if !self.terms.is_empty() {
            let terms: Vec<String> = self.terms.iter().map(Term::to_string).collect();
            write!(f, "({})", terms.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::NoSign => write!(f, "{}", self.atom),
            Sign::Negation => write!(f, "not {}", self.atom),
            Sign::DoubleNegation => write!(f, "not not {}", self.atom),
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.relation.symbol(), self.rhs)
    }
}

impl fmt::Display for BodyLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BodyLiteral::Literal(literal) => literal.fmt(f),
            BodyLiteral::Comparison(comparison) => comparison.fmt(f),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.head {
            Head::Basic(atom) => write!(f, "{atom}")?,
            Head::Choice(atom) => write!(f, "{{{atom}}}")?,
            Head::Falsity => {}
        }
        if !self.body.is_empty() || self.head == Head::Falsity {
            if self.head != Head::Falsity {
                write!(f, " ")?;
            }
            write!(f, ":-")?;
            let body: Vec<String> = self.body.iter().map(BodyLiteral::to_string).collect();
            if !body.is_empty() {
                write!(f, " {}", body.join(", "))?;
            }
        }
        write!(f, ".")
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}
