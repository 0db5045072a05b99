use super::{Atom, BinaryOperator, Comparison, Formula, Guard, Quantifier, Relation, Sort, Term, Theory, Variable};
use crate::lexer::{tokenize, Location, Mode, ParseError, Token, TokenStream};

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let formula = FormulaParser::formula(&mut stream)?;
    // a single trailing period is tolerated
    stream.eat_symbol(".");
    stream.expect_eof()?;
    Ok(formula)
}

pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let mut formulas = Vec::new();
    while !stream.at_eof() {
        formulas.push(FormulaParser::formula(&mut stream)?);
        stream.expect_symbol(".")?;
    }
    Ok(Theory { formulas })
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Formula)?);
    let term = FormulaParser::term(&mut stream)?;
    stream.expect_eof()?;
    Ok(term)
}

/// Recursive-descent parser for target-language formulas over a shared token
/// stream (also used by the control-language parser).
pub struct FormulaParser;

impl FormulaParser {
    pub fn formula(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        Self::equivalence(stream)
    }

    fn equivalence(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        let lhs = Self::implication(stream)?;
        if stream.eat_symbol("<->") {
            let rhs = Self::equivalence(stream)?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        let lhs = Self::disjunction(stream)?;
        if stream.eat_symbol("->") {
            let rhs = Self::implication(stream)?;
            return Ok(Formula::implies(lhs, rhs));
        }
        if stream.eat_symbol("<-") {
            let rhs = Self::implication(stream)?;
            return Ok(Formula::implies(rhs, lhs));
        }
        Ok(lhs)
    }

    fn disjunction(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        let mut operands = vec![Self::conjunction(stream)?];
        while stream.eat_keyword("or") {
            operands.push(Self::conjunction(stream)?);
        }
        Ok(Formula::disjoin(operands))
    }

    fn conjunction(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        let mut operands = vec![Self::unary(stream)?];
        while stream.eat_keyword("and") {
            operands.push(Self::unary(stream)?);
        }
        Ok(Formula::conjoin(operands))
    }

    fn unary(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        if stream.eat_keyword("not") {
            return Ok(Formula::not(Self::unary(stream)?));
        }
        let quantifier = if stream.is_keyword("forall") {
            Some(Quantifier::Forall)
        } else if stream.is_keyword("exists") {
            Some(Quantifier::Exists)
        } else {
            None
        };
        if let Some(quantifier) = quantifier {
            stream.next();
            let mut variables: Vec<Variable> = Vec::new();
            while let Token::Variable { .. } = stream.peek() {
                let location = stream.location();
                let variable = Self::variable(stream)?;
                if variables.contains(&variable) {
                    return Err(ParseError::Validation {
                        location,
                        message: format!("variable `{}` is bound twice", variable.name),
                    });
                }
                variables.push(variable);
            }
            if variables.is_empty() {
                return Err(stream.error("a variable"));
            }
            let formula = Self::unary(stream)?;
            return Ok(Formula::Quantified {
                quantifier,
                variables,
                formula: Box::new(formula),
            });
        }
        Self::atomic(stream)
    }

    fn atomic(stream: &mut TokenStream) -> Result<Formula, ParseError> {
        if let Token::Hash(name) = stream.peek() {
            match name.as_str() {
                "true" => {
                    stream.next();
                    return Ok(Formula::Truth);
                }
                "false" => {
                    stream.next();
                    return Ok(Formula::Falsity);
                }
                _ => {}
            }
        }

        // a comparison is tried first; parenthesized terms and formulas share
        // their opening token, so the parser backtracks on failure
        let start = stream.position();
        let comparison_error = match Self::comparison(stream) {
            Ok(comparison) => return Ok(Formula::Comparison(comparison)),
            Err(error @ ParseError::Sort { .. }) => return Err(error),
            Err(error) => error,
        };
        stream.reset(start);

        if stream.eat_symbol("(") {
            match Self::formula(stream).and_then(|f| stream.expect_symbol(")").map(|_| f)) {
                Ok(formula) => return Ok(formula),
                Err(error) => return Err(furthest(error, comparison_error)),
            }
        }

        if let Token::Identifier { suffix: None, .. } = stream.peek() {
            if !matches!(stream.peek(), Token::Identifier { name, .. } if is_keyword(name)) {
                let atom = Self::atom(stream)?;
                return Ok(Formula::Atom(atom));
            }
        }

        Err(comparison_error)
    }

    fn atom(stream: &mut TokenStream) -> Result<Atom, ParseError> {
        let location = stream.location();
        let name = match stream.next().token {
            Token::Identifier { name, suffix: None } => name,
            token => {
                return Err(ParseError::Syntax {
                    location,
                    expected: "an atom".into(),
                    found: token.to_string(),
                })
            }
        };
        let mut terms = Vec::new();
        if stream.eat_symbol("(") {
            if !stream.is_symbol(")") {
                loop {
                    terms.push(Self::term(stream)?);
                    if !stream.eat_symbol(",") {
                        break;
                    }
                }
            }
            stream.expect_symbol(")")?;
        }
        Ok(Atom {
            predicate_symbol: name,
            terms,
        })
    }

    fn comparison(stream: &mut TokenStream) -> Result<Comparison, ParseError> {
        let term = Self::term(stream)?;
        let mut guards = Vec::new();
        loop {
            let relation = match stream.peek() {
                Token::Symbol(s) => Relation::from_symbol(s),
                _ => None,
            };
            match relation {
                Some(relation) => {
                    stream.next();
                    let term = Self::term(stream)?;
                    guards.push(Guard { relation, term });
                }
                None => break,
            }
        }
        if guards.is_empty() {
            return Err(stream.error("a comparison operator"));
        }
        Ok(Comparison { term, guards })
    }

    pub fn term(stream: &mut TokenStream) -> Result<Term, ParseError> {
        let mut lhs = Self::multiplicative(stream)?;
        loop {
            let op = if stream.is_symbol("+") {
                BinaryOperator::Add
            } else if stream.is_symbol("-") {
                BinaryOperator::Subtract
            } else {
                return Ok(lhs);
            };
            let location = stream.location();
            stream.next();
            let rhs = Self::multiplicative(stream)?;
            lhs = arithmetic(location, op, lhs, rhs)?;
        }
    }

    fn multiplicative(stream: &mut TokenStream) -> Result<Term, ParseError> {
        let mut lhs = Self::negative(stream)?;
        while stream.is_symbol("*") {
            let location = stream.location();
            stream.next();
            let rhs = Self::negative(stream)?;
            lhs = arithmetic(location, BinaryOperator::Multiply, lhs, rhs)?;
        }
        if stream.is_symbol("/") || stream.is_symbol("\\") || stream.is_symbol("..") {
            return Err(ParseError::Unsupported {
                location: stream.location(),
                feature: "division, modulo, and intervals in formulas".into(),
            });
        }
        Ok(lhs)
    }

    fn negative(stream: &mut TokenStream) -> Result<Term, ParseError> {
        if stream.is_symbol("-") {
            let location = stream.location();
            stream.next();
            if let Token::Number(n) = *stream.peek() {
                stream.next();
                return Ok(Term::Numeral(-n));
            }
            let arg = Self::negative(stream)?;
            if arg.sort() != Sort::Integer {
                return Err(sort_error(location, &arg));
            }
            return Ok(Term::negative(arg));
        }
        Self::primary(stream)
    }

    fn primary(stream: &mut TokenStream) -> Result<Term, ParseError> {
        let location = stream.location();
        match stream.peek().clone() {
            Token::Number(n) => {
                stream.next();
                Ok(Term::Numeral(n))
            }
            Token::Variable { .. } => Ok(Term::Variable(Self::variable(stream)?)),
            Token::Identifier { name, suffix } => {
                if is_keyword(&name) && suffix.is_none() {
                    return Err(stream.error("a term"));
                }
                stream.next();
                if stream.is_symbol("(") {
                    return Err(ParseError::Syntax {
                        location,
                        expected: "a term".into(),
                        found: format!("function application `{name}(`"),
                    });
                }
                match suffix {
                    None => Ok(Term::Symbol(name)),
                    Some(suffix) => match Sort::from_suffix(Some(&suffix)) {
                        Some(Sort::Integer) => Ok(Term::Placeholder(name, Sort::Integer)),
                        Some(Sort::Symbol) => Ok(Term::Placeholder(name, Sort::Symbol)),
                        _ => Err(ParseError::Syntax {
                            location,
                            expected: "a placeholder sort `$i` or `$s`".into(),
                            found: format!("`{name}${suffix}`"),
                        }),
                    },
                }
            }
            Token::Hash(name) if name == "inf" => {
                stream.next();
                Ok(Term::Infimum)
            }
            Token::Hash(name) if name == "sup" => {
                stream.next();
                Ok(Term::Supremum)
            }
            Token::Symbol("(") => {
                stream.next();
                let term = Self::term(stream)?;
                stream.expect_symbol(")")?;
                Ok(term)
            }
            _ => Err(stream.error("a term")),
        }
    }

    pub fn variable(stream: &mut TokenStream) -> Result<Variable, ParseError> {
        let location = stream.location();
        match stream.next().token {
            Token::Variable { name, suffix } => match Sort::from_suffix(suffix.as_deref()) {
                Some(sort) => Ok(Variable { name, sort }),
                None => Err(ParseError::Syntax {
                    location,
                    expected: "a sort suffix (`$g`, `$i`, `$s`, ...)".into(),
                    found: format!("`{name}${}`", suffix.unwrap_or_default()),
                }),
            },
            token => Err(ParseError::Syntax {
                location,
                expected: "a variable".into(),
                found: token.to_string(),
            }),
        }
    }
}

fn is_keyword(name: &str) -> bool {
    matches!(name, "not" | "and" | "or" | "forall" | "exists")
}

fn sort_error(location: Location, term: &Term) -> ParseError {
    ParseError::Sort {
        location,
        message: format!(
            "`{term}` has sort {:?} but an integer is required in arithmetic",
            term.sort()
        ),
    }
}

fn arithmetic(location: Location, op: BinaryOperator, lhs: Term, rhs: Term) -> Result<Term, ParseError> {
    for operand in [&lhs, &rhs] {
        if operand.sort() != Sort::Integer {
            return Err(sort_error(location, operand));
        }
    }
    Ok(Term::binary(op, lhs, rhs))
}

fn furthest(a: ParseError, b: ParseError) -> ParseError {
    let key = |e: &ParseError| {
        let l = e.location();
        (l.line, l.column)
    };
    if key(&b) > key(&a) {
        b
    } else {
        a
    }
}
