use super::{
    Atom, BinaryOperator, BodyLiteral, Comparison, Head, Literal, Program, Relation, Rule, Sign, Term, UnaryOperator,
};
use crate::lexer::{tokenize, Mode, ParseError, Token, TokenStream};

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Program)?);
    let mut rules = Vec::new();
    while !stream.at_eof() {
        rules.push(rule(&mut stream)?);
    }
    Ok(Program { rules })
}

pub fn parse_rule(text: &str) -> Result<Rule, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Program)?);
    let rule = rule(&mut stream)?;
    stream.expect_eof()?;
    Ok(rule)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut stream = TokenStream::new(tokenize(text, Mode::Program)?);
    let term = term(&mut stream)?;
    stream.expect_eof()?;
    Ok(term)
}

fn unsupported(stream: &TokenStream, feature: &str) -> ParseError {
    ParseError::Unsupported {
        location: stream.location(),
        feature: feature.to_string(),
    }
}

fn rule(stream: &mut TokenStream) -> Result<Rule, ParseError> {
    if let Token::Hash(name) = stream.peek() {
        return Err(unsupported(stream, &format!("directive `#{name}`")));
    }

    let head = if stream.is_symbol(":-") {
        Head::Falsity
    } else if stream.eat_symbol("{") {
        let atom = atom(stream)?;
        if stream.is_symbol(";") || stream.is_symbol(":") {
            return Err(unsupported(stream, "choice rules with more than one element"));
        }
        stream.expect_symbol("}")?;
        if matches!(stream.peek(), Token::Number(_)) {
            return Err(unsupported(stream, "cardinality bounds on choice rules"));
        }
        Head::Choice(atom)
    } else {
        let atom = atom(stream)?;
        if stream.is_symbol(";") || stream.is_symbol("|") {
            return Err(unsupported(stream, "disjunctive heads"));
        }
        Head::Basic(atom)
    };

    let mut body = Vec::new();
    if stream.eat_symbol(":-") {
        if !stream.is_symbol(".") {
            loop {
                body.push(body_literal(stream)?);
                if stream.eat_symbol(",") {
                    continue;
                }
                if stream.is_symbol(";") {
                    return Err(unsupported(stream, "`;` in rule bodies"));
                }
                break;
            }
        }
    } else if head == Head::Falsity {
        return Err(stream.error("`:-`"));
    }
    stream.expect_symbol(".")?;

    Ok(Rule { head, body })
}

fn body_literal(stream: &mut TokenStream) -> Result<BodyLiteral, ParseError> {
    if stream.is_keyword("not") {
        stream.next();
        let sign = if stream.eat_keyword("not") {
            Sign::DoubleNegation
        } else {
            Sign::Negation
        };
        if stream.is_keyword("not") {
            return Err(unsupported(stream, "more than two negation symbols"));
        }
        let atom = atom(stream)?;
        return Ok(BodyLiteral::Literal(Literal { sign, atom }));
    }

    if stream.is_symbol("-")
        && matches!(stream.peek_at(1), Token::Identifier { .. })
        && matches!(stream.peek_at(2), Token::Symbol("("))
    {
        return Err(unsupported(stream, "classical negation"));
    }

    if let Token::Identifier { .. } = stream.peek() {
        let is_atom = match stream.peek_at(1) {
            Token::Symbol("(") => true,
            Token::Symbol(s) => Relation::from_symbol(s).is_none() && !is_arithmetic_symbol(s),
            _ => true,
        };
        if is_atom {
            let atom = atom(stream)?;
            if let Token::Symbol(s) = stream.peek() {
                if Relation::from_symbol(s).is_some() {
                    return Err(unsupported(stream, "function symbols in terms"));
                }
            }
            return Ok(BodyLiteral::Literal(Literal {
                sign: Sign::NoSign,
                atom,
            }));
        }
    }

    let lhs = term(stream)?;
    let relation = match stream.peek() {
        Token::Symbol(s) => Relation::from_symbol(s),
        _ => None,
    };
    let relation = match relation {
        Some(relation) => relation,
        None => return Err(stream.error("a comparison operator")),
    };
    stream.next();
    let rhs = term(stream)?;
    Ok(BodyLiteral::Comparison(Comparison { relation, lhs, rhs }))
}

fn is_arithmetic_symbol(s: &str) -> bool {
    matches!(s, "+" | "-" | "*" | "/" | "\\" | ".." | "**" | "&" | "^" | "?" | "~")
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
    if name == "not" {
        return Err(ParseError::Syntax {
            location,
            expected: "an atom".into(),
            found: "`not`".into(),
        });
    }

    let mut terms = Vec::new();
    if stream.eat_symbol("(") {
        if !stream.is_symbol(")") {
            loop {
                terms.push(term(stream)?);
                if stream.eat_symbol(",") {
                    continue;
                }
                if stream.is_symbol(";") {
                    return Err(unsupported(stream, "pools"));
                }
                break;
            }
        }
        stream.expect_symbol(")")?;
    }
    Ok(Atom {
        predicate_symbol: name,
        terms,
    })
}

pub(super) fn term(stream: &mut TokenStream) -> Result<Term, ParseError> {
    let lhs = additive(stream)?;
    if stream.eat_symbol("..") {
        let rhs = additive(stream)?;
        if stream.is_symbol("..") {
            return Err(stream.error("end of interval"));
        }
        return Ok(Term::binary(BinaryOperator::Interval, lhs, rhs));
    }
    Ok(lhs)
}

fn additive(stream: &mut TokenStream) -> Result<Term, ParseError> {
    let mut lhs = multiplicative(stream)?;
    loop {
        let op = if stream.is_symbol("+") {
            BinaryOperator::Add
        } else if stream.is_symbol("-") {
            BinaryOperator::Subtract
        } else {
            return Ok(lhs);
        };
        stream.next();
        let rhs = multiplicative(stream)?;
        lhs = Term::binary(op, lhs, rhs);
    }
}

fn multiplicative(stream: &mut TokenStream) -> Result<Term, ParseError> {
    let mut lhs = unary(stream)?;
    loop {
        let op = if stream.is_symbol("*") {
            BinaryOperator::Multiply
        } else if stream.is_symbol("/") {
            BinaryOperator::Divide
        } else if stream.is_symbol("\\") {
            BinaryOperator::Modulo
        } else if stream.is_symbol("**") {
            return Err(unsupported(stream, "exponentiation"));
        } else {
            return Ok(lhs);
        };
        stream.next();
        let rhs = unary(stream)?;
        lhs = Term::binary(op, lhs, rhs);
    }
}

fn unary(stream: &mut TokenStream) -> Result<Term, ParseError> {
    if stream.eat_symbol("-") {
        if let Token::Number(n) = *stream.peek() {
            stream.next();
            return Ok(Term::Numeral(-n));
        }
        let arg = unary(stream)?;
        return Ok(Term::unary(UnaryOperator::Negative, arg));
    }
    primary(stream)
}

fn primary(stream: &mut TokenStream) -> Result<Term, ParseError> {
    let location = stream.location();
    let spanned = stream.next();
    match spanned.token {
        Token::Number(n) => Ok(Term::Numeral(n)),
        Token::Variable { name, suffix: None } => Ok(Term::Variable(name)),
        Token::Underscore(_) => Err(ParseError::Unsupported {
            location,
            feature: "anonymous variables".into(),
        }),
        Token::Identifier { name, suffix: None } => {
            if stream.is_symbol("(") {
                return Err(ParseError::Unsupported {
                    location,
                    feature: format!("function symbol `{name}`"),
                });
            }
            Ok(Term::Symbol(name))
        }
        Token::Hash(name) if name == "inf" => Ok(Term::Infimum),
        Token::Hash(name) if name == "sup" => Ok(Term::Supremum),
        Token::String(_) => Err(ParseError::Unsupported {
            location,
            feature: "string constants".into(),
        }),
        Token::Symbol("(") => {
            if stream.is_symbol(")") {
                return Err(ParseError::Unsupported {
                    location,
                    feature: "tuples".into(),
                });
            }
            let inner = term(stream)?;
            if stream.is_symbol(",") {
                return Err(ParseError::Unsupported {
                    location,
                    feature: "tuples".into(),
                });
            }
            if stream.is_symbol(";") {
                return Err(ParseError::Unsupported {
                    location,
                    feature: "pools".into(),
                });
            }
            stream.expect_symbol(")")?;
            Ok(inner)
        }
        Token::Symbol("|") => {
            let inner = additive(stream)?;
            stream.expect_symbol("|")?;
            Ok(Term::unary(UnaryOperator::AbsoluteValue, inner))
        }
        token => Err(ParseError::Syntax {
            location,
            expected: "a term".into(),
            found: token.to_string(),
        }),
    }
}
