//! Tokenizer shared by the program, formula, and control-language parsers.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {location}: expected {expected}, found {found}")]
    Syntax {
        location: Location,
        expected: String,
        found: String,
    },
    #[error("unsupported feature at {location}: {feature}")]
    Unsupported { location: Location, feature: String },
    #[error("sort error at {location}: {message}")]
    Sort { location: Location, message: String },
    #[error("invalid input at {location}: {message}")]
    Validation { location: Location, message: String },
}

impl ParseError {
    pub fn location(&self) -> Location {
        match self {
            ParseError::Syntax { location, .. }
            | ParseError::Unsupported { location, .. }
            | ParseError::Sort { location, .. }
            | ParseError::Validation { location, .. } => *location,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    /// Lowercase identifier, optionally with a `$sort` suffix (`n$i`).
    Identifier {
        name: String,
        suffix: Option<String>,
    },
    /// Capitalized identifier, optionally with a `$sort` suffix (`X$i`, `N$`).
    Variable {
        name: String,
        suffix: Option<String>,
    },
    /// Identifier starting with an underscore (anonymous variables).
    Underscore(String),
    Number(i64),
    /// `#inf`, `#sup`, `#true`, `#false`, ...
    Hash(String),
    String(String),
    Symbol(&'static str),
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Identifier { name, suffix: None } | Token::Variable { name, suffix: None } => {
                write!(f, "`{name}`")
            }
            Token::Identifier { name, suffix: Some(s) } | Token::Variable { name, suffix: Some(s) } => {
                write!(f, "`{name}${s}`")
            }
            Token::Underscore(name) => write!(f, "`{name}`"),
            Token::Number(n) => write!(f, "`{n}`"),
            Token::Hash(name) => write!(f, "`#{name}`"),
            Token::String(s) => write!(f, "string \"{s}\""),
            Token::Symbol(s) => write!(f, "`{s}`"),
            Token::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub location: Location,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// mini-gringo programs: no `->`, `<-`, `<->` tokens.
    Program,
    /// Target-language formulas and control-language documents.
    Formula,
}

// Longest match first.
const PROGRAM_SYMBOLS: &[&str] = &[
    ":-", "..", "!=", "<=", ">=", "==", "**", "(", ")", "{", "}", "[", "]", ",", ".", ":", ";", "=", "<", ">", "+",
    "-", "*", "/", "\\", "|", "&", "^", "~", "?", "@",
];

const FORMULA_SYMBOLS: &[&str] = &[
    "<->", ":-", "..", "!=", "<=", ">=", "->", "<-", "==", "**", "(", ")", "{", "}", "[", "]", ",", ".", ":", ";", "=",
    "<", ">", "+", "-", "*", "/", "\\", "|", "&", "^", "~", "?", "@",
];

pub fn tokenize(text: &str, mode: Mode) -> Result<Vec<Spanned>, ParseError> {
    let symbols = match mode {
        Mode::Program => PROGRAM_SYMBOLS,
        Mode::Formula => FORMULA_SYMBOLS,
    };

    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut column = 1;

    macro_rules! advance {
        ($n:expr) => {
            for _ in 0..$n {
                if chars[i] == '\n' {
                    line += 1;
                    column = 1;
                } else {
                    column += 1;
                }
                i += 1;
            }
        };
    }

    while i < chars.len() {
        let c = chars[i];
        let location = Location { line, column };

        if c.is_whitespace() {
            advance!(1);
            continue;
        }

        if c == '%' {
            if chars.get(i + 1) == Some(&'*') {
                // block comment `%* ... *%`
                let start = location;
                advance!(2);
                loop {
                    if i >= chars.len() {
                        return Err(ParseError::Syntax {
                            location: start,
                            expected: "`*%` closing the block comment".into(),
                            found: "end of input".into(),
                        });
                    }
                    if chars[i] == '*' && chars.get(i + 1) == Some(&'%') {
                        advance!(2);
                        break;
                    }
                    advance!(1);
                }
            } else {
                while i < chars.len() && chars[i] != '\n' {
                    advance!(1);
                }
            }
            continue;
        }

        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance!(1);
            }
            let digits: String = chars[start..i].iter().collect();
            let value = digits.parse::<i64>().map_err(|_| ParseError::Unsupported {
                location,
                feature: format!("integer literal {digits} exceeds the 64-bit range"),
            })?;
            tokens.push(Spanned {
                token: Token::Number(value),
                location,
            });
            continue;
        }

        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                advance!(1);
            }
            let name: String = chars[start..i].iter().collect();

            if c == '_' {
                tokens.push(Spanned {
                    token: Token::Underscore(name),
                    location,
                });
                continue;
            }

            let mut suffix = None;
            if mode == Mode::Formula && i < chars.len() && chars[i] == '$' {
                advance!(1);
                let s = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    advance!(1);
                }
                suffix = Some(chars[s..i].iter().collect::<String>());
            }

            let token = if c.is_ascii_uppercase() {
                Token::Variable { name, suffix }
            } else {
                Token::Identifier { name, suffix }
            };
            tokens.push(Spanned { token, location });
            continue;
        }

        if c == '#' {
            advance!(1);
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                advance!(1);
            }
            let name: String = chars[start..i].iter().collect();
            if name.is_empty() {
                return Err(ParseError::Syntax {
                    location,
                    expected: "a keyword after `#`".into(),
                    found: "`#`".into(),
                });
            }
            tokens.push(Spanned {
                token: Token::Hash(name),
                location,
            });
            continue;
        }

        if c == '"' {
            advance!(1);
            let start = i;
            while i < chars.len() && chars[i] != '"' {
                advance!(1);
            }
            if i >= chars.len() {
                return Err(ParseError::Syntax {
                    location,
                    expected: "closing `\"`".into(),
                    found: "end of input".into(),
                });
            }
            let content: String = chars[start..i].iter().collect();
            advance!(1);
            tokens.push(Spanned {
                token: Token::String(content),
                location,
            });
            continue;
        }

        let rest = &chars[i..];
        let symbol = symbols.iter().find(|s| {
            let s: Vec<char> = s.chars().collect();
            rest.len() >= s.len() && rest[..s.len()] == s[..]
        });
        match symbol {
            Some(s) => {
                advance!(s.chars().count());
                tokens.push(Spanned {
                    token: Token::Symbol(s),
                    location,
                });
            }
            None => {
                return Err(ParseError::Syntax {
                    location,
                    expected: "a token".into(),
                    found: format!("character `{c}`"),
                })
            }
        }
    }

    tokens.push(Spanned {
        token: Token::Eof,
        location: Location { line, column },
    });
    Ok(tokens)
}

/// Cursor over a token vector with backtracking support.
#[derive(Clone, Debug)]
pub struct TokenStream {
    tokens: Vec<Spanned>,
    position: usize,
}

impl TokenStream {
    pub fn new(tokens: Vec<Spanned>) -> Self {
        TokenStream { tokens, position: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.position].token
    }

    pub fn peek_at(&self, offset: usize) -> &Token {
        let index = (self.position + offset).min(self.tokens.len() - 1);
        &self.tokens[index].token
    }

    pub fn location(&self) -> Location {
        self.tokens[self.position].location
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Spanned {
        let token = self.tokens[self.position].clone();
        if self.position < self.tokens.len() - 1 {
            self.position += 1;
        }
        token
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn reset(&mut self, position: usize) {
        self.position = position;
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek(), Token::Eof)
    }

    pub fn is_symbol(&self, symbol: &str) -> bool {
        matches!(self.peek(), Token::Symbol(s) if *s == symbol)
    }

    pub fn is_keyword(&self, keyword: &str) -> bool {
        matches!(self.peek(), Token::Identifier { name, suffix: None } if name == keyword)
    }

    pub fn eat_symbol(&mut self, symbol: &str) -> bool {
        if self.is_symbol(symbol) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn eat_keyword(&mut self, keyword: &str) -> bool {
        if self.is_keyword(keyword) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn expect_symbol(&mut self, symbol: &str) -> Result<(), ParseError> {
        if self.eat_symbol(symbol) {
            Ok(())
        } else {
            Err(self.error(&format!("`{symbol}`")))
        }
    }

    pub fn expect_eof(&mut self) -> Result<(), ParseError> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    /// Syntax error at the current token.
    pub fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            location: self.location(),
            expected: expected.to_string(),
            found: self.peek().to_string(),
        }
    }
}
