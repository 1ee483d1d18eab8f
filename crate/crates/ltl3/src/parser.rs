//! Recursive-descent parser for the concrete formula syntax.
//!
//! Grammar, loosest to tightest:
//!
//! ```text
//! formula := or  ('->' formula)?          right-associative
//! or      := and ('|' or)?                right-associative
//! and     := until ('&' and)?             right-associative
//! until   := unary (('U' | 'R') until)?   right-associative
//! unary   := ('!' | 'X' | 'F' | 'G') unary | primary
//! primary := 'true' | 'false' | ident | '(' formula ')'
//! ```
//!
//! `false`, `->`, `F`, `G` and `R` are desugared while parsing:
//! `false = !true`, `l -> r = !l | r`, `F f = true U f`,
//! `G f = !(true U !f)`, `l R r = !(!l U !r)`.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Formula, PropName};

/// Parse error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

// Guard against stack exhaustion on adversarial input such as 64 KiB of '('.
const MAX_DEPTH: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Next,
    Eventually,
    Always,
    Until,
    Release,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::Ident(name) => return write!(f, "identifier {name:?}"),
            Token::True => "'true'",
            Token::False => "'false'",
            Token::Not => "'!'",
            Token::And => "'&'",
            Token::Or => "'|'",
            Token::Implies => "'->'",
            Token::Next => "'X'",
            Token::Eventually => "'F'",
            Token::Always => "'G'",
            Token::Until => "'U'",
            Token::Release => "'R'",
            Token::LParen => "'('",
            Token::RParen => "')'",
            Token::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Token, Pos)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let pos = Pos {
                line: self.line,
                col: self.col,
            };
            let Some(c) = self.bump() else {
                out.push((Token::Eof, pos));
                return Ok(out);
            };
            let token = match c {
                '(' => Token::LParen,
                ')' => Token::RParen,
                '!' => Token::Not,
                '&' => Token::And,
                '|' => Token::Or,
                '-' => {
                    if self.chars.peek() == Some(&'>') {
                        self.bump();
                        Token::Implies
                    } else {
                        return Err(err(pos, "expected '>' after '-'".into()));
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::from(c);
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        name.push(self.bump().unwrap());
                    }
                    match name.as_str() {
                        "true" => Token::True,
                        "false" => Token::False,
                        "X" => Token::Next,
                        "F" => Token::Eventually,
                        "G" => Token::Always,
                        "U" => Token::Until,
                        "R" => Token::Release,
                        _ => Token::Ident(name),
                    }
                }
                other => return Err(err(pos, format!("unexpected character {other:?}"))),
            };
            out.push((token, pos));
        }
    }
}

fn err(pos: Pos, message: String) -> ParseError {
    ParseError {
        line: pos.line,
        col: pos.col,
        message,
    }
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].1
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.at].0.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn guard(&self, depth: usize) -> Result<(), ParseError> {
        if depth > MAX_DEPTH {
            Err(err(self.pos(), "formula nests too deeply".into()))
        } else {
            Ok(())
        }
    }

    fn formula(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        let lhs = self.or(depth + 1)?;
        if *self.peek() == Token::Implies {
            self.advance();
            let rhs = self.formula(depth + 1)?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        let lhs = self.and(depth + 1)?;
        if *self.peek() == Token::Or {
            self.advance();
            let rhs = self.or(depth + 1)?;
            Ok(Formula::or(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn and(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        let lhs = self.until(depth + 1)?;
        if *self.peek() == Token::And {
            self.advance();
            let rhs = self.and(depth + 1)?;
            Ok(Formula::and(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn until(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        let lhs = self.unary(depth + 1)?;
        match self.peek() {
            Token::Until => {
                self.advance();
                let rhs = self.until(depth + 1)?;
                Ok(Formula::until(lhs, rhs))
            }
            Token::Release => {
                self.advance();
                let rhs = self.until(depth + 1)?;
                Ok(Formula::release(lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        match self.peek() {
            Token::Not => {
                self.advance();
                Ok(Formula::not(self.unary(depth + 1)?))
            }
            Token::Next => {
                self.advance();
                Ok(Formula::next(self.unary(depth + 1)?))
            }
            Token::Eventually => {
                self.advance();
                Ok(Formula::eventually(self.unary(depth + 1)?))
            }
            Token::Always => {
                self.advance();
                Ok(Formula::always(self.unary(depth + 1)?))
            }
            _ => self.primary(depth + 1),
        }
    }

    fn primary(&mut self, depth: usize) -> Result<Formula, ParseError> {
        self.guard(depth)?;
        let pos = self.pos();
        match self.advance() {
            Token::True => Ok(Formula::Top),
            Token::False => Ok(Formula::bottom()),
            Token::Ident(name) => {
                // The lexer only produces idents that pass validation.
                let name = PropName::new(name)
                    .map_err(|e| err(pos, e.to_string()))?;
                Ok(Formula::atom(name))
            }
            Token::LParen => {
                let inner = self.formula(depth + 1)?;
                let pos = self.pos();
                match self.advance() {
                    Token::RParen => Ok(inner),
                    other => Err(err(pos, format!("expected ')', found {other}"))),
                }
            }
            other => Err(err(pos, format!("expected a formula, found {other}"))),
        }
    }
}

/// Parse `text` into a desugared [`Formula`].
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, at: 0 };
    let formula = parser.formula(0)?;
    let pos = parser.pos();
    match parser.advance() {
        Token::Eof => Ok(formula),
        other => Err(err(pos, format!("expected end of input, found {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::render;

    fn p(name: &str) -> PropName {
        PropName::new(name).unwrap()
    }

    #[test]
    fn desugars_eventually() {
        assert_eq!(
            parse("F a").unwrap(),
            Formula::until(Formula::Top, Formula::atom(p("a")))
        );
    }

    #[test]
    fn desugars_always_and_implication() {
        // G (r -> F a) expands to !(true U !(!r | true U a)).
        let expected = Formula::not(Formula::until(
            Formula::Top,
            Formula::not(Formula::or(
                Formula::not(Formula::atom(p("r"))),
                Formula::until(Formula::Top, Formula::atom(p("a"))),
            )),
        ));
        assert_eq!(parse("G (r -> F a)").unwrap(), expected);
    }

    #[test]
    fn desugars_release_and_false() {
        let expected = Formula::not(Formula::until(
            Formula::not(Formula::atom(p("a"))),
            Formula::not(Formula::atom(p("b"))),
        ));
        assert_eq!(parse("a R b").unwrap(), expected);
        assert_eq!(parse("false").unwrap(), Formula::bottom());
    }

    #[test]
    fn until_is_right_associative() {
        assert_eq!(
            parse("a U b U c").unwrap(),
            Formula::until(
                Formula::atom(p("a")),
                Formula::until(Formula::atom(p("b")), Formula::atom(p("c"))),
            )
        );
    }

    #[test]
    fn precedence_layers() {
        // U binds tighter than &, & tighter than |, | tighter than ->.
        assert_eq!(
            parse("a U b & c | d -> e").unwrap(),
            parse("(((a U b) & c) | d) -> e").unwrap()
        );
        // Prefix operators bind tightest.
        assert_eq!(parse("!a U b").unwrap(), parse("(!a) U b").unwrap());
        assert_eq!(parse("X a U b").unwrap(), parse("(X a) U b").unwrap());
    }

    #[test]
    fn reports_positions() {
        let e = parse("U a").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        let e = parse("a &\n& b").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
        let e = parse("a @ b").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
    }

    #[test]
    fn rejects_trailing_input() {
        assert!(parse("a b").is_err());
        assert!(parse("(a").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let text = "(".repeat(8192) + "a" + &")".repeat(8192);
        let e = parse(&text).unwrap_err();
        assert!(e.message.contains("deeply"));
    }

    #[test]
    fn keywords_do_not_merge_with_idents() {
        // "Xa" is an atom, "X a" is an operator application.
        assert_eq!(parse("Xa").unwrap(), Formula::atom(p("Xa")));
        assert_eq!(
            parse("X a").unwrap(),
            Formula::next(Formula::atom(p("a")))
        );
    }

    #[test]
    fn round_trip_examples() {
        for text in [
            "a & (b | c)",
            "!(a U b)",
            "!!a",
            "true U a",
            "(a U b) U c",
            "X (a & b)",
            "!X a",
            "a & b & c",
        ] {
            let f = parse(text).unwrap();
            assert_eq!(render(&f), text);
            assert_eq!(parse(&render(&f)).unwrap(), f);
        }
    }
}
