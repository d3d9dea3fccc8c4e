//! Expressions over grainy literals, as accepted by `grainy eval`.
//!
//! ```text
//! top     := sum ( ">=" sum )?
//! sum     := product ( "+" product )*
//! product := atom ( "*" atom )*
//! atom    := literal | "supp" "(" sum "," sum ")" | "(" sum ")"
//! ```
//!
//! `*` binds tighter than `+`, both associate to the left, and `>=` may only
//! appear once at the top. `⊕`, `⊗` and `≥` are accepted as aliases.
//! Inside literals the degree sign may be typed as `'` (`1'3'`); `*` is
//! always multiplication here. `(n)` with a positive integer `n` is the flat
//! literal, never a parenthesised expression.

use std::fmt;

use thiserror::Error;

use crate::notation;
use crate::number::GrainyNumber;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ExprError {
    /// 0-based character offset into the expression text.
    pub position: usize,
    pub message: String,
}

impl ExprError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ExprError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(GrainyNumber),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Supp(Box<Expr>, Box<Expr>),
    Geq(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Number(GrainyNumber),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Literal(GrainyNumber),
    Supp,
    Plus,
    Star,
    Geq,
    Comma,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Literal(n) => write!(f, "literal {n}"),
            Tok::Supp => f.write_str("'supp'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Geq => f.write_str("'>='"),
            Tok::Comma => f.write_str("','"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let literal = |start: usize, end: usize| -> Result<Tok, ExprError> {
        let src: String = chars[start..end].iter().collect();
        notation::parse(&src)
            .map(Tok::Literal)
            .map_err(|e| ExprError::new(start + e.position, e.reason))
    };

    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '⊕' => {
                toks.push((start, Tok::Plus));
                i += 1;
            }
            '*' | '⊗' => {
                toks.push((start, Tok::Star));
                i += 1;
            }
            '≥' => {
                toks.push((start, Tok::Geq));
                i += 1;
            }
            '>' if chars.get(i + 1) == Some(&'=') => {
                toks.push((start, Tok::Geq));
                i += 2;
            }
            ',' => {
                toks.push((start, Tok::Comma));
                i += 1;
            }
            ')' => {
                toks.push((start, Tok::RParen));
                i += 1;
            }
            '(' => {
                let digits = chars[i + 1..]
                    .iter()
                    .take_while(|c| c.is_ascii_digit())
                    .count();
                let closes = chars.get(i + 1 + digits) == Some(&')');
                let positive = chars[i + 1..i + 1 + digits].iter().any(|&d| d != '0');
                if digits > 0 && closes && positive {
                    i += digits + 2;
                    toks.push((start, literal(start, i)?));
                } else {
                    toks.push((start, Tok::LParen));
                    i += 1;
                }
            }
            '[' => {
                let mut depth = 0usize;
                while i < chars.len() {
                    match chars[i] {
                        '[' => depth += 1,
                        ']' | ')' => depth -= 1,
                        _ => {}
                    }
                    i += 1;
                    if depth == 0 {
                        break;
                    }
                }
                toks.push((start, literal(start, i)?));
            }
            c if c.is_ascii_digit() || c == '-' => {
                while i < chars.len() {
                    let c = chars[i];
                    if c.is_ascii_digit() || c == '-' || c == '°' || c == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                // trailing length term, only right after a degree sign
                if matches!(chars[i - 1], '°' | '\'') && chars.get(i) == Some(&'(') {
                    let digits = chars[i + 1..]
                        .iter()
                        .take_while(|c| c.is_ascii_digit())
                        .count();
                    if digits > 0 && chars.get(i + 1 + digits) == Some(&')') {
                        i += digits + 2;
                    }
                }
                toks.push((start, literal(start, i)?));
            }
            c if c.is_alphabetic() => {
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word == "supp" {
                    toks.push((start, Tok::Supp));
                } else {
                    return Err(ExprError::new(start, format!("unknown name '{word}'")));
                }
            }
            other => {
                return Err(ExprError::new(
                    start,
                    format!("unexpected character '{other}'"),
                ));
            }
        }
    }
    toks.push((chars.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn position(&self) -> usize {
        self.toks[self.at].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ExprError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(ExprError::new(
                self.position(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn top(&mut self) -> Result<Expr, ExprError> {
        let lhs = self.sum()?;
        let expr = if *self.peek() == Tok::Geq {
            self.next();
            Expr::Geq(Box::new(lhs), Box::new(self.sum()?))
        } else {
            lhs
        };
        match self.peek() {
            Tok::End => Ok(expr),
            Tok::Geq => Err(ExprError::new(
                self.position(),
                "'>=' may appear only once, at the top level",
            )),
            other => Err(ExprError::new(
                self.position(),
                format!("expected an operator or end of input, found {other}"),
            )),
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        while *self.peek() == Tok::Plus {
            self.next();
            lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Star {
            self.next();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let position = self.position();
        match self.next() {
            Tok::Literal(n) => Ok(Expr::Literal(n)),
            Tok::LParen => {
                let inner = self.sum()?;
                if *self.peek() == Tok::Geq {
                    return Err(ExprError::new(
                        self.position(),
                        "'>=' may appear only once, at the top level",
                    ));
                }
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Supp => {
                self.expect(Tok::LParen)?;
                let x = self.sum()?;
                self.expect(Tok::Comma)?;
                let k = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Supp(Box::new(x), Box::new(k)))
            }
            other => Err(ExprError::new(
                position,
                format!("expected a grainy literal, 'supp' or '(', found {other}"),
            )),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    Parser { toks, at: 0 }.top()
}

impl Expr {
    pub fn eval(&self) -> Value {
        match self {
            Expr::Geq(a, b) => Value::Bool(a.number().geq(&b.number())),
            other => Value::Number(other.number()),
        }
    }

    fn number(&self) -> GrainyNumber {
        match self {
            Expr::Literal(n) => n.clone(),
            Expr::Add(a, b) => a.number().add(&b.number()),
            Expr::Mul(a, b) => a.number().mul(&b.number()),
            Expr::Supp(x, k) => x.number().supplement(&k.number()),
            Expr::Geq(..) => unreachable!("'>=' is only parsed at the top level"),
        }
    }
}

pub fn eval(text: &str) -> Result<Value, ExprError> {
    parse(text).map(|e| e.eval())
}
