//! Parsing and printing of the three written forms of a grainy number.
//!
//! | form      | example          |
//! |-----------|------------------|
//! | compact   | `1°3°(5)`        |
//! | bitstring | `1-1--`          |
//! | tuple     | `[1,[-,[1,0]]]`  |
//!
//! Compact grammar: `0` alone, or a strictly increasing run of `k°` terms
//! optionally followed by one `(n)` term with `n` greater than the last
//! position. `(n)` alone is the flat number of length `n`. On input the
//! degree sign may also be written `*` or `'`; output always uses `°`.
//! Tuples may close with `]` or `)`. Whitespace between tokens is ignored
//! everywhere.

use std::fmt;

use thiserror::Error;

use crate::number::{Bit, GrainyNumber};

pub const DEGREE: char = '°';

/// Which written form a piece of text uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotationForm {
    Canonical,
    Bitstring,
    Tuple,
}

impl fmt::Display for NotationForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotationForm::Canonical => "compact",
            NotationForm::Bitstring => "bitstring",
            NotationForm::Tuple => "tuple",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {}: {reason}", .position + 1)]
pub struct NotationError {
    /// 0-based character offset into the input.
    pub position: usize,
    pub reason: String,
}

impl NotationError {
    fn new(position: usize, reason: impl Into<String>) -> Self {
        NotationError {
            position,
            reason: reason.into(),
        }
    }
}

fn is_degree(c: char) -> bool {
    matches!(c, DEGREE | '*' | '\'')
}

/// Non-whitespace characters with their offsets in the original text.
struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor {
            chars,
            at: 0,
            end: text.chars().count(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.at += 1;
        }
        c
    }

    fn is_done(&self) -> bool {
        self.at >= self.chars.len()
    }

    fn unexpected(&self, expected: &str) -> NotationError {
        match self.peek() {
            Some(c) => {
                NotationError::new(self.offset(), format!("expected {expected}, found '{c}'"))
            }
            None => NotationError::new(
                self.offset(),
                format!("expected {expected}, found end of input"),
            ),
        }
    }

    fn integer(&mut self) -> Result<usize, NotationError> {
        let start = self.offset();
        let mut value: usize = 0;
        let mut digits = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as usize - '0' as usize))
                .ok_or_else(|| NotationError::new(start, "integer too large"))?;
            digits += 1;
            self.bump();
        }
        if digits == 0 {
            return Err(self.unexpected("a number"));
        }
        Ok(value)
    }
}

/// Guess the written form of `text` from its first non-blank character.
///
/// Text made only of `1` and `-` is a bitstring; text starting with `[` is
/// a tuple; anything else is handed to the compact parser.
pub fn detect_form(text: &str) -> NotationForm {
    let mut significant = text.chars().filter(|c| !c.is_whitespace()).peekable();
    match significant.peek().copied() {
        Some('[') => NotationForm::Tuple,
        Some(_) if significant.all(|c| c == '1' || c == '-') => NotationForm::Bitstring,
        _ => NotationForm::Canonical,
    }
}

/// Parse any of the three written forms.
pub fn parse(text: &str) -> Result<GrainyNumber, NotationError> {
    if text.trim().is_empty() {
        return Err(NotationError::new(0, "empty input"));
    }
    match detect_form(text) {
        NotationForm::Tuple => parse_tuple(text),
        NotationForm::Bitstring => parse_bitstring(text),
        NotationForm::Canonical => parse_canonical(text),
    }
}

/// Parse the compact form (`0`, `1°3°`, `2°(5)`, `(3)`).
pub fn parse_canonical(text: &str) -> Result<GrainyNumber, NotationError> {
    let mut cur = Cursor::new(text);
    if cur.is_done() {
        return Err(NotationError::new(0, "empty input"));
    }
    if cur.peek() == Some('0') && cur.chars.len() == 1 {
        return Ok(GrainyNumber::zero());
    }

    let mut ones: Vec<usize> = Vec::new();
    let mut length = None;
    while !cur.is_done() {
        let start = cur.offset();
        if cur.peek() == Some('(') {
            cur.bump();
            let n = cur.integer()?;
            if cur.peek() != Some(')') {
                return Err(cur.unexpected("')'"));
            }
            cur.bump();
            match ones.last() {
                Some(&last) if n <= last => {
                    return Err(NotationError::new(
                        start,
                        format!("length ({n}) must exceed the last position {last}"),
                    ));
                }
                None if n == 0 => {
                    return Err(NotationError::new(start, "flat length must be positive"));
                }
                _ => {}
            }
            if !cur.is_done() {
                return Err(NotationError::new(
                    cur.offset(),
                    "nothing may follow the length term",
                ));
            }
            length = Some(n);
        } else {
            let position = cur.integer()?;
            match cur.peek() {
                Some(c) if is_degree(c) => {
                    cur.bump();
                }
                _ => return Err(cur.unexpected("'°' after a position")),
            }
            if position == 0 {
                return Err(NotationError::new(start, "positions start at 1"));
            }
            if let Some(&last) = ones.last() {
                if position <= last {
                    return Err(NotationError::new(
                        start,
                        format!("positions must increase ({position}° after {last}°)"),
                    ));
                }
            }
            ones.push(position);
        }
    }

    let length = length.or(ones.last().copied()).unwrap_or(0);
    // Positions were checked against `length` above.
    Ok(GrainyNumber::from_positions(ones, length).expect("positions within length"))
}

/// Parse a bitstring such as `1-1`. The empty string is `0`.
pub fn parse_bitstring(text: &str) -> Result<GrainyNumber, NotationError> {
    Cursor::new(text)
        .chars
        .iter()
        .map(|&(i, c)| match c {
            '1' => Ok(Bit::One),
            '-' => Ok(Bit::Dash),
            other => Err(NotationError::new(
                i,
                format!("illegal character '{other}' in bitstring"),
            )),
        })
        .collect()
}

/// Parse the nested tuple form `[b, rest]` terminated by `0`.
pub fn parse_tuple(text: &str) -> Result<GrainyNumber, NotationError> {
    let mut cur = Cursor::new(text);
    if cur.is_done() {
        return Err(NotationError::new(0, "empty input"));
    }
    let mut bits = Vec::new();
    let mut depth = 0;
    loop {
        match cur.peek() {
            Some('[') => {
                cur.bump();
                let bit = match cur.peek() {
                    Some('1') => Bit::One,
                    Some('-') => Bit::Dash,
                    _ => return Err(cur.unexpected("'1' or '-'")),
                };
                cur.bump();
                if cur.peek() != Some(',') {
                    return Err(cur.unexpected("','"));
                }
                cur.bump();
                bits.push(bit);
                depth += 1;
            }
            Some('0') => {
                cur.bump();
                break;
            }
            _ => return Err(cur.unexpected("'[' or '0'")),
        }
    }
    for _ in 0..depth {
        match cur.peek() {
            Some(']' | ')') => {
                cur.bump();
            }
            _ => return Err(cur.unexpected("']'")),
        }
    }
    if !cur.is_done() {
        return Err(NotationError::new(
            cur.offset(),
            "trailing input after tuple",
        ));
    }
    Ok(GrainyNumber::from_bits(bits))
}

/// Canonical compact rendering: `0`, `(n)`, `1°3°`, `1°3°(5)`.
pub fn render(x: &GrainyNumber) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut last = 0;
    for position in x.ones() {
        out.push_str(&position.to_string());
        out.push(DEGREE);
        last = position;
    }
    if x.len() > last {
        out.push_str(&format!("({})", x.len()));
    }
    out
}

/// Positional transliteration; `0` renders as the empty string.
pub fn render_bitstring(x: &GrainyNumber) -> String {
    x.bits().iter().map(|b| b.as_char()).collect()
}

/// Nested tuple form, e.g. `[1,[-,[1,0]]]`.
pub fn render_tuple(x: &GrainyNumber) -> String {
    let mut out = String::new();
    for b in x.bits() {
        out.push('[');
        out.push(b.as_char());
        out.push(',');
    }
    out.push('0');
    out.extend(std::iter::repeat_n(']', x.len()));
    out
}

pub fn render_as(x: &GrainyNumber, form: NotationForm) -> String {
    match form {
        NotationForm::Canonical => render(x),
        NotationForm::Bitstring => render_bitstring(x),
        NotationForm::Tuple => render_tuple(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> GrainyNumber {
        parse_bitstring(s).unwrap()
    }

    #[test]
    fn compact_examples() {
        assert_eq!(parse("1°3°").unwrap(), bits("1-1"));
        assert_eq!(parse("1°(3)").unwrap(), bits("1--"));
        assert_eq!(parse("5°").unwrap(), bits("----1"));
        assert_eq!(parse("(3)").unwrap(), bits("---"));
        assert_eq!(parse("0").unwrap(), GrainyNumber::zero());
    }

    #[test]
    fn ascii_degree_aliases() {
        assert_eq!(parse("1*3*").unwrap(), bits("1-1"));
        assert_eq!(parse("1'3'(4)").unwrap(), bits("1-1-"));
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse(" 1° 3° (4) ").unwrap(), bits("1-1-"));
        assert_eq!(parse("[1, [-, [1, 0]]]").unwrap(), bits("1-1"));
        assert_eq!(parse("1 - 1").unwrap(), bits("1-1"));
    }

    #[test]
    fn non_increasing_positions_rejected() {
        let err = parse("3°1°").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.reason.contains("increase"), "{err}");
        assert!(parse("2°2°").is_err());
    }

    #[test]
    fn length_must_exceed_last_position() {
        let err = parse("1°3°(3)").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(parse("1°3°(2)").is_err());
        assert!(parse("(0)").is_err());
    }

    #[test]
    fn grammar_errors() {
        assert_eq!(parse("").unwrap_err().reason, "empty input");
        assert_eq!(parse("   ").unwrap_err().reason, "empty input");
        assert!(parse("3").is_err());
        assert!(parse("0°").is_err());
        assert!(parse("1°x").is_err());
        assert!(parse("(3)1°").is_err());
        assert!(parse("(3").is_err());
        assert!(parse("00").is_err());
    }

    #[test]
    fn tuple_forms() {
        assert_eq!(parse("[1,[-,[1,0]]]").unwrap(), bits("1-1"));
        // the closers used in the printed table
        assert_eq!(parse("[1, [-, [1, 0]])").unwrap(), bits("1-1"));
        assert_eq!(parse("[-, 0)").unwrap(), bits("-"));
        assert!(parse("[1,[-,0]").is_err());
        assert!(parse("[1,[-,0]]]").is_err());
        assert!(parse("[2,0]").is_err());
        assert!(parse("[1 0]").is_err());
        assert!(parse_tuple("0").unwrap().is_zero());
    }

    #[test]
    fn bitstring_forms() {
        assert_eq!(parse("2°").unwrap(), parse_bitstring("-1").unwrap());
        assert_eq!(parse_bitstring("").unwrap(), GrainyNumber::zero());
        assert_eq!(
            parse_bitstring("1-1").unwrap(),
            GrainyNumber::from_positions([1, 3], 3).unwrap()
        );
        let err = parse_bitstring("1-x").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(render_bitstring(&GrainyNumber::zero()), "");
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&bits("1-11")), "1°3°4°");
        assert_eq!(render(&bits("1----")), "1°(5)");
        assert_eq!(render(&bits("111")), "1°2°3°");
        assert_eq!(render(&bits("---")), "(3)");
        assert_eq!(render(&GrainyNumber::zero()), "0");
        assert_eq!(render_tuple(&bits("1-1")), "[1,[-,[1,0]]]");
        assert_eq!(render_tuple(&GrainyNumber::zero()), "0");
    }

    #[test]
    fn detect() {
        assert_eq!(detect_form("1-1"), NotationForm::Bitstring);
        assert_eq!(detect_form("1"), NotationForm::Bitstring);
        assert_eq!(detect_form(" [1,0]"), NotationForm::Tuple);
        assert_eq!(detect_form("1°"), NotationForm::Canonical);
        assert_eq!(detect_form("0"), NotationForm::Canonical);
    }

    #[test]
    fn error_display_is_one_based() {
        let err = parse("3°1°").unwrap_err();
        assert_eq!(
            err.to_string(),
            "column 3: positions must increase (1° after 3°)"
        );
    }
}
