//! Text grammar for Laurent polynomials and braid words.
//!
//! Polynomials are sums of signed monomials: an optional integer
//! coefficient followed by variable powers, e.g. `t^2 - 1 + t^-2`,
//! `-3*t1*t2^2 + t1^-1`, `2t`. Whitespace is ignored. A polynomial uses
//! either the single variable `t` or the pair `t1`, `t2`, never both.
//!
//! Braid words are whitespace- or `*`-separated letters `s<i>` with an
//! optional integer exponent: `s1^-2 s2 s1^3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly1, LaurentPoly2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ExpectedInteger,
    NonIntegerExponent,
    MixedVariables,
    WrongVariables { expected: &'static str },
    ExponentOverflow,
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => format!("unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => "unexpected end of input".to_string(),
            ParseErrorKind::ExpectedInteger => "expected an integer".to_string(),
            ParseErrorKind::NonIntegerExponent => "exponents must be integers".to_string(),
            ParseErrorKind::MixedVariables => "cannot mix `t` with `t1`/`t2`".to_string(),
            ParseErrorKind::WrongVariables { expected } => format!("expected variables {expected}"),
            ParseErrorKind::ExponentOverflow => "exponent out of range".to_string(),
            ParseErrorKind::Empty => "empty input".to_string(),
        };
        write!(f, "syntax error at position {}: {what}", self.position)
    }
}

/// Result of [`parse_poly`]: which ring the text lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPoly {
    One(LaurentPoly1),
    Two(LaurentPoly2),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Vars {
    None,
    Single,
    Pair,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn unexpected(&mut self) -> ParseError {
        match self.peek() {
            Some(_) => {
                let c = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                self.err(ParseErrorKind::UnexpectedChar(c))
            }
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    /// Unsigned digit run; whitespace allowed before, not inside.
    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0"))
    }

    fn signed_i64(&mut self) -> Result<i64, ParseError> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let start = self.pos;
        let digits = self.digits().ok_or_else(|| self.err(ParseErrorKind::ExpectedInteger))?;
        let value: i64 = digits.parse().map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::ExponentOverflow,
        })?;
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(self.err(ParseErrorKind::NonIntegerExponent));
        }
        if paren && !self.eat(b')') {
            return Err(self.unexpected());
        }
        Ok(if neg { -value } else { value })
    }
}

struct Term {
    coeff: BigInt,
    e: i64,
    e1: i64,
    e2: i64,
}

fn parse_terms(text: &str) -> Result<(Vec<Term>, Vars), ParseError> {
    let mut cur = Cursor::new(text);
    let mut vars = Vars::None;
    let mut terms = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err(ParseErrorKind::Empty));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.unexpected());
        };
        first = false;

        let mut coeff = BigInt::one();
        let mut saw_anything = false;
        if let Some(d) = cur.digits() {
            coeff = d.parse().map_err(|_| cur.err(ParseErrorKind::ExpectedInteger))?;
            saw_anything = true;
            if cur.src.get(cur.pos) == Some(&b'.') {
                return Err(cur.unexpected());
            }
            cur.eat(b'*');
        }
        let (mut e, mut e1, mut e2) = (0i64, 0i64, 0i64);
        while cur.peek() == Some(b't') {
            cur.pos += 1;
            let suffix = cur.src.get(cur.pos).copied();
            if matches!(suffix, Some(b'1') | Some(b'2')) {
                cur.pos += 1;
            }
            let kind = if suffix.is_some_and(|b| b == b'1' || b == b'2') {
                Vars::Pair
            } else {
                Vars::Single
            };
            match (vars, kind) {
                (Vars::None, k) => vars = k,
                (a, b) if a != b => return Err(cur.err(ParseErrorKind::MixedVariables)),
                _ => {}
            }
            let power = if cur.eat(b'^') { cur.signed_i64()? } else { 1 };
            let slot = match suffix {
                Some(b'1') => &mut e1,
                Some(b'2') => &mut e2,
                _ => &mut e,
            };
            *slot = slot
                .checked_add(power)
                .ok_or_else(|| cur.err(ParseErrorKind::ExponentOverflow))?;
            saw_anything = true;
            if !cur.eat(b'*') {
                break;
            }
            if cur.peek() != Some(b't') {
                return Err(cur.unexpected());
            }
        }
        if !saw_anything {
            return Err(cur.unexpected());
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(Term { coeff, e, e1, e2 });
        match cur.peek() {
            None | Some(b'+') | Some(b'-') => {}
            Some(_) => return Err(cur.unexpected()),
        }
    }
    Ok((terms, vars))
}

/// Parse a polynomial, detecting whether it is in `t` or in `t1, t2`.
/// Constants parse as one-variable polynomials.
pub fn parse_poly(text: &str) -> Result<ParsedPoly, ParseError> {
    let (terms, vars) = parse_terms(text)?;
    Ok(match vars {
        Vars::Pair => ParsedPoly::Two(LaurentPoly2::from_terms(
            terms.into_iter().map(|t| ((t.e1, t.e2), t.coeff)),
        )),
        _ => ParsedPoly::One(LaurentPoly1::from_terms(terms.into_iter().map(|t| (t.e, t.coeff)))),
    })
}

pub fn parse_poly1(text: &str) -> Result<LaurentPoly1, ParseError> {
    let (terms, vars) = parse_terms(text)?;
    if vars == Vars::Pair {
        return Err(ParseError {
            position: 0,
            kind: ParseErrorKind::WrongVariables { expected: "`t`" },
        });
    }
    Ok(LaurentPoly1::from_terms(terms.into_iter().map(|t| (t.e, t.coeff))))
}

pub fn parse_poly2(text: &str) -> Result<LaurentPoly2, ParseError> {
    let (terms, vars) = parse_terms(text)?;
    if vars == Vars::Single {
        return Err(ParseError {
            position: 0,
            kind: ParseErrorKind::WrongVariables { expected: "`t1`, `t2`" },
        });
    }
    Ok(LaurentPoly2::from_terms(
        terms.into_iter().map(|t| ((t.e1, t.e2), t.coeff)),
    ))
}

/// Parse a braid word into `(generator index, exponent)` letters, in order.
/// Zero exponents are dropped.
pub fn parse_braid_letters(text: &str) -> Result<Vec<(usize, i64)>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    while cur.peek().is_some() {
        if cur.eat(b'*') {
            continue;
        }
        if !cur.eat(b's') {
            return Err(cur.unexpected());
        }
        // the index must follow the `s` directly
        if !cur.src.get(cur.pos).is_some_and(u8::is_ascii_digit) {
            return Err(cur.err(ParseErrorKind::ExpectedInteger));
        }
        let start = cur.pos;
        let idx: usize = cur
            .digits()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| cur.err(ParseErrorKind::ExpectedInteger))?;
        if idx.is_zero() {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::UnexpectedChar('0'),
            });
        }
        let exp = if cur.eat(b'^') { cur.signed_i64()? } else { 1 };
        if exp != 0 {
            out.push((idx, exp));
        }
    }
    Ok(out)
}
