//! Exact arithmetic: rationals, one- and two-variable integer Laurent
//! polynomials, matrices over `Z[t, t^-1]`, and the text grammar for
//! polynomials and braid words.

mod matrix;
mod parse;
mod poly1;
mod poly2;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use matrix::PolyMatrix;
pub use parse::{parse_braid_letters, parse_poly, parse_poly1, parse_poly2, ParseError, ParseErrorKind, ParsedPoly};
pub use poly1::{geometric_sum, DivisionError, LaurentPoly1};
pub use poly2::LaurentPoly2;
pub use rational::{ExactRational, RationalParseError};

/// Writes one signed term of a sum, e.g. ` - 3*t^2`.
fn format_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &BigInt, mono: &str) -> fmt::Result {
    let neg = coeff.is_negative();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let mag = coeff.abs();
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}
