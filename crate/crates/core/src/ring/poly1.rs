use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::format_term;

/// Integer Laurent polynomial in one variable `t`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    coeffs: BTreeMap<i64, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    ByZero,
    #[error("division leaves a nonzero remainder")]
    Inexact,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// `p(t^-1)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True iff the coefficient at `j` equals the one at `-j` for every `j`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in `Z[t, t^-1]`.
    ///
    /// The divisor's leading coefficient must divide every leading
    /// coefficient met during long division, otherwise the quotient is not
    /// integral and the division is reported inexact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, DivisionError> {
        let (d_lo, d_hi) = match (divisor.low_degree(), divisor.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(DivisionError::ByZero),
        };
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.degree() {
            let r_lo = rem.low_degree().unwrap_or(r_hi);
            // the remainder can no longer be a multiple of the divisor
            if r_hi - r_lo < d_hi - d_lo {
                return Err(DivisionError::Inexact);
            }
            let (q, r) = rem.coeff(r_hi).div_rem(&lead);
            if !r.is_zero() {
                return Err(DivisionError::Inexact);
            }
            let step = Self::monomial(q, r_hi - d_hi);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// The representative `±t^k · self` whose support is centred on zero and
    /// whose value at `t = 1` is positive.
    ///
    /// Returns `None` when the support span is odd (no centring exists) or
    /// the value at one is zero.
    pub fn symmetrize(&self) -> Option<Self> {
        let (lo, hi) = (self.low_degree()?, self.degree()?);
        if (lo + hi) % 2 != 0 {
            return None;
        }
        let centred = self.shift(-(lo + hi) / 2);
        let v = centred.eval_at_one();
        if v.is_zero() {
            return None;
        }
        Some(if v.is_negative() { -centred } else { centred })
    }
}

impl fmt::Display for LaurentPoly1 {
    /// Decreasing exponent order: `t^4 - t^3 + t - 1 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            format_term(f, idx == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &'a LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &'a LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &'a LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Add for LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: LaurentPoly1) -> LaurentPoly1 {
        &self + &rhs
    }
}

impl Sub for LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: LaurentPoly1) -> LaurentPoly1 {
        &self - &rhs
    }
}

impl Mul for LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: LaurentPoly1) -> LaurentPoly1 {
        &self * &rhs
    }
}

impl Neg for LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1 {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        -self.clone()
    }
}

impl From<i64> for LaurentPoly1 {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

/// `1 + t + ... + t^(n-1)`.
pub fn geometric_sum(n: u32) -> LaurentPoly1 {
    LaurentPoly1::from_terms((0..n as i64).map(|e| (e, BigInt::one())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly1 {
        LaurentPoly1::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 1), (0, -1)]);
        let b = p(&[(1, 1), (0, 1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn zero_annihilates() {
        let a = p(&[(3, 2), (-1, -5)]);
        assert!((&a * &LaurentPoly1::zero()).is_zero());
    }

    #[test]
    fn trefoil_squared_by_convolution() {
        let tre = p(&[(1, 1), (0, -1), (-1, 1)]);
        // brute-force convolution of [1, -1, 1] with itself
        let c = [1i64, -1, 1];
        let mut conv = [0i64; 5];
        for i in 0..3 {
            for j in 0..3 {
                conv[i + j] += c[i] * c[j];
            }
        }
        let expected = LaurentPoly1::from_terms((0..5).map(|k| (2 - k as i64, conv[k])));
        assert_eq!(&tre * &tre, expected);
        assert_eq!(expected, p(&[(2, 1), (1, -2), (0, 3), (-1, -2), (-2, 1)]));
    }

    #[test]
    fn symmetry() {
        assert!(p(&[(1, 1), (0, -1), (-1, 1)]).is_symmetric());
        assert!(!p(&[(2, 1), (1, 1)]).is_symmetric());
        assert!(LaurentPoly1::zero().is_symmetric());
    }

    #[test]
    fn exact_division() {
        let a = p(&[(3, 1), (0, -1)]);
        let q = a.div_exact(&p(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(q, geometric_sum(3));
        assert_eq!(a.div_exact(&p(&[(1, 1), (0, 1)])), Err(DivisionError::Inexact));
        assert_eq!(a.div_exact(&LaurentPoly1::zero()), Err(DivisionError::ByZero));
        let shifted = a.shift(-7).div_exact(&geometric_sum(3)).unwrap();
        assert_eq!(shifted, p(&[(-6, 1), (-7, -1)]));
    }

    #[test]
    fn symmetrize_fixes_unit() {
        let raw = p(&[(5, -1), (4, 1), (3, -1)]);
        assert_eq!(raw.symmetrize().unwrap(), p(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(p(&[(1, 1), (0, 1)]).symmetrize(), None);
    }

    #[test]
    fn printer() {
        let a = p(&[(4, 1), (3, -1), (1, 1), (0, -1), (-1, 1), (-3, -1), (-4, 1)]);
        assert_eq!(a.to_string(), "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4");
        assert_eq!(p(&[(2, -3), (0, 2)]).to_string(), "-3*t^2 + 2");
        assert_eq!(LaurentPoly1::zero().to_string(), "0");
    }
}
