use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::format_term;

/// Integer Laurent polynomial in two variables `t1`, `t2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, e1: i64, e2: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((e1, e2), coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: (i64, i64), coeff: BigInt) {
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

    pub fn coeff(&self, e1: i64, e2: i64) -> BigInt {
        self.coeffs.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing lexicographic order of `(e1, e2)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Componentwise bounding box `((min e1, max e1), (min e2, max e2))`.
    pub fn bounding_box(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.coeffs.keys();
        let &(a, b) = it.next()?;
        Some(it.fold(((a, a), (b, b)), |((l1, h1), (l2, h2)), &(x, y)| {
            ((l1.min(x), h1.max(x)), (l2.min(y), h2.max(y)))
        }))
    }

    /// Exchange the roles of `t1` and `t2`.
    pub fn swap_variables(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// Multiply by `t1^k1 t2^k2`.
    pub fn shift(&self, k1: i64, k2: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), c)| ((a + k1, b + k2), c.clone()))
                .collect(),
        }
    }

    /// Apply `f` to every exponent pair. `f` must be injective on the support.
    pub fn map_exponents(&self, mut f: impl FnMut(i64, i64) -> (i64, i64)) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.coeffs {
            out.add_term(f(a, b), c.clone());
        }
        out
    }

    /// The separable product `f(t1) * g(t2)`.
    pub fn from_product(f: &super::LaurentPoly1, g: &super::LaurentPoly1) -> Self {
        let mut out = Self::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term((a, b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Decreasing lexicographic order on `(e1, e2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.coeffs.iter().rev().enumerate() {
            let factor = |name: &str, e: i64| match e {
                0 => None,
                1 => Some(name.to_string()),
                e => Some(format!("{name}^{e}")),
            };
            let mono: Vec<String> = [factor("t1", a), factor("t2", b)].into_iter().flatten().collect();
            format_term(f, idx == 0, c, &mono.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, a2), ca) in &self.coeffs {
            for (&(b1, b2), cb) in &rhs.coeffs {
                out.add_term((a1 + b1, a2 + b2), ca * cb);
            }
        }
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self + &rhs
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printer_order() {
        let p = LaurentPoly2::from_terms([((1, 2), -1), ((1, 1), 1), ((0, 0), 3), ((-1, 1), 1)]);
        assert_eq!(p.to_string(), "-t1*t2^2 + t1*t2 + 3 + t1^-1*t2");
    }

    #[test]
    fn swap_and_box() {
        let p = LaurentPoly2::from_terms([((2, -1), 1), ((0, 3), -2)]);
        assert_eq!(
            p.swap_variables(),
            LaurentPoly2::from_terms([((-1, 2), 1), ((3, 0), -2)])
        );
        assert_eq!(p.bounding_box(), Some(((0, 2), (-1, 3))));
        assert_eq!(LaurentPoly2::zero().bounding_box(), None);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly2::monomial(2, 1, 1);
        let b = LaurentPoly2::monomial(2, 1, 1);
        assert!((&a - &b).is_zero());
        assert_eq!((&a - &b).support_len(), 0);
    }
}
