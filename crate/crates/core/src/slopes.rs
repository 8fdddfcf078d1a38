//! Modular inverses, Hirzebruch-Jung continued fractions, `m(T(p,q))` and
//! known Stein fillable coefficients.

use num_integer::Integer;
use serde::Serialize;

use crate::catalog::KnotFamily;
use crate::ring::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SlopeError {
    #[error("{a} has no inverse modulo {n}")]
    NotCoprime { a: i64, n: i64 },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(i64),
    #[error("need p > q >= 1 with gcd(p, q) = 1, got ({p}, {q})")]
    BadFraction { p: u64, q: u64 },
}

/// The inverse of `a` modulo `n`, in `[1, n-1]`.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64, SlopeError> {
    if n < 2 {
        return Err(SlopeError::BadModulus(n));
    }
    let ext = a.rem_euclid(n).extended_gcd(&n);
    if ext.gcd != 1 {
        return Err(SlopeError::NotCoprime { a, n });
    }
    Ok(ext.x.rem_euclid(n))
}

fn check_fraction(p: u64, q: u64) -> Result<(), SlopeError> {
    if q == 0 || p <= q || p.gcd(&q) != 1 {
        return Err(SlopeError::BadFraction { p, q });
    }
    Ok(())
}

/// Digits of `p/q = c1 - 1/(c2 - 1/(...))`, all at least 2 (for `q < p`).
pub fn cf_expand(p: u64, q: u64) -> Result<Vec<u64>, SlopeError> {
    check_fraction(p, q)?;
    let (mut a, mut b) = (p, q);
    let mut digits = Vec::new();
    while b != 0 {
        let c = a.div_ceil(b);
        digits.push(c);
        (a, b) = (b, c * b - a);
    }
    Ok(digits)
}

/// Inverse of [`cf_expand`].
pub fn cf_evaluate(digits: &[u64]) -> ExactRational {
    let mut iter = digits.iter().rev();
    let Some(&last) = iter.next() else {
        return ExactRational::zero();
    };
    iter.fold(ExactRational::from_int(last), |acc, &c| {
        ExactRational::from_int(c) - acc.recip()
    })
}

/// `m(T(p,q))`: `pq - q/p*` when the expansion of `p/q` has even length,
/// `pq - p/q*` when odd.
pub fn m_torus(p: u64, q: u64) -> Result<ExactRational, SlopeError> {
    Ok(slope_invariants(p, q)?.m_value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeInvariants {
    pub p: u64,
    pub q: u64,
    /// `q q* ≡ 1 (mod p)`
    pub q_star: u64,
    /// `p p* ≡ 1 (mod q)`
    pub p_star: u64,
    pub cf: Vec<u64>,
    pub m_value: ExactRational,
}

pub fn slope_invariants(p: u64, q: u64) -> Result<SlopeInvariants, SlopeError> {
    if q < 2 {
        return Err(SlopeError::BadFraction { p, q });
    }
    let cf = cf_expand(p, q)?;
    let q_star = mod_inverse(q as i64, p as i64)? as u64;
    let p_star = mod_inverse(p as i64, q as i64)? as u64;
    let pq = ExactRational::from_int(p * q);
    let m_value = if cf.len() % 2 == 0 {
        pq - ExactRational::new(q, p_star)
    } else {
        pq - ExactRational::new(p, q_star)
    };
    Ok(SlopeInvariants {
        p,
        q,
        q_star,
        p_star,
        cf,
        m_value,
    })
}

/// What is recorded about the Stein fillable coefficient of a knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SfcValue {
    Exact(ExactRational),
    LowerBound(ExactRational),
    Unknown,
}

impl std::fmt::Display for SfcValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SfcValue::Exact(v) => write!(f, "Sfc = {v}"),
            SfcValue::LowerBound(v) => write!(f, "Sfc >= {v}"),
            SfcValue::Unknown => write!(f, "Sfc unknown"),
        }
    }
}

pub fn sfc_known(knot: &KnotFamily) -> SfcValue {
    match knot {
        KnotFamily::Torus { p, q } => {
            SfcValue::Exact(m_torus(*p as u64, *q as u64).expect("catalog torus knots have p > q > 1 coprime"))
        }
        KnotFamily::NegTorus { p, q } => SfcValue::Exact(ExactRational::from_int(-(*p as i64) * *q as i64)),
        KnotFamily::Unknot => SfcValue::Exact(ExactRational::from_int(-1)),
        // K_{2,m} and K'_{2,m} are the torus knots T(3,3m+2) and T(3,3m+1).
        KnotFamily::Knm { n: 2, m } => sfc_known(&KnotFamily::Torus { p: 3 * m + 2, q: 3 }),
        KnotFamily::Kpnm { n: 2, m } => sfc_known(&KnotFamily::Torus { p: 3 * m + 1, q: 3 }),
        // Sfc is never below TB by definition.
        KnotFamily::Knm { .. } | KnotFamily::Kpnm { .. } => match knot.family_metadata().tb {
            Some(tb) => SfcValue::LowerBound(ExactRational::from_int(tb)),
            None => SfcValue::Unknown,
        },
        KnotFamily::ConnectedSum(_) => SfcValue::Unknown,
    }
}
