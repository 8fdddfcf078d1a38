//! The Owens-Strle negative-definite test, downward slope extension, the
//! `(2g-1)`-surgery torsion criterion, and fillability verdicts.

mod interval;
pub mod report;

use num_bigint::BigInt;
use serde::Serialize;

use crate::floer::TorsionCoefficients;
use crate::ring::ExactRational;

pub use interval::{complement, pairwise_disjoint, Bound, Interval};
pub use report::{
    tags, verdict, verdict_knot, verdict_knot_at, verdict_link, Claim, Evidence, FillabilityReport, Ln4Case, Note,
    WindowKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructError {
    #[error("|H_1| must be positive")]
    ZeroOrder,
    #[error("the failing slope must be positive, got {0}")]
    NonPositiveSlope(ExactRational),
    #[error("genus must be at least 1")]
    ZeroGenus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareFreeDecomposition {
    pub n: u64,
    /// Square-free part.
    pub z: u64,
    pub w: u64,
}

/// `N = z·w²` with `z` square-free.
pub fn square_free_decompose(n: u64) -> Result<SquareFreeDecomposition, ObstructError> {
    if n == 0 {
        return Err(ObstructError::ZeroOrder);
    }
    let (mut rest, mut z, mut w) = (n, 1u64, 1u64);
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        w *= p.pow(e / 2);
        if e % 2 == 1 {
            z *= p;
        }
        p += 1;
    }
    z *= rest;
    Ok(SquareFreeDecomposition { n, z, w })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OwensStrleTest {
    pub decomposition: SquareFreeDecomposition,
    pub max_d: ExactRational,
    /// `(1 - 1/z)/4` for odd `z`, `1/4` for even `z`.
    pub threshold: ExactRational,
    /// `max_d < threshold`: no negative-definite filling exists.
    pub obstructed: bool,
    /// `N` is not a square and `max_d < 1/6`.
    pub nonsquare_shortcut: bool,
}

pub fn owens_strle_test(max_d: &ExactRational, order: u64) -> Result<OwensStrleTest, ObstructError> {
    let decomposition = square_free_decompose(order)?;
    let z = decomposition.z;
    let threshold = if z % 2 == 1 {
        (ExactRational::one() - ExactRational::new(1, z)) * ExactRational::new(1, 4)
    } else {
        ExactRational::new(1, 4)
    };
    Ok(OwensStrleTest {
        decomposition,
        max_d: max_d.clone(),
        obstructed: *max_d < threshold,
        nonsquare_shortcut: z != 1 && *max_d < ExactRational::new(1, 6),
        threshold,
    })
}

/// Slopes `r` with `max(floor, 0⁺) ≤ r ≤ failing` inherit the obstruction
/// at `failing` through a negative-definite cobordism; `None` when the
/// floor lies above the failing slope.
pub fn extend_downward(failing: &ExactRational, floor: &ExactRational) -> Result<Option<Interval>, ObstructError> {
    if !failing.is_positive() {
        return Err(ObstructError::NonPositiveSlope(failing.clone()));
    }
    if floor > failing {
        return Ok(None);
    }
    let lo = if floor.is_positive() {
        Bound::Closed(floor.clone())
    } else {
        Bound::Open(ExactRational::zero())
    };
    Ok(Some(Interval {
        lo,
        hi: Bound::Closed(failing.clone()),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionStep {
    pub k: u64,
    pub i_k: u64,
    #[serde(serialize_with = "bigint_as_string")]
    pub t_i_k: BigInt,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criterion2gMinus1 {
    pub genus: u64,
    pub holds: bool,
    pub steps: Vec<CriterionStep>,
}

impl Criterion2gMinus1 {
    pub fn i_sequence(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.i_k).collect()
    }
}

fn bigint_as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `2i > 2g - 1 - √((8k+1)(2g-1))`, decided in integers.
fn exceeds(i: u64, k: u64, g: u64) -> bool {
    let a = 2 * g as i128 - 1 - 2 * i as i128;
    a < 0 || a * a < (8 * k as i128 + 1) * (2 * g as i128 - 1)
}

/// `i_k = min{i ≥ 0 : 2i > 2g - 1 - √((8k+1)(2g-1))}` for
/// `0 ≤ k ≤ ⌊(g-1)/4⌋ + 1`.
pub fn i_sequence(g: u64) -> Result<Vec<u64>, ObstructError> {
    if g == 0 {
        return Err(ObstructError::ZeroGenus);
    }
    Ok((0..=(g - 1) / 4 + 1)
        .map(|k| (0..).find(|&i| exceeds(i, k, g)).expect("i = g always qualifies"))
        .collect())
}

/// Holds when `t_{i_k} ≥ k + 1` for every `k`; then every d-invariant of
/// `(2g-1)`-surgery is negative.
pub fn criterion_2g_minus_1(g: u64, torsion: &TorsionCoefficients) -> Result<Criterion2gMinus1, ObstructError> {
    let steps: Vec<CriterionStep> = i_sequence(g)?
        .into_iter()
        .enumerate()
        .map(|(k, i_k)| {
            let t_i_k = torsion.get(i_k as i64);
            CriterionStep {
                k: k as u64,
                i_k,
                satisfied: t_i_k >= BigInt::from(k as u64 + 1),
                t_i_k,
            }
        })
        .collect();
    Ok(Criterion2gMinus1 {
        genus: g,
        holds: steps.iter().all(|s| s.satisfied),
        steps,
    })
}
