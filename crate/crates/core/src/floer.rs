//! Torsion coefficients, lens-space d-invariants, d-invariant tables of knot
//! surgeries, and H/h-functions with d-invariant tables of two-component
//! link surgeries (linking number zero).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::catalog::LinkAlexander;
use crate::ring::{ExactRational, LaurentPoly1, LaurentPoly2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloerError {
    #[error("Alexander polynomial is not symmetric")]
    NotSymmetric,
    #[error("Alexander polynomial has value {0} at t = 1, expected 1")]
    BadNormalization(BigInt),
    #[error("torsion coefficients are not non-increasing and nonnegative ({0:?}); not an L-space knot")]
    NotLSpaceKnot(Vec<BigInt>),
    #[error("Spin^c label {i} is outside [0, {p}]")]
    LabelOutOfRange { p: u64, i: u64 },
    #[error("surgery coefficient must be a positive integer")]
    NonPositiveSlope,
    #[error("two-variable polynomial violates the linking-number-zero Torres condition")]
    NonzeroLinking,
}

/// `t_0, ..., t_g` of an L-space knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionCoefficients {
    values: Vec<BigInt>,
}

impl TorsionCoefficients {
    /// `t_i = Σ_{j>0} j·a_{|i|+j}`.
    pub fn from_alexander(alex: &LaurentPoly1) -> Result<Self, FloerError> {
        if !alex.is_symmetric() {
            return Err(FloerError::NotSymmetric);
        }
        let at_one = alex.eval_at_one();
        if at_one != BigInt::from(1) {
            return Err(FloerError::BadNormalization(at_one));
        }
        let g = alex.degree().unwrap_or(0);
        let values: Vec<BigInt> = (0..=g)
            .map(|i| {
                alex.terms()
                    .filter(|&(k, _)| k > i)
                    .map(|(k, c)| c * BigInt::from(k - i))
                    .sum()
            })
            .collect();
        let monotone = values.windows(2).all(|w| w[0] >= w[1]);
        if !monotone || values.iter().any(Signed::is_negative) {
            return Err(FloerError::NotLSpaceKnot(values));
        }
        Ok(Self { values })
    }

    /// Top exponent of the Alexander polynomial.
    pub fn genus(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// `t_i`, zero for `|i| ≥ g`.
    pub fn get(&self, i: i64) -> BigInt {
        self.values
            .get(i.unsigned_abs() as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// `d(L(p,1), i) = (p - 2i)^2 / (4p) - 1/4`.
pub fn d_lens(p: u64, i: u64) -> Result<ExactRational, FloerError> {
    if p == 0 {
        return Err(FloerError::NonPositiveSlope);
    }
    if i > p {
        return Err(FloerError::LabelOutOfRange { p, i });
    }
    let diff = BigInt::from(p) - BigInt::from(2 * i);
    Ok(ExactRational::new(&diff * &diff, BigInt::from(4 * p)) - ExactRational::new(1, 4))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DInvariantTable {
    p: u64,
    entries: Vec<ExactRational>,
}

#[derive(Serialize)]
struct KnotEntry<'a> {
    i: u64,
    d: &'a ExactRational,
}

#[derive(Serialize)]
struct KnotTableJson<'a> {
    p: u64,
    entries: Vec<KnotEntry<'a>>,
}

impl DInvariantTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: u64) -> &ExactRational {
        &self.entries[i as usize]
    }

    pub fn entries(&self) -> &[ExactRational] {
        &self.entries
    }

    pub fn max(&self) -> &ExactRational {
        self.entries.iter().max().expect("tables are nonempty")
    }

    /// First label attaining the maximum.
    pub fn argmax(&self) -> u64 {
        let max = self.max();
        self.entries.iter().position(|d| d == max).unwrap_or(0) as u64
    }

    pub fn all_negative(&self) -> bool {
        self.entries.iter().all(ExactRational::is_negative)
    }

    pub fn is_symmetric(&self) -> bool {
        let p = self.p as usize;
        (1..p).all(|i| self.entries[i] == self.entries[p - i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, d)| KnotEntry { i: i as u64, d })
            .collect();
        serde_json::to_value(KnotTableJson { p: self.p, entries }).expect("plain data serializes")
    }
}

/// `d(S³_p(K), i) = d(L(p,1), ī) - 2 t_ī` with `ī = min(i, p - i)`.
pub fn d_knot_surgery(torsion: &TorsionCoefficients, p: u64) -> Result<DInvariantTable, FloerError> {
    if p == 0 {
        return Err(FloerError::NonPositiveSlope);
    }
    let entries = (0..p)
        .map(|i| {
            let rep = i.min(p - i);
            d_lens(p, rep).map(|d| d - ExactRational::from(torsion.get(rep as i64) * 2))
        })
        .collect::<Result<_, _>>()?;
    Ok(DInvariantTable { p, entries })
}

/// Convenience wrapper: torsion coefficients, then the table.
pub fn d_knot_surgery_from_alexander(alex: &LaurentPoly1, p: u64) -> Result<DInvariantTable, FloerError> {
    d_knot_surgery(&TorsionCoefficients::from_alexander(alex)?, p)
}

/// H-function of a two-component L-space link with linking number zero,
/// evaluated pointwise from its Alexander data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFunction {
    delta: LaurentPoly2,
    component1: LaurentPoly1,
    component2: LaurentPoly1,
}

/// `Σ_{j ≥ s+1}` of the coefficients of `Δ(t)/(1 - t^-1)`, which telescopes
/// to `Σ_{k > s} c_k (k - s)` over the finite numerator.
pub fn tail_sum(numerator: &LaurentPoly1, s: i64) -> BigInt {
    numerator
        .terms()
        .filter(|&(k, _)| k > s)
        .map(|(k, c)| c * BigInt::from(k - s))
        .sum()
}

/// Torres condition for linking number zero: `Δ̃(t1, 1) = 0` and `Δ̃(1, t2) = 0`.
fn linking_zero(delta: &LaurentPoly2) -> bool {
    let mut rows = std::collections::BTreeMap::<i64, BigInt>::new();
    let mut cols = std::collections::BTreeMap::<i64, BigInt>::new();
    for ((a, b), c) in delta.terms() {
        *rows.entry(a).or_default() += c;
        *cols.entry(b).or_default() += c;
    }
    rows.values().chain(cols.values()).all(Zero::is_zero)
}

impl HFunction {
    pub fn new(data: &LinkAlexander) -> Result<Self, FloerError> {
        Self::from_alexander(&data.delta, &data.component1, &data.component2)
    }

    pub fn from_alexander(
        delta: &LaurentPoly2,
        component1: &LaurentPoly1,
        component2: &LaurentPoly1,
    ) -> Result<Self, FloerError> {
        if !linking_zero(delta) {
            return Err(FloerError::NonzeroLinking);
        }
        Ok(Self {
            delta: delta.clone(),
            component1: component1.clone(),
            component2: component2.clone(),
        })
    }

    /// The two-component unlink: vanishing two-variable term, unknotted
    /// components. Its h-function is identically zero.
    pub fn unlink() -> Self {
        Self {
            delta: LaurentPoly2::zero(),
            component1: LaurentPoly1::one(),
            component2: LaurentPoly1::one(),
        }
    }

    /// `H(s1,s2) = T1(s1) + T2(s2) - Σ_{j1 ≥ s1+1, j2 ≥ s2+1} a_{j1,j2}`.
    pub fn big_h(&self, s1: i64, s2: i64) -> BigInt {
        let q: BigInt = self
            .delta
            .terms()
            .filter(|&((a, b), _)| a > s1 && b > s2)
            .map(|(_, c)| c.clone())
            .sum();
        tail_sum(&self.component1, s1) + tail_sum(&self.component2, s2) - q
    }

    /// `h = H - H_O` with `H_O(s1,s2) = max(0,-s1) + max(0,-s2)`.
    pub fn h(&self, s1: i64, s2: i64) -> BigInt {
        self.big_h(s1, s2) - BigInt::from(0.max(-s1) + 0.max(-s2))
    }

    /// Values on `[lo, hi]²`, rows indexed by `s1`.
    pub fn grid(&self, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
        (lo..=hi)
            .map(|s1| (lo..=hi).map(|s2| self.h(s1, s2)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDInvariantTable {
    p1: u64,
    p2: u64,
    entries: Vec<Vec<ExactRational>>,
}

#[derive(Serialize)]
struct LinkEntry<'a> {
    i1: u64,
    i2: u64,
    d: &'a ExactRational,
}

#[derive(Serialize)]
struct LinkTableJson<'a> {
    p1: u64,
    p2: u64,
    entries: Vec<LinkEntry<'a>>,
}

impl LinkDInvariantTable {
    pub fn p1(&self) -> u64 {
        self.p1
    }

    pub fn p2(&self) -> u64 {
        self.p2
    }

    pub fn get(&self, i1: u64, i2: u64) -> &ExactRational {
        &self.entries[i1 as usize][i2 as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), &ExactRational)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(i1, row)| row.iter().enumerate().map(move |(i2, d)| ((i1 as u64, i2 as u64), d)))
    }

    pub fn max(&self) -> &ExactRational {
        self.iter().map(|(_, d)| d).max().expect("tables are nonempty")
    }

    pub fn argmax(&self) -> (u64, u64) {
        let max = self.max();
        self.iter().find(|(_, d)| *d == max).map(|(ij, _)| ij).unwrap_or((0, 0))
    }

    pub fn all_negative(&self) -> bool {
        self.iter().all(|(_, d)| d.is_negative())
    }

    pub fn is_symmetric(&self) -> bool {
        let (p1, p2) = (self.p1, self.p2);
        self.iter()
            .all(|((i1, i2), d)| d == self.get((p1 - i1) % p1, (p2 - i2) % p2))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self.iter().map(|((i1, i2), d)| LinkEntry { i1, i2, d }).collect();
        serde_json::to_value(LinkTableJson {
            p1: self.p1,
            p2: self.p2,
            entries,
        })
        .expect("plain data serializes")
    }
}

/// `d(S³_{p1,p2}(L), (i1,i2)) = d(L(p1,1),i1) + d(L(p2,1),i2) - 2 max h(s)`
/// over `s_j ∈ {i_j, i_j - p_j}`.
pub fn d_link_surgery(h: &HFunction, p1: u64, p2: u64) -> Result<LinkDInvariantTable, FloerError> {
    if p1 == 0 || p2 == 0 {
        return Err(FloerError::NonPositiveSlope);
    }
    let mut entries = Vec::with_capacity(p1 as usize);
    for i1 in 0..p1 {
        let mut row = Vec::with_capacity(p2 as usize);
        for i2 in 0..p2 {
            let (a, b) = (i1 as i64, i2 as i64);
            let corners = [a, a - p1 as i64]
                .into_iter()
                .flat_map(|s1| [b, b - p2 as i64].into_iter().map(move |s2| (s1, s2)));
            let hmax = corners.map(|(s1, s2)| h.h(s1, s2)).max().expect("four corners");
            row.push(d_lens(p1, i1)? + d_lens(p2, i2)? - ExactRational::from(hmax * 2));
        }
        entries.push(row);
    }
    Ok(LinkDInvariantTable { p1, p2, entries })
}
