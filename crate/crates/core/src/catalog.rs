//! Closed-form data for the supported knot and link families.
//!
//! Subjects are addressed by short strings:
//! `knm:3,1`, `kpnm:4,2`, `torus:3,5`, `torus:unknot`, `unknot`,
//! `negtorus:3,5`, `pretzel:-2,3,7`, `sum:torus:2,3+torus:2,5`, `Ln:2`,
//! `k2b:5,5`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::braid::{BraidLetter, BraidWord};
use crate::ring::{LaurentPoly1, LaurentPoly2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown subject `{0}`")]
    UnknownSubject(String),
    #[error("invalid parameters for `{subject}`: {reason}")]
    InvalidParameters { subject: String, reason: String },
    #[error("K({a1},{a2}) is not in catalog: only K(5,5) has tabulated two-variable data")]
    NotInCatalog { a1: u32, a2: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotFamily {
    /// Twisted torus knot `T(3,3m+2; 2,n-2)`.
    Knm {
        n: u32,
        m: u32,
    },
    /// Twisted torus knot `T(3,3m+1; 2,n-2)`.
    Kpnm {
        n: u32,
        m: u32,
    },
    /// Positive torus knot, normalized so that `p > q > 1`.
    Torus {
        p: u32,
        q: u32,
    },
    /// Mirror of `Torus { p, q }`.
    NegTorus {
        p: u32,
        q: u32,
    },
    Unknot,
    ConnectedSum(Vec<KnotFamily>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkFamily {
    /// Unknot together with `T(2,2n+1)`; `n = 0` is the Whitehead link.
    Ln(u32),
    /// Two-bridge link `K(a1,a2)` with `a1`, `a2` odd and positive.
    TwoBridge(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Subject {
    Knot(KnotFamily),
    Link(LinkFamily),
}

/// Integer data attached to a knot family.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FamilyMetadata {
    pub genus: i64,
    /// Maximal Thurston-Bennequin number, when known.
    pub tb: Option<i64>,
    /// Integer surgeries at or above this slope are L-spaces; `2g - 1` for
    /// L-space knots.
    pub lspace_threshold: Option<i64>,
    /// Surgeries with slope at least this value are Stein fillable.
    pub stein_threshold: Option<i64>,
}

/// Two-variable data for a two-component link with linking number zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkAlexander {
    /// `Δ̃`, i.e. `t1^{1/2} t2^{1/2} Δ`, on the integer lattice.
    pub delta: LaurentPoly2,
    /// Symmetrized Alexander polynomial of the first component.
    pub component1: LaurentPoly1,
    pub component2: LaurentPoly1,
}

fn invalid(subject: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::InvalidParameters {
        subject: subject.to_string(),
        reason: reason.into(),
    }
}

fn parse_params(subject: &str, body: &str, count: usize) -> Result<Vec<i64>, CatalogError> {
    let values: Result<Vec<i64>, _> = body.split(',').map(|s| s.trim().parse::<i64>()).collect();
    match values {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(invalid(subject, format!("expected {count} comma-separated integers"))),
    }
}

fn twisted_params(subject: &str, body: &str) -> Result<(u32, u32), CatalogError> {
    let v = parse_params(subject, body, 2)?;
    if v[0] < 2 || v[1] < 1 {
        return Err(invalid(subject, "need n >= 2 and m >= 1"));
    }
    Ok((to_u32(subject, v[0])?, to_u32(subject, v[1])?))
}

fn to_u32(subject: &str, v: i64) -> Result<u32, CatalogError> {
    u32::try_from(v).map_err(|_| invalid(subject, "parameter out of range"))
}

/// Torus knot from two positive parameters, in either order.
fn torus_from(subject: &str, a: i64, b: i64, negative: bool) -> Result<KnotFamily, CatalogError> {
    if a < 1 || b < 1 {
        return Err(invalid(subject, "torus parameters must be positive"));
    }
    if a.gcd(&b) != 1 {
        return Err(invalid(
            subject,
            "torus parameters must be coprime (otherwise the closure is a link)",
        ));
    }
    let (p, q) = (to_u32(subject, a.max(b))?, to_u32(subject, a.min(b))?);
    Ok(match (q, negative) {
        (1, _) => KnotFamily::Unknot,
        (_, false) => KnotFamily::Torus { p, q },
        (_, true) => KnotFamily::NegTorus { p, q },
    })
}

impl FromStr for KnotFamily {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("unknot") {
            return Ok(KnotFamily::Unknot);
        }
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| CatalogError::UnknownSubject(s.to_string()))?;
        match tag.to_ascii_lowercase().as_str() {
            "knm" => twisted_params(s, body).map(|(n, m)| KnotFamily::Knm { n, m }),
            "kpnm" => twisted_params(s, body).map(|(n, m)| KnotFamily::Kpnm { n, m }),
            "torus" if body.trim().eq_ignore_ascii_case("unknot") => Ok(KnotFamily::Unknot),
            "torus" | "negtorus" => {
                let v = parse_params(s, body, 2)?;
                torus_from(s, v[0], v[1], tag.eq_ignore_ascii_case("negtorus"))
            }
            "pretzel" => {
                let v = parse_params(s, body, 3)?;
                if v[0] != -2 || v[1] != 3 || v[2] < 5 || v[2] % 2 == 0 {
                    return Err(invalid(s, "only P(-2,3,2n+1) with n >= 2 is catalogued"));
                }
                Ok(KnotFamily::Knm {
                    n: to_u32(s, (v[2] - 1) / 2)?,
                    m: 1,
                })
            }
            "sum" => {
                let parts: Result<Vec<KnotFamily>, _> = body.split('+').map(str::parse).collect();
                let parts = parts?;
                if parts.len() < 2 {
                    return Err(invalid(s, "a connected sum needs at least two summands"));
                }
                Ok(KnotFamily::ConnectedSum(parts))
            }
            _ => Err(CatalogError::UnknownSubject(s.to_string())),
        }
    }
}

impl FromStr for LinkFamily {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| CatalogError::UnknownSubject(s.to_string()))?;
        match tag.to_ascii_lowercase().as_str() {
            "ln" => {
                let v = parse_params(s, body, 1)?;
                if v[0] < 0 {
                    return Err(invalid(s, "need n >= 0"));
                }
                Ok(LinkFamily::Ln(to_u32(s, v[0])?))
            }
            "k2b" => {
                let v = parse_params(s, body, 2)?;
                if v.iter().any(|&a| a < 1 || a % 2 == 0) {
                    return Err(invalid(s, "both parameters must be odd and positive"));
                }
                Ok(LinkFamily::TwoBridge(to_u32(s, v[0])?, to_u32(s, v[1])?))
            }
            _ => Err(CatalogError::UnknownSubject(s.to_string())),
        }
    }
}

impl FromStr for Subject {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tag = s.trim().split(':').next().unwrap_or("").to_ascii_lowercase();
        if tag == "ln" || tag == "k2b" {
            s.parse().map(Subject::Link)
        } else {
            s.parse().map(Subject::Knot)
        }
    }
}

impl fmt::Display for KnotFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotFamily::Knm { n, m } => write!(f, "knm:{n},{m}"),
            KnotFamily::Kpnm { n, m } => write!(f, "kpnm:{n},{m}"),
            KnotFamily::Torus { p, q } => write!(f, "torus:{p},{q}"),
            KnotFamily::NegTorus { p, q } => write!(f, "negtorus:{p},{q}"),
            KnotFamily::Unknot => write!(f, "unknot"),
            KnotFamily::ConnectedSum(parts) => {
                let names: Vec<String> = parts.iter().map(|k| k.to_string()).collect();
                write!(f, "sum:{}", names.join("+"))
            }
        }
    }
}

impl fmt::Display for LinkFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkFamily::Ln(n) => write!(f, "Ln:{n}"),
            LinkFamily::TwoBridge(a1, a2) => write!(f, "k2b:{a1},{a2}"),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Knot(k) => k.fmt(f),
            Subject::Link(l) => l.fmt(f),
        }
    }
}

/// `t^k + t^-k`
fn pair(k: i64) -> LaurentPoly1 {
    if k == 0 {
        LaurentPoly1::from(2)
    } else {
        LaurentPoly1::from_terms([(k, 1), (-k, 1)])
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Closed form of `Δ(K_{n,m})`.
pub fn knm_alexander(n: u32, m: u32) -> LaurentPoly1 {
    let (n, m) = (n as i64, m as i64);
    let mut acc = LaurentPoly1::from(sign(n - 1));
    for i in 1..n {
        acc = &acc + &pair(i).scale(&sign(n - i - 1).into());
    }
    for k in 1..=m {
        acc = &acc - &pair(n + 3 * k - 2);
        acc = &acc + &pair(n + 3 * k - 1);
    }
    acc
}

/// Closed form of `Δ(K'_{n,m})`.
pub fn kpnm_alexander(n: u32, m: u32) -> LaurentPoly1 {
    let (n, m) = (n as i64, m as i64);
    let mut acc = LaurentPoly1::from(sign(n));
    for i in 1..=n - 2 {
        acc = &acc + &pair(i).scale(&sign(n - i).into());
    }
    for k in 0..m {
        acc = &acc - &pair(n + 3 * k);
        acc = &acc + &pair(n + 3 * k + 1);
    }
    acc
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrized.
pub fn torus_alexander(p: u32, q: u32) -> LaurentPoly1 {
    let minus_one = |k: u32| LaurentPoly1::from_terms([(k as i64, 1), (0, -1)]);
    let num = &minus_one(p * q) * &minus_one(1);
    let den = &minus_one(p) * &minus_one(q);
    num.div_exact(&den)
        .ok()
        .and_then(|quot| quot.symmetrize())
        .expect("torus knot formula divides exactly for coprime p, q")
}

impl KnotFamily {
    pub fn alexander_closed_form(&self) -> LaurentPoly1 {
        match self {
            KnotFamily::Knm { n, m } => knm_alexander(*n, *m),
            KnotFamily::Kpnm { n, m } => kpnm_alexander(*n, *m),
            KnotFamily::Torus { p, q } | KnotFamily::NegTorus { p, q } => torus_alexander(*p, *q),
            KnotFamily::Unknot => LaurentPoly1::one(),
            KnotFamily::ConnectedSum(parts) => parts
                .iter()
                .fold(LaurentPoly1::one(), |acc, k| &acc * &k.alexander_closed_form()),
        }
    }

    /// A braid whose closure is this knot.
    pub fn braid_word(&self) -> BraidWord {
        let twist = |exp: u32, reps: u32| {
            let mut letters = vec![BraidLetter::neg(1); exp as usize];
            for _ in 0..reps {
                letters.extend([BraidLetter::neg(1), BraidLetter::neg(2)]);
            }
            BraidWord::new(3, letters).expect("3-strand word")
        };
        match self {
            KnotFamily::Knm { n, m } => twist(2 * n - 4, 3 * m + 2),
            KnotFamily::Kpnm { n, m } => twist(2 * n - 4, 3 * m + 1),
            KnotFamily::Torus { p, q } | KnotFamily::NegTorus { p, q } => {
                let inverse = matches!(self, KnotFamily::Torus { .. });
                let row: Vec<BraidLetter> = (1..*q as usize)
                    .map(|g| BraidLetter { generator: g, inverse })
                    .collect();
                BraidWord::new(*q as usize, row)
                    .expect("valid torus row")
                    .repeat(*p as usize)
            }
            KnotFamily::Unknot => BraidWord::new(2, vec![BraidLetter::pos(1)]).expect("one crossing"),
            KnotFamily::ConnectedSum(parts) => {
                let mut words = parts.iter().map(KnotFamily::braid_word);
                let first = words.next().expect("connected sums have summands");
                words.fold(first, |acc, w| acc.band_sum(&w))
            }
        }
    }

    pub fn genus(&self) -> i64 {
        match self {
            KnotFamily::Knm { n, m } => *n as i64 + 3 * *m as i64 - 1,
            KnotFamily::Kpnm { n, m } => *n as i64 + 3 * *m as i64 - 2,
            KnotFamily::Torus { p, q } | KnotFamily::NegTorus { p, q } => (*p as i64 - 1) * (*q as i64 - 1) / 2,
            KnotFamily::Unknot => 0,
            KnotFamily::ConnectedSum(parts) => parts.iter().map(KnotFamily::genus).sum(),
        }
    }

    /// Whether positive surgeries of slope at least `2g - 1` are recorded
    /// as L-spaces.
    pub fn is_lspace_knot(&self) -> bool {
        matches!(
            self,
            KnotFamily::Knm { .. } | KnotFamily::Kpnm { .. } | KnotFamily::Torus { .. }
        )
    }

    pub fn family_metadata(&self) -> FamilyMetadata {
        let genus = self.genus();
        let (n, m) = match self {
            KnotFamily::Knm { n, m } | KnotFamily::Kpnm { n, m } => (*n as i64, *m as i64),
            _ => (0, 0),
        };
        let tb = match self {
            KnotFamily::Knm { .. } => Some(2 * n + 6 * m - 3),
            KnotFamily::Kpnm { .. } => Some(2 * n + 6 * m - 5),
            KnotFamily::Torus { p, q } => Some(*p as i64 * *q as i64 - *p as i64 - *q as i64),
            KnotFamily::NegTorus { p, q } => Some(-(*p as i64) * *q as i64),
            KnotFamily::Unknot => Some(-1),
            KnotFamily::ConnectedSum(_) => None,
        };
        let stein_threshold = match self {
            KnotFamily::Knm { .. } => Some(9 * m + 4 * n - 8),
            KnotFamily::Kpnm { .. } => Some(9 * m + 4 * n - 4),
            _ => None,
        };
        FamilyMetadata {
            genus,
            tb,
            lspace_threshold: self.is_lspace_knot().then_some(2 * genus - 1),
            stein_threshold,
        }
    }
}

/// Case table for the torsion coefficients `t_i(K_{n,m})`, `i ≥ 0`.
pub fn knm_torsion_closed_form(n: u32, m: u32, i: u64) -> u64 {
    let (n, m, i) = (n as i64, m as i64, i as i64);
    let value = if i <= n - 2 {
        match (n % 2 == 1, i % 2 == 1) {
            (true, true) | (false, false) => m + (n - i) / 2,
            _ => m + (n - i - 1) / 2,
        }
    } else {
        // i = n + 3k + ε with ε ∈ {-1, 0, 1}
        let k = (i - n + 1).div_euclid(3);
        if k < m {
            m - k
        } else {
            0
        }
    };
    value as u64
}

/// Case table for the torsion coefficients `t_i(K'_{n,m})`, `i ≥ 0`.
pub fn kpnm_torsion_closed_form(n: u32, m: u32, i: u64) -> u64 {
    let (n, m, i) = (n as i64, m as i64, i as i64);
    let value = if i <= n - 3 {
        match (n % 2 == 0, i % 2 == 0) {
            (true, true) | (false, false) => m + (n - i - 2) / 2,
            _ => m + (n - i - 1) / 2,
        }
    } else {
        // i = n + 3k - 1 + ε with ε ∈ {-1, 0, 1}
        let k = (i - n + 2).div_euclid(3);
        if k < m {
            m - k
        } else {
            0
        }
    };
    value as u64
}

/// Four-case closed form of the h-function of `𝕃_n`, split by the parity
/// of `n`, whether `s1 = 0`, and the parity of `k = s2`.
pub fn ln_h_closed_form(n: u32, s1: i64, k: i64) -> i64 {
    let n = n as i64;
    let k_odd = k.rem_euclid(2) == 1;
    let shift = match (n % 2 == 0, s1 == 0, k_odd) {
        (true, true, true) => 1,
        (true, true, false) => 2,
        (true, false, true) => 1,
        (true, false, false) => 0,
        (false, true, true) => 2,
        (false, true, false) => 1,
        (false, false, true) => 0,
        (false, false, false) => 1,
    };
    ((n - k.abs() + shift) / 2).max(0)
}

/// Conway potential of `𝕃_n`, built from the two base cases by
/// `∇_n = (t2^2 + t2^-2) ∇_{n-1} - ∇_{n-2}`.
pub fn conway_potential_ln(n: u32) -> LaurentPoly2 {
    let t1_part = LaurentPoly2::from_terms([((1, 0), 1), ((-1, 0), -1)]);
    let base0 = -(&t1_part * &LaurentPoly2::from_terms([((0, 1), 1), ((0, -1), -1)]));
    let base1 = -(&t1_part * &LaurentPoly2::from_terms([((0, 3), 1), ((0, 1), -1), ((0, -1), 1), ((0, -3), -1)]));
    let step = LaurentPoly2::from_terms([((0, 2), 1), ((0, -2), 1)]);
    let (mut prev, mut cur) = (base0, base1);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&step * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Δ̃` from a Conway potential with odd exponents: `t^e ↦ t^{(e+1)/2}`.
pub fn conway_to_delta_tilde(conway: &LaurentPoly2) -> LaurentPoly2 {
    conway.map_exponents(|a, b| {
        debug_assert!(a % 2 != 0 && b % 2 != 0, "two-component potentials have odd exponents");
        ((a + 1).div_euclid(2), (b + 1).div_euclid(2))
    })
}

/// `Δ̃(𝕃_n) = -(t1 - 1)(t2^{n+1} - t2^n + ... + t2^{-n+1} - t2^{-n})`.
pub fn ln_delta_closed_form(n: u32) -> LaurentPoly2 {
    let n = n as i64;
    let series = LaurentPoly1::from_terms((-n..=n + 1).map(|j| (j, sign(n + 1 - j))));
    let t1_minus_one = LaurentPoly1::from_terms([(1, -1), (0, 1)]);
    LaurentPoly2::from_product(&t1_minus_one, &series)
}

/// Symmetrized `Δ(T(2,2n+1)) = Σ_{j=-n}^{n} (-1)^{n-j} t^j`.
pub fn two_strand_torus_alexander(n: u32) -> LaurentPoly1 {
    let n = n as i64;
    LaurentPoly1::from_terms((-n..=n).map(|j| (j, sign(n - j))))
}

/// Recursion-built two-variable data for `𝕃_n`. Equality with
/// [`ln_delta_closed_form`] is checked by the test suite.
pub fn link_alexander_ln(n: u32) -> LinkAlexander {
    LinkAlexander {
        delta: conway_to_delta_tilde(&conway_potential_ln(n)),
        component1: LaurentPoly1::one(),
        component2: two_strand_torus_alexander(n),
    }
}

/// The twelve-term `Δ̃(K(5,5))`.
fn k55_delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms([
        ((0, -1), -1),
        ((1, -1), 1),
        ((-1, 0), -1),
        ((0, 0), 1),
        ((1, 0), -1),
        ((2, 0), 1),
        ((-1, 1), 1),
        ((0, 1), -1),
        ((1, 1), 1),
        ((2, 1), -1),
        ((0, 2), 1),
        ((1, 2), -1),
    ])
}

pub fn link_alexander_two_bridge(a1: u32, a2: u32) -> Result<LinkAlexander, CatalogError> {
    if (a1, a2) != (5, 5) {
        return Err(CatalogError::NotInCatalog { a1, a2 });
    }
    Ok(LinkAlexander {
        delta: k55_delta(),
        component1: LaurentPoly1::one(),
        component2: LaurentPoly1::one(),
    })
}

impl LinkFamily {
    pub fn alexander(&self) -> Result<LinkAlexander, CatalogError> {
        match *self {
            LinkFamily::Ln(n) => Ok(link_alexander_ln(n)),
            LinkFamily::TwoBridge(a1, a2) => link_alexander_two_bridge(a1, a2),
        }
    }

    /// Whether `(p1, p2)`-surgery is recorded as an L-space.
    pub fn known_lspace_surgery(&self, p1: u64, p2: u64) -> bool {
        match *self {
            LinkFamily::Ln(n) => p1 >= 1 && p2 > 2 * n as u64,
            LinkFamily::TwoBridge(5, 5) => (p1, p2) == (3, 3),
            LinkFamily::TwoBridge(..) => false,
        }
    }

    /// Lower bound on `r2` (for any `r1 > 0`) above which surgeries are
    /// recorded as Stein fillable; the bound itself is excluded.
    pub fn stein_r2_bound(&self) -> Option<i64> {
        match *self {
            LinkFamily::Ln(n) => Some(4 * n as i64 + 4),
            LinkFamily::TwoBridge(..) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::alexander_of_closure;
    use crate::ring::parse_poly1;

    #[test]
    fn knm_2_1_is_t35() {
        let expected = parse_poly1("t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4").unwrap();
        assert_eq!(knm_alexander(2, 1), expected);
        assert_eq!(torus_alexander(5, 3), expected);
        assert_eq!(
            alexander_of_closure(&KnotFamily::Knm { n: 2, m: 1 }.braid_word()).unwrap(),
            expected
        );
    }

    #[test]
    fn small_oracles() {
        assert_eq!(torus_alexander(3, 2), parse_poly1("t - 1 + t^-1").unwrap());
        let sum: KnotFamily = "sum:torus:2,3+torus:2,3".parse().unwrap();
        let tre = torus_alexander(3, 2);
        assert_eq!(sum.alexander_closed_form(), &tre * &tre);
        assert_eq!(alexander_of_closure(&sum.braid_word()).unwrap(), &tre * &tre);
        for k in ["negtorus:2,5", "torus:4,3", "unknot"] {
            let k: KnotFamily = k.parse().unwrap();
            assert_eq!(
                alexander_of_closure(&k.braid_word()).unwrap(),
                k.alexander_closed_form()
            );
        }
    }

    #[test]
    fn metadata() {
        let m = KnotFamily::Knm { n: 3, m: 1 }.family_metadata();
        assert_eq!(
            (m.genus, m.tb, m.lspace_threshold, m.stein_threshold),
            (5, Some(9), Some(9), Some(13))
        );
        let m = KnotFamily::Kpnm { n: 2, m: 1 }.family_metadata();
        assert_eq!(
            (m.genus, m.tb, m.lspace_threshold, m.stein_threshold),
            (3, Some(5), Some(5), Some(13))
        );
        assert_eq!(
            KnotFamily::Torus { p: 5, q: 3 }.genus(),
            KnotFamily::Knm { n: 2, m: 1 }.genus()
        );
        assert_eq!(KnotFamily::Torus { p: 5, q: 3 }.family_metadata().stein_threshold, None);
    }

    #[test]
    fn subject_strings() {
        assert_eq!(
            "pretzel:-2,3,7".parse::<KnotFamily>().unwrap(),
            KnotFamily::Knm { n: 3, m: 1 }
        );
        assert_eq!(
            "torus:3,5".parse::<KnotFamily>().unwrap(),
            KnotFamily::Torus { p: 5, q: 3 }
        );
        assert_eq!("torus:unknot".parse::<KnotFamily>().unwrap(), KnotFamily::Unknot);
        assert_eq!("Ln:2".parse::<Subject>().unwrap(), Subject::Link(LinkFamily::Ln(2)));
        assert_eq!(
            "k2b:5,5".parse::<Subject>().unwrap(),
            Subject::Link(LinkFamily::TwoBridge(5, 5))
        );
        assert!("torus:2,4".parse::<KnotFamily>().is_err());
        assert!("knm:1,1".parse::<KnotFamily>().is_err());
        assert!(matches!(
            "foo:1".parse::<Subject>(),
            Err(CatalogError::UnknownSubject(_))
        ));
        let s: KnotFamily = "sum:torus:2,3+knm:3,1".parse().unwrap();
        assert_eq!(s.to_string(), "sum:torus:3,2+knm:3,1");
    }

    #[test]
    fn ln_base_cases() {
        let l1 = link_alexander_ln(1);
        let expected = LaurentPoly2::from_product(
            &parse_poly1("-t + 1").unwrap(),
            &parse_poly1("t^2 - t + 1 - t^-1").unwrap(),
        );
        assert_eq!(l1.delta, expected);
        for n in 0..9 {
            assert_eq!(link_alexander_ln(n).delta, ln_delta_closed_form(n), "n = {n}");
        }
    }

    #[test]
    fn torsion_tables_small() {
        let t: Vec<u64> = (0..=5).map(|i| knm_torsion_closed_form(3, 1, i)).collect();
        assert_eq!(t, vec![2, 2, 1, 1, 1, 0]);
        let t: Vec<u64> = (0..=3).map(|i| kpnm_torsion_closed_form(2, 1, i)).collect();
        assert_eq!(t, vec![1, 1, 1, 0]);
    }

    #[test]
    fn ln_h_origin() {
        assert_eq!(ln_h_closed_form(1, 0, 0), 1);
        assert_eq!(ln_h_closed_form(2, 0, 0), 2);
        assert_eq!(ln_h_closed_form(2, 3, 5), 0);
    }

    #[test]
    fn k55_table() {
        let k = link_alexander_two_bridge(5, 5).unwrap();
        assert_eq!(k.delta.support_len(), 12);
        assert_eq!(k.delta.swap_variables(), k.delta);
        assert_eq!(
            link_alexander_two_bridge(3, 3),
            Err(CatalogError::NotInCatalog { a1: 3, a2: 3 })
        );
    }
}
