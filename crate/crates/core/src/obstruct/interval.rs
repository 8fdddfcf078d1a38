use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::ring::ExactRational;

/// One end of a slope interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(ExactRational),
    Open(ExactRational),
}

impl Bound {
    fn value(&self) -> Option<&ExactRational> {
        match self {
            Bound::Unbounded => None,
            Bound::Closed(v) | Bound::Open(v) => Some(v),
        }
    }

    fn flipped(&self) -> Bound {
        match self {
            Bound::Unbounded => Bound::Unbounded,
            Bound::Closed(v) => Bound::Open(v.clone()),
            Bound::Open(v) => Bound::Closed(v.clone()),
        }
    }
}

/// Order of lower bounds: a smaller lower bound admits more points.
fn cmp_lower(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        (Bound::Unbounded, _) => Ordering::Less,
        (_, Bound::Unbounded) => Ordering::Greater,
        _ => {
            let by_value = a.value().cmp(&b.value());
            by_value.then_with(|| match (a, b) {
                (Bound::Closed(_), Bound::Open(_)) => Ordering::Less,
                (Bound::Open(_), Bound::Closed(_)) => Ordering::Greater,
                _ => Ordering::Equal,
            })
        }
    }
}

/// Order of upper bounds: a larger upper bound admits more points.
fn cmp_upper(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        (Bound::Unbounded, _) => Ordering::Greater,
        (_, Bound::Unbounded) => Ordering::Less,
        _ => a.value().cmp(&b.value()).then_with(|| match (a, b) {
            (Bound::Open(_), Bound::Closed(_)) => Ordering::Less,
            (Bound::Closed(_), Bound::Open(_)) => Ordering::Greater,
            _ => Ordering::Equal,
        }),
    }
}

/// A connected subset of the rational line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn closed(lo: ExactRational, hi: ExactRational) -> Self {
        Self {
            lo: Bound::Closed(lo),
            hi: Bound::Closed(hi),
        }
    }

    pub fn point(x: ExactRational) -> Self {
        Self::closed(x.clone(), x)
    }

    /// `(-∞, hi)`
    pub fn below(hi: ExactRational) -> Self {
        Self {
            lo: Bound::Unbounded,
            hi: Bound::Open(hi),
        }
    }

    /// `[lo, ∞)`
    pub fn at_least(lo: ExactRational) -> Self {
        Self {
            lo: Bound::Closed(lo),
            hi: Bound::Unbounded,
        }
    }

    /// `(lo, ∞)`
    pub fn above(lo: ExactRational) -> Self {
        Self {
            lo: Bound::Open(lo),
            hi: Bound::Unbounded,
        }
    }

    pub fn everything() -> Self {
        Self {
            lo: Bound::Unbounded,
            hi: Bound::Unbounded,
        }
    }

    pub fn is_empty(&self) -> bool {
        match (self.lo.value(), self.hi.value()) {
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Greater => true,
                Ordering::Equal => !matches!((&self.lo, &self.hi), (Bound::Closed(_), Bound::Closed(_))),
                Ordering::Less => false,
            },
            _ => false,
        }
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        let above_lo = match &self.lo {
            Bound::Unbounded => true,
            Bound::Closed(a) => x >= a,
            Bound::Open(a) => x > a,
        };
        let below_hi = match &self.hi {
            Bound::Unbounded => true,
            Bound::Closed(b) => x <= b,
            Bound::Open(b) => x < b,
        };
        above_lo && below_hi
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let lo = if cmp_lower(&self.lo, &other.lo) == Ordering::Less {
            other.lo.clone()
        } else {
            self.lo.clone()
        };
        let hi = if cmp_upper(&self.hi, &other.hi) == Ordering::Greater {
            other.hi.clone()
        } else {
            self.hi.clone()
        };
        Self { lo, hi }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_empty() && !other.is_empty() && !self.intersection(other).is_empty()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Bound::Closed(a), Bound::Closed(b)) = (&self.lo, &self.hi) {
            if a == b {
                return write!(f, "{{{a}}}");
            }
        }
        match &self.lo {
            Bound::Unbounded => write!(f, "(-inf, ")?,
            Bound::Closed(a) => write!(f, "[{a}, ")?,
            Bound::Open(a) => write!(f, "({a}, ")?,
        }
        match &self.hi {
            Bound::Unbounded => write!(f, "inf)"),
            Bound::Closed(b) => write!(f, "{b}]"),
            Bound::Open(b) => write!(f, "{b})"),
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Complement of a union of pairwise disjoint intervals, as sorted
/// disjoint intervals. Empty inputs are ignored.
pub fn complement(intervals: &[Interval]) -> Vec<Interval> {
    let mut sorted: Vec<&Interval> = intervals.iter().filter(|i| !i.is_empty()).collect();
    sorted.sort_by(|a, b| cmp_lower(&a.lo, &b.lo));
    let mut gaps = Vec::new();
    let mut lo = Bound::Unbounded;
    let mut closed_off = false;
    for iv in sorted {
        if matches!(iv.lo, Bound::Unbounded) {
            lo = iv.hi.flipped();
            closed_off = matches!(iv.hi, Bound::Unbounded);
            continue;
        }
        let gap = Interval {
            lo: lo.clone(),
            hi: iv.lo.flipped(),
        };
        if !gap.is_empty() {
            gaps.push(gap);
        }
        lo = iv.hi.flipped();
        if matches!(iv.hi, Bound::Unbounded) {
            closed_off = true;
        }
    }
    if !closed_off {
        let tail = Interval {
            lo,
            hi: Bound::Unbounded,
        };
        if !tail.is_empty() {
            gaps.push(tail);
        }
    }
    gaps
}

/// True when no two nonempty intervals share a point.
pub fn pairwise_disjoint(intervals: &[Interval]) -> bool {
    intervals
        .iter()
        .enumerate()
        .all(|(k, a)| intervals[k + 1..].iter().all(|b| !a.intersects(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from_int(n)
    }

    #[test]
    fn complement_of_verdict_windows() {
        let windows = [
            Interval::closed(q(9), q(10)),
            Interval::below(q(9)),
            Interval::at_least(q(13)),
        ];
        let gaps = complement(&windows);
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].to_string(), "(10, 13)");
        assert!(pairwise_disjoint(&windows));
    }

    #[test]
    fn point_gap() {
        let windows = [Interval::below(q(-1)), Interval::above(q(-1))];
        let gaps = complement(&windows);
        assert_eq!(gaps, vec![Interval::point(q(-1))]);
        assert_eq!(gaps[0].to_string(), "{-1}");
    }

    #[test]
    fn complement_of_nothing_is_everything() {
        assert_eq!(complement(&[]), vec![Interval::everything()]);
        assert_eq!(Interval::everything().to_string(), "(-inf, inf)");
    }

    #[test]
    fn touching_intervals() {
        let a = Interval::closed(q(1), q(2));
        let b = Interval::above(q(2));
        assert!(!a.intersects(&b));
        assert!(a.intersects(&Interval::at_least(q(2))));
        assert!(!Interval::below(q(1)).intersects(&Interval::at_least(q(1))));
        assert_eq!(complement(&[a, b]).len(), 1);
    }

    #[test]
    fn emptiness_and_membership() {
        assert!(Interval::closed(q(6), q(5)).is_empty());
        assert!(!Interval::point(q(5)).is_empty());
        let iv = Interval::above(q(3));
        assert!(!iv.contains(&q(3)));
        assert!(iv.contains(&ExactRational::new(7, 2)));
    }
}
