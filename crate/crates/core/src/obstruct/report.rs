use std::fmt::Write as _;

use serde::Serialize;

use super::{
    complement, criterion_2g_minus_1, extend_downward, owens_strle_test, pairwise_disjoint, Criterion2gMinus1,
    Interval, OwensStrleTest,
};
use crate::catalog::{KnotFamily, LinkFamily, Subject};
use crate::floer::{d_knot_surgery, d_link_surgery, HFunction, TorsionCoefficients};
use crate::ring::ExactRational;
use crate::slopes::{sfc_known, SfcValue};
use crate::Error;

pub mod tags {
    pub const OWENS_STRLE: &str = "owens-strle-bound";
    pub const NEG_DEF_COBORDISM: &str = "negative-definite-cobordism";
    pub const KNOT_SURGERY_D: &str = "d-invariant-surgery-formula";
    pub const LINK_SURGERY_D: &str = "link-d-invariant-formula";
    pub const LSPACE_KNOT_FLOOR: &str = "lspace-knot-floor";
    pub const LSPACE_LINK_REGION: &str = "lspace-link-region";
    pub const K55_LSPACE: &str = "k55-lspace-surgery";
    pub const LSPACE_FILLINGS: &str = "lspace-fillings-negative-definite";
    pub const TB_STEIN: &str = "tb-stein";
    pub const TWISTED_STEIN: &str = "twisted-torus-stein-threshold";
    pub const TORUS_SFC: &str = "torus-knot-sfc";
    pub const NEG_TORUS_SFC: &str = "negative-torus-sfc";
    pub const UNKNOT_SFC: &str = "unknot-sfc";
    pub const LN_STEIN: &str = "ln-stein-region";
    pub const LN_CASES: &str = "ln-surgery-cases";
    pub const IK_CRITERION: &str = "ik-criterion";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowKind {
    Nonfillable,
    Stein,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub window: Interval,
    pub reason: String,
    pub citations: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Note {
    pub text: String,
    pub citation: Option<&'static str>,
}

/// A d-invariant table used as evidence, with its Owens-Strle test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    /// `"10"` for a knot surgery, `"(4,5)"` for a link surgery.
    pub slope: String,
    pub order: u64,
    pub max_d: ExactRational,
    /// Spin^c label attaining the maximum.
    pub argmax: String,
    pub all_negative: bool,
    pub test: OwensStrleTest,
    pub table: serde_json::Value,
}

/// Which hypothesis of the `𝕃_n` surgery theorem a slope pair matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ln4Case {
    /// `p1 ∈ {2,3,4}`, `p2 = 2n+1`
    SmallP1,
    /// `p1 = 5`, `p2 = 2n+1 > 5`
    FiveP1,
    /// `p1 = 2`, `p2 = 2n+2`, `n+1` not a square
    NonSquare,
    /// `p1 = 2`, `p2 = 2n+2` with `n+1` a square: the theorem does not apply
    SquareInapplicable,
    Outside,
}

impl Ln4Case {
    pub fn detect(n: u32, p1: u64, p2: u64) -> Self {
        let n = n as u64;
        let odd = 2 * n + 1;
        match (p1, p2) {
            (2..=4, p2) if p2 == odd => Ln4Case::SmallP1,
            (5, p2) if p2 == odd && 5 < odd => Ln4Case::FiveP1,
            (2, p2) if p2 == odd + 1 => {
                let root = (n + 1).isqrt();
                if root * root == n + 1 {
                    Ln4Case::SquareInapplicable
                } else {
                    Ln4Case::NonSquare
                }
            }
            _ => Ln4Case::Outside,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FillabilityReport {
    pub subject: String,
    /// Which slope the windows are measured along.
    pub axis: String,
    pub nonfillable: Vec<Claim>,
    pub stein: Vec<Claim>,
    pub unknown: Vec<Interval>,
    pub evidence: Vec<Evidence>,
    pub criterion: Option<Criterion2gMinus1>,
    pub notes: Vec<Note>,
}

impl FillabilityReport {
    fn new(subject: String, axis: String) -> Self {
        Self {
            subject,
            axis,
            nonfillable: Vec::new(),
            stein: Vec::new(),
            unknown: Vec::new(),
            evidence: Vec::new(),
            criterion: None,
            notes: Vec::new(),
        }
    }

    fn note(&mut self, text: impl Into<String>, citation: Option<&'static str>) {
        self.notes.push(Note {
            text: text.into(),
            citation,
        });
    }

    /// Adds a non-fillable claim unless it contradicts a Stein claim, in
    /// which case the contradiction is recorded instead.
    fn claim_nonfillable(&mut self, claim: Claim) {
        if let Some(stein) = self.stein.iter().find(|s| s.window.intersects(&claim.window)) {
            let text = format!(
                "obstruction on {} overlaps the Stein window {}; recorded as a note rather than a window",
                claim.window, stein.window
            );
            self.note(text, Some(tags::OWENS_STRLE));
        } else {
            self.nonfillable.push(claim);
        }
    }

    fn finish(mut self) -> Self {
        let all: Vec<Interval> = self
            .nonfillable
            .iter()
            .chain(&self.stein)
            .map(|c| c.window.clone())
            .collect();
        debug_assert!(pairwise_disjoint(&all), "verdict windows overlap");
        self.unknown = complement(&all);
        self
    }

    pub fn windows_disjoint(&self) -> bool {
        let mut all: Vec<Interval> = self
            .nonfillable
            .iter()
            .chain(&self.stein)
            .map(|c| c.window.clone())
            .collect();
        all.extend(self.unknown.iter().cloned());
        pairwise_disjoint(&all)
    }

    pub fn classify(&self, slope: &ExactRational) -> WindowKind {
        if self.nonfillable.iter().any(|c| c.window.contains(slope)) {
            WindowKind::Nonfillable
        } else if self.stein.iter().any(|c| c.window.contains(slope)) {
            WindowKind::Stein
        } else {
            WindowKind::Unknown
        }
    }

    /// True when some non-fillable claim exists.
    pub fn is_nonfillable(&self) -> bool {
        !self.nonfillable.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let cite = |tags: &[&str]| tags.iter().map(|t| format!("[{t}]")).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "subject {} (slope axis {})", self.subject, self.axis);
        for c in &self.nonfillable {
            let _ = writeln!(out, "nonfillable {}: {} {}", c.window, c.reason, cite(&c.citations));
        }
        for c in &self.stein {
            let _ = writeln!(out, "stein {}: {} {}", c.window, c.reason, cite(&c.citations));
        }
        for iv in &self.unknown {
            let _ = writeln!(out, "unknown {iv}");
        }
        for e in &self.evidence {
            let d = &e.test.decomposition;
            let _ = writeln!(
                out,
                "evidence at {}: |H1| = {} = {}*{}^2, max d = {} at {}, threshold {}, all negative: {}, obstructed: {} {}",
                e.slope,
                e.order,
                d.z,
                d.w,
                e.max_d,
                e.argmax,
                e.test.threshold,
                yes_no(e.all_negative),
                yes_no(e.test.obstructed),
                cite(&[tags::OWENS_STRLE]),
            );
        }
        if let Some(c) = &self.criterion {
            let seq: Vec<String> = c
                .steps
                .iter()
                .map(|s| format!("i_{}={} (t={})", s.k, s.i_k, s.t_i_k))
                .collect();
            let _ = writeln!(
                out,
                "criterion at 2g-1: {}; holds: {} {}",
                seq.join(", "),
                yes_no(c.holds),
                cite(&[tags::IK_CRITERION]),
            );
        }
        for n in &self.notes {
            match n.citation {
                Some(t) => {
                    let _ = writeln!(out, "note: {} {}", n.text, cite(&[t]));
                }
                None => {
                    let _ = writeln!(out, "note: {}", n.text);
                }
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn knot_evidence(torsion: &TorsionCoefficients, p: u64) -> Result<Evidence, Error> {
    let table = d_knot_surgery(torsion, p)?;
    let test = owens_strle_test(table.max(), p)?;
    Ok(Evidence {
        slope: p.to_string(),
        order: p,
        max_d: table.max().clone(),
        argmax: format!("i = {}", table.argmax()),
        all_negative: table.all_negative(),
        test,
        table: table.to_json(),
    })
}

fn stein_claims_knot(knot: &KnotFamily, report: &mut FillabilityReport) {
    let meta = knot.family_metadata();
    if let Some(tb) = meta.tb {
        report.stein.push(Claim {
            window: Interval::below(ExactRational::from_int(tb)),
            reason: format!("r < TB = {tb}"),
            citations: vec![tags::TB_STEIN],
        });
    }
    if let Some(threshold) = meta.stein_threshold {
        let formula = match knot {
            KnotFamily::Knm { .. } => "9m+4n-8",
            _ => "9m+4n-4",
        };
        report.stein.push(Claim {
            window: Interval::at_least(ExactRational::from_int(threshold)),
            reason: format!("r >= {formula} = {threshold}"),
            citations: vec![tags::TWISTED_STEIN],
        });
        return;
    }
    let tag = match knot {
        KnotFamily::Torus { .. } => tags::TORUS_SFC,
        KnotFamily::NegTorus { .. } => tags::NEG_TORUS_SFC,
        KnotFamily::Unknot => tags::UNKNOT_SFC,
        _ => return,
    };
    if let SfcValue::Exact(sfc) = sfc_known(knot) {
        report.stein.push(Claim {
            window: Interval::above(sfc.clone()),
            reason: format!("r > Sfc = {sfc}"),
            citations: vec![tag],
        });
    }
}

/// Verdict for surgeries on a catalog knot.
pub fn verdict_knot(knot: &KnotFamily) -> Result<FillabilityReport, Error> {
    let mut report = FillabilityReport::new(knot.to_string(), "r".to_string());
    stein_claims_knot(knot, &mut report);
    let meta = knot.family_metadata();
    let Some(floor) = meta.lspace_threshold else {
        report.note(
            "no L-space surgery floor is recorded for this subject, so the obstruction section is omitted",
            None,
        );
        return Ok(report.finish());
    };
    let g = meta.genus as u64;
    let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form())?;
    let test_slope = 2 * g;
    let evidence = knot_evidence(&torsion, test_slope)?;
    let floor_q = ExactRational::from_int(floor);
    if evidence.test.obstructed {
        if let Some(window) = extend_downward(&ExactRational::from_int(test_slope as i64), &floor_q)? {
            report.claim_nonfillable(Claim {
                window,
                reason: format!(
                    "max d at r = {test_slope} is {} < {}; slopes down to the L-space floor 2g-1 = {floor} inherit it",
                    evidence.max_d, evidence.test.threshold
                ),
                citations: vec![
                    tags::KNOT_SURGERY_D,
                    tags::OWENS_STRLE,
                    tags::NEG_DEF_COBORDISM,
                    tags::LSPACE_KNOT_FLOOR,
                ],
            });
        }
    } else {
        report.note(
            format!("the test at r = 2g = {test_slope} does not obstruct"),
            Some(tags::OWENS_STRLE),
        );
    }
    report.evidence.push(evidence);
    report.criterion = Some(criterion_2g_minus_1(g, &torsion)?);
    Ok(report.finish())
}

/// [`verdict_knot`] plus evidence at one extra slope.
pub fn verdict_knot_at(knot: &KnotFamily, slope: &ExactRational) -> Result<FillabilityReport, Error> {
    let mut report = verdict_knot(knot)?;
    let kind = report.classify(slope);
    report.note(format!("r = {slope} lies in the {} window", window_name(kind)), None);
    let floor = knot.family_metadata().lspace_threshold;
    let integral = slope
        .to_integer()
        .and_then(|v| u64::try_from(v).ok())
        .filter(|&p| p >= 1);
    if let (Some(floor), Some(p)) = (floor, integral) {
        let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form())?;
        let evidence = knot_evidence(&torsion, p)?;
        if evidence.test.obstructed && p as i64 >= floor {
            let text = match kind {
                WindowKind::Stein => format!(
                    "r = {p} is an L-space surgery whose d-invariants obstruct negative-definite fillings, yet it lies in a recorded Stein window"
                ),
                _ => format!("r = {p} is an L-space surgery whose d-invariants obstruct negative-definite fillings"),
            };
            report.note(text, Some(tags::LSPACE_FILLINGS));
        }
        if !report.evidence.iter().any(|e| e.slope == evidence.slope) {
            report.evidence.push(evidence);
        }
    }
    Ok(report)
}

fn window_name(kind: WindowKind) -> &'static str {
    match kind {
        WindowKind::Nonfillable => "nonfillable",
        WindowKind::Stein => "stein",
        WindowKind::Unknown => "unknown",
    }
}

/// Verdict for `(p1, p2)`-surgery on a catalog link. Windows are measured
/// along `r2` with `r1 = p1` fixed.
pub fn verdict_link(link: &LinkFamily, p1: u64, p2: u64) -> Result<FillabilityReport, Error> {
    let mut report = FillabilityReport::new(format!("{link} at ({p1},{p2})"), format!("r2 at r1 = {p1}"));
    let h = HFunction::new(&link.alexander()?)?;
    let table = d_link_surgery(&h, p1, p2)?;
    let order = p1 * p2;
    let test = owens_strle_test(table.max(), order)?;
    let (a1, a2) = table.argmax();
    let evidence = Evidence {
        slope: format!("({p1},{p2})"),
        order,
        max_d: table.max().clone(),
        argmax: format!("(i1,i2) = ({a1},{a2})"),
        all_negative: table.all_negative(),
        test,
        table: table.to_json(),
    };

    if let Some(bound) = link.stein_r2_bound() {
        report.stein.push(Claim {
            window: Interval::above(ExactRational::from_int(bound)),
            reason: format!("r1 > 0 and r2 > 4n+4 = {bound}"),
            citations: vec![tags::LN_STEIN],
        });
    }

    if let LinkFamily::Ln(n) = *link {
        match Ln4Case::detect(n, p1, p2) {
            Ln4Case::SmallP1 | Ln4Case::FiveP1 => report.note(
                format!("(p1,p2) = ({p1},{p2}) matches the p2 = 2n+1 hypothesis; expected max d < 0"),
                Some(tags::LN_CASES),
            ),
            Ln4Case::NonSquare => {
                report.note(
                    format!("(p1,p2) = (2,{p2}) with n+1 = {} not a square; expected max d < 1/6 with |H1| = {order} not a square", n + 1),
                    Some(tags::LN_CASES),
                );
            }
            Ln4Case::SquareInapplicable => report.note(
                format!(
                    "criterion inapplicable: n+1 = {} is a square, so the (2, 2n+2) case does not apply",
                    n + 1
                ),
                Some(tags::LN_CASES),
            ),
            Ln4Case::Outside => {}
        }
    }

    let lspace_tag = match link {
        LinkFamily::Ln(_) => tags::LSPACE_LINK_REGION,
        LinkFamily::TwoBridge(..) => tags::K55_LSPACE,
    };
    if !link.known_lspace_surgery(p1, p2) {
        report.note(
            format!("({p1},{p2})-surgery is not recorded as an L-space, so no fillability conclusion is drawn"),
            None,
        );
    } else if evidence.test.obstructed {
        report.claim_nonfillable(Claim {
            window: Interval::point(ExactRational::from(p2 as i64)),
            reason: format!(
                "max d at ({p1},{p2}) is {} < {}; the surgery is an L-space",
                evidence.max_d, evidence.test.threshold
            ),
            citations: vec![
                tags::LINK_SURGERY_D,
                tags::OWENS_STRLE,
                tags::LSPACE_FILLINGS,
                lspace_tag,
            ],
        });
        report.note(
            "larger rational (r1, r2) inherit the obstruction through negative-definite cobordisms only where the surgery is an L-space; for rational pairs this is conditional",
            Some(tags::NEG_DEF_COBORDISM),
        );
    } else {
        report.note(
            format!("the test at ({p1},{p2}) does not obstruct"),
            Some(tags::OWENS_STRLE),
        );
    }
    report.evidence.push(evidence);
    Ok(report.finish())
}

/// Dispatches on the subject kind; links need a slope pair.
pub fn verdict(subject: &Subject, pair: Option<(u64, u64)>) -> Result<FillabilityReport, Error> {
    match (subject, pair) {
        (Subject::Knot(k), _) => verdict_knot(k),
        (Subject::Link(l), Some((p1, p2))) => verdict_link(l, p1, p2),
        (Subject::Link(_), None) => Err(Error::Usage("link subjects need --p1 and --p2".to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knm_3_1() {
        let r = verdict_knot(&KnotFamily::Knm { n: 3, m: 1 }).unwrap();
        let windows: Vec<String> = r.nonfillable.iter().map(|c| c.window.to_string()).collect();
        assert_eq!(windows, vec!["[9, 10]"]);
        let stein: Vec<String> = r.stein.iter().map(|c| c.window.to_string()).collect();
        assert_eq!(stein, vec!["(-inf, 9)", "[13, inf)"]);
        let unknown: Vec<String> = r.unknown.iter().map(|c| c.to_string()).collect();
        assert_eq!(unknown, vec!["(10, 13)"]);
        assert!(r.windows_disjoint());
        assert_eq!(r.classify(&ExactRational::new(19, 2)), WindowKind::Nonfillable);
        assert_eq!(r.classify(&ExactRational::from_int(11)), WindowKind::Unknown);
    }

    #[test]
    fn k55_link() {
        let r = verdict_link(&LinkFamily::TwoBridge(5, 5), 3, 3).unwrap();
        assert!(r.is_nonfillable());
        assert_eq!(r.evidence[0].max_d, ExactRational::new(-1, 3));
    }

    #[test]
    fn ln2_case_one() {
        let r = verdict_link(&LinkFamily::Ln(2), 4, 5).unwrap();
        assert!(r.is_nonfillable());
        assert!(r.evidence[0].all_negative);
    }

    #[test]
    fn case_detection() {
        assert_eq!(Ln4Case::detect(2, 2, 6), Ln4Case::NonSquare);
        assert_eq!(Ln4Case::detect(3, 2, 8), Ln4Case::SquareInapplicable);
        assert_eq!(Ln4Case::detect(2, 5, 5), Ln4Case::Outside);
        assert_eq!(Ln4Case::detect(3, 5, 7), Ln4Case::FiveP1);
    }

    #[test]
    fn negative_torus_has_no_floor() {
        let r = verdict_knot(&KnotFamily::NegTorus { p: 5, q: 3 }).unwrap();
        assert!(r.nonfillable.is_empty());
        assert_eq!(r.unknown.len(), 1);
        assert_eq!(r.unknown[0].to_string(), "{-15}");
    }
}
