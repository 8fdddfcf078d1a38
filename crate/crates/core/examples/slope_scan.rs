//! Scans integral slopes of a twisted torus knot past the obstructed window
//! and reports where the d-invariant test keeps firing.
//!
//! cargo run --example slope_scan -- knm:3,1 20

use fillcheck::catalog::KnotFamily;
use fillcheck::floer::{d_knot_surgery, TorsionCoefficients};
use fillcheck::obstruct::{owens_strle_test, verdict_knot, WindowKind};
use fillcheck::ring::ExactRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let knot: KnotFamily = args.next().as_deref().unwrap_or("knm:3,1").parse()?;
    let top: u64 = args.next().as_deref().unwrap_or("20").parse()?;

    let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form())?;
    let report = verdict_knot(&knot)?;
    let floor = 2 * torsion.genus() - 1;
    println!("{knot}: L-space slopes from {floor}");
    for p in floor..=top {
        let table = d_knot_surgery(&torsion, p)?;
        let test = owens_strle_test(table.max(), p)?;
        let kind = match report.classify(&ExactRational::from_int(p)) {
            WindowKind::Nonfillable => "nonfillable",
            WindowKind::Stein => "stein",
            WindowKind::Unknown => "unknown",
        };
        let flag = if test.obstructed && kind == "stein" {
            "  <- obstructed inside a stein window"
        } else {
            ""
        };
        println!(
            "r = {p:>3}  max d = {:>8}  threshold {:>6}  obstructed {:<5}  {kind}{flag}",
            test.max_d.to_string(),
            test.threshold.to_string(),
            test.obstructed
        );
    }
    Ok(())
}
