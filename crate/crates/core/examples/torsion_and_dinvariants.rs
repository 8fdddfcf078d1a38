//! Torsion coefficients of an L-space knot and the d-invariants of its
//! integral surgeries.
//!
//! cargo run --example torsion_and_dinvariants -- knm:3,1 10

use fillcheck::catalog::KnotFamily;
use fillcheck::floer::{d_knot_surgery, d_lens, TorsionCoefficients};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let knot: KnotFamily = args.next().as_deref().unwrap_or("knm:3,1").parse()?;
    let p: u64 = args.next().as_deref().unwrap_or("10").parse()?;

    let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form())?;
    let ts: Vec<String> = torsion.values().iter().map(|t| t.to_string()).collect();
    println!("{knot}: genus {}, t_0.. = [{}]", torsion.genus(), ts.join(", "));

    let table = d_knot_surgery(&torsion, p)?;
    println!("{:>4}  {:>10}  {:>10}", "i", "lens", "d");
    for (i, d) in table.entries().iter().enumerate() {
        println!(
            "{i:>4}  {:>10}  {:>10}",
            d_lens(p, i as u64)?.to_string(),
            d.to_string()
        );
    }
    println!(
        "max d = {} at i = {}, all negative: {}",
        table.max(),
        table.argmax(),
        table.all_negative()
    );
    Ok(())
}
