//! Alexander polynomials from braid closures, checked against the closed
//! forms of the catalog.
//!
//! cargo run --example alexander_from_braids -- "s1^-1 s2 s1^-1 s2"

use fillcheck::braid::{alexander_of_closure, BraidWord};
use fillcheck::catalog::KnotFamily;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(text) = std::env::args().nth(1) {
        let word = BraidWord::parse(&text, None)?;
        println!("{word} on {} strands: {}", word.strands(), alexander_of_closure(&word)?);
        return Ok(());
    }

    for subject in [
        "torus:3,2",
        "knm:2,1",
        "knm:3,1",
        "kpnm:4,2",
        "negtorus:3,4",
        "sum:torus:3,2+knm:3,1",
    ] {
        let knot: KnotFamily = subject.parse()?;
        let word = knot.braid_word();
        let burau = alexander_of_closure(&word)?;
        let closed = knot.alexander_closed_form();
        let flag = if burau == closed { "agree" } else { "DISAGREE" };
        println!("{knot:<24} genus {:<2} {flag}  {closed}", knot.genus());
    }

    // figure-eight knot
    let fig8 = BraidWord::parse("s1 s2^-1 s1 s2^-1", None)?;
    println!("figure-eight: {}", alexander_of_closure(&fig8)?);

    // closures with more than one component have no one-variable polynomial here
    let hopf = BraidWord::parse("s1^2", None)?;
    println!("Hopf link: {}", alexander_of_closure(&hopf).unwrap_err());
    Ok(())
}
