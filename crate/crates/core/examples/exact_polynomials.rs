//! Exact Laurent polynomial and rational arithmetic.
//!
//! cargo run --example exact_polynomials -- "t^2 - t + 1 - t^-1 + t^-2"

use fillcheck::ring::{geometric_sum, parse_poly, ExactRational, LaurentPoly1, ParsedPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(text) = std::env::args().nth(1) {
        match parse_poly(&text)? {
            ParsedPoly::One(p) => println!(
                "one variable: {p}, symmetric: {}, value at 1: {}",
                p.is_symmetric(),
                p.eval_at_one()
            ),
            ParsedPoly::Two(p) => println!("two variables: {p}, {} terms", p.support_len()),
        }
        return Ok(());
    }

    let trefoil = LaurentPoly1::from_terms([(1, 1), (0, -1), (-1, 1)]);
    let square = trefoil.pow(2);
    println!("({trefoil})^2 = {square}");
    println!("back again: {}", square.div_exact(&trefoil)?);

    // (t^3 - 1) / (t - 1)
    let cube = LaurentPoly1::from_terms([(3, 1), (0, -1)]);
    let step = LaurentPoly1::from_terms([(1, 1), (0, -1)]);
    println!("(t^3 - 1)/(t - 1) = {} = {}", cube.div_exact(&step)?, geometric_sum(3));
    println!(
        "t^3 - 1 by t + 1: {}",
        cube.div_exact(&LaurentPoly1::from_terms([(1, 1), (0, 1)])).unwrap_err()
    );

    let x: ExactRational = "-27/20".parse()?;
    let y = ExactRational::new(1, 4);
    println!("{x} + {y} = {}, floor {}", x.clone() + y.clone(), x.floor());
    Ok(())
}
