//! The h-function of the links 𝕃_n on a window around the origin.
//!
//! cargo run --example link_h_function -- 2

use fillcheck::catalog::{link_alexander_ln, ln_h_closed_form};
use fillcheck::floer::HFunction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).as_deref().unwrap_or("2").parse()?;
    let data = link_alexander_ln(n);
    println!("Ln:{n}");
    println!("  delta tilde: {}", data.delta);
    println!("  components:  {} | {}", data.component1, data.component2);

    let h = HFunction::new(&data)?;
    let r = 2 * n as i64 + 2;
    print!("s1\\s2");
    for s2 in -r..=r {
        print!("{s2:>4}");
    }
    println!();
    let mut mismatches = 0;
    for s1 in -r..=r {
        print!("{s1:>5}");
        for s2 in -r..=r {
            let v = h.h(s1, s2);
            if v != ln_h_closed_form(n, s1, s2).into() {
                mismatches += 1;
            }
            print!("{v:>4}");
        }
        println!();
    }
    println!("closed form mismatches: {mismatches}");
    Ok(())
}
