//! d-invariants of (3,3)-surgery on the two-bridge link K(5,5).

use fillcheck::catalog::link_alexander_two_bridge;
use fillcheck::floer::{d_link_surgery, HFunction};
use fillcheck::obstruct::owens_strle_test;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = HFunction::new(&link_alexander_two_bridge(5, 5)?)?;
    for s1 in -2..=2 {
        let row: Vec<String> = (-2..=2).map(|s2| h.h(s1, s2).to_string()).collect();
        println!("h({s1:>2}, -2..2) = {}", row.join(" "));
    }

    let table = d_link_surgery(&h, 3, 3)?;
    for ((i1, i2), d) in table.iter() {
        println!("d(({i1},{i2})) = {d}");
    }
    let test = owens_strle_test(table.max(), 9)?;
    println!(
        "max d = {}, threshold {}, obstructed: {}",
        test.max_d, test.threshold, test.obstructed
    );
    Ok(())
}
