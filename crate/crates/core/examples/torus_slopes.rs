//! Modular inverses, Hirzebruch-Jung expansions and m(T(p,q)).
//!
//! cargo run --example torus_slopes -- 7 4

use fillcheck::catalog::KnotFamily;
use fillcheck::slopes::{sfc_known, slope_invariants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let pairs = match args.as_slice() {
        [p, q] => vec![(*p.max(q), *p.min(q))],
        _ => vec![(3, 2), (5, 2), (5, 3), (4, 3), (5, 4), (7, 3), (7, 4), (11, 7)],
    };
    println!(
        "{:>8} {:>4} {:>4}  {:<16} {:>8}",
        "T(p,q)", "q*", "p*", "p/q digits", "m"
    );
    for (p, q) in pairs {
        let inv = slope_invariants(p, q)?;
        let digits: Vec<String> = inv.cf.iter().map(u64::to_string).collect();
        println!(
            "{:>8} {:>4} {:>4}  {:<16} {:>8}",
            format!("({p},{q})"),
            inv.q_star,
            inv.p_star,
            format!("[{}]", digits.join(",")),
            inv.m_value.to_string()
        );
    }
    for knot in ["negtorus:3,5", "unknot", "knm:2,2", "knm:4,1"] {
        let k: KnotFamily = knot.parse()?;
        println!("{k}: {}", sfc_known(&k));
    }
    Ok(())
}
