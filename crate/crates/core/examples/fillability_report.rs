//! Fillability verdicts for catalog knots and links.
//!
//! cargo run --example fillability_report -- Ln:2 2 6
//! cargo run --example fillability_report -- knm:4,2 --json

use fillcheck::catalog::Subject;
use fillcheck::obstruct::verdict;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let rest: Vec<&String> = args.iter().filter(|a| *a != "--json").collect();

    let subjects: Vec<(Subject, Option<(u64, u64)>)> = match rest.as_slice() {
        [] => vec![
            ("knm:3,1".parse()?, None),
            ("kpnm:3,2".parse()?, None),
            ("torus:5,3".parse()?, None),
            ("Ln:2".parse()?, Some((2, 6))),
            ("k2b:5,5".parse()?, Some((3, 3))),
        ],
        [s] => vec![(s.parse()?, None)],
        [s, p1, p2] => vec![(s.parse()?, Some((p1.parse()?, p2.parse()?)))],
        _ => return Err("usage: fillability_report [subject [p1 p2]] [--json]".into()),
    };

    for (subject, pair) in subjects {
        let report = verdict(&subject, pair)?;
        if json {
            println!("{}", serde_json::to_string_pretty(&report.to_json())?);
        } else {
            println!("{}", report.to_text());
        }
    }
    Ok(())
}
