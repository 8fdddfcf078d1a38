//! Runs the verification matrix on a custom grid.
//!
//! cargo run --release --example reproduce_suite -- n=2..12,m=1..8,l=1..10

use fillcheck::reproduce::{run_scope, Grid, Scope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid: Grid = match std::env::args().nth(1) {
        Some(text) => text.parse()?,
        None => Grid::default(),
    };
    let started = std::time::Instant::now();
    let outcomes = run_scope(Scope::All, &grid);
    for o in &outcomes {
        println!(
            "{} {:<18} {:>6} checks",
            if o.passed { "PASS" } else { "FAIL" },
            o.scope,
            o.checked
        );
        for f in &o.failures {
            println!("    {f}");
        }
    }
    println!("{:?} on {grid:?}", started.elapsed());
    if outcomes.iter().any(|o| !o.passed) {
        std::process::exit(3);
    }
    Ok(())
}
