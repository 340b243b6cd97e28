//! Randomized checks of 2x2 matrix trace identities over F_p.
//!
//! cargo run --example trace_identities -- 5000

use multicurve::charvar::{verify_identities, PrimeField};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1000);
    let f = PrimeField::default();
    let reports = verify_identities(&f, trials, 42);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
