//! Polygon dissections: counts by size, the polynomials f_m and their
//! alternating sums.
//!
//! cargo run --example dissections -- 8

use multicurve::polygraph::{
    containing_alternating_sum, dissection_counts, dissection_euler_sum, dissection_polynomial,
    enumerate_dissections,
};

fn main() -> multicurve::Result<()> {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    for m in 3..=top {
        let euler = if m >= 4 {
            dissection_euler_sum(m)?.to_string()
        } else {
            "-".into()
        };
        println!(
            "m={m:>2}  counts {:?}  f = {}  euler sum {euler}",
            dissection_counts(m)?,
            dissection_polynomial(m)?
        );
    }
    let m = top.max(4);
    for g in enumerate_dissections(m, 1)?.iter().take(3) {
        println!(
            "dissections of the {m}-gon containing {g}: alternating sum {}",
            containing_alternating_sum(m, g)?
        );
    }
    Ok(())
}
