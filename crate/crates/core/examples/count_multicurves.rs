//! Multicurve counts by length, from diagrams and from the closed form.
//!
//! cargo run --release --example count_multicurves -- 1 2 8

use multicurve::diagrams::{series_all, series_nonperipheral};
use multicurve::polygraph::{all_multicurve_series, nonperipheral_series};
use multicurve::surface::SurfaceSig;

fn main() -> multicurve::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let g = args.first().copied().unwrap_or(1) as u32;
    let n = args.get(1).copied().unwrap_or(2) as u32;
    let max = args.get(2).copied().unwrap_or(7);
    let sig = SurfaceSig::new(g, n)?;

    let z = nonperipheral_series(sig)?;
    println!("{sig}: Z(t) = {z}");
    let all = series_all(sig, max);
    let all_closed = all_multicurve_series(sig.rank())?.series_coeffs(max);
    let c = series_nonperipheral(sig, max);
    let c_closed = z.series_coeffs(max);
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "r", "all", "closed", "c", "closed"
    );
    for r in 0..=max {
        println!(
            "{r:>3} {:>10} {:>10} {:>10} {:>10}",
            all[r], all_closed[r], c[r], c_closed[r]
        );
    }
    Ok(())
}
