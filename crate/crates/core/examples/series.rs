//! Closed forms, coefficients and functional equations of every series.
//!
//! cargo run --example series -- 4

use multicurve::cli::{expected_symmetry, series_gf, SeriesKind, SurfaceId};

fn main() -> multicurve::Result<()> {
    let m: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let surface = SurfaceId {
        g: None,
        n: None,
        m,
    };
    for kind in [
        SeriesKind::Z0,
        SeriesKind::G,
        SeriesKind::F,
        SeriesKind::H,
        SeriesKind::LowerH,
        SeriesKind::CAll,
    ] {
        let (name, gf) = series_gf(kind, &surface)?;
        let (sign, k) = expected_symmetry(kind, m);
        let coeffs: Vec<String> = gf.series_coeffs(8).iter().map(|c| c.to_string()).collect();
        println!("{name}_{m}(t) = {gf}");
        println!("    {} ...", coeffs.join(", "));
        println!(
            "    f(1/t) = {sign:+} t^{k} f(t): {}",
            gf.check_reciprocal_symmetry(sign, k)
        );
    }
    Ok(())
}
