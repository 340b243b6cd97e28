//! Rank of multicurve trace functions at random SL(2, F_p) points, against
//! the coefficients of H_m.
//!
//! cargo run --release --example basis_rank -- 3 3

use multicurve::charvar::{dim_fil, DEFAULT_PRIME};
use multicurve::polygraph::filtration_hilbert_series;
use multicurve::surface::SurfaceSig;

fn main() -> multicurve::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let m = args.first().copied().unwrap_or(2);
    let top = args.get(1).copied().unwrap_or(5);
    let sig = SurfaceSig::planar(m)?;
    let h = filtration_hilbert_series(m)?.series_coeffs(top);
    for (r, want) in h.iter().enumerate() {
        let want: usize = want.to_string().parse().expect("small dimension");
        let rank = dim_fil(sig, r, DEFAULT_PRIME, want + 20, 7)?;
        println!("m={m} r={r}: rank {rank}, H_m coefficient {want}");
    }
    Ok(())
}
