//! Simple non-crossing even graphs, their faces and duals, and how their
//! contributions add up to G_m.
//!
//! cargo run --example even_graphs -- 4

use multicurve::genfun::{IntPoly, RationalGF};
use multicurve::polygraph::{
    count_even_multigraphs, enumerate_even_simple, even_multigraph_series,
};

fn main() -> multicurve::Result<()> {
    let m: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let mut total = RationalGF::poly(IntPoly::zero());
    for g in enumerate_even_simple(m)? {
        let faces = g.faces();
        println!(
            "{g:<40} faces {:?}  dual {}  contributes {}",
            faces.face_sizes,
            g.dual(),
            g.contribution()
        );
        total = total.add(&g.contribution());
    }
    let closed = even_multigraph_series(m)?;
    println!("sum = {total}");
    println!("G_{m} = {closed}  (equal: {})", total.equal(&closed));
    let brute: Vec<u64> = (0..=8)
        .map(|r| count_even_multigraphs(m, r))
        .collect::<Result<_, _>>()?;
    println!("brute force |B_{m}(r)|, r <= 8: {brute:?}");
    println!(
        "series coefficients:          {:?}",
        closed
            .series_coeffs(8)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
