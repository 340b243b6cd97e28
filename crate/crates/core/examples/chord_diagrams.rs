//! Reduced chord diagrams of small size and the multicurves they draw.
//!
//! cargo run --example chord_diagrams -- 0 4 2

use multicurve::diagrams::{enumerate_reduced, is_peripheral_free, layout};
use multicurve::surface::SurfaceSig;

fn main() -> multicurve::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let g = args.first().copied().unwrap_or(0) as u32;
    let n = args.get(1).copied().unwrap_or(4) as u32;
    let r = args.get(2).copied().unwrap_or(2);
    let sig = SurfaceSig::new(g, n)?;

    let names: Vec<String> = layout(sig).slots().iter().map(|i| i.to_string()).collect();
    println!("{sig}, intervals counterclockwise: {}", names.join(" "));
    for d in enumerate_reduced(sig, r) {
        let mc = d.multicurve();
        let mark = if is_peripheral_free(sig, &mc) {
            ""
        } else {
            "  (peripheral)"
        };
        println!(
            "  counts {:?} chords {:?} -> {mc}{mark}",
            d.counts(),
            d.chords()
        );
    }
    Ok(())
}
