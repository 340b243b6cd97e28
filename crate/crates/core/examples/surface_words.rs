//! Words, cyclic classes and boundary curves of a surface.
//!
//! cargo run --example surface_words -- 1 2

use multicurve::surface::{boundary_classes, SurfaceSig, Word};

fn main() -> multicurve::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (g, n) = (
        args.first().copied().unwrap_or(1),
        args.get(1).copied().unwrap_or(2),
    );
    let sig = SurfaceSig::new(g, n)?;
    println!(
        "{sig}: rank {}, Euler characteristic {}",
        sig.rank(),
        sig.euler_characteristic()
    );
    for (class, len) in boundary_classes(sig) {
        println!("  boundary {class} (length {len})");
    }

    for text in ["a2 a1 a1^-1 a3 a2^-1", "a1^-1 a2 a1", "a2^-1 a1^-1"] {
        let w: Word = text.parse()?;
        println!(
            "{text:>22}  ->  length {}, class {}",
            w.class_length(),
            w.canonical_class()
        );
    }
    Ok(())
}
