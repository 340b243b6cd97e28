//! Caching diagram enumerations on disk.
//!
//! cargo run --example cached_counts -- /tmp/multicurve-cache

use multicurve::cli::Cache;
use multicurve::surface::SurfaceSig;

fn main() -> multicurve::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("multicurve-cache"));
    let cache = Cache::new(dir);
    let sig = SurfaceSig::new(1, 2)?;
    for r in 0..=5 {
        let (diagrams, outcome) = cache.diagrams(sig, r)?;
        println!(
            "{sig} r={r}: {} diagrams ({outcome:?}) at {}",
            diagrams.len(),
            cache.path(sig, r).display()
        );
    }
    Ok(())
}
