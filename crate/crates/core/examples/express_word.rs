//! Writes the trace of a word as a combination of multicurve traces.
//!
//! cargo run --example express_word -- "a1 a2 a1^-1 a2^-1"

use multicurve::charvar::{express_in_basis, multicurves_up_to, DEFAULT_PRIME};
use multicurve::surface::{SurfaceSig, Word};

fn main() -> multicurve::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "a1 a2^-1".into());
    let word: Word = text.parse()?;
    let sig = SurfaceSig::planar(word.max_index().max(2))?;
    let basis = multicurves_up_to(sig, word.class_length()).len();
    let terms = express_in_basis(&word, sig, DEFAULT_PRIME, basis + 20, 1)?;
    let rhs: Vec<String> = terms
        .iter()
        .map(|(mc, c)| {
            let traces: String = mc
                .components()
                .iter()
                .map(|k| format!("[{}]", k.word()))
                .collect();
            if traces.is_empty() {
                format!("{c:+}")
            } else {
                format!("{c:+} {traces}")
            }
        })
        .collect();
    println!("[{word}] = {}", rhs.join(" "));
    Ok(())
}
