//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails or overruns its time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use multicurve::charvar::{dim_fil, express_in_basis, multicurves_up_to, Prng, DEFAULT_PRIME};
use multicurve::cli::{cmd_verify, Suite};
use multicurve::diagrams::{
    count_nonperipheral_in, enumerate_reduced, nonperipheral_from_all, Multicurve,
};
use multicurve::genfun::RationalGF;
use multicurve::polygraph::{
    all_multicurve_series, count_even_multigraphs, even_multigraph_series,
    filtration_hilbert_series, matrix_invariant_series, nonperipheral_series,
    planar_nonperipheral_series,
};
use multicurve::surface::{SurfaceSig, Word};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn sig(g: u32, n: u32) -> SurfaceSig {
    SurfaceSig::new(g, n).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pm(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn pipeline_equality() -> Outcome {
    for m in 2..=5 {
        let g = even_multigraph_series(m).unwrap().series_coeffs(10);
        for (r, coeff) in g.iter().enumerate() {
            let b = count_even_multigraphs(m, r).unwrap();
            ensure(BigInt::from(b) == *coeff, || {
                format!("m={m} r={r}: brute {b} vs series {coeff}")
            })?;
        }
    }
    Ok("m in 2..=5, r <= 10".into())
}

fn check_all(label: &str, gfs: impl Fn(usize) -> (RationalGF, i32, i64)) -> Outcome {
    for m in 2..=8 {
        let (gf, sign, k) = gfs(m);
        ensure(gf.check_reciprocal_symmetry(sign, k), || {
            format!("{label} m={m} sign {sign} exponent {k}")
        })?;
    }
    Ok(format!("{label}, m in 2..=8"))
}

fn z_symmetry() -> Outcome {
    check_all("Z_m", |m| (planar_nonperipheral_series(m).unwrap(), 1, 0))
}

fn g_symmetry() -> Outcome {
    check_all("G_m", |m| {
        (even_multigraph_series(m).unwrap(), -1, m as i64)
    })
}

fn h_symmetry() -> Outcome {
    check_all("H_m", |m| {
        (
            filtration_hilbert_series(m).unwrap(),
            pm(3 * m as i64 - 2),
            2 * m as i64 + 1,
        )
    })?;
    check_all("h_m", |m| {
        (matrix_invariant_series(m).unwrap(), -1, 4 * m as i64)
    })?;
    let h2 = filtration_hilbert_series(2).unwrap();
    ensure(
        h2.num.coeffs() == big(&[1]).as_slice()
            && h2.den.pairs().collect::<Vec<_>>() == [(1, 3), (2, 1)],
        || format!("H_2 = {h2}"),
    )?;
    Ok(format!("H_m and h_m for m in 2..=8; H_2 = {h2}"))
}

struct Enumerated {
    sig: SurfaceSig,
    per_r: Vec<Vec<multicurve::diagrams::ChordDiagram>>,
}

const DIAGRAM_CASES: [(u32, u32); 6] = [(0, 3), (1, 1), (0, 4), (1, 2), (0, 5), (2, 1)];

fn enumerate_cases() -> Vec<Enumerated> {
    DIAGRAM_CASES
        .iter()
        .map(|&(g, n)| {
            let s = sig(g, n);
            let top = if s.rank() == 2 { 8 } else { 6 };
            Enumerated {
                sig: s,
                per_r: (0..=top).map(|r| enumerate_reduced(s, r)).collect(),
            }
        })
        .collect()
}

fn diagrams_vs_closed_forms(cases: &[Enumerated]) -> Outcome {
    for e in cases {
        let top = e.per_r.len() - 1;
        let all: Vec<u64> = e.per_r.iter().map(|d| d.len() as u64).collect();
        let closed_all = all_multicurve_series(e.sig.rank())
            .unwrap()
            .series_coeffs(top);
        ensure(
            big(&all.iter().map(|&x| x as i64).collect::<Vec<_>>()) == closed_all,
            || format!("{}: c' {all:?} vs {closed_all:?}", e.sig),
        )?;
        let c = nonperipheral_from_all(e.sig, &all);
        let closed_c = nonperipheral_series(e.sig).unwrap().series_coeffs(top);
        ensure(c == closed_c, || {
            format!("{}: c {c:?} vs {closed_c:?}", e.sig)
        })?;
        let direct: Vec<BigInt> = e
            .per_r
            .iter()
            .map(|d| BigInt::from(count_nonperipheral_in(e.sig, d)))
            .collect();
        ensure(direct == closed_c, || {
            format!("{}: direct {direct:?} vs {closed_c:?}", e.sig)
        })?;
    }
    Ok("6 signatures, r <= 6 (r <= 8 for m = 2)".into())
}

fn concrete_values() -> Outcome {
    let cases: [((u32, u32), &[i64]); 3] = [
        ((1, 1), &[1, 2, 4, 6, 8, 10, 12, 14]),
        ((0, 4), &[1, 0, 3, 0, 6, 0, 9]),
        ((0, 5), &[1, 0, 6, 4, 20, 20, 50, 56]),
    ];
    for ((g, n), want) in cases {
        let s = sig(g, n);
        let top = want.len() - 1;
        let closed = nonperipheral_series(s).unwrap().series_coeffs(top);
        let direct: Vec<BigInt> = (0..=top)
            .map(|r| BigInt::from(count_nonperipheral_in(s, &enumerate_reduced(s, r))))
            .collect();
        ensure(closed == big(want), || {
            format!("{s} closed form {closed:?}")
        })?;
        ensure(direct == big(want), || format!("{s} diagrams {direct:?}"))?;
    }
    let z03 = nonperipheral_series(sig(0, 3)).unwrap();
    ensure(z03 == RationalGF::one(), || format!("Z_{{0,3}} = {z03}"))?;
    Ok("c_{1,1}, c_{0,4}, c_{0,5} by diagrams and closed form; Z_{0,3} = 1".into())
}

fn basis_rank() -> Outcome {
    let targets: [(usize, &[usize]); 2] = [(2, &[1, 3, 7, 13, 22, 34]), (3, &[1, 4, 13, 33])];
    let seeds = [11, 23, 37, 41, 59];
    for (m, dims) in targets {
        let h = filtration_hilbert_series(m)
            .unwrap()
            .series_coeffs(dims.len() - 1);
        ensure(
            h == big(&dims.iter().map(|&d| d as i64).collect::<Vec<_>>()),
            || format!("H_{m} = {h:?}"),
        )?;
        let s = SurfaceSig::planar(m).unwrap();
        for (r, &dim) in dims.iter().enumerate() {
            for seed in seeds {
                let rank = dim_fil(s, r, DEFAULT_PRIME, dim + 20, seed).unwrap();
                ensure(rank == dim, || {
                    format!("m={m} r={r} seed={seed}: rank {rank} vs {dim}")
                })?;
            }
        }
    }
    Ok("m = 2 (r <= 5) and m = 3 (r <= 3), 5 seeds each".into())
}

fn mc(words: &[&[i32]]) -> Multicurve {
    Multicurve::from_words(
        &words
            .iter()
            .map(|w| Word::from_signed(w))
            .collect::<Vec<_>>(),
    )
}

fn spanning() -> Outcome {
    let mut rng = Prng::new(2024, 0);
    let mut basis_sizes = BTreeMap::new();
    for trial in 0..100 {
        let m = 2 + rng.index(2);
        let len = 1 + rng.index(4);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = 1 + rng.index(m) as i32;
                if rng.index(2) == 0 {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let word = Word::from_signed(&letters);
        let s = SurfaceSig::planar(m).unwrap();
        let size = *basis_sizes
            .entry((m, word.class_length()))
            .or_insert_with(|| multicurves_up_to(s, word.class_length()).len());
        express_in_basis(&word, s, DEFAULT_PRIME, size + 20, 1000 + trial)
            .map_err(|e| format!("trial {trial} word {word}: {e}"))?;
    }
    let s = sig(0, 3);
    let e = express_in_basis(&Word::from_signed(&[1, -2]), s, DEFAULT_PRIME, 30, 5)
        .map_err(|e| e.to_string())?;
    let want: BTreeMap<Multicurve, i64> = [(mc(&[&[1], &[2]]), 1), (mc(&[&[1, 2]]), -1)]
        .into_iter()
        .collect();
    ensure(e == want, || format!("[a b^-1] = {e:?}"))?;
    let e = express_in_basis(&Word::from_signed(&[1, 1]), s, DEFAULT_PRIME, 30, 5)
        .map_err(|e| e.to_string())?;
    let want: BTreeMap<Multicurve, i64> = [(mc(&[&[1], &[1]]), 1), (Multicurve::empty(), -2)]
        .into_iter()
        .collect();
    ensure(e == want, || format!("[a^2] = {e:?}"))?;
    Ok("100 random words; [a b^-1] = [a][b] - [ab]; [a^2] = [a]^2 - 2".into())
}

fn suite(s: Suite) -> Outcome {
    let rep = cmd_verify(&s, None).map_err(|e| e.to_string())?;
    let failed: Vec<String> = rep
        .items
        .iter()
        .filter(|i| !i.pass)
        .map(|i| format!("{}: {}", i.key, i.detail))
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} items", rep.items.len()))
}

fn well_formedness(cases: &[Enumerated]) -> Outcome {
    let mut total = 0;
    for e in cases {
        for (r, diagrams) in e.per_r.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for d in diagrams {
                let words = d.component_words();
                ensure(
                    words
                        .iter()
                        .all(|w| w.is_cyclically_reduced() && !w.is_empty()),
                    || format!("{}: r={r} non-reduced component in {words:?}", e.sig),
                )?;
                let len: usize = words.iter().map(Word::len).sum();
                ensure(len == r, || format!("{}: r={r} total length {len}", e.sig))?;
                ensure(seen.insert(d.multicurve()), || {
                    format!("{}: r={r} repeated multicurve {}", e.sig, d.multicurve())
                })?;
            }
            total += diagrams.len();
        }
    }
    Ok(format!("{total} diagrams"))
}

fn main() {
    let mut all_pass = true;
    let mut report = |id: u32, name: &str, limit_s: u64, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit_s);
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        all_pass &= pass;
        println!(
            "criterion {id:>2} {} {name}: {detail} [{:.2}s / {limit_s}s]",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    };

    report(
        1,
        "even multigraph brute force equals G_m",
        60,
        &mut pipeline_equality,
    );
    report(2, "Z_m(1/t) = Z_m(t)", 10, &mut z_symmetry);
    report(3, "G_m(1/t) = -t^m G_m(t)", 10, &mut g_symmetry);
    report(4, "H_m and h_m functional equations", 10, &mut h_symmetry);

    let mut cases = Vec::new();
    report(5, "diagram counts equal closed forms", 300, &mut || {
        cases = enumerate_cases();
        diagrams_vs_closed_forms(&cases)
    });
    report(6, "concrete counts", 60, &mut concrete_values);
    report(7, "filtration rank equals H_m", 60, &mut basis_rank);
    report(
        8,
        "trace functions expand in the multicurve basis",
        60,
        &mut spanning,
    );
    report(9, "matrix identities", 10, &mut || {
        suite(Suite::Identities {
            trials: 1000,
            seed: 1,
            prime: DEFAULT_PRIME,
        })
    });
    report(
        10,
        "dissection polynomials and alternating sums",
        30,
        &mut || {
            suite(Suite::Euler {
                m_max: 12,
                trials: 50,
                seed: 1,
            })
        },
    );
    report(11, "duality of simple even graphs", 30, &mut || {
        suite(Suite::Duality { m_max: 8 })
    });
    report(
        12,
        "diagram well-formedness and injectivity",
        60,
        &mut || well_formedness(&cases),
    );

    if !all_pass {
        std::process::exit(1);
    }
}
