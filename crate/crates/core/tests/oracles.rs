use multicurve::cli::{expected_symmetry, series_gf, SeriesKind, SurfaceId};
use multicurve::genfun::RationalGF;
use multicurve::polygraph::{count_even_multigraphs, dissection_counts, nonperipheral_series};
use multicurve::surface::SurfaceSig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn eval(gf: &RationalGF, t: &BigRational) -> BigRational {
    let num = gf
        .num
        .coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| {
            acc * t + BigRational::from_integer(c.clone())
        });
    let den = gf.den.pairs().fold(BigRational::one(), |acc, (a, e)| {
        let base = BigRational::one() - num_traits::pow(t.clone(), a);
        acc * num_traits::pow(base, e as usize)
    });
    num / den
}

fn sample_points() -> Vec<BigRational> {
    let mut pts = Vec::new();
    for q in 2..=11i64 {
        for p in [1, 3, 5, 7, 13, 17, 19] {
            let t = BigRational::new(BigInt::from(p), BigInt::from(q));
            if !t.is_one() && !pts.contains(&t) {
                pts.push(t);
            }
        }
    }
    pts.truncate(50);
    pts
}

fn check_at_points(gf: &RationalGF, sign: i32, k: i64) -> bool {
    sample_points().iter().all(|t| {
        let lhs = eval(gf, &t.recip());
        let tk = if k >= 0 {
            num_traits::pow(t.clone(), k as usize)
        } else {
            num_traits::pow(t.recip(), (-k) as usize)
        };
        lhs == BigRational::from_integer(sign.into()) * tk * eval(gf, t)
    })
}

#[test]
fn functional_equations_hold_at_rational_points() {
    assert_eq!(sample_points().len(), 50);
    for m in 2..=6 {
        for kind in [
            SeriesKind::Z0,
            SeriesKind::G,
            SeriesKind::H,
            SeriesKind::LowerH,
            SeriesKind::CAll,
        ] {
            let (name, gf) = series_gf(
                kind,
                &SurfaceId {
                    g: None,
                    n: None,
                    m,
                },
            )
            .unwrap();
            let (sign, k) = expected_symmetry(kind, m);
            assert!(check_at_points(&gf, sign, k), "{name} m={m}");
            assert!(
                !check_at_points(&gf, -sign, k),
                "{name} m={m} opposite sign"
            );
        }
    }
    for (g, n) in [(1, 1), (1, 2), (2, 1), (0, 5), (1, 3)] {
        let gf = nonperipheral_series(SurfaceSig::new(g, n).unwrap()).unwrap();
        assert!(check_at_points(&gf, 1, 0), "Z_{{{g},{n}}}");
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn dissection_counts_match_kirkman_cayley() {
    for m in 3..=11u64 {
        let counts = dissection_counts(m as usize).unwrap();
        let formula: Vec<u64> = (0..=m - 3)
            .map(|r| binom(m - 3, r) * binom(m + r - 1, r) / (r + 1))
            .collect();
        assert_eq!(counts, formula, "m={m}");
    }
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

/// Every multiset of `r` edges, checked for crossings and parity.
fn naive_even_count(m: usize, r: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect();
    fn rec(
        pairs: &[(usize, usize)],
        from: usize,
        left: usize,
        chosen: &mut Vec<(usize, usize)>,
        m: usize,
    ) -> u64 {
        if left == 0 {
            let mut deg = vec![0; m + 1];
            for &(i, j) in chosen.iter() {
                deg[i] += 1;
                deg[j] += 1;
            }
            let ok_parity = deg.iter().all(|d| d % 2 == 0);
            let ok_cross = chosen
                .iter()
                .all(|&a| chosen.iter().all(|&b| !crosses(a, b)));
            return u64::from(ok_parity && ok_cross);
        }
        (from..pairs.len())
            .map(|k| {
                chosen.push(pairs[k]);
                let c = rec(pairs, k, left - 1, chosen, m);
                chosen.pop();
                c
            })
            .sum()
    }
    rec(&pairs, 0, r, &mut Vec::new(), m)
}

#[test]
fn even_multigraph_counts_match_naive_multisets() {
    for m in 2..=5 {
        for r in 0..=6 {
            assert_eq!(
                count_even_multigraphs(m, r).unwrap(),
                naive_even_count(m, r),
                "m={m} r={r}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn reported_series_reexpand(m in 2usize..7, deg in 0usize..20, k in 0usize..8) {
        let kinds = [SeriesKind::Z0, SeriesKind::G, SeriesKind::F, SeriesKind::H, SeriesKind::LowerH, SeriesKind::CAll, SeriesKind::Zgn, SeriesKind::Z];
        let kind = kinds[k];
        prop_assume!(!(kind == SeriesKind::F && m < 3));
        let args = multicurve::cli::SeriesArgs {
            surface: multicurve::cli::SurfaceArgs { g: None, n: None, m: Some(m) },
            which: kind,
            max_deg: deg,
        };
        let rep = multicurve::cli::cmd_series(&args).unwrap();
        prop_assert!(rep.is_consistent());
        prop_assert!(rep.symmetry.pass);
        prop_assert_eq!(rep.coeffs.len(), deg + 1);
    }
}
