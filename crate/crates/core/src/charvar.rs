//! Trace functions on the SL(2) character variety of a free group, evaluated
//! at random points over a prime field.
//!
//! Multicurve trace functions `[gamma_1]...[gamma_k]` of total length at most
//! `r` are expected to form a basis of the length filtration `F_r`. Ranks are
//! found by evaluating them at random tuples in `SL(2, F_p)` and row-reducing
//! the evaluation matrix. The rank is exact with high probability; a failure
//! can only make it too small.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{enumerate_reduced, Multicurve};
use crate::error::{Error, Result};
use crate::surface::{SurfaceSig, Word};

/// `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Number of fresh tuples an expansion must reproduce before it is accepted.
pub const VALIDATION_TUPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::BadModulus { modulus: p });
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn center(&self, x: u64) -> i64 {
        if x > self.p / 2 {
            x as i64 - self.p as i64
        } else {
            x as i64
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

/// Row-major `[[a, b], [c, d]]` over a [`PrimeField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    pub const ZERO: Mat2 = Mat2 {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
    };

    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Self { a, b, c, d }
    }

    pub fn scalar(x: u64) -> Self {
        Self {
            a: x,
            b: 0,
            c: 0,
            d: x,
        }
    }

    pub fn mul(&self, o: &Mat2, f: &PrimeField) -> Mat2 {
        Mat2 {
            a: f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            b: f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            c: f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            d: f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        }
    }

    pub fn add(&self, o: &Mat2, f: &PrimeField) -> Mat2 {
        Mat2 {
            a: f.add(self.a, o.a),
            b: f.add(self.b, o.b),
            c: f.add(self.c, o.c),
            d: f.add(self.d, o.d),
        }
    }

    pub fn trace(&self, f: &PrimeField) -> u64 {
        f.add(self.a, self.d)
    }

    pub fn det(&self, f: &PrimeField) -> u64 {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    /// `x*` with `x x* = det(x) 1`; the inverse on `SL(2)`.
    pub fn adjugate(&self, f: &PrimeField) -> Mat2 {
        Mat2 {
            a: self.d,
            b: f.neg(self.b),
            c: f.neg(self.c),
            d: self.a,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Mat2::ZERO
    }

    /// `a b a* b*`.
    pub fn commutator(&self, o: &Mat2, f: &PrimeField) -> Mat2 {
        self.mul(o, f)
            .mul(&self.adjugate(f), f)
            .mul(&o.adjugate(f), f)
    }
}

/// Counter-style generator: `(seed, stream)` picks an independent ChaCha8
/// stream, so column `j` of an evaluation matrix never depends on how many
/// other columns were drawn.
pub struct Prng {
    rng: ChaCha8Rng,
}

impl Prng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn element(&mut self, f: &PrimeField) -> u64 {
        self.rng.random_range(0..f.modulus())
    }

    pub fn nonzero(&mut self, f: &PrimeField) -> u64 {
        self.rng.random_range(1..f.modulus())
    }

    pub fn small(&mut self, f: &PrimeField, bound: i64) -> u64 {
        f.from_i64(self.rng.random_range(-bound..=bound))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn matrix(&mut self, f: &PrimeField) -> Mat2 {
        Mat2::new(
            self.element(f),
            self.element(f),
            self.element(f),
            self.element(f),
        )
    }

    /// Uniform over `{a != 0}` in `SL(2, F_p)`.
    pub fn sl2(&mut self, f: &PrimeField) -> Mat2 {
        let a = self.nonzero(f);
        let b = self.element(f);
        let c = self.element(f);
        let d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
        Mat2 { a, b, c, d }
    }

    pub fn sl2_tuple(&mut self, f: &PrimeField, m: usize) -> Vec<Mat2> {
        (0..m).map(|_| self.sl2(f)).collect()
    }

    /// Rank-at-most-one matrix `u v^T` with entries in `[-bound, bound]`.
    pub fn singular(&mut self, f: &PrimeField, bound: i64) -> Mat2 {
        let (u0, u1, v0, v1) = (
            self.small(f, bound),
            self.small(f, bound),
            self.small(f, bound),
            self.small(f, bound),
        );
        Mat2::new(f.mul(u0, v0), f.mul(u0, v1), f.mul(u1, v0), f.mul(u1, v1))
    }
}

/// Generator `a_i` maps to `mats[i - 1]`, its inverse to the adjugate.
pub fn eval_word(word: &Word, mats: &[Mat2], f: &PrimeField) -> Result<Mat2> {
    word.letters().iter().try_fold(Mat2::IDENTITY, |acc, l| {
        let m = mats
            .get(l.index().wrapping_sub(1))
            .ok_or(Error::GeneratorOutOfRange {
                index: l.index(),
                rank: mats.len(),
            })?;
        Ok(acc.mul(&if l.is_inverse() { m.adjugate(f) } else { *m }, f))
    })
}

/// Product of component traces; `1` for the empty multicurve.
pub fn eval_multicurve(mc: &Multicurve, mats: &[Mat2], f: &PrimeField) -> Result<u64> {
    mc.components().iter().try_fold(1, |acc, c| {
        Ok(f.mul(acc, eval_word(c.word(), mats, f)?.trace(f)))
    })
}

/// Multicurves of length `<= r`, ordered by length and then by the order
/// the diagram enumeration produces them.
pub fn multicurves_up_to(sig: SurfaceSig, r: usize) -> Vec<Multicurve> {
    (0..=r)
        .flat_map(|k| {
            enumerate_reduced(sig, k)
                .into_iter()
                .map(|d| d.multicurve())
        })
        .collect()
}

/// Rank of a dense matrix mod `p`; rows are consumed.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, f: &PrimeField) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let k = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` mod `p`. Returns `None` if inconsistent, otherwise the
/// solution with free variables set to zero and the rank of `A`.
fn solve_mod_p(mut a: Vec<Vec<u64>>, b: Vec<u64>, f: &PrimeField) -> (Option<Vec<u64>>, usize) {
    let n = a.first().map_or(0, Vec::len);
    for (row, y) in a.iter_mut().zip(b) {
        row.push(y);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = f.inv(a[rank][col]);
        for x in a[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let k = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if a[rank..].iter().any(|row| row[n] != 0) {
        return (None, rank);
    }
    let mut x = vec![0; n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][n];
    }
    (Some(x), rank)
}

fn tuple(sig: SurfaceSig, f: &PrimeField, seed: u64, stream: u64) -> Vec<Mat2> {
    Prng::new(seed, stream).sl2_tuple(f, sig.rank())
}

/// Rank of the trace functions of all multicurves of length `<= r`,
/// evaluated at `samples` random tuples; stream `j` feeds column `j`.
pub fn dim_fil(sig: SurfaceSig, r: usize, prime: u64, samples: usize, seed: u64) -> Result<usize> {
    let f = PrimeField::new(prime)?;
    let basis = multicurves_up_to(sig, r);
    let tuples: Vec<Vec<Mat2>> = (0..samples as u64)
        .map(|j| tuple(sig, &f, seed, j))
        .collect();
    let rows = basis
        .iter()
        .map(|mc| {
            tuples
                .iter()
                .map(|t| eval_multicurve(mc, t, &f))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rank_mod_p(rows, &f))
}

/// Coefficients of `[word]` in the multicurve basis of `F_l`, `l` the
/// cyclic length of `word`. Coefficients are returned as centered
/// representatives mod `p`; zero terms are omitted.
pub fn express_in_basis(
    word: &Word,
    sig: SurfaceSig,
    prime: u64,
    samples: usize,
    seed: u64,
) -> Result<BTreeMap<Multicurve, i64>> {
    let f = PrimeField::new(prime)?;
    if word.max_index() > sig.rank() {
        return Err(Error::GeneratorOutOfRange {
            index: word.max_index(),
            rank: sig.rank(),
        });
    }
    let basis = multicurves_up_to(sig, word.class_length());
    if samples < basis.len() {
        return Err(Error::InsufficientSamples {
            needed: basis.len(),
            got: samples,
        });
    }
    let tuples: Vec<Vec<Mat2>> = (0..samples as u64)
        .map(|j| tuple(sig, &f, seed, j))
        .collect();
    let a = tuples
        .iter()
        .map(|t| {
            basis
                .iter()
                .map(|mc| eval_multicurve(mc, t, &f))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let b = tuples
        .iter()
        .map(|t| Ok(eval_word(word, t, &f)?.trace(&f)))
        .collect::<Result<Vec<_>>>()?;
    let (solution, rank) = solve_mod_p(a, b, &f);
    if rank < basis.len() {
        return Err(Error::RankDeficient {
            rank,
            needed: basis.len(),
        });
    }
    let Some(x) = solution else {
        return Err(Error::ValidationResidual {
            word: word.to_string(),
            failures: samples,
        });
    };
    let failures = (samples as u64..(samples + VALIDATION_TUPLES) as u64)
        .map(|j| {
            let t = tuple(sig, &f, seed, j);
            let lhs = eval_word(word, &t, &f)?.trace(&f);
            let rhs = basis.iter().zip(&x).try_fold(0, |acc, (mc, &c)| {
                Ok::<_, Error>(f.add(acc, f.mul(c, eval_multicurve(mc, &t, &f)?)))
            })?;
            Ok(lhs != rhs)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&bad| bad)
        .count();
    if failures > 0 {
        return Err(Error::ValidationResidual {
            word: word.to_string(),
            failures,
        });
    }
    Ok(basis
        .into_iter()
        .zip(x)
        .filter(|(_, c)| *c != 0)
        .map(|(mc, c)| (mc, f.center(c)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
}

impl CheckReport {
    fn run(name: &str, trials: usize, mut ok: impl FnMut(usize) -> bool) -> Self {
        let failures = (0..trials).filter(|&i| !ok(i)).count();
        Self {
            name: name.to_string(),
            trials,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} trials, {} failures)",
            self.name, self.trials, self.failures
        )
    }
}

/// `tr(A B A* B*) = x^2 + y^2 + z^2 - xyz - 2` on `SL(2)`, and the version
/// for arbitrary determinants on all of `M(2)`.
pub fn verify_fricke(f: &PrimeField, trials: usize, seed: u64) -> Vec<CheckReport> {
    let sl = CheckReport::run("fricke", trials, |i| {
        let mut rng = Prng::new(seed, i as u64);
        let (a, b) = (rng.sl2(f), rng.sl2(f));
        let (x, y, z) = (a.trace(f), b.trace(f), a.mul(&b, f).trace(f));
        let rhs = f.sub(
            f.add(f.add(f.mul(x, x), f.mul(y, y)), f.mul(z, z)),
            f.add(f.mul(f.mul(x, y), z), 2),
        );
        a.commutator(&b, f).trace(f) == rhs
    });
    let general = CheckReport::run("commutator_trace_any_det", trials, |i| {
        let mut rng = Prng::new(seed, (trials + i) as u64);
        let (a, b) = (rng.matrix(f), rng.matrix(f));
        let (x, y, z) = (a.trace(f), b.trace(f), a.mul(&b, f).trace(f));
        let (da, db) = (a.det(f), b.det(f));
        let pos = f.add(
            f.add(f.mul(f.mul(x, x), db), f.mul(f.mul(y, y), da)),
            f.mul(z, z),
        );
        let neg = f.add(f.mul(f.mul(x, y), z), f.mul(2, f.mul(da, db)));
        a.commutator(&b, f).trace(f) == f.sub(pos, neg)
    });
    vec![sl, general]
}

/// `x + x* = tr(x) 1`, `x x* = det(x) 1` and `tr(a) tr(b) = tr(ab) + tr(ab*)`.
pub fn verify_adjugate(f: &PrimeField, trials: usize, seed: u64) -> CheckReport {
    CheckReport::run("adjugate", trials, |i| {
        let mut rng = Prng::new(seed, i as u64);
        let (x, b) = (rng.matrix(f), rng.matrix(f));
        let xs = x.adjugate(f);
        x.add(&xs, f) == Mat2::scalar(x.trace(f))
            && x.mul(&xs, f) == Mat2::scalar(x.det(f))
            && f.mul(x.trace(f), b.trace(f))
                == f.add(x.mul(&b, f).trace(f), x.mul(&b.adjugate(f), f).trace(f))
    })
}

/// Three-matrix sum and product formulas and the four-matrix identity
/// for `2[abcd]`, on `SL(2)`.
pub fn verify_trace_identities(f: &PrimeField, trials: usize, seed: u64) -> Vec<CheckReport> {
    let tr = |ms: &[&Mat2]| {
        ms.iter()
            .fold(Mat2::IDENTITY, |acc, m| acc.mul(m, f))
            .trace(f)
    };
    let sum = CheckReport::run("trace_sum_abc", trials, |i| {
        let mut rng = Prng::new(seed, i as u64);
        let (a, b, c) = (rng.sl2(f), rng.sl2(f), rng.sl2(f));
        let (ta, tb, tc) = (a.trace(f), b.trace(f), c.trace(f));
        let lhs = f.add(tr(&[&a, &b, &c]), tr(&[&a, &c, &b]));
        let rhs = [
            f.mul(tr(&[&a, &b]), tc),
            f.mul(tr(&[&a, &c]), tb),
            f.mul(tr(&[&b, &c]), ta),
        ]
        .into_iter()
        .fold(f.neg(f.mul(f.mul(ta, tb), tc)), |acc, x| f.add(acc, x));
        lhs == rhs
    });
    let product = CheckReport::run("trace_product_abc", trials, |i| {
        let mut rng = Prng::new(seed, (trials + i) as u64);
        let (a, b, c) = (rng.sl2(f), rng.sl2(f), rng.sl2(f));
        let (ta, tb, tc) = (a.trace(f), b.trace(f), c.trace(f));
        let (tab, tbc, tac) = (tr(&[&a, &b]), tr(&[&b, &c]), tr(&[&a, &c]));
        let sq = |x: u64| f.mul(x, x);
        let lhs = f.mul(tr(&[&a, &b, &c]), tr(&[&a, &c, &b]));
        let pos = [
            sq(ta),
            sq(tb),
            sq(tc),
            sq(tab),
            sq(tbc),
            sq(tac),
            f.mul(f.mul(tab, tbc), tac),
        ];
        let neg = [
            f.mul(f.mul(ta, tb), tab),
            f.mul(f.mul(tb, tc), tbc),
            f.mul(f.mul(ta, tc), tac),
            4,
        ];
        let rhs = f.sub(
            pos.into_iter().fold(0, |s, x| f.add(s, x)),
            neg.into_iter().fold(0, |s, x| f.add(s, x)),
        );
        lhs == rhs
    });
    let vogt = CheckReport::run("four_matrix_trace", trials, |i| {
        let mut rng = Prng::new(seed, (2 * trials + i) as u64);
        let (a, b, c, d) = (rng.sl2(f), rng.sl2(f), rng.sl2(f), rng.sl2(f));
        let (ta, tb, tc, td) = (a.trace(f), b.trace(f), c.trace(f), d.trace(f));
        let lhs = f.mul(2, tr(&[&a, &b, &c, &d]));
        let pos = [
            f.mul(f.mul(ta, tb), f.mul(tc, td)),
            f.mul(ta, tr(&[&b, &c, &d])),
            f.mul(tb, tr(&[&c, &d, &a])),
            f.mul(tc, tr(&[&d, &a, &b])),
            f.mul(td, tr(&[&a, &b, &c])),
            f.mul(tr(&[&a, &b]), tr(&[&c, &d])),
            f.mul(tr(&[&d, &a]), tr(&[&b, &c])),
        ];
        let neg = [
            f.mul(tr(&[&a, &c]), tr(&[&b, &d])),
            f.mul(f.mul(ta, tb), tr(&[&c, &d])),
            f.mul(f.mul(tr(&[&a, &b]), tc), td),
            f.mul(f.mul(td, ta), tr(&[&b, &c])),
            f.mul(f.mul(tr(&[&d, &a]), tb), tc),
        ];
        let rhs = f.sub(
            pos.into_iter().fold(0, |s, x| f.add(s, x)),
            neg.into_iter().fold(0, |s, x| f.add(s, x)),
        );
        lhs == rhs
    });
    vec![sum, product, vogt]
}

/// Zero-product criteria for singular `a, b`:
/// `a b a* = 0` iff `ab = 0` or `b a* = 0`, and
/// `a b a* b* = 0` iff `ab = 0`, `b a* = 0` or `a* b* = 0`.
/// Entries are kept small so the zero cases actually occur.
pub fn verify_singular_products(f: &PrimeField, trials: usize, seed: u64) -> Vec<CheckReport> {
    let triple = CheckReport::run("singular_triple_zero", trials, |i| {
        let mut rng = Prng::new(seed, i as u64);
        let (a, b) = (rng.singular(f, 1), rng.singular(f, 1));
        let lhs = a.mul(&b, f).mul(&a.adjugate(f), f).is_zero();
        lhs == (a.mul(&b, f).is_zero() || b.mul(&a.adjugate(f), f).is_zero())
    });
    let commutator = CheckReport::run("singular_commutator_zero", trials, |i| {
        let mut rng = Prng::new(seed, (trials + i) as u64);
        let (a, b) = (rng.singular(f, 1), rng.singular(f, 1));
        let (sa, sb) = (a.adjugate(f), b.adjugate(f));
        let lhs = a.commutator(&b, f).is_zero();
        lhs == (a.mul(&b, f).is_zero() || b.mul(&sa, f).is_zero() || sa.mul(&sb, f).is_zero())
    });
    vec![triple, commutator]
}

/// Every identity check, `trials` each.
pub fn verify_identities(f: &PrimeField, trials: usize, seed: u64) -> Vec<CheckReport> {
    let mut out = verify_fricke(f, trials, seed);
    out.push(verify_adjugate(f, trials, seed));
    out.extend(verify_trace_identities(f, trials, seed));
    out.extend(verify_singular_products(f, trials, seed));
    out
}
