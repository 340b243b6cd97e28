//! Integer polynomials and rational generating functions whose denominators
//! are products of cyclotomic-style factors `(1 - t^a)^e`.
//!
//! Every generating function in this crate has that shape, so denominators
//! stay factored. They are only expanded transiently, inside [`RationalGF::equal`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`. The last stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `1 - t^a`. For `a == 0` this is the zero polynomial.
    pub fn one_minus_t_pow(a: usize) -> Self {
        Self::one() - Self::monomial(1, a)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Coefficients of `t^0..t^d` in reverse order, i.e. `t^d p(1/t)`.
    /// Returns `None` when `deg p > d`.
    pub fn reversed(&self, d: usize) -> Option<Self> {
        if self.degree().is_some_and(|deg| deg > d) {
            return None;
        }
        let mut coeffs: Vec<BigInt> = (0..=d).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Some(Self::from_coeffs(coeffs))
    }

    /// Exact division by `1 - t^a`, or `None` if it does not divide.
    pub fn div_one_minus_t_pow(&self, a: usize) -> Option<Self> {
        assert!(a >= 1);
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = (1 - t^a) q  <=>  q_k = p_k + q_{k-a}
        let n = self.coeffs.len();
        if n <= a {
            return None;
        }
        let qlen = n - a;
        let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
        for k in 0..qlen {
            let mut v = self.coeffs[k].clone();
            if k >= a {
                v += &q[k - a];
            }
            q.push(v);
        }
        let q = Self::from_coeffs(q);
        (&q * &Self::one_minus_t_pow(a) == *self).then_some(q)
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// True iff `deg p <= d` and the coefficient of `t^k` equals that of
/// `t^(d-k)` for every `0 <= k <= d`.
pub fn is_palindromic(p: &IntPoly, d: usize) -> bool {
    p.reversed(d).is_some_and(|r| &r == p)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Multiset of denominator factors: `(a, e)` stands for `(1 - t^a)^e`.
///
/// Kept sorted by `a` with merged exponents; `a >= 1` and `e >= 1` always.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DenomFactors {
    factors: BTreeMap<usize, u32>,
}

impl DenomFactors {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut out = Self::one();
        for &(a, e) in pairs {
            out.insert(a, e);
        }
        out
    }

    pub fn insert(&mut self, a: usize, e: u32) {
        assert!(a >= 1, "denominator factor 1 - t^0 is zero");
        if e > 0 {
            *self.factors.entry(a).or_insert(0) += e;
        }
    }

    /// Removes one copy of `(1 - t^a)`; returns false if absent.
    fn remove_one(&mut self, a: usize) -> bool {
        match self.factors.get_mut(&a) {
            Some(e) if *e > 1 => {
                *e -= 1;
                true
            }
            Some(_) => {
                self.factors.remove(&a);
                true
            }
            None => false,
        }
    }

    pub fn exponent(&self, a: usize) -> u32 {
        self.factors.get(&a).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().map(|(&a, &e)| (a, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total number of factors, counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Degree of the expanded denominator, `sum a * e`.
    pub fn degree(&self) -> usize {
        self.pairs().map(|(a, e)| a * e as usize).sum()
    }

    pub fn expand(&self) -> IntPoly {
        self.pairs().fold(IntPoly::one(), |acc, (a, e)| {
            &acc * &IntPoly::one_minus_t_pow(a).pow(e)
        })
    }

    /// Per-`a` maximum of the two exponent maps: a common multiple.
    fn join(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, e) in other.pairs() {
            let cur = out.factors.entry(a).or_insert(0);
            *cur = (*cur).max(e);
        }
        out
    }

    /// `self / other`, assuming `other` divides `self` factorwise.
    fn quotient(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, e) in other.pairs() {
            for _ in 0..e {
                let removed = out.remove_one(a);
                debug_assert!(removed);
            }
        }
        out
    }
}

impl fmt::Display for DenomFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (a, e) in self.pairs() {
            match (a, e) {
                (1, 1) => write!(f, "(1 - t)")?,
                (1, _) => write!(f, "(1 - t)^{e}")?,
                (_, 1) => write!(f, "(1 - t^{a})")?,
                _ => write!(f, "(1 - t^{a})^{e}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` as a formal power series in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGF {
    pub num: IntPoly,
    pub den: DenomFactors,
}

impl RationalGF {
    pub fn new(num: IntPoly, den: DenomFactors) -> Self {
        Self { num, den }
    }

    pub fn poly(num: IntPoly) -> Self {
        Self::new(num, DenomFactors::one())
    }

    pub fn one() -> Self {
        Self::poly(IntPoly::one())
    }

    /// Coefficients of `t^0..=t^n` of the power series expansion.
    pub fn series_coeffs(&self, n: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..=n).map(|k| self.num.coeff(k)).collect();
        // multiply by 1/(1 - t^a) in place: c_k += c_{k-a}
        for (a, e) in self.den.pairs() {
            for _ in 0..e {
                for k in a..=n {
                    let prev = out[k - a].clone();
                    out[k] += prev;
                }
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    /// Multiplies by `(1 - t^a)`, cancelling a matching denominator factor
    /// when one is present.
    pub fn mul_factor(&self, a: usize) -> Self {
        let mut den = self.den.clone();
        if den.remove_one(a) {
            Self::new(self.num.clone(), den)
        } else {
            Self::new(&self.num * &IntPoly::one_minus_t_pow(a), den)
        }
    }

    /// Divides the numerator exactly by `(1 - t^a)`.
    pub fn div_factor(&self, a: usize) -> Result<Self> {
        self.num
            .div_one_minus_t_pow(a)
            .map(|num| Self::new(num, self.den.clone()))
            .ok_or(Error::InexactDivision { a })
    }

    /// Appends `(1 - t^a)^e` to the denominator.
    pub fn over_factor(&self, a: usize, e: u32) -> Self {
        let mut den = self.den.clone();
        den.insert(a, e);
        Self::new(self.num.clone(), den)
    }

    /// Divides by `(1 - t^a)`, exactly on the numerator when possible.
    pub fn div_or_over(&self, a: usize) -> Self {
        self.div_factor(a)
            .unwrap_or_else(|_| self.over_factor(a, 1))
    }

    /// `f(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut den = DenomFactors::one();
        for (a, e) in self.den.pairs() {
            den.insert(a * k, e);
        }
        Self::new(self.num.substitute_power(k), den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (a, e) in other.den.pairs() {
            den.insert(a, e);
        }
        Self::new(&self.num * &other.num, den)
    }

    /// Sum over a common (not necessarily least) denominator.
    pub fn add(&self, other: &Self) -> Self {
        let den = self.den.join(&other.den);
        let lhs = &self.num * &den.quotient(&self.den).expand();
        let rhs = &other.num * &den.quotient(&other.den).expand();
        Self::new(&lhs + &rhs, den)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equal(&self, other: &Self) -> bool {
        // strip shared factors first so the expansions stay small
        let mut common = DenomFactors::one();
        for (a, e) in self.den.pairs() {
            let shared = e.min(other.den.exponent(a));
            common.insert(a, shared);
        }
        let lhs_den = self.den.quotient(&common).expand();
        let rhs_den = other.den.quotient(&common).expand();
        &self.num * &rhs_den == &other.num * &lhs_den
    }

    /// Decides whether `f(1/t) = sign * t^k * f(t)` as rational functions.
    ///
    /// With `N` of degree `d` and `D = prod (1 - t^a)^e`, we have
    /// `D(1/t) = (-1)^E t^(-A) D(t)` where `E = sum e` and `A = sum a e`,
    /// so the equation reduces to the Laurent identity
    /// `(-1)^E t^(A - d) rev(N)(t) = sign * t^k N(t)`.
    pub fn check_reciprocal_symmetry(&self, sign: i32, k: i64) -> bool {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let Some(d) = self.num.degree() else {
            return true;
        };
        let den_sign = if self.den.count().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let a = self.den.degree() as i64;
        // LHS term N_i t^(A - i), RHS term N_i t^(k + i)
        let lhs: BTreeMap<i64, BigInt> = self
            .num
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (a - i as i64, c * den_sign))
            .collect();
        let rhs: BTreeMap<i64, BigInt> = self
            .num
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (k + i as i64, c * sign))
            .collect();
        debug_assert!(lhs.len() <= d + 1);
        lhs == rhs
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn gf(num: &[i64], den: &[(usize, u32)]) -> RationalGF {
        RationalGF::new(IntPoly::from_i64s(num), DenomFactors::from_pairs(den))
    }

    #[test]
    fn poly_ops() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, IntPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(&a + &b, IntPoly::constant(2));
        let p = IntPoly::from_i64s(&[1, 3, 1]);
        assert_eq!(p.scale(&BigInt::one()), p);
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            gf(&[1], &[(1, 3), (2, 1)]).series_coeffs(4),
            ints(&[1, 3, 7, 13, 22])
        );
        assert_eq!(gf(&[1], &[(1, 1)]).series_coeffs(3), ints(&[1, 1, 1, 1]));
        assert_eq!(
            gf(&[1, 0, 1], &[(1, 2)]).series_coeffs(5),
            ints(&[1, 2, 4, 6, 8, 10])
        );
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&IntPoly::from_i64s(&[1, 3, 1]), 2));
        assert!(is_palindromic(&IntPoly::from_i64s(&[1, 1]), 1));
        assert!(!is_palindromic(&IntPoly::from_i64s(&[1, 2]), 1));
        // window wider than the degree
        assert!(is_palindromic(&IntPoly::from_i64s(&[0, 1]), 2));
        assert!(!is_palindromic(&IntPoly::from_i64s(&[1, 1, 1]), 1));
    }

    #[test]
    fn reciprocal_symmetry_examples() {
        let z3 = gf(&[1, 0, 0, 0, 0, 0, -1], &[(2, 3)]);
        assert!(z3.check_reciprocal_symmetry(1, 0));
        assert!(gf(&[1], &[(1, 3), (2, 1)]).check_reciprocal_symmetry(1, 5));
        assert!(!gf(&[1], &[(1, 1)]).check_reciprocal_symmetry(1, 0));
        assert!(gf(&[1], &[(1, 1)]).check_reciprocal_symmetry(-1, 1));
    }

    #[test]
    fn gf_ops() {
        assert_eq!(gf(&[1], &[(2, 1)]).mul_factor(2), RationalGF::one());
        assert!(gf(&[1, 0, -1], &[(1, 1), (2, 1)]).equal(&gf(&[1], &[(1, 1)])));
        assert!(!gf(&[1], &[(1, 1)]).equal(&gf(&[1], &[(2, 1)])));
        let z = gf(&[1, 0, 0, 0, 0, 0, -1], &[]);
        assert_eq!(
            z.div_factor(3).unwrap().num,
            IntPoly::from_i64s(&[1, 0, 0, 1])
        );
        assert!(matches!(
            gf(&[1, 1], &[]).div_factor(2),
            Err(Error::InexactDivision { a: 2 })
        ));
    }

    #[test]
    fn add_uses_common_denominator() {
        let s = gf(&[1], &[(1, 1)]).add(&gf(&[1], &[(2, 1)]));
        let expected: Vec<BigInt> = (0..8)
            .map(|k| BigInt::from(1 + (k % 2 == 0) as i64))
            .collect();
        assert_eq!(s.series_coeffs(7), expected);
    }

    fn arb_gf() -> impl Strategy<Value = RationalGF> {
        (
            prop::collection::vec(-5i64..=5, 0..6),
            prop::collection::vec((1usize..=4, 1u32..=3), 0..4),
        )
            .prop_map(|(num, den)| gf(&num, &den))
    }

    proptest! {
        #[test]
        fn series_prefixes_agree(g in arb_gf(), n in 0usize..20) {
            let long = g.series_coeffs(n + 7);
            prop_assert_eq!(&long[..=n], &g.series_coeffs(n)[..]);
        }

        #[test]
        fn equal_implies_same_series(g in arb_gf(), a in 1usize..4) {
            // multiplying numerator and denominator by the same factor
            let h = g.mul_poly(&IntPoly::one_minus_t_pow(a)).over_factor(a, 1);
            prop_assert!(g.equal(&h));
            prop_assert_eq!(g.series_coeffs(15), h.series_coeffs(15));
        }

        #[test]
        fn palindrome_matches_reversal(c in prop::collection::vec(-3i64..=3, 0..7), d in 0usize..8) {
            let p = IntPoly::from_i64s(&c);
            let brute = p.degree().is_none_or(|deg| deg <= d)
                && (0..=d).all(|k| p.coeff(k) == p.coeff(d - k));
            prop_assert_eq!(is_palindromic(&p, d), brute);
        }
    }
}
