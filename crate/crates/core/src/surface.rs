//! Surface signatures and words in the standard free generators `a_1..a_m`
//! of the fundamental group of a surface with nonempty boundary.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus `g` and number of boundary components `n` of a hyperbolic
/// bordered surface (`n >= 1`, `2 - 2g - n < 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSig {
    g: u32,
    n: u32,
}

impl SurfaceSig {
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if n == 0 || 2 * g + n <= 2 {
            return Err(Error::InvalidSurface { g, n });
        }
        Ok(Self { g, n })
    }

    /// The genus-zero surface with `m + 1` boundary components, whose
    /// fundamental group is free of rank `m`.
    pub fn planar(m: usize) -> Result<Self> {
        Self::new(0, m as u32 + 1)
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn boundary_count(&self) -> u32 {
        self.n
    }

    /// Free rank `2g + n - 1`.
    pub fn rank(&self) -> usize {
        (2 * self.g + self.n - 1) as usize
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.g as i64 - self.n as i64
    }

    /// Word length of the last boundary component, `4g + n - 1`.
    pub fn long_boundary_length(&self) -> usize {
        (4 * self.g + self.n - 1) as usize
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.g, self.n)
    }
}

/// A generator `a_i` or its inverse. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    index: u16,
    inverse: bool,
}

impl Letter {
    pub fn gen(index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Self {
            index: index as u16,
            inverse: false,
        }
    }

    pub fn inv(index: usize) -> Self {
        Self::gen(index).inverse()
    }

    pub fn new(index: usize, exponent: i8) -> Self {
        match exponent {
            1 => Self::gen(index),
            -1 => Self::inv(index),
            _ => panic!("letter exponent must be +1 or -1"),
        }
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn exponent(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Self) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

// a1 < a1^-1 < a2 < a2^-1 < ...
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index, self.inverse).cmp(&(other.index, other.inverse))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "a{}^-1", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// A word in the generators, not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    Free,
    Cyclic,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from signed indices: `2` is `a2`, `-2` is `a2^-1`.
    pub fn from_signed(indices: &[i32]) -> Self {
        Self::new(
            indices
                .iter()
                .map(|&i| {
                    assert!(i != 0, "0 is not a generator");
                    Letter::new(i.unsigned_abs() as usize, i.signum() as i8)
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used (0 for the empty word).
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(Letter::index).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(letters)
    }

    /// `u w u^-1`, unreduced.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.concat(self).concat(&u.inverse())
    }

    pub fn reduce(&self, mode: Reduction) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        if mode == Reduction::Cyclic {
            // a freely reduced word only cancels cyclically at both ends at once
            let mut lo = 0;
            let mut hi = stack.len();
            while hi - lo >= 2 && stack[lo].cancels(stack[hi - 1]) {
                lo += 1;
                hi -= 1;
            }
            stack = stack[lo..hi].to_vec();
        }
        Self::new(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&a), Some(&b)) if self.letters.len() >= 2 => !a.cancels(b),
                _ => true,
            }
    }

    /// Word length of the conjugacy class: the cyclically reduced length.
    pub fn class_length(&self) -> usize {
        self.reduce(Reduction::Cyclic).len()
    }

    pub fn canonical_class(&self) -> CyclicClass {
        CyclicClass::of(self)
    }

    fn rotation(&self, k: usize) -> Self {
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Self::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses words such as `a1 a2^-1`, `a1*a2^-1` or `1` (the empty word).
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::empty());
        }
        let bad = || Error::ParseWord(s.to_string());
        let mut letters = Vec::new();
        for tok in s
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
        {
            let body = tok.strip_prefix('a').ok_or_else(bad)?;
            let (digits, exponent) = match body.split_once('^') {
                Some((d, "-1")) => (d, -1),
                Some((d, "1")) => (d, 1),
                Some(_) => return Err(bad()),
                None => (body, 1),
            };
            let index: usize = digits.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            letters.push(Letter::new(index, exponent));
        }
        Ok(Self::new(letters))
    }
}

/// A nontrivial-or-trivial conjugacy class of the free group, taken up to
/// inversion. The stored representative is the lexicographically least
/// rotation of the cyclic reduction of the word or of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicClass {
    canon: Word,
}

impl CyclicClass {
    pub fn of(word: &Word) -> Self {
        let reduced = word.reduce(Reduction::Cyclic);
        if reduced.is_empty() {
            return Self { canon: reduced };
        }
        let inv = reduced.inverse();
        let canon = (0..reduced.len())
            .flat_map(|k| [reduced.rotation(k), inv.rotation(k)])
            .min()
            .expect("nonempty word has rotations");
        Self { canon }
    }

    pub fn word(&self) -> &Word {
        &self.canon
    }

    pub fn length(&self) -> usize {
        self.canon.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.canon.is_empty()
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canon)
    }
}

/// The boundary word `a_{2g+n}` solved from the relator
/// `[a_1,a_2]...[a_{2g-1},a_{2g}] a_{2g+1} ... a_{2g+n} = 1`,
/// with `[x,y] = x y x^-1 y^-1`.
pub fn long_boundary_word(sig: SurfaceSig) -> Word {
    let mut letters = Vec::new();
    for i in 1..=sig.genus() as usize {
        let (x, y) = (2 * i - 1, 2 * i);
        letters.extend([
            Letter::gen(x),
            Letter::gen(y),
            Letter::inv(x),
            Letter::inv(y),
        ]);
    }
    for k in 2 * sig.genus() as usize + 1..=sig.rank() {
        letters.push(Letter::gen(k));
    }
    Word::new(letters).inverse()
}

/// Classes of the `n` boundary components with their word lengths:
/// `a_{2g+1}, ..., a_{2g+n-1}` (length 1 each) and the long boundary
/// (length `4g + n - 1`).
pub fn boundary_classes(sig: SurfaceSig) -> Vec<(CyclicClass, usize)> {
    let mut out: Vec<(CyclicClass, usize)> = (2 * sig.genus() as usize + 1..=sig.rank())
        .map(|k| (Word::new(vec![Letter::gen(k)]).canonical_class(), 1))
        .collect();
    let long = long_boundary_word(sig);
    out.push((long.canonical_class(), long.class_length()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &[i32]) -> Word {
        Word::from_signed(s)
    }

    #[test]
    fn signatures() {
        assert_eq!(SurfaceSig::new(1, 1).unwrap().rank(), 2);
        assert_eq!(SurfaceSig::new(0, 3).unwrap().rank(), 2);
        assert!(SurfaceSig::new(0, 2).is_err());
        assert!(SurfaceSig::new(1, 0).is_err());
        assert!(SurfaceSig::new(0, 1).is_err());
        assert_eq!(SurfaceSig::new(2, 1).unwrap().euler_characteristic(), -3);
    }

    #[test]
    fn reductions() {
        assert!(w(&[1, -1]).reduce(Reduction::Free).is_empty());
        assert_eq!(w(&[1, 2, -1]).reduce(Reduction::Cyclic), w(&[2]));
        assert_eq!(w(&[1, 2]).reduce(Reduction::Cyclic), w(&[1, 2]));
        assert_eq!(w(&[1, 2, -1]).reduce(Reduction::Free), w(&[1, 2, -1]));
        assert_eq!(w(&[1, 2, -2, 3, -1]).reduce(Reduction::Cyclic), w(&[3]));
    }

    #[test]
    fn class_lengths() {
        assert_eq!(w(&[1, 2, -1]).class_length(), 1);
        assert_eq!(w(&[1, 2, -1, -2]).class_length(), 4);
        let sig = SurfaceSig::new(1, 1).unwrap();
        assert_eq!(long_boundary_word(sig).class_length(), 4);
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(w(&[1, 2]).canonical_class(), w(&[2, 1]).canonical_class());
        assert_eq!(w(&[1, 2]).canonical_class(), w(&[-2, -1]).canonical_class());
        assert_ne!(w(&[1, 2]).canonical_class(), w(&[1, -2]).canonical_class());
        let c = w(&[-2, 1, 1]).canonical_class();
        assert_eq!(c.word().canonical_class(), c);
    }

    #[test]
    fn length_two_classes_by_exhaustion() {
        // cyclically reduced length-2 words over a1, a2 fall into four classes:
        // a1^2, a2^2, a1 a2 and a1 a2^-1
        let mut classes = std::collections::BTreeSet::new();
        for x in [1, -1, 2, -2] {
            for y in [1, -1, 2, -2] {
                let word = w(&[x, y]);
                if word.is_cyclically_reduced() {
                    classes.insert(word.canonical_class());
                }
            }
        }
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn boundaries() {
        let lens = |g, n| -> Vec<usize> {
            boundary_classes(SurfaceSig::new(g, n).unwrap())
                .iter()
                .map(|b| b.1)
                .collect()
        };
        assert_eq!(lens(0, 3), vec![1, 1, 2]);
        assert_eq!(lens(1, 1), vec![4]);
        assert_eq!(lens(0, 4), vec![1, 1, 1, 3]);
        let b03 = boundary_classes(SurfaceSig::new(0, 3).unwrap());
        assert_eq!(b03[2].0, w(&[1, 2]).canonical_class());
        let b11 = boundary_classes(SurfaceSig::new(1, 1).unwrap());
        assert_eq!(b11[0].0, w(&[1, 2, -1, -2]).canonical_class());
        for g in 0..3 {
            for n in 1..5 {
                if let Ok(sig) = SurfaceSig::new(g, n) {
                    let total: usize = boundary_classes(sig).iter().map(|b| b.1).sum();
                    assert_eq!(total, (n as usize - 1) + sig.long_boundary_length());
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let word: Word = "a1 a2^-1".parse().unwrap();
        assert_eq!(word, w(&[1, -2]));
        assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        assert_eq!("a1*a1".parse::<Word>().unwrap(), w(&[1, 1]));
        assert!("b1".parse::<Word>().is_err());
        assert!("a0".parse::<Word>().is_err());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![1i32..=3, -3i32..=-1], 0..max_len)
            .prop_map(|v| Word::from_signed(&v))
    }

    proptest! {
        #[test]
        fn length_is_conjugation_and_inversion_invariant(u in arb_word(6), x in arb_word(8)) {
            let len = x.class_length();
            prop_assert_eq!(x.conjugate_by(&u).class_length(), len);
            prop_assert_eq!(x.inverse().class_length(), len);
        }

        #[test]
        fn canonical_class_is_conjugation_invariant(u in arb_word(6), x in arb_word(8)) {
            let c = x.canonical_class();
            prop_assert_eq!(x.conjugate_by(&u).canonical_class(), c.clone());
            prop_assert_eq!(x.inverse().canonical_class(), c.clone());
            prop_assert!(c.word().is_cyclically_reduced());
            prop_assert_eq!(c.word().canonical_class(), c);
        }
    }
}
