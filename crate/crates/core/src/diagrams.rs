//! Disk-with-strips model of a bordered surface and its chord diagrams.
//!
//! The surface of signature `(g, n)` with rank `m = 2g + n - 1` is a disk with
//! `m` bands. Band `k` is glued along two boundary intervals `I'_k` and
//! `I''_k`. A chord diagram places vertices in those intervals (as many in
//! `I'_k` as in `I''_k`) and joins them by chords inside the disk; gluing the
//! band arcs turns the chords into closed curves on the surface.
//!
//! Reduced non-crossing diagrams with `r` chords are in bijection with
//! multicurves of word length `r`, which is what makes them a counting model.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::genfun::IntPoly;
use crate::surface::{boundary_classes, CyclicClass, Letter, SurfaceSig, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `I'_k`: leaving through it crosses the band as `a_k`.
    Prime,
    /// `I''_k`: leaving through it crosses the band as `a_k^-1`.
    DoublePrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub strip: usize,
    pub side: Side,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks = match self.side {
            Side::Prime => "'",
            Side::DoublePrime => "''",
        };
        write!(f, "I{}{}", self.strip, marks)
    }
}

/// Counterclockwise order of the `2m` band intervals on the disk boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalLayout {
    slots: Vec<Interval>,
}

impl IntervalLayout {
    /// Each handle `(2i-1, 2i)` contributes `I'_{2i-1} I''_{2i} I''_{2i-1} I'_{2i}`;
    /// each remaining band `k` contributes `I'_k I''_k`.
    pub fn new(sig: SurfaceSig) -> Self {
        let prime = |strip| Interval {
            strip,
            side: Side::Prime,
        };
        let dprime = |strip| Interval {
            strip,
            side: Side::DoublePrime,
        };
        let mut slots = Vec::with_capacity(2 * sig.rank());
        for i in 1..=sig.genus() as usize {
            let (x, y) = (2 * i - 1, 2 * i);
            slots.extend([prime(x), dprime(y), dprime(x), prime(y)]);
        }
        for k in 2 * sig.genus() as usize + 1..=sig.rank() {
            slots.extend([prime(k), dprime(k)]);
        }
        Self { slots }
    }

    pub fn slots(&self) -> &[Interval] {
        &self.slots
    }

    pub fn slot_of(&self, interval: Interval) -> usize {
        self.slots
            .iter()
            .position(|&s| s == interval)
            .expect("interval in layout")
    }
}

pub fn layout(sig: SurfaceSig) -> IntervalLayout {
    IntervalLayout::new(sig)
}

/// A chord diagram up to isotopy of its vertices inside the intervals.
///
/// Vertex positions `0..2r` run counterclockwise: first the vertices of
/// layout slot 0, then slot 1, and so on. `partner[v]` is the other end of
/// the chord at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordDiagram {
    sig: SurfaceSig,
    counts: Vec<usize>,
    partner: Vec<usize>,
}

impl ChordDiagram {
    /// Builds a diagram from per-slot vertex counts and chords between
    /// vertex positions. Panics if the chords do not form a perfect matching.
    pub fn from_chords(sig: SurfaceSig, counts: Vec<usize>, chords: &[(usize, usize)]) -> Self {
        let total: usize = counts.iter().sum();
        assert_eq!(counts.len(), 2 * sig.rank(), "one count per interval");
        assert_eq!(total, 2 * chords.len(), "chords must cover every vertex");
        let mut partner = vec![usize::MAX; total];
        for &(a, b) in chords {
            assert!(a != b && partner[a] == usize::MAX && partner[b] == usize::MAX);
            partner[a] = b;
            partner[b] = a;
        }
        Self {
            sig,
            counts,
            partner,
        }
    }

    pub fn empty(sig: SurfaceSig) -> Self {
        Self::from_chords(sig, vec![0; 2 * sig.rank()], &[])
    }

    pub fn sig(&self) -> SurfaceSig {
        self.sig
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.partner.len() / 2
    }

    /// Chords as `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| a < b)
            .map(|(a, &b)| (a, b))
            .collect()
    }

    fn slot_index(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(slot, &c)| std::iter::repeat_n(slot, c))
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        let lay = IntervalLayout::new(self.sig);
        (1..=self.sig.rank()).all(|k| {
            self.counts[lay.slot_of(Interval {
                strip: k,
                side: Side::Prime,
            })] == self.counts[lay.slot_of(Interval {
                strip: k,
                side: Side::DoublePrime,
            })]
        })
    }

    pub fn is_non_crossing(&self) -> bool {
        let chords = self.chords();
        chords.iter().enumerate().all(|(i, &(a, b))| {
            chords[i + 1..]
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// No chord has both ends in one interval.
    pub fn is_reduced(&self) -> bool {
        let slot = self.slot_index();
        self.chords().iter().all(|&(a, b)| slot[a] != slot[b])
    }

    /// The band arc at each vertex: the `j`-th vertex of `I'_k` (counted
    /// counterclockwise) meets the `j`-th from last vertex of `I''_k`, which
    /// is the orientation-preserving gluing.
    fn band_partner(&self) -> Vec<usize> {
        let lay = IntervalLayout::new(self.sig);
        let mut start = Vec::with_capacity(self.counts.len());
        let mut acc = 0;
        for &c in &self.counts {
            start.push(acc);
            acc += c;
        }
        let mut out = vec![0; self.partner.len()];
        for k in 1..=self.sig.rank() {
            let p = lay.slot_of(Interval {
                strip: k,
                side: Side::Prime,
            });
            let q = lay.slot_of(Interval {
                strip: k,
                side: Side::DoublePrime,
            });
            let c = self.counts[p];
            for j in 0..c {
                let u = start[p] + j;
                let v = start[q] + (c - 1 - j);
                out[u] = v;
                out[v] = u;
            }
        }
        out
    }

    /// The closed curves of the diagram as raw words, one per component,
    /// read by alternating chords and band crossings.
    pub fn component_words(&self) -> Vec<Word> {
        let lay = IntervalLayout::new(self.sig);
        let slot = self.slot_index();
        let band = self.band_partner();
        let mut seen = vec![false; self.partner.len()];
        let mut words = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut letters = Vec::new();
            let mut cur = start;
            loop {
                let far = self.partner[cur];
                seen[cur] = true;
                seen[far] = true;
                let here = lay.slots()[slot[far]];
                letters.push(match here.side {
                    Side::Prime => Letter::gen(here.strip),
                    Side::DoublePrime => Letter::inv(here.strip),
                });
                cur = band[far];
                if cur == start {
                    break;
                }
            }
            words.push(Word::new(letters));
        }
        words
    }

    pub fn multicurve(&self) -> Multicurve {
        Multicurve::new(
            self.component_words()
                .iter()
                .map(Word::canonical_class)
                .collect(),
        )
    }
}

pub fn extract_multicurve(diagram: &ChordDiagram) -> Multicurve {
    diagram.multicurve()
}

/// Finite multiset of nontrivial free homotopy classes, unoriented.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multicurve {
    components: Vec<CyclicClass>,
}

impl Multicurve {
    pub fn new(mut components: Vec<CyclicClass>) -> Self {
        assert!(
            components.iter().all(|c| !c.is_trivial()),
            "multicurve components are nontrivial"
        );
        components.sort();
        Self { components }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_words(words: &[Word]) -> Self {
        Self::new(words.iter().map(Word::canonical_class).collect())
    }

    pub fn components(&self) -> &[CyclicClass] {
        &self.components
    }

    pub fn length(&self) -> usize {
        self.components.iter().map(CyclicClass::length).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c.word())?;
        }
        write!(f, "}}")
    }
}

/// Compositions of `total` into `parts` nonnegative parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    } else if total == 0 {
        out.push(Vec::new());
    }
    out
}

type Pairs = Vec<(usize, usize)>;

/// Non-crossing perfect matchings of `lo..hi` avoiding same-slot chords,
/// by pairing the first vertex with every admissible later vertex.
fn reduced_matchings(
    lo: usize,
    hi: usize,
    slot: &[usize],
    memo: &mut HashMap<(usize, usize), Vec<Pairs>>,
) -> Vec<Pairs> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    if let Some(hit) = memo.get(&(lo, hi)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        if slot[j] == slot[lo] {
            continue;
        }
        let inner = reduced_matchings(lo + 1, j, slot, memo);
        if inner.is_empty() {
            continue;
        }
        let outer = reduced_matchings(j + 1, hi, slot, memo);
        for a in &inner {
            for b in &outer {
                let mut pairs = Vec::with_capacity(1 + a.len() + b.len());
                pairs.push((lo, j));
                pairs.extend_from_slice(a);
                pairs.extend_from_slice(b);
                out.push(pairs);
            }
        }
    }
    memo.insert((lo, hi), out.clone());
    out
}

/// All reduced, balanced, non-crossing diagrams with `r` chords.
///
/// Ordered by band-count composition (lexicographic over bands `1..m`),
/// then by the first-vertex recursion. The order does not depend on how the
/// work is scheduled across threads.
pub fn enumerate_reduced(sig: SurfaceSig, r: usize) -> Vec<ChordDiagram> {
    let lay = IntervalLayout::new(sig);
    compositions(r, sig.rank())
        .into_par_iter()
        .flat_map_iter(|per_band| {
            let counts: Vec<usize> = lay.slots().iter().map(|s| per_band[s.strip - 1]).collect();
            let slot: Vec<usize> = counts
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
                .collect();
            let mut memo = HashMap::new();
            reduced_matchings(0, slot.len(), &slot, &mut memo)
                .into_iter()
                .map(|pairs| ChordDiagram::from_chords(sig, counts.clone(), &pairs))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `c'(r)` for `r = 0..=max_len`: multicurves of each word length.
pub fn series_all(sig: SurfaceSig, max_len: usize) -> Vec<u64> {
    (0..=max_len)
        .map(|r| enumerate_reduced(sig, r).len() as u64)
        .collect()
}

/// Turns `c'` into `c` by stripping boundary-parallel curves:
/// multiplies by `(1 - t)^(n-1) (1 - t^(4g+n-1))` and truncates.
pub fn nonperipheral_from_all(sig: SurfaceSig, all: &[u64]) -> Vec<BigInt> {
    let p = IntPoly::from_coeffs(all.iter().map(|&c| BigInt::from(c)).collect());
    let factor = &IntPoly::one_minus_t_pow(1).pow(sig.boundary_count() - 1)
        * &IntPoly::one_minus_t_pow(sig.long_boundary_length());
    let prod = &p * &factor;
    (0..all.len()).map(|k| prod.coeff(k)).collect()
}

/// `c(r)` for `r = 0..=max_len`: non-peripheral multicurves of each length.
pub fn series_nonperipheral(sig: SurfaceSig, max_len: usize) -> Vec<BigInt> {
    nonperipheral_from_all(sig, &series_all(sig, max_len))
}

pub fn is_peripheral_free(sig: SurfaceSig, mc: &Multicurve) -> bool {
    let boundary: BTreeSet<CyclicClass> =
        boundary_classes(sig).into_iter().map(|(c, _)| c).collect();
    mc.components().iter().all(|c| !boundary.contains(c))
}

/// Counts reduced diagrams of size `r` with no boundary-parallel component.
pub fn count_nonperipheral_direct(sig: SurfaceSig, r: usize) -> u64 {
    count_nonperipheral_in(sig, &enumerate_reduced(sig, r))
}

pub fn count_nonperipheral_in(sig: SurfaceSig, diagrams: &[ChordDiagram]) -> u64 {
    let boundary: BTreeSet<CyclicClass> =
        boundary_classes(sig).into_iter().map(|(c, _)| c).collect();
    diagrams
        .par_iter()
        .filter(|d| {
            d.multicurve()
                .components()
                .iter()
                .all(|c| !boundary.contains(c))
        })
        .count() as u64
}
