//! Non-crossing multigraphs on `m` points of a circle and the closed-form
//! generating functions they produce.
//!
//! On the genus-zero surface with `m + 1` boundary components, collapsing
//! every band interval of a reduced chord diagram to a point turns it into a
//! non-crossing multigraph on `p_1..p_m` with all degrees even. Counting
//! those by edge number gives `G_m(t)`, and `Z_m(t) = (1 - t^m) G_m(t)`.
//! `G_m` is assembled from the simple even graphs: bigons can be added
//! freely along boundary arcs and along diagonals, and each face of the
//! diagonal dissection contributes a copy of `F_k(t^2)`, the series of
//! non-crossing multigraphs using only diagonals of a `k`-gon.
//!
//! Vertices are numbered `1..=m` counterclockwise. Two vertices are
//! contiguous when their indices differ by `0` or `±1` mod `m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{DenomFactors, IntPoly, RationalGF};
use crate::surface::SurfaceSig;

pub type Edge = (usize, usize);

pub fn is_contiguous(i: usize, j: usize, m: usize) -> bool {
    let d = (i + m - j % m) % m;
    d == 0 || d == 1 || d + 1 == m
}

/// Strict interleaving of two chords on the circle.
pub fn crosses((a, b): Edge, (c, d): Edge) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A multigraph on the `m` circle vertices, stored as edge multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChordMultigraph {
    m: usize,
    edges: BTreeMap<Edge, u32>,
}

impl ChordMultigraph {
    pub fn empty(m: usize) -> Self {
        Self {
            m,
            edges: BTreeMap::new(),
        }
    }

    /// Edges are normalized to `(min, max)`; repeated entries add up.
    pub fn from_edges(m: usize, edges: &[Edge]) -> Self {
        let mut g = Self::empty(m);
        for &e in edges {
            g.add_edge(e, 1);
        }
        g
    }

    pub fn add_edge(&mut self, (i, j): Edge, mult: u32) {
        assert!(i != j, "self-loops are not allowed");
        assert!(
            (1..=self.m).contains(&i) && (1..=self.m).contains(&j),
            "vertex out of range"
        );
        if mult > 0 {
            *self.edges.entry((i.min(j), i.max(j))).or_insert(0) += mult;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.edges.iter().map(|(&e, &k)| (e, k))
    }

    pub fn support(&self) -> Vec<Edge> {
        self.edges.keys().copied().collect()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains_key(&(e.0.min(e.1), e.0.max(e.1)))
    }

    /// Total edge count with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&k| k as usize).sum()
    }

    /// Edges between non-contiguous vertices, with multiplicity.
    pub fn diagonal_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|(&(i, j), _)| !is_contiguous(i, j, self.m))
            .map(|(_, &k)| k as usize)
            .sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|(&(i, j), _)| i == v || j == v)
            .map(|(_, &k)| k as usize)
            .sum()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&k| k == 1)
    }

    pub fn is_non_crossing(&self) -> bool {
        let s = self.support();
        s.iter()
            .enumerate()
            .all(|(i, &e)| s[i + 1..].iter().all(|&f| !crosses(e, f)))
    }

    pub fn all_degrees_even(&self) -> bool {
        (1..=self.m).all(|v| self.degree(v).is_multiple_of(2))
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.edges.keys().all(|e| other.edges.contains_key(e))
    }

    /// Polygons cut out by the diagonals (non-contiguous edges).
    pub fn faces(&self) -> FaceDecomposition {
        let mut polygons: Vec<Vec<usize>> = vec![(1..=self.m).collect()];
        for (&(i, j), _) in self
            .edges
            .iter()
            .filter(|(&(i, j), _)| !is_contiguous(i, j, self.m))
        {
            let idx = polygons
                .iter()
                .position(|p| p.contains(&i) && p.contains(&j))
                .expect("non-crossing diagonals stay inside one face");
            let poly = polygons.swap_remove(idx);
            let pi = poly.iter().position(|&v| v == i).unwrap();
            let pj = poly.iter().position(|&v| v == j).unwrap();
            let (lo, hi) = (pi.min(pj), pi.max(pj));
            let first = poly[lo..=hi].to_vec();
            let mut second = poly[hi..].to_vec();
            second.extend_from_slice(&poly[..=lo]);
            polygons.push(first);
            polygons.push(second);
        }
        let mut face_sizes: Vec<usize> = polygons.iter().map(Vec::len).collect();
        face_sizes.sort_unstable();
        FaceDecomposition {
            face_sizes,
            diagonals: self.diagonal_count(),
        }
    }

    /// Toggles every boundary edge `p_i p_(i+1)` and keeps the diagonals.
    ///
    /// For `m = 2` the two boundary arcs join the same pair of vertices and a
    /// simple graph cannot hold both, so the empty graph is its own dual.
    pub fn dual(&self) -> Self {
        let mut out = Self::empty(self.m);
        for (e, k) in self.edges() {
            if !is_contiguous(e.0, e.1, self.m) {
                out.add_edge(e, k);
            }
        }
        if self.m >= 3 {
            for i in 1..=self.m {
                let e = (i, i % self.m + 1);
                if !self.contains(e) {
                    out.add_edge(e, 1);
                }
            }
        }
        out
    }

    /// `t^e(G) * prod_k f_{m_k}(t^2) / (1 - t^2)^(2m - 3)`: the generating
    /// function of all even multigraphs that reduce to this simple graph
    /// after removing bigons.
    pub fn contribution(&self) -> RationalGF {
        let faces = self.faces();
        let g = faces.numerator();
        RationalGF::new(
            g.shift(self.edge_count()),
            DenomFactors::from_pairs(&[(2, 2 * self.m as u32 - 3)]),
        )
    }
}

impl fmt::Display for ChordMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, ((i, j), k)) in self.edges().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "p{i}p{j}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDecomposition {
    /// Sorted ascending.
    pub face_sizes: Vec<usize>,
    pub diagonals: usize,
}

impl FaceDecomposition {
    /// `prod_k f_{m_k}(t^2)`. A 2-gon face only occurs for `m = 2` and
    /// carries no diagonals, so it contributes 1.
    pub fn numerator(&self) -> IntPoly {
        self.face_sizes.iter().fold(IntPoly::one(), |acc, &k| {
            if k < 3 {
                acc
            } else {
                &acc * &dissection_polynomial(k)
                    .expect("face has >= 3 sides")
                    .substitute_power(2)
            }
        })
    }

    /// Degree of [`Self::numerator`]: `2 * sum (m_k - 3)` over faces with `m_k >= 3`.
    pub fn numerator_degree(&self) -> usize {
        self.face_sizes
            .iter()
            .map(|&k| 2 * k.saturating_sub(3))
            .sum()
    }

    /// `sum (m_k - 3) + e°`, which should equal `m - 3`.
    pub fn excess(&self) -> i64 {
        self.face_sizes.iter().map(|&k| k as i64 - 3).sum::<i64>() + self.diagonals as i64
    }
}

fn check_polygon(m: usize, min: usize) -> Result<()> {
    if m < min {
        return Err(Error::TooFewVertices { m, min });
    }
    Ok(())
}

fn all_pairs(m: usize) -> Vec<Edge> {
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect()
}

fn diagonals(m: usize) -> Vec<Edge> {
    all_pairs(m)
        .into_iter()
        .filter(|&(i, j)| !is_contiguous(i, j, m))
        .collect()
}

/// Every pairwise non-crossing subset of `candidates` with at most
/// `max_size` elements, by backtracking in the given order.
pub fn noncrossing_subsets(candidates: &[Edge], max_size: usize) -> Vec<Vec<Edge>> {
    fn rec(
        from: usize,
        candidates: &[Edge],
        max: usize,
        cur: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for k in from..candidates.len() {
            let e = candidates[k];
            if cur.iter().all(|&f| !crosses(e, f)) {
                cur.push(e);
                rec(k + 1, candidates, max, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, candidates, max_size, &mut Vec::new(), &mut out);
    out
}

/// All dissections of the `m`-gon, of every size.
pub fn all_dissections(m: usize) -> Result<Vec<ChordMultigraph>> {
    check_polygon(m, 3)?;
    Ok(noncrossing_subsets(&diagonals(m), usize::MAX)
        .into_iter()
        .map(|s| ChordMultigraph::from_edges(m, &s))
        .collect())
}

/// Sets of `r` pairwise non-crossing diagonals of the `m`-gon.
pub fn enumerate_dissections(m: usize, r: usize) -> Result<Vec<ChordMultigraph>> {
    check_polygon(m, 3)?;
    Ok(noncrossing_subsets(&diagonals(m), r)
        .into_iter()
        .filter(|s| s.len() == r)
        .map(|s| ChordMultigraph::from_edges(m, &s))
        .collect())
}

/// Number of dissections by size, `r = 0..=m-3`.
pub fn dissection_counts(m: usize) -> Result<Vec<u64>> {
    check_polygon(m, 3)?;
    let mut counts = vec![0u64; m - 2];
    for s in noncrossing_subsets(&diagonals(m), usize::MAX) {
        counts[s.len()] += 1;
    }
    Ok(counts)
}

/// Calls `visit(multiplicities)` for every assignment of positive
/// multiplicities to `support.len()` edges summing to `total`.
fn for_each_multiplicity(slots: usize, total: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(slots: usize, left: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == slots {
            if left == 0 {
                visit(cur);
            }
            return;
        }
        let remaining_slots = slots - cur.len() - 1;
        if left < remaining_slots + 1 {
            return;
        }
        for k in 1..=left - remaining_slots {
            cur.push(k);
            rec(slots, left - k, cur, visit);
            cur.pop();
        }
    }
    if slots == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    rec(slots, total, &mut Vec::with_capacity(slots), visit);
}

/// Non-crossing multigraphs with `r` edges, none joining contiguous
/// vertices. Every multiplicity vector is visited explicitly.
pub fn count_diagonal_multigraphs(m: usize, r: usize) -> Result<u64> {
    check_polygon(m, 3)?;
    let mut count = 0u64;
    for support in noncrossing_subsets(&diagonals(m), r) {
        for_each_multiplicity(support.len(), r, &mut |_| count += 1);
    }
    Ok(count)
}

/// `f_m(t) = sum_r |A_m^s(r)| t^r (1 - t)^(m-3-r)`, built from dissection counts.
pub fn dissection_polynomial(m: usize) -> Result<IntPoly> {
    let counts = dissection_counts(m)?;
    let d = m - 3;
    let one_minus_t = IntPoly::one_minus_t_pow(1);
    Ok(counts
        .iter()
        .enumerate()
        .fold(IntPoly::zero(), |acc, (r, &c)| {
            let term = &IntPoly::monomial(c, r) * &one_minus_t.pow((d - r) as u32);
            &acc + &term
        }))
}

/// `F_m(t) = f_m(t) / (1 - t)^(m-3)`: multigraphs using only diagonals.
pub fn diagonal_multigraph_series(m: usize) -> Result<RationalGF> {
    let f = dissection_polynomial(m)?;
    Ok(RationalGF::new(
        f,
        DenomFactors::from_pairs(&[(1, m as u32 - 3)]),
    ))
}

/// `sum_{r>=1} (-1)^(r-1) |A_m^s(r)|`, the Euler characteristic of the
/// complex of dissections.
pub fn dissection_euler_sum(m: usize) -> Result<i64> {
    let counts = dissection_counts(m)?;
    Ok(counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(r, &c)| if r % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum())
}

fn validate_dissection(m: usize, g: &ChordMultigraph) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::InvalidDissection {
            m,
            reason: reason.into(),
        })
    };
    if g.vertex_count() != m {
        return bad("vertex count mismatch");
    }
    if !g.is_simple() {
        return bad("repeated edge");
    }
    if g.support().iter().any(|&(i, j)| is_contiguous(i, j, m)) {
        return bad("edge between contiguous vertices");
    }
    if !g.is_non_crossing() {
        return bad("crossing diagonals");
    }
    Ok(())
}

/// `sum_{r>=r0} (-1)^(r-r0) #{dissections of size r containing gamma0}`.
pub fn containing_alternating_sum(m: usize, gamma0: &ChordMultigraph) -> Result<i64> {
    validate_dissection(m, gamma0)?;
    let r0 = gamma0.edge_count();
    Ok(all_dissections(m)?
        .iter()
        .filter(|d| gamma0.is_subgraph_of(d))
        .map(|d| {
            if (d.edge_count() - r0).is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum())
}

/// Simple non-crossing graphs on `m` circle vertices with all degrees even.
pub fn enumerate_even_simple(m: usize) -> Result<Vec<ChordMultigraph>> {
    check_polygon(m, 2)?;
    Ok(noncrossing_subsets(&all_pairs(m), usize::MAX)
        .into_iter()
        .map(|s| ChordMultigraph::from_edges(m, &s))
        .filter(ChordMultigraph::all_degrees_even)
        .collect())
}

/// Brute-force `|B_m(r)|`: non-crossing loopless multigraphs with `r` edges
/// and all degrees even, visiting every multiplicity vector.
pub fn count_even_multigraphs(m: usize, r: usize) -> Result<u64> {
    check_polygon(m, 2)?;
    let mut count = 0u64;
    for support in noncrossing_subsets(&all_pairs(m), r) {
        let mut degree = vec![0usize; m + 1];
        for_each_multiplicity(support.len(), r, &mut |mult| {
            degree.iter_mut().for_each(|d| *d = 0);
            for (&(i, j), &k) in support.iter().zip(mult) {
                degree[i] += k;
                degree[j] += k;
            }
            if degree.iter().all(|d| d % 2 == 0) {
                count += 1;
            }
        });
    }
    Ok(count)
}

/// `G_m(t) = sum_r |B_m(r)| t^r`, summed over simple even graphs.
/// The result has denominator `(1 - t^2)^(2m-3)`; for `m = 2` this is
/// `1 / (1 - t^2)`.
pub fn even_multigraph_series(m: usize) -> Result<RationalGF> {
    let graphs = enumerate_even_simple(m)?;
    let num = graphs.iter().fold(IntPoly::zero(), |acc, g| {
        &acc + &g.faces().numerator().shift(g.edge_count())
    });
    Ok(RationalGF::new(
        num,
        DenomFactors::from_pairs(&[(2, 2 * m as u32 - 3)]),
    ))
}

/// `Z_m(t) = (1 - t^m) G_m(t)`: non-peripheral multicurves on the
/// genus-zero surface with `m + 1` boundary components.
pub fn planar_nonperipheral_series(m: usize) -> Result<RationalGF> {
    Ok(even_multigraph_series(m)?.mul_factor(m))
}

/// `H_m(t) = Z_m(t) / ((1 - t)^(m+1) (1 - t^m))`: dimensions of the
/// word-length filtration on the trace ring of the free group of rank `m`.
pub fn filtration_hilbert_series(m: usize) -> Result<RationalGF> {
    Ok(planar_nonperipheral_series(m)?
        .div_or_over(m)
        .over_factor(1, m as u32 + 1))
}

/// `h_m(t) = H_m(t) (1 - t) / (1 - t^2)^m`: Hilbert series of the
/// conjugation invariants of `m` generic 2x2 matrices.
pub fn matrix_invariant_series(m: usize) -> Result<RationalGF> {
    Ok(filtration_hilbert_series(m)?
        .mul_factor(1)
        .over_factor(2, m as u32))
}

/// `(1 - t) H_m(t) = sum_r c'(r) t^r`: all multicurves by length.
pub fn all_multicurve_series(m: usize) -> Result<RationalGF> {
    Ok(filtration_hilbert_series(m)?.mul_factor(1))
}

/// `Z_{g,n}(t) = (1 - t)^n (1 - t^(4g+n-1)) H_m(t)`.
pub fn nonperipheral_series(sig: SurfaceSig) -> Result<RationalGF> {
    let mut z = filtration_hilbert_series(sig.rank())?;
    for _ in 0..sig.boundary_count() {
        z = z.mul_factor(1);
    }
    Ok(z.mul_factor(sig.long_boundary_length()))
}
