//! Balanced bipartite digraphs with bitmask adjacency.
//!
//! Vertex ids are dense: `0..a` is the colour class X and `a..2a` is the
//! colour class Y. Every vertex keeps an out-mask and an in-mask over all
//! `2a` ids, so `a` is capped at [`MAX_CLASS_SIZE`].

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported class size (two classes must fit in a `u64` mask).
pub const MAX_CLASS_SIZE: usize = 32;

/// A set of vertex ids stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// All ids in `lo..hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo >= hi {
            return VertexSet::EMPTY;
        }
        let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
        VertexSet(upper & !((1u64 << lo) - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Out-, in- and total degree of a vertex relative to some vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out: usize,
    pub inn: usize,
    pub total: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// A balanced bipartite digraph on `2a` vertices.
///
/// Values are immutable once built; every modification returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteDigraph {
    a: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl fmt::Debug for BipartiteDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteDigraph")
            .field("a", &self.a)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl BipartiteDigraph {
    /// Builds a digraph from an explicit arc list.
    pub fn new(a: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut graph = Self::empty(a)?;
        for (u, v) in arcs {
            graph.check_arc(u, v)?;
            if graph.has_arc(u, v) {
                return Err(Error::DuplicateArc(u, v));
            }
            graph.set_arc(u, v);
        }
        Ok(graph)
    }

    /// The arcless digraph with classes of size `a`.
    pub fn empty(a: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::ClassTooSmall(a));
        }
        if a > MAX_CLASS_SIZE {
            return Err(Error::ClassTooLarge {
                a,
                max: MAX_CLASS_SIZE,
            });
        }
        Ok(BipartiteDigraph {
            a,
            out: vec![0; 2 * a],
            inn: vec![0; 2 * a],
        })
    }

    /// The complete bipartite digraph: every cross pair in both directions.
    pub fn complete(a: usize) -> Result<Self> {
        let mut graph = Self::empty(a)?;
        let xs = graph.x_class().bits();
        let ys = graph.y_class().bits();
        for v in 0..2 * a {
            let other = if v < a { ys } else { xs };
            graph.out[v] = other;
            graph.inn[v] = other;
        }
        Ok(graph)
    }

    fn check_arc(&self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    a: self.a,
                });
            }
        }
        if self.is_x(u) == self.is_x(v) {
            return Err(Error::SameClassArc(u, v));
        }
        Ok(())
    }

    pub(crate) fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1u64 << v;
        self.inn[v] |= 1u64 << u;
    }

    pub(crate) fn clear_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1u64 << v);
        self.inn[v] &= !(1u64 << u);
    }

    /// A copy with the arc `uv` added.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        self.check_arc(u, v)?;
        if self.has_arc(u, v) {
            return Err(Error::DuplicateArc(u, v));
        }
        let mut graph = self.clone();
        graph.set_arc(u, v);
        Ok(graph)
    }

    /// A copy with the arc `uv` removed (no-op when absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Result<Self> {
        self.check_arc(u, v)?;
        let mut graph = self.clone();
        graph.clear_arc(u, v);
        Ok(graph)
    }

    /// Class size `a`.
    pub fn class_size(&self) -> usize {
        self.a
    }

    /// Number of vertices, `2a`.
    pub fn order(&self) -> usize {
        2 * self.a
    }

    pub fn is_x(&self, v: usize) -> bool {
        v < self.a
    }

    pub fn x_class(&self) -> VertexSet {
        VertexSet::range(0, self.a)
    }

    pub fn y_class(&self) -> VertexSet {
        VertexSet::range(self.a, 2 * self.a)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(0, 2 * self.a)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u] >> v & 1 == 1
    }

    /// Adjacent in at least one direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet(self.inn[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    pub fn total_degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Degree of `v` relative to the vertex set `within`.
    pub fn degree(&self, v: usize, within: VertexSet) -> Result<DegreeProfile> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, a: self.a });
        }
        Ok(self.degree_within(v, within))
    }

    pub(crate) fn degree_within(&self, v: usize, within: VertexSet) -> DegreeProfile {
        let out = (self.out[v] & within.0).count_ones() as usize;
        let inn = (self.inn[v] & within.0).count_ones() as usize;
        DegreeProfile {
            out,
            inn,
            total: out + inn,
        }
    }

    /// Vertices dominated by (`Out`) or dominating (`In`) some member of `from`.
    pub fn neighborhood(&self, from: VertexSet, direction: Direction) -> VertexSet {
        let masks = match direction {
            Direction::Out => &self.out,
            Direction::In => &self.inn,
        };
        VertexSet(
            (from & self.vertices())
                .iter()
                .fold(0, |acc, v| acc | masks[v]),
        )
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs in ascending `(source, target)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
    }

    /// The same digraph with the roles of X and Y exchanged: vertex `v`
    /// becomes `(v + a) mod 2a`.
    pub fn mirrored(&self) -> Self {
        let n = self.order();
        let swap = |v: usize| (v + self.a) % n;
        let mut graph = BipartiteDigraph {
            a: self.a,
            out: vec![0; n],
            inn: vec![0; n],
        };
        for (u, v) in self.arcs() {
            graph.set_arc(swap(u), swap(v));
        }
        graph
    }

    /// The subdigraph induced by `keep`, relabelled densely with the
    /// original ids retained.
    pub fn induced(&self, keep: VertexSet) -> Subdigraph {
        let keep = keep & self.vertices();
        let x_ids: Vec<usize> = (keep & self.x_class()).iter().collect();
        let y_ids: Vec<usize> = (keep & self.y_class()).iter().collect();
        let original: Vec<usize> = x_ids.iter().chain(&y_ids).copied().collect();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let relabel = |mask: u64| -> u64 {
            VertexSet(mask & keep.0)
                .iter()
                .fold(0, |acc, w| acc | 1u64 << local[w])
        };
        let out = original.iter().map(|&v| relabel(self.out[v])).collect();
        let inn = original.iter().map(|&v| relabel(self.inn[v])).collect();
        Subdigraph {
            x_count: x_ids.len(),
            y_count: y_ids.len(),
            original,
            out,
            inn,
        }
    }

    /// True iff every ordered pair of distinct vertices is joined by a
    /// directed path.
    pub fn is_strongly_connected(&self) -> bool {
        let all = self.vertices();
        closure(0, &self.out) == all && closure(0, &self.inn) == all
    }

    /// Vertices reachable from `start` (inclusive) inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier, Direction::Out) & within;
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    pub(crate) fn out_masks(&self) -> &[u64] {
        &self.out
    }
}

fn closure(start: usize, masks: &[u64]) -> VertexSet {
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let mut fresh = masks[v] & !seen;
        seen |= fresh;
        while fresh != 0 {
            stack.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    VertexSet(seen)
}

/// An induced subdigraph. Local ids list the kept X vertices first, then
/// the kept Y vertices, each in ascending original order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdigraph {
    x_count: usize,
    y_count: usize,
    original: Vec<usize>,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Subdigraph {
    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn order(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }

    pub fn original_id(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn original_ids(&self) -> &[usize] {
        &self.original
    }

    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.original.iter().position(|&v| v == original)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u] >> v & 1 == 1
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
    }

    /// Reinterprets a balanced view with at least two vertices per class as
    /// a digraph in its own right (local ids).
    pub fn to_balanced(&self) -> Option<BipartiteDigraph> {
        if self.x_count != self.y_count || self.x_count < 2 {
            return None;
        }
        Some(BipartiteDigraph {
            a: self.x_count,
            out: self.out.clone(),
            inn: self.inn.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_has_all_cross_arcs() {
        let g = BipartiteDigraph::complete(2).unwrap();
        assert_eq!(g.arc_count(), 8);
        let listed = BipartiteDigraph::new(
            2,
            [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 1)],
        )
        .unwrap();
        assert_eq!(g, listed);
    }

    #[test]
    fn rejects_bad_arcs() {
        assert_eq!(
            BipartiteDigraph::new(2, [(0, 1)]).unwrap_err(),
            Error::SameClassArc(0, 1)
        );
        assert_eq!(
            BipartiteDigraph::new(2, [(0, 4)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 4, a: 2 }
        );
        assert_eq!(
            BipartiteDigraph::new(2, [(0, 2), (0, 2)]).unwrap_err(),
            Error::DuplicateArc(0, 2)
        );
        assert_eq!(BipartiteDigraph::new(1, []).unwrap_err(), Error::ClassTooSmall(1));
        assert!(BipartiteDigraph::empty(33).is_err());
    }

    #[test]
    fn degree_counts_inside_set() {
        let g = BipartiteDigraph::complete(3).unwrap();
        for v in 0..6 {
            let d = g.degree(v, g.vertices()).unwrap();
            assert_eq!((d.out, d.inn, d.total), (3, 3, 6));
        }
        let d = g.degree(0, VertexSet::from_iter([3, 4])).unwrap();
        assert_eq!(d.total, 4);
        assert!(g.degree(6, g.vertices()).is_err());
    }

    #[test]
    fn neighborhood_edge_cases() {
        let g = BipartiteDigraph::complete(2).unwrap();
        assert!(g.neighborhood(VertexSet::EMPTY, Direction::Out).is_empty());
        assert_eq!(
            g.neighborhood(VertexSet::singleton(0), Direction::Out),
            g.y_class()
        );
    }

    #[test]
    fn induced_views() {
        let g = BipartiteDigraph::complete(3).unwrap();
        assert_eq!(g.induced(g.vertices()).to_balanced().unwrap(), g);
        let empty = g.induced(VertexSet::EMPTY);
        assert!(empty.is_empty());
        assert_eq!(empty.arc_count(), 0);
        let sub = g.induced(VertexSet::from_iter([0, 1, 3, 4]));
        assert_eq!(sub.to_balanced().unwrap(), BipartiteDigraph::complete(2).unwrap());
        assert_eq!(sub.original_ids(), &[0, 1, 3, 4]);
        let lopsided = g.induced(VertexSet::from_iter([0, 1, 3]));
        assert_eq!((lopsided.x_count(), lopsided.y_count()), (2, 1));
        assert!(lopsided.to_balanced().is_none());
    }

    #[test]
    fn strong_connectivity() {
        assert!(BipartiteDigraph::complete(2).unwrap().is_strongly_connected());
        let path = BipartiteDigraph::new(2, [(0, 2), (2, 1), (1, 3)]).unwrap();
        assert!(!path.is_strongly_connected());
    }

    #[test]
    fn mirror_is_an_involution() {
        let g = BipartiteDigraph::new(3, [(0, 3), (4, 1), (2, 5), (5, 0)]).unwrap();
        let m = g.mirrored();
        assert!(m.has_arc(3, 0) && m.has_arc(1, 4));
        assert_eq!(m.mirrored(), g);
    }
}
