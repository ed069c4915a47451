//! Degree-condition checkers. Each returns the lexicographically first
//! failure as a witness whose degree sum can be recomputed from the graph.

use serde::Serialize;

use crate::compat::contract;
use crate::digraph::BipartiteDigraph;
use crate::error::Result;
use crate::matching::Matching;

/// Which degree a witness sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeKind {
    Total,
    /// `d⁺(u) + d⁻(v)` for a pair, or `min(d⁺, d⁻)` for a single vertex.
    Half,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Vertex {
        vertex: usize,
        kind: DegreeKind,
        value: usize,
        bound: usize,
    },
    Pair {
        u: usize,
        v: usize,
        kind: DegreeKind,
        sum: usize,
        bound: usize,
    },
    Quad {
        vertices: [usize; 4],
        sum: usize,
        bound: usize,
    },
}

impl Witness {
    /// The reported value (degree, or degree sum).
    pub fn value(&self) -> usize {
        match *self {
            Witness::Vertex { value, .. } => value,
            Witness::Pair { sum, .. } | Witness::Quad { sum, .. } => sum,
        }
    }

    pub fn bound(&self) -> usize {
        match *self {
            Witness::Vertex { bound, .. } | Witness::Pair { bound, .. } | Witness::Quad { bound, .. } => bound,
        }
    }

    /// Recomputes the value from `graph` alone.
    pub fn recompute(&self, graph: &BipartiteDigraph) -> usize {
        match *self {
            Witness::Vertex { vertex, kind: DegreeKind::Total, .. } => graph.total_degree(vertex),
            Witness::Vertex { vertex, kind: DegreeKind::Half, .. } => {
                graph.out_degree(vertex).min(graph.in_degree(vertex))
            }
            Witness::Pair { u, v, kind: DegreeKind::Total, .. } => graph.total_degree(u) + graph.total_degree(v),
            Witness::Pair { u, v, kind: DegreeKind::Half, .. } => graph.out_degree(u) + graph.in_degree(v),
            Witness::Quad { vertices, .. } => vertices.iter().map(|&v| graph.total_degree(v)).sum(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub satisfied: bool,
    pub witness: Option<Witness>,
}

impl ConditionReport {
    fn from_witness(witness: Option<Witness>) -> Self {
        ConditionReport {
            satisfied: witness.is_none(),
            witness,
        }
    }
}

/// `d(u) + d(v) >= 3a + 1` for every pair of distinct non-adjacent vertices.
pub fn check_condition_m(graph: &BipartiteDigraph) -> ConditionReport {
    let n = graph.order();
    let bound = 3 * graph.class_size() + 1;
    let witness = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !graph.adjacent(u, v))
        .map(|(u, v)| (u, v, graph.total_degree(u) + graph.total_degree(v)))
        .find(|&(_, _, sum)| sum < bound)
        .map(|(u, v, sum)| Witness::Pair {
            u,
            v,
            kind: DegreeKind::Total,
            sum,
            bound,
        });
    ConditionReport::from_witness(witness)
}

/// The four-vertex bound `6a + 2` over pairwise-distinct `x', y', x'', y''`
/// joined by `M`-compatible paths `x' -> y'` and `x'' -> y''`.
pub fn check_condition_a(graph: &BipartiteDigraph, matching: &Matching) -> Result<ConditionReport> {
    let contraction = contract(graph, matching)?;
    let a = graph.class_size();
    let bound = 6 * a + 2;
    // joined[x] has bit q set iff a compatible path runs from x to M(x_q)
    let joined: Vec<u64> = (0..a)
        .map(|p| contraction.reach_from(p).bits() | 1 << p)
        .collect();
    let y_of: Vec<usize> = (0..a).map(|q| matching.partner(q)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (x, mask) in joined.iter().enumerate() {
        for q in 0..a {
            if mask >> q & 1 == 1 {
                pairs.push((x, y_of[q]));
            }
        }
    }
    pairs.sort_unstable();
    let degree = |v: usize| graph.total_degree(v);
    for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            if x1 == x2 || y1 == y2 {
                continue;
            }
            let sum = degree(x1) + degree(y1) + degree(x2) + degree(y2);
            if sum < bound {
                return Ok(ConditionReport::from_witness(Some(Witness::Quad {
                    vertices: [x1, y1, x2, y2],
                    sum,
                    bound,
                })));
            }
        }
    }
    Ok(ConditionReport::from_witness(None))
}

/// Minimum total degree at least `ceil((3a + 1) / 2)`.
pub fn check_min_degree(graph: &BipartiteDigraph) -> ConditionReport {
    let bound = (3 * graph.class_size() + 2) / 2;
    let weakest = (0..graph.order()).min_by_key(|&v| (graph.total_degree(v), v));
    let witness = weakest
        .map(|v| (v, graph.total_degree(v)))
        .filter(|&(_, d)| d < bound)
        .map(|(vertex, value)| Witness::Vertex {
            vertex,
            kind: DegreeKind::Total,
            value,
            bound,
        });
    ConditionReport::from_witness(witness)
}

/// Both semi-degree minima at least `ceil((a + 2) / 2)`.
pub fn check_half_degrees(graph: &BipartiteDigraph) -> ConditionReport {
    let bound = (graph.class_size() + 3) / 2;
    let witness = (0..graph.order())
        .map(|v| (v, graph.out_degree(v).min(graph.in_degree(v))))
        .find(|&(_, d)| d < bound)
        .map(|(vertex, value)| Witness::Vertex {
            vertex,
            kind: DegreeKind::Half,
            value,
            bound,
        });
    ConditionReport::from_witness(witness)
}

/// `d⁺(u) + d⁻(v) >= a + 2` for every opposite-class ordered pair with
/// `uv` not an arc.
pub fn check_woodall_bipartite(graph: &BipartiteDigraph) -> ConditionReport {
    let n = graph.order();
    let bound = graph.class_size() + 2;
    let witness = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| graph.is_x(u) != graph.is_x(v) && !graph.has_arc(u, v))
        .map(|(u, v)| (u, v, graph.out_degree(u) + graph.in_degree(v)))
        .find(|&(_, _, sum)| sum < bound)
        .map(|(u, v, sum)| Witness::Pair {
            u,
            v,
            kind: DegreeKind::Half,
            sum,
            bound,
        });
    ConditionReport::from_witness(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{find_complete_matching, MatchDirection};

    #[test]
    fn complete_graphs_pass_everything() {
        for a in 2..=4 {
            let g = BipartiteDigraph::complete(a).unwrap();
            assert!(check_condition_m(&g).satisfied);
            assert!(check_min_degree(&g).satisfied);
            assert!(check_half_degrees(&g).satisfied);
            assert!(check_woodall_bipartite(&g).satisfied);
            let m = find_complete_matching(&g, MatchDirection::XToY).unwrap();
            assert!(check_condition_a(&g, &m).unwrap().satisfied);
        }
    }

    #[test]
    fn single_deletion_breaks_woodall() {
        let g = BipartiteDigraph::complete(3).unwrap().without_arc(0, 3).unwrap();
        let report = check_woodall_bipartite(&g);
        let w = report.witness.unwrap();
        assert_eq!(w, Witness::Pair { u: 0, v: 3, kind: DegreeKind::Half, sum: 4, bound: 5 });
        assert_eq!(w.recompute(&g), 4);
    }

    #[test]
    fn empty_graph_fails_with_first_pair() {
        let g = BipartiteDigraph::empty(2).unwrap();
        let w = check_condition_m(&g).witness.unwrap();
        assert_eq!(w, Witness::Pair { u: 0, v: 1, kind: DegreeKind::Total, sum: 0, bound: 7 });
        let w = check_min_degree(&g).witness.unwrap();
        assert_eq!((w.value(), w.bound()), (0, 4));
    }

    #[test]
    fn bounds_use_ceilings() {
        // a = 3: min degree bound ceil(10/2) = 5, half bound ceil(5/2) = 3
        let g = BipartiteDigraph::empty(3).unwrap();
        assert_eq!(check_min_degree(&g).witness.unwrap().bound(), 5);
        assert_eq!(check_half_degrees(&g).witness.unwrap().bound(), 3);
        let g = BipartiteDigraph::empty(4).unwrap();
        assert_eq!(check_min_degree(&g).witness.unwrap().bound(), 7);
        assert_eq!(check_half_degrees(&g).witness.unwrap().bound(), 3);
    }
}
