//! Complete matchings by augmenting paths, with Hall-violator certificates
//! when none exists, and the small-set expansion check.

use serde::{Deserialize, Serialize};

use crate::digraph::{BipartiteDigraph, Direction, VertexSet};
use crate::error::{Error, Result};

/// Which colour class the matching arcs leave from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatchDirection {
    XToY,
    YToX,
}

/// A complete matching: `a` independent arcs from one class onto the other.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    direction: MatchDirection,
    a: usize,
    // forward[i]: target of the i-th source vertex; backward[j]: source of the j-th target.
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl Matching {
    /// Builds and validates a matching from explicit `(source, target)` arcs.
    pub fn from_pairs(
        graph: &BipartiteDigraph,
        direction: MatchDirection,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let a = graph.class_size();
        let (src_base, dst_base) = bases(a, direction);
        let mut forward = vec![usize::MAX; a];
        let mut backward = vec![usize::MAX; a];
        for &(u, v) in pairs {
            let ok_src = u >= src_base && u < src_base + a;
            let ok_dst = v >= dst_base && v < dst_base + a;
            if !ok_src || !ok_dst {
                return Err(Error::InvalidMatching(format!(
                    "pair ({u}, {v}) does not run in direction {direction:?}"
                )));
            }
            if forward[u - src_base] != usize::MAX || backward[v - dst_base] != usize::MAX {
                return Err(Error::InvalidMatching(format!("pair ({u}, {v}) reuses a vertex")));
            }
            forward[u - src_base] = v;
            backward[v - dst_base] = u;
        }
        if pairs.len() != a {
            return Err(Error::InvalidMatching(format!(
                "{} pairs given, a complete matching needs {a}",
                pairs.len()
            )));
        }
        let m = Matching {
            direction,
            a,
            forward,
            backward,
        };
        m.validate(graph)?;
        Ok(m)
    }

    pub fn direction(&self) -> MatchDirection {
        self.direction
    }

    pub fn class_size(&self) -> usize {
        self.a
    }

    /// Partner of `v`, whichever class it belongs to.
    pub fn partner(&self, v: usize) -> usize {
        let (src_base, dst_base) = bases(self.a, self.direction);
        if v >= src_base && v < src_base + self.a {
            self.forward[v - src_base]
        } else {
            self.backward[v - dst_base]
        }
    }

    /// True iff the arc `uv` belongs to the matching.
    pub fn contains(&self, u: usize, v: usize) -> bool {
        let (src_base, _) = bases(self.a, self.direction);
        u >= src_base && u < src_base + self.a && self.forward[u - src_base] == v
    }

    /// `(source, target)` pairs in ascending source order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (src_base, _) = bases(self.a, self.direction);
        self.forward.iter().enumerate().map(move |(i, &t)| (src_base + i, t))
    }

    /// Checks that every pair is an arc of `graph` and the map is a bijection.
    pub fn validate(&self, graph: &BipartiteDigraph) -> Result<()> {
        if graph.class_size() != self.a {
            return Err(Error::InvalidMatching("class size mismatch".into()));
        }
        let (_, dst_base) = bases(self.a, self.direction);
        let mut hit = VertexSet::EMPTY;
        for (u, v) in self.pairs() {
            if !graph.has_arc(u, v) {
                return Err(Error::InvalidMatching(format!("({u}, {v}) is not an arc")));
            }
            if hit.contains(v) || self.backward[v - dst_base] != u {
                return Err(Error::InvalidMatching(format!("target {v} is matched twice")));
            }
            hit.insert(v);
        }
        Ok(())
    }
}

fn bases(a: usize, direction: MatchDirection) -> (usize, usize) {
    match direction {
        MatchDirection::XToY => (0, a),
        MatchDirection::YToX => (a, 0),
    }
}

/// A set within one colour class whose out-neighbourhood is smaller than
/// itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub set: VertexSet,
    pub neighbours: VertexSet,
}

impl HallViolator {
    /// Recomputes the neighbourhood and checks the deficiency.
    pub fn validate(&self, graph: &BipartiteDigraph) -> bool {
        let in_one_class = self.set.is_subset(graph.x_class()) || self.set.is_subset(graph.y_class());
        in_one_class
            && graph.neighborhood(self.set, Direction::Out) == self.neighbours
            && self.neighbours.len() < self.set.len()
    }
}

/// Finds a complete matching in the given direction, or a Hall violator
/// proving that none exists. Greedy initialisation and augmentation both
/// scan vertices in ascending id order, so the result is reproducible.
pub fn find_complete_matching(
    graph: &BipartiteDigraph,
    direction: MatchDirection,
) -> Result<Matching, HallViolator> {
    let a = graph.class_size();
    let (src_base, dst_base) = bases(a, direction);
    let mut forward = vec![usize::MAX; a];
    let mut backward = vec![usize::MAX; a];

    for i in 0..a {
        let free = graph
            .out_set(src_base + i)
            .iter()
            .find(|&t| backward[t - dst_base] == usize::MAX);
        if let Some(t) = free {
            forward[i] = t;
            backward[t - dst_base] = src_base + i;
        }
    }

    for i in 0..a {
        if forward[i] != usize::MAX {
            continue;
        }
        let mut visited = VertexSet::EMPTY;
        if !augment(graph, src_base + i, src_base, dst_base, &mut forward, &mut backward, &mut visited) {
            let mut set = VertexSet::singleton(src_base + i);
            for t in visited.iter() {
                set.insert(backward[t - dst_base]);
            }
            return Err(HallViolator {
                set,
                neighbours: visited,
            });
        }
    }
    Ok(Matching {
        direction,
        a,
        forward,
        backward,
    })
}

fn augment(
    graph: &BipartiteDigraph,
    source: usize,
    src_base: usize,
    dst_base: usize,
    forward: &mut [usize],
    backward: &mut [usize],
    visited: &mut VertexSet,
) -> bool {
    for t in graph.out_set(source).iter() {
        if visited.contains(t) {
            continue;
        }
        visited.insert(t);
        let holder = backward[t - dst_base];
        if holder == usize::MAX
            || augment(graph, holder, src_base, dst_base, forward, backward, visited)
        {
            forward[source - src_base] = t;
            backward[t - dst_base] = source;
            return true;
        }
    }
    false
}

/// Perfect X-to-Y matching of the vertices in `within`, as `(x, y)` pairs,
/// if the induced subdigraph has one.
pub(crate) fn perfect_matching_within(
    graph: &BipartiteDigraph,
    within: VertexSet,
) -> Option<Vec<(usize, usize)>> {
    let xs = within & graph.x_class();
    let ys = within & graph.y_class();
    if xs.len() != ys.len() {
        return None;
    }
    let n = graph.order();
    let mut mate = vec![usize::MAX; n];
    for x in xs.iter() {
        let mut visited = VertexSet::EMPTY;
        if !augment_within(graph, x, ys, &mut mate, &mut visited) {
            return None;
        }
    }
    Some(xs.iter().map(|x| (x, mate[x])).collect())
}

fn augment_within(
    graph: &BipartiteDigraph,
    x: usize,
    ys: VertexSet,
    mate: &mut [usize],
    visited: &mut VertexSet,
) -> bool {
    for y in (graph.out_set(x) & ys).iter() {
        if visited.contains(y) {
            continue;
        }
        visited.insert(y);
        let holder = mate[y];
        if holder == usize::MAX || augment_within(graph, holder, ys, mate, visited) {
            mate[x] = y;
            mate[y] = x;
            return true;
        }
    }
    false
}

/// Largest class size for which [`check_expansion`] enumerates subsets.
pub const EXPANSION_CAP: usize = 24;

/// Outcome of the small-set expansion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    /// Largest subset size examined, `floor((a + 1) / 2)`.
    pub max_size: usize,
    pub violator: Option<HallViolator>,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        self.violator.is_none()
    }
}

/// Checks `|N+(S)| >= |S|` for every nonempty `S` inside one colour class
/// with `|S| <= (a + 1) / 2`. Classes are scanned X first; subsets by size,
/// then in lexicographic order. The first violation is returned.
pub fn check_expansion(graph: &BipartiteDigraph) -> Result<ExpansionReport> {
    let a = graph.class_size();
    if a > EXPANSION_CAP {
        return Err(Error::CapExceeded {
            what: "expansion check class size",
            limit: EXPANSION_CAP,
            value: a,
        });
    }
    let max_size = a.div_ceil(2);
    for base in [0, a] {
        for size in 1..=max_size {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let set: VertexSet = combo.iter().map(|&i| base + i).collect();
                let neighbours = graph.neighborhood(set, Direction::Out);
                if neighbours.len() < size {
                    return Ok(ExpansionReport {
                        max_size,
                        violator: Some(HallViolator { set, neighbours }),
                    });
                }
                if !next_combination(&mut combo, a) {
                    break;
                }
            }
        }
    }
    Ok(ExpansionReport {
        max_size,
        violator: None,
    })
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_gets_identity_matching() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let m = find_complete_matching(&g, MatchDirection::XToY).unwrap();
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 5)]);
        let back = find_complete_matching(&g, MatchDirection::YToX).unwrap();
        assert_eq!(back.pairs().collect::<Vec<_>>(), vec![(3, 0), (4, 1), (5, 2)]);
        assert_eq!(back.partner(0), 3);
    }

    #[test]
    fn sink_vertex_is_a_violator() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let g = (3..6).fold(g, |g, y| g.without_arc(0, y).unwrap());
        let v = find_complete_matching(&g, MatchDirection::XToY).unwrap_err();
        assert_eq!(v.set, VertexSet::singleton(0));
        assert!(v.neighbours.is_empty());
        assert!(v.validate(&g));
        let report = check_expansion(&g).unwrap();
        assert_eq!(report.violator.unwrap().set, VertexSet::singleton(0));
    }

    #[test]
    fn augmenting_violator_is_deficient() {
        // x0, x1, x2 all point only to y0, y1.
        let arcs = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 0), (5, 1)];
        let g = BipartiteDigraph::new(3, arcs).unwrap();
        let v = find_complete_matching(&g, MatchDirection::XToY).unwrap_err();
        assert!(v.validate(&g));
        assert_eq!(v.set.len(), 3);
        assert_eq!(v.neighbours, VertexSet::from_iter([3, 4]));
    }

    #[test]
    fn explicit_matching_validation() {
        let g = BipartiteDigraph::complete(2).unwrap();
        assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(0, 3), (1, 2)]).is_ok());
        assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(0, 3), (1, 3)]).is_err());
        assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(0, 3)]).is_err());
        assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(2, 0), (3, 1)]).is_err());
        let sparse = BipartiteDigraph::new(2, [(0, 2), (1, 2)]).unwrap();
        assert!(Matching::from_pairs(&sparse, MatchDirection::XToY, &[(0, 2), (1, 3)]).is_err());
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut combo = vec![0, 1];
        let mut seen = vec![combo.clone()];
        while next_combination(&mut combo, 4) {
            seen.push(combo.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
