//! Paths and cycles compatible with a complete matching `M` from X to Y.
//!
//! A path or cycle is `M`-compatible when its arcs alternate between `M`
//! and `A(D) \ M`. Since `M` runs X to Y, every X-to-Y arc of a compatible
//! path is a matching arc and every Y-to-X arc is a free arc. Contracting
//! each matched pair `(x_p, M(x_p))` to a node `p` turns compatible paths
//! into ordinary directed paths: `p -> q` is an arc of the contraction iff
//! `M(x_p) x_q` is an arc of `D`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::digraph::{BipartiteDigraph, VertexSet};
use crate::error::{Error, Result};
use crate::matching::{MatchDirection, Matching};

/// Whether an arc of a certificate belongs to the matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcKind {
    Matched,
    Free,
}

/// A compatible path `v_1 .. v_m` with the status of each of its arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathCertificate {
    vertices: Vec<usize>,
    kinds: Vec<ArcKind>,
}

impl PathCertificate {
    /// Labels each arc by matching membership.
    pub fn new(matching: &Matching, vertices: Vec<usize>) -> Self {
        let kinds = vertices
            .windows(2)
            .map(|w| kind_of(matching, w[0], w[1]))
            .collect();
        PathCertificate { vertices, kinds }
    }

    /// Flags X-to-Y arcs as matched: the path read against the matching
    /// formed by its own X-to-Y arcs.
    pub fn from_vertices(graph: &BipartiteDigraph, vertices: Vec<usize>) -> Self {
        let kinds = vertices
            .windows(2)
            .map(|w| if graph.is_x(w[0]) { ArcKind::Matched } else { ArcKind::Free })
            .collect();
        PathCertificate { vertices, kinds }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn kinds(&self) -> &[ArcKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the certificate against the graph and, when given, the
    /// matching.
    pub fn validate(&self, graph: &BipartiteDigraph, matching: Option<&Matching>) -> Result<(), String> {
        if self.vertices.len() < 2 || self.kinds.len() + 1 != self.vertices.len() {
            return Err("a path needs at least one arc and one flag per arc".into());
        }
        check_distinct(&self.vertices)?;
        let arcs = self.vertices.windows(2).map(|w| (w[0], w[1]));
        check_alternating(graph, matching, arcs, &self.kinds)
    }
}

/// A compatible cycle `[v_1, .., v_m]`, closed by the arc `v_m v_1`.
///
/// Cycles built by this crate start at an X vertex, so the vertices read
/// `x, y, x, y, ..` and the flags read `Matched, Free, Matched, ..`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleCertificate {
    vertices: Vec<usize>,
    kinds: Vec<ArcKind>,
}

impl CycleCertificate {
    /// Wraps a closed walk that starts in X; X-to-Y arcs are flagged as
    /// matched, which is the matching the cycle itself induces.
    pub fn from_vertices(graph: &BipartiteDigraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 4 || vertices.len() % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "a compatible cycle has even length at least 4, got {}",
                vertices.len()
            )));
        }
        if !graph.is_x(vertices[0]) {
            return Err(Error::InvalidArgument("cycle must start in X".into()));
        }
        let kinds = (0..vertices.len())
            .map(|i| if i % 2 == 0 { ArcKind::Matched } else { ArcKind::Free })
            .collect();
        let cert = CycleCertificate { vertices, kinds };
        cert.validate(graph, None).map_err(Error::InvalidArgument)?;
        Ok(cert)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn kinds(&self) -> &[ArcKind] {
        &self.kinds
    }

    /// Number of vertices (equal to the number of arcs).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// The matched arcs, as `(x, y)` pairs in cycle order.
    pub fn matched_arcs(&self) -> Vec<(usize, usize)> {
        self.vertices.chunks(2).map(|c| (c[0], c[1])).collect()
    }

    /// Re-checks closure, distinctness, alternation and, when a matching is
    /// given, that the flags agree with it.
    pub fn validate(&self, graph: &BipartiteDigraph, matching: Option<&Matching>) -> Result<(), String> {
        let n = self.vertices.len();
        if n < 4 || n % 2 == 1 || self.kinds.len() != n {
            return Err(format!("malformed cycle of length {n}"));
        }
        check_distinct(&self.vertices)?;
        let arcs = (0..n).map(|i| (self.vertices[i], self.vertices[(i + 1) % n]));
        check_alternating(graph, matching, arcs, &self.kinds)
    }
}

fn kind_of(matching: &Matching, u: usize, v: usize) -> ArcKind {
    if matching.contains(u, v) {
        ArcKind::Matched
    } else {
        ArcKind::Free
    }
}

fn check_distinct(vertices: &[usize]) -> Result<(), String> {
    let mut seen = VertexSet::EMPTY;
    for &v in vertices {
        if v >= 64 || seen.contains(v) {
            return Err(format!("vertex {v} repeats or is out of range"));
        }
        seen.insert(v);
    }
    Ok(())
}

fn check_alternating(
    graph: &BipartiteDigraph,
    matching: Option<&Matching>,
    arcs: impl Iterator<Item = (usize, usize)>,
    kinds: &[ArcKind],
) -> Result<(), String> {
    let mut previous: Option<ArcKind> = None;
    for ((u, v), &kind) in arcs.zip(kinds) {
        if !graph.has_arc(u, v) {
            return Err(format!("({u}, {v}) is not an arc"));
        }
        if previous == Some(kind) {
            return Err(format!("flags do not alternate at ({u}, {v})"));
        }
        let expected = if graph.is_x(u) { ArcKind::Matched } else { ArcKind::Free };
        if kind != expected {
            return Err(format!("arc ({u}, {v}) flagged {kind:?}"));
        }
        if let Some(m) = matching {
            if (kind == ArcKind::Matched) != m.contains(u, v) {
                return Err(format!("flag of ({u}, {v}) disagrees with the matching"));
            }
        }
        previous = Some(kind);
    }
    Ok(())
}

/// The digraph on matched pairs. Node `p` stands for `(x_p, M(x_p))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedDigraph {
    succ: Vec<u64>,
    pred: Vec<u64>,
}

/// Contracts `graph` along the X-to-Y matching `matching`.
pub fn contract(graph: &BipartiteDigraph, matching: &Matching) -> Result<ContractedDigraph> {
    require_x_to_y(graph, matching)?;
    let a = graph.class_size();
    let mut succ = vec![0u64; a];
    let mut pred = vec![0u64; a];
    for p in 0..a {
        let y = matching.partner(p);
        for q in graph.out_set(y).iter() {
            if q != p {
                succ[p] |= 1 << q;
                pred[q] |= 1 << p;
            }
        }
    }
    Ok(ContractedDigraph { succ, pred })
}

fn require_x_to_y(graph: &BipartiteDigraph, matching: &Matching) -> Result<()> {
    if matching.direction() != MatchDirection::XToY {
        return Err(Error::InvalidMatching(
            "compatible paths need an X-to-Y matching; mirror the digraph first".into(),
        ));
    }
    matching.validate(graph)
}

impl ContractedDigraph {
    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn has_arc(&self, p: usize, q: usize) -> bool {
        self.succ[p] >> q & 1 == 1
    }

    pub fn successors(&self, p: usize) -> VertexSet {
        VertexSet::from_bits(self.succ[p])
    }

    pub fn predecessors(&self, p: usize) -> VertexSet {
        VertexSet::from_bits(self.pred[p])
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(|m| m.count_ones() as usize).sum()
    }


    /// Nodes reachable from `p` by a path of positive length.
    pub fn reach_from(&self, p: usize) -> VertexSet {
        let mut seen = 0u64;
        let mut frontier = self.succ[p];
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0u64;
            for q in VertexSet::from_bits(frontier).iter() {
                next |= self.succ[q];
            }
            frontier = next & !seen;
        }
        VertexSet::from_bits(seen)
    }

    /// Lexicographically smallest among the shortest positive-length paths
    /// from `p` to `q`; for `p == q` this is a shortest cycle through `p`,
    /// returned as `[p, .., p]`.
    pub fn shortest_path(&self, p: usize, q: usize) -> Option<Vec<usize>> {
        let n = self.node_count();
        let mut dist = vec![usize::MAX; n];
        dist[q] = 0;
        let mut queue = VecDeque::from([q]);
        while let Some(w) = queue.pop_front() {
            for u in self.predecessors(w).iter() {
                if dist[u] == usize::MAX {
                    dist[u] = dist[w] + 1;
                    queue.push_back(u);
                }
            }
        }
        let first = self
            .successors(p)
            .iter()
            .filter(|&w| dist[w] != usize::MAX)
            .min_by_key(|&w| (dist[w], w))?;
        let mut path = vec![p, first];
        let mut current = first;
        while current != q {
            let want = dist[current] - 1;
            current = self
                .successors(current)
                .iter()
                .find(|&w| dist[w] == want)
                .expect("distance labels are consistent");
            path.push(current);
        }
        Some(path)
    }

    /// Expands a node path to the compatible path `x_p1, y_p1, .., x_pk, y_pk`.
    pub fn expand_path(&self, matching: &Matching, nodes: &[usize]) -> PathCertificate {
        let vertices = nodes.iter().flat_map(|&p| [p, matching.partner(p)]).collect();
        PathCertificate::new(matching, vertices)
    }

    /// Expands a node cycle (at least two nodes) to a compatible cycle.
    pub fn expand_cycle(&self, matching: &Matching, nodes: &[usize]) -> CycleCertificate {
        let vertices: Vec<usize> = nodes.iter().flat_map(|&p| [p, matching.partner(p)]).collect();
        let kinds = (0..vertices.len())
            .map(|i| if i % 2 == 0 { ArcKind::Matched } else { ArcKind::Free })
            .collect();
        CycleCertificate { vertices, kinds }
    }

    /// A longest cycle (at least two nodes), lexicographically smallest among
    /// the longest once rotated to start at its smallest node.
    pub fn longest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.node_count();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        longest_cycle_search(&self.succ, all, all, 2, |_, _| true)
    }
}

/// Branch-and-bound search for a longest simple cycle over `allowed` nodes.
///
/// Each cycle is found from its smallest node (which must be in `starts`),
/// successors are tried in ascending order and only strict improvements
/// replace the incumbent, so the result is the lexicographically smallest
/// optimum among cycles that `accept` admits. `(node, visited)` states are
/// memoised per start node: the continuation from a state does not depend
/// on the order in which its visited set was collected.
pub(crate) fn longest_cycle_search<F>(
    succ: &[u64],
    allowed: u64,
    starts: u64,
    min_len: usize,
    mut accept: F,
) -> Option<Vec<usize>>
where
    F: FnMut(&[usize], u64) -> bool,
{
    let ceiling = allowed.count_ones() as usize;
    let mut best: Vec<usize> = Vec::new();
    for s in VertexSet::from_bits(starts & allowed).iter() {
        let pool = allowed & !((1u64 << s) - 1);
        let core = forward_closure(succ, s, pool) & backward_closure(succ, s, pool);
        let upper = core.count_ones() as usize;
        if upper < min_len || upper <= best.len() {
            continue;
        }
        let mut search = CycleSearch {
            succ,
            start: s,
            core,
            min_len,
            best: &mut best,
            memo: HashSet::new(),
            accept: &mut accept,
        };
        let mut path = vec![s];
        search.dfs(&mut path, 1u64 << s);
        if best.len() == ceiling {
            break;
        }
    }
    (!best.is_empty()).then_some(best)
}

struct CycleSearch<'a, F> {
    succ: &'a [u64],
    start: usize,
    core: u64,
    min_len: usize,
    best: &'a mut Vec<usize>,
    memo: HashSet<(usize, u64)>,
    accept: &'a mut F,
}

impl<F: FnMut(&[usize], u64) -> bool> CycleSearch<'_, F> {
    fn dfs(&mut self, path: &mut Vec<usize>, visited: u64) {
        let v = *path.last().expect("path is never empty");
        if !self.memo.insert((v, visited)) {
            return;
        }
        if path.len() >= self.min_len
            && path.len() > self.best.len()
            && self.succ[v] >> self.start & 1 == 1
            && (self.accept)(path, visited)
        {
            self.best.clone_from(path);
        }
        let open = self.core & !visited;
        let reachable = forward_closure(self.succ, v, open | (1u64 << v)) & open;
        if path.len() + reachable.count_ones() as usize <= self.best.len() {
            return;
        }
        for w in VertexSet::from_bits(self.succ[v] & open).iter() {
            path.push(w);
            self.dfs(path, visited | 1u64 << w);
            path.pop();
            if self.best.len() == self.core.count_ones() as usize {
                return;
            }
        }
    }
}

fn forward_closure(succ: &[u64], from: usize, within: u64) -> u64 {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in VertexSet::from_bits(frontier).iter() {
            next |= succ[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn backward_closure(succ: &[u64], to: usize, within: u64) -> u64 {
    let mut seen = 1u64 << to;
    loop {
        let mut grew = false;
        for v in VertexSet::from_bits(within & !seen).iter() {
            if succ[v] & seen != 0 {
                seen |= 1u64 << v;
                grew = true;
            }
        }
        if !grew {
            return seen;
        }
    }
}

/// Shortest `M`-compatible path from `u` to `v`, ties broken by the
/// lexicographic order of the contracted node sequence.
///
/// Endpoints are reduced to matched pairs: a path leaving `x'` starts with
/// its matching arc and a path entering `y''` ends with one, so every case
/// becomes a node path in the contraction (a cycle through the node when
/// `u = M(v)` and the arc `u v` is absent).
pub fn compatible_path(
    graph: &BipartiteDigraph,
    matching: &Matching,
    u: usize,
    v: usize,
) -> Result<Option<PathCertificate>> {
    let contraction = contract(graph, matching)?;
    compatible_path_in(graph, &contraction, matching, u, v)
}

pub(crate) fn compatible_path_in(
    graph: &BipartiteDigraph,
    contraction: &ContractedDigraph,
    matching: &Matching,
    u: usize,
    v: usize,
) -> Result<Option<PathCertificate>> {
    let n = graph.order();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange {
            vertex: u.max(v),
            a: graph.class_size(),
        });
    }
    if u == v {
        return Err(Error::InvalidArgument("path endpoints must differ".into()));
    }
    if (graph.is_x(u) && matching.contains(u, v)) || (!graph.is_x(u) && graph.has_arc(u, v)) {
        return Ok(Some(PathCertificate::new(matching, vec![u, v])));
    }
    let node = |w: usize| if graph.is_x(w) { w } else { matching.partner(w) };
    let Some(nodes) = contraction.shortest_path(node(u), node(v)) else {
        return Ok(None);
    };
    let mut vertices: Vec<usize> = nodes.iter().flat_map(|&p| [p, matching.partner(p)]).collect();
    if !graph.is_x(u) {
        vertices.remove(0);
    }
    if graph.is_x(v) {
        vertices.pop();
    }
    Ok(Some(PathCertificate::new(matching, vertices)))
}

/// Y vertices other than `y` reachable from `y` along compatible paths of
/// positive length.
pub fn compatible_reach_set(graph: &BipartiteDigraph, matching: &Matching, y: usize) -> Result<VertexSet> {
    if y >= graph.order() || graph.is_x(y) {
        return Err(Error::InvalidArgument(format!("{y} is not a Y vertex")));
    }
    let contraction = contract(graph, matching)?;
    let home = matching.partner(y);
    Ok(contraction
        .reach_from(home)
        .iter()
        .filter(|&r| r != home)
        .map(|r| matching.partner(r))
        .collect())
}

/// How hard to look for a long compatible cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SearchMode {
    /// Branch and bound over the contraction; always optimal.
    #[default]
    Exact,
    /// Maximal-path growth with end rotations and chord closing; falls back
    /// to `Exact` when the cycle found is shorter than `a`.
    Heuristic,
}

/// Class-size cap for exact longest-cycle search.
pub const EXACT_CYCLE_CAP: usize = 32;

/// A longest (or, heuristically, a long) `M`-compatible cycle; `None` iff
/// the contraction is acyclic.
pub fn longest_compatible_cycle(
    graph: &BipartiteDigraph,
    matching: &Matching,
    mode: SearchMode,
) -> Result<Option<CycleCertificate>> {
    let contraction = contract(graph, matching)?;
    let a = graph.class_size();
    if a > EXACT_CYCLE_CAP {
        return Err(Error::CapExceeded {
            what: "exact cycle search class size",
            limit: EXACT_CYCLE_CAP,
            value: a,
        });
    }
    let nodes = match mode {
        SearchMode::Exact => contraction.longest_cycle(),
        SearchMode::Heuristic => match extension_nodes(&contraction, 4 * a * a) {
            Some(cycle) if 2 * cycle.len() >= a => Some(cycle),
            _ => contraction.longest_cycle(),
        },
    };
    Ok(nodes.map(|c| contraction.expand_cycle(matching, &c)))
}

/// The raw path-extension procedure, without any exact fallback.
///
/// Grows a maximal compatible path from every start node, swaps end pairs
/// when the neighbour of an end can leave the path (`y_{s-1}` or `x_2`
/// dominating or dominated from outside), and keeps the longest cycle closed
/// by an arc from a later pair back to an earlier one. At most `4a^2`
/// growth and rotation steps are taken in total.
pub fn extension_search(graph: &BipartiteDigraph, matching: &Matching) -> Result<Option<CycleCertificate>> {
    let contraction = contract(graph, matching)?;
    let a = graph.class_size();
    Ok(extension_nodes(&contraction, 4 * a * a).map(|c| contraction.expand_cycle(matching, &c)))
}

fn extension_nodes(contraction: &ContractedDigraph, step_cap: usize) -> Option<Vec<usize>> {
    let n = contraction.node_count();
    let mut best: Vec<usize> = Vec::new();
    let mut steps = 0usize;
    'starts: for start in 0..n {
        let mut path = VecDeque::from([start]);
        let mut on_path = 1u64 << start;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        loop {
            loop {
                let last = *path.back().expect("nonempty");
                let first = *path.front().expect("nonempty");
                if let Some(w) = VertexSet::from_bits(contraction.succ[last] & !on_path).first() {
                    path.push_back(w);
                    on_path |= 1 << w;
                } else if let Some(w) = VertexSet::from_bits(contraction.pred[first] & !on_path).first() {
                    path.push_front(w);
                    on_path |= 1 << w;
                } else {
                    break;
                }
                steps += 1;
            }
            let nodes: Vec<usize> = path.iter().copied().collect();
            if let Some(cycle) = best_chord_cycle(contraction, &nodes) {
                if cycle.len() > best.len() {
                    best = cycle;
                }
            }
            if best.len() == n || steps >= step_cap {
                break 'starts;
            }
            let s = nodes.len();
            if s < 2 || !seen.insert(nodes.clone()) {
                break;
            }
            let outside = !on_path;
            if let Some(w) = VertexSet::from_bits(contraction.succ[nodes[s - 2]] & outside).first() {
                let dropped = path.pop_back().expect("nonempty");
                on_path &= !(1 << dropped);
                path.push_back(w);
                on_path |= 1 << w;
            } else if let Some(w) = VertexSet::from_bits(contraction.pred[nodes[1]] & outside).first() {
                let dropped = path.pop_front().expect("nonempty");
                on_path &= !(1 << dropped);
                path.push_front(w);
                on_path |= 1 << w;
            } else {
                break;
            }
            steps += 1;
        }
    }
    (!best.is_empty()).then(|| rotate_to_min(best))
}

/// Longest cycle `p_j .. p_i` closed by an arc `p_i -> p_j` with `j < i`.
fn best_chord_cycle(contraction: &ContractedDigraph, nodes: &[usize]) -> Option<Vec<usize>> {
    let s = nodes.len();
    let mut best: Option<(usize, usize)> = None;
    for i in 1..s {
        for j in 0..i {
            if contraction.has_arc(nodes[i], nodes[j]) {
                let len = i - j + 1;
                if best.is_none_or(|(bi, bj)| len > bi - bj + 1) {
                    best = Some((i, j));
                }
                break;
            }
        }
    }
    best.map(|(i, j)| nodes[j..=i].to_vec())
}

pub(crate) fn rotate_to_min(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::find_complete_matching;

    fn identity(graph: &BipartiteDigraph) -> Matching {
        find_complete_matching(graph, MatchDirection::XToY).unwrap()
    }

    #[test]
    fn complete_graph_contracts_to_complete_digraph() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let c = contract(&g, &identity(&g)).unwrap();
        assert_eq!(c.arc_count(), 6);
    }

    #[test]
    fn single_arc_path_from_y_to_x() {
        let g = BipartiteDigraph::complete(2).unwrap();
        let m = identity(&g);
        let p = compatible_path(&g, &m, 2, 1).unwrap().unwrap();
        assert_eq!(p.vertices(), &[2, 1]);
        assert_eq!(p.kinds(), &[ArcKind::Free]);
        p.validate(&g, Some(&m)).unwrap();
    }

    #[test]
    fn endpoint_reductions() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let m = identity(&g);
        // x0 -> y1 goes through the matched arc of x0 and ends with that of x1
        let p = compatible_path(&g, &m, 0, 4).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 3, 1, 4]);
        // x0 -> y0 is the matched arc itself
        assert_eq!(compatible_path(&g, &m, 0, 3).unwrap().unwrap().vertices(), &[0, 3]);
        // y0 -> x0 is a single free arc, or a cycle through the pair without it
        assert_eq!(compatible_path(&g, &m, 3, 0).unwrap().unwrap().vertices(), &[3, 0]);
        let h = g.without_arc(3, 0).unwrap();
        let p = compatible_path(&h, &m, 3, 0).unwrap().unwrap();
        assert_eq!(p.vertices(), &[3, 1, 4, 0]);
        p.validate(&h, Some(&m)).unwrap();
        assert!(compatible_path(&g, &m, 1, 1).is_err());
    }

    #[test]
    fn reach_set_excludes_start() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let m = identity(&g);
        assert_eq!(compatible_reach_set(&g, &m, 3).unwrap(), VertexSet::from_iter([4, 5]));
        assert!(compatible_reach_set(&g, &m, 0).is_err());
        // only matching arcs: nothing reachable
        let bare = BipartiteDigraph::new(2, [(0, 2), (1, 3)]).unwrap();
        let mb = identity(&bare);
        assert!(compatible_reach_set(&bare, &mb, 2).unwrap().is_empty());
    }

    #[test]
    fn longest_cycle_on_complete_graph_is_hamiltonian() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let m = identity(&g);
        for mode in [SearchMode::Exact, SearchMode::Heuristic] {
            let c = longest_compatible_cycle(&g, &m, mode).unwrap().unwrap();
            assert_eq!(c.len(), 6);
            c.validate(&g, Some(&m)).unwrap();
        }
        let exact = longest_compatible_cycle(&g, &m, SearchMode::Exact).unwrap().unwrap();
        assert_eq!(exact.vertices(), &[0, 3, 1, 4, 2, 5]);
    }

    #[test]
    fn contraction_that_is_one_directed_cycle() {
        // matching x_i -> y_i plus y_i -> x_{i+1 mod a}
        let a = 5;
        let arcs = (0..a).flat_map(|i| [(i, a + i), (a + i, (i + 1) % a)]);
        let g = BipartiteDigraph::new(a, arcs).unwrap();
        let m = identity(&g);
        let c = longest_compatible_cycle(&g, &m, SearchMode::Exact).unwrap().unwrap();
        assert_eq!(c.len(), 2 * a);
        assert!(extension_search(&g, &m).unwrap().is_some_and(|h| h.len() == 2 * a));
    }

    #[test]
    fn acyclic_contraction_has_no_cycle() {
        let g = BipartiteDigraph::new(2, [(0, 2), (1, 3), (2, 1)]).unwrap();
        let m = identity(&g);
        assert!(longest_compatible_cycle(&g, &m, SearchMode::Exact).unwrap().is_none());
        assert!(longest_compatible_cycle(&g, &m, SearchMode::Heuristic).unwrap().is_none());
    }

    #[test]
    fn cycle_certificate_rejects_bad_cycles() {
        let g = BipartiteDigraph::complete(2).unwrap();
        assert!(CycleCertificate::from_vertices(&g, vec![0, 2, 1, 3]).is_ok());
        assert!(CycleCertificate::from_vertices(&g, vec![0, 2, 0, 3]).is_err());
        assert!(CycleCertificate::from_vertices(&g, vec![2, 0, 3, 1]).is_err());
        assert!(CycleCertificate::from_vertices(&g, vec![0, 2]).is_err());
        let sparse = g.without_arc(3, 0).unwrap();
        assert!(CycleCertificate::from_vertices(&sparse, vec![0, 2, 1, 3]).is_err());
    }

    #[test]
    fn mirrored_matching_is_rejected() {
        let g = BipartiteDigraph::complete(2).unwrap();
        let m = find_complete_matching(&g, MatchDirection::YToX).unwrap();
        assert!(contract(&g, &m).is_err());
    }
}
