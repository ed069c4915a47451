#![allow(dead_code)]

//! Strategies and slow reference implementations shared by the integration
//! tests. Nothing here calls into the search code it is used to check.

use bihamilton::{gen_random_m, BipartiteDigraph};
use proptest::prelude::*;

/// Any digraph with class size in `lo..=hi`.
pub fn any_digraph(lo: usize, hi: usize) -> impl Strategy<Value = BipartiteDigraph> {
    (lo..=hi).prop_flat_map(|a| {
        proptest::collection::vec(any::<bool>(), 2 * a * a).prop_map(move |bits| from_bits(a, &bits))
    })
}

/// Digraphs where each arc is present with probability `p`.
pub fn dense_digraph(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = BipartiteDigraph> {
    (lo..=hi).prop_flat_map(move |a| {
        proptest::collection::vec(proptest::bool::weighted(p), 2 * a * a).prop_map(move |bits| from_bits(a, &bits))
    })
}

/// Condition-(M) digraphs from the deletion walk.
pub fn m_digraph(lo: usize, hi: usize) -> impl Strategy<Value = BipartiteDigraph> {
    (lo..=hi, any::<u64>(), 0usize..=1).prop_map(|(a, seed, long)| {
        let budget = if long == 1 { 2 * a * a } else { a * a / 2 };
        gen_random_m(a, seed, budget).unwrap()
    })
}

pub fn from_bits(a: usize, bits: &[bool]) -> BipartiteDigraph {
    let arcs = cross_pairs(a).into_iter().zip(bits).filter(|(_, &b)| b).map(|(p, _)| p);
    BipartiteDigraph::new(a, arcs).unwrap()
}

/// Every ordered cross-class pair, X sources first.
pub fn cross_pairs(a: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(2 * a * a);
    for x in 0..a {
        for y in a..2 * a {
            pairs.push((x, y));
        }
    }
    for y in a..2 * a {
        for x in 0..a {
            pairs.push((y, x));
        }
    }
    pairs
}

pub fn degree(g: &BipartiteDigraph, v: usize) -> usize {
    (0..g.order()).filter(|&w| g.has_arc(v, w)).count() + (0..g.order()).filter(|&w| g.has_arc(w, v)).count()
}

pub fn out_degree(g: &BipartiteDigraph, v: usize) -> usize {
    (0..g.order()).filter(|&w| g.has_arc(v, w)).count()
}

pub fn in_degree(g: &BipartiteDigraph, v: usize) -> usize {
    (0..g.order()).filter(|&w| g.has_arc(w, v)).count()
}

pub fn brute_condition_m(g: &BipartiteDigraph) -> bool {
    let n = g.order();
    let bound = 3 * g.class_size() + 1;
    (0..n).all(|u| {
        (u + 1..n).all(|v| g.has_arc(u, v) || g.has_arc(v, u) || degree(g, u) + degree(g, v) >= bound)
    })
}

/// Plain backtracking over vertex orders starting at 0.
pub fn brute_hamiltonian(g: &BipartiteDigraph) -> bool {
    fn go(g: &BipartiteDigraph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_arc(last, path[0]);
        }
        for w in 0..n {
            if !used[w] && g.has_arc(last, w) {
                used[w] = true;
                path.push(w);
                if go(g, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; g.order()];
    used[0] = true;
    go(g, &mut vec![0], &mut used)
}

/// Length of a shortest simple path from `u` to `v` on which every X-to-Y
/// arc belongs to `matching` (given as X-to-Y pairs) and matched and
/// unmatched arcs alternate. A lone unmatched X-to-Y arc does not count.
pub fn brute_compatible_distance(g: &BipartiteDigraph, matching: &[(usize, usize)], u: usize, v: usize) -> Option<usize> {
    fn go(
        g: &BipartiteDigraph,
        matching: &[(usize, usize)],
        at: usize,
        target: usize,
        used: &mut [bool],
        len: usize,
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| len >= b) {
            return;
        }
        if at == target {
            *best = Some(len);
            return;
        }
        for w in 0..g.order() {
            if used[w] || !g.has_arc(at, w) {
                continue;
            }
            if g.is_x(at) && !matching.contains(&(at, w)) {
                continue;
            }
            used[w] = true;
            go(g, matching, w, target, used, len + 1, best);
            used[w] = false;
        }
    }
    let mut used = vec![false; g.order()];
    used[u] = true;
    let mut best = None;
    go(g, matching, u, v, &mut used, 0, &mut best);
    best
}

/// Length of a longest cycle on which every X-to-Y arc is matched, found by
/// enumerating simple cycles through their smallest vertex.
pub fn brute_longest_compatible_cycle(g: &BipartiteDigraph, matching: &[(usize, usize)]) -> usize {
    fn go(
        g: &BipartiteDigraph,
        matching: &[(usize, usize)],
        start: usize,
        at: usize,
        used: &mut [bool],
        len: usize,
        best: &mut usize,
    ) {
        for w in start..g.order() {
            if !g.has_arc(at, w) || (g.is_x(at) && !matching.contains(&(at, w))) {
                continue;
            }
            if w == start {
                if len > 2 {
                    *best = (*best).max(len);
                }
            } else if !used[w] {
                used[w] = true;
                go(g, matching, start, w, used, len + 1, best);
                used[w] = false;
            }
        }
    }
    let mut best = 0;
    for start in 0..g.class_size() {
        let mut used = vec![false; g.order()];
        used[start] = true;
        go(g, matching, start, start, &mut used, 1, &mut best);
    }
    best
}

/// Whether the out-neighbourhoods of X admit a complete matching, by Hall's
/// condition over every subset.
pub fn brute_has_matching(g: &BipartiteDigraph, from_x: bool) -> bool {
    let a = g.class_size();
    let base = if from_x { 0 } else { a };
    (1u32..1 << a).all(|s| {
        let mut nbrs = 0u64;
        for i in 0..a {
            if s >> i & 1 == 1 {
                for w in 0..g.order() {
                    if g.has_arc(base + i, w) {
                        nbrs |= 1 << w;
                    }
                }
            }
        }
        nbrs.count_ones() >= s.count_ones()
    })
}

/// Applies a vertex relabelling `perm` (a bijection on `0..2a` that keeps
/// or swaps the classes as a whole).
pub fn relabel(g: &BipartiteDigraph, perm: &[usize]) -> BipartiteDigraph {
    BipartiteDigraph::new(g.class_size(), g.arcs().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}
