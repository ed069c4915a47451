use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

/// Largest order (vertex count) the subset DP accepts.
pub const ORACLE_CAP: usize = 24;

/// Exact hamiltonicity by dynamic programming over vertex subsets.
///
/// Returns a hamiltonian cycle starting at vertex 0, or `None` when there is
/// none. Shares no code with the constructive search.
pub fn oracle_hamiltonian(graph: &BipartiteDigraph) -> Result<Option<Vec<usize>>> {
    let n = graph.order();
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            limit: ORACLE_CAP,
            value: n,
        });
    }
    let out: Vec<u32> = (0..n).map(|v| graph.out_set(v).bits() as u32).collect();
    // ends[m] for m = mask >> 1: vertices where a path from 0 covering `mask` can stop
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << (n - 1)];
    ends[0] = 1;
    for half in 0..ends.len() as u32 {
        let mut here = ends[half as usize];
        if here == 0 {
            continue;
        }
        let mask = half << 1 | 1;
        while here != 0 {
            let v = here.trailing_zeros() as usize;
            here &= here - 1;
            let mut next = out[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[((mask | 1 << w) >> 1) as usize] |= 1 << w;
            }
        }
    }
    let closing = ends[(full >> 1) as usize] & in_mask(&out, 0);
    if closing == 0 {
        return Ok(None);
    }
    let mut cycle = Vec::with_capacity(n);
    let mut mask = full;
    let mut last = closing.trailing_zeros() as usize;
    while last != 0 {
        cycle.push(last);
        mask &= !(1u32 << last);
        let before = ends[(mask >> 1) as usize] & in_mask(&out, last);
        last = before.trailing_zeros() as usize;
    }
    cycle.push(0);
    cycle.reverse();
    Ok(Some(cycle))
}

fn in_mask(out: &[u32], v: usize) -> u32 {
    out.iter()
        .enumerate()
        .filter(|(_, &m)| m >> v & 1 == 1)
        .fold(0, |acc, (u, _)| acc | 1 << u)
}

/// True iff `cycle` lists every vertex once and consecutive vertices
/// (cyclically) are joined by arcs.
pub fn verify_cycle(graph: &BipartiteDigraph, cycle: &[usize]) -> bool {
    let n = graph.order();
    if cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| graph.has_arc(cycle[i], cycle[(i + 1) % n]))
}
