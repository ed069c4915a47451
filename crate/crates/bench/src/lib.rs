//! Fixed inputs shared by the benchmarks.

use bihamilton::{gen_dprime, gen_random, gen_random_m, BipartiteDigraph};

/// Condition-(M) digraphs from the deletion walk, one per class size.
pub fn dense_inputs(sizes: &[usize]) -> Vec<(usize, BipartiteDigraph)> {
    sizes
        .iter()
        .map(|&a| (a, gen_random_m(a, 42, a * a).expect("valid class size")))
        .collect()
}

/// Random digraphs at density one half.
pub fn sparse_inputs(sizes: &[usize]) -> Vec<(usize, BipartiteDigraph)> {
    sizes
        .iter()
        .map(|&a| (a, gen_random(a, 42, 0.5).expect("valid class size")))
        .collect()
}

pub fn extremal(a: usize) -> BipartiteDigraph {
    gen_dprime(a).expect("even class size")
}
