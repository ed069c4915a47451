use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conditions::check_condition_m;
use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

/// A condition-(M) digraph reached by deleting arcs from the complete one,
/// with the deletions in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionWalk {
    pub graph: BipartiteDigraph,
    pub deleted: Vec<(usize, usize)>,
}

/// Deletes up to `budget` arcs, one at a time, each chosen uniformly among
/// the arcs whose removal keeps condition (M). The walk is not a uniform
/// sampler of condition-(M) digraphs.
pub fn deletion_walk(a: usize, seed: u64, budget: usize) -> Result<DeletionWalk> {
    let mut graph = BipartiteDigraph::complete(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deleted = Vec::new();
    while deleted.len() < budget {
        let mut arcs: Vec<(usize, usize)> = graph.arcs().collect();
        arcs.shuffle(&mut rng);
        let Some((u, v)) = arcs.into_iter().find(|&(u, v)| {
            graph.clear_arc(u, v);
            let keeps = check_condition_m(&graph).satisfied;
            graph.set_arc(u, v);
            keeps
        }) else {
            break;
        };
        graph.clear_arc(u, v);
        deleted.push((u, v));
    }
    Ok(DeletionWalk { graph, deleted })
}

pub fn gen_random_m(a: usize, seed: u64, budget: usize) -> Result<BipartiteDigraph> {
    deletion_walk(a, seed, budget).map(|w| w.graph)
}

/// Each of the `2a^2` cross arcs independently with probability `density`.
pub fn gen_random(a: usize, seed: u64, density: f64) -> Result<BipartiteDigraph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameters(format!("density {density} is not in [0, 1]")));
    }
    let mut graph = BipartiteDigraph::empty(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..2 * a {
        let others = if u < a { a..2 * a } else { 0..a };
        for v in others {
            if rng.gen_bool(density) {
                graph.set_arc(u, v);
            }
        }
    }
    Ok(graph)
}
