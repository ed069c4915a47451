use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

/// Block layout shared by the families: `R` is the first `r` X vertices and
/// `S` the rest; `U` is the first `u` Y vertices and `W` the rest.
struct Blocks {
    a: usize,
    r: usize,
    u: usize,
}

impl Blocks {
    fn r(&self) -> Range<usize> {
        0..self.r
    }
    fn s(&self) -> Range<usize> {
        self.r..self.a
    }
    fn u(&self) -> Range<usize> {
        self.a..self.a + self.u
    }
    fn w(&self) -> Range<usize> {
        self.a + self.u..2 * self.a
    }
    fn x(&self) -> Range<usize> {
        0..self.a
    }
    fn y(&self) -> Range<usize> {
        self.a..2 * self.a
    }
}

fn all_pairs<A, B>(from: A, to: B) -> Vec<(usize, usize)>
where
    A: Iterator<Item = usize>,
    B: Iterator<Item = usize> + Clone,
{
    from.flat_map(|u| to.clone().map(move |v| (u, v))).collect()
}

fn build(a: usize, arcs: Vec<(usize, usize)>) -> Result<BipartiteDigraph> {
    let mut graph = BipartiteDigraph::empty(a)?;
    for (u, v) in arcs {
        graph.set_arc(u, v);
    }
    Ok(graph)
}

/// The non-hamiltonian digraph of even order `2a` with every degree `3a/2`:
/// arcs `r -> y`, `u -> x` and `s <-> w`.
pub fn gen_dprime(a: usize) -> Result<BipartiteDigraph> {
    if a < 2 || a % 2 == 1 {
        return Err(Error::InvalidParameters(format!("a must be even and at least 2, got {a}")));
    }
    let b = Blocks { a, r: a / 2, u: a / 2 };
    let mut arcs = all_pairs(b.r(), b.y());
    arcs.extend(all_pairs(b.u(), b.x()));
    arcs.extend(all_pairs(b.s(), b.w()));
    arcs.extend(all_pairs(b.w(), b.s()));
    build(a, arcs)
}

fn check_k(a: usize, k: usize) -> Result<()> {
    if a < 2 || k < 1 || 2 * k >= a {
        return Err(Error::InvalidParameters(format!("need a >= 2 and 1 <= k < a/2, got a = {a}, k = {k}")));
    }
    Ok(())
}

/// Strongly connected and non-hamiltonian with minimum degree `a + k`:
/// arcs `r <-> y`, `u <-> x` and `s -> w`, where `|R| = |U| = k`.
pub fn gen_dak(a: usize, k: usize) -> Result<BipartiteDigraph> {
    check_k(a, k)?;
    let b = Blocks { a, r: k, u: k };
    let mut arcs = all_pairs(b.r(), b.y());
    arcs.extend(all_pairs(b.y(), b.r()));
    arcs.extend(all_pairs(b.u(), b.x()));
    arcs.extend(all_pairs(b.x(), b.u()));
    arcs.extend(all_pairs(b.s(), b.w()));
    build(a, arcs)
}

/// A strongly connected, non-hamiltonian bipartite tournament: arcs
/// `r -> u`, `u -> s`, `s -> w` and `w -> r`, where `|R| = |U| = k`.
pub fn gen_tak(a: usize, k: usize) -> Result<BipartiteDigraph> {
    check_k(a, k)?;
    let b = Blocks { a, r: k, u: k };
    let mut arcs = all_pairs(b.r(), b.u());
    arcs.extend(all_pairs(b.u(), b.s()));
    arcs.extend(all_pairs(b.s(), b.w()));
    arcs.extend(all_pairs(b.w(), b.r()));
    build(a, arcs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Dprime,
    Dak,
    Tak,
    Complete,
    Fig1,
    /// Random digraph, each cross arc present with probability `density`.
    Random,
    /// Random condition-(M) digraph from the deletion walk.
    RandomM,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub a: usize,
    pub k: Option<usize>,
    pub seed: u64,
    /// Deletion budget of the condition-(M) walk.
    pub budget: Option<usize>,
    pub density: Option<f64>,
}

impl FamilySpec {
    pub fn new(family: Family, a: usize) -> Self {
        FamilySpec {
            family,
            a,
            k: None,
            seed: 0,
            budget: None,
            density: None,
        }
    }

    pub fn generate(&self) -> Result<BipartiteDigraph> {
        let need_k = || {
            self.k
                .ok_or_else(|| Error::InvalidParameters(format!("{:?} needs k", self.family)))
        };
        match self.family {
            Family::Dprime => gen_dprime(self.a),
            Family::Dak => gen_dak(self.a, need_k()?),
            Family::Tak => gen_tak(self.a, need_k()?),
            Family::Complete => BipartiteDigraph::complete(self.a),
            Family::Fig1 => {
                if self.a != 3 {
                    return Err(Error::InvalidParameters("fig1 has a = 3".into()));
                }
                super::fig1_digraph()
                    .ok_or_else(|| Error::InvalidParameters("fig1 is not unique at a = 3".into()))
            }
            Family::Random => super::gen_random(self.a, self.seed, self.density.unwrap_or(0.5)),
            Family::RandomM => super::gen_random_m(self.a, self.seed, self.budget.unwrap_or(self.a * self.a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dprime_at_two() {
        let g = gen_dprime(2).unwrap();
        assert_eq!(g.arc_count(), 6);
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3), (2, 0), (2, 1), (3, 1)]);
        assert!(gen_dprime(3).is_err());
        assert!(gen_dprime(0).is_err());
    }

    #[test]
    fn parameter_checks() {
        assert!(gen_dak(4, 2).is_err());
        assert!(gen_tak(3, 0).is_err());
        assert!(gen_dak(5, 2).is_ok());
        assert!(FamilySpec::new(Family::Dak, 4).generate().is_err());
    }

    #[test]
    fn tournament_has_one_arc_per_pair() {
        let g = gen_tak(5, 2).unwrap();
        assert_eq!(g.arc_count(), 25);
        for x in 0..5 {
            for y in 5..10 {
                assert!(g.has_arc(x, y) ^ g.has_arc(y, x));
            }
        }
    }
}
