use rayon::prelude::*;

use crate::conditions::{check_condition_m, check_half_degrees, check_min_degree};
use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};
use crate::hamilton::oracle_hamiltonian;

/// Largest class size for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 3;

/// Bit of the arc `uv` in an arc mask: `u * a` plus the index of `v` within
/// its class, so masks order digraphs by their `(source, target)` arcs.
pub fn arc_index(a: usize, u: usize, v: usize) -> usize {
    u * a + v % a
}

pub fn arc_mask(graph: &BipartiteDigraph) -> u64 {
    let a = graph.class_size();
    graph.arcs().fold(0, |m, (u, v)| m | 1 << arc_index(a, u, v))
}

/// Inverse of [`arc_mask`]; requires `2a^2 <= 64`.
pub fn from_arc_mask(a: usize, mask: u64) -> Result<BipartiteDigraph> {
    if 2 * a * a > 64 {
        return Err(Error::CapExceeded {
            what: "arc mask class size",
            limit: 5,
            value: a,
        });
    }
    let mut graph = BipartiteDigraph::empty(a)?;
    for bit in 0..2 * a * a {
        if mask >> bit & 1 == 1 {
            let u = bit / a;
            let v = if u < a { a + bit % a } else { bit % a };
            graph.set_arc(u, v);
        }
    }
    Ok(graph)
}

/// Predicates for [`enumerate_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    ConditionM,
    /// Minimum total degree at least `ceil((3a + 1) / 2)`.
    MinDegree,
    /// Both semi-degree minima at least `ceil((a + 2) / 2)`.
    HalfDegrees,
    /// Both semi-degree minima at least the given value.
    MinSemiDegree(usize),
    Hamiltonian,
    NonHamiltonian,
}

impl Filter {
    pub fn accepts(self, graph: &BipartiteDigraph) -> bool {
        match self {
            Filter::ConditionM => check_condition_m(graph).satisfied,
            Filter::MinDegree => check_min_degree(graph).satisfied,
            Filter::HalfDegrees => check_half_degrees(graph).satisfied,
            Filter::MinSemiDegree(k) => {
                (0..graph.order()).all(|v| graph.out_degree(v) >= k && graph.in_degree(v) >= k)
            }
            Filter::Hamiltonian => is_hamiltonian(graph),
            Filter::NonHamiltonian => !is_hamiltonian(graph),
        }
    }
}

pub(crate) fn is_hamiltonian(graph: &BipartiteDigraph) -> bool {
    oracle_hamiltonian(graph)
        .expect("enumerated digraphs are within the oracle cap")
        .is_some()
}

fn check_cap(a: usize) -> Result<()> {
    if !(2..=ENUMERATION_CAP).contains(&a) {
        return Err(Error::CapExceeded {
            what: "enumeration class size",
            limit: ENUMERATION_CAP,
            value: a,
        });
    }
    Ok(())
}

/// Every digraph with class size `a` passing all `filters`, in arc-mask order.
pub fn enumerate_all(a: usize, filters: &[Filter]) -> Result<impl Iterator<Item = BipartiteDigraph> + '_> {
    check_cap(a)?;
    Ok((0..1u64 << (2 * a * a))
        .map(move |m| from_arc_mask(a, m).expect("within cap"))
        .filter(move |g| filters.iter().all(|f| f.accepts(g))))
}

/// Arc masks of the digraphs [`enumerate_all`] yields, computed in parallel
/// and returned in ascending order.
pub fn par_enumerate(a: usize, filters: &[Filter]) -> Result<Vec<u64>> {
    check_cap(a)?;
    Ok((0..1u64 << (2 * a * a))
        .into_par_iter()
        .filter(|&m| {
            let g = from_arc_mask(a, m).expect("within cap");
            filters.iter().all(|f| f.accepts(&g))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_round_trip() {
        let g = BipartiteDigraph::complete(3).unwrap().without_arc(4, 2).unwrap();
        let m = arc_mask(&g);
        assert_eq!(m.count_ones(), 17);
        assert_eq!(from_arc_mask(3, m).unwrap(), g);
        assert_eq!(arc_index(2, 0, 2), 0);
        assert_eq!(arc_index(2, 3, 1), 7);
    }

    #[test]
    fn all_of_a_two() {
        assert_eq!(enumerate_all(2, &[]).unwrap().count(), 256);
        assert!(enumerate_all(4, &[]).is_err());
        let serial: Vec<u64> = enumerate_all(2, &[Filter::ConditionM]).unwrap().map(|g| arc_mask(&g)).collect();
        assert_eq!(serial, par_enumerate(2, &[Filter::ConditionM]).unwrap());
    }
}
