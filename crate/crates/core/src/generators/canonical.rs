use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::enumerate::{arc_index, arc_mask, from_arc_mask, par_enumerate, Filter};
use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

/// Largest class size [`canonical_form`] accepts.
pub const CANONICAL_CAP: usize = 4;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
}

/// For every relabelling, the image of each arc bit.
fn relabellings(a: usize) -> &'static [Vec<usize>] {
    static TABLES: [OnceLock<Vec<Vec<usize>>>; CANONICAL_CAP + 1] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    TABLES[a].get_or_init(|| {
        let perms = permutations(a);
        let mut tables = Vec::new();
        for swap in [false, true] {
            for px in &perms {
                for py in &perms {
                    let map = |v: usize| {
                        let (image, to_y) = if v < a { (px[v], swap) } else { (py[v - a], !swap) };
                        if to_y {
                            a + image
                        } else {
                            image
                        }
                    };
                    let table = (0..2 * a * a)
                        .map(|bit| {
                            let u = bit / a;
                            let v = if u < a { a + bit % a } else { bit % a };
                            arc_index(a, map(u), map(v))
                        })
                        .collect();
                    tables.push(table);
                }
            }
        }
        tables
    })
}

/// Smallest arc mask over all relabellings that permute within the classes
/// and optionally exchange them.
pub fn canonical_form(graph: &BipartiteDigraph) -> Result<u64> {
    let a = graph.class_size();
    if a > CANONICAL_CAP {
        return Err(Error::CapExceeded {
            what: "canonical form class size",
            limit: CANONICAL_CAP,
            value: a,
        });
    }
    let mask = arc_mask(graph);
    let bits: Vec<usize> = (0..2 * a * a).filter(|&b| mask >> b & 1 == 1).collect();
    Ok(relabellings(a)
        .iter()
        .map(|table| bits.iter().fold(0u64, |m, &b| m | 1 << table[b]))
        .min()
        .expect("identity relabelling exists"))
}

/// Canonical forms of the non-hamiltonian digraphs with `a = 3` and both
/// semi-degree minima at least 2, found by exhaustive enumeration.
pub fn fig1_classes() -> &'static [u64] {
    static CLASSES: OnceLock<Vec<u64>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let masks = par_enumerate(3, &[Filter::MinSemiDegree(2), Filter::NonHamiltonian]).expect("a = 3 is within cap");
        let forms: BTreeSet<u64> = masks
            .par_iter()
            .map(|&m| canonical_form(&from_arc_mask(3, m).expect("within cap")).expect("within cap"))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        forms.into_iter().collect()
    })
}

/// The canonical representative of the unique class in [`fig1_classes`],
/// or `None` if the enumeration found more or fewer than one class.
pub fn fig1_digraph() -> Option<BipartiteDigraph> {
    match fig1_classes() {
        [only] => Some(from_arc_mask(3, *only).expect("within cap")),
        _ => None,
    }
}
