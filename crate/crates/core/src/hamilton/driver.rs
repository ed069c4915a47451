use serde::Serialize;

use super::decomposition::{decompose_with, Decomposition, StageRule};
use super::merge::{find_bridge_path, splice, BridgeOutcome};
use super::oracle::{oracle_hamiltonian, verify_cycle, ORACLE_CAP};
use crate::compat::{rotate_to_min, SearchMode};
use crate::conditions::check_condition_m;
use crate::digraph::BipartiteDigraph;
use crate::io::vertex_label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HamiltonOptions {
    /// Search used for each stage cycle.
    pub mode: SearchMode,
    /// Largest order handed to the oracle; at most [`ORACLE_CAP`].
    pub oracle_cap: usize,
}

impl Default for HamiltonOptions {
    fn default() -> Self {
        HamiltonOptions {
            mode: SearchMode::Exact,
            oracle_cap: ORACLE_CAP,
        }
    }
}

/// Which step produced the cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Method {
    /// The first decomposition was already a single cycle.
    Decomposition,
    /// Reached after this many splices.
    Splice { count: usize },
    /// Exact longest-cycle decomposition over all complete matchings.
    ExactSearch,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub cycle_len: usize,
    pub remainder: usize,
}

/// A verified hamiltonian cycle in input ids, starting at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonCertificate {
    pub cycle: Vec<usize>,
    pub method: Method,
    /// Stages of the first decomposition, when one exists.
    pub stages: Vec<StageSummary>,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    cycle: Vec<String>,
    matching: Vec<[String; 2]>,
    stages: &'a [StageSummary],
    method: Method,
}

impl HamiltonCertificate {
    /// The X-to-Y arcs of the cycle: the complete matching it is compatible with.
    pub fn matching(&self) -> Vec<(usize, usize)> {
        let n = self.cycle.len();
        let mut pairs: Vec<_> = (0..n)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % n]))
            .filter(|&(u, _)| u < n / 2)
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn to_json(&self) -> serde_json::Value {
        let a = self.cycle.len() / 2;
        let doc = CertificateJson {
            cycle: self.cycle.iter().map(|&v| vertex_label(a, v)).collect(),
            matching: self
                .matching()
                .into_iter()
                .map(|(x, y)| [vertex_label(a, x), vertex_label(a, y)])
                .collect(),
            stages: &self.stages,
            method: self.method,
        };
        serde_json::to_value(doc).expect("certificate serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Hamiltonian(HamiltonCertificate),
    /// Decided by the oracle.
    NonHamiltonian,
    /// Above the oracle cap and no cycle was found.
    Unknown,
}

impl Verdict {
    pub fn certificate(&self) -> Option<&HamiltonCertificate> {
        match self {
            Verdict::Hamiltonian(c) => Some(c),
            _ => None,
        }
    }
}

/// Decomposes, then splices until one cycle remains. When splicing stalls
/// the exact decomposition over all matchings is tried (for inputs meeting
/// condition (M)), then the oracle within its cap. Returned cycles are always
/// verified; non-hamiltonicity is only ever reported by the oracle.
pub fn find_hamiltonian_cycle(graph: &BipartiteDigraph, options: &HamiltonOptions) -> Verdict {
    let condition_m = check_condition_m(graph).satisfied;
    let mut stages = Vec::new();
    if let Ok(dec) = decompose_with(graph, StageRule::Fixed, options.mode) {
        stages = summarize(&dec);
        if let Some((cycle, count)) = splice_to_end(&dec) {
            let method = if count == 0 { Method::Decomposition } else { Method::Splice { count } };
            if let Some(v) = certify(graph, cycle, method, &stages) {
                return v;
            }
        }
    }
    if condition_m {
        if let Ok(dec) = decompose_with(graph, StageRule::Global, SearchMode::Exact) {
            if let Some((cycle, _)) = splice_to_end(&dec) {
                if let Some(v) = certify(graph, cycle, Method::ExactSearch, &stages) {
                    return v;
                }
            }
        }
    }
    if graph.order() <= options.oracle_cap.min(ORACLE_CAP) {
        return match oracle_hamiltonian(graph) {
            Ok(Some(cycle)) => certify(graph, cycle, Method::Oracle, &stages).unwrap_or(Verdict::Unknown),
            Ok(None) => Verdict::NonHamiltonian,
            Err(_) => Verdict::Unknown,
        };
    }
    Verdict::Unknown
}

fn summarize(dec: &Decomposition) -> Vec<StageSummary> {
    dec.stages()
        .iter()
        .map(|s| StageSummary {
            cycle_len: s.cycle.len(),
            remainder: s.remainder.len(),
        })
        .collect()
}

/// Splices until a single cycle covers everything; returns it in input ids
/// with the number of splices.
fn splice_to_end(dec: &Decomposition) -> Option<(Vec<usize>, usize)> {
    let a = dec.working_graph().class_size();
    let cap = 4 * a * a;
    let mut current = dec.clone();
    let mut count = 0;
    while !current.is_hamiltonian() {
        if count == cap {
            return None;
        }
        let BridgeOutcome::Plan(plan) = find_bridge_path(&current) else {
            return None;
        };
        current = splice(&current, &plan).ok()?;
        count += 1;
    }
    Some((current.original_cycle(0), count))
}

fn certify(graph: &BipartiteDigraph, cycle: Vec<usize>, method: Method, stages: &[StageSummary]) -> Option<Verdict> {
    let cycle = rotate_to_min(cycle);
    verify_cycle(graph, &cycle).then(|| {
        Verdict::Hamiltonian(HamiltonCertificate {
            cycle,
            method,
            stages: stages.to_vec(),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_needs_no_splice() {
        let g = BipartiteDigraph::complete(3).unwrap();
        let v = find_hamiltonian_cycle(&g, &HamiltonOptions::default());
        let cert = v.certificate().unwrap();
        assert_eq!(cert.method, Method::Decomposition);
        assert_eq!(cert.cycle, vec![0, 3, 1, 4, 2, 5]);
        assert_eq!(cert.matching(), vec![(0, 3), (1, 4), (2, 5)]);
        let json = cert.to_json();
        assert_eq!(json["cycle"][1], "y0");
        assert_eq!(json["stages"][0]["cycle_len"], 6);
        assert_eq!(json["method"]["type"], "decomposition");
    }

    #[test]
    fn empty_graph_is_decided_by_the_oracle() {
        let g = BipartiteDigraph::empty(3).unwrap();
        assert_eq!(find_hamiltonian_cycle(&g, &HamiltonOptions::default()), Verdict::NonHamiltonian);
        let capped = HamiltonOptions {
            oracle_cap: 4,
            ..HamiltonOptions::default()
        };
        assert_eq!(find_hamiltonian_cycle(&g, &capped), Verdict::Unknown);
    }
}
