use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compat::{longest_compatible_cycle, longest_cycle_search, CycleCertificate, SearchMode};
use crate::conditions::check_condition_m;
use crate::digraph::{BipartiteDigraph, Subdigraph, VertexSet};
use crate::error::{Error as GraphError, Result};
use crate::matching::{find_complete_matching, perfect_matching_within, HallViolator, MatchDirection, Matching};

/// How each stage cycle is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum StageRule {
    /// Longest cycle compatible with the matching inherited from the
    /// previous stage. Four-vertex remainders may pick any matching.
    #[default]
    Fixed,
    /// Longest cycle compatible with some complete matching of the
    /// remainder, i.e. a longest cycle whose complement in the remainder
    /// has a perfect matching.
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("no complete matching in either direction")]
    NoCompleteMatching {
        x_to_y: HallViolator,
        y_to_x: HallViolator,
    },
    #[error("the digraph has no cycle compatible with a complete matching")]
    NoCycle,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One stage: the cycle `C_j` chosen inside the remainder `R_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub cycle: CycleCertificate,
    pub remainder: VertexSet,
    /// Complete X-to-Y matching of `R_j` the cycle is compatible with.
    pub matching: Vec<(usize, usize)>,
    /// The stage matching is not the one inherited from the previous stage.
    pub rematched: bool,
}

impl Stage {
    /// `c_j`: the number of X vertices on the cycle.
    pub fn half_length(&self) -> usize {
        self.cycle.len() / 2
    }

    /// `a_j`: the class size of the remainder.
    pub fn remainder_class_size(&self) -> usize {
        self.remainder.len() / 2
    }
}

/// A remainder as a balanced digraph of its own, with its matching.
#[derive(Clone, Debug)]
pub struct Remainder {
    pub view: Subdigraph,
    pub graph: BipartiteDigraph,
    pub matching: Matching,
}

impl Remainder {
    /// Restricts `graph` to `set` (balanced, two or more per class) and
    /// `pairs` to the matching arcs inside it.
    pub fn new(graph: &BipartiteDigraph, set: VertexSet, pairs: &[(usize, usize)]) -> Result<Self> {
        let view = graph.induced(set);
        let local = view
            .to_balanced()
            .ok_or_else(|| GraphError::InvalidArgument("remainder is not balanced with a >= 2".into()))?;
        let local_pairs: Vec<(usize, usize)> = pairs
            .iter()
            .filter(|&&(x, _)| set.contains(x))
            .map(|&(x, y)| {
                let lx = view.local_id(x).expect("x kept");
                let ly = view.local_id(y).ok_or_else(|| {
                    GraphError::InvalidMatching(format!("partner {y} of {x} lies outside the remainder"))
                })?;
                Ok((lx, ly))
            })
            .collect::<Result<_>>()?;
        let matching = Matching::from_pairs(&local, MatchDirection::XToY, &local_pairs)?;
        Ok(Remainder {
            view,
            graph: local,
            matching,
        })
    }

    pub fn to_outer(&self, local: usize) -> usize {
        self.view.original_id(local)
    }
}

/// Cycles `C_1, .., C_k` with `C_{j+1}` inside `R_{j+1} = R_j - V(C_j)`, and
/// the vertices left over at the end.
///
/// All ids refer to [`Decomposition::working_graph`], which is the input
/// with its classes exchanged when only a Y-to-X complete matching exists.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub(crate) graph: BipartiteDigraph,
    pub(crate) mirrored: bool,
    pub(crate) rule: StageRule,
    pub(crate) mode: SearchMode,
    pub(crate) stages: Vec<Stage>,
    pub(crate) leftover: VertexSet,
    pub(crate) degraded: bool,
    pub(crate) condition_m: bool,
}

impl Decomposition {
    pub fn working_graph(&self) -> &BipartiteDigraph {
        &self.graph
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn rule(&self) -> StageRule {
        self.rule
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn leftover(&self) -> VertexSet {
        self.leftover
    }

    /// A stage found no cycle under the inherited matching, or the last
    /// remainder had no cycle at all.
    pub fn is_degraded(&self) -> bool {
        self.degraded
    }

    /// The input did not satisfy condition (M); results are best effort.
    pub fn best_effort(&self) -> bool {
        !self.condition_m
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.stages.len() == 1 && self.leftover.is_empty()
    }

    /// Maps a working id to the input's id.
    pub fn to_original(&self, v: usize) -> usize {
        if self.mirrored {
            let n = self.graph.order();
            (v + n / 2) % n
        } else {
            v
        }
    }

    /// Stage `j`'s cycle in input ids, rotated to start at its smallest vertex.
    pub fn original_cycle(&self, j: usize) -> Vec<usize> {
        let cycle = self.stages[j].cycle.vertices().iter().map(|&v| self.to_original(v)).collect();
        crate::compat::rotate_to_min(cycle)
    }

    /// The matched arcs of all stage cycles, as `(x, y)` pairs in working ids.
    pub fn matching_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self.stages.iter().flat_map(|s| s.cycle.matched_arcs()).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Checks the partition, containment, alternation and the length
    /// bounds `a_j >= c_j >= a_j / 2`, `c_j <= c_{j-1}`, `|C_1| >= a`.
    /// The length bounds are skipped for best-effort decompositions.
    pub fn check_invariants(&self) -> Result<(), String> {
        let a = self.graph.class_size();
        let bounded = self.condition_m;
        let mut expected = self.graph.vertices();
        let mut previous: Option<usize> = None;
        for (j, stage) in self.stages.iter().enumerate() {
            let cycle = stage.cycle.vertex_set();
            if stage.remainder != expected {
                return Err(format!("stage {j} remainder is not what earlier stages left"));
            }
            if !cycle.is_subset(stage.remainder) || stage.cycle.len() < 4 {
                return Err(format!("stage {j} cycle escapes its remainder or is too short"));
            }
            stage.cycle.validate(&self.graph, None).map_err(|e| format!("stage {j}: {e}"))?;
            let pairs: VertexSet = stage.matching.iter().flat_map(|&(x, y)| [x, y]).collect();
            if pairs != stage.remainder || stage.matching.iter().any(|&(x, y)| !self.graph.has_arc(x, y)) {
                return Err(format!("stage {j} matching does not cover its remainder"));
            }
            if stage.cycle.matched_arcs().iter().any(|arc| !stage.matching.contains(arc)) {
                return Err(format!("stage {j} cycle is not compatible with its matching"));
            }
            let (c, aj) = (stage.half_length(), stage.remainder_class_size());
            if bounded && (c > aj || 2 * c < aj) {
                return Err(format!("stage {j}: c = {c} outside [a_j/2, a_j] for a_j = {aj}"));
            }
            if bounded && previous.is_some_and(|p| c > p) {
                return Err(format!("stage {j}: c = {c} exceeds the previous stage"));
            }
            if bounded && j == 0 && stage.cycle.len() < a {
                return Err(format!("first cycle has {} < a = {a} vertices", stage.cycle.len()));
            }
            previous = Some(c);
            expected = expected - cycle;
        }
        if expected != self.leftover {
            return Err("leftover is not the final remainder".into());
        }
        if !self.degraded && self.leftover.len() > 2 {
            return Err(format!("leftover has {} vertices", self.leftover.len()));
        }
        if (self.leftover & self.graph.x_class()).len() * 2 != self.leftover.len() {
            return Err("leftover is unbalanced".into());
        }
        Ok(())
    }
}

/// Decomposes with the default rule and exact stage search.
pub fn decompose(graph: &BipartiteDigraph) -> Result<Decomposition, DecomposeError> {
    decompose_with(graph, StageRule::Fixed, SearchMode::Exact)
}

pub fn decompose_with(
    graph: &BipartiteDigraph,
    rule: StageRule,
    mode: SearchMode,
) -> Result<Decomposition, DecomposeError> {
    let condition_m = check_condition_m(graph).satisfied;
    let (work, mirrored, matching) = match find_complete_matching(graph, MatchDirection::XToY) {
        Ok(m) => (graph.clone(), false, m),
        Err(x_to_y) => {
            let mirror = graph.mirrored();
            match find_complete_matching(&mirror, MatchDirection::XToY) {
                Ok(m) => (mirror, true, m),
                Err(swapped) => {
                    let n = graph.order();
                    let back = |s: VertexSet| s.iter().map(|v| (v + n / 2) % n).collect();
                    return Err(DecomposeError::NoCompleteMatching {
                        x_to_y,
                        y_to_x: HallViolator {
                            set: back(swapped.set),
                            neighbours: back(swapped.neighbours),
                        },
                    });
                }
            }
        }
    };
    let mut dec = Decomposition {
        graph: work,
        mirrored,
        rule,
        mode,
        stages: Vec::new(),
        leftover: VertexSet::EMPTY,
        degraded: false,
        condition_m,
    };
    let all = dec.graph.vertices();
    let pairs: Vec<_> = matching.pairs().collect();
    extend_stages(&mut dec, all, pairs)?;
    Ok(dec)
}

/// Decomposes with the inherited-matching rule starting from a given
/// complete X-to-Y matching instead of the canonical one.
pub fn decompose_from(
    graph: &BipartiteDigraph,
    matching: &Matching,
    mode: SearchMode,
) -> Result<Decomposition, DecomposeError> {
    if matching.direction() != MatchDirection::XToY {
        return Err(GraphError::InvalidMatching("expected an X-to-Y matching".into()).into());
    }
    matching.validate(graph)?;
    let mut dec = Decomposition {
        graph: graph.clone(),
        mirrored: false,
        rule: StageRule::Fixed,
        mode,
        stages: Vec::new(),
        leftover: VertexSet::EMPTY,
        degraded: false,
        condition_m: check_condition_m(graph).satisfied,
    };
    extend_stages(&mut dec, graph.vertices(), matching.pairs().collect())?;
    Ok(dec)
}

impl Decomposition {
    /// Uses `cycles` (vertex sequences starting in X) as the first stages and
    /// derives the remaining stages with the inherited-matching rule. Each
    /// cycle must lie in what the earlier ones leave, and the rest of its
    /// remainder must have a perfect matching.
    pub fn from_prefix(
        graph: &BipartiteDigraph,
        cycles: &[Vec<usize>],
        mode: SearchMode,
    ) -> Result<Decomposition, DecomposeError> {
        let mut dec = Decomposition {
            graph: graph.clone(),
            mirrored: false,
            rule: StageRule::Fixed,
            mode,
            stages: Vec::new(),
            leftover: VertexSet::EMPTY,
            degraded: false,
            condition_m: check_condition_m(graph).satisfied,
        };
        let mut remaining = graph.vertices();
        let mut rest = Vec::new();
        for cycle in cycles {
            let cert = CycleCertificate::from_vertices(graph, cycle.clone())?;
            let set = cert.vertex_set();
            if !set.is_subset(remaining) {
                return Err(GraphError::InvalidArgument("prefix cycles overlap".into()).into());
            }
            rest = perfect_matching_within(graph, remaining - set).ok_or_else(|| {
                GraphError::InvalidArgument("the rest of a prefix remainder has no perfect matching".into())
            })?;
            let mut matching = cert.matched_arcs();
            matching.extend(rest.iter().copied());
            matching.sort_unstable();
            dec.stages.push(Stage {
                cycle: cert,
                remainder: remaining,
                matching,
                rematched: true,
            });
            remaining = remaining - set;
        }
        if dec.stages.is_empty() {
            return Err(GraphError::InvalidArgument("empty prefix".into()).into());
        }
        extend_stages(&mut dec, remaining, rest)?;
        Ok(dec)
    }
}

/// Appends stages starting from `remaining` with the inherited `pairs`.
pub(crate) fn extend_stages(
    dec: &mut Decomposition,
    mut remaining: VertexSet,
    mut pairs: Vec<(usize, usize)>,
) -> Result<(), DecomposeError> {
    dec.leftover = VertexSet::EMPTY;
    while remaining.len() > 2 {
        let aj = remaining.len() / 2;
        let inherited = match dec.rule {
            StageRule::Fixed if aj >= 3 => fixed_cycle(&dec.graph, remaining, &pairs, dec.mode)?,
            _ => None,
        };
        let stage = match inherited {
            Some(cycle) => Stage {
                cycle,
                remainder: remaining,
                matching: pairs.clone(),
                rematched: false,
            },
            None => {
                if dec.rule == StageRule::Fixed && aj >= 3 {
                    dec.degraded = true;
                }
                match any_matching_cycle(&dec.graph, remaining) {
                    Some((cycle, matching)) => Stage {
                        cycle,
                        rematched: dec.rule == StageRule::Fixed,
                        remainder: remaining,
                        matching,
                    },
                    None if dec.stages.is_empty() => return Err(DecomposeError::NoCycle),
                    None => {
                        dec.degraded = true;
                        break;
                    }
                }
            }
        };
        remaining = remaining - stage.cycle.vertex_set();
        pairs = stage.matching.iter().copied().filter(|&(x, _)| remaining.contains(x)).collect();
        dec.stages.push(stage);
    }
    dec.leftover = remaining;
    Ok(())
}

fn fixed_cycle(
    graph: &BipartiteDigraph,
    remaining: VertexSet,
    pairs: &[(usize, usize)],
    mode: SearchMode,
) -> Result<Option<CycleCertificate>> {
    let rem = Remainder::new(graph, remaining, pairs)?;
    let Some(local) = longest_compatible_cycle(&rem.graph, &rem.matching, mode)? else {
        return Ok(None);
    };
    let vertices = local.vertices().iter().map(|&v| rem.to_outer(v)).collect();
    CycleCertificate::from_vertices(graph, vertices).map(Some)
}

/// Longest cycle inside `within` whose complement in `within` has a perfect
/// matching, with the stage matching it induces (cycle arcs plus that
/// perfect matching).
pub(crate) fn any_matching_cycle(
    graph: &BipartiteDigraph,
    within: VertexSet,
) -> Option<(CycleCertificate, Vec<(usize, usize)>)> {
    let starts = (within & graph.x_class()).bits();
    let cycle = longest_cycle_search(graph.out_masks(), within.bits(), starts, 4, |_, mask| {
        perfect_matching_within(graph, within - VertexSet::from_bits(mask)).is_some()
    })?;
    let set: VertexSet = cycle.iter().copied().collect();
    let cert = CycleCertificate::from_vertices(graph, cycle).expect("search returns alternating cycles");
    let mut matching = cert.matched_arcs();
    matching.extend(perfect_matching_within(graph, within - set).expect("accepted complement is matchable"));
    matching.sort_unstable();
    Some((cert, matching))
}
