use serde::Serialize;

use super::decomposition::{extend_stages, DecomposeError, Decomposition, Stage};
use crate::compat::{rotate_to_min, CycleCertificate, PathCertificate};
use crate::digraph::{BipartiteDigraph, VertexSet};
use crate::error::Error;
use crate::matching::perfect_matching_within;

/// Path expansions allowed per bridge search.
pub const BRIDGE_BUDGET: usize = 100_000;

/// How a bridge path `P` is spliced into the cycle `v_0 .. v_{n-1}`, with
/// the arcs `v_entry -> P` and `P -> v_exit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SpliceForm {
    /// `[v_exit .. v_entry, P]`. With `exit = entry + 1` the whole cycle is
    /// kept and `P` is inserted into the arc `v_entry v_exit`.
    Chord { entry: usize, exit: usize },
    /// `[v_{split+1} .. v_entry, P, v_exit .. v_split, v_{entry+1} .. v_{exit-1}]`,
    /// using the arcs `v_split v_{entry+1}` and `v_{exit-1} v_{split+1}`.
    DoubleChord { entry: usize, exit: usize, split: usize },
}

/// A way to lengthen the cycle of stage `target` through vertices of later
/// stages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergePlan {
    pub target: usize,
    pub path: PathCertificate,
    pub form: SpliceForm,
    /// The resulting cycle, starting at its smallest vertex.
    pub cycle: Vec<usize>,
    /// `P` meets every later cycle and the leftover.
    pub covers_later: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "index", rename_all = "snake_case")]
pub enum Component {
    Cycle(usize),
    Leftover,
}

/// Arcs between the cycle of `stage` and a later component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Link {
    pub stage: usize,
    pub component: Component,
    /// Some arc runs from `Y(C_stage)` to the X side of the component.
    pub leaving: bool,
    /// Some arc runs from the Y side of the component to `X(C_stage)`.
    pub entering: bool,
}

/// Why no merge plan was found.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub links: Vec<Link>,
    /// The expansion budget ran out before the search was complete.
    pub exhausted: bool,
}

impl BridgeReport {
    pub fn missing(&self) -> impl Iterator<Item = &Link> {
        self.links.iter().filter(|l| !l.leaving || !l.entering)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BridgeOutcome {
    Plan(MergePlan),
    Terminal(BridgeReport),
}

/// Searches the last cycle first for a path through later components whose
/// splice lengthens that cycle, moving to earlier cycles when none exists.
///
/// Candidate paths are simple paths in the union of later components. A
/// plan must leave the rest of the cycle's remainder perfectly matchable so
/// that later stages can be rebuilt. Plans meeting every later component
/// are preferred, then longer results.
pub fn find_bridge_path(dec: &Decomposition) -> BridgeOutcome {
    let mut budget = BRIDGE_BUDGET;
    for t in (0..dec.stages.len()).rev() {
        if let Some(plan) = plan_for(dec, t, &mut budget) {
            return BridgeOutcome::Plan(plan);
        }
    }
    BridgeOutcome::Terminal(BridgeReport {
        links: links(dec),
        exhausted: budget == 0,
    })
}

fn links(dec: &Decomposition) -> Vec<Link> {
    let g = &dec.graph;
    let (xs, ys) = (g.x_class(), g.y_class());
    let k = dec.stages.len();
    let mut components: Vec<(Component, VertexSet)> = dec
        .stages
        .iter()
        .enumerate()
        .map(|(j, s)| (Component::Cycle(j), s.cycle.vertex_set()))
        .collect();
    if !dec.leftover.is_empty() {
        components.push((Component::Leftover, dec.leftover));
    }
    let mut out = Vec::new();
    for t in 0..k {
        let cycle = components[t].1;
        for &(component, set) in &components[t + 1..] {
            let arc_between = |from: VertexSet, to: VertexSet| {
                from.iter().any(|v| !(g.out_set(v) & to).is_empty())
            };
            out.push(Link {
                stage: t,
                component,
                leaving: arc_between(cycle & ys, set & xs),
                entering: arc_between(set & ys, cycle & xs),
            });
        }
    }
    out
}

struct Candidate {
    len: usize,
    form: SpliceForm,
    cycle: Vec<usize>,
}

fn plan_for(dec: &Decomposition, t: usize, budget: &mut usize) -> Option<MergePlan> {
    let g = &dec.graph;
    let stage = &dec.stages[t];
    let cycle = stage.cycle.vertices();
    let cycle_set = stage.cycle.vertex_set();
    let later = stage.remainder - cycle_set;
    if later.is_empty() {
        return None;
    }
    let mut parts: Vec<VertexSet> = dec.stages[t + 1..].iter().map(|s| s.cycle.vertex_set()).collect();
    if !dec.leftover.is_empty() {
        parts.push(dec.leftover);
    }
    let mut search = PathSearch {
        graph: g,
        stage,
        cycle,
        cycle_set,
        later,
        parts,
        budget,
        best: None,
        target: t,
    };
    for start in later.iter() {
        if (g.in_set(start) & cycle_set).is_empty() {
            continue;
        }
        let mut path = vec![start];
        search.extend(&mut path, VertexSet::singleton(start));
        if search.done() {
            break;
        }
    }
    search.best
}

struct PathSearch<'a> {
    graph: &'a BipartiteDigraph,
    stage: &'a Stage,
    cycle: &'a [usize],
    cycle_set: VertexSet,
    later: VertexSet,
    parts: Vec<VertexSet>,
    budget: &'a mut usize,
    best: Option<MergePlan>,
    target: usize,
}

impl PathSearch<'_> {
    fn done(&self) -> bool {
        *self.budget == 0
            || self
                .best
                .as_ref()
                .is_some_and(|p| p.covers_later && p.cycle.len() == self.stage.remainder.len())
    }

    fn extend(&mut self, path: &mut Vec<usize>, on_path: VertexSet) {
        if self.done() {
            return;
        }
        *self.budget -= 1;
        let last = *path.last().expect("nonempty");
        if path.len() >= 2 && !(self.graph.out_set(last) & self.cycle_set).is_empty() {
            self.consider(path, on_path);
        }
        for next in (self.graph.out_set(last) & (self.later - on_path)).iter() {
            path.push(next);
            let mut with = on_path;
            with.insert(next);
            self.extend(path, with);
            path.pop();
            if self.done() {
                return;
            }
        }
    }

    fn consider(&mut self, path: &[usize], on_path: VertexSet) {
        let covers = self.parts.iter().all(|p| !(*p & on_path).is_empty());
        let beats = |len: usize, best: &Option<MergePlan>| match best {
            None => true,
            Some(b) => (covers, len) > (b.covers_later, b.cycle.len()),
        };
        if !beats(self.cycle.len() + path.len(), &self.best) {
            return;
        }
        for cand in candidates(self.graph, self.cycle, path) {
            if cand.len <= self.cycle.len() || !beats(cand.len, &self.best) {
                continue;
            }
            let set: VertexSet = cand.cycle.iter().copied().collect();
            if perfect_matching_within(self.graph, self.stage.remainder - set).is_none() {
                continue;
            }
            self.best = Some(MergePlan {
                target: self.target,
                path: PathCertificate::from_vertices(self.graph, path.to_vec()),
                form: cand.form,
                cycle: rotate_to_min(cand.cycle),
                covers_later: covers,
            });
            return;
        }
    }
}

/// Every splice of `path` into `cycle`, longest first.
fn candidates(graph: &BipartiteDigraph, cycle: &[usize], path: &[usize]) -> Vec<Candidate> {
    let n = cycle.len();
    let (first, last) = (path[0], path[path.len() - 1]);
    let entries: Vec<usize> = (0..n).filter(|&i| graph.has_arc(cycle[i], first)).collect();
    let exits: Vec<usize> = (0..n).filter(|&j| graph.has_arc(last, cycle[j])).collect();
    let mut out = Vec::new();
    for &entry in &entries {
        for &exit in &exits {
            let form = SpliceForm::Chord { entry, exit };
            let kept = (entry + n - exit) % n + 1;
            out.push(Candidate {
                len: kept + path.len(),
                form,
                cycle: apply(cycle, path, form),
            });
            if exit == (entry + 1) % n || exit == entry {
                continue;
            }
            // offsets from entry + 1: exit at o_exit >= 1, split in [o_exit, n - 2]
            let o_exit = (exit + n - entry - 1) % n;
            for o_split in o_exit..=n - 2 {
                let split = (entry + 1 + o_split) % n;
                if graph.has_arc(cycle[split], cycle[(entry + 1) % n])
                    && graph.has_arc(cycle[(exit + n - 1) % n], cycle[(split + 1) % n])
                {
                    let form = SpliceForm::DoubleChord { entry, exit, split };
                    out.push(Candidate {
                        len: n + path.len(),
                        form,
                        cycle: apply(cycle, path, form),
                    });
                }
            }
        }
    }
    out.sort_by_key(|c| std::cmp::Reverse(c.len));
    out
}

/// Builds the spliced vertex sequence. Positions are taken modulo the cycle
/// length and segments run forward.
pub fn apply(cycle: &[usize], path: &[usize], form: SpliceForm) -> Vec<usize> {
    let n = cycle.len();
    let segment = |from: usize, to: usize| {
        let count = (to + n - from) % n + 1;
        (0..count).map(move |o| cycle[(from + o) % n])
    };
    match form {
        SpliceForm::Chord { entry, exit } => segment(exit, entry).chain(path.iter().copied()).collect(),
        SpliceForm::DoubleChord { entry, exit, split } => segment((split + 1) % n, entry)
            .chain(path.iter().copied())
            .chain(segment(exit, split))
            .chain(segment((entry + 1) % n, (exit + n - 1) % n))
            .collect(),
    }
}

/// Replaces the target cycle by the plan's longer cycle and rebuilds every
/// later stage from what remains.
pub fn splice(dec: &Decomposition, plan: &MergePlan) -> Result<Decomposition, DecomposeError> {
    let bad = |msg: String| DecomposeError::Graph(Error::InvalidPlan(msg));
    let stage = dec
        .stages
        .get(plan.target)
        .ok_or_else(|| bad(format!("no stage {}", plan.target)))?;
    let rebuilt = rotate_to_min(apply(stage.cycle.vertices(), plan.path.vertices(), plan.form));
    if rebuilt != plan.cycle {
        return Err(bad("recorded cycle does not match the splice".into()));
    }
    plan.path
        .validate(&dec.graph, None)
        .map_err(|e| bad(format!("bridge path: {e}")))?;
    let cycle = CycleCertificate::from_vertices(&dec.graph, rebuilt).map_err(|e| bad(e.to_string()))?;
    let set = cycle.vertex_set();
    if !set.is_subset(stage.remainder) {
        return Err(bad("new cycle leaves the remainder".into()));
    }
    if cycle.len() <= stage.cycle.len() {
        return Err(bad("new cycle is not longer".into()));
    }
    let rest = stage.remainder - set;
    let complement =
        perfect_matching_within(&dec.graph, rest).ok_or_else(|| bad("rest of the remainder is not matchable".into()))?;
    let mut matching = cycle.matched_arcs();
    matching.extend(complement.iter().copied());
    matching.sort_unstable();
    let mut next = dec.clone();
    next.stages.truncate(plan.target);
    next.stages.push(Stage {
        cycle,
        remainder: stage.remainder,
        matching,
        rematched: true,
    });
    extend_stages(&mut next, rest, complement)?;
    Ok(next)
}
