//! Shallow minors: models with radius certificates, their canonical
//! enumeration, and the parameters obtained by maximizing over all models.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde::Serialize;

use crate::caps::Caps;
use crate::cover::{ccw_exact, neighborhood_clique_cover, quotient_unchecked};
use crate::error::{Error, Result};
use crate::graph::{set_radius_center, Graph, VertexSet};
use crate::par;
use crate::structure::{largest_balanced_induced_biclique, largest_induced_star};

/// Disjoint connected branch sets, each with a center whose eccentricity in
/// the branch set is at most `t`. Vertices outside all branch sets are deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub t: usize,
    pub branch_sets: Vec<VertexSet>,
    pub centers: Vec<usize>,
}

impl MinorModel {
    /// Builds a model, computing each center (smallest id of least eccentricity).
    pub fn new(g: &Graph, t: usize, branch_sets: Vec<VertexSet>) -> Result<Self> {
        let mut centers = Vec::with_capacity(branch_sets.len());
        for (i, &set) in branch_sets.iter().enumerate() {
            let rc = set_radius_center(g, set)
                .map_err(|e| Error::validation(format!("branch set {i}: {e}")))?
                .ok_or_else(|| Error::validation(format!("branch set {i} is not connected")))?;
            centers.push(rc.center);
        }
        let model = MinorModel {
            t,
            branch_sets,
            centers,
        };
        model.validate(g)?;
        Ok(model)
    }

    /// Checks every model invariant, naming the first one violated.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.centers.len() != self.branch_sets.len() {
            return Err(Error::validation("one center per branch set required"));
        }
        let mut used = VertexSet::EMPTY;
        for (i, (&set, &c)) in self.branch_sets.iter().zip(&self.centers).enumerate() {
            if set.is_empty() || !set.is_subset(g.vertices()) {
                return Err(Error::validation(format!(
                    "branch set {i} is empty or out of range"
                )));
            }
            if !set.is_disjoint(used) {
                return Err(Error::validation(format!(
                    "branch set {i} overlaps an earlier branch set"
                )));
            }
            used = used.union(set);
            if !set.contains(c) {
                return Err(Error::validation(format!(
                    "center {c} lies outside branch set {i}"
                )));
            }
            match g.eccentricity_within(c, set) {
                None => {
                    return Err(Error::validation(format!(
                        "branch set {i} is not connected"
                    )))
                }
                Some(e) if e > self.t => {
                    return Err(Error::validation(format!(
                        "branch set {i} has radius {e} from center {c}, depth is {}",
                        self.t
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }

    /// The minor: one vertex per branch set, adjacent when some host edge
    /// joins the two sets.
    pub fn quotient(&self, g: &Graph) -> Result<Graph> {
        self.validate(g)?;
        Ok(self.quotient_unchecked(g))
    }

    pub(crate) fn quotient_unchecked(&self, g: &Graph) -> Graph {
        quotient_unchecked(g, &self.branch_sets)
    }
}

/// All connected vertex sets of radius at most `t` whose smallest vertex is
/// `v`, in generation order (the singleton first).
fn branch_sets_with_min(g: &Graph, v: usize, t: usize, reach: &[VertexSet]) -> Vec<VertexSet> {
    fn grow(
        g: &Graph,
        v: usize,
        reach: &[VertexSet],
        set: VertexSet,
        excluded: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        out.push(set);
        let mut boundary = VertexSet::EMPTY;
        for u in set {
            boundary = boundary.union(g.neighbors(u));
        }
        let cands = boundary.difference(set).difference(excluded).above(v);
        let mut excluded = excluded;
        for w in cands {
            if set.is_subset(reach[w]) {
                grow(g, v, reach, set.with(w), excluded, out);
            }
            excluded.insert(w);
        }
    }
    let mut all = Vec::new();
    grow(g, v, reach, VertexSet::singleton(v), VertexSet::EMPTY, &mut all);
    all.into_iter()
        .filter(|&s| {
            s.len() == 1
                || set_radius_center(g, s)
                    .ok()
                    .flatten()
                    .is_some_and(|rc| rc.radius <= t)
        })
        .collect()
}

/// Vertices within distance `r` of each vertex.
fn balls(g: &Graph, r: usize) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            g.distances(v, g.vertices())
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some_and(|d| d <= r))
                .map(|(u, _)| u)
                .collect()
        })
        .collect()
}

struct Frame {
    used: VertexSet,
    v: usize,
    idx: usize,
}

/// Depth-first stream of minor models. Branch sets are chosen by increasing
/// smallest vertex, so each family of branch sets is produced exactly once.
pub struct ModelStream<'g> {
    g: &'g Graph,
    t: usize,
    by_min: Vec<Vec<VertexSet>>,
    frames: Vec<Frame>,
    family: Vec<VertexSet>,
    emitted: u64,
    max_models: u64,
    deadline: Option<Instant>,
    truncated: bool,
}

/// Whether a stream ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StreamSummary {
    pub emitted: u64,
    pub exhaustive: bool,
}

impl ModelStream<'_> {
    /// Valid after the stream returned `None`; `exhaustive` is false when a
    /// cap stopped it early.
    pub fn summary(&self) -> StreamSummary {
        StreamSummary {
            emitted: self.emitted,
            exhaustive: !self.truncated,
        }
    }

    fn over_budget(&mut self) -> bool {
        if self.emitted >= self.max_models {
            self.truncated = true;
        } else if let Some(deadline) = self.deadline {
            if self.emitted % 256 == 0 && Instant::now() >= deadline {
                self.truncated = true;
            }
        }
        self.truncated
    }
}

impl Iterator for ModelStream<'_> {
    type Item = MinorModel;

    fn next(&mut self) -> Option<MinorModel> {
        if self.truncated {
            return None;
        }
        let n = self.g.n();
        loop {
            let frame = self.frames.last_mut()?;
            if frame.v >= n {
                self.frames.pop();
                if !self.frames.is_empty() {
                    self.family.pop();
                }
                continue;
            }
            let (v, used) = (frame.v, frame.used);
            if used.contains(v) || frame.idx >= self.by_min[v].len() {
                frame.v += 1;
                frame.idx = 0;
                continue;
            }
            let set = self.by_min[v][frame.idx];
            frame.idx += 1;
            if !set.is_disjoint(used) {
                continue;
            }
            if self.over_budget() {
                return None;
            }
            self.family.push(set);
            self.frames.push(Frame {
                used: used.union(set),
                v: v + 1,
                idx: 0,
            });
            self.emitted += 1;
            // Certificates are recomputed from the branch sets, not carried over.
            return Some(
                MinorModel::new(self.g, self.t, self.family.clone())
                    .expect("enumerated branch sets are valid"),
            );
        }
    }
}

/// Every `t`-shallow minor model of `g`, in canonical order, subject to
/// `caps.max_models` and `caps.max_seconds`.
pub fn enumerate_models<'g>(g: &'g Graph, t: usize, caps: &Caps) -> ModelStream<'g> {
    let reach = balls(g, 2 * t);
    let by_min = (0..g.n())
        .map(|v| branch_sets_with_min(g, v, t, &reach))
        .collect();
    ModelStream {
        g,
        t,
        by_min,
        frames: vec![Frame {
            used: VertexSet::EMPTY,
            v: 0,
            idx: 0,
        }],
        family: Vec::new(),
        emitted: 0,
        max_models: caps.max_models,
        deadline: caps
            .max_seconds
            .map(|s| Instant::now() + Duration::from_secs_f64(s)),
        truncated: false,
    }
}

/// A parameter maximized over the `t`-shallow minors of a graph. When
/// `exhaustive` is false the value is only a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorOptimum<V> {
    pub value: V,
    pub witness: MinorModel,
    pub exhaustive: bool,
    pub models: u64,
}

const CHUNK: usize = 2048;

/// Maximum of `eval` over all models; ties keep the earliest model in
/// canonical order, so the witness does not depend on scheduling.
pub fn maximize_over_minors<V, F>(g: &Graph, t: usize, caps: &Caps, eval: F) -> Result<MinorOptimum<V>>
where
    V: Ord + Send,
    F: Fn(&MinorModel, &Graph) -> Result<V> + Sync + Send,
{
    if g.n() == 0 {
        return Err(Error::validation("shallow minors of the empty graph"));
    }
    let mut stream = enumerate_models(g, t, caps);
    let mut best: Option<(V, MinorModel)> = None;
    loop {
        let chunk: Vec<MinorModel> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let values = par::map(&chunk, caps.parallel, |m| eval(m, &m.quotient_unchecked(g)));
        for (model, value) in chunk.into_iter().zip(values) {
            let value = value?;
            if best.as_ref().map_or(true, |(b, _)| value > *b) {
                best = Some((value, model));
            }
        }
    }
    let summary = stream.summary();
    let (value, witness) = best.expect("every nonempty graph has a minor");
    Ok(MinorOptimum {
        value,
        witness,
        exhaustive: summary.exhaustive,
        models: summary.emitted,
    })
}

/// Largest neighbourhood clique cover number over the `t`-shallow minors.
pub fn beta_hat(g: &Graph, t: usize, caps: &Caps) -> Result<MinorOptimum<usize>> {
    maximize_over_minors(g, t, caps, |_, q| Ok(neighborhood_clique_cover(q, caps)?.value))
}

/// Largest edge density `|E(H)|/|V(H)|` over the `t`-shallow minors, exact.
pub fn grad(g: &Graph, t: usize, caps: &Caps) -> Result<MinorOptimum<Ratio<u64>>> {
    maximize_over_minors(g, t, caps, |_, q| Ok(Ratio::new(q.m() as u64, q.n() as u64)))
}

/// Largest clique cover width over the `t`-shallow minors.
pub fn max_ccw_over_minors(g: &Graph, t: usize, caps: &Caps) -> Result<MinorOptimum<usize>> {
    maximize_over_minors(g, t, caps, |_, q| Ok(ccw_exact(q, caps)?.0))
}

/// Largest `p` with `K_{p,p}` as a `t`-shallow minor.
pub fn p_t(g: &Graph, t: usize, caps: &Caps) -> Result<MinorOptimum<usize>> {
    maximize_over_minors(g, t, caps, |_, q| Ok(largest_balanced_induced_biclique(q, caps)?.p))
}

/// Most leaves of an induced star in a `t`-shallow minor.
pub fn s_t(g: &Graph, t: usize, caps: &Caps) -> Result<MinorOptimum<usize>> {
    maximize_over_minors(g, t, caps, |_, q| Ok(largest_induced_star(q, caps)?.size()))
}
