//! Deterministic generators: the two extremal constructions with their
//! contraction models, named families, and seeded random families.
//!
//! Random streams come from `XorShiftRng` seeded with `seed_from_u64`, so a
//! (family, params, seed) triple always yields the same graph.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{complement, Graph, VertexSet, MAX_VERTICES};
use crate::minor::MinorModel;

fn rng(seed: u64) -> XorShiftRng {
    XorShiftRng::seed_from_u64(seed)
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::validation(format!(
            "{n} vertices requested, at most {MAX_VERTICES} supported"
        )));
    }
    Ok(())
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::validation(format!("{name} = {p} is not in [0, 1]")));
    }
    Ok(())
}

/// Graph on `n` vertices whose edges are the set bits of `code`, in the order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > 64 {
        return Err(Error::validation(format!("{n} vertices need {pairs} code bits")));
    }
    if pairs < 64 && code >> pairs != 0 {
        return Err(Error::validation(format!("code {code} has bits past {pairs}")));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Every labeled graph on `n` vertices in code order (`n <= 8`).
pub fn all_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 8 {
        return Err(Error::validation("all labeled graphs only up to 8 vertices"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |code| graph_from_code(n, code).expect("code in range")))
}

/// Path `x_1..x_n` with a pendant `s_i` on every `x_i`; the model contracts
/// `x_1..x_t` and keeps every other vertex as a singleton.
pub fn gen_obs2(n: usize, t: usize) -> Result<(Graph, MinorModel)> {
    if t < 1 || n <= t {
        return Err(Error::validation(format!("need n > t >= 1, got n={n}, t={t}")));
    }
    check_size(2 * n)?;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    let labels = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("s{i}")))
        .collect();
    let g = Graph::from_edges(2 * n, &edges)?.with_labels(labels)?;
    let mut sets = vec![(0..t).collect::<VertexSet>()];
    sets.extend((t..2 * n).map(VertexSet::singleton));
    let model = MinorModel::new(&g, t, sets)?;
    Ok((g, model))
}

/// Independent `A` of size `t+1`, paths `B_1..B_t` on `t+1` vertices, a cycle
/// `B_{t+1}` on `n` vertices, and a matching saturating `A` into every `B_i`
/// (into the first `t+1` cycle vertices). The model contracts every path and
/// the first `t+1` cycle vertices, leaving the other cycle vertices single.
///
/// Vertex ids: `A` first, then the paths in order, then the cycle.
pub fn gen_obs3(n: usize, t: usize) -> Result<(Graph, MinorModel)> {
    if t < 1 || n < 5 {
        return Err(Error::validation(format!("need n >= 5 and t >= 1, got n={n}, t={t}")));
    }
    if t + 1 > n {
        return Err(Error::validation(format!(
            "cycle on {n} vertices cannot host a matching of size {}",
            t + 1
        )));
    }
    let k = t + 1;
    let total = k + t * k + n;
    check_size(total)?;
    let path_start = |i: usize| k + i * k;
    let cycle_start = k + t * k;
    let mut edges = Vec::new();
    let mut labels: Vec<String> = (1..=k).map(|j| format!("a{j}")).collect();
    for i in 0..t {
        let s = path_start(i);
        edges.extend((1..k).map(|j| (s + j - 1, s + j)));
        edges.extend((0..k).map(|j| (j, s + j)));
        labels.extend((1..=k).map(|j| format!("b{}_{j}", i + 1)));
    }
    edges.extend((0..n).map(|j| (cycle_start + j, cycle_start + (j + 1) % n)));
    edges.extend((0..k).map(|j| (j, cycle_start + j)));
    labels.extend((1..=n).map(|j| format!("c{j}")));
    let g = Graph::from_edges(total, &edges)?.with_labels(labels)?;

    let mut sets: Vec<VertexSet> = (0..k).map(VertexSet::singleton).collect();
    sets.extend((0..t).map(|i| (path_start(i)..path_start(i) + k).collect::<VertexSet>()));
    sets.push((cycle_start..cycle_start + k).collect());
    sets.extend((cycle_start + k..total).map(VertexSet::singleton));
    let model = MinorModel::new(&g, t, sets)?;
    Ok((g, model))
}

/// Deterministic named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum NamedFamily {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    /// Complement of a random bipartite graph with `n` vertices per side.
    ComplementBipartite { n: usize, seed: u64 },
}

pub fn gen_named(family: NamedFamily) -> Result<Graph> {
    let positive = |what: &str, x: usize| {
        if x == 0 {
            Err(Error::validation(format!("{what} must be positive")))
        } else {
            Ok(())
        }
    };
    match family {
        NamedFamily::Complete { n } => {
            positive("n", n)?;
            check_size(n)?;
            Graph::from_rows((0..n).map(|v| VertexSet::full(n).without(v)).collect())
        }
        NamedFamily::CompleteBipartite { a, b } => {
            positive("a", a)?;
            positive("b", b)?;
            check_size(a + b)?;
            let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            Graph::from_edges(a + b, &edges)
        }
        NamedFamily::Path { n } => {
            positive("n", n)?;
            check_size(n)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedFamily::Cycle { n } => {
            if n < 3 {
                return Err(Error::validation("a cycle needs at least 3 vertices"));
            }
            check_size(n)?;
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedFamily::Star { leaves } => {
            positive("leaves", leaves)?;
            check_size(leaves + 1)?;
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::from_edges(leaves + 1, &edges)
        }
        NamedFamily::ComplementBipartite { n, seed } => {
            positive("n", n)?;
            check_size(2 * n)?;
            let mut r = rng(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in n..2 * n {
                    if r.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            Ok(complement(&Graph::from_edges(2 * n, &edges)?))
        }
    }
}

/// Complement of the comparability graph of a random partial order: a random
/// linear order, each ordered pair kept with probability `density`, then
/// transitively closed.
pub fn gen_random_incomparability(n: usize, density: f64, seed: u64) -> Result<Graph> {
    check_size(n)?;
    check_probability("density", density)?;
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    // above[i]: positions j > i with order[i] < order[j] in the poset.
    let mut above = vec![VertexSet::EMPTY; n];
    for i in 0..n {
        for j in i + 1..n {
            if r.random_bool(density) {
                above[i].insert(j);
            }
        }
    }
    for i in (0..n).rev() {
        for j in above[i] {
            above[i] = above[i].union(above[j]);
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in above[i] {
            edges.push((order[i], order[j]));
        }
    }
    Ok(complement(&Graph::from_edges(n, &edges)?))
}

/// Connected chordal graph: a random tree plus random edges (probability
/// 0.3), closed under fill-in along a random elimination order.
pub fn gen_random_chordal(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation("n must be positive"));
    }
    check_size(n)?;
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    let mut rows = vec![VertexSet::EMPTY; n];
    let link = |rows: &mut [VertexSet], u: usize, v: usize| {
        rows[u].insert(v);
        rows[v].insert(u);
    };
    for i in 1..n {
        let j = r.random_range(0..i);
        link(&mut rows, order[i], order[j]);
    }
    for i in 0..n {
        for j in i + 1..n {
            if r.random_bool(0.3) {
                link(&mut rows, order[i], order[j]);
            }
        }
    }
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    for &v in &order {
        let later: Vec<usize> = rows[v].iter().filter(|&u| position[u] > position[v]).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                link(&mut rows, x, y);
            }
        }
    }
    Graph::from_rows(rows)
}

/// Intersection graph of `n` random closed intervals with left ends in
/// `[0, 2n)` and lengths in `[0, n/2]`.
pub fn gen_random_interval(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation("n must be positive"));
    }
    check_size(n)?;
    let mut r = rng(seed);
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let left = r.random_range(0..2 * n);
            (left, left + r.random_range(0..=n / 2))
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (intervals[u], intervals[v]);
            if a.0 <= b.1 && b.0 <= a.1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_size(n)?;
    check_probability("p", p)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Any generator, addressable by name for the command line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Named(NamedFamily),
    Obs2 { n: usize, t: usize },
    Obs3 { n: usize, t: usize },
    Incomparability { n: usize, density: f64 },
    Chordal { n: usize },
    Interval { n: usize },
    Gnp { n: usize, p: f64 },
}

/// A generated graph, with the contraction model for the two extremal families.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub model: Option<MinorModel>,
}

/// `{family, params, seed}` recorded next to generated graphs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub family: String,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
}

pub const FAMILY_NAMES: &[&str] = &[
    "complete",
    "complete_bipartite",
    "path",
    "cycle",
    "star",
    "complement_bipartite",
    "obs2",
    "obs3",
    "incomparability",
    "chordal",
    "interval",
    "gnp",
];

impl Family {
    /// Parses `key=value` parameters for the named family. Every listed key
    /// is required and unknown keys are rejected.
    pub fn parse(name: &str, params: &[(String, String)], seed: u64) -> Result<Family> {
        let lookup = |key: &str| -> Result<&str> {
            params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| Error::validation(format!("{name} needs parameter {key}")))
        };
        let int = |key: &str| -> Result<usize> {
            let v = lookup(key)?;
            v.parse()
                .map_err(|_| Error::validation(format!("{key}={v} is not a nonnegative integer")))
        };
        let real = |key: &str| -> Result<f64> {
            let v = lookup(key)?;
            v.parse()
                .map_err(|_| Error::validation(format!("{key}={v} is not a number")))
        };
        let (family, keys): (Family, &[&str]) = match name {
            "complete" => (Family::Named(NamedFamily::Complete { n: int("n")? }), &["n"]),
            "complete_bipartite" => (
                Family::Named(NamedFamily::CompleteBipartite {
                    a: int("a")?,
                    b: int("b")?,
                }),
                &["a", "b"],
            ),
            "path" => (Family::Named(NamedFamily::Path { n: int("n")? }), &["n"]),
            "cycle" => (Family::Named(NamedFamily::Cycle { n: int("n")? }), &["n"]),
            "star" => (
                Family::Named(NamedFamily::Star {
                    leaves: int("leaves")?,
                }),
                &["leaves"],
            ),
            "complement_bipartite" => (
                Family::Named(NamedFamily::ComplementBipartite { n: int("n")?, seed }),
                &["n"],
            ),
            "obs2" => (Family::Obs2 { n: int("n")?, t: int("t")? }, &["n", "t"]),
            "obs3" => (Family::Obs3 { n: int("n")?, t: int("t")? }, &["n", "t"]),
            "incomparability" => (
                Family::Incomparability {
                    n: int("n")?,
                    density: real("density")?,
                },
                &["n", "density"],
            ),
            "chordal" => (Family::Chordal { n: int("n")? }, &["n"]),
            "interval" => (Family::Interval { n: int("n")? }, &["n"]),
            "gnp" => (Family::Gnp { n: int("n")?, p: real("p")? }, &["n", "p"]),
            other => {
                return Err(Error::validation(format!(
                    "unknown family {other}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
            return Err(Error::validation(format!("{name} takes no parameter {k}")));
        }
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Named(NamedFamily::Complete { .. }) => "complete",
            Family::Named(NamedFamily::CompleteBipartite { .. }) => "complete_bipartite",
            Family::Named(NamedFamily::Path { .. }) => "path",
            Family::Named(NamedFamily::Cycle { .. }) => "cycle",
            Family::Named(NamedFamily::Star { .. }) => "star",
            Family::Named(NamedFamily::ComplementBipartite { .. }) => "complement_bipartite",
            Family::Obs2 { .. } => "obs2",
            Family::Obs3 { .. } => "obs3",
            Family::Incomparability { .. } => "incomparability",
            Family::Chordal { .. } => "chordal",
            Family::Interval { .. } => "interval",
            Family::Gnp { .. } => "gnp",
        }
    }

    pub fn provenance(&self, seed: u64) -> Provenance {
        let mut params = BTreeMap::new();
        let mut put = |k: &str, v: Value| {
            params.insert(k.to_string(), v);
        };
        match *self {
            Family::Named(NamedFamily::Complete { n })
            | Family::Named(NamedFamily::Path { n })
            | Family::Named(NamedFamily::Cycle { n })
            | Family::Named(NamedFamily::ComplementBipartite { n, .. })
            | Family::Chordal { n }
            | Family::Interval { n } => put("n", n.into()),
            Family::Named(NamedFamily::CompleteBipartite { a, b }) => {
                put("a", a.into());
                put("b", b.into());
            }
            Family::Named(NamedFamily::Star { leaves }) => put("leaves", leaves.into()),
            Family::Obs2 { n, t } | Family::Obs3 { n, t } => {
                put("n", n.into());
                put("t", t.into());
            }
            Family::Incomparability { n, density } => {
                put("n", n.into());
                put("density", density.into());
            }
            Family::Gnp { n, p } => {
                put("n", n.into());
                put("p", p.into());
            }
        }
        Provenance {
            family: self.name().to_string(),
            params,
            seed,
        }
    }

    /// Builds the graph; deterministic families ignore `seed`.
    pub fn build(&self, seed: u64) -> Result<Construction> {
        let plain = |graph| Construction { graph, model: None };
        Ok(match *self {
            Family::Named(NamedFamily::ComplementBipartite { n, .. }) => {
                plain(gen_named(NamedFamily::ComplementBipartite { n, seed })?)
            }
            Family::Named(named) => plain(gen_named(named)?),
            Family::Obs2 { n, t } => {
                let (graph, model) = gen_obs2(n, t)?;
                Construction {
                    graph,
                    model: Some(model),
                }
            }
            Family::Obs3 { n, t } => {
                let (graph, model) = gen_obs3(n, t)?;
                Construction {
                    graph,
                    model: Some(model),
                }
            }
            Family::Incomparability { n, density } => {
                plain(gen_random_incomparability(n, density, seed)?)
            }
            Family::Chordal { n } => plain(gen_random_chordal(n, seed)?),
            Family::Interval { n } => plain(gen_random_interval(n, seed)?),
            Family::Gnp { n, p } => plain(gen_random_gnp(n, p, seed)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::cover::{ccw_exact, neighborhood_clique_cover};
    use crate::graph::to_edge_list;
    use crate::minor::beta_hat;
    use crate::structure::{
        is_chordal, is_incomparability, largest_balanced_induced_biclique, largest_induced_star,
    };
    use proptest::prelude::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn code_order_matches_pairs() {
        let g = graph_from_code(4, 0b100001).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(graph_from_code(3, 8).is_err());
        assert_eq!(all_labeled(5).unwrap().count(), 1024);
        assert_eq!(all_labeled(0).unwrap().count(), 1);
    }

    #[test]
    fn obs2_small() {
        let (g, h) = gen_obs2(3, 1).unwrap();
        assert_eq!((g.n(), g.m()), (6, 5));
        assert_eq!(h.quotient(&g).unwrap().rows(), g.rows());
        assert_eq!(g.labels().unwrap()[3], "s1");
    }

    #[test]
    fn obs2_star_and_width() {
        let (g, h) = gen_obs2(5, 3).unwrap();
        let q = h.quotient(&g).unwrap();
        assert!(largest_induced_star(&q, &caps()).unwrap().size() >= 3);
        assert_eq!(h.centers[0], 1);
        let (g, _) = gen_obs2(8, 4).unwrap();
        let caps = Caps {
            ccw_vertices: 16,
            ..Caps::default()
        };
        assert_eq!(ccw_exact(&g, &caps).unwrap().0, 1);
    }

    #[test]
    fn obs2_no_square() {
        for n in 2..=6 {
            for t in 1..n {
                let (g, h) = gen_obs2(n, t).unwrap();
                assert_eq!(largest_balanced_induced_biclique(&g, &caps()).unwrap().p, 1);
                let q = h.quotient(&g).unwrap();
                assert_eq!(largest_balanced_induced_biclique(&q, &caps()).unwrap().p, 1);
            }
        }
    }

    #[test]
    fn obs2_rejects_bad_params() {
        assert!(gen_obs2(3, 3).is_err());
        assert!(gen_obs2(3, 0).is_err());
    }

    #[test]
    fn obs3_examples() {
        let (g, h) = gen_obs3(5, 1).unwrap();
        assert_eq!(g.n(), 9);
        let (g, h7) = gen_obs3(7, 2).unwrap();
        assert_eq!(g.n(), 3 + 6 + 7);
        assert_eq!(largest_balanced_induced_biclique(&g, &caps()).unwrap().p, 1);
        let q = h7.quotient(&g).unwrap();
        assert!(largest_balanced_induced_biclique(&q, &caps()).unwrap().p >= 3);
        // A sits at quotient ids 0..=t, the contracted blocks right after.
        for a in 0..3 {
            for b in 3..6 {
                assert!(q.has_edge(a, b));
            }
        }
        assert_eq!(h.branch_sets.len(), 2 + 1 + 1 + 3);
        assert!(gen_obs3(4, 1).is_err());
        assert!(gen_obs3(5, 0).is_err());
        assert!(gen_obs3(5, 5).is_err());
    }

    #[test]
    fn named_examples() {
        let k33 = gen_named(NamedFamily::CompleteBipartite { a: 3, b: 3 }).unwrap();
        assert_eq!((k33.n(), k33.m()), (6, 9));
        let c5 = gen_named(NamedFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(c5.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        for seed in 0..10 {
            let g = gen_named(NamedFamily::ComplementBipartite { n: 4, seed }).unwrap();
            assert!(neighborhood_clique_cover(&g, &caps()).unwrap().value <= 2);
        }
        assert!(gen_named(NamedFamily::Cycle { n: 2 }).is_err());
        assert!(gen_named(NamedFamily::Complete { n: 0 }).is_err());
    }

    #[test]
    fn incomparability_extremes() {
        let g = gen_random_incomparability(6, 1.0, 3).unwrap();
        assert_eq!(g.m(), 0);
        let g = gen_random_incomparability(6, 0.0, 3).unwrap();
        assert_eq!(g.m(), 15);
        assert!(gen_random_incomparability(6, 1.5, 3).is_err());
    }

    #[test]
    fn interval_single_vertex() {
        let g = gen_random_interval(1, 9).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn chordal_outputs_collapse() {
        for seed in 0..4 {
            let g = gen_random_chordal(6, seed).unwrap();
            for t in 0..=1 {
                let r = beta_hat(&g, t, &caps()).unwrap();
                assert!(r.exhaustive);
                assert_eq!(r.value, 1);
            }
        }
    }

    #[test]
    fn family_parse_round_trip() {
        let params = vec![("n".to_string(), "7".to_string()), ("t".to_string(), "2".to_string())];
        let f = Family::parse("obs3", &params, 0).unwrap();
        assert_eq!(f, Family::Obs3 { n: 7, t: 2 });
        let p = f.provenance(0);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"family":"obs3","params":{"n":7,"t":2},"seed":0}"#);
        assert!(Family::parse("obs3", &params[..1], 0).is_err());
        assert!(Family::parse("nope", &params, 0).is_err());
        let extra = vec![("n".to_string(), "5".to_string()), ("x".to_string(), "1".to_string())];
        assert!(Family::parse("path", &extra, 0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn generators_are_deterministic(n in 1usize..12, seed in any::<u64>(), d in 0.0f64..=1.0) {
            for f in [
                Family::Incomparability { n, density: d },
                Family::Chordal { n },
                Family::Interval { n },
                Family::Gnp { n, p: d },
            ] {
                let a = to_edge_list(&f.build(seed).unwrap().graph);
                let b = to_edge_list(&f.build(seed).unwrap().graph);
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn incomparability_outputs_recognized(n in 1usize..11, seed in any::<u64>(), d in 0.0f64..=1.0) {
            let g = gen_random_incomparability(n, d, seed).unwrap();
            prop_assert!(is_incomparability(&g, &caps()).unwrap());
        }

        #[test]
        fn chordal_and_interval_outputs(n in 1usize..11, seed in any::<u64>()) {
            let g = gen_random_chordal(n, seed).unwrap();
            prop_assert!(is_chordal(&g).is_chordal());
            prop_assert!(g.is_connected());
            let g = gen_random_interval(n, seed).unwrap();
            prop_assert!(is_chordal(&g).is_chordal());
            prop_assert!(is_incomparability(&g, &caps()).unwrap());
        }
    }
}
