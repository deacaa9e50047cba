//! Simple undirected graphs on at most 128 vertices, stored as one bitset row
//! per vertex, plus the primitive operations everything else builds on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids in `0..128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u128::MAX << (v + 1)))
        }
    }

    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph vertices",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph vertices",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let all = VertexSet::full(n);
        for (u, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(Error::validation(format!("row {u} has out-of-range ids")));
            }
            if row.contains(u) {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(Error::validation(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(Graph {
            adj: rows,
            labels: None,
        })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            adj: rows,
            labels: None,
        }
    }

    /// Attaches per-vertex provenance labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::validation(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.above(u).iter().map(move |v| (u, v)))
    }

    /// True if `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// True if `set` induces an edgeless subgraph.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// BFS distances from `source` inside `within`; `None` marks unreachable.
    pub fn distances(&self, source: usize, within: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.adj[u].intersection(within) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Eccentricity of `c` inside `G[set]`, or `None` if some member is unreachable.
    pub fn eccentricity_within(&self, c: usize, set: VertexSet) -> Option<usize> {
        let mut seen = VertexSet::singleton(c);
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(set).difference(seen);
            if frontier.is_empty() {
                break;
            }
            seen = seen.union(frontier);
            depth += 1;
        }
        (seen == set).then_some(depth)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Input formats accepted by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// One `u v` pair per line, 0-based, `#` comments. An optional
    /// `# vertices N` line fixes the vertex count so isolated vertices survive.
    EdgeList,
    /// `p edge N M` header followed by 1-based `e u v` lines; `c` comments.
    Dimacs,
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex id, found {tok:?}"),
    })
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("vertices") {
                let n = toks.next().ok_or_else(|| Error::Parse {
                    line,
                    message: "vertices directive without a count".into(),
                })?;
                declared = Some(parse_id(n, line)?);
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex ids, found {} tokens", toks.len()),
            });
        }
        let (u, v) = (parse_id(toks[0], line)?, parse_id(toks[1], line)?);
        if u == v {
            return Err(Error::validation(format!(
                "self-loop at vertex {u} (line {line})"
            )));
        }
        edges.push((u, v));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < implied => {
            return Err(Error::validation(format!(
                "declared {n} vertices but an edge uses id {}",
                implied - 1
            )))
        }
        Some(n) => n,
        None => implied,
    };
    Graph::from_edges(n, &edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || n.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "expected a single `p edge N M` header".into(),
                    });
                }
                n = Some(parse_id(toks[2], line)?);
            }
            Some("e") => {
                let n = n.ok_or_else(|| Error::Parse {
                    line,
                    message: "edge before `p` header".into(),
                })?;
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `e u v`".into(),
                    });
                }
                let (u, v) = (parse_id(toks[1], line)?, parse_id(toks[2], line)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex ids must lie in 1..={n}"),
                    });
                }
                if u == v {
                    return Err(Error::validation(format!(
                        "self-loop at vertex {u} (line {line})"
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown line type {other:?}"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    Graph::from_edges(n, &edges)
}

/// Parses a graph in the given format.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

/// Canonical edge-list serialization: a `# vertices N` line, then `u v` with
/// `u < v` in ascending order. Byte-stable for equal graphs.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertices();
    let rows = (0..g.n())
        .map(|v| all.difference(g.adj[v]).without(v))
        .collect();
    Graph::from_rows_unchecked(rows)
}

/// Induced subgraph on `set`, relabelled to `0..|set|` in ascending order of
/// the original ids. Returns the map from new ids to original ids.
pub fn induced_subgraph(g: &Graph, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
    if !set.is_subset(g.vertices()) {
        return Err(Error::validation(format!(
            "vertex set {set:?} is not contained in 0..{}",
            g.n()
        )));
    }
    let map = set.to_vec();
    let mut index = [usize::MAX; MAX_VERTICES];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    let rows = map
        .iter()
        .map(|&v| g.adj[v].intersection(set).iter().map(|u| index[u]).collect())
        .collect();
    let mut sub = Graph::from_rows_unchecked(rows);
    if let Some(labels) = &g.labels {
        sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok((sub, map))
}

/// `H_x`: the subgraph induced by `x` and its neighbours.
pub fn closed_neighborhood(g: &Graph, x: usize) -> Result<(Graph, Vec<usize>)> {
    if x >= g.n() {
        return Err(Error::validation(format!("vertex {x} out of range")));
    }
    induced_subgraph(g, g.adj[x].with(x))
}

/// Degeneracy with a min-degree elimination order certifying it.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    let mut value = 0;
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (g.adj[v].intersection(alive).len(), v))
            .unwrap();
        value = value.max(g.adj[v].intersection(alive).len());
        order.push(v);
        alive.remove(v);
    }
    (value, order)
}

/// Center of a vertex set: the member of least eccentricity inside `G[set]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusCenter {
    pub radius: usize,
    pub center: usize,
}

/// Radius of `G[set]` with its smallest-id center; `None` when `G[set]` is
/// disconnected (infinite radius).
pub fn set_radius_center(g: &Graph, set: VertexSet) -> Result<Option<RadiusCenter>> {
    if set.is_empty() {
        return Err(Error::validation("radius of an empty vertex set"));
    }
    if !set.is_subset(g.vertices()) {
        return Err(Error::validation(format!("vertex set {set:?} out of range")));
    }
    let mut best: Option<RadiusCenter> = None;
    for c in set {
        match g.eccentricity_within(c, set) {
            None => return Ok(None),
            Some(e) if best.map_or(true, |b| e < b.radius) => {
                best = Some(RadiusCenter {
                    radius: e,
                    center: c,
                })
            }
            Some(_) => {}
        }
    }
    Ok(best)
}
