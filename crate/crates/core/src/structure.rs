//! Recognition and extremal substructures: induced stars, balanced induced
//! bicliques, chordality with clique trees, and transitive orientations.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{complement, Graph, VertexSet};
use crate::search::{max_clique_size, max_independent_within};

/// A largest induced star. `center` is `None` only for edgeless graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedStar {
    pub center: Option<usize>,
    pub leaves: VertexSet,
}

impl InducedStar {
    pub fn size(&self) -> usize {
        self.leaves.len()
    }
}

pub(crate) fn star_unchecked(g: &Graph) -> InducedStar {
    let comp = complement(g);
    let mut best = InducedStar {
        center: None,
        leaves: VertexSet::EMPTY,
    };
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        if nbrs.len() <= best.size() {
            continue;
        }
        if max_clique_size(comp.rows(), nbrs) > best.size() {
            best = InducedStar {
                center: Some(v),
                leaves: max_independent_within(g, nbrs),
            };
        }
    }
    best
}

/// Largest induced star: a centre with the most pairwise non-adjacent
/// neighbours (smallest centre id, then lexicographically first leaves).
pub fn largest_induced_star(g: &Graph, caps: &Caps) -> Result<InducedStar> {
    Error::check_cap("induced star search", g.n(), caps.exact_vertices)?;
    Ok(star_unchecked(g))
}

/// A balanced induced biclique `K_{p,p}` with sides `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biclique {
    pub p: usize,
    pub a: VertexSet,
    pub b: VertexSet,
}

struct BicliqueSearch<'a> {
    g: &'a Graph,
    comp: Graph,
    best: Biclique,
}

impl BicliqueSearch<'_> {
    /// `side` is independent, `common` is the common neighbourhood of `side`,
    /// `ext` the vertices that may still join `side`.
    fn run(&mut self, side: VertexSet, common: VertexSet, ext: VertexSet) {
        let best = self.best.p;
        if side.len() > best && common.len() > best {
            let alpha = max_clique_size(self.comp.rows(), common);
            let p = alpha.min(side.len());
            if p > best {
                let a: VertexSet = side.iter().take(p).collect();
                let b: VertexSet = max_independent_within(self.g, common).iter().take(p).collect();
                self.best = Biclique { p, a, b };
            }
        }
        for v in ext {
            let next_common = common.intersection(self.g.neighbors(v));
            let next_ext = ext.above(v).difference(self.g.neighbors(v));
            let reach = (side.len() + 1 + next_ext.len()).min(next_common.len());
            if reach <= self.best.p {
                continue;
            }
            self.run(side.with(v), next_common, next_ext);
        }
    }
}

pub(crate) fn biclique_unchecked(g: &Graph) -> Biclique {
    let mut search = BicliqueSearch {
        g,
        comp: complement(g),
        best: Biclique {
            p: 0,
            a: VertexSet::EMPTY,
            b: VertexSet::EMPTY,
        },
    };
    for v in 0..g.n() {
        let common = g.neighbors(v);
        let ext = g.vertices().above(v).difference(common);
        if (1 + ext.len()).min(common.len()) > search.best.p {
            search.run(VertexSet::singleton(v), common, ext);
        }
    }
    search.best
}

/// Largest `p` such that `G` has an induced `K_{p,p}`, exact.
pub fn largest_balanced_induced_biclique(g: &Graph, caps: &Caps) -> Result<Biclique> {
    Error::check_cap("biclique search", g.n(), caps.exact_vertices)?;
    Ok(biclique_unchecked(g))
}

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination order.
    Chordal { peo: Vec<usize> },
    /// A chordless cycle of length at least four, in cyclic order.
    Hole { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lexicographic breadth-first search; ties go to the smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .unwrap();
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).difference(visited) {
            labels[u].push(n - step);
        }
    }
    order
}

/// Whether every vertex's later neighbours in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() || order.iter().copied().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut later = g.vertices();
    order.iter().all(|&v| {
        later.remove(v);
        g.is_clique(g.neighbors(v).intersection(later))
    })
}

fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        for a in nv {
            for b in nv.above(a).difference(g.neighbors(a)) {
                let allowed = g.vertices().difference(nv.with(v)).with(a).with(b);
                let dist = g.distances(b, allowed);
                if dist[a].is_none() {
                    continue;
                }
                // walk a -> b along decreasing distance to b
                let mut cycle = vec![v, a];
                let mut cur = a;
                while cur != b {
                    let d = dist[cur].unwrap();
                    cur = g
                        .neighbors(cur)
                        .intersection(allowed)
                        .iter()
                        .find(|&u| dist[u] == Some(d - 1))
                        .unwrap();
                    cycle.push(cur);
                }
                return Some(cycle);
            }
        }
    }
    None
}

/// Chordality test: LexBFS order checked for perfect elimination, with a
/// chordless cycle as the certificate on failure.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_order(g, &peo) {
        Chordality::Chordal { peo }
    } else {
        let cycle = find_hole(g).expect("a graph without a perfect elimination order has a hole");
        Chordality::Hole { cycle }
    }
}

/// A tree on the maximal cliques of a connected chordal graph in which the
/// cliques containing any given vertex form a subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// Tree adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for &(i, j) in &self.tree_edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    fn has_induced_subtree_property(&self, n: usize) -> bool {
        let adj = self.adjacency();
        (0..n).all(|v| {
            let holders: Vec<usize> = (0..self.cliques.len())
                .filter(|&i| self.cliques[i].contains(v))
                .collect();
            let Some(&start) = holders.first() else {
                return true;
            };
            let mut seen = vec![false; self.cliques.len()];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut reached = 1;
            while let Some(i) = queue.pop_front() {
                for &j in &adj[i] {
                    if !seen[j] && self.cliques[j].contains(v) {
                        seen[j] = true;
                        reached += 1;
                        queue.push_back(j);
                    }
                }
            }
            reached == holders.len()
        })
    }
}

/// Maximal cliques of a chordal graph read off a perfect elimination order,
/// sorted lexicographically as vertex lists.
fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let mut later = g.vertices();
    let mut candidates = Vec::with_capacity(peo.len());
    for &v in peo {
        later.remove(v);
        candidates.push(g.neighbors(v).intersection(later).with(v));
    }
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c.is_subset(d)))
        .collect();
    cliques.sort_by_key(|c| c.to_vec());
    cliques.dedup();
    cliques
}

/// Clique tree of a connected chordal graph: maximum-weight spanning tree of the
/// clique intersection graph (Prim from clique 0; ties to the smallest
/// outside clique, then the smallest tree clique).
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    if g.n() == 0 {
        return Err(Error::validation("clique tree of the empty graph"));
    }
    let peo = match is_chordal(g) {
        Chordality::Chordal { peo } => peo,
        Chordality::Hole { cycle } => {
            return Err(Error::validation(format!(
                "graph is not chordal; chordless cycle {cycle:?}"
            )))
        }
    };
    if !g.is_connected() {
        return Err(Error::validation(
            "clique tree needs a connected graph; use clique_forest",
        ));
    }
    let cliques = maximal_cliques_from_peo(g, &peo);
    let k = cliques.len();
    let mut in_tree = vec![false; k];
    in_tree[0] = true;
    let mut tree_edges = Vec::with_capacity(k.saturating_sub(1));
    for _ in 1..k {
        let mut pick: Option<(usize, usize, usize)> = None;
        for j in (0..k).filter(|&j| !in_tree[j]) {
            for i in (0..k).filter(|&i| in_tree[i]) {
                let w = cliques[i].intersection(cliques[j]).len();
                if w > 0 && pick.map_or(true, |(pw, _, _)| w > pw) {
                    pick = Some((w, i, j));
                }
            }
        }
        let (_, i, j) = pick.expect("clique intersection graph of a connected chordal graph is connected");
        in_tree[j] = true;
        tree_edges.push((i, j));
    }
    let tree = CliqueTree {
        cliques,
        tree_edges,
    };
    if !tree.has_induced_subtree_property(g.n()) {
        return Err(Error::validation("clique tree lost the induced-subtree property"));
    }
    Ok(tree)
}

/// One clique tree per connected component, in host ids, ordered by smallest vertex.
pub fn clique_forest(g: &Graph) -> Result<Vec<CliqueTree>> {
    g.components(g.vertices())
        .into_iter()
        .map(|comp| {
            let (sub, map) = crate::graph::induced_subgraph(g, comp)?;
            let tree = clique_tree(&sub)?;
            Ok(CliqueTree {
                cliques: tree
                    .cliques
                    .iter()
                    .map(|c| c.iter().map(|v| map[v]).collect())
                    .collect(),
                tree_edges: tree.tree_edges,
            })
        })
        .collect()
}

/// An orientation of every edge of a host graph, as sorted arcs `(tail, head)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Exhaustive check: one direction per host edge, and `a→b`, `b→c` imply `a→c`.
    pub fn is_transitive_orientation_of(&self, g: &Graph) -> bool {
        let mut out = vec![VertexSet::EMPTY; g.n()];
        for &(a, b) in &self.arcs {
            if a >= g.n() || b >= g.n() || !g.has_edge(a, b) || out[b].contains(a) {
                return false;
            }
            out[a].insert(b);
        }
        if self.arcs.len() != g.m() {
            return false;
        }
        (0..g.n()).all(|a| {
            out[a].iter().all(|b| {
                out[b].iter().all(|c| out[a].contains(c))
            })
        })
    }
}

/// Result of the forcing-class orientation algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransitiveOrientation {
    Found { orientation: Orientation },
    /// Chain of arcs, each forcing the next, from an arc to its own reverse.
    Obstruction { chain: Vec<(usize, usize)> },
}

impl TransitiveOrientation {
    pub fn found(&self) -> bool {
        matches!(self, TransitiveOrientation::Found { .. })
    }
}

/// Transitive orientation by successive implication classes: seed the
/// smallest remaining edge, close under forcing within the remaining edges,
/// and stop with the forcing chain if a class contains an arc and its reverse.
pub fn transitive_orientation(g: &Graph, caps: &Caps) -> Result<TransitiveOrientation> {
    Error::check_cap("transitive orientation", g.n(), caps.exact_vertices)?;
    let mut remaining: Vec<VertexSet> = g.rows().to_vec();
    let mut arcs = Vec::with_capacity(g.m());
    while let Some(u) = (0..g.n()).find(|&u| !remaining[u].above(u).is_empty()) {
        let v = remaining[u].above(u).first().unwrap();
        let seed = (u, v);
        let mut parent: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut class = vec![VertexSet::EMPTY; g.n()];
        class[u].insert(v);
        parent.insert(seed, seed);
        let mut queue = VecDeque::from([seed]);
        while let Some((a, b)) = queue.pop_front() {
            let forced_heads = remaining[a].difference(remaining[b]).without(b);
            let forced_tails = remaining[b].difference(remaining[a]).without(a);
            let next = forced_heads
                .iter()
                .map(|h| (a, h))
                .chain(forced_tails.iter().map(|t| (t, b)));
            for arc in next {
                if parent.contains_key(&arc) {
                    continue;
                }
                parent.insert(arc, (a, b));
                class[arc.0].insert(arc.1);
                if class[arc.1].contains(arc.0) {
                    let trace = |mut x: (usize, usize)| {
                        let mut path = vec![x];
                        while x != seed {
                            x = parent[&x];
                            path.push(x);
                        }
                        path
                    };
                    let mut chain = trace((arc.1, arc.0));
                    let mut forward = trace(arc);
                    forward.pop();
                    forward.reverse();
                    chain.extend(forward);
                    return Ok(TransitiveOrientation::Obstruction { chain });
                }
                queue.push_back(arc);
            }
        }
        for a in 0..g.n() {
            for b in class[a] {
                arcs.push((a, b));
                remaining[a].remove(b);
                remaining[b].remove(a);
            }
        }
    }
    arcs.sort_unstable();
    let orientation = Orientation { arcs };
    if !orientation.is_transitive_orientation_of(g) {
        return Err(Error::validation(
            "forcing classes produced a non-transitive orientation",
        ));
    }
    Ok(TransitiveOrientation::Found { orientation })
}

/// Whether the complement of `g` is transitively orientable.
pub fn is_incomparability(g: &Graph, caps: &Caps) -> Result<bool> {
    Ok(transitive_orientation(&complement(g), caps)?.found())
}
