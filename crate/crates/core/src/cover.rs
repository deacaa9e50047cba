//! Clique covers: the clique cover number, the neighbourhood clique cover
//! number, edge widths of ordered covers, and clique cover width.

use serde::Serialize;

use crate::bandwidth::{self, bandwidth_below, layout_width};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{closed_neighborhood, Graph, VertexSet};
use crate::search::min_clique_partition;
use crate::structure::star_unchecked;

pub use crate::bandwidth::bandwidth_exact;

/// An ordered partition of the host's vertices into cliques. The order of the
/// blocks is the linear arrangement used for widths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CliqueCover {
    blocks: Vec<VertexSet>,
}

impl CliqueCover {
    /// Checks that `blocks` partition `V(g)` into cliques.
    pub fn new(g: &Graph, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::validation(format!("block {i} is empty")));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::validation(format!("block {i} overlaps an earlier block")));
            }
            if !g.is_clique(b) {
                return Err(Error::validation(format!("block {i} = {b:?} is not a clique")));
            }
            seen = seen.union(b);
        }
        if seen != g.vertices() {
            return Err(Error::validation(format!(
                "blocks cover {seen:?}, expected all {} vertices",
                g.n()
            )));
        }
        Ok(CliqueCover { blocks })
    }

    pub(crate) fn new_unchecked(blocks: Vec<VertexSet>) -> Self {
        CliqueCover { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex of a host with `n` vertices.
    pub fn block_index(&self, n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in *b {
                of[v] = i;
            }
        }
        of
    }

    /// Same blocks rearranged; `order[p]` is the block placed at position `p`.
    pub fn arranged(&self, order: &[usize]) -> CliqueCover {
        CliqueCover {
            blocks: order.iter().map(|&i| self.blocks[i]).collect(),
        }
    }

    /// Largest edge width under this ordering (0 when no edges cross blocks).
    pub fn max_width(&self, g: &Graph) -> usize {
        let of = self.block_index(g.n());
        g.edges().map(|(u, v)| of[u].abs_diff(of[v])).max().unwrap_or(0)
    }

    /// Blocks as sorted vertex lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

/// The graph obtained by contracting each block of a cover.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    /// Block index of each host vertex.
    pub block_of: Vec<usize>,
}

/// Minimum number of cliques partitioning `V(G)`, with a witness cover
/// (blocks sorted by smallest vertex).
pub fn clique_cover_number(g: &Graph, caps: &Caps) -> Result<(usize, CliqueCover)> {
    if g.n() == 0 {
        return Err(Error::validation("clique cover number of the empty graph"));
    }
    Error::check_cap("clique cover search", g.n(), caps.exact_vertices)?;
    let blocks = min_clique_partition(g);
    Ok((blocks.len(), CliqueCover::new_unchecked(blocks)))
}

/// `min_x β(H_x)` with the attaining vertex and a cover of its closed
/// neighbourhood in host ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodCover {
    pub value: usize,
    pub witness: usize,
    pub cover: CliqueCover,
}

pub fn neighborhood_clique_cover(g: &Graph, caps: &Caps) -> Result<NeighborhoodCover> {
    if g.n() == 0 {
        return Err(Error::validation("neighbourhood clique cover of the empty graph"));
    }
    let mut best: Option<NeighborhoodCover> = None;
    for x in 0..g.n() {
        if best.as_ref().is_some_and(|b| b.value == 1) {
            break;
        }
        let (h, map) = closed_neighborhood(g, x)?;
        let (value, cover) = clique_cover_number(&h, caps)?;
        let better = match &best {
            None => true,
            Some(b) => value < b.value,
        };
        if better {
            let blocks = cover
                .blocks()
                .iter()
                .map(|b| b.iter().map(|i| map[i]).collect())
                .collect();
            best = Some(NeighborhoodCover {
                value,
                witness: x,
                cover: CliqueCover::new_unchecked(blocks),
            });
        }
    }
    Ok(best.unwrap())
}

/// Width of edge `uv` under an ordered cover: the distance between the
/// positions of the blocks holding its ends (0 inside a block).
pub fn edge_width(g: &Graph, cover: &CliqueCover, (u, v): (usize, usize)) -> Result<usize> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::validation(format!("{u}-{v} is not an edge of the host")));
    }
    let of = cover.block_index(g.n());
    if of[u] == usize::MAX || of[v] == usize::MAX {
        return Err(Error::validation("cover does not cover the edge's endpoints"));
    }
    Ok(of[u].abs_diff(of[v]))
}

pub(crate) fn quotient_unchecked(g: &Graph, blocks: &[VertexSet]) -> Graph {
    let mut of = vec![usize::MAX; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for v in *b {
            of[v] = i;
        }
    }
    let mut rows = vec![VertexSet::EMPTY; blocks.len()];
    for (u, v) in g.edges() {
        let (a, b) = (of[u], of[v]);
        if a != b && a != usize::MAX && b != usize::MAX {
            rows[a].insert(b);
            rows[b].insert(a);
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// Contracts every block of a valid cover to a vertex.
pub fn quotient_graph(g: &Graph, cover: &CliqueCover) -> Result<QuotientGraph> {
    CliqueCover::new(g, cover.blocks.clone())?;
    Ok(QuotientGraph {
        graph: quotient_unchecked(g, &cover.blocks),
        block_of: cover.block_index(g.n()),
    })
}

/// Each component is a clique, i.e. CCW is 0.
fn is_cluster_graph(g: &Graph) -> bool {
    g.components(g.vertices()).into_iter().all(|c| g.is_clique(c))
}

/// Lower bound on CCW: an induced star with `s` leaves puts `s-1` leaf blocks
/// around the centre's block.
fn ccw_lower_bound(g: &Graph) -> usize {
    if is_cluster_graph(g) {
        return 0;
    }
    let s = star_unchecked(g).size();
    (s.saturating_sub(1)).div_ceil(2).max(1)
}

/// Breadth-first order visiting neighbours by ascending (degree, id) and
/// restarting at the smallest unvisited vertex.
fn bfs_order(g: &Graph, start: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = VertexSet::EMPTY;
    let mut next_root = Some(start);
    while let Some(root) = next_root {
        seen.insert(root);
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut fresh = g.neighbors(u).difference(seen).to_vec();
            fresh.sort_by_key(|&v| (g.degree(v), v));
            for v in fresh {
                seen.insert(v);
                order.push(v);
            }
        }
        next_root = g.vertices().difference(seen).first();
    }
    order
}

/// Heuristic clique cover width: greedy clique merging along breadth-first
/// orders from every start vertex, then a breadth-first rearrangement of the
/// quotient. Always an upper bound on the exact value.
pub fn ccw_upper(g: &Graph) -> (usize, CliqueCover) {
    if g.n() == 0 {
        return (0, CliqueCover::new_unchecked(Vec::new()));
    }
    let mut best: Option<(usize, CliqueCover)> = None;
    let mut consider = |cover: CliqueCover| {
        let w = cover.max_width(g);
        if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
            best = Some((w, cover));
        }
    };
    for start in 0..g.n() {
        let order = bfs_order(g, start);
        for merge in [true, false] {
            let mut blocks: Vec<VertexSet> = Vec::new();
            for &v in &order {
                match blocks.last_mut() {
                    Some(b) if merge && b.is_subset(g.neighbors(v)) => b.insert(v),
                    _ => blocks.push(VertexSet::singleton(v)),
                }
            }
            let cover = CliqueCover::new_unchecked(blocks);
            let q = quotient_unchecked(g, cover.blocks());
            for qs in 0..q.n() {
                consider(cover.arranged(&bfs_order(&q, qs)));
            }
            consider(cover);
        }
    }
    best.unwrap()
}

struct CcwSearch<'a> {
    g: &'a Graph,
    floor: usize,
    blocks: Vec<VertexSet>,
    block_adj: Vec<VertexSet>,
    block_of: Vec<usize>,
    /// Only covers of width strictly below this are of interest.
    limit: usize,
    best: Option<CliqueCover>,
    done: bool,
}

impl CcwSearch<'_> {
    fn partial_degree_ok(&self) -> bool {
        let d = self.block_adj.iter().map(|r| r.len()).max().unwrap_or(0);
        d.div_ceil(2) < self.limit
    }

    fn leaf(&mut self) {
        let q = Graph::from_rows_unchecked(self.block_adj.clone());
        if bandwidth::lower_bound(&q) >= self.limit {
            return;
        }
        if let Some((w, order)) = bandwidth_below(&q, self.limit) {
            self.limit = w;
            self.best = Some(CliqueCover::new_unchecked(self.blocks.clone()).arranged(&order));
            if w <= self.floor {
                self.done = true;
            }
        }
    }

    fn place(&mut self, v: usize, b: usize) -> Vec<VertexSet> {
        let saved = self.block_adj.clone();
        for u in self.g.neighbors(v).iter().take_while(|&u| u < v) {
            let c = self.block_of[u];
            if c != b {
                self.block_adj[b].insert(c);
                self.block_adj[c].insert(b);
            }
        }
        self.block_of[v] = b;
        saved
    }

    fn run(&mut self, v: usize) {
        if self.done {
            return;
        }
        if v == self.g.n() {
            self.leaf();
            return;
        }
        let nv = self.g.neighbors(v);
        for b in 0..self.blocks.len() {
            if !self.blocks[b].is_subset(nv) {
                continue;
            }
            self.blocks[b].insert(v);
            let saved = self.place(v, b);
            if self.partial_degree_ok() {
                self.run(v + 1);
            }
            self.block_adj = saved;
            self.blocks[b].remove(v);
            if self.done {
                return;
            }
        }
        let b = self.blocks.len();
        self.blocks.push(VertexSet::singleton(v));
        self.block_adj.push(VertexSet::EMPTY);
        let saved = self.place(v, b);
        if self.partial_degree_ok() {
            self.run(v + 1);
        }
        self.block_adj = saved;
        self.block_adj.pop();
        self.blocks.pop();
    }
}

/// Exact clique cover width with an optimal ordered cover.
///
/// Clique partitions are enumerated as restricted growth strings (vertex `v`
/// joins an earlier block or opens the next one), so each partition appears
/// once and in lexicographic order. The heuristic value seeds the bound; among
/// optimal partitions the lexicographically first is returned, arranged by the
/// first optimal layout of its quotient.
pub fn ccw_exact(g: &Graph, caps: &Caps) -> Result<(usize, CliqueCover)> {
    Error::check_cap("clique cover width search", g.n(), caps.ccw_vertices)?;
    if g.n() == 0 {
        return Ok((0, CliqueCover::new_unchecked(Vec::new())));
    }
    let (upper, _) = ccw_upper(g);
    let mut search = CcwSearch {
        g,
        floor: ccw_lower_bound(g),
        blocks: Vec::new(),
        block_adj: Vec::new(),
        block_of: vec![usize::MAX; g.n()],
        limit: upper + 1,
        best: None,
        done: false,
    };
    search.run(0);
    let cover = search.best.expect("the heuristic cover is in the search space");
    debug_assert_eq!(cover.max_width(g), search.limit);
    Ok((search.limit, cover))
}

/// Width of an ordered cover's quotient layout; equal to the cover's max edge width.
pub fn quotient_layout_width(g: &Graph, cover: &CliqueCover) -> usize {
    let q = quotient_unchecked(g, cover.blocks());
    let order: Vec<usize> = (0..q.n()).collect();
    layout_width(&q, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::*;
    use crate::graph::{degeneracy, induced_subgraph};
    use proptest::prelude::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn clique_cover_number_examples() {
        assert_eq!(clique_cover_number(&complete(5), &caps()).unwrap().0, 1);
        assert_eq!(clique_cover_number(&Graph::empty(4).unwrap(), &caps()).unwrap().0, 4);
        assert_eq!(clique_cover_number(&cycle(5), &caps()).unwrap().0, 3);
        assert!(clique_cover_number(&Graph::empty(0).unwrap(), &caps()).is_err());
    }

    #[test]
    fn neighborhood_cover_examples() {
        let r = neighborhood_clique_cover(&complete(4), &caps()).unwrap();
        assert_eq!((r.value, r.witness), (1, 0));
        assert_eq!(neighborhood_clique_cover(&biclique(3, 3), &caps()).unwrap().value, 3);
        let r = neighborhood_clique_cover(&cycle(5), &caps()).unwrap();
        assert_eq!((r.value, r.witness), (2, 0));
        let blocks: VertexSet = r.cover.blocks().iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        assert_eq!(blocks, set(&[0, 1, 4]));
    }

    #[test]
    fn edge_width_examples() {
        let p3 = path(3);
        let single = CliqueCover::new(&p3, vec![set(&[0, 1]), set(&[2])]).unwrap();
        assert_eq!(edge_width(&p3, &single, (0, 1)).unwrap(), 0);
        let singletons = CliqueCover::new(&p3, (0..3).map(VertexSet::singleton).collect()).unwrap();
        assert_eq!(edge_width(&p3, &singletons, (1, 2)).unwrap(), 1);
        let k14 = star(4);
        let cover = CliqueCover::new(
            &k14,
            vec![set(&[0, 1]), set(&[2]), set(&[3]), set(&[4])],
        )
        .unwrap();
        assert_eq!(edge_width(&k14, &cover, (0, 4)).unwrap(), 3);
        assert!(edge_width(&k14, &cover, (1, 2)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let k5 = complete(5);
        let q = quotient_graph(&k5, &CliqueCover::new(&k5, vec![k5.vertices()]).unwrap()).unwrap();
        assert_eq!((q.graph.n(), q.graph.m()), (1, 0));
        let c6 = cycle(6);
        let cover =
            CliqueCover::new(&c6, vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]).unwrap();
        assert_eq!(quotient_graph(&c6, &cover).unwrap().graph, complete(3));
        let p4 = path(4);
        let cover = CliqueCover::new(&p4, (0..4).map(VertexSet::singleton).collect()).unwrap();
        assert_eq!(quotient_graph(&p4, &cover).unwrap().graph, p4);
        assert!(CliqueCover::new(&p4, vec![set(&[0, 2]), set(&[1, 3])]).is_err());
        assert!(CliqueCover::new(&p4, vec![set(&[0, 1])]).is_err());
    }

    #[test]
    fn ccw_examples() {
        assert_eq!(ccw_exact(&complete(6), &caps()).unwrap().0, 0);
        assert_eq!(ccw_exact(&cycle(5), &caps()).unwrap().0, 2);
        assert_eq!(ccw_exact(&star(4), &caps()).unwrap().0, 2);
        assert_eq!(ccw_exact(&Graph::empty(0).unwrap(), &caps()).unwrap().0, 0);
        assert_eq!(ccw_exact(&Graph::empty(3).unwrap(), &caps()).unwrap().0, 0);
        assert!(matches!(
            ccw_exact(&path(11), &caps()),
            Err(Error::Capacity { cap: 10, .. })
        ));
    }

    #[test]
    fn ccw_cover_is_ordered_by_arrangement() {
        let g = cycle(5);
        let (w, cover) = ccw_exact(&g, &caps()).unwrap();
        CliqueCover::new(&g, cover.blocks().to_vec()).unwrap();
        assert_eq!(cover.max_width(&g), w);
        assert_eq!(quotient_layout_width(&g, &cover), w);
    }

    #[test]
    fn ccw_upper_examples() {
        assert_eq!(ccw_upper(&complete(7)).0, 0);
        assert_eq!(ccw_upper(&path(50)).0, 1);
        let (w, _) = ccw_upper(&cycle(6));
        assert!((2..=3).contains(&w));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let code = bits
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
                from_code(n, code)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn every_cover_has_at_least_beta_blocks(g in arb_graph(8)) {
            let (beta, cover) = clique_cover_number(&g, &caps()).unwrap();
            CliqueCover::new(&g, cover.blocks().to_vec()).unwrap();
            let (_, ccw_cover) = ccw_exact(&g, &caps()).unwrap();
            prop_assert!(ccw_cover.len() >= beta);
            prop_assert!(ccw_upper(&g).1.len() >= beta);
        }

        #[test]
        fn nbr_cover_below_degeneracy(g in arb_graph(8)) {
            let r = neighborhood_clique_cover(&g, &caps()).unwrap();
            prop_assert!(r.value <= degeneracy(&g).0.max(1));
            for x in 0..g.n() {
                let (h, _) = closed_neighborhood(&g, x).unwrap();
                let (b, _) = clique_cover_number(&h, &caps()).unwrap();
                prop_assert!(b <= g.degree(x).max(1));
                prop_assert!(r.value <= b);
            }
        }

        #[test]
        fn widths_match_quotient_layout(g in arb_graph(8)) {
            let (w, cover) = ccw_upper(&g);
            prop_assert_eq!(cover.max_width(&g), w);
            prop_assert_eq!(quotient_layout_width(&g, &cover), w);
        }

        #[test]
        fn ccw_monotone_under_vertex_deletion(g in arb_graph(8), v in 0usize..8) {
            prop_assume!(v < g.n());
            let (w, _) = ccw_exact(&g, &caps()).unwrap();
            let (h, _) = induced_subgraph(&g, g.vertices().without(v)).unwrap();
            prop_assert!(ccw_exact(&h, &caps()).unwrap().0 <= w);
            prop_assert!(ccw_upper(&g).0 >= w);
        }
    }
}
