//! Exact branch-and-bound kernels: maximum clique (and through the
//! complement, maximum independent set) and minimum partition into cliques.

use crate::error::{Error, Result};
use crate::graph::{complement, Graph, VertexSet};

/// Greedy sequential colouring of `cand` used as the clique-size bound.
/// Returns vertices with their colour number, colour classes in ascending order.
fn colour_sort(adj: &[VertexSet], cand: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut rest = cand;
    let mut colour = 0;
    while !rest.is_empty() {
        colour += 1;
        let mut q = rest;
        while let Some(v) = q.first() {
            q = q.difference(adj[v]).without(v);
            rest.remove(v);
            out.push((v, colour));
        }
    }
    out
}

fn expand(adj: &[VertexSet], mut cand: VertexSet, size: usize, best: &mut usize, goal: usize) {
    let order = colour_sort(adj, cand);
    for &(v, c) in order.iter().rev() {
        if size + c <= *best || *best >= goal {
            return;
        }
        let next = cand.intersection(adj[v]);
        if next.is_empty() {
            if size + 1 > *best {
                *best = size + 1;
            }
        } else {
            expand(adj, next, size + 1, best, goal);
        }
        cand.remove(v);
    }
}

/// Size of a maximum clique inside `cand` for the graph given by `adj`.
pub(crate) fn max_clique_size(adj: &[VertexSet], cand: VertexSet) -> usize {
    let mut best = 0;
    expand(adj, cand, 0, &mut best, usize::MAX);
    best
}

/// Whether `cand` contains a clique on `k` vertices.
pub(crate) fn has_clique(adj: &[VertexSet], cand: VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    let mut best = 0;
    expand(adj, cand, 0, &mut best, k);
    best >= k
}

/// Lexicographically smallest maximum clique inside `cand` (as a sorted list).
pub(crate) fn lex_first_max_clique(adj: &[VertexSet], cand: VertexSet) -> VertexSet {
    let target = max_clique_size(adj, cand);
    let mut chosen = VertexSet::EMPTY;
    let mut pool = cand;
    let mut need = target;
    while need > 0 {
        let v = pool
            .iter()
            .find(|&v| has_clique(adj, pool.intersection(adj[v]).above(v), need - 1))
            .expect("a maximum clique extends the current prefix");
        chosen.insert(v);
        pool = pool.intersection(adj[v]).above(v);
        need -= 1;
    }
    chosen
}

/// Maximum independent set of `G[within]`, lexicographically smallest among the
/// optimal ones.
pub(crate) fn max_independent_within(g: &Graph, within: VertexSet) -> VertexSet {
    let comp = complement(g);
    lex_first_max_clique(comp.rows(), within)
}

/// Maximum-cardinality independent set, exact, lexicographically smallest.
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<VertexSet> {
    Error::check_cap("independent set search", g.n(), cap)?;
    Ok(max_independent_within(g, g.vertices()))
}

struct PartitionSearch<'a> {
    conflict: &'a [VertexSet],
    block_of: Vec<Option<usize>>,
    blocks: Vec<VertexSet>,
    best: Vec<VertexSet>,
    lower: usize,
}

impl PartitionSearch<'_> {
    fn pick(&self) -> Option<usize> {
        let uncoloured: VertexSet = (0..self.block_of.len())
            .filter(|&v| self.block_of[v].is_none())
            .collect();
        uncoloured.iter().max_by_key(|&v| {
            let sat = self
                .blocks
                .iter()
                .filter(|b| !b.is_disjoint(self.conflict[v]))
                .count();
            let deg = self.conflict[v].intersection(uncoloured).len();
            (sat, deg, std::cmp::Reverse(v))
        })
    }

    fn run(&mut self) {
        if self.best.len() == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = self.blocks.clone();
            return;
        };
        for b in 0..self.blocks.len() {
            if self.blocks[b].is_disjoint(self.conflict[v]) {
                self.blocks[b].insert(v);
                self.block_of[v] = Some(b);
                self.run();
                self.block_of[v] = None;
                self.blocks[b].remove(v);
                if self.best.len() == self.lower {
                    return;
                }
            }
        }
        if self.blocks.len() + 1 < self.best.len() {
            self.blocks.push(VertexSet::singleton(v));
            self.block_of[v] = Some(self.blocks.len() - 1);
            self.run();
            self.block_of[v] = None;
            self.blocks.pop();
        }
    }
}

/// Minimum partition of `V(G)` into cliques, i.e. an optimal colouring of the
/// complement. Blocks are returned sorted by smallest member.
pub(crate) fn min_clique_partition(g: &Graph) -> Vec<VertexSet> {
    if g.n() == 0 {
        return Vec::new();
    }
    let comp = complement(g);
    let conflict = comp.rows();
    let lower = max_clique_size(conflict, g.vertices());
    // Initial incumbent: everything in singletons.
    let singletons = g.vertices().iter().map(VertexSet::singleton).collect();
    let mut search = PartitionSearch {
        conflict,
        block_of: vec![None; g.n()],
        blocks: Vec::new(),
        best: singletons,
        lower,
    };
    search.run();
    let mut best = search.best;
    best.sort_by_key(|b| b.first());
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::*;

    fn brute_mis(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .map(|m| VertexSet::from_bits(m as u128))
            .filter(|&s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn mis_examples() {
        assert_eq!(max_independent_set(&complete(5), 64).unwrap().len(), 1);
        assert_eq!(max_independent_set(&cycle(5), 64).unwrap().len(), brute_mis(&cycle(5)));
        assert_eq!(max_independent_set(&cycle(5), 64).unwrap().len(), 2);
        assert_eq!(max_independent_set(&Graph::empty(7).unwrap(), 64).unwrap().len(), 7);
    }

    #[test]
    fn mis_is_lexicographically_first() {
        // C_5: optimal sets are {0,2},{0,3},{1,3},{1,4},{2,4}
        assert_eq!(max_independent_set(&cycle(5), 64).unwrap().to_vec(), vec![0, 2]);
        // P_4: {0,2},{0,3},{1,3}
        assert_eq!(max_independent_set(&path(4), 64).unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn mis_cap() {
        let err = max_independent_set(&cycle(9), 8).unwrap_err();
        assert!(matches!(err, Error::Capacity { cap: 8, size: 9, .. }));
    }

    #[test]
    fn clique_partition_sizes() {
        assert_eq!(min_clique_partition(&complete(6)).len(), 1);
        assert_eq!(min_clique_partition(&Graph::empty(4).unwrap()).len(), 4);
        assert_eq!(min_clique_partition(&cycle(5)).len(), 3);
        assert_eq!(min_clique_partition(&path(4)).len(), 2);
        for b in min_clique_partition(&cycle(7)) {
            assert!(cycle(7).is_clique(b));
        }
    }
}
