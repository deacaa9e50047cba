//! Separators measured in cliques of a cover: the ordering separator, the
//! clique-tree centroid separator for chordal graphs, and the exact minimum
//! balanced separator search.

use std::collections::VecDeque;

use serde::Serialize;

use crate::caps::Caps;
use crate::cover::{quotient_unchecked, CliqueCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;
use crate::structure::clique_tree;

/// Widths recorded alongside a separation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeparationWidths {
    /// Largest edge width of the cover ordering, when the ordering was used.
    pub w: Option<usize>,
    /// Clique cover width of the host, when known.
    pub ccw: Option<usize>,
}

/// Block indices `A`, `S`, `B` of a cover, with no host edge between the
/// vertices of `A` and those of `B`, and `3|A|, 3|B| <= 2|C|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub cover: CliqueCover,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub widths: SeparationWidths,
}

/// Vertex counts of the three sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SideVertices {
    pub a: usize,
    pub s: usize,
    pub b: usize,
}

impl Separation {
    pub fn side_vertices(&self) -> SideVertices {
        let count = |idx: &[usize]| idx.iter().map(|&i| self.cover.blocks()[i].len()).sum();
        SideVertices {
            a: count(&self.a),
            s: count(&self.s),
            b: count(&self.b),
        }
    }
}

/// Checks a separation from scratch against the host adjacency. Shares no
/// code with the constructors.
pub fn verify_separation(g: &Graph, sep: &Separation) -> Result<()> {
    let blocks = sep.cover.blocks();
    let c = blocks.len();
    let mut owner = vec![None; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        let members = b.to_vec();
        if members.is_empty() {
            return Err(Error::validation(format!("block {i} is empty")));
        }
        for (k, &u) in members.iter().enumerate() {
            if u >= g.n() {
                return Err(Error::validation(format!("block {i} names vertex {u}")));
            }
            if owner[u].is_some() {
                return Err(Error::validation(format!("vertex {u} covered twice")));
            }
            owner[u] = Some(i);
            for &v in &members[k + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::validation(format!("block {i} misses edge {u}-{v}")));
                }
            }
        }
    }
    if let Some(u) = owner.iter().position(Option::is_none) {
        return Err(Error::validation(format!("vertex {u} is uncovered")));
    }
    let mut side = vec![None; c];
    for (tag, idx) in [('A', &sep.a), ('S', &sep.s), ('B', &sep.b)] {
        for &i in idx.iter() {
            if i >= c {
                return Err(Error::validation(format!("{tag} names block {i} of {c}")));
            }
            if side[i].is_some() {
                return Err(Error::validation(format!("block {i} lies on two sides")));
            }
            side[i] = Some(tag);
        }
    }
    if let Some(i) = side.iter().position(Option::is_none) {
        return Err(Error::validation(format!("block {i} is on no side")));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let su = side[owner[u].unwrap()].unwrap();
            let sv = side[owner[v].unwrap()].unwrap();
            if (su, sv) == ('A', 'B') || (su, sv) == ('B', 'A') {
                return Err(Error::validation(format!("edge {u}-{v} joins A and B")));
            }
        }
    }
    for (tag, len) in [('A', sep.a.len()), ('B', sep.b.len())] {
        if 3 * len > 2 * c {
            return Err(Error::validation(format!(
                "|{tag}| = {len} exceeds 2/3 of {c} blocks"
            )));
        }
    }
    Ok(())
}

fn recheck_cover(g: &Graph, cover: &CliqueCover) -> Result<()> {
    CliqueCover::new(g, cover.blocks().to_vec()).map(|_| ())
}

/// Removes a window of `w` consecutive blocks, where `w` is the largest edge
/// width of the ordering; the window start minimizes the larger side.
pub fn ccw_separator(g: &Graph, cover: &CliqueCover) -> Result<Separation> {
    recheck_cover(g, cover)?;
    let c = cover.len();
    if c < 3 {
        return Err(Error::Degenerate(
            "separator meaningless below 3 cliques".into(),
        ));
    }
    let w = cover.max_width(g);
    let m = (0..=c.saturating_sub(w))
        .min_by_key(|&m| m.max(c.saturating_sub(m + w)))
        .unwrap();
    let end = (m + w).min(c);
    Ok(Separation {
        cover: cover.clone(),
        a: (0..m).collect(),
        s: (m..end).collect(),
        b: (end..c).collect(),
        widths: SeparationWidths {
            w: Some(w),
            ccw: None,
        },
    })
}

/// One maximal clique whose removal splits the clique tree into pieces of at
/// most half the cliques; the pieces are grouped greedily into two sides.
pub fn chordal_separator(g: &Graph) -> Result<Separation> {
    let tree = clique_tree(g)?;
    let k = tree.cliques.len();
    if k < 2 {
        return Err(Error::Degenerate(
            "a single maximal clique has no separator".into(),
        ));
    }
    let adj = tree.adjacency();
    let pieces_without = |x: usize| -> Vec<Vec<usize>> {
        let mut seen = vec![false; k];
        seen[x] = true;
        let mut pieces = Vec::new();
        for &start in &adj[x] {
            let mut piece = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < piece.len() {
                for &y in &adj[piece[i]] {
                    if !seen[y] {
                        seen[y] = true;
                        piece.push(y);
                    }
                }
                i += 1;
            }
            pieces.push(piece);
        }
        pieces
    };
    let centroid = (0..k)
        .min_by_key(|&x| pieces_without(x).iter().map(Vec::len).max().unwrap_or(0))
        .unwrap();

    // Reported cover: cliques in tree-BFS order from the centroid, each minus
    // vertices claimed by earlier cliques.
    let mut bfs = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    let mut queue = VecDeque::from([centroid]);
    seen[centroid] = true;
    while let Some(x) = queue.pop_front() {
        bfs.push(x);
        let mut next = adj[x].clone();
        next.sort_unstable();
        for y in next {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    let mut position = vec![0; k];
    let mut blocks = Vec::with_capacity(k);
    let mut claimed = VertexSet::EMPTY;
    for (p, &x) in bfs.iter().enumerate() {
        position[x] = p;
        let block = tree.cliques[x].difference(claimed);
        debug_assert!(!block.is_empty());
        claimed = claimed.union(block);
        blocks.push(block);
    }

    let mut pieces: Vec<Vec<usize>> = pieces_without(centroid)
        .into_iter()
        .map(|p| {
            let mut idx: Vec<usize> = p.into_iter().map(|x| position[x]).collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    pieces.sort_by(|p, q| q.len().cmp(&p.len()).then(p[0].cmp(&q[0])));
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for piece in pieces {
        if a.len() <= b.len() {
            a.extend(piece);
        } else {
            b.extend(piece);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    Ok(Separation {
        cover: CliqueCover::new_unchecked(blocks),
        a,
        s: vec![0],
        b,
        widths: SeparationWidths::default(),
    })
}

/// Outcome of the exact search: `None` when no proper `S` leaves two
/// nonempty balanced sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinSeparator {
    pub size: Option<usize>,
    pub best: Option<Separation>,
}

/// Splits the components (block counts `sizes`) into two nonempty groups each
/// of at most `limit` blocks, choosing the most even split. Returns the
/// membership flag of each component on side A.
fn pack(sizes: &[usize], limit: usize) -> Option<Vec<bool>> {
    if sizes.len() < 2 {
        return None;
    }
    let total: usize = sizes.iter().sum();
    // reach[s] = Some(i) when sum s is first reached by taking component i.
    let mut reach: Vec<Option<usize>> = vec![None; total + 1];
    let mut ok = vec![false; total + 1];
    ok[0] = true;
    for (i, &sz) in sizes.iter().enumerate() {
        for s in (sz..=total).rev() {
            if !ok[s] && ok[s - sz] {
                ok[s] = true;
                reach[s] = Some(i);
            }
        }
    }
    let target = (1..total)
        .filter(|&s| ok[s] && s <= limit && total - s <= limit)
        .min_by_key(|&s| (s.max(total - s), s))?;
    let mut take = vec![false; sizes.len()];
    let mut s = target;
    while s > 0 {
        let i = reach[s].unwrap();
        take[i] = true;
        s -= sizes[i];
    }
    Some(take)
}

/// Next `k`-combination of `..end` in lexicographic order.
fn advance(combo: &mut [usize], end: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < end - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact minimum number of cover blocks whose removal leaves two nonempty
/// sides with no edges between them and at most `2|C|/3` blocks each. Among
/// minimum separators the lexicographically smallest `S` is returned. Covers
/// of fewer than 3 blocks are reported infeasible.
pub fn min_balanced_clique_separator(
    g: &Graph,
    cover: &CliqueCover,
    caps: &Caps,
) -> Result<MinSeparator> {
    recheck_cover(g, cover)?;
    let c = cover.len();
    Error::check_cap("balanced separator search", c, caps.separator_blocks)?;
    if c < 3 {
        // Same threshold as the ordering separator.
        return Ok(MinSeparator {
            size: None,
            best: None,
        });
    }
    let quotient = quotient_unchecked(g, cover.blocks());
    let limit = 2 * c / 3;
    let all = VertexSet::full(c);
    let attempt = |s: VertexSet| -> Option<Separation> {
        let comps = quotient.components(all.difference(s));
        let sizes: Vec<usize> = comps.iter().map(|x| x.len()).collect();
        let take = pack(&sizes, limit)?;
        let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for (comp, t) in comps.iter().zip(take) {
            if t {
                a = a.union(*comp);
            } else {
                b = b.union(*comp);
            }
        }
        if a.first() > b.first() {
            std::mem::swap(&mut a, &mut b);
        }
        Some(Separation {
            cover: cover.clone(),
            a: a.to_vec(),
            s: s.to_vec(),
            b: b.to_vec(),
            widths: SeparationWidths::default(),
        })
    };
    for k in 0..c.saturating_sub(1) {
        let found = if k == 0 {
            attempt(VertexSet::EMPTY)
        } else {
            let firsts: Vec<usize> = (0..=c - k).collect();
            par::find_map_first(&firsts, caps.parallel, |&f| {
                let mut rest: Vec<usize> = (f + 1..f + k).collect();
                loop {
                    let s: VertexSet = rest.iter().copied().chain([f]).collect();
                    if let Some(sep) = attempt(s) {
                        return Some(sep);
                    }
                    if !advance(&mut rest, c) {
                        return None;
                    }
                }
            })
        };
        if let Some(sep) = found {
            return Ok(MinSeparator {
                size: Some(k),
                best: Some(sep),
            });
        }
    }
    Ok(MinSeparator {
        size: None,
        best: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{ccw_exact, clique_cover_number};
    use crate::graph::testgraphs::*;
    use proptest::prelude::*;

    fn singletons(n: usize) -> Vec<VertexSet> {
        (0..n).map(VertexSet::singleton).collect()
    }

    fn blocks(lists: &[&[usize]]) -> Vec<VertexSet> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    /// Every (A, S, B) labelling of the blocks, smallest |S| first.
    fn brute_min(g: &Graph, cover: &CliqueCover) -> Option<usize> {
        let c = cover.len();
        if c < 3 {
            return None;
        }
        let of = cover.block_index(g.n());
        let mut best = None;
        let mut labels = vec![0u8; c];
        loop {
            let count = |x| labels.iter().filter(|&&l| l == x).count();
            let (a, s, b) = (count(0), count(1), count(2));
            let crossing = g
                .edges()
                .any(|(u, v)| labels[of[u]] != 1 && labels[of[v]] != 1 && labels[of[u]] != labels[of[v]]);
            if a > 0 && b > 0 && 3 * a <= 2 * c && 3 * b <= 2 * c && !crossing {
                best = Some(best.map_or(s, |x: usize| x.min(s)));
            }
            let mut i = 0;
            while i < c && labels[i] == 2 {
                labels[i] = 0;
                i += 1;
            }
            if i == c {
                return best;
            }
            labels[i] += 1;
        }
    }

    #[test]
    fn path_ordering_separator() {
        let g = path(9);
        let cover = CliqueCover::new(&g, singletons(9)).unwrap();
        let sep = ccw_separator(&g, &cover).unwrap();
        assert_eq!((sep.a.len(), sep.s.len(), sep.b.len()), (4, 1, 4));
        verify_separation(&g, &sep).unwrap();
    }

    #[test]
    fn ordering_separator_on_hexagon() {
        let g = cycle(6);
        for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [2, 1, 0]] {
            let base = CliqueCover::new(&g, blocks(&[&[0, 1], &[2, 3], &[4, 5]])).unwrap();
            let cover = base.arranged(&order);
            let sep = ccw_separator(&g, &cover).unwrap();
            assert_eq!(sep.s.len(), 2);
            assert!(sep.a.len() <= 1 && sep.b.len() <= 1);
            verify_separation(&g, &sep).unwrap();
        }
    }

    #[test]
    fn ordering_separator_degenerate() {
        let g = complete(5);
        let cover = CliqueCover::new(&g, vec![g.vertices()]).unwrap();
        assert!(matches!(ccw_separator(&g, &cover), Err(Error::Degenerate(_))));
    }

    #[test]
    fn chordal_path() {
        let g = path(7);
        let sep = chordal_separator(&g).unwrap();
        assert_eq!(sep.s, vec![0]);
        let mut sides = [sep.a.len(), sep.b.len()];
        sides.sort();
        assert_eq!(sides, [2, 3]);
        verify_separation(&g, &sep).unwrap();
    }

    #[test]
    fn chordal_star() {
        let g = star(6);
        let sep = chordal_separator(&g).unwrap();
        assert_eq!(sep.s.len(), 1);
        assert_eq!(sep.cover.len(), 6);
        let mut sides = [sep.a.len(), sep.b.len()];
        sides.sort();
        assert_eq!(sides, [2, 3]);
        verify_separation(&g, &sep).unwrap();
    }

    #[test]
    fn chordal_errors() {
        assert!(matches!(chordal_separator(&complete(4)), Err(Error::Degenerate(_))));
        assert!(matches!(chordal_separator(&cycle(5)), Err(Error::Validation(_))));
    }

    #[test]
    fn minimum_examples() {
        let caps = Caps::default();
        let g = path(9);
        let cover = CliqueCover::new(&g, singletons(9)).unwrap();
        let r = min_balanced_clique_separator(&g, &cover, &caps).unwrap();
        assert_eq!(r.size, Some(1));
        verify_separation(&g, r.best.as_ref().unwrap()).unwrap();

        let k33 = biclique(3, 3);
        let matching = CliqueCover::new(&k33, blocks(&[&[0, 3], &[1, 4], &[2, 5]])).unwrap();
        let r = min_balanced_clique_separator(&k33, &matching, &caps).unwrap();
        assert_eq!((r.size, r.best), (None, None));

        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let pair = CliqueCover::new(&two, blocks(&[&[0, 1, 2], &[3, 4, 5]])).unwrap();
        assert_eq!(min_balanced_clique_separator(&two, &pair, &caps).unwrap().size, None);
        let split = CliqueCover::new(&two, blocks(&[&[0, 1], &[2], &[3, 4, 5]])).unwrap();
        let r = min_balanced_clique_separator(&two, &split, &caps).unwrap();
        assert_eq!(r.size, Some(0));
        let sep = r.best.unwrap();
        assert_eq!((sep.a.clone(), sep.b.clone()), (vec![0, 1], vec![2]));
        verify_separation(&two, &sep).unwrap();
    }

    #[test]
    fn minimum_cap() {
        let g = path(19);
        let cover = CliqueCover::new(&g, singletons(19)).unwrap();
        assert!(matches!(
            min_balanced_clique_separator(&g, &cover, &Caps::default()),
            Err(Error::Capacity { cap: 18, .. })
        ));
    }

    #[test]
    fn verifier_rejects_bad_separations() {
        let g = path(4);
        let cover = CliqueCover::new(&g, singletons(4)).unwrap();
        let bad = Separation {
            cover: cover.clone(),
            a: vec![0, 1],
            s: vec![],
            b: vec![2, 3],
            widths: SeparationWidths::default(),
        };
        assert!(verify_separation(&g, &bad).is_err());
        let unbalanced = Separation {
            cover,
            a: vec![0, 1, 2],
            s: vec![3],
            b: vec![],
            widths: SeparationWidths::default(),
        };
        assert!(verify_separation(&g, &unbalanced).is_err());
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = cycle(12);
        let cover = CliqueCover::new(&g, singletons(12)).unwrap();
        let p = min_balanced_clique_separator(&g, &cover, &Caps::default()).unwrap();
        let s = min_balanced_clique_separator(&g, &cover, &Caps::default().sequential()).unwrap();
        assert_eq!(p, s);
        assert_eq!(p.size, Some(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn minimum_matches_brute_force(n in 3usize..8, code in any::<u64>()) {
            let g = from_code(n, code);
            let (_, cover) = clique_cover_number(&g, &Caps::default()).unwrap();
            let r = min_balanced_clique_separator(&g, &cover, &Caps::default()).unwrap();
            prop_assert_eq!(r.size, brute_min(&g, &cover));
            if let Some(sep) = &r.best {
                verify_separation(&g, sep).unwrap();
                prop_assert_eq!(Some(sep.s.len()), r.size);
            }
        }

        #[test]
        fn ordering_separator_within_ccw(n in 3usize..9, code in any::<u64>()) {
            let g = from_code(n, code);
            let (ccw, cover) = ccw_exact(&g, &Caps::default()).unwrap();
            if cover.len() >= 3 {
                let sep = ccw_separator(&g, &cover).unwrap();
                verify_separation(&g, &sep).unwrap();
                prop_assert!(sep.s.len() <= ccw);
                if !sep.a.is_empty() && !sep.b.is_empty() {
                    let r = min_balanced_clique_separator(&g, &cover, &Caps::default()).unwrap();
                    prop_assert!(r.size.unwrap() <= ccw);
                }
            }
        }
    }
}
