//! Exact bandwidth by depth-first layout with window pruning and a failure memo.

use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `max(ceil(Δ/2), ceil((|C|-1)/diam(C)))` over the components.
pub(crate) fn lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let mut lb = g.max_degree().div_ceil(2);
    for comp in g.components(g.vertices()) {
        if comp.len() < 2 {
            continue;
        }
        let diam = comp
            .iter()
            .map(|v| g.eccentricity_within(v, comp).unwrap())
            .max()
            .unwrap();
        lb = lb.max((comp.len() - 1).div_ceil(diam));
    }
    lb
}

/// Width of the layout `order` (position -> vertex).
pub(crate) fn layout_width(g: &Graph, order: &[usize]) -> usize {
    let mut pos = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    g.edges().map(|(u, v)| pos[u].abs_diff(pos[v])).max().unwrap_or(0)
}

struct Layout<'a> {
    g: &'a Graph,
    w: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    placed: VertexSet,
    failed: HashSet<(u128, Vec<u8>)>,
}

impl Layout<'_> {
    fn key(&self) -> (u128, Vec<u8>) {
        let p = self.order.len();
        let tail = &self.order[p.saturating_sub(self.w)..];
        (self.placed.bits(), tail.iter().map(|&v| v as u8).collect())
    }

    /// Every placed vertex must still have room for its unplaced neighbours
    /// once position `next` is the first free slot.
    fn slack_ok(&self, next: usize) -> bool {
        let unplaced = self.g.vertices().difference(self.placed);
        self.order.iter().enumerate().all(|(p, &u)| {
            let pending = self.g.neighbors(u).intersection(unplaced).len();
            pending == 0 || p + self.w + 1 >= next + pending
        })
    }

    fn search(&mut self) -> bool {
        let p = self.order.len();
        let n = self.g.n();
        if p == n {
            return true;
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return false;
        }
        let unplaced = self.g.vertices().difference(self.placed);
        // A vertex leaving the window must have its last neighbour placed now.
        let mut forced = unplaced;
        if p >= self.w {
            let leaving = self.order[p - self.w];
            let pending = self.g.neighbors(leaving).intersection(unplaced);
            if !pending.is_empty() {
                forced = pending;
            }
        }
        for v in forced {
            let ok = self
                .g
                .neighbors(v)
                .intersection(self.placed)
                .iter()
                .all(|u| p - self.pos[u] <= self.w);
            if !ok {
                continue;
            }
            self.order.push(v);
            self.pos[v] = p;
            self.placed.insert(v);
            if self.slack_ok(p + 1) && self.search() {
                return true;
            }
            self.placed.remove(v);
            self.order.pop();
        }
        self.failed.insert(key);
        false
    }
}

/// Lexicographically first layout of width at most `w`, if one exists.
pub(crate) fn layout_within(g: &Graph, w: usize) -> Option<Vec<usize>> {
    if g.m() == 0 {
        return Some((0..g.n()).collect());
    }
    if w == 0 {
        return None;
    }
    let mut layout = Layout {
        g,
        w,
        order: Vec::with_capacity(g.n()),
        pos: vec![0; g.n()],
        placed: VertexSet::EMPTY,
        failed: HashSet::new(),
    };
    layout.search().then_some(layout.order)
}

/// Optimal bandwidth if it is strictly below `limit`.
pub(crate) fn bandwidth_below(g: &Graph, limit: usize) -> Option<(usize, Vec<usize>)> {
    (lower_bound(g)..limit).find_map(|w| layout_within(g, w).map(|o| (w, o)))
}

/// Exact bandwidth and a layout attaining it (position -> vertex).
pub fn bandwidth_exact(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    Error::check_cap("bandwidth search", g.n(), caps.bandwidth_vertices)?;
    Ok(bandwidth_below(g, g.n().max(1)).expect("n-1 is always feasible"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::*;

    fn brute_bandwidth(g: &Graph) -> usize {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: VertexSet, best: &mut usize) {
            if order.len() == g.n() {
                *best = (*best).min(layout_width(g, order));
                return;
            }
            for v in g.vertices().difference(used) {
                order.push(v);
                rec(g, order, used.with(v), best);
                order.pop();
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut Vec::new(), VertexSet::EMPTY, &mut best);
        best
    }

    #[test]
    fn examples() {
        let caps = Caps::default();
        assert_eq!(bandwidth_exact(&path(5), &caps).unwrap().0, 1);
        assert_eq!(bandwidth_exact(&cycle(6), &caps).unwrap().0, brute_bandwidth(&cycle(6)));
        assert_eq!(bandwidth_exact(&cycle(6), &caps).unwrap().0, 2);
        assert_eq!(bandwidth_exact(&complete(4), &caps).unwrap().0, 3);
        assert_eq!(bandwidth_exact(&Graph::empty(3).unwrap(), &caps).unwrap().0, 0);
        assert_eq!(bandwidth_exact(&Graph::empty(0).unwrap(), &caps).unwrap().0, 0);
    }

    #[test]
    fn layout_witnesses_value() {
        let caps = Caps::default();
        for code in [0b1011_0110_1101u64, 0x3ff, 0x155, 0x2a9] {
            let g = from_code(6, code);
            let (w, order) = bandwidth_exact(&g, &caps).unwrap();
            assert_eq!(layout_width(&g, &order), w);
            assert_eq!(w, brute_bandwidth(&g));
        }
    }

    #[test]
    fn path_layout_is_path_order() {
        let (_, order) = bandwidth_exact(&path(5), &Caps::default()).unwrap();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cap_enforced() {
        let caps = Caps::default();
        assert!(matches!(
            bandwidth_exact(&path(13), &caps),
            Err(Error::Capacity { cap: 12, .. })
        ));
    }

    #[test]
    fn agrees_with_brute_force_on_all_five_vertex_graphs() {
        let caps = Caps::default();
        for code in 0..1u64 << 10 {
            let g = from_code(5, code);
            assert_eq!(bandwidth_exact(&g, &caps).unwrap().0, brute_bandwidth(&g), "{g:?}");
        }
    }
}
