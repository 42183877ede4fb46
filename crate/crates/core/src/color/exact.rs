//! Bounded exact colouring by backtracking.

use std::cmp::Reverse;

use crate::graph::{Coloring, Graph};

/// A proper colouring with colours in `1..=k`, or `None` if none exists.
///
/// Vertices are coloured in order of decreasing degree (ties by id). A vertex
/// may open at most one new colour beyond those already used, and every
/// assignment is undone as soon as some uncoloured neighbour has no colour
/// left.
pub fn color_exact_bounded(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::new(k));
    }
    let usable = k.min(n);
    if usable == 0 {
        return None;
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut s = Search {
        g,
        order,
        k: usable,
        color: vec![0; n],
        blocked: vec![vec![0; usable + 1]; n],
        free: vec![usable; n],
    };
    s.run(0, 0).then(|| Coloring::from_dense(k, &s.color))
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    k: usize,
    color: Vec<usize>,
    // blocked[v][c]: coloured neighbours of v with colour c
    blocked: Vec<Vec<u32>>,
    // free[v]: colours with blocked[v][c] == 0
    free: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, used: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for c in 1..=self.k.min(used + 1) {
            if self.blocked[v][c] > 0 {
                continue;
            }
            let viable = self.assign(v, c);
            if viable && self.run(idx + 1, used.max(c)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }

    /// Colours `v` with `c`; false if an uncoloured neighbour is left with
    /// no colour.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut viable = true;
        for u in self.g.neighbors(v).iter() {
            if self.color[u] != 0 {
                continue;
            }
            self.blocked[u][c] += 1;
            if self.blocked[u][c] == 1 {
                self.free[u] -= 1;
                if self.free[u] == 0 {
                    viable = false;
                }
            }
        }
        viable
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        for u in self.g.neighbors(v).iter() {
            if self.color[u] != 0 {
                continue;
            }
            self.blocked[u][c] -= 1;
            if self.blocked[u][c] == 0 {
                self.free[u] += 1;
            }
        }
    }
}
