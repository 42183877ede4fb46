//! Exact clique number and chromatic number, written independently of the
//! colouring code they are used to check.

use thiserror::Error;

use crate::graph::{Coloring, Graph, VertexSet};

/// Largest graph accepted by [`chromatic_number`].
pub const MAX_CHROMATIC_VERTICES: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {n} vertices; the exact oracle accepts at most {max}")]
pub struct SizeGuard {
    pub n: usize,
    pub max: usize,
}

/// Size of a maximum clique and the least such clique found first by a
/// branch-and-bound search in ascending vertex order.
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, g.all_vertices(), &mut best);
    (best.len(), best)
}

fn expand(g: &Graph, current: &mut Vec<usize>, candidates: VertexSet, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let mut rest = candidates;
    while let Some(v) = rest.first() {
        if current.len() + rest.len() <= best.len() {
            return;
        }
        current.push(v);
        expand(g, current, rest.intersection(g.neighbors(v)), best);
        current.pop();
        rest.remove(v);
    }
}

/// The chromatic number with an optimal colouring.
///
/// Tries `k = ω, ω+1, ...` with a DSatur backtracking search (most saturated
/// vertex first, new colours opened one at a time).
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), SizeGuard> {
    if g.n() > MAX_CHROMATIC_VERTICES {
        return Err(SizeGuard {
            n: g.n(),
            max: MAX_CHROMATIC_VERTICES,
        });
    }
    if g.n() == 0 {
        return Ok((0, Coloring::new(0)));
    }
    let (omega, _) = clique_number(g);
    for k in omega.max(1).. {
        if let Some(colors) = dsatur_decide(g, k) {
            return Ok((k, Coloring::from_dense(k, &colors)));
        }
    }
    unreachable!("n colours always suffice")
}

/// A proper `k`-colouring if one exists.
pub fn dsatur_decide(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut s = Dsatur {
        g,
        k,
        color: vec![0; n],
        // seen[v][c]: number of coloured neighbours of v with colour c
        seen: vec![vec![0u32; k + 1]; n],
        saturation: vec![0; n],
    };
    s.solve(0, 0).then_some(s.color)
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl Dsatur<'_> {
    fn solve(&mut self, colored: usize, used: usize) -> bool {
        let n = self.g.n();
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| {
                let free_degree = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&u| self.color[u] == 0)
                    .count();
                (self.saturation[v], free_degree, std::cmp::Reverse(v))
            })
            .unwrap();
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 1..=self.k.min(used + 1) {
            if self.seen[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(colored + 1, used.max(c)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for u in self.g.neighbors(v).iter() {
            self.seen[u][c] += 1;
            if self.seen[u][c] == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        for u in self.g.neighbors(v).iter() {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groetzsch::groetzsch_graph;

    /// Chromatic number by trying every assignment of `k` colours.
    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (1..=n.max(1))
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|mut code| {
                    let mut c = vec![0; n];
                    for slot in c.iter_mut() {
                        *slot = (code % k as u64) as usize;
                        code /= k as u64;
                    }
                    g.edges().all(|(u, v)| c[u] != c[v])
                })
            })
            .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap().0, 1);
        assert_eq!(clique_number(&Graph::complete(4)).0, 4);
        assert_eq!(clique_number(&Graph::cycle(5)), (2, vec![0, 1]));
        assert!(chromatic_number(&Graph::empty(41)).is_err());
    }

    #[test]
    fn groetzsch_needs_four_colours() {
        let h = groetzsch_graph();
        assert!(dsatur_decide(&h, 3).is_none());
        let (k, c) = chromatic_number(&h).unwrap();
        assert_eq!(k, 4);
        assert!(h.edges().all(|(u, v)| c.get(u) != c.get(v)));
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand_core::{Rng, SeedableRng};
        let mut rng = rand_xoshiro::SplitMix64::seed_from_u64(3);
        for _ in 0..150 {
            let n = 1 + (rng.next_u64() % 7) as usize;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.next_u64() % 2 == 0)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let (k, c) = chromatic_number(&g).unwrap();
            assert_eq!(k, brute_chi(&g), "{g:?}");
            assert!(g.edges().all(|(u, v)| c.get(u) != c.get(v)));
            let (w, clique) = clique_number(&g);
            assert!(g.is_clique(&clique) && clique.len() == w);
            let brute_w = (0u32..1 << n)
                .filter(|m| g.is_clique(&(0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>()))
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(w, brute_w);
        }
    }
}
