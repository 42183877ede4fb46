//! Colouring a graph made of two cliques whose cross edges form a matching.

use thiserror::Error;

use crate::graph::{Coloring, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoCliquesError {
    #[error("X and Y do not partition the vertex set")]
    NotPartition,
    #[error("{0:?} is not a clique")]
    NotClique(Vec<usize>),
    #[error("vertex {0} has more than one neighbour across")]
    NotMatching(usize),
    #[error("a clique of size {size} does not fit in {k} colours")]
    PaletteTooSmall { size: usize, k: usize },
    #[error("the palette must have at least two colours, got {0}")]
    PaletteBelowTwo(usize),
}

/// A proper `k`-colouring of `g`, given a partition into cliques `x` and `y`
/// joined by a matching, with `max(|X|, |Y|) ≤ k` and `k ≥ 2`.
pub fn two_cliques_color(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k: usize,
) -> Result<Coloring, TwoCliquesError> {
    if !x.is_disjoint(y) || x.union(y) != g.all_vertices() {
        return Err(TwoCliquesError::NotPartition);
    }
    let colors: Vec<usize> = (1..=k).collect();
    color_with(g, x, y, &colors)
}

/// Same as [`two_cliques_color`] for cliques `x`, `y` inside a larger graph,
/// using the given colours: the `j`-th colour of the list plays the role of
/// colour `j`. Only `x ∪ y` is coloured.
pub fn color_with(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    colors: &[usize],
) -> Result<Coloring, TwoCliquesError> {
    let k = colors.len();
    if k < 2 {
        return Err(TwoCliquesError::PaletteBelowTwo(k));
    }
    for side in [x, y] {
        if !g.is_clique_set(side) {
            return Err(TwoCliquesError::NotClique(side.to_vec()));
        }
        if side.len() > k {
            return Err(TwoCliquesError::PaletteTooSmall {
                size: side.len(),
                k,
            });
        }
    }
    for (from, to) in [(x, y), (y, x)] {
        if let Some(v) = from.iter().find(|&v| g.neighbors_in(v, to).len() > 1) {
            return Err(TwoCliquesError::NotMatching(v));
        }
    }
    // X takes colours 0, 1, ... in vertex order; Y is matched to colours
    // avoiding its partner's colour (augmenting paths, vertices and colours
    // in increasing order).
    let mut slot = vec![usize::MAX; g.n()];
    for (j, v) in x.iter().enumerate() {
        slot[v] = j;
    }
    let ys = y.to_vec();
    let banned: Vec<Option<usize>> = ys
        .iter()
        .map(|&v| g.neighbors_in(v, x).first().map(|u| slot[u]))
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; k];
    for j in 0..ys.len() {
        let mut seen = vec![false; k];
        if !augment(j, &banned, &mut owner, &mut seen) {
            // Cannot happen when k ≥ 2 and |Y| ≤ k.
            return Err(TwoCliquesError::PaletteTooSmall { size: ys.len(), k });
        }
    }
    for (c, o) in owner.iter().enumerate() {
        if let Some(j) = o {
            slot[ys[*j]] = c;
        }
    }
    let mut out = Coloring::new(colors.iter().copied().max().unwrap_or(0));
    for v in x.iter().chain(y.iter()) {
        out.set(v, colors[slot[v]]);
    }
    Ok(out)
}

fn augment(
    j: usize,
    banned: &[Option<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for c in 0..owner.len() {
        if banned[j] == Some(c) || seen[c] {
            continue;
        }
        seen[c] = true;
        if owner[c].is_none() || augment(owner[c].unwrap(), banned, owner, seen) {
            owner[c] = Some(j);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::verify_coloring;

    #[test]
    fn examples() {
        let g = Graph::complete(2);
        let c = two_cliques_color(&g, &g.vertex_set([0]), &g.vertex_set([1]), 2).unwrap();
        assert_eq!((c.get(0), c.get(1)), (Some(1), Some(2)));

        // Triangles 0,1,2 and 3,4,5 with matching i -- i+3.
        let g = Graph::new(
            6,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let c =
            two_cliques_color(&g, &g.vertex_set([0, 1, 2]), &g.vertex_set([3, 4, 5]), 3).unwrap();
        assert!(verify_coloring(&g, &c).is_ok());
    }

    #[test]
    fn errors() {
        let g = Graph::complete(3);
        assert_eq!(
            two_cliques_color(&g, &g.vertex_set([0, 1, 2]), &g.vertex_set([]), 2),
            Err(TwoCliquesError::PaletteTooSmall { size: 3, k: 2 })
        );
        assert_eq!(
            two_cliques_color(&g, &g.vertex_set([0]), &g.vertex_set([1]), 2),
            Err(TwoCliquesError::NotPartition)
        );
        assert_eq!(
            two_cliques_color(&g, &g.vertex_set([0]), &g.vertex_set([1, 2]), 1),
            Err(TwoCliquesError::PaletteBelowTwo(1))
        );
        assert_eq!(
            two_cliques_color(&g, &g.vertex_set([0]), &g.vertex_set([1, 2]), 3),
            Err(TwoCliquesError::NotMatching(0))
        );
        let p3 = Graph::path(3);
        assert_eq!(
            two_cliques_color(&p3, &p3.vertex_set([0, 2]), &p3.vertex_set([1]), 3),
            Err(TwoCliquesError::NotClique(vec![0, 2]))
        );
    }

    /// Every pair of cliques with at most four vertices each, every matching
    /// between them, every palette from the larger clique size up to 5.
    #[test]
    fn exhaustive_small_cases() {
        for sx in 0..=4usize {
            for sy in 0..=4usize {
                let n = sx + sy;
                let cross: Vec<(usize, usize)> = (0..sx)
                    .flat_map(|i| (0..sy).map(move |j| (i, sx + j)))
                    .collect();
                for mask in 0u32..1 << cross.len() {
                    let chosen: Vec<(usize, usize)> = cross
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let is_matching = (0..n)
                        .all(|v| chosen.iter().filter(|&&(a, b)| a == v || b == v).count() <= 1);
                    if !is_matching {
                        continue;
                    }
                    let mut edges = chosen.clone();
                    edges.extend((0..sx).flat_map(|i| (i + 1..sx).map(move |j| (i, j))));
                    edges.extend((sx..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
                    let g = Graph::new(n, edges).unwrap();
                    let x = g.vertex_set(0..sx);
                    let y = g.vertex_set(sx..n);
                    for k in sx.max(sy).max(2)..=5 {
                        let c = two_cliques_color(&g, &x, &y, k).unwrap();
                        assert!(verify_coloring(&g, &c).is_ok());
                        assert!(c.max_color() <= k);
                    }
                }
            }
        }
    }
}
