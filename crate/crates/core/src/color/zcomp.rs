//! Colouring a component of `Z` (the vertices with no neighbour in Q) with
//! at most `ω - 1` colours.

use serde::Serialize;
use thiserror::Error;

use crate::c5::C5Partition;
use crate::graph::{Coloring, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ZComponentAnalysis {
    /// `K` is a clique and `c ∈ C` is complete to it.
    CAttachedClique { vertices: Vec<usize>, c: usize },
    /// `K` has no neighbour in C; `f ∈ F` is its least neighbour,
    /// `L1 = N(f) ∩ K` and `L2 = N(L1) ∩ K \ L1`.
    FAttached {
        vertices: Vec<usize>,
        f: usize,
        l1: Vec<usize>,
        l2: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZError {
    #[error("{0:?} is not a component of Z")]
    NotZComponent(Vec<usize>),
    #[error("Z component {0:?} has no neighbour in C or F")]
    Unattached(Vec<usize>),
    #[error("Z component analysis failed: {0}")]
    InternalInconsistency(String),
}

pub fn color_z_component(
    g: &Graph,
    p: &C5Partition,
    k: &VertexSet,
    omega: usize,
) -> Result<(ZComponentAnalysis, Coloring), ZError> {
    let vertices = k.to_vec();
    let is_component = !k.is_empty()
        && k.is_subset(&p.z)
        && k.first().map(|v| g.reach(v, &p.z)) == Some(k.clone());
    if !is_component {
        return Err(ZError::NotZComponent(vertices));
    }
    let bad = |msg: String| Err(ZError::InternalInconsistency(msg));
    let around = g.neighborhood_of_set(k);
    let mut coloring = Coloring::new(omega.saturating_sub(1));

    if let Some(c) = around.intersection(&p.c_all()).first() {
        if !k.is_subset(g.neighbors(c)) {
            return bad(format!("{c} in C sees only part of {vertices:?}"));
        }
        if !g.is_clique_set(k) {
            return bad(format!("{vertices:?} is attached to C but is not a clique"));
        }
        if k.len() + 1 > omega {
            return bad(format!(
                "{vertices:?} with {c} is a clique larger than ω = {omega}"
            ));
        }
        for (j, v) in k.iter().enumerate() {
            coloring.set(v, j + 1);
        }
        return Ok((
            ZComponentAnalysis::CAttachedClique { vertices, c },
            coloring,
        ));
    }

    let Some(f) = around.intersection(&p.f_all()).first() else {
        return Err(ZError::Unattached(vertices));
    };
    let l1 = g.neighbors_in(f, k);
    let l2 = g.neighborhood_of_set(&l1).intersection(k).difference(&l1);
    let analysis = ZComponentAnalysis::FAttached {
        vertices: vertices.clone(),
        f,
        l1: l1.to_vec(),
        l2: l2.to_vec(),
    };
    if l1.union(&l2) != *k {
        return bad(format!("{vertices:?} reaches beyond distance 2 from {f}"));
    }
    if !g.is_stable_set(&l2) {
        return bad(format!("L2 = {:?} is not stable", l2.to_vec()));
    }
    if l2.is_empty() {
        if !g.is_clique_set(k) || k.len() + 1 > omega {
            return bad(format!("{vertices:?} = L1 is not a clique of size below ω"));
        }
        for (j, v) in k.iter().enumerate() {
            coloring.set(v, j + 1);
        }
        return Ok((analysis, coloring));
    }
    for comp in g.components_within(&l1) {
        if comp.len() > 2 {
            return bad(format!(
                "L1 component {:?} has more than two vertices",
                comp.to_vec()
            ));
        }
        for (j, v) in comp.iter().enumerate() {
            coloring.set(v, j + 1);
        }
    }
    for v in l2.iter() {
        coloring.set(v, 3);
    }
    if omega < 4 {
        return bad(format!("three colours needed but ω = {omega}"));
    }
    Ok((analysis, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c5::build_partition;

    const Q: [usize; 5] = [0, 1, 2, 3, 4];

    fn with_cycle(n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend_from_slice(extra);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn single_vertex_attached_to_c() {
        // c = 5 in C_{1,3}, z = 6.
        let g = with_cycle(7, &[(0, 5), (2, 5), (5, 6)]);
        let p = build_partition(&g, Q).unwrap();
        let (a, c) = color_z_component(&g, &p, &g.vertex_set([6]), 4).unwrap();
        assert_eq!(
            a,
            ZComponentAnalysis::CAttachedClique {
                vertices: vec![6],
                c: 5
            }
        );
        assert_eq!(c.get(6), Some(1));
    }

    #[test]
    fn clique_attached_to_c() {
        let g = with_cycle(8, &[(0, 5), (2, 5), (5, 6), (5, 7), (6, 7)]);
        let p = build_partition(&g, Q).unwrap();
        let (_, c) = color_z_component(&g, &p, &g.vertex_set([6, 7]), 4).unwrap();
        assert_eq!((c.get(6), c.get(7)), (Some(1), Some(2)));
    }

    #[test]
    fn f_attached_two_layers() {
        // f = 5 in F_1; L1 = {6, 7} (an edge), L2 = {8} adjacent to 6.
        let g = with_cycle(9, &[(0, 5), (2, 5), (3, 5), (5, 6), (5, 7), (6, 7), (6, 8)]);
        let p = build_partition(&g, Q).unwrap();
        let k = g.vertex_set([6, 7, 8]);
        let (a, c) = color_z_component(&g, &p, &k, 4).unwrap();
        assert_eq!(
            a,
            ZComponentAnalysis::FAttached {
                vertices: vec![6, 7, 8],
                f: 5,
                l1: vec![6, 7],
                l2: vec![8]
            }
        );
        assert_eq!([6, 7, 8].map(|v| c.get(v).unwrap()), [1, 2, 3]);
    }

    #[test]
    fn rejects_non_components() {
        let g = with_cycle(8, &[(0, 5), (2, 5), (5, 6), (6, 7)]);
        let p = build_partition(&g, Q).unwrap();
        assert!(matches!(
            color_z_component(&g, &p, &g.vertex_set([6]), 4),
            Err(ZError::NotZComponent(_))
        ));
        assert!(matches!(
            color_z_component(&g, &p, &g.vertex_set([6, 7]), 4),
            Err(ZError::InternalInconsistency(_))
        ));
    }
}
