//! Immutable simple undirected graphs on the dense vertex range `0..n`.

mod coloring;
mod set;

pub use coloring::Coloring;
pub use set::{Iter, VertexSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is not a vertex of a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
}

/// A simple undirected graph. Never mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// The cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_vertices(self.n(), vertices)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// The subgraph induced by `vertices`, renumbered densely in ascending
    /// order of the original ids. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut map = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        Ok((self.induced_sorted(&map), map))
    }

    /// Like [`Graph::induced_subgraph`] for a bitset of the same universe.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(set.universe(), self.n());
        let map = set.to_vec();
        (self.induced_sorted(&map), map)
    }

    fn induced_sorted(&self, map: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::new(k); k];
        let mut edge_count = 0;
        for (new, &old) in map.iter().enumerate() {
            for w in self.adj[old].iter() {
                let j = index[w];
                if j != usize::MAX {
                    adj[new].insert(j);
                    if j > new {
                        edge_count += 1;
                    }
                }
            }
        }
        Graph { adj, edge_count }
    }

    /// `G - v`, with the map from new ids to old ids.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut keep = self.all_vertices();
        keep.remove(v);
        self.induced(&keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.difference_with(&self.adj[v]);
            row.remove(v);
            adj.push(row);
        }
        let edge_count = n * n.saturating_sub(1) / 2 - self.edge_count;
        Graph { adj, edge_count }
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all_vertices())
    }

    /// Components of the subgraph induced by `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        while let Some(root) = unseen.first() {
            let comp = self.reach(root, within);
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `root` inside `within` (which must contain `root`).
    pub fn reach(&self, root: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n());
        seen.insert(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if within.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_clique_set(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable_set(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Neighbours of `v` inside `set`.
    pub fn neighbors_in(&self, v: usize, set: &VertexSet) -> VertexSet {
        self.adj[v].intersection(set)
    }

    /// Union of the neighbourhoods of `set`, minus `set` itself.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn build_small_graphs() {
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));

        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4, Graph::complete(4));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5);
        let (all, map) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(all, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (k3, _) = Graph::complete(4).induced_subgraph(&[3, 0, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));

        // v1, v2, v3 of the 5-cycle: a path with middle vertex v2.
        let (p3, map) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);

        assert!(matches!(
            c5.induced_subgraph(&[0, 7]),
            Err(GraphError::InvalidVertex { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        // The complement of 0-1-2-3-4-0 is the cycle 0-2-4-1-3-0.
        let pentagram = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5.complement(), pentagram);
    }

    #[test]
    fn component_listing() {
        assert_eq!(Graph::cycle(5).components().len(), 1);
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let comps = two_k2.components();
        assert_eq!(
            comps.iter().map(|c| c.len()).collect::<Vec<_>>(),
            vec![2, 2]
        );
        let k1_c5 = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        let comps = k1_c5.components();
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert_eq!(comps[1].len(), 5);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn degree_sum_is_twice_edge_count(g in arb_graph(20)) {
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn adjacency_is_symmetric_and_loopless(g in arb_graph(20)) {
            for u in g.vertices() {
                prop_assert!(!g.adjacent(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.adjacent(v, u));
                }
            }
        }

        #[test]
        fn complement_is_involutive(g in arb_graph(20)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn full_induced_subgraph_is_identity(g in arb_graph(20)) {
            let all: Vec<usize> = g.vertices().collect();
            let (h, map) = g.induced_subgraph(&all).unwrap();
            prop_assert_eq!(map, all);
            prop_assert_eq!(h, g);
        }

        #[test]
        fn components_partition_vertices(g in arb_graph(20)) {
            let comps = g.components();
            let total: usize = comps.iter().map(|c| c.len()).sum();
            prop_assert_eq!(total, g.n());
            for w in comps.windows(2) {
                prop_assert!(w[0].first() < w[1].first());
            }
            for c in &comps {
                prop_assert!(g.neighborhood_of_set(c).is_empty());
            }
        }
    }
}
