//! Induced-subgraph detection for the small patterns that define and
//! structure the class: P6, diamond, triangle, C5, and arbitrary patterns of
//! at most twelve vertices (enough for the Grötzsch graph).
//!
//! Every search walks candidates in ascending vertex order, so the first hit
//! is the lexicographically least witness tuple.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest pattern accepted by [`contains_induced`].
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PatternKind {
    P6,
    Diamond,
    Triangle,
    C5,
    Groetzsch,
    Generic,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PatternKind::P6 => "P6",
            PatternKind::Diamond => "diamond",
            PatternKind::Triangle => "triangle",
            PatternKind::C5 => "C5",
            PatternKind::Groetzsch => "Groetzsch",
            PatternKind::Generic => "generic",
        };
        f.write_str(name)
    }
}

/// An ordered vertex tuple of `G` realising a pattern.
///
/// The order encodes the isomorphism: path order for P6, cyclic order for
/// C5, `(u, v, x, y)` with `uv` the diagonal edge and `xy` the missing edge
/// for a diamond, and pattern vertex `i -> vertices[i]` for generic matches.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PatternWitness {
    pub pattern: PatternKind,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    fn new(pattern: PatternKind, vertices: Vec<usize>) -> Self {
        PatternWitness { pattern, vertices }
    }

    /// Adjacency matrix the witness must induce, indexed by tuple position.
    /// `None` for generic witnesses, whose pattern is not known here.
    pub fn pattern_graph(&self) -> Option<Graph> {
        let g = match self.pattern {
            PatternKind::P6 => Graph::path(6),
            PatternKind::Diamond => diamond(),
            PatternKind::Triangle => Graph::complete(3),
            PatternKind::C5 => Graph::cycle(5),
            PatternKind::Groetzsch => crate::groetzsch::groetzsch_graph(),
            PatternKind::Generic => return None,
        };
        Some(g)
    }

    /// Re-checks the witness against `g` from scratch.
    pub fn holds_in(&self, g: &Graph) -> bool {
        match self.pattern_graph() {
            Some(h) => realizes(g, &h, &self.vertices),
            None => false,
        }
    }

    /// Renames witness vertices through `map` (local id -> global id).
    pub fn relabel(&self, map: &[usize]) -> PatternWitness {
        PatternWitness::new(
            self.pattern,
            self.vertices.iter().map(|&v| map[v]).collect(),
        )
    }
}

/// The diamond on tuple positions `(u, v, x, y)`: every pair adjacent except `x y`.
pub fn diamond() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Whether `vertices` (distinct, in `g`) induce exactly `h` with position `i`
/// playing pattern vertex `i`.
pub fn realizes(g: &Graph, h: &Graph, vertices: &[usize]) -> bool {
    if vertices.len() != h.n() || vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i] == vertices[j] {
                return false;
            }
            if g.adjacent(vertices[i], vertices[j]) != h.adjacent(i, j) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least induced path on six vertices.
pub fn find_induced_p6(g: &Graph) -> Option<PatternWitness> {
    find_induced_path(g, 6).map(|p| PatternWitness::new(PatternKind::P6, p))
}

/// Lexicographically least induced path with `len` vertices.
pub fn find_induced_path(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len == 0 || g.n() < len {
        return None;
    }
    let mut path = Vec::with_capacity(len);
    for start in g.vertices() {
        path.push(start);
        // `blocked` holds the path plus the neighbours of every path vertex
        // except the last one; extensions must avoid it.
        let mut blocked = VertexSet::new(g.n());
        blocked.insert(start);
        if extend_path(g, len, &mut path, &blocked) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, len: usize, path: &mut Vec<usize>, blocked: &VertexSet) -> bool {
    if path.len() == len {
        return true;
    }
    let last = *path.last().unwrap();
    let candidates = g.neighbors(last).difference(blocked);
    if candidates.is_empty() {
        return false;
    }
    let mut next_blocked = blocked.union(g.neighbors(last));
    next_blocked.insert(last);
    for w in candidates.iter() {
        path.push(w);
        let mut b = next_blocked.clone();
        b.insert(w);
        if extend_path(g, len, path, &b) {
            return true;
        }
        path.pop();
    }
    false
}

/// True if some induced P6 or diamond of `g` contains `x`. When `g - x` is
/// a class member this decides membership of `g`.
pub fn violation_through(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    for y in nx.iter() {
        let common = nx.intersection(g.neighbors(y));
        for a in common.iter() {
            // x and y on the spine, a and b the tips.
            if common.iter().any(|b| b > a && !g.adjacent(a, b)) {
                return true;
            }
            // x a tip on the spine y, a.
            if a > y {
                let mut tips = common_neighbours(g, y, a).difference(nx);
                tips.remove(x);
                if !tips.is_empty() {
                    return true;
                }
            }
        }
    }
    // An induced P6 through x splits into two arms leaving x; the shorter
    // arm has at most two vertices.
    let arm = |left: &[usize], len: usize| {
        let mut blocked = VertexSet::new(g.n());
        blocked.insert(x);
        for &l in left {
            blocked.insert(l);
            blocked.union_with(g.neighbors(l));
        }
        let mut path = vec![x];
        extend_path(g, len, &mut path, &blocked)
    };
    if arm(&[], 6) {
        return true;
    }
    for l1 in nx.iter() {
        if arm(&[l1], 5) {
            return true;
        }
        for l2 in g.neighbors(l1).difference(nx).iter() {
            if l2 != x && arm(&[l1, l2], 4) {
                return true;
            }
        }
    }
    false
}

fn common_neighbours(g: &Graph, u: usize, v: usize) -> VertexSet {
    g.neighbors(u).intersection(g.neighbors(v))
}

/// Two adjacent vertices with two non-adjacent common neighbours, least
/// `(u, v, x, y)` with `u < v` and `x < y`.
pub fn find_induced_diamond(g: &Graph) -> Option<PatternWitness> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        for x in common.iter() {
            let mut others = common.difference(g.neighbors(x));
            others.remove(x);
            if let Some(y) = others.iter().find(|&y| y > x) {
                return Some(PatternWitness::new(PatternKind::Diamond, vec![u, v, x, y]));
            }
        }
    }
    None
}

pub fn find_triangle(g: &Graph) -> Option<PatternWitness> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.iter().find(|&w| w > v) {
            return Some(PatternWitness::new(PatternKind::Triangle, vec![u, v, w]));
        }
    }
    None
}

/// Lexicographically least induced 5-cycle `(v1, ..., v5)`. In that tuple
/// `v1` is the cycle's smallest vertex and `v2 < v5`.
pub fn find_induced_c5(g: &Graph) -> Option<PatternWitness> {
    for v1 in g.vertices() {
        let mut higher = VertexSet::new(g.n());
        for w in v1 + 1..g.n() {
            higher.insert(w);
        }
        // Paths v1-v2-v3-v4 among vertices above v1, then close with v5.
        for v2 in g.neighbors(v1).intersection(&higher).iter() {
            let n1 = g.neighbors(v1);
            let c3 = g.neighbors(v2).intersection(&higher).difference(n1);
            for v3 in c3.iter().filter(|&v| v != v2) {
                let c4 = g
                    .neighbors(v3)
                    .intersection(&higher)
                    .difference(n1)
                    .difference(g.neighbors(v2));
                for v4 in c4.iter().filter(|&v| v != v2) {
                    let c5 = g
                        .neighbors(v4)
                        .intersection(n1)
                        .intersection(&higher)
                        .difference(g.neighbors(v2))
                        .difference(g.neighbors(v3));
                    if let Some(v5) = c5.iter().find(|&v| v != v2 && v != v3) {
                        return Some(PatternWitness::new(
                            PatternKind::C5,
                            vec![v1, v2, v3, v4, v5],
                        ));
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pattern has {0} vertices; at most {MAX_PATTERN_VERTICES} are supported")]
pub struct PatternTooLarge(pub usize);

/// Finds `h` as an induced subgraph of `g`. The returned tuple maps pattern
/// vertex `i` to `vertices[i]` and is the least such tuple.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<Option<PatternWitness>, PatternTooLarge> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(PatternTooLarge(h.n()));
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    let mut image = Vec::with_capacity(h.n());
    let mut used = VertexSet::new(g.n());
    let found = embed(g, h, &mut image, &mut used);
    Ok(found.then(|| PatternWitness::new(PatternKind::Generic, image)))
}

fn embed(g: &Graph, h: &Graph, image: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let i = image.len();
    if i == h.n() {
        return true;
    }
    'candidates: for w in g.vertices() {
        if used.contains(w) || g.degree(w) < h.degree(i) {
            continue;
        }
        for (j, &x) in image.iter().enumerate() {
            if g.adjacent(w, x) != h.adjacent(i, j) {
                continue 'candidates;
            }
        }
        image.push(w);
        used.insert(w);
        if embed(g, h, image, used) {
            return true;
        }
        used.remove(w);
        image.pop();
    }
    false
}

/// Result of the (P6, diamond)-freeness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NonMember { witness: PatternWitness },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

/// P6 is checked before the diamond; the first witness found is reported.
pub fn class_membership(g: &Graph) -> Membership {
    match find_induced_p6(g).or_else(|| find_induced_diamond(g)) {
        Some(witness) => Membership::NonMember { witness },
        None => Membership::Member,
    }
}

pub fn is_member(g: &Graph) -> bool {
    class_membership(g).is_member()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groetzsch::groetzsch_graph;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// All ordered `k`-tuples of distinct vertices, in lexicographic order.
    fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for t in &out {
                for v in 0..n {
                    if !t.contains(&v) {
                        let mut t2 = t.clone();
                        t2.push(v);
                        next.push(t2);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn brute_force(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
        tuples(g.n(), h.n()).into_iter().find(|t| realizes(g, h, t))
    }

    #[test]
    fn p6_examples() {
        let w = find_induced_p6(&Graph::path(6)).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(find_induced_p6(&Graph::cycle(6)), None);
        let w = find_induced_p6(&Graph::cycle(7)).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert!(w.holds_in(&Graph::cycle(7)));
    }

    #[test]
    fn diamond_examples() {
        let w = find_induced_diamond(&diamond()).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert_eq!(find_induced_diamond(&Graph::complete(4)), None);
        assert_eq!(find_induced_diamond(&Graph::cycle(5)), None);
    }

    #[test]
    fn triangle_examples() {
        assert!(find_triangle(&Graph::complete(3)).is_some());
        assert_eq!(find_triangle(&Graph::cycle(5)), None);
        assert_eq!(find_triangle(&groetzsch_graph()), None);
    }

    #[test]
    fn c5_examples() {
        let w = find_induced_c5(&Graph::cycle(5)).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(find_induced_c5(&Graph::cycle(7)), None);
        let w = find_induced_c5(&petersen()).unwrap();
        assert!(w.holds_in(&petersen()));
        assert_eq!(Some(w.vertices), brute_force(&petersen(), &Graph::cycle(5)));
    }

    #[test]
    fn generic_examples() {
        let c5 = Graph::cycle(5);
        assert!(contains_induced(&c5, &c5).unwrap().is_some());
        assert_eq!(
            contains_induced(&Graph::complete(4), &diamond()).unwrap(),
            None
        );
        let gr = groetzsch_graph();
        let w = contains_induced(&gr, &gr).unwrap().unwrap();
        assert_eq!(w.vertices, (0..11).collect::<Vec<_>>());
        assert_eq!(
            contains_induced(&gr, &Graph::empty(13)),
            Err(PatternTooLarge(13))
        );
    }

    #[test]
    fn membership_examples() {
        assert_eq!(class_membership(&Graph::cycle(5)), Membership::Member);
        match class_membership(&Graph::path(6)) {
            Membership::NonMember { witness } => assert_eq!(witness.pattern, PatternKind::P6),
            m => panic!("unexpected {m:?}"),
        }
        match class_membership(&diamond()) {
            Membership::NonMember { witness } => assert_eq!(witness.pattern, PatternKind::Diamond),
            m => panic!("unexpected {m:?}"),
        }
    }

    #[test]
    fn detectors_agree_with_brute_force() {
        use rand_core::{Rng, SeedableRng};
        let mut rng = rand_xoshiro::SplitMix64::seed_from_u64(0x5eed);
        let patterns = [
            (PatternKind::P6, Graph::path(6)),
            (PatternKind::Diamond, diamond()),
            (PatternKind::Triangle, Graph::complete(3)),
            (PatternKind::C5, Graph::cycle(5)),
        ];
        for round in 0..500 {
            let n = 4 + (rng.next_u64() % 7) as usize;
            let density = [0.2, 0.35, 0.5, 0.7][round % 4];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (rng.next_u64() as f64 / u64::MAX as f64) < density {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            for (kind, h) in &patterns {
                let found = match kind {
                    PatternKind::P6 => find_induced_p6(&g),
                    PatternKind::Diamond => find_induced_diamond(&g),
                    PatternKind::Triangle => find_triangle(&g),
                    _ => find_induced_c5(&g),
                };
                let expected = brute_force(&g, h);
                assert_eq!(found.is_some(), expected.is_some(), "{kind} on {g:?}");
                if let Some(w) = found {
                    assert!(realizes(&g, h, &w.vertices));
                    // every detector reports the least tuple overall
                    assert_eq!(Some(w.vertices), expected);
                }
                let generic = contains_induced(&g, h).unwrap().map(|w| w.vertices);
                assert_eq!(generic, expected);
            }
        }
    }

    #[test]
    fn violation_through_agrees_with_membership() {
        use crate::generators::{random_graph, RandomSpec};
        let mut decided = 0;
        for seed in 0..400 {
            let n = 5 + seed as usize % 10;
            let p = [0.25, 0.4, 0.6][seed as usize % 3];
            let g = random_graph(RandomSpec { n, p, seed });
            let member = is_member(&g);
            for x in g.vertices() {
                let through = violation_through(&g, x);
                if through {
                    assert!(!member, "seed {seed}, x {x}");
                }
                if is_member(&g.remove_vertex(x).0) {
                    decided += 1;
                    assert_eq!(through, !member, "seed {seed}, x {x}");
                }
            }
        }
        assert!(decided > 500);
    }

    #[test]
    fn members_have_no_long_odd_holes() {
        use crate::generators::{random_c5_host, random_class_graph, RandomSpec};
        let holes = [Graph::cycle(7), Graph::cycle(9)];
        for seed in 0..60 {
            let spec = RandomSpec {
                n: 12 + seed as usize % 8,
                p: 0.3,
                seed,
            };
            for g in [random_class_graph(spec), random_c5_host(spec)] {
                for h in &holes {
                    assert_eq!(contains_induced(&g, h).unwrap(), None, "seed {seed}");
                }
            }
        }
    }
}
