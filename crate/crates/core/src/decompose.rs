//! Reductions used by the colouring driver: removal of dominated vertices,
//! splitting on clique cutsets, and recombination of block colourings.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Coloring, Graph, VertexSet};

/// Least `(v, u)` (compared on `v` first) with `u`, `v` non-adjacent and
/// `N(v) ⊆ N(u)`, returned as `(u, v)`: `u` is kept, `v` is dominated.
pub fn find_comparable_pair(g: &Graph) -> Option<(usize, usize)> {
    for v in g.vertices() {
        for u in g.vertices() {
            if u != v && !g.adjacent(u, v) && g.neighbors(v).is_subset(g.neighbors(u)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// `u`, `v` distinct, non-adjacent and `N(v) ⊆ N(u)`.
pub fn is_comparable(g: &Graph, u: usize, v: usize) -> bool {
    u != v && !g.adjacent(u, v) && g.neighbors(v).is_subset(g.neighbors(u))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCutset {
    pub cutset: VertexSet,
    /// The component of `G - K` with the smallest vertex.
    pub side1: VertexSet,
    /// Every other component of `G - K`.
    pub side2: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutsetError {
    #[error("clique cutset search needs a connected graph")]
    Disconnected,
}

/// Finds a clique cutset of a connected graph, or `None` when `g` is an atom.
///
/// Runs maximum cardinality search (MCS-M) to get a minimal elimination
/// ordering, then tests each vertex's higher neighbourhood in the fill graph
/// in elimination order; the first one that is a clique of `g` and leaves
/// vertices outside the component of its vertex is the cutset. With a minimal
/// ordering this finds a cutset whenever one exists.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCutset>, CutsetError> {
    if !g.is_connected() {
        return Err(CutsetError::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let (order, fill) = minimal_elimination_ordering(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let all = g.all_vertices();
    for &v in &order {
        let higher =
            VertexSet::from_vertices(n, fill[v].iter().filter(|&u| position[u] > position[v]));
        if higher.is_empty() || !g.is_clique_set(&higher) {
            continue;
        }
        let rest = all.difference(&higher);
        let around_v = g.reach(v, &rest);
        if around_v.len() < rest.len() {
            return Ok(Some(split_on(g, shrink(g, higher))));
        }
    }
    Ok(None)
}

/// Drops cutset vertices in increasing order while the rest still
/// disconnects the connected graph `g`, leaving a minimal clique cutset.
fn shrink(g: &Graph, mut cutset: VertexSet) -> VertexSet {
    for x in cutset.to_vec() {
        let mut smaller = cutset.clone();
        smaller.remove(x);
        let rest = g.all_vertices().difference(&smaller);
        if g.components_within(&rest).len() > 1 {
            cutset = smaller;
        }
    }
    cutset
}

/// Splits `g - cutset` into the first component and the union of the others.
/// The caller guarantees at least two components.
pub fn split_on(g: &Graph, cutset: VertexSet) -> CliqueCutset {
    let rest = g.all_vertices().difference(&cutset);
    let mut comps = g.components_within(&rest).into_iter();
    let side1 = comps.next().expect("cutset leaves a component");
    let mut side2 = VertexSet::new(g.n());
    for c in comps {
        side2.union_with(&c);
    }
    CliqueCutset {
        cutset,
        side1,
        side2,
    }
}

/// MCS-M. Returns the elimination order (first eliminated first) and the
/// adjacency of the resulting minimal triangulation.
fn minimal_elimination_ordering(g: &Graph) -> (Vec<usize>, Vec<VertexSet>) {
    let n = g.n();
    let mut weight = vec![0i64; n];
    let mut numbered = VertexSet::new(n);
    let mut fill: Vec<VertexSet> = g.vertices().map(|v| g.neighbors(v).clone()).collect();
    let mut order = vec![0; n];

    for slot in (0..n).rev() {
        let v = g
            .vertices()
            .filter(|&u| !numbered.contains(u))
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .unwrap();
        order[slot] = v;

        // bottleneck[u]: least possible maximum weight of an inner vertex on
        // a path v..u through unnumbered vertices (-1 when u is adjacent to v).
        let mut bottleneck = vec![i64::MAX; n];
        let mut done = VertexSet::new(n);
        done.insert(v);
        for u in g.neighbors(v).iter() {
            if !numbered.contains(u) {
                bottleneck[u] = -1;
            }
        }
        loop {
            let next = g
                .vertices()
                .filter(|&u| !numbered.contains(u) && !done.contains(u) && bottleneck[u] < i64::MAX)
                .min_by_key(|&u| (bottleneck[u], u));
            let Some(x) = next else { break };
            done.insert(x);
            let through = bottleneck[x].max(weight[x]);
            for y in g.neighbors(x).iter() {
                if !numbered.contains(y) && !done.contains(y) && through < bottleneck[y] {
                    bottleneck[y] = through;
                }
            }
        }
        let raised: Vec<usize> = g
            .vertices()
            .filter(|&u| u != v && !numbered.contains(u) && bottleneck[u] < weight[u])
            .collect();
        for u in raised {
            weight[u] += 1;
            fill[u].insert(v);
            fill[v].insert(u);
        }
        numbered.insert(v);
    }
    (order, fill)
}

/// Whether `cutset` is a clique whose removal leaves more components than `g` has.
pub fn is_clique_cutset(g: &Graph, cutset: &VertexSet) -> bool {
    if !g.is_clique_set(cutset) {
        return false;
    }
    let rest = g.all_vertices().difference(cutset);
    g.components_within(&rest).len() > g.components().len()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("block colouring is improper on edge ({0}, {1})")]
    Improper(usize, usize),
    #[error("vertex {vertex} has colour {color} outside its palette {palette}")]
    OutsidePalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("cutset vertex {0} is not coloured in both blocks")]
    MissingCutsetVertex(usize),
    #[error("cutset vertices {0} and {1} share a colour")]
    CutsetNotRainbow(usize, usize),
}

/// Merges colourings of `V1 ∪ K` and `V2 ∪ K` agreeing nowhere in
/// particular. `first` is kept as is; the colours of `second` are permuted
/// on `1..=max(palettes)` so that it agrees with `first` on `cutset`.
/// Cutset colours are matched first, the remaining colours are paired in
/// increasing order.
pub fn merge_colorings_across_cutset(
    g: &Graph,
    first: &Coloring,
    second: &Coloring,
    cutset: &VertexSet,
) -> Result<Coloring, MergeError> {
    check_block(g, first)?;
    check_block(g, second)?;
    let palette = first.palette.max(second.palette);
    let mut perm = vec![0usize; palette + 1];
    let mut taken = vec![false; palette + 1];
    for x in cutset.iter() {
        let (Some(a), Some(b)) = (first.get(x), second.get(x)) else {
            return Err(MergeError::MissingCutsetVertex(x));
        };
        if perm[b] != 0 || taken[a] {
            let clash = cutset
                .iter()
                .find(|&y| y != x && (first.get(y) == Some(a) || second.get(y) == Some(b)))
                .unwrap_or(x);
            return Err(MergeError::CutsetNotRainbow(clash.min(x), clash.max(x)));
        }
        perm[b] = a;
        taken[a] = true;
    }
    let mut free = (1..=palette).filter(|&c| !taken[c]);
    for slot in perm.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free.next().expect("permutation is a bijection");
        }
    }
    let mut out = first.clone();
    out.palette = palette;
    for (&v, &c) in &second.colors {
        out.colors.entry(v).or_insert(perm[c]);
    }
    Ok(out)
}

fn check_block(g: &Graph, c: &Coloring) -> Result<(), MergeError> {
    for (&v, &color) in &c.colors {
        if color == 0 || color > c.palette {
            return Err(MergeError::OutsidePalette {
                vertex: v,
                color,
                palette: c.palette,
            });
        }
        for w in g.neighbors(v).iter().filter(|&w| w > v) {
            if c.get(w) == Some(color) {
                return Err(MergeError::Improper(v, w));
            }
        }
    }
    Ok(())
}

/// How an imperfect atom leaf was coloured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AtomMethod {
    /// Clique number at most 3: bounded exact search with six colours.
    SmallCliqueSearch,
    /// Clique number at least 4: the C5-partition construction.
    Structural,
}

/// One reduction or leaf, with vertex ids of the original input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Step {
    ComponentSplit {
        parts: Vec<Vec<usize>>,
    },
    DominatedRemoval {
        /// Vertex set of the graph the removal was applied to.
        scope: Vec<usize>,
        kept: usize,
        removed: usize,
    },
    CutsetSplit {
        cutset: Vec<usize>,
        side1: Vec<usize>,
        side2: Vec<usize>,
    },
    PerfectLeaf {
        vertices: Vec<usize>,
        coloring: Coloring,
    },
    ImperfectAtomLeaf {
        vertices: Vec<usize>,
        method: AtomMethod,
        coloring: Coloring,
    },
}

/// Pre-order record of the driver's recursion. Children of a step follow it
/// directly: one per part for a component split, the remainder for a
/// dominated removal, and the two blocks (`side1 ∪ K`, then `side2 ∪ K`)
/// for a cutset split.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DecompositionTrace {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {0}: {1}")]
    Invalid(usize, String),
    #[error("trace ends before every step has its children")]
    Truncated,
    #[error(transparent)]
    Merge(#[from] MergeError),
}

impl DecompositionTrace {
    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks each step's local invariant against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), TraceError> {
        let bad = |i: usize, msg: &str| Err(TraceError::Invalid(i, msg.to_string()));
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::ComponentSplit { parts } => {
                    let scope: Vec<usize> = parts.iter().flatten().copied().collect();
                    let (sub, map) = g
                        .induced_subgraph(&scope)
                        .map_err(|e| TraceError::Invalid(i, e.to_string()))?;
                    let comps: Vec<Vec<usize>> = sub
                        .components()
                        .iter()
                        .map(|c| c.iter().map(|v| map[v]).collect())
                        .collect();
                    if &comps != parts {
                        return bad(i, "parts are not the components");
                    }
                }
                Step::DominatedRemoval {
                    scope,
                    kept,
                    removed,
                } => {
                    let (sub, map) = g
                        .induced_subgraph(scope)
                        .map_err(|e| TraceError::Invalid(i, e.to_string()))?;
                    let local = |x: usize| map.iter().position(|&m| m == x);
                    match (local(*kept), local(*removed)) {
                        (Some(u), Some(v)) if is_comparable(&sub, u, v) => {}
                        _ => return bad(i, "removed vertex is not dominated by the kept one"),
                    }
                }
                Step::CutsetSplit {
                    cutset,
                    side1,
                    side2,
                } => {
                    let mut scope = cutset.clone();
                    scope.extend(side1);
                    scope.extend(side2);
                    let (sub, map) = g
                        .induced_subgraph(&scope)
                        .map_err(|e| TraceError::Invalid(i, e.to_string()))?;
                    let local = |xs: &[usize]| {
                        VertexSet::from_vertices(
                            sub.n(),
                            xs.iter().filter_map(|x| map.iter().position(|m| m == x)),
                        )
                    };
                    let k = local(cutset);
                    let (s1, s2) = (local(side1), local(side2));
                    if !sub.is_clique_set(&k) || s1.is_empty() || s2.is_empty() {
                        return bad(i, "cutset is not a clique or a side is empty");
                    }
                    if !sub.neighborhood_of_set(&s1).is_subset(&k) {
                        return bad(i, "cutset does not separate the sides");
                    }
                }
                Step::PerfectLeaf { vertices, coloring }
                | Step::ImperfectAtomLeaf {
                    vertices, coloring, ..
                } => {
                    let (sub, map) = g
                        .induced_subgraph(vertices)
                        .map_err(|e| TraceError::Invalid(i, e.to_string()))?;
                    if crate::color::verify_coloring(&sub, &localize(coloring, &map)).is_err() {
                        return bad(i, "leaf colouring is not proper");
                    }
                }
            }
        }
        Ok(())
    }

    /// Rebuilds the colouring of the whole graph bottom-up from the leaf
    /// colourings, using only the recorded steps.
    pub fn replay(&self, g: &Graph) -> Result<Coloring, TraceError> {
        let mut stack: Vec<Coloring> = Vec::new();
        for (i, step) in self.steps.iter().enumerate().rev() {
            let mut pop = || stack.pop().ok_or(TraceError::Truncated);
            let merged = match step {
                Step::PerfectLeaf { coloring, .. } | Step::ImperfectAtomLeaf { coloring, .. } => {
                    coloring.clone()
                }
                Step::ComponentSplit { parts } => {
                    let mut out = Coloring::new(0);
                    for _ in parts {
                        out.absorb(&pop()?);
                    }
                    out
                }
                Step::DominatedRemoval { kept, removed, .. } => {
                    let mut c = pop()?;
                    let color = c
                        .get(*kept)
                        .ok_or_else(|| TraceError::Invalid(i, "kept vertex uncoloured".into()))?;
                    c.set(*removed, color);
                    c
                }
                Step::CutsetSplit { cutset, .. } => {
                    let first = pop()?;
                    let second = pop()?;
                    let k = g.vertex_set(cutset.iter().copied());
                    merge_colorings_across_cutset(g, &first, &second, &k)?
                }
            };
            stack.push(merged);
        }
        match (stack.pop(), stack.is_empty()) {
            (Some(c), true) => Ok(c),
            (None, _) => Ok(Coloring::new(0)),
            _ => Err(TraceError::Truncated),
        }
    }
}

/// Re-indexes a colouring keyed by global ids onto `map` (local -> global).
fn localize(c: &Coloring, map: &[usize]) -> Coloring {
    Coloring {
        palette: c.palette,
        colors: map
            .iter()
            .enumerate()
            .filter_map(|(local, global)| c.get(*global).map(|col| (local, col)))
            .collect(),
    }
}
