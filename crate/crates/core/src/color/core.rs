//! Colouring `Q ∪ A ∪ B ∪ C_{i,i+2}` with `k` colours so that `C_{i,i+2}`
//! gets the single colour `k`, by the case analysis on `A_1` and `A_2`.
//!
//! Positions are 0-based as in [`crate::c5`]; comments use the 1-based
//! names. "By symmetry" steps are reflections about `v1`, which swap
//! `A_2 ↔ A_5`, `A_3 ↔ A_4` and `B_{2,3} ↔ B_{4,5}`.

use serde::Serialize;
use thiserror::Error;

use super::two_cliques::{color_with, TwoCliquesError};
use super::verify_coloring;
use crate::c5::{m5, C5Partition};
use crate::graph::{Coloring, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoreCase {
    /// `A_1` not stable.
    Case1,
    /// `A_1` stable and non-empty, `A_2` stable.
    Case2Stable,
    /// `A_1` stable and non-empty, `A_2` not stable.
    Case2Unstable,
    /// `A_1` empty, `A_2` not stable, `A_3` non-empty.
    Case31WithA3,
    /// `A_1` empty, `A_2` not stable, `A_3` empty.
    Case31WithoutA3,
    /// `A_1` empty, `A_2`, `A_5` stable, `A_3` not stable, `A_4` stable.
    Case32UnstableA3,
    /// `A_1` empty, `A_3` and `A_4` not stable: Case 1 rotated to `A_3`.
    Case32UnstableA3A4,
    /// `A_1` empty, `A_2..A_5` stable, `A_2` and `A_5` non-empty.
    Case32BothEnds,
    /// `A_1` empty, `A_2..A_5` stable, `A_2` empty.
    Case32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreColoringResult {
    /// 1-based `i` of the monochromatic `C_{i,i+2}`, in the labels of the
    /// partition that was passed in.
    pub i: usize,
    pub coloring: Coloring,
    pub case: CoreCase,
    /// Whether a reflection about `v1` was applied first.
    pub reflected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("palette {k} is below 4")]
    PaletteTooSmall { k: usize },
    #[error("B is not inside B23 ∪ B45; normalise the partition first")]
    NotNormalized,
    #[error("no colour in the pool is free for vertex {0}")]
    Stuck(usize),
    #[error("two-cliques step failed: {0}")]
    TwoCliques(#[from] TwoCliquesError),
    #[error("case analysis produced an invalid colouring: {0}")]
    InternalInconsistency(String),
}

/// A partition together with the map from its `C` positions back to those
/// of the caller's partition.
struct Frame {
    p: C5Partition,
    c_origin: [usize; 5],
    reflected: bool,
}

impl Frame {
    fn reflect_v1(&self) -> Frame {
        Frame {
            p: self.p.reflect(0),
            c_origin: std::array::from_fn(|k| self.c_origin[m5(-(k as isize) - 2)]),
            reflected: !self.reflected,
        }
    }

    fn rotate(&self, r: usize) -> Frame {
        Frame {
            p: self.p.rotate(r),
            c_origin: std::array::from_fn(|k| self.c_origin[m5(k as isize - r as isize)]),
            reflected: self.reflected,
        }
    }
}

pub fn color_core(g: &Graph, p: &C5Partition, k: usize) -> Result<CoreColoringResult, CoreError> {
    if k < 4 {
        return Err(CoreError::PaletteTooSmall { k });
    }
    if [0, 2, 4].iter().any(|&i| !p.b[i].is_empty()) {
        return Err(CoreError::NotNormalized);
    }
    let frame = Frame {
        p: p.clone(),
        c_origin: [0, 1, 2, 3, 4],
        reflected: false,
    };
    let (frame, case, ci, coloring) = dispatch(g, frame, k)?;
    let p = &frame.p;

    let mut target = p.q_set().union(&p.a_all()).union(&p.b_all());
    target.union_with(&p.c[ci]);
    if let Some(v) = target.iter().find(|&v| coloring.get(v).is_none()) {
        return Err(CoreError::InternalInconsistency(format!(
            "vertex {v} left uncoloured"
        )));
    }
    if let Some(v) = p.c[ci].iter().find(|&v| coloring.get(v) != Some(k)) {
        return Err(CoreError::InternalInconsistency(format!(
            "{v} in the chosen C set is not coloured {k}"
        )));
    }
    let (sub, map) = g.induced(&target);
    let local = Coloring {
        palette: k,
        colors: map
            .iter()
            .enumerate()
            .map(|(l, &v)| (l, coloring.get(v).unwrap()))
            .collect(),
    };
    if let Err(e) = verify_coloring(&sub, &local) {
        return Err(CoreError::InternalInconsistency(format!("{case:?}: {e}")));
    }
    Ok(CoreColoringResult {
        i: frame.c_origin[ci] + 1,
        coloring,
        case,
        reflected: frame.reflected,
    })
}

fn dispatch(
    g: &Graph,
    f: Frame,
    k: usize,
) -> Result<(Frame, CoreCase, usize, Coloring), CoreError> {
    let stable = |f: &Frame, i: usize| g.is_stable_set(&f.p.a[i]);
    let empty = |f: &Frame, i: usize| f.p.a[i].is_empty();

    if !stable(&f, 0) {
        let f = if stable(&f, 4) { f } else { f.reflect_v1() };
        let c = case1(g, &f.p, k)?;
        return Ok((f, CoreCase::Case1, 0, c));
    }
    if !empty(&f, 0) {
        let f = if stable(&f, 4) { f } else { f.reflect_v1() };
        let (case, c) = case2(g, &f.p, k)?;
        return Ok((f, case, 0, c));
    }
    if !stable(&f, 1) {
        let (case, c) = case31(g, &f.p, k)?;
        return Ok((f, case, 0, c));
    }
    if !stable(&f, 4) {
        let f = f.reflect_v1();
        let (case, c) = case31(g, &f.p, k)?;
        return Ok((f, case, 0, c));
    }
    // A_1 empty, A_2 and A_5 stable.
    let f = if stable(&f, 2) && !stable(&f, 3) {
        f.reflect_v1()
    } else {
        f
    };
    if !stable(&f, 2) {
        if stable(&f, 3) {
            let c = case32_unstable_a3(g, &f.p, k)?;
            return Ok((f, CoreCase::Case32UnstableA3, 1, c));
        }
        // A_3 and A_4 both not stable: every B and the other A sets are
        // empty, and rotating A_3 to position 1 gives Case 1.
        let f = f.rotate(3);
        let f = if stable(&f, 4) { f } else { f.reflect_v1() };
        let c = case1(g, &f.p, k)?;
        return Ok((f, CoreCase::Case32UnstableA3A4, 0, c));
    }
    if !empty(&f, 1) && !empty(&f, 4) {
        let c = case32_both_ends(g, &f.p, k);
        return Ok((f, CoreCase::Case32BothEnds, 1, c));
    }
    let f = if empty(&f, 1) { f } else { f.reflect_v1() };
    let c = case32(g, &f.p, k)?;
    Ok((f, CoreCase::Case32, 1, c))
}

fn color_q(p: &C5Partition, colors: [usize; 5]) -> Coloring {
    let mut c = Coloring::new(0);
    for (v, col) in p.q.iter().zip(colors) {
        c.set(*v, col);
    }
    c
}

fn paint(c: &mut Coloring, set: &VertexSet, color: usize) {
    for v in set.iter() {
        c.set(v, color);
    }
}

/// Components by least vertex, vertices in increasing order; each takes the
/// least colour of `pool` not used by an already coloured neighbour.
fn greedy(g: &Graph, c: &mut Coloring, set: &VertexSet, pool: &[usize]) -> Result<(), CoreError> {
    for comp in g.components_within(set) {
        for v in comp.iter() {
            let color = pool
                .iter()
                .copied()
                .find(|&col| g.neighbors(v).iter().all(|u| c.get(u) != Some(col)))
                .ok_or(CoreError::Stuck(v))?;
            c.set(v, color);
        }
    }
    Ok(())
}

fn pool(colors: impl IntoIterator<Item = usize>) -> Vec<usize> {
    colors.into_iter().collect()
}

fn finish(mut c: Coloring, k: usize, top: &VertexSet) -> Coloring {
    paint(&mut c, top, k);
    c.palette = k;
    c
}

/// Q = 1, 2, 1, 2, 3; A_5 = 2; A_1 greedy in {2..k}; A_2 greedy in
/// {1, 3..k}; C_{1,3} = k.
fn case1(g: &Graph, p: &C5Partition, k: usize) -> Result<Coloring, CoreError> {
    let mut c = color_q(p, [1, 2, 1, 2, 3]);
    paint(&mut c, &p.a[4], 2);
    greedy(g, &mut c, &p.a[0], &pool(2..=k))?;
    greedy(g, &mut c, &p.a[1], &pool(std::iter::once(1).chain(3..=k)))?;
    Ok(finish(c, k, &p.c[0]))
}

fn case2(g: &Graph, p: &C5Partition, k: usize) -> Result<(CoreCase, Coloring), CoreError> {
    if g.is_stable_set(&p.a[1]) {
        // {v1, v3} ∪ A_4 ∪ B_{4,5}, {v2, v4} ∪ A_5 ∪ A_1, {v5} ∪ B_{2,3} ∪ A_2 ∪ A_3.
        let mut c = color_q(p, [1, 2, 1, 2, 3]);
        paint(&mut c, &p.a[3].union(&p.b[3]), 1);
        paint(&mut c, &p.a[4].union(&p.a[0]), 2);
        paint(&mut c, &p.b[1].union(&p.a[1]).union(&p.a[2]), 3);
        return Ok((CoreCase::Case2Stable, finish(c, k, &p.c[0])));
    }
    // Q = 1, 2, 3, 1, 3; A_1 = 3; A_3 = 1; A_2 greedy in {1, 3..k};
    // b_{2,3} = 1; b_{4,5} = 2.
    let mut c = color_q(p, [1, 2, 3, 1, 3]);
    paint(&mut c, &p.a[0], 3);
    paint(&mut c, &p.a[2], 1);
    greedy(g, &mut c, &p.a[1], &pool(std::iter::once(1).chain(3..=k)))?;
    paint(&mut c, &p.b[1], 1);
    paint(&mut c, &p.b[3], 2);
    Ok((CoreCase::Case2Unstable, finish(c, k, &p.c[0])))
}

fn case31(g: &Graph, p: &C5Partition, k: usize) -> Result<(CoreCase, Coloring), CoreError> {
    if !p.a[2].is_empty() {
        // Q = 1, 2, 3, 1, 3; A_2 greedy in {1, 3..k}; A_3 greedy in
        // {1, 2, 4..k}; b_{4,5} = 2; B_{2,3} greedy in {1, 4..k}.
        let mut c = color_q(p, [1, 2, 3, 1, 3]);
        greedy(g, &mut c, &p.a[1], &pool(std::iter::once(1).chain(3..=k)))?;
        greedy(g, &mut c, &p.a[2], &pool([1, 2].into_iter().chain(4..=k)))?;
        paint(&mut c, &p.b[3], 2);
        greedy(g, &mut c, &p.b[1], &pool(std::iter::once(1).chain(4..=k)))?;
        return Ok((CoreCase::Case31WithA3, finish(c, k, &p.c[0])));
    }
    // Q = 3, k, 1, k, 1. B_{4,5} ∪ B_{2,3} in colours 2..k-1 by the
    // two-cliques colouring; in each component K of A_2 the least vertex gets 1
    // and B_{4,5} ∪ (K - a_K) is coloured the same way, then renamed to
    // agree with the first colouring on B_{4,5}.
    let mut c = color_q(p, [3, k, 1, k, 1]);
    let middle: Vec<usize> = (2..k).collect();
    let b = color_with(g, &p.b[3], &p.b[1], &middle)?;
    c.absorb(&b);
    for comp in g.components_within(&p.a[1]) {
        let a_k = comp.first().unwrap();
        c.set(a_k, 1);
        let mut rest = comp.clone();
        rest.remove(a_k);
        let local = color_with(g, &p.b[3], &rest, &middle)?;
        let rename = agreeing_permutation(&local, &b, &p.b[3], &middle);
        for v in rest.iter() {
            c.set(v, rename(local.get(v).unwrap()));
        }
    }
    Ok((CoreCase::Case31WithoutA3, finish(c, k, &p.c[0])))
}

/// A bijection of `colors` sending `from(x)` to `to(x)` for `x` in `on`;
/// colours not fixed that way are paired in increasing order.
fn agreeing_permutation(
    from: &Coloring,
    to: &Coloring,
    on: &VertexSet,
    colors: &[usize],
) -> impl Fn(usize) -> usize {
    let mut pairs: Vec<(usize, usize)> = on
        .iter()
        .map(|x| (from.get(x).unwrap(), to.get(x).unwrap()))
        .collect();
    let sources: Vec<usize> = colors
        .iter()
        .copied()
        .filter(|c| !pairs.iter().any(|p| p.0 == *c))
        .collect();
    let targets: Vec<usize> = colors
        .iter()
        .copied()
        .filter(|c| !pairs.iter().any(|p| p.1 == *c))
        .collect();
    pairs.extend(sources.into_iter().zip(targets));
    move |c| pairs.iter().find(|p| p.0 == c).map_or(c, |p| p.1)
}

/// Q = 1, 2, k, 3, 2; A_2 = 1; A_4 = 2; A_3 greedy in {1..k-1}; B_{2,3}
/// greedy in {1, 3..k-1}; C_{2,4} = k.
fn case32_unstable_a3(g: &Graph, p: &C5Partition, k: usize) -> Result<Coloring, CoreError> {
    let mut c = color_q(p, [1, 2, k, 3, 2]);
    paint(&mut c, &p.a[1], 1);
    paint(&mut c, &p.a[3], 2);
    greedy(g, &mut c, &p.a[2], &pool(1..k))?;
    greedy(g, &mut c, &p.b[1], &pool(std::iter::once(1).chain(3..k)))?;
    Ok(finish(c, k, &p.c[1]))
}

/// {v1, v3, b_{4,5}} ∪ A_4 ∪ A_5 = 1, {v2, v4} = 2,
/// {v5, b_{2,3}} ∪ A_2 ∪ A_3 = 3, C_{2,4} = k.
fn case32_both_ends(_g: &Graph, p: &C5Partition, k: usize) -> Coloring {
    let mut c = color_q(p, [1, 2, 1, 2, 3]);
    paint(&mut c, &p.b[3].union(&p.a[3]).union(&p.a[4]), 1);
    paint(&mut c, &p.b[1].union(&p.a[1]).union(&p.a[2]), 3);
    finish(c, k, &p.c[1])
}

/// Q = 3, 1, 2, 1, 2; A_4 = 2; A_5 = 1; A_3 = 3; B_{4,5} ∪ B_{2,3} in
/// {3..k} by the two-cliques colouring, with a lone b_{4,5} moved to colour k;
/// C_{2,4} = k.
fn case32(g: &Graph, p: &C5Partition, k: usize) -> Result<Coloring, CoreError> {
    let mut c = color_q(p, [3, 1, 2, 1, 2]);
    paint(&mut c, &p.a[3], 2);
    paint(&mut c, &p.a[4], 1);
    paint(&mut c, &p.a[2], 3);
    let upper: Vec<usize> = (3..=k).collect();
    let mut b = color_with(g, &p.b[3], &p.b[1], &upper)?;
    if p.b[3].len() == 1 {
        let lone = p.b[3].first().unwrap();
        let old = b.get(lone).unwrap();
        for col in b.colors.values_mut() {
            if *col == old {
                *col = k;
            } else if *col == k {
                *col = old;
            }
        }
    }
    c.absorb(&b);
    Ok(finish(c, k, &p.c[1]))
}
