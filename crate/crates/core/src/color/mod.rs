//! The colouring driver and the pieces it assembles.

mod atom;
mod core;
mod exact;
mod two_cliques;
mod zcomp;

pub use self::core::{color_core, CoreCase, CoreColoringResult, CoreError};
pub use atom::{color_cf_rest, color_imperfect_atom, AtomError};
pub use exact::color_exact_bounded;
pub use two_cliques::{two_cliques_color, TwoCliquesError};
pub use zcomp::{color_z_component, ZComponentAnalysis, ZError};

use serde::Serialize;
use thiserror::Error;

use crate::c5::{build_partition, PartitionError};
use crate::decompose::{
    find_clique_cutset, find_comparable_pair, merge_colorings_across_cutset, AtomMethod,
    CutsetError, DecompositionTrace, MergeError, Step,
};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::oracles::clique_number;
use crate::patterns::{class_membership, find_induced_c5, Membership, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum ColoringViolation {
    #[error("vertex {vertex} is not coloured")]
    Uncolored { vertex: usize },
    #[error("edge ({u}, {v}) has both ends coloured {color}")]
    Monochromatic { u: usize, v: usize, color: usize },
    #[error("vertex {vertex} has colour {color} outside 1..={palette}")]
    OutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("vertex {vertex} is not a vertex of the graph")]
    UnknownVertex { vertex: usize },
}

/// Checks that `c` colours exactly the vertices of `g`, within its palette,
/// with no monochromatic edge. Reports the first problem in vertex order.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<(), ColoringViolation> {
    if let Some(&vertex) = c.colors.keys().find(|&&v| v >= g.n()) {
        return Err(ColoringViolation::UnknownVertex { vertex });
    }
    for v in g.vertices() {
        let Some(color) = c.get(v) else {
            return Err(ColoringViolation::Uncolored { vertex: v });
        };
        if color == 0 || color > c.palette {
            return Err(ColoringViolation::OutOfPalette {
                vertex: v,
                color,
                palette: c.palette,
            });
        }
    }
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return Err(ColoringViolation::Monochromatic {
                u,
                v,
                color: c.get(u).unwrap(),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is not (P6, diamond)-free: {} {:?}", .0.pattern, .0.vertices)]
    NonMember(PatternWitness),
    #[error("no {0}-colouring found for a leaf without induced C5")]
    PerfectLeaf(usize),
    #[error("no 6-colouring found for a leaf with clique number at most 3")]
    SmallCliqueLeaf,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Atom(#[from] AtomError),
    #[error(transparent)]
    Merge(#[from] MergeError),
    #[error(transparent)]
    Cutset(#[from] CutsetError),
    #[error("final colouring is invalid: {0}")]
    Invalid(ColoringViolation),
}

/// Colours a (P6, diamond)-free graph with at most `ω + 3` colours.
///
/// Reductions are applied in a fixed order: split into components, remove
/// dominated vertices one at a time, split on a clique cutset, and finally
/// colour the leaf. The trace records every step with original vertex ids.
pub fn color(g: &Graph) -> Result<(Coloring, DecompositionTrace), ColorError> {
    if let Membership::NonMember { witness } = class_membership(g) {
        return Err(ColorError::NonMember(witness));
    }
    let mut trace = DecompositionTrace::default();
    let map: Vec<usize> = g.vertices().collect();
    let coloring = solve(g, g, &map, &mut trace)?;
    verify_coloring(g, &coloring).map_err(ColorError::Invalid)?;
    Ok((coloring, trace))
}

fn global(set: &VertexSet, map: &[usize]) -> Vec<usize> {
    set.iter().map(|v| map[v]).collect()
}

/// Colours `sub`, whose vertex `v` is vertex `map[v]` of `root`; the result
/// is keyed by root ids.
fn solve(
    root: &Graph,
    sub: &Graph,
    map: &[usize],
    trace: &mut DecompositionTrace,
) -> Result<Coloring, ColorError> {
    if sub.n() == 0 {
        return Ok(Coloring::new(0));
    }
    let components = sub.components();
    if components.len() > 1 {
        trace.push(Step::ComponentSplit {
            parts: components.iter().map(|c| global(c, map)).collect(),
        });
        let mut out = Coloring::new(0);
        for part in &components {
            let (g, local) = sub.induced(part);
            let inner: Vec<usize> = local.iter().map(|&v| map[v]).collect();
            out.absorb(&solve(root, &g, &inner, trace)?);
        }
        return Ok(out);
    }
    if let Some((u, v)) = find_comparable_pair(sub) {
        trace.push(Step::DominatedRemoval {
            scope: map.to_vec(),
            kept: map[u],
            removed: map[v],
        });
        let (g, local) = sub.remove_vertex(v);
        let inner: Vec<usize> = local.iter().map(|&x| map[x]).collect();
        let mut out = solve(root, &g, &inner, trace)?;
        let color = out.get(map[u]).expect("kept vertex is coloured");
        out.set(map[v], color);
        return Ok(out);
    }
    if let Some(cut) = find_clique_cutset(sub)? {
        trace.push(Step::CutsetSplit {
            cutset: global(&cut.cutset, map),
            side1: global(&cut.side1, map),
            side2: global(&cut.side2, map),
        });
        let mut blocks = Vec::with_capacity(2);
        for side in [&cut.side1, &cut.side2] {
            let (g, local) = sub.induced(&side.union(&cut.cutset));
            let inner: Vec<usize> = local.iter().map(|&x| map[x]).collect();
            blocks.push(solve(root, &g, &inner, trace)?);
        }
        let k = root.vertex_set(global(&cut.cutset, map));
        return Ok(merge_colorings_across_cutset(
            root, &blocks[0], &blocks[1], &k,
        )?);
    }
    let vertices = map.to_vec();
    let (omega, _) = clique_number(sub);
    let Some(c5) = find_induced_c5(sub) else {
        let local = color_exact_bounded(sub, omega).ok_or(ColorError::PerfectLeaf(omega))?;
        let coloring = local.relabel(map);
        trace.push(Step::PerfectLeaf {
            vertices,
            coloring: coloring.clone(),
        });
        return Ok(coloring);
    };
    let (local, method) = if omega <= 3 {
        let mut c = color_exact_bounded(sub, 6).ok_or(ColorError::SmallCliqueLeaf)?;
        c.palette = c.max_color();
        (c, AtomMethod::SmallCliqueSearch)
    } else {
        let q: [usize; 5] = c5
            .vertices
            .try_into()
            .expect("C5 witness has five vertices");
        let p = build_partition(sub, q)?;
        (color_imperfect_atom(sub, &p)?, AtomMethod::Structural)
    };
    let coloring = local.relabel(map);
    trace.push(Step::ImperfectAtomLeaf {
        vertices,
        method,
        coloring: coloring.clone(),
    });
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_class_graph, schlafli_complement, RandomSpec};
    use crate::groetzsch::groetzsch_graph;
    use crate::patterns::diamond;

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            verify_coloring(&c5, &Coloring::from_dense(3, &[1, 2, 1, 2, 3])),
            Ok(())
        );
        assert_eq!(
            verify_coloring(&Graph::complete(2), &Coloring::from_dense(1, &[1, 1])),
            Err(ColoringViolation::Monochromatic {
                u: 0,
                v: 1,
                color: 1
            })
        );
        assert_eq!(
            verify_coloring(&c5, &Coloring::from_dense(3, &[1, 2, 1, 2])),
            Err(ColoringViolation::Uncolored { vertex: 4 })
        );
        assert!(matches!(
            verify_coloring(&c5, &Coloring::from_dense(2, &[1, 2, 1, 2, 3])),
            Err(ColoringViolation::OutOfPalette { vertex: 4, .. })
        ));
    }

    #[test]
    fn driver_examples() {
        let (c, _) = color(&Graph::empty(1)).unwrap();
        assert_eq!(c.palette, 1);
        let (c, trace) = color(&Graph::cycle(5)).unwrap();
        assert_eq!(c.palette, 3);
        assert!(matches!(
            trace.steps.as_slice(),
            [Step::ImperfectAtomLeaf {
                method: AtomMethod::SmallCliqueSearch,
                ..
            }]
        ));
        let (c, _) = color(&groetzsch_graph()).unwrap();
        assert_eq!(c.palette, 4);
        assert!(matches!(color(&diamond()), Err(ColorError::NonMember(_))));
        let (c, _) = color(&Graph::empty(0)).unwrap();
        assert_eq!(c.palette, 0);
    }

    #[test]
    fn schlafli_complement_takes_six() {
        let g = schlafli_complement();
        let (c, _) = color(&g).unwrap();
        assert_eq!(c.palette, 6);
    }

    #[test]
    fn traces_replay_to_the_same_colouring() {
        for seed in 0..60 {
            let g = random_class_graph(RandomSpec {
                n: 18,
                p: 0.3,
                seed,
            });
            let (c, trace) = color(&g).unwrap();
            trace.check(&g).unwrap();
            assert_eq!(trace.replay(&g).unwrap(), c, "seed {seed}");
        }
    }
}
