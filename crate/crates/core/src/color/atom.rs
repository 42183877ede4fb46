//! The `(ω + 3)`-colouring of an imperfect atom with clique number at least
//! four: `Q ∪ A ∪ B ∪ C_{i,i+2}` in `1..=ω` (with `C_{i,i+2}` on `ω`), each
//! component of `Z` in `1..ω`, and `(C ∪ F) \ C_{i,i+2}` in `ω+1..=ω+3`.

use thiserror::Error;

use super::core::{color_core, CoreError};
use super::exact::color_exact_bounded;
use super::verify_coloring;
use super::zcomp::{color_z_component, ZError};
use crate::c5::{build_partition, C5Partition, PartitionError};
use crate::graph::{Coloring, Graph};
use crate::oracles::clique_number;
use crate::patterns::{class_membership, Membership, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("graph is not (P6, diamond)-free: {} {:?}", .0.pattern, .0.vertices)]
    NonMember(PatternWitness),
    #[error("partition does not match the graph")]
    PartitionMismatch,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("clique number {0} is below 4")]
    SmallClique(usize),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Z(#[from] ZError),
    #[error("(C ∪ F) minus C_{{i,i+2}} has no 3-colouring")]
    CfNotThreeColorable,
    #[error("assembled colouring is invalid: {0}")]
    InternalInconsistency(String),
}

/// A 3-colouring (colours 1, 2, 3) of `(C ∪ F) \ C_{i,i+2}`, `i` 1-based.
pub fn color_cf_rest(g: &Graph, p: &C5Partition, i: usize) -> Result<Coloring, AtomError> {
    let rest = p.c_all().union(&p.f_all()).difference(&p.c[(i + 4) % 5]);
    let (sub, map) = g.induced(&rest);
    let c = color_exact_bounded(&sub, 3).ok_or(AtomError::CfNotThreeColorable)?;
    Ok(c.relabel(&map))
}

pub fn color_imperfect_atom(g: &Graph, p: &C5Partition) -> Result<Coloring, AtomError> {
    if let Membership::NonMember { witness } = class_membership(g) {
        return Err(AtomError::NonMember(witness));
    }
    if build_partition(g, p.q)? != *p {
        return Err(AtomError::PartitionMismatch);
    }
    let (omega, _) = clique_number(g);
    if omega < 4 {
        return Err(AtomError::SmallClique(omega));
    }
    let (p, _) = p.normalize_rotation()?;
    let core = color_core(g, &p, omega)?;
    let mut out = core.coloring.clone();
    for k in g.components_within(&p.z) {
        let (_, c) = color_z_component(g, &p, &k, omega)?;
        out.absorb(&c);
    }
    // color_core reports i in the labels of its input, here the rotated p.
    let cf = color_cf_rest(g, &p, core.i)?;
    out.absorb(&cf.shifted(omega));
    out.palette = omega + 3;
    verify_coloring(g, &out).map_err(|e| AtomError::InternalInconsistency(e.to_string()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: [usize; 5] = [0, 1, 2, 3, 4];

    fn with_cycle(n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend_from_slice(extra);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn k4_glued_at_v1() {
        let g = with_cycle(8, &[(0, 5), (0, 6), (0, 7), (5, 6), (5, 7), (6, 7)]);
        let p = build_partition(&g, Q).unwrap();
        let c = color_imperfect_atom(&g, &p).unwrap();
        assert_eq!(c.palette, 7);
        assert!(verify_coloring(&g, &c).is_ok());
    }

    #[test]
    fn cf_rest_examples() {
        let g = Graph::cycle(5);
        let p = build_partition(&g, Q).unwrap();
        assert!(color_cf_rest(&g, &p, 1).unwrap().is_empty());
        // One vertex in C_{2,4}, i = 1.
        let g = with_cycle(6, &[(1, 5), (3, 5)]);
        let p = build_partition(&g, Q).unwrap();
        assert_eq!(color_cf_rest(&g, &p, 1).unwrap().get(5), Some(1));
        assert!(color_cf_rest(&g, &p, 2).unwrap().is_empty());
    }

    #[test]
    fn cf_rest_of_realized_labellings() {
        use crate::groetzsch::{enumerate_labellings, realize_labelling, Domains};
        for l in enumerate_labellings(&Domains::initial()) {
            let g = realize_labelling(&l);
            let p = build_partition(&g, [11, 12, 13, 14, 15]).unwrap();
            for i in 1..=5 {
                let c = color_cf_rest(&g, &p, i).unwrap();
                assert!(c.max_color() <= 3);
                assert_eq!(c.len(), 11 - p.c[i - 1].len());
            }
        }
    }

    #[test]
    fn precondition_errors() {
        let g = Graph::cycle(5);
        let p = build_partition(&g, Q).unwrap();
        assert_eq!(color_imperfect_atom(&g, &p), Err(AtomError::SmallClique(2)));
        let h = with_cycle(6, &[(0, 5)]);
        assert_eq!(
            color_imperfect_atom(&h, &p),
            Err(AtomError::PartitionMismatch)
        );
    }
}
