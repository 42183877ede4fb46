//! The partition of `V(G) \ Q` around an induced C5 `Q = (v1, ..., v5)` by
//! neighbourhood in Q, and the relabelings of Q used when colouring.
//!
//! Indices are 0-based and taken mod 5: `q[i]` is `v_{i+1}`, `a[i]` is
//! `A_{i+1}`, `b[i]` is `B_{i+1,i+2}`, `c[i]` is `C_{i+1,i+3}` and `f[i]` is
//! `F_{i+1}`, whose vertices see `q[i]`, `q[i-2]` and `q[i+2]`.

mod properties;

pub use properties::{verify_properties, PropertyReport, PropertyStatus, PROPERTY_COUNT};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::patterns::{find_induced_c5, PatternKind, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C5Partition {
    pub q: [usize; 5],
    pub a: [VertexSet; 5],
    pub b: [VertexSet; 5],
    pub c: [VertexSet; 5],
    pub f: [VertexSet; 5],
    pub z: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} is not a vertex of a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("{0:?} does not induce a C5 in this order")]
    NotInducedC5([usize; 5]),
    #[error("vertex {vertex} sees three consecutive cycle vertices; diamond {:?}", witness.vertices)]
    Diamond {
        vertex: usize,
        witness: PatternWitness,
    },
    #[error("B meets two consecutive positions ({0} and {1}) and cannot be rotated into B_{{2,3}} ∪ B_{{4,5}}")]
    BNotNormalizable(usize, usize),
}

/// Index `i` reduced mod 5, for signed offsets.
pub fn m5(i: isize) -> usize {
    i.rem_euclid(5) as usize
}

impl C5Partition {
    fn empty(n: usize, q: [usize; 5]) -> Self {
        let e = || std::array::from_fn(|_| VertexSet::new(n));
        C5Partition {
            q,
            a: e(),
            b: e(),
            c: e(),
            f: e(),
            z: VertexSet::new(n),
        }
    }

    pub fn universe(&self) -> usize {
        self.z.universe()
    }

    pub fn q_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.universe(), self.q)
    }

    fn union_of(sets: &[VertexSet; 5]) -> VertexSet {
        let mut out = VertexSet::new(sets[0].universe());
        for s in sets {
            out.union_with(s);
        }
        out
    }

    pub fn a_all(&self) -> VertexSet {
        Self::union_of(&self.a)
    }

    pub fn b_all(&self) -> VertexSet {
        Self::union_of(&self.b)
    }

    pub fn c_all(&self) -> VertexSet {
        Self::union_of(&self.c)
    }

    pub fn f_all(&self) -> VertexSet {
        Self::union_of(&self.f)
    }

    /// Relabels so that new position `k` is old position `k - r`.
    pub fn rotate(&self, r: usize) -> C5Partition {
        let at = |k: usize| (k + 5 - r % 5) % 5;
        C5Partition {
            q: std::array::from_fn(|k| self.q[at(k)]),
            a: std::array::from_fn(|k| self.a[at(k)].clone()),
            b: std::array::from_fn(|k| self.b[at(k)].clone()),
            c: std::array::from_fn(|k| self.c[at(k)].clone()),
            f: std::array::from_fn(|k| self.f[at(k)].clone()),
            z: self.z.clone(),
        }
    }

    /// Reflection of the cycle fixing position `axis`: new position `k` is
    /// old position `2·axis - k`. An involution.
    pub fn reflect(&self, axis: usize) -> C5Partition {
        let at = |k: usize, extra: isize| m5(2 * axis as isize - k as isize - extra);
        C5Partition {
            q: std::array::from_fn(|k| self.q[at(k, 0)]),
            a: std::array::from_fn(|k| self.a[at(k, 0)].clone()),
            b: std::array::from_fn(|k| self.b[at(k, 1)].clone()),
            c: std::array::from_fn(|k| self.c[at(k, 2)].clone()),
            f: std::array::from_fn(|k| self.f[at(k, 0)].clone()),
            z: self.z.clone(),
        }
    }

    /// Rotates so that `B ⊆ B_{2,3} ∪ B_{4,5}` and returns the rotation used.
    /// The identity when B is empty.
    pub fn normalize_rotation(&self) -> Result<(C5Partition, usize), PartitionError> {
        let nonempty: Vec<usize> = (0..5).filter(|&i| !self.b[i].is_empty()).collect();
        for &i in &nonempty {
            if !self.b[(i + 1) % 5].is_empty() {
                return Err(PartitionError::BNotNormalizable(i, (i + 1) % 5));
            }
        }
        let r = match nonempty.as_slice() {
            [] => 0,
            [j] => m5(1 - *j as isize),
            [j, k] => {
                // The pair is {x, x+2}; send x to position 1.
                let x = if (j + 2) % 5 == *k { *j } else { *k };
                m5(1 - x as isize)
            }
            _ => unreachable!("three positions of Z_5 always include two consecutive ones"),
        };
        Ok((self.rotate(r), r))
    }

    /// Which set holds `v`, as text such as `"A1"`, `"C24"` or `"Q3"`.
    pub fn set_name(&self, v: usize) -> Option<String> {
        if let Some(i) = self.q.iter().position(|&x| x == v) {
            return Some(format!("Q{}", i + 1));
        }
        for i in 0..5 {
            let (p, pp, ppp) = (i + 1, (i + 1) % 5 + 1, (i + 2) % 5 + 1);
            if self.a[i].contains(v) {
                return Some(format!("A{p}"));
            }
            if self.b[i].contains(v) {
                return Some(format!("B{p}{pp}"));
            }
            if self.c[i].contains(v) {
                return Some(format!("C{p}{ppp}"));
            }
            if self.f[i].contains(v) {
                return Some(format!("F{p}"));
            }
        }
        self.z.contains(v).then(|| "Z".to_string())
    }
}

/// Checks that `q` induces a C5 with edges `q[i] q[i+1]`.
pub fn check_c5(g: &Graph, q: [usize; 5]) -> Result<(), PartitionError> {
    for &v in &q {
        if v >= g.n() {
            return Err(PartitionError::InvalidVertex {
                vertex: v,
                n: g.n(),
            });
        }
    }
    let ok = (0..5).all(|i| {
        q[i] != q[(i + 1) % 5]
            && q[i] != q[(i + 2) % 5]
            && g.adjacent(q[i], q[(i + 1) % 5])
            && !g.adjacent(q[i], q[(i + 2) % 5])
    });
    if ok {
        Ok(())
    } else {
        Err(PartitionError::NotInducedC5(q))
    }
}

/// Sorts every vertex outside `q` by its neighbourhood in `q`.
pub fn build_partition(g: &Graph, q: [usize; 5]) -> Result<C5Partition, PartitionError> {
    check_c5(g, q)?;
    let mut p = C5Partition::empty(g.n(), q);
    for v in g.vertices().filter(|v| !q.contains(v)) {
        let mask = (0..5).fold(0u8, |m, i| m | (g.adjacent(v, q[i]) as u8) << i);
        let has = |i: usize| mask >> (i % 5) & 1 == 1;
        let size = mask.count_ones();
        let slot = match size {
            0 => Some(&mut p.z),
            1 => Some(&mut p.a[mask.trailing_zeros() as usize]),
            2 => {
                let i = (0..5)
                    .find(|&i| has(i) && (has(i + 1) || has(i + 2)))
                    .unwrap();
                Some(if has(i + 1) { &mut p.b[i] } else { &mut p.c[i] })
            }
            3 => (0..5)
                .find(|&i| has(i) && has(i + 2) && has(i + 3))
                .map(|i| &mut p.f[i]),
            _ => None,
        };
        match slot {
            Some(set) => {
                set.insert(v);
            }
            None => {
                let i = (0..5)
                    .find(|&i| has(i) && has(i + 1) && has(i + 2))
                    .unwrap();
                let witness = PatternWitness {
                    pattern: PatternKind::Diamond,
                    vertices: vec![v, q[(i + 1) % 5], q[i], q[(i + 2) % 5]],
                };
                return Err(PartitionError::Diamond { vertex: v, witness });
            }
        }
    }
    Ok(p)
}

/// The lexicographically least induced C5 (oriented with `v2 < v5`) and its
/// partition, or `None` if `g` has no induced C5.
pub fn partition_of(g: &Graph) -> Option<Result<C5Partition, PartitionError>> {
    let w = find_induced_c5(g)?;
    let q: [usize; 5] = w.vertices.try_into().expect("C5 witness has five vertices");
    Some(build_partition(g, q))
}
