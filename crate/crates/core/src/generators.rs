//! Named graphs and seeded random class members.
//!
//! Randomness comes from SplitMix64 seeded with the given 64-bit value
//! (state `s += 0x9e3779b97f4a7c15`, output mixed by the usual two
//! multiply-xorshift rounds). A uniform `f64` is `(next_u64() >> 11) * 2^-53`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::Graph;
use crate::patterns::{class_membership, violation_through, Membership};

/// Parameters of a random graph; the same spec always gives the same graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

pub fn uniform(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `0..bound` (by rejection, so unbiased).
pub fn below(rng: &mut SplitMix64, bound: u64) -> u64 {
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// Erdős–Rényi graph: pairs `(i, j)`, `i < j`, in lexicographic order, each
/// an edge when the next uniform draw is below `p`.
pub fn random_graph(spec: RandomSpec) -> Graph {
    let mut rng = rng(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if uniform(&mut rng) < spec.p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(spec.n, edges).expect("pairs are in range")
}

/// A random class member: [`random_graph`], then while a P6 or diamond
/// remains, delete the largest vertex of the reported witness.
pub fn random_class_graph(spec: RandomSpec) -> Graph {
    repair(random_graph(spec))
}

/// Deletes witness vertices (largest id first) until `g` is a class member.
pub fn repair(mut g: Graph) -> Graph {
    while let Membership::NonMember { witness } = class_membership(&g) {
        let worst = *witness.vertices.iter().max().unwrap();
        g = g.remove_vertex(worst).0;
    }
    g
}

/// A random class member built around the C5 on `0..5`, grown one vertex at
/// a time. Each new vertex gets a uniformly chosen Q-neighbourhood type (one
/// of `A_i`, `B_{i,i+1}`, `C_{i,i+2}`, `F_i`, `Z`) and is joined to each
/// earlier vertex outside Q with probability `p`; a draw that creates a P6
/// or diamond is redrawn, and after 32 failures the vertex is dropped.
/// The output contains the induced C5 `0..5`.
pub fn random_c5_host(spec: RandomSpec) -> Graph {
    c5_host(spec, 21)
}

/// [`random_c5_host`] without `Z` vertices: every vertex outside the cycle
/// has a neighbour on it.
pub fn random_c5_host_without_z(spec: RandomSpec) -> Graph {
    c5_host(spec, 20)
}

const HOST_ATTEMPTS: usize = 32;

fn c5_host(spec: RandomSpec, kinds: u64) -> Graph {
    let mut rng = rng(spec.seed);
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut g = Graph::cycle(5);
    for _ in 5..spec.n {
        let v = g.n();
        for _ in 0..HOST_ATTEMPTS {
            let kind = below(&mut rng, kinds) as usize;
            let i = kind % 5;
            let q: &[usize] = match kind / 5 {
                0 => &[0],
                1 => &[0, 1],
                2 => &[0, 2],
                3 => &[0, 2, 3],
                _ => &[],
            };
            let mut candidate = edges.clone();
            candidate.extend(q.iter().map(|d| ((i + d) % 5, v)));
            for u in 5..v {
                if uniform(&mut rng) < spec.p {
                    candidate.push((u, v));
                }
            }
            let h = Graph::new(v + 1, candidate.iter().copied()).expect("pairs are in range");
            if !violation_through(&h, v) {
                edges = candidate;
                g = h;
                break;
            }
        }
    }
    g
}

/// Mycielski construction: `u` keeps its edges, shadow `n + u` is joined to
/// `N(u)`, and the apex `2n` is joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((u, n + v));
    }
    edges.extend((0..n).map(|u| (n + u, 2 * n)));
    Graph::new(2 * n + 1, edges).expect("construction is simple")
}

/// `M_k`: `M_1 = K_1`, `M_2 = K_2`, `M_{k+1} = mycielskian(M_k)`; `M_3` is
/// C5 and `M_4` the Grötzsch graph (up to isomorphism).
pub fn mycielski_graph(k: usize) -> Graph {
    match k {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => (2..k).fold(Graph::complete(2), |g, _| mycielskian(&g)),
    }
}

/// The complement of the Schläfli graph as the intersection graph of the 27
/// lines on a cubic surface: `a_i` is vertex `i - 1`, `b_i` is `i + 5`, and
/// `c_{ij}` (`i < j`) follow from 12 in lexicographic order.
pub fn schlafli_complement() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .collect();
    let c = |k: usize| 12 + k;
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if i != j && i < j {
                edges.push((i, 6 + j));
                edges.push((j, 6 + i));
            }
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if i == x || i == y {
                edges.push((i, c(k)));
                edges.push((6 + i, c(k)));
            }
        }
    }
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for (l, &(x, y)) in pairs.iter().enumerate().skip(k + 1) {
            if a != x && a != y && b != x && b != y {
                edges.push((c(k), c(l)));
            }
        }
    }
    Graph::new(27, edges).expect("construction is simple")
}

/// `(k, λ, μ)` if `g` is strongly regular.
pub fn strongly_regular_parameters(g: &Graph) -> Option<(usize, usize, usize)> {
    let k = g.degree(0);
    let (mut lambda, mut mu) = (None, None);
    for u in g.vertices() {
        if g.degree(u) != k {
            return None;
        }
        for v in u + 1..g.n() {
            let common = g.neighbors(u).intersection_len(g.neighbors(v));
            let slot = if g.adjacent(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                _ => {}
            }
        }
    }
    Some((k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groetzsch::groetzsch_graph;
    use crate::io::encode_graph6;
    use crate::patterns::{contains_induced, find_induced_c5, is_member};

    fn isomorphic(g: &Graph, h: &Graph) -> bool {
        g.n() == h.n()
            && g.edge_count() == h.edge_count()
            && contains_induced(g, h).unwrap().is_some()
    }

    #[test]
    fn splitmix_reference_stream() {
        // Reference outputs of SplitMix64 from state 0.
        let mut r = rng(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn random_examples() {
        let k1 = random_class_graph(RandomSpec {
            n: 1,
            p: 0.5,
            seed: 0,
        });
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let empty = random_class_graph(RandomSpec {
            n: 12,
            p: 0.0,
            seed: 9,
        });
        assert_eq!((empty.n(), empty.edge_count()), (12, 0));
        let g = random_class_graph(RandomSpec {
            n: 15,
            p: 0.3,
            seed: 7,
        });
        assert!(is_member(&g) && g.n() <= 15);
    }

    #[test]
    fn random_is_deterministic() {
        for seed in 0..20 {
            let spec = RandomSpec {
                n: 20,
                p: 0.3,
                seed,
            };
            assert_eq!(
                encode_graph6(&random_class_graph(spec)),
                encode_graph6(&random_class_graph(spec))
            );
            assert_eq!(
                encode_graph6(&random_c5_host(spec)),
                encode_graph6(&random_c5_host(spec))
            );
        }
    }

    #[test]
    fn c5_hosts_keep_their_cycle() {
        for seed in 0..30 {
            let g = random_c5_host(RandomSpec {
                n: 18,
                p: 0.4,
                seed,
            });
            assert!(is_member(&g));
            assert!(find_induced_c5(&g).is_some());
            assert!((0..5).all(|i| g.adjacent(i, (i + 1) % 5) && !g.adjacent(i, (i + 2) % 5)));
        }
    }

    #[test]
    fn mycielski_examples() {
        assert!(isomorphic(
            &mycielskian(&Graph::complete(2)),
            &Graph::cycle(5)
        ));
        let m = mycielskian(&Graph::cycle(5));
        assert_eq!(m.n(), 11);
        assert!(isomorphic(&m, &groetzsch_graph()));
        assert_eq!(mycielskian(&Graph::path(4)).n(), 9);
        assert!(isomorphic(&mycielski_graph(4), &groetzsch_graph()));
    }

    #[test]
    fn schlafli_complement_shape() {
        let g = schlafli_complement();
        assert_eq!((g.n(), g.edge_count()), (27, 135));
        assert_eq!(strongly_regular_parameters(&g), Some((10, 1, 5)));
        assert!(is_member(&g));
        assert_eq!(
            strongly_regular_parameters(&Graph::cycle(5)),
            Some((2, 0, 1))
        );
        assert_eq!(strongly_regular_parameters(&Graph::path(3)), None);
    }
}
