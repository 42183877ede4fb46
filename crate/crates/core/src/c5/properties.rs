//! The twenty-one structural properties of a C5 partition of a
//! (P6, diamond)-free graph, checked literally on a given graph.

use std::collections::BTreeMap;

use serde::Serialize;

use super::C5Partition;
use crate::graph::{Graph, VertexSet};

pub const PROPERTY_COUNT: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PropertyStatus {
    Holds,
    Violated { witness: Vec<usize>, detail: String },
}

/// Status of properties 1..=21; serialises as a JSON object keyed by number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PropertyReport(pub BTreeMap<usize, PropertyStatus>);

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.0.values().all(|s| *s == PropertyStatus::Holds)
    }

    pub fn violated(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter(|(_, s)| **s != PropertyStatus::Holds)
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn get(&self, property: usize) -> Option<&PropertyStatus> {
        self.0.get(&property)
    }
}

type Violation = Option<(Vec<usize>, String)>;

/// 1-based names for messages.
fn a_name(i: usize) -> String {
    format!("A{}", i % 5 + 1)
}
fn b_name(i: usize) -> String {
    format!("B{}{}", i % 5 + 1, (i + 1) % 5 + 1)
}
fn c_name(i: usize) -> String {
    format!("C{}{}", i % 5 + 1, (i + 2) % 5 + 1)
}
fn f_name(i: usize) -> String {
    format!("F{}", i % 5 + 1)
}

/// First adjacent pair `(x, y)` with `x ∈ xs`, `y ∈ ys`.
fn edge_between(g: &Graph, xs: &VertexSet, ys: &VertexSet) -> Option<(usize, usize)> {
    xs.iter()
        .find_map(|x| g.neighbors_in(x, ys).first().map(|y| (x, y)))
}

/// First non-adjacent pair `(x, y)` of distinct vertices with `x ∈ xs`, `y ∈ ys`.
fn nonedge_between(g: &Graph, xs: &VertexSet, ys: &VertexSet) -> Option<(usize, usize)> {
    xs.iter().find_map(|x| {
        ys.iter()
            .find(|&y| y != x && !g.adjacent(x, y))
            .map(|y| (x, y))
    })
}

/// `x` sees some but not all of `k`: `(x, seen, unseen)`.
fn splits(g: &Graph, x: usize, k: &VertexSet) -> Option<(usize, usize, usize)> {
    let seen = g.neighbors_in(x, k);
    let unseen = k.difference(&seen);
    Some((x, seen.first()?, unseen.first()?))
}

/// Evaluates every property; a property whose hypothesis fails holds.
pub fn verify_properties(g: &Graph, p: &C5Partition) -> PropertyReport {
    let comps = |s: &VertexSet| g.components_within(s);
    let a_comps: Vec<Vec<VertexSet>> = p.a.iter().map(comps).collect();
    let checks: [&dyn Fn() -> Violation; PROPERTY_COUNT] = [
        // (1) each component of A_i is a clique
        &|| {
            (0..5).find_map(|i| {
                a_comps[i].iter().find_map(|k| {
                    nonedge_between(g, k, k).map(|(x, y)| {
                        (
                            vec![x, y],
                            format!(
                                "{x} and {y} share a component of {} but are not adjacent",
                                a_name(i)
                            ),
                        )
                    })
                })
            })
        },
        // (2) A_i and A_{i+1} are anti-complete
        &|| {
            (0..5).find_map(|i| {
                edge_between(g, &p.a[i], &p.a[(i + 1) % 5]).map(|(x, y)| {
                    (
                        vec![x, y],
                        format!("edge between {} and {}", a_name(i), a_name(i + 1)),
                    )
                })
            })
        },
        // (3) A_i and A_{i+2} are complete
        &|| {
            (0..5).find_map(|i| {
                nonedge_between(g, &p.a[i], &p.a[(i + 2) % 5]).map(|(x, y)| {
                    (
                        vec![x, y],
                        format!("non-edge between {} and {}", a_name(i), a_name(i + 2)),
                    )
                })
            })
        },
        // (4) each B_{i,i+1} is a clique
        &|| {
            (0..5).find_map(|i| {
                nonedge_between(g, &p.b[i], &p.b[i])
                    .map(|(x, y)| (vec![x, y], format!("{} is not a clique", b_name(i))))
            })
        },
        // (5) B = B_{i,i+1} ∪ B_{i+2,i+3} for some i
        &|| {
            (0..5).find_map(|i| {
                let j = (i + 1) % 5;
                match (p.b[i].first(), p.b[j].first()) {
                    (Some(x), Some(y)) => Some((
                        vec![x, y],
                        format!("{} and {} are both non-empty", b_name(i), b_name(j)),
                    )),
                    _ => None,
                }
            })
        },
        // (6) B_{i,i+1} is anti-complete to A_i ∪ A_{i+1}
        &|| {
            (0..5).find_map(|i| {
                let a = p.a[i].union(&p.a[(i + 1) % 5]);
                edge_between(g, &p.b[i], &a).map(|(x, y)| {
                    (
                        vec![x, y],
                        format!("{} sees {}", b_name(i), a_name_of(p, y)),
                    )
                })
            })
        },
        // (7) B_{i,i+1} is complete to A_{i-1} ∪ A_{i+2}
        &|| {
            (0..5).find_map(|i| {
                let a = p.a[(i + 4) % 5].union(&p.a[(i + 2) % 5]);
                nonedge_between(g, &p.b[i], &a).map(|(x, y)| {
                    (
                        vec![x, y],
                        format!("{} misses a vertex of {}", b_name(i), a_name_of(p, y)),
                    )
                })
            })
        },
        // (8) each C_{i,i+2} is stable
        &|| {
            (0..5).find_map(|i| {
                edge_between(g, &p.c[i], &p.c[i])
                    .map(|(x, y)| (vec![x, y], format!("edge inside {}", c_name(i))))
            })
        },
        // (9) c ∈ C_{i,i+2} is complete or anti-complete to each component of A_i and A_{i+2}
        &|| {
            (0..5).find_map(|i| {
                p.c[i].iter().find_map(|c| {
                    [i, (i + 2) % 5].iter().find_map(|&j| {
                        a_comps[j]
                            .iter()
                            .find_map(|k| splits(g, c, k))
                            .map(|(c, s, u)| {
                                (
                                    vec![c, s, u],
                                    format!(
                                        "{c} in {} splits a component of {}",
                                        c_name(i),
                                        a_name(j)
                                    ),
                                )
                            })
                    })
                })
            })
        },
        // (10) c ∈ C_{i,i+2} has at most one neighbour in each component of A_{i+1}, A_{i+3}, A_{i+4}
        &|| {
            (0..5).find_map(|i| {
                p.c[i].iter().find_map(|c| {
                    [1, 3, 4].iter().find_map(|&d| {
                        let j = (i + d) % 5;
                        a_comps[j].iter().find_map(|k| {
                            let seen = g.neighbors_in(c, k).to_vec();
                            (seen.len() >= 2).then(|| {
                                (
                                    vec![c, seen[0], seen[1]],
                                    format!(
                                        "{c} in {} has two neighbours in a component of {}",
                                        c_name(i),
                                        a_name(j)
                                    ),
                                )
                            })
                        })
                    })
                })
            })
        },
        // (11) c ∈ C_{i,i+2} is anti-complete to each non-trivial component of A_{i+1}
        &|| {
            (0..5).find_map(|i| {
                let j = (i + 1) % 5;
                a_comps[j].iter().filter(|k| k.len() >= 2).find_map(|k| {
                    edge_between(g, &p.c[i], k).map(|(c, a)| {
                        (
                            vec![c, a],
                            format!(
                                "{c} in {} sees a non-trivial component of {}",
                                c_name(i),
                                a_name(j)
                            ),
                        )
                    })
                })
            })
        },
        // (12) C_{i,i+2} is anti-complete to B_{j,j+1} for j ≠ i+3, and each
        // c has at most one neighbour in B_{i+3,i+4}
        &|| {
            (0..5).find_map(|i| {
                let far = (i + 3) % 5;
                let other = (0..5).find_map(|j| {
                    (j != far)
                        .then(|| edge_between(g, &p.c[i], &p.b[j]))
                        .flatten()
                        .map(|(c, b)| (vec![c, b], format!("{} sees {}", c_name(i), b_name(j))))
                });
                other.or_else(|| {
                    p.c[i].iter().find_map(|c| {
                        let seen = g.neighbors_in(c, &p.b[far]).to_vec();
                        (seen.len() >= 2).then(|| {
                            (
                                vec![c, seen[0], seen[1]],
                                format!("{c} has two neighbours in {}", b_name(far)),
                            )
                        })
                    })
                })
            })
        },
        // (13) |F_i| ≤ 1 and F is stable
        &|| {
            let size = (0..5).find_map(|i| {
                let v = p.f[i].to_vec();
                (v.len() >= 2)
                    .then(|| (vec![v[0], v[1]], format!("{} has two vertices", f_name(i))))
            });
            size.or_else(|| {
                let f = p.f_all();
                edge_between(g, &f, &f).map(|(x, y)| (vec![x, y], "F is not stable".to_string()))
            })
        },
        // (14) F_i is anti-complete to A_{i+2} ∪ A_{i+3}
        &|| {
            (0..5).find_map(|i| {
                let a = p.a[(i + 2) % 5].union(&p.a[(i + 3) % 5]);
                edge_between(g, &p.f[i], &a).map(|(x, y)| {
                    (
                        vec![x, y],
                        format!("{} sees {}", f_name(i), a_name_of(p, y)),
                    )
                })
            })
        },
        // (15) f ∈ F_i is complete or anti-complete to each component of A_i
        &|| {
            (0..5).find_map(|i| {
                p.f[i].iter().find_map(|f| {
                    a_comps[i]
                        .iter()
                        .find_map(|k| splits(g, f, k))
                        .map(|(f, s, u)| {
                            (
                                vec![f, s, u],
                                format!("{f} in {} splits a component of {}", f_name(i), a_name(i)),
                            )
                        })
                })
            })
        },
        // (16) f ∈ F_i has at most one neighbour in each component of A_{i+1} and A_{i+4}
        &|| {
            (0..5).find_map(|i| {
                p.f[i].iter().find_map(|f| {
                    [1, 4].iter().find_map(|&d| {
                        let j = (i + d) % 5;
                        a_comps[j].iter().find_map(|k| {
                            let seen = g.neighbors_in(f, k).to_vec();
                            (seen.len() >= 2).then(|| {
                                (
                                    vec![f, seen[0], seen[1]],
                                    format!(
                                        "{f} in {} has two neighbours in a component of {}",
                                        f_name(i),
                                        a_name(j)
                                    ),
                                )
                            })
                        })
                    })
                })
            })
        },
        // (17) F_i is anti-complete to B_{j,j+1} for j ≠ i+2 and complete to B_{i+2,i+3}
        &|| {
            (0..5).find_map(|i| {
                let near = (i + 2) % 5;
                let anti = (0..5).filter(|&j| j != near).find_map(|j| {
                    edge_between(g, &p.f[i], &p.b[j])
                        .map(|(x, y)| (vec![x, y], format!("{} sees {}", f_name(i), b_name(j))))
                });
                anti.or_else(|| {
                    nonedge_between(g, &p.f[i], &p.b[near]).map(|(x, y)| {
                        (
                            vec![x, y],
                            format!("{} misses a vertex of {}", f_name(i), b_name(near)),
                        )
                    })
                })
            })
        },
        // (18) F_i is anti-complete to C_{j,j+2} for j ≠ i-1
        &|| {
            (0..5).find_map(|i| {
                (0..5).filter(|&j| j != (i + 4) % 5).find_map(|j| {
                    edge_between(g, &p.f[i], &p.c[j])
                        .map(|(x, y)| (vec![x, y], format!("{} sees {}", f_name(i), c_name(j))))
                })
            })
        },
        // (19) if A_i is not stable, A_{i+2}, A_{i+3}, B_{i+1,i+2} and B_{i-2,i-1} are empty
        &|| {
            (0..5).find_map(|i| {
                let (x, y) = edge_between(g, &p.a[i], &p.a[i])?;
                let must_be_empty = [
                    (&p.a[(i + 2) % 5], a_name(i + 2)),
                    (&p.a[(i + 3) % 5], a_name(i + 3)),
                    (&p.b[(i + 1) % 5], b_name(i + 1)),
                    (&p.b[(i + 3) % 5], b_name(i + 3)),
                ];
                must_be_empty.iter().find_map(|(set, name)| {
                    set.first().map(|w| {
                        (
                            vec![x, y, w],
                            format!("{} is not stable but {name} is not empty", a_name(i)),
                        )
                    })
                })
            })
        },
        // (20) if A_i is not empty, B_{i+1,i+2} and B_{i-2,i-1} have at most one vertex
        &|| {
            (0..5).find_map(|i| {
                let a = p.a[i].first()?;
                [(i + 1) % 5, (i + 3) % 5].iter().find_map(|&j| {
                    let b = p.b[j].to_vec();
                    (b.len() >= 2).then(|| {
                        (
                            vec![a, b[0], b[1]],
                            format!(
                                "{} is not empty but {} has two vertices",
                                a_name(i),
                                b_name(j)
                            ),
                        )
                    })
                })
            })
        },
        // (21) Z is anti-complete to A ∪ B
        &|| {
            let ab = p.a_all().union(&p.b_all());
            edge_between(g, &p.z, &ab).map(|(x, y)| (vec![x, y], "Z sees A ∪ B".to_string()))
        },
    ];
    PropertyReport(
        checks
            .iter()
            .enumerate()
            .map(|(k, check)| {
                let status = match check() {
                    None => PropertyStatus::Holds,
                    Some((witness, detail)) => PropertyStatus::Violated { witness, detail },
                };
                (k + 1, status)
            })
            .collect(),
    )
}

fn a_name_of(p: &C5Partition, v: usize) -> String {
    (0..5)
        .find(|&i| p.a[i].contains(v))
        .map(a_name)
        .unwrap_or_else(|| "A".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c5::build_partition;
    use crate::generators::{random_c5_host, RandomSpec};
    use crate::graph::Graph;
    use crate::patterns::find_triangle;

    const Q: [usize; 5] = [0, 1, 2, 3, 4];

    fn with_cycle(n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend_from_slice(extra);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn bare_cycle_satisfies_everything() {
        let r = verify_properties(
            &Graph::cycle(5),
            &build_partition(&Graph::cycle(5), Q).unwrap(),
        );
        assert!(r.all_hold());
        assert_eq!(r.0.len(), PROPERTY_COUNT);
    }

    #[test]
    fn c_edge_breaks_property_8() {
        // 5 and 6 both in C_{1,3}, joined by an edge.
        let g = with_cycle(7, &[(0, 5), (2, 5), (0, 6), (2, 6), (5, 6)]);
        let r = verify_properties(&g, &build_partition(&g, Q).unwrap());
        match r.get(8) {
            Some(PropertyStatus::Violated { witness, .. }) => {
                assert_eq!(witness, &vec![5, 6]);
                assert!(g.adjacent(5, 6));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_f_vertices_break_property_13() {
        let g = with_cycle(7, &[(0, 5), (2, 5), (3, 5), (0, 6), (2, 6), (3, 6)]);
        let r = verify_properties(&g, &build_partition(&g, Q).unwrap());
        assert_eq!(r.violated(), vec![13]);
    }

    #[test]
    fn members_around_a_cycle_satisfy_everything() {
        for seed in 0..60 {
            let g = random_c5_host(RandomSpec {
                n: 16,
                p: 0.45,
                seed,
            });
            let p = build_partition(&g, Q).unwrap();
            let r = verify_properties(&g, &p);
            assert!(r.all_hold(), "seed {seed}: {:?}", r.violated());
            let cf = p.c_all().union(&p.f_all());
            assert!(find_triangle(&g.induced(&cf).0).is_none());
        }
    }

    #[test]
    fn report_serializes_by_number() {
        let g = with_cycle(7, &[(0, 5), (2, 5), (3, 5), (0, 6), (2, 6), (3, 6)]);
        let r = verify_properties(&g, &build_partition(&g, Q).unwrap());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["1"], "holds");
        assert_eq!(json["13"]["violated"]["witness"], serde_json::json!([5, 6]));
    }
}
