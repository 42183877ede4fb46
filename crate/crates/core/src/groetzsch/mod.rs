//! The Grötzsch graph and the search over its labellings: assignments of
//! each vertex to some `F_i` or `C_{i,i+2}` around a fixed C5, kept only
//! when the union with the C5 stays (P6, diamond)-free.

mod label;

pub use label::{
    format_labelling, parse_labelling, Label, LabelSet, Labelling, LabellingParseError,
    LABEL_VALUES,
};

use crate::graph::Graph;
use crate::patterns::{is_member, violation_through};

pub const GROETZSCH_EDGES: [(usize, usize); 20] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 7),
    (1, 10),
    (2, 6),
    (2, 8),
    (3, 7),
    (3, 9),
    (4, 8),
    (4, 10),
    (5, 6),
    (5, 9),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 10),
    (6, 10),
];

/// Vertex 0 is the centre, 1..=5 its neighbours, 6..=10 the outer 5-cycle.
pub fn groetzsch_graph() -> Graph {
    Graph::new(11, GROETZSCH_EDGES).expect("fixed edge list is valid")
}

/// Candidate labels per Grötzsch vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Domains(pub [LabelSet; 11]);

impl Domains {
    pub fn full() -> Domains {
        Domains([LabelSet::ALL; 11])
    }

    /// The starting point of the search: vertex 0 in `{1, 25}`, all other
    /// vertices unconstrained.
    pub fn initial() -> Domains {
        let mut d = Domains::full();
        d.0[0] = LabelSet::of(&[Label::f(0), Label::c(4)]);
        d
    }

    pub fn fixed(l: &Labelling) -> Domains {
        Domains(l.map(LabelSet::single))
    }

    pub fn has_empty(&self) -> bool {
        self.0.iter().any(|d| d.is_empty())
    }

    /// The labelling if every domain is a singleton.
    pub fn labelling(&self) -> Option<Labelling> {
        let mut out = [Label::f(0); 11];
        for (slot, d) in out.iter_mut().zip(self.0) {
            *slot = d.only()?;
        }
        Some(out)
    }

    pub fn contains(&self, l: &Labelling) -> bool {
        self.0.iter().zip(l).all(|(d, &x)| d.contains(x))
    }

    /// Number of labellings inside the domains.
    pub fn product(&self) -> u128 {
        self.0.iter().map(|d| d.len() as u128).product()
    }
}

/// Applies the three pruning rules until nothing changes.
///
/// * A vertex labelled `C_{i,i+2}` restricts each neighbour to the other
///   pair labels and `F_{i+1}`.
/// * A vertex labelled `F_i` restricts each neighbour to `C_{i-1,i+1}`.
/// * A vertex with two neighbours labelled `C_{i,i+2}` loses `C_{i,i+2}`,
///   `C_{i-2,i}`, `C_{i+2,i+4}`, `F_i` and `F_{i+2}`.
pub fn apply_rules(domains: &Domains) -> Domains {
    let h = groetzsch_graph();
    let mut d = *domains;
    loop {
        let before = d;
        for v in 0..11 {
            if let Some(l) = d.0[v].only() {
                let allowed = if let Some(i) = l.c_index() {
                    LabelSet::pairs().without(l).with(Label::f(i + 1))
                } else {
                    let i = l.f_index().unwrap();
                    LabelSet::single(Label::c(i + 4))
                };
                for u in h.neighbors(v).iter() {
                    d.0[u] = d.0[u].intersect(allowed);
                }
            }
            for i in 0..5 {
                let fixed_here = h
                    .neighbors(v)
                    .iter()
                    .filter(|&u| d.0[u].only() == Some(Label::c(i)))
                    .count();
                if fixed_here >= 2 {
                    let banned = LabelSet::of(&[
                        Label::c(i),
                        Label::c(i + 3),
                        Label::c(i + 2),
                        Label::f(i),
                        Label::f(i + 2),
                    ]);
                    d.0[v] = d.0[v].minus(banned);
                }
            }
        }
        if d == before {
            return d;
        }
    }
}

/// The Grötzsch graph on `0..11` plus the C5 `v1..v5` on `11..16`, each
/// Grötzsch vertex joined to the cycle vertices its label names.
pub fn realize_labelling(l: &Labelling) -> Graph {
    realize_partial(&l.map(Some))
}

/// Like [`realize_labelling`] for the labelled vertices only; they keep their
/// relative order and the cycle follows them.
fn realize_partial(l: &[Option<Label>; 11]) -> Graph {
    let present: Vec<usize> = (0..11).filter(|&v| l[v].is_some()).collect();
    let m = present.len();
    let mut edges = Vec::new();
    for (a, &x) in present.iter().enumerate() {
        for (b, &y) in present.iter().enumerate().skip(a + 1) {
            if GROETZSCH_EDGES.contains(&(x.min(y), x.max(y))) {
                edges.push((a, b));
            }
        }
        let mask = l[x].unwrap().q_mask();
        for i in 0..5 {
            if mask >> i & 1 == 1 {
                edges.push((a, m + i));
            }
        }
    }
    for i in 0..5 {
        edges.push((m + i, m + (i + 1) % 5));
    }
    Graph::new(m + 5, edges).expect("realisation edges are valid")
}

/// The realisation is (P6, diamond)-free.
pub fn is_valid_labelling(l: &Labelling) -> bool {
    is_member(&realize_labelling(l))
}

/// Every label `13, 14, 24, 25, 35` occurs somewhere in `l`.
pub fn all_c_labels_used(l: &Labelling) -> bool {
    (0..5).all(|i| l.contains(&Label::c(i)))
}

/// All valid labellings inside `domains`, sorted by their label values.
///
/// Branches on the vertex with the smallest domain of size at least two
/// (lowest vertex number on ties), tries its labels in increasing order and
/// propagates with [`apply_rules`] after each choice.
pub fn enumerate_labellings(domains: &Domains) -> Vec<Labelling> {
    let mut found = Vec::new();
    search(domains, &mut found);
    sort_labellings(&mut found);
    found.dedup();
    found
}

pub fn sort_labellings(ls: &mut [Labelling]) {
    ls.sort_by_key(|l| l.map(Label::value));
}

fn search(d: &Domains, found: &mut Vec<Labelling>) {
    if d.has_empty() {
        return;
    }
    if let Some(l) = d.labelling() {
        if is_valid_labelling(&l) {
            found.push(l);
        }
        return;
    }
    let v = (0..11)
        .filter(|&v| d.0[v].len() >= 2)
        .min_by_key(|&v| (d.0[v].len(), v))
        .unwrap();
    for l in d.0[v].iter() {
        let mut next = *d;
        next.0[v] = LabelSet::single(l);
        search(&apply_rules(&next), found);
    }
}

/// The image of a labelling under a symmetry of the C5: rotation by `shift`
/// positions, after reflecting `i -> -i` first when `reflect` is set.
pub fn transform_labelling(l: &Labelling, shift: usize, reflect: bool) -> Labelling {
    l.map(|x| {
        let (is_f, i) = match (x.f_index(), x.c_index()) {
            (Some(i), _) => (true, i),
            (_, Some(i)) => (false, i),
            _ => unreachable!(),
        };
        // Reflection sends F_i to F_{-i} and C_{i,i+2} to C_{-i-2,-i}.
        let i = match (reflect, is_f) {
            (false, _) => i,
            (true, true) => (5 - i) % 5,
            (true, false) => (10 - i - 2) % 5,
        };
        if is_f {
            Label::f(i + shift)
        } else {
            Label::c(i + shift)
        }
    })
}

/// Closure of `ls` under the ten symmetries of the C5, sorted.
pub fn dihedral_closure(ls: &[Labelling]) -> Vec<Labelling> {
    let mut out: Vec<Labelling> = ls
        .iter()
        .flat_map(|l| (0..5).flat_map(move |s| [false, true].map(|r| transform_labelling(l, s, r))))
        .collect();
    sort_labellings(&mut out);
    out.dedup();
    out
}

/// Valid labellings inside `domains` found by plain depth-first search in
/// vertex order, discarding a partial labelling as soon as its partial
/// realisation leaves the class. Only patterns through the newest vertex
/// need checking since the class is hereditary. Independent of [`apply_rules`]; used to
/// check it.
pub fn valid_completions(domains: &Domains) -> Vec<Labelling> {
    let mut partial = [None; 11];
    let mut out = Vec::new();
    complete(domains, 0, &mut partial, &mut out);
    out
}

fn complete(d: &Domains, v: usize, partial: &mut [Option<Label>; 11], out: &mut Vec<Labelling>) {
    if v == 11 {
        out.push(partial.map(Option::unwrap));
        return;
    }
    for l in d.0[v].iter() {
        partial[v] = Some(l);
        if !violation_through(&realize_partial(partial), v) {
            complete(d, v + 1, partial, out);
        }
    }
    partial[v] = None;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{find_induced_diamond, find_triangle};

    fn lab(values: [u8; 11]) -> Labelling {
        values.map(|x| Label::from_value(x).unwrap())
    }

    const FIRST: [u8; 11] = [25, 13, 13, 14, 13, 14, 25, 35, 24, 35, 24];

    #[test]
    fn groetzsch_shape() {
        let h = groetzsch_graph();
        assert_eq!((h.n(), h.edge_count()), (11, 20));
        assert_eq!(h.degree(0), 5);
        assert!(find_triangle(&h).is_none());
    }

    #[test]
    fn rule_examples() {
        let h = groetzsch_graph();
        let mut d = Domains::full();
        d.0[0] = LabelSet::single(Label::f(0));
        let out = apply_rules(&d);
        for u in h.neighbors(0).iter() {
            assert!(out.0[u].is_subset(LabelSet::single(Label::c(4))));
        }

        let mut d = Domains::full();
        d.0[6] = LabelSet::single(Label::c(0));
        let out = apply_rules(&d);
        let allowed: LabelSet = "14, 24, 25, 35, 2".parse().unwrap();
        for u in h.neighbors(6).iter() {
            assert!(out.0[u].is_subset(allowed));
        }

        // Vertex 0 has neighbours 1 and 2, both fixed to 13; apply only the
        // third rule's effect by checking the removed labels.
        let mut d = Domains::full();
        d.0[1] = LabelSet::single(Label::c(0));
        d.0[2] = LabelSet::single(Label::c(0));
        let out = apply_rules(&d);
        let banned: LabelSet = "13, 14, 35, 1, 3".parse().unwrap();
        assert!(out.0[0].intersect(banned).is_empty());
    }

    #[test]
    fn rules_are_idempotent_and_shrinking() {
        let d = apply_rules(&Domains::initial());
        assert_eq!(apply_rules(&d), d);
        let mut x = Domains::initial();
        x.0[3] = LabelSet::single(Label::c(1));
        let y = apply_rules(&x);
        assert!(y.0.iter().zip(x.0).all(|(a, b)| a.is_subset(b)));
        assert_eq!(apply_rules(&y), y);
    }

    #[test]
    fn realization_examples() {
        let all25 = [Label::c(4); 11];
        let g = realize_labelling(&all25);
        assert_eq!(g.n(), 16);
        for v in 0..11 {
            assert_eq!(
                g.neighbors(v)
                    .iter()
                    .filter(|&u| u >= 11)
                    .collect::<Vec<_>>(),
                vec![12, 15]
            );
        }
        let mut one = all25;
        one[3] = Label::f(0);
        let g = realize_labelling(&one);
        assert_eq!(
            g.neighbors(3)
                .iter()
                .filter(|&u| u >= 11)
                .collect::<Vec<_>>(),
            vec![11, 13, 14]
        );
        assert!(!all_c_labels_used(&all25));
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_labelling(&lab(FIRST)));
        assert!(all_c_labels_used(&lab(FIRST)));
        assert!(!is_valid_labelling(&[Label::c(0); 11]));

        // Adjacent 1 and 13: the realisation has a diamond.
        let mut l = lab(FIRST);
        l[0] = Label::f(0);
        l[1] = Label::c(0);
        assert!(find_induced_diamond(&realize_labelling(&l)).is_some());
        assert!(!is_valid_labelling(&l));
    }

    #[test]
    fn enumeration_small_cases() {
        let d = Domains([LabelSet::single(Label::c(0)); 11]);
        assert!(enumerate_labellings(&d).is_empty());
        let mut d = Domains::full();
        d.0[0] = LabelSet::single(Label::f(0));
        assert!(enumerate_labellings(&d).is_empty());
        assert_eq!(
            enumerate_labellings(&Domains::fixed(&lab(FIRST))),
            vec![lab(FIRST)]
        );
    }

    #[test]
    fn symmetries_preserve_validity() {
        let l = lab(FIRST);
        for s in 0..5 {
            for r in [false, true] {
                let t = transform_labelling(&l, s, r);
                assert!(is_valid_labelling(&t), "{s} {r}");
            }
        }
        assert_eq!(
            transform_labelling(&transform_labelling(&l, 0, true), 0, true),
            l
        );
    }

    #[test]
    fn completion_search_agrees_on_a_fixed_labelling() {
        let mut d = Domains::fixed(&lab(FIRST));
        d.0[7] = LabelSet::ALL;
        d.0[9] = LabelSet::ALL;
        let brute: Vec<Labelling> = LabelSet::ALL
            .iter()
            .flat_map(|a| LabelSet::ALL.iter().map(move |b| (a, b)))
            .map(|(a, b)| {
                let mut l = lab(FIRST);
                l[7] = a;
                l[9] = b;
                l
            })
            .filter(is_valid_labelling)
            .collect();
        assert_eq!(valid_completions(&d), brute);
    }

    #[test]
    fn enumeration_matches_the_completion_oracle() {
        for start in [Domains::initial(), Domains::full()] {
            let mut oracle = valid_completions(&start);
            sort_labellings(&mut oracle);
            let found = enumerate_labellings(&start);
            assert_eq!(found, oracle);
            assert!(found.iter().all(is_valid_labelling));
        }
    }

    #[test]
    fn unrestricted_search_is_the_symmetry_closure() {
        let base = enumerate_labellings(&Domains::initial());
        let all = enumerate_labellings(&Domains::full());
        assert_eq!(all.len(), 100);
        assert_eq!(dihedral_closure(&base), all);
    }

    /// C5 on `0..5` plus one vertex per label, joined along `extra`.
    fn configuration(labels: &[Label], extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for (k, l) in labels.iter().enumerate() {
            edges.extend(
                (0..5)
                    .filter(|i| l.q_mask() >> i & 1 == 1)
                    .map(|i| (i, 5 + k)),
            );
        }
        edges.extend(extra.iter().map(|&(x, y)| (5 + x, 5 + y)));
        Graph::new(5 + labels.len(), edges).unwrap()
    }

    #[test]
    fn rules_are_justified_by_small_configurations() {
        for i in 0..5 {
            // A neighbour of a C(i) vertex.
            let allowed = LabelSet::pairs().without(Label::c(i)).with(Label::f(i + 1));
            for b in LabelSet::ALL.minus(allowed).iter() {
                assert!(
                    !is_member(&configuration(&[Label::c(i), b], &[(0, 1)])),
                    "C{i} - {b:?}"
                );
            }
            // A neighbour of an F(i) vertex.
            for b in LabelSet::ALL.without(Label::c(i + 4)).iter() {
                assert!(
                    !is_member(&configuration(&[Label::f(i), b], &[(0, 1)])),
                    "F{i} - {b:?}"
                );
            }
            // The middle of a path between two C(i) vertices.
            let banned = [
                Label::c(i),
                Label::c(i + 3),
                Label::c(i + 2),
                Label::f(i),
                Label::f(i + 2),
            ];
            for b in banned {
                let g = configuration(&[Label::c(i), b, Label::c(i)], &[(0, 1), (1, 2)]);
                assert!(!is_member(&g), "C{i} - {b:?} - C{i}");
            }
        }
    }
}
