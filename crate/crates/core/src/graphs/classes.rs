use std::collections::HashSet;

use super::{family_label, set_label, UGraph};
use crate::model::Colour;

/// A named set of vertices, identified by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourClass {
    pub name: String,
    pub members: Vec<String>,
}

/// An ordered list of colour classes intended to cover a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColourClassPartition {
    pub classes: Vec<ColourClass>,
}

impl ColourClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }
}

/// `true` iff every vertex of `g` lies in exactly one class, no class names
/// a foreign label, and every class is independent in `g`.
pub fn verify_partition(g: &UGraph, p: &ColourClassPartition) -> bool {
    let mut seen = HashSet::with_capacity(g.vertex_count());
    for class in &p.classes {
        let mut ids = Vec::with_capacity(class.members.len());
        for label in &class.members {
            let Some(v) = g.vertex(label) else {
                return false;
            };
            if !seen.insert(v) {
                return false;
            }
            ids.push(v);
        }
        if !g.is_independent(&ids) {
            return false;
        }
    }
    seen.len() == g.vertex_count()
}

fn singleton(i: u32) -> Colour {
    1 << (i - 1)
}

fn pair(i: u32, j: u32) -> Colour {
    singleton(i) | singleton(j)
}

/// Level-two mask holding the given level-one colours.
fn family(members: &[Colour]) -> Colour {
    members.iter().fold(0, |acc, &m| acc | 1 << (m - 1))
}

const TRIPLES: [(u32, u32, u32); 3] = [(1, 2, 3), (1, 3, 2), (2, 3, 1)];

/// Each class as an interval `lower ⊆ F ⊆ upper` of level-two masks.
fn intervals() -> Vec<(String, Colour, Colour)> {
    let mut out = Vec::with_capacity(16);
    for x in 1..=7u32 {
        let f = family(&(1..=3).filter(|&i| x >> (i - 1) & 1 == 1).map(singleton).collect::<Vec<_>>());
        out.push((format!("X0({})", set_label(x)), f, f));
    }
    let singles = family(&[singleton(1), singleton(2), singleton(3)]);
    for (i, j, k) in TRIPLES {
        let lower = family(&[pair(i, k), pair(j, k)]);
        out.push((format!("X1({i},{j},{k})"), lower, lower | singles));
    }
    for (i, j, k) in TRIPLES {
        let lower = family(&[pair(i, j), singleton(k)]);
        out.push((format!("X2({i},{j},{k})"), lower, lower | family(&[singleton(i), singleton(j)])));
    }
    for (i, j, k) in TRIPLES {
        let lower = family(&[pair(i, j)]);
        out.push((format!("X3({i},{j},{k})"), lower, lower | family(&[singleton(i), singleton(j)])));
    }
    out
}

fn within(f: Colour, lower: Colour, upper: Colour) -> bool {
    f & lower == lower && f & !upper == 0
}

/// The sixteen classes covering the worst-case level-two successor graph.
pub fn explicit_sixteen_classes() -> ColourClassPartition {
    let classes = intervals()
        .into_iter()
        .map(|(name, lower, upper)| ColourClass {
            name,
            members: (lower..=upper)
                .filter(|&f| within(f, lower, upper))
                .map(|f| family_label(2, f))
                .collect(),
        })
        .collect();
    ColourClassPartition { classes }
}

/// Index (0-based) of the class holding a level-two colour, if any.
pub fn sixteen_class_of(colour: Colour) -> Option<usize> {
    intervals()
        .iter()
        .position(|&(_, lower, upper)| within(colour, lower, upper))
}

#[cfg(test)]
mod tests {
    use super::super::worst_case_successor_graph;
    use super::*;

    #[test]
    fn class_sizes() {
        let p = explicit_sixteen_classes();
        assert_eq!(p.len(), 16);
        let mut expected = vec![1; 7];
        expected.extend([8, 8, 8, 4, 4, 4, 4, 4, 4]);
        assert_eq!(p.sizes(), expected);
        assert_eq!(p.sizes().iter().sum::<usize>(), 55);
    }

    #[test]
    fn named_members() {
        let p = explicit_sixteen_classes();
        let x3 = p.classes.iter().find(|c| c.name == "X3(1,2,3)").unwrap();
        let mut got = x3.members.clone();
        got.sort();
        let mut want = vec!["{{1,2}}", "{{1},{1,2}}", "{{2},{1,2}}", "{{1},{2},{1,2}}"];
        want.sort();
        assert_eq!(got, want);
        let x0 = p.classes.iter().find(|c| c.name == "X0({1,2,3})").unwrap();
        assert_eq!(x0.members, vec!["{{1},{2},{3}}"]);
    }

    #[test]
    fn partition_of_worst_case_graph() {
        let g = worst_case_successor_graph();
        let p = explicit_sixteen_classes();
        assert!(verify_partition(&g, &p));
        for v in 0..g.vertex_count() {
            let hits = p.classes.iter().filter(|c| c.members.iter().any(|m| m == g.label(v))).count();
            assert_eq!(hits, 1, "{}", g.label(v));
        }
    }

    #[test]
    fn classifier_matches_classes() {
        let p = explicit_sixteen_classes();
        for f in 1..64 {
            let label = family_label(2, f);
            let by_members = p.classes.iter().position(|c| c.members.contains(&label));
            assert_eq!(sixteen_class_of(f), by_members);
        }
        assert_eq!(sixteen_class_of(family(&[3, 5, 6])), None);
    }

    #[test]
    fn rejects_bad_partitions() {
        let mut tri = UGraph::with_vertices(3);
        tri.add_edge(0, 1).unwrap();
        tri.add_edge(1, 2).unwrap();
        tri.add_edge(0, 2).unwrap();
        let all = |g: &UGraph| ColourClassPartition {
            classes: vec![ColourClass { name: "all".into(), members: g.labels().to_vec() }],
        };
        assert!(!verify_partition(&tri, &all(&tri)));
        let empty = UGraph::with_vertices(4);
        assert!(verify_partition(&empty, &all(&empty)));
        let partial = ColourClassPartition {
            classes: vec![ColourClass { name: "a".into(), members: vec!["1".into()] }],
        };
        assert!(!verify_partition(&empty, &partial));
    }
}
