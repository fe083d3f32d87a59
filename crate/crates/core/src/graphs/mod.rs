//! Undirected graphs over labelled vertices: neighbourhood graphs of input
//! windows, successor graphs of speed-up levels, the worst-case successor
//! graph on 55 colour families, and its explicit 16-class partition.

mod classes;
mod dimacs;
mod families;
mod neighbourhood;
mod successor;

pub use classes::{
    explicit_sixteen_classes, sixteen_class_of, verify_partition, ColourClass,
    ColourClassPartition,
};
pub use dimacs::{parse_dimacs, to_dimacs};
pub use families::{family_label, set_label, subsets_of};
pub use neighbourhood::{neighbourhood_graph, window_graph, WindowMode};
pub use successor::{
    successor_graph_of, successor_graph_from_relation, worst_case_level_one,
    worst_case_successor_graph, worst_case_successors,
};

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// A simple undirected graph whose vertices carry string labels.
///
/// Labels are unique; they identify vertices across graphs for subgraph
/// tests and survive a DIMACS round trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

impl UGraph {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::param(format!("duplicate vertex label {l:?}")));
            }
        }
        let adj = vec![BTreeSet::new(); labels.len()];
        Ok(UGraph { labels, index, adj, edges: 0 })
    }

    /// Vertices labelled `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string()).collect()).expect("labels are distinct")
    }

    /// Adds `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::param(format!("edge ({u}, {v}) outside {n} vertices")));
        }
        if u == v {
            return Err(Error::param(format!("loop at vertex {u}")));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.edges += 1;
        }
        Ok(fresh)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Every edge once, as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    /// `true` if every vertex label of `self` occurs in `other` and every
    /// edge maps to an edge of `other`.
    pub fn is_subgraph_of(&self, other: &UGraph) -> bool {
        let map: Option<Vec<usize>> = self.labels.iter().map(|l| other.vertex(l)).collect();
        let Some(map) = map else {
            return false;
        };
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}
