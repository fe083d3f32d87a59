use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::UGraph;
use crate::model::Colour;

/// Search nodes allowed before giving up without a verdict.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

/// Verdict of a colourability search with the number of nodes expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringCertificate {
    /// `assignment[v]` is the colour of vertex `v`, in `1..=k`.
    Sat { assignment: Vec<Colour>, nodes: u64 },
    Unsat { nodes: u64 },
}

impl ColouringCertificate {
    pub fn is_sat(&self) -> bool {
        matches!(self, ColouringCertificate::Sat { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            ColouringCertificate::Sat { nodes, .. } | ColouringCertificate::Unsat { nodes } => *nodes,
        }
    }

    pub fn assignment(&self) -> Option<&[Colour]> {
        match self {
            ColouringCertificate::Sat { assignment, .. } => Some(assignment),
            ColouringCertificate::Unsat { .. } => None,
        }
    }
}

/// `v <vertex> <colour>` per vertex (1-based), or `UNSAT nodes=<count>`.
impl fmt::Display for ColouringCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColouringCertificate::Sat { assignment, .. } => {
                for (v, c) in assignment.iter().enumerate() {
                    writeln!(f, "v {} {}", v + 1, c)?;
                }
                Ok(())
            }
            ColouringCertificate::Unsat { nodes } => writeln!(f, "UNSAT nodes={nodes}"),
        }
    }
}

/// `true` iff `assignment` gives every vertex a colour in `1..=k` and no
/// edge joins two equal colours.
pub fn verify_colouring(g: &UGraph, assignment: &[Colour], k: u32) -> bool {
    assignment.len() == g.vertex_count()
        && assignment.iter().all(|&c| (1..=k).contains(&c))
        && g.edges().all(|(u, v)| assignment[u] != assignment[v])
}

/// A maximal clique grown greedily from the highest-degree vertex, always
/// adding the highest-degree (then lowest-index) compatible vertex.
pub fn greedy_clique(g: &UGraph) -> Vec<usize> {
    let by_degree = |a: &usize, b: &usize| g.degree(*a).cmp(&g.degree(*b)).then(b.cmp(a));
    let Some(start) = (0..g.vertex_count()).max_by(by_degree) else {
        return Vec::new();
    };
    let mut clique = vec![start];
    let mut candidates: Vec<usize> = g.neighbours(start).collect();
    while let Some(&next) = candidates.iter().max_by(|a, b| by_degree(a, b)) {
        clique.push(next);
        candidates.retain(|&v| v != next && g.has_edge(v, next));
    }
    clique
}

struct Search<'g> {
    g: &'g UGraph,
    k: usize,
    colour: Vec<usize>,
    /// `seen[v * (k + 1) + c]`: neighbours of `v` coloured `c`.
    seen: Vec<u32>,
    saturation: Vec<usize>,
    uncoloured: usize,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured -= 1;
        for u in self.g.neighbours(v) {
            let slot = &mut self.seen[u * (self.k + 1) + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        self.uncoloured += 1;
        for u in self.g.neighbours(v) {
            let slot = &mut self.seen[u * (self.k + 1) + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Highest saturation, then highest degree, then lowest index.
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        for v in (0..self.colour.len()).filter(|&v| self.colour[v] == 0) {
            if best == usize::MAX
                || (self.saturation[v], self.g.degree(v))
                    > (self.saturation[best], self.g.degree(best))
            {
                best = v;
            }
        }
        best
    }

    /// Colours `1..=max_used` are distinguished; one fresh colour stands
    /// for all unused ones.
    fn solve(&mut self, max_used: usize) -> Result<bool> {
        if self.uncoloured == 0 {
            return Ok(true);
        }
        let v = self.pick();
        if self.saturation[v] == self.k {
            return Ok(false);
        }
        for c in 1..=self.k.min(max_used + 1) {
            if self.seen[v * (self.k + 1) + c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::NodeLimit { nodes: self.limit });
            }
            self.assign(v, c);
            if self.solve(max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Decides whether `g` has a proper `k`-colouring by complete search.
///
/// Satisfying assignments are verified before they are returned. Running
/// out of nodes is an error, never a negative answer.
pub fn k_colourable(g: &UGraph, k: u32, node_limit: u64) -> Result<ColouringCertificate> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let n = g.vertex_count();
    let k = k as usize;
    let clique = greedy_clique(g);
    if clique.len() > k {
        return Ok(ColouringCertificate::Unsat { nodes: 0 });
    }
    let mut search = Search {
        g,
        k,
        colour: vec![0; n],
        seen: vec![0; n * (k + 1)],
        saturation: vec![0; n],
        uncoloured: n,
        nodes: 0,
        limit: node_limit,
    };
    for (i, &v) in clique.iter().enumerate() {
        search.assign(v, i + 1);
    }
    if !search.solve(clique.len())? {
        return Ok(ColouringCertificate::Unsat { nodes: search.nodes });
    }
    let assignment: Vec<Colour> = search.colour.iter().map(|&c| c as Colour).collect();
    assert!(
        verify_colouring(g, &assignment, k as u32),
        "search produced an improper colouring"
    );
    Ok(ColouringCertificate::Sat { assignment, nodes: search.nodes })
}

/// Number of colours used by plain DSATUR without backtracking.
fn greedy_colour_count(g: &UGraph) -> usize {
    let n = g.vertex_count();
    let mut search = Search {
        g,
        k: n,
        colour: vec![0; n],
        seen: vec![0; n * (n + 1)],
        saturation: vec![0; n],
        uncoloured: n,
        nodes: 0,
        limit: u64::MAX,
    };
    let mut used = 0;
    while search.uncoloured > 0 {
        let v = search.pick();
        let c = (1..=n).find(|&c| search.seen[v * (n + 1) + c] == 0).expect("n colours suffice");
        used = used.max(c);
        search.assign(v, c);
    }
    used
}

/// The least `k` admitting a proper colouring; 0 for the empty graph.
pub fn chromatic_number(g: &UGraph, node_limit: u64) -> Result<u32> {
    let lower = greedy_clique(g).len();
    let upper = greedy_colour_count(g);
    for k in lower..upper {
        if k_colourable(g, k as u32, node_limit)?.is_sat() {
            return Ok(k as u32);
        }
    }
    Ok(upper as u32)
}
