use std::collections::HashMap;
use std::ops::ControlFlow;

use super::UGraph;
use crate::error::{Error, Result};
use crate::model::{for_each_walk, Colour};

/// Which windows become vertices of a window graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WindowMode {
    /// All entries pairwise distinct.
    #[default]
    AllDistinct,
    /// Only adjacent entries distinct.
    AdjacentDistinct,
}

fn window_label(w: &[Colour]) -> String {
    let parts: Vec<String> = w.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn admissible(w: &[Colour], mode: WindowMode) -> bool {
    match mode {
        WindowMode::AdjacentDistinct => true,
        WindowMode::AllDistinct => {
            w.iter().enumerate().all(|(i, c)| !w[i + 1..].contains(c))
        }
    }
}

/// Graph on windows of `len` colours over `[n]`, with `u ~ v` whenever `v`
/// is `u` shifted by one position with a new last entry.
///
/// A proper `c`-colouring of this graph is exactly a proper one-sided rule
/// reading `len` colours, restricted to the admissible windows.
pub fn window_graph(n: u32, len: usize, mode: WindowMode) -> Result<UGraph> {
    if len == 0 {
        return Err(Error::param("windows need at least one entry"));
    }
    let mut windows: Vec<Vec<Colour>> = Vec::new();
    let _ = for_each_walk::<()>(n, len, |w| {
        if admissible(w, mode) {
            windows.push(w.to_vec());
        }
        ControlFlow::Continue(())
    });
    let index: HashMap<&[Colour], usize> =
        windows.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut g = UGraph::new(windows.iter().map(|w| window_label(w)).collect())?;
    let mut next = vec![0; len];
    for (u, w) in windows.iter().enumerate() {
        next[..len - 1].copy_from_slice(&w[1..]);
        for c in 1..=n {
            next[len - 1] = c;
            if let Some(&v) = index.get(next.as_slice()) {
                if u != v {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// The neighbourhood graph `N_{n,t}`: windows of `2t + 1` colours.
pub fn neighbourhood_graph(n: u32, t: usize, mode: WindowMode) -> Result<UGraph> {
    if (n as usize) <= 2 * t {
        return Err(Error::param(format!("neighbourhood graph needs n > 2t, got n={n}, t={t}")));
    }
    window_graph(n, 2 * t + 1, mode)
}
