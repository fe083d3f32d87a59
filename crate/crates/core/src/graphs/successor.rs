use std::collections::BTreeSet;

use super::{family_label, UGraph};
use crate::error::{Error, Result};
use crate::model::{Budget, Colour, ReductionAlgorithm};
use crate::speedup::{iterate_speed_up, successor_relation, ColourRelation};

const ALL_PAIRS: Colour = 1 << (0b011 - 1) | 1 << (0b101 - 1) | 1 << (0b110 - 1);

/// The six level-one colours of a worst-case 3-colouring: every non-empty
/// proper subset of `{1,2,3}`, as bitmasks.
pub fn worst_case_level_one() -> Vec<Colour> {
    (1..=6).collect()
}

/// Successors of a level-one colour in the worst case, as a level-two
/// mask: a singleton `{i}` may be followed by any set avoiding `i`, a pair
/// by anything but itself.
pub fn worst_case_successors(x: Colour) -> Colour {
    worst_case_level_one()
        .into_iter()
        .filter(|&y| if x.count_ones() == 1 { y & x == 0 } else { y != x })
        .fold(0, |acc, y| acc | 1 << (y - 1))
}

fn worst_case_vertices() -> Vec<Colour> {
    (1..64).filter(|&m| m & ALL_PAIRS != ALL_PAIRS).collect()
}

fn worst_case_arc(from: Colour, to: Colour) -> bool {
    worst_case_level_one().into_iter().any(|x| {
        from & !worst_case_successors(x) == 0
            && worst_case_level_one().into_iter().any(|y| {
                from >> (y - 1) & 1 == 1 && to & !worst_case_successors(y) == 0
            })
    })
}

/// The worst-case level-two successor graph on 55 colour families.
///
/// Vertices are labelled canonically, so the successor graph of any
/// concrete 3-colouring algorithm can be tested for containment by label.
pub fn worst_case_successor_graph() -> UGraph {
    let vertices = worst_case_vertices();
    let labels = vertices.iter().map(|&m| family_label(2, m)).collect();
    let mut g = UGraph::new(labels).expect("family labels are distinct");
    for (a, &x) in vertices.iter().enumerate() {
        for (b, &y) in vertices.iter().enumerate().skip(a + 1) {
            if worst_case_arc(x, y) || worst_case_arc(y, x) {
                g.add_edge(a, b).expect("indices in range");
            }
        }
    }
    assert!(
        vertices.iter().all(|&x| !worst_case_arc(x, x)),
        "worst-case successor relation must be irreflexive"
    );
    g
}

/// Graph on the realized colours of a level with an edge per successor pair.
pub fn successor_graph_from_relation(
    colours: &BTreeSet<Colour>,
    relation: &ColourRelation,
) -> Result<UGraph> {
    let level = relation.level();
    let order: Vec<Colour> = colours.iter().copied().collect();
    let mut g = UGraph::new(order.iter().map(|&c| family_label(level, c)).collect())?;
    for &(x, y) in relation.pairs() {
        if x == y {
            return Err(Error::param(format!("successor relation has a loop at {x}")));
        }
        let u = order.binary_search(&x).map_err(|_| Error::MissingColour(x))?;
        let v = order.binary_search(&y).map_err(|_| Error::MissingColour(y))?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Successor graph of `alg` after `k` speed-ups, over its realized colours.
pub fn successor_graph_of(alg: &ReductionAlgorithm, k: usize, budget: Budget) -> Result<UGraph> {
    let levels = iterate_speed_up(alg, k, budget)?;
    let level = levels.last().expect("level 0 is always present");
    let relation = successor_relation(level, budget)?;
    successor_graph_from_relation(level.colours(), &relation)
}
