use std::collections::BTreeSet;
use std::fmt;

use super::collect_over_walks;
use super::transform::{evaluation_cost, speed_up, Level};
use crate::error::{Error, Result};
use crate::graphs::family_label;
use crate::model::{Budget, Colour};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// Pairs `(x, y)` of level-`k` colours that can sit on adjacent nodes.
    Successor,
    /// Pairs `(x, X)`: a node coloured `x` at level `k` can output `X` at
    /// level `k + 1`.
    Output,
}

/// A binary relation between colours of one or two consecutive levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourRelation {
    kind: RelationKind,
    level: usize,
    pairs: BTreeSet<(Colour, Colour)>,
}

impl ColourRelation {
    pub fn new(kind: RelationKind, level: usize, pairs: BTreeSet<(Colour, Colour)>) -> Self {
        ColourRelation { kind, level, pairs }
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    /// Level of the left-hand colours.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn pairs(&self) -> &BTreeSet<(Colour, Colour)> {
        &self.pairs
    }

    pub fn contains(&self, x: Colour, y: Colour) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// Everything related to `x`, as a bitmask over right-hand colours.
    pub fn image_mask(&self, x: Colour) -> Colour {
        self.pairs
            .range((x, 0)..=(x, Colour::MAX))
            .fold(0, |acc, &(_, y)| acc | 1 << (y - 1))
    }

    pub fn is_irreflexive(&self) -> bool {
        self.pairs.iter().all(|(x, y)| x != y)
    }
}

/// One `x -> y` line per pair, both sides in canonical family syntax.
impl fmt::Display for ColourRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let right = match self.kind {
            RelationKind::Successor => self.level,
            RelationKind::Output => self.level + 1,
        };
        for &(x, y) in &self.pairs {
            writeln!(f, "{} -> {}", family_label(self.level, x), family_label(right, y))?;
        }
        Ok(())
    }
}

/// Every pair of outputs on overlapping windows of the level's algorithm.
pub fn successor_relation(level: &Level, budget: Budget) -> Result<ColourRelation> {
    let alg = level.algorithm();
    let n = alg.input().size();
    let len = alg.window_len();
    budget.ensure(evaluation_cost(n, len + 1, level.k()).saturating_mul(2))?;
    let pairs = collect_over_walks(n, len + 1, |s, found| {
        found.insert((alg.eval(&s[..len]), alg.eval(&s[1..])));
    });
    Ok(ColourRelation::new(RelationKind::Successor, level.k(), pairs))
}

/// Pairs `(A_k(s), A_{k+1}(s_1..))` over every admissible window `s` of the
/// level's algorithm. The level must have at least one round left.
pub fn output_relation(level: &Level, budget: Budget) -> Result<ColourRelation> {
    let alg = level.algorithm();
    if alg.rounds() == 0 {
        return Err(Error::param("output relation needs a level with rounds left"));
    }
    let next = speed_up(alg)?;
    let n = alg.input().size();
    let len = alg.window_len();
    budget.ensure(evaluation_cost(n, len, level.k() + 1).saturating_mul(2))?;
    let pairs = collect_over_walks(n, len, |s, found| {
        found.insert((alg.eval(s), next.eval(&s[1..])));
    });
    Ok(ColourRelation::new(RelationKind::Output, level.k(), pairs))
}

/// Level-`k+1` successor pairs predicted from level `k`: `(X, Y)` whenever
/// `x R X`, `y R Y`, `y ∈ X` and `x S y`.
pub fn derived_successor_relation(
    output: &ColourRelation,
    successor: &ColourRelation,
) -> Result<ColourRelation> {
    if output.kind != RelationKind::Output || successor.kind != RelationKind::Successor {
        return Err(Error::param("expected an output and a successor relation"));
    }
    if output.level != successor.level {
        return Err(Error::param("relations belong to different levels"));
    }
    let mut pairs = BTreeSet::new();
    for &(x, big_x) in &output.pairs {
        for &(y, big_y) in &output.pairs {
            if big_x >> (y - 1) & 1 == 1 && successor.contains(x, y) {
                pairs.insert((big_x, big_y));
            }
        }
    }
    Ok(ColourRelation::new(RelationKind::Successor, output.level + 1, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::{compose, four_to_three, ns_schedule};
    use crate::speedup::iterate_speed_up;

    fn levels_of_four_to_three() -> Vec<Level> {
        iterate_speed_up(&four_to_three(), 1, Budget::DEFAULT).unwrap()
    }

    #[test]
    fn successor_pairs_of_four_to_three() {
        let levels = levels_of_four_to_three();
        let s0 = successor_relation(&levels[0], Budget::DEFAULT).unwrap();
        assert!(s0.is_irreflexive());
        assert!(s0.contains(1, 2));
        assert!(s0.pairs().iter().all(|&(x, y)| x != 4 && y != 4));
        let s1 = successor_relation(&levels[1], Budget::DEFAULT).unwrap();
        assert!(s1.is_irreflexive());
        for &(x, y) in s1.pairs() {
            // a singleton {i} is never followed by a set holding i,
            // a pair never by a superset of itself
            if x.count_ones() == 1 {
                assert_eq!(x & y, 0);
            } else {
                assert_ne!(x & y, x);
            }
        }
    }

    #[test]
    fn output_pairs_are_successor_subsets() {
        let levels = levels_of_four_to_three();
        let s0 = successor_relation(&levels[0], Budget::DEFAULT).unwrap();
        let r0 = output_relation(&levels[0], Budget::DEFAULT).unwrap();
        // window (z,1,4): the node keeps colour 1, successors get {2,3}
        assert!(r0.contains(1, 0b110));
        for &(x, big_x) in r0.pairs() {
            assert_ne!(big_x, 0);
            assert_eq!(big_x & !s0.image_mask(x), 0);
        }
        let last = iterate_speed_up(&four_to_three(), 2, Budget::DEFAULT).unwrap();
        assert!(output_relation(&last[2], Budget::DEFAULT).is_err());
    }

    #[test]
    fn export_format() {
        let rel = ColourRelation::new(RelationKind::Output, 0, BTreeSet::from([(4, 0b110), (1, 0b001)]));
        assert_eq!(rel.to_string(), "1 -> {1}\n4 -> {2,3}\n");
        let s = ColourRelation::new(RelationKind::Successor, 1, BTreeSet::from([(1, 2)]));
        assert_eq!(s.to_string(), "{1} -> {2}\n");
    }

    #[test]
    fn derived_relation_contains_the_empirical_one() {
        let a = compose(&ns_schedule(7).unwrap());
        let levels = iterate_speed_up(&a, 2, Budget::DEFAULT).unwrap();
        for k in 0..2 {
            let s = successor_relation(&levels[k], Budget::DEFAULT).unwrap();
            let r = output_relation(&levels[k], Budget::DEFAULT).unwrap();
            let next = successor_relation(&levels[k + 1], Budget::DEFAULT).unwrap();
            let derived = derived_successor_relation(&r, &s).unwrap();
            assert!(next.pairs().is_subset(derived.pairs()), "k={k}");
        }
    }
}
