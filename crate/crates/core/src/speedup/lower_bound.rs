use crate::error::{Error, Result};
use crate::model::{Budget, Colour};

/// Outcome of the exhaustive search over one-round one-sided rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneRoundSearch {
    pub n: u32,
    pub c: u32,
    /// Candidate maps examined before the search stopped.
    pub examined: u64,
    /// A proper map, indexed like [`OneRoundSearch::pairs`], if one exists.
    pub witness: Option<Vec<Colour>>,
}

impl OneRoundSearch {
    /// `true` iff no one-round rule reduces `n` colours to `c`.
    pub fn lower_bound_holds(&self) -> bool {
        self.witness.is_none()
    }

    /// Ordered distinct pairs `(x_0, x_1)` in the order the witness uses.
    pub fn pairs(&self) -> Vec<(Colour, Colour)> {
        ordered_pairs(self.n)
    }
}

fn ordered_pairs(n: u32) -> Vec<(Colour, Colour)> {
    (1..=n)
        .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect()
}

/// Tries every map from ordered distinct pairs over `[n]` to `[c]` and
/// reports whether any is a proper one-round rule, i.e. `f(a,b) != f(b,d)`
/// whenever `a != b != d`. Stops at the first proper map.
pub fn exhaustive_one_round_lower_bound(n: u32, c: u32, budget: Budget) -> Result<OneRoundSearch> {
    if n < 2 || c < 1 {
        return Err(Error::param("need n >= 2 and c >= 1"));
    }
    let pairs = ordered_pairs(n);
    let m = pairs.len();
    let total = (c as u128)
        .checked_pow(m as u32)
        .unwrap_or(u128::MAX);
    budget.ensure(total)?;
    let index = |a: Colour, b: Colour| -> usize {
        let (a, b) = (a as usize - 1, b as usize - 1);
        a * (n as usize - 1) + if b > a { b - 1 } else { b }
    };
    // every constraint f(a,b) != f(b,d) as an index pair
    let mut constraints = Vec::new();
    for &(a, b) in &pairs {
        for d in (1..=n).filter(|&d| d != b) {
            constraints.push((index(a, b), index(b, d)));
        }
    }
    let mut map = vec![1; m];
    let mut examined = 0u64;
    loop {
        examined += 1;
        if constraints.iter().all(|&(i, j)| map[i] != map[j]) {
            return Ok(OneRoundSearch { n, c, examined, witness: Some(map) });
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(OneRoundSearch { n, c, examined, witness: None });
            }
            if map[pos] < c {
                map[pos] += 1;
                break;
            }
            map[pos] = 1;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_to_three_needs_two_rounds() {
        let search = exhaustive_one_round_lower_bound(4, 3, Budget::DEFAULT).unwrap();
        assert!(search.lower_bound_holds());
        assert_eq!(search.examined, 3u64.pow(12));
    }

    #[test]
    fn trivial_reductions_exist() {
        for (n, c) in [(4, 4), (3, 3)] {
            let search = exhaustive_one_round_lower_bound(n, c, Budget::DEFAULT).unwrap();
            let witness = search.witness.clone().expect("identity works");
            let pairs = search.pairs();
            let f = |a, b| witness[pairs.iter().position(|&p| p == (a, b)).unwrap()];
            for &(a, b) in &pairs {
                for d in (1..=n).filter(|&d| d != b) {
                    assert_ne!(f(a, b), f(b, d));
                }
            }
        }
    }

    #[test]
    fn budget() {
        assert!(matches!(
            exhaustive_one_round_lower_bound(4, 3, Budget(1000)),
            Err(Error::BudgetExceeded { required: 531441, .. })
        ));
    }
}
