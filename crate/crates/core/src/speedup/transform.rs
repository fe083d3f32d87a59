use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::collect_over_walks;
use crate::error::{Error, Result};
use crate::graphs::subsets_of;
use crate::model::{walk_count, Budget, Colour, Palette, ReductionAlgorithm, Sidedness};

/// Largest palette whose set colours still fit in a [`Colour`].
const MAX_SET_PALETTE: u32 = 31;

/// Members of a set colour.
pub fn decode_set(colour: Colour) -> Vec<Colour> {
    subsets_of(colour)
}

/// One round faster: the new rule outputs the set of colours `alg` may give
/// the successor, over every admissible successor input.
pub fn speed_up(alg: &ReductionAlgorithm) -> Result<ReductionAlgorithm> {
    if alg.sidedness() != Sidedness::OneSided {
        return Err(Error::param("speed-up applies to one-sided algorithms"));
    }
    if alg.rounds() == 0 {
        return Err(Error::param("cannot speed up a zero-round algorithm"));
    }
    let c = alg.output().size();
    if c > MAX_SET_PALETTE {
        return Err(Error::param(format!("palette {c} too large for set colours")));
    }
    let n = alg.input().size();
    let inner = alg.clone();
    let t = alg.rounds();
    let rule = move |w: &[Colour]| {
        let mut buf = [0; 16];
        let mut heap;
        let ext: &mut [Colour] = if t < buf.len() {
            &mut buf[..=t]
        } else {
            heap = vec![0; t + 1];
            &mut heap
        };
        ext[..t].copy_from_slice(w);
        let last = w[t - 1];
        let mut mask = 0;
        for y in (1..=n).filter(|&y| y != last) {
            ext[t] = y;
            mask |= 1 << (inner.eval(ext) - 1);
        }
        mask
    };
    Ok(ReductionAlgorithm::from_fn(
        format!("speedup({})", alg.name()),
        Sidedness::OneSided,
        t - 1,
        alg.input(),
        Palette::new((1u32 << c) - 2)?,
        rule,
    ))
}

/// An algorithm after `k` speed-ups together with the colours it realizes.
#[derive(Debug, Clone)]
pub struct Level {
    k: usize,
    algorithm: ReductionAlgorithm,
    colours: BTreeSet<Colour>,
}

impl Level {
    /// Evaluates `alg` on every admissible window to find its colours.
    pub fn realize(k: usize, algorithm: ReductionAlgorithm, budget: Budget) -> Result<Self> {
        let n = algorithm.input().size();
        let len = algorithm.window_len();
        budget.ensure(evaluation_cost(n, len, k))?;
        let colours = collect_over_walks(n, len, |w, found| {
            found.insert(algorithm.eval(w));
        });
        Ok(Level { k, algorithm, colours })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn algorithm(&self) -> &ReductionAlgorithm {
        &self.algorithm
    }

    pub fn colours(&self) -> &BTreeSet<Colour> {
        &self.colours
    }
}

/// Base-rule evaluations needed to visit every walk of length `len` with a
/// rule that has been sped up `k` times.
pub(crate) fn evaluation_cost(n: u32, len: usize, k: usize) -> u128 {
    let fan = u128::from(n).saturating_pow(k as u32);
    walk_count(n, len).saturating_mul(fan)
}

/// `A_0 = alg` and `A_{i+1} = speed_up(A_i)` for `i < k`, each with its
/// realized colour set.
pub fn iterate_speed_up(alg: &ReductionAlgorithm, k: usize, budget: Budget) -> Result<Vec<Level>> {
    if k > alg.rounds() {
        return Err(Error::param(format!(
            "{} speed-ups requested for a {}-round algorithm",
            k,
            alg.rounds()
        )));
    }
    let mut levels = vec![Level::realize(0, alg.clone(), budget)?];
    for i in 1..=k {
        let next = speed_up(levels[i - 1].algorithm())?;
        levels.push(Level::realize(i, next, budget)?);
    }
    Ok(levels)
}

/// Recolours the output of a level through `f`, giving a one-sided
/// `chi`-colouring with the level's round count. `f` must be defined on
/// every realized colour and map into `[chi]`.
pub fn compose_colouring(
    level: &Level,
    f: impl Fn(Colour) -> Option<Colour>,
    chi: u32,
) -> Result<ReductionAlgorithm> {
    let palette = Palette::new(chi)?;
    let mut map = HashMap::with_capacity(level.colours.len());
    for &x in &level.colours {
        let y = f(x).ok_or(Error::MissingColour(x))?;
        palette.check(y)?;
        map.insert(x, y);
    }
    let map = Arc::new(map);
    let inner = level.algorithm.clone();
    Ok(ReductionAlgorithm::from_fn(
        format!("recolour({})", inner.name()),
        Sidedness::OneSided,
        inner.rounds(),
        inner.input(),
        palette,
        move |w| map.get(&inner.eval(w)).copied().unwrap_or(0),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::exhaustive_properness_check;
    use crate::reduce::{compose, four_to_three, ns_algorithm, ns_schedule};

    #[test]
    fn four_to_three_sets() {
        let b = speed_up(&four_to_three()).unwrap();
        assert_eq!(b.rounds(), 1);
        assert_eq!(b.output().size(), 6);
        // successors of (1,4) output 2, 3, 2
        assert_eq!(decode_set(b.eval(&[1, 4])), vec![2, 3]);
        assert_eq!(decode_set(b.eval(&[4, 1])), vec![1]);
        assert!(exhaustive_properness_check(&b, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn rejects_zero_rounds() {
        let ns = ns_algorithm(6, 2).unwrap();
        let b = speed_up(&ns).unwrap();
        assert_eq!(b.rounds(), 0);
        assert!(speed_up(&b).is_err());
    }

    #[test]
    fn realized_colours() {
        let levels = iterate_speed_up(&four_to_three(), 0, Budget::DEFAULT).unwrap();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].colours(), &BTreeSet::from([1, 2, 3]));

        let a = compose(&ns_schedule(7).unwrap());
        let levels = iterate_speed_up(&a, 2, Budget::DEFAULT).unwrap();
        assert!(levels[0].colours().iter().all(|c| (1..=3).contains(c)));
        assert!(levels[1].colours().iter().all(|c| (1..=6).contains(c)));
        let pairs = 1 << (0b011 - 1) | 1 << (0b101 - 1) | 1 << (0b110 - 1);
        assert!(levels[2].colours().iter().all(|&f| f & pairs != pairs));
        for level in &levels {
            assert!(exhaustive_properness_check(level.algorithm(), Budget::DEFAULT).unwrap());
        }
    }

    #[test]
    fn too_many_speed_ups() {
        assert!(iterate_speed_up(&four_to_three(), 3, Budget::DEFAULT).is_err());
        assert!(matches!(
            iterate_speed_up(&four_to_three(), 1, Budget(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn identity_recolouring() {
        let levels = iterate_speed_up(&four_to_three(), 0, Budget::DEFAULT).unwrap();
        let same = compose_colouring(&levels[0], Some, 3).unwrap();
        let _ = crate::model::for_each_walk::<()>(4, 3, |w| {
            assert_eq!(same.eval(w), four_to_three().eval(w));
            std::ops::ControlFlow::Continue(())
        });
        assert!(matches!(
            compose_colouring(&levels[0], |c| (c < 3).then_some(c), 3),
            Err(Error::MissingColour(3))
        ));
        assert!(compose_colouring(&levels[0], Some, 2).is_err());
    }
}
