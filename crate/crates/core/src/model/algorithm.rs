use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;

use super::enumerate::{for_each_walk_from, walk_count};
use super::{Budget, Colour, Palette, PathInstance, Topology};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sidedness {
    /// Messages flow only towards successors; a `t`-round rule sees its `t`
    /// predecessors followed by itself.
    OneSided,
    /// Standard LOCAL rule; a `t`-round rule sees a window of radius `t`
    /// centred on itself.
    TwoSided,
}

/// A validated sequence of colours as seen by one node.
///
/// For one-sided rules the node's own colour is last; for two-sided rules it
/// sits in the centre.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColourWindow(Vec<Colour>);

impl ColourWindow {
    pub fn new(colours: Vec<Colour>, palette: Palette) -> Result<Self> {
        colours.iter().try_for_each(|&c| palette.check(c))?;
        if let Some(i) = colours.windows(2).position(|p| p[0] == p[1]) {
            return Err(Error::Improper(i, i + 1));
        }
        Ok(ColourWindow(colours))
    }

    pub fn colours(&self) -> &[Colour] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

type Rule = Arc<dyn Fn(&[Colour]) -> Colour + Send + Sync>;

/// A colour-reduction rule together with its round count and palettes.
///
/// The rule is a total function on valid windows (adjacent entries distinct,
/// entries in the input palette). It is realised either by a closure or by a
/// dense table; cloning is cheap.
#[derive(Clone)]
pub struct ReductionAlgorithm {
    name: String,
    sidedness: Sidedness,
    rounds: usize,
    input: Palette,
    output: Palette,
    rule: Rule,
}

impl fmt::Debug for ReductionAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionAlgorithm")
            .field("name", &self.name)
            .field("sidedness", &self.sidedness)
            .field("rounds", &self.rounds)
            .field("input", &self.input.size())
            .field("output", &self.output.size())
            .finish()
    }
}

impl ReductionAlgorithm {
    pub fn from_fn(
        name: impl Into<String>,
        sidedness: Sidedness,
        rounds: usize,
        input: Palette,
        output: Palette,
        rule: impl Fn(&[Colour]) -> Colour + Send + Sync + 'static,
    ) -> Self {
        ReductionAlgorithm {
            name: name.into(),
            sidedness,
            rounds,
            input,
            output,
            rule: Arc::new(rule),
        }
    }

    /// One-sided algorithm backed by a dense table indexed by
    /// `sum (x_i - 1) * n^i` over the window `x_0..x_t`. Entries for
    /// invalid windows are never read.
    pub fn from_table(
        name: impl Into<String>,
        rounds: usize,
        input: Palette,
        output: Palette,
        table: Vec<Colour>,
    ) -> Result<Self> {
        let n = input.size() as usize;
        let expected = n
            .checked_pow(rounds as u32 + 1)
            .ok_or_else(|| Error::param("table too large"))?;
        if table.len() != expected {
            return Err(Error::param(format!(
                "table has {} entries, expected {expected}",
                table.len()
            )));
        }
        let table: Arc<[Colour]> = table.into();
        Ok(Self::from_fn(name, Sidedness::OneSided, rounds, input, output, move |w| {
            table[table_index(n, w)]
        }))
    }

    /// Zero-round algorithm that outputs the node's own colour.
    pub fn identity(palette: Palette) -> Self {
        Self::from_fn("id", Sidedness::OneSided, 0, palette, palette, |w| w[0])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn input(&self) -> Palette {
        self.input
    }

    pub fn output(&self) -> Palette {
        self.output
    }

    pub fn window_len(&self) -> usize {
        match self.sidedness {
            Sidedness::OneSided => self.rounds + 1,
            Sidedness::TwoSided => 2 * self.rounds + 1,
        }
    }

    /// Evaluates the rule on a raw window. The caller guarantees validity.
    #[inline]
    pub fn eval(&self, window: &[Colour]) -> Colour {
        debug_assert_eq!(window.len(), self.window_len());
        (self.rule)(window)
    }

    pub fn eval_window(&self, window: &ColourWindow) -> Result<Colour> {
        if window.len() != self.window_len() {
            return Err(Error::WindowLength { expected: self.window_len(), got: window.len() });
        }
        window.colours().iter().try_for_each(|&c| self.input.check(c))?;
        Ok(self.eval(window.colours()))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

pub(crate) fn table_index(n: usize, window: &[Colour]) -> usize {
    window.iter().rev().fold(0, |acc, &c| acc * n + (c as usize - 1))
}

/// Virtual predecessor used to extend a path past its first node. The same
/// rule, read forwards, extends past the last node.
fn virtual_neighbour(c: Colour) -> Colour {
    if c != 1 {
        1
    } else {
        2
    }
}

/// Applies `alg` at every node of `instance`.
///
/// Windows wrap around on a cycle. On a path, the colours beyond either end
/// are filled in by repeatedly applying [`virtual_neighbour`], which every
/// node can compute from its own information; the extended sequence stays
/// properly coloured, so the output is proper whenever `alg` is.
pub fn run_algorithm(alg: &ReductionAlgorithm, instance: &PathInstance) -> Result<PathInstance> {
    instance.check_palette(alg.input())?;
    instance.ensure_proper()?;
    if alg.input().size() < 2 {
        return Err(Error::param("input palette must have at least two colours"));
    }
    let labels = instance.labels();
    let len = labels.len();
    let (before, after) = match alg.sidedness() {
        Sidedness::OneSided => (alg.rounds(), 0),
        Sidedness::TwoSided => (alg.rounds(), alg.rounds()),
    };
    let wlen = alg.window_len();
    let out = match instance.topology() {
        Topology::Cycle => {
            let mut window = vec![0; wlen];
            (0..len)
                .map(|i| {
                    for (j, slot) in window.iter_mut().enumerate() {
                        // position i - before + j, modulo len
                        let pos = (i + j + len * (before / len + 1) - before) % len;
                        *slot = labels[pos];
                    }
                    alg.eval(&window)
                })
                .collect()
        }
        Topology::Path => {
            let mut extended = Vec::with_capacity(before + len + after);
            let mut prefix = Vec::with_capacity(before);
            let mut c = labels[0];
            for _ in 0..before {
                c = virtual_neighbour(c);
                prefix.push(c);
            }
            extended.extend(prefix.into_iter().rev());
            extended.extend_from_slice(labels);
            let mut c = labels[len - 1];
            for _ in 0..after {
                c = virtual_neighbour(c);
                extended.push(c);
            }
            extended.windows(wlen).map(|w| alg.eval(w)).collect()
        }
    };
    PathInstance::new(instance.topology(), out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two overlapping windows produced the same colour.
    SameOutput(Colour),
    /// A window produced a colour outside the output palette.
    OutOfPalette(Colour),
}

/// A sequence of `window_len + 1` colours on which the rule misbehaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub sequence: Vec<Colour>,
    pub kind: ViolationKind,
}

/// Searches every adjacent-distinct sequence `x_0..x_L` (with `L` the window
/// length) for a pair of overlapping windows with equal outputs, or an
/// output outside the output palette.
///
/// The enumeration is split by first colour across threads; the returned
/// violation is always the lexicographically first one.
pub fn find_properness_violation(
    alg: &ReductionAlgorithm,
    budget: Budget,
) -> Result<Option<Violation>> {
    let n = alg.input().size();
    let wlen = alg.window_len();
    budget.ensure(walk_count(n, wlen + 1))?;
    let out = alg.output();
    let found = (1..=n).into_par_iter().find_map_first(|first| {
        let flow = for_each_walk_from(n, wlen + 1, first, |seq| {
            let a = alg.eval(&seq[..wlen]);
            let b = alg.eval(&seq[1..]);
            let kind = if !out.contains(a) {
                Some(ViolationKind::OutOfPalette(a))
            } else if !out.contains(b) {
                Some(ViolationKind::OutOfPalette(b))
            } else if a == b {
                Some(ViolationKind::SameOutput(a))
            } else {
                None
            };
            match kind {
                Some(kind) => ControlFlow::Break(Violation { sequence: seq.to_vec(), kind }),
                None => ControlFlow::Continue(()),
            }
        });
        match flow {
            ControlFlow::Break(v) => Some(v),
            ControlFlow::Continue(()) => None,
        }
    });
    Ok(found)
}

/// `Ok(true)` iff the properness contract holds on every pair of
/// overlapping valid windows. Exceeding the budget is reported as an error,
/// never as `false`.
pub fn exhaustive_properness_check(alg: &ReductionAlgorithm, budget: Budget) -> Result<bool> {
    Ok(find_properness_violation(alg, budget)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::is_proper;

    fn p(n: u32) -> Palette {
        Palette::new(n).unwrap()
    }

    #[test]
    fn identity_is_noop() {
        let id = ReductionAlgorithm::identity(p(5));
        for inst in [
            PathInstance::cycle(vec![1, 5, 2, 4, 3]).unwrap(),
            PathInstance::path(vec![2, 1, 2]).unwrap(),
        ] {
            assert_eq!(run_algorithm(&id, &inst).unwrap(), inst);
        }
        assert!(exhaustive_properness_check(&id, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn constant_rule_fails() {
        let constant = ReductionAlgorithm::from_fn("one", Sidedness::OneSided, 1, p(4), p(3), |_| 1);
        let v = find_properness_violation(&constant, Budget::DEFAULT).unwrap().unwrap();
        assert_eq!(v.sequence, vec![1, 2, 1]);
        assert_eq!(v.kind, ViolationKind::SameOutput(1));
        assert!(!exhaustive_properness_check(&constant, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn out_of_palette_is_a_violation() {
        let wide = ReductionAlgorithm::from_fn("own", Sidedness::OneSided, 0, p(4), p(3), |w| w[0]);
        let v = find_properness_violation(&wide, Budget::DEFAULT).unwrap().unwrap();
        assert_eq!(v.kind, ViolationKind::OutOfPalette(4));
    }

    #[test]
    fn budget_is_distinct_from_failure() {
        let id = ReductionAlgorithm::identity(p(10));
        let err = exhaustive_properness_check(&id, Budget(5)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { required: 90, budget: 5 });
    }

    #[test]
    fn rejects_bad_input() {
        let id = ReductionAlgorithm::identity(p(3));
        let improper = PathInstance::path(vec![1, 1, 2]).unwrap();
        assert_eq!(run_algorithm(&id, &improper), Err(Error::Improper(0, 1)));
        let wide = PathInstance::path(vec![1, 4]).unwrap();
        assert!(matches!(run_algorithm(&id, &wide), Err(Error::PaletteMismatch { .. })));
    }

    #[test]
    fn path_windows_use_virtual_extension() {
        // Records the window it saw, encoded in base 10.
        let probe = ReductionAlgorithm::from_fn("probe", Sidedness::OneSided, 2, p(9), p(999), |w| {
            w.iter().fold(0, |acc, &c| acc * 10 + c)
        });
        let out = run_algorithm(&probe, &PathInstance::path(vec![1, 3, 1]).unwrap()).unwrap();
        // Virtual predecessors of 1 are 2 then 1: ... 1 2 | 1 3 1
        assert_eq!(out.labels(), &[121, 213, 131]);

        let two = ReductionAlgorithm::from_fn("probe2", Sidedness::TwoSided, 1, p(9), p(999), |w| {
            w.iter().fold(0, |acc, &c| acc * 10 + c)
        });
        let out = run_algorithm(&two, &PathInstance::path(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(out.labels(), &[121, 212]);
    }

    #[test]
    fn cycle_windows_wrap_more_than_once() {
        let probe = ReductionAlgorithm::from_fn("probe", Sidedness::OneSided, 4, p(9), p(99999), |w| {
            w.iter().fold(0, |acc, &c| acc * 10 + c)
        });
        let out = run_algorithm(&probe, &PathInstance::cycle(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(out.labels(), &[12121, 21212]);
        assert!(is_proper(&out));
    }

    #[test]
    fn table_rule() {
        // One-round rule over [2]: (1,2) -> 1, (2,1) -> 2.
        let mut table = vec![0; 4];
        table[table_index(2, &[1, 2])] = 1;
        table[table_index(2, &[2, 1])] = 2;
        let alg = ReductionAlgorithm::from_table("t", 1, p(2), p(2), table).unwrap();
        assert_eq!(alg.eval(&[1, 2]), 1);
        assert_eq!(alg.eval(&[2, 1]), 2);
        assert!(exhaustive_properness_check(&alg, Budget::DEFAULT).unwrap());
        assert!(ReductionAlgorithm::from_table("t", 1, p(2), p(2), vec![0; 3]).is_err());
    }

    #[test]
    fn window_validation() {
        assert!(ColourWindow::new(vec![1, 1], p(3)).is_err());
        assert!(ColourWindow::new(vec![1, 4], p(3)).is_err());
        let w = ColourWindow::new(vec![1, 2], p(3)).unwrap();
        let id = ReductionAlgorithm::identity(p(3));
        assert!(matches!(id.eval_window(&w), Err(Error::WindowLength { .. })));
    }
}
