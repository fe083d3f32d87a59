//! Shared data model: palettes, windows, path instances, reduction
//! algorithms, the path/cycle simulator and bound arithmetic.

mod algorithm;
mod bounds;
mod convert;
mod enumerate;
mod instance;
mod magnitude;

pub use algorithm::{
    exhaustive_properness_check, find_properness_violation, run_algorithm, ColourWindow,
    ReductionAlgorithm, Sidedness, Violation, ViolationKind,
};
pub use bounds::{bounds_report, BoundsReport};
pub use convert::{one_sided_from_two_sided, two_sided_from_one_sided};
pub use enumerate::{for_each_walk, walk_count};
pub(crate) use enumerate::for_each_walk_from;
pub(crate) use algorithm::table_index;
pub use instance::{is_proper, PathInstance, Topology};
pub use magnitude::{log_star, log_star_real, tower, Magnitude, EXACT_TOWER_HEIGHT};

use crate::error::{Error, Result};

/// A colour. Valid colours of a palette of size `n` are `1..=n`.
pub type Colour = u32;

/// The colour set `[n] = {1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Palette(u32);

impl Palette {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::param("palette size must be at least 1"));
        }
        Ok(Palette(size))
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, colour: Colour) -> bool {
        (1..=self.0).contains(&colour)
    }

    pub fn colours(self) -> impl Iterator<Item = Colour> {
        1..=self.0
    }

    pub(crate) fn check(self, colour: Colour) -> Result<()> {
        if self.contains(colour) {
            Ok(())
        } else {
            Err(Error::PaletteMismatch { colour, size: self.0 })
        }
    }
}

/// Upper limit on the number of window evaluations an exhaustive check may
/// perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(100_000_000);

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn ensure(self, required: u128) -> Result<()> {
        if required > u128::from(self.0) {
            Err(Error::BudgetExceeded { required, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
