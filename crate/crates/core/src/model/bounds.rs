use std::fmt;

use super::magnitude::{log_star, Magnitude};
use crate::error::{Error, Result};

/// Lower and upper bounds on the one-sided (`T`) and two-sided (`C`) round
/// complexity of reducing `n` colours to 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: Magnitude,
    pub log_star: u32,
    pub lower_t: u32,
    pub upper_t: u32,
    pub lower_c: u32,
    pub upper_c: u32,
}

impl BoundsReport {
    /// `true` when the two-sided complexity is pinned down exactly.
    pub fn exact(&self) -> bool {
        self.lower_c == self.upper_c
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "log_star={}", self.log_star)?;
        writeln!(f, "lower_t={}", self.lower_t)?;
        writeln!(f, "upper_t={}", self.upper_t)?;
        writeln!(f, "lower_c={}", self.lower_c)?;
        writeln!(f, "upper_c={}", self.upper_c)?;
        writeln!(f, "exact={}", self.exact())
    }
}

fn tower_plus(h: u32, d: i64) -> Magnitude {
    Magnitude::tower_offset(h, d).expect("towers of height >= 2 stay positive")
}

/// Bound arithmetic for `n >= 4`.
///
/// * `lower_t`: largest `h >= 2` with `tower(h) <= n`, since
///   `T(tower(h), 3) >= h` and `T` is monotone in `n`.
/// * `upper_t`: `h + 1` for the least `h >= 2` with `n <= tower(h) + 1`;
///   `n = 4` is pinned at 2 by the 4 → 3 reducer and the one-round
///   impossibility.
/// * `lower_c`, `upper_c`: the log*-based two-sided bounds
///   `ceil((log* n - 1)/2) <= C <= ceil((log* n + 1)/2)`, tightened by
///   `C = ceil(T/2)` applied to the `T` bounds.
pub fn bounds_report(n: &Magnitude) -> Result<BoundsReport> {
    if *n < Magnitude::from_u64(4) {
        return Err(Error::param(format!("bounds need n >= 4, got {n}")));
    }
    let ls = log_star(n)?;

    let lower_t = (2..=ls)
        .filter(|&h| tower_plus(h, 0) <= *n)
        .max()
        .expect("tower(2) = 4 <= n");

    let upper_t = if *n == Magnitude::from_u64(4) {
        2
    } else {
        let h = (2..=ls)
            .find(|&h| *n <= tower_plus(h, 1))
            .expect("n <= tower(log* n)");
        (h + 1).min(lower_t + 2)
    };

    let lower_c = (ls - 1).div_ceil(2).max(lower_t.div_ceil(2));
    let upper_c = (ls + 1).div_ceil(2).min(upper_t.div_ceil(2));

    Ok(BoundsReport { n: n.clone(), log_star: ls, lower_t, upper_t, lower_c, upper_c })
}
