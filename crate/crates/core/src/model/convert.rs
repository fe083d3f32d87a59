use super::{ReductionAlgorithm, Sidedness};
use crate::error::{Error, Result};

/// Turns a `t`-round two-sided rule into a `2t`-round one-sided rule.
///
/// Both see `2t + 1` consecutive colours; the one-sided node simply uses the
/// window that ends at itself. On a cycle the output is the two-sided output
/// rotated forward by `t` positions.
pub fn one_sided_from_two_sided(alg: &ReductionAlgorithm) -> Result<ReductionAlgorithm> {
    if alg.sidedness() != Sidedness::TwoSided {
        return Err(Error::param("expected a two-sided algorithm"));
    }
    let inner = alg.clone();
    Ok(ReductionAlgorithm::from_fn(
        format!("onesided({})", alg.name()),
        Sidedness::OneSided,
        2 * alg.rounds(),
        alg.input(),
        alg.output(),
        move |w| inner.eval(w),
    ))
}

/// Turns a `t`-round one-sided rule into a `ceil(t/2)`-round two-sided rule
/// that evaluates the one-sided rule on the leftmost `t + 1` entries of its
/// window.
///
/// With `s = ceil(t/2)`, node `i` reports the one-sided output of node
/// `i + t - s`, so on a cycle the result is the one-sided output rotated
/// backward by `t - s` positions.
pub fn two_sided_from_one_sided(alg: &ReductionAlgorithm) -> Result<ReductionAlgorithm> {
    if alg.sidedness() != Sidedness::OneSided {
        return Err(Error::param("expected a one-sided algorithm"));
    }
    let t = alg.rounds();
    let inner = alg.clone();
    Ok(ReductionAlgorithm::from_fn(
        format!("twosided({})", alg.name()),
        Sidedness::TwoSided,
        t.div_ceil(2),
        alg.input(),
        alg.output(),
        move |w| inner.eval(&w[..=t]),
    ))
}
