use std::sync::Arc;

use super::colex::{binomial, unrank_mask_unchecked};
use crate::error::{Error, Result};
use crate::model::{Colour, Palette, ReductionAlgorithm, Sidedness};

/// Pascal's triangle up to row `m`.
fn pascal(m: u32) -> Vec<Vec<u64>> {
    (0..=u64::from(m))
        .map(|n| (0..=u64::from(m)).map(|k| binomial(n, k).unwrap_or(u64::MAX)).collect())
        .collect()
}

/// Naor–Stockmeyer reduction from `n <= C(2k, k)` colours to `2k` in one
/// round.
///
/// Colour `u` is read as the `u`-th `k`-subset `f(u)` of `[2k]` in colex
/// order; a node of colour `v` with predecessor `u` outputs
/// `min(f(u) \ f(v))`. The difference is non-empty because `f` is injective
/// and all codes have the same size, and `min(f(u) \ f(v))` lies in `f(u)`
/// but `min(f(v) \ f(w))` lies in `f(v)`, so consecutive outputs differ.
pub fn ns_algorithm(n: u32, k: u32) -> Result<ReductionAlgorithm> {
    if k < 2 {
        return Err(Error::param(format!("NS needs k >= 2, got {k}")));
    }
    if k > 32 {
        return Err(Error::param(format!("NS supports k <= 32, got {k}")));
    }
    let capacity = binomial(2 * u64::from(k), u64::from(k)).expect("k <= 32");
    if u64::from(n) > capacity {
        return Err(Error::param(format!("n = {n} exceeds C({}, {k}) = {capacity}", 2 * k)));
    }
    let table = Arc::new(pascal(2 * k));
    let code = move |c: Colour| {
        unrank_mask_unchecked(u64::from(c) - 1, k, 2 * k, |a, b| table[a as usize][b as usize])
    };
    Ok(ReductionAlgorithm::from_fn(
        format!("ns k={k}"),
        Sidedness::OneSided,
        1,
        Palette::new(n)?,
        Palette::new(2 * k)?,
        move |w| {
            let diff = code(w[0]) & !code(w[1]);
            diff.trailing_zeros() + 1
        },
    ))
}

/// Cole–Vishkin reduction from `2^k` colours to `2k` in one round.
///
/// With `i` the lowest bit where `u - 1` and `v - 1` differ and `b` that bit
/// of `v - 1`, the output is `2i + b + 1`. The successor's output either
/// uses a different position or, at the same position, the opposite bit.
pub fn cv_algorithm(k: u32) -> Result<ReductionAlgorithm> {
    if k < 3 {
        return Err(Error::param(format!("CV needs k >= 3, got {k}")));
    }
    if k > 31 {
        return Err(Error::param(format!("CV supports k <= 31, got {k}")));
    }
    Ok(ReductionAlgorithm::from_fn(
        format!("cv k={k}"),
        Sidedness::OneSided,
        1,
        Palette::new(1 << k)?,
        Palette::new(2 * k)?,
        |w| {
            let (u, v) = (w[0] - 1, w[1] - 1);
            let i = (u ^ v).trailing_zeros();
            let b = (v >> i) & 1;
            2 * i + b + 1
        },
    ))
}

fn shift_rule(k: u32) -> impl Fn(&[Colour]) -> Colour + Send + Sync {
    move |w| {
        let (u, v, x) = (w[0], w[1], w[2]);
        if v == k + 1 {
            (1..=k).find(|&c| c != u && c != x).expect("k >= 3 leaves a free colour")
        } else {
            v
        }
    }
}

/// Two-round reduction from `k + 1` colours to `k`: on window `(u, v, w)`
/// the node reports the colour of its predecessor `v`, recoloured to
/// `min([k] \ {u, w})` when `v = k + 1`.
pub fn shift_reduce(k: u32) -> Result<ReductionAlgorithm> {
    if k < 3 {
        return Err(Error::param(format!("shift reduction needs k >= 3, got {k}")));
    }
    Ok(ReductionAlgorithm::from_fn(
        format!("shift k={k}"),
        Sidedness::OneSided,
        2,
        Palette::new(k + 1)?,
        Palette::new(k)?,
        shift_rule(k),
    ))
}

/// The 4 → 3 reducer, i.e. [`shift_reduce`] with `k = 3`.
pub fn four_to_three() -> ReductionAlgorithm {
    shift_reduce(3).expect("k = 3 is valid").with_name("4to3")
}
