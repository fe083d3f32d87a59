use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    u64::try_from(acc).ok()
}

/// `C(2k, k)` in arbitrary precision.
pub fn central_binomial(k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(2 * k - i) / BigUint::from(i + 1);
    }
    acc
}

/// A `k`-subset of `[m]` together with its 1-based colexicographic rank.
///
/// Colex order compares the largest elements first, so `{1,2} < {1,3} <
/// {2,3} < {1,4} < ...`, and the rank of `{a_1 < ... < a_k}` is
/// `1 + sum C(a_i - 1, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetCode {
    k: u32,
    universe: u32,
    rank: u64,
    /// Bit `e - 1` set for each member `e`.
    mask: u64,
}

impl SubsetCode {
    pub fn from_rank(rank: u64, k: u32, universe: u32) -> Result<Self> {
        let mask = unrank_mask(rank, k, universe)?;
        Ok(SubsetCode { k, universe, rank, mask })
    }

    pub fn from_members(members: &[u32], universe: u32) -> Result<Self> {
        let rank = colex_rank(members, universe)?;
        let mask = members.iter().fold(0u64, |m, &e| m | 1 << (e - 1));
        Ok(SubsetCode { k: members.len() as u32, universe, rank, mask })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn members(&self) -> Vec<u32> {
        (1..=self.universe).filter(|e| self.mask >> (e - 1) & 1 == 1).collect()
    }
}

fn check_shape(k: u32, m: u32) -> Result<u64> {
    if k == 0 || k > m {
        return Err(Error::param(format!("need 1 <= k <= m, got k={k}, m={m}")));
    }
    if m > 64 {
        return Err(Error::param("universe larger than 64 is not supported"));
    }
    binomial(u64::from(m), u64::from(k)).ok_or_else(|| Error::param("binomial overflows u64"))
}

/// Colex rank (1-based) of a `k`-subset of `[m]`. Members may be given in
/// any order.
pub fn colex_rank(members: &[u32], m: u32) -> Result<u64> {
    let k = members.len() as u32;
    check_shape(k, m)?;
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::MalformedSubset(format!("{members:?} has repeated elements")));
    }
    if sorted[0] == 0 || sorted[sorted.len() - 1] > m {
        return Err(Error::MalformedSubset(format!("{members:?} is not inside [{m}]")));
    }
    let mut rank = 1;
    for (i, &a) in sorted.iter().enumerate() {
        rank += binomial(u64::from(a - 1), i as u64 + 1).expect("fits: below C(m, k)");
    }
    Ok(rank)
}

/// Inverse of [`colex_rank`]; members returned in increasing order.
pub fn colex_unrank(rank: u64, k: u32, m: u32) -> Result<Vec<u32>> {
    Ok(SubsetCode::from_rank(rank, k, m)?.members())
}

pub(crate) fn unrank_mask(rank: u64, k: u32, m: u32) -> Result<u64> {
    let max = check_shape(k, m)?;
    if rank == 0 || rank > max {
        return Err(Error::RankOutOfRange { rank, max });
    }
    Ok(unrank_mask_unchecked(rank - 1, k, m, |n, r| {
        binomial(n, r).expect("fits: below C(m, k)")
    }))
}

/// Greedy colex unranking of a 0-based rank, largest element first.
#[inline]
pub(crate) fn unrank_mask_unchecked(
    mut rank: u64,
    k: u32,
    m: u32,
    choose: impl Fn(u64, u64) -> u64,
) -> u64 {
    let mut mask = 0u64;
    let mut remaining = u64::from(k);
    let mut e = u64::from(m);
    while remaining > 0 {
        // largest e with C(e - 1, remaining) <= rank
        while choose(e - 1, remaining) > rank {
            e -= 1;
        }
        rank -= choose(e - 1, remaining);
        mask |= 1 << (e - 1);
        remaining -= 1;
        e -= 1;
    }
    mask
}
