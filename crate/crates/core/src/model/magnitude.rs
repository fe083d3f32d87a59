use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest tower height materialised as an exact integer. `tower(5)` is
/// `2^65536`, which still fits comfortably in a `BigUint`; `tower(6)` does
/// not.
pub const EXACT_TOWER_HEIGHT: u32 = 5;

/// A non-negative integer that is either stored exactly or in the symbolic
/// form `tower(height) + offset`.
///
/// Symbolic values with `height >= 5` are compared and measured purely from
/// `(height, offset)`: since `tower(h) - tower(h - 1)` exceeds any `i64` for
/// `h >= 5`, the offset can never push a value across a neighbouring tower.
/// Lower symbolic heights are evaluated exactly.
#[derive(Debug, Clone)]
pub struct Magnitude(Repr);

#[derive(Debug, Clone)]
enum Repr {
    Exact(BigUint),
    Tower { height: u32, offset: i64 },
}

/// Normal form used for comparisons.
enum Norm {
    Small(BigUint),
    Big { height: u32, offset: i64 },
}

pub(crate) fn tower_big(h: u32) -> BigUint {
    assert!(h <= EXACT_TOWER_HEIGHT, "tower({h}) is too large to materialise");
    let mut v = BigUint::one();
    for _ in 0..h {
        let e = v.to_usize().expect("tower exponent fits in usize");
        v = BigUint::one() << e;
    }
    v
}

impl Magnitude {
    pub fn from_u64(value: u64) -> Self {
        Magnitude(Repr::Exact(BigUint::from(value)))
    }

    pub fn exact(value: BigUint) -> Self {
        Magnitude(Repr::Exact(value))
    }

    /// `tower(height) + offset`. Rejects negative values.
    pub fn tower_offset(height: u32, offset: i64) -> Result<Self> {
        if height < EXACT_TOWER_HEIGHT {
            let v = BigInt::from(tower_big(height)) + offset;
            if v.is_negative() {
                return Err(Error::param(format!("pt:{height}{offset:+} is negative")));
            }
        }
        Ok(Magnitude(Repr::Tower { height, offset }))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.0, Repr::Tower { height, .. } if height >= EXACT_TOWER_HEIGHT)
    }

    /// Symbolic `(height, offset)` if this value is stored as a tower.
    pub fn as_tower(&self) -> Option<(u32, i64)> {
        match self.0 {
            Repr::Tower { height, offset } => Some((height, offset)),
            Repr::Exact(_) => None,
        }
    }

    /// The exact value, when it can be materialised (any tower up to
    /// height 5).
    pub fn to_biguint(&self) -> Option<BigUint> {
        match &self.0 {
            Repr::Exact(v) => Some(v.clone()),
            Repr::Tower { height, offset } if *height <= EXACT_TOWER_HEIGHT => {
                let v = BigInt::from(tower_big(*height)) + *offset;
                v.to_biguint()
            }
            Repr::Tower { .. } => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Exact(v) => v.to_u64(),
            Repr::Tower { height, .. } if *height <= EXACT_TOWER_HEIGHT => {
                self.to_biguint().and_then(|v| v.to_u64())
            }
            Repr::Tower { .. } => None,
        }
    }

    fn norm(&self) -> Norm {
        match &self.0 {
            Repr::Exact(v) => Norm::Small(v.clone()),
            &Repr::Tower { height, offset } if height >= EXACT_TOWER_HEIGHT => {
                Norm::Big { height, offset }
            }
            Repr::Tower { .. } => Norm::Small(self.to_biguint().expect("validated on construction")),
        }
    }
}

fn cmp_small_big(x: &BigUint, height: u32, offset: i64) -> Ordering {
    if height > EXACT_TOWER_HEIGHT {
        // tower(6) has 2^65536 bits.
        return Ordering::Less;
    }
    BigInt::from(x.clone()).cmp(&(BigInt::from(tower_big(height)) + offset))
}

impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.norm(), other.norm()) {
            (Norm::Small(a), Norm::Small(b)) => a.cmp(&b),
            (Norm::Small(a), Norm::Big { height, offset }) => cmp_small_big(&a, height, offset),
            (Norm::Big { height, offset }, Norm::Small(b)) => {
                cmp_small_big(&b, height, offset).reverse()
            }
            (Norm::Big { height: h1, offset: d1 }, Norm::Big { height: h2, offset: d2 }) => {
                h1.cmp(&h2).then(d1.cmp(&d2))
            }
        }
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Magnitude {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Magnitude {}

impl From<u64> for Magnitude {
    fn from(v: u64) -> Self {
        Magnitude::from_u64(v)
    }
}

impl From<BigUint> for Magnitude {
    fn from(v: BigUint) -> Self {
        Magnitude::exact(v)
    }
}

/// Accepts a decimal integer or `pt:<h>`, `pt:<h>+<d>`, `pt:<h>-<d>`.
impl FromStr for Magnitude {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::param(format!("cannot parse {s:?} as an integer or pt:h[+d]"));
        if let Some(rest) = s.strip_prefix("pt:") {
            let split = rest.find(['+', '-']);
            let (h, d) = match split {
                Some(i) => {
                    let d: i64 = rest[i + 1..].parse().map_err(|_| bad())?;
                    (&rest[..i], if &rest[i..=i] == "-" { -d } else { d })
                }
                None => (rest, 0),
            };
            let h: u32 = h.parse().map_err(|_| bad())?;
            Magnitude::tower_offset(h, d)
        } else {
            s.parse::<BigUint>().map(Magnitude::exact).map_err(|_| bad())
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_tower = |f: &mut fmt::Formatter<'_>, h: u32, d: i64| match d.cmp(&0) {
            Ordering::Equal => write!(f, "pt:{h}"),
            Ordering::Greater => write!(f, "pt:{h}+{d}"),
            Ordering::Less => write!(f, "pt:{h}{d}"),
        };
        match &self.0 {
            Repr::Tower { height, offset } => write_tower(f, *height, *offset),
            Repr::Exact(v) if v.bits() > 128 => {
                // Anything this large that we build is tower(5) plus a bit.
                let diff = BigInt::from(v.clone()) - BigInt::from(tower_big(EXACT_TOWER_HEIGHT));
                match diff.to_i64() {
                    Some(d) => write_tower(f, EXACT_TOWER_HEIGHT, d),
                    None => write!(f, "{v}"),
                }
            }
            Repr::Exact(v) => write!(f, "{v}"),
        }
    }
}

/// `tower(0) = 1`, `tower(h + 1) = 2^tower(h)`. Exact up to
/// [`EXACT_TOWER_HEIGHT`], symbolic beyond.
pub fn tower(h: u32) -> Magnitude {
    if h <= EXACT_TOWER_HEIGHT {
        Magnitude::exact(tower_big(h))
    } else {
        Magnitude(Repr::Tower { height: h, offset: 0 })
    }
}

/// Least `i` such that the `i`-fold binary logarithm of `x` is at most 1.
///
/// Since `log^(i)` is increasing and `log^(i)(tower(i)) = 1`, this is the
/// least `i` with `x <= tower(i)`, which is how it is computed.
pub fn log_star(x: &Magnitude) -> Result<u32> {
    match x.norm() {
        Norm::Small(v) => {
            if v.is_zero() {
                return Err(Error::LogStarDomain);
            }
            for i in 0..=EXACT_TOWER_HEIGHT {
                if v <= tower_big(i) {
                    return Ok(i);
                }
            }
            Ok(EXACT_TOWER_HEIGHT + 1)
        }
        Norm::Big { height, offset } => Ok(if offset <= 0 { height } else { height + 1 }),
    }
}

/// log* of a real number by literally iterating `log2`.
pub fn log_star_real<F: Float>(x: F) -> Result<u32> {
    if !x.is_finite() || x < F::one() {
        return Err(Error::LogStarDomain);
    }
    let mut v = x;
    let mut i = 0;
    while v > F::one() {
        v = v.log2();
        i += 1;
    }
    Ok(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_star_examples() {
        let ls = |v: u64| log_star(&Magnitude::from_u64(v)).unwrap();
        assert_eq!(ls(1), 0);
        assert_eq!(ls(2), 1);
        assert_eq!(ls(3), 2);
        assert_eq!(ls(16), 3);
        assert_eq!(ls(17), 4);
        assert_eq!(ls(65536), 4);
        assert_eq!(ls(65537), 5);
        assert_eq!(ls(u64::MAX), 5);
        assert_eq!(log_star(&Magnitude::from_u64(0)), Err(Error::LogStarDomain));
    }

    #[test]
    fn real_log_star_agrees() {
        for v in [1u64, 2, 3, 4, 5, 15, 16, 17, 255, 256, 65535, 65536, 65537, 1 << 40] {
            assert_eq!(
                log_star_real(v as f64).unwrap(),
                log_star(&Magnitude::from_u64(v)).unwrap(),
                "{v}"
            );
        }
        assert_eq!(log_star_real(0.5f64), Err(Error::LogStarDomain));
        assert_eq!(log_star_real(f32::INFINITY), Err(Error::LogStarDomain));
        assert_eq!(log_star_real(1.5f32).unwrap(), 1);
    }

    #[test]
    fn tower_values() {
        assert_eq!(tower(0), Magnitude::from_u64(1));
        assert_eq!(tower(1), Magnitude::from_u64(2));
        assert_eq!(tower(4), Magnitude::from_u64(65536));
        assert!(!tower(5).is_symbolic());
        assert_eq!(tower(5).to_biguint().unwrap().bits(), 65537);
        assert!(tower(6).is_symbolic());
        assert_eq!(tower(6).to_string(), "pt:6");
    }

    #[test]
    fn tower_recurrence() {
        for h in 0..EXACT_TOWER_HEIGHT {
            let t = tower(h).to_biguint().unwrap();
            let next = BigUint::one() << t.to_usize().unwrap();
            assert_eq!(tower(h + 1).to_biguint().unwrap(), next);
        }
    }

    #[test]
    fn log_star_of_power_of_two() {
        // log*(2^x) = log*(x) + 1 for x > 1
        for x in 2u64..200 {
            let pow = Magnitude::exact(BigUint::one() << x);
            assert_eq!(
                log_star(&pow).unwrap(),
                log_star(&Magnitude::from_u64(x)).unwrap() + 1
            );
        }
    }

    #[test]
    fn symbolic_and_exact_agree_at_height_five() {
        for d in [-3i64, -1, 0, 1, 2, 1000] {
            let sym = Magnitude::tower_offset(5, d).unwrap();
            let exact = Magnitude::exact(sym.to_biguint().unwrap());
            assert!(sym.is_symbolic());
            assert_eq!(sym, exact);
            assert_eq!(log_star(&sym).unwrap(), log_star(&exact).unwrap());
            assert_eq!(exact.to_string(), sym.to_string());
        }
        assert_eq!(log_star(&Magnitude::tower_offset(5, 0).unwrap()).unwrap(), 5);
        assert_eq!(log_star(&Magnitude::tower_offset(5, 1).unwrap()).unwrap(), 6);
        assert_eq!(log_star(&Magnitude::tower_offset(9, 1).unwrap()).unwrap(), 10);
        assert_eq!(log_star(&Magnitude::tower_offset(9, -7).unwrap()).unwrap(), 9);
    }

    #[test]
    fn ordering() {
        let a = Magnitude::from_u64(u64::MAX);
        let b = Magnitude::tower_offset(5, -1_000_000).unwrap();
        let c = Magnitude::tower_offset(5, 3).unwrap();
        let d = Magnitude::tower_offset(6, -5).unwrap();
        let e = Magnitude::tower_offset(6, 0).unwrap();
        let f = Magnitude::tower_offset(7, -1).unwrap();
        let sorted = [a, b, c, d, e, f];
        for w in sorted.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
        assert_eq!(Magnitude::tower_offset(3, 1).unwrap(), Magnitude::from_u64(17));
    }

    #[test]
    fn parsing() {
        assert_eq!("65536".parse::<Magnitude>().unwrap(), Magnitude::from_u64(65536));
        assert_eq!("pt:4".parse::<Magnitude>().unwrap(), Magnitude::from_u64(65536));
        assert_eq!("pt:4+1".parse::<Magnitude>().unwrap(), Magnitude::from_u64(65537));
        assert_eq!("pt:2-3".parse::<Magnitude>().unwrap(), Magnitude::from_u64(1));
        assert_eq!("pt:7-2".parse::<Magnitude>().unwrap().as_tower(), Some((7, -2)));
        assert!("pt:1-3".parse::<Magnitude>().is_err());
        assert!("pt:x".parse::<Magnitude>().is_err());
        assert!("-4".parse::<Magnitude>().is_err());
        assert_eq!("pt:6+1".parse::<Magnitude>().unwrap().to_string(), "pt:6+1");
    }
}
