use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{Colour, Palette};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Path,
    Cycle,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Path => "path",
            Topology::Cycle => "cycle",
        })
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "path" => Ok(Topology::Path),
            "cycle" => Ok(Topology::Cycle),
            other => Err(Error::param(format!("unknown topology {other:?}"))),
        }
    }
}

/// A directed path or cycle with a colour on every node, listed in path
/// order.
///
/// Construction only checks the length; properness is a separate question
/// answered by [`is_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInstance {
    topology: Topology,
    labels: Vec<Colour>,
}

impl PathInstance {
    pub fn new(topology: Topology, labels: Vec<Colour>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::param("an instance needs at least two nodes"));
        }
        if let Some(&c) = labels.iter().find(|&&c| c == 0) {
            return Err(Error::PaletteMismatch { colour: c, size: 0 });
        }
        Ok(PathInstance { topology, labels })
    }

    pub fn path(labels: Vec<Colour>) -> Result<Self> {
        Self::new(Topology::Path, labels)
    }

    pub fn cycle(labels: Vec<Colour>) -> Result<Self> {
        Self::new(Topology::Cycle, labels)
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn labels(&self) -> &[Colour] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_colour(&self) -> Colour {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn check_palette(&self, palette: Palette) -> Result<()> {
        self.labels.iter().try_for_each(|&c| palette.check(c))
    }

    /// First pair of adjacent positions sharing a colour, if any.
    pub fn first_conflict(&self) -> Option<(usize, usize)> {
        let n = self.labels.len();
        if let Some(i) = self.labels.windows(2).position(|p| p[0] == p[1]) {
            return Some((i, i + 1));
        }
        if self.topology == Topology::Cycle && self.labels[0] == self.labels[n - 1] {
            return Some((n - 1, 0));
        }
        None
    }

    pub fn ensure_proper(&self) -> Result<()> {
        match self.first_conflict() {
            Some((a, b)) => Err(Error::Improper(a, b)),
            None => Ok(()),
        }
    }

    /// `true` if `other` is this instance rotated forward by `shift`
    /// positions, i.e. `other[i] == self[i - shift]` on a cycle.
    pub fn is_rotation_of(&self, other: &PathInstance, shift: usize) -> bool {
        let n = self.labels.len();
        n == other.labels.len()
            && (0..n).all(|i| other.labels[(i + shift) % n] == self.labels[i])
    }

    /// A uniformly sampled proper colouring over `[n]`: every node picks a
    /// colour different from its predecessor, and on a cycle the last node
    /// also avoids the first.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        topology: Topology,
        n: u32,
        len: usize,
    ) -> Result<Self> {
        if len < 2 {
            return Err(Error::param("an instance needs at least two nodes"));
        }
        let needed = if topology == Topology::Cycle { 3 } else { 2 };
        if n < needed {
            return Err(Error::param(format!(
                "a random proper {topology} needs at least {needed} colours"
            )));
        }
        let mut labels = Vec::with_capacity(len);
        labels.push(rng.gen_range(1..=n));
        for i in 1..len {
            let prev = labels[i - 1];
            let closing = topology == Topology::Cycle && i == len - 1;
            loop {
                let c = rng.gen_range(1..=n);
                if c != prev && !(closing && c == labels[0]) {
                    labels.push(c);
                    break;
                }
            }
        }
        Self::new(topology, labels)
    }
}

/// `true` iff all adjacent labels differ, including the wrap-around pair on
/// a cycle.
pub fn is_proper(instance: &PathInstance) -> bool {
    instance.first_conflict().is_none()
}

/// Two lines: the topology, then the labels separated by spaces.
impl fmt::Display for PathInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.topology)?;
        let mut first = true;
        for c in &self.labels {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        writeln!(f)
    }
}

impl FromStr for PathInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, head) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let topology: Topology = head.parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
        let (ln, body) = lines
            .next()
            .ok_or_else(|| Error::parse(ln + 1, "missing label line"))?;
        let labels = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Colour>()
                    .map_err(|_| Error::parse(ln, format!("bad colour {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "unexpected trailing content"));
        }
        PathInstance::new(topology, labels).map_err(|e| Error::parse(ln, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn properness_examples() {
        assert!(is_proper(&PathInstance::path(vec![1, 2, 1, 3]).unwrap()));
        assert!(!is_proper(&PathInstance::cycle(vec![1, 2, 1]).unwrap()));
        assert!(!is_proper(&PathInstance::path(vec![1, 1]).unwrap()));
        assert!(is_proper(&PathInstance::path(vec![1, 2, 1]).unwrap()));
    }

    #[test]
    fn too_short() {
        assert!(PathInstance::path(vec![1]).is_err());
        assert!(PathInstance::cycle(vec![0, 1]).is_err());
    }

    #[test]
    fn text_format() {
        let inst: PathInstance = "cycle\n1 4 2 3 1 4\n".parse().unwrap();
        assert_eq!(inst.topology(), Topology::Cycle);
        assert_eq!(inst.labels(), &[1, 4, 2, 3, 1, 4]);
        assert_eq!(inst.to_string(), "cycle\n1 4 2 3 1 4\n");
        assert!("ring\n1 2".parse::<PathInstance>().is_err());
        assert!("path\n1 x".parse::<PathInstance>().is_err());
        assert!("path".parse::<PathInstance>().is_err());
    }

    #[test]
    fn random_instances_are_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for len in 2..40 {
            for topology in [Topology::Path, Topology::Cycle] {
                let inst = PathInstance::random(&mut rng, topology, 3, len).unwrap();
                assert!(is_proper(&inst));
                assert!(inst.max_colour() <= 3);
            }
        }
        assert!(PathInstance::random(&mut rng, Topology::Cycle, 2, 5).is_err());
    }

    #[test]
    fn rotation() {
        let a = PathInstance::cycle(vec![1, 2, 3, 4]).unwrap();
        let b = PathInstance::cycle(vec![4, 1, 2, 3]).unwrap();
        assert!(a.is_rotation_of(&b, 1));
        assert!(!a.is_rotation_of(&b, 2));
    }
}
