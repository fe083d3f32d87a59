//! The algorithm and input mini-languages accepted on the command line.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use pathchroma::reduce::{
    central_binomial, compose, cv_algorithm, four_to_three, ns_algorithm, ns_schedule,
    shift_reduce,
};
use pathchroma::{Palette, PathInstance, ReductionAlgorithm, Topology};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params(text: &str, allowed: &[&str]) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got {item:?}"))?;
        if !allowed.contains(&key) {
            bail!("unknown parameter {key:?} (expected one of {allowed:?})");
        }
        let value = value.parse().with_context(|| format!("bad value for {key}"))?;
        if out.insert(key.to_owned(), value).is_some() {
            bail!("parameter {key:?} given twice");
        }
    }
    Ok(out)
}

fn required(params: &BTreeMap<String, u64>, key: &str) -> Result<u64> {
    params.get(key).copied().ok_or_else(|| anyhow!("missing parameter {key}"))
}

fn small(value: u64, key: &str) -> Result<u32> {
    u32::try_from(value).map_err(|_| anyhow!("{key}={value} is too large"))
}

/// Parses `ns:k=3[,n=20]`, `cv:k=3`, `shift:k=4`, `4to3`, `id:n=5` or
/// `schedule:n=98304`.
pub fn parse_algorithm(spec: &str) -> Result<ReductionAlgorithm> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let alg = match kind {
        "ns" => {
            let p = params(rest, &["k", "n"])?;
            let k = small(required(&p, "k")?, "k")?;
            let n = match p.get("n") {
                Some(&n) => small(n, "n")?,
                None => small(
                    u64::try_from(central_binomial(u64::from(k)))
                        .map_err(|_| anyhow!("k={k} is too large"))?,
                    "n",
                )?,
            };
            ns_algorithm(n, k)?
        }
        "cv" => cv_algorithm(small(required(&params(rest, &["k"])?, "k")?, "k")?)?,
        "shift" => shift_reduce(small(required(&params(rest, &["k"])?, "k")?, "k")?)?,
        "4to3" => {
            params(rest, &[])?;
            four_to_three()
        }
        "id" => {
            let n = small(required(&params(rest, &["n"])?, "n")?, "n")?;
            ReductionAlgorithm::identity(Palette::new(n)?)
        }
        "schedule" => {
            let n = small(required(&params(rest, &["n"])?, "n")?, "n")?;
            let pipeline = ns_schedule(n)?;
            compose(&pipeline).with_name(format!("schedule n={n}"))
        }
        other => bail!("unknown algorithm {other:?}"),
    };
    Ok(alg)
}

/// An input instance and the seed that produced it, if random.
pub struct Input {
    pub instance: PathInstance,
    pub seed: Option<u64>,
}

/// Parses `random:n,len,seed` or reads an instance file.
pub fn parse_input(spec: &str, topology: Topology) -> Result<Input> {
    if let Some(rest) = spec.strip_prefix("random:") {
        let parts: Vec<&str> = rest.split(',').collect();
        let [n, len, seed] = parts[..] else {
            bail!("expected random:n,len,seed");
        };
        let n: u32 = n.parse().context("bad palette size")?;
        let len: usize = len.parse().context("bad length")?;
        let seed: u64 = seed.parse().context("bad seed")?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let instance = PathInstance::random(&mut rng, topology, n, len)?;
        return Ok(Input { instance, seed: Some(seed) });
    }
    let text = fs::read_to_string(spec).with_context(|| format!("cannot read {spec}"))?;
    let instance: PathInstance = text.parse()?;
    instance.ensure_proper()?;
    Ok(Input { instance, seed: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithms() {
        assert_eq!(parse_algorithm("ns:k=3").unwrap().input().size(), 20);
        assert_eq!(parse_algorithm("ns:k=2,n=5").unwrap().input().size(), 5);
        assert_eq!(parse_algorithm("4to3").unwrap().rounds(), 2);
        assert_eq!(parse_algorithm("schedule:n=17").unwrap().rounds(), 4);
        assert_eq!(parse_algorithm("id:n=4").unwrap().rounds(), 0);
        for bad in ["ns", "ns:k=x", "ns:q=2", "nope", "4to3:k=1", "ns:k=2,k=3", "cv:k=99"] {
            assert!(parse_algorithm(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn random_inputs() {
        let a = parse_input("random:5,40,3", Topology::Cycle).unwrap();
        let b = parse_input("random:5,40,3", Topology::Cycle).unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.seed, Some(3));
        assert!(parse_input("random:5,40", Topology::Cycle).is_err());
    }
}
