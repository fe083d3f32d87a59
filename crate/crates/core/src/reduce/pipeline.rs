use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::algorithms::{cv_algorithm, four_to_three, ns_algorithm, shift_reduce};
use crate::error::{Error, Result};
use crate::model::{
    run_algorithm, Palette, PathInstance, ReductionAlgorithm, Sidedness,
};

/// A chain of one-sided reductions where each stage consumes the previous
/// stage's palette.
#[derive(Debug, Clone)]
pub struct Pipeline {
    stages: Vec<ReductionAlgorithm>,
}

impl Pipeline {
    pub fn new(stages: Vec<ReductionAlgorithm>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::param("a pipeline needs at least one stage"));
        }
        if let Some(s) = stages.iter().find(|s| s.sidedness() != Sidedness::OneSided) {
            return Err(Error::param(format!("stage {} is not one-sided", s.name())));
        }
        for pair in stages.windows(2) {
            if pair[0].output() != pair[1].input() {
                return Err(Error::param(format!(
                    "stage {} outputs {} colours but {} expects {}",
                    pair[0].name(),
                    pair[0].output().size(),
                    pair[1].name(),
                    pair[1].input().size()
                )));
            }
        }
        Ok(Pipeline { stages })
    }

    pub fn stages(&self) -> &[ReductionAlgorithm] {
        &self.stages
    }

    pub fn rounds(&self) -> usize {
        self.stages.iter().map(ReductionAlgorithm::rounds).sum()
    }

    pub fn input(&self) -> Palette {
        self.stages[0].input()
    }

    pub fn output(&self) -> Palette {
        self.stages[self.stages.len() - 1].output()
    }

    /// Runs the stages one after another over the whole instance.
    ///
    /// On a cycle this agrees with running [`compose`] of the pipeline. On a
    /// path each stage extends the endpoints on its own, so outputs near the
    /// ends may differ from the composed rule.
    pub fn run(&self, instance: &PathInstance) -> Result<PathInstance> {
        self.stages
            .iter()
            .try_fold(instance.clone(), |inst, stage| run_algorithm(stage, &inst))
    }
}

/// Collapses a pipeline into a single one-sided rule with the summed round
/// count. The rule slides each stage over the intermediate outputs of the
/// previous one; those are properly coloured, so every stage only ever sees
/// valid windows.
pub fn compose(pipeline: &Pipeline) -> ReductionAlgorithm {
    let stages = pipeline.stages.clone();
    let name = stages.iter().map(|s| s.name()).collect::<Vec<_>>().join(" | ");
    ReductionAlgorithm::from_fn(
        format!("compose({name})"),
        Sidedness::OneSided,
        pipeline.rounds(),
        pipeline.input(),
        pipeline.output(),
        move |w| {
            let mut cur = w.to_vec();
            for stage in &stages {
                let len = stage.window_len();
                cur = cur.windows(len).map(|win| stage.eval(win)).collect();
            }
            cur[0]
        },
    )
}

/// One stage per line: `<name> in=<n> out=<c>`.
impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "{} in={} out={}", s.name(), s.input().size(), s.output().size())?;
        }
        Ok(())
    }
}

fn parse_stage(line: &str, ln: usize) -> Result<ReductionAlgorithm> {
    let mut tokens = line.split_whitespace();
    let kind = tokens.next().ok_or_else(|| Error::parse(ln, "empty stage"))?;
    let mut fields = HashMap::new();
    for tok in tokens {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(ln, format!("expected key=value, got {tok:?}")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| Error::parse(ln, format!("bad number in {tok:?}")))?;
        fields.insert(key, value);
    }
    let get = |key: &str| {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| Error::parse(ln, format!("{kind} stage needs {key}=")))
    };
    let stage = match kind {
        "ns" => ns_algorithm(get("in")?, get("k")?),
        "cv" => cv_algorithm(get("k")?),
        "shift" => shift_reduce(get("k")?),
        "4to3" => Ok(four_to_three()),
        "id" => Palette::new(get("in")?).map(ReductionAlgorithm::identity),
        other => return Err(Error::parse(ln, format!("unknown stage kind {other:?}"))),
    }
    .map_err(|e| Error::parse(ln, e.to_string()))?;
    for (key, actual) in [("in", stage.input().size()), ("out", stage.output().size())] {
        if let Some(&declared) = fields.get(key) {
            if declared != actual {
                return Err(Error::parse(
                    ln,
                    format!("{kind} stage has {key}={actual}, line says {declared}"),
                ));
            }
        }
    }
    Ok(stage)
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let stages = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(ln, l)| parse_stage(l, ln))
            .collect::<Result<Vec<_>>>()?;
        Pipeline::new(stages)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{exhaustive_properness_check, Budget, Topology};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn six_to_three() -> Pipeline {
        Pipeline::new(vec![ns_algorithm(6, 2).unwrap(), four_to_three()]).unwrap()
    }

    #[test]
    fn compose_six_to_three() {
        let alg = compose(&six_to_three());
        assert_eq!(alg.rounds(), 3);
        assert_eq!(alg.input().size(), 6);
        assert_eq!(alg.output().size(), 3);
        assert!(exhaustive_properness_check(&alg, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn compose_identity() {
        let p = Palette::new(5).unwrap();
        let alg = compose(&Pipeline::new(vec![ReductionAlgorithm::identity(p)]).unwrap());
        assert_eq!(alg.rounds(), 0);
        for c in 1..=5 {
            assert_eq!(alg.eval(&[c]), c);
        }
    }

    #[test]
    fn chaining_is_checked() {
        let err = Pipeline::new(vec![four_to_three(), ns_algorithm(6, 2).unwrap()]);
        assert!(err.is_err());
        assert!(Pipeline::new(vec![]).is_err());
    }

    #[test]
    fn staged_run_matches_composed_rule_on_cycles() {
        let pipeline = six_to_three();
        let alg = compose(&pipeline);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let inst = PathInstance::random(&mut rng, Topology::Cycle, 6, 40).unwrap();
            let staged = pipeline.run(&inst).unwrap();
            let direct = run_algorithm(&alg, &inst).unwrap();
            assert_eq!(staged, direct);
        }
    }

    #[test]
    fn text_round_trip() {
        let p = six_to_three();
        let text = p.to_string();
        assert_eq!(text, "ns k=2 in=6 out=4\n4to3 in=4 out=3\n");
        let back: Pipeline = text.parse().unwrap();
        assert_eq!(back.rounds(), 3);
        assert_eq!(back.to_string(), text);
    }

    #[test]
    fn parse_errors() {
        assert!("ns k=2 in=7 out=4".parse::<Pipeline>().is_err());
        assert!("ns k=2 in=6 out=5".parse::<Pipeline>().is_err());
        assert!("warp in=4".parse::<Pipeline>().is_err());
        assert!("ns k=two in=6".parse::<Pipeline>().is_err());
        assert!("4to3\nns k=2 in=6 out=4".parse::<Pipeline>().is_err());
        let p: Pipeline = "cv k=3 in=8 out=6\nns k=2 in=6 out=4\n4to3".parse().unwrap();
        assert_eq!(p.rounds(), 4);
    }
}
