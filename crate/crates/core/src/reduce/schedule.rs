use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::algorithms::{four_to_three, ns_algorithm};
use super::pipeline::Pipeline;
use crate::error::{Error, Result};
use crate::model::{tower, Magnitude, Palette, ReductionAlgorithm, EXACT_TOWER_HEIGHT};

/// Least `k >= 2` with `C(2k, k) >= n`.
pub fn least_ns_k(n: &BigUint) -> u64 {
    let mut k = 2u64;
    let mut central = BigUint::from(6u32);
    while central < *n {
        // C(2k+2, k+1) = C(2k, k) (2k+1)(2k+2) / (k+1)^2
        central = central * ((2 * k + 1) * (2 * k + 2)) / ((k + 1) * (k + 1));
        k += 1;
    }
    k
}

/// Least `k` with `2^k >= n`, the Cole–Vishkin counterpart of
/// [`least_ns_k`].
pub fn least_cv_k(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// Size of a palette in a schedule plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanSize {
    Exact(BigUint),
    /// The caller's `n`, kept in its original form.
    Given(Magnitude),
    /// `(3/2) * tower(h)`.
    ThreeHalvesTower(u32),
}

impl PlanSize {
    fn to_u32(&self) -> Option<u32> {
        match self {
            PlanSize::Exact(v) => v.to_u32(),
            PlanSize::Given(m) => m.to_u64().and_then(|v| u32::try_from(v).ok()),
            PlanSize::ThreeHalvesTower(_) => None,
        }
    }
}

impl fmt::Display for PlanSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanSize::Exact(v) => write!(f, "{v}"),
            PlanSize::Given(m) => write!(f, "{m}"),
            PlanSize::ThreeHalvesTower(h) => write!(f, "3/2*pt:{h}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlannedStage {
    /// One NS round into `output = 2k` colours.
    Ns { input: PlanSize, output: PlanSize },
    FourToThree,
    /// Zero rounds; only used when the input already has 3 colours.
    Identity(u32),
}

impl PlannedStage {
    pub fn rounds(&self) -> usize {
        match self {
            PlannedStage::Ns { .. } => 1,
            PlannedStage::FourToThree => 2,
            PlannedStage::Identity(_) => 0,
        }
    }

    fn to_algorithm(&self) -> Result<ReductionAlgorithm> {
        match self {
            PlannedStage::Ns { input, output } => {
                let (Some(n), Some(out)) = (input.to_u32(), output.to_u32()) else {
                    return Err(Error::param(format!(
                        "stage {self} is too large to instantiate"
                    )));
                };
                ns_algorithm(n, out / 2)
            }
            PlannedStage::FourToThree => Ok(four_to_three()),
            PlannedStage::Identity(n) => Ok(ReductionAlgorithm::identity(Palette::new(*n)?)),
        }
    }
}

impl fmt::Display for PlannedStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlannedStage::Ns { input, output } => {
                let k = match output {
                    PlanSize::ThreeHalvesTower(h) => format!("3/4*pt:{h}"),
                    PlanSize::Exact(v) => format!("{}", v / 2u32),
                    PlanSize::Given(m) => format!("{m}/2"),
                };
                write!(f, "ns k={k} in={input} out={output}")
            }
            PlannedStage::FourToThree => write!(f, "4to3 in=4 out=3"),
            PlannedStage::Identity(n) => write!(f, "id in={n} out={n}"),
        }
    }
}

/// Round-by-round plan for reducing `n` colours to 3, computed without
/// building any rule.
#[derive(Debug, Clone)]
pub struct SchedulePlan {
    n: Magnitude,
    stages: Vec<PlannedStage>,
}

impl SchedulePlan {
    pub fn n(&self) -> &Magnitude {
        &self.n
    }

    pub fn stages(&self) -> &[PlannedStage] {
        &self.stages
    }

    pub fn rounds(&self) -> usize {
        self.stages.iter().map(PlannedStage::rounds).sum()
    }

    /// Palette sizes visited, when all of them are exact.
    pub fn exact_palettes(&self) -> Option<Vec<BigUint>> {
        let mut out = vec![self.n.to_biguint()?];
        for s in &self.stages {
            match s {
                PlannedStage::Ns { output: PlanSize::Exact(v), .. } => out.push(v.clone()),
                PlannedStage::FourToThree => out.push(BigUint::from(3u32)),
                PlannedStage::Identity(_) => {}
                PlannedStage::Ns { .. } => return None,
            }
        }
        Some(out)
    }

    /// Builds the runnable pipeline; fails if some palette exceeds `u32`.
    pub fn to_pipeline(&self) -> Result<Pipeline> {
        Pipeline::new(
            self.stages
                .iter()
                .map(PlannedStage::to_algorithm)
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl fmt::Display for SchedulePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether one NS round takes `(3/2) 2^c` colours to `(3/2) c` for
/// `c = tower(c_height)`, i.e. `C(2k, k) > (3/2) 2^c` with `2k = 3c/2`.
///
/// Uses `C(2k, k) >= 4^k / sqrt(4k)`, which reduces the condition to
/// `c > log2(c) + log2(3) + 2 log2(3/2)`, with `log2(c) = tower(c_height - 1)`.
pub(crate) fn three_halves_step_holds(c_height: u32) -> bool {
    if c_height < 2 {
        // c must be a multiple of 4
        return false;
    }
    let slack = 3f64.log2() + 2.0 * 1.5f64.log2();
    match tower(c_height - 1).to_u64() {
        Some(log_c) if log_c < 1000 => 2f64.powi(log_c as i32) > log_c as f64 + slack,
        _ => true,
    }
}

fn greedy_exact(mut current: BigUint, mut input: PlanSize, stages: &mut Vec<PlannedStage>) {
    let six = BigUint::from(6u32);
    let four = BigUint::from(4u32);
    while current > six {
        let k = least_ns_k(&current);
        let out = BigUint::from(2 * k);
        stages.push(PlannedStage::Ns { input, output: PlanSize::Exact(out.clone()) });
        input = PlanSize::Exact(out.clone());
        current = out;
    }
    if current > four {
        stages.push(PlannedStage::Ns { input, output: PlanSize::Exact(four.clone()) });
        current = four.clone();
    }
    if current == four {
        stages.push(PlannedStage::FourToThree);
    }
}

/// Greedy NS schedule from `n` colours down to 3.
///
/// While more than 6 colours remain, one NS round with the least admissible
/// `k` is added; 5 or 6 colours take one more NS round to 4, and the 4 → 3
/// reducer finishes. For symbolic `n = tower(h) + d` with `h >= 6` the plan
/// first descends through `(3/2) tower(g)` palettes one NS round per level
/// until `(3/2) tower(5)`, which is exact, then continues greedily.
pub fn plan_schedule(n: &Magnitude) -> Result<SchedulePlan> {
    if *n < Magnitude::from_u64(3) {
        return Err(Error::param(format!("scheduling needs n >= 3, got {n}")));
    }
    let mut stages = Vec::new();
    match n.to_biguint() {
        Some(v) if v == BigUint::from(3u32) => stages.push(PlannedStage::Identity(3)),
        Some(v) => greedy_exact(v, PlanSize::Given(n.clone()), &mut stages),
        None => {
            let (height, _) = n.as_tower().expect("only towers are non-exact");
            let mut input = PlanSize::Given(n.clone());
            for g in (EXACT_TOWER_HEIGHT + 1..=height).rev() {
                // n <= (3/2) tower(height) for any i64 offset
                debug_assert!(three_halves_step_holds(g - 1));
                stages.push(PlannedStage::Ns {
                    input,
                    output: PlanSize::ThreeHalvesTower(g - 1),
                });
                input = PlanSize::ThreeHalvesTower(g - 1);
            }
            // (3/2) tower(5) = 3 * 2^(tower(4) - 1)
            let exponent = tower(EXACT_TOWER_HEIGHT - 1).to_u64().expect("tower(4) = 65536");
            let three_halves = BigUint::from(3u32) << (exponent as usize - 1);
            greedy_exact(three_halves, input, &mut stages);
        }
    }
    Ok(SchedulePlan { n: n.clone(), stages })
}

/// Runnable greedy schedule for a concrete palette size.
pub fn ns_schedule(n: u32) -> Result<Pipeline> {
    plan_schedule(&Magnitude::from_u64(u64::from(n)))?.to_pipeline()
}
