//! One-shot reproduction of the computational claims behind the bounds.

use anyhow::Result;
use clap::ValueEnum;
use pathchroma::chroma::{k_colourable, DEFAULT_NODE_LIMIT};
use pathchroma::graphs::{
    explicit_sixteen_classes, neighbourhood_graph, sixteen_class_of, successor_graph_from_relation,
    verify_partition, worst_case_successor_graph, WindowMode,
};
use pathchroma::model::{exhaustive_properness_check, is_proper, tower};
use pathchroma::reduce::{compose, ns_schedule};
use pathchroma::speedup::{
    compose_colouring, derived_successor_relation, exhaustive_one_round_lower_bound,
    iterate_speed_up, output_relation, successor_relation,
};
use pathchroma::{Budget, PathInstance, Topology};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Lemma4,
    Lemma5,
    S2star,
    Lemma9,
    Lemma7,
    Lemma6,
    Theorem2,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Lemma4,
        Claim::Lemma5,
        Claim::S2star,
        Claim::Lemma9,
        Claim::Lemma7,
        Claim::Lemma6,
        Claim::Theorem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Lemma4 => "lemma4",
            Claim::Lemma5 => "lemma5",
            Claim::S2star => "s2star",
            Claim::Lemma9 => "lemma9",
            Claim::Lemma7 => "lemma7",
            Claim::Lemma6 => "lemma6",
            Claim::Theorem2 => "theorem2",
        }
    }
}

pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: String) -> Self {
        Verdict { passed, detail }
    }
}

/// Seed for the random cycles simulated by the schedule claim.
pub const SCHEDULE_SEED: u64 = 1;

pub fn check(claim: Claim, budget: Budget) -> Result<Verdict> {
    match claim {
        Claim::Lemma4 => {
            let search = exhaustive_one_round_lower_bound(4, 3, budget)?;
            Ok(Verdict::new(
                search.lower_bound_holds() && search.examined == 3u64.pow(12),
                format!("no 1-round 4->3 rule, examined={}", search.examined),
            ))
        }
        Claim::Lemma5 => {
            let g = neighbourhood_graph(7, 1, WindowMode::AllDistinct)?;
            let cert = k_colourable(&g, 3, DEFAULT_NODE_LIMIT)?;
            let passed = g.vertex_count() == 210 && g.edge_count() == 1050 && !cert.is_sat();
            Ok(Verdict::new(
                passed,
                format!(
                    "N(7,1) vertices={} edges={} 3-colouring: {}",
                    g.vertex_count(),
                    g.edge_count(),
                    cert.to_string().lines().next().unwrap_or("SAT")
                ),
            ))
        }
        Claim::S2star => {
            let g = worst_case_successor_graph();
            let loops = (0..g.vertex_count()).filter(|&v| g.has_edge(v, v)).count();
            Ok(Verdict::new(
                g.vertex_count() == 55 && loops == 0,
                format!("vertices={} edges={} loops={loops}", g.vertex_count(), g.edge_count()),
            ))
        }
        Claim::Lemma9 => {
            let g = worst_case_successor_graph();
            let p = explicit_sixteen_classes();
            let valid = verify_partition(&g, &p);
            let cert = k_colourable(&g, 16, DEFAULT_NODE_LIMIT)?;
            let mut sizes = p.sizes();
            sizes.sort_unstable();
            let expected = [1, 1, 1, 1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 8, 8, 8];
            Ok(Verdict::new(
                valid && p.len() == 16 && sizes == expected && cert.is_sat(),
                format!(
                    "classes={} partition_valid={valid} 16-colouring={}",
                    p.len(),
                    if cert.is_sat() { "SAT" } else { "UNSAT" }
                ),
            ))
        }
        Claim::Lemma7 => {
            let a = compose(&ns_schedule(7)?);
            let levels = iterate_speed_up(&a, 2, budget)?;
            let mut passed = true;
            let mut parts = Vec::new();
            for k in 0..2 {
                let s = successor_relation(&levels[k], budget)?;
                let r = output_relation(&levels[k], budget)?;
                let next = successor_relation(&levels[k + 1], budget)?;
                let derived = derived_successor_relation(&r, &s)?;
                let equal = next == derived;
                passed &= equal;
                parts.push(format!(
                    "k={k} empirical={} derived={} contained={} equal={equal}",
                    next.pairs().len(),
                    derived.pairs().len(),
                    next.pairs().is_subset(derived.pairs())
                ));
            }
            Ok(Verdict::new(passed, parts.join("; ")))
        }
        Claim::Lemma6 => {
            let a = compose(&ns_schedule(7)?);
            let levels = iterate_speed_up(&a, 2, budget)?;
            let level = &levels[2];
            let b = compose_colouring(level, |c| sixteen_class_of(c).map(|i| i as u32 + 1), 16)?;
            let proper = exhaustive_properness_check(&b, budget)?;
            let s2 = successor_graph_from_relation(
                level.colours(),
                &successor_relation(level, budget)?,
            )?;
            let contained = s2.is_subgraph_of(&worst_case_successor_graph());
            Ok(Verdict::new(
                proper && b.rounds() == a.rounds() - 2 && contained,
                format!(
                    "source rounds={} result rounds={} colours<=16 proper={proper} S2_in_S2star={contained}",
                    a.rounds(),
                    b.rounds()
                ),
            ))
        }
        Claim::Theorem2 => {
            let mut rng = ChaCha8Rng::seed_from_u64(SCHEDULE_SEED);
            let mut passed = true;
            let mut parts = Vec::new();
            for h in 2..=4u32 {
                let n = tower(h).to_u64().expect("small tower") as u32 + 1;
                let pipeline = ns_schedule(n)?;
                let input = PathInstance::random(&mut rng, Topology::Cycle, n, 10_000)?;
                let proper = is_proper(&pipeline.run(&input)?);
                let ok = pipeline.rounds() <= h as usize + 1 && proper;
                passed &= ok;
                parts.push(format!("n={n} rounds={} proper={proper}", pipeline.rounds()));
            }
            Ok(Verdict::new(passed, parts.join("; ")))
        }
    }
}
