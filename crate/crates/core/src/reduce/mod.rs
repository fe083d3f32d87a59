//! Concrete colour-reduction rules and the pipelines that chain them down
//! to three colours.

mod algorithms;
mod colex;
mod pipeline;
mod schedule;

pub use algorithms::{cv_algorithm, four_to_three, ns_algorithm, shift_reduce};
pub use colex::{binomial, central_binomial, colex_rank, colex_unrank, SubsetCode};
pub use pipeline::{compose, Pipeline};
pub use schedule::{
    least_cv_k, least_ns_k, ns_schedule, plan_schedule, PlanSize, PlannedStage, SchedulePlan,
};
