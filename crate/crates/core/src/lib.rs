//! Colour reduction on directed paths and cycles in the LOCAL model.
//!
//! The crate covers both directions of the round-complexity question for
//! 3-colouring a directed path:
//!
//! * [`reduce`] builds the Naor–Stockmeyer, Cole–Vishkin and shift reducers
//!   and schedules them into pipelines that bring `n` colours down to 3.
//! * [`speedup`] applies the set-valued speed-up transform, extracts the
//!   successor and output relations, and checks the one-round lower bound
//!   for 4 → 3 exhaustively.
//! * [`graphs`] and [`chroma`] build neighbourhood and successor graphs and
//!   decide their colourability exactly.
//! * [`model`] holds the shared data model, the simulator, the one-sided /
//!   two-sided conversions and the log* / tower bound arithmetic.

pub mod chroma;
pub mod error;
pub mod graphs;
pub mod model;
pub mod reduce;
pub mod speedup;

pub use error::{Error, Result};
pub use model::{
    Budget, Colour, ColourWindow, Magnitude, Palette, PathInstance, ReductionAlgorithm, Sidedness,
    Topology,
};
