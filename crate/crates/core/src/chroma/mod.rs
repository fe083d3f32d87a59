//! Exact graph colouring: a complete DSATUR backtracking search with clique
//! precolouring, certificates, and a DIMACS CNF encoding for outside
//! solvers.

mod cnf;
mod search;

pub use cnf::{export_cnf, Cnf};
pub use search::{
    chromatic_number, greedy_clique, k_colourable, verify_colouring, ColouringCertificate,
    DEFAULT_NODE_LIMIT,
};
