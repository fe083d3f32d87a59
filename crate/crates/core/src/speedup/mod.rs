//! The set-valued speed-up transform and the colour relations it induces.
//!
//! Speeding up a one-sided `t`-round `c`-colouring gives a `(t-1)`-round
//! rule whose output is the set of colours the original rule could give the
//! successor. Set colours are encoded as bitmasks over `[c]`: colour `X`
//! has bit `j - 1` set for every `j ∈ X`, so the non-empty proper subsets of
//! `[c]` occupy `1..=2^c - 2`.

mod lower_bound;
mod random;
mod relations;
mod transform;

pub use lower_bound::{exhaustive_one_round_lower_bound, OneRoundSearch};
pub use random::random_proper_table;
pub use relations::{
    derived_successor_relation, output_relation, successor_relation, ColourRelation, RelationKind,
};
pub use transform::{compose_colouring, decode_set, iterate_speed_up, speed_up, Level};

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::model::{for_each_walk_from, Colour};

/// Runs `visit` over every adjacent-distinct walk of length `len` over
/// `[n]`, split by first colour across threads, and unions the results.
pub(crate) fn collect_over_walks<T, F>(n: u32, len: usize, visit: F) -> BTreeSet<T>
where
    T: Ord + Send,
    F: Fn(&[Colour], &mut BTreeSet<T>) + Sync,
{
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let _ = for_each_walk_from::<()>(n, len, first, |w| {
                visit(w, &mut found);
                ControlFlow::Continue(())
            });
            found
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            a.append(&mut b);
            a
        })
}
