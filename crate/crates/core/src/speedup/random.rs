use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::model::{for_each_walk, table_index, Colour, Palette, ReductionAlgorithm};
use crate::reduce::{compose, ns_schedule, Pipeline};

/// Recolouring sweeps applied to the seed table.
const SWEEPS: usize = 8;

/// The shortest prefix of the standard schedule reaching at most `c`
/// colours, or `None` when no reduction is needed.
fn seed_pipeline(n: u32, c: u32) -> Result<Option<Pipeline>> {
    if n <= c {
        return Ok(None);
    }
    let full = ns_schedule(n)?;
    let cut = full
        .stages()
        .iter()
        .position(|s| s.output().size() <= c)
        .ok_or_else(|| Error::param(format!("no known reduction from {n} to {c} colours")))?;
    Pipeline::new(full.stages()[..=cut].to_vec()).map(Some)
}

/// A random proper one-sided `t`-round rule from `[n]` to `[c]`, stored as
/// a dense table.
///
/// A known reducer (padded to `t` rounds, with inputs and outputs permuted
/// at random) seeds the table; then random single-window recolourings that
/// keep every overlapping pair distinct scramble it.
pub fn random_proper_table<R: Rng + ?Sized>(
    rng: &mut R,
    n: u32,
    t: usize,
    c: u32,
) -> Result<ReductionAlgorithm> {
    if n < 2 || c > 63 {
        return Err(Error::param("need n >= 2 and c <= 63"));
    }
    let input = Palette::new(n)?;
    let output = Palette::new(c)?;
    let seed = seed_pipeline(n, c)?.map(|p| compose(&p));
    let seed_rounds = seed.as_ref().map_or(0, |a| a.rounds());
    if seed_rounds > t {
        return Err(Error::param(format!(
            "no known {t}-round reduction from {n} to {c} colours"
        )));
    }

    let mut relabel: Vec<Colour> = (1..=n).collect();
    relabel.shuffle(rng);
    let mut recolour: Vec<Colour> = (1..=c).collect();
    recolour.shuffle(rng);

    let len = t + 1;
    let mut windows: Vec<Vec<Colour>> = Vec::new();
    let _ = for_each_walk::<()>(n, len, |w| {
        windows.push(w.to_vec());
        ControlFlow::Continue(())
    });
    let mut table = vec![1; (n as usize).pow(len as u32)];
    let mut scratch = vec![0; len];
    for w in &windows {
        for (s, &x) in scratch.iter_mut().zip(w) {
            *s = relabel[x as usize - 1];
        }
        let base = match &seed {
            Some(a) => a.eval(&scratch[len - a.window_len()..]),
            None => scratch[len - 1],
        };
        table[table_index(n as usize, w)] = recolour[base as usize - 1];
    }

    let mut neighbour = vec![0; len];
    for _ in 0..SWEEPS * windows.len() {
        let w = &windows[rng.gen_range(0..windows.len())];
        let mut used: u64 = 0;
        neighbour[..len - 1].copy_from_slice(&w[1..]);
        for y in (1..=n).filter(|&y| y != w[len - 1]) {
            neighbour[len - 1] = y;
            used |= 1 << table[table_index(n as usize, &neighbour)];
        }
        neighbour[1..].copy_from_slice(&w[..len - 1]);
        for z in (1..=n).filter(|&z| z != w[0]) {
            neighbour[0] = z;
            used |= 1 << table[table_index(n as usize, &neighbour)];
        }
        let free: Vec<Colour> = (1..=c).filter(|&x| used >> x & 1 == 0).collect();
        if let Some(&x) = free.choose(rng) {
            table[table_index(n as usize, w)] = x;
        }
    }

    ReductionAlgorithm::from_table(format!("table n={n} t={t} c={c}"), t, input, output, table)
}
