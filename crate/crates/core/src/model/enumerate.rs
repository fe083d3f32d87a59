use std::ops::ControlFlow;

use super::Colour;

/// Number of sequences of length `len` over `[n]` with adjacent entries
/// distinct: `n (n-1)^(len-1)`. Saturates at `u128::MAX`.
pub fn walk_count(n: u32, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    let mut total = u128::from(n);
    for _ in 1..len {
        total = total.saturating_mul(u128::from(n.saturating_sub(1)));
    }
    total
}

/// Visits every adjacent-distinct sequence of length `len` over `[n]` in
/// lexicographic order. The visitor may stop the walk early by returning
/// `ControlFlow::Break`.
pub fn for_each_walk<B>(
    n: u32,
    len: usize,
    mut visit: impl FnMut(&[Colour]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut buf = vec![0; len];
    walk_from(n, &mut buf, 0, &mut visit)
}

/// Same as [`for_each_walk`] restricted to sequences starting with `first`.
pub(crate) fn for_each_walk_from<B>(
    n: u32,
    len: usize,
    first: Colour,
    mut visit: impl FnMut(&[Colour]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if len == 0 {
        return visit(&[]);
    }
    let mut buf = vec![0; len];
    buf[0] = first;
    walk_from(n, &mut buf, 1, &mut visit)
}

fn walk_from<B>(
    n: u32,
    buf: &mut [Colour],
    pos: usize,
    visit: &mut impl FnMut(&[Colour]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if pos == buf.len() {
        return visit(buf);
    }
    for c in 1..=n {
        if pos > 0 && buf[pos - 1] == c {
            continue;
        }
        buf[pos] = c;
        walk_from(n, buf, pos + 1, visit)?;
    }
    ControlFlow::Continue(())
}
