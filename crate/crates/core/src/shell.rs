//! Deterministic enumeration of integer vectors by max-norm shells.
//!
//! Shell `r` holds the vectors with largest absolute coordinate exactly `r`.
//! Inside a shell vectors are listed lexicographically, comparing single
//! coordinates in the order `0, 1, -1, 2, -2, ...`. The first vector of a
//! search that matches a property invariant under scaling is therefore
//! primitive: its primitive part lies in an earlier shell.

use std::ops::ControlFlow;

/// Position of `x` in the order `0, 1, -1, 2, -2, ...`.
pub fn coordinate_rank(x: i64) -> (u64, bool) {
    (x.unsigned_abs(), x < 0)
}

fn values_up_to(r: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=r).flat_map(|k| [k, -k]))
}

fn walk<T>(
    buf: &mut Vec<i64>,
    dim: usize,
    r: i64,
    reached: bool,
    f: &mut impl FnMut(&[i64]) -> ControlFlow<T>,
) -> ControlFlow<T> {
    if buf.len() == dim {
        return f(buf);
    }
    let last = buf.len() + 1 == dim;
    if last && !reached {
        for x in [r, -r] {
            buf.push(x);
            let flow = f(buf);
            buf.pop();
            flow?;
        }
        return ControlFlow::Continue(());
    }
    for x in values_up_to(r) {
        buf.push(x);
        let flow = walk(buf, dim, r, reached || x.abs() == r, f);
        buf.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every vector of shell `r >= 1` in order until `f` breaks.
pub fn for_each_in_shell<T>(
    dim: usize,
    r: u64,
    mut f: impl FnMut(&[i64]) -> ControlFlow<T>,
) -> Option<T> {
    if dim == 0 || r == 0 {
        return None;
    }
    let mut buf = Vec::with_capacity(dim);
    match walk(&mut buf, dim, r as i64, false, &mut f) {
        ControlFlow::Break(t) => Some(t),
        ControlFlow::Continue(()) => None,
    }
}

/// Visits the nonzero vectors with all coordinates in `[-bound, bound]`,
/// shell by shell.
pub fn for_each_in_box<T>(
    dim: usize,
    bound: u64,
    mut f: impl FnMut(&[i64]) -> ControlFlow<T>,
) -> Option<T> {
    (1..=bound).find_map(|r| for_each_in_shell(dim, r, &mut f))
}
