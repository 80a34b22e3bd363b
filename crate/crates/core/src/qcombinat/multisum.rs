use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{BiSeries, Coefficient, XSpecialization};

use super::inverse_pochhammer;

/// The Andrews–Gordon multisum
///
/// ```text
///   sum over N_1 >= ... >= N_k >= 0 of
///     x^(N_1 + ... + N_k) q^(N_1^2 + ... + N_k^2 + N_(i+1) + ... + N_k)
///     / ((q)_(N_1 - N_2) ... (q)_(N_(k-1) - N_k) (q)_(N_k))
/// ```
///
/// truncated to the window `(x_order, q_order)`. Tuples are enumerated
/// through their differences `d_j = N_j - N_(j+1)` (with `d_k = N_k`), so
/// the `j`-th denominator is `(q)_(d_j)`.
pub fn andrews_gordon_multisum(
    k: usize,
    i: usize,
    x_order: usize,
    q_order: usize,
) -> Result<BiSeries> {
    if k == 0 {
        return Err(Error::ZeroLevel);
    }
    if i > k {
        return Err(Error::IndexOutOfRange { k, i });
    }
    let inverses: Vec<BiSeries> = (0..=q_order)
        .map(|d| inverse_pochhammer(d, q_order))
        .collect();
    let mut walk = TupleWalk {
        i,
        x_order,
        q_order,
        inverses: &inverses,
        diffs: Vec::with_capacity(k),
        out: BiSeries::zero(x_order, q_order),
    };
    walk.descend(k, 0, 0, 0);
    Ok(walk.out)
}

struct TupleWalk<'a> {
    i: usize,
    x_order: usize,
    q_order: usize,
    inverses: &'a [BiSeries],
    diffs: Vec<usize>,
    out: BiSeries,
}

impl TupleWalk<'_> {
    // Chooses N_j given N_(j+1) = `prev`; `charge` and `exponent` hold the
    // contributions of N_(j+1), ..., N_k.
    fn descend(&mut self, j: usize, prev: usize, charge: usize, exponent: usize) {
        if j == 0 {
            self.emit(charge, exponent);
            return;
        }
        for d in 0.. {
            let n_j = prev + d;
            let charge = charge + n_j;
            let exponent = exponent + n_j * n_j + if j > self.i { n_j } else { 0 };
            if charge > self.x_order || exponent > self.q_order {
                break;
            }
            self.diffs.push(d);
            self.descend(j - 1, n_j, charge, exponent);
            self.diffs.pop();
        }
    }

    fn emit(&mut self, charge: usize, exponent: usize) {
        let n = self.q_order;
        let mut term = BiSeries::monomial(0, n, 0, exponent, Coefficient::from(1));
        for &d in &self.diffs {
            if d > 0 {
                term = &term * &self.inverses[d];
            }
        }
        for (dst, src) in self.out.row_mut(charge).iter_mut().zip(term.row(0)) {
            if !src.is_zero() {
                *dst += src;
            }
        }
    }
}

/// Smallest q-exponent carrying `x^m` in the level-`k`, index-`i` multisum:
/// the minimum of `N_1^2 + ... + N_k^2 + N_(i+1) + ... + N_k` over
/// `N_1 >= ... >= N_k >= 0` with `N_1 + ... + N_k = m`.
pub fn min_weight_for_charge(k: usize, i: usize, m: usize) -> usize {
    fn go(
        j: usize,
        k: usize,
        i: usize,
        remaining: usize,
        cap: usize,
        acc: usize,
        best: &mut usize,
    ) {
        if j == k {
            if remaining == 0 {
                *best = (*best).min(acc);
            }
            return;
        }
        // N_(j+1) in 1-based terms; parts must still fit into the remaining slots
        let slots = k - j;
        for n in (0..=cap.min(remaining)).rev() {
            if n * slots < remaining {
                break;
            }
            let cost = n * n + if j + 1 > i { n } else { 0 };
            go(j + 1, k, i, remaining - n, n, acc + cost, best);
        }
    }
    let mut best = usize::MAX;
    go(0, k, i, m, m, 0, &mut best);
    best
}

/// Largest q-order up to which specializing the `(x_order, q_order)`
/// truncation of the level-`k`, index-`i` character at `x = 1` or `x = q`
/// loses nothing: every omitted term `x^a q^b` with `a > x_order` lands
/// beyond it.
pub fn lossless_q_window(
    k: usize,
    i: usize,
    x_order: usize,
    q_order: usize,
    mode: XSpecialization,
) -> usize {
    let first_missing = x_order + 1;
    let lowest = min_weight_for_charge(k, i, first_missing);
    let lowest = match mode {
        XSpecialization::One => lowest,
        XSpecialization::Q => lowest + first_missing,
    };
    q_order.min(lowest - 1)
}
