use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U·M·V = D` of an integer matrix.
///
/// `U` and `V` are unimodular, `D` is diagonal with non-negative entries
/// `d₁ | d₂ | … | d_r` followed by zeros. `u_inv` is the inverse of `U`,
/// kept because quotient generators are read off from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    rank: usize,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d₁, …, d_r`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Computes the Smith normal form of `m`.
///
/// Pivots are the smallest nonzero absolute value in the active block, ties
/// broken by lowest (row, column).
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // Row operations are mirrored on U and, inverted, on U⁻¹.
    let swap_rows = |d: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, a, b| {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
        ui.swap_cols(a, b);
    };
    let add_row =
        |d: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, dst, src, k: &BigInt| {
            d.add_row_multiple(dst, src, k);
            u.add_row_multiple(dst, src, k);
            ui.add_col_multiple(src, dst, &-k);
        };

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_in_block(&d, t) else {
            break;
        };
        swap_rows(&mut d, &mut u, &mut u_inv, t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    add_row(&mut d, &mut u, &mut u_inv, i, t, &-q);
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    d.add_col_multiple(j, t, &-&q);
                    v.add_col_multiple(j, t, &-q);
                }
            }

            // Remainders left behind are strictly smaller than the pivot;
            // promote the smallest one and go again.
            if let Some((pi, pj)) = smallest_in_cross(&d, t) {
                swap_rows(&mut d, &mut u, &mut u_inv, t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            let pivot = d[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => add_row(&mut d, &mut u, &mut u_inv, t, i, &BigInt::from(1)),
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }

    SmithDecomposition {
        u,
        u_inv,
        d,
        v,
        rank: t,
    }
}

/// Position of the smallest nonzero |entry| in rows/cols `t..`.
fn smallest_in_block(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// If row `t` or column `t` still has nonzero off-pivot entries, returns the
/// smallest such entry's position (which is smaller than the pivot).
fn smallest_in_cross(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let col = (t + 1..d.rows()).map(|i| (i, t));
    let row = (t + 1..d.cols()).map(|j| (t, j));
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in col.chain(row) {
        let x = &d[(i, j)];
        if x.is_zero() {
            continue;
        }
        if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
            best = Some((i, j));
        }
    }
    best
}
