//! Integer matrices over arbitrary-precision integers: Hermite and Smith normal
//! forms with transforms, left kernels and integer row solves.
//!
//! Matrices are row-major `Vec<Vec<BigInt>>` and act on row vectors from the right.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> IMat {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Row-style Hermite normal form `H = U·A`.
///
/// Nonzero rows of `H` come first with strictly increasing pivot columns, positive
/// pivots, and entries above each pivot reduced into `[0, pivot)`.
pub struct Hermite {
    pub h: IMat,
    pub u: IMat,
    pub rank: usize,
}

pub fn hermite(a: &IMat, cols: usize) -> Hermite {
    let m = a.len();
    let mut h = a.clone();
    let mut u = identity(m);
    let mut row = 0;
    for c in 0..cols {
        if row == m {
            break;
        }
        loop {
            // Smallest nonzero entry at or below `row` becomes the pivot.
            let best = (row..m).filter(|&r| !h[r][c].is_zero()).min_by(|&x, &y| h[x][c].abs().cmp(&h[y][c].abs()));
            let Some(best) = best else { break };
            h.swap(row, best);
            u.swap(row, best);
            let mut done = true;
            for r in row + 1..m {
                if h[r][c].is_zero() {
                    continue;
                }
                let q = h[r][c].div_floor(&h[row][c]);
                sub_row(&mut h, r, row, &q);
                sub_row(&mut u, r, row, &q);
                if !h[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[row][c].is_zero() {
            continue;
        }
        if h[row][c].is_negative() {
            negate_row(&mut h, row);
            negate_row(&mut u, row);
        }
        for r in 0..row {
            let q = h[r][c].div_floor(&h[row][c]);
            if !q.is_zero() {
                sub_row(&mut h, r, row, &q);
                sub_row(&mut u, r, row, &q);
            }
        }
        row += 1;
    }
    Hermite { h, u, rank: row }
}

fn sub_row(m: &mut IMat, target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(&src) {
        *t -= q * s;
    }
}

fn negate_row(m: &mut IMat, r: usize) {
    for x in m[r].iter_mut() {
        *x = -core::mem::take(x);
    }
}

/// Integer basis of `{x : x·A = 0}`.
pub fn left_kernel(a: &IMat, cols: usize) -> IMat {
    let he = hermite(a, cols);
    he.u[he.rank..].to_vec()
}

/// Some integer `x` with `x·A = b`, if one exists.
pub fn solve_row(a: &IMat, cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let he = hermite(a, cols);
    let mut rest: Vec<BigInt> = b.to_vec();
    let mut y = alloc::vec![BigInt::zero(); a.len()];
    for (i, yi) in y.iter_mut().enumerate().take(he.rank) {
        let c = he.h[i].iter().position(|x| !x.is_zero()).unwrap();
        if !rest[c].is_multiple_of(&he.h[i][c]) {
            return None;
        }
        let q = &rest[c] / &he.h[i][c];
        for (r, hv) in rest.iter_mut().zip(&he.h[i]) {
            *r -= &q * hv;
        }
        *yi = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(mul_row(&y, &he.u))
}

pub fn mul_row(v: &[BigInt], m: &IMat) -> Vec<BigInt> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = alloc::vec![BigInt::zero(); cols];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += vi * x;
        }
    }
    out
}

/// Smith normal form `U·A·V = D` with `d_1 | d_2 | …` nonnegative.
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub u: IMat,
    pub v: IMat,
}

pub fn smith(a: &IMat, cols: usize) -> Smith {
    let m = a.len();
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        let pos = (t..m)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !d[i][j].is_zero())
            .min_by(|&(a1, b1), &(a2, b2)| d[a1][b1].abs().cmp(&d[a2][b2].abs()));
        let Some((pi, pj)) = pos else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        let mut clean = true;
        for i in t + 1..m {
            if !d[i][t].is_zero() {
                let q = d[i][t].div_floor(&d[t][t]);
                sub_row(&mut d, i, t, &q);
                sub_row(&mut u, i, t, &q);
                clean &= d[i][t].is_zero();
            }
        }
        for j in t + 1..cols {
            if !d[t][j].is_zero() {
                let q = d[t][j].div_floor(&d[t][t]);
                sub_col(&mut d, j, t, &q);
                sub_col(&mut v, j, t, &q);
                clean &= d[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold an offending row into row t and retry.
        let bad = (t + 1..m).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
        if let Some(i) = bad {
            let one = -BigInt::one();
            sub_row(&mut d, t, i, &one);
            sub_row(&mut u, t, i, &one);
            continue;
        }
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        diag.push(d[t][t].clone());
        t += 1;
    }
    Smith { diag, u, v }
}

fn swap_cols(m: &mut IMat, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn sub_col(m: &mut IMat, target: usize, source: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let s = row[source].clone();
        row[target] -= q * s;
    }
}
