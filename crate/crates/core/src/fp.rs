//! Dense matrices over a prime field `F_p` with `p < 2^16`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMat {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2).
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// `x mod p` in `0..p`.
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

impl FpMat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> FpMat {
        FpMat { p, rows, cols, data: alloc::vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> FpMat {
        let mut m = FpMat::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> FpMat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|row| row.iter().map(move |&x| reduce(x, p))).collect();
        FpMat { p, rows: r, cols: c, data }
    }

    /// Columns given as vectors.
    pub fn from_columns(p: u32, rows: usize, cols: &[Vec<u32>]) -> FpMat {
        let mut m = FpMat::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Entries as signed representatives in `(-p/2, p/2]`.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        let half = self.p / 2;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| if x > half { x as i64 - self.p as i64 } else { x as i64 }).collect())
            .collect()
    }

    pub fn mul(&self, o: &FpMat) -> FpMat {
        assert_eq!(self.cols, o.rows, "matrix shapes");
        let p = self.p as u64;
        let mut out = FpMat::zeros(self.p, self.rows, o.cols);
        let mut acc = alloc::vec![0u64; o.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (x, &b) in acc.iter_mut().zip(o.row(k)) {
                    *x += a * b as u64;
                }
                // Keep the accumulator far from overflow.
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.data[i * o.cols + j] = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| (self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum::<u64>() % p) as u32)
            .collect()
    }

    pub fn add(&self, o: &FpMat) -> FpMat {
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| (a + b) % self.p).collect();
        FpMat { data, ..*self.shape() }
    }

    pub fn sub(&self, o: &FpMat) -> FpMat {
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| (a + self.p - b) % self.p).collect();
        FpMat { data, ..*self.shape() }
    }

    pub fn scale(&self, k: u32) -> FpMat {
        let data = self.data.iter().map(|&a| (a as u64 * k as u64 % self.p as u64) as u32).collect();
        FpMat { data, ..*self.shape() }
    }

    fn shape(&self) -> &FpMat {
        self
    }

    pub fn transpose(&self) -> FpMat {
        let mut t = FpMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Kronecker product, indexing `(i, k)` as `i * other.rows + k`.
    pub fn kron(&self, o: &FpMat) -> FpMat {
        let p = self.p as u64;
        let mut out = FpMat::zeros(self.p, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.data[(i * o.rows + k) * out.cols + j * o.cols + l] = (a * o.get(k, l) as u64 % p) as u32;
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(p: u32, blocks: &[&FpMat]) -> FpMat {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = FpMat::zeros(p, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(r0 + i) * c + c0 + j] = b.get(i, j);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(p: u32, cols: usize, parts: &[FpMat]) -> FpMat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            debug_assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
        }
        FpMat { p, rows, cols, data }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, mut e: usize) -> FpMat {
        let mut base = self.clone();
        let mut acc = FpMat::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), self.p) as u64;
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = (self.data[idx] as u64 * inv % p) as u32;
            }
            let pivot_row: Vec<u32> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c) as u64;
                if f == 0 {
                    continue;
                }
                let base = i * self.cols;
                for (off, &x) in pivot_row.iter().enumerate() {
                    let idx = base + c + off;
                    self.data[idx] = ((self.data[idx] as u64 + (p - f) * x as u64) % p) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = alloc::vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = m.get(r, f);
                    v[pc] = (self.p - x) % self.p;
                }
                v
            })
            .collect()
    }

    /// Some `x` with `A x = b`.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let mut aug = FpMat::zeros(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j);
            }
            aug.data[i * (self.cols + 1) + self.cols] = b[i] % self.p;
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![0u32; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<FpMat> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Singular);
        }
        let mut aug = FpMat::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let pivots = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return Err(Error::Singular);
        }
        let mut inv = FpMat::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.get(i, n + j);
            }
        }
        Ok(inv)
    }
}

/// Column-basis of the span of the given vectors, as an independent subset after reduction.
pub fn span_basis(p: u32, dim: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = FpMat::from_columns(p, dim, vectors).transpose();
    let pivots = m.rref();
    (0..pivots.len()).map(|r| m.row(r).to_vec()).collect()
}

/// Coordinates of each target in an independent column basis.
pub fn coordinates(p: u32, dim: usize, basis: &[Vec<u32>], targets: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let b = basis.len();
    let mut cols = basis.to_vec();
    cols.extend(targets.iter().cloned());
    let mut aug = FpMat::from_columns(p, dim, &cols);
    if cols.is_empty() {
        return Some(Vec::new());
    }
    let pivots = aug.rref();
    if pivots.iter().take_while(|&&c| c < b).count() != b || pivots.iter().any(|&c| c >= b) {
        return None;
    }
    Some((0..targets.len()).map(|j| (0..b).map(|r| aug.get(r, b + j)).collect()).collect())
}
