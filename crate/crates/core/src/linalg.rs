//! Dense linear algebra over the prime field GF(p).
//!
//! Residues are kept as `u32` in `[0, p)`; every product of two residues fits
//! in a `u64`, so no intermediate ever overflows for `p < 2^16`.

use std::fmt;

use crate::error::{Error, Result};

/// Multiplicative inverse of `a` modulo the prime `p` (`a` must be nonzero).
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc: u64 = 1 % m;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// A dense `rows x cols` matrix over GF(p), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Result of [`FpMatrix::echelonize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Solution set of `a x = b`: `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u32>,
    pub nullspace: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        assert!((2..(1 << 16)).contains(&p), "modulus out of supported range");
        FpMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of (possibly unreduced) integers.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    pub fn from_residue_rows(p: u32, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, v) in r.into_iter().enumerate() {
                m.set(i, j, v % p);
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(x)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % self.p as u64) as u32
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let p = self.p;
        for v in &mut self.entries[r * self.cols..(r + 1) * self.cols] {
            *v = mul_mod(*v, s, p);
        }
    }

    /// row[dst] -= f * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, f: u32) {
        if f == 0 {
            return;
        }
        let p = self.p;
        let nf = neg_mod(f, p);
        for c in 0..self.cols {
            let s = self.entries[src * self.cols + c];
            if s != 0 {
                let d = &mut self.entries[dst * self.cols + c];
                *d = add_mod(*d, mul_mod(s, nf, p), p);
            }
        }
    }

    /// Reduced row-echelon form. Pivot search scans columns left to right and
    /// takes the first nonzero entry from the top of the unreduced rows.
    pub fn echelonize(&self) -> Echelon {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = inv_mod(m.get(r, c), p);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    m.sub_row(i, r, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelonize().rank
    }

    /// Basis of the right kernel `{x : self * x = 0}` in the standard form
    /// given by the free columns of the echelon form.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let e = self.echelonize();
        nullspace_from_echelon(&e, self.cols)
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[u32]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let p = self.p;
        let mut aug = FpMatrix::zeros(p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let e = aug.echelonize();
        if e.pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut particular = vec![0; self.cols];
        for (r, &c) in e.pivots.iter().enumerate() {
            particular[c] = e.matrix.get(r, self.cols);
        }
        let left = Echelon {
            matrix: e.matrix.clone(),
            rank: e.rank,
            pivots: e.pivots.clone(),
        };
        Ok(Solution {
            particular,
            nullspace: nullspace_from_echelon(&left, self.cols),
        })
    }
}

fn nullspace_from_echelon(e: &Echelon, cols: usize) -> Vec<Vec<u32>> {
    let p = e.matrix.p;
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &e.pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0; cols];
        x[free] = 1;
        for (r, &c) in e.pivots.iter().enumerate() {
            x[c] = neg_mod(e.matrix.get(r, free), p);
        }
        basis.push(x);
    }
    basis
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over GF({}) {}x{}", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
