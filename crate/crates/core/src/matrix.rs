//! Dense matrices over an exact ring, with brute-force determinant,
//! permanent and rank oracles.
//!
//! Elimination-based routines need a field; the expansion-based ones
//! (`determinant_leibniz`, both permanents) work over any [`ExactRing`], which
//! is what lets them run over jets and polynomials.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial_usize, ExactField, ExactRing, Rational};

/// Default cap on the order accepted by exponential-time oracles.
pub const DEFAULT_MAX_BRUTEFORCE: usize = 12;

#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

/// Which evaluation produced a kernel determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelRoute {
    /// `n ≥ m + 2`: the matrix has rank `m + 1 < n`.
    ForcedZero,
    /// `n = m + 1`: binomial constant times two Vandermonde products.
    Vandermonde,
    /// `n ≤ m`: no product formula, evaluated by elimination.
    Direct,
}

impl<F: ExactRing> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    /// `n × n` identity in the ring of `sample`.
    pub fn identity_like(n: usize, sample: &F) -> Result<Self> {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                sample.one_like()
            } else {
                sample.zero_like()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn map<G: ExactRing>(&self, f: impl FnMut(&F) -> G) -> ExactMatrix<G> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("same size")
    }

    /// Entry `(i, j)` of the result is entry `(row_perm[i], col_perm[j])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        if row_perm.len() != self.rows || col_perm.len() != self.cols {
            return Err(Error::ShapeMismatch("permutation length".into()));
        }
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(row_perm[i], col_perm[j]).clone()
        })
    }

    /// Entrywise product `A ∘ B`.
    pub fn hadamard_product(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(
                "Hadamard product of different shapes".into(),
            ));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch("inner dimensions differ".into()));
        }
        let zero = self.entries[0].zero_like();
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }

    pub fn trace(&self) -> Result<F> {
        let n = self.require_square()?;
        Ok((0..n).fold(self.entries[0].zero_like(), |acc, i| {
            acc + self.get(i, i).clone()
        }))
    }

    /// Determinant by the signed sum over all permutations.
    pub fn determinant_leibniz(&self) -> Result<F> {
        let n = self.require_square()?;
        Ok(self.expand(n, true))
    }

    /// Permanent by the sum over all `n!` permutations.
    pub fn permanent_naive(&self, max_n: usize) -> Result<F> {
        let n = self.require_square()?;
        if n > max_n {
            return Err(Error::SizeOverLimit { n, limit: max_n });
        }
        Ok(self.expand(n, false))
    }

    // Row-by-row expansion with prefix products; the sign of a partial
    // permutation is tracked through the inversions it introduces.
    fn expand(&self, n: usize, signed: bool) -> F {
        fn go<F: ExactRing>(
            m: &ExactMatrix<F>,
            row: usize,
            used: &mut Vec<bool>,
            prefix: F,
            negative: bool,
            signed: bool,
            acc: &mut F,
        ) {
            if row == m.rows {
                let term = if signed && negative { -prefix } else { prefix };
                *acc = acc.clone() + term;
                return;
            }
            for col in 0..m.cols {
                if used[col] {
                    continue;
                }
                let entry = m.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                // columns already used to the right of `col` are inversions
                let inversions = used[col + 1..].iter().filter(|&&u| u).count();
                used[col] = true;
                go(
                    m,
                    row + 1,
                    used,
                    prefix.clone() * entry.clone(),
                    negative ^ (inversions % 2 == 1),
                    signed,
                    acc,
                );
                used[col] = false;
            }
        }
        let sample = &self.entries[0];
        let mut acc = sample.zero_like();
        go(
            self,
            0,
            &mut vec![false; n],
            sample.one_like(),
            false,
            signed,
            &mut acc,
        );
        acc
    }

    /// Permanent by Ryser's inclusion-exclusion, visiting column subsets in
    /// Gray-code order so each step updates the row sums by one column.
    pub fn permanent_ryser(&self, max_n: usize) -> Result<F> {
        let n = self.ryser_guard(max_n)?;
        Ok(self.ryser_range(n, 1, 1u64 << n))
    }

    /// Same value as [`permanent_ryser`](Self::permanent_ryser), with the
    /// subset range split across the rayon pool and summed in range order.
    pub fn permanent_ryser_par(&self, max_n: usize) -> Result<F> {
        let n = self.ryser_guard(max_n)?;
        let total = 1u64 << n;
        let chunk = (total / 64).max(32);
        let starts: Vec<u64> = (1..total).step_by(chunk as usize).collect();
        let parts: Vec<F> = starts
            .par_iter()
            .map(|&lo| self.ryser_range(n, lo, (lo + chunk).min(total)))
            .collect();
        let zero = self.entries[0].zero_like();
        Ok(parts.into_iter().fold(zero, |acc, p| acc + p))
    }

    fn ryser_guard(&self, max_n: usize) -> Result<usize> {
        let n = self.require_square()?;
        if n > max_n {
            return Err(Error::SizeOverLimit { n, limit: max_n });
        }
        if n >= 63 {
            return Err(Error::SizeOverLimit { n, limit: 62 });
        }
        Ok(n)
    }

    /// Signed Ryser terms for Gray-code indices `lo..hi` (with `lo ≥ 1`),
    /// including the global `(−1)^n` factor.
    fn ryser_range(&self, n: usize, lo: u64, hi: u64) -> F {
        let zero = self.entries[0].zero_like();
        let gray = |t: u64| t ^ (t >> 1);
        let mut subset = gray(lo - 1);
        let mut sums: Vec<F> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| subset >> j & 1 == 1)
                    .fold(zero.clone(), |acc, j| acc + self.get(i, j).clone())
            })
            .collect();
        let mut acc = zero.clone();
        for t in lo..hi {
            let j = t.trailing_zeros() as usize;
            let adding = subset >> j & 1 == 0;
            subset ^= 1 << j;
            for (i, s) in sums.iter_mut().enumerate() {
                let e = self.get(i, j).clone();
                let cur = std::mem::replace(s, zero.clone());
                *s = if adding { cur + e } else { cur - e };
            }
            let mut prod = sums[0].clone();
            for s in &sums[1..] {
                if prod.is_zero() {
                    break;
                }
                prod = prod * s.clone();
            }
            // weight (−1)^{n − |S|}
            if (n - subset.count_ones() as usize) % 2 == 1 {
                acc = acc - prod;
            } else {
                acc = acc + prod;
            }
        }
        acc
    }
}

impl<F: ExactField> ExactMatrix<F> {
    /// Gaussian elimination over the field, pivoting on the first nonzero
    /// entry of each column.
    pub fn determinant(&self) -> Result<F> {
        let n = self.require_square()?;
        let mut a = self.entries.clone();
        let mut det = a[0].one_like();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(a[0].zero_like());
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            let inv = pivot.inverse().expect("pivot is nonzero");
            det = det * pivot;
            for r in col + 1..n {
                let lead = a[r * n + col].clone();
                if lead.is_zero() {
                    continue;
                }
                let factor = lead * inv.clone();
                for j in col + 1..n {
                    let v = a[r * n + j].clone() - factor.clone() * a[col * n + j].clone();
                    a[r * n + j] = v;
                }
                a[r * n + col] = factor.zero_like();
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            let inv = a[rank * cols + col].inverse().expect("pivot is nonzero");
            for r in rank + 1..rows {
                let lead = a[r * cols + col].clone();
                if lead.is_zero() {
                    continue;
                }
                let factor = lead * inv.clone();
                for j in col..cols {
                    let v = a[r * cols + j].clone() - factor.clone() * a[rank * cols + j].clone();
                    a[r * cols + j] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Entrywise `m`-th power; negative `m` needs every entry invertible.
    pub fn hadamard_power(&self, m: i64) -> Result<Self> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (idx, e) in self.entries.iter().enumerate() {
            let v = e.pow_i(m).ok_or(Error::SingularEntry {
                row: idx / self.cols,
                col: idx % self.cols,
            })?;
            entries.push(v);
        }
        Self::new(self.rows, self.cols, entries)
    }
}

impl ExactMatrix<Rational> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::identity_like(n, &Rational::one())
    }
}

/// The matrix `((x_i − y_j)^{−m})`. For `m > 0` a coincidence `x_i = y_j`
/// is an error; `m ≤ 0` gives polynomial entries and accepts any nodes.
pub fn build_cauchy<F: ExactField>(xs: &[F], ys: &[F], m: i64) -> Result<ExactMatrix<F>> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::ShapeMismatch("empty node vector".into()));
    }
    let mut entries = Vec::with_capacity(xs.len() * ys.len());
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            let d = x.clone() - y.clone();
            let v = d.pow_i(-m).ok_or(Error::SingularEntry { row: i, col: j })?;
            entries.push(v);
        }
    }
    ExactMatrix::new(xs.len(), ys.len(), entries)
}

/// The polynomial kernel `((x_i − y_j)^m)` over any ring.
pub fn kernel_matrix<F: ExactRing>(xs: &[F], ys: &[F], m: u32) -> Result<ExactMatrix<F>> {
    ExactMatrix::from_fn(xs.len(), ys.len(), |i, j| {
        (xs[i].clone() - ys[j].clone()).pow_u(m as u64)
    })
}

/// The circulant with entry `(i, j)` equal to `row[(j − i) mod n]`.
pub fn circulant<F: ExactRing>(row: &[F]) -> Result<ExactMatrix<F>> {
    let n = row.len();
    ExactMatrix::from_fn(n, n, |i, j| row[(j + n - i) % n].clone())
}

/// Determinant of [`circulant`]`(row)` as `∏_{k=1}^{n} Σ_i ζ^{ik} row[i]`,
/// where `zeta` must be a primitive `n`-th root of unity in the entry field.
pub fn circulant_det<F: ExactRing>(row: &[F], zeta: &F) -> Result<F> {
    let n = row.len();
    if n == 0 {
        return Err(Error::ShapeMismatch("empty circulant row".into()));
    }
    let one = zeta.one_like();
    let mut power = one.clone();
    for k in 1..=n {
        power = power * zeta.clone();
        if (k < n) == (power == one) {
            return Err(Error::ZetaOrderMismatch(n));
        }
    }
    let mut det = one.clone();
    for k in 1..=n {
        let step = zeta.pow_u(k as u64);
        let mut w = one.clone();
        let mut eig = zeta.zero_like();
        for b in row {
            eig = eig + w.clone() * b.clone();
            w = w * step.clone();
        }
        det = det * eig;
    }
    Ok(det)
}

/// `det((x_i − y_j)^m)` by the product formula where one exists.
///
/// For `n ≥ m + 1` the matrix factors as a binomial-weighted Vandermonde in
/// the `x`'s times a matrix of powers of the `y`'s, giving
/// `(−1)^{mn} ∏_{i<n} C(m, i) ∏ y_i^{m−n+1} ∏_{i<j} (x_j − x_i)(y_j − y_i)`.
/// The binomial product vanishes once `n ≥ m + 2`, and at `n = m + 1` the
/// sign and the `y` powers are both trivial. For `n ≤ m` the determinant is
/// computed directly.
pub fn kernel_det_closed<F: ExactField>(xs: &[F], ys: &[F], m: u32) -> Result<(F, KernelRoute)> {
    let n = xs.len();
    if n == 0 || ys.len() != n {
        return Err(Error::ShapeMismatch(
            "node vectors must have equal positive length".into(),
        ));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let m = m as usize;
    if n >= m + 2 {
        return Ok((xs[0].zero_like(), KernelRoute::ForcedZero));
    }
    if n == m + 1 {
        let mut v = xs[0].one_like();
        for i in 0..n {
            v = v.scale(&Rational::from(binomial_usize(m, i)));
            for j in i + 1..n {
                v = v * (xs[j].clone() - xs[i].clone()) * (ys[j].clone() - ys[i].clone());
            }
        }
        return Ok((v, KernelRoute::Vandermonde));
    }
    let det = kernel_matrix(xs, ys, m as u32)?.determinant()?;
    Ok((det, KernelRoute::Direct))
}
