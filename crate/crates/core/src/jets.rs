//! Truncated multivariate Taylor expansions over Q.
//!
//! A [`MultiJet`] lives in `Q[δ_1, …, δ_n] / (δ_1^{N+1}, …, δ_n^{N+1})` with
//! `N` the per-variable order. Substituting `x_i ↦ x_i + δ_i` into a rational
//! function and reading the coefficient of `∏ δ_i^{k_i}` yields its mixed
//! partial derivative divided by `∏ k_i!`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRing, Rational};
use crate::matrix::{build_cauchy, ExactMatrix};

#[derive(Clone, PartialEq, Debug)]
pub struct MultiJet {
    n: usize,
    order: usize,
    // index = Σ e_i (order+1)^i
    coeffs: Vec<Rational>,
}

impl MultiJet {
    fn with_coeffs(&self, coeffs: Vec<Rational>) -> Self {
        MultiJet {
            n: self.n,
            order: self.order,
            coeffs,
        }
    }

    pub fn constant(c: Rational, n: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); (order + 1).pow(n as u32)];
        coeffs[0] = c;
        MultiJet { n, order, coeffs }
    }

    pub fn zero(n: usize, order: usize) -> Self {
        Self::constant(Rational::zero(), n, order)
    }

    /// The nilpotent generator `δ_i`.
    pub fn generator(i: usize, n: usize, order: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::ShapeMismatch(format!("generator {i} of {n}")));
        }
        let mut j = Self::zero(n, order);
        if order >= 1 {
            j.coeffs[(order + 1).pow(i as u32)] = Rational::one();
        }
        Ok(j)
    }

    /// `x + δ_i`: variable `i` expanded around the point `x`.
    pub fn variable(x: Rational, i: usize, n: usize, order: usize) -> Result<Self> {
        let mut j = Self::generator(i, n, order)?;
        j.coeffs[0] = x;
        Ok(j)
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        let base = self.order + 1;
        (0..self.n)
            .map(|_| {
                let e = idx % base;
                idx /= base;
                e
            })
            .collect()
    }

    fn index(&self, exps: &[usize]) -> usize {
        let base = self.order + 1;
        exps.iter().rev().fold(0, |acc, &e| acc * base + e)
    }

    /// Coefficient of `∏ δ_i^{exps[i]}`.
    pub fn coeff(&self, exps: &[usize]) -> Result<&Rational> {
        if exps.len() != self.n || exps.iter().any(|&e| e > self.order) {
            return Err(Error::ShapeMismatch(format!(
                "exponents {exps:?} outside {} variables of order {}",
                self.n, self.order
            )));
        }
        Ok(&self.coeffs[self.index(exps)])
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    fn check_shape(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n || self.order != rhs.order {
            return Err(Error::ShapeMismatch(format!(
                "jets over ({}, {}) and ({}, {})",
                self.n, self.order, rhs.n, rhs.order
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_shape(rhs)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_shape(rhs)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_shape(rhs)?;
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        let rhs_terms: Vec<(Vec<usize>, &Rational)> = rhs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponents(i), c))
            .collect();
        let mut sum = vec![0; self.n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.exponents(i);
            'terms: for (eb, b) in &rhs_terms {
                for v in 0..self.n {
                    sum[v] = ea[v] + eb[v];
                    if sum[v] > self.order {
                        continue 'terms;
                    }
                }
                out[self.index(&sum)] += &(a * *b);
            }
        }
        Ok(self.with_coeffs(out))
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiplicative inverse; needs a nonzero constant term. Writing
    /// `j = c(1 + u)` with `u` nilpotent, `1/j = c^{−1} Σ_k (−u)^k`, and
    /// `u^k = 0` once `k` exceeds the total degree `n·order`.
    pub fn invert(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::ConstantTerm(
                "jet inverse needs a nonzero constant term".into(),
            ));
        }
        let cinv = c.recip()?;
        let mut neg_u = self.scale_by(&-&cinv);
        neg_u.coeffs[0] = Rational::zero();
        let one = Self::constant(Rational::one(), self.n, self.order);
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.n * self.order {
            power = power.checked_mul(&neg_u)?;
            if power.coeffs.iter().all(Rational::is_zero) {
                break;
            }
            acc = acc.checked_add(&power)?;
        }
        Ok(acc.scale_by(&cinv))
    }
}

impl Add for MultiJet {
    type Output = MultiJet;
    fn add(self, rhs: MultiJet) -> MultiJet {
        self.checked_add(&rhs).expect("jet shape mismatch")
    }
}

impl Sub for MultiJet {
    type Output = MultiJet;
    fn sub(self, rhs: MultiJet) -> MultiJet {
        self.checked_sub(&rhs).expect("jet shape mismatch")
    }
}

impl Mul for MultiJet {
    type Output = MultiJet;
    fn mul(self, rhs: MultiJet) -> MultiJet {
        self.checked_mul(&rhs).expect("jet shape mismatch")
    }
}

impl Neg for MultiJet {
    type Output = MultiJet;
    fn neg(self) -> MultiJet {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        self.with_coeffs(coeffs)
    }
}

impl ExactRing for MultiJet {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, self.order)
    }
    fn one_like(&self) -> Self {
        Self::constant(Rational::one(), self.n, self.order)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::constant(r.clone(), self.n, self.order)
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
}

/// The mixed partial `∂^{k_1}_1 ⋯ ∂^{k_n}_n` at the expansion point, i.e. the
/// coefficient of `∏ δ_i^{k_i}` times `∏ k_i!`.
pub fn mixed_partial_extract(j: &MultiJet, orders: &[usize]) -> Result<Rational> {
    let c = j.coeff(orders)?;
    Ok(orders
        .iter()
        .fold(c.clone(), |acc, &k| acc * Rational::from(factorial(k))))
}

/// Size limits for [`power_partials_check`]; the dense jet has `m^n` coefficients
/// and the expansion visits `n!` permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JetBudget {
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for JetBudget {
    fn default() -> Self {
        JetBudget { max_n: 3, max_m: 3 }
    }
}

/// Hadamard-power values next to the matching mixed partials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerPartials {
    pub lhs_det: Rational,
    pub rhs_det: Rational,
    pub lhs_per: Rational,
    pub rhs_per: Rational,
}

impl PowerPartials {
    pub fn holds(&self) -> bool {
        self.lhs_det == self.rhs_det && self.lhs_per == self.rhs_per
    }
}

fn all_distinct(v: &[Rational]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

/// Compare `det`/`per` of `((x_i − y_j)^{−m})` with
/// `(−1)^{n(m−1)} [(m−1)!]^{−n} ∂_1^{m−1} ⋯ ∂_n^{m−1}` of `det`/`per` of
/// `(1/(x_i − y_j))`, the derivatives taken in the `x`'s at the given point.
pub fn power_partials_check(
    n: usize,
    m: usize,
    xs: &[Rational],
    ys: &[Rational],
    budget: JetBudget,
) -> Result<PowerPartials> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("n and m must be positive".into()));
    }
    if n > budget.max_n || m > budget.max_m {
        return Err(Error::BudgetExceeded(format!(
            "n = {n}, m = {m} over the limit n ≤ {}, m ≤ {}",
            budget.max_n, budget.max_m
        )));
    }
    if xs.len() != n || ys.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "expected {n} nodes on each side"
        )));
    }
    if !all_distinct(xs) || !all_distinct(ys) {
        return Err(Error::InvalidParameter(
            "nodes must be pairwise distinct".into(),
        ));
    }

    let direct = build_cauchy(xs, ys, m as i64)?;
    let lhs_det = direct.determinant()?;
    let lhs_per = direct.permanent_naive(n)?;

    let order = m - 1;
    let mut entries = Vec::with_capacity(n * n);
    for (i, x) in xs.iter().enumerate() {
        let xj = MultiJet::variable(x.clone(), i, n, order)?;
        for (j, y) in ys.iter().enumerate() {
            if x == y {
                return Err(Error::SingularEntry { row: i, col: j });
            }
            let d = xj.checked_sub(&MultiJet::constant(y.clone(), n, order))?;
            entries.push(d.invert()?);
        }
    }
    let jets = ExactMatrix::new(n, n, entries)?;
    let top = vec![order; n];
    // the mixed partial divided by ((m−1)!)^n is the bare coefficient
    let sign = if (n * order).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let rhs_det = &sign * jets.determinant_leibniz()?.coeff(&top)?;
    let rhs_per = &sign * jets.permanent_naive(n)?.coeff(&top)?;
    Ok(PowerPartials {
        lhs_det,
        rhs_det,
        lhs_per,
        rhs_per,
    })
}
