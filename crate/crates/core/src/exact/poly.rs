//! Dense univariate polynomials over an exact field.
//!
//! Coefficients ascend by degree and the vector never ends in a zero, so the
//! zero polynomial is the empty vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactField, ExactRing, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: ExactField> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.from_i64_like(i as i64) * c.clone())
                .collect(),
        )
    }

    /// Horner evaluation at a point of the coefficient field.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// `x^n * p(1/x)` for `n >= deg p`: the coefficient vector padded to
    /// length `n + 1` and reversed.
    pub fn reversed(&self, n: usize) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        assert!(n >= deg, "reversal length below degree");
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - i] = c.clone();
        }
        Self::from_coeffs(out)
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let v = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) if negate_rhs => a.clone() - b.clone(),
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) if negate_rhs => -b.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Self::from_coeffs(out)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }
}

/// Euclidean division: `a = q*b + r` with `deg r < deg b`.
pub fn poly_divmod<F: ExactField>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>)> {
    let db = b.degree().ok_or(Error::ZeroPolynomialDivisor)?;
    let Some(da) = a.degree() else {
        return Ok((Polynomial::zero(), Polynomial::zero()));
    };
    if da < db {
        return Ok((Polynomial::zero(), a.clone()));
    }
    let lead_inv = b.coeffs[db].inverse().expect("nonzero leading coefficient");
    let mut rem = a.coeffs.clone();
    let mut quot = vec![a.coeffs[0].zero_like(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let c = rem[shift + db].clone() * lead_inv.clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            rem[shift + j] = rem[shift + j].clone() - c.clone() * bj.clone();
        }
        quot[shift] = c;
    }
    rem.truncate(db);
    Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g` and `g` the
/// monic gcd.
pub fn poly_xgcd<F: ExactField>(
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<(Polynomial<F>, Polynomial<F>, Polynomial<F>)> {
    let sample = a
        .coeffs
        .first()
        .or(b.coeffs.first())
        .ok_or(Error::ZeroGcd)?;
    let one = Polynomial::constant(sample.one_like());
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), Polynomial::zero());
    let (mut t0, mut t1) = (Polynomial::zero(), one);
    while !r1.is_zero() {
        let (q, r) = poly_divmod(&r0, &r1)?;
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lc_inv = r0
        .leading()
        .expect("gcd of non-zero inputs is nonzero")
        .inverse()
        .expect("nonzero leading coefficient");
    Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
}

impl<'a, F: ExactField> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.add_impl(rhs, false)
    }
}

impl<'a, F: ExactField> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.add_impl(rhs, true)
    }
}

impl<'a, F: ExactField> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.mul_impl(rhs)
    }
}

impl<F: ExactField> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs, false)
    }
}

impl<F: ExactField> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Self {
        self.add_impl(&rhs, true)
    }
}

impl<F: ExactField> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<F: ExactField> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: ExactField + fmt::Display> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

impl Polynomial<Rational> {
    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff_q(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }
}

// Only the rational instance is a ring element in the trait sense: the zero
// polynomial over a context-dependent field has no way to name its one.
impl ExactRing for Polynomial<Rational> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::from_i64(&[1])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}
