//! Truncated formal power series over Q.
//!
//! A series of order `N` carries the coefficients of `x^0 ..= x^N`; anything
//! above `N` is unknown and never read. Binary operations require equal
//! orders and report a mismatch instead of silently truncating.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    pub fn from_polynomial(p: &Polynomial<Rational>, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() == rhs.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), rhs.order()))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ConstantTerm(
                "inverse needs a nonzero constant term".into(),
            ));
        }
        let inv0 = c0.recip()?;
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal derivative. The result keeps the same order; its top
    /// coefficient is unknown (it would need `x^{N+1}`) and is set to zero,
    /// so callers must only read coefficients below the order.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            out[k - 1] = &self.coeffs[k] * Rational::from(k as i64);
        }
        TruncatedSeries { coeffs: out }
    }

    /// Formal antiderivative with zero constant term, same order.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            out[k] = &self.coeffs[k - 1] / Rational::from(k as i64);
        }
        TruncatedSeries { coeffs: out }
    }

    /// `x * self`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[1..].clone_from_slice(&self.coeffs[..n]);
        TruncatedSeries { coeffs: out }
    }

    /// `log φ = -Σ_{m≥1} (1-φ)^m / m`, requiring `φ(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_integer() || self.coeffs[0] != Rational::one() {
            return Err(Error::ConstantTerm("log needs constant term 1".into()));
        }
        let n = self.order();
        let u = Self::one(n).sub(self)?;
        let mut power = u.clone();
        let mut acc = Self::zero(n);
        // u has zero constant term, so u^m vanishes below x^m and m <= n suffices.
        for m in 1..=n {
            acc = acc.sub(&power.scale(&Rational::frac(1, m as i64)))?;
            power = power.mul(&u)?;
        }
        Ok(acc)
    }

    /// `exp s = Σ s^k / k!`, requiring `s(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm("exp needs constant term 0".into()));
        }
        let n = self.order();
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        for k in 1..=n {
            term = term.mul(self)?.scale(&Rational::frac(1, k as i64));
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(x^{})", self.coeffs, self.order() + 1)
    }
}

/// Power sums `p_1 ..= p_max` of the roots of a monic `f`, read off from
/// `-x g'(x) / g(x)` with `g(x) = x^n f(1/x)`.
pub fn power_sums_from_poly(f: &Polynomial<Rational>, max: usize) -> Result<Vec<Rational>> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let n = f.degree().expect("monic polynomial is nonzero");
    // one extra order so the derivative is exact through x^max
    let order = max + 1;
    let g = TruncatedSeries::from_polynomial(&f.reversed(n), order);
    let gen = g.derivative().shift_up().neg().mul(&g.invert()?)?;
    Ok(gen.coeffs[1..=max].to_vec())
}

/// Both sides of `(m/k)·[x^m] F^k = [x^{m-1}] (F^{k-1} F')`.
pub fn coef_identity_check(
    f: &TruncatedSeries,
    m: usize,
    k: usize,
) -> Result<(Rational, Rational)> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameter("m and k must be positive".into()));
    }
    if f.order() < m {
        return Err(Error::OrderTooSmall {
            have: f.order(),
            need: m,
        });
    }
    let lhs = Rational::frac(m as i64, k as i64) * &f.pow(k).coeffs[m];
    let rhs = f.pow(k - 1).mul(&f.derivative())?.coeffs[m - 1].clone();
    Ok((lhs, rhs))
}

/// Both sides of `Σ_{k=1}^m (m/k)[x^m] F^k = [x^m](-x (1-F)' / (1-F))`,
/// which needs `F(0) = 0`.
pub fn coef_aggregate_check(f: &TruncatedSeries, m: usize) -> Result<(Rational, Rational)> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::ConstantTerm(
            "aggregate identity needs F(0) = 0".into(),
        ));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if f.order() < m {
        return Err(Error::OrderTooSmall {
            have: f.order(),
            need: m,
        });
    }
    let mut lhs = Rational::zero();
    let mut power = TruncatedSeries::one(f.order());
    for k in 1..=m {
        power = power.mul(f)?;
        lhs += &(Rational::frac(m as i64, k as i64) * &power.coeffs[m]);
    }
    let one_minus = TruncatedSeries::one(f.order()).sub(f)?;
    let rhs_series = one_minus
        .derivative()
        .shift_up()
        .neg()
        .mul(&one_minus.invert()?)?;
    Ok((lhs, rhs_series.coeffs[m].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64(c, order)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            s(&[1, 1], 4).mul(&s(&[1, -1], 4)).unwrap(),
            s(&[1, 0, -1], 4)
        );
        assert_eq!(
            s(&[1; 5], 4).mul(&s(&[1, -1], 4)).unwrap(),
            TruncatedSeries::one(4)
        );
        assert_eq!(s(&[0, 1, 1], 4).pow(2), s(&[0, 0, 1, 2, 1], 4));
        assert_eq!(
            s(&[1], 3).add(&s(&[1], 4)).unwrap_err(),
            Error::OrderMismatch(3, 4)
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1], 6).invert().unwrap(), s(&[1; 7], 6));
        assert_eq!(s(&[1, -3, 2], 3).invert().unwrap(), s(&[1, 3, 7, 15], 3));
        assert!(matches!(
            s(&[0, 1], 3).invert(),
            Err(Error::ConstantTerm(_))
        ));
    }

    #[test]
    fn log_exp_examples() {
        let l = s(&[1, 1], 3).log().unwrap();
        assert_eq!(l.coeffs(), &[q(0, 1), q(1, 1), q(-1, 2), q(1, 3)]);

        let phi = s(&[1, -3, 2], 6);
        assert_eq!(phi.log().unwrap().exp().unwrap(), phi);

        let a = s(&[1, 1], 8);
        let b = s(&[1, 2], 8);
        let lhs = a.mul(&b).unwrap().log().unwrap();
        let rhs = a.log().unwrap().add(&b.log().unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        assert!(s(&[2, 1], 3).log().is_err());
        assert!(s(&[1, 1], 3).exp().is_err());
    }

    #[test]
    fn power_sums_examples() {
        let f = Polynomial::from_i64(&[2, -3, 1]);
        assert_eq!(
            power_sums_from_poly(&f, 3).unwrap(),
            vec![q(3, 1), q(5, 1), q(9, 1)]
        );

        let c = q(-7, 3);
        let f = Polynomial::from_coeffs(vec![-c.clone(), Rational::one()]);
        let p = power_sums_from_poly(&f, 5).unwrap();
        for (k, pk) in p.iter().enumerate() {
            assert_eq!(pk, &c.pow(k as i64 + 1).unwrap());
        }

        let f = Polynomial::from_i64(&[1, 0, 1]);
        assert_eq!(
            power_sums_from_poly(&f, 4).unwrap(),
            vec![q(0, 1), q(-2, 1), q(0, 1), q(2, 1)]
        );

        assert_eq!(
            power_sums_from_poly(&Polynomial::from_i64(&[1, 2]), 2).unwrap_err(),
            Error::NonMonic
        );
    }

    #[test]
    fn coefficient_identity_examples() {
        let f = s(&[0, 1, 1], 4);
        assert_eq!(coef_identity_check(&f, 3, 2).unwrap(), (q(3, 1), q(3, 1)));
        let x = TruncatedSeries::x(6);
        for m in 1..=6 {
            assert_eq!(coef_identity_check(&x, m, m).unwrap(), (q(1, 1), q(1, 1)));
        }
        assert_eq!(coef_aggregate_check(&f, 2).unwrap(), (q(3, 1), q(3, 1)));
        assert_eq!(
            coef_identity_check(&f, 5, 1).unwrap_err(),
            Error::OrderTooSmall { have: 4, need: 5 }
        );
        assert!(coef_aggregate_check(&s(&[1, 1], 4), 2).is_err());
    }

    #[test]
    fn integral_inverts_derivative_below_order() {
        let f = s(&[0, 3, -1, 4, 2], 4);
        assert_eq!(f.derivative().integral().coeffs()[..4], f.coeffs()[..4]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_q() -> impl Strategy<Value = Rational> {
            (-9i64..10, 1i64..5).prop_map(|(n, d)| Rational::frac(n, d))
        }

        /// Series with zero constant term and at most `deg` nonzero terms.
        fn vanishing_at_zero(deg: usize, order: usize) -> impl Strategy<Value = TruncatedSeries> {
            prop::collection::vec(small_q(), deg).prop_map(move |tail| {
                let mut c = vec![Rational::zero()];
                c.extend(tail);
                TruncatedSeries::from_coeffs(c, order)
            })
        }

        fn unit_constant(deg: usize, order: usize) -> impl Strategy<Value = TruncatedSeries> {
            vanishing_at_zero(deg, order)
                .prop_map(move |s| s.add(&TruncatedSeries::one(order)).unwrap())
        }

        fn monic_poly(max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
            prop::collection::vec(small_q(), 1..=max_deg).prop_map(|mut c| {
                c.push(Rational::one());
                Polynomial::from_coeffs(c)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn single_power_identity(f in vanishing_at_zero(4, 10)) {
                for m in 1..=10 {
                    for k in 1..=m {
                        let (l, r) = coef_identity_check(&f, m, k).unwrap();
                        prop_assert_eq!(l, r, "m={} k={}", m, k);
                    }
                }
            }

            #[test]
            fn aggregate_identity(f in vanishing_at_zero(6, 12)) {
                for m in 1..=12 {
                    let (l, r) = coef_aggregate_check(&f, m).unwrap();
                    prop_assert_eq!(l, r, "m={}", m);
                }
            }

            #[test]
            fn weighted_power_sums_match_log_series(phi in vanishing_at_zero(6, 12)) {
                // g = 1 - phi; the power sums P_m of g satisfy Σ P_m/m x^m = Σ phi^k/k
                let order = 12;
                let g = TruncatedSeries::one(order).sub(&phi).unwrap();
                let p = g.derivative().shift_up().neg().mul(&g.invert().unwrap()).unwrap();
                let mut rhs = TruncatedSeries::zero(order);
                let mut power = TruncatedSeries::one(order);
                for k in 1..=order {
                    power = power.mul(&phi).unwrap();
                    rhs = rhs.add(&power.scale(&Rational::frac(1, k as i64))).unwrap();
                }
                for m in 1..order {
                    prop_assert_eq!(&p.coeffs()[m] / Rational::from(m as i64), rhs.coeffs()[m].clone());
                }
            }

            #[test]
            fn exp_inverts_log(phi in unit_constant(6, 12)) {
                prop_assert_eq!(phi.log().unwrap().exp().unwrap(), phi);
            }

            #[test]
            fn log_is_additive(a in unit_constant(4, 12), b in unit_constant(4, 12)) {
                let lhs = a.mul(&b).unwrap().log().unwrap();
                let rhs = a.log().unwrap().add(&b.log().unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn log_matches_integrated_logarithmic_derivative(phi in unit_constant(5, 10)) {
                let via_integral = phi.derivative().mul(&phi.invert().unwrap()).unwrap().integral();
                prop_assert_eq!(phi.log().unwrap(), via_integral);
            }

            #[test]
            fn reversed_polynomial_from_power_sums(f in monic_poly(6)) {
                let n = f.degree().unwrap();
                let order = n + 2;
                let p = power_sums_from_poly(&f, order).unwrap();
                let mut s = TruncatedSeries::zero(order);
                for (i, pi) in p.iter().enumerate() {
                    let k = i + 1;
                    s = s.sub(&TruncatedSeries::from_coeffs(
                        std::iter::repeat_n(Rational::zero(), k)
                            .chain(std::iter::once(pi / Rational::from(k as i64))).collect(),
                        order,
                    )).unwrap();
                }
                let g = TruncatedSeries::from_polynomial(&f.reversed(n), order);
                prop_assert_eq!(s.exp().unwrap(), g);
            }
        }
    }
}
