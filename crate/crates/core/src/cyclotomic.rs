//! Exact arithmetic in the cyclotomic field Q(ζ_N).
//!
//! Elements are residues modulo the N-th cyclotomic polynomial Φ_N, stored as
//! a coefficient vector of length φ(N) in the power basis 1, ζ, …, ζ^{φ(N)-1}.
//! The representation is canonical, so an element is rational exactly when
//! every coefficient past the constant one is zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{poly_divmod, poly_xgcd, ExactField, ExactRing, Polynomial, Rational};

/// The N-th cyclotomic polynomial, by dividing `x^N - 1` by Φ_d for every
/// proper divisor `d` of `N`.
pub fn cyclotomic_polynomial(n: usize) -> Result<Polynomial<Rational>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclotomic conductor must be >= 1".into(),
        ));
    }
    let mut num = Polynomial::monomial(Rational::one(), n);
    num = &num - &Polynomial::from_i64(&[1]);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d)?;
        let (q, r) = poly_divmod(&num, &phi_d)?;
        debug_assert!(r.is_zero());
        num = q;
    }
    Ok(num)
}

/// Descriptor of Q(ζ_N). Shared read-only between all of its elements.
#[derive(Clone, PartialEq)]
pub struct CyclotomicField {
    conductor: usize,
    phi: Polynomial<Rational>,
    // Φ_N has integer coefficients; kept as i64 for the reduction loop.
    phi_int: Vec<i64>,
    degree: usize,
}

impl CyclotomicField {
    pub fn new(conductor: usize) -> Result<Arc<Self>> {
        let phi = cyclotomic_polynomial(conductor)?;
        let degree = phi
            .degree()
            .expect("cyclotomic polynomials are nonconstant");
        let phi_int = phi
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.numer()).expect("cyclotomic coefficient fits in i64")
            })
            .collect();
        Ok(Arc::new(CyclotomicField {
            conductor,
            phi,
            phi_int,
            degree,
        }))
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// φ(N), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Polynomial<Rational> {
        &self.phi
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_N.
    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        if coeffs.len() > d {
            for top in (d..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[top]);
                if c.is_zero() {
                    continue;
                }
                // x^top = x^(top-d) * (x^d) and x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})
                let shift = top - d;
                for (j, &pj) in self.phi_int[..d].iter().enumerate() {
                    if pj != 0 {
                        coeffs[shift + j] -= &(&c * Rational::from(pj));
                    }
                }
            }
            coeffs.truncate(d);
        }
        coeffs.resize(d, Rational::zero());
        coeffs
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}

/// An element of Q(ζ_N).
#[derive(Clone)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    /// Builds the residue of `Σ coeffs[i] ζ^i`; any length is accepted and reduced.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        CyclotomicElement {
            coeffs: field.reduce(coeffs),
            field: Arc::clone(field),
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: Rational) -> Self {
        Self::from_coeffs(field, vec![r])
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// The primitive root ζ_N, i.e. the residue of `x`.
    pub fn zeta(field: &Arc<CyclotomicField>) -> Self {
        Self::from_coeffs(field, vec![Rational::zero(), Rational::one()])
    }

    /// ζ^k for any integer k, using ζ^N = 1.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value when the element lies in Q, `None` otherwise.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, rhs: &Self) -> Result<()> {
        if self.field.conductor == rhs.field.conductor {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.conductor,
                rhs.field.conductor,
            ))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.add_unchecked(&rhs.neg_ref()))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    /// Inverse via extended gcd of the residue with Φ_N.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = Polynomial::from_coeffs(self.coeffs.clone());
        let (g, u, _) = poly_xgcd(&a, &self.field.phi)?;
        // Φ_N is irreducible, so any nonzero residue is coprime to it.
        if g.degree() != Some(0) {
            return Err(Error::Inconsistent(
                "residue shares a factor with the modulus".into(),
            ));
        }
        Ok(Self::from_coeffs(&self.field, u.into_coeffs()))
    }

    fn add_unchecked(&self, rhs: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicElement {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    fn neg_ref(&self) -> Self {
        CyclotomicElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let d = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        CyclotomicElement {
            coeffs: self.field.reduce(prod),
            field: Arc::clone(&self.field),
        }
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", r.to_fraction_string());
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.to_fraction_string())?,
                1 => write!(f, "({})*z", c.to_fraction_string())?,
                _ => write!(f, "({})*z^{i}", c.to_fraction_string())?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in Q(zeta_{})", self, self.field.conductor)
    }
}

// The operator forms panic on mismatched fields; use the `checked_*`
// methods where the fields are not known to agree.
impl Add for CyclotomicElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("cyclotomic field mismatch")
    }
}

impl Sub for CyclotomicElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("cyclotomic field mismatch")
    }
}

impl Mul for CyclotomicElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("cyclotomic field mismatch")
    }
}

impl Neg for CyclotomicElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl ExactRing for CyclotomicElement {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn is_zero(&self) -> bool {
        CyclotomicElement::is_zero(self)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::from_rational(&self.field, r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        CyclotomicElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl ExactField for CyclotomicElement {
    fn inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn cyclotomic_polynomial_examples() {
        assert_eq!(
            cyclotomic_polynomial(1).unwrap(),
            Polynomial::from_i64(&[-1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(4).unwrap(),
            Polynomial::from_i64(&[1, 0, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(9).unwrap(),
            Polynomial::from_i64(&[1, 0, 0, 1, 0, 0, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            Polynomial::from_i64(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn phi_divides_x_n_minus_one_and_degree_is_totient() {
        for n in 1..=30usize {
            let f = CyclotomicField::new(n).unwrap();
            let totient = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
            assert_eq!(f.degree(), totient, "phi({n})");
            assert!(f.modulus().is_monic());
            let xn1 = &Polynomial::monomial(Rational::one(), n) - &Polynomial::from_i64(&[1]);
            assert!(poly_divmod(&xn1, f.modulus()).unwrap().1.is_zero());
        }
    }

    #[test]
    fn zeta_examples() {
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(CyclotomicElement::zeta(&f2).to_rational(), Some(q(-1, 1)));

        let f4 = CyclotomicField::new(4).unwrap();
        let z = CyclotomicElement::zeta(&f4);
        assert_eq!((z.clone() * z).to_rational(), Some(q(-1, 1)));

        let f5 = CyclotomicField::new(5).unwrap();
        let sum = (0..5)
            .map(|k| CyclotomicElement::zeta_pow(&f5, k))
            .fold(CyclotomicElement::zero(&f5), |a, b| a + b);
        assert!(sum.is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        for n in 1..=12 {
            let f = CyclotomicField::new(n).unwrap();
            let z = CyclotomicElement::zeta(&f);
            let zinv = CyclotomicElement::zeta_pow(&f, n as i64 - 1);
            assert!((z.clone() * zinv.clone()).is_one());
            assert_eq!(z.invert().unwrap(), zinv);
            let x = CyclotomicElement::from_coeffs(&f, vec![q(3, 2), q(-1, 7)]);
            assert_eq!(x.clone() + CyclotomicElement::zero(&f), x);
        }
        let f3 = CyclotomicField::new(3).unwrap();
        let one = CyclotomicElement::one(&f3);
        let a = one.clone() + CyclotomicElement::zeta(&f3);
        let b = one.clone() + CyclotomicElement::zeta_pow(&f3, 2);
        assert!((a * b).is_one());

        let one_minus_z = one.clone() - CyclotomicElement::zeta(&f3);
        let inv = one_minus_z.invert().unwrap();
        assert!((one_minus_z * inv).is_one());

        assert_eq!(
            CyclotomicElement::zero(&f3).invert().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = CyclotomicElement::zeta(&CyclotomicField::new(3).unwrap());
        let b = CyclotomicElement::zeta(&CyclotomicField::new(5).unwrap());
        assert_eq!(a.checked_mul(&b).unwrap_err(), Error::FieldMismatch(3, 5));
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::FieldMismatch(3, 5));
    }

    #[test]
    fn to_rational_examples() {
        let f5 = CyclotomicField::new(5).unwrap();
        let c = CyclotomicElement::from_rational(&f5, q(7, 2));
        assert_eq!(c.to_rational(), Some(q(7, 2)));
        assert_eq!(CyclotomicElement::zeta(&f5).to_rational(), None);
        let s = (1..5)
            .map(|k| CyclotomicElement::zeta_pow(&f5, k))
            .fold(CyclotomicElement::zero(&f5), |a, b| a + b);
        assert_eq!(s.to_rational(), Some(q(-1, 1)));
    }

    #[test]
    fn zeta_has_exact_order_n() {
        for n in 1..=24usize {
            let f = CyclotomicField::new(n).unwrap();
            let z = CyclotomicElement::zeta(&f);
            let mut p = z.clone();
            for k in 1..n {
                assert!(!p.is_one(), "zeta_{n}^{k} == 1");
                p = p * z.clone();
            }
            assert!(p.is_one());
        }
    }

    #[test]
    fn roots_of_binomial_are_distinct_and_vanish() {
        for n in 1..=9usize {
            let f = CyclotomicField::new(n).unwrap();
            for beta in [q(1, 1), q(-2, 3), q(5, 2)] {
                let a = -beta.pow(n as i64).unwrap();
                let roots: Vec<_> = (1..=n as i64)
                    .map(|i| CyclotomicElement::zeta_pow(&f, i).scale(&beta))
                    .collect();
                for (i, r) in roots.iter().enumerate() {
                    let val = r.pow_u(n as u64) + CyclotomicElement::from_rational(&f, a.clone());
                    assert!(val.is_zero());
                    for s in &roots[i + 1..] {
                        assert_ne!(r, s);
                    }
                }
            }
        }
    }

    fn arb_element(n: usize) -> impl Strategy<Value = CyclotomicElement> {
        let f = CyclotomicField::new(n).unwrap();
        prop::collection::vec((-9i64..9, 1i64..5), f.degree()).prop_map(move |v| {
            CyclotomicElement::from_coeffs(
                &f,
                v.into_iter().map(|(a, b)| Rational::frac(a, b)).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(
            x in (1usize..=24).prop_flat_map(arb_element)
        ) {
            prop_assume!(!x.is_zero());
            let inv = x.invert().unwrap();
            prop_assert!((x * inv).is_one());
        }

        #[test]
        fn ring_axioms(
            (a, b, c) in (1usize..=12).prop_flat_map(|n| (arb_element(n), arb_element(n), arb_element(n)))
        ) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c));
            prop_assert_eq!(a.clone() * b.clone(), b * a);
        }
    }
}
