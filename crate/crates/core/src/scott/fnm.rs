//! The twisted sums `f_{n,m}(k) = Σ_{i<n} ε^{ik} / (1 − ε^i α)^m`, where `ε`
//! is a primitive `n`-th root of unity and `α^n = c`.
//!
//! At `k = 0` the sum is rational and is available by three independent
//! routes; for other `k` it is a rational multiple of `α^{−k}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{binomial_usize, Polynomial, Rational};
use crate::scott::TwistedRational;
use crate::series::TruncatedSeries;
use crate::symfunc::{enumerate_partitions, waring_coefficient};

pub(crate) fn check_c(c: &Rational) -> Result<()> {
    if c.is_zero() || *c == Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "c = {c} must differ from 0 and 1"
        )));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    Ok(())
}

fn binom_q(n: usize, k: usize) -> Rational {
    Rational::from(binomial_usize(n, k))
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `f_{n,m}(0)` as a signed sum over partitions of `m` with parts `≤ n`:
/// `(−1)^m Σ_λ W(λ) (c − 1)^{−Σλ} ∏ C(n, i)^{λ_i}`. At `m = 0` this is `n`.
pub fn f0_direct(n: usize, m: usize, c: &Rational) -> Result<Rational> {
    check_n(n)?;
    check_c(c)?;
    if m == 0 {
        return Ok(Rational::from(n as i64));
    }
    let t = (c - Rational::one()).recip()?;
    let mut acc = Rational::zero();
    for lambda in enumerate_partitions(m, n) {
        let mut term =
            Rational::from(waring_coefficient(&lambda)?) * t.pow(lambda.length() as i64)?;
        for (i, &li) in lambda.parts().iter().enumerate() {
            if li > 0 {
                term *= &binom_q(n, i + 1).pow(li as i64)?;
            }
        }
        acc += &term;
    }
    Ok(sign(m) * acc)
}

/// `f_{n,m}(0)` for `m = 0..=max_m` by the linear recurrence
/// `(c − 1) f_m = (−1)^m C(n, m) m + Σ_{i=1}^{min(m−1, n)} (−1)^i C(n, i) f_{m−i}`,
/// where the first term vanishes once `m > n`.
pub fn f0_recurrence(n: usize, max_m: usize, c: &Rational) -> Result<Vec<Rational>> {
    check_n(n)?;
    check_c(c)?;
    let t = (c - Rational::one()).recip()?;
    let mut f = vec![Rational::from(n as i64)];
    for m in 1..=max_m {
        let mut acc = if m <= n {
            sign(m) * binom_q(n, m) * Rational::from(m as i64)
        } else {
            Rational::zero()
        };
        for i in 1..=(m - 1).min(n) {
            acc += &(sign(i) * binom_q(n, i) * &f[m - i]);
        }
        f.push(acc * &t);
    }
    Ok(f)
}

/// `f_{n,m}(0)` for `m = 0..=max_m` as the coefficients of
/// `n[(1 − x)^{n−1} − c] / ((1 − x)^n − c)`.
pub fn f0_series(n: usize, max_m: usize, c: &Rational) -> Result<Vec<Rational>> {
    check_n(n)?;
    check_c(c)?;
    let one_minus_x = TruncatedSeries::from_i64(&[1, -1], max_m);
    let cst = TruncatedSeries::constant(c.clone(), max_m);
    let num = one_minus_x
        .pow(n - 1)
        .sub(&cst)?
        .scale(&Rational::from(n as i64));
    let den = one_minus_x.pow(n).sub(&cst)?;
    Ok(num.mul(&den.invert()?)?.coeffs().to_vec())
}

/// `f_{n,m}(k)` for `1 ≤ k ≤ n`, `m ≥ 1`:
/// `α^{−k} [(−1)^m C(k−1, m−1) n + Σ_{i<m} (−1)^i C(k, i) f_{n,m−i}(0)]`.
pub fn f_k(n: usize, m: usize, k: usize, c: &Rational) -> Result<TwistedRational> {
    check_n(n)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} outside 1..={n}")));
    }
    let f0 = f0_recurrence(n, m, c)?;
    let bracket = twist_bracket(n, m, k, &f0);
    TwistedRational::new(bracket, -(k as i64), n, c.clone())
}

/// The rational factor of `α^k f_{n,m}(k)`, given `f_{n,j}(0)` for `j ≤ m`.
pub(crate) fn twist_bracket(n: usize, m: usize, k: usize, f0: &[Rational]) -> Rational {
    let head = if k >= 1 {
        sign(m) * binom_q(k - 1, m - 1) * Rational::from(n as i64)
    } else {
        Rational::zero()
    };
    (0..m).fold(head, |acc, i| acc + sign(i) * binom_q(k, i) * &f0[m - i])
}

/// `f_{n,m}(k)` for any `m ≥ 0` and any integer `k`, using periodicity in
/// `k` with period `n` and `f_{n,0}(k) = n·[n | k]`.
pub fn f_value(n: usize, m: usize, k: i64, c: &Rational) -> Result<TwistedRational> {
    check_n(n)?;
    check_c(c)?;
    let k = k.rem_euclid(n as i64) as usize;
    if k == 0 {
        return TwistedRational::rational(f0_direct(n, m, c)?, n, c.clone());
    }
    if m == 0 {
        return TwistedRational::rational(Rational::zero(), n, c.clone());
    }
    f_k(n, m, k, c)
}

/// All `f_{n,m}(k)` for `0 ≤ k < n`, `0 ≤ m ≤ max_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct FTable {
    pub n: usize,
    pub c: Rational,
    pub values: BTreeMap<(usize, usize), TwistedRational>,
}

impl FTable {
    pub fn build(n: usize, max_m: usize, c: &Rational) -> Result<Self> {
        let f0 = f0_recurrence(n, max_m, c)?;
        let mut values = BTreeMap::new();
        for m in 0..=max_m {
            for k in 0..n {
                let v = match (m, k) {
                    (_, 0) => TwistedRational::rational(f0[m].clone(), n, c.clone())?,
                    (0, _) => TwistedRational::rational(Rational::zero(), n, c.clone())?,
                    _ => TwistedRational::new(
                        twist_bracket(n, m, k, &f0),
                        -(k as i64),
                        n,
                        c.clone(),
                    )?,
                };
                values.insert((m, k), v);
            }
        }
        Ok(FTable {
            n,
            c: c.clone(),
            values,
        })
    }

    pub fn get(&self, m: usize, k: usize) -> Option<&TwistedRational> {
        self.values.get(&(m, k))
    }
}

/// `x^n + (1 − c)^{−1} Σ_{i=1}^n (−1)^i C(n, i) x^{n−i}`, the monic
/// polynomial whose roots are `1/(1 − ε^i α)`.
pub fn transformed_polynomial(n: usize, c: &Rational) -> Result<Polynomial<Rational>> {
    check_n(n)?;
    check_c(c)?;
    let t = (Rational::one() - c).recip()?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    for i in 1..=n {
        coeffs[n - i] = sign(i) * binom_q(n, i) * &t;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{CyclotomicElement, CyclotomicField};
    use crate::exact::{ExactField, ExactRing};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    /// `f_{n,m}(k)` summed term by term in Q(ζ_n) at a rational `α`.
    fn brute(n: usize, m: usize, k: i64, alpha: &Rational) -> CyclotomicElement {
        let field = CyclotomicField::new(n).unwrap();
        let one = CyclotomicElement::one(&field);
        let mut acc = CyclotomicElement::zero(&field);
        for i in 0..n as i64 {
            let eps = CyclotomicElement::zeta_pow(&field, i);
            let den = (one.clone() - eps.scale(alpha)).pow_i(-(m as i64)).unwrap();
            acc = acc + CyclotomicElement::zeta_pow(&field, i * k) * den;
        }
        acc
    }

    #[test]
    fn worked_values() {
        let c = q(4, 1);
        assert_eq!(f0_direct(2, 1, &c).unwrap(), q(-2, 3));
        assert_eq!(f0_direct(2, 2, &c).unwrap(), q(10, 9));
        for n in 1..8 {
            let c = q(7, 3);
            assert_eq!(
                f0_direct(n, 1, &c).unwrap(),
                -Rational::from(n as i64) / (&c - q(1, 1))
            );
        }
        let rec = f0_recurrence(2, 8, &c).unwrap();
        for (m, v) in rec.iter().enumerate() {
            let want = q(1, 3).pow(m as i64).unwrap() + if m % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(v, &want, "m={m}");
        }
        assert_eq!(
            f0_series(2, 2, &c).unwrap(),
            vec![q(2, 1), q(-2, 3), q(10, 9)]
        );
        assert_eq!(f0_recurrence(5, 0, &q(7, 1)).unwrap(), vec![q(5, 1)]);
        for n in 1..=8 {
            assert_eq!(
                f0_series(n, 0, &q(-3, 1)).unwrap()[0],
                Rational::from(n as i64)
            );
        }
        assert!(f0_direct(2, 1, &q(1, 1)).is_err());
        assert!(f0_series(2, 1, &q(0, 1)).is_err());
    }

    #[test]
    fn twisted_values() {
        let c = q(4, 1);
        let v = f_k(2, 1, 1, &c).unwrap();
        assert_eq!(v, TwistedRational::new(q(-8, 3), -1, 2, c.clone()).unwrap());
        assert_eq!(v.embed(&q(2, 1)).unwrap(), q(-4, 3));
        assert_eq!(
            v.embed(&q(2, 1)).unwrap(),
            q(1, 1) / q(-1, 1) - q(1, 1) / q(3, 1)
        );
        for n in 1..=6 {
            for m in 1..=4 {
                assert_eq!(
                    f_k(n, m, n, &c).unwrap().to_rational(),
                    Some(f0_direct(n, m, &c).unwrap()),
                    "n={n} m={m}"
                );
            }
        }
        assert!(f_k(3, 1, 0, &c).is_err());
        assert!(f_k(3, 1, 4, &c).is_err());
    }

    #[test]
    fn agrees_with_brute_force_sum() {
        for n in 1..=6 {
            for (num, den) in [(2, 1), (-3, 2), (1, 3)] {
                let alpha = q(num, den);
                let c = alpha.pow(n as i64).unwrap();
                if c == q(1, 1) {
                    continue;
                }
                let field = CyclotomicField::new(n).unwrap();
                let alpha_lift = CyclotomicElement::from_rational(&field, alpha.clone());
                for m in 0..=4 {
                    for k in 0..n as i64 {
                        let closed = f_value(n, m, k, &c).unwrap().embed(&alpha_lift).unwrap();
                        assert_eq!(closed, brute(n, m, k, &alpha), "n={n} m={m} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn shift_recurrence_for_first_power() {
        // f_{n,1}(k) = α^{-k}(f_{n,1}(0) − n)
        for n in 1..=6 {
            let c = q(-5, 2);
            let base = f0_direct(n, 1, &c).unwrap() - Rational::from(n as i64);
            for k in 1..=n {
                let want = TwistedRational::new(base.clone(), -(k as i64), n, c.clone()).unwrap();
                assert_eq!(f_k(n, 1, k, &c).unwrap(), want);
            }
        }
    }

    #[test]
    fn table_layout() {
        let t = FTable::build(3, 2, &q(5, 1)).unwrap();
        assert_eq!(t.values.len(), 9);
        assert_eq!(t.get(0, 0).unwrap().to_rational(), Some(q(3, 1)));
        assert!(t.get(0, 1).unwrap().is_zero());
        for m in 1..=2 {
            for k in 1..3 {
                let v = t.get(m, k).unwrap();
                assert!(v.is_zero() || v.exponent() == 3 - k);
                assert_eq!(v, &f_k(3, m, k, &q(5, 1)).unwrap());
            }
        }
    }

    #[test]
    fn transformed_polynomial_has_the_shifted_roots() {
        for n in 1..=8 {
            let alpha = q(3, 2);
            let c = alpha.pow(n as i64).unwrap();
            let field = CyclotomicField::new(n).unwrap();
            let one = CyclotomicElement::one(&field);
            let x = Polynomial::from_coeffs(vec![CyclotomicElement::zero(&field), one.clone()]);
            let mut prod = Polynomial::constant(one.clone());
            for i in 0..n as i64 {
                let eps = CyclotomicElement::zeta_pow(&field, i);
                let root = (one.clone() - eps.scale(&alpha)).invert().unwrap();
                prod = &prod * &(&x - &Polynomial::constant(root));
            }
            let want = transformed_polynomial(n, &c).unwrap();
            let lifted: Vec<_> = want
                .coeffs()
                .iter()
                .map(|r| CyclotomicElement::from_rational(&field, r.clone()))
                .collect();
            assert_eq!(prod, Polynomial::from_coeffs(lifted), "n={n}");
        }
    }

    fn admissible_c() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..9)
            .prop_map(|(n, d)| q(n, d))
            .prop_filter("c must avoid 0 and 1", |c| !c.is_zero() && *c != q(1, 1))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn three_routes_agree(c in admissible_c()) {
            for n in 1..=8 {
                let rec = f0_recurrence(n, 12, &c).unwrap();
                let ser = f0_series(n, 12, &c).unwrap();
                prop_assert_eq!(&rec, &ser);
                for m in 1..=12 {
                    prop_assert_eq!(&f0_direct(n, m, &c).unwrap(), &rec[m], "n={} m={}", n, m);
                }
            }
        }

        #[test]
        fn step_recurrence_in_k(c in admissible_c()) {
            for n in 1..=6 {
                for m in 1..=5 {
                    for k in 1..=n as i64 {
                        let lhs = f_value(n, m, k, &c).unwrap();
                        let prev = f_value(n, m, k - 1, &c).unwrap();
                        let lower = f_value(n, m - 1, k - 1, &c).unwrap();
                        let rhs = prev.sub(&lower).unwrap().shift(-1);
                        prop_assert_eq!(lhs, rhs, "n={} m={} k={}", n, m, k);
                    }
                }
            }
        }
    }
}
