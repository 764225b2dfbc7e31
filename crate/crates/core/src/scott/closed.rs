//! Closed forms for the Cauchy matrix built on the roots of `x^n + a` and
//! `x^n + b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::scott::fnm::{check_c, f0_recurrence, twist_bracket};
use crate::scott::TwistedRational;

/// Parameters `(n, a, b)` with `c = b/a`, optionally realized by rational
/// witnesses `β, γ` with `a = −β^n` and `b = −γ^n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CauchyInstance {
    pub n: usize,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub witnesses: Option<(Rational, Rational)>,
}

impl CauchyInstance {
    pub fn new(n: usize, a: Rational, b: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidParameter("a and b must be nonzero".into()));
        }
        if a == b {
            return Err(Error::InvalidParameter(
                "a = b gives coincident roots".into(),
            ));
        }
        let c = &b / &a;
        Ok(CauchyInstance {
            n,
            a,
            b,
            c,
            witnesses: None,
        })
    }

    pub fn from_witnesses(n: usize, beta: Rational, gamma: Rational) -> Result<Self> {
        if beta.is_zero() || gamma.is_zero() {
            return Err(Error::InvalidParameter(
                "beta and gamma must be nonzero".into(),
            ));
        }
        let a = -beta.pow(n as i64)?;
        let b = -gamma.pow(n as i64)?;
        if a == b {
            return Err(Error::InvalidParameter(
                "beta^n = gamma^n gives coincident roots".into(),
            ));
        }
        let mut inst = Self::new(n, a, b)?;
        inst.witnesses = Some((beta, gamma));
        Ok(inst)
    }

    /// `α = γ/β` when witnesses are present.
    pub fn alpha(&self) -> Option<Rational> {
        self.witnesses.as_ref().map(|(b, g)| g / b)
    }
}

/// `det((x_i − y_j)^{−m})` with `x_i = ε^i β`, `y_j = ε^j γ` (`i, j = 1..n`):
///
/// `(−1)^{mn} a^{−m} α^{−n(n−1)/2} f_{n,m}(0) ∏_{k=1}^{n−1} [(−1)^m C(k−1, m−1) n + Σ_{i<m} (−1)^i C(k, i) f_{n,m−i}(0)]`.
pub fn det_hadamard_closed(inst: &CauchyInstance, m: usize) -> Result<TwistedRational> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    check_c(&inst.c)?;
    let n = inst.n;
    let f0 = f0_recurrence(n, m, &inst.c)?;
    let mut r = inst.a.pow(-(m as i64))? * &f0[m];
    if (m * n) % 2 == 1 {
        r = -r;
    }
    for k in 1..n {
        r *= &twist_bracket(n, m, k, &f0);
    }
    let e = -((n * (n - 1) / 2) as i64);
    TwistedRational::new(r, e, n, inst.c.clone())
}

/// The permanent of the order-1 Cauchy matrix written three ways.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PermanentForms {
    /// `n/(b−a)^n ∏_{k=1}^{n−1} [na + k(b−a)]`
    pub ascending: Rational,
    /// `n/(b−a)^n ∏_{k=1}^{n−1} [nb + k(a−b)]`
    pub descending: Rational,
    /// The half-length product split by the parity of `n`.
    pub parity: Rational,
}

impl PermanentForms {
    pub fn agree(&self) -> bool {
        self.ascending == self.descending && self.descending == self.parity
    }
}

pub fn per_closed_forms(inst: &CauchyInstance) -> Result<PermanentForms> {
    let n = inst.n;
    let (a, b) = (&inst.a, &inst.b);
    let ni = Rational::from(n as i64);
    let d = b - a;
    let lead = &ni * d.pow(-(n as i64))?;
    let k = |k: usize| Rational::from(k as i64);
    let up = |i: usize| &ni * a + k(i) * &d;
    let down = |i: usize| &ni * b - k(i) * &d;

    let ascending = &lead * (1..n).map(up).product::<Rational>();
    let descending = &lead
        * (1..n)
            .map(|i| &ni * b + k(i) * (a - b))
            .product::<Rational>();
    let parity = if n % 2 == 1 {
        let half = (n - 1) / 2;
        let prod: Rational = (1..=half)
            .map(|i| (-&ni * a - k(i) * &d) * down(i))
            .product();
        let s = if half.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        s * &lead * prod
    } else {
        let half = n / 2;
        let prod: Rational = (1..half)
            .map(|i| up(i) * (&ni * b + k(i) * (a - b)))
            .product();
        Rational::frac(n as i64, 2) * &ni * (a + b) * d.pow(-(n as i64))? * prod
    };
    Ok(PermanentForms {
        ascending,
        descending,
        parity,
    })
}

/// Permanent of `(1/(x_i − y_j))` for the roots of `x^n + a` and `x^n + b`.
pub fn per_closed(inst: &CauchyInstance) -> Result<Rational> {
    let forms = per_closed_forms(inst)?;
    if !forms.agree() {
        return Err(Error::Inconsistent(format!(
            "permanent product forms disagree: {forms:?}"
        )));
    }
    Ok(forms.ascending)
}

pub fn permanent_forms_agree(n: usize, a: Rational, b: Rational) -> Result<bool> {
    Ok(per_closed_forms(&CauchyInstance::new(n, a, b)?)?.agree())
}

/// Permanent for the roots of `x^n + a` and `x^n − a`: zero for even `n`,
/// otherwise `(−1)^{(n+1)/2} n/(2^n a) (∏_{k=1}^{(n−1)/2} (n − 2k))^2`.
pub fn scott_minc(n: usize, a: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if a.is_zero() {
        return Err(Error::InvalidParameter("a must be nonzero".into()));
    }
    if n.is_multiple_of(2) {
        return Ok(Rational::zero());
    }
    let odd: Rational = (1..=(n - 1) / 2)
        .map(|k| Rational::from((n - 2 * k) as i64))
        .product();
    let mut v = Rational::from(n as i64) / (Rational::from(2).pow(n as i64)? * a) * &odd * &odd;
    if n.div_ceil(2) % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

/// The 1881 unsigned value `n[1·3·…·(n−2)]^2 / 2^n` (zero for even `n`).
/// It is off by the sign `(−1)^{(n−1)/2}` and is kept only for tables.
pub fn scott_historical(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        return Rational::zero();
    }
    let odd: Rational = (1..=(n - 1) / 2)
        .map(|k| Rational::from((2 * k - 1) as i64))
        .product();
    Rational::from(n as i64) * &odd * &odd / Rational::from(2).pow(n as i64).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn inst(n: usize, a: i64, b: i64) -> CauchyInstance {
        CauchyInstance::new(n, q(a, 1), q(b, 1)).unwrap()
    }

    #[test]
    fn permanent_values() {
        assert_eq!(per_closed(&inst(2, -1, -4)).unwrap(), q(-10, 9));
        let (a, b) = (q(-1, 1), q(-4, 1));
        assert_eq!(q(2, 1) * (&a + &b) / (&b - &a).pow(2).unwrap(), q(-10, 9));
        assert_eq!(per_closed(&inst(3, -1, 1)).unwrap(), q(-3, 8));
        assert_eq!(per_closed(&inst(5, -1, 1)).unwrap(), q(45, 32));
        assert!(permanent_forms_agree(4, q(2, 1), q(3, 1)).unwrap());
        assert_eq!(per_closed_forms(&inst(5, -1, 1)).unwrap().parity, q(45, 32));
        assert!(CauchyInstance::new(3, q(1, 1), q(1, 1)).is_err());
        assert!(CauchyInstance::new(3, q(0, 1), q(1, 1)).is_err());
    }

    #[test]
    fn signed_odd_values() {
        assert_eq!(scott_minc(3, &q(-1, 1)).unwrap(), q(-3, 8));
        assert_eq!(scott_minc(4, &q(5, 7)).unwrap(), q(0, 1));
        assert_eq!(scott_minc(7, &q(-1, 1)).unwrap(), q(-1575, 128));
        assert_eq!(scott_minc(9, &q(-1, 1)).unwrap(), q(99225, 512));
        assert!(scott_minc(3, &q(0, 1)).is_err());
        for n in 1..=15 {
            assert_eq!(
                scott_minc(n, &q(-1, 1)).unwrap(),
                per_closed(&inst(n, -1, 1)).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn historical_values_differ_by_sign() {
        assert_eq!(scott_historical(3), q(3, 8));
        assert_eq!(scott_historical(7), q(1575, 128));
        assert_eq!(scott_historical(6), q(0, 1));
        for n in (1..=15).step_by(2) {
            let sign = if ((n - 1) / 2) % 2 == 0 {
                q(1, 1)
            } else {
                q(-1, 1)
            };
            assert_eq!(
                scott_minc(n, &q(-1, 1)).unwrap(),
                sign * scott_historical(n)
            );
        }
    }

    #[test]
    fn determinant_values() {
        let d = det_hadamard_closed(&inst(2, -1, -4), 2).unwrap();
        assert_eq!(d.embed(&q(2, 1)).unwrap(), q(80, 81));
        let d = det_hadamard_closed(&inst(2, -1, -4), 1).unwrap();
        assert_eq!(d.embed(&q(2, 1)).unwrap(), q(-8, 9));
        // 1×1: the single entry 1/(β − γ) = 1/(b − a)
        let one = CauchyInstance::from_witnesses(1, q(3, 1), q(5, 1)).unwrap();
        let d = det_hadamard_closed(&one, 1).unwrap();
        assert_eq!(
            d.embed(&one.alpha().unwrap()).unwrap(),
            q(1, 1) / (q(3, 1) - q(5, 1))
        );
        assert!(det_hadamard_closed(&one, 0).is_err());
    }

    #[test]
    fn witnesses() {
        let w = CauchyInstance::from_witnesses(2, q(1, 1), q(2, 1)).unwrap();
        assert_eq!(
            (w.a.clone(), w.b.clone(), w.c.clone()),
            (q(-1, 1), q(-4, 1), q(4, 1))
        );
        assert_eq!(w.alpha(), Some(q(2, 1)));
        assert!(CauchyInstance::from_witnesses(2, q(1, 1), q(1, 1)).is_err());
        assert!(CauchyInstance::from_witnesses(2, q(1, 1), q(-1, 1)).is_err());
        assert!(CauchyInstance::from_witnesses(3, q(0, 1), q(1, 1)).is_err());
    }

    proptest! {
        #[test]
        fn product_forms_agree(n in 1usize..=12, a in (-30i64..30, 1i64..7), b in (-30i64..30, 1i64..7)) {
            let (a, b) = (q(a.0, a.1), q(b.0, b.1));
            prop_assume!(!a.is_zero() && !b.is_zero() && a != b);
            prop_assert!(permanent_forms_agree(n, a, b).unwrap());
        }
    }
}
