use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{ExactField, Rational};

/// The value `r·α^e` where `α` is a fixed but unspecified root of
/// `x^n − c`. The exponent is kept in `0..n` by trading `α^n` for `c`, and a
/// zero value always has exponent 0, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedRational {
    r: Rational,
    e: usize,
    n: usize,
    c: Rational,
}

impl TwistedRational {
    pub fn new(r: Rational, e: i64, n: usize, c: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "twist order must be positive".into(),
            ));
        }
        if c.is_zero() {
            return Err(Error::InvalidParameter(
                "alpha^n = 0 has no invertible root".into(),
            ));
        }
        if r.is_zero() {
            return Ok(TwistedRational { r, e: 0, n, c });
        }
        let ni = n as i64;
        let reduced = e.rem_euclid(ni);
        let r = r * c.pow((e - reduced) / ni)?;
        Ok(TwistedRational {
            r,
            e: reduced as usize,
            n,
            c,
        })
    }

    pub fn rational(r: Rational, n: usize, c: Rational) -> Result<Self> {
        Self::new(r, 0, n, c)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.r
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// The plain rational value when the twist is trivial.
    pub fn to_rational(&self) -> Option<Rational> {
        (self.e == 0).then(|| self.r.clone())
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n || self.c != rhs.c {
            return Err(Error::InvalidParameter(format!(
                "twists over different relations (alpha^{} = {}, alpha^{} = {})",
                self.n, self.c, rhs.n, rhs.c
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Self::new(
            &self.r * &rhs.r,
            (self.e + rhs.e) as i64,
            self.n,
            self.c.clone(),
        )
    }

    /// Sum of two values with the same twist; a zero operand adopts the
    /// other's exponent.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.e != rhs.e {
            return Err(Error::MixedTwist(self.e, rhs.e));
        }
        Self::new(&self.r + &rhs.r, self.e as i64, self.n, self.c.clone())
    }

    pub fn neg(&self) -> Self {
        TwistedRational {
            r: -&self.r,
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.r * k, self.e as i64, self.n, self.c.clone()).expect("valid twist")
    }

    /// Multiply by `α^k` for any integer `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.r.clone(), self.e as i64 + k, self.n, self.c.clone()).expect("valid twist")
    }

    /// Evaluate at a concrete `α` in some field, which must satisfy `α^n = c`.
    pub fn embed<F: ExactField>(&self, alpha: &F) -> Result<F> {
        if alpha.pow_u(self.n as u64) != alpha.from_rational_like(&self.c) {
            return Err(Error::InvalidParameter(format!(
                "embedding point does not satisfy alpha^{} = {}",
                self.n, self.c
            )));
        }
        Ok(alpha.pow_u(self.e as u64).scale(&self.r))
    }
}

impl fmt::Display for TwistedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            0 => write!(f, "{}", self.r),
            1 => write!(f, "({})*alpha", self.r),
            e => write!(f, "({})*alpha^{e}", self.r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn normalization() {
        let c = q(4, 1);
        let t = TwistedRational::new(q(-8, 3), -1, 2, c.clone()).unwrap();
        assert_eq!((t.coefficient(), t.exponent()), (&q(-2, 3), 1));
        assert_eq!(t.embed(&q(2, 1)).unwrap(), q(-4, 3));
        assert_eq!(t.embed(&q(-2, 1)).unwrap(), q(4, 3));
        assert!(t.embed(&q(3, 1)).is_err());

        let up = TwistedRational::new(q(1, 1), 5, 2, c.clone()).unwrap();
        assert_eq!((up.coefficient(), up.exponent()), (&q(16, 1), 1));

        let z = TwistedRational::new(q(0, 1), 3, 4, c.clone()).unwrap();
        assert_eq!(z.exponent(), 0);
        assert!(TwistedRational::new(q(1, 1), 0, 2, q(0, 1)).is_err());
    }

    #[test]
    fn arithmetic() {
        let c = q(3, 2);
        let a = TwistedRational::new(q(2, 1), 1, 3, c.clone()).unwrap();
        let b = TwistedRational::new(q(5, 1), 2, 3, c.clone()).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            TwistedRational::rational(q(15, 1), 3, c.clone()).unwrap()
        );
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedTwist(1, 2));
        assert_eq!(
            a.sub(&a).unwrap(),
            TwistedRational::rational(q(0, 1), 3, c.clone()).unwrap()
        );
        assert_eq!(a.shift(-1).to_rational(), Some(q(2, 1)));
        let zero = TwistedRational::rational(q(0, 1), 3, c.clone()).unwrap();
        assert_eq!(zero.add(&b).unwrap(), b);
        let other = TwistedRational::rational(q(1, 1), 3, q(2, 1)).unwrap();
        assert!(a.mul(&other).is_err());
        assert_eq!(a.to_string(), "(2)*alpha");
        assert_eq!(b.to_string(), "(5)*alpha^2");
    }
}
