//! Exact scalars and the ring/field contract shared by every other module.
//!
//! Nothing in this layer touches floating point. Every ring used by the crate
//! is a commutative Q-algebra (rationals, cyclotomic residues, truncated
//! series, jets, polynomials over Q), so the contract includes an embedding
//! of `Rational`. Elements of context-dependent rings (a cyclotomic field, a
//! jet shape) produce their constants through `zero_like` / `one_like`.

mod integer;
mod poly;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use integer::{binomial, binomial_usize, factorial, Integer};
pub use poly::{poly_divmod, poly_xgcd, Polynomial};
pub use rational::{rational_arith, ArithOp, Rational};

/// A commutative ring with unity, exact equality and an embedding of Q.
pub trait ExactRing:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The additive identity of the ring `self` lives in.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity of the ring `self` lives in.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Image of a rational under the structure map Q -> R.
    fn from_rational_like(&self, r: &Rational) -> Self;

    fn from_i64_like(&self, v: i64) -> Self {
        self.from_rational_like(&Rational::from(v))
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * self.from_rational_like(r)
    }

    /// `self^e` for `e >= 0` by repeated squaring.
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// An [`ExactRing`] in which every nonzero element is invertible.
pub trait ExactField: ExactRing {
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// `self^e` for any integer `e`; negative exponents invert first.
    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u64))
        } else {
            self.inverse().map(|inv| inv.pow_u(e.unsigned_abs()))
        }
    }
}
