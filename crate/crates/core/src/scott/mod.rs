//! Closed forms for determinants and permanents of Hadamard powers of the
//! Cauchy matrix on the roots of `x^n + a` and `x^n + b`, the twisted sums
//! they are built from, and an exact verification harness.

mod closed;
pub mod fnm;
mod twisted;
pub mod verify;

pub use closed::{
    det_hadamard_closed, per_closed, per_closed_forms, permanent_forms_agree, scott_historical,
    scott_minc, CauchyInstance, PermanentForms,
};
pub use fnm::{f0_direct, f0_recurrence, f0_series, f_k, f_value, transformed_polynomial, FTable};
pub use twisted::TwistedRational;
pub use verify::{verify_instance, Check, CheckStatus, VerificationReport};
