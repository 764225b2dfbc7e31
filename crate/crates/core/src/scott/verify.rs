//! Exact cross-checks of the closed forms against brute force over Q(ζ_n).

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{CyclotomicElement, CyclotomicField};
use crate::error::Result;
use crate::exact::{ExactRing, Rational};
use crate::matrix::{build_cauchy, ExactMatrix};
use crate::scott::{det_hadamard_closed, per_closed, CauchyInstance};

/// Orders up to which the factorial-time permanent is also run.
const NAIVE_PERMANENT_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn compare<T: PartialEq + ToString>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Check {
            name: name.into(),
            status: if lhs == rhs {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A membership test; `rhs` records what was expected.
    pub fn holds(name: impl Into<String>, ok: bool, lhs: String, rhs: &str) -> Self {
        Check {
            name: name.into(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            lhs,
            rhs: rhs.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Brute-force values for one Hadamard power.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerValues {
    pub m: usize,
    pub det: String,
    pub per: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub instance: CauchyInstance,
    pub m_max: usize,
    pub values: Vec<PowerValues>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// The brute-force permanent of the order-1 matrix, when rational.
    pub fn permanent(&self) -> Option<Rational> {
        self.values.first().and_then(|v| v.per.parse().ok())
    }
}

/// The nodes `x_i = ε^i β`, `y_j = ε^j γ` for `i, j = 1..n` in Q(ζ_n).
pub fn witness_nodes(
    field: &Arc<CyclotomicField>,
    beta: &Rational,
    gamma: &Rational,
) -> (Vec<CyclotomicElement>, Vec<CyclotomicElement>) {
    let n = field.conductor() as i64;
    let xs = (1..=n)
        .map(|i| CyclotomicElement::zeta_pow(field, i).scale(beta))
        .collect();
    let ys = (1..=n)
        .map(|i| CyclotomicElement::zeta_pow(field, i).scale(gamma))
        .collect();
    (xs, ys)
}

fn power_checks(
    inst: &CauchyInstance,
    base: &ExactMatrix<CyclotomicElement>,
    field: &Arc<CyclotomicField>,
    m: usize,
    cap: usize,
) -> Result<(PowerValues, Vec<Check>)> {
    let n = inst.n;
    let am = base.hadamard_power(m as i64)?;
    let det = am.determinant()?;
    let per = am.permanent_ryser(cap)?;
    let mut checks = Vec::new();

    let alpha = CyclotomicElement::from_rational(field, inst.alpha().expect("witness instance"));
    let closed = det_hadamard_closed(inst, m)?.embed(&alpha)?;
    checks.push(Check::compare(
        format!("det m={m} closed form"),
        &det,
        &closed,
    ));

    if m == 1 {
        let closed = CyclotomicElement::from_rational(field, per_closed(inst)?);
        checks.push(Check::compare("per m=1 closed form", &per, &closed));
        if n <= NAIVE_PERMANENT_LIMIT {
            checks.push(Check::compare(
                "per m=1 ryser vs naive",
                &per,
                &am.permanent_naive(cap)?,
            ));
        }
        let square = am.hadamard_product(&am)?.determinant()?;
        checks.push(Check::compare(
            "borchardt per*det = det(A∘A)",
            &(per.clone() * det.clone()),
            &square,
        ));
    }

    let per_q = per.to_rational();
    checks.push(Check::holds(
        format!("per m={m} rational"),
        per_q.is_some(),
        per.to_string(),
        "in Q",
    ));
    let det_sq = det.clone() * det.clone();
    checks.push(Check::holds(
        format!("det^2 m={m} rational"),
        det_sq.to_rational().is_some(),
        det_sq.to_string(),
        "in Q",
    ));

    let values = PowerValues {
        m,
        det: det.to_string(),
        per: per.to_string(),
    };
    Ok((values, checks))
}

/// Build the Cauchy matrix on the roots of `x^n + a`, `x^n + b` realized by
/// `β, γ`, and compare brute force with every closed form for
/// `m = 1..=m_max`. Checks for different `m` run in parallel; the report is
/// ordered by `m`.
pub fn verify_instance(
    n: usize,
    beta: Rational,
    gamma: Rational,
    m_max: usize,
    cap: usize,
) -> Result<VerificationReport> {
    let inst = CauchyInstance::from_witnesses(n, beta, gamma)?;
    let field = CyclotomicField::new(n)?;
    let (beta, gamma) = inst.witnesses.clone().expect("just set");
    let (xs, ys) = witness_nodes(&field, &beta, &gamma);
    let base = build_cauchy(&xs, &ys, 1)?;

    let per_m: Vec<(PowerValues, Vec<Check>)> = (1..=m_max.max(1))
        .into_par_iter()
        .map(|m| power_checks(&inst, &base, &field, m, cap))
        .collect::<Result<_>>()?;

    let mut values = Vec::new();
    let mut checks = Vec::new();
    for (v, c) in per_m {
        values.push(v);
        checks.extend(c);
    }
    Ok(VerificationReport {
        instance: inst,
        m_max,
        values,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::matrix::DEFAULT_MAX_BRUTEFORCE;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn two_by_two_instance() {
        let r = verify_instance(2, q(1, 1), q(2, 1), 2, DEFAULT_MAX_BRUTEFORCE).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.values[0].per, "-10/9");
        assert_eq!(r.values[0].det, "-8/9");
        assert_eq!(r.values[1].det, "80/81");
        assert_eq!(r.permanent(), Some(q(-10, 9)));
    }

    #[test]
    fn scott_instance() {
        let r = verify_instance(3, q(1, 1), q(-1, 1), 2, DEFAULT_MAX_BRUTEFORCE).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.permanent(), Some(q(-3, 8)));
    }

    #[test]
    fn rejects_coincident_roots() {
        assert!(matches!(
            verify_instance(2, q(1, 1), q(1, 1), 2, DEFAULT_MAX_BRUTEFORCE),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            verify_instance(5, q(1, 1), q(2, 1), 1, 4).unwrap_err(),
            Error::SizeOverLimit { n: 5, limit: 4 }
        );
    }

    #[test]
    fn mixed_instances() {
        for (n, b, g) in [
            (1, (2, 1), (3, 1)),
            (4, (1, 2), (3, 1)),
            (5, (-2, 3), (1, 1)),
            (6, (1, 1), (2, 1)),
        ] {
            let r =
                verify_instance(n, q(b.0, b.1), q(g.0, g.1), 3, DEFAULT_MAX_BRUTEFORCE).unwrap();
            assert!(
                r.all_passed(),
                "n={n}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
        }
    }
}
