//! Conversions between power sums and polynomial coefficients, indexed by
//! integer partitions written in multiplicity form.
//!
//! Sign convention: a monic polynomial is `x^n + a_1 x^{n-1} + ... + a_n`,
//! so `a_i = (-1)^i e_i` with `e_i` the elementary symmetric functions.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_usize, factorial, ExactRing, Integer, Rational};

/// A partition in multiplicity form: `parts[i - 1]` is how many times `i`
/// occurs, so the weight is `Σ i·λ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    parts: Vec<usize>,
}

impl PartitionVector {
    pub fn new(parts: Vec<usize>) -> Self {
        PartitionVector { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &l)| (i + 1) * l)
            .sum()
    }

    /// Total number of parts, `Σ λ_i`.
    pub fn length(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Every `λ` of weight `m` with `λ_i = 0` for `i > max_part`, in descending
/// lexicographic order of the multiplicity vector (which has length
/// `max_part`).
pub fn enumerate_partitions(m: usize, max_part: usize) -> impl Iterator<Item = PartitionVector> {
    fn fill(
        i: usize,
        max: usize,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<PartitionVector>,
    ) {
        if i == max {
            if rest.is_multiple_of(i) {
                cur.push(rest / i);
                out.push(PartitionVector::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        for v in (0..=rest / i).rev() {
            cur.push(v);
            fill(i + 1, max, rest - v * i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_part >= 1 {
        fill(1, max_part, m, &mut Vec::with_capacity(max_part), &mut out);
    } else if m == 0 {
        out.push(PartitionVector::new(Vec::new()));
    }
    out.into_iter()
}

/// `m·(Σλ − 1)! / ∏ λ_i!`, which is always an integer.
pub fn waring_coefficient(lambda: &PartitionVector) -> Result<Integer> {
    let m = lambda.weight();
    if m == 0 {
        return Err(Error::InvalidParameter(
            "partition weight must be positive".into(),
        ));
    }
    let num = Integer::from(m) * factorial(lambda.length() - 1);
    let den = lambda
        .parts()
        .iter()
        .fold(Integer::one(), |acc, &l| acc * factorial(l));
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!(
            "{num}/{den} for {:?}",
            lambda.parts()
        )));
    }
    Ok(q)
}

/// Both sides of the binomial chain identity for `l_1 ≥ l_2 ≥ … ≥ l_n ≥ 1`:
///
/// `(Σ l_i / l_1) ∏ C(l_i, l_{i+1})
///   = ∏ C(l_i, l_{i+1}) + Σ_k ∏_{i≤k} C(l_i − 1, l_{i+1} − 1) ∏_{i>k} C(l_i, l_{i+1})`.
pub fn binomial_chain_identity(l: &[usize]) -> Result<(Rational, Integer)> {
    if l.is_empty() || l.contains(&0) {
        return Err(Error::InvalidParameter("entries must be positive".into()));
    }
    if l.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonMonotone);
    }
    let n = l.len();
    let full = |i: usize| binomial_usize(l[i], l[i + 1]);
    let reduced = |i: usize| binomial_usize(l[i] - 1, l[i + 1] - 1);

    let chain: Integer = (0..n - 1).map(full).product();
    let total: usize = l.iter().sum();
    let lhs = Rational::frac(total as i64, l[0] as i64) * Rational::from(chain.clone());

    let mut rhs = chain;
    for k in 1..n {
        let head: Integer = (0..k).map(reduced).product();
        let tail: Integer = (k..n - 1).map(full).product();
        rhs += head * tail;
    }
    Ok((lhs, rhs))
}

/// `p_m` of the roots of `x^n + a_1 x^{n-1} + … + a_n`, by the signed sum
/// `Σ_λ (−1)^{Σλ} W(λ) ∏ a_i^{λ_i}` over partitions of `m` with parts `≤ n`.
pub fn power_sums_from_coeffs<F: ExactRing>(a: &[F], m: usize) -> Result<F> {
    let first = a
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty coefficient vector".into()))?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let mut acc = first.zero_like();
    for lambda in enumerate_partitions(m, a.len()) {
        let w = Rational::from(waring_coefficient(&lambda)?);
        let mut term = first.one_like();
        for (ai, &li) in a.iter().zip(lambda.parts()) {
            if li > 0 {
                term = term * ai.pow_u(li as u64);
            }
        }
        let signed = if lambda.length() % 2 == 0 { w } else { -w };
        acc = acc + term.scale(&signed);
    }
    Ok(acc)
}

/// `a_1 … a_k` from power sums `p_1 … p_k`, via
/// `a_k = Σ_{λ ⊢ k} (−1)^{Σλ} ∏ p_i^{λ_i} / (i^{λ_i} λ_i!)`.
pub fn coeffs_from_power_sums<F: ExactRing>(p: &[F]) -> Result<Vec<F>> {
    let first = p
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty power-sum vector".into()))?;
    let mut out = Vec::with_capacity(p.len());
    for k in 1..=p.len() {
        let mut acc = first.zero_like();
        for lambda in enumerate_partitions(k, k) {
            let mut term = first.one_like();
            let mut den = Integer::one();
            for (i, &li) in lambda.parts().iter().enumerate() {
                if li > 0 {
                    term = term * p[i].pow_u(li as u64);
                    den *= num_traits::pow(Integer::from(i + 1), li) * factorial(li);
                }
            }
            let sign = if lambda.length() % 2 == 0 { 1 } else { -1 };
            let w = Rational::new(sign, den).expect("positive denominator");
            acc = acc + term.scale(&w);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Elementary symmetric functions `e_1 … e_k` from power sums, `e_k = (−1)^k a_k`.
pub fn elementary_from_power_sums<F: ExactRing>(p: &[F]) -> Result<Vec<F>> {
    Ok(coeffs_from_power_sums(p)?
        .into_iter()
        .enumerate()
        .map(|(i, a)| if i % 2 == 0 { -a } else { a })
        .collect())
}

/// Coefficients `a_1 … a_n` of `det(xI − A)` from `Tr(A), …, Tr(A^n)`.
pub fn charpoly_from_traces(traces: &[Rational]) -> Result<Vec<Rational>> {
    coeffs_from_power_sums(traces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;
    use crate::series::power_sums_from_poly;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn listing(m: usize, max: usize) -> Vec<Vec<usize>> {
        enumerate_partitions(m, max)
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn partition_listings() {
        assert_eq!(listing(2, 2), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(listing(4, 2), vec![vec![4, 0], vec![2, 1], vec![0, 2]]);
        assert_eq!(listing(3, 1), vec![vec![3]]);
        // partition numbers p(m) when parts are unrestricted
        let counts: Vec<usize> = (1..=12)
            .map(|m| enumerate_partitions(m, m).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        for m in 1..=10 {
            for p in enumerate_partitions(m, 4) {
                assert_eq!(p.weight(), m);
            }
        }
    }

    #[test]
    fn waring_examples() {
        let w = |v: &[usize]| waring_coefficient(&PartitionVector::new(v.to_vec())).unwrap();
        assert_eq!(w(&[3, 0]), Integer::from(1));
        assert_eq!(w(&[0, 2]), Integer::from(2));
        assert_eq!(w(&[1, 1]), Integer::from(3));
        assert!(waring_coefficient(&PartitionVector::new(vec![0, 0])).is_err());
    }

    #[test]
    fn waring_always_integral() {
        for m in 1..=18 {
            for p in enumerate_partitions(m, m) {
                waring_coefficient(&p).unwrap();
            }
        }
    }

    #[test]
    fn binomial_chain_examples() {
        assert_eq!(
            binomial_chain_identity(&[1]).unwrap(),
            (q(1, 1), Integer::from(1))
        );
        assert_eq!(
            binomial_chain_identity(&[2, 1]).unwrap(),
            (q(3, 1), Integer::from(3))
        );
        assert_eq!(
            binomial_chain_identity(&[2, 2]).unwrap(),
            (q(2, 1), Integer::from(2))
        );
        assert_eq!(
            binomial_chain_identity(&[1, 2]).unwrap_err(),
            Error::NonMonotone
        );
    }

    #[test]
    fn binomial_chain_exhaustive() {
        fn walk(prefix: &mut Vec<usize>, len: usize) {
            if prefix.len() == len {
                let (l, r) = binomial_chain_identity(prefix).unwrap();
                assert_eq!(l, Rational::from(r), "{prefix:?}");
                return;
            }
            let top = prefix.last().copied().unwrap_or(6);
            for v in 1..=top {
                prefix.push(v);
                walk(prefix, len);
                prefix.pop();
            }
        }
        for len in 1..=4 {
            walk(&mut Vec::new(), len);
        }
    }

    #[test]
    fn power_sum_examples() {
        let a = [q(-3, 1), q(2, 1)];
        assert_eq!(power_sums_from_coeffs(&a, 2).unwrap(), q(5, 1));
        assert_eq!(power_sums_from_coeffs(&a, 3).unwrap(), q(9, 1));
        let c = q(5, 3);
        for k in 1..6 {
            assert_eq!(
                power_sums_from_coeffs(&[-c.clone()], k).unwrap(),
                c.pow(k as i64).unwrap()
            );
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            coeffs_from_power_sums(&[q(3, 1), q(5, 1)]).unwrap(),
            vec![q(-3, 1), q(2, 1)]
        );
        assert_eq!(
            coeffs_from_power_sums(&[q(0, 1), q(-2, 1)]).unwrap(),
            vec![q(0, 1), q(1, 1)]
        );
        assert_eq!(coeffs_from_power_sums(&[q(7, 2)]).unwrap(), vec![q(-7, 2)]);
        assert_eq!(
            elementary_from_power_sums(&[q(3, 1), q(5, 1)]).unwrap(),
            vec![q(3, 1), q(2, 1)]
        );
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            charpoly_from_traces(&[q(2, 1), q(2, 1)]).unwrap(),
            vec![q(-2, 1), q(1, 1)]
        );
        assert_eq!(
            charpoly_from_traces(&[q(0, 1), q(2, 1)]).unwrap(),
            vec![q(0, 1), q(-1, 1)]
        );
    }

    #[test]
    fn power_sums_over_cyclotomic_field() {
        use crate::cyclotomic::{CyclotomicElement, CyclotomicField};
        // x^3 - 1 has roots 1, ζ, ζ²; p_k = 3 when 3 | k, else 0
        let field = CyclotomicField::new(3).unwrap();
        let zero = CyclotomicElement::zero(&field);
        let a = [
            zero.clone(),
            zero,
            CyclotomicElement::from_rational(&field, q(-1, 1)),
        ];
        for k in 1..=6 {
            let want = if k % 3 == 0 { q(3, 1) } else { q(0, 1) };
            assert_eq!(
                power_sums_from_coeffs(&a, k).unwrap().to_rational(),
                Some(want)
            );
        }
    }

    fn coeff_vec(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-9i64..10, 1i64..4).prop_map(|(n, d)| q(n, d)), 1..=max_len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn coefficient_roundtrip(a in coeff_vec(8)) {
            let p: Vec<Rational> = (1..=a.len())
                .map(|m| power_sums_from_coeffs(&a, m).unwrap())
                .collect();
            prop_assert_eq!(coeffs_from_power_sums(&p).unwrap(), a);
        }

        #[test]
        fn waring_sum_matches_series_route(a in coeff_vec(8)) {
            let n = a.len();
            let mut c: Vec<Rational> = a.iter().rev().cloned().collect();
            c.push(Rational::one());
            let via_series = power_sums_from_poly(&Polynomial::from_coeffs(c), 12).unwrap();
            for m in 1..=12 {
                prop_assert_eq!(&power_sums_from_coeffs(&a, m).unwrap(), &via_series[m - 1], "n={} m={}", n, m);
            }
        }

        #[test]
        fn power_sums_beyond_degree_give_zero_coefficients(a in coeff_vec(4)) {
            // feeding more power sums than the degree yields a_k = 0 for k > n
            let p: Vec<Rational> = (1..=a.len() + 3)
                .map(|m| power_sums_from_coeffs(&a, m).unwrap())
                .collect();
            let back = coeffs_from_power_sums(&p).unwrap();
            prop_assert_eq!(&back[..a.len()], &a[..]);
            prop_assert!(back[a.len()..].iter().all(Rational::is_zero));
        }
    }
}
