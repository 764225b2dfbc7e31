use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::matrix::ExactMatrix;
use hadamard_cauchy::symfunc::{
    charpoly_from_traces, coeffs_from_power_sums, enumerate_partitions, power_sums_from_coeffs,
    waring_coefficient,
};

fn main() {
    // x^3 − 6x^2 + 11x − 6 has roots 1, 2, 3
    let a = [Rational::from(-6), Rational::from(11), Rational::from(-6)];
    let p: Vec<Rational> = (1..=3)
        .map(|k| power_sums_from_coeffs(&a, k).unwrap())
        .collect();
    println!(
        "power sums {p:?}, back to {:?}",
        coeffs_from_power_sums(&p).unwrap()
    );

    let m = ExactMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]).unwrap();
    let traces = [m.trace().unwrap(), m.mul(&m).unwrap().trace().unwrap()];
    println!(
        "charpoly coefficients {:?}",
        charpoly_from_traces(&traces).unwrap()
    );

    for lambda in enumerate_partitions(5, 5) {
        println!(
            "{:?} -> {}",
            lambda.parts(),
            waring_coefficient(&lambda).unwrap()
        );
    }
}
