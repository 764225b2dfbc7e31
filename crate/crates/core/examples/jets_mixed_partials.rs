use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::jets::{mixed_partial_extract, power_partials_check, JetBudget, MultiJet};

fn main() {
    // d²/dx² of 1/(x − 1) at x = 3 is 2/(x − 1)^3 = 1/4
    let j = MultiJet::variable(Rational::from(2), 0, 1, 2)
        .unwrap()
        .invert()
        .unwrap();
    println!(
        "second derivative: {}",
        mixed_partial_extract(&j, &[2]).unwrap()
    );

    let xs = [Rational::from(1), Rational::from(-1), Rational::frac(1, 2)];
    let ys = [Rational::from(2), Rational::from(-2), Rational::frac(5, 3)];
    for m in 1..=3 {
        let v = power_partials_check(3, m, &xs, &ys, JetBudget::default()).unwrap();
        println!(
            "m={m}: det {} = {}, per {} = {}",
            v.lhs_det, v.rhs_det, v.lhs_per, v.rhs_per
        );
    }
}
