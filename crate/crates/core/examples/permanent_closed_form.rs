use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::scott::{per_closed_forms, CauchyInstance};

fn main() {
    let (a, b) = (Rational::frac(-1, 1), Rational::frac(-4, 1));
    for n in 1..=8 {
        let forms =
            per_closed_forms(&CauchyInstance::new(n, a.clone(), b.clone()).unwrap()).unwrap();
        println!(
            "n={n}: ascending {} descending {} parity {} agree={}",
            forms.ascending,
            forms.descending,
            forms.parity,
            forms.agree()
        );
    }
}
