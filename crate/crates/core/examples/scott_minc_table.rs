use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::scott::{per_closed, scott_historical, scott_minc, CauchyInstance};

fn main() {
    let a = Rational::from(-1);
    println!(
        "{:>3}  {:>14}  {:>14}  {:>14}",
        "n", "signed", "product form", "historical"
    );
    for n in 1..=11 {
        let signed = scott_minc(n, &a).unwrap();
        let product =
            per_closed(&CauchyInstance::new(n, a.clone(), Rational::from(1)).unwrap()).unwrap();
        assert_eq!(signed, product);
        println!(
            "{n:>3}  {:>14}  {:>14}  {:>14}",
            signed.to_string(),
            product.to_string(),
            scott_historical(n).to_string()
        );
    }
}
