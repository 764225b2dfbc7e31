use hadamard_cauchy::cyclotomic::{cyclotomic_polynomial, CyclotomicElement, CyclotomicField};
use hadamard_cauchy::exact::ExactField;

fn main() {
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 12] {
        println!("Phi_{n} = {}", cyclotomic_polynomial(n).unwrap());
    }
    let field = CyclotomicField::new(5).unwrap();
    let z = CyclotomicElement::zeta(&field);
    let one = CyclotomicElement::one(&field);
    let w = (one.clone() - z.clone()).inverse().unwrap();
    println!("1/(1 - zeta_5) = {w}");
    println!("check: {}", w * (one - z.clone()));
    let sum = (0..5).fold(CyclotomicElement::zero(&field), |acc, k| {
        acc + CyclotomicElement::zeta_pow(&field, k)
    });
    println!("sum of fifth roots of unity = {sum}");
}
