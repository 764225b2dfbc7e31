use hadamard_cauchy::cyclotomic::{CyclotomicElement, CyclotomicField};
use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::matrix::build_cauchy;
use hadamard_cauchy::scott::verify::witness_nodes;
use hadamard_cauchy::scott::{det_hadamard_closed, CauchyInstance};

fn main() {
    let (beta, gamma) = (Rational::from(1), Rational::frac(3, 2));
    for n in 1..=5 {
        let inst = CauchyInstance::from_witnesses(n, beta.clone(), gamma.clone()).unwrap();
        let field = CyclotomicField::new(n).unwrap();
        let (xs, ys) = witness_nodes(&field, &beta, &gamma);
        let alpha = CyclotomicElement::from_rational(&field, inst.alpha().unwrap());
        for m in 1..=3 {
            let closed = det_hadamard_closed(&inst, m).unwrap();
            let brute = build_cauchy(&xs, &ys, m as i64)
                .unwrap()
                .determinant()
                .unwrap();
            assert_eq!(closed.embed(&alpha).unwrap(), brute);
            println!("n={n} m={m}: {closed}  [alpha^{n} = {}]", inst.c);
        }
    }
}
