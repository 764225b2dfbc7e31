use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::matrix::{kernel_det_closed, kernel_matrix};

fn main() {
    let xs: Vec<Rational> = [1, 3, -2, 5, 7, -4]
        .iter()
        .map(|&v| Rational::from(v))
        .collect();
    let ys: Vec<Rational> = [0, 2, 4, -1, 6, -3]
        .iter()
        .map(|&v| Rational::from(v))
        .collect();
    for m in 1..=4 {
        for n in 1..=6 {
            let k = kernel_matrix(&xs[..n], &ys[..n], m).unwrap();
            let (det, route) = kernel_det_closed(&xs[..n], &ys[..n], m).unwrap();
            assert_eq!(det, k.determinant().unwrap());
            println!("m={m} n={n}: rank {} det {det} via {route:?}", k.rank());
        }
    }
}
