use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::matrix::{ExactMatrix, DEFAULT_MAX_BRUTEFORCE};

fn main() {
    for n in 1..=10 {
        let m = ExactMatrix::from_fn(n, n, |i, j| Rational::frac(1, (i + j + 1) as i64)).unwrap();
        let ryser = m.permanent_ryser_par(DEFAULT_MAX_BRUTEFORCE).unwrap();
        if n <= 7 {
            assert_eq!(ryser, m.permanent_naive(DEFAULT_MAX_BRUTEFORCE).unwrap());
        }
        println!("per(Hilbert {n}) = {ryser}");
    }
}
