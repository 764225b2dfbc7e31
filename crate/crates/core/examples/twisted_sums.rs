use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::scott::{f0_direct, f0_recurrence, f0_series, FTable};

fn main() {
    let (n, c) = (4, Rational::frac(-1, 2));
    let rec = f0_recurrence(n, 8, &c).unwrap();
    let ser = f0_series(n, 8, &c).unwrap();
    for m in 0..=8 {
        let direct = f0_direct(n, m, &c).unwrap();
        println!(
            "f({n},{m})(0) = {direct}  recurrence {}  series {}",
            rec[m], ser[m]
        );
    }
    let table = FTable::build(n, 3, &c).unwrap();
    for ((m, k), v) in &table.values {
        println!("f({n},{m})({k}) = {v}");
    }
}
