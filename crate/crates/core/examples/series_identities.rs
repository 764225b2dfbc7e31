use hadamard_cauchy::exact::Polynomial;
use hadamard_cauchy::series::{coef_aggregate_check, power_sums_from_poly, TruncatedSeries};

fn main() {
    let phi = TruncatedSeries::from_i64(&[1, -3, 2], 6);
    let log = phi.log().unwrap();
    println!("log = {log:?}");
    println!("exp(log) = {:?}", log.exp().unwrap());

    let f = TruncatedSeries::from_i64(&[0, 1, 1], 8);
    for m in 1..=4 {
        let (l, r) = coef_aggregate_check(&f, m).unwrap();
        println!("m={m}: {l} = {r}");
    }
    let g = Polynomial::from_i64(&[2, -3, 1]);
    println!(
        "power sums of the roots of {g}: {:?}",
        power_sums_from_poly(&g, 5).unwrap()
    );
}
