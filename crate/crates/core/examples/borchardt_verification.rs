use hadamard_cauchy::exact::Rational;
use hadamard_cauchy::matrix::DEFAULT_MAX_BRUTEFORCE;
use hadamard_cauchy::scott::verify_instance;

fn main() {
    let report = verify_instance(
        4,
        Rational::from(1),
        Rational::frac(-2, 3),
        3,
        DEFAULT_MAX_BRUTEFORCE,
    )
    .unwrap();
    for c in &report.checks {
        println!("{:?} {}: {} | {}", c.status, c.name, c.lhs, c.rhs);
    }
    println!("{}", serde_json::to_string_pretty(&report.values).unwrap());
    assert!(report.all_passed());
}
