fn main() {
    let args = [
        "hadamard-cauchy",
        "verify",
        "--n",
        "3",
        "--beta",
        "1",
        "--gamma",
        "-1",
        "--format",
        "json",
    ];
    let code = hadamard_cauchy::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
