//! Command-line front end. Every rational leaves the program as an exact
//! fraction string; nothing is printed in floating point.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::exact::Rational;
use crate::matrix::DEFAULT_MAX_BRUTEFORCE;
use crate::scott::fnm::{f0_direct, f0_recurrence, f0_series, f_value};
use crate::scott::{
    det_hadamard_closed, per_closed_forms, scott_historical, scott_minc, verify_instance,
    CauchyInstance, Check, TwistedRational,
};
use crate::selftest;

pub const SCHEMA: &str = "hadamard-cauchy/1";
pub const CAP_ENV: &str = "HC_MAX_BRUTEFORCE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hadamard-cauchy",
    version,
    about = "Exact determinants and permanents of Hadamard powers of Cauchy matrices"
)]
pub struct Cli {
    /// Output format [default: plain]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest order for exponential-time brute force [default: 12]
    #[arg(long, global = true)]
    pub max_bruteforce: Option<usize>,

    /// key=value file with max_bruteforce and format defaults
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Permanent for the roots of x^n + a and x^n − a
    Scott(ScottArgs),
    /// Closed-form permanent of (1/(x_i − y_j)) for the roots of x^n + a and x^n + b
    Permanent(PermanentArgs),
    /// Closed-form determinant of ((x_i − y_j)^{−m}) as r·alpha^e with alpha^n = b/a
    Det(DetArgs),
    /// Twisted sums f_{n,m}(k) by every applicable route
    Fnm(FnmArgs),
    /// Brute force over Q(ζ_n) against every closed form
    Verify(VerifyArgs),
    /// Run the full acceptance suite
    Selftest,
}

#[derive(Debug, Args)]
pub struct ScottArgs {
    /// Matrix order
    #[arg(value_name = "N", conflicts_with = "n")]
    pub n_pos: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub a: Rational,
    /// Print rows n = 1..=N instead of a single value
    #[arg(long, value_name = "N")]
    pub table: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PermanentArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rational,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rational,
    /// Also evaluate at this rational root of x^n = b/a
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct FnmArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rational,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Rational,
    #[arg(long, default_value_t = 2)]
    pub m_max: usize,
}

/// Values from an optional `key=value` file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub max_bruteforce: Option<usize>,
    pub format: Option<Format>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = ConfigFile::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", no + 1))?;
            let value = value.trim();
            match key.trim() {
                "max_bruteforce" => {
                    cfg.max_bruteforce = Some(
                        value
                            .parse()
                            .map_err(|e| format!("config max_bruteforce: {e}"))?,
                    )
                }
                "format" => {
                    cfg.format = Some(value.parse().map_err(|e| format!("config format: {e}"))?)
                }
                other => return Err(format!("config line {}: unknown key {other:?}", no + 1)),
            }
        }
        Ok(cfg)
    }
}

/// Effective settings: flag, then environment, then config file, then default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub max_bruteforce: usize,
    pub format: Format,
}

impl Settings {
    pub fn resolve(
        flag_cap: Option<usize>,
        flag_format: Option<Format>,
        env_cap: Option<&str>,
        config: &ConfigFile,
    ) -> Result<Self, String> {
        let env_cap = match env_cap {
            Some(s) => Some(
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("{CAP_ENV}={s:?}: {e}"))?,
            ),
            None => None,
        };
        Ok(Settings {
            max_bruteforce: flag_cap
                .or(env_cap)
                .or(config.max_bruteforce)
                .unwrap_or(DEFAULT_MAX_BRUTEFORCE),
            format: flag_format.or(config.format).unwrap_or(Format::Plain),
        })
    }
}

/// A table row whose columns keep their insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row(pub Vec<(String, String)>);

impl Row {
    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    fn with_q(self, key: &str, value: &Rational) -> Self {
        self.with(key, value.to_fraction_string())
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum OutputValue {
    Rational(Rational),
    Twisted {
        rational: Rational,
        alpha_exponent: usize,
        alpha_relation: String,
    },
}

impl From<&TwistedRational> for OutputValue {
    fn from(t: &TwistedRational) -> Self {
        OutputValue::Twisted {
            rational: t.coefficient().clone(),
            alpha_exponent: t.exponent(),
            alpha_relation: "alpha^n = c".into(),
        }
    }
}

impl OutputValue {
    fn fields(&self) -> Vec<(&'static str, String)> {
        match self {
            OutputValue::Rational(r) => vec![("value", r.to_fraction_string())],
            OutputValue::Twisted {
                rational,
                alpha_exponent,
                alpha_relation,
            } => vec![
                ("rational", rational.to_fraction_string()),
                ("alpha_exponent", alpha_exponent.to_string()),
                ("alpha_relation", alpha_relation.clone()),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputRecord {
    pub schema: &'static str,
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<OutputValue>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Row>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        OutputRecord {
            schema: SCHEMA,
            command: command.into(),
            params: BTreeMap::new(),
            value: None,
            values: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    fn param_q(self, key: &str, value: &Rational) -> Self {
        self.param(key, value.to_fraction_string())
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                serde_json::to_string_pretty(self).expect("record is serializable") + "\n"
            }
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    /// One long table: `section,index,key,value`.
    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |section: &str, index: String, key: &str, value: &str| {
            w.write_record([section, index.as_str(), key, value])
                .expect("in-memory write");
        };
        put("section", "index".into(), "key", "value");
        put("schema", String::new(), "schema", self.schema);
        put("command", String::new(), "command", &self.command);
        for (k, v) in &self.params {
            put("params", String::new(), k, v);
        }
        if let Some(v) = &self.value {
            for (k, s) in v.fields() {
                put("value", String::new(), k, &s);
            }
        }
        for (i, row) in self.values.iter().enumerate() {
            for (k, v) in &row.0 {
                put("values", i.to_string(), k, v);
            }
        }
        for (i, c) in self.checks.iter().enumerate() {
            let status = if c.passed() { "pass" } else { "fail" };
            for (k, v) in [
                ("name", c.name.as_str()),
                ("status", status),
                ("lhs", &c.lhs),
                ("rhs", &c.rhs),
            ] {
                put("checks", i.to_string(), k, v);
            }
        }
        for (i, n) in self.notes.iter().enumerate() {
            put("notes", i.to_string(), "note", n);
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    fn render_plain(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        if let Some(v) = &self.value {
            for (k, val) in v.fields() {
                let _ = writeln!(s, "{k}: {val}");
            }
        }
        if let Some(first) = self.values.first() {
            let cols: Vec<&str> = first.0.iter().map(|(k, _)| k.as_str()).collect();
            let widths: Vec<usize> = (0..cols.len())
                .map(|i| {
                    self.values
                        .iter()
                        .filter_map(|r| r.0.get(i).map(|(_, v)| v.chars().count()))
                        .chain(std::iter::once(cols[i].len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(s, "{}", line(cols.clone()));
            for row in &self.values {
                let _ = writeln!(
                    s,
                    "{}",
                    line(row.0.iter().map(|(_, v)| v.as_str()).collect())
                );
            }
        }
        for c in &self.checks {
            let tag = if c.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(s, "[{tag}] {}: {} | {}", c.name, c.lhs, c.rhs);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

fn check_q(name: &str, lhs: &Rational, rhs: &Rational) -> Check {
    let mut c = Check::compare(name, lhs, rhs);
    c.lhs = lhs.to_fraction_string();
    c.rhs = rhs.to_fraction_string();
    c
}

/// Why a command could not produce a record.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(m) => CliError::Mismatch(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn cmd_scott(args: &ScottArgs) -> Result<OutputRecord, CliError> {
    if let Some(max) = args.table {
        if max == 0 {
            return Err(CliError::Input("--table needs at least one row".into()));
        }
        let mut rec = OutputRecord::new("scott")
            .param_q("a", &args.a)
            .param("table", max);
        for n in 1..=max {
            rec.values.push(
                Row::default()
                    .with("n", n)
                    .with_q("value", &scott_minc(n, &args.a)?)
                    .with_q("historical", &scott_historical(n)),
            );
        }
        rec.notes.push(
            "historical: Scott's 1881 unsigned value n(1·3·…·(n−2))^2/2^n, incorrect in sign, never verified".into(),
        );
        return Ok(rec);
    }
    let n = args
        .n_pos
        .or(args.n)
        .ok_or_else(|| CliError::Input("scott needs N or --table".into()))?;
    let value = scott_minc(n, &args.a)?;
    let product =
        crate::scott::per_closed(&CauchyInstance::new(n, args.a.clone(), -args.a.clone())?)?;
    let mut rec = OutputRecord::new("scott")
        .param("n", n)
        .param_q("a", &args.a);
    rec.checks
        .push(check_q("closed form vs product form", &value, &product));
    rec.value = Some(OutputValue::Rational(value));
    Ok(rec)
}

fn cmd_permanent(args: &PermanentArgs) -> Result<OutputRecord, CliError> {
    let inst = CauchyInstance::new(args.n, args.a.clone(), args.b.clone())?;
    let forms = per_closed_forms(&inst)?;
    let mut rec = OutputRecord::new("permanent")
        .param("n", args.n)
        .param_q("a", &args.a)
        .param_q("b", &args.b);
    rec.checks.push(check_q(
        "ascending vs descending product",
        &forms.ascending,
        &forms.descending,
    ));
    rec.checks.push(check_q(
        "ascending vs parity-split product",
        &forms.ascending,
        &forms.parity,
    ));
    rec.value = Some(OutputValue::Rational(forms.ascending));
    Ok(rec)
}

fn cmd_det(args: &DetArgs) -> Result<OutputRecord, CliError> {
    let inst = CauchyInstance::new(args.n, args.a.clone(), args.b.clone())?;
    let d = det_hadamard_closed(&inst, args.m)?;
    let mut rec = OutputRecord::new("det")
        .param("n", args.n)
        .param("m", args.m)
        .param_q("a", &args.a)
        .param_q("b", &args.b)
        .param_q("c", &inst.c);
    if let Some(alpha) = &args.alpha {
        rec = rec.param_q("alpha", alpha);
        rec.values.push(
            Row::default()
                .with_q("alpha", alpha)
                .with_q("embedded", &d.embed(alpha)?),
        );
    }
    rec.value = Some(OutputValue::from(&d));
    Ok(rec)
}

/// `f_{n,j}(k)` for `j = 0..=m` by stepping `k` up from 0 with
/// `f_{n,j}(k) = α^{−1}[f_{n,j}(k−1) − f_{n,j−1}(k−1)]`.
fn fnm_by_steps(
    n: usize,
    m: usize,
    k: usize,
    c: &Rational,
) -> crate::error::Result<TwistedRational> {
    let mut row: Vec<TwistedRational> = (0..=m)
        .map(|j| TwistedRational::rational(f0_direct(n, j, c)?, n, c.clone()))
        .collect::<crate::error::Result<_>>()?;
    for step in 1..=k {
        let head = if step % n == 0 { n as i64 } else { 0 };
        let mut next = vec![TwistedRational::rational(
            Rational::from(head),
            n,
            c.clone(),
        )?];
        for j in 1..=m {
            next.push(row[j].sub(&row[j - 1])?.shift(-1));
        }
        row = next;
    }
    Ok(row.swap_remove(m))
}

fn cmd_fnm(args: &FnmArgs) -> Result<OutputRecord, CliError> {
    let (n, m, c) = (args.n, args.m, &args.c);
    let value = f_value(n, m, args.k, c)?;
    let k = args.k.rem_euclid(n as i64) as usize;
    let mut rec = OutputRecord::new("fnm")
        .param("n", n)
        .param("m", m)
        .param("k", args.k)
        .param_q("c", c);
    let mut routes = vec![("closed", value.clone())];
    if k == 0 {
        let rec_m = f0_recurrence(n, m, c)?.swap_remove(m);
        let ser_m = f0_series(n, m, c)?.swap_remove(m);
        routes.push((
            "recurrence",
            TwistedRational::rational(rec_m, n, c.clone())?,
        ));
        routes.push(("series", TwistedRational::rational(ser_m, n, c.clone())?));
    } else {
        routes.push(("step", fnm_by_steps(n, m, k, c)?));
    }
    for (name, v) in &routes[1..] {
        rec.checks.push(Check::compare(
            format!("{} vs {name}", routes[0].0),
            &routes[0].1,
            v,
        ));
    }
    for (name, v) in &routes {
        rec.values.push(
            Row::default()
                .with("route", name)
                .with_q("rational", v.coefficient())
                .with("alpha_exponent", v.exponent()),
        );
    }
    rec.value = Some(OutputValue::from(&value));
    Ok(rec)
}

fn cmd_verify(args: &VerifyArgs, cap: usize) -> Result<OutputRecord, CliError> {
    let report = verify_instance(
        args.n,
        args.beta.clone(),
        args.gamma.clone(),
        args.m_max,
        cap,
    )?;
    let inst = &report.instance;
    let mut rec = OutputRecord::new("verify")
        .param("n", args.n)
        .param_q("beta", &args.beta)
        .param_q("gamma", &args.gamma)
        .param("m_max", args.m_max)
        .param_q("a", &inst.a)
        .param_q("b", &inst.b)
        .param_q("c", &inst.c);
    rec.value = report.permanent().map(OutputValue::Rational);
    for v in &report.values {
        rec.values.push(
            Row::default()
                .with("m", v.m)
                .with("det", &v.det)
                .with("per", &v.per),
        );
    }
    rec.checks = report.checks;
    Ok(rec)
}

fn cmd_selftest(cap: usize, err: &mut dyn Write) -> OutputRecord {
    let mut rec = OutputRecord::new("selftest").param("max_bruteforce", cap);
    for o in selftest::run_all(cap) {
        let _ = writeln!(err, "{}", o.line());
        rec.checks.push(Check::holds(
            format!("criterion {}: {}", o.id, o.name),
            o.passed,
            format!("{} checks, {} failures", o.checks, o.failures.len()),
            "0 failures",
        ));
    }
    rec
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile, String> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            ConfigFile::parse(&text)
        }
        None => Ok(ConfigFile::default()),
    }
}

/// Parse `args`, run one command and return the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let settings = load_config(&cli.config).and_then(|cfg| {
        let env = std::env::var(CAP_ENV).ok();
        Settings::resolve(cli.max_bruteforce, cli.format, env.as_deref(), &cfg)
    });
    let settings = match settings {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cap = settings.max_bruteforce;
    let result = match &cli.command {
        Command::Scott(a) => cmd_scott(a),
        Command::Permanent(a) => cmd_permanent(a),
        Command::Det(a) => cmd_det(a),
        Command::Fnm(a) => cmd_fnm(a),
        Command::Verify(a) => cmd_verify(a, cap),
        Command::Selftest => Ok(cmd_selftest(cap, err)),
    };
    finish(result, settings.format, out, err)
}

/// Print a command's outcome and map it to an exit code.
pub fn finish(
    result: Result<OutputRecord, CliError>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match result {
        Ok(rec) => {
            let _ = out.write_all(rec.render(format).as_bytes());
            if rec.all_passed() {
                EXIT_OK
            } else {
                for c in rec.checks.iter().filter(|c| !c.passed()) {
                    let _ = writeln!(err, "mismatch: {}: {} != {}", c.name, c.lhs, c.rhs);
                }
                EXIT_MISMATCH
            }
        }
        Err(CliError::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Mismatch(m)) => {
            let _ = writeln!(err, "mismatch: {m}");
            EXIT_MISMATCH
        }
    }
}
