//! Command-line front end for `intdisc`: file plumbing, batch jobs and the
//! acceptance suite.
//!
//! Exit codes: 0 success, 1 domain error (singular form, divergent series,
//! failed criterion), 2 usage or input error.

pub mod acceptance;
pub mod output;
pub mod pool;

use clap::{Args, Parser, Subcommand, ValueEnum};
use intdisc::forms::{format_form, parse_form, random_form, random_posdef_quartic};
use intdisc::invariants::{
    compute_invariants, derive_25_with, discriminant, discriminant_poly, install_calibration, Case, CalibrationRecord,
    Verify,
};
use intdisc::jnr::{classify_exact, eval_exact, eval_form, g25_method, Argument, Branch, G25Method};
use intdisc::oracle::{fit_constants, format_fit, integrate_weight, radial_oracle, FitSample, Weight};
use intdisc::scalar::{format_q, parse_q, q_to_f64};
use intdisc::specfun::{gauss_2f1, hyp2f1_integral, integral_g25, route_of, series_g25, G25Point, Hyp2F1Params};
use intdisc::tensornet::{builtin_diagram, contract_symbolic, plan_order, ContractionDiagram, CATALOGUE};
use intdisc::wardops::{parse_quadruple, relative_discriminant, ward_report, ward_residual, default_step};
use intdisc::{FormShape, SymmetricForm, Q};
use output::{num, Report};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "intdisc", version, about = "Integral discriminants of homogeneous forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Emit JSON instead of `key = value` lines.
    #[arg(long)]
    json: bool,
    /// Calibration record for the 2|5 invariants (otherwise derived on first use).
    #[arg(long, value_name = "FILE")]
    calibration: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact SL(n) invariants and discriminant of a form file.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Discriminant of a form file, or statistics of the discriminant polynomial of a case.
    Disc {
        file: Option<PathBuf>,
        /// Case `n|r` when no file is given.
        #[arg(long, value_name = "N|R")]
        case: Option<String>,
        /// Print the polynomial itself.
        #[arg(long)]
        print: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form integral discriminant of a form file.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "1")]
        branch: BranchArg,
        /// Coefficients of the combination c1*J1 + c2*J2 (with --branch combined).
        #[arg(long, default_value_t = 1.0)]
        c1: f64,
        #[arg(long, default_value_t = 0.0)]
        c2: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Finite-difference Ward residuals of the closed form.
    WardCheck {
        /// Form file; omit to sample random forms of --shape.
        file: Option<PathBuf>,
        #[arg(long, value_name = "N|R", default_value = "2|4")]
        shape: String,
        /// Number of random forms.
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
        /// A single quadruple such as `40 + 04 = 31 + 13`.
        #[arg(long)]
        quadruple: Option<String>,
        #[arg(long, value_enum, default_value = "1")]
        branch: BranchArg,
        #[arg(long, default_value_t = acceptance::tol::WARD)]
        threshold: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Direct quadrature of a positive-definite binary quartic.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "exp")]
        weight: WeightArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Least-squares fit of the branch constants against the oracle.
    Fit {
        #[arg(long, default_value_t = acceptance::tol::FIT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Write `c1 = …`, `c2 = …`, `rms = …` here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Derive I8 and I12 of the binary quintic from the operator tables.
    #[command(name = "calibrate-25")]
    Calibrate25 {
        /// Verify every table row, not only the two defining ones.
        #[arg(long)]
        full: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Check an existing record instead of deriving one.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Symbolic contraction of a built-in or user diagram.
    Contract {
        /// Built-in diagram name (see --list).
        name: Option<String>,
        /// Diagram expression, e.g. `S(a,b) S(c,d) e(a,c) e(b,d)`.
        #[arg(long)]
        expr: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value = "1")]
        norm: String,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        print: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Re-emit a form file, optionally raised to a power, scaled or transformed.
    Expand {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Rational scale factor.
        #[arg(long)]
        scale: Option<String>,
        /// Matrix rows separated by `;`, entries by spaces: `1 2; 0 1`.
        #[arg(long)]
        transform: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Gauss hypergeometric function ₂F₁(a, b; c; t).
    Hyp {
        /// Optional action word; `eval` is the only one.
        #[arg(value_parser = ["eval"], hide = true)]
        action: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Also evaluate the Euler integral representation.
        #[arg(long)]
        integral: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The two-variable function G(u, v) of the binary quintic.
    G25 {
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[command(flatten)]
        common: Common,
    },
    /// Summary of the implemented cases and the invariant counts.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite.
    Acceptance {
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated criterion ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BranchArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Combined,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WeightArg {
    Exp,
    Exp2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Series,
    Integral,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<intdisc::Error> for Failure {
    fn from(e: intdisc::Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = std::result::Result<(Report, i32), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let json = common(&cli.command).json;
    let result = load_calibration(common(&cli.command)).and_then(|_| dispatch(cli.command, err));
    match result {
        Ok((report, code)) => {
            let _ = out.write_all(report.render(json).as_bytes());
            code
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "domain error: {m}");
            1
        }
    }
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Invariants { common, .. }
        | Command::Disc { common, .. }
        | Command::Eval { common, .. }
        | Command::WardCheck { common, .. }
        | Command::Oracle { common, .. }
        | Command::Fit { common, .. }
        | Command::Calibrate25 { common, .. }
        | Command::Contract { common, .. }
        | Command::Expand { common, .. }
        | Command::Hyp { common, .. }
        | Command::G25 { common, .. }
        | Command::Table { common }
        | Command::Acceptance { common, .. } => common,
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_form(path: &Path) -> std::result::Result<SymmetricForm<Q>, Failure> {
    parse_form(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_calibration(c: &Common) -> std::result::Result<(), Failure> {
    if let Some(p) = &c.calibration {
        let rec = CalibrationRecord::from_text(&read(p)?).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        // a second install with the same record is harmless
        if let Err(e) = install_calibration(rec.clone()) {
            let current = intdisc::invariants::calibration()?;
            if current.i8 != rec.i8 || current.i12 != rec.i12 {
                return Err(e.into());
            }
        }
    }
    Ok(())
}

fn parse_shape(s: &str) -> std::result::Result<FormShape, Failure> {
    let bad = || Failure::Usage(format!("expected a shape `n|r`, got `{s}`"));
    let (n, r) = s.split_once('|').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let r = r.trim().parse().map_err(|_| bad())?;
    Ok(FormShape::new(n, r)?)
}

fn branch_of(b: BranchArg, c1: f64, c2: f64) -> Branch {
    match b {
        BranchArg::One => Branch::One,
        BranchArg::Two => Branch::Two,
        BranchArg::Combined => Branch::Combined { c1, c2 },
    }
}

fn exact(v: &Q) -> Value {
    Value::String(format_q(v))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cmd: Command, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Invariants { file, .. } => invariants(&file),
        Command::Disc { file, case, print, .. } => disc(file.as_deref(), case.as_deref(), print),
        Command::Eval { file, branch, c1, c2, .. } => eval(&file, branch_of(branch, c1, c2)),
        Command::WardCheck { file, shape, count, seed, quadruple, branch, threshold, .. } => {
            ward_check(file.as_deref(), &shape, count, seed, quadruple.as_deref(), branch_of(branch, 1.0, 0.0), threshold)
        }
        Command::Oracle { file, weight, tol, .. } => oracle(&file, weight, tol),
        Command::Fit { samples, seed, tol, out, workers, .. } => fit(samples, seed, tol, out.as_deref(), workers),
        Command::Calibrate25 { full, out, check, .. } => calibrate(full, out.as_deref(), check.as_deref()),
        Command::Contract { name, expr, n, r, norm, list, print, .. } => {
            contract(name.as_deref(), expr.as_deref(), n, r, &norm, list, print)
        }
        Command::Expand { file, power, scale, transform, .. } => expand(&file, power, scale.as_deref(), transform.as_deref()),
        Command::Hyp { a, b, c, t, integral, .. } => hyp(a, b, c, t, integral),
        Command::G25 { u, v, method, .. } => g25(u, v, method),
        Command::Table { .. } => Ok((table(), 0)),
        Command::Acceptance { seed, only, workers, .. } => run_acceptance(seed, &only, workers, err),
    }
}

fn invariants(path: &Path) -> Outcome {
    let f = load_form(path)?;
    let inv = compute_invariants(&f)?;
    let mut r = Report::new();
    r.put("case", inv.case.to_string());
    for (name, v) in &inv.values {
        r.put(name, exact(v));
    }
    let d = discriminant(&inv);
    r.put("D", exact(&d));
    r.put("singular", d == Q::from_integer(0.into()));
    for (name, v) in &inv.values {
        r.float(&format!("{name}_f64"), q_to_f64(v));
    }
    Ok((r, 0))
}

fn disc(file: Option<&Path>, case: Option<&str>, print: bool) -> Outcome {
    let mut r = Report::new();
    match (file, case) {
        (Some(p), None) => {
            let f = load_form(p)?;
            let inv = compute_invariants(&f)?;
            let d = discriminant(&inv);
            r.put("case", inv.case.to_string());
            r.put("D", exact(&d));
            r.float("D_f64", q_to_f64(&d));
            match relative_discriminant(&f.to_f64()) {
                Some(x) => r.float("relative_D", x),
                None => r.put("relative_D", Value::Null),
            };
            r.put("singular", d == Q::from_integer(0.into()));
        }
        (None, Some(c)) => {
            let case = Case::of(parse_shape(c)?)?;
            let calib = if case == Case::Binary5 { Some(intdisc::invariants::calibration()?) } else { None };
            let d = discriminant_poly(case, calib)?;
            r.put("case", case.to_string());
            r.put("degree", d.total_degree().unwrap_or(0));
            r.put("monomials", d.monomial_count());
            if print {
                r.put("polynomial", d.to_golden());
            }
        }
        _ => return Err(Failure::Usage("give either a form file or --case, not both".into())),
    }
    Ok((r, 0))
}

fn argument(r: &mut Report, a: &Argument) {
    match a {
        Argument::None => {}
        Argument::T(t) => {
            r.float("t", *t);
        }
        Argument::UV(u, v) => {
            r.float("u", *u).float("v", *v);
            r.put("method", if g25_method(*u, *v) == G25Method::Series { "series" } else { "integral" });
        }
    }
}

fn eval(path: &Path, branch: Branch) -> Outcome {
    let f = load_form(path)?;
    let v = eval_exact(&f, branch)?;
    let rep = classify_exact(&f)?;
    let mut r = Report::new();
    r.put("case", v.case.to_string()).put("branch", v.branch.to_string()).float("value", v.value);
    argument(&mut r, &v.argument);
    r.put("regime", rep.regime.to_string());
    if let Some(d) = v.d_form {
        r.float("d_form", d);
    }
    r.put("near_singular", v.near_singular);
    if let Some(p) = v.phase {
        r.put("phase", p);
    }
    Ok((r, 0))
}

fn ward_check(
    file: Option<&Path>,
    shape: &str,
    count: usize,
    seed: u64,
    quadruple: Option<&str>,
    branch: Branch,
    threshold: f64,
) -> Outcome {
    let forms: Vec<SymmetricForm<f64>> = match file {
        Some(p) => vec![load_form(p)?.to_f64()],
        None => {
            let sh = parse_shape(shape)?;
            Case::of(sh)?;
            (0..100_000u64)
                .map(|k| random_form::<f64>(sh, seed.wrapping_mul(7919).wrapping_add(k)))
                .filter(|f| relative_discriminant(f).is_some_and(|d| d > acceptance::tol::RELATIVE_D_MIN))
                .filter(|f| eval_form(f, branch).is_ok())
                .take(count)
                .collect()
        }
    };
    let fun = move |f: &SymmetricForm<f64>| eval_form(f, branch).map(|v| v.value);
    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for (k, f) in forms.iter().enumerate() {
        let results = match quadruple {
            Some(text) => {
                let q = parse_quadruple(text, f.shape().n)?;
                vec![(q.clone(), ward_residual(&fun, f, &q, default_step(f))?)]
            }
            None => ward_report(&fun, f)?,
        };
        for (q, res) in results {
            worst = worst.max(res);
            rows.push(json!({ "form": k, "quadruple": q.to_string(), "residual": num(res) }));
        }
    }
    let mut r = Report::new();
    r.put("forms", forms.len()).put("identities", rows.len()).float("max_residual", worst).float("threshold", threshold);
    let pass = worst < threshold && !forms.is_empty();
    r.put("pass", pass).put("rows", Value::Array(rows));
    Ok((r, if pass { 0 } else { 1 }))
}

fn oracle(path: &Path, weight: WeightArg, tol: f64) -> Outcome {
    let f = load_form(path)?.to_f64();
    let w = match weight {
        WeightArg::Exp => Weight::Exp,
        WeightArg::Exp2 => Weight::Exp2,
    };
    let q = integrate_weight(&f, w, tol)?;
    let rad = radial_oracle(&f)?;
    let mut r = Report::new();
    r.float("value", q.value).float("error", q.error).put("cells", q.cells);
    r.float("radial", rad.value).float("ratio", q.value / rad.value);
    Ok((r, 0))
}

fn fit(samples: usize, seed: u64, tol: f64, out: Option<&Path>, workers: Option<usize>) -> Outcome {
    let seeds: Vec<u64> = (0..samples as u64).map(|k| seed * 1000 + k).collect();
    let rows = pool::parallel_map(&seeds, workers.unwrap_or_else(pool::default_workers), |&s| {
        let f = random_posdef_quartic(s)?;
        Ok::<_, intdisc::Error>(FitSample {
            oracle: intdisc::oracle::integrate_exp_form(&f, tol)?.value,
            j1: eval_form(&f, Branch::One)?.value,
            j2: eval_form(&f, Branch::Two)?.value,
        })
    });
    let samples: Vec<FitSample> = rows.into_iter().collect::<intdisc::Result<_>>()?;
    let res = fit_constants(&samples)?;
    if let Some(p) = out {
        write_file(p, &format_fit(&res))?;
    }
    let mut r = Report::new();
    r.float("c1", res.c1).float("c2", res.c2).float("rms", res.rms).put("samples", res.samples);
    r.put("holdout", res.holdout.map_or(Value::Null, num));
    Ok((r, 0))
}

fn calibrate(full: bool, out: Option<&Path>, check: Option<&Path>) -> Outcome {
    let rec = match check {
        Some(p) => CalibrationRecord::from_text(&read(p)?).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?,
        None => derive_25_with(if full { Verify::Full } else { Verify::Defining })?,
    };
    if let Some(p) = out {
        write_file(p, &rec.to_text())?;
    }
    let mut r = Report::new();
    r.put("i8_terms", rec.i8.monomial_count()).put("i12_terms", rec.i12.monomial_count());
    r.put("rows_verified", rec.checks.len()).put("checks", rec.checks.clone());
    Ok((r, 0))
}

fn contract(
    name: Option<&str>,
    expr: Option<&str>,
    n: Option<usize>,
    r: Option<usize>,
    norm: &str,
    list: bool,
    print: bool,
) -> Outcome {
    let mut rep = Report::new();
    if list {
        rep.put("diagrams", CATALOGUE.to_vec());
        return Ok((rep, 0));
    }
    let d = match (name, expr) {
        (Some(nm), None) => builtin_diagram(&nm.to_lowercase())?,
        (None, Some(e)) => {
            let (n, r) = n.zip(r).ok_or_else(|| Failure::Usage("--expr needs --n and --r".into()))?;
            let k = parse_q(norm).ok_or_else(|| Failure::Usage(format!("bad normalization `{norm}`")))?;
            ContractionDiagram::parse("user", n, r, e, k)?
        }
        _ => return Err(Failure::Usage("give a diagram name or --expr".into())),
    };
    let plan = plan_order(&d);
    let res = contract_symbolic(&d)?;
    rep.put("diagram", d.name().to_string()).put("n", d.n()).put("r", d.r()).put("degree", d.degree());
    rep.put("max_rank", plan.max_rank()).put("free_labels", d.free_labels().to_vec());
    match res.scalar() {
        Some(p) => {
            rep.put("monomials", p.monomial_count());
            if print {
                rep.put("polynomial", p.to_golden());
            }
        }
        None => {
            rep.put("components", res.values.len());
        }
    }
    Ok((rep, 0))
}

fn parse_matrix(text: &str, n: usize) -> std::result::Result<Vec<Vec<Q>>, Failure> {
    let rows: Vec<Vec<Q>> = text
        .split(';')
        .map(|row| {
            row.split_whitespace()
                .map(|x| parse_q(x).ok_or_else(|| Failure::Usage(format!("bad matrix entry `{x}`"))))
                .collect()
        })
        .collect::<std::result::Result<_, _>>()?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Failure::Usage(format!("the transform must be {n}×{n}")));
    }
    Ok(rows)
}

fn expand(path: &Path, power: usize, scale: Option<&str>, transform: Option<&str>) -> Outcome {
    let mut f = load_form(path)?;
    if power == 0 {
        return Err(Failure::Usage("--power must be at least 1".into()));
    }
    f = f.pow_form(power)?;
    if let Some(s) = scale {
        let mu = parse_q(s).ok_or_else(|| Failure::Usage(format!("bad scale `{s}`")))?;
        f = f.scale(&mu);
    }
    if let Some(t) = transform {
        f = f.gl_transform(&parse_matrix(t, f.shape().n)?)?;
    }
    let mut r = Report::new();
    r.put("form", format_form(&f));
    Ok((r, 0))
}

fn hyp(a: f64, b: f64, c: f64, t: f64, integral: bool) -> Outcome {
    let p = Hyp2F1Params::new(a, b, c, t);
    let mut r = Report::new();
    r.float("value", gauss_2f1(p)?).put("route", route_of(t).to_string());
    if integral {
        r.float("integral", hyp2f1_integral(p)?);
    }
    Ok((r, 0))
}

fn g25(u: f64, v: f64, method: MethodArg) -> Outcome {
    let pt = G25Point { u, v };
    let (value, used) = match method {
        MethodArg::Series => (series_g25(pt, 1e-14)?, "series"),
        MethodArg::Integral => (integral_g25(pt)?, "integral"),
        MethodArg::Auto => match g25_method(u, v) {
            G25Method::Series => (intdisc::jnr::eval_g25(u, v)?, "series"),
            G25Method::Integral => (integral_g25(pt)?, "integral"),
        },
    };
    let mut r = Report::new();
    r.float("value", value).put("method", used);
    Ok((r, 0))
}

fn table() -> Report {
    let rows = [
        ("2|2", "det", "det", "|det|^(-1/2)"),
        ("3|2", "det", "det", "|det|^(-1/2)"),
        ("2|3", "I4", "I4", "|I4|^(-1/6)"),
        ("2|4", "I2, I3", "I2^3 - 6 I3^2", "|I2|^(-1/4) 2F1(1/12, 5/12; 1/2; 6 I3^2/I2^3) and I3 |I2|^(-7/4) 2F1(7/12, 11/12; 3/2; ·)"),
        (
            "2|5",
            "I4, I8, I12",
            "I4^2 - 64 I8",
            "|I4|^(-1/10) Σ (3/10)_{i+j} (1/10)_{2i+3j} (1/10)_j / ((2/5)_{i+2j} (3/5)_{i+2j} i! j!) (16 I8/I4^2)^i (128 I12/(3 I4^3))^j",
        ),
        ("3|3", "I4, I6", "32 I4^3 + 3 I6^2", "|I4|^(-1/4) 2F1(1/12, 5/12; 1/2; -3 I6^2/(32 I4^3)) and I6 |I4|^(-7/4) 2F1(7/12, 11/12; 3/2; ·)"),
    ];
    let cases: Vec<Value> = rows
        .iter()
        .map(|(c, inv, d, j)| json!({ "case": c, "invariants": inv, "discriminant": d, "J": j }))
        .collect();
    let mut counts = serde_json::Map::new();
    for (r, row) in acceptance::INVARIANT_COUNTS {
        let mut m = serde_json::Map::new();
        for (k, _) in row.iter().enumerate() {
            let n = k + 2;
            let c = intdisc::forms::invariant_count(n, r).expect("n, r >= 2");
            m.insert(format!("n{n}"), json!(c));
        }
        counts.insert(format!("r{r}"), Value::Object(m));
    }
    let mut rep = Report::new();
    rep.put("cases", Value::Array(cases)).put("invariant_counts", Value::Object(counts));
    rep
}

fn run_acceptance(seed: u64, only: &[u8], workers: Option<usize>, err: &mut dyn Write) -> Outcome {
    if let Some(bad) = only.iter().find(|&&k| !(1..=12).contains(&k)) {
        return Err(Failure::Usage(format!("no criterion {bad}; ids are 1..12")));
    }
    let results = acceptance::run_all(only, seed, workers.unwrap_or_else(pool::default_workers));
    let mut r = Report::new();
    let mut failed = 0;
    let mut rows = Vec::new();
    for c in &results {
        let _ = writeln!(err, "{}", c.line());
        if !c.passed {
            failed += 1;
        }
        let mut row = json!({ "id": c.id, "name": c.name, "status": if c.passed { "PASS" } else { "FAIL" }, "detail": c.detail, "seconds": num(c.seconds) });
        if let (false, Some(reason)) = (c.passed, c.known_deviation()) {
            row["known_deviation"] = json!(reason);
        }
        rows.push(row);
    }
    r.put("seed", seed).put("passed", results.len() - failed).put("failed", failed).put("criteria", Value::Array(rows));
    Ok((r, if failed == 0 { 0 } else { 1 }))
}
