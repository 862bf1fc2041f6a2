//! qtrace: compute correlation functions and q-dimensions, dump generating
//! functions and run the verification suite.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtrace_core::closedform::cinf::{c_one_point_half, neutral_boson_qdim, neutral_fermion_qdim, BaseSource};
use qtrace_core::closedform::duality::{duality_extract, duality_reduce, DualityInstance, Family, ReductionMode};
use qtrace_core::closedform::level1::f_bo;
use qtrace_core::combinat::Algebra;
use qtrace_core::fock::{neutral_trace, FockKind, OpTag};
use qtrace_core::qseries::json::{to_csv, to_json_string};
use qtrace_core::qseries::{euler, parse_rational, poch_inf, qhyper, theta};
use qtrace_core::verify::{registry, report_json, report_table, run_check, run_suite, suite_passes, Status};
use qtrace_core::{Error, HalfInt, Param, Series};

#[derive(Parser)]
#[command(name = "qtrace", version, about = "Exact q-series for negative-level correlation functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// n-point function of an irreducible module.
    Corr(CorrArgs),
    /// q-dimension of an irreducible module.
    Qdim(QdimArgs),
    /// Both sides of one registered check.
    Identity(IdentityArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Print a named generating function.
    Dump(DumpArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Fock-space trace oracle.
    Oracle,
    /// Closed formulas, combined by assignment of points to factors.
    Closed,
    /// Closed formulas, combined as printed (product of full n-point blocks).
    Literal,
}

#[derive(Args)]
struct Module {
    /// a, c or d.
    #[arg(long)]
    algebra: String,
    /// Level as an integer or half-integer, e.g. -2 or -3/2.
    #[arg(long, allow_hyphen_values = true)]
    level: String,
    /// Comma-separated label entries.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    lambda: String,
    /// Truncation order, e.g. 10 or 21/2.
    #[arg(long = "N", alias = "n")]
    order: String,
    #[arg(long, value_enum, default_value = "closed")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct CorrArgs {
    #[command(flatten)]
    module: Module,
    /// Comma-separated points s (t = s²), each optionally shifted as s@d for
    /// t = s²q^d.
    #[arg(long, allow_hyphen_values = true)]
    points: String,
}

#[derive(Args)]
struct QdimArgs {
    #[command(flatten)]
    module: Module,
}

#[derive(Args)]
struct IdentityArgs {
    /// Registered check name.
    name: String,
    /// Override the check's truncation order.
    #[arg(long = "N", alias = "n")]
    order: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Name prefix, or glob when it contains * or ?.
    #[arg(long, default_value = "")]
    filter: String,
    /// List matching check names without running them.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args)]
struct DumpArgs {
    /// theta, f_bo, pochhammer, qhyper or euler.
    name: String,
    /// Points s (t = s²), comma-separated.
    #[arg(long, alias = "t", allow_hyphen_values = true, default_value = "")]
    points: String,
    #[arg(long = "N", alias = "n")]
    order: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_points(text: &str) -> Result<Vec<Param>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (s, d) = p.split_once('@').unwrap_or((p, "0"));
            Param::try_new(parse_rational(s)?, d.parse()?)
        })
        .collect()
}

fn parse_lambda(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| Error::Parse(format!("bad label entry {p:?}"))))
        .collect()
}

fn render(s: &Series, format: Format) -> String {
    match format {
        Format::Json => to_json_string(s) + "\n",
        Format::Csv => to_csv(s),
        Format::Pretty => {
            let rows: Vec<(String, String)> = s.terms().iter().map(|(m, c)| (m.to_string(), c.to_string())).collect();
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (m, c) in rows {
                out.push_str(&format!("{m:<width$}  {c}\n"));
            }
            out.push_str(&format!("+ O(q^({}))\n", s.truncation() + HalfInt::HALF));
            out
        }
    }
}

/// A module: a duality instance with its label, or one of the neutral spaces.
enum Target {
    Duality(DualityInstance, Vec<i64>),
    NeutralBoson,
    NeutralFermion,
}

fn target(alg: Algebra, level: HalfInt, lambda: Vec<i64>) -> Result<Target, Error> {
    let bad = || Error::InvalidInput(format!("no {alg}-infinity module of level {level} in the supported families"));
    let twice = level.twice();
    let (family, l) = match alg {
        Algebra::A if level.is_integer() && twice < 0 => (Family::AMinus, -twice / 2),
        Algebra::C if twice == -1 => {
            return if lambda.iter().all(|&x| x == 0) { Ok(Target::NeutralBoson) } else { Err(bad()) };
        }
        Algebra::C if !level.is_integer() && twice > 0 => (Family::CPlusHalf, (twice + 1) / 2),
        Algebra::C if level.is_integer() && twice < 0 => (Family::CMinus, -twice / 2),
        Algebra::C if !level.is_integer() && twice < 0 => (Family::CMinusHalf, (-twice - 1) / 2),
        Algebra::D if twice == 1 => {
            return if lambda.iter().all(|&x| x == 0) { Ok(Target::NeutralFermion) } else { Err(bad()) };
        }
        Algebra::D if level.is_integer() && twice < 0 => (Family::DMinus, -twice / 2),
        Algebra::D if !level.is_integer() && twice < 0 => (Family::DMinusHalf, (-twice + 1) / 2),
        _ => return Err(bad()),
    };
    let inst = DualityInstance::new(family, l as usize)?;
    let mut lambda = lambda;
    if lambda.len() < inst.l && family != Family::AMinus {
        lambda.resize(inst.l, 0);
    }
    Ok(Target::Duality(inst, lambda))
}

fn module_series(m: &Module, points: &[Param]) -> Result<Series, Failure> {
    let alg: Algebra = m.algebra.parse()?;
    let level: HalfInt = m.level.parse()?;
    let n: HalfInt = m.order.parse()?;
    let lambda = parse_lambda(&m.lambda)?;
    let series = match target(alg, level, lambda)? {
        Target::Duality(inst, lambda) => match m.mode {
            Mode::Oracle => duality_extract(&inst, &lambda, points, n)?,
            Mode::Closed => duality_reduce(&inst, &lambda, points, n, ReductionMode::Assignment, BaseSource::Closed)?,
            Mode::Literal => duality_reduce(&inst, &lambda, points, n, ReductionMode::Literal, BaseSource::Closed)?,
        },
        Target::NeutralBoson => match (m.mode, points) {
            (Mode::Oracle, _) => neutral_trace(FockKind::BosonNeutral, OpTag::C, points, n)?,
            (_, []) => neutral_boson_qdim(n)?,
            (_, [t]) if t.is_plain() => c_one_point_half(t, n)?,
            _ => neutral_trace(FockKind::BosonNeutral, OpTag::C, points, n)?,
        },
        Target::NeutralFermion => match (m.mode, points) {
            (Mode::Oracle, _) | (_, [_, ..]) => neutral_trace(FockKind::FermionNeutral, OpTag::D, points, n)?,
            (_, []) => neutral_fermion_qdim(n)?,
        },
    };
    Ok(series)
}

fn dump(args: &DumpArgs) -> Result<Series, Failure> {
    let n: HalfInt = args.order.parse()?;
    let points = parse_points(&args.points)?;
    let one = |what: &str| -> Result<&Param, Failure> {
        match points.as_slice() {
            [t] => Ok(t),
            _ => Err(usage(format!("{what} takes exactly one point"))),
        }
    };
    Ok(match args.name.as_str() {
        "theta" => theta(one("theta")?, n)?,
        "f_bo" => f_bo(&points, n)?,
        // (t)_∞
        "pochhammer" => poch_inf(one("pochhammer")?, n)?,
        // ₁Φ₀(t; ; q) = Σ (t)_l q^l/(q)_l
        "qhyper" => {
            let t = one("qhyper")?.value(n);
            qhyper(&[t], &[], &Series::q_pow(HalfInt::ONE, n), n)?
        }
        "euler" => euler(n),
        other => return Err(usage(format!("unknown series {other:?}; expected theta, f_bo, pochhammer, qhyper or euler"))),
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Corr(a) => {
            let points = parse_points(&a.points)?;
            Ok((render(&module_series(&a.module, &points)?, a.module.format), 0))
        }
        Command::Qdim(a) => Ok((render(&module_series(&a.module, &[])?, a.module.format), 0)),
        Command::Dump(a) => Ok((render(&dump(&a)?, a.format), 0)),
        Command::Identity(a) => {
            let spec = registry()
                .into_iter()
                .find(|s| s.name == a.name)
                .ok_or_else(|| usage(format!("no check named {:?}; see `qtrace verify --list`", a.name)))?;
            let spec = match &a.order {
                Some(o) => spec.at_order(o.parse()?),
                None => spec,
            };
            let (lhs, rhs) = spec.sides()?;
            let result = run_check(&spec);
            let code = if result.status == Status::Pass { 0 } else { 1 };
            let out = match a.format {
                Format::Json => format!(
                    "{{\"name\":{},\"status\":\"{}\",\"lhs\":{},\"rhs\":{}}}\n",
                    serde_json::to_string(&spec.name).expect("string"),
                    result.status,
                    to_json_string(&lhs),
                    to_json_string(&rhs)
                ),
                other => format!(
                    "{}: {} ({})\nlhs:\n{}rhs:\n{}",
                    spec.name,
                    result.status,
                    spec.params,
                    render(&lhs, other),
                    render(&rhs, other)
                ),
            };
            Ok((out, code))
        }
        Command::Verify(a) => {
            if a.list {
                let names: Vec<String> = registry()
                    .into_iter()
                    .filter(|s| qtrace_core::verify::matches(&a.filter, &s.name))
                    .map(|s| format!("{}\t{}\t{}", s.name, s.topic, s.params))
                    .collect();
                return Ok((names.join("\n") + "\n", 0));
            }
            let results = run_suite(&a.filter);
            if results.is_empty() {
                return Err(usage(format!("no check matches {:?}", a.filter)));
            }
            let out = match a.format {
                Format::Json => report_json(&results) + "\n",
                Format::Pretty => report_table(&results),
                Format::Csv => {
                    let mut s = String::from("name,status,gating,ms,monomial,lhs,rhs\n");
                    for r in &results {
                        let (m, l, rr) = r
                            .first_discrepancy
                            .as_ref()
                            .map(|d| (d.monomial.as_str(), d.lhs.as_str(), d.rhs.as_str()))
                            .unwrap_or(("", "", ""));
                        s.push_str(&format!("{},{},{},{},{m},{l},{rr}\n", r.name, r.status, r.gating, r.ms));
                    }
                    s
                }
            };
            Ok((out, if suite_passes(&results) { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
