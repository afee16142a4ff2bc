use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qverify::expr::{self, Bindings, EvalError};
use qverify::identities::{rr_product_side, rr_sum_side, RrVariant};
use qverify::oracles::{gaussian_from_box, rr_oracle_series, rr_residue_series};
use qverify::qpoly::euler_series;
use qverify::verify::{run_verify_id, VerifyError, VerifyOptions};
use qverify::{qbin, IdentityId, IntPoly, Perturbation, SweepRange, VerifyReport};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ARITHMETIC: u8 = 3;

#[derive(Parser)]
#[command(name = "qverify", version, about = "Exact checks of q-binomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Gaussian binomial [n, k].
    Qbin {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = PolyFormat::Pretty)]
        format: PolyFormat,
    },
    /// Sweep an identity (or `all`) over a parameter range.
    Verify {
        identity: String,
        #[arg(long)]
        n_max: i64,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Evaluate parameter points in parallel.
        #[arg(long)]
        parallel: bool,
        /// Shift the exponent of summand J by DELTA (mutation testing).
        #[arg(long, hide = true, allow_hyphen_values = true, value_name = "J:DELTA", value_parser = parse_perturbation)]
        perturb: Option<Perturbation>,
    },
    /// Truncated power series.
    Series {
        #[arg(value_enum)]
        which: SeriesKind,
        #[arg(long)]
        order: usize,
        /// For rr1/rr2: the sum side or the product side.
        #[arg(long, value_enum, default_value_t = Side::Sum)]
        side: Side,
        #[arg(long, value_enum, default_value_t = PolyFormat::Coeffs)]
        format: PolyFormat,
    },
    /// Evaluate an expression, e.g. "sum(j, 0, n, q^j)".
    Eval {
        expr: String,
        /// Bind a free variable: NAME=INT. Repeatable.
        #[arg(long = "bind", value_name = "NAME=INT", value_parser = parse_binding)]
        bindings: Vec<(String, i64)>,
        #[arg(long, value_enum, default_value_t = PolyFormat::Pretty)]
        format: PolyFormat,
    },
    /// Brute-force partition counts.
    Oracle {
        #[command(subcommand)]
        which: OracleKind,
    },
}

#[derive(Subcommand)]
enum OracleKind {
    /// Partitions inside a k x (n-k) box, as a polynomial.
    Box {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = PolyFormat::Pretty)]
        format: PolyFormat,
    },
    /// Partitions with difference at least 2 between parts.
    Rr1 {
        #[arg(long)]
        order: usize,
        /// Count parts congruent to 1 or 4 mod 5 instead.
        #[arg(long)]
        residues: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Coeffs)]
        format: PolyFormat,
    },
    /// As rr1, with every part at least 2.
    Rr2 {
        #[arg(long)]
        order: usize,
        /// Count parts congruent to 2 or 3 mod 5 instead.
        #[arg(long)]
        residues: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Coeffs)]
        format: PolyFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Pretty,
    Coeffs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Rr1,
    Rr2,
    Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Sum,
    Product,
}

fn parse_perturbation(s: &str) -> Result<Perturbation, String> {
    let (j, delta) = s.split_once(':').ok_or("expected J:DELTA")?;
    let j = j.parse::<i64>().map_err(|e| format!("bad summand index: {e}"))?;
    let delta = delta.parse::<u32>().map_err(|e| format!("bad shift: {e}"))?;
    Ok(Perturbation::exponent_shift(j, delta))
}

fn parse_binding(s: &str) -> Result<(String, i64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=INT")?;
    let value = value.trim().parse::<i64>().map_err(|e| format!("bad value for {name}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

fn poly_json(p: &IntPoly) -> Value {
    json!({
        "var": "q",
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn render(p: &IntPoly, format: PolyFormat) -> String {
    match format {
        PolyFormat::Pretty => p.to_string(),
        PolyFormat::Coeffs if p.is_zero() => "0".to_string(),
        PolyFormat::Coeffs => p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        PolyFormat::Json => poly_json(p).to_string(),
    }
}

// Series keep their trailing zeros in `coeffs` output so the length shows the order.
fn render_series(coeffs: &[num_bigint::BigInt], format: PolyFormat) -> String {
    match format {
        PolyFormat::Coeffs => coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        _ => render(&IntPoly::from_coeffs(coeffs.to_vec()), format),
    }
}

fn report_json(r: &VerifyReport) -> Value {
    let counterexample = match &r.first_counterexample {
        None => Value::Null,
        Some(ce) => {
            let params: serde_json::Map<String, Value> =
                ce.params.0.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            json!({ "params": params, "lhs": poly_json(&ce.lhs), "rhs": poly_json(&ce.rhs) })
        }
    };
    json!({
        "identity": r.identity.as_str(),
        "checked": r.params_checked,
        "passed": r.passed(),
        "counterexample": counterexample,
    })
}

fn report_text(r: &VerifyReport) -> String {
    match &r.first_counterexample {
        None => format!("{}: passed ({} parameter points)", r.identity, r.params_checked),
        Some(ce) => format!(
            "{}: FAILED at {} (after {} parameter points)\n  lhs = {}\n  rhs = {}",
            r.identity, ce.params, r.params_checked, ce.lhs, ce.rhs
        ),
    }
}

fn verify(
    identity: &str,
    range: SweepRange,
    format: ReportFormat,
    opts: VerifyOptions,
) -> Result<ExitCode, (u8, String)> {
    let ids = IdentityId::parse_selection(identity).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let mut reports = Vec::with_capacity(ids.len());
    for id in &ids {
        let report = run_verify_id(*id, range, &opts).map_err(|e| match e {
            VerifyError::UnknownIdentity(_) => (EXIT_USAGE, e.to_string()),
            _ => (EXIT_ARITHMETIC, e.to_string()),
        })?;
        reports.push(report);
    }
    match format {
        ReportFormat::Text => {
            for r in &reports {
                println!("{}", report_text(r));
            }
        }
        ReportFormat::Json if identity == "all" => {
            println!("{}", Value::Array(reports.iter().map(report_json).collect()));
        }
        ReportFormat::Json => println!("{}", report_json(&reports[0])),
    }
    Ok(if reports.iter().all(VerifyReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    })
}

fn eval_command(src: &str, bindings: Vec<(String, i64)>, format: PolyFormat) -> Result<ExitCode, (u8, String)> {
    let e = expr::parse(src).map_err(|err| (EXIT_USAGE, format!("parse error at {err}")))?;
    let bindings: Bindings = bindings.into_iter().collect();
    let value = expr::eval(&e, &bindings).map_err(|err| {
        let code = match err {
            EvalError::Overflow(_) | EvalError::TooLarge(_) => EXIT_ARITHMETIC,
            _ => EXIT_USAGE,
        };
        (code, err.to_string())
    })?;
    println!("{}", render(&value, format));
    Ok(ExitCode::SUCCESS)
}

fn rr_variant(first: bool) -> RrVariant {
    if first {
        RrVariant::First
    } else {
        RrVariant::Second
    }
}

fn run(cli: Cli) -> Result<ExitCode, (u8, String)> {
    match cli.command {
        Command::Qbin { n, k, format } => println!("{}", render(&qbin(n, k), format)),
        Command::Verify {
            identity,
            n_max,
            k_max,
            format,
            parallel,
            perturb,
        } => {
            let range = SweepRange { n_max, k_max };
            let opts = VerifyOptions {
                perturbation: perturb.unwrap_or_default(),
                parallel,
            };
            return verify(&identity, range, format, opts);
        }
        Command::Series {
            which,
            order,
            side,
            format,
        } => {
            let series = match (which, side) {
                (SeriesKind::Euler, _) => euler_series(order),
                (SeriesKind::Rr1, Side::Sum) => rr_sum_side(order, RrVariant::First),
                (SeriesKind::Rr2, Side::Sum) => rr_sum_side(order, RrVariant::Second),
                (SeriesKind::Rr1, Side::Product) => rr_product_side(order, RrVariant::First),
                (SeriesKind::Rr2, Side::Product) => rr_product_side(order, RrVariant::Second),
            };
            println!("{}", render_series(series.coeffs(), format));
        }
        Command::Eval { expr, bindings, format } => return eval_command(&expr, bindings, format),
        Command::Oracle { which } => match which {
            OracleKind::Box { n, k, format } => println!("{}", render(&gaussian_from_box(n, k), format)),
            OracleKind::Rr1 { order, residues, format } | OracleKind::Rr2 { order, residues, format } => {
                let variant = rr_variant(matches!(which, OracleKind::Rr1 { .. }));
                let series = if residues {
                    rr_residue_series(order, variant)
                } else {
                    rr_oracle_series(order, variant)
                };
                println!("{}", render_series(series.coeffs(), format));
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
