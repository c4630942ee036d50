//! `pascal`: build Pascal-family matrices, factor Zhang-Liu matrices,
//! compute their orders and sweep whole fields.
//!
//! Exit codes: 0 ok, 1 failed self-check or oracle disagreement, 2 parse
//! error, 3 precondition violation, 4 factorization requested with
//! `x² = 1`, 5 census over an infinite field.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pascal_core::census::{run_census, CensusOptions};
use pascal_core::io::{split_params, DecompositionDoc, MatrixDoc};
use pascal_core::{
    d_matrix, default_cap, factorize_q, p1_matrix, p2_matrix, q_matrix, q_order,
    q_order_bruteforce, selftest, verify_factorization, Error, Field, FieldElement, Matrix, Scalar,
};

#[derive(Parser)]
#[command(
    name = "pascal",
    version,
    about = "Exact Pascal and Zhang-Liu matrices over finite fields and Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    P1,
    P2,
    Q,
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Print P1(y), P2(x), Q(y,x) or D(alpha).
    Matrix {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Comma-separated parameters: `y` for p1, `x` for p2, `y,x` for q, `alpha` for d.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Factor Q(y,x) as P1(z) D(x^2) P1(-z) and verify the product.
    Factorize {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Order of Q(y,x) by the closed formula, optionally checked by brute force.
    Order {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: usize,
        /// Also search for the order by repeated multiplication.
        #[arg(long)]
        oracle: bool,
        /// Multiplication budget for the search.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Order and diagonalizability of Q(y,x) for every y and every nonzero x.
    Census {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Check every row against the brute-force and rank-based oracles.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        cap: Option<u64>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run the packaged invariant suites.
    Selftest,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_parse() => 2,
            Error::InfiniteField => 5,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_field(spec: &str) -> Result<Field, Failure> {
    spec.parse::<Field>()
        .map_err(|e| Failure::new(2, e.to_string()))
}

fn parse_element(field: &Field, text: &str) -> Result<FieldElement, Failure> {
    field
        .parse_element(text)
        .map_err(|e| Failure::new(2, e.to_string()))
}

fn render_matrix(m: &Matrix, format: Format) -> String {
    match format {
        Format::Json => {
            serde_json::to_string(&MatrixDoc::from_matrix(m)).expect("serializable") + "\n"
        }
        Format::Table | Format::Csv => format!("{m}\n"),
    }
}

fn cmd_matrix(field: &str, kind: Kind, params: &str, n: usize, format: Format) -> Outcome {
    let field = parse_field(field)?;
    let params = split_params(params)
        .iter()
        .map(|p| parse_element(&field, p))
        .collect::<Result<Vec<_>, _>>()?;
    let arity = if kind == Kind::Q { 2 } else { 1 };
    if params.len() != arity {
        return Err(Failure::new(
            2,
            format!("{kind:?} takes {arity} parameter(s), got {}", params.len()).to_lowercase(),
        ));
    }
    let m = match kind {
        Kind::P1 => p1_matrix(&params[0], n)?,
        Kind::P2 => p2_matrix(&params[0], n)?,
        Kind::Q => q_matrix(&params[0], &params[1], n)?,
        Kind::D => d_matrix(&params[0], n)?,
    };
    Ok(render_matrix(&m, format))
}

fn cmd_factorize(field: &str, y: &str, x: &str, n: usize, format: Format) -> Outcome {
    let field = parse_field(field)?;
    let y = parse_element(&field, y)?;
    let x = parse_element(&field, x)?;
    let d = match factorize_q(&y, &x, n) {
        Ok(d) => d,
        Err(Error::SingularParameter) => {
            let verdict = if y.is_zero() {
                "y = 0, so Q(y,x) is the identity and already diagonal, but z = yx/(x^2-1) is undefined"
            } else {
                "not diagonalizable: Q(y,x) is diagonalizable only when x^2 != 1 or y = 0"
            };
            return Err(Failure::new(4, format!("x^2 = 1; {verdict}")));
        }
        Err(e) => return Err(e.into()),
    };
    let verified = verify_factorization(&d);
    let out = match format {
        Format::Json => {
            serde_json::to_string(&DecompositionDoc::from_decomposition(&d)).expect("serializable")
                + "\n"
        }
        Format::Table | Format::Csv => {
            let mut s = String::new();
            writeln!(s, "z = {}", d.z).unwrap();
            writeln!(s, "P1(z) =\n{}", d.left).unwrap();
            writeln!(s, "D(x^2) =\n{}", d.middle).unwrap();
            writeln!(s, "P1(-z) =\n{}", d.right).unwrap();
            writeln!(s, "verified = {verified}").unwrap();
            s
        }
    };
    if verified {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::new(1, "factorization failed verification"))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_order(
    field: &str,
    y: &str,
    x: &str,
    n: usize,
    oracle: bool,
    cap: Option<u64>,
    format: Format,
) -> Outcome {
    let field = parse_field(field)?;
    let y = parse_element(&field, y)?;
    let x = parse_element(&field, x)?;
    let formula = q_order(&y, &x, n)?;
    let search = if oracle {
        let cap = cap.unwrap_or_else(|| default_cap::<FieldElement>(&field, n));
        Some(q_order_bruteforce(&y, &x, n, cap)?)
    } else {
        None
    };
    let out = match format {
        Format::Json => {
            let mut doc = serde_json::json!({
                "field": field.to_string(),
                "n": n,
                "y": y.to_string(),
                "x": x.to_string(),
                "formula": formula,
            });
            if let Some(s) = search {
                doc["oracle"] = serde_json::to_value(s).expect("serializable");
            }
            doc.to_string() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("field,n,y,x,order");
            if search.is_some() {
                s.push_str(",oracle");
            }
            let quote = |t: String| {
                if t.contains(',') {
                    format!("\"{t}\"")
                } else {
                    t
                }
            };
            write!(
                s,
                "\n{},{n},{},{},{formula}",
                quote(field.to_string()),
                quote(y.to_string()),
                quote(x.to_string())
            )
            .unwrap();
            if let Some(o) = search {
                write!(s, ",{o}").unwrap();
            }
            s + "\n"
        }
        Format::Table => match search {
            Some(o) => format!("formula = {formula}\noracle = {o}\n"),
            None => format!("order = {formula}\n"),
        },
    };
    match search {
        Some(o) if !o.agrees_with(formula) => {
            print!("{out}");
            Err(Failure::new(
                1,
                format!("formula ({formula}) and oracle ({o}) disagree"),
            ))
        }
        _ => Ok(out),
    }
}

fn cmd_census(
    field: &str,
    n: usize,
    format: Format,
    verify: bool,
    cap: Option<u64>,
    threads: Option<usize>,
) -> Outcome {
    let field = parse_field(field)?;
    if !field.is_finite() {
        return Err(Failure::new(
            5,
            format!("census needs a finite field, not {field}"),
        ));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::new(3, format!("cannot start worker pool: {e}")))?;
    let census = pool.install(|| run_census(&field, n, CensusOptions { verify, cap }))?;
    let out = match format {
        Format::Table => census.to_table(),
        Format::Csv => census.to_csv(),
        Format::Json => census.to_json(),
    };
    let bad: Vec<String> = census
        .mismatches()
        .map(|r| {
            let c = r.check.as_ref().expect("only verified rows can mismatch");
            format!(
                "y={} x={}: order {} vs oracle {}, diagonalizable {} vs oracle {}",
                r.y, r.x, r.order, c.oracle_order, r.diagonalizable, c.oracle_diagonalizable
            )
        })
        .collect();
    if bad.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::new(
            1,
            format!(
                "{} row(s) disagree with the oracles:\n{}",
                bad.len(),
                bad.join("\n")
            ),
        ))
    }
}

fn cmd_selftest() -> Outcome {
    let reports = selftest::run_all();
    let mut out = String::new();
    for r in &reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        writeln!(
            out,
            "{:<30} {:>7}/{:<7} {status}",
            r.name,
            r.checks - r.failed,
            r.checks
        )
        .unwrap();
        for f in &r.failures {
            writeln!(out, "    {f}").unwrap();
        }
    }
    if reports.iter().all(|r| r.passed()) {
        writeln!(out, "all suites passed").unwrap();
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::new(1, "selftest failed"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = match cli.command {
        Command::Matrix {
            field,
            kind,
            params,
            n,
            format,
        } => cmd_matrix(&field, kind, &params, n, format),
        Command::Factorize {
            field,
            y,
            x,
            n,
            format,
        } => cmd_factorize(&field, &y, &x, n, format),
        Command::Order {
            field,
            y,
            x,
            n,
            oracle,
            cap,
            format,
        } => cmd_order(&field, &y, &x, n, oracle, cap, format),
        Command::Census {
            field,
            n,
            format,
            verify,
            cap,
            threads,
        } => cmd_census(&field, n, format, verify, cap, threads),
        Command::Selftest => cmd_selftest(),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
