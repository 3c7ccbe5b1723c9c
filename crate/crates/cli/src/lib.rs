//! Command-line front end: flag parsing, dispatch, and rendering.
//!
//! Exit codes: 0 success, 1 expression parse error, 2 invalid flags or ring
//! specification, 3 internal invariant violation (always a bug).

pub mod expr;
mod json;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use kappa_core::{
    delta_star, enumerate_table, kappa_table, vanishes_on_boundary, CoeffRing, Flavor, RingSpec,
    TableRow, TorsionMode, UniversalClass,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "kappa",
    version,
    about = "Exact calculus of characteristic classes: normal forms, sphere-bundle Gysin maps, and boundary-vanishing verdicts"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normalize an expression over the ring at fiber dimension d.
    Normalize(RingExprArgs),
    /// Gysin pushforward of an expression from dimension d to d+1.
    Push(RingExprArgs),
    /// Restrict an expression over the ring at d+1 down to dimension d.
    Pull(RingExprArgs),
    /// Boundary value of the universal class with the given integrand.
    Delta(RingExprArgs),
    /// Decide whether the class must vanish on the boundary of a dim-w manifold.
    Vanishes(VanishesArgs),
    /// Tabulate kappa classes with boundary values and verdicts.
    KappaTable(KappaTableArgs),
    /// Tabulate all monomial integrands up to a class-degree bound.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    #[value(name = "SO")]
    So,
    #[value(name = "O")]
    O,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoeffArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
    #[value(name = "F2")]
    F2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TorsionArg {
    #[value(name = "paper")]
    Paper,
    #[value(name = "standard")]
    Standard,
}

#[derive(Args, Debug)]
struct RingFlags {
    /// Ring flavor: SO (oriented) or O (unoriented, mod 2).
    #[arg(long, value_enum, default_value = "SO")]
    flavor: FlavorArg,
    /// Coefficient ring.
    #[arg(long, value_enum, default_value = "Z")]
    coeff: CoeffArg,
    /// Whether 2e = 0 is imposed in odd fiber dimension.
    #[arg(long, value_enum, default_value = "standard")]
    torsion: TorsionArg,
}

/// Generous ceiling that keeps degree arithmetic comfortably inside the
/// machine types.
const MAX_FIBER_DIMENSION: u32 = 100_000;

impl RingFlags {
    fn spec(&self, d: u32) -> Result<RingSpec, CmdError> {
        if d > MAX_FIBER_DIMENSION {
            return Err(CmdError::Invalid(format!(
                "fiber dimension {d} exceeds the supported maximum {MAX_FIBER_DIMENSION}"
            )));
        }
        let flavor = match self.flavor {
            FlavorArg::So => Flavor::Oriented,
            FlavorArg::O => Flavor::Unoriented,
        };
        let coeff = match self.coeff {
            CoeffArg::Z => CoeffRing::Integers,
            CoeffArg::Q => CoeffRing::Rationals,
            CoeffArg::F2 => CoeffRing::FieldOfTwo,
        };
        let torsion = match self.torsion {
            TorsionArg::Paper => TorsionMode::StrictPaper,
            TorsionArg::Standard => TorsionMode::Standard,
        };
        Ok(RingSpec::new(d, flavor, coeff, torsion)?)
    }
}

#[derive(Args, Debug)]
struct RingExprArgs {
    /// Fiber dimension d.
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    ring: RingFlags,
    /// Input expression, e.g. "p1^2*e" or "3*p2 + e^3".
    #[arg(long)]
    expr: String,
    /// Render the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VanishesArgs {
    /// Dimension of the bounding manifold W.
    #[arg(long = "dim-w")]
    dim_w: u32,
    /// Fiber dimension d; must equal dim-w - 1 when given.
    #[arg(long)]
    d: Option<u32>,
    #[command(flatten)]
    ring: RingFlags,
    /// Input expression over the ring at d = dim-w - 1.
    #[arg(long)]
    expr: String,
    /// Render the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct KappaTableArgs {
    /// Largest kappa index to tabulate.
    #[arg(long = "max-i")]
    max_i: u32,
    /// Render the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Fiber dimension d.
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    ring: RingFlags,
    /// Largest class degree (deg X - d) to include; may be negative.
    #[arg(long = "max-degree", allow_hyphen_values = true)]
    max_degree: i64,
    /// Render the result as JSON.
    #[arg(long)]
    json: bool,
}

enum CmdError {
    Expr(expr::ParseError),
    Invalid(String),
}

impl From<expr::ParseError> for CmdError {
    fn from(e: expr::ParseError) -> CmdError {
        CmdError::Expr(e)
    }
}

impl From<kappa_core::Error> for CmdError {
    fn from(e: kappa_core::Error) -> CmdError {
        CmdError::Invalid(e.to_string())
    }
}

/// Runs one invocation. `args` excludes the program name; results go to
/// `stdout`, diagnostics to `stderr`; the return value is the exit code.
pub fn run_command(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut argv: Vec<String> = vec!["kappa".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };

    match catch_unwind(AssertUnwindSafe(|| execute(&cli.command))) {
        Ok(Ok(output)) => {
            let _ = stdout.write_all(output.as_bytes());
            EXIT_OK
        }
        Ok(Err(CmdError::Expr(e))) => {
            let _ = writeln!(stderr, "parse error {e}");
            EXIT_PARSE
        }
        Ok(Err(CmdError::Invalid(message))) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INVALID
        }
        Err(_) => {
            let _ = writeln!(stderr, "internal error: invariant violation");
            EXIT_INTERNAL
        }
    }
}

fn execute(cmd: &Cmd) -> Result<String, CmdError> {
    match cmd {
        Cmd::Normalize(a) => {
            let ring = a.ring.spec(a.d)?;
            let x = expr::parse_expr(&ring, &a.expr)?;
            Ok(if a.json {
                json::class(&x)
            } else {
                format!("{x}\n")
            })
        }
        Cmd::Push(a) => {
            let ring = a.ring.spec(a.d)?;
            let x = expr::parse_expr(&ring, &a.expr)?;
            let y = kappa_core::gysin::pushforward(&x);
            Ok(if a.json {
                json::class(&y)
            } else {
                format!("{y}\n")
            })
        }
        Cmd::Pull(a) => {
            let base_dimension = a
                .d
                .checked_add(1)
                .ok_or_else(|| CmdError::Invalid("fiber dimension overflow".to_string()))?;
            let base = a.ring.spec(base_dimension)?;
            let y = expr::parse_expr(&base, &a.expr)?;
            let x = kappa_core::gysin::pullback(&y)?;
            Ok(if a.json {
                json::class(&x)
            } else {
                format!("{x}\n")
            })
        }
        Cmd::Delta(a) => {
            let ring = a.ring.spec(a.d)?;
            let x = expr::parse_expr(&ring, &a.expr)?;
            let class = UniversalClass::new(&x)?;
            let value = delta_star(&class);
            Ok(if a.json {
                json::primitive(&value)
            } else {
                format!("{value}\n")
            })
        }
        Cmd::Vanishes(a) => {
            let d = a
                .dim_w
                .checked_sub(1)
                .ok_or_else(|| CmdError::Invalid("dim-w must be at least 1".to_string()))?;
            if let Some(given) = a.d {
                if given != d {
                    return Err(CmdError::Invalid(format!(
                        "--d {given} contradicts --dim-w {}; expected d = {d}",
                        a.dim_w
                    )));
                }
            }
            let ring = a.ring.spec(d)?;
            let x = expr::parse_expr(&ring, &a.expr)?;
            let verdict = vanishes_on_boundary(a.dim_w, &x)?;
            Ok(if a.json {
                json::verdict(&verdict)
            } else {
                format!("{verdict}\n")
            })
        }
        Cmd::KappaTable(a) => {
            let rows = kappa_table(a.max_i)?;
            Ok(if a.json {
                json::kappa_table(&rows)
            } else {
                kappa_rows_text(&rows)
            })
        }
        Cmd::Table(a) => {
            let ring = a.ring.spec(a.d)?;
            let rows = enumerate_table(&ring, a.max_degree);
            Ok(if a.json {
                json::table(&rows)
            } else {
                rows_text(&rows)
            })
        }
    }
}

fn degree_cell(row: &TableRow) -> String {
    if row.is_degenerate() {
        format!("{} (degenerate)", row.class_degree)
    } else {
        row.class_degree.to_string()
    }
}

fn rows_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&format!(
            "X = {} | degree {} | delta = {} | {}\n",
            row.monomial,
            degree_cell(row),
            row.delta_value,
            row.verdict
        ));
    }
    out
}

fn kappa_rows_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for (idx, row) in rows.iter().enumerate() {
        out.push_str(&format!(
            "kappa_{} | degree {} | X = {} | delta = {} | {}\n",
            idx + 1,
            row.class_degree,
            row.monomial,
            row.delta_value,
            row.verdict
        ));
    }
    out
}
