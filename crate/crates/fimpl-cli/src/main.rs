//! Command-line front end: evaluate operators defined in `.fimpl` files,
//! run property and equivalence checks, export value grids, and list the
//! builtin catalog.
//!
//! Exit codes: 0 on success (all requested properties hold, equivalence
//! within tolerance); 1 when a property is violated or an equivalence
//! exceeds tolerance; 2 on usage, parse or elaboration errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fimpl::dsl::{self, Bindings, Bound};
use fimpl::implication::Implication;
use fimpl::methods::{check_equivalence, MethodInstance};
use fimpl::negation::{classical_negation, quadratic_negation, Negation};
use fimpl::properties::{
    check_property, Property, PropertyContext, PropertyReport, DEFAULT_POWER_SAMPLES,
};
use fimpl::{ContinuousTNorm, Grid, Tolerance};

#[derive(Parser)]
#[command(name = "fimpl", about = "Fuzzy implication construction and verification kit", version)]
struct Cli {
    /// Grid points per axis for checks and exports.
    #[arg(long, global = true, default_value_t = 101)]
    resolution: usize,

    /// Absolute comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,

    /// Emit machine-readable JSON instead of text where supported.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a definition file and report diagnostics without evaluating.
    Check { file: PathBuf },
    /// Evaluate a binding at a point of the unit square.
    Eval { file: PathBuf, name: String, x: f64, y: f64 },
    /// Verify properties of a binding on a grid.
    Verify {
        file: PathBuf,
        name: String,
        /// Properties to check: I1 I2 I3 NP IP OP CB LF LT CP L-CP R-CP PIT NN.
        #[arg(required = true)]
        properties: Vec<String>,
        /// Negation context: a binding name from the file, or classical/quadratic.
        #[arg(long)]
        negation: Option<String>,
        /// T-norm context for PIT: minimum, product or lukasiewicz.
        #[arg(long)]
        tnorm: Option<String>,
        /// Comma-separated power samples for PIT (default 0.5,1,2,3).
        #[arg(long, value_delimiter = ',')]
        r_values: Vec<f64>,
    },
    /// Measure the worst deviation between the two routes of a method.
    Compare { file: PathBuf, name: String },
    /// Export a value grid as CSV (header x,y,value, row-major).
    Export {
        file: PathBuf,
        name: String,
        /// Output path.
        #[arg(long, short)]
        out: PathBuf,
    },
    /// List builtin operators with their verified flags.
    Catalog,
}

fn main() -> ExitCode {
    // Behave like a regular pipeline tool when the reader goes away
    // (e.g. `fimpl verify ... | head`) instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(2)
        }
    }
}

/// Usage-level failure (exit 2), carrying the message to print.
struct Failure(String);

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail(msg: impl Into<String>) -> Failure {
    Failure(msg.into())
}

fn load(file: &Path) -> Result<Bindings, Failure> {
    let source = fs::read_to_string(file)
        .map_err(|e| fail(format!("cannot read {}: {e}", file.display())))?;
    let doc = dsl::parse(&source).map_err(|diags| {
        let lines: Vec<String> =
            diags.iter().map(|d| format!("{}: {d}", file.display())).collect();
        fail(lines.join("\n"))
    })?;
    dsl::elaborate(&doc).map_err(|d| fail(format!("{}: {d}", file.display())))
}

/// Bindings that evaluate as a binary operator on the unit square.
fn as_evaluable(bindings: &Bindings, name: &str) -> Result<Implication, Failure> {
    match bindings.get(name) {
        Some(Bound::Implication(i)) => Ok(i.clone()),
        Some(Bound::Construction(c)) => Ok(c.as_implication(name)),
        Some(Bound::Method(m)) => Ok(m.direct().clone()),
        Some(other) => {
            Err(fail(format!("{name:?} is a {}, expected an evaluable operator", other.kind_name())))
        }
        None => Err(fail(format!("no binding named {name:?}"))),
    }
}

fn as_method<'a>(bindings: &'a Bindings, name: &str) -> Result<&'a MethodInstance, Failure> {
    match bindings.get(name) {
        Some(Bound::Method(m)) => Ok(m),
        Some(other) => Err(fail(format!("{name:?} is a {}, expected a method", other.kind_name()))),
        None => Err(fail(format!("no binding named {name:?}"))),
    }
}

fn grid_and_tolerance(cli_resolution: usize, cli_tolerance: f64) -> Result<(Grid, Tolerance), Failure> {
    let grid = Grid::new(cli_resolution).map_err(|e| fail(e.to_string()))?;
    let tol = Tolerance::with_eps(cli_tolerance).map_err(|e| fail(e.to_string()))?;
    Ok((grid, tol))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Check { file } => {
            let source = fs::read_to_string(&file)
                .map_err(|e| fail(format!("cannot read {}: {e}", file.display())))?;
            let doc = dsl::parse(&source).map_err(|diags| {
                let lines: Vec<String> =
                    diags.iter().map(|d| format!("{}: {d}", file.display())).collect();
                fail(lines.join("\n"))
            })?;
            println!("ok: {} declarations", doc.declarations.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { file, name, x, y } => {
            let bindings = load(&file)?;
            let op = as_evaluable(&bindings, &name)?;
            if !(0.0..=1.0).contains(&x) || !(0.0..=1.0).contains(&y) {
                return Err(fail(format!("arguments must lie in [0,1], got ({x}, {y})")));
            }
            println!("{:.16e}", op.eval(x, y));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, name, properties, negation, tnorm, r_values } => {
            let bindings = load(&file)?;
            let op = as_evaluable(&bindings, &name)?;
            let (grid, tol) = grid_and_tolerance(cli.resolution, cli.tolerance)?;
            let props: Vec<Property> = properties
                .iter()
                .map(|p| p.parse().map_err(|e: fimpl::Error| fail(e.to_string())))
                .collect::<Result<_, _>>()?;
            let negation = negation.map(|n| resolve_negation(&bindings, &n)).transpose()?;
            let tnorm = tnorm.map(|t| parse_tnorm(&t)).transpose()?;
            let r_values =
                if r_values.is_empty() { DEFAULT_POWER_SAMPLES.to_vec() } else { r_values };

            let mut reports: Vec<PropertyReport> = Vec::new();
            for p in props {
                let context = match p {
                    Property::Cp | Property::Lcp | Property::Rcp | Property::NatNeg => {
                        let n = negation
                            .clone()
                            .ok_or_else(|| fail(format!("{p} needs --negation")))?;
                        PropertyContext::Negation(n)
                    }
                    Property::Pit => {
                        let t = tnorm.ok_or_else(|| fail(format!("{p} needs --tnorm")))?;
                        PropertyContext::PowerInvariance { tnorm: t, r_values: r_values.clone() }
                    }
                    _ => PropertyContext::None,
                };
                reports
                    .push(check_property(&op, p, &grid, tol, &context).map_err(|e| fail(e.to_string()))?);
            }

            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    if r.holds() {
                        println!(
                            "{}: holds on grid (resolution {}, tolerance {:.1e})",
                            r.property, r.grid_resolution, r.tolerance
                        );
                    } else {
                        println!(
                            "{}: violated at {} grid points (resolution {}, tolerance {:.1e})",
                            r.property, r.violations, r.grid_resolution, r.tolerance
                        );
                        for w in &r.witnesses {
                            println!("  witness x={} y={}{}: {}", w.x, w.y, match w.r {
                                Some(r) => format!(" r={r}"),
                                None => String::new(),
                            }, w.detail);
                        }
                    }
                }
            }
            if reports.iter().all(PropertyReport::holds) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Compare { file, name } => {
            let bindings = load(&file)?;
            let method = as_method(&bindings, &name)?;
            let (grid, tol) = grid_and_tolerance(cli.resolution, cli.tolerance)?;
            let report = check_equivalence(method, &grid);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!(
                    "max deviation {:.3e} at ({}, {}) on a {}x{} grid",
                    report.max_deviation,
                    report.worst_point.0,
                    report.worst_point.1,
                    grid.resolution(),
                    grid.resolution()
                );
            }
            if report.max_deviation <= tol.eps_eq {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Export { file, name, out } => {
            let bindings = load(&file)?;
            let op = as_evaluable(&bindings, &name)?;
            let (grid, _) = grid_and_tolerance(cli.resolution, cli.tolerance)?;
            let mut buf = String::with_capacity(grid.resolution() * grid.resolution() * 64);
            buf.push_str("x,y,value\n");
            for &x in grid.points() {
                for &y in grid.points() {
                    buf.push_str(&format!("{:.16e},{:.16e},{:.16e}\n", x, y, op.eval(x, y)));
                }
            }
            fs::write(&out, buf).map_err(|e| fail(format!("cannot write {}: {e}", out.display())))?;
            println!("wrote {} rows to {}", grid.resolution() * grid.resolution(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog => {
            print!("{}", render_catalog());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_negation(bindings: &Bindings, name: &str) -> Result<Negation, Failure> {
    match bindings.get(name) {
        Some(Bound::Negation(n)) => Ok(n.clone()),
        Some(other) => {
            Err(fail(format!("{name:?} is a {}, expected a negation", other.kind_name())))
        }
        None => match name {
            "classical" => Ok(classical_negation()),
            "quadratic" => Ok(quadratic_negation()),
            _ => Err(fail(format!(
                "no negation named {name:?} (bind one in the file, or use classical/quadratic)"
            ))),
        },
    }
}

fn parse_tnorm(name: &str) -> Result<ContinuousTNorm, Failure> {
    match name {
        "minimum" => Ok(ContinuousTNorm::Minimum),
        "product" => Ok(ContinuousTNorm::Product),
        "lukasiewicz" => Ok(ContinuousTNorm::Lukasiewicz),
        other => Err(fail(format!("unknown t-norm {other:?} (minimum, product, lukasiewicz)"))),
    }
}

/// Stable, sorted listing of the builtin operators. Implication flags are
/// the context-free properties verified on a 101-point grid at the
/// default tolerance, not trusted annotations.
fn render_catalog() -> String {
    let grid = Grid::new(101).expect("fixed resolution");
    let tol = Tolerance::default();
    let mut out = String::new();

    out.push_str("implications:\n");
    let mut names = fimpl::implication::CATALOG_NAMES.to_vec();
    names.sort_unstable();
    for name in names {
        let i = fimpl::implication::catalog(name).expect("catalog name");
        let flags: Vec<&str> = Property::CONTEXT_FREE
            .iter()
            .filter(|&&p| {
                check_property(&i, p, &grid, tol, &PropertyContext::None)
                    .map(|r| r.holds())
                    .unwrap_or(false)
            })
            .map(|p| p.name())
            .collect();
        out.push_str(&format!("  {name}: flags=[{}]\n", flags.join(", ")));
    }

    out.push_str("negations:\n");
    for n in [classical_negation(), quadratic_negation()] {
        out.push_str(&format!("  {}: strong={}\n", n.name(), n.is_strong()));
    }

    out.push_str("tnorms:\n  lukasiewicz\n  minimum\n  product\n");
    out.push_str("tconorms:\n  yager(lambda), lambda > 0\n");

    out.push_str("aggregators:\n");
    let nc = classical_negation();
    let specimens = [
        fimpl::Aggregator::max(2).expect("arity"),
        fimpl::Aggregator::maxmin_mean(3).expect("arity"),
        fimpl::Aggregator::min(2).expect("arity"),
        fimpl::Aggregator::product(2).expect("arity"),
        fimpl::Aggregator::weighted_mean(&[0.5, 0.5]).expect("weights"),
    ];
    for f in specimens {
        let duality_grid = Grid::new(if f.arity() == 3 { 21 } else { 101 }).expect("resolution");
        let self_dual =
            fimpl::aggregation::is_self_n_dual(&f, &nc, &duality_grid, tol).self_dual;
        out.push_str(&format!(
            "  {}: unit-multipliers={:?}, zero-multipliers={:?}, diagonal-idempotent={}, self-dual-vs-classical={}\n",
            f.name(),
            f.unit_multipliers(),
            f.zero_multipliers(),
            f.idempotent_on_diagonal(),
            self_dual,
        ));
    }

    out.push_str("chain components:\n");
    out.push_str("  identity: t\n");
    out.push_str("  power(k): t^k, k > 0\n");
    out.push_str("  ramp: t on [0,0.5], 2t-0.5 on (0.5,0.75], 1 above\n");
    out.push_str("  sin2: sin^2(pi t / 2)\n");
    out.push_str("  thresholdchain(e0..en): per-interval linear rescaling\n");
    out
}
