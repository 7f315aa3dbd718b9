//! `frieze`: generate, verify, solve, classify and render mesh friezes on
//! ADE Dynkin diagrams.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 verification
//! failure (a frieze whose residuals exceed the tolerance).

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use frieze_core::algebra::BigRational;
use frieze_core::families;
use frieze_core::quiver::BipartiteQuiver;
use frieze_core::solver::{
    self, classify, dtau_multiplicity, ClassifyOptions, PeriodicSystem, SolveOptions, TauOrder,
};
use frieze_core::{Backend, DynkinType, PeriodicFrieze, Scalar};

mod json;
mod render;

use render::OutputFormat;

#[derive(Parser)]
#[command(name = "frieze", version, about = "Mesh friezes on ADE Dynkin diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum BackendArg {
    Float,
    Exact,
}

#[derive(Args)]
struct TypeArg {
    /// Dynkin type, e.g. A3, D4, E8
    #[arg(long = "type", value_name = "TYPE")]
    dynkin: String,
}

impl TypeArg {
    fn parse(&self) -> Result<DynkinType> {
        DynkinType::parse(&self.dynkin).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a frieze from one of the closed-form families
    Generate {
        #[command(flatten)]
        dynkin: TypeArg,
        /// Period of the family (1 = constant)
        #[arg(long, default_value_t = 1)]
        period: usize,
        /// Family parameter, repeatable: --param x=3/2 (exact) or --param x=1.3 (float)
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
        backend: BackendArg,
        /// Shift the 4-periodic E8 family by one occurrence
        #[arg(long)]
        translated: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Check the mesh relations of a frieze file (JSON; - or omitted = stdin)
    Verify {
        file: Option<PathBuf>,
        /// Residual tolerance for float friezes (exact friezes must vanish identically)
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Solve the periodic mesh equations from seeded random starts
    Solve {
        #[command(flatten)]
        dynkin: TypeArg,
        #[arg(long, default_value_t = 1)]
        period: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = solver::DEFAULT_SEED)]
        seed: u64,
        /// Success threshold on the residual infinity norm
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Random-start census: how many solutions are constant, their tangent
    /// dimensions, and whether they lie on the known family
    Classify {
        #[command(flatten)]
        dynkin: TypeArg,
        #[arg(long, default_value_t = 2)]
        period: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = solver::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Multiplicities of the -1 and order-4 eigenvalue classes of the
    /// linearized translation map at the constant frieze
    Spectrum {
        #[command(flatten)]
        dynkin: TypeArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Re-render a frieze file (JSON; - or omitted = stdin)
    Render {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Generate { dynkin, period, params, backend, translated, format } => {
            cmd_generate(dynkin.parse()?, period, &params, backend, translated, format)
        }
        Command::Verify { file, tol, format } => cmd_verify(&file, tol, format),
        Command::Solve { dynkin, period, trials, seed, tol, format } => {
            cmd_solve(dynkin.parse()?, period, trials, seed, tol, format)
        }
        Command::Classify { dynkin, period, trials, seed, format } => {
            cmd_classify(dynkin.parse()?, period, trials, seed, format)
        }
        Command::Spectrum { dynkin, format } => cmd_spectrum(dynkin.parse()?, format),
        Command::Render { file, format } => cmd_render(&file, format),
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display())),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn parse_frieze_input(file: &Option<PathBuf>) -> Result<PeriodicFrieze> {
    let text = read_input(file)?;
    let value: Value = serde_json::from_str(&text).context("parsing JSON")?;
    json::frieze_from_json(&value)
}

fn parse_params(raw: &[String], backend: BackendArg) -> Result<Vec<(String, Scalar)>> {
    raw.iter()
        .map(|entry| {
            let (name, value) = entry
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter {entry:?} is not NAME=VALUE"))?;
            let scalar = match backend {
                BackendArg::Float => Scalar::float(
                    f64::from_str(value).map_err(|e| anyhow!("parameter {name}={value}: {e}"))?,
                ),
                BackendArg::Exact => Scalar::Rational(BigRational::from_str(value).map_err(
                    |e| {
                        anyhow!(
                            "parameter {name}={value}: {e} (exact parameters are integers or \
                             fractions p/q; use --backend float for decimals)"
                        )
                    },
                )?),
            };
            Ok((name.to_string(), scalar))
        })
        .collect()
}

fn cmd_generate(
    dynkin: DynkinType,
    period: usize,
    params: &[String],
    backend: BackendArg,
    translated: bool,
    format: OutputFormat,
) -> Result<i32> {
    let spec = families::family_for(dynkin, period).map_err(|e| anyhow!("{e}"))?;
    let params = parse_params(params, backend)?;
    let frieze = spec.evaluate(&params, translated).map_err(|e| anyhow!("{e}"))?;
    let frieze = match backend {
        BackendArg::Float => frieze.to_float(),
        BackendArg::Exact => {
            if frieze.backend() != Backend::Exact {
                bail!(
                    "no exact backend for this family at {dynkin} (its entries involve \
                     quantum integers at an unsupported level); use --backend float"
                );
            }
            frieze
        }
    };
    print!("{}", render::render(&frieze, format));
    Ok(0)
}

fn cmd_verify(file: &Option<PathBuf>, tol: f64, format: OutputFormat) -> Result<i32> {
    let frieze = parse_frieze_input(file)?;
    let report = frieze.mesh_residuals();
    let pass = frieze.is_frieze(tol);
    let exact = frieze.backend() == Backend::Exact;
    match format {
        OutputFormat::Json => {
            let worst = report.worst().map(|r| {
                json!({
                    "vertex": frieze.quiver().label(r.vertex),
                    "occurrence": r.occurrence,
                    "residual": r.value.to_f64(),
                })
            });
            let out = json!({
                "type": frieze.quiver().dynkin().to_string(),
                "period": frieze.period(),
                "backend": json::backend_name(&frieze),
                "tolerance": tol,
                "exactZero": exact && report.all_exactly_zero(),
                "maxAbsResidual": report.max_abs(),
                "worst": worst,
                "pass": pass,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => {
            println!(
                "{} frieze, period {}, backend {}",
                frieze.quiver().dynkin(),
                frieze.period(),
                json::backend_name(&frieze)
            );
            if exact {
                println!(
                    "residuals: {}",
                    if report.all_exactly_zero() {
                        "all exactly zero".to_string()
                    } else {
                        format!("max |r| = {:.3e} (exact backend, nonzero)", report.max_abs())
                    }
                );
            } else {
                println!("residuals: max |r| = {:.3e} (tolerance {tol:.3e})", report.max_abs());
            }
            println!("{}", if pass { "PASS" } else { "FAIL" });
        }
    }
    Ok(if pass { 0 } else { 2 })
}

fn cmd_solve(
    dynkin: DynkinType,
    period: usize,
    trials: usize,
    seed: u64,
    tol: f64,
    format: OutputFormat,
) -> Result<i32> {
    let quiver = BipartiteQuiver::new(dynkin);
    let sys = PeriodicSystem::new(quiver, period);
    let opts = SolveOptions { residual_tol: tol, ..SolveOptions::default() };
    let mut rng = solver::seeded_rng(seed);
    let mut rows = Vec::new();
    let mut converged = 0usize;
    for trial in 0..trials {
        let start = solver::random_start(&sys, &mut rng);
        let out = solver::solve(&sys, &start, &opts);
        let tangent = if out.converged {
            converged += 1;
            solver::tangent_dimension(&sys, &out.log_values).ok()
        } else {
            None
        };
        let constant = out.converged
            && sys
                .frieze_from_log(&out.log_values)
                .map(|f| f.slice_deviation() < 1e-7)
                .unwrap_or(false);
        rows.push((trial, out, tangent, constant));
    }
    match format {
        OutputFormat::Json => {
            let out = json!({
                "type": dynkin.to_string(),
                "period": period,
                "trials": trials,
                "seed": seed,
                "tolerance": tol,
                "converged": converged,
                "results": rows.iter().map(|(trial, out, tangent, constant)| json!({
                    "trial": trial,
                    "converged": out.converged,
                    "residualInf": out.residual_inf,
                    "iterations": out.iterations,
                    "tangentDimension": tangent.as_ref().map(|t| t.dimension),
                    "tangentAmbiguous": tangent.as_ref().map(|t| t.ambiguous),
                    "constant": constant,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => {
            println!("{dynkin} period {period}: {converged}/{trials} converged (seed {seed})");
            println!("trial  converged  residual    iters  tangent  constant");
            for (trial, out, tangent, constant) in &rows {
                println!(
                    "{trial:>5}  {:>9}  {:<10.3e}  {:>5}  {:>7}  {constant}",
                    out.converged,
                    out.residual_inf,
                    out.iterations,
                    tangent.as_ref().map_or("-".to_string(), |t| t.dimension.to_string()),
                );
            }
        }
    }
    Ok(0)
}

fn cmd_classify(
    dynkin: DynkinType,
    period: usize,
    trials: usize,
    seed: u64,
    format: OutputFormat,
) -> Result<i32> {
    let opts = ClassifyOptions { trials, seed, ..ClassifyOptions::default() };
    let report = classify(dynkin, period, &opts);
    match format {
        OutputFormat::Json => {
            let hist: Value = report
                .tangent_histogram
                .iter()
                .map(|(dim, count)| (dim.to_string(), json!(count)))
                .collect::<serde_json::Map<_, _>>()
                .into();
            let out = json!({
                "type": dynkin.to_string(),
                "period": period,
                "trials": report.trials,
                "seed": seed,
                "converged": report.converged,
                "constantCount": report.constant_count,
                "fractionConstant": report.fraction_constant(),
                "tangentHistogram": hist,
                "ambiguousCount": report.ambiguous_count,
                "familyParams": report.family_params,
                "familyFitted": report.family_fitted,
                "familyMaxDev": report.family_max_dev,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => {
            println!("{dynkin} period {period}, {trials} trials (seed {seed})");
            println!("converged: {}/{}", report.converged, report.trials);
            println!(
                "constant solutions: {} ({:.1}% of successes)",
                report.constant_count,
                100.0 * report.fraction_constant()
            );
            let hist: Vec<String> = report
                .tangent_histogram
                .iter()
                .map(|(dim, count)| format!("dim {dim}: {count}"))
                .collect();
            println!("tangent dimensions: {}", hist.join(", "));
            println!("threshold-gap ambiguities: {}", report.ambiguous_count);
            match report.family_params {
                None => println!("family fit: no family known for this period"),
                Some(k) => println!(
                    "family fit ({k} parameter{}): {}/{} on family, max deviation {}",
                    if k == 1 { "" } else { "s" },
                    report.family_fitted,
                    report.converged,
                    report
                        .family_max_dev
                        .map_or("-".to_string(), |d| format!("{d:.3e}")),
                ),
            }
        }
    }
    Ok(0)
}

fn cmd_spectrum(dynkin: DynkinType, format: OutputFormat) -> Result<i32> {
    let quiver = BipartiteQuiver::new(dynkin);
    let minus_one =
        dtau_multiplicity(&quiver, TauOrder::MinusOne).map_err(|e| anyhow!("{e}"))?;
    let order_four =
        dtau_multiplicity(&quiver, TauOrder::OrderFour).map_err(|e| anyhow!("{e}"))?;
    match format {
        OutputFormat::Json => {
            let out = json!({
                "type": dynkin.to_string(),
                "minusOneMultiplicity": minus_one.multiplicity,
                "minusOneAmbiguous": minus_one.ambiguous,
                "orderFourMultiplicity": order_four.multiplicity,
                "orderFourAmbiguous": order_four.ambiguous,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => {
            println!("{dynkin} translation-map spectrum at the constant frieze");
            println!(
                "eigenvalue -1 multiplicity: {}{}",
                minus_one.multiplicity,
                if minus_one.ambiguous { " (ambiguous)" } else { "" }
            );
            println!(
                "order-4 (+-i) multiplicity: {}{}",
                order_four.multiplicity,
                if order_four.ambiguous { " (ambiguous)" } else { "" }
            );
        }
    }
    Ok(0)
}

fn cmd_render(file: &Option<PathBuf>, format: OutputFormat) -> Result<i32> {
    let frieze = parse_frieze_input(file)?;
    print!("{}", render::render(&frieze, format));
    Ok(0)
}
