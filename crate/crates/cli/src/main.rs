//! whg: command line front end for the hypergraph spectral toolkit.
//!
//! Exit codes: 0 success, 1 a verify run found a violated verdict, 2 bad
//! input (file, format, parameters), 3 an iteration failed to converge.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use whg_core::io::{parse_str, to_json_full_precision, to_whg_string};
use whg_core::{
    bound_report, generate, known_eigenpairs, newton_eigenpair_search, power_iteration,
    BoundReport64, BoundReportOptions, Eigenpair64, Error, Family, GeneratorSpec, Hypergraph64,
    NewtonOptions, PowerIterationOptions, TensorKind, WeightScheme,
};

#[derive(Parser)]
#[command(
    name = "whg",
    version,
    about = "Spectral radii, eigenpairs and bound checks for k-uniform weighted hypergraphs",
    color = clap::ColorChoice::Never
)]
struct Cli {
    /// Emit machine readable JSON (floats carry 17 significant digits)
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized routine (generation, oracle starts)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Reserved; computations are single threaded and results never depend on it
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, degrees, weights, regularity and connectivity of a hypergraph
    Info(FileArgs),
    /// Spectral radius of the adjacency or signless Laplacian tensor
    Radius(RadiusArgs),
    /// Evaluate every eigenvalue bound and print the verdict report
    Bounds(BoundsArgs),
    /// Like bounds, but exit 1 unless every verdict holds
    Verify(BoundsArgs),
    /// Structural eigenpairs, optionally extended by the Newton oracle
    Eigenpairs(EigenpairsArgs),
    /// Construct a hypergraph from a family description and write whg-1 JSON
    Generate(GenerateArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Input hypergraph: whg-1 JSON or plain text, "-" for stdin
    file: String,
}

#[derive(Args)]
struct RadiusArgs {
    #[command(flatten)]
    input: FileArgs,
    /// Tensor to analyze
    #[arg(long, value_enum)]
    tensor: RadiusTensor,
    /// Convergence threshold on the ratio bracket width
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Iteration budget
    #[arg(long, default_value_t = 1_000_000)]
    max_iter: usize,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: FileArgs,
    /// Add Newton search eigenpairs to the checked pools
    #[arg(long)]
    oracle: bool,
    /// Newton restarts when the oracle is on
    #[arg(long, default_value_t = 500)]
    restarts: usize,
}

#[derive(Args)]
struct EigenpairsArgs {
    #[command(flatten)]
    input: FileArgs,
    /// Tensor to analyze
    #[arg(long, value_enum)]
    tensor: PairsTensor,
    /// Also run the Newton eigenpair search
    #[arg(long)]
    oracle: bool,
    /// Newton restarts when the oracle is on
    #[arg(long, default_value_t = 500)]
    restarts: usize,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family name
    #[arg(long, value_enum, required_unless_present = "spec")]
    family: Option<FamilyArg>,
    /// Edge size
    #[arg(long, required_unless_present = "spec")]
    k: Option<usize>,
    /// Vertex count (complete, random-connected)
    #[arg(long)]
    n: Option<usize>,
    /// Edge count of the chain (loose-path)
    #[arg(long)]
    length: Option<usize>,
    /// Edge count of the star (hyperstar)
    #[arg(long)]
    arms: Option<usize>,
    /// Edge count (random-connected)
    #[arg(long)]
    m: Option<usize>,
    /// One weight for every edge
    #[arg(long, conflicts_with_all = ["w_min", "w_max", "weights"])]
    weight: Option<f64>,
    /// Lower end of a random weight range
    #[arg(long, requires = "w_max")]
    w_min: Option<f64>,
    /// Upper end of a random weight range
    #[arg(long, requires = "w_min")]
    w_max: Option<f64>,
    /// Explicit comma separated weights, one per edge
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["w_min", "w_max"])]
    weights: Option<Vec<f64>>,
    /// Read the full generator spec from a JSON file instead of flags
    #[arg(long, conflicts_with_all = [
        "family", "k", "n", "length", "arms", "m", "weight", "w_min", "w_max", "weights"
    ])]
    spec: Option<String>,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RadiusTensor {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairsTensor {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    SingleEdge,
    Complete,
    LoosePath,
    Hyperstar,
    RandomConnected,
}

enum CliError {
    Core(Error),
    Io(String, std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn category(&self) -> &'static str {
        match self {
            CliError::Core(Error::Validation(_)) => "validation",
            CliError::Core(Error::InvalidFormat(_)) => "format",
            CliError::Core(Error::InconsistentParameters(_)) => "parameters",
            CliError::Core(Error::MaxIterationsExceeded { .. }) => "convergence",
            CliError::Core(_) => "compute",
            CliError::Io(..) => "io",
            CliError::Usage(_) => "usage",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::MaxIterationsExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error[{}]: {}", e.category(), e);
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if cli.threads == 0 {
        return Err(CliError::Usage("--threads must be positive".to_string()));
    }
    match &cli.command {
        Command::Info(args) => info(&cli, args),
        Command::Radius(args) => radius(&cli, args),
        Command::Bounds(args) => bounds(&cli, args, false),
        Command::Verify(args) => bounds(&cli, args, true),
        Command::Eigenpairs(args) => eigenpairs(&cli, args),
        Command::Generate(args) => generate_cmd(&cli, args),
    }
}

fn load(file: &str) -> Result<Hypergraph64, CliError> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io("<stdin>".to_string(), e))?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| CliError::Io(file.to_string(), e))?
    };
    Ok(parse_str(&text)?)
}

/// Formats with six significant digits for the table views.
fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if !(1e-4..1e6).contains(&a) {
        return format!("{v:.5e}");
    }
    let digits = (5 - a.log10().floor() as i32).clamp(0, 17) as usize;
    format!("{v:.digits$}")
}

#[derive(Serialize)]
struct InfoOut<'a> {
    n: usize,
    k: usize,
    m: usize,
    connected: bool,
    weakly_irreducible: bool,
    stats: &'a whg_core::Stats64,
    regularity: whg_core::RegularityInfo<f64>,
}

fn info(cli: &Cli, args: &FileArgs) -> Result<u8, CliError> {
    let g = load(&args.file)?;
    let stats = g.stats();
    let out = InfoOut {
        n: g.n(),
        k: g.k(),
        m: g.edges().len(),
        connected: g.is_connected(),
        weakly_irreducible: whg_core::is_weakly_irreducible(&g, TensorKind::Adjacency),
        stats: &stats,
        regularity: g.regularity(),
    };
    if cli.json {
        println!("{}", to_json_full_precision(&out));
        return Ok(0);
    }
    println!("n                 {}", out.n);
    println!("k                 {}", out.k);
    println!("m                 {}", out.m);
    println!("connected         {}", out.connected);
    println!("weakly irreducible {}", out.weakly_irreducible);
    println!("max degree        {}", stats.max_degree);
    println!("max edge weight   {}", sig6(stats.max_edge_weight));
    println!("alpha             {}", sig6(stats.alpha));
    println!("delta             {}", sig6(stats.delta));
    println!("total edge weight {}", sig6(stats.total_edge_weight));
    println!(
        "degrees           [{}]",
        stats
            .degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "vertex weights    [{}]",
        stats
            .vertex_weights
            .iter()
            .map(|&w| sig6(w))
            .collect::<Vec<_>>()
            .join(", ")
    );
    match out.regularity.r {
        Some(r) => println!("regular           true (r = {r})"),
        None => println!("regular           false"),
    }
    match out.regularity.common_weight {
        Some(w) => println!("uniform weight    true (w = {})", sig6(w)),
        None => println!("uniform weight    false"),
    }
    Ok(0)
}

#[derive(Serialize)]
struct RadiusOut {
    tensor: &'static str,
    rho: f64,
    iterations: usize,
    converged: bool,
    final_gap: f64,
    x: Vec<f64>,
}

fn radius(cli: &Cli, args: &RadiusArgs) -> Result<u8, CliError> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Usage(
            "--tol must be a positive number".to_string(),
        ));
    }
    if args.max_iter == 0 {
        return Err(CliError::Usage("--max-iter must be positive".to_string()));
    }
    let g = load(&args.input.file)?;
    let kind = match args.tensor {
        RadiusTensor::A => TensorKind::Adjacency,
        RadiusTensor::Q => TensorKind::SignlessLaplacian,
    };
    let result = power_iteration(
        &g,
        kind,
        &PowerIterationOptions {
            tolerance: args.tol,
            max_iterations: args.max_iter,
            start: None,
        },
    )?;
    let out = RadiusOut {
        tensor: kind.code(),
        rho: result.rho,
        iterations: result.iterations,
        converged: result.converged,
        final_gap: result.final_gap,
        x: result.x,
    };
    if cli.json {
        println!("{}", to_json_full_precision(&out));
    } else {
        println!("tensor     {}", out.tensor);
        println!("rho        {}", sig6(out.rho));
        println!("iterations {}", out.iterations);
        println!("converged  {}", out.converged);
        println!("final gap  {}", sig6(out.final_gap));
        println!(
            "x          [{}]",
            out.x
                .iter()
                .map(|&c| sig6(c))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(if out.converged { 0 } else { 3 })
}

fn bounds(cli: &Cli, args: &BoundsArgs, gate: bool) -> Result<u8, CliError> {
    if args.restarts == 0 {
        return Err(CliError::Usage("--restarts must be positive".to_string()));
    }
    let g = load(&args.input.file)?;
    let opts = BoundReportOptions {
        oracle: args.oracle.then(|| NewtonOptions {
            restarts: args.restarts,
            seed: cli.seed,
            ..NewtonOptions::default()
        }),
        ..BoundReportOptions::default()
    };
    let report: BoundReport64 = bound_report(&g, &opts)?;
    if cli.json {
        println!("{}", to_json_full_precision(&report));
    } else {
        print_report_table(&report);
    }
    Ok(if gate && !report.all_hold { 1 } else { 0 })
}

fn print_report_table(report: &BoundReport64) {
    println!(
        "{:<30} {:>14} {:>14} {:>14}  verdict",
        "theorem", "bound", "measured", "slack"
    );
    for e in &report.entries {
        let num = |v: Option<f64>| v.map(sig6).unwrap_or_default();
        println!(
            "{:<30} {:>14} {:>14} {:>14}  {}{}",
            e.theorem_id,
            num(e.bound),
            num(e.measured),
            num(e.slack),
            e.verdict,
            e.note
                .as_deref()
                .map(|n| format!("  ({n})"))
                .unwrap_or_default()
        );
    }
    println!("rho(A) = {}", sig6(report.rho_adjacency));
    println!("rho(Q) = {}", sig6(report.rho_signless));
    println!(
        "{}",
        if report.all_hold {
            "all verdicts hold"
        } else {
            "VIOLATED VERDICTS PRESENT"
        }
    );
}

#[derive(Serialize)]
struct PairsOut {
    tensor: &'static str,
    known: Vec<Eigenpair64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    newton: Option<Vec<Eigenpair64>>,
}

fn eigenpairs(cli: &Cli, args: &EigenpairsArgs) -> Result<u8, CliError> {
    if args.restarts == 0 {
        return Err(CliError::Usage("--restarts must be positive".to_string()));
    }
    let g = load(&args.input.file)?;
    let kind = match args.tensor {
        PairsTensor::A => TensorKind::Adjacency,
        PairsTensor::L => TensorKind::Laplacian,
        PairsTensor::Q => TensorKind::SignlessLaplacian,
    };
    let known = known_eigenpairs(&g, kind)?;
    let newton = if args.oracle {
        Some(newton_eigenpair_search(
            &g,
            kind,
            &NewtonOptions {
                restarts: args.restarts,
                seed: cli.seed,
                ..NewtonOptions::default()
            },
        )?)
    } else {
        None
    };
    let out = PairsOut {
        tensor: kind.code(),
        known,
        newton,
    };
    if cli.json {
        println!("{}", to_json_full_precision(&out));
        return Ok(0);
    }
    println!("tensor {}", out.tensor);
    println!("known pairs:");
    print_pairs(&out.known);
    if let Some(pairs) = &out.newton {
        println!("newton search pairs:");
        print_pairs(pairs);
    }
    Ok(0)
}

fn print_pairs(pairs: &[Eigenpair64]) {
    println!("  {:>14} {:<5} {:>12}  x", "lambda", "class", "residual");
    for p in pairs {
        println!(
            "  {:>14} {:<5} {:>12}  [{}]",
            sig6(p.lambda),
            p.class.to_string(),
            sig6(p.residual),
            p.x.iter().map(|&c| sig6(c)).collect::<Vec<_>>().join(", ")
        );
    }
}

fn generate_cmd(cli: &Cli, args: &GenerateArgs) -> Result<u8, CliError> {
    let spec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
            serde_json::from_str::<GeneratorSpec>(&text)
                .map_err(|e| CliError::Core(Error::InvalidFormat(e.to_string())))?
        }
        None => spec_from_flags(cli, args)?,
    };
    let g: Hypergraph64 = generate(&spec)?;
    let text = to_whg_string(&g);
    match &args.out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Io(path.display().to_string(), e))?,
        None => println!("{text}"),
    }
    Ok(0)
}

fn spec_from_flags(cli: &Cli, args: &GenerateArgs) -> Result<GeneratorSpec, CliError> {
    let need = |v: Option<usize>, flag: &str, family: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --family {family}")))
    };
    let family = match args.family.expect("clap enforces --family") {
        FamilyArg::SingleEdge => Family::SingleEdge,
        FamilyArg::Complete => Family::Complete {
            n: need(args.n, "n", "complete")?,
        },
        FamilyArg::LoosePath => Family::LoosePath {
            length: need(args.length, "length", "loose-path")?,
        },
        FamilyArg::Hyperstar => Family::HyperStar {
            arms: need(args.arms, "arms", "hyperstar")?,
        },
        FamilyArg::RandomConnected => Family::RandomConnected {
            n: need(args.n, "n", "random-connected")?,
            m: need(args.m, "m", "random-connected")?,
        },
    };
    let weights = if let Some(values) = &args.weights {
        WeightScheme::List {
            values: values.clone(),
        }
    } else if let (Some(lo), Some(hi)) = (args.w_min, args.w_max) {
        WeightScheme::Range { lo, hi }
    } else {
        WeightScheme::Uniform {
            value: args.weight.unwrap_or(1.0),
        }
    };
    Ok(GeneratorSpec {
        family,
        k: args.k.expect("clap enforces --k"),
        weights,
        seed: cli.seed,
    })
}
