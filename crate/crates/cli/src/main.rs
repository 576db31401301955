use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use padic_factor::permutability::AffineMap;
use padic_factor::{Poly, Rat};
use padic_factor_cli::commands::{
    self, CommandOutput, CommuteMode,
};

/// Exact analysis of p-adic entire and meromorphic functions given by
/// coefficient valuations: Newton polygons, zero counts, primeness
/// certificates and polynomial commutants.
#[derive(Parser)]
#[command(name = "padic-factor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton polygon plus per-radius modulus and zero counts.
    Polygon(PolygonArgs),
    /// Zero counts per radius only.
    Zeros(ZerosArgs),
    /// Run the primeness certification pipeline.
    Certify(CertifyArgs),
    /// Emit a function-spec document for a closed-form family quotient.
    Family(FamilyArgs),
    /// Commutation residuals and commutant search for a series document.
    Commute(CommuteArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Emit JSON (the default).
    #[arg(long)]
    json: bool,
    /// Flatten the per-radius table as CSV (polygon and zeros only).
    #[arg(long, conflicts_with = "json")]
    csv: bool,
}

#[derive(Args)]
struct PolygonArgs {
    /// Function-spec document(s); repeatable, reports keep input order.
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Log-radius t (rational, e.g. 5/2); repeatable.
    #[arg(long = "t", value_parser = parse_rat, allow_hyphen_values = true)]
    ts: Vec<Rat>,
    /// Highest coefficient index drawn into the polygon.
    #[arg(long, default_value_t = 30)]
    up_to: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ZerosArgs {
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long = "t", value_parser = parse_rat, allow_hyphen_values = true)]
    ts: Vec<Rat>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Verify ratio conditions up to this index.
    #[arg(long, default_value_t = 1000)]
    scan_to: usize,
    /// Inject an assumed hypothesis (echoed loudly in the report);
    /// repeatable.
    #[arg(long = "assume")]
    assume: Vec<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FamilyArgs {
    /// Exponent parameter N >= 3.
    #[arg(long)]
    n: u32,
    /// Valuation step of the numerator (0 < v_alpha < v_beta).
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    v_alpha: Rat,
    /// Valuation step of the denominator.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    v_beta: Rat,
    /// Prime context of the document.
    #[arg(long)]
    prime: u64,
    /// Optional document name.
    #[arg(long)]
    name: Option<String>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CommuteArgs {
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Affine map "a,b" to test against the series.
    #[arg(long, conflicts_with_all = ["poly", "search"], allow_hyphen_values = true)]
    affine: Option<String>,
    /// Polynomial "c0,c1,..." to test against the series.
    #[arg(long, conflicts_with = "search", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Search for commutants instead of testing a given map.
    #[arg(long)]
    search: bool,
    /// Residual truncation order (defaults to the series order).
    #[arg(long)]
    order: Option<usize>,
    /// Polynomial degree bound for the commutant search.
    #[arg(long, default_value_t = 5)]
    degree_bound: usize,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
    }
}

fn emit(out: &OutputArgs, output: CommandOutput) -> Result<()> {
    let text = if out.csv {
        match output.csv {
            Some(csv) => csv,
            None => bail!("--csv is only available for the polygon and zeros commands"),
        }
    } else {
        output.report.to_json()
    };
    write_out(out.output.as_ref(), &text)
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Polygon(args) => {
            let out = commands::run_polygon(&args.inputs, &args.ts, args.up_to, args.out.csv)?;
            emit(&args.out, out)
        }
        Command::Zeros(args) => {
            let out = commands::run_zeros(&args.inputs, &args.ts, args.out.csv)?;
            emit(&args.out, out)
        }
        Command::Certify(args) => {
            let out = commands::run_certify(&args.inputs, args.scan_to, &args.assume)?;
            emit(&args.out, out)
        }
        Command::Family(args) => {
            let doc = commands::run_family(
                args.prime,
                args.n,
                &args.v_alpha,
                &args.v_beta,
                args.name.as_deref(),
            )?;
            write_out(args.output.as_ref(), &doc)
        }
        Command::Commute(args) => {
            let mode = if args.search {
                CommuteMode::Search
            } else if let Some(spec) = &args.affine {
                let parts: Vec<&str> = spec.split(',').collect();
                if parts.len() != 2 {
                    bail!("--affine expects \"a,b\", got {spec:?}");
                }
                let a: Rat = parts[0].trim().parse()?;
                let b: Rat = parts[1].trim().parse()?;
                CommuteMode::Affine(AffineMap::new(a, b)?)
            } else if let Some(spec) = &args.poly {
                let coeffs: Vec<Rat> = spec
                    .split(',')
                    .map(|s| s.trim().parse::<Rat>().map_err(anyhow::Error::from))
                    .collect::<Result<_>>()?;
                CommuteMode::Poly(Poly::new(coeffs))
            } else {
                bail!("commute needs one of --affine, --poly or --search");
            };
            let out =
                commands::run_commute(&args.inputs, &mode, args.order, args.degree_bound)?;
            emit(&args.out, out)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
