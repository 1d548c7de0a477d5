use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use wright_core::FunctionKind;

#[derive(Debug, Parser)]
#[command(
    name = "wright",
    version,
    about = "Wright-function evaluation and partial-sum bound certification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function (or a partial sum with --n) at --z, or on a
    /// radial table along [0, 1] when --z is absent.
    Eval(EvalArgs),
    /// Certify one catalog claim, or all of them, at (lambda, mu, n).
    Certify(CertifyArgs),
    /// Certify the theorem ratio claims over the built-in parameter sweep.
    Sweep(SweepArgs),
    /// Image-domain curves of f and g = 1/f for the lambda = 1, mu = 5/2 pair.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 4096)]
    pub boundary_points: usize,
    /// Comma-separated ascending radii in (0, 1].
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 0.9, 0.99, 0.999, 1.0])]
    pub radii: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: FunctionKind,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,
    /// Point in the closed unit disc, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_z)]
    pub z: Option<Complex64>,
    /// Evaluate the partial sum through index n instead of the full series.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Claim id (e.g. t21-ratio) or `all`.
    #[arg(long)]
    pub claim: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Restrict to one claim id; defaults to the ten theorem ratio claims.
    #[arg(long)]
    pub claim: Option<String>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Samples per circle.
    #[arg(long, default_value_t = 512)]
    pub boundary_points: usize,
    #[command(flatten)]
    pub output: Output,
}

fn parse_kind(s: &str) -> Result<FunctionKind, String> {
    s.parse()
}

fn parse_z(s: &str) -> Result<Complex64, String> {
    let bad = |p: &str| format!("`{p}` is not a number (expected re[,im])");
    let mut parts = s.split(',');
    let re = parts.next().unwrap_or_default().trim();
    let re: f64 = re.parse().map_err(|_| bad(re))?;
    let im = match parts.next() {
        Some(p) => p.trim().parse().map_err(|_| bad(p))?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(format!("`{s}` has more than two components"));
    }
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_forms() {
        assert_eq!(parse_z("-0.5").unwrap(), Complex64::new(-0.5, 0.0));
        assert_eq!(parse_z("0.3,-0.4").unwrap(), Complex64::new(0.3, -0.4));
        assert!(parse_z("a").is_err());
        assert!(parse_z("1,2,3").is_err());
    }

    #[test]
    fn negative_values_parse() {
        let cli = Cli::try_parse_from([
            "wright",
            "eval",
            "--kind",
            "norm-first",
            "--lambda",
            "-0.5",
            "--mu",
            "2",
            "--z",
            "-0.5,-0.1",
        ])
        .unwrap();
        match cli.command {
            Command::Eval(a) => {
                assert_eq!(a.lambda, -0.5);
                assert_eq!(a.z, Some(Complex64::new(-0.5, -0.1)));
            }
            _ => panic!(),
        }
    }
}
