use std::io::Write;

use num_complex::Complex64;
use serde_json::json;
use wright_core::claims::ClaimId;
use wright_core::report::{self, render};
use wright_core::sweep::run_sweep;
use wright_core::verifier::{certify_with, ScanOptions};
use wright_core::{
    figure, CertificationReport, CoefficientStream, ScanGrid, Verdict, WrightError, WrightParams, DEFAULT_TERM_CAP,
};

use crate::args::{CertifyArgs, Cli, Command, EvalArgs, FigureArgs, Format, GridArgs, Output, SweepArgs};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_IO: u8 = 4;

const EVAL_TOL: f64 = 1e-15;
const EVAL_HEADER: &str = "re_z,im_z,re_f,im_f,tail_bound";

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<WrightError> for Failure {
    fn from(e: WrightError) -> Self {
        Failure::invalid(e.to_string())
    }
}

pub type Outcome = Result<u8, Failure>;

/// Runs one command, writing its output to `out` unless `--out` is given.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Eval(a) => eval(a, out),
        Command::Certify(a) => certify(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Figure(a) => run_figure(a, out),
    }
}

fn term_cap() -> Result<usize, Failure> {
    match std::env::var("WRIGHT_TERM_CAP") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(Failure::invalid(format!(
                "WRIGHT_TERM_CAP must be a positive integer, got `{v}`"
            ))),
        },
        Err(_) => Ok(DEFAULT_TERM_CAP),
    }
}

fn scan_options() -> Result<ScanOptions, Failure> {
    Ok(ScanOptions {
        term_cap: term_cap()?,
        ..ScanOptions::default()
    })
}

fn emit(out: &mut dyn Write, output: &Output, body: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error, what: &str| Failure {
        code: EXIT_IO,
        message: format!("cannot write {what}: {e}"),
    };
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|e| io(e, &path.display().to_string())),
        None => out
            .write_all(body.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| io(e, "stdout")),
    }
}

fn eval(a: EvalArgs, out: &mut dyn Write) -> Outcome {
    if a.output.format == Format::Svg {
        return Err(Failure::invalid("eval writes csv or json"));
    }
    let params = WrightParams::new(a.lambda, a.mu)?;
    let stream = CoefficientStream::new(a.kind, params)?;
    let cap = term_cap()?;
    let points: Vec<Complex64> = match a.z {
        Some(z) => vec![z],
        None => (0..=10).map(|k| Complex64::new(k as f64 / 10.0, 0.0)).collect(),
    };
    let mut rows = Vec::with_capacity(points.len());
    for z in points {
        let (value, tail) = match a.n {
            Some(n) => {
                if !(z.norm() <= 1.0 + wright_core::series::DISC_SLACK) {
                    return Err(WrightError::OutsideDisc { modulus: z.norm() }.into());
                }
                (stream.partial_sum(n, z), stream.tail_majorant_with_cap(n, cap)?)
            }
            None => {
                let v = stream.evaluate_with_cap(z, EVAL_TOL, cap)?;
                (v.value, v.tail_bound)
            }
        };
        rows.push((z, value, tail));
    }
    let body = match a.output.format {
        Format::Json => {
            let docs: Vec<_> = rows
                .iter()
                .map(|(z, f, t)| json!({"re_z": z.re, "im_z": z.im, "re_f": f.re, "im_f": f.im, "tail_bound": t}))
                .collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("finite values serialize");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("{EVAL_HEADER}\n");
            for (z, f, t) in &rows {
                let line = [z.re, z.im, f.re, f.im, *t].map(render).join(",");
                s.push_str(&line);
                s.push('\n');
            }
            s
        }
    };
    emit(out, &a.output, &body)?;
    Ok(EXIT_OK)
}

fn scan_grid(g: &GridArgs) -> Result<ScanGrid, Failure> {
    Ok(ScanGrid::new(g.boundary_points, g.radii.clone(), true)?)
}

fn parse_claim(s: &str) -> Result<ClaimId, Failure> {
    s.parse::<ClaimId>().map_err(Failure::invalid)
}

/// 1 if any claim with a satisfied hypothesis is Violated, 0 if all of
/// them are Certified, 3 otherwise. Exploratory reports are informational.
fn exit_code(reports: &[CertificationReport]) -> u8 {
    let valid: Vec<_> = reports.iter().filter(|r| !r.exploratory).collect();
    if valid.iter().any(|r| r.verdict == Verdict::Violated) {
        EXIT_VIOLATED
    } else if !valid.is_empty() && valid.iter().all(|r| r.verdict == Verdict::Certified) {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn write_reports(out: &mut dyn Write, output: &Output, reports: &[CertificationReport]) -> Result<(), Failure> {
    let body = match output.format {
        Format::Csv => report::to_csv(reports),
        Format::Json => report::to_json(reports),
        Format::Svg => return Err(Failure::invalid("reports are written as csv or json")),
    };
    emit(out, output, &body)
}

fn certify(a: CertifyArgs, out: &mut dyn Write) -> Outcome {
    if a.output.format == Format::Svg {
        return Err(Failure::invalid("reports are written as csv or json"));
    }
    let params = WrightParams::new(a.lambda, a.mu)?;
    let grid = scan_grid(&a.grid)?;
    let opts = scan_options()?;
    let all = a.claim == "all";
    let ids: Vec<ClaimId> = if all {
        ClaimId::ALL.to_vec()
    } else {
        vec![parse_claim(&a.claim)?]
    };
    let mut reports = Vec::new();
    for id in ids {
        match certify_with(id, params, a.n, &grid, opts) {
            Ok(r) => reports.push(r),
            // with `all`, claims on a kind undefined at (lambda, mu) are skipped
            Err(e @ WrightError::InvalidParams { .. }) if all => eprintln!("wright: skipping {id}: {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    if reports.is_empty() {
        return Err(Failure::invalid("no claim is defined at these parameters"));
    }
    report::sort_reports(&mut reports);
    write_reports(out, &a.output, &reports)?;
    Ok(exit_code(&reports))
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Outcome {
    if a.output.format == Format::Svg {
        return Err(Failure::invalid("reports are written as csv or json"));
    }
    let grid = scan_grid(&a.grid)?;
    let ids = match &a.claim {
        Some(c) => vec![parse_claim(c)?],
        None => ClaimId::THEOREM_RATIOS.to_vec(),
    };
    let reports = run_sweep(&ids, &grid, scan_options()?)?;
    if reports.is_empty() {
        return Err(Failure::invalid("the sweep has no parameter points for this claim"));
    }
    write_reports(out, &a.output, &reports)?;
    Ok(exit_code(&reports))
}

fn run_figure(a: FigureArgs, out: &mut dyn Write) -> Outcome {
    if a.boundary_points < 8 {
        return Err(Failure::invalid("figure needs at least 8 boundary points"));
    }
    let samples = figure::figure_samples(a.boundary_points, EVAL_TOL)?;
    let body = match a.output.format {
        Format::Csv => figure::to_csv(&samples),
        Format::Svg => figure::to_svg(&samples),
        Format::Json => return Err(Failure::invalid("figure writes csv or svg")),
    };
    emit(out, &a.output, &body)?;
    Ok(EXIT_OK)
}
