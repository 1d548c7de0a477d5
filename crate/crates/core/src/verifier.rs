//! Disc scans that certify or refute catalog claims.
//!
//! Every quantity scanned is either harmonic (Re of an analytic ratio) or
//! subharmonic (|f|), so its extremes over a subdisc sit on the boundary
//! circle. The grid is a ladder of circles approaching |z| = 1, sampled
//! densely in angle. Minima are combined by an associative reduction over
//! (value, scan index), so parallel and serial scans pick the same argmin.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::claims::{bound_value, BoundClaim, ClaimId, Shape};
use crate::error::{Result, WrightError};
use crate::params::{FunctionKind, WrightParams};
use crate::series::{sum_ascending, CoefficientStream, SeriesPlan, DEFAULT_TERM_CAP};

/// Reduced denominators below this modulus raise the zero-suspect flag.
pub const ZERO_THRESHOLD: f64 = 1e-6;

/// Floating-point allowance added to every slack.
pub const ROUNDING_SLACK: f64 = 1e-9;

/// Side of the square lattice used by the zero screen.
pub const LATTICE_SIDE: usize = 128;

/// Starlikeness scans stop this far (relatively) inside the claimed radius.
pub const RADIUS_SHRINK: f64 = 1e-6;

/// Default truncation tolerance for full series in scans.
pub const SCAN_TOL: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub boundary_points: usize,
    pub radii: Vec<f64>,
    pub half_plane_only: bool,
}

impl Default for ScanGrid {
    fn default() -> Self {
        Self {
            boundary_points: 4096,
            radii: Self::DEFAULT_RADII.to_vec(),
            half_plane_only: true,
        }
    }
}

impl ScanGrid {
    pub const DEFAULT_RADII: [f64; 5] = [0.5, 0.9, 0.99, 0.999, 1.0];

    pub fn new(boundary_points: usize, radii: Vec<f64>, half_plane_only: bool) -> Result<Self> {
        let g = Self {
            boundary_points,
            radii,
            half_plane_only,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn with_boundary_points(boundary_points: usize) -> Result<Self> {
        Self::new(boundary_points, Self::DEFAULT_RADII.to_vec(), true)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.boundary_points;
        if n < 64 || !n.is_power_of_two() {
            return Err(WrightError::Grid(format!(
                "boundary_points must be a power of two >= 64, got {n}"
            )));
        }
        if self.radii.is_empty() {
            return Err(WrightError::Grid("radii must not be empty".into()));
        }
        if let Some(r) = self.radii.iter().find(|r| !(**r > 0.0 && **r <= 1.0)) {
            return Err(WrightError::Grid(format!("radius {r} is outside (0, 1]")));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(WrightError::Grid("radii must be strictly ascending".into()));
        }
        Ok(())
    }

    /// Angles 2πk/N in ascending order; k runs to N/2 in half-plane mode.
    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.boundary_points;
        let last = if self.half_plane_only { n / 2 } else { n - 1 };
        (0..=last).map(move |k| std::f64::consts::TAU * k as f64 / n as f64)
    }

    /// Scan points in scan order: the centre, then each radius ascending,
    /// each circle by ascending angle.
    pub fn points(&self) -> Vec<Complex64> {
        self.points_within(1.0)
    }

    fn points_within(&self, scale: f64) -> Vec<Complex64> {
        let mut pts = vec![Complex64::new(0.0, 0.0)];
        for &r in &self.radii {
            pts.extend(self.angles().map(|t| Complex64::from_polar(r * scale, t)));
        }
        pts
    }
}

/// The lattice points of the zero screen, restricted to |z| ≤ radius.
fn lattice(radius: f64) -> Vec<Complex64> {
    let step = 2.0 / (LATTICE_SIDE - 1) as f64;
    let mut pts = Vec::with_capacity(LATTICE_SIDE * LATTICE_SIDE);
    for i in 0..LATTICE_SIDE {
        for j in 0..LATTICE_SIDE {
            let z = Complex64::new(-1.0 + i as f64 * step, -1.0 + j as f64 * step) * radius;
            if z.norm() <= radius {
                pts.push(z);
            }
        }
    }
    pts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    Violated,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub claim: BoundClaim,
    pub grid: ScanGrid,
    /// min Re of the ratio; sup |f| for modulus claims; min Re(zp′/p) for
    /// radius claims.
    #[serde(with = "crate::report::float")]
    pub observed_min: f64,
    /// Signed distance to failure: observed − bound for lower bounds,
    /// bound − observed for modulus bounds, observed for radius claims.
    #[serde(with = "crate::report::float")]
    pub margin: f64,
    /// Tail and rounding allowance on the observed value.
    #[serde(with = "crate::report::float")]
    pub numeric_slack: f64,
    /// Sum of the full-series tail bounds entering the scan.
    #[serde(with = "crate::report::float")]
    pub tail_bound: f64,
    /// Heuristic lattice screen, not a proof of zero-freeness.
    pub denominator_zero_suspected: bool,
    pub argmin_z: Complex64,
    /// The hypothesis failed; the scan is an observation, never Certified.
    pub exploratory: bool,
    pub verdict: Verdict,
}

fn verdict(margin: f64, slack: f64, tails: f64, valid: bool, zero_suspect: bool) -> Verdict {
    if margin < -slack - tails {
        // the margin stays negative whatever the discarded tails do
        Verdict::Violated
    } else if valid && !zero_suspect && margin >= -slack {
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    }
}

/// Truncation and term-cap settings of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub tol: f64,
    pub term_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            tol: SCAN_TOL,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

/// One side of a ratio: the full series of a stream or its partial sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operand {
    pub stream: CoefficientStream,
    pub partial: bool,
}

impl Operand {
    pub fn full(stream: CoefficientStream) -> Self {
        Self { stream, partial: false }
    }

    pub fn partial(stream: CoefficientStream) -> Self {
        Self { stream, partial: true }
    }
}

/// A reduced polynomial with a bound on what it leaves out.
struct Poly {
    coeffs: Vec<f64>,
    tail: f64,
}

impl Poly {
    fn of(op: &Operand, n: usize, opts: ScanOptions) -> Result<Self> {
        if op.partial {
            let coeffs = (0..=n as u64).map(|m| op.stream.coefficient(m)).collect();
            Ok(Self { coeffs, tail: 0.0 })
        } else {
            let plan = SeriesPlan::new(op.stream, opts.tol, opts.term_cap)?;
            Ok(Self {
                coeffs: plan.coefficients().to_vec(),
                tail: plan.tail_bound(),
            })
        }
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        sum_ascending(&self.coeffs, z)
    }

    fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| m as f64 * c)
            .collect();
        Poly { coeffs, tail: 0.0 }
    }
}

/// Result of scanning Re(num/den) over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioScan {
    pub observed_min: f64,
    pub argmin_z: Complex64,
    pub zero_suspected: bool,
    pub min_denominator: f64,
    pub max_abs_ratio: f64,
    pub tail_num: f64,
    pub tail_den: f64,
}

impl RatioScan {
    /// Bound on |true ratio − computed ratio| at any scanned point, plus
    /// rounding. Infinite when the tails could reach a denominator zero.
    pub fn numeric_slack(&self, scale: f64) -> f64 {
        let floor = self.min_denominator - self.tail_den;
        if !(floor > 0.0) {
            return f64::INFINITY;
        }
        scale.abs() * (self.tail_num + self.max_abs_ratio.max(1.0) * self.tail_den) / floor + ROUNDING_SLACK
    }
}

#[derive(Clone, Copy)]
struct MinAcc {
    value: f64,
    index: usize,
    min_den: f64,
    max_abs: f64,
}

impl MinAcc {
    const EMPTY: MinAcc = MinAcc {
        value: f64::INFINITY,
        index: usize::MAX,
        min_den: f64::INFINITY,
        max_abs: 0.0,
    };

    fn combine(a: MinAcc, b: MinAcc) -> MinAcc {
        // NaN samples are never preferred; ties go to the lower scan index
        let a_first = match (a.value.is_nan(), b.value.is_nan()) {
            (false, true) => true,
            (true, false) => false,
            _ => a.value < b.value || (a.value == b.value && a.index <= b.index),
        };
        let (v, i) = if a_first {
            (a.value, a.index)
        } else {
            (b.value, b.index)
        };
        MinAcc {
            value: v,
            index: i,
            min_den: a.min_den.min(b.min_den),
            max_abs: a.max_abs.max(b.max_abs),
        }
    }
}

/// Scans `f` over `pts`; `f` returns (value to minimize, |denominator|,
/// |ratio|).
fn scan_min<F>(pts: &[Complex64], f: F) -> MinAcc
where
    F: Fn(Complex64) -> (f64, f64, f64) + Sync,
{
    pts.par_iter()
        .enumerate()
        .map(|(i, &z)| {
            let (value, den, abs) = f(z);
            MinAcc {
                value,
                index: i,
                min_den: den,
                max_abs: abs,
            }
        })
        .reduce(|| MinAcc::EMPTY, MinAcc::combine)
}

fn min_modulus(pts: &[Complex64], f: impl Fn(Complex64) -> Complex64 + Sync) -> f64 {
    pts.par_iter().map(|&z| f(z).norm()).reduce(|| f64::INFINITY, f64::min)
}

/// min over the grid of Re(num(z)/den(z)) on reduced series, so the ratio
/// is 1 at z = 0. The zero-suspect flag combines the grid minimum of
/// |den| with a lattice screen.
pub fn min_re_ratio(num: Operand, den: Operand, n: usize, grid: &ScanGrid, tol: f64) -> Result<RatioScan> {
    let opts = ScanOptions {
        tol,
        ..ScanOptions::default()
    };
    scan_ratio(num, den, n, grid, 1.0, false, opts)
}

fn scan_ratio(
    num: Operand,
    den: Operand,
    n: usize,
    grid: &ScanGrid,
    scale: f64,
    reflect: bool,
    opts: ScanOptions,
) -> Result<RatioScan> {
    grid.validate()?;
    let p = Poly::of(&num, n, opts)?;
    let q = Poly::of(&den, n, opts)?;
    let sigma = if reflect { -1.0 } else { 1.0 };
    let pts = grid.points();
    let acc = scan_min(&pts, |z| {
        let w = z * sigma;
        let d = q.eval(w);
        let r = p.eval(w) / d;
        ((r * scale).re, d.norm(), r.norm())
    });
    let lattice_min = min_modulus(&lattice(1.0), |z| q.eval(z));
    let min_den = acc.min_den.min(lattice_min);
    Ok(RatioScan {
        observed_min: acc.value,
        argmin_z: pts[acc.index],
        zero_suspected: min_den < ZERO_THRESHOLD,
        min_denominator: acc.min_den,
        max_abs_ratio: acc.max_abs,
        tail_num: p.tail,
        tail_den: q.tail,
    })
}

/// Heuristic screen for zeros of the reduced partial sum through `n`:
/// true when its modulus drops below [`ZERO_THRESHOLD`] on the grid or the
/// 128×128 lattice of the closed disc. The reduced sum drops the leading z
/// of value kinds, whose zero at the centre is harmless for ratios.
pub fn denominator_zero_scan(stream: &CoefficientStream, n: usize, grid: &ScanGrid) -> bool {
    let q = Poly {
        coeffs: (0..=n as u64).map(|m| stream.coefficient(m)).collect(),
        tail: 0.0,
    };
    let mut pts = grid.points();
    pts.extend(lattice(1.0));
    min_modulus(&pts, |z| q.eval(z)) < ZERO_THRESHOLD
}

/// Instantiates a claim and scans it with default options.
pub fn certify(id: ClaimId, params: WrightParams, n: usize, grid: &ScanGrid) -> Result<CertificationReport> {
    certify_with(id, params, n, grid, ScanOptions::default())
}

pub fn certify_with(
    id: ClaimId,
    params: WrightParams,
    n: usize,
    grid: &ScanGrid,
    opts: ScanOptions,
) -> Result<CertificationReport> {
    grid.validate()?;
    let claim = bound_value(id, params, n);
    match id.shape() {
        Shape::Modulus { kind } => certify_modulus(claim, kind, grid, opts),
        Shape::Ratio {
            kind,
            inverse,
            scale,
            reflect,
        } => {
            let stream = CoefficientStream::new(kind, params)?;
            let (num, den) = if inverse {
                (Operand::partial(stream), Operand::full(stream))
            } else {
                (Operand::full(stream), Operand::partial(stream))
            };
            let scan = scan_ratio(num, den, n, grid, scale, reflect, opts)?;
            let slack = scan.numeric_slack(scale);
            let tails = scale.abs() * (scan.tail_num + scan.tail_den);
            let margin = scan.observed_min - claim.bound;
            Ok(CertificationReport {
                claim,
                grid: grid.clone(),
                observed_min: scan.observed_min,
                margin,
                numeric_slack: slack,
                tail_bound: tails,
                denominator_zero_suspected: scan.zero_suspected,
                argmin_z: scan.argmin_z,
                exploratory: !claim.valid,
                verdict: verdict(margin, slack, tails, claim.valid, scan.zero_suspected),
            })
        }
        Shape::Radius { .. } => radius_report(claim, claim.bound, grid),
    }
}

fn certify_modulus(
    claim: BoundClaim,
    kind: FunctionKind,
    grid: &ScanGrid,
    opts: ScanOptions,
) -> Result<CertificationReport> {
    let stream = CoefficientStream::new(kind, claim.params)?;
    let plan = SeriesPlan::new(stream, opts.tol, opts.term_cap)?;
    let pts = grid.points();
    // maximize |f| by minimizing −|f|
    let acc = scan_min(&pts, |z| (-plan.evaluate(z).value.norm(), 1.0, 0.0));
    let observed = -acc.value;
    let tail = plan.tail_bound();
    let slack = tail + ROUNDING_SLACK;
    let margin = claim.bound - observed;
    Ok(CertificationReport {
        claim,
        grid: grid.clone(),
        observed_min: observed,
        margin,
        numeric_slack: slack,
        tail_bound: tail,
        denominator_zero_suspected: false,
        argmin_z: pts[acc.index],
        exploratory: !claim.valid,
        verdict: verdict(margin, slack, tail, claim.valid, false),
    })
}

fn radius_claim_id(kind: FunctionKind) -> Result<ClaimId> {
    match kind {
        FunctionKind::NormFirst => Ok(ClaimId::StarRadiusFirst),
        FunctionKind::NormSecond => Ok(ClaimId::StarRadiusSecond),
        _ => Err(WrightError::Unsupported(
            "starlikeness is checked for the norm-first and norm-second partial sums",
        )),
    }
}

/// Scans min Re(z p′(z)/p(z)) over |z| ≤ radius·(1 − 1e−6) for the partial
/// sum p through `n`. Certified iff the minimum is positive, the radius
/// lies within the catalog radius and the catalog hypothesis holds.
pub fn starlikeness_check(
    kind: FunctionKind,
    params: WrightParams,
    n: usize,
    radius: f64,
    grid: &ScanGrid,
) -> Result<CertificationReport> {
    grid.validate()?;
    let catalog = bound_value(radius_claim_id(kind)?, params, n);
    let claim = BoundClaim {
        bound: radius,
        valid: catalog.valid && radius > 0.0 && radius <= catalog.bound,
        ..catalog
    };
    radius_report(claim, radius, grid)
}

fn radius_report(claim: BoundClaim, radius: f64, grid: &ScanGrid) -> Result<CertificationReport> {
    let stream = CoefficientStream::new(claim.id.shape().kind(), claim.params)?;
    let q = Poly {
        coeffs: (0..=claim.n as u64).map(|m| stream.coefficient(m)).collect(),
        tail: 0.0,
    };
    let dq = q.derivative();
    // a non-positive radius leaves only the centre to look at
    let r = if radius.is_finite() {
        radius.clamp(0.0, 1.0)
    } else {
        0.0
    };
    let scale = r * (1.0 - RADIUS_SHRINK);
    let pts = if scale > 0.0 {
        grid.points_within(scale)
    } else {
        vec![Complex64::new(0.0, 0.0)]
    };
    // p = z·q, so z p′/p = 1 + z q′/q
    let acc = scan_min(&pts, |z| {
        let d = q.eval(z);
        let w = Complex64::new(1.0, 0.0) + z * dq.eval(z) / d;
        (w.re, d.norm(), w.norm())
    });
    let lattice_min = min_modulus(&lattice(scale), |z| q.eval(z));
    let zero_suspect = acc.min_den.min(lattice_min) < ZERO_THRESHOLD;
    let margin = acc.value;
    Ok(CertificationReport {
        claim,
        grid: grid.clone(),
        observed_min: acc.value,
        margin,
        numeric_slack: ROUNDING_SLACK,
        tail_bound: 0.0,
        denominator_zero_suspected: zero_suspect,
        argmin_z: pts[acc.index],
        exploratory: !claim.valid,
        // strictly positive minimum required
        verdict: if (-ROUNDING_SLACK..=0.0).contains(&margin) {
            Verdict::Inconclusive
        } else {
            verdict(margin, ROUNDING_SLACK, 0.0, claim.valid, zero_suspect)
        },
    })
}

/// Re f′ > 0 on the disc for a derivative kind: the n = 0 ratio claim
/// (denominator (f)′_0 = 1) must certify and its minimum must stay
/// positive after slack.
pub fn univalence_condition_check(
    kind: FunctionKind,
    params: WrightParams,
    grid: &ScanGrid,
) -> Result<CertificationReport> {
    let id = match kind {
        FunctionKind::NormFirstDeriv => ClaimId::T22Ratio,
        FunctionKind::NormSecondDeriv => ClaimId::T32Ratio,
        _ => {
            return Err(WrightError::Unsupported(
                "univalence is checked on norm-first-deriv or norm-second-deriv",
            ))
        }
    };
    let mut report = certify(id, params, 0, grid)?;
    if report.verdict == Verdict::Certified && report.observed_min - report.numeric_slack <= 0.0 {
        report.verdict = Verdict::Inconclusive;
    }
    Ok(report)
}

/// Observed infima of the λ = 1, μ = 5/2, n = 0 ratio pair, both for the
/// printed f = (4/3)·𝒲(−z)/(−z), g = 1/f and for the plain ratios 𝒲/z,
/// z/𝒲, each compared with 2/3 and 1/2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemarkAdjudication {
    pub rows: Vec<AdjudicationRow>,
    pub theorem_ratio: CertificationReport,
    pub theorem_inverse: CertificationReport,
    pub remark_ratio: CertificationReport,
    pub remark_inverse: CertificationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjudicationRow {
    pub quantity: String,
    #[serde(with = "crate::report::float")]
    pub observed_inf: f64,
    #[serde(with = "crate::report::float")]
    pub numeric_slack: f64,
    pub at_least_two_thirds: bool,
    pub at_least_half: bool,
}

pub fn remark_adjudication(grid: &ScanGrid) -> Result<RemarkAdjudication> {
    let params = WrightParams { lambda: 1.0, mu: 2.5 };
    let theorem_ratio = certify(ClaimId::T21Ratio, params, 0, grid)?;
    let theorem_inverse = certify(ClaimId::T21Inverse, params, 0, grid)?;
    let remark_ratio = certify(ClaimId::R24Ratio, params, 0, grid)?;
    let remark_inverse = certify(ClaimId::R24Inverse, params, 0, grid)?;
    let row = |quantity: &str, r: &CertificationReport| AdjudicationRow {
        quantity: quantity.to_owned(),
        observed_inf: r.observed_min,
        numeric_slack: r.numeric_slack,
        at_least_two_thirds: r.observed_min >= 2.0 / 3.0 - r.numeric_slack,
        at_least_half: r.observed_min >= 0.5 - r.numeric_slack,
    };
    Ok(RemarkAdjudication {
        rows: vec![
            row("Re f", &remark_ratio),
            row("Re 1/f", &remark_inverse),
            row("Re W/(W)_0", &theorem_ratio),
            row("Re (W)_0/W", &theorem_inverse),
        ],
        theorem_ratio,
        theorem_inverse,
        remark_ratio,
        remark_inverse,
    })
}
