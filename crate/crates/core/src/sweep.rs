//! Fixed parameter sweeps over the catalog.

use rayon::prelude::*;

use crate::claims::ClaimId;
use crate::error::Result;
use crate::params::{Family, WrightParams};
use crate::report::sort_reports;
use crate::verifier::{certify_with, CertificationReport, ScanGrid, ScanOptions};

pub const SWEEP_LAMBDAS: [f64; 5] = [-0.5, 0.0, 0.5, 1.0, 2.0];
pub const SWEEP_NS: [usize; 5] = [0, 1, 2, 5, 10];

/// μ values for first-kind claims, λ + μ values for second-kind claims.
fn ratio_values(id: ClaimId) -> &'static [f64] {
    use ClaimId::*;
    match id {
        T21Ratio | T21Inverse => &[1.6, 2.5, 4.0],
        T22Ratio | T22Inverse => &[3.5, 5.0],
        T23Ratio | T23Inverse => &[1.5, 2.5, 4.0],
        T31Ratio | T31Inverse => &[1.5, 2.5, 4.0],
        T32Ratio | T32Inverse => &[1.6, 2.5, 4.0],
        _ => &[],
    }
}

fn modulus_values(id: ClaimId) -> &'static [f64] {
    use ClaimId::*;
    match id {
        L1i | L1iii => &[0.75, 1.5, 3.0, 6.0],
        L1ii => &[1.25, 2.0, 3.0, 6.0],
        L2i | L2ii | L2iProof | L2iiProof => &[0.75, 1.5, 3.0, 6.0],
        _ => &[],
    }
}

fn params_for(id: ClaimId, lambda: f64, value: f64) -> WrightParams {
    let mu = match id.shape().kind().family() {
        Family::Second => value - lambda,
        _ => value,
    };
    WrightParams { lambda, mu }
}

/// (params, n) points of the ratio sweep for one theorem claim; empty for
/// other claims.
pub fn ratio_sweep_points(id: ClaimId) -> Vec<(WrightParams, usize)> {
    let mut out = Vec::new();
    for lambda in SWEEP_LAMBDAS {
        for &v in ratio_values(id) {
            for n in SWEEP_NS {
                out.push((params_for(id, lambda, v), n));
            }
        }
    }
    out
}

/// The 20 hypothesis-satisfying parameter points of a modulus claim.
pub fn modulus_sweep_points(id: ClaimId) -> Vec<WrightParams> {
    let mut out = Vec::new();
    for lambda in SWEEP_LAMBDAS {
        for &v in modulus_values(id) {
            out.push(params_for(id, lambda, v));
        }
    }
    out
}

/// Certifies every sweep point of the given claims; output sorted by
/// claim id, then (λ, μ, n).
pub fn run_sweep(ids: &[ClaimId], grid: &ScanGrid, opts: ScanOptions) -> Result<Vec<CertificationReport>> {
    let mut jobs = Vec::new();
    for &id in ids {
        for (p, n) in ratio_sweep_points(id) {
            jobs.push((id, p, n));
        }
        for p in modulus_sweep_points(id) {
            jobs.push((id, p, 0));
        }
    }
    let mut reports = jobs
        .par_iter()
        .map(|&(id, p, n)| certify_with(id, p, n, grid, opts))
        .collect::<Result<Vec<_>>>()?;
    sort_reports(&mut reports);
    Ok(reports)
}
