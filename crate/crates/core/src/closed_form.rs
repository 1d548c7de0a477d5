//! Elementary closed forms used as independent oracles for the series code:
//! the λ = 1, μ = 5/2 first normalization in terms of sin/cos of 2√z, and
//! the Bessel function J_v as a scaled W_{1,v+1}.

use num_complex::Complex64;

use crate::error::{Result, WrightError};
use crate::gamma::reciprocal_gamma;
use crate::params::{FunctionKind, WrightParams};
use crate::series::CoefficientStream;

/// Below this modulus the closed forms switch to their Taylor heads.
pub const NEAR_ZERO: f64 = 1e-4;

/// Truncation tolerance used by [`bessel_identity_check`] for both sides.
pub const BESSEL_TOL: f64 = 1e-16;

/// S(z) = sin(2√z)/(2√z) − cos(2√z), principal branch. S is even in √z, so
/// the branch does not matter.
fn sinc_minus_cos(z: Complex64) -> Complex64 {
    if z.norm() < NEAR_ZERO {
        // S(z) = Σ_{k≥1} (−1)^{k+1} 2k (4z)^k / (2k+1)!
        let w = 4.0 * z;
        let mut term = Complex64::new(1.0, 0.0);
        let mut fact = 1.0; // (2k+1)!
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=6u32 {
            term *= w;
            fact *= (2 * k) as f64 * (2 * k + 1) as f64;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            acc += term * (sign * 2.0 * k as f64 / fact);
        }
        return acc;
    }
    let u = 2.0 * z.sqrt();
    u.sin() / u - u.cos()
}

/// 𝒲_{1,5/2}(−z) in closed form: −(3/4)·(sin(2√z)/(2√z) − cos(2√z)).
///
/// The leading term is −z, matching the series −z + (2/5)z² − …; the
/// expression without the minus sign is [`remark_printed_expression`].
pub fn closed_form_remark(z: Complex64) -> Complex64 {
    -0.75 * sinc_minus_cos(z)
}

/// (3/4)·(sin(2√z)/(2√z) − cos(2√z)) exactly as commonly printed; equals
/// −𝒲_{1,5/2}(−z).
pub fn remark_printed_expression(z: Complex64) -> Complex64 {
    0.75 * sinc_minus_cos(z)
}

/// f(z) = (sin(2√z) − 2√z·cos(2√z)) / (2z√z), with f(0) = 4/3.
///
/// f(z) = (4/3)·𝒲_{1,5/2}(−z)/(−z).
pub fn remark_f(z: Complex64) -> Complex64 {
    if z.norm() < NEAR_ZERO {
        // 4/3 − 8z/15 + 8z²/105 − 16z³/2835
        return Complex64::new(4.0 / 3.0, 0.0) + z * (-8.0 / 15.0 + z * (8.0 / 105.0 - z * (16.0 / 2835.0)));
    }
    sinc_minus_cos(z) / z
}

/// g(z) = 1/f(z).
pub fn remark_g(z: Complex64) -> Complex64 {
    remark_f(z).inv()
}

/// (z/2)^v on the principal branch, with 0^0 = 1.
fn half_power(v: f64, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return match v {
            0.0 => Ok(Complex64::new(1.0, 0.0)),
            v if v > 0.0 => Ok(Complex64::new(0.0, 0.0)),
            _ => Err(WrightError::Domain {
                function: "bessel_identity_check",
                arg: v,
                reason: "(z/2)^v is singular at z = 0 for v < 0",
            }),
        };
    }
    Ok((z / 2.0).powf(v))
}

/// Both sides of J_v(z) = (z/2)^v · W_{1,v+1}(−z²/4).
///
/// The first component goes through the Wright coefficient stream; the
/// second sums Σ_m (−1)^m (z/2)^{2m+v} / (m! Γ(m+v+1)) by its own term
/// recurrence. They should agree to rounding.
pub fn bessel_identity_check(v: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(v > -1.0) {
        return Err(WrightError::Domain {
            function: "bessel_identity_check",
            arg: v,
            reason: "order must be > -1",
        });
    }
    let prefactor = half_power(v, z)?;
    let stream = CoefficientStream::new(
        FunctionKind::Raw,
        WrightParams {
            lambda: 1.0,
            mu: v + 1.0,
        },
    )?;
    let w = stream.evaluate(-z * z / 4.0, BESSEL_TOL)?;
    let via_wright = prefactor * w.value;

    let q = -z * z / 4.0;
    let mut term = prefactor * reciprocal_gamma(v + 1.0);
    let mut sum = term;
    let mut m = 0.0;
    loop {
        let ratio = 1.0 / ((m + 1.0) * (m + v + 1.0));
        term = term * q * ratio;
        sum += term;
        m += 1.0;
        // once |q|·ratio ≤ 1/2 the rest is below 2|term|
        if q.norm() * ratio <= 0.5 && term.norm() <= BESSEL_TOL * 0.5 {
            break;
        }
        if m > 10_000.0 {
            return Err(WrightError::NonConvergence {
                cap: 10_000,
                tol: BESSEL_TOL,
                tail: term.norm(),
            });
        }
    }
    Ok((via_wright, sum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn norm_first_5_2(z: Complex64) -> Complex64 {
        CoefficientStream::new(FunctionKind::NormFirst, WrightParams { lambda: 1.0, mu: 2.5 })
            .unwrap()
            .evaluate(z, 1e-16)
            .unwrap()
            .value
    }

    #[test]
    fn closed_form_matches_series() {
        for z in [c(0.5, 0.0), c(-0.25, 0.0), c(0.3, -0.8), c(0.0, 1.0)] {
            let d = (closed_form_remark(z) - norm_first_5_2(-z)).norm();
            assert!(d < 1e-14, "z={z}: {d}");
        }
    }

    #[test]
    fn printed_expression_has_opposite_sign() {
        let z = c(0.5, 0.0);
        let series = norm_first_5_2(-z);
        assert!((remark_printed_expression(z) + series).norm() < 1e-14);
        assert!((remark_printed_expression(z) - series).norm() > 0.5);
    }

    #[test]
    fn near_zero_limit() {
        assert!(closed_form_remark(c(1e-12, 0.0)).norm() < 2e-12);
        // the two branches of the Taylor cut-over agree
        for z in [c(NEAR_ZERO * 0.999, 0.0), c(0.0, NEAR_ZERO * 1.001)] {
            let u = 2.0 * z.sqrt();
            let direct = -0.75 * (u.sin() / u - u.cos());
            assert!((closed_form_remark(z) - direct).norm() < 1e-15);
        }
        assert!((remark_f(c(0.0, 0.0)) - c(4.0 / 3.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn branch_independent() {
        for z in [c(0.4, 0.7), c(-0.9, 0.1), c(-0.5, -0.5)] {
            let r = z.sqrt();
            let s = |root: Complex64| {
                let u = 2.0 * root;
                -0.75 * (u.sin() / u - u.cos())
            };
            assert!((s(r) - s(-r)).norm() < 1e-15);
            assert!((s(r) - closed_form_remark(z)).norm() < 1e-15);
        }
    }

    #[test]
    fn remark_f_is_scaled_ratio() {
        for z in [c(0.6, 0.2), c(-1.0, 0.0), c(0.0, -0.9)] {
            let ratio = norm_first_5_2(-z) / (-z);
            assert!((remark_f(z) - ratio * (4.0 / 3.0)).norm() < 1e-14);
            assert!((remark_g(z) * remark_f(z) - c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn bessel_examples() {
        let (a, b) = bessel_identity_check(0.0, c(0.0, 0.0)).unwrap();
        assert_eq!(a, c(1.0, 0.0));
        assert_eq!(b, c(1.0, 0.0));

        let j1 = 0.24226845767487388638;
        let (a, b) = bessel_identity_check(1.0, c(0.5, 0.0)).unwrap();
        assert!((a.re - j1).abs() < 1e-15 && (b.re - j1).abs() < 1e-15);

        // sqrt(2/π)·sin 1
        let jhalf = 0.67139670714180309042;
        let (a, b) = bessel_identity_check(0.5, c(1.0, 0.0)).unwrap();
        assert!((a.re - jhalf).abs() < 4e-15 && (b.re - jhalf).abs() < 4e-15);

        let want = c(-0.0063045403724317659418, 0.0070403216609378716965);
        let (a, b) = bessel_identity_check(2.5, c(0.3, 0.4)).unwrap();
        assert!((a - want).norm() < 1e-16 && (b - want).norm() < 1e-16);
    }

    #[test]
    fn printed_square_exponent_does_not_give_bessel() {
        // (z/2)^2 · W_{1,v+1}(−z²/4) only coincides with J_v when v = 2
        let z = c(0.7, 0.2);
        for v in [0.0, 0.5, 1.0, 2.5] {
            let (j, _) = bessel_identity_check(v, z).unwrap();
            let w = CoefficientStream::new(
                FunctionKind::Raw,
                WrightParams {
                    lambda: 1.0,
                    mu: v + 1.0,
                },
            )
            .unwrap()
            .evaluate(-z * z / 4.0, 1e-16)
            .unwrap()
            .value;
            let printed = (z / 2.0).powi(2) * w;
            assert!((printed - j).norm() > 1e-3, "v={v}");
        }
        let (j2, _) = bessel_identity_check(2.0, z).unwrap();
        let w2 = CoefficientStream::new(FunctionKind::Raw, WrightParams { lambda: 1.0, mu: 3.0 })
            .unwrap()
            .evaluate(-z * z / 4.0, 1e-16)
            .unwrap()
            .value;
        assert!(((z / 2.0).powi(2) * w2 - j2).norm() < 1e-16);
    }

    #[test]
    fn bessel_rejects_bad_order() {
        assert!(bessel_identity_check(-1.0, c(0.5, 0.0)).is_err());
        assert!(bessel_identity_check(-0.5, c(0.0, 0.0)).is_err());
    }
}
