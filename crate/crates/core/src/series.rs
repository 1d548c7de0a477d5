//! Coefficient streams of the Wright family, certified tail majorants and
//! truncated evaluation.
//!
//! Every kind is written as `lead(z) · (head + Σ_{m≥1} c_m z^m)` where
//! `lead` is `z` for the normalized value kinds and `1` otherwise. The part
//! in parentheses is the *reduced* series; ratios of normalized functions are
//! ratios of reduced series, which keeps z = 0 free of 0/0.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, WrightError};
use crate::gamma::{gamma, ln_abs_reciprocal_gamma, ln_factorial, ln_gamma, pochhammer, reciprocal_gamma};
use crate::params::{Family, FunctionKind, WrightParams};
use crate::sum::ComplexSum;

/// Default hard cap on the number of series terms.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// Slack on |z| ≤ 1 accepted by [`CoefficientStream::evaluate`].
pub const DISC_SLACK: f64 = 1e-9;

const LN_PI: f64 = 1.144_729_885_849_400_2;
/// ln(1/0.8856031944), rounded up; 0.8856… is the minimum of Γ on (0, ∞).
const LN_INV_MIN_GAMMA: f64 = 0.121_5;

/// How a tail bound was obtained. All three are rigorous majorants of
/// Σ_{m>N} |c_m| (up to floating-point rounding of the bound itself).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailMethod {
    /// Closed-form geometric remainder from (x)_m ≥ x^m and m! ≥ 2^{m−1};
    /// only used for λ ≥ 1, where Γ(x+m) ≤ Γ(x+λm) holds.
    LemmaChain,
    /// λ ≥ 0: the term ratio is non-increasing (log-convexity of Γ), so the
    /// remainder is dominated by a geometric series from the first index
    /// whose ratio is below one.
    RatioMonotone,
    /// −1 < λ < 0: |1/Γ(y)| ≤ max(1/min Γ, Γ(1−y)/π) and Wendel's inequality
    /// Γ(x+ρ)/Γ(x) ≤ x^ρ give a monotone geometric majorant.
    Reflection,
}

/// A complex value together with a rigorous bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub terms_used: usize,
    pub method: TailMethod,
}

/// The coefficient sequence of one Wright-family function at fixed (λ, μ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientStream {
    kind: FunctionKind,
    params: WrightParams,
}

impl CoefficientStream {
    pub fn new(kind: FunctionKind, params: WrightParams) -> Result<Self> {
        kind.validate(&params)?;
        Ok(Self { kind, params })
    }

    pub fn kind(&self) -> FunctionKind {
        self.kind
    }

    pub fn params(&self) -> WrightParams {
        self.params
    }

    /// Argument offset of the gamma in the denominator: c_m ∝ 1/Γ(λm + base).
    fn base(&self) -> f64 {
        match self.kind.family() {
            Family::Raw | Family::First => self.params.mu,
            Family::Second => self.params.shifted(),
        }
    }

    /// ln of the normalizing factor Γ(base) (zero for the raw function).
    fn ln_norm(&self) -> f64 {
        match self.kind.family() {
            Family::Raw => 0.0,
            _ => ln_gamma(self.base()),
        }
    }

    fn ln_weight(&self, m: u64) -> f64 {
        match self.kind {
            FunctionKind::Raw | FunctionKind::NormFirst | FunctionKind::NormSecondDeriv => -ln_factorial(m),
            FunctionKind::NormFirstDeriv => ((m + 1) as f64).ln() - ln_factorial(m),
            FunctionKind::NormSecond | FunctionKind::AlexanderFirst => -ln_factorial(m + 1),
        }
    }

    fn weight(&self, m: u64) -> f64 {
        use crate::gamma::factorial;
        match self.kind {
            FunctionKind::Raw | FunctionKind::NormFirst | FunctionKind::NormSecondDeriv => 1.0 / factorial(m),
            FunctionKind::NormFirstDeriv => (m + 1) as f64 / factorial(m),
            FunctionKind::NormSecond | FunctionKind::AlexanderFirst => 1.0 / factorial(m + 1),
        }
    }

    /// w_{m+1} / w_m for the factorial weight of this kind.
    fn weight_ratio(&self, m: u64) -> f64 {
        let m = m as f64;
        match self.kind {
            FunctionKind::Raw | FunctionKind::NormFirst | FunctionKind::NormSecondDeriv => 1.0 / (m + 1.0),
            FunctionKind::NormFirstDeriv => (m + 2.0) / ((m + 1.0) * (m + 1.0)),
            FunctionKind::NormSecond | FunctionKind::AlexanderFirst => 1.0 / (m + 2.0),
        }
    }

    /// The constant term of the reduced series: 1/Γ(μ) for the raw
    /// function, 1 for every normalized kind.
    pub fn head(&self) -> f64 {
        match self.kind {
            FunctionKind::Raw => reciprocal_gamma(self.params.mu),
            _ => 1.0,
        }
    }

    /// c_m, the coefficient of z^m in the reduced series; `coefficient(0)`
    /// is [`head`](Self::head).
    pub fn coefficient(&self, m: u64) -> f64 {
        if m == 0 {
            return self.head();
        }
        let base = self.base();
        let shift = self.params.lambda * m as f64;
        let y = shift + base;
        if self.kind != FunctionKind::Raw
            && base > 0.0
            && (0.0..=64.0).contains(&shift)
            && shift.fract() == 0.0
            && m <= 170
        {
            // integer λm: Γ(base)/Γ(base + λm) is 1/(base)_{λm}
            return self.weight(m) / pochhammer(base, shift as u64);
        }
        if y > 0.0 && y <= 140.0 && base <= 30.0 && m <= 170 {
            let norm = match self.kind.family() {
                Family::Raw => 1.0,
                _ => gamma(base),
            };
            return norm * self.weight(m) * reciprocal_gamma(y);
        }
        let (ln_rg, sign) = ln_abs_reciprocal_gamma(y);
        if sign == 0.0 {
            return 0.0;
        }
        sign * (self.ln_norm() + self.ln_weight(m) + ln_rg).exp()
    }

    /// Upper bound on Σ_{m > after_n} |c_m|, valid for every |z| ≤ 1.
    pub fn tail_majorant(&self, after_n: usize) -> Result<f64> {
        self.tail_majorant_with_cap(after_n, DEFAULT_TERM_CAP)
    }

    pub fn tail_majorant_with_cap(&self, after_n: usize, cap: usize) -> Result<f64> {
        let model = TailModel::build(self, cap)?;
        let mut cache = CoefficientCache::new(*self);
        Ok(model.tail(after_n, &mut cache))
    }

    /// The tail-bound method that applies to this stream.
    pub fn tail_method(&self) -> TailMethod {
        TailModel::method_for(self)
    }

    /// Finite sum through index `n`: lead(z)·(head + Σ_{m=1}^{n} c_m z^m).
    pub fn partial_sum(&self, n: usize, z: Complex64) -> Complex64 {
        let coeffs: Vec<f64> = (0..=n as u64).map(|m| self.coefficient(m)).collect();
        self.lead(z) * sum_ascending(&coeffs, z)
    }

    /// Evaluates the full series to absolute tolerance `abs_tol` with the
    /// default term cap.
    pub fn evaluate(&self, z: Complex64, abs_tol: f64) -> Result<TruncatedValue> {
        self.evaluate_with_cap(z, abs_tol, DEFAULT_TERM_CAP)
    }

    pub fn evaluate_with_cap(&self, z: Complex64, abs_tol: f64, cap: usize) -> Result<TruncatedValue> {
        check_disc(z)?;
        let plan = SeriesPlan::new(*self, abs_tol, cap)?;
        Ok(plan.evaluate(z))
    }

    fn lead(&self, z: Complex64) -> Complex64 {
        if self.kind.has_leading_z() {
            z
        } else {
            Complex64::new(1.0, 0.0)
        }
    }
}

pub(crate) fn check_disc(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r.is_finite() && r <= 1.0 + DISC_SLACK {
        Ok(())
    } else {
        Err(WrightError::OutsideDisc { modulus: r })
    }
}

/// Ascending compensated evaluation of Σ_m coeffs[m]·z^m.
pub(crate) fn sum_ascending(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = ComplexSum::default();
    let mut pow = Complex64::new(1.0, 0.0);
    for (m, c) in coeffs.iter().enumerate() {
        if m > 0 {
            pow *= z;
        }
        acc += pow * *c;
    }
    acc.value()
}

struct CoefficientCache {
    stream: CoefficientStream,
    abs: Vec<f64>,
}

impl CoefficientCache {
    fn new(stream: CoefficientStream) -> Self {
        Self {
            stream,
            abs: Vec::new(),
        }
    }

    fn abs(&mut self, m: usize) -> f64 {
        while self.abs.len() <= m {
            let k = self.abs.len() as u64;
            self.abs.push(self.stream.coefficient(k).abs());
        }
        self.abs[m]
    }
}

#[derive(Debug, Clone, Copy)]
enum TailModel {
    Chain {
        head: f64,
        ratio: f64,
    },
    Ratio {
        stream: CoefficientStream,
        k_star: usize,
    },
    Reflection {
        stream: CoefficientStream,
        k_star: usize,
        rho: f64,
        shift: f64,
    },
}

impl TailModel {
    /// (first-term, ratio) of the geometric chain, when it is valid.
    fn chain(stream: &CoefficientStream) -> Option<(f64, f64)> {
        let p = stream.params;
        if p.lambda < 1.0 {
            return None;
        }
        let mu = p.mu;
        let s = p.shifted();
        let (head, ratio) = match stream.kind {
            FunctionKind::Raw => return None,
            FunctionKind::NormFirst if mu > 0.5 => (1.0 / mu, 1.0 / (2.0 * mu)),
            FunctionKind::NormFirstDeriv if mu > 1.0 => (2.0 / mu, 1.0 / mu),
            FunctionKind::AlexanderFirst if mu > 0.5 => (1.0 / (2.0 * mu), 1.0 / (2.0 * mu)),
            FunctionKind::NormSecond if s > 0.5 => (1.0 / (2.0 * s), 1.0 / (2.0 * s)),
            FunctionKind::NormSecondDeriv if s > 0.5 => (1.0 / s, 1.0 / (2.0 * s)),
            _ => return None,
        };
        // near the edge of the hypothesis the chain converges too slowly to
        // be useful; the ratio bound is tighter there
        (ratio <= 0.5).then_some((head, ratio))
    }

    fn method_for(stream: &CoefficientStream) -> TailMethod {
        if Self::chain(stream).is_some() {
            TailMethod::LemmaChain
        } else if stream.params.lambda >= 0.0 {
            TailMethod::RatioMonotone
        } else {
            TailMethod::Reflection
        }
    }

    fn build(stream: &CoefficientStream, cap: usize) -> Result<Self> {
        if let Some((head, ratio)) = Self::chain(stream) {
            return Ok(TailModel::Chain { head, ratio });
        }
        let lambda = stream.params.lambda;
        let base = stream.base();
        let not_found = || WrightError::NonConvergence {
            cap,
            tol: 0.0,
            tail: f64::INFINITY,
        };
        if lambda >= 0.0 {
            // first index from which every gamma argument is positive
            let mut m0 = 1usize;
            if lambda > 0.0 && base <= 0.0 {
                m0 = ((-base / lambda).floor() as usize + 1).max(1);
                while lambda * m0 as f64 + base <= 0.0 {
                    m0 += 1;
                }
            }
            let model = |k_star| TailModel::Ratio {
                stream: *stream,
                k_star,
            };
            let probe = model(0);
            let k_star = (m0..=cap).find(|&k| probe.ratio_at(k) < 1.0).ok_or_else(not_found)?;
            Ok(model(k_star))
        } else {
            let rho = -lambda;
            let shift = (-base).max(0.0);
            let model = |k_star| TailModel::Reflection {
                stream: *stream,
                k_star,
                rho,
                shift,
            };
            let probe = model(0);
            let k_star = (1..=cap).find(|&k| probe.ratio_at(k) < 1.0).ok_or_else(not_found)?;
            Ok(model(k_star))
        }
    }

    /// Bound on the ratio of consecutive (majorant) terms from index k on;
    /// non-increasing in k.
    fn ratio_at(&self, k: usize) -> f64 {
        match *self {
            TailModel::Chain { ratio, .. } => ratio,
            TailModel::Ratio { stream, .. } => {
                let lambda = stream.params.lambda;
                let wr = stream.weight_ratio(k as u64);
                if lambda == 0.0 {
                    return wr;
                }
                let y = lambda * k as f64 + stream.base();
                wr * (ln_gamma(y) - ln_gamma(y + lambda)).exp()
            }
            TailModel::Reflection { rho, shift, .. } => {
                let k = k as f64;
                (k + 2.0) * (k + 1.0 + shift).powf(rho) / ((k + 1.0) * (k + 1.0))
            }
        }
    }

    /// Bound on Σ_{m ≥ k} |c_m| for k at or past the closing index.
    fn closing(&self, k: usize, cache: &mut CoefficientCache) -> f64 {
        let q = self.ratio_at(k);
        match *self {
            TailModel::Chain { .. } => unreachable!("chain tails are closed-form"),
            TailModel::Ratio { .. } => cache.abs(k) / (1.0 - q),
            TailModel::Reflection { stream, .. } => {
                let y = stream.params.lambda * k as f64 + stream.base();
                // |1/Γ(y)| ≤ 1/min Γ for y > 0 and ≤ Γ(1−y)/π for y ≤ 0
                let ln_g = if y > 0.0 {
                    LN_INV_MIN_GAMMA
                } else {
                    LN_INV_MIN_GAMMA.max(ln_gamma(1.0 - y) - LN_PI)
                };
                (stream.ln_norm() + stream.ln_weight(k as u64) + ln_g).exp() / (1.0 - q)
            }
        }
    }

    fn tail(&self, after_n: usize, cache: &mut CoefficientCache) -> f64 {
        match *self {
            TailModel::Chain { head, ratio } => head * ratio.powi(after_n as i32) / (1.0 - ratio),
            TailModel::Ratio { k_star, .. } | TailModel::Reflection { k_star, .. } => {
                let k = k_star.max(after_n + 1);
                let mut t = 0.0;
                // smallest terms first
                for m in (after_n + 1..k).rev() {
                    t += cache.abs(m);
                }
                t + self.closing(k, cache)
            }
        }
    }
}

/// Coefficients and truncation point of a stream at a fixed tolerance,
/// reusable across many evaluation points.
#[derive(Debug, Clone)]
pub struct SeriesPlan {
    stream: CoefficientStream,
    coeffs: Vec<f64>,
    tail_bound: f64,
    method: TailMethod,
}

impl SeriesPlan {
    pub fn new(stream: CoefficientStream, abs_tol: f64, cap: usize) -> Result<Self> {
        let model = TailModel::build(&stream, cap)?;
        let mut cache = CoefficientCache::new(stream);
        let mut n = 0usize;
        let mut tail = model.tail(0, &mut cache);
        while !(tail <= abs_tol) {
            n += 1;
            if n > cap {
                return Err(WrightError::NonConvergence {
                    cap,
                    tol: abs_tol,
                    tail,
                });
            }
            tail = model.tail(n, &mut cache);
        }
        let coeffs = (0..=n as u64).map(|m| stream.coefficient(m)).collect();
        Ok(Self {
            stream,
            coeffs,
            tail_bound: tail,
            method: TailModel::method_for(&stream),
        })
    }

    pub fn stream(&self) -> &CoefficientStream {
        &self.stream
    }

    /// Highest coefficient index kept.
    pub fn terms(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// head + Σ_{m=1}^{N} c_m z^m
    pub fn reduced(&self, z: Complex64) -> Complex64 {
        sum_ascending(&self.coeffs, z)
    }

    pub fn evaluate(&self, z: Complex64) -> TruncatedValue {
        TruncatedValue {
            value: self.stream.lead(z) * self.reduced(z),
            tail_bound: self.tail_bound,
            terms_used: self.terms(),
            method: self.method,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stream(kind: FunctionKind, lambda: f64, mu: f64) -> CoefficientStream {
        CoefficientStream::new(kind, WrightParams { lambda, mu }).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let s = stream(FunctionKind::NormFirst, 1.0, 1.0);
        assert!((s.coefficient(2) - 0.25).abs() < 1e-16);
        let a = stream(FunctionKind::AlexanderFirst, 1.0, 2.5);
        assert!((a.coefficient(1) - 0.2).abs() < 1e-15);
        // λ = 0 collapses the gamma ratio to 1/m!
        let z = stream(FunctionKind::NormFirst, 0.0, 3.3);
        for m in 1..12u64 {
            let f: f64 = (1..=m).map(|k| k as f64).product();
            assert!((z.coefficient(m) - 1.0 / f).abs() < 1e-15 / f);
        }
    }

    #[test]
    fn derivative_and_alexander_factors() {
        let p = (1.3, 2.2);
        let f = stream(FunctionKind::NormFirst, p.0, p.1);
        let d = stream(FunctionKind::NormFirstDeriv, p.0, p.1);
        let a = stream(FunctionKind::AlexanderFirst, p.0, p.1);
        for m in 1..20u64 {
            let c = f.coefficient(m);
            assert!((d.coefficient(m) - (m + 1) as f64 * c).abs() < 1e-15 * c.abs().max(1e-300) * 10.0);
            assert!((a.coefficient(m) - c / (m + 1) as f64).abs() <= 1e-15 * c.abs());
        }
        let s = stream(FunctionKind::NormSecond, p.0, p.1);
        let sd = stream(FunctionKind::NormSecondDeriv, p.0, p.1);
        for m in 1..20u64 {
            let c = s.coefficient(m);
            assert!((sd.coefficient(m) - (m + 1) as f64 * c).abs() <= 1e-14 * sd.coefficient(m));
        }
    }

    #[test]
    fn negative_lambda_coefficients_can_be_negative() {
        let s = stream(FunctionKind::NormFirst, -0.5, 1.6);
        assert!(s.coefficient(4) < 0.0);
        // Γ pole at λm + μ = 0
        let p = stream(FunctionKind::NormFirst, -0.5, 1.5);
        assert_eq!(p.coefficient(3), 0.0);
    }

    #[test]
    fn invalid_params_rejected() {
        let p = WrightParams { lambda: 0.5, mu: -0.1 };
        assert!(matches!(
            CoefficientStream::new(FunctionKind::NormFirst, p),
            Err(WrightError::InvalidParams { .. })
        ));
        assert!(CoefficientStream::new(FunctionKind::NormSecond, p).is_ok());
    }

    #[test]
    fn chain_tail_examples() {
        let s = stream(FunctionKind::NormFirst, 1.0, 2.5);
        assert_eq!(s.tail_method(), TailMethod::LemmaChain);
        assert!((s.tail_majorant(1).unwrap() - 0.1).abs() < 1e-15);
        assert!((s.tail_majorant(0).unwrap() - 0.5).abs() < 1e-15);
        // consistent with the modulus bound (2μ+1)/(2μ−1) − 1
        assert!((s.tail_majorant(0).unwrap() - (6.0 / 4.0 - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn fallback_methods_selected() {
        assert_eq!(
            stream(FunctionKind::NormFirst, 0.5, 2.0).tail_method(),
            TailMethod::RatioMonotone
        );
        assert_eq!(
            stream(FunctionKind::NormFirst, 1.0, 0.4).tail_method(),
            TailMethod::RatioMonotone
        );
        assert_eq!(
            stream(FunctionKind::NormFirst, 3.0, 0.5002).tail_method(),
            TailMethod::RatioMonotone
        );
        // sign change of the gamma argument lies far past the cap
        let s = stream(FunctionKind::Raw, -3.4e-5, 3.95);
        assert_eq!(s.tail_method(), TailMethod::Reflection);
        assert!(s.evaluate(Complex64::new(1.0, 0.0), 1e-15).is_ok());
        assert_eq!(
            stream(FunctionKind::NormFirst, -0.5, 2.0).tail_method(),
            TailMethod::Reflection
        );
        assert_eq!(
            stream(FunctionKind::Raw, 2.0, 1.0).tail_method(),
            TailMethod::RatioMonotone
        );
    }

    #[test]
    fn tails_decrease_to_zero() {
        for (kind, l, m) in [
            (FunctionKind::NormFirst, 1.0, 2.5),
            (FunctionKind::NormFirstDeriv, 0.3, 0.7),
            (FunctionKind::NormSecond, -0.7, 1.2),
            (FunctionKind::Raw, 0.5, -2.5),
            (FunctionKind::AlexanderFirst, -0.9, 0.3),
        ] {
            let s = stream(kind, l, m);
            let mut prev = f64::INFINITY;
            for n in 0..120 {
                let t = s.tail_majorant(n).unwrap();
                assert!(t <= prev * (1.0 + 1e-12), "{kind} {l} {m} n={n}: {t} > {prev}");
                prev = t;
            }
            assert!(prev < 1e-20, "{kind}: {prev}");
        }
    }

    #[test]
    fn evaluate_heads() {
        let s = stream(FunctionKind::NormFirst, 0.7, 1.9);
        let v = s.evaluate(Complex64::new(0.0, 0.0), 1e-15).unwrap();
        assert_eq!(v.value, Complex64::new(0.0, 0.0));
        assert!(v.tail_bound <= 1e-15);
        let d = stream(FunctionKind::NormFirstDeriv, 0.7, 1.9);
        assert_eq!(
            d.evaluate(Complex64::new(0.0, 0.0), 1e-15).unwrap().value,
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn raw_wright_at_one_is_bessel_i0_of_two() {
        let s = stream(FunctionKind::Raw, 1.0, 1.0);
        let v = s.evaluate(Complex64::new(1.0, 0.0), 1e-15).unwrap();
        assert!((v.value.re - 2.2795853023360672674).abs() < 1e-14);
        assert_eq!(v.value.im, 0.0);
    }

    #[test]
    fn partial_sum_examples() {
        let s = stream(FunctionKind::NormFirst, 1.0, 2.5);
        let z = Complex64::new(0.3, 0.4);
        assert_eq!(s.partial_sum(0, z), z);
        let one = stream(FunctionKind::NormFirst, 1.0, 1.0);
        assert!((one.partial_sum(1, Complex64::new(1.0, 0.0)) - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        let d = stream(FunctionKind::NormSecondDeriv, 1.0, 1.0);
        assert_eq!(d.partial_sum(0, z), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn outside_disc_is_an_error() {
        let s = stream(FunctionKind::NormFirst, 1.0, 2.5);
        assert!(matches!(
            s.evaluate(Complex64::new(1.1, 0.0), 1e-12),
            Err(WrightError::OutsideDisc { .. })
        ));
        assert!(s.evaluate(Complex64::new(1.0 + 5e-10, 0.0), 1e-12).is_ok());
    }

    #[test]
    fn term_cap_turns_into_error() {
        let s = stream(FunctionKind::NormFirst, -0.95, 0.5);
        let err = s.evaluate_with_cap(Complex64::new(0.5, 0.0), 1e-15, 5).unwrap_err();
        assert!(matches!(err, WrightError::NonConvergence { cap: 5, .. }));
    }
}
