use thiserror::Error;

pub type Result<T, E = WrightError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WrightError {
    #[error("{function}({arg}): {reason}")]
    Domain {
        function: &'static str,
        arg: f64,
        reason: &'static str,
    },

    /// The parameter pair fails the validity predicate of a function kind.
    #[error("invalid parameters for {kind} (lambda = {lambda}, mu = {mu}): requires {predicate}")]
    InvalidParams {
        kind: &'static str,
        predicate: &'static str,
        lambda: f64,
        mu: f64,
    },

    #[error("series did not reach tolerance {tol:e} within {cap} terms (tail bound {tail:e})")]
    NonConvergence { cap: usize, tol: f64, tail: f64 },

    #[error("|z| = {modulus} lies outside the closed unit disc")]
    OutsideDisc { modulus: f64 },

    #[error("invalid scan grid: {0}")]
    Grid(String),

    #[error("{0}")]
    Unsupported(&'static str),
}
