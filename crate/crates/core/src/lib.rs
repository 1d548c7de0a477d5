//! Wright-function numerics on the closed unit disc.
//!
//! `wright_core` evaluates W_{λ,μ}, its two normalizations, their
//! derivatives and the Alexander transform of the first normalization, each
//! with a certified truncation bound. On top of that it keeps a catalog of
//! modulus, partial-sum ratio and starlikeness-radius inequalities and a
//! verifier that scans the unit disc to certify or refute each of them.

// NaN must fail these checks, so `!(x <= y)` is deliberate throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// reference literals in tests keep every digit they were computed with
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod claims;
pub mod closed_form;
pub mod error;
pub mod figure;
pub mod gamma;
pub mod params;
pub mod report;
pub mod series;
pub mod sum;
pub mod sweep;
pub mod verifier;

pub use claims::{bound_value, enumerate_claims, BoundClaim, ClaimId, Shape};
pub use closed_form::{bessel_identity_check, closed_form_remark, remark_printed_expression};
pub use error::{Result, WrightError};
pub use gamma::{log_gamma, pochhammer, reciprocal_gamma};
pub use num_complex::Complex64;
pub use params::{FunctionKind, WrightParams};
pub use series::{CoefficientStream, SeriesPlan, TailMethod, TruncatedValue, DEFAULT_TERM_CAP};
pub use verifier::{certify, CertificationReport, ScanGrid, Verdict};
