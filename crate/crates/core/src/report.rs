//! Serialization of certification reports: one CSV record per report, or a
//! JSON array. Floats use the shortest decimal that parses back to the same
//! bits, so output is byte-stable and re-parses exactly.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::verifier::{CertificationReport, Verdict};

/// Serde adapter for f64 that writes ±inf and NaN as the strings "inf",
/// "-inf" and "nan" instead of failing (JSON has no literal for them).
pub mod float {
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else if x.is_nan() {
            s.serialize_str("nan")
        } else if *x > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    struct F64Visitor;

    impl<'de> Visitor<'de> for F64Visitor {
        type Value = f64;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a number or one of \"inf\", \"-inf\", \"nan\"")
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
            Ok(v)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
            match v {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        d.deserialize_any(F64Visitor)
    }
}

/// Shortest round-trip rendering; `inf`, `-inf`, `NaN` for the rest.
pub fn render(x: f64) -> String {
    format!("{x:?}")
}

fn key_cmp(a: &CertificationReport, b: &CertificationReport) -> Ordering {
    a.claim
        .id
        .cmp(&b.claim.id)
        .then(a.claim.params.lambda.total_cmp(&b.claim.params.lambda))
        .then(a.claim.params.mu.total_cmp(&b.claim.params.mu))
        .then(a.claim.n.cmp(&b.claim.n))
}

/// Orders by claim id, then (λ, μ, n).
pub fn sort_reports(reports: &mut [CertificationReport]) {
    reports.sort_by(key_cmp);
}

pub const CSV_HEADER: &str = "claim,lambda,mu,n,bound,valid,observed_min,margin,numeric_slack,tail_bound,\
denominator_zero_suspected,re_argmin,im_argmin,boundary_points,exploratory,verdict";

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Certified => "certified",
        Verdict::Violated => "violated",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn csv_record(r: &CertificationReport) -> String {
    let c = &r.claim;
    [
        c.id.name().to_owned(),
        render(c.params.lambda),
        render(c.params.mu),
        c.n.to_string(),
        render(c.bound),
        c.valid.to_string(),
        render(r.observed_min),
        render(r.margin),
        render(r.numeric_slack),
        render(r.tail_bound),
        r.denominator_zero_suspected.to_string(),
        render(r.argmin_z.re),
        render(r.argmin_z.im),
        r.grid.boundary_points.to_string(),
        r.exploratory.to_string(),
        verdict_name(r.verdict).to_owned(),
    ]
    .join(",")
}

/// Header plus one line per report, in the given order.
pub fn to_csv(reports: &[CertificationReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let _ = writeln!(out, "{}", csv_record(r));
    }
    out
}

pub fn to_json(reports: &[CertificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> serde_json::Result<Vec<CertificationReport>> {
    serde_json::from_str(s)
}
