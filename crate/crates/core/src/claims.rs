//! The inequality catalog: every modulus bound, partial-sum ratio lower bound
//! and starlikeness radius, as rows of one table.
//!
//! A row binds a [`ClaimId`] to its bound formula, its hypothesis on (λ, μ)
//! and the quantity it constrains. Bounds are computed even when the
//! hypothesis fails, so the verifier can probe them in exploratory mode.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::params::{FunctionKind, WrightParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    L1i,
    L1ii,
    L1iii,
    L2i,
    L2ii,
    /// L2i with the constant produced by its derivation, (2s+1)/(2s−1).
    L2iProof,
    /// L2ii with the constant produced by its derivation, (s+1)/(s−1), s > 1.
    L2iiProof,
    T21Ratio,
    T21Inverse,
    T22Ratio,
    T22Inverse,
    T23Ratio,
    T23Inverse,
    T31Ratio,
    T31Inverse,
    T32Ratio,
    T32Inverse,
    R24Ratio,
    R24Inverse,
    StarRadiusFirst,
    StarRadiusSecond,
}

/// What a claim constrains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// sup_{|z|<1} |f(z)| ≤ bound
    Modulus { kind: FunctionKind },
    /// inf_{|z|<1} Re{scale · q(σz)} ≥ bound, where q is f/(f)_n, or its
    /// reciprocal when `inverse`, and σ = −1 when `reflect`.
    Ratio {
        kind: FunctionKind,
        inverse: bool,
        scale: f64,
        reflect: bool,
    },
    /// The partial sum (f)_n is starlike in |z| < bound.
    Radius { kind: FunctionKind },
}

impl Shape {
    pub fn kind(&self) -> FunctionKind {
        match *self {
            Shape::Modulus { kind } | Shape::Ratio { kind, .. } | Shape::Radius { kind } => kind,
        }
    }
}

struct Row {
    id: ClaimId,
    name: &'static str,
    shape: Shape,
    formula: &'static str,
    hypothesis: &'static str,
    statement: &'static str,
    bound: fn(f64, f64) -> f64,
    valid: fn(f64, f64, usize) -> bool,
}

const fn ratio(kind: FunctionKind, inverse: bool) -> Shape {
    Shape::Ratio {
        kind,
        inverse,
        scale: 1.0,
        reflect: false,
    }
}

// bound and validity closures take (λ, μ) and, for validity, n.
static TABLE: [Row; 21] = [
    Row {
        id: ClaimId::L1i,
        name: "l1i",
        shape: Shape::Modulus {
            kind: FunctionKind::NormFirst,
        },
        formula: "(2mu+1)/(2mu-1)",
        hypothesis: "mu > 1/2",
        statement: "modulus bound on the first normalization",
        bound: |_, m| (2.0 * m + 1.0) / (2.0 * m - 1.0),
        valid: |_, m, _| m > 0.5,
    },
    Row {
        id: ClaimId::L1ii,
        name: "l1ii",
        shape: Shape::Modulus {
            kind: FunctionKind::NormFirstDeriv,
        },
        formula: "(mu+1)/(mu-1)",
        hypothesis: "mu > 1",
        statement: "modulus bound on the derivative of the first normalization",
        bound: |_, m| (m + 1.0) / (m - 1.0),
        valid: |_, m, _| m > 1.0,
    },
    Row {
        id: ClaimId::L1iii,
        name: "l1iii",
        shape: Shape::Modulus {
            kind: FunctionKind::AlexanderFirst,
        },
        formula: "2mu/(2mu-1)",
        hypothesis: "mu > 1/2",
        statement: "modulus bound on the Alexander transform of the first normalization",
        bound: |_, m| 2.0 * m / (2.0 * m - 1.0),
        valid: |_, m, _| m > 0.5,
    },
    Row {
        id: ClaimId::L2i,
        name: "l2i",
        shape: Shape::Modulus {
            kind: FunctionKind::NormSecond,
        },
        formula: "2(lambda+mu)/(2(lambda+mu)-1)",
        hypothesis: "lambda + mu > 1/2",
        statement: "modulus bound on the second normalization (stated constant)",
        bound: |l, m| 2.0 * (l + m) / (2.0 * (l + m) - 1.0),
        valid: |l, m, _| l + m > 0.5,
    },
    Row {
        id: ClaimId::L2ii,
        name: "l2ii",
        shape: Shape::Modulus {
            kind: FunctionKind::NormSecondDeriv,
        },
        formula: "(2(lambda+mu)+1)/(2(lambda+mu)-1)",
        hypothesis: "lambda + mu > 1/2",
        statement: "modulus bound on the derivative of the second normalization (stated constant)",
        bound: |l, m| (2.0 * (l + m) + 1.0) / (2.0 * (l + m) - 1.0),
        valid: |l, m, _| l + m > 0.5,
    },
    Row {
        id: ClaimId::L2iProof,
        name: "l2i-proof",
        shape: Shape::Modulus {
            kind: FunctionKind::NormSecond,
        },
        formula: "(2(lambda+mu)+1)/(2(lambda+mu)-1)",
        hypothesis: "lambda + mu > 1/2",
        statement: "modulus bound on the second normalization (derivation constant)",
        bound: |l, m| (2.0 * (l + m) + 1.0) / (2.0 * (l + m) - 1.0),
        valid: |l, m, _| l + m > 0.5,
    },
    Row {
        id: ClaimId::L2iiProof,
        name: "l2ii-proof",
        shape: Shape::Modulus {
            kind: FunctionKind::NormSecondDeriv,
        },
        formula: "((lambda+mu)+1)/((lambda+mu)-1)",
        hypothesis: "lambda + mu > 1",
        statement: "modulus bound on the derivative of the second normalization (derivation constant)",
        bound: |l, m| (l + m + 1.0) / (l + m - 1.0),
        valid: |l, m, _| l + m > 1.0,
    },
    Row {
        id: ClaimId::T21Ratio,
        name: "t21-ratio",
        shape: ratio(FunctionKind::NormFirst, false),
        formula: "(2mu-3)/(2mu-1)",
        hypothesis: "mu > 3/2",
        statement: "Re{f/(f)_n} lower bound, first normalization",
        bound: |_, m| (2.0 * m - 3.0) / (2.0 * m - 1.0),
        valid: |_, m, _| m > 1.5,
    },
    Row {
        id: ClaimId::T21Inverse,
        name: "t21-inverse",
        shape: ratio(FunctionKind::NormFirst, true),
        formula: "(2mu-1)/(2mu+1)",
        hypothesis: "mu > 3/2",
        statement: "Re{(f)_n/f} lower bound, first normalization",
        bound: |_, m| (2.0 * m - 1.0) / (2.0 * m + 1.0),
        valid: |_, m, _| m > 1.5,
    },
    Row {
        id: ClaimId::T22Ratio,
        name: "t22-ratio",
        shape: ratio(FunctionKind::NormFirstDeriv, false),
        formula: "(mu-3)/(mu-1)",
        hypothesis: "mu > 3",
        statement: "Re{f'/(f)_n'} lower bound, first normalization",
        bound: |_, m| (m - 3.0) / (m - 1.0),
        valid: |_, m, _| m > 3.0,
    },
    Row {
        id: ClaimId::T22Inverse,
        name: "t22-inverse",
        shape: ratio(FunctionKind::NormFirstDeriv, true),
        formula: "(mu-1)/(mu+1)",
        hypothesis: "mu > 3",
        statement: "Re{(f)_n'/f'} lower bound, first normalization",
        bound: |_, m| (m - 1.0) / (m + 1.0),
        valid: |_, m, _| m > 3.0,
    },
    Row {
        id: ClaimId::T23Ratio,
        name: "t23-ratio",
        shape: ratio(FunctionKind::AlexanderFirst, false),
        formula: "(2mu-2)/(2mu-1)",
        hypothesis: "mu > 1",
        statement: "Re{A[f]/(A[f])_n} lower bound, Alexander transform of the first normalization",
        bound: |_, m| (2.0 * m - 2.0) / (2.0 * m - 1.0),
        valid: |_, m, _| m > 1.0,
    },
    Row {
        id: ClaimId::T23Inverse,
        name: "t23-inverse",
        shape: ratio(FunctionKind::AlexanderFirst, true),
        formula: "(2mu-1)/(2mu)",
        hypothesis: "mu > 1",
        statement: "Re{(A[f])_n/A[f]} lower bound, Alexander transform of the first normalization",
        bound: |_, m| (2.0 * m - 1.0) / (2.0 * m),
        valid: |_, m, _| m > 1.0,
    },
    Row {
        id: ClaimId::T31Ratio,
        name: "t31-ratio",
        shape: ratio(FunctionKind::NormSecond, false),
        formula: "(2(lambda+mu)-2)/(2(lambda+mu)-1)",
        hypothesis: "lambda + mu > 1",
        statement: "Re{f/(f)_n} lower bound, second normalization",
        bound: |l, m| (2.0 * (l + m) - 2.0) / (2.0 * (l + m) - 1.0),
        valid: |l, m, _| l + m > 1.0,
    },
    Row {
        id: ClaimId::T31Inverse,
        name: "t31-inverse",
        shape: ratio(FunctionKind::NormSecond, true),
        formula: "(2(lambda+mu)-1)/(2(lambda+mu))",
        hypothesis: "lambda + mu > 1",
        statement: "Re{(f)_n/f} lower bound, second normalization",
        bound: |l, m| (2.0 * (l + m) - 1.0) / (2.0 * (l + m)),
        valid: |l, m, _| l + m > 1.0,
    },
    Row {
        id: ClaimId::T32Ratio,
        name: "t32-ratio",
        shape: ratio(FunctionKind::NormSecondDeriv, false),
        formula: "(2(lambda+mu)-3)/(2(lambda+mu)-1)",
        hypothesis: "lambda + mu > 3/2",
        statement: "Re{f'/(f)_n'} lower bound, second normalization",
        bound: |l, m| (2.0 * (l + m) - 3.0) / (2.0 * (l + m) - 1.0),
        valid: |l, m, _| l + m > 1.5,
    },
    Row {
        id: ClaimId::T32Inverse,
        name: "t32-inverse",
        shape: ratio(FunctionKind::NormSecondDeriv, true),
        formula: "(2(lambda+mu)-1)/(2(lambda+mu)+1)",
        hypothesis: "lambda + mu > 3/2",
        statement: "Re{(f)_n'/f'} lower bound, second normalization",
        bound: |l, m| (2.0 * (l + m) - 1.0) / (2.0 * (l + m) + 1.0),
        valid: |l, m, _| l + m > 1.5,
    },
    Row {
        id: ClaimId::R24Ratio,
        name: "r24-ratio",
        shape: Shape::Ratio {
            kind: FunctionKind::NormFirst,
            inverse: false,
            scale: 4.0 / 3.0,
            reflect: true,
        },
        formula: "2/3",
        hypothesis: "lambda = 1, mu = 5/2, n = 0",
        statement: "Re{(sin 2sqrt(z) - 2sqrt(z) cos 2sqrt(z))/(2z sqrt(z))} lower bound",
        bound: |_, _| 2.0 / 3.0,
        valid: |l, m, n| l == 1.0 && m == 2.5 && n == 0,
    },
    Row {
        id: ClaimId::R24Inverse,
        name: "r24-inverse",
        shape: Shape::Ratio {
            kind: FunctionKind::NormFirst,
            inverse: true,
            scale: 3.0 / 4.0,
            reflect: true,
        },
        formula: "1/2",
        hypothesis: "lambda = 1, mu = 5/2, n = 0",
        statement: "Re{2z sqrt(z)/(sin 2sqrt(z) - 2sqrt(z) cos 2sqrt(z))} lower bound",
        bound: |_, _| 0.5,
        valid: |l, m, n| l == 1.0 && m == 2.5 && n == 0,
    },
    Row {
        id: ClaimId::StarRadiusFirst,
        name: "star-radius-first",
        shape: Shape::Radius {
            kind: FunctionKind::NormFirst,
        },
        formula: "(mu-1)/(mu+1)",
        hypothesis: "mu > 1",
        statement: "radius of starlikeness of the partial sums, first normalization",
        bound: |_, m| (m - 1.0) / (m + 1.0),
        valid: |_, m, _| m > 1.0,
    },
    Row {
        id: ClaimId::StarRadiusSecond,
        name: "star-radius-second",
        shape: Shape::Radius {
            kind: FunctionKind::NormSecond,
        },
        formula: "(2(lambda+mu)-1)/(2(lambda+mu)+1)",
        hypothesis: "lambda + mu > 1/2",
        statement: "radius of starlikeness of the partial sums, second normalization",
        bound: |l, m| (2.0 * (l + m) - 1.0) / (2.0 * (l + m) + 1.0),
        valid: |l, m, _| l + m > 0.5,
    },
];

impl ClaimId {
    /// Catalog order; also the report ordering.
    pub const ALL: [ClaimId; 21] = [
        ClaimId::L1i,
        ClaimId::L1ii,
        ClaimId::L1iii,
        ClaimId::L2i,
        ClaimId::L2ii,
        ClaimId::L2iProof,
        ClaimId::L2iiProof,
        ClaimId::T21Ratio,
        ClaimId::T21Inverse,
        ClaimId::T22Ratio,
        ClaimId::T22Inverse,
        ClaimId::T23Ratio,
        ClaimId::T23Inverse,
        ClaimId::T31Ratio,
        ClaimId::T31Inverse,
        ClaimId::T32Ratio,
        ClaimId::T32Inverse,
        ClaimId::R24Ratio,
        ClaimId::R24Inverse,
        ClaimId::StarRadiusFirst,
        ClaimId::StarRadiusSecond,
    ];

    /// The ten partial-sum ratio inequalities of the two theorem families.
    pub const THEOREM_RATIOS: [ClaimId; 10] = [
        ClaimId::T21Ratio,
        ClaimId::T21Inverse,
        ClaimId::T22Ratio,
        ClaimId::T22Inverse,
        ClaimId::T23Ratio,
        ClaimId::T23Inverse,
        ClaimId::T31Ratio,
        ClaimId::T31Inverse,
        ClaimId::T32Ratio,
        ClaimId::T32Inverse,
    ];

    fn row(self) -> &'static Row {
        // TABLE is laid out in ALL order
        let row = &TABLE[self as usize];
        debug_assert_eq!(row.id, self);
        row
    }

    pub fn name(self) -> &'static str {
        self.row().name
    }

    pub fn shape(self) -> Shape {
        self.row().shape
    }

    pub fn formula(self) -> &'static str {
        self.row().formula
    }

    pub fn hypothesis(self) -> &'static str {
        self.row().hypothesis
    }

    pub fn statement(self) -> &'static str {
        self.row().statement
    }

    /// Derivation-constant alternates kept beside the stated bounds.
    pub fn is_variant(self) -> bool {
        matches!(self, ClaimId::L2iProof | ClaimId::L2iiProof)
    }

    /// The stated claim a variant stands in for.
    pub fn variant_of(self) -> Option<ClaimId> {
        match self {
            ClaimId::L2iProof => Some(ClaimId::L2i),
            ClaimId::L2iiProof => Some(ClaimId::L2ii),
            _ => None,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim `{s}`"))
    }
}

/// One catalog inequality instantiated at (λ, μ, n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundClaim {
    pub id: ClaimId,
    pub params: WrightParams,
    pub n: usize,
    #[serde(with = "crate::report::float")]
    pub bound: f64,
    pub valid: bool,
}

/// Instantiates one claim. The hypothesis is reported in `valid`, never
/// enforced; λ > −1 and the kind's own predicate are part of it.
pub fn bound_value(id: ClaimId, params: WrightParams, n: usize) -> BoundClaim {
    let row = id.row();
    let (l, m) = (params.lambda, params.mu);
    let bound = (row.bound)(l, m);
    let valid = row.shape.kind().is_valid(&params) && (row.valid)(l, m, n) && bound.is_finite();
    BoundClaim {
        id,
        params,
        n,
        bound,
        valid,
    }
}

/// All catalog rows at (λ, μ, n), variants included, in catalog order.
pub fn enumerate_claims(params: WrightParams, n: usize) -> Vec<BoundClaim> {
    ClaimId::ALL.iter().map(|&id| bound_value(id, params, n)).collect()
}

/// One row of the serialized registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: ClaimId,
    pub quantity: String,
    pub formula: String,
    pub hypothesis: String,
    pub statement: String,
    pub variant_of: Option<ClaimId>,
}

pub fn catalog() -> Vec<CatalogEntry> {
    ClaimId::ALL
        .iter()
        .map(|&id| CatalogEntry {
            id,
            quantity: match id.shape() {
                Shape::Modulus { kind } => format!("sup |{kind}|"),
                Shape::Ratio {
                    kind, inverse: false, ..
                } => format!("inf Re {kind} / partial"),
                Shape::Ratio {
                    kind, inverse: true, ..
                } => format!("inf Re partial / {kind}"),
                Shape::Radius { kind } => format!("starlikeness radius of partial {kind}"),
            },
            formula: id.formula().to_owned(),
            hypothesis: id.hypothesis().to_owned(),
            statement: id.statement().to_owned(),
            variant_of: id.variant_of(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lambda: f64, mu: f64) -> WrightParams {
        WrightParams { lambda, mu }
    }

    #[test]
    fn table_order_matches_ids() {
        for (i, id) in ClaimId::ALL.iter().enumerate() {
            assert_eq!(TABLE[i].id, *id);
            assert_eq!(id.name().parse::<ClaimId>().unwrap(), *id);
        }
    }

    #[test]
    fn bound_examples() {
        let c = bound_value(ClaimId::T21Ratio, p(1.0, 2.5), 0);
        assert_eq!(c.bound, 0.5);
        assert!(c.valid);
        let c = bound_value(ClaimId::T21Inverse, p(1.0, 2.5), 0);
        assert!((c.bound - 2.0 / 3.0).abs() < 1e-16 && c.valid);
        assert!(!bound_value(ClaimId::T22Ratio, p(1.0, 3.0), 0).valid);
        assert_eq!(bound_value(ClaimId::StarRadiusFirst, p(1.0, 3.0), 0).bound, 0.5);
        assert_eq!(bound_value(ClaimId::L1i, p(2.0, 1.0), 0).bound, 3.0);
        // exploratory values are still computed
        let t22 = bound_value(ClaimId::T22Ratio, p(1.0, 2.0), 1);
        assert_eq!(t22.bound, -1.0);
        assert!(!t22.valid);
    }

    #[test]
    fn enumerate_examples() {
        let all = enumerate_claims(p(1.0, 2.5), 0);
        assert_eq!(all.len(), 21);
        assert_eq!(all.iter().filter(|c| !c.id.is_variant()).count(), 19);
        let valid = |id| all.iter().find(|c| c.id == id).unwrap().valid;
        assert!(valid(ClaimId::T21Ratio) && valid(ClaimId::T23Inverse));
        assert!(!valid(ClaimId::T22Ratio) && !valid(ClaimId::T22Inverse));
        assert!(valid(ClaimId::R24Ratio));

        let first_kind = [
            ClaimId::L1i,
            ClaimId::L1ii,
            ClaimId::L1iii,
            ClaimId::T21Ratio,
            ClaimId::T21Inverse,
            ClaimId::T22Ratio,
            ClaimId::T22Inverse,
            ClaimId::T23Ratio,
            ClaimId::T23Inverse,
            ClaimId::StarRadiusFirst,
        ];
        let all = enumerate_claims(p(0.0, 10.0), 3);
        for c in all.iter().filter(|c| first_kind.contains(&c.id)) {
            assert!(c.valid, "{}", c.id);
        }

        let all = enumerate_claims(p(-0.5, 0.6), 1);
        for c in all
            .iter()
            .filter(|c| c.id.shape().kind().family() == crate::params::Family::Second)
        {
            assert!(!c.valid, "{}", c.id);
        }
    }

    #[test]
    fn ratio_bounds_in_unit_interval_and_tend_to_one() {
        for id in ClaimId::THEOREM_RATIOS {
            for k in 1..400 {
                let x = 1.0 + k as f64 * 0.05;
                for c in [bound_value(id, p(0.0, x), 0), bound_value(id, p(x - 1.0, 1.0), 0)] {
                    if c.valid {
                        assert!(c.bound > 0.0 && c.bound < 1.0, "{id} at {:?}: {}", c.params, c.bound);
                    }
                }
            }
            let far = bound_value(id, p(1.0, 1e9), 0);
            assert!((far.bound - 1.0).abs() < 1e-8, "{id}");
        }
    }

    #[test]
    fn t21_ratio_below_inverse() {
        // (2μ−3)/(2μ−1) < (2μ−1)/(2μ+1)  ⇔  (2μ−3)(2μ+1) < (2μ−1)²  ⇔  −3 < 1
        for k in 1..1000 {
            let mu = 1.5 + k as f64 * 0.01;
            let a = bound_value(ClaimId::T21Ratio, p(1.0, mu), 0).bound;
            let b = bound_value(ClaimId::T21Inverse, p(1.0, mu), 0).bound;
            assert!(a < b);
        }
    }

    #[test]
    fn remark_constants_are_swapped_theorem_values() {
        let r = bound_value(ClaimId::R24Ratio, p(1.0, 2.5), 0);
        let ri = bound_value(ClaimId::R24Inverse, p(1.0, 2.5), 0);
        let t = bound_value(ClaimId::T21Ratio, p(1.0, 2.5), 0);
        let ti = bound_value(ClaimId::T21Inverse, p(1.0, 2.5), 0);
        assert_eq!(r.bound, 2.0 / 3.0);
        assert_eq!(ri.bound, 0.5);
        assert_eq!(r.bound, ti.bound);
        assert_eq!(ri.bound, t.bound);
        assert!(!bound_value(ClaimId::R24Ratio, p(1.0, 2.5), 1).valid);
    }

    #[test]
    fn catalog_serializes() {
        let json = serde_json::to_string(&catalog()).unwrap();
        let back: Vec<CatalogEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, catalog());
        assert!(json.contains("\"l2ii-proof\""));
    }
}
