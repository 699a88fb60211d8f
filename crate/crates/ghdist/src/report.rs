//! Machine- and human-readable reports for distance computations, including
//! the cross-check verdicts between methods.

use serde::Serialize;

use crate::result::{BoundKind, GHResult, Witness};
use crate::space::FiniteMetricSpace;

/// Tolerance for cross-method agreement checks.
pub const VALUE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct SpaceDescriptor {
    pub name: String,
    pub points: usize,
    /// Recognized structure, e.g. `polygon(7)` or `simplex(3)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

impl SpaceDescriptor {
    pub fn describe(name: &str, space: &FiniteMetricSpace) -> SpaceDescriptor {
        let kind = if let Some(n) = space.as_polygon() {
            Some(format!("polygon({n})"))
        } else {
            space.as_simplex().map(|(m, _)| format!("simplex({m})"))
        };
        SpaceDescriptor { name: name.to_string(), points: space.points(), kind }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
}

impl WitnessJson {
    pub fn from_witness(
        witness: &Witness,
        x: &FiniteMetricSpace,
        y: &FiniteMetricSpace,
    ) -> WitnessJson {
        match witness {
            Witness::Correspondence(r) => WitnessJson {
                kind: "correspondence",
                pairs: Some(
                    r.pairs()
                        .iter()
                        .map(|&(i, j)| (x.label(i).to_string(), y.label(j).to_string()))
                        .collect(),
                ),
                blocks: None,
            },
            // Partition witnesses partition the *second* space (the simplex
            // formula partitions its target).
            Witness::Partition(p) => WitnessJson {
                kind: "partition",
                pairs: None,
                blocks: Some(
                    p.blocks()
                        .iter()
                        .map(|block| block.iter().map(|&i| y.label(i).to_string()).collect())
                        .collect(),
                ),
            },
        }
    }
}

/// One method's outcome on a pair of spaces.
#[derive(Clone, Debug, Serialize)]
pub struct MethodRecord {
    pub method: String,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    /// Exact π-rational rendering, when the method is exact arithmetic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub seconds: f64,
    #[serde(skip)]
    pub bound_kind: Option<BoundKind>,
}

impl MethodRecord {
    pub fn from_result(result: &GHResult, seconds: f64) -> MethodRecord {
        MethodRecord {
            method: result.method.id().to_string(),
            applicable: true,
            value: Some(result.value),
            bound: Some(result.bound.to_string()),
            exact: result.exact.map(|q| q.to_string()),
            witness: None,
            note: None,
            seconds,
            bound_kind: Some(result.bound),
        }
    }

    pub fn not_applicable(method: &str, note: &str, seconds: f64) -> MethodRecord {
        MethodRecord {
            method: method.to_string(),
            applicable: false,
            value: None,
            bound: None,
            exact: None,
            witness: None,
            note: Some(note.to_string()),
            seconds,
            bound_kind: None,
        }
    }
}

/// A pairwise consistency verdict between two methods' results.
#[derive(Clone, Debug, Serialize)]
pub struct AgreementRecord {
    pub method_a: String,
    pub method_b: String,
    /// `equal` for two exact values, `bounds` for a bound against a value it
    /// must not cross.
    pub relation: String,
    pub discrepancy: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub inputs: Vec<SpaceDescriptor>,
    pub results: Vec<MethodRecord>,
    pub agreement: Vec<AgreementRecord>,
}

impl RunReport {
    pub fn new(inputs: Vec<SpaceDescriptor>, results: Vec<MethodRecord>) -> RunReport {
        let agreement = cross_check(&results);
        RunReport { inputs, results, agreement }
    }

    pub fn all_agree(&self) -> bool {
        self.agreement.iter().all(|a| a.ok)
    }
}

/// Pairwise verdicts: exact values must match within [`VALUE_TOL`]; a lower
/// bound must not exceed an exact or upper value; an exact value must not
/// exceed an upper bound. The discrepancy reported is the absolute gap for
/// equality checks and the overshoot (clamped at zero) for bound checks.
pub fn cross_check(results: &[MethodRecord]) -> Vec<AgreementRecord> {
    let mut out = Vec::new();
    for (ai, a) in results.iter().enumerate() {
        for b in &results[ai + 1..] {
            let (Some(ka), Some(kb)) = (a.bound_kind, b.bound_kind) else { continue };
            let (Some(va), Some(vb)) = (a.value, b.value) else { continue };
            let record = |relation: &str, discrepancy: f64| AgreementRecord {
                method_a: a.method.clone(),
                method_b: b.method.clone(),
                relation: relation.to_string(),
                discrepancy,
                ok: discrepancy <= VALUE_TOL,
            };
            let verdict = match (ka, kb) {
                (BoundKind::Exact, BoundKind::Exact) => record("equal", (va - vb).abs()),
                (BoundKind::Lower, BoundKind::Exact | BoundKind::Upper) => {
                    record("bounds", (va - vb).max(0.0))
                }
                (BoundKind::Exact | BoundKind::Upper, BoundKind::Lower) => {
                    record("bounds", (vb - va).max(0.0))
                }
                (BoundKind::Exact, BoundKind::Upper) => record("bounds", (va - vb).max(0.0)),
                (BoundKind::Upper, BoundKind::Exact) => record("bounds", (vb - va).max(0.0)),
                _ => continue,
            };
            out.push(verdict);
        }
    }
    out
}

/// Format with a fixed number of significant digits (plain decimal, not
/// scientific), the rendering used for non-exact values.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::result::{GHResult, Method};

    fn record(method: Method, value: f64, bound: BoundKind) -> MethodRecord {
        MethodRecord::from_result(&GHResult::new(value, bound, method), 0.0)
    }

    #[test]
    fn exact_pair_must_match() {
        let results = vec![
            record(Method::BruteForce, 0.5235987755982988, BoundKind::Exact),
            record(Method::ClosedForm, 0.5235987755982989, BoundKind::Exact),
        ];
        let checks = cross_check(&results);
        assert_eq!(checks.len(), 1);
        assert!(checks[0].ok);
        assert_eq!(checks[0].relation, "equal");
    }

    #[test]
    fn lower_bound_crossing_is_flagged() {
        let results = vec![
            record(Method::UltrametricLower, 0.7, BoundKind::Lower),
            record(Method::BruteForce, 0.5, BoundKind::Exact),
        ];
        let checks = cross_check(&results);
        assert_eq!(checks.len(), 1);
        assert!(!checks[0].ok);
        assert!((checks[0].discrepancy - 0.2).abs() < 1e-15);
    }

    #[test]
    fn lower_pairs_are_skipped() {
        let results = vec![
            record(Method::UltrametricLower, 0.3, BoundKind::Lower),
            record(Method::DiameterLower, 0.1, BoundKind::Lower),
        ];
        assert!(cross_check(&results).is_empty());
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.5235987755982988, 12), "0.523598775598");
        assert_eq!(format_sig(3.141592653589793, 12), "3.14159265359");
        assert_eq!(format_sig(0.0, 12), "0");
        assert_eq!(format_sig(1234.5, 12), "1234.50000000");
    }
}
