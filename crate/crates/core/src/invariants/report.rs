use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use serde_json::Value;

use crate::algebra::LaurentPolynomial;
use crate::braid::{BraidWord, LinkingMatrix, StrandComponentMap};

use super::{alexander_polynomial, determinant_paths, InvariantError};

/// Version tag of the JSON report layout.
pub const REPORT_SCHEMA: &str = "braidlink.invariants/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub strand_count: usize,
    pub components: StrandComponentMap,
    pub exponent_sum: i64,
    pub linking: LinkingMatrix,
    /// Signed `det(V + Vᵀ)`.
    pub determinant_seifert: BigInt,
    /// Signed `Δ(-1)` of the normalised Burau-route polynomial.
    pub determinant_burau: BigInt,
    pub alexander: LaurentPolynomial,
    pub alexander_at: Vec<(i64, BigInt)>,
}

impl InvariantReport {
    pub fn component_count(&self) -> usize {
        self.components.component_count()
    }

    /// The link determinant, a nonnegative integer.
    pub fn determinant(&self) -> BigInt {
        self.determinant_seifert.abs()
    }

    pub fn to_json(&self) -> Value {
        let json = ReportJson {
            schema: REPORT_SCHEMA,
            strand_count: self.strand_count,
            components: ComponentsJson {
                count: self.components.component_count(),
                of_strand: self.components.component_of_strand(),
            },
            exponent_sum: self.exponent_sum,
            linking: self.linking.rows(),
            determinant: big_json(&self.determinant()),
            determinant_paths: PathsJson {
                seifert: big_json(&self.determinant_seifert),
                burau: big_json(&self.determinant_burau),
            },
            alexander: AlexanderJson {
                text: self.alexander.to_string(),
                coefficients: self
                    .alexander
                    .dense_coefficients()
                    .iter()
                    .map(big_json)
                    .collect(),
                at: self
                    .alexander_at
                    .iter()
                    .map(|(t, value)| EvaluationJson {
                        t: *t,
                        value: big_json(value),
                    })
                    .collect(),
            },
        };
        serde_json::to_value(json).expect("report serialisation is infallible")
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strands:        {}", self.strand_count)?;
        writeln!(f, "components:     {}", self.component_count())?;
        for id in 0..self.component_count() {
            let strands: Vec<String> = self
                .components
                .strands_of(id)
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "  component {id}: strands {}", strands.join(" "))?;
        }
        writeln!(f, "exponent sum:   {}", self.exponent_sum)?;
        writeln!(f, "linking:")?;
        for row in self.linking.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        writeln!(f, "determinant:    {}", self.determinant())?;
        writeln!(f, "alexander:      {}", self.alexander)?;
        for (t, value) in &self.alexander_at {
            writeln!(f, "  at t = {t}: {value}")?;
        }
        Ok(())
    }
}

/// Assembles every invariant of the closure of `w`. The Alexander
/// polynomial is evaluated at `-1` and at each extra point in
/// `evaluation_points`.
pub fn full_report(
    w: &BraidWord,
    evaluation_points: &[i64],
) -> Result<InvariantReport, InvariantError> {
    let paths = determinant_paths(w)?;
    if paths.seifert.abs() != paths.burau.abs() {
        return Err(InvariantError::PathMismatch {
            seifert: paths.seifert,
            burau: paths.burau,
        });
    }
    let alexander = alexander_polynomial(w)?;
    let mut points = vec![-1];
    points.extend(evaluation_points.iter().copied().filter(|&t| t != -1));
    let alexander_at = points
        .into_iter()
        .map(|t| {
            alexander
                .evaluate(t)
                .map(|value| (t, value))
                .ok_or_else(|| InvariantError::NonIntegralEvaluation {
                    polynomial: alexander.to_string(),
                    t,
                })
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(InvariantReport {
        strand_count: w.strand_count(),
        components: w.components(),
        exponent_sum: w.exponent_sum(),
        linking: w.linking_matrix(),
        determinant_seifert: paths.seifert,
        determinant_burau: paths.burau,
        alexander,
        alexander_at,
    })
}

/// JSON number when it fits in `i64`, decimal string otherwise.
fn big_json(value: &BigInt) -> Value {
    match value.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(value.to_string()),
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: &'static str,
    strand_count: usize,
    components: ComponentsJson<'a>,
    exponent_sum: i64,
    linking: &'a [Vec<i64>],
    determinant: Value,
    determinant_paths: PathsJson,
    alexander: AlexanderJson,
}

#[derive(Serialize)]
struct ComponentsJson<'a> {
    count: usize,
    of_strand: &'a [usize],
}

#[derive(Serialize)]
struct PathsJson {
    seifert: Value,
    burau: Value,
}

#[derive(Serialize)]
struct AlexanderJson {
    text: String,
    coefficients: Vec<Value>,
    at: Vec<EvaluationJson>,
}

#[derive(Serialize)]
struct EvaluationJson {
    t: i64,
    value: Value,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(text: &str, points: &[i64]) -> InvariantReport {
        full_report(&BraidWord::parse(text).unwrap(), points).unwrap()
    }

    #[test]
    fn unknot_report() {
        let r = report("B2 1", &[]);
        assert_eq!(r.component_count(), 1);
        assert_eq!(r.determinant(), BigInt::from(1));
        assert_eq!(r.alexander_at, vec![(-1, BigInt::from(1))]);
    }

    #[test]
    fn trefoil_json_layout() {
        let r = report("B2 1 1 1", &[2, -1]);
        let json = r.to_json();
        assert_eq!(json["schema"], REPORT_SCHEMA);
        assert_eq!(json["determinant"], 3);
        assert_eq!(json["components"]["count"], 1);
        assert_eq!(json["alexander"]["text"], "1 - t + t^2");
        assert_eq!(
            json["alexander"]["coefficients"],
            serde_json::json!([1, -1, 1])
        );
        // -1 is always first and never repeated
        assert_eq!(
            json["alexander"]["at"],
            serde_json::json!([{"t": -1, "value": 3}, {"t": 2, "value": 3}])
        );
        assert_eq!(
            json["determinant_paths"]["seifert"].as_i64().map(i64::abs),
            Some(3)
        );
        assert_eq!(json["linking"], serde_json::json!([[0]]));
    }

    #[test]
    fn hopf_linking_in_report() {
        let r = report("B2 1 1", &[]);
        assert_eq!(r.linking.get(0, 1), 1);
        assert_eq!(r.determinant(), BigInt::from(2));
        assert!(r.to_string().contains("determinant:    2"));
    }

    #[test]
    fn big_values_fall_back_to_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(big_json(&big), Value::from(big.to_string()));
        assert_eq!(big_json(&BigInt::from(-7)), Value::from(-7));
    }
}
