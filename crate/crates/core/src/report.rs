//! Serializable reports produced by the command-line tool.
//!
//! Every number is exact: integers stay integers and rationals serialize as
//! `{"num": …, "den": …}`.

use serde::{Deserialize, Serialize};

use crate::alexander::alexander;
use crate::apoly::{ahat_degrees_from_table, double_twist_deg_m, torus_ahat_degrees, AhatDegrees};
use crate::arith::Rational;
use crate::casson::{exceptional_slopes, CassonResult, KnotData, Nontriviality};
use crate::error::Result;
use crate::knot::{DoubleTwistKnot, KnotKind, KnotSpec, Slope, TwoBridgeKnot};
use crate::seminorm::SeminormTerm;
use crate::surfaces::{ContinuedFraction, FractionSource, SurfaceDatum};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KnotInfo {
    pub input: String,
    pub canonical: TwoBridgeKnot,
    pub mirror: TwoBridgeKnot,
    pub classification: KnotKind,
    pub double_twist: Option<DoubleTwistKnot>,
    /// Coefficients of `Δ(t)`, constant term first.
    pub alexander: Vec<i64>,
    pub alexander_display: String,
    pub fibered: bool,
    pub lambda_prime: Rational,
    pub ahat_degrees: AhatDegrees,
    pub exceptional_slopes: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurfaceRecord {
    pub expansion: ContinuedFraction,
    pub source: FractionSource,
    pub boundary_slope: i64,
    pub doubled_weight: u64,
    pub weight: Rational,
    pub is_seifert: bool,
}

impl From<&SurfaceDatum> for SurfaceRecord {
    fn from(d: &SurfaceDatum) -> Self {
        SurfaceRecord {
            expansion: d.expansion.clone(),
            source: d.source,
            boundary_slope: d.boundary_slope,
            doubled_weight: d.doubled_weight,
            weight: d.weight(),
            is_seifert: d.is_seifert,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeminormReport {
    /// `‖p/q‖_T` as a weighted sum of `|p - Nq|`.
    pub formula: String,
    pub is_norm: bool,
    pub slope: Option<Slope>,
    pub value: Option<Rational>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreesReport {
    pub ahat: AhatDegrees,
    /// The closed-form M-degree, for double twist input.
    pub double_twist_deg_m: Option<u64>,
    /// The torus-knot formula, for `K(α,±1)`.
    pub torus: Option<AhatDegrees>,
}

/// Output of one command; only the sections the command computes are present.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub knot: Option<TwoBridgeKnot>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<KnotInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surfaces: Option<Vec<SurfaceRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seminorm_terms: Option<Vec<SeminormTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seminorm: Option<SeminormReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<Slope>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub casson: Option<CassonResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exceptional_slopes: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nontriviality: Option<Nontriviality>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreesReport>,
}

fn to_i64_coeffs(d: &crate::arith::IntPoly) -> Vec<i64> {
    d.coeffs()
        .iter()
        .map(|c| c.to_string().parse().expect("Alexander coefficients fit in i64"))
        .collect()
}

impl Report {
    fn base(k: TwoBridgeKnot) -> Self {
        Report {
            knot: Some(k),
            ..Report::default()
        }
    }

    pub fn info(spec: &KnotSpec) -> Result<Self> {
        let k = spec.knot()?;
        let d = KnotData::new(k);
        let delta = alexander(&k);
        let ahat = ahat_degrees_from_table(&d.table);
        Ok(Report {
            info: Some(KnotInfo {
                input: spec.to_string(),
                canonical: k.canonical(),
                mirror: k.mirror(),
                classification: k.classify(),
                double_twist: spec.double_twist(),
                alexander: to_i64_coeffs(&delta.delta),
                alexander_display: delta.delta.to_string(),
                fibered: delta.is_monic,
                lambda_prime: Rational::from(ahat.deg_m as i64).half(),
                ahat_degrees: ahat,
                exceptional_slopes: exceptional_slopes(&k).into_iter().collect(),
            }),
            ..Report::base(k)
        })
    }

    pub fn surfaces(spec: &KnotSpec) -> Result<Self> {
        let k = spec.knot()?;
        let d = KnotData::new(k);
        Ok(Report {
            surfaces: Some(d.surfaces.iter().map(SurfaceRecord::from).collect()),
            seminorm_terms: Some(d.table.terms.clone()),
            ..Report::base(k)
        })
    }

    pub fn seminorm(spec: &KnotSpec, slope: Option<Slope>) -> Result<Self> {
        let k = spec.knot()?;
        let d = KnotData::new(k);
        Ok(Report {
            seminorm_terms: Some(d.table.terms.clone()),
            seminorm: Some(SeminormReport {
                formula: d.table.display_formula(),
                is_norm: d.table.is_norm(),
                slope,
                value: slope.map(|s| d.table.eval(&s)),
            }),
            ..Report::base(k)
        })
    }

    pub fn casson(spec: &KnotSpec, slope: Slope) -> Result<Self> {
        let k = spec.knot()?;
        let d = KnotData::new(k);
        Ok(Report {
            surfaces: Some(d.surfaces.iter().map(SurfaceRecord::from).collect()),
            seminorm_terms: Some(d.table.terms.clone()),
            slope: Some(slope),
            casson: Some(d.casson(&slope)),
            ..Report::base(k)
        })
    }

    pub fn exceptional(spec: &KnotSpec) -> Result<Self> {
        let k = spec.knot()?;
        Ok(Report {
            exceptional_slopes: Some(exceptional_slopes(&k).into_iter().collect()),
            ..Report::base(k)
        })
    }

    pub fn nontriviality(spec: &KnotSpec, slope: Slope) -> Result<Self> {
        let k = spec.knot()?;
        Ok(Report {
            slope: Some(slope),
            nontriviality: Some(crate::casson::nontriviality(&k, &slope)?),
            exceptional_slopes: Some(exceptional_slopes(&k).into_iter().collect()),
            ..Report::base(k)
        })
    }

    pub fn degrees(spec: &KnotSpec) -> Result<Self> {
        let k = spec.knot()?;
        let d = KnotData::new(k);
        let torus = (k.classify() == KnotKind::Torus)
            .then(|| torus_ahat_degrees(2, k.alpha()))
            .transpose()?;
        let double_twist_deg_m = match spec.double_twist() {
            Some(j) => double_twist_deg_m(&j).ok(),
            None => None,
        };
        Ok(Report {
            degrees: Some(DegreesReport {
                ahat: ahat_degrees_from_table(&d.table),
                double_twist_deg_m,
                torus,
            }),
            ..Report::base(k)
        })
    }
}
