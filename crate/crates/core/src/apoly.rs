//! Degrees of the Â-polynomial: `deg_L Â = ‖1/0‖_T`, `deg_M Â = ‖0/1‖_T`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{DoubleTwistKnot, Slope, TwistCase, TwoBridgeKnot};
use crate::seminorm::{ClosedFormKnot, SeminormTable};
use crate::surfaces::all_surfaces;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AhatDegrees {
    pub deg_m: u64,
    pub deg_l: u64,
}

pub fn ahat_degrees_from_table(t: &SeminormTable) -> AhatDegrees {
    let integral = |s: &Slope| {
        t.eval(s)
            .to_i64()
            .and_then(|v| u64::try_from(v).ok())
            .expect("seminorm at 0/1 and 1/0 is a non-negative integer")
    };
    AhatDegrees {
        deg_m: integral(&Slope::integral(0)),
        deg_l: integral(&Slope::MERIDIAN),
    }
}

pub fn ahat_degrees(k: &TwoBridgeKnot) -> AhatDegrees {
    ahat_degrees_from_table(&SeminormTable::from_surfaces(*k, &all_surfaces(k)))
}

/// `deg_M Â` of a double twist knot from the closed-form corollary.
pub fn double_twist_deg_m(j: &DoubleTwistKnot) -> Result<u64> {
    let f = ClosedFormKnot::from_double_twist(j)?;
    let (l, m) = (f.l, f.m);
    let v = match f.case {
        TwistCase::Opposite => {
            if l % 2 == 0 && m % 2 == 0 {
                2 * l * m
            } else if l % 2 == 1 {
                m * (l * m + 1)
            } else {
                l * (l * m + 1)
            }
        }
        TwistCase::Same => {
            let (l, m) = if m > l { (m, l) } else { (l, m) };
            if m < 2 {
                return Err(Error::OutOfRange(format!("{j} is outside the closed-form families")));
            }
            if l % 2 == 0 && m % 2 == 0 {
                2 * l * m - 2
            } else if l % 2 == 1 {
                m * m * (l - 1) - (m - 1) * (m - 2)
            } else {
                m * (l - 1) * (l - 1) - (l - m) + 2 * (m - 1)
            }
        }
    };
    Ok(v as u64)
}

/// Â-degrees of the `(p,q)` torus knot.
pub fn torus_ahat_degrees(p: i64, q: i64) -> Result<AhatDegrees> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::Domain(format!("({p},{q}) is not a torus knot type")));
    }
    let deg_l = (p - 1) * (q - 1) / 2;
    Ok(AhatDegrees {
        deg_m: (p * q * deg_l) as u64,
        deg_l: deg_l as u64,
    })
}

/// Which pair of table columns a computed degree pair was compared with.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeSource {
    /// The Â columns of a starred row.
    Ahat,
    /// The A columns, which equal Â when no Â columns are given.
    A,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableDegrees {
    pub deg_m_a: u64,
    pub deg_l_a: u64,
    pub deg_m_ahat: Option<u64>,
    pub deg_l_ahat: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeReport {
    pub computed: AhatDegrees,
    pub expected: AhatDegrees,
    pub source: DegreeSource,
    pub deg_m_ok: bool,
    pub deg_l_ok: bool,
}

impl DegreeReport {
    pub fn consistent(&self) -> bool {
        self.deg_m_ok && self.deg_l_ok
    }
}

pub fn degree_consistency_with(computed: AhatDegrees, row: &TableDegrees) -> DegreeReport {
    let (expected, source) = match (row.deg_m_ahat, row.deg_l_ahat) {
        (Some(deg_m), Some(deg_l)) => (AhatDegrees { deg_m, deg_l }, DegreeSource::Ahat),
        _ => (
            AhatDegrees {
                deg_m: row.deg_m_a,
                deg_l: row.deg_l_a,
            },
            DegreeSource::A,
        ),
    };
    DegreeReport {
        computed,
        expected,
        source,
        deg_m_ok: computed.deg_m == expected.deg_m,
        deg_l_ok: computed.deg_l == expected.deg_l,
    }
}

pub fn degree_consistency(k: &TwoBridgeKnot, row: &TableDegrees) -> DegreeReport {
    degree_consistency_with(ahat_degrees(k), row)
}
