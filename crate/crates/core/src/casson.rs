//! The surgery formula for the SL(2,ℂ) Casson invariant of two-bridge knot
//! surgeries, exceptional slopes and the knot invariant `λ′`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alexander::{admissible_alexander_with, alexander, AlexanderData};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::knot::{DoubleTwistKnot, KnotKind, Slope, TwoBridgeKnot};
use crate::seminorm::{ClosedFormKnot, SeminormTable};
use crate::surfaces::{all_surfaces, SurfaceDatum};

/// `(E₀, E₁) = (0, (α-1)/4)`.
pub fn correction_terms(k: &TwoBridgeKnot) -> (Rational, Rational) {
    correction_terms_alpha(k.alpha())
}

fn correction_terms_alpha(alpha: i64) -> (Rational, Rational) {
    (
        Rational::zero(),
        Rational::new(alpha - 1, 4).expect("nonzero denominator"),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(p: i64) -> Self {
        if p % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    No,
    Yes,
    Unknown,
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strictness::No => "no",
            Strictness::Yes => "yes",
            Strictness::Unknown => "unknown",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub is_boundary_slope: bool,
    pub is_strict_boundary_slope: Strictness,
    pub alexander_ok: bool,
    /// Every slope of a two-bridge knot is regular.
    pub regular: bool,
    pub admissible: bool,
    /// Whether the strictness verdict relied on fiberedness, which is read
    /// off the Alexander polynomial.
    pub used_fiberedness: bool,
}

/// Precomputed data about one knot, for repeated slope queries.
#[derive(Clone, Debug)]
pub struct KnotData {
    pub knot: TwoBridgeKnot,
    pub surfaces: Vec<SurfaceDatum>,
    pub table: SeminormTable,
    pub alexander: AlexanderData,
}

impl KnotData {
    pub fn new(knot: TwoBridgeKnot) -> Self {
        let surfaces = all_surfaces(&knot);
        let table = SeminormTable::from_surfaces(knot, &surfaces);
        KnotData {
            knot,
            surfaces,
            table,
            alexander: alexander(&knot),
        }
    }

    pub fn admissibility(&self, s: &Slope) -> AdmissibilityReport {
        let realizing: Vec<&SurfaceDatum> = match s.as_integer() {
            Some(n) => self.surfaces.iter().filter(|d| d.boundary_slope == n).collect(),
            None => Vec::new(),
        };
        let is_boundary_slope = !realizing.is_empty();
        let fibered = self.alexander.is_monic;
        let (strict, used_fiberedness) = if !is_boundary_slope {
            (Strictness::No, false)
        } else {
            let by_seifert = realizing.iter().any(|d| d.is_seifert);
            let by_other = realizing.iter().any(|d| !d.is_seifert);
            if !by_seifert {
                (Strictness::Yes, false)
            } else if !fibered {
                (Strictness::Yes, true)
            } else if by_other {
                (Strictness::Unknown, true)
            } else {
                (Strictness::No, true)
            }
        };
        let alexander_ok = admissible_alexander_with(&self.alexander, s);
        AdmissibilityReport {
            is_boundary_slope,
            is_strict_boundary_slope: strict,
            alexander_ok,
            regular: true,
            admissible: alexander_ok && strict == Strictness::No,
            used_fiberedness,
        }
    }

    /// `½‖p/q‖_T - E_σ(p)` on a raw integer pair.
    pub fn formula_value_pair(&self, p: i64, q: i64) -> Rational {
        let (e0, e1) = correction_terms(&self.knot);
        let e = match Parity::of(p) {
            Parity::Even => e0,
            Parity::Odd => e1,
        };
        self.table.eval_pair(p, q).half() - e
    }

    pub fn casson(&self, s: &Slope) -> CassonResult {
        let seminorm_value = self.table.eval(s);
        CassonResult::assemble(self.knot.alpha(), s, seminorm_value, self.admissibility(s))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CassonResult {
    pub value: Rational,
    pub seminorm_value: Rational,
    pub correction: Rational,
    pub p_parity: Parity,
    pub diagnostics: AdmissibilityReport,
}

impl CassonResult {
    fn assemble(alpha: i64, s: &Slope, seminorm_value: Rational, diagnostics: AdmissibilityReport) -> Self {
        let (e0, e1) = correction_terms_alpha(alpha);
        let p_parity = Parity::of(s.p());
        let correction = match p_parity {
            Parity::Even => e0,
            Parity::Odd => e1,
        };
        CassonResult {
            value: seminorm_value.half() - correction.clone(),
            seminorm_value,
            correction,
            p_parity,
            diagnostics,
        }
    }

    /// False when the value is only the formula's output and the theorem
    /// does not apply to this slope.
    pub fn applicable(&self) -> bool {
        self.diagnostics.admissible
    }
}

pub fn admissibility(k: &TwoBridgeKnot, s: &Slope) -> AdmissibilityReport {
    KnotData::new(*k).admissibility(s)
}

pub fn casson_invariant(k: &TwoBridgeKnot, s: &Slope) -> CassonResult {
    KnotData::new(*k).casson(s)
}

/// The same value as [`casson_invariant`], with the seminorm taken from the
/// double twist closed forms instead of surface enumeration.
pub fn casson_double_twist(j: &DoubleTwistKnot, s: &Slope) -> Result<CassonResult> {
    let form = ClosedFormKnot::from_double_twist(j)?;
    let k = j.to_two_bridge()?;
    Ok(CassonResult::assemble(
        form.alpha(),
        s,
        form.seminorm(s),
        admissibility(&k, s),
    ))
}

/// `λ′(K) = ½‖0/1‖_T`.
pub fn lambda_prime(k: &TwoBridgeKnot) -> Rational {
    SeminormTable::from_surfaces(*k, &all_surfaces(k)).eval(&Slope::integral(0)).half()
}

/// Exceptional set of one presentation `J(ℓ, ∓m)`; `opposite` selects
/// `J(ℓ,-m)` (α = ℓm+1) over `J(ℓ,m)` (α = ℓm-1).
fn presentation_exceptional(l: i64, m: i64, opposite: bool) -> Option<Vec<i64>> {
    if opposite && l == 2 && m == 2 {
        Some(vec![4, -4])
    } else if m == 2 && l > 2 && l % 2 == 0 {
        Some(vec![if opposite { 4 } else { -4 }])
    } else if l > 2 && m > 2 {
        if l % 2 == 0 && m % 2 == 0 {
            Some(vec![0])
        } else if l % 2 == 1 {
            Some(vec![if opposite { -2 * m } else { 2 * m }])
        } else {
            Some(vec![2 * l])
        }
    } else {
        None
    }
}

/// The set `ℰ_K` of integral slopes excluded from the nontriviality theorem.
///
/// A knot may have several double twist presentations among the
/// representatives `β, β⁻¹, α-β, α-β⁻¹`; the sets of all of them are merged.
pub fn exceptional_slopes(k: &TwoBridgeKnot) -> BTreeSet<i64> {
    let a = k.alpha();
    let bi = k.beta_inverse();
    let reps = [(k.beta(), false), (bi, false), (a - k.beta(), true), (a - bi, true)];
    let mut out = BTreeSet::new();
    for (m, mirrored) in reps {
        if m < 2 {
            continue;
        }
        for opposite in [true, false] {
            let num = if opposite { a - 1 } else { a + 1 };
            if num % m != 0 || num / m < 2 {
                continue;
            }
            if let Some(set) = presentation_exceptional(num / m, m, opposite) {
                out.extend(set.into_iter().map(|e| if mirrored { -e } else { e }));
            }
        }
    }
    out
}

pub fn exceptional_slopes_double_twist(j: &DoubleTwistKnot) -> Result<BTreeSet<i64>> {
    Ok(exceptional_slopes(&j.to_two_bridge()?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nontriviality {
    Positive,
    ExcludedSlope,
    Meridian,
}

impl fmt::Display for Nontriviality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Nontriviality::Positive => "positive",
            Nontriviality::ExcludedSlope => "excluded_slope",
            Nontriviality::Meridian => "meridian",
        })
    }
}

/// Classifies a slope of a hyperbolic two-bridge knot under the nontriviality
/// theorem.
///
/// # Panics
///
/// If the slope is admissible, outside `ℰ_K`, and the formula value is not
/// positive, which would contradict the theorem.
pub fn nontriviality(k: &TwoBridgeKnot, s: &Slope) -> Result<Nontriviality> {
    if k.classify() == KnotKind::Torus {
        return Err(Error::Domain(format!("{k} is a torus knot")));
    }
    if s.is_meridian() {
        return Ok(Nontriviality::Meridian);
    }
    if s.as_integer().is_some_and(|n| exceptional_slopes(k).contains(&n)) {
        return Ok(Nontriviality::ExcludedSlope);
    }
    let r = casson_invariant(k, s);
    if r.applicable() {
        assert!(r.value.is_positive(), "λ = {} ≤ 0 for {k} at {s}", r.value);
    }
    Ok(Nontriviality::Positive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::knot::from_double_twist;

    fn k(a: i64, b: i64) -> TwoBridgeKnot {
        TwoBridgeKnot::normalize(a, b).unwrap()
    }

    fn j(l: i64, m: i64) -> DoubleTwistKnot {
        DoubleTwistKnot::new(l, m).unwrap()
    }

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn correction_examples() {
        assert_eq!(correction_terms(&k(3, 1)), (Rational::zero(), rat(1, 2).unwrap()));
        assert_eq!(correction_terms(&k(15, 11)).1, rat(7, 2).unwrap());
        assert_eq!(correction_terms(&k(27, 10)).1, rat(13, 2).unwrap());
    }

    #[test]
    fn admissibility_examples() {
        let r = admissibility(&k(5, 2), &sl(4, 1));
        assert!(r.is_boundary_slope);
        assert_eq!(r.is_strict_boundary_slope, Strictness::Yes);
        assert!(!r.admissible);

        let r = admissibility(&k(5, 2), &sl(0, 1));
        assert!(r.is_boundary_slope);
        assert_eq!(r.is_strict_boundary_slope, Strictness::No);
        assert!(r.alexander_ok && r.admissible);

        let r = admissibility(&k(3, 1), &sl(5, 1));
        assert!(!r.is_boundary_slope && r.admissible && r.regular);
    }

    #[test]
    fn casson_examples() {
        assert_eq!(casson_invariant(&k(3, 1), &sl(1, 1)).value, Rational::from(2));
        assert_eq!(casson_invariant(&k(5, 2), &sl(0, 1)).value, Rational::from(4));
        assert_eq!(casson_invariant(&k(27, 10), &sl(1, 2)).value, Rational::from(70));
        assert_eq!(casson_invariant(&k(5, 2), &sl(1, 1)).value, Rational::from(3));
    }

    #[test]
    fn result_is_rederivable() {
        for kn in TwoBridgeKnot::all_up_to(25) {
            let d = KnotData::new(kn);
            for (p, q) in [(1, 0), (0, 1), (3, 2), (-7, 3), (10, 1)] {
                let r = d.casson(&sl(p, q));
                assert_eq!(r.value.clone() + r.correction.clone(), r.seminorm_value.half());
                if r.applicable() {
                    assert!(!r.value.is_negative());
                }
            }
        }
    }

    #[test]
    fn meridian_is_zero() {
        for kn in TwoBridgeKnot::all_up_to(99) {
            assert!(casson_invariant(&kn, &Slope::MERIDIAN).value.is_zero(), "{kn}");
        }
    }

    #[test]
    fn double_twist_examples() {
        assert_eq!(casson_double_twist(&j(2, -2), &sl(0, 1)).unwrap().value, Rational::from(4));
        assert_eq!(
            casson_double_twist(&j(2, 2), &sl(1, 1)).unwrap(),
            casson_invariant(&k(3, 2), &sl(1, 1))
        );
        assert_eq!(
            casson_double_twist(&j(4, 4), &sl(2, 1)).unwrap(),
            casson_invariant(&k(15, 4), &sl(2, 1))
        );
    }

    #[test]
    fn double_twist_agrees_with_enumeration() {
        for l in 2..=8 {
            for m in 2..=8 {
                for (sl_, sm) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let Ok(jj) = DoubleTwistKnot::new(sl_ * l, sm * m) else {
                        continue;
                    };
                    let d = KnotData::new(from_double_twist(&jj).unwrap());
                    for (p, q) in [(0, 1), (1, 0), (1, 1), (-3, 2), (7, 5), (20, 1), (-19, 20)] {
                        let s = sl(p, q);
                        assert_eq!(casson_double_twist(&jj, &s).unwrap(), d.casson(&s), "{jj} {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_examples() {
        assert_eq!(exceptional_slopes(&k(5, 2)), BTreeSet::from([-4, 4]));
        assert_eq!(exceptional_slopes_double_twist(&j(2, -2)).unwrap(), BTreeSet::from([-4, 4]));
        assert_eq!(exceptional_slopes_double_twist(&j(4, 4)).unwrap(), BTreeSet::from([0]));
        assert_eq!(exceptional_slopes(&k(15, 11)), BTreeSet::from([0]));
        // K(13,3) = J(4,-3).
        assert_eq!(exceptional_slopes(&k(13, 3)), BTreeSet::from([8]));
        assert_eq!(exceptional_slopes(&k(7, 2)), BTreeSet::from([-4]));
        // J(ℓ,-2) gives {4}, J(ℓ,2) gives {-4} for even ℓ > 2.
        assert_eq!(exceptional_slopes_double_twist(&j(4, -2)).unwrap(), BTreeSet::from([4]));
        assert_eq!(exceptional_slopes_double_twist(&j(6, 2)).unwrap(), BTreeSet::from([-4]));
        // Twist knots with short continued fractions and non-double-twist knots.
        assert!(exceptional_slopes(&k(3, 1)).is_empty());
        assert!(exceptional_slopes(&k(27, 10)).is_empty());
    }

    #[test]
    fn exceptional_invariant_under_equivalence_and_mirror() {
        for kn in TwoBridgeKnot::all_up_to(45) {
            let e = exceptional_slopes(&kn);
            let inv = k(kn.alpha(), kn.beta_inverse());
            assert_eq!(exceptional_slopes(&inv), e, "{kn}");
            let neg: BTreeSet<i64> = e.iter().map(|x| -x).collect();
            assert_eq!(exceptional_slopes(&kn.mirror()), neg, "{kn}");
        }
    }

    #[test]
    fn nontriviality_examples() {
        assert_eq!(nontriviality(&k(5, 2), &sl(4, 1)).unwrap(), Nontriviality::ExcludedSlope);
        assert_eq!(nontriviality(&k(5, 2), &sl(1, 1)).unwrap(), Nontriviality::Positive);
        assert_eq!(nontriviality(&k(5, 2), &Slope::MERIDIAN).unwrap(), Nontriviality::Meridian);
        assert!(nontriviality(&k(3, 1), &sl(1, 1)).is_err());
    }

    #[test]
    fn lambda_prime_examples() {
        assert_eq!(lambda_prime(&k(3, 1)), Rational::from(3));
        assert_eq!(lambda_prime(&k(5, 1)), Rational::from(10));
        assert_eq!(lambda_prime(&k(5, 2)), Rational::from(4));
    }

    #[test]
    fn lambda_prime_is_stable_difference() {
        for kn in TwoBridgeKnot::all_up_to(21) {
            let d = KnotData::new(kn);
            let lp = lambda_prime(&kn);
            for p in -3..=3 {
                for q in 50..55 {
                    let diff = d.formula_value_pair(p, q + 1) - d.formula_value_pair(p, q);
                    assert_eq!(diff, lp, "{kn} p = {p} q = {q}");
                }
            }
        }
    }
}
