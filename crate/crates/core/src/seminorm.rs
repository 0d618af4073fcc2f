//! The total Culler–Shalen seminorm `‖p/q‖_T` of a two-bridge knot.
//!
//! `‖p/q‖_T = ½ Σ w·|p - N q|`, summed over boundary slopes `N` with doubled
//! weights `w`. The Seifert surface's weight is reduced by one half at build
//! time, which accounts for the `-|p|` term of the surface sum.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::Result;
use crate::knot::{DoubleTwistKnot, Slope, TwistCase, TwoBridgeKnot};
use crate::surfaces::{all_surfaces, SurfaceDatum};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SeminormTerm {
    pub boundary_slope: i64,
    pub doubled_weight: u64,
}

/// The seminorm as a weighted sum over distinct boundary slopes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeminormTable {
    pub knot: TwoBridgeKnot,
    pub alpha: i64,
    /// Sorted by boundary slope; one term per distinct slope.
    pub terms: Vec<SeminormTerm>,
}

impl SeminormTable {
    /// Aggregates per-surface data into one term per slope.
    pub fn from_surfaces(knot: TwoBridgeKnot, surfaces: &[SurfaceDatum]) -> Self {
        let mut by_slope: BTreeMap<i64, u64> = BTreeMap::new();
        for s in surfaces {
            *by_slope.entry(s.boundary_slope).or_default() += s.doubled_weight;
        }
        let table = SeminormTable {
            knot,
            alpha: knot.alpha(),
            terms: by_slope
                .into_iter()
                .map(|(boundary_slope, doubled_weight)| SeminormTerm {
                    boundary_slope,
                    doubled_weight,
                })
                .collect(),
        };
        debug_assert_eq!(table.total_doubled_weight(), (knot.alpha() - 1) as u64);
        table
    }

    pub fn total_doubled_weight(&self) -> u64 {
        self.terms.iter().map(|t| t.doubled_weight).sum()
    }

    /// `2‖p/q‖_T` on an arbitrary integer pair; the seminorm is homogeneous,
    /// so `(p,q)` need not be coprime.
    pub fn doubled_at(&self, p: i64, q: i64) -> i128 {
        self.terms
            .iter()
            .map(|t| {
                let d = i128::from(p) - i128::from(t.boundary_slope) * i128::from(q);
                i128::from(t.doubled_weight) * d.abs()
            })
            .sum()
    }

    /// `‖p/q‖_T` on an arbitrary integer pair.
    pub fn eval_pair(&self, p: i64, q: i64) -> Rational {
        Rational::from_integer(self.doubled_at(p, q)).half()
    }

    pub fn eval(&self, s: &Slope) -> Rational {
        self.eval_pair(s.p(), s.q())
    }

    /// The term list with effective weights, e.g. `2|p| + 3|p + 4q| + …`.
    pub fn display_formula(&self) -> String {
        let mut parts = Vec::new();
        for t in self.terms.iter().filter(|t| t.doubled_weight > 0) {
            let w = Rational::from(t.doubled_weight as i64).half();
            let inner = match t.boundary_slope {
                0 => "|p|".to_string(),
                n if n < 0 => format!("|p + {}q|", -n),
                n => format!("|p - {n}q|"),
            };
            let coeff = if w == Rational::one() { String::new() } else { format!("{w}") };
            parts.push(format!("{coeff}{inner}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// A norm (vanishing only at the origin) iff at least two distinct slopes
    /// carry positive weight.
    pub fn is_norm(&self) -> bool {
        self.terms.iter().filter(|t| t.doubled_weight > 0).count() >= 2
    }
}

pub fn build_table(k: &TwoBridgeKnot) -> SeminormTable {
    SeminormTable::from_surfaces(*k, &all_surfaces(k))
}

pub fn eval_seminorm(t: &SeminormTable, s: &Slope) -> Rational {
    t.eval(s)
}

pub fn is_norm(t: &SeminormTable) -> bool {
    t.is_norm()
}

/// A double twist knot brought to a family covered by the closed-form
/// seminorm: `J(ℓ,-m)` with `ℓ,m ≥ 1` or `J(ℓ,m)` with `ℓ,m ≥ 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClosedFormKnot {
    pub l: i64,
    pub m: i64,
    pub case: TwistCase,
    /// The original knot is the mirror of this normal form, so its slopes
    /// are the negatives.
    pub mirrored: bool,
}

impl ClosedFormKnot {
    pub fn from_double_twist(j: &DoubleTwistKnot) -> Result<Self> {
        j.to_two_bridge()?;
        let nf = j.normal_form();
        let mut form = ClosedFormKnot {
            l: nf.l,
            m: nf.m,
            case: nf.case,
            mirrored: nf.mirrored,
        };
        if form.case == TwistCase::Same && (form.l == 1 || form.m == 1) {
            // J(1,m) = J(m,1) is the mirror of J(1, 2-m) = J(1, -(m-2)).
            let other = if form.l == 1 { form.m } else { form.l };
            form = ClosedFormKnot {
                l: 1,
                m: other - 2,
                case: TwistCase::Opposite,
                mirrored: !form.mirrored,
            };
        }
        Ok(form)
    }

    pub fn alpha(&self) -> i64 {
        match self.case {
            TwistCase::Opposite => self.l * self.m + 1,
            TwistCase::Same => self.l * self.m - 1,
        }
    }

    /// `2‖p/q‖_T` of the normal form itself, from the closed-form case split on
    /// the parities of `ℓ` and `m`.
    pub fn doubled_seminorm_normal(&self, p: i64, q: i64) -> i128 {
        let (l, m, p, q) = (
            i128::from(self.l),
            i128::from(self.m),
            i128::from(p),
            i128::from(q),
        );
        let l_odd = l % 2 != 0;
        let m_odd = m % 2 != 0;
        match self.case {
            TwistCase::Opposite => {
                if !l_odd && !m_odd {
                    (l * m - l - m) * p.abs() + l * (p - 2 * m * q).abs() + m * (p + 2 * l * q).abs()
                } else if l_odd {
                    (l - 1) * (m - 1) * (p + 2 * m * q).abs()
                        + (l - 1) * p.abs()
                        + m * (p + 2 * (l + m) * q).abs()
                } else {
                    (l - 1) * (m - 1) * (p - 2 * l * q).abs()
                        + l * (p - 2 * (l + m) * q).abs()
                        + (m - 1) * p.abs()
                }
            }
            TwistCase::Same => {
                if !l_odd && !m_odd {
                    (l * m - l - m) * p.abs()
                        + (l - 2) * (p + 2 * m * q).abs()
                        + (m - 2) * (p + 2 * l * q).abs()
                        + 2 * (p + 2 * (l + m - 1) * q).abs()
                } else if l_odd {
                    (l - 1) * (m - 1) * (p - 2 * m * q).abs()
                        + (l - 3) * p.abs()
                        + (m - 2) * (p + 2 * (l - m) * q).abs()
                        + 2 * (p + 2 * (l - 1) * q).abs()
                } else {
                    (l - 1) * (m - 1) * (p - 2 * l * q).abs()
                        + (l - 2) * (p + 2 * (m - l) * q).abs()
                        + (m - 3) * p.abs()
                        + 2 * (p + 2 * (m - 1) * q).abs()
                }
            }
        }
    }

    /// `2‖p/q‖_T` of the original double twist knot.
    pub fn doubled_seminorm(&self, p: i64, q: i64) -> i128 {
        if self.mirrored {
            self.doubled_seminorm_normal(-p, q)
        } else {
            self.doubled_seminorm_normal(p, q)
        }
    }

    pub fn seminorm(&self, s: &Slope) -> Rational {
        Rational::from_integer(self.doubled_seminorm(s.p(), s.q())).half()
    }
}

/// `‖p/q‖_T` of `J(ℓ,m)` from the closed forms.
pub fn double_twist_seminorm(j: &DoubleTwistKnot, s: &Slope) -> Result<Rational> {
    Ok(ClosedFormKnot::from_double_twist(j)?.seminorm(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn k(a: i64, b: i64) -> TwoBridgeKnot {
        TwoBridgeKnot::normalize(a, b).unwrap()
    }

    fn terms(t: &SeminormTable) -> Vec<(i64, u64)> {
        t.terms.iter().map(|x| (x.boundary_slope, x.doubled_weight)).collect()
    }

    #[test]
    fn table_examples() {
        assert_eq!(terms(&build_table(&k(27, 10))), vec![(-4, 6), (0, 4), (6, 10), (12, 6)]);
        assert_eq!(terms(&build_table(&k(3, 1))), vec![(0, 0), (6, 2)]);
        // K(15,4) carries the negatives of the 7₄ slopes quoted for K(15,11).
        assert_eq!(terms(&build_table(&k(15, 4))), vec![(-14, 2), (-8, 4), (0, 8)]);
        assert_eq!(terms(&build_table(&k(15, 11))), vec![(0, 8), (8, 4), (14, 2)]);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(build_table(&k(3, 1)).eval(&Slope::MERIDIAN), rat(1, 1).unwrap());
        let t = build_table(&k(27, 10));
        assert_eq!(t.eval(&Slope::new(1, 2).unwrap()), rat(153, 1).unwrap());
        assert_eq!(build_table(&k(5, 2)).eval(&Slope::integral(0)), rat(8, 1).unwrap());
        assert_eq!(t.display_formula(), "3|p + 4q| + 2|p| + 5|p - 6q| + 3|p - 12q|");
    }

    /// Oracle: the published 8₁₁ formula `2|p| + 3|p + 4q| + 5|p - 6q| + 3|p - 12q|`.
    #[test]
    fn eight_eleven_matches_published_formula() {
        let t = build_table(&k(27, 10));
        for p in -30i64..=30 {
            for q in 0i64..=10 {
                let oracle = 2 * p.abs() + 3 * (p + 4 * q).abs() + 5 * (p - 6 * q).abs() + 3 * (p - 12 * q).abs();
                assert_eq!(t.eval_pair(p, q), Rational::from(oracle), "({p},{q})");
            }
        }
    }

    #[test]
    fn norm_examples() {
        assert!(!build_table(&k(3, 1)).is_norm());
        assert!(build_table(&k(5, 2)).is_norm());
        assert!(build_table(&k(27, 10)).is_norm());
        // 6/1 is in the kernel of the trefoil seminorm.
        assert!(build_table(&k(3, 1)).eval(&Slope::integral(6)).is_zero());
    }

    #[test]
    fn meridian_value_and_mirror_law() {
        for kn in TwoBridgeKnot::all_up_to(99) {
            let t = build_table(&kn);
            assert_eq!(t.total_doubled_weight(), (kn.alpha() - 1) as u64, "{kn}");
            assert_eq!(t.eval(&Slope::MERIDIAN), Rational::from((kn.alpha() - 1) / 2), "{kn}");
            let tm = build_table(&kn.mirror());
            for (p, q) in [(0, 1), (1, 1), (3, 2), (-5, 3), (7, 4)] {
                assert_eq!(tm.eval_pair(p, q), t.eval_pair(-p, q), "{kn} {p}/{q}");
            }
        }
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for l in 2..=8 {
            for m in 2..=8 {
                if l % 2 != 0 && m % 2 != 0 {
                    continue;
                }
                for (ll, mm) in [(l, -m), (l, m), (-l, m), (-l, -m)] {
                    let j = DoubleTwistKnot::new(ll, mm).unwrap();
                    let form = ClosedFormKnot::from_double_twist(&j).unwrap();
                    let t = build_table(&j.to_two_bridge().unwrap());
                    for p in -20..=20 {
                        for q in 0..=20 {
                            assert_eq!(form.doubled_seminorm(p, q), t.doubled_at(p, q), "{j} {p}/{q}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torus_double_twists_use_the_first_family() {
        // J(1,-4) = K(5,4) and J(1,4) = J(4,1) = K(3,·), both torus knots.
        for (l, m) in [(1, -4), (1, 4), (4, 1), (1, -2), (-1, 6)] {
            let j = DoubleTwistKnot::new(l, m).unwrap();
            let form = ClosedFormKnot::from_double_twist(&j).unwrap();
            let t = build_table(&j.to_two_bridge().unwrap());
            for p in -12..=12 {
                for q in 0..=6 {
                    assert_eq!(form.doubled_seminorm(p, q), t.doubled_at(p, q), "{j} {p}/{q}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn homogeneity_and_triangle_inequality(
            idx in 0usize..200,
            p1 in -40i64..40, q1 in -40i64..40,
            p2 in -40i64..40, q2 in -40i64..40,
            a in -9i64..9,
        ) {
            let knots: Vec<_> = TwoBridgeKnot::all_up_to(31).collect();
            let t = build_table(&knots[idx % knots.len()]);
            prop_assert_eq!(t.doubled_at(a * p1, a * q1), i128::from(a.abs()) * t.doubled_at(p1, q1));
            prop_assert!(t.doubled_at(p1 + p2, q1 + q2) <= t.doubled_at(p1, q1) + t.doubled_at(p2, q2));
        }
    }
}
