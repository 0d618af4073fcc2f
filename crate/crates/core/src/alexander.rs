//! Alexander polynomials of two-bridge knots via Fox calculus.
//!
//! The knot group of `K(α,β)` has the presentation `⟨x, y | x w = w y⟩` with
//! `w = y^ε₁ x^ε₂ ⋯ y^ε_{α-2} x^ε_{α-1}`. For a two-generator one-relator
//! knot group the free derivative `∂r/∂x` of `r = x w y⁻¹ w⁻¹`, abelianized by
//! `x, y ↦ t`, already generates the first elementary ideal, so it equals
//! `Δ_K(t)` up to a unit `±tᵏ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{has_root_of_unity_root, IntPoly};
use crate::knot::{Slope, TwoBridgeKnot};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Gen {
    X,
    Y,
}

/// Relator letters `(generator, ±1)` of `x w y⁻¹ w⁻¹`.
fn relator(k: &TwoBridgeKnot) -> Vec<(Gen, i8)> {
    let w: Vec<(Gen, i8)> = k
        .epsilons()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (if i % 2 == 0 { Gen::Y } else { Gen::X }, e))
        .collect();
    let mut r = Vec::with_capacity(2 * w.len() + 2);
    r.push((Gen::X, 1));
    r.extend(w.iter().copied());
    r.push((Gen::Y, -1));
    r.extend(w.iter().rev().map(|&(g, e)| (g, -e)));
    r
}

/// Abelianized `∂r/∂x` as a Laurent polynomial `{exponent: coefficient}`.
fn fox_derivative_x(letters: &[(Gen, i8)]) -> BTreeMap<i64, BigInt> {
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut prefix_exp = 0i64;
    for &(g, e) in letters {
        if g == Gen::X {
            // ∂x/∂x = 1, ∂x⁻¹/∂x = -x⁻¹.
            let (exp, c) = if e > 0 {
                (prefix_exp, 1)
            } else {
                (prefix_exp - 1, -1)
            };
            *out.entry(exp).or_insert_with(BigInt::zero) += c;
        }
        prefix_exp += i64::from(e);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn laurent_to_poly(l: &BTreeMap<i64, BigInt>) -> IntPoly {
    let Some((&lo, _)) = l.iter().next() else {
        return IntPoly::zero();
    };
    let hi = *l.keys().next_back().unwrap();
    let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, v) in l {
        c[(e - lo) as usize] = v.clone();
    }
    IntPoly::new(c)
}

/// `Δ_K(t)` with the power of `t` cleared and a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlexanderData {
    #[serde(serialize_with = "ser_poly", deserialize_with = "de_poly")]
    pub delta: IntPoly,
    pub is_monic: bool,
}

fn ser_poly<S: serde::Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        seq.serialize_element(&c.to_string().parse::<i64>().map_err(serde::ser::Error::custom)?)?;
    }
    seq.end()
}

fn de_poly<'de, D: serde::Deserializer<'de>>(d: D) -> Result<IntPoly, D::Error> {
    let v: Vec<i64> = Vec::deserialize(d)?;
    Ok(IntPoly::new(v))
}

impl AlexanderData {
    pub fn degree(&self) -> usize {
        self.delta.degree().unwrap_or(0)
    }

    /// Orders `n` of the roots of unity that are roots of `Δ`, i.e. the `n`
    /// for which the cyclotomic polynomial `Φₙ` divides `Δ`.
    pub fn root_of_unity_orders(&self) -> Vec<usize> {
        let d = self.degree();
        // φ(n) ≥ √(n/2), so φ(n) ≤ d forces n ≤ 2d².
        let bound = 2 * d * d + 2;
        (1..=bound)
            .filter(|&n| totient(n) <= d)
            .filter(|&n| self.delta.div_exact(&cyclotomic(n)).is_some())
            .collect()
    }
}

fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(n: usize) -> i8 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// The cyclotomic polynomial `Φₙ = ∏_{e | n} (tᵉ - 1)^μ(n/e)`.
pub fn cyclotomic(n: usize) -> IntPoly {
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for e in (1..=n).filter(|e| n.is_multiple_of(*e)) {
        match mobius(n / e) {
            1 => num = &num * &IntPoly::cyclotomic_multiple(e),
            -1 => den = &den * &IntPoly::cyclotomic_multiple(e),
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic quotient is exact")
}

/// The Alexander polynomial of `K(α,β)`.
///
/// # Panics
///
/// If the result fails `Δ(1) = ±1`, which would indicate a broken presentation.
pub fn alexander(k: &TwoBridgeKnot) -> AlexanderData {
    let poly = laurent_to_poly(&fox_derivative_x(&relator(k)));
    let poly = if poly.leading().is_some_and(Signed::is_negative) {
        poly.scale(&BigInt::from(-1))
    } else {
        poly
    };
    let at_one = poly.eval(&BigInt::one());
    assert!(at_one.abs().is_one(), "{k}: Δ(1) = {at_one}");
    let is_monic = poly.leading().is_some_and(|c| c.abs().is_one());
    AlexanderData {
        delta: poly,
        is_monic,
    }
}

/// `p'` of the admissibility condition: `|p|` for odd `p`, `|p|/2` for even `p`.
pub fn reduced_order(p: i64) -> u64 {
    let a = p.unsigned_abs();
    if a.is_multiple_of(2) {
        a / 2
    } else {
        a
    }
}

/// Whether no `p'`-th root of unity is a root of `Δ_K`. For `p = 0` the
/// condition is read as "no root of unity at all".
pub fn admissible_alexander_with(data: &AlexanderData, s: &Slope) -> bool {
    match reduced_order(s.p()) {
        0 => data.root_of_unity_orders().is_empty(),
        1 => true,
        n => !has_root_of_unity_root(&data.delta, n as usize).expect("Δ is nonzero"),
    }
}

pub fn admissible_alexander(k: &TwoBridgeKnot, s: &Slope) -> bool {
    admissible_alexander_with(&alexander(k), s)
}

/// Fibered iff `Δ` is monic, which characterizes fibered alternating knots.
pub fn is_fibered(k: &TwoBridgeKnot) -> bool {
    alexander(k).is_monic
}
