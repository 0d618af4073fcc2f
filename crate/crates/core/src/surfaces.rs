//! Incompressible surfaces in two-bridge knot complements.
//!
//! Every non-closed incompressible, ∂-incompressible surface corresponds to a
//! continued fraction expansion `[n₁,…,n_k]` with all `|nᵢ| ≥ 2` of either
//! `β/α` or `(β-α)/α`. Its boundary slope is `2[(n⁺-n⁻) - (n₀⁺-n₀⁻)]`, where the
//! counts compare the signs of the entries with the alternating pattern
//! `+,-,+,…` and the subscript 0 refers to the all-even (Seifert) expansion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;

/// A finite continued fraction `1/(n₁ + 1/(n₂ + ⋯ + 1/n_k))` with nonzero
/// entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ContinuedFraction(Vec<i64>);

impl ContinuedFraction {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidExpansion("empty expansion".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidExpansion(format!("{entries:?} has a zero entry")));
        }
        Ok(ContinuedFraction(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_even(&self) -> bool {
        self.0.iter().all(|n| n % 2 == 0)
    }

    /// `∏ (|nⱼ| - 1)`.
    pub fn weight_product(&self) -> u64 {
        self.0.iter().map(|n| n.unsigned_abs() - 1).product()
    }

    /// The expansion of the negated value.
    pub fn negated(&self) -> Self {
        ContinuedFraction(self.0.iter().map(|n| -n).collect())
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("]")
    }
}

/// Evaluates the nested fraction from the innermost term outwards.
pub fn cf_value(cf: &ContinuedFraction) -> Result<Rational> {
    let mut acc: Option<Rational> = None;
    for &n in cf.entries().iter().rev() {
        let denom = match acc {
            None => Rational::from(n),
            Some(tail) => Rational::from(n) + tail,
        };
        acc = Some(denom.recip().map_err(|_| {
            Error::InvalidExpansion(format!("{cf} has a vanishing intermediate denominator"))
        })?);
    }
    Ok(acc.expect("expansion is nonempty"))
}

fn check_range(r: &Rational) -> Result<()> {
    if r.is_zero() || r.abs() >= Rational::one() {
        return Err(Error::OutOfRange(r.to_string()));
    }
    Ok(())
}

fn small(n: &BigInt) -> i64 {
    n.to_i64().expect("continued fraction entry fits in i64")
}

/// All expansions of `r` with every `|nᵢ| ≥ 2`, in lexicographic order.
///
/// Writing `r = 1/(n₁ + s)` with the tail `s` in `(-1, 1)` forces
/// `n₁ ∈ {⌊1/r⌋, ⌈1/r⌉}`. A branch ends when `s = 0`; tails of absolute value
/// 1 cannot be expanded further with `|nᵢ| ≥ 2` and are pruned.
pub fn enumerate_expansions(r: &Rational) -> Result<Vec<ContinuedFraction>> {
    check_range(r)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    expand(r, &mut prefix, &mut out);
    out.sort();
    Ok(out)
}

fn expand(r: &Rational, prefix: &mut Vec<i64>, out: &mut Vec<ContinuedFraction>) {
    let inv = r.recip().expect("tail is nonzero");
    let lo = inv.floor();
    let hi = inv.ceil();
    let candidates: &[BigInt] = if lo == hi { &[lo][..] } else { &[lo, hi][..] };
    for n in candidates {
        if n.abs() < BigInt::from(2) {
            continue;
        }
        let tail = &inv - &Rational::from_integer(n.clone());
        prefix.push(small(n));
        if tail.is_zero() {
            out.push(ContinuedFraction(prefix.clone()));
        } else if tail.abs() < Rational::one() {
            expand(&tail, prefix, out);
        }
        prefix.pop();
    }
}

/// Greedy all-even expansion of `r`, choosing the even one of `⌊1/r⌋, ⌈1/r⌉`
/// at each step. `None` if the greedy walk reaches an odd integer.
fn even_expansion(r: &Rational) -> Option<ContinuedFraction> {
    let mut entries = Vec::new();
    let mut cur = r.clone();
    loop {
        let inv = cur.recip().ok()?;
        let lo = inv.floor();
        let n = if lo.is_even() { lo } else { inv.ceil() };
        if n.is_odd() {
            return None;
        }
        entries.push(small(&n));
        let tail = &inv - &Rational::from_integer(n);
        if tail.is_zero() {
            return Some(ContinuedFraction(entries));
        }
        cur = tail;
    }
}

/// The two fractions whose expansions index the surfaces of `K(α,β)`.
pub fn knot_fractions(k: &TwoBridgeKnot) -> [(FractionSource, Rational); 2] {
    let a = k.alpha();
    let b = k.beta();
    [
        (FractionSource::Beta, Rational::new(b, a).expect("alpha > 0")),
        (FractionSource::BetaMinusAlpha, Rational::new(b - a, a).expect("alpha > 0")),
    ]
}

/// The unique expansion with only even entries among the expansions of
/// `β/α` and `(β-α)/α`.
///
/// # Panics
///
/// If neither or both fractions admit an all-even expansion; this cannot
/// happen for a valid knot.
pub fn seifert_expansion(k: &TwoBridgeKnot) -> ContinuedFraction {
    let found: Vec<_> = knot_fractions(k)
        .iter()
        .filter_map(|(_, r)| even_expansion(r))
        .collect();
    assert_eq!(
        found.len(),
        1,
        "{k}: expected exactly one all-even expansion, found {found:?}"
    );
    found.into_iter().next().unwrap()
}

/// `(n⁺, n⁻)`: entries whose sign agrees with / differs from `(-1)^(i-1)`.
pub fn sign_pattern_counts(cf: &ContinuedFraction) -> (i64, i64) {
    let plus = cf
        .entries()
        .iter()
        .enumerate()
        .filter(|(i, n)| (**n > 0) == (i % 2 == 0))
        .count() as i64;
    (plus, cf.len() as i64 - plus)
}

/// `N = 2[(n⁺-n⁻) - (n₀⁺-n₀⁻)]`.
pub fn boundary_slope(cf: &ContinuedFraction, seifert: &ContinuedFraction) -> i64 {
    let (p, m) = sign_pattern_counts(cf);
    let (p0, m0) = sign_pattern_counts(seifert);
    2 * ((p - m) - (p0 - m0))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionSource {
    /// An expansion of `β/α`.
    Beta,
    /// An expansion of `(β-α)/α`.
    BetaMinusAlpha,
}

impl fmt::Display for FractionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FractionSource::Beta => "beta",
            FractionSource::BetaMinusAlpha => "beta_minus_alpha",
        })
    }
}

/// One incompressible surface.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SurfaceDatum {
    pub expansion: ContinuedFraction,
    pub source: FractionSource,
    pub boundary_slope: i64,
    /// Twice the seminorm weight: `∏(|nⱼ|-1)`, less one for the Seifert surface.
    pub doubled_weight: u64,
    pub is_seifert: bool,
}

impl SurfaceDatum {
    pub fn weight(&self) -> Rational {
        Rational::from(self.doubled_weight as i64).half()
    }
}

/// All surfaces of `K(α,β)`, ordered by boundary slope and then expansion.
pub fn all_surfaces(k: &TwoBridgeKnot) -> Vec<SurfaceDatum> {
    let seifert = seifert_expansion(k);
    let mut out = Vec::new();
    let mut seifert_hits = 0;
    for (source, r) in knot_fractions(k) {
        let expansions = enumerate_expansions(&r).expect("knot fractions lie in (-1, 1)");
        for cf in expansions {
            let is_seifert = cf.is_all_even();
            if is_seifert {
                assert_eq!(cf, seifert, "{k}: second all-even expansion {cf}");
                seifert_hits += 1;
            }
            let doubled_weight = cf.weight_product() - u64::from(is_seifert);
            out.push(SurfaceDatum {
                boundary_slope: boundary_slope(&cf, &seifert),
                expansion: cf,
                source,
                doubled_weight,
                is_seifert,
            });
        }
    }
    assert_eq!(seifert_hits, 1, "{k}: the Seifert expansion must occur exactly once");
    out.sort_by(|a, b| {
        a.boundary_slope
            .cmp(&b.boundary_slope)
            .then_with(|| a.expansion.cmp(&b.expansion))
    });
    out
}

/// `(boundary slope, doubled weight)` pairs, sorted.
pub fn slope_weight_multiset(surfaces: &[SurfaceDatum]) -> Vec<(i64, u64)> {
    let mut v: Vec<_> = surfaces
        .iter()
        .map(|s| (s.boundary_slope, s.doubled_weight))
        .collect();
    v.sort_unstable();
    v
}
