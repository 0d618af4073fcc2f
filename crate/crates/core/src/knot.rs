//! Two-bridge knots `K(α,β)`, double twist knots `J(ℓ,m)` and surgery slopes.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two-bridge knot `K(α,β)` with `α ≥ 3` odd, `0 < β < α` and
/// `gcd(α,β) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct TwoBridgeKnot {
    alpha: i64,
    beta: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KnotKind {
    Torus,
    Hyperbolic,
}

impl fmt::Display for KnotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnotKind::Torus => "torus",
            KnotKind::Hyperbolic => "hyperbolic",
        })
    }
}

impl TwoBridgeKnot {
    /// Validates `(α, β)` and reduces `β` into `(0, α)`.
    pub fn normalize(alpha: i64, beta: i64) -> Result<Self> {
        let invalid = |reason| Error::InvalidKnot { alpha, beta, reason };
        if alpha < 3 {
            return Err(invalid("alpha must be at least 3"));
        }
        if alpha % 2 == 0 {
            return Err(invalid("alpha must be odd"));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(invalid("alpha and beta must be coprime"));
        }
        Ok(TwoBridgeKnot {
            alpha,
            beta: beta.rem_euclid(alpha),
        })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// `β⁻¹ mod α`, in `(0, α)`.
    pub fn beta_inverse(&self) -> i64 {
        mod_inverse(self.beta, self.alpha).expect("beta is a unit mod alpha")
    }

    /// The mirror image `K(α, α-β)`.
    pub fn mirror(&self) -> Self {
        TwoBridgeKnot {
            alpha: self.alpha,
            beta: self.alpha - self.beta,
        }
    }

    /// `K(α,β) ≅ K(α',β')` iff `α = α'` and `β' ≡ β^{±1} (mod α)`.
    pub fn is_equivalent(&self, other: &TwoBridgeKnot) -> bool {
        self.alpha == other.alpha
            && (other.beta == self.beta || other.beta == self.beta_inverse())
    }

    /// The canonical representative of the equivalence class: the smaller of
    /// `β` and `β⁻¹`.
    pub fn canonical(&self) -> Self {
        TwoBridgeKnot {
            alpha: self.alpha,
            beta: self.beta.min(self.beta_inverse()),
        }
    }

    /// Torus knots among two-bridge knots are exactly the `(2,α)` torus knots
    /// `K(α, ±1)`; every other two-bridge knot is hyperbolic.
    pub fn classify(&self) -> KnotKind {
        if self.beta == 1 || self.beta == self.alpha - 1 {
            KnotKind::Torus
        } else {
            KnotKind::Hyperbolic
        }
    }

    /// The exponent signs `ε_i = (-1)^⌊iβ/α⌋`, `i = 1..α-1`, of the
    /// presentation `⟨x, y | xw = wy⟩`. The presentation needs `β` odd, so an
    /// even `β` is replaced by `β - α`.
    pub fn epsilons(&self) -> Vec<i8> {
        let b = if self.beta % 2 == 1 { self.beta } else { self.beta - self.alpha };
        (1..self.alpha)
            .map(|i| {
                if (i * b).div_euclid(self.alpha) % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Every valid knot with the given `α`, one `β` per residue.
    pub fn all_with_alpha(alpha: i64) -> impl Iterator<Item = TwoBridgeKnot> {
        (1..alpha.max(1)).filter_map(move |b| TwoBridgeKnot::normalize(alpha, b).ok())
    }

    /// Every valid knot `K(α,β)` with `3 ≤ α ≤ max_alpha`, `0 < β < α`.
    pub fn all_up_to(max_alpha: i64) -> impl Iterator<Item = TwoBridgeKnot> {
        (3..=max_alpha)
            .step_by(2)
            .flat_map(TwoBridgeKnot::all_with_alpha)
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.alpha, self.beta)
    }
}

pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Which of the two double-twist families a normal form belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistCase {
    /// `J(ℓ,-m)`, `ℓ,m > 0`: the knot `K(ℓm+1, m)`.
    Opposite,
    /// `J(ℓ,m)`, `ℓ,m > 0`: the knot `K(ℓm-1, m)`.
    Same,
}

/// The double twist knot `J(ℓ,m)`: `ℓ` vertical and `m` horizontal half
/// twists. At least one of `ℓ, m` is even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DoubleTwistKnot {
    l: i64,
    m: i64,
}

/// `J(ℓ,±m)` with `ℓ, m > 0`, together with whether reaching it from the
/// original `J` required a mirror.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TwistNormalForm {
    pub l: i64,
    pub m: i64,
    pub case: TwistCase,
    pub mirrored: bool,
}

impl TwistNormalForm {
    /// The knot of the normal form itself (not accounting for `mirrored`).
    pub fn knot(&self) -> Result<TwoBridgeKnot> {
        let alpha = match self.case {
            TwistCase::Opposite => self.l * self.m + 1,
            TwistCase::Same => self.l * self.m - 1,
        };
        TwoBridgeKnot::normalize(alpha, self.m).map_err(|_| Error::InvalidDoubleTwist {
            l: self.l,
            m: self.signed_m(),
            reason: "does not give a nontrivial two-bridge knot",
        })
    }

    /// `m` with the sign it carries in `J(ℓ,±m)`.
    pub fn signed_m(&self) -> i64 {
        match self.case {
            TwistCase::Opposite => -self.m,
            TwistCase::Same => self.m,
        }
    }

    pub fn as_double_twist(&self) -> DoubleTwistKnot {
        DoubleTwistKnot {
            l: self.l,
            m: self.signed_m(),
        }
    }
}

impl DoubleTwistKnot {
    pub fn new(l: i64, m: i64) -> Result<Self> {
        if l == 0 || m == 0 {
            return Err(Error::InvalidDoubleTwist {
                l,
                m,
                reason: "J(0,m) and J(l,0) are unknots",
            });
        }
        if l % 2 != 0 && m % 2 != 0 {
            return Err(Error::InvalidDoubleTwist {
                l,
                m,
                reason: "both twist counts odd gives a two-component link",
            });
        }
        Ok(DoubleTwistKnot { l, m })
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Reduces to `J(ℓ,±m)` with `ℓ, m > 0` using `J(ℓ,m) = J(m,ℓ)` and the
    /// mirror `J(-ℓ,-m)`.
    pub fn normal_form(&self) -> TwistNormalForm {
        let (l, m) = (self.l, self.m);
        if l.signum() == m.signum() {
            TwistNormalForm {
                l: l.abs(),
                m: m.abs(),
                case: TwistCase::Same,
                mirrored: l < 0,
            }
        } else {
            // Put the positive entry first.
            let (pos, neg) = if l > 0 { (l, m) } else { (m, l) };
            TwistNormalForm {
                l: pos,
                m: -neg,
                case: TwistCase::Opposite,
                mirrored: false,
            }
        }
    }

    /// The two-bridge knot this double twist knot is equal to.
    pub fn to_two_bridge(&self) -> Result<TwoBridgeKnot> {
        let nf = self.normal_form();
        let k = nf.knot().map_err(|_| Error::InvalidDoubleTwist {
            l: self.l,
            m: self.m,
            reason: "does not give a nontrivial two-bridge knot",
        })?;
        Ok(if nf.mirrored { k.mirror() } else { k })
    }
}

impl fmt::Display for DoubleTwistKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({},{})", self.l, self.m)
    }
}

/// Converts a double twist knot to the two-bridge knot it equals.
pub fn from_double_twist(j: &DoubleTwistKnot) -> Result<TwoBridgeKnot> {
    j.to_two_bridge()
}

/// A surgery slope `p/q`, stored with `q ≥ 0`; the meridian is `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Builds a slope from a coprime pair, folding the sign into `p`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        if q == 0 {
            return if p.abs() == 1 {
                Ok(Slope::MERIDIAN)
            } else {
                Err(Error::InvalidSlope(format!("{p}/0 is not a slope")))
            };
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope(format!("{p}/{q} is not in lowest terms")));
        }
        Ok(Slope { p, q })
    }

    pub const MERIDIAN: Slope = Slope { p: 1, q: 0 };

    pub fn integral(p: i64) -> Self {
        Slope { p, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q == 0
    }

    /// The slope `-p/q`, seen from the mirror image.
    pub fn negate(&self) -> Self {
        if self.is_meridian() {
            *self
        } else {
            Slope { p: -self.p, q: self.q }
        }
    }

    /// The integer value when `q = 1`.
    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 1).then_some(self.p)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn ascii_minus(s: &str) -> String {
    s.trim().replace('\u{2212}', "-")
}

/// Parses `"p/q"`, `"p"` or `"1/0"`. Non-reduced input is reduced and the sign
/// moved into `p`; `p/0` is only accepted for `p = ±1`.
pub fn parse_slope(text: &str) -> Result<Slope> {
    let bad = || Error::Parse {
        what: "slope",
        input: text.to_string(),
    };
    let t = ascii_minus(text);
    let (ps, qs) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t.as_str(), "1"),
    };
    let p: i64 = ps.parse().map_err(|_| bad())?;
    let q: i64 = qs.parse().map_err(|_| bad())?;
    if q == 0 {
        return Slope::new(p, 0);
    }
    let g = p.gcd(&q);
    Slope::new(p / g, q / g)
}

impl FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_slope(s)
    }
}

/// A knot as written on the command line: `K(α,β)` or `J(ℓ,m)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KnotSpec {
    TwoBridge(TwoBridgeKnot),
    DoubleTwist(DoubleTwistKnot),
}

impl KnotSpec {
    pub fn knot(&self) -> Result<TwoBridgeKnot> {
        match self {
            KnotSpec::TwoBridge(k) => Ok(*k),
            KnotSpec::DoubleTwist(j) => j.to_two_bridge(),
        }
    }

    pub fn double_twist(&self) -> Option<DoubleTwistKnot> {
        match self {
            KnotSpec::DoubleTwist(j) => Some(*j),
            KnotSpec::TwoBridge(_) => None,
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::TwoBridge(k) => k.fmt(f),
            KnotSpec::DoubleTwist(j) => j.fmt(f),
        }
    }
}

impl FromStr for KnotSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "knot",
            input: text.to_string(),
        };
        let t = ascii_minus(text);
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim_start();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.trim_end().strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        match head {
            'K' | 'k' => Ok(KnotSpec::TwoBridge(TwoBridgeKnot::normalize(a, b)?)),
            'J' | 'j' => {
                let j = DoubleTwistKnot::new(a, b)?;
                j.to_two_bridge()?;
                Ok(KnotSpec::DoubleTwist(j))
            }
            _ => Err(bad()),
        }
    }
}
