//! Boundary slopes, Culler–Shalen seminorms, Â-polynomial degrees and the
//! SL(2,ℂ) Casson invariant of Dehn surgeries on two-bridge knots.
//!
//! All arithmetic is exact. The pipeline for a knot `K(α,β)` is
//! [`surfaces::all_surfaces`] → [`seminorm::SeminormTable`] →
//! [`casson::casson_invariant`] and [`apoly::ahat_degrees`].
//!
//! ```
//! use twobridge::{casson_invariant, Slope, TwoBridgeKnot};
//!
//! let k = TwoBridgeKnot::normalize(27, 10)?;
//! let r = casson_invariant(&k, &Slope::new(1, 2)?);
//! assert_eq!(r.value.to_string(), "70");
//! # Ok::<(), twobridge::Error>(())
//! ```

pub mod alexander;
pub mod apoly;
pub mod arith;
pub mod casson;
pub mod error;
pub mod golden;
pub mod knot;
pub mod report;
pub mod seminorm;
pub mod surfaces;

pub use alexander::{alexander, is_fibered, AlexanderData};
pub use apoly::{ahat_degrees, double_twist_deg_m, torus_ahat_degrees, AhatDegrees};
pub use arith::{IntPoly, Rational};
pub use casson::{
    admissibility, casson_double_twist, casson_invariant, exceptional_slopes, lambda_prime,
    nontriviality, AdmissibilityReport, CassonResult, KnotData, Nontriviality, Strictness,
};
pub use error::{Error, Result};
pub use knot::{parse_slope, DoubleTwistKnot, KnotSpec, Slope, TwoBridgeKnot};
pub use seminorm::{build_table, SeminormTable};
pub use surfaces::{all_surfaces, SurfaceDatum};
