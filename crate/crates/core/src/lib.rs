//! Hyperbolic geometry of the unit disc `U = {|z| < 1}` and the vertical
//! strip `S = {-1 < Re z < 1}`, together with the sharp Schwarz-type bounds
//! that the geometry produces for holomorphic, harmonic, and harmonic
//! quasiregular maps between them.
//!
//! The crate is organised around six pieces:
//!
//! * [`planarmaps`]: the concrete maps (`tan((pi/4)z)`, its inverse, disc
//!   automorphisms, vertical stretches, their compositions) with exact
//!   Wirtinger derivatives and a finite-difference cross-check.
//! * [`hypgeom`]: hyperbolic densities and distances on both domains, a
//!   path-integration oracle, and the Euclidean comparison inequality on
//!   the strip.
//! * [`discgeom`]: hyperbolic discs, their boundary curves, and closed-form
//!   Euclidean extents with sampling oracles.
//! * [`bounds`]: the bound evaluators themselves and the extremal maps
//!   attaining them.
//! * [`harmonic`]: a Poisson/Herglotz integral engine that synthesises
//!   random harmonic test maps and estimates quasiregularity constants.
//! * [`verify`]: seeded, deterministic certification of every inequality,
//!   equality case, and sharpness claim, with JSON reports.
//!
//! All values are immutable after construction and every evaluation is pure,
//! so everything here is safe to use from any number of threads.
//!
//! ```
//! use discstrip::bounds::{bound_value, extremal_hol, BoundKind};
//! use discstrip::hypgeom::{dist_disc, dist_strip};
//! use discstrip::planarmaps::{compose, phi, tan_map};
//! use discstrip::Cpx;
//!
//! let z = Cpx::new(0.3, 0.4);
//! let origin = Cpx::new(0.0, 0.0);
//!
//! // the disc-to-strip map and its inverse compose to the identity
//! let round_trip = compose(&tan_map(), &phi())?;
//! assert!((round_trip.eval(z)? - z).norm() < 1e-10);
//!
//! // the holomorphic strip bound is attained by a witness aimed at z
//! let bound = bound_value(BoundKind::HolStrip, z.norm())?.modulus();
//! let witness = extremal_hol(z)?;
//! assert!((witness.eval(z)?.norm() - bound).abs() < 1e-9);
//!
//! // and the witness contracts hyperbolic distances, like every admissible map
//! assert!(dist_strip(witness.eval(z)?, origin)? <= dist_disc(z, origin)? + 1e-12);
//! # Ok::<(), discstrip::Error>(())
//! ```

pub mod bounds;
pub mod cpx;
pub mod discgeom;
pub mod error;
pub mod harmonic;
pub mod hypgeom;
pub mod planarmaps;
pub mod verify;

pub use cpx::Cpx;
pub use error::{Error, Result};
pub use planarmaps::{DomainTag, PlanarMap, WirtingerMap};
