//! The sharp Schwarz-type bounds and the extremal maps attaining them.
//!
//! All five bounds depend on the input point only through `r = |z|`:
//!
//! | kind                 | class of maps                      | bound at `r`                      |
//! |----------------------|------------------------------------|-----------------------------------|
//! | `ClassicalHol`       | holomorphic disc -> disc, `f(0)=0` | `r`                               |
//! | `HarmonicDisc`       | harmonic disc -> disc, `f(0)=0`    | `(4/pi) arctan r`                 |
//! | `HarmonicInterval(b)`| harmonic disc -> `(-1,1)`, `u(0)=b`| `[m_b(r), M_b(r)]`                |
//! | `HolStrip`           | holomorphic disc -> strip, `f(0)=0`| `(4/pi) artanh r`                 |
//! | `HqrStrip(K)`        | harmonic `K`-qr disc -> strip      | `(4/pi) K artanh r`               |
//!
//! Each bound is attained: the harmonic witness is the real part of the
//! disc-to-strip map aimed at the test point by a rotation, the holomorphic
//! witness is the disc-to-strip map precomposed with `i e^{-i arg z}`, and
//! the quasiregular witness is the vertically stretched version of the same.
//! The derivative bound for holomorphic maps into the strip is `4/pi`,
//! attained exactly by the disc-to-strip map and its rotations.

use std::f64::consts::PI;

use crate::cpx::{arg_0_2pi, Cpx};
use crate::discgeom;
use crate::error::{Error, Result};
use crate::planarmaps::{self, PlanarMap};

/// Which Schwarz-type bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundKind {
    ClassicalHol,
    HarmonicDisc,
    /// Carries the center value `b` in `(-1, 1)`.
    HarmonicInterval(f64),
    HolStrip,
    /// Carries the dilatation constant `K >= 1`.
    HqrStrip(f64),
}

/// A bound is either a modulus cap or a two-sided interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundValue {
    Modulus(f64),
    Interval { lower: f64, upper: f64 },
}

impl BoundValue {
    /// The modulus cap; panics when called on an interval.
    pub fn modulus(self) -> f64 {
        match self {
            BoundValue::Modulus(v) => v,
            BoundValue::Interval { .. } => panic!("interval bound has no single modulus"),
        }
    }

    /// The interval; panics when called on a modulus bound.
    pub fn interval(self) -> (f64, f64) {
        match self {
            BoundValue::Interval { lower, upper } => (lower, upper),
            BoundValue::Modulus(_) => panic!("modulus bound has no interval"),
        }
    }
}

fn validate_kind(kind: BoundKind) -> Result<()> {
    match kind {
        BoundKind::HarmonicInterval(b) if !(-1.0..1.0).contains(&b) || !b.is_finite() => {
            Err(Error::InvalidParameter {
                name: "b",
                value: b,
                expected: "(-1, 1)",
            })
        }
        BoundKind::HqrStrip(k) if !k.is_finite() || k < 1.0 => Err(Error::InvalidParameter {
            name: "K",
            value: k,
            expected: "K >= 1",
        }),
        _ => Ok(()),
    }
}

/// Evaluate the bound of `kind` at modulus `r` in `[0, 1)`.
///
/// `r = 0` returns the exact center value (the bounds all include the
/// origin); `r >= 1` is rejected since the strip bounds diverge there.
pub fn bound_value(kind: BoundKind, r: f64) -> Result<BoundValue> {
    validate_kind(kind)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            expected: "[0, 1)",
        });
    }
    Ok(match kind {
        BoundKind::ClassicalHol => BoundValue::Modulus(r),
        BoundKind::HarmonicDisc => BoundValue::Modulus((4.0 / PI) * r.atan()),
        BoundKind::HarmonicInterval(b) => {
            if r == 0.0 {
                BoundValue::Interval { lower: b, upper: b }
            } else {
                let (lower, upper) = discgeom::offcenter_re_extent(b, r)?;
                BoundValue::Interval { lower, upper }
            }
        }
        BoundKind::HolStrip => BoundValue::Modulus((4.0 / PI) * r.atanh()),
        BoundKind::HqrStrip(k) => BoundValue::Modulus(k * (4.0 / PI) * r.atanh()),
    })
}

/// The sharp bound `4/pi` on `|f'(0)|` for holomorphic maps of the disc into
/// the strip with `f(0) = 0`.
pub fn deriv_bound_hol_strip() -> f64 {
    4.0 / PI
}

/// A real-valued harmonic function on the disc given as the real part of an
/// analytic map.
#[derive(Debug, Clone)]
pub struct HarmonicExtremal {
    inner: PlanarMap,
}

impl HarmonicExtremal {
    pub fn eval(&self, zeta: Cpx) -> Result<f64> {
        Ok(self.inner.eval(zeta)?.re)
    }

    /// The analytic map whose real part this is.
    pub fn analytic_part(&self) -> &PlanarMap {
        &self.inner
    }
}

fn check_witness_point(z: Cpx) -> Result<()> {
    let r = z.norm();
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter {
            name: "z",
            value: r,
            expected: "0 < |z| < 1",
        });
    }
    Ok(())
}

/// Witness for the harmonic disc bound at `z`: the harmonic function
/// `zeta -> Re(phi(e^{-i arg z} zeta))`, which satisfies `u(0) = 0`, takes
/// values in `(-1, 1)`, and attains `|u(z)| = (4/pi) arctan |z|`.
pub fn extremal_harmonic(z: Cpx) -> Result<HarmonicExtremal> {
    check_witness_point(z)?;
    let inner = planarmaps::compose(
        &planarmaps::phi(),
        &planarmaps::rotation(-arg_0_2pi(z)),
    )?;
    Ok(HarmonicExtremal { inner })
}

/// Witnesses for the off-center interval bound at `z`: a pair of harmonic
/// functions with `u(0) = b` attaining `m_b(|z|)` and `M_b(|z|)` at `z`.
pub fn extremal_harmonic_interval(b: f64, z: Cpx) -> Result<(HarmonicExtremal, HarmonicExtremal)> {
    check_witness_point(z)?;
    let map = planarmaps::phi_b(b)?;
    let at_lower = HarmonicExtremal {
        inner: planarmaps::compose(&map, &planarmaps::rotation(-arg_0_2pi(z)))?,
    };
    let at_upper = HarmonicExtremal {
        inner: planarmaps::compose(&map, &planarmaps::rotation(PI - arg_0_2pi(z)))?,
    };
    Ok((at_lower, at_upper))
}

/// Witness for the holomorphic strip bound at `z`:
/// `zeta -> phi(i e^{-i arg z} zeta)`, analytic disc -> strip with
/// `f(0) = 0` and `|f(z)| = (4/pi) artanh |z|`.
pub fn extremal_hol(z: Cpx) -> Result<PlanarMap> {
    check_witness_point(z)?;
    planarmaps::compose(
        &planarmaps::phi(),
        &planarmaps::rotation_times_i(-arg_0_2pi(z)),
    )
}

/// Witness for the quasiregular strip bound at `z`: the model `K`-quasiregular
/// map aimed the same way, with `|f(z)| = (4/pi) K artanh |z|`.
pub fn extremal_hqr(k: f64, z: Cpx) -> Result<PlanarMap> {
    check_witness_point(z)?;
    planarmaps::compose(
        &planarmaps::psi_k(k)?,
        &planarmaps::rotation_times_i(-arg_0_2pi(z)),
    )
}
