//! Hyperbolic discs in the unit disc and the strip, their boundary curves,
//! and closed-form Euclidean extents with sampling oracles.
//!
//! A hyperbolic disc of radius `lambda` around `0` in the unit disc is the
//! Euclidean disc of radius `r = tanh(lambda/2)`; its image in the strip
//! under the disc-to-strip conformal map has
//!
//! * real extent `[-(4/pi) arctan r, (4/pi) arctan r]`, exactly attained;
//! * imaginary samples within `[-(2/pi) lambda, (2/pi) lambda]`;
//! * maximal modulus `(2/pi) lambda`, attained at `+/- i (2/pi) lambda`.
//!
//! For a real strip center `b` the real extent becomes
//! `[m_b(r), M_b(r)]` with `m_b(r) = (4/pi) arctan((a-r)/(1-ar))`,
//! `M_b(r) = (4/pi) arctan((a+r)/(1+ar))`, `a = tan(b pi/4)`.
//!
//! Extents are computed by sampling the boundary curve only: the discs are
//! compact and Euclidean-convex, so the extrema sit on the boundary, and the
//! boundary is available in closed form.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use crate::cpx::Cpx;
use crate::error::{Error, Result};
use crate::hypgeom::Polyline;
use crate::planarmaps::{self, DomainTag};

/// Boundary sample count used by the module tests.
pub const DEFAULT_TEST_SAMPLES: usize = 4096;

/// Boundary sample count used for figure export.
pub const DEFAULT_FIGURE_SAMPLES: usize = 720;

/// A hyperbolic disc: domain, hyperbolic center, hyperbolic radius.
#[derive(Debug, Clone, Copy)]
pub struct HypDisc {
    domain: DomainTag,
    center: Cpx,
    radius: f64,
}

impl HypDisc {
    /// `domain` must be the disc or the strip, `center` inside it,
    /// `radius > 0`.
    pub fn new(domain: DomainTag, center: Cpx, radius: f64) -> Result<Self> {
        if domain == DomainTag::Plane {
            return Err(Error::InvalidParameter {
                name: "domain",
                value: f64::NAN,
                expected: "the unit disc or the strip",
            });
        }
        if !domain.contains(center, 0.0) {
            return Err(Error::OutsideDomain {
                domain,
                point: center,
            });
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "radius",
                value: radius,
                expected: "radius > 0",
            });
        }
        Ok(HypDisc {
            domain,
            center,
            radius,
        })
    }

    /// Hyperbolic disc in the unit disc.
    pub fn in_disc(center: Cpx, radius: f64) -> Result<Self> {
        HypDisc::new(DomainTag::UnitDisc, center, radius)
    }

    /// Hyperbolic disc in the strip.
    pub fn in_strip(center: Cpx, radius: f64) -> Result<Self> {
        HypDisc::new(DomainTag::Strip, center, radius)
    }

    pub fn domain(&self) -> DomainTag {
        self.domain
    }

    pub fn center(&self) -> Cpx {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// `lambda(r) = d_U(r, 0) = ln((1+r)/(1-r)) = 2 artanh r` for `r` in `(0,1)`.
pub fn lambda_of_r(r: f64) -> Result<f64> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            expected: "(0, 1)",
        });
    }
    Ok(2.0 * r.atanh())
}

/// Inverse of [`lambda_of_r`]: `r = tanh(lambda/2)`.
pub fn r_of_lambda(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "lambda",
            value: lambda,
            expected: "lambda > 0",
        });
    }
    Ok((lambda / 2.0).tanh())
}

/// Boundary of a hyperbolic disc as a closed polyline of `n + 1` vertices
/// (the last vertex repeats the first).
///
/// In the unit disc the boundary around center `a` is the image of the
/// Euclidean circle of radius `r = tanh(lambda/2)` under the automorphism
/// swapping `0` and `a`; in the strip it is the image of the same circle
/// under the conformal map sending `0` to the center. Both parametrizations
/// are chosen so that a center at `0` reduces to `r e^{i theta}` and its
/// strip image: the vertex at `theta` is `map(-r e^{i theta})`, plus the
/// vertical translation for a strip center off the real axis.
pub fn boundary_curve(disc: &HypDisc, n: usize) -> Result<Polyline> {
    if n < 8 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            expected: "n >= 8",
        });
    }
    let r = r_of_lambda(disc.radius())?;
    let mut vertices = Vec::with_capacity(n + 1);
    match disc.domain() {
        DomainTag::UnitDisc => {
            let swap = planarmaps::disc_automorphism(disc.center())?;
            for k in 0..=n {
                let theta = TAU * (k % n) as f64 / n as f64;
                vertices.push(swap.eval(-Cpx::from_polar(r, theta))?);
            }
        }
        DomainTag::Strip => {
            let map = planarmaps::phi_b(disc.center().re)?;
            let lift = Cpx::new(0.0, disc.center().im);
            for k in 0..=n {
                let theta = TAU * (k % n) as f64 / n as f64;
                vertices.push(map.eval(-Cpx::from_polar(r, theta))? + lift);
            }
        }
        DomainTag::Plane => unreachable!("HypDisc::new rejects the plane"),
    }
    Polyline::new(vertices, disc.domain())
}

/// Closed-form extents of the origin-centered strip disc of radius
/// `lambda(r)`.
#[derive(Debug, Clone, Copy)]
pub struct StripExtents {
    /// `(4/pi) arctan r`, always `< 1`; the real extent is exactly attained.
    pub re_max: f64,
    /// `(2/pi) lambda(r)`; the imaginary samples stay within this bound.
    pub im_max: f64,
}

pub fn strip_disc_extents_closed(r: f64) -> Result<StripExtents> {
    let lambda = lambda_of_r(r)?;
    Ok(StripExtents {
        re_max: (4.0 / PI) * r.atan(),
        im_max: (2.0 / PI) * lambda,
    })
}

/// Maximal Euclidean modulus over the closed strip disc of hyperbolic radius
/// `lambda` centered at `0`: `(2/pi) lambda`, attained at
/// `+/- i (2/pi) lambda`.
pub fn strip_disc_maxmod_closed(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "lambda",
            value: lambda,
            expected: "lambda > 0",
        });
    }
    Ok((2.0 / PI) * lambda)
}

/// Real extent `[m_b(r), M_b(r)]` of the strip disc of radius `lambda(r)`
/// centered at real `b`.
pub fn offcenter_re_extent(b: f64, r: f64) -> Result<(f64, f64)> {
    if !(-1.0..1.0).contains(&b) || !b.is_finite() {
        return Err(Error::InvalidParameter {
            name: "b",
            value: b,
            expected: "(-1, 1)",
        });
    }
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            expected: "(0, 1)",
        });
    }
    let a = (b * FRAC_PI_4).tan();
    let m = (4.0 / PI) * ((a - r) / (1.0 - a * r)).atan();
    let big_m = (4.0 / PI) * ((a + r) / (1.0 + a * r)).atan();
    Ok((m, big_m))
}

/// The circle `l_r`: image of the circle `|z| = r` under
/// `z -> (1 + iz)/(1 - iz)`, described by its Euclidean center and radius
/// together with the extreme argument and log-modulus over it.
#[derive(Debug, Clone, Copy)]
pub struct LrCircle {
    /// Euclidean center `(1 + r^2)/(1 - r^2)`.
    pub center: f64,
    /// Euclidean radius `2r/(1 - r^2)`.
    pub radius: f64,
    /// `max |arg w|` over the circle: `arctan(radius) = 2 arctan r`.
    pub theta_max: f64,
    /// `max |ln |w||` over the circle: `ln(center + radius) = ln((1+r)/(1-r))`.
    pub ln_max: f64,
}

/// Quantities of the circle `l_r`. The two intersection points with the real
/// axis, `center - radius` and `center + radius`, are reciprocal, so the
/// tangent length from the origin is `1` and `tan(theta_max) = radius`.
pub fn lr_circle(r: f64) -> Result<LrCircle> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            expected: "(0, 1)",
        });
    }
    let denom = 1.0 - r * r;
    let center = (1.0 + r * r) / denom;
    let radius = 2.0 * r / denom;
    Ok(LrCircle {
        center,
        radius,
        theta_max: radius.atan(),
        ln_max: (center + radius).ln(),
    })
}

/// Componentwise extrema of a hyperbolic disc, sampled over its boundary.
#[derive(Debug, Clone, Copy)]
pub struct Extents {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub mod_max: f64,
    /// Where the modulus maximum was attained; near-ties resolve to the
    /// representative with nonnegative imaginary part.
    pub argmax_mod: Cpx,
}

/// Sampling oracle for the extents: extrema over `n` boundary samples.
/// Valid because the closed discs are compact and Euclidean-convex, so all
/// extrema are attained on the boundary; converges at `O(n^-2)`.
pub fn extents_numeric(disc: &HypDisc, n: usize) -> Result<Extents> {
    if n < 64 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            expected: "n >= 64",
        });
    }
    let curve = boundary_curve(disc, n)?;
    let mut e = Extents {
        re_min: f64::INFINITY,
        re_max: f64::NEG_INFINITY,
        im_min: f64::INFINITY,
        im_max: f64::NEG_INFINITY,
        mod_max: f64::NEG_INFINITY,
        argmax_mod: Cpx::new(0.0, 0.0),
    };
    // order-insensitive reductions; the tie window keeps the argmax stable
    let tie = 1e-12;
    for &v in curve.vertices() {
        e.re_min = e.re_min.min(v.re);
        e.re_max = e.re_max.max(v.re);
        e.im_min = e.im_min.min(v.im);
        e.im_max = e.im_max.max(v.im);
        let m = v.norm();
        if m > e.mod_max + tie {
            e.mod_max = m;
            e.argmax_mod = v;
        } else if (m - e.mod_max).abs() <= tie && v.im >= 0.0 && e.argmax_mod.im < 0.0 {
            e.argmax_mod = v;
        }
    }
    Ok(e)
}
