//! The concrete maps of the disc/strip tool-chain, carried as evaluable
//! objects with exact Wirtinger derivative pairs.
//!
//! The cast:
//!
//! * `tan_map`: `z -> tan((pi/4) z)`, a conformal map of the strip onto the
//!   unit disc, finite up to the closed strip boundary.
//! * `phi`: its inverse, the conformal map of the disc onto the strip,
//!   evaluated through the explicit chain
//!   `z -> iz -> (1+w)/(1-w) -> ln -> -(2i/pi)`
//!   with the principal logarithm on the right half-plane (`ln 1 = 0`).
//! * `disc_automorphism(a)`: `z -> (a - z)/(1 - conj(a) z)`, the involutive
//!   automorphism of the disc swapping `0` and `a`.
//! * `phi_b(b)`: `phi` composed with `disc_automorphism(tan(b*pi/4))`, the
//!   conformal map of the disc onto the strip sending `0` to `b`.
//! * `vertical_stretch(K)`: `(x, y) -> (x, K y)` on the strip, the model
//!   `K`-quasiregular map.
//! * `psi_k(K)`: `vertical_stretch(K)` after `phi`, a harmonic sense-preserving
//!   `K`-quasiregular map of the disc onto the strip fixing `0`.
//! * `rotation` / `rotation_times_i`: unimodular multiples of the identity,
//!   used to aim extremal maps at a prescribed point.
//!
//! The Wirtinger pair `(f_z, f_zbar)` with `f_z = (f_x - i f_y)/2` and
//! `f_zbar = (f_x + i f_y)/2` is the primary derivative object; analytic maps
//! carry `f_zbar = 0` exactly. Everything is immutable after construction and
//! evaluation is pure.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::sync::Arc;

use crate::cpx::{self, Cpx, I};
use crate::error::{Error, Result};

/// Margin by which inputs must clear an open domain boundary.
pub const DEFAULT_DOMAIN_MARGIN: f64 = 1e-12;

/// Default central-difference step for [`wirtinger_fd`].
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// The domains a map can be declared on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainTag {
    /// `{ |z| < 1 }`
    UnitDisc,
    /// `{ -1 < Re z < 1 }`
    Strip,
    /// All of `C`; compatible with anything on the outer side of a composition.
    Plane,
}

impl DomainTag {
    /// Membership in the open domain, shrunk by `margin`.
    pub fn contains(self, z: Cpx, margin: f64) -> bool {
        if !cpx::is_finite(z) {
            return false;
        }
        match self {
            DomainTag::UnitDisc => z.norm() < 1.0 - margin,
            DomainTag::Strip => z.re.abs() < 1.0 - margin,
            DomainTag::Plane => true,
        }
    }

    /// Membership in the closed domain (used by the maps that stay finite
    /// on the boundary).
    pub fn contains_closed(self, z: Cpx) -> bool {
        if !cpx::is_finite(z) {
            return false;
        }
        match self {
            DomainTag::UnitDisc => z.norm() <= 1.0,
            DomainTag::Strip => z.re.abs() <= 1.0,
            DomainTag::Plane => true,
        }
    }
}

impl fmt::Display for DomainTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainTag::UnitDisc => write!(f, "the unit disc"),
            DomainTag::Strip => write!(f, "the strip"),
            DomainTag::Plane => write!(f, "the plane"),
        }
    }
}

/// Anything that evaluates to a complex value and exposes a Wirtinger pair.
pub trait WirtingerMap {
    fn eval(&self, z: Cpx) -> Result<Cpx>;
    fn wirtinger(&self, z: Cpx) -> Result<(Cpx, Cpx)>;
}

type EvalFn = Arc<dyn Fn(Cpx) -> Cpx + Send + Sync>;
type WirtFn = Arc<dyn Fn(Cpx) -> (Cpx, Cpx) + Send + Sync>;

/// An evaluable smooth map with its exact Wirtinger derivative pair and
/// domain/codomain tags. Closed under [`compose`].
#[derive(Clone)]
pub struct PlanarMap {
    eval_fn: EvalFn,
    wirt_fn: WirtFn,
    domain: DomainTag,
    codomain: DomainTag,
    analytic: bool,
    /// Accept points of the closed domain instead of margin-shrunk open one.
    closed_domain: bool,
    margin: f64,
}

impl fmt::Debug for PlanarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlanarMap")
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .field("analytic", &self.analytic)
            .field("closed_domain", &self.closed_domain)
            .finish()
    }
}

impl PlanarMap {
    fn new(
        eval_fn: EvalFn,
        wirt_fn: WirtFn,
        domain: DomainTag,
        codomain: DomainTag,
        analytic: bool,
    ) -> Self {
        PlanarMap {
            eval_fn,
            wirt_fn,
            domain,
            codomain,
            analytic,
            closed_domain: false,
            margin: DEFAULT_DOMAIN_MARGIN,
        }
    }

    /// Build a map from explicit evaluator and Wirtinger closures.
    ///
    /// `analytic` asserts that the Wirtinger closure returns an exactly zero
    /// `f_zbar`; composition and the dilatation machinery rely on it.
    pub fn custom(
        eval: impl Fn(Cpx) -> Cpx + Send + Sync + 'static,
        wirtinger: impl Fn(Cpx) -> (Cpx, Cpx) + Send + Sync + 'static,
        domain: DomainTag,
        codomain: DomainTag,
        analytic: bool,
    ) -> Self {
        PlanarMap::new(Arc::new(eval), Arc::new(wirtinger), domain, codomain, analytic)
    }

    pub fn domain(&self) -> DomainTag {
        self.domain
    }

    pub fn codomain(&self) -> DomainTag {
        self.codomain
    }

    /// `true` means the map is holomorphic and its `f_zbar` is exactly zero.
    pub fn is_analytic(&self) -> bool {
        self.analytic
    }

    /// Replace the domain margin (default [`DEFAULT_DOMAIN_MARGIN`]).
    pub fn with_margin(mut self, margin: f64) -> Self {
        self.margin = margin;
        self
    }

    fn check_domain(&self, z: Cpx) -> Result<()> {
        let ok = if self.closed_domain {
            self.domain.contains_closed(z)
        } else {
            self.domain.contains(z, self.margin)
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutsideDomain {
                domain: self.domain,
                point: z,
            })
        }
    }

    /// Value of the map at `z`.
    pub fn eval(&self, z: Cpx) -> Result<Cpx> {
        self.check_domain(z)?;
        let w = (self.eval_fn)(z);
        if cpx::is_finite(w) {
            Ok(w)
        } else {
            Err(Error::NonFinite {
                context: "map evaluation",
            })
        }
    }

    /// Wirtinger pair `(f_z, f_zbar)` at `z`.
    pub fn wirtinger(&self, z: Cpx) -> Result<(Cpx, Cpx)> {
        self.check_domain(z)?;
        Ok((self.wirt_fn)(z))
    }
}

impl WirtingerMap for PlanarMap {
    fn eval(&self, z: Cpx) -> Result<Cpx> {
        PlanarMap::eval(self, z)
    }

    fn wirtinger(&self, z: Cpx) -> Result<(Cpx, Cpx)> {
        PlanarMap::wirtinger(self, z)
    }
}

/// The disc automorphism `z -> (a - z)/(1 - conj(a) z)` for `|a| < 1`.
///
/// Swaps `0` and `a`, is an involution, and has derivative
/// `(|a|^2 - 1)/(1 - conj(a) z)^2`.
pub fn disc_automorphism(a: Cpx) -> Result<PlanarMap> {
    if !cpx::is_finite(a) || a.norm() >= 1.0 {
        return Err(Error::InvalidParameter {
            name: "a",
            value: a.norm(),
            expected: "|a| < 1",
        });
    }
    let abar = a.conj();
    let top = a.norm_sqr() - 1.0;
    let eval = move |z: Cpx| (a - z) / (1.0 - abar * z);
    let wirt = move |z: Cpx| {
        let d = 1.0 - abar * z;
        (Cpx::new(top, 0.0) / (d * d), Cpx::new(0.0, 0.0))
    };
    Ok(PlanarMap::new(
        Arc::new(eval),
        Arc::new(wirt),
        DomainTag::UnitDisc,
        DomainTag::UnitDisc,
        true,
    ))
}

/// The conformal map `z -> tan((pi/4) z)` of the strip onto the unit disc.
///
/// Finite on the closed strip, so boundary evaluation is allowed; the
/// derivative is `(pi/4) sec^2((pi/4) z)`.
pub fn tan_map() -> PlanarMap {
    let eval = |z: Cpx| (z * FRAC_PI_4).tan();
    let wirt = |z: Cpx| {
        let t = (z * FRAC_PI_4).tan();
        (FRAC_PI_4 * (1.0 + t * t), Cpx::new(0.0, 0.0))
    };
    let mut m = PlanarMap::new(
        Arc::new(eval),
        Arc::new(wirt),
        DomainTag::Strip,
        DomainTag::UnitDisc,
        true,
    );
    m.closed_domain = true;
    m
}

fn phi_raw(z: Cpx) -> Cpx {
    // z -> iz -> (1+w)/(1-w) -> ln (principal, right half-plane) -> -(2i/pi)
    let w = I * z;
    let q = (1.0 + w) / (1.0 - w);
    let l = q.ln();
    -I * (2.0 / PI) * l
}

/// The conformal map of the unit disc onto the strip, inverse to [`tan_map`].
///
/// Fixes `0`; the derivative is `(4/pi)/(1 + z^2)`, so `phi'(0) = 4/pi`.
/// The points `-i, i` would go to the two ends of the strip at infinity, so
/// inputs must stay inside the open disc.
pub fn phi() -> PlanarMap {
    let wirt = |z: Cpx| ((4.0 / PI) / (1.0 + z * z), Cpx::new(0.0, 0.0));
    PlanarMap::new(
        Arc::new(phi_raw),
        Arc::new(wirt),
        DomainTag::UnitDisc,
        DomainTag::Strip,
        true,
    )
}

/// The conformal map of the disc onto the strip sending `0` to `b`, built
/// literally as `phi` after `disc_automorphism(tan(b*pi/4))`.
///
/// For real `b` it is decreasing on `(-1, 1)`, so its derivative at `0` is
/// negative; the decomposition fixes the map only up to a disc rotation and
/// this is the one the automorphism produces.
pub fn phi_b(b: f64) -> Result<PlanarMap> {
    if !(-1.0..1.0).contains(&b) || !b.is_finite() {
        return Err(Error::InvalidParameter {
            name: "b",
            value: b,
            expected: "(-1, 1)",
        });
    }
    let a = (b * FRAC_PI_4).tan();
    compose(&phi(), &disc_automorphism(Cpx::new(a, 0.0))?)
}

/// The vertical stretch `(x, y) -> (x, K y)` of the strip onto itself.
///
/// Harmonic but not analytic for `K > 1`: the Wirtinger pair is the constant
/// `((1+K)/2, (1-K)/2)`, giving dilatation quotient exactly `K`.
pub fn vertical_stretch(k: f64) -> Result<PlanarMap> {
    if !k.is_finite() || k < 1.0 {
        return Err(Error::InvalidParameter {
            name: "K",
            value: k,
            expected: "K >= 1",
        });
    }
    let eval = move |z: Cpx| Cpx::new(z.re, k * z.im);
    let fz = Cpx::new((1.0 + k) / 2.0, 0.0);
    let fzbar = Cpx::new((1.0 - k) / 2.0, 0.0);
    let wirt = move |_z: Cpx| (fz, fzbar);
    Ok(PlanarMap::new(
        Arc::new(eval),
        Arc::new(wirt),
        DomainTag::Strip,
        DomainTag::Strip,
        k == 1.0,
    ))
}

/// The model harmonic `K`-quasiregular map of the disc onto the strip:
/// `vertical_stretch(K)` after [`phi`]. Sense-preserving, fixes `0`, and has
/// dilatation quotient exactly `K` everywhere.
pub fn psi_k(k: f64) -> Result<PlanarMap> {
    compose(&vertical_stretch(k)?, &phi())
}

fn rotation_by(c: Cpx) -> PlanarMap {
    let eval = move |z: Cpx| c * z;
    let wirt = move |_z: Cpx| (c, Cpx::new(0.0, 0.0));
    let mut m = PlanarMap::new(
        Arc::new(eval),
        Arc::new(wirt),
        DomainTag::UnitDisc,
        DomainTag::UnitDisc,
        true,
    );
    // multiplication by a unimodular constant is fine on the closed disc
    m.closed_domain = true;
    m
}

/// `z -> e^{i alpha} z` on the closed unit disc.
pub fn rotation(alpha: f64) -> PlanarMap {
    rotation_by(Cpx::from_polar(1.0, alpha))
}

/// `z -> i e^{i alpha} z`, the rotation with the extra quarter turn used by
/// the strip extremal constructions.
pub fn rotation_times_i(alpha: f64) -> PlanarMap {
    rotation_by(I * Cpx::from_polar(1.0, alpha))
}

/// Pointwise composition `outer(inner(.))` with the Wirtinger chain rule
///
/// `(g o f)_z    = g_z f_z    + g_zbar conj(f_zbar)`
/// `(g o f)_zbar = g_z f_zbar + g_zbar conj(f_z)`.
///
/// The inner codomain must feed the outer domain (the plane accepts
/// anything); the result is analytic iff both factors are.
pub fn compose(outer: &PlanarMap, inner: &PlanarMap) -> Result<PlanarMap> {
    let compatible = inner.codomain == outer.domain || outer.domain == DomainTag::Plane;
    if !compatible {
        return Err(Error::Composition {
            inner: inner.codomain,
            outer: outer.domain,
        });
    }
    let f_eval = inner.eval_fn.clone();
    let f_wirt = inner.wirt_fn.clone();
    let g_eval = outer.eval_fn.clone();
    let g_wirt = outer.wirt_fn.clone();
    let f_eval2 = inner.eval_fn.clone();

    let eval = move |z: Cpx| g_eval(f_eval(z));
    let wirt = move |z: Cpx| {
        let (fz, fzbar) = f_wirt(z);
        let w = f_eval2(z);
        let (gz, gzbar) = g_wirt(w);
        (
            gz * fz + gzbar * fzbar.conj(),
            gz * fzbar + gzbar * fz.conj(),
        )
    };
    let mut m = PlanarMap::new(
        Arc::new(eval),
        Arc::new(wirt),
        inner.domain,
        outer.codomain,
        inner.analytic && outer.analytic,
    );
    m.closed_domain = inner.closed_domain;
    m.margin = inner.margin;
    Ok(m)
}

/// Central-difference estimate of the Wirtinger pair:
/// `f_x = (f(z+h) - f(z-h))/2h`, `f_y = (f(z+ih) - f(z-ih))/2h`,
/// `f_z = (f_x - i f_y)/2`, `f_zbar = (f_x + i f_y)/2`.
///
/// Fails if the four stencil points leave the map's domain.
pub fn wirtinger_fd(map: &PlanarMap, z: Cpx, h: f64) -> Result<(Cpx, Cpx)> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "h",
            value: h,
            expected: "h > 0",
        });
    }
    let fe = map.eval(z + Cpx::new(h, 0.0))?;
    let fw = map.eval(z - Cpx::new(h, 0.0))?;
    let fn_ = map.eval(z + Cpx::new(0.0, h))?;
    let fs = map.eval(z - Cpx::new(0.0, h))?;
    let fx = (fe - fw) / (2.0 * h);
    let fy = (fn_ - fs) / (2.0 * h);
    Ok(((fx - I * fy) / 2.0, (fx + I * fy) / 2.0))
}
