//! Hyperbolic densities and distances on the disc and the strip.
//!
//! Closed forms:
//!
//! * `rho_U(z) = 2/(1 - |z|^2)` on the unit disc;
//! * `rho_S(z) = (pi/2)/cos((pi/2) Re z)` on the strip, the pullback of
//!   `rho_U` under `tan((pi/4) z)`;
//! * `sigma_U(z1, z2) = |(z1 - z2)/(1 - z1 conj(z2))|` and
//!   `d_U = 2 artanh(sigma_U)`;
//! * `d_S(z1, z2) = d_U(tan((pi/4) z1), tan((pi/4) z2))` by conformal
//!   invariance.
//!
//! [`path_length`] is the independent quadrature oracle: a composite-midpoint
//! sum of the density along a polyline, which converges to the curve's
//! hyperbolic length under refinement. On the strip, `d_S` dominates
//! `(pi/2) d_e` with equality on the imaginary axis; [`euclid_comparison`]
//! packages that inequality.

use std::f64::consts::FRAC_PI_4;

use crate::cpx::Cpx;
use crate::error::{Error, Result};
use crate::planarmaps::{self, DomainTag};

/// Points closer to the disc boundary than this are clamped by the distance
/// functions, which then report `near_boundary`.
pub const NEAR_BOUNDARY: f64 = 1e-12;

/// A hyperbolic density on one of the two domains.
#[derive(Debug, Clone, Copy)]
pub struct Density {
    domain: DomainTag,
}

/// `rho_U(z) = 2/(1 - |z|^2)`.
pub fn density_disc() -> Density {
    Density {
        domain: DomainTag::UnitDisc,
    }
}

/// `rho_S(z) = (pi/2)/cos((pi/2) Re z)`.
pub fn density_strip() -> Density {
    Density {
        domain: DomainTag::Strip,
    }
}

impl Density {
    pub fn domain(&self) -> DomainTag {
        self.domain
    }

    /// Density value; diverges toward the boundary and is at least `pi/2`
    /// everywhere on the strip.
    pub fn at(&self, z: Cpx) -> Result<f64> {
        if !self.domain.contains(z, 0.0) {
            return Err(Error::OutsideDomain {
                domain: self.domain,
                point: z,
            });
        }
        Ok(match self.domain {
            DomainTag::UnitDisc => 2.0 / (1.0 - z.norm_sqr()),
            DomainTag::Strip => {
                std::f64::consts::FRAC_PI_2 / ((std::f64::consts::FRAC_PI_2 * z.re).cos())
            }
            DomainTag::Plane => unreachable!("no density is defined on the plane"),
        })
    }
}

/// A discretized curve: ordered vertices inside a single domain.
#[derive(Debug, Clone)]
pub struct Polyline {
    vertices: Vec<Cpx>,
    domain: DomainTag,
}

impl Polyline {
    /// At least two vertices, all strictly inside `domain`.
    pub fn new(vertices: Vec<Cpx>, domain: DomainTag) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::DegeneratePolyline(vertices.len()));
        }
        for &v in &vertices {
            if !domain.contains(v, 0.0) {
                return Err(Error::OutsideDomain { domain, point: v });
            }
        }
        Ok(Polyline { vertices, domain })
    }

    /// Straight segment from `from` to `to` split into `segments` pieces.
    pub fn segment(from: Cpx, to: Cpx, segments: usize, domain: DomainTag) -> Result<Self> {
        let n = segments.max(1);
        let vertices = (0..=n)
            .map(|k| from + (to - from) * (k as f64 / n as f64))
            .collect();
        Polyline::new(vertices, domain)
    }

    pub fn vertices(&self) -> &[Cpx] {
        &self.vertices
    }

    pub fn domain(&self) -> DomainTag {
        self.domain
    }
}

fn require_inside(domain: DomainTag, z: Cpx) -> Result<()> {
    if domain.contains(z, 0.0) {
        Ok(())
    } else {
        Err(Error::OutsideDomain { domain, point: z })
    }
}

/// Fix an argument order so the symmetric formulas are symmetric down to the
/// last bit.
fn canonical_pair(z1: Cpx, z2: Cpx) -> (Cpx, Cpx) {
    if (z1.re, z1.im) <= (z2.re, z2.im) {
        (z1, z2)
    } else {
        (z2, z1)
    }
}

/// Pseudo-hyperbolic distance `|(z1 - z2)/(1 - z1 conj(z2))|` on the disc.
pub fn pseudo_dist(z1: Cpx, z2: Cpx) -> Result<f64> {
    require_inside(DomainTag::UnitDisc, z1)?;
    require_inside(DomainTag::UnitDisc, z2)?;
    let (z1, z2) = canonical_pair(z1, z2);
    Ok(((z1 - z2) / (1.0 - z1 * z2.conj())).norm())
}

fn clamp_into_disc(z: Cpx) -> (Cpx, bool) {
    let r = z.norm();
    if r > 1.0 - NEAR_BOUNDARY {
        (z * ((1.0 - NEAR_BOUNDARY) / r), true)
    } else {
        (z, false)
    }
}

/// Hyperbolic distance on the disc with the near-boundary flag: points within
/// [`NEAR_BOUNDARY`] of the unit circle are radially clamped so the result
/// stays finite, and the flag reports that the cap was applied.
pub fn dist_disc_flagged(z1: Cpx, z2: Cpx) -> Result<(f64, bool)> {
    require_inside(DomainTag::UnitDisc, z1)?;
    require_inside(DomainTag::UnitDisc, z2)?;
    let (z1, z2) = canonical_pair(z1, z2);
    let (w1, c1) = clamp_into_disc(z1);
    let (w2, c2) = clamp_into_disc(z2);
    let mut sigma = ((w1 - w2) / (1.0 - w1 * w2.conj())).norm();
    let mut capped = c1 || c2;
    if sigma >= 1.0 {
        sigma = 1.0 - f64::EPSILON;
        capped = true;
    }
    Ok((2.0 * sigma.atanh(), capped))
}

/// Hyperbolic distance `d_U(z1, z2) = 2 artanh(sigma_U(z1, z2))` on the disc.
pub fn dist_disc(z1: Cpx, z2: Cpx) -> Result<f64> {
    dist_disc_flagged(z1, z2).map(|(d, _)| d)
}

fn tan_quarter(z: Cpx) -> Cpx {
    (z * FRAC_PI_4).tan()
}

/// Hyperbolic distance on the strip, computed by transporting both points to
/// the disc through `tan((pi/4) z)`.
pub fn dist_strip(z1: Cpx, z2: Cpx) -> Result<f64> {
    require_inside(DomainTag::Strip, z1)?;
    require_inside(DomainTag::Strip, z2)?;
    dist_disc_flagged(tan_quarter(z1), tan_quarter(z2)).map(|(d, _)| d)
}

/// Composite-midpoint hyperbolic length of a polyline:
/// `sum rho(midpoint) * |segment|`.
///
/// Midpoints of segments stay inside the (convex) domain, so the density is
/// never evaluated at a vertex where a refined curve may hug the boundary.
pub fn path_length(curve: &Polyline, density: &Density) -> Result<f64> {
    if curve.domain() != density.domain() {
        return Err(Error::CurveDensityMismatch {
            curve: curve.domain(),
            density: density.domain(),
        });
    }
    let mut total = 0.0;
    for pair in curve.vertices().windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let step = (b - a).norm();
        if step > 0.0 {
            total += density.at((a + b) / 2.0)? * step;
        }
    }
    Ok(total)
}

/// The comparison `d_S(z1, z2) >= (pi/2) d_e(z1, z2)` on the strip.
#[derive(Debug, Clone, Copy)]
pub struct EuclidComparison {
    /// Hyperbolic distance on the strip.
    pub d_strip: f64,
    /// `(pi/2) |z1 - z2|`.
    pub lower: f64,
    /// `d_strip - lower`; nonnegative, and zero when both points are purely
    /// imaginary.
    pub slack: f64,
}

pub fn euclid_comparison(z1: Cpx, z2: Cpx) -> Result<EuclidComparison> {
    let d_strip = dist_strip(z1, z2)?;
    let lower = std::f64::consts::FRAC_PI_2 * (z1 - z2).norm();
    Ok(EuclidComparison {
        d_strip,
        lower,
        slack: d_strip - lower,
    })
}

/// Polyline along the hyperbolic geodesic of the disc from `w1` to `w2`,
/// produced by pulling the radial segment back through the automorphism that
/// sends `w1` to `0`. Vertices are spaced uniformly in hyperbolic arc
/// length, so no part of the curve is undersampled when an endpoint sits far
/// out.
pub fn disc_geodesic(w1: Cpx, w2: Cpx, segments: usize) -> Result<Polyline> {
    require_inside(DomainTag::UnitDisc, w1)?;
    require_inside(DomainTag::UnitDisc, w2)?;
    let swap = planarmaps::disc_automorphism(w1)?;
    let target = swap.eval(w2)?;
    let n = segments.max(1);
    let reach = target.norm();
    let mut vertices = Vec::with_capacity(n + 1);
    if reach == 0.0 {
        vertices.resize(n + 1, w1);
    } else {
        let half_dist = reach.atanh();
        let direction = target / reach;
        for k in 0..=n {
            let radius = (half_dist * k as f64 / n as f64).tanh();
            vertices.push(swap.eval(direction * radius)?);
        }
    }
    Polyline::new(vertices, DomainTag::UnitDisc)
}

/// Polyline along the hyperbolic geodesic of the strip from `z1` to `z2`:
/// the image under the disc-to-strip conformal map of the disc geodesic
/// between the `tan((pi/4) z)` images.
pub fn strip_geodesic(z1: Cpx, z2: Cpx, segments: usize) -> Result<Polyline> {
    require_inside(DomainTag::Strip, z1)?;
    require_inside(DomainTag::Strip, z2)?;
    let inner = disc_geodesic(tan_quarter(z1), tan_quarter(z2), segments)?;
    let to_strip = planarmaps::phi();
    let vertices = inner
        .vertices()
        .iter()
        .map(|&w| to_strip.eval(w))
        .collect::<Result<Vec<_>>>()?;
    Polyline::new(vertices, DomainTag::Strip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Cpx {
        Cpx::new(re, im)
    }

    #[test]
    fn density_formulas() {
        let du = density_disc();
        assert_eq!(du.at(c(0.0, 0.0)).unwrap(), 2.0);
        assert!((du.at(c(0.5, 0.0)).unwrap() - 2.0 / 0.75).abs() < 1e-15);
        let ds = density_strip();
        assert_eq!(ds.at(c(0.0, 3.0)).unwrap(), FRAC_PI_2);
        assert!(ds.at(c(1.0, 0.0)).is_err());
        assert!(du.at(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn strip_density_at_least_half_pi() {
        let ds = density_strip();
        for i in 0..40 {
            for j in 0..10 {
                let z = c(-0.975 + 0.05 * i as f64, -4.0 + 0.9 * j as f64);
                assert!(ds.at(z).unwrap() >= FRAC_PI_2);
            }
        }
    }

    #[test]
    fn pseudo_dist_values() {
        assert!((pseudo_dist(c(0.0, 0.0), c(0.5, 0.0)).unwrap() - 0.5).abs() < 1e-15);
        let z = c(0.3, -0.2);
        assert_eq!(pseudo_dist(z, z).unwrap(), 0.0);
        assert!((pseudo_dist(c(0.5, 0.0), c(-0.5, 0.0)).unwrap() - 0.8).abs() < 1e-15);
        assert!(pseudo_dist(c(1.1, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn dist_disc_values() {
        // d_U(0, 0.5) = ln 3
        let d = dist_disc(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((d - 1.0986122886681098).abs() < 1e-12);
        let z = c(0.1, 0.7);
        assert_eq!(dist_disc(z, z).unwrap(), 0.0);
        // d_U(0, tanh(1/2)) = 1
        let d = dist_disc(c(0.0, 0.0), c(0.5_f64.tanh(), 0.0)).unwrap();
        assert!((d - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dist_disc_near_boundary_capped() {
        let (d, capped) = dist_disc_flagged(c(0.0, 0.0), c(1.0 - 1e-14, 0.0)).unwrap();
        assert!(capped);
        assert!(d.is_finite());
        let (_, capped) = dist_disc_flagged(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!(!capped);
    }

    #[test]
    fn dist_strip_values() {
        // d_S(0, 0.5) = 2 artanh(tan(pi/8))
        let d = dist_strip(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((d - 0.881373587019543).abs() < 1e-9);
        // purely imaginary points: d_S = (pi/2) |y1 - y2|
        let d = dist_strip(c(0.0, 0.2), c(0.0, -1.3)).unwrap();
        assert!((d - FRAC_PI_2 * 1.5).abs() < 1e-9);
        let z = c(0.4, 2.0);
        assert_eq!(dist_strip(z, z).unwrap(), 0.0);
        assert!(dist_strip(c(1.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn dist_strip_conformally_invariant() {
        let to_strip = crate::planarmaps::phi();
        for k in 0..24 {
            let w1 = Cpx::from_polar(0.85 * ((k % 7) as f64 + 1.0) / 7.0, 0.7 * k as f64);
            let w2 = Cpx::from_polar(0.9 * ((k % 5) as f64 + 1.0) / 5.0, 1.3 * k as f64 + 0.4);
            let lhs = dist_strip(to_strip.eval(w1).unwrap(), to_strip.eval(w2).unwrap()).unwrap();
            let rhs = dist_disc(w1, w2).unwrap();
            assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn path_length_imaginary_segment() {
        // vertical segment of the strip has hyperbolic length (pi/2) * |dy|
        let seg = Polyline::segment(c(0.0, 0.0), c(0.0, 1.0), 10_000, DomainTag::Strip).unwrap();
        let len = path_length(&seg, &density_strip()).unwrap();
        assert!((len - FRAC_PI_2).abs() < 1e-6);
    }

    #[test]
    fn path_length_degenerate_curve() {
        let z = c(0.2, 0.1);
        let curve = Polyline::new(vec![z, z], DomainTag::Strip).unwrap();
        assert_eq!(path_length(&curve, &density_strip()).unwrap(), 0.0);
    }

    #[test]
    fn path_length_disc_diameter() {
        let seg =
            Polyline::segment(c(0.0, 0.0), c(0.5, 0.0), 10_000, DomainTag::UnitDisc).unwrap();
        let len = path_length(&seg, &density_disc()).unwrap();
        let expected = dist_disc(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((len - expected).abs() < 1e-6);
    }

    #[test]
    fn path_length_refinement_converges() {
        let exact = dist_disc(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        let mut last_err = f64::INFINITY;
        for n in [100usize, 1_000, 10_000] {
            let seg = Polyline::segment(c(0.0, 0.0), c(0.5, 0.0), n, DomainTag::UnitDisc).unwrap();
            let err = (path_length(&seg, &density_disc()).unwrap() - exact).abs();
            assert!(err < last_err, "no improvement at n = {n}");
            last_err = err;
        }
    }

    #[test]
    fn polyline_validation() {
        assert!(Polyline::new(vec![c(0.0, 0.0)], DomainTag::UnitDisc).is_err());
        assert!(Polyline::new(vec![c(0.0, 0.0), c(1.5, 0.0)], DomainTag::UnitDisc).is_err());
    }

    #[test]
    fn euclid_comparison_cases() {
        // imaginary pair: equality
        let r = euclid_comparison(c(0.0, 0.3), c(0.0, -0.7)).unwrap();
        assert!(r.slack.abs() < 1e-9, "slack {}", r.slack);
        // coincident points
        let z = c(0.2, 0.4);
        let r = euclid_comparison(z, z).unwrap();
        assert_eq!((r.d_strip, r.lower, r.slack), (0.0, 0.0, 0.0));
        // real pair: strict slack, frozen from the closed forms
        let r = euclid_comparison(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((r.slack - 0.09597542362209471).abs() < 1e-9);
        assert!(r.slack > 0.0);
    }

    #[test]
    fn geodesic_endpoints_and_length() {
        let (z1, z2) = (c(-0.4, 1.2), c(0.6, -0.3));
        let geo = strip_geodesic(z1, z2, 10_000).unwrap();
        let first = geo.vertices()[0];
        let last = *geo.vertices().last().unwrap();
        assert!((first - z1).norm() < 1e-9);
        assert!((last - z2).norm() < 1e-9);
        let len = path_length(&geo, &density_strip()).unwrap();
        let d = dist_strip(z1, z2).unwrap();
        assert!((len - d).abs() < 1e-6, "geodesic length {len} vs {d}");
    }
}
