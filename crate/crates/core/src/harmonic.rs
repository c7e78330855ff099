//! Poisson-integral engine: harmonic functions on the disc synthesised from
//! sampled boundary data, their associated holomorphic functions, assembled
//! complex-valued harmonic maps, and dilatation estimates.
//!
//! A [`BoundarySignal`] holds `N` real samples at the uniform angles
//! `t_k = 2 pi k / N`. All integrals are uniform trapezoid sums over those
//! samples (for periodic integrands the trapezoid rule is the rectangle
//! rule), which is spectrally accurate: for a trigonometric polynomial of
//! degree `m` evaluated at radius `r`, the only error is the aliasing tail
//! of order `r^(N-m)`. Representative magnitudes for `m = 16`:
//!
//! | r    | N = 256 | N = 512 | N = 1024 |
//! |------|---------|---------|----------|
//! | 0.90 | 1e-11   | 5e-23   | exact-ish|
//! | 0.95 | 5e-6    | 9e-12   | 4e-23    |
//! | 0.99 | 9e-2    | 7e-3    | 4e-5     |
//!
//! The default evaluation radius cap is `0.99`; keep test evaluations at or
//! below `0.95` for the default sample counts, or raise `N`.
//!
//! Three kernels share the samples:
//!
//! * Poisson: `u(z) = (1/N) sum g_k (1 - |z|^2)/|e_k - z|^2`, the harmonic
//!   extension of the boundary data;
//! * Schwarz/Herglotz: `F(z) = (1/N) sum g_k (e_k + z)/(e_k - z)`, the
//!   holomorphic function with `Re F = u` and `Im F(0) = 0`;
//! * its derivative: `F'(z) = (1/N) sum g_k 2 e_k/(e_k - z)^2`, whose modulus
//!   equals `|grad u|`.

use std::f64::consts::TAU;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cpx::Cpx;
use crate::error::{Error, Result};
use crate::planarmaps::{DomainTag, WirtingerMap};

/// Fewest samples a signal may carry.
pub const MIN_SIGNAL_LEN: usize = 64;

/// Sample count used when none is requested.
pub const DEFAULT_SIGNAL_LEN: usize = 512;

/// Default evaluation radius cap.
pub const DEFAULT_RADIUS_CAP: f64 = 0.99;

/// Dense reference grid on which random signals are normalised. Power-of-two
/// sample counts up to this size nest inside it, so the same seed yields the
/// same underlying trigonometric polynomial at every such `N`.
const NORMALIZATION_GRID: usize = 2048;

/// Real boundary data at `N` uniform angles on the unit circle.
#[derive(Debug, Clone)]
pub struct BoundarySignal {
    samples: Vec<f64>,
    seed: Option<u64>,
    units: Vec<Cpx>,
}

#[derive(Serialize, Deserialize)]
struct SignalData {
    n: usize,
    seed: Option<u64>,
    samples: Vec<f64>,
}

fn unit_points(n: usize) -> Vec<Cpx> {
    (0..n)
        .map(|k| Cpx::from_polar(1.0, TAU * k as f64 / n as f64))
        .collect()
}

impl BoundarySignal {
    /// Wrap explicit samples; at least [`MIN_SIGNAL_LEN`] of them, all finite.
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.len() < MIN_SIGNAL_LEN {
            return Err(Error::SignalTooShort {
                min: MIN_SIGNAL_LEN,
                got: samples.len(),
            });
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite {
                context: "boundary signal samples",
            });
        }
        let units = unit_points(samples.len());
        Ok(BoundarySignal {
            samples,
            seed: None,
            units,
        })
    }

    /// Sample `f` at the `n` uniform angles `t_k = 2 pi k / n`.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        BoundarySignal::new((0..n).map(|k| f(TAU * k as f64 / n as f64)).collect())
    }

    /// Constant boundary data.
    pub fn constant(n: usize, value: f64) -> Result<Self> {
        BoundarySignal::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Seed recorded by [`random_signal`], if any.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, s| m.max(s.abs()))
    }

    /// Shift every sample by `delta` (harmonic extensions shift with it).
    pub fn shifted(&self, delta: f64) -> Result<Self> {
        let mut out = BoundarySignal::new(self.samples.iter().map(|s| s + delta).collect())?;
        out.seed = self.seed;
        Ok(out)
    }

    /// Multiply every sample by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let mut out = BoundarySignal::new(self.samples.iter().map(|s| s * factor).collect())?;
        out.seed = self.seed;
        Ok(out)
    }

    /// JSON round-trip: samples plus `n` and seed metadata, exact for finite
    /// values.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SignalData {
            n: self.len(),
            seed: self.seed,
            samples: self.samples.clone(),
        })
        .expect("signal serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: SignalData =
            serde_json::from_str(text).map_err(|e| Error::SignalFormat(e.to_string()))?;
        if data.n != data.samples.len() {
            return Err(Error::SignalFormat(format!(
                "declared n = {} but {} samples present",
                data.n,
                data.samples.len()
            )));
        }
        let mut signal = BoundarySignal::new(data.samples)?;
        signal.seed = data.seed;
        Ok(signal)
    }
}

/// Deterministic random trigonometric polynomial of degree at most `modes`,
/// rescaled so its maximum modulus on the circle is `bound`, sampled at
/// [`DEFAULT_SIGNAL_LEN`] points.
pub fn random_signal(seed: u64, bound: f64, modes: usize) -> Result<BoundarySignal> {
    random_signal_with_len(seed, bound, modes, DEFAULT_SIGNAL_LEN)
}

/// Same as [`random_signal`] with an explicit sample count. The coefficients
/// and the normalisation depend only on `seed`, `bound`, and `modes`, so
/// different sample counts of the same seed sample one fixed function.
pub fn random_signal_with_len(
    seed: u64,
    bound: f64,
    modes: usize,
    n: usize,
) -> Result<BoundarySignal> {
    if !(0.0 < bound && bound < 1.0) {
        return Err(Error::InvalidParameter {
            name: "bound",
            value: bound,
            expected: "(0, 1)",
        });
    }
    if modes == 0 {
        return Err(Error::InvalidParameter {
            name: "modes",
            value: 0.0,
            expected: "modes >= 1",
        });
    }
    if n < MIN_SIGNAL_LEN || modes > n / 4 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            expected: "n >= 64 with modes <= n/4",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a0: f64 = rng.random_range(-1.0..1.0);
    let mut coeffs = Vec::with_capacity(modes);
    for _ in 0..modes {
        let a: f64 = rng.random_range(-1.0..1.0);
        let b: f64 = rng.random_range(-1.0..1.0);
        coeffs.push((a, b));
    }
    // angle-addition recurrence: one cos/sin pair per grid point, then
    // cos((j+1)t), sin((j+1)t) from cos(jt), sin(jt)
    let poly = |t: f64| {
        let (st, ct) = t.sin_cos();
        let (mut cj, mut sj) = (1.0, 0.0);
        let mut v = a0;
        for &(a, b) in &coeffs {
            let c_next = cj * ct - sj * st;
            let s_next = sj * ct + cj * st;
            v += a * c_next + b * s_next;
            (cj, sj) = (c_next, s_next);
        }
        v
    };
    let mut max = 0.0_f64;
    for k in 0..NORMALIZATION_GRID {
        max = max.max(poly(TAU * k as f64 / NORMALIZATION_GRID as f64).abs());
    }
    let scale = if max > 0.0 { bound / max } else { 0.0 };
    let mut signal = BoundarySignal::from_fn(n, |t| scale * poly(t))?;
    signal.seed = Some(seed);
    Ok(signal)
}

/// A harmonic function on the disc represented by its boundary samples,
/// evaluable inside a radius cap.
#[derive(Debug, Clone)]
pub struct PoissonFunction {
    signal: BoundarySignal,
    cap: f64,
}

impl PoissonFunction {
    pub fn new(signal: BoundarySignal) -> Self {
        PoissonFunction {
            signal,
            cap: DEFAULT_RADIUS_CAP,
        }
    }

    pub fn with_cap(signal: BoundarySignal, cap: f64) -> Result<Self> {
        if !(0.0 < cap && cap < 1.0) {
            return Err(Error::InvalidParameter {
                name: "cap",
                value: cap,
                expected: "(0, 1)",
            });
        }
        Ok(PoissonFunction { signal, cap })
    }

    pub fn signal(&self) -> &BoundarySignal {
        &self.signal
    }

    pub fn cap(&self) -> f64 {
        self.cap
    }

    fn check(&self, z: Cpx) -> Result<()> {
        let m = z.norm();
        if m <= self.cap {
            Ok(())
        } else {
            Err(Error::BeyondRadiusCap {
                cap: self.cap,
                modulus: m,
            })
        }
    }

    /// Poisson extension of the boundary data at `z`.
    pub fn eval(&self, z: Cpx) -> Result<f64> {
        self.check(z)?;
        let num = 1.0 - z.norm_sqr();
        let mut sum = 0.0;
        for (g, &e) in self.signal.samples.iter().zip(&self.signal.units) {
            sum += g * num / (e - z).norm_sqr();
        }
        Ok(sum / self.signal.len() as f64)
    }

    /// The associated holomorphic function: `Re F` is the Poisson extension
    /// and `Im F(0) = 0`.
    pub fn associated(&self, z: Cpx) -> Result<Cpx> {
        self.check(z)?;
        let mut sum = Cpx::new(0.0, 0.0);
        for (g, &e) in self.signal.samples.iter().zip(&self.signal.units) {
            sum += g * (e + z) / (e - z);
        }
        Ok(sum / self.signal.len() as f64)
    }

    /// `F'(z)`, the derivative of the associated holomorphic function; its
    /// modulus is `|grad u|` at `z`.
    pub fn associated_deriv(&self, z: Cpx) -> Result<Cpx> {
        self.check(z)?;
        let mut sum = Cpx::new(0.0, 0.0);
        for (g, &e) in self.signal.samples.iter().zip(&self.signal.units) {
            let d = e - z;
            sum += g * 2.0 * e / (d * d);
        }
        Ok(sum / self.signal.len() as f64)
    }

    /// `|grad u|(z) = |F'(z)|`.
    pub fn grad_modulus(&self, z: Cpx) -> Result<f64> {
        Ok(self.associated_deriv(z)?.norm())
    }
}

/// Poisson extension of `g` at `z` under the default radius cap.
pub fn poisson_eval(g: &BoundarySignal, z: Cpx) -> Result<f64> {
    PoissonFunction::new(g.clone()).eval(z)
}

/// Associated holomorphic function of `g` at `z` (Schwarz/Herglotz integral).
pub fn schwarz_integral(g: &BoundarySignal, z: Cpx) -> Result<Cpx> {
    PoissonFunction::new(g.clone()).associated(z)
}

/// Gradient modulus of the Poisson extension of `g` at `z`.
pub fn grad_modulus(g: &BoundarySignal, z: Cpx) -> Result<f64> {
    PoissonFunction::new(g.clone()).grad_modulus(z)
}

/// A complex-valued harmonic map `u + i s v` built from two Poisson parts.
#[derive(Debug, Clone)]
pub struct HarmonicPlanarMap {
    u_part: PoissonFunction,
    v_part: PoissonFunction,
    v_scale: f64,
}

impl HarmonicPlanarMap {
    pub fn u_part(&self) -> &PoissonFunction {
        &self.u_part
    }

    pub fn v_part(&self) -> &PoissonFunction {
        &self.v_part
    }

    pub fn v_scale(&self) -> f64 {
        self.v_scale
    }
}

impl WirtingerMap for HarmonicPlanarMap {
    fn eval(&self, z: Cpx) -> Result<Cpx> {
        Ok(Cpx::new(
            self.u_part.eval(z)?,
            self.v_scale * self.v_part.eval(z)?,
        ))
    }

    /// `f_z = (F_u' + i s F_v')/2`, `f_zbar = (conj F_u' + i s conj F_v')/2`.
    fn wirtinger(&self, z: Cpx) -> Result<(Cpx, Cpx)> {
        let du = self.u_part.associated_deriv(z)?;
        let dv = self.v_part.associated_deriv(z)? * self.v_scale;
        let i = Cpx::new(0.0, 1.0);
        Ok(((du + i * dv) / 2.0, (du.conj() + i * dv.conj()) / 2.0))
    }
}

/// Assemble `u + i scale_v * v` from boundary parts. `g_u` must be bounded
/// into `(-1, 1)`; the real part is additionally codomain-checked on a polar
/// grid so the map lands in the strip.
pub fn assemble_hqr(
    g_u: BoundarySignal,
    g_v: BoundarySignal,
    scale_v: f64,
) -> Result<HarmonicPlanarMap> {
    if !scale_v.is_finite() {
        return Err(Error::InvalidParameter {
            name: "scale_v",
            value: scale_v,
            expected: "finite",
        });
    }
    if g_u.max_abs() > 1.0 {
        return Err(Error::CodomainViolation {
            codomain: DomainTag::Strip,
            value: Cpx::new(g_u.max_abs(), 0.0),
        });
    }
    let map = HarmonicPlanarMap {
        u_part: PoissonFunction::new(g_u),
        v_part: PoissonFunction::new(g_v),
        v_scale: scale_v,
    };
    // codomain check on a coarse polar grid
    for i in 0..16 {
        let r = 0.95 * (i as f64 + 1.0) / 16.0;
        for j in 0..16 {
            let z = Cpx::from_polar(r, TAU * j as f64 / 16.0);
            let u = map.u_part.eval(z)?;
            if u.abs() >= 1.0 {
                return Err(Error::CodomainViolation {
                    codomain: DomainTag::Strip,
                    value: Cpx::new(u, 0.0),
                });
            }
        }
    }
    Ok(map)
}

/// Dilatation survey of a map over a polar grid.
#[derive(Debug, Clone, Copy)]
pub struct DilatationEstimate {
    /// Largest dilatation quotient seen; `+inf` when some grid point was not
    /// sense-preserving.
    pub k_hat: f64,
    /// `|f_z| > |f_zbar|` at every grid point.
    pub sense_preserving: bool,
}

/// Estimate the quasiregularity constant of `map` as the maximum of
/// `(|f_z| + |f_zbar|)/(|f_z| - |f_zbar|)` over an `n x n` polar grid of the
/// given radius. The max-reduction is order-insensitive.
pub fn estimate_k<M: WirtingerMap + ?Sized>(
    map: &M,
    grid_radius: f64,
    n: usize,
) -> Result<DilatationEstimate> {
    if !(0.0 < grid_radius && grid_radius < 1.0) {
        return Err(Error::InvalidParameter {
            name: "grid_radius",
            value: grid_radius,
            expected: "(0, 1)",
        });
    }
    if n < 16 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            expected: "n >= 16",
        });
    }
    let mut k_hat = 1.0_f64;
    let mut sense_preserving = true;
    for i in 0..n {
        let r = grid_radius * (i as f64 + 1.0) / n as f64;
        for j in 0..n {
            let z = Cpx::from_polar(r, TAU * j as f64 / n as f64);
            let (fz, fzbar) = map.wirtinger(z)?;
            let (p, q) = (fz.norm(), fzbar.norm());
            if p <= q {
                sense_preserving = false;
                k_hat = f64::INFINITY;
            } else {
                k_hat = k_hat.max((p + q) / (p - q));
            }
        }
    }
    Ok(DilatationEstimate {
        k_hat,
        sense_preserving,
    })
}
