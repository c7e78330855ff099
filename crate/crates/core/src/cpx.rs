//! Complex scalar type and small helpers shared across the crate.

use std::f64::consts::TAU;

/// Complex coordinate used everywhere: a pair of `f64`s.
pub type Cpx = num_complex::Complex64;

/// `i` as a constant.
pub const I: Cpx = Cpx::new(0.0, 1.0);

/// Both components finite (no NaN/Inf).
pub fn is_finite(z: Cpx) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Argument in `[0, 2*pi)`.
///
/// Rotation-based extremal constructions use this convention; the principal
/// `(-pi, pi]` branch stays available through [`Cpx::arg`]. On the right
/// half-plane the principal branch lands in `(-pi/2, pi/2)`, which is the
/// convention the `l_r`-circle computations rely on.
pub fn arg_0_2pi(z: Cpx) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}
