//! Cross-module property tests: algebraic identities between the maps, the
//! metrics, the disc extents, and the bound evaluators.

use proptest::prelude::*;
use std::f64::consts::TAU;

use discstrip::bounds::{self, BoundKind};
use discstrip::cpx::Cpx;
use discstrip::discgeom::{
    boundary_curve, extents_numeric, lambda_of_r, strip_disc_extents_closed,
    strip_disc_maxmod_closed, HypDisc,
};
use discstrip::harmonic::{poisson_eval, random_signal};
use discstrip::hypgeom::{
    density_disc, density_strip, dist_disc, dist_strip, pseudo_dist,
};
use discstrip::planarmaps::{
    compose, disc_automorphism, phi, phi_b, psi_k, rotation, tan_map, vertical_stretch,
    wirtinger_fd, PlanarMap,
};

fn disc_point(max_r: f64) -> impl Strategy<Value = Cpx> {
    (0.0..max_r, 0.0..TAU).prop_map(|(r, t)| Cpx::from_polar(r, t))
}

fn strip_point(max_re: f64, max_im: f64) -> impl Strategy<Value = Cpx> {
    (-max_re..max_re, -max_im..max_im).prop_map(|(x, y)| Cpx::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn automorphism_is_involution(a in disc_point(0.9), z in disc_point(0.95)) {
        let m = disc_automorphism(a).unwrap();
        let round = m.eval(m.eval(z).unwrap()).unwrap();
        prop_assert!((round - z).norm() < 1e-10);
    }

    #[test]
    fn pseudo_dist_is_automorphism_modulus(a in disc_point(0.9), z in disc_point(0.9)) {
        let m = disc_automorphism(a).unwrap();
        let lhs = pseudo_dist(z, a).unwrap();
        prop_assert!((lhs - m.eval(z).unwrap().norm()).abs() < 1e-12);
    }

    #[test]
    fn density_pullback_identity(w in disc_point(0.97)) {
        let to_strip = phi();
        let (dz, _) = to_strip.wirtinger(w).unwrap();
        let lhs = density_strip().at(to_strip.eval(w).unwrap()).unwrap() * dz.norm();
        let rhs = density_disc().at(w).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
    }

    #[test]
    fn disc_metric_symmetry_and_triangle(
        z1 in disc_point(0.95),
        z2 in disc_point(0.95),
        z3 in disc_point(0.95),
    ) {
        let d12 = dist_disc(z1, z2).unwrap();
        let d21 = dist_disc(z2, z1).unwrap();
        prop_assert!((d12 - d21).abs() < 1e-12);
        let d13 = dist_disc(z1, z3).unwrap();
        let d32 = dist_disc(z3, z2).unwrap();
        prop_assert!(d12 <= d13 + d32 + 1e-12);
        prop_assert!(d12 >= 0.0);
    }

    #[test]
    fn strip_metric_symmetry(
        z1 in strip_point(0.95, 3.0),
        z2 in strip_point(0.95, 3.0),
    ) {
        let d12 = dist_strip(z1, z2).unwrap();
        prop_assert!((d12 - dist_strip(z2, z1).unwrap()).abs() < 1e-12);
    }

    // stay within |Im| <= 2 here: the atanh amplification near the far ends
    // of the strip pushes the raw rounding error of the closed form above
    // the 1e-12 the triangle comparison asks for
    #[test]
    fn strip_metric_triangle(
        z1 in strip_point(0.95, 2.0),
        z2 in strip_point(0.95, 2.0),
        z3 in strip_point(0.95, 2.0),
    ) {
        let d12 = dist_strip(z1, z2).unwrap();
        prop_assert!(d12 <= dist_strip(z1, z3).unwrap() + dist_strip(z3, z2).unwrap() + 1e-12);
        prop_assert!(d12 >= 0.0);
    }

    #[test]
    fn strip_distance_is_conformally_invariant(
        w1 in disc_point(0.9),
        w2 in disc_point(0.9),
    ) {
        let to_strip = phi();
        let lhs = dist_strip(to_strip.eval(w1).unwrap(), to_strip.eval(w2).unwrap()).unwrap();
        prop_assert!((lhs - dist_disc(w1, w2).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn strip_dominates_scaled_euclidean(
        z1 in strip_point(0.95, 3.0),
        z2 in strip_point(0.95, 3.0),
    ) {
        let cmp = discstrip::hypgeom::euclid_comparison(z1, z2).unwrap();
        prop_assert!(cmp.slack >= -1e-12);
    }

    #[test]
    fn signal_mean_value_property(seed in 0u64..1_000_000, modes in 1usize..16) {
        let g = random_signal(seed, 0.9, modes).unwrap();
        let at_zero = poisson_eval(&g, Cpx::new(0.0, 0.0)).unwrap();
        prop_assert!((at_zero - g.mean()).abs() < 1e-12);
        prop_assert!(g.max_abs() <= 0.9 + 1e-15);
    }

    #[test]
    fn interval_bound_ordered_and_contains_center(
        b in -0.9f64..0.9,
        r in 0.01f64..0.99,
    ) {
        let (m, big_m) = bounds::bound_value(BoundKind::HarmonicInterval(b), r)
            .unwrap()
            .interval();
        prop_assert!(m < b && b < big_m);
    }
}

/// Every constructor's exact Wirtinger pair against central differences,
/// inside the region where the truncation term stays below `100 h^2`.
#[test]
fn wirtinger_pairs_match_finite_differences() {
    let h = 1e-5;
    let tol = 100.0 * h * h + 1e-9;
    let disc_maps: Vec<(&str, PlanarMap)> = vec![
        ("automorphism", disc_automorphism(Cpx::new(0.3, -0.2)).unwrap()),
        ("phi", phi()),
        ("phi_b", phi_b(0.4).unwrap()),
        ("psi_k", psi_k(2.5).unwrap()),
        ("rotation", rotation(0.9)),
        (
            "phi after rotation",
            compose(&phi(), &rotation(2.1)).unwrap(),
        ),
    ];
    for (name, m) in &disc_maps {
        for i in 0..6 {
            for j in 0..8 {
                let z = Cpx::from_polar(0.8 * (i as f64 + 0.5) / 6.0, TAU * j as f64 / 8.0);
                let (fz, fzbar) = m.wirtinger(z).unwrap();
                let (gz, gzbar) = wirtinger_fd(m, z, h).unwrap();
                assert!((fz - gz).norm() < tol, "{name} f_z at {z}");
                assert!((fzbar - gzbar).norm() < tol, "{name} f_zbar at {z}");
            }
        }
    }
    let strip_maps: Vec<(&str, PlanarMap)> =
        vec![("tan", tan_map()), ("stretch", vertical_stretch(3.0).unwrap())];
    for (name, m) in &strip_maps {
        for i in 0..6 {
            for j in 0..5 {
                let z = Cpx::new(-0.8 + 0.32 * i as f64, -1.0 + 0.5 * j as f64);
                let (fz, fzbar) = m.wirtinger(z).unwrap();
                let (gz, gzbar) = wirtinger_fd(m, z, h).unwrap();
                assert!((fz - gz).norm() < tol, "{name} f_z at {z}");
                assert!((fzbar - gzbar).norm() < tol, "{name} f_zbar at {z}");
            }
        }
    }
}

#[test]
fn inverse_pair_on_dense_grids() {
    // tan(phi(z)) = z up to |z| = 0.99
    let disc_to_disc = compose(&tan_map(), &phi()).unwrap();
    for i in 0..20 {
        for j in 0..20 {
            let z = Cpx::from_polar(0.99 * (i as f64 + 0.5) / 20.0, TAU * j as f64 / 20.0);
            let d = (disc_to_disc.eval(z).unwrap() - z).norm();
            assert!(d < 1e-9, "tan(phi(z)) off by {d:e} at {z}");
        }
    }
    // phi(tan(z)) = z across the strip, far along the imaginary direction
    let strip_to_strip = compose(&phi(), &tan_map()).unwrap();
    for i in 0..15 {
        for j in 0..21 {
            let z = Cpx::new(-0.99 + 1.98 * i as f64 / 14.0, -10.0 + j as f64);
            let d = (strip_to_strip.eval(z).unwrap() - z).norm();
            assert!(d < 1e-9, "phi(tan(z)) off by {d:e} at {z}");
        }
    }
}

#[test]
fn strip_range_of_disc_maps() {
    let maps = [phi(), psi_k(4.0).unwrap(), phi_b(0.7).unwrap()];
    for m in &maps {
        for i in 0..15 {
            for j in 0..16 {
                let z = Cpx::from_polar(0.999 * (i as f64 + 1.0) / 15.0, TAU * j as f64 / 16.0);
                let w = m.eval(z).unwrap();
                assert!(w.re.abs() < 1.0, "left the strip at {z}: {w}");
            }
        }
    }
}

#[test]
fn phi_b_monotone_decreasing() {
    for b in [-0.6, 0.0, 0.5] {
        let m = phi_b(b).unwrap();
        let mut prev = f64::INFINITY;
        for k in 0..50 {
            let x = -0.98 + 0.04 * k as f64;
            let v = m.eval(Cpx::new(x, 0.0)).unwrap().re;
            assert!(v < prev, "b={b}: not decreasing at {x}");
            prev = v;
        }
    }
}

#[test]
fn strip_disc_box_and_tightness() {
    for k in [1usize, 7, 13, 19] {
        let r = 0.05 * k as f64;
        let ext = strip_disc_extents_closed(r).unwrap();
        assert!(ext.re_max < 1.0);
        let disc = HypDisc::in_strip(Cpx::new(0.0, 0.0), lambda_of_r(r).unwrap()).unwrap();
        let curve = boundary_curve(&disc, 4096).unwrap();
        for &v in curve.vertices() {
            assert!(v.re.abs() <= ext.re_max + 1e-10);
            assert!(v.im.abs() <= ext.im_max + 1e-10);
        }
        let num = extents_numeric(&disc, 100_000).unwrap();
        assert!((num.re_max - ext.re_max).abs() < 1e-7, "r={r}");
    }
}

#[test]
fn strip_disc_maxmod_attained_on_imaginary_axis() {
    for lambda in [0.25, 1.0, 2.5, 4.0] {
        let disc = HypDisc::in_strip(Cpx::new(0.0, 0.0), lambda).unwrap();
        let num = extents_numeric(&disc, 100_000).unwrap();
        let closed = strip_disc_maxmod_closed(lambda).unwrap();
        assert!((num.mod_max - closed).abs() < 1e-7, "lambda={lambda}");
        let target = Cpx::new(0.0, closed);
        let dist = (num.argmax_mod - target)
            .norm()
            .min((num.argmax_mod + target).norm());
        assert!(dist < 1e-3, "lambda={lambda}: argmax at {}", num.argmax_mod);
    }
}

#[test]
fn shared_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<PlanarMap>();
    check::<discstrip::harmonic::BoundarySignal>();
    check::<discstrip::harmonic::PoissonFunction>();
    check::<discstrip::harmonic::HarmonicPlanarMap>();
    check::<discstrip::hypgeom::Density>();
    check::<discstrip::hypgeom::Polyline>();
    check::<HypDisc>();
    check::<discstrip::verify::VerificationReport>();
}

#[test]
fn bounds_are_the_disc_extents() {
    for k in 1..=19 {
        let r = 0.05 * k as f64;
        let harm = bounds::bound_value(BoundKind::HarmonicDisc, r).unwrap().modulus();
        let hol = bounds::bound_value(BoundKind::HolStrip, r).unwrap().modulus();
        let ext = strip_disc_extents_closed(r).unwrap();
        assert!((harm - ext.re_max).abs() < 1e-12);
        let maxmod = strip_disc_maxmod_closed(lambda_of_r(r).unwrap()).unwrap();
        assert!((hol - maxmod).abs() < 1e-12);
    }
}
