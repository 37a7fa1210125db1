use intdisc::specfun::{
    fd_derivatives, gamma_fn, gauss_2f1, gauss_2f1_jet, hyp2f1_integral, integral_g25, route_of, series_g25, series_g25_jet,
    G25Point, Hyp2F1Params, Route,
};
use intdisc::wardops::{gauss_ode_residual, pde_residuals_25};
use intdisc::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// |residual| / Σ|terms| of Gauss's equation. Derivatives come from the contiguous
/// functions when those are evaluable, otherwise from extrapolated central differences.
/// Beyond t = 1 the real branch is not closed under contiguous shifts, so differences are used there.
fn ode_relative_residual(a: f64, b: f64, c: f64, t: f64) -> f64 {
    let jet = if route_of(t) == Route::Inversion {
        Err(Error::Unsupported("real branch".into()))
    } else {
        gauss_2f1_jet(Hyp2F1Params::new(a, b, c, t))
    };
    let (f0, f1, f2) = match jet {
        Ok(j) => j,
        Err(Error::Unsupported(_)) => {
            let h = 0.02 * ((t - 1.0).abs() / 5.0).min(1.0) * t.abs().max(1.0);
            let f = |x: f64| gauss_2f1(Hyp2F1Params::new(a, b, c, x));
            let (f0, d1, d2) = fd_derivatives(f, t, h).unwrap();
            let (_, e1, e2) = fd_derivatives(f, t, 0.5 * h).unwrap();
            (f0, (16.0 * e1 - d1) / 15.0, (16.0 * e2 - d2) / 15.0)
        }
        Err(e) => panic!("({a}, {b}; {c}; {t}): {e}"),
    };
    let res = gauss_ode_residual(a, b, c, t, f0, f1, f2);
    let scale = (t * (1.0 - t) * f2).abs() + ((c - (a + b + 1.0) * t) * f1).abs() + (a * b * f0).abs();
    res.abs() / scale
}

const PARAMS: [(f64, f64, f64); 6] = [
    (0.3, 0.7, 1.9),
    (1.0 / 12.0, 5.0 / 12.0, 0.5),
    (7.0 / 12.0, 11.0 / 12.0, 1.5),
    (1.0 / 12.0, 1.0 / 12.0, 0.5),
    (7.0 / 12.0, 7.0 / 12.0, 1.5),
    (-0.4, 1.3, 2.2),
];

#[test]
fn gauss_equation_holds_on_every_route() {
    let points = [-6.0, -0.8, -0.3, 0.05, 0.4, 0.6, 0.8, 0.93, 1.6, 3.0, 12.0];
    let mut seen = Vec::new();
    for &(a, b, c) in &PARAMS {
        for &t in &points {
            if route_of(t) == Route::Inversion && (b - a).fract() == 0.0 {
                assert!(matches!(gauss_2f1(Hyp2F1Params::new(a, b, c, t)), Err(Error::Unsupported(_))));
                continue;
            }
            let res = ode_relative_residual(a, b, c, t);
            assert!(res < 1e-8, "({a}, {b}; {c}; {t}) via {}: {res:e}", route_of(t));
            seen.push(route_of(t));
        }
    }
    // c = a + b exercises the logarithmic connection near 1
    for t in [0.6, 0.8, 0.95] {
        let res = ode_relative_residual(0.25, 0.75, 1.0, t);
        assert!(res < 1e-8, "log case t = {t}: {res:e}");
    }
    for r in [Route::Series, Route::NearOne, Route::Pfaff, Route::Inversion] {
        assert!(seen.contains(&r), "route {r} not exercised");
    }
}

#[test]
fn gauss_summation_at_one() {
    for (a, b, c) in [(0.3, 0.7, 1.9), (-0.4, 1.3, 2.2), (7.0 / 12.0, 11.0 / 12.0, 2.0)] {
        assert_eq!(route_of(1.0), Route::GaussSum);
        let exact = gamma_fn(c).unwrap() * gamma_fn(c - a - b).unwrap() / (gamma_fn(c - a).unwrap() * gamma_fn(c - b).unwrap());
        let v = gauss_2f1(Hyp2F1Params::new(a, b, c, 1.0)).unwrap();
        assert!((v / exact - 1.0).abs() < 1e-13);
    }
    assert!(matches!(gauss_2f1(Hyp2F1Params::new(1.0 / 12.0, 5.0 / 12.0, 0.5, 1.0)), Err(Error::DiscriminantLocus { .. })));
    assert!(matches!(gauss_2f1(Hyp2F1Params::new(7.0 / 12.0, 11.0 / 12.0, 1.0, 1.0)), Err(Error::Divergent(_))));
}

#[test]
fn integral_representation_agrees_at_fifty_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = rng.gen_range(-1.0..2.0);
        let b = rng.gen_range(0.15..1.5);
        let c = b + rng.gen_range(0.2..2.0);
        let t = rng.gen_range(-5.0..0.95);
        let p = Hyp2F1Params::new(a, b, c, t);
        let (x, y) = (gauss_2f1(p).unwrap(), hyp2f1_integral(p).unwrap());
        let rel = (x - y).abs() / y.abs();
        assert!(rel < 1e-8, "{p:?}: {x} vs {y}");
        worst = worst.max(rel);
    }
    assert!(worst < 1e-8);
}

fn grid() -> Vec<G25Point> {
    let mut out = Vec::new();
    for u in [-0.01, -0.004, 0.0, 0.003, 0.008] {
        for v in [-0.008, -0.002, 0.0, 0.002, 0.006] {
            out.push(G25Point { u, v });
        }
    }
    out
}

#[test]
fn quintic_series_matches_double_integral() {
    for pt in grid() {
        let (s, q) = (series_g25(pt, 1e-15).unwrap(), integral_g25(pt).unwrap());
        assert!((s - q).abs() < 1e-6 * s.abs(), "{pt:?}: {s} vs {q}");
    }
}

#[test]
fn quintic_series_solves_both_equations() {
    for pt in grid() {
        let jet = series_g25_jet(pt, 1e-15).unwrap();
        let (r1, r2) = pde_residuals_25(&jet, pt.u, pt.v);
        let scale = jet.g.abs();
        assert!(r1.abs() < 1e-6 * scale && r2.abs() < 1e-6 * scale, "{pt:?}: {r1:e} {r2:e}");
    }
}

#[test]
fn quintic_series_refuses_outside_its_region() {
    assert!(series_g25(G25Point { u: 0.02, v: 0.0 }, 1e-12).is_err());
    assert!(series_g25(G25Point { u: 0.0, v: -0.015 }, 1e-12).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_and_pfaff_overlap(a in -1.0f64..2.0, b in -1.0f64..2.0, c in 0.3f64..3.0, t in -0.5f64..-0.3) {
        let direct = gauss_2f1(Hyp2F1Params::new(a, b, c, t)).unwrap();
        let pfaff = (1.0 - t).powf(-a) * gauss_2f1(Hyp2F1Params::new(a, c - b, c, t / (t - 1.0))).unwrap();
        prop_assert!((direct - pfaff).abs() <= 1e-12 * direct.abs().max(1.0));
    }

    #[test]
    fn symmetric_in_a_and_b(a in -1.0f64..2.0, b in -1.0f64..2.0, c in 0.3f64..3.0, t in -4.0f64..0.9) {
        let x = gauss_2f1(Hyp2F1Params::new(a, b, c, t)).unwrap();
        let y = gauss_2f1(Hyp2F1Params::new(b, a, c, t)).unwrap();
        prop_assert!((x - y).abs() <= 1e-11 * x.abs().max(1.0));
    }
}
