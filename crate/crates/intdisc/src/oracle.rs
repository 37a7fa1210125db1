//! Independent numerical checks on positive-definite binary quartics: direct
//! quadrature of ∫f(S) over the plane, the angular (non-homogeneous)
//! representation, and least-squares fits of the branch constants.

use crate::error::{Error, Result};
use crate::forms::{is_positive_definite, FormShape, SymmetricForm};
use crate::quad::{integrate, integrate_2d, QuadratureResult, Tolerance};
use std::f64::consts::PI;

/// Weight f in ∫ f(S) d²x.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// e^{−S}
    Exp,
    /// e^{−S²}
    Exp2,
}

fn require_posdef(f: &SymmetricForm<f64>) -> Result<()> {
    if f.shape() != (FormShape { n: 2, r: 4 }) {
        return Err(Error::Shape(format!("the plane oracle needs a binary quartic, got {}", f.shape())));
    }
    if !is_positive_definite(&f.to_q()?)? {
        return Err(Error::Singular("the quartic is not positive definite; the plane integral diverges".into()));
    }
    Ok(())
}

fn on_circle(f: &SymmetricForm<f64>, theta: f64) -> f64 {
    let (c, s) = (theta.cos(), theta.sin());
    let k = f.coeffs();
    k[0] * c.powi(4) + k[1] * c.powi(3) * s + k[2] * c * c * s * s + k[3] * c * s.powi(3) + k[4] * s.powi(4)
}

/// Lower bound for S on the unit circle: sampled minimum less the largest
/// possible dip between samples, |dS/dθ| ≤ 4Σ|s_a|.
pub fn circle_minimum(f: &SymmetricForm<f64>) -> f64 {
    const N: usize = 8192;
    let h = PI / N as f64;
    let min = (0..N).map(|k| on_circle(f, k as f64 * h)).fold(f64::INFINITY, f64::min);
    let lip = 4.0 * f.coeffs().iter().map(|c| c.abs()).sum::<f64>();
    (min - 0.5 * h * lip).max(0.5 * min)
}

/// Half-width L such that the mass of e^{−m r^p} outside the disc of radius L is below `eps`.
fn cutoff(m: f64, p: i32, eps: f64) -> f64 {
    // ∫_{r>L} e^{−m r⁴} 2πr dr = (π/2)√(π/m) erfc(√m L²); for p = 8 use r⁸ ≥ L⁴r⁴.
    let tail = |l: f64| {
        let mm = if p == 4 { m } else { m * m * l.powi(4) };
        0.5 * PI * (PI / mm).sqrt() * statrs::function::erf::erfc(mm.sqrt() * l * l)
    };
    let mut l = 1.0;
    while tail(l) > eps {
        l *= 1.1;
    }
    l
}

/// ∫_{ℝ²} f(S) d²x for a positive-definite quartic, to relative tolerance `tol`.
pub fn integrate_weight(f: &SymmetricForm<f64>, weight: Weight, tol: f64) -> Result<QuadratureResult> {
    require_posdef(f)?;
    let m = circle_minimum(f);
    let k = f.coeffs().to_vec();
    let s = move |x: f64, y: f64| {
        let (x2, y2) = (x * x, y * y);
        k[0] * x2 * x2 + k[1] * x2 * x * y + k[2] * x2 * y2 + k[3] * x * y2 * y + k[4] * y2 * y2
    };
    // rough scale of the result from the circle minimum
    let scale = 0.5 * PI.sqrt() * PI / m.sqrt();
    let (p, g): (i32, Box<dyn Fn(f64, f64) -> f64>) = match weight {
        Weight::Exp => (4, Box::new(move |x, y| (-s(x, y)).exp())),
        Weight::Exp2 => (8, Box::new(move |x, y| (-s(x, y).powi(2)).exp())),
    };
    let l = cutoff(m, p, 0.1 * tol * scale);
    // split at the origin so the peak lies on cell boundaries
    let t = Tolerance::new(0.1 * tol * scale, tol).with_max_cells(4000);
    let mut total = QuadratureResult { value: 0.0, error: 0.0, cells: 0 };
    for (xa, xb) in [(-l, 0.0), (0.0, l)] {
        for (ya, yb) in [(-l, 0.0), (0.0, l)] {
            let r = integrate_2d(&g, (xa, xb), (ya, yb), t)?;
            total.value += r.value;
            total.error += r.error;
            total.cells += r.cells;
        }
    }
    Ok(total)
}

/// ∫_{ℝ²} e^{−S} d²x.
pub fn integrate_exp_form(f: &SymmetricForm<f64>, tol: f64) -> Result<QuadratureResult> {
    integrate_weight(f, Weight::Exp, tol)
}

/// ∫_{−∞}^{∞} S(1, z)^{−1/2} dz, computed as ∫_{−π/2}^{π/2} S(cos θ, sin θ)^{−1/2} dθ.
pub fn radial_oracle(f: &SymmetricForm<f64>) -> Result<QuadratureResult> {
    if f.shape() != (FormShape { n: 2, r: 4 }) {
        return Err(Error::Shape(format!("the radial oracle needs a binary quartic, got {}", f.shape())));
    }
    if !is_positive_definite(&f.to_q()?)? {
        return Err(Error::Singular("S(1, z) has a real root; the radial integral diverges".into()));
    }
    let g = |th: f64| on_circle(f, th).powf(-0.5);
    let t = Tolerance::new(1e-14, 1e-12);
    let a = integrate(g, -0.5 * PI, 0.0, t)?;
    let b = integrate(g, 0.0, 0.5 * PI, t)?;
    Ok(QuadratureResult { value: a.value + b.value, error: a.error + b.error, cells: a.cells + b.cells })
}

/// Result of fitting oracle ≈ c₁J⁽¹⁾ + c₂J⁽²⁾.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub c1: f64,
    pub c2: f64,
    /// Root-mean-square relative residual over the fitted samples.
    pub rms: f64,
    pub samples: usize,
    /// Largest relative error on held-out samples (every third), when at least six are given.
    pub holdout: Option<f64>,
}

/// One sample: oracle value and the two branch values at the same form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitSample {
    pub oracle: f64,
    pub j1: f64,
    pub j2: f64,
}

fn solve(samples: &[FitSample]) -> Result<(f64, f64)> {
    let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for s in samples {
        let (x, y, w) = (s.j1 / s.oracle, s.j2 / s.oracle, 1.0);
        a11 += x * x;
        a12 += x * y;
        a22 += y * y;
        b1 += x * w;
        b2 += y * w;
    }
    let det = a11 * a22 - a12 * a12;
    if det.abs() <= 1e-12 * (a11 * a22).abs().max(f64::MIN_POSITIVE) {
        return Err(Error::Singular("rank-deficient fit: the samples do not separate the two branches".into()));
    }
    Ok(((b1 * a22 - b2 * a12) / det, (a11 * b2 - a12 * b1) / det))
}

fn rel_err(s: &FitSample, c1: f64, c2: f64) -> f64 {
    (c1 * s.j1 + c2 * s.j2 - s.oracle) / s.oracle
}

/// Least squares in relative error.
pub fn fit_constants(samples: &[FitSample]) -> Result<FitResult> {
    if samples.len() < 3 {
        return Err(Error::Invalid(format!("a fit needs at least 3 samples, got {}", samples.len())));
    }
    if samples.iter().any(|s| !(s.oracle.is_finite() && s.oracle != 0.0 && s.j1.is_finite() && s.j2.is_finite())) {
        return Err(Error::Invalid("fit samples must be finite with non-zero oracle values".into()));
    }
    let (c1, c2) = solve(samples)?;
    let rms = (samples.iter().map(|s| rel_err(s, c1, c2).powi(2)).sum::<f64>() / samples.len() as f64).sqrt();
    let holdout = if samples.len() >= 6 {
        let train: Vec<FitSample> = samples.iter().enumerate().filter(|(i, _)| i % 3 != 2).map(|(_, s)| *s).collect();
        let (h1, h2) = solve(&train)?;
        Some(samples.iter().skip(2).step_by(3).map(|s| rel_err(s, h1, h2).abs()).fold(0.0, f64::max))
    } else {
        None
    };
    Ok(FitResult { c1, c2, rms, samples: samples.len(), holdout })
}

/// Fit file body: `c1 = …`, `c2 = …`, `rms = …`.
pub fn format_fit(r: &FitResult) -> String {
    format!("c1 = {:.17e}\nc2 = {:.17e}\nrms = {:.6e}\n", r.c1, r.c2, r.rms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::MultiIndex;
    use crate::specfun::gamma_fn;

    fn quartic(c: [f64; 5]) -> SymmetricForm<f64> {
        SymmetricForm::from_coeffs(FormShape { n: 2, r: 4 }, c.to_vec()).unwrap()
    }

    #[test]
    fn separable_and_rotational_quartics() {
        let g14 = gamma_fn(0.25).unwrap();
        let r = integrate_exp_form(&quartic([1.0, 0.0, 0.0, 0.0, 1.0]), 1e-9).unwrap();
        assert!((r.value / (g14 * g14 / 4.0) - 1.0).abs() < 1e-7, "{r:?}");
        let r = integrate_exp_form(&quartic([1.0, 0.0, 2.0, 0.0, 1.0]), 1e-9).unwrap();
        assert!((r.value / (PI.powf(1.5) / 2.0) - 1.0).abs() < 1e-7, "{r:?}");
    }

    #[test]
    fn radial_relation_is_exact() {
        let f = quartic([1.0, 0.3, 0.5, -0.2, 2.0]);
        let (a, b) = (integrate_exp_form(&f, 1e-10).unwrap(), radial_oracle(&f).unwrap());
        assert!((a.value / b.value - PI.sqrt() / 2.0).abs() < 1e-7);
    }

    #[test]
    fn rejects_indefinite_forms() {
        let f = SymmetricForm::make(FormShape { n: 2, r: 4 }, vec![(MultiIndex::new(&[2, 2]), 1.0)]).unwrap();
        assert!(integrate_exp_form(&f, 1e-6).is_err());
        assert!(radial_oracle(&quartic([1.0, 0.0, -3.0, 0.0, 1.0])).is_err());
    }

    #[test]
    fn fit_recovers_known_constants() {
        let s: Vec<FitSample> =
            (1..8).map(|k| FitSample { oracle: 2.0 * k as f64 + 0.5 * (k * k) as f64, j1: k as f64, j2: (k * k) as f64 }).collect();
        let r = fit_constants(&s).unwrap();
        assert!((r.c1 - 2.0).abs() < 1e-12 && (r.c2 - 0.5).abs() < 1e-12 && r.rms < 1e-14);
        assert!(r.holdout.unwrap() < 1e-12);
        let flat: Vec<FitSample> = (1..5).map(|_| FitSample { oracle: 1.0, j1: 1.0, j2: 2.0 }).collect();
        assert!(fit_constants(&flat).is_err());
    }
}
