//! Γ, Pochhammer symbols, the Gauss function ₂F₁ on the real line and the
//! two-variable series G(u, v) of the binary quintic with its double-integral
//! representation.

use crate::error::{Error, Result};
use crate::quad::{integrate, Tolerance};
use crate::wardops::Jet2;
use std::f64::consts::PI;
use std::fmt;

/// Below this |t| the Gauss series is summed directly.
pub const SERIES_RADIUS: f64 = 0.5;
/// Series truncation: stop once a term falls below this fraction of the sum.
const SERIES_EPS: f64 = 1e-17;
const MAX_TERMS: usize = 10_000;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

pub fn gamma_fn(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) || x.is_nan() {
        return Err(Error::GammaPole(x));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// 1/Γ(x), zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else {
        1.0 / statrs::function::gamma::gamma(x)
    }
}

pub fn digamma(x: f64) -> f64 {
    statrs::function::gamma::digamma(x)
}

/// (a)_k = a(a+1)…(a+k−1).
pub fn pochhammer(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub t: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64, t: f64) -> Self {
        Hyp2F1Params { a, b, c, t }
    }
}

/// Evaluation strategy chosen from the argument alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// |t| ≤ ½: power series.
    Series,
    /// ½ < t < 1: expansion around t = 1, logarithmic when c − a − b = 0.
    NearOne,
    /// t = 1: Gauss summation (only when c − a − b > 0).
    GaussSum,
    /// t < −½: Pfaff transformation to t/(t − 1).
    Pfaff,
    /// t > 1: expansion in 1/t.
    Inversion,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::Series => "series",
            Route::NearOne => "near-one",
            Route::GaussSum => "gauss-sum",
            Route::Pfaff => "pfaff",
            Route::Inversion => "inversion",
        };
        f.write_str(s)
    }
}

pub fn route_of(t: f64) -> Route {
    if t.abs() <= SERIES_RADIUS {
        Route::Series
    } else if t < 0.0 {
        Route::Pfaff
    } else if t < 1.0 {
        Route::NearOne
    } else if t == 1.0 {
        Route::GaussSum
    } else {
        Route::Inversion
    }
}

/// Coefficient of −log(1 − t) in ₂F₁(a, b; a + b; t) as t → 1⁻, i.e. Γ(a+b)/(Γ(a)Γ(b)).
pub fn log_coefficient(a: f64, b: f64) -> f64 {
    rgamma(a) * rgamma(b) / rgamma(a + b)
}

fn series(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    let (mut term, mut sum) = (1.0, 1.0);
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * t;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        small = if term.abs() <= SERIES_EPS * sum.abs() { small + 1 } else { 0 };
        if small >= 2 {
            return Ok(sum);
        }
    }
    Err(Error::Divergent(format!("2F1({a}, {b}; {c}; {t}) series did not converge")))
}

fn near_one(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    let m = c - a - b;
    let w = 1.0 - t;
    if m == 0.0 {
        // Σ (a)_k(b)_k/(k!)² [2ψ(k+1) − ψ(a+k) − ψ(b+k) − ln w] w^k
        let (mut pa, mut pb, mut p1) = (digamma(a), digamma(b), digamma(1.0));
        let lw = w.ln();
        let mut coef = 1.0;
        let mut sum = 2.0 * p1 - pa - pb - lw;
        for k in 0..MAX_TERMS {
            let kf = k as f64;
            coef *= (a + kf) * (b + kf) / ((kf + 1.0) * (kf + 1.0)) * w;
            pa += 1.0 / (a + kf);
            pb += 1.0 / (b + kf);
            p1 += 1.0 / (kf + 1.0);
            let term = coef * (2.0 * p1 - pa - pb - lw);
            sum += term;
            if term.abs() <= SERIES_EPS * sum.abs() && k > 2 || coef == 0.0 {
                return Ok(log_coefficient(a, b) * sum);
            }
        }
        return Err(Error::Divergent(format!("2F1({a}, {b}; {c}; {t}) log expansion did not converge")));
    }
    if m == m.round() {
        return Err(Error::Unsupported(format!("2F1 near t = 1 with integer c − a − b = {m}")));
    }
    let g = gamma_fn(c)?;
    let p = g * gamma_fn(m)? * rgamma(c - a) * rgamma(c - b);
    let q = g * gamma_fn(-m)? * rgamma(a) * rgamma(b);
    let s1 = if p != 0.0 { p * series(a, b, 1.0 - m, w)? } else { 0.0 };
    let s2 = if q != 0.0 { q * w.powf(m) * series(c - a, c - b, 1.0 + m, w)? } else { 0.0 };
    Ok(s1 + s2)
}

fn inversion(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    let d = b - a;
    if d == d.round() {
        return Err(Error::Unsupported(format!("2F1 for t > 1 with integer b − a = {d}")));
    }
    let g = gamma_fn(c)?;
    let p = g * gamma_fn(d)? * rgamma(b) * rgamma(c - a);
    let q = g * gamma_fn(-d)? * rgamma(a) * rgamma(c - b);
    let s = 1.0 / t;
    let f1 = if p != 0.0 { p * t.powf(-a) * hyp2f1_raw(a, a - c + 1.0, 1.0 - d, s)? } else { 0.0 };
    let f2 = if q != 0.0 { q * t.powf(-b) * hyp2f1_raw(b, b - c + 1.0, 1.0 + d, s)? } else { 0.0 };
    Ok(f1 + f2)
}

fn hyp2f1_raw(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::GammaPole(c));
    }
    if ![a, b, c, t].iter().all(|v| v.is_finite()) {
        return Err(Error::Invalid(format!("non-finite 2F1 input ({a}, {b}, {c}, {t})")));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    match route_of(t) {
        Route::Series => series(a, b, c, t),
        Route::NearOne => near_one(a, b, c, t),
        Route::GaussSum => {
            let m = c - a - b;
            if m > 0.0 {
                Ok(gamma_fn(c)? * gamma_fn(m)? * rgamma(c - a) * rgamma(c - b))
            } else if m == 0.0 {
                Err(Error::DiscriminantLocus { log_coefficients: vec![log_coefficient(a, b)] })
            } else {
                Err(Error::Divergent(format!("2F1({a}, {b}; {c}; 1) with c − a − b = {m} < 0")))
            }
        }
        Route::Pfaff => Ok((1.0 - t).powf(-a) * hyp2f1_raw(a, c - b, c, t / (t - 1.0))?),
        Route::Inversion => inversion(a, b, c, t),
    }
}

/// ₂F₁(a, b; c; t) for real t.
///
/// For t > 1 the function has a branch cut; the value returned is the real
/// solution of Gauss's equation obtained from the 1/t connection formula with
/// (−t)^{−a}, (−t)^{−b} replaced by t^{−a}, t^{−b}.
pub fn gauss_2f1(p: Hyp2F1Params) -> Result<f64> {
    hyp2f1_raw(p.a, p.b, p.c, p.t)
}

/// Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ s^{b−1}(1−s)^{c−b−1}(1−st)^{−a} ds, for t < 1.
pub fn hyp2f1_integral(p: Hyp2F1Params) -> Result<f64> {
    let Hyp2F1Params { mut a, mut b, c, t } = p;
    if !(b > 0.0 && c - b > 0.0) {
        std::mem::swap(&mut a, &mut b);
    }
    if !(b > 0.0 && c - b > 0.0) {
        return Err(Error::Invalid(format!("integral representation needs 0 < b < c, got ({}, {}, {c})", p.a, p.b)));
    }
    if !(t < 1.0) {
        return Err(Error::Invalid(format!("integral representation needs t < 1, got {t}")));
    }
    let g = c - b;
    let kernel = |s: f64| (1.0 - s * t).powf(-a);
    let tol = Tolerance::new(1e-15, 1e-13);
    // s = x^{1/b} on [0, ½], 1 − s = y^{1/g} on [½, 1]
    let left = integrate(|x| (1.0 - x.powf(1.0 / b)).powf(g - 1.0) * kernel(x.powf(1.0 / b)) / b, 0.0, 0.5f64.powf(b), tol)?;
    let right = integrate(
        |y| {
            let s = 1.0 - y.powf(1.0 / g);
            s.powf(b - 1.0) * kernel(s) / g
        },
        0.0,
        0.5f64.powf(g),
        tol,
    )?;
    Ok(gamma_fn(c)? * rgamma(b) * rgamma(g) * (left.value + right.value))
}

/// (F, F′, F″) from dF/dt = (ab/c)·F(a+1, b+1; c+1; t).
pub fn gauss_2f1_jet(p: Hyp2F1Params) -> Result<(f64, f64, f64)> {
    let Hyp2F1Params { a, b, c, t } = p;
    let f0 = hyp2f1_raw(a, b, c, t)?;
    let f1 = a * b / c * hyp2f1_raw(a + 1.0, b + 1.0, c + 1.0, t)?;
    let f2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0)) * hyp2f1_raw(a + 2.0, b + 2.0, c + 2.0, t)?;
    Ok((f0, f1, f2))
}

/// Five-point central differences: (f, f′, f″) at x.
pub fn fd_derivatives(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<(f64, f64, f64)> {
    let (m2, m1, f0, p1, p2) = (f(x - 2.0 * h)?, f(x - h)?, f(x)?, f(x + h)?, f(x + 2.0 * h)?);
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * f0 + 16.0 * p1 - p2) / (12.0 * h * h);
    Ok((f0, d1, d2))
}

/// Series region of G: |u| < 1/64 and |v| < 1/72.
pub const G25_U_RADIUS: f64 = 1.0 / 64.0;
pub const G25_V_RADIUS: f64 = 1.0 / 72.0;

/// A point (u, v) = (I₈/I₄², I₁₂/I₄³).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct G25Point {
    pub u: f64,
    pub v: f64,
}

/// ln c_ij with c_ij = Γ(3/10+i+j)Γ(1/10+2i+3j)Γ(1/10+j) / (Γ(2/5+i+2j)Γ(3/5+i+2j) i! j!).
pub fn g25_log_coefficient(i: u32, j: u32) -> f64 {
    use statrs::function::gamma::ln_gamma;
    let (i, j) = (i as f64, j as f64);
    ln_gamma(0.3 + i + j) + ln_gamma(0.1 + 2.0 * i + 3.0 * j) + ln_gamma(0.1 + j)
        - ln_gamma(0.4 + i + 2.0 * j)
        - ln_gamma(0.6 + i + 2.0 * j)
        - ln_gamma(i + 1.0)
        - ln_gamma(j + 1.0)
}

/// G(0, 0) = Γ(3/10)Γ(1/10)²/(Γ(2/5)Γ(3/5)).
pub fn g25_origin() -> f64 {
    g25_log_coefficient(0, 0).exp()
}

/// (2¹³5⁵/3⁷)·uv, the growth estimate of the diagonal terms.
pub fn g25_diagonal_growth(u: f64, v: f64) -> f64 {
    8192.0 * 3125.0 / 2187.0 * u * v
}

/// Σ_{i ≥ du, j ≥ dv} c_ij 16^i (128/3)^j (i)_du (j)_dv u^{i−du} v^{j−dv}.
fn g25_sum(u: f64, v: f64, du: u32, dv: u32, tol: f64) -> Result<f64> {
    let lx = 16f64.ln();
    let ly = (128.0f64 / 3.0).ln();
    let falling = |n: u32, k: u32| (0..k).fold(1.0, |acc, m| acc * (n - m) as f64);
    let term = |i: u32, j: u32| -> f64 {
        let pu = i - du;
        let pv = j - dv;
        if (u == 0.0 && pu > 0) || (v == 0.0 && pv > 0) {
            return 0.0;
        }
        let mut ln = g25_log_coefficient(i, j) + i as f64 * lx + j as f64 * ly;
        let mut sign = 1.0;
        if pu > 0 {
            ln += pu as f64 * u.abs().ln();
            if u < 0.0 && pu % 2 == 1 {
                sign = -sign;
            }
        }
        if pv > 0 {
            ln += pv as f64 * v.abs().ln();
            if v < 0.0 && pv % 2 == 1 {
                sign = -sign;
            }
        }
        sign * falling(i, du) * falling(j, dv) * ln.exp()
    };
    let rho_i = 64.0 * u.abs();
    let rho_j = 72.0 * v.abs();
    let row = |j: u32| -> Result<f64> {
        let mut terms = Vec::new();
        let mut prev = term(du, j);
        terms.push(prev);
        let mut quiet = 0;
        for i in du + 1..du + MAX_TERMS as u32 {
            let t = term(i, j);
            terms.push(t);
            let ratio = if prev != 0.0 { (t / prev).abs() } else { 0.0 };
            let rho = ratio.max(rho_i);
            let partial: f64 = terms.iter().sum();
            let tail = if rho < 1.0 { t.abs() * rho / (1.0 - rho) } else { f64::INFINITY };
            quiet = if tail <= tol * partial.abs().max(1e-300) || t == 0.0 && rho_i == 0.0 { quiet + 1 } else { 0 };
            if quiet >= 3 {
                return Ok(crate::quad::pairwise_sum(&terms));
            }
            prev = t;
        }
        Err(Error::Divergent(format!("G series row {j} does not converge at (u, v) = ({u}, {v}); use the integral")))
    };
    let mut rows = Vec::new();
    let mut prev = row(dv)?;
    rows.push(prev);
    let mut quiet = 0;
    for j in dv + 1..dv + MAX_TERMS as u32 {
        let r = row(j)?;
        rows.push(r);
        let ratio = if prev != 0.0 { (r / prev).abs() } else { 0.0 };
        let rho = ratio.max(rho_j);
        let partial: f64 = rows.iter().sum();
        let tail = if rho < 1.0 { r.abs() * rho / (1.0 - rho) } else { f64::INFINITY };
        quiet = if tail <= tol * partial.abs().max(1e-300) || r == 0.0 && rho_j == 0.0 { quiet + 1 } else { 0 };
        if quiet >= 3 {
            return Ok(crate::quad::pairwise_sum(&rows));
        }
        prev = r;
    }
    Err(Error::Divergent(format!("G series does not converge at (u, v) = ({u}, {v}); use the integral")))
}

fn check_series_region(pt: G25Point) -> Result<()> {
    if !(pt.u.is_finite() && pt.v.is_finite()) {
        return Err(Error::Invalid(format!("non-finite point ({}, {})", pt.u, pt.v)));
    }
    if pt.u.abs() >= G25_U_RADIUS || pt.v.abs() >= G25_V_RADIUS {
        return Err(Error::Divergent(format!(
            "(u, v) = ({}, {}) lies outside |u| < 1/64, |v| < 1/72; use the integral representation",
            pt.u, pt.v
        )));
    }
    Ok(())
}

/// G(u, v) = Σ c_ij (16u)^i (128v/3)^j summed to relative tolerance `tol`.
pub fn series_g25(pt: G25Point, tol: f64) -> Result<f64> {
    check_series_region(pt)?;
    g25_sum(pt.u, pt.v, 0, 0, tol)
}

/// G and its partial derivatives up to second order from the series.
pub fn series_g25_jet(pt: G25Point, tol: f64) -> Result<Jet2> {
    check_series_region(pt)?;
    let s = |du, dv| g25_sum(pt.u, pt.v, du, dv, tol);
    Ok(Jet2 { g: s(0, 0)?, gu: s(1, 0)?, gv: s(0, 1)?, guu: s(2, 0)?, guv: s(1, 1)?, gvv: s(0, 2)? })
}

/// P(s, t) = 3 − 3s + 48uts² + 128vs³t(1 − t).
pub fn g25_kernel(pt: G25Point, s: f64, t: f64) -> f64 {
    3.0 - 3.0 * s + 48.0 * pt.u * t * s * s + 128.0 * pt.v * s.powi(3) * t * (1.0 - t)
}

/// First positive zero s*(t) of P(·, t), continued from s* = 1 at u = v = 0,
/// together with the reduced kernel P(s, t)/(s* − s) being positive on [0, s*].
pub fn g25_root(pt: G25Point, t: f64) -> Result<f64> {
    let (a, w) = (48.0 * pt.u * t, 128.0 * pt.v * t * (1.0 - t));
    let p = |s: f64| 3.0 - 3.0 * s + a * s * s + w * s.powi(3);
    let dp = |s: f64| -3.0 + 2.0 * a * s + 3.0 * w * s * s;
    let mut s = 1.0;
    for _ in 0..100 {
        let d = dp(s);
        if d >= 0.0 {
            break;
        }
        let step = p(s) / d;
        s -= step;
        if step.abs() <= 1e-15 * s.abs() {
            break;
        }
    }
    let reduced = |x: f64| 3.0 - a * (x + s) - w * (x * x + x * s + s * s);
    let ok = s > 0.0 && p(s).abs() <= 1e-12 && (0..=64).all(|k| reduced(s * k as f64 / 64.0) > 0.0);
    if ok {
        Ok(s)
    } else {
        Err(Error::Singular(format!(
            "the kernel 3 − 3s + 48uts² + 128vs³t(1−t) has no simple positive zero at t = {t} for (u, v) = ({}, {}); \
             discriminant locus 1 − 64u = 0 reached or crossed",
            pt.u, pt.v
        )))
    }
}

fn inner_g25(pt: G25Point, t: f64, tol: Tolerance) -> Result<f64> {
    let root = g25_root(pt, t)?;
    let (a, w) = (48.0 * pt.u * t, 128.0 * pt.v * t * (1.0 - t));
    let half = 0.5 * root;
    // s = c^{10} on [0, s*/2]
    let left = integrate(|c| 10.0 / g25_kernel(pt, c.powi(10), t).sqrt(), 0.0, half.powf(0.1), tol)?;
    // s = s*(1 − e²) on [s*/2, s*], with P/e² = s*(3 − a(s + s*) − w(s² + ss* + s*²))
    let right = integrate(
        |e| {
            let s = root * (1.0 - e * e);
            let reduced = 3.0 - a * (s + root) - w * (s * s + s * root + root * root);
            2.0 * root.sqrt() * s.powf(-0.9) / reduced.sqrt()
        },
        0.0,
        0.5f64.sqrt(),
        tol,
    )?;
    Ok(left.value + right.value)
}

/// √(3/π) ∫₀¹ dt t^{−7/10}(1−t)^{−9/10} ∫₀^{s*(t)} ds s^{−9/10} P(s, t)^{−1/2}.
pub fn integral_g25(pt: G25Point) -> Result<f64> {
    if !(pt.u.is_finite() && pt.v.is_finite()) {
        return Err(Error::Invalid(format!("non-finite point ({}, {})", pt.u, pt.v)));
    }
    let inner_tol = Tolerance::new(1e-14, 1e-13);
    let outer_tol = Tolerance::new(1e-13, 1e-12).with_max_cells(4000);
    let err = std::cell::RefCell::new(None);
    let inner = |t: f64| match inner_g25(pt, t, inner_tol) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            f64::NAN
        }
    };
    // t = a^{10/3} on [0, ½], 1 − t = b^{10} on [½, 1]
    let r1 = integrate(
        |x| {
            let t = x.powf(10.0 / 3.0);
            10.0 / 3.0 * (1.0 - t).powf(-0.9) * inner(t)
        },
        0.0,
        0.5f64.powf(0.3),
        outer_tol,
    );
    let r2 = integrate(
        |y| {
            let t = 1.0 - y.powi(10);
            10.0 * t.powf(-0.7) * inner(t)
        },
        0.0,
        0.5f64.powf(0.1),
        outer_tol,
    );
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    Ok((3.0 / PI).sqrt() * (r1?.value + r2?.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn gamma_and_pochhammer() {
        assert!(close(gamma_fn(0.5).unwrap(), PI.sqrt(), 1e-12));
        assert_eq!(gamma_fn(-2.0), Err(Error::GammaPole(-2.0)));
        assert_eq!(pochhammer(0.3, 0), 1.0);
        assert_eq!(pochhammer(1.0, 6), 720.0);
        assert_eq!(rgamma(-3.0), 0.0);
    }

    #[test]
    fn gauss_function_identities() {
        assert_eq!(gauss_2f1(Hyp2F1Params::new(0.2, 0.7, 1.3, 0.0)).unwrap(), 1.0);
        let v = gauss_2f1(Hyp2F1Params::new(1.0, 1.0, 2.0, 0.5)).unwrap();
        assert!(close(v, 2.0 * LN_2, 1e-12));
        for t in [0.7, 0.95, -0.8, -7.0] {
            let v = gauss_2f1(Hyp2F1Params::new(1.0, 1.0, 2.0, t)).unwrap();
            assert!(close(v, -(1.0 - t).ln() / t, 1e-11), "t = {t}: {v}");
        }
        let (a, b, c, t) = (1.0 / 12.0, 5.0 / 12.0, 0.5, 0.3);
        let lhs = gauss_2f1(Hyp2F1Params::new(a, b, c, t)).unwrap();
        let rhs = (1.0 - t).powf(-a) * gauss_2f1(Hyp2F1Params::new(a, c - b, c, t / (t - 1.0))).unwrap();
        assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn elementary_closed_forms_in_every_route() {
        // 2F1(1/2, 1; 3/2; −x²) = atan(x)/x
        for x in [0.3f64, 0.9, 2.0, 10.0] {
            let v = gauss_2f1(Hyp2F1Params::new(0.5, 1.0, 1.5, -x * x)).unwrap();
            assert!(close(v, x.atan() / x, 1e-12), "x = {x}");
        }
        // 2F1(a, b; b; t) = (1 − t)^{−a}
        for t in [0.2, 0.8, -3.0] {
            let v = gauss_2f1(Hyp2F1Params::new(0.37, 0.81, 0.81, t)).unwrap();
            assert!(close(v, (1.0 - t).powf(-0.37), 1e-12));
        }
        // Gauss sum
        let v = gauss_2f1(Hyp2F1Params::new(1.0 / 12.0, 1.0 / 12.0, 0.5, 1.0)).unwrap();
        let exact = gamma_fn(0.5).unwrap() * gamma_fn(1.0 / 3.0).unwrap() / gamma_fn(5.0 / 12.0).unwrap().powi(2);
        assert!(close(v, exact, 1e-12));
    }

    #[test]
    fn locus_and_poles_are_reported() {
        let e = gauss_2f1(Hyp2F1Params::new(1.0 / 12.0, 5.0 / 12.0, 0.5, 1.0)).unwrap_err();
        match e {
            Error::DiscriminantLocus { log_coefficients } => {
                let expect = gamma_fn(0.5).unwrap() / (gamma_fn(1.0 / 12.0).unwrap() * gamma_fn(5.0 / 12.0).unwrap());
                assert!(close(log_coefficients[0], expect, 1e-12));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(gauss_2f1(Hyp2F1Params::new(0.5, 0.5, -1.0, 0.2)), Err(Error::GammaPole(_))));
        assert!(matches!(gauss_2f1(Hyp2F1Params::new(0.5, 1.5, 1.0, 3.0)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn integral_representation_agrees() {
        for (a, b, c, t) in [(1.0 / 12.0, 5.0 / 12.0, 0.5, 0.4), (7.0 / 12.0, 11.0 / 12.0, 1.5, -1.0), (0.3, 0.6, 1.7, 0.0)] {
            let p = Hyp2F1Params::new(a, b, c, t);
            let (x, y) = (gauss_2f1(p).unwrap(), hyp2f1_integral(p).unwrap());
            assert!(close(x, y, 1e-9), "{p:?}: {x} vs {y}");
        }
        assert!(hyp2f1_integral(Hyp2F1Params::new(0.2, 0.3, 0.1, 0.5)).is_err());
    }

    #[test]
    fn g25_series_origin_and_region() {
        let g0 = series_g25(G25Point { u: 0.0, v: 0.0 }, 1e-14).unwrap();
        let direct = gamma_fn(0.3).unwrap() * gamma_fn(0.1).unwrap().powi(2) / (gamma_fn(0.4).unwrap() * gamma_fn(0.6).unwrap());
        assert!(close(g0, direct, 1e-12));
        assert!(close(g25_origin(), direct, 1e-12));
        assert!(matches!(series_g25(G25Point { u: 0.02, v: 0.0 }, 1e-12), Err(Error::Divergent(_))));
    }

    #[test]
    fn g25_series_matches_integral_at_small_arguments() {
        for (u, v) in [(0.0, 0.0), (1e-3, 1e-4), (-2e-3, 5e-4)] {
            let pt = G25Point { u, v };
            let (s, i) = (series_g25(pt, 1e-14).unwrap(), integral_g25(pt).unwrap());
            assert!(close(s, i, 1e-8), "({u}, {v}): {s} vs {i}");
        }
    }

    #[test]
    fn g25_kernel_root_fails_past_the_locus() {
        assert!(g25_root(G25Point { u: 0.0, v: 0.0 }, 0.5).unwrap() == 1.0);
        assert!(g25_root(G25Point { u: 0.02, v: 0.0 }, 1.0).is_err());
        assert!(integral_g25(G25Point { u: 0.02, v: 0.0 }).is_err());
    }
}
