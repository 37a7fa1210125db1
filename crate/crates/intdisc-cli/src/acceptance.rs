//! The acceptance suite: twelve criteria, each reported as one pass/fail line.

use crate::pool::parallel_map;
use intdisc::forms::{invariant_count, random_form, random_posdef_quartic, random_unimodular};
use intdisc::invariants::{
    calibration, compute_invariants, d24_printed, derive_25, discriminant, discriminant_poly, i2_24, i3_24, i4_23,
    i4_25, i4_33_printed, i6_33, same_values, Case,
};
use intdisc::jnr::{eval_exact, eval_form, vertical_combination_24, Branch};
use intdisc::oracle::{fit_constants, integrate_exp_form, integrate_weight, radial_oracle, FitSample, Weight};
use intdisc::polyalg::{discriminant_uni, var_list};
use intdisc::scalar::{q, qi};
use intdisc::specfun::{
    fd_derivatives, gamma_fn, gauss_2f1, gauss_2f1_jet, hyp2f1_integral, integral_g25, route_of, series_g25,
    series_g25_jet, G25Point, Hyp2F1Params, Route,
};
use intdisc::tensornet::{builtin_diagram, contract_symbolic};
use intdisc::wardops::{
    apply_operator_exact, build_o0_25, build_o4_25, gauss_ode_residual, pde_residuals_25, relative_discriminant,
    ward_report, ActionTable, FormFn,
};
use intdisc::{Error, FormShape, MultiIndex, Result, SparsePoly, SymmetricForm, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 1729;

/// Tolerances, fixed.
pub mod tol {
    pub const WARD: f64 = 1e-5;
    pub const WARD_NEGATIVE: f64 = 1e-2;
    pub const WARD_FORMS: usize = 10;
    pub const ODE: f64 = 1e-8;
    pub const HYPER_INTEGRAL: f64 = 1e-8;
    pub const HYPER_POINTS: usize = 50;
    pub const G25_AGREEMENT: f64 = 1e-6;
    pub const G25_PDE: f64 = 1e-6;
    pub const ORACLE_CLOSED: f64 = 1e-6;
    pub const FIT_SAMPLES: usize = 24;
    pub const FIT_RMS: f64 = 1e-4;
    pub const FIT_HOLDOUT: f64 = 5e-4;
    pub const RATIO: f64 = 1e-4;
    pub const VERTICAL: f64 = 1e-3;
    pub const VERTICAL_TARGET: f64 = -0.5;
    pub const SCALING: f64 = 1e-10;
    pub const INVARIANCE: f64 = 1e-9;
    pub const RELATIVE_D_MIN: f64 = 1e-3;
}

/// Criteria expected to fail, with the reason.
pub const KNOWN_DEVIATIONS: &[(u8, &str)] = &[(
    9,
    "the branch combination converges to K1*K2*(psi(7/12)+psi(11/12)-psi(1/12)-psi(5/12)) = +1/2, \
     while the target value is -1/2; the exact identities of the criterion hold",
)];

pub const NAMES: [&str; 12] = [
    "exact expansions",
    "D24 identity",
    "D33 monomial count",
    "2|5 operator tables",
    "discriminant loci",
    "Ward residuals",
    "hypergeometric layer",
    "oracle reproduction",
    "vertical symmetry",
    "scaling and invariance",
    "invariant counts",
    "singularity analysis",
];

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Criterion {
    pub fn known_deviation(&self) -> Option<&'static str> {
        KNOWN_DEVIATIONS.iter().find(|(id, _)| *id == self.id).map(|(_, r)| *r)
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {}: {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

type Outcome = std::result::Result<String, String>;

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run_criterion(id: u8, seed: u64) -> Criterion {
    let start = Instant::now();
    let outcome = match id {
        1 => c1_expansions(),
        2 => c2_d24(),
        3 => c3_count(),
        4 => c4_tables(seed),
        5 => c5_loci(seed),
        6 => c6_ward(seed),
        7 => c7_hypergeometric(seed),
        8 => c8_oracle(seed),
        9 => c9_vertical(seed),
        10 => c10_scaling(seed),
        11 => c11_counts(),
        12 => c12_singularity(seed),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let name = NAMES.get(id as usize - 1).copied().unwrap_or("unknown");
    Criterion { id, name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

/// Runs the selected criteria (all when empty) on a bounded pool; results in id order.
pub fn run_all(ids: &[u8], seed: u64, workers: usize) -> Vec<Criterion> {
    let mut ids: Vec<u8> = if ids.is_empty() { (1..=12).collect() } else { ids.to_vec() };
    ids.sort_unstable();
    ids.dedup();
    parallel_map(&ids, workers, |&id| run_criterion(id, seed))
}

fn c1_expansions() -> Outcome {
    let cases: [(&str, &SparsePoly); 6] = [
        ("i4_23", i4_23()),
        ("i2_24", i2_24()),
        ("i3_24", i3_24()),
        ("i4_25", i4_25()),
        ("i4_33", i4_33_printed()),
        ("i6_33", i6_33()),
    ];
    let mut sizes = Vec::new();
    for (name, reference) in cases {
        let c = lift(builtin_diagram(name).and_then(|d| contract_symbolic(&d)))?;
        let p = c.scalar().ok_or_else(|| format!("{name} is not a scalar diagram"))?;
        if &p != reference {
            return Err(format!("{name}: contraction differs from the reference expansion"));
        }
        sizes.push(format!("{name} {}", p.monomial_count()));
    }
    Ok(format!("6/6 identical; terms: {}", sizes.join(", ")))
}

fn c2_d24() -> Outcome {
    let d = i2_24().pow(3).sub(&i3_24().pow(2).scale(&qi(6)));
    check(
        &d == d24_printed(),
        format!("I2^3 - 6 I3^2 equals the reference D24 exactly ({} monomials)", d.monomial_count()),
        "I2^3 - 6 I3^2 differs from the reference D24".into(),
    )
}

fn c3_count() -> Outcome {
    let d = lift(discriminant_poly(Case::Ternary3, None))?;
    let n = d.monomial_count();
    check(
        n == 2040 && d.is_homogeneous(12),
        format!("32 I4^3 + 3 I6^2 has {n} monomials, degree 12"),
        format!("{n} monomials"),
    )
}

fn c4_tables(seed: u64) -> Outcome {
    let rec = lift(derive_25())?;
    let polys = [i4_25().clone(), rec.i8.clone(), rec.i12.clone()];
    let mut entries = 0;
    for (table, op) in [(ActionTable::o0_25(), lift(build_o0_25())?), (ActionTable::o4_25(), lift(build_o4_25())?)] {
        let images: Vec<SparsePoly> = polys.iter().map(|p| apply_operator_exact(&op, p)).collect();
        let mut products = vec![vec![None; 3]; 3];
        for k in 0..3 {
            for m in k..3 {
                products[k][m] = Some(apply_operator_exact(&op, &polys[k].mul(&polys[m])));
            }
        }
        for s in 0..3 {
            let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, seed * 31 + s);
            let inv: Vec<Q> = polys.iter().map(|p| p.eval(f.coeffs())).collect();
            for k in 0..3 {
                if images[k].eval(f.coeffs()) != table.linear(k).eval(&inv) {
                    return Err(format!("{} linear row {k} fails at a random quintic", table.label()));
                }
                for m in k..3 {
                    let image = products[k][m].as_ref().expect("upper triangle");
                    if image.eval(f.coeffs()) != table.quadratic(k, m).eval(&inv) {
                        return Err(format!("{} product row {k}{m} fails at a random quintic", table.label()));
                    }
                }
            }
        }
        entries += 9;
    }
    Ok(format!(
        "{} rows verified symbolically after deriving I8 ({} terms) and I12 ({} terms); {entries} entries rechecked at random quintics",
        rec.checks.len(),
        rec.i8.monomial_count(),
        rec.i12.monomial_count()
    ))
}

fn binary(c: Vec<Q>) -> Result<SymmetricForm<Q>> {
    let r = c.len() - 1;
    SymmetricForm::from_coeffs(FormShape { n: 2, r }, c)
}

fn exact_d(f: &SymmetricForm<Q>) -> std::result::Result<Q, String> {
    Ok(discriminant(&lift(compute_invariants(f))?))
}

fn rational(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn c5_loci(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut singular = 0;
    for r in [3usize, 4, 5] {
        for _ in 0..4 {
            // (x − αy)² times a random cofactor of degree r − 2
            let alpha = rational(&mut rng);
            let sq = lift(binary(vec![qi(1), -qi(2) * &alpha, &alpha * &alpha]))?;
            let mut co: Vec<Q> = (0..r - 1).map(|_| rational(&mut rng)).collect();
            co[0] += qi(1);
            let f = lift(sq.mul_form(&lift(binary(co))?))?;
            if exact_d(&f)? != qi(0) {
                return Err(format!("D != 0 for a double-root 2|{r} form"));
            }
            singular += 1;
        }
    }
    let ternary = |entries: &[(&[u32], Q)]| {
        SymmetricForm::make(
            FormShape { n: 3, r: 3 },
            entries.iter().map(|(a, c)| (MultiIndex::new(a), c.clone())).collect(),
        )
    };
    let hesse = |l: Q| ternary(&[(&[3, 0, 0], qi(1)), (&[0, 3, 0], qi(1)), (&[0, 0, 3], qi(1)), (&[1, 1, 1], qi(-3) * l)]);
    for (label, f) in [("xyz", lift(ternary(&[(&[1, 1, 1], qi(1))]))?), ("Hesse at 1", lift(hesse(qi(1)))?)] {
        if exact_d(&f)? != qi(0) {
            return Err(format!("D != 0 for {label}"));
        }
        singular += 1;
    }
    let fermat = exact_d(&lift(hesse(qi(0)))?)?;
    if fermat != qi(108) {
        return Err(format!("Fermat cubic: D = {fermat}, expected 108"));
    }
    let mut nonsingular = 1;
    for (n, r) in [(2, 3), (2, 4), (2, 5), (3, 3)] {
        for k in 0..3 {
            let f: SymmetricForm<Q> = random_form(FormShape { n, r }, seed * 101 + k);
            if exact_d(&f)? == qi(0) {
                return Err(format!("D = 0 for a random {n}|{r} form"));
            }
            nonsingular += 1;
        }
    }
    Ok(format!("D = 0 on {singular} singular forms; D != 0 on {nonsingular} nonsingular forms (Fermat D = 108)"))
}

/// Random float forms with relative discriminant above the floor that `keep` accepts.
fn sample_forms(
    shape: FormShape,
    seed: u64,
    count: usize,
    keep: impl Fn(&SymmetricForm<f64>) -> bool,
) -> Vec<SymmetricForm<f64>> {
    (0..20_000u64)
        .map(|k| random_form::<f64>(shape, seed.wrapping_mul(7919).wrapping_add(k)))
        .filter(|f| relative_discriminant(f).is_some_and(|d| d > tol::RELATIVE_D_MIN) && keep(f))
        .take(count)
        .collect()
}

fn quintic_uv(f: &SymmetricForm<f64>) -> Option<(f64, f64)> {
    let inv = compute_invariants(f).ok()?;
    let (i4, i8, i12) = (inv.values[0].1, inv.values[1].1, inv.values[2].1);
    Some((i8 / (i4 * i4), i12 / i4.powi(3)))
}

fn in_series_region(f: &SymmetricForm<f64>) -> bool {
    quintic_uv(f).is_some_and(|(u, v)| 64.0 * u.abs() < 0.8 && 72.0 * v.abs() < 0.8)
}

fn max_ward(fun: &FormFn, forms: &[SymmetricForm<f64>]) -> std::result::Result<f64, String> {
    let mut worst: f64 = 0.0;
    for f in forms {
        for (_, r) in lift(ward_report(fun, f))? {
            worst = worst.max(r);
        }
    }
    Ok(worst)
}

fn c6_ward(seed: u64) -> Outcome {
    let cases: Vec<(usize, usize, Branch)> = vec![
        (2, 2, Branch::One),
        (3, 2, Branch::One),
        (2, 3, Branch::One),
        (2, 4, Branch::One),
        (2, 4, Branch::Two),
        (2, 5, Branch::One),
        (3, 3, Branch::One),
        (3, 3, Branch::Two),
    ];
    let results = parallel_map(&cases, 4, |&(n, r, b)| -> std::result::Result<(String, f64), String> {
        let shape = FormShape { n, r };
        let forms = if r == 5 {
            sample_forms(shape, seed, tol::WARD_FORMS, in_series_region)
        } else {
            sample_forms(shape, seed, tol::WARD_FORMS, |_| true)
        };
        if forms.len() < tol::WARD_FORMS {
            return Err(format!("{shape}: only {} admissible forms", forms.len()));
        }
        let fun = move |f: &SymmetricForm<f64>| eval_form(f, b).map(|v| v.value);
        Ok((format!("{shape}/{b}"), max_ward(&fun, &forms)?))
    });
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for r in results {
        let (label, w) = r?;
        if w >= tol::WARD {
            return Err(format!("{label}: residual {w:.2e} >= {:.0e}", tol::WARD));
        }
        worst = worst.max(w);
        parts.push(format!("{label} {w:.1e}"));
    }
    // negative controls: wrong exponents or parameters
    let wrong24 = |f: &SymmetricForm<f64>| -> Result<f64> {
        let inv = compute_invariants(f)?;
        let (i2, i3) = (inv.values[0].1, inv.values[1].1);
        Ok(i2.abs().powf(-0.3) * gauss_2f1(Hyp2F1Params::new(1.0 / 12.0, 5.0 / 12.0, 0.5, 6.0 * i3 * i3 / i2.powi(3)))?)
    };
    let wrong33 = |f: &SymmetricForm<f64>| -> Result<f64> {
        let inv = compute_invariants(f)?;
        let (i4, i6) = (inv.values[0].1, inv.values[1].1);
        let t = -3.0 * i6 * i6 / (32.0 * i4.powi(3));
        Ok(i4.abs().powf(-0.25) * gauss_2f1(Hyp2F1Params::new(1.0 / 12.0, 0.5, 0.5, t))?)
    };
    let wrong23 = |f: &SymmetricForm<f64>| -> Result<f64> { Ok(compute_invariants(f)?.values[0].1.abs().powf(-0.2)) };
    let controls: [(&FormFn, usize, usize); 3] = [(&wrong24, 2, 4), (&wrong33, 3, 3), (&wrong23, 2, 3)];
    let mut weakest = f64::INFINITY;
    for (fun, n, r) in controls {
        let forms = sample_forms(FormShape { n, r }, seed + 1, 3, |_| true);
        let w = max_ward(fun, &forms)?;
        if w <= tol::WARD_NEGATIVE {
            return Err(format!("negative control {n}|{r} not detected: {w:.2e}"));
        }
        weakest = weakest.min(w);
    }
    Ok(format!("max {worst:.2e} < {:.0e} [{}]; controls >= {weakest:.2}", tol::WARD, parts.join(", ")))
}

/// |Gauss residual| / Σ|terms|: contiguous-function derivatives, or extrapolated
/// differences beyond t = 1 and where the shifted parameters are unsupported.
pub fn ode_relative_residual(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
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
            let (f0, d1, d2) = fd_derivatives(f, t, h)?;
            let (_, e1, e2) = fd_derivatives(f, t, 0.5 * h)?;
            (f0, (16.0 * e1 - d1) / 15.0, (16.0 * e2 - d2) / 15.0)
        }
        Err(e) => return Err(e),
    };
    let res = gauss_ode_residual(a, b, c, t, f0, f1, f2);
    let scale = (t * (1.0 - t) * f2).abs() + ((c - (a + b + 1.0) * t) * f1).abs() + (a * b * f0).abs();
    Ok(res.abs() / scale)
}

fn g25_grid() -> Vec<G25Point> {
    let mut out = Vec::new();
    for u in [-0.01, -0.004, 0.0, 0.003, 0.008] {
        for v in [-0.008, -0.002, 0.0, 0.002, 0.006] {
            out.push(G25Point { u, v });
        }
    }
    out
}

fn c7_hypergeometric(seed: u64) -> Outcome {
    let params = [
        (0.3, 0.7, 1.9),
        (1.0 / 12.0, 5.0 / 12.0, 0.5),
        (7.0 / 12.0, 11.0 / 12.0, 1.5),
        (1.0 / 12.0, 1.0 / 12.0, 0.5),
        (7.0 / 12.0, 7.0 / 12.0, 1.5),
        (-0.4, 1.3, 2.2),
        (0.25, 0.75, 1.0),
    ];
    let points = [-6.0, -0.8, -0.3, 0.05, 0.4, 0.6, 0.8, 0.93, 1.6, 3.0, 12.0];
    let mut ode: f64 = 0.0;
    let mut routes = Vec::new();
    for &(a, b, c) in &params {
        for &t in &points {
            let route = route_of(t);
            let integer_gap = |x: f64| x.fract() == 0.0;
            if (route == Route::Inversion && integer_gap(b - a)) || (t >= 1.0 && integer_gap(c - a - b)) {
                continue;
            }
            let r = lift(ode_relative_residual(a, b, c, t)).map_err(|e| format!("({a}, {b}; {c}; {t}): {e}"))?;
            if r >= tol::ODE {
                return Err(format!("ODE residual {r:.2e} at ({a}, {b}; {c}; {t}) via {route}"));
            }
            ode = ode.max(r);
            if !routes.contains(&route) {
                routes.push(route);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut integral: f64 = 0.0;
    for _ in 0..tol::HYPER_POINTS {
        let b = rng.gen_range(0.15..1.5);
        let p = Hyp2F1Params::new(rng.gen_range(-1.0..2.0), b, b + rng.gen_range(0.2..2.0), rng.gen_range(-5.0..0.95));
        let (x, y) = (lift(gauss_2f1(p))?, lift(hyp2f1_integral(p))?);
        let rel = (x - y).abs() / y.abs();
        if rel >= tol::HYPER_INTEGRAL {
            return Err(format!("integral representation differs by {rel:.2e} at {p:?}"));
        }
        integral = integral.max(rel);
    }
    let (mut agree, mut pde): (f64, f64) = (0.0, 0.0);
    for pt in g25_grid() {
        let s = lift(series_g25(pt, 1e-15))?;
        let i = lift(integral_g25(pt))?;
        agree = agree.max((s - i).abs() / s.abs());
        let jet = lift(series_g25_jet(pt, 1e-15))?;
        let (r1, r2) = pde_residuals_25(&jet, pt.u, pt.v);
        pde = pde.max(r1.abs().max(r2.abs()) / jet.g.abs());
    }
    if agree >= tol::G25_AGREEMENT || pde >= tol::G25_PDE {
        return Err(format!("G25: series/integral {agree:.2e}, PDE residual {pde:.2e}"));
    }
    let names: Vec<String> = routes.iter().map(|r| r.to_string()).collect();
    Ok(format!(
        "ODE {ode:.1e} over routes [{}]; integral rep {integral:.1e} at {} points; G25 series/integral {agree:.1e}, PDE {pde:.1e} on 25 points",
        names.join(", "),
        tol::HYPER_POINTS
    ))
}

fn c8_oracle(seed: u64) -> Outcome {
    let quartic = |c: [f64; 5]| SymmetricForm::from_coeffs(FormShape { n: 2, r: 4 }, c.to_vec());
    let g14 = lift(gamma_fn(0.25))?;
    let a = lift(integrate_exp_form(&lift(quartic([1.0, 0.0, 0.0, 0.0, 1.0]))?, 1e-10))?.value;
    let b = lift(integrate_exp_form(&lift(quartic([1.0, 0.0, 2.0, 0.0, 1.0]))?, 1e-10))?.value;
    let ea = (a / (g14 * g14 / 4.0) - 1.0).abs();
    let eb = (b / (PI.powf(1.5) / 2.0) - 1.0).abs();
    if ea >= tol::ORACLE_CLOSED || eb >= tol::ORACLE_CLOSED {
        return Err(format!("closed forms off by {ea:.2e}, {eb:.2e}"));
    }
    let seeds: Vec<u64> = (0..tol::FIT_SAMPLES as u64).map(|k| seed * 1000 + k).collect();
    let samples = parallel_map(&seeds, 4, |&s| -> Result<FitSample> {
        let f = random_posdef_quartic(s)?;
        Ok(FitSample {
            oracle: integrate_exp_form(&f, 1e-10)?.value,
            j1: eval_form(&f, Branch::One)?.value,
            j2: eval_form(&f, Branch::Two)?.value,
        })
    });
    let samples: Vec<FitSample> = lift(samples.into_iter().collect())?;
    let fit = lift(fit_constants(&samples))?;
    let holdout = fit.holdout.unwrap_or(f64::INFINITY);
    if fit.rms >= tol::FIT_RMS || holdout >= tol::FIT_HOLDOUT {
        return Err(format!("fit rms {:.2e}, holdout {holdout:.2e}", fit.rms));
    }
    let (w_const, r_const) = (g14 / (2.0 * PI.sqrt()), PI.sqrt() / 2.0);
    let mut spread: f64 = 0.0;
    for k in 0..6 {
        let f = lift(random_posdef_quartic(seed * 1000 + 500 + k))?;
        let e = lift(integrate_weight(&f, Weight::Exp, 1e-10))?.value;
        let e2 = lift(integrate_weight(&f, Weight::Exp2, 1e-10))?.value;
        let rad = lift(radial_oracle(&f))?.value;
        spread = spread.max((e2 / e / w_const - 1.0).abs()).max((e / rad / r_const - 1.0).abs());
    }
    if spread >= tol::RATIO {
        return Err(format!("ratio spread {spread:.2e}"));
    }
    Ok(format!(
        "closed forms {:.1e}; fit over {} quartics c1 = {:.6}, c2 = {:.6}, rms {:.1e}, holdout {holdout:.1e}; ratio spread {spread:.1e}",
        ea.max(eb),
        fit.samples,
        fit.c1,
        fit.c2,
        fit.rms
    ))
}

fn c9_vertical(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..12 {
        let (a, b, c) = (rational(&mut rng), rational(&mut rng), rational(&mut rng));
        let quad = lift(SymmetricForm::from_coeffs(FormShape { n: 2, r: 2 }, vec![a.clone(), b.clone(), c.clone()]))?;
        let inv = lift(compute_invariants(&lift(quad.pow_form(2))?))?;
        let delta = &b * &b - qi(4) * &a * &c;
        let (i2, i3) = (&inv.values[0].1, &inv.values[1].1);
        let d3 = &delta * &delta * &delta;
        if i2 != &(&delta * &delta * q(1, 6)) || (i3 * i3) != (&d3 * &d3 * q(1, 1296)) {
            return Err(format!("vertical identities fail at ({a}, {b}, {c})"));
        }
    }
    let lim = lift(vertical_combination_24())?;
    let off = (lim.limit - tol::VERTICAL_TARGET).abs();
    let msg = format!(
        "identities exact at 12 forms; combination -> {:.9} (closed form {:.9}), target {} within {:.0e}: off by {off:.3}",
        lim.limit,
        lim.exact,
        tol::VERTICAL_TARGET,
        tol::VERTICAL
    );
    check(off < tol::VERTICAL, msg.clone(), msg)
}

fn c10_scaling(seed: u64) -> Outcome {
    let shapes = [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (2, 5), (3, 3)];
    let (mut scale_err, mut inv_err, mut float_err): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut evaluations = 0;
    for (n, r) in shapes {
        let shape = FormShape { n, r };
        let forms: Vec<SymmetricForm<Q>> = (0..5000u64)
            .map(|k| random_form::<Q>(shape, seed * 7 + k))
            .filter(|f| relative_discriminant(&f.to_f64()).is_some_and(|d| d > tol::RELATIVE_D_MIN))
            .filter(|f| eval_exact(f, Branch::One).is_ok())
            .take(5)
            .collect();
        if forms.len() < 5 {
            return Err(format!("{shape}: too few admissible forms"));
        }
        let branches = if matches!((n, r), (2, 4) | (3, 3)) { vec![Branch::One, Branch::Two] } else { vec![Branch::One] };
        for (k, f) in forms.iter().enumerate() {
            let g = lift(f.gl_transform(&random_unimodular(n, seed + k as u64)))?;
            if !same_values(&lift(compute_invariants(f))?, &lift(compute_invariants(&g))?) {
                return Err(format!("{shape}: invariants change under a unimodular map"));
            }
            let ff = f.to_f64();
            for &b in &branches {
                let base = lift(eval_form(&ff, b))?.value;
                for mu in [0.37, 2.5, 11.0] {
                    let s = lift(eval_form(&ff.scale(&mu), b))?.value;
                    let expect = mu.powf(-(n as f64) / r as f64) * base;
                    scale_err = scale_err.max((s - expect).abs() / expect.abs());
                }
                let x = lift(eval_exact(f, b))?.value;
                let y = lift(eval_exact(&g, b))?.value;
                let z = lift(eval_form(&g.to_f64(), b))?.value;
                inv_err = inv_err.max((x - y).abs() / x.abs());
                float_err = float_err.max((x - z).abs() / x.abs());
                evaluations += 1;
            }
        }
    }
    let msg = format!(
        "scaling {scale_err:.1e} (< {:.0e}), unimodular {inv_err:.1e} (< {:.0e}) over {evaluations} evaluations; invariants exact; f64 input path {float_err:.1e}",
        tol::SCALING,
        tol::INVARIANCE
    );
    check(scale_err < tol::SCALING && inv_err < tol::INVARIANCE, msg.clone(), msg)
}

/// Counts of functionally independent invariants, r = 2..6 by n = 2..7.
pub const INVARIANT_COUNTS: [(usize, [u64; 6]); 5] = [
    (2, [1, 1, 1, 1, 1, 1]),
    (3, [1, 2, 5, 11, 21, 36]),
    (4, [2, 7, 20, 46, 91, 162]),
    (5, [3, 13, 41, 102, 217, 414]),
    (6, [4, 20, 69, 186, 427, 876]),
];

fn c11_counts() -> Outcome {
    let mut n_ok = 0;
    for (r, row) in INVARIANT_COUNTS {
        for (k, &expect) in row.iter().enumerate() {
            let got = lift(invariant_count(k + 2, r))?;
            if got != expect {
                return Err(format!("n = {}, r = {r}: {got} != {expect}", k + 2));
            }
            n_ok += 1;
        }
    }
    Ok(format!("{n_ok}/30 entries, r = 2 row constant 1"))
}

fn c12_singularity(seed: u64) -> Outcome {
    let vars = var_list(&["s", "u"]);
    let kernel = lift(SparsePoly::from_terms(&vars, vec![(vec![0, 0], qi(3)), (vec![1, 0], qi(-3)), (vec![2, 1], qi(48))]))?;
    let d = lift(discriminant_uni(&kernel, "s"))?;
    let at = |u: Q| lift(d.eval_named(&[("s", qi(0)), ("u", u)]));
    if at(q(1, 64))? != qi(0) || at(qi(0))? == qi(0) {
        return Err("kernel discriminant does not vanish exactly at u = 1/64".into());
    }
    let calib = lift(calibration())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut on_locus = 0;
    for _ in 0..4 {
        let alpha = rational(&mut rng);
        let sq = lift(binary(vec![qi(1), -qi(2) * &alpha, &alpha * &alpha]))?;
        let mut co: Vec<Q> = (0..4).map(|_| rational(&mut rng)).collect();
        co[0] += qi(1);
        let f = lift(sq.mul_form(&lift(binary(co))?))?;
        let (i4, i8) = (i4_25().eval(f.coeffs()), calib.i8.eval(f.coeffs()));
        if i4 == qi(0) {
            continue;
        }
        if &i8 / (&i4 * &i4) != q(1, 64) {
            return Err("a double-root quintic is off the locus u = 1/64".into());
        }
        on_locus += 1;
    }
    let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, seed);
    let (i4, i8) = (i4_25().eval(f.coeffs()), calib.i8.eval(f.coeffs()));
    if &i4 * &i4 - qi(64) * i8 == qi(0) {
        return Err("a random quintic lies on the locus".into());
    }
    let (c0, c1) = (at(qi(0))?, at(qi(1))? - at(qi(0))?);
    Ok(format!("disc_s = {c0} + ({c1}) u, zero at u = 1/64; u = I8/I4^2 = 1/64 on {on_locus} double-root quintics"))
}
