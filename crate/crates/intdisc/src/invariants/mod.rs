//! Elementary SL(n) invariants, algebraic discriminants and the derived
//! degree-8 and degree-12 invariants of the binary quintic.

pub mod printed;

use crate::error::{Error, Result};
use crate::forms::{multinomial, FormShape, MultiIndex, SymmetricForm};
use crate::polyalg::{parse_expr, FloatPoly, SparsePoly};
use crate::scalar::{q, q_to_f64, qi, Scalar, Q};
use crate::wardops::{self, ActionTable, DiffOperator};
use num_traits::One;
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Quadratic forms in n variables.
    Quadratic(usize),
    Binary3,
    Binary4,
    Binary5,
    Ternary3,
}

impl Case {
    pub fn of(shape: FormShape) -> Result<Case> {
        match (shape.n, shape.r) {
            (n, 2) if n >= 1 => Ok(Case::Quadratic(n)),
            (2, 3) => Ok(Case::Binary3),
            (2, 4) => Ok(Case::Binary4),
            (2, 5) => Ok(Case::Binary5),
            (3, 3) => Ok(Case::Ternary3),
            _ => Err(Error::Unsupported(format!("shape {shape} has no implemented invariants"))),
        }
    }

    pub fn shape(&self) -> FormShape {
        let (n, r) = match *self {
            Case::Quadratic(n) => (n, 2),
            Case::Binary3 => (2, 3),
            Case::Binary4 => (2, 4),
            Case::Binary5 => (2, 5),
            Case::Ternary3 => (3, 3),
        };
        FormShape { n, r }
    }

    /// Names of the elementary invariants, in storage order.
    pub fn invariant_names(&self) -> &'static [&'static str] {
        match self {
            Case::Quadratic(_) => &["det"],
            Case::Binary3 => &["I4"],
            Case::Binary4 => &["I2", "I3"],
            Case::Binary5 => &["I4", "I8", "I12"],
            Case::Ternary3 => &["I4", "I6"],
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        match self {
            Case::Quadratic(n) => vec![*n as u32],
            _ => self.invariant_names().iter().map(|s| s[1..].parse().unwrap()).collect(),
        }
    }

    /// Degree of the discriminant in the form coefficients.
    pub fn discriminant_degree(&self) -> u32 {
        match self {
            Case::Quadratic(n) => *n as u32,
            Case::Binary3 => 4,
            Case::Binary4 => 6,
            Case::Binary5 => 8,
            Case::Ternary3 => 12,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shape();
        write!(f, "{}|{}", s.n, s.r)
    }
}

/// Parses an expansion written in tensor components `S_{i1...ir}` into a
/// polynomial in the monomial coefficients of `shape`.
pub fn parse_tensor_expr(expr: &str, shape: FormShape) -> Result<SparsePoly> {
    let vars = shape.s_vars();
    let resolve = |name: &str| -> Result<SparsePoly> {
        let digits = name
            .strip_prefix("S_")
            .map(|s| s.trim_start_matches('{').trim_end_matches('}'))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let idx: Vec<usize> = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        if idx.len() != shape.r || idx.iter().any(|&i| i == 0 || i > shape.n) {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        let a = MultiIndex::from_slots(shape.n, &idx.iter().map(|i| i - 1).collect::<Vec<_>>());
        let pos = shape.index_of(&a).expect("valid");
        Ok(SparsePoly::variable(&vars, pos).scale(&Q::new(One::one(), multinomial(&a))))
    };
    parse_expr(expr, &resolve)?.with_vars(&vars)
}

fn cached(cell: &'static OnceLock<SparsePoly>, expr: &str, shape: FormShape, negate: bool) -> &'static SparsePoly {
    cell.get_or_init(|| {
        let p = parse_tensor_expr(expr, shape).expect("reference expansion parses");
        if negate {
            p.neg()
        } else {
            p
        }
    })
}

pub fn i4_23() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I4_23, FormShape { n: 2, r: 3 }, false)
}

pub fn i2_24() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I2_24, FormShape { n: 2, r: 4 }, false)
}

pub fn i3_24() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I3_24, FormShape { n: 2, r: 4 }, false)
}

/// The reference expansion of I₂³ − 6I₃².
pub fn d24_printed() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::D24, FormShape { n: 2, r: 4 }, false)
}

pub fn i4_25() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I4_25, FormShape { n: 2, r: 5 }, false)
}

/// The quartic contraction of the ternary cubic exactly as expanded in
/// tensor components. The invariant I₄ used everywhere else is its negative.
pub fn i4_33_printed() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I4_33, FormShape { n: 3, r: 3 }, false)
}

/// I₄ of the ternary cubic, sign chosen so that 32I₄³ + 3I₆² vanishes on singular cubics.
pub fn i4_33() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I4_33, FormShape { n: 3, r: 3 }, true)
}

pub fn i6_33() -> &'static SparsePoly {
    static C: OnceLock<SparsePoly> = OnceLock::new();
    cached(&C, printed::I6_33, FormShape { n: 3, r: 3 }, false)
}

/// Named invariant values of one form.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet<T> {
    pub case: Case,
    pub values: Vec<(&'static str, T)>,
}

impl<T: Scalar> InvariantSet<T> {
    pub fn get(&self, name: &str) -> Option<&T> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    fn at(&self, k: usize) -> &T {
        &self.values[k].1
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> InvariantSet<U> {
        InvariantSet { case: self.case, values: self.values.iter().map(|(n, v)| (*n, f(v))).collect() }
    }
}

/// Determinant of the symmetric matrix S_ij of a quadratic form.
pub fn quadratic_det<T: Scalar>(f: &SymmetricForm<T>) -> T {
    let n = f.shape().n;
    let m: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| f.tensor_component0(&[i, j])).collect()).collect();
    det_generic(&m)
}

fn det_generic<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = m[0][col].times(&det_generic(&minor));
        acc = if col % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
    }
    acc
}

/// Exact polynomials of the elementary invariants of `case`.
pub fn invariant_polys(case: Case, calib: Option<&CalibrationRecord>) -> Result<Vec<SparsePoly>> {
    Ok(match case {
        Case::Quadratic(n) => {
            let f = SymmetricForm::<Q>::symbolic(FormShape { n, r: 2 });
            vec![quadratic_det(&f).with_vars(&f.shape().s_vars())?]
        }
        Case::Binary3 => vec![i4_23().clone()],
        Case::Binary4 => vec![i2_24().clone(), i3_24().clone()],
        Case::Binary5 => {
            let c = calib.ok_or_else(|| Error::Calibration("2|5 invariants need a calibration record".into()))?;
            vec![i4_25().clone(), c.i8.clone(), c.i12.clone()]
        }
        Case::Ternary3 => vec![i4_33().clone(), i6_33().clone()],
    })
}

/// Invariants using an explicit calibration record for the 2|5 case.
pub fn compute_invariants_with<T: Scalar>(
    f: &SymmetricForm<T>,
    calib: Option<&CalibrationRecord>,
) -> Result<InvariantSet<T>> {
    let case = Case::of(f.shape())?;
    let values: Vec<T> = match case {
        Case::Quadratic(_) => vec![quadratic_det(f)],
        Case::Binary5 => {
            let c = calib.ok_or_else(|| Error::Calibration("2|5 invariants need a calibration record".into()))?;
            vec![i4_25().eval(f.coeffs()), c.i8.eval(f.coeffs()), c.i12.eval(f.coeffs())]
        }
        _ => invariant_polys(case, None)?.iter().map(|p| p.eval(f.coeffs())).collect(),
    };
    Ok(InvariantSet { case, values: case.invariant_names().iter().copied().zip(values).collect() })
}

/// Invariants; the 2|5 case uses the process-wide calibration.
pub fn compute_invariants<T: Scalar>(f: &SymmetricForm<T>) -> Result<InvariantSet<T>> {
    if f.shape() == (FormShape { n: 2, r: 5 }) {
        compute_invariants_with(f, Some(calibration()?))
    } else {
        compute_invariants_with(f, None)
    }
}

/// Cancellation ratio Σ|terms| / |value| above which float invariants are recomputed exactly.
pub const CANCELLATION_LIMIT: f64 = 1e3;

fn float_polys(case: Case) -> Result<&'static [FloatPoly]> {
    static B3: OnceLock<Vec<FloatPoly>> = OnceLock::new();
    static B4: OnceLock<Vec<FloatPoly>> = OnceLock::new();
    static B5: OnceLock<Vec<FloatPoly>> = OnceLock::new();
    static T3: OnceLock<Vec<FloatPoly>> = OnceLock::new();
    let cell = match case {
        Case::Binary3 => &B3,
        Case::Binary4 => &B4,
        Case::Binary5 => &B5,
        Case::Ternary3 => &T3,
        Case::Quadratic(_) => return Err(Error::Unsupported("quadratic invariants are evaluated exactly".into())),
    };
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let calib = if case == Case::Binary5 { Some(calibration()?) } else { None };
    let polys: Vec<FloatPoly> = invariant_polys(case, calib)?.iter().map(SparsePoly::to_float).collect();
    Ok(cell.get_or_init(|| polys))
}

/// Invariants of a float form. Evaluated in floating point when the terms do not
/// cancel badly, otherwise exactly at the (dyadic) coefficients and rounded once.
pub fn compute_invariants_rounded(f: &SymmetricForm<f64>) -> Result<InvariantSet<f64>> {
    let case = Case::of(f.shape())?;
    if !matches!(case, Case::Quadratic(_)) && f.coeffs().iter().all(|c| c.is_finite()) {
        let polys = float_polys(case)?;
        let x = f.coeffs();
        let vals: Vec<(f64, f64)> = polys.iter().map(|p| (p.eval(x), p.eval_abs(x))).collect();
        if vals.iter().all(|&(v, a)| a == 0.0 || a <= CANCELLATION_LIMIT * v.abs()) {
            let values = vals.into_iter().map(|(v, _)| v);
            return Ok(InvariantSet { case, values: case.invariant_names().iter().copied().zip(values).collect() });
        }
    }
    Ok(compute_invariants(&f.to_q()?)?.map(q_to_f64))
}

/// Algebraic discriminant as a polynomial in the invariants.
pub fn discriminant<T: Scalar>(inv: &InvariantSet<T>) -> T {
    let c = |a: i64| T::from_i64(a);
    match inv.case {
        Case::Quadratic(_) | Case::Binary3 => inv.at(0).clone(),
        Case::Binary4 => {
            let (i2, i3) = (inv.at(0), inv.at(1));
            i2.pow_u(3).minus(&c(6).times(&i3.pow_u(2)))
        }
        Case::Binary5 => {
            let (i4, i8) = (inv.at(0), inv.at(1));
            i4.pow_u(2).minus(&c(64).times(i8))
        }
        Case::Ternary3 => {
            let (i4, i6) = (inv.at(0), inv.at(1));
            c(32).times(&i4.pow_u(3)).plus(&c(3).times(&i6.pow_u(2)))
        }
    }
}

/// The discriminant expanded in the monomial coefficients.
pub fn discriminant_poly(case: Case, calib: Option<&CalibrationRecord>) -> Result<SparsePoly> {
    let polys = invariant_polys(case, calib)?;
    let inv = InvariantSet { case, values: case.invariant_names().iter().copied().zip(polys).collect() };
    Ok(discriminant(&inv))
}

/// 27a²d² − b²c² − 18abcd + 4ac³ + 4b³d for ax³ + bx²y + cxy² + dy³.
pub fn discriminant_23_classical<T: Scalar>(a: &T, b: &T, c: &T, d: &T) -> T {
    let k = |v: i64| T::from_i64(v);
    k(27)
        .times(&a.pow_u(2))
        .times(&d.pow_u(2))
        .minus(&b.pow_u(2).times(&c.pow_u(2)))
        .minus(&k(18).times(a).times(b).times(c).times(d))
        .plus(&k(4).times(a).times(&c.pow_u(3)))
        .plus(&k(4).times(&b.pow_u(3)).times(d))
}

/// Invariants of (ax² + bxy + cy²)², checked against I₂ = Δ²/6 and I₃² = Δ⁶/1296 with Δ = b² − 4ac.
pub fn vertical_invariants_24(a: &Q, b: &Q, c: &Q) -> Result<(Q, Q)> {
    let quad = SymmetricForm::from_coeffs(FormShape { n: 2, r: 2 }, vec![a.clone(), b.clone(), c.clone()])?;
    let inv = compute_invariants(&quad.pow_form(2)?)?;
    let (i2, i3) = (inv.at(0).clone(), inv.at(1).clone());
    let delta = b * b - qi(4) * a * c;
    if i2 != &delta * &delta * q(1, 6) || &i3 * &i3 != delta.pow_u(6) * q(1, 1296) {
        return Err(Error::Calibration(format!("vertical identities fail at ({a}, {b}, {c})")));
    }
    Ok((i2, i3))
}

/// Exact I₈, I₁₂ of the binary quintic with the list of verified action rows.
#[derive(Clone, Debug, PartialEq)]
pub struct CalibrationRecord {
    pub i8: SparsePoly,
    pub i12: SparsePoly,
    pub checks: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verify {
    /// Only the two rows that define I₈ and I₁₂.
    Defining,
    /// Every linear and product row of both operator tables.
    Full,
}

fn compose(entry: &SparsePoly, inv: &[SparsePoly]) -> SparsePoly {
    entry.eval(inv)
}

fn check_row(
    op: &DiffOperator,
    table: &ActionTable,
    inv: &[SparsePoly],
    row: (usize, Option<usize>),
) -> std::result::Result<String, SparsePoly> {
    let names = table.names();
    let (lhs, rhs, label) = match row {
        (k, None) => (op.apply(&inv[k]), compose(table.linear(k), inv), format!("{}:{}", table.label(), names[k])),
        (k, Some(m)) => (
            op.apply(&inv[k].mul(&inv[m])),
            compose(table.quadratic(k, m), inv),
            format!("{}:{}*{}", table.label(), names[k], names[m]),
        ),
    };
    let diff = lhs.sub(&rhs);
    if diff.is_zero() {
        Ok(label)
    } else {
        Err(diff)
    }
}

/// Derives I₈ := −(25/264)·Ô₄I₄ and I₁₂ := (25/588)·(Ô₄I₈ + (2/25)I₄I₈),
/// then verifies the requested table rows exactly.
pub fn derive_25_with(level: Verify) -> Result<CalibrationRecord> {
    let o0 = wardops::build_o0_25()?;
    let o4 = wardops::build_o4_25()?;
    let i4 = i4_25().clone();
    let i8 = o4.apply(&i4).scale(&q(-25, 264));
    let i12 = o4.apply(&i8).add(&i4.mul(&i8).scale(&q(2, 25))).scale(&q(25, 588));
    if !i8.is_homogeneous(8) || !i12.is_homogeneous(12) || i8.is_zero() || i12.is_zero() {
        return Err(Error::Calibration("derived invariants have the wrong degree".into()));
    }
    let inv = vec![i4, i8.clone(), i12.clone()];
    let t0 = ActionTable::o0_25();
    let t4 = ActionTable::o4_25();
    let mut rows: Vec<(&DiffOperator, &ActionTable, (usize, Option<usize>))> =
        vec![(&o4, &t4, (0, None)), (&o4, &t4, (1, None))];
    if level == Verify::Full {
        for k in 0..3 {
            rows.push((&o0, &t0, (k, None)));
        }
        rows.push((&o4, &t4, (2, None)));
        for (op, t) in [(&o0, &t0), (&o4, &t4)] {
            for k in 0..3 {
                for m in k..3 {
                    rows.push((op, t, (k, Some(m))));
                }
            }
        }
    }
    let mut checks = Vec::new();
    for (op, t, row) in rows {
        match check_row(op, t, &inv, row) {
            Ok(label) => checks.push(label),
            Err(res) => {
                return Err(Error::Calibration(format!(
                    "{} row {:?} fails; residual has {} terms: {}",
                    t.label(),
                    row,
                    res.monomial_count(),
                    res
                )))
            }
        }
    }
    Ok(CalibrationRecord { i8, i12, checks })
}

/// Full derivation with every table row verified.
pub fn derive_25() -> Result<CalibrationRecord> {
    derive_25_with(Verify::Full)
}

static CALIBRATION: OnceLock<CalibrationRecord> = OnceLock::new();

/// Process-wide calibration, derived on first use unless one was installed.
pub fn calibration() -> Result<&'static CalibrationRecord> {
    if let Some(c) = CALIBRATION.get() {
        return Ok(c);
    }
    let rec = derive_25_with(Verify::Defining)?;
    Ok(CALIBRATION.get_or_init(|| rec))
}

/// Installs a record (e.g. loaded from disk). Fails if one is already in use.
pub fn install_calibration(rec: CalibrationRecord) -> Result<()> {
    CALIBRATION
        .set(rec)
        .map_err(|_| Error::Calibration("a calibration record is already installed".into()))
}

impl CalibrationRecord {
    pub fn to_text(&self) -> String {
        let mut s = String::from("calibration 2|5\n");
        s.push_str(&format!("checks-passed: {} {}\n", self.checks.len(), self.checks.join(",")));
        s.push_str("[I8]\n");
        s.push_str(&self.i8.to_golden());
        s.push_str("[I12]\n");
        s.push_str(&self.i12.to_golden());
        s
    }

    /// Parses a record and re-verifies the two defining rows.
    pub fn from_text(text: &str) -> Result<Self> {
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, l)) if l.trim() == "calibration 2|5" => {}
            _ => return Err(perr(1, "expected `calibration 2|5` header")),
        }
        let checks = match lines.next() {
            Some((_, l)) if l.starts_with("checks-passed:") => l["checks-passed:".len()..]
                .split_whitespace()
                .nth(1)
                .map(|s| s.split(',').map(String::from).collect())
                .unwrap_or_default(),
            _ => return Err(perr(2, "expected `checks-passed:` line")),
        };
        let body: Vec<(usize, &str)> = lines.collect();
        let pos = |tag: &str| body.iter().position(|(_, l)| l.trim() == tag);
        let (p8, p12) = match (pos("[I8]"), pos("[I12]")) {
            (Some(a), Some(b)) if a < b => (a, b),
            _ => return Err(perr(3, "expected `[I8]` and `[I12]` sections")),
        };
        let join = |a: usize, b: usize| body[a..b].iter().map(|(_, l)| *l).collect::<Vec<_>>().join("\n");
        let shape = FormShape { n: 2, r: 5 };
        let i8 = SparsePoly::from_golden(&join(p8 + 1, p12))?.with_vars(&shape.s_vars())?;
        let i12 = SparsePoly::from_golden(&join(p12 + 1, body.len()))?.with_vars(&shape.s_vars())?;
        let rec = CalibrationRecord { i8, i12, checks };
        rec.verify_defining()?;
        Ok(rec)
    }

    pub fn verify_defining(&self) -> Result<()> {
        let o4 = wardops::build_o4_25()?;
        let t4 = ActionTable::o4_25();
        let inv = vec![i4_25().clone(), self.i8.clone(), self.i12.clone()];
        for k in 0..2 {
            check_row(&o4, &t4, &inv, (k, None))
                .map_err(|_| Error::Calibration(format!("stored polynomials fail the O4 row for {}", t4.names()[k])))?;
        }
        Ok(())
    }
}

/// SL-invariance check helper: true if the invariant values agree exactly.
pub fn same_values(a: &InvariantSet<Q>, b: &InvariantSet<Q>) -> bool {
    a.case == b.case && a.values.iter().zip(&b.values).all(|(x, y)| x.1 == y.1)
}

#[cfg(test)]
mod tests;
