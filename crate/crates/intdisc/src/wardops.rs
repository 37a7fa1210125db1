//! Ward identities: quadruple enumeration, explicit invariant operators of
//! the binary quintic, tabulated operator actions, the chain rule on
//! invariants, finite-difference residuals and the reduced ODE/PDEs.

use crate::error::{Error, Result};
use crate::forms::{FormShape, MultiIndex, SymmetricForm};
use crate::invariants::{compute_invariants, discriminant, Case};
use crate::polyalg::{parse_expr, var_list, SparsePoly};
use crate::scalar::{q, q_to_f64, qi, Q};
use crate::tensornet::{builtin_diagram, contract_symbolic};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Pairs {a, b} ≠ {p, q} of monomials with a + b = p + q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WardQuadruple {
    pub a: MultiIndex,
    pub b: MultiIndex,
    pub p: MultiIndex,
    pub q: MultiIndex,
}

impl fmt::Display for WardQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}d{} - d{}d{}", self.a, self.b, self.p, self.q)
    }
}

impl WardQuadruple {
    /// True if {a, b} vs {p, q} is this quadruple up to ordering.
    pub fn matches(&self, a: &[u32], b: &[u32], p: &[u32], q: &[u32]) -> bool {
        let pair = |x: &[u32], y: &[u32]| {
            let (x, y) = (MultiIndex::new(x), MultiIndex::new(y));
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let l = pair(&self.a.0, &self.b.0);
        let r = pair(&self.p.0, &self.q.0);
        let (u, v) = (pair(a, b), pair(p, q));
        (l == u && r == v) || (l == v && r == u)
    }
}

/// Every quadruple, grouped by the sum a + b, in deterministic order.
pub fn ward_pairs(n: usize, r: usize) -> Result<Vec<WardQuadruple>> {
    let shape = FormShape::new(n, r)?;
    let idx = shape.multi_indices();
    let mut groups: BTreeMap<Vec<u32>, Vec<(MultiIndex, MultiIndex)>> = BTreeMap::new();
    for i in 0..idx.len() {
        for j in i..idx.len() {
            let s: Vec<u32> = idx[i].0.iter().zip(&idx[j].0).map(|(x, y)| x + y).collect();
            groups.entry(s).or_default().push((idx[i].clone(), idx[j].clone()));
        }
    }
    let mut out = Vec::new();
    for (_, pairs) in groups.into_iter().rev() {
        for x in 0..pairs.len() {
            for y in x + 1..pairs.len() {
                out.push(WardQuadruple {
                    a: pairs[x].0.clone(),
                    b: pairs[x].1.clone(),
                    p: pairs[y].0.clone(),
                    q: pairs[y].1.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Σ coeff · (Σ c ∂²/∂s_i∂s_j) plus first-order terms.
#[derive(Clone, Debug)]
pub struct DiffOperator {
    pub shape: FormShape,
    pub blocks: Vec<OperatorBlock>,
    pub first: Vec<(SparsePoly, usize)>,
}

/// A polynomial coefficient times a constant combination of second derivatives.
#[derive(Clone, Debug)]
pub struct OperatorBlock {
    pub coeff: SparsePoly,
    pub pairs: Vec<(Q, usize, usize)>,
}

impl OperatorBlock {
    /// True if the derivative pairs share one sum a + b and the constants
    /// add to zero, i.e. the block is a combination of Ward operators.
    pub fn is_ward_combination(&self, shape: FormShape) -> bool {
        let idx = shape.multi_indices();
        let sums: Vec<Vec<u32>> =
            self.pairs.iter().map(|(_, i, j)| idx[*i].0.iter().zip(&idx[*j].0).map(|(x, y)| x + y).collect()).collect();
        let total = self.pairs.iter().fold(Q::zero(), |acc, (c, _, _)| acc + c);
        sums.windows(2).all(|w| w[0] == w[1]) && total.is_zero()
    }
}

impl DiffOperator {
    pub fn ward(shape: FormShape, quad: &WardQuadruple) -> Result<Self> {
        let pos = |m: &MultiIndex| {
            shape.index_of(m).ok_or_else(|| Error::Invalid(format!("multi-index {m} outside {shape}")))
        };
        let pairs = vec![(qi(1), pos(&quad.a)?, pos(&quad.b)?), (qi(-1), pos(&quad.p)?, pos(&quad.q)?)];
        let coeff = SparsePoly::constant_in(&shape.s_vars(), qi(1));
        Ok(DiffOperator { shape, blocks: vec![OperatorBlock { coeff, pairs }], first: Vec::new() })
    }

    pub fn second_order_terms(&self) -> usize {
        self.blocks.iter().map(|b| b.pairs.len()).sum()
    }

    pub fn apply(&self, p: &SparsePoly) -> SparsePoly {
        apply_operator_exact(self, p)
    }

    /// Degree of the coefficients minus two: the shift in polynomial degree.
    pub fn degree(&self) -> i32 {
        self.blocks.iter().filter_map(|b| b.coeff.total_degree()).max().unwrap_or(0) as i32 - 2
    }
}

/// Exact Σ coeff·∂²p + Σ coeff·∂p.
pub fn apply_operator_exact(op: &DiffOperator, p: &SparsePoly) -> SparsePoly {
    let vars = op.shape.s_vars();
    let p = p.with_vars(&vars).expect("polynomial in the operator's coordinates");
    let mut first: Vec<Option<SparsePoly>> = vec![None; vars.len()];
    let mut d1 = |i: usize| -> SparsePoly { first[i].get_or_insert_with(|| p.diff_index(i)).clone() };
    let mut out = SparsePoly::zero_in(&vars);
    for b in &op.blocks {
        let mut inner = SparsePoly::zero_in(&vars);
        for (c, i, j) in &b.pairs {
            let d = d1(*i).diff_index(*j);
            inner = inner.add(&d.scale(c));
        }
        out = out.add(&b.coeff.mul(&inner));
    }
    for (c, i) in &op.first {
        out = out.add(&c.mul(&d1(*i)));
    }
    out.with_vars(&vars).expect("same coordinates")
}

fn s25(name: &str) -> usize {
    let shape = FormShape { n: 2, r: 5 };
    shape.var_names().iter().position(|v| v == name).expect("2|5 coordinate")
}

/// The three derivative blocks shared by both 2|5 operators.
fn blocks_25() -> [Vec<(Q, usize, usize)>; 3] {
    let t = |c: i64, a: &str, b: &str| (qi(c), s25(a), s25(b));
    [
        vec![t(2, "s50", "s14"), t(-8, "s41", "s23"), t(6, "s32", "s32")],
        vec![t(1, "s05", "s50"), t(-3, "s41", "s14"), t(2, "s32", "s23")],
        vec![t(2, "s41", "s05"), t(-8, "s32", "s14"), t(6, "s23", "s23")],
    ]
}

fn tensor25(expr: &str) -> Result<SparsePoly> {
    crate::invariants::parse_tensor_expr(expr, FormShape { n: 2, r: 5 })
}

/// The degree-0 invariant operator of the binary quintic.
pub fn build_o0_25() -> Result<DiffOperator> {
    let coeffs = [
        tensor25("2 S_{11111} S_{12222} - 8 S_{11112} S_{11222} + 6 S_{11122}^2")?,
        tensor25("2 S_{11111} S_{22222} - 6 S_{11112} S_{12222} + 4 S_{11122} S_{11222}")?,
        tensor25("2 S_{11112} S_{22222} - 8 S_{11122} S_{12222} + 6 S_{11222}^2")?,
    ];
    let blocks = coeffs.into_iter().zip(blocks_25()).map(|(coeff, pairs)| OperatorBlock { coeff, pairs }).collect();
    Ok(DiffOperator { shape: FormShape { n: 2, r: 5 }, blocks, first: Vec::new() })
}

/// The degree-4 invariant operator, with coefficients P₁₁, 2P₁₂, P₂₂ from the P_ab contraction.
pub fn build_o4_25() -> Result<DiffOperator> {
    let p = contract_symbolic(&builtin_diagram("p_ab_25")?)?;
    let coeffs = [p.component(&[1, 1])?, p.component(&[1, 2])?.scale(&qi(2)), p.component(&[2, 2])?];
    let blocks = coeffs.into_iter().zip(blocks_25()).map(|(coeff, pairs)| OperatorBlock { coeff, pairs }).collect();
    Ok(DiffOperator { shape: FormShape { n: 2, r: 5 }, blocks, first: Vec::new() })
}

/// Action of an invariant operator on invariants and their pairwise products,
/// as polynomials in the invariants.
#[derive(Clone, Debug)]
pub struct ActionTable {
    label: &'static str,
    names: Vec<&'static str>,
    linear: Vec<SparsePoly>,
    quadratic: Vec<Vec<SparsePoly>>,
}

impl ActionTable {
    fn build(label: &'static str, names: &[&'static str], linear: &[&str], quadratic: &[&str]) -> Self {
        let vars = var_list(names);
        let parse = |e: &str| {
            parse_expr(e, &|n: &str| SparsePoly::var(&vars, n))
                .and_then(|p| p.with_vars(&vars))
                .expect("table entry parses")
        };
        let k = names.len();
        let lin = linear.iter().map(|e| parse(e)).collect();
        let mut quad = vec![vec![SparsePoly::zero_in(&vars); k]; k];
        let mut it = quadratic.iter();
        for a in 0..k {
            for b in a..k {
                let p = parse(it.next().expect("upper triangle"));
                quad[a][b] = p.clone();
                quad[b][a] = p;
            }
        }
        ActionTable { label, names: names.to_vec(), linear: lin, quadratic: quad }
    }

    pub fn o0_25() -> Self {
        Self::build(
            "O0[2|5]",
            &["I4", "I8", "I12"],
            &["264/25 I4", "2/25 I4^2 + 294/25 I8", "12/25 I4 I8 + 162/5 I12"],
            &[
                "928/25 I4^2 - 384/25 I8",
                "2/25 I4^3 + 1166/25 I4 I8 + 192/5 I12",
                "12/25 I4^2 I8 + 144/25 I8^2 + 1794/25 I4 I12",
                "8/25 I4^2 I8 + 1188/25 I8^2 + 12/5 I4 I12",
                "9/25 I4 I8^2 + 12/25 I4^2 I12 + 1944/25 I8 I12",
                "-54/25 I8^3 + 84/25 I4 I8 I12 + 684/5 I12^2",
            ],
        )
    }

    pub fn o4_25() -> Self {
        Self::build(
            "O4[2|5]",
            &["I4", "I8", "I12"],
            &["-264/25 I8", "-2/25 I4 I8 + 588/25 I12", "363/50 I8^2 - 153/25 I4 I12"],
            &[
                "-928/25 I4 I8 - 768/25 I12",
                "-2/25 I4^2 I8 - 584/25 I8^2 + 524/25 I4 I12",
                "363/50 I4 I8^2 - 153/25 I4^2 I12 - 696/25 I8 I12",
                "1/25 I4 I8^2 - 22/25 I4^2 I12 + 2376/25 I8 I12",
                "603/50 I8^3 - 291/25 I4 I8 I12 + 1188/25 I12^2",
                "129/5 I8^2 I12 - 606/25 I4 I12^2",
            ],
        )
    }

    /// Tabulated action of the degree-4 operator of the ternary cubic.
    pub fn o4_33() -> Self {
        Self::build(
            "O4[3|3]",
            &["I4", "I6"],
            &["-140/9 I4^2", "-98/3 I4 I6"],
            &["1/3 I6^2 - 472/9 I4^3", "-770/9 I4^2 I6", "256/3 I4^4 - 340/3 I6^2 I4"],
        )
    }

    pub fn label(&self) -> &'static str {
        self.label
    }
    pub fn names(&self) -> &[&'static str] {
        &self.names
    }
    pub fn linear(&self, k: usize) -> &SparsePoly {
        &self.linear[k]
    }
    pub fn quadratic(&self, k: usize, m: usize) -> &SparsePoly {
        &self.quadratic[k][m]
    }

    /// Coefficients of ∂F/∂I_k and ∂²F/∂I_k∂I_m (k ≤ m) in ÔF.
    pub fn reduced_coefficients(&self) -> (Vec<SparsePoly>, Vec<Vec<SparsePoly>>) {
        let k = self.names.len();
        let vars = self.linear[0].vars().clone();
        let inv: Vec<SparsePoly> = (0..k).map(|i| SparsePoly::variable(&vars, i)).collect();
        let mut second = vec![vec![SparsePoly::zero_in(&vars); k]; k];
        for a in 0..k {
            for b in a..k {
                let c = self.quadratic[a][b].sub(&inv[a].mul(&self.linear[b])).sub(&inv[b].mul(&self.linear[a]));
                second[a][b] = if a == b { c.scale(&q(1, 2)) } else { c };
            }
        }
        (self.linear.clone(), second)
    }
}

/// Σ_k ∂F/∂I_k·ÔI_k + ½ Σ_{k,m} ∂²F/∂I_k∂I_m·[Ô(I_kI_m) − I_kÔI_m − I_mÔI_k].
pub fn chain_rule_apply(table: &ActionTable, grad: &[f64], hess: &[Vec<f64>], inv: &[f64]) -> Result<f64> {
    let k = table.names.len();
    if grad.len() != k || inv.len() != k || hess.len() != k || hess.iter().any(|r| r.len() != k) {
        return Err(Error::Shape(format!("{} needs {k} invariants and derivatives", table.label)));
    }
    let mut acc = 0.0;
    for a in 0..k {
        acc += grad[a] * table.linear[a].eval(inv);
        for b in 0..k {
            let bracket = table.quadratic[a][b].eval(inv)
                - inv[a] * table.linear[b].eval(inv)
                - inv[b] * table.linear[a].eval(inv);
            acc += 0.5 * hess[a][b] * bracket;
        }
    }
    Ok(acc)
}

/// Gradient and Hessian of F = I₄^{−1/4}·G(z), z = I₆²/I₄³, from G, G′, G″.
pub fn invariant_partials_33(i4: f64, i6: f64, g: f64, g1: f64, g2: f64) -> (Vec<f64>, Vec<Vec<f64>>) {
    let z = i6 * i6 / i4.powi(3);
    let z4 = -3.0 * z / i4;
    let z6 = 2.0 * i6 / i4.powi(3);
    let z44 = 12.0 * z / (i4 * i4);
    let z46 = -6.0 * i6 / i4.powi(4);
    let z66 = 2.0 / i4.powi(3);
    let p = |e: f64| i4.powf(e);
    let f4 = -0.25 * p(-1.25) * g + p(-0.25) * g1 * z4;
    let f6 = p(-0.25) * g1 * z6;
    let f44 = 5.0 / 16.0 * p(-2.25) * g - 0.5 * p(-1.25) * g1 * z4 + p(-0.25) * (g2 * z4 * z4 + g1 * z44);
    let f46 = -0.25 * p(-1.25) * g1 * z6 + p(-0.25) * (g2 * z4 * z6 + g1 * z46);
    let f66 = p(-0.25) * (g2 * z6 * z6 + g1 * z66);
    (vec![f4, f6], vec![vec![f44, f46], vec![f46, f66]])
}

/// Numerical function of a form, as used by the residual engine.
pub type FormFn<'a> = dyn Fn(&SymmetricForm<f64>) -> Result<f64> + 'a;

fn shifted(f: &SymmetricForm<f64>, moves: &[(usize, f64)]) -> SymmetricForm<f64> {
    let mut c = f.coeffs().to_vec();
    for &(i, d) in moves {
        c[i] += d;
    }
    SymmetricForm::from_coeffs(f.shape(), c).expect("same shape")
}

fn pos(f: &SymmetricForm<f64>, a: &MultiIndex) -> Result<usize> {
    f.shape().index_of(a).ok_or_else(|| Error::Invalid(format!("multi-index {a} outside {}", f.shape())))
}

/// Central-difference ∂²fn/∂s_a∂s_b with step h (error O(h²)).
pub fn fd_mixed_second(fun: &FormFn, f: &SymmetricForm<f64>, a: &MultiIndex, b: &MultiIndex, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::Invalid(format!("step must be positive, got {h}")));
    }
    let (i, j) = (pos(f, a)?, pos(f, b)?);
    if i == j {
        let (p, m) = (fun(&shifted(f, &[(i, h)]))?, fun(&shifted(f, &[(i, -h)]))?);
        Ok((p - 2.0 * fun(f)? + m) / (h * h))
    } else {
        let v = |si: f64, sj: f64| fun(&shifted(f, &[(i, si * h), (j, sj * h)]));
        Ok((v(1.0, 1.0)? - v(1.0, -1.0)? - v(-1.0, 1.0)? + v(-1.0, -1.0)?) / (4.0 * h * h))
    }
}

/// Two-step Richardson extrapolation of [`fd_mixed_second`] (error O(h⁴)).
pub fn fd_mixed_second_richardson(
    fun: &FormFn,
    f: &SymmetricForm<f64>,
    a: &MultiIndex,
    b: &MultiIndex,
    h: f64,
) -> Result<f64> {
    let d1 = fd_mixed_second(fun, f, a, b, h)?;
    let d2 = fd_mixed_second(fun, f, a, b, h / 2.0)?;
    Ok((4.0 * d2 - d1) / 3.0)
}

/// Central first derivative with Richardson extrapolation.
pub fn fd_first(fun: &FormFn, f: &SymmetricForm<f64>, i: usize, h: f64) -> Result<f64> {
    let d = |h: f64| -> Result<f64> { Ok((fun(&shifted(f, &[(i, h)]))? - fun(&shifted(f, &[(i, -h)]))?) / (2.0 * h)) };
    let (d1, d2) = (d(h)?, d(h / 2.0)?);
    Ok((4.0 * d2 - d1) / 3.0)
}

/// Relative discriminant below which residual checks refuse the form.
pub const WARD_LOCUS_THRESHOLD: f64 = 1e-6;

/// Default step: a fixed fraction of the largest coefficient.
pub fn default_step(f: &SymmetricForm<f64>) -> f64 {
    1e-3 * f.coeff_scale().max(f64::MIN_POSITIVE)
}

/// |D(f)| / σ^deg with σ the largest coefficient; None for shapes without a discriminant.
pub fn relative_discriminant(f: &SymmetricForm<f64>) -> Option<f64> {
    Case::of(f.shape()).ok()?;
    let sigma = f.coeff_scale();
    if sigma == 0.0 {
        return Some(0.0);
    }
    let g = f.scale(&(1.0 / sigma));
    let inv = compute_invariants(&g.to_q().ok()?).ok()?;
    Some(q_to_f64(&discriminant(&inv)).abs())
}

/// Ratio between the residual threshold and the relative roundoff of a second-difference stencil.
pub const WARD_FLOOR_MARGIN: f64 = 1e-6;

/// Relative residual |∂a∂b J − ∂p∂q J| / (|∂a∂b J| + |∂p∂q J| + floor).
pub fn ward_residual(fun: &FormFn, f: &SymmetricForm<f64>, quad: &WardQuadruple, h: f64) -> Result<f64> {
    if let Some(d) = relative_discriminant(f) {
        if d < WARD_LOCUS_THRESHOLD {
            return Err(Error::Singular(format!("relative discriminant {d:.3e} is too close to the locus")));
        }
    }
    let dab = fd_mixed_second_richardson(fun, f, &quad.a, &quad.b, h)?;
    let dpq = fd_mixed_second_richardson(fun, f, &quad.p, &quad.q, h)?;
    let floor = f64::EPSILON * fun(f)?.abs() / (WARD_FLOOR_MARGIN * h * h);
    Ok((dab - dpq).abs() / (dab.abs() + dpq.abs() + floor))
}

/// Residual of every quadruple of the form's shape at the default step.
pub fn ward_report(fun: &FormFn, f: &SymmetricForm<f64>) -> Result<Vec<(WardQuadruple, f64)>> {
    let h = default_step(f);
    ward_pairs(f.shape().n, f.shape().r)?
        .into_iter()
        .map(|q| ward_residual(fun, f, &q, h).map(|r| (q, r)))
        .collect()
}

/// Â_ij fn at f, with Â_ij = (1/r) Σ_a a_i s_a ∂/∂s_{a − e_i + e_j}; i, j are 1-based.
pub fn gl_generator(fun: &FormFn, f: &SymmetricForm<f64>, i: usize, j: usize, h: f64) -> Result<f64> {
    let shape = f.shape();
    if i == 0 || j == 0 || i > shape.n || j > shape.n {
        return Err(Error::Invalid(format!("generator indices ({i},{j}) outside 1..={}", shape.n)));
    }
    let (i, j) = (i - 1, j - 1);
    let mut acc = 0.0;
    for (k, a) in shape.multi_indices().iter().enumerate() {
        let ai = a.0[i];
        if ai == 0 || f.coeffs()[k] == 0.0 {
            continue;
        }
        let mut b = a.0.clone();
        b[i] -= 1;
        b[j] += 1;
        let t = shape.index_of(&MultiIndex(b)).expect("same degree");
        acc += ai as f64 * f.coeffs()[k] * fd_first(fun, f, t, h)?;
    }
    Ok(acc / shape.r as f64)
}

/// Exact vector field X_ij p = Σ_a a_i s_a ∂p/∂s_{a − e_i + e_j} (so Â_ij = X_ij / r); 1-based.
pub fn gl_vector_field(p: &SparsePoly, shape: FormShape, i: usize, j: usize) -> Result<SparsePoly> {
    if i == 0 || j == 0 || i > shape.n || j > shape.n {
        return Err(Error::Invalid(format!("generator indices ({i},{j}) outside 1..={}", shape.n)));
    }
    let vars = shape.s_vars();
    let p = p.with_vars(&vars)?;
    let (i, j) = (i - 1, j - 1);
    let mut out = SparsePoly::zero_in(&vars);
    for (k, a) in shape.multi_indices().iter().enumerate() {
        let ai = a.0[i];
        if ai == 0 {
            continue;
        }
        let mut b = a.0.clone();
        b[i] -= 1;
        b[j] += 1;
        let t = shape.index_of(&MultiIndex(b)).expect("same degree");
        let term = SparsePoly::variable(&vars, k).mul(&p.diff_index(t)).scale(&qi(ai as i64));
        out = out.add(&term);
    }
    Ok(out)
}

/// Σ coeff(f)·Σ c·∂²fn/∂s_i∂s_j by finite differences; returns (value, Σ|terms|).
pub fn apply_operator_fd(op: &DiffOperator, fun: &FormFn, f: &SymmetricForm<f64>, h: f64) -> Result<(f64, f64)> {
    if f.shape() != op.shape {
        return Err(Error::Shape(format!("operator on {} applied to {}", op.shape, f.shape())));
    }
    let idx = op.shape.multi_indices();
    let (mut val, mut scale) = (0.0, 0.0);
    for b in &op.blocks {
        let coeff = b.coeff.eval(f.coeffs());
        for (c, i, j) in &b.pairs {
            let d = fd_mixed_second_richardson(fun, f, &idx[*i], &idx[*j], h)?;
            let t = coeff * crate::scalar::q_to_f64(c) * d;
            val += t;
            scale += t.abs();
        }
    }
    Ok((val, scale))
}

/// Gauss's equation t(1−t)F″ + (c − (a+b+1)t)F′ − abF.
pub fn gauss_ode_residual(a: f64, b: f64, c: f64, t: f64, f0: f64, f1: f64, f2: f64) -> f64 {
    t * (1.0 - t) * f2 + (c - (a + b + 1.0) * t) * f1 - a * b * f0
}

/// (144z² − 24z)G″ + (216z − 12)G′ + 5G.
pub fn ode_residual_24(g: f64, g1: f64, g2: f64, z: f64) -> f64 {
    (144.0 * z * z - 24.0 * z) * g2 + (216.0 * z - 12.0) * g1 + 5.0 * g
}

/// (144z² + 1536z)G″ + (216z + 768)G′ + 5G.
pub fn ode_residual_33(g: f64, g1: f64, g2: f64, z: f64) -> f64 {
    (144.0 * z * z + 1536.0 * z) * g2 + (216.0 * z + 768.0) * g1 + 5.0 * g
}

/// Value and partials of a function of (u, v) up to second order.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet2 {
    pub g: f64,
    pub gu: f64,
    pub gv: f64,
    pub guu: f64,
    pub guv: f64,
    pub gvv: f64,
}

/// Left-hand sides of the two reduced equations for G(u, v) of the binary quintic.
pub fn pde_residuals_25(j: &Jet2, u: f64, v: f64) -> (f64, f64) {
    let first = 50.0 * (-1.0 + 64.0 * u) * (u + 6.0 * u * u + 15.0 * v) * j.guu
        + (75.0 * u * u + 72000.0 * v * v + 57600.0 * v * u * u + 600.0 * v * u + 7200.0 * u.powi(3) - 250.0 * v) * j.guv
        + (675.0 * u.powi(3) - 13500.0 * v * v + 10800.0 * v * u * u - 750.0 * v * u + 43200.0 * u * v * v) * j.gvv
        + (50400.0 * v + 30720.0 * u * u - 50.0 + 5770.0 * u) * j.gu
        + (-300.0 * u + 60480.0 * v * u + 11160.0 * u * u - 7650.0 * v) * j.gv
        + (528.0 * u + 110.0) * j.g;
    let second = 25.0 * (-1.0 + 64.0 * u) * (5.0 * u * u + 48.0 * u * v - 22.0 * v) * j.guu
        + (230400.0 * u * v * v - 39600.0 * v * v - 6000.0 * u.powi(3) + 28800.0 * v * u * u + 6800.0 * v * u) * j.guv
        + (172800.0 * v.powi(3) + 7500.0 * v * v + 25200.0 * u * v * v - 7050.0 * v * u * u) * j.gvv
        + (-36120.0 * v + 4000.0 * u * u + 122880.0 * v * u + 100.0 * u) * j.gu
        + (241920.0 * v * v + 19440.0 * v * u - 9075.0 * u * u + 7650.0 * v) * j.gv
        + (-220.0 * u + 2112.0 * v) * j.g;
    (first, second)
}

/// Parses a quadruple written as `a1..an + b1..bn = p1..pn + q1..qn` with single digits.
pub fn parse_quadruple(text: &str, n: usize) -> Result<WardQuadruple> {
    let parse_mi = |s: &str| -> Result<MultiIndex> {
        let d: Option<Vec<u32>> = s.trim().chars().map(|c| c.to_digit(10)).collect();
        match d {
            Some(v) if v.len() == n => Ok(MultiIndex(v)),
            _ => Err(Error::Invalid(format!("bad multi-index `{}`", s.trim()))),
        }
    };
    let (l, r) = text.split_once('=').ok_or_else(|| Error::Invalid("expected `=`".into()))?;
    let (a, b) = l.split_once('+').ok_or_else(|| Error::Invalid("expected `+`".into()))?;
    let (p, qq) = r.split_once('+').ok_or_else(|| Error::Invalid("expected `+`".into()))?;
    Ok(WardQuadruple { a: parse_mi(a)?, b: parse_mi(b)?, p: parse_mi(p)?, q: parse_mi(qq)? })
}

#[cfg(test)]
mod tests;
