//! Exact sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial owns an ordered variable list; binary operations on
//! polynomials over different lists work on the union of the two lists.

use crate::error::{Error, Result};
use crate::scalar::{format_q, parse_q, q_to_f64, Scalar, Q};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use std::sync::Arc;

pub type Exponents = Vec<u32>;

#[derive(Clone)]
pub struct SparsePoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exponents, Q>,
}

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

impl SparsePoly {
    pub fn zero_in(vars: &Arc<Vec<String>>) -> Self {
        SparsePoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &Arc<Vec<String>>, c: Q) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn constant(c: Q) -> Self {
        Self::constant_in(&Arc::new(Vec::new()), c)
    }

    /// The polynomial consisting of the single variable at position `idx`.
    pub fn variable(vars: &Arc<Vec<String>>, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero_in(vars);
        p.terms.insert(e, Q::one());
        p
    }

    pub fn var(vars: &Arc<Vec<String>>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(vars, idx))
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, Q)>>(
        vars: &Arc<Vec<String>>,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::Invalid(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True if every term has total degree `d` (the zero polynomial qualifies).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    pub fn with_vars(&self, target: &Arc<Vec<String>>) -> Result<Self> {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return Ok(SparsePoly { vars: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> =
            self.vars.iter().map(|v| target.iter().position(|t| t == v)).collect();
        let mut out = Self::zero_in(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] = k,
                    None => return Err(Error::UnknownVariable(self.vars[i].clone())),
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            return (self.clone(), SparsePoly { vars: self.vars.clone(), terms: other.terms.clone() });
        }
        if other.vars.is_empty() {
            return (self.clone(), other.with_vars(&self.vars).expect("constant embeds"));
        }
        if self.vars.is_empty() {
            return (self.with_vars(&other.vars).expect("constant embeds"), other.clone());
        }
        let mut union: Vec<String> = self.vars.to_vec();
        for v in other.vars.iter() {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        let union = Arc::new(union);
        (
            self.with_vars(&union).expect("union contains vars"),
            other.with_vars(&union).expect("union contains vars"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero_in(&self.vars);
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        let (a, b) = self.aligned(other);
        let mut acc: std::collections::HashMap<Exponents, Q> =
            std::collections::HashMap::with_capacity(a.terms.len() * b.terms.len() / 2 + 1);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        SparsePoly {
            vars: a.vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant_in(&self.vars, Q::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn differentiate(&self, var: &str) -> Result<Self> {
        let i = self.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.diff_index(i))
    }

    pub fn diff_index(&self, i: usize) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * Q::from_integer(k.into()));
        }
        out
    }

    /// Evaluates with one value per variable, in variable order.
    pub fn eval<T: Scalar>(&self, values: &[T]) -> T {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut powers: Vec<Vec<T>> = vec![vec![T::one()]; values.len()];
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = T::from_q(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().times(&values[i]);
                    powers[i].push(next);
                }
                t = t.times(&powers[i][k]);
            }
            acc.accumulate(&t);
        }
        acc
    }

    /// Evaluates at a named point; every variable must be bound.
    pub fn eval_named(&self, point: &[(&str, Q)]) -> Result<Q> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            match point.iter().find(|(n, _)| n == v) {
                Some((_, x)) => vals.push(x.clone()),
                None => return Err(Error::UnknownVariable(v.clone())),
            }
        }
        Ok(self.eval(&vals))
    }

    /// Fast floating-point evaluator over the same variable order.
    pub fn to_float(&self) -> FloatPoly {
        FloatPoly {
            nvars: self.vars.len(),
            exps: self.terms.keys().cloned().collect(),
            coeffs: self.terms.values().map(q_to_f64).collect(),
        }
    }

    /// Coefficients of `var^k` for k = 0..=deg, as polynomials in the same variable list.
    pub fn coefficients_in(&self, var: usize) -> Vec<SparsePoly> {
        let deg = self.terms.keys().map(|e| e[var]).max().unwrap_or(0) as usize;
        let mut out = vec![Self::zero_in(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut ne = e.clone();
            ne[var] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    fn leading(&self) -> Option<(&Exponents, &Q)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (num, den) = self.aligned(d);
        let (le, lc) = den.leading()?;
        let (le, lc) = (le.clone(), lc.clone());
        let mut rem = num;
        let mut quo = Self::zero_in(&den.vars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(&le).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponents = re.iter().zip(&le).map(|(a, b)| a - b).collect();
            let c = rc / &lc;
            let mut t = Self::zero_in(&den.vars);
            t.add_term(e, c);
            rem = rem.sub(&t.mul(&den));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// Sorted `exponents : coefficient` lines, leading terms first.
    pub fn to_golden(&self) -> String {
        let mut s = format!("vars: {}\n", self.vars.join(" "));
        for (e, c) in self.terms.iter().rev() {
            let ex: Vec<String> = e.iter().map(|k| k.to_string()).collect();
            s.push_str(&format!("{} : {}\n", ex.join(" "), format_q(c)));
        }
        s
    }

    pub fn from_golden(text: &str) -> Result<Self> {
        let mut vars: Option<Arc<Vec<String>>> = None;
        let mut terms = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vars:") {
                vars = Some(Arc::new(rest.split_whitespace().map(String::from).collect()));
                continue;
            }
            let err = |msg: &str| Error::Parse { line: ln + 1, msg: msg.to_string() };
            let vs = vars.as_ref().ok_or_else(|| err("missing `vars:` header"))?;
            let (lhs, rhs) = line.split_once(':').ok_or_else(|| err("expected `exponents : coefficient`"))?;
            let e: Vec<u32> = lhs
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad exponent"))?;
            if e.len() != vs.len() {
                return Err(err("exponent count does not match variables"));
            }
            let c = parse_q(rhs).ok_or_else(|| err("bad coefficient"))?;
            terms.push((e, c));
        }
        let vars = vars.unwrap_or_else(|| Arc::new(Vec::new()));
        Self::from_terms(&vars, terms)
    }
}

/// Parses a sum of monomials such as `2 S_{111}^2 S_{222} - 3/4 x*y^2`.
/// Each factor name is handed to `resolve`; `^k` raises it to a power.
pub fn parse_expr(text: &str, resolve: &dyn Fn(&str) -> Result<SparsePoly>) -> Result<SparsePoly> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut acc = SparsePoly::constant(Q::zero());
    let bad = |msg: String| Error::Parse { line: 0, msg };
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && (chars[*i].is_whitespace() || chars[*i] == '*') {
            *i += 1;
        }
    };
    let read_int = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    skip_ws(&mut i);
    while i < chars.len() {
        let mut sign = 1i64;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-' || chars[i].is_whitespace()) {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let mut coeff = Q::from_integer(sign.into());
        if i < chars.len() && chars[i].is_ascii_digit() {
            let num = read_int(&mut i).ok_or_else(|| bad("bad integer".into()))?;
            let mut c = Q::from_integer(num.into());
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den = read_int(&mut i).filter(|&d| d != 0).ok_or_else(|| bad("bad denominator".into()))?;
                c /= Q::from_integer(den.into());
            }
            coeff *= c;
        }
        let mut term = SparsePoly::constant(coeff);
        loop {
            skip_ws(&mut i);
            if i >= chars.len() || chars[i] == '+' || chars[i] == '-' {
                break;
            }
            if !chars[i].is_alphabetic() {
                return Err(bad(format!("unexpected `{}` at offset {i}", chars[i])));
            }
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            if i < chars.len() && chars[i] == '{' {
                while i < chars.len() && chars[i] != '}' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(bad("unclosed `{`".into()));
                }
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let mut factor = resolve(&name)?;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let k = read_int(&mut i).ok_or_else(|| bad(format!("bad exponent after `{name}`")))?;
                factor = factor.pow(k as u32);
            }
            term = term.mul(&factor);
        }
        acc = acc.add(&term);
        skip_ws(&mut i);
    }
    Ok(acc)
}

/// Resultant of two polynomials regarded as univariate in `var`, via the
/// Sylvester determinant.
pub fn resultant(p: &SparsePoly, q: &SparsePoly, var: &str) -> Result<SparsePoly> {
    let (p, q) = p.aligned(q);
    let v = p.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::Invalid("resultant of the zero polynomial".into()));
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    if m == 0 && n == 0 {
        return Ok(SparsePoly::constant_in(p.vars(), Q::one()));
    }
    let size = m + n;
    let zero = SparsePoly::zero_in(p.vars());
    let mut mat = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    Ok(determinant(&mat, p.vars()))
}

/// Determinant by dynamic programming over row subsets; exact and division free.
pub fn determinant(mat: &[Vec<SparsePoly>], vars: &Arc<Vec<String>>) -> SparsePoly {
    let n = mat.len();
    if n == 0 {
        return SparsePoly::constant_in(vars, Q::one());
    }
    assert!(n <= 20, "determinant DP limited to 20x20");
    let mut dp: Vec<Option<SparsePoly>> = vec![None; 1 << n];
    dp[0] = Some(SparsePoly::constant_in(vars, Q::one()));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        if cur.is_zero() {
            continue;
        }
        let col = mask.count_ones() as usize;
        if col == n {
            dp[mask] = Some(cur);
            continue;
        }
        for row in 0..n {
            if mask & (1 << row) != 0 || mat[row][col].is_zero() {
                continue;
            }
            let inversions = (mask >> (row + 1)).count_ones();
            let mut term = cur.mul(&mat[row][col]);
            if inversions % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut dp[mask | (1 << row)];
            *slot = Some(match slot.take() {
                Some(prev) => prev.add(&term),
                None => term,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| SparsePoly::zero_in(vars))
}

/// Discriminant in `var`, normalized so that disc(a s² + b s + c) = b² − 4ac.
pub fn discriminant_uni(p: &SparsePoly, var: &str) -> Result<SparsePoly> {
    let v = p.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    if p.is_zero() {
        return Err(Error::Invalid("discriminant of the zero polynomial".into()));
    }
    let coeffs = p.coefficients_in(v);
    let d = coeffs.len() - 1;
    if d == 0 {
        return Err(Error::Invalid(format!("polynomial is constant in `{var}`")));
    }
    let dp = p.diff_index(v);
    let res = resultant(p, &dp, var)?;
    let lc = coeffs[d].with_vars(res.vars()).expect("same variables");
    let mut disc = res
        .div_exact(&lc)
        .ok_or_else(|| Error::Invalid("leading coefficient does not divide the resultant".into()))?;
    if (d * (d - 1) / 2) % 2 == 1 {
        disc = disc.neg();
    }
    Ok(disc)
}

/// Precompiled floating-point copy of a polynomial.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    nvars: usize,
    exps: Vec<Exponents>,
    coeffs: Vec<f64>,
}

impl FloatPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.nvars);
        let mut acc = 0.0;
        for (e, c) in self.exps.iter().zip(&self.coeffs) {
            let mut t = *c;
            for (xi, &k) in x.iter().zip(e) {
                if k != 0 {
                    t *= xi.powi(k as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Sum of absolute term values, a natural scale for cancellation checks.
    pub fn eval_abs(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in self.exps.iter().zip(&self.coeffs) {
            let mut t = c.abs();
            for (xi, &k) in x.iter().zip(e) {
                if k != 0 {
                    t *= xi.abs().powi(k as i32);
                }
            }
            acc += t;
        }
        acc
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], p) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_q(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_q(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Zero for SparsePoly {
    fn zero() -> Self {
        SparsePoly::constant(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SparsePoly {
    fn one() -> Self {
        SparsePoly::constant(Q::one())
    }
}

impl Scalar for SparsePoly {
    fn plus(&self, o: &Self) -> Self {
        SparsePoly::add(self, o)
    }
    fn minus(&self, o: &Self) -> Self {
        SparsePoly::sub(self, o)
    }
    fn times(&self, o: &Self) -> Self {
        SparsePoly::mul(self, o)
    }
    fn negate(&self) -> Self {
        SparsePoly::neg(self)
    }
    fn from_q(q: &Q) -> Self {
        SparsePoly::constant(q.clone())
    }
    fn accumulate(&mut self, o: &Self) {
        if Arc::ptr_eq(&self.vars, &o.vars) || *self.vars == *o.vars {
            for (e, c) in &o.terms {
                self.add_term(e.clone(), c.clone());
            }
        } else {
            *self = SparsePoly::add(self, o);
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: &SparsePoly) -> SparsePoly {
                SparsePoly::$m(self, rhs)
            }
        }
        impl std::ops::$tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                SparsePoly::$m(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::neg(self)
    }
}

impl std::ops::Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_expressions() {
        let v = var_list(&["x", "y"]);
        let res = |name: &str| SparsePoly::var(&v, name);
        let p = parse_expr("2 x^2 - 3/4 x*y + y - 1", &res).unwrap();
        let x = SparsePoly::var(&v, "x").unwrap();
        let y = SparsePoly::var(&v, "y").unwrap();
        let want = &(&x.pow(2).scale(&qi(2)) - &x.mul(&y).scale(&q(3, 4))) + &(&y - &SparsePoly::constant(qi(1)));
        assert_eq!(p, want);
        assert!(parse_expr("2 z", &res).is_err());
        assert!(parse_expr("2 x^", &res).is_err());
        assert!(parse_expr("", &res).unwrap().is_zero());
    }
    use crate::scalar::{q, qi};

    fn xy() -> (SparsePoly, SparsePoly) {
        let v = var_list(&["x", "y"]);
        (SparsePoly::var(&v, "x").unwrap(), SparsePoly::var(&v, "y").unwrap())
    }

    #[test]
    fn square_of_sum() {
        let (x, y) = xy();
        let s = (&x + &y).pow(2);
        let expect = &(&x.pow(2) + &x.mul(&y).scale(&qi(2))) + &y.pow(2);
        assert_eq!(s, expect);
        assert_eq!(s.monomial_count(), 3);
    }

    #[test]
    fn difference_with_itself_is_empty() {
        let (x, y) = xy();
        let p = &x.pow(3) - &y.scale(&q(2, 7));
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).monomial_count(), 0);
    }

    #[test]
    fn derivatives() {
        let v = var_list(&["s40", "s22"]);
        let a = SparsePoly::var(&v, "s40").unwrap();
        let b = SparsePoly::var(&v, "s22").unwrap();
        let p = a.pow(2).mul(&b);
        assert_eq!(p.differentiate("s40").unwrap(), a.mul(&b).scale(&qi(2)));
        assert!(SparsePoly::constant_in(&v, qi(5)).differentiate("s22").unwrap().is_zero());
        assert!(matches!(p.differentiate("zz"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn union_of_variable_lists() {
        let a = SparsePoly::var(&var_list(&["a"]), "a").unwrap();
        let b = SparsePoly::var(&var_list(&["b"]), "b").unwrap();
        let s = &a * &b;
        assert_eq!(s.vars().len(), 2);
        assert_eq!(s.eval_named(&[("a", qi(3)), ("b", q(1, 2))]).unwrap(), q(3, 2));
        assert!(s.eval_named(&[("a", qi(3))]).is_err());
    }

    #[test]
    fn evaluation_substitutions() {
        let (x, y) = xy();
        let p = &(&x.pow(2) - &y) + &SparsePoly::constant(qi(1));
        assert_eq!(p.eval(&[qi(2), qi(3)]), qi(2));
        assert_eq!(p.eval(&[q(1, 2), qi(0)]), q(5, 4));
        assert_eq!(p.eval(&[1.5f64, 0.25]), 3.0);
        assert_eq!(p.to_float().eval(&[1.5, 0.25]), 3.0);
    }

    #[test]
    fn quadratic_discriminant_normalization() {
        let v = var_list(&["s", "a", "b", "c"]);
        let s = SparsePoly::var(&v, "s").unwrap();
        let a = SparsePoly::var(&v, "a").unwrap();
        let b = SparsePoly::var(&v, "b").unwrap();
        let c = SparsePoly::var(&v, "c").unwrap();
        let p = &(&a.mul(&s.pow(2)) + &b.mul(&s)) + &c;
        let d = discriminant_uni(&p, "s").unwrap();
        assert_eq!(d, &b.pow(2) - &a.mul(&c).scale(&qi(4)));
    }

    #[test]
    fn linear_resultant() {
        let v = var_list(&["s", "a", "b"]);
        let s = SparsePoly::var(&v, "s").unwrap();
        let a = SparsePoly::var(&v, "a").unwrap();
        let b = SparsePoly::var(&v, "b").unwrap();
        let r = resultant(&(&s - &a), &(&s - &b), "s").unwrap();
        assert!(r == &a - &b || r == &b - &a);
    }

    #[test]
    fn double_root_has_zero_discriminant() {
        let v = var_list(&["s"]);
        let s = SparsePoly::var(&v, "s").unwrap();
        let one = SparsePoly::constant(qi(1));
        assert!(discriminant_uni(&(&s - &one).pow(2), "s").unwrap().is_zero());
    }

    #[test]
    fn golden_round_trip() {
        let (x, y) = xy();
        let p = &x.pow(3).scale(&q(-2, 3)) + &y.mul(&x);
        let text = p.to_golden();
        assert!(text.starts_with("vars: x y\n3 0 : -2/3\n"));
        assert_eq!(SparsePoly::from_golden(&text).unwrap(), p);
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &x + &y;
        let b = &x - &y.scale(&qi(2));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.add(&SparsePoly::constant(qi(1))).div_exact(&a).is_none());
    }

    #[test]
    fn display_is_readable() {
        let (x, y) = xy();
        let p = &x.pow(2).scale(&qi(2)) - &y;
        assert_eq!(p.to_string(), "2*x^2 - y");
        assert_eq!(SparsePoly::constant(q(0, 1)).to_string(), "0");
    }
}
