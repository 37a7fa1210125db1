//! Homogeneous symmetric forms in both coefficient conventions.
//!
//! Monomial coefficients s_a are stored; tensor components
//! S_{i₁…i_r} = s_a / multinomial(r; a) are computed on demand.

use crate::error::{Error, Result};
use crate::polyalg::{var_list, SparsePoly};
use crate::scalar::{f64_to_q, format_q, parse_q, q_to_f64, Scalar, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormShape {
    pub n: usize,
    pub r: usize,
}

/// Exponent vector a with Σa_i = r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(a: &[u32]) -> Self {
        MultiIndex(a.to_vec())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Occupation numbers of a list of 0-based variable indices.
    pub fn from_slots(n: usize, idx: &[usize]) -> Self {
        let mut a = vec![0u32; n];
        for &i in idx {
            a[i] += 1;
        }
        MultiIndex(a)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&k| k < 10) {
            for k in &self.0 {
                write!(f, "{k}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
            write!(f, "{}", parts.join("_"))
        }
    }
}

impl FormShape {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::Invalid(format!("shape n={n} r={r}: need n >= 1 and r >= 1")));
        }
        Ok(FormShape { n, r })
    }

    /// Number of monomials, binomial(n + r − 1, r).
    pub fn len(&self) -> usize {
        binomial((self.n + self.r - 1) as u64, self.r as u64) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All multi-indices in canonical (descending lexicographic) order.
    pub fn multi_indices(&self) -> Vec<MultiIndex> {
        let mut out = Vec::with_capacity(self.len());
        let mut cur = vec![0u32; self.n];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for k in (0..=left).rev() {
                cur[pos] = k;
                rec(pos + 1, left - k, cur, out);
            }
        }
        rec(0, self.r as u32, &mut cur, &mut out);
        out
    }

    pub fn index_of(&self, a: &MultiIndex) -> Option<usize> {
        if a.0.len() != self.n || a.degree() as usize != self.r {
            return None;
        }
        // rank in descending lexicographic order
        let mut idx = 0usize;
        let mut left = self.r as u32;
        for pos in 0..self.n - 1 {
            let rem_vars = self.n - pos - 1;
            for k in (a.0[pos] + 1..=left).rev() {
                let rest = left - k;
                idx += binomial((rest as usize + rem_vars - 1) as u64, (rem_vars - 1) as u64) as usize;
            }
            left -= a.0[pos];
        }
        Some(idx)
    }

    pub fn var_names(&self) -> Vec<String> {
        self.multi_indices().iter().map(|a| format!("s{a}")).collect()
    }

    /// Variable list of the s-coordinates, shared between polynomials of this shape.
    pub fn s_vars(&self) -> Arc<Vec<String>> {
        use std::sync::Mutex;
        static CACHE: Mutex<Vec<(FormShape, Arc<Vec<String>>)>> = Mutex::new(Vec::new());
        let mut cache = CACHE.lock().unwrap();
        if let Some((_, v)) = cache.iter().find(|(s, _)| s == self) {
            return v.clone();
        }
        let v = var_list(&self.var_names());
        cache.push((*self, v.clone()));
        v
    }
}

impl fmt::Display for FormShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.n, self.r)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// r! / Π a_i!
pub fn multinomial(a: &MultiIndex) -> BigInt {
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let r = a.degree();
    a.0.iter().fold(fact(r), |acc, &k| acc / fact(k))
}

/// Number of functionally independent SL(n) invariants of an r-form.
pub fn invariant_count(n: usize, r: usize) -> Result<u64> {
    if n < 2 || r < 2 {
        return Err(Error::Invalid(format!("invariant_count needs n >= 2 and r >= 2, got ({n},{r})")));
    }
    if r == 2 {
        return Ok(1);
    }
    let dim = binomial((n + r - 1) as u64, r as u64);
    Ok(dim + 1 - (n * n) as u64)
}

#[derive(Clone, PartialEq)]
pub struct SymmetricForm<T> {
    shape: FormShape,
    coeffs: Vec<T>,
}

impl<T: Scalar> SymmetricForm<T> {
    pub fn zero(shape: FormShape) -> Self {
        SymmetricForm { shape, coeffs: vec![T::zero(); shape.len()] }
    }

    pub fn from_coeffs(shape: FormShape, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != shape.len() {
            return Err(Error::Shape(format!(
                "{} coefficients supplied for shape {} with {} monomials",
                coeffs.len(),
                shape,
                shape.len()
            )));
        }
        Ok(SymmetricForm { shape, coeffs })
    }

    /// Form with the listed monomial coefficients; everything else is zero.
    pub fn make(shape: FormShape, entries: Vec<(MultiIndex, T)>) -> Result<Self> {
        let mut f = Self::zero(shape);
        let mut seen = vec![false; shape.len()];
        for (a, c) in entries {
            if a.0.len() != shape.n {
                return Err(Error::Invalid(format!("multi-index {a} has {} entries, expected {}", a.0.len(), shape.n)));
            }
            if a.degree() as usize != shape.r {
                return Err(Error::Invalid(format!("multi-index {a} sums to {} instead of {}", a.degree(), shape.r)));
            }
            let i = shape.index_of(&a).expect("validated");
            if seen[i] {
                return Err(Error::Invalid(format!("duplicate multi-index {a}")));
            }
            seen[i] = true;
            f.coeffs[i] = c;
        }
        Ok(f)
    }

    pub fn shape(&self) -> FormShape {
        self.shape
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, a: &MultiIndex) -> Option<&T> {
        self.shape.index_of(a).map(|i| &self.coeffs[i])
    }

    pub fn set_coeff(&mut self, a: &MultiIndex, v: T) -> Result<()> {
        let i = self
            .shape
            .index_of(a)
            .ok_or_else(|| Error::Invalid(format!("multi-index {a} does not fit shape {}", self.shape)))?;
        self.coeffs[i] = v;
        Ok(())
    }

    /// Tensor component S_{i₁…i_r} for 1-based variable indices.
    pub fn tensor_component(&self, idx: &[usize]) -> Result<T> {
        if idx.len() != self.shape.r {
            return Err(Error::Invalid(format!("expected {} indices, got {}", self.shape.r, idx.len())));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > self.shape.n) {
            return Err(Error::Invalid(format!("index {bad} outside 1..={}", self.shape.n)));
        }
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        Ok(self.tensor_component0(&zero_based))
    }

    pub(crate) fn tensor_component0(&self, idx: &[usize]) -> T {
        let a = MultiIndex::from_slots(self.shape.n, idx);
        let i = self.shape.index_of(&a).expect("valid slots");
        let m = Q::new(BigInt::one(), multinomial(&a));
        self.coeffs[i].times(&T::from_q(&m))
    }

    pub fn evaluate(&self, x: &[T]) -> Result<T> {
        if x.len() != self.shape.n {
            return Err(Error::Shape(format!("point of length {} for n = {}", x.len(), self.shape.n)));
        }
        let mut acc = T::zero();
        for (a, c) in self.shape.multi_indices().iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(&a.0) {
                t = t.times(&xi.pow_u(k));
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    pub fn scale(&self, mu: &T) -> Self {
        SymmetricForm { shape: self.shape, coeffs: self.coeffs.iter().map(|c| c.times(mu)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::Shape(format!("{} vs {}", self.shape, other.shape)));
        }
        Ok(SymmetricForm {
            shape: self.shape,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    fn to_hom(&self) -> HomPoly<T> {
        let mut h = HomPoly::new();
        for (a, c) in self.shape.multi_indices().into_iter().zip(&self.coeffs) {
            if !c.is_zero() {
                h.insert(a.0, c.clone());
            }
        }
        h
    }

    fn from_hom(shape: FormShape, h: &HomPoly<T>) -> Self {
        let mut f = Self::zero(shape);
        for (e, c) in h {
            let i = shape.index_of(&MultiIndex(e.clone())).expect("degree preserved");
            f.coeffs[i] = c.clone();
        }
        f
    }

    /// Pullback by a linear substitution: the result g satisfies g(x) = f(Ux).
    pub fn gl_transform(&self, u: &[Vec<T>]) -> Result<Self> {
        let n = self.shape.n;
        if u.len() != n || u.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("matrix must be {n}x{n}")));
        }
        let lin: Vec<HomPoly<T>> = (0..n)
            .map(|i| {
                let mut h = HomPoly::new();
                for (j, c) in u[i].iter().enumerate() {
                    if !c.is_zero() {
                        let mut e = vec![0u32; n];
                        e[j] = 1;
                        h.insert(e, c.clone());
                    }
                }
                h
            })
            .collect();
        let mut powers: Vec<Vec<HomPoly<T>>> = lin
            .iter()
            .map(|_| {
                let mut one = HomPoly::new();
                one.insert(vec![0u32; n], T::one());
                vec![one]
            })
            .collect();
        for i in 0..n {
            for k in 1..=self.shape.r {
                let next = hom_mul(&powers[i][k - 1], &lin[i]);
                powers[i].push(next);
            }
        }
        let mut out: HomPoly<T> = HomPoly::new();
        for (a, c) in self.shape.multi_indices().iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut term = HomPoly::new();
            term.insert(vec![0u32; n], c.clone());
            for (i, &k) in a.0.iter().enumerate() {
                if k > 0 {
                    term = hom_mul(&term, &powers[i][k as usize]);
                }
            }
            hom_add_into(&mut out, &term);
        }
        Ok(Self::from_hom(self.shape, &out))
    }

    /// The form f^k of degree k·r.
    /// Product of two forms in the same variables.
    pub fn mul_form(&self, other: &Self) -> Result<Self> {
        if self.shape.n != other.shape.n {
            return Err(Error::Shape(format!("cannot multiply {} by {}", self.shape, other.shape)));
        }
        let shape = FormShape::new(self.shape.n, self.shape.r + other.shape.r)?;
        Ok(Self::from_hom(shape, &hom_mul(&self.to_hom(), &other.to_hom())))
    }

    pub fn pow_form(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("pow_form needs k >= 1".into()));
        }
        let base = self.to_hom();
        let mut acc = base.clone();
        for _ in 1..k {
            acc = hom_mul(&acc, &base);
        }
        let shape = FormShape::new(self.shape.n, self.shape.r * k)?;
        Ok(Self::from_hom(shape, &acc))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SymmetricForm<U> {
        SymmetricForm { shape: self.shape, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl SymmetricForm<Q> {
    pub fn to_f64(&self) -> SymmetricForm<f64> {
        self.map(q_to_f64)
    }

    /// Form whose coefficients are the s-coordinate variables themselves.
    pub fn symbolic(shape: FormShape) -> SymmetricForm<SparsePoly> {
        let vars = shape.s_vars();
        let coeffs = (0..shape.len()).map(|i| SparsePoly::variable(&vars, i)).collect();
        SymmetricForm { shape, coeffs }
    }
}

impl SymmetricForm<f64> {
    /// Exact rational copy of a floating form.
    pub fn to_q(&self) -> Result<SymmetricForm<Q>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| f64_to_q(c).ok_or_else(|| Error::Invalid(format!("non-finite coefficient {c}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymmetricForm { shape: self.shape, coeffs })
    }

    /// Largest absolute monomial coefficient.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

impl<T: Scalar + fmt::Debug> fmt::Debug for SymmetricForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricForm({}; ", self.shape)?;
        let parts: Vec<String> = self
            .shape
            .multi_indices()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| format!("s{a}={c:?}"))
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

type HomPoly<T> = BTreeMap<Vec<u32>, T>;

fn hom_mul<T: Scalar>(a: &HomPoly<T>, b: &HomPoly<T>) -> HomPoly<T> {
    let mut out: HomPoly<T> = HomPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca.times(cb);
            let slot = out.entry(e).or_insert_with(T::zero);
            *slot = slot.plus(&c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn hom_add_into<T: Scalar>(acc: &mut HomPoly<T>, b: &HomPoly<T>) {
    for (e, c) in b {
        let slot = acc.entry(e.clone()).or_insert_with(T::zero);
        *slot = slot.plus(c);
    }
    acc.retain(|_, c| !c.is_zero());
}

/// Scalars that can be drawn at random for test suites and generators.
pub trait RandomScalar: Scalar {
    fn sample(rng: &mut ChaCha8Rng) -> Self;
}

impl RandomScalar for f64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        rng.gen_range(-1.0..1.0)
    }
}

impl RandomScalar for Q {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        let p: i64 = rng.gen_range(-9..=9);
        let q: i64 = rng.gen_range(1..=5);
        crate::scalar::q(p, q)
    }
}

pub fn random_form<T: RandomScalar>(shape: FormShape, seed: u64) -> SymmetricForm<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..shape.len()).map(|_| T::sample(&mut rng)).collect();
    SymmetricForm { shape, coeffs }
}

/// Random unimodular rational matrix built from elementary shears and swaps.
pub fn random_unimodular(n: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    if n < 2 {
        return m;
    }
    for _ in 0..4 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = crate::scalar::q(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        // row_i += k * row_j
        let rj = m[j].clone();
        for (c, v) in m[i].iter_mut().zip(rj) {
            *c += &k * v;
        }
    }
    m
}

pub fn matmul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(T::zero(), |acc, k| acc.plus(&a[i][k].times(&b[k][j]))))
                .collect()
        })
        .collect()
}

/// Random positive-definite binary quartic by rejection sampling.
pub fn random_posdef_quartic(seed: u64) -> Result<SymmetricForm<f64>> {
    let shape = FormShape { n: 2, r: 4 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let c = vec![
            rng.gen_range(0.3..2.0),
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..3.0),
            rng.gen_range(-1.5..1.5),
            rng.gen_range(0.3..2.0),
        ];
        let f = SymmetricForm { shape, coeffs: c };
        if is_positive_definite(&f.to_q()?)? {
            return Ok(f);
        }
    }
    Err(Error::Invalid("no positive-definite quartic found after 1000 attempts".into()))
}

/// True iff the binary quartic is positive away from the origin.
pub fn is_positive_definite(f: &SymmetricForm<Q>) -> Result<bool> {
    if f.shape != (FormShape { n: 2, r: 4 }) {
        return Err(Error::Shape(format!("positive definiteness is implemented for 2|4, got {}", f.shape)));
    }
    let s40 = &f.coeffs[0];
    let s04 = &f.coeffs[4];
    if !s40.is_positive() || !s04.is_positive() {
        return Ok(false);
    }
    // S(1, z) = s40 + s31 z + s22 z² + s13 z³ + s04 z⁴
    let p: Vec<Q> = (0..5).map(|k| f.coeffs[k].clone()).collect();
    Ok(real_root_count(&p) == 0)
}

fn trim(p: &mut Vec<Q>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let k = &r[dr] / &lb;
        for i in 0..=db {
            let v = &r[dr - db + i] - &k * &b[i];
            r[dr - db + i] = v;
        }
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    trim(&mut r);
    r
}

/// Number of distinct real roots by a Sturm sequence (coefficients in ascending order).
pub fn real_root_count(p: &[Q]) -> usize {
    let mut p0 = p.to_vec();
    trim(&mut p0);
    if p0.len() <= 1 {
        return 0;
    }
    let p1: Vec<Q> = (1..p0.len()).map(|k| &p0[k] * Q::from_integer(BigInt::from(k))).collect();
    let mut seq = vec![p0, p1];
    loop {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
        if seq.last().unwrap().len() == 1 {
            break;
        }
    }
    let changes = |signs: Vec<i32>| {
        let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let sgn = |c: &Q| if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
    let at_pos: Vec<i32> = seq.iter().map(|p| sgn(p.last().unwrap())).collect();
    let at_neg: Vec<i32> = seq
        .iter()
        .map(|p| {
            let s = sgn(p.last().unwrap());
            if (p.len() - 1) % 2 == 1 { -s } else { s }
        })
        .collect();
    changes(at_neg) - changes(at_pos)
}

/// Parses the text form format:
///
/// ```text
/// form n=2 r=4
/// 4 0 = 1
/// 0 4 = 1/2   # comment
/// ```
pub fn parse_form(text: &str) -> Result<SymmetricForm<Q>> {
    let mut shape: Option<FormShape> = None;
    let mut entries = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: ln + 1, msg };
        if shape.is_none() {
            let mut it = line.split_whitespace();
            if it.next() != Some("form") {
                return Err(err("expected header `form n=<n> r=<r>`".into()));
            }
            let (mut n, mut r) = (None, None);
            for tok in it {
                if let Some(v) = tok.strip_prefix("n=") {
                    n = v.parse::<usize>().ok();
                } else if let Some(v) = tok.strip_prefix("r=") {
                    r = v.parse::<usize>().ok();
                } else {
                    return Err(err(format!("unexpected token `{tok}` in header")));
                }
            }
            match (n, r) {
                (Some(n), Some(r)) => shape = Some(FormShape::new(n, r).map_err(|e| err(e.to_string()))?),
                _ => return Err(err("header needs n=<n> and r=<r>".into())),
            }
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| err("expected `<a1> .. <an> = <coeff>`".into()))?;
        let a: Vec<u32> = lhs
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(format!("bad multi-index `{}`", lhs.trim())))?;
        let c = parse_q(rhs).ok_or_else(|| err(format!("bad coefficient `{}`", rhs.trim())))?;
        entries.push((ln + 1, MultiIndex(a), c));
    }
    let shape = shape.ok_or(Error::Parse { line: 0, msg: "empty form file".into() })?;
    let lines: Vec<usize> = entries.iter().map(|e| e.0).collect();
    SymmetricForm::make(shape, entries.into_iter().map(|(_, a, c)| (a, c)).collect()).map_err(|e| {
        let msg = e.to_string();
        let line = lines.first().copied().unwrap_or(0);
        Error::Parse { line, msg }
    })
}

pub fn format_form(f: &SymmetricForm<Q>) -> String {
    let mut s = format!("form n={} r={}\n", f.shape.n, f.shape.r);
    for (a, c) in f.shape.multi_indices().iter().zip(&f.coeffs) {
        if c.is_zero() {
            continue;
        }
        let parts: Vec<String> = a.0.iter().map(|k| k.to_string()).collect();
        s.push_str(&format!("{} = {}\n", parts.join(" "), format_q(c)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn sh(n: usize, r: usize) -> FormShape {
        FormShape::new(n, r).unwrap()
    }

    #[test]
    fn canonical_order_and_ranks() {
        let s = sh(3, 3);
        let names = s.var_names();
        assert_eq!(names[..4], ["s300", "s210", "s201", "s120"]);
        assert_eq!(names.len(), 10);
        for (i, a) in s.multi_indices().iter().enumerate() {
            assert_eq!(s.index_of(a), Some(i));
        }
        assert_eq!(sh(2, 5).var_names(), ["s50", "s41", "s32", "s23", "s14", "s05"]);
    }

    #[test]
    fn make_form_examples() {
        let f = SymmetricForm::make(sh(2, 4), vec![(MultiIndex::new(&[4, 0]), qi(1)), (MultiIndex::new(&[0, 4]), qi(1))])
            .unwrap();
        assert_eq!(f.evaluate(&[qi(1), qi(1)]).unwrap(), qi(2));
        let bad = SymmetricForm::make(sh(2, 3), vec![(MultiIndex::new(&[4, 0]), qi(1))]);
        assert!(bad.unwrap_err().to_string().contains("40"));
        let dup = SymmetricForm::make(sh(2, 3), vec![(MultiIndex::new(&[3, 0]), qi(1)), (MultiIndex::new(&[3, 0]), qi(2))]);
        assert!(dup.unwrap_err().to_string().contains("duplicate"));
    }

    #[test]
    fn tensor_components() {
        let f = SymmetricForm::make(sh(2, 4), vec![(MultiIndex::new(&[3, 1]), qi(4)), (MultiIndex::new(&[4, 0]), qi(7))])
            .unwrap();
        assert_eq!(f.tensor_component(&[1, 1, 1, 2]).unwrap(), qi(1));
        assert_eq!(f.tensor_component(&[2, 1, 1, 1]).unwrap(), qi(1));
        assert_eq!(f.tensor_component(&[1, 1, 1, 1]).unwrap(), qi(7));
        assert!(f.tensor_component(&[1, 1, 1, 3]).is_err());
        let g = SymmetricForm::make(sh(3, 3), vec![(MultiIndex::new(&[1, 1, 1]), qi(6))]).unwrap();
        assert_eq!(g.tensor_component(&[1, 2, 3]).unwrap(), qi(1));
        assert_eq!(g.tensor_component(&[3, 1, 2]).unwrap(), qi(1));
    }

    #[test]
    fn xyz_at_ones() {
        let g = SymmetricForm::make(sh(3, 3), vec![(MultiIndex::new(&[1, 1, 1]), qi(1))]).unwrap();
        assert_eq!(g.evaluate(&[qi(1), qi(1), qi(1)]).unwrap(), qi(1));
    }

    #[test]
    fn transforms() {
        let x3 = SymmetricForm::make(sh(2, 3), vec![(MultiIndex::new(&[3, 0]), qi(1))]).unwrap();
        let swap = vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]];
        let y3 = x3.gl_transform(&swap).unwrap();
        assert_eq!(y3.coeff(&MultiIndex::new(&[0, 3])), Some(&qi(1)));
        assert_eq!(y3.coeff(&MultiIndex::new(&[3, 0])), Some(&qi(0)));
        let x2y = SymmetricForm::make(sh(2, 3), vec![(MultiIndex::new(&[2, 1]), qi(1))]).unwrap();
        let d = vec![vec![qi(2), qi(0)], vec![qi(0), q(1, 2)]];
        assert_eq!(x2y.gl_transform(&d).unwrap(), x2y.scale(&qi(2)));
        let id = vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]];
        assert_eq!(x2y.gl_transform(&id).unwrap(), x2y);
        assert!(x2y.gl_transform(&[vec![qi(1)]]).is_err());
    }

    #[test]
    fn square_of_quadratic() {
        let (a, b, c) = (qi(1), qi(0), qi(1));
        let quad = SymmetricForm::make(
            sh(2, 2),
            vec![(MultiIndex::new(&[2, 0]), a), (MultiIndex::new(&[1, 1]), b), (MultiIndex::new(&[0, 2]), c)],
        )
        .unwrap();
        let sq = quad.pow_form(2).unwrap();
        assert_eq!(sq.coeffs(), &[qi(1), qi(0), qi(2), qi(0), qi(1)]);
        assert_eq!(quad.pow_form(1).unwrap(), quad);
    }

    #[test]
    fn tensor_coefficients_of_square() {
        let v = crate::polyalg::var_list(&["a", "b", "c"]);
        let (a, b, c) = (
            SparsePoly::var(&v, "a").unwrap(),
            SparsePoly::var(&v, "b").unwrap(),
            SparsePoly::var(&v, "c").unwrap(),
        );
        let quad = SymmetricForm::from_coeffs(sh(2, 2), vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let sq = quad.pow_form(2).unwrap();
        assert_eq!(sq.tensor_component(&[1, 1, 1, 1]).unwrap(), a.pow(2));
        assert_eq!(sq.tensor_component(&[1, 1, 1, 2]).unwrap(), a.mul(&b).scale(&q(1, 2)));
        assert_eq!(
            sq.tensor_component(&[1, 1, 2, 2]).unwrap(),
            &a.mul(&c).scale(&q(1, 3)) + &b.pow(2).scale(&q(1, 6))
        );
        assert_eq!(sq.tensor_component(&[1, 2, 2, 2]).unwrap(), b.mul(&c).scale(&q(1, 2)));
        assert_eq!(sq.tensor_component(&[2, 2, 2, 2]).unwrap(), c.pow(2));
    }

    #[test]
    fn invariant_counts() {
        assert_eq!(invariant_count(2, 5).unwrap(), 3);
        assert_eq!(invariant_count(7, 6).unwrap(), 876);
        for n in 2..8 {
            assert_eq!(invariant_count(n, 2).unwrap(), 1);
        }
        assert!(invariant_count(1, 3).is_err());
    }

    #[test]
    fn posdef_checks() {
        let mk = |c: [i64; 5]| SymmetricForm::from_coeffs(sh(2, 4), c.iter().map(|&v| qi(v)).collect()).unwrap();
        assert!(is_positive_definite(&mk([1, 0, 0, 0, 1])).unwrap());
        assert!(!is_positive_definite(&mk([1, 0, 1, 0, 0])).unwrap());
        assert!(!is_positive_definite(&mk([1, 0, 0, 0, -1])).unwrap());
        assert!(!is_positive_definite(&mk([1, 0, -3, 0, 1])).unwrap());
        assert!(is_positive_definite(&mk([1, 0, 2, 0, 1])).unwrap());
        let f = random_posdef_quartic(3).unwrap();
        assert!(is_positive_definite(&f.to_q().unwrap()).unwrap());
        assert_eq!(random_posdef_quartic(3).unwrap(), f);
    }

    #[test]
    fn sturm_counts_roots() {
        // (z-1)(z-2)(z+3) = z³ - 7z + 6
        assert_eq!(real_root_count(&[qi(6), qi(-7), qi(0), qi(1)]), 3);
        assert_eq!(real_root_count(&[qi(1), qi(0), qi(1)]), 0);
        assert_eq!(real_root_count(&[qi(1), qi(-2), qi(1)]), 1);
    }

    #[test]
    fn form_file_round_trip() {
        let text = "# quartic\nform n=2 r=4\n4 0 = 1\n2 2 = 0.5  # half\n0 4 = -3/4\n";
        let f = parse_form(text).unwrap();
        assert_eq!(f.coeffs(), &[qi(1), qi(0), q(1, 2), qi(0), q(-3, 4)]);
        assert_eq!(parse_form(&format_form(&f)).unwrap(), f);
        assert!(matches!(parse_form("form n=2 r=3\n4 0 = 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("nonsense"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_form("form n=2 r=3\n3 0 = x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn random_forms_are_deterministic() {
        let a: SymmetricForm<Q> = random_form(sh(3, 3), 11);
        let b: SymmetricForm<Q> = random_form(sh(3, 3), 11);
        assert_eq!(a, b);
        let c: SymmetricForm<f64> = random_form(sh(2, 5), 11);
        assert_eq!(c, random_form(sh(2, 5), 11));
    }
}
