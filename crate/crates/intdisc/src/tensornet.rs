//! ε-tensor networks: diagrams of form, derivative and ε vertices with a
//! greedy contraction planner and a hash-join contraction engine.

use crate::error::{Error, Result};
use crate::forms::{FormShape, SymmetricForm};
use crate::polyalg::SparsePoly;
use crate::scalar::{q, qi, Scalar, Q};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Form,
    /// ∂/∂S vertex; bound to a separate tensor at contraction time.
    Deriv,
    Eps,
    EpsStar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub labels: Vec<String>,
}

/// A closed or open tensor network. Labels shared by two slots are summed;
/// labels occurring once are free.
#[derive(Clone, Debug)]
pub struct ContractionDiagram {
    name: String,
    n: usize,
    r: usize,
    nodes: Vec<Node>,
    free: Vec<String>,
    normalization: Q,
}

pub type Slot = (usize, usize);

impl ContractionDiagram {
    pub fn new(name: &str, n: usize, r: usize, nodes: Vec<Node>, normalization: Q) -> Result<Self> {
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        let mut order: Vec<&str> = Vec::new();
        for (id, node) in nodes.iter().enumerate() {
            let want = match node.kind {
                NodeKind::Form | NodeKind::Deriv => r,
                NodeKind::Eps | NodeKind::EpsStar => n,
            };
            if node.labels.len() != want {
                return Err(Error::Invalid(format!(
                    "node {id} ({:?}) has valence {}, expected {want}",
                    node.kind,
                    node.labels.len()
                )));
            }
            for (k, l) in node.labels.iter().enumerate() {
                if node.labels[..k].contains(l) {
                    return Err(Error::Invalid(format!("label `{l}` repeated on node {id}")));
                }
                let c = count.entry(l.as_str()).or_insert(0);
                if *c == 0 {
                    order.push(l.as_str());
                }
                *c += 1;
            }
        }
        if let Some((l, _)) = count.iter().find(|(_, &c)| c > 2) {
            return Err(Error::Invalid(format!("label `{l}` used more than twice")));
        }
        let free = order.iter().filter(|l| count[*l] == 1).map(|l| l.to_string()).collect();
        Ok(ContractionDiagram { name: name.to_string(), n, r, nodes, free, normalization })
    }

    /// Parses `S(i1,i2) D(..) e(i1,j1) E(..)`: S form, D derivative, e ε, E ε*.
    pub fn parse(name: &str, n: usize, r: usize, expr: &str, normalization: Q) -> Result<Self> {
        let mut nodes = Vec::new();
        let mut rest = expr.trim();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::Invalid(format!("expected `(` in `{rest}`")))?;
            let close = rest.find(')').ok_or_else(|| Error::Invalid(format!("unclosed `(` in `{rest}`")))?;
            let kind = match rest[..open].trim() {
                "S" => NodeKind::Form,
                "D" => NodeKind::Deriv,
                "e" => NodeKind::Eps,
                "E" => NodeKind::EpsStar,
                other => return Err(Error::Invalid(format!("unknown vertex `{other}`"))),
            };
            let labels = rest[open + 1..close].split(',').map(|s| s.trim().to_string()).collect();
            nodes.push(Node { kind, labels });
            rest = rest[close + 1..].trim_start();
        }
        Self::new(name, n, r, nodes, normalization)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }
    pub fn free_labels(&self) -> &[String] {
        &self.free
    }
    /// Factor applied to the raw contraction.
    pub fn normalization(&self) -> &Q {
        &self.normalization
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|nd| nd.kind == kind).count()
    }

    /// Pairs of slots joined by a shared label.
    pub fn edges(&self) -> Vec<(Slot, Slot)> {
        let mut first: HashMap<&str, Slot> = HashMap::new();
        let mut out = Vec::new();
        for (i, nd) in self.nodes.iter().enumerate() {
            for (k, l) in nd.labels.iter().enumerate() {
                if let Some(&s) = first.get(l.as_str()) {
                    out.push((s, (i, k)));
                } else {
                    first.insert(l, (i, k));
                }
            }
        }
        out
    }

    pub fn free_slots(&self) -> Vec<Slot> {
        self.free
            .iter()
            .map(|l| {
                self.nodes
                    .iter()
                    .enumerate()
                    .find_map(|(i, nd)| nd.labels.iter().position(|x| x == l).map(|k| (i, k)))
                    .expect("free label present")
            })
            .collect()
    }

    /// Degree of the contraction in the form coefficients.
    pub fn degree(&self) -> usize {
        self.count(NodeKind::Form)
    }
}

fn form_block(letters: &str, r: usize) -> String {
    letters
        .chars()
        .map(|c| {
            let slots: Vec<String> = (1..=r).map(|k| format!("{c}{k}")).collect();
            format!("S({}) ", slots.join(","))
        })
        .collect()
}

pub const CATALOGUE: &[&str] = &["i4_23", "i2_24", "i3_24", "i4_25", "i4_33", "i6_33", "p_ab_25", "det2", "det3"];

/// Diagrams of the catalogue, scaled so that the contraction equals the
/// conventional expansion of each invariant.
pub fn builtin_diagram(name: &str) -> Result<ContractionDiagram> {
    let (n, r, expr, norm) = match name {
        "i4_23" => (
            2,
            3,
            form_block("ijkl", 3) + "e(i1,j1) e(i2,j2) e(k1,l1) e(k2,l2) e(i3,k3) e(j3,l3)",
            qi(-1),
        ),
        "i2_24" => (2, 4, form_block("ij", 4) + "e(i1,j1) e(i2,j2) e(i3,j3) e(i4,j4)", qi(1)),
        "i3_24" => (
            2,
            4,
            form_block("ijk", 4) + "e(i1,j1) e(i2,j2) e(i3,k1) e(i4,k2) e(j3,k3) e(j4,k4)",
            qi(1),
        ),
        "i4_25" => (
            2,
            5,
            form_block("ijkl", 5)
                + "e(i1,j1) e(i2,j2) e(i3,j3) e(i4,k4) e(i5,k5) e(j4,l4) e(j5,l5) e(k1,l1) e(k2,l2) e(k3,l3)",
            qi(-1),
        ),
        "i4_33" => (
            3,
            3,
            form_block("ijkl", 3) + "e(i1,j1,k1) e(i2,j2,l2) e(i3,k3,l3) e(l1,k2,j3)",
            q(-1, 4),
        ),
        "i6_33" => (
            3,
            3,
            form_block("ijklms", 3)
                + "e(i1,k1,l1) e(i2,j2,s2) e(j1,k2,m1) e(l2,m2,k3) e(m3,s3,j3) e(l3,i3,s1)",
            qi(-1),
        ),
        "p_ab_25" => (
            2,
            5,
            "S(a,i2,i3,i4,i5) ".to_string()
                + &form_block("jklm", 5)
                + "S(s1,s2,s3,s4,b) "
                + "e(i2,j2) e(i3,j3) e(i4,k4) e(i5,k5) e(k1,l1) e(k2,l2) e(j4,m4) e(j5,m5) \
                   e(m1,s1) e(m2,s2) e(l3,s3) e(l4,s4) e(j1,k3) e(l5,m3)",
            qi(-1),
        ),
        "det2" => (2, 2, form_block("ij", 2) + "e(i1,j1) e(i2,j2)", qi(1)),
        "det3" => (3, 2, form_block("ijk", 2) + "e(i1,j1,k1) e(i2,j2,k2)", qi(1)),
        other => return Err(Error::UnknownDiagram(other.to_string())),
    };
    ContractionDiagram::parse(name, n, r, &expr, norm)
}

/// One pairwise merge. Ids below the node count refer to diagram nodes;
/// merge k produces id `node_count + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanStep {
    pub left: usize,
    pub right: usize,
    pub result_rank: usize,
}

#[derive(Clone, Debug)]
pub struct ContractionPlan {
    pub node_count: usize,
    pub steps: Vec<PlanStep>,
}

impl ContractionPlan {
    pub fn max_rank(&self) -> usize {
        self.steps.iter().map(|s| s.result_rank).max().unwrap_or(0)
    }

    /// Upper bound on the entries of any intermediate tensor.
    pub fn max_entries(&self, n: usize) -> usize {
        n.pow(self.max_rank() as u32)
    }
}

impl fmt::Display for ContractionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            writeln!(f, "t{} = t{} * t{}  (rank {})", self.node_count + k, s.left, s.right, s.result_rank)?;
        }
        Ok(())
    }
}

/// Greedy ordering that always performs the merge with the smallest result rank.
pub fn plan_order(d: &ContractionDiagram) -> ContractionPlan {
    let mut live: Vec<(usize, Vec<&str>)> =
        d.nodes.iter().enumerate().map(|(i, nd)| (i, nd.labels.iter().map(|s| s.as_str()).collect())).collect();
    let mut next = d.nodes.len();
    let mut steps = Vec::new();
    while live.len() > 1 {
        let mut best: Option<(usize, usize, usize, bool)> = None;
        for x in 0..live.len() {
            for y in x + 1..live.len() {
                let shared = live[x].1.iter().filter(|l| live[y].1.contains(l)).count();
                let rank = live[x].1.len() + live[y].1.len() - 2 * shared;
                let connected = shared > 0;
                let better = match best {
                    None => true,
                    Some((_, _, br, bc)) => (connected && !bc) || (connected == bc && rank < br),
                };
                if better {
                    best = Some((x, y, rank, connected));
                }
            }
        }
        let (x, y, rank, _) = best.expect("at least two tensors");
        let (idy, ly) = live.remove(y);
        let (idx, lx) = live.remove(x);
        let mut labels: Vec<&str> = lx.iter().filter(|l| !ly.contains(l)).copied().collect();
        labels.extend(ly.iter().filter(|l| !lx.contains(l)));
        steps.push(PlanStep { left: idx, right: idy, result_rank: rank });
        live.push((next, labels));
        next += 1;
    }
    ContractionPlan { node_count: d.nodes.len(), steps }
}

/// Dense-over-support tensor with labelled axes.
#[derive(Clone, Debug)]
struct Work<T> {
    labels: Vec<usize>,
    entries: Vec<(Vec<u8>, T)>,
}

/// Result of a contraction: a scalar for closed diagrams, otherwise a
/// tensor over the free labels.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionResult<T> {
    pub labels: Vec<String>,
    pub n: usize,
    pub values: BTreeMap<Vec<u8>, T>,
}

impl<T: Scalar> ContractionResult<T> {
    pub fn scalar(&self) -> Option<T> {
        if !self.labels.is_empty() {
            return None;
        }
        Some(self.values.get(&Vec::new()).cloned().unwrap_or_else(T::zero))
    }

    /// Component at 1-based indices, one per free label.
    pub fn component(&self, idx: &[usize]) -> Result<T> {
        if idx.len() != self.labels.len() || idx.iter().any(|&i| i == 0 || i > self.n) {
            return Err(Error::Invalid(format!("bad component index {idx:?}")));
        }
        let key: Vec<u8> = idx.iter().map(|&i| (i - 1) as u8).collect();
        Ok(self.values.get(&key).cloned().unwrap_or_else(T::zero))
    }
}

fn eps_entries<T: Scalar>(n: usize) -> Vec<(Vec<u8>, T)> {
    let mut out = Vec::new();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    heap_permutations(&mut perm, n, &mut |p| {
        let sign = permutation_sign(p);
        let v = if sign > 0 { T::one() } else { T::one().negate() };
        out.push((p.to_vec(), v));
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn heap_permutations(a: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// Sign of a permutation given as a sequence, 0 if an entry repeats.
pub fn permutation_sign(p: &[u8]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] == p[j] {
                return 0;
            }
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn all_tuples(n: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n as u8).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

fn tensor_entries<T: Scalar>(f: &SymmetricForm<T>) -> Vec<(Vec<u8>, T)> {
    let shape = f.shape();
    all_tuples(shape.n, shape.r)
        .into_iter()
        .filter_map(|t| {
            let idx: Vec<usize> = t.iter().map(|&i| i as usize).collect();
            let v = f.tensor_component0(&idx);
            (!v.is_zero()).then_some((t, v))
        })
        .collect()
}

fn check_binding<T: Scalar>(d: &ContractionDiagram, f: &SymmetricForm<T>, what: &str) -> Result<()> {
    let want = FormShape { n: d.n, r: d.r };
    if f.shape() != want {
        return Err(Error::Shape(format!("diagram `{}` needs a {want} {what}, got {}", d.name, f.shape())));
    }
    Ok(())
}

fn merge<T: Scalar>(a: &Work<T>, b: &Work<T>) -> Work<T> {
    let shared: Vec<(usize, usize)> = a
        .labels
        .iter()
        .enumerate()
        .filter_map(|(i, l)| b.labels.iter().position(|m| m == l).map(|j| (i, j)))
        .collect();
    let keep_a: Vec<usize> = (0..a.labels.len()).filter(|i| !shared.iter().any(|s| s.0 == *i)).collect();
    let keep_b: Vec<usize> = (0..b.labels.len()).filter(|j| !shared.iter().any(|s| s.1 == *j)).collect();
    let mut labels: Vec<usize> = keep_a.iter().map(|&i| a.labels[i]).collect();
    labels.extend(keep_b.iter().map(|&j| b.labels[j]));

    let mut index: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for (k, (t, _)) in b.entries.iter().enumerate() {
        let key: Vec<u8> = shared.iter().map(|s| t[s.1]).collect();
        index.entry(key).or_default().push(k);
    }
    let mut acc: HashMap<Vec<u8>, T> = HashMap::new();
    let mut order: Vec<Vec<u8>> = Vec::new();
    for (ta, va) in &a.entries {
        let key: Vec<u8> = shared.iter().map(|s| ta[s.0]).collect();
        let Some(hits) = index.get(&key) else { continue };
        for &k in hits {
            let (tb, vb) = &b.entries[k];
            let mut out: Vec<u8> = keep_a.iter().map(|&i| ta[i]).collect();
            out.extend(keep_b.iter().map(|&j| tb[j]));
            let prod = va.times(vb);
            match acc.get_mut(&out) {
                Some(slot) => slot.accumulate(&prod),
                None => {
                    order.push(out.clone());
                    acc.insert(out, prod);
                }
            }
        }
    }
    let entries = order
        .into_iter()
        .filter_map(|k| {
            let v = acc.remove(&k).expect("present");
            (!v.is_zero()).then_some((k, v))
        })
        .collect();
    Work { labels, entries }
}

fn label_ids(d: &ContractionDiagram) -> (Vec<String>, Vec<Vec<usize>>) {
    let mut names: Vec<String> = Vec::new();
    let ids = d
        .nodes
        .iter()
        .map(|nd| {
            nd.labels
                .iter()
                .map(|l| match names.iter().position(|x| x == l) {
                    Some(i) => i,
                    None => {
                        names.push(l.clone());
                        names.len() - 1
                    }
                })
                .collect()
        })
        .collect();
    (names, ids)
}

fn finish<T: Scalar>(d: &ContractionDiagram, names: &[String], w: Work<T>) -> ContractionResult<T> {
    let norm = T::from_q(&d.normalization);
    let perm: Vec<usize> = d
        .free
        .iter()
        .map(|l| {
            let id = names.iter().position(|x| x == l).expect("label");
            w.labels.iter().position(|&x| x == id).expect("free label survives")
        })
        .collect();
    let mut values = BTreeMap::new();
    for (t, v) in w.entries {
        let key: Vec<u8> = perm.iter().map(|&p| t[p]).collect();
        let v = v.times(&norm);
        if !v.is_zero() {
            values.insert(key, v);
        }
    }
    ContractionResult { labels: d.free.clone(), n: d.n, values }
}

/// Contracts with form vertices bound to `f` and derivative vertices bound to `deriv`.
pub fn contract_bound<T: Scalar>(
    d: &ContractionDiagram,
    f: &SymmetricForm<T>,
    deriv: Option<&SymmetricForm<T>>,
) -> Result<ContractionResult<T>> {
    check_binding(d, f, "form")?;
    if let Some(g) = deriv {
        check_binding(d, g, "derivative binding")?;
    }
    let plan = plan_order(d);
    let (names, ids) = label_ids(d);
    let form_t = tensor_entries(f);
    let deriv_t = deriv.map(tensor_entries);
    let eps_t = eps_entries::<T>(d.n);
    let mut pool: Vec<Option<Work<T>>> = Vec::new();
    for (nd, labels) in d.nodes.iter().zip(ids) {
        let entries = match nd.kind {
            NodeKind::Form => form_t.clone(),
            NodeKind::Deriv => deriv_t
                .clone()
                .ok_or_else(|| Error::Invalid(format!("diagram `{}` has derivative vertices but no binding", d.name)))?,
            NodeKind::Eps | NodeKind::EpsStar => eps_t.clone(),
        };
        pool.push(Some(Work { labels, entries }));
    }
    for s in &plan.steps {
        let a = pool[s.left].take().expect("unused operand");
        let b = pool[s.right].take().expect("unused operand");
        pool.push(Some(merge(&a, &b)));
    }
    let last = pool.into_iter().flatten().next().expect("diagram has nodes");
    Ok(finish(d, &names, last))
}

pub fn contract_numeric<T: Scalar>(d: &ContractionDiagram, f: &SymmetricForm<T>) -> Result<ContractionResult<T>> {
    contract_bound(d, f, None)
}

/// Exact polynomial in the s-coordinates of the diagram's shape.
pub fn contract_symbolic(d: &ContractionDiagram) -> Result<ContractionResult<SparsePoly>> {
    let shape = FormShape::new(d.n, d.r)?;
    let f = SymmetricForm::<Q>::symbolic(shape);
    let mut res = contract_numeric(d, &f)?;
    let vars = shape.s_vars();
    for v in res.values.values_mut() {
        *v = v.with_vars(&vars)?;
    }
    Ok(res)
}

/// Brute-force summation over every label assignment.
pub fn contract_naive<T: Scalar>(d: &ContractionDiagram, f: &SymmetricForm<T>) -> Result<ContractionResult<T>> {
    check_binding(d, f, "form")?;
    if d.count(NodeKind::Deriv) > 0 {
        return Err(Error::Unsupported("naive contraction of derivative vertices".into()));
    }
    let (names, ids) = label_ids(d);
    let free_ids: Vec<usize> = d.free.iter().map(|l| names.iter().position(|x| x == l).unwrap()).collect();
    let mut acc: BTreeMap<Vec<u8>, T> = BTreeMap::new();
    let n = d.n;
    let total = n.pow(names.len() as u32);
    let mut assign = vec![0u8; names.len()];
    for code in 0..total {
        let mut c = code;
        for slot in assign.iter_mut() {
            *slot = (c % n) as u8;
            c /= n;
        }
        let mut sign = 1;
        for (nd, lab) in d.nodes.iter().zip(&ids) {
            if matches!(nd.kind, NodeKind::Eps | NodeKind::EpsStar) {
                let p: Vec<u8> = lab.iter().map(|&l| assign[l]).collect();
                sign *= permutation_sign(&p);
                if sign == 0 {
                    break;
                }
            }
        }
        if sign == 0 {
            continue;
        }
        let mut term = if sign > 0 { T::one() } else { T::one().negate() };
        for (nd, lab) in d.nodes.iter().zip(&ids) {
            if nd.kind == NodeKind::Form {
                let idx: Vec<usize> = lab.iter().map(|&l| assign[l] as usize).collect();
                term = term.times(&f.tensor_component0(&idx));
                if term.is_zero() {
                    break;
                }
            }
        }
        if term.is_zero() {
            continue;
        }
        let key: Vec<u8> = free_ids.iter().map(|&l| assign[l]).collect();
        acc.entry(key).or_insert_with(T::zero).accumulate(&term);
    }
    let norm = T::from_q(&d.normalization);
    let values = acc
        .into_iter()
        .map(|(k, v)| (k, v.times(&norm)))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    Ok(ContractionResult { labels: d.free.clone(), n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{random_form, MultiIndex};

    fn sh(n: usize, r: usize) -> FormShape {
        FormShape::new(n, r).unwrap()
    }

    #[test]
    fn catalogue_node_counts() {
        let d = builtin_diagram("i4_23").unwrap();
        assert_eq!((d.count(NodeKind::Form), d.count(NodeKind::Eps)), (4, 6));
        assert!(d.free_labels().is_empty());
        let d = builtin_diagram("i6_33").unwrap();
        assert_eq!((d.count(NodeKind::Form), d.count(NodeKind::Eps)), (6, 6));
        let d = builtin_diagram("p_ab_25").unwrap();
        assert_eq!((d.count(NodeKind::Form), d.count(NodeKind::Eps)), (6, 14));
        assert_eq!(d.free_labels(), ["a", "b"]);
        assert_eq!(d.free_slots(), vec![(0, 0), (5, 4)]);
        assert!(matches!(builtin_diagram("i9_99"), Err(Error::UnknownDiagram(_))));
        for name in CATALOGUE {
            let d = builtin_diagram(name).unwrap();
            let slots: usize = d.nodes().iter().map(|nd| nd.labels.len()).sum();
            assert_eq!(2 * d.edges().len() + d.free_labels().len(), slots);
        }
    }

    #[test]
    fn i4_23_on_sum_of_cubes() {
        let f = SymmetricForm::make(sh(2, 3), vec![(MultiIndex::new(&[3, 0]), qi(1)), (MultiIndex::new(&[0, 3]), qi(1))])
            .unwrap();
        let d = builtin_diagram("i4_23").unwrap();
        assert_eq!(contract_numeric(&d, &f).unwrap().scalar(), Some(qi(2)));
    }

    #[test]
    fn antisymmetry_kills_equal_vectors() {
        let d = ContractionDiagram::parse("vv", 2, 1, "S(i) S(j) e(i,j)", qi(1)).unwrap();
        let v = SymmetricForm::from_coeffs(sh(2, 1), vec![qi(3), qi(-5)]).unwrap();
        assert_eq!(contract_numeric(&d, &v).unwrap().scalar(), Some(qi(0)));
    }

    #[test]
    fn determinant_diagrams() {
        let id2 = SymmetricForm::make(sh(2, 2), vec![(MultiIndex::new(&[2, 0]), qi(1)), (MultiIndex::new(&[0, 2]), qi(1))])
            .unwrap();
        assert_eq!(contract_numeric(&builtin_diagram("det2").unwrap(), &id2).unwrap().scalar(), Some(qi(2)));
        let id3 = SymmetricForm::make(
            sh(3, 2),
            vec![
                (MultiIndex::new(&[2, 0, 0]), qi(1)),
                (MultiIndex::new(&[0, 2, 0]), qi(2)),
                (MultiIndex::new(&[0, 0, 2]), qi(3)),
            ],
        )
        .unwrap();
        assert_eq!(contract_numeric(&builtin_diagram("det3").unwrap(), &id3).unwrap().scalar(), Some(qi(36)));
    }

    #[test]
    fn single_edge_plan() {
        let d = ContractionDiagram::parse("edge", 2, 2, "S(a,x) S(x,b)", qi(1)).unwrap();
        let p = plan_order(&d);
        assert_eq!(p.steps.len(), 1);
        assert_eq!(p.steps[0].result_rank, 2);
        let f: SymmetricForm<Q> = random_form(sh(2, 2), 4);
        assert_eq!(contract_numeric(&d, &f).unwrap(), contract_naive(&d, &f).unwrap());
    }

    #[test]
    fn i6_33_plan_is_small() {
        let p = plan_order(&builtin_diagram("i6_33").unwrap());
        assert!(p.max_entries(3) <= 3usize.pow(8), "{p}");
    }

    #[test]
    fn plan_matches_naive() {
        for (name, shape) in [("i4_23", sh(2, 3)), ("i2_24", sh(2, 4)), ("i3_24", sh(2, 4)), ("det2", sh(2, 2))] {
            let d = builtin_diagram(name).unwrap();
            for seed in 0..3 {
                let f: SymmetricForm<Q> = random_form(shape, seed);
                assert_eq!(contract_numeric(&d, &f).unwrap(), contract_naive(&d, &f).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn shape_mismatch() {
        let f: SymmetricForm<Q> = random_form(sh(2, 4), 1);
        assert!(matches!(contract_numeric(&builtin_diagram("i4_23").unwrap(), &f), Err(Error::Shape(_))));
    }

    #[test]
    fn bad_diagrams_rejected() {
        assert!(ContractionDiagram::parse("x", 2, 2, "S(a,a)", qi(1)).is_err());
        assert!(ContractionDiagram::parse("x", 2, 2, "S(a,b) S(a,c) e(a,c)", qi(1)).is_err());
        assert!(ContractionDiagram::parse("x", 2, 2, "S(a,b,c)", qi(1)).is_err());
        assert!(ContractionDiagram::parse("x", 2, 2, "Q(a,b)", qi(1)).is_err());
    }

    #[test]
    fn derivative_vertex_binding() {
        // ∂ contracted against S through two ε: the pairing ε ε S D
        let d = ContractionDiagram::parse("sd", 2, 2, "S(i1,i2) D(j1,j2) e(i1,j1) e(i2,j2)", qi(1)).unwrap();
        let f: SymmetricForm<Q> = random_form(sh(2, 2), 2);
        assert!(contract_numeric(&d, &f).is_err());
        let same = contract_bound(&d, &f, Some(&f)).unwrap();
        let det = contract_numeric(&builtin_diagram("det2").unwrap(), &f).unwrap();
        assert_eq!(same, det);
    }
}
