use intdisc::forms::{invariant_count, random_form, random_unimodular};
use intdisc::invariants::{
    calibration, compute_invariants, d24_printed, derive_25, discriminant, i2_24, i3_24, i4_23, i4_25,
    i4_33_printed, i6_33, Case,
};
use intdisc::polyalg::{discriminant_uni, var_list};
use intdisc::scalar::{q, qi};
use intdisc::tensornet::{builtin_diagram, contract_symbolic};
use intdisc::wardops::{apply_operator_exact, build_o0_25, build_o4_25, ActionTable};
use intdisc::{FormShape, MultiIndex, SparsePoly, SymmetricForm, Q};
use proptest::prelude::*;

fn contracted(name: &str) -> SparsePoly {
    contract_symbolic(&builtin_diagram(name).unwrap()).unwrap().scalar().unwrap()
}

fn form(n: usize, r: usize, entries: &[(&[u32], Q)]) -> SymmetricForm<Q> {
    SymmetricForm::make(FormShape { n, r }, entries.iter().map(|(a, c)| (MultiIndex::new(a), c.clone())).collect()).unwrap()
}

/// Binary form from coefficients of x^r, x^{r−1}y, …, y^r.
fn binary(c: &[Q]) -> SymmetricForm<Q> {
    SymmetricForm::from_coeffs(FormShape { n: 2, r: c.len() - 1 }, c.to_vec()).unwrap()
}

#[test]
fn contractions_match_printed_expansions_term_for_term() {
    let cases: [(&str, &SparsePoly); 6] = [
        ("i4_23", i4_23()),
        ("i2_24", i2_24()),
        ("i3_24", i3_24()),
        ("i4_25", i4_25()),
        ("i4_33", i4_33_printed()),
        ("i6_33", i6_33()),
    ];
    for (name, reference) in cases {
        assert_eq!(&contracted(name), reference, "{name}");
    }
    assert_eq!(i4_33_printed().monomial_count(), 25);
}

#[test]
fn d24_equals_i2_cubed_minus_six_i3_squared() {
    let d = i2_24().pow(3).sub(&i3_24().pow(2).scale(&qi(6)));
    assert_eq!(&d, d24_printed());
    assert_eq!(d.monomial_count(), 16);
    assert!(d.is_homogeneous(6));
}

#[test]
fn ternary_discriminant_has_2040_monomials() {
    let d = intdisc::invariants::discriminant_poly(Case::Ternary3, None).unwrap();
    assert_eq!(d.monomial_count(), 2040);
    assert!(d.is_homogeneous(12));
}

#[test]
fn quintic_tables_hold_at_random_forms() {
    let rec = derive_25().unwrap();
    assert!(rec.checks.len() >= 11, "{:?}", rec.checks);
    assert_eq!(rec.i8.monomial_count(), 68);
    assert_eq!(rec.i12.monomial_count(), 228);
    let polys = [i4_25().clone(), rec.i8.clone(), rec.i12.clone()];
    for (table, op) in [(ActionTable::o0_25(), build_o0_25().unwrap()), (ActionTable::o4_25(), build_o4_25().unwrap())] {
        let images: Vec<SparsePoly> = polys.iter().map(|p| apply_operator_exact(&op, p)).collect();
        for seed in 0..3 {
            let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, 900 + seed);
            let inv: Vec<Q> = polys.iter().map(|p| p.eval(f.coeffs())).collect();
            for k in 0..3 {
                assert_eq!(images[k].eval(f.coeffs()), table.linear(k).eval(&inv), "{} row {k}", table.label());
                for m in k..3 {
                    let prod = apply_operator_exact(&op, &polys[k].mul(&polys[m]));
                    assert_eq!(prod.eval(f.coeffs()), table.quadratic(k, m).eval(&inv), "{} row {k}{m}", table.label());
                }
            }
        }
    }
}

#[test]
fn loci_of_the_singular_suite() {
    // (x − 2y)² times a generic cofactor
    let sq = binary(&[qi(1), qi(-4), qi(4)]);
    let cofactors = [binary(&[qi(1), qi(3)]), binary(&[qi(2), qi(-1), qi(5)]), binary(&[qi(1), qi(1), qi(-3), q(1, 2)])];
    for g in &cofactors {
        let f = sq.mul_form(g).unwrap();
        assert_eq!(discriminant(&compute_invariants(&f).unwrap()), qi(0), "{}", f.shape());
        let h = sq.mul_form(&binary(&g.coeffs().iter().enumerate().map(|(i, c)| c + qi(i as i64 + 1)).collect::<Vec<_>>())).unwrap();
        assert_eq!(discriminant(&compute_invariants(&h).unwrap()), qi(0), "{}", h.shape());
    }
    let xyz = form(3, 3, &[(&[1, 1, 1], qi(1))]);
    assert_eq!(discriminant(&compute_invariants(&xyz).unwrap()), qi(0));
    let hesse = |lambda: Q| {
        form(3, 3, &[(&[3, 0, 0], qi(1)), (&[0, 3, 0], qi(1)), (&[0, 0, 3], qi(1)), (&[1, 1, 1], qi(-3) * lambda)])
    };
    assert_eq!(discriminant(&compute_invariants(&hesse(qi(1))).unwrap()), qi(0));
    assert_ne!(discriminant(&compute_invariants(&hesse(q(1, 2))).unwrap()), qi(0));
    let fermat = compute_invariants(&hesse(qi(0))).unwrap();
    assert_eq!(discriminant(&fermat), qi(108));
    for (n, r) in [(2, 3), (2, 4), (2, 5), (3, 3)] {
        for seed in 0..3 {
            let f: SymmetricForm<Q> = random_form(FormShape { n, r }, seed);
            assert_ne!(discriminant(&compute_invariants(&f).unwrap()), qi(0), "{n}|{r} seed {seed}");
        }
    }
}

#[test]
fn figure_counts() {
    let rows: [(usize, [u64; 6]); 5] = [
        (2, [1, 1, 1, 1, 1, 1]),
        (3, [1, 2, 5, 11, 21, 36]),
        (4, [2, 7, 20, 46, 91, 162]),
        (5, [3, 13, 41, 102, 217, 414]),
        (6, [4, 20, 69, 186, 427, 876]),
    ];
    for (r, row) in rows {
        for (k, &expect) in row.iter().enumerate() {
            assert_eq!(invariant_count(k + 2, r).unwrap(), expect, "n = {}, r = {r}", k + 2);
        }
    }
}

#[test]
fn kernel_discriminant_vanishes_on_the_quintic_locus() {
    let vars = var_list(&["s", "u"]);
    let kernel = SparsePoly::from_terms(
        &vars,
        vec![(vec![0, 0], qi(3)), (vec![1, 0], qi(-3)), (vec![2, 1], qi(48))],
    )
    .unwrap();
    let d = discriminant_uni(&kernel, "s").unwrap();
    assert_eq!(d.eval_named(&[("s", qi(0)), ("u", q(1, 64))]).unwrap(), qi(0));
    assert_eq!(d.eval_named(&[("s", qi(0)), ("u", qi(0))]).unwrap(), qi(9));
    // forms with a double root sit at u = I8/I4² = 1/64
    let calib = calibration().unwrap();
    let sq = binary(&[qi(1), qi(1), q(1, 4)]);
    for g in [binary(&[qi(1), qi(0), qi(-2), qi(3)]), binary(&[qi(2), qi(5), qi(-1), q(1, 3)])] {
        let f = sq.mul_form(&g).unwrap();
        let (i4, i8) = (i4_25().eval(f.coeffs()), calib.i8.eval(f.coeffs()));
        assert_ne!(i4, qi(0));
        assert_eq!(&i8 / (&i4 * &i4), q(1, 64));
    }
    let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, 3);
    let (i4, i8) = (i4_25().eval(f.coeffs()), calib.i8.eval(f.coeffs()));
    assert_ne!(&i4 * &i4 - qi(64) * i8, qi(0));
}

#[test]
fn quintic_discriminant_tracks_the_classical_one() {
    let vars = var_list(&["x"]);
    let mut ratio: Option<Q> = None;
    for seed in 0..5 {
        let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, 40 + seed);
        // f(x, 1) with s_{(5−k, k)} the coefficient of x^{5−k}
        let p = SparsePoly::from_terms(&vars, f.coeffs().iter().enumerate().map(|(k, c)| (vec![5 - k as u32], c.clone())))
            .unwrap();
        let classical = discriminant_uni(&p, "x").unwrap().constant_value().unwrap();
        let d = discriminant(&compute_invariants(&f).unwrap());
        let r = d / classical;
        assert_eq!(ratio.get_or_insert(r.clone()), &r);
    }
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..12, 1i64..6).prop_map(|(a, b)| q(a, b))
}

fn shape() -> impl Strategy<Value = FormShape> {
    prop_oneof![
        Just(FormShape { n: 2, r: 3 }),
        Just(FormShape { n: 2, r: 4 }),
        Just(FormShape { n: 2, r: 5 }),
        Just(FormShape { n: 3, r: 3 }),
        Just(FormShape { n: 3, r: 2 })
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn transform_composition(sh in shape(), seed in 0u64..10_000, s1 in 0u64..1000, s2 in 0u64..1000) {
        let f: SymmetricForm<Q> = random_form(sh, seed);
        let (u, v) = (random_unimodular(sh.n, s1), random_unimodular(sh.n, s2));
        let lhs = f.gl_transform(&u).unwrap().gl_transform(&v).unwrap();
        let rhs = f.gl_transform(&intdisc::forms::matmul(&u, &v)).unwrap();
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn transform_is_substitution(sh in shape(), seed in 0u64..10_000, s1 in 0u64..1000, x in proptest::collection::vec(rational(), 3)) {
        let f: SymmetricForm<Q> = random_form(sh, seed);
        let u = random_unimodular(sh.n, s1);
        let x = &x[..sh.n];
        let ux: Vec<Q> = u.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect();
        prop_assert_eq!(f.gl_transform(&u).unwrap().evaluate(x).unwrap(), f.evaluate(&ux).unwrap());
    }

    #[test]
    fn invariants_are_unimodular_invariant(sh in shape(), seed in 0u64..10_000, s1 in 0u64..1000) {
        let f: SymmetricForm<Q> = random_form(sh, seed);
        let g = f.gl_transform(&random_unimodular(sh.n, s1)).unwrap();
        let (a, b) = (compute_invariants(&f).unwrap(), compute_invariants(&g).unwrap());
        prop_assert_eq!(a.values, b.values);
    }

    #[test]
    fn power_is_pointwise(k in 1usize..4, seed in 0u64..10_000, x in proptest::collection::vec(rational(), 2)) {
        let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 2 }, seed);
        let mut expect = qi(1);
        for _ in 0..k {
            expect *= f.evaluate(&x).unwrap();
        }
        prop_assert_eq!(f.pow_form(k).unwrap().evaluate(&x).unwrap(), expect);
    }

    #[test]
    fn form_text_round_trip(sh in shape(), seed in 0u64..10_000) {
        let f: SymmetricForm<Q> = random_form(sh, seed);
        let text = intdisc::forms::format_form(&f);
        prop_assert!(intdisc::forms::parse_form(&text).unwrap() == f);
    }

    #[test]
    fn ring_laws(a in proptest::collection::vec((0u32..3, 0u32..3, rational()), 0..6),
                 b in proptest::collection::vec((0u32..3, 0u32..3, rational()), 0..6),
                 c in proptest::collection::vec((0u32..3, 0u32..3, rational()), 0..6)) {
        let vars = var_list(&["p", "q"]);
        let mk = |t: &Vec<(u32, u32, Q)>| SparsePoly::from_terms(&vars, t.iter().map(|(i, j, c)| (vec![*i, *j], c.clone()))).unwrap();
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }
}
