use super::*;
use crate::forms::{random_form, random_unimodular};
use crate::tensornet::{builtin_diagram, contract_symbolic};

fn ternary(entries: &[(&[u32], i64)]) -> SymmetricForm<Q> {
    let e = entries.iter().map(|(a, c)| (MultiIndex::new(a), qi(*c))).collect();
    SymmetricForm::make(FormShape { n: 3, r: 3 }, e).unwrap()
}

fn contracted(name: &str) -> SparsePoly {
    contract_symbolic(&builtin_diagram(name).unwrap()).unwrap().scalar().unwrap()
}

#[test]
fn reference_expansion_sizes() {
    assert_eq!(d24_printed().monomial_count(), 16);
    assert_eq!(i4_33_printed().monomial_count(), 25);
    assert!(i4_23().is_homogeneous(4));
    assert!(i2_24().is_homogeneous(2) && i3_24().is_homogeneous(3));
    assert!(i4_25().is_homogeneous(4));
    assert!(i6_33().is_homogeneous(6));
}

#[test]
fn d24_is_i2_cubed_minus_six_i3_squared() {
    let d = i2_24().pow(3).sub(&i3_24().pow(2).scale(&qi(6)));
    assert_eq!(&d, d24_printed());
}

#[test]
fn contractions_reproduce_reference_expansions() {
    assert_eq!(&contracted("i4_23"), i4_23());
    assert_eq!(&contracted("i2_24"), i2_24());
    assert_eq!(&contracted("i3_24"), i3_24());
    assert_eq!(&contracted("i4_25"), i4_25());
    assert_eq!(&contracted("i4_33"), i4_33_printed());
    assert_eq!(&contracted("i6_33"), i6_33());
}

#[test]
fn ternary_discriminant_has_2040_monomials() {
    assert_eq!(discriminant_poly(Case::Ternary3, None).unwrap().monomial_count(), 2040);
}

#[test]
fn ternary_reference_values() {
    let xyz = compute_invariants(&ternary(&[(&[1, 1, 1], 1)])).unwrap();
    assert_eq!(xyz.values, vec![("I4", q(-1, 216)), ("I6", q(1, 972))]);
    assert_eq!(discriminant(&xyz), qi(0));

    let hesse = compute_invariants(&ternary(&[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1), (&[1, 1, 1], -3)]))
        .unwrap();
    assert_eq!(hesse.values, vec![("I4", q(-27, 8)), ("I6", q(-81, 4))]);
    assert_eq!(discriminant(&hesse), qi(0));

    let fermat = compute_invariants(&ternary(&[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)])).unwrap();
    assert_eq!(fermat.values, vec![("I4", qi(0)), ("I6", qi(-6))]);
    assert_eq!(discriminant(&fermat), qi(108));
}

#[test]
fn binary_cubic_invariant_is_proportional_to_classical_discriminant() {
    let shape = FormShape { n: 2, r: 3 };
    let mut ratio = None;
    for seed in 0..8 {
        let f: SymmetricForm<Q> = random_form(shape, seed);
        let c = f.coeffs();
        let classical = discriminant_23_classical(&c[0], &c[1], &c[2], &c[3]);
        if classical == qi(0) {
            continue;
        }
        let r = compute_invariants(&f).unwrap().values[0].1.clone() / classical;
        assert_eq!(ratio.get_or_insert(r.clone()), &r);
    }
    assert!(ratio.is_some());
}

#[test]
fn quadratic_det_matches_diagonal() {
    let f = SymmetricForm::make(
        FormShape { n: 3, r: 2 },
        vec![(MultiIndex::new(&[2, 0, 0]), qi(2)), (MultiIndex::new(&[0, 2, 0]), qi(3)), (MultiIndex::new(&[0, 0, 2]), qi(5))],
    )
    .unwrap();
    assert_eq!(compute_invariants(&f).unwrap().values[0].1, qi(30));
}

#[test]
fn unimodular_changes_preserve_invariants() {
    for (n, r) in [(2, 3), (2, 4), (3, 3), (3, 2), (4, 2)] {
        for seed in 0..3 {
            let f: SymmetricForm<Q> = random_form(FormShape { n, r }, seed);
            let u = random_unimodular(n, seed + 100);
            let g = f.gl_transform(&u).unwrap();
            let (a, b) = (compute_invariants(&f).unwrap(), compute_invariants(&g).unwrap());
            assert!(same_values(&a, &b), "{n}|{r} seed {seed}");
        }
    }
}

#[test]
fn vertical_quartic_identities_hold() {
    vertical_invariants_24(&qi(1), &qi(3), &qi(-2)).unwrap();
    vertical_invariants_24(&q(1, 2), &qi(0), &qi(7)).unwrap();
}

#[test]
fn quintic_derivation_passes_every_table_row() {
    let rec = derive_25().unwrap();
    assert_eq!(rec.checks.len(), 18);
    assert_eq!(rec.i8.monomial_count(), 68);
    assert_eq!(rec.i12.monomial_count(), 228);
}

#[test]
fn quintic_calibration_text_round_trips() {
    let rec = calibration().unwrap();
    let back = CalibrationRecord::from_text(&rec.to_text()).unwrap();
    assert_eq!(back.i8, rec.i8);
    assert_eq!(back.i12, rec.i12);
    let broken = rec.to_text().replacen("[I8]\n", "[I8]\n1/7 s50^2 s41^6\n", 1);
    assert!(CalibrationRecord::from_text(&broken).is_err());
}

#[test]
fn quintic_discriminant_vanishes_with_a_double_root() {
    // x²(x + y)(x − 2y)(3x + y)
    let lin = |a: i64, b: i64| SymmetricForm::from_coeffs(FormShape { n: 2, r: 1 }, vec![qi(a), qi(b)]).unwrap();
    let f = [lin(1, 0), lin(1, 1), lin(1, -2), lin(3, 1)]
        .iter()
        .fold(lin(1, 0), |acc, l| acc.mul_form(l).unwrap());
    let inv = compute_invariants(&f).unwrap();
    assert_eq!(discriminant(&inv), qi(0));
    let g: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, 4);
    assert_ne!(discriminant(&compute_invariants(&g).unwrap()), qi(0));
}

#[test]
fn quintic_invariants_are_sl_invariant() {
    let f: SymmetricForm<Q> = random_form(FormShape { n: 2, r: 5 }, 9);
    let g = f.gl_transform(&random_unimodular(2, 3)).unwrap();
    assert!(same_values(&compute_invariants(&f).unwrap(), &compute_invariants(&g).unwrap()));
}
