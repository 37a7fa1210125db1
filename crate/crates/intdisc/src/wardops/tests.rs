use super::*;
use crate::forms::random_form;
use crate::invariants::{i4_25, i4_33, i6_33};
use crate::scalar::q_to_f64;

fn mi(s: &str) -> Vec<u32> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

fn contains_all(n: usize, r: usize, printed: &[(&str, &str, &str, &str)]) {
    let all = ward_pairs(n, r).unwrap();
    for (a, b, p, qq) in printed {
        assert!(
            all.iter().any(|w| w.matches(&mi(a), &mi(b), &mi(p), &mi(qq))),
            "missing {a}{b}-{p}{qq} in {n}|{r}"
        );
    }
}

#[test]
fn ward_pair_counts() {
    assert_eq!(ward_pairs(2, 3).unwrap().len(), 3);
    assert_eq!(ward_pairs(2, 4).unwrap().len(), 7);
    for (n, r) in [(2, 3), (2, 4), (2, 5), (3, 3)] {
        for w in ward_pairs(n, r).unwrap() {
            let s = |x: &MultiIndex, y: &MultiIndex| -> Vec<u32> { x.0.iter().zip(&y.0).map(|(i, j)| i + j).collect() };
            assert_eq!(s(&w.a, &w.b), s(&w.p, &w.q));
            assert!(!w.matches(&w.a.0, &w.b.0, &w.a.0, &w.b.0) || (w.a, w.b) != (w.p.clone(), w.q.clone()));
        }
    }
}

#[test]
fn printed_ward_equations_are_enumerated() {
    contains_all(2, 4, &[("40", "22", "31", "31"), ("40", "13", "31", "22"), ("40", "04", "31", "13"), ("22", "22", "31", "13")]);
    contains_all(
        2,
        5,
        &[
            ("50", "32", "41", "41"),
            ("50", "23", "41", "32"),
            ("50", "14", "41", "23"),
            ("32", "32", "41", "23"),
            ("50", "05", "32", "23"),
            ("41", "14", "32", "23"),
        ],
    );
    contains_all(
        3,
        3,
        &[
            ("300", "102", "201", "201"),
            ("300", "111", "201", "210"),
            ("300", "003", "201", "102"),
            ("300", "012", "201", "111"),
            ("300", "012", "210", "102"),
            ("300", "120", "210", "210"),
            ("300", "111", "210", "201"),
            ("300", "030", "210", "120"),
            ("300", "021", "210", "111"),
            ("300", "021", "201", "120"),
        ],
    );
}

#[test]
fn quintic_operators_are_ward_combinations() {
    let shape = FormShape { n: 2, r: 5 };
    for op in [build_o0_25().unwrap(), build_o4_25().unwrap()] {
        assert_eq!(op.second_order_terms(), 9);
        assert!(op.blocks.iter().all(|b| b.is_ward_combination(shape)));
    }
    assert_eq!(build_o0_25().unwrap().degree(), 0);
    assert_eq!(build_o4_25().unwrap().degree(), 4);
}

#[test]
fn ternary_table_reduced_coefficients() {
    let (first, second) = ActionTable::o4_33().reduced_coefficients();
    let vars = first[0].vars().clone();
    let parse = |e: &str| parse_expr(e, &|n: &str| SparsePoly::var(&vars, n)).unwrap().with_vars(&vars).unwrap();
    assert_eq!(second[0][0], parse("1/6 I6^2 - 32/3 I4^3"));
    assert_eq!(second[0][1], parse("-112/3 I4^2 I6"));
    assert_eq!(second[1][1], parse("128/3 I4^4 - 24 I4 I6^2"));
    assert_eq!(first[1], parse("-98/3 I4 I6"));
}

#[test]
fn chain_rule_matches_exact_table_on_a_polynomial() {
    // F = I4² I6
    let t = ActionTable::o4_33();
    let inv = [0.7, -1.3];
    let (i4, i6) = (inv[0], inv[1]);
    let grad = [2.0 * i4 * i6, i4 * i4];
    let hess = vec![vec![2.0 * i6, 2.0 * i4], vec![2.0 * i4, 0.0]];
    let got = chain_rule_apply(&t, &grad, &hess, &inv).unwrap();
    let l4 = t.linear(0).eval(&inv);
    let q44 = t.quadratic(0, 0).eval(&inv);
    let q46 = t.quadratic(0, 1).eval(&inv);
    let direct = {
        let l = [l4, t.linear(1).eval(&inv)];
        let qm = [[q44, q46], [q46, t.quadratic(1, 1).eval(&inv)]];
        let mut s = 0.0;
        for a in 0..2 {
            s += grad[a] * l[a];
            for b in 0..2 {
                s += 0.5 * hess[a][b] * (qm[a][b] - inv[a] * l[b] - inv[b] * l[a]);
            }
        }
        s
    };
    assert!((got - direct).abs() < 1e-12);
    assert!(chain_rule_apply(&t, &grad[..1], &hess, &inv).is_err());
}

#[test]
fn gl_commutator_and_weights() {
    let shape = FormShape { n: 3, r: 3 };
    let p = i4_33().clone();
    let x = |i, j, p: &SparsePoly| gl_vector_field(p, shape, i, j).unwrap();
    assert!(x(1, 2, &p).is_zero());
    assert!(x(3, 1, i6_33()).is_zero());
    assert_eq!(x(1, 1, &p), p.scale(&qi(4)));
    assert_eq!(x(2, 2, i6_33()), i6_33().scale(&qi(6)));

    let b = FormShape { n: 2, r: 4 };
    let vars = b.s_vars();
    let v = |n: &str| SparsePoly::var(&vars, n).unwrap();
    for test in [v("s40").mul(&v("s04")), v("s40").mul(&v("s31").pow(2)).add(&v("s22"))] {
        let g = |i, j, p: &SparsePoly| gl_vector_field(p, b, i, j).unwrap();
        let lhs = g(1, 2, &g(2, 1, &test)).sub(&g(2, 1, &g(1, 2, &test)));
        let rhs = g(1, 1, &test).sub(&g(2, 2, &test));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn fd_generator_matches_exact_field() {
    let shape = FormShape { n: 3, r: 3 };
    let f: SymmetricForm<f64> = random_form(shape, 5);
    let i4 = i4_33().clone();
    let fun = |g: &SymmetricForm<f64>| -> Result<f64> { Ok(i4.eval(g.coeffs())) };
    let h = default_step(&f);
    for (i, j) in [(1, 1), (1, 3), (2, 1)] {
        let exact = gl_vector_field(&i4, shape, i, j).unwrap().eval(f.coeffs()) / 3.0;
        let fd = gl_generator(&fun, &f, i, j, h).unwrap();
        assert!((exact - fd).abs() < 1e-9 * (1.0 + exact.abs()), "({i},{j}) {exact} {fd}");
    }
    assert!(gl_generator(&fun, &f, 0, 1, h).is_err());
}

#[test]
fn fd_operator_matches_exact_operator() {
    let shape = FormShape { n: 2, r: 5 };
    let f: SymmetricForm<f64> = random_form(shape, 2);
    let i4 = i4_25().clone();
    let fun = |g: &SymmetricForm<f64>| -> Result<f64> { Ok(i4.eval(g.coeffs())) };
    for op in [build_o0_25().unwrap(), build_o4_25().unwrap()] {
        let exact = op.apply(&i4).eval(f.coeffs());
        let (fd, scale) = apply_operator_fd(&op, &fun, &f, default_step(&f)).unwrap();
        assert!((exact - fd).abs() < 1e-8 * scale.max(1.0), "{exact} {fd}");
    }
}

#[test]
fn fd_second_derivatives_of_a_quadratic_are_exact() {
    let shape = FormShape { n: 2, r: 2 };
    let f = SymmetricForm::from_coeffs(shape, vec![1.0, 0.5, 2.0]).unwrap();
    let fun = |g: &SymmetricForm<f64>| -> Result<f64> {
        let c = g.coeffs();
        Ok(3.0 * c[0] * c[2] - c[1] * c[1])
    };
    let (a, b, c) = (MultiIndex::new(&[2, 0]), MultiIndex::new(&[1, 1]), MultiIndex::new(&[0, 2]));
    assert!((fd_mixed_second(&fun, &f, &a, &c, 0.1).unwrap() - 3.0).abs() < 1e-9);
    assert!((fd_mixed_second_richardson(&fun, &f, &b, &b, 0.1).unwrap() + 2.0).abs() < 1e-9);
    assert!(fd_mixed_second(&fun, &f, &a, &b, 0.0).is_err());
}

#[test]
fn ward_residual_rejects_singular_forms() {
    let shape = FormShape { n: 2, r: 4 };
    let f = SymmetricForm::make(shape, vec![(MultiIndex::new(&[2, 2]), 1.0)]).unwrap();
    let fun = |_: &SymmetricForm<f64>| -> Result<f64> { Ok(1.0) };
    let w = &ward_pairs(2, 4).unwrap()[0];
    assert!(matches!(ward_residual(&fun, &f, w, 1e-3), Err(Error::Singular(_))));
}

#[test]
fn quadruple_text() {
    let w = parse_quadruple("40 + 04 = 31 + 13", 2).unwrap();
    assert!(w.matches(&[3, 1], &[1, 3], &[0, 4], &[4, 0]));
    assert!(parse_quadruple("40 + 0x = 31 + 13", 2).is_err());
    assert_eq!(q_to_f64(&q(1, 4)), 0.25);
}
