use proptest::prelude::*;

use axial_core::axis::Grade;
use axial_core::constructions::matrix_unit_algebra;
use axial_core::corpus::{dim2_parameter_ok, matsuo_parameter_ok};
use axial_core::miyamoto::{is_automorphism, miyamoto};
use axial_core::poly::local_minimal_polynomial;
use axial_core::rational::int;
use axial_core::{
    classify_axis, decompose, dim2_algebra, eigenspace, matsuo_algebra, minimal_polynomial, rat,
    subalgebra_closure, AlgebraTable, Element, FischerSpace, Involution, Matrix, Polynomial,
    Rational, Subspace,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rat(p, q))
}

fn small_int() -> impl Strategy<Value = Rational> {
    (-2i64..=2).prop_map(int)
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), n)
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(small_int(), n), n).prop_map(Matrix::from_rows)
}

fn table(n: usize) -> impl Strategy<Value = AlgebraTable> {
    prop::collection::vec(small_int(), n * n * n).prop_map(move |g| {
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        AlgebraTable::from_fn(labels, |i, j| {
            g[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
        })
        .unwrap()
    })
}

fn sized_table() -> impl Strategy<Value = AlgebraTable> {
    (1usize..=4).prop_flat_map(table)
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(matrix)
}

fn parameter(accept: fn(&Rational) -> bool) -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9)
        .prop_map(|(p, q)| rat(p, q))
        .prop_filter("excluded parameter", accept)
}

/// Algebras with known primitive axes on the basis.
fn axial_table() -> impl Strategy<Value = AlgebraTable> {
    prop_oneof![
        parameter(dim2_parameter_ok).prop_map(|l| dim2_algebra(&l).unwrap()),
        parameter(matsuo_parameter_ok).prop_map(|e| matsuo_algebra(
            &FischerSpace::single_line(),
            &e
        )
        .unwrap()),
    ]
}

/// Independent degree oracle: least k with I, M, ..., M^k linearly dependent.
fn power_dependence_degree(m: &Matrix) -> usize {
    let n = m.rows();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        rows.push(power.row_vecs().concat());
        if Matrix::from_rows(rows.clone()).rank() < rows.len() {
            return k;
        }
        power = power.mul(m);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiply_is_bilinear(
        (t, u, u2, v, s) in sized_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t), vector(n), vector(n), vector(n), small_rational())
        })
    ) {
        let (u, u2, v) = (Element(u), Element(u2), Element(v));
        let m = |x: &Element, y: &Element| t.multiply(x, y).unwrap();
        prop_assert_eq!(m(&(&u + &u2), &v), &m(&u, &v) + &m(&u2, &v));
        prop_assert_eq!(m(&v, &(&u + &u2)), &m(&v, &u) + &m(&v, &u2));
        prop_assert_eq!(m(&u.scale(&s), &v), m(&u, &v).scale(&s));
        prop_assert_eq!(m(&u, &v.scale(&s)), m(&u, &v).scale(&s));
    }

    #[test]
    fn operators_match_multiply(
        (t, a, v) in sized_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t), vector(n), vector(n))
        })
    ) {
        let (a, v) = (Element(a), Element(v));
        prop_assert_eq!(t.left_operator(&a).unwrap().apply(&v.0), t.multiply(&a, &v).unwrap().0);
        prop_assert_eq!(t.right_operator(&a).unwrap().apply(&v.0), t.multiply(&v, &a).unwrap().0);
    }

    #[test]
    fn minimal_polynomial_annihilates_and_is_minimal(m in sized_matrix()) {
        let p = minimal_polynomial(&m);
        prop_assert!(p.is_monic());
        prop_assert!(p.eval_matrix(&m).is_zero());
        prop_assert_eq!(p.degree(), Some(power_dependence_degree(&m)));
        for r in -3i64..=3 {
            let root = Polynomial::linear(&int(r));
            let (q, rem) = p.div_rem(&root);
            if rem.is_zero() {
                prop_assert!(!q.eval_matrix(&m).is_zero());
            }
        }
    }

    #[test]
    fn local_polynomials_divide_the_minimal_one(
        (m, v) in sized_matrix().prop_flat_map(|m| { let n = m.rows(); (Just(m), vector(n)) })
    ) {
        let p = minimal_polynomial(&m);
        let local = local_minimal_polynomial(&m, &v);
        prop_assert!(local.divides(&p));
        prop_assert!(local.eval_matrix(&m).apply(&v).iter().all(|c| *c == int(0)));
    }

    #[test]
    fn eigenspaces_are_eigenvectors(m in sized_matrix(), mu in small_int(), nu in small_int()) {
        let e = eigenspace(&m, &mu);
        prop_assert_eq!(e.dim(), m.rows() - m.shift(&mu).rank());
        for v in e.basis() {
            let scaled: Vec<Rational> = v.iter().map(|c| c * &mu).collect();
            prop_assert_eq!(m.apply(v), scaled);
        }
        if mu != nu {
            prop_assert!(e.intersect(&eigenspace(&m, &nu)).is_zero());
        }
    }

    #[test]
    fn closure_is_a_fixpoint(
        (t, g1, g2) in sized_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t), vector(n), vector(n))
        })
    ) {
        let gens = vec![Element(g1), Element(g2)];
        let c = subalgebra_closure(&t, &gens).unwrap();
        for g in &gens {
            prop_assert!(c.space.contains(&g.0));
        }
        let basis: Vec<Element> = (0..c.dim()).map(|i| c.basis_element(i)).collect();
        for x in &basis {
            for y in &basis {
                prop_assert!(c.space.contains(&t.multiply(x, y).unwrap().0));
            }
        }
        if !basis.is_empty() {
            let again = subalgebra_closure(&t, &basis).unwrap();
            prop_assert_eq!(&again.space, &c.space);
        }
        let reversed: Vec<Element> = gens.iter().rev().cloned().collect();
        prop_assert_eq!(&subalgebra_closure(&t, &reversed).unwrap().space, &c.space);
    }

    #[test]
    fn induced_table_reproduces_products(
        (t, g1, g2) in sized_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t), vector(n), vector(n))
        })
    ) {
        let c = subalgebra_closure(&t, &[Element(g1), Element(g2)]).unwrap();
        let k = c.dim();
        prop_assert_eq!(c.table.is_some(), k > 0);
        for i in 0..k {
            for j in 0..k {
                let ambient = t.multiply(&c.basis_element(i), &c.basis_element(j)).unwrap();
                let coords = c.space.coordinates(&ambient.0).unwrap();
                prop_assert_eq!(c.table.as_ref().unwrap().basis_product(i, j), coords.as_slice());
            }
        }
    }

    #[test]
    fn decomposition_reconstructs_with_membership(
        (t, axis, v) in axial_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t.clone()), 0..n, vector(n))
        })
    ) {
        let a = t.basis_element(axis);
        let p = classify_axis(&t, &a).unwrap();
        let v = Element(v);
        let d = decompose(&p, &v).unwrap();
        prop_assert_eq!(d.reconstruct(&a), v);
        let lam = p.lambda.clone().unwrap();
        let del = p.delta.clone().unwrap();
        let zero = int(0);
        for (comp, mu, nu) in [
            (&d.comp_00, &zero, &zero),
            (&d.comp_l0, &lam, &zero),
            (&d.comp_0d, &zero, &del),
            (&d.comp_ld, &lam, &del),
        ] {
            prop_assert_eq!(t.multiply(&a, comp).unwrap(), comp.scale(mu));
            prop_assert_eq!(t.multiply(comp, &a).unwrap(), comp.scale(nu));
        }
    }

    #[test]
    fn classification_is_basis_independent(
        (t, axis, p) in axial_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t.clone()), 0..n, matrix(n).prop_filter("singular", |m| m.inverse().is_some()))
        })
    ) {
        let a = t.basis_element(axis);
        let moved = t.change_basis(&p).unwrap();
        let a_moved = Element(p.inverse().unwrap().apply(&a.0));
        let before = classify_axis(&t, &a).unwrap();
        let after = classify_axis(&moved, &a_moved).unwrap();
        prop_assert_eq!(&before.left_min_poly, &after.left_min_poly);
        prop_assert_eq!(&before.right_min_poly, &after.right_min_poly);
        prop_assert_eq!(&before.lambda, &after.lambda);
        prop_assert_eq!(&before.delta, &after.delta);
        prop_assert_eq!(before.is_primitive_axis(), after.is_primitive_axis());
        prop_assert_eq!(before.jordan_type, after.jordan_type);
        prop_assert_eq!(before.spaces.dims(), after.spaces.dims());
        // Spaces correspond under the basis map.
        prop_assert_eq!(after.spaces.lambda_delta.map(&p), before.spaces.lambda_delta);
    }

    #[test]
    fn miyamoto_maps_are_automorphic_involutions(
        (t, axis) in axial_table().prop_flat_map(|t| { let n = t.dim(); (Just(t.clone()), 0..n) })
    ) {
        let p = classify_axis(&t, &t.basis_element(axis)).unwrap();
        let taus: Vec<_> = Involution::ALL.iter().map(|&w| miyamoto(&p, w).unwrap()).collect();
        for tau in &taus {
            prop_assert!(tau.is_involution());
            prop_assert!(is_automorphism(&t, tau).unwrap());
        }
        prop_assert_eq!(taus[0].compose(&taus[1]), taus[2].clone());
        prop_assert_eq!(taus[1].compose(&taus[0]), taus[2].clone());
    }

    #[test]
    fn images_of_axes_are_axes_of_the_same_type(
        (t, axis, other) in axial_table().prop_flat_map(|t| {
            let n = t.dim();
            (Just(t.clone()), 0..n, 0..n)
        }),
        which in prop::sample::select(Involution::ALL.to_vec()),
    ) {
        let p = classify_axis(&t, &t.basis_element(axis)).unwrap();
        let tau = miyamoto(&p, which).unwrap();
        let b = t.basis_element(other);
        let image = tau.apply(&b);
        let q = classify_axis(&t, &image).unwrap();
        let original = classify_axis(&t, &b).unwrap();
        prop_assert!(q.is_primitive_axis());
        prop_assert_eq!(q.lambda, original.lambda);
        prop_assert_eq!(q.delta, original.delta);
    }

    #[test]
    fn graded_parts_follow_the_grading(
        (t, axis) in axial_table().prop_flat_map(|t| { let n = t.dim(); (Just(t.clone()), 0..n) })
    ) {
        let p = classify_axis(&t, &t.basis_element(axis)).unwrap();
        let proj = p.projections().unwrap();
        let n = t.dim();
        let sum = Grade::ALL.iter().fold(Matrix::zeros(n, n), |acc, &g| acc.add(&proj.grade(g)));
        prop_assert_eq!(sum, Matrix::identity(n));
        prop_assert!(axial_core::check_fusion(&t, &p).unwrap().all_passed());
    }
}

#[test]
fn rref_basis_of_a_span_is_canonical() {
    let a = Subspace::span(
        3,
        [vec![int(1), int(2), int(3)], vec![int(2), int(4), int(7)]],
    );
    let b = Subspace::span(
        3,
        [vec![int(0), int(0), int(1)], vec![int(3), int(6), int(9)]],
    );
    assert_eq!(a, b);
    assert_eq!(a.pivots(), &[0, 2]);
}

#[test]
fn matrix_units_are_not_primitive_for_any_diagonal_unit() {
    let t = matrix_unit_algebra(3).unwrap();
    for i in 0..3 {
        let e = t.basis_element(i * 3 + i);
        let p = classify_axis(&t, &e).unwrap();
        assert!(!p.is_primitive_axis());
        assert_eq!(eigenspace(&t.left_operator(&e).unwrap(), &int(1)).dim(), 3);
    }
}
