use axial_core::axis::find_idempotents;
use axial_core::constructions::matrix_unit_algebra;
use axial_core::rational::int;
use axial_core::{
    build_frame, check_fusion, classify_axis, decompose, dim2_algebra, is_idempotent,
    matsuo_algebra, rat, AlgebraTable, Element, Error, FischerSpace, Grade, Polynomial,
};

fn dim2() -> AlgebraTable {
    dim2_algebra(&rat(1, 3)).unwrap()
}

fn matsuo_line() -> AlgebraTable {
    matsuo_algebra(&FischerSpace::single_line(), &rat(1, 2)).unwrap()
}

fn el(values: &[(i64, i64)]) -> Element {
    Element(values.iter().map(|&(p, q)| rat(p, q)).collect())
}

#[test]
fn idempotent_examples() {
    let t = matsuo_line();
    assert!(is_idempotent(&t, &t.basis_element(0)).unwrap());
    assert!(is_idempotent(&t, &Element::zero(3)).unwrap());
    assert!(!is_idempotent(&t, &t.basis_element(0).scale(&rat(1, 2))).unwrap());
    assert!(is_idempotent(&t, &Element::zero(2)).is_err());
}

#[test]
fn classify_dim2() {
    let t = dim2();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    assert_eq!(p.lambda, Some(rat(1, 3)));
    assert_eq!(p.delta, Some(rat(2, 3)));
    assert!(p.primitive_left && p.primitive_right);
    assert!(p.operators_commute);
    assert!(p.jordan_type);
    assert!(p.is_primitive_axis());
    assert_eq!(p.type_string(), "(1/3, 2/3)");
}

#[test]
fn classify_matsuo_line_axis() {
    // Frozen from an independent sympy eigen-solve of the explicit 3x3 L_a:
    // eigenvalues {1, 0, eta} at eta = 1/2.
    let t = matsuo_line();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    assert_eq!(
        p.left_min_poly,
        Polynomial::from_roots(&[int(0), int(1), rat(1, 2)])
    );
    assert_eq!(p.lambda, Some(rat(1, 2)));
    assert_eq!(p.delta, Some(rat(1, 2)));
    assert!(p.is_primitive_axis());
    assert!(p.jordan_type);
    assert_eq!(p.spaces.dims(), [1, 1, 0, 0, 1]);
}

#[test]
fn classify_matrix_unit_is_not_primitive() {
    let t = matrix_unit_algebra(2).unwrap();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    assert_eq!(p.left_min_poly, Polynomial::from_roots(&[int(0), int(1)]));
    assert_eq!(p.lambda, None);
    assert!(!p.primitive_left);
    assert!(!p.is_primitive_axis());
    assert!(!p.jordan_type);
    assert!(p.failure().is_some());
}

#[test]
fn classify_rejects_non_idempotent() {
    let t = dim2();
    let err = classify_axis(&t, &el(&[(1, 2), (0, 1)])).unwrap_err();
    assert!(matches!(err, Error::NotIdempotent));
}

#[test]
fn primitive_axis_has_no_mixed_one_spaces() {
    for t in [dim2(), matsuo_line()] {
        for i in 0..t.dim() {
            let a = t.basis_element(i);
            let p = classify_axis(&t, &a).unwrap();
            assert_eq!(p.spaces.one_one.dim(), 1);
            let lam = p.lambda.clone().unwrap();
            let del = p.delta.clone().unwrap();
            let one = int(1);
            assert!(axial_core::two_sided_eigenspace(&t, &a, &one, &del)
                .unwrap()
                .is_zero());
            assert!(axial_core::two_sided_eigenspace(&t, &a, &lam, &one)
                .unwrap()
                .is_zero());
        }
    }
}

#[test]
fn decompose_dim2() {
    let t = dim2();
    let (a, b) = (t.basis_element(0), t.basis_element(1));
    let p = classify_axis(&t, &a).unwrap();
    let d = decompose(&p, &b).unwrap();
    assert_eq!(d.alpha, int(1));
    assert!(d.comp_00.is_zero() && d.comp_l0.is_zero() && d.comp_0d.is_zero());
    assert_eq!(d.comp_ld, &b - &a);
    let self_d = decompose(&p, &a).unwrap();
    assert_eq!(self_d.alpha, int(1));
    assert!(self_d.reconstruct(&a) == a && (&self_d.reconstruct(&a) - &a).is_zero());
    assert!(self_d.comp_ld.is_zero() && self_d.comp_00.is_zero());
}

#[test]
fn decompose_matsuo_line() {
    // Frozen from a sympy projection onto the two-sided eigenspaces.
    let t = matsuo_line();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    let d = decompose(&p, &t.basis_element(1)).unwrap();
    assert_eq!(d.alpha, rat(1, 4));
    assert_eq!(d.comp_00, el(&[(-1, 4), (1, 2), (1, 2)]));
    assert!(d.comp_l0.is_zero());
    assert!(d.comp_0d.is_zero());
    assert_eq!(d.comp_ld, el(&[(0, 1), (1, 2), (-1, 2)]));
    assert_eq!(d.component(Grade::MinusMinus), Some(&d.comp_ld));
}

#[test]
fn decompose_requires_axis() {
    let t = matrix_unit_algebra(2).unwrap();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    assert!(decompose(&p, &t.basis_element(1)).is_err());
}

#[test]
fn fusion_passes_on_examples() {
    for t in [dim2(), matsuo_line()] {
        for i in 0..t.dim() {
            let p = classify_axis(&t, &t.basis_element(i)).unwrap();
            let report = check_fusion(&t, &p).unwrap();
            assert!(report.all_passed(), "{report}");
            assert_eq!(report.len(), 16);
        }
    }
}

#[test]
fn fusion_detects_corruption() {
    // a z must stay in the -- part; break it by changing a*b.
    let t = dim2();
    let a = t.basis_element(0);
    let p = classify_axis(&t, &a).unwrap();
    let bad = t.perturbed(0, 1, 1, &int(1));
    let report = check_fusion(&bad, &p).unwrap();
    assert!(!report.all_passed());
    assert!(report.failures().all(|e| !e.residual.is_zero()));
}

#[test]
fn frame_dim2() {
    let t = dim2();
    let (a, b) = (t.basis_element(0), t.basis_element(1));
    let f = build_frame(&t, &a, &b).unwrap();
    assert_eq!(f.alpha_b, int(1));
    assert_eq!(f.beta_a, int(1));
    assert_eq!(f.z, &b - &a);
    assert_eq!(f.z_prime, &a - &b);
    for v in [&f.c, &f.x, &f.y, &f.c_prime, &f.x_prime, &f.y_prime] {
        assert!(v.is_zero());
    }
    assert!(f.spans_from_a && f.spans_from_b);
    assert_eq!(f.closure_dim(), 2);
}

#[test]
fn frame_rejects_equal_generators() {
    let t = dim2();
    let a = t.basis_element(0);
    assert!(build_frame(&t, &a, &a).is_err());
}

#[test]
fn frame_rejects_non_axis() {
    let t = matrix_unit_algebra(2).unwrap();
    assert!(build_frame(&t, &t.basis_element(0), &t.basis_element(3)).is_err());
}

#[test]
fn frame_matsuo_line() {
    let t = matsuo_line();
    let (a, b) = (t.basis_element(0), t.basis_element(1));
    let f = build_frame(&t, &a, &b).unwrap();
    assert_eq!(f.alpha_b, rat(1, 4));
    assert_eq!(f.beta_a, rat(1, 4));
    assert_eq!(f.c, el(&[(-1, 4), (1, 2), (1, 2)]));
    assert!(f.x.is_zero() && f.y.is_zero());
    assert_eq!(f.z, el(&[(0, 1), (1, 2), (-1, 2)]));
    assert_eq!(f.c_prime, el(&[(1, 2), (-1, 4), (1, 2)]));
    assert_eq!(f.z_prime, el(&[(1, 2), (0, 1), (-1, 2)]));
    assert!(f.spans_from_a && f.spans_from_b);
    assert_eq!(f.closure_dim(), 3);
    let s = f.swapped();
    assert_eq!(s.a(), &b);
    assert_eq!(s.c, f.c_prime);
}

#[test]
fn scan_finds_basis_axes() {
    let t = matsuo_line();
    let found = find_idempotents(&t, &[int(0), int(1), int(-1)], &[], 1000).unwrap();
    for i in 0..3 {
        assert!(found.contains(&t.basis_element(i)));
    }
    assert!(found.iter().all(|e| t.multiply(e, e).unwrap() == *e));
    assert!(find_idempotents(&t, &[int(0), int(1)], &[], 2).is_err());
}

#[test]
fn profile_summary_serializes_rationals_as_strings() {
    let t = dim2();
    let p = classify_axis(&t, &t.basis_element(0)).unwrap();
    let v = serde_json::to_value(p.summary()).unwrap();
    assert_eq!(v["lambda"], "1/3");
    assert_eq!(v["delta"], "2/3");
    assert_eq!(v["jordan_type"], true);
}
