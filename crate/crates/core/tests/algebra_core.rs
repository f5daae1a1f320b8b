use axial_core::constructions::{matrix_unit_algebra, FischerSpace};
use axial_core::rational::int;
use axial_core::{
    dim2_algebra, eigenspace, matsuo_algebra, minimal_polynomial, rat, subalgebra_closure,
    two_sided_eigenspace, AlgebraTable, Element, Error, Matrix, Polynomial,
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
fn multiply_dim2_ab() {
    let t = dim2();
    let ab = t
        .multiply(&t.basis_element(0), &t.basis_element(1))
        .unwrap();
    assert_eq!(ab, el(&[(2, 3), (1, 3)]));
}

#[test]
fn multiply_idempotent_basis_axis() {
    for t in [dim2(), matsuo_line()] {
        for i in 0..t.dim() {
            let a = t.basis_element(i);
            assert_eq!(t.multiply(&a, &a).unwrap(), a);
        }
    }
}

#[test]
fn multiply_matsuo_line_ab() {
    let t = matsuo_line();
    let ab = t
        .multiply(&t.basis_element(0), &t.basis_element(1))
        .unwrap();
    assert_eq!(ab, el(&[(1, 4), (1, 4), (-1, 4)]));
}

#[test]
fn multiply_dimension_mismatch() {
    let t = dim2();
    let err = t
        .multiply(&Element::zero(3), &t.basis_element(0))
        .unwrap_err();
    assert!(matches!(
        err,
        Error::DimensionMismatch {
            expected: 2,
            found: 3
        }
    ));
}

#[test]
fn left_operator_dim2_columns() {
    let t = dim2();
    let l = t.left_operator(&t.basis_element(0)).unwrap();
    assert_eq!(l.column(0), vec![int(1), int(0)]);
    assert_eq!(l.column(1), vec![rat(2, 3), rat(1, 3)]);
    let r = t.right_operator(&t.basis_element(0)).unwrap();
    assert_eq!(r.column(1), vec![rat(1, 3), rat(2, 3)]);
}

#[test]
fn operator_of_zero_is_zero() {
    let t = matsuo_line();
    assert!(t.left_operator(&Element::zero(3)).unwrap().is_zero());
    assert!(t.right_operator(&Element::zero(3)).unwrap().is_zero());
}

#[test]
fn left_operator_fixes_idempotent() {
    let t = matsuo_line();
    let a = t.basis_element(2);
    assert_eq!(t.left_operator(&a).unwrap().apply(&a.0), a.0);
}

#[test]
fn minimal_polynomial_identity_and_zero() {
    assert_eq!(
        minimal_polynomial(&Matrix::identity(4)),
        Polynomial::linear(&int(1))
    );
    assert_eq!(
        minimal_polynomial(&Matrix::zeros(3, 3)),
        Polynomial::linear(&int(0))
    );
}

#[test]
fn minimal_polynomial_dim2_left_operator() {
    let t = dim2();
    let l = t.left_operator(&t.basis_element(0)).unwrap();
    assert_eq!(
        minimal_polynomial(&l),
        Polynomial::from_roots(&[int(1), rat(1, 3)])
    );
}

#[test]
fn eigenspace_examples() {
    assert!(eigenspace(&Matrix::identity(3), &int(1)).is_full());
    let t = dim2();
    let l = t.left_operator(&t.basis_element(0)).unwrap();
    let e = eigenspace(&l, &rat(1, 3));
    assert_eq!(e.dim(), 1);
    assert!(e.contains(&[int(-1), int(1)]));
    let one = eigenspace(&l, &int(1));
    assert_eq!(one.dim(), 1);
    assert!(one.contains(&[int(1), int(0)]));
}

#[test]
fn two_sided_eigenspace_examples() {
    let t = dim2();
    let a = t.basis_element(0);
    let a11 = two_sided_eigenspace(&t, &a, &int(1), &int(1)).unwrap();
    assert_eq!(a11.dim(), 1);
    assert!(a11.contains(&a.0));
    assert!(two_sided_eigenspace(&t, &a, &rat(1, 3), &int(0))
        .unwrap()
        .is_zero());
    assert_eq!(
        two_sided_eigenspace(&t, &a, &rat(1, 3), &rat(2, 3))
            .unwrap()
            .dim(),
        1
    );

    let m = matrix_unit_algebra(2).unwrap();
    let e11 = m.basis_element(0);
    assert!(
        two_sided_eigenspace(&m, &e11, &int(1), &int(1))
            .unwrap()
            .dim()
            >= 1
    );
    assert_eq!(
        eigenspace(&m.left_operator(&e11).unwrap(), &int(1)).dim(),
        2
    );
}

#[test]
fn closure_examples() {
    let t = dim2();
    let c = subalgebra_closure(&t, &[t.basis_element(0), t.basis_element(1)]).unwrap();
    assert_eq!(c.dim(), 2);
    let single = subalgebra_closure(&t, &[t.basis_element(0)]).unwrap();
    assert_eq!(single.dim(), 1);
    let m = matsuo_line();
    let c = subalgebra_closure(&m, &[m.basis_element(0), m.basis_element(1)]).unwrap();
    assert_eq!(c.dim(), 3);
    assert_eq!(c.table.as_ref().map(AlgebraTable::dim), Some(3));
    let zero = subalgebra_closure(&m, &[Element::zero(3)]).unwrap();
    assert_eq!(zero.dim(), 0);
    assert!(zero.table.is_none());
}

#[test]
fn closure_rejects_empty_and_mismatched() {
    let t = dim2();
    assert!(subalgebra_closure(&t, &[]).is_err());
    assert!(subalgebra_closure(&t, &[Element::zero(5)]).is_err());
}

#[test]
fn json_round_trip() {
    let t = matsuo_line();
    let back = AlgebraTable::from_json_str(&t.to_json_string()).unwrap();
    assert_eq!(back, t);
}

#[test]
fn json_omitted_products_are_zero() {
    let text = r#"{"dim":2,"basis":["e","f"],"products":[{"i":0,"j":0,"coeffs":["1","0"]}]}"#;
    let t = AlgebraTable::from_json_str(text).unwrap();
    assert!(t
        .multiply(&t.basis_element(1), &t.basis_element(1))
        .unwrap()
        .is_zero());
    assert_eq!(t.label_index("f"), Some(1));
}

#[test]
fn json_input_errors() {
    let cases = [
        // duplicate (i, j)
        r#"{"dim":1,"basis":["e"],"products":[{"i":0,"j":0,"coeffs":["1"]},{"i":0,"j":0,"coeffs":["1"]}]}"#,
        // wrong coefficient count
        r#"{"dim":2,"basis":["e","f"],"products":[{"i":0,"j":0,"coeffs":["1"]}]}"#,
        // index out of range
        r#"{"dim":1,"basis":["e"],"products":[{"i":0,"j":1,"coeffs":["1"]}]}"#,
        // label count
        r#"{"dim":2,"basis":["e"],"products":[]}"#,
        // bad rational
        r#"{"dim":1,"basis":["e"],"products":[{"i":0,"j":0,"coeffs":["1/0"]}]}"#,
        // unknown field
        r#"{"dim":1,"basis":["e"],"products":[],"extra":1}"#,
        // zero dimension
        r#"{"dim":0,"basis":[],"products":[]}"#,
        "not json",
    ];
    for text in cases {
        assert!(
            AlgebraTable::from_json_str(text).is_err(),
            "accepted {text}"
        );
    }
}

#[test]
fn load_missing_file_names_path() {
    let err = AlgebraTable::load("/nonexistent/table.json").unwrap_err();
    assert!(err.to_string().contains("/nonexistent/table.json"));
}
