use std::ffi::{c_char, CStr, CString};
use std::ptr;

use axial_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a returned string.
unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    axial_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = axial_last_error_message();
    assert!(!p.is_null(), "an error message is set");
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

unsafe fn dim2(lambda: &str) -> *mut AxialAlgebra {
    let mut a = ptr::null_mut();
    assert_eq!(
        axial_algebra_dim2(c(lambda).as_ptr(), &mut a),
        AxialStatus::Ok
    );
    a
}

unsafe fn matsuo_line() -> *mut AxialAlgebra {
    let mut space = ptr::null_mut();
    assert_eq!(
        axial_fischer_space_builtin(c("line").as_ptr(), &mut space),
        AxialStatus::Ok
    );
    let space = c(&take(space));
    let mut a = ptr::null_mut();
    assert_eq!(
        axial_algebra_matsuo(space.as_ptr(), c("1/2").as_ptr(), &mut a),
        AxialStatus::Ok
    );
    a
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(axial_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn dim2_classifies() {
    unsafe {
        let a = dim2("1/3");
        assert_eq!(axial_algebra_dim(a), 2);
        let mut p = ptr::null_mut();
        assert_eq!(
            axial_classify(a, c("[1, 0]").as_ptr(), &mut p),
            AxialStatus::Ok
        );
        assert!(axial_last_error_message().is_null());
        assert!(axial_profile_is_primitive_axis(p));
        assert!(axial_profile_is_jordan_type(p));
        let mut s = ptr::null_mut();
        assert_eq!(axial_profile_lambda(p, &mut s), AxialStatus::Ok);
        assert_eq!(take(s), "1/3");
        assert_eq!(axial_profile_delta(p, &mut s), AxialStatus::Ok);
        assert_eq!(take(s), "2/3");
        assert_eq!(axial_profile_to_json(p, &mut s), AxialStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["primitive_axis"], true);
        axial_profile_free(p);
        axial_algebra_free(a);
    }
}

#[test]
fn json_round_trip_and_multiply() {
    unsafe {
        let a = dim2("-2");
        let mut s = ptr::null_mut();
        assert_eq!(axial_algebra_to_json(a, &mut s), AxialStatus::Ok);
        let json = c(&take(s));
        let mut b = ptr::null_mut();
        assert_eq!(
            axial_algebra_from_json(json.as_ptr(), &mut b),
            AxialStatus::Ok
        );
        assert_eq!(axial_algebra_dim(b), 2);
        // a * a = a, with coefficients given as strings or integers.
        assert_eq!(
            axial_algebra_multiply(
                b,
                c("[\"1\", 0]").as_ptr(),
                c("[1, \"0\"]").as_ptr(),
                &mut s
            ),
            AxialStatus::Ok
        );
        assert_eq!(take(s), r#"["1","0"]"#);
        axial_algebra_free(a);
        axial_algebra_free(b);
    }
}

#[test]
fn closure_and_verify() {
    unsafe {
        let a = matsuo_line();
        let mut d = 0usize;
        assert_eq!(
            axial_closure_dim(a, c("[[1,0,0],[0,1,0]]").as_ptr(), &mut d),
            AxialStatus::Ok
        );
        assert_eq!(d, 3);
        let mut r = ptr::null_mut();
        assert_eq!(axial_verify(a, ptr::null(), &mut r), AxialStatus::Ok);
        assert!(axial_report_len(r) > 0);
        assert_eq!(axial_report_failure_count(r), 0);
        assert!(axial_report_all_passed(r));
        let mut s = ptr::null_mut();
        assert_eq!(axial_report_to_json(r, &mut s), AxialStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), axial_report_len(r));
        axial_report_free(r);
        axial_algebra_free(a);
    }
}

#[test]
fn corrupted_table_fails_verification() {
    unsafe {
        let a = dim2("1/3");
        let mut s = ptr::null_mut();
        axial_algebra_to_json(a, &mut s);
        let mut v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        v["products"][0]["coeffs"][0] = serde_json::json!("2");
        let mut b = ptr::null_mut();
        let text = c(&v.to_string());
        assert_eq!(
            axial_algebra_from_json(text.as_ptr(), &mut b),
            AxialStatus::Ok
        );
        let mut r = ptr::null_mut();
        assert_eq!(
            axial_verify(b, c("[[1,0],[0,1]]").as_ptr(), &mut r),
            AxialStatus::Ok
        );
        assert!(!axial_report_all_passed(r));
        assert!(axial_report_failure_count(r) > 0);
        axial_report_free(r);
        axial_algebra_free(a);
        axial_algebra_free(b);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(
            axial_algebra_dim2(ptr::null(), &mut a),
            AxialStatus::NullPointer
        );
        assert!(a.is_null());
        assert_eq!(
            axial_algebra_dim2(c("1").as_ptr(), &mut a),
            AxialStatus::InvalidArgument
        );
        assert!(last_error().contains("lambda"));
        assert_eq!(
            axial_algebra_dim2(c("1/0").as_ptr(), &mut a),
            AxialStatus::ParseError
        );
        assert_eq!(
            axial_algebra_dim2(c("1/3").as_ptr(), ptr::null_mut()),
            AxialStatus::NullPointer
        );
        assert_eq!(
            axial_algebra_from_json(c("{").as_ptr(), &mut a),
            AxialStatus::ParseError
        );
        assert!(last_error().starts_with("malformed JSON"));

        let t = dim2("1/3");
        let mut p = ptr::null_mut();
        assert_eq!(
            axial_classify(t, c("[1]").as_ptr(), &mut p),
            AxialStatus::DimensionMismatch
        );
        assert_eq!(
            axial_classify(t, c("[\"1/2\", 0]").as_ptr(), &mut p),
            AxialStatus::NotIdempotent
        );
        assert_eq!(
            axial_classify(t, c("{}").as_ptr(), &mut p),
            AxialStatus::ParseError
        );
        assert_eq!(
            axial_classify(ptr::null(), c("[1,0]").as_ptr(), &mut p),
            AxialStatus::NullPointer
        );
        assert!(p.is_null());

        let mut s = ptr::null_mut();
        assert_eq!(
            axial_fischer_space_builtin(c("fano").as_ptr(), &mut s),
            AxialStatus::NotFound
        );
        assert!(s.is_null());
        let mut r = ptr::null_mut();
        assert_eq!(
            axial_verify(t, c("[[1,0]]").as_ptr(), &mut r),
            AxialStatus::Ok
        );
        axial_report_free(r);
        axial_algebra_free(t);
    }
}

#[test]
fn absent_eigenvalue_is_not_found() {
    unsafe {
        // In the one-dimensional field the identity has no lambda.
        let mut a = ptr::null_mut();
        let json = c(r#"{"dim":1,"basis":["e"],"products":[{"i":0,"j":0,"coeffs":["1"]}]}"#);
        assert_eq!(
            axial_algebra_from_json(json.as_ptr(), &mut a),
            AxialStatus::Ok
        );
        let mut p = ptr::null_mut();
        assert_eq!(
            axial_classify(a, c("[1]").as_ptr(), &mut p),
            AxialStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(axial_profile_lambda(p, &mut s), AxialStatus::NotFound);
        assert!(s.is_null());
        axial_profile_free(p);
        axial_algebra_free(a);
    }
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        axial_algebra_free(ptr::null_mut());
        axial_profile_free(ptr::null_mut());
        axial_report_free(ptr::null_mut());
        axial_string_free(ptr::null_mut());
        assert_eq!(axial_algebra_dim(ptr::null()), 0);
        assert!(!axial_profile_is_primitive_axis(ptr::null()));
        assert!(!axial_report_all_passed(ptr::null()));
        assert_eq!(axial_report_len(ptr::null()), 0);
    }
}

#[test]
fn errors_are_thread_local() {
    unsafe {
        let mut a = ptr::null_mut();
        axial_algebra_dim2(c("1").as_ptr(), &mut a);
        std::thread::spawn(|| assert!(axial_last_error_message().is_null()))
            .join()
            .unwrap();
        assert!(!axial_last_error_message().is_null());
    }
}
