//! Classification of idempotents as primitive axes.
//!
//! An idempotent `a` is a left axis of type `lambda` when the minimal
//! polynomial of `L_a` divides `t(t-1)(t-lambda)`, and primitive when its
//! 1-eigenspace is `F a`; right axes are defined with `R_a` and `delta`.
//! A two-sided primitive axis additionally has commuting `L_a`, `R_a`, and
//! the algebra splits as
//!
//! ```text
//! A = A_{1,1} + A_{0,0} + A_{0,delta} + A_{lambda,0} + A_{lambda,delta}
//!     \____ ++ ______/    \__ +- __/    \__ -+ ___/    \____ -- ____/
//! ```
//!
//! which is a `Z2 x Z2` grading when the fusion rules hold.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{closure_space, AlgebraTable, Element};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{minimal_polynomial, Polynomial};
use crate::rational::{format_rational, Rational};
use crate::report::{Entry, VerificationReport};

pub fn is_idempotent(table: &AlgebraTable, a: &Element) -> Result<bool> {
    Ok(table.multiply(a, a)? == *a)
}

/// Null space of `m - mu I`.
pub fn eigenspace(m: &Matrix, mu: &Rational) -> Subspace {
    m.shift(mu).null_space()
}

/// `A_mu(L_a) ∩ A_nu(R_a)`.
pub fn two_sided_eigenspace(
    table: &AlgebraTable,
    a: &Element,
    mu: &Rational,
    nu: &Rational,
) -> Result<Subspace> {
    let l = table.left_operator(a)?;
    let r = table.right_operator(a)?;
    Ok(l.shift(mu).vstack(&r.shift(nu)).null_space())
}

/// Reads the axis eigenvalue off a minimal polynomial: `Some(None)` when it
/// divides `t(t-1)`, `Some(Some(lambda))` when it divides `t(t-1)(t-lambda)`
/// with `lambda` outside `{0, 1}`, `None` otherwise.
pub fn axis_eigenvalue(min_poly: &Polynomial) -> Option<Option<Rational>> {
    let mut rest = min_poly.monic();
    for root in [Rational::zero(), Rational::one()] {
        let (q, r) = rest.div_rem(&Polynomial::linear(&root));
        if r.is_zero() {
            rest = q;
        }
    }
    match rest.degree()? {
        0 => Some(None),
        1 => {
            let lambda = -rest.coeffs()[0].clone();
            (!lambda.is_zero() && !lambda.is_one()).then_some(Some(lambda))
        }
        _ => None,
    }
}

/// The graded pieces, labeled by (left sign, right sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Grade {
    /// `A_{1,1} + A_{0,0}`
    PlusPlus,
    /// `A_{0,delta}`
    PlusMinus,
    /// `A_{lambda,0}`
    MinusPlus,
    /// `A_{lambda,delta}`
    MinusMinus,
}

impl Grade {
    pub const ALL: [Grade; 4] = [
        Grade::PlusPlus,
        Grade::PlusMinus,
        Grade::MinusPlus,
        Grade::MinusMinus,
    ];

    fn signs(self) -> (bool, bool) {
        match self {
            Grade::PlusPlus => (false, false),
            Grade::PlusMinus => (false, true),
            Grade::MinusPlus => (true, false),
            Grade::MinusMinus => (true, true),
        }
    }

    fn from_signs(left: bool, right: bool) -> Grade {
        match (left, right) {
            (false, false) => Grade::PlusPlus,
            (false, true) => Grade::PlusMinus,
            (true, false) => Grade::MinusPlus,
            (true, true) => Grade::MinusMinus,
        }
    }

    /// Grade of a product under the fusion rules.
    pub fn product(self, other: Grade) -> Grade {
        let (l1, r1) = self.signs();
        let (l2, r2) = other.signs();
        Grade::from_signs(l1 ^ l2, r1 ^ r2)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::PlusPlus => "++",
            Grade::PlusMinus => "+-",
            Grade::MinusPlus => "-+",
            Grade::MinusMinus => "--",
        })
    }
}

/// The five two-sided eigenspaces of an idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSpaces {
    pub one_one: Subspace,
    pub zero_zero: Subspace,
    /// `A_{lambda,0}`; zero when lambda is absent.
    pub lambda_zero: Subspace,
    /// `A_{0,delta}`; zero when delta is absent.
    pub zero_delta: Subspace,
    /// `A_{lambda,delta}`; zero when either is absent.
    pub lambda_delta: Subspace,
}

impl EigenSpaces {
    fn in_order(&self) -> [&Subspace; 5] {
        [
            &self.one_one,
            &self.zero_zero,
            &self.lambda_zero,
            &self.zero_delta,
            &self.lambda_delta,
        ]
    }

    pub fn dims(&self) -> [usize; 5] {
        self.in_order().map(Subspace::dim)
    }

    /// Basis of the graded piece.
    pub fn grade_basis(&self, grade: Grade) -> Vec<Element> {
        let spaces: &[&Subspace] = match grade {
            Grade::PlusPlus => &[&self.one_one, &self.zero_zero],
            Grade::PlusMinus => &[&self.zero_delta],
            Grade::MinusPlus => &[&self.lambda_zero],
            Grade::MinusMinus => &[&self.lambda_delta],
        };
        spaces
            .iter()
            .flat_map(|s| s.basis().iter().cloned().map(Element))
            .collect()
    }

    /// Projections onto the five spaces along the others, or `None` when the
    /// spaces do not form a direct sum decomposition of the ambient space.
    pub fn projections(&self) -> Option<Projections> {
        let n = self.one_one.ambient();
        let spaces = self.in_order();
        let columns: Vec<Vec<Rational>> = spaces
            .iter()
            .flat_map(|s| s.basis().iter().cloned())
            .collect();
        if columns.len() != n {
            return None;
        }
        let basis = Matrix::from_columns(n, &columns);
        let inverse = basis.inverse()?;
        let mut start = 0;
        let projectors = spaces.map(|s| {
            let range = start..start + s.dim();
            start += s.dim();
            let mut p = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Rational::zero();
                    for k in range.clone() {
                        acc += &basis[(i, k)] * &inverse[(k, j)];
                    }
                    p[(i, j)] = acc;
                }
            }
            p
        });
        let [one_one, zero_zero, lambda_zero, zero_delta, lambda_delta] = projectors;
        Some(Projections {
            one_one,
            zero_zero,
            lambda_zero,
            zero_delta,
            lambda_delta,
        })
    }
}

/// Projection matrices for the two-sided decomposition.
#[derive(Debug, Clone)]
pub struct Projections {
    pub one_one: Matrix,
    pub zero_zero: Matrix,
    pub lambda_zero: Matrix,
    pub zero_delta: Matrix,
    pub lambda_delta: Matrix,
}

impl Projections {
    pub fn grade(&self, grade: Grade) -> Matrix {
        match grade {
            Grade::PlusPlus => self.one_one.add(&self.zero_zero),
            Grade::PlusMinus => self.zero_delta.clone(),
            Grade::MinusPlus => self.lambda_zero.clone(),
            Grade::MinusMinus => self.lambda_delta.clone(),
        }
    }

    /// `sum_g sign(g) P_g` with the given sign for each graded piece.
    pub fn signed_sum(&self, negate: impl Fn(Grade) -> bool) -> Matrix {
        let n = self.one_one.rows();
        Grade::ALL.iter().fold(Matrix::zeros(n, n), |acc, &g| {
            if negate(g) {
                acc.sub(&self.grade(g))
            } else {
                acc.add(&self.grade(g))
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct AxisProfile {
    pub axis: Element,
    pub left_min_poly: Polynomial,
    pub right_min_poly: Polynomial,
    /// Minimal polynomial of `L_a` divides `t(t-1)(t-lambda)`.
    pub left_axis: bool,
    pub right_axis: bool,
    pub lambda: Option<Rational>,
    pub delta: Option<Rational>,
    pub primitive_left: bool,
    pub primitive_right: bool,
    pub operators_commute: bool,
    pub spaces: EigenSpaces,
    pub direct_sum: bool,
    /// Primitive two-sided axis with `A_{lambda,0} = A_{0,delta} = 0`. The
    /// usual statement writes the second space as `A_{0,lambda}`; for an
    /// axis of type `(lambda, delta)` the right-side space is the one meant.
    pub jordan_type: bool,
    /// Projections together with the spaces they were computed from, so a
    /// caller editing `spaces` never sees stale matrices.
    projection_cache: OnceLock<(EigenSpaces, Option<Projections>)>,
}

impl AxisProfile {
    pub fn dim(&self) -> usize {
        self.axis.dim()
    }

    pub fn is_primitive_axis(&self) -> bool {
        self.failure().is_none()
    }

    /// First reason the idempotent is not a primitive two-sided axis.
    pub fn failure(&self) -> Option<&'static str> {
        if self.axis.is_zero() {
            Some("zero element")
        } else if !self.left_axis {
            Some("L_a does not satisfy t(t-1)(t-lambda)")
        } else if !self.right_axis {
            Some("R_a does not satisfy t(t-1)(t-delta)")
        } else if !self.primitive_left {
            Some("left 1-eigenspace is not F a")
        } else if !self.primitive_right {
            Some("right 1-eigenspace is not F a")
        } else if !self.operators_commute {
            Some("L_a and R_a do not commute")
        } else if !self.direct_sum {
            Some("two-sided eigenspaces do not decompose the algebra")
        } else {
            None
        }
    }

    pub fn require_axis(&self) -> Result<()> {
        match self.failure() {
            None => Ok(()),
            Some(reason) => Err(Error::NotAxis(reason.into())),
        }
    }

    /// Projection matrices; fails unless the five spaces decompose the algebra.
    pub fn projections(&self) -> Result<Projections> {
        let (spaces, cached) = self
            .projection_cache
            .get_or_init(|| (self.spaces.clone(), self.spaces.projections()));
        let fresh;
        let proj = if *spaces == self.spaces {
            cached
        } else {
            fresh = self.spaces.projections();
            &fresh
        };
        proj.clone().ok_or_else(|| {
            Error::NotAxis("two-sided eigenspaces do not decompose the algebra".into())
        })
    }

    /// `(lambda, delta)` as printed, `-` for an absent eigenvalue.
    pub fn type_string(&self) -> String {
        let show = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), format_rational);
        format!("({}, {})", show(&self.lambda), show(&self.delta))
    }

    pub fn summary(&self) -> ProfileSummary {
        let dims = self.spaces.dims();
        ProfileSummary {
            axis: self.axis.to_strings(),
            lambda: self.lambda.as_ref().map(format_rational),
            delta: self.delta.as_ref().map(format_rational),
            left_min_poly: self.left_min_poly.to_string(),
            right_min_poly: self.right_min_poly.to_string(),
            left_axis: self.left_axis,
            right_axis: self.right_axis,
            primitive_left: self.primitive_left,
            primitive_right: self.primitive_right,
            operators_commute: self.operators_commute,
            direct_sum: self.direct_sum,
            primitive_axis: self.is_primitive_axis(),
            jordan_type: self.jordan_type,
            space_dims: SpaceDims {
                one_one: dims[0],
                zero_zero: dims[1],
                lambda_zero: dims[2],
                zero_delta: dims[3],
                lambda_delta: dims[4],
            },
        }
    }
}

/// Serializable view of a profile, rationals as strings.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileSummary {
    pub axis: Vec<String>,
    pub lambda: Option<String>,
    pub delta: Option<String>,
    pub left_min_poly: String,
    pub right_min_poly: String,
    pub left_axis: bool,
    pub right_axis: bool,
    pub primitive_left: bool,
    pub primitive_right: bool,
    pub operators_commute: bool,
    pub direct_sum: bool,
    pub primitive_axis: bool,
    pub jordan_type: bool,
    pub space_dims: SpaceDims,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpaceDims {
    pub one_one: usize,
    pub zero_zero: usize,
    pub lambda_zero: usize,
    pub zero_delta: usize,
    pub lambda_delta: usize,
}

/// Classifies an idempotent. Failing to be an axis is recorded in the
/// profile; only a non-idempotent input is an error.
pub fn classify_axis(table: &AlgebraTable, a: &Element) -> Result<AxisProfile> {
    check_dim(table.dim(), a.dim())?;
    if !is_idempotent(table, a)? {
        return Err(Error::NotIdempotent);
    }
    let n = table.dim();
    let l = table.left_operator(a)?;
    let r = table.right_operator(a)?;
    let left_min_poly = minimal_polynomial(&l);
    let right_min_poly = minimal_polynomial(&r);
    let left = axis_eigenvalue(&left_min_poly);
    let right = axis_eigenvalue(&right_min_poly);
    let lambda = left.clone().flatten();
    let delta = right.clone().flatten();

    let one = Rational::one();
    let zero = Rational::zero();
    let is_fa = |s: &Subspace| s.dim() == 1 && s.contains(&a.0);
    let primitive_left = is_fa(&eigenspace(&l, &one));
    let primitive_right = is_fa(&eigenspace(&r, &one));
    let operators_commute = l.mul(&r) == r.mul(&l);

    let stacked = |mu: &Rational, nu: &Rational| l.shift(mu).vstack(&r.shift(nu)).null_space();
    let spaces = EigenSpaces {
        one_one: stacked(&one, &one),
        zero_zero: stacked(&zero, &zero),
        lambda_zero: lambda
            .as_ref()
            .map_or_else(|| Subspace::zero(n), |lam| stacked(lam, &zero)),
        zero_delta: delta
            .as_ref()
            .map_or_else(|| Subspace::zero(n), |del| stacked(&zero, del)),
        lambda_delta: match (&lambda, &delta) {
            (Some(lam), Some(del)) => stacked(lam, del),
            _ => Subspace::zero(n),
        },
    };
    let projections = spaces.projections();
    let spaces_copy = spaces.clone();
    let direct_sum = projections.is_some();

    let mut profile = AxisProfile {
        axis: a.clone(),
        left_min_poly,
        right_min_poly,
        left_axis: left.is_some(),
        right_axis: right.is_some(),
        lambda,
        delta,
        primitive_left,
        primitive_right,
        operators_commute,
        spaces,
        direct_sum,
        jordan_type: false,
        projection_cache: OnceLock::from((spaces_copy, projections)),
    };
    profile.jordan_type = profile.is_primitive_axis()
        && profile.spaces.lambda_zero.is_zero()
        && profile.spaces.zero_delta.is_zero();
    Ok(profile)
}

/// `v = alpha a + v_00 + v_l0 + v_0d + v_ld`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedDecomposition {
    pub alpha: Rational,
    pub comp_00: Element,
    pub comp_l0: Element,
    pub comp_0d: Element,
    pub comp_ld: Element,
}

impl TwoSidedDecomposition {
    pub fn reconstruct(&self, axis: &Element) -> Element {
        let sum = &(&(&self.comp_00 + &self.comp_l0) + &self.comp_0d) + &self.comp_ld;
        axis.axpy(&self.alpha, &sum)
    }

    pub fn component(&self, grade: Grade) -> Option<&Element> {
        match grade {
            Grade::PlusPlus => None,
            Grade::PlusMinus => Some(&self.comp_0d),
            Grade::MinusPlus => Some(&self.comp_l0),
            Grade::MinusMinus => Some(&self.comp_ld),
        }
    }
}

pub fn decompose(profile: &AxisProfile, v: &Element) -> Result<TwoSidedDecomposition> {
    check_dim(profile.dim(), v.dim())?;
    profile.require_axis()?;
    let p = profile.projections()?;
    let on_axis = Element(p.one_one.apply(&v.0));
    let pivot = profile
        .axis
        .0
        .iter()
        .position(|c| !c.is_zero())
        .expect("axis is nonzero");
    let alpha = &on_axis.0[pivot] / &profile.axis.0[pivot];
    let decomposition = TwoSidedDecomposition {
        alpha,
        comp_00: Element(p.zero_zero.apply(&v.0)),
        comp_l0: Element(p.lambda_zero.apply(&v.0)),
        comp_0d: Element(p.zero_delta.apply(&v.0)),
        comp_ld: Element(p.lambda_delta.apply(&v.0)),
    };
    assert_eq!(
        decomposition.reconstruct(&profile.axis),
        *v,
        "decomposition does not reconstruct its input"
    );
    Ok(decomposition)
}

/// Checks that products of graded pieces land in the product grade. Every
/// violated pair of basis vectors is an entry; each pair of grades without a
/// violation gets one passing entry.
pub fn check_fusion(table: &AlgebraTable, profile: &AxisProfile) -> Result<VerificationReport> {
    check_dim(table.dim(), profile.dim())?;
    let proj = profile.projections()?;
    let mut report = VerificationReport::new();
    for g1 in Grade::ALL {
        let left = profile.spaces.grade_basis(g1);
        for g2 in Grade::ALL {
            let right = profile.spaces.grade_basis(g2);
            let target = g1.product(g2);
            let keep = proj.grade(target);
            let mut clean = true;
            for (i, u) in left.iter().enumerate() {
                for (j, v) in right.iter().enumerate() {
                    let p = table.mul(u, v);
                    let residual = &p - &Element(keep.apply(&p.0));
                    if !residual.is_zero() {
                        clean = false;
                        report.push(Entry::check(
                            format!("fusion[{g1}*{g2}]({i},{j})"),
                            residual,
                        ));
                    }
                }
            }
            if clean {
                report.push(
                    Entry::check(format!("fusion[{g1}*{g2}]"), Element::zero(table.dim()))
                        .with_note(format!(
                            "{} x {} products in {target}",
                            left.len(),
                            right.len()
                        )),
                );
            }
        }
    }
    Ok(report)
}

/// Two primitive axes `a`, `b` with each decomposed over the other:
/// `b = alpha_b a + c + x + y + z`, `a = beta_a b + c' + x' + y' + z'`.
#[derive(Debug, Clone)]
pub struct TwoGeneratedFrame {
    pub profile_a: AxisProfile,
    pub profile_b: AxisProfile,
    pub alpha_b: Rational,
    pub beta_a: Rational,
    pub c: Element,
    pub x: Element,
    pub y: Element,
    pub z: Element,
    pub c_prime: Element,
    pub x_prime: Element,
    pub y_prime: Element,
    pub z_prime: Element,
    /// The subalgebra generated by `a` and `b`.
    pub closure: Subspace,
    /// `span(a, c, x, y, z)` equals the closure.
    pub spans_from_a: bool,
    /// `span(b, c', x', y', z')` equals the closure.
    pub spans_from_b: bool,
}

impl TwoGeneratedFrame {
    pub fn a(&self) -> &Element {
        &self.profile_a.axis
    }

    pub fn b(&self) -> &Element {
        &self.profile_b.axis
    }

    pub fn dim(&self) -> usize {
        self.a().dim()
    }

    pub fn closure_dim(&self) -> usize {
        self.closure.dim()
    }

    /// Type of `a`; both eigenvalues present for every frame.
    pub fn lambda(&self) -> &Rational {
        self.profile_a
            .lambda
            .as_ref()
            .expect("frame axes carry both eigenvalues")
    }

    pub fn delta(&self) -> &Rational {
        self.profile_a
            .delta
            .as_ref()
            .expect("frame axes carry both eigenvalues")
    }

    pub fn lambda_prime(&self) -> &Rational {
        self.profile_b
            .lambda
            .as_ref()
            .expect("frame axes carry both eigenvalues")
    }

    pub fn delta_prime(&self) -> &Rational {
        self.profile_b
            .delta
            .as_ref()
            .expect("frame axes carry both eigenvalues")
    }

    pub fn swapped(&self) -> TwoGeneratedFrame {
        TwoGeneratedFrame {
            profile_a: self.profile_b.clone(),
            profile_b: self.profile_a.clone(),
            alpha_b: self.beta_a.clone(),
            beta_a: self.alpha_b.clone(),
            c: self.c_prime.clone(),
            x: self.x_prime.clone(),
            y: self.y_prime.clone(),
            z: self.z_prime.clone(),
            c_prime: self.c.clone(),
            x_prime: self.x.clone(),
            y_prime: self.y.clone(),
            z_prime: self.z.clone(),
            closure: self.closure.clone(),
            spans_from_a: self.spans_from_b,
            spans_from_b: self.spans_from_a,
        }
    }
}

/// Builds the frame of two distinct primitive two-sided axes.
///
/// Both axes must carry both eigenvalues: the frame identities use `lambda`
/// and `delta` as scalars.
pub fn build_frame(table: &AlgebraTable, a: &Element, b: &Element) -> Result<TwoGeneratedFrame> {
    check_dim(table.dim(), a.dim())?;
    check_dim(table.dim(), b.dim())?;
    if a == b {
        return Err(Error::InvalidInput(
            "frame generators must be distinct".into(),
        ));
    }
    let profile_a = classify_axis(table, a)?;
    let profile_b = classify_axis(table, b)?;
    frame_from_profiles(table, profile_a, profile_b)
}

/// [`build_frame`] for axes already classified in `table`.
pub fn frame_from_profiles(
    table: &AlgebraTable,
    profile_a: AxisProfile,
    profile_b: AxisProfile,
) -> Result<TwoGeneratedFrame> {
    let (a, b) = (&profile_a.axis, &profile_b.axis);
    check_dim(table.dim(), a.dim())?;
    check_dim(table.dim(), b.dim())?;
    if a == b {
        return Err(Error::InvalidInput(
            "frame generators must be distinct".into(),
        ));
    }
    for (name, p) in [("a", &profile_a), ("b", &profile_b)] {
        p.require_axis()
            .map_err(|e| Error::NotAxis(format!("generator {name}: {e}")))?;
        if p.lambda.is_none() || p.delta.is_none() {
            return Err(Error::NotAxis(format!(
                "generator {name} has type {}; both eigenvalues are needed",
                p.type_string()
            )));
        }
    }
    let db = decompose(&profile_a, b)?;
    let da = decompose(&profile_b, a)?;
    let closure = closure_space(table, &[a.clone(), b.clone()])?;
    let span_of = |v: [&Element; 5]| Subspace::span(table.dim(), v.iter().map(|e| e.0.clone()));
    let spans_from_a = span_of([a, &db.comp_00, &db.comp_l0, &db.comp_0d, &db.comp_ld]) == closure;
    let spans_from_b = span_of([b, &da.comp_00, &da.comp_l0, &da.comp_0d, &da.comp_ld]) == closure;
    Ok(TwoGeneratedFrame {
        profile_a,
        profile_b,
        alpha_b: db.alpha,
        beta_a: da.alpha,
        c: db.comp_00,
        x: db.comp_l0,
        y: db.comp_0d,
        z: db.comp_ld,
        c_prime: da.comp_00,
        x_prime: da.comp_l0,
        y_prime: da.comp_0d,
        z_prime: da.comp_ld,
        closure,
        spans_from_a,
        spans_from_b,
    })
}

/// Idempotents among the vectors whose coefficients all lie in
/// `coefficients`, plus any idempotent `extra` elements. The zero vector is
/// skipped. Errors when the candidate count would exceed `max_candidates`.
pub fn find_idempotents(
    table: &AlgebraTable,
    coefficients: &[Rational],
    extra: &[Element],
    max_candidates: usize,
) -> Result<Vec<Element>> {
    let n = table.dim();
    let k = coefficients.len();
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > max_candidates as u128 {
        return Err(Error::InvalidInput(format!(
            "{k}^{n} candidate vectors exceed the search cap of {max_candidates}"
        )));
    }
    let mut found = Vec::new();
    let mut digits = vec![0usize; n];
    if k > 0 {
        loop {
            let v = Element(digits.iter().map(|&d| coefficients[d].clone()).collect());
            if !v.is_zero() && table.mul(&v, &v) == v {
                found.push(v);
            }
            let mut pos = 0;
            while pos < n {
                digits[pos] += 1;
                if digits[pos] < k {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    for e in extra {
        check_dim(n, e.dim())?;
        if !e.is_zero() && table.mul(e, e) == *e {
            found.push(e.clone());
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}
