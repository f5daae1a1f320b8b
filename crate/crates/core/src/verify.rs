//! Exact verification of the identities satisfied by two primitive axes.
//!
//! Every identity is checked as a residual vector in the ambient algebra.
//! Statements about a single graded piece (for instance the `-+` part of
//! `b(ab)`) project with the eigenprojections of `a` first.
//!
//! Notation follows [`TwoGeneratedFrame`]: `a` has type `(lambda, delta)`,
//! `b` has type `(lambda', delta')`, `b = alpha_b a + c + x + y + z` over
//! `a` and `a = beta_a b + c' + x' + y' + z'` over `b`.

use num_traits::{One, Zero};

use crate::algebra::{closure_space, AlgebraTable, Element};
use crate::axis::check_fusion;
use crate::axis::{
    classify_axis, eigenspace, frame_from_profiles, AxisProfile, Grade, TwoGeneratedFrame,
};
use crate::error::{check_dim, Error, Result};
use crate::linalg::Subspace;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::report::{Entry, VerificationReport};

/// `sum coef * v`.
fn comb(n: usize, terms: &[(Rational, &Element)]) -> Element {
    let mut out = vec![Rational::zero(); n];
    for (coef, v) in terms {
        if coef.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(&v.0) {
            if !c.is_zero() {
                *o += coef * c;
            }
        }
    }
    Element(out)
}

fn ensure_frame_matches(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<()> {
    check_dim(table.dim(), frame.dim())?;
    let n = table.dim();
    let one = Rational::one();
    let b_back = comb(
        n,
        &[
            (frame.alpha_b.clone(), frame.a()),
            (one.clone(), &frame.c),
            (one.clone(), &frame.x),
            (one.clone(), &frame.y),
            (one.clone(), &frame.z),
        ],
    );
    let a_back = comb(
        n,
        &[
            (frame.beta_a.clone(), frame.b()),
            (one.clone(), &frame.c_prime),
            (one.clone(), &frame.x_prime),
            (one.clone(), &frame.y_prime),
            (one, &frame.z_prime),
        ],
    );
    if b_back != *frame.b() || a_back != *frame.a() {
        return Err(Error::InvalidInput(
            "frame components do not reconstruct its generators".into(),
        ));
    }
    if !is_idempotent_in(table, frame.a()) || !is_idempotent_in(table, frame.b()) {
        return Err(Error::InvalidInput(
            "frame generators are not idempotent in this table".into(),
        ));
    }
    Ok(())
}

fn is_idempotent_in(table: &AlgebraTable, a: &Element) -> bool {
    table.mul(a, a) == *a
}

/// Products `b(ab)` and `(ba)b`, split along the grading of `a`.
pub fn verify_lemma_bab(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    lemma_bab(table, frame)
}

fn lemma_bab(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let m = |u: &Element, v: &Element| table.mul(u, v);
    let proj = frame.profile_a.projections()?;
    let (a, b) = (frame.a(), frame.b());
    let (c, x, y, z) = (&frame.c, &frame.x, &frame.y, &frame.z);
    let (lam, del, al) = (frame.lambda(), frame.delta(), &frame.alpha_b);

    let bab = m(b, &m(a, b));
    let bab_other = m(&m(b, a), b);
    let part = |g: Grade| Element(proj.grade(g).apply(&bab.0));

    let mut report = VerificationReport::new();
    report.push(Entry::check("bab.flexible", &bab - &bab_other));

    let mut pair = |grade: Grade, lhs: Element, rhs: Element| {
        report.push(Entry::check(
            format!("bab[{grade}].projection"),
            &part(grade) - &lhs,
        ));
        report.push(Entry::check(format!("bab[{grade}].sides"), &lhs - &rhs));
    };

    let al2 = al * al;
    pair(
        Grade::PlusPlus,
        comb(
            n,
            &[
                (al2.clone(), a),
                (lam.clone(), &m(x, x)),
                (lam.clone(), &m(z, z)),
            ],
        ),
        comb(
            n,
            &[(al2, a), (del.clone(), &m(y, y)), (del.clone(), &m(z, z))],
        ),
    );
    pair(
        Grade::MinusPlus,
        comb(
            n,
            &[
                (al * lam * lam, x),
                (lam.clone(), &m(c, x)),
                (lam.clone(), &m(y, z)),
            ],
        ),
        comb(
            n,
            &[
                (del.clone(), &m(y, z)),
                (del.clone(), &m(z, y)),
                (al * lam, x),
            ],
        ),
    );
    pair(
        Grade::PlusMinus,
        comb(
            n,
            &[
                (lam.clone(), &m(x, z)),
                (lam.clone(), &m(z, x)),
                (al * del, y),
            ],
        ),
        comb(
            n,
            &[
                (al * del * del, y),
                (del.clone(), &m(y, c)),
                (del.clone(), &m(z, x)),
            ],
        ),
    );
    pair(
        Grade::MinusMinus,
        comb(
            n,
            &[
                (al * (lam * lam + del), z),
                (lam.clone(), &m(c, z)),
                (lam.clone(), &m(y, x)),
            ],
        ),
        comb(
            n,
            &[
                (al * (lam + del * del), z),
                (del.clone(), &m(z, c)),
                (del.clone(), &m(y, x)),
            ],
        ),
    );
    Ok(report)
}

/// Graded pieces of `b = b^2`.
pub fn verify_lemma_bsquare(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    lemma_bsquare(table, frame)
}

fn lemma_bsquare(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let m = |u: &Element, v: &Element| table.mul(u, v);
    let a = frame.a();
    let (c, x, y, z) = (&frame.c, &frame.x, &frame.y, &frame.z);
    let (lam, del, al) = (frame.lambda(), frame.delta(), &frame.alpha_b);
    let one = Rational::one();
    let sum = |terms: &[Element]| terms.iter().fold(Element::zero(n), |acc, t| &acc + t);

    let mut report = VerificationReport::new();
    report.push(Entry::check(
        "bsquare[++]",
        &comb(n, &[(al.clone(), a), (one.clone(), c)])
            - &(&a.scale(&(al * al)) + &sum(&[m(c, c), m(x, x), m(y, y), m(z, z)])),
    ));
    report.push(Entry::check(
        "bsquare[-+]",
        x - &(&x.scale(&(al * lam)) + &sum(&[m(x, c), m(c, x), m(y, z), m(z, y)])),
    ));
    report.push(Entry::check(
        "bsquare[+-]",
        y - &(&y.scale(&(al * del)) + &sum(&[m(c, y), m(y, c), m(x, z), m(z, x)])),
    ));
    report.push(Entry::check(
        "bsquare[--]",
        z - &(&z.scale(&(al * (lam + del))) + &sum(&[m(c, z), m(z, c), m(x, y), m(y, x)])),
    ));
    Ok(report)
}

/// `b(ba)` and `(ab)b` in terms of `b`, `ab`, `ba`, and the graded pieces
/// that follow from expanding them over `a`.
pub fn verify_lemma_abb(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    lemma_abb(table, frame)
}

fn lemma_abb(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let m = |u: &Element, v: &Element| table.mul(u, v);
    let (a, b) = (frame.a(), frame.b());
    let (c, x, y, z) = (&frame.c, &frame.x, &frame.y, &frame.z);
    let (lam, del, al, be) = (frame.lambda(), frame.delta(), &frame.alpha_b, &frame.beta_a);
    let (lam_p, del_p) = (frame.lambda_prime(), frame.delta_prime());
    let one = Rational::one();
    let ba = m(b, a);
    let ab = m(a, b);

    let mut report = VerificationReport::new();
    let bl = be * (&one - lam_p); // beta_a (1 - lambda')
    let bd = be * (&one - del_p); // beta_a (1 - delta')

    report.push(Entry::check(
        "abb.b(ba)",
        &m(b, &ba) - &comb(n, &[(bl.clone(), b), (lam_p.clone(), &ba)]),
    ));
    report.push(Entry::check(
        "abb.(ab)b",
        &m(&ab, b) - &comb(n, &[(bd.clone(), b), (del_p.clone(), &ab)]),
    ));

    let scaled = |s: &Rational, terms: &[Element]| {
        terms
            .iter()
            .fold(Element::zero(n), |acc, t| t.axpy(s, &acc))
    };

    // From delta b (y + z) = beta_a (1 - lambda') b + (lambda' - alpha_b)(alpha_b a + delta y + delta z).
    report.push(Entry::check(
        "abb.left[++]",
        &scaled(del, &[m(y, y), m(z, z)])
            - &comb(n, &[(al * (&bl + (lam_p - al)), a), (bl.clone(), c)]),
    ));
    report.push(Entry::check(
        "abb.left[-+]",
        &scaled(del, &[m(y, z), m(z, y)]) - &x.scale(&bl),
    ));
    report.push(Entry::check(
        "abb.left[+-]",
        &scaled(del, &[m(c, y), m(x, z)]) - &y.scale(&(&bl + del * (lam_p - al))),
    ));
    report.push(Entry::check(
        "abb.left[--]",
        &scaled(del, &[m(c, z), m(x, y)]) - &z.scale(&(&bl + del * (lam_p - al - al * lam))),
    ));

    // From (lambda x + lambda z) b = beta_a (1 - delta') b + (delta' - alpha_b)(alpha_b a + lambda x + lambda z).
    report.push(Entry::check(
        "abb.right[++]",
        &scaled(lam, &[m(x, x), m(z, z)])
            - &comb(n, &[(al * (&bd + (del_p - al)), a), (bd.clone(), c)]),
    ));
    report.push(Entry::check(
        "abb.right[-+]",
        &scaled(lam, &[m(x, c), m(z, y)]) - &x.scale(&(&bd + lam * (del_p - al))),
    ));
    report.push(Entry::check(
        "abb.right[+-]",
        &scaled(lam, &[m(x, z), m(z, x)]) - &y.scale(&bd),
    ));
    report.push(Entry::check(
        "abb.right[--]",
        &scaled(lam, &[m(z, c), m(x, y)]) - &z.scale(&(&bd + lam * (del_p - al - del * al))),
    ));
    Ok(report)
}

/// The scalars attached to `sigma = ab - delta' a - lambda b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaScalars {
    pub sigma: Element,
    /// `alpha_b (1 - lambda) - delta'`
    pub gamma: Rational,
    /// `beta_a (1 - delta') - lambda`
    pub rho: Rational,
}

pub fn sigma_scalars(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> SigmaScalars {
    let n = table.dim();
    let (a, b) = (frame.a(), frame.b());
    let (lam, del_p) = (frame.lambda(), frame.delta_prime());
    let one = Rational::one();
    let sigma = comb(
        n,
        &[
            (one.clone(), &table.mul(a, b)),
            (-del_p.clone(), a),
            (-lam.clone(), b),
        ],
    );
    SigmaScalars {
        sigma,
        gamma: &frame.alpha_b * (&one - lam) - del_p,
        rho: &frame.beta_a * (&one - del_p) - lam,
    }
}

/// `s` with `v = s * w`, if `v` is such a multiple of the nonzero `w`.
fn multiple_of(v: &Element, w: &Element) -> Option<Rational> {
    let p = w.0.iter().position(|c| !c.is_zero())?;
    let s = &v.0[p] / &w.0[p];
    (w.scale(&s) == *v).then_some(s)
}

pub fn verify_lemma_six(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    lemma_six(table, frame)
}

fn lemma_six(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let m = |u: &Element, v: &Element| table.mul(u, v);
    let (a, b) = (frame.a(), frame.b());
    let (c, y) = (&frame.c, &frame.y);
    let (lam, del_p, al) = (frame.lambda(), frame.delta_prime(), &frame.alpha_b);
    let one = Rational::one();
    let SigmaScalars { sigma, gamma, rho } = sigma_scalars(table, frame);

    let mut report = VerificationReport::new();
    let via_a = comb(
        n,
        &[(gamma.clone(), a), (-lam.clone(), y), (-lam.clone(), c)],
    );
    let via_b = comb(
        n,
        &[
            (rho.clone(), b),
            (-del_p.clone(), &frame.c_prime),
            (-del_p.clone(), &frame.x_prime),
        ],
    );
    report.push(Entry::check("sigma.via_a", &sigma - &via_a));
    report.push(Entry::check("sigma.via_b", &sigma - &via_b));
    report.push(Entry::check(
        "sigma.square",
        &(&m(c, c) + &m(y, y)).scale(lam)
            - &comb(n, &[(al * (&gamma - &rho), a), (-rho.clone(), c)]),
    ));

    // Recover gamma and rho from sigma itself and compare with the formulas.
    let recovered_gamma = comb(
        n,
        &[(one.clone(), &sigma), (lam.clone(), c), (lam.clone(), y)],
    );
    report.push(match multiple_of(&recovered_gamma, a) {
        Some(g) => Entry::check("sigma.gamma", a.scale(&(g - &gamma))),
        None => Entry::check("sigma.gamma", recovered_gamma).with_note("not a multiple of a"),
    });
    let recovered_rho = comb(
        n,
        &[
            (one, &sigma),
            (del_p.clone(), &frame.c_prime),
            (del_p.clone(), &frame.x_prime),
        ],
    );
    report.push(match multiple_of(&recovered_rho, b) {
        Some(r) => Entry::check("sigma.rho", b.scale(&(r - &rho))),
        None => Entry::check("sigma.rho", recovered_rho).with_note("not a multiple of b"),
    });
    Ok(report)
}

/// Scalar constraints on the `x` and `y` components, and the implications
/// that only bite when the generated subalgebra has dimension at least 4.
pub fn verify_prop_dim51(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    prop_dim51(table, frame)
}

fn prop_dim51(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let (x, y) = (&frame.x, &frame.y);
    let (lam, del, al, be) = (frame.lambda(), frame.delta(), &frame.alpha_b, &frame.beta_a);
    let (lam_p, del_p) = (frame.lambda_prime(), frame.delta_prime());
    let one = Rational::one();
    let both = be * (&one - del_p) + be * (&one - lam_p);
    let dim = frame.closure_dim();

    let mut report = VerificationReport::new();
    report.push(Entry::check(
        "xy_scalar.x",
        x.scale(&(&both - lam * (&one - del_p))),
    ));
    report.push(Entry::check(
        "xy_scalar.y",
        y.scale(&(&both - del * (&one - lam_p))),
    ));

    report.push(if be.is_zero() {
        // x and y sit in independent spaces, so x + y = 0 iff both vanish.
        Entry::check("xy_scalar.beta_zero", x + y)
    } else {
        Entry::vacuous("xy_scalar.beta_zero", n, "beta_a != 0")
    });

    let dim_note = format!("closure dim {dim}");
    if dim >= 4 {
        let components = [
            x,
            y,
            &frame.z,
            &frame.x_prime,
            &frame.y_prime,
            &frame.z_prime,
        ];
        let all_nonzero = components.iter().all(|v| !v.is_zero());
        let witness = if all_nonzero {
            Element::zero(n)
        } else {
            frame.b().clone()
        };
        report.push(
            Entry::check("xy_scalar.nonzero_components", witness).with_note(dim_note.clone()),
        );
        if lam == lam_p && del == del_p {
            let mut residual = Element::zero(n);
            let two = Rational::from_integer(2.into());
            residual.0[0] = lam - del;
            residual.0[1] = lam - &two * al;
            residual.0[2] = lam - &two * be;
            report.push(Entry::check("xy_scalar.equal_types", residual).with_note(dim_note));
        } else {
            report.push(Entry::vacuous("xy_scalar.equal_types", n, "types differ"));
        }
    } else {
        report.push(Entry::vacuous(
            "xy_scalar.nonzero_components",
            n,
            dim_note.clone(),
        ));
        report.push(Entry::vacuous("xy_scalar.equal_types", n, dim_note));
    }
    Ok(report)
}

/// Both spanning statements: `span(a, c, x, y, z)` and `span(b, c', x', y', z')`
/// are the subalgebra generated by `a` and `b`.
pub fn verify_spanning(
    table: &AlgebraTable,
    frame: &TwoGeneratedFrame,
) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    spanning(table, frame)
}

fn spanning(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    let n = table.dim();
    let witness = |gens: [&Element; 5]| {
        let span = Subspace::span(n, gens.iter().map(|g| g.0.clone()));
        first_outside(&span, &frame.closure)
            .or_else(|| first_outside(&frame.closure, &span))
            .unwrap_or_else(|| Element::zero(n))
    };
    let mut report = VerificationReport::new();
    report.push(Entry::check(
        "span.from_a",
        witness([frame.a(), &frame.c, &frame.x, &frame.y, &frame.z]),
    ));
    report.push(Entry::check(
        "span.from_b",
        witness([
            frame.b(),
            &frame.c_prime,
            &frame.x_prime,
            &frame.y_prime,
            &frame.z_prime,
        ]),
    ));
    Ok(report)
}

/// First basis vector of `of` that is not in `space`, reduced modulo `space`.
fn first_outside(space: &Subspace, of: &Subspace) -> Option<Element> {
    of.basis()
        .iter()
        .map(|v| Element(space.reduce(v)))
        .find(|r| !r.is_zero())
}

/// Every frame-level suite on one ordered pair.
pub fn verify_frame(table: &AlgebraTable, frame: &TwoGeneratedFrame) -> Result<VerificationReport> {
    ensure_frame_matches(table, frame)?;
    let mut report = spanning(table, frame)?;
    report.extend(lemma_bab(table, frame)?);
    report.extend(lemma_bsquare(table, frame)?);
    report.extend(lemma_abb(table, frame)?);
    report.extend(lemma_six(table, frame)?);
    report.extend(prop_dim51(table, frame)?);
    Ok(report)
}

fn first_nonzero_column(m: &crate::linalg::Matrix) -> Option<Element> {
    (0..m.cols())
        .map(|j| Element(m.column(j)))
        .find(|c| !c.is_zero())
}

/// `q(M) e_j` for the first basis vector it does not kill, where `q` is
/// `t(t-1)(t-mu)` for the recorded or best-guess eigenvalue `mu`.
fn polynomial_witness(
    m: &crate::linalg::Matrix,
    min_poly: &Polynomial,
    mu: Option<&Rational>,
) -> Element {
    let zero = Rational::zero();
    let one = Rational::one();
    let guess = mu.cloned().or_else(|| {
        // A linear factor left after removing t and t - 1 once each.
        let mut rest = min_poly.clone();
        for root in [&zero, &one] {
            let (q, r) = rest.div_rem(&Polynomial::linear(root));
            if r.is_zero() {
                rest = q;
            }
        }
        let c = rest.coeffs();
        (c.len() == 2).then(|| -&c[0] / &c[1])
    });
    let mut roots = vec![zero, one];
    roots.extend(guess);
    let q = Polynomial::from_roots(&roots);
    first_nonzero_column(&q.eval_matrix(m)).unwrap_or_else(|| Element::zero(m.rows()))
}

/// Structural checks on one claimed axis, each with a witness vector, and
/// the profile when the element is idempotent.
pub fn axis_entries(
    table: &AlgebraTable,
    a: &Element,
) -> Result<(VerificationReport, Option<AxisProfile>)> {
    check_dim(table.dim(), a.dim())?;
    let n = table.dim();
    let mut report = VerificationReport::new();
    let square = table.mul(a, a);
    report.push(Entry::check("idempotent", &square - a));
    if square != *a {
        return Ok((report, None));
    }
    let profile = classify_axis(table, a)?;
    if a.is_zero() {
        report.push(Entry::check("nonzero", Element::basis(n, 0)).with_note("zero element"));
        return Ok((report, Some(profile)));
    }
    // Each flag on the profile is exact, so witnesses are only searched for
    // when the corresponding check failed.
    let l = table.left_operator(a)?;
    let r = table.right_operator(a)?;
    let zero = || Element::zero(n);
    report.push(Entry::check(
        "left_poly",
        if profile.left_axis {
            zero()
        } else {
            polynomial_witness(&l, &profile.left_min_poly, profile.lambda.as_ref())
        },
    ));
    report.push(Entry::check(
        "right_poly",
        if profile.right_axis {
            zero()
        } else {
            polynomial_witness(&r, &profile.right_min_poly, profile.delta.as_ref())
        },
    ));
    let line = Subspace::span(n, [a.0.clone()]);
    let one = Rational::one();
    let primitive_witness = |ok: bool, m: &crate::linalg::Matrix| {
        if ok {
            return zero();
        }
        first_outside(&line, &eigenspace(m, &one)).unwrap_or_else(zero)
    };
    report.push(Entry::check(
        "left_primitive",
        primitive_witness(profile.primitive_left, &l),
    ));
    report.push(Entry::check(
        "right_primitive",
        primitive_witness(profile.primitive_right, &r),
    ));
    let commute = if profile.operators_commute {
        zero()
    } else {
        first_nonzero_column(&l.mul(&r).sub(&r.mul(&l))).unwrap_or_else(zero)
    };
    report.push(Entry::check("commute", commute));
    let direct_sum = if profile.direct_sum {
        zero()
    } else {
        let s = &profile.spaces;
        let total = [
            &s.one_one,
            &s.zero_zero,
            &s.lambda_zero,
            &s.zero_delta,
            &s.lambda_delta,
        ]
        .into_iter()
        .fold(Subspace::zero(n), |acc, sp| acc.sum(sp));
        first_outside(&total, &Subspace::full(n)).unwrap_or_else(zero)
    };
    report.push(Entry::check("direct_sum", direct_sum));
    Ok((report, Some(profile)))
}

fn axis_name(table: &AlgebraTable, a: &Element) -> String {
    let n = table.dim();
    (0..n)
        .find(|&i| *a == Element::basis(n, i))
        .map(|i| table.labels()[i].clone())
        .unwrap_or_else(|| format!("{a:?}"))
}

/// Both parts of the classification theorem for the given axes: each pair
/// generates a subalgebra of dimension at most 3, and each axis has Jordan
/// type, i.e. `A = F a + A_{0,0} + A_{lambda,delta}`.
pub fn verify_main_theorem(table: &AlgebraTable, axes: &[Element]) -> Result<VerificationReport> {
    let n = table.dim();
    for a in axes {
        check_dim(n, a.dim())?;
    }
    let checked = axes
        .iter()
        .map(|a| Ok((axis_name(table, a), axis_entries(table, a)?)))
        .collect::<Result<Vec<_>>>()?;
    main_theorem_from(table, checked, |a, b| {
        closure_space(table, &[a.clone(), b.clone()])
    })
}

type CheckedAxis = (String, (VerificationReport, Option<AxisProfile>));

fn main_theorem_from(
    table: &AlgebraTable,
    checked: Vec<CheckedAxis>,
    mut closure_of: impl FnMut(&Element, &Element) -> Result<Subspace>,
) -> Result<VerificationReport> {
    let n = table.dim();
    let mut report = VerificationReport::new();
    let mut profiles = Vec::new();
    for (name, (entries, profile)) in checked {
        match profile.filter(|p| p.is_primitive_axis()) {
            Some(p) => profiles.push((name, p)),
            None => {
                let mut failures = entries.failures().cloned().peekable();
                if failures.peek().is_none() {
                    report.push(Entry::check(
                        format!("main.axis({name})"),
                        Element::basis(n, 0),
                    ));
                }
                for e in failures {
                    report.push(Entry {
                        identity_id: format!("main.axis({name})/{}", e.identity_id),
                        ..e
                    });
                }
            }
        }
    }
    for (i, (name_a, pa)) in profiles.iter().enumerate() {
        for (name_b, pb) in &profiles[i + 1..] {
            let closure = closure_of(&pa.axis, &pb.axis)?;
            let residual = if closure.dim() > 3 {
                Element(closure.basis()[3].clone())
            } else {
                Element::zero(n)
            };
            report.push(
                Entry::check(format!("main.closure_dim({name_a},{name_b})"), residual)
                    .with_note(format!("dim {}", closure.dim())),
            );
        }
    }
    for (name, p) in &profiles {
        let jordan_part = Subspace::span(n, [p.axis.0.clone()])
            .sum(&p.spaces.zero_zero)
            .sum(&p.spaces.lambda_delta);
        let residual =
            first_outside(&jordan_part, &Subspace::full(n)).unwrap_or_else(|| Element::zero(n));
        report.push(
            Entry::check(format!("main.jordan({name})"), residual)
                .with_note(format!("type {}", p.type_string())),
        );
    }
    Ok(report)
}

/// Everything: structural and fusion checks for every axis, all frame
/// suites for every ordered pair, and both classification statements.
pub fn verify_algebra(table: &AlgebraTable, axes: &[Element]) -> Result<VerificationReport> {
    let n = table.dim();
    let mut report = VerificationReport::new();
    let mut good = Vec::new();
    let mut checked = Vec::new();
    for a in axes {
        let name = axis_name(table, a);
        let (entries, profile) = axis_entries(table, a)?;
        report.extend(entries.clone().scoped(&format!("axis({name})")));
        if let Some(p) = profile.as_ref().filter(|p| p.is_primitive_axis()) {
            report.extend(check_fusion(table, p)?.scoped(&format!("axis({name})")));
            good.push((name.clone(), p.clone()));
        }
        checked.push((name, (entries, profile)));
    }
    // One frame per unordered pair; the reverse order is its swap.
    let typed = |p: &AxisProfile| p.lambda.is_some() && p.delta.is_some();
    let mut frames = Vec::new();
    for (i, (_, pa)) in good.iter().enumerate() {
        for (_, pb) in &good[i + 1..] {
            if pa.axis != pb.axis && typed(pa) && typed(pb) {
                frames.push(frame_from_profiles(table, pa.clone(), pb.clone())?);
            }
        }
    }
    let swapped: Vec<_> = frames.iter().map(TwoGeneratedFrame::swapped).collect();
    let find = |a: &Element, b: &Element| {
        frames
            .iter()
            .chain(&swapped)
            .find(|f| f.a() == a && f.b() == b)
    };
    for (name_a, pa) in &good {
        for (name_b, pb) in &good {
            if pa.axis == pb.axis {
                continue;
            }
            let scope = format!("frame({name_a},{name_b})");
            match find(&pa.axis, &pb.axis) {
                Some(frame) => report.extend(verify_frame(table, frame)?.scoped(&scope)),
                None => report.push(Entry::vacuous(
                    format!("{scope}/suites"),
                    n,
                    format!("types {} and {}", pa.type_string(), pb.type_string()),
                )),
            }
        }
    }
    report.extend(main_theorem_from(table, checked, |a, b| {
        match find(a, b) {
            Some(frame) => Ok(frame.closure.clone()),
            None => closure_space(table, &[a.clone(), b.clone()]),
        }
    })?);
    Ok(report)
}
