//! Univariate polynomials over the rationals and exact minimal polynomials.

use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{Matrix, Subspace};
use crate::rational::{format_rational, Rational};

/// Coefficients lowest degree first; no trailing zeros. The zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![Rational::one()])
    }

    /// `t - root`.
    pub fn linear(root: &Rational) -> Self {
        Polynomial::new(vec![-root.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Polynomial::one(), |acc, r| acc.mul(&Polynomial::linear(r)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lead) => Polynomial {
                coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
            },
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Polynomial, i| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Polynomial::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / lead;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &f * c;
            }
            quot[shift] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        self.mul(other).div_rem(&self.gcd(other)).0.monic()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(n, n), |acc, c| {
                let mut next = acc.mul(m);
                for i in 0..n {
                    next[(i, i)] += c;
                }
                next
            })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Minimal polynomial of `v` with respect to `m`: the monic generator of
/// `{p : p(m) v = 0}`, found from the first linear dependence among the
/// Krylov vectors `v, m v, m^2 v, ...`.
pub fn local_minimal_polynomial(m: &Matrix, v: &[Rational]) -> Polynomial {
    krylov(m, v).0
}

/// Local minimal polynomial of `v` and a basis of its cyclic subspace.
fn krylov(m: &Matrix, v: &[Rational]) -> (Polynomial, Vec<Vec<Rational>>) {
    let n = m.rows();
    // Each stored row is (reduced Krylov vector, coefficients of the
    // polynomial producing it, pivot), the pivot being the leading nonzero
    // coordinate of the vector. Coefficient vectors have length n + 1.
    let mut rows: Vec<(Vec<Rational>, Vec<Rational>, usize)> = Vec::new();
    let mut current = v.to_vec();
    let sub_scaled = |dst: &mut [Rational], f: &Rational, src: &[Rational]| {
        for (x, r) in dst.iter_mut().zip(src) {
            if !r.is_zero() {
                *x -= f * r;
            }
        }
    };
    for degree in 0..=n {
        let mut vec = current.clone();
        let mut poly = vec![Rational::zero(); n + 1];
        poly[degree] = Rational::one();
        for (rv, rp, pivot) in &rows {
            if vec[*pivot].is_zero() {
                continue;
            }
            let f = vec[*pivot].clone();
            sub_scaled(&mut vec, &f, rv);
            sub_scaled(&mut poly, &f, rp);
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => {
                let poly = Polynomial::new(poly).monic();
                return (poly, rows.into_iter().map(|r| r.0).collect());
            }
            Some(pivot) => {
                let inv = Rational::one() / &vec[pivot];
                for x in vec.iter_mut().chain(poly.iter_mut()) {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                // Keep earlier rows reduced at the new pivot.
                for (rv, rp, _) in rows.iter_mut() {
                    if !rv[pivot].is_zero() {
                        let f = rv[pivot].clone();
                        sub_scaled(rv, &f, &vec);
                        sub_scaled(rp, &f, &poly);
                    }
                }
                rows.push((vec, poly, pivot));
            }
        }
        current = m.apply(&current);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Exact minimal polynomial: lcm of the local minimal polynomials of the
/// standard basis vectors. A basis vector inside the sum of the cyclic
/// subspaces seen so far is skipped, since that sum is invariant and its
/// minimal polynomial is already the running lcm.
pub fn minimal_polynomial(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    let mut covered = Subspace::zero(n);
    let mut acc = Polynomial::one();
    for j in 0..n {
        if covered.is_full() {
            break;
        }
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        if covered.contains(&e) {
            continue;
        }
        let (local, cyclic) = krylov(m, &e);
        acc = acc.lcm(&local);
        covered = covered.sum(&Subspace::span(n, cyclic));
    }
    acc
}
