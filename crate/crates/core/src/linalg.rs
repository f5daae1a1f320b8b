//! Dense exact linear algebra over the rationals.
//!
//! Row reduction is done fraction-free: each row is scaled to a primitive
//! integer vector, eliminated with cross-multiplication, and divided by its
//! content after every step. Rationals only reappear when the final pivots
//! are normalized to one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{denominator_lcm, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(n_rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = &self[(i, k)];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let rhs = &other[(k, j)];
                    if !rhs.is_zero() {
                        out[(i, j)] += lhs * rhs;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// `self - mu * I`.
    pub fn shift(&self, mu: &Rational) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= mu;
        }
        m
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rref(&self.row_vecs(), self.cols).pivots.len()
    }

    /// Right null space `{v : M v = 0}`.
    pub fn null_space(&self) -> Subspace {
        let reduced = rref(&self.row_vecs(), self.cols);
        let mut basis = Vec::new();
        let mut pivot_iter = reduced.pivots.iter().peekable();
        let mut free = Vec::new();
        for c in 0..self.cols {
            if pivot_iter.peek() == Some(&&c) {
                pivot_iter.next();
            } else {
                free.push(c);
            }
        }
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
                v[p] = -row[f].clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        let reduced = rref(&augmented, 2 * n);
        if reduced.pivots.len() < n || reduced.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(
            reduced.rows.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(crate::format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form of a list of rows, zero rows dropped.
#[derive(Debug, Clone)]
pub struct Reduced {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

fn primitive_part(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for v in row.iter_mut() {
            *v /= &content;
        }
    }
}

fn to_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let scale = denominator_lcm(row);
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    primitive_part(&mut out);
    out
}

/// Fraction-free Gauss-Jordan elimination.
pub fn rref(rows: &[Vec<Rational>], cols: usize) -> Reduced {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .inspect(|r| assert_eq!(r.len(), cols, "row length"))
        .map(|r| to_integer_row(r))
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == work.len() {
            break;
        }
        let Some(p) = (next..work.len())
            .filter(|&r| !work[r][c].is_zero())
            .min_by_key(|&r| work[r][c].abs())
        else {
            continue;
        };
        work.swap(next, p);
        let pivot_row = work[next].clone();
        let pv = &pivot_row[c];
        for (r, row) in work.iter_mut().enumerate() {
            if r == next || row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let mul_self = pv / &g;
            let mul_pivot = &row[c] / &g;
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &mul_self - p * &mul_pivot;
            }
            primitive_part(row);
        }
        pivots.push(c);
        next += 1;
    }
    work.truncate(next);
    let rows = work
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|v| Rational::new(v, lead.clone()))
                .collect()
        })
        .collect();
    Reduced { rows, pivots }
}

/// A subspace of `Q^n`, stored as an RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Matrix::identity(ambient).row_vecs())
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let vectors: Vec<_> = vectors.into_iter().collect();
        let reduced = rref(&vectors, ambient);
        Subspace {
            ambient,
            basis: reduced.rows,
            pivots: reduced.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` relative to the RREF basis, if `v` lies in the space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        self.reduce(v).iter().all(Zero::is_zero).then_some(coords)
    }

    /// `v` minus its component along the RREF basis (zero at every pivot).
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // v = sum x_i u_i = sum y_j w_j; solve [U | -W] (x, y) = 0.
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut columns: Vec<Vec<Rational>> = self.basis.clone();
        columns.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let system = Matrix::from_columns(self.ambient, &columns);
        let kernel = system.null_space();
        Subspace::span(
            self.ambient,
            kernel.basis.iter().map(|sol| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (coef, u) in sol[..p].iter().zip(&self.basis) {
                    for (x, ui) in v.iter_mut().zip(u) {
                        *x += coef * ui;
                    }
                }
                v
            }),
        )
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|r| r.iter().map(crate::format_rational).collect())
            .collect();
        write!(
            f,
            "Subspace(dim {} of {}, {:?})",
            self.dim(),
            self.ambient,
            rows
        )
    }
}
