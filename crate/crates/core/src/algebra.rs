//! Finite-dimensional algebras given by structure constants.
//!
//! No associativity, commutativity or unit is assumed. Products are
//! `e_i * e_j = sum_k gamma[i][j][k] e_k`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::{denominator_lcm, format_rational, serde_rational, Rational};

/// Largest dimension stored densely.
pub const MAX_DIM: usize = 64;

/// Coefficient vector over the basis of a fixed table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<Rational>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[i] = Rational::one();
        e
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Element(values.iter().map(|&v| crate::rational::int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element(self.0.iter().map(|c| c * s).collect())
    }

    /// `s * self + other`.
    pub fn axpy(&self, s: &Rational, other: &Element) -> Element {
        Element(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * s + b)
                .collect(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    /// Human form such as `2/3 a + 1/3 b`.
    pub fn pretty(&self, labels: &[String]) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .zip(labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| {
                if c.is_one() {
                    l.clone()
                } else if *c == -Rational::one() {
                    format!("-{l}")
                } else {
                    format!("{} {l}", format_rational(c))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

#[derive(Clone)]
pub struct AlgebraTable {
    labels: Vec<String>,
    /// `gamma[(i * n + j) * n + k]`
    gamma: Vec<Rational>,
    /// `gamma` over a common denominator, built on first multiplication.
    integral: OnceLock<IntegralGamma>,
}

#[derive(Clone)]
struct IntegralGamma {
    numer: Vec<BigInt>,
    denom: BigInt,
}

impl IntegralGamma {
    fn new(gamma: &[Rational]) -> Self {
        let denom = denominator_lcm(gamma);
        let numer = gamma
            .iter()
            .map(|g| g.numer() * (&denom / g.denom()))
            .collect();
        IntegralGamma { numer, denom }
    }
}

impl PartialEq for AlgebraTable {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.gamma == other.gamma
    }
}

impl Eq for AlgebraTable {}

/// Integer vector `U` and denominator `d` with `v = U / d`.
fn integral(v: &Element) -> (Vec<BigInt>, BigInt) {
    let d = denominator_lcm(&v.0);
    let u = v.0.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    (u, d)
}

impl AlgebraTable {
    /// The zero algebra on the given labels.
    pub fn zero(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidInput(format!(
                "dimension must be between 1 and {MAX_DIM}, got {n}"
            )));
        }
        Ok(AlgebraTable {
            labels,
            gamma: vec![Rational::zero(); n * n * n],
            integral: OnceLock::new(),
        })
    }

    /// Builds a table from `product(i, j)`, the coefficient vector of `e_i * e_j`.
    pub fn from_fn(
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let mut table = Self::zero(labels)?;
        let n = table.dim();
        for i in 0..n {
            for j in 0..n {
                table.set_product(i, j, product(i, j))?;
            }
        }
        Ok(table)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.gamma[(i * n + j) * n + k]
    }

    /// Coefficients of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.gamma[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn set_product(&mut self, i: usize, j: usize, coeffs: Vec<Rational>) -> Result<()> {
        let n = self.dim();
        check_dim(n, coeffs.len())?;
        if i >= n || j >= n {
            return Err(Error::InvalidInput(format!(
                "basis index ({i}, {j}) out of range"
            )));
        }
        self.gamma[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&coeffs);
        self.integral = OnceLock::new();
        Ok(())
    }

    /// Copy with `gamma[i][j][k]` increased by `delta`.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Rational) -> Self {
        let n = self.dim();
        let mut out = self.clone();
        out.gamma[(i * n + j) * n + k] += delta;
        out.integral = OnceLock::new();
        out
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<Element> {
        check_dim(self.dim(), coeffs.len())?;
        Ok(Element(coeffs))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        check_dim(self.dim(), u.dim())?;
        check_dim(self.dim(), v.dim())?;
        Ok(self.mul(u, v))
    }

    /// Unchecked product; panics on dimension mismatch.
    pub(crate) fn mul(&self, u: &Element, v: &Element) -> Element {
        // Integer arithmetic throughout, with one reduction per coordinate.
        let n = self.dim();
        assert!(u.dim() == n && v.dim() == n, "element dimension");
        let gamma = self
            .integral
            .get_or_init(|| IntegralGamma::new(&self.gamma));
        let (uu, du) = integral(u);
        let (vv, dv) = integral(v);
        let mut out = vec![BigInt::zero(); n];
        for (i, ui) in uu.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in vv.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                let row = &gamma.numer[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, g) in out.iter_mut().zip(row) {
                    if !g.is_zero() {
                        *o += &w * g;
                    }
                }
            }
        }
        let denom = du * dv * &gamma.denom;
        Element(
            out.into_iter()
                .map(|o| Rational::new(o, denom.clone()))
                .collect(),
        )
    }

    /// Matrix of `v -> a * v`.
    pub fn left_operator(&self, a: &Element) -> Result<Matrix> {
        check_dim(self.dim(), a.dim())?;
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.mul(a, &Element::basis(n, j)).0)
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    /// Matrix of `v -> v * a`.
    pub fn right_operator(&self, a: &Element) -> Result<Matrix> {
        check_dim(self.dim(), a.dim())?;
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.mul(&Element::basis(n, j), a).0)
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Table in the basis `f_i = sum_k p[k][i] e_k` given by the columns of
    /// an invertible matrix `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim();
        check_dim(n, p.rows())?;
        check_dim(n, p.cols())?;
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidInput("change of basis is singular".into()))?;
        let new_basis: Vec<Element> = (0..n).map(|i| Element(p.column(i))).collect();
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        Self::from_fn(labels, |i, j| {
            inv.apply(&self.mul(&new_basis[i], &new_basis[j]).0)
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.into_table()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let coeffs = self.basis_product(i, j);
                if coeffs.iter().any(|c| !c.is_zero()) {
                    products.push(ProductEntry {
                        i,
                        j,
                        coeffs: coeffs.to_vec(),
                    });
                }
            }
        }
        AlgebraFile {
            dim: n,
            basis: self.labels.clone(),
            products,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }
}

impl fmt::Debug for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        writeln!(f, "AlgebraTable(dim {n}) {{")?;
        for i in 0..n {
            for j in 0..n {
                let p = Element(self.basis_product(i, j).to_vec());
                if !p.is_zero() {
                    writeln!(
                        f,
                        "  {} * {} = {}",
                        self.labels[i],
                        self.labels[j],
                        p.pretty(&self.labels)
                    )?;
                }
            }
        }
        write!(f, "}}")
    }
}

/// On-disk algebra format; omitted `(i, j)` pairs are zero products.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    #[serde(with = "serde_rational::vec")]
    pub coeffs: Vec<Rational>,
}

impl AlgebraFile {
    pub fn into_table(self) -> Result<AlgebraTable> {
        if self.basis.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "\"basis\" has {} labels but \"dim\" is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for (idx, label) in self.basis.iter().enumerate() {
            if !seen.insert(label) {
                return Err(Error::InvalidInput(format!(
                    "duplicate basis label {label:?} at position {idx}"
                )));
            }
        }
        let mut table = AlgebraTable::zero(self.basis)?;
        let mut filled = std::collections::HashSet::new();
        for entry in self.products {
            if entry.i >= self.dim || entry.j >= self.dim {
                return Err(Error::InvalidInput(format!(
                    "product ({}, {}) out of range for dim {}",
                    entry.i, entry.j, self.dim
                )));
            }
            if entry.coeffs.len() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "product ({}, {}) has {} coefficients, expected {}",
                    entry.i,
                    entry.j,
                    entry.coeffs.len(),
                    self.dim
                )));
            }
            if !filled.insert((entry.i, entry.j)) {
                return Err(Error::InvalidInput(format!(
                    "duplicate product entry ({}, {})",
                    entry.i, entry.j
                )));
            }
            table.set_product(entry.i, entry.j, entry.coeffs)?;
        }
        Ok(table)
    }
}

/// Result of [`subalgebra_closure`]: the generated subspace and the
/// structure constants induced on its RREF basis.
#[derive(Debug, Clone)]
pub struct Closure {
    pub space: Subspace,
    /// Structure constants in the closure basis; `None` for the zero
    /// subalgebra, which has no basis to carry a table.
    pub table: Option<AlgebraTable>,
}

impl Closure {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Ambient element of the `i`-th closure basis vector.
    pub fn basis_element(&self, i: usize) -> Element {
        Element(self.space.basis()[i].clone())
    }
}

/// Smallest subspace containing `generators` and closed under the product.
pub fn subalgebra_closure(table: &AlgebraTable, generators: &[Element]) -> Result<Closure> {
    let space = closure_space(table, generators)?;
    let basis: Vec<Element> = space.basis().iter().cloned().map(Element).collect();
    let labels = (0..basis.len()).map(|i| format!("u{i}")).collect();
    let induced = if basis.is_empty() {
        None
    } else {
        Some(AlgebraTable::from_fn(labels, |i, j| {
            space
                .coordinates(&table.mul(&basis[i], &basis[j]).0)
                .expect("closure is closed under the product")
        })?)
    };
    Ok(Closure {
        space,
        table: induced,
    })
}

/// The subspace of [`subalgebra_closure`] without the induced table.
pub fn closure_space(table: &AlgebraTable, generators: &[Element]) -> Result<Subspace> {
    if generators.is_empty() {
        return Err(Error::InvalidInput(
            "closure needs at least one generator".into(),
        ));
    }
    let n = table.dim();
    for g in generators {
        check_dim(n, g.dim())?;
    }
    let mut space = Subspace::span(n, generators.iter().map(|g| g.0.clone()));
    let mut rounds = 0;
    loop {
        let basis: Vec<Element> = space.basis().iter().cloned().map(Element).collect();
        let mut grown = space.clone();
        for u in &basis {
            for v in &basis {
                let p = table.mul(u, v);
                if !grown.contains(&p.0) {
                    grown = grown.sum(&Subspace::span(n, [p.0]));
                }
            }
        }
        if grown.dim() == space.dim() {
            break;
        }
        space = grown;
        rounds += 1;
        assert!(rounds <= n, "closure did not stabilize within {n} rounds");
    }
    Ok(space)
}
