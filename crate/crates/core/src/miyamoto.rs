//! Miyamoto involutions: each `Z2`-quotient of the `Z2 x Z2` grading of a
//! primitive axis gives an automorphism of order two that negates the odd
//! part.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::algebra::{AlgebraTable, Element};
use crate::axis::{classify_axis, AxisProfile, Grade};
use crate::error::{check_dim, Error, Result};
use crate::linalg::Matrix;

/// Default cap for [`axis_orbit`].
pub const ORBIT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Involution {
    /// Negates `A_{lambda,0} + A_{lambda,delta}`.
    Lambda,
    /// Negates `A_{0,delta} + A_{lambda,delta}`.
    Delta,
    /// Negates `A_{0,delta} + A_{lambda,0}`.
    Diag,
}

impl Involution {
    pub const ALL: [Involution; 3] = [Involution::Lambda, Involution::Delta, Involution::Diag];

    fn negates(self, grade: Grade) -> bool {
        match self {
            Involution::Lambda => matches!(grade, Grade::MinusPlus | Grade::MinusMinus),
            Involution::Delta => matches!(grade, Grade::PlusMinus | Grade::MinusMinus),
            Involution::Diag => matches!(grade, Grade::PlusMinus | Grade::MinusPlus),
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Involution::Lambda => "lambda",
            Involution::Delta => "delta",
            Involution::Diag => "diag",
        })
    }
}

impl std::str::FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lambda" => Ok(Involution::Lambda),
            "delta" => Ok(Involution::Delta),
            "diag" => Ok(Involution::Diag),
            other => Err(Error::InvalidInput(format!(
                "unknown involution {other:?}; expected lambda, delta or diag"
            ))),
        }
    }
}

/// A linear map of the algebra, acting on coefficient columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn identity(dim: usize) -> Self {
        AlgebraMap {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &Element) -> Element {
        Element(self.matrix.apply(&v.0))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).matrix == Matrix::identity(self.dim())
    }
}

/// Assembles the requested involution from the eigenprojections. An absent
/// eigenvalue leaves the corresponding pieces zero, so the map may
/// degenerate to the identity.
pub fn miyamoto(profile: &AxisProfile, which: Involution) -> Result<AlgebraMap> {
    profile.require_axis()?;
    let proj = profile.projections()?;
    Ok(AlgebraMap {
        matrix: proj.signed_sum(|g| which.negates(g)),
    })
}

pub fn tau_lambda(profile: &AxisProfile) -> Result<AlgebraMap> {
    miyamoto(profile, Involution::Lambda)
}

pub fn tau_delta(profile: &AxisProfile) -> Result<AlgebraMap> {
    miyamoto(profile, Involution::Delta)
}

pub fn tau_diag(profile: &AxisProfile) -> Result<AlgebraMap> {
    miyamoto(profile, Involution::Diag)
}

/// Invertible and multiplicative on every pair of basis vectors.
pub fn is_automorphism(table: &AlgebraTable, f: &AlgebraMap) -> Result<bool> {
    let n = table.dim();
    check_dim(n, f.matrix.rows())?;
    check_dim(n, f.matrix.cols())?;
    Ok(first_multiplicativity_failure(table, f).is_none() && f.matrix.inverse().is_some())
}

/// First basis pair `(i, j)` with `f(e_i e_j) != f(e_i) f(e_j)`, and the
/// difference.
pub fn first_multiplicativity_failure(
    table: &AlgebraTable,
    f: &AlgebraMap,
) -> Option<(usize, usize, Element)> {
    let n = table.dim();
    let images: Vec<Element> = (0..n).map(|i| f.apply(&table.basis_element(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&Element(table.basis_product(i, j).to_vec()));
            let rhs = table.mul(&images[i], &images[j]);
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                return Some((i, j, diff));
            }
        }
    }
    None
}

pub fn apply_to_axis(table: &AlgebraTable, f: &AlgebraMap, a: &Element) -> Result<Element> {
    check_dim(table.dim(), a.dim())?;
    check_dim(table.dim(), f.dim())?;
    Ok(f.apply(a))
}

/// All axes reachable from `seeds` under the Miyamoto involutions of the
/// axes found so far, sorted lexicographically by coefficients. Every axis
/// met must be a primitive two-sided axis.
pub fn axis_orbit(table: &AlgebraTable, seeds: &[Element], cap: usize) -> Result<Vec<Element>> {
    let mut known: BTreeSet<Element> = BTreeSet::new();
    let mut maps: BTreeMap<Element, Vec<AlgebraMap>> = BTreeMap::new();
    let mut queue: VecDeque<Element> = VecDeque::new();
    for s in seeds {
        check_dim(table.dim(), s.dim())?;
        if known.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    let admit = |v: Element, known: &mut BTreeSet<Element>, queue: &mut VecDeque<Element>| {
        if known.insert(v.clone()) {
            queue.push_back(v);
        }
        if known.len() > cap {
            Err(Error::OrbitOverflow(cap))
        } else {
            Ok(())
        }
    };
    while let Some(u) = queue.pop_front() {
        let profile = classify_axis(table, &u)?;
        profile.require_axis()?;
        let taus = Involution::ALL
            .iter()
            .map(|&w| miyamoto(&profile, w))
            .collect::<Result<Vec<_>>>()?;
        let existing: Vec<Element> = known.iter().cloned().collect();
        for v in &existing {
            for t in &taus {
                admit(t.apply(v), &mut known, &mut queue)?;
            }
        }
        let earlier: Vec<AlgebraMap> = maps.values().flatten().cloned().collect();
        for t in &earlier {
            admit(t.apply(&u), &mut known, &mut queue)?;
        }
        maps.insert(u, taus);
    }
    Ok(known.into_iter().filter(|e| !e.is_zero()).collect())
}
