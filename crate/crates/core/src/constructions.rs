//! Example algebras: the two-dimensional non-commutative algebra on two
//! axes, Matsuo algebras of Fischer spaces, and the 2x2 matrix algebra used
//! as a non-primitive control.

use std::collections::BTreeSet;
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

/// Points with three-point lines; two distinct points share at most one line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FischerSpace {
    pub points: Vec<String>,
    pub lines: Vec<[usize; 3]>,
}

impl FischerSpace {
    pub fn new(points: Vec<String>, lines: Vec<[usize; 3]>) -> Result<Self> {
        let space = FischerSpace { points, lines };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.points.len();
        if n == 0 {
            return Err(Error::InvalidInput("Fischer space has no points".into()));
        }
        let mut labels = BTreeSet::new();
        for p in &self.points {
            if !labels.insert(p) {
                return Err(Error::InvalidInput(format!("duplicate point label {p:?}")));
            }
        }
        let mut owner = std::collections::HashMap::new();
        for (idx, line) in self.lines.iter().enumerate() {
            if let Some(&p) = line.iter().find(|&&p| p >= n) {
                return Err(Error::InvalidInput(format!(
                    "line {idx} refers to point {p}, but there are only {n} points"
                )));
            }
            let [p, q, r] = *line;
            if p == q || q == r || p == r {
                return Err(Error::InvalidInput(format!(
                    "line {idx} {line:?} repeats a point"
                )));
            }
            for (u, v) in [(p, q), (q, r), (p, r)] {
                let key = (u.min(v), u.max(v));
                if let Some(prev) = owner.insert(key, idx) {
                    return Err(Error::InvalidInput(format!(
                        "lines {prev} and {idx} share the points {} and {}",
                        self.points[key.0], self.points[key.1]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Third point on the line through `p` and `q`, if any.
    pub fn third_point(&self, p: usize, q: usize) -> Option<usize> {
        self.lines.iter().find_map(|line| {
            (line.contains(&p) && line.contains(&q) && p != q)
                .then(|| *line.iter().find(|&&r| r != p && r != q).unwrap())
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let space: FischerSpace = serde_json::from_str(text)?;
        space.validate()?;
        Ok(space)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("Fischer space serializes")
    }

    /// Three points on one line.
    pub fn single_line() -> Self {
        FischerSpace::new(vec!["a".into(), "b".into(), "c".into()], vec![[0, 1, 2]])
            .expect("valid space")
    }

    /// Transpositions of the symmetric group on four letters; `{s, t, s t s}`
    /// is a line whenever `s` and `t` do not commute.
    pub fn symmetric_group_s4() -> Self {
        type Perm = [usize; 4];
        let compose = |f: &Perm, g: &Perm| -> Perm { [f[g[0]], f[g[1]], f[g[2]], f[g[3]]] };
        let mut transpositions: Vec<(String, Perm)> = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut p = [0, 1, 2, 3];
                p.swap(i, j);
                transpositions.push((format!("({}{})", i + 1, j + 1), p));
            }
        }
        let index = |p: &Perm| transpositions.iter().position(|(_, q)| q == p).unwrap();
        let mut lines = BTreeSet::new();
        for (s, (_, sp)) in transpositions.iter().enumerate() {
            for (t, (_, tp)) in transpositions.iter().enumerate() {
                if compose(sp, tp) == compose(tp, sp) {
                    continue;
                }
                let r = index(&compose(&compose(sp, tp), sp));
                let mut line = [s, t, r];
                line.sort_unstable();
                lines.insert(line);
            }
        }
        FischerSpace::new(
            transpositions.into_iter().map(|(l, _)| l).collect(),
            lines.into_iter().collect(),
        )
        .expect("transposition space is valid")
    }
}

pub fn load_fischer_space(path: impl AsRef<Path>) -> Result<FischerSpace> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    FischerSpace::from_json_str(&text)
}

/// `a^2 = a`, `b^2 = b`, `ab = (1 - lambda) a + lambda b`,
/// `ba = (1 - lambda) b + lambda a`. Both generators are axes of type
/// `(lambda, 1 - lambda)`; `lambda = 1/2` is excluded since the type must
/// have `lambda != delta`.
pub fn dim2_algebra(lambda: &Rational) -> Result<AlgebraTable> {
    if lambda.is_zero() || lambda.is_one() || *lambda == rat(1, 2) {
        return Err(Error::InvalidInput(format!(
            "lambda must avoid 0, 1 and 1/2, got {}",
            format_rational(lambda)
        )));
    }
    let delta = Rational::one() - lambda;
    AlgebraTable::from_fn(vec!["a".into(), "b".into()], |i, j| match (i, j) {
        (0, 0) => vec![Rational::one(), Rational::zero()],
        (1, 1) => vec![Rational::zero(), Rational::one()],
        (0, 1) => vec![delta.clone(), lambda.clone()],
        _ => vec![lambda.clone(), delta.clone()],
    })
}

/// Commutative algebra on the points: `p p = p`, `p q = 0` for
/// non-collinear points and `p q = (eta/2)(p + q - r)` on a line `{p, q, r}`.
/// Each point is then an axis of Jordan type `eta`, so `eta` must avoid 0
/// and 1.
pub fn matsuo_algebra(space: &FischerSpace, eta: &Rational) -> Result<AlgebraTable> {
    space.validate()?;
    if eta.is_zero() || eta.is_one() {
        return Err(Error::InvalidInput(format!(
            "eta must avoid 0 and 1, got {}",
            format_rational(eta)
        )));
    }
    let n = space.points.len();
    let half = eta / Rational::from_integer(2.into());
    AlgebraTable::from_fn(space.points.clone(), |p, q| {
        let mut v = vec![Rational::zero(); n];
        if p == q {
            v[p] = Rational::one();
        } else if let Some(r) = space.third_point(p, q) {
            v[p] = half.clone();
            v[q] = half.clone();
            v[r] = -half.clone();
        }
        v
    })
}

/// Full matrix algebra `M_k(Q)` on the matrix units `e_ij`.
pub fn matrix_unit_algebra(k: usize) -> Result<AlgebraTable> {
    let labels = (0..k)
        .flat_map(|i| (0..k).map(move |j| format!("e{}{}", i + 1, j + 1)))
        .collect();
    AlgebraTable::from_fn(labels, |p, q| {
        let (i, j) = (p / k, p % k);
        let (l, m) = (q / k, q % k);
        let mut v = vec![Rational::zero(); k * k];
        if j == l {
            v[i * k + m] = Rational::one();
        }
        v
    })
}
