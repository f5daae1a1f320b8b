//! Named example algebras with their axes, and seeded random parameter
//! instantiations of the same families.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraTable, Element};
use crate::constructions::{dim2_algebra, matsuo_algebra, FischerSpace};
use crate::error::Result;
use crate::rational::{format_rational, rat, Rational};

#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub table: AlgebraTable,
    /// The basis vectors, all of which are primitive axes.
    pub axes: Vec<Element>,
}

impl Case {
    fn with_basis_axes(name: String, table: AlgebraTable) -> Self {
        let axes = (0..table.dim()).map(|i| table.basis_element(i)).collect();
        Case { name, table, axes }
    }

    pub fn dim2(lambda: &Rational) -> Result<Self> {
        Ok(Self::with_basis_axes(
            format!("dim2(lambda={})", format_rational(lambda)),
            dim2_algebra(lambda)?,
        ))
    }

    pub fn matsuo_line(eta: &Rational) -> Result<Self> {
        Ok(Self::with_basis_axes(
            format!("matsuo-line(eta={})", format_rational(eta)),
            matsuo_algebra(&FischerSpace::single_line(), eta)?,
        ))
    }

    pub fn matsuo_s4(eta: &Rational) -> Result<Self> {
        Ok(Self::with_basis_axes(
            format!("matsuo-s4(eta={})", format_rational(eta)),
            matsuo_algebra(&FischerSpace::symmetric_group_s4(), eta)?,
        ))
    }
}

pub const DIM2_LAMBDAS: [(i64, i64); 3] = [(1, 3), (-2, 1), (3, 5)];

/// The three two-dimensional algebras and both bundled Matsuo algebras at
/// `eta = 1/2`.
pub fn standard_corpus() -> Vec<Case> {
    let mut cases: Vec<Case> = DIM2_LAMBDAS
        .iter()
        .map(|&(p, q)| Case::dim2(&rat(p, q)).expect("valid lambda"))
        .collect();
    cases.push(Case::matsuo_line(&rat(1, 2)).expect("valid eta"));
    cases.push(Case::matsuo_s4(&rat(1, 2)).expect("valid eta"));
    cases
}

/// `p/q` with `p, q` drawn uniformly from `[-9, 9]`, `q != 0`, redrawn until
/// `accept` holds.
pub fn sample_parameter(rng: &mut impl Rng, accept: impl Fn(&Rational) -> bool) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let q: i64 = rng.gen_range(-9..=9);
        if q == 0 {
            continue;
        }
        let value = rat(p, q);
        if accept(&value) {
            return value;
        }
    }
}

pub fn dim2_parameter_ok(lambda: &Rational) -> bool {
    !lambda.is_zero() && !lambda.is_one() && *lambda != rat(1, 2)
}

pub fn matsuo_parameter_ok(eta: &Rational) -> bool {
    !eta.is_zero() && !eta.is_one()
}

/// `count` cases cycling through the two-dimensional, one-line Matsuo and
/// S4 Matsuo families, parameters drawn from a ChaCha8 stream seeded with
/// `seed`.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| match k % 3 {
            0 => Case::dim2(&sample_parameter(&mut rng, dim2_parameter_ok)),
            1 => Case::matsuo_line(&sample_parameter(&mut rng, matsuo_parameter_ok)),
            _ => Case::matsuo_s4(&sample_parameter(&mut rng, matsuo_parameter_ok)),
        })
        .map(|c| c.expect("sampled parameters are admissible"))
        .collect()
}
