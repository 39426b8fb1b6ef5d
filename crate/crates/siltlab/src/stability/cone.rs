//! Polyhedral cones in `R^l` with exact rational data, kept in both
//! descriptions: generators and linear constraints.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{primitive, SubquotientData, Theta};
use crate::algebra::Representation;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{Dense, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Constraint {
    /// `n · θ ≥ 0`
    Geq,
    /// `n · θ = 0`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Theta,
    pub kind: Constraint,
}

fn dot(a: &Theta, b: &Theta) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

impl Halfspace {
    pub fn geq(normal: Theta) -> Self {
        Halfspace {
            normal,
            kind: Constraint::Geq,
        }
    }

    pub fn eq(normal: Theta) -> Self {
        Halfspace {
            normal,
            kind: Constraint::Eq,
        }
    }

    pub fn holds(&self, v: &Theta) -> bool {
        let x = dot(&self.normal, v);
        match self.kind {
            Constraint::Geq => !x.is_negative(),
            Constraint::Eq => x.is_zero(),
        }
    }

    /// Holds with `>` in place of `≥`.
    pub fn holds_strictly(&self, v: &Theta) -> bool {
        let x = dot(&self.normal, v);
        match self.kind {
            Constraint::Geq => x.is_positive(),
            Constraint::Eq => x.is_zero(),
        }
    }
}

/// A cone given by generators (its conic hull) and by constraints; both
/// describe the same set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub dim: usize,
    pub generators: Vec<Theta>,
    pub halfspaces: Vec<Halfspace>,
}

fn to_theta(v: Vec<BigInt>) -> Theta {
    v.into_iter().map(BigRational::from_integer).collect()
}

fn kernel(l: usize, rows: &[Theta]) -> Vec<Theta> {
    if rows.is_empty() {
        return (0..l)
            .map(|i| (0..l).map(|j| BigRational::from_integer(((i == j) as i64).into())).collect())
            .collect();
    }
    let m = Matrix::from_fn(rows.len(), l, |r, c| rows[r][c].clone());
    Dense(&Rationals).kernel(&m)
}

fn rank(l: usize, rows: &[Theta]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = Matrix::from_fn(rows.len(), l, |r, c| rows[r][c].clone());
    Dense(&Rationals).rank(&m)
}

impl Cone {
    /// Compute generators of `{θ : constraints}`: a basis of the lineality
    /// space with both signs, then the extreme rays of the pointed part,
    /// found by enumerating maximal sets of active constraints.
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>, budget: usize) -> Result<Self> {
        let normals: Vec<Theta> = halfspaces.iter().map(|h| h.normal.clone()).collect();
        let lineality = kernel(dim, &normals);
        let mut generators: Vec<Theta> = Vec::new();
        for k in &lineality {
            let p = primitive(k);
            generators.push(to_theta(p.iter().map(|x| -x).collect()));
            generators.push(to_theta(p));
        }
        let mut fixed: Vec<Theta> = halfspaces
            .iter()
            .filter(|h| h.kind == Constraint::Eq)
            .map(|h| h.normal.clone())
            .collect();
        fixed.extend(lineality.iter().cloned());
        let r0 = rank(dim, &fixed);
        let geqs: Vec<&Halfspace> = halfspaces.iter().filter(|h| h.kind == Constraint::Geq).collect();
        let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        if r0 < dim {
            let need = dim - 1 - r0;
            let mut work = 0usize;
            for subset in geqs.iter().combinations(need) {
                work += 1;
                if work > budget {
                    return Err(Error::BudgetExceeded(format!("ray enumeration over {} constraints", geqs.len())));
                }
                let mut rows = fixed.clone();
                rows.extend(subset.iter().map(|h| h.normal.clone()));
                let ker = kernel(dim, &rows);
                if ker.len() != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let v: Theta = ker[0].iter().map(|x| x * BigRational::from_integer(sign.into())).collect();
                    if halfspaces.iter().all(|h| h.holds(&v)) {
                        rays.insert(primitive(&v));
                    }
                }
            }
        }
        generators.extend(rays.into_iter().map(to_theta));
        Ok(Cone {
            dim,
            generators,
            halfspaces,
        })
    }

    /// The cone spanned by linearly independent generators.
    pub fn simplicial(dim: usize, generators: Vec<Theta>) -> Result<Self> {
        let k = generators.len();
        if rank(dim, &generators) != k {
            return Err(Error::Invalid("generators are linearly dependent".into()));
        }
        let mut halfspaces: Vec<Halfspace> = kernel(dim, &generators).into_iter().map(Halfspace::eq).collect();
        if k > 0 {
            // rows of the left inverse (G^T G)^{-1} G^T pick out the coefficients
            let q = Rationals;
            let d = Dense(&q);
            let g = Matrix::from_fn(dim, k, |r, c| generators[c][r].clone());
            let gt = g.transpose();
            let inv = d
                .inverse(&d.mul(&gt, &g))
                .ok_or_else(|| Error::Invalid("singular Gram matrix".into()))?;
            let left = d.mul(&inv, &gt);
            for i in 0..k {
                halfspaces.push(Halfspace::geq(primitive_row(&left, i)));
            }
        }
        Ok(Cone {
            dim,
            generators,
            halfspaces,
        })
    }

    pub fn contains(&self, v: &Theta) -> bool {
        self.halfspaces.iter().all(|h| h.holds(v))
    }

    /// Relative interior: every inequality holds strictly.
    pub fn in_relative_interior(&self, v: &Theta) -> bool {
        self.halfspaces.iter().all(|h| h.holds_strictly(v))
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        rank(self.dim, &self.generators)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.dim
    }

    pub fn intersect(&self, other: &Cone, budget: usize) -> Result<Cone> {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        Cone::from_halfspaces(self.dim, hs, budget)
    }

    /// Sum of the primitive generators.
    pub fn interior_point(&self) -> Theta {
        let mut acc = vec![BigRational::zero(); self.dim];
        for g in &self.generators {
            for (a, x) in acc.iter_mut().zip(primitive(g)) {
                *a += BigRational::from_integer(x);
            }
        }
        acc
    }

    /// Same point set, compared through generators.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.dim == other.dim
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Every generator satisfies every constraint.
    pub fn is_consistent(&self) -> bool {
        self.generators.iter().all(|g| self.contains(g))
    }
}

fn primitive_row(m: &Matrix<BigRational>, i: usize) -> Theta {
    to_theta(primitive(&m.row(i).to_vec()))
}

/// The stability space `D(M)` from the dimension vector and submodule
/// dimension vectors of `M`.
pub fn wall_from_data(data: &SubquotientData, budget: usize) -> Result<Cone> {
    let l = data.dim.len();
    let as_theta = |d: &Vec<usize>| -> Theta { d.iter().map(|&x| BigRational::from_integer(x.into())).collect() };
    let mut hs = vec![Halfspace::eq(as_theta(&data.dim))];
    for q in data.quotients() {
        if q.iter().all(|&x| x == 0) || q == data.dim {
            continue;
        }
        hs.push(Halfspace::geq(as_theta(&q)));
    }
    Cone::from_halfspaces(l, hs, budget)
}

/// `D(M) = {θ : M is θ-semistable}`.
pub fn wall<F: Field>(m: &Representation<F>, budget: usize) -> Result<Cone> {
    if m.is_zero() {
        return Err(Error::Invalid("the zero module has no wall".into()));
    }
    wall_from_data(&SubquotientData::of(m, budget)?, budget)
}
