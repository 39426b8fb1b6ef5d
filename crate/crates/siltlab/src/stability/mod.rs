//! Stability data on `K_0(proj A) ⊗ R = R^l`: numerical torsion classes,
//! semistability, walls, cones of silting complexes and the chamber fan.
//!
//! Vectors are rational and written in the basis `[P_1], ..., [P_l]`. A
//! vector `θ` pairs with a module through its dimension vector.

mod cone;
mod fan;
mod svg;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{submodule_dim_vectors, DimVector, Representation};
use crate::complexes::euler_pair;
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Field};

pub use cone::{wall, wall_from_data, Cone, Constraint, Halfspace};
pub use fan::{
    approach_sequence, chamber_coordinates, cone_of, explore_fan, locate_chamber, ApproachSchedule, ApproachStep, ChamberRecord, Fan,
};
pub use svg::{render_svg, Picture};

/// A rational vector in `K_0(proj A) ⊗ Q`.
pub type Theta = Vec<BigRational>;

pub fn theta_from_ints(v: &[i64]) -> Theta {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

/// Parse `"p/q,p/q,..."`.
pub fn parse_theta(s: &str) -> Result<Theta> {
    s.split(',').map(|x| parse_rational(x.trim())).collect()
}

pub fn format_theta(t: &Theta) -> Vec<String> {
    t.iter().map(format_rational).collect()
}

/// `θ(M) = Σ θ_i (dim M)_i`.
pub fn theta_eval(theta: &Theta, d: &DimVector) -> BigRational {
    euler_pair(theta, d)
}

/// `η ≤ θ` componentwise.
pub fn theta_leq(eta: &Theta, theta: &Theta) -> bool {
    eta.len() == theta.len() && eta.iter().zip(theta).all(|(a, b)| a <= b)
}

pub fn theta_scale(theta: &Theta, c: &BigRational) -> Theta {
    theta.iter().map(|x| x * c).collect()
}

pub fn theta_add(a: &Theta, b: &Theta) -> Theta {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn theta_sub(a: &Theta, b: &Theta) -> Theta {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Largest absolute coordinate.
pub fn sup_norm(a: &Theta) -> BigRational {
    a.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}

/// The primitive integer vector on the ray of `v` (zero stays zero).
pub fn primitive(v: &Theta) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_theta(v: &Theta) -> Theta {
    primitive(v).into_iter().map(BigRational::from_integer).collect()
}

/// Submodule and quotient dimension vectors of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquotientData {
    pub dim: DimVector,
    pub subs: BTreeSet<DimVector>,
}

impl SubquotientData {
    pub fn new(dim: DimVector, subs: BTreeSet<DimVector>) -> Self {
        SubquotientData { dim, subs }
    }

    pub fn of<F: Field>(m: &Representation<F>, budget: usize) -> Result<Self> {
        Ok(SubquotientData {
            dim: m.dims().clone(),
            subs: submodule_dim_vectors(m, budget)?,
        })
    }

    pub fn quotients(&self) -> BTreeSet<DimVector> {
        self.subs
            .iter()
            .map(|s| self.dim.iter().zip(s).map(|(a, b)| a - b).collect())
            .collect()
    }

    fn nonzero(d: &DimVector) -> bool {
        d.iter().any(|&x| x > 0)
    }

    pub fn in_tbar(&self, theta: &Theta) -> bool {
        self.quotients().iter().all(|q| !theta_eval(theta, q).is_negative())
    }

    pub fn in_t_strict(&self, theta: &Theta) -> bool {
        self.quotients()
            .iter()
            .filter(|q| Self::nonzero(q))
            .all(|q| theta_eval(theta, q).is_positive())
    }

    pub fn in_f(&self, theta: &Theta) -> bool {
        self.subs
            .iter()
            .filter(|s| Self::nonzero(s))
            .all(|s| theta_eval(theta, s).is_negative())
    }

    pub fn in_fbar(&self, theta: &Theta) -> bool {
        self.subs.iter().all(|s| !theta_eval(theta, s).is_positive())
    }

    pub fn is_semistable(&self, theta: &Theta) -> bool {
        theta_eval(theta, &self.dim).is_zero() && self.in_tbar(theta)
    }
}

fn check_len<F: Field>(theta: &Theta, m: &Representation<F>) -> Result<()> {
    if theta.len() != m.algebra().rank() {
        return Err(Error::Invalid(format!("θ has length {}, expected {}", theta.len(), m.algebra().rank())));
    }
    Ok(())
}

/// `M ∈ T̄_θ`: every quotient pairs nonnegatively with `θ`.
pub fn in_tbar<F: Field>(theta: &Theta, m: &Representation<F>, budget: usize) -> Result<bool> {
    check_len(theta, m)?;
    Ok(SubquotientData::of(m, budget)?.in_tbar(theta))
}

/// `M ∈ T_θ`: every nonzero quotient pairs positively with `θ`.
pub fn in_t_strict<F: Field>(theta: &Theta, m: &Representation<F>, budget: usize) -> Result<bool> {
    check_len(theta, m)?;
    Ok(SubquotientData::of(m, budget)?.in_t_strict(theta))
}

/// `M ∈ F_θ`: every nonzero submodule pairs negatively with `θ`.
pub fn in_f<F: Field>(theta: &Theta, m: &Representation<F>, budget: usize) -> Result<bool> {
    check_len(theta, m)?;
    Ok(SubquotientData::of(m, budget)?.in_f(theta))
}

/// `M ∈ F̄_θ`: every submodule pairs nonpositively with `θ`.
pub fn in_fbar<F: Field>(theta: &Theta, m: &Representation<F>, budget: usize) -> Result<bool> {
    check_len(theta, m)?;
    Ok(SubquotientData::of(m, budget)?.in_fbar(theta))
}

pub fn is_semistable<F: Field>(theta: &Theta, m: &Representation<F>, budget: usize) -> Result<bool> {
    check_len(theta, m)?;
    Ok(SubquotientData::of(m, budget)?.is_semistable(theta))
}

#[cfg(test)]
mod tests;
