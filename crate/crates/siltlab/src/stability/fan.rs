//! The g-vector fan: cones of silting complexes, exploration by mutation,
//! and walks towards a target vector.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{sup_norm, theta_add, theta_leq, theta_scale, theta_sub, Cone, Theta};
use crate::algebra::Algebra;
use crate::complexes::GVector;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{Dense, Matrix};
use crate::silting::{is_nested, mutate_two_term, SiltingComplex};

fn gvec_theta(g: &GVector) -> Theta {
    g.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

/// `C(T)`, spanned by the g-vectors of the summands of `T`.
pub fn cone_of<F: Field>(t: &SiltingComplex<F>) -> Cone {
    let gens = t.summand_g_vectors().iter().map(gvec_theta).collect();
    Cone::simplicial(t.algebra().rank(), gens).expect("g-vectors of a silting complex form a basis")
}

/// A chamber `C(T)°` found by exploration.
#[derive(Clone, Debug)]
pub struct ChamberRecord<F: Field> {
    pub silting: SiltingComplex<F>,
    pub cone: Cone,
    /// Summand index to the key of the chamber across the wall opposite it.
    pub neighbors: BTreeMap<usize, Vec<GVector>>,
}

#[derive(Clone, Debug)]
pub struct Fan<F: Field> {
    pub chambers: Vec<ChamberRecord<F>>,
    /// No mutation leads outside the chambers found.
    pub complete: bool,
}

/// Breadth-first search over two-term mutations starting at `A`, keeping at
/// most `budget` chambers.
pub fn explore_fan<F: Field>(alg: &Algebra<F>, budget: usize) -> Result<Fan<F>> {
    if budget == 0 {
        return Err(Error::Invalid("budget must be positive".into()));
    }
    let l = alg.rank();
    let start = SiltingComplex::regular(alg);
    let mut index: HashMap<Vec<GVector>, usize> = HashMap::new();
    let mut chambers: Vec<ChamberRecord<F>> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(start.key(), 0);
    chambers.push(ChamberRecord {
        cone: cone_of(&start),
        silting: start,
        neighbors: BTreeMap::new(),
    });
    queue.push_back(0);
    let mut complete = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..l {
            let (n, _, _) = mutate_two_term(&chambers[i].silting, j)?;
            let key = n.key();
            chambers[i].neighbors.insert(j, key.clone());
            if index.contains_key(&key) {
                continue;
            }
            if chambers.len() >= budget {
                complete = false;
                continue;
            }
            index.insert(key, chambers.len());
            queue.push_back(chambers.len());
            chambers.push(ChamberRecord {
                cone: cone_of(&n),
                silting: n,
                neighbors: BTreeMap::new(),
            });
        }
    }
    Ok(Fan { chambers, complete })
}

/// Coordinates of `θ` in the basis of summand g-vectors.
pub fn chamber_coordinates<F: Field>(t: &SiltingComplex<F>, theta: &Theta) -> Vec<BigRational> {
    let gs = t.summand_g_vectors();
    let l = gs.len();
    let m = Matrix::from_fn(l, l, |r, c| BigRational::from_integer(gs[c][r].into()));
    Dense(&Rationals)
        .solve(&m, theta)
        .expect("g-vectors of a silting complex form a basis")
}

/// The silting complex whose open chamber contains `θ`, by breadth-first
/// search over mutations from `start`, visiting at most `max_chambers`
/// chambers. Neighbours across walls where `θ` has its most negative
/// coordinates are tried first.
pub fn locate_chamber<F: Field>(start: &SiltingComplex<F>, theta: &Theta, max_chambers: usize) -> Result<SiltingComplex<F>> {
    if theta.len() != start.algebra().rank() {
        return Err(Error::Invalid("θ has the wrong length".into()));
    }
    let mut seen: HashSet<Vec<GVector>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.key());
    queue.push_back(start.clone());
    let mut visited = 0usize;
    while let Some(t) = queue.pop_front() {
        visited += 1;
        let c = chamber_coordinates(&t, theta);
        if c.iter().all(|x| x.is_positive()) {
            return Ok(t);
        }
        if c.iter().all(|x| !x.is_negative()) {
            return Err(Error::SearchExhausted("the vector lies on a wall".into()));
        }
        if visited >= max_chambers {
            break;
        }
        let mut order: Vec<usize> = (0..c.len()).collect();
        order.sort_by(|&a, &b| c[a].cmp(&c[b]));
        for j in order {
            let n = mutate_two_term(&t, j)?.0;
            if seen.insert(n.key()) {
                queue.push_back(n);
            }
        }
    }
    Err(Error::SearchExhausted(format!("no chamber found among {visited} visited")))
}

/// `θ^i = θ + δ_i [A]` with `δ_i = 1 / (scale · (first + i))`, `i = 0, 1, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproachSchedule {
    pub scale: u64,
    pub first: u64,
    /// Chamber budget of each search.
    pub max_chambers: usize,
}

impl Default for ApproachSchedule {
    fn default() -> Self {
        ApproachSchedule {
            scale: 1,
            first: 1,
            max_chambers: 32,
        }
    }
}

impl ApproachSchedule {
    pub fn delta(&self, i: usize) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.scale) * BigInt::from(self.first + i as u64))
    }
}

/// One vector of an approach sequence together with its chamber.
#[derive(Clone, Debug)]
pub struct ApproachStep<F: Field> {
    pub theta: Theta,
    /// Smallest positive integer with `ε θ^i` integral.
    pub epsilon: BigInt,
    pub lattice_point: Vec<BigInt>,
    /// Coordinates of `ε θ^i` in the summand g-vectors of `silting`, all positive.
    pub multiplicities: Vec<BigInt>,
    pub silting: SiltingComplex<F>,
}

fn step_for<F: Field>(theta: Theta, t: SiltingComplex<F>) -> ApproachStep<F> {
    let eps = theta.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let e = BigRational::from_integer(eps.clone());
    let lattice_point = theta.iter().map(|x| (x * &e).to_integer()).collect();
    let multiplicities = chamber_coordinates(&t, &theta).iter().map(|x| (x * &e).to_integer()).collect();
    ApproachStep {
        theta,
        epsilon: eps,
        lattice_point,
        multiplicities,
        silting: t,
    }
}

/// Rational vectors `θ^0 ≥ θ^1 ≥ ... ≥ θ` converging to `θ`, each in the open
/// chamber of a two-term silting complex. If `θ` is itself in an open
/// chamber the sequence is constant.
///
/// Asserted on output: the chain condition, `|θ^i − θ|_∞ ≤ 1/(i+1)`, and
/// nestedness of consecutive silting complexes.
pub fn approach_sequence<F: Field>(
    start: &SiltingComplex<F>,
    theta: &Theta,
    k: usize,
    schedule: ApproachSchedule,
) -> Result<Vec<ApproachStep<F>>> {
    let alg = start.algebra();
    let l = alg.rank();
    if theta.len() != l {
        return Err(Error::Invalid("θ has the wrong length".into()));
    }
    if schedule.scale == 0 || schedule.first == 0 {
        return Err(Error::Invalid("schedule needs positive scale and first index".into()));
    }
    match locate_chamber(start, theta, schedule.max_chambers) {
        Ok(t) => return Ok((0..k).map(|_| step_for(theta.clone(), t.clone())).collect()),
        Err(Error::SearchExhausted(_)) => {}
        Err(e) => return Err(e),
    }
    let ones: Theta = vec![BigRational::one(); l];
    let mut out: Vec<ApproachStep<F>> = Vec::with_capacity(k);
    let mut current = start.clone();
    for i in 0..k {
        let th = theta_add(theta, &theta_scale(&ones, &schedule.delta(i)));
        current = locate_chamber(&current, &th, schedule.max_chambers)?;
        out.push(step_for(th, current.clone()));
    }
    for (i, s) in out.iter().enumerate() {
        if sup_norm(&theta_sub(&s.theta, theta)) > BigRational::new(BigInt::one(), BigInt::from(i + 1)) {
            return Err(Error::Invalid(format!("θ^{i} is outside the radius bound")));
        }
        if !theta_leq(theta, &s.theta) {
            return Err(Error::Invalid(format!("θ^{i} is not above θ")));
        }
    }
    for w in out.windows(2) {
        if !theta_leq(&w[1].theta, &w[0].theta) {
            return Err(Error::Invalid("approach sequence is not decreasing".into()));
        }
        if !is_nested(&w[1].silting, &w[0].silting)? {
            return Err(Error::NestednessViolation("consecutive chambers of the approach sequence".into()));
        }
    }
    Ok(out)
}
