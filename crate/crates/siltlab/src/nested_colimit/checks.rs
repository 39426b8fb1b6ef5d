//! Finite checks on a directed system: surjectivity of the inverse system of
//! Hom groups into test modules, the limit torsion class on a bounded module
//! catalog, and the Bongartz approach sequence.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{DirectedSystem, NestedChain};
use crate::algebra::{RepCatalog, Representation};
use crate::complexes::{induced_on_module, pmat_on_module, GVector, TwoTermComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy_into, kernel_of_columns, Echelon, Matrix, SparseVec};
use crate::silting::{bongartz_complement, is_silting, SiltingComplex};
use crate::stability::{
    approach_sequence, chamber_coordinates, theta_from_ints, ApproachSchedule, SubquotientData, Theta,
};

/// One stage of the inverse system `Hom(T'_{i+1}, X) -> Hom(T'_i, X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlEntry {
    pub module: usize,
    pub stage: usize,
    /// `dim Hom(T'_{i+1}, X)`
    pub source_dim: usize,
    /// `dim Hom(T'_i, X)`
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MlReport {
    pub entries: Vec<MlEntry>,
    /// Test modules outside the aisle of the last chain element.
    pub invalid: Vec<usize>,
}

impl MlReport {
    pub fn all_surjective(&self) -> bool {
        self.entries.iter().all(|e| e.surjective)
    }
}

fn sparse_columns<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<SparseVec<F::Elem>> {
    (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter(|&r| !f.is_zero(m.get(r, c)))
                .map(|r| (r, m.get(r, c).clone()))
                .collect()
        })
        .collect()
}

/// `Σ v_k columns[k]`.
fn combine<F: Field>(f: &F, columns: &[SparseVec<F::Elem>], v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut acc = BTreeMap::new();
    for (k, c) in v {
        axpy_into(f, &mut acc, c, &columns[*k]);
    }
    acc.into_iter().collect()
}

/// Basis of `Hom_K(P, X) ⊆ Hom(P^0, X)`.
fn hom_to_module_basis<F: Field>(p: &TwoTermComplex<F>, x: &Representation<F>) -> Vec<SparseVec<F::Elem>> {
    let f = p.field();
    let m = induced_on_module(p, x);
    if m.rows() == 0 {
        return (0..m.cols()).map(|i| vec![(i, f.one())]).collect();
    }
    kernel_of_columns(f, &sparse_columns(f, &m))
}

/// For every test module `X` in the aisle of the last `T_k` and every stage,
/// whether `Hom(f_i, X)` is onto.
pub fn mittag_leffler_check<F: Field>(system: &DirectedSystem<F>, modules: &[Representation<F>]) -> Result<MlReport> {
    let last = system.chain.last().torsion_data()?;
    let mut report = MlReport::default();
    for (mi, x) in modules.iter().enumerate() {
        if x.algebra() != system.chain.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if !last.in_torsion_class(x)? {
            report.invalid.push(mi);
            continue;
        }
        let f = x.field();
        let bases: Vec<Vec<SparseVec<F::Elem>>> = system.objects.iter().map(|p| hom_to_module_basis(p, x)).collect();
        for (i, map) in system.maps.iter().enumerate() {
            let induced = sparse_columns(f, &pmat_on_module(f, &map.zero, x));
            let mut ech = Echelon::new(f.clone());
            for v in &bases[i + 1] {
                ech.insert(&combine(f, &induced, v));
            }
            let target_dim = bases[i].len();
            let rank = ech.rank();
            report.entries.push(MlEntry {
                module: mi,
                stage: i,
                source_dim: bases[i + 1].len(),
                target_dim,
                rank,
                surjective: rank == target_dim,
            });
        }
    }
    Ok(report)
}

/// Feasible interval `{c > 0 : c g ≥ v}` as `(lower, upper)`; the lower end is exclusive when zero.
fn interval(g: &GVector, v: &Theta) -> Option<(BigRational, Option<BigRational>)> {
    let mut lo = BigRational::zero();
    let mut hi: Option<BigRational> = None;
    for (gi, vi) in g.iter().zip(v) {
        let gi = BigRational::from_integer((*gi).into());
        if gi.is_zero() {
            if vi.is_positive() {
                return None;
            }
        } else if gi.is_positive() {
            lo = lo.max(vi / &gi);
        } else {
            let b = vi / &gi;
            hi = Some(match hi {
                Some(h) if h < b => h,
                _ => b,
            });
        }
    }
    match &hi {
        Some(h) if !h.is_positive() || *h < lo => None,
        _ => Some((lo, hi)),
    }
}

/// Positive scalars `c_i` with `θ ≤ c_{i+1} g_{i+1} ≤ c_i g_i` for the
/// g-vectors `g_i` of a chain, if the greedy choice from the end finds them.
pub fn chain_scalings(gs: &[GVector], theta: &Theta) -> Option<Vec<BigRational>> {
    let mut out: Vec<BigRational> = vec![BigRational::zero(); gs.len()];
    let mut bound = theta.clone();
    let mut prefer: Option<BigRational> = None;
    for i in (0..gs.len()).rev() {
        let (lo, hi) = interval(&gs[i], &bound)?;
        let ok = |c: &BigRational| c.is_positive() && *c >= lo && hi.as_ref().map_or(true, |h| c <= h);
        let mut candidates: Vec<BigRational> = Vec::new();
        candidates.extend(prefer.clone());
        candidates.push(lo.clone());
        candidates.extend(hi.clone());
        candidates.push(BigRational::one());
        let c = candidates.into_iter().find(|c| ok(c))?;
        bound = gs[i].iter().map(|&x| &c * BigRational::from_integer(x.into())).collect();
        prefer = Some(c.clone());
        out[i] = c;
    }
    Some(out)
}

/// Aisle intersections against `T̄_θ` on a module catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub theta: Theta,
    /// `c_i` with `c_i g(T_i)` decreasing to `θ`, if found.
    pub scalings: Option<Vec<BigRational>>,
    /// `M ∈ T̄_θ`, per catalog module.
    pub in_tbar: Vec<bool>,
    /// `M ∈ Fac H^0(T_i)`, per stage then module.
    pub in_aisle: Vec<Vec<bool>>,
    /// `|S_k|` for `S_k = ⋂_{i ≤ k} Fac H^0(T_i)`.
    pub s_counts: Vec<usize>,
    pub b_count: usize,
    /// `T̄_θ ⊆ S_k` for every `k`.
    pub sandwich: bool,
    /// First `k` with `S_k = T̄_θ`.
    pub stabilization: Option<usize>,
    /// `S_k \ T̄_θ` for the last `k`.
    pub residual: Vec<usize>,
}

impl LimitReport {
    /// `S_k` as a membership vector.
    pub fn intersection(&self, k: usize) -> Vec<bool> {
        let n = self.in_tbar.len();
        (0..n).map(|m| self.in_aisle[..=k].iter().all(|row| row[m])).collect()
    }

    pub fn consistent(&self) -> bool {
        self.scalings.is_some()
    }
}

/// Compare `⋂_{i ≤ k} Fac H^0(T_i)` with `T̄_θ` on every module of the catalog.
pub fn limit_torsion_class<F: Field>(
    chain: &NestedChain<F>,
    theta: &Theta,
    catalog: &RepCatalog<F>,
    budget: usize,
) -> Result<LimitReport> {
    let alg = chain.algebra();
    if theta.len() != alg.rank() {
        return Err(Error::Invalid("θ has the wrong length".into()));
    }
    if &catalog.algebra != alg {
        return Err(Error::AlgebraMismatch);
    }
    let gs: Vec<GVector> = chain.items().iter().map(|t| t.g_vector()).collect();
    let scalings = chain_scalings(&gs, theta);
    let subs = catalog.submodule_dim_sets(budget)?;
    let in_tbar: Vec<bool> = catalog
        .modules
        .iter()
        .zip(subs)
        .map(|(e, s)| SubquotientData::new(e.module.dims().clone(), s).in_tbar(theta))
        .collect();
    let mut in_aisle = Vec::with_capacity(chain.len());
    for t in chain.items() {
        let data = t.torsion_data()?;
        let row = catalog
            .modules
            .iter()
            .map(|e| data.in_torsion_class(&e.module))
            .collect::<Result<Vec<bool>>>()?;
        in_aisle.push(row);
    }
    let n = in_tbar.len();
    let b_count = in_tbar.iter().filter(|&&b| b).count();
    let mut report = LimitReport {
        theta: theta.clone(),
        scalings,
        in_tbar,
        in_aisle,
        s_counts: Vec::new(),
        b_count,
        sandwich: true,
        stabilization: None,
        residual: Vec::new(),
    };
    for k in 0..chain.len() {
        let s = report.intersection(k);
        report.s_counts.push(s.iter().filter(|&&x| x).count());
        if (0..n).any(|m| report.in_tbar[m] && !s[m]) {
            report.sandwich = false;
        }
        if report.stabilization.is_none() && s == report.in_tbar {
            report.stabilization = Some(k);
        }
        if k + 1 == chain.len() {
            report.residual = (0..n).filter(|&m| s[m] && !report.in_tbar[m]).collect();
        }
    }
    Ok(report)
}

/// The approach `θ^i = [U] + (1/i)[A]` towards a presilting `U`.
#[derive(Clone, Debug)]
pub struct BongartzReport<F: Field> {
    pub completion: SiltingComplex<F>,
    pub complement: TwoTermComplex<F>,
    /// `U ⊕ U'` is silting.
    pub is_silting: bool,
    /// First index `i` of the sequence; earlier vectors may leave the chamber.
    pub first_index: u64,
    pub thetas: Vec<Theta>,
    /// `θ^i` lies in the open chamber of `U ⊕ U'`.
    pub in_chamber: Vec<bool>,
    pub limit: Option<LimitReport>,
}

impl<F: Field> BongartzReport<F> {
    pub fn holds(&self) -> bool {
        self.is_silting
            && self.in_chamber.iter().all(|&b| b)
            && self.limit.as_ref().map_or(true, |l| l.stabilization == Some(0) && l.sandwich)
    }
}

/// Follow `θ^i = [U] + (1/i)[A]` for `k` indices `i > m`, where `m` is the
/// least index after which `θ^i` stays in the chamber of `U ⊕ U'`, and check
/// every `θ^i` lands in that chamber. With a catalog, also compare the
/// torsion class of `U ⊕ U'` with `T̄_[U]`.
pub fn bongartz_limit_check<F: Field>(
    u: &TwoTermComplex<F>,
    k: usize,
    catalog: Option<&RepCatalog<F>>,
    budget: usize,
) -> Result<BongartzReport<F>> {
    let alg = u.algebra();
    let l = alg.rank();
    let complement = bongartz_complement(u)?;
    let sum = u.direct_sum(&complement);
    let silting = is_silting(&sum)?;
    let completion = SiltingComplex::new(&sum)?;
    let theta = theta_from_ints(&u.g_vector());
    let cu = chamber_coordinates(&completion, &theta);
    let ca = chamber_coordinates(&completion, &vec![BigRational::one(); l]);
    let mut m = BigRational::zero();
    for (x, y) in cu.iter().zip(&ca) {
        if x.is_positive() && y.is_negative() {
            m = m.max(-y / x);
        } else if x.is_zero() && !y.is_positive() {
            return Err(Error::SearchExhausted("[A] leaves the Bongartz chamber".into()));
        }
    }
    let first = m.floor().to_integer() + 1;
    let first = u64::try_from(first).map_err(|_| Error::Invalid("index out of range".into()))?;
    let schedule = ApproachSchedule {
        scale: 1,
        first,
        ..Default::default()
    };
    let steps = approach_sequence(&SiltingComplex::regular(alg), &theta, k, schedule)?;
    let key = completion.key();
    let in_chamber = steps.iter().map(|s| s.silting.key() == key).collect();
    let thetas = steps.iter().map(|s| s.theta.clone()).collect();
    let limit = match catalog {
        Some(c) if !steps.is_empty() => {
            let chain = NestedChain::new(steps.iter().map(|s| s.silting.clone()).collect())?;
            Some(limit_torsion_class(&chain, &theta, c, budget)?)
        }
        _ => None,
    };
    Ok(BongartzReport {
        completion,
        complement,
        is_silting: silting,
        first_index: first,
        thetas,
        in_chamber,
        limit,
    })
}
