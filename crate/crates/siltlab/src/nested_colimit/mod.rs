//! Directed systems presenting the homotopy colimit of a nested chain of
//! two-term silting complexes `T_0, T_1, ...` (each `T_{i+1}` in the aisle
//! of `T_i`).
//!
//! Every `T_i` comes with a degreewise split exact row
//! `0 -> A -λ-> T_i^(1) -p-> T_i^(2) -> 0` whose terms lie in `add(T_i)` up
//! to contractible summands. A stage maps row `i` into row `i+1` by chain
//! maps `t: T_i^(1) -> T_{i+1}^(1)` and `t': T_i^(2) -> T_{i+1}^(2)`:
//!
//! 1. take the row `0 -> A -γ-> U_1 -q-> U_2 -> 0` of `T_{i+1}`;
//! 2. solve `λ s = γ` for `s: T_i^(1) -> U_1` exactly (the contractible
//!    summand `A =id A` of `T_i^(1)` absorbs homotopies);
//! 3. solve `p s' = s q` for `s': T_i^(2) -> U_2`;
//! 4. take a minimal left `add(T_{i+1})`-approximation of `T_i^(2)`, padded by
//!    a contractible so that it becomes a degreewise split mono `j: T_i^(2) -> Ū`;
//! 5. set `t = [s | p j]` into `U_1 ⊕ Ū` and `t' = [s' | j]` into `U_2 ⊕ Ū`.
//!
//! The cokernels `Z`, `Z'` of `t`, `t'` are two-term complexes; the stage is
//! certified by `Hom(Z, T_{i+1}[1]) = 0 = Hom(Z', T_{i+1}[1])`. That single
//! group suffices: `Z` is a bounded complex of finitely generated projectives,
//! so `Hom(Z, -)` commutes with coproducts, and `Hom(Z, Y[n]) = 0` for `n ≥ 2`
//! and any `Y` in the aisle of `T_{i+1}` by degree reasons. Hence the class
//! `{Y : Hom(Z, Y[1]) = 0}` is closed under extensions, coproducts and
//! positive shifts, and contains `T_{i+1}`, so it contains the whole aisle.

mod checks;

use crate::algebra::{Algebra, PathAlgebra};
use crate::complexes::{
    degreewise_cokernel, factor_through, hom0, hom1_dim, minimal_form, pad_map, precomposition_matrix, summand_classes,
    ChainMap, TwoTermComplex,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Dense;
use crate::silting::{bongartz_triangle, is_nested, minimal_left_approximation, mutate, Direction, PresentingRow, SiltingComplex};

pub use checks::{
    bongartz_limit_check, chain_scalings, limit_torsion_class, mittag_leffler_check, BongartzReport, LimitReport,
    MlEntry, MlReport,
};

/// Default cap on the number of indecomposable projective summands of a row.
pub const DEFAULT_GROWTH_CAP: usize = 512;

/// Largest minimal form that is decomposed explicitly when checking `add`-equivalence.
pub const DECOMPOSE_CAP: usize = 24;

/// `T_0, ..., T_k` with `T_{i+1}` in the aisle of `T_i`.
#[derive(Clone, Debug)]
pub struct NestedChain<F: Field> {
    items: Vec<SiltingComplex<F>>,
}

impl<F: Field> NestedChain<F> {
    pub fn new(items: Vec<SiltingComplex<F>>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::Invalid("a chain needs at least one silting complex".into()));
        }
        for (i, w) in items.windows(2).enumerate() {
            if w[0].algebra() != w[1].algebra() {
                return Err(Error::AlgebraMismatch);
            }
            if !is_nested(&w[1], &w[0])? {
                return Err(Error::NestednessViolation(format!("T_{} is not in the aisle of T_{i}", i + 1)));
            }
        }
        Ok(NestedChain { items })
    }

    pub fn items(&self) -> &[SiltingComplex<F>] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn last(&self) -> &SiltingComplex<F> {
        self.items.last().expect("chains are nonempty")
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.items[0].algebra()
    }
}

/// `T_0 = A` and `T_{i+1}` the left mutation of `T_i` at its first summand,
/// over the Kronecker algebra. `T_i` has g-vector `(−(2i−1), 2i+1)`.
pub fn kronecker_chain<F: Field>(alg: &Algebra<F>, i_max: usize) -> Result<NestedChain<F>> {
    if alg.path_algebra() != &PathAlgebra::kronecker() {
        return Err(Error::Invalid("the Kronecker chain needs the Kronecker algebra".into()));
    }
    let mut items = vec![SiltingComplex::regular(alg)];
    for i in 1..=i_max {
        let next = mutate(&items[i - 1], 0, Direction::Left)?;
        let i = i as i64;
        if next.g_vector() != vec![-(2 * i - 1), 2 * i + 1] {
            return Err(Error::Invalid(format!("unexpected g-vector {:?} at step {i}", next.g_vector())));
        }
        items.push(next);
    }
    NestedChain::new(items)
}

/// The row `0 -> A -> T^(1) -> T^(2) -> 0` of a silting complex.
pub fn build_stage_row<F: Field>(t: &SiltingComplex<F>) -> Result<PresentingRow<F>> {
    bongartz_triangle(t)
}

/// Finite certificates of one stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageCertificates {
    pub rows_exact: bool,
    pub squares_commute: bool,
    pub split_mono: bool,
    /// `dim Hom(Z, T_{i+1}[1])`
    pub hom_z: usize,
    /// `dim Hom(Z', T_{i+1}[1])`
    pub hom_z_prime: usize,
    /// `Hom(t, W)` is onto for every summand `W` of `T_{i+1}`.
    pub preenvelope: bool,
    pub preenvelope_prime: bool,
}

impl StageCertificates {
    pub fn all_hold(&self) -> bool {
        self.rows_exact
            && self.squares_commute
            && self.split_mono
            && self.hom_z == 0
            && self.hom_z_prime == 0
            && self.preenvelope
            && self.preenvelope_prime
    }
}

/// The maps from row `i` to row `i+1`, with their cokernels.
#[derive(Clone, Debug)]
pub struct DiagramStage<F: Field> {
    pub index: usize,
    pub row: PresentingRow<F>,
    pub next_row: PresentingRow<F>,
    pub t: ChainMap<F::Elem>,
    pub t_prime: ChainMap<F::Elem>,
    pub z: TwoTermComplex<F>,
    pub z_prime: TwoTermComplex<F>,
    pub certificates: StageCertificates,
}

fn equal_maps<F: Field>(f: &F, a: &ChainMap<F::Elem>, b: &ChainMap<F::Elem>) -> bool {
    a.neg.rows() == b.neg.rows()
        && a.neg.cols() == b.neg.cols()
        && a.zero.rows() == b.zero.rows()
        && a.zero.cols() == b.zero.cols()
        && a.sub(f, b).is_zero(f)
}

/// `Hom(target, W) -> Hom(source, W)` is onto for every summand `W` of `t`.
fn is_preenvelope<F: Field>(
    map: &ChainMap<F::Elem>,
    source: &TwoTermComplex<F>,
    target: &TwoTermComplex<F>,
    t: &SiltingComplex<F>,
) -> Result<bool> {
    let d = Dense(source.field());
    for w in t.summands() {
        let to = hom0(source, w)?;
        if to.dim() == 0 {
            continue;
        }
        let from = hom0(target, w)?;
        let m = precomposition_matrix(map, &to, &from)?;
        if d.rank(&m) != to.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Map `row` (the row of `prev`) into a row for `next`.
pub fn special_preenvelope_step<F: Field>(
    index: usize,
    row: &PresentingRow<F>,
    prev: &SiltingComplex<F>,
    next: &SiltingComplex<F>,
    growth_cap: usize,
) -> Result<DiagramStage<F>> {
    let alg = next.algebra();
    let f = alg.field();
    if !is_nested(next, prev)? {
        return Err(Error::NestednessViolation(format!("T_{} is not in the aisle of T_{index}", index + 1)));
    }
    let fresh = build_stage_row(next)?;
    let s = factor_through(&row.lambda, &fresh.lambda, &row.a, &row.t1, &fresh.t1)?
        .ok_or_else(|| Error::LinearSolveFailure("λ s = γ has no solution".into()))?;
    let sq = s.then(alg, &fresh.p);
    let s_prime = factor_through(&row.p, &sq, &row.t1, &row.t2, &fresh.t2)?
        .ok_or_else(|| Error::LinearSolveFailure("p s' = s q has no solution".into()))?;
    let (w, j0) = minimal_left_approximation(&row.t2, next.summands())?;
    let (ubar, j) = pad_map(&row.t2, &w, &j0);

    let t = s.hstack(&row.p.then(alg, &j));
    let t_prime = s_prime.hstack(&j);
    let t1 = fresh.t1.direct_sum(&ubar);
    let t2 = fresh.t2.direct_sum(&ubar);
    if t1.size() + t2.size() > growth_cap {
        return Err(Error::BudgetExceeded(format!(
            "stage {} has {} projective summands (cap {growth_cap})",
            index + 1,
            t1.size() + t2.size()
        )));
    }
    let next_row = PresentingRow {
        a: fresh.a.clone(),
        lambda: fresh.lambda.hstack(&fresh.a.zero_map_to(&ubar)),
        p: fresh.p.block_diag(alg, &ubar.identity_map()),
        t1,
        t2,
    };
    let (z, _) = degreewise_cokernel(&t, &next_row.t1)?;
    let (z_prime, _) = degreewise_cokernel(&t_prime, &next_row.t2)?;
    let hom_z = hom1_dim(&z, next.complex())?;
    let hom_z_prime = hom1_dim(&z_prime, next.complex())?;
    if hom_z != 0 || hom_z_prime != 0 {
        return Err(Error::NestednessViolation(format!(
            "stage {index}: Hom(Z, T[1]) has dimension {hom_z}, Hom(Z', T[1]) has dimension {hom_z_prime}"
        )));
    }
    let l = alg.rank();
    let certificates = StageCertificates {
        rows_exact: row.is_exact() && next_row.is_exact(),
        squares_commute: t.is_chain_map(&row.t1, &next_row.t1)
            && t_prime.is_chain_map(&row.t2, &next_row.t2)
            && equal_maps(f, &row.lambda.then(alg, &t), &next_row.lambda)
            && equal_maps(f, &row.p.then(alg, &t_prime), &t.then(alg, &next_row.p)),
        split_mono: t.is_degreewise_split_mono(f, l) && t_prime.is_degreewise_split_mono(f, l),
        hom_z,
        hom_z_prime,
        preenvelope: is_preenvelope(&t, &row.t1, &next_row.t1, next)?,
        preenvelope_prime: is_preenvelope(&t_prime, &row.t2, &next_row.t2, next)?,
    };
    Ok(DiagramStage {
        index,
        row: row.clone(),
        next_row,
        t,
        t_prime,
        z,
        z_prime,
        certificates,
    })
}

/// `add(T'_i)` against `add(T_i)` for one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddCheck {
    /// `T'_i ∈ add(T_i)`.
    pub contained: bool,
    /// Multiplicity of each summand of `T_i` in `T'_i`.
    pub multiplicities: Vec<i64>,
    /// Size of the minimal form of `T'_i`.
    pub minimal_size: usize,
    /// Explicit decomposition agrees, when the minimal form was small enough to decompose.
    pub decomposition: Option<bool>,
}

impl AddCheck {
    pub fn holds(&self) -> bool {
        self.contained && self.multiplicities.iter().all(|&m| m >= 1) && self.decomposition != Some(false)
    }
}

/// The directed system `T'_0 -> T'_1 -> ...` with `T'_i = T_i^(1) ⊕ T_i^(2)`.
#[derive(Clone, Debug)]
pub struct DirectedSystem<F: Field> {
    pub chain: NestedChain<F>,
    pub rows: Vec<PresentingRow<F>>,
    pub stages: Vec<DiagramStage<F>>,
    pub objects: Vec<TwoTermComplex<F>>,
    /// `f_i = t_i ⊕ t'_i: T'_i -> T'_{i+1}`.
    pub maps: Vec<ChainMap<F::Elem>>,
    /// `f_{0→i}: T'_0 -> T'_i`.
    pub composed: Vec<ChainMap<F::Elem>>,
    pub add_checks: Vec<AddCheck>,
}

impl<F: Field> DirectedSystem<F> {
    pub fn certificates_hold(&self) -> bool {
        self.stages.iter().all(|s| s.certificates.all_hold()) && self.add_checks.iter().all(AddCheck::holds)
    }

    /// `f_{0→i+1} = f_{0→i} f_i` and every map is a chain map.
    pub fn composites_consistent(&self) -> bool {
        let alg = self.chain.algebra();
        let f = alg.field();
        self.maps.iter().enumerate().all(|(i, m)| {
            m.is_chain_map(&self.objects[i], &self.objects[i + 1])
                && equal_maps(f, &self.composed[i].then(alg, m), &self.composed[i + 1])
        })
    }
}

fn add_check<F: Field>(t: &SiltingComplex<F>, x: &TwoTermComplex<F>) -> Result<AddCheck> {
    let m = minimal_form(x);
    let contained = t.contains(&m)?;
    let multiplicities = t.multiplicities(&m).unwrap_or_default();
    let decomposition = if contained && m.size() <= DECOMPOSE_CAP {
        let classes = summand_classes(&m, t.summands())?;
        let want: std::collections::BTreeSet<Option<usize>> = (0..t.summands().len()).map(Some).collect();
        Some(classes == want)
    } else {
        None
    };
    Ok(AddCheck {
        contained,
        multiplicities,
        minimal_size: m.size(),
        decomposition,
    })
}

/// Build every stage of the diagram for `chain` and check it.
pub fn build_system<F: Field>(chain: &NestedChain<F>, growth_cap: usize) -> Result<DirectedSystem<F>> {
    match build_system_prefix(chain, growth_cap)? {
        (system, None) => Ok(system),
        (_, Some(e)) => Err(e),
    }
}

/// Build stages until one exceeds `growth_cap`. Returns the system over the
/// longest prefix of `chain` that fits, with the budget error that stopped
/// it, if any.
pub fn build_system_prefix<F: Field>(
    chain: &NestedChain<F>,
    growth_cap: usize,
) -> Result<(DirectedSystem<F>, Option<Error>)> {
    let alg = chain.algebra();
    let items = chain.items();
    let mut rows = vec![build_stage_row(&items[0])?];
    let mut stages = Vec::new();
    let mut stopped = None;
    for i in 0..items.len() - 1 {
        match special_preenvelope_step(i, &rows[i], &items[i], &items[i + 1], growth_cap) {
            Ok(stage) => {
                rows.push(stage.next_row.clone());
                stages.push(stage);
            }
            Err(e @ Error::BudgetExceeded(_)) => {
                stopped = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let built = NestedChain {
        items: items[..rows.len()].to_vec(),
    };
    let objects: Vec<TwoTermComplex<F>> = rows.iter().map(|r| r.t1.direct_sum(&r.t2)).collect();
    let maps: Vec<ChainMap<F::Elem>> = stages.iter().map(|s| s.t.block_diag(alg, &s.t_prime)).collect();
    let mut composed = vec![objects[0].identity_map()];
    for m in &maps {
        let last = composed.last().expect("nonempty");
        composed.push(last.then(alg, m));
    }
    let add_checks = built
        .items
        .iter()
        .zip(&objects)
        .map(|(t, x)| add_check(t, x))
        .collect::<Result<_>>()?;
    let system = DirectedSystem {
        chain: built,
        rows,
        stages,
        objects,
        maps,
        composed,
        add_checks,
    };
    Ok((system, stopped))
}

#[cfg(test)]
mod tests;
