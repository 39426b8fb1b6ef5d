//! Chain-level plumbing for short exact sequences of two-term complexes:
//! contractible padding, degreewise cokernels and exact factorization.

use crate::complexes::complex::{is_split_mono, ChainMap, TwoTermComplex};
use crate::complexes::hom::hom0;
use crate::complexes::pmat::{concat_sparse, left_compose_columns, Layout, PMat};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{ColumnSolver, Dense, SparseVec};

/// The contractible complex `X^0 =id X^0` with the chain map `(d_X, id): X -> C`.
pub fn contractible_pad<F: Field>(x: &TwoTermComplex<F>) -> (TwoTermComplex<F>, ChainMap<F::Elem>) {
    let alg = x.algebra();
    let c = TwoTermComplex::contractible(alg, x.zero().to_vec());
    let kappa = ChainMap {
        neg: x.diff().clone(),
        zero: PMat::identity(alg, x.zero().to_vec()),
    };
    (c, kappa)
}

/// Extend `j: X -> W` to `[j | κ]: X -> W ⊕ (X^0 =id X^0)`, which is split
/// mono in degree 0 and represents the same morphism in the homotopy category.
pub fn pad_map<F: Field>(x: &TwoTermComplex<F>, w: &TwoTermComplex<F>, j: &ChainMap<F::Elem>) -> (TwoTermComplex<F>, ChainMap<F::Elem>) {
    let (c, kappa) = contractible_pad(x);
    (w.direct_sum(&c), j.hstack(&kappa))
}

/// Flatten a chain map `X -> Y` into one coordinate vector.
pub fn flatten_chain_map<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, m: &ChainMap<F::Elem>) -> SparseVec<F::Elem> {
    let alg = x.algebra();
    let f = alg.field();
    let l1 = Layout::new(alg, x.neg(), y.neg()).total();
    let l2 = Layout::new(alg, x.zero(), y.zero()).total();
    concat_sparse(&[(&m.neg.flatten(f), l1), (&m.zero.flatten(f), l2)])
}

/// A chain map `s: Y -> Z` with `λ s = γ` on the nose, if one exists.
pub fn factor_through<F: Field>(
    lambda: &ChainMap<F::Elem>,
    gamma: &ChainMap<F::Elem>,
    x: &TwoTermComplex<F>,
    y: &TwoTermComplex<F>,
    z: &TwoTermComplex<F>,
) -> Result<Option<ChainMap<F::Elem>>> {
    let alg = x.algebra();
    let f = alg.field();
    let h = hom0(y, z)?;
    let cols: Vec<SparseVec<F::Elem>> = h.cycles.iter().map(|c| flatten_chain_map(x, z, &lambda.then(alg, c))).collect();
    let target = flatten_chain_map(x, z, gamma);
    if cols.is_empty() {
        return Ok(if target.is_empty() { Some(y.zero_map_to(z)) } else { None });
    }
    let Some(coef) = ColumnSolver::new(f, &cols).solve(&target) else {
        return Ok(None);
    };
    let mut s = y.zero_map_to(z);
    for (k, c) in &coef {
        s = s.add(f, &h.cycles[*k].scale(f, c));
    }
    Ok(Some(s))
}

/// Cokernel of a split monomorphism `t` of sums of projectives: returns the
/// complementary summands of the target, the projection `π` (with `t π = 0`)
/// and the section `σ` (with `σ π = id`).
fn split_cokernel<F: Field>(
    alg: &crate::algebra::Algebra<F>,
    t: &PMat<F::Elem>,
) -> Result<(Vec<usize>, PMat<F::Elem>, PMat<F::Elem>)> {
    let f = alg.field();
    let d = Dense(f);
    if !is_split_mono(f, alg.rank(), t) {
        return Err(Error::ApproximationNotMono);
    }
    let mut b = Vec::new();
    for v in 0..alg.rank() {
        let idx: Vec<usize> = (0..t.ncols()).filter(|&c| t.cols()[c] == v).collect();
        let (_, piv) = d.rref(&t.top_block(f, v));
        b.extend(piv.iter().map(|&p| idx[p]));
    }
    b.sort_unstable();
    let a: Vec<usize> = (0..t.ncols()).filter(|c| !b.contains(c)).collect();
    let all_rows: Vec<usize> = (0..t.nrows()).collect();
    let t_b = t.select(&all_rows, &b);
    let t_a = t.select(&all_rows, &a);
    let a_verts: Vec<usize> = a.iter().map(|&c| t.cols()[c]).collect();
    // m with t_b m = t_a
    let cols = left_compose_columns(alg, &t_b, &a_verts);
    let sol = ColumnSolver::new(f, &cols)
        .solve(&t_a.flatten(f))
        .ok_or_else(|| Error::LinearSolveFailure("split cokernel".into()))?;
    let b_verts: Vec<usize> = b.iter().map(|&c| t.cols()[c]).collect();
    let m = PMat::from_flat(alg, b_verts, a_verts.clone(), &sol);
    let mut pi = PMat::zero(alg, t.cols().to_vec(), a_verts.clone());
    let mut sigma = PMat::zero(alg, a_verts.clone(), t.cols().to_vec());
    for (k, &c) in a.iter().enumerate() {
        pi.set_entry(c, k, alg.idempotent(t.cols()[c]));
        sigma.set_entry(k, c, alg.idempotent(t.cols()[c]));
    }
    for (k, &c) in b.iter().enumerate() {
        for j in 0..a.len() {
            pi.set_entry(c, j, m.entry(k, j).iter().map(|e| f.neg(e)).collect());
        }
    }
    Ok((a_verts, pi, sigma))
}

/// Cokernel of a degreewise split monomorphism `t: X -> Y`, with the
/// projection `Y -> Z`.
pub fn degreewise_cokernel<F: Field>(
    t: &ChainMap<F::Elem>,
    y: &TwoTermComplex<F>,
) -> Result<(TwoTermComplex<F>, ChainMap<F::Elem>)> {
    let alg = y.algebra();
    let (_, pi_neg, sigma_neg) = split_cokernel(alg, &t.neg)?;
    let (_, pi_zero, _) = split_cokernel(alg, &t.zero)?;
    let dz = sigma_neg.then(alg, y.diff()).then(alg, &pi_zero);
    let z = TwoTermComplex::new(alg, dz);
    let pi = ChainMap {
        neg: pi_neg,
        zero: pi_zero,
    };
    if !pi.is_chain_map(y, &z) {
        return Err(Error::LinearSolveFailure("cokernel projection is not a chain map".into()));
    }
    Ok((z, pi))
}

/// The degreewise-split short exact sequence `0 -> X -> Y -> Z -> 0` is exact
/// at chain level: `t` split mono, `p` split epi, `t p = 0`, ranks add up.
pub fn is_degreewise_split_exact<F: Field>(
    t: &ChainMap<F::Elem>,
    p: &ChainMap<F::Elem>,
    x: &TwoTermComplex<F>,
    y: &TwoTermComplex<F>,
    z: &TwoTermComplex<F>,
) -> bool {
    let alg = x.algebra();
    let f = alg.field();
    let l = alg.rank();
    t.is_chain_map(x, y)
        && p.is_chain_map(y, z)
        && t.is_degreewise_split_mono(f, l)
        && t.then(alg, p).is_zero(f)
        && x.neg().len() + z.neg().len() == y.neg().len()
        && x.zero().len() + z.zero().len() == y.zero().len()
        && is_split_epi(f, l, &p.neg)
        && is_split_epi(f, l, &p.zero)
}

fn is_split_epi<F: Field>(f: &F, l: usize, m: &PMat<F::Elem>) -> bool {
    let d = Dense(f);
    (0..l).all(|v| {
        let t = m.top_block(f, v);
        d.rank(&t) == t.cols()
    })
}
