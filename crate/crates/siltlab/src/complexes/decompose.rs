//! Krull–Schmidt decomposition of two-term complexes.
//!
//! For a minimal complex `X` every null-homotopic endomorphism has radical
//! components, so the chain-level endomorphism algebra `End_C(X)` and
//! `End_K(X)` have the same semisimple quotient. Idempotents are therefore
//! found and split at chain level, on the faithful representation of
//! `End_C(X)` on the underlying vector space of `X^{-1} ⊕ X^0`.

use std::collections::BTreeSet;

use crate::complexes::complex::{is_iso, ChainMap, TwoTermComplex};
use crate::complexes::hom::hom0;
use crate::complexes::minimal::minimal_form;
use crate::complexes::pmat::PMat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Dense, Matrix};
use crate::matalg::{Locality, MatrixAlgebra};

/// Split off blocks of the differential that share no nonzero entry.
fn connected_components<F: Field>(x: &TwoTermComplex<F>) -> Vec<TwoTermComplex<F>> {
    let f = x.field();
    let d = x.diff();
    let (nr, nc) = (d.nrows(), d.ncols());
    let mut parent: Vec<usize> = (0..nr + nc).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for r in 0..nr {
        for c in 0..nc {
            if d.entry(r, c).iter().any(|e| !f.is_zero(e)) {
                let (a, b) = (find(&mut parent, r), find(&mut parent, nr + c));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..nr + nc {
        let r = find(&mut parent, i);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
        .iter()
        .map(|&root| {
            let rows: Vec<usize> = (0..nr).filter(|&r| find(&mut parent, r) == root).collect();
            let cols: Vec<usize> = (0..nc).filter(|&c| find(&mut parent, nr + c) == root).collect();
            TwoTermComplex::new(x.algebra(), d.select(&rows, &cols))
        })
        .collect()
}

/// Chain-level endomorphism algebra on its faithful representation, with
/// the chain maps behind the basis.
pub fn chain_end_algebra<F: Field>(x: &TwoTermComplex<F>) -> Result<(MatrixAlgebra<F>, Vec<ChainMap<F::Elem>>)> {
    let alg = x.algebra();
    let h = hom0(x, x)?;
    let mats: Vec<Matrix<F::Elem>> = h.cycles.iter().map(|c| c.module_matrix(alg)).collect();
    let n = mats.first().map_or(0, |m| m.rows());
    let end = MatrixAlgebra::new(alg.field(), n, &mats);
    Ok((end, h.cycles))
}

/// Image of an idempotent endomorphism `e` of a sum of projectives: returns
/// `(ι, π)` with `π ι = e` and `ι π = id`, where `ι` goes from the image.
fn split_projective_idempotent<F: Field>(
    x: &TwoTermComplex<F>,
    e: &PMat<F::Elem>,
) -> Result<(PMat<F::Elem>, PMat<F::Elem>)> {
    let alg = x.algebra();
    let f = alg.field();
    let d = Dense(f);
    // pivot rows of the top of e, vertex by vertex
    let mut keep = Vec::new();
    for v in 0..alg.rank() {
        let idx: Vec<usize> = (0..e.nrows()).filter(|&r| e.rows()[r] == v).collect();
        let top = e.top_block(f, v);
        let (_, piv) = d.rref(&top.transpose());
        keep.extend(piv.iter().map(|&p| idx[p]));
    }
    keep.sort_unstable();
    let all: Vec<usize> = (0..e.ncols()).collect();
    let iota = e.select(&keep, &all);
    // solve L ι = e for L: rows of e, columns `keep`
    let l = solve_left_factor(x, e, &iota)?;
    Ok((iota, l))
}

/// Solve `L · ι = e` for `L` with rows `e.rows()` and columns `ι.rows()`.
fn solve_left_factor<F: Field>(x: &TwoTermComplex<F>, e: &PMat<F::Elem>, iota: &PMat<F::Elem>) -> Result<PMat<F::Elem>> {
    let alg = x.algebra();
    let f = alg.field();
    let cols = crate::complexes::pmat::right_compose_columns(alg, iota, e.rows());
    let solver = crate::linalg::ColumnSolver::new(f, &cols);
    let sol = solver
        .solve(&e.flatten(f))
        .ok_or_else(|| Error::DecompositionFailure("idempotent image does not split".into()))?;
    Ok(PMat::from_flat(alg, e.rows().to_vec(), iota.rows().to_vec(), &sol))
}

/// Split a minimal complex along a chain-level idempotent `e`.
pub fn split_idempotent<F: Field>(
    x: &TwoTermComplex<F>,
    e: &ChainMap<F::Elem>,
) -> Result<(TwoTermComplex<F>, ChainMap<F::Elem>, ChainMap<F::Elem>)> {
    let alg = x.algebra();
    let (i_neg, l_neg) = split_projective_idempotent(x, &e.neg)?;
    let (i_zero, l_zero) = split_projective_idempotent(x, &e.zero)?;
    let d = i_neg.then(alg, x.diff()).then(alg, &l_zero);
    let summand = TwoTermComplex::new(alg, d);
    Ok((
        summand,
        ChainMap { neg: i_neg, zero: i_zero },
        ChainMap { neg: l_neg, zero: l_zero },
    ))
}

/// Whether a minimal complex is indecomposable (and nonzero).
pub fn is_indecomposable<F: Field>(x: &TwoTermComplex<F>) -> Result<bool> {
    let m = minimal_form(x);
    if m.is_zero() {
        return Ok(false);
    }
    if connected_components(&m).len() > 1 {
        return Ok(false);
    }
    let (end, _) = chain_end_algebra(&m)?;
    match end.locality() {
        Locality::Local => Ok(true),
        Locality::NotLocal => Ok(false),
        Locality::Unknown => Err(Error::DecompositionFailure("endomorphism algebra not classified".into())),
    }
}

fn split_minimal<F: Field>(x: &TwoTermComplex<F>, out: &mut Vec<TwoTermComplex<F>>, depth: usize) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    if depth > 4 * (x.size() + 2) {
        return Err(Error::DecompositionFailure("splitting did not terminate".into()));
    }
    let comps = connected_components(x);
    if comps.len() > 1 {
        for c in comps {
            split_minimal(&c, out, depth + 1)?;
        }
        return Ok(());
    }
    let alg = x.algebra();
    let f = alg.field();
    let (end, cycles) = chain_end_algebra(x)?;
    match end.locality() {
        Locality::Local => {
            out.push(x.clone());
            return Ok(());
        }
        Locality::Unknown => {
            return Err(Error::DecompositionFailure("endomorphism algebra not classified".into()));
        }
        Locality::NotLocal => {}
    }
    let e_mat = end
        .find_idempotent()
        .ok_or_else(|| Error::DecompositionFailure("no idempotent found in a non-local endomorphism algebra".into()))?;
    let coords = end
        .coords(&e_mat)
        .ok_or_else(|| Error::DecompositionFailure("idempotent outside the algebra".into()))?;
    let mut e = x.zero_map_to(x);
    for (c, &src) in coords.iter().zip(end.source_indices()) {
        if !f.is_zero(c) {
            e = e.add(f, &cycles[src].scale(f, c));
        }
    }
    let one_minus = x.identity_map().sub(f, &e);
    let (a, _, _) = split_idempotent(x, &e)?;
    let (b, _, _) = split_idempotent(x, &one_minus)?;
    if a.size() + b.size() != x.size() || a.is_zero() || b.is_zero() {
        return Err(Error::DecompositionFailure("idempotent split has the wrong size".into()));
    }
    split_minimal(&a, out, depth + 1)?;
    split_minimal(&b, out, depth + 1)
}

/// Serialized differential used as the last component of the canonical order.
fn serialize_diff<F: Field>(x: &TwoTermComplex<F>) -> String {
    let f = x.field();
    let d = x.diff();
    let mut s = format!("{:?}|{:?}|", d.rows(), d.cols());
    for r in 0..d.nrows() {
        for c in 0..d.ncols() {
            let parts: Vec<String> = d.entry(r, c).iter().map(|e| f.format(e)).collect();
            s.push_str(&parts.join(","));
            s.push(';');
        }
    }
    s
}

/// Sort key: `(g-vector, dim H^0, serialized differential)`.
pub fn canonical_key<F: Field>(x: &TwoTermComplex<F>) -> Result<(Vec<i64>, Vec<usize>, String)> {
    let sorted = x.sorted();
    Ok((sorted.g_vector(), sorted.h0()?.dims().clone(), serialize_diff(&sorted)))
}

/// Krull–Schmidt decomposition of the minimal form, grouped into isoclasses
/// with multiplicities and sorted canonically.
pub fn decompose_with_multiplicity<F: Field>(x: &TwoTermComplex<F>) -> Result<Vec<(TwoTermComplex<F>, usize)>> {
    let m = minimal_form(x);
    let mut parts = Vec::new();
    split_minimal(&m, &mut parts, 0)?;
    let mut classes: Vec<(TwoTermComplex<F>, usize)> = Vec::new();
    for p in parts {
        let p = p.sorted();
        let mut found = false;
        for (rep, k) in classes.iter_mut() {
            if indecomposables_isomorphic(rep, &p)? {
                *k += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((p, 1));
        }
    }
    let mut keyed: Vec<((Vec<i64>, Vec<usize>, String), (TwoTermComplex<F>, usize))> = classes
        .into_iter()
        .map(|c| Ok((canonical_key(&c.0)?, c)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

/// Indecomposable summands with repetition, canonically ordered.
pub fn decompose<F: Field>(x: &TwoTermComplex<F>) -> Result<Vec<TwoTermComplex<F>>> {
    Ok(decompose_with_multiplicity(x)?
        .into_iter()
        .flat_map(|(c, k)| std::iter::repeat(c).take(k))
        .collect())
}

/// Isomorphism test for minimal indecomposable complexes: they are isomorphic
/// iff some composite of basis chain maps `W -> W' -> W` is invertible.
pub fn indecomposables_isomorphic<F: Field>(w: &TwoTermComplex<F>, w2: &TwoTermComplex<F>) -> Result<bool> {
    if w.g_vector() != w2.g_vector() {
        return Ok(false);
    }
    let alg = w.algebra();
    let f = alg.field();
    let l = alg.rank();
    let ab = hom0(w, w2)?;
    if ab.cycles.is_empty() {
        return Ok(false);
    }
    let ba = hom0(w2, w)?;
    for phi in &ab.cycles {
        for psi in &ba.cycles {
            let comp = phi.then(alg, psi);
            if is_iso(f, l, &comp.neg) && is_iso(f, l, &comp.zero) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism in the homotopy category, by matching decompositions.
pub fn is_isomorphic<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<bool> {
    let (mx, my) = (minimal_form(x), minimal_form(y));
    if mx.sorted().g_vector() != my.sorted().g_vector() || mx.size() != my.size() {
        return Ok(false);
    }
    let dx = decompose_with_multiplicity(&mx)?;
    let dy = decompose_with_multiplicity(&my)?;
    if dx.len() != dy.len() {
        return Ok(false);
    }
    let mut used = vec![false; dy.len()];
    for (a, k) in &dx {
        let mut matched = false;
        for (j, (b, k2)) in dy.iter().enumerate() {
            if !used[j] && k == k2 && indecomposables_isomorphic(a, b)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Set of isoclasses (by index into `classes`) of the summands of `x`.
pub fn summand_classes<F: Field>(x: &TwoTermComplex<F>, classes: &[TwoTermComplex<F>]) -> Result<BTreeSet<Option<usize>>> {
    let mut out = BTreeSet::new();
    for (s, _) in decompose_with_multiplicity(x)? {
        let mut hit = None;
        for (i, c) in classes.iter().enumerate() {
            if indecomposables_isomorphic(c, &s)? {
                hit = Some(i);
                break;
            }
        }
        out.insert(hit);
    }
    Ok(out)
}
