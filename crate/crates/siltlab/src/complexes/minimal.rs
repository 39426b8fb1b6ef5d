//! Minimal forms by Gaussian elimination, and short bounded complexes (cones).
//!
//! An entry of a differential between two copies of the same `P_v` with
//! nonzero trivial-path coefficient is invertible (the quiver is acyclic, so
//! `End(P_v) = k`). Eliminating it removes a contractible summand `P_v =id P_v`:
//! with `d = [[α, β], [γ, δ]]` the new differential is `δ − γ α^{-1} β`, the
//! incoming differential loses the eliminated column and the outgoing one the
//! eliminated row.

use crate::algebra::Algebra;
use crate::complexes::complex::{ChainMap, TwoTermComplex};
use crate::complexes::pmat::PMat;
use crate::error::{Error, Result};
use crate::field::Field;

fn others(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != skip).collect()
}

/// `γ α^{-1} β` and its pieces for the elimination at `(b, b')`.
fn schur<F: Field>(alg: &Algebra<F>, d: &PMat<F::Elem>, b: usize, bp: usize) -> (PMat<F::Elem>, PMat<F::Elem>, PMat<F::Elem>) {
    let f = alg.field();
    let rr = others(d.nrows(), b);
    let cc = others(d.ncols(), bp);
    let alpha = d.entry(b, bp)[0].clone();
    let v = d.rows()[b];
    let ainv = PMat::scalar(alg, v, f.inv(&alpha));
    let gamma = d.select(&rr, &[bp]);
    let beta = d.select(&[b], &cc);
    let delta = d.select(&rr, &cc);
    let g_ainv = gamma.then(alg, &ainv);
    let reduced = delta.sub(f, &g_ainv.then(alg, &beta));
    let ainv_beta = ainv.then(alg, &beta);
    (reduced, g_ainv, ainv_beta)
}

/// Homotopy-equivalent complex with radical differential.
pub fn minimal_form<F: Field>(x: &TwoTermComplex<F>) -> TwoTermComplex<F> {
    let alg = x.algebra();
    let f = alg.field();
    let mut d = x.diff().clone();
    while let Some((b, bp)) = d.invertible_entry(f) {
        d = schur(alg, &d, b, bp).0;
    }
    TwoTermComplex::new(alg, d)
}

/// Minimal form together with mutually inverse homotopy equivalences
/// `ι: X_min -> X` and `π: X -> X_min` with `ι π = id` on the nose.
pub fn minimal_form_with_maps<F: Field>(x: &TwoTermComplex<F>) -> (TwoTermComplex<F>, ChainMap<F::Elem>, ChainMap<F::Elem>) {
    let alg = x.algebra();
    let f = alg.field();
    let mut d = x.diff().clone();
    let mut iota = x.identity_map();
    let mut pi = x.identity_map();
    while let Some((b, bp)) = d.invertible_entry(f) {
        let rr = others(d.nrows(), b);
        let cc = others(d.ncols(), bp);
        let (reduced, g_ainv, ainv_beta) = schur(alg, &d, b, bp);
        // π_k^{-1} = [0; id], π_k^0 = [−α^{-1}β; id]
        let pi_neg = pi.neg.select(&(0..pi.neg.nrows()).collect::<Vec<_>>(), &rr);
        let all_rows: Vec<usize> = (0..pi.zero.nrows()).collect();
        let col_b = pi.zero.select(&all_rows, &[bp]);
        let pi_zero = pi.zero.select(&all_rows, &cc).sub(f, &col_b.then(alg, &ainv_beta));
        // ι_k^{-1} = [−γα^{-1}, id], ι_k^0 = [0, id]
        let all_cols: Vec<usize> = (0..iota.neg.ncols()).collect();
        let row_b = iota.neg.select(&[b], &all_cols);
        let iota_neg = iota.neg.select(&rr, &all_cols).sub(f, &g_ainv.then(alg, &row_b));
        let iota_zero = iota.zero.select(&cc, &(0..iota.zero.ncols()).collect::<Vec<_>>());
        pi = ChainMap { neg: pi_neg, zero: pi_zero };
        iota = ChainMap {
            neg: iota_neg,
            zero: iota_zero,
        };
        d = reduced;
    }
    (TwoTermComplex::new(alg, d), iota, pi)
}

/// A bounded complex of projectives concentrated in degrees `low, low+1, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedComplex<F: Field> {
    alg: Algebra<F>,
    low: i32,
    terms: Vec<Vec<usize>>,
    /// `diffs[i]` maps `terms[i]` to `terms[i + 1]`.
    diffs: Vec<PMat<F::Elem>>,
}

impl<F: Field> BoundedComplex<F> {
    pub fn new(alg: &Algebra<F>, low: i32, diffs: Vec<PMat<F::Elem>>) -> Self {
        let mut terms: Vec<Vec<usize>> = diffs.iter().map(|d| d.rows().to_vec()).collect();
        if let Some(last) = diffs.last() {
            terms.push(last.cols().to_vec());
        }
        BoundedComplex {
            alg: alg.clone(),
            low,
            terms,
            diffs,
        }
    }

    pub fn from_two_term(x: &TwoTermComplex<F>) -> Self {
        Self::new(x.algebra(), -1, vec![x.diff().clone()])
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    pub fn diffs(&self) -> &[PMat<F::Elem>] {
        &self.diffs
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        let f = self.alg.field();
        self.diffs.windows(2).all(|w| w[0].then(&self.alg, &w[1]).is_zero(f))
    }

    /// Degrees with nonzero terms, as `(lowest, highest)`.
    pub fn support(&self) -> Option<(i32, i32)> {
        let nz: Vec<i32> = self
            .terms
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(i, _)| self.low + i as i32)
            .collect();
        Some((*nz.first()?, *nz.last()?))
    }

    pub fn g_vector(&self) -> Vec<i64> {
        let mut g = vec![0i64; self.alg.rank()];
        for (i, t) in self.terms.iter().enumerate() {
            let deg = self.low + i as i32;
            let sign = if deg % 2 == 0 { 1 } else { -1 };
            for &v in t {
                g[v] += sign;
            }
        }
        g
    }

    /// Strip all contractible summands.
    pub fn minimal_form(&self) -> Self {
        let alg = &self.alg;
        let f = alg.field();
        let mut diffs = self.diffs.clone();
        'outer: loop {
            for i in 0..diffs.len() {
                if let Some((b, bp)) = diffs[i].invertible_entry(f) {
                    let reduced = schur(alg, &diffs[i], b, bp).0;
                    if i > 0 {
                        let prev = &diffs[i - 1];
                        diffs[i - 1] = prev.select(&(0..prev.nrows()).collect::<Vec<_>>(), &others(prev.ncols(), b));
                    }
                    if i + 1 < diffs.len() {
                        let next = &diffs[i + 1];
                        diffs[i + 1] = next.select(&others(next.nrows(), bp), &(0..next.ncols()).collect::<Vec<_>>());
                    }
                    diffs[i] = reduced;
                    continue 'outer;
                }
            }
            break;
        }
        Self::new(alg, self.low, diffs)
    }

    /// The two-term complex in degrees −1, 0 homotopy equivalent to `self`, if
    /// the minimal form is supported there.
    pub fn reduce_to_two_term(&self) -> Result<TwoTermComplex<F>> {
        let m = self.minimal_form();
        let alg = &self.alg;
        match m.support() {
            None => Ok(TwoTermComplex::zero_complex(alg)),
            Some((lo, hi)) if lo >= -1 && hi <= 0 => {
                let term = |deg: i32| -> Vec<usize> {
                    let i = deg - m.low;
                    if i >= 0 && (i as usize) < m.terms.len() {
                        m.terms[i as usize].clone()
                    } else {
                        Vec::new()
                    }
                };
                let neg = term(-1);
                let zero = term(0);
                let i = -1 - m.low;
                let d = if i >= 0 && (i as usize) < m.diffs.len() {
                    m.diffs[i as usize].clone()
                } else {
                    PMat::zero(alg, neg, zero)
                };
                Ok(TwoTermComplex::new(alg, d))
            }
            Some(_) => Err(Error::NotTwoTerm),
        }
    }
}

/// Mapping cone of `f: X -> Y`, in degrees −2, −1, 0:
/// `X^{-1} --[−d_X | f^{-1}]--> X^0 ⊕ Y^{-1} --[f^0 ; d_Y]--> Y^0`.
pub fn cone<F: Field>(f: &ChainMap<F::Elem>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> BoundedComplex<F> {
    let alg = x.algebra();
    let fld = alg.field();
    let d2 = x.diff().neg(fld).hstack(&f.neg);
    let d1 = f.zero.vstack(y.diff());
    BoundedComplex::new(alg, -2, vec![d2, d1])
}

/// Cocone `cone(f)[-1]`, in degrees −1, 0, 1.
pub fn cocone<F: Field>(f: &ChainMap<F::Elem>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> BoundedComplex<F> {
    let c = cone(f, x, y);
    let fld = x.field();
    let diffs = c.diffs().iter().map(|d| d.neg(fld)).collect();
    BoundedComplex::new(x.algebra(), -1, diffs)
}
