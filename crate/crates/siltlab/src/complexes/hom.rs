//! Morphisms in the homotopy category between two-term complexes.
//!
//! For two-term complexes `X`, `Y` (degrees −1, 0):
//! * `Hom(X, Y)`: chain maps `(f^{-1}, f^0)` with `d_X f^0 = f^{-1} d_Y`,
//!   modulo `(d_X h, h d_Y)` for `h: X^0 -> Y^{-1}`;
//! * `Hom(X, Y[1]) = Hom(X^{-1}, Y^0) / (d_X · Hom(X^0, Y^0) + Hom(X^{-1}, Y^{-1}) · d_Y)`;
//! * `Hom(X, Y[-1]) = {k: X^0 -> Y^{-1} : d_X k = 0, k d_Y = 0}`;
//! * all other shifts vanish for degree reasons.

use crate::algebra::Representation;
use crate::complexes::complex::{ChainMap, TwoTermComplex};
use crate::complexes::pmat::{concat_sparse, left_compose_columns, neg_sparse, right_compose_columns, split_sparse, Layout, PMat};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_of_columns, ColumnSolver, Dense, Matrix, Quotient, SparseVec};

/// An element of `Hom(X, Y[k])`.
#[derive(Clone, Debug, PartialEq)]
pub enum HomElement<E> {
    /// `k = 0`: a chain map.
    Chain(ChainMap<E>),
    /// `k = 1`: a map `X^{-1} -> Y^0`; `k = -1`: a map `X^0 -> Y^{-1}`.
    Component(PMat<E>),
}

fn check_same<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<()> {
    if x.algebra() != y.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `Hom_K(X, Y)` with coordinates.
pub struct Hom0<F: Field> {
    pub x: TwoTermComplex<F>,
    pub y: TwoTermComplex<F>,
    /// Basis of all chain maps `X -> Y`.
    pub cycles: Vec<ChainMap<F::Elem>>,
    /// Representatives of a basis of the quotient by null-homotopic maps.
    pub basis: Vec<ChainMap<F::Elem>>,
    quotient: Quotient<F>,
    lens: [usize; 2],
}

impl<F: Field> Hom0<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn flatten(&self, f: &ChainMap<F::Elem>) -> SparseVec<F::Elem> {
        let fld = self.x.field();
        concat_sparse(&[(&f.neg.flatten(fld), self.lens[0]), (&f.zero.flatten(fld), self.lens[1])])
    }

    /// Coordinates of a chain map in `basis`, modulo homotopy.
    pub fn coords(&self, f: &ChainMap<F::Elem>) -> Option<Vec<F::Elem>> {
        self.quotient.coords(&self.flatten(f))
    }

    pub fn is_null_homotopic(&self, f: &ChainMap<F::Elem>) -> bool {
        let fld = self.x.field();
        self.coords(f).is_some_and(|c| c.iter().all(|x| fld.is_zero(x)))
    }
}

/// Chain maps `X -> Y` and their homotopy classes.
pub fn hom0<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<Hom0<F>> {
    check_same(x, y)?;
    let alg = x.algebra();
    let f = alg.field();
    let l_neg = Layout::new(alg, x.neg(), y.neg()).total();
    let l_zero = Layout::new(alg, x.zero(), y.zero()).total();
    // columns of (f^{-1}, f^0) ↦ d_X f^0 − f^{-1} d_Y in Hom(X^{-1}, Y^0)
    let minus: Vec<SparseVec<F::Elem>> = right_compose_columns(alg, y.diff(), x.neg())
        .iter()
        .map(|c| neg_sparse(f, c))
        .collect();
    let plus = left_compose_columns(alg, x.diff(), y.zero());
    let mut columns = minus;
    columns.extend(plus);
    let ker = kernel_of_columns(f, &columns);
    // homotopies h: X^0 -> Y^{-1}
    let dh = left_compose_columns(alg, x.diff(), y.neg());
    let hd = right_compose_columns(alg, y.diff(), x.zero());
    let boundaries: Vec<SparseVec<F::Elem>> = dh
        .iter()
        .zip(&hd)
        .map(|(a, b)| concat_sparse(&[(a, l_neg), (b, l_zero)]))
        .collect();
    let quotient = Quotient::new(f, &ker, &boundaries);
    let to_map = |v: &SparseVec<F::Elem>| -> ChainMap<F::Elem> {
        let parts = split_sparse(v, &[l_neg, l_zero]);
        ChainMap {
            neg: PMat::from_flat(alg, x.neg().to_vec(), y.neg().to_vec(), &parts[0]),
            zero: PMat::from_flat(alg, x.zero().to_vec(), y.zero().to_vec(), &parts[1]),
        }
    };
    let cycles: Vec<ChainMap<F::Elem>> = ker.iter().map(to_map).collect();
    let basis = quotient.basis().iter().map(|&i| cycles[i].clone()).collect();
    Ok(Hom0 {
        x: x.clone(),
        y: y.clone(),
        cycles,
        basis,
        quotient,
        lens: [l_neg, l_zero],
    })
}

/// Relation columns spanning the maps `X^{-1} -> Y^0` that vanish in `Hom(X, Y[1])`.
fn hom1_relations<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Vec<SparseVec<F::Elem>> {
    let alg = x.algebra();
    let mut rel = left_compose_columns(alg, x.diff(), y.zero());
    rel.extend(right_compose_columns(alg, y.diff(), x.neg()));
    rel
}

/// `dim Hom_K(X, Y[1])`.
pub fn hom1_dim<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<usize> {
    check_same(x, y)?;
    let alg = x.algebra();
    let total = Layout::new(alg, x.neg(), y.zero()).total();
    if total == 0 {
        return Ok(0);
    }
    let solver = ColumnSolver::new(alg.field(), &hom1_relations(x, y));
    Ok(total - solver.rank())
}

/// `Hom_K(X, Y[1])` with coordinates for maps `X^{-1} -> Y^0`.
pub struct Hom1<F: Field> {
    pub basis: Vec<PMat<F::Elem>>,
    quotient: Quotient<F>,
    field: F,
}

impl<F: Field> Hom1<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, m: &PMat<F::Elem>) -> Vec<F::Elem> {
        self.quotient.coords(&m.flatten(&self.field)).expect("all maps lie in the span")
    }
}

pub fn hom1<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<Hom1<F>> {
    check_same(x, y)?;
    let alg = x.algebra();
    let f = alg.field();
    let total = Layout::new(alg, x.neg(), y.zero()).total();
    let gens: Vec<SparseVec<F::Elem>> = (0..total).map(|k| vec![(k, f.one())]).collect();
    let quotient = Quotient::new(f, &gens, &hom1_relations(x, y));
    let basis = quotient
        .basis()
        .iter()
        .map(|&k| PMat::from_flat(alg, x.neg().to_vec(), y.zero().to_vec(), &gens[k]))
        .collect();
    Ok(Hom1 {
        basis,
        quotient,
        field: f.clone(),
    })
}

/// Basis of `Hom_K(X, Y[-1])`.
pub fn hom_minus1<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Result<Vec<PMat<F::Elem>>> {
    check_same(x, y)?;
    let alg = x.algebra();
    let f = alg.field();
    let l1 = Layout::new(alg, x.neg(), y.neg()).total();
    let l2 = Layout::new(alg, x.zero(), y.zero()).total();
    let a = left_compose_columns(alg, x.diff(), y.neg());
    let b = right_compose_columns(alg, y.diff(), x.zero());
    let columns: Vec<SparseVec<F::Elem>> = a.iter().zip(&b).map(|(p, q)| concat_sparse(&[(p, l1), (q, l2)])).collect();
    Ok(kernel_of_columns(f, &columns)
        .iter()
        .map(|v| PMat::from_flat(alg, x.zero().to_vec(), y.neg().to_vec(), v))
        .collect())
}

/// Basis of `Hom_{K^b(proj A)}(X, Y[k])`.
pub fn hom_k<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, k: i32) -> Result<Vec<HomElement<F::Elem>>> {
    check_same(x, y)?;
    Ok(match k {
        0 => hom0(x, y)?.basis.into_iter().map(HomElement::Chain).collect(),
        1 => hom1(x, y)?.basis.into_iter().map(HomElement::Component).collect(),
        -1 => hom_minus1(x, y)?.into_iter().map(HomElement::Component).collect(),
        _ => Vec::new(),
    })
}

pub fn hom_dim<F: Field>(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, k: i32) -> Result<usize> {
    Ok(match k {
        0 => hom0(x, y)?.dim(),
        1 => hom1_dim(x, y)?,
        -1 => hom_minus1(x, y)?.len(),
        _ => {
            check_same(x, y)?;
            0
        }
    })
}

/// The map `Hom(P^0, M) -> Hom(P^{-1}, M)` induced by the differential, via
/// `Hom(P_v, M) = M_v`.
pub fn induced_on_module<F: Field>(p: &TwoTermComplex<F>, m: &Representation<F>) -> Matrix<F::Elem> {
    pmat_on_module(p.field(), p.diff(), m)
}

/// The map `Hom(Q, M) -> Hom(P, M)` induced by `d: P -> Q`, as a matrix
/// acting on column vectors.
pub fn pmat_on_module<F: Field>(f: &F, d: &PMat<F::Elem>, m: &Representation<F>) -> Matrix<F::Elem> {
    let rows: usize = d.rows().iter().map(|&u| m.dims()[u]).sum();
    let cols: usize = d.cols().iter().map(|&w| m.dims()[w]).sum();
    let mut out = Matrix::from_fn(rows, cols, |_, _| f.zero());
    let mut ro = 0;
    for (r, &u) in d.rows().iter().enumerate() {
        let mut co = 0;
        for (c, &w) in d.cols().iter().enumerate() {
            let x = d.entry(r, c);
            if x.iter().any(|e| !f.is_zero(e)) {
                let act = m.action(u, w, x);
                for i in 0..act.rows() {
                    for j in 0..act.cols() {
                        out.set(ro + i, co + j, act.get(i, j).clone());
                    }
                }
            }
            co += m.dims()[w];
        }
        ro += m.dims()[u];
    }
    out
}

/// `dim Hom_{D(A)}(P, M[n])` for a two-term complex `P` and a module `M`.
pub fn hom_to_module_dim<F: Field>(p: &TwoTermComplex<F>, m: &Representation<F>, n: i32) -> Result<usize> {
    if p.algebra() != m.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let mat = induced_on_module(p, m);
    let rank = Dense(p.field()).rank(&mat);
    Ok(match n {
        0 => mat.cols() - rank,
        1 => mat.rows() - rank,
        _ => 0,
    })
}

/// Linear map `Hom_K(Y, W) -> Hom_K(X, W)` given by precomposition with `t: X -> Y`,
/// as a matrix in the homotopy bases.
pub fn precomposition_matrix<F: Field>(t: &ChainMap<F::Elem>, to: &Hom0<F>, from: &Hom0<F>) -> Result<Matrix<F::Elem>> {
    let alg = to.x.algebra();
    let f = alg.field();
    let mut cols = Vec::with_capacity(from.dim());
    for phi in &from.basis {
        let comp = t.then(alg, phi);
        let c = to
            .coords(&comp)
            .ok_or_else(|| Error::LinearSolveFailure("composite is not a chain map".into()))?;
        cols.push(c);
    }
    let rows = to.dim();
    Ok(Matrix::from_fn(rows, cols.len(), |r, c| cols[c].get(r).cloned().unwrap_or_else(|| f.zero())))
}
