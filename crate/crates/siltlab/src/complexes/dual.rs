//! The duality `D = Hom_k(-, k)` from two-term complexes of projectives over
//! `A^op` to two-term complexes of injectives over `A`.
//!
//! A complex `X^{-1} -> X^0` of projective `A^op`-modules becomes
//! `D X^0 -> D X^{-1}` in degrees 0 and 1, with the transposed differential.
//! `D` is contravariant, so `Hom(X, Y[k]) ≅ Hom(D Y, D X[k])`.

use crate::algebra::{hom_space, Algebra, ModuleMap, Representation};
use crate::complexes::complex::{pmat_module_map, GVector, TwoTermComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{ColumnSolver, SparseVec};

/// `I^0 -> I^1` in degrees 0 and 1, modules over `A`.
#[derive(Clone, Debug)]
pub struct ModuleComplex<F: Field> {
    pub deg0: Representation<F>,
    pub deg1: Representation<F>,
    pub diff: ModuleMap<F::Elem>,
    /// Vertices of the indecomposable injective summands in each degree.
    pub inj0: Vec<usize>,
    pub inj1: Vec<usize>,
}

impl<F: Field> ModuleComplex<F> {
    /// `[I^0] − [I^1]` in the basis `[I_1], ..., [I_l]`.
    pub fn injective_class(&self) -> GVector {
        let l = self.deg0.algebra().rank();
        let mut g = vec![0i64; l];
        for &v in &self.inj0 {
            g[v] += 1;
        }
        for &v in &self.inj1 {
            g[v] -= 1;
        }
        g
    }
}

/// Apply `D` degreewise to a complex of projectives over `A^op`; `alg` is `A`.
pub fn dualize<F: Field>(x: &TwoTermComplex<F>, alg: &Algebra<F>) -> Result<ModuleComplex<F>> {
    if x.algebra().path_algebra() != &alg.path_algebra().opposite() {
        return Err(Error::AlgebraMismatch);
    }
    let (src, tgt, map) = pmat_module_map(x.algebra(), x.diff());
    let deg0 = tgt.dual(alg);
    let deg1 = src.dual(alg);
    let diff = ModuleMap {
        maps: map.maps.iter().map(|m| m.transpose()).collect(),
    };
    if !diff.is_intertwiner(&deg0, &deg1) {
        return Err(Error::Invalid("dual differential is not a module map".into()));
    }
    Ok(ModuleComplex {
        deg0,
        deg1,
        diff,
        inj0: x.zero().to_vec(),
        inj1: x.neg().to_vec(),
    })
}

fn flat<F: Field>(f: &F, m: &ModuleMap<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::new();
    let mut k = 0;
    for mat in &m.maps {
        for x in mat.entries() {
            if !f.is_zero(x) {
                out.push((k, x.clone()));
            }
            k += 1;
        }
    }
    out
}

fn shift_sparse<E: Clone>(v: &SparseVec<E>, by: usize) -> SparseVec<E> {
    v.iter().map(|(k, x)| (k + by, x.clone())).collect()
}

fn ambient(a: &Representation<impl Field>, b: &Representation<impl Field>) -> usize {
    a.dims().iter().zip(b.dims()).map(|(x, y)| x * y).sum()
}

/// `dim Hom_{K^b}(I, J[k])` for complexes of modules in degrees 0 and 1.
pub fn module_complex_hom_dim<F: Field>(i: &ModuleComplex<F>, j: &ModuleComplex<F>, k: i32) -> Result<usize> {
    let f = i.deg0.field();
    match k {
        0 => {
            let a = hom_space(&i.deg0, &j.deg0)?;
            let b = hom_space(&i.deg1, &j.deg1)?;
            // a then ∂_J − ∂_I then b, in Hom_k(I^0, J^1)
            let mut cols: Vec<SparseVec<F::Elem>> = a.iter().map(|x| flat(f, &x.then(f, &j.diff))).collect();
            cols.extend(b.iter().map(|y| {
                flat(f, &i.diff.then(f, y)).into_iter().map(|(k, x)| (k, f.neg(&x))).collect::<SparseVec<F::Elem>>()
            }));
            let z = a.len() + b.len() - ColumnSolver::new(f, &cols).rank();
            // null-homotopic: h: I^1 -> J^0 gives (∂_I then h, h then ∂_J)
            let h = hom_space(&i.deg1, &j.deg0)?;
            let off = ambient(&i.deg0, &j.deg0);
            let bcols: Vec<SparseVec<F::Elem>> = h
                .iter()
                .map(|x| {
                    let mut v = flat(f, &i.diff.then(f, x));
                    v.extend(shift_sparse(&flat(f, &x.then(f, &j.diff)), off));
                    v
                })
                .collect();
            let bdim = ColumnSolver::new(f, &bcols).rank();
            Ok(z - bdim)
        }
        1 => {
            let g = hom_space(&i.deg0, &j.deg1)?;
            let mut rel: Vec<SparseVec<F::Elem>> = hom_space(&i.deg0, &j.deg0)?
                .iter()
                .map(|x| flat(f, &x.then(f, &j.diff)))
                .collect();
            rel.extend(hom_space(&i.deg1, &j.deg1)?.iter().map(|y| flat(f, &i.diff.then(f, y))));
            Ok(g.len() - ColumnSolver::new(f, &rel).rank())
        }
        -1 => {
            let g = hom_space(&i.deg1, &j.deg0)?;
            let off = ambient(&i.deg0, &j.deg0);
            let cols: Vec<SparseVec<F::Elem>> = g
                .iter()
                .map(|x| {
                    let mut v = flat(f, &i.diff.then(f, x));
                    v.extend(shift_sparse(&flat(f, &x.then(f, &j.diff)), off));
                    v
                })
                .collect();
            Ok(g.len() - ColumnSolver::new(f, &cols).rank())
        }
        _ => Ok(0),
    }
}
