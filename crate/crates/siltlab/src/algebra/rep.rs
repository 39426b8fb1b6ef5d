//! Finite-dimensional modules as quiver representations.
//!
//! Convention: an arrow `a: s -> t` acts on a module `M` by a linear map
//! `M_t -> M_s`, stored as a `dim M_s × dim M_t` matrix. Paths act by the
//! product of their arrow matrices in traversal order. With this convention
//! `(P_j)_v` is spanned by the paths `v -> j`, and
//! `dim Hom(P_i, P_j) = #paths(i -> j)`; for the Kronecker quiver `1 ⇉ 2`
//! this makes `P_1 = S_1` and `dim P_2 = (2, 1)`.

use super::path_algebra::Algebra;
use super::quiver::Path;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_of_columns, sparse_to_dense, Dense, Matrix, SparseVec};
use crate::matalg::{Locality, MatrixAlgebra};

/// Dimension vector in the basis of simple modules.
pub type DimVector = Vec<usize>;

#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field> {
    alg: Algebra<F>,
    dims: DimVector,
    mats: Vec<Matrix<F::Elem>>,
}

/// A homomorphism of representations: one `dim N_v × dim M_v` matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMap<E> {
    pub maps: Vec<Matrix<E>>,
}

impl<F: Field> Representation<F> {
    /// Build and validate shapes and relations.
    pub fn new(alg: &Algebra<F>, dims: DimVector, mats: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if dims.len() != alg.rank() {
            return Err(Error::Invalid("dimension vector has wrong length".into()));
        }
        if mats.len() != alg.quiver().arrows().len() {
            return Err(Error::Invalid("one matrix per arrow required".into()));
        }
        for (a, m) in alg.quiver().arrows().iter().zip(&mats) {
            if m.rows() != dims[a.src] || m.cols() != dims[a.tgt] {
                return Err(Error::Invalid(format!(
                    "matrix for arrow {} must be {}x{}",
                    a.id, dims[a.src], dims[a.tgt]
                )));
            }
        }
        let rep = Representation {
            alg: alg.clone(),
            dims,
            mats,
        };
        let d = Dense(alg.field());
        for rel in alg.path_algebra().relations() {
            let (s, t) = (rel[0].1.src, rel[0].1.tgt);
            let mut acc = d.zeros(rep.dims[s], rep.dims[t]);
            for (c, p) in rel {
                let c = alg.field().from_rational(c)?;
                acc = d.add(&acc, &d.scale(&c, &rep.path_action(p)));
            }
            if !d.is_zero(&acc) {
                return Err(Error::Invalid("representation violates a relation".into()));
            }
        }
        Ok(rep)
    }

    pub fn zero(alg: &Algebra<F>) -> Self {
        Self::with_dims_zero(alg, vec![0; alg.rank()])
    }

    fn with_dims_zero(alg: &Algebra<F>, dims: DimVector) -> Self {
        let d = Dense(alg.field());
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| d.zeros(dims[a.src], dims[a.tgt]))
            .collect();
        Representation {
            alg: alg.clone(),
            dims,
            mats,
        }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix<F::Elem> {
        &self.mats[arrow]
    }

    pub fn matrices(&self) -> &[Matrix<F::Elem>] {
        &self.mats
    }

    /// Action of a path `u -> w`: a map `M_w -> M_u`.
    pub fn path_action(&self, p: &Path) -> Matrix<F::Elem> {
        let d = Dense(self.field());
        let mut acc = d.identity(self.dims[p.src]);
        for &a in &p.arrows {
            acc = d.mul(&acc, &self.mats[a]);
        }
        acc
    }

    /// Action of an element of `e_u A e_w` given in the normal basis.
    pub fn action(&self, u: usize, w: usize, x: &[F::Elem]) -> Matrix<F::Elem> {
        let f = self.field();
        let d = Dense(f);
        let mut acc = d.zeros(self.dims[u], self.dims[w]);
        for (b, c) in self.alg.basis(u, w).iter().zip(x) {
            if !f.is_zero(c) {
                acc = d.add(&acc, &d.scale(c, &self.path_action(b)));
            }
        }
        acc
    }

    /// Actions of every normal basis path `u -> w`, cached for hot loops.
    pub fn action_table(&self) -> ActionTable<F> {
        let l = self.alg.rank();
        let mut table = Vec::with_capacity(l * l);
        for u in 0..l {
            for w in 0..l {
                table.push(self.alg.basis(u, w).iter().map(|b| self.path_action(b)).collect());
            }
        }
        ActionTable { l, table }
    }

    /// Indecomposable projective `P_j` (top `S_j`).
    pub fn projective(alg: &Algebra<F>, j: usize) -> Self {
        let f = alg.field();
        let dims: DimVector = (0..alg.rank()).map(|v| alg.dim(v, j)).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let ap = alg.arrow_basis_index(ai);
                let mut m = Matrix::from_fn(dims[a.src], dims[a.tgt], |_, _| f.zero());
                for y in 0..dims[a.tgt] {
                    for (r, c) in alg.mul_basis(a.src, a.tgt, j, ap, y) {
                        m.set(*r, y, c.clone());
                    }
                }
                m
            })
            .collect();
        Representation {
            alg: alg.clone(),
            dims,
            mats,
        }
    }

    /// Indecomposable injective `I_j` (socle `S_j`), the dual of the projective
    /// `e_j A` of the opposite algebra.
    pub fn injective(alg: &Algebra<F>, j: usize) -> Self {
        let f = alg.field();
        let dims: DimVector = (0..alg.rank()).map(|v| alg.dim(j, v)).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let ap = alg.arrow_basis_index(ai);
                let mut m = Matrix::from_fn(dims[a.src], dims[a.tgt], |_, _| f.zero());
                for x in 0..dims[a.src] {
                    for (r, c) in alg.mul_basis(j, a.src, a.tgt, x, ap) {
                        m.set(x, *r, c.clone());
                    }
                }
                m
            })
            .collect();
        Representation {
            alg: alg.clone(),
            dims,
            mats,
        }
    }

    pub fn simple(alg: &Algebra<F>, i: usize) -> Self {
        let mut dims = vec![0; alg.rank()];
        dims[i] = 1;
        Self::with_dims_zero(alg, dims)
    }

    /// Direct sum of representations, summands in order.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let d = Dense(self.field());
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self.mats.iter().zip(&other.mats).map(|(x, y)| d.block_diag(x, y)).collect();
        Representation {
            alg: self.alg.clone(),
            dims,
            mats,
        }
    }

    pub fn direct_sum_all<'a>(alg: &Algebra<F>, parts: impl IntoIterator<Item = &'a Self>) -> Self {
        parts
            .into_iter()
            .fold(Self::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// The regular module `A = P_1 ⊕ ... ⊕ P_l`.
    pub fn regular(alg: &Algebra<F>) -> Self {
        let ps: Vec<Self> = (0..alg.rank()).map(|j| Self::projective(alg, j)).collect();
        Self::direct_sum_all(alg, &ps)
    }

    /// `D M = Hom_k(M, k)`, a representation of the opposite algebra.
    pub fn dual(&self, opposite: &Algebra<F>) -> Self {
        Representation {
            alg: opposite.clone(),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Submodule spanned by the columns of `basis[v]` at each vertex, with its
    /// inclusion. Fails when the subspaces are not closed under the action.
    pub fn subrep(&self, basis: &[Matrix<F::Elem>]) -> Result<(Self, ModuleMap<F::Elem>)> {
        let d = Dense(self.field());
        let dims: DimVector = basis.iter().map(|b| b.cols()).collect();
        let mut mats = Vec::with_capacity(self.mats.len());
        for (a, m) in self.alg.quiver().arrows().iter().zip(&self.mats) {
            let img = d.mul(m, &basis[a.tgt]);
            let c = d
                .coordinates(&basis[a.src], &img)
                .ok_or_else(|| Error::Invalid("subspaces are not a submodule".into()))?;
            mats.push(c);
        }
        Ok((
            Representation {
                alg: self.alg.clone(),
                dims,
                mats,
            },
            ModuleMap { maps: basis.to_vec() },
        ))
    }

    /// Quotient by the submodule spanned by `basis[v]`, with the projection.
    pub fn quotient(&self, basis: &[Matrix<F::Elem>]) -> Result<(Self, ModuleMap<F::Elem>)> {
        let f = self.field();
        let d = Dense(f);
        let mut projections = Vec::new();
        let mut complements = Vec::new();
        for (v, b) in basis.iter().enumerate() {
            let n = self.dims[v];
            let mut cols: Vec<Vec<F::Elem>> = (0..b.cols()).map(|c| b.column(c)).collect();
            let k = cols.len();
            let mut comp = Vec::new();
            for e in 0..n {
                let unit: Vec<F::Elem> = (0..n).map(|r| if r == e { f.one() } else { f.zero() }).collect();
                let mut trial = cols.clone();
                trial.push(unit.clone());
                let m = Matrix::from_fn(n, trial.len(), |r, c| trial[c][r].clone());
                if d.rank(&m) == trial.len() {
                    cols.push(unit);
                    comp.push(e);
                }
            }
            let full = Matrix::from_fn(n, n, |r, c| cols[c][r].clone());
            let inv = d.inverse(&full).ok_or_else(|| Error::Invalid("basis not independent".into()))?;
            projections.push(Matrix::from_fn(n - k, n, |r, c| inv.get(k + r, c).clone()));
            complements.push(Matrix::from_fn(n, n - k, |r, c| {
                if r == comp[c] {
                    f.one()
                } else {
                    f.zero()
                }
            }));
        }
        let dims: DimVector = projections.iter().map(|p| p.rows()).collect();
        let mats = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| d.mul(&d.mul(&projections[a.src], m), &complements[a.tgt]))
            .collect();
        let q = Representation {
            alg: self.alg.clone(),
            dims,
            mats,
        };
        let proj = ModuleMap { maps: projections };
        if !proj.is_intertwiner(self, &q) {
            return Err(Error::Invalid("subspaces are not a submodule".into()));
        }
        Ok((q, proj))
    }

    /// Endomorphism algebra in its faithful representation on `⊕_v M_v`.
    pub fn end_algebra(&self) -> Result<(MatrixAlgebra<F>, Vec<ModuleMap<F::Elem>>)> {
        let basis = hom_space(self, self)?;
        let n = self.total_dim();
        let mats: Vec<Matrix<F::Elem>> = basis.iter().map(|m| m.block_matrix(self.field())).collect();
        Ok((MatrixAlgebra::new(self.field(), n, &mats), basis))
    }

    /// Exact indecomposability test through locality of the endomorphism algebra.
    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let (end, _) = self.end_algebra()?;
        match end.locality() {
            Locality::Local => Ok(true),
            Locality::NotLocal => Ok(false),
            Locality::Unknown => Err(Error::DecompositionFailure(
                "could not classify the endomorphism algebra".into(),
            )),
        }
    }
}

/// Cached actions of normal basis paths.
pub struct ActionTable<F: Field> {
    l: usize,
    table: Vec<Vec<Matrix<F::Elem>>>,
}

impl<F: Field> ActionTable<F> {
    /// Matrices for the basis paths `u -> w`.
    pub fn get(&self, u: usize, w: usize) -> &[Matrix<F::Elem>] {
        &self.table[u * self.l + w]
    }

    /// Apply `x ∈ e_u A e_w` to a vector of `M_w`.
    pub fn apply(&self, f: &F, u: usize, w: usize, x: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let d = Dense(f);
        let mats = self.get(u, w);
        let rows = mats.first().map_or(0, |m| m.rows());
        let mut out = vec![f.zero(); rows];
        for (m, c) in mats.iter().zip(x) {
            if f.is_zero(c) {
                continue;
            }
            let y = d.mul_vec(m, v);
            for (o, yi) in out.iter_mut().zip(&y) {
                *o = f.mul_add(o, c, yi);
            }
        }
        out
    }
}

impl<E: Clone + PartialEq> ModuleMap<E> {
    pub fn zero<F: Field<Elem = E>>(m: &Representation<F>, n: &Representation<F>) -> Self {
        let d = Dense(m.field());
        ModuleMap {
            maps: (0..m.dims.len()).map(|v| d.zeros(n.dims[v], m.dims[v])).collect(),
        }
    }

    pub fn identity<F: Field<Elem = E>>(m: &Representation<F>) -> Self {
        let d = Dense(m.field());
        ModuleMap {
            maps: m.dims.iter().map(|&n| d.identity(n)).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let d = Dense(f);
        ModuleMap {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| d.mul(b, a)).collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let d = Dense(f);
        ModuleMap {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| d.add(a, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        let d = Dense(f);
        ModuleMap {
            maps: self.maps.iter().map(|a| d.scale(c, a)).collect(),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        let d = Dense(f);
        self.maps.iter().all(|m| d.is_zero(m))
    }

    /// Check `N_a φ_t = φ_s M_a` for every arrow `a: s -> t`.
    pub fn is_intertwiner<F: Field<Elem = E>>(&self, m: &Representation<F>, n: &Representation<F>) -> bool {
        let d = Dense(m.field());
        if self.maps.len() != m.dims.len() {
            return false;
        }
        for (v, map) in self.maps.iter().enumerate() {
            if map.rows() != n.dims[v] || map.cols() != m.dims[v] {
                return false;
            }
        }
        m.alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            d.mul(&n.mats[ai], &self.maps[a.tgt]) == d.mul(&self.maps[a.src], &m.mats[ai])
        })
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn block_matrix<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        let d = Dense(f);
        self.maps
            .iter()
            .fold(d.zeros(0, 0), |acc, m| d.block_diag(&acc, m))
    }
}

/// Basis of `Hom_A(M, N)` from the intertwiner equations.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<ModuleMap<F::Elem>>> {
    if m.alg != n.alg {
        return Err(Error::FieldMismatch("modules over different algebras or fields".into()));
    }
    let f = m.field();
    let l = m.dims.len();
    let mut off = vec![0usize; l + 1];
    for v in 0..l {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let arrows = m.alg.quiver().arrows();
    let mut eoff = vec![0usize; arrows.len() + 1];
    for (ai, a) in arrows.iter().enumerate() {
        eoff[ai + 1] = eoff[ai] + n.dims[a.src] * m.dims[a.tgt];
    }
    let mut columns: Vec<SparseVec<F::Elem>> = Vec::with_capacity(off[l]);
    for v in 0..l {
        for r0 in 0..n.dims[v] {
            for c0 in 0..m.dims[v] {
                let mut col: std::collections::BTreeMap<usize, F::Elem> = Default::default();
                for (ai, a) in arrows.iter().enumerate() {
                    let width = m.dims[a.tgt];
                    if a.tgt == v {
                        // N_a φ_t with φ_t = E_{r0,c0}
                        for r in 0..n.dims[a.src] {
                            let x = n.mats[ai].get(r, r0);
                            if !f.is_zero(x) {
                                let k = eoff[ai] + r * width + c0;
                                let cur = col.remove(&k).unwrap_or_else(|| f.zero());
                                let s = f.add(&cur, x);
                                if !f.is_zero(&s) {
                                    col.insert(k, s);
                                }
                            }
                        }
                    }
                    if a.src == v {
                        // - φ_s M_a with φ_s = E_{r0,c0}
                        for c in 0..width {
                            let x = m.mats[ai].get(c0, c);
                            if !f.is_zero(x) {
                                let k = eoff[ai] + r0 * width + c;
                                let cur = col.remove(&k).unwrap_or_else(|| f.zero());
                                let s = f.sub(&cur, x);
                                if !f.is_zero(&s) {
                                    col.insert(k, s);
                                }
                            }
                        }
                    }
                }
                columns.push(col.into_iter().collect());
            }
        }
    }
    let ker = kernel_of_columns(f, &columns);
    Ok(ker
        .iter()
        .map(|k| {
            let dense = sparse_to_dense(f, k, off[l]);
            ModuleMap {
                maps: (0..l)
                    .map(|v| Matrix::from_fn(n.dims[v], m.dims[v], |r, c| dense[off[v] + r * m.dims[v] + c].clone()))
                    .collect(),
            }
        })
        .collect())
}

/// Sum of the images of all maps `M -> X`, with its inclusion into `X`.
pub fn trace<F: Field>(m: &Representation<F>, x: &Representation<F>) -> Result<(Representation<F>, ModuleMap<F::Elem>)> {
    let f = x.field();
    let d = Dense(f);
    let homs = hom_space(m, x)?;
    let l = x.dims.len();
    let mut basis = Vec::with_capacity(l);
    for v in 0..l {
        let mut cols: Vec<Vec<F::Elem>> = Vec::new();
        for h in &homs {
            for c in 0..h.maps[v].cols() {
                cols.push(h.maps[v].column(c));
            }
        }
        let all = Matrix::from_fn(x.dims[v], cols.len(), |r, c| cols[c][r].clone());
        basis.push(d.column_space(&all));
    }
    x.subrep(&basis)
}

/// `X ∈ Fac M`, decided by comparing the trace of `M` in `X` with `X`.
pub fn in_fac<F: Field>(m: &Representation<F>, x: &Representation<F>) -> Result<bool> {
    let (t, _) = trace(m, x)?;
    Ok(t.dims == x.dims)
}

/// Image subspaces of a module map.
pub fn image_basis<F: Field>(f: &F, map: &ModuleMap<F::Elem>) -> Vec<Matrix<F::Elem>> {
    let d = Dense(f);
    map.maps.iter().map(|m| d.column_space(m)).collect()
}

/// Kernel subspaces of a module map.
pub fn kernel_basis<F: Field>(f: &F, map: &ModuleMap<F::Elem>) -> Vec<Matrix<F::Elem>> {
    let d = Dense(f);
    map.maps
        .iter()
        .map(|m| {
            let ker = d.kernel(m);
            Matrix::from_fn(m.cols(), ker.len(), |r, c| ker[c][r].clone())
        })
        .collect()
}

pub fn cokernel<F: Field>(map: &ModuleMap<F::Elem>, target: &Representation<F>) -> Result<Representation<F>> {
    let img = image_basis(target.field(), map);
    Ok(target.quotient(&img)?.0)
}

pub fn kernel<F: Field>(map: &ModuleMap<F::Elem>, source: &Representation<F>) -> Result<Representation<F>> {
    let ker = kernel_basis(source.field(), map);
    Ok(source.subrep(&ker)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PathAlgebra;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn kronecker_projectives_and_injectives() {
        let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
        assert_eq!(Representation::projective(&alg, 0).dims(), &vec![1, 0]);
        assert_eq!(Representation::projective(&alg, 1).dims(), &vec![2, 1]);
        assert_eq!(Representation::injective(&alg, 0).dims(), &vec![1, 2]);
        assert_eq!(Representation::injective(&alg, 1).dims(), &vec![0, 1]);
    }

    #[test]
    fn hom_dimensions() {
        let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
        let p1 = Representation::projective(&alg, 0);
        let p2 = Representation::projective(&alg, 1);
        assert_eq!(hom_space(&p1, &p2).unwrap().len(), 2);
        assert_eq!(hom_space(&p2, &p1).unwrap().len(), 0);
        let s1 = Representation::simple(&alg, 0);
        let s2 = Representation::simple(&alg, 1);
        assert_eq!(hom_space(&s1, &s2).unwrap().len(), 0);
        assert_eq!(hom_space(&s2, &s2).unwrap().len(), 1);
        for h in hom_space(&p1, &p2).unwrap() {
            assert!(h.is_intertwiner(&p1, &p2));
        }
    }

    #[test]
    fn fac_and_trace() {
        let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
        let s1 = Representation::simple(&alg, 0);
        let s2 = Representation::simple(&alg, 1);
        let p2 = Representation::projective(&alg, 1);
        assert!(!in_fac(&s2, &s1).unwrap());
        assert!(!in_fac(&p2, &s1).unwrap());
        assert!(in_fac(&p2, &s2).unwrap());
        let a = Representation::regular(&alg);
        assert!(in_fac(&a, &p2.direct_sum(&s1)).unwrap());
        let (t, inc) = trace(&p2, &p2.direct_sum(&s1)).unwrap();
        assert_eq!(t.dims(), &vec![2, 1]);
        assert!(inc.is_intertwiner(&t, &p2.direct_sum(&s1)));
    }

    #[test]
    fn quotients_and_indecomposability() {
        let f = PrimeField::new(2).unwrap();
        let alg = PathAlgebra::kronecker().over(f).unwrap();
        let p2 = Representation::projective(&alg, 1);
        let rad = vec![Matrix::from_rows(2, 2, vec![1, 0, 0, 1]), Matrix::from_rows(1, 0, vec![])];
        let (q, proj) = p2.quotient(&rad).unwrap();
        assert_eq!(q.dims(), &vec![0, 1]);
        assert!(proj.is_intertwiner(&p2, &q));
        assert!(p2.is_indecomposable().unwrap());
        let s = Representation::simple(&alg, 0).direct_sum(&Representation::simple(&alg, 1));
        assert!(!s.is_indecomposable().unwrap());
    }
}
