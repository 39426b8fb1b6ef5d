//! Maps between finite direct sums of indecomposable projectives.
//!
//! A map `⊕_r P_{u_r} -> ⊕_c P_{w_c}` is a matrix whose `(r, c)` entry lies in
//! `Hom(P_{u_r}, P_{w_c}) = e_{u_r} A e_{w_c}`, stored as a dense coefficient
//! vector over the normal path basis `u_r -> w_c`. Matrices compose left to
//! right: `f.then(g)` is "first `f`, then `g`", i.e. the product `F · G` with
//! entries multiplied by path concatenation.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PMat<E> {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<Vec<E>>,
}

/// Flat coordinates of `Hom(⊕P_rows, ⊕P_cols)`.
#[derive(Clone, Debug)]
pub struct Layout {
    ncols: usize,
    off: Vec<usize>,
    total: usize,
}

impl Layout {
    pub fn new<F: Field>(alg: &Algebra<F>, rows: &[usize], cols: &[usize]) -> Self {
        let mut off = Vec::with_capacity(rows.len() * cols.len());
        let mut total = 0;
        for &u in rows {
            for &w in cols {
                off.push(total);
                total += alg.dim(u, w);
            }
        }
        Layout {
            ncols: cols.len(),
            off,
            total,
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn index(&self, r: usize, c: usize, b: usize) -> usize {
        self.off[r * self.ncols + c] + b
    }
}

fn add_into<F: Field>(f: &F, acc: &mut BTreeMap<usize, F::Elem>, k: usize, x: F::Elem) {
    if f.is_zero(&x) {
        return;
    }
    match acc.remove(&k) {
        None => {
            acc.insert(k, x);
        }
        Some(cur) => {
            let s = f.add(&cur, &x);
            if !f.is_zero(&s) {
                acc.insert(k, s);
            }
        }
    }
}

impl<E: Clone + PartialEq> PMat<E> {
    pub fn zero<F: Field<Elem = E>>(alg: &Algebra<F>, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let f = alg.field();
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &u in &rows {
            for &w in &cols {
                entries.push(vec![f.zero(); alg.dim(u, w)]);
            }
        }
        PMat { rows, cols, entries }
    }

    pub fn identity<F: Field<Elem = E>>(alg: &Algebra<F>, verts: Vec<usize>) -> Self {
        let mut m = Self::zero(alg, verts.clone(), verts);
        for i in 0..m.rows.len() {
            m.entries[i * m.cols.len() + i][0] = alg.field().one();
        }
        m
    }

    /// `c · e_v` on the single summand `P_v`.
    pub fn scalar<F: Field<Elem = E>>(alg: &Algebra<F>, v: usize, c: E) -> Self {
        let mut m = Self::zero(alg, vec![v], vec![v]);
        m.entries[0][0] = c;
        m
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &[E] {
        &self.entries[r * self.cols.len() + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Vec<E>) {
        let n = self.cols.len();
        assert_eq!(self.entries[r * n + c].len(), v.len(), "entry has wrong length");
        self.entries[r * n + c] = v;
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.entries.iter().all(|e| e.iter().all(|x| f.is_zero(x)))
    }

    /// `self` followed by `other`.
    pub fn then<F: Field<Elem = E>>(&self, alg: &Algebra<F>, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "composing incompatible maps");
        let f = alg.field();
        let mut out = Self::zero(alg, self.rows.clone(), other.cols.clone());
        for (r, &u) in self.rows.iter().enumerate() {
            for (k, &w) in self.cols.iter().enumerate() {
                let x = self.entry(r, k);
                if x.iter().all(|c| f.is_zero(c)) {
                    continue;
                }
                for (c, &z) in other.cols.iter().enumerate() {
                    let y = other.entry(k, c);
                    if y.iter().all(|c| f.is_zero(c)) {
                        continue;
                    }
                    let prod = alg.mul(u, w, z, x, y);
                    let n = out.cols.len();
                    let slot = &mut out.entries[r * n + c];
                    for (s, p) in slot.iter_mut().zip(prod) {
                        *s = f.add(s, &p);
                    }
                }
            }
        }
        out
    }

    fn zip_with<F: Field<Elem = E>>(&self, f: &F, other: &Self, op: impl Fn(&E, &E) -> E) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let _ = f;
        PMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| op(x, y)).collect())
                .collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.zip_with(f, other, |a, b| f.add(a, b))
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.zip_with(f, other, |a, b| f.sub(a, b))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        PMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|e| e.iter().map(|x| f.mul(c, x)).collect()).collect(),
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        PMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|e| e.iter().map(|x| f.neg(x)).collect()).collect(),
        }
    }

    /// Sub-matrix on the given row and column positions.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let n = self.cols.len();
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.entries[r * n + c].clone());
            }
        }
        PMat {
            rows: rows.iter().map(|&r| self.rows[r]).collect(),
            cols: cols.iter().map(|&c| self.cols[c]).collect(),
            entries,
        }
    }

    /// `[self | other]`, same source.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack needs equal sources");
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        let mut entries = Vec::with_capacity(self.rows.len() * cols.len());
        for r in 0..self.rows.len() {
            entries.extend_from_slice(&self.entries[r * self.cols.len()..(r + 1) * self.cols.len()]);
            entries.extend_from_slice(&other.entries[r * other.cols.len()..(r + 1) * other.cols.len()]);
        }
        PMat {
            rows: self.rows.clone(),
            cols,
            entries,
        }
    }

    /// `[self ; other]`, same target.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack needs equal targets");
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        PMat {
            rows,
            cols: self.cols.clone(),
            entries,
        }
    }

    pub fn block_diag<F: Field<Elem = E>>(&self, alg: &Algebra<F>, other: &Self) -> Self {
        let top = self.hstack(&Self::zero(alg, self.rows.clone(), other.cols.clone()));
        let bottom = Self::zero(alg, other.rows.clone(), self.cols.clone()).hstack(other);
        top.vstack(&bottom)
    }

    /// Coefficients of the trivial path on same-vertex entries: the map induced
    /// on tops, restricted to vertex `v`.
    pub fn top_block<F: Field<Elem = E>>(&self, f: &F, v: usize) -> Matrix<E> {
        let rs: Vec<usize> = (0..self.rows.len()).filter(|&r| self.rows[r] == v).collect();
        let cs: Vec<usize> = (0..self.cols.len()).filter(|&c| self.cols[c] == v).collect();
        Matrix::from_fn(rs.len(), cs.len(), |i, j| {
            self.entry(rs[i], cs[j]).first().cloned().unwrap_or_else(|| f.zero())
        })
    }

    /// Some entry between equal vertices with nonzero trivial-path coefficient.
    pub fn invertible_entry<F: Field<Elem = E>>(&self, f: &F) -> Option<(usize, usize)> {
        for (r, &u) in self.rows.iter().enumerate() {
            for (c, &w) in self.cols.iter().enumerate() {
                if u == w && !f.is_zero(&self.entry(r, c)[0]) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn flatten<F: Field<Elem = E>>(&self, f: &F) -> SparseVec<E> {
        let mut out = Vec::new();
        let mut k = 0;
        for e in &self.entries {
            for x in e {
                if !f.is_zero(x) {
                    out.push((k, x.clone()));
                }
                k += 1;
            }
        }
        out
    }

    pub fn from_flat<F: Field<Elem = E>>(alg: &Algebra<F>, rows: Vec<usize>, cols: Vec<usize>, v: &SparseVec<E>) -> Self {
        let mut m = Self::zero(alg, rows, cols);
        let layout = Layout::new(alg, &m.rows, &m.cols);
        let mut slots: Vec<(usize, usize)> = Vec::with_capacity(layout.total());
        for (i, e) in m.entries.iter().enumerate() {
            for b in 0..e.len() {
                slots.push((i, b));
            }
        }
        for (k, x) in v {
            let (i, b) = slots[*k];
            m.entries[i][b] = x.clone();
        }
        m
    }

    /// The induced map of underlying vector spaces, `⊕_v (⊕_r A_{v,u_r}) -> ⊕_v (⊕_c A_{v,w_c})`,
    /// as a matrix acting on column vectors.
    pub fn module_matrix<F: Field<Elem = E>>(&self, alg: &Algebra<F>) -> Matrix<E> {
        let f = alg.field();
        let l = alg.rank();
        let src_dim: usize = (0..l).map(|v| self.rows.iter().map(|&u| alg.dim(v, u)).sum::<usize>()).sum();
        let tgt_dim: usize = (0..l).map(|v| self.cols.iter().map(|&w| alg.dim(v, w)).sum::<usize>()).sum();
        let mut m = Matrix::from_fn(tgt_dim, src_dim, |_, _| f.zero());
        let (mut so, mut to) = (0usize, 0usize);
        for v in 0..l {
            let mut row_off = Vec::with_capacity(self.rows.len());
            let mut acc = so;
            for &u in &self.rows {
                row_off.push(acc);
                acc += alg.dim(v, u);
            }
            let mut col_off = Vec::with_capacity(self.cols.len());
            let mut acc2 = to;
            for &w in &self.cols {
                col_off.push(acc2);
                acc2 += alg.dim(v, w);
            }
            for (r, &u) in self.rows.iter().enumerate() {
                for (c, &w) in self.cols.iter().enumerate() {
                    let x = self.entry(r, c);
                    if x.iter().all(|e| f.is_zero(e)) {
                        continue;
                    }
                    for y in 0..alg.dim(v, u) {
                        for (xb, coef) in x.iter().enumerate() {
                            if f.is_zero(coef) {
                                continue;
                            }
                            for (k, val) in alg.mul_basis(v, u, w, y, xb) {
                                let cur = m.get(col_off[c] + k, row_off[r] + y).clone();
                                m.set(col_off[c] + k, row_off[r] + y, f.mul_add(&cur, coef, val));
                            }
                        }
                    }
                }
            }
            so = acc;
            to = acc2;
        }
        m
    }
}

/// Columns of `φ ↦ f.then(φ)` for `φ` ranging over the basis of
/// `Hom(⊕P_{f.cols}, ⊕P_z)`, expressed in the layout of `Hom(⊕P_{f.rows}, ⊕P_z)`.
pub fn left_compose_columns<F: Field>(alg: &Algebra<F>, f: &PMat<F::Elem>, z: &[usize]) -> Vec<SparseVec<F::Elem>> {
    let fld = alg.field();
    let out_layout = Layout::new(alg, f.rows(), z);
    let mut columns = Vec::new();
    for (r, &w) in f.cols().iter().enumerate() {
        for (c, &zc) in z.iter().enumerate() {
            for b in 0..alg.dim(w, zc) {
                let mut acc = BTreeMap::new();
                for (k, &u) in f.rows().iter().enumerate() {
                    for (xb, coef) in f.entry(k, r).iter().enumerate() {
                        if fld.is_zero(coef) {
                            continue;
                        }
                        for (t, val) in alg.mul_basis(u, w, zc, xb, b) {
                            add_into(fld, &mut acc, out_layout.index(k, c, *t), fld.mul(coef, val));
                        }
                    }
                }
                columns.push(acc.into_iter().collect());
            }
        }
    }
    columns
}

/// Columns of `φ ↦ φ.then(g)` for `φ` ranging over the basis of
/// `Hom(⊕P_w, ⊕P_{g.rows})`, expressed in the layout of `Hom(⊕P_w, ⊕P_{g.cols})`.
pub fn right_compose_columns<F: Field>(alg: &Algebra<F>, g: &PMat<F::Elem>, w: &[usize]) -> Vec<SparseVec<F::Elem>> {
    let fld = alg.field();
    let out_layout = Layout::new(alg, w, g.cols());
    let mut columns = Vec::new();
    for (r, &wr) in w.iter().enumerate() {
        for (c, &u) in g.rows().iter().enumerate() {
            for b in 0..alg.dim(wr, u) {
                let mut acc = BTreeMap::new();
                for (k, &z) in g.cols().iter().enumerate() {
                    for (yb, coef) in g.entry(c, k).iter().enumerate() {
                        if fld.is_zero(coef) {
                            continue;
                        }
                        for (t, val) in alg.mul_basis(wr, u, z, b, yb) {
                            add_into(fld, &mut acc, out_layout.index(r, k, *t), fld.mul(coef, val));
                        }
                    }
                }
                columns.push(acc.into_iter().collect());
            }
        }
    }
    columns
}

/// Negate a sparse vector.
pub fn neg_sparse<F: Field>(f: &F, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    v.iter().map(|(k, x)| (*k, f.neg(x))).collect()
}

/// Concatenate sparse vectors living in consecutive coordinate blocks.
pub fn concat_sparse<E: Clone>(parts: &[(&SparseVec<E>, usize)]) -> SparseVec<E> {
    let mut out = Vec::new();
    let mut off = 0;
    for (v, len) in parts {
        out.extend(v.iter().map(|(k, x)| (k + off, x.clone())));
        off += len;
    }
    out
}

/// Split a sparse vector into consecutive blocks of the given lengths.
pub fn split_sparse<E: Clone>(v: &SparseVec<E>, lens: &[usize]) -> Vec<SparseVec<E>> {
    let mut out: Vec<SparseVec<E>> = vec![Vec::new(); lens.len()];
    let mut starts = Vec::with_capacity(lens.len());
    let mut acc = 0;
    for &l in lens {
        starts.push(acc);
        acc += l;
    }
    for (k, x) in v {
        let i = starts.partition_point(|&s| s <= *k) - 1;
        out[i].push((k - starts[i], x.clone()));
    }
    out
}
