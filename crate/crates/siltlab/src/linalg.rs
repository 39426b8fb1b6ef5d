//! Exact linear algebra: sparse online echelon forms and small dense matrices.

use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse vector as `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

pub fn sparse_from_dense<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense<F: Field>(field: &F, v: &SparseVec<F::Elem>, len: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `acc += c * v`
pub fn axpy_into<F: Field>(
    field: &F,
    acc: &mut BTreeMap<usize, F::Elem>,
    c: &F::Elem,
    v: &SparseVec<F::Elem>,
) {
    for (i, x) in v {
        let t = field.mul(c, x);
        match acc.get_mut(i) {
            Some(slot) => {
                let s = field.add(slot, &t);
                if field.is_zero(&s) {
                    acc.remove(i);
                } else {
                    *slot = s;
                }
            }
            None => {
                if !field.is_zero(&t) {
                    acc.insert(*i, t);
                }
            }
        }
    }
}

pub fn scale_sparse<F: Field>(field: &F, c: &F::Elem, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(c, x))).collect()
}

pub fn add_sparse<F: Field>(
    field: &F,
    a: &SparseVec<F::Elem>,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut acc: BTreeMap<usize, F::Elem> = a.iter().cloned().collect();
    axpy_into(field, &mut acc, &field.one(), b);
    acc.into_iter().collect()
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug)]
pub enum Insert<E> {
    /// The vector was independent and now owns this pivot column.
    Pivot(usize),
    /// The vector was dependent; carries the relation among tags (tag of the
    /// vector minus the combination of earlier tags reproducing it).
    Dependent(SparseVec<E>),
}

/// Online row-echelon form over a field.
///
/// Each stored row optionally remembers which combination of caller-provided
/// tags produced it, which turns the structure into a kernel / solver engine:
/// insert the images `M e_j` tagged by `e_j` to get the kernel of `M`, and
/// reduce a right-hand side to express it through the tags.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    pivots: BTreeMap<usize, usize>,
    rows: Vec<SparseVec<F::Elem>>,
    tags: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            pivots: BTreeMap::new(),
            rows: Vec::new(),
            tags: Vec::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduce `v`; returns the residue and the tag combination `x` with
    /// `v = residue + Σ x_t (tagged vector t)`.
    pub fn reduce(
        &self,
        v: &SparseVec<F::Elem>,
    ) -> (BTreeMap<usize, F::Elem>, BTreeMap<usize, F::Elem>) {
        let f = &self.field;
        let mut acc: BTreeMap<usize, F::Elem> = v.iter().cloned().collect();
        let mut x: BTreeMap<usize, F::Elem> = BTreeMap::new();
        let mut cursor = 0usize;
        while let Some((&k, c)) = acc.range(cursor..).next() {
            match self.pivots.get(&k) {
                Some(&ri) => {
                    let c = c.clone();
                    let neg = f.neg(&c);
                    axpy_into(f, &mut acc, &neg, &self.rows[ri]);
                    axpy_into(f, &mut x, &c, &self.tags[ri]);
                }
                None => cursor = k + 1,
            }
        }
        (acc, x)
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Insert `v` with the given tag (use an empty tag when not tracking).
    pub fn insert_tagged(&mut self, v: &SparseVec<F::Elem>, tag: SparseVec<F::Elem>) -> Insert<F::Elem> {
        let f = self.field.clone();
        let (res, x) = self.reduce(v);
        let mut t: BTreeMap<usize, F::Elem> = tag.into_iter().collect();
        let minus_one = f.neg(&f.one());
        axpy_into(&f, &mut t, &minus_one, &x.into_iter().collect());
        if res.is_empty() {
            return Insert::Dependent(t.into_iter().collect());
        }
        let (&lead, lc) = res.iter().next().unwrap();
        let inv = f.inv(lc);
        let row: SparseVec<F::Elem> = res.iter().map(|(i, e)| (*i, f.mul(&inv, e))).collect();
        let tag: SparseVec<F::Elem> = t.iter().map(|(i, e)| (*i, f.mul(&inv, e))).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(row);
        self.tags.push(tag);
        Insert::Pivot(lead)
    }

    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> bool {
        matches!(self.insert_tagged(v, Vec::new()), Insert::Pivot(_))
    }

    /// Express `v` as a combination of tags, if it lies in the span.
    pub fn solve(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        let (res, x) = self.reduce(v);
        if res.is_empty() {
            Some(x.into_iter().collect())
        } else {
            None
        }
    }
}

/// Kernel of the linear map sending basis vector `j` to `columns[j]`.
pub fn kernel_of_columns<F: Field>(field: &F, columns: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    let mut ech = Echelon::new(field.clone());
    let mut out = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        if let Insert::Dependent(rel) = ech.insert_tagged(c, vec![(j, field.one())]) {
            out.push(rel);
        }
    }
    out
}

/// A solver for `M x = b` where `M` is given by its columns.
pub struct ColumnSolver<F: Field> {
    ech: Echelon<F>,
    kernel: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> ColumnSolver<F> {
    pub fn new(field: &F, columns: &[SparseVec<F::Elem>]) -> Self {
        let mut ech = Echelon::new(field.clone());
        let mut kernel = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            if let Insert::Dependent(rel) = ech.insert_tagged(c, vec![(j, field.one())]) {
                kernel.push(rel);
            }
        }
        ColumnSolver { ech, kernel }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn kernel(&self) -> &[SparseVec<F::Elem>] {
        &self.kernel
    }

    pub fn solve(&self, b: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        self.ech.solve(b)
    }
}

/// Quotient `span(generators) / span(relations)` with coordinates.
///
/// The basis of the quotient is a subset of the generators; `coords` expresses
/// any vector of the span in that basis modulo the relations.
pub struct Quotient<F: Field> {
    ech: Echelon<F>,
    basis: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn new(field: &F, generators: &[SparseVec<F::Elem>], relations: &[SparseVec<F::Elem>]) -> Self {
        let mut ech = Echelon::new(field.clone());
        for r in relations {
            ech.insert_tagged(r, Vec::new());
        }
        let mut basis = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            let tag = vec![(basis.len(), field.one())];
            if let Insert::Pivot(_) = ech.insert_tagged(g, tag) {
                basis.push(i);
            }
        }
        Quotient { ech, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Indices of the generators forming the quotient basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Coordinates in the quotient basis, or `None` when outside the span.
    pub fn coords(&self, v: &SparseVec<F::Elem>) -> Option<Vec<F::Elem>> {
        let f = self.ech.field();
        let x = self.ech.solve(v)?;
        Some(sparse_to_dense(f, &x, self.basis.len()))
    }
}

/// Small dense matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<G>(&self, f: impl Fn(&E) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Dense matrix helpers parameterized by a field.
pub struct Dense<'a, F: Field>(pub &'a F);

impl<'a, F: Field> Dense<'a, F> {
    pub fn zeros(&self, rows: usize, cols: usize) -> Matrix<F::Elem> {
        Matrix::from_fn(rows, cols, |_, _| self.0.zero())
    }

    pub fn identity(&self, n: usize) -> Matrix<F::Elem> {
        Matrix::from_fn(n, n, |r, c| if r == c { self.0.one() } else { self.0.zero() })
    }

    pub fn is_zero(&self, m: &Matrix<F::Elem>) -> bool {
        m.data.iter().all(|x| self.0.is_zero(x))
    }

    pub fn mul(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        assert_eq!(a.cols, b.rows, "dimension mismatch in product");
        let f = self.0;
        let mut out = self.zeros(a.rows, b.cols);
        for r in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(r, k);
                if f.is_zero(x) {
                    continue;
                }
                for c in 0..b.cols {
                    let y = b.get(k, c);
                    if f.is_zero(y) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.mul_add(&out.data[idx], x, y);
                }
            }
        }
        out
    }

    pub fn add(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols));
        Matrix {
            rows: a.rows,
            cols: a.cols,
            data: a.data.iter().zip(&b.data).map(|(x, y)| self.0.add(x, y)).collect(),
        }
    }

    pub fn sub(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols));
        Matrix {
            rows: a.rows,
            cols: a.cols,
            data: a.data.iter().zip(&b.data).map(|(x, y)| self.0.sub(x, y)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.map(|x| self.0.mul(c, x))
    }

    pub fn mul_vec(&self, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.cols, v.len());
        (0..a.rows)
            .map(|r| {
                let mut acc = self.0.zero();
                for (c, x) in v.iter().enumerate() {
                    acc = self.0.mul_add(&acc, a.get(r, c), x);
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
        let f = self.0;
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
                continue;
            };
            if p != r {
                for k in 0..a.cols {
                    a.data.swap(p * a.cols + k, r * a.cols + k);
                }
            }
            let inv = f.inv(a.get(r, c));
            for k in 0..a.cols {
                let v = f.mul(&inv, a.get(r, k));
                a.set(r, k, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let factor = a.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for k in 0..a.cols {
                    let v = f.sub(a.get(i, k), &f.mul(&factor, a.get(r, k)));
                    a.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self, m: &Matrix<F::Elem>) -> usize {
        self.rref(m).1.len()
    }

    /// Basis of `{x : m x = 0}` as column vectors.
    pub fn kernel(&self, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
        let f = self.0;
        let (r, pivots) = self.rref(m);
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); m.cols];
                v[fc] = f.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, as columns of a matrix.
    pub fn column_space(&self, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let (_, pivots) = self.rref(m);
        Matrix::from_fn(m.rows, pivots.len(), |r, c| m.get(r, pivots[c]).clone())
    }

    /// Solve `a x = b` for a single column `b`.
    pub fn solve(&self, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.0;
        let aug = Matrix::from_fn(a.rows, a.cols + 1, |r, c| {
            if c < a.cols {
                a.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = self.rref(&aug);
        if pivots.last() == Some(&a.cols) {
            return None;
        }
        let mut x = vec![f.zero(); a.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, a.cols).clone();
        }
        Some(x)
    }

    /// Solve `x a = b` for a row vector `x`.
    pub fn solve_left(&self, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.solve(&a.transpose(), b)
    }

    pub fn inverse(&self, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
        let f = self.0;
        assert_eq!(m.rows, m.cols);
        let n = m.rows;
        if n == 0 {
            return Some(m.clone());
        }
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                m.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let (r, pivots) = self.rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Coordinates of the columns of `sub` in the column basis `basis`.
    pub fn coordinates(&self, basis: &Matrix<F::Elem>, sub: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
        let mut cols = Vec::with_capacity(sub.cols);
        for c in 0..sub.cols {
            cols.push(self.solve(basis, &sub.column(c))?);
        }
        Some(Matrix::from_fn(basis.cols, sub.cols, |r, c| cols[c][r].clone()))
    }

    pub fn block_diag(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |r, c| {
            if r < a.rows && c < a.cols {
                a.get(r, c).clone()
            } else if r >= a.rows && c >= a.cols {
                b.get(r - a.rows, c - a.cols).clone()
            } else {
                self.0.zero()
            }
        })
    }

    pub fn is_nilpotent(&self, m: &Matrix<F::Elem>) -> bool {
        let mut p = m.clone();
        let mut steps = 1usize;
        while steps < m.rows.max(1) {
            p = self.mul(&p, &p);
            steps *= 2;
        }
        self.is_zero(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, PrimeField, Rationals};

    #[test]
    fn kernel_and_solve_agree() {
        let q = Rationals;
        let cols = vec![
            vec![(0, rat(1)), (1, rat(2))],
            vec![(0, rat(2)), (1, rat(4))],
            vec![(1, rat(1))],
        ];
        let ker = kernel_of_columns(&q, &cols);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![(0, rat(-2)), (1, rat(1))]);
        let solver = ColumnSolver::new(&q, &cols);
        let x = solver.solve(&vec![(0, rat(3)), (1, rat(7))]).unwrap();
        let mut acc = BTreeMap::new();
        for (j, c) in &x {
            axpy_into(&q, &mut acc, c, &cols[*j]);
        }
        assert_eq!(acc.into_iter().collect::<Vec<_>>(), vec![(0, rat(3)), (1, rat(7))]);
    }

    #[test]
    fn quotient_coordinates() {
        let q = Rationals;
        let gens = vec![vec![(0, rat(1))], vec![(1, rat(1))], vec![(0, rat(1)), (1, rat(1))]];
        let rels = vec![vec![(0, rat(1)), (1, rat(-1))]];
        let quo = Quotient::new(&q, &gens, &rels);
        assert_eq!(quo.dim(), 1);
        assert_eq!(quo.coords(&gens[1]).unwrap(), vec![rat(1)]);
        assert_eq!(quo.coords(&gens[2]).unwrap(), vec![rat(2)]);
    }

    #[test]
    fn dense_inverse_and_kernel() {
        let f = PrimeField::new(5).unwrap();
        let d = Dense(&f);
        let m = Matrix::from_rows(2, 2, vec![1, 2, 3, 4]);
        let inv = d.inverse(&m).unwrap();
        assert_eq!(d.mul(&m, &inv), d.identity(2));
        let s = Matrix::from_rows(2, 2, vec![1, 2, 2, 4]);
        assert!(d.inverse(&s).is_none());
        assert_eq!(d.kernel(&s), vec![vec![3, 1]]);
    }
}
