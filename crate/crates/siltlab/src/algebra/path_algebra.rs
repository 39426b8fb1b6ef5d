use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use super::quiver::{Path, Quiver};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{Echelon, SparseVec};

/// Largest number of paths between two vertices accepted at construction.
pub const PATH_CAP: usize = 20_000;

/// A rational linear combination of parallel paths of length at least two.
pub type Relation = Vec<(BigRational, Path)>;

/// Quiver with relations, independent of the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    /// `paths[i][j]`: all paths from `i` to `j` in path order.
    paths: Vec<Vec<Vec<Path>>>,
}

/// Validate a quiver with relations and enumerate its paths.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>) -> Result<PathAlgebra> {
    quiver.topological_order()?;
    for rel in &relations {
        let Some((_, first)) = rel.first() else {
            return Err(Error::Invalid("empty relation".into()));
        };
        for (_, p) in rel {
            if p.src != first.src || p.tgt != first.tgt {
                return Err(Error::Invalid("relation terms are not parallel".into()));
            }
            if p.len() < 2 {
                return Err(Error::Invalid("relation terms must have length at least 2".into()));
            }
        }
    }
    let l = quiver.num_vertices();
    let mut paths = vec![vec![Vec::new(); l]; l];
    let mut total = 0usize;
    for (i, row) in paths.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = quiver.paths(i, j, PATH_CAP)?;
            total += slot.len();
            if total > PATH_CAP {
                return Err(Error::InfiniteDimensional(PATH_CAP));
            }
        }
    }
    Ok(PathAlgebra {
        quiver,
        relations,
        paths,
    })
}

impl PathAlgebra {
    pub fn kronecker() -> Self {
        build_algebra(Quiver::kronecker(), Vec::new()).expect("valid algebra")
    }

    /// Linearly oriented `A_n`.
    pub fn linear(n: usize) -> Self {
        build_algebra(Quiver::linear(n), Vec::new()).expect("valid algebra")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Number of vertices, the rank of the Grothendieck group.
    pub fn rank(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn paths(&self, i: usize, j: usize) -> &[Path] {
        &self.paths[i][j]
    }

    /// Normal-form paths over `Q`, ordered by endpoints then path order.
    pub fn path_basis(&self) -> Vec<Path> {
        let alg = self.over(Rationals).expect("rational coefficients always reduce");
        let l = self.rank();
        let mut out = Vec::new();
        for i in 0..l {
            for j in 0..l {
                out.extend(alg.basis(i, j).iter().cloned());
            }
        }
        out
    }

    pub fn opposite(&self) -> PathAlgebra {
        let rev = |p: &Path| Path {
            src: p.tgt,
            tgt: p.src,
            arrows: p.arrows.iter().rev().copied().collect(),
        };
        let relations = self
            .relations
            .iter()
            .map(|r| r.iter().map(|(c, p)| (c.clone(), rev(p))).collect())
            .collect();
        build_algebra(self.quiver.opposite(), relations).expect("opposite of a valid algebra")
    }

    /// Fix the ground field: computes normal forms and structure constants.
    pub fn over<F: Field>(&self, field: F) -> Result<Algebra<F>> {
        AlgebraData::new(self.clone(), field).map(|d| Algebra(Arc::new(d)))
    }
}

/// A path algebra over a concrete field, with precomputed multiplication.
#[derive(Clone)]
pub struct Algebra<F: Field>(Arc<AlgebraData<F>>);

pub struct AlgebraData<F: Field> {
    pa: PathAlgebra,
    field: F,
    l: usize,
    basis: Vec<Vec<Vec<Path>>>,
    reductions: HashMap<Path, SparseVec<F::Elem>>,
    /// Indexed by `(i*l + j)*l + k`, then by basis indices of the factors.
    mult: Vec<Vec<Vec<SparseVec<F::Elem>>>>,
    arrow_pos: Vec<usize>,
}

impl<F: Field> AlgebraData<F> {
    fn new(pa: PathAlgebra, field: F) -> Result<Self> {
        let l = pa.rank();
        let mut basis = vec![vec![Vec::new(); l]; l];
        let mut reductions = HashMap::new();
        for i in 0..l {
            for j in 0..l {
                let all = &pa.paths[i][j];
                let n = all.len();
                let pos: HashMap<&Path, usize> = all.iter().enumerate().map(|(k, p)| (p, k)).collect();
                // Columns in reverse path order so pivots land on the largest paths.
                let col = |p: &Path| n - 1 - pos[p];
                let mut ech = Echelon::new(field.clone());
                for rel in &pa.relations {
                    let (s, t) = (rel[0].1.src, rel[0].1.tgt);
                    for pre in &pa.paths[i][s] {
                        for post in &pa.paths[t][j] {
                            let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
                            for (c, term) in rel {
                                let full = pre.concat(term).concat(post);
                                let c = field.from_rational(c)?;
                                let k = col(&full);
                                let v = acc.get(&k).cloned().unwrap_or_else(|| field.zero());
                                acc.insert(k, field.add(&v, &c));
                            }
                            let v: SparseVec<F::Elem> =
                                acc.into_iter().filter(|(_, x)| !field.is_zero(x)).collect();
                            ech.insert(&v);
                        }
                    }
                }
                let pivots: std::collections::HashSet<usize> = ech.pivot_columns().collect();
                let normal: Vec<&Path> = all.iter().filter(|p| !pivots.contains(&col(p))).collect();
                let normal_index: HashMap<usize, usize> =
                    normal.iter().enumerate().map(|(k, p)| (col(p), k)).collect();
                for p in all {
                    let (res, _) = ech.reduce(&vec![(col(p), field.one())]);
                    let v: SparseVec<F::Elem> = res.into_iter().map(|(c, x)| (normal_index[&c], x)).collect();
                    let mut v = v;
                    v.sort_by_key(|(k, _)| *k);
                    reductions.insert(p.clone(), v);
                }
                basis[i][j] = normal.into_iter().cloned().collect();
            }
        }
        let mut mult = Vec::with_capacity(l * l * l);
        for i in 0..l {
            for j in 0..l {
                for k in 0..l {
                    let table: Vec<Vec<SparseVec<F::Elem>>> = basis[i][j]
                        .iter()
                        .map(|x: &Path| {
                            basis[j][k]
                                .iter()
                                .map(|y: &Path| reductions[&x.concat(y)].clone())
                                .collect()
                        })
                        .collect();
                    mult.push(table);
                }
            }
        }
        let arrow_pos = pa
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let p = Path {
                    src: a.src,
                    tgt: a.tgt,
                    arrows: vec![ai],
                };
                basis[a.src][a.tgt].iter().position(|b| *b == p).expect("arrows are normal words")
            })
            .collect();
        Ok(AlgebraData {
            pa,
            field,
            l,
            basis,
            reductions,
            mult,
            arrow_pos,
        })
    }
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({} over {})", self.0.pa.quiver, self.0.field.spec())
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.pa == other.0.pa)
    }
}

impl<F: Field> Algebra<F> {
    pub fn field(&self) -> &F {
        &self.0.field
    }

    pub fn path_algebra(&self) -> &PathAlgebra {
        &self.0.pa
    }

    pub fn quiver(&self) -> &Quiver {
        &self.0.pa.quiver
    }

    pub fn rank(&self) -> usize {
        self.0.l
    }

    /// `dim e_i A e_j`: the span of normal paths from `i` to `j`.
    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.0.basis[i][j].len()
    }

    pub fn basis(&self, i: usize, j: usize) -> &[Path] {
        &self.0.basis[i][j]
    }

    /// Normal form of a path as coefficients in `basis(src, tgt)`.
    pub fn reduce_path(&self, p: &Path) -> &SparseVec<F::Elem> {
        &self.0.reductions[p]
    }

    /// Product of basis elements `x` in `(i,j)` and `y` in `(j,k)`.
    pub fn mul_basis(&self, i: usize, j: usize, k: usize, x: usize, y: usize) -> &SparseVec<F::Elem> {
        &self.0.mult[(i * self.0.l + j) * self.0.l + k][x][y]
    }

    /// Product of elements given as dense coefficient vectors.
    pub fn mul(&self, i: usize, j: usize, k: usize, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.0.field;
        let table = &self.0.mult[(i * self.0.l + j) * self.0.l + k];
        let mut out = vec![f.zero(); self.dim(i, k)];
        for (bx, cx) in x.iter().enumerate() {
            if f.is_zero(cx) {
                continue;
            }
            for (by, cy) in y.iter().enumerate() {
                if f.is_zero(cy) {
                    continue;
                }
                let c = f.mul(cx, cy);
                for (t, v) in &table[bx][by] {
                    out[*t] = f.mul_add(&out[*t], &c, v);
                }
            }
        }
        out
    }

    pub fn idempotent(&self, v: usize) -> Vec<F::Elem> {
        let f = &self.0.field;
        let mut e = vec![f.zero(); self.dim(v, v)];
        e[0] = f.one();
        e
    }

    /// Arrow as an element of `e_src A e_tgt`.
    pub fn arrow_element(&self, a: usize) -> (usize, usize, Vec<F::Elem>) {
        let arrow = &self.quiver().arrows()[a];
        let f = &self.0.field;
        let mut e = vec![f.zero(); self.dim(arrow.src, arrow.tgt)];
        e[self.0.arrow_pos[a]] = f.one();
        (arrow.src, arrow.tgt, e)
    }

    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.0.arrow_pos[a]
    }

    pub fn opposite(&self) -> Algebra<F> {
        self.0.pa.opposite().over(self.0.field.clone()).expect("opposite algebra")
    }

    /// The same quiver with relations over another field.
    pub fn rebase<G: Field>(&self, field: G) -> Result<Algebra<G>> {
        self.0.pa.over(field)
    }

    pub fn total_dim(&self) -> usize {
        (0..self.0.l).flat_map(|i| (0..self.0.l).map(move |j| (i, j))).map(|(i, j)| self.dim(i, j)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, PrimeField};

    #[test]
    fn kronecker_basis() {
        let pa = PathAlgebra::kronecker();
        let names: Vec<String> = pa.path_basis().iter().map(|p| pa.quiver().path_name(p)).collect();
        assert_eq!(names, vec!["e1", "a", "b", "e2"]);
        assert_eq!(pa.rank(), 2);
    }

    #[test]
    fn commutative_square_relation() {
        // 1 -> 2 -> 4, 1 -> 3 -> 4 with ac = bd
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "1", "3"), ("c", "2", "4"), ("d", "3", "4")],
        )
        .unwrap();
        let ac = q.parse_path("a.c").unwrap();
        let bd = q.parse_path("b.d").unwrap();
        let pa = build_algebra(q, vec![vec![(rat(1), ac.clone()), (rat(-1), bd.clone())]]).unwrap();
        let alg = pa.over(Rationals).unwrap();
        assert_eq!(alg.dim(0, 3), 1);
        let r1 = alg.reduce_path(&ac).clone();
        let r2 = alg.reduce_path(&bd).clone();
        assert_eq!(r1, r2);
        let f2 = pa.over(PrimeField::new(2).unwrap()).unwrap();
        assert_eq!(f2.dim(0, 3), 1);
        assert_eq!(pa.path_basis().len(), 4 + 4 + 1);
    }

    #[test]
    fn zero_relation_kills_path() {
        let q = Quiver::linear(3);
        let p = q.parse_path("a1.a2").unwrap();
        let pa = build_algebra(q, vec![vec![(rat(1), p)]]).unwrap();
        let alg = pa.over(Rationals).unwrap();
        assert_eq!(alg.dim(0, 2), 0);
        let (s, t, a1) = alg.arrow_element(0);
        let (_, u, a2) = alg.arrow_element(1);
        assert!(alg.mul(s, t, u, &a1, &a2).is_empty());
    }

    #[test]
    fn bad_relations_rejected() {
        let q = Quiver::kronecker();
        let a = q.parse_path("a").unwrap();
        assert!(build_algebra(q, vec![vec![(rat(1), a)]]).is_err());
    }
}
