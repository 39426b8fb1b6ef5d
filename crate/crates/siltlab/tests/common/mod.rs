#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use siltlab::algebra::{Algebra, DimVector, PathAlgebra, Representation};
use siltlab::complexes::{PMat, TwoTermComplex};
use siltlab::linalg::Matrix;
use siltlab::{Field, PrimeField};

pub fn kronecker(p: u64) -> Algebra<PrimeField> {
    PathAlgebra::kronecker().over(PrimeField::new(p).unwrap()).unwrap()
}

pub fn linear(n: usize, p: u64) -> Algebra<PrimeField> {
    PathAlgebra::linear(n).over(PrimeField::new(p).unwrap()).unwrap()
}

/// Fixtures for the randomized suites: name and algebra.
pub fn fixtures() -> Vec<(&'static str, Algebra<PrimeField>)> {
    vec![
        ("kronecker/F_2", kronecker(2)),
        ("kronecker/F_3", kronecker(3)),
        ("A_2/F_3", linear(2, 3)),
        ("A_3/F_2", linear(3, 2)),
    ]
}

fn random_elem<F: Field, R: Rng>(f: &F, rng: &mut R) -> F::Elem {
    let els = f.elements().expect("finite field");
    els[rng.gen_range(0..els.len())].clone()
}

fn random_vertices<R: Rng>(l: usize, max: usize, rng: &mut R) -> Vec<usize> {
    let n = rng.gen_range(0..=max);
    let mut v: Vec<usize> = (0..n).map(|_| rng.gen_range(0..l)).collect();
    v.sort_unstable();
    v
}

/// A two-term complex with at most `max` summands in each degree and a
/// uniformly random differential.
pub fn random_complex<F: Field, R: Rng>(alg: &Algebra<F>, max: usize, rng: &mut R) -> TwoTermComplex<F> {
    let l = alg.rank();
    let neg = random_vertices(l, max, rng);
    let zero = random_vertices(l, max, rng);
    let mut d = PMat::zero(alg, neg.clone(), zero.clone());
    for (r, &u) in neg.iter().enumerate() {
        for (c, &w) in zero.iter().enumerate() {
            let v = (0..alg.dim(u, w)).map(|_| random_elem(alg.field(), rng)).collect();
            d.set_entry(r, c, v);
        }
    }
    TwoTermComplex::new(alg, d)
}

/// A representation of an algebra without relations, dimension `≤ max` at every vertex.
pub fn random_rep<F: Field, R: Rng>(alg: &Algebra<F>, max: usize, rng: &mut R) -> Representation<F> {
    let dims: DimVector = (0..alg.rank()).map(|_| rng.gen_range(0..=max)).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::from_fn(dims[a.src], dims[a.tgt], |_, _| random_elem(alg.field(), rng)))
        .collect();
    Representation::new(alg, dims, mats).unwrap()
}

/// Every vector of `F_p^n`.
fn all_vectors(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subspace of `F_p^n` as a sorted set of its vectors, by closing
/// all sets of at most `n` generators.
fn all_subspaces(p: u64, n: usize) -> BTreeSet<Vec<Vec<u64>>> {
    let vecs = all_vectors(p, n);
    let mut out: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<Vec<u64>>> = vec![[vec![0; n]].into_iter().collect()];
    while let Some(s) = frontier.pop() {
        let key: Vec<Vec<u64>> = s.iter().cloned().collect();
        if !out.insert(key) {
            continue;
        }
        for v in &vecs {
            if s.contains(v) {
                continue;
            }
            let mut t = s.clone();
            for w in &s {
                for c in 1..p {
                    t.insert(w.iter().zip(v).map(|(a, b)| (a + c * b) % p).collect());
                }
            }
            frontier.push(t);
        }
    }
    out
}

fn dim_of(p: u64, s: &[Vec<u64>]) -> usize {
    let mut d = 0;
    let mut size = 1usize;
    while size < s.len() {
        size *= p as usize;
        d += 1;
    }
    d
}

/// Dimension vectors of all subrepresentations, by brute force over the
/// subspaces at every vertex. Only for tiny prime-field representations.
pub fn brute_submodule_dims(m: &Representation<PrimeField>) -> BTreeSet<DimVector> {
    let p = m.field().p();
    let dims = m.dims().clone();
    let spaces: Vec<Vec<Vec<Vec<u64>>>> = dims.iter().map(|&n| all_subspaces(p, n).into_iter().collect()).collect();
    let arrows = m.algebra().quiver().arrows().to_vec();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; dims.len()];
    loop {
        let closed = arrows.iter().enumerate().all(|(k, a)| {
            let mat = m.matrix(k);
            let target: &Vec<Vec<u64>> = &spaces[a.src][choice[a.src]];
            spaces[a.tgt][choice[a.tgt]].iter().all(|u| {
                let img: Vec<u64> = (0..dims[a.src])
                    .map(|r| (0..dims[a.tgt]).map(|c| mat.get(r, c) * u[c]).sum::<u64>() % p)
                    .collect();
                target.contains(&img)
            })
        });
        if closed {
            out.insert(
                (0..dims.len())
                    .map(|v| dim_of(p, &spaces[v][choice[v]]))
                    .collect(),
            );
        }
        let mut v = 0;
        loop {
            if v == dims.len() {
                return out;
            }
            choice[v] += 1;
            if choice[v] < spaces[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

/// Kronecker indecomposables of dimension `(a, b)`: preprojective when
/// `a > b`, regular when `a = b`, preinjective when `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KroneckerClass {
    Preprojective,
    Regular,
    Preinjective,
}

pub fn kronecker_class(d: &DimVector) -> KroneckerClass {
    use std::cmp::Ordering::*;
    match d[0].cmp(&d[1]) {
        Greater => KroneckerClass::Preprojective,
        Equal => KroneckerClass::Regular,
        Less => KroneckerClass::Preinjective,
    }
}
