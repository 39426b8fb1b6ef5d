//! Finite-dimensional algebras given as spans of square matrices.
//!
//! Used for endomorphism algebras of modules and of complexes: the radical,
//! the locality test (indecomposability), and primitive-idempotent search all
//! run on a faithful matrix representation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::field::Field;
use crate::linalg::{sparse_from_dense, sparse_to_dense, Dense, Echelon, Insert, Matrix, Quotient, SparseVec};
use crate::poly::{Poly, PolyRing};

/// Subalgebra of `M_n(F)` with a chosen basis.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F: Field> {
    field: F,
    n: usize,
    basis: Vec<Matrix<F::Elem>>,
    /// Index of each basis element in the spanning list it was built from.
    source: Vec<usize>,
}

/// Result of the locality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locality {
    Local,
    NotLocal,
    /// The semisimple quotient could not be classified with the available tools.
    Unknown,
}

impl<F: Field> MatrixAlgebra<F> {
    /// Build from a spanning list (must be closed under products and contain 1).
    pub fn new(field: &F, n: usize, spanning: &[Matrix<F::Elem>]) -> Self {
        let mut ech = Echelon::new(field.clone());
        let mut basis = Vec::new();
        let mut source = Vec::new();
        for (i, m) in spanning.iter().enumerate() {
            if ech.insert(&sparse_from_dense(field, m.entries())) {
                basis.push(m.clone());
                source.push(i);
            }
        }
        MatrixAlgebra {
            field: field.clone(),
            n,
            basis,
            source,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F::Elem>] {
        &self.basis
    }

    pub fn source_indices(&self) -> &[usize] {
        &self.source
    }

    fn dense(&self) -> Dense<'_, F> {
        Dense(&self.field)
    }

    fn flat(&self, m: &Matrix<F::Elem>) -> SparseVec<F::Elem> {
        sparse_from_dense(&self.field, m.entries())
    }

    /// Coordinates of `m` in the basis, if it lies in the algebra.
    pub fn coords(&self, m: &Matrix<F::Elem>) -> Option<Vec<F::Elem>> {
        let gens: Vec<_> = self.basis.iter().map(|b| self.flat(b)).collect();
        Quotient::new(&self.field, &gens, &[]).coords(&self.flat(m))
    }

    pub fn combine(&self, coeffs: &[F::Elem]) -> Matrix<F::Elem> {
        let d = self.dense();
        let mut acc = d.zeros(self.n, self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !self.field.is_zero(c) {
                acc = d.add(&acc, &d.scale(c, b));
            }
        }
        acc
    }

    fn trace(&self, m: &Matrix<F::Elem>) -> F::Elem {
        let mut t = self.field.zero();
        for i in 0..self.n {
            t = self.field.add(&t, m.get(i, i));
        }
        t
    }

    /// Basis of the Jacobson radical, as coefficient vectors in the basis.
    pub fn radical(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let d = self.dense();
        let k = self.dim();
        if k == 0 {
            return Vec::new();
        }
        // I_0 = {a : Tr(ab) = 0 for all b}
        let mut gram = Matrix::from_fn(k, k, |_, _| f.zero());
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, self.trace(&d.mul(&self.basis[i], &self.basis[j])));
            }
        }
        let mut ideal: Vec<Vec<F::Elem>> = d.kernel(&gram.transpose());
        let p = f.characteristic();
        if p == 0 || ideal.is_empty() {
            return ideal;
        }
        let mut pi: u64 = p;
        while pi <= self.n as u64 && !ideal.is_empty() {
            let modulus = pi * p;
            let elems: Vec<Matrix<F::Elem>> = ideal.iter().map(|c| self.combine(c)).collect();
            let mut cond = Matrix::from_fn(k, elems.len(), |_, _| f.zero());
            for (col, a) in elems.iter().enumerate() {
                for (row, b) in self.basis.iter().enumerate() {
                    let prod = d.mul(a, b);
                    let lifted = prod.map(|x| {
                        let n: BigInt = f.to_rational(x).to_integer();
                        n.to_u64().unwrap_or(0) % modulus
                    });
                    let tr = trace_of_power_mod(&lifted, pi, modulus);
                    debug_assert_eq!(tr % pi, 0, "trace power not divisible");
                    cond.set(row, col, f.from_i64(((tr / pi) % p) as i64));
                }
            }
            let ker = d.kernel(&cond);
            ideal = ker
                .iter()
                .map(|w| {
                    let mut acc = vec![f.zero(); k];
                    for (j, c) in w.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        for (t, x) in ideal[j].iter().enumerate() {
                            acc[t] = f.mul_add(&acc[t], c, x);
                        }
                    }
                    acc
                })
                .collect();
            pi *= p;
        }
        ideal
    }

    /// Decide whether the algebra is local, i.e. `A / rad A` is a division ring.
    pub fn locality(&self) -> Locality {
        let k = self.dim();
        if k == 0 {
            return Locality::NotLocal;
        }
        let rad = self.radical();
        if k - rad.len() == 1 {
            return Locality::Local;
        }
        let f = &self.field;
        let d = self.dense();
        let rad_flat: Vec<SparseVec<F::Elem>> = rad.iter().map(|c| self.flat(&self.combine(c))).collect();
        let mut rad_ech = Echelon::new(f.clone());
        for r in &rad_flat {
            rad_ech.insert(r);
        }
        let in_rad = |m: &Matrix<F::Elem>| rad_ech.contains(&self.flat(m));
        for i in 0..k {
            for j in (i + 1)..k {
                let ab = d.mul(&self.basis[i], &self.basis[j]);
                let ba = d.mul(&self.basis[j], &self.basis[i]);
                if !in_rad(&d.sub(&ab, &ba)) {
                    // A noncommutative semisimple quotient: over finite fields this
                    // rules out a division ring; over Q we only know it when an
                    // idempotent can be exhibited.
                    if f.characteristic() > 0 || self.find_idempotent().is_some() {
                        return Locality::NotLocal;
                    }
                    return Locality::Unknown;
                }
            }
        }
        let p = f.characteristic();
        if p > 0 {
            // Berlekamp subalgebra {x : x^p = x} of the commutative quotient.
            let gens: Vec<SparseVec<F::Elem>> = self.basis.iter().map(|b| self.flat(b)).collect();
            let quo = Quotient::new(f, &gens, &rad_flat);
            let qdim = quo.dim();
            let qbasis: Vec<usize> = quo.basis().to_vec();
            let mut cols = Vec::with_capacity(qdim);
            for &bi in &qbasis {
                let b = &self.basis[bi];
                let fr = d.sub(&mat_pow(&d, b, p), b);
                let c = quo.coords(&self.flat(&fr)).expect("closed under products");
                cols.push(c);
            }
            let m = Matrix::from_fn(qdim, qdim, |r, c| cols[c][r].clone());
            let fixed = d.kernel(&m).len();
            return if fixed == 1 { Locality::Local } else { Locality::NotLocal };
        }
        if self.find_idempotent().is_some() {
            return Locality::NotLocal;
        }
        // Commutative semisimple quotient over Q: a field iff some element has an
        // irreducible minimal polynomial of full degree; accept that certificate.
        let sdim = k - rad.len();
        for b in &self.basis {
            let mu = self.min_poly(b);
            let ring = PolyRing(f);
            let sq = ring.gcd(&mu, &derivative(f, &mu));
            let reduced = ring.divrem(&mu, &sq).0;
            if reduced.len() - 1 == sdim && ring.roots(&reduced).is_empty() && sdim <= 3 {
                return Locality::Local;
            }
        }
        Locality::Unknown
    }

    /// Minimal polynomial of an element (monic).
    pub fn min_poly(&self, m: &Matrix<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let d = self.dense();
        let mut ech = Echelon::new(f.clone());
        let mut power = d.identity(self.n);
        let mut deg = 0usize;
        loop {
            let v = self.flat(&power);
            match ech.insert_tagged(&v, vec![(deg, f.one())]) {
                Insert::Pivot(_) => {}
                Insert::Dependent(rel) => {
                    let poly = sparse_to_dense(f, &rel, deg + 1);
                    return PolyRing(f).monic(&poly);
                }
            }
            power = d.mul(&power, m);
            deg += 1;
        }
    }

    pub fn eval_poly(&self, p: &Poly<F::Elem>, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let d = self.dense();
        let mut acc = d.zeros(self.n, self.n);
        for c in p.iter().rev() {
            acc = d.mul(&acc, m);
            acc = d.add(&acc, &d.scale(c, &d.identity(self.n)));
        }
        acc
    }

    /// A nontrivial idempotent, found by Fitting decomposition of candidate
    /// elements (basis elements, then pairwise sums).
    pub fn find_idempotent(&self) -> Option<Matrix<F::Elem>> {
        let f = &self.field;
        let d = self.dense();
        let ring = PolyRing(f);
        let k = self.dim();
        let mut candidates: Vec<Matrix<F::Elem>> = self.basis.clone();
        for i in 0..k {
            for j in (i + 1)..k {
                if candidates.len() > 400 {
                    break;
                }
                candidates.push(d.add(&self.basis[i], &self.basis[j]));
            }
        }
        for c in &candidates {
            let mu = self.min_poly(c);
            if let Some((u, v)) = ring.coprime_split(&mu) {
                let (_, s, _) = ring.ext_gcd(&v, &u);
                let e_poly = ring.rem(&ring.mul(&s, &v), &mu);
                let e = self.eval_poly(&e_poly, c);
                debug_assert_eq!(d.mul(&e, &e), e);
                if !d.is_zero(&e) && e != d.identity(self.n) {
                    return Some(e);
                }
            }
        }
        None
    }
}

fn derivative<F: Field>(f: &F, p: &Poly<F::Elem>) -> Poly<F::Elem> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect()
}

fn mat_pow<F: Field>(d: &Dense<'_, F>, m: &Matrix<F::Elem>, mut e: u64) -> Matrix<F::Elem> {
    let mut base = m.clone();
    let mut acc = d.identity(m.rows());
    while e > 0 {
        if e & 1 == 1 {
            acc = d.mul(&acc, &base);
        }
        base = d.mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Trace of `m^e` over `Z / modulus`.
fn trace_of_power_mod(m: &Matrix<u64>, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let mul = |a: &Vec<u64>, b: &Vec<u64>| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = (out[r * n + c] + x * b[k * n + c]) % modulus;
                }
            }
        }
        out
    };
    let mut base: Vec<u64> = m.entries().to_vec();
    let mut acc: Vec<u64> = (0..n * n).map(|i| u64::from(i / n == i % n)).collect();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..n).fold(0, |t, i| (t + acc[i * n + i]) % modulus)
}
