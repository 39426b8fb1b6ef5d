use crate::algebra::{cokernel, kernel, Algebra, DimVector, ModuleMap, Representation};
use crate::complexes::pmat::PMat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Dense, Matrix};

/// Vector in `K_0(proj A)` in the basis `[P_1], ..., [P_l]`.
pub type GVector = Vec<i64>;

/// A complex `P^{-1} -> P^0` of finitely generated projectives.
///
/// Summands are listed by vertex in each degree (`neg`, `zero`); their order is
/// arbitrary but fixed, and the differential is a [`PMat`] with rows indexed by
/// `neg` and columns by `zero`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermComplex<F: Field> {
    alg: Algebra<F>,
    d: PMat<F::Elem>,
}

/// Chain map between two-term complexes: components in degrees −1 and 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap<E> {
    pub neg: PMat<E>,
    pub zero: PMat<E>,
}

impl<F: Field> TwoTermComplex<F> {
    pub fn new(alg: &Algebra<F>, d: PMat<F::Elem>) -> Self {
        TwoTermComplex { alg: alg.clone(), d }
    }

    pub fn zero_complex(alg: &Algebra<F>) -> Self {
        Self::new(alg, PMat::zero(alg, vec![], vec![]))
    }

    /// The stalk complex `0 -> ⊕ P_v` in degree 0.
    pub fn stalk(alg: &Algebra<F>, verts: Vec<usize>) -> Self {
        Self::new(alg, PMat::zero(alg, vec![], verts))
    }

    /// `(⊕ P_v)[1]`: the projectives in degree −1.
    pub fn shifted_stalk(alg: &Algebra<F>, verts: Vec<usize>) -> Self {
        Self::new(alg, PMat::zero(alg, verts, vec![]))
    }

    /// The stalk of `A = P_1 ⊕ ... ⊕ P_l`.
    pub fn regular(alg: &Algebra<F>) -> Self {
        Self::stalk(alg, (0..alg.rank()).collect())
    }

    /// `A[1]`.
    pub fn regular_shift(alg: &Algebra<F>) -> Self {
        Self::shifted_stalk(alg, (0..alg.rank()).collect())
    }

    /// The contractible complex `P =id P`.
    pub fn contractible(alg: &Algebra<F>, verts: Vec<usize>) -> Self {
        Self::new(alg, PMat::identity(alg, verts))
    }

    /// Build from multiplicity vectors, summands ordered by vertex.
    pub fn from_multiplicities(alg: &Algebra<F>, neg: &[usize], zero: &[usize], d: PMat<F::Elem>) -> Result<Self> {
        let expand = |m: &[usize]| -> Vec<usize> { m.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat(v).take(k)).collect() };
        if d.rows() != expand(neg).as_slice() || d.cols() != expand(zero).as_slice() {
            return Err(Error::Invalid("differential shape does not match multiplicities".into()));
        }
        Ok(Self::new(alg, d))
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    pub fn diff(&self) -> &PMat<F::Elem> {
        &self.d
    }

    pub fn neg(&self) -> &[usize] {
        self.d.rows()
    }

    pub fn zero(&self) -> &[usize] {
        self.d.cols()
    }

    pub fn neg_multiplicities(&self) -> Vec<usize> {
        counts(self.alg.rank(), self.neg())
    }

    pub fn zero_multiplicities(&self) -> Vec<usize> {
        counts(self.alg.rank(), self.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.neg().is_empty() && self.zero().is_empty()
    }

    /// Total number of indecomposable projective summands in both degrees.
    pub fn size(&self) -> usize {
        self.neg().len() + self.zero().len()
    }

    /// `[P^0] − [P^{-1}]`.
    pub fn g_vector(&self) -> GVector {
        let mut g = vec![0i64; self.alg.rank()];
        for &v in self.zero() {
            g[v] += 1;
        }
        for &v in self.neg() {
            g[v] -= 1;
        }
        g
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(&self.alg, self.d.block_diag(&self.alg, &other.d))
    }

    pub fn direct_sum_all<'a>(alg: &Algebra<F>, parts: impl IntoIterator<Item = &'a Self>) -> Self {
        parts.into_iter().fold(Self::zero_complex(alg), |acc, x| acc.direct_sum(x))
    }

    /// `self^{⊕k}`.
    pub fn power(&self, k: usize) -> Self {
        Self::direct_sum_all(&self.alg, std::iter::repeat(self).take(k))
    }

    /// Copy with summands sorted by vertex in each degree (stable).
    pub fn sorted(&self) -> Self {
        let rows = stable_order(self.neg());
        let cols = stable_order(self.zero());
        Self::new(&self.alg, self.d.select(&rows, &cols))
    }

    /// `H^0`: the cokernel of the differential as a module.
    pub fn h0(&self) -> Result<Representation<F>> {
        let (src, tgt, map) = self.differential_as_module_map();
        let _ = src;
        cokernel(&map, &tgt)
    }

    /// `H^{-1}(νX)`: kernel of `ν P^{-1} -> ν P^0` with `ν P_v = I_v`.
    pub fn hminus1_nu(&self) -> Result<Representation<F>> {
        let (src, tgt, map) = nakayama_map(&self.alg, &self.d)?;
        let _ = tgt;
        kernel(&map, &src)
    }

    /// The differential as a homomorphism of projective modules.
    pub fn differential_as_module_map(&self) -> (Representation<F>, Representation<F>, ModuleMap<F::Elem>) {
        pmat_module_map(&self.alg, &self.d)
    }

    pub fn identity_map(&self) -> ChainMap<F::Elem> {
        ChainMap {
            neg: PMat::identity(&self.alg, self.neg().to_vec()),
            zero: PMat::identity(&self.alg, self.zero().to_vec()),
        }
    }

    pub fn zero_map_to(&self, other: &Self) -> ChainMap<F::Elem> {
        ChainMap {
            neg: PMat::zero(&self.alg, self.neg().to_vec(), other.neg().to_vec()),
            zero: PMat::zero(&self.alg, self.zero().to_vec(), other.zero().to_vec()),
        }
    }
}

fn counts(l: usize, verts: &[usize]) -> Vec<usize> {
    let mut m = vec![0; l];
    for &v in verts {
        m[v] += 1;
    }
    m
}

fn stable_order(verts: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..verts.len()).collect();
    idx.sort_by_key(|&i| (verts[i], i));
    idx
}

/// Module of `⊕_r P_{v_r}` (direct sum of projectives in the listed order).
pub fn projective_sum<F: Field>(alg: &Algebra<F>, verts: &[usize]) -> Representation<F> {
    let ps: Vec<Representation<F>> = verts.iter().map(|&v| Representation::projective(alg, v)).collect();
    Representation::direct_sum_all(alg, &ps)
}

/// A [`PMat`] as a homomorphism between direct sums of projective modules.
pub fn pmat_module_map<F: Field>(alg: &Algebra<F>, m: &PMat<F::Elem>) -> (Representation<F>, Representation<F>, ModuleMap<F::Elem>) {
    let src = projective_sum(alg, m.rows());
    let tgt = projective_sum(alg, m.cols());
    let full = m.module_matrix(alg);
    // module_matrix lists vertices in order with all summands inside; the
    // direct sum of representations uses the same layout per vertex
    let mut maps = Vec::with_capacity(alg.rank());
    let (mut so, mut to) = (0, 0);
    for v in 0..alg.rank() {
        let (sd, td) = (src.dims()[v], tgt.dims()[v]);
        maps.push(Matrix::from_fn(td, sd, |r, c| full.get(to + r, so + c).clone()));
        so += sd;
        to += td;
    }
    (src, tgt, ModuleMap { maps })
}

/// Injective module `⊕_r I_{v_r}`.
pub fn injective_sum<F: Field>(alg: &Algebra<F>, verts: &[usize]) -> Representation<F> {
    let is: Vec<Representation<F>> = verts.iter().map(|&v| Representation::injective(alg, v)).collect();
    Representation::direct_sum_all(alg, &is)
}

/// The Nakayama image `ν(f): ⊕ I_{u_r} -> ⊕ I_{w_c}` of a map of projectives.
///
/// `ν P_v = D Hom(P_v, A) = I_v`; an entry `x ∈ e_u A e_w` acts on
/// `(I_u)_t = D(e_u A e_t)` by the transpose of left multiplication
/// `e_w A e_t -> e_u A e_t, y ↦ x y`.
pub fn nakayama_map<F: Field>(alg: &Algebra<F>, m: &PMat<F::Elem>) -> Result<(Representation<F>, Representation<F>, ModuleMap<F::Elem>)> {
    let f = alg.field();
    let src = injective_sum(alg, m.rows());
    let tgt = injective_sum(alg, m.cols());
    let mut maps = Vec::with_capacity(alg.rank());
    for t in 0..alg.rank() {
        let mut mat = Matrix::from_fn(tgt.dims()[t], src.dims()[t], |_, _| f.zero());
        let mut row_off = 0;
        for (c, &w) in m.cols().iter().enumerate() {
            let mut col_off = 0;
            for (r, &u) in m.rows().iter().enumerate() {
                let x = m.entry(r, c);
                // left multiplication by x: A_{w,t} -> A_{u,t}; its transpose maps D(A_{u,t}) -> D(A_{w,t})
                for y in 0..alg.dim(w, t) {
                    for (xb, coef) in x.iter().enumerate() {
                        if f.is_zero(coef) {
                            continue;
                        }
                        for (k, val) in alg.mul_basis(u, w, t, xb, y) {
                            let cur = mat.get(row_off + y, col_off + k).clone();
                            mat.set(row_off + y, col_off + k, f.mul_add(&cur, coef, val));
                        }
                    }
                }
                col_off += alg.dim(u, t);
            }
            row_off += alg.dim(w, t);
        }
        maps.push(mat);
    }
    let map = ModuleMap { maps };
    if !map.is_intertwiner(&src, &tgt) {
        return Err(Error::Invalid("Nakayama image is not a module map".into()));
    }
    Ok((src, tgt, map))
}

impl<E: Clone + PartialEq> ChainMap<E> {
    /// `self` followed by `other`.
    pub fn then<F: Field<Elem = E>>(&self, alg: &Algebra<F>, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.then(alg, &other.neg),
            zero: self.zero.then(alg, &other.zero),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.add(f, &other.neg),
            zero: self.zero.add(f, &other.zero),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.sub(f, &other.neg),
            zero: self.zero.sub(f, &other.zero),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        ChainMap {
            neg: self.neg.scale(f, c),
            zero: self.zero.scale(f, c),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.neg.is_zero(f) && self.zero.is_zero(f)
    }

    /// Check the commuting square `d_X f^0 = f^{-1} d_Y`.
    pub fn is_chain_map<F: Field<Elem = E>>(&self, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> bool {
        let alg = x.algebra();
        self.neg.rows() == x.neg()
            && self.neg.cols() == y.neg()
            && self.zero.rows() == x.zero()
            && self.zero.cols() == y.zero()
            && x.diff().then(alg, &self.zero) == self.neg.then(alg, y.diff())
    }

    /// Both components are split monomorphisms of projectives (tops injective).
    pub fn is_degreewise_split_mono<F: Field<Elem = E>>(&self, f: &F, l: usize) -> bool {
        is_split_mono(f, l, &self.neg) && is_split_mono(f, l, &self.zero)
    }

    /// Both components are isomorphisms.
    pub fn is_isomorphism<F: Field<Elem = E>>(&self, f: &F, l: usize) -> bool {
        is_iso(f, l, &self.neg) && is_iso(f, l, &self.zero)
    }

    /// Direct sum of chain maps.
    pub fn block_diag<F: Field<Elem = E>>(&self, alg: &Algebra<F>, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.block_diag(alg, &other.neg),
            zero: self.zero.block_diag(alg, &other.zero),
        }
    }

    /// Stack maps with a common source into the direct sum of the targets.
    pub fn hstack(&self, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.hstack(&other.neg),
            zero: self.zero.hstack(&other.zero),
        }
    }

    /// Stack maps with a common target out of the direct sum of the sources.
    pub fn vstack(&self, other: &Self) -> Self {
        ChainMap {
            neg: self.neg.vstack(&other.neg),
            zero: self.zero.vstack(&other.zero),
        }
    }

    /// Faithful matrix on the underlying vector spaces of both degrees.
    pub fn module_matrix<F: Field<Elem = E>>(&self, alg: &Algebra<F>) -> Matrix<E> {
        Dense(alg.field()).block_diag(&self.neg.module_matrix(alg), &self.zero.module_matrix(alg))
    }
}

/// Map between sums of projectives is split mono iff the induced map on tops is injective.
pub fn is_split_mono<F: Field>(f: &F, l: usize, m: &PMat<F::Elem>) -> bool {
    let d = Dense(f);
    (0..l).all(|v| {
        let t = m.top_block(f, v);
        d.rank(&t) == t.rows()
    })
}

/// Map between sums of projectives is an isomorphism iff the induced map on tops is.
pub fn is_iso<F: Field>(f: &F, l: usize, m: &PMat<F::Elem>) -> bool {
    let d = Dense(f);
    (0..l).all(|v| {
        let t = m.top_block(f, v);
        t.rows() == t.cols() && d.rank(&t) == t.rows()
    })
}

/// The pairing `⟨θ, d⟩ = Σ θ_i d_i` between `K_0(proj A)` and `K_0(mod A)`.
pub fn euler_pair(theta: &[num_rational::BigRational], d: &DimVector) -> num_rational::BigRational {
    theta
        .iter()
        .zip(d)
        .fold(num_rational::BigRational::from_integer(0.into()), |acc, (t, &x)| {
            acc + t * num_rational::BigRational::from_integer(x.into())
        })
}
