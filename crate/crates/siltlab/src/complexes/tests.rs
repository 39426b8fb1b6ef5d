use super::*;
use crate::algebra::{PathAlgebra, Representation};
use crate::field::{PrimeField, Rationals};
use crate::Field;

fn kronecker() -> crate::algebra::Algebra<Rationals> {
    PathAlgebra::kronecker().over(Rationals).unwrap()
}

/// `P_1 -> P_2^2` with differential `(a, b)`.
fn p1_to_p2_squared<F: Field>(alg: &crate::algebra::Algebra<F>) -> TwoTermComplex<F> {
    let f = alg.field();
    let mut d = PMat::zero(alg, vec![0], vec![1, 1]);
    d.set_entry(0, 0, vec![f.one(), f.zero()]);
    d.set_entry(0, 1, vec![f.zero(), f.one()]);
    TwoTermComplex::new(alg, d)
}

#[test]
fn hom_between_projective_stalks() {
    let alg = kronecker();
    let p1 = TwoTermComplex::stalk(&alg, vec![0]);
    let p2 = TwoTermComplex::stalk(&alg, vec![1]);
    assert_eq!(hom_dim(&p1, &p2, 0).unwrap(), 2);
    assert_eq!(hom_dim(&p2, &p1, 0).unwrap(), 0);
    assert_eq!(hom_dim(&p1, &p2, 2).unwrap(), 0);
}

#[test]
fn cohomology_and_g_vectors() {
    let alg = kronecker();
    let x = p1_to_p2_squared(&alg);
    assert_eq!(x.g_vector(), vec![-1, 2]);
    assert_eq!(x.h0().unwrap().dims(), &vec![3, 2]);
    let a = TwoTermComplex::regular(&alg);
    assert_eq!(hom_dim(&a, &x, 0).unwrap(), 5);
    let t1 = x.direct_sum(&TwoTermComplex::stalk(&alg, vec![1]));
    assert_eq!(t1.g_vector(), vec![-1, 3]);
    assert_eq!(hom1_dim(&t1, &t1).unwrap(), 0);
    let shifted = TwoTermComplex::shifted_stalk(&alg, vec![0]);
    assert_eq!(shifted.hminus1_nu().unwrap().dims(), Representation::injective(&alg, 0).dims());
}

#[test]
fn minimal_forms_strip_contractibles() {
    let alg = kronecker();
    let c = TwoTermComplex::contractible(&alg, vec![0]);
    assert!(minimal_form(&c).is_zero());
    let a = TwoTermComplex::regular(&alg);
    let x = a.direct_sum(&TwoTermComplex::contractible(&alg, vec![1]));
    let (m, iota, pi) = minimal_form_with_maps(&x);
    assert_eq!(m.size(), 2);
    assert!(iota.is_chain_map(&m, &x));
    assert!(pi.is_chain_map(&x, &m));
    assert_eq!(iota.then(&alg, &pi), m.identity_map());
}

#[test]
fn decompose_scrambled_t1() {
    let alg = kronecker();
    let f = alg.field();
    let t1 = p1_to_p2_squared(&alg).direct_sum(&TwoTermComplex::stalk(&alg, vec![1]));
    // change of basis in degree 0 mixing the three copies of P_2
    let mut g = PMat::identity(&alg, vec![1, 1, 1]);
    g.set_entry(2, 0, vec![f.one()]);
    g.set_entry(1, 2, vec![f.from_i64(3)]);
    let d = t1.diff().then(&alg, &g);
    let scrambled = TwoTermComplex::new(&alg, d);
    let parts = decompose(&scrambled).unwrap();
    assert_eq!(parts.len(), 2);
    let gs: Vec<Vec<i64>> = parts.iter().map(|p| p.g_vector()).collect();
    assert_eq!(gs, vec![vec![-1, 2], vec![0, 1]]);
    assert!(is_isomorphic(&scrambled, &t1).unwrap());
    let doubled = decompose_with_multiplicity(&t1.direct_sum(&t1)).unwrap();
    assert_eq!(doubled.iter().map(|c| c.1).collect::<Vec<_>>(), vec![2, 2]);
}

#[test]
fn cones_of_identity_and_zero() {
    let alg = kronecker();
    let x = p1_to_p2_squared(&alg);
    let c = cone(&x.identity_map(), &x, &x);
    assert!(c.is_complex());
    assert!(c.reduce_to_two_term().unwrap().is_zero());
    let y = TwoTermComplex::stalk(&alg, vec![1]);
    let z = cone(&x.zero_map_to(&y), &x, &y);
    assert!(matches!(z.reduce_to_two_term(), Err(crate::Error::NotTwoTerm)));
}

#[test]
fn duality_reverses_hom() {
    let f = PrimeField::new(3).unwrap();
    let alg = PathAlgebra::kronecker().over(f).unwrap();
    let op = alg.opposite();
    // over the opposite quiver 2 ⇉ 1: P_2 -> P_1^2
    let mut d = PMat::zero(&op, vec![1], vec![0, 0]);
    d.set_entry(0, 0, vec![f.one(), f.zero()]);
    d.set_entry(0, 1, vec![f.zero(), f.one()]);
    let x = TwoTermComplex::new(&op, d);
    let y = TwoTermComplex::stalk(&op, vec![0]);
    let (dx, dy) = (dualize(&x, &alg).unwrap(), dualize(&y, &alg).unwrap());
    for k in -1..=1 {
        assert_eq!(
            hom_dim(&x, &y, k).unwrap(),
            module_complex_hom_dim(&dy, &dx, k).unwrap(),
            "shift {k}"
        );
    }
    assert_eq!(dx.injective_class(), x.g_vector());
}
