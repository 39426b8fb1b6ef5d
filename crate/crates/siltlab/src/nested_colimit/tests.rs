use super::*;
use crate::algebra::{enumerate_reps, Representation, DEFAULT_BUDGET};
use crate::field::{PrimeField, Rationals};
use crate::stability::theta_from_ints;

fn kronecker_q() -> Algebra<Rationals> {
    PathAlgebra::kronecker().over(Rationals).unwrap()
}

fn kronecker_f2() -> Algebra<PrimeField> {
    PathAlgebra::kronecker().over(PrimeField::new(2).unwrap()).unwrap()
}

#[test]
fn kronecker_chain_g_vectors() {
    let chain = kronecker_chain(&kronecker_q(), 4).unwrap();
    let gs: Vec<Vec<i64>> = chain.items().iter().map(|t| t.g_vector()).collect();
    assert_eq!(gs, vec![vec![1, 1], vec![-1, 3], vec![-3, 5], vec![-5, 7], vec![-7, 9]]);
    let a2 = PathAlgebra::linear(2).over(Rationals).unwrap();
    assert!(kronecker_chain(&a2, 1).is_err());
}

#[test]
fn chains_must_be_nested() {
    let alg = kronecker_q();
    let a = SiltingComplex::regular(&alg);
    let shift = SiltingComplex::regular_shift(&alg);
    assert!(NestedChain::new(vec![a.clone(), shift.clone()]).is_ok());
    assert!(matches!(
        NestedChain::new(vec![shift.clone(), a.clone()]),
        Err(Error::NestednessViolation(_))
    ));
    let row = build_stage_row(&shift).unwrap();
    assert!(matches!(
        special_preenvelope_step(0, &row, &shift, &a, DEFAULT_GROWTH_CAP),
        Err(Error::NestednessViolation(_))
    ));
}

#[test]
fn constant_chain_is_split() {
    let alg = kronecker_q();
    let a = SiltingComplex::regular(&alg);
    let chain = NestedChain::new(vec![a.clone(), a.clone(), a]).unwrap();
    let sys = build_system(&chain, DEFAULT_GROWTH_CAP).unwrap();
    assert!(sys.certificates_hold());
    assert!(sys.composites_consistent());
    for (x, c) in sys.objects.iter().zip(&sys.add_checks) {
        assert_eq!(minimal_form(x).g_vector(), vec![1, 1]);
        assert_eq!(c.multiplicities, vec![1, 1]);
    }
}

#[test]
fn single_element_chain() {
    let alg = kronecker_q();
    let chain = NestedChain::new(vec![SiltingComplex::regular(&alg)]).unwrap();
    let sys = build_system(&chain, DEFAULT_GROWTH_CAP).unwrap();
    assert_eq!(sys.rows.len(), 1);
    assert!(sys.maps.is_empty());
}

#[test]
fn kronecker_stages_are_certified() {
    let chain = kronecker_chain(&kronecker_q(), 3).unwrap();
    let sys = build_system(&chain, DEFAULT_GROWTH_CAP).unwrap();
    for s in &sys.stages {
        assert!(s.certificates.all_hold(), "stage {}: {:?}", s.index, s.certificates);
    }
    assert!(sys.add_checks.iter().all(AddCheck::holds), "{:?}", sys.add_checks);
    assert!(sys.composites_consistent());
    assert!(matches!(build_system(&chain, 4), Err(Error::BudgetExceeded(_))));
}

#[test]
fn mittag_leffler_on_small_modules() {
    let alg = kronecker_f2();
    let chain = kronecker_chain(&alg, 3).unwrap();
    let sys = build_system(&chain, DEFAULT_GROWTH_CAP).unwrap();
    let reg = crate::io::parse_representation(&alg, r#"{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["0"]]}}"#).unwrap();
    let s1 = Representation::simple(&alg, 0);
    let report = mittag_leffler_check(&sys, &[reg, s1]).unwrap();
    assert_eq!(report.invalid, vec![1]);
    assert_eq!(report.entries.len(), 3);
    assert!(report.all_surjective());
}

#[test]
fn scalings_of_the_kronecker_chain() {
    let gs: Vec<Vec<i64>> = (0..6i64).map(|i| if i == 0 { vec![1, 1] } else { vec![-(2 * i - 1), 2 * i + 1] }).collect();
    let c = chain_scalings(&gs, &theta_from_ints(&[-1, 1])).unwrap();
    assert!(c.iter().all(|x| x > &num_rational::BigRational::from_integer(0.into())));
    assert!(chain_scalings(&[vec![1, 1]], &theta_from_ints(&[2, 2])).is_some());
    assert!(chain_scalings(&[vec![-1, -1]], &theta_from_ints(&[1, 0])).is_none());
}

#[test]
fn limit_torsion_class_small_box() {
    let alg = kronecker_f2();
    let chain = kronecker_chain(&alg, 4).unwrap();
    let cat = enumerate_reps(&alg, &[2, 2], None, DEFAULT_BUDGET).unwrap();
    let report = limit_torsion_class(&chain, &theta_from_ints(&[-1, 1]), &cat, DEFAULT_BUDGET).unwrap();
    assert!(report.consistent());
    assert!(report.sandwich);
    assert!(report.stabilization.is_some(), "{report:?}");
    assert!(report.residual.is_empty());

    let a = NestedChain::new(vec![SiltingComplex::regular(&alg)]).unwrap();
    let all = limit_torsion_class(&a, &theta_from_ints(&[1, 1]), &cat, DEFAULT_BUDGET).unwrap();
    assert_eq!(all.b_count, cat.modules.len());
    assert_eq!(all.stabilization, Some(0));

    let down = NestedChain::new(vec![SiltingComplex::regular(&alg), SiltingComplex::regular_shift(&alg)]).unwrap();
    let none = limit_torsion_class(&down, &theta_from_ints(&[-1, -1]), &cat, DEFAULT_BUDGET).unwrap();
    assert_eq!(none.b_count, 1);
    assert_eq!(none.stabilization, Some(1));
}

#[test]
fn bongartz_sequence_for_p2() {
    let alg = kronecker_f2();
    let cat = enumerate_reps(&alg, &[2, 2], None, DEFAULT_BUDGET).unwrap();
    let u = TwoTermComplex::stalk(&alg, vec![1]);
    let r = bongartz_limit_check(&u, 4, Some(&cat), DEFAULT_BUDGET).unwrap();
    assert!(r.holds(), "{:?}", r.in_chamber);
    assert_eq!(r.first_index, 1);
    assert_eq!(r.completion.key(), vec![vec![0, 1], vec![1, 0]]);
    let p1_shift = TwoTermComplex::shifted_stalk(&alg, vec![0]);
    let r = bongartz_limit_check(&p1_shift, 3, Some(&cat), DEFAULT_BUDGET).unwrap();
    assert!(r.holds(), "{:?} {:?}", r.completion.key(), r.in_chamber);
    assert!(bongartz_limit_check(&TwoTermComplex::zero_complex(&alg), 2, None, DEFAULT_BUDGET).is_err());
}
