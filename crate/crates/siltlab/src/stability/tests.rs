use super::*;
use crate::algebra::{Algebra, PathAlgebra, DEFAULT_BUDGET};
use crate::field::{ratio, PrimeField, Rationals};
use crate::io::parse_representation;
use crate::silting::{mutate, Direction, SiltingComplex};

fn kronecker_f2() -> Algebra<PrimeField> {
    PathAlgebra::kronecker().over(PrimeField::new(2).unwrap()).unwrap()
}

fn rep(alg: &Algebra<PrimeField>, json: &str) -> Representation<PrimeField> {
    parse_representation(alg, json).unwrap()
}

fn theta(v: &[i64]) -> Theta {
    theta_from_ints(v)
}

#[test]
fn pairing_and_order() {
    assert_eq!(theta_eval(&theta(&[-1, 1]), &vec![1, 1]), ratio(0, 1));
    assert_eq!(theta_eval(&theta(&[0, 0]), &vec![3, 7]), ratio(0, 1));
    assert!(theta_leq(&theta(&[-1, 1]), &theta(&[1, 1])));
    assert!(!theta_leq(&theta(&[1, 1]), &theta(&[-1, 1])));
    assert_eq!(parse_theta("-1/2, 3").unwrap(), vec![ratio(-1, 2), ratio(3, 1)]);
    assert_eq!(primitive(&vec![ratio(-1, 2), ratio(3, 2)]), vec![(-1).into(), 3.into()]);
}

#[test]
fn numerical_torsion_classes_on_kronecker() {
    let alg = kronecker_f2();
    let b = DEFAULT_BUDGET;
    let s1 = Representation::simple(&alg, 0);
    let s2 = Representation::simple(&alg, 1);
    let reg = rep(&alg, r#"{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["0"]]}}"#);
    let preinj = rep(&alg, r#"{"dim":[1,2],"matrices":{"a":[["1","0"]],"b":[["0","1"]]}}"#);
    let th = theta(&[-1, 1]);
    assert!(in_tbar(&theta(&[1, 1]), &reg, b).unwrap());
    assert!(!in_tbar(&th, &s1, b).unwrap());
    assert!(in_tbar(&th, &preinj, b).unwrap());
    assert!(is_semistable(&th, &reg, b).unwrap());
    assert!(!is_semistable(&th, &s2, b).unwrap());
    assert!(is_semistable(&theta(&[0, 0]), &s1, b).unwrap());
    assert!(in_t_strict(&th, &s2, b).unwrap());
    assert!(!in_t_strict(&th, &reg, b).unwrap());
    assert!(in_f(&th, &s1, b).unwrap());
    assert!(in_fbar(&th, &reg, b).unwrap());
    assert!(!in_f(&th, &reg, b).unwrap());
}

#[test]
fn walls_of_small_modules() {
    let alg = kronecker_f2();
    let b = DEFAULT_BUDGET;
    let s2 = Representation::simple(&alg, 1);
    let w = wall(&s2, b).unwrap();
    assert_eq!(w.dimension(), 1);
    assert!(w.contains(&theta(&[1, 0])) && w.contains(&theta(&[-1, 0])));
    assert!(!w.contains(&theta(&[0, 1])));

    let reg = rep(&alg, r#"{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["1"]]}}"#);
    let w = wall(&reg, b).unwrap();
    assert_eq!(w.generators, vec![theta(&[-1, 1])]);
    assert!(w.is_consistent());

    let split = Representation::simple(&alg, 0).direct_sum(&s2);
    let w = wall(&split, b).unwrap();
    assert_eq!(w.dimension(), 0);
    assert!(wall(&Representation::zero(&alg), b).is_err());
}

#[test]
fn cones_of_silting_complexes() {
    let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
    let a = SiltingComplex::regular(&alg);
    let ca = cone_of(&a);
    assert_eq!(ca.generators, vec![theta(&[1, 0]), theta(&[0, 1])]);
    assert!(ca.in_relative_interior(&theta(&[1, 3])));
    assert!(!ca.contains(&theta(&[-1, 1])));
    assert!(ca.is_full_dimensional() && ca.is_consistent());
    let t1 = mutate(&a, 0, Direction::Left).unwrap();
    let c1 = cone_of(&t1);
    assert_eq!(c1.generators, vec![theta(&[0, 1]), theta(&[-1, 2])]);
    let meet = ca.intersect(&c1, DEFAULT_BUDGET).unwrap();
    assert_eq!(meet.generators, vec![theta(&[0, 1])]);
}

#[test]
fn fan_exploration() {
    let a2 = PathAlgebra::linear(2).over(Rationals).unwrap();
    let fan = explore_fan(&a2, 10).unwrap();
    assert_eq!(fan.chambers.len(), 5);
    assert!(fan.complete);
    let kr = PathAlgebra::kronecker().over(Rationals).unwrap();
    let fan = explore_fan(&kr, 6).unwrap();
    assert_eq!(fan.chambers.len(), 6);
    assert!(!fan.complete);
    let fan = explore_fan(&kr, 1).unwrap();
    assert_eq!(fan.chambers.len(), 1);
    assert!(!fan.complete);
    assert_eq!(fan.chambers[0].neighbors.len(), 2);
}

#[test]
fn approach_towards_the_limiting_ray() {
    let alg = kronecker_f2();
    let a = SiltingComplex::regular(&alg);
    let schedule = ApproachSchedule {
        scale: 2,
        ..Default::default()
    };
    let steps = approach_sequence(&a, &theta(&[-1, 1]), 5, schedule).unwrap();
    for (n, s) in steps.iter().enumerate() {
        let i = n as i64 + 1;
        assert_eq!(s.silting.g_vector(), vec![-(2 * i - 1), 2 * i + 1]);
        assert_eq!(s.epsilon, (2 * i).into());
        assert_eq!(s.multiplicities, vec![1.into(), 1.into()]);
    }
}

#[test]
fn approach_inside_a_chamber_is_constant() {
    let alg = kronecker_f2();
    let a = SiltingComplex::regular(&alg);
    let steps = approach_sequence(&a, &theta(&[2, 1]), 3, ApproachSchedule::default()).unwrap();
    assert!(steps.iter().all(|s| s.theta == theta(&[2, 1]) && s.silting == a));
    // on the ray of P_2 the sequence stays in C(A)
    let steps = approach_sequence(&a, &theta(&[0, 1]), 4, ApproachSchedule::default()).unwrap();
    assert!(steps.iter().all(|s| s.silting == a));
    assert_eq!(steps[1].theta, vec![ratio(1, 2), ratio(3, 2)]);
}

#[test]
fn svg_is_deterministic() {
    let mut p = Picture::default();
    p.add_chamber(&theta(&[1, 0]), &theta(&[0, 1]));
    p.add_ray(&theta(&[-1, 2]));
    p.add_wall(&[theta(&[-1, 1])]);
    let s = render_svg(&p).unwrap();
    assert!(s.starts_with("<svg") && s.contains("polygon"));
    assert_eq!(s, render_svg(&p).unwrap());
    let mut bad = Picture::default();
    bad.add_ray(&theta(&[1, 0, 0]));
    assert!(render_svg(&bad).is_err());
}
