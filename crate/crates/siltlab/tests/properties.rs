mod common;

use common::*;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use siltlab::algebra::DEFAULT_BUDGET;
use siltlab::complexes::{dualize, euler_pair, hom_dim, hom_to_module_dim, module_complex_hom_dim};
use siltlab::silting::{in_aisle_module, is_nested, mutate_two_term, SiltingComplex};
use siltlab::stability::{explore_fan, theta_leq, theta_scale, SubquotientData, Theta};

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into())
}

fn random_theta(rng: &mut ChaCha8Rng, l: usize) -> Theta {
    (0..l).map(|_| rational(rng)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euler_form_is_the_alternating_hom_sum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, alg) in fixtures() {
            let p = random_complex(&alg, 2, &mut rng);
            let m = random_rep(&alg, 2, &mut rng);
            let g: Theta = p.g_vector().iter().map(|&x| BigRational::from_integer(x.into())).collect();
            let h0 = hom_to_module_dim(&p, &m, 0).unwrap() as i64;
            let h1 = hom_to_module_dim(&p, &m, 1).unwrap() as i64;
            prop_assert_eq!(euler_pair(&g, m.dims()), BigRational::from_integer((h0 - h1).into()), "{}", name);
        }
    }

    #[test]
    fn duality_reverses_hom_dimensions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = kronecker(3);
        let op = alg.opposite();
        let x = random_complex(&op, 2, &mut rng);
        let y = random_complex(&op, 2, &mut rng);
        let (dx, dy) = (dualize(&x, &alg).unwrap(), dualize(&y, &alg).unwrap());
        for k in -1..=1 {
            prop_assert_eq!(hom_dim(&x, &y, k).unwrap(), module_complex_hom_dim(&dy, &dx, k).unwrap());
        }
    }

    #[test]
    fn tbar_is_invariant_under_positive_scaling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, alg) in fixtures() {
            let m = random_rep(&alg, 2, &mut rng);
            let data = SubquotientData::of(&m, DEFAULT_BUDGET).unwrap();
            let th = random_theta(&mut rng, alg.rank());
            let eps = BigRational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=9).into());
            let scaled = theta_scale(&th, &eps);
            prop_assert_eq!(data.in_tbar(&th), data.in_tbar(&scaled));
            prop_assert_eq!(data.is_semistable(&th), data.is_semistable(&scaled));
        }
    }

    #[test]
    fn tbar_grows_with_theta(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, alg) in fixtures() {
            let m = random_rep(&alg, 2, &mut rng);
            let data = SubquotientData::of(&m, DEFAULT_BUDGET).unwrap();
            let eta = random_theta(&mut rng, alg.rank());
            let bump: Theta = (0..alg.rank())
                .map(|_| BigRational::new(rng.gen_range(0i64..=4).into(), 2.into()))
                .collect();
            let theta: Theta = eta.iter().zip(&bump).map(|(a, b)| a + b).collect();
            prop_assert!(theta_leq(&eta, &theta));
            if data.in_tbar(&eta) {
                prop_assert!(data.in_tbar(&theta));
            }
            if data.in_f(&theta) {
                prop_assert!(data.in_f(&eta));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chambers_match_torsion_classes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in [kronecker(2), linear(3, 2)] {
            let fan = explore_fan(&alg, 10).unwrap();
            let c = &fan.chambers[rng.gen_range(0..fan.chambers.len())];
            let gs = c.silting.summand_g_vectors();
            let weights: Vec<i64> = gs.iter().map(|_| rng.gen_range(1..=3)).collect();
            let theta: Theta = (0..alg.rank())
                .map(|v| BigRational::from_integer(gs.iter().zip(&weights).map(|(g, w)| g[v] * w).sum::<i64>().into()))
                .collect();
            prop_assert!(c.cone.in_relative_interior(&theta));
            for _ in 0..4 {
                let m = random_rep(&alg, 2, &mut rng);
                let data = SubquotientData::of(&m, DEFAULT_BUDGET).unwrap();
                prop_assert_eq!(in_aisle_module(&c.silting, &m).unwrap(), data.in_tbar(&theta));
            }
        }
    }

    #[test]
    fn two_term_mutation_is_an_involution_on_chambers(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = kronecker(2);
        let mut t = SiltingComplex::regular(&alg);
        for _ in 0..rng.gen_range(0..5) {
            t = mutate_two_term(&t, rng.gen_range(0..2)).unwrap().0;
        }
        let j = rng.gen_range(0..2);
        let (n, _, k) = mutate_two_term(&t, j).unwrap();
        prop_assert_eq!(mutate_two_term(&n, k).unwrap().0.key(), t.key());
        prop_assert!(is_nested(&n, &t).unwrap() || is_nested(&t, &n).unwrap());
    }
}

#[test]
fn aisles_shrink_along_nested_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alg = kronecker(2);
    let fan = explore_fan(&alg, 12).unwrap();
    for a in &fan.chambers {
        for b in &fan.chambers {
            if !is_nested(&b.silting, &a.silting).unwrap() {
                continue;
            }
            for _ in 0..6 {
                let m = random_rep(&alg, 3, &mut rng);
                if in_aisle_module(&b.silting, &m).unwrap() {
                    assert!(in_aisle_module(&a.silting, &m).unwrap());
                }
            }
        }
    }
}
