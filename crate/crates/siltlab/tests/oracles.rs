//! Library results against independent brute-force computations.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use siltlab::algebra::{enumerate_reps, submodule_dim_vectors, DimVector, Representation, DEFAULT_BUDGET};
use siltlab::stability::{explore_fan, theta_from_ints, SubquotientData};

#[test]
fn submodule_dimensions_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, alg) in fixtures() {
        for _ in 0..25 {
            let m = random_rep(&alg, 2, &mut rng);
            assert_eq!(
                submodule_dim_vectors(&m, DEFAULT_BUDGET).unwrap(),
                brute_submodule_dims(&m),
                "{name} {:?}",
                m.dims()
            );
        }
    }
}

#[test]
fn projective_submodules() {
    let alg = kronecker(2);
    let p2 = Representation::projective(&alg, 1);
    let want: BTreeSet<DimVector> = [vec![0, 0], vec![1, 0], vec![2, 0], vec![2, 1]].into_iter().collect();
    assert_eq!(brute_submodule_dims(&p2), want);
    assert_eq!(submodule_dim_vectors(&p2, DEFAULT_BUDGET).unwrap(), want);
}

fn gl(p: u64, n: usize) -> Vec<Vec<Vec<u64>>> {
    let mut mats: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for _ in 0..n {
        let rows: Vec<Vec<u64>> = all_rows(p, n);
        mats = mats
            .into_iter()
            .flat_map(|m| {
                rows.iter().map(move |r| {
                    let mut m2 = m.clone();
                    m2.push(r.clone());
                    m2
                })
            })
            .collect();
    }
    mats.into_iter().filter(|m| rank(p, m) == n).collect()
}

fn all_rows(p: u64, n: usize) -> Vec<Vec<u64>> {
    (0..p.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        })
        .collect()
}

fn rank(p: u64, m: &[Vec<u64>]) -> usize {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] % p != 0) else { continue };
        a.swap(r, piv);
        let inv = (1..p).find(|x| x * a[r][c] % p == 1).unwrap();
        for i in 0..a.len() {
            if i != r && a[i][c] % p != 0 {
                let k = a[i][c] * inv % p;
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - k * y % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

fn mul(p: u64, a: &[Vec<u64>], b: &[Vec<u64>], inner: usize) -> Vec<Vec<u64>> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum::<u64>() % p).collect())
        .collect()
}

type MatrixPair = (Vec<Vec<u64>>, Vec<Vec<u64>>);

/// Isomorphism classes of Kronecker representations of dimension `(a, b)`,
/// as orbits of `GL_a × GL_b` on pairs of `a × b` matrices.
fn kronecker_orbits(p: u64, a: usize, b: usize) -> usize {
    let all: Vec<Vec<Vec<u64>>> = (0..p.pow((a * b) as u32))
        .map(|mut x| {
            (0..a)
                .map(|_| {
                    (0..b)
                        .map(|_| {
                            let d = x % p;
                            x /= p;
                            d
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let (ga, gb) = (gl(p, a), gl(p, b));
    let mut seen: BTreeSet<MatrixPair> = BTreeSet::new();
    let mut orbits = 0;
    for x in &all {
        for y in &all {
            if seen.contains(&(x.clone(), y.clone())) {
                continue;
            }
            orbits += 1;
            for g in &ga {
                for h in &gb {
                    let gx = mul(p, &mul(p, g, x, a), h, b);
                    let gy = mul(p, &mul(p, g, y, a), h, b);
                    seen.insert((gx, gy));
                }
            }
        }
    }
    orbits
}

#[test]
fn catalog_counts_match_orbit_counting() {
    for p in [2, 3] {
        let alg = kronecker(p);
        let cat = enumerate_reps(&alg, &[2, 2], None, DEFAULT_BUDGET).unwrap();
        let mut want = 0;
        for a in 0..=2 {
            for b in 0..=2 {
                want += kronecker_orbits(p, a, b);
            }
        }
        assert_eq!(cat.modules.len(), want, "F_{p}");
    }
    let cat = enumerate_reps(&kronecker(2), &[1, 1], None, DEFAULT_BUDGET).unwrap();
    assert_eq!(cat.modules.len(), 7);
}

/// Points of degree `d` on the projective line over `F_q`.
fn closed_points(q: u64, d: usize) -> u64 {
    if d == 1 {
        return q + 1;
    }
    // Möbius inversion of q^d + 1 = Σ_{e | d} e · N_e for d > 1
    let mut total = q.pow(d as u32) + 1;
    for e in 1..d {
        if d % e == 0 {
            total -= e as u64 * closed_points(q, e);
        }
    }
    total / d as u64
}

/// Indecomposable Kronecker modules of dimension `(a, b)` over `F_q`.
fn kronecker_indecomposables(q: u64, a: usize, b: usize) -> u64 {
    match a.abs_diff(b) {
        1 => 1,
        0 if a > 0 => (1..=a).filter(|d| a % d == 0).map(|d| closed_points(q, d)).sum(),
        _ => 0,
    }
}

#[test]
fn indecomposables_follow_the_kronecker_classification() {
    for (q, total) in [(2, 27), (3, 56)] {
        let alg = kronecker(q);
        let cat = enumerate_reps(&alg, &[4, 4], None, DEFAULT_BUDGET).unwrap();
        let mut by_dim: BTreeMap<DimVector, u64> = BTreeMap::new();
        for m in &cat.indecomposables {
            *by_dim.entry(m.dims().clone()).or_default() += 1;
        }
        for a in 0..=4 {
            for b in 0..=4 {
                let got = by_dim.get(&vec![a, b]).copied().unwrap_or(0);
                assert_eq!(got, kronecker_indecomposables(q, a, b), "F_{q} ({a},{b})");
            }
        }
        assert_eq!(cat.indecomposables.len(), total);
    }
}

/// Modules in the box as multisets of indecomposables, counted from the
/// per-dimension indecomposable counts.
fn multiset_count(counts: &[(DimVector, u64)], bound: &[usize]) -> u64 {
    let (w, h) = (bound[0] + 1, bound[1] + 1);
    let mut table = vec![0u64; w * h];
    table[0] = 1;
    for (d, n) in counts {
        for _ in 0..*n {
            for a in 0..w {
                for b in 0..h {
                    if a >= d[0] && b >= d[1] {
                        table[a * h + b] += table[(a - d[0]) * h + (b - d[1])];
                    }
                }
            }
        }
    }
    table.iter().sum()
}

#[test]
fn module_counts_in_the_box() {
    for (q, total) in [(2, 485), (3, 876)] {
        let cat = enumerate_reps(&kronecker(q), &[4, 4], None, DEFAULT_BUDGET).unwrap();
        let mut counts = Vec::new();
        for a in 0..=4 {
            for b in 0..=4 {
                let n = kronecker_indecomposables(q, a, b);
                if n > 0 {
                    counts.push((vec![a, b], n));
                }
            }
        }
        assert_eq!(multiset_count(&counts, &[4, 4]), total);
        assert_eq!(cat.modules.len() as u64, total);
    }
}

#[test]
fn limiting_torsion_class_is_preinjective_and_regular() {
    let theta = theta_from_ints(&[-1, 1]);
    for q in [2, 3] {
        let cat = enumerate_reps(&kronecker(q), &[3, 3], None, DEFAULT_BUDGET).unwrap();
        for m in &cat.indecomposables {
            let d = SubquotientData::of(m, DEFAULT_BUDGET).unwrap();
            let want = kronecker_class(m.dims()) != KroneckerClass::Preprojective;
            assert_eq!(d.in_tbar(&theta), want, "F_{q} {:?}", m.dims());
        }
    }
}

#[test]
fn a2_fan_covers_generic_vectors_once() {
    let alg = linear(2, 2);
    let fan = explore_fan(&alg, 64).unwrap();
    assert!(fan.complete);
    assert_eq!(fan.chambers.len(), 5);
    for x in -3..=3i64 {
        for y in -3..=3i64 {
            let th = theta_from_ints(&[x, y]);
            let hits = fan.chambers.iter().filter(|c| c.cone.in_relative_interior(&th)).count();
            let on_wall = fan.chambers.iter().any(|c| c.cone.contains(&th) && !c.cone.in_relative_interior(&th));
            assert!(hits == 1 || (hits == 0 && on_wall), "({x},{y})");
        }
    }
}
