use coadjoint_core::combinatorics::compositions;
use coadjoint_core::graded::complete_intersection_series;
use coadjoint_core::orbits::{build_fibration, OrbitDescriptor};
use coadjoint_core::{
    box_partitions, poincare_partial_flag, refines, verify_tower, Composition, GradedDims,
    TowerOptions,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn series() -> impl Strategy<Value = GradedDims> {
    prop::collection::vec(0u64..100, 0..40).prop_map(|v| GradedDims::from_u64s(&v))
}

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=4, 1..=max_n)
        .prop_map(|parts| Composition::new(parts).unwrap())
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

proptest! {
    #[test]
    fn tensor_is_commutative_associative_unital(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&GradedDims::one()), a.clone());
    }

    #[test]
    fn total_dim_multiplies(a in series(), b in series()) {
        prop_assert_eq!(a.tensor(&b).total_dim(), a.total_dim() * b.total_dim());
    }

    #[test]
    fn palindromes_survive_tensor(half_a in prop::collection::vec(0u64..100, 1..20),
                                  half_b in prop::collection::vec(0u64..100, 1..20)) {
        let mirror = |h: &Vec<u64>| {
            let mut v = h.clone();
            v.extend(h.iter().rev().skip(1));
            if v.last() == Some(&0) { v.push(1); v.insert(0, 1); }
            GradedDims::from_u64s(&v)
        };
        let (a, b) = (mirror(&half_a), mirror(&half_b));
        prop_assert!(a.is_palindromic() && b.is_palindromic());
        prop_assert!(a.tensor(&b).is_palindromic());
    }

    #[test]
    fn division_undoes_tensor(a in series(), b in series(), lead in 1u64..5) {
        let mut dense: Vec<u64> = b.betti().iter().map(|x| x.try_into().unwrap()).collect();
        if dense.is_empty() { dense.push(lead) } else { dense[0] = lead }
        let b = GradedDims::from_u64s(&dense);
        prop_assert_eq!(a.tensor(&b).divide_exact(&b).unwrap(), Some(a));
    }

    #[test]
    fn refinement_witness_reconstructs_coarse(fine in composition(8), mask in any::<u16>()) {
        // Build a coarse composition by merging fine parts at random.
        let mut coarse = vec![fine.parts()[0]];
        for (i, &p) in fine.parts().iter().enumerate().skip(1) {
            if mask & (1 << (i % 16)) != 0 {
                *coarse.last_mut().unwrap() += p;
            } else {
                coarse.push(p);
            }
        }
        let coarse = Composition::new(coarse).unwrap();
        let w = refines(&fine, &coarse).unwrap().expect("merges refine");
        prop_assert_eq!(w.coarsen(&fine), coarse);
    }

    #[test]
    fn partial_flag_is_symmetric_in_parts(p in composition(5), seed in any::<u64>()) {
        let mut parts = p.parts().to_vec();
        let len = parts.len();
        for i in (1..len).rev() {
            let j = (seed.rotate_left(i as u32) as usize) % (i + 1);
            parts.swap(i, j);
        }
        let q = Composition::new(parts).unwrap();
        prop_assert_eq!(poincare_partial_flag(&p), poincare_partial_flag(&q));
    }

    #[test]
    fn box_symmetries(k in 0usize..7, m in 0usize..7, w in 0usize..50) {
        prop_assert_eq!(box_partitions(k, m, w), box_partitions(m, k, w));
        if w <= k * m {
            prop_assert_eq!(box_partitions(k, m, w), box_partitions(k, m, k * m - w));
        }
    }
}

#[test]
fn refinement_is_a_partial_order() {
    for n in 1..=5 {
        let all = compositions(n).unwrap();
        for a in &all {
            assert!(refines(a, a).unwrap().unwrap().is_identity());
            for b in &all {
                let ab = refines(a, b).unwrap();
                let ba = refines(b, a).unwrap();
                if ab.is_some() && ba.is_some() {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if let (Some(x), Some(y)) = (&ab, refines(b, c).unwrap()) {
                        let composed = x.then(&y);
                        assert_eq!(refines(a, c).unwrap().as_ref(), Some(&composed));
                    }
                }
            }
        }
    }
}

#[test]
fn box_rows_sum_to_binomial() {
    for k in 0..=6 {
        for m in 0..=6 {
            let total: BigUint = (0..=k * m).map(|w| box_partitions(k, m, w)).sum();
            assert_eq!(total, binomial(k + m, k));
        }
    }
}

#[test]
fn complete_intersection_matches_boxes() {
    for n in 0..=10 {
        for k in 0..=n {
            let gens: Vec<usize> = (1..=k).map(|i| 2 * i).collect();
            let rels: Vec<usize> = (n - k + 1..=n).map(|i| 2 * i).collect();
            let ci = complete_intersection_series(&gens, &rels).unwrap();
            for w in 0..=k * (n - k) + 1 {
                assert_eq!(ci.get(2 * w), box_partitions(k, n - k, w), "k={k} n={n} w={w}");
                assert_eq!(ci.get(2 * w + 1), BigUint::from(0u32));
            }
        }
    }
}

#[test]
fn orbit_series_invariants() {
    for n in 1..=8 {
        for p in compositions(n).unwrap() {
            let s = poincare_partial_flag(&p);
            assert!(s.is_palindromic());
            assert!(s.odd_degrees_vanish());
            assert_eq!(s.get(0), BigUint::from(1u32));
            let squares: usize = p.parts().iter().map(|i| i * i).sum();
            assert_eq!(s.top_degree(), Some(n * n - squares));
            let denom = p.parts().iter().fold(BigUint::from(1u32), |acc, &i| acc * factorial(i));
            assert_eq!(s.total_dim(), factorial(n) / denom);
            assert_eq!(OrbitDescriptor::new(p.clone()).complex_dim() * 2, n * n - squares);
        }
    }
}

#[test]
fn euler_characteristic_multiplies_along_fibrations() {
    for n in 1..=6 {
        let all = compositions(n).unwrap();
        for fine in &all {
            for coarse in &all {
                let Ok(fib) = build_fibration(fine, coarse) else { continue };
                let fibers: BigUint = fib
                    .fiber_factors()
                    .iter()
                    .map(|f| f.poincare().total_dim())
                    .product();
                assert_eq!(
                    fib.total().poincare().total_dim(),
                    fib.base().poincare().total_dim() * fibers
                );
            }
        }
    }
}

#[test]
fn steps_true_implies_product_true() {
    let opts = TowerOptions { allow_full_group: true };
    for n in 2..=5 {
        let ones = Composition::ones(n).unwrap();
        let full = Composition::full(n).unwrap();
        for chain in coadjoint_core::refinement_chains(n, &ones, &full).unwrap() {
            let t = verify_tower(&chain, opts).unwrap();
            if t.step_certificates.iter().all(|c| c.verdict) {
                assert!(t.product_certificate.verdict);
            }
            assert!(t.product_certificate.recheck());
        }
    }
}
