//! Structural properties of finite-size Bethe solutions.

use bethe_solver::{
    energy, exp_form_residual, log_residual, pseudo_vacuum_relation_defect, solve_twisted, solve_twisted_sweep,
    solve_untwisted, untwisted_residual, Chain, TwistOptions,
};
use filling_moments::{bethe_numbers_for, FillingConfig};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn finite_size_moment(numbers: &[f64], length: usize, a: i64) -> Complex64 {
    numbers
        .iter()
        .map(|&i| Complex64::from_polar(1.0, 2.0 * PI * a as f64 * i / length as f64))
        .sum::<Complex64>()
        / length as f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn untwisted_roots_are_real_and_ordered(seed in proptest::collection::btree_set(-9i32..=9, 1..8)) {
        // L = 12, N odd or even; shift to the right parity.
        let n = seed.len();
        let offset = if n % 2 == 0 { 0.5 } else { 0.0 };
        let numbers: Vec<f64> = seed.iter().map(|&k| k as f64 + offset).collect();
        let bound = (12 + n) as f64 / 2.0 - 0.5;
        prop_assume!(numbers.iter().all(|x| x.abs() < bound));
        let s = solve_untwisted(12, &numbers).unwrap();
        let re: Vec<f64> = s.roots.iter().map(|r| r.re).collect();
        prop_assert!(s.roots.iter().all(|r| r.im.abs() <= 1e-12));
        prop_assert!(re.windows(2).all(|w| w[1] > w[0]));
        let res = untwisted_residual(&re, &numbers, 12);
        prop_assert!(res.iter().all(|r| r.abs() <= 1e-12));
    }
}

#[test]
fn twisted_continuation_ends_on_the_untwisted_solution() {
    for cfg in [FillingConfig::standard(0.25), FillingConfig::three_block(0.25)] {
        let numbers = bethe_numbers_for(&cfg, 48).unwrap();
        let direct = solve_untwisted(48, &numbers).unwrap();
        let continued = solve_twisted(48, &numbers, 0.0, Chain::SpinMinusOne, &TwistOptions::default()).unwrap();
        for (a, b) in direct.roots.iter().zip(&continued.roots) {
            assert!((a - b).norm() < 1e-9, "{a} vs {b}");
        }
        let ea = energy(&direct).unwrap();
        let eb = energy(&continued).unwrap();
        assert!((ea - eb).norm() < 1e-10);
    }
}

#[test]
fn twisted_solutions_satisfy_the_product_form() {
    let numbers = bethe_numbers_for(&FillingConfig::standard(0.25), 64).unwrap();
    let phis = [3.0, 2.0, 1.0, 0.5, 0.2];
    let states = solve_twisted_sweep(64, &numbers, &phis, Chain::SpinMinusOne, &TwistOptions::default()).unwrap();
    for s in &states {
        assert!(exp_form_residual(s) <= 1e-10, "φ = {}", s.phi);
        let r = log_residual(&s.roots, &s.numbers, s.length, s.phi, s.chain);
        assert!(r.iter().all(|x| x.norm() <= 1e-12));
    }
}

#[test]
fn first_level_roots_collapse_to_i() {
    for &length in &[16usize, 32, 64] {
        for cfg in [
            FillingConfig::standard(0.25),
            FillingConfig::edge_split(0.25),
            FillingConfig::three_block(0.25),
            FillingConfig::standard(0.5),
        ] {
            let numbers = bethe_numbers_for(&cfg, length).unwrap();
            let phis = [6.0, 5.0, 4.0, 3.0];
            let states =
                solve_twisted_sweep(length, &numbers, &phis, Chain::SpinMinusOne, &TwistOptions::default()).unwrap();
            for s in states {
                let bound = 3.0 * (-2.0 * s.phi).exp() * (1.0 + cfg.m);
                assert!(s.max_distance_from_i() <= bound, "{cfg:?} L={length} φ={}", s.phi);
            }
        }
    }
}

#[test]
fn leading_large_twist_energy() {
    let length = 32;
    let numbers = bethe_numbers_for(&FillingConfig::standard(0.25), length).unwrap();
    let phi = 4.0;
    let s = solve_twisted(length, &numbers, phi, Chain::SpinMinusOne, &TwistOptions::default()).unwrap();
    let e = energy(&s).unwrap();
    let lead = finite_size_moment(&numbers, length, -1) / 2.0;
    assert!((e * (-2.0 * phi).exp() - lead).norm() < 10.0 * (-2.0 * phi).exp());
}

#[test]
fn mirror_pseudo_vacuum_obeys_the_decoupled_equation() {
    for &length in &[32usize, 64] {
        let numbers: Vec<f64> = (0..length).map(|k| k as f64 - (length as f64 - 1.0) / 2.0).collect();
        let s = solve_twisted(length, &numbers, 1.5, Chain::Mirror, &TwistOptions::default()).unwrap();
        assert!(pseudo_vacuum_relation_defect(&s) < 1e-10);
        assert!((energy(&s).unwrap() - 1.0).norm() < 1e-10);
    }
}

#[test]
fn collision_free_distinct_roots() {
    let numbers = bethe_numbers_for(&FillingConfig::edge_split(0.5), 48).unwrap();
    let s = solve_twisted(48, &numbers, 0.3, Chain::SpinMinusOne, &TwistOptions::default()).unwrap();
    for (k, a) in s.roots.iter().enumerate() {
        for b in &s.roots[k + 1..] {
            assert!((a - b).norm() > 1e-6);
        }
    }
}
