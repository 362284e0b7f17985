//! Invariants of filling moments and of their finite-size realisations.

use filling_moments::{
    bethe_numbers_for, moments_piecewise, moments_standard, moments_threeblock, traj1_filling, traj2_filling,
    FillingConfig, Interval, MomentProvider,
};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn named(m: f64) -> [FillingConfig; 3] {
    [
        FillingConfig::standard(m),
        FillingConfig::edge_split(m),
        FillingConfig::three_block(m),
    ]
}

#[test]
fn piecewise_single_block_is_standard() {
    for &m in &[0.25, 0.75] {
        let iv = [Interval::new(-m / 2.0, m / 2.0, 1)];
        for a in -10..=10 {
            assert!((moments_piecewise(&iv, a) - moments_standard(m, a)).norm() < 1e-14);
        }
    }
}

#[test]
fn named_closed_forms_match_their_intervals() {
    for &m in &[0.1, 0.25, 0.5, 0.8] {
        for cfg in named(m) {
            let iv = cfg.intervals();
            let p = MomentProvider::Filling(cfg);
            for a in -8..=8 {
                assert!((p.moment(a) - moments_piecewise(&iv, a)).norm() < 1e-14);
            }
        }
    }
}

#[test]
fn empty_filling_has_no_moments() {
    for a in -3..=3 {
        assert_eq!(moments_piecewise(&[], a), Complex64::new(0.0, 0.0));
    }
}

#[test]
fn trajectories_reach_the_special_state_at_half() {
    for g in [traj1_filling(0.5), traj2_filling(0.5)] {
        let p = MomentProvider::Filling(g);
        for a in -12..=12 {
            assert!((p.moment(a) - moments_threeblock(-1.0, a)).norm() < 1e-14, "a = {a}");
        }
    }
}

#[test]
fn trajectories_start_at_the_pseudo_vacuum() {
    for g in [traj1_filling(0.0), traj2_filling(0.0)] {
        let p = MomentProvider::Filling(g);
        for a in -6..=6 {
            assert!((p.moment(a) - moments_standard(-1.0, a)).norm() < 1e-14);
        }
    }
}

#[test]
fn special_state_closed_form() {
    for b in 0..6i64 {
        let want = -2.0 * if b % 2 == 0 { 1.0 } else { -1.0 } / (PI * (2 * b + 1) as f64);
        assert!((moments_threeblock(-1.0, 2 * b + 1).re - want).abs() < 1e-15);
        if b > 0 {
            assert!(moments_threeblock(-1.0, 2 * b).norm() < 1e-15);
        }
    }
}

#[test]
fn finite_size_sums_converge_to_moments() {
    for &length in &[48usize, 96, 192] {
        for cfg in named(0.25) {
            let numbers = bethe_numbers_for(&cfg, length).unwrap();
            assert_eq!(numbers.len() * 4, length);
            assert!(numbers
                .iter()
                .all(|&i| -(length as f64) / 2.0 < i && i <= length as f64 / 2.0));
            let p = MomentProvider::Filling(cfg.clone());
            for a in 0..=5i64 {
                let sum: Complex64 = numbers
                    .iter()
                    .map(|&i| Complex64::from_polar(1.0, 2.0 * PI * a as f64 * i / length as f64))
                    .sum::<Complex64>()
                    / length as f64;
                assert!(
                    (sum - p.moment(a)).norm() <= 10.0 / length as f64,
                    "{cfg:?} L={length} a={a}"
                );
            }
        }
    }
}

#[test]
fn three_block_sizes() {
    let numbers = bethe_numbers_for(&FillingConfig::three_block(0.25), 240).unwrap();
    assert_eq!(numbers.len(), 60);
    let centre = numbers.iter().filter(|i| i.abs() < 30.0).count();
    let right = numbers.iter().filter(|&&i| i > 30.0).count();
    let left = numbers.iter().filter(|&&i| i < -30.0).count();
    assert_eq!((centre, left, right), (30, 15, 15));
}

#[test]
fn acceptance_configurations_have_exact_sizes() {
    for (cfg, l) in [
        (FillingConfig::standard(0.25), 200),
        (FillingConfig::standard(0.75), 100),
        (FillingConfig::edge_split(0.25), 240),
        (FillingConfig::edge_split(0.5), 144),
        (FillingConfig::three_block(0.25), 240),
        (FillingConfig::three_block(0.5), 240),
    ] {
        let numbers = bethe_numbers_for(&cfg, l).unwrap();
        assert_eq!(numbers.len() as f64, cfg.m * l as f64);
        let mut symmetric: Vec<f64> = numbers.iter().map(|x| -x).collect();
        symmetric.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(numbers, symmetric, "{cfg:?}");
    }
}

proptest! {
    #[test]
    fn weight_one_moments_are_bounded(m in 0.01f64..0.99, a in -20i64..20, which in 0usize..3) {
        let p = MomentProvider::Filling(named(m)[which].clone());
        prop_assert!((p.density().re - m).abs() < 1e-15);
        prop_assert!(p.moment(a).norm() <= m + 1e-14);
    }

    #[test]
    fn real_symmetric_fillings_have_even_moments(m in 0.01f64..0.99, a in 1i64..20, which in 0usize..3) {
        let p = MomentProvider::Filling(named(m)[which].clone());
        prop_assert!((p.moment(a) - p.moment(-a)).norm() < 1e-14);
    }
}
