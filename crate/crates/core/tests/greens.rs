use std::f64::consts::PI;

use fracwave_core::field::GridField;
use fracwave_core::fracops::TimeMesh;
use fracwave_core::greens::{
    build_auxiliary, coupling_residuals, default_half_width, evolve_fractional_diffusion,
    fundamental_solution, solve_auxiliary, solve_sequential, solve_sequential_realspace,
    AuxiliaryData, SeqCauchyProblem,
};
use fracwave_core::regions::FracOrderPair;
use fracwave_core::specfun::reciprocal_gamma;
use proptest::prelude::*;

fn orders(a: f64, b: f64) -> FracOrderPair {
    FracOrderPair::new(a, b).unwrap()
}

fn gaussian_pair(half: f64, n: usize) -> (GridField, GridField) {
    let g = GridField::from_fn(-half, half, n, |z| (-z * z).exp()).unwrap();
    let gb = GridField::from_fn(-half, half, n, |z| -2.0 * z * (-z * z).exp()).unwrap();
    (g, gb)
}

fn discrete_delta(half: f64, n: usize) -> GridField {
    let dz = 2.0 * half / n as f64;
    GridField::from_fn(-half, half, n, |z| if z.abs() < 0.5 * dz { 1.0 / dz } else { 0.0 }).unwrap()
}

/// (L-infinity gap, gap restricted to |z| >= 1) between the grid solution
/// from a discrete delta and the sampled fundamental solution.
fn delta_gaps(f: &GridField, gamma: f64, t: f64) -> (f64, f64) {
    let mut all: f64 = 0.0;
    let mut away: f64 = 0.0;
    for (k, v) in f.values().iter().enumerate() {
        let z = f.z(k);
        let e = (v - fundamental_solution(gamma, 1.0, z, t).unwrap()).abs();
        all = all.max(e);
        if z.abs() >= 1.0 {
            away = away.max(e);
        }
    }
    (all, away)
}

#[test]
fn discrete_delta_reproduces_heat_kernel() {
    let g = discrete_delta(20.0, 512);
    let p = SeqCauchyProblem::new(orders(0.5, 0.5), 1.0, g.clone(), g.scaled(0.0)).unwrap();
    let f = solve_sequential(&p, 1.0).unwrap();
    let (all, _) = delta_gaps(&f, 1.0, 1.0);
    assert!(all < 1e-6, "{all:e}");
}

#[test]
fn discrete_delta_converges_for_fractional_orders() {
    // The kernel has a cusp at z = 0 for gamma != 1, so the grid value at
    // the origin converges at first order; away from it the error is tiny.
    for (a, b) in [(0.25, 0.25), (0.75, 0.75), (1.5, 0.3)] {
        let gamma = a + b;
        let run = |n: usize| {
            let g = discrete_delta(20.0, n);
            let p = SeqCauchyProblem::new(orders(a, b), 1.0, g.clone(), g.scaled(0.0)).unwrap();
            delta_gaps(&solve_sequential(&p, 1.0).unwrap(), gamma, 1.0)
        };
        let (coarse, _) = run(512);
        let (fine, away) = run(1024);
        assert!(coarse / fine > 1.8, "gamma {gamma}: {coarse:e} -> {fine:e}");
        assert!(away < 1e-6, "gamma {gamma}: {away:e}");
    }
}

#[test]
fn region_d_auxiliary_delta_matches_fundamental_solution() {
    let h = discrete_delta(20.0, 1024);
    let zero = h.scaled(0.0);
    let p = SeqCauchyProblem::new(orders(1.4, 0.3), 1.0, zero.clone(), zero.clone()).unwrap();
    let aux = AuxiliaryData {
        h,
        h_bar: zero,
        kappa: 1.0,
        residual: 0.0,
    };
    let phi = solve_auxiliary(&aux, &p, 1.0).unwrap();
    let (_, away) = delta_gaps(&phi, 1.7, 1.0);
    assert!(away < 1e-6, "{away:e}");
}

#[test]
fn gaussian_heat_evolution() {
    let g = GridField::from_fn(-20.0, 20.0, 256, |z| (-z * z).exp()).unwrap();
    let p = SeqCauchyProblem::new(orders(0.5, 0.5), 1.0, g.clone(), g.scaled(0.0)).unwrap();
    for t in [0.1, 0.5, 2.0] {
        let f = solve_sequential(&p, t).unwrap();
        let s = 1.0 + 4.0 * t;
        let exact = GridField::from_fn(-20.0, 20.0, 256, |z| (-z * z / s).exp() / s.sqrt()).unwrap();
        assert!(f.max_abs_diff(&exact).unwrap() < 1e-8);
    }
}

#[test]
fn zero_frequency_mass_law() {
    for (a, b) in [(0.3, 0.4), (0.7, 0.7), (1.3, 0.5), (0.4, 1.5)] {
        let g = GridField::from_fn(0.0, 4.0, 64, |z| 2.0 + (PI * z).cos()).unwrap();
        let gb = GridField::from_fn(0.0, 4.0, 64, |z| -0.7 + (PI * z / 2.0).sin()).unwrap();
        let p = SeqCauchyProblem::new(orders(a, b), 1.0, g, gb).unwrap();
        for t in [0.3f64, 1.0, 2.5] {
            let want = 2.0 - 0.7 * t.powf(b) * reciprocal_gamma(b + 1.0);
            let got = solve_sequential(&p, t).unwrap().mean();
            assert!((got - want).abs() < 1e-13, "({a},{b}) t={t}: {got} vs {want}");
        }
    }
}

#[test]
fn kappa_only_enters_the_auxiliary_field() {
    let (g, gb) = gaussian_pair(12.0, 128);
    let p = SeqCauchyProblem::new(orders(0.7, 0.7), 1.0, g, gb).unwrap();
    let f = solve_sequential(&p, 0.7).unwrap();
    let mut phis = Vec::new();
    for kappa in [0.5, 1.0, 2.0] {
        let aux = build_auxiliary(&p, kappa).unwrap();
        assert!(aux.residual < 1e-12);
        // f depends on (g, g_bar) only
        assert_eq!(solve_sequential(&p, 0.7).unwrap(), f);
        phis.push(solve_auxiliary(&aux, &p, 0.7).unwrap().scaled(1.0 / kappa));
    }
    // phi is linear in kappa
    assert!(phis[0].max_abs_diff(&phis[1]).unwrap() < 1e-14);
    assert!(phis[1].max_abs_diff(&phis[2]).unwrap() < 1e-14);
}

#[test]
fn semigroup_specialization_in_regions_a_and_d() {
    for (a, b) in [(0.3, 0.4), (0.45, 0.5), (1.3, 0.5), (1.6, 0.2)] {
        let (g, _) = gaussian_pair(15.0, 128);
        let p = SeqCauchyProblem::new(orders(a, b), 1.3, g.clone(), g.scaled(0.0)).unwrap();
        for t in [0.2, 1.0] {
            let f = solve_sequential(&p, t).unwrap();
            let u = evolve_fractional_diffusion(&g, a + b, 1.3, t).unwrap();
            assert!(f.max_abs_diff(&u).unwrap() < 1e-8, "({a},{b}) t={t}");
        }
    }
}

#[test]
fn coupling_residuals_shrink_at_the_predicted_rate() {
    for (a, b) in [(0.5, 0.3), (0.7, 0.7), (0.9, 0.6), (1.5, 0.4)] {
        let (g, gb) = gaussian_pair(10.0, 64);
        let p = SeqCauchyProblem::new(orders(a, b), 1.0, g, gb).unwrap();
        let aux = build_auxiliary(&p, 1.0).unwrap();
        let r = |k: usize| coupling_residuals(&p, &aux, &TimeMesh::new(1.0 / k as f64, k).unwrap(), 0.25).unwrap();
        let expected = 2f64.powf(2.0 - a.max(b)).min(2.0);
        let (mut prev, mut worst_ratio) = (r(32), f64::INFINITY);
        for k in [64, 128] {
            let cur = r(k);
            worst_ratio = worst_ratio
                .min(prev.first / cur.first)
                .min(prev.second / cur.second);
            prev = cur;
        }
        assert!(worst_ratio >= 0.85 * expected, "({a},{b}): ratio {worst_ratio}");
        // residual <= C dt^(2 - max(alpha, beta)) at dt = 1/128
        let bound = 2.0 * 128f64.powf(a.max(b) - 2.0);
        assert!(prev.first < bound && prev.second < bound, "({a},{b}): {prev:?}");
    }
}

#[test]
fn real_space_route_matches_spectral_route() {
    let half = default_half_width(1.4, 1.0, 0.5);
    let (g, gb) = gaussian_pair(half, 512);
    let p = SeqCauchyProblem::new(orders(0.7, 0.7), 1.0, g, gb).unwrap();
    let a = solve_sequential(&p, 0.5).unwrap();
    let b = solve_sequential_realspace(&p, 0.5).unwrap();
    assert!(a.max_abs_diff(&b).unwrap() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fundamental_solution_is_even_and_positive_subdiffusive(
        gamma in 0.1f64..1.0,
        z in 0.0f64..6.0,
        t in 0.1f64..3.0,
    ) {
        let a = fundamental_solution(gamma, 1.0, z, t).unwrap();
        let b = fundamental_solution(gamma, 1.0, -z, t).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a >= 0.0);
    }

    #[test]
    fn solution_is_linear_in_the_data(c in -3.0f64..3.0, t in 0.0f64..2.0) {
        let (g, gb) = gaussian_pair(10.0, 32);
        let o = orders(0.6, 0.7);
        let p = SeqCauchyProblem::new(o, 1.0, g.clone(), gb.clone()).unwrap();
        let q = SeqCauchyProblem::new(o, 1.0, g.scaled(c), gb.scaled(c)).unwrap();
        let f = solve_sequential(&p, t).unwrap().scaled(c);
        let h = solve_sequential(&q, t).unwrap();
        prop_assert!(f.max_abs_diff(&h).unwrap() <= 1e-14 * c.abs().max(1.0));
    }
}
