//! Property suites tying the coefficient constructors, the determinant
//! machinery and the classical inequalities together on randomized inputs.

use std::sync::OnceLock;

use num_complex::Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toeplitz_core::classes::{
    caratheodory_coeffs, convex_from_caratheodory, starlike_from_caratheodory, HerglotzAtoms,
};
use toeplitz_core::determinants::{t2_closed, t3_closed, toeplitz_det};
use toeplitz_core::lemmas::{janteng_bound, k_class_functional_bound, ma_bound};
use toeplitz_core::sampling::{sample_close_to_convex, sample_herglotz, sample_robertson};
use toeplitz_core::series::{self, TaylorSeries};
use toeplitz_core::typically_real::{
    chebyshev_u, region_hull, t23_on_lower_family, t31_on_curve, t31_on_segment, two_atom_family,
    typically_real_coeffs, RegionHull, RobertsonMeasure,
};

type C = Complex<f64>;

fn cvec(parts: &[(f64, f64)]) -> Vec<C> {
    parts.iter().map(|&(re, im)| Complex::new(re, im)).collect()
}

fn max_diff(a: &[C], b: &[C]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn coeff_strategy(max_len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..max_len)
}

fn atoms_strategy(max_atoms: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.05..1.0f64, 0.0..std::f64::consts::TAU), 1..=max_atoms).prop_map(
        |raw| {
            let total: f64 = raw.iter().map(|(w, _)| w).sum();
            raw.into_iter().map(|(w, th)| (w / total, th)).collect()
        },
    )
}

proptest! {
    #[test]
    fn mul_is_commutative_and_associative(
        a in coeff_strategy(64),
        b in coeff_strategy(64),
        c in coeff_strategy(64),
    ) {
        let (a, b, c) = (cvec(&a), cvec(&b), cvec(&c));
        let n = 64;
        let ab = series::mul(&a, &b, n);
        let ba = series::mul(&b, &a, n);
        prop_assert!(max_diff(&ab, &ba) <= 1e-12);
        let ab_c = series::mul(&ab, &c, n);
        let bc = series::mul(&b, &c, n);
        let a_bc = series::mul(&a, &bc, n);
        prop_assert!(max_diff(&ab_c, &a_bc) <= 1e-12);
    }

    #[test]
    fn div_round_trips_mul(
        a in coeff_strategy(16),
        b_tail in prop::collection::vec((-0.9..0.9f64, -0.9..0.9f64), 0..15),
    ) {
        // divisor with unit leading term
        let mut b = vec![Complex::new(1.0, 0.0)];
        b.extend(cvec(&b_tail));
        let a = cvec(&a);
        let n = 16;
        let prod = series::mul(&a, &b, n);
        let back = series::div(&prod, &b, n).unwrap();
        let a_padded: Vec<C> = (0..n)
            .map(|k| a.get(k).copied().unwrap_or(Complex::new(0.0, 0.0)))
            .collect();
        prop_assert!(max_diff(&back, &a_padded) <= 1e-12);
    }

    #[test]
    fn eval_of_product_is_product_of_evals(
        a in coeff_strategy(16),
        b in coeff_strategy(16),
        re in -0.35..0.35f64,
        im in -0.35..0.35f64,
    ) {
        let (a, b) = (cvec(&a), cvec(&b));
        let z = Complex::new(re, im); // |z| <= 0.5
        let full = series::mul(&a, &b, a.len() + b.len() - 1);
        let lhs = series::eval(&full, z).unwrap();
        let rhs = series::eval(&a, z).unwrap() * series::eval(&b, z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn rotation_covariance_of_starlike_members(
        atoms in atoms_strategy(4),
        delta in 0.0..std::f64::consts::TAU,
    ) {
        let h = HerglotzAtoms::new(atoms).unwrap();
        let direct = starlike_from_caratheodory(&h.rotated(delta), 12);
        let rotated = starlike_from_caratheodory(&h, 12).rotated(delta);
        prop_assert!(max_diff(direct.coeffs(), rotated.coeffs()) <= 1e-12);
    }

    #[test]
    fn alexander_duality(atoms in atoms_strategy(4)) {
        let h = HerglotzAtoms::new(atoms).unwrap();
        let convex = convex_from_caratheodory(&h, 12);
        let starlike = starlike_from_caratheodory(&h, 12);
        let zfp: Vec<C> = convex
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, &a)| a * (k as f64 + 1.0))
            .collect();
        prop_assert!(max_diff(&zfp, starlike.coeffs()) <= 1e-12);
    }

    #[test]
    fn starlike_coefficient_growth(atoms in atoms_strategy(4)) {
        let h = HerglotzAtoms::new(atoms).unwrap();
        let f = starlike_from_caratheodory(&h, 16);
        for n in 1..=16 {
            prop_assert!(f.coeff(n).norm() <= n as f64 + 1e-9);
        }
    }

    #[test]
    fn conjugate_pair_atoms_give_real_coefficients(atoms in atoms_strategy(3)) {
        let mut paired = Vec::new();
        for &(w, th) in &atoms {
            paired.push((w / 2.0, th));
            paired.push((w / 2.0, -th));
        }
        let h = HerglotzAtoms::new(paired).unwrap();
        let f = starlike_from_caratheodory(&h, 12);
        for n in 1..=12 {
            prop_assert!(f.coeff(n).im.abs() <= 1e-12);
        }
    }

    #[test]
    fn closed_forms_match_generic_determinant(a in coeff_strategy(8)) {
        let mut coeffs = cvec(&a);
        coeffs.resize(8, Complex::new(0.3, -0.1));
        let f = TaylorSeries::new(coeffs).unwrap();
        for n in 1..=6 {
            let d2 = toeplitz_det(&f, n, 2).unwrap().value;
            prop_assert!((d2 - t2_closed(&f, n).unwrap()).norm() <= 1e-12);
        }
        for n in 1..=6 {
            let d3 = toeplitz_det(&f, n, 3).unwrap().value;
            prop_assert!((d3 - t3_closed(&f, n).unwrap()).norm() <= 1e-12);
        }
    }

    #[test]
    fn toeplitz_conjugation_and_reality(a in coeff_strategy(8)) {
        let mut coeffs = cvec(&a);
        coeffs.resize(8, Complex::new(-0.2, 0.4));
        let f = TaylorSeries::new(coeffs).unwrap();
        for q in 1..=4 {
            let d = toeplitz_det(&f, 2, q).unwrap().value;
            let dc = toeplitz_det(&f.conjugated(), 2, q).unwrap().value;
            prop_assert!((dc - d.conj()).norm() <= 1e-12);
        }
        // all-real coefficients give real determinants
        let real_f = TaylorSeries::from_fn(8, |n| Complex::new(f.coeff(n).re, 0.0));
        for q in 1..=4 {
            prop_assert!(toeplitz_det(&real_f, 2, q).unwrap().value.im.abs() <= 1e-12);
        }
    }

    #[test]
    fn chebyshev_stays_below_linear_bound(t in -1.0..=1.0f64, n in 1usize..24) {
        prop_assert!(chebyshev_u(n - 1, t).unwrap().abs() <= n as f64 + 1e-12);
    }

    #[test]
    fn typically_real_objectives_match_determinants(
        alpha in 0.0..=1.0f64,
        t in -1.0..=1.0f64,
    ) {
        let lower = two_atom_family(alpha, t, -1.0, 4).unwrap();
        prop_assert!(
            (t2_closed(&lower, 3).unwrap().re - t23_on_lower_family(alpha, t).unwrap()).abs()
                <= 1e-12
        );
        let curve = typically_real_coeffs(&RobertsonMeasure::point_mass(t).unwrap(), 4);
        let t31 = 1.0 - 2.0 * curve.coeff(2).norm_sqr() // a2 is real here
            + 2.0 * curve.coeff(2).re * curve.coeff(2).re * curve.coeff(3).re
            - curve.coeff(3).re * curve.coeff(3).re;
        prop_assert!((t31 - t31_on_curve(t).unwrap()).abs() <= 1e-12);
        let blend = two_atom_family(alpha, 1.0, -1.0, 4).unwrap();
        let det = toeplitz_det(&blend, 1, 3).unwrap().value.re;
        prop_assert!((det - t31_on_segment(alpha).unwrap()).abs() <= 1e-12);
    }
}

fn hull23() -> &'static RegionHull<f64> {
    static HULL: OnceLock<RegionHull<f64>> = OnceLock::new();
    HULL.get_or_init(|| region_hull(2, 3, 200_001).unwrap())
}

fn hull34() -> &'static RegionHull<f64> {
    static HULL: OnceLock<RegionHull<f64>> = OnceLock::new();
    HULL.get_or_init(|| region_hull(3, 4, 400_001).unwrap())
}

#[test]
fn random_measures_stay_in_coefficient_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_913);
    for _ in 0..2_000 {
        let m = sample_robertson::<f64, _>(&mut rng, 3);
        let f = typically_real_coeffs(&m, 4);
        let p23 = [f.coeff(2).re, f.coeff(3).re];
        let p34 = [f.coeff(3).re, f.coeff(4).re];
        assert!(hull23().contains(p23, 1e-9), "escape at {p23:?}");
        assert!(hull34().contains(p34, 1e-9), "escape at {p34:?}");
    }
}

#[test]
fn t2_stays_in_typically_real_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(7_771);
    for _ in 0..10_000 {
        let m = sample_robertson::<f64, _>(&mut rng, 3);
        let f = typically_real_coeffs(&m, 8);
        for n in 2..=6usize {
            let t2 = t2_closed(&f, n).unwrap().re;
            assert!(t2 <= (n * n) as f64 + 1e-9);
            assert!(t2 >= -(((n + 1) * (n + 1)) as f64) - 1e-9);
        }
    }
}

#[test]
fn sampled_members_respect_the_classical_inequalities() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..2_000 {
        let h = sample_herglotz::<f64, _>(&mut rng, 3);
        let g = starlike_from_caratheodory(&h, 6);
        assert!(janteng_bound(&g).unwrap().holds(1e-9));
        assert!(ma_bound(&g, 23.0 / 9.0, 2, 3).unwrap().holds(1e-9));

        let spec = sample_close_to_convex::<f64, _>(&mut rng, 3);
        let f = spec.build(6).unwrap();
        assert!(k_class_functional_bound(&f).unwrap().holds(1e-9));
    }
}

#[test]
fn caratheodory_coefficients_stay_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    for _ in 0..5_000 {
        let h = sample_herglotz::<f64, _>(&mut rng, 4);
        let p = caratheodory_coeffs(&h, 6);
        for n in 1..=6 {
            assert!(p.coeff(n).norm() <= 2.0 + 1e-12);
        }
    }
}
