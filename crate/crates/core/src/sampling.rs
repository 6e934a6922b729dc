//! Random generating data for the property sweeps and bound-respecting
//! samplers: atom angles uniform on [0, 2π), support points uniform on
//! [-1, 1], weights from a flat simplex draw.

use rand::Rng;

use crate::classes::{FunctionSpec, HerglotzAtoms};
use crate::scalar::{real, Scalar};
use crate::typically_real::RobertsonMeasure;

/// Flat (uniform) draw from the k-simplex via normalized Exp(1) variates.
pub fn simplex_weights<F: Scalar, R: Rng>(rng: &mut R, k: usize) -> Vec<F> {
    let draws: Vec<f64> = (0..k)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln().max(f64::MIN_POSITIVE))
        .collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|d| real(d / total)).collect()
}

/// Random circle measure with 1..=max_atoms atoms.
pub fn sample_herglotz<F: Scalar, R: Rng>(rng: &mut R, max_atoms: usize) -> HerglotzAtoms<F> {
    let k = rng.gen_range(1..=max_atoms.max(1));
    let weights = simplex_weights::<F, R>(rng, k);
    let atoms = weights
        .into_iter()
        .map(|w| (w, real(rng.gen_range(0.0..std::f64::consts::TAU))))
        .collect();
    HerglotzAtoms::new(atoms).expect("sampled measure is valid")
}

/// Random measure on [-1, 1] with 1..=max_atoms atoms.
pub fn sample_robertson<F: Scalar, R: Rng>(rng: &mut R, max_atoms: usize) -> RobertsonMeasure<F> {
    let k = rng.gen_range(1..=max_atoms.max(1));
    let weights = simplex_weights::<F, R>(rng, k);
    let atoms = weights
        .into_iter()
        .map(|w| (w, real(rng.gen_range(-1.0..=1.0))))
        .collect();
    RobertsonMeasure::new(atoms).expect("sampled measure is valid")
}

/// Random close-to-convex generating data: starlike generator atoms, a tilt
/// strictly inside (-π/2, π/2) and a Carathéodory factor.
pub fn sample_close_to_convex<F: Scalar, R: Rng>(rng: &mut R, max_atoms: usize) -> FunctionSpec<F> {
    let half_pi = std::f64::consts::FRAC_PI_2 - 1e-6;
    FunctionSpec::CloseToConvex {
        generator: sample_herglotz(rng, max_atoms),
        alpha: real(rng.gen_range(-half_pi..half_pi)),
        p: sample_herglotz(rng, max_atoms),
    }
}

/// Random bounded-turning generating data.
pub fn sample_bounded_turning<F: Scalar, R: Rng>(rng: &mut R, max_atoms: usize) -> FunctionSpec<F> {
    FunctionSpec::BoundedTurning(sample_herglotz(rng, max_atoms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weights_form_a_probability_vector() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = simplex_weights::<f64, _>(&mut rng, 4);
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(w.iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn sampled_specs_build() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let h = sample_herglotz::<f64, _>(&mut rng, 3);
            assert!(h.atoms().len() <= 3);
            let spec = sample_close_to_convex::<f64, _>(&mut rng, 3);
            assert!(spec.build(6).is_ok());
            let m = sample_robertson::<f64, _>(&mut rng, 3);
            assert!(m.atoms().iter().all(|&(_, t)| (-1.0..=1.0).contains(&t)));
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let draw = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample_herglotz::<f64, _>(&mut rng, 3)
        };
        assert_eq!(draw(42).atoms(), draw(42).atoms());
        assert_ne!(draw(42).atoms(), draw(43).atoms());
    }
}
