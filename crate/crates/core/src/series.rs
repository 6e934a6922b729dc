//! Truncated complex power-series arithmetic.
//!
//! Index conventions, fixed here once for the whole crate:
//!
//! * The raw helpers ([`mul`], [`div`], [`derivative`], [`z_derivative`],
//!   [`eval`]) take constant-first coefficient slices: `p[k]` is the
//!   coefficient of `z^k`.
//! * [`TaylorSeries`] stores a₁..a_N of `f(z) = a₁z + a₂z² + …` (the zero
//!   constant term is implied), so `coeffs()[k]` is `a_{k+1}`.
//! * [`UnitSeries`] stores c₀..c_N of `p(z) = 1 + c₁z + …` with c₀ = 1
//!   exactly.
//!
//! Everything is dense-vector arithmetic; the determinant and search layers
//! only ever consume a handful of leading coefficients, so no FFT or lazy
//! truncation management is attempted.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{int, real, Scalar};

/// Largest |z| accepted by [`eval`]. Keeps the dropped tail of a truncated
/// series controllable: with |aₙ| ≤ n·M the tail is below Σ_{n>N} n·M·0.95ⁿ.
pub const EVAL_RADIUS: f64 = 0.95;

/// Leading divisor coefficients with modulus below this are treated as zero.
pub const DIV_LEADING_EPS: f64 = 1e-14;

fn czero<F: Scalar>() -> Complex<F> {
    Complex::new(F::zero(), F::zero())
}

/// Cauchy product of `a` and `b`, truncated to `len` coefficients.
///
/// Inputs shorter than `len` are padded with zeros; the retained terms are the
/// exact convolution, with no aliasing from the dropped tail.
pub fn mul<F: Scalar>(a: &[Complex<F>], b: &[Complex<F>], len: usize) -> Vec<Complex<F>> {
    let mut out = vec![czero(); len];
    for (j, &aj) in a.iter().enumerate().take(len) {
        for (k, &bk) in b.iter().enumerate() {
            if j + k >= len {
                break;
            }
            out[j + k] += aj * bk;
        }
    }
    out
}

/// Power-series long division: the unique `q` with `mul(q, b) == a` through
/// `len` coefficients.
pub fn div<F: Scalar>(a: &[Complex<F>], b: &[Complex<F>], len: usize) -> Result<Vec<Complex<F>>> {
    let b0 = b.first().copied().unwrap_or_else(czero);
    if b0.norm() < real(DIV_LEADING_EPS) {
        return Err(Error::DivisionByZeroLeadingTerm {
            magnitude: b0.norm().to_f64().unwrap_or(0.0),
        });
    }
    let mut q = vec![czero::<F>(); len];
    for k in 0..len {
        let mut acc = a.get(k).copied().unwrap_or_else(czero);
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc / b0;
    }
    Ok(q)
}

/// Termwise derivative: returns the coefficients of `f'`.
pub fn derivative<F: Scalar>(a: &[Complex<F>]) -> Vec<Complex<F>> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * int::<F>(k))
        .collect()
}

/// Coefficients of `z·f'`: same length as the input, entry `k` is `k·a[k]`.
pub fn z_derivative<F: Scalar>(a: &[Complex<F>]) -> Vec<Complex<F>> {
    a.iter()
        .enumerate()
        .map(|(k, &c)| c * int::<F>(k))
        .collect()
}

/// Horner evaluation of the truncated polynomial at `z`, |z| ≤ 0.95.
pub fn eval<F: Scalar>(a: &[Complex<F>], z: Complex<F>) -> Result<Complex<F>> {
    let r = z.norm();
    if r > real(EVAL_RADIUS) {
        return Err(Error::EvalRadiusExceeded {
            radius: r.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut acc = czero();
    for &c in a.iter().rev() {
        acc = acc * z + c;
    }
    Ok(acc)
}

/// Taylor coefficients a₁..a_N of a normalized analytic function
/// `f(z) = a₁z + a₂z² + …` on the unit disk.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorSeries<F> {
    coeffs: Vec<Complex<F>>,
}

impl<F: Scalar> TaylorSeries<F> {
    /// Wrap a coefficient vector `[a₁, …, a_N]`. All entries must be finite.
    pub fn new(coeffs: Vec<Complex<F>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ParamOutOfRange("series needs at least a1".into()));
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::ParamOutOfRange(
                "non-finite Taylor coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Build from a closure giving aₙ for n = 1..=order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex<F>) -> Self {
        Self {
            coeffs: (1..=order).map(f).collect(),
        }
    }

    pub(crate) fn from_raw(coeffs: Vec<Complex<F>>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Truncation order N (number of stored coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// aₙ for 1 ≤ n ≤ N.
    pub fn coeff(&self, n: usize) -> Complex<F> {
        assert!(n >= 1 && n <= self.coeffs.len(), "coefficient index {n}");
        self.coeffs[n - 1]
    }

    /// The stored slice `[a₁, …, a_N]`.
    pub fn coeffs(&self) -> &[Complex<F>] {
        &self.coeffs
    }

    /// Constant-first polynomial coefficients `[0, a₁, …, a_N]`.
    pub fn to_poly(&self) -> Vec<Complex<F>> {
        let mut p = Vec::with_capacity(self.coeffs.len() + 1);
        p.push(czero());
        p.extend_from_slice(&self.coeffs);
        p
    }

    /// Coefficients of the rotation `e^{-iθ} f(e^{iθ} z)`: aₙ ↦ e^{i(n-1)θ}aₙ.
    pub fn rotated(&self, theta: F) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &a)| a * Complex::from_polar(F::one(), int::<F>(k) * theta))
                .collect(),
        }
    }

    /// Coefficient-wise complex conjugate.
    pub fn conjugated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Evaluate the truncated series at `z` (|z| ≤ 0.95).
    pub fn eval(&self, z: Complex<F>) -> Result<Complex<F>> {
        eval(&self.to_poly(), z)
    }
}

/// Coefficients c₀..c_N of a function `p(z) = 1 + c₁z + …` with positive real
/// part (c₀ = 1 exactly).
#[derive(Clone, Debug, PartialEq)]
pub struct UnitSeries<F> {
    coeffs: Vec<Complex<F>>,
}

impl<F: Scalar> UnitSeries<F> {
    /// Build from the tail `[c₁, …, c_N]`; c₀ = 1 is prepended.
    pub fn from_tail(tail: Vec<Complex<F>>) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(Complex::new(F::one(), F::zero()));
        coeffs.extend(tail);
        Self { coeffs }
    }

    /// Truncation order N (index of the last stored cₙ).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// cₙ for 0 ≤ n ≤ N.
    pub fn coeff(&self, n: usize) -> Complex<F> {
        assert!(n < self.coeffs.len(), "coefficient index {n}");
        self.coeffs[n]
    }

    /// The stored slice `[c₀, …, c_N]` (constant-first).
    pub fn coeffs(&self) -> &[Complex<F>] {
        &self.coeffs
    }

    /// Evaluate the truncated series at `z` (|z| ≤ 0.95).
    pub fn eval(&self, z: Complex<F>) -> Result<Complex<F>> {
        eval(&self.coeffs, z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn assert_close(a: C, b: C, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = vec![c(1.0, 0.0), c(1.0, 0.0)];
        let b = vec![c(1.0, 0.0), c(-1.0, 0.0)];
        let p = mul(&a, &b, 4);
        assert_eq!(p[0], c(1.0, 0.0));
        assert_eq!(p[1], c(0.0, 0.0));
        assert_eq!(p[2], c(-1.0, 0.0));
        assert_eq!(p[3], c(0.0, 0.0));
    }

    #[test]
    fn mul_koebe_from_geometric_square() {
        // z·(1-z)^{-2}: coefficient of z^n is n.
        let n = 16;
        let geom: Vec<C> = (0..n).map(|k| c((k + 1) as f64, 0.0)).collect(); // (1-z)^{-2}
        let z = vec![c(0.0, 0.0), c(1.0, 0.0)];
        let koebe = mul(&z, &geom, n);
        for (k, &v) in koebe.iter().enumerate() {
            assert_close(v, c(k as f64, 0.0), 1e-12);
        }
    }

    #[test]
    fn mul_half_plane_rotation_coeffs() {
        // (1+iz)·(1-iz)^{-1} has c_n = 2 i^n for n >= 1 (geometric expansion).
        let n = 12;
        let i = c(0.0, 1.0);
        let num = vec![c(1.0, 0.0), i];
        let den = vec![c(1.0, 0.0), -i];
        let inv_den = div(&[c(1.0, 0.0)], &den, n).unwrap();
        let p = mul(&num, &inv_den, n);
        assert_close(p[0], c(1.0, 0.0), 1e-14);
        for (k, &v) in p.iter().enumerate().skip(1) {
            assert_close(v, i.powu(k as u32) * 2.0, 1e-12);
        }
    }

    #[test]
    fn div_geometric_series() {
        let one = vec![c(1.0, 0.0)];
        let den = vec![c(1.0, 0.0), c(-1.0, 0.0)];
        let q = div(&one, &den, 10).unwrap();
        for &v in &q {
            assert_close(v, c(1.0, 0.0), 1e-14);
        }
    }

    #[test]
    fn div_starlike_generator_of_koebe() {
        // z k'(z) / k(z) = (1+z)/(1-z), so every c_n = 2.
        let n = 24;
        let koebe: Vec<C> = (0..=n).map(|k| c(k as f64, 0.0)).collect(); // [0,1,2,..]
        let zkp = z_derivative(&koebe);
        let p = div(&zkp[1..], &koebe[1..], n).unwrap(); // shift out the common z
        assert_close(p[0], c(1.0, 0.0), 1e-12);
        for &v in p.iter().skip(1) {
            assert_close(v, c(2.0, 0.0), 1e-10);
        }
    }

    #[test]
    fn div_rejects_vanishing_leading_term() {
        let a = vec![c(1.0, 0.0)];
        let b = vec![c(0.0, 0.0), c(1.0, 0.0)];
        match div(&a, &b, 4) {
            Err(Error::DivisionByZeroLeadingTerm { .. }) => {}
            other => panic!("expected leading-term error, got {other:?}"),
        }
    }

    #[test]
    fn derivative_basics() {
        // d/dz of z -> 1
        let f = vec![c(0.0, 0.0), c(1.0, 0.0)];
        assert_eq!(derivative(&f), vec![c(1.0, 0.0)]);
        // z f' of Koebe -> n^2 z^n
        let koebe: Vec<C> = (0..10).map(|k| c(k as f64, 0.0)).collect();
        let zd = z_derivative(&koebe);
        for (k, &v) in zd.iter().enumerate() {
            assert_close(v, c((k * k) as f64, 0.0), 1e-12);
        }
    }

    #[test]
    fn second_derivative_matches_closed_form() {
        // k'' = 2(z+2)/(1-z)^4; coefficient of z^m is (m+1)(m+2)^2.
        let n = 20;
        let koebe: Vec<C> = (0..=n).map(|k| c(k as f64, 0.0)).collect();
        let k2 = derivative(&derivative(&koebe));
        for (m, &v) in k2.iter().enumerate() {
            let expect = ((m + 1) * (m + 2) * (m + 2)) as f64;
            assert_close(v, c(expect, 0.0), 1e-9);
        }
    }

    #[test]
    fn eval_examples() {
        // f(z) = z at 0.5
        let f = vec![c(0.0, 0.0), c(1.0, 0.0)];
        assert_close(eval(&f, c(0.5, 0.0)).unwrap(), c(0.5, 0.0), 1e-15);

        // Koebe at 0.5 -> 0.5/0.25 = 2, truncation N = 64
        let koebe: Vec<C> = (0..=64).map(|k| c(k as f64, 0.0)).collect();
        assert_close(eval(&koebe, c(0.5, 0.0)).unwrap(), c(2.0, 0.0), 1e-6);

        // z/(1+z^2) at 0.3 -> 0.3/1.09
        let den = vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let q = div(&[c(0.0, 0.0), c(1.0, 0.0)], &den, 64).unwrap();
        assert_close(eval(&q, c(0.3, 0.0)).unwrap(), c(0.3 / 1.09, 0.0), 1e-12);
    }

    #[test]
    fn eval_radius_guard() {
        let f = vec![c(1.0, 0.0)];
        match eval(&f, c(0.96, 0.0)) {
            Err(Error::EvalRadiusExceeded { .. }) => {}
            other => panic!("expected radius error, got {other:?}"),
        }
    }

    #[test]
    fn taylor_series_accessors() {
        let f = TaylorSeries::from_fn(5, |n| c(n as f64, 0.0));
        assert_eq!(f.order(), 5);
        assert_eq!(f.coeff(1), c(1.0, 0.0));
        assert_eq!(f.coeff(5), c(5.0, 0.0));
        assert_eq!(f.to_poly()[0], c(0.0, 0.0));
        assert_eq!(f.to_poly()[3], c(3.0, 0.0));
    }

    #[test]
    fn rotation_phases() {
        let f = TaylorSeries::from_fn(4, |n| c(n as f64, 0.0));
        let g = f.rotated(std::f64::consts::FRAC_PI_2);
        // a_n e^{i(n-1)pi/2}: 1, 2i, -3, -4i
        assert_close(g.coeff(1), c(1.0, 0.0), 1e-14);
        assert_close(g.coeff(2), c(0.0, 2.0), 1e-14);
        assert_close(g.coeff(3), c(-3.0, 0.0), 1e-14);
        assert_close(g.coeff(4), c(0.0, -4.0), 1e-14);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(TaylorSeries::new(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(TaylorSeries::<f64>::new(vec![]).is_err());
    }

    #[test]
    fn generic_over_f32() {
        let a = vec![Complex::new(1.0f32, 0.0), Complex::new(1.0, 0.0)];
        let p = mul(&a, &a, 3);
        assert_eq!(p[1], Complex::new(2.0f32, 0.0));
    }
}
