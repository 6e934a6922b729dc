//! Executable checkers for the classical coefficient inequalities the sharp
//! Toeplitz bounds rest on. Each oracle returns a [`BoundCheck`] carrying the
//! two sides of the inequality; `slack() = rhs - lhs` must be nonnegative (up
//! to tolerance) for every valid class member, and hits zero at the known
//! equality witnesses.

use num_complex::Complex;

use crate::classes::FunctionSpec;
use crate::error::{Error, Result};
use crate::scalar::{int, real, Scalar};
use crate::series::{TaylorSeries, UnitSeries};

/// One evaluated inequality: `lhs ≤ rhs` is the claim.
#[derive(Clone, Debug)]
pub struct BoundCheck<F> {
    /// Short name of the inequality being checked.
    pub rule: &'static str,
    pub lhs: F,
    pub rhs: F,
    /// The generating data of the function the check ran on, when available;
    /// serializing it makes near-extremal samples reproducible.
    pub witness: Option<FunctionSpec<F>>,
}

impl<F: Scalar> BoundCheck<F> {
    pub fn slack(&self) -> F {
        self.rhs - self.lhs
    }

    pub fn holds(&self, tol: F) -> bool {
        self.slack() >= -tol
    }

    pub fn with_witness(mut self, witness: FunctionSpec<F>) -> Self {
        self.witness = Some(witness);
        self
    }
}

fn check<F: Scalar>(rule: &'static str, lhs: F, rhs: F) -> BoundCheck<F> {
    BoundCheck {
        rule,
        lhs,
        rhs,
        witness: None,
    }
}

fn require_unit_order<F: Scalar>(p: &UnitSeries<F>, needed: usize) -> Result<()> {
    if needed > p.order() {
        return Err(Error::InsufficientTruncation {
            needed,
            have: p.order(),
        });
    }
    Ok(())
}

fn require_taylor_order<F: Scalar>(f: &TaylorSeries<F>, needed: usize) -> Result<()> {
    if needed > f.order() {
        return Err(Error::InsufficientTruncation {
            needed,
            have: f.order(),
        });
    }
    Ok(())
}

/// |cₙ| ≤ 2 for Carathéodory coefficients.
pub fn caratheodory_bound<F: Scalar>(p: &UnitSeries<F>, n: usize) -> Result<BoundCheck<F>> {
    if n < 1 {
        return Err(Error::IndexOutOfRange { k: n, max: p.order() });
    }
    require_unit_order(p, n)?;
    Ok(check("caratheodory", p.coeff(n).norm(), real(2.0)))
}

/// |cₙ − μ·c_k·c_{n−k}| ≤ 2·max{1, |2μ−1|} for any complex μ and 1 ≤ k ≤ n−1.
pub fn efraimidis_bound<F: Scalar>(
    p: &UnitSeries<F>,
    mu: Complex<F>,
    n: usize,
    k: usize,
) -> Result<BoundCheck<F>> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::IndexOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    require_unit_order(p, n)?;
    let lhs = (p.coeff(n) - mu * p.coeff(k) * p.coeff(n - k)).norm();
    let two = real::<F>(2.0);
    let rhs = two * F::one().max((mu * two - Complex::new(F::one(), F::zero())).norm());
    Ok(check("coefficient_combination", lhs, rhs))
}

/// |b₂b₄ − b₃²| ≤ 1 for starlike coefficients (second Hankel determinant).
pub fn janteng_bound<F: Scalar>(g: &TaylorSeries<F>) -> Result<BoundCheck<F>> {
    require_taylor_order(g, 4)?;
    let lhs = (g.coeff(2) * g.coeff(4) - g.coeff(3) * g.coeff(3)).norm();
    Ok(check("second_hankel_starlike", lhs, F::one()))
}

/// |b₃ − λb₂²| ≤ max{1, |3 − 4λ|} for starlike coefficients and complex λ.
pub fn fekete_szego_starlike<F: Scalar>(
    g: &TaylorSeries<F>,
    lambda: Complex<F>,
) -> Result<BoundCheck<F>> {
    require_taylor_order(g, 3)?;
    let lhs = (g.coeff(3) - lambda * g.coeff(2) * g.coeff(2)).norm();
    let three = Complex::new(real::<F>(3.0), F::zero());
    let rhs = F::one().max((three - lambda * real::<F>(4.0)).norm());
    Ok(check("fekete_szego_starlike", lhs, rhs))
}

/// |λbₙb_m − b_{n+m−1}| ≤ λnm − (n+m−1) for starlike coefficients and real
/// λ ≥ 2(n+m−1)/(nm).
pub fn ma_bound<F: Scalar>(
    g: &TaylorSeries<F>,
    lambda: F,
    n: usize,
    m: usize,
) -> Result<BoundCheck<F>> {
    if n < 2 || m < 2 {
        return Err(Error::ParamOutOfRange("need n, m >= 2".into()));
    }
    let threshold = real::<F>(2.0) * int::<F>(n + m - 1) / (int::<F>(n) * int::<F>(m));
    if lambda < threshold - real(1e-12) {
        return Err(Error::LambdaBelowThreshold {
            lambda: lambda.to_f64().unwrap_or(f64::NAN),
            threshold: threshold.to_f64().unwrap_or(f64::NAN),
        });
    }
    require_taylor_order(g, n + m - 1)?;
    let lhs = (g.coeff(n) * g.coeff(m) * lambda - g.coeff(n + m - 1)).norm();
    let rhs = lambda * int::<F>(n) * int::<F>(m) - int::<F>(n + m - 1);
    Ok(check("product_vs_sum_starlike", lhs, rhs))
}

/// |a₂a₄ − 2a₃²| ≤ 21/2 for close-to-convex coefficients.
pub fn k_class_functional_bound<F: Scalar>(f: &TaylorSeries<F>) -> Result<BoundCheck<F>> {
    require_taylor_order(f, 4)?;
    let two = Complex::new(real::<F>(2.0), F::zero());
    let lhs = (f.coeff(2) * f.coeff(4) - two * f.coeff(3) * f.coeff(3)).norm();
    Ok(check("close_to_convex_a2a4", lhs, real(10.5)))
}
