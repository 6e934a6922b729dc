//! Typically real functions: Chebyshev coefficient machinery, atomic
//! generating measures on [-1, 1], two-atom boundary families, coefficient
//! regions of variability, and the closed-form determinant objectives used by
//! the extremal searches.
//!
//! A typically real function is generated by a probability measure μ on
//! [-1, 1] against the kernel `k(z,t) = z/(1 - 2tz + z²)`, whose Taylor
//! coefficients are the Chebyshev polynomials of the second kind:
//! aₙ = ∫ U_{n-1}(t) dμ(t).

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{convex_hull, polygon_contains};
use crate::scalar::{int, real, Scalar};
use crate::series::TaylorSeries;

/// Chebyshev polynomial of the second kind, Uₖ(t), by the three-term
/// recurrence U₀ = 1, U₁ = 2t, U_{k+1} = 2t·Uₖ − U_{k−1}.
pub fn chebyshev_u<F: Scalar>(k: usize, t: F) -> Result<F> {
    if t < -F::one() || t > F::one() {
        return Err(Error::DomainError {
            value: t.to_f64().unwrap_or(f64::NAN),
            lower: -1.0,
            upper: 1.0,
        });
    }
    let two_t = t + t;
    let mut prev = F::one();
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = two_t;
    for _ in 1..k {
        let next = two_t * cur - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Finitely supported probability measure on [-1, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct RobertsonMeasure<F> {
    atoms: Vec<(F, F)>, // (weight, t)
}

impl<F: Scalar> RobertsonMeasure<F> {
    pub fn new(atoms: Vec<(F, F)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("measure needs at least one atom".into()));
        }
        let mut total = F::zero();
        for &(w, t) in &atoms {
            if !(w.is_finite() && t.is_finite()) {
                return Err(Error::InvalidMeasure("non-finite atom".into()));
            }
            if w < F::zero() {
                return Err(Error::InvalidMeasure("negative weight".into()));
            }
            if t < -F::one() || t > F::one() {
                return Err(Error::InvalidMeasure("support point outside [-1, 1]".into()));
            }
            total += w;
        }
        if (total - F::one()).abs() > real(1e-12) {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(Self { atoms })
    }

    /// Point mass at `t`.
    pub fn point_mass(t: F) -> Result<Self> {
        Self::new(vec![(F::one(), t)])
    }

    pub fn atoms(&self) -> &[(F, F)] {
        &self.atoms
    }
}

/// Taylor coefficients aₙ = Σⱼ wⱼ U_{n-1}(tⱼ) of the generated typically real
/// function. All coefficients are real.
pub fn typically_real_coeffs<F: Scalar>(m: &RobertsonMeasure<F>, order: usize) -> TaylorSeries<F> {
    TaylorSeries::from_fn(order, |n| {
        let mut s = F::zero();
        for &(w, t) in m.atoms() {
            s += w * chebyshev_u(n - 1, t).expect("atom support validated");
        }
        Complex::new(s, F::zero())
    })
}

/// The two-atom family `α·k(z,t₁) + (1-α)·k(z,t₂)`; by convexity these sweep
/// every boundary case needed for the coefficient-region extremal problems.
pub fn two_atom_family<F: Scalar>(alpha: F, t1: F, t2: F, order: usize) -> Result<TaylorSeries<F>> {
    if alpha < F::zero() || alpha > F::one() {
        return Err(Error::ParamOutOfRange(format!(
            "alpha = {alpha} outside [0, 1]"
        )));
    }
    for t in [t1, t2] {
        if t < -F::one() || t > F::one() {
            return Err(Error::ParamOutOfRange(format!(
                "support point {t} outside [-1, 1]"
            )));
        }
    }
    // normalize order so the stored measure always has t1 <= t2
    let (alpha, t1, t2) = if t1 <= t2 {
        (alpha, t1, t2)
    } else {
        (F::one() - alpha, t2, t1)
    };
    let m = RobertsonMeasure::new(vec![(alpha, t1), (F::one() - alpha, t2)])?;
    Ok(typically_real_coeffs(&m, order))
}

fn check_unit_interval<F: Scalar>(name: &str, x: F, lo: f64, hi: f64) -> Result<()> {
    if x < real(lo) || x > real(hi) {
        return Err(Error::ParamOutOfRange(format!(
            "{name} = {x} outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// T₂(2) along the single-atom curve k(z,t): `-16t⁴ + 12t² - 1`.
pub fn t22_on_curve<F: Scalar>(t: F) -> Result<F> {
    check_unit_interval("t", t, -1.0, 1.0)?;
    let t2 = t * t;
    Ok(-real::<F>(16.0) * t2 * t2 + real::<F>(12.0) * t2 - F::one())
}

/// T₂(2) along the endpoint blend F(z,α,1,-1): `(2-4α)² - 9`.
pub fn t22_on_segment<F: Scalar>(alpha: F) -> Result<F> {
    check_unit_interval("alpha", alpha, 0.0, 1.0)?;
    let s = real::<F>(2.0) - real::<F>(4.0) * alpha;
    Ok(s * s - real::<F>(9.0))
}

/// T₂(3) along the family F(z,α,t,-1):
/// `(4αt² - 4α + 3)² - (4α + 8αt³ - 4αt - 4)²`.
pub fn t23_on_lower_family<F: Scalar>(alpha: F, t: F) -> Result<F> {
    check_unit_interval("alpha", alpha, 0.0, 1.0)?;
    check_unit_interval("t", t, -1.0, 1.0)?;
    let four = real::<F>(4.0);
    let eight = real::<F>(8.0);
    let a3 = four * alpha * t * t - four * alpha + real::<F>(3.0);
    let a4 = four * alpha + eight * alpha * t * t * t - four * alpha * t - four;
    Ok(a3 * a3 - a4 * a4)
}

/// T₃(1) along the single-atom curve k(z,t): `8t²(2t² - 1)`.
pub fn t31_on_curve<F: Scalar>(t: F) -> Result<F> {
    check_unit_interval("t", t, -1.0, 1.0)?;
    let t2 = t * t;
    Ok(real::<F>(8.0) * t2 * (real::<F>(2.0) * t2 - F::one()))
}

/// T₃(1) along the endpoint blend F(z,α,1,-1): `8(8α² - 8α + 1)`.
pub fn t31_on_segment<F: Scalar>(alpha: F) -> Result<F> {
    check_unit_interval("alpha", alpha, 0.0, 1.0)?;
    let eight = real::<F>(8.0);
    Ok(eight * (eight * alpha * alpha - eight * alpha + F::one()))
}

/// Region of variability of a coefficient pair over the typically real class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffRegion {
    /// (a₂, a₃)
    A23,
    /// (a₃, a₄)
    A34,
}

impl CoeffRegion {
    pub fn from_id(id: &str) -> Result<Self> {
        match id.to_ascii_lowercase().as_str() {
            "a23" | "a2,3" | "2,3" => Ok(Self::A23),
            "a34" | "a3,4" | "3,4" => Ok(Self::A34),
            other => Err(Error::UnknownRegionId(other.to_string())),
        }
    }

    /// Coefficient indices (n, m) of the tracked pair.
    pub fn indices(&self) -> (usize, usize) {
        match self {
            Self::A23 => (2, 3),
            Self::A34 => (3, 4),
        }
    }
}

/// Convex polygon approximating the closed convex hull of
/// `t ↦ (U_{n-1}(t), U_{m-1}(t))`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RegionHull<F> {
    pub n: usize,
    pub m: usize,
    /// Counterclockwise vertex list. Two vertices signal a degenerate
    /// (segment) region.
    pub vertices: Vec<[F; 2]>,
    /// Largest midpoint-vs-chord deviation observed between consecutive curve
    /// samples. The polygon is inscribed in the true region and under-covers
    /// it by at most this distance; widen containment tolerances accordingly
    /// when the hull was built from a coarse sweep.
    pub sample_gap: F,
}

impl<F: Scalar> RegionHull<F> {
    /// `true` iff the point lies in the polygon or within `tol` of it.
    pub fn contains(&self, point: [F; 2], tol: F) -> bool {
        polygon_contains(&self.vertices, point, tol)
    }
}

/// Sample the coefficient curve on `samples` uniform points of [-1, 1]
/// (endpoints always included) and take the convex hull.
///
/// The polygon is inscribed in the true region; the gap to the exact hull
/// shrinks like (2/samples)² times the curvature of the coefficient curve, so
/// pick `samples` to match the containment tolerance in use.
pub fn region_hull<F: Scalar>(n: usize, m: usize, samples: usize) -> Result<RegionHull<F>> {
    if samples < 64 {
        return Err(Error::ParamOutOfRange(format!(
            "hull needs at least 64 curve samples, got {samples}"
        )));
    }
    if n < 1 || m < 1 {
        return Err(Error::ParamOutOfRange(
            "coefficient indices start at 1".into(),
        ));
    }
    let step = real::<F>(2.0) / int::<F>(samples - 1);
    let mut points = Vec::with_capacity(samples);
    for i in 0..samples {
        let t = (-F::one() + step * int::<F>(i)).min(F::one());
        points.push([chebyshev_u(n - 1, t)?, chebyshev_u(m - 1, t)?]);
    }
    let mut sample_gap = F::zero();
    for w in points.windows(3) {
        let dx = (w[0][0] + w[2][0]) / real::<F>(2.0) - w[1][0];
        let dy = (w[0][1] + w[2][1]) / real::<F>(2.0) - w[1][1];
        sample_gap = sample_gap.max((dx * dx + dy * dy).sqrt());
    }
    Ok(RegionHull {
        n,
        m,
        vertices: convex_hull(&points, real(1e-10)),
        sample_gap,
    })
}

/// A boundary-family sample: the generating parameters and the resulting
/// coefficient pair.
#[derive(Clone, Debug)]
pub struct BoundaryPoint<F> {
    pub family: &'static str,
    pub params: Vec<F>,
    pub point: [F; 2],
}

/// Sweep the boundary families of a coefficient region on a uniform parameter
/// grid (`grid` points per parameter).
///
/// * `A23`: the curve k(z,t) and the blend F(z,α,1,-1);
/// * `A34`: the two-parameter families F(z,α,t,-1) and F(z,α,t,1).
pub fn boundary_family_points<F: Scalar>(
    region: CoeffRegion,
    grid: usize,
) -> Result<Vec<BoundaryPoint<F>>> {
    if grid < 2 {
        return Err(Error::ParamOutOfRange("grid needs at least 2 points".into()));
    }
    let (n, m) = region.indices();
    let order = m;
    let steps = |lo: f64, hi: f64| -> Vec<F> {
        (0..grid)
            .map(|i| real::<F>(lo) + (real::<F>(hi) - real::<F>(lo)) * int::<F>(i) / int::<F>(grid - 1))
            .collect()
    };
    let mut out = Vec::new();
    match region {
        CoeffRegion::A23 => {
            for t in steps(-1.0, 1.0) {
                let f = typically_real_coeffs(&RobertsonMeasure::point_mass(t)?, order);
                out.push(BoundaryPoint {
                    family: "curve",
                    params: vec![t],
                    point: [f.coeff(n).re, f.coeff(m).re],
                });
            }
            for alpha in steps(0.0, 1.0) {
                let f = two_atom_family(alpha, F::one(), -F::one(), order)?;
                out.push(BoundaryPoint {
                    family: "segment",
                    params: vec![alpha],
                    point: [f.coeff(n).re, f.coeff(m).re],
                });
            }
        }
        CoeffRegion::A34 => {
            for &(family, endpoint) in &[("lower", -1.0), ("upper", 1.0)] {
                for alpha in steps(0.0, 1.0) {
                    for t in steps(-1.0, 1.0) {
                        let f = two_atom_family(alpha, t, real::<F>(endpoint), order)?;
                        out.push(BoundaryPoint {
                            family,
                            params: vec![alpha, t],
                            point: [f.coeff(n).re, f.coeff(m).re],
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
