//! Constructors for the classical subfamilies of normalized univalent
//! functions: starlike, convex, bounded-turning and close-to-convex members
//! are generated from atomic Herglotz measures on the circle, typically real
//! members from atomic measures on [-1, 1], plus a registry of closed-form
//! extremal functions.
//!
//! Every constructor realizes the defining differential relation of its class
//! as a coefficient recursion against the Carathéodory series
//! `p(z) = Σⱼ wⱼ (1 + e^{iθⱼ}z)/(1 − e^{iθⱼ}z)`, whose coefficients are
//! `cₙ = 2 Σⱼ wⱼ e^{inθⱼ}`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, real, Scalar};
use crate::series::{self, TaylorSeries, UnitSeries};
use crate::typically_real::{typically_real_coeffs, RobertsonMeasure};

/// Finitely supported probability measure on the unit circle, encoding a
/// Carathéodory function as a convex combination of Möbius kernels.
#[derive(Clone, Debug, PartialEq)]
pub struct HerglotzAtoms<F> {
    atoms: Vec<(F, F)>, // (weight, angle)
}

impl<F: Scalar> HerglotzAtoms<F> {
    /// Validate weights (nonnegative, summing to 1 within 1e-12) and normalize
    /// angles into [0, 2π).
    pub fn new(atoms: Vec<(F, F)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("measure needs at least one atom".into()));
        }
        let tau = F::PI() + F::PI();
        let mut total = F::zero();
        let mut normalized = Vec::with_capacity(atoms.len());
        for (w, theta) in atoms {
            if !(w.is_finite() && theta.is_finite()) {
                return Err(Error::InvalidMeasure("non-finite atom".into()));
            }
            if w < F::zero() {
                return Err(Error::InvalidMeasure("negative weight".into()));
            }
            total += w;
            let mut th = theta % tau;
            if th < F::zero() {
                th += tau;
            }
            normalized.push((w, th));
        }
        if (total - F::one()).abs() > real(1e-12) {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(Self { atoms: normalized })
    }

    /// Point mass at angle `theta`.
    pub fn single(theta: F) -> Self {
        Self::new(vec![(F::one(), theta)]).expect("point mass is always valid")
    }

    pub fn atoms(&self) -> &[(F, F)] {
        &self.atoms
    }

    /// Shift every atom angle by `delta` (rotates the generated function).
    pub fn rotated(&self, delta: F) -> Self {
        Self::new(self.atoms.iter().map(|&(w, th)| (w, th + delta)).collect())
            .expect("rotation preserves validity")
    }

    /// Reflect atoms across the real axis (conjugates the generated function).
    pub fn conjugated(&self) -> Self {
        Self::new(self.atoms.iter().map(|&(w, th)| (w, -th)).collect())
            .expect("conjugation preserves validity")
    }

    /// Minimum of Re p over a coarse disk grid; positive for any valid
    /// measure, exposed as a sanity probe.
    pub fn min_re_on_grid(&self) -> F {
        let p = caratheodory_coeffs(self, 64);
        let mut min = F::infinity();
        for &r in &[0.3, 0.6, 0.9] {
            for k in 0..64 {
                let phi = int::<F>(k) * F::PI() / real::<F>(32.0);
                let z = Complex::from_polar(real::<F>(r), phi);
                let v = p.eval(z).expect("grid radius below limit");
                min = min.min(v.re);
            }
        }
        min
    }
}

/// Carathéodory coefficients c₁..c_order of the measure: cₙ = 2 Σⱼ wⱼ e^{inθⱼ}.
pub fn caratheodory_coeffs<F: Scalar>(h: &HerglotzAtoms<F>, order: usize) -> UnitSeries<F> {
    let two = real::<F>(2.0);
    let tail = (1..=order)
        .map(|n| {
            let nf = int::<F>(n);
            let mut s = Complex::new(F::zero(), F::zero());
            for &(w, theta) in h.atoms() {
                s += Complex::from_polar(w, nf * theta);
            }
            s * two
        })
        .collect();
    UnitSeries::from_tail(tail)
}

/// Starlike member: solves `z f' = f p` as the recursion
/// `(n-1) aₙ = Σ_{k=1}^{n-1} a_k c_{n-k}` with a₁ = 1.
pub fn starlike_from_caratheodory<F: Scalar>(h: &HerglotzAtoms<F>, order: usize) -> TaylorSeries<F> {
    let p = caratheodory_coeffs(h, order.saturating_sub(1));
    let mut a: Vec<Complex<F>> = Vec::with_capacity(order);
    a.push(Complex::new(F::one(), F::zero()));
    for n in 2..=order {
        let mut s = Complex::new(F::zero(), F::zero());
        for k in 1..n {
            s += a[k - 1] * p.coeff(n - k);
        }
        a.push(s / int::<F>(n - 1));
    }
    TaylorSeries::from_raw(a)
}

/// Convex member: solves `f' + z f'' = f' p` as the recursion
/// `n(n-1) aₙ = Σ_{k=1}^{n-1} (n-k) a_{n-k} c_k` with a₁ = 1.
pub fn convex_from_caratheodory<F: Scalar>(h: &HerglotzAtoms<F>, order: usize) -> TaylorSeries<F> {
    let p = caratheodory_coeffs(h, order.saturating_sub(1));
    let mut a: Vec<Complex<F>> = Vec::with_capacity(order);
    a.push(Complex::new(F::one(), F::zero()));
    for n in 2..=order {
        let mut s = Complex::new(F::zero(), F::zero());
        for k in 1..n {
            s += a[n - k - 1] * p.coeff(k) * int::<F>(n - k);
        }
        a.push(s / (int::<F>(n) * int::<F>(n - 1)));
    }
    TaylorSeries::from_raw(a)
}

/// Bounded-turning member: `f' = p` gives aₙ = c_{n-1}/n.
pub fn bounded_turning_from_caratheodory<F: Scalar>(
    h: &HerglotzAtoms<F>,
    order: usize,
) -> TaylorSeries<F> {
    let p = caratheodory_coeffs(h, order.saturating_sub(1));
    TaylorSeries::from_fn(order, |n| {
        if n == 1 {
            Complex::new(F::one(), F::zero())
        } else {
            p.coeff(n - 1) / int::<F>(n)
        }
    })
}

/// Close-to-convex member for a starlike generator g (given by its measure),
/// a tilt α ∈ (−π/2, π/2) and a Carathéodory factor p:
/// `e^{iα} z f' = g · (p cos α + i sin α)`.
///
/// Coefficients come from one series product,
/// `n aₙ = Σ_{k=0}^{n-1} b_{n-k} ĉ_k` with ĉ₀ = 1, ĉ_k = e^{-iα} cos α · c_k,
/// which reproduces the small-index relations
/// 2a₂ = b₂ + c₁e^{-iα}cos α, 3a₃ = b₃ + (b₂c₁ + c₂)e^{-iα}cos α, … .
pub fn close_to_convex_from<F: Scalar>(
    g_atoms: &HerglotzAtoms<F>,
    alpha: F,
    p_atoms: &HerglotzAtoms<F>,
    order: usize,
) -> Result<TaylorSeries<F>> {
    let half_pi = F::FRAC_PI_2();
    if !(alpha > -half_pi && alpha < half_pi) {
        return Err(Error::AlphaOutOfRange {
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
        });
    }
    let g = starlike_from_caratheodory(g_atoms, order);
    let p = caratheodory_coeffs(p_atoms, order.saturating_sub(1));
    let weight = Complex::from_polar(alpha.cos(), -alpha); // e^{-iα} cos α
    let adjusted: Vec<Complex<F>> = (0..order)
        .map(|k| {
            if k == 0 {
                Complex::new(F::one(), F::zero())
            } else {
                p.coeff(k) * weight
            }
        })
        .collect();
    let prod = series::mul(g.coeffs(), &adjusted, order);
    Ok(TaylorSeries::from_fn(order, |n| prod[n - 1] / int::<F>(n)))
}

/// Closed-form extremal functions used throughout the determinant bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NamedFunction<F> {
    /// f(z) = z.
    Identity,
    /// Koebe function z/(1-z)², aₙ = n.
    Koebe,
    /// Rotated Koebe z/(1-e^{iθ}z)², aₙ = n·e^{i(n-1)θ}.
    KoebeRotation(F),
    /// Half-plane map z/(1-z), aₙ = 1.
    HalfPlane,
    /// Rotated half-plane map z/(1-e^{iθ}z), aₙ = e^{i(n-1)θ}.
    HalfPlaneRotation(F),
    /// -log(1-z), aₙ = 1/n.
    LogMap,
    /// Primitive of (1+e^{iθ}z)/(1-e^{iθ}z): a₁ = 1, aₙ = 2e^{i(n-1)θ}/n.
    BoundedTurningRotation(F),
}

impl<F: Scalar> NamedFunction<F> {
    /// Resolve a registry id. Rotated ids accept an explicit angle; the `_i`
    /// shorthands fix θ = π/2.
    pub fn from_id(id: &str, theta: Option<F>) -> Result<Self> {
        let half_pi = F::FRAC_PI_2();
        let want_theta = |id: &str| -> Result<F> {
            theta.ok_or_else(|| Error::MalformedSpec(format!("id `{id}` needs a theta field")))
        };
        match id {
            "identity" => Ok(Self::Identity),
            "koebe" => Ok(Self::Koebe),
            "koebe_i" => Ok(Self::KoebeRotation(half_pi)),
            "koebe_rot" => Ok(Self::KoebeRotation(want_theta("koebe_rot")?)),
            "half_plane" => Ok(Self::HalfPlane),
            "half_plane_i" => Ok(Self::HalfPlaneRotation(half_pi)),
            "half_plane_rot" => Ok(Self::HalfPlaneRotation(want_theta("half_plane_rot")?)),
            "log_map" => Ok(Self::LogMap),
            "bounded_turning" => Ok(Self::BoundedTurningRotation(F::zero())),
            "bounded_turning_i" => Ok(Self::BoundedTurningRotation(half_pi)),
            "bounded_turning_rot" => {
                Ok(Self::BoundedTurningRotation(want_theta("bounded_turning_rot")?))
            }
            other => Err(Error::UnknownFunctionId(other.to_string())),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Koebe => "koebe",
            Self::KoebeRotation(_) => "koebe_rot",
            Self::HalfPlane => "half_plane",
            Self::HalfPlaneRotation(_) => "half_plane_rot",
            Self::LogMap => "log_map",
            Self::BoundedTurningRotation(_) => "bounded_turning_rot",
        }
    }

    pub fn theta(&self) -> Option<F> {
        match self {
            Self::KoebeRotation(t) | Self::HalfPlaneRotation(t) | Self::BoundedTurningRotation(t) => {
                Some(*t)
            }
            _ => None,
        }
    }

    /// Exact closed-form coefficients through `order`.
    pub fn coefficients(&self, order: usize) -> TaylorSeries<F> {
        // quarter-turn rotations are the canonical witnesses; keep their
        // phases exact instead of going through trig
        let phase = |n: usize, th: F| {
            if th == F::FRAC_PI_2() {
                let (re, im) = match (n - 1) % 4 {
                    0 => (F::one(), F::zero()),
                    1 => (F::zero(), F::one()),
                    2 => (-F::one(), F::zero()),
                    _ => (F::zero(), -F::one()),
                };
                Complex::new(re, im)
            } else {
                Complex::from_polar(F::one(), int::<F>(n - 1) * th)
            }
        };
        TaylorSeries::from_fn(order, |n| match *self {
            Self::Identity => {
                if n == 1 {
                    Complex::new(F::one(), F::zero())
                } else {
                    Complex::new(F::zero(), F::zero())
                }
            }
            Self::Koebe => Complex::new(int::<F>(n), F::zero()),
            Self::KoebeRotation(th) => phase(n, th) * int::<F>(n),
            Self::HalfPlane => Complex::new(F::one(), F::zero()),
            Self::HalfPlaneRotation(th) => phase(n, th),
            Self::LogMap => Complex::new(F::one() / int::<F>(n), F::zero()),
            Self::BoundedTurningRotation(th) => {
                if n == 1 {
                    Complex::new(F::one(), F::zero())
                } else {
                    phase(n, th) * (real::<F>(2.0) / int::<F>(n))
                }
            }
        })
    }
}

/// Look up a named function by registry id and return its coefficients.
pub fn named_function<F: Scalar>(id: &str, order: usize) -> Result<TaylorSeries<F>> {
    Ok(NamedFunction::from_id(id, None)?.coefficients(order))
}

/// Tagged description of a class member; the unit of serialization for
/// witnesses and CLI inputs.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec<F> {
    Named(NamedFunction<F>),
    Starlike(HerglotzAtoms<F>),
    Convex(HerglotzAtoms<F>),
    BoundedTurning(HerglotzAtoms<F>),
    CloseToConvex {
        generator: HerglotzAtoms<F>,
        alpha: F,
        p: HerglotzAtoms<F>,
    },
    TypicallyReal(RobertsonMeasure<F>),
}

/// JSON layout for [`FunctionSpec`]; field order is canonical.
#[derive(Serialize, Deserialize)]
struct SpecDto {
    variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    named_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    atoms: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_atoms: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
}

fn atoms_to_f64<F: Scalar>(atoms: &[(F, F)]) -> Vec<[f64; 2]> {
    atoms
        .iter()
        .map(|&(w, x)| [w.to_f64().unwrap_or(f64::NAN), x.to_f64().unwrap_or(f64::NAN)])
        .collect()
}

fn atoms_from_f64<F: Scalar>(atoms: &[[f64; 2]]) -> Vec<(F, F)> {
    atoms.iter().map(|&[w, x]| (real(w), real(x))).collect()
}

impl<F: Scalar> FunctionSpec<F> {
    /// Taylor coefficients of the described member through `order`.
    pub fn build(&self, order: usize) -> Result<TaylorSeries<F>> {
        match self {
            Self::Named(f) => Ok(f.coefficients(order)),
            Self::Starlike(h) => Ok(starlike_from_caratheodory(h, order)),
            Self::Convex(h) => Ok(convex_from_caratheodory(h, order)),
            Self::BoundedTurning(h) => Ok(bounded_turning_from_caratheodory(h, order)),
            Self::CloseToConvex { generator, alpha, p } => {
                close_to_convex_from(generator, *alpha, p, order)
            }
            Self::TypicallyReal(m) => Ok(typically_real_coeffs(m, order)),
        }
    }

    pub fn to_json(&self) -> String {
        let dto = match self {
            Self::Named(f) => SpecDto {
                variant: "named".into(),
                named_id: Some(f.id().into()),
                theta: f.theta().map(|t| t.to_f64().unwrap_or(f64::NAN)),
                atoms: None,
                g_atoms: None,
                alpha: None,
            },
            Self::Starlike(h) | Self::Convex(h) | Self::BoundedTurning(h) => SpecDto {
                variant: match self {
                    Self::Starlike(_) => "starlike",
                    Self::Convex(_) => "convex",
                    _ => "bounded_turning",
                }
                .into(),
                named_id: None,
                theta: None,
                atoms: Some(atoms_to_f64(h.atoms())),
                g_atoms: None,
                alpha: None,
            },
            Self::CloseToConvex { generator, alpha, p } => SpecDto {
                variant: "close_to_convex".into(),
                named_id: None,
                theta: None,
                atoms: Some(atoms_to_f64(p.atoms())),
                g_atoms: Some(atoms_to_f64(generator.atoms())),
                alpha: Some(alpha.to_f64().unwrap_or(f64::NAN)),
            },
            Self::TypicallyReal(m) => SpecDto {
                variant: "typically_real".into(),
                named_id: None,
                theta: None,
                atoms: Some(atoms_to_f64(m.atoms())),
                g_atoms: None,
                alpha: None,
            },
        };
        serde_json::to_string(&dto).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: SpecDto =
            serde_json::from_str(text).map_err(|e| Error::MalformedSpec(e.to_string()))?;
        let need_atoms = |dto: &SpecDto| -> Result<Vec<[f64; 2]>> {
            dto.atoms
                .clone()
                .ok_or_else(|| Error::MalformedSpec("missing `atoms`".into()))
        };
        match dto.variant.as_str() {
            "named" => {
                let id = dto
                    .named_id
                    .as_deref()
                    .ok_or_else(|| Error::MalformedSpec("missing `named_id`".into()))?;
                Ok(Self::Named(NamedFunction::from_id(
                    id,
                    dto.theta.map(real),
                )?))
            }
            "starlike" => Ok(Self::Starlike(HerglotzAtoms::new(atoms_from_f64(
                &need_atoms(&dto)?,
            ))?)),
            "convex" => Ok(Self::Convex(HerglotzAtoms::new(atoms_from_f64(
                &need_atoms(&dto)?,
            ))?)),
            "bounded_turning" => Ok(Self::BoundedTurning(HerglotzAtoms::new(atoms_from_f64(
                &need_atoms(&dto)?,
            ))?)),
            "close_to_convex" => {
                let g = dto
                    .g_atoms
                    .clone()
                    .ok_or_else(|| Error::MalformedSpec("missing `g_atoms`".into()))?;
                let alpha = dto
                    .alpha
                    .ok_or_else(|| Error::MalformedSpec("missing `alpha`".into()))?;
                Ok(Self::CloseToConvex {
                    generator: HerglotzAtoms::new(atoms_from_f64(&g))?,
                    alpha: real(alpha),
                    p: HerglotzAtoms::new(atoms_from_f64(&need_atoms(&dto)?))?,
                })
            }
            "typically_real" => Ok(Self::TypicallyReal(RobertsonMeasure::new(atoms_from_f64(
                &need_atoms(&dto)?,
            ))?)),
            other => Err(Error::MalformedSpec(format!("unknown variant `{other}`"))),
        }
    }
}

/// Defining condition checked by [`membership_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassId {
    Starlike,
    Convex,
    BoundedTurning,
    TypicallyReal,
}

/// Result of a grid membership probe.
#[derive(Clone, Copy, Debug)]
pub struct Membership<F> {
    pub passes: bool,
    /// Minimum of the defining quantity over the grid (Re of the class ratio,
    /// or Im z · Im f for typically real).
    pub min_margin: F,
}

const MEMBERSHIP_RADII: [f64; 3] = [0.3, 0.6, 0.9];
const MEMBERSHIP_ANGLES: usize = 128;
const MEMBERSHIP_STRICTNESS: f64 = 1e-8;

fn grid_min<F: Scalar>(mut value_at: impl FnMut(Complex<F>) -> Result<F>) -> Result<F> {
    let mut min = F::infinity();
    for &r in &MEMBERSHIP_RADII {
        for k in 0..MEMBERSHIP_ANGLES {
            let phi = int::<F>(2 * k) * F::PI() / int::<F>(MEMBERSHIP_ANGLES);
            let z = Complex::from_polar(real::<F>(r), phi);
            min = min.min(value_at(z)?);
        }
    }
    Ok(min)
}

/// Evaluate the defining Re-condition of `class` on a 3-radius × 128-angle
/// grid. A sanity net, not a proof: series are truncated and the grid is
/// finite.
pub fn membership_check<F: Scalar>(f: &TaylorSeries<F>, class: ClassId) -> Result<Membership<F>> {
    let n = f.order();
    let min_margin = match class {
        ClassId::Starlike => {
            // Re(z f'/f) via the z-shifted quotient
            let num = series::z_derivative(&f.to_poly());
            let ratio = series::div(&num[1..], f.coeffs(), n)?;
            grid_min(|z| Ok(series::eval(&ratio, z)?.re))?
        }
        ClassId::Convex => {
            // Re(1 + z f''/f') = Re((zf')'/f')
            let fp: Vec<Complex<F>> = (0..n).map(|k| f.coeff(k + 1) * int::<F>(k + 1)).collect();
            let zfp_p: Vec<Complex<F>> = (0..n)
                .map(|k| f.coeff(k + 1) * int::<F>((k + 1) * (k + 1)))
                .collect();
            let ratio = series::div(&zfp_p, &fp, n)?;
            grid_min(|z| Ok(series::eval(&ratio, z)?.re))?
        }
        ClassId::BoundedTurning => {
            let fp: Vec<Complex<F>> = (0..n).map(|k| f.coeff(k + 1) * int::<F>(k + 1)).collect();
            grid_min(|z| Ok(series::eval(&fp, z)?.re))?
        }
        ClassId::TypicallyReal => {
            let poly = f.to_poly();
            grid_min(|z| Ok(z.im * series::eval(&poly, z)?.im))?
        }
    };
    Ok(Membership {
        passes: min_margin > -real::<F>(MEMBERSHIP_STRICTNESS),
        min_margin,
    })
}

/// Grid probe of the close-to-convex condition Re(e^{iα} z f'/g) > 0.
pub fn close_to_convex_margin<F: Scalar>(
    f: &TaylorSeries<F>,
    g: &TaylorSeries<F>,
    alpha: F,
) -> Result<Membership<F>> {
    let n = f.order().min(g.order());
    let num = series::z_derivative(&f.to_poly());
    let ratio = series::div(&num[1..], g.coeffs(), n)?;
    let tilt = Complex::from_polar(F::one(), alpha);
    let min_margin = grid_min(|z| Ok((series::eval(&ratio, z)? * tilt).re))?;
    Ok(Membership {
        passes: min_margin > -real::<F>(MEMBERSHIP_STRICTNESS),
        min_margin,
    })
}
