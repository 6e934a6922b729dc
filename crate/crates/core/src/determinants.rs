//! Symmetric Toeplitz determinants of Taylor coefficients,
//!
//! ```text
//!           | a_n       a_{n+1}  …  a_{n+q-1} |
//! T_q(n) =  | a_{n+1}   a_n      …  a_{n+q-2} |
//!           | …                               |
//!           | a_{n+q-1}          …  a_n       |
//! ```
//!
//! with a₁ = 1, plus the closed forms for q = 2, 3 and the handful of
//! auxiliary coefficient functionals the sharp-bound arguments run through.
//! Results carry both the signed complex value and the modulus: the
//! typically-real bounds are stated for the signed value, everything else for
//! the modulus.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TaylorSeries;

/// Value of one symmetric Toeplitz determinant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToeplitzResult<F> {
    pub n: usize,
    pub q: usize,
    pub value: Complex<F>,
    pub abs_value: F,
}

fn require_order<F: Scalar>(f: &TaylorSeries<F>, needed: usize) -> Result<()> {
    if needed > f.order() {
        return Err(Error::InsufficientTruncation {
            needed,
            have: f.order(),
        });
    }
    Ok(())
}

/// Determinant of the q×q symmetric Toeplitz matrix with first row
/// (aₙ, …, a_{n+q-1}). Cofactor expansion for q ≤ 4, LU with partial
/// pivoting above.
pub fn toeplitz_det<F: Scalar>(f: &TaylorSeries<F>, n: usize, q: usize) -> Result<ToeplitzResult<F>> {
    if n < 1 || q < 1 {
        return Err(Error::ParamOutOfRange("need n >= 1 and q >= 1".into()));
    }
    require_order(f, n + q - 1)?;
    let entry = |i: usize, j: usize| f.coeff(n + i.abs_diff(j));
    let m: Vec<Complex<F>> = (0..q * q).map(|k| entry(k / q, k % q)).collect();
    let value = if q <= 4 {
        det_cofactor(&m, q)
    } else {
        det_lu(m, q)
    };
    Ok(ToeplitzResult {
        n,
        q,
        value,
        abs_value: value.norm(),
    })
}

fn det_cofactor<F: Scalar>(m: &[Complex<F>], q: usize) -> Complex<F> {
    match q {
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        _ => {
            let mut det = Complex::new(F::zero(), F::zero());
            let mut sign = F::one();
            for col in 0..q {
                let minor: Vec<Complex<F>> = (1..q)
                    .flat_map(|r| (0..q).filter(|&c| c != col).map(move |c| (r, c)))
                    .map(|(r, c)| m[r * q + c])
                    .collect();
                det += m[col] * det_cofactor(&minor, q - 1) * sign;
                sign = -sign;
            }
            det
        }
    }
}

fn det_lu<F: Scalar>(mut m: Vec<Complex<F>>, q: usize) -> Complex<F> {
    let mut det = Complex::new(F::one(), F::zero());
    for col in 0..q {
        let pivot = (col..q)
            .max_by(|&a, &b| {
                m[a * q + col]
                    .norm()
                    .partial_cmp(&m[b * q + col].norm())
                    .unwrap()
            })
            .unwrap();
        if m[pivot * q + col].norm() == F::zero() {
            return Complex::new(F::zero(), F::zero());
        }
        if pivot != col {
            for c in 0..q {
                m.swap(col * q + c, pivot * q + c);
            }
            det = -det;
        }
        let diag = m[col * q + col];
        det *= diag;
        for r in col + 1..q {
            let factor = m[r * q + col] / diag;
            for c in col..q {
                let sub = factor * m[col * q + c];
                m[r * q + c] -= sub;
            }
        }
    }
    det
}

/// Closed form T₂(n) = aₙ² − a_{n+1}².
pub fn t2_closed<F: Scalar>(f: &TaylorSeries<F>, n: usize) -> Result<Complex<F>> {
    require_order(f, n + 1)?;
    let an = f.coeff(n);
    let an1 = f.coeff(n + 1);
    Ok(an * an - an1 * an1)
}

/// Closed form T₃(n) = aₙ³ − 2a_{n+1}²aₙ − a_{n+2}²aₙ + 2a_{n+1}²a_{n+2}.
pub fn t3_closed<F: Scalar>(f: &TaylorSeries<F>, n: usize) -> Result<Complex<F>> {
    require_order(f, n + 2)?;
    let a = f.coeff(n);
    let b = f.coeff(n + 1);
    let c = f.coeff(n + 2);
    let two = Complex::new(F::one() + F::one(), F::zero());
    Ok(a * a * a - two * b * b * a - c * c * a + two * b * b * c)
}

/// Auxiliary coefficient functionals used by the sharp-bound arguments and
/// the extremal searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functional {
    /// a₂² − 2a₃² + a₂a₄ (second factor of T₃(2) = (a₂−a₄)·this).
    T32Factor,
    /// a₂a₄ − 2a₃².
    A2A4Minus2A3Sq,
    /// Fekete–Szegő combination a₃ − 2a₂².
    FeketeSzego,
}

impl Functional {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "t32_factor" => Ok(Self::T32Factor),
            "a2a4_minus_2a3sq" => Ok(Self::A2A4Minus2A3Sq),
            "fekete_szego" => Ok(Self::FeketeSzego),
            other => Err(Error::UnknownFunctional(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::T32Factor => "t32_factor",
            Self::A2A4Minus2A3Sq => "a2a4_minus_2a3sq",
            Self::FeketeSzego => "fekete_szego",
        }
    }

    pub fn eval<F: Scalar>(&self, f: &TaylorSeries<F>) -> Result<Complex<F>> {
        let two = Complex::new(F::one() + F::one(), F::zero());
        match self {
            Self::T32Factor => {
                require_order(f, 4)?;
                let (a2, a3, a4) = (f.coeff(2), f.coeff(3), f.coeff(4));
                Ok(a2 * a2 - two * a3 * a3 + a2 * a4)
            }
            Self::A2A4Minus2A3Sq => {
                require_order(f, 4)?;
                let (a2, a3, a4) = (f.coeff(2), f.coeff(3), f.coeff(4));
                Ok(a2 * a4 - two * a3 * a3)
            }
            Self::FeketeSzego => {
                require_order(f, 3)?;
                let (a2, a3) = (f.coeff(2), f.coeff(3));
                Ok(a3 - two * a2 * a2)
            }
        }
    }
}

/// Look up a functional evaluator by registry name.
pub fn functional(name: &str) -> Result<Functional> {
    Functional::from_name(name)
}
