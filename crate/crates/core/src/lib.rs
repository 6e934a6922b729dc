//! Numerical toolkit for Toeplitz determinants of Taylor coefficients over
//! the classical families of normalized univalent functions.
//!
//! The crate constructs class members from their generating data (atomic
//! Herglotz measures on the circle for starlike/convex/bounded-turning/
//! close-to-convex members, atomic measures on [-1, 1] for typically real
//! ones), evaluates the symmetric determinants T_q(n) of the resulting
//! coefficients, checks the classical coefficient inequalities as executable
//! oracles, and reproduces the sharp extremal constants by derivative-free
//! search over the generator parameters (experiments `E1`..`E16`).
//!
//! All numeric code is generic over the scalar type through [`Scalar`];
//! `f64` aliases for the main types live at the crate root.

pub mod classes;
pub mod determinants;
pub mod error;
pub mod experiments;
pub mod hull;
pub mod lemmas;
pub mod sampling;
pub mod scalar;
pub mod search;
pub mod series;
pub mod typically_real;

pub use classes::{
    bounded_turning_from_caratheodory, caratheodory_coeffs, close_to_convex_from,
    close_to_convex_margin, convex_from_caratheodory, membership_check, named_function,
    starlike_from_caratheodory, ClassId, FunctionSpec, HerglotzAtoms, Membership, NamedFunction,
};
pub use determinants::{functional, t2_closed, t3_closed, toeplitz_det, Functional, ToeplitzResult};
pub use error::{Error, Result};
pub use experiments::{
    bound_respecting_sampler, experiment_ids, extremal_experiment, extremal_experiment_with,
    ArgBest, ExperimentReport, RunSettings, SampledClass, SamplerOutcome, SecondaryResult,
};
pub use lemmas::{
    caratheodory_bound, efraimidis_bound, fekete_szego_starlike, janteng_bound,
    k_class_functional_bound, ma_bound, BoundCheck,
};
pub use scalar::Scalar;
pub use search::{grid_search, grid_search_multi, refine, DimSpec, GridOutcome, SearchDomain};
pub use series::{TaylorSeries, UnitSeries};
pub use typically_real::{
    boundary_family_points, chebyshev_u, region_hull, two_atom_family, typically_real_coeffs,
    BoundaryPoint, CoeffRegion, RegionHull, RobertsonMeasure,
};

/// `f64` instantiations of the main domain types.
pub type TaylorSeries64 = series::TaylorSeries<f64>;
pub type UnitSeries64 = series::UnitSeries<f64>;
pub type HerglotzAtoms64 = classes::HerglotzAtoms<f64>;
pub type FunctionSpec64 = classes::FunctionSpec<f64>;
pub type NamedFunction64 = classes::NamedFunction<f64>;
pub type RobertsonMeasure64 = typically_real::RobertsonMeasure<f64>;
pub type RegionHull64 = typically_real::RegionHull<f64>;
pub type SearchDomain64 = search::SearchDomain<f64>;
pub type BoundCheck64 = lemmas::BoundCheck<f64>;
pub type ToeplitzResult64 = determinants::ToeplitzResult<f64>;
