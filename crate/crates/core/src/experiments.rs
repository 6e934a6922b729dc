//! Registry of the extremal experiments E1..E16 and the bound-respecting
//! samplers. Each experiment drives the full pipeline — class generator →
//! Taylor coefficients → determinant functional — over a documented parameter
//! domain, multi-starts a Nelder–Mead polish from the best 16 lattice cells,
//! and emits a serializable [`ExperimentReport`].
//!
//! Reports are deterministic for a fixed (id, seed, resolution): grid scans
//! reduce with index-stable tie-breaking, sampler chunks carry their own
//! seeds, and near-ties resolve to the lexicographically smallest parameter
//! vector. Only `runtime_seconds` varies between runs.

use std::f64::consts::FRAC_PI_2;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    bounded_turning_from_caratheodory, convex_from_caratheodory, starlike_from_caratheodory,
    FunctionSpec, HerglotzAtoms, NamedFunction,
};
use crate::determinants::{t2_closed, t3_closed, Functional};
use crate::error::{Error, Result};
use crate::sampling::{sample_bounded_turning, sample_close_to_convex, sample_robertson};
use crate::search::{grid_search_multi, refine, DimSpec, SearchDomain};
use crate::series::TaylorSeries;
use crate::typically_real::{two_atom_family, typically_real_coeffs, RobertsonMeasure};

const TAU: f64 = std::f64::consts::TAU;

/// Series order used by the search experiments (functionals need a₄ at most).
const SEARCH_ORDER: usize = 6;

/// Series order used by the typically-real range sampler (needs a₇).
const RANGE_ORDER: usize = 8;

/// Tunable knobs shared by all experiments.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunSettings {
    pub seed: u64,
    /// Per-dimension lattice resolution override (default depends on the
    /// dimension count).
    pub resolution: Option<usize>,
    /// Sample-count override for the sampling experiments.
    pub samples: Option<u64>,
}

/// Winning parameter vector, tagged with the searched family it came from.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ArgBest {
    pub family: String,
    pub params: Vec<f64>,
}

/// An additional objective evaluated over the same domain.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SecondaryResult {
    pub objective: String,
    pub direction: String,
    pub best_value: f64,
    pub argbest: ArgBest,
    pub target: f64,
    pub tolerance: f64,
    pub deviation: f64,
    pub passed: bool,
}

/// Full record of one experiment run. Serialization is the external contract;
/// field order is canonical.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExperimentReport {
    pub experiment_id: String,
    pub description: String,
    pub objective: String,
    pub direction: String,
    pub domain: String,
    pub best_value: f64,
    pub argbest: ArgBest,
    pub grid_ties: Vec<ArgBest>,
    pub target: f64,
    pub tolerance: f64,
    pub deviation: f64,
    pub pass_rule: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub secondary: Vec<SecondaryResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_spec: Option<String>,
    pub samples_used: u64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub runtime_seconds: f64,
}

impl ExperimentReport {
    /// Copy with the runtime zeroed; the payload two runs must agree on.
    pub fn deterministic_payload(&self) -> Self {
        let mut r = self.clone();
        r.runtime_seconds = 0.0;
        r
    }
}

/// All registered experiment ids, in run order.
pub fn experiment_ids() -> &'static [&'static str] {
    &[
        "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E10", "E11", "E12", "E13", "E14",
        "E15", "E16",
    ]
}

/// Run one experiment with default settings (seed 0, default resolutions).
pub fn extremal_experiment(id: &str) -> Result<ExperimentReport> {
    extremal_experiment_with(id, &RunSettings::default())
}

// ---------------------------------------------------------------------------
// search machinery
// ---------------------------------------------------------------------------

type BuildFn = Box<dyn Fn(&[f64]) -> TaylorSeries<f64> + Sync + Send>;

struct Family {
    name: &'static str,
    domain: SearchDomain<f64>,
    build: BuildFn,
}

#[derive(Clone, Copy, Debug)]
enum Metric {
    AbsT2(usize),
    AbsT3(usize),
    AbsT32Factor,
    T2(usize),
    T3(usize),
}

impl Metric {
    fn name(self) -> String {
        match self {
            Metric::AbsT2(n) => format!("abs_t2_{n}"),
            Metric::AbsT3(n) => format!("abs_t3_{n}"),
            Metric::AbsT32Factor => "abs_t32_factor".into(),
            Metric::T2(n) => format!("t2_{n}"),
            Metric::T3(n) => format!("t3_{n}"),
        }
    }

    fn eval(self, f: &TaylorSeries<f64>) -> f64 {
        match self {
            Metric::AbsT2(n) => t2_closed(f, n).expect("order checked").norm(),
            Metric::AbsT3(n) => t3_closed(f, n).expect("order checked").norm(),
            Metric::AbsT32Factor => Functional::T32Factor.eval(f).expect("order checked").norm(),
            Metric::T2(n) => t2_closed(f, n).expect("order checked").re,
            Metric::T3(n) => t3_closed(f, n).expect("order checked").re,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Max,
    Min,
}

impl Direction {
    fn label(self) -> &'static str {
        match self {
            Direction::Max => "max",
            Direction::Min => "min",
        }
    }
}

fn default_resolution(dims: usize) -> usize {
    match dims {
        1 => 4001,
        2 => 201,
        3 => 41,
        4 => 21,
        _ => 17,
    }
}

struct SearchOutcome {
    best_value: f64,
    argbest: ArgBest,
    grid_ties: Vec<ArgBest>,
    evals: u64,
    domain_desc: String,
}

/// Grid-then-refine over every family; multi-start count 16.
fn run_search(
    families: &[Family],
    metric: Metric,
    direction: Direction,
    resolution: Option<usize>,
) -> Result<SearchOutcome> {
    let evals = AtomicU64::new(0);
    // (signed value, family index, params); sign flipped for minimization
    let mut candidates: Vec<(f64, usize, Vec<f64>)> = Vec::new();
    let mut grid_ties: Vec<(usize, Vec<ArgBest>)> = Vec::new();
    let mut desc_parts: Vec<String> = Vec::new();

    for (fi, fam) in families.iter().enumerate() {
        let objective = |x: &[f64]| {
            evals.fetch_add(1, Ordering::Relaxed);
            let v = metric.eval(&(fam.build)(x));
            match direction {
                Direction::Max => v,
                Direction::Min => -v,
            }
        };
        let res = resolution.unwrap_or_else(|| default_resolution(fam.domain.len()));
        let grid = grid_search_multi(&objective, &fam.domain, res, 16)?;
        grid_ties.push((
            fi,
            grid.ties
                .iter()
                .map(|p| ArgBest {
                    family: fam.name.to_string(),
                    params: p.clone(),
                })
                .collect(),
        ));
        let polished: Vec<(f64, usize, Vec<f64>)> = grid
            .starts
            .par_iter()
            .map(|start| {
                let (p, v) = refine(&objective, start, &fam.domain);
                (v, fi, p)
            })
            .collect();
        candidates.extend(polished);
        desc_parts.push(format!(
            "{}({}) x{res}",
            fam.name,
            fam.domain
                .dims()
                .iter()
                .map(|d| d.name.as_str())
                .collect::<Vec<_>>()
                .join(","),
        ));
    }

    let vmax = candidates
        .iter()
        .map(|c| c.0)
        .fold(f64::NEG_INFINITY, f64::max);
    // canonical representative among near-ties: smallest family index, then
    // lexicographically smallest parameter vector
    let mut eligible: Vec<&(f64, usize, Vec<f64>)> = candidates
        .iter()
        .filter(|c| c.0 >= vmax - 1e-9)
        .collect();
    eligible.sort_by(|a, b| {
        a.1.cmp(&b.1).then_with(|| {
            a.2.partial_cmp(&b.2)
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let winner = eligible[0];
    let best_value = match direction {
        Direction::Max => vmax,
        Direction::Min => -vmax,
    };
    let ties = grid_ties
        .into_iter()
        .find(|(fi, _)| *fi == winner.1)
        .map(|(_, t)| t)
        .unwrap_or_default();

    Ok(SearchOutcome {
        best_value,
        argbest: ArgBest {
            family: families[winner.1].name.to_string(),
            params: winner.2.clone(),
        },
        grid_ties: ties,
        evals: evals.load(Ordering::Relaxed),
        domain_desc: desc_parts.join(" + "),
    })
}

// ---------------------------------------------------------------------------
// parameter families
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
enum GeneratorClass {
    Starlike,
    Convex,
    BoundedTurning,
}

impl GeneratorClass {
    fn build(self, atoms: HerglotzAtoms<f64>, order: usize) -> TaylorSeries<f64> {
        match self {
            GeneratorClass::Starlike => starlike_from_caratheodory(&atoms, order),
            GeneratorClass::Convex => convex_from_caratheodory(&atoms, order),
            GeneratorClass::BoundedTurning => bounded_turning_from_caratheodory(&atoms, order),
        }
    }
}

fn koebe_rotation_family() -> Vec<Family> {
    vec![Family {
        name: "koebe_rotation",
        domain: SearchDomain::new(vec![DimSpec::periodic("theta", 0.0, TAU)]).unwrap(),
        build: Box::new(|x: &[f64]| {
            NamedFunction::KoebeRotation(x[0]).coefficients(SEARCH_ORDER)
        }),
    }]
}

/// 1-, 2- and 3-atom generator measures; weights on the simplex are reached by
/// stick-breaking so every family lives in a plain box.
fn atom_families(class: GeneratorClass) -> Vec<Family> {
    let single = move |x: &[f64]| {
        class.build(HerglotzAtoms::single(x[0]), SEARCH_ORDER)
    };
    let double = move |x: &[f64]| {
        let atoms =
            HerglotzAtoms::new(vec![(x[2], x[0]), (1.0 - x[2], x[1])]).expect("box params valid");
        class.build(atoms, SEARCH_ORDER)
    };
    let triple = move |x: &[f64]| {
        let w1 = x[3];
        let w2 = (1.0 - x[3]) * x[4];
        let w3 = (1.0 - x[3]) * (1.0 - x[4]);
        let atoms = HerglotzAtoms::new(vec![(w1, x[0]), (w2, x[1]), (w3, x[2])])
            .expect("box params valid");
        class.build(atoms, SEARCH_ORDER)
    };
    vec![
        Family {
            name: "one_atom",
            domain: SearchDomain::new(vec![DimSpec::periodic("theta", 0.0, TAU)]).unwrap(),
            build: Box::new(single),
        },
        Family {
            name: "two_atom",
            domain: SearchDomain::new(vec![
                DimSpec::periodic("theta1", 0.0, TAU),
                DimSpec::periodic("theta2", 0.0, TAU),
                DimSpec::new("w1", 0.0, 1.0),
            ])
            .unwrap(),
            build: Box::new(double),
        },
        Family {
            name: "three_atom",
            domain: SearchDomain::new(vec![
                DimSpec::periodic("theta1", 0.0, TAU),
                DimSpec::periodic("theta2", 0.0, TAU),
                DimSpec::periodic("theta3", 0.0, TAU),
                DimSpec::new("u1", 0.0, 1.0),
                DimSpec::new("u2", 0.0, 1.0),
            ])
            .unwrap(),
            build: Box::new(triple),
        },
    ]
}

/// Boundary families of the (a₂, a₃) region: the one-atom curve k(z,t) and
/// the endpoint blend F(z,α,1,-1).
fn a23_boundary_families() -> Vec<Family> {
    vec![
        Family {
            name: "curve",
            domain: SearchDomain::new(vec![DimSpec::new("t", -1.0, 1.0)]).unwrap(),
            build: Box::new(|x: &[f64]| {
                typically_real_coeffs(
                    &RobertsonMeasure::point_mass(x[0]).expect("box params valid"),
                    SEARCH_ORDER,
                )
            }),
        },
        Family {
            name: "segment",
            domain: SearchDomain::new(vec![DimSpec::new("alpha", 0.0, 1.0)]).unwrap(),
            build: Box::new(|x: &[f64]| {
                two_atom_family(x[0], 1.0, -1.0, SEARCH_ORDER).expect("box params valid")
            }),
        },
    ]
}

/// Boundary families of the (a₃, a₄) region: F(z,α,t,-1) and F(z,α,t,1).
fn a34_boundary_families() -> Vec<Family> {
    let lower = |x: &[f64]| two_atom_family(x[0], x[1], -1.0, SEARCH_ORDER).expect("box params");
    let upper = |x: &[f64]| two_atom_family(x[0], x[1], 1.0, SEARCH_ORDER).expect("box params");
    let box2 = || {
        SearchDomain::new(vec![
            DimSpec::new("alpha", 0.0, 1.0),
            DimSpec::new("t", -1.0, 1.0),
        ])
        .unwrap()
    };
    vec![
        Family {
            name: "lower",
            domain: box2(),
            build: Box::new(lower),
        },
        Family {
            name: "upper",
            domain: box2(),
            build: Box::new(upper),
        },
    ]
}

// ---------------------------------------------------------------------------
// samplers
// ---------------------------------------------------------------------------

/// Classes probed by [`bound_respecting_sampler`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampledClass {
    CloseToConvex,
    BoundedTurning,
}

/// Outcome of a |T₃(2)| sampling sweep against a proven bound.
#[derive(Clone, Debug)]
pub struct SamplerOutcome {
    pub class: SampledClass,
    pub bound: f64,
    pub max_observed: f64,
    pub argmax: Option<FunctionSpec<f64>>,
    pub violations: u64,
    pub samples_used: u64,
}

const SAMPLER_CHUNK: u64 = 4096;

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Draw `n_samples` random members of `class`, evaluate |T₃(2)|, count
/// violations of the class bound (86 for close-to-convex, 7/3 for bounded
/// turning) and track the maximum. The known extremal candidates are seeded
/// into the sweep so the recorded maximum is a certified lower bound.
pub fn bound_respecting_sampler(
    class: SampledClass,
    n_samples: u64,
    seed: u64,
) -> SamplerOutcome {
    let bound = match class {
        SampledClass::CloseToConvex => 86.0,
        SampledClass::BoundedTurning => 7.0 / 3.0,
    };
    let anchors: Vec<FunctionSpec<f64>> = if n_samples == 0 {
        Vec::new()
    } else {
        match class {
            SampledClass::CloseToConvex => vec![FunctionSpec::CloseToConvex {
                generator: HerglotzAtoms::single(FRAC_PI_2),
                alpha: 0.0,
                p: HerglotzAtoms::single(FRAC_PI_2),
            }],
            SampledClass::BoundedTurning => vec![FunctionSpec::Named(
                NamedFunction::BoundedTurningRotation(FRAC_PI_2),
            )],
        }
    };

    let value_of = |spec: &FunctionSpec<f64>| -> f64 {
        let f = spec.build(SEARCH_ORDER).expect("sampled spec builds");
        t3_closed(&f, 2).expect("order sufficient").norm()
    };

    // (value, global index) pairs keep the reduction deterministic
    let mut best: Option<(f64, u64, FunctionSpec<f64>)> = None;
    let mut violations = 0u64;
    for (i, spec) in anchors.iter().enumerate() {
        let v = value_of(spec);
        if v > bound + 1e-9 {
            violations += 1;
        }
        if best.as_ref().is_none_or(|(bv, _, _)| v > *bv) {
            best = Some((v, i as u64, spec.clone()));
        }
    }

    let chunks = n_samples.div_ceil(SAMPLER_CHUNK);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let lo = c * SAMPLER_CHUNK;
            let hi = (lo + SAMPLER_CHUNK).min(n_samples);
            let mut local_best: Option<(f64, u64, FunctionSpec<f64>)> = None;
            let mut local_violations = 0u64;
            for i in lo..hi {
                let spec = match class {
                    SampledClass::CloseToConvex => sample_close_to_convex(&mut rng, 3),
                    SampledClass::BoundedTurning => sample_bounded_turning(&mut rng, 3),
                };
                let v = value_of(&spec);
                if v > bound + 1e-9 {
                    local_violations += 1;
                }
                let idx = anchors.len() as u64 + i;
                let better = match &local_best {
                    None => true,
                    Some((bv, bi, _)) => v > *bv || (v == *bv && idx < *bi),
                };
                if better {
                    local_best = Some((v, idx, spec));
                }
            }
            (local_best, local_violations)
        })
        .reduce(
            || (None, 0u64),
            |a, b| {
                let best = match (a.0, b.0) {
                    (None, x) | (x, None) => x,
                    (Some(x), Some(y)) => {
                        if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                            Some(y)
                        } else {
                            Some(x)
                        }
                    }
                };
                (best, a.1 + b.1)
            },
        );

    violations += merged.1;
    if let Some((v, i, spec)) = merged.0 {
        let better = match &best {
            None => true,
            Some((bv, bi, _)) => v > *bv || (v == *bv && i < *bi),
        };
        if better {
            best = Some((v, i, spec));
        }
    }

    let samples_used = anchors.len() as u64 + n_samples;
    match best {
        Some((v, _, spec)) => SamplerOutcome {
            class,
            bound,
            max_observed: v,
            argmax: Some(spec),
            violations,
            samples_used,
        },
        None => SamplerOutcome {
            class,
            bound,
            max_observed: f64::NEG_INFINITY,
            argmax: None,
            violations,
            samples_used,
        },
    }
}

struct RangeSweep {
    max_excess: f64,
    violations: u64,
    worst_spec: Option<FunctionSpec<f64>>,
    samples_used: u64,
}

/// T₂(n) range sweep for n = 2..=6 over random measures on [-1, 1]:
/// excess = how far a sample leaves [-(n+1)², n²].
fn t2_range_sweep(n_samples: u64, seed: u64) -> RangeSweep {
    let chunks = n_samples.div_ceil(SAMPLER_CHUNK);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let lo = c * SAMPLER_CHUNK;
            let hi = (lo + SAMPLER_CHUNK).min(n_samples);
            let mut local: Option<(f64, u64, FunctionSpec<f64>)> = None;
            let mut local_violations = 0u64;
            for i in lo..hi {
                let m = sample_robertson::<f64, _>(&mut rng, 3);
                let f = typically_real_coeffs(&m, RANGE_ORDER);
                let mut excess = f64::NEG_INFINITY;
                for n in 2..=6usize {
                    let t2 = t2_closed(&f, n).expect("order sufficient").re;
                    let upper = (n * n) as f64;
                    let lower = -(((n + 1) * (n + 1)) as f64);
                    excess = excess.max(t2 - upper).max(lower - t2);
                }
                if excess > 1e-9 {
                    local_violations += 1;
                }
                let better = match &local {
                    None => true,
                    Some((bv, bi, _)) => excess > *bv || (excess == *bv && i < *bi),
                };
                if better {
                    local = Some((excess, i, FunctionSpec::TypicallyReal(m)));
                }
            }
            (local, local_violations)
        })
        .reduce(
            || (None, 0u64),
            |a, b| {
                let best = match (a.0, b.0) {
                    (None, x) | (x, None) => x,
                    (Some(x), Some(y)) => {
                        if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                            Some(y)
                        } else {
                            Some(x)
                        }
                    }
                };
                (best, a.1 + b.1)
            },
        );
    match merged {
        (Some((excess, _, spec)), violations) => RangeSweep {
            max_excess: excess,
            violations,
            worst_spec: Some(spec),
            samples_used: n_samples,
        },
        (None, violations) => RangeSweep {
            max_excess: f64::NEG_INFINITY,
            violations,
            worst_spec: None,
            samples_used: n_samples,
        },
    }
}

// ---------------------------------------------------------------------------
// experiment definitions
// ---------------------------------------------------------------------------

struct SecondaryDef {
    metric: Metric,
    direction: Direction,
    target: f64,
    tolerance: f64,
}

struct SearchDef {
    description: &'static str,
    families: Vec<Family>,
    metric: Metric,
    direction: Direction,
    target: f64,
    tolerance: f64,
    secondary: Vec<SecondaryDef>,
    note: Option<&'static str>,
}

fn run_search_experiment(
    id: &str,
    def: SearchDef,
    settings: &RunSettings,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let main = run_search(&def.families, def.metric, def.direction, settings.resolution)?;
    let mut evals = main.evals;
    let mut secondary = Vec::with_capacity(def.secondary.len());
    for s in &def.secondary {
        let out = run_search(&def.families, s.metric, s.direction, settings.resolution)?;
        evals += out.evals;
        let deviation = out.best_value - s.target;
        secondary.push(SecondaryResult {
            objective: s.metric.name(),
            direction: s.direction.label().to_string(),
            best_value: out.best_value,
            argbest: out.argbest,
            target: s.target,
            tolerance: s.tolerance,
            deviation,
            passed: deviation.abs() <= s.tolerance,
        });
    }
    let deviation = main.best_value - def.target;
    let passed = deviation.abs() <= def.tolerance && secondary.iter().all(|s| s.passed);
    Ok(ExperimentReport {
        experiment_id: id.to_string(),
        description: def.description.to_string(),
        objective: def.metric.name(),
        direction: def.direction.label().to_string(),
        domain: main.domain_desc,
        best_value: main.best_value,
        argbest: main.argbest,
        grid_ties: main.grid_ties,
        target: def.target,
        tolerance: def.tolerance,
        deviation,
        pass_rule: "sharp".into(),
        passed,
        secondary,
        bound: None,
        violations: None,
        witness_spec: None,
        samples_used: evals,
        seed: settings.seed,
        note: def.note.map(str::to_string),
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

fn run_sampling_experiment(
    id: &str,
    description: &str,
    class: SampledClass,
    floor_target: f64,
    default_samples: u64,
    settings: &RunSettings,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let n = settings.samples.unwrap_or(default_samples);
    let out = bound_respecting_sampler(class, n, settings.seed);
    let deviation = out.max_observed - floor_target;
    let passed = out.violations == 0 && deviation >= -1e-6;
    Ok(ExperimentReport {
        experiment_id: id.to_string(),
        description: description.to_string(),
        objective: "abs_t3_2".into(),
        direction: "max".into(),
        domain: format!("{n} random class members + seeded extremal candidates"),
        best_value: out.max_observed,
        argbest: ArgBest {
            family: "sampled".into(),
            params: vec![],
        },
        grid_ties: vec![],
        target: floor_target,
        tolerance: 1e-6,
        deviation,
        pass_rule: "floor".into(),
        passed,
        secondary: vec![],
        bound: Some(out.bound),
        violations: Some(out.violations),
        witness_spec: out.argmax.map(|s| s.to_json()),
        samples_used: out.samples_used,
        seed: settings.seed,
        note: None,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

fn run_range_experiment(id: &str, settings: &RunSettings) -> Result<ExperimentReport> {
    let start = Instant::now();
    let n = settings.samples.unwrap_or(10_000);
    let sweep = t2_range_sweep(n, settings.seed);

    // equality witnesses: the half/half blend of the two endpoint kernels
    // has T2(n) = n^2 for odd n and -(n+1)^2 for even n, exactly
    let witness = two_atom_family(0.5, 1.0, -1.0, RANGE_ORDER).expect("valid blend");
    let mut secondary = Vec::new();
    for n in 2..=6usize {
        let value = t2_closed(&witness, n).expect("order sufficient").re;
        let target = if n % 2 == 1 {
            (n * n) as f64
        } else {
            -(((n + 1) * (n + 1)) as f64)
        };
        let deviation = value - target;
        secondary.push(SecondaryResult {
            objective: format!("witness_t2_{n}"),
            direction: if n % 2 == 1 { "max" } else { "min" }.to_string(),
            best_value: value,
            argbest: ArgBest {
                family: "endpoint_blend_half".into(),
                params: vec![0.5, 1.0, -1.0],
            },
            target,
            tolerance: 0.0,
            deviation,
            passed: deviation == 0.0,
        });
    }

    let passed = sweep.violations == 0
        && sweep.max_excess <= 1e-9
        && secondary.iter().all(|s| s.passed);
    Ok(ExperimentReport {
        experiment_id: id.to_string(),
        description: "T2(n) of random typically real members stays inside [-(n+1)^2, n^2] \
                      for n = 2..6; the endpoint blend attains both ends"
            .to_string(),
        objective: "max_t2_range_excess".into(),
        direction: "max".into(),
        domain: format!("{n} random measures on [-1,1], up to 3 atoms, n = 2..6"),
        best_value: sweep.max_excess,
        argbest: ArgBest {
            family: "sampled".into(),
            params: vec![],
        },
        grid_ties: vec![],
        target: 0.0,
        tolerance: 1e-9,
        deviation: sweep.max_excess,
        pass_rule: "ceiling".into(),
        passed,
        secondary,
        bound: Some(0.0),
        violations: Some(sweep.violations),
        witness_spec: sweep.worst_spec.map(|s| s.to_json()),
        samples_used: sweep.samples_used,
        seed: settings.seed,
        note: None,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Run one experiment by id with explicit settings.
pub fn extremal_experiment_with(id: &str, settings: &RunSettings) -> Result<ExperimentReport> {
    match id {
        "E1" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T2(2)| over rotations of the Koebe function",
                families: koebe_rotation_family(),
                metric: Metric::AbsT2(2),
                direction: Direction::Max,
                target: 13.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E2" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T2(3)| over rotations of the Koebe function",
                families: koebe_rotation_family(),
                metric: Metric::AbsT2(3),
                direction: Direction::Max,
                target: 25.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E3" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T3(1)| over 1-3 atom starlike generators",
                families: atom_families(GeneratorClass::Starlike),
                metric: Metric::AbsT3(1),
                direction: Direction::Max,
                target: 24.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E4" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T3(2)| over 1-3 atom starlike generators, with the \
                              |a2^2 - 2a3^2 + a2a4| factor tracked separately",
                families: atom_families(GeneratorClass::Starlike),
                metric: Metric::AbsT3(2),
                direction: Direction::Max,
                target: 84.0,
                tolerance: 1e-6,
                secondary: vec![SecondaryDef {
                    metric: Metric::AbsT32Factor,
                    direction: Direction::Max,
                    target: 14.0,
                    tolerance: 1e-6,
                }],
                note: None,
            },
            settings,
        ),
        "E5" => run_sampling_experiment(
            id,
            "close-to-convex sampling of |T3(2)| against the proven bound 86; the starlike \
             extremal value 84 is reached, supporting the sharper conjecture",
            SampledClass::CloseToConvex,
            84.0,
            100_000,
            settings,
        ),
        "E6" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T2(2)| and |T2(3)| over 1-3 atom convex generators",
                families: atom_families(GeneratorClass::Convex),
                metric: Metric::AbsT2(2),
                direction: Direction::Max,
                target: 2.0,
                tolerance: 1e-6,
                secondary: vec![SecondaryDef {
                    metric: Metric::AbsT2(3),
                    direction: Direction::Max,
                    target: 2.0,
                    tolerance: 1e-6,
                }],
                note: None,
            },
            settings,
        ),
        "E7" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T3(1)| over 1-3 atom convex generators",
                families: atom_families(GeneratorClass::Convex),
                metric: Metric::AbsT3(1),
                direction: Direction::Max,
                target: 4.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E8" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T3(2)| over 1-3 atom convex generators",
                families: atom_families(GeneratorClass::Convex),
                metric: Metric::AbsT3(2),
                direction: Direction::Max,
                target: 4.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E9" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T2(2)| and |T2(3)| over 1-3 atom bounded-turning \
                              generators",
                families: atom_families(GeneratorClass::BoundedTurning),
                metric: Metric::AbsT2(2),
                direction: Direction::Max,
                target: 13.0 / 9.0,
                tolerance: 1e-6,
                secondary: vec![SecondaryDef {
                    metric: Metric::AbsT2(3),
                    direction: Direction::Max,
                    target: 25.0 / 36.0,
                    tolerance: 1e-6,
                }],
                note: Some(
                    "17/36 has been reported for the |T2(3)| maximum of this class, but \
                     4/n^2 + 4/(n+1)^2 at n = 3 and direct evaluation of the extremal \
                     candidate both give 4/9 + 1/4 = 25/36; the computed value is reported",
                ),
            },
            settings,
        ),
        "E10" => run_search_experiment(
            id,
            SearchDef {
                description: "largest |T3(1)| over 1-3 atom bounded-turning generators",
                families: atom_families(GeneratorClass::BoundedTurning),
                metric: Metric::AbsT3(1),
                direction: Direction::Max,
                target: 35.0 / 9.0,
                tolerance: 1e-6,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E11" => run_sampling_experiment(
            id,
            "bounded-turning sampling of |T3(2)| against the proven bound 7/3; the best \
             known candidate attains 25/12",
            SampledClass::BoundedTurning,
            25.0 / 12.0,
            100_000,
            settings,
        ),
        "E12" => run_search_experiment(
            id,
            SearchDef {
                description: "extremes of T2(2) over the boundary families of the (a2, a3) \
                              region of typically real members",
                families: a23_boundary_families(),
                metric: Metric::T2(2),
                direction: Direction::Max,
                target: 1.25,
                tolerance: 1e-8,
                secondary: vec![SecondaryDef {
                    metric: Metric::T2(2),
                    direction: Direction::Min,
                    target: -9.0,
                    tolerance: 1e-8,
                }],
                note: None,
            },
            settings,
        ),
        "E13" => run_search_experiment(
            id,
            SearchDef {
                description: "largest T2(3) over the boundary families of the (a3, a4) region \
                              of typically real members",
                families: a34_boundary_families(),
                metric: Metric::T2(3),
                direction: Direction::Max,
                target: 9.0,
                tolerance: 1e-8,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E14" => run_search_experiment(
            id,
            SearchDef {
                description: "smallest T2(3) over the boundary families of the (a3, a4) region \
                              of typically real members",
                families: a34_boundary_families(),
                metric: Metric::T2(3),
                direction: Direction::Min,
                target: -7.0,
                tolerance: 1e-8,
                secondary: vec![],
                note: None,
            },
            settings,
        ),
        "E15" => run_search_experiment(
            id,
            SearchDef {
                description: "extremes of T3(1) over the boundary families of the (a2, a3) \
                              region of typically real members",
                families: a23_boundary_families(),
                metric: Metric::T3(1),
                direction: Direction::Max,
                target: 8.0,
                tolerance: 1e-8,
                secondary: vec![SecondaryDef {
                    metric: Metric::T3(1),
                    direction: Direction::Min,
                    target: -8.0,
                    tolerance: 1e-8,
                }],
                note: None,
            },
            settings,
        ),
        "E16" => run_range_experiment(id, settings),
        other => Err(Error::UnknownExperimentId(other.to_string())),
    }
}
