//! Derivative-free maximization over small boxes: deterministic lattice scans
//! followed by Nelder–Mead polishing. All objective landscapes in this crate
//! are low-degree polynomial or trigonometric in at most six variables, so
//! nothing fancier is warranted.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{int, real, Scalar};

/// Hard cap on lattice sizes.
pub const GRID_BUDGET: u128 = 100_000_000;

/// Lattice points whose value is within this of the best are reported as ties.
pub const TIE_EPS: f64 = 1e-9;

const MAX_TIES: usize = 32;

/// One box dimension. `wrap` marks periodic angles: the lattice then omits the
/// upper endpoint and refinement skips clamping.
#[derive(Clone, Debug)]
pub struct DimSpec<F> {
    pub name: String,
    pub lower: F,
    pub upper: F,
    pub wrap: bool,
}

impl<F: Scalar> DimSpec<F> {
    pub fn new(name: impl Into<String>, lower: F, upper: F) -> Self {
        Self {
            name: name.into(),
            lower,
            upper,
            wrap: false,
        }
    }

    pub fn periodic(name: impl Into<String>, lower: F, upper: F) -> Self {
        Self {
            name: name.into(),
            lower,
            upper,
            wrap: true,
        }
    }
}

/// Box search domain, at most 8 dimensions.
#[derive(Clone, Debug)]
pub struct SearchDomain<F> {
    dims: Vec<DimSpec<F>>,
}

impl<F: Scalar> SearchDomain<F> {
    pub fn new(dims: Vec<DimSpec<F>>) -> Result<Self> {
        if dims.is_empty() || dims.len() > 8 {
            return Err(Error::ParamOutOfRange(format!(
                "domain needs 1..=8 dimensions, got {}",
                dims.len()
            )));
        }
        for d in &dims {
            // partial_cmp also rejects NaN bounds
            if d.lower.partial_cmp(&d.upper) != Some(std::cmp::Ordering::Less) {
                return Err(Error::ParamOutOfRange(format!(
                    "dimension `{}` has empty range",
                    d.name
                )));
            }
        }
        Ok(Self { dims })
    }

    pub fn dims(&self) -> &[DimSpec<F>] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Clamp non-periodic coordinates into the box.
    pub fn clamp(&self, x: &mut [F]) {
        for (xi, d) in x.iter_mut().zip(&self.dims) {
            if !d.wrap {
                *xi = (*xi).max(d.lower).min(d.upper);
            }
        }
    }

    fn lattice_coord(&self, dim: usize, index: usize, resolution: usize) -> F {
        let d = &self.dims[dim];
        let span = d.upper - d.lower;
        if d.wrap {
            d.lower + span * int::<F>(index) / int::<F>(resolution)
        } else {
            d.lower + span * int::<F>(index) / int::<F>(resolution - 1)
        }
    }

    /// Decode a flat lattice index, most significant digit first, so ascending
    /// flat indices enumerate parameter vectors in lexicographic order.
    fn lattice_point(&self, mut flat: usize, resolution: usize) -> Vec<F> {
        let dims = self.dims.len();
        let mut out = vec![F::zero(); dims];
        for dim in (0..dims).rev() {
            out[dim] = self.lattice_coord(dim, flat % resolution, resolution);
            flat /= resolution;
        }
        out
    }
}

/// Result of a lattice scan.
#[derive(Clone, Debug)]
pub struct GridOutcome<F> {
    pub params: Vec<F>,
    pub value: F,
    /// Lattice points within [`TIE_EPS`] of the best, lexicographically
    /// ordered, capped at 32 (the reported `params` is the first of them).
    pub ties: Vec<Vec<F>>,
    /// Best `k` lattice points requested by the caller, value-descending.
    pub starts: Vec<Vec<F>>,
}

/// Exhaustive lattice maximization with `resolution` points per dimension.
/// Deterministic: equal values resolve to the lexicographically smallest
/// parameter vector.
pub fn grid_search<F, O>(objective: &O, domain: &SearchDomain<F>, resolution: usize) -> Result<GridOutcome<F>>
where
    F: Scalar,
    O: Fn(&[F]) -> F + Sync,
{
    grid_search_multi(objective, domain, resolution, 1)
}

/// Lattice maximization that also keeps the best `starts` cells for
/// multi-start refinement.
pub fn grid_search_multi<F, O>(
    objective: &O,
    domain: &SearchDomain<F>,
    resolution: usize,
    starts: usize,
) -> Result<GridOutcome<F>>
where
    F: Scalar,
    O: Fn(&[F]) -> F + Sync,
{
    if resolution < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "grid resolution must be >= 3, got {resolution}"
        )));
    }
    let dims = domain.len();
    let points = (resolution as u128).pow(dims as u32);
    if points > GRID_BUDGET {
        return Err(Error::BudgetExceeded {
            points,
            budget: GRID_BUDGET,
        });
    }
    let total = points as usize;
    let keep = starts.max(1);

    // Per-chunk top-k candidates, then a deterministic global merge.
    let chunk = 1 << 14;
    let mut candidates: Vec<(F, usize)> = (0..total)
        .into_par_iter()
        .chunks(chunk)
        .map(|idxs| {
            let mut local: Vec<(F, usize)> = idxs
                .into_iter()
                .map(|i| (objective(&domain.lattice_point(i, resolution)), i))
                .collect();
            sort_candidates(&mut local);
            local.truncate(keep.max(MAX_TIES));
            local
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            sort_candidates(&mut a);
            a.truncate(keep.max(MAX_TIES));
            a
        });
    sort_candidates(&mut candidates);

    let (best_value, _) = candidates[0];
    let tie_eps = real::<F>(TIE_EPS);
    let mut tie_idx: Vec<usize> = candidates
        .iter()
        .take(MAX_TIES)
        .filter(|(v, _)| *v >= best_value - tie_eps)
        .map(|&(_, i)| i)
        .collect();
    tie_idx.sort_unstable();
    let ties: Vec<Vec<F>> = tie_idx
        .iter()
        .map(|&i| domain.lattice_point(i, resolution))
        .collect();
    let params = ties[0].clone();

    Ok(GridOutcome {
        params,
        value: best_value,
        starts: candidates
            .iter()
            .take(keep)
            .map(|&(_, i)| domain.lattice_point(i, resolution))
            .collect(),
        ties,
    })
}

fn sort_candidates<F: Scalar>(v: &mut [(F, usize)]) {
    v.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
}

/// Nelder–Mead polish (reflection 1, expansion 2, contraction ½, shrink ½)
/// maximizing `objective` from `start`, box constraints enforced by clamping.
/// Stops when the simplex diameter drops below 1e-10 or after 500 iterations;
/// the returned point is never worse than the start.
pub fn refine<F, O>(objective: &O, start: &[F], domain: &SearchDomain<F>) -> (Vec<F>, F)
where
    F: Scalar,
    O: Fn(&[F]) -> F + Sync,
{
    let dims = domain.len();
    assert_eq!(start.len(), dims, "start point dimension mismatch");
    let eval = |x: &[F]| objective(x);

    // initial simplex: start plus one 5%-of-box step per dimension
    let mut simplex: Vec<Vec<F>> = Vec::with_capacity(dims + 1);
    let mut clamped_start = start.to_vec();
    domain.clamp(&mut clamped_start);
    simplex.push(clamped_start.clone());
    for d in 0..dims {
        let spec = &domain.dims()[d];
        let span = spec.upper - spec.lower;
        let step = span * real::<F>(0.05);
        let mut v = clamped_start.clone();
        v[d] += step;
        if !spec.wrap && v[d] > spec.upper {
            v[d] = clamped_start[d] - step;
        }
        domain.clamp(&mut v);
        simplex.push(v);
    }
    let mut values: Vec<F> = simplex.iter().map(|v| eval(v)).collect();

    let mut best_point = clamped_start;
    let mut best_value = values[0];
    for (v, &fv) in simplex.iter().zip(&values) {
        if fv > best_value {
            best_value = fv;
            best_point = v.clone();
        }
    }

    let (alpha, gamma, rho, sigma) = (
        real::<F>(1.0),
        real::<F>(2.0),
        real::<F>(0.5),
        real::<F>(0.5),
    );
    let diameter_tol = real::<F>(1e-10);

    for _ in 0..500 {
        // order vertices best-first (maximization)
        let mut order: Vec<usize> = (0..=dims).collect();
        order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
        let reordered: Vec<Vec<F>> = order.iter().map(|&i| simplex[i].clone()).collect();
        let revalues: Vec<F> = order.iter().map(|&i| values[i]).collect();
        simplex = reordered;
        values = revalues;

        if values[0] > best_value {
            best_value = values[0];
            best_point = simplex[0].clone();
        }

        let diameter = simplex[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&simplex[0])
                    .map(|(&a, &b)| (a - b).abs())
                    .fold(F::zero(), F::max)
            })
            .fold(F::zero(), F::max);
        if diameter < diameter_tol {
            break;
        }

        // centroid of all but the worst
        let mut centroid = vec![F::zero(); dims];
        for v in &simplex[..dims] {
            for (c, &x) in centroid.iter_mut().zip(v) {
                *c += x;
            }
        }
        for c in centroid.iter_mut() {
            *c /= int::<F>(dims);
        }

        let worst = values[dims];
        let second_worst = values[dims - 1];

        let blend = |t: F| -> Vec<F> {
            let mut v: Vec<F> = centroid
                .iter()
                .zip(&simplex[dims])
                .map(|(&c, &w)| c + t * (c - w))
                .collect();
            domain.clamp(&mut v);
            v
        };

        let reflected = blend(alpha);
        let f_reflected = eval(&reflected);
        if f_reflected > values[0] {
            let expanded = blend(gamma);
            let f_expanded = eval(&expanded);
            if f_expanded > f_reflected {
                simplex[dims] = expanded;
                values[dims] = f_expanded;
            } else {
                simplex[dims] = reflected;
                values[dims] = f_reflected;
            }
        } else if f_reflected > second_worst {
            simplex[dims] = reflected;
            values[dims] = f_reflected;
        } else {
            let contracted = blend(-rho);
            let f_contracted = eval(&contracted);
            if f_contracted > worst {
                simplex[dims] = contracted;
                values[dims] = f_contracted;
            } else {
                // shrink toward the best vertex
                for i in 1..=dims {
                    let target: Vec<F> = simplex[i]
                        .iter()
                        .zip(&simplex[0])
                        .map(|(&x, &b)| b + sigma * (x - b))
                        .collect();
                    simplex[i] = target;
                    values[i] = eval(&simplex[i]);
                }
            }
        }
    }

    for (v, &fv) in simplex.iter().zip(&values) {
        if fv > best_value {
            best_value = fv;
            best_point = v.clone();
        }
    }
    (best_point, best_value)
}
