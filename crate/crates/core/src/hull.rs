//! Planar convex hulls (monotone chain) and convex-polygon containment.

use crate::scalar::Scalar;

fn cross<F: Scalar>(o: [F; 2], a: [F; 2], b: [F; 2]) -> F {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn dist2<F: Scalar>(a: [F; 2], b: [F; 2]) -> F {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    dx * dx + dy * dy
}

/// Convex hull of a point set, counterclockwise, via Andrew's monotone chain.
///
/// Consecutive vertices closer than `dedup_eps` are merged. Degenerate inputs
/// (all points collinear) yield the two extreme points of the segment.
pub fn convex_hull<F: Scalar>(points: &[[F; 2]], dedup_eps: F) -> Vec<[F; 2]> {
    let mut pts: Vec<[F; 2]> = points.to_vec();
    pts.sort_by(|a, b| {
        a[0].partial_cmp(&b[0])
            .unwrap()
            .then(a[1].partial_cmp(&b[1]).unwrap())
    });
    pts.dedup_by(|a, b| dist2(*a, *b) <= dedup_eps * dedup_eps);
    if pts.len() < 3 {
        return pts;
    }

    let mut lower: Vec<[F; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= F::zero()
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[F; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= F::zero()
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);

    // collinear degenerations can survive the chains
    if lower.len() < 2 {
        let mut ends = vec![pts[0], pts[pts.len() - 1]];
        ends.dedup_by(|a, b| dist2(*a, *b) <= dedup_eps * dedup_eps);
        return ends;
    }
    lower
}

/// Signed distance check: `true` iff `p` lies inside the counterclockwise
/// convex polygon, or within distance `tol` of it.
pub fn polygon_contains<F: Scalar>(polygon: &[[F; 2]], p: [F; 2], tol: F) -> bool {
    match polygon.len() {
        0 => false,
        1 => dist2(polygon[0], p) <= tol * tol,
        2 => segment_distance(polygon[0], polygon[1], p) <= tol,
        _ => {
            for i in 0..polygon.len() {
                let a = polygon[i];
                let b = polygon[(i + 1) % polygon.len()];
                let edge = dist2(a, b).sqrt();
                if edge == F::zero() {
                    continue;
                }
                // perpendicular distance of p left of edge a->b
                if cross(a, b, p) / edge < -tol {
                    return false;
                }
            }
            true
        }
    }
}

/// Euclidean distance from `p` to the segment `ab`.
pub fn segment_distance<F: Scalar>(a: [F; 2], b: [F; 2], p: [F; 2]) -> F {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    if len2 == F::zero() {
        return dist2(a, p).sqrt();
    }
    let t = ((ap[0] * ab[0] + ap[1] * ab[1]) / len2)
        .max(F::zero())
        .min(F::one());
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    dist2(q, p).sqrt()
}
