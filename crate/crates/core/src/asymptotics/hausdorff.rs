use super::limits::Polyline;

fn seg_dist(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let s = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    (p.0 - a.0 - s * dx).hypot(p.1 - a.1 - s * dy)
}

fn dist_to_set(p: (f64, f64), set: &[Polyline]) -> f64 {
    let mut best = f64::INFINITY;
    for line in set {
        if line.len() == 1 {
            best = best.min((p.0 - line[0].0).hypot(p.1 - line[0].1));
        }
        for w in line.windows(2) {
            best = best.min(seg_dist(p, w[0], w[1]));
        }
    }
    best
}

/// Points along each polyline, with segments subdivided to length at most `h`.
fn densify(set: &[Polyline], h: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for line in set {
        if let Some(&first) = line.first() {
            out.push(first);
        }
        for w in line.windows(2) {
            let len = (w[1].0 - w[0].0).hypot(w[1].1 - w[0].1);
            let k = ((len / h).ceil() as usize).max(1);
            for j in 1..=k {
                let s = j as f64 / k as f64;
                out.push((w[0].0 + s * (w[1].0 - w[0].0), w[0].1 + s * (w[1].1 - w[0].1)));
            }
        }
    }
    out
}

/// Directed distance `sup_{p ∈ a} dist(p, b)`.
pub fn directed_hausdorff(a: &[Polyline], b: &[Polyline]) -> f64 {
    densify(a, 1e-3).into_iter().map(|p| dist_to_set(p, b)).fold(0.0, f64::max)
}

/// Symmetric Hausdorff distance between two unions of polylines.
///
/// Vertices are densified to spacing `1e-3` and distances are taken to
/// segments, so the result is exact to about that resolution.
pub fn hausdorff_distance(a: &[Polyline], b: &[Polyline]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}
