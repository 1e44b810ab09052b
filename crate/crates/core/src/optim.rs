//! One- and two-dimensional derivative-free maximizers used by the fitting code.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Outcome of a golden-section search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenResult {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
    /// Final bracket `(lo, hi)`.
    pub bracket: (f64, f64),
}

/// Maximizes a unimodal `f` on `[lo, hi]` until the bracket is narrower than `tol`.
pub fn golden_section_max<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> GoldenResult
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = sanitize(f(c));
    let mut fd = sanitize(f(d));
    let mut evaluations = 2;
    while (b - a) > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = sanitize(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = sanitize(f(d));
        }
        evaluations += 1;
        if evaluations > 10_000 {
            break;
        }
    }
    let (x, value) = if fc >= fd { (c, fc) } else { (d, fd) };
    GoldenResult {
        x,
        value,
        evaluations,
        bracket: (a, b),
    }
}

fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

/// Nelder-Mead settings.
#[derive(Debug, Clone)]
pub struct SimplexOptions {
    /// Edge lengths of the initial simplex, one per coordinate.
    pub initial_step: Vec<f64>,
    pub max_evaluations: usize,
    /// Stop when the spread of values across the simplex falls below this.
    pub value_tol: f64,
    /// ... and every vertex lies within this distance of the best one.
    pub point_tol: f64,
    /// Number of times the simplex is rebuilt around the incumbent after convergence.
    pub restarts: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions {
            initial_step: vec![0.1, 0.1],
            max_evaluations: 4000,
            value_tol: 1e-11,
            point_tol: 1e-9,
            restarts: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub converged: bool,
    /// Vertices of the last simplex.
    pub simplex: Vec<Vec<f64>>,
}

/// Maximizes `f` with the Nelder-Mead simplex method.
///
/// Non-finite objective values are treated as `-inf`, so the simplex simply
/// retreats from regions where the objective is undefined. After each
/// convergence the simplex is rebuilt around the best vertex (up to
/// `restarts` times); this escapes the collapsed simplices that jump
/// discontinuities tend to produce.
pub fn nelder_mead_max<F>(mut f: F, start: &[f64], opts: &SimplexOptions) -> SimplexResult
where
    F: FnMut(&[f64]) -> f64,
{
    let mut neg = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            -v
        } else {
            f64::INFINITY
        }
    };
    let mut evaluations = 0;
    let mut best_x = start.to_vec();
    let mut best_v = neg(&best_x);
    evaluations += 1;
    let mut last_simplex = Vec::new();
    let mut converged = false;

    for _round in 0..=opts.restarts {
        let (x, v, simplex, ok) =
            simplex_round(&mut neg, &best_x, best_v, opts, &mut evaluations);
        last_simplex = simplex;
        let improved = best_v - v;
        converged = ok;
        if v <= best_v {
            best_x = x;
            best_v = v;
        }
        if !ok || improved.abs() <= opts.value_tol {
            break;
        }
    }
    SimplexResult {
        x: best_x,
        value: -best_v,
        evaluations,
        converged,
        simplex: last_simplex,
    }
}

type Round = (Vec<f64>, f64, Vec<Vec<f64>>, bool);

fn simplex_round<F>(
    f: &mut F,
    start: &[f64],
    start_value: f64,
    opts: &SimplexOptions,
    evaluations: &mut usize,
) -> Round
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = start.len();
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    let mut vals: Vec<f64> = Vec::with_capacity(dim + 1);
    pts.push(start.to_vec());
    vals.push(start_value);
    for i in 0..dim {
        let mut p = start.to_vec();
        p[i] += opts.initial_step.get(i).copied().unwrap_or(0.1);
        vals.push(f(&p));
        *evaluations += 1;
        pts.push(p);
    }

    loop {
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        pts = order.iter().map(|&i| pts[i].clone()).collect();
        vals = order.iter().map(|&i| vals[i]).collect();

        let spread = vals[dim] - vals[0];
        let size = pts[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&pts[0])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if (spread.is_finite() && spread <= opts.value_tol && size <= opts.point_tol.max(1e-4))
            || size <= opts.point_tol
        {
            return (pts[0].clone(), vals[0], pts, true);
        }
        if *evaluations >= opts.max_evaluations {
            return (pts[0].clone(), vals[0], pts, false);
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|j| pts[..dim].iter().map(|p| p[j]).sum::<f64>() / dim as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&pts[dim])
                .map(|(c, w)| c + t * (w - c))
                .collect()
        };

        let xr = along(-1.0);
        let fr = f(&xr);
        *evaluations += 1;
        if fr < vals[0] {
            let xe = along(-2.0);
            let fe = f(&xe);
            *evaluations += 1;
            if fe < fr {
                pts[dim] = xe;
                vals[dim] = fe;
            } else {
                pts[dim] = xr;
                vals[dim] = fr;
            }
            continue;
        }
        if fr < vals[dim - 1] {
            pts[dim] = xr;
            vals[dim] = fr;
            continue;
        }
        let (xc, fc) = if fr < vals[dim] {
            let xc = along(-0.5);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = along(0.5);
            let fc = f(&xc);
            (xc, fc)
        };
        *evaluations += 1;
        if fc < vals[dim].min(fr) {
            pts[dim] = xc;
            vals[dim] = fc;
            continue;
        }
        // shrink toward the best vertex
        for i in 1..=dim {
            let p: Vec<f64> = pts[0]
                .iter()
                .zip(&pts[i])
                .map(|(b, q)| b + 0.5 * (q - b))
                .collect();
            vals[i] = f(&p);
            pts[i] = p;
            *evaluations += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let r = golden_section_max(|x| -(x - 1.3).powi(2), -4.0, 7.0, 1e-10);
        assert!((r.x - 1.3).abs() < 1e-8);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-10);
    }

    #[test]
    fn golden_reports_edge_for_monotone() {
        let r = golden_section_max(|x| x, 0.0, 1.0, 1e-9);
        assert!(r.x > 1.0 - 1e-8);
    }

    #[test]
    fn simplex_maximizes_rosenbrock() {
        let f = |p: &[f64]| -((1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2));
        let opts = SimplexOptions {
            initial_step: vec![0.5, 0.5],
            ..Default::default()
        };
        let r = nelder_mead_max(f, &[-1.2, 1.0], &opts);
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-4, "{:?}", r.x);
        assert!((r.x[1] - 1.0).abs() < 1e-4, "{:?}", r.x);
    }

    #[test]
    fn simplex_avoids_undefined_region() {
        // log barrier: undefined for x <= 0
        let f = |p: &[f64]| p[0].ln() - p[0] + p[1].ln() - 2.0 * p[1];
        let opts = SimplexOptions {
            initial_step: vec![1.0, 1.0],
            ..Default::default()
        };
        let r = nelder_mead_max(f, &[3.0, 3.0], &opts);
        assert!((r.x[0] - 1.0).abs() < 1e-4);
        assert!((r.x[1] - 0.5).abs() < 1e-4);
    }
}
