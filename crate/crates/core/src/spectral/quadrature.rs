//! Adaptive Gauss–Legendre quadrature.

use std::f64::consts::PI;
use std::sync::OnceLock;

const NODES: usize = 20;
const MAX_DEPTH: u32 = 48;

/// Nodes and weights of the `npts`-point Gauss–Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_npts` from Chebyshev initial guesses.
pub fn gauss_legendre(npts: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; npts];
    let mut weights = vec![0.0; npts];
    for i in 0..npts.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (npts as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=npts {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = npts as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[npts - 1 - i] = x;
        weights[i] = w;
        weights[npts - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(NODES))
}

fn fixed<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (x, w) = rule();
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    half * x.iter().zip(w).map(|(xi, wi)| wi * f(mid + half * xi)).sum::<f64>()
}

fn refine<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = (a + b) / 2.0;
    let left = fixed(f, a, m);
    let right = fixed(f, m, b);
    let sum = left + right;
    if depth >= MAX_DEPTH || (sum - whole).abs() <= tol.max(4.0 * f64::EPSILON * sum.abs()) {
        return sum;
    }
    refine(f, a, m, left, tol / 2.0, depth + 1) + refine(f, m, b, right, tol / 2.0, depth + 1)
}

/// `∫_a^b f` to absolute tolerance `tol` by recursive bisection.
pub fn adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let whole = fixed(&f, a, b);
    refine(&f, a, b, whole, tol, 0)
}
