//! Points of the real Grassmannian `Gr_i(ℝⁿ)`, the volume-distortion cosine
//! between two `i`-planes, invariant sampling, and Monte-Carlo evaluation of
//! the cosine transform `∫ |cos(E,F)|^α f(F) dF`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orthonormality tolerance of a stored frame.
pub const FRAME_TOL: f64 = 1e-12;
/// Orthogonality tolerance accepted for group elements.
pub const ORTHOGONAL_TOL: f64 = 1e-10;

/// An `n × i` matrix with orthonormal columns spanning a point of `Gr_i(ℝⁿ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    columns: DMatrix<f64>,
}

fn max_abs_dev_from_identity(m: &DMatrix<f64>) -> f64 {
    let id = DMatrix::<f64>::identity(m.nrows(), m.ncols());
    (m - id).amax()
}

impl Frame {
    /// Wraps a matrix whose columns are already orthonormal.
    pub fn new(columns: DMatrix<f64>) -> Result<Self> {
        let (n, i) = columns.shape();
        if i == 0 || i >= n {
            return Err(Error::domain(format!("need 1 <= i <= n-1, got n = {n}, i = {i}")));
        }
        let dev = max_abs_dev_from_identity(&(columns.transpose() * &columns));
        if dev > FRAME_TOL {
            return Err(Error::validation("columns", format!("not orthonormal (deviation {dev:e})")));
        }
        Ok(Frame { columns })
    }

    /// Orthonormalizes the columns of `m` (thin QR) and wraps the result.
    pub fn orthonormalize(m: DMatrix<f64>) -> Result<Self> {
        let (n, i) = m.shape();
        if i == 0 || i >= n {
            return Err(Error::domain(format!("need 1 <= i <= n-1, got n = {n}, i = {i}")));
        }
        let qr = m.qr();
        if qr.r().diagonal().iter().any(|d| d.abs() < 1e-300) {
            return Err(Error::validation("columns", "linearly dependent"));
        }
        Frame::new(qr.q())
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Result<Self> {
        let mut m = DMatrix::zeros(n, indices.len());
        for (c, &k) in indices.iter().enumerate() {
            if k >= n {
                return Err(Error::domain(format!("basis index {k} out of range for n = {n}")));
            }
            m[(k, c)] = 1.0;
        }
        Frame::new(m)
    }

    pub fn n(&self) -> usize {
        self.columns.nrows()
    }

    pub fn i(&self) -> usize {
        self.columns.ncols()
    }

    pub fn columns(&self) -> &DMatrix<f64> {
        &self.columns
    }

    /// Row-major entries, the serialized form.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.columns.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let i = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != i) {
            return Err(Error::validation("columns", "ragged rows"));
        }
        Frame::new(DMatrix::from_fn(n, i, |a, b| rows[a][b]))
    }
}

impl Serialize for Frame {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Frame {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        Frame::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `|cos(E, F)|`: the factor by which orthogonal projection `E → F` scales
/// `i`-dimensional volume, i.e. `|det(Q_Fᵀ Q_E)|`.
///
/// Evaluated as the product of singular values, which stays accurate when the
/// planes are nearly orthogonal.
pub fn cosine(e: &Frame, f: &Frame) -> Result<f64> {
    if e.n() != f.n() || e.i() != f.i() {
        return Err(Error::domain(format!(
            "frame shapes differ: {}x{} vs {}x{}",
            e.n(),
            e.i(),
            f.n(),
            f.i()
        )));
    }
    let m = f.columns.transpose() * &e.columns;
    let c: f64 = m.singular_values().iter().product();
    debug_assert!(c <= 1.0 + 1e-9, "cosine {c} exceeds 1");
    Ok(c.clamp(0.0, 1.0))
}

/// Samples a frame whose span is distributed by the `O(n)`-invariant
/// probability measure on `Gr_i(ℝⁿ)`.
pub fn sample_frame<R: Rng + ?Sized>(n: usize, i: usize, rng: &mut R) -> Result<Frame> {
    if i == 0 || i >= n {
        return Err(Error::domain(format!("need 1 <= i <= n-1, got n = {n}, i = {i}")));
    }
    let g = DMatrix::<f64>::from_fn(n, i, |_, _| rng.sample(StandardNormal));
    Frame::orthonormalize(g)
}

/// Samples an `n × n` orthogonal matrix from Haar measure.
pub fn sample_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    let qr = g.qr();
    let mut q = qr.q();
    // sign fix so the distribution is exactly Haar
    let r = qr.r();
    for c in 0..n {
        if r[(c, c)] < 0.0 {
            q.column_mut(c).neg_mut();
        }
    }
    q
}

/// `g · E` for an orthogonal `g`.
pub fn act_orthogonal(g: &DMatrix<f64>, e: &Frame) -> Result<Frame> {
    if g.nrows() != e.n() || g.ncols() != e.n() {
        return Err(Error::domain("group element has the wrong size"));
    }
    let dev = max_abs_dev_from_identity(&(g.transpose() * g));
    if dev > ORTHOGONAL_TOL {
        return Err(Error::validation("g", format!("not orthogonal (deviation {dev:e})")));
    }
    let moved = g * &e.columns;
    match Frame::new(moved.clone()) {
        Ok(f) => Ok(f),
        // g is only orthogonal to ORTHOGONAL_TOL; restore FRAME_TOL
        Err(_) => Frame::orthonormalize(moved),
    }
}

/// Monte-Carlo estimate with its bookkeeping.
///
/// `value`/`stderr` are the real part; `value_im`/`stderr_im` are zero for
/// real kernels. `rejected` counts samples with cosine 0 that were redrawn
/// because `Re α ≤ 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub value: f64,
    pub stderr: f64,
    pub value_im: f64,
    pub stderr_im: f64,
    pub samples: u64,
    pub seed: u64,
    pub rejected: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Number of independent RNG streams. Results depend on this, not on
    /// the number of threads rayon happens to use.
    pub streams: u64,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig { samples, seed, streams: 8 }
    }
}

/// Running mean/variance (Welford) that merges associatively.
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(a: Moments, b: Moments) -> Moments {
        if a.count == 0 {
            return b;
        }
        if b.count == 0 {
            return a;
        }
        let count = a.count + b.count;
        let d = b.mean - a.mean;
        let mean = a.mean + d * b.count as f64 / count as f64;
        let m2 = a.m2 + b.m2 + d * d * (a.count as f64 * b.count as f64) / count as f64;
        Moments { count, mean, m2 }
    }

    fn stderr(&self) -> f64 {
        if self.count < 2 {
            return f64::NAN;
        }
        (self.m2 / (self.count - 1) as f64).sqrt() / (self.count as f64).sqrt()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct StreamAcc {
    re: Moments,
    im: Moments,
    rejected: u64,
}

fn merge_pairwise(mut parts: Vec<StreamAcc>) -> StreamAcc {
    while parts.len() > 1 {
        parts = parts
            .chunks(2)
            .map(|c| match c {
                [a, b] => StreamAcc {
                    re: Moments::merge(a.re, b.re),
                    im: Moments::merge(a.im, b.im),
                    rejected: a.rejected + b.rejected,
                },
                [a] => *a,
                _ => unreachable!(),
            })
            .collect();
    }
    parts.pop().unwrap_or_default()
}

/// Monte-Carlo evaluation of `(T_α f)(E) = ∫ |cos(E,F)|^α f(F) dF` over the
/// invariant probability measure. Requires `Re α > −1`, where the integral
/// converges absolutely; elsewhere use the meromorphic continuation in
/// [`crate::spectral`].
pub fn cosine_transform_mc<Fun>(f: &Fun, e: &Frame, alpha: Complex64, cfg: McConfig) -> Result<McEstimate>
where
    Fun: Fn(&Frame) -> f64 + Sync,
{
    if alpha.re.is_nan() || alpha.re <= -1.0 {
        return Err(Error::domain(format!(
            "Re(alpha) = {} <= -1: the integral diverges, use the spectral continuation instead",
            alpha.re
        )));
    }
    if cfg.samples < 2 || cfg.streams == 0 {
        return Err(Error::domain("need at least 2 samples and 1 stream"));
    }
    let (n, i) = (e.n(), e.i());
    let streams = cfg.streams.min(cfg.samples);
    let parts: Vec<StreamAcc> = (0..streams)
        .into_par_iter()
        .map(|s| -> Result<StreamAcc> {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(s);
            let quota = cfg.samples / streams + u64::from(s < cfg.samples % streams);
            let mut acc = StreamAcc::default();
            while acc.re.count < quota {
                let frame = sample_frame(n, i, &mut rng)?;
                let c = cosine(e, &frame)?;
                let kernel = if c == 0.0 {
                    if alpha.re > 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        acc.rejected += 1;
                        continue;
                    }
                } else {
                    (alpha * c.ln()).exp()
                };
                let v = kernel * f(&frame);
                acc.re.push(v.re);
                acc.im.push(v.im);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let total = merge_pairwise(parts);
    Ok(McEstimate {
        value: total.re.mean,
        stderr: total.re.stderr(),
        value_im: total.im.mean,
        stderr_im: total.im.stderr(),
        samples: total.re.count,
        seed: cfg.seed,
        rejected: total.rejected,
    })
}
