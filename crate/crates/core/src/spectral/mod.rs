//! Spectral side of the cosine transform on lines (`i = 1`).
//!
//! The kernel `|cos(E,F)|^α = |⟨u,v⟩|^α` on `Gr_1(ℝⁿ) = S^{n−1}/±1` is
//! zonal, so it acts on even spherical harmonics of degree `2m` by a scalar
//! (Funk–Hecke):
//!
//! ```text
//! λ_{α,2m}(n) = ∫_{−1}^{1} |t|^α C_{2m}(t)/C_{2m}(1) (1−t²)^{(n−3)/2} dt  /  B(1/2, (n−1)/2)
//! ```
//!
//! with `C` the Gegenbauer polynomial of parameter `(n−2)/2`. Expanding `C`
//! in monomials turns each term into `B((α+2j+1)/2, (n−1)/2)`, which is
//! meromorphic in `α`. All of these Beta values are rational multiples of
//! the `j = 0` one, so the eigenvalue factors as one Beta germ times a
//! rational function of `α`, and zeros, poles and leading coefficients are
//! all decided exactly.

mod gegenbauer;
mod germ;
pub mod quadrature;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reducibility::is_reducible_closed;
use crate::types::{Character, FieldKind, Rational};

pub use germ::MeroValue;
use germ::{big, Germ};

/// Default number of harmonic rows in a spectral table.
pub const DEFAULT_TRUNCATION: u32 = 40;

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::domain(format!("the spectral model needs n >= 3, got {n}")));
    }
    Ok(())
}

/// Exact coefficients `c_0, …, c_{2m}` of the degree-`2m` Gegenbauer
/// polynomial with parameter `(n−2)/2` (odd entries vanish).
pub fn gegenbauer_even_coeffs(n: u32, m: u32) -> Result<Vec<BigRational>> {
    check_n(n)?;
    Ok(gegenbauer::cached_table(n, 2 * m as usize)[2 * m as usize].clone())
}

/// Germ of `B((α+2j+1)/2, (n−1)/2) = ∫_{−1}^{1} |t|^α t^{2j} (1−t²)^{(n−3)/2} dt`
/// at `α = α₀`, continued meromorphically.
pub fn half_beta_mero(alpha0: Rational, j: u32, n: u32) -> Result<MeroValue> {
    check_n(n)?;
    let x0 = (alpha0 + 1 + 2 * j as i64) / 2;
    Ok(MeroValue::from_germ(&beta_germ(x0, b_param(n))))
}

fn b_param(n: u32) -> Rational {
    Rational::new(n as i64 - 1, 2)
}

/// `B(x, b)` with `x = x0 + ε/2`.
fn beta_germ(x0: Rational, b: Rational) -> Germ {
    let slope = Rational::new(1, 2);
    Germ::gamma(x0, slope)
        .mul(&Germ::gamma(b, Rational::zero()))
        .mul(&Germ::gamma(x0 + b, slope).recip())
}

/// Polynomial in `u = x − x0` with exact coefficients, lowest degree first.
type Poly = Vec<BigRational>;

/// `(u + c) · p`, dropping terms of degree `≥ cap`.
fn mul_linear(p: &Poly, c: &BigRational, cap: usize) -> Poly {
    let mut out = vec![BigRational::zero(); (p.len() + 1).min(cap)];
    for (k, a) in p.iter().enumerate() {
        if k + 1 < out.len() {
            out[k + 1] += a;
        }
        out[k] += a * c;
    }
    out
}

fn add_scaled(p: &mut Poly, q: &Poly, s: &BigRational) {
    if p.len() < q.len() {
        p.resize(q.len(), BigRational::zero());
    }
    for (a, b) in p.iter_mut().zip(q) {
        *a += b * s;
    }
}

/// Lowest-order term of a polynomial in `u`, re-expressed in `ε = 2u`.
fn poly_germ(p: &Poly) -> Option<Germ> {
    let k = p.iter().position(|c| !c.is_zero())?;
    let scale = BigRational::new(BigInt::one(), BigInt::from(2).pow(k as u32));
    Some(Germ::monomial(k as i64, &p[k] * scale))
}

/// `Σ_j c_{2j} B(x+j, b) / B(x, b)` as the germ of `N(u)/D(u)` at `x0`.
///
/// Only the lowest non-zero Taylor coefficients matter, so the polynomials
/// are truncated and the cap is raised until both are found.
fn rational_factor(coeffs: &[BigRational], m: usize, x0: &BigRational, b: &BigRational) -> Germ {
    let mut cap = 4;
    loop {
        let full = cap > m + 1;
        // U_j = c_{2j} P_j + (x + j) U_{j+1},  P_j = Π_{j≤i<m} (x + i + b)
        let mut p: Poly = vec![BigRational::one()];
        let mut u: Poly = vec![coeffs[2 * m].clone()];
        for j in (0..m).rev() {
            let jq = BigRational::from_integer(BigInt::from(j));
            p = mul_linear(&p, &(x0 + &jq + b), cap);
            let mut next = mul_linear(&u, &(x0 + &jq), cap);
            add_scaled(&mut next, &p, &coeffs[2 * j]);
            u = next;
        }
        match (poly_germ(&u), poly_germ(&p)) {
            (Some(num), Some(den)) => return num.mul(&den.recip()),
            (None, _) if full => return Germ::constant(BigRational::zero()),
            _ => cap *= 4,
        }
    }
}

/// Shared per-`n` data for eigenvalue rows.
struct EigenContext {
    n: u32,
    table: std::sync::Arc<Vec<Vec<BigRational>>>,
}

impl EigenContext {
    fn new(n: u32, max_m: u32) -> Self {
        EigenContext { n, table: gegenbauer::cached_table(n, 2 * max_m as usize) }
    }

    fn eigenvalue(&self, alpha0: Rational, m: u32) -> MeroValue {
        let m = m as usize;
        let coeffs = &self.table[2 * m];
        let b = b_param(self.n);
        let x0 = (alpha0 + 1) / 2;
        let ratio = rational_factor(coeffs, m, &big(x0), &big(b));
        if ratio.coeff.is_zero() {
            return MeroValue::identically_zero();
        }
        let at_one: BigRational = coeffs.iter().sum();
        let norm = beta_germ(Rational::new(1, 2), b).mul(&Germ::constant(at_one));
        MeroValue::from_germ(&beta_germ(x0, b).mul(&ratio).mul(&norm.recip()))
    }
}

/// Laurent germ at `α₀` of the eigenvalue `λ_{α,2m}(n)` of the cosine
/// transform on lines acting on degree-`2m` harmonics.
pub fn eigenvalue_mero(n: u32, alpha0: Rational, m: u32) -> Result<MeroValue> {
    check_n(n)?;
    Ok(EigenContext::new(n, m).eigenvalue(alpha0, m))
}

/// Independent numerical value of `λ_{α,2m}(n)` for real `α > −1`, by
/// adaptive Gauss–Legendre quadrature of the Funk–Hecke integral.
///
/// The `t^α` singularity at 0 is removed by `t = u^{1/(1+α)}` when `α < 0`,
/// and the `(1−t²)^{(n−3)/2}` endpoint behaviour by `t = 1 − v²`.
pub fn eigenvalue_quadrature(n: u32, alpha: f64, m: u32) -> Result<f64> {
    check_n(n)?;
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::domain(format!("quadrature needs real alpha > -1, got {alpha}")));
    }
    let degree = 2 * m as usize;
    let at_one = gegenbauer::gegenbauer_eval(n, degree, 1.0);
    let zonal = |t: f64| gegenbauer::gegenbauer_eval(n, degree, t) / at_one;
    let num = weighted_integral(n, alpha, &zonal);
    let den = weighted_integral(n, 0.0, &|_| 1.0);
    Ok(num / den)
}

/// `∫_0^1 t^α (1−t²)^{(n−3)/2} g(t) dt`.
fn weighted_integral(n: u32, alpha: f64, g: &dyn Fn(f64) -> f64) -> f64 {
    const TOL: f64 = 1e-14;
    let beta = (n as f64 - 3.0) / 2.0;
    let h = |t: f64| (1.0 - t * t).powf(beta) * g(t);
    let near_zero = if alpha < 0.0 {
        let p = 1.0 + alpha;
        quadrature::adaptive(|u: f64| h(u.powf(1.0 / p)), 0.0, 0.5f64.powf(p), TOL) / p
    } else {
        quadrature::adaptive(|t: f64| t.powf(alpha) * h(t), 0.0, 0.5, TOL)
    };
    let near_one = quadrature::adaptive(
        |v: f64| {
            let t = 1.0 - v * v;
            2.0 * v.powi(n as i32 - 2) * (2.0 - v * v).powf(beta) * t.powf(alpha) * g(t)
        },
        0.0,
        0.5f64.sqrt(),
        TOL,
    );
    near_zero + near_one
}

/// Germs of `λ_{α,2m}(n)` at a fixed `α₀` for `0 ≤ m ≤ truncation`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralTable {
    pub n: u32,
    #[serde(with = "rational_string")]
    pub alpha0: Rational,
    pub truncation: u32,
    pub rows: BTreeMap<u32, MeroValue>,
}

impl SpectralTable {
    pub fn build(n: u32, alpha0: Rational, truncation: u32) -> Result<Self> {
        check_n(n)?;
        let ctx = EigenContext::new(n, truncation);
        let rows: Vec<(u32, MeroValue)> = (0..=truncation)
            .into_par_iter()
            .map(|m| (m, ctx.eigenvalue(alpha0, m)))
            .collect();
        Ok(SpectralTable { n, alpha0, truncation, rows: rows.into_iter().collect() })
    }

    /// Most singular order present: `T_α ~ (α−α₀)^{−k₀}·S_{α₀}` on the table.
    /// Identically vanishing rows never determine it.
    pub fn leading_pole_order(&self) -> Option<i64> {
        self.rows
            .values()
            .filter(|v| !v.is_identically_zero())
            .map(|v| v.pole_order)
            .max()
    }

    /// Eigenvalues of `S_{α₀}`: the coefficient of `(α−α₀)^{−k₀}` in every row.
    pub fn s_eigenvalues(&self) -> BTreeMap<u32, f64> {
        let k0 = self.leading_pole_order();
        self.rows
            .iter()
            .map(|(m, v)| {
                let e = if Some(v.pole_order) == k0 && !v.is_identically_zero() { v.leading.re } else { 0.0 };
                (*m, e)
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,pole_order,leading_re,leading_im,exact_zero\n");
        for (m, v) in &self.rows {
            out.push_str(&format!(
                "{m},{},{:e},{:e},{}\n",
                v.pole_order, v.leading.re, v.leading.im, v.exact_zero
            ));
        }
        out
    }
}

/// Whether `S_{α₀}` is invertible on the harmonics of degree `≤ 2·truncation`:
/// every row must carry the leading order `k₀` with a non-zero coefficient.
pub fn spectral_invertibility(n: u32, alpha0: Rational, truncation: u32) -> Result<(bool, SpectralTable)> {
    if truncation < 1 {
        return Err(Error::domain("truncation must be at least 1"));
    }
    let table = SpectralTable::build(n, alpha0, truncation)?;
    let k0 = table.leading_pole_order();
    let ok = table
        .rows
        .values()
        .all(|v| !v.is_identically_zero() && Some(v.pole_order) == k0);
    Ok((ok, table))
}

fn check_grassmann(n: u32, i: u32) -> Result<u32> {
    if i == 0 || i >= n {
        return Err(Error::domain(format!("need 1 <= i <= n-1, got n = {n}, i = {i}")));
    }
    Ok(i.min(n - i))
}

/// Non-invertibility test for `S^i_α` at rational `α`, with `r = min(i, n−i)`:
/// `α = 2k`, `α = −n−2k`, or (for `r > 1`) `α = 1−r+k` or `α = r−n−1−k`,
/// `k ≥ 0` an integer.
pub fn is_exceptional(n: u32, i: u32, alpha: Rational) -> Result<bool> {
    let r = check_grassmann(n, i)? as i64;
    if !alpha.is_integer() {
        return Ok(false);
    }
    let a = alpha.to_integer();
    let n = n as i64;
    let even_up = a >= 0 && a % 2 == 0;
    let even_down = a <= -n && (-n - a) % 2 == 0;
    let up = r > 1 && a >= 1 - r;
    let down = r > 1 && a < r - n;
    Ok(even_up || even_down || up || down)
}

/// All exceptional `α` in `[lo, hi]` (they are integers).
pub fn exceptional_alphas(n: u32, i: u32, lo: Rational, hi: Rational) -> Result<BTreeSet<Rational>> {
    check_grassmann(n, i)?;
    if lo > hi {
        return Err(Error::domain(format!("empty range [{lo}, {hi}]")));
    }
    let (a, b) = (lo.ceil().to_integer(), hi.floor().to_integer());
    if b.saturating_sub(a) > 1_000_000 {
        return Err(Error::domain("range too wide to enumerate"));
    }
    let mut out = BTreeSet::new();
    for v in a..=b {
        let q = Rational::from_integer(v);
        if is_exceptional(n, i, q)? {
            out.insert(q);
        }
    }
    Ok(out)
}

pub fn s_alpha_invertible(n: u32, i: u32, alpha0: Rational) -> Result<bool> {
    Ok(!is_exceptional(n, i, alpha0)?)
}

/// Invertibility of `S^i_{α₀}` compared with irreducibility of the induced
/// representation it intertwines, `ν^{α₀+n/2} × 1` on `GL_n(ℝ)` with the
/// character on `GL_i` and trivial sign part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertibilityCheck {
    pub n: u32,
    pub i: u32,
    #[serde(with = "rational_string")]
    pub alpha0: Rational,
    pub invertible: bool,
    pub irreducible: bool,
    pub consistent: bool,
}

pub fn invertibility_crosscheck(n: u32, i: u32, alpha0: Rational) -> Result<InvertibilityCheck> {
    let invertible = s_alpha_invertible(n, i, alpha0)?;
    let chi = Character::nu(FieldKind::Real, i, alpha0 + Rational::new(n as i64, 2));
    let irreducible = !is_reducible_closed(FieldKind::Real, n, i, &chi)?.reducible;
    Ok(InvertibilityCheck {
        n,
        i,
        alpha0,
        invertible,
        irreducible,
        consistent: invertible == irreducible,
    })
}

/// Products `λ_{α,2m}·λ_{−n−α,2m}` for `m ≤ truncation` and their largest
/// relative deviation from the `m = 0` product. The inverse of an invertible
/// `S_α` is a multiple of `S_{−n−α}`, so the products must not depend on `m`.
pub fn inverse_scalar_check(n: u32, alpha: Rational, truncation: u32) -> Result<(f64, Vec<f64>)> {
    check_n(n)?;
    let dual = -alpha - Rational::from_integer(n as i64);
    for a in [alpha, dual] {
        if is_exceptional(n, 1, a)? {
            return Err(Error::Precondition(format!("alpha = {a} is exceptional for n = {n}")));
        }
    }
    let ctx = EigenContext::new(n, truncation);
    let mut products = Vec::with_capacity(truncation as usize + 1);
    for m in 0..=truncation {
        let (x, y) = (ctx.eigenvalue(alpha, m), ctx.eigenvalue(dual, m));
        let (Some(x), Some(y)) = (finite_nonzero(&x), finite_nonzero(&y)) else {
            return Err(Error::Precondition(format!("eigenvalue germ at m = {m} is not finite and non-zero")));
        };
        products.push(x * y);
    }
    let p0 = products[0];
    let dev = products.iter().map(|p| (p / p0 - 1.0).abs()).fold(0.0, f64::max);
    Ok((dev, products))
}

fn finite_nonzero(v: &MeroValue) -> Option<f64> {
    (v.pole_order == 0 && !v.exact_zero).then_some(v.leading.re)
}

/// Rationals as `"num/den"` strings.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::types::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Exact value of a germ's leading coefficient when it is rational.
pub fn exact_leading(n: u32, alpha0: Rational, m: u32) -> Result<Option<f64>> {
    let v = eigenvalue_mero(n, alpha0, m)?;
    Ok(v.leading_is_rational.then_some(v.leading.re))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn bq(n: i64, d: i64) -> BigRational {
        big(q(n, d))
    }

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer_even_coeffs(3, 1).unwrap(), vec![bq(-1, 2), bq(0, 1), bq(3, 2)]);
        assert_eq!(gegenbauer_even_coeffs(7, 0).unwrap(), vec![bq(1, 1)]);
        assert_eq!(
            gegenbauer_even_coeffs(3, 2).unwrap(),
            vec![bq(3, 8), bq(0, 1), bq(-30, 8), bq(0, 1), bq(35, 8)]
        );
        assert!(gegenbauer_even_coeffs(2, 1).is_err());
    }

    #[test]
    fn half_beta_examples() {
        let v = half_beta_mero(q(0, 1), 0, 3).unwrap();
        assert_eq!(v.pole_order, 0);
        assert_eq!(v.leading.re, 2.0);
        assert!(v.leading_is_rational);

        let v = half_beta_mero(q(-1, 1), 0, 3).unwrap();
        assert_eq!(v.pole_order, 1);
        assert_eq!(v.leading.re, 2.0);

        let v = half_beta_mero(q(1, 1), 1, 3).unwrap();
        assert_eq!(v.pole_order, 0);
        assert_eq!(v.leading.re, 0.5);
    }

    #[test]
    fn half_beta_denominator_pole_cancels() {
        // n = 3: B(x, 1) = 1/x, so at α₀ = −3 (x = −1) the value is −1, not a pole
        let v = half_beta_mero(q(-3, 1), 0, 3).unwrap();
        assert_eq!(v.pole_order, 0);
        assert_eq!(v.leading.re, -1.0);
    }

    #[test]
    fn eigenvalue_examples() {
        let v = eigenvalue_mero(3, q(1, 1), 0).unwrap();
        assert_eq!((v.pole_order, v.leading.re), (0, 0.5));
        let v = eigenvalue_mero(3, q(1, 1), 1).unwrap();
        assert_eq!((v.pole_order, v.leading.re), (0, 0.125));
        let v = eigenvalue_mero(3, q(2, 1), 2).unwrap();
        assert!(v.exact_zero);
        assert_eq!(v.value().unwrap().re, 0.0);
        let v = eigenvalue_mero(3, q(-1, 1), 0).unwrap();
        assert_eq!((v.pole_order, v.leading.re), (1, 1.0));
    }

    #[test]
    fn normalization_is_exact() {
        for n in 3..=9 {
            let v = eigenvalue_mero(n, q(0, 1), 0).unwrap();
            assert_eq!(v.leading.re, 1.0);
            assert!(v.leading_is_rational);
        }
    }

    #[test]
    fn quadrature_examples() {
        assert!((eigenvalue_quadrature(3, 1.0, 1).unwrap() - 0.125).abs() < 1e-10);
        assert!((eigenvalue_quadrature(4, 0.0, 0).unwrap() - 1.0).abs() < 1e-12);
        let mero = eigenvalue_mero(3, q(5, 2), 3).unwrap().leading.re;
        assert!((eigenvalue_quadrature(3, 2.5, 3).unwrap() - mero).abs() < 1e-8);
        assert!(eigenvalue_quadrature(3, -1.0, 0).is_err());
    }

    #[test]
    fn exceptional_examples() {
        let ints = |v: &[i64]| v.iter().map(|&a| Rational::from_integer(a)).collect::<BTreeSet<_>>();
        assert_eq!(
            exceptional_alphas(4, 1, q(-10, 1), q(6, 1)).unwrap(),
            ints(&[0, 2, 4, 6, -4, -6, -8, -10])
        );
        let all_but: Vec<i64> = (-6..=4).filter(|a| *a != -2).collect();
        assert_eq!(exceptional_alphas(4, 2, q(-6, 1), q(4, 1)).unwrap(), ints(&all_but));
        assert_eq!(exceptional_alphas(3, 1, q(-1, 1), q(1, 1)).unwrap(), ints(&[0]));
        assert!(exceptional_alphas(3, 3, q(0, 1), q(1, 1)).is_err());
        assert!(exceptional_alphas(3, 1, q(1, 1), q(0, 1)).is_err());
    }

    #[test]
    fn invertible_examples() {
        assert!(s_alpha_invertible(4, 2, q(-2, 1)).unwrap());
        assert!(!s_alpha_invertible(5, 1, q(2, 1)).unwrap());
        assert!(s_alpha_invertible(4, 1, q(-1, 1)).unwrap());
        assert!(s_alpha_invertible(4, 1, q(1, 2)).unwrap());
    }

    #[test]
    fn spectral_invertibility_examples() {
        let (ok, t) = spectral_invertibility(3, q(2, 1), 20).unwrap();
        assert!(!ok);
        assert!(!t.rows[&0].exact_zero && !t.rows[&1].exact_zero);
        assert!((2..=20).all(|m| t.rows[&m].exact_zero));

        assert!(spectral_invertibility(3, q(1, 1), 20).unwrap().0);
        assert!(!spectral_invertibility(3, q(-5, 1), 20).unwrap().0);
        assert!(spectral_invertibility(3, q(1, 1), 0).is_err());
    }

    #[test]
    fn inverse_check_examples() {
        let (dev, p) = inverse_scalar_check(3, q(1, 1), 10).unwrap();
        assert!(dev <= 1e-8, "{dev}");
        assert_eq!(p.len(), 11);
        let (dev, _) = inverse_scalar_check(5, q(1, 2), 10).unwrap();
        assert!(dev <= 1e-8, "{dev}");
        assert!(matches!(inverse_scalar_check(3, q(2, 1), 10), Err(Error::Precondition(_))));
    }

    #[test]
    fn csv_header_and_rows() {
        let t = SpectralTable::build(3, q(2, 1), 3).unwrap();
        let csv = t.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "m,pole_order,leading_re,leading_im,exact_zero");
        assert_eq!(lines.len(), 5);
        assert!(lines[3].ends_with("true"));
    }
}
