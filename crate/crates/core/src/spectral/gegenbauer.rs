//! Gegenbauer polynomials `C_d^{(λ)}` with `λ = (n−2)/2`, the zonal
//! polynomials of the sphere `S^{n−1}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact monomial coefficients of `C_0, …, C_degree` by the three-term
/// recurrence `(k+1) C_{k+1} = 2(k+λ) t C_k − (k+2λ−1) C_{k−1}`.
pub(crate) fn gegenbauer_table(n: u32, degree: usize) -> Vec<Vec<BigRational>> {
    let lambda = BigRational::new(BigInt::from(n as i64 - 2), BigInt::from(2));
    let two = BigRational::from_integer(2.into());
    let mut table: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    if degree >= 1 {
        table.push(vec![BigRational::zero(), &two * &lambda]);
    }
    for k in 1..degree {
        let kq = BigRational::from_integer(BigInt::from(k));
        let a = &two * (&kq + &lambda);
        let b = &kq + &two * &lambda - BigRational::one();
        let div = &kq + BigRational::one();
        let mut next = vec![BigRational::zero(); k + 2];
        for (j, c) in table[k].iter().enumerate() {
            next[j + 1] += &a * c;
        }
        for (j, c) in table[k - 1].iter().enumerate() {
            next[j] -= &b * c;
        }
        for c in next.iter_mut() {
            *c /= &div;
        }
        table.push(next);
    }
    table
}

type Table = Arc<Vec<Vec<BigRational>>>;

/// [`gegenbauer_table`] memoized per `n`; grows the stored table on demand.
pub(crate) fn cached_table(n: u32, degree: usize) -> Table {
    static CACHE: OnceLock<Mutex<HashMap<u32, Table>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(&n) {
        if t.len() > degree {
            return t.clone();
        }
    }
    let t = Arc::new(gegenbauer_table(n, degree));
    let mut guard = cache.lock().expect("cache poisoned");
    let slot = guard.entry(n).or_insert_with(|| t.clone());
    if slot.len() < t.len() {
        *slot = t.clone();
    }
    slot.clone()
}

/// Floating point `C_d^{(λ)}(t)` by the same recurrence, used by the
/// quadrature oracle so that it never touches the exact coefficients.
pub(crate) fn gegenbauer_eval(n: u32, degree: usize, t: f64) -> f64 {
    let lambda = (n as f64 - 2.0) / 2.0;
    let (mut prev, mut cur) = (1.0, 2.0 * lambda * t);
    if degree == 0 {
        return prev;
    }
    for k in 1..degree {
        let kf = k as f64;
        let next = (2.0 * (kf + lambda) * t * cur - (kf + 2.0 * lambda - 1.0) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
