//! Laurent germs of products of Γ-values at rational points.
//!
//! A germ is `coeff · Π Γ(f)^e · (α − α₀)^order` with `coeff` an exact
//! rational and every `f` a rational in `(0, 1)`. The functional equation
//! `Γ(x+1) = xΓ(x)` moves every Γ-argument into `(0, 1]`, so products of
//! germs cancel their transcendental parts exactly and a vanishing leading
//! term is decided without any threshold.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::types::Rational;

pub(crate) fn big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Germ {
    pub order: i64,
    pub coeff: BigRational,
    gammas: BTreeMap<Rational, i32>,
}

impl Germ {
    pub fn constant(coeff: BigRational) -> Germ {
        Germ { order: 0, coeff, gammas: BTreeMap::new() }
    }

    pub fn monomial(order: i64, coeff: BigRational) -> Germ {
        Germ { order, coeff, gammas: BTreeMap::new() }
    }

    /// Germ of `Γ(y0 + slope·ε)` at `ε = 0`.
    pub fn gamma(y0: Rational, slope: Rational) -> Germ {
        if y0.is_integer() && !y0.is_positive() {
            // Γ(y) ~ (−1)^k / (k! (y − y0)), y0 = −k
            assert!(!slope.is_zero(), "Γ evaluated exactly at its pole {y0}");
            let k = (-y0.to_integer()) as u64;
            let mut c = BigRational::one() / (factorial(k) * big(slope));
            if k % 2 == 1 {
                c = -c;
            }
            return Germ::monomial(-1, c);
        }
        let f = {
            let fr = y0 - y0.floor();
            if fr.is_zero() { Rational::one() } else { fr }
        };
        let shift = (y0 - f).to_integer();
        let mut coeff = BigRational::one();
        if shift >= 0 {
            for i in 0..shift {
                coeff *= big(f + i);
            }
        } else {
            for i in 0..(-shift) {
                coeff /= big(y0 + i);
            }
        }
        let mut gammas = BTreeMap::new();
        if f != Rational::one() {
            gammas.insert(f, 1);
        }
        Germ { order: 0, coeff, gammas }
    }

    pub fn mul(&self, other: &Germ) -> Germ {
        let mut gammas = self.gammas.clone();
        for (f, e) in &other.gammas {
            let slot = gammas.entry(*f).or_insert(0);
            *slot += e;
            if *slot == 0 {
                gammas.remove(f);
            }
        }
        Germ {
            order: self.order + other.order,
            coeff: &self.coeff * &other.coeff,
            gammas,
        }
    }

    pub fn recip(&self) -> Germ {
        Germ {
            order: -self.order,
            coeff: self.coeff.recip(),
            gammas: self.gammas.iter().map(|(f, e)| (*f, -e)).collect(),
        }
    }

    /// True when no Γ-factor survives: the leading coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn leading_f64(&self) -> f64 {
        let mut v = self.coeff.to_f64().unwrap_or(f64::NAN);
        for (f, e) in &self.gammas {
            v *= statrs::function::gamma::gamma(f.to_f64().unwrap_or(f64::NAN)).powi(*e);
        }
        v
    }
}

pub(crate) fn factorial(k: u64) -> BigRational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    BigRational::from_integer(acc)
}

/// Laurent-germ value of a meromorphic function of `α` at `α₀`.
///
/// `pole_order > 0` is a pole of that order, `< 0` a zero of order
/// `−pole_order`, `0` a finite non-zero value. `leading` is the first
/// non-zero Laurent coefficient. `exact_zero` is set when the function
/// vanishes at `α₀`, which is decided in exact arithmetic. A function that
/// vanishes identically has `exact_zero`, `leading = 0`, and `pole_order = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeroValue {
    pub pole_order: i64,
    pub leading: Complex64,
    pub exact_zero: bool,
    /// The leading coefficient is an exact rational (no Γ-values left over).
    #[serde(default)]
    pub leading_is_rational: bool,
}

impl MeroValue {
    pub(crate) fn from_germ(g: &Germ) -> MeroValue {
        if g.coeff.is_zero() {
            return MeroValue::identically_zero();
        }
        MeroValue {
            pole_order: -g.order,
            leading: Complex64::new(g.leading_f64(), 0.0),
            exact_zero: g.order > 0,
            leading_is_rational: g.is_rational(),
        }
    }

    pub fn identically_zero() -> MeroValue {
        MeroValue {
            pole_order: 0,
            leading: Complex64::new(0.0, 0.0),
            exact_zero: true,
            leading_is_rational: true,
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.exact_zero && self.leading == Complex64::new(0.0, 0.0)
    }

    /// The value at `α₀`, or `None` at a pole.
    pub fn value(&self) -> Option<Complex64> {
        match self.pole_order {
            p if p > 0 => None,
            0 if !self.exact_zero => Some(self.leading),
            _ => Some(Complex64::new(0.0, 0.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn gamma_at_positive_integers_is_rational() {
        let g = Germ::gamma(q(5, 1), q(0, 1));
        assert!(g.is_rational());
        assert_eq!(g.coeff, BigRational::from_integer(24.into()));
    }

    #[test]
    fn gamma_pole_residue() {
        // Γ(−2 + ε) ~ 1/(2ε)
        let g = Germ::gamma(q(-2, 1), q(1, 1));
        assert_eq!(g.order, -1);
        assert_eq!(g.coeff, big(q(1, 2)));
        // slope 1/2: Γ(−1 + ε/2) ~ −2/ε
        let g = Germ::gamma(q(-1, 1), q(1, 2));
        assert_eq!(g.coeff, big(q(-2, 1)));
    }

    #[test]
    fn gamma_shift_to_unit_interval() {
        // Γ(−1/2) = −2 Γ(1/2), Γ(5/2) = 3/4 Γ(1/2)
        let a = Germ::gamma(q(-1, 2), q(0, 1));
        let b = Germ::gamma(q(5, 2), q(0, 1));
        assert_eq!(a.coeff, big(q(-2, 1)));
        assert_eq!(b.coeff, big(q(3, 4)));
        let ratio = a.mul(&b.recip());
        assert!(ratio.is_rational());
        assert_eq!(ratio.coeff, big(q(-8, 3)));
        let pi_sqrt = std::f64::consts::PI.sqrt();
        assert!((a.leading_f64() + 2.0 * pi_sqrt).abs() < 1e-14);
    }

    #[test]
    fn mero_value_semantics() {
        let zero = MeroValue::from_germ(&Germ::monomial(1, big(q(3, 1))));
        assert!(zero.exact_zero);
        assert_eq!(zero.pole_order, -1);
        assert_eq!(zero.value(), Some(Complex64::new(0.0, 0.0)));
        let pole = MeroValue::from_germ(&Germ::monomial(-2, big(q(3, 1))));
        assert_eq!(pole.value(), None);
        assert!(MeroValue::from_germ(&Germ::constant(BigRational::zero())).is_identically_zero());
    }
}
