//! Reducibility of `χ × 1`.
//!
//! Two independent deciders are provided. [`is_reducible_closed`] evaluates
//! the four closed-form families of exceptional characters directly.
//! [`is_reducible_recursive`] instead looks for a finite-dimensional
//! submodule or quotient and otherwise descends through the derivative
//! `χ × 1 ↦ χ′ × 1` on `GL_{n-2}`. The two must agree everywhere.

use std::collections::HashMap;
use std::sync::Mutex;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{Character, FieldKind, Rational};

/// Which of the four closed-form families matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionTag {
    I,
    II,
    III,
    IV,
}

/// One matched family together with its witnessing integers.
///
/// For `I`–`III`, `k` is the family parameter and `negated` says whether the
/// `−` branch of `±` matched. For `IV`, `k` is the α-exponent and `l` is the
/// integer `s − n/2` of the matching character (`χ` itself, or `χ⁻¹` when
/// `negated`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatchedCondition {
    pub tag: ConditionTag,
    pub k: i64,
    pub l: Option<i64>,
    pub negated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    ClosedForm,
    Recursive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Submodule,
    Quotient,
}

/// Where the recursive decider found its finite-dimensional witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursiveWitness {
    /// Number of derivative steps taken before the witness appeared.
    pub depth: u32,
    pub side: Side,
    pub k: i64,
    pub l: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityVerdict {
    pub reducible: bool,
    pub conditions: Vec<MatchedCondition>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RecursiveWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A finite-dimensional submodule or quotient of `χ × 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDimWitness {
    pub side: Side,
    pub k: i64,
    pub l: Option<i64>,
    /// The one-dimensional constituent, reported only for non-archimedean fields.
    pub character_of_psi: Option<Character>,
}

pub(crate) const RAMIFIED_NOTE: &str =
    "ramified character: irreducible by the literal reading of condition (i), which names only powers of nu";

/// Checks the shared preconditions and returns `r = min(p1, n - p1)`.
pub(crate) fn check_domain(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<u32> {
    if p1 == 0 || p1 >= n {
        return Err(Error::domain(format!("p1 = {p1} must lie in [1, n-1] for n = {n}")));
    }
    if chi.p() != p1 {
        return Err(Error::domain(format!("chi lives on GL_{} but p1 = {p1}", chi.p())));
    }
    if chi.field() != field {
        return Err(Error::domain(format!("chi is over {} but the field is {field}", chi.field())));
    }
    Ok(p1.min(n - p1))
}

fn as_integer(q: Rational) -> Option<i64> {
    q.is_integer().then(|| q.to_integer())
}

fn half(n: u32) -> Rational {
    Rational::new(n as i64, 2)
}

/// Decides reducibility of `χ × 1` on `GL_n(F)` by the closed-form criteria,
/// reporting every matched family.
pub fn is_reducible_closed(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<ReducibilityVerdict> {
    let r = check_domain(field, n, p1, chi)? as i64;
    if chi.ramified() {
        return Ok(ReducibilityVerdict {
            reducible: false,
            conditions: vec![],
            method: Method::ClosedForm,
            witness: None,
            note: Some(RAMIFIED_NOTE.into()),
        });
    }
    let nu = chi.nu_exp();
    let nh = half(n);
    let mut conditions = Vec::new();

    // (i) χ = ν^{±(k − n/2)}, 0 ≤ k ≤ r−1
    if let Some(e) = chi.as_real_nu_power() {
        for k in 0..r {
            let base = Rational::from_integer(k) - nh;
            if e == base || e == -base {
                conditions.push(MatchedCondition { tag: ConditionTag::I, k, l: None, negated: e == -base });
            }
        }
    }

    if field == FieldKind::Real && nu.is_real() {
        let e = nu.re;
        let sign = chi.sign_exp().unwrap_or(0) as i64;
        // (ii) χ = ε^{k+1} ν^{±(k − r + n/2)}, k ≥ 1
        if let Some(k) = as_integer(e.abs() + Rational::from_integer(r) - nh) {
            if k >= 1 && (k + 1).rem_euclid(2) == sign {
                conditions.push(MatchedCondition { tag: ConditionTag::II, k, l: None, negated: e.is_negative() });
            }
        }
        // (iii) χ ∈ {ν, εν}^{±(k − r + n/2 + 1)}, k ≥ 1, r > 1
        if r > 1 {
            if let Some(k) = as_integer(e.abs() + Rational::from_integer(r) - nh - 1) {
                if k >= 1 {
                    conditions.push(MatchedCondition { tag: ConditionTag::III, k, l: None, negated: e.is_negative() });
                }
            }
        }
    }

    // (iv) χ or χ⁻¹ is α^k ν^s, s − n/2 ∈ ℤ, s ± k > n/2 − r
    if field == FieldKind::Complex && nu.is_real() {
        let bound = nh - Rational::from_integer(r);
        let a = chi.alpha_exp().unwrap_or(0);
        for (negated, k, s) in [(false, a, nu.re), (true, -a, -nu.re)] {
            let Some(l) = as_integer(s - nh) else { continue };
            let kq = Rational::from_integer(k);
            if s + kq > bound && s - kq > bound {
                conditions.push(MatchedCondition { tag: ConditionTag::IV, k, l: Some(l), negated });
            }
        }
    }

    Ok(ReducibilityVerdict {
        reducible: !conditions.is_empty(),
        conditions,
        method: Method::ClosedForm,
        witness: None,
        note: None,
    })
}

/// Finite-dimensional submodule of `χ × 1`, if any.
///
/// Over every field `χ = ν^{−n/2}` qualifies. Over ℝ the family is
/// `ε^k ν^{−k−n/2}`, `k ≥ 0`; over ℂ it is `α^{(l−k)/2} ν^{−(k+l+n)/2}` with
/// `k, l ≥ 0` of equal parity.
pub fn finite_dim_submodule(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<Option<FiniteDimWitness>> {
    check_domain(field, n, p1, chi)?;
    Ok(submodule_witness(field, n, p1, chi))
}

fn submodule_witness(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Option<FiniteDimWitness> {
    if chi.ramified() || !chi.nu_exp().is_real() {
        return None;
    }
    let s = chi.s_of();
    let nh = half(n);
    let (k, l) = match field {
        FieldKind::NonArchimedean => {
            if s != -nh {
                return None;
            }
            (0, None)
        }
        FieldKind::Real => {
            // s = −k − n/2
            let k = as_integer(-s - nh).filter(|k| *k >= 0)?;
            if k.rem_euclid(2) != chi.sign_exp().unwrap_or(0) as i64 {
                return None;
            }
            (k, None)
        }
        FieldKind::Complex => {
            // a = (l−k)/2 and −2s = k + l + n give l = a − s − n/2, k = −a − s − n/2
            let a = Rational::from_integer(chi.alpha_exp().unwrap_or(0));
            let l = as_integer(a - s - nh).filter(|l| *l >= 0)?;
            let k = as_integer(-a - s - nh).filter(|k| *k >= 0)?;
            if (k - l).is_odd() {
                return None;
            }
            (k, Some(l))
        }
    };
    let character_of_psi = (field == FieldKind::NonArchimedean)
        .then(|| Character::nu(field, n, Rational::new(-((n - p1) as i64), 2)));
    Some(FiniteDimWitness { side: Side::Submodule, k, l, character_of_psi })
}

/// Finite-dimensional quotient of `χ × 1`, obtained from a submodule of the
/// contragredient `χ⁻¹ × 1`.
pub fn finite_dim_quotient(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<Option<FiniteDimWitness>> {
    check_domain(field, n, p1, chi)?;
    Ok(quotient_witness(field, n, p1, chi))
}

fn quotient_witness(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Option<FiniteDimWitness> {
    submodule_witness(field, n, p1, &chi.invert()).map(|w| FiniteDimWitness {
        side: Side::Quotient,
        character_of_psi: (field == FieldKind::NonArchimedean)
            .then(|| Character::nu(field, n, Rational::new(p1 as i64, 2))),
        ..w
    })
}

type MemoKey = (FieldKind, u32, u32, Character);

/// Recursive decider with a shared memo table.
///
/// The table is safe to share between threads; entries are idempotent so
/// concurrent writers never disagree.
#[derive(Default)]
pub struct RecursiveDecider {
    memo: Mutex<HashMap<MemoKey, Option<RecursiveWitness>>>,
}

impl RecursiveDecider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn decide(&self, field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<ReducibilityVerdict> {
        check_domain(field, n, p1, chi)?;
        if chi.ramified() {
            return Ok(ReducibilityVerdict {
                reducible: false,
                conditions: vec![],
                method: Method::Recursive,
                witness: None,
                note: Some(RAMIFIED_NOTE.into()),
            });
        }
        let witness = self.search(field, n, p1, *chi)?;
        Ok(ReducibilityVerdict {
            reducible: witness.is_some(),
            conditions: vec![],
            method: Method::Recursive,
            witness,
            note: None,
        })
    }

    fn search(&self, field: FieldKind, n: u32, p1: u32, chi: Character) -> Result<Option<RecursiveWitness>> {
        let key = (field, n, p1, chi);
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(*hit);
        }
        let found = if let Some(w) = submodule_witness(field, n, p1, &chi).or_else(|| quotient_witness(field, n, p1, &chi)) {
            Some(RecursiveWitness { depth: 0, side: w.side, k: w.k, l: w.l })
        } else if p1 >= 2 && n - p1 >= 2 {
            self.search(field, n - 2, p1 - 1, chi.restrict()?)?
                .map(|w| RecursiveWitness { depth: w.depth + 1, ..w })
        } else {
            None
        };
        self.memo.lock().expect("memo poisoned").insert(key, found);
        Ok(found)
    }
}

/// Decides reducibility by descending through derivatives until a
/// finite-dimensional submodule or quotient appears.
pub fn is_reducible_recursive(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<ReducibilityVerdict> {
    RecursiveDecider::new().decide(field, n, p1, chi)
}

/// Upper bound on the length of `χ × 1`: exact over non-archimedean fields
/// (1 or 2), `r + 1` over ℝ and ℂ for reducible `χ × 1` since constituent
/// ranks are pairwise distinct in `{0, …, r}`.
pub fn length_upper_bound(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<u32> {
    let r = check_domain(field, n, p1, chi)?;
    let reducible = is_reducible_closed(field, n, p1, chi)?.reducible;
    Ok(match (reducible, field.is_archimedean()) {
        (false, _) => 1,
        (true, false) => 2,
        (true, true) => r + 1,
    })
}

/// ν-exponents of the standard test grid: rationals in `[−6, 6]` with
/// denominator at most 4.
pub fn grid_exponents() -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=4i64)
        .flat_map(|d| (-6 * d..=6 * d).map(move |a| Rational::new(a, d)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Unramified characters of `GL_p(F)` on the standard test grid: sign
/// exponent in `{0, 1}` over ℝ, α-exponent in `−3..=3` over ℂ, and real
/// ν-exponent from [`grid_exponents`].
pub fn character_grid(field: FieldKind, p: u32) -> Vec<Character> {
    let twists: Vec<(Option<i64>, Option<i64>)> = match field {
        FieldKind::Real => vec![(Some(0), None), (Some(1), None)],
        FieldKind::Complex => (-3..=3).map(|a| (None, Some(a))).collect(),
        FieldKind::NonArchimedean => vec![(None, None)],
    };
    let exps = grid_exponents();
    twists
        .iter()
        .flat_map(|&(e, a)| {
            exps.iter().map(move |&s| {
                crate::types::make_character(field, p, e, a, crate::types::ComplexRational::real(s))
                    .expect("grid characters are valid")
            })
        })
        .collect()
}
