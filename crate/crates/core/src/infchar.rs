//! Infinitesimal characters over ℝ and ℂ as exact multisets of complex numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reducibility::check_domain;
use crate::types::{Character, ComplexRational, FieldKind, Rational};

/// A multiset of complex rationals, kept sorted so that `==` is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CNumberMultiset {
    entries: Vec<ComplexRational>,
}

impl CNumberMultiset {
    pub fn new(mut entries: Vec<ComplexRational>) -> Self {
        entries.sort();
        CNumberMultiset { entries }
    }

    pub fn entries(&self) -> &[ComplexRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Disjoint (multiplicity-adding) union.
    pub fn union(&self, other: &CNumberMultiset) -> CNumberMultiset {
        let mut e = self.entries.clone();
        e.extend_from_slice(&other.entries);
        CNumberMultiset::new(e)
    }

    /// Consecutive differences in decreasing order of real part, or `None`
    /// when the imaginary parts are not all equal.
    fn gaps(&self) -> Result<Option<Vec<Rational>>> {
        let first = self
            .entries
            .first()
            .ok_or_else(|| Error::domain("empty multiset"))?;
        if self.entries.iter().any(|z| z.im != first.im) {
            return Ok(None);
        }
        Ok(Some(self.entries.windows(2).map(|w| w[1].re - w[0].re).collect()))
    }
}

impl FromIterator<ComplexRational> for CNumberMultiset {
    fn from_iter<I: IntoIterator<Item = ComplexRational>>(iter: I) -> Self {
        CNumberMultiset::new(iter.into_iter().collect())
    }
}

// serialized as a sorted array of [re_num, re_den, im_num, im_den]
impl Serialize for CNumberMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let quads: Vec<[i64; 4]> = self
            .entries
            .iter()
            .map(|z| [*z.re.numer(), *z.re.denom(), *z.im.numer(), *z.im.denom()])
            .collect();
        quads.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CNumberMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let quads = Vec::<[i64; 4]>::deserialize(d)?;
        quads
            .into_iter()
            .map(|[a, b, c, e]| {
                if b == 0 || e == 0 {
                    Err(serde::de::Error::custom("zero denominator"))
                } else {
                    Ok(ComplexRational::new(Rational::new(a, b), Rational::new(c, e)))
                }
            })
            .collect()
    }
}

/// The segment `ξ_p^s` of length `p` centred at `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDesc {
    pub center: ComplexRational,
    pub length: u32,
}

/// `{s + (p−1)/2, s + (p−3)/2, …, s − (p−1)/2}`.
pub fn expand_segment(seg: &SegmentDesc) -> CNumberMultiset {
    let p = seg.length as i64;
    (0..p)
        .map(|j| seg.center + Rational::new(p - 1 - 2 * j, 2))
        .collect()
}

/// All consecutive gaps equal to exactly 1.
pub fn is_segment(ms: &CNumberMultiset) -> Result<bool> {
    Ok(ms
        .gaps()?
        .is_some_and(|g| g.iter().all(|d| *d == Rational::from_integer(1))))
}

/// All consecutive gaps are integers (0 allowed).
pub fn is_generalized_segment(ms: &CNumberMultiset) -> Result<bool> {
    Ok(ms.gaps()?.is_some_and(|g| g.iter().all(|d| d.is_integer())))
}

/// Infinitesimal character of an archimedean `χ × 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InfChar {
    Real(CNumberMultiset),
    Complex(CNumberMultiset, CNumberMultiset),
}

impl InfChar {
    /// Every component is a generalized segment.
    pub fn is_generalized_segment(&self) -> Result<bool> {
        match self {
            InfChar::Real(m) => is_generalized_segment(m),
            InfChar::Complex(a, b) => Ok(is_generalized_segment(a)? && is_generalized_segment(b)?),
        }
    }
}

/// Infinitesimal character of `χ × 1` with `χ` on `GL_{p1}`.
///
/// The segment carrying χ's exponents sits on χ's own block (length `p1`)
/// and the trivial-character segment on the complementary block (length
/// `p2`). Over ℂ, for `χ = α^k ν^s`, the pair is
/// `(ξ_{p1}^{s+k} ⊔ ξ_{p2}^0, ξ_{p1}^{s−k} ⊔ ξ_{p2}^0)`.
pub fn infchar_of(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<InfChar> {
    check_domain(field, n, p1, chi)?;
    let p2 = n - p1;
    let zero = expand_segment(&SegmentDesc { center: ComplexRational::default(), length: p2 });
    let seg = |center| expand_segment(&SegmentDesc { center, length: p1 });
    let s = chi.nu_exp();
    match field {
        FieldKind::Real => Ok(InfChar::Real(seg(s).union(&zero))),
        FieldKind::Complex => {
            let k = Rational::from_integer(chi.alpha_exp().unwrap_or(0));
            Ok(InfChar::Complex(seg(s + k).union(&zero), seg(s + (-k)).union(&zero)))
        }
        FieldKind::NonArchimedean => Err(Error::UnsupportedField(
            field.to_string(),
            "infinitesimal characters are only defined over R and C",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ComplexRational {
        ComplexRational::real(Rational::new(n, d))
    }

    fn ms(v: &[(i64, i64)]) -> CNumberMultiset {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn expand_examples() {
        let s = |c, l| expand_segment(&SegmentDesc { center: c, length: l });
        assert_eq!(s(q(0, 1), 3), ms(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(s(q(5, 1), 1), ms(&[(5, 1)]));
        assert_eq!(s(q(1, 2), 2), ms(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn segment_predicates() {
        assert!(is_segment(&ms(&[(3, 2), (1, 2), (-1, 2)])).unwrap());
        assert!(!is_segment(&ms(&[(2, 1), (1, 1), (1, 1), (0, 1)])).unwrap());
        assert!(!is_segment(&ms(&[(2, 1), (0, 1)])).unwrap());
        assert!(is_segment(&CNumberMultiset::new(vec![])).is_err());

        assert!(is_generalized_segment(&ms(&[(2, 1), (1, 1), (1, 1), (0, 1)])).unwrap());
        assert!(!is_generalized_segment(&ms(&[(1, 1), (1, 2)])).unwrap());
        assert!(is_generalized_segment(&ms(&[(5, 1)])).unwrap());
        assert!(is_generalized_segment(&CNumberMultiset::new(vec![])).is_err());
    }

    #[test]
    fn mixed_imaginary_parts_fail() {
        let m = CNumberMultiset::new(vec![q(1, 1), ComplexRational::new(Rational::from_integer(0), Rational::from_integer(1))]);
        assert!(!is_segment(&m).unwrap());
        assert!(!is_generalized_segment(&m).unwrap());
    }

    #[test]
    fn infchar_examples() {
        let re = FieldKind::Real;
        // ν⁵ on GL₂ carries ξ_2^5, the trivial GL₁ factor carries ξ_1^0
        let v = infchar_of(re, 3, 2, &Character::nu(re, 2, Rational::from_integer(5))).unwrap();
        assert_eq!(v, InfChar::Real(ms(&[(9, 2), (11, 2), (0, 1)])));

        let v = infchar_of(re, 2, 1, &Character::trivial(re, 1)).unwrap();
        assert_eq!(v, InfChar::Real(ms(&[(0, 1), (0, 1)])));

        let c = FieldKind::Complex;
        let v = infchar_of(c, 2, 1, &Character::parse(c, 1, "alpha*nu").unwrap()).unwrap();
        assert_eq!(v, InfChar::Complex(ms(&[(2, 1), (0, 1)]), ms(&[(0, 1), (0, 1)])));

        let na = FieldKind::NonArchimedean;
        assert!(matches!(
            infchar_of(na, 2, 1, &Character::trivial(na, 1)),
            Err(Error::UnsupportedField(..))
        ));
    }

    #[test]
    fn json_is_sorted_quadruples() {
        let m = ms(&[(1, 2), (-1, 1)]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[-1,1,0,1],[1,2,0,1]]");
    }
}
