//! Exact data model: local fields, characters of `GL_p(F)`, and the
//! descriptors `χ₁×χ₂` of maximal-parabolic induced representations.
//!
//! Every exponent is an exact rational (a pair of rationals for complex
//! ν-exponents). The reducibility criteria are integrality conditions, so no
//! floating point value ever enters this module.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = Rational64;

/// The local field `F` of `GL(n, F)`.
///
/// All non-archimedean fields behave identically for the questions answered
/// here, so that tag carries no residue-field data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldKind {
    #[serde(rename = "R", alias = "Real", alias = "real")]
    Real,
    #[serde(rename = "C", alias = "Complex", alias = "complex")]
    Complex,
    #[serde(rename = "NA", alias = "NonArchimedean", alias = "NonArch", alias = "p-adic")]
    NonArchimedean,
}

impl FieldKind {
    pub const ALL: [FieldKind; 3] = [FieldKind::Real, FieldKind::Complex, FieldKind::NonArchimedean];

    pub fn is_archimedean(self) -> bool {
        !matches!(self, FieldKind::NonArchimedean)
    }

    pub fn tag(self) -> &'static str {
        match self {
            FieldKind::Real => "R",
            FieldKind::Complex => "C",
            FieldKind::NonArchimedean => "NA",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "R" | "Real" | "real" => Ok(FieldKind::Real),
            "C" | "Complex" | "complex" => Ok(FieldKind::Complex),
            "NA" | "NonArchimedean" | "NonArch" | "nonarch" | "p-adic" => {
                Ok(FieldKind::NonArchimedean)
            }
            other => Err(Error::Parse(format!("unknown field `{other}` (expected R, C or NA)"))),
        }
    }
}

/// A complex number with exact rational parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational { re, im: Rational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(Rational::from_integer(v))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl std::ops::Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: Self) -> Self {
        ComplexRational::new(self.re + o.re, self.im + o.im)
    }
}

impl std::ops::Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: Self) -> Self {
        ComplexRational::new(self.re - o.re, self.im - o.im)
    }
}

impl std::ops::Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> Self {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl std::ops::Add<Rational> for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: Rational) -> Self {
        ComplexRational::new(self.re + o, self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        if !self.im.is_zero() {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}i", sign, self.im.abs())?;
        }
        Ok(())
    }
}

impl FromStr for ComplexRational {
    type Err = Error;

    /// Accepts `a`, `a/b`, `a/b+c/d i`, `a-c i`, `c/d i` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty exponent".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(ComplexRational::real(parse_rational(&t)?));
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_txt, im_txt) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im_txt {
            "" | "+" => Rational::from_integer(1),
            "-" => Rational::from_integer(-1),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(ComplexRational::new(parse_rational(re_txt)?, im))
    }
}

impl Serialize for ComplexRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ComplexRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `num` or `num/den` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A character `ε^a α^k ν^s` of `GL_p(F)`.
///
/// `sign_exp` is only meaningful over ℝ and `alpha_exp` only over ℂ; for other
/// fields they are held at zero and reported as absent. Non-archimedean
/// characters are unramified twists `ν^s` unless `ramified` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    field: FieldKind,
    p: u32,
    sign_exp: u8,
    alpha_exp: i64,
    nu_exp: ComplexRational,
    ramified: bool,
}

/// Builds a validated character. `sign_exp` is reduced mod 2.
///
/// Over ℝ an absent `sign_exp` means 0, over ℂ an absent `alpha_exp` means 0.
pub fn make_character(
    field: FieldKind,
    p: u32,
    sign_exp: Option<i64>,
    alpha_exp: Option<i64>,
    nu_exp: ComplexRational,
) -> Result<Character> {
    if p == 0 {
        return Err(Error::validation("p", "a character lives on GL_p with p >= 1"));
    }
    if sign_exp.is_some() && field != FieldKind::Real {
        return Err(Error::validation("sign_exp", format!("eps only exists over R, not {field}")));
    }
    if alpha_exp.is_some() && field != FieldKind::Complex {
        return Err(Error::validation("alpha_exp", format!("alpha only exists over C, not {field}")));
    }
    Ok(Character {
        field,
        p,
        sign_exp: sign_exp.unwrap_or(0).rem_euclid(2) as u8,
        alpha_exp: alpha_exp.unwrap_or(0),
        nu_exp,
        ramified: false,
    })
}

impl Character {
    /// `ν^s` on `GL_p(F)`.
    pub fn nu(field: FieldKind, p: u32, s: Rational) -> Character {
        Character {
            field,
            p,
            sign_exp: 0,
            alpha_exp: 0,
            nu_exp: ComplexRational::real(s),
            ramified: false,
        }
    }

    pub fn trivial(field: FieldKind, p: u32) -> Character {
        Character::nu(field, p, Rational::zero())
    }

    /// Marks a non-archimedean character as ramified.
    pub fn with_ramified(mut self, ramified: bool) -> Result<Character> {
        if ramified && self.field != FieldKind::NonArchimedean {
            return Err(Error::validation("ramified", "only non-archimedean characters can be ramified"));
        }
        self.ramified = ramified;
        Ok(self)
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn sign_exp(&self) -> Option<u8> {
        (self.field == FieldKind::Real).then_some(self.sign_exp)
    }

    pub fn alpha_exp(&self) -> Option<i64> {
        (self.field == FieldKind::Complex).then_some(self.alpha_exp)
    }

    pub fn nu_exp(&self) -> ComplexRational {
        self.nu_exp
    }

    pub fn ramified(&self) -> bool {
        self.ramified
    }

    /// True for the terminator character of `GL_0`.
    pub fn is_empty(&self) -> bool {
        self.p == 0
    }

    /// The real number `s(χ)` with `|χ| = ν^{s(χ)}`.
    pub fn s_of(&self) -> Rational {
        self.nu_exp.re
    }

    /// If `χ = ν^s` exactly (trivial sign and α parts, unramified, real `s`), returns `s`.
    pub fn as_real_nu_power(&self) -> Option<Rational> {
        let plain = self.sign_exp == 0 && self.alpha_exp == 0 && !self.ramified && self.nu_exp.is_real();
        plain.then_some(self.nu_exp.re)
    }

    /// Restriction `χ′` to `GL_{p-1}`. Exponents are unchanged.
    pub fn restrict(&self) -> Result<Character> {
        if self.p == 0 {
            return Err(Error::domain("cannot restrict the empty character of GL_0"));
        }
        Ok(Character { p: self.p - 1, ..*self })
    }

    /// `χ⁻¹`: every exponent negated (ε is its own inverse).
    pub fn invert(&self) -> Character {
        Character {
            alpha_exp: -self.alpha_exp,
            nu_exp: -self.nu_exp,
            ..*self
        }
    }

    /// `self · other⁻¹`, kept on `GL_p` for `p = self.p`.
    pub fn divide(&self, other: &Character) -> Result<Character> {
        if self.field != other.field {
            return Err(Error::validation("field", "characters over different fields"));
        }
        if self.ramified && other.ramified {
            // the quotient of two ramified characters may or may not be unramified
            return Err(Error::validation("ramified", "quotient of two ramified characters is not determined"));
        }
        Ok(Character {
            field: self.field,
            p: self.p,
            sign_exp: (self.sign_exp + other.sign_exp) % 2,
            alpha_exp: self.alpha_exp - other.alpha_exp,
            nu_exp: self.nu_exp - other.nu_exp,
            ramified: self.ramified || other.ramified,
        })
    }

    /// Parses the textual form `[eps^a*][alpha^k*]nu^{re[+im i]}` on `GL_p(F)`.
    ///
    /// `1` denotes the trivial character and a trailing `*ramified` factor is
    /// accepted for non-archimedean fields.
    pub fn parse(field: FieldKind, p: u32, text: &str) -> Result<Character> {
        let mut sign = None;
        let mut alpha = None;
        let mut nu = None;
        let mut ramified = false;
        for raw in text.split('*') {
            let factor = raw.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b.trim(), Some(strip_braces(e.trim()))),
                None => (factor, None),
            };
            match base {
                "1" if exp.is_none() => {}
                "ramified" if exp.is_none() => ramified = true,
                "eps" => set_once(&mut sign, parse_int(exp.unwrap_or("1"))?, "eps")?,
                "alpha" => set_once(&mut alpha, parse_int(exp.unwrap_or("1"))?, "alpha")?,
                "nu" => set_once(&mut nu, exp.unwrap_or("1").parse::<ComplexRational>()?, "nu")?,
                _ => return Err(Error::Parse(format!("unrecognized factor `{factor}` in `{text}`"))),
            }
        }
        make_character(field, p, sign, alpha, nu.unwrap_or_default())?.with_ramified(ramified)
    }
}

fn strip_braces(s: &str) -> &str {
    s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s)
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not an integer exponent")))
}

fn set_once<T>(slot: &mut Option<T>, v: T, name: &str) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Parse(format!("factor `{name}` given twice")));
    }
    *slot = Some(v);
    Ok(())
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field == FieldKind::Real && self.sign_exp != 0 {
            write!(f, "eps^{}*", self.sign_exp)?;
        }
        if self.field == FieldKind::Complex && self.alpha_exp != 0 {
            write!(f, "alpha^{}*", self.alpha_exp)?;
        }
        write!(f, "nu^{{{}}}", self.nu_exp)?;
        if self.ramified {
            f.write_str("*ramified")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    field: FieldKind,
    p: u32,
    #[serde(default)]
    sign_exp: Option<i64>,
    #[serde(default)]
    alpha_exp: Option<i64>,
    nu_re: [i64; 2],
    #[serde(default = "zero_pair")]
    nu_im: [i64; 2],
    #[serde(default)]
    ramified: bool,
}

fn zero_pair() -> [i64; 2] {
    [0, 1]
}

fn pair(r: Rational) -> [i64; 2] {
    [*r.numer(), *r.denom()]
}

fn from_pair(field: &'static str, [n, d]: [i64; 2]) -> Result<Rational> {
    if d == 0 {
        return Err(Error::validation(field, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterJson {
            field: self.field,
            p: self.p,
            sign_exp: self.sign_exp().map(i64::from),
            alpha_exp: self.alpha_exp(),
            nu_re: pair(self.nu_exp.re),
            nu_im: pair(self.nu_exp.im),
            ramified: self.ramified,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CharacterJson::deserialize(d)?;
        let build = || -> Result<Character> {
            let nu = ComplexRational::new(from_pair("nu_re", j.nu_re)?, from_pair("nu_im", j.nu_im)?);
            let sign = j.sign_exp.filter(|_| j.field == FieldKind::Real || j.sign_exp != Some(0));
            let alpha = j.alpha_exp.filter(|_| j.field == FieldKind::Complex || j.alpha_exp != Some(0));
            let chi = if j.p == 0 {
                make_character(j.field, 1, sign, alpha, nu)?.restrict()?
            } else {
                make_character(j.field, j.p, sign, alpha, nu)?
            };
            chi.with_ramified(j.ramified)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// The representation `χ₁×χ₂` of `GL_n(F)` induced from the maximal
/// parabolic with blocks `(p1, p2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InducedRepDesc {
    field: FieldKind,
    n: u32,
    p1: u32,
    p2: u32,
    chi1: Character,
    chi2: Character,
}

impl InducedRepDesc {
    pub fn new(field: FieldKind, n: u32, p1: u32, p2: u32, chi1: Character, chi2: Character) -> Result<Self> {
        if p1 == 0 || p2 == 0 {
            return Err(Error::validation("p1/p2", "both blocks must be non-empty"));
        }
        if p1 + p2 != n {
            return Err(Error::validation("n", format!("p1 + p2 = {} but n = {n}", p1 + p2)));
        }
        if chi1.p != p1 || chi2.p != p2 {
            return Err(Error::validation("chi", "character sizes must match the blocks"));
        }
        if chi1.field != field || chi2.field != field {
            return Err(Error::validation("field", "all field tags must agree"));
        }
        Ok(InducedRepDesc { field, n, p1, p2, chi1, chi2 })
    }

    /// `χ × 1` with `χ` on `GL_{p1}`.
    pub fn with_trivial(n: u32, chi: Character) -> Result<Self> {
        if chi.p >= n {
            return Err(Error::domain(format!("p1 = {} must be smaller than n = {n}", chi.p)));
        }
        let p2 = n - chi.p;
        InducedRepDesc::new(chi.field, n, chi.p, p2, chi, Character::trivial(chi.field, p2))
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn p1(&self) -> u32 {
        self.p1
    }
    pub fn p2(&self) -> u32 {
        self.p2
    }
    pub fn chi1(&self) -> &Character {
        &self.chi1
    }
    pub fn chi2(&self) -> &Character {
        &self.chi2
    }

    /// `r = min(p1, p2)`.
    pub fn r(&self) -> u32 {
        self.p1.min(self.p2)
    }

    /// Twists by `χ₂⁻¹` so that the descriptor reads `χ × 1`.
    ///
    /// The flag is always `false`: the block order is never exchanged here.
    pub fn normalize(&self) -> Result<(Character, bool)> {
        Ok((self.chi1.divide(&self.chi2)?, false))
    }
}

/// The modular character `Δ_P = ν^{p2} ⊗ ν^{-p1}` of the parabolic `P_{p1,p2}`.
pub fn modular_character(field: FieldKind, p1: u32, p2: u32) -> (Character, Character) {
    (
        Character::nu(field, p1, Rational::from_integer(p2 as i64)),
        Character::nu(field, p2, Rational::from_integer(-(p1 as i64))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn make_character_examples() {
        let c = make_character(FieldKind::Real, 2, Some(1), None, ComplexRational::real(q(3, 2))).unwrap();
        assert_eq!(c.sign_exp(), Some(1));
        assert_eq!(c.alpha_exp(), None);
        assert_eq!(c.to_string(), "eps^1*nu^{3/2}");

        let c = make_character(FieldKind::Complex, 3, None, Some(2), ComplexRational::from_int(-1)).unwrap();
        assert_eq!(c.to_string(), "alpha^2*nu^{-1}");

        let e = make_character(FieldKind::Real, 2, None, Some(5), ComplexRational::default()).unwrap_err();
        assert!(matches!(e, Error::Validation { field: "alpha_exp", .. }));
    }

    #[test]
    fn sign_exponent_reduced_mod_two() {
        let c = make_character(FieldKind::Real, 1, Some(-3), None, ComplexRational::default()).unwrap();
        assert_eq!(c.sign_exp(), Some(1));
    }

    #[test]
    fn s_of_examples() {
        let c = Character::parse(FieldKind::Real, 2, "eps*nu^{3/2}").unwrap();
        assert_eq!(c.s_of(), q(3, 2));
        assert_eq!(Character::trivial(FieldKind::Real, 3).s_of(), q(0, 1));
        let c = Character::parse(FieldKind::Complex, 1, "alpha^2*nu^{-2+1i}").unwrap();
        assert_eq!(c.s_of(), q(-2, 1));
    }

    #[test]
    fn restrict_examples() {
        let c = Character::parse(FieldKind::Real, 2, "eps^1*nu^{3/2}").unwrap();
        let r = c.restrict().unwrap();
        assert_eq!(r.p(), 1);
        assert_eq!(r.nu_exp(), c.nu_exp());
        assert_eq!(r.sign_exp(), Some(1));

        let e = Character::trivial(FieldKind::NonArchimedean, 1).restrict().unwrap();
        assert!(e.is_empty());
        assert!(e.restrict().is_err());
    }

    #[test]
    fn invert_examples() {
        let c = Character::nu(FieldKind::NonArchimedean, 1, q(3, 2));
        assert_eq!(c.invert().s_of(), q(-3, 2));
        let eps = Character::parse(FieldKind::Real, 2, "eps").unwrap();
        assert_eq!(eps.invert(), eps);
        let c = Character::parse(FieldKind::Complex, 2, "alpha^2*nu^{1+1i}").unwrap();
        assert_eq!(c.invert().to_string(), "alpha^-2*nu^{-1-1i}");
    }

    #[test]
    fn normalize_examples() {
        let f = FieldKind::Real;
        let rep = InducedRepDesc::new(f, 4, 2, 2, Character::nu(f, 2, q(2, 1)), Character::nu(f, 2, q(1, 2))).unwrap();
        assert_eq!(rep.normalize().unwrap(), (Character::nu(f, 2, q(3, 2)), false));

        let chi = Character::parse(f, 1, "eps*nu^{1/3}").unwrap();
        let rep = InducedRepDesc::with_trivial(3, chi).unwrap();
        assert_eq!(rep.normalize().unwrap().0, chi);

        let c = FieldKind::Complex;
        let rep = InducedRepDesc::new(
            c,
            4,
            2,
            2,
            Character::parse(c, 2, "alpha*nu").unwrap(),
            Character::parse(c, 2, "alpha^-1*nu^{-1}").unwrap(),
        )
        .unwrap();
        assert_eq!(rep.normalize().unwrap().0.to_string(), "alpha^2*nu^{2}");
    }

    #[test]
    fn modular_character_examples() {
        let f = FieldKind::NonArchimedean;
        let (a, b) = modular_character(f, 2, 2);
        assert_eq!((a.p(), a.s_of(), b.p(), b.s_of()), (2, q(2, 1), 2, q(-2, 1)));
        let (a, b) = modular_character(f, 1, 3);
        assert_eq!((a.p(), a.s_of(), b.p(), b.s_of()), (1, q(3, 1), 3, q(-1, 1)));
        let (a, b) = modular_character(f, 3, 1);
        assert_eq!((a.p(), a.s_of(), b.p(), b.s_of()), (3, q(1, 1), 1, q(-3, 1)));
    }

    #[test]
    fn descriptor_validation() {
        let f = FieldKind::Real;
        let one = |p| Character::trivial(f, p);
        assert!(InducedRepDesc::new(f, 5, 2, 2, one(2), one(2)).is_err());
        assert!(InducedRepDesc::new(f, 4, 2, 2, one(2), Character::trivial(FieldKind::Complex, 2)).is_err());
        assert!(InducedRepDesc::with_trivial(2, one(2)).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Character::parse(FieldKind::Real, 1, "nu^{1/0}").is_err());
        assert!(Character::parse(FieldKind::Real, 1, "nu*nu").is_err());
        assert!(Character::parse(FieldKind::Real, 1, "zeta").is_err());
        assert!(Character::parse(FieldKind::Real, 1, "alpha").is_err());
        assert!(Character::parse(FieldKind::Real, 1, "nu*ramified").is_err());
    }

    #[test]
    fn complex_exponent_forms() {
        let z: ComplexRational = "-1/2-3/4 i".parse().unwrap();
        assert_eq!(z, ComplexRational::new(q(-1, 2), q(-3, 4)));
        let z: ComplexRational = "2i".parse().unwrap();
        assert_eq!(z, ComplexRational::new(q(0, 1), q(2, 1)));
        let z: ComplexRational = "1+i".parse().unwrap();
        assert_eq!(z, ComplexRational::new(q(1, 1), q(1, 1)));
    }

    #[test]
    fn json_shape() {
        let c = Character::parse(FieldKind::Real, 2, "eps*nu^{3/2}").unwrap();
        let v = serde_json::to_value(c).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"field":"R","p":2,"sign_exp":1,"alpha_exp":null,
                "nu_re":[3,2],"nu_im":[0,1],"ramified":false})
        );
        let back: Character = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
