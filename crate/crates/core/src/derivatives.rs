//! The derivative `Φ(χ₁×χ₂) = χ₁′×χ₂′`, rank bookkeeping, and the
//! composition profile of `χ × 1`.

use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reducibility::{self, check_domain, is_reducible_closed, ReducibilityVerdict, Side};
use crate::types::{Character, FieldKind, InducedRepDesc, Rational};

/// Result of applying `Φ`: either another induced descriptor, or a bare
/// character once one of the blocks is exhausted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhiOutput {
    Induced(InducedRepDesc),
    Character(Character),
}

impl PhiOutput {
    /// Rank: `min(p1, p2)` for descriptors, 0 for (finite-dimensional) characters.
    pub fn rank(&self) -> u32 {
        match self {
            PhiOutput::Induced(rep) => rank_of_full(rep),
            PhiOutput::Character(_) => 0,
        }
    }
}

/// Applies the derivative functor to `χ₁×χ₂`.
pub fn phi(rep: &InducedRepDesc) -> Result<PhiOutput> {
    if rep.n() < 2 {
        return Err(Error::domain("the derivative needs n >= 2"));
    }
    let c1 = rep.chi1().restrict()?;
    let c2 = rep.chi2().restrict()?;
    Ok(match (c1.p(), c2.p()) {
        (0, _) => PhiOutput::Character(c2),
        (_, 0) => PhiOutput::Character(c1),
        (p1, p2) => PhiOutput::Induced(InducedRepDesc::new(rep.field(), rep.n() - 2, p1, p2, c1, c2)?),
    })
}

pub fn rank_of_full(rep: &InducedRepDesc) -> u32 {
    rep.r()
}

/// `rep, Φ(rep), Φ²(rep), …` up to and including the first bare character.
pub fn phi_tower(rep: &InducedRepDesc) -> Result<Vec<PhiOutput>> {
    let mut tower = vec![PhiOutput::Induced(*rep)];
    let mut cur = *rep;
    loop {
        let next = phi(&cur)?;
        tower.push(next);
        match next {
            PhiOutput::Induced(r) => cur = r,
            PhiOutput::Character(_) => return Ok(tower),
        }
    }
}

/// Nilpotent orbit with `r` Jordan blocks of size 2 and `n − 2r` of size 1.
///
/// The conventional shorthand writes this as `2^r 1^{n−r}` even though the
/// block sizes then add up to `n + r`; [`PartitionTwoOne::notation`] keeps
/// that shorthand while [`PartitionTwoOne::blocks`] lists the actual blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTwoOne {
    n: u32,
    r: u32,
}

impl PartitionTwoOne {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if 2 * r > n {
            return Err(Error::domain(format!("2r = {} exceeds n = {n}", 2 * r)));
        }
        Ok(PartitionTwoOne { n, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn blocks(&self) -> Vec<u32> {
        let mut b = vec![2; self.r as usize];
        b.extend(std::iter::repeat_n(1, (self.n - 2 * self.r) as usize));
        b
    }

    pub fn notation(&self) -> String {
        format!("2^{}1^{{{}}}", self.r, self.n - self.r)
    }

    pub fn orbit_dimension(&self) -> u32 {
        2 * self.r * (self.n - self.r)
    }
}

impl fmt::Display for PartitionTwoOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Dimension `2·rank·(n − rank)` of the orbit attached to a constituent of the given rank.
pub fn orbit_dimension(n: u32, rank: u32) -> Result<u32> {
    Ok(PartitionTwoOne::new(n, rank)?.orbit_dimension())
}

/// Order in which the ranks of the constituents of `χ × 1` appear, from the
/// socle upwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankDirection {
    DescendingRank,
    AscendingRank,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDimConstituent {
    pub side: Side,
    pub character: Option<Character>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionProfile {
    pub reducible: bool,
    pub direction: RankDirection,
    pub rank_of_parent: u32,
    pub length_exact: Option<u32>,
    pub length_bound: u32,
    pub finite_dim_constituent: Option<FiniteDimConstituent>,
    pub intertwining_image_note: String,
    pub verdict: ReducibilityVerdict,
}

pub const INTERTWINING_IMAGE_NOTE: &str = "the image of the standard intertwining operator chi x 1 -> 1 x chi \
is the unique irreducible quotient of chi x 1 and the unique irreducible submodule of 1 x chi; \
the operator is invertible iff chi x 1 is irreducible";

/// Composition profile of `χ × 1` on `GL_n(F)` with `χ` on `GL_{p1}`.
pub fn composition_profile(field: FieldKind, n: u32, p1: u32, chi: &Character) -> Result<CompositionProfile> {
    let r = check_domain(field, n, p1, chi)?;
    let verdict = is_reducible_closed(field, n, p1, chi)?;
    let reducible = verdict.reducible;
    let direction = match (reducible, chi.s_of().is_positive()) {
        (false, _) => RankDirection::NotApplicable,
        (true, true) => RankDirection::DescendingRank,
        (true, false) => RankDirection::AscendingRank,
    };

    let finite_dim_constituent = if field.is_archimedean() {
        let sub = reducibility::finite_dim_submodule(field, n, p1, chi)?;
        let quo = reducibility::finite_dim_quotient(field, n, p1, chi)?;
        debug_assert!(sub.is_none() || quo.is_none());
        sub.or(quo).map(|w| FiniteDimConstituent { side: w.side, character: None })
    } else {
        non_archimedean_one_dim(n, p1, chi)
    };

    Ok(CompositionProfile {
        reducible,
        direction,
        rank_of_parent: r,
        length_exact: (!field.is_archimedean()).then_some(if reducible { 2 } else { 1 }),
        length_bound: reducibility::length_upper_bound(field, n, p1, chi)?,
        finite_dim_constituent,
        intertwining_image_note: INTERTWINING_IMAGE_NOTE.into(),
        verdict,
    })
}

/// The unique one-dimensional subquotient of `χ × 1` over a non-archimedean
/// field: present only for `χ = ν^{±n/2}`.
fn non_archimedean_one_dim(n: u32, p1: u32, chi: &Character) -> Option<FiniteDimConstituent> {
    let s = chi.as_real_nu_power()?;
    let half_n = Rational::new(n as i64, 2);
    let p2 = (n - p1) as i64;
    let field = FieldKind::NonArchimedean;
    if s == -half_n {
        Some(FiniteDimConstituent {
            side: Side::Submodule,
            character: Some(Character::nu(field, n, Rational::new(-p2, 2))),
        })
    } else if s == half_n {
        Some(FiniteDimConstituent {
            side: Side::Quotient,
            character: Some(Character::nu(field, n, Rational::new(p1 as i64, 2))),
        })
    } else {
        None
    }
}
