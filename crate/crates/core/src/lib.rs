//! Degenerate principal series `χ × 1` of `GL_n` over ℝ, ℂ and
//! non-archimedean fields, and the cosine transform on real Grassmannians.

pub mod derivatives;
pub mod error;
pub mod grassmann;
pub mod infchar;
pub mod reducibility;
pub mod spectral;
pub mod types;

pub use error::{Error, Result};
pub use spectral::MeroValue;
pub use types::{make_character, modular_character, Character, ComplexRational, FieldKind, InducedRepDesc, Rational};
