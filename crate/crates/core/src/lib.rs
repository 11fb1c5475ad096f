//! Exact algebra for equivariant slice and ribbon obstructions of periodic knots.
//!
//! The crate provides Laurent polynomials over `Z` and `Q`, polynomials over
//! GF(2), the group ring `Z[Z/q × Z]`, integer factorization, the slice and
//! ribbon criteria built on them, box-diagram realization of witnesses, and
//! Reidemeister torsion of based chain complexes over `Q(t)`.

pub mod conditions;
pub mod construct;
pub mod cyclotomic;
pub mod error;
pub mod factor;
pub mod gf2;
pub mod groupring;
pub mod laurent;
pub mod notation;
pub mod polymat;
pub mod torsion;
mod zx;

pub use error::{Error, Result};
pub use gf2::GF2Poly;
pub use groupring::{CharacterComponents, GroupRingPoly, PlusMinusPair};
pub use laurent::{LaurentPoly, QPoly, ZPoly};
pub use torsion::{BasedChainComplex, RationalFunction};
