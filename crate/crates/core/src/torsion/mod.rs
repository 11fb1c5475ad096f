//! Reidemeister torsion of based acyclic chain complexes over `Q(t)`.
//!
//! Torsion is an element of `Q(t)^×` and is compared up to sign (or up to
//! `±t^k` where stated); no Whitehead group is modeled.

mod complex;
mod ratfunc;

pub use complex::{dual_complex, ses_torsion_check, BasedChainComplex, SesMaps};
pub use ratfunc::{RationalFunction, RfMatrix};
