//! Verification engine for skew monoidal structure on finite and fibred-set
//! categories.
//!
//! The crate is organized around two carrier kinds: [`fincat::FinCategory`]
//! (explicit tables, exhaustive checks) and [`bigcat::SliceCategory`]
//! (fibred finite sets over an index set, sampled checks). Everything above
//! them — skew monoidal structures, adjunctions, actions, warpings, comonads —
//! is generic over the [`fincat::Category`] trait, so the same axiom checkers
//! run against both.

// Structure components are boxed procedures; positional table code indexes
// several parallel vectors at once.
#![allow(clippy::type_complexity, clippy::needless_range_loop, clippy::manual_checked_ops)]

pub mod bigcat;
pub mod comonad;
pub mod fincat;
pub mod gen;
pub mod reflection;
pub mod report;
pub mod skewmon;
pub mod slice;
pub mod warping;

pub use fincat::{Category, FinCategory, FinFunctor, FinNat, Fun, MorId, ObjId};
pub use report::{AxiomReport, Error, LawReport, Violation};

#[cfg(test)]
mod sanity {
    #[test]
    fn crate_builds() {}
}
