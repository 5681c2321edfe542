//! Knot diagram rewriting with exact invariant bookkeeping.
//!
//! Diagrams are planar-diagram (PD) codes or standard plats. Two rewriting
//! pipelines are provided: [`reduce_alt`] turns any knot diagram into a
//! reduced prime alternating diagram, and [`reduce_plat`] turns it into a
//! highly twisted standard plat. Both keep a chosen quantum invariant fixed up
//! to a tracked framing power, which the exact oracles in [`invariants`]
//! check.

pub mod corpus;
pub mod cyclotomic;
pub mod diagram;
pub mod error;
pub mod group;
pub mod invariants;
pub mod reduce_alt;
pub mod reduce_plat;
pub mod theory;

pub use cyclotomic::CyclotomicInt;
pub use diagram::braid::BraidWord;
pub use diagram::checkerboard::{CheckerboardGraph, Shading};
pub use diagram::plat::PlatDiagram;
pub use diagram::PdDiagram;
pub use error::{Error, Result};
pub use group::FiniteGroupWithClass;
pub use theory::Theory;
