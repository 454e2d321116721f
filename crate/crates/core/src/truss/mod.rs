//! Trusses: Abelian heaps with an associative multiplication distributing
//! over the heap operation on both sides.

pub mod builtin;
pub mod check;
pub mod extension;
pub mod finite;
pub mod presentation;
pub mod retract;
pub mod ring;

pub use builtin::BuiltinTruss;
pub use check::{check_truss, CheckOptions};
pub use extension::{double_extension, ring_extension, unital_extension, ExtElem, Extension, ExtensionKind};
pub use finite::{validate_truss_tables, FiniteTruss};
pub use presentation::{dorroh_compare, Presentation};
pub use retract::{retract_ring, RetractRing};
pub use ring::FiniteRing;

/// `T(R)`.
pub fn truss_from_ring(ring: &FiniteRing) -> FiniteTruss {
    FiniteTruss::from_ring(ring)
}
