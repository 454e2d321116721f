//! Finite groups and heaps as explicit tables.

pub mod group;
pub mod heap;
pub mod iso;
pub mod morphism;
pub mod subheap;

pub use group::{validate_group_table, FiniteGroup};
pub use heap::{validate_heap, FiniteHeap, ValidationOptions};
pub use iso::{find_group_isomorphism, find_isomorphism};
pub use morphism::HeapMorphism;
pub use subheap::{generated_subheap, quotient, Normality, Quotient, SubHeap};
