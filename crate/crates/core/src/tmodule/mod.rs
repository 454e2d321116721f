//! Modules over trusses: validation, absorbers, the quotient `M ↦ M_Abs`
//! and its adjunction with `T`, free modules and freeness tests.

pub mod absorbers;
pub mod adjunction;
pub mod check;
pub mod finite;
pub mod free;
pub mod freeness;
pub mod morphism;
pub mod trivial;

pub use absorbers::{
    abs_on_morphism, abs_quotient, absorbers, absorbers_via_zero, is_ring_module, to_ring_module, AbsQuotient,
    AbsorberSet, RingModuleVerdict,
};
pub use adjunction::{adjunction_check, adjunction_theta, adjunction_theta_inv, enumerate_r_homs};
pub use check::{check_module, ModuleCheckOptions};
pub use finite::{find_cyclic_generator, FiniteModule, RModule};
pub use free::{FreeModule, FreeModuleElement};
pub use freeness::{
    basis_check, basis_check_free, basis_search, free_absorber_witness, free_set_check, free_set_check_free,
    freeness_of_tn, verify_abs_of_free, FreenessVerdict,
};
pub use morphism::{enumerate_homs, sigma, ModuleMorphism};
pub use trivial::TrivialModule;

/// `validate_module` for any enumerable module.
pub fn validate_module<M>(m: &M) -> crate::report::Report
where
    M: crate::traits::TrussModule + crate::traits::Enumerable,
    M::Scalars: crate::traits::Enumerable,
{
    check_module(m, &ModuleCheckOptions::default())
}
