// Absorbers of modules over `T(R)`, the quotient `M_Abs`, and the
// adjunction between `T(R)`-modules and `R`-modules.

use std::fmt::Write;

use trusskit::error::Result;
use trusskit::tmodule::{
    abs_quotient, adjunction_check, is_ring_module, FiniteModule, ModuleCheckOptions, RModule, TrivialModule,
};
use trusskit::truss::{BuiltinTruss, FiniteRing, FiniteTruss};

fn run_example() -> Result<String> {
    let mut out = String::new();
    let z2 = FiniteRing::zn(2);
    let t = FiniteTruss::from_ring(&z2);
    let heap = trusskit::algebra::FiniteHeap::from_group(z2.additive());

    // t.m = m: every element absorbs.
    let trivial = FiniteModule::new(t.clone(), heap, &[vec![0, 1], vec![0, 1]])?;
    let v = is_ring_module(&trivial)?;
    writeln!(out, "trivial action: {} absorbers, ring module: {}", v.absorbers.len(), v.ring_module).unwrap();
    let q = abs_quotient(&trivial)?;
    writeln!(out, "M_Abs has {} element(s)", q.module.len()).unwrap();

    let regular = FiniteModule::from_r_module(&RModule::power(&z2, 2)?);
    let v = is_ring_module(&regular)?;
    writeln!(out, "T(Z2^2): {} absorber, ring module: {}", v.absorbers.len(), v.ring_module).unwrap();

    for (name, m) in [("T(Z2)", FiniteModule::regular(&t)), ("T(Z2^2)", regular), ("trivial", trivial)] {
        let report = adjunction_check(&m, &RModule::regular(&z2))?;
        writeln!(out, "{name:<8} {}", report.summary()).unwrap();
    }

    let tz = TrivialModule::new(BuiltinTruss::TZ, BuiltinTruss::TZ);
    writeln!(out, "{}", tz.validate(&ModuleCheckOptions::default()).summary()).unwrap();
    let (ring, witness) = tz.ring_module_verdict()?;
    writeln!(out, "Z with trivial T(Z)-action is a ring module: {ring}, absorbers {witness:?}").unwrap();
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
