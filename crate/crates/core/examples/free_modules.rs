// Free modules over trusses, their universal property, and which modules
// of the form `T(N)` are free.

use std::fmt::Write;

use trusskit::error::Result;
use trusskit::tmodule::{
    basis_check_free, free_absorber_witness, freeness_of_tn, FiniteModule, FreeModule, RModule,
};
use trusskit::traits::{Enumerable, Heap, TrussModule};
use trusskit::truss::{BuiltinTruss, FiniteRing, FiniteTruss};

fn run_example() -> Result<String> {
    let mut out = String::new();
    let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
    let f = FreeModule::new(t.clone(), 2)?;
    let [x1, x2] = [f.generator(0)?, f.generator(1)?];
    let m = f.bracket(&x1, &f.scaled_generator(0, 2)?, &x2);
    writeln!(out, "x1 = {}, x2 = {}, [x1, 2x1, x2] = {}", f.render(&x1), f.render(&x2), f.render(&m)).unwrap();
    writeln!(out, "2.[x1, 2x1, x2] = {}", f.render(&f.act(&2, &m))).unwrap();

    let target = FiniteModule::regular(&t);
    writeln!(out, "lift x1 -> 1, x2 -> 2 sends it to {}", f.lift(&target, &[1, 2], &m)?).unwrap();

    let (z1, z2) = free_absorber_witness(&f)?.expect("rank 2 over a ring-type truss");
    writeln!(out, "two absorbers: {} and {}", f.render(&z1), f.render(&z2)).unwrap();
    writeln!(out, "{}", basis_check_free(&f, &f.generators(), 2)?.summary()).unwrap();

    let brace = FreeModule::new(BuiltinTruss::C2Brace, 2)?;
    writeln!(out, "free module over the C2 brace, tails |k| <= 1: {} elements", brace.window(1).len()).unwrap();

    let z2 = FiniteRing::zn(2);
    for (name, n) in [("Z2", RModule::regular(&z2)), ("Z2^2", RModule::power(&z2, 2)?)] {
        let v = freeness_of_tn(&n)?;
        writeln!(out, "T({name}) free over T(Z2): {}", v.free).unwrap();
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
