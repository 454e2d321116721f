// Adjoining an identity or an absorber to a truss, with the closed-form
// products of the worked extensions checked against letter-wise products.

use std::fmt::Write;

use trusskit::error::Result;
use trusskit::traits::Truss;
use trusskit::truss::presentation::{C2BraceZero, ConstZero, ConstZeroOne, TZ2Zero};
use trusskit::truss::{check_truss, ring_extension, unital_extension, BuiltinTruss, CheckOptions, Presentation};

fn run_example() -> Result<String> {
    let mut out = String::new();

    let tz2 = TZ2Zero::new()?;
    let ext = tz2.ext();
    writeln!(out, "T(Z2)_0: u = {}, u*u = {}", ext.render(&tz2.u()), ext.render(&ext.mul(&tz2.u(), &tz2.u()))).unwrap();
    writeln!(out, "  {}", tz2.check(4).summary()).unwrap();
    writeln!(out, "Z^2_0:   {}", ConstZero::new(2)?.check(3).summary()).unwrap();
    writeln!(out, "Z^2_01:  {}", ConstZeroOne::new(2)?.check(2).summary()).unwrap();
    writeln!(out, "C2_0:    {}", C2BraceZero::new()?.check(3).summary()).unwrap();

    let opts = CheckOptions { radius: 3, ..CheckOptions::default() };
    let star1 = unital_extension(BuiltinTruss::Star)?;
    let star0 = ring_extension(BuiltinTruss::Star)?;
    writeln!(out, "*_1 axioms: {}", check_truss(&star1, &opts).summary()).unwrap();
    writeln!(out, "*_0 axioms: {}", check_truss(&star0, &opts).summary()).unwrap();
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
