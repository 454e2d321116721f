// The unital extension of `T(R)` retracts to the Dorroh extension `R ⊕ ℤ`.

use std::fmt::Write;

use trusskit::error::Result;
use trusskit::io::parse_ring;
use trusskit::traits::Truss;
use trusskit::truss::presentation::Dorroh;
use trusskit::truss::{dorroh_compare, Presentation};

fn run_example() -> Result<String> {
    let mut out = String::new();
    let d = Dorroh::new(parse_ring("Z6")?)?;
    let (x, y) = ((2, 1), (3, -2));
    let product = d.decode(&d.ext().mul(&d.build(&x), &d.build(&y)));
    writeln!(
        out,
        "({}) * ({}) = {}   closed form: {}",
        d.render(&x),
        d.render(&y),
        d.render(&product),
        d.render(&d.closed_mul(&x, &y))
    )
    .unwrap();
    for spec in ["Z2", "Z4", "Z6", "Z2xZ2"] {
        let report = dorroh_compare(&parse_ring(spec)?, 3)?;
        writeln!(out, "{spec:<6} {}", report.summary()).unwrap();
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
