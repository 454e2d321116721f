// The direct sum (coproduct) of Abelian heaps in canonical triple form.

use std::fmt::Write;

use trusskit::algebra::{FiniteGroup, FiniteHeap};
use trusskit::coproduct::{singleton_sum_iso_check, DirectSum, HeapSummand, Letter};
use trusskit::error::Result;
use trusskit::traits::Enumerable;

fn run_example() -> Result<String> {
    let mut out = String::new();
    let c2 = FiniteHeap::from_group(&FiniteGroup::cyclic(2));
    let c3 = FiniteHeap::from_group(&FiniteGroup::cyclic(3));
    let sum = DirectSum::new(HeapSummand::new(c2.clone(), 0)?, HeapSummand::new(c3, 0)?);

    let word = [Letter::A(1), Letter::B(2), Letter::A(0), Letter::B(1), Letter::A(1)];
    let x = sum.normalize_word(&word)?;
    let rep = sum.representative_word(&x);
    writeln!(out, "{} normalizes to {x}", sum.render_word(&word)).unwrap();
    writeln!(out, "shortest representative: {}", sum.render_word(&rep)).unwrap();
    let g = sum.to_group_form(&x);
    writeln!(out, "group form: ({}, {}, {})", g.a, g.b, g.k).unwrap();

    let c2c2 = DirectSum::new(HeapSummand::new(c2.clone(), 0)?, HeapSummand::new(c2, 0)?);
    writeln!(out, "H(C2) + H(C2) with |n| <= 1: {} elements", c2c2.window(1).len()).unwrap();

    let iso = singleton_sum_iso_check(3, 3)?;
    writeln!(out, "{}", iso.summary()).unwrap();
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
