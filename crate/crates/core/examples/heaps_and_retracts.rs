// Heaps from groups and back: `H(G(H; e)) = H` at every basepoint,
// translations between retracts, and a quotient by a normal sub-heap.

use std::fmt::Write;

use trusskit::algebra::{find_group_isomorphism, quotient, FiniteGroup, FiniteHeap, SubHeap};
use trusskit::error::Result;
use trusskit::traits::Heap;

fn run_example() -> Result<String> {
    let mut out = String::new();
    let d3 = FiniteGroup::dihedral(3);
    let h = FiniteHeap::from_group(&d3);
    writeln!(out, "H(D3) has {} elements, abelian: {}", h.len(), h.is_abelian()).unwrap();

    for e in 0..h.len() {
        let g = h.retract(e)?;
        let back = FiniteHeap::from_group(&g);
        let iso = find_group_isomorphism(&g, &d3).is_some();
        writeln!(
            out,
            "basepoint {:>4}: H(G(H; e)) = H {}, G(H; e) = D3 up to iso {}",
            h.name(e),
            back.same_operation(&h),
            iso
        )
        .unwrap();
    }

    let tau = h.translation(0, 3)?;
    writeln!(out, "translation a -> [a, {}, {}] is bijective: {}", h.name(0), h.name(3), tau.is_bijective()).unwrap();

    let z4 = FiniteHeap::from_group(&FiniteGroup::cyclic(4));
    let evens = SubHeap::new(&z4, [0, 2])?;
    let q = quotient(&z4, &evens)?;
    writeln!(out, "H(Z4) / {{0, 2}} = {:?}", q.heap.names()).unwrap();
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
