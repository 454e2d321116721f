// Words in the free heap and the free Abelian heap.

use std::fmt::Write;

use trusskit::error::Result;
use trusskit::words::{
    abelian_normalize, check_free_heap_axioms, from_free_group, to_free_group, Alphabet, WordExpr,
};

fn run_example() -> Result<String> {
    let mut out = String::new();
    let abc = Alphabet::latin(3);

    for text in ["a b b", "a b c c b", "[a b c, c, c b a]", "[a, b, [b, a, c]]"] {
        let expr = WordExpr::parse(text)?;
        let free = expr.eval_free(&abc)?;
        let abelian = expr.eval_abelian(&abc)?;
        writeln!(out, "{text:<20} free: {:<10} abelian: {}", free.render(&abc), abelian.render(&abc)).unwrap();
    }

    // Through the free group on the letters other than the basepoint and back.
    let w = WordExpr::parse("a b c a c")?.eval_free(&abc)?;
    let basepoint = abc.sym("a")?;
    let g = to_free_group(&w, basepoint);
    writeln!(out, "{} -> {} -> {}", w.render(&abc), g.render(&abc), from_free_group(&g, basepoint)?.render(&abc)).unwrap();

    let sym = abelian_normalize(&abc.parse_letters("a b a c b")?)?;
    writeln!(out, "symmetric coefficients of a b a c b: {:?}", sym.to_named(&abc)).unwrap();

    let axioms = check_free_heap_axioms(2, 3);
    writeln!(out, "{}", axioms.summary()).unwrap();
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
