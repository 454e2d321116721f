use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Truss};

/// Bounds for checking symbolic (or large) trusses.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Coordinate radius of the element window.
    pub radius: u32,
    /// Random tuples drawn when the window is too large for exhaustive checks.
    pub samples: usize,
    pub seed: u64,
    /// Exhaustive when `window⁴` is at most this.
    pub exhaustive_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            radius: 5,
            samples: 10_000,
            seed: 0x7472_7573,
            exhaustive_cap: 1 << 20,
        }
    }
}

/// Checks the truss laws (heap axioms, Abelianness, associativity of the
/// product, both distributive laws) and the declared identity and absorber
/// on a window. `Pass` only when the carrier is finite and every tuple was
/// checked; otherwise a clean run is `Inconclusive`.
pub fn check_truss<T: Truss + Enumerable>(t: &T, opts: &CheckOptions) -> Report {
    let elems = t.window(opts.radius);
    let mut report = Report::new("truss");
    if elems.is_empty() {
        return report;
    }
    let n = elems.len();
    let exhaustive = n.checked_pow(4).is_some_and(|m| m <= opts.exhaustive_cap);
    let show = |x: &T::Elem| t.render(x);
    let check_tuple = |report: &mut Report, s: &T::Elem, a: &T::Elem, b: &T::Elem, c: &T::Elem| {
        let loc = || vec![show(s), show(a), show(b), show(c)];
        if t.bracket(a, b, b) != *a || t.bracket(b, b, a) != *a {
            report.violation(Finding::new("malcev", loc(), "[a,b,b] = a = [b,b,a] fails"));
        }
        if t.bracket(a, b, c) != t.bracket(c, b, a) {
            report.violation(Finding::new("abelian", loc(), "[a,b,c] != [c,b,a]"));
        }
        if t.bracket(&t.bracket(s, a, b), c, s) != t.bracket(s, a, &t.bracket(b, c, s)) {
            report.violation(Finding::new("heap-associativity", loc(), "[[s,a,b],c,s] != [s,a,[b,c,s]]"));
        }
        if t.mul(&t.mul(s, a), b) != t.mul(s, &t.mul(a, b)) {
            report.violation(Finding::new("mul-associativity", loc(), "(sa)b != s(ab)"));
        }
        if t.mul(s, &t.bracket(a, b, c)) != t.bracket(&t.mul(s, a), &t.mul(s, b), &t.mul(s, c)) {
            report.violation(Finding::new("left-distributivity", loc(), "s[a,b,c] != [sa,sb,sc]"));
        }
        if t.mul(&t.bracket(a, b, c), s) != t.bracket(&t.mul(a, s), &t.mul(b, s), &t.mul(c, s)) {
            report.violation(Finding::new("right-distributivity", loc(), "[a,b,c]s != [as,bs,cs]"));
        }
    };
    if exhaustive {
        for s in &elems {
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        check_tuple(&mut report, s, a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let mut pick = || &elems[rng.gen_range(0..n)];
            let (s, a, b, c) = (pick(), pick(), pick(), pick());
            check_tuple(&mut report, s, a, b, c);
        }
    }
    if let Some(u) = t.identity() {
        for x in &elems {
            if t.mul(&u, x) != *x || t.mul(x, &u) != *x {
                report.violation(Finding::new("identity", vec![show(&u), show(x)], "1x = x = x1 fails"));
            }
        }
        report.note(format!("identity {}", show(&u)));
    }
    if let Some(z) = t.absorber() {
        for x in &elems {
            if t.mul(&z, x) != z || t.mul(x, &z) != z {
                report.violation(Finding::new("absorber", vec![show(&z), show(x)], "0x = 0 = x0 fails"));
            }
        }
        report.note(format!("absorber {}", show(&z)));
    }
    if !(exhaustive && t.is_finite()) {
        report.mark_bounded(format!(
            "checked {} on a window of {n} elements (radius {})",
            if exhaustive { "every tuple" } else { "sampled tuples" },
            opts.radius
        ));
    }
    report
}
