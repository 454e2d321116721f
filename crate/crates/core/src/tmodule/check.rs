use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap, Scalar, Truss, TrussModule};

#[derive(Clone, Copy, Debug)]
pub struct ModuleCheckOptions {
    /// Coordinate radius of the scalar and carrier windows.
    pub radius: u32,
    /// Random tuples per law when an exhaustive sweep is too large.
    pub samples: usize,
    pub seed: u64,
    /// Exhaustive when every law's cube has at most this many tuples.
    pub exhaustive_cap: usize,
}

impl Default for ModuleCheckOptions {
    fn default() -> Self {
        ModuleCheckOptions {
            radius: 5,
            samples: 10_000,
            seed: 0x6d6f_6475,
            exhaustive_cap: 1 << 22,
        }
    }
}

/// Mixed-radix index tuples: all of them in lexicographic order when
/// `exhaustive`, otherwise `samples` random ones.
fn tuples(radices: &[usize], exhaustive: bool, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if exhaustive {
        let total: usize = radices.iter().product();
        (0..total)
            .map(|mut i| {
                let mut t = vec![0; radices.len()];
                for (slot, &r) in t.iter_mut().zip(radices).rev() {
                    *slot = i % r;
                    i /= r;
                }
                t
            })
            .collect()
    } else {
        (0..samples)
            .map(|_| radices.iter().map(|&r| rng.gen_range(0..r)).collect())
            .collect()
    }
}

/// Checks the carrier heap laws (Mal'cev, associativity, Abelian) and the
/// three module laws `t(t'm) = (tt')m`, `[t,t',t'']m = [tm,t'm,t''m]`,
/// `t[m,m',m''] = [tm,tm',tm'']`, plus unitality when the truss has an
/// identity. `Pass` only when both scalars and carrier are finite and every
/// tuple was visited.
pub fn check_module<M>(m: &M, opts: &ModuleCheckOptions) -> Report
where
    M: TrussModule + Enumerable,
    M::Scalars: Enumerable,
{
    let t = m.scalars();
    let ts: Vec<Scalar<M>> = t.window(opts.radius);
    let ms: Vec<M::Elem> = m.window(opts.radius);
    let mut report = Report::new("module");
    if ms.is_empty() || ts.is_empty() {
        report.note("empty carrier or truss: laws hold vacuously");
        return report;
    }
    let (nt, nm) = (ts.len(), ms.len());
    let cube = |r: &[usize]| r.iter().try_fold(1usize, |acc, &x| acc.checked_mul(x));
    let laws = [vec![nm; 5], vec![nt, nt, nm], vec![nt, nt, nt, nm], vec![nt, nm, nm, nm]];
    let full: Vec<bool> = laws
        .iter()
        .map(|r| cube(r).is_some_and(|c| c <= opts.exhaustive_cap))
        .collect();
    let exhaustive = full.iter().all(|&f| f);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sm = |x: &M::Elem| format!("{x:?}");
    let st = |x: &Scalar<M>| t.render(x);

    for q in tuples(&laws[0], full[0], opts.samples, &mut rng) {
        let (a, b, c, d, e) = (&ms[q[0]], &ms[q[1]], &ms[q[2]], &ms[q[3]], &ms[q[4]]);
        let loc = || vec![sm(a), sm(b), sm(c)];
        if m.bracket(a, b, b) != *a || m.bracket(b, b, a) != *a {
            report.violation(Finding::new("malcev", loc(), "[a,b,b] = a = [b,b,a] fails"));
        }
        if m.bracket(a, b, c) != m.bracket(c, b, a) {
            report.violation(Finding::new("abelian", loc(), "[a,b,c] != [c,b,a]"));
        }
        if m.bracket(&m.bracket(a, b, c), d, e) != m.bracket(a, b, &m.bracket(c, d, e)) {
            let loc = vec![sm(a), sm(b), sm(c), sm(d), sm(e)];
            report.violation(Finding::new("heap-associativity", loc, "[[a,b,c],d,e] != [a,b,[c,d,e]]"));
        }
    }
    for q in tuples(&laws[1], full[1], opts.samples, &mut rng) {
        let (s, s2, x) = (&ts[q[0]], &ts[q[1]], &ms[q[2]]);
        if m.act(s, &m.act(s2, x)) != m.act(&t.mul(s, s2), x) {
            report.violation(Finding::new(
                "action-associative",
                vec![st(s), st(s2), sm(x)],
                "t(t'm) != (tt')m",
            ));
        }
    }
    for q in tuples(&laws[2], full[2], opts.samples, &mut rng) {
        let (a, b, c, x) = (&ts[q[0]], &ts[q[1]], &ts[q[2]], &ms[q[3]]);
        if m.act(&t.bracket(a, b, c), x) != m.bracket(&m.act(a, x), &m.act(b, x), &m.act(c, x)) {
            report.violation(Finding::new(
                "scalar-distributive",
                vec![st(a), st(b), st(c), sm(x)],
                "[t,t',t'']m != [tm,t'm,t''m]",
            ));
        }
    }
    for q in tuples(&laws[3], full[3], opts.samples, &mut rng) {
        let (s, a, b, c) = (&ts[q[0]], &ms[q[1]], &ms[q[2]], &ms[q[3]]);
        if m.act(s, &m.bracket(a, b, c)) != m.bracket(&m.act(s, a), &m.act(s, b), &m.act(s, c)) {
            report.violation(Finding::new(
                "carrier-distributive",
                vec![st(s), sm(a), sm(b), sm(c)],
                "t[m,m',m''] != [tm,tm',tm'']",
            ));
        }
    }
    if let Some(u) = t.identity() {
        match ms.iter().find(|x| m.act(&u, x) != **x) {
            None => report.note("unital"),
            Some(x) => report.note(format!("not unital: 1·{} != {}", sm(x), sm(x))),
        }
    }
    if !(exhaustive && m.is_finite() && t.is_finite()) {
        report.mark_bounded(format!(
            "{} on windows of {nt} scalars and {nm} elements (radius {})",
            if exhaustive { "every tuple" } else { "sampled tuples" },
            opts.radius
        ));
    }
    report
}

/// Whether `x` is fixed by every scalar in the window.
pub fn is_absorber_on<M>(m: &M, x: &M::Elem, scalars: &[Scalar<M>]) -> bool
where
    M: TrussModule,
{
    scalars.iter().all(|t| m.act(t, x) == *x)
}
