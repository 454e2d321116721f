//! Free sets, bases and the freeness results for modules over `T(R)`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::absorbers::absorbers;
use super::finite::{find_cyclic_generator, FiniteModule, RModule};
use super::free::{FreeModule, FreeModuleElement};
use super::morphism::sigma;
use crate::algebra::generated_subheap;
use crate::coproduct::NaryElement;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap, Truss, TrussModule};
use crate::truss::{FiniteRing, FiniteTruss};

/// Non-empty subsets of `0..n` in order of size, then lexicographically.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u64..(1 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn render_set(m: &FiniteModule, xs: &[usize]) -> String {
    let names: Vec<&str> = xs.iter().map(|&x| m.heap().name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

/// Image of `⊞_{y ∈ ys} σ_y`: the sub-heap generated by the orbits `T·y`.
fn copair_image(m: &FiniteModule, ys: &[usize]) -> BTreeSet<usize> {
    let orbit: Vec<usize> = ys
        .iter()
        .flat_map(|&y| (0..m.truss().len()).map(move |t| m.action(t, y)))
        .collect();
    match generated_subheap(m.heap(), &orbit) {
        Ok(s) => s.members().iter().copied().collect(),
        Err(_) => BTreeSet::new(),
    }
}

/// Records, for each `x ∈ S` and `Y = S ∖ {x}`, the size of
/// `σ_x(T) ∩ (⊞_Y σ_y)(⊞_Y T)`.
fn intersections_finite(m: &FiniteModule, s: &[usize], report: &mut Report) {
    for (k, &x) in s.iter().enumerate() {
        let ys: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &y)| y).collect();
        let orbit: BTreeSet<usize> = (0..m.truss().len()).map(|t| m.action(t, x)).collect();
        let common = orbit.intersection(&copair_image(m, &ys)).count();
        report.record(Finding::new(
            "intersection",
            vec![m.heap().name(x).to_string(), render_set(m, &ys)],
            format!("|σ_x(T) ∩ image| = {common}"),
        ));
    }
}

/// Injectivity of `⊞_{x ∈ S} σ_x` for every non-empty `S ⊆ candidates`.
///
/// `|S| = 1` is decided by scanning `T`. For `|S| ≥ 2` the source is
/// infinite while `M` is finite, so among the `|M| + 1` elements whose only
/// non-zero coordinate is the first tail, two share an image; the search
/// returns that pair.
pub fn free_set_check(m: &FiniteModule, candidates: &[usize]) -> Result<Report> {
    if candidates.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&bad) = candidates.iter().find(|&&x| x >= m.len()) {
        return Err(Error::NotInCarrier(bad.to_string()));
    }
    let mut report = Report::new(format!("free set {}", render_set(m, candidates)));
    for s in subsets(candidates.len()) {
        let s: Vec<usize> = s.iter().map(|&i| candidates[i]).collect();
        if s.len() == 1 {
            let sig = sigma(m, s[0])?;
            if !sig.is_injective() {
                let (a, b) = first_collision(sig.map()).expect("non-injective map has a collision");
                let name = |t: usize| m.truss().heap().name(t).to_string();
                report.violation(Finding::new(
                    "sigma-injective",
                    vec![render_set(m, &s)],
                    format!("σ({}) = σ({}) = {}", name(a), name(b), m.heap().name(sig.apply(a))),
                ));
            }
            continue;
        }
        let source = FreeModule::copies(m.truss().clone(), s.len())?;
        let mut seen: BTreeMap<usize, FreeModuleElement<usize>> = BTreeMap::new();
        for k in 0..=m.len() as i64 {
            let mut y = source.sum().base();
            y.tails[0] = k;
            let img = source.lift(m, &s, &y)?;
            if let Some(prev) = seen.insert(img, y.clone()) {
                report.violation(Finding::new(
                    "copairing-injective",
                    vec![render_set(m, &s)],
                    format!(
                        "{} and {} both map to {}",
                        source.render(&prev),
                        source.render(&y),
                        m.heap().name(img)
                    ),
                ));
                break;
            }
        }
        intersections_finite(m, &s, &mut report);
    }
    Ok(report)
}

fn first_collision(map: &[usize]) -> Option<(usize, usize)> {
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    for (a, &y) in map.iter().enumerate() {
        if let Some(&b) = first.get(&y) {
            return Some((b, a));
        }
        first.insert(y, a);
    }
    None
}

/// A free set whose copairing is onto; onto-ness is decided by closure.
pub fn basis_check(m: &FiniteModule, candidates: &[usize]) -> Result<Report> {
    let mut report = free_set_check(m, candidates)?;
    report.subject = format!("basis {}", render_set(m, candidates));
    let image = copair_image(m, candidates);
    if image.len() != m.len() {
        report.violation(Finding::new(
            "copairing-onto",
            vec![render_set(m, candidates)],
            format!("image has {} of {} elements", image.len(), m.len()),
        ));
    }
    Ok(report)
}

/// Tries every candidate set of size `1..=max_size`; returns the first basis.
pub fn basis_search(m: &FiniteModule, max_size: usize) -> Result<(Option<Vec<usize>>, Report)> {
    let mut report = Report::new(format!("basis search up to size {max_size}"));
    let all: Vec<usize> = (0..m.len()).collect();
    for s in subsets(m.len()) {
        if s.len() > max_size {
            break;
        }
        let cands: Vec<usize> = s.iter().map(|&i| all[i]).collect();
        if basis_check(m, &cands)?.is_pass() {
            report.note(format!("basis {}", render_set(m, &cands)));
            return Ok((Some(cands), report));
        }
    }
    report.note(format!("no basis of size <= {max_size}"));
    Ok((None, report))
}

/// Free-set test for candidates inside a free module.
///
/// `|S| = 1` over a finite truss is decided by scanning `T`. When `S` is the
/// full generator set the copairing is a permutation of summands, hence an
/// isomorphism. Otherwise the source window of tail radius `length_bound` is
/// searched: a collision is a definite negative, no collision is
/// `Inconclusive`. Non-empty intersections `σ_x(T) ∩ image(⊞_Y σ_y)` found
/// on the window also refute freeness.
pub fn free_set_check_free<T>(
    f: &FreeModule<T>,
    candidates: &[FreeModuleElement<T::Elem>],
    length_bound: u32,
) -> Result<Report>
where
    T: Truss + Enumerable + Clone,
{
    if candidates.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(bad) = candidates.iter().find(|x| !f.contains(x)) {
        return Err(Error::NotInCarrier(f.render(bad)));
    }
    let show = |s: &[FreeModuleElement<T::Elem>]| {
        let parts: Vec<String> = s.iter().map(|x| f.render(x)).collect();
        format!("{{{}}}", parts.join(", "))
    };
    let mut report = Report::new(format!("free set {}", show(candidates)));
    let gens: BTreeSet<FreeModuleElement<T::Elem>> = f.generators().into_iter().collect();
    let scalars = f.truss().window(length_bound);
    for idx in subsets(candidates.len()) {
        let s: Vec<FreeModuleElement<T::Elem>> = idx.iter().map(|&i| candidates[i].clone()).collect();
        let distinct: BTreeSet<_> = s.iter().cloned().collect();
        if s.len() == 1 {
            let mut seen = BTreeMap::new();
            for t in &scalars {
                if let Some(prev) = seen.insert(f.act(t, &s[0]), t.clone()) {
                    report.violation(Finding::new(
                        "sigma-injective",
                        vec![show(&s)],
                        format!("σ({}) = σ({})", f.truss().render(&prev), f.truss().render(t)),
                    ));
                    break;
                }
            }
            if !f.truss().is_finite() {
                report.mark_bounded(format!("σ on {} scalars of {}", scalars.len(), show(&s)));
            }
            continue;
        }
        if distinct.len() == s.len() && distinct == gens {
            report.note(format!("{} is the generator set: copairing permutes summands", show(&s)));
            continue;
        }
        let source = FreeModule::copies(f.truss().clone(), s.len())?;
        let mut seen: BTreeMap<FreeModuleElement<T::Elem>, FreeModuleElement<T::Elem>> = BTreeMap::new();
        let mut collided = false;
        for y in source.window(length_bound) {
            let img = source.lift(f, &s, &y)?;
            if let Some(prev) = seen.insert(img.clone(), y.clone()) {
                report.violation(Finding::new(
                    "copairing-injective",
                    vec![show(&s)],
                    format!("{} and {} both map to {}", source.render(&prev), source.render(&y), f.render(&img)),
                ));
                collided = true;
                break;
            }
        }
        for (k, x) in s.iter().enumerate() {
            let ys: Vec<_> = s.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, y)| y.clone()).collect();
            let sub = FreeModule::copies(f.truss().clone(), ys.len())?;
            let image: BTreeSet<_> = sub
                .window(length_bound)
                .iter()
                .map(|y| sub.lift(f, &ys, y))
                .collect::<Result<_>>()?;
            let hits = scalars.iter().filter(|t| image.contains(&f.act(t, x))).count();
            let finding = Finding::new(
                "intersection",
                vec![f.render(x), show(&ys)],
                format!("{hits} common element(s) on the window"),
            );
            if hits > 0 {
                report.violation(finding);
            } else {
                report.record(finding);
            }
        }
        if !collided {
            report.mark_bounded(format!("{} injective on tail radius {length_bound}", show(&s)));
        }
    }
    Ok(report)
}

/// Basis test inside a free module: a free set equal to the generator set
/// is a basis; other candidate sets can only be refuted.
pub fn basis_check_free<T>(
    f: &FreeModule<T>,
    candidates: &[FreeModuleElement<T::Elem>],
    length_bound: u32,
) -> Result<Report>
where
    T: Truss + Enumerable + Clone,
{
    let mut report = free_set_check_free(f, candidates, length_bound)?;
    report.subject = report.subject.replacen("free set", "basis", 1);
    let gens: BTreeSet<_> = f.generators().into_iter().collect();
    let cands: BTreeSet<_> = candidates.iter().cloned().collect();
    if cands != gens {
        let source = FreeModule::copies(f.truss().clone(), candidates.len())?;
        let image: BTreeSet<_> = source
            .window(length_bound)
            .iter()
            .map(|y| source.lift(f, candidates, y))
            .collect::<Result<_>>()?;
        let missing = gens.iter().find(|g| !image.contains(*g));
        match missing {
            Some(g) => report.mark_bounded(format!("generator {} not reached on the window", f.render(g))),
            None => report.mark_bounded("onto-ness is not decided outside the generator set"),
        }
    }
    Ok(report)
}

/// Verdict of the freeness test for `T(N)` over `T(R)`.
#[derive(Clone, Debug)]
pub struct FreenessVerdict {
    pub free: bool,
    /// `m` with `r ↦ r·m` bijective, giving `N ≅ R`.
    pub generator: Option<usize>,
    pub absorbers_of_tn: usize,
    /// `(0x₁, 0x₂)` in the rank-2 free module, both absorbers, distinct.
    pub absorber_witness: (FreeModuleElement<usize>, FreeModuleElement<usize>),
    pub report: Report,
}

/// `T(N)` is free over `T(R)` iff `N ≅ R`.
///
/// A free module of rank `≥ 2` has the distinct absorbers `0x₁ ≠ 0x₂`
/// while `T(N)` has exactly one, so only rank 1 is possible, and then
/// `T(N) ≅ T(R)` iff `N ≅ R`.
pub fn freeness_of_tn(n: &RModule) -> Result<FreenessVerdict> {
    let ring = n.ring();
    ring.one().ok_or(Error::NotUnital)?;
    let t = FiniteTruss::from_ring(ring);
    let zero = ring.zero();
    let tn = FiniteModule::from_r_module(n);
    let mut report = Report::new(format!("freeness of T(N), |N| = {}, |R| = {}", n.order(), ring.order()));

    let abs = absorbers(&tn);
    if abs.len() != 1 {
        report.violation(Finding::new(
            "unique-absorber",
            vec![],
            format!("T(N) has {} absorbers", abs.len()),
        ));
    }
    let f2 = FreeModule::new(t.clone(), 2)?;
    let z: Vec<FreeModuleElement<usize>> = f2
        .generators()
        .iter()
        .map(|x| f2.act_letterwise(&zero, x))
        .collect();
    for zi in &z {
        if !(0..t.len()).all(|s| f2.act(&s, zi) == *zi && f2.act_letterwise(&s, zi) == *zi) {
            report.violation(Finding::new("absorber", vec![f2.render(zi)], "0·x is not fixed by T"));
        }
    }
    if z[0] == z[1] {
        report.violation(Finding::new("distinct-absorbers", vec![], "0x₁ = 0x₂"));
    }
    report.note(format!("0x1 = {}, 0x2 = {} are distinct absorbers", f2.render(&z[0]), f2.render(&z[1])));

    let generator = find_cyclic_generator(n);
    match generator {
        Some(m) => report.note(format!("N = R·{} is isomorphic to R", n.group().name(m))),
        None => report.note("no m with r -> r·m bijective: N is not isomorphic to R"),
    }
    Ok(FreenessVerdict {
        free: generator.is_some(),
        generator,
        absorbers_of_tn: abs.len(),
        absorber_witness: (z[0].clone(), z[1].clone()),
        report,
    })
}

/// Two distinct absorbers `0x₁ ≠ 0x₂` of a free module of rank ≥ 2 over a
/// ring-type truss, checked against every scalar of a finite truss.
pub fn free_absorber_witness<T>(f: &FreeModule<T>) -> Result<Option<(FreeModuleElement<T::Elem>, FreeModuleElement<T::Elem>)>>
where
    T: Truss + Enumerable + Clone,
{
    let zero = f.truss().absorber().ok_or(Error::NotRingType)?;
    if f.rank() < 2 {
        return Ok(None);
    }
    let z0 = f.scaled_generator(0, zero.clone())?;
    let z1 = f.scaled_generator(1, zero)?;
    let scalars = f.truss().window(5);
    let fixed = |z: &FreeModuleElement<T::Elem>| scalars.iter().all(|t| f.act(t, z) == *z);
    Ok((fixed(&z0) && fixed(&z1) && z0 != z1).then_some((z0, z1)))
}

/// Encodes a component vector as an id of `Rⁿ` (first coordinate most significant).
fn encode(q: usize, comps: &[usize]) -> usize {
    comps.iter().fold(0, |acc, &c| acc * q + c)
}

fn decode(q: usize, n: usize, mut id: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    for slot in v.iter_mut().rev() {
        *slot = id % q;
        id /= q;
    }
    v
}

/// For `M = ⊞ᵢ₌₁ⁿ T(R)xᵢ`: absorbers are exactly the elements with zero
/// components (the tail sub-heap, `≅ H(ℤⁿ⁻¹)`); `x ~ y` iff the components
/// agree; `M_Abs` is table-equal to `Rⁿ` under the component map; the
/// generator images form a basis. Tail coordinates are checked on
/// `|k| ≤ radius`; triple checks are sampled above 10⁶ triples.
pub fn verify_abs_of_free(r: &FiniteRing, n: usize, radius: u32) -> Result<Report> {
    let t = FiniteTruss::from_ring(r);
    let f = FreeModule::new(t.clone(), n)?;
    let q = r.order();
    let zero = r.zero();
    let mut report = Report::new(format!("Abs of free module of rank {n} over T(R), |R| = {q}"));
    let window = f.window(radius);
    let scalars: Vec<usize> = (0..t.len()).collect();
    let is_abs = |x: &FreeModuleElement<usize>| scalars.iter().all(|s| f.act(s, x) == *x);

    for x in &window {
        if f.act_closed(&zero, x) != Some(f.act_letterwise(&zero, x)) {
            report.violation(Finding::new("closed-action", vec![f.render(x)], "fast path disagrees"));
        }
        let zero_comps = x.components.iter().all(|&c| c == zero);
        if is_abs(x) != zero_comps {
            report.violation(Finding::new(
                "absorbers-are-tails",
                vec![f.render(x)],
                "absorber iff all components vanish fails",
            ));
        }
    }
    let gens0: Vec<FreeModuleElement<usize>> = (0..n).map(|i| f.scaled_generator(i, zero)).collect::<Result<_>>()?;
    for g in &gens0 {
        if !is_abs(g) {
            report.violation(Finding::new("absorber", vec![f.render(g)], "0x is not an absorber"));
        }
    }

    let abs: Vec<&FreeModuleElement<usize>> = window.iter().filter(|x| is_abs(x)).collect();
    let tails: BTreeSet<Vec<i64>> = abs.iter().map(|x| x.tails.clone()).collect();
    let expected = (2 * radius as usize + 1).pow(n as u32 - 1);
    if tails.len() != abs.len() || tails.len() != expected {
        report.violation(Finding::new(
            "tails-bijective",
            vec![],
            format!("{} absorbers, {} tail vectors, {expected} expected", abs.len(), tails.len()),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6162_7321);
    let triples = |len: usize, rng: &mut ChaCha8Rng| -> Vec<(usize, usize, usize)> {
        if len.pow(3) <= 1_000_000 {
            (0..len.pow(3)).map(|i| (i / (len * len), i / len % len, i % len)).collect()
        } else {
            (0..10_000).map(|_| (rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(0..len))).collect()
        }
    };
    for (a, b, c) in triples(abs.len(), &mut rng) {
        let (x, y, z) = (abs[a], abs[b], abs[c]);
        let img = f.bracket(x, y, z);
        let lin: Vec<i64> = (0..n - 1).map(|j| x.tails[j] - y.tails[j] + z.tails[j]).collect();
        if img.tails != lin || !is_abs(&img) {
            report.violation(Finding::new(
                "tails-heap",
                vec![f.render(x), f.render(y), f.render(z)],
                "tail map does not send the bracket to u - v + w in Z^(n-1)",
            ));
        }
    }

    let base = f.sum().base();
    let proj = |x: &FreeModuleElement<usize>| encode(q, &x.components);
    for (a, b, c) in triples(window.len(), &mut rng) {
        let (x, y, z) = (&window[a], &window[b], &window[c]);
        let related = is_abs(&f.bracket(x, y, &base));
        if related != (x.components == y.components) {
            report.violation(Finding::new(
                "relation",
                vec![f.render(x), f.render(y)],
                "x ~ y iff components agree fails",
            ));
        }
        let lhs = proj(&f.bracket(x, y, z));
        let rhs = encode(
            q,
            &(0..n)
                .map(|i| r.add(r.add(x.components[i], r.neg(y.components[i])), z.components[i]))
                .collect::<Vec<_>>(),
        );
        if lhs != rhs {
            report.violation(Finding::new(
                "projection-bracket",
                vec![f.render(x), f.render(y), f.render(z)],
                "projection does not preserve the bracket",
            ));
        }
    }
    for x in &window {
        for &s in &scalars {
            let comps: Vec<usize> = x.components.iter().map(|&c| r.mul(s, c)).collect();
            if proj(&f.act(&s, x)) != encode(q, &comps) {
                report.violation(Finding::new("projection-action", vec![f.render(x)], "projection does not preserve the action"));
            }
        }
    }

    let size = q.pow(n as u32);
    let rep = |id: usize| NaryElement {
        components: decode(q, n, id),
        tails: vec![0; n - 1],
    };
    let power = RModule::power(r, n)?;
    let abs_class = encode(q, &vec![zero; n]);
    for a in 0..size {
        for b in 0..size {
            let sum = proj(&f.bracket(&rep(a), &rep(abs_class), &rep(b)));
            if sum != power.add(a, b) {
                report.violation(Finding::new(
                    "quotient-table",
                    vec![a.to_string(), b.to_string()],
                    "G(M/Abs(M); Abs(M)) addition differs from R^n",
                ));
            }
        }
        for &s in &scalars {
            if proj(&f.act(&s, &rep(a))) != power.act(s, a) {
                report.violation(Finding::new(
                    "quotient-action",
                    vec![s.to_string(), a.to_string()],
                    "action on M_Abs differs from R^n",
                ));
            }
        }
    }
    report.note(format!("M_Abs has {size} classes and is table-equal to R^{n}"));

    let basis: Vec<usize> = f.generators().iter().map(proj).collect();
    let mut hit = vec![false; size];
    for coeffs in 0..size {
        let cs = decode(q, n, coeffs);
        let v = cs
            .iter()
            .zip(&basis)
            .fold(power.zero(), |acc, (&c, &b)| power.add(acc, power.act(c, b)));
        if std::mem::replace(&mut hit[v], true) {
            report.violation(Finding::new(
                "basis-independent",
                vec![format!("{cs:?}")],
                "two coefficient vectors give the same combination",
            ));
            break;
        }
    }
    if report.is_clean() {
        report.note(format!("generator images span M_Abs with rank {n}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_of(n: &RModule) -> FiniteModule {
        FiniteModule::from_r_module(n)
    }

    #[test]
    fn unit_is_a_basis_of_the_regular_module() {
        let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
        let m = FiniteModule::regular(&t);
        assert!(basis_check(&m, &[1]).unwrap().is_pass());
        assert!(free_set_check(&m, &[1]).unwrap().is_pass());
        assert!(free_set_check(&m, &[0]).unwrap().is_fail());
    }

    #[test]
    fn pairs_in_finite_modules_collide() {
        let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
        let m = FiniteModule::regular(&t);
        let r = free_set_check(&m, &[1, 2]).unwrap();
        assert!(r.is_fail());
        assert!(r.findings.iter().any(|f| f.law == "copairing-injective"));
    }

    #[test]
    fn klein_module_has_no_basis() {
        let v = t_of(&RModule::power(&FiniteRing::zn(2), 2).unwrap());
        let (found, _) = basis_search(&v, 4).unwrap();
        assert_eq!(found, None);
    }

    #[test]
    fn generators_of_free_module_form_a_basis() {
        let f = FreeModule::new(FiniteTruss::from_ring(&FiniteRing::zn(2)), 2).unwrap();
        let gens = f.generators();
        let r = basis_check_free(&f, &gens, 3).unwrap();
        assert!(r.is_pass(), "{}", r.summary());
        let r = free_set_check_free(&f, &[gens[0].clone(), gens[0].clone()], 2).unwrap();
        assert!(r.is_fail());
    }

    #[test]
    fn freeness_transfer() {
        for k in [2, 3, 4] {
            let r = FiniteRing::zn(k);
            assert!(freeness_of_tn(&RModule::regular(&r)).unwrap().free);
        }
        for k in [2, 3] {
            let r = FiniteRing::zn(k);
            let v = freeness_of_tn(&RModule::power(&r, 2).unwrap()).unwrap();
            assert!(!v.free);
            assert_ne!(v.absorber_witness.0, v.absorber_witness.1);
            assert!(v.report.is_clean());
        }
    }

    #[test]
    fn abs_of_free_is_r_power() {
        for (k, n) in [(2, 1), (2, 2), (3, 2), (2, 3)] {
            let rep = verify_abs_of_free(&FiniteRing::zn(k), n, 2).unwrap();
            assert!(rep.is_pass(), "{}", rep.summary());
        }
    }
}
