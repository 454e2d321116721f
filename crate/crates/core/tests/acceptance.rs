//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trusskit::algebra::{FiniteGroup, FiniteHeap};
use trusskit::coproduct::{singleton_sum_iso_check, DirectSum, HeapSummand, Letter};
use trusskit::tmodule::{
    adjunction_check, freeness_of_tn, verify_abs_of_free, FiniteModule, FreeModule, ModuleCheckOptions, RModule,
    TrivialModule,
};
use trusskit::traits::{Enumerable, Heap, Truss, TrussModule};
use trusskit::truss::presentation::{C2BraceZero, ConstZero, TZ2Zero};
use trusskit::truss::{dorroh_compare, BuiltinTruss, FiniteRing, FiniteTruss, Presentation};
use trusskit::words::{check_free_heap_axioms, free_heap_op, prune, reduced_words, to_free_group, from_free_group};

const RETRACT_TIME_LIMIT: Duration = Duration::from_secs(10);
const EXTENSION_TIME_LIMIT: Duration = Duration::from_secs(30);
const WORD_ALPHABET: usize = 3;
const WORD_MAX_LEN: usize = 5;
const PRUNE_FUZZ_CASES: usize = 10_000;
const SUM_GROUP_FORM_RADIUS: u32 = 8;
const SUM_ORACLE_TRIPLES: usize = 1_000;
const SUM_MIN_DISTINCT: usize = 100;
const SINGLETON_RADIUS: u32 = 6;
const EXTENSION_RADIUS: u32 = 5;
const DORROH_RADIUS: u32 = 5;
const ABS_TAIL_RADIUS: u32 = 5;
const SEED: u64 = 0x7472_7573;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn retract_round_trip() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (name, g) in FiniteGroup::small_groups() {
        let h = FiniteHeap::from_group(&g);
        let table = h.table();
        for e in 0..h.len() {
            let back = FiniteHeap::from_group(&h.retract(e).map_err(|x| x.to_string())?);
            ensure(back.table() == table, || format!("{name} at basepoint {e}"))?;
            checked += 1;
        }
    }
    within(RETRACT_TIME_LIMIT, start)?;
    Ok(format!("{checked} (group, basepoint) pairs in {:.2?}", start.elapsed()))
}

fn free_word_engine() -> Outcome {
    let axioms = check_free_heap_axioms(WORD_ALPHABET, WORD_MAX_LEN);
    ensure(axioms.is_pass(), || axioms.summary())?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..PRUNE_FUZZ_CASES {
        let len = 2 * rng.gen_range(0..=12) + 1;
        let w: Vec<u32> = (0..len).map(|_| rng.gen_range(0..WORD_ALPHABET as u32)).collect();
        let mut v = w.clone();
        loop {
            let pairs: Vec<usize> = (0..v.len().saturating_sub(1)).filter(|&i| v[i] == v[i + 1]).collect();
            if pairs.is_empty() {
                break;
            }
            let i = pairs[rng.gen_range(0..pairs.len())];
            v.drain(i..i + 2);
        }
        let p = prune(&w).map_err(|e| e.to_string())?;
        ensure(p.letters() == v.as_slice(), || format!("prune fuzz case {case}: {w:?}"))?;
    }

    let words = reduced_words(WORD_ALPHABET, WORD_MAX_LEN);
    let e = 0;
    let g: Vec<_> = words.iter().map(|w| to_free_group(w, e)).collect();
    for (w, gw) in words.iter().zip(&g) {
        ensure(from_free_group(gw, e).ok().as_ref() == Some(w), || "free group round trip".into())?;
    }
    let distinct: BTreeSet<_> = g.iter().map(|x| x.factors().to_vec()).collect();
    ensure(distinct.len() == words.len(), || "to_free_group is not injective".into())?;
    for (u, gu) in words.iter().zip(&g) {
        for (v, gv) in words.iter().zip(&g) {
            let uv = gu.mul(&gv.inverse());
            for (w, gw) in words.iter().zip(&g) {
                ensure(to_free_group(&free_heap_op(u, v, w), e) == uv.mul(gw), || {
                    "bracket is not u v^-1 w in the free group".into()
                })?;
            }
        }
    }
    Ok(format!(
        "{}; {PRUNE_FUZZ_CASES} prune cases; group oracle on {}^3 triples",
        axioms.summary(),
        words.len()
    ))
}

/// `x0 − x1 + ⋯` in `ℤ₂ ⊕ ℤ₂ ⊕ ℤ` with `A:a ↦ (a, 0, 0)`, `B:b ↦ (0, b, 1)`.
fn sum_oracle(w: &[Letter<usize, usize>]) -> (i64, i64, i64) {
    let (mut a, mut b, mut k) = (0i64, 0i64, 0i64);
    for (i, l) in w.iter().enumerate() {
        let s = if i % 2 == 0 { 1 } else { -1 };
        match *l {
            Letter::A(x) => a += s * x as i64,
            Letter::B(y) => {
                b += s * y as i64;
                k += s;
            }
        }
    }
    (a.rem_euclid(2), b.rem_euclid(2), k)
}

fn coproduct_suite() -> Outcome {
    let c2 = FiniteHeap::from_group(&FiniteGroup::cyclic(2));
    let sum = DirectSum::new(
        HeapSummand::new(c2.clone(), 0).map_err(|e| e.to_string())?,
        HeapSummand::new(c2, 0).map_err(|e| e.to_string())?,
    );
    let window = sum.window(SUM_GROUP_FORM_RADIUS);
    let forms: BTreeSet<_> = window.iter().map(|x| sum.to_group_form(x)).collect();
    ensure(forms.len() == window.len(), || "to_group_form is not injective".into())?;
    for x in &window {
        ensure(sum.from_group_form(&sum.to_group_form(x)) == *x, || format!("group form round trip at {x}"))?;
    }
    for g in &forms {
        ensure(sum.to_group_form(&sum.from_group_form(g)) == *g, || "from_group_form round trip".into())?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let word = |rng: &mut ChaCha8Rng| -> Vec<Letter<usize, usize>> {
        let len = 2 * rng.gen_range(0..=8) + 1;
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { Letter::A(rng.gen_range(0..2)) } else { Letter::B(rng.gen_range(0..2)) })
            .collect()
    };
    for t in 0..SUM_ORACLE_TRIPLES {
        let (u, v, w) = (word(&mut rng), word(&mut rng), word(&mut rng));
        let n = |s: &[Letter<usize, usize>]| sum.normalize_word(s).map_err(|e| e.to_string());
        let r = sum.bracket(&n(&u)?, &n(&v)?, &n(&w)?);
        let (a, b, c) = (sum_oracle(&u), sum_oracle(&v), sum_oracle(&w));
        let expect = ((a.0 - b.0 + c.0).rem_euclid(2), (a.1 - b.1 + c.1).rem_euclid(2), a.2 - b.2 + c.2);
        ensure(sum_oracle(&sum.representative_word(&r)) == expect, || format!("oracle mismatch on triple {t}"))?;
    }

    // [x, e, y] with y = tail grows the integer coordinate without bound.
    let mut x = sum.normalize_word(&[Letter::A(0)]).map_err(|e| e.to_string())?;
    let e = x.clone();
    let tail = sum
        .normalize_word(&[Letter::A(0), Letter::B(0), Letter::A(1)])
        .map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    while seen.len() < SUM_MIN_DISTINCT {
        ensure(seen.insert(x.clone()), || format!("repeated canonical element {x}"))?;
        x = sum.bracket(&x, &e, &tail);
    }
    Ok(format!(
        "{} group forms round-trip; {SUM_ORACLE_TRIPLES} oracle triples; {} distinct canonical elements",
        window.len(),
        seen.len()
    ))
}

fn singleton_sum() -> Outcome {
    let r = singleton_sum_iso_check(3, SINGLETON_RADIUS).map_err(|e| e.to_string())?;
    ensure(r.is_pass(), || r.summary())?;
    Ok(r.summary())
}

fn extensions() -> Outcome {
    let start = Instant::now();
    let tz2 = TZ2Zero::new().map_err(|e| e.to_string())?;
    let ext = tz2.ext();
    let ring = tz2.ring();
    ensure(ext.identity() == Some(tz2.i1()), || "identity of T(Z2)_0 is not i1".into())?;
    ensure(ring.add(&tz2.u(), &tz2.i0()) == tz2.i1(), || "i1 != u + i0".into())?;
    let mut lines = Vec::new();
    let reports = [
        ("T(Z2)_0", tz2.check(EXTENSION_RADIUS)),
        ("Z^2_0", ConstZero::new(2).map_err(|e| e.to_string())?.check(EXTENSION_RADIUS)),
        ("Z^-1_0", ConstZero::new(-1).map_err(|e| e.to_string())?.check(EXTENSION_RADIUS)),
        ("T(C2)_0", C2BraceZero::new().map_err(|e| e.to_string())?.check(EXTENSION_RADIUS)),
    ];
    for (name, r) in reports {
        ensure(r.is_clean() && r.violation_count == 0, || format!("{name}: {}", r.summary()))?;
        lines.push(name);
    }
    within(EXTENSION_TIME_LIMIT, start)?;
    Ok(format!("{} closed forms exact in {:.2?}", lines.join(", "), start.elapsed()))
}

fn dorroh() -> Outcome {
    for n in [2, 4, 6] {
        let r = dorroh_compare(&FiniteRing::zn(n), DORROH_RADIUS).map_err(|e| e.to_string())?;
        ensure(r.is_clean() && r.violation_count == 0, || format!("Z{n}: {}", r.summary()))?;
    }
    Ok(format!("Z2, Z4, Z6 with |n|, |n'| <= {DORROH_RADIUS}"))
}

fn freeness() -> Outcome {
    for k in [2, 3] {
        let r = FiniteRing::zn(k);
        let free = freeness_of_tn(&RModule::regular(&r)).map_err(|e| e.to_string())?;
        ensure(free.free, || format!("T(Z{k}) reported not free"))?;
        let sum = RModule::regular(&r).direct_sum(&RModule::regular(&r)).map_err(|e| e.to_string())?;
        let v = freeness_of_tn(&sum).map_err(|e| e.to_string())?;
        ensure(!v.free, || format!("T(Z{k}^2) reported free"))?;
        let (z1, z2) = &v.absorber_witness;
        let f = FreeModule::new(FiniteTruss::from_ring(&r), 2).map_err(|e| e.to_string())?;
        ensure(z1 != z2, || "absorber witness is a single element".into())?;
        for t in 0..k {
            ensure(f.act(&t, z1) == *z1 && f.act(&t, z2) == *z2, || "witness is not absorbing".into())?;
        }
    }
    Ok("T(R) free, T(R+R) not free with 0x1 != 0x2, R = Z2, Z3".into())
}

fn abs_of_free() -> Outcome {
    let r = verify_abs_of_free(&FiniteRing::zn(2), 2, ABS_TAIL_RADIUS).map_err(|e| e.to_string())?;
    ensure(r.is_pass(), || r.summary())?;
    Ok(r.summary())
}

fn adjunction() -> Outcome {
    let z2 = FiniteRing::zn(2);
    let n = RModule::regular(&z2);
    let mut out = Vec::new();
    for m in [RModule::regular(&z2), RModule::power(&z2, 2).map_err(|e| e.to_string())?] {
        let r = adjunction_check(&FiniteModule::from_r_module(&m), &n).map_err(|e| e.to_string())?;
        ensure(r.is_pass(), || r.summary())?;
        out.push(r.summary());
    }
    Ok(out.join("; "))
}

fn trivial_action() -> Outcome {
    let m = TrivialModule::new(BuiltinTruss::TZ, BuiltinTruss::TZ);
    let r = m.validate(&ModuleCheckOptions::default());
    ensure(r.is_pass(), || r.summary())?;
    let (ring, witness) = m.ring_module_verdict().map_err(|e| e.to_string())?;
    ensure(!ring, || "reported as a ring module".into())?;
    let (a, b) = witness.ok_or("no absorber witness")?;
    ensure(a != b && m.act(&7, &a) == a && m.act(&-3, &b) == b, || "witness is not two absorbers".into())?;
    Ok(format!("{}; not a ring module (absorbers {a}, {b})", r.summary()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("retract round-trip H(G(H;e)) = H, order <= 8", retract_round_trip),
        ("free heap axioms, prune confluence, free group oracle", free_word_engine),
        ("coproduct group form, word oracle, infinitude", coproduct_suite),
        ("sum of three singletons = H(Z^2)", singleton_sum),
        ("extension closed forms", extensions),
        ("Dorroh extension", dorroh),
        ("freeness of T(N)", freeness),
        ("Abs of the free module of rank 2 over T(Z2)", abs_of_free),
        ("adjunction on brute-forced hom-sets", adjunction),
        ("trivial action on H(Z)", trivial_action),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
