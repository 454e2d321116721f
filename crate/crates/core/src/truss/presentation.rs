//! Coordinates for the worked extensions and their closed-form products.
//!
//! Each presentation builds elements from its coordinates by heap arithmetic
//! inside the extension (retract sums at the absorber), decodes elements back
//! into coordinates, and states the closed-form product. [`Presentation::check`]
//! compares the closed forms with the letter-wise product on a window.

use std::fmt::Debug;

use super::builtin::BuiltinTruss;
use super::extension::{double_extension, ring_extension, unital_extension, ExtElem, Extension};
use super::finite::FiniteTruss;
use super::retract::{retract_ring, RetractRing};
use super::ring::FiniteRing;
use crate::error::Result;
use crate::report::{Finding, Report};
use crate::traits::{Heap, Truss};

pub trait Presentation {
    type Ext: Truss;
    type Coords: Clone + Eq + Debug;

    fn ext(&self) -> &Self::Ext;

    /// The absorber at which the ring is formed.
    fn zero(&self) -> <Self::Ext as Heap>::Elem;

    fn ring(&self) -> RetractRing<'_, Self::Ext>;

    /// Elements of the window, each listed once.
    fn coords_window(&self, radius: u32) -> Vec<Self::Coords>;

    fn build(&self, c: &Self::Coords) -> <Self::Ext as Heap>::Elem;

    fn decode(&self, x: &<Self::Ext as Heap>::Elem) -> Self::Coords;

    fn closed_mul(&self, a: &Self::Coords, b: &Self::Coords) -> Self::Coords;

    fn render(&self, c: &Self::Coords) -> String;

    /// `decode ∘ build = id` on the window, and for every pair the
    /// letter-wise product equals the closed form.
    fn check(&self, radius: u32) -> Report {
        let mut report = Report::new("closed-form products");
        let window = self.coords_window(radius);
        let built: Vec<_> = window.iter().map(|c| self.build(c)).collect();
        for (c, x) in window.iter().zip(&built) {
            if self.decode(x) != *c {
                report.violation(Finding::new(
                    "coordinates",
                    vec![self.render(c)],
                    format!("decodes to {}", self.render(&self.decode(x))),
                ));
            }
        }
        let ext = self.ext();
        for (a, x) in window.iter().zip(&built) {
            for (b, y) in window.iter().zip(&built) {
                let letterwise = ext.mul(x, y);
                let closed = self.closed_mul(a, b);
                if letterwise != self.build(&closed) {
                    report.violation(Finding::new(
                        "closed-form-product",
                        vec![self.render(a), self.render(b)],
                        format!(
                            "letter-wise {} but closed form {}",
                            self.render(&self.decode(&letterwise)),
                            self.render(&closed)
                        ),
                    ));
                }
            }
        }
        report.note(format!("{} elements, {} products", window.len(), window.len().pow(2)));
        report
    }
}

fn parity(x: i64) -> i64 {
    x.rem_euclid(2)
}

/// `T(ℤ₂)₀ = {σu + k·i₀}` with `u = [i₁, i₀, 0]`.
#[derive(Clone, Debug)]
pub struct TZ2Zero {
    ext: Extension<BuiltinTruss>,
}

impl TZ2Zero {
    pub fn new() -> Result<Self> {
        Ok(TZ2Zero {
            ext: ring_extension(BuiltinTruss::TZn(2))?,
        })
    }

    pub fn u(&self) -> ExtElem<BuiltinTruss> {
        self.ext.bracket(&self.ext.embed(1), &self.ext.embed(0), &self.ext.adjoined())
    }

    pub fn i0(&self) -> ExtElem<BuiltinTruss> {
        self.ext.embed(0)
    }

    pub fn i1(&self) -> ExtElem<BuiltinTruss> {
        self.ext.embed(1)
    }
}

impl Presentation for TZ2Zero {
    type Ext = Extension<BuiltinTruss>;
    /// `(σ, k)`.
    type Coords = (i64, i64);

    fn ext(&self) -> &Self::Ext {
        &self.ext
    }

    fn zero(&self) -> ExtElem<BuiltinTruss> {
        self.ext.adjoined()
    }

    fn ring(&self) -> RetractRing<'_, Self::Ext> {
        retract_ring(&self.ext, self.zero(), 0).expect("adjoined zero absorbs")
    }

    fn coords_window(&self, radius: u32) -> Vec<(i64, i64)> {
        let r = i64::from(radius);
        (0..2).flat_map(|s| (-r..=r).map(move |k| (s, k))).collect()
    }

    fn build(&self, &(s, k): &(i64, i64)) -> ExtElem<BuiltinTruss> {
        self.ring().combination(&[(s, self.u()), (k, self.i0())])
    }

    fn decode(&self, x: &ExtElem<BuiltinTruss>) -> (i64, i64) {
        (x.alpha, 1 - x.n)
    }

    fn closed_mul(&self, &(s, k): &(i64, i64), &(s2, k2): &(i64, i64)) -> (i64, i64) {
        (s * s2, k * k2)
    }

    fn render(&self, &(s, k): &(i64, i64)) -> String {
        format!("{s}·u + {k}·i0")
    }
}

/// `ℤ^c₀ = {σ i_n + k i_c}`; `n` is meaningful only when `σ = 1`.
#[derive(Clone, Debug)]
pub struct ConstZero {
    c: i64,
    ext: Extension<BuiltinTruss>,
}

/// `(σ, n, k)` with `n = c` when `σ = 0`.
pub type ConstCoords = (i64, i64, i64);

impl ConstZero {
    pub fn new(c: i64) -> Result<Self> {
        Ok(ConstZero {
            c,
            ext: ring_extension(BuiltinTruss::ConstZ(c))?,
        })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn i(&self, m: i64) -> ExtElem<BuiltinTruss> {
        self.ext.embed(m)
    }

    /// The first addition display:
    /// `σσ′(i_{n−c+n′} + i_c) + (1−σ′)σ i_n + (1−σ)σ′ i_{n′} + (k+k′) i_c`,
    /// evaluated in the retract ring.
    pub fn closed_add(&self, &(s, n, k): &ConstCoords, &(s2, n2, k2): &ConstCoords) -> ExtElem<BuiltinTruss> {
        let c = self.c;
        self.ring().combination(&[
            (s * s2, self.i(n - c + n2)),
            (s * s2, self.i(c)),
            ((1 - s2) * s, self.i(n)),
            ((1 - s) * s2, self.i(n2)),
            (k + k2, self.i(c)),
        ])
    }

    /// The same display with `i_{n−c−n′}` in place of `i_{n−c+n′}`.
    pub fn closed_add_variant(&self, &(s, n, k): &ConstCoords, &(s2, n2, k2): &ConstCoords) -> ExtElem<BuiltinTruss> {
        let c = self.c;
        self.ring().combination(&[
            (s * s2, self.i(n - c - n2)),
            (s * s2, self.i(c)),
            ((1 - s2) * s, self.i(n)),
            ((1 - s) * s2, self.i(n2)),
            (k + k2, self.i(c)),
        ])
    }
}

impl Presentation for ConstZero {
    type Ext = Extension<BuiltinTruss>;
    type Coords = ConstCoords;

    fn ext(&self) -> &Self::Ext {
        &self.ext
    }

    fn zero(&self) -> ExtElem<BuiltinTruss> {
        self.ext.adjoined()
    }

    fn ring(&self) -> RetractRing<'_, Self::Ext> {
        retract_ring(&self.ext, self.zero(), 0).expect("adjoined zero absorbs")
    }

    fn coords_window(&self, radius: u32) -> Vec<ConstCoords> {
        let (r, c) = (i64::from(radius), self.c);
        let mut out: Vec<ConstCoords> = (-r..=r).map(|k| (0, c, k)).collect();
        for n in (c - r..=c + r).filter(|&n| n != c) {
            out.extend((-r..=r).map(|k| (1, n, k)));
        }
        out
    }

    fn build(&self, &(s, n, k): &ConstCoords) -> ExtElem<BuiltinTruss> {
        self.ring().combination(&[(s, self.i(n)), (k, self.i(self.c))])
    }

    /// With `α = m − c` for `i_m` and `x̃ = (α, n − 1)`:
    /// `σ i_n + k i_c ↦ (σ(n − c), −σ − k)`.
    fn decode(&self, x: &ExtElem<BuiltinTruss>) -> ConstCoords {
        let alpha = x.alpha - self.c;
        let m = x.n - 1;
        if alpha == 0 {
            (0, self.c, -m)
        } else {
            (1, alpha + self.c, -m - 1)
        }
    }

    fn closed_mul(&self, &(s, _, k): &ConstCoords, &(s2, _, k2): &ConstCoords) -> ConstCoords {
        (0, self.c, s * s2 + s * k2 + s2 * k + k * k2)
    }

    fn render(&self, &(s, n, k): &ConstCoords) -> String {
        if s == 0 {
            format!("{k}·i{}", self.c)
        } else {
            format!("i{n} + {k}·i{}", self.c)
        }
    }
}

/// `T(C₂)₀ = {σt + n·a}` with `t = [b, a, 0]`.
#[derive(Clone, Debug)]
pub struct C2BraceZero {
    ext: Extension<BuiltinTruss>,
}

impl C2BraceZero {
    pub fn new() -> Result<Self> {
        Ok(C2BraceZero {
            ext: ring_extension(BuiltinTruss::C2Brace)?,
        })
    }

    pub fn a(&self) -> ExtElem<BuiltinTruss> {
        self.ext.embed(0)
    }

    pub fn b(&self) -> ExtElem<BuiltinTruss> {
        self.ext.embed(1)
    }

    pub fn t(&self) -> ExtElem<BuiltinTruss> {
        self.ext.bracket(&self.b(), &self.a(), &self.ext.adjoined())
    }
}

impl Presentation for C2BraceZero {
    type Ext = Extension<BuiltinTruss>;
    /// `(σ, n)`.
    type Coords = (i64, i64);

    fn ext(&self) -> &Self::Ext {
        &self.ext
    }

    fn zero(&self) -> ExtElem<BuiltinTruss> {
        self.ext.adjoined()
    }

    fn ring(&self) -> RetractRing<'_, Self::Ext> {
        retract_ring(&self.ext, self.zero(), 0).expect("adjoined zero absorbs")
    }

    fn coords_window(&self, radius: u32) -> Vec<(i64, i64)> {
        let r = i64::from(radius);
        (0..2).flat_map(|s| (-r..=r).map(move |n| (s, n))).collect()
    }

    fn build(&self, &(s, n): &(i64, i64)) -> ExtElem<BuiltinTruss> {
        self.ring().combination(&[(s, self.t()), (n, self.a())])
    }

    fn decode(&self, x: &ExtElem<BuiltinTruss>) -> (i64, i64) {
        (x.alpha, 1 - x.n)
    }

    /// `((1 − (−1)^{σ′n + σn′}) / 2) t + nn′ a`.
    fn closed_mul(&self, &(s, n): &(i64, i64), &(s2, n2): &(i64, i64)) -> (i64, i64) {
        let sign = if parity(s2 * n + s * n2) == 0 { 1 } else { -1 };
        ((1 - sign) / 2, n * n2)
    }

    fn render(&self, &(s, n): &(i64, i64)) -> String {
        format!("{s}·t + {n}·a")
    }
}

/// `ℤ^c_{0,1} = {σ i_n + k i_c + l·1}`, built as `(ℤ^c ⊞ {1}) ⊞ {0}`.
#[derive(Clone, Debug)]
pub struct ConstZeroOne {
    c: i64,
    ext: Extension<Extension<BuiltinTruss>>,
}

/// `(σ, n, k, l)` with `n = c` when `σ = 0`.
pub type ConstOneCoords = (i64, i64, i64, i64);

impl ConstZeroOne {
    pub fn new(c: i64) -> Result<Self> {
        Ok(ConstZeroOne {
            c,
            ext: double_extension(BuiltinTruss::ConstZ(c))?,
        })
    }

    pub fn i(&self, m: i64) -> ExtElem<Extension<BuiltinTruss>> {
        self.ext.embed(self.ext.inner().embed(m))
    }

    pub fn one(&self) -> ExtElem<Extension<BuiltinTruss>> {
        self.ext.embed(self.ext.inner().adjoined())
    }
}

impl Presentation for ConstZeroOne {
    type Ext = Extension<Extension<BuiltinTruss>>;
    type Coords = ConstOneCoords;

    fn ext(&self) -> &Self::Ext {
        &self.ext
    }

    fn zero(&self) -> ExtElem<Extension<BuiltinTruss>> {
        self.ext.adjoined()
    }

    fn ring(&self) -> RetractRing<'_, Self::Ext> {
        retract_ring(&self.ext, self.zero(), 0).expect("adjoined zero absorbs")
    }

    fn coords_window(&self, radius: u32) -> Vec<ConstOneCoords> {
        let (r, c) = (i64::from(radius), self.c);
        let mut out = Vec::new();
        for l in -r..=r {
            out.extend((-r..=r).map(|k| (0, c, k, l)));
            for n in (c - r..=c + r).filter(|&n| n != c) {
                out.extend((-r..=r).map(|k| (1, n, k, l)));
            }
        }
        out
    }

    fn build(&self, &(s, n, k, l): &ConstOneCoords) -> ExtElem<Extension<BuiltinTruss>> {
        self.ring()
            .combination(&[(s, self.i(n)), (k, self.i(self.c)), (l, self.one())])
    }

    /// `σ i_n + k i_c + l·1 ↦ (σ(n − c), l, −σ − k − l)` in the coordinates
    /// `((α, n₁), n₂ − 1)`.
    fn decode(&self, x: &ExtElem<Extension<BuiltinTruss>>) -> ConstOneCoords {
        let alpha = x.alpha.alpha - self.c;
        let l = x.alpha.n;
        let m = x.n - 1;
        if alpha == 0 {
            (0, self.c, -m - l, l)
        } else {
            (1, alpha + self.c, -m - 1 - l, l)
        }
    }

    /// `(σσ′+σk′+σ′k+kk′+kl′+lk′) i_c + σl′ i_n + σ′l i_{n′} + ll′·1`,
    /// re-expressed in coordinates.
    fn closed_mul(&self, a: &ConstOneCoords, b: &ConstOneCoords) -> ConstOneCoords {
        let (s, n, k, l) = *a;
        let (s2, n2, k2, l2) = *b;
        let kc = s * s2 + s * k2 + s2 * k + k * k2 + k * l2 + l * k2;
        let x = self.ring().combination(&[
            (kc, self.i(self.c)),
            (s * l2, self.i(n)),
            (s2 * l, self.i(n2)),
            (l * l2, self.one()),
        ]);
        self.decode(&x)
    }

    fn render(&self, &(s, n, k, l): &ConstOneCoords) -> String {
        if s == 0 {
            format!("{k}·i{} + {l}·1", self.c)
        } else {
            format!("i{n} + {k}·i{} + {l}·1", self.c)
        }
    }
}

/// `T(R)₁` with coordinates `r + n` at the absorber `0 ∈ R`.
#[derive(Clone, Debug)]
pub struct Dorroh {
    ring: FiniteRing,
    ext: Extension<FiniteTruss>,
}

impl Dorroh {
    pub fn new(ring: FiniteRing) -> Result<Self> {
        let ext = unital_extension(FiniteTruss::from_ring(&ring))?;
        Ok(Dorroh { ring, ext })
    }

    pub fn base_ring(&self) -> &FiniteRing {
        &self.ring
    }
}

impl Presentation for Dorroh {
    type Ext = Extension<FiniteTruss>;
    /// `(r, n)`.
    type Coords = (usize, i64);

    fn ext(&self) -> &Self::Ext {
        &self.ext
    }

    fn zero(&self) -> ExtElem<FiniteTruss> {
        self.ext.embed(self.ring.zero())
    }

    fn ring(&self) -> RetractRing<'_, Self::Ext> {
        retract_ring(&self.ext, self.zero(), 0).expect("0 of R stays an absorber")
    }

    fn coords_window(&self, radius: u32) -> Vec<(usize, i64)> {
        let r = i64::from(radius);
        (-r..=r)
            .flat_map(|n| (0..self.ring.order()).map(move |x| (x, n)))
            .collect()
    }

    /// `r + n = [r, 0, n·1]`.
    fn build(&self, &(r, n): &(usize, i64)) -> ExtElem<FiniteTruss> {
        self.ring()
            .combination(&[(1, self.ext.embed(r)), (n, self.ext.adjoined())])
    }

    fn decode(&self, x: &ExtElem<FiniteTruss>) -> (usize, i64) {
        (x.alpha, x.n)
    }

    /// `rr′ + n′r + nr′ + nn′`.
    fn closed_mul(&self, &(r, n): &(usize, i64), &(r2, n2): &(usize, i64)) -> (usize, i64) {
        let rr = self.ring.mul(r, r2);
        let a = self.ring.times(n2, r);
        let b = self.ring.times(n, r2);
        (self.ring.add(rr, self.ring.add(a, b)), n * n2)
    }

    fn render(&self, &(r, n): &(usize, i64)) -> String {
        format!("{} + {n}", self.ring.names()[r])
    }
}

/// Dorroh comparison for `R` on `|n|, |n′| ≤ window`.
pub fn dorroh_compare(ring: &FiniteRing, window: u32) -> Result<Report> {
    let d = Dorroh::new(ring.clone())?;
    let mut report = d.check(window);
    report.subject = format!("Dorroh extension of a ring of order {}", ring.order());
    Ok(report)
}

/// A coordinate map `φ` from an extension of `⋆` to `ℤ`, checked on a window
/// to be a bijection onto `−r..=r` shifted, additive and multiplicative.
pub fn star_ring_report<E: Truss + crate::traits::Enumerable>(
    ext: &E,
    zero: E::Elem,
    phi: impl Fn(&E::Elem) -> i64,
    radius: u32,
) -> Report {
    use std::collections::BTreeSet;
    let mut report = Report::new("retract ring of an extension of the one-point truss vs ℤ");
    let ring = match retract_ring(ext, zero, radius) {
        Ok(r) => r,
        Err(e) => {
            report.violation(Finding::new("absorber", vec![], e.to_string()));
            return report;
        }
    };
    let window = crate::traits::Enumerable::window(ext, radius);
    let images: BTreeSet<i64> = window.iter().map(&phi).collect();
    if images.len() != window.len() {
        report.violation(Finding::new("injective", vec![], "coordinate map not injective"));
    }
    for x in &window {
        for y in &window {
            if phi(&ring.add(x, y)) != phi(x) + phi(y) {
                report.violation(Finding::new("additive", vec![format!("{x:?}"), format!("{y:?}")], "φ(x+y) != φx+φy"));
            }
            if phi(&ring.mul(x, y)) != phi(x) * phi(y) {
                report.violation(Finding::new("multiplicative", vec![format!("{x:?}"), format!("{y:?}")], "φ(xy) != φxφy"));
            }
        }
    }
    report.mark_bounded(format!("window radius {radius}"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traits::Enumerable;
    use crate::truss::check::{check_truss, CheckOptions};

    #[test]
    fn tz2_zero_closed_forms() {
        let p = TZ2Zero::new().unwrap();
        assert!(p.check(5).is_clean(), "{}", p.check(5).summary());
        let ring = p.ring();
        let i1 = ring.add(&p.u(), &p.i0());
        assert_eq!(i1, p.i1());
        assert_eq!(p.ext().identity(), Some(p.i1()));
        assert_eq!(p.decode(&p.u()), (1, 0));
    }

    #[test]
    fn const_zero_closed_forms() {
        for c in [-2, 0, 3] {
            let p = ConstZero::new(c).unwrap();
            let r = p.check(4);
            assert!(r.is_clean(), "{}", r.summary());
        }
        let p = ConstZero::new(0).unwrap();
        let x = p.build(&(1, 3, 1));
        let y = p.build(&(1, -2, 2));
        assert_eq!(p.decode(&p.ext().mul(&x, &y)), (0, 0, 6));
    }

    #[test]
    fn const_zero_addition_displays() {
        let p = ConstZero::new(2).unwrap();
        let w = p.coords_window(3);
        let mut variant_disagrees = false;
        for a in &w {
            for b in &w {
                let sum = p.ring().add(&p.build(a), &p.build(b));
                assert_eq!(p.closed_add(a, b), sum);
                variant_disagrees |= p.closed_add_variant(a, b) != sum;
            }
        }
        assert!(variant_disagrees);
    }

    #[test]
    fn old_absorber_is_demoted() {
        let p = ConstZero::new(1).unwrap();
        let ic = p.i(1);
        for (s, n, k) in p.coords_window(3) {
            let x = p.build(&(s, n, k));
            assert_eq!(p.decode(&p.ext().mul(&ic, &x)), (0, 1, s + k));
        }
        assert_ne!(p.ext().mul(&ic, &p.zero()), ic);
    }

    #[test]
    fn c2_brace_closed_forms() {
        let p = C2BraceZero::new().unwrap();
        assert!(p.check(5).is_clean());
        assert_eq!(p.closed_mul(&(1, 1), &(0, 1)), (1, 1));
        let prod = p.ext().mul(&p.build(&(1, 1)), &p.build(&(0, 1)));
        assert_eq!(p.render(&p.decode(&prod)), "1·t + 1·a");
        assert_eq!(p.ext().identity(), Some(p.a()));
        assert_eq!(p.decode(&p.t()), (1, 0));
    }

    #[test]
    fn const_zero_one_closed_forms() {
        let p = ConstZeroOne::new(0).unwrap();
        let r = p.check(2);
        assert!(r.is_clean(), "{}", r.summary());
        let c = p.c;
        assert_eq!(p.closed_mul(&(1, 2, 0, 1), &(0, c, 1, 0)), (0, c, 2, 0));
        assert!(p.ext().identity().is_some() && p.ext().absorber().is_some());
        assert_eq!(p.ext().identity(), Some(p.one()));
    }

    #[test]
    fn dorroh_rings() {
        for n in [2, 4, 6] {
            let r = dorroh_compare(&FiniteRing::zn(n), 3).unwrap();
            assert!(r.is_clean(), "{}", r.summary());
        }
        let d = Dorroh::new(FiniteRing::zn(2)).unwrap();
        assert_eq!(d.closed_mul(&(1, 1), &(1, 1)), (1, 1));
        let x = d.build(&(1, 1));
        assert_eq!(d.decode(&d.ext().mul(&x, &x)), (1, 1));
    }

    #[test]
    fn unital_extension_laws() {
        let t1 = unital_extension(BuiltinTruss::TZn(2)).unwrap();
        let r = check_truss(&t1, &CheckOptions { radius: 3, samples: 2000, ..CheckOptions::default() });
        assert!(r.is_clean(), "{}", r.summary());
        let u = t1.embed(1);
        let one = t1.adjoined();
        assert_eq!(t1.mul(&u, &one), u);
        assert_ne!(u, one);
        assert_eq!(t1.absorber(), Some(t1.embed(0)));
    }

    #[test]
    fn zero_extension_replaces_absorber() {
        let t0 = ring_extension(BuiltinTruss::ConstZ(0)).unwrap();
        let r = check_truss(&t0, &CheckOptions { radius: 3, samples: 2000, ..CheckOptions::default() });
        assert!(r.is_clean(), "{}", r.summary());
        assert_eq!(t0.absorber(), Some(t0.adjoined()));
    }

    #[test]
    fn star_extensions_are_integers() {
        let s0 = ring_extension(BuiltinTruss::Star).unwrap();
        let r = star_ring_report(&s0, s0.adjoined(), |x| 1 - x.n, 6);
        assert!(r.is_clean(), "{}", r.summary());
        let s1 = unital_extension(BuiltinTruss::Star).unwrap();
        let r = star_ring_report(&s1, s1.embed(0), |x| x.n, 6);
        assert!(r.is_clean(), "{}", r.summary());
    }

    #[test]
    fn double_extension_of_star_has_four_idempotents() {
        let d = double_extension(BuiltinTruss::Star).unwrap();
        let idempotents = d.window(3).into_iter().filter(|x| d.mul(x, x) == *x).count();
        assert_eq!(idempotents, 4);
    }
}
