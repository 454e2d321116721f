//! Direct sums (coproducts) of Abelian heaps.
//!
//! An element of `A ⊞ B` is stored as a triple `(α, β, n)` with `α` in the
//! retract `G(A; e_A)`, `β` in `G(B; e_B)` and `n ∈ ℤ`; the heap operation is
//! `x − y + z` componentwise. Word forms over the tagged alphabet `A ⊔ B` are
//! derived from the triple and evaluated back by alternating sums.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::traits::{Enumerable, Heap};

/// An Abelian heap together with a chosen basepoint.
#[derive(Clone, Debug)]
pub struct HeapSummand<H: Heap> {
    pub heap: H,
    pub base: H::Elem,
}

impl<H: Heap> HeapSummand<H> {
    pub fn new(heap: H, base: H::Elem) -> Result<Self> {
        if !heap.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if !heap.contains(&base) {
            return Err(Error::NotInCarrier(format!("{base:?}")));
        }
        Ok(HeapSummand { heap, base })
    }

    fn add(&self, a: &H::Elem, b: &H::Elem) -> H::Elem {
        self.heap.bracket(a, &self.base, b)
    }

    fn sub(&self, a: &H::Elem, b: &H::Elem) -> H::Elem {
        self.heap.bracket(a, b, &self.base)
    }

    fn bracket(&self, a: &H::Elem, b: &H::Elem, c: &H::Elem) -> H::Elem {
        self.heap.bracket(a, b, c)
    }
}

/// The one-point heap `{*}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Point;

impl Heap for Point {
    type Elem = ();

    fn bracket(&self, _: &(), _: &(), _: &()) {}

    fn contains(&self, _: &()) -> bool {
        true
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl Enumerable for Point {
    fn window(&self, _radius: u32) -> Vec<()> {
        vec![()]
    }

    fn is_finite(&self) -> bool {
        true
    }
}

/// Canonical triple `(α, β, n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoproductElement<A, B> {
    pub alpha: A,
    pub beta: B,
    pub n: i64,
}

impl<A: fmt::Debug, B: fmt::Debug> fmt::Display for CoproductElement<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {})", self.alpha, self.beta, self.n)
    }
}

/// A letter of `A ⊔ B`; the tag keeps the summands disjoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter<A, B> {
    A(A),
    B(B),
}

/// Element of the explicit group `G(A; e_A) ⊕ G(B; e_B) ⊕ ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupTriple<A, B> {
    pub a: A,
    pub b: B,
    pub k: i64,
}

/// `A ⊞ B` with fixed basepoints.
#[derive(Clone, Debug)]
pub struct DirectSum<HA: Heap, HB: Heap> {
    pub left: HeapSummand<HA>,
    pub right: HeapSummand<HB>,
}

pub type Elem<HA, HB> = CoproductElement<<HA as Heap>::Elem, <HB as Heap>::Elem>;
pub type Word<HA, HB> = Vec<Letter<<HA as Heap>::Elem, <HB as Heap>::Elem>>;

impl<HA: Heap, HB: Heap> DirectSum<HA, HB> {
    pub fn new(left: HeapSummand<HA>, right: HeapSummand<HB>) -> Self {
        DirectSum { left, right }
    }

    pub fn e_a(&self) -> &HA::Elem {
        &self.left.base
    }

    pub fn e_b(&self) -> &HB::Elem {
        &self.right.base
    }

    /// `ι_A(a) = (a, e_B, 0)`.
    pub fn inject_left(&self, a: HA::Elem) -> Result<Elem<HA, HB>> {
        if !self.left.heap.contains(&a) {
            return Err(Error::NotInCarrier(format!("{a:?}")));
        }
        Ok(CoproductElement {
            alpha: a,
            beta: self.e_b().clone(),
            n: 0,
        })
    }

    /// `ι_B(b) = (e_A, b, 1)`.
    pub fn inject_right(&self, b: HB::Elem) -> Result<Elem<HA, HB>> {
        if !self.right.heap.contains(&b) {
            return Err(Error::NotInCarrier(format!("{b:?}")));
        }
        Ok(CoproductElement {
            alpha: self.e_a().clone(),
            beta: b,
            n: 1,
        })
    }

    pub fn inject(&self, letter: &Letter<HA::Elem, HB::Elem>) -> Result<Elem<HA, HB>> {
        match letter {
            Letter::A(a) => self.inject_left(a.clone()),
            Letter::B(b) => self.inject_right(b.clone()),
        }
    }

    /// `[x, y, z] = x − y + z` componentwise.
    pub fn op(&self, x: &Elem<HA, HB>, y: &Elem<HA, HB>, z: &Elem<HA, HB>) -> Elem<HA, HB> {
        CoproductElement {
            alpha: self.left.bracket(&x.alpha, &y.alpha, &z.alpha),
            beta: self.right.bracket(&x.beta, &y.beta, &z.beta),
            n: x.n - y.n + z.n,
        }
    }

    /// Alternating-sign evaluation of an odd-length word over `A ⊔ B`.
    pub fn normalize_word(&self, word: &[Letter<HA::Elem, HB::Elem>]) -> Result<Elem<HA, HB>> {
        if word.len() % 2 == 0 {
            return Err(Error::EvenLength(word.len()));
        }
        let mut acc = self.inject(&word[0])?;
        for pair in word[1..].chunks(2) {
            acc = self.op(&acc, &self.inject(&pair[0])?, &self.inject(&pair[1])?);
        }
        Ok(acc)
    }

    /// A short word with the fixed tail convention:
    /// `n ≤ 0`: `α (−β)` then `e_B` (n = 0) or `e_A (e_B e_A)^{k−1}` (n = −k);
    /// `n ≥ 1`: `β (−α)` then `e_A` (n = 1) or `e_B (e_A e_B)^{k−1}` (n = 1 + k);
    /// adjacent equal letters are then pruned.
    pub fn representative_word(&self, x: &Elem<HA, HB>) -> Word<HA, HB> {
        let ea = || Letter::A(self.e_a().clone());
        let eb = || Letter::B(self.e_b().clone());
        let neg_a = self.left.sub(self.e_a(), &x.alpha);
        let neg_b = self.right.sub(self.e_b(), &x.beta);
        let mut word = Vec::new();
        if x.n <= 0 {
            word.push(Letter::A(x.alpha.clone()));
            word.push(Letter::B(neg_b));
            if x.n == 0 {
                word.push(eb());
            } else {
                word.push(ea());
                for _ in 1..-x.n {
                    word.push(eb());
                    word.push(ea());
                }
            }
        } else {
            word.push(Letter::B(x.beta.clone()));
            word.push(Letter::A(neg_a));
            if x.n == 1 {
                word.push(ea());
            } else {
                word.push(eb());
                for _ in 1..x.n - 1 {
                    word.push(ea());
                    word.push(eb());
                }
            }
        }
        prune_letters(word)
    }

    /// The unique morphism `A ⊞ B → H` restricting to `φ` and `ψ`,
    /// evaluated on `x` through its representative word.
    pub fn copair_apply<H: Heap>(
        &self,
        target: &H,
        phi: impl Fn(&HA::Elem) -> H::Elem,
        psi: impl Fn(&HB::Elem) -> H::Elem,
        x: &Elem<HA, HB>,
    ) -> Result<H::Elem> {
        if !target.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let values: Vec<H::Elem> = self
            .representative_word(x)
            .iter()
            .map(|l| match l {
                Letter::A(a) => phi(a),
                Letter::B(b) => psi(b),
            })
            .collect();
        Ok(target.fold(&values).expect("representative words have odd length"))
    }

    /// Image in `G(A; e_A) ⊕ G(B; e_B) ⊕ ℤ`, computed by sending the letters
    /// of the representative word to `(a, 0, 0)` and `(0, b, 1)` and summing
    /// with alternating signs.
    pub fn to_group_form(&self, x: &Elem<HA, HB>) -> GroupTriple<HA::Elem, HB::Elem> {
        let image = |l: &Letter<HA::Elem, HB::Elem>| match l {
            Letter::A(a) => GroupTriple {
                a: a.clone(),
                b: self.e_b().clone(),
                k: 0,
            },
            Letter::B(b) => GroupTriple {
                a: self.e_a().clone(),
                b: b.clone(),
                k: 1,
            },
        };
        let mut acc = GroupTriple {
            a: self.e_a().clone(),
            b: self.e_b().clone(),
            k: 0,
        };
        for (i, l) in self.representative_word(x).iter().enumerate() {
            let g = image(l);
            if i % 2 == 0 {
                acc = GroupTriple {
                    a: self.left.add(&acc.a, &g.a),
                    b: self.right.add(&acc.b, &g.b),
                    k: acc.k + g.k,
                };
            } else {
                acc = GroupTriple {
                    a: self.left.sub(&acc.a, &g.a),
                    b: self.right.sub(&acc.b, &g.b),
                    k: acc.k - g.k,
                };
            }
        }
        acc
    }

    pub fn from_group_form(&self, g: &GroupTriple<HA::Elem, HB::Elem>) -> Elem<HA, HB> {
        CoproductElement {
            alpha: g.a.clone(),
            beta: g.b.clone(),
            n: g.k,
        }
    }

    /// Re-expresses `x` in a sum over the same heaps with other basepoints.
    pub fn recoordinate(&self, other: &DirectSum<HA, HB>, x: &Elem<HA, HB>) -> Result<Elem<HA, HB>> {
        other.normalize_word(&self.representative_word(x))
    }

    pub fn contains_elem(&self, x: &Elem<HA, HB>) -> bool {
        self.left.heap.contains(&x.alpha) && self.right.heap.contains(&x.beta)
    }

    pub fn render_word(&self, word: &[Letter<HA::Elem, HB::Elem>]) -> String
    where
        HA::Elem: fmt::Debug,
    {
        word.iter()
            .map(|l| match l {
                Letter::A(a) => format!("A:{a:?}"),
                Letter::B(b) => format!("B:{b:?}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Deletes adjacent equal letters until none remain.
pub fn prune_letters<L: PartialEq>(word: Vec<L>) -> Vec<L> {
    let mut out: Vec<L> = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl<HA: Heap, HB: Heap> Heap for DirectSum<HA, HB> {
    type Elem = Elem<HA, HB>;

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.op(a, b, c)
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.contains_elem(x)
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl<HA: Enumerable, HB: Enumerable> Enumerable for DirectSum<HA, HB> {
    /// All `(α, β, n)` with `|n| ≤ radius`, ordered by `n`, then `α`, then `β`.
    fn window(&self, radius: u32) -> Vec<Self::Elem> {
        let r = i64::from(radius);
        let xs = self.left.heap.window(radius);
        let ys = self.right.heap.window(radius);
        let mut out = Vec::new();
        for n in -r..=r {
            for a in &xs {
                for b in &ys {
                    out.push(CoproductElement {
                        alpha: a.clone(),
                        beta: b.clone(),
                        n,
                    });
                }
            }
        }
        out
    }

    fn is_finite(&self) -> bool {
        false
    }
}

/// Flattened element of a left-associated n-ary sum `((A₁ ⊞ A₂) ⊞ A₃) ⊞ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NaryElement<E> {
    pub components: Vec<E>,
    /// `tails[j]` is the integer coordinate introduced by adjoining summand `j + 2`.
    pub tails: Vec<i64>,
}

/// `⊞ᵢ Aᵢ` over summands of one heap type.
#[derive(Clone, Debug)]
pub struct NarySum<H: Heap> {
    summands: Vec<HeapSummand<H>>,
}

impl<H: Heap> NarySum<H> {
    pub fn new(summands: Vec<HeapSummand<H>>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Ok(NarySum { summands })
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[HeapSummand<H>] {
        &self.summands
    }

    /// The element whose components are the basepoints and whose tails vanish.
    pub fn base(&self) -> NaryElement<H::Elem> {
        NaryElement {
            components: self.summands.iter().map(|s| s.base.clone()).collect(),
            tails: vec![0; self.rank() - 1],
        }
    }

    /// `ι_i(a)`: component `i` is `a`, tail `i − 1` is 1 (for `i ≥ 1`).
    pub fn inject(&self, i: usize, a: H::Elem) -> Result<NaryElement<H::Elem>> {
        let s = self
            .summands
            .get(i)
            .ok_or_else(|| Error::Mismatch(format!("summand {i} out of range")))?;
        if !s.heap.contains(&a) {
            return Err(Error::NotInCarrier(format!("{a:?}")));
        }
        let mut x = self.base();
        x.components[i] = a;
        if i > 0 {
            x.tails[i - 1] = 1;
        }
        Ok(x)
    }

    pub fn op(
        &self,
        x: &NaryElement<H::Elem>,
        y: &NaryElement<H::Elem>,
        z: &NaryElement<H::Elem>,
    ) -> NaryElement<H::Elem> {
        NaryElement {
            components: self
                .summands
                .iter()
                .enumerate()
                .map(|(i, s)| s.bracket(&x.components[i], &y.components[i], &z.components[i]))
                .collect(),
            tails: (0..x.tails.len()).map(|j| x.tails[j] - y.tails[j] + z.tails[j]).collect(),
        }
    }

    /// Alternating-sign evaluation of a word of tagged letters `(i, a)`.
    pub fn normalize_word(&self, word: &[(usize, H::Elem)]) -> Result<NaryElement<H::Elem>> {
        if word.len() % 2 == 0 {
            return Err(Error::EvenLength(word.len()));
        }
        let inj = |l: &(usize, H::Elem)| self.inject(l.0, l.1.clone());
        let mut acc = inj(&word[0])?;
        for pair in word[1..].chunks(2) {
            acc = self.op(&acc, &inj(&pair[0])?, &inj(&pair[1])?);
        }
        Ok(acc)
    }

    /// `α₁`, then `e_i α_i` for `i ≥ 2`, then per tail `±t` copies of
    /// `e₁ e_i` (positive) or `e_i e₁` (negative); pruned.
    pub fn representative_word(&self, x: &NaryElement<H::Elem>) -> Vec<(usize, H::Elem)> {
        let e = |i: usize| (i, self.summands[i].base.clone());
        let mut word = vec![(0, x.components[0].clone())];
        for i in 1..self.rank() {
            word.push(e(i));
            word.push((i, x.components[i].clone()));
        }
        for (j, &t) in x.tails.iter().enumerate() {
            let i = j + 1;
            for _ in 0..t.unsigned_abs() {
                if t > 0 {
                    word.push(e(0));
                    word.push(e(i));
                } else {
                    word.push(e(i));
                    word.push(e(0));
                }
            }
        }
        prune_letters(word)
    }

    pub fn contains_elem(&self, x: &NaryElement<H::Elem>) -> bool {
        x.components.len() == self.rank()
            && x.tails.len() + 1 == self.rank()
            && x.components.iter().zip(&self.summands).all(|(c, s)| s.heap.contains(c))
    }
}

impl<H: Heap> Heap for NarySum<H> {
    type Elem = NaryElement<H::Elem>;

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.op(a, b, c)
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.contains_elem(x)
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl<H: Enumerable> Enumerable for NarySum<H> {
    /// All elements with every tail in `−radius..=radius`, tails varying slowest.
    fn window(&self, radius: u32) -> Vec<Self::Elem> {
        let r = i64::from(radius);
        let mut tails: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 1..self.rank() {
            tails = tails
                .into_iter()
                .flat_map(|t| {
                    (-r..=r).map(move |k| {
                        let mut t = t.clone();
                        t.push(k);
                        t
                    })
                })
                .collect();
        }
        let mut comps: Vec<Vec<H::Elem>> = vec![Vec::new()];
        for s in &self.summands {
            let xs = s.heap.window(radius);
            comps = comps
                .into_iter()
                .flat_map(|c| {
                    xs.iter().map(move |x| {
                        let mut c = c.clone();
                        c.push(x.clone());
                        c
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for t in &tails {
            for c in &comps {
                out.push(NaryElement {
                    components: c.clone(),
                    tails: t.clone(),
                });
            }
        }
        out
    }

    fn is_finite(&self) -> bool {
        self.rank() == 1 && self.summands[0].heap.is_finite()
    }
}

/// Iso witness for a sum of `k` one-point heaps: `x ↦ tails(x) ∈ ℤ^{k−1}`.
///
/// Checks on the tail box of the given radius that the map is a bijection
/// onto the box, that it sends the bracket to `u − v + w`, and that the
/// inverse `t ↦ (*, …, *; t)` composes to the identity both ways.
pub fn singleton_sum_iso_check(k: usize, radius: u32) -> Result<crate::report::Report> {
    use crate::report::{Finding, Report};
    use std::collections::BTreeSet;

    let sum = NarySum::new(vec![HeapSummand::new(Point, ())?; k])?;
    let mut report = Report::new(format!("sum of {k} singletons vs H(Z^{})", k - 1));
    let window = sum.window(radius);
    let image: BTreeSet<Vec<i64>> = window.iter().map(|x| x.tails.clone()).collect();
    let expected = (2 * radius as usize + 1).pow(k as u32 - 1);
    if image.len() != window.len() || image.len() != expected {
        report.violation(Finding::new(
            "bijective-on-window",
            vec![radius.to_string()],
            format!("{} elements, {} images, {expected} expected", window.len(), image.len()),
        ));
    }
    for x in &window {
        let back = NaryElement {
            components: vec![(); k],
            tails: x.tails.clone(),
        };
        if &back != x {
            report.violation(Finding::new("inverse", vec![format!("{x:?}")], "inverse mismatch"));
        }
    }
    let step = (window.len() / 40).max(1);
    for x in window.iter().step_by(step) {
        for y in window.iter().step_by(step) {
            for z in window.iter().step_by(step) {
                let lhs = sum.op(x, y, z).tails;
                let rhs: Vec<i64> = (0..k - 1).map(|j| x.tails[j] - y.tails[j] + z.tails[j]).collect();
                if lhs != rhs {
                    report.violation(Finding::new("preserves-bracket", vec![format!("{x:?}")], "mismatch"));
                }
            }
        }
    }
    for i in 0..k {
        let expect: Vec<i64> = (0..k - 1).map(|j| i64::from(j + 1 == i)).collect();
        if sum.inject(i, ())?.tails != expect {
            report.violation(Finding::new("injection", vec![i.to_string()], "unexpected tails"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteHeap};

    fn hc(n: usize) -> HeapSummand<FiniteHeap> {
        HeapSummand::new(FiniteHeap::from_group(&FiniteGroup::cyclic(n)), 0).unwrap()
    }

    fn c2c2() -> DirectSum<FiniteHeap, FiniteHeap> {
        DirectSum::new(hc(2), hc(2))
    }

    fn t(alpha: usize, beta: usize, n: i64) -> CoproductElement<usize, usize> {
        CoproductElement { alpha, beta, n }
    }

    #[test]
    fn injections() {
        let s = c2c2();
        assert_eq!(s.inject_left(0).unwrap(), t(0, 0, 0));
        assert_eq!(s.inject_left(1).unwrap(), t(1, 0, 0));
        assert_eq!(s.inject_right(1).unwrap().n, 1);
        assert!(s.inject_left(2).is_err());
    }

    #[test]
    fn word_examples() {
        let s = DirectSum::new(hc(3), hc(3));
        // ⟨a b e_B⟩ → (a, −b, 0) and ⟨b a e_A⟩ → (−a, b, 1).
        assert_eq!(s.normalize_word(&[Letter::A(1), Letter::B(1), Letter::B(0)]).unwrap(), t(1, 2, 0));
        assert_eq!(s.normalize_word(&[Letter::B(1), Letter::A(1), Letter::A(0)]).unwrap(), t(2, 1, 1));
        assert_eq!(s.normalize_word(&[Letter::A(2), Letter::B(1), Letter::B(1)]).unwrap(), t(2, 0, 0));
        assert!(s.normalize_word(&[Letter::A(2), Letter::B(1)]).is_err());
        // Tail `e_A e_B e_A` after `a b`: n = −2.
        let w = [Letter::A(1), Letter::B(1), Letter::A(0), Letter::B(0), Letter::A(0)];
        assert_eq!(s.normalize_word(&w).unwrap(), t(1, 2, -2));
    }

    #[test]
    fn op_example() {
        let s = c2c2();
        assert_eq!(s.op(&t(1, 0, 0), &t(0, 1, 1), &t(1, 1, 0)), t(0, 0, -1));
    }

    #[test]
    fn representatives_round_trip() {
        let s = DirectSum::new(hc(2), hc(3));
        for x in s.window(6) {
            let w = s.representative_word(&x);
            assert_eq!(w.len() % 2, 1);
            assert_eq!(s.normalize_word(&w).unwrap(), x);
            assert_eq!(s.from_group_form(&s.to_group_form(&x)), x);
        }
    }

    #[test]
    fn copair_of_identities_folds() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(4));
        let s = DirectSum::new(HeapSummand::new(h.clone(), 0).unwrap(), HeapSummand::new(h.clone(), 0).unwrap());
        for a in 0..4 {
            for b in 0..4 {
                let x = s.normalize_word(&[Letter::A(a), Letter::A(b), Letter::A(0)]).unwrap();
                let v = s.copair_apply(&h, |&p| p, |&q| q, &x).unwrap();
                assert_eq!(v, h.op(a, b, 0));
            }
        }
    }

    #[test]
    fn rebasing_preserves_operation() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(3));
        let s = DirectSum::new(HeapSummand::new(h.clone(), 0).unwrap(), HeapSummand::new(h.clone(), 0).unwrap());
        let r = DirectSum::new(HeapSummand::new(h.clone(), 1).unwrap(), HeapSummand::new(h.clone(), 2).unwrap());
        let w = s.window(2);
        for x in &w {
            assert_eq!(r.recoordinate(&s, &s.recoordinate(&r, x).unwrap()).unwrap(), *x);
        }
        for x in w.iter().step_by(5) {
            for y in w.iter().step_by(7) {
                for z in w.iter().step_by(3) {
                    let lhs = s.recoordinate(&r, &s.op(x, y, z)).unwrap();
                    let rhs = r.op(
                        &s.recoordinate(&r, x).unwrap(),
                        &s.recoordinate(&r, y).unwrap(),
                        &s.recoordinate(&r, z).unwrap(),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn nary_basics() {
        let sum = NarySum::new(vec![hc(2), hc(3), hc(2)]).unwrap();
        let x = sum.inject(2, 1).unwrap();
        assert_eq!(x.tails, vec![0, 1]);
        for x in sum.window(1) {
            assert_eq!(sum.normalize_word(&sum.representative_word(&x)).unwrap(), x);
        }
        let one = NarySum::new(vec![hc(3)]).unwrap();
        assert_eq!(one.window(4).len(), 3);
        assert!(NarySum::<FiniteHeap>::new(vec![]).is_err());
    }

    #[test]
    fn three_singletons() {
        assert!(singleton_sum_iso_check(3, 4).unwrap().is_pass());
    }
}
