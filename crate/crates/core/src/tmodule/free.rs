use crate::coproduct::{HeapSummand, NaryElement, NarySum};
use crate::error::{Error, Result};
use crate::traits::{Enumerable, Heap, Scalar, Truss, TrussModule};

/// Element of `T^X`: per-generator components in `G(T; e)` and `n − 1` tails.
pub type FreeModuleElement<E> = NaryElement<E>;

/// The free unital module `⊞ᵢ T xᵢ` on `n` generators, stored in the
/// canonical n-ary coproduct form with every summand based at `e_T`.
#[derive(Clone, Debug)]
pub struct FreeModule<T: Truss + Clone> {
    truss: T,
    sum: NarySum<T>,
    base: T::Elem,
    one: Option<T::Elem>,
    base_absorbs: bool,
}

impl<T: Truss + Clone> FreeModule<T> {
    /// `e_T` is the absorber when there is one, the identity otherwise.
    pub fn new(truss: T, generators: usize) -> Result<Self> {
        truss.identity().ok_or(Error::NotUnital)?;
        Self::copies(truss, generators)
    }

    /// `⊞ᵢ T` for any truss with a basepoint; generators need a unital truss.
    pub fn copies(truss: T, generators: usize) -> Result<Self> {
        if generators == 0 {
            return Err(Error::EmptyGenerators);
        }
        let one = truss.identity();
        let base = truss.basepoint().ok_or(Error::EmptyCarrier)?;
        let summand = HeapSummand::new(truss.clone(), base.clone())?;
        let sum = NarySum::new(vec![summand; generators])?;
        let base_absorbs = truss.absorber().as_ref() == Some(&base);
        Ok(FreeModule {
            truss,
            sum,
            base,
            one,
            base_absorbs,
        })
    }

    pub fn truss(&self) -> &T {
        &self.truss
    }

    pub fn sum(&self) -> &NarySum<T> {
        &self.sum
    }

    pub fn rank(&self) -> usize {
        self.sum.rank()
    }

    /// `e_T`, the basepoint of every summand.
    pub fn base(&self) -> &T::Elem {
        &self.base
    }

    /// `t xᵢ`.
    pub fn scaled_generator(&self, i: usize, t: T::Elem) -> Result<FreeModuleElement<T::Elem>> {
        self.sum.inject(i, t)
    }

    /// `ι_X(xᵢ) = 1 xᵢ`.
    pub fn generator(&self, i: usize) -> Result<FreeModuleElement<T::Elem>> {
        let one = self.one.clone().ok_or(Error::NotUnital)?;
        self.sum.inject(i, one)
    }

    pub fn generators(&self) -> Vec<FreeModuleElement<T::Elem>> {
        (0..self.rank())
            .map(|i| self.generator(i).expect("generator index in range"))
            .collect()
    }

    /// Multiplies every letter of the representative word by `t` and
    /// normalizes.
    pub fn act_letterwise(&self, t: &T::Elem, x: &FreeModuleElement<T::Elem>) -> FreeModuleElement<T::Elem> {
        let word: Vec<(usize, T::Elem)> = self
            .sum
            .representative_word(x)
            .into_iter()
            .map(|(i, a)| (i, self.truss.mul(t, &a)))
            .collect();
        self.sum.normalize_word(&word).expect("scaled letters stay in the carrier")
    }

    /// `t·(c₁,…,cₙ; k) = (tc₁,…,tcₙ; k)`, valid when `e_T` is an absorber.
    pub fn act_closed(&self, t: &T::Elem, x: &FreeModuleElement<T::Elem>) -> Option<FreeModuleElement<T::Elem>> {
        if !self.base_absorbs {
            return None;
        }
        Some(NaryElement {
            components: x.components.iter().map(|c| self.truss.mul(t, c)).collect(),
            tails: x.tails.clone(),
        })
    }

    /// The action transported to `G(T;e) ⊕ G(T;e) ⊕ ℤ` for rank 2:
    /// `t▷(a + b + n) = t·a − n(t·e) + t·b + (n − 1)(t·e) + n`.
    pub fn act_two_summand_formula(
        &self,
        t: &T::Elem,
        x: &FreeModuleElement<T::Elem>,
    ) -> Option<FreeModuleElement<T::Elem>> {
        if self.rank() != 2 {
            return None;
        }
        let e = &self.base;
        let te = self.truss.mul(t, e);
        let n = x.tails[0];
        let a = self.truss.retract_add(
            e,
            &self.truss.mul(t, &x.components[0]),
            &self.truss.retract_multiple(e, &te, -n),
        );
        let b = self.truss.retract_add(
            e,
            &self.truss.mul(t, &x.components[1]),
            &self.truss.retract_multiple(e, &te, n - 1),
        );
        Some(NaryElement {
            components: vec![a, b],
            tails: vec![n],
        })
    }

    /// The unique module morphism `φ̂` with `φ̂(xᵢ) = images[i]`, evaluated
    /// on `x` by sending each letter `t xᵢ` to `t·images[i]`.
    pub fn lift<N>(&self, target: &N, images: &[N::Elem], x: &FreeModuleElement<T::Elem>) -> Result<N::Elem>
    where
        N: TrussModule<Scalars = T>,
    {
        if images.len() != self.rank() {
            return Err(Error::Mismatch(format!(
                "{} images for {} generators",
                images.len(),
                self.rank()
            )));
        }
        let values: Vec<N::Elem> = self
            .sum
            .representative_word(x)
            .iter()
            .map(|(i, t)| target.act(t, &images[*i]))
            .collect();
        Ok(target.fold(&values).expect("representative words have odd length"))
    }

    pub fn render(&self, x: &FreeModuleElement<T::Elem>) -> String {
        let comps: Vec<String> = x.components.iter().map(|c| self.truss.render(c)).collect();
        let tails: Vec<String> = x.tails.iter().map(i64::to_string).collect();
        if tails.is_empty() {
            format!("({})", comps.join(", "))
        } else {
            format!("({}; {})", comps.join(", "), tails.join(", "))
        }
    }
}

impl<T: Truss + Clone> Heap for FreeModule<T> {
    type Elem = FreeModuleElement<T::Elem>;

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sum.op(a, b, c)
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.sum.contains_elem(x)
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl<T: Truss + Enumerable + Clone> Enumerable for FreeModule<T> {
    fn window(&self, radius: u32) -> Vec<Self::Elem> {
        self.sum.window(radius)
    }

    fn is_finite(&self) -> bool {
        self.sum.is_finite()
    }
}

impl<T: Truss + Clone> TrussModule for FreeModule<T> {
    type Scalars = T;

    fn scalars(&self) -> &T {
        &self.truss
    }

    fn act(&self, t: &Scalar<Self>, m: &Self::Elem) -> Self::Elem {
        self.act_closed(t, m).unwrap_or_else(|| self.act_letterwise(t, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tmodule::check::{check_module, ModuleCheckOptions};
    use crate::truss::{BuiltinTruss, FiniteRing, FiniteTruss};

    #[test]
    fn rank_one_is_the_truss_itself() {
        let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
        let f = FreeModule::new(t.clone(), 1).unwrap();
        assert_eq!(f.window(5).len(), 3);
        for s in 0..3 {
            for a in 0..3 {
                let x = f.scaled_generator(0, a).unwrap();
                assert_eq!(f.act(&s, &x).components, vec![t.product(s, a)]);
            }
        }
    }

    #[test]
    fn closed_action_matches_letterwise_over_ring_trusses() {
        let f = FreeModule::new(FiniteTruss::from_ring(&FiniteRing::zn(4)), 3).unwrap();
        for x in f.window(2) {
            for t in 0..4 {
                assert_eq!(f.act_closed(&t, &x), Some(f.act_letterwise(&t, &x)));
            }
        }
    }

    #[test]
    fn two_summand_formula_over_brace_and_integers() {
        let brace = FreeModule::new(BuiltinTruss::C2Brace, 2).unwrap();
        let tz = FreeModule::new(BuiltinTruss::TZ, 2).unwrap();
        for x in brace.window(4) {
            for t in brace.truss().window(1) {
                assert_eq!(brace.act_two_summand_formula(&t, &x).unwrap(), brace.act_letterwise(&t, &x));
            }
        }
        for x in tz.window(3) {
            for t in -3..=3 {
                assert_eq!(tz.act_two_summand_formula(&t, &x).unwrap(), tz.act_letterwise(&t, &x));
            }
        }
    }

    #[test]
    fn free_module_laws_hold_on_window() {
        let f = FreeModule::new(FiniteTruss::from_ring(&FiniteRing::zn(2)), 2).unwrap();
        let r = check_module(&f, &ModuleCheckOptions::default());
        assert!(r.is_clean(), "{}", r.summary());
        let b = FreeModule::new(BuiltinTruss::C2Brace, 2).unwrap();
        let r = check_module(&b, &ModuleCheckOptions { radius: 3, ..Default::default() });
        assert!(r.is_clean(), "{}", r.summary());
    }

    #[test]
    fn lift_sends_generators_to_images() {
        let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
        let f = FreeModule::new(t.clone(), 2).unwrap();
        let target = crate::tmodule::FiniteModule::regular(&t);
        for (i, g) in f.generators().iter().enumerate() {
            assert_eq!(f.lift(&target, &[2, 1], g).unwrap(), [2, 1][i]);
        }
        assert!(matches!(FreeModule::new(t, 0), Err(Error::EmptyGenerators)));
    }
}
