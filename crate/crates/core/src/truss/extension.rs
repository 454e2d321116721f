use crate::coproduct::{CoproductElement, DirectSum, HeapSummand, Letter, Point};
use crate::error::{Error, Result};
use crate::traits::{Enumerable, Heap, Truss};

/// Which element is adjoined by an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    /// `T₁ = T ⊞ {1}` with `1·t = t·1 = t`.
    Unital,
    /// `T₀ = T ⊞ {0}` with `0·t = t·0 = 0`.
    Zero,
}

/// `T ⊞ {1}` or `T ⊞ {0}`, with `T` the left summand based at
/// [`Truss::basepoint`] and the adjoined element encoded as `ι_B(*)`.
#[derive(Clone, Debug)]
pub struct Extension<T: Truss> {
    sum: DirectSum<T, Point>,
    kind: ExtensionKind,
}

pub type ExtElem<T> = CoproductElement<<T as Heap>::Elem, ()>;

impl<T: Truss> Extension<T> {
    pub fn new(t: T, kind: ExtensionKind) -> Result<Self> {
        let base = t.basepoint().ok_or(Error::EmptyCarrier)?;
        let left = HeapSummand::new(t, base)?;
        let right = HeapSummand::new(Point, ())?;
        Ok(Extension {
            sum: DirectSum::new(left, right),
            kind,
        })
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    pub fn inner(&self) -> &T {
        &self.sum.left.heap
    }

    pub fn sum(&self) -> &DirectSum<T, Point> {
        &self.sum
    }

    /// The basepoint of `T` used for coordinates.
    pub fn inner_base(&self) -> &T::Elem {
        self.sum.e_a()
    }

    /// The adjoined `1` or `0`.
    pub fn adjoined(&self) -> ExtElem<T> {
        CoproductElement {
            alpha: self.sum.e_a().clone(),
            beta: (),
            n: 1,
        }
    }

    pub fn embed(&self, t: T::Elem) -> ExtElem<T> {
        CoproductElement {
            alpha: t,
            beta: (),
            n: 0,
        }
    }

    /// `t·s` for a letter `s`: `tt'` inside `T`; the adjoined element acts as
    /// an identity (`T₁`) or absorbs (`T₀`).
    fn letter_product(&self, t: &T::Elem, s: &Letter<T::Elem, ()>) -> Letter<T::Elem, ()> {
        match (s, self.kind) {
            (Letter::A(u), _) => Letter::A(self.inner().mul(t, u)),
            (Letter::B(()), ExtensionKind::Unital) => Letter::A(t.clone()),
            (Letter::B(()), ExtensionKind::Zero) => Letter::B(()),
        }
    }

    /// `λ^y` on one letter of the left factor.
    fn row(&self, letter: &Letter<T::Elem, ()>, y: &ExtElem<T>, y_word: &[Letter<T::Elem, ()>]) -> ExtElem<T> {
        match (letter, self.kind) {
            (Letter::A(t), _) => {
                let word: Vec<_> = y_word.iter().map(|s| self.letter_product(t, s)).collect();
                self.sum.normalize_word(&word).expect("odd-length word over the summands")
            }
            (Letter::B(()), ExtensionKind::Unital) => y.clone(),
            (Letter::B(()), ExtensionKind::Zero) => self.adjoined(),
        }
    }

    /// Letter-wise product: expand both factors into representative words,
    /// multiply letter by letter and fold the rows with the heap operation.
    pub fn product(&self, x: &ExtElem<T>, y: &ExtElem<T>) -> ExtElem<T> {
        let x_word = self.sum.representative_word(x);
        let y_word = self.sum.representative_word(y);
        self.product_of_words(&x_word, y, &y_word)
    }

    /// As [`Extension::product`] but from arbitrary (not necessarily
    /// shortest) representative words of both factors.
    pub fn product_of_words(
        &self,
        x_word: &[Letter<T::Elem, ()>],
        y: &ExtElem<T>,
        y_word: &[Letter<T::Elem, ()>],
    ) -> ExtElem<T> {
        let rows: Vec<ExtElem<T>> = x_word.iter().map(|l| self.row(l, y, y_word)).collect();
        self.sum.fold(&rows).expect("odd-length word")
    }

    pub fn render_word(&self, x: &ExtElem<T>) -> String {
        let adjoined = match self.kind {
            ExtensionKind::Unital => "1",
            ExtensionKind::Zero => "0",
        };
        self.sum
            .representative_word(x)
            .iter()
            .map(|l| match l {
                Letter::A(t) => self.inner().render(t),
                Letter::B(()) => adjoined.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<T: Truss> Heap for Extension<T> {
    type Elem = ExtElem<T>;

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

impl<T: Truss + Enumerable> Enumerable for Extension<T> {
    fn window(&self, radius: u32) -> Vec<Self::Elem> {
        self.sum.window(radius)
    }

    fn is_finite(&self) -> bool {
        false
    }
}

impl<T: Truss> Truss for Extension<T> {
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.product(a, b)
    }

    fn identity(&self) -> Option<Self::Elem> {
        match self.kind {
            ExtensionKind::Unital => Some(self.adjoined()),
            ExtensionKind::Zero => self.inner().identity().map(|u| self.embed(u)),
        }
    }

    fn absorber(&self) -> Option<Self::Elem> {
        match self.kind {
            ExtensionKind::Zero => Some(self.adjoined()),
            ExtensionKind::Unital => self.inner().absorber().map(|z| self.embed(z)),
        }
    }

    fn render(&self, x: &Self::Elem) -> String {
        format!("({}, {})", self.inner().render(&x.alpha), x.n)
    }
}

/// `T₁ = T ⊞ {1}`.
pub fn unital_extension<T: Truss>(t: T) -> Result<Extension<T>> {
    Extension::new(t, ExtensionKind::Unital)
}

/// `T₀ = T ⊞ {0}`.
pub fn ring_extension<T: Truss>(t: T) -> Result<Extension<T>> {
    Extension::new(t, ExtensionKind::Zero)
}

/// `(T ⊞ {1}) ⊞ {0}`: unital and ring-type.
pub fn double_extension<T: Truss>(t: T) -> Result<Extension<Extension<T>>> {
    ring_extension(unital_extension(t)?)
}
