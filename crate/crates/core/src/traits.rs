//! Interfaces shared by finite (table-backed) and symbolic structures.

use std::fmt::Debug;
use std::hash::Hash;

/// A set with a ternary operation `[a, b, c]`.
///
/// Implementors are expected to satisfy the heap axioms; the `validate_*`
/// functions in this crate are how that expectation is checked.
pub trait Heap {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem;

    fn contains(&self, x: &Self::Elem) -> bool;

    fn is_abelian(&self) -> bool;

    /// Left-bracketed fold `[..[[x0, x1, x2], x3, x4]..]` of an odd-length sequence.
    fn fold(&self, items: &[Self::Elem]) -> Option<Self::Elem> {
        if items.len() % 2 == 0 {
            return None;
        }
        let mut acc = items[0].clone();
        for pair in items[1..].chunks(2) {
            acc = self.bracket(&acc, &pair[0], &pair[1]);
        }
        Some(acc)
    }

    /// Retract addition `a +_e b = [a, e, b]`.
    fn retract_add(&self, e: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.bracket(a, e, b)
    }

    /// Retract inverse `-_e a = [e, a, e]`.
    fn retract_neg(&self, e: &Self::Elem, a: &Self::Elem) -> Self::Elem {
        self.bracket(e, a, e)
    }

    /// `k`-fold retract multiple of `a` at basepoint `e`.
    fn retract_multiple(&self, e: &Self::Elem, a: &Self::Elem, k: i64) -> Self::Elem {
        let step = if k >= 0 {
            a.clone()
        } else {
            self.retract_neg(e, a)
        };
        let mut acc = e.clone();
        for _ in 0..k.unsigned_abs() {
            acc = self.bracket(&acc, e, &step);
        }
        acc
    }
}

/// Structures whose carrier (or a bounded slice of it) can be listed.
pub trait Enumerable: Heap {
    /// Every element for finite carriers; for infinite ones, the elements
    /// whose integer coordinates are bounded by `radius`, in a fixed order.
    fn window(&self, radius: u32) -> Vec<Self::Elem>;

    fn is_finite(&self) -> bool;
}

/// An Abelian heap with an associative multiplication distributing over the
/// heap operation on both sides.
pub trait Truss: Heap {
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn identity(&self) -> Option<Self::Elem>;

    fn absorber(&self) -> Option<Self::Elem>;

    /// Distinguished element used as the basepoint of coproduct coordinates.
    fn basepoint(&self) -> Option<Self::Elem> {
        self.absorber().or_else(|| self.identity())
    }

    fn render(&self, x: &Self::Elem) -> String {
        format!("{x:?}")
    }
}

/// Scalar type of a module.
pub type Scalar<M> = <<M as TrussModule>::Scalars as Heap>::Elem;

/// A left module over a truss: an Abelian heap with a distributive action.
pub trait TrussModule: Heap {
    type Scalars: Truss;

    fn scalars(&self) -> &Self::Scalars;

    fn act(&self, t: &Scalar<Self>, m: &Self::Elem) -> Self::Elem;
}
