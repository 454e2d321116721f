use crate::error::{Error, Result};
use crate::traits::{Enumerable, Truss};

/// The ring `(T, +_0, ·)` on the retract of a truss at an absorber `0`.
#[derive(Clone, Debug)]
pub struct RetractRing<'t, T: Truss> {
    truss: &'t T,
    zero: T::Elem,
}

impl<'t, T: Truss> RetractRing<'t, T> {
    pub fn truss(&self) -> &'t T {
        self.truss
    }

    pub fn zero(&self) -> &T::Elem {
        &self.zero
    }

    /// `a + b = [a, 0, b]`.
    pub fn add(&self, a: &T::Elem, b: &T::Elem) -> T::Elem {
        self.truss.bracket(a, &self.zero, b)
    }

    pub fn neg(&self, a: &T::Elem) -> T::Elem {
        self.truss.bracket(&self.zero, a, &self.zero)
    }

    pub fn sub(&self, a: &T::Elem, b: &T::Elem) -> T::Elem {
        self.truss.bracket(a, b, &self.zero)
    }

    pub fn mul(&self, a: &T::Elem, b: &T::Elem) -> T::Elem {
        self.truss.mul(a, b)
    }

    /// `k · a` in the additive group.
    pub fn times(&self, k: i64, a: &T::Elem) -> T::Elem {
        self.truss.retract_multiple(&self.zero, a, k)
    }

    /// Sum of `k_i · a_i`.
    pub fn combination(&self, terms: &[(i64, T::Elem)]) -> T::Elem {
        terms
            .iter()
            .fold(self.zero.clone(), |acc, (k, a)| self.add(&acc, &self.times(*k, a)))
    }
}

/// The retract ring at `zero`, after checking on the `radius` window (the
/// whole carrier when finite) that `zero` is a two-sided absorber.
pub fn retract_ring<T: Truss + Enumerable>(t: &T, zero: T::Elem, radius: u32) -> Result<RetractRing<'_, T>> {
    if !t.contains(&zero) {
        return Err(Error::NotInCarrier(t.render(&zero)));
    }
    let absorbs = t
        .window(radius)
        .iter()
        .all(|x| t.mul(&zero, x) == zero && t.mul(x, &zero) == zero);
    if !absorbs {
        return Err(Error::NotAbsorber(t.render(&zero)));
    }
    Ok(RetractRing { truss: t, zero })
}
