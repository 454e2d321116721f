use super::finite::{FiniteModule, RModule};
use super::morphism::ModuleMorphism;
use crate::algebra::{quotient, HeapMorphism, SubHeap};
use crate::error::{Error, Result};
use crate::traits::{Truss, TrussModule};

/// `Abs(M) = {m : t·m = m for all t}` of a finite module, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorberSet {
    pub members: Vec<usize>,
}

impl AbsorberSet {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether the set is closed under the bracket and the action.
    pub fn is_submodule(&self, m: &FiniteModule) -> bool {
        let ms = &self.members;
        ms.iter()
            .all(|&a| ms.iter().all(|&b| ms.iter().all(|&c| self.contains(m.op(a, b, c)))))
            && (0..m.truss().len()).all(|t| ms.iter().all(|&a| self.contains(m.action(t, a))))
    }
}

/// Direct scan of the carrier.
pub fn absorbers(m: &FiniteModule) -> AbsorberSet {
    let nt = m.truss().len();
    let members = (0..m.len())
        .filter(|&x| (0..nt).all(|t| m.action(t, x) == x))
        .collect();
    AbsorberSet { members }
}

/// `{0·m : m ∈ M}` for a module over a ring-type truss with absorber `0`.
pub fn absorbers_via_zero(m: &FiniteModule) -> Result<AbsorberSet> {
    let zero = m.truss().absorber().ok_or(Error::NotRingType)?;
    let mut members: Vec<usize> = (0..m.len()).map(|x| m.action(zero, x)).collect();
    members.sort_unstable();
    members.dedup();
    Ok(AbsorberSet { members })
}

/// Outcome of [`is_ring_module`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingModuleVerdict {
    pub ring_module: bool,
    pub absorbers: AbsorberSet,
    /// Two distinct absorbers when there is more than one.
    pub witness: Option<(usize, usize)>,
}

/// A module over `T(R)` comes from an `R`-module iff it has exactly one absorber.
pub fn is_ring_module(m: &FiniteModule) -> Result<RingModuleVerdict> {
    m.truss().absorber().ok_or(Error::NotRingType)?;
    let abs = absorbers(m);
    let witness = (abs.len() > 1).then(|| (abs.members[0], abs.members[1]));
    Ok(RingModuleVerdict {
        ring_module: abs.len() == 1,
        absorbers: abs,
        witness,
    })
}

/// The `R`-module on `G(M; e)` for the unique absorber `e`.
pub fn to_ring_module(m: &FiniteModule) -> Result<RModule> {
    let verdict = is_ring_module(m)?;
    if !verdict.ring_module {
        return Err(Error::Mismatch(format!(
            "module has {} absorbers, a ring module has exactly one",
            verdict.absorbers.len()
        )));
    }
    let zero = m.truss().absorber().ok_or(Error::NotRingType)?;
    let ring = m.truss().retract_ring(zero)?;
    let group = m.heap().retract(verdict.absorbers.members[0])?;
    RModule::new(ring, group, &m.action_rows())
}

/// `M/Abs(M)` with its projection; `r_module` is `G(M/Abs(M); Abs(M))`
/// when the truss is ring-type.
#[derive(Clone, Debug)]
pub struct AbsQuotient {
    pub module: FiniteModule,
    pub projection: HeapMorphism,
    pub classes: Vec<Vec<usize>>,
    /// Quotient id of the class `Abs(M)`.
    pub abs_class: usize,
    pub r_module: Option<RModule>,
}

impl AbsQuotient {
    /// A fixed representative (the least id) of each class.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

pub fn abs_quotient(m: &FiniteModule) -> Result<AbsQuotient> {
    if m.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let abs = absorbers(m);
    if abs.is_empty() {
        return Err(Error::Structural("module has no absorbers".into()));
    }
    let sub = SubHeap::new(m.heap(), abs.members.iter().copied())?;
    let q = quotient(m.heap(), &sub)?;
    let abs_class = q.projection.apply(abs.members[0]);
    let module = FiniteModule::from_fn(m.truss().clone(), q.heap.clone(), |t, c| {
        q.projection.apply(m.act(&t, &q.classes[c][0]))
    });
    let r_module = match m.truss().absorber() {
        Some(zero) => {
            let ring = m.truss().retract_ring(zero)?;
            let group = q.heap.retract(abs_class)?;
            Some(RModule::new(ring, group, &module.action_rows())?)
        }
        None => None,
    };
    Ok(AbsQuotient {
        module,
        projection: q.projection,
        classes: q.classes,
        abs_class,
        r_module,
    })
}

/// `φ_Abs : m̄ ↦ φ(m)‾`, checked to be well defined on every class.
pub fn abs_on_morphism(
    phi: &ModuleMorphism,
    source: &AbsQuotient,
    target: &AbsQuotient,
) -> Result<ModuleMorphism> {
    let map = source
        .classes
        .iter()
        .map(|class| {
            let images: Vec<usize> = class.iter().map(|&x| target.projection.apply(phi.apply(x))).collect();
            if images.windows(2).any(|w| w[0] != w[1]) {
                Err(Error::Mismatch("morphism does not descend to the quotients".into()))
            } else {
                Ok(images[0])
            }
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(ModuleMorphism::from_map_unchecked(map, target.classes.len()))
}
