use std::collections::BTreeSet;

use super::heap::FiniteHeap;
use super::morphism::HeapMorphism;
use crate::error::{Error, Result};

/// A subset of a finite heap closed under its ternary operation.
#[derive(Clone, Debug)]
pub struct SubHeap<'h> {
    parent: &'h FiniteHeap,
    members: Vec<usize>,
    mask: Vec<bool>,
}

/// Outcome of the normality test.
///
/// For a fixed `e` in `S`, `t = [[a, e, s], a, e]` is the only element that
/// can satisfy `[a, e, s] = [t, e, a]`, so normality reduces to membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normality {
    pub normal: bool,
    /// Basepoint `e` used for the witness table.
    pub basepoint: Option<usize>,
    /// `(a, s, t)` with `[a, e, s] = [t, e, a]`, one entry per `a ∈ H`, `s ∈ S`.
    pub witnesses: Vec<(usize, usize, usize)>,
    /// First `(a, e, s)` for which `t` falls outside `S`.
    pub failure: Option<(usize, usize, usize)>,
}

impl<'h> SubHeap<'h> {
    pub fn new(parent: &'h FiniteHeap, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&x| x >= parent.len()) {
            return Err(Error::NotInCarrier(bad.to_string()));
        }
        let sub = Self::from_set(parent, set);
        let closed = sub.members.iter().all(|&a| {
            sub.members
                .iter()
                .all(|&b| sub.members.iter().all(|&c| sub.mask[parent.op(a, b, c)]))
        });
        if !closed {
            return Err(Error::NotClosed);
        }
        Ok(sub)
    }

    pub fn empty(parent: &'h FiniteHeap) -> Self {
        Self::from_set(parent, BTreeSet::new())
    }

    pub fn full(parent: &'h FiniteHeap) -> Self {
        Self::from_set(parent, (0..parent.len()).collect())
    }

    fn from_set(parent: &'h FiniteHeap, set: BTreeSet<usize>) -> Self {
        let mut mask = vec![false; parent.len()];
        for &x in &set {
            mask[x] = true;
        }
        SubHeap {
            parent,
            members: set.into_iter().collect(),
            mask,
        }
    }

    pub fn parent(&self) -> &'h FiniteHeap {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_normal(&self) -> Normality {
        let h = self.parent;
        let mut out = Normality {
            normal: true,
            basepoint: self.members.first().copied(),
            witnesses: Vec::new(),
            failure: None,
        };
        for (k, &e) in self.members.iter().enumerate() {
            for a in 0..h.len() {
                for &s in &self.members {
                    let t = h.op(h.op(a, e, s), a, e);
                    if !self.contains(t) {
                        out.normal = false;
                        out.failure.get_or_insert((a, e, s));
                    } else if k == 0 {
                        out.witnesses.push((a, s, t));
                    }
                }
            }
        }
        if !out.normal {
            out.witnesses.clear();
        }
        out
    }

    /// `a ~_S b` iff `[a, b, s] ∈ S` for some (equivalently every) `s ∈ S`.
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.members
            .first()
            .is_some_and(|&s| self.contains(self.parent.op(a, b, s)))
    }

    /// `{[s, t, a] | s, t ∈ S}`, sorted.
    pub fn class_of(&self, a: usize) -> Vec<usize> {
        let h = self.parent;
        let set: BTreeSet<usize> = self
            .members
            .iter()
            .flat_map(|&s| self.members.iter().map(move |&t| h.op(s, t, a)))
            .collect();
        set.into_iter().collect()
    }
}

/// Smallest sub-heap containing `x`.
pub fn generated_subheap<'h>(h: &'h FiniteHeap, x: &[usize]) -> Result<SubHeap<'h>> {
    if x.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&bad) = x.iter().find(|&&a| a >= h.len()) {
        return Err(Error::NotInCarrier(bad.to_string()));
    }
    let mut set: BTreeSet<usize> = x.iter().copied().collect();
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            for &b in &current {
                for &c in &current {
                    set.insert(h.op(a, b, c));
                }
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(SubHeap::from_set(h, set))
}

/// The quotient heap `H/S` together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub heap: FiniteHeap,
    pub projection: HeapMorphism,
    /// Equivalence classes, indexed by quotient id; each sorted.
    pub classes: Vec<Vec<usize>>,
}

/// `H/S` for a normal sub-heap `S`, using `[ā, b̄, c̄] = [a, b, c]‾`.
pub fn quotient(h: &FiniteHeap, s: &SubHeap<'_>) -> Result<Quotient> {
    if s.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if !std::ptr::eq(h, s.parent()) && h != s.parent() {
        return Err(Error::Mismatch("sub-heap belongs to a different heap".into()));
    }
    if !s.is_normal().normal {
        return Err(Error::NotNormal);
    }
    let n = h.len();
    let mut proj = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if proj[a] == usize::MAX {
            let class = s.class_of(a);
            for &x in &class {
                proj[x] = classes.len();
            }
            classes.push(class);
        }
    }
    let k = classes.len();
    let mut flat = Vec::with_capacity(k * k * k);
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                flat.push(proj[h.op(classes[x][0], classes[y][0], classes[z][0])]);
            }
        }
    }
    let names = classes
        .iter()
        .map(|c| {
            let inner: Vec<&str> = c.iter().map(|&x| h.name(x)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(Quotient {
        heap: FiniteHeap::from_valid_flat(names, flat),
        projection: HeapMorphism::from_map_unchecked(n, k, proj),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::FiniteGroup;

    fn hz(n: usize) -> FiniteHeap {
        FiniteHeap::from_group(&FiniteGroup::cyclic(n))
    }

    #[test]
    fn generated_examples() {
        let h = hz(6);
        assert_eq!(generated_subheap(&h, &[3]).unwrap().members(), &[3]);
        assert_eq!(generated_subheap(&h, &[0, 2]).unwrap().members(), &[0, 2, 4]);
        assert_eq!(generated_subheap(&h, &[0, 1, 2, 3, 4, 5]).unwrap().len(), 6);
        assert!(matches!(generated_subheap(&h, &[]), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn closure_is_checked() {
        let h = hz(6);
        assert!(matches!(SubHeap::new(&h, [0, 1]), Err(Error::NotClosed)));
        assert!(SubHeap::new(&h, [1, 4]).is_ok());
    }

    #[test]
    fn abelian_subheaps_are_normal() {
        let h = hz(6);
        let s = SubHeap::new(&h, [1, 4]).unwrap();
        let nrm = s.is_normal();
        assert!(nrm.normal);
        assert_eq!(nrm.witnesses.len(), 6 * 2);
        assert!(SubHeap::full(&h).is_normal().normal);
    }

    #[test]
    fn transposition_subheap_of_s3_is_not_normal() {
        let s3 = FiniteGroup::symmetric(3);
        let h = FiniteHeap::from_group(&s3);
        let t = s3.id_of("(12)").unwrap();
        let s = SubHeap::new(&h, [s3.neutral(), t]).unwrap();
        let nrm = s.is_normal();
        assert!(!nrm.normal);
        assert!(nrm.failure.is_some());
        assert!(matches!(quotient(&h, &s), Err(Error::NotNormal)));
    }

    #[test]
    fn quotient_examples() {
        let h = hz(4);
        let s = SubHeap::new(&h, [0, 2]).unwrap();
        let q = quotient(&h, &s).unwrap();
        assert_eq!(q.classes, vec![vec![0, 2], vec![1, 3]]);
        assert!(q.heap.same_operation(&hz(2)));
        assert_eq!(s.class_of(2), vec![0, 2]);
        let whole = quotient(&h, &SubHeap::full(&h)).unwrap();
        assert_eq!(whole.heap.len(), 1);
    }
}
