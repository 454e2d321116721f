use super::heap::FiniteHeap;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};

/// A function between finite heaps, stored as an id table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeapMorphism {
    source_len: usize,
    target_len: usize,
    map: Vec<usize>,
}

impl HeapMorphism {
    /// Checks that `map` preserves the ternary operation on every triple.
    pub fn new(source: &FiniteHeap, target: &FiniteHeap, map: Vec<usize>) -> Result<Self> {
        let candidate = Self::from_map_unchecked(source.len(), target.len(), map);
        if candidate.map.len() != source.len() || candidate.map.iter().any(|&x| x >= target.len()) {
            return Err(Error::Structural("morphism table does not match carriers".into()));
        }
        let report = candidate.check(source, target);
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(candidate)
    }

    pub(crate) fn from_map_unchecked(source_len: usize, target_len: usize, map: Vec<usize>) -> Self {
        HeapMorphism {
            source_len,
            target_len,
            map,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_map_unchecked(n, n, (0..n).collect())
    }

    pub fn check(&self, source: &FiniteHeap, target: &FiniteHeap) -> Report {
        let mut report = Report::new("heap morphism");
        let n = source.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.map[source.op(a, b, c)];
                    let rhs = target.op(self.map[a], self.map[b], self.map[c]);
                    if lhs != rhs {
                        report.violation(Finding::new(
                            "preserves-bracket",
                            vec![a.to_string(), b.to_string(), c.to_string()],
                            format!("f([a,b,c]) = {lhs} but [fa,fb,fc] = {rhs}"),
                        ));
                    }
                }
            }
        }
        report
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HeapMorphism) -> HeapMorphism {
        assert_eq!(self.target_len, other.source_len);
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Self::from_map_unchecked(self.source_len, other.target_len, map)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_len];
        self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.source_len == self.target_len && self.is_injective()
    }

    pub fn inverse(&self) -> Option<HeapMorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.source_len];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(Self::from_map_unchecked(self.target_len, self.source_len, inv))
    }
}
