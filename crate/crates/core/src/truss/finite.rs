use super::ring::FiniteRing;
use crate::algebra::{FiniteHeap, ValidationOptions};
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap, Truss};

/// A table-backed truss on ids `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTruss {
    heap: FiniteHeap,
    mul: Vec<usize>,
    identity: Option<usize>,
    absorber: Option<usize>,
}

impl FiniteTruss {
    /// Validates the multiplication against the heap exhaustively.
    pub fn new(heap: FiniteHeap, mul: &[Vec<usize>]) -> Result<Self> {
        let flat = crate::algebra::group::flatten_square(mul, heap.len())?;
        let report = validate_truss_tables(&heap, &flat);
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(Self::from_valid(heap, flat))
    }

    fn from_valid(heap: FiniteHeap, mul: Vec<usize>) -> Self {
        let n = heap.len();
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n).find(|&u| (0..n).all(|x| m(u, x) == x && m(x, u) == x));
        let absorber = (0..n).find(|&z| (0..n).all(|x| m(z, x) == z && m(x, z) == z));
        FiniteTruss {
            heap,
            mul,
            identity,
            absorber,
        }
    }

    /// `T(R)`: the heap of `(R, +)` with the ring multiplication.
    pub fn from_ring(ring: &FiniteRing) -> Self {
        let heap = FiniteHeap::from_group(ring.additive());
        let n = ring.order();
        let mul = (0..n * n).map(|i| ring.mul(i / n, i % n)).collect();
        Self::from_valid(heap, mul)
    }

    pub fn heap(&self) -> &FiniteHeap {
        &self.heap
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn op(&self, a: usize, b: usize, c: usize) -> usize {
        self.heap.op(a, b, c)
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n).map(|a| (0..n).map(|b| self.product(a, b)).collect()).collect()
    }

    pub fn validate(&self) -> Report {
        validate_truss_tables(&self.heap, &self.mul)
    }

    /// The ring `(T, +_0, ·)` on the retract at an absorber.
    pub fn retract_ring(&self, zero: usize) -> Result<FiniteRing> {
        if zero >= self.len() {
            return Err(Error::NotInCarrier(zero.to_string()));
        }
        if self.absorber != Some(zero) {
            return Err(Error::NotAbsorber(self.heap.name(zero).to_string()));
        }
        let add = self.heap.retract(zero)?;
        Ok(FiniteRing::from_fn(add, |a, b| self.product(a, b)))
    }
}

/// Checks Abelianness, associativity of `mul` and both distributive laws
/// over every triple, and records the identity and absorber if present.
pub fn validate_truss_tables(heap: &FiniteHeap, mul: &[usize]) -> Report {
    let n = heap.len();
    let mut report = Report::new("truss");
    report.absorb(heap.validate(&ValidationOptions::default()));
    if !heap.is_abelian() {
        report.violation(Finding::new("abelian-heap", vec![], "carrier heap is not Abelian"));
    }
    let m = |a: usize, b: usize| mul[a * n + b];
    let name = |a: usize| heap.name(a).to_string();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m(m(a, b), c) != m(a, m(b, c)) {
                    report.violation(Finding::new(
                        "mul-associativity",
                        vec![name(a), name(b), name(c)],
                        format!("(ab)c = {} but a(bc) = {}", name(m(m(a, b), c)), name(m(a, m(b, c)))),
                    ));
                }
            }
        }
    }
    for s in 0..n {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let loc = || vec![name(s), name(a), name(b), name(c)];
                    let lhs = m(s, heap.op(a, b, c));
                    let rhs = heap.op(m(s, a), m(s, b), m(s, c));
                    if lhs != rhs {
                        report.violation(Finding::new(
                            "left-distributivity",
                            loc(),
                            format!("s[a,b,c] = {} but [sa,sb,sc] = {}", name(lhs), name(rhs)),
                        ));
                    }
                    let lhs = m(heap.op(a, b, c), s);
                    let rhs = heap.op(m(a, s), m(b, s), m(c, s));
                    if lhs != rhs {
                        report.violation(Finding::new(
                            "right-distributivity",
                            loc(),
                            format!("[a,b,c]s = {} but [as,bs,cs] = {}", name(lhs), name(rhs)),
                        ));
                    }
                }
            }
        }
    }
    if report.is_clean() {
        if let Some(u) = (0..n).find(|&u| (0..n).all(|x| m(u, x) == x && m(x, u) == x)) {
            report.note(format!("identity {}", name(u)));
        }
        if let Some(z) = (0..n).find(|&z| (0..n).all(|x| m(z, x) == z && m(x, z) == z)) {
            report.note(format!("absorber {}", name(z)));
        }
    }
    report
}

impl Heap for FiniteTruss {
    type Elem = usize;

    fn bracket(&self, a: &usize, b: &usize, c: &usize) -> usize {
        self.heap.op(*a, *b, *c)
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.len()
    }

    fn is_abelian(&self) -> bool {
        self.heap.is_abelian()
    }
}

impl Enumerable for FiniteTruss {
    fn window(&self, _radius: u32) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }
}

impl Truss for FiniteTruss {
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.product(*a, *b)
    }

    fn identity(&self) -> Option<usize> {
        self.identity
    }

    fn absorber(&self) -> Option<usize> {
        self.absorber
    }

    fn basepoint(&self) -> Option<usize> {
        self.absorber
            .or(self.identity)
            .or_else(|| (!self.is_empty()).then_some(0))
    }

    fn render(&self, x: &usize) -> String {
        self.heap.name(*x).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteGroup;

    #[test]
    fn tz4_is_unital_ring_type() {
        let t = FiniteTruss::from_ring(&FiniteRing::zn(4));
        let r = t.validate();
        assert!(r.is_pass());
        assert!(r.notes.iter().any(|n| n == "identity 1"));
        assert_eq!(t.identity(), Some(1));
        assert_eq!(t.absorber(), Some(0));
        assert_eq!(t.retract_ring(0).unwrap(), FiniteRing::zn(4));
        assert!(matches!(t.retract_ring(1), Err(Error::NotAbsorber(_))));
    }

    #[test]
    fn non_distributive_table_is_located() {
        // `a·b = (ab)²` on ℤ₃ is associative, but `x ↦ x²` is not affine.
        let heap = FiniteHeap::from_group(&FiniteGroup::cyclic(3));
        let mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a * b * a * b) % 3).collect()).collect();
        let err = FiniteTruss::new(heap, &mul).unwrap_err();
        let Error::Axioms(report) = err else { panic!("expected axiom failure") };
        assert!(report.findings.iter().any(|f| f.law.ends_with("distributivity")));
        assert!(!report.findings.iter().any(|f| f.law == "mul-associativity"));
    }

    #[test]
    fn every_mul_on_two_points_distributes() {
        let heap = FiniteHeap::from_group(&FiniteGroup::cyclic(2));
        for code in 0..16usize {
            let mul: Vec<usize> = (0..4).map(|i| (code >> i) & 1).collect();
            let r = validate_truss_tables(&heap, &mul);
            assert!(!r.findings.iter().any(|f| f.law.ends_with("distributivity")));
        }
    }

    #[test]
    fn single_point_truss() {
        let t = FiniteTruss::from_ring(&FiniteRing::zero_ring());
        assert_eq!(t.len(), 1);
        assert_eq!(t.identity(), Some(0));
        assert_eq!(t.absorber(), Some(0));
    }
}
