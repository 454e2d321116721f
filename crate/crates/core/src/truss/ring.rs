use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};

/// A finite ring: an Abelian group with an associative, bi-distributive
/// multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    add: FiniteGroup,
    mul: Vec<usize>,
}

impl FiniteRing {
    pub fn new(add: FiniteGroup, mul: &[Vec<usize>]) -> Result<Self> {
        let n = add.order();
        if !add.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let flat = crate::algebra::group::flatten_square(mul, n)?;
        let ring = FiniteRing { add, mul: flat };
        let report = ring.validate();
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(ring)
    }

    pub(crate) fn from_fn(add: FiniteGroup, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = add.order();
        let mul = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        FiniteRing { add, mul }
    }

    /// `ℤ/n` with names `0..n−1`.
    pub fn zn(n: usize) -> Self {
        Self::from_fn(FiniteGroup::cyclic(n), |a, b| (a * b) % n)
    }

    /// The zero ring on one element.
    pub fn zero_ring() -> Self {
        Self::zn(1)
    }

    /// `R ⊕ S`, ids `r·|S| + s`.
    pub fn direct_sum(&self, other: &FiniteRing) -> Self {
        let m = other.order();
        let add = self.add.direct_product(&other.add);
        Self::from_fn(add, |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn names(&self) -> &[String] {
        self.add.names()
    }

    pub fn zero(&self) -> usize {
        self.add.neutral()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.add.inverse(a)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    /// `k · a` in the additive group.
    pub fn times(&self, k: i64, a: usize) -> usize {
        self.add.pow(a, k)
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order().max(1)).map(<[usize]>::to_vec).collect()
    }

    pub fn one(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&u| (0..n).all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }

    pub fn validate(&self) -> Report {
        let n = self.order();
        let mut report = Report::new("ring");
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let loc = || vec![a.to_string(), b.to_string(), c.to_string()];
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        report.violation(Finding::new("mul-associativity", loc(), "(ab)c != a(bc)"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        report.violation(Finding::new("left-distributivity", loc(), "a(b+c) != ab+ac"));
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        report.violation(Finding::new("right-distributivity", loc(), "(a+b)c != ac+bc"));
                    }
                }
            }
        }
        report
    }
}
