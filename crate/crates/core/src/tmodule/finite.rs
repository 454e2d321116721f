use crate::algebra::{FiniteGroup, FiniteHeap};
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap, Truss, TrussModule};
use crate::truss::{FiniteRing, FiniteTruss};

/// A table-backed module over a finite truss; `action[t·|M| + m] = t·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    truss: FiniteTruss,
    heap: FiniteHeap,
    action: Vec<usize>,
}

impl FiniteModule {
    /// Checks shapes only; use [`FiniteModule::new`] for a validated module.
    pub fn from_tables(truss: FiniteTruss, heap: FiniteHeap, action: &[Vec<usize>]) -> Result<Self> {
        let (nt, nm) = (truss.len(), heap.len());
        if action.len() != nt {
            return Err(Error::Structural(format!("action has {} rows, truss has {nt} elements", action.len())));
        }
        let mut flat = Vec::with_capacity(nt * nm);
        for (t, row) in action.iter().enumerate() {
            if row.len() != nm {
                return Err(Error::Structural(format!("action row {t} has length {}, expected {nm}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= nm) {
                return Err(Error::Structural(format!("action row {t} refers to element {bad}")));
            }
            flat.extend_from_slice(row);
        }
        Ok(FiniteModule { truss, heap, action: flat })
    }

    /// A module whose tables pass [`FiniteModule::validate`].
    pub fn new(truss: FiniteTruss, heap: FiniteHeap, action: &[Vec<usize>]) -> Result<Self> {
        let m = Self::from_tables(truss, heap, action)?;
        let report = m.validate();
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(m)
    }

    pub(crate) fn from_fn(truss: FiniteTruss, heap: FiniteHeap, act: impl Fn(usize, usize) -> usize) -> Self {
        let nm = heap.len();
        let action = (0..truss.len() * nm).map(|i| act(i / nm, i % nm)).collect();
        FiniteModule { truss, heap, action }
    }

    /// `T` acting on itself by multiplication.
    pub fn regular(truss: &FiniteTruss) -> Self {
        Self::from_fn(truss.clone(), truss.heap().clone(), |t, m| truss.product(t, m))
    }

    /// `T(N)`: an `R`-module seen as a module over `T(R)`.
    pub fn from_r_module(n: &RModule) -> Self {
        FiniteModule {
            truss: FiniteTruss::from_ring(n.ring()),
            heap: FiniteHeap::from_group(n.group()),
            action: n.action.clone(),
        }
    }

    /// The module on the empty heap. Quotients and retracts reject it.
    pub fn empty(truss: FiniteTruss) -> Self {
        FiniteModule {
            truss,
            heap: FiniteHeap::empty(),
            action: Vec::new(),
        }
    }

    pub fn truss(&self) -> &FiniteTruss {
        &self.truss
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

    pub fn action(&self, t: usize, m: usize) -> usize {
        self.action[t * self.len() + m]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        self.action.chunks(n.max(1)).map(<[usize]>::to_vec).take(self.truss.len()).collect()
    }

    /// `1·m = m` for all `m`; false over a non-unital truss.
    pub fn is_unital(&self) -> bool {
        self.truss
            .identity()
            .is_some_and(|u| (0..self.len()).all(|m| self.action(u, m) == m))
    }

    pub fn validate(&self) -> Report {
        super::check::check_module(self, &super::check::ModuleCheckOptions::default())
    }
}

impl Heap for FiniteModule {
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

impl Enumerable for FiniteModule {
    fn window(&self, _radius: u32) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }
}

impl TrussModule for FiniteModule {
    type Scalars = FiniteTruss;

    fn scalars(&self) -> &FiniteTruss {
        &self.truss
    }

    fn act(&self, t: &usize, m: &usize) -> usize {
        self.action(*t, *m)
    }
}

/// A left module over a finite ring on an Abelian group;
/// `action[r·|N| + m] = r·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RModule {
    ring: FiniteRing,
    group: FiniteGroup,
    action: Vec<usize>,
}

impl RModule {
    pub fn new(ring: FiniteRing, group: FiniteGroup, action: &[Vec<usize>]) -> Result<Self> {
        let flat = crate::algebra::group::flatten_rect(action, ring.order(), group.order())?;
        let m = RModule { ring, group, action: flat };
        let report = m.validate();
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(m)
    }

    pub(crate) fn from_fn(ring: FiniteRing, group: FiniteGroup, act: impl Fn(usize, usize) -> usize) -> Self {
        let n = group.order();
        let action = (0..ring.order() * n).map(|i| act(i / n, i % n)).collect();
        RModule { ring, group, action }
    }

    /// `R` over itself.
    pub fn regular(ring: &FiniteRing) -> Self {
        Self::from_fn(ring.clone(), ring.additive().clone(), |r, m| ring.mul(r, m))
    }

    /// `M ⊕ N`, ids `m·|N| + n`.
    pub fn direct_sum(&self, other: &RModule) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::Mismatch("modules over different rings".into()));
        }
        let q = other.order();
        let group = self.group.direct_product(&other.group);
        Ok(Self::from_fn(self.ring.clone(), group, |r, x| {
            self.act(r, x / q) * q + other.act(r, x % q)
        }))
    }

    /// `Rⁿ` with ids read as base-`|R|` numerals, first coordinate most significant.
    pub fn power(ring: &FiniteRing, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGenerators);
        }
        let regular = Self::regular(ring);
        let mut acc = regular.clone();
        for _ in 1..n {
            acc = acc.direct_sum(&regular)?;
        }
        Ok(acc)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.group.op(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.group.inverse(a)
    }

    pub fn zero(&self) -> usize {
        self.group.neutral()
    }

    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.order() + m]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..self.ring.order()).map(|r| (0..n).map(|m| self.act(r, m)).collect()).collect()
    }

    pub fn is_unital(&self) -> bool {
        self.ring.one().is_some_and(|u| (0..self.order()).all(|m| self.act(u, m) == m))
    }

    /// `r ↦ r·m`.
    pub fn orbit_map(&self, m: usize) -> Vec<usize> {
        (0..self.ring.order()).map(|r| self.act(r, m)).collect()
    }

    /// Whether `map` is additive and `R`-linear into `target`.
    pub fn is_linear_map(&self, target: &RModule, map: &[usize]) -> bool {
        let n = self.order();
        map.len() == n
            && (0..n).all(|a| (0..n).all(|b| map[self.add(a, b)] == target.add(map[a], map[b])))
            && (0..self.ring.order()).all(|r| (0..n).all(|m| map[self.act(r, m)] == target.act(r, map[m])))
    }

    /// Abelian group, both distributive laws, associativity of the action.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("ring module");
        let (nr, n) = (self.ring.order(), self.order());
        if !self.group.is_abelian() {
            report.violation(Finding::new("abelian-group", vec![], "module group is not Abelian"));
        }
        let name = |m: usize| self.group.name(m).to_string();
        let rname = |r: usize| self.ring.names()[r].clone();
        for r in 0..nr {
            for a in 0..n {
                for b in 0..n {
                    if self.act(r, self.add(a, b)) != self.add(self.act(r, a), self.act(r, b)) {
                        report.violation(Finding::new(
                            "module-additive",
                            vec![rname(r), name(a), name(b)],
                            "r(m + n) != rm + rn",
                        ));
                    }
                }
                for s in 0..nr {
                    if self.act(self.ring.add(r, s), a) != self.add(self.act(r, a), self.act(s, a)) {
                        report.violation(Finding::new(
                            "scalar-additive",
                            vec![rname(r), rname(s), name(a)],
                            "(r + s)m != rm + sm",
                        ));
                    }
                    if self.act(self.ring.mul(r, s), a) != self.act(r, self.act(s, a)) {
                        report.violation(Finding::new(
                            "action-associative",
                            vec![rname(r), rname(s), name(a)],
                            "(rs)m != r(sm)",
                        ));
                    }
                }
            }
        }
        if let Some(u) = self.ring.one() {
            if self.is_unital() {
                report.note("unital");
            } else {
                let m = (0..n).find(|&m| self.act(u, m) != m).unwrap_or_default();
                report.violation(Finding::new("unital", vec![name(m)], "1·m != m"));
            }
        }
        report
    }
}

/// An `R`-module isomorphism `R → N` for unital `R`: the map `r ↦ r·m` for
/// the first `m` making it bijective. Any isomorphism arises this way, as
/// the image of `1`.
pub fn find_cyclic_generator(n: &RModule) -> Option<usize> {
    n.ring.one()?;
    if n.ring().order() != n.order() {
        return None;
    }
    (0..n.order()).find(|&m| {
        let mut seen = vec![false; n.order()];
        n.orbit_map(m).into_iter().all(|x| !std::mem::replace(&mut seen[x], true))
    })
}
