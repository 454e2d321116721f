use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::group::FiniteGroup;
use super::morphism::HeapMorphism;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap};

/// How exhaustively to check the quintuple associativity law.
#[derive(Clone, Copy, Debug)]
pub struct ValidationOptions {
    /// Carriers up to this size are checked on every quintuple.
    pub exhaustive_limit: usize,
    /// Ignore `exhaustive_limit` and always check every quintuple.
    pub force_exhaustive: bool,
    /// Random quintuples checked above the limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            exhaustive_limit: 16,
            force_exhaustive: false,
            samples: 10_000,
            seed: 0x7275_7373,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    /// Flat `n^3` table indexed `a*n*n + b*n + c`.
    Table(Vec<usize>),
    /// `[x, y, z] = x y^{-1} z` computed on demand.
    Group(FiniteGroup),
}

/// A finite heap on dense ids `0..n`, either table-backed or group-backed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHeap {
    names: Vec<String>,
    storage: Storage,
    abelian: bool,
}

impl FiniteHeap {
    /// The empty heap, initial in the category of heaps.
    pub fn empty() -> Self {
        FiniteHeap {
            names: Vec::new(),
            storage: Storage::Table(Vec::new()),
            abelian: true,
        }
    }

    /// The one-point heap, written `⋆`.
    pub fn singleton() -> Self {
        FiniteHeap {
            names: vec!["*".into()],
            storage: Storage::Table(vec![0]),
            abelian: true,
        }
    }

    /// `H(G)` with `[x, y, z] = x y^{-1} z`; Abelian iff `G` is.
    pub fn from_group(g: &FiniteGroup) -> Self {
        FiniteHeap {
            names: g.names().to_vec(),
            abelian: g.is_abelian(),
            storage: Storage::Group(g.clone()),
        }
    }

    /// Builds a table-backed heap from a nested `[a][b][c]` table. The
    /// Abelian flag is detected when `abelian` is `None`.
    pub fn from_table(
        names: Vec<String>,
        table: &[Vec<Vec<usize>>],
        abelian: Option<bool>,
        opts: &ValidationOptions,
    ) -> Result<Self> {
        let flat = flatten_cube(table, names.len())?;
        let detected = is_commutative_flat(names.len(), &flat);
        let abelian = abelian.unwrap_or(detected);
        let report = validate_flat(names.len(), &flat, abelian, opts);
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(FiniteHeap {
            names,
            storage: Storage::Table(flat),
            abelian,
        })
    }

    pub(crate) fn from_valid_flat(names: Vec<String>, flat: Vec<usize>) -> Self {
        let abelian = is_commutative_flat(names.len(), &flat);
        FiniteHeap {
            names,
            storage: Storage::Table(flat),
            abelian,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses either a display name or a numeric id.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        self.id_of(token)
            .or_else(|| token.parse::<usize>().ok().filter(|&i| i < self.len()))
            .ok_or_else(|| Error::NotInCarrier(token.to_string()))
    }

    pub fn is_group_backed(&self) -> bool {
        matches!(self.storage, Storage::Group(_))
    }

    pub fn op(&self, a: usize, b: usize, c: usize) -> usize {
        match &self.storage {
            Storage::Table(t) => {
                let n = self.len();
                t[(a * n + b) * n + c]
            }
            Storage::Group(g) => g.op(g.op(a, g.inverse(b)), c),
        }
    }

    /// Nested `[a][b][c]` table.
    pub fn table(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.len();
        (0..n)
            .map(|a| (0..n).map(|b| (0..n).map(|c| self.op(a, b, c)).collect()).collect())
            .collect()
    }

    fn flat(&self) -> Vec<usize> {
        match &self.storage {
            Storage::Table(t) => t.clone(),
            Storage::Group(_) => {
                let n = self.len();
                let mut out = Vec::with_capacity(n * n * n);
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            out.push(self.op(a, b, c));
                        }
                    }
                }
                out
            }
        }
    }

    /// Exact equality of ternary operations (names ignored).
    pub fn same_operation(&self, other: &FiniteHeap) -> bool {
        self.len() == other.len() && self.flat() == other.flat()
    }

    pub fn to_table_backed(&self) -> FiniteHeap {
        FiniteHeap {
            names: self.names.clone(),
            storage: Storage::Table(self.flat()),
            abelian: self.abelian,
        }
    }

    pub fn validate(&self, opts: &ValidationOptions) -> Report {
        validate_flat(self.len(), &self.flat(), self.abelian, opts)
    }

    fn check_member(&self, e: usize) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if e >= self.len() {
            return Err(Error::NotInCarrier(e.to_string()));
        }
        Ok(())
    }

    /// The retract `G(H; e)`: `a · b = [a, e, b]`, neutral `e`, inverse `[e, a, e]`.
    pub fn retract(&self, e: usize) -> Result<FiniteGroup> {
        self.check_member(e)?;
        let n = self.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.op(a, e, b));
            }
        }
        Ok(FiniteGroup::from_valid_flat(self.names.clone(), table))
    }

    /// `τ_e^f : a ↦ [a, e, f]`.
    pub fn translation(&self, e: usize, f: usize) -> Result<HeapMorphism> {
        self.check_member(e)?;
        self.check_member(f)?;
        let map = (0..self.len()).map(|a| self.op(a, e, f)).collect();
        Ok(HeapMorphism::from_map_unchecked(self.len(), self.len(), map))
    }

    /// Componentwise product, ids `a * |other| + b`.
    pub fn product(&self, other: &FiniteHeap) -> FiniteHeap {
        let m = other.len();
        let names: Vec<String> = (0..self.len() * m)
            .map(|i| format!("({},{})", self.name(i / m), other.name(i % m)))
            .collect();
        if let (Storage::Group(g), Storage::Group(h)) = (&self.storage, &other.storage) {
            let mut heap = FiniteHeap::from_group(&g.direct_product(h));
            heap.names = names;
            return heap;
        }
        let n = names.len();
        let mut flat = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = self.op(x / m, y / m, z / m);
                    let b = other.op(x % m, y % m, z % m);
                    flat.push(a * m + b);
                }
            }
        }
        FiniteHeap {
            names,
            storage: Storage::Table(flat),
            abelian: self.abelian && other.abelian,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.len());
        self.names = names;
        self
    }
}

impl Heap for FiniteHeap {
    type Elem = usize;

    fn bracket(&self, a: &usize, b: &usize, c: &usize) -> usize {
        self.op(*a, *b, *c)
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.len()
    }

    fn is_abelian(&self) -> bool {
        self.abelian
    }
}

impl Enumerable for FiniteHeap {
    fn window(&self, _radius: u32) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }
}

/// Checks a nested ternary table against the heap axioms.
///
/// A table that is not total over `n^3` (or mentions ids outside `0..n`) is
/// a structural error; axiom failures are findings in the returned report.
pub fn validate_heap(
    n: usize,
    table: &[Vec<Vec<usize>>],
    abelian: bool,
    opts: &ValidationOptions,
) -> Result<Report> {
    let flat = flatten_cube(table, n)?;
    Ok(validate_flat(n, &flat, abelian, opts))
}

fn validate_flat(n: usize, flat: &[usize], abelian: bool, opts: &ValidationOptions) -> Report {
    let mut report = Report::new("heap");
    let op = |a: usize, b: usize, c: usize| flat[(a * n + b) * n + c];
    let id = |x: usize| x.to_string();
    for a in 0..n {
        for b in 0..n {
            if op(a, b, b) != a {
                report.violation(Finding::new(
                    "malcev-right",
                    vec![id(a), id(b)],
                    format!("[a,b,b] = {} != a", op(a, b, b)),
                ));
            }
            if op(b, b, a) != a {
                report.violation(Finding::new(
                    "malcev-left",
                    vec![id(a), id(b)],
                    format!("[b,b,a] = {} != a", op(b, b, a)),
                ));
            }
        }
    }
    if abelian {
        for a in 0..n {
            for b in 0..n {
                for c in a + 1..n {
                    if op(a, b, c) != op(c, b, a) {
                        report.violation(Finding::new(
                            "abelian",
                            vec![id(a), id(b), id(c)],
                            format!("[a,b,c] = {} but [c,b,a] = {}", op(a, b, c), op(c, b, a)),
                        ));
                    }
                }
            }
        }
    }
    let assoc = |q: [usize; 5]| {
        let [a, b, c, d, e] = q;
        let lhs = op(op(a, b, c), d, e);
        let rhs = op(a, b, op(c, d, e));
        (lhs != rhs).then(|| {
            Finding::new(
                "associativity",
                q.iter().map(|&x| id(x)).collect(),
                format!("[[a,b,c],d,e] = {lhs} but [a,b,[c,d,e]] = {rhs}"),
            )
        })
    };
    if n <= opts.exhaustive_limit || opts.force_exhaustive {
        let per_first: Vec<Vec<Finding>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            for e in 0..n {
                                out.extend(assoc([a, b, c, d, e]));
                            }
                        }
                    }
                }
                out
            })
            .collect();
        for f in per_first.into_iter().flatten() {
            report.violation(f);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let q = [(); 5].map(|_| rng.gen_range(0..n));
            if let Some(f) = assoc(q) {
                report.violation(f);
            }
        }
        report.mark_bounded(format!(
            "associativity sampled on {} quintuples (carrier size {n} above exhaustive limit {})",
            opts.samples, opts.exhaustive_limit
        ));
    }
    report
}

fn is_commutative_flat(n: usize, flat: &[usize]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| flat[(a * n + b) * n + c] == flat[(c * n + b) * n + a]))
    })
}

fn flatten_cube(table: &[Vec<Vec<usize>>], n: usize) -> Result<Vec<usize>> {
    let total = table.len() == n
        && table
            .iter()
            .all(|plane| plane.len() == n && plane.iter().all(|row| row.len() == n));
    if !total {
        return Err(Error::Structural(format!(
            "ternary table must be total over {n}x{n}x{n}"
        )));
    }
    let flat: Vec<usize> = table.iter().flatten().flatten().copied().collect();
    if let Some(bad) = flat.iter().find(|&&x| x >= n) {
        return Err(Error::Structural(format!("entry {bad} outside 0..{n}")));
    }
    Ok(flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod3_table() -> Vec<Vec<Vec<usize>>> {
        (0..3)
            .map(|a| (0..3).map(|b| (0..3).map(|c| (a + 3 - b + c) % 3).collect()).collect())
            .collect()
    }

    #[test]
    fn affine_table_over_z3_is_abelian_heap() {
        let r = validate_heap(3, &mod3_table(), true, &ValidationOptions::default()).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn malcev_violation_is_located() {
        // x xor y xor z except [0,0,0] = 1
        let mut t: Vec<Vec<Vec<usize>>> = (0..2)
            .map(|a| (0..2).map(|b| (0..2).map(|c| a ^ b ^ c).collect()).collect())
            .collect();
        t[0][0][0] = 1;
        let r = validate_heap(2, &t, false, &ValidationOptions::default()).unwrap();
        assert!(r.is_fail());
        assert!(r
            .findings
            .iter()
            .any(|f| f.law.starts_with("malcev") && f.location == vec!["0", "0"]));
    }

    #[test]
    fn non_total_table_is_structural() {
        let t = vec![vec![vec![0usize]]];
        assert!(matches!(
            validate_heap(2, &t, false, &ValidationOptions::default()),
            Err(Error::Structural(_))
        ));
        let t = vec![vec![vec![5usize]]];
        assert!(matches!(
            validate_heap(1, &t, false, &ValidationOptions::default()),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn c2_heap_is_xor() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(2));
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    assert_eq!(h.op(a, b, c), a ^ b ^ c);
                }
            }
        }
    }

    #[test]
    fn z4_bracket_example() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(4));
        assert_eq!(h.op(1, 3, 2), 0);
    }

    #[test]
    fn retract_inverse_and_basepoint() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(5));
        let g = h.retract(1).unwrap();
        assert_eq!(g.neutral(), 1);
        assert_eq!(g.inverse(2), 0);
        assert!(matches!(h.retract(7), Err(Error::NotInCarrier(_))));
        assert!(matches!(FiniteHeap::empty().retract(0), Err(Error::EmptyCarrier)));
    }

    #[test]
    fn empty_heap_is_valid() {
        let r = FiniteHeap::empty().validate(&ValidationOptions::default());
        assert!(r.is_pass());
    }

    #[test]
    fn translation_on_z3() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(3));
        let t = h.translation(0, 1).unwrap();
        assert_eq!(t.map(), &[1, 2, 0]);
        assert_eq!(h.translation(2, 2).unwrap().map(), &[0, 1, 2]);
    }

    #[test]
    fn sampled_validation_is_inconclusive() {
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(20)).to_table_backed();
        let r = h.validate(&ValidationOptions::default());
        assert_eq!(r.status, crate::report::Status::Inconclusive);
        let forced = ValidationOptions {
            force_exhaustive: true,
            ..Default::default()
        };
        assert!(FiniteHeap::from_group(&FiniteGroup::cyclic(5)).validate(&forced).is_pass());
    }

    #[test]
    fn product_example_mixed_orders() {
        let a = FiniteHeap::from_group(&FiniteGroup::cyclic(2)).to_table_backed();
        let b = FiniteHeap::from_group(&FiniteGroup::cyclic(3));
        let p = a.product(&b);
        let pair = |x: usize, y: usize| x * 3 + y;
        // [(1,0),(0,1),(1,1)] = (1-0+1 mod 2, 0-1+1 mod 3) = (0,0)
        assert_eq!(p.op(pair(1, 0), pair(0, 1), pair(1, 1)), pair(0, 0));
        assert_eq!(p.len(), 6);
    }
}
