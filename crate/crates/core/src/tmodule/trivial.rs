use super::check::{check_module, ModuleCheckOptions};
use crate::report::{Finding, Report};
use crate::traits::{Enumerable, Heap, Scalar, Truss, TrussModule};

/// A heap `H` with the action `t·m = m` over a truss `T`.
#[derive(Clone, Debug)]
pub struct TrivialModule<T, H> {
    truss: T,
    heap: H,
}

impl<T: Truss, H: Heap> TrivialModule<T, H> {
    pub fn new(truss: T, heap: H) -> Self {
        TrivialModule { truss, heap }
    }

    pub fn heap(&self) -> &H {
        &self.heap
    }

    /// Under `t·m = m` the three module laws reduce to `m = m`,
    /// `m = [m, m, m]` and `[m, m', m''] = [m, m', m'']`, so validity is
    /// the heap identity `[m, m, m] = m`, which follows from Mal'cev. The
    /// window sweep is folded in as a cross-check; the verdict is exact
    /// whenever the carrier satisfies the heap axioms.
    pub fn validate(&self, opts: &ModuleCheckOptions) -> Report
    where
        T: Enumerable,
        H: Enumerable,
    {
        let mut report = Report::new("trivial-action module");
        let sweep = check_module(self, opts);
        for m in self.heap.window(opts.radius) {
            if self.heap.bracket(&m, &m, &m) != m {
                report.violation(Finding::new("idempotent-bracket", vec![format!("{m:?}")], "[m,m,m] != m"));
            }
        }
        let clean = sweep.is_clean();
        report.absorb(sweep);
        if clean && report.is_clean() {
            report.status = crate::report::Status::Pass;
            report.note("laws reduce to [m,m,m] = m under the trivial action");
        }
        report
    }

    /// Every element is an absorber.
    pub fn is_absorber(&self, m: &H::Elem) -> bool {
        self.heap.contains(m)
    }

    /// Over a ring-type truss this is a ring module iff the carrier is a
    /// single point; otherwise two distinct elements are two absorbers.
    pub fn ring_module_verdict(&self) -> crate::error::Result<(bool, Option<(H::Elem, H::Elem)>)>
    where
        H: Enumerable,
    {
        self.truss.absorber().ok_or(crate::error::Error::NotRingType)?;
        let w = self.heap.window(1);
        Ok(match w.as_slice() {
            [a, b, ..] => (false, Some((a.clone(), b.clone()))),
            _ => (true, None),
        })
    }
}

impl<T: Truss, H: Heap> Heap for TrivialModule<T, H> {
    type Elem = H::Elem;

    fn bracket(&self, a: &H::Elem, b: &H::Elem, c: &H::Elem) -> H::Elem {
        self.heap.bracket(a, b, c)
    }

    fn contains(&self, x: &H::Elem) -> bool {
        self.heap.contains(x)
    }

    fn is_abelian(&self) -> bool {
        self.heap.is_abelian()
    }
}

impl<T: Truss, H: Enumerable> Enumerable for TrivialModule<T, H> {
    fn window(&self, radius: u32) -> Vec<H::Elem> {
        self.heap.window(radius)
    }

    fn is_finite(&self) -> bool {
        self.heap.is_finite()
    }
}

impl<T: Truss, H: Heap> TrussModule for TrivialModule<T, H> {
    type Scalars = T;

    fn scalars(&self) -> &T {
        &self.truss
    }

    fn act(&self, _t: &Scalar<Self>, m: &H::Elem) -> H::Elem {
        m.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truss::BuiltinTruss;

    #[test]
    fn integers_with_trivial_action() {
        let m = TrivialModule::new(BuiltinTruss::TZ, BuiltinTruss::TZ);
        let r = m.validate(&ModuleCheckOptions::default());
        assert!(r.is_pass(), "{}", r.summary());
        let (ring, witness) = m.ring_module_verdict().unwrap();
        assert!(!ring);
        let (a, b) = witness.unwrap();
        assert!(a != b && m.is_absorber(&a) && m.is_absorber(&b));
        assert!(matches!(
            TrivialModule::new(BuiltinTruss::C2Brace, BuiltinTruss::TZ).ring_module_verdict(),
            Err(crate::error::Error::NotRingType)
        ));
    }
}
