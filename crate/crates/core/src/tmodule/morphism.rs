use super::absorbers::absorbers;
use super::finite::FiniteModule;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::traits::TrussModule;

/// A map of finite modules over the same truss preserving bracket and action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    map: Vec<usize>,
    target_len: usize,
}

impl ModuleMorphism {
    pub fn new(source: &FiniteModule, target: &FiniteModule, map: Vec<usize>) -> Result<Self> {
        let report = Self::check_map(source, target, &map);
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(ModuleMorphism {
            map,
            target_len: target.len(),
        })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>, target_len: usize) -> Self {
        ModuleMorphism { map, target_len }
    }

    pub fn identity(m: &FiniteModule) -> Self {
        Self::from_map_unchecked((0..m.len()).collect(), m.len())
    }

    /// Bracket and action preservation; also asserts that absorbers land
    /// on absorbers.
    pub fn check_map(source: &FiniteModule, target: &FiniteModule, map: &[usize]) -> Report {
        let mut report = Report::new("module morphism");
        if source.truss() != target.truss() {
            report.violation(Finding::new("same-truss", vec![], "modules over different trusses"));
            return report;
        }
        let n = source.len();
        if map.len() != n || map.iter().any(|&y| y >= target.len()) {
            report.violation(Finding::new("shape", vec![], "map does not send source ids into the target"));
            return report;
        }
        let name = |m: &FiniteModule, x: usize| m.heap().name(x).to_string();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if map[source.op(a, b, c)] != target.op(map[a], map[b], map[c]) {
                        report.violation(Finding::new(
                            "bracket",
                            vec![name(source, a), name(source, b), name(source, c)],
                            "f[a,b,c] != [fa,fb,fc]",
                        ));
                    }
                }
            }
            for t in 0..source.truss().len() {
                if map[source.action(t, a)] != target.action(t, map[a]) {
                    report.violation(Finding::new(
                        "action",
                        vec![source.truss().heap().name(t).to_string(), name(source, a)],
                        "f(t·m) != t·f(m)",
                    ));
                }
            }
        }
        if report.is_clean() {
            let tgt = absorbers(target);
            for e in absorbers(source).members {
                if !tgt.contains(map[e]) {
                    report.violation(Finding::new(
                        "absorbers-preserved",
                        vec![name(source, e)],
                        "absorber sent to a non-absorber",
                    ));
                }
            }
        }
        report
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_len];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_len];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// `σ_x : T → M, t ↦ t·x`, as a morphism out of the regular module.
pub fn sigma(m: &FiniteModule, x: usize) -> Result<ModuleMorphism> {
    if x >= m.len() {
        return Err(Error::NotInCarrier(x.to_string()));
    }
    let map = (0..m.truss().len()).map(|t| m.act(&t, &x)).collect();
    Ok(ModuleMorphism::from_map_unchecked(map, m.len()))
}

/// Every module morphism `source → target`, by brute force over all maps.
pub fn enumerate_homs(source: &FiniteModule, target: &FiniteModule) -> Vec<ModuleMorphism> {
    let (n, k) = (source.len(), target.len());
    if n == 0 {
        return vec![ModuleMorphism::from_map_unchecked(Vec::new(), k)];
    }
    if k == 0 {
        return Vec::new();
    }
    let total = k.pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let y = code % k;
                    code /= k;
                    y
                })
                .collect();
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| map[source.op(a, b, c)] == target.op(map[a], map[b], map[c]))
                })
            }) && (0..source.truss().len()).all(|t| (0..n).all(|a| map[source.action(t, a)] == target.action(t, map[a])));
            ok.then(|| ModuleMorphism::from_map_unchecked(map, k))
        })
        .collect()
}
