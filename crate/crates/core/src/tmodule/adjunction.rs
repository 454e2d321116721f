//! The adjunction `(−)_Abs ⊣ T` between `T(R)`-modules and `R`-modules,
//! checked on brute-forced hom-sets.

use super::absorbers::{abs_quotient, AbsQuotient};
use super::finite::{FiniteModule, RModule};
use super::morphism::enumerate_homs;
use crate::error::{Error, Result};
use crate::report::{Finding, Report};
use crate::truss::FiniteTruss;

/// `hom_R(A, B)` by brute force over all maps.
pub fn enumerate_r_homs(a: &RModule, b: &RModule) -> Vec<Vec<usize>> {
    let (n, k) = (a.order(), b.order());
    (0..k.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let y = code % k;
                    code /= k;
                    y
                })
                .collect::<Vec<usize>>()
        })
        .filter(|map| a.is_linear_map(b, map))
        .collect()
}

/// `Θ(φ) = [m ↦ φ(m̄)]`.
pub fn adjunction_theta(q: &AbsQuotient, phi: &[usize]) -> Vec<usize> {
    q.projection.map().iter().map(|&c| phi[c]).collect()
}

/// `Θ⁻¹(ψ) = [m̄ ↦ ψ(m)]`; fails if `ψ` is not constant on some class.
pub fn adjunction_theta_inv(q: &AbsQuotient, psi: &[usize]) -> Result<Vec<usize>> {
    q.classes
        .iter()
        .map(|class| {
            let v = psi[class[0]];
            if class.iter().all(|&m| psi[m] == v) {
                Ok(v)
            } else {
                Err(Error::Mismatch("map is not constant on an Abs(M) class".into()))
            }
        })
        .collect()
}

/// Enumerates `hom_R(M_Abs, N)` and `hom_{T(R)}(M, T(N))`, and checks that
/// `Θ` and `Θ⁻¹` map each into the other and compose to identities.
pub fn adjunction_check(m: &FiniteModule, n: &RModule) -> Result<Report> {
    if *m.truss() != FiniteTruss::from_ring(n.ring()) {
        return Err(Error::Mismatch("module truss is not T(R) for the ring of N".into()));
    }
    let q = abs_quotient(m)?;
    let m_abs = q.r_module.clone().ok_or(Error::NotRingType)?;
    let tn = FiniteModule::from_r_module(n);
    let r_homs = enumerate_r_homs(&m_abs, n);
    let t_homs: Vec<Vec<usize>> = enumerate_homs(m, &tn).into_iter().map(|f| f.map().to_vec()).collect();
    let mut report = Report::new(format!("adjunction |M| = {}, |N| = {}", m.len(), n.order()));
    report.note(format!("|hom_R(M_Abs, N)| = {}", r_homs.len()));
    report.note(format!("|hom_T(R)(M, T(N))| = {}", t_homs.len()));
    if r_homs.len() != t_homs.len() {
        report.violation(Finding::new(
            "cardinality",
            vec![r_homs.len().to_string(), t_homs.len().to_string()],
            "hom-sets differ in size",
        ));
    }
    for phi in &r_homs {
        let psi = adjunction_theta(&q, phi);
        if !t_homs.contains(&psi) {
            report.violation(Finding::new("theta", vec![format!("{phi:?}")], "Θ(φ) is not a T(R)-morphism"));
        }
        match adjunction_theta_inv(&q, &psi) {
            Ok(back) if back == *phi => {}
            _ => report.violation(Finding::new("theta-inv-theta", vec![format!("{phi:?}")], "Θ⁻¹Θ(φ) != φ")),
        }
    }
    for psi in &t_homs {
        match adjunction_theta_inv(&q, psi) {
            Ok(phi) => {
                if !r_homs.contains(&phi) {
                    report.violation(Finding::new(
                        "theta-inv",
                        vec![format!("{psi:?}")],
                        "Θ⁻¹(ψ) is not R-linear",
                    ));
                }
                if adjunction_theta(&q, &phi) != *psi {
                    report.violation(Finding::new("theta-theta-inv", vec![format!("{psi:?}")], "ΘΘ⁻¹(ψ) != ψ"));
                }
            }
            Err(_) => report.violation(Finding::new(
                "well-defined",
                vec![format!("{psi:?}")],
                "ψ is not constant on Abs classes",
            )),
        }
    }
    let zero = vec![n.zero(); m_abs.order()];
    if adjunction_theta(&q, &zero) != vec![n.zero(); m.len()] {
        report.violation(Finding::new("theta-zero", vec![], "Θ(0) is not the constant map to 0"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truss::FiniteRing;

    #[test]
    fn adjunction_on_small_modules() {
        for k in [2, 3] {
            let r = FiniteRing::zn(k);
            let n = RModule::regular(&r);
            for m in [RModule::regular(&r), RModule::power(&r, 2).unwrap()] {
                if m.order() > 4 {
                    continue;
                }
                let rep = adjunction_check(&FiniteModule::from_r_module(&m), &n).unwrap();
                assert!(rep.is_pass(), "{}", rep.summary());
            }
        }
    }

    #[test]
    fn theta_inv_of_theta_on_regular() {
        let r = FiniteRing::zn(2);
        let m = FiniteModule::from_r_module(&RModule::regular(&r));
        let q = abs_quotient(&m).unwrap();
        let homs = enumerate_r_homs(q.r_module.as_ref().unwrap(), &RModule::regular(&r));
        assert_eq!(homs.len(), 2);
        for phi in homs {
            assert_eq!(adjunction_theta_inv(&q, &adjunction_theta(&q, &phi)).unwrap(), phi);
        }
    }

    #[test]
    fn mismatched_ring_is_rejected() {
        let m = FiniteModule::from_r_module(&RModule::regular(&FiniteRing::zn(2)));
        let n = RModule::regular(&FiniteRing::zn(3));
        assert!(matches!(adjunction_check(&m, &n), Err(Error::Mismatch(_))));
    }
}
