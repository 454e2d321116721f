use proptest::prelude::*;
use trusskit::tmodule::{FiniteModule, FreeModule};
use trusskit::traits::{Enumerable, Heap, TrussModule};
use trusskit::truss::{BuiltinTruss, FiniteRing, FiniteTruss};

fn elem(f: &FreeModule<BuiltinTruss>, radius: u32) -> impl Strategy<Value = <FreeModule<BuiltinTruss> as Heap>::Elem> {
    let w = f.window(radius);
    (0..w.len()).prop_map(move |i| w[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn free_module_over_integers(
        (x, y, z) in {
            let f = FreeModule::new(BuiltinTruss::TZ, 2).unwrap();
            (elem(&f, 3), elem(&f, 3), elem(&f, 3))
        },
        t in -4i64..=4, s in -4i64..=4, r in -4i64..=4,
    ) {
        let f = FreeModule::new(BuiltinTruss::TZ, 2).unwrap();
        prop_assert_eq!(f.act(&t, &f.act(&s, &x)), f.act(&(t * s), &x));
        prop_assert_eq!(f.act(&t, &f.bracket(&x, &y, &z)), f.bracket(&f.act(&t, &x), &f.act(&t, &y), &f.act(&t, &z)));
        prop_assert_eq!(f.act(&(t - s + r), &x), f.bracket(&f.act(&t, &x), &f.act(&s, &x), &f.act(&r, &x)));
        prop_assert_eq!(f.act(&1, &x), x.clone());
        prop_assert_eq!(f.act_two_summand_formula(&t, &x).unwrap(), f.act_letterwise(&t, &x));
    }

    #[test]
    fn free_module_over_brace(
        (x, y, z) in {
            let f = FreeModule::new(BuiltinTruss::C2Brace, 3).unwrap();
            (elem(&f, 2), elem(&f, 2), elem(&f, 2))
        },
        t in 0i64..2, s in 0i64..2,
    ) {
        let f = FreeModule::new(BuiltinTruss::C2Brace, 3).unwrap();
        prop_assert_eq!(f.act(&t, &f.act(&s, &x)), f.act(&(t ^ s), &x));
        prop_assert_eq!(f.act(&t, &f.bracket(&x, &y, &z)), f.bracket(&f.act(&t, &x), &f.act(&t, &y), &f.act(&t, &z)));
    }
}

/// The lift of any assignment of generators is a module morphism.
#[test]
fn lifts_are_morphisms() {
    let t = FiniteTruss::from_ring(&FiniteRing::zn(3));
    let f = FreeModule::new(t.clone(), 2).unwrap();
    let target = FiniteModule::regular(&t);
    let xs = f.window(1);
    for images in [[0, 0], [1, 2], [2, 2]] {
        let phi = |x: &trusskit::tmodule::FreeModuleElement<usize>| f.lift(&target, &images, x).unwrap();
        for x in &xs {
            for s in 0..3 {
                assert_eq!(phi(&f.act(&s, x)), target.act(&s, &phi(x)));
            }
            for y in xs.iter().step_by(3) {
                for z in xs.iter().step_by(5) {
                    assert_eq!(phi(&f.bracket(x, y, z)), target.bracket(&phi(x), &phi(y), &phi(z)));
                }
            }
        }
    }
}
