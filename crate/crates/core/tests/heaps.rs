use trusskit::algebra::{find_isomorphism, validate_heap, FiniteGroup, FiniteHeap, ValidationOptions};

#[test]
fn retract_then_heap_is_identity_for_small_groups() {
    for (name, g) in FiniteGroup::small_groups() {
        let h = FiniteHeap::from_group(&g);
        for e in 0..h.len() {
            let back = FiniteHeap::from_group(&h.retract(e).unwrap());
            assert_eq!(back.table(), h.table(), "{name} at {e}");
        }
    }
}

#[test]
fn retracts_at_different_basepoints_are_isomorphic() {
    let g = FiniteGroup::quaternion();
    let h = FiniteHeap::from_group(&g);
    let g0 = FiniteHeap::from_group(&h.retract(0).unwrap());
    for e in 1..h.len() {
        let tau = h.translation(0, e).unwrap();
        assert!(tau.is_bijective());
        assert!(find_isomorphism(&g0, &FiniteHeap::from_group(&h.retract(e).unwrap())).is_some());
    }
}

/// Of the 2^8 ternary tables on two elements, only `H(C₂)` is a heap.
#[test]
fn exactly_one_heap_on_two_elements() {
    let opts = ValidationOptions::default();
    let mut valid = Vec::new();
    for code in 0u32..256 {
        let bit = |a: usize, b: usize, c: usize| ((code >> (a * 4 + b * 2 + c)) & 1) as usize;
        let table: Vec<Vec<Vec<usize>>> = (0..2)
            .map(|a| (0..2).map(|b| (0..2).map(|c| bit(a, b, c)).collect()).collect())
            .collect();
        if validate_heap(2, &table, false, &opts).unwrap().is_clean() {
            valid.push(table);
        }
    }
    assert_eq!(valid.len(), 1);
    assert_eq!(valid[0], FiniteHeap::from_group(&FiniteGroup::cyclic(2)).table());
}

#[test]
fn broken_table_reports_a_malcev_witness() {
    let table = vec![vec![vec![0, 0], vec![1, 0]], vec![vec![1, 0], vec![0, 1]]];
    let r = validate_heap(2, &table, false, &ValidationOptions::default()).unwrap();
    assert!(r.is_fail());
    assert!(r.findings.iter().any(|f| f.law.starts_with("malcev")));
    assert!(validate_heap(3, &table, false, &ValidationOptions::default()).is_err());
}
