//! Isomorphism search for small groups and heaps.
//!
//! Heaps `A` and `B` are isomorphic iff their retracts are isomorphic as
//! groups, and every retract of a heap is isomorphic to every other (via a
//! translation). So it suffices to compare `G(A; 0)` with `G(B; 0)`.

use std::collections::VecDeque;

use super::group::FiniteGroup;
use super::heap::FiniteHeap;
use super::morphism::HeapMorphism;

/// Greedy generating set: each generator lies outside the subgroup of the previous ones.
fn generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![false; g.order()];
    covered[g.neutral()] = true;
    while let Some(x) = covered.iter().position(|&c| !c) {
        gens.push(x);
        for y in g.generated_subgroup(&gens) {
            covered[y] = true;
        }
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism, if that is consistent.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.neutral()] = h.neutral();
    let mut queue = VecDeque::from([g.neutral()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.op(x, s);
            let image = h.op(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push_back(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if map[g.op(a, b)] != h.op(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}

/// A group isomorphism `g → h` as an id table, or `None` if none exists.
pub fn find_group_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() {
        return None;
    }
    let mut g_orders = vec![0usize; g.order() + 1];
    let mut h_orders = vec![0usize; h.order() + 1];
    for x in 0..g.order() {
        g_orders[g.element_order(x)] += 1;
        h_orders[h.element_order(x)] += 1;
    }
    if g_orders != h_orders {
        return None;
    }
    let gens = generators(g);
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &mut images)
}

fn search(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        let map = extend(g, h, gens, images)?;
        let mut seen = vec![false; h.order()];
        for &y in &map {
            if std::mem::replace(&mut seen[y], true) {
                return None;
            }
        }
        return Some(map);
    }
    let want = g.element_order(gens[images.len()]);
    for t in 0..h.order() {
        if h.element_order(t) != want {
            continue;
        }
        images.push(t);
        if let Some(map) = search(g, h, gens, images) {
            return Some(map);
        }
        images.pop();
    }
    None
}

/// A heap isomorphism `a → b`, or `None` when the heaps are not isomorphic.
pub fn find_isomorphism(a: &FiniteHeap, b: &FiniteHeap) -> Option<HeapMorphism> {
    if a.len() != b.len() {
        return None;
    }
    if a.is_empty() {
        return Some(HeapMorphism::identity(0));
    }
    if a.same_operation(b) {
        return Some(HeapMorphism::identity(a.len()));
    }
    let ga = a.retract(0).ok()?;
    let gb = b.retract(0).ok()?;
    let map = find_group_isomorphism(&ga, &gb)?;
    Some(HeapMorphism::from_map_unchecked(a.len(), b.len(), map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &FiniteGroup) -> FiniteHeap {
        FiniteHeap::from_group(g)
    }

    #[test]
    fn z4_is_not_klein() {
        let z4 = h(&FiniteGroup::cyclic(4));
        let v4 = h(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)));
        assert!(find_isomorphism(&z4, &v4).is_none());
    }

    #[test]
    fn z6_is_z2_times_z3() {
        let z6 = h(&FiniteGroup::cyclic(6));
        let p = h(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3)));
        let iso = find_isomorphism(&z6, &p).unwrap();
        assert!(iso.is_bijective());
        assert!(iso.check(&z6, &p).is_pass());
    }

    #[test]
    fn self_iso_is_identity() {
        let q8 = h(&FiniteGroup::quaternion());
        assert_eq!(find_isomorphism(&q8, &q8).unwrap(), HeapMorphism::identity(8));
    }

    #[test]
    fn d4_and_q8_differ() {
        let d4 = FiniteGroup::dihedral(4);
        let q8 = FiniteGroup::quaternion();
        assert!(find_group_isomorphism(&d4, &q8).is_none());
        assert!(find_group_isomorphism(&d4, &d4).is_some());
    }

    #[test]
    fn all_small_groups_pairwise() {
        let groups = FiniteGroup::small_groups();
        for (i, (_, g)) in groups.iter().enumerate() {
            for (j, (_, k)) in groups.iter().enumerate() {
                assert_eq!(find_group_isomorphism(g, k).is_some(), i == j);
            }
        }
    }
}
