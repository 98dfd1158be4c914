//! Group homomorphisms as total element maps, plus the enumeration
//! machinery for automorphism groups and isomorphism search.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{group_from_elements, Elt, FiniteGroup, Subgroup};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    src: Arc<FiniteGroup>,
    dst: Arc<FiniteGroup>,
    map: Vec<Elt>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}, {:?})", self.src.name(), self.dst.name(), self.map)
    }
}

impl GroupHom {
    /// Validates `map[x+y] = map[x]+map[y]` on all pairs and returns the
    /// hom, or the first failing pair as a witness.
    pub fn new(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>, map: Vec<Elt>) -> Result<GroupHom> {
        if map.len() != src.order() {
            return Err(Error::Mismatch(format!(
                "hom map has length {}, source has order {}",
                map.len(),
                src.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= dst.order()) {
            return Err(Error::Mismatch(format!("hom value {v} out of range")));
        }
        for x in 0..src.order() {
            for y in 0..src.order() {
                let got = map[src.add(x, y)];
                let want = dst.add(map[x], map[y]);
                if got != want {
                    return Err(Error::NotAHom { x, y, got, want });
                }
            }
        }
        Ok(GroupHom { src: src.clone(), dst: dst.clone(), map })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { src: g.clone(), dst: g.clone(), map: (0..g.order()).collect() }
    }

    pub fn zero(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { src: src.clone(), dst: dst.clone(), map: vec![0; src.order()] }
    }

    pub fn src(&self) -> &Arc<FiniteGroup> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FiniteGroup> {
        &self.dst
    }

    pub fn map(&self) -> &[Elt] {
        &self.map
    }

    pub fn apply(&self, x: Elt) -> Elt {
        self.map[x]
    }

    /// `self` after `other`: requires `other.dst == self.src` structurally.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if *other.dst != *self.src {
            return Err(Error::Mismatch("hom composition endpoint mismatch".into()));
        }
        let map = other.map.iter().map(|&x| self.map[x]).collect();
        Ok(GroupHom { src: other.src.clone(), dst: self.dst.clone(), map })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.dst.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.dst.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.src.order() == self.dst.order() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::Mismatch("cannot invert a non-bijective hom".into()));
        }
        let mut map = vec![0; self.dst.order()];
        for (x, &v) in self.map.iter().enumerate() {
            map[v] = x;
        }
        Ok(GroupHom { src: self.dst.clone(), dst: self.src.clone(), map })
    }
}

pub fn kernel(h: &GroupHom) -> Subgroup {
    let members: Vec<Elt> = (0..h.src().order()).filter(|&x| h.apply(x) == 0).collect();
    Subgroup::new(h.src(), &members).expect("kernel is always a subgroup")
}

pub fn image(h: &GroupHom) -> Subgroup {
    let members: Vec<Elt> = h.map().to_vec();
    Subgroup::new(h.dst(), &members).expect("image is always a subgroup")
}

/// Greedy minimal generating set: repeatedly adjoin the smallest element
/// outside the subgroup generated so far.
pub fn minimal_generating_set(g: &Arc<FiniteGroup>) -> Vec<Elt> {
    let mut gens = Vec::new();
    let mut have = Subgroup::trivial(g);
    while have.order() < g.order() {
        let next = (0..g.order()).find(|&x| !have.contains(x)).unwrap();
        gens.push(next);
        have = Subgroup::generated_by(g, &gens);
    }
    gens
}

/// Extends generator images to a map on the subgroup they generate.
/// Returns the partial map, or None on a conflict (non-hom or
/// non-injective assignment).
fn extend_map(
    src: &Arc<FiniteGroup>,
    dst: &Arc<FiniteGroup>,
    assigned: &[(Elt, Elt)],
) -> Option<Vec<Option<Elt>>> {
    let mut map: Vec<Option<Elt>> = vec![None; src.order()];
    let mut used = vec![false; dst.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut queue = vec![0usize];
    for &(g, h) in assigned {
        match map[g] {
            Some(v) if v != h => return None,
            Some(_) => {}
            None => {
                if used[h] {
                    return None;
                }
                map[g] = Some(h);
                used[h] = true;
                queue.push(g);
            }
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        let fa = map[a].unwrap();
        for &(g, h) in assigned {
            let b = src.add(a, g);
            let fb = dst.add(fa, h);
            match map[b] {
                Some(v) if v != fb => return None,
                Some(_) => {}
                None => {
                    if used[fb] {
                        return None;
                    }
                    map[b] = Some(fb);
                    used[fb] = true;
                    queue.push(b);
                }
            }
        }
    }
    Some(map)
}

/// All isomorphisms from `src` to `dst` (empty when none exist), found by
/// backtracking over generator images with element-order pruning. Results
/// are sorted lexicographically on the map arrays.
pub fn isomorphisms_between(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>) -> Vec<GroupHom> {
    let n = src.order();
    if n != dst.order() {
        return Vec::new();
    }
    let mut src_orders: Vec<usize> = (0..n).map(|x| src.element_order(x)).collect();
    let mut dst_orders: Vec<usize> = (0..n).map(|x| dst.element_order(x)).collect();
    let order_of_src = src_orders.clone();
    let order_of_dst = dst_orders.clone();
    src_orders.sort_unstable();
    dst_orders.sort_unstable();
    if src_orders != dst_orders {
        return Vec::new();
    }
    let gens = minimal_generating_set(src);
    let mut out = Vec::new();
    let mut assigned: Vec<(Elt, Elt)> = Vec::new();

    fn recurse(
        src: &Arc<FiniteGroup>,
        dst: &Arc<FiniteGroup>,
        gens: &[Elt],
        order_of_src: &[usize],
        order_of_dst: &[usize],
        assigned: &mut Vec<(Elt, Elt)>,
        out: &mut Vec<GroupHom>,
    ) {
        if assigned.len() == gens.len() {
            let Some(partial) = extend_map(src, dst, assigned) else { return };
            let map: Vec<Elt> = match partial.into_iter().collect::<Option<Vec<_>>>() {
                Some(m) => m,
                // Generators generate the whole group, so a total map is
                // guaranteed; a hole means the closure found a conflict.
                None => return,
            };
            if let Ok(h) = GroupHom::new(src, dst, map) {
                if h.is_bijective() {
                    out.push(h);
                }
            }
            return;
        }
        let g = gens[assigned.len()];
        for h in 0..dst.order() {
            if order_of_dst[h] != order_of_src[g] {
                continue;
            }
            assigned.push((g, h));
            if extend_map(src, dst, assigned).is_some() {
                recurse(src, dst, gens, order_of_src, order_of_dst, assigned, out);
            }
            assigned.pop();
        }
    }

    recurse(src, dst, &gens, &order_of_src, &order_of_dst, &mut assigned, &mut out);
    out.sort_by(|a, b| a.map().cmp(b.map()));
    out
}

/// The automorphism group of G, materialized as a Cayley table under
/// composition (identity at index 0, elements in lexicographic map order)
/// together with the automorphisms themselves.
pub fn automorphism_group(
    g: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<(Arc<FiniteGroup>, Vec<GroupHom>)> {
    if g.order() > cap {
        return Err(Error::CapExceeded { what: "automorphism enumeration", needed: g.order(), cap });
    }
    let auts = isomorphisms_between(g, g);
    let maps: Vec<Vec<Elt>> = auts.iter().map(|a| a.map().to_vec()).collect();
    let id: Vec<Elt> = (0..g.order()).collect();
    let (table, order) = group_from_elements(
        &format!("Aut({})", g.name()),
        maps,
        &id,
        |a, b| b.iter().map(|&x| a[x]).collect::<Vec<_>>(),
    )?;
    let homs = order
        .into_iter()
        .map(|m| GroupHom { src: g.clone(), dst: g.clone(), map: m })
        .collect();
    Ok((table, homs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::all_permutations;

    /// Brute-force oracle: scan every permutation fixing 0. Only for
    /// orders <= 8.
    fn automorphisms_brute(g: &Arc<FiniteGroup>) -> Vec<Vec<Elt>> {
        let n = g.order();
        assert!(n <= 8);
        let mut out = Vec::new();
        for p in all_permutations(n) {
            if p[0] != 0 {
                continue;
            }
            let ok = (0..n).all(|x| (0..n).all(|y| p[g.add(x, y)] == g.add(p[x], p[y])));
            if ok {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn hom_validation() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        assert!(GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).is_ok());
        let x3 = GroupHom::new(&z4, &z4, vec![0, 3, 2, 1]).unwrap();
        assert!(x3.is_bijective());
        match GroupHom::new(&z4, &z2, vec![0, 1, 1, 0]) {
            Err(Error::NotAHom { x, y, .. }) => assert_eq!((x, y), (1, 1)),
            other => panic!("expected NotAHom, got {other:?}"),
        }
    }

    #[test]
    fn kernel_image() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let mod2 = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(kernel(&mod2).members(), &[0, 2]);
        let emb = GroupHom::new(&z2, &z4, vec![0, 2]).unwrap();
        assert_eq!(image(&emb).members(), &[0, 2]);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(kernel(&GroupHom::identity(&s3)).members(), &[0]);
        assert!(kernel(&mod2).is_normal());
    }

    #[test]
    fn automorphism_groups_match_brute_force() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(6),
            FiniteGroup::klein4(),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)),
        ] {
            let (_, auts) = automorphism_group(&g, 64).unwrap();
            let mut got: Vec<Vec<Elt>> = auts.iter().map(|a| a.map().to_vec()).collect();
            got.sort();
            let mut want = automorphisms_brute(&g);
            want.sort();
            assert_eq!(got, want, "Aut({}) mismatch", g.name());
        }
    }

    #[test]
    fn automorphism_group_counts() {
        let (a, _) = automorphism_group(&FiniteGroup::cyclic(3), 64).unwrap();
        assert_eq!(a.order(), 2);
        let (a, auts) = automorphism_group(&FiniteGroup::klein4(), 64).unwrap();
        assert_eq!(a.order(), 6);
        assert!(!isomorphisms_between(&a, &FiniteGroup::symmetric(3)).is_empty());
        assert!(auts[0].is_identity());
        let (a, _) = automorphism_group(&FiniteGroup::trivial(), 64).unwrap();
        assert_eq!(a.order(), 1);
    }

    #[test]
    fn automorphism_table_composes_correctly() {
        let k4 = FiniteGroup::klein4();
        let (table, auts) = automorphism_group(&k4, 64).unwrap();
        for i in 0..auts.len() {
            for j in 0..auts.len() {
                let comp = auts[i].compose(&auts[j]).unwrap();
                assert_eq!(auts[table.add(i, j)], comp);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = FiniteGroup::symmetric(3);
        assert!(matches!(automorphism_group(&g, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn iso_search_respects_obstructions() {
        let z4 = FiniteGroup::cyclic(4);
        let k4 = FiniteGroup::klein4();
        assert!(isomorphisms_between(&z4, &k4).is_empty());
        assert!(!isomorphisms_between(&FiniteGroup::dihedral(3), &FiniteGroup::symmetric(3)).is_empty());
    }
}
