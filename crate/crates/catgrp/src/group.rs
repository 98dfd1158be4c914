//! Finite groups as Cayley tables over element indices `0..n`, written
//! additively. Index 0 is always the identity; constructors relabel when
//! necessary to keep that invariant.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Elt = usize;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<Elt>>,
    inv: Vec<Elt>,
}

/// Structural equality: same Cayley table, names ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl FiniteGroup {
    /// Builds a group from a raw table, checking every group axiom.
    /// If the two-sided identity is not at index 0 the elements are
    /// relabelled by the transposition that moves it there.
    pub fn from_table(name: &str, table: Vec<Vec<Elt>>) -> Result<Arc<FiniteGroup>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup { axiom: "nonempty", witness: "order 0".into() });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup {
                    axiom: "shape",
                    witness: format!("row {i} has length {} != {n}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup {
                        axiom: "shape",
                        witness: format!("table[{i}][{j}] = {v} out of range"),
                    });
                }
            }
        }
        // Locate a two-sided identity.
        let e = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or(Error::NotAGroup { axiom: "identity", witness: "no two-sided identity".into() })?;
        let table = if e == 0 {
            table
        } else {
            let p = |x: Elt| if x == 0 { e } else if x == e { 0 } else { x };
            let mut t = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    t[p(i)][p(j)] = p(table[i][j]);
                }
            }
            t
        };
        // Latin square.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] {
                    return Err(Error::NotAGroup {
                        axiom: "latin-square",
                        witness: format!("row {i} repeats value {}", table[i][j]),
                    });
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(Error::NotAGroup {
                        axiom: "latin-square",
                        witness: format!("column {i} repeats value {}", table[j][i]),
                    });
                }
                seen_col[table[j][i]] = true;
            }
        }
        // Two-sided inverses.
        for i in 0..n {
            let j = table[i].iter().position(|&v| v == 0).unwrap();
            if table[j][i] != 0 {
                return Err(Error::NotAGroup {
                    axiom: "inverse",
                    witness: format!("{i}+{j} = 0 but {j}+{i} = {}", table[j][i]),
                });
            }
        }
        // Associativity, all triples.
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup {
                            axiom: "associativity",
                            witness: format!("({a}+{b})+{c} != {a}+({b}+{c})"),
                        });
                    }
                }
            }
        }
        Ok(Self::new_unchecked(name, table))
    }

    /// Internal constructor for tables that are a group by construction
    /// (products, quotients, materialized enumerations).
    pub(crate) fn new_unchecked(name: &str, table: Vec<Vec<Elt>>) -> Arc<FiniteGroup> {
        let inv = table
            .iter()
            .map(|row| row.iter().position(|&v| v == 0).expect("row without identity"))
            .collect();
        Arc::new(FiniteGroup { name: name.to_string(), table, inv })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        self.table[a][b]
    }

    pub fn neg(&self, a: Elt) -> Elt {
        self.inv[a]
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    /// Conjugate of `a` by `x`: `x + a - x`.
    pub fn conj(&self, x: Elt, a: Elt) -> Elt {
        self.sub(self.add(x, a), x)
    }

    /// Commutator `a + b - a - b`.
    pub fn comm(&self, a: Elt, b: Elt) -> Elt {
        self.sub(self.sub(self.add(a, b), a), b)
    }

    pub fn table(&self) -> &[Vec<Elt>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.add(a, b) == self.add(b, a)))
    }

    /// A witness pair (a, b) with a+b != b+a, if one exists.
    pub fn noncommuting_pair(&self) -> Option<(Elt, Elt)> {
        let n = self.order();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| self.add(a, b) != self.add(b, a))
    }

    pub fn element_order(&self, a: Elt) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn trivial() -> Arc<FiniteGroup> {
        Self::new_unchecked("1", vec![vec![0]])
    }

    /// Z_n with residue indices.
    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        assert!(n > 0, "cyclic group needs n >= 1");
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::new_unchecked(&format!("Z{n}"), table)
    }

    /// Dihedral group of order 2n; element `i + n*j` is the rotation r^i
    /// composed with the reflection s^j.
    pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
        assert!(n > 0, "dihedral group needs n >= 1");
        let idx = |i: usize, j: usize| i + n * j;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for i1 in 0..n {
            for j1 in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        let i = if j1 == 1 { (i1 + n - i2) % n } else { (i1 + i2) % n };
                        table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                    }
                }
            }
        }
        Self::new_unchecked(&format!("D{n}"), table)
    }

    /// Symmetric group on n letters; elements are permutations ranked
    /// lexicographically, so the identity gets index 0. The operation is
    /// `(p + q)(x) = p(q(x))`.
    pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
        assert!(n > 0 && n <= 6, "symmetric group supported for 1 <= n <= 6");
        let perms = all_permutations(n);
        let rank = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let m = perms.len();
        let mut table = vec![vec![0; m]; m];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[i][j] = rank(&comp);
            }
        }
        Self::new_unchecked(&format!("S{n}"), table)
    }

    pub fn klein4() -> Arc<FiniteGroup> {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::new_unchecked("K4", table)
    }

    /// Direct product with pair index `a * |B| + b`.
    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
        let (na, nb) = (a.order(), b.order());
        let idx = |x: Elt, y: Elt| x * nb + y;
        let mut table = vec![vec![0; na * nb]; na * nb];
        for x1 in 0..na {
            for y1 in 0..nb {
                for x2 in 0..na {
                    for y2 in 0..nb {
                        table[idx(x1, y1)][idx(x2, y2)] = idx(a.add(x1, x2), b.add(y1, y2));
                    }
                }
            }
        }
        Self::new_unchecked(&format!("{}x{}", a.name(), b.name()), table)
    }
}

/// All permutations of 0..n in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<Elt>,
}

impl Subgroup {
    /// Validates closure under the operation and inverses; members are
    /// stored sorted.
    pub fn new(parent: &Arc<FiniteGroup>, members: &[Elt]) -> Result<Subgroup> {
        let mut m: Vec<Elt> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.binary_search(&0).is_err() {
            return Err(Error::NotASubgroup { reason: "missing identity", witness: "0".into() });
        }
        for &a in &m {
            if a >= parent.order() {
                return Err(Error::NotASubgroup { reason: "out of range", witness: a.to_string() });
            }
            if m.binary_search(&parent.neg(a)).is_err() {
                return Err(Error::NotASubgroup {
                    reason: "not closed under inverse",
                    witness: format!("-{a} = {}", parent.neg(a)),
                });
            }
            for &b in &m {
                if m.binary_search(&parent.add(a, b)).is_err() {
                    return Err(Error::NotASubgroup {
                        reason: "not closed under operation",
                        witness: format!("{a}+{b} = {}", parent.add(a, b)),
                    });
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), members: m })
    }

    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[Elt]) -> Subgroup {
        let n = parent.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut queue = vec![0];
        while let Some(a) = queue.pop() {
            for &g in gens {
                for b in [parent.add(a, g), parent.add(g, a)] {
                    if !inside[b] {
                        inside[b] = true;
                        queue.push(b);
                    }
                }
            }
        }
        let members = (0..n).filter(|&a| inside[a]).collect();
        Subgroup { parent: parent.clone(), members }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup { parent: parent.clone(), members: (0..parent.order()).collect() }
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup { parent: parent.clone(), members: vec![0] }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[Elt] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: Elt) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Position of `a` in the sorted member list.
    pub fn index_of(&self, a: Elt) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// A witness (g, h) with g+h-g outside the subgroup, if one exists.
    pub fn normality_witness(&self) -> Option<(Elt, Elt)> {
        for g in 0..self.parent.order() {
            for &h in &self.members {
                if !self.contains(self.parent.conj(g, h)) {
                    return Some((g, h));
                }
            }
        }
        None
    }

    /// Materializes the subgroup as a standalone group (identity at 0,
    /// members in sorted order) together with the embedding back into the
    /// parent: element `i` of the new group is `embedding[i]` upstairs.
    pub fn as_group(&self, name: &str) -> (Arc<FiniteGroup>, Vec<Elt>) {
        let k = self.members.len();
        let mut table = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = self.index_of(self.parent.add(self.members[i], self.members[j])).unwrap();
            }
        }
        (FiniteGroup::new_unchecked(name, table), self.members.clone())
    }
}

pub fn center(g: &Arc<FiniteGroup>) -> Subgroup {
    let n = g.order();
    let members: Vec<Elt> =
        (0..n).filter(|&z| (0..n).all(|x| g.add(z, x) == g.add(x, z))).collect();
    Subgroup { parent: g.clone(), members }
}

/// Subgroup generated by all commutators `h1 + h2 - h1 - h2` with
/// `h1 in H1`, `h2 in H2`.
pub fn commutator_subgroup(g: &Arc<FiniteGroup>, h1: &Subgroup, h2: &Subgroup) -> Subgroup {
    let mut gens = Vec::new();
    for &a in h1.members() {
        for &b in h2.members() {
            gens.push(g.comm(a, b));
        }
    }
    Subgroup::generated_by(g, &gens)
}

/// Quotient by a normal subgroup. Cosets are ordered by their minimal
/// representative, so the coset of 0 is element 0. Returns the quotient
/// together with the canonical projection.
pub fn quotient(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
) -> Result<(Arc<FiniteGroup>, crate::hom::GroupHom)> {
    if let Some((by, member)) = n.normality_witness() {
        return Err(Error::NotNormal { by, member, conjugate: g.conj(by, member) });
    }
    let order = g.order();
    let mut coset_rep = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_rep[x] == usize::MAX {
            reps.push(x);
            for &h in n.members() {
                coset_rep[g.add(x, h)] = x;
            }
        }
    }
    let rep_index = |r: Elt| reps.binary_search(&r).unwrap();
    let k = reps.len();
    let mut table = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            table[i][j] = rep_index(coset_rep[g.add(reps[i], reps[j])]);
        }
    }
    let q = FiniteGroup::new_unchecked(&format!("{}/{}", g.name(), n.order()), table);
    let proj_map: Vec<Elt> = (0..order).map(|x| rep_index(coset_rep[x])).collect();
    let proj = crate::hom::GroupHom::new(g, &q, proj_map)?;
    Ok((q, proj))
}

/// Semidirect product N x| M for an action `act[m][n]` of M on N by
/// automorphisms. Pairs `(n, m)` are indexed as `n * |M| + m` and
/// `(n, m) + (n', m') = (n + m.n', m + m')`.
pub fn semidirect_product_groups(
    n: &Arc<FiniteGroup>,
    m: &Arc<FiniteGroup>,
    act: &[Vec<Elt>],
) -> Result<Arc<FiniteGroup>> {
    validate_action_by_automorphisms(n, m, act)?;
    let (nn, nm) = (n.order(), m.order());
    let idx = |a: Elt, b: Elt| a * nm + b;
    let mut table = vec![vec![0; nn * nm]; nn * nm];
    for a in 0..nn {
        for b in 0..nm {
            for a1 in 0..nn {
                for b1 in 0..nm {
                    table[idx(a, b)][idx(a1, b1)] = idx(n.add(a, act[b][a1]), m.add(b, b1));
                }
            }
        }
    }
    Ok(FiniteGroup::new_unchecked(&format!("{}x|{}", n.name(), m.name()), table))
}

/// Checks that `act[m]` is an automorphism of N for every m and that
/// `m -> act[m]` is a homomorphism into Aut(N).
pub fn validate_action_by_automorphisms(
    n: &Arc<FiniteGroup>,
    m: &Arc<FiniteGroup>,
    act: &[Vec<Elt>],
) -> Result<()> {
    let (nn, nm) = (n.order(), m.order());
    if act.len() != nm || act.iter().any(|row| row.len() != nn) {
        return Err(Error::Mismatch(format!("action table must be {nm}x{nn}")));
    }
    for (b, row) in act.iter().enumerate() {
        let mut seen = vec![false; nn];
        for &v in row {
            if v >= nn {
                return Err(Error::Mismatch(format!("action row {b} has entry {v} out of range")));
            }
            seen[v] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::AxiomViolation {
                structure: "group action",
                axiom: "row bijective",
                witness: format!("row {b}"),
            });
        }
        for x in 0..nn {
            for y in 0..nn {
                if row[n.add(x, y)] != n.add(row[x], row[y]) {
                    return Err(Error::AxiomViolation {
                        structure: "group action",
                        axiom: "row is a homomorphism",
                        witness: format!("m={b}, x={x}, y={y}"),
                    });
                }
            }
        }
    }
    for b1 in 0..nm {
        for b2 in 0..nm {
            let sum = m.add(b1, b2);
            for x in 0..nn {
                if act[sum][x] != act[b1][act[b2][x]] {
                    return Err(Error::AxiomViolation {
                        structure: "group action",
                        axiom: "action is a homomorphism into Aut",
                        witness: format!("m1={b1}, m2={b2}, x={x}"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Materializes an abstractly enumerated group: sorts the elements,
/// moves the identity to the front and fills in the Cayley table from
/// `op`. Returns the table together with the final element order.
pub(crate) fn group_from_elements<T, F>(
    name: &str,
    mut elems: Vec<T>,
    identity: &T,
    op: F,
) -> Result<(Arc<FiniteGroup>, Vec<T>)>
where
    T: Clone + Ord,
    F: Fn(&T, &T) -> T,
{
    elems.sort();
    elems.dedup();
    let pos = elems
        .binary_search(identity)
        .map_err(|_| Error::Internal("identity element missing from enumeration".into()))?;
    let id = elems.remove(pos);
    elems.insert(0, id);
    let find = |t: &T| -> Result<usize> {
        elems
            .iter()
            .position(|e| e == t)
            .ok_or_else(|| Error::Internal("enumerated collection not closed under operation".into()))
    };
    let k = elems.len();
    let mut table = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            table[i][j] = find(&op(&elems[i], &elems[j]))?;
        }
    }
    // The table is checked fully here: enumerated collections are the one
    // place where a bug upstream could produce a non-group.
    let g = FiniteGroup::from_table(name, table)?;
    Ok((g, elems))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        let z1 = FiniteGroup::cyclic(1);
        assert_eq!(z1.order(), 1);
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.add(1, 3), 0);
        assert_eq!(z4.neg(1), 3);
        assert!(z4.is_abelian());
    }

    #[test]
    fn symmetric3_nonabelian() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        let (a, b) = s3.noncommuting_pair().expect("S3 is nonabelian");
        assert_ne!(s3.add(a, b), s3.add(b, a));
    }

    #[test]
    fn from_table_rejects_with_witness() {
        // Break associativity in a Z3-like table.
        let bad = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert!(FiniteGroup::from_table("Z3", bad).is_ok());
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(FiniteGroup::from_table("bad", bad).is_err());
    }

    #[test]
    fn from_table_relabels_identity() {
        // Z2 with identity at index 1.
        let t = vec![vec![1, 0], vec![0, 1]];
        let g = FiniteGroup::from_table("Z2shift", t).unwrap();
        assert_eq!(g.add(0, 1), 1);
        assert_eq!(g.add(1, 1), 0);
    }

    #[test]
    fn group_axioms_exhaustive_for_builtins() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(5),
            FiniteGroup::dihedral(4),
            FiniteGroup::symmetric(4),
            FiniteGroup::klein4(),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)),
        ] {
            // from_table re-runs every axiom check.
            assert!(FiniteGroup::from_table(g.name(), g.table().to_vec()).is_ok());
        }
    }

    #[test]
    fn center_and_commutator_of_s3() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(center(&s3).order(), 1);
        let whole = Subgroup::whole(&s3);
        let derived = commutator_subgroup(&s3, &whole, &whole);
        assert_eq!(derived.order(), 3);
        assert!(derived.is_normal());
    }

    #[test]
    fn center_of_abelian_is_whole() {
        let z4 = FiniteGroup::cyclic(4);
        assert!(center(&z4).is_whole());
    }

    #[test]
    fn quotients() {
        let z4 = FiniteGroup::cyclic(4);
        let n = Subgroup::new(&z4, &[0, 2]).unwrap();
        let (q, proj) = quotient(&z4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(crate::hom::kernel(&proj).members(), &[0, 2]);

        let s3 = FiniteGroup::symmetric(3);
        let whole = Subgroup::whole(&s3);
        let a3 = commutator_subgroup(&s3, &whole, &whole);
        let (q, _) = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);

        let triv = Subgroup::trivial(&s3);
        let (q, proj) = quotient(&s3, &triv).unwrap();
        assert_eq!(q.order(), 6);
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = FiniteGroup::symmetric(3);
        // Order-2 subgroups of S3 are not normal.
        let t = (1..6).find(|&a| s3.element_order(a) == 2).unwrap();
        let h = Subgroup::new(&s3, &[0, t]).unwrap();
        assert!(matches!(quotient(&s3, &h), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn abelianization_is_abelian() {
        for g in [FiniteGroup::symmetric(4), FiniteGroup::dihedral(4)] {
            let whole = Subgroup::whole(&g);
            let derived = commutator_subgroup(&g, &whole, &whole);
            let (q, _) = quotient(&g, &derived).unwrap();
            assert!(q.is_abelian());
        }
    }

    #[test]
    fn semidirect_products() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let z4 = FiniteGroup::cyclic(4);
        // Trivial action gives the direct product.
        let trivial_act = vec![(0..2).collect::<Vec<_>>(); 4];
        let g = semidirect_product_groups(&z2, &z4, &trivial_act).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        // Z3 x| Z2 with inversion is S3.
        let act = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = semidirect_product_groups(&z3, &z2, &act).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(!crate::hom::isomorphisms_between(&g, &FiniteGroup::symmetric(3)).is_empty());
        // trivial x| G = G.
        let triv = FiniteGroup::trivial();
        let act = vec![vec![0]; 2];
        let g = semidirect_product_groups(&triv, &z2, &act).unwrap();
        assert_eq!(g.order(), 2);
        // Invalid action rejected.
        let bad = vec![vec![0, 1, 2], vec![1, 2, 0]];
        assert!(semidirect_product_groups(&z3, &z2, &bad).is_err());
    }
}
