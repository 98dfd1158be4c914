//! Group-groupoids: groups of arrows and objects with structural
//! homomorphisms, where the partial composition is always derived from
//! the group operation as `b o a = b - 1_y + a`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{commutator_subgroup, quotient, Elt, FiniteGroup, Subgroup};
use crate::hom::{kernel, GroupHom};

/// Above this many composable pairs the quadruple interchange scan is
/// replaced by its exact algebraic equivalent (derived-composition
/// agreement plus kernel commutation), still checked exhaustively.
pub const INTERCHANGE_PAIR_CAP: usize = 5_000;

pub struct GroupGroupoid {
    name: String,
    arrows: Arc<FiniteGroup>,
    objects: Arc<FiniteGroup>,
    d0: GroupHom,
    d1: GroupHom,
    eps: GroupHom,
}

pub type Gpgd = Arc<GroupGroupoid>;

impl PartialEq for GroupGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.arrows == other.arrows
            && self.objects == other.objects
            && self.d0 == other.d0
            && self.d1 == other.d1
            && self.eps == other.eps
    }
}
impl Eq for GroupGroupoid {}

impl fmt::Debug for GroupGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupGroupoid({}: |G1|={}, |G0|={})",
            self.name,
            self.arrows.order(),
            self.objects.order()
        )
    }
}

impl GroupGroupoid {
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn arrows(&self) -> &Arc<FiniteGroup> {
        &self.arrows
    }
    pub fn objects(&self) -> &Arc<FiniteGroup> {
        &self.objects
    }
    pub fn d0_hom(&self) -> &GroupHom {
        &self.d0
    }
    pub fn d1_hom(&self) -> &GroupHom {
        &self.d1
    }
    pub fn eps_hom(&self) -> &GroupHom {
        &self.eps
    }
    pub fn d0(&self, a: Elt) -> Elt {
        self.d0.apply(a)
    }
    pub fn d1(&self, a: Elt) -> Elt {
        self.d1.apply(a)
    }
    /// The identity arrow `1_x`.
    pub fn eps(&self, x: Elt) -> Elt {
        self.eps.apply(x)
    }

    pub fn is_zero(&self) -> bool {
        self.arrows.order() == 1 && self.objects.order() == 1
    }

    /// All composable pairs (b, a) with d0(b) = d1(a).
    pub fn composable_pairs(&self) -> Vec<(Elt, Elt)> {
        let n = self.arrows.order();
        let mut out = Vec::new();
        for b in 0..n {
            for a in 0..n {
                if self.d0(b) == self.d1(a) {
                    out.push((b, a));
                }
            }
        }
        out
    }
}

/// Derived composition `b o a = b - 1_y + a` for `a: x -> y`, `b: y -> z`.
/// Both equal expressions are computed and must agree.
pub fn compose_arrows(g: &GroupGroupoid, b: Elt, a: Elt) -> Result<Elt> {
    let y = g.d1(a);
    if g.d0(b) != y {
        return Err(Error::NotComposable { d0_b: g.d0(b), d1_a: y });
    }
    let g1 = &g.arrows;
    let one_y = g.eps(y);
    let left = g1.add(g1.sub(b, one_y), a);
    let right = g1.add(g1.sub(a, one_y), b);
    if left != right {
        return Err(Error::Internal(format!(
            "composition formulas disagree on b={b}, a={a}: {left} != {right}"
        )));
    }
    Ok(left)
}

/// Groupoid inverse `a^{-1} = 1_x - a + 1_y`.
pub fn arrow_inverse(g: &GroupGroupoid, a: Elt) -> Elt {
    let g1 = &g.arrows;
    g1.add(g1.sub(g.eps(g.d0(a)), a), g.eps(g.d1(a)))
}

/// Validates the full internal-category structure: structural identities,
/// kernel commutation, category axioms for the derived composition,
/// groupoid inverses and the interchange law.
pub fn validate_gpgd(
    name: &str,
    arrows: &Arc<FiniteGroup>,
    objects: &Arc<FiniteGroup>,
    d0: &GroupHom,
    d1: &GroupHom,
    eps: &GroupHom,
) -> Result<Gpgd> {
    if d0.src() != arrows || d0.dst() != objects || d1.src() != arrows || d1.dst() != objects {
        return Err(Error::Mismatch("d0, d1 must be homs arrows -> objects".into()));
    }
    if eps.src() != objects || eps.dst() != arrows {
        return Err(Error::Mismatch("eps must be a hom objects -> arrows".into()));
    }
    // (i) d0 eps = d1 eps = 1.
    for x in 0..objects.order() {
        if d0.apply(eps.apply(x)) != x || d1.apply(eps.apply(x)) != x {
            return Err(Error::AxiomViolation {
                structure: "group-groupoid",
                axiom: "(i) d0 eps = d1 eps = 1",
                witness: format!("x={x}"),
            });
        }
    }
    let g = Arc::new(GroupGroupoid {
        name: name.to_string(),
        arrows: arrows.clone(),
        objects: objects.clone(),
        d0: d0.clone(),
        d1: d1.clone(),
        eps: eps.clone(),
    });
    // Elements of Ker d0 and Ker d1 commute.
    let k0 = kernel(d0);
    let k1 = kernel(d1);
    for &a in k0.members() {
        for &b in k1.members() {
            if arrows.add(a, b) != arrows.add(b, a) {
                return Err(Error::AxiomViolation {
                    structure: "group-groupoid",
                    axiom: "Ker d0 commutes with Ker d1",
                    witness: format!("a={a}, b={b}"),
                });
            }
        }
    }
    let pairs = g.composable_pairs();
    // (ii) endpoints of the derived composition, plus agreement of the two
    // composition formulas (checked inside compose_arrows).
    let mut comp = Vec::with_capacity(pairs.len());
    for &(b, a) in &pairs {
        let c = compose_arrows(&g, b, a).map_err(|e| match e {
            Error::Internal(_) => Error::AxiomViolation {
                structure: "group-groupoid",
                axiom: "b o a = b - 1_y + a = a - 1_y + b",
                witness: format!("b={b}, a={a}"),
            },
            e => e,
        })?;
        if g.d0(c) != g.d0(a) || g.d1(c) != g.d1(b) {
            return Err(Error::AxiomViolation {
                structure: "group-groupoid",
                axiom: "(ii) d0(b o a) = d0(a), d1(b o a) = d1(b)",
                witness: format!("b={b}, a={a}"),
            });
        }
        comp.push(c);
    }
    // (iv) identity laws.
    for a in 0..arrows.order() {
        if compose_arrows(&g, a, g.eps(g.d0(a)))? != a || compose_arrows(&g, g.eps(g.d1(a)), a)? != a {
            return Err(Error::AxiomViolation {
                structure: "group-groupoid",
                axiom: "(iv) unit laws",
                witness: format!("a={a}"),
            });
        }
    }
    // Groupoid inverses.
    for a in 0..arrows.order() {
        let inv = arrow_inverse(&g, a);
        if g.d0(inv) != g.d1(a)
            || g.d1(inv) != g.d0(a)
            || compose_arrows(&g, inv, a)? != g.eps(g.d0(a))
            || compose_arrows(&g, a, inv)? != g.eps(g.d1(a))
        {
            return Err(Error::AxiomViolation {
                structure: "group-groupoid",
                axiom: "groupoid inverse",
                witness: format!("a={a}"),
            });
        }
    }
    // (iii) associativity over all composable triples, via the d1 fibers.
    let n = arrows.order();
    let mut by_d1: Vec<Vec<Elt>> = vec![Vec::new(); objects.order()];
    for a in 0..n {
        by_d1[g.d1(a)].push(a);
    }
    for c in 0..n {
        for &b in &by_d1[g.d0(c)] {
            let cb = compose_arrows(&g, c, b)?;
            for &a in &by_d1[g.d0(b)] {
                if compose_arrows(&g, cb, a)? != compose_arrows(&g, c, compose_arrows(&g, b, a)?)? {
                    return Err(Error::AxiomViolation {
                        structure: "group-groupoid",
                        axiom: "(iii) associativity",
                        witness: format!("c={c}, b={b}, a={a}"),
                    });
                }
            }
        }
    }
    // Interchange law over all composable quadruples. Beyond the pair cap
    // this is exactly equivalent to the formula-agreement and kernel
    // commutation checks already done above, so those stand in for it.
    if pairs.len() <= INTERCHANGE_PAIR_CAP {
        for (i, &(b, a)) in pairs.iter().enumerate() {
            for (j, &(d, c)) in pairs.iter().enumerate() {
                let lhs = arrows.add(comp[i], comp[j]);
                let rhs = compose_arrows(&g, arrows.add(b, d), arrows.add(a, c))?;
                if lhs != rhs {
                    return Err(Error::AxiomViolation {
                        structure: "group-groupoid",
                        axiom: "interchange",
                        witness: format!("b={b}, a={a}, d={d}, c={c}"),
                    });
                }
            }
        }
    }
    Ok(g)
}

/// The discrete group-groupoid (G, G) with all structural maps the
/// identity.
pub fn discrete_gpgd(g: &Arc<FiniteGroup>) -> Gpgd {
    let id = GroupHom::identity(g);
    validate_gpgd(&format!("disc({})", g.name()), g, g, &id, &id, &id.clone(), )
        .expect("discrete group-groupoid is always valid")
}

/// The pair group-groupoid (G x G, G) with d0(x, y) = x, d1(x, y) = y.
pub fn pair_gpgd(g: &Arc<FiniteGroup>) -> Gpgd {
    let n = g.order();
    let arrows = FiniteGroup::direct_product(g, g);
    let d0 = GroupHom::new(&arrows, g, (0..n * n).map(|p| p / n).collect()).unwrap();
    let d1 = GroupHom::new(&arrows, g, (0..n * n).map(|p| p % n).collect()).unwrap();
    let eps = GroupHom::new(g, &arrows, (0..n).map(|x| x * n + x).collect()).unwrap();
    validate_gpgd(&format!("pair({})", g.name()), &arrows, g, &d0, &d1, &eps)
        .expect("pair group-groupoid is always valid")
}

/// The zero group-groupoid: one arrow, one object.
pub fn zero_gpgd() -> Gpgd {
    discrete_gpgd(&FiniteGroup::trivial())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubGroupGroupoid {
    parent: Gpgd,
    arrows: Subgroup,
    objects: Subgroup,
    normal: bool,
}

impl SubGroupGroupoid {
    /// Validates subgroup structure on both levels and closure under
    /// d0, d1, eps, arrow inverse and composition.
    pub fn new(parent: &Gpgd, arrow_members: &[Elt], object_members: &[Elt]) -> Result<SubGroupGroupoid> {
        let arrows = Subgroup::new(parent.arrows(), arrow_members)?;
        let objects = Subgroup::new(parent.objects(), object_members)?;
        for &a in arrows.members() {
            if !objects.contains(parent.d0(a)) || !objects.contains(parent.d1(a)) {
                return Err(Error::AxiomViolation {
                    structure: "subgroup-groupoid",
                    axiom: "closed under d0, d1",
                    witness: format!("a={a}"),
                });
            }
            if !arrows.contains(arrow_inverse(parent, a)) {
                return Err(Error::AxiomViolation {
                    structure: "subgroup-groupoid",
                    axiom: "closed under arrow inverse",
                    witness: format!("a={a}"),
                });
            }
        }
        for &x in objects.members() {
            if !arrows.contains(parent.eps(x)) {
                return Err(Error::AxiomViolation {
                    structure: "subgroup-groupoid",
                    axiom: "closed under eps",
                    witness: format!("x={x}"),
                });
            }
        }
        for &b in arrows.members() {
            for &a in arrows.members() {
                if parent.d0(b) == parent.d1(a) && !arrows.contains(compose_arrows(parent, b, a)?) {
                    return Err(Error::AxiomViolation {
                        structure: "subgroup-groupoid",
                        axiom: "closed under composition",
                        witness: format!("b={b}, a={a}"),
                    });
                }
            }
        }
        let normal = arrows.is_normal() && objects.is_normal();
        Ok(SubGroupGroupoid { parent: parent.clone(), arrows, objects, normal })
    }

    pub fn zero(parent: &Gpgd) -> SubGroupGroupoid {
        Self::new(parent, &[0], &[0]).expect("the zero subgroup-groupoid always exists")
    }

    pub fn whole(parent: &Gpgd) -> SubGroupGroupoid {
        let a: Vec<Elt> = (0..parent.arrows().order()).collect();
        let o: Vec<Elt> = (0..parent.objects().order()).collect();
        Self::new(parent, &a, &o).expect("the whole subgroup-groupoid always exists")
    }

    pub fn parent(&self) -> &Gpgd {
        &self.parent
    }
    pub fn arrows(&self) -> &Subgroup {
        &self.arrows
    }
    pub fn objects(&self) -> &Subgroup {
        &self.objects
    }
    pub fn is_normal(&self) -> bool {
        self.normal
    }
    pub fn is_zero(&self) -> bool {
        self.arrows.is_trivial() && self.objects.is_trivial()
    }
    pub fn is_whole(&self) -> bool {
        self.arrows.is_whole() && self.objects.is_whole()
    }

    /// Standalone group-groupoid on the subgroup members, with the
    /// embeddings back into the parent.
    pub fn materialize(&self, name: &str) -> Result<(Gpgd, Vec<Elt>, Vec<Elt>)> {
        let (g1, emb1) = self.arrows.as_group(&format!("{name}.arr"));
        let (g0, emb0) = self.objects.as_group(&format!("{name}.obj"));
        let oidx = |x: Elt| self.objects.index_of(x).unwrap();
        let aidx = |a: Elt| self.arrows.index_of(a).unwrap();
        let d0 = GroupHom::new(&g1, &g0, emb1.iter().map(|&a| oidx(self.parent.d0(a))).collect())?;
        let d1 = GroupHom::new(&g1, &g0, emb1.iter().map(|&a| oidx(self.parent.d1(a))).collect())?;
        let eps = GroupHom::new(&g0, &g1, emb0.iter().map(|&x| aidx(self.parent.eps(x))).collect())?;
        let g = validate_gpgd(name, &g1, &g0, &d0, &d1, &eps)?;
        Ok((g, emb1, emb0))
    }
}

/// Componentwise commutator subgroup-groupoid `([H1,K1], [H0,K0])`.
pub fn commutator_subgpgd(
    g: &Gpgd,
    h: &SubGroupGroupoid,
    k: &SubGroupGroupoid,
) -> Result<SubGroupGroupoid> {
    let arr = commutator_subgroup(g.arrows(), h.arrows(), k.arrows());
    let obj = commutator_subgroup(g.objects(), h.objects(), k.objects());
    SubGroupGroupoid::new(g, arr.members(), obj.members())
}

/// The derived subgroup-groupoid [G, G].
pub fn derived_subgpgd(g: &Gpgd) -> Result<SubGroupGroupoid> {
    let whole = SubGroupGroupoid::whole(g);
    commutator_subgpgd(g, &whole, &whole)
}

/// Quotient by a normal subgroup-groupoid, with the induced structural
/// maps revalidated. Well-definedness of the induced maps is checked on
/// every element and reported with witness cosets.
pub fn quotient_gpgd(g: &Gpgd, n: &SubGroupGroupoid) -> Result<Gpgd> {
    if !n.is_normal() {
        return Err(Error::Mismatch("quotient requires a normal subgroup-groupoid".into()));
    }
    let (q1, proj1) = quotient(g.arrows(), n.arrows())?;
    let (q0, proj0) = quotient(g.objects(), n.objects())?;
    let mut d0_map = vec![usize::MAX; q1.order()];
    let mut d1_map = vec![usize::MAX; q1.order()];
    for a in 0..g.arrows().order() {
        let c = proj1.apply(a);
        for (m, v) in [(&mut d0_map, proj0.apply(g.d0(a))), (&mut d1_map, proj0.apply(g.d1(a)))] {
            if m[c] == usize::MAX {
                m[c] = v;
            } else if m[c] != v {
                return Err(Error::AxiomViolation {
                    structure: "quotient group-groupoid",
                    axiom: "induced structural map well-defined",
                    witness: format!("arrow coset {c} maps to both object cosets {} and {v}", m[c]),
                });
            }
        }
    }
    let mut eps_map = vec![usize::MAX; q0.order()];
    for x in 0..g.objects().order() {
        let c = proj0.apply(x);
        let v = proj1.apply(g.eps(x));
        if eps_map[c] == usize::MAX {
            eps_map[c] = v;
        } else if eps_map[c] != v {
            return Err(Error::AxiomViolation {
                structure: "quotient group-groupoid",
                axiom: "induced eps well-defined",
                witness: format!("object coset {c}"),
            });
        }
    }
    let d0 = GroupHom::new(&q1, &q0, d0_map)?;
    let d1 = GroupHom::new(&q1, &q0, d1_map)?;
    let eps = GroupHom::new(&q0, &q1, eps_map)?;
    validate_gpgd(&format!("{}/{}", g.name(), n.arrows().order()), &q1, &q0, &d0, &d1, &eps)
}

/// G / [G, G], verified abelian.
pub fn abelianization(g: &Gpgd) -> Result<Gpgd> {
    let derived = derived_subgpgd(g)?;
    let q = quotient_gpgd(g, &derived)?;
    if !q.arrows().is_abelian() {
        return Err(Error::Internal("abelianization has a nonabelian arrow group".into()));
    }
    Ok(q)
}

#[derive(Clone, PartialEq, Eq)]
pub struct GpGdMorphism {
    pub src: Gpgd,
    pub dst: Gpgd,
    pub f1: GroupHom,
    pub f0: GroupHom,
}

impl fmt::Debug for GpGdMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GpGdMorphism(f1={:?}, f0={:?})", self.f1.map(), self.f0.map())
    }
}

impl GpGdMorphism {
    pub fn new(src: &Gpgd, dst: &Gpgd, f1: GroupHom, f0: GroupHom) -> Result<GpGdMorphism> {
        if f1.src() != src.arrows()
            || f1.dst() != dst.arrows()
            || f0.src() != src.objects()
            || f0.dst() != dst.objects()
        {
            return Err(Error::Mismatch("morphism component endpoints".into()));
        }
        for a in 0..src.arrows().order() {
            if dst.d0(f1.apply(a)) != f0.apply(src.d0(a)) || dst.d1(f1.apply(a)) != f0.apply(src.d1(a)) {
                return Err(Error::AxiomViolation {
                    structure: "group-groupoid morphism",
                    axiom: "d f1 = f0 d",
                    witness: format!("a={a}"),
                });
            }
        }
        for x in 0..src.objects().order() {
            if f1.apply(src.eps(x)) != dst.eps(f0.apply(x)) {
                return Err(Error::AxiomViolation {
                    structure: "group-groupoid morphism",
                    axiom: "f1 eps = eps f0",
                    witness: format!("x={x}"),
                });
            }
        }
        Ok(GpGdMorphism { src: src.clone(), dst: dst.clone(), f1, f0 })
    }

    /// Builds a morphism from the arrow component alone, inducing
    /// `f0(x) = d0(f1(1_x))`.
    pub fn from_f1(src: &Gpgd, dst: &Gpgd, f1: GroupHom) -> Result<GpGdMorphism> {
        let f0_map: Vec<Elt> =
            (0..src.objects().order()).map(|x| dst.d0(f1.apply(src.eps(x)))).collect();
        let f0 = GroupHom::new(src.objects(), dst.objects(), f0_map)?;
        Self::new(src, dst, f1, f0)
    }

    pub fn identity(g: &Gpgd) -> GpGdMorphism {
        GpGdMorphism {
            src: g.clone(),
            dst: g.clone(),
            f1: GroupHom::identity(g.arrows()),
            f0: GroupHom::identity(g.objects()),
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &GpGdMorphism) -> Result<GpGdMorphism> {
        Ok(GpGdMorphism {
            src: other.src.clone(),
            dst: self.dst.clone(),
            f1: self.f1.compose(&other.f1)?,
            f0: self.f0.compose(&other.f0)?,
        })
    }

    pub fn inverse(&self) -> Result<GpGdMorphism> {
        Ok(GpGdMorphism {
            src: self.dst.clone(),
            dst: self.src.clone(),
            f1: self.f1.inverse()?,
            f0: self.f0.inverse()?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.f1.is_bijective() && self.f0.is_bijective()
    }

    pub fn is_identity(&self) -> bool {
        self.f1.is_identity() && self.f0.is_identity()
    }

    pub fn apply1(&self, a: Elt) -> Elt {
        self.f1.apply(a)
    }

    pub fn apply0(&self, x: Elt) -> Elt {
        self.f0.apply(x)
    }

    /// Kernel as a subgroup-groupoid of the source.
    pub fn kernel_sub(&self) -> Result<SubGroupGroupoid> {
        let k1 = kernel(&self.f1);
        let k0 = kernel(&self.f0);
        SubGroupGroupoid::new(&self.src, k1.members(), k0.members())
    }

    /// Image as a subgroup-groupoid of the target.
    pub fn image_sub(&self) -> Result<SubGroupGroupoid> {
        let i1 = crate::hom::image(&self.f1);
        let i0 = crate::hom::image(&self.f0);
        SubGroupGroupoid::new(&self.dst, i1.members(), i0.members())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_and_pair_validate() {
        let s3 = FiniteGroup::symmetric(3);
        let z3 = FiniteGroup::cyclic(3);
        assert!(!discrete_gpgd(&s3).is_zero());
        let p = pair_gpgd(&z3);
        assert_eq!(p.arrows().order(), 9);
        assert_eq!(p.objects().order(), 3);
        assert!(zero_gpgd().is_zero());
        let p2 = pair_gpgd(&FiniteGroup::cyclic(2));
        assert_eq!((p2.arrows().order(), p2.objects().order()), (4, 2));
    }

    #[test]
    fn eps_must_be_a_section() {
        // d0 = d1 = mod 2 on Z4 with eps(x) = x is not a section:
        // d0(eps(1)) = 1 works, but eps must land on arrows with matching
        // endpoints; picking eps(1) = 1 gives d0(1) = 1, fine, so instead
        // use eps(1) = 2 which breaks axiom (i).
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let mod2 = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let eps = GroupHom::new(&z2, &z4, vec![0, 2]).unwrap();
        match validate_gpgd("bad", &z4, &z2, &mod2, &mod2, &eps) {
            Err(Error::AxiomViolation { axiom, .. }) => assert!(axiom.starts_with("(i)")),
            other => panic!("expected axiom (i) failure, got {other:?}"),
        }
    }

    #[test]
    fn pair_composition_formula() {
        let z3 = FiniteGroup::cyclic(3);
        let p = pair_gpgd(&z3);
        let idx = |x: Elt, y: Elt| x * 3 + y;
        // (y,z) o (x,y) = (x,z)
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(compose_arrows(&p, idx(y, z), idx(x, y)).unwrap(), idx(x, z));
                }
                assert_eq!(arrow_inverse(&p, idx(x, y)), idx(y, x));
            }
        }
        // Identity law.
        let b = idx(1, 2);
        assert_eq!(compose_arrows(&p, b, p.eps(p.d0(b))).unwrap(), b);
        // Non-composable pair rejected.
        assert!(compose_arrows(&p, idx(0, 1), idx(0, 1)).is_err());
    }

    #[test]
    fn interchange_holds_on_catalog() {
        for g in [
            zero_gpgd(),
            discrete_gpgd(&FiniteGroup::symmetric(3)),
            pair_gpgd(&FiniteGroup::cyclic(3)),
        ] {
            // Re-run the validator; it includes the quadruple scan at this
            // scale.
            assert!(validate_gpgd(
                g.name(),
                g.arrows(),
                g.objects(),
                g.d0_hom(),
                g.d1_hom(),
                g.eps_hom()
            )
            .is_ok());
        }
    }

    #[test]
    fn subgroupoids_and_quotients() {
        let s3 = FiniteGroup::symmetric(3);
        let p = pair_gpgd(&s3);
        let derived = derived_subgpgd(&p).unwrap();
        assert!(derived.is_normal());
        assert_eq!(derived.arrows().order(), 9);
        assert_eq!(derived.objects().order(), 3);

        let q = quotient_gpgd(&p, &derived).unwrap();
        assert_eq!(q.arrows().order(), 4);
        assert_eq!(q.objects().order(), 2);
        assert!(q.arrows().is_abelian());

        // Quotient by the zero subgroup-groupoid is the identity.
        let z = SubGroupGroupoid::zero(&p);
        let q = quotient_gpgd(&p, &z).unwrap();
        assert_eq!(q.arrows().order(), p.arrows().order());

        let ab = abelianization(&p).unwrap();
        assert_eq!(ab.arrows().order(), 4);
    }

    #[test]
    fn materialized_sub_revalidates() {
        let s3 = FiniteGroup::symmetric(3);
        let p = pair_gpgd(&s3);
        let derived = derived_subgpgd(&p).unwrap();
        let (m, emb1, emb0) = derived.materialize("pairA3").unwrap();
        assert_eq!(m.arrows().order(), 9);
        assert_eq!(emb1.len(), 9);
        assert_eq!(emb0.len(), 3);
    }

    #[test]
    fn morphism_validation() {
        let z3 = FiniteGroup::cyclic(3);
        let p = pair_gpgd(&z3);
        let id = GpGdMorphism::identity(&p);
        assert!(id.is_identity());
        // Inversion on both levels is an automorphism of the pair gpgd.
        let inv1 = GroupHom::new(p.arrows(), p.arrows(), (0..9).map(|a| p.arrows().neg(a)).collect()).unwrap();
        let m = GpGdMorphism::from_f1(&p, &p, inv1).unwrap();
        assert!(m.is_bijective());
        assert_eq!(m.f0.map(), &[0, 2, 1]);
    }
}
