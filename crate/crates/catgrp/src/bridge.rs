//! The equivalence between group-groupoids and crossed modules:
//! a group-groupoid yields the crossed module (Ker d0, objects, d1) with
//! the conjugation action; a crossed module yields the group-groupoid on
//! the semidirect product. Both roundtrips are verified by explicit
//! isomorphisms, and the two actor constructions are identified.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gpgd::{compose_arrows, validate_gpgd, GpGdMorphism, Gpgd};
use crate::group::{semidirect_product_groups, Elt};
use crate::hom::{kernel, GroupHom};
use crate::nat::{actor_gpgd, horizontal, Actor, NatTransf};
use crate::xmod::{
    actor_xmod, regular_derivations, validate_xmod, xmod_aut_group, CrossedModule, Derivation,
    XModMorphism,
};

/// A crossed module extracted from a group-groupoid, together with the
/// embedding of its top group back into the arrow group.
pub struct GpgdToXMod {
    pub xmod: Arc<CrossedModule>,
    /// Arrow of the source group-groupoid for each top-group element.
    pub top_to_arrow: Vec<Elt>,
}

impl GpgdToXMod {
    /// Top-group index of an arrow in Ker d0.
    pub fn arrow_to_top(&self, a: Elt) -> Result<Elt> {
        self.top_to_arrow
            .iter()
            .position(|&b| b == a)
            .ok_or_else(|| Error::Internal(format!("arrow {a} is not in Ker d0")))
    }
}

/// (Ker d0, G0, d1 restricted) with G0 acting by conjugation with
/// identity arrows.
pub fn phi_to_xmod(g: &Gpgd) -> Result<GpgdToXMod> {
    let k = kernel(g.d0_hom());
    let (top, emb) = k.as_group(&format!("Kerd0({})", g.name()));
    let alpha = GroupHom::new(&top, g.objects(), emb.iter().map(|&a| g.d1(a)).collect())
        .map_err(|e| Error::Internal(format!("d1 restricted to Ker d0 is not a homomorphism: {e}")))?;
    let g1 = g.arrows();
    let mut action = vec![vec![0; top.order()]; g.objects().order()];
    for b in 0..g.objects().order() {
        let one = g.eps(b);
        for (i, &a) in emb.iter().enumerate() {
            action[b][i] = k
                .index_of(g1.conj(one, a))
                .ok_or_else(|| Error::Internal("Ker d0 is not closed under conjugation".into()))?;
        }
    }
    let xmod = validate_xmod(&format!("phi({})", g.name()), &top, g.objects(), &alpha, action)?;
    Ok(GpgdToXMod { xmod, top_to_arrow: emb })
}

/// The group-groupoid on A x| B with d0(a, b) = b, d1(a, b) = alpha(a) + b
/// and eps(b) = (0, b). The derived composition is checked to reproduce
/// (a', alpha(a) + b) o (a, b) = (a' + a, b) on every composable pair.
pub fn psi_to_gpgd(x: &Arc<CrossedModule>) -> Result<Gpgd> {
    let a_ord = x.top().order();
    let b_ord = x.base().order();
    let arrows = semidirect_product_groups(x.top(), x.base(), x.action())?;
    let idx = |a: Elt, b: Elt| a * b_ord + b;
    let d0 = GroupHom::new(&arrows, x.base(), (0..a_ord * b_ord).map(|p| p % b_ord).collect())?;
    let d1 = GroupHom::new(
        &arrows,
        x.base(),
        (0..a_ord * b_ord)
            .map(|p| x.base().add(x.alpha().apply(p / b_ord), p % b_ord))
            .collect(),
    )?;
    let eps = GroupHom::new(x.base(), &arrows, (0..b_ord).map(|b| idx(0, b)).collect())?;
    let g = validate_gpgd(&format!("psi({})", x.name()), &arrows, x.base(), &d0, &d1, &eps)?;
    for a in 0..a_ord {
        for b in 0..b_ord {
            for a1 in 0..a_ord {
                let lower = idx(a, b);
                let upper = idx(a1, g.d1(lower));
                if compose_arrows(&g, upper, lower)? != idx(x.top().add(a1, a), b) {
                    return Err(Error::Internal(format!(
                        "semidirect composition is not (a' + a, b) at a={a}, b={b}, a'={a1}"
                    )));
                }
            }
        }
    }
    Ok(g)
}

/// The canonical isomorphism G -> psi(phi(G)), a |-> (a - 1_{d0 a}, d0 a).
pub fn roundtrip_gpgd(g: &Gpgd) -> Result<GpGdMorphism> {
    let bs = phi_to_xmod(g)?;
    let back = psi_to_gpgd(&bs.xmod)?;
    let g1 = g.arrows();
    let b_ord = g.objects().order();
    let mut map = Vec::with_capacity(g1.order());
    for a in 0..g1.order() {
        let b = g.d0(a);
        let k = bs.arrow_to_top(g1.sub(a, g.eps(b)))?;
        map.push(k * b_ord + b);
    }
    let f1 = GroupHom::new(g1, back.arrows(), map)
        .map_err(|e| Error::Internal(format!("roundtrip arrow map is not a homomorphism: {e}")))?;
    let m = GpGdMorphism::from_f1(g, &back, f1)
        .map_err(|e| Error::Internal(format!("roundtrip map is not a morphism: {e}")))?;
    if !m.is_bijective() {
        return Err(Error::Internal("roundtrip map is not bijective".into()));
    }
    Ok(m)
}

/// The canonical isomorphism phi(psi(X)) -> X: Ker d0 of psi(X) consists
/// of the pairs (a, 0), sent to a; the bases are identical.
pub fn roundtrip_xmod(x: &Arc<CrossedModule>) -> Result<XModMorphism> {
    let g = psi_to_gpgd(x)?;
    let bs = phi_to_xmod(&g)?;
    let b_ord = x.base().order();
    let mut f_a_map = Vec::with_capacity(bs.xmod.top().order());
    for &p in &bs.top_to_arrow {
        if p % b_ord != 0 {
            return Err(Error::Internal("Ker d0 of psi(X) contains a pair with nonzero base part".into()));
        }
        f_a_map.push(p / b_ord);
    }
    let f_a = GroupHom::new(bs.xmod.top(), x.top(), f_a_map)
        .map_err(|e| Error::Internal(format!("roundtrip top map is not a homomorphism: {e}")))?;
    let f_b = GroupHom::identity(x.base());
    let m = XModMorphism::new(&bs.xmod, x, f_a, f_b)
        .map_err(|e| Error::Internal(format!("roundtrip is not a crossed module morphism: {e}")))?;
    if !m.is_bijective() {
        return Err(Error::Internal("roundtrip crossed module map is not bijective".into()));
    }
    Ok(m)
}

/// Witness for the identification of the two actor constructions on a
/// group-groupoid G with crossed module X = phi(G): the crossed module
/// (Ker w_d0, Aut(G), w_d1) extracted from the actor of G is isomorphic
/// to the actor crossed module (RD(X), Aut(X), Delta) of X.
pub struct IsoActWitness {
    /// phi of the actor group-groupoid.
    pub left: Arc<CrossedModule>,
    /// Actor crossed module of phi(G).
    pub right: Arc<CrossedModule>,
    /// The isomorphism (xi, lambda): left -> right.
    pub morphism: XModMorphism,
}

pub fn verify_isoact(g: &Gpgd, cap: usize) -> Result<IsoActWitness> {
    let actor = actor_gpgd(g, cap)?;
    let x = phi_to_xmod(g)?;
    let left = phi_to_xmod(&actor.gpgd)?;
    let right = actor_xmod(&x.xmod, cap)?;
    let (_, rd_elems) = regular_derivations(&x.xmod)?;
    let (_, aut_elems) = xmod_aut_group(&x.xmod, cap)?;

    // xi: a transformation eta: 1 => f in Ker w_d0 becomes the derivation
    // d_eta(b) = eta(b) - 1_b, regular with inverse built from eta^{-h}.
    let mut xi_map = Vec::with_capacity(left.xmod.top().order());
    for &w in &left.top_to_arrow {
        let eta = &actor.transfs[w];
        let d_map = (0..g.objects().order())
            .map(|b| x.arrow_to_top(g.arrows().sub(eta.apply(b), g.eps(b))))
            .collect::<Result<Vec<_>>>()?;
        let d = Derivation::new(&x.xmod, d_map)
            .map_err(|e| Error::Internal(format!("xi(eta) is not a derivation: {e}")))?;
        xi_map.push(
            rd_elems
                .iter()
                .position(|e| e.map() == d.map())
                .ok_or_else(|| Error::Internal("xi(eta) is not a regular derivation".into()))?,
        );
    }
    let xi = GroupHom::new(left.xmod.top(), right.top(), xi_map)
        .map_err(|e| Error::Internal(format!("xi is not a homomorphism: {e}")))?;

    // lambda: a group-groupoid automorphism restricts to an automorphism
    // of the crossed module.
    let mut lambda_map = Vec::with_capacity(actor.auts.len());
    for aut in &actor.auts {
        let f_a_map = x
            .top_to_arrow
            .iter()
            .map(|&a| x.arrow_to_top(aut.apply1(a)))
            .collect::<Result<Vec<_>>>()?;
        lambda_map.push(
            aut_elems
                .iter()
                .position(|m| m.f_a.map() == f_a_map && m.f_b.map() == aut.f0.map())
                .ok_or_else(|| {
                    Error::Internal("lambda(f) is not a crossed module automorphism".into())
                })?,
        );
    }
    let lambda = GroupHom::new(left.xmod.base(), right.base(), lambda_map)
        .map_err(|e| Error::Internal(format!("lambda is not a homomorphism: {e}")))?;

    // Morphism validation covers the boundary square lambda w_d1 = Delta xi
    // and equivariance; bijectivity on both levels makes it an isomorphism.
    let morphism = XModMorphism::new(&left.xmod, &right, xi, lambda)
        .map_err(|e| Error::Internal(format!("(xi, lambda) is not a morphism: {e}")))?;
    if !morphism.is_bijective() {
        return Err(Error::Internal("(xi, lambda) is not bijective".into()));
    }

    // Cross-check the inverse of xi: a regular derivation d lifts to the
    // transformation eta_d(b) = d(b) + 1_b, and xi sends it back to d.
    for (i, d) in rd_elems.iter().enumerate() {
        let comp: Vec<Elt> = (0..g.objects().order())
            .map(|b| g.arrows().add(x.top_to_arrow[d.apply(b)], g.eps(b)))
            .collect();
        let pos = left
            .top_to_arrow
            .iter()
            .position(|&w| actor.transfs[w].comp() == comp)
            .ok_or_else(|| Error::Internal("eta_d is not a transformation out of the identity".into()))?;
        if morphism.f_a.apply(pos) != i {
            return Err(Error::Internal(format!("xi(eta_d) != d for derivation {i}")));
        }
    }

    // The action on the left is horizontal conjugation f . eta =
    // 1_f o_h eta o_h 1_{f^{-1}}; recheck it agrees with the conjugation
    // action packaged by phi of the actor.
    for (j, aut) in actor.auts.iter().enumerate() {
        let one_f = NatTransf::identity_on(aut);
        let one_f_inv = NatTransf::identity_on(&aut.inverse()?);
        for (i, &w) in left.top_to_arrow.iter().enumerate() {
            let conj = horizontal(&horizontal(&one_f, &actor.transfs[w])?, &one_f_inv)?;
            let got = left.xmod.act(j, i);
            if actor.transfs[left.top_to_arrow[got]] != conj {
                return Err(Error::Internal(format!(
                    "horizontal conjugation disagrees with the packaged action at f={j}, eta={i}"
                )));
            }
        }
    }

    Ok(IsoActWitness { left: left.xmod, right, morphism })
}

/// Corollary check: the actor crossed module of phi(G) is isomorphic to
/// phi of the actor group-groupoid of G.
pub fn actor_compatibility(g: &Gpgd, cap: usize) -> Result<bool> {
    Ok(verify_isoact(g, cap).is_ok())
}

/// Convenience: the actor of a crossed module computed through the
/// group-groupoid side, for cross-checking against `actor_xmod`.
pub fn actor_xmod_via_gpgd(x: &Arc<CrossedModule>, cap: usize) -> Result<(Arc<CrossedModule>, Actor)> {
    let g = psi_to_gpgd(x)?;
    let actor = actor_gpgd(&g, cap)?;
    let bs = phi_to_xmod(&actor.gpgd)?;
    Ok((bs.xmod, actor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gpgd::{discrete_gpgd, pair_gpgd, zero_gpgd};
    use crate::group::{FiniteGroup, Subgroup};
    use crate::xmod::xmod_from_normal_inclusion;

    fn z2_in_z4() -> Arc<CrossedModule> {
        let z4 = FiniteGroup::cyclic(4);
        let n = Subgroup::new(&z4, &[0, 2]).unwrap();
        xmod_from_normal_inclusion(&z4, &n).unwrap()
    }

    fn z3_id() -> Arc<CrossedModule> {
        let z3 = FiniteGroup::cyclic(3);
        let action = vec![(0..3).collect::<Vec<_>>(); 3];
        validate_xmod("z3id", &z3, &z3, &GroupHom::identity(&z3), action).unwrap()
    }

    #[test]
    fn phi_of_pair_gpgd() {
        // Ker d0 of pair(G) is {(0, y)} = G, alpha = d1 is the identity.
        let s3 = FiniteGroup::symmetric(3);
        let bs = phi_to_xmod(&pair_gpgd(&s3)).unwrap();
        assert_eq!(bs.xmod.top().order(), 6);
        assert!(bs.xmod.alpha().is_bijective());

        // Ker d0 of disc(G) is trivial.
        let bs = phi_to_xmod(&discrete_gpgd(&s3)).unwrap();
        assert_eq!(bs.xmod.top().order(), 1);
    }

    #[test]
    fn psi_of_small_xmods() {
        let g = psi_to_gpgd(&z2_in_z4()).unwrap();
        assert_eq!(g.arrows().order(), 8);
        assert_eq!(g.objects().order(), 4);
        let g = psi_to_gpgd(&z3_id()).unwrap();
        assert_eq!(g.arrows().order(), 9);
        assert_eq!(g.objects().order(), 3);
    }

    #[test]
    fn roundtrips_are_isomorphisms() {
        for g in [
            zero_gpgd(),
            discrete_gpgd(&FiniteGroup::cyclic(3)),
            discrete_gpgd(&FiniteGroup::symmetric(3)),
            pair_gpgd(&FiniteGroup::cyclic(3)),
            pair_gpgd(&FiniteGroup::symmetric(3)),
        ] {
            roundtrip_gpgd(&g).unwrap();
        }
        for x in [z2_in_z4(), z3_id(), crate::xmod::trivial_xmod()] {
            roundtrip_xmod(&x).unwrap();
        }
    }

    #[test]
    fn isoact_on_catalog() {
        for g in [
            zero_gpgd(),
            discrete_gpgd(&FiniteGroup::cyclic(3)),
            discrete_gpgd(&FiniteGroup::symmetric(3)),
            pair_gpgd(&FiniteGroup::cyclic(2)),
            pair_gpgd(&FiniteGroup::cyclic(3)),
            psi_to_gpgd(&z2_in_z4()).unwrap(),
            psi_to_gpgd(&z3_id()).unwrap(),
        ] {
            verify_isoact(&g, 64).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        }
    }

    #[test]
    fn actor_through_both_sides() {
        // Actor of (Z2 -> Z4) directly and through the semidirect side.
        let x = z2_in_z4();
        let direct = actor_xmod(&x, 64).unwrap();
        let (via, _) = actor_xmod_via_gpgd(&x, 64).unwrap();
        assert_eq!(direct.top().order(), via.top().order());
        assert_eq!(direct.base().order(), via.base().order());
    }
}
