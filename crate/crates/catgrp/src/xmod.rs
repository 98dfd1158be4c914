//! Crossed modules over finite groups: validation, derivations, the
//! Whitehead monoid, the Whitehead group of regular derivations and the
//! actor crossed module.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{group_from_elements, Elt, FiniteGroup, Subgroup};
use crate::hom::{automorphism_group, minimal_generating_set, GroupHom};

/// How many candidate maps a derivation enumeration may touch before it
/// refuses. `|A| ^ (#generators of B)` must stay below this.
pub const DERIVATION_SEARCH_CAP: usize = 1 << 24;

#[derive(Clone, PartialEq, Eq)]
pub struct CrossedModule {
    name: String,
    top: Arc<FiniteGroup>,
    base: Arc<FiniteGroup>,
    alpha: GroupHom,
    /// `action[b][a]` is the index of `b . a` in the top group.
    action: Vec<Vec<Elt>>,
}

impl fmt::Debug for CrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CrossedModule({}: {} -> {})",
            self.name,
            self.top.name(),
            self.base.name()
        )
    }
}

impl CrossedModule {
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn top(&self) -> &Arc<FiniteGroup> {
        &self.top
    }
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }
    pub fn alpha(&self) -> &GroupHom {
        &self.alpha
    }
    pub fn action(&self) -> &[Vec<Elt>] {
        &self.action
    }
    pub fn act(&self, b: Elt, a: Elt) -> Elt {
        self.action[b][a]
    }
    pub fn is_trivial(&self) -> bool {
        self.top.order() == 1 && self.base.order() == 1
    }
}

/// Validates the action and the crossed module axioms
/// CM1: `alpha(b.a) = b + alpha(a) - b` and CM2: `alpha(a).a1 = a + a1 - a`.
pub fn validate_xmod(
    name: &str,
    top: &Arc<FiniteGroup>,
    base: &Arc<FiniteGroup>,
    alpha: &GroupHom,
    action: Vec<Vec<Elt>>,
) -> Result<Arc<CrossedModule>> {
    if alpha.src() != top || alpha.dst() != base {
        return Err(Error::Mismatch("alpha must be a hom top -> base".into()));
    }
    crate::group::validate_action_by_automorphisms(top, base, &action)?;
    for b in 0..base.order() {
        for a in 0..top.order() {
            if alpha.apply(action[b][a]) != base.conj(b, alpha.apply(a)) {
                return Err(Error::AxiomViolation {
                    structure: "crossed module",
                    axiom: "CM1",
                    witness: format!("b={b}, a={a}"),
                });
            }
        }
    }
    for a in 0..top.order() {
        for a1 in 0..top.order() {
            if action[alpha.apply(a)][a1] != top.conj(a, a1) {
                return Err(Error::AxiomViolation {
                    structure: "crossed module",
                    axiom: "CM2",
                    witness: format!("a={a}, a1={a1}"),
                });
            }
        }
    }
    Ok(Arc::new(CrossedModule {
        name: name.to_string(),
        top: top.clone(),
        base: base.clone(),
        alpha: alpha.clone(),
        action,
    }))
}

/// The inclusion crossed module of a normal subgroup: top is N as a
/// standalone group, alpha the inclusion, action conjugation.
pub fn xmod_from_normal_inclusion(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
) -> Result<Arc<CrossedModule>> {
    if let Some((by, member)) = n.normality_witness() {
        return Err(Error::NotNormal { by, member, conjugate: g.conj(by, member) });
    }
    let (top, embed) = n.as_group(&format!("{}<={}", n.order(), g.name()));
    let alpha = GroupHom::new(&top, g, embed.clone())?;
    let action: Vec<Vec<Elt>> = (0..g.order())
        .map(|b| {
            (0..top.order())
                .map(|a| n.index_of(g.conj(b, embed[a])).expect("normal closure"))
                .collect()
        })
        .collect();
    validate_xmod(&format!("inc({},{})", g.name(), n.order()), &top, g, &alpha, action)
}

/// The trivial crossed module on the trivial group.
pub fn trivial_xmod() -> Arc<CrossedModule> {
    let t = FiniteGroup::trivial();
    validate_xmod("0", &t, &t, &GroupHom::identity(&t), vec![vec![0]]).unwrap()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    parent: Arc<CrossedModule>,
    map: Vec<Elt>,
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation({:?})", self.map)
    }
}

impl Derivation {
    /// Checks `d(b + b1) = d(b) + b . d(b1)` on all pairs.
    pub fn new(parent: &Arc<CrossedModule>, map: Vec<Elt>) -> Result<Derivation> {
        if map.len() != parent.base.order() {
            return Err(Error::Mismatch("derivation map must cover the base group".into()));
        }
        for b in 0..parent.base.order() {
            for b1 in 0..parent.base.order() {
                let lhs = map[parent.base.add(b, b1)];
                let rhs = parent.top.add(map[b], parent.act(b, map[b1]));
                if lhs != rhs {
                    return Err(Error::AxiomViolation {
                        structure: "derivation",
                        axiom: "d(b+b1) = d(b) + b.d(b1)",
                        witness: format!("b={b}, b1={b1}"),
                    });
                }
            }
        }
        Ok(Derivation { parent: parent.clone(), map })
    }

    pub fn zero(parent: &Arc<CrossedModule>) -> Derivation {
        Derivation { parent: parent.clone(), map: vec![0; parent.base.order()] }
    }

    pub fn parent(&self) -> &Arc<CrossedModule> {
        &self.parent
    }

    pub fn map(&self) -> &[Elt] {
        &self.map
    }

    pub fn apply(&self, b: Elt) -> Elt {
        self.map[b]
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&v| v == 0)
    }
}

/// All derivations in canonical order (lexicographic on the maps, which
/// puts the zero derivation first). Enumerated by extending images over a
/// generating set of the base, with the full law re-verified on every
/// candidate.
pub fn derivations(x: &Arc<CrossedModule>) -> Result<Vec<Derivation>> {
    let base = &x.base;
    let top = &x.top;
    let gens = minimal_generating_set(base);
    let budget = top.order().checked_pow(gens.len() as u32);
    if budget.map_or(true, |b| b > DERIVATION_SEARCH_CAP) {
        return Err(Error::CapExceeded {
            what: "derivation enumeration",
            needed: budget.unwrap_or(usize::MAX),
            cap: DERIVATION_SEARCH_CAP,
        });
    }
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(map) = close_derivation(x, &gens, &images) {
            if let Ok(d) = Derivation::new(x, map) {
                out.push(d);
            }
        }
        // odometer over generator images
        let mut i = 0;
        loop {
            if i == gens.len() {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                out.dedup();
                debug_assert!(out[0].is_zero());
                return Ok(out);
            }
            images[i] += 1;
            if images[i] < top.order() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

/// Propagates generator images across the base group using
/// `d(b + g) = d(b) + b . d(g)`; None on conflict.
fn close_derivation(x: &CrossedModule, gens: &[Elt], images: &[Elt]) -> Option<Vec<Elt>> {
    let n = x.base.order();
    let mut map: Vec<Option<Elt>> = vec![None; n];
    map[0] = Some(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let b = queue[head];
        head += 1;
        let db = map[b].unwrap();
        for (g, &dg) in gens.iter().zip(images) {
            let b1 = x.base.add(b, *g);
            let v = x.top.add(db, x.act(b, dg));
            match map[b1] {
                Some(old) if old != v => return None,
                Some(_) => {}
                None => {
                    map[b1] = Some(v);
                    queue.push(b1);
                }
            }
        }
    }
    map.into_iter().collect()
}

/// Brute-force oracle: every map base -> top, law checked directly.
/// Refuses when `|A|^|B|` exceeds the given bound.
pub fn derivations_brute_force(x: &Arc<CrossedModule>, bound: usize) -> Result<Vec<Derivation>> {
    let (na, nb) = (x.top.order(), x.base.order());
    let total = na.checked_pow(nb as u32);
    if total.map_or(true, |t| t > bound) {
        return Err(Error::CapExceeded {
            what: "brute-force derivation scan",
            needed: total.unwrap_or(usize::MAX),
            cap: bound,
        });
    }
    let mut out = Vec::new();
    let mut map = vec![0; nb];
    loop {
        if let Ok(d) = Derivation::new(x, map.clone()) {
            out.push(d);
        }
        let mut i = 0;
        loop {
            if i == nb {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                return Ok(out);
            }
            map[i] += 1;
            if map[i] < na {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// The endomorphisms `theta_d(a) = d(alpha(a)) + a` and
/// `sigma_d(b) = alpha(d(b)) + b`, validated, plus the recorded fact that
/// the pair is a crossed module morphism X -> X.
pub fn theta_sigma(d: &Derivation) -> Result<(GroupHom, GroupHom)> {
    let x = &d.parent;
    let theta_map: Vec<Elt> =
        (0..x.top.order()).map(|a| x.top.add(d.apply(x.alpha.apply(a)), a)).collect();
    let sigma_map: Vec<Elt> =
        (0..x.base.order()).map(|b| x.base.add(x.alpha.apply(d.apply(b)), b)).collect();
    let theta = GroupHom::new(&x.top, &x.top, theta_map)
        .map_err(|e| Error::Internal(format!("theta_d is not an endomorphism: {e}")))?;
    let sigma = GroupHom::new(&x.base, &x.base, sigma_map)
        .map_err(|e| Error::Internal(format!("sigma_d is not an endomorphism: {e}")))?;
    verify_xmod_morphism_laws(x, x, &theta, &sigma)
        .map_err(|e| Error::Internal(format!("(theta_d, sigma_d) is not an xmod morphism: {e}")))?;
    Ok((theta, sigma))
}

fn verify_xmod_morphism_laws(
    src: &CrossedModule,
    dst: &CrossedModule,
    f_a: &GroupHom,
    f_b: &GroupHom,
) -> Result<()> {
    for a in 0..src.top.order() {
        if f_b.apply(src.alpha.apply(a)) != dst.alpha.apply(f_a.apply(a)) {
            return Err(Error::AxiomViolation {
                structure: "xmod morphism",
                axiom: "fB alpha = alpha' fA",
                witness: format!("a={a}"),
            });
        }
    }
    for b in 0..src.base.order() {
        for a in 0..src.top.order() {
            if f_a.apply(src.act(b, a)) != dst.act(f_b.apply(b), f_a.apply(a)) {
                return Err(Error::AxiomViolation {
                    structure: "xmod morphism",
                    axiom: "fA(b.a) = fB(b).fA(a)",
                    witness: format!("b={b}, a={a}"),
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XModMorphism {
    pub src: Arc<CrossedModule>,
    pub dst: Arc<CrossedModule>,
    pub f_a: GroupHom,
    pub f_b: GroupHom,
}

impl XModMorphism {
    pub fn new(
        src: &Arc<CrossedModule>,
        dst: &Arc<CrossedModule>,
        f_a: GroupHom,
        f_b: GroupHom,
    ) -> Result<XModMorphism> {
        if f_a.src() != src.top() || f_a.dst() != dst.top() || f_b.src() != src.base() || f_b.dst() != dst.base() {
            return Err(Error::Mismatch("xmod morphism component endpoints".into()));
        }
        verify_xmod_morphism_laws(src, dst, &f_a, &f_b)?;
        Ok(XModMorphism { src: src.clone(), dst: dst.clone(), f_a, f_b })
    }

    pub fn is_bijective(&self) -> bool {
        self.f_a.is_bijective() && self.f_b.is_bijective()
    }

    pub fn is_identity(&self) -> bool {
        self.f_a.is_identity() && self.f_b.is_identity()
    }
}

/// Whitehead multiplication `(d1 o d2)(b) = d1(sigma_{d2}(b)) + d2(b)`.
/// The equivalent formula `theta_{d1}(d2(b)) + d1(b)` is computed as a
/// cross-check.
pub fn whitehead_mul(d1: &Derivation, d2: &Derivation) -> Result<Derivation> {
    if d1.parent != d2.parent {
        return Err(Error::Mismatch("derivations of different crossed modules".into()));
    }
    let x = &d1.parent;
    let (theta1, _) = theta_sigma(d1)?;
    let (_, sigma2) = theta_sigma(d2)?;
    let map: Vec<Elt> = (0..x.base.order())
        .map(|b| x.top.add(d1.apply(sigma2.apply(b)), d2.apply(b)))
        .collect();
    for b in 0..x.base.order() {
        let alt = x.top.add(theta1.apply(d2.apply(b)), d1.apply(b));
        if alt != map[b] {
            return Err(Error::Internal(format!(
                "Whitehead product formulas disagree at b={b}"
            )));
        }
    }
    Derivation::new(x, map).map_err(|e| Error::Internal(format!("Whitehead product is not a derivation: {e}")))
}

/// The Whitehead group RD(B, A): unit group of the derivation monoid,
/// materialized as a Cayley table (zero derivation at index 0).
/// Regularity is decided three ways (two-sided unit, theta bijective,
/// sigma bijective); any disagreement is an internal error.
pub fn regular_derivations(
    x: &Arc<CrossedModule>,
) -> Result<(Arc<FiniteGroup>, Vec<Derivation>)> {
    let ders = derivations(x)?;
    regular_derivations_of(x, &ders)
}

pub fn regular_derivations_of(
    x: &Arc<CrossedModule>,
    ders: &[Derivation],
) -> Result<(Arc<FiniteGroup>, Vec<Derivation>)> {
    let k = ders.len();
    let mut product = vec![vec![0usize; k]; k];
    let find = |d: &Derivation| -> Result<usize> {
        ders.iter()
            .position(|e| e.map == d.map)
            .ok_or_else(|| Error::Internal("derivation monoid is not closed".into()))
    };
    for i in 0..k {
        for j in 0..k {
            product[i][j] = find(&whitehead_mul(&ders[i], &ders[j])?)?;
        }
    }
    let zero = find(&Derivation::zero(x))?;
    let mut regular = Vec::new();
    for (i, d) in ders.iter().enumerate() {
        let unit = (0..k).any(|j| product[i][j] == zero && product[j][i] == zero);
        let (theta, sigma) = theta_sigma(d)?;
        let tb = theta.is_bijective();
        let sb = sigma.is_bijective();
        if unit != tb || unit != sb {
            return Err(Error::Internal(format!(
                "regularity criteria disagree for derivation {i}: unit={unit}, theta={tb}, sigma={sb}"
            )));
        }
        if unit {
            regular.push(d.clone());
        }
    }
    let zero_d = Derivation::zero(x);
    let maps: Vec<Vec<Elt>> = regular.iter().map(|d| d.map.clone()).collect();
    let (table, order) = group_from_elements(
        &format!("RD({})", x.name),
        maps,
        &zero_d.map,
        |a, b| {
            let da = Derivation { parent: x.clone(), map: a.clone() };
            let db = Derivation { parent: x.clone(), map: b.clone() };
            whitehead_mul(&da, &db).expect("closure of units").map
        },
    )?;
    let elems = order.into_iter().map(|m| Derivation { parent: x.clone(), map: m }).collect();
    Ok((table, elems))
}

/// All invertible crossed module endomorphisms of X, as a group under
/// composition (identity at index 0), by filtering Aut(A) x Aut(B) pairs
/// through the morphism laws.
pub fn xmod_aut_group(
    x: &Arc<CrossedModule>,
    cap: usize,
) -> Result<(Arc<FiniteGroup>, Vec<XModMorphism>)> {
    let (_, auts_a) = automorphism_group(&x.top, cap)?;
    let (_, auts_b) = automorphism_group(&x.base, cap)?;
    let mut pairs: Vec<(Vec<Elt>, Vec<Elt>)> = Vec::new();
    for fa in &auts_a {
        for fb in &auts_b {
            if verify_xmod_morphism_laws(x, x, fa, fb).is_ok() {
                pairs.push((fa.map().to_vec(), fb.map().to_vec()));
            }
        }
    }
    let id = (
        (0..x.top.order()).collect::<Vec<Elt>>(),
        (0..x.base.order()).collect::<Vec<Elt>>(),
    );
    let (table, order) = group_from_elements(
        &format!("Aut({})", x.name),
        pairs,
        &id,
        |p, q| {
            (
                q.0.iter().map(|&v| p.0[v]).collect(),
                q.1.iter().map(|&v| p.1[v]).collect(),
            )
        },
    )?;
    let morphisms = order
        .into_iter()
        .map(|(ma, mb)| {
            XModMorphism::new(
                x,
                x,
                GroupHom::new(&x.top, &x.top, ma)?,
                GroupHom::new(&x.base, &x.base, mb)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((table, morphisms))
}

/// Norrie's actor crossed module `(RD(B,A), Aut(X), Delta)` with
/// `Delta(d) = <theta_d, sigma_d>` and action `<f,g>.d = f d g^{-1}`.
pub fn actor_xmod(x: &Arc<CrossedModule>, cap: usize) -> Result<Arc<CrossedModule>> {
    let (rd_group, rd_elems) = regular_derivations(x)?;
    let (aut_group, aut_elems) = xmod_aut_group(x, cap)?;
    let mut delta_map = vec![0; rd_elems.len()];
    for (i, d) in rd_elems.iter().enumerate() {
        let (theta, sigma) = theta_sigma(d)?;
        delta_map[i] = aut_elems
            .iter()
            .position(|m| m.f_a == theta && m.f_b == sigma)
            .ok_or_else(|| Error::Internal("Delta(d) is not an automorphism of X".into()))?;
    }
    let delta = GroupHom::new(&rd_group, &aut_group, delta_map)
        .map_err(|e| Error::Internal(format!("Delta is not a homomorphism: {e}")))?;
    let mut action = vec![vec![0; rd_elems.len()]; aut_elems.len()];
    for (j, m) in aut_elems.iter().enumerate() {
        let g_inv = m.f_b.inverse()?;
        for (i, d) in rd_elems.iter().enumerate() {
            let map: Vec<Elt> =
                (0..x.base.order()).map(|b| m.f_a.apply(d.apply(g_inv.apply(b)))).collect();
            action[j][i] = rd_elems
                .iter()
                .position(|e| e.map == map)
                .ok_or_else(|| Error::Internal("f d g^-1 is not a regular derivation".into()))?;
        }
    }
    validate_xmod(&format!("Act({})", x.name), &rd_group, &aut_group, &delta, action)
}
