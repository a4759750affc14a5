//! The c-compatibility degree.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

use crate::almost_positive::{self, PhiCClass};
use crate::cartan::CartanMatrix;
use crate::coxeter::CoxeterContext;
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::roots;

/// Support of a real root of U_c in the simple system of its tube component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubeSupport {
    pub component: usize,
    /// Position (in the component's cyclic order) where the arc starts.
    pub start: usize,
    /// Number of simples in the arc, capped at the component rank.
    pub len: usize,
    /// Number of full turns: the root is arc + wraps·(sum of the component's simples).
    pub wraps: usize,
}

impl TubeSupport {
    pub fn positions(&self, k: usize) -> BTreeSet<usize> {
        if self.wraps > 0 {
            return (0..k).collect();
        }
        (0..self.len).map(|t| (self.start + t) % k).collect()
    }

    pub fn is_component_full(&self, k: usize) -> bool {
        self.wraps > 0 || self.len >= k
    }
}

pub fn tube_support(cc: &CoxeterContext, beta: &[Q]) -> Result<TubeSupport> {
    if beta == cc.ctx.delta().as_slice() {
        return Err(Error::DeltaHasNoTubeSupport);
    }
    let bad = || Error::NotInTube(linalg::fmt_vec(beta));
    if !cc.in_u_c(beta) || !roots::is_real_root(&cc.ctx.cartan, beta) {
        return Err(bad());
    }
    let beta = if linalg::all_nonneg(beta) { beta.to_vec() } else { linalg::neg(beta) };
    for (ci, comp) in cc.tube.components.iter().enumerate() {
        let k = comp.rank();
        let total = comp.arc_sum(0, k);
        let mut r = beta.clone();
        let mut wraps = 0;
        while linalg::all_nonneg(&r) && !linalg::is_zero(&r) {
            if let Some((c2, start, len)) = cc.tube.arc_of(&r) {
                if c2 == ci {
                    return Ok(TubeSupport { component: ci, start, len, wraps });
                }
            }
            r = linalg::sub(&r, &total);
            wraps += 1;
        }
    }
    Err(bad())
}

fn supports_of(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<(TubeSupport, TubeSupport)> {
    for v in [alpha, beta] {
        if !matches!(almost_positive::classify(cc, v), Some(PhiCClass::Tube { .. })) {
            return Err(Error::NotInTube(linalg::fmt_vec(v)));
        }
    }
    Ok((tube_support(cc, alpha)?, tube_support(cc, beta)?))
}

/// Number of tube simples adjacent to α that lie in the tube support of β.
pub fn adjacency_count(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<usize> {
    let (sa, sb) = supports_of(cc, alpha, beta)?;
    Ok(adjacency_from_supports(cc, &sa, &sb))
}

fn adjacency_from_supports(cc: &CoxeterContext, sa: &TubeSupport, sb: &TubeSupport) -> usize {
    if sa.component != sb.component {
        return 0;
    }
    let k = cc.tube.components[sa.component].rank();
    let pa = sa.positions(k);
    let pb = sb.positions(k);
    let adjacent: BTreeSet<usize> = [(sa.start + k - 1) % k, (sa.start + sa.len) % k]
        .into_iter()
        .filter(|p| !pa.contains(p))
        .collect();
    adjacent.intersection(&pb).count()
}

/// The tube-combinatorial expression: −1 on the diagonal, 0 for strictly nested supports,
/// the adjacency count otherwise.
pub fn compat_circ(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<Q> {
    let (sa, sb) = supports_of(cc, alpha, beta)?;
    if alpha == beta {
        return Ok(-Q::one());
    }
    if sa.component == sb.component {
        let k = cc.tube.components[sa.component].rank();
        let (pa, pb) = (sa.positions(k), sb.positions(k));
        if pa != pb && (pa.is_subset(&pb) || pb.is_subset(&pa)) {
            return Ok(Q::zero());
        }
    }
    Ok(Q::from_integer(adjacency_from_supports(cc, &sa, &sb).into()))
}

/// Is the joint tube support of two tube roots component-full?
pub fn joint_support_full(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<bool> {
    let (sa, sb) = supports_of(cc, alpha, beta)?;
    if sa.component != sb.component {
        return Ok(false);
    }
    let k = cc.tube.components[sa.component].rank();
    let u: BTreeSet<usize> = sa.positions(k).union(&sb.positions(k)).copied().collect();
    Ok(u.len() == k)
}

/// Coroot coordinates used in the compatibility formulas (δ^∨ for δ).
pub fn coroot_for_compat(cc: &CoxeterContext, alpha: &[Q]) -> linalg::QVec {
    if alpha == cc.ctx.delta().as_slice() {
        cc.ctx.data.delta_check_coroot(&cc.ctx.cartan)
    } else {
        roots::coroot_coords(&cc.ctx.cartan, alpha)
    }
}

fn arrows_unchecked(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> (Q, Q) {
    let u = coroot_for_compat(cc, alpha);
    arrows_raw(&cc.ctx.cartan, cc.positions(), &u, beta)
}

/// compat→ and compat← from coroot coordinates `u` of α and root coordinates of β,
/// for the Coxeter element whose letter positions are `pos`.
pub fn arrows_raw(cartan: &CartanMatrix, pos: &[usize], u: &[Q], beta: &[Q]) -> (Q, Q) {
    let n = cartan.n();
    let base = -linalg::dot(u, beta);
    let mut fwd = base.clone();
    let mut bwd = base;
    for i in 0..n {
        if !u[i].is_positive() {
            continue;
        }
        for j in 0..n {
            let a = cartan.a(i, j);
            if i == j || a == 0 || !beta[j].is_positive() {
                continue;
            }
            let term = &u[i] * &beta[j] * Q::from_integer(a.into());
            if pos[j] < pos[i] {
                fwd -= term;
            } else {
                bwd -= term;
            }
        }
    }
    (fwd, bwd)
}

/// (compat→, compat←).
pub fn compat_arrows(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<(Q, Q)> {
    almost_positive::require(cc, alpha)?;
    almost_positive::require(cc, beta)?;
    Ok(arrows_unchecked(cc, alpha, beta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    CoordinateMax,
    TubeAdjacency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityValue {
    #[serde(serialize_with = "ser_q")]
    pub degree: Q,
    pub branch: Branch,
    #[serde(serialize_with = "ser_opt_q")]
    pub forward: Option<Q>,
    #[serde(serialize_with = "ser_opt_q")]
    pub backward: Option<Q>,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&linalg::fmt_q(x))
}

fn ser_opt_q<S: serde::Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&linalg::fmt_q(v)),
        None => s.serialize_none(),
    }
}

pub fn compatibility_degree(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<CompatibilityValue> {
    let ca = almost_positive::require(cc, alpha)?;
    let cb = almost_positive::require(cc, beta)?;
    Ok(degree_classified(cc, alpha, &ca, beta, &cb))
}

/// Degree for roots already known to be in Φ_c with the given classes.
pub fn degree_classified(
    cc: &CoxeterContext,
    alpha: &[Q],
    ca: &PhiCClass,
    beta: &[Q],
    cb: &PhiCClass,
) -> CompatibilityValue {
    if let (
        PhiCClass::Tube { component: c1, start: s1, len: l1 },
        PhiCClass::Tube { component: c2, start: s2, len: l2 },
    ) = (ca, cb)
    {
        if c1 == c2 {
            let k = cc.tube.components[*c1].rank();
            let sa = TubeSupport { component: *c1, start: *s1, len: *l1, wraps: 0 };
            let sb = TubeSupport { component: *c2, start: *s2, len: *l2, wraps: 0 };
            let union: BTreeSet<usize> = sa.positions(k).union(&sb.positions(k)).copied().collect();
            if union.len() == k {
                let adj = adjacency_from_supports(cc, &sa, &sb);
                return CompatibilityValue {
                    degree: Q::from_integer(adj.into()),
                    branch: Branch::TubeAdjacency,
                    forward: None,
                    backward: None,
                };
            }
        }
    }
    let (f, b) = arrows_unchecked(cc, alpha, beta);
    CompatibilityValue {
        degree: if f > b { f.clone() } else { b.clone() },
        branch: Branch::CoordinateMax,
        forward: Some(f),
        backward: Some(b),
    }
}

/// Degree on two members of Φ_c without membership checks.
pub fn degree_fast(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Q {
    let ca = almost_positive::classify(cc, alpha).expect("in Phi_c");
    let cb = almost_positive::classify(cc, beta).expect("in Phi_c");
    degree_classified(cc, alpha, &ca, beta, &cb).degree
}

pub fn is_compatible(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<bool> {
    if alpha == beta {
        return Err(Error::NotDistinct);
    }
    Ok(compatibility_degree(cc, alpha, beta)?.degree.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;
    use crate::linalg::{q, qvec};

    fn build(label: &str) -> CoxeterContext {
        let (ctx, w) = catalog_context(label).unwrap();
        CoxeterContext::build(&ctx, &w).unwrap()
    }

    #[test]
    fn worked_example() {
        let cc = build("D3(2)");
        let a = qvec(&[2, 1, 0]);
        let b = qvec(&[0, 1, 0]);
        assert_eq!(compat_arrows(&cc, &a, &b).unwrap(), (q(-1), q(1)));
        let v = compatibility_degree(&cc, &a, &b).unwrap();
        assert_eq!(v.degree, q(1));
        assert_eq!(v.branch, Branch::CoordinateMax);
    }

    #[test]
    fn base_and_cobase() {
        let cc = build("A2(1):k=1");
        let d = cc.ctx.delta().clone();
        for i in 0..3 {
            let m = linalg::neg(&linalg::unit_vec(3, i));
            assert_eq!(compatibility_degree(&cc, &m, &d).unwrap().degree, q(1));
            assert_eq!(compatibility_degree(&cc, &d, &m).unwrap().degree, q(1));
        }
        assert_eq!(compatibility_degree(&cc, &d, &d).unwrap().degree, q(0));
    }

    #[test]
    fn a22_delta_values() {
        let cc = build("A2(2)");
        let d = cc.ctx.delta().clone();
        let m2 = qvec(&[0, -1]);
        assert_eq!(compatibility_degree(&cc, &m2, &d).unwrap().degree, q(2));
        assert_eq!(compatibility_degree(&cc, &d, &m2).unwrap().degree, q(1));
    }

    #[test]
    fn tube_support_and_adjacency() {
        let cc = build("D3(2)");
        let comp = &cc.tube.components[0];
        let s0 = comp.simples[0].clone();
        let s1 = comp.simples[1].clone();
        assert_eq!(tube_support(&cc, &s0).unwrap().len, 1);
        assert_eq!(tube_support(&cc, &s1).unwrap().start, 1);
        assert!(joint_support_full(&cc, &s0, &s1).unwrap());
        assert_eq!(adjacency_count(&cc, &s0, &s1).unwrap(), 1);
        assert_eq!(compatibility_degree(&cc, &s0, &s1).unwrap().branch, Branch::TubeAdjacency);
        assert_eq!(tube_support(&cc, cc.ctx.delta()), Err(Error::DeltaHasNoTubeSupport));
        let wrapped = linalg::add(&s0, &comp.arc_sum(0, 2));
        assert_eq!(tube_support(&cc, &wrapped).unwrap().wraps, 1);
    }

    #[test]
    fn distinctness() {
        let cc = build("A1(1)");
        let m1 = qvec(&[-1, 0]);
        assert_eq!(is_compatible(&cc, &m1, &m1), Err(Error::NotDistinct));
        assert!(is_compatible(&cc, &m1, &qvec(&[0, -1])).unwrap());
        assert!(!is_compatible(&cc, &m1, &qvec(&[1, 0])).unwrap());
    }
}
