//! The almost positive roots Φ_c.

use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

use crate::coxeter::{negative_simple_index, CoxeterContext};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::roots::{self, RootVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PhiCClass {
    NegativeSimple(usize),
    /// Positive root outside U_c (infinite τ_c-orbit).
    Transient,
    /// Real root of the tube: (component, arc start, arc length).
    Tube { component: usize, start: usize, len: usize },
    Delta,
}

impl PhiCClass {
    pub fn tag(&self) -> &'static str {
        match self {
            PhiCClass::NegativeSimple(_) => "negative-simple",
            PhiCClass::Transient => "transient",
            PhiCClass::Tube { .. } => "tube",
            PhiCClass::Delta => "delta",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostPositiveRoot {
    pub vec: RootVector,
    pub class: PhiCClass,
}

/// Membership in Φ_c, with the class when it holds.
pub fn is_in_phi_c(cc: &CoxeterContext, v: &[Q]) -> (bool, Option<PhiCClass>) {
    match classify(cc, v) {
        Some(c) => (true, Some(c)),
        None => (false, None),
    }
}

pub fn classify(cc: &CoxeterContext, v: &[Q]) -> Option<PhiCClass> {
    if v.len() != cc.n() {
        return None;
    }
    if let Some(i) = negative_simple_index(v) {
        return Some(PhiCClass::NegativeSimple(i));
    }
    if linalg::is_zero(v) || !linalg::all_nonneg(v) {
        return None;
    }
    if v == cc.ctx.delta().as_slice() {
        return Some(PhiCClass::Delta);
    }
    if !roots::is_real_root(&cc.ctx.cartan, v) {
        return None;
    }
    if !cc.phi(v).is_zero() {
        return Some(PhiCClass::Transient);
    }
    cc.tube.arc_of(v).map(|(component, start, len)| PhiCClass::Tube { component, start, len })
}

pub fn require(cc: &CoxeterContext, v: &[Q]) -> Result<PhiCClass> {
    classify(cc, v).ok_or_else(|| Error::NotInPhiC(linalg::fmt_vec(v)))
}

pub fn tube_roots(cc: &CoxeterContext) -> Vec<AlmostPositiveRoot> {
    cc.tube
        .arcs()
        .into_iter()
        .map(|(component, start, len, vec)| AlmostPositiveRoot {
            vec,
            class: PhiCClass::Tube { component, start, len },
        })
        .collect()
}

/// −Π, the tube roots, δ, and c^m Ψ→, c^{-m} Ψ← for 0 ≤ m ≤ m_bound.
/// Panics if the pieces are not disjoint.
pub fn enumerate_phi_c(cc: &CoxeterContext, m_bound: u32) -> Vec<AlmostPositiveRoot> {
    let n = cc.n();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(AlmostPositiveRoot {
            vec: linalg::neg(&linalg::unit_vec(n, i)),
            class: PhiCClass::NegativeSimple(i),
        });
    }
    for j in 0..n {
        let mut a = cc.psi_to[j].clone();
        let mut b = cc.psi_from[j].clone();
        for _ in 0..=m_bound {
            out.push(AlmostPositiveRoot { vec: a.clone(), class: PhiCClass::Transient });
            out.push(AlmostPositiveRoot { vec: b.clone(), class: PhiCClass::Transient });
            a = cc.c(&a);
            b = cc.c_inv(&b);
        }
    }
    out.extend(tube_roots(cc));
    out.push(AlmostPositiveRoot { vec: cc.ctx.delta().clone(), class: PhiCClass::Delta });
    let distinct: BTreeSet<&RootVector> = out.iter().map(|r| &r.vec).collect();
    assert_eq!(distinct.len(), out.len(), "Φ_c enumeration pieces overlap");
    out.sort_by(|a, b| a.vec.cmp(&b.vec));
    out
}

/// All elements of Φ_c with δ-level at most `level` (absolute value of the level of each root).
pub fn phi_c_up_to_level(cc: &CoxeterContext, level: u32) -> Vec<AlmostPositiveRoot> {
    let ctx = &cc.ctx;
    let n = cc.n();
    let mut out: Vec<AlmostPositiveRoot> = (0..n)
        .map(|i| AlmostPositiveRoot {
            vec: linalg::neg(&linalg::unit_vec(n, i)),
            class: PhiCClass::NegativeSimple(i),
        })
        .collect();
    for v in roots::affine_positive_real_roots(ctx, &linalg::q(level as i64)) {
        if let Some(class) = classify(cc, &v) {
            out.push(AlmostPositiveRoot { vec: v, class });
        }
    }
    if level >= 1 {
        out.push(AlmostPositiveRoot { vec: ctx.delta().clone(), class: PhiCClass::Delta });
    }
    out.sort_by(|a, b| a.vec.cmp(&b.vec));
    out.dedup_by(|a, b| a.vec == b.vec);
    out
}

/// Φ_c = Φ_{c^{-1}} on the bounded enumerations.
pub fn phi_c_inverse_invariance_check(cc: &CoxeterContext, m_bound: u32) -> Result<bool> {
    let inv = cc.inverse()?;
    let a: BTreeSet<RootVector> = enumerate_phi_c(cc, m_bound).into_iter().map(|r| r.vec).collect();
    let b: BTreeSet<RootVector> = enumerate_phi_c(&inv, m_bound).into_iter().map(|r| r.vec).collect();
    Ok(a == b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Orbit {
    /// β = τ_c^power(−α_index).
    Infinite { index: usize, power: i64 },
    /// β = τ_c^power(ω) with ω = Ω_c[rep].
    Finite { rep: usize, power: i64, size: usize },
    DeltaFixed,
}

pub fn orbit_classification(cc: &CoxeterContext, beta: &[Q]) -> Result<Orbit> {
    let class = require(cc, beta)?;
    match class {
        PhiCClass::Delta => Ok(Orbit::DeltaFixed),
        PhiCClass::NegativeSimple(i) => Ok(Orbit::Infinite { index: i, power: 0 }),
        PhiCClass::Transient => {
            let positive = cc.phi(beta).is_positive();
            let mut v = beta.to_vec();
            // Bounded by the level growth: each c-step changes the level by a fixed nonzero amount.
            for m in 0..100_000i64 {
                let hit = if positive {
                    cc.psi_to.iter().position(|p| *p == v)
                } else {
                    cc.psi_from.iter().position(|p| *p == v)
                };
                if let Some(j) = hit {
                    let power = if positive { m + 1 } else { -(m + 1) };
                    return Ok(Orbit::Infinite { index: j, power });
                }
                v = if positive { cc.c_inv(&v) } else { cc.c(&v) };
            }
            Err(Error::SearchExhausted("orbit representative".into()))
        }
        PhiCClass::Tube { component, .. } => {
            let size = cc.tube.components[component].rank();
            let mut v = beta.to_vec();
            for p in 0..size as i64 {
                if let Some(r) = cc.tube.omega.iter().position(|w| *w == v) {
                    return Ok(Orbit::Finite { rep: r, power: -p, size });
                }
                v = cc.c(&v);
            }
            Err(Error::SearchExhausted("finite orbit representative".into()))
        }
    }
}

/// Coarse orbit label used for coloring: `index` for infinite orbits, n + rep for finite ones.
pub fn orbit_color_index(cc: &CoxeterContext, beta: &[Q]) -> Option<usize> {
    match orbit_classification(cc, beta).ok()? {
        Orbit::Infinite { index, .. } => Some(index),
        Orbit::Finite { rep, .. } => Some(cc.n() + rep),
        Orbit::DeltaFixed => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;
    use crate::linalg::qvec;

    fn build(label: &str) -> CoxeterContext {
        let (ctx, w) = catalog_context(label).unwrap();
        CoxeterContext::build(&ctx, &w).unwrap()
    }

    #[test]
    fn membership_examples() {
        let cc = build("A1(1)");
        assert_eq!(classify(&cc, &qvec(&[-1, 0])), Some(PhiCClass::NegativeSimple(0)));
        assert_eq!(classify(&cc, &qvec(&[1, 1])), Some(PhiCClass::Delta));
        assert_eq!(classify(&cc, &qvec(&[2, 2])), None);
        for r in roots::affine_positive_real_roots(&cc.ctx, &linalg::q(4)) {
            assert_eq!(classify(&cc, &r), Some(PhiCClass::Transient));
        }
    }

    #[test]
    fn tube_counts() {
        assert!(tube_roots(&build("A1(1)")).is_empty());
        assert_eq!(tube_roots(&build("D3(2)")).len(), 2);
        let cc = build("A2(1):k=1");
        let expect: usize = cc.tube.ranks().iter().map(|k| k * (k - 1)).sum();
        assert_eq!(tube_roots(&cc).len(), expect);
    }

    #[test]
    fn enumeration_count_and_membership() {
        for label in ["A1(1)", "D3(2)", "G2(1)", "A2(1):k=2"] {
            let cc = build(label);
            for m in 0..3 {
                let list = enumerate_phi_c(&cc, m);
                let n = cc.n();
                assert_eq!(list.len(), n + 2 * n * (m as usize + 1) + tube_roots(&cc).len() + 1);
                for r in &list {
                    assert_eq!(classify(&cc, &r.vec).as_ref(), Some(&r.class));
                }
            }
            assert!(phi_c_inverse_invariance_check(&cc, 3).unwrap());
        }
    }

    #[test]
    fn orbits() {
        let cc = build("D3(2)");
        for t in tube_roots(&cc) {
            match orbit_classification(&cc, &t.vec).unwrap() {
                Orbit::Finite { size, .. } => assert_eq!(size, 2),
                o => panic!("{o:?}"),
            }
        }
        assert_eq!(orbit_classification(&cc, cc.ctx.delta()).unwrap(), Orbit::DeltaFixed);
        let m1 = qvec(&[-1, 0, 0]);
        assert_eq!(orbit_classification(&cc, &m1).unwrap(), Orbit::Infinite { index: 0, power: 0 });
        let mut v = m1.clone();
        for p in 1..6 {
            v = cc.tau(&v).unwrap();
            assert_eq!(orbit_classification(&cc, &v).unwrap(), Orbit::Infinite { index: 0, power: p });
        }
        let mut v = m1;
        for p in 1..6 {
            v = cc.tau_inverse(&v).unwrap();
            assert_eq!(orbit_classification(&cc, &v).unwrap(), Orbit::Infinite { index: 0, power: -p });
        }
    }
}
