//! Real roots, coroots, supports and bounded enumeration.

use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::cartan::{classify, AffineContext, CartanMatrix, Kind};
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q, QVec};

/// Coordinates in the simple-root basis.
pub type RootVector = QVec;

/// A root together with its coroot (both in simple-root coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub vec: RootVector,
    pub is_real: bool,
    pub coroot: RootVector,
}

pub fn simple_reflection(c: &CartanMatrix, i: usize, v: &[Q]) -> Result<RootVector> {
    if i >= c.n() {
        return Err(Error::IndexOutOfRange(i + 1));
    }
    if v.len() != c.n() {
        return Err(Error::DimensionMismatch { expected: c.n(), got: v.len() });
    }
    Ok(reflect(c, i, v))
}

/// s_i(v) = v − K(α_i^∨, v) α_i, unchecked.
pub fn reflect(c: &CartanMatrix, i: usize, v: &[Q]) -> RootVector {
    let p = c.pair_coroot(i, v);
    let mut out = v.to_vec();
    out[i] -= p;
    out
}

/// Reflection matrix of s_i acting on columns of root coordinates.
pub fn reflection_matrix(c: &CartanMatrix, i: usize) -> linalg::QMat {
    let n = c.n();
    let mut m = linalg::identity(n);
    for j in 0..n {
        m[i][j] -= q(c.a(i, j));
    }
    m
}

/// Coroot β^∨ = 2β / K(β,β), in simple-root coordinates.
pub fn coroot(c: &CartanMatrix, beta: &[Q]) -> RootVector {
    let kk = c.k(beta, beta);
    linalg::scale(&(q(2) / kk), beta)
}

/// Coroot coordinates [β^∨:α_i^∨].
pub fn coroot_coords(c: &CartanMatrix, beta: &[Q]) -> RootVector {
    c.to_coroot_basis(&coroot(c, beta))
}

/// Exact test for membership in the real roots, by reflection descent.
pub fn is_real_root(c: &CartanMatrix, v: &[Q]) -> bool {
    if v.len() != c.n() || !linalg::is_integral(v) || linalg::is_zero(v) {
        return false;
    }
    let mut w: RootVector = if linalg::all_nonneg(v) {
        v.to_vec()
    } else if linalg::all_nonpos(v) {
        linalg::neg(v)
    } else {
        return false;
    };
    if !c.k(&w, &w).is_positive() {
        return false;
    }
    loop {
        let nz: Vec<usize> = (0..c.n()).filter(|&i| !w[i].is_zero()).collect();
        if nz.len() == 1 && w[nz[0]].is_one() {
            return true;
        }
        let Some(i) = (0..c.n()).find(|&i| c.pair_coroot(i, &w).is_positive()) else {
            return false;
        };
        w = reflect(c, i, &w);
        if w.iter().any(|x| x.is_negative()) {
            return false;
        }
    }
}

pub fn make_root(c: &CartanMatrix, v: RootVector) -> Root {
    let kk = c.k(&v, &v);
    if kk.is_positive() {
        let coroot = linalg::scale(&(q(2) / kk), &v);
        Root { vec: v, is_real: true, coroot }
    } else {
        Root { vec: v.clone(), is_real: false, coroot: v }
    }
}

pub fn support(v: &[Q]) -> BTreeSet<usize> {
    (0..v.len()).filter(|&i| !v[i].is_zero()).collect()
}

/// Positive real roots of a finite root system, in canonical order.
pub fn finite_positive_roots(c: &CartanMatrix) -> Vec<RootVector> {
    let n = c.n();
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for i in 0..n {
        let e = linalg::unit_vec(n, i);
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let r = reflect(c, i, &b);
            if r.iter().any(|x| x.is_negative()) {
                continue;
            }
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut out: Vec<RootVector> = seen.into_iter().collect();
    out.sort();
    out
}

/// All real roots of a finite root system, canonical order.
pub fn finite_roots(c: &CartanMatrix) -> Vec<RootVector> {
    let pos = finite_positive_roots(c);
    let mut out: Vec<RootVector> = pos.iter().map(|r| linalg::neg(r)).collect();
    out.extend(pos);
    out.sort();
    out
}

/// Positive real roots of δ-level at most `level`, canonical order.
pub fn affine_positive_real_roots(ctx: &AffineContext, level: &Q) -> Vec<RootVector> {
    let c = &ctx.cartan;
    let n = c.n();
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for i in 0..n {
        let e = linalg::unit_vec(n, i);
        if ctx.level(&e) <= *level {
            seen.insert(e.clone());
            queue.push_back(e);
        }
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            if !c.pair_coroot(i, &b).is_negative() {
                continue;
            }
            let r = reflect(c, i, &b);
            if ctx.level(&r) > *level {
                continue;
            }
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut out: Vec<RootVector> = seen.into_iter().collect();
    out.sort();
    out
}

/// Real roots with |level| ≤ L together with ±kδ for 1 ≤ k ≤ L, canonical order.
///
/// Every positive real root descends to a simple root through roots of no
/// larger level, so raising by simple reflections from Π is complete.
pub fn roots_up_to_level(ctx: &AffineContext, l: u32) -> Vec<Root> {
    let level = q(l as i64);
    let pos = affine_positive_real_roots(ctx, &level);
    let mut vecs: Vec<RootVector> = pos.iter().map(|r| linalg::neg(r)).collect();
    vecs.extend(pos);
    for k in 1..=l as i64 {
        vecs.push(linalg::scale(&q(k), ctx.delta()));
        vecs.push(linalg::scale(&q(-k), ctx.delta()));
    }
    vecs.sort();
    vecs.into_iter().map(|v| make_root(&ctx.cartan, v)).collect()
}

/// Roots of an arbitrary valid Cartan matrix: bounded for affine type, all
/// roots for finite type (the level bound is then ignored).
pub fn roots_any(c: &CartanMatrix, l: u32) -> Result<Vec<Root>> {
    match classify(c).kind {
        Kind::Finite => Ok(finite_roots(c).into_iter().map(|v| make_root(c, v)).collect()),
        Kind::Affine => Ok(roots_up_to_level(&AffineContext::new(c.clone())?, l)),
        Kind::Other => Err(Error::NotAffine),
    }
}

/// A standard parabolic subsystem.
#[derive(Clone, Debug)]
pub enum Parabolic {
    Affine(AffineContext),
    Finite { cartan: CartanMatrix, indices: Vec<usize> },
}

pub fn parabolic_restriction(ctx: &AffineContext, j: &[usize]) -> Result<Parabolic> {
    let mut idx: Vec<usize> = j.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if let Some(&bad) = idx.iter().find(|&&i| i >= ctx.n()) {
        return Err(Error::IndexOutOfRange(bad + 1));
    }
    if idx.len() == ctx.n() {
        return Ok(Parabolic::Affine(ctx.clone()));
    }
    Ok(Parabolic::Finite { cartan: ctx.cartan.restrict(&idx), indices: idx })
}

/// Embed a vector of a parabolic subsystem back into the full coordinates.
pub fn embed(n: usize, indices: &[usize], v: &[Q]) -> RootVector {
    let mut out = linalg::zero_vec(n);
    for (k, &i) in indices.iter().enumerate() {
        out[i] = v[k].clone();
    }
    out
}

pub fn project(indices: &[usize], v: &[Q]) -> RootVector {
    indices.iter().map(|&i| v[i].clone()).collect()
}

/// Is `v` a positive integer multiple of δ (k ≥ 1)?
pub fn delta_multiple(ctx: &AffineContext, v: &[Q]) -> Option<Q> {
    let d = ctx.delta();
    let k = &v[0] / &d[0];
    if !k.is_integer() || k.is_zero() {
        return None;
    }
    (linalg::scale(&k, d) == v).then_some(k)
}

pub fn is_root(ctx: &AffineContext, v: &[Q]) -> bool {
    delta_multiple(ctx, v).is_some() || is_real_root(&ctx.cartan, v)
}

/// The height Σ [v:α_i].
pub fn height(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |a, x| a + x)
}

pub fn one() -> Q {
    Q::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog_context, validate_cartan};
    use crate::linalg::qvec;

    fn a11() -> AffineContext {
        AffineContext::from_raw(&[vec![2, -2], vec![-2, 2]], None).unwrap()
    }

    #[test]
    fn reflection_examples() {
        let ctx = a11();
        let c = &ctx.cartan;
        assert_eq!(simple_reflection(c, 0, &qvec(&[1, 0])).unwrap(), qvec(&[-1, 0]));
        assert_eq!(simple_reflection(c, 1, &qvec(&[1, 0])).unwrap(), qvec(&[1, 2]));
        assert_eq!(simple_reflection(c, 0, ctx.delta()).unwrap(), *ctx.delta());
        assert!(simple_reflection(c, 2, &qvec(&[1, 0])).is_err());
    }

    #[test]
    fn level_zero_and_one() {
        let ctx = a11();
        let r0: Vec<RootVector> = roots_up_to_level(&ctx, 0).into_iter().map(|r| r.vec).collect();
        // aff is index 0 here, so α_1 = δ - α_2 sits at level 1
        assert_eq!(r0, vec![qvec(&[0, -1]), qvec(&[0, 1])]);
        let r1: Vec<RootVector> = roots_up_to_level(&ctx, 1).into_iter().map(|r| r.vec).collect();
        assert!(r1.contains(&qvec(&[1, 1])));
        assert!(r1.contains(&qvec(&[1, 2])));
        assert!(r1.contains(&qvec(&[-1, 0])));
        assert!(!r1.contains(&qvec(&[2, 1])));
    }

    #[test]
    fn real_root_test() {
        let ctx = a11();
        assert!(is_real_root(&ctx.cartan, &qvec(&[3, 2])));
        assert!(!is_real_root(&ctx.cartan, &qvec(&[3, 1])));
        assert!(!is_real_root(&ctx.cartan, &qvec(&[1, 1])));
        assert!(is_root(&ctx, &qvec(&[2, 2])));
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&qvec(&[1, 0, 0])), BTreeSet::from([0]));
        let (ctx, _) = catalog_context("A2(1):k=1").unwrap();
        assert_eq!(support(ctx.delta()).len(), 3);
        assert!(support(&qvec(&[0, 0])).is_empty());
    }

    #[test]
    fn parabolics() {
        let ctx = a11();
        assert!(matches!(parabolic_restriction(&ctx, &[0, 1]).unwrap(), Parabolic::Affine(_)));
        match parabolic_restriction(&ctx, &[0]).unwrap() {
            Parabolic::Finite { cartan, .. } => assert_eq!(cartan.n(), 1),
            _ => panic!(),
        }
        let (d32, _) = catalog_context("D3(2)").unwrap();
        match parabolic_restriction(&d32, &[0, 1]).unwrap() {
            Parabolic::Finite { cartan, .. } => {
                assert_eq!(classify(&cartan).kind, Kind::Finite)
            }
            _ => panic!(),
        }
    }

    #[test]
    fn finite_b2_count() {
        let c = validate_cartan(&[vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(finite_positive_roots(&c).len(), 4);
    }
}
