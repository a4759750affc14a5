//! Cartan matrices, symmetrizers, the form K and finite/affine classification.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q, QMat, QVec};

/// A validated, symmetrizable generalized Cartan matrix.
///
/// Indices are 0-based internally; user-facing text uses 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
    d: QVec,
    gram: QMat,
}

impl CartanMatrix {
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Symmetrizing constants d_i with d_i a_ij = d_j a_ji.
    pub fn d(&self) -> &[Q] {
        &self.d
    }

    /// Gram matrix of K in the simple-root basis: K(α_i, α_j) = d_i a_ij.
    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    pub fn k(&self, u: &[Q], v: &[Q]) -> Q {
        linalg::bilinear(u, &self.gram, v)
    }

    /// K(α_i^∨, v) = Σ_j a_ij v_j.
    pub fn pair_coroot(&self, i: usize, v: &[Q]) -> Q {
        self.a[i]
            .iter()
            .zip(v)
            .fold(Q::zero(), |acc, (&x, y)| acc + q(x) * y)
    }

    pub fn a_matrix(&self) -> QMat {
        linalg::int_matrix(&self.a)
    }

    /// Root coordinates to coroot-basis coordinates: [v:α_i^∨] = d_i [v:α_i].
    pub fn to_coroot_basis(&self, v: &[Q]) -> QVec {
        v.iter().zip(&self.d).map(|(x, d)| x * d).collect()
    }

    pub fn from_coroot_basis(&self, v: &[Q]) -> QVec {
        v.iter().zip(&self.d).map(|(x, d)| x / d).collect()
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn restrict(&self, idx: &[usize]) -> CartanMatrix {
        let a: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.a[i][j]).collect())
            .collect();
        let d: QVec = idx.iter().map(|&i| self.d[i].clone()).collect();
        Self::assemble(a, d)
    }

    fn assemble(a: Vec<Vec<i64>>, d: QVec) -> CartanMatrix {
        let n = a.len();
        let gram = (0..n)
            .map(|i| (0..n).map(|j| &d[i] * q(a[i][j])).collect())
            .collect();
        CartanMatrix { a, d, gram }
    }

    /// Neighbours of node i in the Dynkin diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| j != i && self.a[i][j] != 0).collect()
    }
}

/// Check the Cartan axioms and compute canonical symmetrizers.
///
/// The symmetrizer on each connected component is the primitive positive
/// integer solution of d_i a_ij = d_j a_ji.
pub fn validate_cartan(raw: &[Vec<i64>]) -> Result<CartanMatrix> {
    let n = raw.len();
    if n == 0 || raw.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    for i in 0..n {
        if raw[i][i] != 2 {
            return Err(Error::BadDiagonal(i + 1, raw[i][i]));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if raw[i][j] > 0 {
                return Err(Error::PositiveOffDiagonal(i + 1, j + 1, raw[i][j]));
            }
            if (raw[i][j] == 0) != (raw[j][i] == 0) {
                return Err(Error::AsymmetricZero(i + 1, j + 1));
            }
        }
    }
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || raw[i][j] == 0 {
                    continue;
                }
                let di = d[i].clone().expect("visited");
                let dj = di * q(raw[i][j]) / q(raw[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(Error::NotSymmetrizable(i + 1, j + 1));
                    }
                    Some(_) => {}
                }
            }
        }
        let vals: QVec = comp.iter().map(|&i| d[i].clone().unwrap()).collect();
        let prim = linalg::primitive(&vals);
        for (k, &i) in comp.iter().enumerate() {
            d[i] = Some(prim[k].clone());
        }
    }
    let d: QVec = d.into_iter().map(|x| x.unwrap()).collect();
    Ok(CartanMatrix::assemble(raw.to_vec(), d))
}

/// Transpose; the dual root system.
pub fn dual(c: &CartanMatrix) -> CartanMatrix {
    let n = c.n();
    let t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c.a[j][i]).collect()).collect();
    validate_cartan(&t).expect("transpose of a Cartan matrix is a Cartan matrix")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    Finite,
    Affine,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeClassification {
    pub kind: Kind,
    pub affine: Option<AffineData>,
}

/// The data attached to an affine Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineData {
    /// Primitive positive generator of ker K.
    pub delta: QVec,
    pub aff: usize,
    pub theta: QVec,
    /// δ^∨ in root coordinates.
    pub delta_check: QVec,
}

impl AffineData {
    /// δ^∨ in coroot coordinates.
    pub fn delta_check_coroot(&self, c: &CartanMatrix) -> QVec {
        c.to_coroot_basis(&self.delta_check)
    }
}

fn is_pd_without(c: &CartanMatrix, skip: usize) -> bool {
    let idx: Vec<usize> = (0..c.n()).filter(|&i| i != skip).collect();
    let sub: QMat = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| c.gram[i][j].clone()).collect())
        .collect();
    linalg::is_positive_definite(&sub)
}

fn positive_kernel(m: &QMat) -> Option<QVec> {
    let ns = linalg::nullspace(m);
    if ns.len() != 1 {
        return None;
    }
    let mut v = linalg::primitive(&ns[0]);
    if v.iter().any(|x| x.is_negative()) {
        v = linalg::neg(&v);
    }
    v.iter().all(|x| x.is_positive()).then_some(v)
}

/// Finite / affine / other, computed exactly.
///
/// For affine matrices the affine node is the smallest index whose deletion
/// leaves a positive definite matrix, whose coroot label [δ^∨:α_i^∨] is 1,
/// and whose root label [δ:α_i] is minimal among such nodes.
pub fn classify(c: &CartanMatrix) -> TypeClassification {
    if linalg::is_positive_definite(&c.gram) {
        return TypeClassification { kind: Kind::Finite, affine: None };
    }
    let other = TypeClassification { kind: Kind::Other, affine: None };
    if !linalg::is_positive_semidefinite(&c.gram) || linalg::rank(&c.gram) + 1 != c.n() {
        return other;
    }
    if !(0..c.n()).all(|i| is_pd_without(c, i)) {
        return other;
    }
    let Some(delta) = positive_kernel(&c.a_matrix()) else {
        return other;
    };
    let at = linalg::transpose(&c.a_matrix());
    let Some(dc) = positive_kernel(&at) else {
        return other;
    };
    let mut best: Option<usize> = None;
    for i in 0..c.n() {
        if !dc[i].is_one() {
            continue;
        }
        if best.map_or(true, |b| delta[i] < delta[b]) {
            best = Some(i);
        }
    }
    let aff = best.unwrap_or(0);
    TypeClassification {
        kind: Kind::Affine,
        affine: Some(affine_data(c, delta, dc, aff)),
    }
}

fn affine_data(c: &CartanMatrix, delta: QVec, dc_coroot: QVec, aff: usize) -> AffineData {
    let mut theta = delta.clone();
    theta[aff] = Q::zero();
    AffineData {
        delta,
        aff,
        theta,
        delta_check: c.from_coroot_basis(&dc_coroot),
    }
}

/// A validated affine Cartan matrix together with its affine data.
#[derive(Clone, Debug)]
pub struct AffineContext {
    pub cartan: CartanMatrix,
    pub data: AffineData,
    pub label: Option<String>,
}

impl AffineContext {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let cl = classify(&cartan);
        let data = cl.affine.ok_or(Error::NotAffine)?;
        Ok(AffineContext { cartan, data, label: None })
    }

    /// Build with an explicitly chosen affine node.
    pub fn with_aff(cartan: CartanMatrix, aff: usize) -> Result<Self> {
        if aff >= cartan.n() {
            return Err(Error::IndexOutOfRange(aff + 1));
        }
        let base = Self::new(cartan)?;
        if !is_pd_without(&base.cartan, aff) {
            return Err(Error::NotAffine);
        }
        let dc = base.data.delta_check_coroot(&base.cartan);
        let data = affine_data(&base.cartan, base.data.delta.clone(), dc, aff);
        Ok(AffineContext { cartan: base.cartan, data, label: None })
    }

    pub fn from_raw(raw: &[Vec<i64>], aff: Option<usize>) -> Result<Self> {
        let c = validate_cartan(raw)?;
        match aff {
            Some(a) => Self::with_aff(c, a),
            None => Self::new(c),
        }
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    pub fn delta(&self) -> &QVec {
        &self.data.delta
    }

    pub fn aff(&self) -> usize {
        self.data.aff
    }

    /// [δ:α_aff]; equals 2 exactly in type A_{2k}^{(2)}.
    pub fn delta_aff_coefficient(&self) -> Q {
        self.data.delta[self.data.aff].clone()
    }

    pub fn is_a2k_twisted(&self) -> bool {
        self.delta_aff_coefficient() == q(2)
    }

    /// The δ-level of a vector: [v:α_aff] / [δ:α_aff].
    pub fn level(&self, v: &[Q]) -> Q {
        &v[self.aff()] / self.delta_aff_coefficient()
    }

    /// The dual affine context (transpose Cartan matrix, same affine node).
    pub fn dual(&self) -> AffineContext {
        let c = dual(&self.cartan);
        let mut ctx = AffineContext::with_aff(c, self.aff()).expect("dual of affine is affine");
        ctx.label = self.label.as_ref().map(|l| format!("dual of {l}"));
        ctx
    }
}

/// Integer Cartan matrix from an edge list (1-based), each edge (i, j, a_ij, a_ji).
fn from_edges(n: usize, edges: &[(usize, usize, i64, i64)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, aij, aji) in edges {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    }
    a
}

fn transpose_int(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn type_a1(n: usize, k: usize) -> Vec<Vec<i64>> {
    if n == 2 {
        return vec![vec![2, -2], vec![-2, 2]];
    }
    let mut e = Vec::new();
    for i in 1..k {
        e.push((i, i + 1, -1, -1));
    }
    e.push((k, n, -1, -1));
    for j in k + 1..n {
        e.push((j, j + 1, -1, -1));
    }
    e.push((k + 1, 1, -1, -1));
    from_edges(n, &e)
}

fn type_b1(n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![(1, 2, -2, -1)];
    for i in 2..n - 2 {
        e.push((i, i + 1, -1, -1));
    }
    e.push((n - 2, n - 1, -1, -1));
    e.push((n - 2, n, -1, -1));
    from_edges(n, &e)
}

fn type_c1(n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![(1, 2, -1, -2)];
    for i in 2..n - 1 {
        e.push((i, i + 1, -1, -1));
    }
    e.push((n - 1, n, -2, -1));
    from_edges(n, &e)
}

fn type_d1(n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![(1, 3, -1, -1), (2, 3, -1, -1)];
    for i in 3..n - 2 {
        e.push((i, i + 1, -1, -1));
    }
    e.push((n - 2, n - 1, -1, -1));
    e.push((n - 2, n, -1, -1));
    from_edges(n, &e)
}

fn chain(from: usize, to: usize, e: &mut Vec<(usize, usize, i64, i64)>) {
    for i in from..to {
        e.push((i, i + 1, -1, -1));
    }
}

fn type_e1(l: usize) -> Vec<Vec<i64>> {
    let mut e = Vec::new();
    match l {
        6 => {
            chain(3, 7, &mut e);
            e.push((5, 2, -1, -1));
            e.push((2, 1, -1, -1));
            from_edges(7, &e)
        }
        7 => {
            chain(2, 8, &mut e);
            e.push((1, 5, -1, -1));
            from_edges(8, &e)
        }
        _ => {
            chain(2, 9, &mut e);
            e.push((1, 4, -1, -1));
            from_edges(9, &e)
        }
    }
}

fn type_f1() -> Vec<Vec<i64>> {
    from_edges(5, &[(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1), (4, 5, -1, -1)])
}

fn type_g1() -> Vec<Vec<i64>> {
    from_edges(3, &[(1, 2, -3, -1), (2, 3, -1, -1)])
}

fn type_a2_twisted(n: usize) -> Vec<Vec<i64>> {
    if n == 2 {
        return vec![vec![2, -1], vec![-4, 2]];
    }
    let mut e = vec![(1, 2, -1, -2)];
    for i in 2..n - 1 {
        e.push((i, i + 1, -1, -1));
    }
    e.push((n - 1, n, -1, -2));
    from_edges(n, &e)
}

/// A catalog entry: Cartan matrix, affine node and the canonical Coxeter word.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub cartan: Vec<Vec<i64>>,
    pub aff: usize,
    pub word: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A parsed label such as `A5(1):k=2`, `D3(2)` or `E8(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub family: Family,
    pub l: usize,
    pub twist: usize,
    pub k: Option<usize>,
}

pub fn parse_label(s: &str) -> Result<Label> {
    let unknown = || Error::UnknownLabel(s.to_string());
    let t = s.trim();
    let (main, k) = match t.split_once(':') {
        Some((m, rest)) => {
            let kv = rest.trim().strip_prefix("k=").ok_or_else(unknown)?;
            (m.trim(), Some(kv.parse::<usize>().map_err(|_| unknown())?))
        }
        None => (t, None),
    };
    let mut chars = main.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        Some('E') => Family::E,
        Some('F') => Family::F,
        Some('G') => Family::G,
        _ => return Err(unknown()),
    };
    let rest: String = chars.collect();
    let (ls, tw) = rest.split_once('(').ok_or_else(unknown)?;
    let tw = tw.strip_suffix(')').ok_or_else(unknown)?;
    let l: usize = ls.parse().map_err(|_| unknown())?;
    let twist: usize = tw.parse().map_err(|_| unknown())?;
    Ok(Label { family, l, twist, k })
}

/// Look up a standard or twisted affine type (Kac Tables Aff 1-3).
///
/// Rank is n = l + 1, c = s_1 ⋯ s_n and, except in type A_{2l}^{(2)} with l = 1,
/// the affine node is n.
pub fn catalog(label: &str) -> Result<CatalogEntry> {
    let lab = parse_label(label)?;
    let unknown = || Error::UnknownLabel(label.to_string());
    let range = || Error::RankOutOfRange(label.to_string());
    let n = lab.l + 1;
    if lab.k.is_some() && !(lab.family == Family::A && lab.twist == 1) {
        return Err(unknown());
    }
    let (cartan, aff) = match (lab.family, lab.twist) {
        (Family::A, 1) => {
            if lab.l < 1 {
                return Err(range());
            }
            let k = lab.k.unwrap_or(1);
            if k < 1 || k > n - 1 {
                return Err(unknown());
            }
            (type_a1(n, k), n)
        }
        (Family::B, 1) => {
            if lab.l < 3 {
                return Err(range());
            }
            (type_b1(n), n)
        }
        (Family::C, 1) => {
            if lab.l < 2 {
                return Err(range());
            }
            (type_c1(n), n)
        }
        (Family::D, 1) => {
            if lab.l < 4 {
                return Err(range());
            }
            (type_d1(n), n)
        }
        (Family::E, 1) => {
            if !(6..=8).contains(&lab.l) {
                return Err(range());
            }
            (type_e1(lab.l), n)
        }
        (Family::F, 1) => {
            if lab.l != 4 {
                return Err(range());
            }
            (type_f1(), 5)
        }
        (Family::G, 1) => {
            if lab.l != 2 {
                return Err(range());
            }
            (type_g1(), 3)
        }
        (Family::A, 2) => {
            if lab.l < 2 {
                return Err(range());
            }
            if lab.l % 2 == 0 {
                let m = lab.l / 2 + 1;
                (type_a2_twisted(m), m)
            } else {
                if lab.l < 5 {
                    return Err(range());
                }
                let m = (lab.l + 1) / 2 + 1;
                (transpose_int(&type_b1(m)), m)
            }
        }
        (Family::D, 2) => {
            if lab.l < 3 {
                return Err(range());
            }
            (transpose_int(&type_c1(lab.l)), lab.l)
        }
        (Family::E, 2) => {
            if lab.l != 6 {
                return Err(range());
            }
            (transpose_int(&type_f1()), 5)
        }
        (Family::D, 3) => {
            if lab.l != 4 {
                return Err(range());
            }
            (transpose_int(&type_g1()), 3)
        }
        _ => return Err(unknown()),
    };
    let rank = cartan.len();
    Ok(CatalogEntry {
        label: label.trim().to_string(),
        cartan,
        aff: aff - 1,
        word: (0..rank).collect(),
    })
}

/// Build the affine context for a catalog label.
pub fn catalog_context(label: &str) -> Result<(AffineContext, Vec<usize>)> {
    let e = catalog(label)?;
    let mut ctx = AffineContext::from_raw(&e.cartan, Some(e.aff))?;
    ctx.label = Some(e.label.clone());
    Ok((ctx, e.word))
}

/// Every catalog label with rank at most `max_rank`, including all A^(1) orientations.
pub fn catalog_labels(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 2..=max_rank {
        let l = n - 1;
        for k in 1..n {
            out.push(format!("A{l}(1):k={k}"));
        }
        if l >= 3 {
            out.push(format!("B{l}(1)"));
        }
        if l >= 2 {
            out.push(format!("C{l}(1)"));
        }
        if l >= 4 {
            out.push(format!("D{l}(1)"));
        }
        match n {
            3 => out.push("G2(1)".into()),
            5 => out.push("F4(1)".into()),
            7 => out.push("E6(1)".into()),
            8 => out.push("E7(1)".into()),
            9 => out.push("E8(1)".into()),
            _ => {}
        }
        // A_{2m}^(2) has rank m+1, A_{2m-1}^(2) rank m+1 (m >= 3), D_{m+1}^(2) rank m+1.
        out.push(format!("A{}(2)", 2 * l));
        if l >= 3 {
            out.push(format!("A{}(2)", 2 * l - 1));
        }
        if l >= 2 {
            out.push(format!("D{}(2)", l + 1));
        }
        match n {
            3 => out.push("D4(3)".into()),
            5 => out.push("E6(2)".into()),
            _ => {}
        }
    }
    out
}

/// Convenience: the value of a BigInt-valued rational as i64 when it fits.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    let b: &BigInt = x.numer();
    i64::try_from(b.clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{qr, qvec};

    #[test]
    fn symmetrizer_examples() {
        let c = validate_cartan(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(c.d(), &qvec(&[1, 1])[..]);
        let c = validate_cartan(&[vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]).unwrap();
        // proportional to (1/2, 1, 1/2)
        assert_eq!(c.d(), &qvec(&[1, 2, 1])[..]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            validate_cartan(&[vec![2, -1], vec![0, 2]]),
            Err(Error::AsymmetricZero(1, 2))
        );
        assert_eq!(validate_cartan(&[vec![3]]), Err(Error::BadDiagonal(1, 3)));
        assert_eq!(
            validate_cartan(&[vec![2, 1], vec![1, 2]]),
            Err(Error::PositiveOffDiagonal(1, 2, 1))
        );
        let cyc = [vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(validate_cartan(&cyc), Err(Error::NotSymmetrizable(..))));
    }

    #[test]
    fn classify_examples() {
        let a2 = validate_cartan(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(classify(&a2).kind, Kind::Finite);
        let a11 = validate_cartan(&[vec![2, -2], vec![-2, 2]]).unwrap();
        let cl = classify(&a11);
        assert_eq!(cl.kind, Kind::Affine);
        assert_eq!(cl.affine.unwrap().delta, qvec(&[1, 1]));
        let a22 = validate_cartan(&[vec![2, -1], vec![-4, 2]]).unwrap();
        let data = classify(&a22).affine.unwrap();
        assert_eq!(data.delta, qvec(&[1, 2]));
        assert_eq!(data.aff, 1);
        assert_eq!(data.delta[data.aff], q(2));
        let hyp = validate_cartan(&[vec![2, -3], vec![-3, 2]]).unwrap();
        assert_eq!(classify(&hyp).kind, Kind::Other);
    }

    #[test]
    fn delta_check_scaling() {
        for label in catalog_labels(5) {
            let (ctx, _) = catalog_context(&label).unwrap();
            let aff = ctx.aff();
            let e = unit_q(ctx.n(), aff);
            let kaa = ctx.cartan.k(&e, &e);
            let f = if ctx.is_a2k_twisted() { Q::one() / kaa } else { q(2) / kaa };
            assert_eq!(ctx.data.delta_check, linalg::scale(&f, ctx.delta()), "{label}");
        }
    }

    fn unit_q(n: usize, i: usize) -> QVec {
        linalg::unit_vec(n, i)
    }

    #[test]
    fn catalog_shapes() {
        let g = catalog("G2(1)").unwrap();
        assert_eq!(g.cartan.len(), 3);
        assert_eq!(g.aff, 2);
        let d = catalog("D3(2)").unwrap();
        assert_eq!(d.cartan, vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        assert!(matches!(catalog("A5(1):k=6"), Err(Error::UnknownLabel(_))));
        assert!(matches!(catalog("B2(1)"), Err(Error::RankOutOfRange(_))));
        assert!(matches!(catalog("Q3(1)"), Err(Error::UnknownLabel(_))));
        let a4 = catalog_context("A4(2)").unwrap().0;
        assert_eq!(a4.delta(), &qvec(&[1, 2, 2]));
        assert_eq!(a4.aff(), 2);
        let _ = qr(1, 2);
    }

    #[test]
    fn every_catalog_entry_is_affine() {
        for label in catalog_labels(9) {
            let e = catalog(&label).unwrap();
            let c = validate_cartan(&e.cartan).unwrap();
            assert_eq!(classify(&c).kind, Kind::Affine, "{label}");
            let data = classify(&c).affine.unwrap();
            let dc = data.delta_check_coroot(&c);
            assert_eq!(data.delta[data.aff], data.delta[e.aff], "{label}");
            assert!(dc[data.aff].is_one() && dc[e.aff].is_one(), "{label}");
            assert_eq!(classify(&dual(&c)).kind, Kind::Affine, "{label}");
            assert_eq!(dual(&dual(&c)), c);
        }
    }
}
