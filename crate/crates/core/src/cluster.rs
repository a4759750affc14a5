//! Clusters, exchange, cluster expansions and the imaginary cone Δ_c.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use crate::almost_positive::{self, AlmostPositiveRoot, PhiCClass};
use crate::cartan::CartanMatrix;
use crate::compat;
use crate::coxeter::CoxeterContext;
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q, QMat, QVec};
use crate::roots::{self, RootVector};

/// A cluster expansion: root ↦ positive coefficient.
pub type Expansion = BTreeMap<RootVector, Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClusterKind {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cluster {
    /// Sorted lexicographically.
    pub roots: Vec<RootVector>,
    pub kind: ClusterKind,
}

impl Cluster {
    pub fn new(mut roots: Vec<RootVector>, kind: ClusterKind) -> Cluster {
        roots.sort();
        Cluster { roots, kind }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.roots.iter().any(|r| r.as_slice() == v)
    }

    pub fn without(&self, v: &[Q]) -> Vec<RootVector> {
        self.roots.iter().filter(|r| r.as_slice() != v).cloned().collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.roots.iter().map(|r| linalg::fmt_vec(r)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterCheck {
    Real,
    Imaginary,
    NotACluster(String),
}

pub fn is_cluster(cc: &CoxeterContext, set: &[RootVector]) -> ClusterCheck {
    let n = cc.n();
    let mut classes = Vec::new();
    for v in set {
        match almost_positive::classify(cc, v) {
            Some(c) => classes.push(c),
            None => return ClusterCheck::NotACluster(format!("{} is not in Phi_c", linalg::fmt_vec(v))),
        }
    }
    let distinct: BTreeSet<&RootVector> = set.iter().collect();
    if distinct.len() != set.len() {
        return ClusterCheck::NotACluster("repeated root".into());
    }
    for i in 0..set.len() {
        for j in 0..set.len() {
            if i != j {
                let d = compat::degree_classified(cc, &set[i], &classes[i], &set[j], &classes[j]).degree;
                if !d.is_zero() {
                    return ClusterCheck::NotACluster(format!(
                        "({} || {}) = {}",
                        linalg::fmt_vec(&set[i]),
                        linalg::fmt_vec(&set[j]),
                        linalg::fmt_q(&d)
                    ));
                }
            }
        }
    }
    let has_delta = classes.contains(&PhiCClass::Delta);
    match (has_delta, set.len()) {
        (false, l) if l == n => ClusterCheck::Real,
        (true, l) if l + 1 == n => ClusterCheck::Imaginary,
        _ => ClusterCheck::NotACluster(format!("compatible but not maximal ({} roots)", set.len())),
    }
}

/// Rows are the roots, in the given order.
pub fn det_of(roots: &[RootVector]) -> Q {
    linalg::det(roots)
}

// ---------------------------------------------------------------------------
// Δ_c

/// Coordinates of v ∈ U_c as (x, y) with v = xδ + Σ y_b b over the finite tube simples;
/// y is grouped per component, indexed by cyclic position (position 0, the affine simple, is 0).
pub fn tube_coordinates(cc: &CoxeterContext, v: &[Q]) -> Option<(Q, Vec<QVec>)> {
    if !cc.in_u_c(v) {
        return None;
    }
    let mut gens: Vec<QVec> = vec![cc.ctx.delta().clone()];
    let mut slots = Vec::new();
    for (ci, comp) in cc.tube.components.iter().enumerate() {
        for p in 1..comp.rank() {
            gens.push(comp.simples[p].clone());
            slots.push((ci, p));
        }
    }
    let coords = linalg::coordinates(&gens, v)?;
    let mut y: Vec<QVec> =
        cc.tube.components.iter().map(|c| vec![Q::zero(); c.rank()]).collect();
    for (t, &(ci, p)) in slots.iter().enumerate() {
        y[ci][p] = coords[t + 1].clone();
    }
    Some((coords[0].clone(), y))
}

/// (x, Σ m_i μ_i) where μ_i is the least affine-simple coefficient making component i nonnegative.
fn delta_slack(cc: &CoxeterContext, v: &[Q]) -> Option<(Q, Q, Vec<Q>)> {
    let (x, y) = tube_coordinates(cc, v)?;
    let mut need = Q::zero();
    let mut mus = Vec::new();
    for (ci, comp) in cc.tube.components.iter().enumerate() {
        let min = y[ci][1..].iter().cloned().fold(Q::zero(), |a, b| if b < a { b } else { a });
        let mu = -min;
        need += &mu * q(comp.delta_multiple as i64);
        mus.push(mu);
    }
    Some((x, need, mus))
}

pub fn in_delta_cone(cc: &CoxeterContext, v: &[Q]) -> bool {
    matches!(delta_slack(cc, v), Some((x, need, _)) if x >= need)
}

pub fn in_delta_relint(cc: &CoxeterContext, v: &[Q]) -> bool {
    matches!(delta_slack(cc, v), Some((x, need, _)) if x > need)
}

#[derive(Clone, Debug)]
pub struct ImaginaryCone {
    pub generators: Vec<RootVector>,
}

pub fn delta_cone(cc: &CoxeterContext) -> ImaginaryCone {
    let mut generators = cc.tube.simples();
    if generators.is_empty() {
        generators.push(cc.ctx.delta().clone());
    }
    ImaginaryCone { generators }
}

// ---------------------------------------------------------------------------
// Expansion

const ROTATION_CAP: usize = 200_000;

/// Cluster expansion in a finite root system with Coxeter word `word`.
pub fn expand_finite(cartan: &CartanMatrix, word: &[usize], v: &[Q]) -> Result<Expansion> {
    expand_generic(cartan, word, v, None)
}

/// The unique c-cluster expansion of v.
pub fn cluster_expansion(cc: &CoxeterContext, v: &[Q]) -> Result<Expansion> {
    if v.len() != cc.n() {
        return Err(Error::DimensionMismatch { expected: cc.n(), got: v.len() });
    }
    expand_generic(&cc.ctx.cartan, &cc.word, v, Some(cc))
}

fn expand_generic(
    cartan: &CartanMatrix,
    word: &[usize],
    v: &[Q],
    affine: Option<&CoxeterContext>,
) -> Result<Expansion> {
    if linalg::is_zero(v) {
        return Ok(Expansion::new());
    }
    if let Some(cc) = affine {
        if in_delta_relint(cc, v) {
            return Ok(imaginary_expansion(cc, v));
        }
    }
    if v.iter().any(|x| !x.is_positive()) {
        return split_nonpositive(cartan, word, v);
    }
    let n = v.len();
    // Two walks: conjugating by initial letters (towards c^{-1}) and by final letters (towards c).
    let mut fwd = (v.to_vec(), word.to_vec(), linalg::identity(n));
    let mut bwd = (v.to_vec(), word.to_vec(), linalg::identity(n));
    for _ in 0..ROTATION_CAP {
        for forward in [true, false] {
            let state = if forward { &mut fwd } else { &mut bwd };
            let s = if forward { state.1[0] } else { state.1[n - 1] };
            state.0 = roots::reflect(cartan, s, &state.0);
            let r = roots::reflection_matrix(cartan, s);
            state.2 = linalg::mat_mul(&state.2, &r);
            if forward {
                state.1.rotate_left(1);
            } else {
                state.1.rotate_right(1);
            }
            if state.0.iter().any(|x| !x.is_positive()) {
                let inner = split_nonpositive(cartan, &state.1, &state.0)?;
                let back: &QMat = &state.2;
                return Ok(inner.into_iter().map(|(r, m)| (linalg::mat_vec(back, &r), m)).collect());
            }
        }
    }
    Err(Error::SearchExhausted("rotation to a nonpositive coordinate".into()))
}

fn split_nonpositive(cartan: &CartanMatrix, word: &[usize], v: &[Q]) -> Result<Expansion> {
    let n = v.len();
    let mut out = Expansion::new();
    for i in 0..n {
        if v[i].is_negative() {
            out.insert(linalg::neg(&linalg::unit_vec(n, i)), -v[i].clone());
        }
    }
    let j: Vec<usize> = (0..n).filter(|&i| v[i].is_positive()).collect();
    if j.is_empty() {
        return Ok(out);
    }
    let sub = cartan.restrict(&j);
    let subword: Vec<usize> =
        word.iter().filter_map(|w| j.iter().position(|x| x == w)).collect();
    let inner = expand_generic(&sub, &subword, &roots::project(&j, v), None)?;
    for (r, m) in inner {
        out.insert(roots::embed(n, &j, &r), m);
    }
    Ok(out)
}

fn imaginary_expansion(cc: &CoxeterContext, v: &[Q]) -> Expansion {
    let (x, y) = tube_coordinates(cc, v).expect("in U_c");
    let (_, need, mus) = delta_slack(cc, v).expect("in U_c");
    let mut out = Expansion::new();
    out.insert(cc.ctx.delta().clone(), x - need);
    for (ci, comp) in cc.tube.components.iter().enumerate() {
        let mut t: QVec = y[ci].iter().map(|yb| yb + &mus[ci]).collect();
        t[0] = mus[ci].clone();
        peel(comp, &mut t, &mut out);
    }
    out
}

/// Greedy decomposition of a nonnegative coefficient vector on a cycle (with a zero entry)
/// into multiples of proper arcs.
fn peel(comp: &crate::coxeter::TubeComponent, t: &mut QVec, out: &mut Expansion) {
    let k = t.len();
    loop {
        let Some(zero) = (0..k).find(|&p| t[p].is_zero()) else {
            unreachable!("each component keeps a zero coefficient")
        };
        // first maximal run after a zero
        let Some(off) = (1..k).find(|&o| t[(zero + o) % k].is_positive()) else { return };
        let start = (zero + off) % k;
        let len = (0..k).take_while(|&o| t[(start + o) % k].is_positive()).count();
        let m = (0..len).map(|o| t[(start + o) % k].clone()).min().expect("nonempty run");
        for o in 0..len {
            t[(start + o) % k] -= &m;
        }
        let root = comp.arc_sum(start, len);
        *out.entry(root).or_insert_with(Q::zero) += m;
    }
}

/// Sum of an expansion.
pub fn expansion_sum(n: usize, e: &Expansion) -> QVec {
    e.iter().fold(linalg::zero_vec(n), |acc, (r, m)| linalg::axpy(&acc, m, r))
}

pub fn format_expansion(e: &Expansion) -> String {
    if e.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> =
        e.iter().rev().map(|(r, m)| format!("{}·{}", linalg::fmt_q(m), linalg::fmt_vec(r))).collect();
    parts.join(" + ")
}

// ---------------------------------------------------------------------------
// Exchange

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeResult {
    /// A real cluster on the other side of the facet.
    Real { beta: RootVector, cluster: Cluster },
    /// The facet of an imaginary cluster inside Δ_c; the neighbour is another imaginary cluster.
    TubeWall { beta: RootVector, cluster: Cluster },
}

impl ExchangeResult {
    pub fn beta(&self) -> &RootVector {
        match self {
            ExchangeResult::Real { beta, .. } | ExchangeResult::TubeWall { beta, .. } => beta,
        }
    }

    pub fn cluster(&self) -> &Cluster {
        match self {
            ExchangeResult::Real { cluster, .. } | ExchangeResult::TubeWall { cluster, .. } => cluster,
        }
    }
}

const MAX_SEARCH_LEVEL: u32 = 512;

/// Exchange and enumeration with a cache of Φ_c by δ-level.
pub struct Explorer<'a> {
    pub cc: &'a CoxeterContext,
    cache: Mutex<HashMap<u32, Arc<Vec<AlmostPositiveRoot>>>>,
}

impl<'a> Explorer<'a> {
    pub fn new(cc: &'a CoxeterContext) -> Explorer<'a> {
        Explorer { cc, cache: Mutex::new(HashMap::new()) }
    }

    pub fn phi_c(&self, level: u32) -> Arc<Vec<AlmostPositiveRoot>> {
        if let Some(v) = self.cache.lock().unwrap().get(&level) {
            return v.clone();
        }
        let list = Arc::new(almost_positive::phi_c_up_to_level(self.cc, level));
        self.cache.lock().unwrap().insert(level, list.clone());
        list
    }

    fn level_of(&self, v: &[Q]) -> u32 {
        let l = self.cc.ctx.level(v).abs();
        let c = l.ceil().to_integer();
        u32::try_from(c).unwrap_or(u32::MAX)
    }

    pub fn exchange(&self, cluster: &Cluster, alpha: &[Q]) -> Result<ExchangeResult> {
        let cc = self.cc;
        if !cluster.contains(alpha) {
            return Err(Error::RootNotInCluster(linalg::fmt_vec(alpha)));
        }
        let kind = match is_cluster(cc, &cluster.roots) {
            ClusterCheck::Real => ClusterKind::Real,
            ClusterCheck::Imaginary => ClusterKind::Imaginary,
            ClusterCheck::NotACluster(r) => return Err(Error::NotACluster(r)),
        };
        let facet = cluster.without(alpha);
        match kind {
            ClusterKind::Imaginary => {
                if alpha == cc.ctx.delta().as_slice() {
                    return Err(Error::DeltaNotExchangeable);
                }
                let found: Vec<RootVector> = almost_positive::tube_roots(cc)
                    .into_iter()
                    .map(|r| r.vec)
                    .filter(|b| b.as_slice() != alpha && !facet.contains(b))
                    .filter(|b| facet.iter().all(|f| compat::degree_fast(cc, f, b).is_zero()))
                    .collect();
                match found.as_slice() {
                    [b] => {
                        let mut roots = facet;
                        roots.push(b.clone());
                        Ok(ExchangeResult::TubeWall {
                            beta: b.clone(),
                            cluster: Cluster::new(roots, ClusterKind::Imaginary),
                        })
                    }
                    _ => Err(Error::SearchExhausted(format!("{} tube partners", found.len()))),
                }
            }
            ClusterKind::Real => self.real_partner(&facet, alpha),
        }
    }

    fn real_partner(&self, facet: &[RootVector], alpha: &[Q]) -> Result<ExchangeResult> {
        let cc = self.cc;
        let mut rows = facet.to_vec();
        rows.push(alpha.to_vec());
        let d_alpha = linalg::det(&rows);
        let target = -d_alpha;
        let mut level = facet.iter().chain(std::iter::once(&alpha.to_vec())).map(|v| self.level_of(v)).max().unwrap_or(0) + 1;
        let facet_classes: Vec<PhiCClass> =
            facet.iter().map(|f| almost_positive::classify(cc, f).expect("in Phi_c")).collect();
        loop {
            let phi = self.phi_c(level);
            let found: Vec<&AlmostPositiveRoot> = phi
                .iter()
                .filter(|b| b.class != PhiCClass::Delta && b.vec.as_slice() != alpha && !facet.contains(&b.vec))
                .filter(|b| {
                    let n = rows.len();
                    rows[n - 1] = b.vec.clone();
                    linalg::det(&rows) == target
                })
                .filter(|b| {
                    facet.iter().zip(&facet_classes).all(|(f, fc)| {
                        compat::degree_classified(cc, f, fc, &b.vec, &b.class).degree.is_zero()
                    })
                })
                .collect();
            match found.as_slice() {
                [b] => {
                    let mut roots = facet.to_vec();
                    roots.push(b.vec.clone());
                    return Ok(ExchangeResult::Real {
                        beta: b.vec.clone(),
                        cluster: Cluster::new(roots, ClusterKind::Real),
                    });
                }
                [] if level < MAX_SEARCH_LEVEL => level *= 2,
                [] => return Err(Error::SearchExhausted(format!("no partner up to level {level}"))),
                many => {
                    return Err(Error::SearchExhausted(format!("{} candidate partners", many.len())));
                }
            }
        }
    }

    /// Breadth-first search of the real exchange graph from −Π, plus all imaginary clusters.
    pub fn enumerate_clusters(&self, depth: usize) -> Result<ClusterSet> {
        let n = self.cc.n();
        let start = Cluster::new((0..n).map(|i| linalg::neg(&linalg::unit_vec(n, i))).collect(), ClusterKind::Real);
        let mut index: BTreeMap<Cluster, usize> = BTreeMap::new();
        let mut real = vec![start.clone()];
        let mut dist = vec![0usize];
        index.insert(start, 0);
        let mut edges = Vec::new();
        let mut frontier = vec![0usize];
        for d in 0..depth {
            let results: Vec<Vec<(usize, RootVector, ExchangeResult)>> = frontier
                .par_iter()
                .map(|&ci| {
                    let cl = &real[ci];
                    cl.roots
                        .iter()
                        .map(|a| self.exchange(cl, a).map(|r| (ci, a.clone(), r)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mut next = Vec::new();
            for (ci, a, r) in results.into_iter().flatten() {
                let cl = r.cluster().clone();
                let target = match index.get(&cl) {
                    Some(&t) => t,
                    None => {
                        let t = real.len();
                        index.insert(cl.clone(), t);
                        real.push(cl);
                        dist.push(d + 1);
                        next.push(t);
                        t
                    }
                };
                if ci < target {
                    edges.push(ExchangeEdge { from: ci, to: target, alpha: a, beta: r.beta().clone() });
                }
            }
            frontier = next;
        }
        edges.sort_by(|a, b| (a.from, a.to).cmp(&(b.from, b.to)));
        edges.dedup_by(|a, b| a.from == b.from && a.to == b.to);
        Ok(ClusterSet { real, depth: dist, edges, imaginary: imaginary_clusters(self.cc) })
    }
}

#[derive(Clone, Debug)]
pub struct ExchangeEdge {
    pub from: usize,
    pub to: usize,
    pub alpha: RootVector,
    pub beta: RootVector,
}

#[derive(Clone, Debug)]
pub struct ClusterSet {
    /// Real clusters in BFS order; `real[0]` is −Π.
    pub real: Vec<Cluster>,
    pub depth: Vec<usize>,
    pub edges: Vec<ExchangeEdge>,
    pub imaginary: Vec<Cluster>,
}

pub fn exchange(cc: &CoxeterContext, cluster: &Cluster, alpha: &[Q]) -> Result<ExchangeResult> {
    Explorer::new(cc).exchange(cluster, alpha)
}

pub fn enumerate_clusters(cc: &CoxeterContext, depth: usize) -> Result<ClusterSet> {
    Explorer::new(cc).enumerate_clusters(depth)
}

/// All imaginary clusters: δ together with a maximal compatible set of tube roots.
pub fn imaginary_clusters(cc: &CoxeterContext) -> Vec<Cluster> {
    let tubes: Vec<AlmostPositiveRoot> = almost_positive::tube_roots(cc);
    let m = tubes.len();
    let compatible: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    i != j
                        && compat::degree_classified(cc, &tubes[i].vec, &tubes[i].class, &tubes[j].vec, &tubes[j].class)
                            .degree
                            .is_zero()
                })
                .collect()
        })
        .collect();
    let size = cc.n() - 2;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cliques(&compatible, 0, size, &mut chosen, &mut |c: &[usize]| {
        let mut roots: Vec<RootVector> = c.iter().map(|&i| tubes[i].vec.clone()).collect();
        roots.push(cc.ctx.delta().clone());
        out.push(Cluster::new(roots, ClusterKind::Imaginary));
    });
    out.sort();
    out
}

/// Calls `emit` on every clique of the given size (indices increasing).
pub fn cliques(adj: &[Vec<bool>], from: usize, size: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == size {
        emit(chosen);
        return;
    }
    for i in from..adj.len() {
        if chosen.iter().all(|&c| adj[c][i]) {
            chosen.push(i);
            cliques(adj, i + 1, size, chosen, emit);
            chosen.pop();
        }
    }
}

// ---------------------------------------------------------------------------
// Exchangeability

pub fn is_exchangeable(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<bool> {
    let d = cc.ctx.delta().as_slice();
    let a = compat::compatibility_degree(cc, alpha, beta)?;
    let b = compat::compatibility_degree(cc, beta, alpha)?;
    if alpha == d || beta == d || alpha == beta {
        return Ok(false);
    }
    Ok(a.degree.is_one() && b.degree.is_one())
}

pub fn is_real_exchangeable(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<bool> {
    Ok(is_exchangeable(cc, alpha, beta)? && !in_delta_relint(cc, &linalg::add(alpha, beta)))
}

/// Is the pair {α, β} exchangeable with δ? Decided by searching the (finitely many) imaginary clusters.
pub fn is_pair_exchangeable_with_delta(cc: &CoxeterContext, alpha: &[Q], beta: &[Q]) -> Result<bool> {
    almost_positive::require(cc, alpha)?;
    almost_positive::require(cc, beta)?;
    if alpha == beta {
        return Ok(false);
    }
    for im in imaginary_clusters(cc) {
        let mut roots = im.without(cc.ctx.delta());
        roots.push(alpha.to_vec());
        roots.push(beta.to_vec());
        if is_cluster(cc, &roots) == ClusterCheck::Real {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The single-root criterion (α‖δ) = 1 = (δ‖α). `None` in type A_{2k}^{(2)}, where the
/// criterion does not characterize pair exchangeability.
pub fn single_root_delta_test(cc: &CoxeterContext, alpha: &[Q]) -> Result<Option<bool>> {
    let d = cc.ctx.delta().clone();
    let a = compat::compatibility_degree(cc, alpha, &d)?.degree;
    let b = compat::compatibility_degree(cc, &d, alpha)?.degree;
    if cc.ctx.is_a2k_twisted() {
        return Ok(None);
    }
    Ok(Some(a.is_one() && b.is_one()))
}

/// Partners β with {α, β} exchangeable with δ, found from the imaginary clusters.
pub fn delta_pair_partners(cc: &CoxeterContext, alpha: &[Q]) -> Result<Vec<RootVector>> {
    almost_positive::require(cc, alpha)?;
    let mut out = BTreeSet::new();
    let ex = Explorer::new(cc);
    for im in imaginary_clusters(cc) {
        let facet = im.without(cc.ctx.delta());
        let mut partial = facet.clone();
        partial.push(alpha.to_vec());
        if partial.iter().any(|r| r.as_slice() != alpha && !compat::degree_fast(cc, r, alpha).is_zero()) {
            continue;
        }
        if partial.len() != cc.n() - 1 {
            continue;
        }
        // the facet ∪ {α} has n−1 roots; complete it in both directions
        let lvl = ex.level_of(alpha) + 4;
        for b in ex.phi_c(lvl).iter() {
            if b.class == PhiCClass::Delta || b.vec.as_slice() == alpha || facet.contains(&b.vec) {
                continue;
            }
            let mut roots = partial.clone();
            roots.push(b.vec.clone());
            if is_cluster(cc, &roots) == ClusterCheck::Real {
                out.insert(b.vec.clone());
            }
        }
    }
    Ok(out.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Fan geometry

/// cone(A) ∩ cone(B) = cone(A ∩ B) for two simplicial cones with linearly independent generators.
pub fn cones_meet_in_face(a: &[RootVector], b: &[RootVector]) -> bool {
    let n = a.first().or(b.first()).map_or(0, |v| v.len());
    let shared: BTreeSet<&RootVector> = a.iter().filter(|v| b.contains(v)).collect();
    let (ka, kb) = (a.len(), b.len());
    // unknowns (x_a, x_b) ≥ 0 with Σ x_a a − Σ x_b b = 0 and one non-shared coordinate = 1
    let probe = |slot: usize| -> bool {
        let mut m: QMat = (0..n)
            .map(|r| {
                let mut row: QVec = a.iter().map(|g| g[r].clone()).collect();
                row.extend(b.iter().map(|g| -g[r].clone()));
                row
            })
            .collect();
        let mut rhs = vec![Q::zero(); n];
        let mut fix = vec![Q::zero(); ka + kb];
        fix[slot] = Q::one();
        m.push(fix);
        rhs.push(Q::one());
        linalg::nonneg_solution(&m, &rhs).is_some()
    };
    for (i, g) in a.iter().enumerate() {
        if !shared.contains(g) && probe(i) {
            return false;
        }
    }
    for (j, g) in b.iter().enumerate() {
        if !shared.contains(g) && probe(ka + j) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FanReport {
    pub pairs_checked: usize,
    pub bad_pairs: Vec<(usize, usize)>,
    pub determinant_failures: Vec<usize>,
    pub probes: usize,
    pub probe_out_of_depth: usize,
    pub probe_failures: usize,
}

impl FanReport {
    pub fn ok(&self) -> bool {
        self.bad_pairs.is_empty() && self.determinant_failures.is_empty() && self.probe_failures == 0
    }
}

/// Pairwise face-intersection check over a cluster set plus a completeness probe on `samples`.
pub fn fan_consistency(cc: &CoxeterContext, clusters: &ClusterSet, samples: &[QVec]) -> FanReport {
    let all: Vec<&Cluster> = clusters.real.iter().chain(&clusters.imaginary).collect();
    let mut report = FanReport::default();
    for (i, c) in clusters.real.iter().enumerate() {
        if linalg::det(&c.roots).abs() != Q::one() {
            report.determinant_failures.push(i);
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..all.len()).flat_map(|i| (i + 1..all.len()).map(move |j| (i, j))).collect();
    report.pairs_checked = pairs.len();
    report.bad_pairs = pairs
        .par_iter()
        .filter(|&&(i, j)| !cones_meet_in_face(&all[i].roots, &all[j].roots))
        .copied()
        .collect();
    report.bad_pairs.sort();
    for v in samples {
        report.probes += 1;
        match cluster_expansion(cc, v) {
            Ok(e) => {
                let support: BTreeSet<&RootVector> = e.keys().collect();
                if !all.iter().any(|c| support.iter().all(|r| c.contains(r))) {
                    report.probe_out_of_depth += 1;
                }
                if expansion_sum(cc.n(), &e) != *v {
                    report.probe_failures += 1;
                }
            }
            Err(_) => report.probe_failures += 1,
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;
    use crate::linalg::{qr, qvec};

    fn build(label: &str) -> CoxeterContext {
        let (ctx, w) = catalog_context(label).unwrap();
        CoxeterContext::build(&ctx, &w).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let cc = build("A1(1)");
        assert!(cluster_expansion(&cc, &qvec(&[0, 0])).unwrap().is_empty());
        let e = cluster_expansion(&cc, &qvec(&[1, -1])).unwrap();
        assert_eq!(format_expansion(&e), "1·(1,0) + 1·(0,-1)");
        let e = cluster_expansion(&cc, cc.ctx.delta()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[cc.ctx.delta()], q(1));
    }

    #[test]
    fn expansion_reconstructs() {
        for label in ["A1(1)", "D3(2)", "A2(1):k=1", "G2(1)", "A2(2)"] {
            let cc = build(label);
            let n = cc.n();
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    let mut v: QVec = vec![qr(a, 2), q(b)];
                    if n == 3 {
                        v.push(q(a - b + 1));
                    }
                    let e = cluster_expansion(&cc, &v).unwrap();
                    assert_eq!(expansion_sum(n, &e), v, "{label}");
                    let roots: Vec<RootVector> = e.keys().cloned().collect();
                    for x in &roots {
                        for y in &roots {
                            if x != y {
                                assert!(compat::degree_fast(&cc, x, y).is_zero(), "{label}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn delta_cone_examples() {
        let cc = build("D3(2)");
        assert!(in_delta_relint(&cc, cc.ctx.delta()));
        for s in cc.tube.simples() {
            assert!(in_delta_cone(&cc, &s));
            assert!(!in_delta_relint(&cc, &s));
        }
        assert!(!in_delta_cone(&cc, &qvec(&[-1, 0, 0])));
    }

    #[test]
    fn clusters_basic() {
        let cc = build("A1(1)");
        let neg = vec![qvec(&[-1, 0]), qvec(&[0, -1])];
        assert_eq!(is_cluster(&cc, &neg), ClusterCheck::Real);
        assert!(matches!(is_cluster(&cc, &[qvec(&[-1, 0]), qvec(&[1, 0])]), ClusterCheck::NotACluster(_)));
        let c = Cluster::new(neg, ClusterKind::Real);
        let r = exchange(&cc, &c, &qvec(&[-1, 0])).unwrap();
        assert_eq!(r.beta(), &qvec(&[1, 0]));
        let back = exchange(&cc, r.cluster(), &qvec(&[1, 0])).unwrap();
        assert_eq!(back.cluster(), &c);
        let cc = build("D3(2)");
        assert_eq!(imaginary_clusters(&cc).len(), 2);
        for im in imaginary_clusters(&cc) {
            assert_eq!(is_cluster(&cc, &im.roots), ClusterCheck::Imaginary);
        }
    }

    #[test]
    fn face_test() {
        let a = vec![qvec(&[-1, 0]), qvec(&[0, -1])];
        let b = vec![qvec(&[1, 0]), qvec(&[0, -1])];
        assert!(cones_meet_in_face(&a, &b));
        let c = vec![qvec(&[1, -1]), qvec(&[-1, 0])];
        assert!(!cones_meet_in_face(&a, &c));
    }
}
