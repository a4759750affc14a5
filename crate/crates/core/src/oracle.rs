//! Cluster-algebra ground truth: seed mutation with principal coefficients, d- and g-vectors.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use crate::almost_positive::{self, PhiCClass};
use crate::cartan::CartanMatrix;
use crate::cluster::{self, ClusterCheck};
use crate::compat;
use crate::coxeter::CoxeterContext;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::linalg::{self, q, Q, QVec};
use crate::nu;
use crate::roots::RootVector;

pub const DEFAULT_TERM_CAP: usize = 100_000;

pub type IntMat = Vec<Vec<i64>>;

/// b_ij = −a_ij if s_i precedes s_j in the word, a_ij otherwise.
pub fn exchange_matrix(cartan: &CartanMatrix, word: &[usize]) -> IntMat {
    let n = cartan.n();
    let mut pos = vec![0; n];
    for (p, &w) in word.iter().enumerate() {
        pos[w] = p;
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => 0,
                    _ if pos[i] < pos[j] => -cartan.a(i, j),
                    _ => cartan.a(i, j),
                })
                .collect()
        })
        .collect()
}

/// A linear order with i before j whenever b_ij > 0; `None` if B is not acyclic.
pub fn coxeter_word_of(b: &IntMat) -> Option<Vec<usize>> {
    let n = b.len();
    let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| b[i][j] > 0).count()).collect();
    let mut done = vec![false; n];
    let mut out = Vec::new();
    while out.len() < n {
        let next = (0..n).find(|&j| !done[j] && indeg[j] == 0)?;
        done[next] = true;
        out.push(next);
        for j in 0..n {
            if b[next][j] > 0 {
                indeg[j] -= 1;
            }
        }
    }
    Some(out)
}

/// d_i b_ij = −d_j b_ji.
pub fn is_skew_symmetrizable(b: &IntMat, d: &[Q]) -> bool {
    let n = b.len();
    (0..n).all(|i| (0..n).all(|j| &d[i] * q(b[i][j]) == -(&d[j] * q(b[j][i]))))
}

/// Mutation of an m×n extended exchange matrix at column k.
pub fn matrix_mutation(b: &[Vec<i64>], k: usize) -> IntMat {
    let pos = |x: i64| x.max(0);
    b.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &bij)| {
                    if i == k || j == k {
                        -bij
                    } else {
                        bij + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j])
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    /// Extended exchange matrix: n exchangeable rows, then one row per frozen variable.
    pub b: IntMat,
    pub cluster: Vec<Laurent>,
    /// Mutation slots from the initial seed.
    pub path: Vec<usize>,
}

impl Seed {
    /// Principal coefficients: variables x_1..x_n, y_1..y_n.
    pub fn principal(b: &IntMat) -> Seed {
        let n = b.len();
        let mut ext = b.clone();
        for i in 0..n {
            let mut row = vec![0; n];
            row[i] = 1;
            ext.push(row);
        }
        Seed { b: ext, cluster: (0..n).map(|i| Laurent::var(2 * n, i)).collect(), path: Vec::new() }
    }

    pub fn coefficient_free(b: &IntMat) -> Seed {
        let n = b.len();
        Seed { b: b.clone(), cluster: (0..n).map(|i| Laurent::var(n, i)).collect(), path: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.cluster.len()
    }

    fn frozen(&self, r: usize) -> Laurent {
        Laurent::var(self.cluster[0].nvars(), r)
    }

    pub fn mutate(&self, k: usize, term_cap: usize) -> Result<Seed> {
        let n = self.n();
        if k >= n {
            return Err(Error::IndexOutOfRange(k));
        }
        let nv = self.cluster[0].nvars();
        let mut plus = Laurent::one(nv);
        let mut minus = Laurent::one(nv);
        for (i, row) in self.b.iter().enumerate() {
            let bik = row[k];
            if bik == 0 {
                continue;
            }
            let u = if i < n { self.cluster[i].clone() } else { self.frozen(i) };
            let p = u.pow(bik.unsigned_abs() as u32);
            if bik > 0 {
                plus = plus.mul(&p);
            } else {
                minus = minus.mul(&p);
            }
        }
        let new = plus.add(&minus).div_exact(&self.cluster[k])?;
        if new.len() > term_cap {
            return Err(Error::DepthTooDeep(term_cap));
        }
        let mut cluster = self.cluster.clone();
        cluster[k] = new;
        let mut path = self.path.clone();
        path.push(k);
        Ok(Seed { b: matrix_mutation(&self.b, k), cluster, path })
    }

    /// d-vector of the variable in `slot`: negated minimal exponents of x_1..x_n.
    pub fn d_vector(&self, slot: usize) -> Vec<i64> {
        d_vector_of(&self.cluster[slot], self.n())
    }

    /// Homogeneous degree under deg x_i = e_i, deg y_j = −(column j of `b0`).
    pub fn g_vector(&self, slot: usize, b0: &IntMat) -> Result<Vec<i64>> {
        g_vector_of(&self.cluster[slot], b0)
    }
}

pub fn d_vector_of(x: &Laurent, n: usize) -> Vec<i64> {
    x.min_exponents()[..n].iter().map(|&e| -(e as i64)).collect()
}

pub fn g_vector_of(x: &Laurent, b0: &IntMat) -> Result<Vec<i64>> {
    let n = b0.len();
    let mut deg: Option<Vec<i64>> = None;
    for e in x.terms().keys() {
        let g: Vec<i64> = (0..n)
            .map(|i| e[i] as i64 - (0..n).map(|j| b0[i][j] * e[n + j] as i64).sum::<i64>())
            .collect();
        match &deg {
            None => deg = Some(g),
            Some(d) if *d != g => return Err(Error::NotHomogeneous),
            _ => {}
        }
    }
    deg.ok_or(Error::NotHomogeneous)
}

pub fn to_q(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

#[derive(Clone, Debug)]
pub struct SeedNode {
    pub seed: Seed,
    pub parent: Option<usize>,
    pub depth: usize,
}

/// Breadth-first exploration of the exchange graph, seeds identified by their (unordered) clusters.
#[derive(Clone, Debug)]
pub struct SeedGraph {
    pub initial_b: IntMat,
    pub nodes: Vec<SeedNode>,
    /// (from, to, slot) with from < to.
    pub edges: Vec<(usize, usize, usize)>,
}

impl SeedGraph {
    pub fn explore(b: &IntMat, depth: usize, principal: bool, term_cap: usize) -> Result<SeedGraph> {
        let start = if principal { Seed::principal(b) } else { Seed::coefficient_free(b) };
        let key = |s: &Seed| -> Vec<Laurent> {
            let mut k = s.cluster.clone();
            k.sort();
            k
        };
        let mut index: BTreeMap<Vec<Laurent>, usize> = BTreeMap::new();
        index.insert(key(&start), 0);
        let mut nodes = vec![SeedNode { seed: start, parent: None, depth: 0 }];
        let mut edges = BTreeSet::new();
        let mut frontier = vec![0usize];
        let n = b.len();
        for d in 0..depth {
            let results: Vec<(usize, usize, Seed)> = frontier
                .par_iter()
                .flat_map_iter(|&i| (0..n).map(move |k| (i, k)))
                .map(|(i, k)| nodes[i].seed.mutate(k, term_cap).map(|s| (i, k, s)))
                .collect::<Result<Vec<_>>>()?;
            let mut next = Vec::new();
            for (i, k, s) in results {
                let kk = key(&s);
                let t = match index.get(&kk) {
                    Some(&t) => t,
                    None => {
                        let t = nodes.len();
                        index.insert(kk, t);
                        nodes.push(SeedNode { seed: s, parent: Some(i), depth: d + 1 });
                        next.push(t);
                        t
                    }
                };
                edges.insert((i.min(t), i.max(t), k));
            }
            frontier = next;
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
        Ok(SeedGraph { initial_b: b.clone(), nodes, edges })
    }

    /// Distinct cluster variables with their first (node, slot).
    pub fn variables(&self) -> Vec<(Laurent, usize, usize)> {
        let mut seen = BTreeMap::new();
        for (ni, node) in self.nodes.iter().enumerate() {
            for (slot, x) in node.seed.cluster.iter().enumerate() {
                seen.entry(x.clone()).or_insert((ni, slot));
            }
        }
        let mut out: Vec<_> = seen.into_iter().map(|(x, (a, b))| (x, a, b)).collect();
        out.sort_by_key(|(_, a, b)| (*a, *b));
        out
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BijectionReport {
    pub depth: usize,
    pub seeds: usize,
    pub variables: usize,
    pub d_not_in_phi_c: Vec<String>,
    pub d_is_delta: usize,
    pub d_collisions: Vec<String>,
    pub seeds_not_clusters: Vec<String>,
    pub g_nu_mismatches: Vec<String>,
    pub negative_coefficients: usize,
    pub exchange_graph_matches: bool,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.d_not_in_phi_c.is_empty()
            && self.d_is_delta == 0
            && self.d_collisions.is_empty()
            && self.seeds_not_clusters.is_empty()
            && self.g_nu_mismatches.is_empty()
            && self.exchange_graph_matches
    }
}

pub fn exchange_matrix_for(cc: &CoxeterContext) -> IntMat {
    let b = exchange_matrix(&cc.ctx.cartan, &cc.word);
    debug_assert!(coxeter_word_of(&b).is_some());
    b
}

/// d-vectors of the principal-coefficient cluster variables against Φ_c, clusters, ν_c and the fan.
pub fn verify_bijection(cc: &CoxeterContext, depth: usize) -> Result<BijectionReport> {
    verify_bijection_with_cap(cc, depth, DEFAULT_TERM_CAP)
}

pub fn verify_bijection_with_cap(cc: &CoxeterContext, depth: usize, term_cap: usize) -> Result<BijectionReport> {
    let b = exchange_matrix_for(cc);
    let graph = SeedGraph::explore(&b, depth, true, term_cap)?;
    let n = cc.n();
    let mut rep = BijectionReport { depth, seeds: graph.nodes.len(), ..Default::default() };
    let vars = graph.variables();
    rep.variables = vars.len();
    let mut by_d: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (x, ni, slot) in &vars {
        let d = d_vector_of(x, n);
        let dq = to_q(&d);
        let initial = *ni == 0;
        if !initial {
            match almost_positive::classify(cc, &dq) {
                None => rep.d_not_in_phi_c.push(linalg::fmt_vec(&dq)),
                Some(PhiCClass::Delta) => rep.d_is_delta += 1,
                Some(_) => {}
            }
        }
        if by_d.insert(d.clone(), *ni * n + slot).is_some() {
            rep.d_collisions.push(linalg::fmt_vec(&dq));
        }
        if !x.all_coefficients_positive() {
            rep.negative_coefficients += 1;
        }
        let g = g_vector_of(x, &b)?;
        let nu = nu::nu_c(cc, &dq);
        if to_q(&g) != nu {
            rep.g_nu_mismatches.push(format!("d={} g={} nu={}", linalg::fmt_vec(&dq), linalg::fmt_vec(&to_q(&g)), linalg::fmt_vec(&nu)));
        }
    }
    let d_cluster = |ni: usize| -> Vec<RootVector> {
        let mut r: Vec<RootVector> = (0..n).map(|s| to_q(&graph.nodes[ni].seed.d_vector(s))).collect();
        r.sort();
        r
    };
    for ni in 0..graph.nodes.len() {
        let roots = d_cluster(ni);
        if cluster::is_cluster(cc, &roots) != ClusterCheck::Real {
            let parts: Vec<String> = roots.iter().map(|r| linalg::fmt_vec(r)).collect();
            rep.seeds_not_clusters.push(parts.join(" "));
        }
    }
    let fan = cluster::enumerate_clusters(cc, depth)?;
    let ours: BTreeSet<Vec<RootVector>> = (0..graph.nodes.len()).map(d_cluster).collect();
    let theirs: BTreeSet<Vec<RootVector>> = fan.real.iter().map(|c| c.roots.clone()).collect();
    let our_edges: BTreeSet<(Vec<RootVector>, Vec<RootVector>)> = graph
        .edges
        .iter()
        .map(|&(a, b, _)| ordered(d_cluster(a), d_cluster(b)))
        .collect();
    let their_edges: BTreeSet<(Vec<RootVector>, Vec<RootVector>)> = fan
        .edges
        .iter()
        .map(|e| ordered(fan.real[e.from].roots.clone(), fan.real[e.to].roots.clone()))
        .collect();
    rep.exchange_graph_matches = ours == theirs && our_edges == their_edges;
    Ok(rep)
}

fn ordered<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorMismatch {
    pub seed_path: Vec<usize>,
    pub beta: String,
    pub denominator: String,
    pub compatibility: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DenominatorReport {
    pub depth: usize,
    pub seeds_checked: usize,
    pub pairs_checked: usize,
    pub matches: usize,
    pub mismatches: Vec<DenominatorMismatch>,
}

impl DenominatorReport {
    pub fn match_rate(&self) -> f64 {
        if self.pairs_checked == 0 {
            1.0
        } else {
            self.matches as f64 / self.pairs_checked as f64
        }
    }
}

/// For every seed Σ′ within `depth` of the initial seed and every variable x(β) in that ball,
/// compares d_{Σ′}(x(β)) with ((β′_1‖β), …, (β′_n‖β)) where β′_i are the d-vectors of Σ′.
pub fn denominator_check(cc: &CoxeterContext, depth: usize) -> Result<DenominatorReport> {
    let b = exchange_matrix_for(cc);
    let graph = SeedGraph::explore(&b, depth, false, DEFAULT_TERM_CAP)?;
    let n = cc.n();
    let nodes = &graph.nodes;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, node) in nodes.iter().enumerate() {
        if let Some(p) = node.parent {
            children[p].push(i);
        }
    }
    // first occurrence of every variable, by (node, slot)
    let vars = graph.variables();
    let mut wanted: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (_, ni, slot) in &vars {
        wanted[*ni].push(*slot);
    }
    let betas: Vec<Vec<RootVector>> =
        nodes.iter().map(|nd| (0..n).map(|s| to_q(&nd.seed.d_vector(s))).collect()).collect();

    let per_seed: Vec<Result<(usize, usize, Vec<DenominatorMismatch>)>> = (0..nodes.len())
        .into_par_iter()
        .map(|sp| {
            let top: IntMat = nodes[sp].seed.b[..n].to_vec();
            let mut root = Seed::coefficient_free(&top);
            for &k in nodes[sp].seed.path.iter().rev() {
                root = root.mutate(k, DEFAULT_TERM_CAP)?;
            }
            let primes = &betas[sp];
            let mut stack = vec![(0usize, root)];
            let (mut pairs, mut matches, mut bad) = (0, 0, Vec::new());
            while let Some((ni, seed)) = stack.pop() {
                for &slot in &wanted[ni] {
                    let beta = &betas[ni][slot];
                    let den = to_q(&seed.d_vector(slot));
                    let comp: QVec = primes
                        .iter()
                        .map(|p| compat::degree_fast(cc, p, beta))
                        .collect();
                    pairs += 1;
                    if den == comp {
                        matches += 1;
                    } else {
                        bad.push(DenominatorMismatch {
                            seed_path: nodes[sp].seed.path.clone(),
                            beta: linalg::fmt_vec(beta),
                            denominator: linalg::fmt_vec(&den),
                            compatibility: linalg::fmt_vec(&comp),
                        });
                    }
                }
                for &ch in &children[ni] {
                    let k = *nodes[ch].seed.path.last().expect("child has a path");
                    stack.push((ch, seed.mutate(k, DEFAULT_TERM_CAP)?));
                }
            }
            Ok((pairs, matches, bad))
        })
        .collect();
    let mut rep = DenominatorReport { depth, seeds_checked: nodes.len(), ..Default::default() };
    for r in per_seed {
        let (p, m, bad) = r?;
        rep.pairs_checked += p;
        rep.matches += m;
        rep.mismatches.extend(bad);
    }
    Ok(rep)
}

/// Denominators are read off with y_j = 1 and the x-exponents only.
pub fn format_variable(x: &Laurent, n: usize) -> String {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    if x.nvars() > n {
        names.extend((1..=n).map(|i| format!("y{i}")));
    }
    x.format(&names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;

    #[test]
    fn a11_mutation() {
        let b = vec![vec![0, 2], vec![-2, 0]];
        assert_eq!(matrix_mutation(&b, 0), vec![vec![0, -2], vec![2, 0]]);
        let s = Seed::principal(&b);
        let m = s.mutate(0, DEFAULT_TERM_CAP).unwrap();
        let names: Vec<String> = ["x1", "x2", "y1", "y2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m.cluster[0].format(&names), "x1^-1*x2^2 + x1^-1*y1");
        assert_eq!(m.d_vector(0), vec![1, 0]);
        assert_eq!(m.g_vector(0, &b).unwrap(), vec![-1, 2]);
        assert_eq!(m.mutate(0, DEFAULT_TERM_CAP).unwrap().cluster, s.cluster);
        let (ctx, w) = catalog_context("A1(1):k=1").unwrap();
        assert_eq!(exchange_matrix(&ctx.cartan, &w), b);
    }
}
