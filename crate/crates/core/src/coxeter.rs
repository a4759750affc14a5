//! Data attached to a Coxeter element c of an affine Weyl group.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::almost_positive;
use crate::cartan::AffineContext;
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q, QMat, QVec};
use crate::roots::{self, RootVector};

/// One component of the tube: an affine type-A subsystem of U_c.
#[derive(Clone, Debug)]
pub struct TubeComponent {
    /// Simple roots in cyclic order; `simples[j+1] = c·simples[j]`, and
    /// `simples[0]` is the component's affine simple root.
    pub simples: Vec<RootVector>,
    /// The simples sum to `delta_multiple`·δ (1 except in some twisted types).
    pub delta_multiple: u32,
}

impl TubeComponent {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// Sum of the arc of `len` simples starting at position `start`.
    pub fn arc_sum(&self, start: usize, len: usize) -> RootVector {
        let k = self.rank();
        let n = self.simples[0].len();
        (0..len).fold(linalg::zero_vec(n), |acc, t| linalg::add(&acc, &self.simples[(start + t) % k]))
    }
}

#[derive(Clone, Debug)]
pub struct TubeSystem {
    pub components: Vec<TubeComponent>,
    /// Π̃_fin,c in the order of the transversal construction.
    pub fin_simples: Vec<RootVector>,
    /// Ω_c, the transversal of the finite c-orbits.
    pub omega: Vec<RootVector>,
    pub kappa: Vec<u32>,
    /// Proper arc sums, keyed by vector: (component, start, length).
    arcs: HashMap<RootVector, (usize, usize, usize)>,
}

impl TubeSystem {
    pub fn arc_of(&self, v: &[Q]) -> Option<(usize, usize, usize)> {
        self.arcs.get(v).copied()
    }

    /// All simple roots of the tube (Π̃_c).
    pub fn simples(&self) -> Vec<RootVector> {
        self.components.iter().flat_map(|c| c.simples.iter().cloned()).collect()
    }

    /// Proper arcs in canonical (component, start, length) order.
    pub fn arcs(&self) -> Vec<(usize, usize, usize, RootVector)> {
        let mut out = Vec::new();
        for (ci, comp) in self.components.iter().enumerate() {
            let k = comp.rank();
            for start in 0..k {
                for len in 1..k {
                    out.push((ci, start, len, comp.arc_sum(start, len)));
                }
            }
        }
        out
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.rank()).collect()
    }
}

/// Everything attached to a fixed Coxeter element.
#[derive(Clone, Debug)]
pub struct CoxeterContext {
    pub ctx: AffineContext,
    /// c = s_{word[0]} s_{word[1]} ⋯ s_{word[n-1]}.
    pub word: Vec<usize>,
    pos: Vec<usize>,
    pub e_c: QMat,
    pub e_cinv: QMat,
    pub c_matrix: QMat,
    pub c_inv_matrix: QMat,
    pub gamma: QVec,
    /// K(γ_c, α_i): ⟨φ_c, v⟩ is the dot product of this with root coordinates.
    pub phi_root: QVec,
    /// Ψ→_{c;j}, indexed by the simple index j.
    pub psi_to: Vec<RootVector>,
    /// Ψ←_{c;j}, indexed by the simple index j.
    pub psi_from: Vec<RootVector>,
    pub tube: TubeSystem,
    pub m_phi: u64,
}

pub fn validate_word(n: usize, word: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if word.len() != n {
        return Err(Error::BadWord(format!("expected {n} letters, got {}", word.len())));
    }
    for &w in word {
        if w >= n || seen[w] {
            return Err(Error::BadWord(format!("letter {} repeated or out of range", w + 1)));
        }
        seen[w] = true;
    }
    Ok(())
}

/// E_c(α_i^∨, α_j): a_ij if s_j precedes s_i in c, 1 on the diagonal, 0 otherwise.
pub fn euler_matrix(ctx: &AffineContext, pos: &[usize]) -> QMat {
    let n = ctx.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Q::one()
                    } else if pos[i] > pos[j] {
                        q(ctx.cartan.a(i, j))
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect()
}

impl CoxeterContext {
    pub fn build(ctx: &AffineContext, word: &[usize]) -> Result<CoxeterContext> {
        let n = ctx.n();
        validate_word(n, word)?;
        let mut pos = vec![0; n];
        for (p, &w) in word.iter().enumerate() {
            pos[w] = p;
        }
        let rpos: Vec<usize> = pos.iter().map(|&p| n - 1 - p).collect();
        let e_c = euler_matrix(ctx, &pos);
        let e_cinv = euler_matrix(ctx, &rpos);
        let howlett = linalg::mat_mul(&linalg::inverse(&e_cinv).expect("unitriangular"), &e_c);
        let c_matrix: QMat = howlett.iter().map(|r| linalg::neg(r)).collect();
        let product = word.iter().fold(linalg::identity(n), |m, &i| {
            linalg::mat_mul(&m, &roots::reflection_matrix(&ctx.cartan, i))
        });
        assert_eq!(c_matrix, product, "Howlett's formula disagrees with the reflection product");
        let c_inv_matrix = linalg::inverse(&c_matrix).expect("c is invertible");

        let aff = ctx.aff();
        let cols: Vec<usize> = (0..n).filter(|&j| j != aff).collect();
        let cm_minus: QMat = (0..n)
            .map(|i| {
                cols.iter()
                    .map(|&j| if i == j { &c_matrix[i][j] - Q::one() } else { c_matrix[i][j].clone() })
                    .collect()
            })
            .collect();
        let g = linalg::solve(&cm_minus, ctx.delta()).expect("generalized eigenvector exists");
        let gamma = roots::embed(n, &cols, &g);
        let phi_root = linalg::vec_mat(&gamma, ctx.cartan.gram());

        let mut psi_to = vec![Vec::new(); n];
        let mut psi_from = vec![Vec::new(); n];
        for (k, &j) in word.iter().enumerate() {
            let mut v = linalg::unit_vec(n, j);
            for &i in word[..k].iter().rev() {
                v = roots::reflect(&ctx.cartan, i, &v);
            }
            psi_to[j] = v;
            let mut w = linalg::unit_vec(n, j);
            for &i in &word[k + 1..] {
                w = roots::reflect(&ctx.cartan, i, &w);
            }
            psi_from[j] = w;
        }

        let mut cc = CoxeterContext {
            ctx: ctx.clone(),
            word: word.to_vec(),
            pos,
            e_c,
            e_cinv,
            c_matrix,
            c_inv_matrix,
            gamma,
            phi_root,
            psi_to,
            psi_from,
            tube: TubeSystem {
                components: vec![],
                fin_simples: vec![],
                omega: vec![],
                kappa: vec![],
                arcs: HashMap::new(),
            },
            m_phi: 0,
        };
        cc.tube = cc.build_tube();
        let ss = source_sink_graph(ctx);
        let comp_size = ss.class_size_of(&cc.word) as u64;
        let l = cc.tube.ranks().into_iter().fold(1u64, |a, r| a.lcm(&(r as u64)));
        cc.m_phi = comp_size + n as u64 * l;
        Ok(cc)
    }

    fn build_tube(&self) -> TubeSystem {
        let ctx = &self.ctx;
        let n = ctx.n();
        let fin: Vec<usize> = (0..n).filter(|&i| i != ctx.aff()).collect();
        let fin_c = ctx.cartan.restrict(&fin);
        let upsilon: Vec<RootVector> = roots::finite_positive_roots(&fin_c)
            .into_iter()
            .map(|r| roots::embed(n, &fin, &r))
            .filter(|r| self.phi(r).is_zero())
            .collect();
        let set: std::collections::HashSet<&RootVector> = upsilon.iter().collect();
        let simples: Vec<RootVector> = upsilon
            .iter()
            .filter(|b| {
                !upsilon.iter().any(|a| {
                    let rest = linalg::sub(b, a);
                    a != *b && set.contains(&rest)
                })
            })
            .cloned()
            .collect();
        // group into connected components
        let m = simples.len();
        let mut comp_id = vec![usize::MAX; m];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for s in 0..m {
            if comp_id[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut g = vec![s];
            comp_id[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in 0..m {
                    if comp_id[y] == usize::MAX && !ctx.cartan.k(&simples[x], &simples[y]).is_zero() {
                        comp_id[y] = id;
                        g.push(y);
                        queue.push_back(y);
                    }
                }
            }
            groups.push(g);
        }
        let mut components = Vec::new();
        let mut fin_order = Vec::new();
        for g in &groups {
            let sum = g.iter().fold(linalg::zero_vec(n), |a, &i| linalg::add(&a, &simples[i]));
            let delta_multiple = (1u32..=4)
                .find(|&m| {
                    let v = linalg::sub(&linalg::scale(&q(m as i64), ctx.delta()), &sum);
                    roots::is_real_root(&ctx.cartan, &v)
                })
                .expect("component has an affine simple root");
            let b_aff = linalg::sub(&linalg::scale(&q(delta_multiple as i64), ctx.delta()), &sum);
            let k = g.len() + 1;
            let mut orbit = vec![b_aff.clone()];
            for _ in 1..k {
                let next = self.c(orbit.last().unwrap());
                orbit.push(next);
            }
            assert_eq!(self.c(orbit.last().unwrap()), b_aff, "c does not rotate the tube component");
            for r in &orbit[1..] {
                assert!(
                    g.iter().any(|&i| simples[i] == *r),
                    "tube orbit left the component: {} not among {:?}",
                    linalg::fmt_vec(r),
                    g.iter().map(|&i| linalg::fmt_vec(&simples[i])).collect::<Vec<_>>()
                );
            }
            fin_order.extend(orbit[1..].iter().cloned());
            components.push(TubeComponent { simples: orbit, delta_multiple });
        }
        components.sort_by(|a, b| a.simples[1].cmp(&b.simples[1]));
        let mut omega = Vec::new();
        for (i, b) in fin_order.iter().enumerate() {
            let mut v = b.clone();
            for t in fin_order[..i].iter().rev() {
                let tc = roots::coroot(&ctx.cartan, t);
                let p = ctx.cartan.k(&tc, &v);
                v = linalg::axpy(&v, &(-p), t);
            }
            omega.push(v);
        }
        let kappa = omega
            .iter()
            .map(|b| {
                (1u32..)
                    .find(|&k| {
                        let v = linalg::sub(&linalg::scale(&q(k as i64), ctx.delta()), b);
                        roots::is_real_root(&ctx.cartan, &v)
                    })
                    .expect("kappa exists")
            })
            .collect();
        let mut arcs = HashMap::new();
        for (ci, comp) in components.iter().enumerate() {
            let k = comp.rank();
            for start in 0..k {
                for len in 1..k {
                    arcs.insert(comp.arc_sum(start, len), (ci, start, len));
                }
            }
        }
        TubeSystem { components, fin_simples: fin_order, omega, kappa, arcs }
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn position(&self, i: usize) -> usize {
        self.pos[i]
    }

    pub fn initial(&self) -> usize {
        self.word[0]
    }

    pub fn final_letter(&self) -> usize {
        self.word[self.n() - 1]
    }

    /// Is s_i initial in c (up to commutations)?
    pub fn is_initial(&self, i: usize) -> bool {
        (0..self.n()).all(|j| j == i || self.ctx.cartan.a(i, j) == 0 || self.pos[i] < self.pos[j])
    }

    pub fn is_final(&self, i: usize) -> bool {
        (0..self.n()).all(|j| j == i || self.ctx.cartan.a(i, j) == 0 || self.pos[i] > self.pos[j])
    }

    /// ⟨φ_c, v⟩ = K(γ_c, v).
    pub fn phi(&self, v: &[Q]) -> Q {
        linalg::dot(&self.phi_root, v)
    }

    pub fn in_u_c(&self, v: &[Q]) -> bool {
        self.phi(v).is_zero()
    }

    /// φ_c in fundamental-weight coordinates: [φ_c:ρ_i] = K(γ_c, α_i^∨).
    pub fn phi_weight(&self) -> QVec {
        linalg::mat_vec(&self.ctx.cartan.a_matrix(), &self.gamma)
    }

    /// φ_c rescaled so the first nonzero weight coordinate is ±1, keeping the sign convention.
    pub fn phi_weight_normalized(&self) -> QVec {
        let w = self.phi_weight();
        let first = w.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(Q::one);
        linalg::scale(&(Q::one() / first.abs()), &w)
    }

    pub fn c(&self, v: &[Q]) -> RootVector {
        linalg::mat_vec(&self.c_matrix, v)
    }

    pub fn c_inv(&self, v: &[Q]) -> RootVector {
        linalg::mat_vec(&self.c_inv_matrix, v)
    }

    pub fn c_power(&self, v: &[Q], m: i64) -> RootVector {
        let mut out = v.to_vec();
        for _ in 0..m.unsigned_abs() {
            out = if m > 0 { self.c(&out) } else { self.c_inv(&out) };
        }
        out
    }

    /// E_c(u, v) with u in coroot coordinates and v in root coordinates.
    pub fn euler_form(&self, u_coroot: &[Q], v: &[Q]) -> Q {
        linalg::bilinear(u_coroot, &self.e_c, v)
    }

    pub fn euler_form_inv(&self, u_coroot: &[Q], v: &[Q]) -> Q {
        linalg::bilinear(u_coroot, &self.e_cinv, v)
    }

    /// E_c on two vectors given in root coordinates.
    pub fn euler_roots(&self, u: &[Q], v: &[Q]) -> Q {
        self.euler_form(&self.ctx.cartan.to_coroot_basis(u), v)
    }

    /// The conjugate s c s for s initial or final in c.
    pub fn conjugate(&self, s: usize) -> Result<CoxeterContext> {
        let w = conjugate_word(&self.ctx, &self.word, s)?;
        CoxeterContext::build(&self.ctx, &w)
    }

    pub fn inverse(&self) -> Result<CoxeterContext> {
        let w: Vec<usize> = self.word.iter().rev().copied().collect();
        CoxeterContext::build(&self.ctx, &w)
    }

    /// The Coxeter element for the dual root system with the same word.
    pub fn dual(&self) -> Result<CoxeterContext> {
        CoxeterContext::build(&self.ctx.dual(), &self.word)
    }

    /// σ_s on −Π ∪ Φ^+.
    pub fn sigma(&self, s: usize, beta: &[Q]) -> Result<RootVector> {
        sigma(&self.ctx, s, beta)
    }

    pub fn negative_simple_index(&self, v: &[Q]) -> Option<usize> {
        negative_simple_index(v)
    }

    /// τ_c: the three-case formula, on Φ_c.
    pub fn tau(&self, beta: &[Q]) -> Result<RootVector> {
        if !almost_positive::is_in_phi_c(self, beta).0 {
            return Err(Error::NotInPhiC(linalg::fmt_vec(beta)));
        }
        Ok(self.tau_unchecked(beta))
    }

    pub fn tau_unchecked(&self, beta: &[Q]) -> RootVector {
        if let Some(i) = negative_simple_index(beta) {
            return self.psi_to[i].clone();
        }
        if let Some(i) = self.psi_from.iter().position(|p| p == beta) {
            return linalg::neg(&linalg::unit_vec(self.n(), i));
        }
        self.c(beta)
    }

    pub fn tau_inverse(&self, beta: &[Q]) -> Result<RootVector> {
        if !almost_positive::is_in_phi_c(self, beta).0 {
            return Err(Error::NotInPhiC(linalg::fmt_vec(beta)));
        }
        Ok(self.tau_inverse_unchecked(beta))
    }

    pub fn tau_inverse_unchecked(&self, beta: &[Q]) -> RootVector {
        if let Some(i) = negative_simple_index(beta) {
            return self.psi_from[i].clone();
        }
        if let Some(i) = self.psi_to.iter().position(|p| p == beta) {
            return linalg::neg(&linalg::unit_vec(self.n(), i));
        }
        self.c_inv(beta)
    }

    /// τ_c as the composition σ_{w_1} ⋯ σ_{w_n}, for cross-checking.
    pub fn tau_by_sigmas(&self, beta: &[Q]) -> Result<RootVector> {
        let mut v = beta.to_vec();
        for &s in self.word.iter().rev() {
            v = self.sigma(s, &v)?;
        }
        Ok(v)
    }

    /// The Coxeter word with 1-based letters.
    pub fn word_label(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|w| (w + 1).to_string()).collect();
        parts.join(",")
    }
}

pub fn negative_simple_index(v: &[Q]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    (nz.len() == 1 && v[nz[0]] == -Q::one()).then(|| nz[0])
}

pub fn sigma(ctx: &AffineContext, s: usize, beta: &[Q]) -> Result<RootVector> {
    if s >= ctx.n() {
        return Err(Error::IndexOutOfRange(s + 1));
    }
    if let Some(t) = negative_simple_index(beta) {
        if t != s {
            return Ok(beta.to_vec());
        }
    } else if !linalg::all_nonneg(beta) || linalg::is_zero(beta) {
        return Err(Error::NotAlmostPositive(linalg::fmt_vec(beta)));
    }
    Ok(roots::reflect(&ctx.cartan, s, beta))
}

/// Word of s c s for s initial or final in c (up to commutation).
pub fn conjugate_word(ctx: &AffineContext, word: &[usize], s: usize) -> Result<Vec<usize>> {
    let n = word.len();
    let mut pos = vec![0; n];
    for (p, &w) in word.iter().enumerate() {
        pos[w] = p;
    }
    let initial = (0..n).all(|j| j == s || ctx.cartan.a(s, j) == 0 || pos[s] < pos[j]);
    let fin = (0..n).all(|j| j == s || ctx.cartan.a(s, j) == 0 || pos[s] > pos[j]);
    let rest: Vec<usize> = word.iter().copied().filter(|&w| w != s).collect();
    if initial {
        let mut w = rest;
        w.push(s);
        Ok(w)
    } else if fin {
        let mut w = vec![s];
        w.extend(rest);
        Ok(w)
    } else {
        Err(Error::BadWord(format!("s{} is neither initial nor final", s + 1)))
    }
}

/// Acyclic orientations of the Dynkin diagram under source-sink moves.
#[derive(Clone, Debug)]
pub struct SourceSinkGraph {
    pub edges_of_diagram: Vec<(usize, usize)>,
    /// Orientation bitmasks: bit e set means edge e points from its first to its second node.
    pub vertices: Vec<u64>,
    pub moves: Vec<(usize, usize)>,
    pub class_of: Vec<usize>,
    pub classes: usize,
}

impl SourceSinkGraph {
    fn orientation_of(&self, word: &[usize]) -> u64 {
        let mut pos = vec![0; word.len()];
        for (p, &w) in word.iter().enumerate() {
            pos[w] = p;
        }
        let mut mask = 0u64;
        for (e, &(i, j)) in self.edges_of_diagram.iter().enumerate() {
            if pos[i] < pos[j] {
                mask |= 1 << e;
            }
        }
        mask
    }

    pub fn class_size_of(&self, word: &[usize]) -> usize {
        let o = self.orientation_of(word);
        let v = self.vertices.iter().position(|&x| x == o).expect("acyclic");
        let cl = self.class_of[v];
        self.class_of.iter().filter(|&&c| c == cl).count()
    }

    pub fn class_index_of(&self, word: &[usize]) -> usize {
        let o = self.orientation_of(word);
        let v = self.vertices.iter().position(|&x| x == o).expect("acyclic");
        self.class_of[v]
    }

    /// A Coxeter word realizing the given orientation (topological order, smallest index first).
    pub fn word_of(&self, n: usize, mask: u64) -> Vec<usize> {
        let mut indeg = vec![0usize; n];
        let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(i, j)) in self.edges_of_diagram.iter().enumerate() {
            let (a, b) = if mask >> e & 1 == 1 { (i, j) } else { (j, i) };
            out_adj[a].push(b);
            indeg[b] += 1;
        }
        let mut word = Vec::new();
        let mut done = vec![false; n];
        while word.len() < n {
            let v = (0..n).find(|&v| !done[v] && indeg[v] == 0).expect("acyclic");
            done[v] = true;
            word.push(v);
            for &b in &out_adj[v] {
                indeg[b] -= 1;
            }
        }
        word
    }
}

pub fn source_sink_graph(ctx: &AffineContext) -> SourceSinkGraph {
    let n = ctx.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if ctx.cartan.a(i, j) != 0 {
                edges.push((i, j));
            }
        }
    }
    let m = edges.len();
    assert!(m < 20, "diagram too large for orientation enumeration");
    let acyclic = |mask: u64| -> bool {
        let mut indeg = vec![0usize; n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                indeg[j] += 1;
            } else {
                indeg[i] += 1;
            }
        }
        let mut removed = 0;
        let mut done = vec![false; n];
        loop {
            let Some(v) = (0..n).find(|&v| !done[v] && indeg[v] == 0) else { break };
            done[v] = true;
            removed += 1;
            for (e, &(i, j)) in edges.iter().enumerate() {
                let (a, b) = if mask >> e & 1 == 1 { (i, j) } else { (j, i) };
                if a == v {
                    indeg[b] -= 1;
                }
            }
        }
        removed == n
    };
    let vertices: Vec<u64> = (0..1u64 << m).filter(|&mk| acyclic(mk)).collect();
    let index: BTreeMap<u64, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut moves = Vec::new();
    for (vi, &mask) in vertices.iter().enumerate() {
        for node in 0..n {
            // node is a source if every incident edge points away from it
            let incident: Vec<usize> =
                (0..m).filter(|&e| edges[e].0 == node || edges[e].1 == node).collect();
            let is_source = incident.iter().all(|&e| {
                let (a, _) = if mask >> e & 1 == 1 { edges[e] } else { (edges[e].1, edges[e].0) };
                a == node
            });
            if is_source && !incident.is_empty() {
                let flipped = incident.iter().fold(mask, |mk, &e| mk ^ (1 << e));
                moves.push((vi, index[&flipped]));
            }
        }
    }
    let mut class_of = vec![usize::MAX; vertices.len()];
    let mut classes = 0;
    for s in 0..vertices.len() {
        if class_of[s] != usize::MAX {
            continue;
        }
        class_of[s] = classes;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(a, b) in &moves {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if class_of[y] == usize::MAX {
                    class_of[y] = classes;
                    queue.push_back(y);
                }
            }
        }
        classes += 1;
    }
    SourceSinkGraph { edges_of_diagram: edges, vertices, moves, class_of, classes }
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
    fn a11_c_matrix() {
        let cc = build("A1(1)");
        assert_eq!(cc.c_matrix, linalg::int_matrix(&[vec![3, -2], vec![2, -1]]));
        assert_eq!(cc.c(cc.ctx.delta()), *cc.ctx.delta());
        let v = qvec(&[5, -7]);
        assert_eq!(cc.c(&cc.c_inv(&v)), v);
    }

    #[test]
    fn euler_examples() {
        let cc = build("A1(1)");
        assert_eq!(cc.euler_form(&qvec(&[0, 1]), &qvec(&[1, 0])), q(-2));
        assert_eq!(cc.euler_form(&qvec(&[1, 0]), &qvec(&[1, 0])), q(1));
    }

    #[test]
    fn tau_examples() {
        let cc = build("A1(1)");
        assert_eq!(cc.tau(&qvec(&[1, 0])).unwrap(), qvec(&[3, 2]));
        assert_eq!(cc.tau(cc.ctx.delta()).unwrap(), *cc.ctx.delta());
        let cc = build("D3(2)");
        for i in 0..3 {
            let neg = linalg::neg(&linalg::unit_vec(3, i));
            assert_eq!(cc.tau(&neg).unwrap(), cc.psi_to[i]);
        }
    }

    #[test]
    fn g2_tube() {
        let cc = build("G2(1)");
        assert_eq!(cc.tube.fin_simples, vec![qvec(&[1, 1, 0])]);
        let cc = build("D3(2)");
        assert_eq!(cc.tube.components.len(), 1);
        assert_eq!(cc.tube.components[0].rank(), 2);
    }

    #[test]
    fn source_sink_classes() {
        assert_eq!(source_sink_graph(&catalog_context("A1(1)").unwrap().0).classes, 1);
        assert_eq!(source_sink_graph(&catalog_context("A2(2)").unwrap().0).classes, 1);
        assert_eq!(source_sink_graph(&catalog_context("A2(1)").unwrap().0).classes, 2);
        let d = source_sink_graph(&catalog_context("D3(2)").unwrap().0);
        assert_eq!(d.classes, 1);
        assert_eq!(d.vertices.len(), 4);
        for n in 3..=8 {
            let g = source_sink_graph(&catalog_context(&format!("A{}(1)", n - 1)).unwrap().0);
            assert_eq!(g.classes, n - 1);
        }
    }

    #[test]
    fn sigma_basics() {
        let cc = build("A2(1):k=1");
        let m1 = qvec(&[-1, 0, 0]);
        assert_eq!(cc.sigma(1, &m1).unwrap(), m1);
        assert_eq!(cc.sigma(0, &m1).unwrap(), qvec(&[1, 0, 0]));
        assert!(cc.sigma(0, &qvec(&[1, -1, 0])).is_err());
    }
}
