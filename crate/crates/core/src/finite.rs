//! Finite-type counterparts used for parabolic subsystems: almost positive roots,
//! compatibility degrees and cluster expansions.

use std::collections::BTreeMap;

use crate::cartan::CartanMatrix;
use crate::compat;
use crate::linalg::{self, Q, QVec};
use crate::roots;

#[derive(Clone, Debug)]
pub struct FiniteCoxeter {
    pub cartan: CartanMatrix,
    pub word: Vec<usize>,
    pos: Vec<usize>,
}

impl FiniteCoxeter {
    pub fn new(cartan: &CartanMatrix, word: &[usize]) -> FiniteCoxeter {
        let mut pos = vec![0; word.len()];
        for (p, &w) in word.iter().enumerate() {
            pos[w] = p;
        }
        FiniteCoxeter { cartan: cartan.clone(), word: word.to_vec(), pos }
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    /// −Π ∪ Φ^+.
    pub fn almost_positive(&self) -> Vec<QVec> {
        let n = self.n();
        let mut out: Vec<QVec> = (0..n).map(|i| linalg::neg(&linalg::unit_vec(n, i))).collect();
        out.extend(roots::finite_positive_roots(&self.cartan));
        out
    }

    pub fn arrows(&self, alpha: &[Q], beta: &[Q]) -> (Q, Q) {
        let u = roots::coroot_coords(&self.cartan, alpha);
        compat::arrows_raw(&self.cartan, &self.pos, &u, beta)
    }

    pub fn degree(&self, alpha: &[Q], beta: &[Q]) -> Q {
        let (f, b) = self.arrows(alpha, beta);
        f.max(b)
    }

    /// Cluster expansion of `v`.
    pub fn expand(&self, v: &[Q]) -> BTreeMap<QVec, Q> {
        crate::cluster::expand_finite(&self.cartan, &self.word, v).expect("finite expansion terminates")
    }
}
