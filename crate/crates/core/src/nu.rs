//! The piecewise-linear map ν_c : V → V* (weights in fundamental-weight coordinates) and its inverse.

use num_traits::{Signed, Zero};

use crate::coxeter::CoxeterContext;
use crate::linalg::{self, Q, QMat, QVec};

pub fn nu_c(cc: &CoxeterContext, beta: &[Q]) -> QVec {
    nu_with(&cc.e_c, beta)
}

/// `e[i][j]` = E_c(α_i^∨, α_j). On the orthant with negative set I this is β ↦ −β_I − E_c β_+,
/// the E_c term taken over every index so that the pieces glue continuously.
pub fn nu_with(e: &QMat, beta: &[Q]) -> QVec {
    let plus: QVec = beta.iter().map(|b| if b.is_negative() { Q::zero() } else { b.clone() }).collect();
    beta.iter()
        .zip(e)
        .map(|(b, row)| {
            let lin = -linalg::dot(row, &plus);
            if b.is_negative() {
                lin - b
            } else {
                lin
            }
        })
        .collect()
}

/// Inverse of ν_c, solved orthant by orthant.
pub fn nu_c_inverse(cc: &CoxeterContext, w: &[Q]) -> QVec {
    nu_inverse_with(&cc.e_c, w)
}

pub fn nu_inverse_with(e: &QMat, w: &[Q]) -> QVec {
    let n = w.len();
    for mask in 0u32..(1 << n) {
        let neg: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let pos: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let mut beta = vec![Q::zero(); n];
        if !pos.is_empty() {
            let sub: QMat = pos.iter().map(|&i| pos.iter().map(|&j| e[i][j].clone()).collect()).collect();
            let rhs: QVec = pos.iter().map(|&i| -w[i].clone()).collect();
            let Some(x) = linalg::solve(&sub, &rhs) else { continue };
            if x.iter().any(|v| v.is_negative()) {
                continue;
            }
            for (t, &i) in pos.iter().enumerate() {
                beta[i] = x[t].clone();
            }
        }
        let mut ok = true;
        for &i in &neg {
            let lin: Q = pos.iter().map(|&j| &e[i][j] * &beta[j]).sum();
            beta[i] = -(w[i].clone() + lin);
            ok &= beta[i].is_negative();
        }
        if ok {
            return beta;
        }
    }
    unreachable!("ν_c is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;
    use crate::linalg::qvec;

    #[test]
    fn examples() {
        let (ctx, w) = catalog_context("A1(1):k=1").unwrap();
        let cc = CoxeterContext::build(&ctx, &w).unwrap();
        assert_eq!(nu_c(&cc, &qvec(&[1, 0])), qvec(&[-1, 2]));
        assert_eq!(nu_c(&cc, &qvec(&[-1, 0])), qvec(&[1, 0]));
        assert_eq!(nu_c(&cc, &qvec(&[1, -1])), qvec(&[-1, 3]));
        assert_eq!(nu_c(&cc, &qvec(&[1, 1])), qvec(&[-1, 1]));
        for v in [qvec(&[1, 0]), qvec(&[-3, 2]), qvec(&[0, 0]), qvec(&[-1, -5]), qvec(&[4, -1])] {
            assert_eq!(nu_c_inverse(&cc, &nu_c(&cc, &v)), v);
        }
    }
}
