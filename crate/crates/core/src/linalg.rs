//! Exact rational vectors and matrices.
//!
//! Everything here is dense and small (n is at most a dozen or so), so the
//! routines favour clarity over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Q = BigRational;
pub type QVec = Vec<Q>;
pub type QMat = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

pub fn zero_vec(n: usize) -> QVec {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVec {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn identity(n: usize) -> QMat {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn scale(s: &Q, a: &[Q]) -> QVec {
    a.iter().map(|x| s * x).collect()
}

/// a + s*b
pub fn axpy(a: &[Q], s: &Q, b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn all_nonneg(a: &[Q]) -> bool {
    a.iter().all(|x| !x.is_negative())
}

pub fn all_nonpos(a: &[Q]) -> bool {
    a.iter().all(|x| !x.is_positive())
}

pub fn is_integral(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> QVec {
    m.iter().map(|row| dot(row, v)).collect()
}

/// v^T m
pub fn vec_mat(v: &[Q], m: &[Vec<Q>]) -> QVec {
    let n = m.first().map_or(0, |r| r.len());
    (0..n)
        .map(|j| v.iter().zip(m).fold(Q::zero(), |acc, (x, row)| acc + x * &row[j]))
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> QMat {
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| (0..k).fold(Q::zero(), |acc, t| acc + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Q>]) -> QMat {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn bilinear(u: &[Q], m: &[Vec<Q>], v: &[Q]) -> Q {
    dot(u, &mat_vec(m, v))
}

pub fn int_matrix(a: &[Vec<i64>]) -> QMat {
    a.iter().map(|r| qvec(r)).collect()
}

/// Row echelon form in place; returns pivot columns.
fn echelon(m: &mut QMat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &[Vec<Q>]) -> usize {
    let mut m = a.to_vec();
    echelon(&mut m).len()
}

pub fn det(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    d
}

pub fn inverse(a: &[Vec<Q>]) -> Option<QMat> {
    let n = a.len();
    let mut aug: QMat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vec(n, i));
            r
        })
        .collect();
    let piv = echelon(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve m x = b; `None` if inconsistent. Free variables are set to zero.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<QVec> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: QMat = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = echelon(&mut aug);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = zero_vec(cols);
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right null space of m.
pub fn nullspace(m: &[Vec<Q>]) -> Vec<QVec> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut e = m.to_vec();
    let piv = echelon(&mut e);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(cols);
            v[f] = Q::one();
            for (r, &c) in piv.iter().enumerate() {
                v[c] = -e[r][f].clone();
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in terms of the (independent) columns `gens`, if `v` is in their span.
pub fn coordinates(gens: &[QVec], v: &[Q]) -> Option<QVec> {
    if gens.is_empty() {
        return if is_zero(v) { Some(vec![]) } else { None };
    }
    let n = v.len();
    let m: QMat = (0..n).map(|i| gens.iter().map(|g| g[i].clone()).collect()).collect();
    let x = solve(&m, v)?;
    let back = gens.iter().zip(&x).fold(zero_vec(n), |acc, (g, c)| axpy(&acc, c, g));
    if back == v {
        Some(x)
    } else {
        None
    }
}

/// Scale a rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Q]) -> QVec {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Positive definiteness via an exact LDL^T sweep of a symmetric matrix.
pub fn is_positive_definite(a: &[Vec<Q>]) -> bool {
    let n = a.len();
    let mut m = a.to_vec();
    for c in 0..n {
        if !m[c][c].is_positive() {
            return false;
        }
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    true
}

/// Positive semidefiniteness of a symmetric matrix: all principal minors nonnegative
/// is expensive, so use the pivoted LDL^T criterion instead.
pub fn is_positive_semidefinite(a: &[Vec<Q>]) -> bool {
    let n = a.len();
    let mut m = a.to_vec();
    let mut alive: Vec<usize> = (0..n).collect();
    while let Some(pos) = alive.iter().position(|&i| !m[i][i].is_zero()) {
        let c = alive[pos];
        if m[c][c].is_negative() {
            return false;
        }
        let inv = m[c][c].recip();
        alive.remove(pos);
        for &i in &alive {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for &j in &alive {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    // every remaining diagonal entry is zero; PSD forces the whole block to vanish
    alive.iter().all(|&i| alive.iter().all(|&j| m[i][j].is_zero()))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {t:?}"));
    if let Some((a, b)) = t.split_once('/') {
        let n: BigInt = a.trim().parse().map_err(|_| bad())?;
        let d: BigInt = b.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

pub fn parse_vec(s: &str) -> Result<QVec> {
    s.split(',').map(parse_q).collect()
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_q).collect();
    format!("({})", parts.join(","))
}

/// Floating approximation, used only for rendering.
pub fn to_f64(x: &Q) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Display wrapper for vectors.
pub struct V<'a>(pub &'a [Q]);

impl fmt::Display for V<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vec(self.0))
    }
}

/// A nonnegative solution of `a·x = b`, if one exists (phase-one simplex, Bland's rule).
pub fn nonneg_solution(a: &[Vec<Q>], b: &[Q]) -> Option<QVec> {
    let m = a.len();
    let k = a.first().map_or(0, |r| r.len());
    // tableau columns: k originals, m artificials, rhs
    let mut t: QMat = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let sgn = |x: &Q| if flip { -x.clone() } else { x.clone() };
            let mut row: QVec = a[i].iter().map(sgn).collect();
            row.extend((0..m).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row.push(sgn(&b[i]));
            row
        })
        .collect();
    let width = k + m + 1;
    let mut basis: Vec<usize> = (k..k + m).collect();
    // objective: minimise the sum of artificials, as reduced costs
    let reduced = |t: &QMat, basis: &[usize]| -> QVec {
        let mut c = vec![Q::zero(); width];
        for j in k..k + m {
            c[j] = Q::one();
        }
        for (i, &bj) in basis.iter().enumerate() {
            let cb = c[bj].clone();
            if !cb.is_zero() {
                for j in 0..width {
                    let d = &cb * &t[i][j];
                    c[j] -= d;
                }
            }
        }
        c
    };
    loop {
        let c = reduced(&t, &basis);
        let Some(enter) = (0..k + m).find(|&j| c[j].is_negative()) else { break };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave?;
        let piv = t[r][enter].clone();
        for j in 0..width {
            t[r][j] = &t[r][j] / &piv;
        }
        for i in 0..m {
            if i != r && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let d = &f * &t[r][j];
                    t[i][j] -= d;
                }
            }
        }
        basis[r] = enter;
    }
    let mut x = vec![Q::zero(); k + m];
    for (i, &bj) in basis.iter().enumerate() {
        x[bj] = t[i][width - 1].clone();
    }
    if x[k..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    x.truncate(k);
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonneg_feasibility() {
        let a = int_matrix(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let x = nonneg_solution(&a, &qvec(&[2, 3])).unwrap();
        assert_eq!(mat_vec(&a, &x), qvec(&[2, 3]));
        assert!(x.iter().all(|v| !v.is_negative()));
        assert!(nonneg_solution(&a, &qvec(&[-1, 3])).is_none());
        let b = int_matrix(&[vec![1, -1]]);
        assert!(nonneg_solution(&b, &qvec(&[0])).is_some());
    }

    #[test]
    fn inverse_and_det() {
        let m = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(det(&m), q(3));
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
    }

    #[test]
    fn nullspace_of_affine_a1() {
        let m = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        assert_eq!(primitive(&ns[0]), qvec(&[1, 1]));
    }

    #[test]
    fn semidefinite() {
        let k = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        assert!(is_positive_semidefinite(&k));
        assert!(!is_positive_definite(&k));
        let ind = int_matrix(&[vec![2, -3], vec![-3, 2]]);
        assert!(!is_positive_semidefinite(&ind));
    }

    #[test]
    fn parse_roundtrip() {
        let v = parse_vec("3/2,-1,0").unwrap();
        assert_eq!(v, vec![qr(3, 2), q(-1), q(0)]);
        assert_eq!(fmt_vec(&v), "(3/2,-1,0)");
        assert!(parse_q("1/0").is_err());
    }
}
