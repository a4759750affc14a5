//! Sparse Laurent polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Laurent {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Laurent {
        Laurent::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Laurent {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Laurent { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Laurent {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Laurent::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c);
        }
        Laurent { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut acc: HashMap<Exponent, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Laurent { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Laurent {
        let mut out = Laurent::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn shift(&self, by: &[i32]) -> Laurent {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Laurent { nvars: self.nvars, terms }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exponent {
        let mut out = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (o, x) in out.iter_mut().zip(e) {
                *o = (*o).min(*x);
            }
        }
        if self.terms.is_empty() {
            out.iter_mut().for_each(|o| *o = 0);
        }
        out
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Exact quotient `self / d`; `NonExactDivision` if it is not a Laurent polynomial.
    pub fn div_exact(&self, d: &Laurent) -> Result<Laurent> {
        if d.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let md: Exponent = d.min_exponents();
        let mn: Exponent = self.min_exponents();
        let dn = d.shift(&md.iter().map(|x| -x).collect::<Vec<_>>());
        let mut rem = self.shift(&mn.iter().map(|x| -x).collect::<Vec<_>>()).terms;
        let (lead_e, lead_c) = dn.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut quot: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exponent = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|x| *x < 0) {
                return Err(Error::NonExactDivision);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (de, dc) in &dn.terms {
                let te: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                add_term(&mut rem, te, &(-(dc * &qc)));
            }
            add_term(&mut quot, qe, &qc);
        }
        // self = (N'/x^{-mn}) and d = (D'/x^{-md}), so the quotient picks up x^{mn - md}
        let back: Vec<i32> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
        Ok(Laurent { nvars: self.nvars, terms: quot }.shift(&back))
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| if *x == 1 { names[i].clone() } else { format!("{}^{}", names[i], x) })
                .collect();
            let body = mono.join("*");
            parts.push(match (c.is_one(), body.is_empty()) {
                (_, true) => c.to_string(),
                (true, false) => body,
                (false, false) => format!("{c}*{body}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn add_term(terms: &mut BTreeMap<Exponent, BigInt>, e: Exponent, c: &BigInt) {
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c.clone());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division() {
        let x = Laurent::var(3, 0);
        let y = Laurent::var(3, 1);
        let z = Laurent::var(3, 2);
        let a = x.add(&y.pow(2)).add(&z);
        let b = y.add(&Laurent::one(3)).mul(&z.pow(3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(a.div_exact(&b).is_err());
        let inv = Laurent::monomial(vec![-2, 0, -1], BigInt::from(3));
        let q = a.mul(&inv);
        assert_eq!(q.div_exact(&a).unwrap(), inv);
        assert_eq!(q.div_exact(&inv).unwrap(), a);
    }
}
