//! The published finite tube simples Π̃_fin,c for c = s_1 ⋯ s_n in the catalog types.

use std::collections::BTreeSet;

use crate::cartan::catalog_context;
use crate::coxeter::CoxeterContext;
use crate::error::Result;
use crate::linalg::{q, zero_vec, Q, QVec};

fn root(n: usize, terms: &[(usize, i64)]) -> QVec {
    let mut v = zero_vec(n);
    for &(i, c) in terms {
        v[i - 1] += q(c);
    }
    v
}

fn run(lo: usize, hi: usize) -> Vec<(usize, i64)> {
    (lo..=hi).map(|i| (i, 1)).collect()
}

/// Expected Π̃_fin,c for a catalog label of untwisted type; `None` if the label is not tabulated.
pub fn expected_fin_simples(label: &str) -> Option<Vec<QVec>> {
    let lab = crate::cartan::parse_label(label).ok()?;
    use crate::cartan::Family::*;
    if lab.twist != 1 {
        return None;
    }
    let n = lab.l + 1;
    let rows: Vec<Vec<(usize, i64)>> = match lab.family {
        A => (1..=n - 2).map(|j| vec![(j + 1, 1)]).collect(),
        B => {
            let mut r: Vec<_> = (1..=n - 3).map(|j| vec![(j + 1, 1)]).collect();
            r.push(run(1, n - 1));
            r
        }
        C => (1..=n - 2).map(|j| vec![(j + 1, 1)]).collect(),
        D => {
            let mut r: Vec<_> = (1..=n - 4).map(|j| vec![(j + 2, 1)]).collect();
            r.push([vec![(1, 1)], run(3, n - 1)].concat());
            r.push([vec![(2, 1)], run(3, n - 1)].concat());
            r
        }
        E if n == 7 => vec![
            vec![(4, 1), (5, 1)],
            vec![(1, 1), (2, 1), (5, 1), (6, 1)],
            vec![(2, 1), (5, 1)],
            vec![(3, 1), (4, 1), (5, 1), (6, 1)],
            vec![(2, 1), (4, 1), (5, 1), (6, 1)],
        ],
        E if n == 8 => vec![
            vec![(4, 1), (5, 1)],
            vec![(1, 1), (5, 1), (6, 1)],
            run(2, 7),
            run(3, 6),
            [vec![(1, 1)], run(4, 7)].concat(),
            [vec![(1, 1), (5, 1)], run(3, 7)].concat(),
        ],
        E if n == 9 => vec![
            run(3, 5),
            [vec![(1, 1)], run(4, 6)].concat(),
            run(2, 7),
            [vec![(1, 1)], run(3, 8)].concat(),
            [vec![(1, 1), (4, 1)], run(3, 7)].concat(),
            [vec![(4, 1), (5, 1)], run(1, 8)].concat(),
            [vec![(4, 1)], run(3, 6), run(1, 8)].concat(),
        ],
        F => vec![vec![(2, 1), (3, 1)], run(1, 4), vec![(2, 2), (3, 1), (4, 1)]],
        G => vec![vec![(1, 1), (2, 1)]],
        _ => return None,
    };
    Some(rows.iter().map(|t| root(n, t)).collect())
}

/// Labels covered by the table: A^(1) for n ≤ 8 with every k, B/C/D^(1) for n ≤ 7, E, F, G.
pub fn table_labels() -> Vec<String> {
    let mut out = Vec::new();
    for n in 3..=8 {
        for k in 1..n {
            out.push(format!("A{}(1):k={k}", n - 1));
        }
    }
    out.extend((4..=7).map(|n| format!("B{}(1)", n - 1)));
    out.extend((3..=7).map(|n| format!("C{}(1)", n - 1)));
    out.extend((5..=7).map(|n| format!("D{}(1)", n - 1)));
    out.extend(["E6(1)", "E7(1)", "E8(1)", "F4(1)", "G2(1)"].map(String::from));
    out
}

/// `α1+α2`, `2α2+α3+α4`, ...
pub fn format_simple_combination(v: &[Q]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if *c == q(0) {
            continue;
        }
        let coeff = if *c == q(1) {
            String::new()
        } else if *c == q(-1) {
            "-".into()
        } else {
            c.to_string()
        };
        parts.push(format!("{coeff}α{}", i + 1));
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join("+").replace("+-", "-")
}

#[derive(Clone, Debug)]
pub struct TableCheck {
    pub label: String,
    pub computed: BTreeSet<QVec>,
    pub expected: BTreeSet<QVec>,
}

impl TableCheck {
    pub fn ok(&self) -> bool {
        self.computed == self.expected
    }

    pub fn line(&self) -> String {
        let set: Vec<String> = self.computed.iter().map(|v| format_simple_combination(v)).collect();
        format!("Π̃_fin = {{{}}}: {}", set.join(", "), if self.ok() { "OK" } else { "MISMATCH" })
    }
}

pub fn check_label(label: &str) -> Result<Option<TableCheck>> {
    let Some(expected) = expected_fin_simples(label) else { return Ok(None) };
    let (ctx, w) = catalog_context(label)?;
    let cc = CoxeterContext::build(&ctx, &w)?;
    Ok(Some(TableCheck {
        label: label.to_string(),
        computed: cc.tube.fin_simples.iter().cloned().collect(),
        expected: expected.into_iter().collect(),
    }))
}
