//! The acceptance suite: ten exact checks with pass/fail lines, shared by the CLI and the test target.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::almost_positive::{self, phi_c_up_to_level, AlmostPositiveRoot, PhiCClass};
use crate::cartan::{catalog_context, catalog_labels};
use crate::cluster::{self, Cluster, ClusterCheck, ClusterKind, ExchangeResult, Explorer};
use crate::compat::{self, degree_fast};
use crate::coxeter::CoxeterContext;
use crate::error::Result;
use crate::linalg::{self, q, qr, qvec, Q, QVec};
use crate::oracle;
use crate::roots::RootVector;
use crate::svg;
use crate::table;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Outcome {
    pub fn line(&self) -> String {
        let budget = match self.budget {
            Some(b) => format!(" [budget {:.0?}]", b),
            None => String::new(),
        };
        format!(
            "[{}] {:>2}. {}: {} ({:.2?}{})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed,
            budget
        )
    }
}

pub const TITLES: [&str; 10] = [
    "worked example",
    "tube simples table",
    "compatibility axioms",
    "unique expansion",
    "cluster structure",
    "exchangeability",
    "A2(2) sanity",
    "oracle bridge",
    "denominator conjecture",
    "fan geometry",
];

pub fn context(label: &str) -> Result<CoxeterContext> {
    let (ctx, w) = catalog_context(label)?;
    CoxeterContext::build(&ctx, &w)
}

fn with_word(label: &str, word: &[usize]) -> Result<CoxeterContext> {
    let (ctx, _) = catalog_context(label)?;
    CoxeterContext::build(&ctx, word)
}

pub fn run(id: usize) -> Outcome {
    let start = Instant::now();
    let (budget, res): (Option<u64>, Result<(bool, String)>) = match id {
        1 => (None, criterion_1()),
        2 => (Some(5), criterion_2()),
        3 => (Some(60), criterion_3()),
        4 => (Some(120), criterion_4()),
        5 => (None, criterion_5()),
        6 => (None, criterion_6()),
        7 => (None, criterion_7()),
        8 => (Some(300), criterion_8()),
        9 => (Some(600), criterion_9()),
        10 => (None, criterion_10()),
        _ => (None, Ok((false, "no such criterion".into()))),
    };
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs);
    let (mut passed, mut detail) = match res {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str("; over time budget");
        }
    }
    Outcome { id, title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("?"), passed, detail, elapsed, budget }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=10).map(run).collect()
}

// 1 --------------------------------------------------------------------------

fn criterion_1() -> Result<(bool, String)> {
    let cc = context("D3(2)")?;
    let a = qvec(&[2, 1, 0]);
    let b = qvec(&[0, 1, 0]);
    let t = Instant::now();
    let (f, bk) = compat::compat_arrows(&cc, &a, &b)?;
    let d = compat::compatibility_degree(&cc, &a, &b)?.degree;
    let dt = t.elapsed();
    let ok = f == q(-1) && bk == q(1) && d == q(1) && dt < Duration::from_millis(1);
    Ok((ok, format!("arrows ({}, {}), degree {} in {:.0?}", f, bk, d, dt)))
}

// 2 --------------------------------------------------------------------------

fn criterion_2() -> Result<(bool, String)> {
    let labels = table::table_labels();
    let mut bad = Vec::new();
    for l in &labels {
        match table::check_label(l)? {
            Some(c) if c.ok() => {}
            _ => bad.push(l.clone()),
        }
    }
    Ok((bad.is_empty(), format!("{} types, mismatches: {:?}", labels.len(), bad)))
}

// 3 --------------------------------------------------------------------------

/// Checks base, cobase, tube, δ-tube, σ and τ over Φ_c at the given level; returns (pairs, failures).
pub fn axiom_check(cc: &CoxeterContext, level: u32) -> Result<(usize, Vec<String>)> {
    let phi = phi_c_up_to_level(cc, level);
    let n = cc.n();
    let delta = cc.ctx.delta().clone();
    let letters = [cc.initial(), cc.final_letter()];
    let conj: Vec<CoxeterContext> = letters.iter().map(|&s| cc.conjugate(s)).collect::<Result<_>>()?;
    let tau: Vec<RootVector> = phi.iter().map(|a| cc.tau(&a.vec)).collect::<Result<_>>()?;
    let sig: Vec<Vec<RootVector>> = letters
        .iter()
        .map(|&s| phi.iter().map(|a| cc.sigma(s, &a.vec)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut fails = Vec::new();
    let mut note = |m: String| {
        if fails.len() < 20 {
            fails.push(m)
        }
    };
    for a in &phi {
        let coroot = compat::coroot_for_compat(cc, &a.vec);
        for i in 0..n {
            let m = linalg::neg(&linalg::unit_vec(n, i));
            if degree_fast(cc, &m, &a.vec) != a.vec[i] {
                note(format!("base −α{} {}", i + 1, linalg::fmt_vec(&a.vec)));
            }
            if degree_fast(cc, &a.vec, &m) != coroot[i] {
                note(format!("cobase {} −α{}", linalg::fmt_vec(&a.vec), i + 1));
            }
        }
        if matches!(a.class, PhiCClass::Tube { .. })
            && (!degree_fast(cc, &delta, &a.vec).is_zero() || !degree_fast(cc, &a.vec, &delta).is_zero())
        {
            note(format!("delta-tube {}", linalg::fmt_vec(&a.vec)));
        }
    }
    let bad: Vec<String> = (0..phi.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let phi = &phi;
            let (tau, sig, conj) = (&tau, &sig, &conj);
            (0..phi.len()).filter_map(move |j| {
                let (a, b) = (&phi[i], &phi[j]);
                let d = degree_fast(cc, &a.vec, &b.vec);
                let tubes = matches!(a.class, PhiCClass::Tube { .. }) && matches!(b.class, PhiCClass::Tube { .. });
                if tubes && compat::compat_circ(cc, &a.vec, &b.vec).ok() != Some(d.clone()) {
                    return Some(format!("tube {} {}", linalg::fmt_vec(&a.vec), linalg::fmt_vec(&b.vec)));
                }
                if degree_fast(cc, &tau[i], &tau[j]) != d {
                    return Some(format!("tau {} {}", linalg::fmt_vec(&a.vec), linalg::fmt_vec(&b.vec)));
                }
                for k in 0..2 {
                    if degree_fast(&conj[k], &sig[k][i], &sig[k][j]) != d {
                        return Some(format!("sigma {} {}", linalg::fmt_vec(&a.vec), linalg::fmt_vec(&b.vec)));
                    }
                }
                None
            })
        })
        .collect();
    for b in bad {
        note(b);
    }
    Ok((phi.len() * phi.len(), fails))
}

fn criterion_3() -> Result<(bool, String)> {
    let labels = catalog_labels(4);
    let results: Vec<(String, usize, Vec<String>)> = labels
        .par_iter()
        .map(|l| {
            let cc = context(l)?;
            let (pairs, fails) = axiom_check(&cc, 3)?;
            Ok((l.clone(), pairs, fails))
        })
        .collect::<Result<_>>()?;
    let pairs: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<String> = results.iter().filter(|r| !r.2.is_empty()).map(|r| format!("{}: {}", r.0, r.2[0])).collect();
    Ok((bad.is_empty(), format!("{} types, {} ordered pairs at level 3, failures: {:?}", labels.len(), pairs, bad)))
}

// 4 --------------------------------------------------------------------------

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> QVec {
    (0..n).map(|_| qr(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()
}

/// Independent search: all maximal compatible subsets of Φ_c up to a level, with cone membership.
pub struct BruteFan<'a> {
    cc: &'a CoxeterContext,
    levels: BTreeMap<u32, Vec<Vec<RootVector>>>,
}

impl<'a> BruteFan<'a> {
    pub fn new(cc: &'a CoxeterContext) -> Self {
        BruteFan { cc, levels: BTreeMap::new() }
    }

    pub fn clusters(&mut self, level: u32) -> &Vec<Vec<RootVector>> {
        let cc = self.cc;
        self.levels.entry(level).or_insert_with(|| {
            let phi: Vec<AlmostPositiveRoot> = phi_c_up_to_level(cc, level);
            let m = phi.len();
            let adj: Vec<Vec<bool>> = (0..m)
                .into_par_iter()
                .map(|i| (0..m).map(|j| i != j && degree_fast(cc, &phi[i].vec, &phi[j].vec).is_zero()).collect())
                .collect();
            let n = cc.n();
            let mut out = Vec::new();
            let mut emit = |c: &[usize]| {
                let has_delta = c.iter().any(|&i| phi[i].class == PhiCClass::Delta);
                let want = if has_delta { n - 1 } else { n };
                if c.len() == want {
                    out.push(c.iter().map(|&i| phi[i].vec.clone()).collect());
                }
            };
            let mut chosen = Vec::new();
            cluster::cliques(&adj, 0, n - 1, &mut chosen, &mut emit);
            cluster::cliques(&adj, 0, n, &mut chosen, &mut emit);
            out
        })
    }

    /// Distinct (support → coefficient) maps of the cones containing v.
    pub fn containing(&mut self, level: u32, v: &[Q]) -> BTreeSet<Vec<(RootVector, Q)>> {
        let mut found = BTreeSet::new();
        for c in self.clusters(level) {
            if let Some(x) = linalg::coordinates(c, v) {
                if x.iter().all(|t| !t.is_negative()) {
                    let mut m: Vec<(RootVector, Q)> =
                        c.iter().cloned().zip(x).filter(|(_, t)| !t.is_zero()).collect();
                    m.sort();
                    found.insert(m);
                }
            }
        }
        found
    }
}

fn level_of(cc: &CoxeterContext, v: &[Q]) -> u32 {
    u32::try_from(cc.ctx.level(v).abs().ceil().to_integer()).unwrap_or(u32::MAX)
}

/// Validates `samples` random expansions against the brute-force fan; returns failure descriptions.
pub fn expansion_check(cc: &CoxeterContext, samples: usize, seed: u64) -> Result<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut brute = BruteFan::new(cc);
    let n = cc.n();
    let mut fails = Vec::new();
    for _ in 0..samples {
        let v = random_vector(&mut rng, n);
        let e = cluster::cluster_expansion(cc, &v)?;
        let support: Vec<RootVector> = e.keys().cloned().collect();
        let mut ok = e.len() <= n && e.values().all(|m| m.is_positive()) && cluster::expansion_sum(n, &e) == v;
        for a in &support {
            ok &= almost_positive::classify(cc, a).is_some();
            for b in &support {
                if a != b {
                    ok &= degree_fast(cc, a, b).is_zero();
                }
            }
        }
        let want: Vec<(RootVector, Q)> = e.iter().map(|(r, m)| (r.clone(), m.clone())).collect();
        let mut level = support.iter().map(|r| level_of(cc, r)).max().unwrap_or(0) + 1;
        let found = loop {
            let f = brute.containing(level, &v);
            if !f.is_empty() || level >= 64 {
                break f;
            }
            level *= 2;
        };
        if !ok || found.len() != 1 || found.iter().next() != Some(&want) {
            fails.push(format!("{} -> {} (brute force found {})", linalg::fmt_vec(&v), cluster::format_expansion(&e), found.len()));
        }
    }
    Ok(fails)
}

fn criterion_4() -> Result<(bool, String)> {
    let labels = catalog_labels(3);
    let results: Vec<(String, Vec<String>)> = labels
        .par_iter()
        .enumerate()
        .map(|(i, l)| Ok((l.clone(), expansion_check(&context(l)?, 500, 1000 + i as u64)?)))
        .collect::<Result<_>>()?;
    let bad: Vec<String> = results.iter().filter(|r| !r.1.is_empty()).map(|r| format!("{}: {}", r.0, r.1[0])).collect();
    Ok((bad.is_empty(), format!("{} types x 500 vectors, failures: {:?}", labels.len(), bad)))
}

// 5 --------------------------------------------------------------------------

fn gcd_of_maximal_minors(rows: &[RootVector]) -> Q {
    let n = rows[0].len();
    let k = rows.len();
    let mut g = num_bigint::BigInt::zero();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let m: Vec<QVec> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        let d = linalg::det(&m);
        g = g.gcd(d.numer());
        // next combination
        let mut i = k;
        while i > 0 && cols[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cols[i - 1] += 1;
        for j in i..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
    Q::from_integer(g)
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Structural checks on an enumeration; returns failure descriptions.
pub fn structure_check(cc: &CoxeterContext, set: &cluster::ClusterSet) -> Vec<String> {
    let n = cc.n();
    let mut fails = Vec::new();
    for c in &set.real {
        let d = linalg::det(&c.roots);
        let infinite = c
            .roots
            .iter()
            .filter(|r| matches!(almost_positive::classify(cc, r), Some(PhiCClass::NegativeSimple(_) | PhiCClass::Transient)))
            .count();
        if c.roots.len() != n || d.abs() != Q::one() || infinite < 2 {
            fails.push(format!("real {} det {}", c.label(), d));
        }
    }
    for c in &set.imaginary {
        let ok = c.roots.len() == n - 1
            && c.contains(cc.ctx.delta())
            && c.roots.iter().all(|r| cc.in_u_c(r))
            && c.roots.iter().all(|r| {
                matches!(almost_positive::classify(cc, r), Some(PhiCClass::Tube { .. } | PhiCClass::Delta))
            })
            && gcd_of_maximal_minors(&c.roots) == Q::one();
        if !ok {
            fails.push(format!("imaginary {}", c.label()));
        }
    }
    let expect: usize = cc.tube.ranks().iter().map(|&k| binom(2 * (k - 1), k - 1)).product();
    if set.imaginary.len() != expect {
        fails.push(format!("{} imaginary clusters, expected {}", set.imaginary.len(), expect));
    }
    fails
}

fn criterion_5() -> Result<(bool, String)> {
    let mut jobs: Vec<(String, usize)> = catalog_labels(3).into_iter().map(|l| (l, 6)).collect();
    jobs.extend(catalog_labels(4).into_iter().filter(|l| context(l).map(|c| c.n() == 4).unwrap_or(false)).map(|l| (l, 3)));
    let results: Vec<(String, usize, usize, Vec<String>)> = jobs
        .par_iter()
        .map(|(l, d)| {
            let cc = context(l)?;
            let set = cluster::enumerate_clusters(&cc, *d)?;
            Ok((l.clone(), set.real.len(), set.imaginary.len(), structure_check(&cc, &set)))
        })
        .collect::<Result<_>>()?;
    let d32 = results.iter().find(|r| r.0 == "D3(2)").map(|r| r.2);
    let bad: Vec<String> = results.iter().filter(|r| !r.3.is_empty()).map(|r| format!("{}: {}", r.0, r.3[0])).collect();
    let real: usize = results.iter().map(|r| r.1).sum();
    let imag: usize = results.iter().map(|r| r.2).sum();
    Ok((
        bad.is_empty() && d32 == Some(2),
        format!("{} types, {} real and {} imaginary clusters, D3(2) imaginary = {:?}, failures: {:?}", jobs.len(), real, imag, d32, bad),
    ))
}

// 6 --------------------------------------------------------------------------

/// Exchange-pair checks on an enumeration (real edges and tube walls); returns (edges, walls, failures).
pub fn exchange_check(cc: &CoxeterContext, set: &cluster::ClusterSet) -> Result<(usize, usize, Vec<String>)> {
    let mut fails = Vec::new();
    for e in &set.edges {
        let ok = degree_fast(cc, &e.alpha, &e.beta).is_one()
            && degree_fast(cc, &e.beta, &e.alpha).is_one()
            && !cluster::in_delta_relint(cc, &linalg::add(&e.alpha, &e.beta));
        if !ok {
            fails.push(format!("edge {} <-> {}", linalg::fmt_vec(&e.alpha), linalg::fmt_vec(&e.beta)));
        }
    }
    let ex = Explorer::new(cc);
    let mut walls = 0;
    for im in &set.imaginary {
        for a in im.roots.iter().filter(|r| *r != cc.ctx.delta()) {
            match ex.exchange(im, a)? {
                ExchangeResult::TubeWall { beta, cluster } => {
                    walls += 1;
                    let ok = compat::joint_support_full(cc, a, &beta)?
                        && cluster::in_delta_relint(cc, &linalg::add(a, &beta))
                        && degree_fast(cc, a, &beta).is_one()
                        && degree_fast(cc, &beta, a).is_one()
                        && cluster.kind == ClusterKind::Imaginary;
                    if !ok {
                        fails.push(format!("wall {} <-> {}", linalg::fmt_vec(a), linalg::fmt_vec(&beta)));
                    }
                }
                ExchangeResult::Real { .. } => fails.push(format!("imaginary facet left Δ_c at {}", linalg::fmt_vec(a))),
            }
        }
    }
    Ok((set.edges.len(), walls, fails))
}

fn rank3_labels() -> Vec<String> {
    catalog_labels(3).into_iter().filter(|l| context(l).map(|c| c.n() == 3).unwrap_or(false)).collect()
}

fn criterion_6() -> Result<(bool, String)> {
    let results: Vec<(String, usize, usize, Vec<String>)> = rank3_labels()
        .par_iter()
        .map(|l| {
            let cc = context(l)?;
            let set = cluster::enumerate_clusters(&cc, 6)?;
            let (e, w, f) = exchange_check(&cc, &set)?;
            Ok((l.clone(), e, w, f))
        })
        .collect::<Result<_>>()?;
    let bad: Vec<String> = results.iter().filter(|r| !r.3.is_empty()).map(|r| format!("{}: {}", r.0, r.3[0])).collect();
    let edges: usize = results.iter().map(|r| r.1).sum();
    let walls: usize = results.iter().map(|r| r.2).sum();
    Ok((bad.is_empty(), format!("{} exchange edges, {} tube walls, failures: {:?}", edges, walls, bad)))
}

// 7 --------------------------------------------------------------------------

fn criterion_7() -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for word in [[0usize, 1], [1, 0]] {
        let cc = with_word("A2(2)", &word)?;
        let d = cc.ctx.delta().clone();
        let m2 = qvec(&[0, -1]);
        let to = compat::compatibility_degree(&cc, &m2, &d)?.degree;
        let from = compat::compatibility_degree(&cc, &d, &m2)?.degree;
        let disabled = cluster::single_root_delta_test(&cc, &m2)?.is_none();
        let neg = Cluster::new(vec![qvec(&[-1, 0]), m2.clone()], ClusterKind::Real);
        let pair = cluster::is_cluster(&cc, &neg.roots) == ClusterCheck::Real
            && cluster::is_pair_exchangeable_with_delta(&cc, &qvec(&[-1, 0]), &m2)?;
        ok &= to == q(2) && disabled && pair;
        notes.push(format!("c={}: (−α2‖δ)={} (δ‖−α2)={}", cc.word_label(), to, from));
    }
    let cc = context("A4(2)")?;
    let d = cc.ctx.delta().clone();
    let (m1, m3) = (qvec(&[-1, 0, 0]), qvec(&[0, 0, -1]));
    let a2 = qvec(&[0, 1, 0]);
    let im = cluster::imaginary_clusters(&cc);
    let has_a2 = im.iter().any(|c| c.contains(&a2));
    let pair = cluster::is_pair_exchangeable_with_delta(&cc, &m1, &m3)?;
    let deg = compat::compatibility_degree(&cc, &m3, &d)?.degree;
    let disabled = cluster::single_root_delta_test(&cc, &m3)?.is_none();
    let real = cluster::is_cluster(&cc, &[m1.clone(), a2.clone(), m3.clone()]) == ClusterCheck::Real;
    ok &= has_a2 && pair && deg == q(2) && disabled && real;
    notes.push(format!("A4(2): {{−α1,−α3}} exchangeable with δ: {pair}, (−α3‖δ)={deg}, single-root test disabled: {disabled}"));
    Ok((ok, notes.join("; ")))
}

// 8 --------------------------------------------------------------------------

fn criterion_8() -> Result<(bool, String)> {
    let labels = catalog_labels(3);
    let reports: Vec<(String, oracle::BijectionReport)> = labels
        .par_iter()
        .map(|l| Ok((l.clone(), oracle::verify_bijection(&context(l)?, 8)?)))
        .collect::<Result<_>>()?;
    let bad: Vec<&String> = reports.iter().filter(|r| !r.1.ok()).map(|r| &r.0).collect();
    let vars: usize = reports.iter().map(|r| r.1.variables).sum();
    let seeds: usize = reports.iter().map(|r| r.1.seeds).sum();
    Ok((bad.is_empty(), format!("{} types, {} seeds, {} variables, failing types: {:?}", labels.len(), seeds, vars, bad)))
}

// 9 --------------------------------------------------------------------------

fn criterion_9() -> Result<(bool, String)> {
    let labels = rank3_labels();
    let reports: Vec<oracle::DenominatorReport> = labels
        .par_iter()
        .map(|l| oracle::denominator_check(&context(l)?, 4))
        .collect::<Result<_>>()?;
    let pairs: usize = reports.iter().map(|r| r.pairs_checked).sum();
    let matches: usize = reports.iter().map(|r| r.matches).sum();
    let rate = if pairs == 0 { 100.0 } else { 100.0 * matches as f64 / pairs as f64 };
    // a mismatch is a finding, not a failure of the suite
    Ok((true, format!("{} types, {}/{} pairs match ({:.1}%)", labels.len(), matches, pairs, rate)))
}

// 10 -------------------------------------------------------------------------

fn criterion_10() -> Result<(bool, String)> {
    let labels = catalog_labels(3);
    let results: Vec<(String, cluster::FanReport)> = labels
        .par_iter()
        .enumerate()
        .map(|(i, l)| {
            let cc = context(l)?;
            let set = cluster::enumerate_clusters(&cc, 4)?;
            let mut rng = ChaCha8Rng::seed_from_u64(77 + i as u64);
            let samples: Vec<QVec> = (0..50).map(|_| random_vector(&mut rng, cc.n())).collect();
            Ok((l.clone(), cluster::fan_consistency(&cc, &set, &samples)))
        })
        .collect::<Result<_>>()?;
    let bad: Vec<&String> = results.iter().filter(|r| !r.1.ok()).map(|r| &r.0).collect();
    let pairs: usize = results.iter().map(|r| r.1.pairs_checked).sum();
    let cc = context("D3(2)")?;
    let set = cluster::enumerate_clusters(&cc, 6)?;
    let p = svg::Projection::default();
    let text = svg::render_fan_svg(&cc, &set, &p)?;
    let cones = svg::project_real_cones(&cc, &set, &p)?;
    let central: Vec<usize> = cones.iter().filter(|c| c.contains((0.0, 0.0))).map(|c| c.cluster).collect();
    let smallest = cones.iter().skip(1).all(|c| c.area() > cones[0].area());
    let svg_ok = text.starts_with("<?xml")
        && text.contains("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"")
        && text.trim_end().ends_with("</svg>")
        && set.real[0].roots.iter().all(|r| linalg::all_nonpos(r));
    Ok((
        bad.is_empty() && central == vec![0] && smallest && svg_ok,
        format!(
            "{} types, {} cone pairs face-checked, failing: {:?}; D3(2) SVG central cone {:?} (−Π = 0), smallest: {}",
            labels.len(),
            pairs,
            bad,
            central,
            smallest
        ),
    ))
}

// ---------------------------------------------------------------------------

/// Type-specific checks for `verify --type`.
pub fn verify_type(cc: &CoxeterContext, label: Option<&str>) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    if let Some(l) = label {
        if let Some(t) = table::check_label(l)? {
            out.push((t.ok(), t.line()));
        }
    }
    let (pairs, fails) = axiom_check(cc, 2)?;
    out.push((fails.is_empty(), format!("compatibility axioms at level 2 ({pairs} pairs): {}", ok_word(fails.is_empty()))));
    let depth = if cc.n() <= 3 { 6 } else { 3 };
    let set = cluster::enumerate_clusters(cc, depth)?;
    let f = structure_check(cc, &set);
    out.push((f.is_empty(), format!("cluster structure at depth {depth} ({} real, {} imaginary): {}", set.real.len(), set.imaginary.len(), ok_word(f.is_empty()))));
    let (e, w, f) = exchange_check(cc, &set)?;
    out.push((f.is_empty(), format!("exchange pairs ({e} edges, {w} tube walls): {}", ok_word(f.is_empty()))));
    if cc.n() <= 4 {
        let f = expansion_check(cc, 100, 5)?;
        out.push((f.is_empty(), format!("cluster expansions (100 vectors): {}", ok_word(f.is_empty()))));
        let small = cluster::enumerate_clusters(cc, if cc.n() <= 3 { 4 } else { 2 })?;
        let r = cluster::fan_consistency(cc, &small, &[]);
        out.push((r.ok(), format!("fan face checks ({} pairs): {}", r.pairs_checked, ok_word(r.ok()))));
        let r = oracle::verify_bijection(cc, if cc.n() <= 3 { 6 } else { 4 })?;
        out.push((r.ok(), format!("oracle bridge ({} seeds): {}", r.seeds, ok_word(r.ok()))));
    }
    Ok(out)
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAILED"
    }
}
