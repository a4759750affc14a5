//! Worked values, each recomputed here from first principles.

use affine_clusters::almost_positive::{self, Orbit, PhiCClass};
use affine_clusters::cartan::{catalog, catalog_context, classify, dual, validate_cartan, AffineContext, Kind};
use affine_clusters::cluster::{self, Cluster, ClusterKind, ExchangeResult};
use affine_clusters::coxeter::{source_sink_graph, CoxeterContext};
use affine_clusters::linalg::{self, q, qr, qvec, Q, QMat, QVec};
use affine_clusters::nu;
use affine_clusters::oracle::{self, Seed};
use affine_clusters::roots::{self, Parabolic};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ctx(label: &str) -> CoxeterContext {
    let (a, w) = catalog_context(label).unwrap();
    CoxeterContext::build(&a, &w).unwrap()
}

fn a11() -> CoxeterContext {
    ctx("A1(1)")
}

fn matmul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// s_i(v) = v − ⟨α_i^∨, v⟩ α_i with ⟨α_i^∨, α_j⟩ = a_ij.
fn reflect(a: &[Vec<i64>], i: usize, v: &[Q]) -> QVec {
    let pairing: Q = (0..v.len()).map(|j| q(a[i][j]) * &v[j]).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

fn reflection_matrix(a: &[Vec<i64>], i: usize) -> QMat {
    let n = a.len();
    let cols: Vec<QVec> = (0..n).map(|j| reflect(a, i, &linalg::unit_vec(n, j))).collect();
    (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
}

#[test]
fn symmetrizer_by_constraint_propagation() {
    let a = vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]];
    let c = validate_cartan(&a).unwrap();
    // d_0 = 1, then d_j = d_i a_ij / a_ji along the path 0 - 1 - 2
    let mut d = vec![q(1), Q::zero(), Q::zero()];
    d[1] = &d[0] * q(a[0][1]) / q(a[1][0]);
    d[2] = &d[1] * q(a[1][2]) / q(a[2][1]);
    let lib = c.d();
    let ratio = &lib[0] / &d[0];
    for i in 0..3 {
        assert_eq!(&lib[i], &(&d[i] * &ratio));
    }
    assert_eq!(&lib[1] / &lib[0], q(2));
    assert_eq!(&lib[2] / &lib[0], q(1));
}

#[test]
fn kronecker_delta_is_the_kernel() {
    let c = validate_cartan(&[vec![2, -2], vec![-2, 2]]).unwrap();
    let cl = classify(&c);
    assert_eq!(cl.kind, Kind::Affine);
    let delta = cl.affine.unwrap().delta;
    assert_eq!(delta, qvec(&[1, 1]));
    for row in c.entries() {
        let s: Q = row.iter().zip(&delta).map(|(x, d)| q(*x) * d).sum();
        assert!(s.is_zero());
    }
}

#[test]
fn d32_matrix_and_dual() {
    let e = catalog("D3(2)").unwrap();
    assert_eq!(e.cartan, vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
    let c = validate_cartan(&e.cartan).unwrap();
    let t = dual(&c);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(t.a(i, j), c.a(j, i));
        }
    }
    assert_eq!(classify(&t).kind, Kind::Affine);
}

#[test]
fn reflections_and_levels() {
    let cc = a11();
    let a = cc.ctx.cartan.entries().to_vec();
    let mine = reflect(&a, 1, &qvec(&[1, 0]));
    assert_eq!(mine, qvec(&[1, 2]));
    assert_eq!(roots::simple_reflection(&cc.ctx.cartan, 1, &qvec(&[1, 0])).unwrap(), mine);
    let level1: Vec<QVec> = roots::roots_up_to_level(&cc.ctx, 1).into_iter().map(|r| r.vec).collect();
    assert!(level1.contains(&qvec(&[1, 1])));
    assert!(level1.contains(&qvec(&[2, 1])));
}

#[test]
fn d32_parabolic_is_finite() {
    let cc = ctx("D3(2)");
    match roots::parabolic_restriction(&cc.ctx, &[0, 1]).unwrap() {
        Parabolic::Finite { cartan, .. } => {
            // symmetrized 2x2 block: positive diagonal and positive determinant
            let k = cartan.gram();
            assert!(k[0][0] > Q::zero());
            assert!(&k[0][0] * &k[1][1] - &k[0][1] * &k[1][0] > Q::zero());
        }
        Parabolic::Affine(_) => panic!("proper parabolic must be finite"),
    }
}

#[test]
fn coxeter_matrix_from_reflections() {
    let cc = a11();
    let a = cc.ctx.cartan.entries().to_vec();
    let c = matmul(&reflection_matrix(&a, 0), &reflection_matrix(&a, 1));
    let want = vec![qvec(&[3, -2]), qvec(&[2, -1])];
    assert_eq!(c, want);
    assert_eq!(cc.c_matrix, want);
    // −E_{c⁻¹}⁻¹ E_c
    let e_inv = linalg::inverse(&cc.e_cinv).unwrap();
    let neg: QMat = matmul(&e_inv, &cc.e_c).iter().map(|r| linalg::neg(r)).collect();
    assert_eq!(neg, want);
    assert_eq!(cc.tau(&qvec(&[1, 0])).unwrap(), qvec(&[3, 2]));
}

#[test]
fn sigma_is_an_involution_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for label in ["A2(1)", "D3(2)", "G2(1)", "C2(1)"] {
        let cc = ctx(label);
        let phi = almost_positive::phi_c_up_to_level(&cc, 3);
        let s = cc.initial();
        let back = cc.conjugate(s).unwrap();
        for _ in 0..25 {
            let b = &phi[rng.gen_range(0..phi.len())].vec;
            let img = cc.sigma(s, b).unwrap();
            assert_eq!(&back.sigma(s, &img).unwrap(), b, "{label}");
        }
    }
}

#[test]
fn d32_tube_orbits() {
    let cc = ctx("D3(2)");
    assert_eq!(cc.tube.ranks(), vec![2]);
    let tubes = almost_positive::tube_roots(&cc);
    let simples: Vec<QVec> =
        tubes.iter().filter(|t| matches!(t.class, PhiCClass::Tube { len: 1, .. })).map(|t| t.vec.clone()).collect();
    assert_eq!(simples.len(), 2);
    for b in &simples {
        let once = cc.tau(b).unwrap();
        assert_ne!(&once, b);
        assert_eq!(&cc.tau(&once).unwrap(), b);
        assert!(matches!(almost_positive::orbit_classification(&cc, b).unwrap(), Orbit::Finite { size: 2, .. }));
    }
    assert_eq!(source_sink_graph(&cc.ctx).classes, 1);
}

#[test]
fn kronecker_psi_sets() {
    let cc = a11();
    let a = cc.ctx.cartan.entries().to_vec();
    let got: Vec<QVec> = almost_positive::enumerate_phi_c(&cc, 0).into_iter().map(|r| r.vec).collect();
    let mut want = vec![qvec(&[-1, 0]), qvec(&[0, -1]), qvec(&[1, 0]), reflect(&a, 0, &qvec(&[0, 1])), reflect(&a, 1, &qvec(&[1, 0])), qvec(&[0, 1]), qvec(&[1, 1])];
    want.sort();
    want.dedup();
    let mut g = got.clone();
    g.sort();
    g.dedup();
    assert_eq!(g, want);
}

#[test]
fn kronecker_exchange_and_expansion() {
    let cc = a11();
    let start = Cluster::new(vec![qvec(&[-1, 0]), qvec(&[0, -1])], ClusterKind::Real);
    match cluster::exchange(&cc, &start, &qvec(&[-1, 0])).unwrap() {
        ExchangeResult::Real { beta, .. } => assert_eq!(beta, qvec(&[1, 0])),
        other => panic!("{other:?}"),
    }
    let e = cluster::cluster_expansion(&cc, &qvec(&[1, -1])).unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e[&qvec(&[1, 0])], Q::one());
    assert_eq!(e[&qvec(&[0, -1])], Q::one());
    assert!(cluster::is_exchangeable(&cc, &qvec(&[-1, 0]), &qvec(&[1, 0])).unwrap());
    assert!(cluster::is_real_exchangeable(&cc, &qvec(&[-1, 0]), &qvec(&[1, 0])).unwrap());
    // −Π and {α1, −α2} share exactly the −α2 ray
    let a = vec![qvec(&[-1, 0]), qvec(&[0, -1])];
    let b = vec![qvec(&[1, 0]), qvec(&[0, -1])];
    assert!(cluster::cones_meet_in_face(&a, &b));
}

#[test]
fn kronecker_mutation_nu_and_g() {
    let cc = a11();
    let b = oracle::exchange_matrix_for(&cc);
    assert_eq!(b, vec![vec![0, 2], vec![-2, 0]]);
    assert_eq!(oracle::matrix_mutation(&b, 0), vec![vec![0, -2], vec![2, 0]]);
    let s = Seed::principal(&b).mutate(0, 1000).unwrap();
    assert_eq!(oracle::format_variable(&s.cluster[0], 2), "x1^-1*x2^2 + x1^-1*y1");
    assert_eq!(s.d_vector(0), vec![1, 0]);
    let g = s.g_vector(0, &b).unwrap();
    assert_eq!(g, vec![-1, 2]);
    // −E_c(α_i^∨, α_1): E_c has a_21 = −2 below the diagonal for c = s1 s2
    let own: QVec = (0..2).map(|i| -cc.e_c[i][0].clone()).collect();
    assert_eq!(own, qvec(&[-1, 2]));
    assert_eq!(nu::nu_c(&cc, &qvec(&[1, 0])), own);
}

#[test]
fn source_sink_mutation_transports_d_vectors() {
    for label in ["A2(1)", "D3(2)", "B2(1)"] {
        let cc = match catalog_context(label) {
            Ok((a, w)) => CoxeterContext::build(&a, &w).unwrap(),
            Err(_) => continue,
        };
        let n = cc.n();
        let s = cc.initial();
        let conj = cc.conjugate(s).unwrap();
        let b = oracle::exchange_matrix_for(&cc);
        let b2 = oracle::matrix_mutation(&b, s);
        assert_eq!(b2, oracle::exchange_matrix_for(&conj), "{label}");
        let mut paths: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for p in &paths {
                for k in 0..n {
                    if p.last() != Some(&k) {
                        let mut q2 = p.clone();
                        q2.push(k);
                        next.push(q2);
                    }
                }
            }
            paths.extend(next);
            paths.sort();
            paths.dedup();
        }
        for p in &paths {
            let mut x = Seed::coefficient_free(&b);
            for &k in p {
                x = x.mutate(k, 100_000).unwrap();
            }
            let mut y = Seed::coefficient_free(&b2).mutate(s, 100_000).unwrap();
            for &k in p {
                y = y.mutate(k, 100_000).unwrap();
            }
            for slot in 0..n {
                let d = oracle::to_q(&x.d_vector(slot));
                let d2 = oracle::to_q(&y.d_vector(slot));
                assert_eq!(cc.sigma(s, &d).unwrap(), d2, "{label} path {p:?} slot {slot}");
            }
        }
    }
}

#[test]
fn rescaled_rationals_parse() {
    assert_eq!(linalg::parse_vec("3/2,-1,0").unwrap(), vec![qr(3, 2), q(-1), q(0)]);
    let _ = AffineContext::from_raw(&[vec![2, -2], vec![-2, 2]], None).unwrap();
}
