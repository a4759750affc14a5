use affine_clusters::almost_positive::{phi_c_up_to_level, PhiCClass};
use affine_clusters::cartan::{catalog_context, catalog_labels};
use affine_clusters::compat::{self, compat_circ, compatibility_degree, degree_fast};
use affine_clusters::coxeter::CoxeterContext;
use affine_clusters::linalg::{self, q, Q};
use affine_clusters::roots;
use num_traits::{One, Zero};

fn contexts(max_rank: usize) -> Vec<(String, CoxeterContext)> {
    catalog_labels(max_rank)
        .into_iter()
        .map(|l| {
            let (ctx, w) = catalog_context(&l).unwrap();
            (l, CoxeterContext::build(&ctx, &w).unwrap())
        })
        .collect()
}

#[test]
fn axioms_level_two() {
    for (label, cc) in contexts(4) {
        let phi = phi_c_up_to_level(&cc, 2);
        let n = cc.n();
        let delta = cc.ctx.delta().clone();
        for a in &phi {
            let ac = compat::coroot_for_compat(&cc, &a.vec);
            for i in 0..n {
                let m = linalg::neg(&linalg::unit_vec(n, i));
                assert_eq!(degree_fast(&cc, &m, &a.vec), a.vec[i], "{label} base");
                assert_eq!(degree_fast(&cc, &a.vec, &m), ac[i], "{label} cobase");
            }
            if matches!(a.class, PhiCClass::Tube { .. }) {
                assert!(degree_fast(&cc, &delta, &a.vec).is_zero(), "{label}");
                assert!(degree_fast(&cc, &a.vec, &delta).is_zero(), "{label}");
            }
            for b in &phi {
                let d = degree_fast(&cc, &a.vec, &b.vec);
                if a.vec == b.vec {
                    let want = if a.class == PhiCClass::Delta { Q::zero() } else { -Q::one() };
                    assert_eq!(d, want, "{label}");
                } else {
                    assert!(d >= Q::zero(), "{label} {} {}", linalg::fmt_vec(&a.vec), linalg::fmt_vec(&b.vec));
                }
                if matches!(a.class, PhiCClass::Tube { .. }) && matches!(b.class, PhiCClass::Tube { .. }) {
                    assert_eq!(d, compat_circ(&cc, &a.vec, &b.vec).unwrap(), "{label} circ");
                }
                let ta = cc.tau(&a.vec).unwrap();
                let tb = cc.tau(&b.vec).unwrap();
                assert_eq!(d, degree_fast(&cc, &ta, &tb), "{label} tau");
                for s in [cc.initial(), cc.final_letter()] {
                    let scs = cc.conjugate(s).unwrap();
                    let sa = cc.sigma(s, &a.vec).unwrap();
                    let sb = cc.sigma(s, &b.vec).unwrap();
                    assert_eq!(d, compatibility_degree(&scs, &sa, &sb).unwrap().degree, "{label} sigma");
                }
            }
        }
    }
}

#[test]
fn symmetrization_and_inverse() {
    for (label, cc) in contexts(4) {
        let inv = cc.inverse().unwrap();
        let phi = phi_c_up_to_level(&cc, 2);
        let k = |v: &[Q]| cc.ctx.cartan.k(v, v);
        for a in &phi {
            for b in &phi {
                let d = degree_fast(&cc, &a.vec, &b.vec);
                assert_eq!(d, degree_fast(&inv, &a.vec, &b.vec), "{label} c vs c^-1");
                let exc = matches!(a.class, PhiCClass::Tube { .. })
                    && matches!(b.class, PhiCClass::Tube { .. })
                    && compat::joint_support_full(&cc, &a.vec, &b.vec).unwrap();
                if a.class != PhiCClass::Delta && b.class != PhiCClass::Delta && !exc {
                    let r = degree_fast(&cc, &b.vec, &a.vec);
                    assert_eq!(r, &d * k(&a.vec) / k(&b.vec), "{label} symmetrization");
                }
            }
        }
    }
}

#[test]
fn restriction_to_parabolics() {
    for (label, cc) in contexts(4) {
        let n = cc.n();
        let phi = phi_c_up_to_level(&cc, 2);
        for drop in 0..n {
            let idx: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
            let sub = cc.ctx.cartan.restrict(&idx);
            let word: Vec<usize> =
                cc.word.iter().filter(|&&w| w != drop).map(|&w| idx.iter().position(|&x| x == w).unwrap()).collect();
            let fin = affine_clusters::finite::FiniteCoxeter::new(&sub, &word);
            let members: Vec<_> = phi.iter().filter(|r| r.vec[drop].is_zero()).collect();
            // Φ_c ∩ Φ' = Φ'_{c'}
            let mut want: Vec<_> = fin.almost_positive().into_iter().map(|v| roots::embed(n, &idx, &v)).collect();
            let mut got: Vec<_> = members.iter().map(|r| r.vec.clone()).collect();
            want.sort();
            got.sort();
            assert_eq!(got, want, "{label} drop {drop}");
            for a in &members {
                for b in &members {
                    let pa = roots::project(&idx, &a.vec);
                    let pb = roots::project(&idx, &b.vec);
                    assert_eq!(degree_fast(&cc, &a.vec, &b.vec), fin.degree(&pa, &pb), "{label} restrict");
                }
            }
        }
    }
}

#[test]
fn duality() {
    for (label, cc) in contexts(4) {
        let dual = cc.dual().unwrap();
        let phi = phi_c_up_to_level(&cc, 2);
        let c = &cc.ctx.cartan;
        for a in &phi {
            for b in &phi {
                if a.class == PhiCClass::Delta || b.class == PhiCClass::Delta {
                    continue;
                }
                let d = degree_fast(&cc, &a.vec, &b.vec);
                let av = if a.vec.iter().all(|x| x <= &Q::zero()) { a.vec.clone() } else { roots::coroot_coords(c, &a.vec) };
                let bv = if b.vec.iter().all(|x| x <= &Q::zero()) { b.vec.clone() } else { roots::coroot_coords(c, &b.vec) };
                let dd = degree_fast(&dual, &bv, &av);
                let exc = matches!(a.class, PhiCClass::Tube { .. })
                    && matches!(b.class, PhiCClass::Tube { .. })
                    && compat::joint_support_full(&cc, &a.vec, &b.vec).unwrap();
                if exc {
                    assert!(d == q(1) || d == q(2), "{label}");
                    assert!(dd == q(1) || dd == q(2), "{label}");
                } else {
                    assert_eq!(d, dd, "{label} duality {} {}", linalg::fmt_vec(&a.vec), linalg::fmt_vec(&b.vec));
                }
            }
        }
    }
}
