use affine_clusters::cartan::{catalog_context, catalog_labels};
use affine_clusters::coxeter::{source_sink_graph, CoxeterContext};
use affine_clusters::linalg::{self, q, Q};
use affine_clusters::roots;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn contexts(max_rank: usize) -> Vec<(String, CoxeterContext)> {
    catalog_labels(max_rank)
        .into_iter()
        .map(|l| {
            let (ctx, w) = catalog_context(&l).unwrap();
            let cc = CoxeterContext::build(&ctx, &w).unwrap();
            (l, cc)
        })
        .collect()
}

#[test]
fn phi_separates_transversals() {
    for (label, cc) in contexts(7) {
        assert!(cc.phi(cc.ctx.delta()).is_zero(), "{label}");
        for j in 0..cc.n() {
            assert!(cc.phi(&cc.psi_to[j]).is_positive(), "{label}");
            assert!(cc.phi(&cc.psi_from[j]).is_negative(), "{label}");
        }
        let cg = cc.c(&cc.gamma);
        assert_eq!(linalg::sub(&cg, &cc.gamma), *cc.ctx.delta(), "{label}");
        assert!(cc.gamma[cc.ctx.aff()].is_zero());
    }
}

#[test]
fn tube_components_rotate() {
    for (label, cc) in contexts(7) {
        assert_eq!(cc.tube.fin_simples.len(), cc.n() - 2, "{label}");
        for comp in &cc.tube.components {
            let k = comp.rank();
            let total = comp.arc_sum(0, k);
            assert_eq!(
                total,
                linalg::scale(&q(comp.delta_multiple as i64), cc.ctx.delta()),
                "{label}"
            );
            for j in 0..k {
                assert_eq!(cc.c(&comp.simples[j]), comp.simples[(j + 1) % k], "{label}");
            }
        }
        for (b, &k) in cc.tube.omega.iter().zip(&cc.tube.kappa) {
            let v = linalg::sub(&linalg::scale(&q(k as i64), cc.ctx.delta()), b);
            assert!(roots::is_real_root(&cc.ctx.cartan, &v));
            for smaller in 1..k {
                let w = linalg::sub(&linalg::scale(&q(smaller as i64), cc.ctx.delta()), b);
                assert!(!roots::is_real_root(&cc.ctx.cartan, &w));
            }
        }
    }
}

#[test]
fn euler_form_on_roots_and_tubes() {
    for (label, cc) in contexts(5) {
        let c = &cc.ctx.cartan;
        for b in roots::affine_positive_real_roots(&cc.ctx, &q(2)) {
            let bc = roots::coroot_coords(c, &b);
            assert!(cc.euler_form(&bc, &b).is_one(), "{label}");
        }
        let dc = cc.ctx.data.delta_check_coroot(c);
        for b in roots::affine_positive_real_roots(&cc.ctx, &q(2)) {
            if cc.in_u_c(&b) {
                let bc = roots::coroot_coords(c, &b);
                assert!(cc.euler_form(&bc, cc.ctx.delta()).is_zero(), "{label}");
                assert!(cc.euler_form(&dc, &b).is_zero(), "{label}");
            }
        }
        for comp in &cc.tube.components {
            let k = comp.rank();
            for (i, b) in comp.simples.iter().enumerate() {
                let bc = roots::coroot_coords(c, b);
                for (j, b2) in comp.simples.iter().enumerate() {
                    let e = cc.euler_form(&bc, b2);
                    let want = if i == j {
                        Q::one()
                    } else if k > 1 && (j + 1) % k == i && cc.c_inv(b) == *b2 {
                        -Q::one()
                    } else {
                        Q::zero()
                    };
                    if k == 2 && i != j {
                        // both neighbours coincide in a 2-cycle
                        assert_eq!(e, -Q::one(), "{label}");
                    } else {
                        assert_eq!(e, want, "{label}");
                    }
                }
            }
        }
    }
}

#[test]
fn phi_sign() {
    for (label, cc) in contexts(6) {
        let n = cc.n();
        let d = cc.ctx.delta();
        let mut w = linalg::zero_vec(n);
        let a = |i: usize, j: usize| q(cc.ctx.cartan.a(i, j));
        for i in 0..n {
            for j in 0..n {
                if cc.position(i) < cc.position(j) {
                    w[i] += &d[j] * a(i, j);
                    w[j] -= &d[i] * a(j, i);
                }
            }
        }
        let phi = cc.phi_weight();
        let idx = (0..n).find(|&i| !w[i].is_zero()).unwrap();
        let ratio = &phi[idx] / &w[idx];
        assert!(ratio.is_negative(), "{label}");
        assert_eq!(phi, linalg::scale(&ratio, &w), "{label}");
    }
}

#[test]
fn conjugation_transports_tube_simples() {
    for (label, cc) in contexts(5) {
        for s in [cc.initial(), cc.final_letter()] {
            let scs = cc.conjugate(s).unwrap();
            let mut a: Vec<_> = cc
                .tube
                .simples()
                .iter()
                .map(|b| roots::reflect(&cc.ctx.cartan, s, b))
                .collect();
            let mut b = scs.tube.simples();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{label}");
        }
    }
}

#[test]
fn source_sink_class_counts() {
    for n in 3..=7 {
        let (ctx, _) = catalog_context(&format!("A{}(1)", n - 1)).unwrap();
        assert_eq!(source_sink_graph(&ctx).classes, n - 1);
    }
    for label in ["D3(2)", "G2(1)", "C2(1)", "A4(2)", "B3(1)", "D4(1)"] {
        let (ctx, _) = catalog_context(label).unwrap();
        assert_eq!(source_sink_graph(&ctx).classes, 1, "{label}");
    }
}

fn small_vec(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-6i64..=6, 1i64..=3), n).prop_map(|v| v.into_iter().map(|(a, b)| linalg::qr(a, b)).collect())
}

proptest! {
    #[test]
    fn euler_identities(u in small_vec(4), v in small_vec(4), which in 0usize..3) {
        let label = ["B3(1)", "A3(1):k=2", "D4(2)"][which];
        let (ctx, w) = catalog_context(label).unwrap();
        let cc = CoxeterContext::build(&ctx, &w).unwrap();
        let inv = cc.inverse().unwrap();
        let e = cc.euler_roots(&u, &v);
        prop_assert_eq!(&e, &cc.euler_roots(&cc.c(&u), &cc.c(&v)));
        prop_assert_eq!(&e, &inv.euler_roots(&v, &u));
        prop_assert_eq!(&e, &-inv.euler_roots(&u, &cc.c(&v)));
        prop_assert_eq!(ctx.cartan.k(&u, &v), &e + cc.euler_roots(&v, &u));
        for s in [cc.initial(), cc.final_letter()] {
            let scs = cc.conjugate(s).unwrap();
            let su = roots::reflect(&ctx.cartan, s, &u);
            let sv = roots::reflect(&ctx.cartan, s, &v);
            prop_assert_eq!(&e, &scs.euler_roots(&su, &sv));
        }
        for i in 0..4 {
            let si = roots::reflect(&ctx.cartan, i, &u);
            let sj = roots::reflect(&ctx.cartan, i, &v);
            prop_assert_eq!(ctx.cartan.k(&u, &v), ctx.cartan.k(&si, &sj));
        }
    }
}
