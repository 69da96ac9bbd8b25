//! Randomized and exhaustive checks of structural invariants.

use std::collections::BTreeSet;

use grpn::chars::restricted_character;
use grpn::coinv::{act_monomial, descent_monomial, monomials_up_to, straighten, DescentClass, Monomial};
use grpn::group::{enumerate, ColoredPerm, GroupParams, Which};
use grpn::partition::r_partitions;
use grpn::poly::{q_integer, RationalPoly, TruncationContext};
use grpn::tabx::{all_orbits, enumerate_rssyt, phi_lambda};
use grpn::verify::{verify_main, verify_stanley_all};
use grpn::{Cyclotomic, Rational};
use proptest::prelude::*;

fn params(r: u32, p: u32, n: u32) -> GroupParams {
    GroupParams::new(r, p, n).unwrap()
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (1u32..=12).prop_flat_map(|r| {
        proptest::collection::vec((-9i64..=9, 1i64..=4), r as usize).prop_map(move |raw| {
            let coeffs = raw.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
            Cyclotomic::reduce(r, coeffs)
        })
    })
}

fn same_order_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=12).prop_flat_map(|r| {
        let one = proptest::collection::vec(-6i64..=6, r as usize)
            .prop_map(move |v| Cyclotomic::reduce(r, v.into_iter().map(|a| Rational::from_integer(a.into())).collect()));
        (one.clone(), one.clone(), one)
    })
}

fn element(r: u32, n: u32) -> impl Strategy<Value = ColoredPerm> {
    (
        Just((1..=n).collect::<Vec<u32>>()).prop_shuffle(),
        proptest::collection::vec(0..r, n as usize),
    )
        .prop_map(move |(sigma, colors)| ColoredPerm::new(r, sigma, colors).unwrap())
}

fn rational_poly(nvars: usize) -> impl Strategy<Value = RationalPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..4, nvars), -5i64..=5, 1i64..=3), 0..6).prop_map(
        move |terms| {
            RationalPoly::from_terms(
                nvars,
                (),
                terms.into_iter().map(|(e, a, b)| (e, Rational::new(a.into(), b.into()))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #[test]
    fn field_laws((a, b, c) in same_order_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involution(a in cyclotomic()) {
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn polynomial_text_round_trip(p in rational_poly(3)) {
        prop_assert_eq!(RationalPoly::parse(3, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn truncated_products_associate(a in rational_poly(2), b in rational_poly(2), c in rational_poly(2), cap in 0u32..6) {
        let t = Some(TruncationContext::TotalDegree(cap));
        let left = a.mul_truncated(&b, t).unwrap().mul_truncated(&c, t).unwrap();
        let right = a.mul_truncated(&b.mul_truncated(&c, t).unwrap(), t).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, a.mul(&b).unwrap().mul(&c).unwrap().truncate(TruncationContext::TotalDegree(cap)));
    }

    #[test]
    fn q_integers_multiply_at_one(a in 0u32..20, b in 0u32..20) {
        let prod = q_integer(a).mul(&q_integer(b)).unwrap().eval_at_ones();
        prop_assert_eq!(prod, Rational::from_integer((a * b).into()));
    }

    #[test]
    fn group_laws(g in element(4, 4), h in element(4, 4), k in element(4, 4)) {
        let gh = g.multiply(&h).unwrap();
        prop_assert_eq!(gh.multiply(&k).unwrap(), g.multiply(&h.multiply(&k).unwrap()).unwrap());
        prop_assert_eq!(g.multiply(&g.inverse()).unwrap(), ColoredPerm::identity(4, 4));
        prop_assert_eq!(g.multiply(&ColoredPerm::identity(4, 4)).unwrap(), g.clone());
        let conj = h.multiply(&g).unwrap().multiply(&h.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), g.cycle_type());
    }

    #[test]
    fn windows_round_trip(g in element(5, 5)) {
        let ps = params(5, 1, 5);
        prop_assert_eq!(ColoredPerm::parse_window(&g.to_string(), &ps).unwrap(), g);
    }

    #[test]
    fn statistics_agree(g in element(6, 5)) {
        let st = g.stats();
        prop_assert_eq!(st.fmaj, 6 * st.des.iter().sum::<usize>() as u32 + g.col());
        prop_assert_eq!(st.fdes, 6 * st.des.len() as u32 + g.colors()[0]);
        prop_assert_eq!(st.fmaj, descent_monomial(&g).degree());
    }

    #[test]
    fn straightening_preserves_degree(exps in proptest::collection::vec(0u32..10, 3)) {
        let ps = params(6, 3, 3);
        let m = Monomial(exps);
        for gamma in straighten(&m, &ps).unwrap().terms().keys() {
            prop_assert!(gamma.in_gamma(&ps));
            prop_assert_eq!(gamma.gamma_stats(&ps).unwrap().fmaj, m.degree());
        }
    }
}

#[test]
fn transversal_sizes() {
    for r in 1..=6u32 {
        for n in 1..=6u32 {
            let full = (1..=n as u128).product::<u128>() * (r as u128).pow(n);
            if full > 100_000 {
                continue;
            }
            for p in (1..=r).filter(|p| r % p == 0) {
                let ps = params(r, p, n);
                let gamma = enumerate(&ps, Which::Gamma).unwrap();
                assert_eq!(gamma.len() as u128, full / p as u128, "({r},{p},{n})");
            }
        }
    }
}

#[test]
fn flag_vectors_decrease() {
    for &(r, p, n) in &[(6, 3, 3), (4, 2, 4), (3, 1, 4), (6, 6, 3)] {
        let ps = params(r, p, n);
        for g in enumerate(&ps, Which::Gamma).unwrap() {
            let f = g.stats().f_vector;
            assert!(f.windows(2).all(|w| w[0] >= w[1]), "{g}");
            assert_eq!(f[n as usize - 1], g.colors()[n as usize - 1]);
            assert!(f[n as usize - 1] < ps.d);
        }
    }
}

#[test]
fn action_respects_products() {
    let ps = params(3, 1, 2);
    let all = enumerate(&ps, Which::G).unwrap();
    let monos = monomials_up_to(2, 3);
    for g in &all {
        for h in &all {
            let gh = g.multiply(h).unwrap();
            for m in &monos {
                let (c1, m1) = act_monomial(h, m);
                let (c2, m2) = act_monomial(g, &m1);
                assert_eq!(act_monomial(&gh, m), (&c1 * &c2, m2), "{g} {h} {m}");
            }
        }
    }
}

#[test]
fn descent_classes_partition_gamma() {
    for &(r, p, n) in &[(6, 3, 2), (2, 2, 3), (4, 2, 3)] {
        let ps = params(r, p, n);
        for g in enumerate(&ps, Which::Gamma).unwrap() {
            let class = DescentClass::of(&g);
            let lambda = class.lambda(r);
            assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(DescentClass::new(&ps, class.des.clone(), class.colors.clone()).unwrap(), class);
        }
    }
}

#[test]
fn orbits_cover_shapes() {
    for &(r, p, n) in &[(2, 2, 2), (4, 2, 2), (6, 3, 2), (6, 6, 1), (4, 4, 3)] {
        let ps = params(r, p, n);
        let orbits = all_orbits(&ps);
        let total: u32 = orbits.iter().map(|o| o.b).sum();
        assert_eq!(total as usize, r_partitions(r as usize, n).len());
        let mut seen = BTreeSet::new();
        for o in &orbits {
            assert_eq!(o.u * o.b, p);
            assert_eq!(o.members.len() as u32, o.b);
            for m in &o.members {
                assert!(seen.insert(m.clone()));
                assert_eq!(
                    restricted_character(m, &ps).unwrap(),
                    restricted_character(o.representative(), &ps).unwrap()
                );
            }
        }
    }
}

#[test]
fn bijection_weights() {
    for r in 1..=3usize {
        for n in 0..=3 {
            for s in r_partitions(r, n) {
                for t in enumerate_rssyt(&s, 2 * r as u32 + 1) {
                    let (std, delta) = phi_lambda(&t).unwrap();
                    let theta = t.theta();
                    let f = std.stats().f_vector;
                    for i in 0..theta.len() {
                        let tail: u32 = delta[i..].iter().sum();
                        assert_eq!(theta[i] - 1, f[i] + r as u32 * tail);
                    }
                }
            }
        }
    }
}

#[test]
fn verifiers_are_deterministic() {
    let ps = params(2, 2, 2);
    let a = verify_main(&ps).unwrap();
    let b = std::thread::spawn(move || verify_main(&ps).unwrap()).join().unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let a = verify_stanley_all(2, 2, 5).unwrap();
    let b = verify_stanley_all(2, 2, 5).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn roots_of_unity_sum_to_zero() {
    for r in 2..=12u32 {
        let mut sum = Cyclotomic::zero(r);
        for k in 0..r {
            sum = &sum + &Cyclotomic::zeta_pow(r, k as i64);
        }
        assert!(sum.is_zero());
        assert!(Cyclotomic::zeta_pow(r, r as i64).is_one());
    }
}
