//! Cross-checks against explicit enumeration of small Weyl groups.

mod common;

use common::{dominant_by_enumeration, longest, random_weight, seeded, weyl_group};
use lieindex::reps::{weight_multiplicities, IrrepLabel};
use lieindex::{RootSystem, SimpleType, Weight};
use num_traits::Zero;

fn small_systems() -> Vec<RootSystem> {
    [
        SimpleType::A(1),
        SimpleType::A(2),
        SimpleType::A(3),
        SimpleType::A(4),
        SimpleType::B(2),
        SimpleType::B(3),
        SimpleType::B(4),
        SimpleType::C(3),
        SimpleType::C(4),
        SimpleType::D(3),
        SimpleType::D(4),
        SimpleType::F4,
        SimpleType::G2,
    ]
    .into_iter()
    .map(|t| RootSystem::build(t).unwrap())
    .collect()
}

#[test]
fn group_orders() {
    let expected = [2, 6, 24, 120, 8, 48, 384, 48, 384, 24, 192, 1152, 12];
    for (rs, n) in small_systems().iter().zip(expected) {
        assert_eq!(weyl_group(rs).len(), n, "{}", rs.label());
    }
}

#[test]
fn make_dominant_matches_enumeration() {
    let mut rng = seeded(7);
    for rs in small_systems() {
        let group = weyl_group(&rs);
        for _ in 0..100 {
            let x = random_weight(&mut rng, rs.ambient_rank());
            let got = rs.make_dominant(&x);
            let (dom, sign) = dominant_by_enumeration(&rs, &group, &x);
            assert_eq!(got.dominant, dom, "{} {x}", rs.label());
            match sign {
                Some(s) => {
                    assert!(!got.singular);
                    assert_eq!(got.sign, s, "{} {x}", rs.label());
                }
                None => {
                    assert!(got.singular);
                    assert_eq!(got.sign, 1);
                }
            }
        }
    }
}

#[test]
fn d4_reflected_rho() {
    let rs = RootSystem::build(SimpleType::D(4)).unwrap();
    let group = weyl_group(&rs);
    let x = Weight::from_ints(&[-3, 2, 1, 0]);
    let got = rs.make_dominant(&x);
    let (dom, sign) = dominant_by_enumeration(&rs, &group, &x);
    assert_eq!(got.dominant, Weight::from_ints(&[3, 2, 1, 0]));
    assert_eq!(dom, got.dominant);
    assert_eq!(Some(got.sign), sign);
}

#[test]
fn duality_is_minus_longest_element() {
    let mut rng = seeded(11);
    for rs in small_systems() {
        let group = weyl_group(&rs);
        let w0 = longest(&group);
        assert_eq!(w0.length, rs.positive_roots().len());
        for _ in 0..20 {
            let lambda = common::random_dominant(&mut rng, &rs, 4);
            let expected = -&w0.apply(&lambda);
            assert_eq!(rs.dual_weight(&lambda).unwrap(), expected, "{}", rs.label());
        }
    }
}

#[test]
fn duality_examples() {
    let d4 = RootSystem::build(SimpleType::D(4)).unwrap();
    let s = Weight::halves(&[1, 1, 1, 1]);
    assert_eq!(d4.dual_weight(&s).unwrap(), s);
    let d3 = RootSystem::build(SimpleType::D(3)).unwrap();
    assert_eq!(
        d3.dual_weight(&Weight::halves(&[1, 1, 1])).unwrap(),
        Weight::halves(&[1, 1, -1])
    );
}

#[test]
fn orbits_agree_with_enumeration() {
    let mut rng = seeded(5);
    for rs in small_systems() {
        let group = weyl_group(&rs);
        for _ in 0..5 {
            let x = random_weight(&mut rng, rs.ambient_rank());
            let mut a: Vec<Weight> = rs.orbit(&x);
            let mut b: Vec<Weight> = group.iter().map(|g| g.apply(&x)).collect();
            a.sort();
            b.sort();
            b.dedup();
            assert_eq!(a, b, "{}", rs.label());
        }
    }
}

/// Adjoint module: every root once, the zero weight with multiplicity the rank.
#[test]
fn adjoint_characters() {
    for rs in small_systems() {
        let top = rs
            .positive_roots()
            .iter()
            .max_by_key(|a| rs.height(a))
            .unwrap()
            .clone();
        let ch = weight_multiplicities(&IrrepLabel::new(rs.clone(), top).unwrap());
        let zero = Weight::zero(rs.ambient_rank());
        assert_eq!(ch.get(&zero), rs.rank() as u64, "{}", rs.label());
        for a in rs.positive_roots() {
            assert_eq!(ch.get(a), 1);
            assert_eq!(ch.get(&-a), 1);
        }
        let roots = 2 * rs.positive_roots().len() as u64;
        assert_eq!(ch.total(), roots + rs.rank() as u64);
        assert!(ch.weights().all(|w| w.is_zero() || rs.is_root(w)));
    }
}

#[test]
fn sign_is_parity_of_reflection_count() {
    let rs = RootSystem::build(SimpleType::B(3)).unwrap();
    let mut rng = seeded(3);
    for _ in 0..50 {
        let x = random_weight(&mut rng, 3);
        let d = rs.make_dominant(&x);
        if !d.singular {
            let parity = if d.reflections.is_multiple_of(2) {
                1
            } else {
                -1
            };
            assert_eq!(d.sign, parity);
        }
        assert_eq!(
            d.singular,
            rs.positive_roots()
                .iter()
                .any(|a| d.dominant.dot(a).is_zero())
        );
    }
}
