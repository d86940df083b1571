//! Self-interlacing polynomials built from chosen roots.

mod common;

use common::Draws;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use selfint::rational::{frac, int};
use selfint::{
    hurwitz_minors, hurwitz_stable, is_self_interlacing, isolate_real_roots, poly_from_roots,
    refine_root, si_twist, Polynomial, Rational, SIKind,
};

/// Distinct moduli in decreasing order.
fn decreasing_moduli(draws: &mut Draws, n: usize) -> Vec<Rational> {
    let mut moduli = Vec::with_capacity(n);
    let mut current = frac(1 + draws.below(4) as i64, 1 + draws.below(3) as i64);
    for _ in 0..n {
        moduli.push(current.clone());
        current += frac(1 + draws.below(5) as i64, 1 + draws.below(4) as i64);
    }
    moduli.reverse();
    moduli
}

/// Roots `+, -, +, ...` by decreasing modulus when `first_positive`.
fn alternating_roots(moduli: &[Rational], first_positive: bool) -> Vec<Rational> {
    moduli
        .iter()
        .enumerate()
        .map(|(k, m)| {
            if (k % 2 == 0) == first_positive {
                m.clone()
            } else {
                -m
            }
        })
        .collect()
}

#[test]
fn alternating_roots_give_self_interlacing_polynomials() {
    let mut draws = Draws::new(5);
    for n in 1..=8 {
        for _ in 0..6 {
            let moduli = decreasing_moduli(&mut draws, n);
            let kind_one = poly_from_roots(&alternating_roots(&moduli, true));
            let kind_two = poly_from_roots(&alternating_roots(&moduli, false));
            assert!(
                is_self_interlacing(&kind_one, SIKind::KindI).unwrap(),
                "{kind_one}"
            );
            assert!(
                !is_self_interlacing(&kind_one, SIKind::KindII).unwrap(),
                "{kind_one}"
            );
            assert!(
                is_self_interlacing(&kind_two, SIKind::KindII).unwrap(),
                "{kind_two}"
            );
            assert!(
                !is_self_interlacing(&kind_two, SIKind::KindI).unwrap(),
                "{kind_two}"
            );
        }
    }
}

#[test]
fn breaking_the_sign_pattern_breaks_the_verdict() {
    let mut draws = Draws::new(6);
    for n in 2..=8 {
        for _ in 0..6 {
            let moduli = decreasing_moduli(&mut draws, n);
            let mut roots = alternating_roots(&moduli, true);
            let k = draws.below(n as u64) as usize;
            roots[k] = -&roots[k];
            let p = poly_from_roots(&roots);
            assert!(!is_self_interlacing(&p, SIKind::KindI).unwrap(), "{p}");
        }
    }
}

#[test]
fn equal_moduli_are_not_self_interlacing() {
    let mut draws = Draws::new(7);
    for n in 2..=6 {
        let moduli = decreasing_moduli(&mut draws, n);
        let mut roots = alternating_roots(&moduli, true);
        roots[1] = -&roots[0];
        let p = poly_from_roots(&roots);
        assert!(!is_self_interlacing(&p, SIKind::KindI).unwrap(), "{p}");
        assert!(!is_self_interlacing(&p, SIKind::KindII).unwrap(), "{p}");
    }
}

#[test]
fn products_of_stable_linear_factors_are_hurwitz_stable() {
    let mut draws = Draws::new(8);
    for n in 1..=7 {
        for _ in 0..5 {
            let mu: Vec<Rational> = (0..n).map(|_| draws.positive()).collect();
            let neg: Vec<Rational> = mu.iter().map(|m| -m).collect();
            let p = poly_from_roots(&neg);
            assert!(hurwitz_stable(&p).unwrap(), "{p}");
            assert!(hurwitz_minors(&p).unwrap().iter().all(Signed::is_positive));

            let mut bad = neg.clone();
            bad[draws.below(n as u64) as usize] = draws.positive();
            assert!(!hurwitz_stable(&poly_from_roots(&bad)).unwrap());
        }
    }
}

fn coeffs() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-9i64..=9, 1i64..=3).prop_map(|(p, q)| frac(p, q)), 2..9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kind_one_of_p_is_kind_two_of_reflection(c in coeffs()) {
        let p = Polynomial::new(c);
        prop_assume!(p.degree() >= 1);
        prop_assert_eq!(
            is_self_interlacing(&p, SIKind::KindI).unwrap(),
            is_self_interlacing(&p.reflect(), SIKind::KindII).unwrap()
        );
    }

    #[test]
    fn twist_keeps_magnitudes_and_is_an_involution(c in coeffs()) {
        let p = Polynomial::new(c);
        prop_assume!(!p.is_zero());
        let q = si_twist(&p).unwrap().into_polynomial();
        prop_assert_eq!(q.coeffs()[0].clone(), p.coeffs()[0].clone());
        for (a, b) in p.coeffs().iter().zip(q.coeffs()) {
            prop_assert_eq!(a.abs(), b.abs());
        }
        prop_assert_eq!(si_twist(&q).unwrap().into_polynomial(), p);
    }

    #[test]
    fn isolated_roots_bracket_sign_changes(c in coeffs(), width in 1i64..=1000) {
        let p = Polynomial::new(c);
        prop_assume!(p.degree() >= 1 && p.is_squarefree());
        let boxes = isolate_real_roots(&p).unwrap();
        let w = frac(1, width * 1000);
        for b in &boxes {
            let r = refine_root(&p, b, &w).unwrap();
            prop_assert!(r.width() <= w);
            prop_assert!(b.lo <= r.lo && r.hi <= b.hi);
            if r.is_exact() {
                prop_assert!(p.eval(&r.lo).is_zero());
            } else {
                prop_assert!(p.sign_at(&r.lo) != p.sign_at(&r.hi));
            }
        }
        // Neighbouring boxes may share an endpoint but never overlap.
        for pair in boxes.windows(2) {
            prop_assert!(pair[0].hi <= pair[1].lo);
        }
    }
}

#[test]
fn root_counts_match_constructed_roots() {
    let mut draws = Draws::new(9);
    for n in 1..=7 {
        let roots: Vec<Rational> = decreasing_moduli(&mut draws, n)
            .into_iter()
            .enumerate()
            .map(|(k, m)| if draws.below(2) == 0 || k == 0 { m } else { -m })
            .collect();
        let p = poly_from_roots(&roots);
        let boxes = isolate_real_roots(&p).unwrap();
        assert_eq!(boxes.len(), n);
        for r in &roots {
            assert_eq!(
                boxes.iter().filter(|b| b.contains(r)).count(),
                1,
                "{p} root {r}"
            );
        }
    }
    assert!(isolate_real_roots(&Polynomial::from_ints(&[1, 0, 1]))
        .unwrap()
        .is_empty());
    assert_eq!(poly_from_roots(&[int(2)]).coeffs(), &[int(1), int(-2)]);
}
