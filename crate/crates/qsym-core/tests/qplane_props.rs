//! Ring and automorphism laws of the noncommutative Laurent plane.
//!
//! - The q-commutation rule and normal ordering make a well-defined
//!   associative ring with exact distributivity.
//! - Single-term inverses and closed-form powers agree with repeated
//!   multiplication.
//! - Torus automorphisms are ring homomorphisms; composition and inversion
//!   satisfy the groupoid laws on polynomials, not just on the spec data.
//! - The SL(2,ℤ) weight action is a group action compatible with matrix
//!   multiplication.

use proptest::prelude::*;
use qsym_core::qplane::{
    apply_automorphism, automorphism_compose, automorphism_invert, sl2z_weight_action,
    weight_of, AutomorphismSpec, LaurentPoly, Sl2z, WeightPair,
};
use qsym_core::scalar::{QScalar, WeightConstant};

fn coeff() -> impl Strategy<Value = QScalar> {
    prop_oneof![
        (-3..=3_i64).prop_map(QScalar::from_int),
        (-2..=2_i64).prop_map(QScalar::q_pow),
        Just(QScalar::var("a").unwrap()),
    ]
}

fn nonzero_coeff() -> impl Strategy<Value = QScalar> {
    prop_oneof![
        (1..=3_i64).prop_map(QScalar::from_int),
        (-2..=2_i64).prop_map(QScalar::q_pow),
        Just(QScalar::var("a").unwrap()),
    ]
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((coeff(), -3..=3_i64, -3..=3_i64), 0..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (c, i, j) in terms {
            p.add_term(c, i, j);
        }
        p
    })
}

fn monomial() -> impl Strategy<Value = LaurentPoly> {
    (nonzero_coeff(), -3..=3_i64, -3..=3_i64)
        .prop_map(|(c, i, j)| LaurentPoly::monomial(c, i, j))
}

/// Random SL(2,ℤ) elements as short words in the two standard generators.
fn sl2z() -> impl Strategy<Value = Sl2z> {
    let gens = prop_oneof![
        Just(Sl2z::new(0, -1, 1, 0).unwrap()),
        Just(Sl2z::new(1, 1, 0, 1).unwrap()),
        Just(Sl2z::new(1, -1, 0, 1).unwrap()),
    ];
    prop::collection::vec(gens, 0..4).prop_map(|word| {
        word.iter().fold(Sl2z::identity(), |acc, g| acc.mul(g))
    })
}

fn automorphism() -> impl Strategy<Value = AutomorphismSpec> {
    (sl2z(), nonzero_coeff(), nonzero_coeff()).prop_map(|(sigma, mu, nu)| {
        AutomorphismSpec::new(sigma, mu, nu).expect("scales are nonzero")
    })
}

fn weight_pair() -> impl Strategy<Value = WeightPair> {
    let constant = (any::<bool>(), -4..=4_i64).prop_map(|(neg, k)| {
        let w = WeightConstant::zeta_pow(k);
        if neg {
            WeightConstant::minus_one().mul(&w)
        } else {
            w
        }
    });
    (constant.clone(), constant).prop_map(|(a, b)| WeightPair::new(a, b))
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), r in poly(), t in poly()) {
        prop_assert_eq!(&p + &r, &r + &p);
        prop_assert_eq!(&(&p + &r) + &t, &p + &(&r + &t));
        prop_assert_eq!(&(&p * &r) * &t, &p * &(&r * &t));
        prop_assert_eq!(&p * &(&r + &t), &(&p * &r) + &(&p * &t));
        prop_assert_eq!(&(&p + &r) * &t, &(&p * &t) + &(&r * &t));
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        prop_assert_eq!(&LaurentPoly::one() * &p, p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn term_multipliers_match_general_multiplication(
        p in poly(),
        c in nonzero_coeff(),
        i in -3..=3_i64,
        j in -3..=3_i64,
    ) {
        let m = LaurentPoly::monomial(c.clone(), i, j);
        prop_assert_eq!(p.mul_term_left(&c, i, j), &m * &p);
        prop_assert_eq!(p.mul_term_right(&c, i, j), &p * &m);
    }

    #[test]
    fn monomial_inverses_cancel(m in monomial()) {
        let inv = m.mono_inverse().unwrap();
        prop_assert_eq!(&m * &inv, LaurentPoly::one());
        prop_assert_eq!(&inv * &m, LaurentPoly::one());
    }

    #[test]
    fn monomial_powers_match_repeated_multiplication(m in monomial(), p in -4..=4_i64) {
        let closed = m.mono_pow(p).unwrap();
        let base = if p < 0 { m.mono_inverse().unwrap() } else { m.clone() };
        let mut expected = LaurentPoly::one();
        for _ in 0..p.abs() {
            expected = &expected * &base;
        }
        prop_assert_eq!(closed, expected);
    }

    #[test]
    fn automorphisms_are_ring_homomorphisms(phi in automorphism(), p in poly(), r in poly()) {
        prop_assert_eq!(
            apply_automorphism(&phi, &(&p * &r)),
            &apply_automorphism(&phi, &p) * &apply_automorphism(&phi, &r)
        );
        prop_assert_eq!(
            apply_automorphism(&phi, &(&p + &r)),
            &apply_automorphism(&phi, &p) + &apply_automorphism(&phi, &r)
        );
    }

    #[test]
    fn composition_acts_by_nesting(f in automorphism(), g in automorphism(), p in poly()) {
        let composed = automorphism_compose(&f, &g);
        prop_assert_eq!(
            apply_automorphism(&composed, &p),
            apply_automorphism(&f, &apply_automorphism(&g, &p))
        );
    }

    #[test]
    fn inversion_undoes_application(phi in automorphism(), p in poly()) {
        let inv = automorphism_invert(&phi);
        prop_assert_eq!(apply_automorphism(&inv, &apply_automorphism(&phi, &p)), p.clone());
        prop_assert_eq!(automorphism_compose(&inv, &phi), AutomorphismSpec::identity());
        prop_assert_eq!(automorphism_compose(&phi, &inv), AutomorphismSpec::identity());
    }

    #[test]
    fn sl2z_inverses_and_action(s1 in sl2z(), s2 in sl2z(), w in weight_pair()) {
        prop_assert_eq!(s1.mul(&s1.inverse()), Sl2z::identity());
        prop_assert_eq!(s1.inverse().mul(&s1), Sl2z::identity());
        // Matrix product acts by composition.
        prop_assert_eq!(
            sl2z_weight_action(&s1.mul(&s2), &w),
            sl2z_weight_action(&s1, &sl2z_weight_action(&s2, &w))
        );
        prop_assert_eq!(sl2z_weight_action(&Sl2z::identity(), &w), w.clone());
    }

    #[test]
    fn monomials_are_weight_homogeneous(m in monomial(), w in weight_pair()) {
        let value = weight_of(&m, &w).unwrap();
        let (_, i, j) = m.single_term().unwrap();
        prop_assert_eq!(value, Some(w.monomial_weight(i, j)));
    }
}

#[test]
fn commutation_reference() {
    // y·x = q·x·y and the inverse twists follow from it.
    let x = LaurentPoly::x();
    let y = LaurentPoly::y();
    assert_eq!(&y * &x, (&x * &y).scalar_mul(&QScalar::q_pow(1)));

    let x_inv = x.mono_inverse().unwrap();
    assert_eq!(&x_inv * &y, (&y * &x_inv).scalar_mul(&QScalar::q_pow(1)));
}

#[test]
fn inhomogeneous_polynomials_have_no_weight() {
    let w = WeightPair::new(WeightConstant::q_pow(1), WeightConstant::one());
    let p = &LaurentPoly::x() + &LaurentPoly::y();
    assert_eq!(weight_of(&p, &w).unwrap(), None);
    assert!(weight_of(&LaurentPoly::zero(), &w).is_err());
}
