//! Ring-axiom property tests for all four coefficient types: 1000 random
//! triples per ring, coefficient magnitudes up to 10^6, polynomial degrees
//! up to 6. Also the canonical-form idempotence and the
//! divide-after-multiply identity.

use proptest::prelude::*;

use rueppel_core::exact::{ArithError, Integer, Poly2, RatFunc, Rational, Ring};

const MAG: i64 = 1_000_000;

fn arb_integer() -> impl Strategy<Value = Integer> {
    (-MAG..=MAG).prop_map(Integer::new)
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    ((-MAG..=MAG), (1..=MAG)).prop_map(|(n, d)| Rational::from_i64s(n, d))
}

fn arb_poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec(((-MAG..=MAG), 0u32..=6, 0u32..=6), 0..6).prop_map(|terms| {
        let mut p = Poly2::zero();
        for (coeff, eb, ec) in terms {
            p = p.add(&Poly2::monomial(Integer::new(coeff), eb, ec));
        }
        p
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(), arb_poly()).prop_map(|(num, den)| {
        let den = if den.is_zero() { Poly2::one() } else { den };
        RatFunc::new(num, den).expect("nonzero denominator")
    })
}

fn axioms_hold<R: Ring>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(&b.add(c)), a.add(b).add(c));
    prop_assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.add(&R::zero()), a.clone());
    prop_assert_eq!(a.mul(&R::one()), a.clone());
    prop_assert_eq!(a.add(&a.neg()), R::zero());
    Ok(())
}

fn div_mul_round_trip<R: Ring>(a: &R, b: &R) -> Result<(), TestCaseError> {
    if !b.is_zero() {
        prop_assert_eq!(a.mul(b).exact_div(b), Ok(a.clone()));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn integer_ring_axioms((a, b, c) in (arb_integer(), arb_integer(), arb_integer())) {
        axioms_hold(&a, &b, &c)?;
        div_mul_round_trip(&a, &b)?;
    }

    #[test]
    fn rational_field_axioms((a, b, c) in (arb_rational(), arb_rational(), arb_rational())) {
        axioms_hold(&a, &b, &c)?;
        div_mul_round_trip(&a, &b)?;
    }

    #[test]
    fn polynomial_ring_axioms((a, b, c) in (arb_poly(), arb_poly(), arb_poly())) {
        axioms_hold(&a, &b, &c)?;
        div_mul_round_trip(&a, &b)?;
    }

    #[test]
    fn rational_function_field_axioms(
        (a, b, c) in (arb_ratfunc(), arb_ratfunc(), arb_ratfunc())
    ) {
        axioms_hold(&a, &b, &c)?;
        div_mul_round_trip(&a, &b)?;
    }

    #[test]
    fn rational_canonical_form_is_idempotent(q in arb_rational()) {
        let renormalized = Rational::new(q.numerator(), q.denominator()).unwrap();
        prop_assert_eq!(renormalized.numerator(), q.numerator());
        prop_assert_eq!(renormalized.denominator(), q.denominator());
    }

    #[test]
    fn ratfunc_canonical_form_is_idempotent(f in arb_ratfunc()) {
        // Representation-level equality, not just cross-multiplication.
        let renormalized = RatFunc::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(renormalized.numerator(), f.numerator());
        prop_assert_eq!(renormalized.denominator(), f.denominator());
    }
}

#[test]
fn exact_division_failures_are_reported() {
    let b = Poly2::var_b();
    let c = Poly2::var_c();
    assert_eq!(b.exact_div(&c), Err(ArithError::InexactDivision));
    assert_eq!(b.exact_div(&Poly2::zero()), Err(ArithError::DivisionByZero));
    assert_eq!(
        Integer::new(5).exact_div(&Integer::new(2)),
        Err(ArithError::InexactDivision)
    );
}
