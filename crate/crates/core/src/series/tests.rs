use proptest::prelude::*;

use super::*;
use crate::exact::{Poly2, Rational};

fn catalan_binomial_oracle(n: u64) -> Integer {
    // C_n = binom(2n, n) / (n + 1), computed directly from factorial ratios.
    let mut num = Integer::one();
    for k in (n + 1)..=(2 * n) {
        num = num.mul(&Integer::new(k as i64));
    }
    let mut den = Integer::one();
    for k in 1..=n {
        den = den.mul(&Integer::new(k as i64));
    }
    num.exact_div(&den)
        .unwrap()
        .exact_div(&Integer::new(n as i64 + 1))
        .unwrap()
}

#[test]
fn catalan_prefix_and_oracle() {
    let c = catalan_series::<Integer>(12);
    let expected = [1, 1, 2, 5, 14, 42];
    for (n, &e) in expected.iter().enumerate() {
        assert_eq!(c.coeff(n), &Integer::new(e));
    }
    assert_eq!(c.coeff(0), &Integer::one());
    assert_eq!(c.coeff(10), &Integer::new(16796));
    for n in 0..12 {
        assert_eq!(c.coeff(n), &catalan_binomial_oracle(n as u64), "C_{n}");
    }
}

#[test]
fn rueppel_prefix() {
    let r = rueppel_series::<Integer>(11);
    let expected = [1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0];
    assert_eq!(r, int_series(&expected));
}

#[test]
fn rueppel_equals_catalan_mod_2() {
    let r = rueppel_series::<Integer>(64);
    let c = catalan_series::<Integer>(64);
    let two = Integer::new(2);
    for n in 0..64 {
        assert_eq!(r.coeff(n), &c.coeff(n).rem_euclid(&two), "index {n}");
    }
}

#[test]
fn rueppel_bc_prefix() {
    let r = rueppel_bc_series(8);
    let b = Poly2::var_b();
    let c = Poly2::var_c();
    let one = Poly2::one();
    let zero = Poly2::zero();
    let expected = [&one, &c, &zero, &b, &zero, &zero, &zero, &b];
    for (n, &e) in expected.iter().enumerate() {
        assert_eq!(r.coeff(n), e, "index {n}");
    }
}

#[test]
fn rueppel_bc_matches_its_defining_combination() {
    // 1 + c x + b (x^3 + x^7 + ...) = b r(x) - (b - 1) + (c - b) x
    let n = 40;
    let direct = rueppel_bc_series(n);
    let r = rueppel_series::<Poly2>(n);
    let b = Poly2::var_b();
    let c = Poly2::var_c();
    let combined = r
        .scale(&b)
        .add_scalar(&Poly2::one().sub(&b))
        .add(&Series::x(n).scale(&c.sub(&b)));
    assert_eq!(direct, combined);
}

#[test]
fn shifting_rueppel_gives_its_even_part() {
    // (r(x) - 1) / x = r(x^2)
    let n = 32;
    let r = rueppel_series::<Integer>(n);
    let shifted = r.sub(&Series::one(n)).shift(1).unwrap();
    let r_x2 = rueppel_series::<Integer>(n).compose_xk(2);
    assert_eq!(shifted, r_x2.truncated(n - 1).unwrap());
    // The head of the shift is the once-shifted Rueppel sequence.
    let expected = [1, 0, 1, 0, 0, 0, 1, 0];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(shifted.coeff(i), &Integer::new(e));
    }
}

#[test]
fn shift_edge_cases() {
    let one = Series::<Integer>::one(4);
    assert_eq!(one.shift(-1).unwrap(), int_series(&[0, 1, 0, 0, 0]));
    let g = int_series(&[0, 3, 1, 4]);
    assert_eq!(g.shift(1).unwrap().shift(-1).unwrap(), g);
    assert!(matches!(
        int_series(&[1, 2]).shift(5),
        Err(SeriesError::InsufficientTruncation { .. })
    ));
}

#[test]
fn recip_of_one_plus_x_catalan() {
    // 1/(1 + x c(x)) expands to 1, -1, 0, -1, -2, -6, -18, -57.
    let n = 16;
    let c = catalan_series::<Integer>(n);
    let s = Series::one(n).add(&c.mul_xk(1).truncated(n).unwrap());
    let r = s.recip().unwrap();
    let expected = [1, -1, 0, -1, -2, -6, -18, -57];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(r.coeff(i), &Integer::new(e), "index {i}");
    }
}

#[test]
fn recip_of_one_plus_x_rueppel() {
    // 1/(1 + x r(x)) expands to 1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6.
    let n = 16;
    let r = rueppel_series::<Integer>(n);
    let s = Series::one(n).add(&r.mul_xk(1).truncated(n).unwrap());
    let inv = s.recip().unwrap();
    let expected = [1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(inv.coeff(i), &Integer::new(e), "index {i}");
    }
}

#[test]
fn recip_of_one_is_one() {
    let one = Series::<Integer>::one(8);
    assert_eq!(one.recip().unwrap(), one);
}

#[test]
fn recip_requires_unit_constant_term() {
    let s = int_series(&[2, 1, 1]);
    assert_eq!(s.recip(), Err(SeriesError::NonUnitConstantTerm));
    let s = Series::<Rational>::from_coeffs(vec![
        Rational::from_i64(2),
        Rational::from_i64(1),
    ]);
    assert!(s.recip().is_ok());
}

#[test]
fn geometric_times_one_minus_x_is_one() {
    let n = 24;
    let one_minus_x = Series::<Integer>::one(n).sub(&Series::x(n));
    assert_eq!(one_minus_x.mul(&geometric_series(n)), Series::one(n));
}

#[test]
fn compose_examples() {
    // r(x^2) has ones exactly at the doubled positions.
    let r2 = rueppel_series::<Integer>(4).compose_xk(2);
    assert_eq!(r2, int_series(&[1, 0, 1, 0, 0, 0, 1, 0]));

    // (1 + x) composed with x^3.
    let s = int_series(&[1, 1]).compose_xk(3);
    assert_eq!(s, int_series(&[1, 0, 0, 1, 0, 0]));

    // 1 - x + x^2 c(x^2) begins 1, -1, 1, 0, 1, 0, 2, 0, 5, 0, 14.
    let n = 12;
    let c2 = catalan_series::<Integer>(n).compose_xk(2);
    let s = Series::one(2 * n)
        .sub(&Series::x(2 * n))
        .add(&c2.mul_xk(2).truncated(2 * n).unwrap());
    let expected = [1, -1, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(s.coeff(i), &Integer::new(e), "index {i}");
    }
}

#[test]
fn plus_minus_identity_for_rueppel() {
    // 1 + x - x^2 r(x^2) = 1 - x r(x) + 2x, checked through x^63.
    let n = 64;
    let r = rueppel_series::<Integer>(n);
    let r2 = rueppel_series::<Integer>(n / 2).compose_xk(2);
    let lhs = Series::one(n)
        .add(&Series::x(n))
        .sub(&r2.mul_xk(2).truncated(n).unwrap());
    let rhs = Series::one(n)
        .sub(&r.mul_xk(1).truncated(n).unwrap())
        .add(&Series::x(n).scale(&Integer::new(2)));
    assert_eq!(lhs, rhs);
    let head = [1, 1, -1, 0, -1, 0, 0, 0, -1, 0];
    for (i, &e) in head.iter().enumerate() {
        assert_eq!(lhs.coeff(i), &Integer::new(e), "index {i}");
    }
}

#[test]
fn motzkin_prefix_and_functional_equation() {
    let n = 32;
    let m = motzkin_series::<Integer>(n);
    let expected = [1, 1, 2, 4, 9, 21, 51];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(m.coeff(i), &Integer::new(e));
    }
    // m = 1 + x m + x^2 m^2
    let rhs = Series::one(n)
        .add(&m.mul_xk(1).truncated(n).unwrap())
        .add(&m.mul(&m).mul_xk(2).truncated(n).unwrap());
    assert_eq!(m, rhs);
}

#[test]
fn sequence_helpers() {
    let s: Sequence<Integer> = Sequence::from_i64s(&[1, 0, 2, -2], 0);
    assert_eq!(
        s.partial_sums(),
        Sequence::from_i64s(&[1, 1, 3, 1], 0)
    );
    assert_eq!(s.term(2), Some(&Integer::new(2)));
    let shifted = s.shift_terms(1);
    assert_eq!(shifted.terms(), Sequence::<Integer>::from_i64s(&[0, 2, -2], 0).terms());
    let with_offset: Sequence<Integer> = Sequence::from_i64s(&[5, 6], 2);
    assert_eq!(with_offset.term(1), None);
    assert_eq!(with_offset.term(3), Some(&Integer::new(6)));
}

fn arb_int_series(max_len: usize) -> impl Strategy<Value = Series<Integer>> {
    prop::collection::vec(-100i64..100, 1..max_len).prop_map(|v| Series::from_i64s(&v))
}

fn arb_unit_series(max_len: usize) -> impl Strategy<Value = Series<Integer>> {
    (prop::bool::ANY, prop::collection::vec(-100i64..100, 1..max_len)).prop_map(|(neg, mut v)| {
        v[0] = if neg { -1 } else { 1 };
        Series::from_i64s(&v)
    })
}

proptest! {
    #[test]
    fn mul_is_commutative(a in arb_int_series(16), b in arb_int_series(16)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_is_associative_to_shared_order(
        a in arb_int_series(12),
        b in arb_int_series(12),
        c in arb_int_series(12),
    ) {
        let n = a.order().min(b.order()).min(c.order());
        let lhs = a.mul(&b).mul(&c).truncated(n).unwrap();
        let rhs = a.mul(&b.mul(&c)).truncated(n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn recip_round_trip(s in arb_unit_series(16)) {
        let r = s.recip().unwrap();
        prop_assert_eq!(s.mul(&r), Series::one(s.order()));
    }

    #[test]
    fn compose_xk_multiplies(s in arb_int_series(8), a in 1usize..4, b in 1usize..4) {
        prop_assert_eq!(s.compose_xk(a).compose_xk(b), s.compose_xk(a * b));
    }
}
