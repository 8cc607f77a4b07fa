use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use ostro_core::exactq::floor_small;
use ostro_core::{isqrt, QuadOp, QuadraticValue};
use proptest::prelude::*;

fn delta_for(d: u64) -> u64 {
    d * d + 4
}

/// Sign of `(p + q√Δ)/r` from a 100-digit decimal bracket of `|q|√Δ`, taken
/// with num's square root rather than the crate's. `None` when the bracket
/// straddles zero.
fn decimal_oracle_sign(p: &BigInt, q: &BigInt, delta: u64) -> Option<i8> {
    if q.is_zero() {
        return Some(match p.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        });
    }
    let scale = BigInt::from(10u32).pow(100);
    let s = (q * q * BigInt::from(delta) * &scale * &scale).sqrt();
    let big_p = p * &scale;
    let (lo, hi) = if q.is_positive() {
        (&big_p + &s, &big_p + &s + 1u32)
    } else {
        (&big_p - &s - 1u32, &big_p - &s)
    };
    if !lo.is_negative() {
        Some(1)
    } else if !hi.is_positive() {
        Some(-1)
    } else {
        None
    }
}

fn value_in(d: u64) -> impl Strategy<Value = QuadraticValue> {
    (any::<i64>(), any::<i64>(), 1i64..1_000_000)
        .prop_map(move |(p, q, r)| QuadraticValue::new(p, q, r, delta_for(d)).unwrap())
}

fn value() -> impl Strategy<Value = QuadraticValue> {
    (1u64..=10).prop_flat_map(value_in)
}

/// Values within a few units of zero, where floating point would fail.
fn near_zero() -> impl Strategy<Value = QuadraticValue> {
    (1u64..=10, -1_000_000_000_000i64..1_000_000_000_000, -3i64..=3, 1i64..50).prop_map(|(d, q, k, r)| {
        let delta = delta_for(d);
        let root = isqrt(&(BigInt::from(q) * q * delta));
        let p = if q >= 0 { -root + k } else { root + k };
        QuadraticValue::new(p, q, r, delta).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn floor_brackets_value(x in prop_oneof![value(), near_zero()]) {
        let f = x.floor();
        let below = x.add_integer(-f.clone());
        let above = x.add_integer(-(f + BigInt::from(1)));
        prop_assert!(below.sign() >= 0);
        prop_assert!(above.sign() < 0);
        prop_assert_eq!(x.ceil(), -(-&x).floor());
    }

    #[test]
    fn sign_agrees_with_decimal_oracle(x in prop_oneof![value(), near_zero()]) {
        let oracle = decimal_oracle_sign(x.p(), x.q(), x.delta());
        prop_assume!(oracle.is_some());
        prop_assert_eq!(Some(x.sign()), oracle);
    }

    #[test]
    fn comparison_agrees_with_decimal_oracle(d in 1u64..=10, a in any::<(i32, i32, u16)>(), b in any::<(i32, i32, u16)>()) {
        let delta = delta_for(d);
        let x = QuadraticValue::new(a.0, a.1, a.2 as i64 + 1, delta).unwrap();
        let y = QuadraticValue::new(b.0, b.1, b.2 as i64 + 1, delta).unwrap();
        let diff = x.combine(&y, QuadOp::Sub).unwrap();
        let oracle = decimal_oracle_sign(diff.p(), diff.q(), delta);
        prop_assume!(oracle.is_some());
        prop_assert_eq!(x.compare(&y).unwrap() as i8, oracle.unwrap());
    }

    #[test]
    fn small_floor_matches_big_floor(d in 1u64..=10, p in any::<i64>(), q in any::<i32>(), r in -1000i64..1000) {
        prop_assume!(r != 0);
        let delta = delta_for(d);
        let big = QuadraticValue::new(p, q, r, delta).unwrap().floor();
        let small = floor_small(p as i128, q as i128, r as i128, delta).unwrap();
        prop_assert_eq!(big, BigInt::from(small));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn conjugation_is_a_field_automorphism(
        (x, y) in (1u64..=10).prop_flat_map(|d| (value_in(d), value_in(d)))
    ) {
        for op in [QuadOp::Add, QuadOp::Sub, QuadOp::Mul] {
            let lhs = x.combine(&y, op).unwrap().conjugate();
            let rhs = x.conjugate().combine(&y.conjugate(), op).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let norm = x.combine(&x.conjugate(), QuadOp::Mul).unwrap();
        prop_assert!(norm.is_rational());
    }
}

#[test]
fn alpha_is_a_root_of_its_minimal_polynomial() {
    for d in 1..=10u64 {
        let delta = delta_for(d);
        let alpha = QuadraticValue::new(d, 1, 2, delta).unwrap();
        let lhs = &alpha * &alpha;
        let rhs = alpha.scale(d).add_integer(1);
        assert_eq!((&lhs - &rhs).sign(), 0, "d={d}");
    }
}

#[test]
fn mismatched_fields_are_rejected() {
    let a = QuadraticValue::sqrt_delta(8);
    let b = QuadraticValue::sqrt_delta(5);
    assert!(a.combine(&b, QuadOp::Add).is_err());
    assert!(a.compare(&b).is_err());
}
