use num_bigint::BigInt;
use num_integer::Integer;
use ostro_core::ostronometry::{row_companion, verify_identity, verify_row_identity, BigSequences, Identity};
use ostro_core::towers::array_entry;
use ostro_core::NumerationContext;
use proptest::prelude::*;

fn ctx(d: u32) -> NumerationContext {
    NumerationContext::new(d).unwrap()
}

#[test]
fn every_family_holds_on_its_standard_scope() {
    for d in 1..=10 {
        let c = ctx(d);
        for id in Identity::ALL {
            let r = verify_identity(&c, id, id.standard_scope()).unwrap();
            assert!(
                r.passed(),
                "{id} d={d}: {:?}",
                &r.counterexamples[..r.counterexamples.len().min(3)]
            );
        }
    }
}

#[test]
fn divisibility_note_only_for_d1() {
    let scope = Identity::Divisibility.standard_scope();
    assert!(!verify_identity(&ctx(1), Identity::Divisibility, scope)
        .unwrap()
        .notes
        .is_empty());
    assert!(verify_identity(&ctx(2), Identity::Divisibility, scope)
        .unwrap()
        .notes
        .is_empty());
}

#[test]
fn row_identities_hold_for_the_first_hundred_rows() {
    for d in 2..=6 {
        let c = ctx(d);
        for m in 1..=100 {
            let r = verify_row_identity(&c, m, 20).unwrap();
            assert!(
                r.passed(),
                "d={d} m={m}: {:?}",
                &r.counterexamples[..r.counterexamples.len().min(3)]
            );
        }
    }
}

// Row 1 is D_{n+shift}, so its Jacobi variant is d'Ocagne in disguise.
#[test]
fn first_row_is_a_shifted_denominator_sequence() {
    for d in 2..=6 {
        let c = ctx(d);
        let rc = row_companion(&c, 1).unwrap();
        let s = BigSequences::new(d, 40);
        let offset = (-3..=3)
            .find(|&t| (0..5).all(|n| rc.y(n) == s.denominator(n + t)))
            .expect("row 1 is a shift of D");
        for n in -15..=15 {
            assert_eq!(rc.y(n), s.denominator(n + offset));
        }
        assert_eq!(rc.c, BigInt::from(4));
    }
}

#[test]
fn unknown_identity_is_rejected() {
    assert!("fermat".parse::<Identity>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn row_pell_constant_is_a_norm(d in 2u32..=8, m in 1usize..3000) {
        let c = ctx(d);
        let rc = row_companion(&c, m).unwrap();
        let y0 = BigInt::from(array_entry(&c, m, 0).unwrap());
        let y1 = BigInt::from(array_entry(&c, m, 1).unwrap());
        // C = 4(Y1² − dY0Y1 − Y0²)
        let direct: BigInt = (&y1 * &y1 - &y0 * &y1 * d - &y0 * &y0) * 4;
        prop_assert_eq!(&rc.c, &direct);
        for n in -8i64..=8 {
            let lhs = rc.x(n).pow(2) - rc.y(n).pow(2) * c.delta();
            let rhs = if n.is_even() { rc.c.clone() } else { -rc.c.clone() };
            prop_assert_eq!(lhs, rhs);
        }
    }
}
