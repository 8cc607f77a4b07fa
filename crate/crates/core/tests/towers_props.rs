use std::collections::{BTreeSet, HashMap};

use ostro_core::numer::NumerationContext;
use ostro_core::towers::*;
use ostro_core::QuadraticValue;
use proptest::prelude::*;

fn ctx(d: u32) -> NumerationContext {
    NumerationContext::new(d).unwrap()
}

#[test]
fn rows_follow_the_recurrence() {
    for d in 2..=6 {
        let c = ctx(d);
        for m in 1..=500 {
            let r = row(&c, m, -12..=12).unwrap();
            for n in -11..=11 {
                let (a, b, x) = (r.get(n - 1).unwrap(), r.get(n).unwrap(), r.get(n + 1).unwrap());
                assert_eq!(x, d as i128 * b + a, "d={d} m={m} n={n}");
            }
            assert_eq!(r.get(3).unwrap(), array_entry_by_recurrence(&c, m, 3).unwrap());
            assert_eq!(r.get(-7).unwrap(), array_entry_by_recurrence(&c, m, -7).unwrap());
        }
    }
}

#[test]
fn right_gaps_alternate_and_shrink_by_beta() {
    for d in 2..=4 {
        let c = ctx(d);
        for m in 1..=100 {
            let gap =
                |n: i64| c.qv(array_entry(&c, m, n + 1).unwrap()) - c.alpha().scale(array_entry(&c, m, n).unwrap());
            let mut prev = gap(1);
            for n in 2..=20 {
                let cur = gap(n);
                assert_eq!(cur.sign(), -prev.sign(), "d={d} m={m} n={n}");
                assert_eq!(cur, &prev * c.beta());
                prev = cur;
            }
        }
    }
}

#[test]
fn left_gaps_are_positive_and_shrink_by_inverse_alpha() {
    for d in 2..=4 {
        let c = ctx(d);
        let one = QuadraticValue::one(c.delta());
        for m in 1..=100 {
            let gap = |k: i64| c.qv(neg_entry(&c, m, k + 1).unwrap()) + c.alpha().scale(neg_entry(&c, m, k).unwrap());
            let mut prev = gap(1);
            let in_unit_window =
                |x: &QuadraticValue| x.compare(c.inv_alpha()).unwrap().is_ge() && x.compare(&one).unwrap().is_lt();
            assert!(in_unit_window(&prev), "d={d} m={m}");
            for k in 2..=12 {
                let cur = gap(k);
                assert_eq!(cur.sign(), 1);
                assert_eq!(cur, &prev * c.inv_alpha());
                assert!(!in_unit_window(&cur));
                prev = cur;
            }
        }
    }
}

#[test]
fn first_column_closed_form_and_complement() {
    for d in 2..=6 {
        let c = ctx(d);
        let mut first = BTreeSet::new();
        for m in 1..=10_000 {
            let v = first_column(&c, m).unwrap();
            assert_eq!(v, first_column_word(&c, m).unwrap(), "d={d} m={m}");
            first.insert(v);
        }
        let top = *first.last().unwrap();
        let outs: BTreeSet<i128> = (1..).map(|n| c.out(n).unwrap()).take_while(|&v| v <= top).collect();
        assert!(first.is_disjoint(&outs));
        assert_eq!(first.len() + outs.len(), top as usize, "d={d}");
    }
}

#[test]
fn closed_form_wall_term_holds_for_d2() {
    let c = ctx(2);
    for m in 1..=10_000 {
        assert_eq!(wall_term(&c, m).unwrap(), wall_term_word(&c, m).unwrap(), "m={m}");
        assert_eq!(wall_term_word(&c, m).unwrap(), array_entry(&c, m, 0).unwrap());
    }
}

#[test]
fn closed_form_wall_term_misses_repeated_first_digits() {
    // For d ≥ 3 the rows labelled 1 and 2 both have an empty remainder.
    for d in 3..=6 {
        let c = ctx(d);
        assert_eq!(c.trimmed_word(2).unwrap().to_lsd_string(), "2");
        assert_eq!(wall_term_word(&c, 2).unwrap(), 0);
        assert_eq!(array_entry(&c, 2, 0).unwrap(), 0);
        assert_eq!(wall_term(&c, 2).unwrap(), 1);
    }
}

#[test]
fn wall_offsets_are_zero_or_one() {
    for d in 2..=4 {
        let c = ctx(d);
        for m in 1..=10_000 {
            let p = wall_profile(&c, m).unwrap();
            assert!(p.offset_i <= 1);
            assert_eq!(p.coincide, p.offset_i == 0);
            let partner = array_entry(&c, p.partner_k, 5).unwrap();
            assert_eq!(neg_entry(&c, m, p.offset_i as i64 + 5).unwrap().abs(), partner);
        }
    }
}

#[test]
fn coinciding_numbers_sit_at_merged_walls() {
    let c = ctx(2);
    let mut at_red_wall: HashMap<i128, usize> = HashMap::new();
    let mut m = 1;
    while c.trimmed_word(m).unwrap().len() <= 12 {
        at_red_wall.insert(neg_entry(&c, m, 1).unwrap(), m);
        m += 1;
    }
    for n in 1..=1000i128 {
        let merged = at_red_wall
            .get(&n)
            .is_some_and(|&m| wall_profile(&c, m).unwrap().offset_i == 0);
        let coinciding = terrace_class(&c, n).unwrap() == TerraceClass::Coinciding;
        assert_eq!(merged, coinciding, "N={n}");
    }
}

#[test]
fn coinciding_fraction_is_near_its_limit() {
    let c = ctx(2);
    let total = 100_000i128;
    let count = (1..=total)
        .filter(|&n| terrace_class(&c, n).unwrap() == TerraceClass::Coinciding)
        .count();
    let observed = QuadraticValue::new(count as i64, 0, total, c.delta()).unwrap();
    let gap = &observed - &coinciding_density(&c);
    let tol = QuadraticValue::new(1, 0, 100, c.delta()).unwrap();
    assert!(gap.compare(&tol).unwrap().is_le() && gap.compare(&-&tol).unwrap().is_ge());
}

#[test]
fn block_formula_matches_scan() {
    for (d, top) in [(2u32, 8u32), (3, 7)] {
        let c = ctx(d);
        for k in 1..=top {
            let f = block_counts(&c, k).unwrap();
            let s = block_scan(&c, k).unwrap();
            assert_eq!((f.deedees, f.edees), (s.deedees, s.edees), "d={d} k={k}");
        }
    }
}

#[test]
fn rotation_orbit_of_first_column_offset() {
    for d in 2..=10 {
        let c = ctx(d);
        let a = c.alpha();
        let offset = -(a * &a.add_integer(-1)).recip().unwrap();
        let iterate = c.alpha_bar().scale(d - 1);
        assert_eq!(offset.frac(), iterate.frac(), "d={d}");
    }
}

#[test]
fn sturmian_code_is_balanced() {
    for d in 2..=4 {
        let c = ctx(d);
        let code = sturmian_code(&c, 10_000).unwrap();
        let mut prefix = vec![0u32];
        for &b in &code {
            prefix.push(prefix.last().unwrap() + b as u32);
        }
        for len in 1..=50 {
            let sums: Vec<u32> = (0..=code.len() - len).map(|i| prefix[i + len] - prefix[i]).collect();
            let (lo, hi) = (sums.iter().min().unwrap(), sums.iter().max().unwrap());
            assert!(hi - lo <= 1, "d={d} len={len}");
        }
    }
}

#[test]
fn column_differences_map_forward_under_out() {
    let c = ctx(2);
    let sets: Vec<BTreeSet<i128>> = (1..=6)
        .map(|k| column_difference_pattern(&c, k, 1000).unwrap())
        .collect();
    assert_eq!(sets[1], BTreeSet::from([3, 4, 5]));
    assert_eq!(sets[2], BTreeSet::from([7, 10, 12]));
    for k in 1..5 {
        assert!(sets[k].len() <= 3);
        let mapped: BTreeSet<i128> = sets[k].iter().map(|&x| c.out(x).unwrap()).collect();
        assert_eq!(mapped, sets[k + 1], "column {}", k + 1);
    }
}

#[test]
fn locate_inverts_array_entry() {
    for d in 1..=4 {
        let c = ctx(d);
        for m in 1..=300 {
            for n in 1..=6 {
                let v = array_entry(&c, m, n).unwrap();
                assert_eq!(locate(&c, v).unwrap(), (m, n), "d={d}");
            }
        }
    }
}

#[test]
fn locate_left_inverts_neg_entry() {
    assert!(locate_left(&ctx(1), -1).is_err());
    for d in 2..=4 {
        let c = ctx(d);
        for m in 1..=300 {
            for n in 1..=6 {
                let v = neg_entry(&c, m, n).unwrap();
                if v != 0 {
                    assert_eq!(locate_left(&c, v).unwrap(), (m, n), "d={d} v={v}");
                }
            }
        }
        for v in -500..=500 {
            if v != 0 {
                let (m, n) = locate_left(&c, v).unwrap();
                assert_eq!(neg_entry(&c, m, n).unwrap(), v);
            }
        }
    }
}

#[test]
fn stolarsky_coverage() {
    for d in 2..=5 {
        let c = ctx(d);
        let r = stolarsky_audit(&c, 3000).unwrap();
        assert!(r.passed(), "d={d}: {:?}", &r.violations[..r.violations.len().min(5)]);
    }
}

#[test]
fn palindromes_reappear_at_their_own_level() {
    let c = ctx(2);
    for m in 1..=2000 {
        let p = classify_palindrome(&c, m).unwrap();
        if p.kind != PalindromeKind::None {
            for n in 1..=6 {
                let left = array_entry(&c, m, -n - 2 * p.shift).unwrap().abs();
                assert_eq!(left, array_entry(&c, m, n).unwrap(), "m={m}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn tail_locate_joins_the_right_row(d in 2u32..=4, b0 in -120i128..120, b1 in 1i128..120) {
        let c = ctx(d);
        // The α-coefficient of the Binet form has the sign of b1 + b0/α.
        let lead = c.qv(b1) + c.inv_alpha().scale(b0);
        prop_assume!(lead.sign() > 0);
        let (m, shift) = tail_locate(&c, b0, b1).unwrap();
        let (mut x, mut y) = (b0, b1);
        for n in 0..=24i64 {
            if n >= 16 {
                prop_assert_eq!(x, array_entry(&c, m, n + shift).unwrap());
            }
            (x, y) = (y, d as i128 * y + x);
        }
    }
}
