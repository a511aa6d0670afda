mod common;

use common::*;
use knotoid_core::{
    enumerate_colorings, Biquandle, KinkOrder, KnotoidDiagram, Pass, Permutation, R2Variant, Role, Sign,
};
use proptest::prelude::*;

fn arb_diagram(max_crossings: usize) -> impl Strategy<Value = KnotoidDiagram> {
    (0..=max_crossings)
        .prop_flat_map(|c| {
            (
                Just((0..2 * c).collect::<Vec<usize>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), c),
            )
        })
        .prop_map(|(order, signs)| {
            let passes = order
                .iter()
                .map(|&slot| Pass {
                    crossing: slot / 2 + 1,
                    role: if slot % 2 == 0 { Role::Under } else { Role::Over },
                    sign: if signs[slot / 2] { Sign::Positive } else { Sign::Negative },
                })
                .collect();
            KnotoidDiagram::from_passes(passes).unwrap()
        })
}

fn arb_biquandle() -> impl Strategy<Value = Biquandle> {
    prop_oneof![
        (0..BIQUANDLE_FIXTURES.len()).prop_map(|i| biquandle(BIQUANDLE_FIXTURES[i])),
        (2usize..8, 1i64..8, 1i64..8).prop_filter_map("unit parameters", |(n, t, s)| Biquandle::alexander(n, t, s).ok()),
        (1usize..5).prop_flat_map(|n| {
            let all = Permutation::all(n);
            (0..all.len()).prop_map(move |i| Biquandle::constant_action(&all[i]).unwrap())
        }),
    ]
}

fn arb_sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kinks_preserve_invariants(d in arb_diagram(3), b in arb_biquandle(), pos in 0usize..7, sign in arb_sign(), ou in any::<bool>()) {
        let pos = pos % d.semiarc_count();
        let order = if ou { KinkOrder::OverUnder } else { KinkOrder::UnderOver };
        let moved = d.r1_insert(pos, sign, order).unwrap();
        prop_assert_eq!(invariant_signature(&moved, &b), invariant_signature(&d, &b));
    }

    #[test]
    fn bigons_preserve_invariants(d in arb_diagram(3), b in arb_biquandle(), p in 0usize..7, q in 0usize..7, v in 0usize..4, sign in arb_sign()) {
        let (a, c) = (p.min(q) % d.semiarc_count(), p.max(q) % d.semiarc_count());
        let (a, c) = (a.min(c), a.max(c));
        let moved = d.r2_insert(a, c, R2Variant::ALL[v], sign).unwrap();
        prop_assert_eq!(invariant_signature(&moved, &b), invariant_signature(&d, &b));
    }

    #[test]
    fn enumerator_matches_oracle(d in arb_diagram(3), b in arb_biquandle()) {
        prop_assume!(b.order().pow(d.semiarc_count() as u32) <= 200_000);
        prop_assert_eq!(enumerate_colorings(&d, &b), brute_force(&d, &b));
    }

    #[test]
    fn constant_action_matrix_is_identity(d in arb_diagram(4), n in 1usize..5, k in 0usize..24) {
        let all = Permutation::all(n);
        let b = Biquandle::constant_action(&all[k % all.len()]).unwrap();
        let m = knotoid_core::counting_matrix(&d, &b);
        for j in 1..=n {
            for c in 1..=n {
                prop_assert_eq!(m.get(j, c), u64::from(j == c));
            }
        }
    }
}
