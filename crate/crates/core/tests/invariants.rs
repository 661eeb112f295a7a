//! Invariants that must hold on every finite ring, checked on randomly
//! generated small descriptors.

use proptest::prelude::*;
use summand::caps::Caps;
use summand::ideal::{idempotents, Side};
use summand::props::{
    check_c2, check_c3, check_sip, check_ssp, is_abelian, is_regular_ring, semisimple_verdict, theorem_suite,
    witness_refails, SspMethod,
};
use summand::ring::{construct, opposite_ring, validate_axioms, FiniteRing, RingDescriptor};

/// An upper triangular 0/1 mask with ones on the diagonal, closed under
/// composition so it describes a subring.
fn closed_mask(n: usize, bits: &[bool]) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; n]; n];
    let mut k = 0;
    for i in 0..n {
        m[i][i] = 1;
        for j in i + 1..n {
            m[i][j] = bits[k] as u8;
            k += 1;
        }
    }
    for via in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][via] == 1 && m[via][j] == 1 {
                    m[i][j] = 1;
                }
            }
        }
    }
    m
}

fn descriptor() -> impl Strategy<Value = RingDescriptor> {
    let zmod = (1u32..=12).prop_map(|n| RingDescriptor::Zmod { n });
    let product = (2u32..=4, 2u32..=4).prop_map(|(a, b)| RingDescriptor::Product {
        factors: vec![RingDescriptor::Zmod { n: a }, RingDescriptor::Zmod { n: b }],
    });
    let pattern = (2usize..=3, proptest::collection::vec(any::<bool>(), 3)).prop_map(|(n, bits)| {
        RingDescriptor::Pattern {
            n,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
            mask: closed_mask(n, &bits),
        }
    });
    let base = prop_oneof![zmod, product, pattern];
    (base, any::<bool>()).prop_map(|(d, flip)| {
        if flip {
            RingDescriptor::Opposite { base: Box::new(d) }
        } else {
            d
        }
    })
}

fn sided_verdicts(r: &FiniteRing, side: Side, caps: &Caps) -> Vec<summand::props::PropertyVerdict> {
    vec![
        check_ssp(r, side, SspMethod::Definitional),
        check_ssp(r, side, SspMethod::EfCriterion),
        check_sip(r, side),
        check_c3(r, side),
        check_c2(r, side, caps).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn suite_and_witnesses_hold(d in descriptor()) {
        let caps = Caps::default();
        let r = construct(&d).unwrap();
        prop_assert!(validate_axioms(&r).passed);
        let report = theorem_suite(&r, &caps);
        prop_assert!(report.passed(), "{:?}: {:#?}", d, report.failures().collect::<Vec<_>>());

        let mut verdicts = vec![is_regular_ring(&r), is_abelian(&r), semisimple_verdict(&r)];
        for side in Side::BOTH {
            verdicts.extend(sided_verdicts(&r, side, &caps));
        }
        for v in &verdicts {
            prop_assert_eq!(v.holds, v.witness.is_none());
            if !v.holds {
                prop_assert!(witness_refails(&r, v, &caps).unwrap(), "{:?}", v);
            }
        }
    }

    #[test]
    fn opposite_swaps_sides(d in descriptor()) {
        let caps = Caps::default();
        let r = construct(&d).unwrap();
        let op = opposite_ring(&r);
        prop_assert!(opposite_ring(&op).same_tables(&r));
        let (ir, iop) = (idempotents(&r), idempotents(&op));
        prop_assert_eq!(ir.as_slice(), iop.as_slice());
        // The ef criterion tests efR on the right and Ref on the left, which
        // in the opposite ring is feR: the verdict carries over but the
        // witness pair comes out reversed.
        let strip = |mut vs: Vec<summand::props::PropertyVerdict>| {
            vs[1].witness = None;
            vs.into_iter().map(|v| (v.property, v.holds, v.witness)).collect::<Vec<_>>()
        };
        prop_assert_eq!(strip(sided_verdicts(&r, Side::Right, &caps)), strip(sided_verdicts(&op, Side::Left, &caps)));
    }
}
