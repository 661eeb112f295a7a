//! The 16-element ring of 3x3 matrices over F2 supported on e11, e13, e22,
//! e33. Expected values below were produced by an independent brute-force
//! script (numpy matrix products, complement search for summands,
//! permutation search for isomorphisms) and frozen here.

use summand::caps::Caps;
use summand::ideal::{enumerate_ideals, ideal_generated, idempotents, summand_witness, Side};
use summand::props::{
    check_c2, check_c3, check_sip, check_ssp, is_abelian, theorem_suite, witness_refails, SspMethod, Witness,
};
use summand::ring::{corner_ring, construct, FiniteRing, RingDescriptor};
use summand::{Elem, ElemSet};

fn ring() -> FiniteRing {
    construct(&RingDescriptor::Pattern {
        n: 3,
        base: Box::new(RingDescriptor::Zmod { n: 2 }),
        mask: vec![vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]],
    })
    .unwrap()
}

fn el(r: &FiniteRing, label: &str) -> Elem {
    r.by_label(label).unwrap_or_else(|| panic!("no element {label}"))
}

fn pair(r: &FiniteRing, a: &str, b: &str) -> Option<Witness> {
    Some(Witness::Pair(el(r, a), el(r, b)))
}

#[test]
fn idempotents_and_numbering() {
    let r = ring();
    let found: Vec<(usize, &str)> = idempotents(&r).iter().map(|&e| (e.index(), r.label(e))).collect();
    assert_eq!(
        found,
        vec![
            (0, "0"),
            (1, "e33"),
            (2, "e22"),
            (3, "e22+e33"),
            (5, "e13+e33"),
            (7, "e13+e22+e33"),
            (8, "e11"),
            (9, "e11+e33"),
            (10, "e11+e22"),
            (11, "e11+e22+e33"),
            (12, "e11+e13"),
            (14, "e11+e13+e22"),
        ]
    );
    assert_eq!(r.one().index(), 11);
}

#[test]
fn frozen_property_verdicts() {
    let r = ring();
    let caps = Caps::default();
    let ssp = |side, m| check_ssp(&r, side, m).witness;
    assert_eq!(ssp(Side::Right, SspMethod::Definitional), pair(&r, "e33", "e13+e33"));
    assert_eq!(ssp(Side::Right, SspMethod::EfCriterion), pair(&r, "e11", "e13+e33"));
    assert_eq!(ssp(Side::Left, SspMethod::Definitional), pair(&r, "e11", "e11+e13"));
    assert_eq!(ssp(Side::Left, SspMethod::EfCriterion), pair(&r, "e11", "e13+e33"));
    assert!(check_sip(&r, Side::Right).holds);
    assert!(check_sip(&r, Side::Left).holds);
    assert_eq!(check_c3(&r, Side::Right).witness, pair(&r, "e33", "e13+e33"));
    assert_eq!(check_c3(&r, Side::Left).witness, pair(&r, "e11", "e11+e13"));

    let c2r = check_c2(&r, Side::Right, &caps).unwrap();
    assert_eq!(
        c2r.witness,
        Some(Witness::NonSummandCopy {
            ideal: ElemSet::from_indices(16, [0, 2, 4, 6]),
            idempotent: el(&r, "e22+e33"),
        })
    );
    let c2l = check_c2(&r, Side::Left, &caps).unwrap();
    assert_eq!(
        c2l.witness,
        Some(Witness::NonSummandCopy {
            ideal: ElemSet::from_indices(16, [0, 2, 4, 6]),
            idempotent: el(&r, "e11+e22"),
        })
    );
    for v in [&c2r, &c2l] {
        assert!(witness_refails(&r, v, &caps).unwrap());
    }
    assert!(!is_abelian(&r).holds);
}

#[test]
fn left_sum_of_e4_and_e7_is_not_a_summand() {
    let r = ring();
    let sum = ideal_generated(&r, Side::Left, &[el(&r, "e11+e22"), el(&r, "e11+e13")]);
    assert_eq!(sum.len(), 8);
    assert_eq!(summand_witness(&sum), None);
}

#[test]
fn ideal_lattices() {
    let r = ring();
    for side in Side::BOTH {
        let ideals = enumerate_ideals(&r, side, 64).unwrap();
        assert_eq!(ideals.len(), 14);
        assert_eq!(ideals.iter().filter(|i| summand_witness(i).is_some()).count(), 10);
    }
    let e7r = ideal_generated(&r, Side::Right, &[el(&r, "e11+e13")]);
    let labels: Vec<&str> = e7r.elements().map(|x| r.label(x)).collect();
    assert_eq!(labels, vec!["0", "e13", "e11", "e11+e13"]);
}

#[test]
fn corners() {
    let r = ring();
    assert_eq!(corner_ring(&r, el(&r, "e11+e33")).unwrap().ring.size(), 8);
}

#[test]
fn suite_passes() {
    let report = theorem_suite(&ring(), &Caps::default());
    assert!(report.passed(), "{:#?}", report.failures().collect::<Vec<_>>());
}
