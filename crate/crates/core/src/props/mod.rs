//! Decision procedures for ring properties.
//!
//! Every checker scans its whole universe (all elements, or all ordered
//! pairs of idempotents) and, on failure, reports the least counterexample.
//! Scans run in parallel but use first-match reduction, so the reported
//! witness does not depend on scheduling.

mod suite;

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::ideal::{
    enumerate_ideals, ideal_generated, idempotents, is_ideal, principal_set, summand_witness, Ideal, Side,
    SummandTable,
};
use crate::module::{is_isomorphic, FiniteModule};
use crate::ring::{opposite_ring, Elem, FiniteRing};
use crate::set::ElemSet;

pub use suite::{theorem_suite, CheckRecord, CheckStatus, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Ssp,
    Sip,
    C2,
    C3,
    Regular,
    Abelian,
    Semisimple,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Ssp => "ssp",
            Property::Sip => "sip",
            Property::C2 => "c2",
            Property::C3 => "c3",
            Property::Regular => "regular",
            Property::Abelian => "abelian",
            Property::Semisimple => "semisimple",
        }
    }

    /// Whether the property is stated for one side at a time.
    pub fn is_sided(self) -> bool {
        matches!(self, Property::Ssp | Property::Sip | Property::C2 | Property::C3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Sum or intersection of `eR`, `fR` tested directly.
    Definitional,
    /// `efR` (or `Ref`) tested for every idempotent pair.
    EfCriterion,
    ElementScan,
    /// Ideals (or submodules) enumerated and compared up to isomorphism.
    IsomorphismScan,
    Radical,
    /// Summands taken as images of idempotent endomorphisms.
    IdempotentEndomorphisms,
    /// Full enumeration was over a cap; a counterexample was found among
    /// cyclic summands and certified by projection searches.
    WitnessSearch,
}

/// Which SSP criterion [`check_ssp`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SspMethod {
    Definitional,
    EfCriterion,
}

/// A counterexample attached to a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An element without the required property (e.g. not regular).
    Element(Elem),
    /// A pair of idempotents whose summands violate the property.
    Pair(Elem, Elem),
    /// An idempotent and an element that fail to commute.
    Commutator { idempotent: Elem, element: Elem },
    /// A one-sided ideal isomorphic to the summand generated by
    /// `idempotent` without being a summand itself.
    NonSummandCopy { ideal: ElemSet, idempotent: Elem },
    /// Two module summands whose sum or intersection is not a summand.
    Summands(ElemSet, ElemSet),
    /// A submodule isomorphic to `summand` that is not a summand.
    SubmoduleCopy { submodule: ElemSet, summand: ElemSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub property: Property,
    pub side: Option<Side>,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl PropertyVerdict {
    fn from_scan(property: Property, side: Option<Side>, method: Method, witness: Option<Witness>) -> Self {
        PropertyVerdict {
            property,
            side,
            holds: witness.is_none(),
            witness,
            method,
        }
    }
}

/// Least index pair `(i, j)` in `0..n x 0..n` satisfying `fails`.
pub(crate) fn first_failing_pair(n: usize, fails: impl Fn(usize, usize) -> bool + Sync) -> Option<(usize, usize)> {
    (0..n * n)
        .into_par_iter()
        .find_first(|&k| fails(k / n, k % n))
        .map(|k| (k / n, k % n))
}

/// Summands of one side together with additive generators of each, which
/// makes repeated sums `eR + fR` cheap.
struct PairScan<'r> {
    table: SummandTable<'r>,
    gens: Vec<Vec<Elem>>,
}

impl<'r> PairScan<'r> {
    fn new(ring: &'r FiniteRing, side: Side) -> Self {
        let table = SummandTable::new(ring, side);
        let gens = (0..table.idempotents().len())
            .map(|k| ring.additive_generators(table.generated(k)))
            .collect();
        PairScan { table, gens }
    }

    fn ring(&self) -> &'r FiniteRing {
        self.table.ring()
    }

    fn len(&self) -> usize {
        self.table.idempotents().len()
    }

    fn idem(&self, k: usize) -> Elem {
        self.table.idempotents().as_slice()[k]
    }

    fn sum(&self, i: usize, j: usize) -> ElemSet {
        self.ring().additive_closure(self.table.generated(i), &self.gens[j])
    }

    fn intersection(&self, i: usize, j: usize) -> ElemSet {
        self.table.generated(i).intersection(self.table.generated(j))
    }

    fn pair_verdict(&self, property: Property, method: Method, fails: impl Fn(usize, usize) -> bool + Sync) -> PropertyVerdict {
        let witness = first_failing_pair(self.len(), fails).map(|(i, j)| Witness::Pair(self.idem(i), self.idem(j)));
        PropertyVerdict::from_scan(property, Some(self.table.side()), method, witness)
    }
}

/// Least `b` with `a*b*a = a`.
pub fn regular_inverse(ring: &FiniteRing, a: Elem) -> Option<Elem> {
    ring.elements().find(|&b| ring.mul(ring.mul(a, b), a) == a)
}

pub fn is_regular_ring(ring: &FiniteRing) -> PropertyVerdict {
    let witness = ring
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_first(|&a| regular_inverse(ring, a).is_none())
        .map(Witness::Element);
    PropertyVerdict::from_scan(Property::Regular, None, Method::ElementScan, witness)
}

/// Every idempotent central.
pub fn is_abelian(ring: &FiniteRing) -> PropertyVerdict {
    let witness = idempotents(ring).iter().find_map(|&e| {
        ring.elements()
            .find(|&r| ring.mul(e, r) != ring.mul(r, e))
            .map(|r| Witness::Commutator { idempotent: e, element: r })
    });
    PropertyVerdict::from_scan(Property::Abelian, None, Method::ElementScan, witness)
}

/// Summand sum property on one side.
///
/// `Definitional` tests that `eR + fR` is a summand for every pair of
/// idempotents; `EfCriterion` tests `efR` instead (`Ref` on the left).
pub fn check_ssp(ring: &FiniteRing, side: Side, method: SspMethod) -> PropertyVerdict {
    let scan = PairScan::new(ring, side);
    match method {
        SspMethod::Definitional => scan.pair_verdict(Property::Ssp, Method::Definitional, |i, j| {
            !scan.table.is_summand(&scan.sum(i, j))
        }),
        SspMethod::EfCriterion => scan.pair_verdict(Property::Ssp, Method::EfCriterion, |i, j| {
            let ef = ring.mul(scan.idem(i), scan.idem(j));
            !scan.table.is_summand(&principal_set(ring, side, ef))
        }),
    }
}

/// Summand intersection property on one side.
pub fn check_sip(ring: &FiniteRing, side: Side) -> PropertyVerdict {
    let scan = PairScan::new(ring, side);
    scan.pair_verdict(Property::Sip, Method::Definitional, |i, j| {
        !scan.table.is_summand(&scan.intersection(i, j))
    })
}

/// C3: summands meeting in zero have a summand as their sum.
pub fn check_c3(ring: &FiniteRing, side: Side) -> PropertyVerdict {
    let scan = PairScan::new(ring, side);
    scan.pair_verdict(Property::C3, Method::Definitional, |i, j| {
        scan.intersection(i, j).len() == 1 && !scan.table.is_summand(&scan.sum(i, j))
    })
}

/// C2: every one-sided ideal isomorphic to a summand is a summand.
///
/// Needs all ideals, so the ring must fit `caps.ideals`. Left ideals are
/// handled as right ideals of the opposite ring.
pub fn check_c2(ring: &FiniteRing, side: Side, caps: &Caps) -> Result<PropertyVerdict> {
    let right_ring = match side {
        Side::Right => Arc::new(ring.clone()),
        Side::Left => Arc::new(opposite_ring(ring)),
    };
    let ideals = enumerate_ideals(&right_ring, Side::Right, caps.ideals)?;
    let table = SummandTable::new(&right_ring, Side::Right);
    let summands: Vec<(Elem, &ElemSet)> = table
        .idempotents()
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, table.generated(k)))
        .filter(|(e, set)| table.witness(set) == Some(*e))
        .collect();
    let mut witness = None;
    'ideals: for ideal in &ideals {
        if table.is_summand(ideal.members()) {
            continue;
        }
        let as_module = FiniteModule::from_right_ideal(right_ring.clone(), ideal.members())?;
        for &(e, set) in summands.iter().filter(|(_, s)| s.len() == ideal.len()) {
            let summand = FiniteModule::from_right_ideal(right_ring.clone(), set)?;
            if is_isomorphic(&as_module, &summand, caps.hom)?.is_some() {
                witness = Some(Witness::NonSummandCopy {
                    ideal: ideal.members().clone(),
                    idempotent: e,
                });
                break 'ideals;
            }
        }
    }
    Ok(PropertyVerdict::from_scan(Property::C2, Some(side), Method::IsomorphismScan, witness))
}

/// Jacobson radical of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalResult {
    /// A two-sided ideal.
    pub radical: ElemSet,
    pub is_semisimple: bool,
}

/// `J(R) = {a : 1 - ra is a unit for all r}`.
pub fn semisimplicity(ring: &FiniteRing) -> RadicalResult {
    let units = ring.units();
    let members: Vec<usize> = ring
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&a| {
            ring.elements()
                .all(|r| units.contains(ring.complement(ring.mul(r, a)).index()))
        })
        .map(Elem::index)
        .collect();
    let radical = ElemSet::from_indices(ring.size(), members);
    assert!(
        is_ideal(ring, Side::Left, &radical) && is_ideal(ring, Side::Right, &radical),
        "quasi-regular set is not a two-sided ideal"
    );
    RadicalResult {
        is_semisimple: radical.len() == 1,
        radical,
    }
}

pub fn semisimple_verdict(ring: &FiniteRing) -> PropertyVerdict {
    let rad = semisimplicity(ring);
    let witness = rad
        .radical
        .iter()
        .map(|i| ring.elem(i).unwrap())
        .find(|&a| a != ring.zero())
        .map(Witness::Element);
    PropertyVerdict::from_scan(Property::Semisimple, None, Method::Radical, witness)
}

/// Independent semisimplicity test: every right ideal is a summand.
pub fn all_right_ideals_are_summands(ring: &FiniteRing, size_cap: usize) -> Result<bool> {
    Ok(enumerate_ideals(ring, Side::Right, size_cap)?
        .iter()
        .all(|i| summand_witness(i).is_some()))
}

/// Re-runs the single-instance check behind a failed verdict, without the
/// cached tables the scan used. Returns `true` when the witness still fails.
pub fn witness_refails(ring: &FiniteRing, verdict: &PropertyVerdict, caps: &Caps) -> Result<bool> {
    let Some(witness) = &verdict.witness else {
        return Ok(false);
    };
    let side = verdict.side.unwrap_or(Side::Right);
    let ideal_of = |e: Elem| ideal_generated(ring, side, &[e]);
    Ok(match (verdict.property, witness) {
        (Property::Ssp, &Witness::Pair(e, f)) => match verdict.method {
            Method::EfCriterion => summand_witness(&ideal_of(ring.mul(e, f))).is_none(),
            _ => summand_witness(&ideal_generated(ring, side, &[e, f])).is_none(),
        },
        (Property::Sip, &Witness::Pair(e, f)) => {
            let meet = crate::ideal::ideal_intersect(&ideal_of(e), &ideal_of(f))?;
            summand_witness(&meet).is_none()
        }
        (Property::C3, &Witness::Pair(e, f)) => {
            let meet = crate::ideal::ideal_intersect(&ideal_of(e), &ideal_of(f))?;
            meet.is_zero() && summand_witness(&ideal_generated(ring, side, &[e, f])).is_none()
        }
        (Property::C2, Witness::NonSummandCopy { ideal, idempotent }) => {
            let copy_ideal = Ideal::from_members(ring, side, ideal.clone())?;
            let module_ring = Arc::new(match side {
                Side::Right => ring.clone(),
                Side::Left => opposite_ring(ring),
            });
            let copy = FiniteModule::from_right_ideal(module_ring.clone(), ideal)?;
            let summand = FiniteModule::from_right_ideal(module_ring, &principal_set(ring, side, *idempotent))?;
            summand_witness(&copy_ideal).is_none() && is_isomorphic(&copy, &summand, caps.hom)?.is_some()
        }
        (Property::Regular, &Witness::Element(a)) => regular_inverse(ring, a).is_none(),
        (Property::Abelian, &Witness::Commutator { idempotent, element }) => {
            ring.is_idempotent(idempotent) && ring.mul(idempotent, element) != ring.mul(element, idempotent)
        }
        (Property::Semisimple, &Witness::Element(a)) => {
            a != ring.zero() && ring.elements().all(|r| ring.invertibility(ring.complement(ring.mul(r, a))).two_sided_inverse.is_some())
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{construct, zmod, RingDescriptor};

    fn m2(base: RingDescriptor) -> FiniteRing {
        construct(&RingDescriptor::Matrix { n: 2, base: Box::new(base) }).unwrap()
    }

    #[test]
    fn regular_elements() {
        let z4 = zmod(4).unwrap();
        assert_eq!(regular_inverse(&z4, z4.elem(2).unwrap()), None);
        assert_eq!(regular_inverse(&z4, z4.one()), Some(z4.one()));
        let m = m2(RingDescriptor::Zmod { n: 2 });
        let e12 = m.by_label("e12").unwrap();
        // least b with e12*b*e12 = e12 is e21 (index 2, entries 0,0,1,0)
        assert_eq!(regular_inverse(&m, e12), m.by_label("e21"));
    }

    #[test]
    fn regular_rings() {
        assert!(is_regular_ring(&zmod(2).unwrap()).holds);
        let v = is_regular_ring(&zmod(4).unwrap());
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Element(Elem(2))));
        assert!(is_regular_ring(&m2(RingDescriptor::Zmod { n: 2 })).holds);
    }

    #[test]
    fn abelian_rings() {
        assert!(is_abelian(&zmod(6).unwrap()).holds);
        let m = m2(RingDescriptor::Zmod { n: 2 });
        let v = is_abelian(&m);
        assert!(!v.holds);
        let (e22, e21) = (m.by_label("e22").unwrap(), m.by_label("e21").unwrap());
        assert_eq!(v.witness, Some(Witness::Commutator { idempotent: e22, element: e21 }));
        let (e11, e12) = (m.by_label("e11").unwrap(), m.by_label("e12").unwrap());
        assert_ne!(m.mul(e11, e12), m.mul(e12, e11));
    }

    #[test]
    fn commutative_rings_have_everything() {
        for n in [2, 4, 6, 8, 12] {
            let r = zmod(n).unwrap();
            for side in Side::BOTH {
                assert!(check_ssp(&r, side, SspMethod::Definitional).holds);
                assert!(check_ssp(&r, side, SspMethod::EfCriterion).holds);
                assert!(check_sip(&r, side).holds);
                assert!(check_c3(&r, side).holds);
            }
        }
    }

    #[test]
    fn matrix_ring_over_field_is_ssp() {
        let m = m2(RingDescriptor::Zmod { n: 2 });
        assert!(check_ssp(&m, Side::Right, SspMethod::Definitional).holds);
        assert!(check_sip(&m, Side::Left).holds);
    }

    #[test]
    fn c2_small_cases() {
        let caps = Caps::default();
        assert!(check_c2(&zmod(2).unwrap(), Side::Right, &caps).unwrap().holds);
        assert!(check_c2(&zmod(4).unwrap(), Side::Right, &caps).unwrap().holds);
        assert!(check_c2(&zmod(8).unwrap(), Side::Left, &caps).unwrap().holds);
        let big = m2(RingDescriptor::Zmod { n: 3 });
        assert!(matches!(check_c2(&big, Side::Right, &caps), Err(crate::Error::IdealCap { .. })));
    }

    #[test]
    fn radicals() {
        let f2 = semisimplicity(&zmod(2).unwrap());
        assert!(f2.is_semisimple);
        let z4 = semisimplicity(&zmod(4).unwrap());
        assert_eq!(z4.radical.to_vec(), vec![0, 2]);
        assert!(!z4.is_semisimple);
        assert!(semisimplicity(&m2(RingDescriptor::Zmod { n: 2 })).is_semisimple);
        // Z/12: radical is 6Z/12
        assert_eq!(semisimplicity(&zmod(12).unwrap()).radical.to_vec(), vec![0, 6]);
    }

    #[test]
    fn failed_witnesses_refail() {
        let caps = Caps::default();
        let z4 = zmod(4).unwrap();
        let v = is_regular_ring(&z4);
        assert!(witness_refails(&z4, &v, &caps).unwrap());
        let v = semisimple_verdict(&z4);
        assert!(witness_refails(&z4, &v, &caps).unwrap());
        let m = m2(RingDescriptor::Zmod { n: 2 });
        let v = is_abelian(&m);
        assert!(witness_refails(&m, &v, &caps).unwrap());
    }
}
