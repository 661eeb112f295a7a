//! One-sided ideals, idempotents, annihilators and the direct-summand test.
//!
//! A one-sided ideal `N` of `R` is a direct summand of the regular module
//! exactly when `N = eR` (right) or `N = Re` (left) for an idempotent `e`:
//! a decomposition `R = N ⊕ K` splits `1 = e + f`, and `e` generates `N`.
//! [`summand_witness`] and [`SummandTable`] decide summands that way.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::set::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];

    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `aR` for [`Side::Right`], `Ra` for [`Side::Left`].
pub fn principal_set(ring: &FiniteRing, side: Side, a: Elem) -> ElemSet {
    match side {
        Side::Right => ring.right_multiples(a),
        Side::Left => ring.left_multiples(a),
    }
}

/// Product in the order that makes `side` ideals absorb: `x*r` on the
/// right, `r*x` on the left.
#[inline]
fn act(ring: &FiniteRing, side: Side, x: Elem, r: Elem) -> Elem {
    match side {
        Side::Right => ring.mul(x, r),
        Side::Left => ring.mul(r, x),
    }
}

/// True when `set` contains zero and is closed under addition, negation and
/// multiplication by ring elements on `side`.
pub fn is_ideal(ring: &FiniteRing, side: Side, set: &ElemSet) -> bool {
    if set.universe() != ring.size() || !set.contains(ring.zero().index()) {
        return false;
    }
    let members: Vec<Elem> = set.iter().map(|i| ring.elem(i).unwrap()).collect();
    members.iter().all(|&x| {
        set.contains(ring.neg(x).index())
            && members.iter().all(|&y| set.contains(ring.add(x, y).index()))
            && ring.elements().all(|r| set.contains(act(ring, side, x, r).index()))
    })
}

/// A left or right ideal of a particular ring.
#[derive(Clone)]
pub struct Ideal<'r> {
    ring: &'r FiniteRing,
    side: Side,
    members: ElemSet,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.members == other.members && self.ring.same_tables(other.ring)
    }
}

impl Eq for Ideal<'_> {}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-ideal {:?}", self.side, self.members)
    }
}

impl<'r> Ideal<'r> {
    /// Wraps a member set after checking the ideal axioms.
    pub fn from_members(ring: &'r FiniteRing, side: Side, members: ElemSet) -> Result<Self> {
        if !is_ideal(ring, side, &members) {
            return Err(Error::NotAnIdeal(side.as_str()));
        }
        Ok(Ideal { ring, side, members })
    }

    pub(crate) fn new_unchecked(ring: &'r FiniteRing, side: Side, members: ElemSet) -> Self {
        Ideal { ring, side, members }
    }

    pub fn zero(ring: &'r FiniteRing, side: Side) -> Self {
        Self::new_unchecked(ring, side, ElemSet::singleton(ring.size(), ring.zero().index()))
    }

    pub fn full(ring: &'r FiniteRing, side: Side) -> Self {
        Self::new_unchecked(ring, side, ElemSet::full(ring.size()))
    }

    /// `aR` or `Ra`. Already additively closed, so no closure is needed.
    pub fn principal(ring: &'r FiniteRing, side: Side, a: Elem) -> Self {
        Self::new_unchecked(ring, side, principal_set(ring, side, a))
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn into_members(self) -> ElemSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x.index())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().map(|i| Elem(i as u32))
    }

    pub fn is_valid(&self) -> bool {
        is_ideal(self.ring, self.side, &self.members)
    }

    fn compatible(&self, other: &Ideal<'_>) -> Result<()> {
        if self.side != other.side || !self.ring.same_tables(other.ring) {
            return Err(Error::Mismatch);
        }
        Ok(())
    }
}

/// Sorted list of all `e` with `e*e = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentList(Vec<Elem>);

impl IdempotentList {
    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Elem> {
        self.0.iter()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.0.binary_search(&e).is_ok()
    }
}

impl<'a> IntoIterator for &'a IdempotentList {
    type Item = &'a Elem;
    type IntoIter = std::slice::Iter<'a, Elem>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub fn idempotents(ring: &FiniteRing) -> IdempotentList {
    IdempotentList(ring.elements().filter(|&a| ring.is_idempotent(a)).collect())
}

/// Smallest `side` ideal containing `gens`.
pub fn ideal_generated<'r>(ring: &'r FiniteRing, side: Side, gens: &[Elem]) -> Ideal<'r> {
    let mut members = ElemSet::singleton(ring.size(), ring.zero().index());
    for &g in gens {
        if !members.contains(g.index()) {
            members = ring.subgroup_sum(&members, &principal_set(ring, side, g));
        }
    }
    Ideal::new_unchecked(ring, side, members)
}

pub fn ideal_sum<'r>(i: &Ideal<'r>, j: &Ideal<'_>) -> Result<Ideal<'r>> {
    i.compatible(j)?;
    Ok(Ideal::new_unchecked(i.ring, i.side, i.ring.subgroup_sum(&i.members, &j.members)))
}

pub fn ideal_intersect<'r>(i: &Ideal<'r>, j: &Ideal<'_>) -> Result<Ideal<'r>> {
    i.compatible(j)?;
    Ok(Ideal::new_unchecked(i.ring, i.side, i.members.intersection(&j.members)))
}

/// `l(X) = {r : rx = 0 for x in X}` for [`Side::Left`] (a left ideal),
/// `r(X) = {r : xr = 0 for x in X}` for [`Side::Right`] (a right ideal).
pub fn annihilator<'r>(ring: &'r FiniteRing, side: Side, xs: &[Elem]) -> Ideal<'r> {
    let members = ElemSet::from_indices(
        ring.size(),
        ring.elements()
            .filter(|&r| {
                xs.iter().all(|&x| {
                    let p = match side {
                        Side::Left => ring.mul(r, x),
                        Side::Right => ring.mul(x, r),
                    };
                    p == ring.zero()
                })
            })
            .map(Elem::index),
    );
    Ideal::new_unchecked(ring, side, members)
}

/// Least idempotent generating `ideal` on its side, or `None` when the
/// ideal is not a direct summand.
pub fn summand_witness(ideal: &Ideal<'_>) -> Option<Elem> {
    let ring = ideal.ring;
    ring.elements()
        .filter(|&e| ideal.contains(e) && ring.is_idempotent(e))
        .find(|&e| principal_set(ring, ideal.side, e) == ideal.members)
}

/// All `side` ideals of a ring of at most `size_cap` elements, sorted by
/// member set.
pub fn enumerate_ideals<'r>(ring: &'r FiniteRing, side: Side, size_cap: usize) -> Result<Vec<Ideal<'r>>> {
    if ring.size() > size_cap {
        return Err(Error::IdealCap { size: ring.size(), cap: size_cap });
    }
    let principals: Vec<ElemSet> = ring.elements().map(|a| principal_set(ring, side, a)).collect();
    let zero = ElemSet::singleton(ring.size(), ring.zero().index());
    let mut seen: BTreeSet<ElemSet> = BTreeSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(current) = frontier.pop() {
        for a in ring.elements() {
            if current.contains(a.index()) {
                continue;
            }
            let bigger = ring.subgroup_sum(&current, &principals[a.index()]);
            if !seen.contains(&bigger) {
                seen.insert(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    Ok(seen.into_iter().map(|m| Ideal::new_unchecked(ring, side, m)).collect())
}

/// The direct summands of `R` on one side, indexed by member set.
///
/// Built once per ring and side; lookups answer "is this set a summand, and
/// which least idempotent generates it".
#[derive(Debug, Clone)]
pub struct SummandTable<'r> {
    ring: &'r FiniteRing,
    side: Side,
    idempotents: IdempotentList,
    generated: Vec<ElemSet>,
    by_members: HashMap<ElemSet, Elem>,
}

impl<'r> SummandTable<'r> {
    pub fn new(ring: &'r FiniteRing, side: Side) -> Self {
        Self::with_idempotents(ring, side, idempotents(ring))
    }

    pub fn with_idempotents(ring: &'r FiniteRing, side: Side, idempotents: IdempotentList) -> Self {
        let generated: Vec<ElemSet> = idempotents.iter().map(|&e| principal_set(ring, side, e)).collect();
        let mut by_members = HashMap::with_capacity(generated.len());
        for (set, &e) in generated.iter().zip(&idempotents) {
            by_members.entry(set.clone()).or_insert(e);
        }
        SummandTable {
            ring,
            side,
            idempotents,
            generated,
            by_members,
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn idempotents(&self) -> &IdempotentList {
        &self.idempotents
    }

    /// `eR` (or `Re`) for the `k`-th idempotent.
    pub fn generated(&self, k: usize) -> &ElemSet {
        &self.generated[k]
    }

    pub fn witness(&self, members: &ElemSet) -> Option<Elem> {
        self.by_members.get(members).copied()
    }

    pub fn is_summand(&self, members: &ElemSet) -> bool {
        self.by_members.contains_key(members)
    }

    /// Number of distinct summands.
    pub fn distinct(&self) -> usize {
        self.by_members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{construct, opposite_ring, zmod, RingDescriptor};

    fn set(n: usize, xs: &[usize]) -> ElemSet {
        ElemSet::from_indices(n, xs.iter().copied())
    }

    fn m2f2() -> FiniteRing {
        construct(&RingDescriptor::Matrix {
            n: 2,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
        })
        .unwrap()
    }

    #[test]
    fn idempotents_of_cyclic_rings() {
        let z4 = zmod(4).unwrap();
        assert_eq!(idempotents(&z4).as_slice(), &[Elem(0), Elem(1)]);
        // frozen from an exhaustive scan of x^2 = x mod 6
        let z6 = zmod(6).unwrap();
        assert_eq!(idempotents(&z6).as_slice(), &[Elem(0), Elem(1), Elem(3), Elem(4)]);
    }

    #[test]
    fn generated_ideals() {
        let z6 = zmod(6).unwrap();
        assert_eq!(ideal_generated(&z6, Side::Right, &[Elem(2)]).members(), &set(6, &[0, 2, 4]));
        assert_eq!(ideal_generated(&z6, Side::Right, &[Elem(2), Elem(3)]).len(), 6);
        assert_eq!(ideal_generated(&z6, Side::Left, &[]).len(), 1);
        let m = m2f2();
        assert_eq!(ideal_generated(&m, Side::Right, &[m.one()]).len(), 16);
    }

    #[test]
    fn sums_and_intersections() {
        let z6 = zmod(6).unwrap();
        let a = Ideal::from_members(&z6, Side::Right, set(6, &[0, 2, 4])).unwrap();
        let b = Ideal::from_members(&z6, Side::Right, set(6, &[0, 3])).unwrap();
        assert_eq!(ideal_sum(&a, &b).unwrap().len(), 6);
        assert_eq!(ideal_sum(&a, &a).unwrap(), a);
        assert!(ideal_intersect(&a, &b).unwrap().is_zero());
        assert_eq!(ideal_intersect(&a, &Ideal::full(&z6, Side::Right)).unwrap(), a);

        let left = Ideal::from_members(&z6, Side::Left, set(6, &[0, 3])).unwrap();
        assert_eq!(ideal_sum(&a, &left).unwrap_err(), Error::Mismatch);
        let z4 = zmod(4).unwrap();
        let other = Ideal::full(&z4, Side::Right);
        assert_eq!(ideal_intersect(&a, &other).unwrap_err(), Error::Mismatch);
    }

    #[test]
    fn from_members_rejects_non_ideals() {
        let z6 = zmod(6).unwrap();
        assert!(Ideal::from_members(&z6, Side::Right, set(6, &[0, 2])).is_err());
        assert!(Ideal::from_members(&z6, Side::Right, set(6, &[2, 4])).is_err());
        let m = m2f2();
        // the first column is a left ideal but not a right ideal
        let col = m.left_multiples(m.by_label("e11").unwrap());
        assert!(Ideal::from_members(&m, Side::Left, col.clone()).is_ok());
        assert!(Ideal::from_members(&m, Side::Right, col).is_err());
    }

    #[test]
    fn annihilators() {
        let z4 = zmod(4).unwrap();
        assert_eq!(annihilator(&z4, Side::Right, &[Elem(2)]).members(), &set(4, &[0, 2]));
        assert_eq!(annihilator(&z4, Side::Right, &[Elem(0)]).len(), 4);
        assert!(annihilator(&z4, Side::Right, &[Elem(1)]).is_zero());
        let m = m2f2();
        let e12 = m.by_label("e12").unwrap();
        // r with r*e12 = 0 have zero first column
        let l = annihilator(&m, Side::Left, &[e12]);
        assert_eq!(l.len(), 4);
        assert!(l.is_valid());
    }

    #[test]
    fn summand_witnesses() {
        let z6 = zmod(6).unwrap();
        let evens = Ideal::from_members(&z6, Side::Right, set(6, &[0, 2, 4])).unwrap();
        assert_eq!(summand_witness(&evens), Some(Elem(4)));
        assert_eq!(summand_witness(&Ideal::full(&z6, Side::Right)), Some(z6.one()));
        assert_eq!(summand_witness(&Ideal::zero(&z6, Side::Left)), Some(z6.zero()));
        let z4 = zmod(4).unwrap();
        let twos = Ideal::from_members(&z4, Side::Right, set(4, &[0, 2])).unwrap();
        assert_eq!(summand_witness(&twos), None);
        let table = SummandTable::new(&z6, Side::Right);
        assert_eq!(table.witness(evens.members()), Some(Elem(4)));
        assert_eq!(table.distinct(), 4);
    }

    #[test]
    fn ideal_enumeration() {
        let f2 = zmod(2).unwrap();
        assert_eq!(enumerate_ideals(&f2, Side::Right, 16).unwrap().len(), 2);
        let z4 = zmod(4).unwrap();
        let all = enumerate_ideals(&z4, Side::Right, 16).unwrap();
        let sets: Vec<Vec<usize>> = all.iter().map(|i| i.members().to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 1, 2, 3], vec![0, 2]]);
        let z12 = zmod(12).unwrap();
        // one ideal per divisor of 12
        assert_eq!(enumerate_ideals(&z12, Side::Left, 16).unwrap().len(), 6);
        assert_eq!(
            enumerate_ideals(&m2f2(), Side::Right, 8).unwrap_err(),
            Error::IdealCap { size: 16, cap: 8 }
        );
        // M_2(F_2): 0, R and the three lines of F_2^2 as row spaces
        assert_eq!(enumerate_ideals(&m2f2(), Side::Right, 16).unwrap().len(), 5);
    }

    #[test]
    fn right_ideals_are_left_ideals_of_opposite() {
        let m = m2f2();
        let op = opposite_ring(&m);
        let right: Vec<ElemSet> = enumerate_ideals(&m, Side::Right, 16)
            .unwrap()
            .into_iter()
            .map(Ideal::into_members)
            .collect();
        let left_op: Vec<ElemSet> = enumerate_ideals(&op, Side::Left, 16)
            .unwrap()
            .into_iter()
            .map(Ideal::into_members)
            .collect();
        assert_eq!(right, left_op);
        for members in right {
            let a = Ideal::from_members(&m, Side::Right, members.clone()).unwrap();
            let b = Ideal::from_members(&op, Side::Left, members).unwrap();
            assert_eq!(summand_witness(&a), summand_witness(&b));
        }
    }
}
