//! Explicit finite rings stored as dense Cayley tables.
//!
//! A [`FiniteRing`] is immutable once built. Rings are normally obtained from
//! a [`RingDescriptor`] through [`construct`]; the descriptor language covers
//! `Z/n`, explicit tables, full and patterned matrix rings, finite products,
//! corner rings `eRe` and opposite rings, nested to any depth.

mod axioms;
mod build;
mod descriptor;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{self, AdditiveTable};
use crate::set::ElemSet;

pub use axioms::{validate_axioms, Axiom, AxiomReport, Violation};
pub use build::{corner_ring, matrix_ring, opposite_ring, pattern_ring, product_ring, zmod, Corner};
pub use descriptor::{construct, construct_capped, RingDescriptor};

/// Index of an element in the carrier of one particular ring.
///
/// Elements carry no reference to their ring; mixing elements of different
/// rings is a logic error that the tables cannot detect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub(crate) u32);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<Elem> for usize {
    fn from(e: Elem) -> usize {
        e.index()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Sub,
    Pow,
}

/// Outcome of an exhaustive inverse search for one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invertibility {
    pub two_sided_inverse: Option<Elem>,
    pub left_inverses: Vec<Elem>,
    pub right_inverses: Vec<Elem>,
}

#[derive(Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    descriptor: RingDescriptor,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("size", &self.size)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Wraps raw row-major tables. Only shapes and index ranges are checked
    /// here; run [`validate_axioms`] before trusting the result as a ring.
    pub fn from_tables(size: usize, add: Vec<u32>, mul: Vec<u32>, zero: usize, one: usize) -> Result<Self> {
        Self::from_labeled_tables(size, add, mul, zero, one, None)
    }

    pub(crate) fn from_labeled_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let descriptor = RingDescriptor::Table {
            size,
            add: add.chunks(size.max(1)).map(<[u32]>::to_vec).collect(),
            mul: mul.chunks(size.max(1)).map(<[u32]>::to_vec).collect(),
            zero: zero as u32,
            one: one as u32,
            labels: labels.clone(),
        };
        Self::assemble(size, add, mul, zero, one, descriptor, labels)
    }

    pub(crate) fn assemble(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        descriptor: RingDescriptor,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let bad = |reason: String| Error::Descriptor { path: String::new(), reason };
        if size == 0 {
            return Err(bad("a ring needs at least one element".into()));
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(bad(format!("tables must have {size}x{size} entries")));
        }
        if let Some(&x) = add.iter().chain(&mul).find(|&&x| x as usize >= size) {
            return Err(Error::OutOfRange { index: x as usize, size });
        }
        for i in [zero, one] {
            if i >= size {
                return Err(Error::OutOfRange { index: i, size });
            }
        }
        let labels = match labels {
            Some(l) if l.len() != size => return Err(bad(format!("expected {size} labels, got {}", l.len()))),
            Some(l) => l,
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        // Inverses are looked up once; a table without them is caught by validate_axioms.
        let neg = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| add[a * size + b] as usize == zero)
                    .unwrap_or(zero) as u32
            })
            .collect();
        Ok(FiniteRing {
            size,
            add,
            mul,
            neg,
            zero: Elem(zero as u32),
            one: Elem(one as u32),
            descriptor,
            labels,
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.size {
            Ok(Elem(index as u32))
        } else {
            Err(Error::OutOfRange { index, size: self.size })
        }
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.size as u32).map(Elem)
    }

    /// Finds an element by its label.
    pub fn by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| Elem(i as u32))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Index-checked arithmetic. For [`ArithOp::Neg`] the second operand is
    /// ignored; for [`ArithOp::Pow`] it is the exponent.
    pub fn arith(&self, op: ArithOp, a: usize, b: usize) -> Result<Elem> {
        let a = self.elem(a)?;
        Ok(match op {
            ArithOp::Add => self.add(a, self.elem(b)?),
            ArithOp::Mul => self.mul(a, self.elem(b)?),
            ArithOp::Sub => self.sub(a, self.elem(b)?),
            ArithOp::Neg => self.neg(a),
            ArithOp::Pow => self.pow(a, b as u64),
        })
    }

    #[inline]
    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    /// `1 - a`.
    #[inline]
    pub fn complement(&self, a: Elem) -> Elem {
        self.sub(self.one, a)
    }

    pub fn invertibility(&self, a: Elem) -> Invertibility {
        let left_inverses: Vec<Elem> = self.elements().filter(|&b| self.mul(b, a) == self.one).collect();
        let right_inverses: Vec<Elem> = self.elements().filter(|&b| self.mul(a, b) == self.one).collect();
        // Finite rings are Dedekind-finite.
        assert_eq!(
            left_inverses.is_empty(),
            right_inverses.is_empty(),
            "one-sided inverse without a two-sided one for element {a}"
        );
        let two_sided_inverse = left_inverses.iter().copied().find(|b| right_inverses.contains(b));
        Invertibility {
            two_sided_inverse,
            left_inverses,
            right_inverses,
        }
    }

    /// Set of units, found by scanning for right inverses.
    pub fn units(&self) -> ElemSet {
        let mut units = ElemSet::empty(self.size);
        for a in self.elements() {
            if units.contains(a.index()) {
                continue;
            }
            if let Some(b) = self.elements().find(|&b| self.mul(a, b) == self.one) {
                units.insert(a.index());
                units.insert(b.index());
            }
        }
        units
    }

    /// `{a*r : r in R}`, the principal right ideal of `a`.
    pub fn right_multiples(&self, a: Elem) -> ElemSet {
        let row = &self.mul[a.index() * self.size..(a.index() + 1) * self.size];
        ElemSet::from_indices(self.size, row.iter().map(|&x| x as usize))
    }

    /// `{r*a : r in R}`, the principal left ideal of `a`.
    pub fn left_multiples(&self, a: Elem) -> ElemSet {
        ElemSet::from_indices(self.size, self.elements().map(|r| self.mul(r, a).index()))
    }

    /// Closes `start` under adding each of `gens`. When `start` is an
    /// additive subgroup the result is the subgroup `start + <gens>`.
    pub fn additive_closure(&self, start: &ElemSet, gens: &[Elem]) -> ElemSet {
        let gens: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        group::closure(self, start, &gens)
    }

    /// Greedy additive generating set of a subgroup: each member is taken
    /// in ascending order when it is not yet in the span.
    pub fn additive_generators(&self, subgroup: &ElemSet) -> Vec<Elem> {
        group::generators(self, subgroup).into_iter().map(|i| Elem(i as u32)).collect()
    }

    /// `I + J` for additive subgroups `I`, `J`.
    pub fn subgroup_sum(&self, i: &ElemSet, j: &ElemSet) -> ElemSet {
        group::subgroup_sum(self, i, j)
    }

    /// True when both rings have identical tables and distinguished elements.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        std::ptr::eq(self, other)
            || (self.size == other.size
                && self.zero == other.zero
                && self.one == other.one
                && self.add == other.add
                && self.mul == other.mul)
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().skip(a.index() + 1).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl AdditiveTable for FiniteRing {
    fn order(&self) -> usize {
        self.size
    }

    fn zero_index(&self) -> usize {
        self.zero.index()
    }

    fn add_index(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2f2() -> FiniteRing {
        construct(&RingDescriptor::Matrix {
            n: 2,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
        })
        .unwrap()
    }

    #[test]
    fn zmod4_arith() {
        let r = zmod(4).unwrap();
        assert_eq!(r.arith(ArithOp::Add, 2, 3).unwrap().index(), 1);
        assert_eq!(r.arith(ArithOp::Pow, 2, 2).unwrap().index(), 0);
        assert_eq!(r.arith(ArithOp::Pow, 3, 0).unwrap(), r.one());
        assert_eq!(r.arith(ArithOp::Sub, 1, 3).unwrap().index(), 2);
        assert_eq!(r.arith(ArithOp::Neg, 1, 0).unwrap().index(), 3);
        assert_eq!(
            r.arith(ArithOp::Mul, 4, 1),
            Err(Error::OutOfRange { index: 4, size: 4 })
        );
    }

    #[test]
    fn matrix_units_multiply() {
        let r = m2f2();
        let e11 = r.by_label("e11").unwrap();
        let e12 = r.by_label("e12").unwrap();
        assert_eq!(r.mul(e11, e12), e12);
        assert_eq!(r.mul(e12, e11), r.zero());
    }

    #[test]
    fn inverses() {
        let r = zmod(4).unwrap();
        let inv = r.invertibility(r.elem(3).unwrap());
        assert_eq!(inv.two_sided_inverse, Some(r.elem(3).unwrap()));
        let inv = r.invertibility(r.elem(2).unwrap());
        assert_eq!(inv.two_sided_inverse, None);
        assert!(inv.left_inverses.is_empty() && inv.right_inverses.is_empty());

        let m = m2f2();
        let inv = m.invertibility(m.by_label("e11").unwrap());
        assert_eq!(inv.two_sided_inverse, None);
        // GL_2(F_2) has 6 elements.
        assert_eq!(m.units().len(), 6);
    }

    #[test]
    fn sums_of_subgroups() {
        let r = zmod(6).unwrap();
        let twos = ElemSet::from_indices(6, [0, 2, 4]);
        let threes = ElemSet::from_indices(6, [0, 3]);
        assert_eq!(r.subgroup_sum(&twos, &threes), ElemSet::full(6));
        assert_eq!(r.subgroup_sum(&twos, &twos), twos);
        assert_eq!(r.additive_generators(&twos), vec![r.elem(2).unwrap()]);
    }
}
