//! Finite right modules over finite rings.
//!
//! A [`FiniteModule`] stores its addition table and the scalar action
//! `x·r` as dense tables. Left `R`-modules are represented as right modules
//! over `opposite_ring(R)`, so a single engine covers both sides.
//!
//! Direct summands are found as images of idempotent endomorphisms, which
//! reuses the homomorphism enumeration in [`hom_maps`].

mod hom;
mod property;
mod suite;

use std::fmt;
use std::sync::Arc;

use crate::caps::DEFAULT_SIZE_CAP;
use crate::error::{Error, Result};
use crate::group::{self, AdditiveTable};
use crate::ideal::{is_ideal, Side};
use crate::ring::{Axiom, AxiomReport, Elem, FiniteRing, Violation};
use crate::set::ElemSet;

pub use hom::{
    endomorphism_ring, hom_maps, is_isomorphic, module_summands, summand_witness_module, EndRing, ModuleMap,
    ModuleSummands,
};
pub use property::{module_property, module_witness_refails};
pub use suite::{module_lemma_suite, sip_not_ssp_fixture, ModuleCase, SipNotSspFixture};

#[derive(Clone)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    act: Vec<u32>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("size", &self.size)
            .field("ring_size", &self.ring.size())
            .finish_non_exhaustive()
    }
}

/// Recipe for [`build_module`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleDescriptor {
    /// `R^rank`.
    Free { rank: usize },
    /// A right ideal, given by its members, as a submodule of `R_R`.
    Ideal { members: Vec<usize> },
    /// `R/I` for a right ideal `I`.
    Quotient { members: Vec<usize> },
    DirectSum(Box<ModuleDescriptor>, Box<ModuleDescriptor>),
}

pub fn build_module(ring: Arc<FiniteRing>, desc: &ModuleDescriptor, cap: usize) -> Result<FiniteModule> {
    let to_set = |members: &[usize]| -> Result<ElemSet> {
        if let Some(&bad) = members.iter().find(|&&m| m >= ring.size()) {
            return Err(Error::OutOfRange { index: bad, size: ring.size() });
        }
        Ok(ElemSet::from_indices(ring.size(), members.iter().copied()))
    };
    let module = match desc {
        ModuleDescriptor::Free { rank } => FiniteModule::free_capped(ring, *rank, cap)?,
        ModuleDescriptor::Ideal { members } => FiniteModule::from_right_ideal(ring.clone(), &to_set(members)?)?,
        ModuleDescriptor::Quotient { members } => FiniteModule::quotient(ring.clone(), &to_set(members)?)?,
        ModuleDescriptor::DirectSum(a, b) => {
            let a = build_module(ring.clone(), a, cap)?;
            let b = build_module(ring, b, cap)?;
            FiniteModule::direct_sum_capped(&a, &b, cap)?
        }
    };
    if module.size > cap {
        return Err(Error::SizeCap { what: "module", size: module.size as u128, cap });
    }
    Ok(module)
}

impl FiniteModule {
    /// Wraps raw tables: `add` is `size x size`, `act` is `size x ring.size()`.
    /// Only shapes and ranges are checked; see [`validate_module`].
    pub fn from_tables(
        ring: Arc<FiniteRing>,
        size: usize,
        add: Vec<u32>,
        act: Vec<u32>,
        zero: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let shape = |reason: String| Error::Descriptor { path: "module".into(), reason };
        if size == 0 || add.len() != size * size || act.len() != size * ring.size() {
            return Err(shape(format!("tables do not match a carrier of size {size}")));
        }
        if let Some(&x) = add.iter().chain(&act).find(|&&x| x as usize >= size) {
            return Err(Error::OutOfRange { index: x as usize, size });
        }
        if zero >= size {
            return Err(Error::OutOfRange { index: zero, size });
        }
        let labels = match labels {
            Some(l) if l.len() != size => return Err(shape(format!("expected {size} labels"))),
            Some(l) => l,
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] as usize == zero).unwrap_or(zero) as u32)
            .collect();
        Ok(FiniteModule {
            ring,
            size,
            add,
            neg,
            zero,
            act,
            labels,
        })
    }

    /// `R^rank` with elements numbered as tuples, first coordinate most
    /// significant.
    pub fn free(ring: Arc<FiniteRing>, rank: usize) -> Result<Self> {
        Self::free_capped(ring, rank, DEFAULT_SIZE_CAP)
    }

    pub fn free_capped(ring: Arc<FiniteRing>, rank: usize, cap: usize) -> Result<Self> {
        let q = ring.size();
        let size = (q as u128).checked_pow(rank as u32).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::SizeCap { what: "free module", size, cap });
        }
        let size = size as usize;
        let decode = |mut x: usize| {
            let mut out = vec![0usize; rank];
            for slot in out.iter_mut().rev() {
                *slot = x % q;
                x /= q;
            }
            out
        };
        let encode = |ds: &mut dyn Iterator<Item = usize>| ds.fold(0usize, |acc, d| acc * q + d) as u32;
        let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let el = |i: usize| ring.elem(i).unwrap();
        let mut add = Vec::with_capacity(size * size);
        for a in &coords {
            for b in &coords {
                add.push(encode(&mut a.iter().zip(b).map(|(&x, &y)| ring.add(el(x), el(y)).index())));
            }
        }
        let mut act = Vec::with_capacity(size * q);
        for a in &coords {
            for r in ring.elements() {
                act.push(encode(&mut a.iter().map(|&x| ring.mul(el(x), r).index())));
            }
        }
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().map(|&x| ring.label(el(x))).collect();
                if rank == 1 {
                    parts[0].to_string()
                } else {
                    format!("({})", parts.join(", "))
                }
            })
            .collect();
        Self::from_tables(ring, size, add, act, 0, Some(labels))
    }

    /// A right ideal of `R` as a submodule of `R_R`; elements keep the
    /// ascending order of their ring indices.
    pub fn from_right_ideal(ring: Arc<FiniteRing>, members: &ElemSet) -> Result<Self> {
        if !is_ideal(&ring, Side::Right, members) {
            return Err(Error::NotAnIdeal("right"));
        }
        let elems: Vec<Elem> = members.iter().map(|i| ring.elem(i).unwrap()).collect();
        let pos = |x: Elem| elems.binary_search(&x).expect("ideal is closed") as u32;
        let size = elems.len();
        let mut add = Vec::with_capacity(size * size);
        for &a in &elems {
            for &b in &elems {
                add.push(pos(ring.add(a, b)));
            }
        }
        let mut act = Vec::with_capacity(size * ring.size());
        for &a in &elems {
            for r in ring.elements() {
                act.push(pos(ring.mul(a, r)));
            }
        }
        let labels = elems.iter().map(|&a| ring.label(a).to_string()).collect();
        let zero = pos(ring.zero()) as usize;
        Self::from_tables(ring, size, add, act, zero, Some(labels))
    }

    /// `R/I` for a right ideal `I`. Cosets are numbered by their least
    /// representative.
    pub fn quotient(ring: Arc<FiniteRing>, ideal: &ElemSet) -> Result<Self> {
        if !is_ideal(&ring, Side::Right, ideal) {
            return Err(Error::NotAnIdeal("right"));
        }
        let n = ring.size();
        let mut coset = vec![u32::MAX; n];
        let mut reps: Vec<Elem> = Vec::new();
        for x in ring.elements() {
            if coset[x.index()] != u32::MAX {
                continue;
            }
            for i in ideal.iter() {
                coset[ring.add(x, ring.elem(i).unwrap()).index()] = reps.len() as u32;
            }
            reps.push(x);
        }
        let size = reps.len();
        let mut add = Vec::with_capacity(size * size);
        for &a in &reps {
            for &b in &reps {
                add.push(coset[ring.add(a, b).index()]);
            }
        }
        let mut act = Vec::with_capacity(size * n);
        for &a in &reps {
            for r in ring.elements() {
                act.push(coset[ring.mul(a, r).index()]);
            }
        }
        let labels = reps.iter().map(|&a| format!("[{}]", ring.label(a))).collect();
        let zero = coset[ring.zero().index()] as usize;
        Self::from_tables(ring, size, add, act, zero, Some(labels))
    }

    pub fn direct_sum(a: &FiniteModule, b: &FiniteModule) -> Result<Self> {
        Self::direct_sum_capped(a, b, DEFAULT_SIZE_CAP)
    }

    /// `A ⊕ B`; the pair `(x, y)` has index `x * |B| + y`.
    pub fn direct_sum_capped(a: &FiniteModule, b: &FiniteModule, cap: usize) -> Result<Self> {
        if !a.ring.same_tables(&b.ring) {
            return Err(Error::Mismatch);
        }
        let size = a.size as u128 * b.size as u128;
        if size > cap as u128 {
            return Err(Error::SizeCap { what: "direct sum", size, cap });
        }
        let size = size as usize;
        let split = |x: usize| (x / b.size, x % b.size);
        let join = |x: usize, y: usize| (x * b.size + y) as u32;
        let mut add = Vec::with_capacity(size * size);
        for x in 0..size {
            let (x1, x2) = split(x);
            for y in 0..size {
                let (y1, y2) = split(y);
                add.push(join(a.add_idx(x1, y1), b.add_idx(x2, y2)));
            }
        }
        let q = a.ring.size();
        let mut act = Vec::with_capacity(size * q);
        for x in 0..size {
            let (x1, x2) = split(x);
            for r in 0..q {
                act.push(join(a.act_idx(x1, r), b.act_idx(x2, r)));
            }
        }
        let labels = (0..size)
            .map(|x| {
                let (x1, x2) = split(x);
                format!("({}, {})", a.labels[x1], b.labels[x2])
            })
            .collect();
        Self::from_tables(a.ring.clone(), size, add, act, join(a.zero, b.zero) as usize, Some(labels))
    }

    /// A submodule as a module in its own right, elements in ascending
    /// order of their indices in `self`.
    pub fn restrict(&self, members: &ElemSet) -> Result<Self> {
        if !self.is_submodule(members) {
            return Err(Error::NotASubmodule);
        }
        let elems = members.to_vec();
        let pos = |x: usize| elems.binary_search(&x).expect("submodule is closed") as u32;
        let size = elems.len();
        let q = self.ring.size();
        let mut add = Vec::with_capacity(size * size);
        for &a in &elems {
            for &b in &elems {
                add.push(pos(self.add_idx(a, b)));
            }
        }
        let mut act = Vec::with_capacity(size * q);
        for &a in &elems {
            for r in 0..q {
                act.push(pos(self.act_idx(a, r)));
            }
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Self::from_tables(self.ring.clone(), size, add, act, pos(self.zero) as usize, Some(labels))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn add_idx(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }

    #[inline]
    pub fn neg_idx(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    /// `x·r`.
    #[inline]
    pub fn act_idx(&self, x: usize, r: usize) -> usize {
        self.act[x * self.ring.size() + r] as usize
    }

    #[inline]
    pub fn act(&self, x: usize, r: Elem) -> usize {
        self.act_idx(x, r.index())
    }

    /// `xR`, the cyclic submodule of `x`.
    pub fn cyclic(&self, x: usize) -> ElemSet {
        ElemSet::from_indices(self.size, (0..self.ring.size()).map(|r| self.act_idx(x, r)))
    }

    pub fn zero_submodule(&self) -> ElemSet {
        ElemSet::singleton(self.size, self.zero)
    }

    pub fn is_submodule(&self, set: &ElemSet) -> bool {
        if set.universe() != self.size || !set.contains(self.zero) {
            return false;
        }
        let members = set.to_vec();
        members.iter().all(|&x| {
            set.contains(self.neg_idx(x))
                && members.iter().all(|&y| set.contains(self.add_idx(x, y)))
                && (0..self.ring.size()).all(|r| set.contains(self.act_idx(x, r)))
        })
    }

    pub fn submodule_sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        group::subgroup_sum(self, a, b)
    }

    /// Least generating set: repeatedly adds the least element not yet
    /// generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut span = self.zero_submodule();
        let mut gens = Vec::new();
        while let Some(x) = span.first_missing() {
            span = self.submodule_sum(&span, &self.cyclic(x));
            gens.push(x);
        }
        gens
    }
}

impl AdditiveTable for FiniteModule {
    fn order(&self) -> usize {
        self.size
    }

    fn zero_index(&self) -> usize {
        self.zero
    }

    fn add_index(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, b)
    }
}

/// A submodule of a particular module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule<'m> {
    pub parent: &'m FiniteModule,
    pub members: ElemSet,
}

pub fn submodule_generated<'m>(module: &'m FiniteModule, gens: &[usize]) -> Submodule<'m> {
    let mut members = module.zero_submodule();
    for &g in gens {
        if !members.contains(g) {
            members = module.submodule_sum(&members, &module.cyclic(g));
        }
    }
    Submodule { parent: module, members }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_tables(&other.ring)
            && self.size == other.size
            && self.zero == other.zero
            && self.add == other.add
            && self.act == other.act
    }
}

impl Eq for FiniteModule {}

/// All submodules of a module with at most `cap` elements, sorted.
pub fn enumerate_submodules(module: &FiniteModule, cap: usize) -> Result<Vec<ElemSet>> {
    if module.size > cap {
        return Err(Error::IdealCap { size: module.size, cap });
    }
    let cyclics: Vec<ElemSet> = (0..module.size).map(|x| module.cyclic(x)).collect();
    let zero = module.zero_submodule();
    let mut seen = std::collections::BTreeSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(current) = frontier.pop() {
        for x in 0..module.size {
            if current.contains(x) {
                continue;
            }
            let bigger = module.submodule_sum(&current, &cyclics[x]);
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exhaustive check of the module axioms; reports the first failing axiom
/// with its least witness (module elements first, then scalars).
pub fn validate_module(m: &FiniteModule) -> AxiomReport {
    let n = m.size;
    let q = m.ring.size();
    let r = &*m.ring;
    let el = |i: usize| Elem(i as u32);
    let find2 = |outer: usize, inner: usize, bad: &dyn Fn(usize, usize) -> bool| {
        (0..outer).find_map(|a| (0..inner).find(|&b| bad(a, b)).map(|b| vec![a, b]))
    };
    let find3 = |second: usize, third: usize, bad: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).find_map(|a| {
            (0..second).find_map(|b| (0..third).find(|&c| bad(a, b, c)).map(|c| vec![a, b, c]))
        })
    };
    let checks: [(Axiom, Box<dyn Fn() -> Option<Vec<usize>> + '_>); 8] = [
        (
            Axiom::AddAssociative,
            Box::new(|| find3(n, n, &|a, b, c| m.add_idx(m.add_idx(a, b), c) != m.add_idx(a, m.add_idx(b, c)))),
        ),
        (
            Axiom::AddIdentity,
            Box::new(|| (0..n).find(|&a| m.add_idx(m.zero, a) != a || m.add_idx(a, m.zero) != a).map(|a| vec![a])),
        ),
        (
            Axiom::AddInverse,
            Box::new(|| (0..n).find(|&a| !(0..n).any(|b| m.add_idx(a, b) == m.zero)).map(|a| vec![a])),
        ),
        (Axiom::AddCommutative, Box::new(|| find2(n, n, &|a, b| m.add_idx(a, b) != m.add_idx(b, a)))),
        (
            Axiom::ActAdditive,
            Box::new(|| {
                find3(n, q, &|x, y, s| m.act_idx(m.add_idx(x, y), s) != m.add_idx(m.act_idx(x, s), m.act_idx(y, s)))
            }),
        ),
        (
            Axiom::ActScalarAdditive,
            Box::new(|| {
                find3(q, q, &|x, s, t| {
                    m.act_idx(x, r.add(el(s), el(t)).index()) != m.add_idx(m.act_idx(x, s), m.act_idx(x, t))
                })
            }),
        ),
        (
            Axiom::ActAssociative,
            Box::new(|| find3(q, q, &|x, s, t| m.act_idx(x, r.mul(el(s), el(t)).index()) != m.act_idx(m.act_idx(x, s), t))),
        ),
        (
            Axiom::ActIdentity,
            Box::new(|| (0..n).find(|&x| m.act(x, r.one()) != x).map(|x| vec![x])),
        ),
    ];
    let first_violation = checks
        .iter()
        .find_map(|(axiom, check)| check().map(|witness| Violation { axiom: *axiom, witness }));
    AxiomReport {
        passed: first_violation.is_none(),
        first_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{construct, opposite_ring, zmod, RingDescriptor};

    fn arc(r: FiniteRing) -> Arc<FiniteRing> {
        Arc::new(r)
    }

    fn ut2f2() -> FiniteRing {
        construct(&RingDescriptor::Pattern {
            n: 2,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
            mask: vec![vec![1, 1], vec![0, 1]],
        })
        .unwrap()
    }

    #[test]
    fn free_modules() {
        let f2 = arc(zmod(2).unwrap());
        let m = FiniteModule::free(f2, 2).unwrap();
        assert_eq!(m.size(), 4);
        assert!(validate_module(&m).passed);
        let z4 = arc(zmod(4).unwrap());
        let m = FiniteModule::free(z4.clone(), 1).unwrap();
        assert!(validate_module(&m).passed);
        let mm = FiniteModule::direct_sum(&m, &m).unwrap();
        assert_eq!(mm.size(), 16);
        assert!(validate_module(&mm).passed);
        assert_eq!(mm, FiniteModule::free(z4, 2).unwrap());
    }

    #[test]
    fn corrupted_action_is_caught() {
        let z4 = arc(zmod(4).unwrap());
        let m = FiniteModule::free(z4.clone(), 1).unwrap();
        let mut act = m.act.clone();
        act[1 * 4 + 2] = 3; // 1·2 = 3
        let bad = FiniteModule::from_tables(z4, 4, m.add.clone(), act, 0, None).unwrap();
        let report = validate_module(&bad);
        assert!(!report.passed);
        assert_eq!(report.first_violation.unwrap().axiom, Axiom::ActAdditive);
    }

    #[test]
    fn quotient_by_left_ideal_via_opposite() {
        let r = ut2f2();
        // entries (a11, a12, a22); L = top row, i.e. a22 = 0
        let l = ElemSet::from_indices(8, r.elements().filter(|&x| x.index() % 2 == 0).map(Elem::index));
        assert!(is_ideal(&r, Side::Left, &l));
        // first column R·e11 is a left ideal but not a right one
        let col = ElemSet::from_indices(8, [0, 4]);
        assert!(is_ideal(&r, Side::Left, &col));
        assert!(FiniteModule::quotient(arc(r.clone()), &col).is_err());
        let op = arc(opposite_ring(&r));
        let m = FiniteModule::quotient(op, &l).unwrap();
        assert_eq!(m.size(), 2);
        assert!(validate_module(&m).passed);
    }

    #[test]
    fn submodules() {
        let f2 = arc(zmod(2).unwrap());
        let m = FiniteModule::free(f2, 2).unwrap();
        assert_eq!(submodule_generated(&m, &[0]).members.to_vec(), vec![0]);
        // (1,0) has index 2
        assert_eq!(submodule_generated(&m, &[2]).members.to_vec(), vec![0, 2]);
        // 0, three lines, whole plane
        assert_eq!(enumerate_submodules(&m, 64).unwrap().len(), 5);
        assert_eq!(m.generating_set(), vec![1, 2]);
    }

    #[test]
    fn build_from_descriptors() {
        let z4 = arc(zmod(4).unwrap());
        let d = ModuleDescriptor::DirectSum(
            Box::new(ModuleDescriptor::Ideal { members: vec![0, 2] }),
            Box::new(ModuleDescriptor::Quotient { members: vec![0, 2] }),
        );
        let m = build_module(z4.clone(), &d, 4096).unwrap();
        assert_eq!(m.size(), 4);
        assert!(validate_module(&m).passed);
        assert!(matches!(
            build_module(z4.clone(), &ModuleDescriptor::Free { rank: 7 }, 4096),
            Err(Error::SizeCap { .. })
        ));
        assert!(matches!(
            build_module(z4, &ModuleDescriptor::Ideal { members: vec![0, 1] }, 4096),
            Err(Error::NotAnIdeal(_))
        ));
    }
}
