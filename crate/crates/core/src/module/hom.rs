//! Homomorphism enumeration and everything built on it: endomorphism
//! rings, isomorphism tests and summands.
//!
//! A map `M -> N` is fixed by the images `y_k` of a generating set `g_k` of
//! `M`. Generators are added one at a time; the submodule they span grows
//! by closing under `x -> x + g_k r_i` for additive generators `r_i` of the
//! ring, and every such step either defines a new image
//! (`f(x + g_k r_i) = f(x) + y_k r_i`) or must agree with one already
//! defined. Maps passing every check are exactly the homomorphisms.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{FiniteModule, Submodule};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::set::ElemSet;

/// A module map, stored as the image of every source element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMap {
    pub table: Vec<u32>,
}

impl ModuleMap {
    pub fn identity(size: usize) -> Self {
        ModuleMap {
            table: (0..size as u32).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMap) -> ModuleMap {
        ModuleMap {
            table: inner.table.iter().map(|&x| self.table[x as usize]).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.table.iter().all(|&y| self.table[y as usize] == y)
    }

    pub fn image(&self, target_size: usize) -> ElemSet {
        ElemSet::from_indices(target_size, self.table.iter().map(|&y| y as usize))
    }

    pub fn is_bijective(&self, target_size: usize) -> bool {
        self.table.len() == target_size && self.image(target_size).len() == target_size
    }

    /// Checks additivity and compatibility with the action exhaustively.
    pub fn is_homomorphism(&self, source: &FiniteModule, target: &FiniteModule) -> bool {
        let q = source.ring().size();
        self.table.len() == source.size()
            && (0..source.size()).all(|x| {
                (0..source.size()).all(|y| self.apply(source.add_idx(x, y)) == target.add_idx(self.apply(x), self.apply(y)))
                    && (0..q).all(|r| self.apply(source.act_idx(x, r)) == target.act_idx(self.apply(x), r))
            })
    }
}

/// One generator's worth of propagation rules. Entries are
/// `(from, ring generator slot, to)`.
struct Stage {
    derive: Vec<(u32, u32, u32)>,
    check: Vec<(u32, u32, u32)>,
    candidates: Vec<u32>,
}

/// Plans stages for generators `g_k`, each of which may only be sent into
/// its `allowed` set (anywhere when `None`).
fn plan(
    source: &FiniteModule,
    target: &FiniteModule,
    ring_gens: &[usize],
    gens: &[(usize, Option<&ElemSet>)],
) -> Vec<Stage> {
    let mut span = source.zero_submodule();
    let mut stages = Vec::new();
    for &(g, allowed) in gens {
        let steps: Vec<usize> = ring_gens.iter().map(|&r| source.act_idx(g, r)).collect();
        let mut derive = Vec::new();
        let mut check = Vec::new();
        let mut queue: std::collections::VecDeque<usize> = span.iter().collect();
        while let Some(x) = queue.pop_front() {
            for (slot, &step) in steps.iter().enumerate() {
                let z = source.add_idx(x, step);
                let edge = (x as u32, slot as u32, z as u32);
                if span.insert(z) {
                    derive.push(edge);
                    queue.push_back(z);
                } else {
                    check.push(edge);
                }
            }
        }
        // Images must be killed by everything that kills the generator.
        let annihilator: Vec<usize> = (0..source.ring().size())
            .filter(|&r| source.act_idx(g, r) == source.zero())
            .collect();
        let candidates = (0..target.size())
            .filter(|&y| allowed.is_none_or(|a| a.contains(y)))
            .filter(|&y| annihilator.iter().all(|&r| target.act_idx(y, r) == target.zero()))
            .map(|y| y as u32)
            .collect();
        stages.push(Stage {
            derive,
            check,
            candidates,
        });
    }
    stages
}

struct Search<'a> {
    target: &'a FiniteModule,
    ring_gens: &'a [usize],
    stages: &'a [Stage],
    tried: &'a AtomicUsize,
    cap: usize,
}

impl Search<'_> {
    /// Tries `y` for stage `k` on top of `partial`; on success the stage's
    /// elements are filled in.
    fn extend(&self, partial: &mut [u32], k: usize, y: u32) -> Result<bool> {
        if self.tried.fetch_add(1, Ordering::Relaxed) >= self.cap {
            return Err(Error::HomCap { cap: self.cap });
        }
        let t = self.target;
        let image = |slot: u32| t.act_idx(y as usize, self.ring_gens[slot as usize]);
        let stage = &self.stages[k];
        for &(x, slot, z) in &stage.derive {
            partial[z as usize] = t.add_idx(partial[x as usize] as usize, image(slot)) as u32;
        }
        Ok(stage
            .check
            .iter()
            .all(|&(x, slot, z)| partial[z as usize] as usize == t.add_idx(partial[x as usize] as usize, image(slot))))
    }

    fn run(&self, partial: &mut Vec<u32>, k: usize, out: &mut Vec<ModuleMap>) -> Result<()> {
        if k == self.stages.len() {
            out.push(ModuleMap { table: partial.clone() });
            return Ok(());
        }
        for &y in &self.stages[k].candidates {
            if self.extend(partial, k, y)? {
                self.run(partial, k + 1, out)?;
            }
        }
        Ok(())
    }
}

/// All homomorphisms `source -> target`, sorted by table.
///
/// `cap` bounds the number of generator images tried; exceeding it is an
/// error rather than a truncated list.
pub fn hom_maps(source: &FiniteModule, target: &FiniteModule, cap: usize) -> Result<Vec<ModuleMap>> {
    let gens: Vec<(usize, Option<&ElemSet>)> = source.generating_set().into_iter().map(|g| (g, None)).collect();
    enumerate(source, target, &gens, &AtomicUsize::new(0), cap)
}

fn enumerate(
    source: &FiniteModule,
    target: &FiniteModule,
    gens: &[(usize, Option<&ElemSet>)],
    tried: &AtomicUsize,
    cap: usize,
) -> Result<Vec<ModuleMap>> {
    if !source.ring().same_tables(target.ring()) {
        return Err(Error::Mismatch);
    }
    let ring_gens = ring_generators(source.ring());
    let stages = plan(source, target, &ring_gens, gens);
    let search = Search {
        target,
        ring_gens: &ring_gens,
        stages: &stages,
        tried,
        cap,
    };
    let mut start = vec![u32::MAX; source.size()];
    start[source.zero()] = target.zero() as u32;
    let mut maps = match stages.first() {
        None => vec![ModuleMap { table: start }],
        Some(first) => {
            let chunks = first
                .candidates
                .par_iter()
                .map(|&y| {
                    let mut partial = start.clone();
                    let mut out = Vec::new();
                    if search.extend(&mut partial, 0, y)? {
                        search.run(&mut partial, 1, &mut out)?;
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?;
            chunks.concat()
        }
    };
    maps.sort_unstable();
    Ok(maps)
}

/// All projections of `module` onto the submodule `sub`: maps fixing `sub`
/// pointwise with image inside it, i.e. the idempotent endomorphisms with
/// image exactly `sub`. Sorted by table.
///
/// Only generators outside `sub` have free images, so this is far cheaper
/// than filtering all endomorphisms. `tried` is shared so several searches
/// can draw on one budget.
pub(crate) fn projections_onto(
    module: &FiniteModule,
    sub: &ElemSet,
    tried: &AtomicUsize,
    cap: usize,
) -> Result<Vec<ModuleMap>> {
    if !module.is_submodule(sub) {
        return Err(Error::NotASubmodule);
    }
    let fixed: Vec<ElemSet> = {
        let mut span = module.zero_submodule();
        let mut out = Vec::new();
        for x in sub.iter() {
            if !span.contains(x) {
                span = module.submodule_sum(&span, &module.cyclic(x));
                out.push(ElemSet::singleton(module.size(), x));
            }
        }
        out
    };
    let mut gens: Vec<(usize, Option<&ElemSet>)> = fixed.iter().map(|s| (s.iter().next().unwrap(), Some(s))).collect();
    let mut span = module.zero_submodule();
    for &(g, _) in &gens {
        span = module.submodule_sum(&span, &module.cyclic(g));
    }
    while let Some(x) = span.first_missing() {
        span = module.submodule_sum(&span, &module.cyclic(x));
        gens.push((x, Some(sub)));
    }
    enumerate(module, module, &gens, tried, cap)
}

fn ring_generators(ring: &FiniteRing) -> Vec<usize> {
    ring.additive_generators(&ElemSet::full(ring.size()))
        .into_iter()
        .map(|e| e.index())
        .collect()
}

/// Least isomorphism `a -> b`, if any.
pub fn is_isomorphic(a: &FiniteModule, b: &FiniteModule, cap: usize) -> Result<Option<ModuleMap>> {
    if !a.ring().same_tables(b.ring()) {
        return Err(Error::Mismatch);
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    Ok(hom_maps(a, b, cap)?.into_iter().find(|f| f.is_bijective(b.size())))
}

/// `End(M)` as a ring, together with the map behind each element index.
#[derive(Debug, Clone)]
pub struct EndRing {
    pub ring: FiniteRing,
    pub maps: Vec<ModuleMap>,
}

/// Endomorphisms under pointwise addition and composition,
/// `(f·g)(x) = f(g(x))`. Element `i` is the `i`-th map in table order and
/// is labelled `f{i}`.
pub fn endomorphism_ring(module: &FiniteModule, caps: &Caps) -> Result<EndRing> {
    let maps = hom_maps(module, module, caps.hom)?;
    let n = maps.len();
    if n > caps.size {
        return Err(Error::SizeCap {
            what: "endomorphism ring",
            size: n as u128,
            cap: caps.size,
        });
    }
    let index_of = |m: &ModuleMap| maps.binary_search(m).expect("closed under the ring operations") as u32;
    let add: Vec<u32> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (f, g) = (&maps[k / n], &maps[k % n]);
            let table = f.table.iter().zip(&g.table).map(|(&a, &b)| module.add_idx(a as usize, b as usize) as u32).collect();
            index_of(&ModuleMap { table })
        })
        .collect();
    let mul: Vec<u32> = (0..n * n)
        .into_par_iter()
        .map(|k| index_of(&maps[k / n].compose(&maps[k % n])))
        .collect();
    let zero = index_of(&ModuleMap {
        table: vec![module.zero() as u32; module.size()],
    });
    let one = index_of(&ModuleMap::identity(module.size()));
    let labels = (0..n).map(|i| format!("f{i}")).collect();
    let ring = FiniteRing::from_labeled_tables(n, add, mul, zero as usize, one as usize, Some(labels))?;
    Ok(EndRing { ring, maps })
}

/// The direct summands of a module, each with the least idempotent
/// endomorphism projecting onto it. Sorted by member set.
#[derive(Debug, Clone)]
pub struct ModuleSummands {
    pub summands: Vec<(ElemSet, ModuleMap)>,
}

impl ModuleSummands {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn find(&self, members: &ElemSet) -> Option<&ModuleMap> {
        self.summands
            .binary_search_by(|(s, _)| s.cmp(members))
            .ok()
            .map(|k| &self.summands[k].1)
    }

    pub fn contains(&self, members: &ElemSet) -> bool {
        self.find(members).is_some()
    }

    pub fn sets(&self) -> impl Iterator<Item = &ElemSet> {
        self.summands.iter().map(|(s, _)| s)
    }
}

/// A submodule is a summand exactly when it is the image of an idempotent
/// endomorphism.
pub fn module_summands(module: &FiniteModule, cap: usize) -> Result<ModuleSummands> {
    let mut summands: Vec<(ElemSet, ModuleMap)> = Vec::new();
    for f in hom_maps(module, module, cap)?.into_iter().filter(ModuleMap::is_idempotent) {
        let image = f.image(module.size());
        // Maps arrive in table order, so the first projection seen is least.
        if !summands.iter().any(|(s, _)| *s == image) {
            summands.push((image, f));
        }
    }
    summands.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ModuleSummands { summands })
}

/// Least idempotent endomorphism with image exactly `sub`, if any.
pub fn summand_witness_module(module: &FiniteModule, sub: &Submodule<'_>, cap: usize) -> Result<Option<ModuleMap>> {
    if sub.parent != module {
        return Err(Error::Mismatch);
    }
    Ok(projections_onto(module, &sub.members, &AtomicUsize::new(0), cap)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::module::{submodule_generated, validate_module};
    use crate::ring::{validate_axioms, zmod};

    fn free(n: u32, rank: usize) -> FiniteModule {
        FiniteModule::free(Arc::new(zmod(n).unwrap()), rank).unwrap()
    }

    #[test]
    fn small_hom_sets() {
        let f2 = free(2, 1);
        assert_eq!(hom_maps(&f2, &f2, 1 << 20).unwrap().len(), 2);
        let z4 = free(4, 1);
        let maps = hom_maps(&z4, &z4, 1 << 20).unwrap();
        // multiplication by 0, 1, 2, 3 in table order
        let tables: Vec<Vec<u32>> = maps.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![vec![0, 0, 0, 0], vec![0, 1, 2, 3], vec![0, 2, 0, 2], vec![0, 3, 2, 1]]);
        assert!(maps.iter().all(|m| m.is_homomorphism(&z4, &z4)));
    }

    #[test]
    fn hom_between_torsion_modules() {
        let z4 = Arc::new(zmod(4).unwrap());
        let two = FiniteModule::from_right_ideal(z4.clone(), &ElemSet::from_indices(4, [0, 2])).unwrap();
        let quotient = FiniteModule::quotient(z4.clone(), &ElemSet::from_indices(4, [0, 2])).unwrap();
        let free = FiniteModule::free(z4, 1).unwrap();
        // Z/4 -> {0,2}: 1 may go to 0 or 2
        assert_eq!(hom_maps(&free, &two, 1 << 20).unwrap().len(), 2);
        // {0,2} -> Z/4: 2 must land in the 2-torsion
        assert_eq!(hom_maps(&two, &free, 1 << 20).unwrap().len(), 2);
        assert!(is_isomorphic(&two, &quotient, 1 << 20).unwrap().is_some());
        assert!(is_isomorphic(&free, &two, 1 << 20).unwrap().is_none());
    }

    #[test]
    fn hom_cap_is_an_error() {
        let m = free(2, 3);
        assert!(matches!(hom_maps(&m, &m, 10), Err(Error::HomCap { cap: 10 })));
    }

    #[test]
    fn end_of_free_modules() {
        let caps = Caps::default();
        let end = endomorphism_ring(&free(4, 1), &caps).unwrap();
        assert_eq!(end.ring.size(), 4);
        assert!(validate_axioms(&end.ring).passed);
        let end = endomorphism_ring(&free(2, 2), &caps).unwrap();
        assert_eq!(end.ring.size(), 16);
        assert!(validate_axioms(&end.ring).passed);
        assert!(!end.ring.is_commutative());
    }

    #[test]
    fn summands_of_z4() {
        let m = free(4, 1);
        let s = module_summands(&m, 1 << 20).unwrap();
        assert_eq!(s.len(), 2);
        let two = submodule_generated(&m, &[2]);
        assert_eq!(summand_witness_module(&m, &two, 1 << 20).unwrap(), None);
        let whole = submodule_generated(&m, &[1]);
        assert_eq!(summand_witness_module(&m, &whole, 1 << 20).unwrap(), Some(ModuleMap::identity(4)));
        let zero = submodule_generated(&m, &[]);
        assert_eq!(summand_witness_module(&m, &zero, 1 << 20).unwrap().unwrap().table, vec![0; 4]);
        assert!(validate_module(&m).passed);
    }
}
