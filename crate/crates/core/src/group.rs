//! Subgroup arithmetic shared by rings and modules: anything with a finite
//! additive table.

use crate::set::ElemSet;

pub(crate) trait AdditiveTable {
    fn order(&self) -> usize;
    fn zero_index(&self) -> usize;
    fn add_index(&self, a: usize, b: usize) -> usize;
}

/// Closes `start` under adding each of `gens`; when `start` is a subgroup
/// the result is `start + <gens>`.
pub(crate) fn closure<G: AdditiveTable + ?Sized>(g: &G, start: &ElemSet, gens: &[usize]) -> ElemSet {
    let mut members = start.clone();
    for &x in gens {
        if members.contains(x) {
            continue;
        }
        let mut queue = members.to_vec();
        while let Some(y) = queue.pop() {
            let z = g.add_index(y, x);
            if members.insert(z) {
                queue.push(z);
            }
        }
    }
    members
}

/// Greedy generating set of a subgroup, in ascending order.
pub(crate) fn generators<G: AdditiveTable + ?Sized>(g: &G, group: &ElemSet) -> Vec<usize> {
    let mut span = ElemSet::singleton(g.order(), g.zero_index());
    let mut gens = Vec::new();
    for x in group.iter() {
        if !span.contains(x) {
            span = closure(g, &span, &[x]);
            gens.push(x);
        }
    }
    gens
}

pub(crate) fn subgroup_sum<G: AdditiveTable + ?Sized>(g: &G, i: &ElemSet, j: &ElemSet) -> ElemSet {
    closure(g, i, &generators(g, j))
}
