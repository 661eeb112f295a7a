use std::collections::BTreeSet;
use std::sync::atomic::AtomicUsize;

use super::hom::{is_isomorphic, module_summands, projections_onto, ModuleSummands};
use super::{enumerate_submodules, FiniteModule};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::Side;
use crate::props::{first_failing_pair, Method, Property, PropertyVerdict, Witness};
use crate::set::ElemSet;

/// Decides SSP, SIP, C3 or C2 for a right module.
///
/// Summands are the images of idempotent endomorphisms, so the hom cap
/// applies; C2 also enumerates every submodule and needs the module to fit
/// `caps.ideals`.
///
/// When listing all endomorphisms exceeds the hom cap, SSP, SIP and C3
/// fall back to searching pairs of cyclic summands for a counterexample;
/// a failure found that way is certified, and if none is found the cap
/// error is returned.
pub fn module_property(module: &FiniteModule, property: Property, caps: &Caps) -> Result<PropertyVerdict> {
    let summands = match module_summands(module, caps.hom) {
        Ok(s) => s,
        Err(capped @ Error::HomCap { .. }) if matches!(property, Property::Ssp | Property::Sip | Property::C3) => {
            return match cyclic_witness(module, property, caps) {
                Ok(Some(witness)) => Ok(PropertyVerdict {
                    property,
                    side: Some(Side::Right),
                    holds: false,
                    witness: Some(witness),
                    method: Method::WitnessSearch,
                }),
                Ok(None) | Err(Error::HomCap { .. }) => Err(capped),
                Err(e) => Err(e),
            };
        }
        Err(e) => return Err(e),
    };
    let sets: Vec<&ElemSet> = summands.sets().collect();
    let pair = |fails: &(dyn Fn(&ElemSet, &ElemSet) -> bool + Sync)| {
        first_failing_pair(sets.len(), |i, j| fails(sets[i], sets[j]))
            .map(|(i, j)| Witness::Summands(sets[i].clone(), sets[j].clone()))
    };
    let (witness, method) = match property {
        Property::Ssp => (
            pair(&|a, b| !summands.contains(&module.submodule_sum(a, b))),
            Method::IdempotentEndomorphisms,
        ),
        Property::Sip => (
            pair(&|a, b| !summands.contains(&a.intersection(b))),
            Method::IdempotentEndomorphisms,
        ),
        Property::C3 => (
            pair(&|a, b| a.intersection(b).len() == 1 && !summands.contains(&module.submodule_sum(a, b))),
            Method::IdempotentEndomorphisms,
        ),
        Property::C2 => (c2_witness(module, &summands, caps)?, Method::IsomorphismScan),
        other => {
            return Err(Error::Descriptor {
                path: "property".into(),
                reason: format!("`{}` is a ring property, not a module property", other.as_str()),
            })
        }
    };
    Ok(PropertyVerdict {
        property,
        side: Some(Side::Right),
        holds: witness.is_none(),
        witness,
        method,
    })
}

fn cyclic_witness(module: &FiniteModule, property: Property, caps: &Caps) -> Result<Option<Witness>> {
    let budget = AtomicUsize::new(0);
    let is_summand = |set: &ElemSet| -> Result<bool> { Ok(!projections_onto(module, set, &budget, caps.hom)?.is_empty()) };
    let cyclic: BTreeSet<ElemSet> = (0..module.size()).map(|x| module.cyclic(x)).collect();
    let mut summands = Vec::new();
    for set in cyclic {
        if is_summand(&set)? {
            summands.push(set);
        }
    }
    for a in &summands {
        for b in &summands {
            let fails = match property {
                Property::Ssp => !is_summand(&module.submodule_sum(a, b))?,
                Property::Sip => !is_summand(&a.intersection(b))?,
                _ => a.intersection(b).len() == 1 && !is_summand(&module.submodule_sum(a, b))?,
            };
            if fails {
                return Ok(Some(Witness::Summands(a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

fn c2_witness(module: &FiniteModule, summands: &ModuleSummands, caps: &Caps) -> Result<Option<Witness>> {
    let restricted = summands
        .sets()
        .map(|s| Ok((s, module.restrict(s)?)))
        .collect::<Result<Vec<_>>>()?;
    for sub in enumerate_submodules(module, caps.ideals)? {
        if summands.contains(&sub) {
            continue;
        }
        let copy = module.restrict(&sub)?;
        for (summand, as_module) in restricted.iter().filter(|(s, _)| s.len() == sub.len()) {
            if is_isomorphic(&copy, as_module, caps.hom)?.is_some() {
                return Ok(Some(Witness::SubmoduleCopy {
                    submodule: sub,
                    summand: (*summand).clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Re-checks a failed module verdict from scratch: the witness sets are
/// re-tested for being summands one at a time.
pub fn module_witness_refails(module: &FiniteModule, verdict: &PropertyVerdict, caps: &Caps) -> Result<bool> {
    let is_summand = |set: &ElemSet| -> Result<bool> {
        let sub = super::Submodule {
            parent: module,
            members: set.clone(),
        };
        Ok(module.is_submodule(set) && super::summand_witness_module(module, &sub, caps.hom)?.is_some())
    };
    Ok(match (verdict.property, &verdict.witness) {
        (property, Some(Witness::Summands(a, b))) => {
            if !(is_summand(a)? && is_summand(b)?) {
                return Ok(false);
            }
            match property {
                Property::Ssp => !is_summand(&module.submodule_sum(a, b))?,
                Property::Sip => !is_summand(&a.intersection(b))?,
                Property::C3 => a.intersection(b).len() == 1 && !is_summand(&module.submodule_sum(a, b))?,
                _ => false,
            }
        }
        (Property::C2, Some(Witness::SubmoduleCopy { submodule, summand })) => {
            module.is_submodule(submodule)
                && !is_summand(submodule)?
                && is_summand(summand)?
                && is_isomorphic(&module.restrict(submodule)?, &module.restrict(summand)?, caps.hom)?.is_some()
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::props::{check_c2, check_c3, check_sip, check_ssp, SspMethod};
    use crate::ring::{construct, zmod, RingDescriptor};

    const SIDED: [Property; 4] = [Property::Ssp, Property::Sip, Property::C3, Property::C2];

    #[test]
    fn modules_over_a_field() {
        let f2 = Arc::new(zmod(2).unwrap());
        for rank in 1..=3 {
            let m = FiniteModule::free(f2.clone(), rank).unwrap();
            for p in SIDED {
                assert!(module_property(&m, p, &Caps::default()).unwrap().holds, "{p:?} rank {rank}");
            }
        }
    }

    #[test]
    fn z4_is_c2_and_c3() {
        let m = FiniteModule::free(Arc::new(zmod(4).unwrap()), 1).unwrap();
        let caps = Caps::default();
        assert!(module_property(&m, Property::C2, &caps).unwrap().holds);
        assert!(module_property(&m, Property::C3, &caps).unwrap().holds);
    }

    #[test]
    fn free_rank_one_matches_ring_verdicts() {
        let caps = Caps::default();
        let ut2 = construct(&RingDescriptor::Pattern {
            n: 2,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
            mask: vec![vec![1, 1], vec![0, 1]],
        })
        .unwrap();
        for ring in [zmod(6).unwrap(), ut2] {
            let m = FiniteModule::free(Arc::new(ring.clone()), 1).unwrap();
            let ring_verdicts = [
                check_ssp(&ring, Side::Right, SspMethod::Definitional).holds,
                check_sip(&ring, Side::Right).holds,
                check_c3(&ring, Side::Right).holds,
                check_c2(&ring, Side::Right, &caps).unwrap().holds,
            ];
            for (p, expected) in SIDED.into_iter().zip(ring_verdicts) {
                let v = module_property(&m, p, &caps).unwrap();
                assert_eq!(v.holds, expected, "{p:?}");
                if !v.holds {
                    assert!(module_witness_refails(&m, &v, &caps).unwrap());
                }
            }
        }
    }
}
