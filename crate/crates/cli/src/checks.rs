//! The single entry point from a (property, side, method) request to a verdict.

use std::sync::Arc;

use summand::module::{module_lemma_suite, FiniteModule, ModuleCase};
use summand::props::{
    check_c2, check_c3, check_sip, check_ssp, is_abelian, is_regular_ring, semisimple_verdict, theorem_suite,
    witness_refails, Property, PropertyVerdict, SspMethod, TheoremReport,
};
use summand::{Caps, FiniteRing, Result, Side};

/// Properties in report order.
pub const ALL_PROPERTIES: [Property; 7] = [
    Property::Ssp,
    Property::Sip,
    Property::C2,
    Property::C3,
    Property::Regular,
    Property::Abelian,
    Property::Semisimple,
];

/// `side` is ignored for unsided properties and `method` for everything but SSP.
pub fn verdict(ring: &FiniteRing, property: Property, side: Side, method: SspMethod, caps: &Caps) -> Result<PropertyVerdict> {
    Ok(match property {
        Property::Ssp => check_ssp(ring, side, method),
        Property::Sip => check_sip(ring, side),
        Property::C3 => check_c3(ring, side),
        Property::C2 => check_c2(ring, side, caps)?,
        Property::Regular => is_regular_ring(ring),
        Property::Abelian => is_abelian(ring),
        Property::Semisimple => semisimple_verdict(ring),
    })
}

/// `None` for a verdict that holds.
pub fn refails(ring: &FiniteRing, v: &PropertyVerdict, caps: &Caps) -> Result<Option<bool>> {
    if v.holds {
        return Ok(None);
    }
    witness_refails(ring, v, caps).map(Some)
}

/// Largest `|R^2|` for which the module suite also runs on `R^2`; its
/// square `R^4` is enumerated as well, which gets slow quickly.
pub const FREE_SQUARE_CAP: usize = 16;

/// The ring-level suite followed by the module suite on `R` and, for
/// rings of at most four elements, on `R^2`.
pub fn verify_ring(ring: &FiniteRing, caps: &Caps) -> (TheoremReport, TheoremReport) {
    let rings = theorem_suite(ring, caps);
    let shared = Arc::new(ring.clone());
    let mut cases = Vec::new();
    if let Ok(m) = FiniteModule::free_capped(shared.clone(), 1, caps.size) {
        cases.push(ModuleCase::new("R^1", m, Some(1)));
    }
    if ring.size().saturating_mul(ring.size()) <= FREE_SQUARE_CAP.min(caps.ideals) {
        if let Ok(m) = FiniteModule::free_capped(shared, 2, caps.size) {
            cases.push(ModuleCase::new("R^2", m, Some(2)));
        }
    }
    (rings, module_lemma_suite(&cases, caps))
}
