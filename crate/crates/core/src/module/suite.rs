//! Module-level implications checked over a list of modules, and the
//! construction of a ring that is SIP on both sides without being SSP.

use std::sync::Arc;

use super::hom::{endomorphism_ring, hom_maps, EndRing};
use super::property::module_property;
use super::{validate_module, FiniteModule};
use crate::caps::Caps;
use crate::error::Result;
use crate::ideal::{is_ideal, principal_set, Side};
use crate::props::{check_sip, check_ssp, is_regular_ring, Property, PropertyVerdict, SspMethod, TheoremReport};
use crate::ring::{construct, opposite_ring, FiniteRing, RingDescriptor};
use crate::set::ElemSet;

#[derive(Debug, Clone)]
pub struct ModuleCase {
    pub name: String,
    pub module: FiniteModule,
    /// `Some(n)` when the module is `R^n`; the endomorphism-ring checks
    /// only run on free modules.
    pub free_rank: Option<usize>,
}

impl ModuleCase {
    pub fn new(name: impl Into<String>, module: FiniteModule, free_rank: Option<usize>) -> Self {
        ModuleCase {
            name: name.into(),
            module,
            free_rank,
        }
    }
}

/// Per module `M`:
///
/// * `c3-and-sip-imply-ssp`: C3 and SIP together force SSP;
/// * `free-ssp-iff-end-ssp`: for free `M`, SSP of `M` matches SSP of `End(M)`;
/// * `free-end-regular-iff-square-ssp`: for free `M`, `End(M)` is regular
///   exactly when `M ⊕ M` is SSP;
/// * `square-c3-implies-c2`: C3 of `M ⊕ M` forces C2 of `M`.
///
/// A check whose enumeration exceeds a cap is recorded as skipped with the
/// cap error as its reason.
pub fn module_lemma_suite(cases: &[ModuleCase], caps: &Caps) -> TheoremReport {
    let mut report = TheoremReport::default();
    for case in cases {
        report.absorb(&case.name, case_report(case, caps));
    }
    report
}

fn case_report(case: &ModuleCase, caps: &Caps) -> TheoremReport {
    let m = &case.module;
    let mut report = TheoremReport::default();
    let prop = |module: &FiniteModule, p: Property| module_property(module, p, caps);

    match (|| -> Result<Option<String>> {
        let (c3, sip, ssp) = (prop(m, Property::C3)?, prop(m, Property::Sip)?, prop(m, Property::Ssp)?);
        Ok((c3.holds && sip.holds && !ssp.holds).then(|| format!("c3 and sip hold, ssp fails at {:?}", ssp.witness)))
    })() {
        Ok(failure) => report.record("c3-and-sip-imply-ssp", None, 3, failure),
        Err(e) => report.skip("c3-and-sip-imply-ssp", None, e.to_string()),
    }

    let square = FiniteModule::direct_sum_capped(m, m, caps.size);

    if case.free_rank.is_some() {
        let end = endomorphism_ring(m, caps);
        match (|| -> Result<(usize, Option<String>)> {
            let end = end.clone()?;
            let ssp = prop(m, Property::Ssp)?;
            let end_ssp = check_ssp(&end.ring, Side::Right, SspMethod::Definitional);
            Ok((
                end.ring.size(),
                (ssp.holds != end_ssp.holds)
                    .then(|| format!("module ssp={}, End ssp={} (|End|={})", ssp.holds, end_ssp.holds, end.ring.size())),
            ))
        })() {
            Ok((n, failure)) => report.record("free-ssp-iff-end-ssp", None, n, failure),
            Err(e) => report.skip("free-ssp-iff-end-ssp", None, e.to_string()),
        }
        match (|| -> Result<(usize, Option<String>)> {
            let end = end?;
            let square = square.clone()?;
            let regular = is_regular_ring(&end.ring);
            let square_ssp = prop(&square, Property::Ssp)?;
            Ok((
                square.size(),
                (regular.holds != square_ssp.holds)
                    .then(|| format!("End regular={}, M+M ssp={}", regular.holds, square_ssp.holds)),
            ))
        })() {
            Ok((n, failure)) => report.record("free-end-regular-iff-square-ssp", None, n, failure),
            Err(e) => report.skip("free-end-regular-iff-square-ssp", None, e.to_string()),
        }
    }

    // When M is already C2 the implication holds whatever M ⊕ M does.
    match (|| -> Result<(usize, Option<String>)> {
        let c2 = prop(m, Property::C2)?;
        if c2.holds {
            return Ok((1, None));
        }
        let square = square?;
        let c3 = prop(&square, Property::C3)?;
        Ok((2, c3.holds.then(|| format!("M+M is C3 but M fails C2 at {:?}", c2.witness))))
    })() {
        Ok((n, failure)) => report.record("square-c3-implies-c2", None, n, failure),
        Err(e) => report.skip("square-c3-implies-c2", None, e.to_string()),
    }
    report
}

/// `S = End(U)` for `U = N ⊕ R/L`, where `R` is the upper triangular 2x2
/// matrices over F2, `N` (second column) and `L` (first row) are left
/// ideals, and left modules are realized over the opposite ring.
#[derive(Debug, Clone)]
pub struct SipNotSspFixture {
    pub base: FiniteRing,
    pub n_ideal: ElemSet,
    pub l_ideal: ElemSet,
    pub n: FiniteModule,
    pub m: FiniteModule,
    pub u: FiniteModule,
    /// `|Hom(N, M)|`.
    pub hom_n_to_m: usize,
    pub end: EndRing,
    pub sip_left: PropertyVerdict,
    pub sip_right: PropertyVerdict,
    pub ssp_right: PropertyVerdict,
    pub ssp_left: PropertyVerdict,
    /// Human-readable record of every construction step and verdict.
    pub trace: Vec<String>,
}

impl SipNotSspFixture {
    /// SIP on both sides and SSP on neither.
    pub fn matches_expectation(&self) -> bool {
        self.sip_left.holds && self.sip_right.holds && !self.ssp_right.holds && !self.ssp_left.holds
    }
}

fn labels(ring: &FiniteRing, set: &ElemSet) -> String {
    let items: Vec<&str> = set.iter().map(|i| ring.label(ring.elem(i).unwrap())).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn sip_not_ssp_fixture(caps: &Caps) -> Result<SipNotSspFixture> {
    let base = construct(&RingDescriptor::Pattern {
        n: 2,
        base: Box::new(RingDescriptor::Zmod { n: 2 }),
        mask: vec![vec![1, 1], vec![0, 1]],
    })?;
    let unit = |l: &str| base.by_label(l).expect("matrix unit label");
    let mut trace = vec![format!("R = upper triangular 2x2 over F2, {} elements", base.size())];

    // N: second column, i.e. R·e22. L: first row, i.e. R·e11 + R·e12.
    let n_ideal = principal_set(&base, Side::Left, unit("e22"));
    let l_ideal = base.subgroup_sum(
        &principal_set(&base, Side::Left, unit("e11")),
        &principal_set(&base, Side::Left, unit("e12")),
    );
    for (name, set) in [("N", &n_ideal), ("L", &l_ideal)] {
        trace.push(format!(
            "{name} = {} ({} elements, left ideal: {})",
            labels(&base, set),
            set.len(),
            is_ideal(&base, Side::Left, set)
        ));
    }

    let op = Arc::new(opposite_ring(&base));
    let n = FiniteModule::from_right_ideal(op.clone(), &n_ideal)?;
    let m = FiniteModule::quotient(op, &l_ideal)?;
    let u = FiniteModule::direct_sum_capped(&n, &m, caps.size)?;
    trace.push(format!("M = R/L over the opposite ring, {} elements", m.size()));
    trace.push(format!(
        "U = N + M, {} elements, module axioms: {}",
        u.size(),
        if validate_module(&u).passed { "passed" } else { "FAILED" }
    ));

    let hom_n_to_m = hom_maps(&n, &m, caps.hom)?.len();
    trace.push(format!("|Hom(N, M)| = {hom_n_to_m}"));
    let end = endomorphism_ring(&u, caps)?;
    trace.push(format!("S = End(U), {} elements", end.ring.size()));

    let sip_left = check_sip(&end.ring, Side::Left);
    let sip_right = check_sip(&end.ring, Side::Right);
    let ssp_right = check_ssp(&end.ring, Side::Right, SspMethod::Definitional);
    let ssp_left = check_ssp(&end.ring, Side::Left, SspMethod::Definitional);
    for v in [&sip_left, &sip_right, &ssp_right, &ssp_left] {
        let side = v.side.map(Side::as_str).unwrap_or("-");
        let witness = match &v.witness {
            Some(crate::props::Witness::Pair(e, f)) => {
                format!(" witness ({}, {})", end.ring.label(*e), end.ring.label(*f))
            }
            Some(w) => format!(" witness {w:?}"),
            None => String::new(),
        };
        trace.push(format!("{} {side}: {}{witness}", v.property.as_str(), v.holds));
    }

    Ok(SipNotSspFixture {
        base,
        n_ideal,
        l_ideal,
        n,
        m,
        u,
        hom_n_to_m,
        end,
        sip_left,
        sip_right,
        ssp_right,
        ssp_left,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::zmod;

    #[test]
    fn suite_on_small_free_modules() {
        let caps = Caps::default();
        let f2 = Arc::new(zmod(2).unwrap());
        let z4 = Arc::new(zmod(4).unwrap());
        let cases = vec![
            ModuleCase::new("F2^1", FiniteModule::free(f2.clone(), 1).unwrap(), Some(1)),
            ModuleCase::new("F2^2", FiniteModule::free(f2, 2).unwrap(), Some(2)),
            ModuleCase::new("Z4^1", FiniteModule::free(z4, 1).unwrap(), Some(1)),
        ];
        let report = module_lemma_suite(&cases, &caps);
        assert!(report.passed(), "{:#?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.skipped().count(), 0);
        assert_eq!(report.checks.len(), 12);
        // Z/4 is not regular and Z/4 ⊕ Z/4 is not SSP: the equivalence holds both ways false.
        let z4_square = report
            .checks
            .iter()
            .find(|c| c.id == "free-end-regular-iff-square-ssp" && c.subject.as_deref() == Some("Z4^1"))
            .unwrap();
        assert!(z4_square.passed());
    }

    #[test]
    fn fixture_shapes() {
        let fx = sip_not_ssp_fixture(&Caps::default()).unwrap();
        assert_eq!((fx.n_ideal.len(), fx.l_ideal.len()), (4, 4));
        // entries (a11, a12, a22) numbered a11*4 + a12*2 + a22
        assert_eq!(fx.n_ideal.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(fx.l_ideal.to_vec(), vec![0, 2, 4, 6]);
        assert_eq!((fx.n.size(), fx.m.size(), fx.u.size()), (4, 2, 8));
        assert!(validate_module(&fx.u).passed);
    }
}
