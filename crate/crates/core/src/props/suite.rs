//! Structural identities and equivalences run as exhaustive checks on one
//! ring.

use std::fmt;

use serde::Serialize;

use super::{
    all_right_ideals_are_summands, check_c2, check_c3, check_sip, check_ssp, is_abelian, is_regular_ring,
    regular_inverse, semisimplicity, PropertyVerdict, SspMethod,
};
use crate::caps::{Caps, ORACLE_RING_CAP};
use crate::ideal::{annihilator, idempotents, principal_set, Side, SummandTable};
use crate::ring::{corner_ring, matrix_ring, opposite_ring, Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed { counterexample: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// What the check ran on, when a report covers several objects.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    /// Number of instances examined.
    pub universe: usize,
    #[serde(flatten)]
    pub status: CheckStatus,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Passed
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Failed { .. })
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if let Some(subject) = &self.subject {
            write!(f, " [{subject}]")?;
        }
        if let Some(side) = self.side {
            write!(f, " ({side})")?;
        }
        match &self.status {
            CheckStatus::Passed => write!(f, ": passed over {}", self.universe),
            CheckStatus::Failed { counterexample } => write!(f, ": FAILED at {counterexample}"),
            CheckStatus::Skipped { reason } => write!(f, ": skipped, {reason}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    /// No check failed. Skipped checks do not count against this.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(CheckRecord::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn skipped(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| matches!(c.status, CheckStatus::Skipped { .. }))
    }

    pub fn get(&self, id: &str, side: Option<Side>) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id && c.side == side)
    }

    /// Tags every record with `subject` and appends them to `self`.
    pub fn absorb(&mut self, subject: &str, other: TheoremReport) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.subject = Some(subject.to_string());
            c
        }));
    }

    pub(crate) fn record(&mut self, id: &str, side: Option<Side>, universe: usize, failure: Option<String>) {
        let status = match failure {
            None => CheckStatus::Passed,
            Some(counterexample) => CheckStatus::Failed { counterexample },
        };
        self.checks.push(CheckRecord {
            id: id.into(),
            subject: None,
            side,
            universe,
            status,
        });
    }

    pub(crate) fn skip(&mut self, id: &str, side: Option<Side>, reason: String) {
        self.checks.push(CheckRecord {
            id: id.into(),
            subject: None,
            side,
            universe: 0,
            status: CheckStatus::Skipped { reason },
        });
    }
}

fn label(ring: &FiniteRing, a: Elem) -> String {
    format!("{} [{}]", ring.label(a), a.index())
}

fn verdict_line(v: &PropertyVerdict) -> String {
    let side = v.side.map(|s| format!(" {s}")).unwrap_or_default();
    format!("{}{side}={}", v.property.as_str(), v.holds)
}

/// Runs every identity on `ring`. Checks that would exceed a cap are
/// recorded as skipped.
pub fn theorem_suite(ring: &FiniteRing, caps: &Caps) -> TheoremReport {
    let mut report = TheoremReport::default();
    let idem = idempotents(ring);
    let tables = [SummandTable::new(ring, Side::Right), SummandTable::new(ring, Side::Left)];
    let table = |side: Side| &tables[(side == Side::Left) as usize];
    let pairs: Vec<(Elem, Elem)> = idem.iter().flat_map(|&e| idem.iter().map(move |&f| (e, f))).collect();

    // eR + fR = eR ⊕ (1-e)fR, and mirrored on the left.
    for side in Side::BOTH {
        let failure = pairs.iter().find_map(|&(e, f)| {
            let c = ring.complement(e);
            let (er, cf) = match side {
                Side::Right => (principal_set(ring, side, e), principal_set(ring, side, ring.mul(c, f))),
                Side::Left => (principal_set(ring, side, e), principal_set(ring, side, ring.mul(f, c))),
            };
            let sum = ring.subgroup_sum(&er, &principal_set(ring, side, f));
            let ok = sum == ring.subgroup_sum(&er, &cf) && er.intersection(&cf).len() == 1;
            (!ok).then(|| format!("e={}, f={}", label(ring, e), label(ring, f)))
        });
        report.record("idempotent-sum-decomposition", Some(side), pairs.len(), failure);
    }

    // eR + fR is a summand iff (1-e)fR is.
    for side in Side::BOTH {
        let t = table(side);
        let failure = pairs.iter().find_map(|&(e, f)| {
            let c = ring.complement(e);
            let cf = match side {
                Side::Right => ring.mul(c, f),
                Side::Left => ring.mul(f, c),
            };
            let sum = ring.subgroup_sum(&principal_set(ring, side, e), &principal_set(ring, side, f));
            (t.is_summand(&sum) != t.is_summand(&principal_set(ring, side, cf)))
                .then(|| format!("e={}, f={}", label(ring, e), label(ring, f)))
        });
        report.record("summand-sum-transfer", Some(side), pairs.len(), failure);
    }

    // a regular ⟺ aR summand ⟺ Ra summand.
    let failure = ring.elements().find_map(|a| {
        let reg = regular_inverse(ring, a).is_some();
        let right = table(Side::Right).is_summand(&principal_set(ring, Side::Right, a));
        let left = table(Side::Left).is_summand(&principal_set(ring, Side::Left, a));
        (reg != right || reg != left).then(|| {
            format!("a={}: regular={reg}, aR summand={right}, Ra summand={left}", label(ring, a))
        })
    });
    report.record("regular-iff-principal-summand", None, ring.size(), failure);

    let ssp = [
        check_ssp(ring, Side::Right, SspMethod::Definitional),
        check_ssp(ring, Side::Right, SspMethod::EfCriterion),
        check_ssp(ring, Side::Left, SspMethod::Definitional),
        check_ssp(ring, Side::Left, SspMethod::EfCriterion),
    ];
    let failure = ssp.iter().any(|v| v.holds != ssp[0].holds).then(|| {
        ssp.iter()
            .map(|v| format!("{:?} {}", v.method, verdict_line(v)))
            .collect::<Vec<_>>()
            .join(", ")
    });
    report.record("ssp-side-method-agreement", None, ssp.len(), failure);
    let is_ssp = ssp.iter().all(|v| v.holds);

    let c3 = [check_c3(ring, Side::Right), check_c3(ring, Side::Left)];
    let sip = [check_sip(ring, Side::Right), check_sip(ring, Side::Left)];
    let right = c3[0].holds && sip[0].holds;
    let left = c3[1].holds && sip[1].holds;
    let failure = (is_ssp != right || is_ssp != left).then(|| {
        format!(
            "ssp={is_ssp}, {}, {}, {}, {}",
            verdict_line(&c3[0]),
            verdict_line(&sip[0]),
            verdict_line(&c3[1]),
            verdict_line(&sip[1])
        )
    });
    report.record("ssp-iff-c3-and-sip", None, 5, failure);

    let regular = is_regular_ring(ring);
    let abelian = is_abelian(ring);
    let failure = ((regular.holds || abelian.holds) && !is_ssp)
        .then(|| format!("regular={}, abelian={}, ssp=false", regular.holds, abelian.holds));
    report.record("regular-or-abelian-implies-ssp", None, 3, failure);

    let semisimple = semisimplicity(ring).is_semisimple;
    let failure = (semisimple && !regular.holds).then(|| "semisimple but not regular".to_string());
    report.record("semisimple-implies-regular", None, 2, failure);

    for (k, side) in Side::BOTH.into_iter().enumerate() {
        let failure = (is_ssp && !c3[k].holds).then(|| format!("ssp=true, {}", verdict_line(&c3[k])));
        report.record("ssp-implies-c3", Some(side), 2, failure);
    }

    // SSP passes to every corner ring eRe.
    if is_ssp {
        let failure = idem.iter().find_map(|&e| {
            let corner = corner_ring(ring, e).expect("idempotent");
            let v = check_ssp(&corner.ring, Side::Right, SspMethod::Definitional);
            (!v.holds).then(|| format!("e={}: corner of size {} is not SSP", label(ring, e), corner.ring.size()))
        });
        report.record("corner-inherits-ssp", None, idem.len(), failure);
    } else {
        // Vacuous: the hypothesis fails.
        report.record("corner-inherits-ssp", None, 0, None);
    }

    let m2_size = (ring.size() as u128).pow(4);
    if m2_size <= caps.size as u128 {
        let m2 = matrix_ring(ring, 2, caps.size).expect("fits the cap");
        let m2_ssp = check_ssp(&m2, Side::Right, SspMethod::Definitional);
        let failure = (regular.holds != m2_ssp.holds)
            .then(|| format!("regular={}, 2x2 matrix ring ssp={}", regular.holds, m2_ssp.holds));
        report.record("regular-iff-matrix-ssp", None, m2.size(), failure);
    } else {
        report.skip(
            "regular-iff-matrix-ssp",
            None,
            format!("the 2x2 matrix ring has {m2_size} elements, above the size cap {}", caps.size),
        );
    }

    // eR ∩ fR = r(1-e) ∩ r(1-f) = r(R(1-e) + R(1-f)), mirrored on the left.
    for side in Side::BOTH {
        let other = side.flip();
        let failure = pairs.iter().find_map(|&(e, f)| {
            let (ce, cf) = (ring.complement(e), ring.complement(f));
            let meet = principal_set(ring, side, e).intersection(&principal_set(ring, side, f));
            let ann_meet = annihilator(ring, side, &[ce])
                .members()
                .intersection(annihilator(ring, side, &[cf]).members());
            let sum = ring.subgroup_sum(&principal_set(ring, other, ce), &principal_set(ring, other, cf));
            let sum_elems: Vec<Elem> = sum.iter().map(|i| ring.elem(i).unwrap()).collect();
            let ann_sum = annihilator(ring, side, &sum_elems).into_members();
            (meet != ann_meet || meet != ann_sum).then(|| format!("e={}, f={}", label(ring, e), label(ring, f)))
        });
        report.record("summand-intersection-annihilator", Some(side), pairs.len(), failure);
    }

    if ring.size() <= ORACLE_RING_CAP {
        let oracle = all_right_ideals_are_summands(ring, ORACLE_RING_CAP).expect("within the oracle cap");
        let failure = (oracle != semisimple)
            .then(|| format!("radical says semisimple={semisimple}, ideal scan says {oracle}"));
        report.record("radical-matches-ideal-oracle", None, 1, failure);
    } else {
        report.skip(
            "radical-matches-ideal-oracle",
            None,
            format!("ring has {} elements, above the oracle cap {ORACLE_RING_CAP}", ring.size()),
        );
    }

    let op = opposite_ring(ring);
    let mut compared = vec![
        (check_ssp(ring, Side::Right, SspMethod::Definitional), check_ssp(&op, Side::Left, SspMethod::Definitional)),
        (sip[0].clone(), check_sip(&op, Side::Left)),
        (c3[0].clone(), check_c3(&op, Side::Left)),
    ];
    let c2_fits = ring.size() <= caps.ideals;
    if c2_fits {
        if let (Ok(a), Ok(b)) = (check_c2(ring, Side::Right, caps), check_c2(&op, Side::Left, caps)) {
            compared.push((a, b));
        }
    }
    let failure = compared.iter().find_map(|(a, b)| {
        (a.holds != b.holds || a.witness != b.witness)
            .then(|| format!("R: {} {:?}; opposite: {} {:?}", verdict_line(a), a.witness, verdict_line(b), b.witness))
    });
    report.record("opposite-duality", None, compared.len(), failure);
    if !c2_fits {
        report.skip(
            "opposite-duality-c2",
            None,
            format!("ring has {} elements, above the ideal cap {}", ring.size(), caps.ideals),
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{construct, zmod, RingDescriptor};

    #[test]
    fn commutative_rings_pass() {
        for n in [2, 4, 6] {
            let report = theorem_suite(&zmod(n).unwrap(), &Caps::default());
            assert!(report.passed(), "{:#?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn z4_matrix_check_is_consistent() {
        let report = theorem_suite(&zmod(4).unwrap(), &Caps::default());
        let m = report.get("regular-iff-matrix-ssp", None).unwrap();
        assert_eq!(m.universe, 256);
        assert!(m.passed());
    }

    #[test]
    fn big_rings_skip_capped_checks() {
        let m2 = construct(&RingDescriptor::Matrix {
            n: 2,
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
        })
        .unwrap();
        let report = theorem_suite(&m2, &Caps::default());
        assert!(report.passed());
        assert!(report.get("regular-iff-matrix-ssp", None).unwrap().status != CheckStatus::Passed);
        assert_eq!(report.skipped().count(), 1);
    }
}
