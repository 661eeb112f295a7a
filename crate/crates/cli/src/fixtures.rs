//! Shipped example rings, each with the values it is expected to produce.
//!
//! The descriptors live in `fixtures/*.json` and double as golden inputs
//! for the descriptor parser.

use std::time::Instant;

use summand::ideal::{ideal_generated, idempotents, summand_witness};
use summand::module::sip_not_ssp_fixture;
use summand::props::{CheckRecord, CheckStatus, Property, PropertyVerdict, SspMethod};
use summand::{Caps, Side};

use crate::checks::{refails, verdict, verify_ring};
use crate::descriptor::load_text;
use crate::error::InputError;
use crate::report::{Report, RingSummary, VerdictView};

/// One expected fact about a fixture ring.
#[derive(Debug, Clone, Copy)]
pub enum Expect {
    Size(usize),
    IdempotentCount(usize),
    /// The idempotents, as labels, in carrier order.
    Idempotents(&'static [&'static str]),
    /// `Some(side)` for sided properties; SSP uses the definitional method.
    Holds(Property, Option<Side>, bool),
    /// The reported counterexample for an unsided property, by label.
    WitnessLabel(Property, &'static str),
    /// The one-sided ideal generated by the two idempotents is not a summand.
    SumNotSummand(Side, &'static str, &'static str),
    /// Ring and module suites report no failure.
    SuitePasses,
    /// The tables equal `End(N ⊕ R/L)` rebuilt from scratch.
    RebuildsEndRing,
}

#[derive(Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub descriptor: &'static str,
    pub expect: &'static [Expect],
}

use Expect::*;
use Property::*;

const R: Option<Side> = Some(Side::Right);
const L: Option<Side> = Some(Side::Left);

pub static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "f2",
        summary: "the field with two elements: every property holds",
        descriptor: include_str!("../fixtures/f2.json"),
        expect: &[
            Size(2),
            IdempotentCount(2),
            Holds(Ssp, R, true),
            Holds(Ssp, L, true),
            Holds(Sip, R, true),
            Holds(C2, R, true),
            Holds(C3, R, true),
            Holds(Regular, None, true),
            Holds(Abelian, None, true),
            Holds(Semisimple, None, true),
            SuitePasses,
        ],
    },
    Fixture {
        name: "zmod-4",
        summary: "Z/4: SSP, SIP, C3 hold; not regular (2 has no inner inverse), not semisimple",
        descriptor: include_str!("../fixtures/zmod-4.json"),
        expect: &[
            Size(4),
            IdempotentCount(2),
            Holds(Ssp, R, true),
            Holds(Ssp, L, true),
            Holds(Sip, R, true),
            Holds(C3, R, true),
            Holds(Regular, None, false),
            WitnessLabel(Regular, "2"),
            Holds(Abelian, None, true),
            Holds(Semisimple, None, false),
            SuitePasses,
        ],
    },
    Fixture {
        name: "zmod-6",
        summary: "Z/6 = F2 x F3: commutative and semisimple, so SSP, SIP, C3 and regular",
        descriptor: include_str!("../fixtures/zmod-6.json"),
        expect: &[
            Size(6),
            IdempotentCount(4),
            Holds(Ssp, R, true),
            Holds(Ssp, L, true),
            Holds(Sip, R, true),
            Holds(Sip, L, true),
            Holds(C3, R, true),
            Holds(C3, L, true),
            Holds(Regular, None, true),
            Holds(Semisimple, None, true),
            SuitePasses,
        ],
    },
    Fixture {
        name: "f2xf2",
        summary: "F2 x F2: four idempotents, all central; regular and SSP",
        descriptor: include_str!("../fixtures/f2xf2.json"),
        expect: &[
            Size(4),
            IdempotentCount(4),
            Holds(Ssp, R, true),
            Holds(Sip, R, true),
            Holds(C3, R, true),
            Holds(Regular, None, true),
            Holds(Abelian, None, true),
            Holds(Semisimple, None, true),
            SuitePasses,
        ],
    },
    Fixture {
        name: "m2-f2",
        summary: "2x2 matrices over F2: regular and SSP, not abelian",
        descriptor: include_str!("../fixtures/m2-f2.json"),
        expect: &[
            Size(16),
            IdempotentCount(8),
            Holds(Ssp, R, true),
            Holds(Ssp, L, true),
            Holds(Sip, R, true),
            Holds(C3, R, true),
            Holds(Regular, None, true),
            Holds(Abelian, None, false),
            Holds(Semisimple, None, true),
            SuitePasses,
        ],
    },
    Fixture {
        name: "m2-zmod4",
        summary: "2x2 matrices over Z/4: not SSP (Z/4 is not regular), not SIP, but C3",
        descriptor: include_str!("../fixtures/m2-zmod4.json"),
        expect: &[
            Size(256),
            IdempotentCount(26),
            Holds(Ssp, R, false),
            Holds(Ssp, L, false),
            Holds(Sip, R, false),
            Holds(C3, R, true),
            Holds(Regular, None, false),
        ],
    },
    Fixture {
        name: "ut2-f2",
        summary: "upper triangular 2x2 over F2: SIP on both sides, neither SSP nor C3",
        descriptor: include_str!("../fixtures/ut2-f2.json"),
        expect: &[
            Size(8),
            IdempotentCount(6),
            Holds(Ssp, R, false),
            Holds(Ssp, L, false),
            Holds(Sip, R, true),
            Holds(Sip, L, true),
            Holds(C3, R, false),
            Holds(C3, L, false),
            Holds(Regular, None, false),
            Holds(Abelian, None, false),
            Holds(Semisimple, None, false),
            SuitePasses,
        ],
    },
    Fixture {
        name: "end-ut2-module",
        summary: "End(N + R/L) for left ideals N, L of upper triangular 2x2 over F2: SIP on both sides, not SSP",
        descriptor: include_str!("../fixtures/end-ut2-module.json"),
        expect: &[
            RebuildsEndRing,
            Size(8),
            Holds(Sip, L, true),
            Holds(Sip, R, true),
            Holds(Ssp, R, false),
            Holds(Ssp, L, false),
            SuitePasses,
        ],
    },
    Fixture {
        name: "pattern-e13-f2",
        summary: "3x3 over F2 on e11, e13, e22, e33: 12 idempotents, left SIP, not SSP",
        descriptor: include_str!("../fixtures/pattern-e13-f2.json"),
        expect: &[
            Size(16),
            Idempotents(&[
                "0",
                "e33",
                "e22",
                "e22+e33",
                "e13+e33",
                "e13+e22+e33",
                "e11",
                "e11+e33",
                "e11+e22",
                "e11+e22+e33",
                "e11+e13",
                "e11+e13+e22",
            ]),
            // A claimed value, kept as stated: it does not hold, since
            // e33R + (e13+e33)R is not a summand although the two meet in 0.
            Holds(C3, R, true),
            Holds(Sip, L, true),
            Holds(Ssp, R, false),
            Holds(Ssp, L, false),
            SumNotSummand(Side::Left, "e11+e22", "e11+e13"),
            SuitePasses,
        ],
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

fn record(id: impl Into<String>, side: Option<Side>, universe: usize, failure: Option<String>) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        subject: None,
        side,
        universe,
        status: match failure {
            None => CheckStatus::Passed,
            Some(counterexample) => CheckStatus::Failed { counterexample },
        },
    }
}

/// Builds the fixture ring and checks every expectation. Verdicts computed
/// along the way are listed in the report, and every failed one must carry
/// a witness that re-fails on its own.
pub fn run_fixture(fixture: &Fixture, caps: &Caps) -> Result<Report, InputError> {
    let loaded = load_text(fixture.name, fixture.descriptor, caps)?;
    let ring = &loaded.ring;
    let mut report = Report::new(RingSummary::new(fixture.name, ring), *caps);
    let mut verdicts: Vec<PropertyVerdict> = Vec::new();

    for expect in fixture.expect {
        let start = Instant::now();
        let (step, rec) = match *expect {
            Size(n) => (
                "size".to_string(),
                record("size", None, 1, (ring.size() != n).then(|| format!("{} elements, expected {n}", ring.size()))),
            ),
            IdempotentCount(n) => {
                let found = idempotents(ring).len();
                (
                    "idempotent-count".into(),
                    record(
                        "idempotent-count",
                        None,
                        ring.size(),
                        (found != n).then(|| format!("{found} idempotents, expected {n}")),
                    ),
                )
            }
            Idempotents(expected) => {
                let found: Vec<&str> = idempotents(ring).iter().map(|&e| ring.label(e)).collect();
                (
                    "idempotents".into(),
                    record(
                        "idempotents",
                        None,
                        ring.size(),
                        (found != expected).then(|| format!("found [{}]", found.join(", "))),
                    ),
                )
            }
            Holds(property, side, expected) => {
                let v = verdict(ring, property, side.unwrap_or(Side::Right), SspMethod::Definitional, caps)?;
                let failure = (v.holds != expected).then(|| {
                    let witness = v.witness.as_ref().map(|w| crate::report::WitnessView::new(ring, w).to_string());
                    format!("holds={}, expected {expected}; witness {}", v.holds, witness.unwrap_or("-".into()))
                });
                if !verdicts.contains(&v) {
                    verdicts.push(v);
                }
                let id = property.as_str();
                let step = match side {
                    Some(s) => format!("{id}/{s}"),
                    None => id.to_string(),
                };
                (step, record(id, side, 1, failure))
            }
            WitnessLabel(property, label) => {
                let v = verdict(ring, property, Side::Right, SspMethod::Definitional, caps)?;
                let found = match &v.witness {
                    Some(summand::props::Witness::Element(a)) => Some(ring.label(*a).to_string()),
                    _ => None,
                };
                let failure = (found.as_deref() != Some(label))
                    .then(|| format!("witness {found:?}, expected {label}"));
                if !verdicts.contains(&v) {
                    verdicts.push(v);
                }
                (
                    format!("{}-witness", property.as_str()),
                    record(format!("{}-witness", property.as_str()), None, 1, failure),
                )
            }
            SumNotSummand(side, e, f) => {
                let failure = match (ring.by_label(e), ring.by_label(f)) {
                    (Some(a), Some(b)) => {
                        let sum = ideal_generated(ring, side, &[a, b]);
                        summand_witness(&sum).map(|g| format!("the sum is generated by {}", ring.label(g)))
                    }
                    _ => Some(format!("no elements labeled {e} and {f}")),
                };
                ("sum-not-summand".into(), record("sum-not-summand", Some(side), 1, failure))
            }
            SuitePasses => {
                let (rings, modules) = verify_ring(ring, caps);
                let mut failures: Vec<String> = rings.failures().chain(modules.failures()).map(|c| c.to_string()).collect();
                failures.truncate(3);
                let n = rings.checks.len() + modules.checks.len();
                (
                    "suite".into(),
                    record("suite", None, n, (!failures.is_empty()).then(|| failures.join("; "))),
                )
            }
            RebuildsEndRing => {
                let built = sip_not_ssp_fixture(caps)?;
                let failure = (!built.end.ring.same_tables(ring)).then(|| {
                    format!("tables differ from the rebuilt ring; construction trace: {}", built.trace.join(" | "))
                });
                ("rebuild".into(), record("rebuilds-end-ring", None, built.end.ring.size(), failure))
            }
        };
        report.time(step, start.elapsed());
        report.theorems.push(rec);
    }

    let mut unconfirmed = Vec::new();
    for v in &verdicts {
        let again = refails(ring, v, caps)?;
        if again == Some(false) {
            unconfirmed.push(format!("{} {:?}", v.property.as_str(), v.side));
        }
        report.verdicts.push(VerdictView::new(ring, v, again));
    }
    let failed = verdicts.iter().filter(|v| !v.holds).count();
    report.theorems.push(record(
        "witnesses-refail",
        None,
        failed,
        (!unconfirmed.is_empty()).then(|| unconfirmed.join(", ")),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::parse_descriptor;

    #[test]
    fn catalog_parses_and_names_are_unique() {
        for (i, f) in FIXTURES.iter().enumerate() {
            parse_descriptor(f.descriptor).unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert!(FIXTURES[..i].iter().all(|g| g.name != f.name));
        }
    }

    #[test]
    fn small_fixtures_pass() {
        let caps = Caps::default();
        for name in ["f2", "zmod-4", "zmod-6", "f2xf2", "ut2-f2", "end-ut2-module"] {
            let report = run_fixture(find(name).unwrap(), &caps).unwrap();
            let failures: Vec<String> = report.theorems.iter().filter(|c| c.failed()).map(|c| c.to_string()).collect();
            assert!(failures.is_empty(), "{name}: {failures:?}");
        }
    }
}
