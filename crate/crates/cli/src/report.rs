//! The report document and its two renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use summand::ideal::idempotents;
use summand::props::{CheckRecord, Method, Property, PropertyVerdict, Witness};
use summand::ring::RingDescriptor;
use summand::{Caps, Elem, ElemSet, FiniteRing, Side};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct RingSummary {
    pub source: String,
    pub descriptor: RingDescriptor,
    pub size: usize,
    pub idempotents: usize,
    pub commutative: bool,
}

impl RingSummary {
    pub fn new(source: &str, ring: &FiniteRing) -> Self {
        RingSummary {
            source: source.to_string(),
            descriptor: ring.descriptor().clone(),
            size: ring.size(),
            idempotents: idempotents(ring).len(),
            commutative: ring.is_commutative(),
        }
    }
}

/// An element by index and by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElemRef {
    pub index: usize,
    pub label: String,
}

impl ElemRef {
    pub fn new(ring: &FiniteRing, e: Elem) -> Self {
        ElemRef {
            index: e.index(),
            label: ring.label(e).to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessView {
    Element { element: ElemRef },
    Pair { first: ElemRef, second: ElemRef },
    Commutator { idempotent: ElemRef, element: ElemRef },
    NonSummandCopy { ideal: Vec<ElemRef>, idempotent: ElemRef },
    /// Module witnesses: indices into the module carrier.
    Summands { first: Vec<usize>, second: Vec<usize> },
    SubmoduleCopy { submodule: Vec<usize>, summand: Vec<usize> },
}

impl WitnessView {
    pub fn new(ring: &FiniteRing, w: &Witness) -> Self {
        let r = |e: Elem| ElemRef::new(ring, e);
        let set = |s: &ElemSet| {
            s.iter()
                .map(|index| ElemRef {
                    index,
                    label: ring.labels()[index].clone(),
                })
                .collect()
        };
        match w {
            Witness::Element(a) => WitnessView::Element { element: r(*a) },
            Witness::Pair(e, f) => WitnessView::Pair { first: r(*e), second: r(*f) },
            Witness::Commutator { idempotent, element } => WitnessView::Commutator {
                idempotent: r(*idempotent),
                element: r(*element),
            },
            Witness::NonSummandCopy { ideal, idempotent } => WitnessView::NonSummandCopy {
                ideal: set(ideal),
                idempotent: r(*idempotent),
            },
            Witness::Summands(a, b) => WitnessView::Summands {
                first: a.to_vec(),
                second: b.to_vec(),
            },
            Witness::SubmoduleCopy { submodule, summand } => WitnessView::SubmoduleCopy {
                submodule: submodule.to_vec(),
                summand: summand.to_vec(),
            },
        }
    }
}

impl std::fmt::Display for WitnessView {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels = |xs: &[ElemRef]| xs.iter().map(|x| x.label.as_str()).collect::<Vec<_>>().join(", ");
        match self {
            WitnessView::Element { element } => write!(f, "{} (#{})", element.label, element.index),
            WitnessView::Pair { first, second } => write!(
                f,
                "({}, {}) (#{}, #{})",
                first.label, second.label, first.index, second.index
            ),
            WitnessView::Commutator { idempotent, element } => {
                write!(f, "{} does not commute with {}", idempotent.label, element.label)
            }
            WitnessView::NonSummandCopy { ideal, idempotent } => {
                write!(f, "{{{}}} is a copy of the summand of {}", labels(ideal), idempotent.label)
            }
            WitnessView::Summands { first, second } => write!(f, "{first:?}, {second:?}"),
            WitnessView::SubmoduleCopy { submodule, summand } => write!(f, "{submodule:?} copies {summand:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictView {
    pub property: Property,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    pub method: Method,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessView>,
    /// Whether the witness still fails when its single instance is re-checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_refails: Option<bool>,
}

impl VerdictView {
    pub fn new(ring: &FiniteRing, v: &PropertyVerdict, refails: Option<bool>) -> Self {
        VerdictView {
            property: v.property,
            side: v.side,
            method: v.method,
            holds: v.holds,
            witness: v.witness.as_ref().map(|w| WitnessView::new(ring, w)),
            witness_refails: refails,
        }
    }
}

/// Everything a command produced. Two runs of the same request serialize
/// identically apart from `timings`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub ring: RingSummary,
    pub verdicts: Vec<VerdictView>,
    pub theorems: Vec<CheckRecord>,
    /// Milliseconds per step, keyed by step name.
    pub timings: BTreeMap<String, f64>,
    pub caps: Caps,
    pub version: &'static str,
}

impl Report {
    pub fn new(ring: RingSummary, caps: Caps) -> Self {
        Report {
            ring,
            verdicts: Vec::new(),
            theorems: Vec::new(),
            timings: BTreeMap::new(),
            caps,
            version: VERSION,
        }
    }

    pub fn time(&mut self, step: impl Into<String>, elapsed: Duration) {
        let ms = (elapsed.as_secs_f64() * 1e6).round() / 1e3;
        self.timings.insert(step.into(), ms);
    }

    pub fn verdicts_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    /// No check failed; skipped checks do not count.
    pub fn checks_passed(&self) -> bool {
        !self.theorems.iter().any(CheckRecord::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let r = &self.ring;
        let _ = writeln!(out, "# {}\n", r.source);
        let _ = writeln!(
            out,
            "{} elements, {} idempotents, {}commutative\n",
            r.size,
            r.idempotents,
            if r.commutative { "" } else { "not " }
        );
        let _ = writeln!(
            out,
            "descriptor: `{}`\n",
            serde_json::to_string(&r.descriptor).expect("descriptor serializes")
        );
        if !self.verdicts.is_empty() {
            out.push_str("## Verdicts\n\n| property | side | method | holds | witness |\n|---|---|---|---|---|\n");
            for v in &self.verdicts {
                let method = serde_json::to_value(v.method).expect("method serializes");
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    v.property.as_str(),
                    v.side.map(Side::as_str).unwrap_or("-"),
                    method.as_str().unwrap_or("?"),
                    v.holds,
                    v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
                );
            }
            out.push('\n');
        }
        if !self.theorems.is_empty() {
            let failed = self.theorems.iter().filter(|c| c.failed()).count();
            let skipped = self.theorems.iter().filter(|c| !c.passed() && !c.failed()).count();
            let _ = writeln!(
                out,
                "## Checks\n\n{} checks, {failed} failed, {skipped} skipped\n",
                self.theorems.len()
            );
            for c in &self.theorems {
                let _ = writeln!(out, "- {c}");
            }
            out.push('\n');
        }
        let c = &self.caps;
        let _ = writeln!(out, "caps: size {}, ideals {}, hom {}\n", c.size, c.ideals, c.hom);
        out.push_str("## Timings (ms)\n\n");
        for (step, ms) in &self.timings {
            let _ = writeln!(out, "- {step}: {ms}");
        }
        let _ = writeln!(out, "\nsummand {}", self.version);
        out
    }
}
