use serde::{Deserialize, Serialize};

use super::build::{corner_ring, matrix_ring, opposite_ring, pattern_ring, product_ring, zmod_capped};
use super::{validate_axioms, FiniteRing};
use crate::caps::DEFAULT_SIZE_CAP;
use crate::error::{Error, Result};

/// Tree-shaped description of a finite ring.
///
/// The serialized form is tagged by `"kind"` and rejects unknown fields:
///
/// ```
/// use summand::ring::RingDescriptor;
///
/// let d: RingDescriptor = serde_json::from_str(
///     r#"{"kind":"matrix","n":2,"base":{"kind":"zmod","n":2}}"#,
/// ).unwrap();
/// assert_eq!(summand::ring::construct(&d).unwrap().size(), 16);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", try_from = "RawDescriptor")]
pub enum RingDescriptor {
    Zmod {
        n: u32,
    },
    Table {
        size: usize,
        add: Vec<Vec<u32>>,
        mul: Vec<Vec<u32>>,
        zero: u32,
        one: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Matrix {
        n: usize,
        base: Box<RingDescriptor>,
    },
    Pattern {
        n: usize,
        base: Box<RingDescriptor>,
        mask: Vec<Vec<u8>>,
    },
    Product {
        factors: Vec<RingDescriptor>,
    },
    Corner {
        base: Box<RingDescriptor>,
        idempotent: u32,
    },
    Opposite {
        base: Box<RingDescriptor>,
    },
}

// Deserialization goes through one flat struct rather than the tagged enum:
// serde buffers tagged-enum content, which loses the position of errors in
// nested descriptors. A plain struct keeps `base.n`-style paths intact.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    kind: Kind,
    n: Option<u32>,
    size: Option<usize>,
    add: Option<Vec<Vec<u32>>>,
    mul: Option<Vec<Vec<u32>>>,
    zero: Option<u32>,
    one: Option<u32>,
    labels: Option<Vec<String>>,
    base: Option<Box<RingDescriptor>>,
    mask: Option<Vec<Vec<u8>>>,
    factors: Option<Vec<RingDescriptor>>,
    idempotent: Option<u32>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Zmod,
    Table,
    Matrix,
    Pattern,
    Product,
    Corner,
    Opposite,
}

impl TryFrom<RawDescriptor> for RingDescriptor {
    type Error = String;

    fn try_from(raw: RawDescriptor) -> std::result::Result<Self, String> {
        let RawDescriptor {
            kind,
            mut n,
            mut size,
            mut add,
            mut mul,
            mut zero,
            mut one,
            mut labels,
            mut base,
            mut mask,
            mut factors,
            mut idempotent,
        } = raw;
        let name = format!("{kind:?}").to_lowercase();
        macro_rules! take {
            ($field:ident) => {
                $field.take().ok_or_else(|| format!("missing field `{}` for kind `{name}`", stringify!($field)))?
            };
        }
        let desc = match kind {
            Kind::Zmod => RingDescriptor::Zmod { n: take!(n) },
            Kind::Table => RingDescriptor::Table {
                size: take!(size),
                add: take!(add),
                mul: take!(mul),
                zero: take!(zero),
                one: take!(one),
                labels: labels.take(),
            },
            Kind::Matrix => RingDescriptor::Matrix {
                n: take!(n) as usize,
                base: take!(base),
            },
            Kind::Pattern => RingDescriptor::Pattern {
                n: take!(n) as usize,
                base: take!(base),
                mask: take!(mask),
            },
            Kind::Product => RingDescriptor::Product { factors: take!(factors) },
            Kind::Corner => RingDescriptor::Corner {
                base: take!(base),
                idempotent: take!(idempotent),
            },
            Kind::Opposite => RingDescriptor::Opposite { base: take!(base) },
        };
        let leftover = [
            ("n", n.is_some()),
            ("size", size.is_some()),
            ("add", add.is_some()),
            ("mul", mul.is_some()),
            ("zero", zero.is_some()),
            ("one", one.is_some()),
            ("labels", labels.is_some()),
            ("base", base.is_some()),
            ("mask", mask.is_some()),
            ("factors", factors.is_some()),
            ("idempotent", idempotent.is_some()),
        ];
        match leftover.iter().find(|(_, present)| *present) {
            Some((field, _)) => Err(format!("field `{field}` does not apply to kind `{name}`")),
            None => Ok(desc),
        }
    }
}

pub fn construct(desc: &RingDescriptor) -> Result<FiniteRing> {
    construct_capped(desc, DEFAULT_SIZE_CAP)
}

/// Builds the described ring, refusing any intermediate ring larger than `cap`.
///
/// Descriptor errors carry the dotted path of the offending field, e.g.
/// `base.mask[0][2]`.
pub fn construct_capped(desc: &RingDescriptor, cap: usize) -> Result<FiniteRing> {
    build(desc, cap).map_err(|e| match e {
        Error::Descriptor { path, reason } if path.is_empty() => Error::Descriptor {
            path: "<root>".into(),
            reason,
        },
        other => other,
    })
}

fn nest(prefix: &str, e: Error) -> Error {
    match e {
        Error::Descriptor { path, reason } => Error::Descriptor {
            path: if path.is_empty() {
                prefix.to_string()
            } else if path.starts_with('[') {
                format!("{prefix}{path}")
            } else {
                format!("{prefix}.{path}")
            },
            reason,
        },
        other => other,
    }
}

fn build(desc: &RingDescriptor, cap: usize) -> Result<FiniteRing> {
    let ring = match desc {
        RingDescriptor::Zmod { n } => zmod_capped(*n, cap)?,
        RingDescriptor::Table {
            size,
            add,
            mul,
            zero,
            one,
            labels,
        } => {
            let size = *size;
            if size == 0 {
                return Err(Error::Descriptor {
                    path: "size".into(),
                    reason: "must be at least 1".into(),
                });
            }
            if size > cap {
                return Err(Error::SizeCap { what: "table ring", size: size as u128, cap });
            }
            let flat = |name: &str, t: &[Vec<u32>]| -> Result<Vec<u32>> {
                if t.len() != size {
                    return Err(Error::Descriptor {
                        path: name.into(),
                        reason: format!("expected {size} rows, got {}", t.len()),
                    });
                }
                for (i, row) in t.iter().enumerate() {
                    if row.len() != size {
                        return Err(Error::Descriptor {
                            path: format!("{name}[{i}]"),
                            reason: format!("expected {size} entries, got {}", row.len()),
                        });
                    }
                    if let Some(j) = row.iter().position(|&x| x as usize >= size) {
                        return Err(Error::Descriptor {
                            path: format!("{name}[{i}][{j}]"),
                            reason: format!("entry {} is not below size {size}", row[j]),
                        });
                    }
                }
                Ok(t.concat())
            };
            for (name, v) in [("zero", *zero), ("one", *one)] {
                if v as usize >= size {
                    return Err(Error::Descriptor {
                        path: name.into(),
                        reason: format!("index {v} is not below size {size}"),
                    });
                }
            }
            if let Some(l) = labels {
                if l.len() != size {
                    return Err(Error::Descriptor {
                        path: "labels".into(),
                        reason: format!("expected {size} labels, got {}", l.len()),
                    });
                }
            }
            let ring = FiniteRing::assemble(
                size,
                flat("add", add)?,
                flat("mul", mul)?,
                *zero as usize,
                *one as usize,
                desc.clone(),
                labels.clone(),
            )?;
            let report = validate_axioms(&ring);
            if !report.passed {
                return Err(Error::NotARing(report));
            }
            ring
        }
        RingDescriptor::Matrix { n, base } => {
            let base = build(base, cap).map_err(|e| nest("base", e))?;
            matrix_ring(&base, *n, cap)?
        }
        RingDescriptor::Pattern { n, base, mask } => {
            let base = build(base, cap).map_err(|e| nest("base", e))?;
            pattern_ring(&base, *n, mask, cap)?
        }
        RingDescriptor::Product { factors } => {
            let built = factors
                .iter()
                .enumerate()
                .map(|(i, f)| build(f, cap).map_err(|e| nest(&format!("factors[{i}]"), e)))
                .collect::<Result<Vec<_>>>()?;
            product_ring(&built, cap)?
        }
        RingDescriptor::Corner { base, idempotent } => {
            let base_ring = build(base, cap).map_err(|e| nest("base", e))?;
            let e = base_ring.elem(*idempotent as usize).map_err(|_| Error::Descriptor {
                path: "idempotent".into(),
                reason: format!("index {idempotent} is not below size {}", base_ring.size()),
            })?;
            if !base_ring.is_idempotent(e) {
                return Err(Error::Descriptor {
                    path: "idempotent".into(),
                    reason: format!("element {idempotent} is not idempotent"),
                });
            }
            corner_ring(&base_ring, e)?.ring
        }
        RingDescriptor::Opposite { base } => {
            let base = build(base, cap).map_err(|e| nest("base", e))?;
            opposite_ring(&base)
        }
    };
    debug_assert_eq!(ring.descriptor(), desc);
    Ok(ring)
}
