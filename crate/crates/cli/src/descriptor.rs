//! Reading ring descriptors from text.

use std::path::Path;

use summand::ring::{construct_capped, RingDescriptor};
use summand::{Caps, FiniteRing};

use crate::error::InputError;
use crate::fixtures;

/// Parses one JSON descriptor document.
///
/// Malformed JSON is reported with its line and column; a well-formed
/// document with a wrong shape (unknown kind, unknown or missing field,
/// wrong type) additionally names the failing field path.
///
/// ```
/// use summand_cli::descriptor::parse_descriptor;
/// use summand_cli::InputError;
///
/// let err = parse_descriptor(r#"{"kind":"pattern","n":2,"base":{"kind":"zmod","m":2},"mask":[]}"#).unwrap_err();
/// assert!(matches!(err, InputError::Field { ref path, .. } if path == "base.m"));
/// ```
pub fn parse_descriptor(text: &str) -> Result<RingDescriptor, InputError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let desc = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            syntax(&inner)
        } else {
            InputError::Field {
                path: if path == "." { "<root>".into() } else { path },
                line: inner.line(),
                column: inner.column(),
                message: strip_position(&inner),
            }
        }
    })?;
    de.end().map_err(|e| syntax(&e))?;
    Ok(desc)
}

fn syntax(e: &serde_json::Error) -> InputError {
    InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(e),
    }
}

// serde_json appends " at line L column C" to its messages; we report those separately.
fn strip_position(e: &serde_json::Error) -> String {
    let full = e.to_string();
    match full.rfind(" at line ") {
        Some(i) => full[..i].to_string(),
        None => full,
    }
}

/// A ring together with where it came from.
#[derive(Debug, Clone)]
pub struct Loaded {
    /// Fixture name, file path, or `<inline>`.
    pub source: String,
    pub descriptor: RingDescriptor,
    pub ring: FiniteRing,
}

/// Resolves a `<source>` argument: inline JSON (starts with `{`), a fixture
/// name, or a path to a descriptor file, in that order.
pub fn load_source(source: &str, caps: &Caps) -> Result<Loaded, InputError> {
    let text = if source.trim_start().starts_with('{') {
        return load_text("<inline>", source, caps);
    } else if let Some(fx) = fixtures::find(source) {
        fx.descriptor.to_string()
    } else {
        std::fs::read_to_string(Path::new(source)).map_err(|e| InputError::Io {
            path: source.to_string(),
            source: e,
        })?
    };
    load_text(source, &text, caps)
}

/// Parses and builds; structural errors in the tables or masks come back
/// as [`summand::Error::Descriptor`] with the path of the failing field.
pub fn load_text(source: &str, text: &str, caps: &Caps) -> Result<Loaded, InputError> {
    let descriptor = parse_descriptor(text)?;
    let ring = construct_capped(&descriptor, caps.size)?;
    Ok(Loaded {
        source: source.to_string(),
        descriptor,
        ring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_descriptor("{\n  \"kind\": \"zmod\",\n  \"n\": 4,,\n}").unwrap_err();
        match err {
            InputError::Syntax { line, column, .. } => assert_eq!((line, column), (3, 10)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_descriptor(r#"{"kind":"zmod","n":4} x"#), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_descriptor(""), Err(InputError::Syntax { .. })));
    }

    #[test]
    fn shape_errors_carry_field_path() {
        let cases = [
            (r#"{"kind":"zmod","n":4,"extra":1}"#, "extra"),
            (r#"{"kind":"ring"}"#, "kind"),
            (r#"{"kind":"matrix","n":2,"base":{"kind":"zmod","n":-2}}"#, "base.n"),
            (
                r#"{"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod"}]}"#,
                "factors[1]",
            ),
        ];
        for (text, expected) in cases {
            match parse_descriptor(text) {
                Err(InputError::Field { path, .. }) => assert_eq!(path, expected, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn semantic_errors_carry_field_path() {
        let caps = Caps::default();
        let text = r#"{"kind":"opposite","base":{"kind":"pattern","n":2,"base":{"kind":"zmod","n":2},"mask":[[1,1],[1,0]]}}"#;
        match load_text("t", text, &caps) {
            Err(InputError::Ring(summand::Error::Descriptor { path, .. })) => assert!(path.starts_with("base.mask"), "{path}"),
            other => panic!("{other:?}"),
        }
        let zero = load_text("t", r#"{"kind":"zmod","n":0}"#, &caps).unwrap_err();
        assert!(matches!(zero, InputError::Ring(summand::Error::Descriptor { .. })), "{zero:?}");
    }

    #[test]
    fn sources_resolve() {
        let caps = Caps::default();
        assert_eq!(load_source("m2-f2", &caps).unwrap().ring.size(), 16);
        assert_eq!(load_source(r#" {"kind":"zmod","n":5}"#, &caps).unwrap().source, "<inline>");
        assert!(matches!(load_source("/no/such/file.json", &caps), Err(InputError::Io { .. })));
    }
}
