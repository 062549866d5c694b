//! The structure-constant file format.
//!
//! ```text
//! {
//!   "name": "sl2",
//!   "dim": 3,
//!   "brackets": [
//!     [1, 2, [[3, "1"]]],
//!     [1, 3, [[1, "-2"]]],
//!     [2, 3, [[2, "2"]]]
//!   ]
//! }
//! ```
//!
//! Indices are 1-based. `[i, j, coeffs]` lists `[e_i, e_j]` for `i < j`;
//! omitted pairs bracket to zero.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::path::Path;

use liecoh_core::lie::{LieAlgebra, ValidationReport};
use liecoh_core::rational::{parse_canonical, to_canonical, zero, Rational};
use num_traits::Zero;
use serde::de::{self, DeserializeSeed, IgnoredAny, MapAccess, SeqAccess, Visitor};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("Jacobi violation: {}", describe(.0))]
    JacobiViolation(ValidationReport),
}

fn describe(report: &ValidationReport) -> String {
    report.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        let text = e.to_string();
        // serde_json appends " at line L column C" to every message
        let message = match text.rfind(" at line ") {
            Some(at) => text[..at].to_string(),
            None => text,
        };
        FileError::Parse { line: e.line(), column: e.column(), message }
    }
}

#[derive(Deserialize)]
struct Header {
    dim: usize,
}

type Brackets = Vec<((usize, usize), Vec<Rational>)>;

struct Document {
    dim: usize,
}

struct Parsed {
    name: String,
    brackets: Brackets,
}

impl<'de> DeserializeSeed<'de> for Document {
    type Value = Parsed;

    fn deserialize<D: de::Deserializer<'de>>(self, d: D) -> Result<Parsed, D::Error> {
        d.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for Document {
    type Value = Parsed;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object with name, dim and brackets")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Parsed, A::Error> {
        let (mut name, mut dim_seen, mut brackets) = (None, false, None);
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "name" if name.is_some() => return Err(de::Error::duplicate_field("name")),
                "dim" if dim_seen => return Err(de::Error::duplicate_field("dim")),
                "brackets" if brackets.is_some() => return Err(de::Error::duplicate_field("brackets")),
                "name" => name = Some(map.next_value::<String>()?),
                "dim" => {
                    map.next_value::<IgnoredAny>()?;
                    dim_seen = true;
                }
                "brackets" => brackets = Some(map.next_value_seed(BracketList { dim: self.dim })?),
                other => return Err(de::Error::unknown_field(other, &["name", "dim", "brackets"])),
            }
        }
        let name = name.ok_or_else(|| de::Error::missing_field("name"))?;
        let brackets = brackets.ok_or_else(|| de::Error::missing_field("brackets"))?;
        Ok(Parsed { name, brackets })
    }
}

struct BracketList {
    dim: usize,
}

impl<'de> DeserializeSeed<'de> for BracketList {
    type Value = Brackets;

    fn deserialize<D: de::Deserializer<'de>>(self, d: D) -> Result<Brackets, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for BracketList {
    type Value = Brackets;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of [i, j, coeffs] triples")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Brackets, A::Error> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        while let Some(bracket) = seq.next_element_seed(Bracket { dim: self.dim, seen: &mut seen })? {
            out.push(bracket);
        }
        Ok(out)
    }
}

struct Bracket<'a> {
    dim: usize,
    seen: &'a mut BTreeSet<(usize, usize)>,
}

fn index<E: de::Error>(raw: usize, dim: usize, what: &str) -> Result<usize, E> {
    if raw == 0 || raw > dim {
        return Err(E::custom(format!("{what} index {raw} is outside 1..={dim}")));
    }
    Ok(raw - 1)
}

impl<'de> DeserializeSeed<'de> for Bracket<'_> {
    type Value = ((usize, usize), Vec<Rational>);

    fn deserialize<D: de::Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for Bracket<'_> {
    type Value = ((usize, usize), Vec<Rational>);

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a triple [i, j, coeffs]")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let i: usize = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let i = index(i, self.dim, "bracket")?;
        let j: usize = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
        let j = index(j, self.dim, "bracket")?;
        if i >= j {
            return Err(de::Error::custom(format!("bracket [{}, {}] must have i < j", i + 1, j + 1)));
        }
        if !self.seen.insert((i, j)) {
            return Err(de::Error::custom(format!("bracket [{}, {}] is given twice", i + 1, j + 1)));
        }
        let coeffs = seq
            .next_element_seed(Coefficients { dim: self.dim })?
            .ok_or_else(|| de::Error::invalid_length(2, &self))?;
        if seq.next_element::<IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(4, &self));
        }
        Ok(((i, j), coeffs))
    }
}

struct Coefficients {
    dim: usize,
}

impl<'de> DeserializeSeed<'de> for Coefficients {
    type Value = Vec<Rational>;

    fn deserialize<D: de::Deserializer<'de>>(self, d: D) -> Result<Vec<Rational>, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for Coefficients {
    type Value = Vec<Rational>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of [k, \"p/q\"] pairs")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<Rational>, A::Error> {
        let mut dense = vec![zero(); self.dim];
        let mut seen = BTreeSet::new();
        while let Some((k, text)) = seq.next_element::<(usize, String)>()? {
            let k = index(k, self.dim, "coefficient")?;
            if !seen.insert(k) {
                return Err(de::Error::custom(format!("coefficient index {} is given twice", k + 1)));
            }
            dense[k] = parse_canonical(&text).map_err(de::Error::custom)?;
        }
        Ok(dense)
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<LieAlgebra, FileError> {
    let Header { dim } = serde_json::from_str(text)?;
    let mut de = serde_json::Deserializer::from_str(text);
    let parsed = Document { dim }.deserialize(&mut de)?;
    de.end()?;
    LieAlgebra::new(parsed.name, dim, parsed.brackets).map_err(FileError::JacobiViolation)
}

pub fn load(path: &Path) -> Result<LieAlgebra, FileError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

/// The canonical text of `g`: brackets sorted by `(i, j)`, coefficients by
/// `k`, one bracket per line.
pub fn to_text(g: &LieAlgebra) -> String {
    let name = serde_json::to_string(g.name()).expect("strings serialize");
    let mut out = format!("{{\n  \"name\": {name},\n  \"dim\": {},\n  \"brackets\": [", g.dim());
    let lines: Vec<String> = g
        .nonzero_brackets()
        .map(|((i, j), coeffs)| {
            let pairs: Vec<String> = coeffs
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("[{}, \"{}\"]", k + 1, to_canonical(c)))
                .collect();
            format!("    [{}, {}, [{}]]", i + 1, j + 1, pairs.join(", "))
        })
        .collect();
    if lines.is_empty() {
        out.push_str("]\n}\n");
    } else {
        let _ = write!(out, "\n{}\n  ]\n}}\n", lines.join(",\n"));
    }
    out
}

pub fn save(g: &LieAlgebra, path: &Path) -> Result<(), FileError> {
    std::fs::write(path, to_text(g)).map_err(|source| FileError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use liecoh_core::sl2::sl2;

    #[test]
    fn sl2_text_is_stable() {
        let text = to_text(&sl2());
        assert_eq!(
            text,
            "{\n  \"name\": \"sl2\",\n  \"dim\": 3,\n  \"brackets\": [\n    [1, 2, [[3, \"1\"]]],\n    [1, 3, [[1, \"-2\"]]],\n    [2, 3, [[2, \"2\"]]]\n  ]\n}\n"
        );
        assert_eq!(parse(&text).unwrap(), sl2());
    }

    #[test]
    fn abelian_has_empty_list() {
        let text = to_text(&LieAlgebra::abelian(2));
        assert!(text.contains("\"brackets\": []"));
        assert_eq!(parse(&text).unwrap(), LieAlgebra::abelian(2));
    }

    #[test]
    fn positions_point_at_the_offending_bracket() {
        let text = "{\"name\": \"x\", \"dim\": 2,\n \"brackets\": [\n  [1, 3, []]\n ]}";
        match parse(text) {
            Err(FileError::Parse { line, message, .. }) => {
                assert_eq!(line, 3);
                assert!(message.contains("outside 1..=2"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn field_order_is_free() {
        let text = r#"{"brackets": [[1, 2, [[2, "1/2"]]]], "dim": 2, "name": "b"}"#;
        let g = parse(text).unwrap();
        assert_eq!(g.dim(), 2);
        assert!(to_text(&g).contains("[2, \"1/2\"]"));
    }

    #[test]
    fn malformed_documents() {
        let cases = [
            r#"{"name": "x", "dim": 2, "brackets": [[2, 1, []]]}"#,
            r#"{"name": "x", "dim": 2, "brackets": [[1, 2, []], [1, 2, []]]}"#,
            r#"{"name": "x", "dim": 2, "brackets": [[1, 2, [[1, "2/4"]]]]}"#,
            r#"{"name": "x", "dim": 2, "brackets": [[1, 2, [[1, "1"], [1, "1"]]]]}"#,
            r#"{"name": "x", "dim": 2, "brackets": [[1, 2, [[0, "1"]]]]}"#,
            r#"{"name": "x", "dim": 2, "brackets": [], "extra": 1}"#,
            r#"{"name": "x", "brackets": []}"#,
            r#"{"name": "x", "dim": 2, "brackets": []} trailing"#,
        ];
        for text in cases {
            assert!(matches!(parse(text), Err(FileError::Parse { .. })), "{text}");
        }
    }

    #[test]
    fn unicode_minus_is_read() {
        let text = "{\"name\": \"x\", \"dim\": 2, \"brackets\": [[1, 2, [[2, \"\u{2212}1\"]]]]}";
        let g = parse(text).unwrap();
        assert!(to_text(&g).contains("\"-1\""));
    }
}
