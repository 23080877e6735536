//! Arc literals (`1-6`, `d3r`) and the JSON set document.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::polygon::{is_m_arc, ArcUniverse, Color, PairedArc};
use crate::arcset::ArcSet;

fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn parse_vertex(params: &ModelParams, token: &str, part: &str) -> Result<u32> {
    let v: u32 = part
        .trim()
        .parse()
        .map_err(|_| parse_err(token, format!("`{part}` is not a vertex number")))?;
    if v == 0 || v > params.vertex_count() {
        return Err(parse_err(
            token,
            format!("vertex {v} is outside 1..={}", params.vertex_count()),
        ));
    }
    Ok(v)
}

/// Parses `a-b` (any representative of the orbit, in either order) or
/// `dIr` / `dIg` with `1 <= I <= N`.
pub fn parse_arc_literal(params: &ModelParams, text: &str) -> Result<PairedArc> {
    let token = text.trim();
    if token.is_empty() {
        return Err(parse_err(text, "empty arc literal"));
    }
    let arc = if let Some(body) = token.strip_prefix('d') {
        let (num, color) = match body.chars().last() {
            Some('r') => (&body[..body.len() - 1], Color::Red),
            Some('g') => (&body[..body.len() - 1], Color::Green),
            _ => return Err(parse_err(token, "a diameter must end in `r` or `g`")),
        };
        let i: u32 = num
            .parse()
            .map_err(|_| parse_err(token, format!("`{num}` is not a vertex number")))?;
        if i == 0 || i > params.big_n() {
            return Err(parse_err(
                token,
                format!("diameter base {i} is outside 1..={}", params.big_n()),
            ));
        }
        PairedArc::Diameter { i, color }
    } else {
        let (x, y) = token
            .split_once('-')
            .ok_or_else(|| parse_err(token, "expected `a-b`, `dIr` or `dIg`"))?;
        let (x, y) = (parse_vertex(params, token, x)?, parse_vertex(params, token, y)?);
        PairedArc::chord(params, x as i64, y as i64).map_err(|e| match e {
            Error::InvalidParameters(reason) => parse_err(token, reason),
            other => other,
        })?
    };
    if !is_m_arc(params, &arc) {
        return Err(parse_err(token, format!("not an m-arc for m = {}", params.m())));
    }
    Ok(arc)
}

/// Comma-separated arc literals; blank input is the empty set.
pub fn parse_arc_list(params: &ModelParams, text: &str) -> Result<Vec<PairedArc>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_arc_literal(params, t))
        .collect()
}

/// `{"n":…,"m":…,"arcs":[…]}`. Unknown fields are ignored, so reports that
/// embed a set can be read back as input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDocument {
    pub n: u32,
    pub m: u32,
    pub arcs: Vec<PairedArc>,
}

impl SetDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: SetDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            token: "set document".into(),
            reason: e.to_string(),
        })?;
        let params = ModelParams::new(doc.n, doc.m)?;
        for arc in &doc.arcs {
            if !arc.is_canonical(&params) || !is_m_arc(&params, arc) {
                return Err(parse_err(&arc.to_string(), "not a canonical m-arc of this model"));
            }
        }
        Ok(doc)
    }
}

/// `{a-b,dIr,…}` in index order.
pub fn format_set(universe: &ArcUniverse, set: &ArcSet) -> String {
    let names: Vec<String> = set.arcs(universe).map(|a| a.to_string()).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, m: u32) -> ModelParams {
        ModelParams::new(n, m).unwrap()
    }

    #[test]
    fn literal_examples() {
        let q = p(4, 2);
        assert_eq!(parse_arc_literal(&q, "1-6").unwrap(), PairedArc::NonDiameter { a: 1, b: 6 });
        assert_eq!(parse_arc_literal(&q, "8-13").unwrap(), PairedArc::NonDiameter { a: 1, b: 6 });
        assert_eq!(parse_arc_literal(&q, "2-13").unwrap(), PairedArc::NonDiameter { a: 6, b: 9 });
        let q = p(4, 3);
        assert_eq!(
            parse_arc_literal(&q, "d1r").unwrap(),
            PairedArc::Diameter { i: 1, color: Color::Red }
        );
        assert_eq!(
            parse_arc_literal(&q, " d10g ").unwrap(),
            PairedArc::Diameter { i: 10, color: Color::Green }
        );
    }

    #[test]
    fn literal_errors_name_the_token() {
        let q = p(4, 3);
        for bad in ["1-4", "1-2", "0-5", "1-21", "d0r", "d11r", "d1x", "x", "1-11", "-"] {
            match parse_arc_literal(&q, bad) {
                Err(Error::Parse { token, .. }) => assert_eq!(token, bad),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn literals_round_trip() {
        for (n, m) in [(3, 1), (4, 2), (4, 3), (5, 3)] {
            let q = p(n, m);
            for arc in crate::polygon::enumerate_m_arcs(&q) {
                assert_eq!(parse_arc_literal(&q, &arc.to_string()).unwrap(), arc);
            }
        }
    }

    #[test]
    fn document_ignores_extra_fields_and_rejects_bad_arcs() {
        let doc = SetDocument::parse(
            r#"{"n":4,"m":3,"arcs":[{"type":"arc","a":1,"b":5},{"type":"diameter","i":2,"color":"green"}],"ptolemy":true}"#,
        )
        .unwrap();
        assert_eq!(doc.arcs.len(), 2);
        assert!(SetDocument::parse(r#"{"n":4,"m":3,"arcs":[{"type":"arc","a":1,"b":4}]}"#).is_err());
        assert!(SetDocument::parse(r#"{"n":4,"m":3,"arcs":[{"type":"arc","a":11,"b":15}]}"#).is_err());
        assert!(SetDocument::parse("not json").is_err());
    }
}
