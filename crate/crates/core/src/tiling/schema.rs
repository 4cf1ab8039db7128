//! Versioned JSON serialization of combinatorial tilings (schema `tiling/1`).

use super::{CombinatorialTiling, FaceKind, Side};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const TILING_SCHEMA: &str = "tiling/1";

#[derive(Serialize, Deserialize)]
struct TilingDoc {
    schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    faces: Vec<String>,
    /// Each gluing once, as `[[f, i], [g, j]]` with the smaller side first.
    gluings: Vec<[[usize; 2]; 2]>,
}

/// Serializes a tiling (with an optional registry id) to pretty JSON.
pub fn tiling_to_json(t: &CombinatorialTiling, id: Option<&str>) -> String {
    let doc = TilingDoc {
        schema: TILING_SCHEMA.into(),
        id: id.map(str::to_owned),
        faces: t
            .faces()
            .iter()
            .map(|k| {
                match k {
                    FaceKind::Triangle => "triangle",
                    FaceKind::Rhombus => "rhombus",
                }
                .to_owned()
            })
            .collect(),
        gluings: t
            .gluing_pairs()
            .iter()
            .map(|(a, b)| [[a.face, a.idx], [b.face, b.idx]])
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("tiling document serializes")
}

/// Parses a `tiling/1` document; returns the tiling and its optional id.
pub fn tiling_from_json(s: &str) -> Result<(CombinatorialTiling, Option<String>)> {
    let doc: TilingDoc =
        serde_json::from_str(s).map_err(|e| Error::Schema(format!("tiling JSON: {e}")))?;
    if doc.schema != TILING_SCHEMA {
        return Err(Error::Schema(format!(
            "unsupported schema {:?}, expected {TILING_SCHEMA:?}",
            doc.schema
        )));
    }
    let faces = doc
        .faces
        .iter()
        .map(|k| match k.as_str() {
            "triangle" => Ok(FaceKind::Triangle),
            "rhombus" => Ok(FaceKind::Rhombus),
            other => Err(Error::Schema(format!("unknown face kind {other:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(Side, Side)> = doc
        .gluings
        .iter()
        .map(|[[f, i], [g, j]]| (Side::new(*f, *i), Side::new(*g, *j)))
        .collect();
    Ok((CombinatorialTiling::from_parts(faces, &pairs)?, doc.id))
}

/// Serializes many tilings as a JSON array of `tiling/1` documents.
pub fn tilings_to_json_array(entries: &[(String, CombinatorialTiling)]) -> String {
    let docs: Vec<String> = entries
        .iter()
        .map(|(id, t)| tiling_to_json(t, Some(id)))
        .collect();
    format!("[\n{}\n]\n", docs.join(",\n"))
}

/// Parses a JSON array of `tiling/1` documents; every entry must carry an id.
pub fn tilings_from_json_array(s: &str) -> Result<Vec<(String, CombinatorialTiling)>> {
    let docs: Vec<serde_json::Value> =
        serde_json::from_str(s).map_err(|e| Error::Schema(format!("tiling array JSON: {e}")))?;
    docs.iter()
        .map(|doc| {
            let (t, id) = tiling_from_json(&doc.to_string())?;
            let id = id.ok_or_else(|| Error::Schema("bundled tiling without id".into()))?;
            Ok((id, t))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = CombinatorialTiling::from_parts(
            vec![FaceKind::Triangle, FaceKind::Triangle],
            &[
                (Side::new(0, 0), Side::new(1, 2)),
                (Side::new(0, 1), Side::new(1, 1)),
                (Side::new(0, 2), Side::new(1, 0)),
            ],
        )
        .unwrap();
        let json = tiling_to_json(&t, Some("pillow"));
        let (u, id) = tiling_from_json(&json).unwrap();
        assert_eq!(t, u);
        assert_eq!(id.as_deref(), Some("pillow"));
    }

    #[test]
    fn bad_schema_rejected() {
        let json = r#"{"schema":"tiling/9","faces":[],"gluings":[]}"#;
        assert!(tiling_from_json(json).is_err());
    }
}
