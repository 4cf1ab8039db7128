//! Metric realization of combinatorial tilings on the unit sphere and
//! geometry export.
//!
//! Faces are placed breadth-first: the first face's first vertex sits at
//! the north pole with its first edge in the x–z plane; each further face
//! is propagated across a glued edge by walking its corner angles and edge
//! lengths. Whenever a vertex is reached along several paths, the position
//! disagreement is recorded; the maximum is the closure defect. A protoset
//! whose angle data cannot be realized produces a large defect and a
//! [`Error::ClosureFailure`].

use crate::catalog::Protoset;
use crate::error::{Error, Result};
use crate::tiling::{tiling_to_json, CombinatorialTiling, Side};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::f64::consts::PI;

type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn axpy(s: f64, x: Vec3, y: Vec3) -> Vec3 {
    [s * x[0] + y[0], s * x[1] + y[1], s * x[2] + y[2]]
}

fn scale(s: f64, x: Vec3) -> Vec3 {
    [s * x[0], s * x[1], s * x[2]]
}

fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: Vec3) -> Vec3 {
    scale(1.0 / norm(a), a)
}

/// Unit tangent at `p` pointing along the great circle toward `q`.
fn tangent_towards(p: Vec3, q: Vec3) -> Vec3 {
    normalize(axpy(-dot(p, q), p, q))
}

/// Point at arc length `s` from `p` in tangent direction `v`.
fn geodesic(p: Vec3, v: Vec3, s: f64) -> Vec3 {
    normalize(axpy(s.cos(), p, scale(s.sin(), v)))
}

/// Rotates tangent `v` at `p` by `phi` counterclockwise as seen from
/// outside the sphere.
fn rotate_tangent(p: Vec3, v: Vec3, phi: f64) -> Vec3 {
    axpy(phi.cos(), v, scale(phi.sin(), cross(p, v)))
}

/// A realized tiling: one unit vector per vertex.
#[derive(Debug, Clone)]
pub struct SphericalEmbedding {
    pub positions: Vec<Vec3>,
    /// Vertex id of each corner.
    pub vertex_of: Vec<Vec<usize>>,
    /// Maximum position disagreement among paths to the same vertex.
    pub closure_defect: f64,
    /// Maximum deviation of a glued edge's arc length from `a`.
    pub max_edge_error: f64,
    /// Maximum deviation of a realized corner angle from its label's value.
    pub max_angle_error: f64,
    tiling: CombinatorialTiling,
    angles: (f64, f64, f64),
    edge: f64,
}

impl SphericalEmbedding {
    pub fn tiling(&self) -> &CombinatorialTiling {
        &self.tiling
    }

    /// Spherical area of face `f` by angle excess of its realized corners.
    pub fn face_area(&self, f: usize) -> f64 {
        let n = self.tiling.face_kind(f).side_count();
        let mut sum = 0.0;
        for i in 0..n {
            let p = self.positions[self.vertex_of[f][i]];
            let prev = self.positions[self.vertex_of[f][(i + n - 1) % n]];
            let next = self.positions[self.vertex_of[f][(i + 1) % n]];
            sum += dot(tangent_towards(p, prev), tangent_towards(p, next))
                .clamp(-1.0, 1.0)
                .acos();
        }
        sum - (n as f64 - 2.0) * PI
    }

    /// Sum of all face areas; `4π` for a consistent realization.
    pub fn total_area(&self) -> f64 {
        (0..self.tiling.face_count()).map(|f| self.face_area(f)).sum()
    }
}

/// Realizes `t` with the metric data of `p`; fails with
/// [`Error::ClosureFailure`] when vertices reached along different paths
/// disagree by more than `tol`.
pub fn realize(t: &CombinatorialTiling, p: &Protoset, tol: f64) -> Result<SphericalEmbedding> {
    let cycles = t.vertices()?;
    let nv = cycles.len();
    let mut vertex_of: Vec<Vec<usize>> = t
        .faces()
        .iter()
        .map(|k| vec![usize::MAX; k.side_count()])
        .collect();
    for (vid, cycle) in cycles.iter().enumerate() {
        for c in cycle {
            vertex_of[c.face][c.idx] = vid;
        }
    }
    let a = p.a.a;
    let angle_of = |s: Side| t.corner_label(s).angle(&p.angles);
    let mut positions: Vec<Option<Vec3>> = vec![None; nv];
    let mut defect = 0.0f64;
    let record = |vid: usize, pos: Vec3, positions: &mut Vec<Option<Vec3>>, defect: &mut f64| {
        match positions[vid] {
            None => positions[vid] = Some(pos),
            Some(old) => {
                let d = norm([pos[0] - old[0], pos[1] - old[1], pos[2] - old[2]]);
                if d > *defect {
                    *defect = d;
                }
            }
        }
    };
    // seed: face 0, corner 0 at the north pole, first edge in the x–z plane
    record(vertex_of[0][0], [0.0, 0.0, 1.0], &mut positions, &mut defect);
    record(
        vertex_of[0][1],
        [a.sin(), 0.0, a.cos()],
        &mut positions,
        &mut defect,
    );
    let mut placed = vec![false; t.face_count()];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    queue.push_back((0, 0));
    while let Some((f, i)) = queue.pop_front() {
        if placed[f] {
            continue;
        }
        placed[f] = true;
        let n = t.face_kind(f).side_count();
        // positions of corners i and i+1 are known; walk the rest
        let mut pts = vec![[0.0; 3]; n];
        pts[i] = positions[vertex_of[f][i]].expect("entry corner placed");
        pts[(i + 1) % n] = positions[vertex_of[f][(i + 1) % n]].expect("entry corner placed");
        for k in 2..n {
            let prev = (i + k - 2) % n;
            let here = (i + k - 1) % n;
            let next = (i + k) % n;
            let back = tangent_towards(pts[here], pts[prev]);
            // counterclockwise faces: the next edge is the incoming one
            // rotated clockwise by the interior angle
            let dir = rotate_tangent(pts[here], back, -angle_of(Side::new(f, here)));
            pts[next] = geodesic(pts[here], dir, a);
            record(vertex_of[f][next], pts[next], &mut positions, &mut defect);
        }
        for k in 0..n {
            if let Some(partner) = t.partner(Side::new(f, k)) {
                if !placed[partner.face] {
                    queue.push_back((partner.face, partner.idx));
                }
            }
        }
    }
    if defect > tol {
        return Err(Error::ClosureFailure { defect, tol });
    }
    let positions: Vec<Vec3> = positions
        .into_iter()
        .map(|p| p.expect("connected map places every vertex"))
        .collect();
    let mut emb = SphericalEmbedding {
        positions,
        vertex_of,
        closure_defect: defect,
        max_edge_error: 0.0,
        max_angle_error: 0.0,
        tiling: t.clone(),
        angles: (p.angles.alpha, p.angles.beta, p.angles.gamma),
        edge: a,
    };
    for (s, _) in t.gluing_pairs() {
        let pa = emb.positions[emb.vertex_of[s.face][s.idx]];
        let n = t.face_kind(s.face).side_count();
        let pb = emb.positions[emb.vertex_of[s.face][(s.idx + 1) % n]];
        let len = dot(pa, pb).clamp(-1.0, 1.0).acos();
        emb.max_edge_error = emb.max_edge_error.max((len - a).abs());
    }
    for f in 0..t.face_count() {
        let n = t.face_kind(f).side_count();
        for i in 0..n {
            let p0 = emb.positions[emb.vertex_of[f][i]];
            let prev = emb.positions[emb.vertex_of[f][(i + n - 1) % n]];
            let next = emb.positions[emb.vertex_of[f][(i + 1) % n]];
            let ang = dot(tangent_towards(p0, prev), tangent_towards(p0, next))
                .clamp(-1.0, 1.0)
                .acos();
            emb.max_angle_error = emb
                .max_angle_error
                .max((ang - angle_of(Side::new(f, i))).abs());
        }
    }
    Ok(emb)
}

/// Whether `t` admits a consistent metric realization with `p`'s data.
pub fn is_realizable(t: &CombinatorialTiling, p: &Protoset, tol: f64) -> bool {
    realize(t, p, tol).is_ok()
}

/// ASCII OBJ export: unit-vector vertices and polygon faces, deterministic
/// order, LF line endings, 17 significant digits.
pub fn export_obj(e: &SphericalEmbedding) -> String {
    let mut out = String::new();
    for p in &e.positions {
        out.push_str(&format!("v {:.16e} {:.16e} {:.16e}\n", p[0], p[1], p[2]));
    }
    for f in 0..e.tiling.face_count() {
        out.push('f');
        for i in 0..e.tiling.face_kind(f).side_count() {
            out.push_str(&format!(" {}", e.vertex_of[f][i] + 1));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct EmbeddingDoc {
    schema: String,
    tiling: serde_json::Value,
    positions: Vec<Vec3>,
    protoset: ProtosetDoc,
}

#[derive(Serialize, Deserialize)]
struct ProtosetDoc {
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
}

pub const EMBEDDING_SCHEMA: &str = "embedding/1";

/// JSON export: positions plus the combinatorics in the tiling schema.
pub fn export_json(e: &SphericalEmbedding, id: Option<&str>) -> String {
    let tiling_doc: serde_json::Value =
        serde_json::from_str(&tiling_to_json(&e.tiling, id)).expect("tiling JSON parses");
    let doc = EmbeddingDoc {
        schema: EMBEDDING_SCHEMA.into(),
        tiling: tiling_doc,
        positions: e.positions.clone(),
        protoset: ProtosetDoc {
            alpha: e.angles.0,
            beta: e.angles.1,
            gamma: e.angles.2,
            a: e.edge,
        },
    };
    serde_json::to_string_pretty(&doc).expect("embedding document serializes")
}

/// Recovers the combinatorial tiling (and its id, if recorded) from an
/// embedding JSON document.
pub fn embedded_tiling_from_json(s: &str) -> Result<(CombinatorialTiling, Option<String>)> {
    let doc: EmbeddingDoc =
        serde_json::from_str(s).map_err(|e| Error::Schema(format!("embedding JSON: {e}")))?;
    if doc.schema != EMBEDDING_SCHEMA {
        return Err(Error::Schema(format!(
            "unsupported schema {:?}, expected {EMBEDDING_SCHEMA:?}",
            doc.schema
        )));
    }
    crate::tiling::tiling_from_json(&doc.tiling.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{icosahedral_protoset, prism_family};
    use crate::tiling::build_named;

    #[test]
    fn prism_realizes() {
        let t = build_named("prism").unwrap();
        let p = prism_family((1.0f64 / 8.0).acos()).unwrap();
        let e = realize(&t, &p, 1e-7).unwrap();
        assert!(e.closure_defect < 1e-9, "defect {}", e.closure_defect);
        assert!((e.total_area() - 4.0 * PI).abs() < 1e-8);
        assert!(e.max_edge_error < 1e-9);
        assert!(e.max_angle_error < 1e-7);
        let obj = export_obj(&e);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 6);
        assert_eq!(obj.lines().filter(|l| l.starts_with('f')).count(), 5);
    }

    #[test]
    fn icosahedron_realizes() {
        let t = build_named("icosahedron").unwrap();
        let p = icosahedral_protoset();
        let e = realize(&t, &p, 1e-7).unwrap();
        assert_eq!(e.positions.len(), 12);
        // every adjacent pair at distance a, inside the table window
        let a = p.a.a / PI;
        assert!((0.3524..0.3525).contains(&a));
        assert!(e.max_edge_error < 1e-9);
    }

    #[test]
    fn mismatched_pair_fails_closure() {
        let t = build_named("prism").unwrap();
        let p = icosahedral_protoset();
        match realize(&t, &p, 1e-7) {
            Err(Error::ClosureFailure { defect, .. }) => assert!(defect > 1e-3),
            other => panic!("expected closure failure, got {other:?}"),
        }
    }

    #[test]
    fn json_round_trip_preserves_canonical_form() {
        let t = build_named("prism").unwrap();
        let p = prism_family(1.5).unwrap();
        let e = realize(&t, &p, 1e-7).unwrap();
        let json = export_json(&e, Some("prism"));
        let (u, id) = embedded_tiling_from_json(&json).unwrap();
        assert_eq!(t.canonical_code(), u.canonical_code());
        assert_eq!(id.as_deref(), Some("prism"));
    }
}
