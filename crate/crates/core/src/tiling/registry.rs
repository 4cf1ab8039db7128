//! Named tilings: constructive generators for the infinite families and
//! the sporadic tilings of the classification.
//!
//! Small sporadic tilings ship as static JSON data embedded in the binary;
//! all are regenerated (and verified) by the enumeration engine from the
//! catalog's protoset and AVC data.

use super::builders::{build_antiprism, icosahedron};
use super::search::{search, SearchSpec};
use super::{merge_beta_gamma, CombinatorialTiling};
use crate::catalog::{cuboct_family, icosahedral_protoset, prism_family, sporadic, Protoset, TilingCount};
use crate::error::{Error, Result};
use crate::vertexcomb::{enumerate_vertex_types, Avc, VertexType};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::sync::Mutex;

/// Bundled sporadic tiling data, generated by the enumeration engine (see
/// the ignored `regenerate_bundled_data` test) and revalidated by tests.
static BUNDLED: Lazy<BTreeMap<String, CombinatorialTiling>> = Lazy::new(|| {
    super::schema::tilings_from_json_array(include_str!("../../data/sporadic_tilings.json"))
        .expect("bundled tiling data parses")
        .into_iter()
        .collect()
});

/// Canonical registry ids, smallest tilings first within each group.
pub fn registry_ids() -> Vec<String> {
    let mut ids = vec![
        "prism".to_string(),
        "cuboctahedron".to_string(),
        "orthobicupola".to_string(),
        "icosahedron".to_string(),
    ];
    for n in 3..=5 {
        ids.push(format!("antiprism-{n}"));
    }
    for (id, _) in sporadic_tiling_specs() {
        ids.push(id);
    }
    ids
}

/// How a sporadic tiling is produced: row id, AVC, collapse convention,
/// and which of the AVC's tilings (0-based) to take.
struct SporadicSpec {
    row: String,
    avc: Avc,
    collapse: bool,
    index: usize,
    /// Expected tiling count; `None` for AVCs whose count the
    /// classification leaves open.
    count: Option<usize>,
}

/// Sporadic registry entries: every catalog AVC with a known tiling count,
/// one id per tiling (`#2`, `#3`, … for rows with several).
fn sporadic_tiling_specs() -> Vec<(String, SporadicSpec)> {
    let mut out = Vec::new();
    for p in crate::catalog::all_sporadic().expect("catalog construction succeeds") {
        let crate::catalog::Family::Sporadic { id: row_id } = p.family.clone() else {
            continue;
        };
        let collapse = (p.angles.beta - p.angles.gamma).abs() < 1e-9;
        let mut row_index = 0usize;
        if row_id == "20,24.2" {
            // the flip family: register its k = 0 base tiling
            out.push((
                row_id.clone(),
                SporadicSpec {
                    row: row_id.clone(),
                    avc: crate::vertexcomb::avc(&[(1, 2, 0, 12), (2, 1, 2, 24)]),
                    collapse,
                    index: 0,
                    count: None,
                },
            ));
            continue;
        }
        for (avc, count) in &p.expected_avcs {
            let TilingCount::Known(c) = count else {
                continue;
            };
            for i in 0..*c as usize {
                let id = if row_index == 0 {
                    row_id.clone()
                } else {
                    format!("{row_id}#{}", row_index + 1)
                };
                out.push((
                    id,
                    SporadicSpec {
                        row: row_id.clone(),
                        avc: avc.clone(),
                        collapse,
                        index: i,
                        count: Some(*c as usize),
                    },
                ));
                row_index += 1;
            }
        }
    }
    out
}

/// Enumerates the tilings of one sporadic AVC with the engine.
fn enumerate_sporadic(p: &Protoset, spec: &SporadicSpec) -> Result<Vec<CombinatorialTiling>> {
    let counts = crate::counting::counts_from_avc(&spec.avc)?;
    let allowed: Vec<VertexType> = enumerate_vertex_types(&p.angles, 1e-6)
        .into_iter()
        .filter(|t| {
            if spec.collapse {
                let cls = VertexType::new(t.n1, t.n2 + t.n3, 0);
                merge_beta_gamma(&spec.avc).contains_key(&cls)
            } else {
                spec.avc.contains_key(t)
            }
        })
        .collect();
    let outcome = search(&SearchSpec {
        allowed,
        triangles: counts.f_triangle as usize,
        rhombi: counts.f_rhombus as usize,
        exact_avc: Some(spec.avc.clone()),
        collapse_beta_gamma: spec.collapse,
        max_results: 0,
    });
    if !outcome.exhausted {
        return Err(Error::BadTiling(format!(
            "enumeration for {} hit the node budget",
            spec.row
        )));
    }
    // a combinatorial map may satisfy the AVC yet admit no metric
    // realization; only realizable maps are tilings
    let tilings: Vec<CombinatorialTiling> = outcome
        .tilings
        .into_iter()
        .filter(|t| crate::geom::is_realizable(t, p, 1e-7))
        .collect();
    if let Some(count) = spec.count {
        if tilings.len() != count {
            return Err(Error::BadTiling(format!(
                "row {}: expected {} realizable tilings, found {}",
                spec.row,
                count,
                tilings.len()
            )));
        }
    }
    Ok(tilings)
}

fn build_sporadic(id: &str) -> Result<CombinatorialTiling> {
    if let Some(t) = BUNDLED.get(id) {
        return Ok(t.clone());
    }
    build_sporadic_fresh(id)
}

/// Enumerates a sporadic tiling from scratch, ignoring the bundled data.
fn build_sporadic_fresh(id: &str) -> Result<CombinatorialTiling> {
    let specs = sporadic_tiling_specs();
    let (_, spec) = specs
        .iter()
        .find(|(sid, _)| sid == id)
        .ok_or_else(|| Error::RegistryMiss(id.to_string()))?;
    let p = sporadic(&spec.row)?;
    let tilings = enumerate_sporadic(&p, spec)?;
    if spec.row == "20,24.2" {
        // the flip family's base: a k = 0 tiling that hosts a flip module
        return tilings
            .into_iter()
            .find(|t| {
                !super::flip::find_flip_sites(t, super::flip::FlipDirection::Forward).is_empty()
            })
            .ok_or_else(|| {
                Error::RegistryMiss(format!("{id}: no flippable k = 0 tiling found"))
            });
    }
    tilings.into_iter().nth(spec.index).ok_or_else(|| {
        Error::RegistryMiss(format!("{id}: enumeration found fewer tilings than expected"))
    })
}

fn normalize(id: &str) -> String {
    match id {
        "ico" | "icosahedral" | "20-2m,m" => "icosahedron".to_string(),
        "rational-4-3" => "4,3".to_string(),
        other => other.to_string(),
    }
}

static CACHE: Lazy<Mutex<BTreeMap<String, CombinatorialTiling>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

/// Builds a registry tiling by id.
pub fn build_named(id: &str) -> Result<CombinatorialTiling> {
    let id = normalize(id);
    if let Some(t) = CACHE.lock().unwrap().get(&id) {
        return Ok(t.clone());
    }
    let t = if id == "icosahedron" {
        icosahedron().clone()
    } else if id == "prism" {
        build_antiprism(1)?
    } else if let Some(n) = id.strip_prefix("antiprism-") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::RegistryMiss(id.to_string()))?;
        build_antiprism(n)?
    } else if id == "cuboctahedron" || id == "orthobicupola" {
        let pair = cuboct_pair()?;
        if id == "cuboctahedron" {
            pair.0
        } else {
            pair.1
        }
    } else {
        build_sporadic(&id)?
    };
    CACHE.lock().unwrap().insert(id, t.clone());
    Ok(t)
}

/// The two tilings with AVC `{α²βγ: 12}`: the cuboctahedron (every vertex
/// word alternates `α·α·`) and the triangular orthobicupola (its twist).
fn cuboct_pair() -> Result<(CombinatorialTiling, CombinatorialTiling)> {
    let spec = SearchSpec {
        allowed: vec![VertexType::new(2, 1, 1)],
        triangles: 8,
        rhombi: 6,
        exact_avc: Some(crate::vertexcomb::avc(&[(2, 1, 1, 12)])),
        collapse_beta_gamma: false,
        max_results: 0,
    };
    let outcome = search(&spec);
    if !outcome.exhausted {
        return Err(Error::BadTiling("cuboctahedron search hit the node budget".into()));
    }
    // three combinatorial maps satisfy the AVC; exactly two are realizable.
    // Filter at a generic family point: at the left end β = γ and the
    // spurious map closes by accident.
    let p = cuboct_family(1.35)?;
    let tilings: Vec<CombinatorialTiling> = outcome
        .tilings
        .into_iter()
        .filter(|t| crate::geom::is_realizable(t, &p, 1e-7))
        .collect();
    if tilings.len() != 2 {
        return Err(Error::BadTiling(format!(
            "expected exactly 2 realizable tilings for {{α²βγ:12}}, found {}",
            tilings.len()
        )));
    }
    let mut cuboct = None;
    let mut ortho = None;
    for t in tilings {
        if is_cuboctahedron(&t) {
            cuboct = Some(t);
        } else {
            ortho = Some(t);
        }
    }
    match (cuboct, ortho) {
        (Some(c), Some(o)) => Ok((c, o)),
        _ => Err(Error::BadTiling(
            "could not tell cuboctahedron from orthobicupola".into(),
        )),
    }
}

/// In the cuboctahedron every vertex's corner cycle alternates triangle and
/// rhombus corners.
fn is_cuboctahedron(t: &CombinatorialTiling) -> bool {
    let Ok(vertices) = t.vertices() else {
        return false;
    };
    vertices.iter().all(|cycle| {
        cycle.iter().enumerate().all(|(k, c)| {
            let next = cycle[(k + 1) % cycle.len()];
            let tri = |s: &super::Side| t.face_kind(s.face) == super::FaceKind::Triangle;
            tri(c) != tri(&next)
        })
    })
}

/// The catalog protoset a registry tiling validates and realizes against.
/// Family protosets are sampled at their most symmetric interior point.
pub fn registry_protoset(id: &str) -> Result<Protoset> {
    let id = normalize(id);
    if id == "icosahedron" {
        return Ok(icosahedral_protoset());
    }
    if id == "prism" {
        // the equilateral point β = γ of the prism family
        return prism_family((1.0f64 / 8.0).acos());
    }
    if let Some(n) = id.strip_prefix("antiprism-") {
        let n: u32 = n
            .parse()
            .map_err(|_| Error::RegistryMiss(id.to_string()))?;
        return crate::catalog::antiprism_family(n);
    }
    if id == "cuboctahedron" || id == "orthobicupola" {
        return cuboct_family((1.0f64 / 3.0).acos());
    }
    let row = id.split('#').next().unwrap_or(&id);
    sporadic(row)
}
