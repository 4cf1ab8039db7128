//! Constructors for the infinite families' tilings.

use super::search::{search, SearchSpec};
use super::CombinatorialTiling;
use crate::error::{Error, Result};
use crate::vertexcomb::{avc, VertexType};
use once_cell::sync::Lazy;

/// The icosahedral triangle tiling: 20 triangles, all twelve vertices `α⁵`.
pub fn icosahedron() -> &'static CombinatorialTiling {
    static ICO: Lazy<CombinatorialTiling> = Lazy::new(|| {
        let spec = SearchSpec {
            allowed: vec![VertexType::new(5, 0, 0)],
            triangles: 20,
            rhombi: 0,
            exact_avc: Some(avc(&[(5, 0, 0, 12)])),
            collapse_beta_gamma: false,
            max_results: 1,
        };
        search(&spec)
            .tilings
            .into_iter()
            .next()
            .expect("the icosahedron exists")
    });
    &ICO
}

/// The `n`-th antiprism-family tiling: 2 triangles and `6n−3` rhombi with
/// AVC `{αβγⁿ: 6, β²γ: 6n−6}`. `n = 1` is the triangular prism.
pub fn build_antiprism(n: usize) -> Result<CombinatorialTiling> {
    if n == 0 {
        return Err(Error::Domain("antiprism index must be ≥ 1".into()));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::Domain("antiprism index too large".into()))?;
    let mut allowed = vec![VertexType::new(1, 1, n32)];
    let mut target = vec![(1, 1, n32, 6)];
    if n > 1 {
        allowed.push(VertexType::new(0, 2, 1));
        target.push((0, 2, 1, 6 * n32 - 6));
    }
    let spec = SearchSpec {
        allowed,
        triangles: 2,
        rhombi: 6 * n - 3,
        exact_avc: Some(avc(&target)),
        collapse_beta_gamma: false,
        max_results: 1,
    };
    search(&spec)
        .tilings
        .into_iter()
        .next()
        .ok_or_else(|| Error::BadTiling(format!("antiprism tiling n={n} not found")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::antiprism_angles;
    use crate::sphtrig::AngleTriple;
    use crate::tiling::{extract_avc, validate};
    use std::f64::consts::PI;

    #[test]
    fn icosahedron_structure() {
        let t = icosahedron();
        assert_eq!(t.face_count(), 20);
        let angles = AngleTriple::new(2.0 * PI / 5.0, 4.0 * PI / 5.0, 2.0 * PI / 5.0);
        let verts = t.vertices().unwrap();
        assert_eq!(verts.len(), 12);
        assert!(verts
            .iter()
            .all(|c| t.cycle_type(c) == VertexType::new(5, 0, 0)));
        let report = validate(t, &angles, 1e-9);
        // α³ vertices absent and every vertex sums to 2π
        assert!(report.all_green(), "{report:?}");
    }

    #[test]
    fn antiprism_small() {
        for n in 2..=3usize {
            let t = build_antiprism(n).unwrap();
            assert_eq!(t.triangle_count(), 2);
            assert_eq!(t.rhombus_count(), 6 * n - 3);
            let angles = antiprism_angles(n as u32).unwrap();
            let report = validate(&t, &angles, 1e-9);
            assert!(report.all_green(), "antiprism n={n}: {report:?}");
            let avc_got = extract_avc(&t).unwrap();
            let mut want = crate::vertexcomb::Avc::new();
            want.insert(VertexType::new(1, 1, n as u32), 6);
            want.insert(VertexType::new(0, 2, 1), 6 * n as u32 - 6);
            assert_eq!(avc_got, want);
        }
    }

    #[test]
    fn antiprism_index_one_is_the_prism() {
        let t = build_antiprism(1).unwrap();
        assert_eq!((t.triangle_count(), t.rhombus_count()), (2, 3));
        assert_eq!(t.vertices().unwrap().len(), 6);
    }
}
