//! Icosahedral-type tilings: merging `m` disjoint adjacent triangle pairs
//! of the icosahedron into rhombi, `1 ≤ m ≤ 9`.

use super::builders::icosahedron;
use super::{CombinatorialTiling, FaceKind, Side};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// The icosahedron's face-adjacency edges as gluing pairs, in a fixed order.
fn adjacency_edges() -> Vec<(Side, Side)> {
    icosahedron().gluing_pairs()
}

/// Backtracking enumeration of size-`m` matchings over the edge list.
fn matchings(m: usize) -> Vec<Vec<(Side, Side)>> {
    let edges = adjacency_edges();
    let mut used = vec![false; icosahedron().face_count()];
    let mut current = Vec::new();
    let mut out = Vec::new();
    fn rec(
        edges: &[(Side, Side)],
        from: usize,
        m: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<(Side, Side)>,
        out: &mut Vec<Vec<(Side, Side)>>,
    ) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        if edges.len() - from < m - current.len() {
            return;
        }
        for k in from..edges.len() {
            let (a, b) = edges[k];
            if used[a.face] || used[b.face] {
                continue;
            }
            used[a.face] = true;
            used[b.face] = true;
            current.push((a, b));
            rec(edges, k + 1, m, used, current, out);
            current.pop();
            used[a.face] = false;
            used[b.face] = false;
        }
    }
    rec(&edges, 0, m, &mut used, &mut current, &mut out);
    out
}

/// Independent matching counter: recurses face by face (match the lowest
/// unmatched face to one of its free neighbors, or leave it unmatched)
/// rather than over the edge list.
pub fn matching_count(m: usize) -> u64 {
    let ico = icosahedron();
    let nf = ico.face_count();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (a, b) in ico.gluing_pairs() {
        nbrs[a.face].push(b.face);
        nbrs[b.face].push(a.face);
    }
    fn rec(f: usize, left: usize, used: &mut Vec<bool>, nbrs: &[Vec<usize>]) -> u64 {
        if left == 0 {
            return 1;
        }
        if f >= used.len() {
            return 0;
        }
        if used[f] {
            return rec(f + 1, left, used, nbrs);
        }
        // leave f unmatched
        let mut total = rec(f + 1, left, used, nbrs);
        used[f] = true;
        for &g in &nbrs[f] {
            if g > f && !used[g] {
                used[g] = true;
                total += rec(f + 1, left - 1, used, nbrs);
                used[g] = false;
            }
        }
        used[f] = false;
        total
    }
    rec(0, m, &mut vec![false; nf], &nbrs)
}

/// Merges each matched triangle pair into one rhombus; β sits at the two
/// corners absorbing the former shared edge.
fn merge(matching: &[(Side, Side)]) -> CombinatorialTiling {
    let ico = icosahedron();
    let nf = ico.face_count();
    let mut merged_with: BTreeMap<usize, (Side, Side)> = BTreeMap::new();
    for &(a, b) in matching {
        merged_with.insert(a.face, (a, b));
        merged_with.insert(b.face, (a, b));
    }
    // new face ids: surviving triangles in order, then one rhombus per pair
    let mut faces = Vec::new();
    let mut side_map: BTreeMap<Side, Side> = BTreeMap::new();
    for f in 0..nf {
        if merged_with.contains_key(&f) {
            continue;
        }
        let nid = faces.len();
        faces.push(FaceKind::Triangle);
        for i in 0..3 {
            side_map.insert(Side::new(f, i), Side::new(nid, i));
        }
    }
    for &(a, b) in matching {
        let nid = faces.len();
        faces.push(FaceKind::Rhombus);
        // rhombus sides, in order: the two remaining sides of each triangle
        let olds = [
            Side::new(a.face, (a.idx + 1) % 3),
            Side::new(a.face, (a.idx + 2) % 3),
            Side::new(b.face, (b.idx + 1) % 3),
            Side::new(b.face, (b.idx + 2) % 3),
        ];
        for (k, old) in olds.into_iter().enumerate() {
            side_map.insert(old, Side::new(nid, k));
        }
    }
    let pairs: Vec<(Side, Side)> = ico
        .gluing_pairs()
        .into_iter()
        .filter(|(a, b)| !(merged_with.get(&a.face).copied() == Some((*a, *b))))
        .map(|(a, b)| (side_map[&a], side_map[&b]))
        .collect();
    CombinatorialTiling::from_parts(faces, &pairs).expect("merged map is well formed")
}

/// The 120 automorphisms of the icosahedron map, as face permutations.
fn icosahedron_automorphisms() -> Vec<Vec<usize>> {
    let ico = icosahedron();
    let nf = ico.face_count();
    let reference = ico.bfs_order(Side::new(0, 0), 1);
    let ref_code = ico.bfs_code(Side::new(0, 0), 1);
    let mut autos = BTreeSet::new();
    for f in 0..nf {
        for i in 0..3 {
            for dir in [1isize, -1] {
                if ico.bfs_code(Side::new(f, i), dir) != ref_code {
                    continue;
                }
                let order = ico.bfs_order(Side::new(f, i), dir);
                // φ maps reference face at BFS rank k to this run's face
                let mut phi = vec![0usize; nf];
                for k in 0..nf {
                    phi[reference[k]] = order[k];
                }
                autos.insert(phi);
            }
        }
    }
    autos.into_iter().collect()
}

/// All icosahedral `m`-merge tilings. With `dedup`, matchings are
/// quotiented by the order-120 icosahedral symmetry group first.
pub fn icosahedral_merges(m: usize, dedup: bool) -> Result<Vec<CombinatorialTiling>> {
    if m == 0 || m > 9 {
        return Err(Error::Domain(format!("merge count m = {m} outside 1..=9")));
    }
    let all = matchings(m);
    if !dedup {
        return Ok(all.iter().map(|mt| merge(mt)).collect());
    }
    let autos = icosahedron_automorphisms();
    let canon = |mt: &[(Side, Side)]| -> Vec<(usize, usize)> {
        autos
            .iter()
            .map(|phi| {
                let mut edges: Vec<(usize, usize)> = mt
                    .iter()
                    .map(|(a, b)| {
                        let (x, y) = (phi[a.face], phi[b.face]);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                edges.sort_unstable();
                edges
            })
            .min()
            .expect("nonempty automorphism group")
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mt in &all {
        if seen.insert(canon(mt)) {
            out.push(merge(mt));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::icosahedral_protoset;
    use crate::tiling::validate;

    #[test]
    fn automorphism_group_has_order_120() {
        assert_eq!(icosahedron_automorphisms().len(), 120);
    }

    #[test]
    fn single_merge_is_unique_up_to_symmetry() {
        assert_eq!(matchings(1).len(), 30);
        assert_eq!(matching_count(1), 30);
        let deduped = icosahedral_merges(1, true).unwrap();
        assert_eq!(deduped.len(), 1);
    }

    #[test]
    fn merge_counts_match_oracle() {
        for m in 1..=4 {
            assert_eq!(
                icosahedral_merges(m, false).unwrap().len() as u64,
                matching_count(m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn merged_tilings_validate() {
        let p = icosahedral_protoset();
        for m in [1, 5, 9] {
            for t in icosahedral_merges(m, true).unwrap() {
                assert_eq!(t.triangle_count(), 20 - 2 * m);
                assert_eq!(t.rhombus_count(), m);
                let report = validate(&t, &p.angles, 1e-9);
                assert!(report.all_green(), "m = {m}: {report:?}");
            }
        }
    }
}
