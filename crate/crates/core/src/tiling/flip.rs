//! The flip move on the (20,24) family.
//!
//! The flippable module is a hexagonal region of five tiles — two rhombi
//! `R_A`, `R_B`, a middle rhombus `R_mid`, and two triangles `T1`, `T2` —
//! with boundary word `β/γα/αγγ/β/γα/αγγ` read at the hexagon vertices
//! `A, t, B, r, b, l` and two interior degree-3 vertices `m1`, `m2` of type
//! `αβ²`. Concretely (all corner cycles counterclockwise):
//!
//! ```text
//!   T1    = [B, m1, t]              R_mid = [m1, B, m2, l]
//!   T2    = [l, m2, b]              R_A   = [m1, l, A, t]
//!                                   R_B   = [m2, B, r, b]
//! ```
//!
//! Because `β = α + 2γ` for this protoset, reflecting the module across the
//! `t–b` axis keeps every vertex angle sum intact while trading vertex
//! types: one flip shifts the AVC by `{αβ²:+1, α³γ⁴:+1, α²βγ²:−2}`,
//! stepping the family parameter `k` by one.

use super::{extract_avc, CombinatorialTiling, FaceKind, Side};
use crate::error::{Error, Result};
use crate::vertexcomb::{Avc, VertexType};

/// Which way a flip moves along the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipDirection {
    /// `k → k+1`: AVC delta `{αβ²:+1, α³γ⁴:+1, α²βγ²:−2}`.
    Forward,
    /// `k → k−1`: the inverse delta.
    Backward,
}

/// Locator of a flippable module: the middle rhombus, which of its β
/// corners plays `m1`, and whether the module matches the mirrored
/// template.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipSite {
    pub rm: usize,
    pub orient: usize,
    pub mirrored: bool,
}

/// The module template around `R_mid`, fully resolved.
struct Module {
    rm: usize,
    o: usize,
    t1: usize,
    j1: usize,
    t2: usize,
    j2: usize,
    ra: usize,
    ja: usize,
    rb: usize,
    jb: usize,
}

fn m3(i: usize) -> usize {
    i % 3
}
fn m4(i: usize) -> usize {
    i % 4
}

/// Matches the (unmirrored) template at rhombus `rm` with `m1` at corner
/// `o`; returns the resolved module or `None`.
fn match_module(t: &CombinatorialTiling, rm: usize, o: usize) -> Option<Module> {
    if t.face_kind(rm) != FaceKind::Rhombus || o % 2 != 0 {
        return None;
    }
    // R_mid corners: o = m1, o+1 = B, o+2 = m2, o+3 = l
    let (t1, j1) = {
        let p = t.partner(Side::new(rm, o))?;
        (p.face, p.idx)
    };
    let (rb, jb) = {
        let p = t.partner(Side::new(rm, m4(o + 1)))?;
        (p.face, p.idx)
    };
    let (t2, j2) = {
        let p = t.partner(Side::new(rm, m4(o + 2)))?;
        (p.face, p.idx)
    };
    let (ra, ja) = {
        let p = t.partner(Side::new(rm, m4(o + 3)))?;
        (p.face, p.idx)
    };
    if t.face_kind(t1) != FaceKind::Triangle || t.face_kind(t2) != FaceKind::Triangle {
        return None;
    }
    if t.face_kind(ra) != FaceKind::Rhombus || t.face_kind(rb) != FaceKind::Rhombus {
        return None;
    }
    if ja % 2 != 0 || jb % 2 != 0 {
        return None;
    }
    let ids = [rm, t1, t2, ra, rb];
    if (1..5).any(|i| ids[..i].contains(&ids[i])) {
        return None;
    }
    // interior vertices m1, m2 must close with degree 3
    if t.partner(Side::new(t1, m3(j1 + 1))) != Some(Side::new(ra, m4(ja + 3))) {
        return None;
    }
    if t.partner(Side::new(t2, m3(j2 + 1))) != Some(Side::new(rb, m4(jb + 3))) {
        return None;
    }
    // the six outer sides must leave the module
    let outer = [
        Side::new(ra, m4(ja + 1)),
        Side::new(ra, m4(ja + 2)),
        Side::new(t1, m3(j1 + 2)),
        Side::new(rb, m4(jb + 1)),
        Side::new(rb, m4(jb + 2)),
        Side::new(t2, m3(j2 + 2)),
    ];
    for s in outer {
        let p = t.partner(s)?;
        if ids.contains(&p.face) {
            return None;
        }
    }
    Some(Module {
        rm,
        o,
        t1,
        j1,
        t2,
        j2,
        ra,
        ja,
        rb,
        jb,
    })
}

/// Reflects every face's corner order (`i ↦ n−1−i` on sides), producing the
/// mirror image of the map with corner labels preserved.
fn mirrored(t: &CombinatorialTiling) -> CombinatorialTiling {
    let mu = |s: Side, t: &CombinatorialTiling| -> Side {
        let n = t.face_kind(s.face).side_count();
        Side::new(s.face, n - 1 - s.idx)
    };
    let pairs: Vec<(Side, Side)> = t
        .gluing_pairs()
        .into_iter()
        .map(|(a, b)| (mu(a, t), mu(b, t)))
        .collect();
    CombinatorialTiling::from_parts(t.faces().to_vec(), &pairs)
        .expect("mirror of a valid map is valid")
}

/// Performs the reflection regluing for a resolved (unmirrored) module.
fn flip_resolved(t: &CombinatorialTiling, m: &Module) -> CombinatorialTiling {
    let Module {
        rm,
        o,
        t1,
        j1,
        t2,
        j2,
        ra,
        ja,
        rb,
        jb,
    } = *m;
    // outside partners around the hexagon
    let p_la = t.partner(Side::new(ra, m4(ja + 1))).unwrap();
    let p_at = t.partner(Side::new(ra, m4(ja + 2))).unwrap();
    let p_tb = t.partner(Side::new(t1, m3(j1 + 2))).unwrap();
    let p_br = t.partner(Side::new(rb, m4(jb + 1))).unwrap();
    let p_rb = t.partner(Side::new(rb, m4(jb + 2))).unwrap();
    let p_bl = t.partner(Side::new(t2, m3(j2 + 2))).unwrap();
    let module_sides: Vec<Side> = (0..4)
        .map(|i| Side::new(rm, i))
        .chain((0..4).map(|i| Side::new(ra, i)))
        .chain((0..4).map(|i| Side::new(rb, i)))
        .chain((0..3).map(|i| Side::new(t1, i)))
        .chain((0..3).map(|i| Side::new(t2, i)))
        .collect();
    let keep: Vec<(Side, Side)> = t
        .gluing_pairs()
        .into_iter()
        .filter(|(a, b)| !module_sides.contains(a) && !module_sides.contains(b))
        .collect();
    let mut pairs = keep;
    // reflected module, interior gluings
    pairs.push((Side::new(rm, o), Side::new(ra, m4(ja + 3))));
    pairs.push((Side::new(rm, m4(o + 1)), Side::new(t2, j2)));
    pairs.push((Side::new(rm, m4(o + 2)), Side::new(rb, m4(jb + 3))));
    pairs.push((Side::new(rm, m4(o + 3)), Side::new(t1, j1)));
    pairs.push((Side::new(ra, ja), Side::new(t1, m3(j1 + 2))));
    pairs.push((Side::new(rb, jb), Side::new(t2, m3(j2 + 2))));
    // reflected module, hexagon gluings
    pairs.push((Side::new(ra, m4(ja + 1)), p_tb));
    pairs.push((Side::new(ra, m4(ja + 2)), p_br));
    pairs.push((Side::new(rb, m4(jb + 1)), p_bl));
    pairs.push((Side::new(rb, m4(jb + 2)), p_la));
    pairs.push((Side::new(t1, m3(j1 + 1)), p_at));
    pairs.push((Side::new(t2, m3(j2 + 1)), p_rb));
    CombinatorialTiling::from_parts(t.faces().to_vec(), &pairs)
        .expect("flip regluing is well formed")
}

/// Applies the flip at `site`, reflecting the module in place.
pub fn flip_20_24(t: &CombinatorialTiling, site: &FlipSite) -> Result<CombinatorialTiling> {
    let work = if site.mirrored { mirrored(t) } else { t.clone() };
    let m = match_module(&work, site.rm, site.orient).ok_or_else(|| {
        Error::SiteNotFlippable(format!(
            "no flippable module at rhombus {} orient {} (mirrored: {})",
            site.rm, site.orient, site.mirrored
        ))
    })?;
    let flipped = flip_resolved(&work, &m);
    Ok(if site.mirrored {
        mirrored(&flipped)
    } else {
        flipped
    })
}

/// The expected AVC delta of one flip.
fn direction_delta(dir: FlipDirection) -> Vec<(VertexType, i64)> {
    let sign = match dir {
        FlipDirection::Forward => 1,
        FlipDirection::Backward => -1,
    };
    vec![
        (VertexType::new(1, 2, 0), sign),
        (VertexType::new(3, 0, 4), sign),
        (VertexType::new(2, 1, 2), -2 * sign),
    ]
}

fn avc_delta(before: &Avc, after: &Avc) -> Vec<(VertexType, i64)> {
    let mut keys: Vec<VertexType> = before.keys().chain(after.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let d = after.get(&k).copied().unwrap_or(0) as i64
                - before.get(&k).copied().unwrap_or(0) as i64;
            (d != 0).then_some((k, d))
        })
        .collect()
}

/// All module sites whose flip moves the AVC in the given direction; one
/// site per hostable middle rhombus.
pub fn find_flip_sites(t: &CombinatorialTiling, dir: FlipDirection) -> Vec<FlipSite> {
    let before = match extract_avc(t) {
        Ok(a) => a,
        Err(_) => return Vec::new(),
    };
    let mut want = direction_delta(dir);
    want.sort_unstable_by_key(|(k, _)| *k);
    let mirror = mirrored(t);
    let mut out = Vec::new();
    for rm in 0..t.face_count() {
        'orients: for (mirrored_flag, work) in [(false, t), (true, &mirror)] {
            for o in [0usize, 2] {
                if match_module(work, rm, o).is_none() {
                    continue;
                }
                let site = FlipSite {
                    rm,
                    orient: o,
                    mirrored: mirrored_flag,
                };
                let flipped = flip_20_24(t, &site).expect("matched module flips");
                if let Ok(after) = extract_avc(&flipped) {
                    let mut delta = avc_delta(&before, &after);
                    delta.sort_unstable_by_key(|(k, _)| *k);
                    if delta == want {
                        out.push(site);
                        // the two orientations locate the same module
                        break 'orients;
                    }
                }
            }
        }
    }
    out
}

impl FlipSite {
    /// The five faces of the module at this site.
    pub fn module_faces(&self, t: &CombinatorialTiling) -> Result<[usize; 5]> {
        let work = if self.mirrored { mirrored(t) } else { t.clone() };
        let m = match_module(&work, self.rm, self.orient).ok_or_else(|| {
            Error::SiteNotFlippable(format!("no module at rhombus {}", self.rm))
        })?;
        Ok([m.rm, m.ra, m.rb, m.t1, m.t2])
    }
}

/// A chain of tilings `k = 0 ..= k_max` linked by forward flips, found by
/// depth-first search over flip sites: greedy site choice can strand the
/// walk before `k_max`, so dead ends are backtracked.
pub fn flip_walk(base: &CombinatorialTiling, k_max: u32) -> Result<Vec<CombinatorialTiling>> {
    fn dfs(cur: &CombinatorialTiling, depth: u32, out: &mut Vec<CombinatorialTiling>) -> bool {
        if depth == 0 {
            return true;
        }
        for site in find_flip_sites(cur, FlipDirection::Forward) {
            let next = flip_20_24(cur, &site).expect("matched site flips");
            out.push(next.clone());
            if dfs(&next, depth - 1, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    let mut out = vec![base.clone()];
    if dfs(base, k_max, &mut out) {
        Ok(out)
    } else {
        Err(Error::SiteNotFlippable(format!(
            "no chain of {k_max} forward flips from the given tiling"
        )))
    }
}

/// The flip-family AVC at parameter `k`:
/// `{(12+k)αβ², (24−2k)α²βγ², kα³γ⁴}`.
pub fn flip_family_avc(k: u32) -> Avc {
    let mut avc = Avc::new();
    avc.insert(VertexType::new(1, 2, 0), 12 + k);
    if k < 12 {
        avc.insert(VertexType::new(2, 1, 2), 24 - 2 * k);
    }
    if k > 0 {
        avc.insert(VertexType::new(3, 0, 4), k);
    }
    avc
}
