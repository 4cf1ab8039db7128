//! Exhaustive backtracking enumeration of edge-to-edge tilings with
//! prescribed tile counts and allowed vertex types.
//!
//! The search grows a genus-0 patch one gluing at a time. Open vertices are
//! the "fans" of consecutive corners around a boundary vertex; at each step
//! the most constrained fan is selected and every way of extending it is
//! tried: attach a fresh tile, close the fan into a finished vertex, or
//! glue its extension side to another boundary side of the same boundary
//! cycle (gluing across distinct boundary cycles would raise the genus and
//! can never complete to a sphere, so such moves are pruned). Fans whose
//! corner counts fit under no allowed vertex type with remaining budget are
//! dead ends. Completed tilings are deduplicated by canonical code.

use super::{CombinatorialTiling, FaceKind, Side};
use crate::vertexcomb::{Avc, VertexType};
use std::collections::{BTreeMap, BTreeSet};

/// What to enumerate.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    /// Vertex types a finished vertex may have (concrete, not collapsed).
    pub allowed: Vec<VertexType>,
    pub triangles: usize,
    pub rhombi: usize,
    /// Exact vertex-type multiset required of a completed tiling, if any.
    pub exact_avc: Option<Avc>,
    /// Account the AVC by collapsed classes `(n₁, n₂+n₃)` — the convention
    /// for protosets with `β = γ`.
    pub collapse_beta_gamma: bool,
    /// Stop after this many distinct tilings (`0` = unlimited).
    pub max_results: usize,
}

/// Search result: distinct tilings in discovery order, whether the space
/// was exhausted, and the node count.
#[derive(Debug)]
pub struct SearchOutcome {
    pub tilings: Vec<CombinatorialTiling>,
    pub exhausted: bool,
    pub nodes: u64,
}

const MAX_NODES: u64 = 2_000_000_000;

#[derive(Debug, Clone)]
struct Fan {
    counts: [u32; 3],
    /// Unglued side whose start corner begins the fan.
    start: Side,
    /// Unglued side that extends the fan when glued.
    end: Side,
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Attach { end: Side, kind: FaceKind, j: usize },
    Close { end: Side, start: Side },
    Merge { end: Side, other: Side },
}

struct State<'a> {
    spec: &'a SearchSpec,
    faces: Vec<FaceKind>,
    glue: Vec<Vec<Option<Side>>>,
    tri_used: usize,
    rho_used: usize,
    /// Finished vertices by (possibly collapsed) class.
    closed: BTreeMap<VertexType, u32>,
    results: Vec<CombinatorialTiling>,
    seen: BTreeSet<Vec<u32>>,
    nodes: u64,
    exhausted: bool,
}

/// Enumerates tilings matching `spec`.
pub fn search(spec: &SearchSpec) -> SearchOutcome {
    let mut st = State {
        spec,
        faces: Vec::new(),
        glue: Vec::new(),
        tri_used: 0,
        rho_used: 0,
        closed: BTreeMap::new(),
        results: Vec::new(),
        seen: BTreeSet::new(),
        nodes: 0,
        exhausted: true,
    };
    // Seed with one tile; every tiling contains a triangle when any are
    // requested, so rooting there loses nothing.
    let seed = if spec.triangles > 0 {
        FaceKind::Triangle
    } else {
        FaceKind::Rhombus
    };
    st.push_face(seed);
    st.recurse();
    st.pop_face();
    SearchOutcome {
        tilings: st.results,
        exhausted: st.exhausted,
        nodes: st.nodes,
    }
}

impl State<'_> {
    fn class(&self, vt: VertexType) -> VertexType {
        if self.spec.collapse_beta_gamma {
            VertexType::new(vt.n1, vt.n2 + vt.n3, 0)
        } else {
            vt
        }
    }

    fn budget_left(&self, vt: VertexType) -> bool {
        let Some(target) = &self.spec.exact_avc else {
            return true;
        };
        let cls = self.class(vt);
        let cap: u32 = target
            .iter()
            .filter(|(t, _)| self.class(**t) == cls)
            .map(|(_, c)| *c)
            .sum();
        self.closed.get(&cls).copied().unwrap_or(0) < cap
    }

    /// A fan must still fit under some allowed type with budget remaining.
    fn fan_feasible(&self, counts: [u32; 3]) -> bool {
        self.spec.allowed.iter().any(|t| {
            counts[0] <= t.n1
                && counts[1] <= t.n2
                && counts[2] <= t.n3
                && self.budget_left(*t)
        })
    }

    fn fan_closable(&self, counts: [u32; 3]) -> bool {
        let vt = VertexType::new(counts[0], counts[1], counts[2]);
        self.spec.allowed.contains(&vt) && self.budget_left(vt)
    }

    fn push_face(&mut self, kind: FaceKind) -> usize {
        let f = self.faces.len();
        self.faces.push(kind);
        self.glue.push(vec![None; kind.side_count()]);
        match kind {
            FaceKind::Triangle => self.tri_used += 1,
            FaceKind::Rhombus => self.rho_used += 1,
        }
        f
    }

    fn pop_face(&mut self) {
        match self.faces.pop().expect("face stack nonempty") {
            FaceKind::Triangle => self.tri_used -= 1,
            FaceKind::Rhombus => self.rho_used -= 1,
        }
        self.glue.pop();
    }

    fn bind(&mut self, a: Side, b: Side) {
        debug_assert!(self.glue[a.face][a.idx].is_none());
        debug_assert!(self.glue[b.face][b.idx].is_none());
        self.glue[a.face][a.idx] = Some(b);
        self.glue[b.face][b.idx] = Some(a);
    }

    fn unbind(&mut self, a: Side, b: Side) {
        self.glue[a.face][a.idx] = None;
        self.glue[b.face][b.idx] = None;
    }

    fn side_count(&self, f: usize) -> usize {
        self.faces[f].side_count()
    }

    fn next_around(&self, c: Side) -> Option<Side> {
        let n = self.side_count(c.face);
        self.glue[c.face][(c.idx + n - 1) % n]
    }

    fn prev_around(&self, c: Side) -> Option<Side> {
        self.glue[c.face][c.idx].map(|p| {
            let n = self.side_count(p.face);
            Side::new(p.face, (p.idx + 1) % n)
        })
    }

    fn corner_label(&self, c: Side) -> usize {
        match self.faces[c.face] {
            FaceKind::Triangle => 0,
            FaceKind::Rhombus => 1 + c.idx % 2,
        }
    }

    /// Open vertices: maximal corner chains along the boundary.
    fn fans(&self) -> Vec<Fan> {
        let mut out = Vec::new();
        for f in 0..self.faces.len() {
            for i in 0..self.side_count(f) {
                if self.glue[f][i].is_some() {
                    continue;
                }
                // corner (f, i) has no predecessor around its vertex
                let start = Side::new(f, i);
                let mut counts = [0u32; 3];
                let mut c = start;
                let end;
                loop {
                    counts[self.corner_label(c)] += 1;
                    match self.next_around(c) {
                        Some(nc) => c = nc,
                        None => {
                            let n = self.side_count(c.face);
                            end = Side::new(c.face, (c.idx + n - 1) % n);
                            break;
                        }
                    }
                }
                out.push(Fan { counts, start, end });
            }
        }
        out
    }

    /// Boundary sides reachable from `s` along its boundary cycle.
    fn boundary_cycle(&self, s: Side) -> Vec<Side> {
        let mut cycle = Vec::new();
        let mut u = s;
        loop {
            cycle.push(u);
            // step to the next boundary side past the end corner of `u`
            let n = self.side_count(u.face);
            let mut c = Side::new(u.face, (u.idx + 1) % n);
            while let Some(p) = self.prev_around(c) {
                c = p;
            }
            u = c;
            if u == s {
                return cycle;
            }
        }
    }

    fn moves_for(&self, fan: &Fan, fans: &[Fan]) -> Vec<Move> {
        let mut moves = Vec::new();
        // attach a fresh tile, landing corner α, β or γ at the vertex
        let attach = |label: usize| -> Option<(FaceKind, usize)> {
            match label {
                0 if self.tri_used < self.spec.triangles => Some((FaceKind::Triangle, 0)),
                1 if self.rho_used < self.spec.rhombi => Some((FaceKind::Rhombus, 0)),
                2 if self.rho_used < self.spec.rhombi => Some((FaceKind::Rhombus, 1)),
                _ => None,
            }
        };
        for label in 0..3 {
            // with β = γ the two rhombus orientations are the same tile;
            // relabeling makes the β-anchored attachment canonical
            if label == 2 && self.spec.collapse_beta_gamma {
                continue;
            }
            let mut counts = fan.counts;
            counts[label] += 1;
            if !self.fan_feasible(counts) {
                continue;
            }
            if let Some((kind, j)) = attach(label) {
                moves.push(Move::Attach {
                    end: fan.end,
                    kind,
                    j,
                });
            }
        }
        // a fan whose start and end are the same physical side cannot close
        // (that edge would have to pair with itself)
        if fan.end != fan.start && self.fan_closable(fan.counts) {
            moves.push(Move::Close {
                end: fan.end,
                start: fan.start,
            });
        }
        // merge with another fan along the same boundary cycle
        let fans_by_start: BTreeMap<Side, &Fan> =
            fans.iter().map(|f| (f.start, f)).collect();
        for s in self.boundary_cycle(fan.end) {
            if s == fan.end || s == fan.start {
                continue;
            }
            let other = fans_by_start[&s];
            let mut counts = fan.counts;
            for k in 0..3 {
                counts[k] += other.counts[k];
            }
            if self.fan_feasible(counts) {
                moves.push(Move::Merge { end: fan.end, other: s });
            }
        }
        moves
    }

    fn recurse(&mut self) {
        self.nodes += 1;
        if self.nodes > MAX_NODES {
            self.exhausted = false;
            return;
        }
        if self.spec.max_results != 0 && self.results.len() >= self.spec.max_results {
            self.exhausted = false;
            return;
        }
        let fans = self.fans();
        if fans.is_empty() {
            self.emit();
            return;
        }
        if fans.iter().any(|f| !self.fan_feasible(f.counts)) {
            return;
        }
        // pick the most constrained fan; ties broken by start side
        let mut best: Option<(usize, Vec<Move>)> = None;
        for (i, fan) in fans.iter().enumerate() {
            let moves = self.moves_for(fan, &fans);
            let better = match &best {
                None => true,
                Some((bi, bm)) => {
                    moves.len() < bm.len()
                        || (moves.len() == bm.len() && fan.start < fans[*bi].start)
                }
            };
            if better {
                if moves.is_empty() {
                    return; // dead end
                }
                best = Some((i, moves));
            }
        }
        let (_, moves) = best.expect("nonempty fan list");
        for mv in moves {
            self.apply(mv);
        }
    }

    /// If the vertex of corner `c` is now a complete cycle, returns its
    /// counts and the cycle's minimal corner (as a dedup key).
    fn vertex_if_closed(&self, c: Side) -> Option<([u32; 3], Side)> {
        let mut counts = [0u32; 3];
        let mut min = c;
        let mut cur = c;
        loop {
            counts[self.corner_label(cur)] += 1;
            min = min.min(cur);
            cur = self.next_around(cur)?;
            if cur == c {
                return Some((counts, min));
            }
        }
    }

    fn apply(&mut self, mv: Move) {
        let (a, b, attached) = match mv {
            Move::Attach { end, kind, j } => {
                let f = self.push_face(kind);
                (end, Side::new(f, j), true)
            }
            Move::Close { end, start } => (end, start, false),
            Move::Merge { end, other } => (end, other, false),
        };
        self.bind(a, b);
        // a new gluing can complete the vertex at either end of the edge
        let n = self.side_count(a.face);
        let ends = [a, Side::new(a.face, (a.idx + 1) % n)];
        let mut newly: Vec<([u32; 3], Side)> = Vec::new();
        for c in ends {
            if let Some(closed) = self.vertex_if_closed(c) {
                if !newly.iter().any(|(_, key)| *key == closed.1) {
                    newly.push(closed);
                }
            }
        }
        let mut ok = true;
        let mut booked = Vec::new();
        for (counts, _) in &newly {
            let vt = VertexType::new(counts[0], counts[1], counts[2]);
            if self.spec.allowed.contains(&vt) && self.budget_left(vt) {
                let cls = self.class(vt);
                *self.closed.entry(cls).or_insert(0) += 1;
                booked.push(cls);
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            self.recurse();
        }
        for cls in booked {
            *self.closed.get_mut(&cls).unwrap() -= 1;
        }
        self.unbind(a, b);
        if attached {
            self.pop_face();
        }
    }

    fn emit(&mut self) {
        if self.tri_used != self.spec.triangles || self.rho_used != self.spec.rhombi {
            return;
        }
        if let Some(target) = &self.spec.exact_avc {
            let mut want: BTreeMap<VertexType, u32> = BTreeMap::new();
            for (t, c) in target {
                *want.entry(self.class(*t)).or_insert(0) += c;
            }
            let have: BTreeMap<VertexType, u32> = self
                .closed
                .iter()
                .filter(|(_, c)| **c > 0)
                .map(|(t, c)| (*t, *c))
                .collect();
            if have != want {
                return;
            }
        }
        let t = CombinatorialTiling {
            faces: self.faces.clone(),
            glue: self.glue.clone(),
        };
        let code = if self.spec.collapse_beta_gamma {
            t.canonical_code_unlabeled()
        } else {
            t.canonical_code()
        };
        if self.seen.insert(code) {
            self.results.push(t);
        }
    }
}
