//! Vertex types and anglewise vertex combinations (AVCs).
//!
//! A vertex where `n₁` α-corners, `n₂` β-corners and `n₃` γ-corners meet is
//! represented by its vector type `(n₁, n₂, n₃)`; the angle sums must equal
//! `2π`. This module enumerates the types admitted by a given angle triple,
//! decides integer linear dependence of three types (the Irrational Angle
//! Lemma), and reproduces symbolically the table of vertices of degree 3, 4
//! and 5 admissible under the convex constraints.

use crate::sphtrig::AngleTriple;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

/// Default relative tolerance (against `2π`) for numeric vertex matching.
pub const DEFAULT_VERTEX_TOL: f64 = 1e-6;

/// A vertex type `αⁿ¹ βⁿ² γⁿ³`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct VertexType {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl VertexType {
    pub const fn new(n1: u32, n2: u32, n3: u32) -> Self {
        VertexType { n1, n2, n3 }
    }

    pub fn degree(&self) -> u32 {
        self.n1 + self.n2 + self.n3
    }

    pub fn angle_sum(&self, t: &AngleTriple) -> f64 {
        self.n1 as f64 * t.alpha + self.n2 as f64 * t.beta + self.n3 as f64 * t.gamma
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(f: &mut fmt::Formatter<'_>, sym: char, n: u32) -> fmt::Result {
            match n {
                0 => Ok(()),
                1 => write!(f, "{sym}"),
                _ => write!(f, "{sym}^{n}"),
            }
        }
        part(f, 'α', self.n1)?;
        part(f, 'β', self.n2)?;
        part(f, 'γ', self.n3)
    }
}

/// Anglewise vertex combination: vertex types with multiplicities.
pub type Avc = BTreeMap<VertexType, u32>;

/// Builds an [`Avc`] from `(n1, n2, n3, count)` rows.
pub fn avc(entries: &[(u32, u32, u32, u32)]) -> Avc {
    entries
        .iter()
        .map(|&(n1, n2, n3, c)| (VertexType::new(n1, n2, n3), c))
        .collect()
}

/// Reconstructs `x/π` as a small-denominator fraction when the f64 is within
/// `1e−12` of one; used to switch enumeration to exact arithmetic.
fn as_pi_fraction(x: f64) -> Option<(i64, i64)> {
    let r = x / PI;
    for q in 1..=360i64 {
        let p = (r * q as f64).round();
        if (r - p / q as f64).abs() < 1e-12 {
            return Some((p as i64, q));
        }
    }
    None
}

/// All vertex types admitted by the angle triple within `tol` (relative to
/// `2π`), lexicographically sorted.
///
/// When all three angles are rational multiples of π the angle-sum test is
/// exact integer arithmetic; otherwise the numeric test
/// `|n₁α+n₂β+n₃γ − 2π| < tol·2π` is used.
pub fn enumerate_vertex_types(t: &AngleTriple, tol: f64) -> Vec<VertexType> {
    let two_pi = 2.0 * PI;
    let max1 = (two_pi / t.alpha).floor() as u32;
    let max2 = (two_pi / t.beta).floor() as u32;
    let max3 = (two_pi / t.gamma).floor() as u32;
    let exact = (
        as_pi_fraction(t.alpha),
        as_pi_fraction(t.beta),
        as_pi_fraction(t.gamma),
    );
    let mut out = Vec::new();
    for n1 in 0..=max1 {
        let s1 = n1 as f64 * t.alpha;
        if s1 > two_pi * (1.0 + tol) {
            break;
        }
        for n2 in 0..=max2 {
            let s2 = s1 + n2 as f64 * t.beta;
            if s2 > two_pi * (1.0 + tol) {
                break;
            }
            for n3 in 0..=max3 {
                let vt = VertexType::new(n1, n2, n3);
                if vt.degree() < 3 {
                    continue;
                }
                let hit = match exact {
                    (Some((p1, q1)), Some((p2, q2)), Some((p3, q3))) => {
                        // n1·p1/q1 + n2·p2/q2 + n3·p3/q3 == 2, over a common
                        // denominator.
                        let q = q1 * q2 * q3;
                        n1 as i64 * p1 * q2 * q3
                            + n2 as i64 * p2 * q1 * q3
                            + n3 as i64 * p3 * q1 * q2
                            == 2 * q
                    }
                    _ => (s2 + n3 as f64 * t.gamma - two_pi).abs() < tol * two_pi,
                };
                if hit {
                    out.push(vt);
                }
            }
        }
    }
    out.sort();
    out
}

/// True iff the 3×3 integer matrix with rows `l, m, n` is singular.
pub fn is_linearly_dependent(l: &VertexType, m: &VertexType, n: &VertexType) -> bool {
    let r = |v: &VertexType| [v.n1 as i64, v.n2 as i64, v.n3 as i64];
    let (a, b, c) = (r(l), r(m), r(n));
    let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0]);
    det == 0
}

/// Solves a 3×3 linear system by Gaussian elimination with partial pivoting.
fn solve3(mut m: [[f64; 3]; 3], mut rhs: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut s = rhs[row];
        for k in row + 1..3 {
            s -= m[row][k] * x[k];
        }
        x[row] = s / m[row][row];
    }
    Some(x)
}

/// Feasibility of `n₁α+n₂β+n₃γ = 2π` under the convex constraints
/// `π/3 < α < π/2 < β < π`, `0 < γ < β`, `β + γ > π`, with all open
/// constraints shrunk by slack `ε = 1e−6`.
///
/// The feasible set is a polytope inside the equality plane; it is nonempty
/// iff one of its vertices (equality plane + two active inequality
/// boundaries) satisfies every constraint.
fn convex_feasible(vt: &VertexType) -> bool {
    const EPS: f64 = 1e-6;
    // Inequalities as rows (c, d): c·(α,β,γ) ≥ d.
    let ineqs: [([f64; 3], f64); 7] = [
        ([1.0, 0.0, 0.0], PI / 3.0 + EPS),  // α ≥ π/3+ε
        ([-1.0, 0.0, 0.0], -(PI / 2.0 - EPS)), // α ≤ π/2−ε
        ([0.0, 1.0, 0.0], PI / 2.0 + EPS),  // β ≥ π/2+ε
        ([0.0, -1.0, 0.0], -(PI - EPS)),    // β ≤ π−ε
        ([0.0, 0.0, 1.0], EPS),             // γ ≥ ε
        ([0.0, 1.0, -1.0], EPS),            // β − γ ≥ ε
        ([0.0, 1.0, 1.0], PI + EPS),        // β + γ ≥ π+ε
    ];
    let eq = [vt.n1 as f64, vt.n2 as f64, vt.n3 as f64];
    for i in 0..ineqs.len() {
        for j in i + 1..ineqs.len() {
            let m = [eq, ineqs[i].0, ineqs[j].0];
            let rhs = [2.0 * PI, ineqs[i].1, ineqs[j].1];
            let Some(x) = solve3(m, rhs) else { continue };
            if ineqs
                .iter()
                .all(|(c, d)| c[0] * x[0] + c[1] * x[1] + c[2] * x[2] >= d - 1e-9)
            {
                return true;
            }
        }
    }
    false
}

/// The admissible vertex types of degree 3, 4 and 5 under the convex
/// constraints, grouped by degree (degrees 3, 4, 5 in order).
pub fn deg345_admissible_convex() -> [Vec<VertexType>; 3] {
    let mut out: [Vec<VertexType>; 3] = Default::default();
    for (slot, deg) in (3u32..=5).enumerate() {
        for n1 in 0..=deg {
            for n2 in 0..=deg - n1 {
                let vt = VertexType::new(n1, n2, deg - n1 - n2);
                if convex_feasible(&vt) {
                    out[slot].push(vt);
                }
            }
        }
        out[slot].sort();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vt(n1: u32, n2: u32, n3: u32) -> VertexType {
        VertexType::new(n1, n2, n3)
    }

    #[test]
    fn icosahedral_types() {
        let t = AngleTriple::new(2.0 * PI / 5.0, 4.0 * PI / 5.0, 2.0 * PI / 5.0);
        let got = enumerate_vertex_types(&t, DEFAULT_VERTEX_TOL);
        let mut want = vec![
            vt(1, 2, 0),
            vt(0, 2, 1),
            vt(3, 1, 0),
            vt(2, 1, 1),
            vt(1, 1, 2),
            vt(0, 1, 3),
            vt(5, 0, 0),
            vt(4, 0, 1),
            vt(3, 0, 2),
            vt(2, 0, 3),
            vt(1, 0, 4),
            vt(0, 0, 5),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sporadic_8_2_contains_a3b() {
        let t = AngleTriple::new(0.4335 * PI, 0.6992 * PI, 0.6992 * PI);
        // table digits are truncated, so allow the truncation width
        let got = enumerate_vertex_types(&t, 3e-4);
        assert!(got.contains(&vt(3, 1, 0)));
    }

    #[test]
    fn matches_brute_force_on_degenerate_row() {
        let t = AngleTriple::new(PI / 2.0, PI, PI / 2.0);
        let got = enumerate_vertex_types(&t, DEFAULT_VERTEX_TOL);
        let mut brute = Vec::new();
        for n1 in 0..=8u32 {
            for n2 in 0..=8u32 {
                for n3 in 0..=8u32 {
                    let v = vt(n1, n2, n3);
                    if v.degree() >= 3
                        && v.degree() <= 8
                        && (v.angle_sum(&t) - 2.0 * PI).abs() < 1e-9
                    {
                        brute.push(v);
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn dependence_examples() {
        assert!(is_linearly_dependent(&vt(1, 2, 0), &vt(1, 2, 0), &vt(3, 1, 4)));
        assert!(!is_linearly_dependent(&vt(1, 2, 1), &vt(2, 0, 3), &vt(3, 1, 0)));
        assert!(is_linearly_dependent(&vt(1, 2, 1), &vt(2, 0, 3), &vt(3, 2, 4)));
    }

    #[test]
    fn deg345_table() {
        let [d3, d4, d5] = deg345_admissible_convex();
        let mut w3 = vec![
            vt(1, 2, 0),
            vt(0, 3, 0),
            vt(1, 1, 1),
            vt(0, 2, 1),
            vt(1, 0, 2),
            vt(0, 1, 2),
            vt(0, 0, 3),
        ];
        w3.sort();
        assert_eq!(d3, w3);
        let mut w4 = vec![
            vt(3, 1, 0),
            vt(2, 2, 0),
            vt(1, 3, 0),
            vt(3, 0, 1),
            vt(2, 1, 1),
            vt(1, 2, 1),
            vt(2, 0, 2),
            vt(1, 1, 2),
            vt(1, 0, 3),
            vt(0, 1, 3),
            vt(0, 0, 4),
        ];
        w4.sort();
        assert_eq!(d4, w4);
        let mut w5 = vec![
            vt(5, 0, 0),
            vt(4, 1, 0),
            vt(4, 0, 1),
            vt(3, 0, 2),
            vt(2, 1, 2),
            vt(2, 0, 3),
            vt(1, 1, 3),
            vt(1, 0, 4),
            vt(0, 1, 4),
            vt(0, 0, 5),
        ];
        w5.sort();
        assert_eq!(d5, w5);
        // α²β can never reach 2π under the constraints
        assert!(!d3.contains(&vt(2, 1, 0)));
    }
}
