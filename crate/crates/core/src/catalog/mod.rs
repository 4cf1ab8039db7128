//! The protoset catalog: the two 1-parameter families, the antiprism
//! sequence, the icosahedral family, and the 26 sporadic protosets with
//! their appendix closed forms.
//!
//! Every closed form is cross-checked at construction time against an
//! independent bracketed bisection solve of the Eq. (7) residual, so a wrong
//! branch choice cannot survive construction.

pub mod forms;

use crate::error::{Error, Result};
use crate::sphtrig::{
    arccot, bisect, edge_from_alpha, residuals, AngleTriple, EdgeLength,
};
use crate::vertexcomb::{avc, Avc, VertexType};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Which classification family a protoset belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Family {
    Prism { alpha: f64 },
    Cuboct { alpha: f64 },
    Antiprism { n: u32 },
    Icosahedral,
    Sporadic { id: String },
}

impl Family {
    /// Stable display name, used by the JSON exports.
    pub fn label(&self) -> String {
        match self {
            Family::Prism { .. } => "prism".into(),
            Family::Cuboct { .. } => "cuboct".into(),
            Family::Antiprism { n } => format!("antiprism(n={n})"),
            Family::Icosahedral => "icosahedral".into(),
            Family::Sporadic { id } => format!("sporadic {id}"),
        }
    }
}

/// Number of tilings a protoset admits, when the classification states it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TilingCount {
    Known(u32),
    Unknown,
}

/// A table value in π-units: either an exact fraction or 4 truncated
/// decimals (`Trunc(4158)` means the value lies in `[0.4158, 0.4159)·π`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiValue {
    Frac(i64, i64),
    Trunc(u16),
}

impl PiValue {
    /// Whether `x` (radians) matches this table entry: exact fractions to
    /// `1e−12`, decimals by the truncation convention.
    pub fn matches(&self, x: f64) -> bool {
        let r = x / PI;
        match *self {
            PiValue::Frac(p, q) => (r - p as f64 / q as f64).abs() < 1e-12,
            PiValue::Trunc(d) => {
                let lo = d as f64 / 1e4;
                r >= lo && r < lo + 1e-4
            }
        }
    }
}

impl std::fmt::Display for PiValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            PiValue::Frac(p, 1) => write!(f, "{p}"),
            PiValue::Frac(p, q) => write!(f, "{p}/{q}"),
            PiValue::Trunc(d) => write!(f, "0.{d:04}"),
        }
    }
}

/// The four table columns `(α, β, γ; a)` in π-units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableDigits {
    pub alpha: PiValue,
    pub beta: PiValue,
    pub gamma: PiValue,
    pub a: PiValue,
}

/// A protoset: tile angles, edge length, family provenance, and the
/// classification's vertex/tiling data for the row.
#[derive(Debug, Clone, PartialEq)]
pub struct Protoset {
    pub angles: AngleTriple,
    pub a: EdgeLength,
    pub family: Family,
    pub expected_avcs: Vec<(Avc, TilingCount)>,
    pub table_digits: Option<TableDigits>,
    /// The row's "all vertices" column as vertex types.
    pub table_vertex_types: Vec<VertexType>,
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// Eq. (7) residual `cot(β/2)cot(γ/2) − cot α·cot(α/2)`.
fn r2(t: &AngleTriple) -> f64 {
    residuals(t).1
}

impl Protoset {
    /// Builds and checks the type invariants: angle bounds, Eq. (7)
    /// residual < 1e−9, and agreement of the two `cos a` forms.
    fn build(
        angles: AngleTriple,
        family: Family,
        expected_avcs: Vec<(Avc, TilingCount)>,
        table_digits: Option<TableDigits>,
        table_vertex_types: Vec<VertexType>,
    ) -> Result<Protoset> {
        angles.check_bounds()?;
        let res = r2(&angles);
        if res.abs() >= 1e-9 {
            return Err(Error::Domain(format!(
                "protoset residual {res:.3e} out of tolerance"
            )));
        }
        let a = edge_from_alpha(angles.alpha)?;
        let cos_a_rhombus = cot(angles.beta / 2.0) * cot(angles.gamma / 2.0);
        if (a.a.cos() - cos_a_rhombus).abs() >= 1e-9 {
            return Err(Error::Domain("edge length inconsistent between tiles".into()));
        }
        Ok(Protoset {
            angles,
            a,
            family,
            expected_avcs,
            table_digits,
            table_vertex_types,
        })
    }
}

/// Verification summary for a protoset; all fields are evidence, failures
/// are carried rather than raised.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub bounds_ok: bool,
    pub r1_residual: f64,
    pub r2_residual: f64,
    /// |a from the triangle − a from the rhombus| in radians.
    pub a_mismatch: f64,
    /// Angle-sum defect |Σ − 2π| for every vertex type in the expected AVCs.
    pub avc_defects: Vec<(VertexType, f64)>,
    /// Whether all four table columns match (None if the row has none).
    pub digits_ok: Option<bool>,
}

impl VerificationReport {
    pub fn all_green(&self) -> bool {
        self.bounds_ok
            && self.r1_residual.abs() < 1e-9
            && self.r2_residual.abs() < 1e-9
            && self.a_mismatch < 1e-9
            && self.avc_defects.iter().all(|(_, d)| *d < 1e-6)
            && self.digits_ok != Some(false)
    }
}

/// Aggregates Eq. (5)–(7) residuals, table matching and AVC angle sums.
pub fn verify_protoset(p: &Protoset) -> VerificationReport {
    let (r1, r2v) = residuals(&p.angles);
    let cos_a_rhombus = cot(p.angles.beta / 2.0) * cot(p.angles.gamma / 2.0);
    let a_mismatch = (p.a.a - cos_a_rhombus.clamp(-1.0, 1.0).acos()).abs();
    let mut avc_defects = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (avc, _) in &p.expected_avcs {
        for vt in avc.keys() {
            if seen.insert(*vt) {
                avc_defects.push((*vt, (vt.angle_sum(&p.angles) - 2.0 * PI).abs()));
            }
        }
    }
    let digits_ok = p.table_digits.map(|d| {
        d.alpha.matches(p.angles.alpha)
            && d.beta.matches(p.angles.beta)
            && d.gamma.matches(p.angles.gamma)
            && d.a.matches(p.a.a)
    });
    VerificationReport {
        bounds_ok: p.angles.check_bounds().is_ok(),
        r1_residual: r1,
        r2_residual: r2v,
        a_mismatch,
        avc_defects,
        digits_ok,
    }
}

/// The prism-like family: `α ∈ [arccos(1/8), π)`, `γ = 2π−α−β`, with the
/// closed form `β = 2·arccot(−(√(−8cos α+1)+2cos α−1)/(2 sin α))`; vertices
/// `6αβγ`.
pub fn prism_family(alpha: f64) -> Result<Protoset> {
    let lo = (1.0f64 / 8.0).acos();
    if !(alpha >= lo && alpha < PI) {
        return Err(Error::Domain(format!(
            "prism family needs alpha in [arccos(1/8), π), got {alpha}"
        )));
    }
    let (s, c) = alpha.sin_cos();
    // −8cos α+1 has a double root at the interval's left end; snap rounding
    // noise to zero so the endpoint reproduces β = γ = arccos(−3/4) exactly
    let radicand = (-8.0 * c + 1.0).max(0.0);
    let radicand = if radicand < 1e-14 { 0.0 } else { radicand };
    let beta = 2.0 * arccot(-(radicand.sqrt() + 2.0 * c - 1.0) / (2.0 * s));
    let gamma = 2.0 * PI - alpha - beta;
    Protoset::build(
        AngleTriple::new(alpha, beta, gamma),
        Family::Prism { alpha },
        vec![(avc(&[(1, 1, 1, 6)]), TilingCount::Known(1))],
        None,
        vec![VertexType::new(1, 1, 1)],
    )
}

/// The cuboctahedral family: `α ∈ [arccos(1/3), π/2)`, `γ = 2π−2α−β`;
/// vertices `12α²βγ`, two tilings (cuboctahedron and orthobicupola).
pub fn cuboct_family(alpha: f64) -> Result<Protoset> {
    let lo = (1.0f64 / 3.0).acos();
    if !(alpha >= lo && alpha < PI / 2.0) {
        return Err(Error::Domain(format!(
            "cuboctahedral family needs alpha in [arccos(1/3), π/2), got {alpha}"
        )));
    }
    let (s, c) = alpha.sin_cos();
    // (3cos α−1) vanishes at the interval's left end; snap rounding noise
    let num = (1.0 - 3.0 * c).max(0.0);
    let num = if num < 1e-14 { 0.0 } else { num };
    let beta = 2.0
        * arccot(
            -(s * (num / (1.0 - c)).sqrt() + (2.0 * alpha).cos() + c)
                / (2.0 * alpha).sin(),
        );
    let gamma = 2.0 * PI - 2.0 * alpha - beta;
    Protoset::build(
        AngleTriple::new(alpha, beta, gamma),
        Family::Cuboct { alpha },
        vec![(avc(&[(2, 1, 1, 12)]), TilingCount::Known(2))],
        None,
        vec![VertexType::new(2, 1, 1)],
    )
}

/// Solves the antiprism equation for a given `n` and returns
/// `(alpha, beta, gamma)`.
///
/// With `γ = 2π−2β` and `α = (2n−1)β − (n−1)·2π`, the protoset equation is
/// `cos α·(2cos β − 1) − cos β = 0` with a unique root in
/// `(π − (2π/3)/(2n−1), π − (π/2)/(2n−1))`. Substituting
/// `u = (2n−1)(β−π) ∈ (−2π/3, −π/2)` (so `α = π+u`) keeps the trigonometry
/// well-conditioned for large `n`.
pub fn antiprism_angles(n: u32) -> Result<AngleTriple> {
    let m = (2 * n - 1) as f64;
    let f = |u: f64| {
        let cos_alpha = (PI + u).cos();
        let cos_beta = (PI + u / m).cos();
        cos_alpha * (2.0 * cos_beta - 1.0) - cos_beta
    };
    let u = bisect(f, -2.0 * PI / 3.0 + 1e-12, -PI / 2.0 - 1e-12)?;
    let alpha = PI + u;
    let beta = PI + u / m;
    let gamma = -2.0 * u / m;
    Ok(AngleTriple::new(alpha, beta, gamma))
}

/// The generalized anti-triangular prism sequence, `n ≥ 3`:
/// `T(2a³, (6n−3)a⁴; 6αβγⁿ, (6n−6)β²γ)`.
pub fn antiprism_family(n: u32) -> Result<Protoset> {
    if n < 3 {
        return Err(Error::Domain(format!("antiprism family needs n ≥ 3, got {n}")));
    }
    let angles = antiprism_angles(n)?;
    Protoset::build(
        angles,
        Family::Antiprism { n },
        vec![(
            avc(&[(1, 1, n, 6), (0, 2, 1, 6 * n - 6)]),
            TilingCount::Known(1),
        )],
        None,
        vec![VertexType::new(1, 1, n), VertexType::new(0, 2, 1)],
    )
}

/// The 12 vertex types of the icosahedral protoset `(2π/5, 4π/5, 2π/5)`.
fn icosahedral_types() -> Vec<VertexType> {
    vec![
        VertexType::new(1, 2, 0),
        VertexType::new(0, 2, 1),
        VertexType::new(3, 1, 0),
        VertexType::new(2, 1, 1),
        VertexType::new(1, 1, 2),
        VertexType::new(0, 1, 3),
        VertexType::new(5, 0, 0),
        VertexType::new(4, 0, 1),
        VertexType::new(3, 0, 2),
        VertexType::new(2, 0, 3),
        VertexType::new(1, 0, 4),
        VertexType::new(0, 0, 5),
    ]
}

/// The icosahedral protoset `(2π/5, 4π/5, 2π/5)` with `β = 2α = 2γ`; its
/// tilings are icosahedra with `m` disjoint adjacent triangle pairs merged
/// into rhombi, `1 ≤ m ≤ 9`.
pub fn icosahedral_protoset() -> Protoset {
    Protoset::build(
        AngleTriple::new(2.0 * PI / 5.0, 4.0 * PI / 5.0, 2.0 * PI / 5.0),
        Family::Icosahedral,
        vec![],
        Some(TableDigits {
            alpha: PiValue::Frac(2, 5),
            beta: PiValue::Frac(4, 5),
            gamma: PiValue::Frac(2, 5),
            a: PiValue::Trunc(3524),
        }),
        icosahedral_types(),
    )
    .expect("icosahedral protoset is admissible")
}

/// One sporadic classification-table row: identity, angle recipe, table digits, AVCs.
struct Row {
    id: &'static str,
    /// `(f△, f◊)` as printed in the table (informational).
    faces: &'static str,
    digits: TableDigits,
    avcs: &'static [(&'static [(u32, u32, u32, u32)], TilingCount)],
    recipe: Recipe,
}

enum Recipe {
    /// Exact rational multiples of π.
    Exact { alpha: (i64, i64), beta: (i64, i64), gamma: (i64, i64) },
    /// One unknown angle from a closed form; the other two are affine in it.
    /// `lin[i] = (c, k)` meaning `angleᵢ = c + k·u`.
    Radical {
        closed: fn() -> Result<f64>,
        /// Table digits of the unknown, for the independent bracket.
        unknown_digits: u16,
        lin: [(f64, f64); 3],
    },
}

const K1: TilingCount = TilingCount::Known(1);

fn rows() -> Vec<Row> {
    use PiValue::{Frac, Trunc};
    use Recipe::{Exact, Radical};
    let d = |alpha, beta, gamma, a| TableDigits { alpha, beta, gamma, a };
    vec![
        Row {
            id: "4,1",
            faces: "(4,1)",
            digits: d(Frac(1, 2), Frac(1, 1), Frac(1, 1), Frac(1, 2)),
            avcs: &[(&[(2, 1, 0, 4), (4, 0, 0, 1)], K1)],
            recipe: Exact { alpha: (1, 2), beta: (1, 1), gamma: (1, 1) },
        },
        Row {
            id: "6,3",
            faces: "(6,3)",
            digits: d(Frac(1, 2), Frac(1, 1), Frac(1, 6), Frac(1, 2)),
            avcs: &[(&[(2, 1, 0, 6), (3, 0, 3, 2)], K1)],
            recipe: Exact { alpha: (1, 2), beta: (1, 1), gamma: (1, 6) },
        },
        Row {
            id: "4,4.1",
            faces: "(4,4) and (6,2)",
            digits: d(Frac(1, 2), Frac(1, 1), Frac(1, 4), Frac(1, 2)),
            avcs: &[
                (&[(1, 1, 2, 4), (2, 1, 0, 4)], K1),
                (&[(2, 1, 0, 4), (3, 0, 2, 2), (4, 0, 0, 1)], K1),
            ],
            recipe: Exact { alpha: (1, 2), beta: (1, 1), gamma: (1, 4) },
        },
        Row {
            id: "4,2",
            faces: "(4,2), (4,2) and (6,1)",
            digits: d(Frac(1, 2), Frac(1, 1), Frac(1, 2), Frac(1, 2)),
            avcs: &[
                (&[(2, 1, 0, 4), (2, 0, 2, 2)], K1),
                (&[(1, 1, 1, 2), (2, 1, 0, 2), (3, 0, 1, 2)], K1),
                (&[(2, 1, 0, 2), (3, 0, 1, 2), (4, 0, 0, 2)], K1),
            ],
            recipe: Exact { alpha: (1, 2), beta: (1, 1), gamma: (1, 2) },
        },
        Row {
            id: "8,2",
            faces: "(8,2)",
            digits: d(Trunc(4335), Trunc(6992), Trunc(6992), Trunc(4158)),
            avcs: &[(&[(3, 1, 0, 8)], K1)],
            recipe: Radical {
                closed: forms::beta_8_2,
                unknown_digits: 6992,
                lin: [(2.0 * PI / 3.0, -1.0 / 3.0), (0.0, 1.0), (0.0, 1.0)],
            },
        },
        Row {
            id: "32,6.1",
            faces: "(32,6)",
            digits: d(Trunc(3621), Trunc(5513), Trunc(5513), Trunc(2427)),
            avcs: &[(&[(4, 1, 0, 24)], K1)],
            recipe: Radical {
                closed: forms::beta_32_6_1,
                unknown_digits: 5513,
                lin: [(PI / 2.0, -1.0 / 4.0), (0.0, 1.0), (0.0, 1.0)],
            },
        },
        Row {
            id: "8,18",
            faces: "(8,18)",
            digits: d(Trunc(3596), Trunc(5467), Trunc(5467), Trunc(2326)),
            avcs: &[(&[(1, 3, 0, 24)], TilingCount::Known(2))],
            recipe: Radical {
                closed: forms::beta_8_18,
                unknown_digits: 5467,
                lin: [(2.0 * PI, -3.0), (0.0, 1.0), (0.0, 1.0)],
            },
        },
        Row {
            id: "4,3",
            faces: "(4,3)",
            digits: d(Frac(4, 9), Frac(7, 9), Frac(2, 3), Trunc(4326)),
            avcs: &[(&[(1, 2, 0, 3), (3, 0, 1, 3), (0, 0, 3, 1)], K1)],
            recipe: Exact { alpha: (4, 9), beta: (7, 9), gamma: (2, 3) },
        },
        Row {
            id: "4,4.2",
            faces: "(4,4)",
            digits: d(Trunc(4296), Trunc(7851), Trunc(5703), Trunc(4094)),
            avcs: &[(&[(1, 2, 0, 4), (2, 0, 2, 4)], K1)],
            recipe: Radical {
                closed: forms::beta_4_4_2,
                unknown_digits: 7851,
                lin: [(2.0 * PI, -2.0), (0.0, 1.0), (-PI, 2.0)],
            },
        },
        Row {
            id: "8,3",
            faces: "(8,3)",
            digits: d(Trunc(4195), Trunc(7412), Trunc(5804), Trunc(3918)),
            avcs: &[(&[(3, 1, 0, 6), (2, 0, 2, 3)], K1)],
            recipe: Radical {
                closed: forms::beta_8_3,
                unknown_digits: 7412,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (PI / 3.0, 1.0 / 3.0),
                ],
            },
        },
        Row {
            id: "4,12",
            faces: "(4,12)",
            digits: d(Trunc(3754), Frac(2, 3), Trunc(4789), Trunc(2884)),
            avcs: &[(&[(1, 1, 2, 12), (0, 3, 0, 4)], K1)],
            recipe: Radical {
                closed: forms::gamma_4_12,
                unknown_digits: 4789,
                lin: [(4.0 * PI / 3.0, -2.0), (2.0 * PI / 3.0, 0.0), (0.0, 1.0)],
            },
        },
        Row {
            id: "8,12",
            faces: "(8,12)",
            digits: d(Trunc(3701), Trunc(6298), Frac(1, 2), Trunc(2716)),
            avcs: &[(&[(2, 2, 0, 6), (1, 1, 2, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_8_12,
                unknown_digits: 6298,
                lin: [(PI, -1.0), (0.0, 1.0), (PI / 2.0, 0.0)],
            },
        },
        Row {
            id: "20,6",
            faces: "(20,6)",
            digits: d(Trunc(3807), Trunc(8578), Trunc(2385), Trunc(3040)),
            avcs: &[(&[(3, 1, 0, 12), (4, 0, 2, 6)], K1)],
            recipe: Radical {
                closed: forms::beta_20_6,
                unknown_digits: 8578,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (-PI / 3.0, 2.0 / 3.0),
                ],
            },
        },
        Row {
            id: "8,24",
            faces: "(8,24)",
            digits: d(Trunc(3541), Trunc(5729), Frac(1, 2), Trunc(2082)),
            avcs: &[(&[(1, 2, 1, 24), (0, 0, 4, 6)], K1)],
            recipe: Radical {
                closed: forms::alpha_8_24,
                unknown_digits: 3541,
                lin: [(0.0, 1.0), (3.0 * PI / 4.0, -0.5), (PI / 2.0, 0.0)],
            },
        },
        Row {
            id: "20,12.1",
            faces: "(20,12)",
            digits: d(Trunc(3614), Trunc(6385), Trunc(4577), Trunc(2401)),
            avcs: &[(&[(2, 2, 0, 12), (3, 0, 2, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_20_12_1,
                unknown_digits: 6385,
                lin: [(PI, -1.0), (0.0, 1.0), (-PI / 2.0, 1.5)],
            },
        },
        Row {
            id: "20,12.2",
            faces: "(20,12)",
            digits: d(Trunc(3733), Trunc(8798), Trunc(1866), Trunc(2820)),
            avcs: &[(&[(3, 1, 0, 12), (2, 1, 2, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_20_12_2,
                unknown_digits: 8798,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (PI / 3.0, -1.0 / 6.0),
                ],
            },
        },
        Row {
            id: "20,24.1",
            faces: "(20,24)",
            digits: d(Trunc(3510), Trunc(5877), Trunc(4734), Trunc(1927)),
            avcs: &[(&[(1, 2, 1, 24), (3, 0, 2, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_20_24_1,
                unknown_digits: 5877,
                lin: [(-2.0 * PI, 4.0), (0.0, 1.0), (4.0 * PI, -6.0)],
            },
        },
        Row {
            id: "44,12",
            faces: "(44,12)",
            digits: d(Trunc(3590), Trunc(9229), Trunc(1024), Trunc(2301)),
            avcs: &[(&[(3, 1, 0, 24), (5, 0, 2, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_44_12,
                unknown_digits: 9229,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (-2.0 * PI / 3.0, 5.0 / 6.0),
                ],
            },
        },
        Row {
            id: "20,60",
            faces: "(20,60)",
            digits: d(Trunc(3421), Trunc(6289), Frac(2, 5), Trunc(1379)),
            avcs: &[(&[(1, 2, 1, 60), (0, 0, 5, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_20_60,
                unknown_digits: 6289,
                lin: [(8.0 * PI / 5.0, -2.0), (0.0, 1.0), (2.0 * PI / 5.0, 0.0)],
            },
        },
        Row {
            id: "16,6",
            faces: "(16,6)",
            digits: d(Trunc(3861), Trunc(8415), Trunc(2805), Trunc(3188)),
            avcs: &[(&[(3, 1, 0, 12), (3, 0, 3, 4)], K1)],
            recipe: Radical {
                closed: forms::beta_16_6,
                unknown_digits: 8415,
                lin: [(2.0 * PI / 3.0, -1.0 / 3.0), (0.0, 1.0), (0.0, 1.0 / 3.0)],
            },
        },
        Row {
            id: "32,12",
            faces: "(32,12)",
            digits: d(Trunc(3650), Trunc(9049), Trunc(1349), Trunc(2536)),
            avcs: &[(&[(3, 1, 0, 24), (4, 0, 4, 6)], K1)],
            recipe: Radical {
                closed: forms::beta_32_12,
                unknown_digits: 9049,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (-PI / 6.0, 1.0 / 3.0),
                ],
            },
        },
        Row {
            id: "80,30",
            faces: "(80,30)",
            digits: d(Trunc(3480), Trunc(9558), Trunc(519), Trunc(1766)),
            avcs: &[(&[(3, 1, 0, 60), (5, 0, 5, 12)], K1)],
            recipe: Radical {
                closed: forms::beta_80_30,
                unknown_digits: 9558,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (-4.0 * PI / 15.0, 1.0 / 3.0),
                ],
            },
        },
        Row {
            id: "20,36",
            faces: "(20,36)",
            digits: d(Trunc(3465), Trunc(6089), Trunc(4356), Trunc(1675)),
            avcs: &[(&[(1, 2, 1, 36), (2, 0, 3, 12)], TilingCount::Known(2))],
            recipe: Radical {
                closed: forms::beta_20_36,
                unknown_digits: 6089,
                lin: [(4.0 * PI, -6.0), (0.0, 1.0), (-2.0 * PI, 4.0)],
            },
        },
        Row {
            id: "32,6.2",
            faces: "(32,6)",
            digits: d(Trunc(3686), Trunc(8939), Trunc(1566), Trunc(2665)),
            avcs: &[(&[(3, 1, 0, 12), (5, 0, 1, 12)], TilingCount::Known(5))],
            recipe: Radical {
                closed: forms::beta_32_6_2,
                unknown_digits: 8939,
                lin: [
                    (2.0 * PI / 3.0, -1.0 / 3.0),
                    (0.0, 1.0),
                    (-4.0 * PI / 3.0, 5.0 / 3.0),
                ],
            },
        },
        Row {
            id: "20,24.2",
            faces: "(20,24)",
            digits: d(Trunc(3579), Trunc(8210), Trunc(2315), Trunc(2257)),
            avcs: &[
                (&[(1, 2, 0, 12), (2, 1, 2, 24)], TilingCount::Unknown),
                (&[(1, 2, 0, 13), (3, 0, 4, 1), (2, 1, 2, 22)], TilingCount::Unknown),
                (&[(1, 2, 0, 14), (3, 0, 4, 2), (2, 1, 2, 20)], TilingCount::Unknown),
                (&[(1, 2, 0, 15), (3, 0, 4, 3), (2, 1, 2, 18)], TilingCount::Unknown),
                (&[(1, 2, 0, 16), (3, 0, 4, 4), (2, 1, 2, 16)], TilingCount::Unknown),
                (&[(1, 2, 0, 17), (3, 0, 4, 5), (2, 1, 2, 14)], TilingCount::Unknown),
                (&[(1, 2, 0, 18), (3, 0, 4, 6), (2, 1, 2, 12)], TilingCount::Unknown),
                (&[(1, 2, 0, 19), (3, 0, 4, 7), (2, 1, 2, 10)], TilingCount::Unknown),
                (&[(1, 2, 0, 20), (3, 0, 4, 8), (2, 1, 2, 8)], TilingCount::Unknown),
                (&[(1, 2, 0, 21), (3, 0, 4, 9), (2, 1, 2, 6)], TilingCount::Unknown),
                (&[(1, 2, 0, 22), (3, 0, 4, 10), (2, 1, 2, 4)], TilingCount::Unknown),
                (&[(1, 2, 0, 23), (3, 0, 4, 11), (2, 1, 2, 2)], TilingCount::Unknown),
            ],
            recipe: Radical {
                closed: forms::beta_20_24_2,
                unknown_digits: 8210,
                lin: [(2.0 * PI, -2.0), (0.0, 1.0), (-PI, 1.5)],
            },
        },
    ]
}

/// All sporadic row ids, in table order (the icosahedral row is exposed via
/// [`icosahedral_protoset`] and the id `"ico"`).
pub fn sporadic_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = rows().iter().map(|r| r.id).collect();
    ids.push("ico");
    ids
}

fn angles_from_lin(lin: &[(f64, f64); 3], u: f64) -> AngleTriple {
    AngleTriple::new(
        lin[0].0 + lin[0].1 * u,
        lin[1].0 + lin[1].1 * u,
        lin[2].0 + lin[2].1 * u,
    )
}

/// Independent solve of a radical row: bisection of the Eq. (7) residual as
/// a function of the unknown, bracketed by the table's truncated digits.
fn bisect_row(lin: &[(f64, f64); 3], unknown_digits: u16) -> Result<f64> {
    let center = unknown_digits as f64 / 1e4 * PI;
    let f = |u: f64| r2(&angles_from_lin(lin, u));
    let mut half = 2e-4 * PI;
    while half <= 64e-4 * PI {
        // scan for a sign change inside the window
        let n = 64;
        for i in 0..n {
            let lo = center - half + 2.0 * half * i as f64 / n as f64;
            let hi = center - half + 2.0 * half * (i + 1) as f64 / n as f64;
            if f(lo).signum() != f(hi).signum() {
                return bisect(f, lo, hi);
            }
        }
        half *= 2.0;
    }
    Err(Error::Domain(format!(
        "no Eq. (7) root near table value 0.{unknown_digits:04}π"
    )))
}

fn build_row(row: &Row) -> Result<Protoset> {
    let angles = match &row.recipe {
        Recipe::Exact { alpha, beta, gamma } => AngleTriple::new(
            alpha.0 as f64 / alpha.1 as f64 * PI,
            beta.0 as f64 / beta.1 as f64 * PI,
            gamma.0 as f64 / gamma.1 as f64 * PI,
        ),
        Recipe::Radical { closed, unknown_digits, lin } => {
            let u_closed = closed()?;
            let u_bisect = bisect_row(lin, *unknown_digits)?;
            if (u_closed - u_bisect).abs() >= 1e-10 {
                return Err(Error::FormulaBranch(format!(
                    "row {}: closed form {u_closed} disagrees with bisection {u_bisect}",
                    row.id
                )));
            }
            angles_from_lin(lin, u_closed)
        }
    };
    let avcs = row
        .avcs
        .iter()
        .map(|(rows, c)| (avc(rows), *c))
        .collect::<Vec<_>>();
    let types = {
        let mut seen = std::collections::BTreeSet::new();
        for (a, _) in &avcs {
            seen.extend(a.keys().copied());
        }
        seen.into_iter().collect()
    };
    Protoset::build(
        angles,
        Family::Sporadic { id: row.id.to_string() },
        avcs,
        Some(row.digits),
        types,
    )
}

/// A sporadic protoset by table id, e.g. `"8,2"`, `"20,12.1"`, `"ico"`.
///
/// Rows whose `(f△,f◊)` key appears twice in the table carry `.1`/`.2`
/// suffixes in table order: `4,4.*`, `32,6.*`, `20,12.*`, `20,24.*`.
pub fn sporadic(id: &str) -> Result<Protoset> {
    if id == "ico" || id == "icosahedral" || id == "20-2m,m" {
        return Ok(icosahedral_protoset());
    }
    let all = rows();
    if let Some(row) = all.iter().find(|r| r.id == id) {
        return build_row(row);
    }
    let candidates: Vec<&str> = all
        .iter()
        .map(|r| r.id)
        .filter(|rid| rid.starts_with(id) && rid[id.len()..].starts_with('.'))
        .collect();
    if candidates.is_empty() {
        Err(Error::CatalogMiss(id.to_string()))
    } else {
        Err(Error::CatalogMiss(format!(
            "{id} is ambiguous; candidates: {}",
            candidates.join(", ")
        )))
    }
}

/// All 26 sporadic protosets in table order.
pub fn all_sporadic() -> Result<Vec<Protoset>> {
    let mut out = Vec::new();
    for row in rows() {
        out.push(build_row(&row)?);
    }
    // insert the icosahedral row at its table position (before the flip row)
    let flip = out.pop().unwrap();
    out.push(icosahedral_protoset());
    out.push(flip);
    Ok(out)
}

/// `|closed − bisection|` per radical row, plus family spot checks; the
/// anti-hallucination evidence behind every catalog value.
pub fn closed_form_cross_checks() -> Result<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for row in rows() {
        if let Recipe::Radical { closed, unknown_digits, lin } = &row.recipe {
            let diff = (closed()? - bisect_row(lin, *unknown_digits)?).abs();
            out.push((row.id.to_string(), diff));
        }
    }
    // family closed forms against a local Eq. (7) bisection around them;
    // sampled away from the left endpoint, where the root is a tangency
    for alpha in [(1.0f64 / 8.0).acos() + 0.05, 1.5, 2.0, 2.8] {
        let p = prism_family(alpha)?;
        let f = |beta: f64| {
            r2(&AngleTriple::new(alpha, beta, 2.0 * PI - alpha - beta))
        };
        let root = bisect(f, p.angles.beta - 1e-3, p.angles.beta + 1e-3)?;
        out.push((format!("prism@{alpha:.3}"), (root - p.angles.beta).abs()));
    }
    for alpha in [(1.0f64 / 3.0).acos() + 0.05, 1.3, 1.5] {
        let p = cuboct_family(alpha)?;
        let f = |beta: f64| {
            r2(&AngleTriple::new(alpha, beta, 2.0 * PI - 2.0 * alpha - beta))
        };
        let root = bisect(f, p.angles.beta - 1e-3, p.angles.beta + 1e-3)?;
        out.push((format!("cuboct@{alpha:.3}"), (root - p.angles.beta).abs()));
    }
    Ok(out)
}

/// A solution family of the rationality (cyclotomic) equation.
#[derive(Debug, Clone)]
pub struct RationalProtoset {
    pub descriptor: &'static str,
    /// A concrete instance (the family member for symbolic rows).
    pub instance: AngleTriple,
    /// True for the 1-parameter `(α, 2α, α)` family.
    pub symbolic: bool,
}

/// The modulus of `x²y + x²z − xyz − xy − xz − x + y + z` at
/// `x = e^{iα}, y = e^{iβ}, z = e^{iγ}`.
pub fn cyclotomic_residual(t: &AngleTriple) -> f64 {
    use num_complex::Complex64;
    let e = |v: f64| Complex64::new(0.0, v).exp();
    let (x, y, z) = (e(t.alpha), e(t.beta), e(t.gamma));
    (x * x * y + x * x * z - x * y * z - x * y - x * z - x + y + z).norm()
}

/// The three rational solution families of the vertex rationality analysis:
/// `(4/9, 7/9, 2/3)π`, `(3/7, 17/21, 11/21)π`, and the `(α, 2α, α)` family.
pub fn rational_protosets() -> Vec<RationalProtoset> {
    vec![
        RationalProtoset {
            descriptor: "(4/9, 7/9, 2/3)π",
            instance: AngleTriple::new(4.0 * PI / 9.0, 7.0 * PI / 9.0, 2.0 * PI / 3.0),
            symbolic: false,
        },
        RationalProtoset {
            descriptor: "(3/7, 17/21, 11/21)π",
            instance: AngleTriple::new(
                3.0 * PI / 7.0,
                17.0 * PI / 21.0,
                11.0 * PI / 21.0,
            ),
            symbolic: false,
        },
        RationalProtoset {
            descriptor: "(α, 2α, α)",
            instance: AngleTriple::new(2.0 * PI / 5.0, 4.0 * PI / 5.0, 2.0 * PI / 5.0),
            symbolic: true,
        },
    ]
}

/// Versioned JSON export of the whole catalog.
pub fn export_json() -> Result<serde_json::Value> {
    use serde_json::json;
    let proto_json = |p: &Protoset, faces: Option<&str>| -> serde_json::Value {
        let digits = p.table_digits.map(|d| {
            json!({
                "alpha": d.alpha.to_string(),
                "beta": d.beta.to_string(),
                "gamma": d.gamma.to_string(),
                "a": d.a.to_string(),
            })
        });
        let avcs: Vec<_> = p
            .expected_avcs
            .iter()
            .map(|(a, c)| {
                json!({
                    "avc": a.iter()
                        .map(|(vt, n)| json!([vt.n1, vt.n2, vt.n3, n]))
                        .collect::<Vec<_>>(),
                    "tilings": match c {
                        TilingCount::Known(k) => json!(k),
                        TilingCount::Unknown => json!("unknown"),
                    },
                })
            })
            .collect();
        json!({
            "family": p.family.label(),
            "faces": faces,
            "angles_pi": [p.angles.alpha / PI, p.angles.beta / PI, p.angles.gamma / PI],
            "a_pi": p.a.a / PI,
            "table": digits,
            "expected_avcs": avcs,
            "vertex_types": p.table_vertex_types.iter()
                .map(|vt| json!([vt.n1, vt.n2, vt.n3]))
                .collect::<Vec<_>>(),
        })
    };
    let mut sporadic_rows = Vec::new();
    for row in rows() {
        let p = build_row(&row)?;
        let mut v = proto_json(&p, Some(row.faces));
        v["id"] = json!(row.id);
        sporadic_rows.push(v);
    }
    let ico = icosahedral_protoset();
    let mut v = proto_json(&ico, Some("(20-2m,m), 1 <= m <= 9"));
    v["id"] = json!("ico");
    sporadic_rows.insert(sporadic_rows.len() - 1, v);
    Ok(json!({
        "schema": "catalog/1",
        "families": [
            {"name": "prism", "alpha_range_pi": [(1.0f64/8.0).acos() / PI, 1.0],
             "description": "T(2a3,3a4; 6αβγ)"},
            {"name": "cuboct", "alpha_range_pi": [(1.0f64/3.0).acos() / PI, 0.5],
             "description": "T(8a3,6a4; 12α²βγ), 2 tilings"},
            {"name": "antiprism", "n": "3..",
             "description": "T(2a3,(6n-3)a4; 6αβγⁿ,(6n-6)β²γ)"},
        ],
        "sporadic": sporadic_rows,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_26_rows_match_table_digits() {
        let all = all_sporadic().unwrap();
        assert_eq!(all.len(), 26);
        for p in &all {
            let report = verify_protoset(p);
            assert!(
                report.all_green(),
                "row {:?} not green: {report:?}",
                p.family
            );
            assert_eq!(report.digits_ok, Some(true), "digits for {:?}", p.family);
        }
    }

    #[test]
    fn sporadic_id_lookup() {
        assert!(sporadic("8,2").is_ok());
        assert!(sporadic("20,12.1").is_ok());
        assert!(sporadic("ico").is_ok());
        assert!(matches!(sporadic("nope"), Err(Error::CatalogMiss(_))));
        // ambiguous bare key
        assert!(matches!(sporadic("20,12"), Err(Error::CatalogMiss(_))));
    }

    #[test]
    fn sporadic_8_2_digits() {
        let p = sporadic("8,2").unwrap();
        let digits = p.table_digits.unwrap();
        assert_eq!(digits.alpha, PiValue::Trunc(4335));
        assert!(digits.alpha.matches(p.angles.alpha));
        assert!(digits.a.matches(p.a.a));
    }

    #[test]
    fn sporadic_20_24_sextic() {
        let p = sporadic("20,24.1").unwrap();
        let z = 2.0 * p.angles.beta.cos();
        assert!((z - -0.5444).abs() < 1e-4);
        assert!(forms::sextic_20_24(z).abs() < 1e-8);
    }

    #[test]
    fn prism_endpoints() {
        let p = prism_family((1.0f64 / 8.0).acos()).unwrap();
        let want = (-0.75f64).acos();
        assert!((p.angles.beta - want).abs() < 1e-12);
        assert!((p.angles.gamma - want).abs() < 1e-12);
        assert!((p.a.a - (1.0f64 / 7.0).acos()).abs() < 1e-12);
        // concave end
        let p = prism_family(0.99 * PI).unwrap();
        assert!(p.angles.beta > PI);
        assert!(
            (p.angles.alpha + p.angles.beta + p.angles.gamma - 2.0 * PI).abs() < 1e-12
        );
        assert!(prism_family(1.0).is_err());
    }

    #[test]
    fn cuboct_endpoints() {
        let p = cuboct_family((1.0f64 / 3.0).acos()).unwrap();
        let want = (-1.0f64 / 3.0).acos();
        assert!((p.angles.beta - want).abs() < 1e-12);
        assert!((p.angles.gamma - want).abs() < 1e-12);
        assert!((p.a.a - PI / 3.0).abs() < 1e-12);
        let p = cuboct_family(0.45 * PI).unwrap();
        assert!(
            (2.0 * p.angles.alpha + p.angles.beta + p.angles.gamma - 2.0 * PI).abs()
                < 1e-12
        );
        assert!(cuboct_family(PI / 2.0).is_err());
    }

    #[test]
    fn antiprism_sequence() {
        let p3 = antiprism_family(3).unwrap();
        assert!(p3.angles.beta > 13.0 * PI / 15.0 && p3.angles.beta < 9.0 * PI / 10.0);
        let p4 = antiprism_family(4).unwrap();
        assert!(p4.angles.beta > p3.angles.beta);
        let big = antiprism_family(10_000).unwrap();
        assert!((big.angles.beta - PI).abs() < 1e-3 * PI);
        assert!((big.a.a - PI / 3.0).abs() < 1e-3 * PI);
        assert!(antiprism_family(2).is_err());
    }

    #[test]
    fn cross_checks_tight() {
        for (id, diff) in closed_form_cross_checks().unwrap() {
            assert!(diff < 1e-10, "{id}: {diff:.3e}");
        }
    }

    #[test]
    fn rational_families_zero_polynomial() {
        for fam in rational_protosets() {
            assert!(
                cyclotomic_residual(&fam.instance) < 1e-12,
                "{}",
                fam.descriptor
            );
        }
        // more members of the (α,2α,α) family
        for alpha in [0.4 * PI, 0.45 * PI, 1.2] {
            let t = AngleTriple::new(alpha, 2.0 * alpha, alpha);
            assert!(cyclotomic_residual(&t) < 1e-12);
        }
    }

    #[test]
    fn convex_beta_eq_gamma_rows_satisfy_b_r_corollary() {
        for p in all_sporadic().unwrap() {
            let t = &p.angles;
            if t.beta < PI && (t.beta - t.gamma).abs() < 1e-12 {
                assert!(t.alpha < t.beta && t.beta < 2.0 * t.alpha);
            }
        }
    }

    #[test]
    fn no_alpha_cubed_vertex() {
        let a3 = VertexType::new(3, 0, 0);
        for p in all_sporadic().unwrap() {
            for (avc, _) in &p.expected_avcs {
                assert!(!avc.contains_key(&a3));
            }
        }
    }

    #[test]
    fn perturbed_protoset_flagged() {
        let mut p = sporadic("8,2").unwrap();
        p.angles.beta += 1e-3;
        let report = verify_protoset(&p);
        assert!(!report.all_green());
        assert!(report.r2_residual.abs() >= 1e-9);
    }

    #[test]
    fn catalog_json_versioned() {
        let v = export_json().unwrap();
        assert_eq!(v["schema"], "catalog/1");
        assert_eq!(v["sporadic"].as_array().unwrap().len(), 26);
    }
}
