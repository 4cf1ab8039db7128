//! Spherical trigonometry tying the common edge length `a` to the tile
//! angles.
//!
//! For a regular spherical triangle with angle `α` and a spherical rhombus
//! with angles `β, γ`, both of edge length `a`, the spherical law of cosines
//! gives the single compatibility relation
//!
//! ```text
//! cos a = cot α · cot(α/2) = cot(β/2) · cot(γ/2)
//! ```
//!
//! Everything in this module is a direct consequence of that identity.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Tolerance classifying `β = π` as degenerate.
pub const DEGENERATE_TOL: f64 = 1e-9;

/// Absolute refinement target for bisection root-finding.
pub const BISECT_TOL: f64 = 1e-13;

/// Convexity class of the rhombus, decided by `β` against `π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convexity {
    Convex,
    Degenerate,
    Concave,
}

/// The three tile angles `(α, β, γ)` in radians, with `β ≥ γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleTriple {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AngleTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        AngleTriple { alpha, beta, gamma }
    }

    /// Checks the necessary angle bounds of any (a³,a⁴)-tiling:
    /// `π/3 < α < π`, `β ≥ γ > 0`, `β + γ > π`.
    pub fn check_bounds(&self) -> Result<()> {
        if !(self.alpha > PI / 3.0 && self.alpha < PI) {
            return Err(Error::Domain(format!(
                "alpha = {} outside (π/3, π)",
                self.alpha
            )));
        }
        if !(self.gamma > 0.0 && self.beta >= self.gamma - 1e-12) {
            return Err(Error::Domain(format!(
                "need beta >= gamma > 0, got beta = {}, gamma = {}",
                self.beta, self.gamma
            )));
        }
        if !(self.beta + self.gamma > PI) {
            return Err(Error::Domain(format!(
                "need beta + gamma > π, got {}",
                self.beta + self.gamma
            )));
        }
        Ok(())
    }

    pub fn convexity(&self) -> Convexity {
        if (self.beta - PI).abs() < DEGENERATE_TOL {
            Convexity::Degenerate
        } else if self.beta < PI {
            Convexity::Convex
        } else {
            Convexity::Concave
        }
    }
}

/// The common edge length `a` in radians; always in `(0, 2π/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeLength {
    pub a: f64,
}

/// Spherical areas (steradians) of the two tiles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TileAreas {
    /// `S△ = 3α − π`
    pub s_triangle: f64,
    /// `S◊ = 2(β+γ) − 2π`
    pub s_rhombus: f64,
}

/// `arccot: ℝ → (0, π)`, continuous across zero.
pub fn arccot(x: f64) -> f64 {
    (1.0f64).atan2(x)
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// Bisection on a bracketing interval, refined to [`BISECT_TOL`].
///
/// `f(lo)` and `f(hi)` must have opposite signs.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "bisect: no sign change on [{lo}, {hi}] (f: {flo:.3e} .. {fhi:.3e})"
        )));
    }
    while hi - lo > BISECT_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval no longer representable
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Edge length from the triangle angle: `a = arccos(cot α · cot(α/2))`.
///
/// Strictly increasing on `(π/3, π)` with range `(0, 2π/3)`.
pub fn edge_from_alpha(alpha: f64) -> Result<EdgeLength> {
    if !(alpha > PI / 3.0 && alpha < PI) {
        return Err(Error::Domain(format!("alpha = {alpha} outside (π/3, π)")));
    }
    Ok(EdgeLength {
        a: (cot(alpha) * cot(alpha / 2.0)).acos(),
    })
}

/// Inverse of [`edge_from_alpha`] by bracketed bisection.
pub fn alpha_from_edge(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 2.0 * PI / 3.0) {
        return Err(Error::Domain(format!("a = {a} outside (0, 2π/3)")));
    }
    // cot α · cot(α/2) − cos a is strictly decreasing in α on (π/3, π),
    // running from 1 down to −1/2, so the bracket below always works.
    let target = a.cos();
    bisect(
        |alpha| cot(alpha) * cot(alpha / 2.0) - target,
        PI / 3.0 + 1e-12,
        PI - 1e-12,
    )
}

/// Rhombus angle `β` from `γ` in the convex regime:
/// `β = 2·arccot(cos a · tan(γ/2))`; strictly decreasing in `γ` for fixed `a`.
pub fn beta_from_gamma(gamma: f64, a: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma < PI) {
        return Err(Error::Domain(format!("gamma = {gamma} outside (0, π)")));
    }
    if a.cos() <= 0.0 {
        return Err(Error::Domain(format!(
            "a = {a} not in the convex regime (need cos a > 0)"
        )));
    }
    Ok(2.0 * arccot(a.cos() * (gamma / 2.0).tan()))
}

/// Spherical-excess areas of the two tiles.
pub fn areas(t: &AngleTriple) -> TileAreas {
    TileAreas {
        s_triangle: 3.0 * t.alpha - PI,
        s_rhombus: 2.0 * (t.beta + t.gamma) - 2.0 * PI,
    }
}

/// Consistency residuals of the angle triple.
///
/// `r2` is `cot(β/2)·cot(γ/2) − cot α·cot(α/2)`; `r1` is the quadratic form
/// `q² + (1−q²)·cos α − q` evaluated at `q = cot(β/2)·cot(γ/2)`. An
/// admissible protoset drives both below `1e−9`.
pub fn residuals(t: &AngleTriple) -> (f64, f64) {
    let q = cot(t.beta / 2.0) * cot(t.gamma / 2.0);
    let r1 = q * q + (1.0 - q * q) * t.alpha.cos() - q;
    let r2 = q - cot(t.alpha) * cot(t.alpha / 2.0);
    (r1, r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_at_right_alpha_is_right() {
        let a = edge_from_alpha(PI / 2.0).unwrap().a;
        assert!((a - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn edge_at_icosahedral_alpha() {
        // α = 2π/5 → a = 0.3524π (4 truncated decimals in π-units)
        let a = edge_from_alpha(2.0 * PI / 5.0).unwrap().a;
        let t = (a / PI * 1e4).floor() / 1e4;
        assert_eq!(t, 0.3524);
    }

    #[test]
    fn edge_at_arccos_third() {
        // cos α = 1/3 → cot α·cot(α/2) = 1/2 → a = π/3
        let a = edge_from_alpha((1.0f64 / 3.0).acos()).unwrap().a;
        assert!((a - PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn edge_domain_errors() {
        assert!(edge_from_alpha(PI / 3.0).is_err());
        assert!(edge_from_alpha(PI).is_err());
        assert!(edge_from_alpha(0.2).is_err());
    }

    #[test]
    fn alpha_from_edge_examples() {
        assert!((alpha_from_edge(PI / 2.0).unwrap() - PI / 2.0).abs() < 1e-12);
        let al = alpha_from_edge(PI / 3.0).unwrap();
        assert!((al - (1.0f64 / 3.0).acos()).abs() < 1e-12);
        let al = alpha_from_edge(0.3524 * PI).unwrap();
        assert!(al > 0.3999 * PI && al < 0.4001 * PI);
        assert!(alpha_from_edge(0.0).is_err());
        assert!(alpha_from_edge(2.0 * PI / 3.0).is_err());
    }

    #[test]
    fn alpha_edge_round_trip_and_monotone() {
        let mut prev = 0.0;
        for i in 0..1000 {
            let alpha = PI / 3.0 + (PI - PI / 3.0) * (i as f64 + 0.5) / 1000.0;
            let a = edge_from_alpha(alpha).unwrap().a;
            assert!(a > prev, "edge_from_alpha not increasing at {alpha}");
            assert!(a > 0.0 && a < 2.0 * PI / 3.0);
            prev = a;
            let back = alpha_from_edge(a).unwrap();
            assert!((back - alpha).abs() < 1e-10);
        }
    }

    #[test]
    fn type_lemma_equivalences() {
        for i in 1..100 {
            let alpha = PI / 3.0 + (PI - PI / 3.0) * i as f64 / 100.0;
            if alpha >= PI {
                break;
            }
            let a = edge_from_alpha(alpha).unwrap().a;
            assert_eq!(a < PI / 2.0, alpha < PI / 2.0);
        }
        let a = edge_from_alpha(PI / 2.0).unwrap().a;
        assert!((a - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn beta_from_gamma_prism_endpoint() {
        // γ = arccos(−3/4), a = arccos(1/7) → β = arccos(−3/4)
        let gamma = (-0.75f64).acos();
        let a = (1.0f64 / 7.0).acos();
        let beta = beta_from_gamma(gamma, a).unwrap();
        assert!((beta - gamma).abs() < 1e-12);
    }

    #[test]
    fn beta_from_gamma_20_6_row() {
        let beta = beta_from_gamma(0.2385 * PI, 0.3040 * PI).unwrap();
        assert!((beta - 0.8578 * PI).abs() < 1e-4 * PI + 2e-4 * PI);
    }

    #[test]
    fn beta_from_gamma_decreasing_with_unique_fixed_point() {
        for &a in &[0.2, 0.7, 1.2, 1.5] {
            let mut prev = f64::INFINITY;
            for i in 1..100 {
                let gamma = PI * i as f64 / 100.0;
                let beta = beta_from_gamma(gamma, a).unwrap();
                assert!(beta < prev);
                prev = beta;
            }
            // monotone decreasing map vs identity: exactly one β=γ crossing
            let fixed = bisect(|g| beta_from_gamma(g, a).unwrap() - g, 1e-9, PI - 1e-9).unwrap();
            let beta = beta_from_gamma(fixed, a).unwrap();
            assert!((beta - fixed).abs() < 1e-10);
        }
        assert!(beta_from_gamma(1.0, 2.0).is_err());
    }

    #[test]
    fn areas_examples() {
        // the (4,1) degenerate row: γ = β = π
        let t = areas(&AngleTriple::new(PI / 2.0, PI, PI));
        assert!((t.s_triangle - PI / 2.0).abs() < 1e-12);
        assert!((t.s_rhombus - 2.0 * PI).abs() < 1e-12);
        assert!((4.0 * t.s_triangle + t.s_rhombus - 4.0 * PI).abs() < 1e-12);

        let t = areas(&AngleTriple::new(2.0 * PI / 5.0, 4.0 * PI / 5.0, 2.0 * PI / 5.0));
        assert!((t.s_triangle - PI / 5.0).abs() < 1e-12);
        assert!((t.s_rhombus - 2.0 * PI / 5.0).abs() < 1e-12);

        let t = areas(&AngleTriple::new(PI / 3.0 + 1e-9, PI, PI / 2.0));
        assert!(t.s_triangle > 0.0 && t.s_triangle < 1e-8);
    }

    #[test]
    fn residual_examples() {
        let (_, r2) = residuals(&AngleTriple::new(
            2.0 * PI / 5.0,
            4.0 * PI / 5.0,
            2.0 * PI / 5.0,
        ));
        assert!(r2.abs() < 1e-12);
        let (_, r2) = residuals(&AngleTriple::new(PI / 2.0, PI, PI / 2.0));
        assert!(r2.abs() < 1e-12);
        let (_, r2) = residuals(&AngleTriple::new(PI / 2.0, PI / 2.0, PI / 2.0));
        assert!(r2.abs() >= 0.5);
    }

    #[test]
    fn convexity_classes() {
        assert_eq!(
            AngleTriple::new(1.4, 2.0, 1.8).convexity(),
            Convexity::Convex
        );
        assert_eq!(
            AngleTriple::new(1.4, PI, 1.0).convexity(),
            Convexity::Degenerate
        );
        assert_eq!(
            AngleTriple::new(1.4, 3.5, 1.0).convexity(),
            Convexity::Concave
        );
    }
}
