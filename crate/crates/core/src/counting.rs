//! Face/vertex/edge bookkeeping from an AVC and the four counting
//! identities that every (a³,a⁴)-tiling satisfies:
//!
//! ```text
//! (1)  v = 2 + f△/2 + f◊
//! (2)  3f△ + 2f◊ = 12 + Σ_{k≥4} 2(k−3)·v_k
//! (3)  v₃ + f△ = 8 + Σ_{k≥5} (k−4)·v_k
//! (4)  3v₃ + 2v₄ + v₅ = 12 + 2f◊ + Σ_{k≥7} (k−6)·v_k
//! ```
//!
//! All checks are exact integer arithmetic.

use crate::error::{Error, Result};
use crate::vertexcomb::Avc;
use std::collections::BTreeMap;

/// Tile, vertex and edge counts with the vertex-degree distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountsReport {
    pub f_triangle: i64,
    pub f_rhombus: i64,
    pub v: i64,
    pub e: i64,
    pub v_k: BTreeMap<u32, i64>,
}

/// Derives tile counts from an AVC: α-slots come in threes (one triangle
/// contributes 3), β- and γ-slots in pairs (one rhombus contributes 2 of
/// each).
///
/// Protosets with `β = γ` (including the degenerate `β = π` block) are
/// conventionally written with the two rhombus angles collapsed into β; such
/// an AVC has all rhombus slots on one side, and each rhombus then accounts
/// for 4 of them.
pub fn counts_from_avc(avc: &Avc) -> Result<CountsReport> {
    if avc.is_empty() {
        return Err(Error::InconsistentAvc("empty AVC".into()));
    }
    let mut alpha_slots = 0i64;
    let mut beta_slots = 0i64;
    let mut gamma_slots = 0i64;
    let mut v = 0i64;
    let mut v_k = BTreeMap::new();
    for (vt, &count) in avc {
        if count == 0 {
            return Err(Error::InconsistentAvc(format!("zero count for {vt}")));
        }
        let c = count as i64;
        alpha_slots += vt.n1 as i64 * c;
        beta_slots += vt.n2 as i64 * c;
        gamma_slots += vt.n3 as i64 * c;
        v += c;
        *v_k.entry(vt.degree()).or_insert(0) += c;
    }
    if alpha_slots % 3 != 0 {
        return Err(Error::InconsistentAvc(format!(
            "α-slot total {alpha_slots} not divisible by 3"
        )));
    }
    let f_triangle = alpha_slots / 3;
    let f_rhombus = if beta_slots == gamma_slots {
        if beta_slots % 2 != 0 {
            return Err(Error::InconsistentAvc(format!(
                "rhombus slot total {beta_slots} odd"
            )));
        }
        beta_slots / 2
    } else if gamma_slots == 0 || beta_slots == 0 {
        // collapsed β=γ notation: 4 slots per rhombus on one side
        let total = beta_slots + gamma_slots;
        if total % 4 != 0 {
            return Err(Error::InconsistentAvc(format!(
                "collapsed rhombus slot total {total} not divisible by 4"
            )));
        }
        total / 4
    } else {
        return Err(Error::InconsistentAvc(format!(
            "β-slot total {beta_slots} ≠ γ-slot total {gamma_slots}"
        )));
    };
    let double_e = 3 * f_triangle + 4 * f_rhombus;
    if double_e % 2 != 0 {
        return Err(Error::InconsistentAvc(format!(
            "2e = {double_e} odd — slot totals cannot come from whole tiles"
        )));
    }
    Ok(CountsReport {
        f_triangle,
        f_rhombus,
        v,
        e: double_e / 2,
        v_k,
    })
}

/// Exact check of identities (1)–(4).
pub fn euler_identities(r: &CountsReport) -> bool {
    let vk = |k: u32| r.v_k.get(&k).copied().unwrap_or(0);
    let sum = |from: u32, w: fn(i64) -> i64| -> i64 {
        r.v_k
            .iter()
            .filter(|(&k, _)| k >= from)
            .map(|(&k, &c)| w(k as i64) * c)
            .sum()
    };
    let eq1 = 2 * r.v == 4 + r.f_triangle + 2 * r.f_rhombus;
    let eq2 = 3 * r.f_triangle + 2 * r.f_rhombus == 12 + sum(4, |k| 2 * (k - 3));
    let eq3 = vk(3) + r.f_triangle == 8 + sum(5, |k| k - 4);
    let eq4 = 3 * vk(3) + 2 * vk(4) + vk(5) == 12 + 2 * r.f_rhombus + sum(7, |k| k - 6);
    eq1 && eq2 && eq3 && eq4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertexcomb::avc;

    #[test]
    fn prism_avc() {
        let r = counts_from_avc(&avc(&[(1, 1, 1, 6)])).unwrap();
        assert_eq!((r.f_triangle, r.f_rhombus, r.v, r.e), (2, 3, 6, 9));
        assert!(euler_identities(&r));
    }

    #[test]
    fn cuboct_avc() {
        let r = counts_from_avc(&avc(&[(2, 1, 1, 12)])).unwrap();
        assert_eq!((r.f_triangle, r.f_rhombus), (8, 6));
        assert!(euler_identities(&r));
    }

    #[test]
    fn antiprism_avc_n5() {
        let r = counts_from_avc(&avc(&[(1, 1, 5, 6), (0, 2, 1, 24)])).unwrap();
        assert_eq!((r.f_triangle, r.f_rhombus), (2, 27));
        assert!(euler_identities(&r));
    }

    #[test]
    fn collapsed_beta_gamma_8_2() {
        let r = counts_from_avc(&avc(&[(3, 1, 0, 8)])).unwrap();
        assert_eq!((r.f_triangle, r.f_rhombus, r.v), (8, 2, 8));
        assert!(euler_identities(&r));
    }

    #[test]
    fn corrupted_report_fails() {
        let mut r = counts_from_avc(&avc(&[(1, 1, 1, 6)])).unwrap();
        r.v += 1;
        assert!(!euler_identities(&r));
    }

    #[test]
    fn inconsistent_avcs_error() {
        assert!(counts_from_avc(&avc(&[])).is_err());
        // α total not divisible by 3
        assert!(counts_from_avc(&avc(&[(1, 2, 2, 1)])).is_err());
        // β total ≠ γ total, both nonzero
        assert!(counts_from_avc(&avc(&[(3, 2, 1, 2)])).is_err());
    }
}
