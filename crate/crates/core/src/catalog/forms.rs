//! Closed-form evaluation of the exact geometric data of the sporadic
//! protosets.
//!
//! Each function returns the row's single unknown angle in radians, computed
//! from nested radicals (complex arithmetic where the radicands go negative,
//! with the imaginary residue checked against `1e−9`). Branch choices are
//! not trusted: the caller cross-checks every value against an independent
//! bracketed bisection solve.

use crate::error::{Error, Result};
use crate::sphtrig::bisect;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Maximum imaginary residue tolerated when projecting a complex radical
/// evaluation to the real axis.
pub const IMAG_TOL: f64 = 1e-9;

fn re(label: &str, z: Complex64) -> Result<f64> {
    if z.im.abs() > IMAG_TOL {
        return Err(Error::FormulaBranch(format!(
            "{label}: imaginary residue {:.3e} exceeds {IMAG_TOL:.0e}",
            z.im
        )));
    }
    Ok(z.re)
}

/// β for row (8,2): `3·arccos((1−√2+√(3+6√2))/4)`.
pub fn beta_8_2() -> Result<f64> {
    Ok(3.0 * ((1.0 - 2f64.sqrt() + (3.0 + 6.0 * 2f64.sqrt()).sqrt()) / 4.0).acos())
}

/// β for row (32,6) convex: `4·arcsin((t²−2t+4)/(6t))`, `t = (19+3√33)^⅓`.
pub fn beta_32_6_1() -> Result<f64> {
    let t = (19.0 + 3.0 * 33f64.sqrt()).cbrt();
    Ok(4.0 * ((t * t - 2.0 * t + 4.0) / (6.0 * t)).asin())
}

/// β for row (8,18): `2·arctan√(7−4√2)`.
pub fn beta_8_18() -> Result<f64> {
    Ok(2.0 * (7.0 - 4.0 * 2f64.sqrt()).sqrt().atan())
}

/// β for row (4,4) irrational: `arccos((1−√17)/4)`.
pub fn beta_4_4_2() -> Result<f64> {
    Ok(((1.0 - 17f64.sqrt()) / 4.0).acos())
}

/// β for row (8,3): `6·arctan√(3(9−4√5))`.
pub fn beta_8_3() -> Result<f64> {
    Ok(6.0 * (3.0 * (9.0 - 4.0 * 5f64.sqrt())).sqrt().atan())
}

/// γ for row (4,12), with `c = 17+2√41`, `b = c^⅔+3c^⅓+5`.
pub fn gamma_4_12() -> Result<f64> {
    let c = 17.0 + 2.0 * 41f64.sqrt();
    let b = c.cbrt() * c.cbrt() + 3.0 * c.cbrt() + 5.0;
    let inner = ((-b + 9.0 * c.cbrt()) * b.sqrt() + 8.0 * c.sqrt()).sqrt();
    let x = (c.powf(1.0 / 6.0) * b.powf(0.25) - b.powf(0.75) + inner)
        / (4.0 * c.powf(1.0 / 6.0) * b.powf(0.25));
    Ok(x.acos())
}

/// β for row (8,12): `arccos(−(c²+2c−14)/(6c))`, `c = (8+6√78)^⅓`.
pub fn beta_8_12() -> Result<f64> {
    let c = (8.0 + 6.0 * 78f64.sqrt()).cbrt();
    Ok((-(c * c + 2.0 * c - 14.0) / (6.0 * c)).acos())
}

/// β for row (20,6): `−6·arctan(3+2√3−√(24+14√3))`.
pub fn beta_20_6() -> Result<f64> {
    Ok(-6.0 * (3.0 + 2.0 * 3f64.sqrt() - (24.0 + 14.0 * 3f64.sqrt()).sqrt()).atan())
}

/// α for row (8,24), with `c = (108+12√69)^⅓`, `b = √((c²+12)/c)`.
pub fn alpha_8_24() -> Result<f64> {
    let c = (108.0 + 12.0 * 69f64.sqrt()).cbrt();
    let b = ((c * c + 12.0) / c).sqrt();
    let inner = ((-b * c * c + 12.0 * 6f64.sqrt() * c - 12.0 * b) / (b * c)).sqrt();
    Ok((6f64.sqrt() / 12.0 * (b + inner)).asin())
}

/// β for row (20,12) convex: `2·arcsin((1+√33)/8)`.
pub fn beta_20_12_1() -> Result<f64> {
    Ok(2.0 * ((1.0 + 33f64.sqrt()) / 8.0).asin())
}

/// β for row (20,12) concave, `c = 1597545+5291√1689`.
pub fn beta_20_12_2() -> Result<f64> {
    let c = 1597545.0 + 5291.0 * 1689f64.sqrt();
    let b = ((18.0 * c * c).cbrt() + 120.0 * (12.0 * c).cbrt() + 35592.0).sqrt();
    let d = -35592.0 * 2f64.powf(1.0 / 6.0) * b + 240.0 * 2f64.powf(5.0 / 6.0) * b * (3.0 * c).cbrt()
        - 2f64.sqrt() * b * (9.0 * c * c).cbrt()
        + 2340.0 * 2f64.powf(1.0 / 6.0) * c.sqrt();
    let x = (-(3f64.powf(4.0 / 3.0)) * 2f64.powf(7.0 / 12.0) * d.sqrt()
        - 3.0 * 12f64.cbrt() * b.powf(1.5)
        + 252.0 * b.sqrt() * c.powf(1.0 / 6.0))
    .sqrt()
        / (12.0 * b.powf(0.25) * c.powf(1.0 / 12.0));
    Ok(PI - x.asin())
}

/// The sextic whose root in `(−1, 0)` is `2cos β` for row (20,24) convex.
pub fn sextic_20_24(z: f64) -> f64 {
    z.powi(6) + z.powi(5) - 4.0 * z.powi(4) - 3.0 * z.powi(3) + 3.0 * z * z - 1.0
}

/// β for row (20,24) convex: `cos β` is half the unique root of
/// [`sextic_20_24`] in `(−1, 0)`.
pub fn beta_20_24_1() -> Result<f64> {
    let mut bracket = None;
    let n = 1000;
    for i in 0..n {
        let lo = -1.0 + i as f64 / n as f64;
        let hi = -1.0 + (i + 1) as f64 / n as f64;
        if sextic_20_24(lo) * sextic_20_24(hi) < 0.0 {
            if bracket.is_some() {
                return Err(Error::FormulaBranch(
                    "(20,24) sextic: multiple roots in (−1,0)".into(),
                ));
            }
            bracket = Some((lo, hi));
        }
    }
    let (lo, hi) =
        bracket.ok_or_else(|| Error::FormulaBranch("(20,24) sextic: no root in (−1,0)".into()))?;
    let z = bisect(sextic_20_24, lo, hi)?;
    Ok((z / 2.0).acos())
}

/// β for row (44,12), `c = (38969189+564000√1473)^⅓`.
pub fn beta_44_12() -> Result<f64> {
    let c = (38969189.0 + 564000.0 * 1473f64.sqrt()).cbrt();
    let b = c * c - 115.0 * c + 101641.0;
    let d = (-3.0 * b - 1035.0 * c) * b.sqrt() + 36576.0 * (3.0 * c * c * c).sqrt();
    let x = (-6.0 * 3f64.sqrt() * b.powf(0.75) - 6.0 * d.sqrt() + 306.0 * b.powf(0.25) * c.sqrt())
        .sqrt()
        / (12.0 * b.powf(0.125) * c.powf(0.25));
    Ok(PI - x.asin())
}

/// β for row (20,60).
pub fn beta_20_60() -> Result<f64> {
    let s5 = 5f64.sqrt();
    let c = (-774.0 * s5 + 10070.0 + 6.0 * (85830.0 - 7890.0 * s5).sqrt()).cbrt();
    let b = -c * c + 24.0 * s5 + 43.0 * c - 460.0;
    let d = (2.0 * c * c + 43.0 * c - 48.0 * s5 + 920.0).sqrt();
    let x = (6f64.sqrt() * (b * d + 33.0 * 3f64.sqrt() * c.powf(1.5)).sqrt()
        + 3.0 * c.sqrt() * d.sqrt()
        - 3f64.sqrt() * d.powf(1.5))
        / (24.0 * c.sqrt() * d.sqrt());
    Ok(x.acos())
}

/// β for row (16,6); complex radicals with `√−47` and `√−3`.
pub fn beta_16_6() -> Result<f64> {
    let i = Complex64::i();
    let c = (Complex64::new(18559.0, 0.0) + 3321.0 * i * 47f64.sqrt()).powf(1.0 / 3.0);
    let b = (i * 3f64.sqrt() - 1.0) * c * c + 164.0 * c - 952.0 - 952.0 * i * 3f64.sqrt();
    let x = re("(16,6)", (b * c).sqrt() / (18.0 * c))?;
    Ok(PI - x.asin())
}

/// β for row (32,12): `π − arcsin((5−√7)/8)`.
pub fn beta_32_12() -> Result<f64> {
    Ok(PI - ((5.0 - 7f64.sqrt()) / 8.0).asin())
}

/// β for row (80,30).
pub fn beta_80_30() -> Result<f64> {
    let s5 = 5f64.sqrt();
    let x = ((-2.0 * s5 - 6.0) * (5.0 - 2.0 * s5).sqrt() + (130.0 - 10.0 * s5).sqrt()) / 20.0;
    Ok(PI - x.asin())
}

/// β for row (20,36), `c = (108+12√849)^⅓`.
pub fn beta_20_36() -> Result<f64> {
    let (s3, s283, s849) = (3f64.sqrt(), 283f64.sqrt(), 849f64.sqrt());
    let c = (108.0 + 12.0 * s849).cbrt();
    let b = ((-6.0 * s849 + 54.0) * c * c + 1152.0 * c + 15552.0).sqrt();
    let d = (5217.0 * s3 + 2997.0 * s283) * c * c
        + 3271392.0 * s3
        + (-223776.0 * s3 + 10656.0 * s283) * c;
    let e = (147852.0 * s849 - 1330668.0) * c * c - 28387584.0 * c + 766464768.0;
    let x = (19516464.0 - 24642.0 * s3 * b + 111.0 * 6f64.sqrt() * (b * d + e).sqrt()).sqrt()
        / 5328.0;
    Ok(PI - x.asin())
}

/// β for row (32,6) with the degree-6 vertex; complex radicals with `√−3`.
pub fn beta_32_6_2() -> Result<f64> {
    let i = Complex64::i();
    let c = (Complex64::new(-756.0, 0.0) + 84.0 * i * 3f64.sqrt()).powf(1.0 / 3.0);
    let b = (1.0 + i * 3f64.sqrt()) * c * c + 15.0 * c + 84.0 - 84.0 * i * 3f64.sqrt();
    let x = re("(32,6) deg-6", (-3.0 * b * c).sqrt() / (6.0 * c))?;
    Ok(PI - x.asin())
}

/// β for the (20,24) flip-family row: `4·arccos(√(−3bc)/(12c))`,
/// `c = (28+84√−3)^⅓`.
pub fn beta_20_24_2() -> Result<f64> {
    let i = Complex64::i();
    let c = (Complex64::new(28.0, 0.0) + 84.0 * i * 3f64.sqrt()).powf(1.0 / 3.0);
    let b = (1.0 + i * 3f64.sqrt()) * c * c - 32.0 * c + 28.0 - 28.0 * i * 3f64.sqrt();
    let x = re("(20,24) flip", (-3.0 * b * c).sqrt() / (12.0 * c))?;
    Ok(4.0 * x.acos())
}
