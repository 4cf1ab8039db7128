//! Edge-to-edge spherical tilings by congruent regular triangles and
//! congruent rhombi ((a³,a⁴)-tilings): angle/edge solving, vertex-type
//! enumeration, counting identities, the full protoset catalog, combinatorial
//! tiling construction, and numerical realization on the unit sphere.
//!
//! The classification consists of four parts:
//!
//! 1. a 1-parameter family of prism-like tilings `T(2a³,3a⁴; 6αβγ)`;
//! 2. a 1-parameter family with tilings shaped like the cuboctahedron and
//!    the triangular orthobicupola, `T(8a³,6a⁴; 12α²βγ)`;
//! 3. a sequence of generalized anti-triangular prisms
//!    `T(2a³,(6n−3)a⁴; 6αβγⁿ, (6n−6)β²γ)` for `n ≥ 3`;
//! 4. twenty-six sporadic protosets, including the icosahedral family
//!    (triangle pairs of the icosahedron merged into rhombi) and a (20,24)
//!    protoset whose tilings are connected by a local flip move.
//!
//! Modules follow that structure: [`sphtrig`] (edge/angle relations),
//! [`vertexcomb`] (vertex types), [`counting`] (Euler identities),
//! [`catalog`] (protosets), [`tiling`] (combinatorial sphere maps),
//! [`geom`] (metric realization and export).

pub mod catalog;
pub mod counting;
pub mod error;
pub mod geom;
pub mod sphtrig;
pub mod tiling;
pub mod vertexcomb;

pub use error::{Error, Result};
