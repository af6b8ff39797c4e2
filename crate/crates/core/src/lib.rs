//! Exact enumeration of closed walks at a vertex of an infinite δ-regular tree.
//!
//! Five independent routes produce the number `W_{2n}` of closed walks of
//! length `2n`:
//!
//! * [`walks::walks_via_components`]: weighted sums over component counts of
//!   Dyck paths, with the counts built from the component recurrence,
//! * [`walks::walks_via_catalan`]: the same sum with Catalan's triangle
//!   supplying the per-component counts,
//! * [`walks::walks_via_borel`]: a signed polynomial in δ whose coefficients
//!   come from Borel's triangle,
//! * [`series::gf_walk_counts`]: coefficients of the closed-form generating
//!   function expanded over exact rationals,
//! * [`oracle::dp_walk_count`]: a transfer-matrix count over distance from
//!   the root.
//!
//! All arithmetic is arbitrary precision; nothing here ever rounds.

pub mod error;
pub mod oracle;
pub mod rlseq;
pub mod series;
pub mod triangles;
pub mod walks;

pub use error::{Error, Result};
pub use rlseq::{ComponentDecomposition, RLSequence, STable};
pub use series::PowerSeries;
pub use triangles::{TriangleKind, TriangleTable};
pub use walks::DeltaPolynomial;

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;
