//! Exact arithmetic for counting branched covers of surfaces.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The building blocks:
//!
//! - [`partition`]: integer partitions with a canonical ordering, conjugacy
//!   class sizes, and centralizer orders.
//! - [`perm`]: explicit permutations, class enumeration, and cached
//!   commutator-product histograms (the brute-force side of every oracle).
//! - [`character`]: symmetric-group character tables via border-strip
//!   recursion, with orthogonality checks.
//! - [`hurwitz`]: cover counts for arbitrary base genus, computed both by
//!   character sums and by direct tuple enumeration.
//! - [`zlaurent`] / [`ppoly`]: Laurent polynomials in the grading variable
//!   `z`, and polynomials in power-sum variables with Laurent coefficients,
//!   including genuine symbolic differentiation.
//! - [`cutjoin`]: the genus-graded cut-and-join operators, their
//!   differential-operator rendering, composition rule, structure constants,
//!   and deformed Schur eigenbasis.
//! - [`genfun`]: genus-graded generating functions for cover counts, built
//!   either directly or by operator evolution from an initial value.
//! - [`verify`]: the cross-check suite tying all of the above together.

pub mod character;
pub mod cutjoin;
pub mod error;
pub mod genfun;
pub mod hurwitz;
pub mod partition;
pub mod perm;
pub mod ppoly;
pub mod scalar;
pub mod verify;
pub mod zlaurent;

pub use error::{Error, Result};

/// Version of the machine-readable (JSON) output format. Bumped whenever a
/// serialized shape changes incompatibly.
pub const FORMAT_VERSION: u32 = 1;

/// Version of this library crate.
pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");
