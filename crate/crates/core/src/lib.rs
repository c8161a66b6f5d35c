//! Exact enumeration of hipster trees (rooted plane trees in which no two
//! siblings carry isomorphic subtrees), the upper and lower bounding series
//! for three tree families, and the dominant singularities that bracket their
//! exponential growth rates.
//!
//! The crate is layered bottom-up:
//!
//! - [`series`]: truncated power series over exact rationals.
//! - [`known_gfs`]: Catalan, Motzkin, little Schröder and chain generating
//!   functions, as exact expansions and as real functions.
//! - [`tree_enum`]: brute-force enumeration and the sibling-isomorphism test,
//!   used as ground truth.
//! - [`recurrences`]: coefficient recurrences for the hipster series and its
//!   bounds.
//! - [`singularity`]: discriminant root finding and growth intervals.
//! - [`verify`]: a one-shot run of every consistency check.

pub mod family;
pub mod known_gfs;
pub mod recurrences;
pub mod series;
pub mod singularity;
pub mod tree_enum;
pub mod verify;

pub use family::{BoundKind, FamilyId};
pub use known_gfs::KnownGf;
pub use recurrences::{bound_series, exact_series, family_params, FamilyParams};
pub use series::{Coefficient, PowerSeries, SeriesError};
pub use singularity::{find_dominant_singularity, growth_interval, GrowthInterval, SingularityResult};
pub use tree_enum::{EdgeLabel, PlaneTree};

/// Truncation order used when callers do not ask for one.
pub const DEFAULT_ORDER: usize = 512;
