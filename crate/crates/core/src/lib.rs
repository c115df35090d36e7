//! Exact construction of the zone of a line in an arrangement of lines.
//!
//! Given a query line and `n` input lines, [`zone`] returns every face of
//! the arrangement whose closure meets the query line, split into the
//! pieces above and below it. After sorting the intercepts on the query
//! line the construction is linear: two Graham-scan style passes decompose
//! the forward and backward forests into convex chains, and each cell is
//! read off from one chain of each forest.
//!
//! All arithmetic is exact. The library is generic over [`Scalar`]; use
//! [`Rational`] for arbitrary inputs and [`FastRational`] when coefficients
//! are known to be small (overflow panics rather than wrapping).
//!
//! [`oracle`] holds an independent quadratic-time construction used to
//! check the engine.

pub mod canonical;
pub mod cell;
pub mod engine;
mod error;
mod fast;
pub mod geometry;
pub mod oracle;
pub mod region;
pub mod scalar;

pub use canonical::{canonicalize, CanonicalInstance};
pub use cell::{Cap, Cell, ChainPiece, Face, ZoneStats};
pub use engine::{zone, zone_with, ZoneOptions};
pub use error::ZoneError;
pub use geometry::{intersect, orientation, x_intercept, Direction, HalfLine, Line, Orientation, Point, Side};
pub use oracle::{diff, oracle_zone, DiffReport};
pub use region::{Boundary, BoundaryItem, Ray};
pub use scalar::Scalar;

/// Arbitrary-precision exact rational.
pub type Rational = num_rational::BigRational;

/// 128-bit exact rational for inputs with small coefficients.
pub use fast::FastRational;

pub type Zone<T = Rational> = cell::Zone<T>;
