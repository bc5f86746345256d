//! Exact arithmetic for Tutte polynomials of integer polymatroids.
//!
//! A polymatroid here is the set of integer points of the base polytope of
//! an integer submodular function: vectors whose partial sums respect the
//! rank of every subset and whose total equals the rank of the whole ground
//! set. Each such basis contributes a summand `x^oi * y^oe * (x+y-1)^ie`
//! determined by which coordinates are internally and externally active
//! at it, and the sum over all bases is the Tutte polynomial of the
//! polymatroid — independent of the coordinate order, which is the fact
//! the [`verify`] module checks exhaustively on small instances.
//!
//! The main layers:
//!
//! - [`rank`], [`families`], [`polymatroid`]: submodular rank tables,
//!   standard constructions (uniform, graphic, coverage), and basis
//!   enumeration.
//! - [`activity`], [`fiber`]: internal/external activity of coordinates by
//!   exchange probes and by tight-set families, and the chain
//!   decomposition induced by an adjacent coordinate swap.
//! - [`poly`], [`series`]: sparse bivariate polynomials and truncated
//!   two-variable power series over any integer-like scalar (the
//!   [`Coefficient`](poly::Coefficient) trait).
//! - [`tutte`]: the Tutte polynomial of a polymatroid, the classical Tutte
//!   polynomial of a matroid by activities and by the corank–nullity sum,
//!   the identity relating the two, and distance-generating series.
//! - [`verify`]: exhaustive per-instance certificates for the exchange,
//!   tight-set, and swap-invariance properties everything rests on.
//! - [`io`], [`corpus`]: instance parsing and the standing test corpus.
//!
//! Computations are exact throughout; the concrete aliases below fix
//! arbitrary-precision integers as the default scalar.
//!
//! ```
//! use num_bigint::BigInt;
//! use polytutte::families::uniform;
//! use polytutte::polymatroid::Polymatroid;
//! use polytutte::tutte::polymatroid_tutte;
//!
//! let p = Polymatroid::from_rank(uniform(1, 2)?);
//! let t = polymatroid_tutte::<BigInt>(&p);
//! assert_eq!(t.to_string(), "x^2 + 2*x*y + y^2 - x - y");
//! # Ok::<(), polytutte::Error>(())
//! ```

pub mod activity;
pub mod corpus;
pub mod error;
pub mod families;
pub mod fiber;
pub mod io;
pub mod mask;
pub mod point;
pub mod poly;
pub mod polymatroid;
pub mod rank;
pub mod series;
pub mod tutte;
pub mod verify;

pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use point::{IntVector, Permutation};
pub use polymatroid::Polymatroid;
pub use rank::RankFunction;

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar, for consumers that need division.
pub type Rational = num_rational::BigRational;

/// Bivariate polynomial with arbitrary-precision integer coefficients.
pub type Poly = poly::BivariatePolynomial<Int>;

/// Truncated bivariate power series with arbitrary-precision integer
/// coefficients.
pub type Series = series::TruncatedSeries<Int>;
