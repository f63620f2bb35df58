//! Exact-arithmetic toolkit for root-system combinatorics and Schubert
//! calculus on complete flag varieties.
//!
//! Everything here is exact: root coordinates are integers, the invariant
//! form and all derived quantities are `BigRational`s, and every verification
//! routine either returns a bit-exact answer or a typed error. There is no
//! floating point anywhere in the crate.
//!
//! Module map:
//! - [`rootsys`]: finite root systems of types A–G and their direct sums.
//! - [`subset`]: bitsets over indexed positive roots.
//! - [`weyl`]: Weyl group enumeration, inversion sets, Bruhat orders,
//!   biconvexity and the Kostant correspondence.
//! - [`bk`]: Belkale-Kumar triples and the checks attached to them.
//! - [`schubert`]: Schubert classes via divided-difference operators and
//!   cup-product structure constants.
//! - [`irreducible`]: triple classification and the interval-avoidance
//!   verification machinery.
//! - [`chevalley`]: integral Chevalley bases with explicit structure
//!   constants.
//! - [`ramification`]: the boundary-divisor matrix `M(v,w,x,y,g_x,g_y)`,
//!   cover profiles, and block-kernel criteria.
//! - [`posetdet`]: chain-expansion determinants and Möbius functions of
//!   finite posets.
//! - [`linalg`], [`lp`]: dense rational matrices and exact simplex
//!   feasibility used by the modules above.
//! - [`cache`], [`report`], [`rng`]: batch-run plumbing shared with the CLI.

pub mod bk;
pub mod cache;
pub mod chevalley;
pub mod irreducible;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod posetdet;
pub mod ramification;
pub mod report;
pub mod rng;
pub mod rootsys;
pub mod schubert;
pub mod subset;
pub mod weyl;

use num::BigRational;

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid root-system type: {0}")]
    InvalidType(String),
    #[error("resource cap exceeded for {what}: cap {cap}")]
    ResourceExceeded { what: String, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cache entry at {path} rejected: {reason}")]
    Cache { path: String, reason: String },
    #[error("i/o error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
