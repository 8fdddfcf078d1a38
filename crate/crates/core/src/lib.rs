//! Exact surgery invariants of knots and two-component links in S³, and
//! obstructions to symplectic fillability of the surgered manifolds.
//!
//! ```
//! use fillcheck::catalog::KnotFamily;
//! use fillcheck::obstruct::verdict_knot;
//!
//! let report = verdict_knot(&KnotFamily::Knm { n: 3, m: 1 }).unwrap();
//! assert_eq!(report.nonfillable[0].window.to_string(), "[9, 10]");
//! ```

pub mod braid;
pub mod catalog;
pub mod cli;
pub mod floer;
pub mod obstruct;
pub mod reproduce;
pub mod ring;
pub mod slopes;

/// Any failure surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ring::ParseError),
    #[error(transparent)]
    Rational(#[from] ring::RationalParseError),
    #[error(transparent)]
    Braid(#[from] braid::BraidError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Floer(#[from] floer::FloerError),
    #[error(transparent)]
    Obstruct(#[from] obstruct::ObstructError),
    #[error(transparent)]
    Slope(#[from] slopes::SlopeError),
    #[error("{0}")]
    Usage(String),
}
