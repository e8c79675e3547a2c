//! Exact computation of Puiseux-type series roots of monic polynomials over
//! multivariate formal power series, with respect to monomial (weighted)
//! valuations.
//!
//! The library is organised around a graded model of the valuation
//! completion: an element is a finite sum of weighted-homogeneous layers
//! known below a valuation precision. On top of that model it provides
//!
//! - exact arithmetic over towers of algebraic extensions with
//!   dynamic-evaluation splitting ([`arith`]),
//! - sparse multivariate series with rational exponents graded by a
//!   monomial valuation ([`series`]),
//! - weight vectors over a declared real basis, their rational relation
//!   lattices and divisorial approximations ([`valuation`]),
//! - homogeneous elements, their resultant calculus and tower compression
//!   ([`homog`]),
//! - graded Hensel lifting and the Newton-Puiseux root solver with
//!   denominator tracking ([`solver`]),
//! - Newton polygons/polyhedra, quasi-ordinary detection and
//!   Abhyankar-Jung root certification ([`geometry`]),
//! - a Liouville-style gap detector for non-algebraicity evidence
//!   ([`dioph`]).

pub mod arith;
pub mod dioph;
pub mod error;
pub mod geometry;
pub mod homog;
pub mod series;
pub mod solver;
pub mod valuation;

pub use error::Error;

/// Crate-wide result alias.
pub type Res<T> = Result<T, Error>;
