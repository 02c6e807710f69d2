//! Gröbner bases and standard monomials of vanishing ideals of tuple systems
//! in `(q)^n`, with the shattering bounds they imply.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyring`]: exact polynomials over `Q`, term orders, normal forms.
//! * [`linalg`]: exact Gaussian elimination.
//! * [`tuples`]: tuple systems, set families, shattering and the named
//!   constructions (uniform slices, Hamming spheres, blow-ups, ...).
//! * [`ideals`]: the vanishing-ideal engine, interpolation, Gröbner
//!   certificates.
//! * [`closedform`]: explicit normal sets, counting formulas and bounds.
//! * [`compress`]: downward-closed compression through standard monomials.
//! * [`verify`]: sweeps checking the closed forms against the engine.
//! * [`cli`]: the command-line front end.

pub mod error;
pub mod linalg;
pub mod polyring;
pub mod tuples;
pub mod ideals;
pub mod closedform;
pub mod compress;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use ideals::{GroebnerBasis, PointSet, StandardMonomialSet};
pub use polyring::{Monomial, Polynomial, Rational, TermOrder};
pub use tuples::{CoordSet, SetFamily, Tuple};
