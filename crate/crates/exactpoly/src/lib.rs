//! Exact polynomial algebra over ℚ.
//!
//! The central type is [`MultiPoly`], a sparse multivariate polynomial with
//! arbitrary-precision rational coefficients over a named, ordered
//! [`VarContext`]. Monomials are ordered graded-lexicographically with the
//! first context variable most significant; that order fixes leading terms,
//! the sign of [`MultiPoly::sqrt`], and the canonical text form
//! (`-3/4*a1^2*b2 + b1 - 1`) produced by `Display` and read back by
//! [`MultiPoly::parse`].
//!
//! On top of that sit [`PolyMatrix`] with a fraction-free determinant and
//! [`QMatrix`] for exact rational elimination (solving, kernels, ranks).
//!
//! ```
//! use exactpoly::{MultiPoly, VarContext};
//!
//! let ctx = VarContext::new(["x", "y"]).unwrap();
//! let p = MultiPoly::parse(&ctx, "x^2 + 2*x*y + y^2").unwrap();
//! assert_eq!(p.sqrt().unwrap().to_string(), "x + y");
//! ```
//!
//! Polynomials in different contexts combine only when one context is a
//! prefix of the other; any other reordering has to be requested with
//! [`MultiPoly::reindex`].

mod context;
mod error;
mod linalg;
mod matrix;
mod monomial;
mod poly;
pub mod rational;
mod text;

pub use context::VarContext;
pub use error::PolyError;
pub use linalg::{QMatrix, Solution};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use poly::MultiPoly;
pub use rational::{rat, ratio, render_rational, sign_pow, Rational};
