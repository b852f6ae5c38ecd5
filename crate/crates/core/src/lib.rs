//! Exact tropicalization of plane algebraic curves over Puiseux series.
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! text ──parse──▶ LaurentPolynomial ──heights──▶ LiftedSupport
//!                                                   │
//!                         RegularSubdivision ◀──────┘
//!                                │
//!                          TropicalCurve ──▶ Certificate / stable intersection / SVG
//! ```
//!
//! * [`puiseux`]: exact Puiseux scalars, Laurent polynomials, the text grammar
//!   and the multiplicity of a curve at a point.
//! * [`lattice`]: lattice polygons, lattice width, m-thickness and the
//!   width/area inequalities.
//! * [`tropical`]: regular subdivisions, dual tropical curves, long edges and
//!   the `g` / `ĝ` height profiles.
//! * [`singular`]: necessary conditions for a point to be an m-fold point,
//!   bundled into a [`singular::Certificate`].
//! * [`intersect`]: stable intersection of tropical curves and the bounded
//!   tropical-line multiplicity check.
//! * [`cli`]: the `tropigon` command-line front end and the SVG renderer.
//!
//! All arithmetic is exact: scalars and heights are [`Q`] (arbitrary precision
//! rationals) and lattice coordinates are `i64`.

pub mod cli;
pub mod error;
pub mod intersect;
pub mod lattice;
pub mod puiseux;
pub mod rational;
pub mod samples;
pub mod singular;
pub mod tropical;

pub use error::{Error, Result};
pub use rational::Q;
