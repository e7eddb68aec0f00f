//! Exact-arithmetic computation of Bochner–Martinelli residue-current
//! annihilators of monomial ideals from their Newton polyhedra.
//!
//! The crate is organized as:
//! - [`ideal`]: monomial-ideal algebra (divisibility, minimal
//!   generators, intersection, powers, variety predicates);
//! - [`newton`]: exact Newton-polyhedron facets, vertices and integral
//!   closures by bounded lattice enumeration;
//! - [`residue`]: essential sets, the annihilator ideal and the
//!   Briançon–Skoda inclusion chain for Artinian ideals;
//! - [`current`]: an independent symbolic pairing oracle for
//!   annihilator membership;
//! - [`general`]: projection-based partial annihilators for arbitrary
//!   monomial ideals.
//!
//! All lattice arithmetic is checked 64-bit with 128-bit determinant
//! intermediates; everything is immutable and pure, so the library is
//! safe to call from concurrent contexts. With the `parallel` feature
//! (default) the lattice scans run on rayon.

pub mod current;
pub mod error;
pub mod exec;
pub mod general;
pub mod ideal;
pub mod linalg;
pub mod newton;
pub mod ratio;
pub mod residue;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use ideal::{Exponent, MonomialIdeal, Polynomial};
pub use newton::{Facet, NewtonPolyhedron};
