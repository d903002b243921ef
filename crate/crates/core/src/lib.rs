//! Exact spectra of natural differential operators on round spheres.
//!
//! Everything is computed in exact rational arithmetic from highest-weight
//! data of the orthogonal algebras: dimensions via the Weyl product, spectra
//! via Casimir values of so(n+1) acting on bundles over S^n = SO(n+1)/SO(n),
//! decompositions via the classical branching rule.  Supported bundles:
//! higher-spin spinor fields, trace-free symmetric tensors, differential
//! forms, and spinor-valued forms, together with the gradient (Stein-Weiss)
//! operators between them, Weitzenboeck identities, operator factorizations,
//! and the Killing/conformal-Killing special sections.

pub mod branching;
pub mod factorization;
pub mod killing;
pub mod rat;
pub mod output;
pub mod spectra;
pub mod verify;
pub mod weitzenboeck;
pub mod rep;

pub use rat::Rat;
