//! Verification engine and queryable catalog for the classification tables
//! of prehomogeneous and etale modules of reductive groups.
//!
//! Everything is computed over exact rationals: table rows are instantiated
//! as explicit Lie algebra matrices, prehomogeneity and generic isotropy
//! dimension are certified by exact rank of the infinitesimal action, the
//! printed relative invariants are evaluated and checked infinitesimally,
//! and the castling triplet calculus is implemented as integer arithmetic.

pub mod action;
pub mod castling;
pub mod catalog;
pub mod clifford;
pub mod invariants;
pub mod linalg;
pub mod octonion;
pub mod rat;
pub mod rep;
pub mod ring;
pub mod specfile;
pub mod verify;

pub use action::{generic_orbit, infinitesimal_action_matrix, is_etale, is_prehomogeneous, OrbitCertificate};
pub use rat::{Q, Z};
pub use rep::{LieAction, ModuleSpec, RealizedModule, RepLabel, RepSpec, SimpleGroupId};
