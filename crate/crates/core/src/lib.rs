//! Exact computations around the basic representation of the twisted
//! affine algebra of type A2(2): 3-bar cores and quotients of strict
//! partitions, Schur and Schur Q-functions, a neutral-fermion Fock space
//! with its boson-fermion correspondence, and a verification engine that
//! checks the resulting Schur-function identities as exact polynomial
//! equalities.

pub mod error;
pub mod exactalg;
pub mod fock;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
