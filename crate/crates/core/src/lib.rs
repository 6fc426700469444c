//! Exact homology, Hochster sweeps and extremal searches for finite
//! simplicial complexes.

pub mod canonical;
pub mod classifier;
pub mod complex;
pub mod error;
pub mod extremal;
pub mod generate;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod search;
pub mod sperner;

pub use canonical::{canonical_form, is_isomorphic, CanonicalForm};
pub use complex::{Complex, Metrics, Simplex};
pub use error::{Error, Result};
pub use hochster::{bigraded, d_total, tau, BigradedTable};
pub use homology::{reduced_betti, reduced_euler, tb_reduced, tb_unreduced, BettiTable};
pub use linalg::{rank, FieldSpec, SparseMatrix};
