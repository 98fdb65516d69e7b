//! Concrete bi-free realizations: the Fock-space Gaussian model, the
//! free-product group example, and positivity checks.

pub mod covariance;
pub mod fock;
pub mod group;
pub mod psd;
pub mod spec_io;

pub use covariance::{gaussian_dist, CovarianceSpec};
pub use fock::{fock_apply, fock_distribution, fock_moment, inner, FockOp, FockState, VectorSpec};
pub use group::{group_example_dist, group_signature, GroupElement};
pub use psd::{gram_matrix, gram_psd_check, quadratic_form, PsdVerdict};
pub use spec_io::{emit_covariance, emit_vectors, parse_covariance, parse_vectors};
