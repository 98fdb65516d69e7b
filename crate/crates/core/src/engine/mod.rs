//! The free-product vector-space engine.
//!
//! Each marginal distribution `μ_t` is realized on its own free algebra with
//! state-vector `1`; letters of family `t` act on the free product of these
//! spaces through `λ_t` (left face) or `ρ_t` (right face). Joint moments are
//! vacuum coefficients.

pub(crate) mod action;
pub mod product;
pub mod state;
pub(crate) mod tabulate;

pub use product::{bifree_product, check_bifree, joint_moment, BifreeReport, FreeProduct, Mismatch};
pub use state::{vacuum_coefficient, Block, CodeWord, ReducedVector, TensorState, TensorWord};
