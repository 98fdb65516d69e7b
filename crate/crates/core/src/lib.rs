//! Exact bi-free probability for two-faced families of noncommutative
//! random variables.
//!
//! Joint moments are computed by running the left and right actions on a
//! free product of vector spaces with specified state-vector. Everything
//! else (convolutions, cumulants, Gaussian laws, central limits) is built on
//! that engine. All arithmetic is exact over Gaussian rationals by default;
//! the core is generic over [`Coefficient`].

pub mod cli;
pub mod clt;
pub mod convolve;
pub mod cumulant;
pub mod engine;
pub mod error;
pub mod models;
pub mod ncalg;

#[cfg(test)]
mod testing;

pub use clt::{clt_report, scaled_sum_direct, scaled_sum_dist, CltReport, CltRow, DecayRate};
pub use convolve::{bifree_sum, boxplus2, boxtimes2};
pub use cumulant::{
    cumulants_from_moments, dilate, dilate_cumulants, free_cumulant_oracle, moments_from_cumulants,
    ConvolutionPowerCache,
};
pub use engine::{bifree_product, check_bifree, joint_moment, BifreeReport, FreeProduct, TensorState};
pub use error::{Error, Result};
pub use models::{
    fock_distribution, fock_moment, gaussian_dist, gram_psd_check, group_example_dist, CovarianceSpec,
    PsdVerdict, VectorSpec,
};
pub use ncalg::{
    dist_restrict, emit_cumulants, emit_distribution, parse_cumulants, parse_distribution, word_star,
    Coefficient, FaceSignature, Family, Letter, Side, Word,
};

/// Exact complex scalar `a + b·i` with rational parts.
pub type Scalar = ncalg::GaussianRational;
pub type Rational = num_rational::BigRational;

/// Moment table over Gaussian rationals.
pub type Distribution = ncalg::Distribution<Scalar>;
pub type CumulantTable = ncalg::CumulantTable<Scalar>;
/// Moment table over real rationals.
pub type RealDistribution = ncalg::Distribution<Rational>;
/// Approximate moment table for quick exploratory runs.
pub type FloatDistribution = ncalg::Distribution<f64>;
