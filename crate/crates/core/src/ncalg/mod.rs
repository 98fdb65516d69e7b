//! Index sets, words, scalars, distributions and the table file format.

pub mod distribution;
pub mod format;
pub mod scalar;
pub mod signature;
pub mod word;

pub use distribution::{CumulantTable, Distribution};
pub use format::{emit_cumulants, emit_distribution, parse_cumulants, parse_distribution};
pub use scalar::{Coefficient, GaussianRational};
pub use signature::{FaceSignature, Family, Letter, Side};
pub use word::{word_star, words_up_to, GradedIndex, Word};

use crate::error::Result;

/// Marginal of `mu` on the families `fams`.
pub fn dist_restrict<S: Coefficient>(mu: &Distribution<S>, fams: &[u32]) -> Result<Distribution<S>> {
    mu.restrict(fams)
}
