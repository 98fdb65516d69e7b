//! Additive and multiplicative bi-free convolution.
//!
//! Both run the product engine on copies of the operands: every letter of
//! the result expands into letters of the bi-free copies (a sum for `⊞⊞`, an
//! ordered product for `⊠⊠`) and the tabulator evaluates the expansion.

use smallvec::{smallvec, SmallVec};

use crate::engine::action::Engine;
use crate::engine::tabulate::{tabulate, Move};
use crate::error::{Error, Result};
use crate::ncalg::{Coefficient, Distribution};

fn check_operands<S: Coefficient>(mu: &Distribution<S>, nu: &Distribution<S>, d: usize) -> Result<()> {
    if !mu.signature().same_faces(nu.signature()) {
        return Err(Error::Signature("convolution operands have different face signatures".into()));
    }
    for m in [mu, nu] {
        if m.degree() < d {
            return Err(Error::Truncation {
                word: format!("(words of degree {d})"),
                degree: m.degree(),
            });
        }
    }
    Ok(())
}

/// Distribution of `z^(1) + … + z^(N)` for bi-free copies with the given
/// laws, on the signature of the first summand.
pub fn bifree_sum<S: Coefficient>(summands: &[&Distribution<S>], d: usize) -> Result<Distribution<S>> {
    let first = summands
        .first()
        .ok_or_else(|| Error::Domain("a bi-free sum needs at least one summand".into()))?;
    for s in summands {
        check_operands(first, s, d)?;
    }
    let letters = first.signature().alphabet().len() as u16;
    let moves: Vec<Move> = (0..letters)
        .map(|x| (0..summands.len()).map(|j| smallvec![(j as u16, x)]).collect())
        .collect();
    let engine = Engine::new(summands.to_vec());
    let values = tabulate(&engine, &moves, d)?;
    Distribution::from_values(first.signature().clone(), d, values)
}

/// `μ ⊞⊞ ν` to degree `d`.
pub fn boxplus2<S: Coefficient>(mu: &Distribution<S>, nu: &Distribution<S>, d: usize) -> Result<Distribution<S>> {
    check_operands(mu, nu, d)?;
    bifree_sum(&[mu, nu], d)
}

/// `μ ⊠⊠ ν` to degree `d`: each letter `k` becomes the product `k′k″` with
/// the `μ`-letter on the left.
pub fn boxtimes2<S: Coefficient>(mu: &Distribution<S>, nu: &Distribution<S>, d: usize) -> Result<Distribution<S>> {
    check_operands(mu, nu, d)?;
    let letters = mu.signature().alphabet().len() as u16;
    // k′k″ acts on a vector by k″ first.
    let moves: Vec<Move> = (0..letters)
        .map(|x| {
            let pair: SmallVec<[(u16, u16); 2]> = smallvec![(1, x), (0, x)];
            vec![pair]
        })
        .collect();
    let engine = Engine::new(vec![mu, nu]);
    let values = tabulate(&engine, &moves, d)?;
    Distribution::from_values(mu.signature().clone(), d, values)
}
