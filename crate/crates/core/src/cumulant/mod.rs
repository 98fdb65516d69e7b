//! Bi-free cumulants and their inverse.
//!
//! Moment tables truncated at degree `d` form a unipotent group under `⊞⊞`.
//! For a fixed word `w` the map `N ↦ μ^{⊞⊞N}(w)` is a polynomial of degree at
//! most `|w|` without constant term, and its linear coefficient is the
//! cumulant `R_w(μ)`. We read it off by exact interpolation at
//! `N = 0, 1, …, |w|`.

pub mod oracle;

use crate::convolve::boxplus2;
use crate::error::{Error, Result};
use crate::ncalg::{Coefficient, CumulantTable, Distribution, Word};

pub use oracle::{free_cumulant_oracle, free_product_moment_oracle};

/// `μ^{⊞⊞N}` for `N = 0, 1, …`, all to the degree of the base.
#[derive(Clone, Debug)]
pub struct ConvolutionPowerCache<S> {
    base: Distribution<S>,
    powers: Vec<Distribution<S>>,
}

impl<S: Coefficient> ConvolutionPowerCache<S> {
    pub fn new(base: Distribution<S>) -> Result<Self> {
        let zero = Distribution::point(base.signature().clone(), base.degree())?;
        Ok(ConvolutionPowerCache { base, powers: vec![zero] })
    }

    pub fn base(&self) -> &Distribution<S> {
        &self.base
    }

    /// Computes every power up to `n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        let d = self.base.degree();
        while self.powers.len() <= n {
            let last = self.powers.last().expect("power 0 is always present");
            let next = if self.powers.len() == 1 {
                self.base.clone()
            } else {
                boxplus2(last, &self.base, d)?
            };
            self.powers.push(next);
        }
        Ok(())
    }

    pub fn get(&self, n: usize) -> Option<&Distribution<S>> {
        self.powers.get(n)
    }

    /// Coefficients (constant term first) of the polynomial through
    /// `(N, μ^{⊞⊞N}(w))` for `N = 0, …, nodes - 1`.
    pub fn polynomial(&mut self, w: &Word, nodes: usize) -> Result<Vec<S>> {
        if nodes == 0 {
            return Ok(Vec::new());
        }
        self.extend_to(nodes - 1)?;
        let values = (0..nodes)
            .map(|n| self.powers[n].moment(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(interpolate(&values))
    }
}

/// Coefficients of the polynomial of degree `< values.len()` taking
/// `values[k]` at `k`, by Newton divided differences.
pub fn interpolate<S: Coefficient>(values: &[S]) -> Vec<S> {
    let n = values.len();
    let mut diffs = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            diffs[k] = (diffs[k].clone() - diffs[k - 1].clone()) / S::from_integer(level as i64);
        }
    }
    // Horner on the Newton form Σ diffs[k] Π_{j<k} (N − j).
    let mut coeffs = vec![S::zero(); n];
    for k in (0..n).rev() {
        let mut shifted = vec![S::zero(); n];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < n {
                shifted[i + 1] += c.clone();
            }
            shifted[i] -= c.clone() * S::from_integer(k as i64);
        }
        shifted[0] += diffs[k].clone();
        coeffs = shifted;
    }
    coeffs
}

/// For every node count `n + 1`, the weights `c_k` with
/// `[N¹] p = Σ_k c_k p(k)` for polynomials of degree `<= n`.
fn linear_weights<S: Coefficient>(max_degree: usize) -> Vec<Vec<S>> {
    (0..=max_degree)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let mut unit = vec![S::zero(); n + 1];
                    unit[k] = S::one();
                    interpolate(&unit).get(1).cloned().unwrap_or_else(S::zero)
                })
                .collect()
        })
        .collect()
}

fn check_degree<S: Coefficient>(mu: &Distribution<S>, d: usize) -> Result<Distribution<S>> {
    if mu.degree() < d {
        return Err(Error::Truncation { word: format!("(words of degree {d})"), degree: mu.degree() });
    }
    if mu.degree() == d {
        Ok(mu.clone())
    } else {
        mu.truncate(d)
    }
}

fn cumulant_values<S: Coefficient>(mu: Distribution<S>, from_degree: usize) -> Result<Vec<S>> {
    let d = mu.degree();
    let index = mu.index().clone();
    let mut cache = ConvolutionPowerCache::new(mu)?;
    cache.extend_to(d)?;
    let weights = linear_weights::<S>(d);
    let mut values = vec![S::zero(); index.len()];
    for (r, value) in values.iter_mut().enumerate().skip(index.offset(from_degree.max(1))) {
        let n = index.degree_of(r);
        let mut acc = S::zero();
        for (k, c) in weights[n].iter().enumerate() {
            if !c.is_zero() {
                acc += c.clone() * cache.powers[k].values()[r].clone();
            }
        }
        *value = acc;
    }
    Ok(values)
}

/// `R_w(μ)` for every nonempty word of degree `<= d`.
pub fn cumulants_from_moments<S: Coefficient>(mu: &Distribution<S>, d: usize) -> Result<CumulantTable<S>> {
    let mu = check_degree(mu, d)?;
    let sig = mu.signature().clone();
    let values = cumulant_values(mu, 1)?;
    CumulantTable::from_values(sig, d, values)
}

/// The unique distribution whose cumulants to degree `d` are `r`.
///
/// Degree by degree, each unknown moment enters its own cumulant with
/// coefficient one: with the degree-`n` moments set to zero, the computed
/// cumulant is `R_w − μ(w)`.
pub fn moments_from_cumulants<S: Coefficient>(r: &CumulantTable<S>, d: usize) -> Result<Distribution<S>> {
    if r.degree() < d {
        return Err(Error::Truncation { word: format!("(words of degree {d})"), degree: r.degree() });
    }
    let sig = r.signature().clone();
    let mut known = Distribution::<S>::point(sig.clone(), 0)?.values().to_vec();
    for n in 1..=d {
        let trial = Distribution::point(sig.clone(), n)?;
        let mut values = trial.values().to_vec();
        values[..known.len()].clone_from_slice(&known);
        let trial = Distribution::from_values(sig.clone(), n, values)?;
        let offset = trial.index().offset(n);
        let probe = cumulant_values(trial.clone(), n)?;
        let mut values = trial.values().to_vec();
        for rank in offset..values.len() {
            values[rank] = r.values()[rank].clone() - probe[rank].clone();
        }
        known = values;
    }
    Distribution::from_values(sig, d, known)
}

/// `μ_s(w) = s^{|w|} μ(w)`: the law of the scaled family `s·z`.
pub fn dilate<S: Coefficient>(mu: &Distribution<S>, s: &S) -> Result<Distribution<S>> {
    mu.map_values(|w, v| v.clone() * s.powi(w.degree() as u32))
}

/// `R_w ↦ s^{|w|} R_w` on a cumulant table.
pub fn dilate_cumulants<S: Coefficient>(r: &CumulantTable<S>, s: &S) -> Result<CumulantTable<S>> {
    let values = r
        .values()
        .iter()
        .enumerate()
        .map(|(rank, v)| v.clone() * s.powi(r.index().degree_of(rank) as u32))
        .collect();
    CumulantTable::from_values(r.signature().clone(), r.degree(), values)
}
