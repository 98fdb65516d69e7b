#![allow(dead_code)]

use bifree::{Distribution, FaceSignature, Family, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Scalar {
    Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn family(id: u32, left: &[&str], right: &[&str]) -> FaceSignature {
    FaceSignature::new(vec![Family::new(id, left.iter().copied(), right.iter().copied())], false).unwrap()
}

/// Any table with `μ(1) = 1` is a distribution on the free algebra.
pub fn random_dist(sig: FaceSignature, d: usize, rng: &mut impl Rng) -> Distribution {
    Distribution::from_fn(sig, d, |w| if w.is_empty() { Scalar::from(1) } else { small_rational(rng) }).unwrap()
}

/// A single left variable with the given moments `m_1, m_2, …`.
pub fn single_left(moments: &[i64]) -> Distribution {
    Distribution::from_fn(family(1, &["a"], &[]), moments.len(), |w| {
        if w.is_empty() {
            Scalar::from(1)
        } else {
            Scalar::from(moments[w.degree() - 1])
        }
    })
    .unwrap()
}
