use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ncalg::{Distribution, FaceSignature, Family, GaussianRational as Q};

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn small_rational(rng: &mut impl Rng) -> Q {
    Q::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub(crate) fn family(id: u32, left: &[&str], right: &[&str]) -> FaceSignature {
    FaceSignature::new(vec![Family::new(id, left.iter().copied(), right.iter().copied())], false)
        .unwrap()
}

pub(crate) fn random_dist(sig: FaceSignature, d: usize, rng: &mut impl Rng) -> Distribution<Q> {
    Distribution::from_fn(sig, d, |w| if w.is_empty() { Q::from(1) } else { small_rational(rng) })
        .unwrap()
}
