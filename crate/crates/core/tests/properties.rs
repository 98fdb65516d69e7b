mod common;

use std::collections::BTreeMap;

use bifree::cumulant::free_product_moment_oracle;
use bifree::models::{fock_moment, VectorSpec};
use bifree::ncalg::words_up_to;
use bifree::{
    bifree_product, boxplus2, boxtimes2, cumulants_from_moments, dilate, dist_restrict, emit_distribution,
    gaussian_dist, gram_psd_check, moments_from_cumulants, parse_distribution, word_star, ConvolutionPowerCache,
    CovarianceSpec, Distribution, FaceSignature, Family, FreeProduct, Letter, Scalar, Side, TensorState, Word,
};
use common::{family, random_dist, rng, small_rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn one_one(id: u32) -> FaceSignature {
    family(id, &["a"], &["b"])
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn marginals_survive_the_product(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m1 = random_dist(family(1, &["a", "b"], &["c"]), 4, &mut r);
        let m2 = random_dist(family(2, &["x"], &["y"]), 4, &mut r);
        let joint = bifree_product(&[&m1, &m2], 4).unwrap();
        prop_assert_eq!(dist_restrict(&joint, &[1]).unwrap(), m1);
        prop_assert_eq!(dist_restrict(&joint, &[2]).unwrap(), m2);
        prop_assert_eq!(dist_restrict(&joint, &[1, 2]).unwrap(), joint);
    }

    #[test]
    fn product_grouping_and_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m: Vec<Distribution> = (1..=3).map(|i| random_dist(one_one(i), 3, &mut r)).collect();
        let flat = bifree_product(&[&m[0], &m[1], &m[2]], 3).unwrap();
        let nested = bifree_product(&[&m[2], &bifree_product(&[&m[1], &m[0]], 3).unwrap()], 3).unwrap();
        prop_assert_eq!(flat, nested);
    }

    #[test]
    fn left_letters_are_free(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m1 = random_dist(family(1, &["a"], &["b"]), 5, &mut r);
        let m2 = random_dist(family(2, &["c"], &["e"]), 5, &mut r);
        let joint = bifree_product(&[&m1, &m2], 5).unwrap();
        for (w, v) in joint.iter().filter(|(w, _)| w.letters().iter().all(|l| l.side == Side::Left)) {
            prop_assert_eq!(v, &free_product_moment_oracle(&[&m1, &m2], &w).unwrap());
        }
    }

    #[test]
    fn actions_commute_across_families(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m1 = random_dist(family(1, &["a"], &["b", "c"]), 7, &mut r);
        let m2 = random_dist(family(2, &["x", "y"], &["z"]), 7, &mut r);
        let fp = FreeProduct::new(&[&m1, &m2]).unwrap();
        let alpha = fp.signature().alphabet().to_vec();
        let mut s = TensorState::xi();
        for _ in 0..r.gen_range(0..5) {
            s = fp.apply(alpha.choose(&mut r).unwrap(), &s).unwrap();
        }
        for a in alpha.iter().filter(|l| l.side == Side::Left) {
            for c in alpha.iter().filter(|l| l.side == Side::Right && l.family != a.family) {
                let ac = fp.apply_left(a, &fp.apply_right(c, &s).unwrap()).unwrap();
                let ca = fp.apply_right(c, &fp.apply_left(a, &s).unwrap()).unwrap();
                prop_assert!(ac.is_alternating());
                prop_assert_eq!(ac, ca);
            }
        }
    }

    #[test]
    fn boxplus_is_commutative_and_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [x, y, z] = [(); 3].map(|_| random_dist(one_one(1), 4, &mut r));
        prop_assert_eq!(boxplus2(&x, &y, 4).unwrap(), boxplus2(&y, &x, 4).unwrap());
        let left = boxplus2(&boxplus2(&x, &y, 4).unwrap(), &z, 4).unwrap();
        let right = boxplus2(&x, &boxplus2(&y, &z, 4).unwrap(), 4).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_units(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(one_one(1), 4, &mut r);
        let point = Distribution::point(one_one(1), 4).unwrap();
        let identity = Distribution::identity(one_one(1), 4).unwrap();
        prop_assert_eq!(&boxplus2(&mu, &point, 4).unwrap(), &mu);
        prop_assert_eq!(&boxtimes2(&mu, &identity, 4).unwrap(), &mu);
        prop_assert_eq!(&boxtimes2(&identity, &mu, 4).unwrap(), &mu);
    }

    #[test]
    fn transforms_are_inverse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(family(1, &["a"], &["b", "c"]), 4, &mut r);
        let rt = cumulants_from_moments(&mu, 4).unwrap();
        prop_assert_eq!(&moments_from_cumulants(&rt, 4).unwrap(), &mu);
        let again = cumulants_from_moments(&moments_from_cumulants(&rt, 4).unwrap(), 4).unwrap();
        prop_assert_eq!(again, rt);
    }

    #[test]
    fn cumulants_are_homogeneous(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(one_one(1), 4, &mut r);
        let s = small_rational(&mut r);
        let scaled = cumulants_from_moments(&dilate(&mu, &s).unwrap(), 4).unwrap();
        let base = cumulants_from_moments(&mu, 4).unwrap();
        for ((w, a), (_, b)) in scaled.iter().zip(base.iter()) {
            let factor = (0..w.degree()).fold(Scalar::from(1), |acc, _| acc * s.clone());
            prop_assert_eq!(a, &(b.clone() * factor));
        }
    }

    #[test]
    fn cumulants_are_triangular(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(one_one(1), 4, &mut r);
        let words = words_up_to(mu.signature(), 4).unwrap();
        let target = words[r.gen_range(1..words.len())].clone();
        let delta = small_rational(&mut r);
        let bumped = Distribution::from_fn(mu.signature().clone(), 4, |w| {
            let v = mu.get(w).unwrap().clone();
            if w == &target { v + delta.clone() } else { v }
        })
        .unwrap();
        let (r0, r1) = (cumulants_from_moments(&mu, 4).unwrap(), cumulants_from_moments(&bumped, 4).unwrap());
        for ((w, a), (_, b)) in r0.iter().zip(r1.iter()) {
            if w == target {
                prop_assert_eq!(b.clone() - a.clone(), delta.clone());
            } else if w.degree() <= target.degree() {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn power_polynomials_are_well_posed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(one_one(1), 3, &mut r);
        let mut cache = ConvolutionPowerCache::new(mu.clone()).unwrap();
        for w in words_up_to(mu.signature(), 3).unwrap().into_iter().skip(1) {
            let coeffs = cache.polynomial(&w, w.degree() + 2).unwrap();
            prop_assert_eq!(&coeffs[0], &Scalar::from(0));
            prop_assert_eq!(&coeffs[w.degree() + 1], &Scalar::from(0));
        }
    }

    #[test]
    fn tables_round_trip_through_text(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = random_dist(family(3, &["p", "q"], &["s"]), 3, &mut r);
        let text = emit_distribution(&mu);
        let back: Distribution = parse_distribution(&text).unwrap();
        prop_assert_eq!(emit_distribution(&back), text);
        prop_assert_eq!(back, mu);
    }
}

fn star_sig() -> FaceSignature {
    FaceSignature::new(vec![Family::new(1, ["a"], ["b"])], true).unwrap()
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn word_star_is_a_degree_preserving_involution(codes in prop::collection::vec(0usize..4, 0..7)) {
        let sig = star_sig();
        let w = Word(codes.iter().map(|&c| sig.alphabet()[c]).collect());
        let s = word_star(&sig, &w).unwrap();
        prop_assert_eq!(s.degree(), w.degree());
        prop_assert_eq!(word_star(&sig, &s).unwrap(), w);
    }
}

fn real_symmetric_vectors(sig: &FaceSignature, dim: usize, r: &mut impl Rng) -> VectorSpec<Scalar> {
    let map: BTreeMap<Letter, (Vec<Scalar>, Vec<Scalar>)> = sig
        .alphabet()
        .iter()
        .map(|l| {
            let h: Vec<Scalar> = (0..dim).map(|_| small_rational(r)).collect();
            (*l, (h.clone(), h))
        })
        .collect();
    VectorSpec::new(sig.clone(), dim, map).unwrap()
}

proptest! {
    #![proptest_config(config(6))]

    // With h = h* real the covariance is symmetric, and adjacent left/right
    // letters may be swapped inside any word.
    #[test]
    fn fock_moments_ignore_left_right_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = family(1, &["a", "b"], &["c"]);
        let spec = real_symmetric_vectors(&sig, 2, &mut r);
        for w in words_up_to(&sig, 5).unwrap() {
            let base = fock_moment(&spec, &w).unwrap();
            for i in 1..w.degree() {
                let (x, y) = (w.letters()[i - 1], w.letters()[i]);
                if x.side == y.side {
                    continue;
                }
                let mut swapped = w.letters().to_vec();
                swapped.swap(i - 1, i);
                prop_assert_eq!(&fock_moment(&spec, &Word(swapped)).unwrap(), &base);
            }
        }
    }

    #[test]
    fn psd_covariance_gives_positive_gram(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = family(1, &["a"], &["b"]);
        let a: Vec<Vec<Scalar>> = (0..2).map(|_| (0..2).map(|_| small_rational(&mut r)).collect()).collect();
        let c = (0..2)
            .map(|i| (0..2).map(|j| (0..2).fold(Scalar::from(0), |s, k| s + a[k][i].clone() * a[k][j].clone())).collect())
            .collect();
        let g = gaussian_dist(&CovarianceSpec::new(sig, c).unwrap(), 4).unwrap();
        prop_assert!(gram_psd_check(&g, 4).unwrap().is_positive());
    }
}
