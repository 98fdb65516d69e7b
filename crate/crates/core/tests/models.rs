mod common;

use bifree::clt::limit_covariance;
use bifree::{
    boxplus2, check_bifree, clt_report, gaussian_dist, gram_psd_check, group_example_dist, joint_moment,
    CovarianceSpec, Distribution, FaceSignature, Scalar, Word,
};
use common::family;

fn cov(sig: &FaceSignature, rows: [[i64; 2]; 2]) -> CovarianceSpec<Scalar> {
    CovarianceSpec::new(sig.clone(), rows.iter().map(|r| r.iter().map(|&v| Scalar::from(v)).collect()).collect())
        .unwrap()
}

#[test]
fn gaussians_add_covariances() {
    let sig = family(1, &["a"], &["b"]);
    let g1 = gaussian_dist(&cov(&sig, [[1, 2], [0, 3]]), 4).unwrap();
    let g2 = gaussian_dist(&cov(&sig, [[2, -1], [1, 1]]), 4).unwrap();
    let sum = gaussian_dist(&cov(&sig, [[3, 1], [1, 4]]), 4).unwrap();
    assert_eq!(boxplus2(&g1, &g2, 4).unwrap(), sum);
}

#[test]
fn free_units_have_vanishing_alternating_moment() {
    let unit = |id| {
        Distribution::from_fn(family(id, &["x"], &[]), 4, |w| {
            Scalar::from([1, 0, 1, 0, 2][w.degree()])
        })
        .unwrap()
    };
    let (m1, m2) = (unit(1), unit(2));
    let sig = FaceSignature::disjoint_union([m1.signature(), m2.signature()]).unwrap();
    let (x1, x2) = (sig.alphabet()[0], sig.alphabet()[1]);
    assert_eq!(joint_moment(&[&m1, &m2], &Word(vec![x1, x2, x1, x2])).unwrap(), Scalar::from(0));
    assert_eq!(joint_moment(&[&m1, &m2], &Word(vec![x1, x1, x2, x2])).unwrap(), Scalar::from(1));
}

#[test]
fn involutive_group_limit_is_hermitian() {
    // order-2 generators are self-adjoint unitaries with zero trace
    let mu = group_example_dist(&[2, 2], 4).unwrap();
    assert!(check_bifree(&mu, 4).unwrap().is_bifree());
    assert!(gram_psd_check(&mu, 4).unwrap().is_positive());
    let limit = gaussian_dist(&limit_covariance(&mu).unwrap(), 4).unwrap();
    assert!(gram_psd_check(&limit, 4).unwrap().is_positive());
    let rep = clt_report(&mu, &[1, 4, 16], 4).unwrap();
    assert!(rep.second_order_exact());
    assert!(rep.decay_violations().is_empty());
}
