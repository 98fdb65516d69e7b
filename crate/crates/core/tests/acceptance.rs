//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bifree::cumulant::free_cumulant_oracle;
use bifree::models::{fock_distribution, gram_matrix, inner, quadratic_form, VectorSpec};
use bifree::ncalg::words_up_to;
use bifree::{
    bifree_product, boxplus2, check_bifree, cumulants_from_moments, gaussian_dist, gram_psd_check,
    group_example_dist, joint_moment, scaled_sum_direct, scaled_sum_dist, clt_report, Coefficient,
    CovarianceSpec, Distribution, FreeProduct, Letter, PsdVerdict, Scalar, Side, TensorState, Word,
};
use common::{family, random_dist, rng, single_left, small_rational};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Expansion over ordered partitions of positions into blocks marked `°`
// (a reduced vector) or `φ` (a scalar), with integer coefficients. Terms
// are never merged or pruned; the moment is the sum of the all-`φ` terms.
#[derive(Clone)]
struct Piece {
    positions: Vec<usize>,
    reduced: bool,
}

fn naive_moment(marginals: &[&Distribution], w: &Word) -> Scalar {
    let letters = w.letters();
    let fam = |k: usize| letters[k].family;
    let mut terms: Vec<(i64, Vec<Piece>)> = vec![(1, Vec::new())];
    for k in (0..letters.len()).rev() {
        let mut next = Vec::with_capacity(terms.len() * 4);
        let single = |reduced| Piece { positions: vec![k], reduced };
        for (c, pieces) in terms {
            let edge = match letters[k].side {
                Side::Left => pieces.iter().position(|p| p.reduced),
                Side::Right => pieces.iter().rposition(|p| p.reduced),
            };
            let Some(p) = edge else {
                for reduced in [true, false] {
                    let mut t = pieces.clone();
                    t.push(single(reduced));
                    next.push((c, t));
                }
                continue;
            };
            let at = if letters[k].side == Side::Left { p } else { p + 1 };
            if fam(pieces[p].positions[0]) != fam(k) {
                let mut t = pieces.clone();
                t.insert(at, single(true));
                next.push((c, t));
                let mut t = pieces.clone();
                t.push(single(false));
                next.push((c, t));
            } else {
                let mut grown = pieces[p].positions.clone();
                grown.insert(0, k);
                for reduced in [true, false] {
                    let mut t = pieces.clone();
                    t[p] = Piece { positions: grown.clone(), reduced };
                    next.push((c, t));
                }
                let mut t = pieces.clone();
                t[p].reduced = false;
                t.insert(p, single(true));
                next.push((-c, t));
                let mut t = pieces.clone();
                t[p].reduced = false;
                t.push(single(false));
                next.push((-c, t));
            }
        }
        terms = next;
    }
    let mut total = Scalar::from(0);
    for (c, pieces) in terms {
        if pieces.iter().any(|p| p.reduced) {
            continue;
        }
        let mut term = Scalar::from(c);
        for p in &pieces {
            let sub = Word(p.positions.iter().map(|&i| letters[i]).collect());
            let mu = marginals.iter().find(|m| m.signature().family(fam(p.positions[0])).is_some()).unwrap();
            term *= mu.moment(&sub).unwrap();
        }
        total += term;
    }
    total
}

fn criterion_1() -> Outcome {
    let mut r = rng(101);
    let mu1 = random_dist(family(1, &["a"], &["b"]), 5, &mut r);
    let mu2 = random_dist(family(2, &["c"], &["e"]), 5, &mut r);
    let joint = bifree_product(&[&mu1, &mu2], 5).map_err(|e| e.to_string())?;
    let mut mixed = 0;
    for (w, v) in joint.iter() {
        let naive = naive_moment(&[&mu1, &mu2], &w);
        ensure(v == &naive, || format!("{}: engine {v}, expansion {naive}", w.label(joint.signature())))?;
        let direct = joint_moment(&[&mu1, &mu2], &w).unwrap();
        ensure(v == &direct, || format!("{}: table {v}, single word {direct}", w.label(joint.signature())))?;
        mixed += usize::from(w.families().len() == 2);
    }
    Ok(format!("{} words agree exactly ({mixed} mixed)", joint.values().len()))
}

fn criterion_2() -> Outcome {
    let mut r = rng(102);
    let sig = family(1, &["a"], &["b"]);
    for trial in 0..20 {
        let mu = random_dist(sig.clone(), 5, &mut r);
        let nu = random_dist(sig.clone(), 5, &mut r);
        let sum = boxplus2(&mu, &nu, 5).unwrap();
        let (rs, rm, rn) = (
            cumulants_from_moments(&sum, 5).unwrap(),
            cumulants_from_moments(&mu, 5).unwrap(),
            cumulants_from_moments(&nu, 5).unwrap(),
        );
        for (i, v) in rs.values().iter().enumerate().skip(1) {
            let want = rm.values()[i].clone() + rn.values()[i].clone();
            ensure(v == &want, || format!("pair {trial}, {}: {v} vs {want}", rs.word(i).label(&sig)))?;
        }
    }
    Ok("20 pairs, all 62 cumulants additive".into())
}

fn criterion_3() -> Outcome {
    let mut r = rng(103);
    let mut checked = 0;
    for _ in 0..10 {
        let mu = random_dist(family(1, &["a", "b"], &["c", "e"]), 2, &mut r);
        let rt = cumulants_from_moments(&mu, 2).unwrap();
        for (w, v) in rt.iter() {
            let m = |ls: &[Letter]| mu.moment(&Word(ls.to_vec())).unwrap();
            let l = w.letters();
            let want = if l.len() == 1 { m(l) } else { m(l) - m(&l[..1]) * m(&l[1..]) };
            ensure(v == &want, || format!("{}: {v} vs {want}", w.label(mu.signature())))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} degree-1 and degree-2 cumulants match"))
}

fn criterion_4() -> Outcome {
    let mut r = rng(104);
    let mu = random_dist(family(1, &["a", "b"], &["c", "e"]), 5, &mut r);
    let rt = cumulants_from_moments(&mu, 5).unwrap();
    let mut checked = 0;
    for (w, v) in rt.iter() {
        let sides: Vec<Side> = w.letters().iter().map(|l| l.side).collect();
        if sides.iter().any(|s| *s != sides[0]) {
            continue;
        }
        let k = free_cumulant_oracle(&mu, &w).unwrap();
        ensure(v == &k, || format!("{}: bi-free {v}, free {k}", w.label(mu.signature())))?;
        checked += 1;
    }
    Ok(format!("{checked} single-face words of degree <= 5 agree with the NC oracle"))
}

fn random_vectors(sig: &bifree::FaceSignature, dim: usize, r: &mut impl Rng) -> VectorSpec<Scalar> {
    let mut v = || (0..dim).map(|_| small_rational(r)).collect::<Vec<_>>();
    let map = sig.alphabet().iter().filter(|l| !l.star).map(|l| (*l, (v(), v()))).collect();
    VectorSpec::new(sig.clone(), dim, map).unwrap()
}

fn criterion_5() -> Outcome {
    let mut r = rng(105);
    let sig = family(1, &["a", "b"], &["c", "e"]);
    let spec = random_vectors(&sig, 3, &mut r);
    let fock = fock_distribution(&spec, 6).unwrap();
    let rt = cumulants_from_moments(&fock, 6).unwrap();
    for (w, v) in rt.iter() {
        let want = match w.letters() {
            [x, y] => inner(spec.h(y).unwrap(), spec.h_star(x).unwrap()),
            _ => Scalar::from(0),
        };
        ensure(v == &want, || format!("cumulant of {}: {v}, expected {want}", w.label(&sig)))?;
    }
    let gauss = gaussian_dist(&spec.covariance().unwrap(), 6).unwrap();
    let diff = gauss.differences(&fock);
    ensure(diff.is_empty(), || format!("{} words differ from the Gaussian table", diff.len()))?;
    Ok(format!("{} Fock moments equal the Gaussian table; cumulants vanish off degree 2", fock.values().len()))
}

fn matrix_spec(sig: &bifree::FaceSignature, c: Vec<Vec<Scalar>>) -> CovarianceSpec<Scalar> {
    CovarianceSpec::new(sig.clone(), c).unwrap()
}

/// `AᵀDA` for a random upper-triangular invertible `A`.
fn congruent(n: usize, signs: &[i64], r: &mut impl Rng) -> Vec<Vec<Scalar>> {
    let a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => Scalar::from(0),
                    std::cmp::Ordering::Equal => Scalar::ratio(r.gen_range(1..=3), r.gen_range(1..=2)),
                    std::cmp::Ordering::Greater => small_rational(r),
                })
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(Scalar::from(0), |acc, k| {
                        acc + a[k][i].clone() * Scalar::from(signs[k]) * a[k][j].clone()
                    })
                })
                .collect()
        })
        .collect()
}

fn direct_star_square(mu: &Distribution, p: &[(Word, Scalar)]) -> Scalar {
    let mut total = Scalar::from(0);
    for (u, cu) in p {
        for (w, cw) in p {
            total += cu.conj() * cw.clone() * mu.moment(&u.reversed().concat(w)).unwrap();
        }
    }
    total
}

fn criterion_6() -> Outcome {
    let mut r = rng(106);
    let shapes: [(&[&str], &[&str]); 4] = [(&["a"], &[]), (&["a"], &["c"]), (&["a", "b"], &["c"]), (&["a", "b"], &["c", "e"])];
    for trial in 0..10 {
        let (l, rt) = shapes[trial % 4];
        let sig = family(1, l, rt);
        let n = sig.alphabet().len();
        let c = congruent(n, &vec![1; n], &mut r);
        let g = gaussian_dist(&matrix_spec(&sig, c), 6).unwrap();
        let verdict = gram_psd_check(&g, 6).unwrap();
        ensure(verdict.is_positive(), || format!("PSD trial {trial}: {verdict:?}"))?;
    }
    for trial in 0..5 {
        let (l, rt) = shapes[1 + trial % 3];
        let sig = family(1, l, rt);
        let n = sig.alphabet().len();
        let mut signs = vec![1; n];
        signs[r.gen_range(0..n)] = -1;
        let c = congruent(n, &signs, &mut r);
        let g = gaussian_dist(&matrix_spec(&sig, c), 6).unwrap();
        match gram_psd_check(&g, 6).unwrap() {
            PsdVerdict::Indefinite { witness, value } => {
                let direct = direct_star_square(&g, &witness);
                ensure(direct == value, || format!("indefinite trial {trial}: witness value {value}, direct {direct}"))?;
                ensure(direct.re < bifree::Rational::from_integer(0.into()), || format!("indefinite trial {trial}: μ(P*P) = {direct}"))?;
                let (basis, gram) = gram_matrix(&g, 6).unwrap();
                let v: Vec<Scalar> = basis
                    .iter()
                    .map(|u| witness.iter().find(|(w, _)| w == u).map_or(Scalar::from(0), |(_, c)| c.clone()))
                    .collect();
                ensure(quadratic_form(&gram, &v) == value, || "Gram form disagrees".into())?;
            }
            other => return Err(format!("indefinite trial {trial}: {other:?}")),
        }
    }
    Ok("10 PSD covariances positive; 5 indefinite ones give verified witnesses".into())
}

fn criterion_7() -> Outcome {
    let mu = single_left(&[0, 1, 0, 5]);
    let rep = clt_report(&mu, &[4, 16, 64], 4).unwrap();
    let errs: Vec<Scalar> = rep.rows.iter().filter(|r| r.word.degree() == 4).map(|r| r.difference.clone()).collect();
    let want = [Scalar::ratio(3, 4), Scalar::ratio(3, 16), Scalar::ratio(3, 64)];
    ensure(errs == want, || format!("errors {errs:?}"))?;
    ensure(rep.decay_violations().is_empty(), || "N·|error| increased".into())?;
    let fast = scaled_sum_dist(&mu, 4, 4).unwrap();
    let direct = scaled_sum_direct(&mu, 4, 4).unwrap();
    ensure(fast == direct, || "cumulant scaling and 4-fold product differ".into())?;
    let mut r = rng(107);
    let sig = family(1, &["a"], &["b"]);
    let centered = Distribution::from_fn(sig, 4, |w| match w.degree() {
        0 => Scalar::from(1),
        1 => Scalar::from(0),
        _ => small_rational(&mut r),
    })
    .unwrap();
    ensure(scaled_sum_dist(&centered, 4, 4).unwrap() == scaled_sum_direct(&centered, 4, 4).unwrap(), || {
        "two-faced cumulant scaling differs from the 4-fold product".into()
    })?;
    Ok("errors 3/4, 3/16, 3/64; both paths agree at N = 4".into())
}

fn criterion_8() -> Outcome {
    let mut r = rng(108);
    let mu1 = random_dist(family(1, &["a", "b"], &["c"]), 3, &mut r);
    let mu2 = random_dist(family(2, &["x"], &["y", "z"]), 3, &mut r);
    let lefts: Vec<Word> = words_up_to(mu1.signature(), 3)
        .unwrap()
        .into_iter()
        .filter(|w| w.letters().iter().all(|l| l.side == Side::Left))
        .collect();
    let rights: Vec<Word> = words_up_to(mu2.signature(), 3)
        .unwrap()
        .into_iter()
        .filter(|w| w.letters().iter().all(|l| l.side == Side::Right))
        .collect();
    let fp = FreeProduct::new(&[&mu1, &mu2]).unwrap();
    let mut count = 0;
    for u in &lefts {
        for v in &rights {
            let want = mu1.moment(u).unwrap() * mu2.moment(v).unwrap();
            let n = u.degree() + v.degree();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != u.degree() {
                    continue;
                }
                let (mut iu, mut iv) = (u.letters().iter(), v.letters().iter());
                let w = Word((0..n).map(|i| *if mask >> i & 1 == 1 { iu.next() } else { iv.next() }.unwrap()).collect());
                let got = fp.joint_moment(&w).unwrap();
                ensure(got == want, || format!("{}: {got} vs {want}", w.label(fp.signature())))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} interleavings factor"))
}

fn criterion_9() -> Outcome {
    let mut r = rng(109);
    let mu1 = random_dist(family(1, &["a", "b"], &["c"]), 8, &mut r);
    let mu2 = random_dist(family(2, &["x"], &["y"]), 8, &mut r);
    let mu3 = random_dist(family(3, &["p"], &["q"]), 8, &mut r);
    let fp = FreeProduct::new(&[&mu1, &mu2, &mu3]).unwrap();
    let alpha = fp.signature().alphabet().to_vec();
    for trial in 0..100 {
        let mut s = TensorState::xi();
        for _ in 0..r.gen_range(0..=2) {
            let mut part = TensorState::xi();
            for _ in 0..r.gen_range(0..=4) {
                part = fp.apply(alpha.choose(&mut r).unwrap(), &part).unwrap();
            }
            s = s.add(&part.scale(&small_rational(&mut r)));
        }
        let left = *alpha.iter().filter(|l| l.side == Side::Left).collect::<Vec<_>>().choose(&mut r).unwrap();
        let right = *alpha
            .iter()
            .filter(|l| l.side == Side::Right && l.family != left.family)
            .collect::<Vec<_>>()
            .choose(&mut r)
            .unwrap();
        let lr = fp.apply_left(left, &fp.apply_right(right, &s).unwrap()).unwrap();
        let rl = fp.apply_right(right, &fp.apply_left(left, &s).unwrap()).unwrap();
        ensure(lr == rl, || format!("trial {trial}: actions do not commute"))?;
    }
    Ok("100 random states".into())
}

fn criterion_10() -> Outcome {
    for orders in [[2, 2], [2, 3], [3, 3]] {
        let mu = group_example_dist(&orders, 4).unwrap();
        let rep = check_bifree(&mu, 4).unwrap();
        ensure(rep.is_bifree(), || format!("orders {orders:?}: {} mismatches", rep.mismatches.len()))?;
    }
    Ok("orders (2,2), (2,3), (3,3) are bi-free to degree 4".into())
}

fn criterion_11() -> Outcome {
    let mut r = rng(111);
    let m1 = random_dist(family(1, &["a"], &["b"]), 4, &mut r);
    let m2 = random_dist(family(2, &["c"], &["e"]), 4, &mut r);
    let m3 = random_dist(family(3, &["f"], &["g"]), 4, &mut r);
    let flat = bifree_product(&[&m1, &m2, &m3], 4).unwrap();
    let first = bifree_product(&[&bifree_product(&[&m1, &m2], 4).unwrap(), &m3], 4).unwrap();
    let last = bifree_product(&[&m1, &bifree_product(&[&m2, &m3], 4).unwrap()], 4).unwrap();
    ensure(flat == first, || format!("((1,2),3) differs on {} words", flat.differences(&first).len()))?;
    ensure(flat == last, || format!("(1,(2,3)) differs on {} words", flat.differences(&last).len()))?;
    Ok(format!("{} words agree under both groupings", flat.values().len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("engine matches the naive partition expansion", criterion_1),
        ("cumulants are additive under the bi-free sum", criterion_2),
        ("degree <= 2 cumulant closed forms", criterion_3),
        ("single-face cumulants are free cumulants", criterion_4),
        ("Fock model is the bi-free Gaussian", criterion_5),
        ("positivity of Gaussian tables", criterion_6),
        ("central limit errors and oracle path", criterion_7),
        ("left/right interleavings factor", criterion_8),
        ("left and right actions commute", criterion_9),
        ("group example is bi-free", criterion_10),
        ("grouping of bi-free products", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS acceptance {:>2} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL acceptance {:>2} ({name}): {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
