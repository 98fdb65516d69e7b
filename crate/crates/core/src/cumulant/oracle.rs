//! Brute-force free cumulants over non-crossing partitions.
//!
//! Independent of the product engine: partitions are enumerated directly and
//! the Möbius function of the non-crossing lattice is computed from its
//! order relation.

use crate::error::{Error, Result};
use crate::ncalg::{Coefficient, Distribution, Letter, Word};

/// Set partitions of `0..n` as block labels in restricted-growth form.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            go(i + 1, n, cur, if b == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn is_noncrossing(p: &[usize]) -> bool {
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if p[a] == p[c] && p[b] == p[d] && p[a] != p[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `p` refines `q`: every block of `p` sits inside a block of `q`.
fn refines(p: &[usize], q: &[usize]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| p[i] != p[j] || q[i] == q[j]))
}

fn blocks(p: &[usize]) -> Vec<Vec<usize>> {
    let count = p.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (i, &b) in p.iter().enumerate() {
        out[b].push(i);
    }
    out
}

/// Non-crossing partitions of `0..n` with their Möbius values `μ(π, 1_n)`.
pub fn noncrossing_mobius(n: usize) -> Vec<(Vec<Vec<usize>>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut nc: Vec<Vec<usize>> = set_partitions(n).into_iter().filter(|p| is_noncrossing(p)).collect();
    // Coarsest first, so every strictly coarser partition is already done.
    nc.sort_by_key(|p| p.iter().max().copied().unwrap_or(0));
    let mut mob: Vec<i64> = Vec::with_capacity(nc.len());
    for (i, p) in nc.iter().enumerate() {
        let value = if i == 0 {
            1
        } else {
            -(0..i).filter(|&j| nc[j] != *p && refines(p, &nc[j])).map(|j| mob[j]).sum::<i64>()
        };
        mob.push(value);
    }
    nc.iter().map(|p| blocks(p)).zip(mob).collect()
}

fn single_face(w: &Word) -> Result<()> {
    let Some(first) = w.letters().first() else { return Ok(()) };
    if w.letters().iter().any(|l| l.side != first.side) {
        return Err(Error::Domain("free cumulant oracle needs a single-face word".into()));
    }
    Ok(())
}

fn sub(w: &Word, block: &[usize]) -> Word {
    Word(block.iter().map(|&i| w.letters()[i]).collect())
}

/// Free cumulant `κ_w` of a word using one face of one family.
pub fn free_cumulant_oracle<S: Coefficient>(mu: &Distribution<S>, w: &Word) -> Result<S> {
    single_face(w)?;
    if w.families().len() > 1 {
        return Err(Error::Domain("free cumulant oracle needs a single-family word".into()));
    }
    cumulant_with(w, &|u| mu.moment(u))
}

fn cumulant_with<S: Coefficient>(w: &Word, moment: &dyn Fn(&Word) -> Result<S>) -> Result<S> {
    let mut total = S::zero();
    for (pi, m) in noncrossing_mobius(w.degree()) {
        let mut term = S::from_integer(m);
        for b in &pi {
            term *= moment(&sub(w, b))?;
        }
        total += term;
    }
    Ok(total)
}

/// Moment of a single-face word under the free product of the marginals:
/// the sum over non-crossing partitions of products of free cumulants, with
/// blocks mixing families contributing zero.
pub fn free_product_moment_oracle<S: Coefficient>(marginals: &[&Distribution<S>], w: &Word) -> Result<S> {
    single_face(w)?;
    let owner = |l: &Letter| {
        marginals
            .iter()
            .find(|m| m.signature().family(l.family).is_some())
            .copied()
            .ok_or_else(|| Error::Domain(format!("no marginal for family {}", l.family)))
    };
    let mut total = S::zero();
    for (pi, _) in noncrossing_mobius(w.degree()) {
        let mut term = S::one();
        for b in &pi {
            let u = sub(w, b);
            if u.families().len() > 1 {
                term = S::zero();
                break;
            }
            let mu = owner(&u.letters()[0])?;
            term *= free_cumulant_oracle(mu, &u)?;
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::GaussianRational as Q;
    use crate::testing::family;

    #[test]
    fn catalan_counts_and_mobius_sums() {
        let counts: Vec<_> = (0..=6).map(|n| noncrossing_mobius(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
        // μ(0_n, 1_n) = (−1)^{n−1} C_{n−1}
        let bottom = |n: usize| noncrossing_mobius(n).into_iter().find(|(p, _)| p.len() == n).unwrap().1;
        assert_eq!([bottom(1), bottom(2), bottom(3), bottom(4), bottom(5)], [1, -1, 2, -5, 14]);
    }

    #[test]
    fn point_mass_at_one() {
        let one = Distribution::<Q>::identity(family(1, &["a"], &[]), 4).unwrap();
        let a = one.signature().alphabet()[0];
        let k: Vec<_> = (1..=4).map(|n| free_cumulant_oracle(&one, &Word(vec![a; n])).unwrap()).collect();
        assert_eq!(k, [Q::from(1), Q::from(0), Q::from(0), Q::from(0)]);
    }

    #[test]
    fn mixed_faces_rejected() {
        let mu = Distribution::<Q>::identity(family(1, &["a"], &["c"]), 2).unwrap();
        let w = Word(mu.signature().alphabet().to_vec());
        assert!(matches!(free_cumulant_oracle(&mu, &w), Err(Error::Domain(_))));
    }
}
