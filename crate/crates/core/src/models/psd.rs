//! Positivity of a moment table: `μ(P*P) >= 0` for every polynomial `P` of
//! degree `<= ⌊d/2⌋`, decided exactly on the Gram matrix.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ncalg::{word_star, words_up_to, Coefficient, Distribution, Word};

#[derive(Clone, Debug, PartialEq)]
pub enum PsdVerdict<S> {
    Positive,
    /// `P = Σ c_u u` with `μ(P*P) = value < 0`.
    Indefinite { witness: Vec<(Word, S)>, value: S },
    /// `μ(u*w) ≠ conj(μ(w*u))`; no involution-compatible state has this table.
    NonHermitian { row: Word, col: Word },
}

impl<S> PsdVerdict<S> {
    pub fn is_positive(&self) -> bool {
        matches!(self, PsdVerdict::Positive)
    }
}

/// `u*`: the star involution on star-closed signatures, otherwise word
/// reversal with every letter self-adjoint.
pub fn adjoint_word<S: Coefficient>(mu: &Distribution<S>, u: &Word) -> Result<Word> {
    if mu.signature().star_closed() {
        word_star(mu.signature(), u)
    } else {
        Ok(u.reversed())
    }
}

/// The Gram matrix `G[u][w] = μ(u*·w)` over words of degree `<= d/2`.
pub fn gram_matrix<S: Coefficient>(mu: &Distribution<S>, d: usize) -> Result<(Vec<Word>, Vec<Vec<S>>)> {
    let basis = words_up_to(mu.signature(), d / 2)?;
    let mut g = Vec::with_capacity(basis.len());
    for u in &basis {
        let us = adjoint_word(mu, u)?;
        g.push(basis.iter().map(|w| mu.moment(&us.concat(w))).collect::<Result<Vec<_>>>()?);
    }
    Ok((basis, g))
}

/// `Σ conj(v_i) G_ij v_j`.
pub fn quadratic_form<S: Coefficient>(g: &[Vec<S>], v: &[S]) -> S {
    let mut total = S::zero();
    for (i, row) in g.iter().enumerate() {
        if v[i].is_zero() {
            continue;
        }
        let mut acc = S::zero();
        for (j, gij) in row.iter().enumerate() {
            if !v[j].is_zero() {
                acc += gij.clone() * v[j].clone();
            }
        }
        total += v[i].conj() * acc;
    }
    total
}

/// Decides whether `μ` is positive on polynomials of degree `<= d/2` by
/// symmetric elimination with largest-diagonal pivoting.
pub fn gram_psd_check<S: Coefficient>(mu: &Distribution<S>, d: usize) -> Result<PsdVerdict<S>> {
    if d < 2 {
        return Err(Error::Domain(format!("positivity check needs degree at least 2, got {d}")));
    }
    let (basis, g) = gram_matrix(mu, d)?;
    let n = basis.len();
    for i in 0..n {
        for j in i..n {
            if g[i][j] != g[j][i].conj() {
                return Ok(PsdVerdict::NonHermitian { row: basis[i].clone(), col: basis[j].clone() });
            }
        }
    }

    // Schur complement `a` on the live indices; row `i` of it is the form
    // restricted to the vector `combo[i]`.
    let mut a = g.clone();
    let mut combo: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut e = vec![S::zero(); n];
            e[i] = S::one();
            e
        })
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let found = loop {
        let Some(&p) = live.iter().max_by(|&&x, &&y| a[x][x].cmp_real(&a[y][y])) else {
            break None;
        };
        match a[p][p].cmp_real(&S::zero()) {
            Ordering::Greater => {
                live.retain(|&i| i != p);
                let piv = a[p][p].clone();
                let pivot_combo = combo[p].clone();
                for &i in &live {
                    let f = a[p][i].clone() / piv.clone();
                    if f.is_zero() {
                        continue;
                    }
                    for &j in &live {
                        let t = a[i][p].clone() * a[p][j].clone() / piv.clone();
                        a[i][j] -= t;
                    }
                    for (c, t) in combo[i].iter_mut().zip(&pivot_combo) {
                        *c -= f.clone() * t.clone();
                    }
                }
            }
            Ordering::Less => break Some(combo[p].clone()),
            Ordering::Equal => {
                // Every live diagonal entry is zero.
                let pair = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                match pair {
                    None => break None,
                    Some((i, j)) => {
                        let t = a[i][j].conj();
                        break Some(
                            (0..n).map(|k| combo[i][k].clone() - t.clone() * combo[j][k].clone()).collect(),
                        );
                    }
                }
            }
        }
    };
    match found {
        None => Ok(PsdVerdict::Positive),
        Some(v) => {
            let value = quadratic_form(&g, &v);
            debug_assert!(value.cmp_real(&S::zero()) == Ordering::Less);
            let witness = basis.into_iter().zip(v).filter(|(_, c)| !c.is_zero()).collect();
            Ok(PsdVerdict::Indefinite { witness, value })
        }
    }
}
