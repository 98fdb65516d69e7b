//! Left and right creation and annihilation operators on the full Fock
//! space `T(H) = C1 ⊕ ⨁ H^{⊗n}` over `H = C^dim`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::models::covariance::CovarianceSpec;
use crate::ncalg::{Coefficient, Distribution, FaceSignature, GradedIndex, Letter, Side, Word};

/// `⟨u, v⟩ = Σ u_i conj(v_i)`.
pub fn inner<S: Coefficient>(u: &[S], v: &[S]) -> S {
    u.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.conj())
}

/// Vectors `h(k)` and `h*(k)` for every index of a signature.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorSpec<S> {
    signature: FaceSignature,
    dim: usize,
    /// Keyed by the unstarred letter: `(h(k), h*(k))`.
    vectors: BTreeMap<Letter, (Vec<S>, Vec<S>)>,
}

impl<S: Coefficient> VectorSpec<S> {
    pub fn new(
        signature: FaceSignature,
        dim: usize,
        vectors: BTreeMap<Letter, (Vec<S>, Vec<S>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("vector dimension must be positive".into()));
        }
        for l in signature.alphabet().iter().filter(|l| !l.star) {
            let (h, hs) = vectors.get(l).ok_or_else(|| {
                Error::Domain(format!("no vectors for index {}", signature.letter_label(l)))
            })?;
            if h.len() != dim || hs.len() != dim {
                return Err(Error::Domain(format!(
                    "vectors for {} must have length {dim}",
                    signature.letter_label(l)
                )));
            }
        }
        if let Some(l) = vectors.keys().find(|l| l.star || !signature.contains(l)) {
            return Err(Error::Domain(format!("vector entry {l:?} is not an index of the signature")));
        }
        Ok(VectorSpec { signature, dim, vectors })
    }

    pub fn signature(&self) -> &FaceSignature {
        &self.signature
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h(&self, letter: &Letter) -> Option<&[S]> {
        self.vectors.get(&letter.base()).map(|(h, _)| h.as_slice())
    }

    pub fn h_star(&self, letter: &Letter) -> Option<&[S]> {
        self.vectors.get(&letter.base()).map(|(_, hs)| hs.as_slice())
    }

    /// `(creation vector, annihilation vector)` of the operator of a letter:
    /// `z_k = l(h(k)) + l*(h*(k))` and `z_k* = l(h*(k)) + l*(h(k))`, with
    /// `r` in place of `l` on the right face.
    fn pair(&self, letter: &Letter) -> Result<(&[S], &[S])> {
        let (h, hs) = self
            .vectors
            .get(&letter.base())
            .ok_or_else(|| Error::Domain(format!("undeclared letter {letter:?}")))?;
        Ok(if letter.star { (hs, h) } else { (h, hs) })
    }

    /// `C(x, y) = ⟨z_x z_y 1, 1⟩ = ⟨create(y), annihilate(x)⟩` over the
    /// whole alphabet.
    pub fn covariance(&self) -> Result<CovarianceSpec<S>> {
        let alpha = self.signature.alphabet();
        let mut rows = Vec::with_capacity(alpha.len());
        for x in alpha {
            let (_, ann) = self.pair(x)?;
            let mut row = Vec::with_capacity(alpha.len());
            for y in alpha {
                let (cre, _) = self.pair(y)?;
                row.push(inner(cre, ann));
            }
            rows.push(row);
        }
        CovarianceSpec::new(self.signature.clone(), rows)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FockOp<'v, S> {
    CreateLeft(&'v [S]),
    AnnihLeft(&'v [S]),
    CreateRight(&'v [S]),
    AnnihRight(&'v [S]),
}

/// `vacuum·1 + Σ c·e_{i_1} ⊗ … ⊗ e_{i_n}` with no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FockState<S> {
    pub vacuum: S,
    pub terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Coefficient> FockState<S> {
    pub fn vacuum_vector() -> Self {
        FockState { vacuum: S::one(), terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.vacuum.is_zero() && self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<u32>, c: S) {
        if c.is_zero() {
            return;
        }
        if key.is_empty() {
            self.vacuum += c;
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

fn apply_pruned<S: Coefficient>(op: &FockOp<'_, S>, s: &FockState<S>, max_len: usize) -> FockState<S> {
    let mut out = FockState { vacuum: S::zero(), terms: BTreeMap::new() };
    match *op {
        FockOp::CreateLeft(h) | FockOp::CreateRight(h) => {
            let left = matches!(op, FockOp::CreateLeft(_));
            let mut push = |key: &[u32], c: &S| {
                if key.len() + 1 > max_len {
                    return;
                }
                for (i, hi) in h.iter().enumerate() {
                    if hi.is_zero() {
                        continue;
                    }
                    let mut k = Vec::with_capacity(key.len() + 1);
                    if left {
                        k.push(i as u32);
                        k.extend_from_slice(key);
                    } else {
                        k.extend_from_slice(key);
                        k.push(i as u32);
                    }
                    out.add_term(k, c.clone() * hi.clone());
                }
            };
            if !s.vacuum.is_zero() {
                push(&[], &s.vacuum);
            }
            for (key, c) in &s.terms {
                push(key, c);
            }
        }
        FockOp::AnnihLeft(h) | FockOp::AnnihRight(h) => {
            let left = matches!(op, FockOp::AnnihLeft(_));
            for (key, c) in &s.terms {
                if key.len() - 1 > max_len {
                    continue;
                }
                let (i, rest) = if left {
                    (key[0], &key[1..])
                } else {
                    (key[key.len() - 1], &key[..key.len() - 1])
                };
                // ⟨e_i, h⟩ = conj(h_i)
                let w = h[i as usize].conj();
                if !w.is_zero() {
                    out.add_term(rest.to_vec(), c.clone() * w);
                }
            }
        }
    }
    out
}

/// Applies one creation or annihilation operator.
pub fn fock_apply<S: Coefficient>(op: &FockOp<'_, S>, s: &FockState<S>, dim: usize) -> Result<FockState<S>> {
    let (FockOp::CreateLeft(h) | FockOp::AnnihLeft(h) | FockOp::CreateRight(h) | FockOp::AnnihRight(h)) = op;
    if h.len() != dim {
        return Err(Error::Domain(format!("vector of length {} in a space of dimension {dim}", h.len())));
    }
    if let Some(k) = s.terms.keys().flatten().find(|&&i| i as usize >= dim) {
        return Err(Error::Domain(format!("basis index {k} outside dimension {dim}")));
    }
    Ok(apply_pruned(op, s, usize::MAX))
}

fn apply_letter<S: Coefficient>(
    spec: &VectorSpec<S>,
    letter: &Letter,
    s: &FockState<S>,
    max_len: usize,
) -> Result<FockState<S>> {
    let (cre, ann) = spec.pair(letter)?;
    let (c, a) = match letter.side {
        Side::Left => (FockOp::CreateLeft(cre), FockOp::AnnihLeft(ann)),
        Side::Right => (FockOp::CreateRight(cre), FockOp::AnnihRight(ann)),
    };
    let mut out = apply_pruned(&c, s, max_len);
    let down = apply_pruned(&a, s, max_len);
    out.vacuum += down.vacuum;
    for (k, v) in down.terms {
        out.add_term(k, v);
    }
    Ok(out)
}

/// `⟨z_{w_1} ⋯ z_{w_n} 1, 1⟩`.
pub fn fock_moment<S: Coefficient>(spec: &VectorSpec<S>, w: &Word) -> Result<S> {
    let mut s = FockState::vacuum_vector();
    let n = w.degree();
    for (i, l) in w.letters().iter().rev().enumerate() {
        if !spec.signature.contains(l) {
            return Err(Error::Domain(format!("undeclared letter {l:?}")));
        }
        // Only vectors that can still return to the vacuum matter.
        s = apply_letter(spec, l, &s, n - 1 - i)?;
    }
    Ok(s.vacuum)
}

/// The vacuum distribution of the Fock operators to degree `d`.
pub fn fock_distribution<S: Coefficient>(spec: &VectorSpec<S>, d: usize) -> Result<Distribution<S>> {
    let alpha = spec.signature.alphabet();
    let index = GradedIndex::new(alpha.len(), d)?;
    let mut values = vec![S::zero(); index.len()];
    values[0] = S::one();
    #[allow(clippy::too_many_arguments)]
    fn visit<S: Coefficient>(
        spec: &VectorSpec<S>,
        s: &FockState<S>,
        depth: usize,
        v_val: usize,
        place: usize,
        d: usize,
        index: &GradedIndex,
        out: &mut Vec<(usize, S)>,
    ) -> Result<()> {
        let alpha = spec.signature.alphabet();
        for (x, l) in alpha.iter().enumerate() {
            let next = apply_letter(spec, l, s, d - depth - 1)?;
            let val = x * place + v_val;
            out.push((index.offset(depth + 1) + val, next.vacuum.clone()));
            if depth + 1 < d {
                visit(spec, &next, depth + 1, val, place * alpha.len(), d, index, out)?;
            }
        }
        Ok(())
    }
    if d > 0 && !alpha.is_empty() {
        let parts: Vec<Vec<(usize, S)>> = (0..alpha.len())
            .into_par_iter()
            .map(|x| -> Result<Vec<(usize, S)>> {
                let mut out = Vec::new();
                let first = apply_letter(spec, &alpha[x], &FockState::vacuum_vector(), d - 1)?;
                out.push((index.offset(1) + x, first.vacuum.clone()));
                if d > 1 {
                    visit(spec, &first, 1, x, alpha.len(), d, &index, &mut out)?;
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        for (r, v) in parts.into_iter().flatten() {
            values[r] = v;
        }
    }
    Distribution::from_values(spec.signature.clone(), d, values)
}
