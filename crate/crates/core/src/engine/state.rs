//! Vectors of the free product `X = Cξ ⊕ ⨁ X°_{i_1} ⊗ … ⊗ X°_{i_n}`.
//!
//! Each factor space is the free algebra of one component with state-vector
//! `1`; its reduced subspace `ker μ_t` has the basis `[w] = w − μ_t(w)·1`
//! over nonempty words `w`. A [`TensorWord`] is a tensor product of such basis
//! vectors from alternating components, and a [`TensorState`] is a finite
//! linear combination of tensor words plus a vacuum coefficient.

use smallvec::SmallVec;

use crate::ncalg::Coefficient;

/// Letter codes local to one component's alphabet.
pub type CodeWord = SmallVec<[u16; 8]>;

/// Basis vector `[w] = w − μ_t(w)·1` of `ker μ_t` for a nonempty word `w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub component: u16,
    pub word: CodeWord,
}

/// `[w_1] ⊗ … ⊗ [w_n]` with adjacent blocks from distinct components.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord {
    pub blocks: SmallVec<[Block; 3]>,
}

impl TensorWord {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_alternating(&self) -> bool {
        self.blocks.windows(2).all(|p| p[0].component != p[1].component)
            && self.blocks.iter().all(|b| !b.word.is_empty())
    }
}

/// A general element of `ker μ_t`: `Σ c_w [w]` over nonempty words of one
/// component. Tensor products of these expand multilinearly into
/// [`TensorWord`] terms.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedVector<S> {
    pub component: u16,
    pub combo: Vec<(CodeWord, S)>,
}

/// `vacuum·ξ + Σ c_T·T`, kept sorted by tensor word with no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorState<S> {
    pub(crate) vacuum: S,
    pub(crate) terms: Vec<(TensorWord, S)>,
}

impl<S: Coefficient> TensorState<S> {
    /// The state-vector `ξ`.
    pub fn xi() -> Self {
        TensorState { vacuum: S::one(), terms: Vec::new() }
    }

    pub fn zero() -> Self {
        TensorState { vacuum: S::zero(), terms: Vec::new() }
    }

    /// `coeff · v_1 ⊗ … ⊗ v_n`; an empty list gives `coeff · ξ`.
    ///
    /// Panics if adjacent vectors share a component.
    pub fn tensor(vectors: &[ReducedVector<S>], coeff: S) -> Self {
        assert!(
            vectors.windows(2).all(|p| p[0].component != p[1].component),
            "adjacent reduced vectors must come from distinct components"
        );
        if vectors.is_empty() {
            return TensorState { vacuum: coeff, terms: Vec::new() };
        }
        let mut partial: Vec<(TensorWord, S)> = vec![(TensorWord::default(), coeff)];
        for v in vectors {
            let mut next = Vec::with_capacity(partial.len() * v.combo.len());
            for (tw, c) in &partial {
                for (w, cw) in &v.combo {
                    assert!(!w.is_empty(), "reduced vectors are spanned by nonempty words");
                    let mut t = tw.clone();
                    t.blocks.push(Block { component: v.component, word: w.clone() });
                    next.push((t, c.clone() * cw.clone()));
                }
            }
            partial = next;
        }
        let mut s = TensorState { vacuum: S::zero(), terms: partial };
        normalize(&mut s.terms);
        s
    }

    /// Coefficient of `ξ`.
    pub fn vacuum(&self) -> &S {
        &self.vacuum
    }

    pub fn terms(&self) -> &[(TensorWord, S)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.vacuum.is_zero() && self.terms.is_empty()
    }

    pub fn is_alternating(&self) -> bool {
        self.terms.iter().all(|(t, _)| t.is_alternating())
    }

    pub fn add(&self, other: &TensorState<S>) -> TensorState<S> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        normalize(&mut terms);
        TensorState { vacuum: self.vacuum.clone() + other.vacuum.clone(), terms }
    }

    pub fn scale(&self, c: &S) -> TensorState<S> {
        let mut terms: Vec<_> =
            self.terms.iter().map(|(t, v)| (t.clone(), v.clone() * c.clone())).collect();
        terms.retain(|(_, v)| !v.is_zero());
        TensorState { vacuum: self.vacuum.clone() * c.clone(), terms }
    }

    /// Largest number of blocks in any term.
    pub fn max_blocks(&self) -> usize {
        self.terms.iter().map(|(t, _)| t.len()).max().unwrap_or(0)
    }
}

/// The expectation `φ(T) = ⟨coefficient of ξ in Tξ⟩`.
pub fn vacuum_coefficient<S: Coefficient>(s: &TensorState<S>) -> S {
    s.vacuum.clone()
}

/// Sorts, merges equal tensor words and drops zero coefficients.
pub(crate) fn normalize<S: Coefficient>(terms: &mut Vec<(TensorWord, S)>) {
    if terms.len() < 2 {
        terms.retain(|(_, c)| !c.is_zero());
        return;
    }
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(TensorWord, S)> = Vec::with_capacity(terms.len());
    for (t, c) in terms.drain(..) {
        match out.last_mut() {
            Some((lt, lc)) if *lt == t => *lc += c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((t, c));
            }
        }
    }
    if matches!(out.last(), Some((_, c)) if c.is_zero()) {
        out.pop();
    }
    *terms = out;
}
