//! Bi-free products of distributions and the bi-freeness check.

use smallvec::smallvec;

use crate::engine::action::Engine;
use crate::engine::state::TensorState;
use crate::engine::tabulate::{tabulate, Move};
use crate::error::{Error, Result};
use crate::ncalg::{Coefficient, Distribution, FaceSignature, Letter, Side, Word};

/// The free product of the marginals' vector spaces, with joint letters
/// routed to the component that owns their family.
///
/// A component may carry several families; it then acts as one bi-free
/// block, which is how grouped products are formed.
pub struct FreeProduct<'a, S> {
    engine: Engine<'a, S>,
    signature: FaceSignature,
    /// Joint letter code to `(component, local code)`.
    routes: Vec<(u16, u16)>,
}

impl<'a, S: Coefficient> FreeProduct<'a, S> {
    pub fn new(marginals: &[&'a Distribution<S>]) -> Result<Self> {
        let signature = FaceSignature::disjoint_union(marginals.iter().map(|m| m.signature()))?;
        let routes = signature
            .alphabet()
            .iter()
            .map(|l| {
                let comp = marginals
                    .iter()
                    .position(|m| m.signature().family(l.family).is_some())
                    .expect("every joint family comes from a marginal");
                let code = marginals[comp].signature().letter_code(l).expect("letter in marginal");
                (comp as u16, code as u16)
            })
            .collect();
        Ok(FreeProduct { engine: Engine::new(marginals.to_vec()), signature, routes })
    }

    pub fn signature(&self) -> &FaceSignature {
        &self.signature
    }

    fn route(&self, letter: &Letter) -> Result<(u16, u16)> {
        let code = self.signature.letter_code(letter).ok_or_else(|| {
            Error::Domain(format!("letter {letter:?} is not in the product signature"))
        })?;
        Ok(self.routes[code])
    }

    /// `λ_t(a)` for a left letter; `ρ_t(a)` for a right letter.
    pub fn apply(&self, letter: &Letter, state: &TensorState<S>) -> Result<TensorState<S>> {
        let (comp, code) = self.route(letter)?;
        self.engine.act(comp, code, state, usize::MAX)
    }

    pub fn apply_left(&self, letter: &Letter, state: &TensorState<S>) -> Result<TensorState<S>> {
        if letter.side != Side::Left {
            return Err(Error::Domain("apply_left needs a left-face letter".into()));
        }
        self.apply(letter, state)
    }

    pub fn apply_right(&self, letter: &Letter, state: &TensorState<S>) -> Result<TensorState<S>> {
        if letter.side != Side::Right {
            return Err(Error::Domain("apply_right needs a right-face letter".into()));
        }
        self.apply(letter, state)
    }

    /// `φ(w)`: the letters act on `ξ` from right to left and the coefficient
    /// of `ξ` is read off.
    pub fn joint_moment(&self, w: &Word) -> Result<S> {
        let mut state = TensorState::xi();
        let n = w.degree();
        for (i, letter) in w.letters().iter().rev().enumerate() {
            let (comp, code) = self.route(letter)?;
            state = self.engine.act(comp, code, &state, n - 1 - i)?;
        }
        Ok(state.vacuum().clone())
    }

    /// The joint distribution on every word of degree `<= d`.
    pub fn distribution(&self, d: usize) -> Result<Distribution<S>> {
        let moves: Vec<Move> = self.routes.iter().map(|&r| vec![smallvec![r]]).collect();
        let values = tabulate(&self.engine, &moves, d)?;
        Distribution::from_values(self.signature.clone(), d, values)
    }
}

/// `φ(w)` under the bi-free product of the marginals.
pub fn joint_moment<S: Coefficient>(marginals: &[&Distribution<S>], w: &Word) -> Result<S> {
    FreeProduct::new(marginals)?.joint_moment(w)
}

/// Joint distribution of the bi-free product, tabulated to degree `d`.
pub fn bifree_product<S: Coefficient>(marginals: &[&Distribution<S>], d: usize) -> Result<Distribution<S>> {
    FreeProduct::new(marginals)?.distribution(d)
}

/// One word on which a joint distribution departs from bi-freeness.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<S> {
    pub word: Word,
    /// Value under the bi-free product of the family restrictions.
    pub expected: S,
    /// Value in the joint distribution.
    pub found: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BifreeReport<S> {
    pub degree: usize,
    pub mismatches: Vec<Mismatch<S>>,
}

impl<S> BifreeReport<S> {
    pub fn is_bifree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `joint` with the bi-free product of its single-family
/// restrictions on all words of degree `<= d`.
pub fn check_bifree<S: Coefficient>(joint: &Distribution<S>, d: usize) -> Result<BifreeReport<S>> {
    let joint = if joint.degree() == d { joint.clone() } else { joint.truncate(d)? };
    let marginals = joint
        .signature()
        .family_ids()
        .into_iter()
        .map(|id| joint.restrict(&[id]))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<_> = marginals.iter().collect();
    let expected = bifree_product(&refs, d)?;
    let mismatches = expected
        .differences(&joint)
        .into_iter()
        .map(|(word, expected, found)| Mismatch { word, expected, found })
        .collect();
    Ok(BifreeReport { degree: d, mismatches })
}
