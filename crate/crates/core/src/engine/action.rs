//! Left and right actions `λ_t`, `ρ_t` on tensor states.

use smallvec::SmallVec;

use crate::engine::state::{normalize, Block, CodeWord, TensorState, TensorWord};
use crate::error::{Error, Result};
use crate::ncalg::{word::codes_to_word, Coefficient, Distribution, Side};

/// Components of a free product, each a distribution acting by left
/// multiplication on its own free algebra.
pub(crate) struct Engine<'a, S> {
    comps: Vec<&'a Distribution<S>>,
    /// Side of every local letter code, per component.
    sides: Vec<Vec<Side>>,
}

impl<'a, S: Coefficient> Engine<'a, S> {
    pub(crate) fn new(comps: Vec<&'a Distribution<S>>) -> Self {
        assert!(comps.len() <= u16::MAX as usize, "too many components");
        let sides = comps
            .iter()
            .map(|d| d.signature().alphabet().iter().map(|l| l.side).collect())
            .collect();
        Engine { comps, sides }
    }

    pub(crate) fn side(&self, comp: u16, code: u16) -> Side {
        self.sides[comp as usize][code as usize]
    }

    fn moment(&self, comp: u16, codes: &[u16]) -> Result<&S> {
        let mu = self.comps[comp as usize];
        mu.by_codes(codes).ok_or_else(|| Error::Truncation {
            word: codes_to_word(mu.signature(), codes).label(mu.signature()),
            degree: mu.degree(),
        })
    }

    /// Applies letter `code` of component `comp` with the action fixed by its
    /// side: `λ` on the first block for left letters, `ρ` on the last block
    /// for right letters. Terms with more than `budget` blocks are dropped;
    /// pass the number of actions still to come to keep the vacuum
    /// coefficient of every later state exact.
    pub(crate) fn act(
        &self,
        comp: u16,
        code: u16,
        state: &TensorState<S>,
        budget: usize,
    ) -> Result<TensorState<S>> {
        let side = self.side(comp, code);
        let mean = self.moment(comp, &[code])?.clone();
        let mut vacuum = S::zero();
        let mut terms: Vec<(TensorWord, S)> = Vec::with_capacity(state.terms.len() * 3 + 1);
        let single = |w: CodeWord| Block { component: comp, word: w };

        if !state.vacuum.is_zero() {
            if !mean.is_zero() {
                vacuum += state.vacuum.clone() * mean.clone();
            }
            if budget >= 1 {
                let mut blocks = SmallVec::new();
                blocks.push(single(CodeWord::from_slice(&[code])));
                terms.push((TensorWord { blocks }, state.vacuum.clone()));
            }
        }

        for (tw, c) in &state.terms {
            let n = tw.len();
            let edge_pos = match side {
                Side::Left => 0,
                Side::Right => n - 1,
            };
            let edge = &tw.blocks[edge_pos];
            if edge.component != comp {
                if !mean.is_zero() && n <= budget {
                    terms.push((tw.clone(), c.clone() * mean.clone()));
                }
                if n < budget {
                    let mut t = tw.clone();
                    let b = single(CodeWord::from_slice(&[code]));
                    match side {
                        Side::Left => t.blocks.insert(0, b),
                        Side::Right => t.blocks.push(b),
                    }
                    terms.push((t, c.clone()));
                }
                continue;
            }

            // T·[w] = [aw] − μ(w)[a] + (μ(aw) − μ(w)μ(a))·1 inside the component.
            let w = &edge.word;
            let mut aw = CodeWord::with_capacity(w.len() + 1);
            aw.push(code);
            aw.extend_from_slice(w);
            let m_w = self.moment(comp, w)?.clone();
            let m_aw = self.moment(comp, &aw)?.clone();
            if n <= budget {
                let mut t = tw.clone();
                t.blocks[edge_pos].word = aw;
                terms.push((t, c.clone()));
                if !m_w.is_zero() {
                    let mut t = tw.clone();
                    t.blocks[edge_pos].word = CodeWord::from_slice(&[code]);
                    terms.push((t, -(c.clone() * m_w.clone())));
                }
            }
            let psi = m_aw - m_w * mean.clone();
            if !psi.is_zero() {
                if n == 1 {
                    vacuum += c.clone() * psi;
                } else if n - 1 <= budget {
                    let mut t = tw.clone();
                    t.blocks.remove(edge_pos);
                    terms.push((t, c.clone() * psi));
                }
            }
        }
        normalize(&mut terms);
        let out = TensorState { vacuum, terms };
        debug_assert!(out.is_alternating());
        Ok(out)
    }
}
