//! Whole-table evaluation by depth-first search over word suffixes.
//!
//! Letters act right to left, so the state reached by a word `x·v` is one
//! action step away from the state of its suffix `v`. Walking the suffix trie
//! visits every word once and shares all common work.

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::engine::action::Engine;
use crate::engine::state::TensorState;
use crate::error::Result;
use crate::ncalg::{Coefficient, GradedIndex};

/// `(component, local letter code)` of one engine action.
pub(crate) type Action = (u16, u16);

/// One output letter expands to a sum of alternatives; each alternative is a
/// sequence of actions listed in application order.
pub(crate) type Move = Vec<SmallVec<[Action; 2]>>;

struct Walk<'e, 'a, S> {
    engine: &'e Engine<'a, S>,
    moves: &'e [Move],
    index: &'e GradedIndex,
    degree: usize,
    span: usize,
}

impl<S: Coefficient> Walk<'_, '_, S> {
    fn step(&self, x: usize, state: &TensorState<S>, depth: usize) -> Result<TensorState<S>> {
        let remaining_moves = self.degree - depth - 1;
        let mut total: Option<TensorState<S>> = None;
        for alt in &self.moves[x] {
            let mut s = state.clone();
            for (i, &(comp, code)) in alt.iter().enumerate() {
                let budget = remaining_moves * self.span + (alt.len() - 1 - i);
                s = self.engine.act(comp, code, &s, budget)?;
            }
            total = Some(match total {
                None => s,
                Some(t) => t.add(&s),
            });
        }
        Ok(total.unwrap_or_else(TensorState::zero))
    }

    /// Visits every word `x·v` with `v` the current suffix of length `depth`
    /// and graded-lex value `v_val`.
    fn visit(
        &self,
        state: &TensorState<S>,
        depth: usize,
        v_val: usize,
        place: usize,
        out: &mut Vec<(usize, S)>,
    ) -> Result<()> {
        let letters = self.moves.len();
        for x in 0..letters {
            let next = self.step(x, state, depth)?;
            let val = x * place + v_val;
            out.push((self.index.offset(depth + 1) + val, next.vacuum().clone()));
            if depth + 1 < self.degree {
                self.visit(&next, depth + 1, val, place * letters, out)?;
            }
        }
        Ok(())
    }
}

/// Vacuum coefficients of every word of degree `<= degree` over the move
/// alphabet, in graded-lex rank order.
pub(crate) fn tabulate<S: Coefficient>(
    engine: &Engine<'_, S>,
    moves: &[Move],
    degree: usize,
) -> Result<Vec<S>> {
    let letters = moves.len();
    let index = GradedIndex::new(letters, degree)?;
    let mut values = vec![S::zero(); index.len()];
    values[0] = S::one();
    if degree == 0 || letters == 0 {
        return Ok(values);
    }
    let span = moves.iter().flatten().map(|a| a.len()).max().unwrap_or(1).max(1);
    let walk = Walk { engine, moves, index: &index, degree, span };
    let xi = TensorState::xi();
    let parts: Vec<Vec<(usize, S)>> = (0..letters)
        .into_par_iter()
        .map(|x| -> Result<Vec<(usize, S)>> {
            let mut out = Vec::new();
            let first = walk.step(x, &xi, 0)?;
            out.push((index.offset(1) + x, first.vacuum().clone()));
            if degree > 1 {
                walk.visit(&first, 1, x, letters, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    for part in parts {
        for (r, v) in part {
            values[r] = v;
        }
    }
    Ok(values)
}
