//! Truncated moment functionals and cumulant tables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ncalg::scalar::{Coefficient, GaussianRational};
use crate::ncalg::signature::FaceSignature;
use crate::ncalg::word::{codes_to_word, word_to_codes, GradedIndex, Word};

/// Dense word-indexed table over a signature, total up to a degree bound.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct WordTable<S> {
    pub(crate) signature: FaceSignature,
    pub(crate) index: GradedIndex,
    pub(crate) values: Vec<S>,
}

impl<S: Coefficient> WordTable<S> {
    fn build(
        signature: FaceSignature,
        degree: usize,
        mut f: impl FnMut(&Word) -> Result<S>,
    ) -> Result<Self> {
        let index = GradedIndex::new(signature.alphabet().len(), degree)?;
        let mut values = Vec::with_capacity(index.len());
        for r in 0..index.len() {
            let w = codes_to_word(&signature, &index.unrank(r));
            values.push(f(&w)?);
        }
        Ok(WordTable { signature, index, values })
    }

    fn from_map(
        signature: FaceSignature,
        degree: usize,
        mut map: BTreeMap<Word, S>,
        skip_empty: bool,
    ) -> Result<Self> {
        let index = GradedIndex::new(signature.alphabet().len(), degree)?;
        let mut values = Vec::with_capacity(index.len());
        for r in 0..index.len() {
            let w = codes_to_word(&signature, &index.unrank(r));
            if skip_empty && r == 0 {
                values.push(S::zero());
                continue;
            }
            match map.remove(&w) {
                Some(v) => values.push(v),
                None => return Err(Error::Incomplete { word: w.label(&signature) }),
            }
        }
        if let Some((w, _)) = map.into_iter().next() {
            return Err(Error::Domain(format!(
                "entry for {} lies outside the signature or degree bound",
                w.label(&signature)
            )));
        }
        Ok(WordTable { signature, index, values })
    }

    fn get(&self, w: &Word) -> Option<&S> {
        let codes = word_to_codes(&self.signature, w)?;
        self.index.rank(&codes).map(|r| &self.values[r])
    }

    fn lookup(&self, w: &Word) -> Result<&S> {
        let codes = word_to_codes(&self.signature, w).ok_or_else(|| {
            Error::Domain(format!("word uses letters outside the signature ({} letters)", w.degree()))
        })?;
        match self.index.rank(&codes) {
            Some(r) => Ok(&self.values[r]),
            None => Err(Error::Truncation {
                word: w.label(&self.signature),
                degree: self.index.degree(),
            }),
        }
    }

    fn word(&self, rank: usize) -> Word {
        codes_to_word(&self.signature, &self.index.unrank(rank))
    }
}

/// Moment functional `μ` truncated at a degree bound: one value per word of
/// degree `<= degree`, with `μ(1) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<S = GaussianRational> {
    pub(crate) table: WordTable<S>,
}

impl<S: Coefficient> Distribution<S> {
    /// Tabulates `f` on every word of degree `<= degree`.
    pub fn from_fn(
        signature: FaceSignature,
        degree: usize,
        mut f: impl FnMut(&Word) -> S,
    ) -> Result<Self> {
        Self::try_from_fn(signature, degree, |w| Ok(f(w)))
    }

    pub fn try_from_fn(
        signature: FaceSignature,
        degree: usize,
        f: impl FnMut(&Word) -> Result<S>,
    ) -> Result<Self> {
        Self::from_table(WordTable::build(signature, degree, f)?)
    }

    /// Requires an entry for every word, including the empty one.
    pub fn from_map(signature: FaceSignature, degree: usize, map: BTreeMap<Word, S>) -> Result<Self> {
        Self::from_table(WordTable::from_map(signature, degree, map, false)?)
    }

    /// Values in graded-lex rank order.
    pub fn from_values(signature: FaceSignature, degree: usize, values: Vec<S>) -> Result<Self> {
        let index = GradedIndex::new(signature.alphabet().len(), degree)?;
        if values.len() != index.len() {
            return Err(Error::Domain(format!(
                "expected {} values, got {}",
                index.len(),
                values.len()
            )));
        }
        Self::from_table(WordTable { signature, index, values })
    }

    pub(crate) fn from_table(table: WordTable<S>) -> Result<Self> {
        if !table.values[0].is_one() {
            return Err(Error::Normalization { value: format!("{:?}", table.values[0]) });
        }
        Ok(Distribution { table })
    }

    /// All variables equal to zero: every nonempty moment vanishes.
    pub fn point(signature: FaceSignature, degree: usize) -> Result<Self> {
        Self::from_fn(signature, degree, |w| if w.is_empty() { S::one() } else { S::zero() })
    }

    /// All variables equal to the unit: every moment is 1.
    pub fn identity(signature: FaceSignature, degree: usize) -> Result<Self> {
        Self::from_fn(signature, degree, |_| S::one())
    }

    pub fn signature(&self) -> &FaceSignature {
        &self.table.signature
    }

    pub fn degree(&self) -> usize {
        self.table.index.degree()
    }

    pub fn index(&self) -> &GradedIndex {
        &self.table.index
    }

    /// Values in graded-lex rank order.
    pub fn values(&self) -> &[S] {
        &self.table.values
    }

    pub fn get(&self, w: &Word) -> Option<&S> {
        self.table.get(w)
    }

    /// `μ(w)`, failing with a truncation error past the degree bound.
    pub fn moment(&self, w: &Word) -> Result<S> {
        self.table.lookup(w).cloned()
    }

    /// Lookup by letter codes of this signature's alphabet.
    pub fn by_codes(&self, codes: &[u16]) -> Option<&S> {
        self.table.index.rank(codes).map(|r| &self.table.values[r])
    }

    pub fn word(&self, rank: usize) -> Word {
        self.table.word(rank)
    }

    /// `(word, value)` pairs in graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, &S)> + '_ {
        self.table.values.iter().enumerate().map(|(r, v)| (self.table.word(r), v))
    }

    /// Drops every entry above degree `d`.
    pub fn truncate(&self, d: usize) -> Result<Self> {
        if d > self.degree() {
            return Err(Error::Truncation {
                word: format!("(any word of degree {d})"),
                degree: self.degree(),
            });
        }
        let index = GradedIndex::new(self.table.signature.alphabet().len(), d)?;
        let values = self.table.values[..index.len()].to_vec();
        Ok(Distribution {
            table: WordTable { signature: self.table.signature.clone(), index, values },
        })
    }

    /// Marginal on the families `fams`, same degree bound.
    pub fn restrict(&self, fams: &[u32]) -> Result<Self> {
        let sig = self.signature().restrict(fams)?;
        Distribution::try_from_fn(sig, self.degree(), |w| self.moment(w))
    }

    /// Same moments under a new family labelling.
    pub fn retagged(&self, f: impl Fn(u32) -> u32) -> Result<Self> {
        let sig = self.signature().retagged(&f)?;
        let source = self.signature();
        Distribution::try_from_fn(sig, self.degree(), |w| {
            let mut orig = Vec::with_capacity(w.degree());
            for l in w.letters() {
                let back = source
                    .families()
                    .iter()
                    .find(|fam| f(fam.id) == l.family)
                    .map(|fam| fam.id)
                    .ok_or_else(|| Error::Signature("retagging is not injective".into()))?;
                orig.push(crate::ncalg::Letter { family: back, ..*l });
            }
            self.moment(&Word(orig))
        })
    }

    pub fn map_values<T: Coefficient>(&self, f: impl Fn(&Word, &S) -> T) -> Result<Distribution<T>> {
        let values = self
            .table
            .values
            .iter()
            .enumerate()
            .map(|(r, v)| f(&self.table.word(r), v))
            .collect();
        Distribution::from_values(self.signature().clone(), self.degree(), values)
    }

    /// Words on which the two tables disagree, with `(self, other)` values.
    pub fn differences(&self, other: &Distribution<S>) -> Vec<(Word, S, S)> {
        self.table
            .values
            .iter()
            .zip(&other.table.values)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(r, (a, b))| (self.table.word(r), a.clone(), b.clone()))
            .collect()
    }
}

/// Bi-free cumulants `R_w` for every nonempty word of degree `<= degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantTable<S = GaussianRational> {
    pub(crate) table: WordTable<S>,
}

impl<S: Coefficient> CumulantTable<S> {
    /// `f` is never called on the empty word.
    pub fn from_fn(
        signature: FaceSignature,
        degree: usize,
        mut f: impl FnMut(&Word) -> S,
    ) -> Result<Self> {
        let table = WordTable::build(signature, degree, |w| {
            Ok(if w.is_empty() { S::zero() } else { f(w) })
        })?;
        Ok(CumulantTable { table })
    }

    pub fn from_map(signature: FaceSignature, degree: usize, map: BTreeMap<Word, S>) -> Result<Self> {
        Ok(CumulantTable { table: WordTable::from_map(signature, degree, map, true)? })
    }

    /// Values in graded-lex rank order; the slot of the empty word is ignored.
    pub fn from_values(signature: FaceSignature, degree: usize, mut values: Vec<S>) -> Result<Self> {
        let index = GradedIndex::new(signature.alphabet().len(), degree)?;
        if values.len() != index.len() {
            return Err(Error::Domain(format!(
                "expected {} values, got {}",
                index.len(),
                values.len()
            )));
        }
        values[0] = S::zero();
        Ok(CumulantTable { table: WordTable { signature, index, values } })
    }

    pub fn signature(&self) -> &FaceSignature {
        &self.table.signature
    }

    pub fn degree(&self) -> usize {
        self.table.index.degree()
    }

    pub fn index(&self) -> &GradedIndex {
        &self.table.index
    }

    /// Values in rank order; entry 0 is a zero placeholder.
    pub fn values(&self) -> &[S] {
        &self.table.values
    }

    pub fn get(&self, w: &Word) -> Option<&S> {
        if w.is_empty() {
            return None;
        }
        self.table.get(w)
    }

    pub fn cumulant(&self, w: &Word) -> Result<S> {
        if w.is_empty() {
            return Err(Error::Domain("cumulants are indexed by nonempty words".into()));
        }
        self.table.lookup(w).cloned()
    }

    /// `(word, value)` pairs over nonempty words in graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, &S)> + '_ {
        self.table.values.iter().enumerate().skip(1).map(|(r, v)| (self.table.word(r), v))
    }

    pub fn word(&self, rank: usize) -> Word {
        self.table.word(rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::signature::Family;

    type Q = GaussianRational;

    fn sig2() -> FaceSignature {
        FaceSignature::new(
            vec![Family::new(1, ["a"], ["c"]), Family::new(2, ["x"], Vec::<String>::new())],
            false,
        )
        .unwrap()
    }

    #[test]
    fn unitality_is_enforced() {
        let err = Distribution::<Q>::from_fn(sig2(), 2, |_| Q::from(2)).unwrap_err();
        assert!(matches!(err, Error::Normalization { .. }));
    }

    #[test]
    fn from_map_names_first_missing_word() {
        let sig = sig2();
        let mut map = BTreeMap::new();
        map.insert(Word::empty(), Q::from(1));
        map.insert(Word(vec![sig.letter(1, "a").unwrap()]), Q::from(0));
        map.insert(Word(vec![sig.letter(2, "x").unwrap()]), Q::from(0));
        match Distribution::from_map(sig, 1, map) {
            Err(Error::Incomplete { word }) => assert_eq!(word, "1.c"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn restrict_examples() {
        let sig = sig2();
        let mu = Distribution::<Q>::from_fn(sig.clone(), 3, |w| Q::ratio(1, 1 + w.degree() as i64)).unwrap();
        assert_eq!(mu.restrict(&[1, 2]).unwrap(), mu);
        let empty = mu.restrict(&[]).unwrap();
        assert_eq!(empty.values(), &[Q::from(1)]);
        let one = mu.restrict(&[2]).unwrap();
        assert_eq!(one.values().len(), 4);
        assert!(matches!(mu.restrict(&[9]), Err(Error::Domain(_))));
    }

    #[test]
    fn moment_past_degree_is_truncation() {
        let sig = sig2();
        let mu = Distribution::<Q>::point(sig.clone(), 1).unwrap();
        let a = sig.letter(1, "a").unwrap();
        assert!(matches!(mu.moment(&Word(vec![a, a])), Err(Error::Truncation { .. })));
    }
}
