//! Noncommutative monomials and their graded-lexicographic indexing.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ncalg::signature::{FaceSignature, Letter};

/// A finite product of letters; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letters whose family is in `fams`, in order.
    pub fn subword_of_families(&self, fams: &[u32]) -> Word {
        Word(self.0.iter().filter(|l| fams.contains(&l.family)).copied().collect())
    }

    pub fn families(&self) -> Vec<u32> {
        let mut f: Vec<u32> = self.0.iter().map(|l| l.family).collect();
        f.sort_unstable();
        f.dedup();
        f
    }

    pub fn label(&self, sig: &FaceSignature) -> String {
        if self.0.is_empty() {
            return "()".to_string();
        }
        self.0.iter().map(|l| sig.letter_label(l)).collect::<Vec<_>>().join(" ")
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic: shorter words first, then letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// The involution: reverse and toggle each star flag.
pub fn word_star(sig: &FaceSignature, w: &Word) -> Result<Word> {
    if !sig.star_closed() {
        return Err(Error::UnsupportedInvolution);
    }
    Ok(Word(w.0.iter().rev().map(|l| l.starred()).collect()))
}

/// Dense graded-lex ranking of words over an alphabet of `letters` symbols.
///
/// Rank 0 is the empty word; words of degree `n` occupy
/// `offset(n) .. offset(n) + letters^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIndex {
    letters: usize,
    degree: usize,
    offsets: Vec<usize>,
}

impl GradedIndex {
    pub fn new(letters: usize, degree: usize) -> Result<Self> {
        let mut offsets = Vec::with_capacity(degree + 2);
        let mut total: usize = 0;
        let mut layer: usize = 1;
        for n in 0..=degree {
            offsets.push(total);
            total = total
                .checked_add(layer)
                .ok_or_else(|| Error::Domain(format!("too many words at degree {n}")))?;
            if n < degree {
                layer = layer
                    .checked_mul(letters)
                    .ok_or_else(|| Error::Domain(format!("too many words at degree {}", n + 1)))?;
            }
        }
        offsets.push(total);
        Ok(GradedIndex { letters, degree, offsets })
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of words of degree `<= degree`; equals `sum_n letters^n`.
    pub fn len(&self) -> usize {
        self.offsets[self.degree + 1]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn offset(&self, n: usize) -> usize {
        self.offsets[n]
    }

    /// Rank of a word given by letter codes, or `None` past the degree bound.
    pub fn rank(&self, codes: &[u16]) -> Option<usize> {
        if codes.len() > self.degree {
            return None;
        }
        let mut r = 0usize;
        for &c in codes {
            r = r * self.letters + c as usize;
        }
        Some(self.offsets[codes.len()] + r)
    }

    pub fn unrank(&self, rank: usize) -> Vec<u16> {
        let n = (0..=self.degree)
            .rev()
            .find(|&n| self.offsets[n] <= rank)
            .unwrap_or(0);
        let mut r = rank - self.offsets[n];
        let mut codes = vec![0u16; n];
        for slot in codes.iter_mut().rev() {
            *slot = (r % self.letters) as u16;
            r /= self.letters;
        }
        codes
    }

    /// Degree of the word with this rank.
    pub fn degree_of(&self, rank: usize) -> usize {
        (0..=self.degree).rev().find(|&n| self.offsets[n] <= rank).unwrap_or(0)
    }
}

/// All words of degree `<= d` over `sig`, in graded-lex order.
pub fn words_up_to(sig: &FaceSignature, d: usize) -> Result<Vec<Word>> {
    let idx = GradedIndex::new(sig.alphabet().len(), d)?;
    Ok((0..idx.len()).map(|r| codes_to_word(sig, &idx.unrank(r))).collect())
}

pub fn codes_to_word(sig: &FaceSignature, codes: &[u16]) -> Word {
    Word(codes.iter().map(|&c| sig.alphabet()[c as usize]).collect())
}

pub fn word_to_codes(sig: &FaceSignature, w: &Word) -> Option<Vec<u16>> {
    w.0.iter().map(|l| sig.letter_code(l).map(|c| c as u16)).collect()
}
