//! Covariance data and the bi-free Gaussian distribution `γ_C`.

use crate::cumulant::moments_from_cumulants;
use crate::error::{Error, Result};
use crate::ncalg::{Coefficient, CumulantTable, Distribution, FaceSignature, Letter};

/// `C(x, y)` for every ordered pair of letters of the signature. On a
/// star-closed signature this is the block matrix over `K ⊔ K*`.
#[derive(Clone, Debug, PartialEq)]
pub struct CovarianceSpec<S> {
    signature: FaceSignature,
    rows: Vec<Vec<S>>,
}

impl<S: Coefficient> CovarianceSpec<S> {
    /// `rows[x][y]` indexed by letter codes.
    pub fn new(signature: FaceSignature, rows: Vec<Vec<S>>) -> Result<Self> {
        let n = signature.alphabet().len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain(format!("covariance must be a {n}x{n} matrix over the alphabet")));
        }
        Ok(CovarianceSpec { signature, rows })
    }

    pub fn zero(signature: FaceSignature) -> Self {
        let n = signature.alphabet().len();
        CovarianceSpec { signature, rows: vec![vec![S::zero(); n]; n] }
    }

    pub fn signature(&self) -> &FaceSignature {
        &self.signature
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn entry(&self, x: usize, y: usize) -> &S {
        &self.rows[x][y]
    }

    pub fn get(&self, x: &Letter, y: &Letter) -> Option<&S> {
        let i = self.signature.letter_code(x)?;
        let j = self.signature.letter_code(y)?;
        Some(&self.rows[i][j])
    }

    pub fn set(&mut self, x: &Letter, y: &Letter, value: S) -> Result<()> {
        let code = |l: &Letter| {
            self.signature
                .letter_code(l)
                .ok_or_else(|| Error::Domain(format!("letter {l:?} not in the signature")))
        };
        let (i, j) = (code(x)?, code(y)?);
        self.rows[i][j] = value;
        Ok(())
    }

    /// The cumulant table with `R_{xy} = C(x, y)` and nothing else.
    pub fn cumulants(&self, d: usize) -> Result<CumulantTable<S>> {
        let sig = self.signature.clone();
        CumulantTable::from_fn(sig, d, |w| match w.letters() {
            [x, y] => self.get(x, y).cloned().unwrap_or_else(S::zero),
            _ => S::zero(),
        })
    }
}

/// `γ_C` to degree `d >= 2`: all cumulants vanish except `R_{xy} = C(x, y)`.
pub fn gaussian_dist<S: Coefficient>(c: &CovarianceSpec<S>, d: usize) -> Result<Distribution<S>> {
    if d < 2 {
        return Err(Error::Domain(format!("a Gaussian table needs degree at least 2, got {d}")));
    }
    moments_from_cumulants(&c.cumulants(d)?, d)
}
