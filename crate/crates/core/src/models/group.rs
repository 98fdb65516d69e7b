//! Left and right regular representations of a free product of cyclic
//! groups, with the vacuum state `φ(T) = τ(Tδ_e)`.

use crate::error::{Error, Result};
use crate::ncalg::{Distribution, FaceSignature, Family, GaussianRational, Side, Word};

/// Reduced word in `Z/m_1 * … * Z/m_k`: `(group, exponent)` pairs with
/// nonzero exponents and no two adjacent pairs from the same group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupElement(pub Vec<(usize, u32)>);

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// `u_g · self`.
    pub fn mul_left(&mut self, g: usize, orders: &[u32]) {
        match self.0.first_mut() {
            Some((h, e)) if *h == g => {
                *e = (*e + 1) % orders[g];
                if *e == 0 {
                    self.0.remove(0);
                }
            }
            _ => self.0.insert(0, (g, 1 % orders[g])),
        }
    }

    /// `self · u_g`.
    pub fn mul_right(&mut self, g: usize, orders: &[u32]) {
        match self.0.last_mut() {
            Some((h, e)) if *h == g => {
                *e = (*e + 1) % orders[g];
                if *e == 0 {
                    self.0.pop();
                }
            }
            _ => self.0.push((g, 1 % orders[g])),
        }
    }
}

/// Signature with family `i + 1` carrying left index `l` and right index
/// `r` for the `i`-th group.
pub fn group_signature(groups: usize) -> Result<FaceSignature> {
    let fams = (0..groups).map(|i| Family::new(i as u32 + 1, ["l"], ["r"])).collect();
    FaceSignature::new(fams, false)
}

/// Joint distribution of `(L(δ_{u_i}), R(δ_{u_i}))` with `L(δ_h)δ_g = δ_{hg}`
/// and `R(δ_h)δ_g = δ_{gh}`: a word has moment 1 when it maps `δ_e` back to
/// `δ_e` and 0 otherwise.
pub fn group_example_dist(orders: &[u32], d: usize) -> Result<Distribution<GaussianRational>> {
    if let Some(m) = orders.iter().find(|&&m| m < 2) {
        return Err(Error::Domain(format!("cyclic group orders must be at least 2, got {m}")));
    }
    let sig = group_signature(orders.len())?;
    Distribution::from_fn(sig, d, |w: &Word| {
        let mut g = GroupElement::default();
        for l in w.letters().iter().rev() {
            let grp = (l.family - 1) as usize;
            match l.side {
                Side::Left => g.mul_left(grp, orders),
                Side::Right => g.mul_right(grp, orders),
            }
        }
        GaussianRational::from(i64::from(g.is_identity()))
    })
}
