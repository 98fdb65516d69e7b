//! Face signatures and letters.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One generator `z_{t,k}` (or its adjoint) of the joint algebra.
///
/// Ordering is `(family, side, index, star)` with `Left < Right` and
/// `false < true`; words are ordered graded-lexicographically on top of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub family: u32,
    pub side: Side,
    /// Position of the index in the family's declared list for `side`.
    pub index: u16,
    pub star: bool,
}

impl Letter {
    pub fn left(family: u32, index: u16) -> Self {
        Letter { family, side: Side::Left, index, star: false }
    }

    pub fn right(family: u32, index: u16) -> Self {
        Letter { family, side: Side::Right, index, star: false }
    }

    pub fn starred(self) -> Self {
        Letter { star: !self.star, ..self }
    }

    /// The same generator without the star flag.
    pub fn base(self) -> Self {
        Letter { star: false, ..self }
    }
}

/// Index sets `(I, J)` of one two-faced family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    pub id: u32,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl Family {
    pub fn new<L, R>(id: u32, left: L, right: R) -> Self
    where
        L: IntoIterator,
        L::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        Family {
            id,
            left: left.into_iter().map(Into::into).collect(),
            right: right.into_iter().map(Into::into).collect(),
        }
    }

    fn names(&self, side: Side) -> &[String] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

/// Families of index pairs plus the star-closure flag.
///
/// The alphabet is cached in letter order, so the position of a letter in
/// [`FaceSignature::alphabet`] is its code for graded-lex ranking.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceSignature {
    families: Vec<Family>,
    star: bool,
    alphabet: Vec<Letter>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '-')
}

impl FaceSignature {
    pub fn new(mut families: Vec<Family>, star: bool) -> Result<Self> {
        families.sort_by_key(|f| f.id);
        for pair in families.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::Signature(format!("family id {} declared twice", pair[0].id)));
            }
        }
        for fam in &families {
            let mut seen = std::collections::BTreeSet::new();
            for name in fam.left.iter().chain(&fam.right) {
                if !valid_name(name) {
                    return Err(Error::Signature(format!(
                        "family {}: invalid index name {name:?}",
                        fam.id
                    )));
                }
                if !seen.insert(name.as_str()) {
                    return Err(Error::Signature(format!(
                        "family {}: index {name} is repeated or on both faces",
                        fam.id
                    )));
                }
            }
            if fam.left.len() > u16::MAX as usize || fam.right.len() > u16::MAX as usize {
                return Err(Error::Signature("too many indices".into()));
            }
        }
        let mut alphabet = Vec::new();
        for fam in &families {
            for side in [Side::Left, Side::Right] {
                for index in 0..fam.names(side).len() {
                    let l = Letter { family: fam.id, side, index: index as u16, star: false };
                    alphabet.push(l);
                    if star {
                        alphabet.push(l.starred());
                    }
                }
            }
        }
        Ok(FaceSignature { families, star, alphabet })
    }

    /// The signature with no families.
    pub fn empty() -> Self {
        FaceSignature { families: Vec::new(), star: false, alphabet: Vec::new() }
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, id: u32) -> Option<&Family> {
        self.families
            .binary_search_by_key(&id, |f| f.id)
            .ok()
            .map(|i| &self.families[i])
    }

    pub fn family_ids(&self) -> Vec<u32> {
        self.families.iter().map(|f| f.id).collect()
    }

    pub fn star_closed(&self) -> bool {
        self.star
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn letter_code(&self, letter: &Letter) -> Option<usize> {
        self.alphabet.binary_search(letter).ok()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.letter_code(letter).is_some()
    }

    /// Looks up the unstarred letter `family.name`.
    pub fn letter(&self, family: u32, name: &str) -> Option<Letter> {
        let fam = self.family(family)?;
        for side in [Side::Left, Side::Right] {
            if let Some(i) = fam.names(side).iter().position(|n| n == name) {
                return Some(Letter { family, side, index: i as u16, star: false });
            }
        }
        None
    }

    pub fn index_name(&self, letter: &Letter) -> Option<&str> {
        self.family(letter.family)?
            .names(letter.side)
            .get(letter.index as usize)
            .map(String::as_str)
    }

    /// `FAM.NAME` with a trailing `*` for adjoints.
    pub fn letter_label(&self, letter: &Letter) -> String {
        let name = self.index_name(letter).unwrap_or("?");
        format!("{}.{}{}", letter.family, name, if letter.star { "*" } else { "" })
    }

    pub fn parse_letter(&self, token: &str) -> Option<Letter> {
        let (body, star) = match token.strip_suffix('*') {
            Some(b) => (b, true),
            None => (token, false),
        };
        let (fam, name) = body.split_once('.')?;
        let fam: u32 = fam.parse().ok()?;
        let letter = self.letter(fam, name)?;
        if star && !self.star {
            return None;
        }
        Some(Letter { star, ..letter })
    }

    /// Sub-signature on the given families.
    pub fn restrict(&self, ids: &[u32]) -> Result<Self> {
        let mut fams = Vec::new();
        for &id in ids {
            let fam = self
                .family(id)
                .ok_or_else(|| Error::Domain(format!("unknown family id {id}")))?;
            if !fams.iter().any(|f: &Family| f.id == id) {
                fams.push(fam.clone());
            }
        }
        FaceSignature::new(fams, self.star)
    }

    /// Disjoint union; family ids must not clash and star flags must agree.
    pub fn disjoint_union<'a, I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a FaceSignature>,
    {
        let mut fams = Vec::new();
        let mut star = None;
        for sig in parts {
            match star {
                None => star = Some(sig.star),
                Some(s) if s != sig.star => {
                    return Err(Error::Signature("mixed star-closed and plain signatures".into()))
                }
                _ => {}
            }
            fams.extend(sig.families.iter().cloned());
        }
        FaceSignature::new(fams, star.unwrap_or(false))
    }

    /// Same index sets with every family id mapped through `f`.
    pub fn retagged(&self, f: impl Fn(u32) -> u32) -> Result<Self> {
        let fams = self
            .families
            .iter()
            .map(|fam| Family { id: f(fam.id), ..fam.clone() })
            .collect();
        FaceSignature::new(fams, self.star)
    }

    /// Same index sets as `other`, ignoring family ids.
    pub fn same_faces(&self, other: &FaceSignature) -> bool {
        self.star == other.star
            && self.families.len() == other.families.len()
            && self
                .families
                .iter()
                .zip(&other.families)
                .all(|(a, b)| a.left == b.left && a.right == b.right)
    }
}

impl fmt::Display for FaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in &self.families {
            for (side, names) in [("left", &fam.left), ("right", &fam.right)] {
                write!(f, "# family {} {side}:", fam.id)?;
                for n in names {
                    write!(f, " {n}")?;
                }
                writeln!(f)?;
            }
        }
        writeln!(f, "# star: {}", if self.star { "yes" } else { "no" })
    }
}
