//! Objects on an `I_n` fiber, their Hom totals where these are known in
//! closed form, and the curves they correspond to on the punctured torus.

mod lattice;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::mcg::{MappingClassGroup, McgError};
use crate::surface::{intersection_number, CurveOnSurface};

pub use lattice::{form_kernel, in_restriction_lattice, multidegree, DivisorTerm, InFiberForm, MultiDegree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DcatError {
    #[error("Hom({0}, {1}) is not tabulated for n = {2}")]
    NotTabulated(ObjTag, ObjTag, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot parse object tag {0:?}")]
    BadTag(String),
    #[error(transparent)]
    Mcg(#[from] McgError),
}

/// An indecomposable object on the fiber `Y = G_1 ∪ .. ∪ G_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ObjTag {
    /// The structure sheaf `O_Y`.
    OY,
    /// The skyscraper `O_{x_i}` at a smooth point of `G_i`.
    Ox(usize),
    /// `O_{G_i}(a)`.
    OG(usize, i64),
    /// `Ψ_i(O_{x_i})`, with `Ψ_i` the restriction of the twist by `O_{G_i}(-1)`.
    PsiOx(usize),
}

impl ObjTag {
    pub fn index(self) -> Option<usize> {
        match self {
            ObjTag::OY => None,
            ObjTag::Ox(i) | ObjTag::OG(i, _) | ObjTag::PsiOx(i) => Some(i),
        }
    }

    pub fn check(self, n: usize) -> Result<(), DcatError> {
        match self.index() {
            Some(i) if i == 0 || i > n => Err(DcatError::IndexOutOfRange { index: i, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ObjTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjTag::OY => write!(f, "OY"),
            ObjTag::Ox(i) => write!(f, "Ox({i})"),
            ObjTag::OG(i, a) => write!(f, "OG({i},{a})"),
            ObjTag::PsiOx(i) => write!(f, "PsiOx({i})"),
        }
    }
}

impl FromStr for ObjTag {
    type Err = DcatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DcatError::BadTag(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "OY" {
            return Ok(ObjTag::OY);
        }
        let (head, rest) = t.split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(bad)?.split(',').collect();
        let idx = |k: usize| args.get(k).and_then(|a| a.parse::<usize>().ok()).ok_or_else(bad);
        match (head, args.len()) {
            ("Ox", 1) => Ok(ObjTag::Ox(idx(0)?)),
            ("PsiOx", 1) => Ok(ObjTag::PsiOx(idx(0)?)),
            ("OG", 2) => Ok(ObjTag::OG(idx(0)?, args[1].parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

fn adjacent(n: usize, i: usize, j: usize) -> bool {
    i != j && (i % n + 1 == j || j % n + 1 == i)
}

/// `Σ_k dim Hom^k(E, F)` on the fiber, for the pairs where it is known.
///
/// Pairs outside the table give [`DcatError::NotTabulated`], which is
/// distinct from a zero total.
pub fn hom_total(n: usize, e: ObjTag, f: ObjTag) -> Result<u64, DcatError> {
    e.check(n)?;
    f.check(n)?;
    let missing = || DcatError::NotTabulated(e, f, n);
    use ObjTag::*;
    match (e, f) {
        // Ψ fixes O_{x_j} off G_i and is an equivalence.
        (PsiOx(i), Ox(j)) if i != j => Ok(0),
        (PsiOx(i), Ox(j)) if i == j && n >= 3 => Ok(2),
        (PsiOx(_), OY) if n >= 3 => Ok(1),
        (PsiOx(i), OG(j, -1)) if n >= 3 => Ok(if i == j || adjacent(n, i, j) { 1 } else { 0 }),
        (PsiOx(i), OG(j, 0)) if i == j && n >= 3 => Ok(3),
        (OG(i, -1), Ox(j)) if i != j => Ok(0),
        (OG(_, -1), OY) => Ok(0),
        _ => Err(missing()),
    }
}

/// Every tabulated pair for `n`, in a fixed order.
pub fn tabulated_pairs(n: usize) -> Vec<(ObjTag, ObjTag)> {
    let mut tags = vec![ObjTag::OY];
    for i in 1..=n {
        tags.extend([ObjTag::Ox(i), ObjTag::OG(i, -1), ObjTag::OG(i, 0), ObjTag::PsiOx(i)]);
    }
    let mut out = Vec::new();
    for &e in &tags {
        for &f in &tags {
            if hom_total(n, e, f).is_ok() {
                out.push((e, f));
            }
        }
    }
    out
}

/// The curve on the `n`-punctured torus corresponding to `tag`.
pub fn curve_of(
    group: &Arc<MappingClassGroup>,
    tag: ObjTag,
    max_iterations: usize,
) -> Result<CurveOnSurface, DcatError> {
    let n = group.n();
    tag.check(n)?;
    let m = group.model();
    Ok(match tag {
        ObjTag::OY => m.curve_a(),
        ObjTag::Ox(i) => m.curve_b(i).map_err(McgError::from)?,
        ObjTag::OG(i, a) => group.derived_arc(i, a, max_iterations)?,
        ObjTag::PsiOx(i) => {
            let b = m.curve_b(i).map_err(McgError::from)?;
            group.tau(i, -1, 1)?.act(&b, max_iterations)?
        }
    })
}

/// The tabulated total and the geometric intersection number of the
/// corresponding curves, in that order.
pub fn dictionary_pair(
    group: &Arc<MappingClassGroup>,
    e: ObjTag,
    f: ObjTag,
    max_iterations: usize,
) -> Result<(u64, u64), DcatError> {
    let expected = hom_total(group.n(), e, f)?;
    let ce = curve_of(group, e, max_iterations)?;
    let cf = curve_of(group, f, max_iterations)?;
    let actual = intersection_number(group.model(), &ce, &cf).map_err(McgError::from)?;
    Ok((expected, actual))
}

pub fn check_dictionary(
    group: &Arc<MappingClassGroup>,
    e: ObjTag,
    f: ObjTag,
    max_iterations: usize,
) -> Result<bool, DcatError> {
    let (expected, actual) = dictionary_pair(group, e, f, max_iterations)?;
    Ok(expected == actual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for t in [ObjTag::OY, ObjTag::Ox(3), ObjTag::OG(2, -5), ObjTag::PsiOx(1)] {
            assert_eq!(t.to_string().parse::<ObjTag>().unwrap(), t);
        }
        assert!("OG(1)".parse::<ObjTag>().is_err());
        assert!("Q".parse::<ObjTag>().is_err());
    }

    #[test]
    fn table_values() {
        use ObjTag::*;
        assert_eq!(hom_total(4, PsiOx(1), Ox(1)), Ok(2));
        assert_eq!(hom_total(4, PsiOx(1), OY), Ok(1));
        assert_eq!(hom_total(4, PsiOx(1), OG(1, -1)), Ok(1));
        assert_eq!(hom_total(4, PsiOx(1), OG(2, -1)), Ok(1));
        assert_eq!(hom_total(4, PsiOx(1), OG(4, -1)), Ok(1));
        assert_eq!(hom_total(4, PsiOx(1), OG(3, -1)), Ok(0));
        assert_eq!(hom_total(4, PsiOx(1), OG(1, 0)), Ok(3));
        assert_eq!(hom_total(4, OG(1, -1), Ox(2)), Ok(0));
        assert!(matches!(hom_total(4, OG(1, -1), OG(2, -1)), Err(DcatError::NotTabulated(..))));
        assert!(matches!(hom_total(2, PsiOx(1), Ox(1)), Err(DcatError::NotTabulated(..))));
        assert!(matches!(hom_total(3, Ox(4), OY), Err(DcatError::IndexOutOfRange { .. })));
    }

    #[test]
    fn adjacency_is_cyclic() {
        assert!(adjacent(5, 5, 1));
        assert!(adjacent(5, 2, 3));
        assert!(!adjacent(5, 2, 4));
        assert!(!adjacent(5, 2, 2));
    }
}
