use super::word::{push_reduced, CyclicWord, Letter, ReducedWord};
use super::FreeGroupError;
use crate::perm::Permutation;

/// An automorphism of a free group, given by the images of the generators
/// together with the images under its inverse.
///
/// The inverse table is never computed; it is supplied by whoever builds
/// the automorphism and checked on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeAutomorphism {
    images: Vec<ReducedWord>,
    inverse_images: Vec<ReducedWord>,
}

impl FreeAutomorphism {
    pub fn new(
        images: Vec<ReducedWord>,
        inverse_images: Vec<ReducedWord>,
    ) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(FreeGroupError::RankMismatch { left: rank, right: inverse_images.len() });
        }
        for w in images.iter().chain(&inverse_images) {
            if let Some(g) = w.max_generator() {
                if g >= rank {
                    return Err(FreeGroupError::AlphabetMismatch { generator: g, rank });
                }
            }
        }
        let phi = FreeAutomorphism { images, inverse_images };
        for g in 0..rank {
            let x = ReducedWord::generator(g);
            if phi.apply_inverse(&phi.apply(&x)?)? != x || phi.apply(&phi.apply_inverse(&x)?)? != x
            {
                return Err(FreeGroupError::NotInverse { generator: g });
            }
        }
        Ok(phi)
    }

    pub fn identity(rank: usize) -> Self {
        let images: Vec<_> = (0..rank).map(ReducedWord::generator).collect();
        FreeAutomorphism { inverse_images: images.clone(), images }
    }

    /// `g -> w g w^-1`.
    pub fn conjugation(rank: usize, w: &ReducedWord) -> Self {
        let gens = (0..rank).map(ReducedWord::generator);
        FreeAutomorphism {
            images: gens.clone().map(|g| g.conjugate_by(w)).collect(),
            inverse_images: gens.map(|g| g.conjugate_by(&w.inverse())).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[ReducedWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[ReducedWord] {
        &self.inverse_images
    }

    pub fn image(&self, g: usize) -> &ReducedWord {
        &self.images[g]
    }

    pub fn apply(&self, w: &ReducedWord) -> Result<ReducedWord, FreeGroupError> {
        substitute(&self.images, w)
    }

    pub fn apply_inverse(&self, w: &ReducedWord) -> Result<ReducedWord, FreeGroupError> {
        substitute(&self.inverse_images, w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism, FreeGroupError> {
        if self.rank() != other.rank() {
            return Err(FreeGroupError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<_, _>>()?;
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|w| other.apply_inverse(w))
            .collect::<Result<_, _>>()?;
        Ok(FreeAutomorphism { images, inverse_images })
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism { images: self.inverse_images.clone(), inverse_images: self.images.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, w)| *w == ReducedWord::generator(g))
    }

    /// Total letters over all generator images.
    pub fn size(&self) -> usize {
        self.images.iter().map(ReducedWord::len).sum()
    }

    /// A conjugator `w` with `φ(g) = w g w^-1` for every generator, if one
    /// exists.
    ///
    /// All conjugators of `g_0` into `φ(g_0)` form the coset `w0 <g_0>`;
    /// the candidate exponent is bounded by the length of
    /// `w0^-1 φ(g_1) w0`, since conjugating `g_1` by `g_0^k` yields a
    /// reduced word of length `2|k| + 1`.
    pub fn is_inner(&self) -> Option<ReducedWord> {
        let rank = self.rank();
        if rank == 0 {
            return Some(ReducedWord::identity());
        }
        let g0 = ReducedWord::generator(0);
        let (w0, core) = self.images[0].cyclic_reduction();
        if core != g0 {
            return None;
        }
        if rank == 1 {
            return Some(ReducedWord::identity());
        }
        let shifted = w0.inverse().mul(&self.images[1]).mul(&w0);
        let bound = shifted.len() as i64 + 1;
        (-bound..=bound)
            .map(|k| w0.mul(&g0.pow(k)))
            .find(|w| self.is_conjugation_by(w))
    }

    pub fn is_conjugation_by(&self, w: &ReducedWord) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, img)| *img == ReducedWord::generator(g).conjugate_by(w))
    }
}

fn substitute(table: &[ReducedWord], w: &ReducedWord) -> Result<ReducedWord, FreeGroupError> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        let img = table
            .get(l.generator())
            .ok_or(FreeGroupError::AlphabetMismatch { generator: l.generator(), rank: table.len() })?;
        if l.is_inverse() {
            for &m in img.letters().iter().rev() {
                push_reduced(&mut out, m.inverse());
            }
        } else {
            for &m in img.letters() {
                push_reduced(&mut out, m);
            }
        }
    }
    Ok(ReducedWord::reduce(out))
}

/// The conjugacy classes of the puncture loops `c_1, .., c_n`.
///
/// `representatives` are based words whose product, in order, is the
/// boundary commutator; `classes` are their conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralStructure {
    representatives: Vec<ReducedWord>,
    classes: Vec<CyclicWord>,
}

impl PeripheralStructure {
    pub fn new(representatives: Vec<ReducedWord>) -> Self {
        let classes = representatives.iter().map(CyclicWord::new).collect();
        PeripheralStructure { representatives, classes }
    }

    pub fn classes(&self) -> &[CyclicWord] {
        &self.classes
    }

    pub fn representatives(&self) -> &[ReducedWord] {
        &self.representatives
    }

    /// Product `c_1 ⋯ c_n` of the based representatives.
    pub fn product(&self) -> ReducedWord {
        self.representatives.iter().fold(ReducedWord::identity(), |acc, c| acc.mul(c))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The index of the class equal to `c` up to inversion.
    pub fn index_of(&self, c: &CyclicWord) -> Option<usize> {
        self.classes.iter().position(|d| d.same_unoriented(c))
    }
}

/// The permutation `π` with `φ(c_i)` conjugate to `c_{π(i)}^{±1}`, when
/// `φ` preserves the peripheral structure.
pub fn peripheral_check(
    phi: &FreeAutomorphism,
    structure: &PeripheralStructure,
) -> Option<Permutation> {
    let mut images = Vec::with_capacity(structure.len());
    for rep in structure.representatives() {
        let img = CyclicWord::new(&phi.apply(rep).ok()?);
        images.push(structure.index_of(&img)?);
    }
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::Alphabet;

    fn w(text: &str) -> ReducedWord {
        Alphabet::generic(3).parse(text).unwrap()
    }

    fn swap_ab() -> FreeAutomorphism {
        FreeAutomorphism::new(vec![w("b"), w("a")], vec![w("b"), w("a")]).unwrap()
    }

    #[test]
    fn identity_fixes_words() {
        let id = FreeAutomorphism::identity(3);
        assert_eq!(id.apply(&w("a b^-1 c")).unwrap(), w("a b^-1 c"));
    }

    #[test]
    fn conjugation_by_a_sends_b_to_aba() {
        let phi = FreeAutomorphism::conjugation(2, &w("a"));
        assert_eq!(phi.apply(&w("b")).unwrap(), w("a b a^-1"));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let phi = FreeAutomorphism::new(vec![w("a b"), w("b")], vec![w("a b^-1"), w("b")]).unwrap();
        let id = phi.compose(&phi.inverse()).unwrap();
        assert!(id.is_identity());
        assert_eq!(phi.compose(&FreeAutomorphism::identity(2)).unwrap(), phi);
    }

    #[test]
    fn wrong_inverse_table_rejected() {
        let bad = FreeAutomorphism::new(vec![w("a b"), w("b")], vec![w("a b"), w("b")]);
        assert!(matches!(bad, Err(FreeGroupError::NotInverse { .. })));
    }

    #[test]
    fn alphabet_mismatch_on_apply() {
        let id = FreeAutomorphism::identity(2);
        assert!(matches!(id.apply(&w("c")), Err(FreeGroupError::AlphabetMismatch { .. })));
    }

    #[test]
    fn inner_detection() {
        assert_eq!(FreeAutomorphism::identity(3).is_inner(), Some(ReducedWord::identity()));
        let ab = w("a b");
        assert_eq!(FreeAutomorphism::conjugation(3, &ab).is_inner(), Some(ab));
        assert_eq!(swap_ab().is_inner(), None);
    }

    #[test]
    fn inner_by_power_of_first_generator() {
        let x = w("a a a b");
        assert_eq!(FreeAutomorphism::conjugation(2, &x).is_inner(), Some(x));
        let y = w("a^-1 a^-1");
        assert_eq!(FreeAutomorphism::conjugation(3, &y).is_inner(), Some(y));
    }

    #[test]
    fn peripheral_permutation() {
        // Two "puncture" classes a and b, swapped by the swap automorphism.
        let p = PeripheralStructure::new(vec![w("a"), w("b")]);
        assert_eq!(peripheral_check(&FreeAutomorphism::identity(2), &p), Some(Permutation::identity(2)));
        assert_eq!(peripheral_check(&swap_ab(), &p), Some(Permutation::transposition(2, 0, 1)));
        let to_ab = FreeAutomorphism::new(vec![w("a b"), w("b")], vec![w("a b^-1"), w("b")]).unwrap();
        assert_eq!(peripheral_check(&to_ab, &p), None);
    }
}
