use std::cmp::Ordering;
use std::fmt;

use super::FreeGroupError;

/// A generator or its inverse, packed as a nonzero integer: `+(g + 1)` for
/// generator `g`, `-(g + 1)` for its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        let code = generator as i32 + 1;
        Letter(if inverse { -code } else { code })
    }

    pub fn gen(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn generator(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }
}

// Fixed total order used for canonical rotations: by generator, then
// positive before inverse.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator(), self.is_inverse()).cmp(&(other.generator(), other.is_inverse()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generator names for a free group. For the punctured torus the names are
/// `A, B1, ..., Bn`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self, FreeGroupError> {
        if names.is_empty() {
            return Err(FreeGroupError::EmptyAlphabet);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(FreeGroupError::DuplicateName(a.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    /// `A, B1, ..., Bn`: rank `n + 1`.
    pub fn punctured_torus(n: usize) -> Self {
        let mut names = vec!["A".to_string()];
        names.extend((1..=n).map(|k| format!("B{k}")));
        Alphabet { names }
    }

    /// `a, b, c, ...` followed by `x5, x6, ...` past the alphabet.
    pub fn generic(rank: usize) -> Self {
        let names = (0..rank)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{i}")
                }
            })
            .collect();
        Alphabet { names }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    /// Parses whitespace-separated letters such as `A B1^-1 a`.
    pub fn parse(&self, text: &str) -> Result<ReducedWord, FreeGroupError> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (token, false),
            };
            let g = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| FreeGroupError::UnknownLetter(token.to_string()))?;
            raw.push(Letter::new(g, inverse));
        }
        Ok(ReducedWord::reduce(raw))
    }

    pub fn format(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "ε".to_string();
        }
        letters
            .iter()
            .map(|l| {
                let name = self.name(l.generator());
                if l.is_inverse() {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A freely reduced word: no letter is adjacent to its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord::default()
    }

    pub fn generator(g: usize) -> Self {
        ReducedWord { letters: vec![Letter::gen(g)] }
    }

    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            push_reduced(&mut letters, l);
        }
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator()).max()
    }

    pub fn mul(&self, other: &ReducedWord) -> ReducedWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        ReducedWord { letters }
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, k: i64) -> ReducedWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = ReducedWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `w self w^-1`.
    pub fn conjugate_by(&self, w: &ReducedWord) -> ReducedWord {
        w.mul(self).mul(&w.inverse())
    }

    /// Splits `self = u c u^-1` with `c` cyclically reduced.
    pub fn cyclic_reduction(&self) -> (ReducedWord, ReducedWord) {
        let l = &self.letters;
        let mut lo = 0;
        let mut hi = l.len();
        while hi - lo >= 2 && l[lo] == l[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        (
            ReducedWord { letters: l[..lo].to_vec() },
            ReducedWord { letters: l[lo..hi].to_vec() },
        )
    }

    /// Exponent sum of each generator.
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.letters {
            v[l.generator()] += l.sign() as i64;
        }
        v
    }

    /// Number of letters `g^{±1}` for the given generator.
    pub fn count_generator(&self, g: usize) -> usize {
        self.letters.iter().filter(|l| l.generator() == g).count()
    }
}

pub(crate) fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

impl FromIterator<Letter> for ReducedWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        ReducedWord::reduce(iter)
    }
}

/// A conjugacy class of the free group, stored as a cyclically reduced word
/// rotated to its lexicographically least form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn new(word: &ReducedWord) -> Self {
        let (_, core) = word.cyclic_reduction();
        CyclicWord { letters: least_rotation(core.letters()) }
    }

    pub fn from_letters(raw: impl IntoIterator<Item = Letter>) -> Self {
        CyclicWord::new(&ReducedWord::reduce(raw))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_letters(self.letters.iter().rev().map(|l| l.inverse()))
    }

    /// The word read once around, as an element (any rotation would do).
    pub fn to_word(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.clone() }
    }

    /// Equal as unoriented classes: equal to `other` or to its inverse.
    pub fn same_unoriented(&self, other: &CyclicWord) -> bool {
        self == other || *self == other.inverse()
    }
}

fn least_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0;
    for start in 1..n {
        for k in 0..n {
            let a = letters[(start + k) % n];
            let b = letters[(best + k) % n];
            match a.cmp(&b) {
                Ordering::Less => {
                    best = start;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    (0..n).map(|k| letters[(best + k) % n]).collect()
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.max_generator().map_or(1, |g| g + 1);
        write!(f, "{}", Alphabet::generic(rank).format(&self.letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> ReducedWord {
        Alphabet::generic(3).parse(text).unwrap()
    }

    #[test]
    fn cancels_adjacent_inverse_pair() {
        assert!(w("a a^-1").is_identity());
        assert_eq!(w("a b b^-1 a"), w("a a"));
    }

    #[test]
    fn word_times_inverse_is_identity() {
        let x = w("a b^-1 c c a");
        assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn cyclic_reduction_strips_conjugator() {
        let (u, c) = w("a b c b^-1 a^-1").cyclic_reduction();
        assert_eq!(u, w("a b"));
        assert_eq!(c, w("c"));
    }

    #[test]
    fn cyclic_word_identifies_rotations_and_conjugates() {
        assert_eq!(CyclicWord::new(&w("a b c")), CyclicWord::new(&w("c a b")));
        assert_eq!(CyclicWord::new(&w("b a b^-1")), CyclicWord::new(&w("a")));
        assert_ne!(CyclicWord::new(&w("a b")), CyclicWord::new(&w("a b^-1")));
    }

    #[test]
    fn letters_unknown_to_alphabet_are_rejected() {
        assert!(Alphabet::punctured_torus(2).parse("B3").is_err());
        assert_eq!(Alphabet::punctured_torus(2).parse("A B2^-1").unwrap().len(), 2);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Alphabet::new(vec!["x".into(), "x".into()]).is_err());
    }
}
