use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Freely reduced word in a free group, stored as run-length syllables
/// `(generator index, nonzero exponent)` with distinct adjacent generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// The single generator `g^1`.
    pub fn generator(g: usize) -> Self {
        Word::power(g, 1)
    }

    pub fn power(g: usize, e: i64) -> Self {
        Word::from_syllables([(g, e)])
    }

    /// Builds a word from arbitrary syllables, freely reducing them.
    pub fn from_syllables(syllables: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::empty();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of `|exponent|`.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Largest generator index used plus one (0 for the empty word).
    pub fn alphabet_size(&self) -> usize {
        self.syllables.iter().map(|(g, _)| g + 1).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w = w.multiply(&base);
        }
        w
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.multiply(b).multiply(&a.inverse()).multiply(&b.inverse())
    }

    /// Exponent sum of every generator, indexed by generator.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut v = vec![0; num_generators.max(self.alphabet_size())];
        for &(g, e) in &self.syllables {
            v[g] += e;
        }
        v
    }

    /// Renders with the given generator names, e.g. `x^2*m1*x^-2*m1^-1`;
    /// the empty word prints as `1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match self.names.get(g) {
                Some(n) => write!(f, "{n}")?,
                None => write!(f, "g{g}")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.alphabet_size()).map(|g| format!("g{g}")).collect();
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

/// Finite integer combination of words: an element of the integral group
/// ring of a free group. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.multiply(b), ca * cb);
            }
        }
        out
    }

    /// Multiplies on the right by a single word.
    pub fn mul_word(&self, w: &Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(a, c)| (a.multiply(w), *c)))
    }

    /// Sum of coefficients (the augmentation).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const X: usize = 0;
    const Y: usize = 1;

    #[test]
    fn inverse_cancels() {
        let x = Word::generator(X);
        assert!(x.multiply(&x.inverse()).is_empty());
    }

    #[test]
    fn exponents_merge() {
        assert_eq!(Word::power(X, 2).multiply(&Word::power(X, 3)), Word::power(X, 5));
    }

    #[test]
    fn inner_reduction() {
        let a = Word::from_syllables([(X, 1), (Y, 1)]);
        let b = Word::from_syllables([(Y, -1), (X, 1)]);
        assert_eq!(a.multiply(&b), Word::power(X, 2));
    }

    #[test]
    fn cascading_reduction() {
        let a = Word::from_syllables([(X, 1), (Y, 2), (X, -1)]);
        let b = Word::from_syllables([(X, 1), (Y, -2), (X, 3)]);
        assert_eq!(a.multiply(&b), Word::power(X, 4));
        assert_eq!(Word::from_syllables([(X, 0), (Y, 1), (Y, -1)]), Word::empty());
    }

    #[test]
    fn display_uses_names() {
        let names = vec!["x".to_string(), "m1".to_string()];
        let w = Word::from_syllables([(X, 2), (1, 1), (X, -2), (1, -1)]);
        assert_eq!(w.display_with(&names).to_string(), "x^2*m1*x^-2*m1^-1");
        assert_eq!(Word::empty().display_with(&names).to_string(), "1");
    }

    #[test]
    fn group_ring_cancellation() {
        let x = GroupRingElement::from_word(Word::generator(X));
        assert!(x.sub(&x).is_zero());
        let one = GroupRingElement::from_word(Word::empty());
        // (1 + x)(1 - x) = 1 - x^2
        let p = one.add(&x).mul(&one.sub(&x));
        assert_eq!(
            p,
            GroupRingElement::from_terms([(Word::empty(), 1), (Word::power(X, 2), -1)])
        );
    }
}
