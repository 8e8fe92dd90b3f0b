//! Fox free differential calculus on the integral group ring of a free group.
//!
//! Derivatives are emitted per syllable: a power `x^e` contributes the
//! geometric block `1 + x + ⋯ + x^{e−1}` for `e > 0` and
//! `−(x^{−1} + ⋯ + x^{e})` for `e < 0`, left-multiplied by the prefix that
//! precedes it.

use crate::error::{Error, Result};
use crate::presentation::{GroupRingElement, Word};

/// `∂w/∂x_j` for a word over an alphabet of `num_generators` letters.
pub fn fox_derivative(w: &Word, j: usize, num_generators: usize) -> Result<GroupRingElement> {
    if j >= num_generators {
        return Err(Error::GeneratorOutOfRange {
            index: j,
            len: num_generators,
        });
    }
    if w.alphabet_size() > num_generators {
        return Err(Error::GeneratorOutOfRange {
            index: w.alphabet_size() - 1,
            len: num_generators,
        });
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::empty();
    for &(g, e) in w.syllables() {
        if g == j {
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix.multiply(&Word::power(g, k)), 1);
                }
            } else {
                for k in 1..=-e {
                    out.add_term(prefix.multiply(&Word::power(g, -k)), -1);
                }
            }
        }
        prefix = prefix.multiply(&Word::power(g, e));
    }
    Ok(out)
}

/// Extends [`fox_derivative`] linearly to group-ring elements.
pub fn fox_derivative_element(
    x: &GroupRingElement,
    j: usize,
    num_generators: usize,
) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero();
    for (w, c) in x.terms() {
        out = out.add(&fox_derivative(w, j, num_generators)?.scale(*c));
    }
    Ok(out)
}

/// Checks the fundamental identity `Σ_j (∂w/∂x_j)(x_j − 1) = w − 1` exactly.
pub fn fox_fundamental_check(w: &Word) -> bool {
    let l = w.alphabet_size();
    let mut lhs = GroupRingElement::zero();
    for j in 0..l {
        let d = fox_derivative(w, j, l).expect("index within alphabet");
        let xj_minus_1 = GroupRingElement::from_terms([(Word::generator(j), 1), (Word::empty(), -1)]);
        lhs = lhs.add(&d.mul(&xj_minus_1));
    }
    let rhs = GroupRingElement::from_terms([(w.clone(), 1), (Word::empty(), -1)]);
    lhs == rhs
}
