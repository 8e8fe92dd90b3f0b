//! Free-group words, group-ring elements and finite group presentations,
//! including the standard presentations of torus-link groups.

mod parse;
mod torus;
mod word;

use std::fmt;

use crate::error::{Error, Result};

pub use parse::parse_presentation;
pub use torus::{torus_link_presentation, torus_link_presentation_full, TorusLinkParams};
pub use word::{GroupRingElement, Word};

/// A finite presentation together with its abelianization onto `Z^μ`.
///
/// Relators are words equal to the identity. The abelianization assigns to
/// each generator an exponent vector of length `μ` (generator `g` maps to
/// `t_1^{v_1} ⋯ t_μ^{v_μ}`), and every relator must lie in its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
    num_link_components: usize,
    abelianization: Vec<Vec<i64>>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// Validates and builds a presentation.
    pub fn new(
        generator_names: Vec<String>,
        relators: Vec<Word>,
        num_link_components: usize,
        abelianization: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let l = generator_names.len();
        for (i, n) in generator_names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidGeneratorName(n.clone()));
            }
            if generator_names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        if num_link_components == 0 {
            return Err(Error::InvalidPresentation("mu must be at least 1".into()));
        }
        if abelianization.len() != l {
            return Err(Error::InvalidPresentation(format!(
                "{} abelianization vectors for {l} generators",
                abelianization.len()
            )));
        }
        if let Some((g, v)) = abelianization
            .iter()
            .enumerate()
            .find(|(_, v)| v.len() != num_link_components)
        {
            return Err(Error::InvalidPresentation(format!(
                "abelianization of `{}` has length {}, expected {num_link_components}",
                generator_names[g],
                v.len()
            )));
        }
        for r in &relators {
            if r.alphabet_size() > l {
                return Err(Error::GeneratorOutOfRange {
                    index: r.alphabet_size() - 1,
                    len: l,
                });
            }
        }
        let p = Presentation {
            generator_names,
            relators,
            num_link_components,
            abelianization,
        };
        for (i, r) in p.relators.iter().enumerate() {
            let image = p.abelianize(r);
            if image.iter().any(|&x| x != 0) {
                return Err(Error::RelatorNotInKernel { index: i + 1, image });
            }
        }
        Ok(p)
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Number of link components `μ` (the rank of the abelianization target).
    pub fn num_link_components(&self) -> usize {
        self.num_link_components
    }

    pub fn abelianization(&self) -> &[Vec<i64>] {
        &self.abelianization
    }

    /// Exponent vector of the image of `w` in `Z^μ`.
    pub fn abelianize(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0; self.num_link_components];
        for &(g, e) in w.syllables() {
            for (acc, a) in v.iter_mut().zip(&self.abelianization[g]) {
                *acc += e * a;
            }
        }
        v
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.display_with(&self.generator_names).to_string()
    }
}

/// Serializes in the text format accepted by [`parse_presentation`].
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generator_names.join(" "))?;
        writeln!(f, "mu: {}", self.num_link_components)?;
        let abel: Vec<String> = self
            .generator_names
            .iter()
            .zip(&self.abelianization)
            .map(|(n, v)| {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("{n}=({})", parts.join(","))
            })
            .collect();
        writeln!(f, "abel: {}", abel.join(" "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        writeln!(f, "rels: {}", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rejects_bad_names() {
        let e = Presentation::new(names(&["1x"]), vec![], 1, vec![vec![1]]).unwrap_err();
        assert_eq!(e, Error::InvalidGeneratorName("1x".into()));
        let e = Presentation::new(names(&["x", "x"]), vec![], 1, vec![vec![1], vec![1]]).unwrap_err();
        assert_eq!(e, Error::DuplicateGenerator("x".into()));
    }

    #[test]
    fn rejects_relator_outside_kernel() {
        let e = Presentation::new(names(&["x"]), vec![Word::power(0, 2)], 1, vec![vec![1]]).unwrap_err();
        assert_eq!(
            e,
            Error::RelatorNotInKernel {
                index: 1,
                image: vec![2]
            }
        );
    }

    #[test]
    fn display_round_trips() {
        let p = Presentation::new(
            names(&["x", "y"]),
            vec![Word::from_syllables([(0, 2), (1, -3)])],
            1,
            vec![vec![3], vec![2]],
        )
        .unwrap();
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }
}
