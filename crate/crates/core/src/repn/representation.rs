use std::collections::HashMap;

use super::mat::Mat;
use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, PolyMatrix};
use crate::presentation::{GroupRingElement, Presentation, Word};
use crate::scalars::Scalar;

/// Tolerance for determinant and relator checks on inexact backends.
pub const RELATOR_TOLERANCE: f64 = 1e-10;

fn check_tol<S: Scalar>() -> f64 {
    if S::EXACT {
        0.0
    } else {
        RELATOR_TOLERANCE
    }
}

/// A representation of a presented group into `SL(n)`: one matrix per
/// generator, together with the abelianization copied from the
/// presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S: Scalar> {
    dim: usize,
    names: Vec<String>,
    images: Vec<Mat<S>>,
    abelianization: Vec<Vec<i64>>,
}

impl<S: Scalar> Representation<S> {
    /// Validates `images` against `pres`: one matrix per generator, all of
    /// the same size with determinant 1, and every relator mapping to the
    /// identity.
    pub fn new(pres: &Presentation, images: Vec<Mat<S>>) -> Result<Self> {
        let rep = Self::unchecked(pres, images)?;
        rep.validate(pres)?;
        Ok(rep)
    }

    /// Builds without the determinant and relator checks.
    pub fn unchecked(pres: &Presentation, images: Vec<Mat<S>>) -> Result<Self> {
        if images.len() != pres.num_generators() {
            return Err(Error::AlphabetMismatch(format!(
                "{} matrices for {} generators",
                images.len(),
                pres.num_generators()
            )));
        }
        let dim = images.first().map_or(1, Mat::dim);
        if let Some((g, _)) = images.iter().enumerate().find(|(_, m)| m.dim() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "image of `{}` is not {dim}x{dim}",
                pres.generator_names()[g]
            )));
        }
        Ok(Representation {
            dim,
            names: pres.generator_names().to_vec(),
            images,
            abelianization: pres.abelianization().to_vec(),
        })
    }

    pub fn validate(&self, pres: &Presentation) -> Result<()> {
        self.check_alphabet(pres)?;
        let tol = check_tol::<S>();
        let one = S::one(self.ctx());
        for (name, m) in self.names.iter().zip(&self.images) {
            if !m.det().approx_eq(&one, tol) {
                return Err(Error::NotSpecialLinear(name.clone()));
            }
        }
        for (i, r) in pres.relators().iter().enumerate() {
            if !self.evaluate(r)?.is_identity(tol) {
                return Err(Error::RelatorViolated { index: i + 1 });
            }
        }
        Ok(())
    }

    fn check_alphabet(&self, pres: &Presentation) -> Result<()> {
        if self.names != pres.generator_names() {
            return Err(Error::AlphabetMismatch(format!(
                "representation on {:?}, presentation on {:?}",
                self.names,
                pres.generator_names()
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &S::Ctx {
        self.images[0].ctx()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn images(&self) -> &[Mat<S>] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Mat<S> {
        &self.images[g]
    }

    pub fn abelianization(&self) -> &[Vec<i64>] {
        &self.abelianization
    }

    /// Matrix of a word.
    pub fn evaluate(&self, w: &Word) -> Result<Mat<S>> {
        let mut acc = Mat::identity(self.dim, self.ctx());
        for &(g, e) in w.syllables() {
            let m = self.images.get(g).ok_or(Error::GeneratorOutOfRange {
                index: g,
                len: self.images.len(),
            })?;
            acc = acc.mul(&m.pow(e)?);
        }
        Ok(acc)
    }

    /// Applies `f` to every generator image (e.g. a symmetric-power lift).
    pub fn map_images<T: Scalar>(&self, f: impl Fn(&Mat<S>) -> Result<Mat<T>>) -> Result<Representation<T>> {
        let images = self.images.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            dim: images.first().map_or(1, Mat::dim),
            names: self.names.clone(),
            images,
            abelianization: self.abelianization.clone(),
        })
    }

    /// `g ρ g⁻¹`.
    pub fn conjugate_by(&self, g: &Mat<S>) -> Result<Self> {
        let gi = g.inverse()?;
        self.map_images(|m| Ok(g.mul(m).mul(&gi)))
    }
}

/// Evaluates the map `Z[F] → M(n, Laurent)` sending a word `w` to
/// `t^{α(w)} ρ(w)`, caching generator powers.
pub struct PhiMap<'a, S: Scalar> {
    rep: &'a Representation<S>,
    nvars: usize,
    powers: HashMap<(usize, i64), Mat<S>>,
}

impl<'a, S: Scalar> PhiMap<'a, S> {
    pub fn new(rep: &'a Representation<S>, pres: &Presentation) -> Result<Self> {
        rep.check_alphabet(pres)?;
        if rep.abelianization != pres.abelianization() {
            return Err(Error::AlphabetMismatch("abelianization differs from presentation".into()));
        }
        Ok(PhiMap {
            rep,
            nvars: pres.num_link_components(),
            powers: HashMap::new(),
        })
    }

    fn power(&mut self, g: usize, e: i64) -> Result<&Mat<S>> {
        if !self.powers.contains_key(&(g, e)) {
            let m = self.rep.image(g).pow(e)?;
            self.powers.insert((g, e), m);
        }
        Ok(&self.powers[&(g, e)])
    }

    pub fn word_matrix(&mut self, w: &Word) -> Result<Mat<S>> {
        let mut acc = Mat::identity(self.rep.dim(), self.rep.ctx());
        for &(g, e) in w.syllables() {
            if g >= self.rep.images.len() {
                return Err(Error::AlphabetMismatch(format!("generator index {g} out of range")));
            }
            acc = acc.mul(self.power(g, e)?);
        }
        Ok(acc)
    }

    fn monomial(&self, w: &Word) -> Exponent {
        let mut v = vec![0; self.nvars];
        for &(g, e) in w.syllables() {
            for (acc, a) in v.iter_mut().zip(&self.rep.abelianization[g]) {
                *acc += e * a;
            }
        }
        v
    }

    pub fn apply(&mut self, x: &GroupRingElement) -> Result<PolyMatrix<S>> {
        let n = self.rep.dim();
        let ctx = self.rep.ctx().clone();
        let mut entries: Vec<Vec<(Exponent, S)>> = vec![Vec::new(); n * n];
        for (w, c) in x.terms() {
            let m = self.word_matrix(w)?;
            let exp = self.monomial(w);
            let c = S::from_i64(&ctx, *c);
            for i in 0..n {
                for j in 0..n {
                    let v = m.get(i, j);
                    if !v.is_zero() {
                        entries[i * n + j].push((exp.clone(), v.mul(&c)));
                    }
                }
            }
        }
        let mut out = PolyMatrix::zeros(n, n, self.nvars, &ctx);
        for (k, terms) in entries.into_iter().enumerate() {
            out.set(k / n, k % n, LaurentPoly::from_terms(self.nvars, &ctx, terms));
        }
        Ok(out)
    }
}

/// `Φ(x)` for a group-ring element over the presentation's alphabet.
pub fn phi_map<S: Scalar>(x: &GroupRingElement, rep: &Representation<S>, pres: &Presentation) -> Result<PolyMatrix<S>> {
    PhiMap::new(rep, pres)?.apply(x)
}
