//! Dense univariate polynomials over a [`Scalar`] field, used for gcd-based
//! reduction of rational functions.

use crate::error::{Error, Result};
use crate::scalars::Scalar;

#[derive(Clone, Debug)]
pub struct UniPoly<S: Scalar> {
    ctx: S::Ctx,
    /// Constant term first; no trailing zeros.
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(ctx: &S::Ctx, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    fn scale(&self) -> f64 {
        self.coeffs.iter().map(S::magnitude).fold(0.0, f64::max)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(&self.ctx, vec![]);
        }
        let mut out = vec![S::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(&self.ctx, out)
    }

    pub fn scalar_mul(&self, c: &S) -> Self {
        UniPoly::new(&self.ctx, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Euclidean division. Numeric backends zero out remainder coefficients
    /// that are negligible relative to the dividend.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let scale = self.scale();
        let lead_inv = divisor.leading().unwrap().inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((UniPoly::new(&self.ctx, vec![]), self.clone()));
        }
        let mut q = vec![S::zero(&self.ctx); r.len() - db];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].mul(&lead_inv);
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[k - db + i] = r[k - db + i].sub(&c.mul(b));
            }
            r[k] = S::zero(&self.ctx);
            q[k - db] = c;
        }
        r.truncate(db);
        if !S::EXACT {
            for c in r.iter_mut() {
                if c.negligible(scale) {
                    *c = S::zero(&self.ctx);
                }
            }
        }
        Ok((UniPoly::new(&self.ctx, q), UniPoly::new(&self.ctx, r)))
    }

    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(l) => {
                let inv = l.inv().ok_or(Error::DivisionByZero)?;
                Ok(self.scalar_mul(&inv))
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.monic()?;
        let mut b = other.monic()?;
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic()?;
        }
        a.monic()
    }
}
