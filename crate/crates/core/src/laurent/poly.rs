use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Exponent vector of a Laurent monomial `t_1^{e_1} ⋯ t_μ^{e_μ}`.
pub type Exponent = Vec<i64>;

/// Sparse multivariate Laurent polynomial over a [`Scalar`] field.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is in
/// increasing lexicographic order and the last key is the lex-leading
/// monomial. Zero coefficients are never stored.
#[derive(Clone)]
pub struct LaurentPoly<S: Scalar> {
    nvars: usize,
    ctx: S::Ctx,
    terms: BTreeMap<Exponent, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero(nvars: usize, ctx: &S::Ctx) -> Self {
        LaurentPoly {
            nvars,
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, ctx: &S::Ctx) -> Self {
        Self::constant(nvars, S::one(ctx))
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: S) -> Self {
        let mut p = Self::zero(exp.len(), &c.ctx());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `t_{i+1}`.
    pub fn var(nvars: usize, i: usize, ctx: &S::Ctx) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, S::one(ctx))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms(nvars: usize, ctx: &S::Ctx, terms: impl IntoIterator<Item = (Exponent, S)>) -> Self {
        let mut p = Self::zero(nvars, ctx);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    /// Univariate polynomial from dense coefficients, constant term first.
    pub fn from_coeffs(ctx: &S::Ctx, coeffs: &[S]) -> Self {
        Self::from_terms(
            1,
            ctx,
            coeffs.iter().enumerate().map(|(k, c)| (vec![k as i64], c.clone())),
        )
    }

    fn add_term(&mut self, e: Exponent, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> S {
        self.terms.get(e).cloned().unwrap_or_else(|| S::zero(&self.ctx))
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Exponent, &S)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of the exponents (the largest monomial dividing
    /// every term), or `None` for zero.
    pub fn min_exponent(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }

    pub fn max_exponent(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        Some(m)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch(format!("{:?} vs {:?}", self.ctx, other.ctx)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.nvars, &self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &S) -> Self {
        let mut out = Self::zero(self.nvars, &self.ctx);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.mul(c));
        }
        out
    }

    /// Multiplies by the monomial `c·t^shift`.
    pub fn mul_monomial(&self, shift: &[i64], c: &S) -> Self {
        let mut out = Self::zero(self.nvars, &self.ctx);
        for (e, v) in &self.terms {
            let e2: Exponent = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.add_term(e2, v.mul(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars, &self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted by their minimal exponent into the ordinary
    /// polynomial ring, divided there by lex-leading terms, and shifted back.
    /// Numeric backends accept a remainder that is negligible relative to the
    /// dividend.
    pub fn divexact(&self, divisor: &Self) -> Result<Self> {
        self.compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ma = self.min_exponent().unwrap();
        let mb = divisor.min_exponent().unwrap();
        let neg = |m: &[i64]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let one = S::one(&self.ctx);
        let a = self.mul_monomial(&neg(&ma), &one);
        let b = divisor.mul_monomial(&neg(&mb), &one);
        let scale = a.max_magnitude();
        let (lb, lcb) = b.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lcb_inv = lcb.inv().ok_or(Error::DivisionByZero)?;

        let mut r = a;
        let mut q = Self::zero(self.nvars, &self.ctx);
        while let Some((lr, lcr)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let d: Exponent = lr.iter().zip(&lb).map(|(x, y)| x - y).collect();
            if d.iter().any(|&x| x < 0) {
                if r.terms.values().all(|c| c.negligible(scale)) {
                    break;
                }
                return Err(Error::InexactDivision);
            }
            let c = lcr.mul(&lcb_inv);
            r = &r - &b.mul_monomial(&d, &c);
            // Numerically the leading term may survive as rounding noise.
            r.terms.remove(&lr);
            if !S::EXACT {
                r.terms.retain(|_, v| !v.negligible(scale));
            }
            q.add_term(d, c);
        }
        let shift: Exponent = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
        Ok(q.mul_monomial(&shift, &one))
    }

    /// Collapses every variable onto a single `t` (the substitution
    /// `t_i ↦ t`); each monomial's exponent becomes its total degree.
    pub fn substitute_product(&self) -> Self {
        let mut out = Self::zero(1, &self.ctx);
        for (e, c) in &self.terms {
            out.add_term(vec![e.iter().sum()], c.clone());
        }
        out
    }

    /// Rewrites a polynomial in `t_1 ⋯ t_μ` as a univariate polynomial in
    /// `t = t_1 ⋯ t_μ`; `None` unless every monomial is `(t_1 ⋯ t_μ)^k`.
    pub fn in_product_variable(&self) -> Option<Self> {
        let mut out = Self::zero(1, &self.ctx);
        for (e, c) in &self.terms {
            let k = *e.first()?;
            if e.iter().any(|x| *x != k) {
                return None;
            }
            out.add_term(vec![k], c.clone());
        }
        Some(out)
    }

    /// The substitution `t ↦ t^k` in a univariate polynomial.
    pub fn inflate(&self, k: i64) -> Result<Self> {
        if self.nvars != 1 {
            return Err(Error::VariableMismatch(self.nvars, 1));
        }
        let mut out = Self::zero(1, &self.ctx);
        for (e, c) in &self.terms {
            out.add_term(vec![e[0] * k], c.clone());
        }
        Ok(out)
    }

    /// Value at `t_1 = ⋯ = t_μ = 1`.
    pub fn eval_at_ones(&self) -> S {
        self.terms
            .values()
            .fold(S::zero(&self.ctx), |acc, c| acc.add(c))
    }

    /// Value of a univariate polynomial at `x`.
    pub fn eval_univariate(&self, x: &S) -> Result<S> {
        if self.nvars != 1 {
            return Err(Error::VariableMismatch(self.nvars, 1));
        }
        let mut acc = S::zero(&self.ctx);
        for (e, c) in &self.terms {
            acc = acc.add(&c.mul(&x.pow(e[0])?));
        }
        Ok(acc)
    }

    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(S::magnitude).fold(0.0, f64::max)
    }

    /// Drops coefficients that are negligible relative to the largest one.
    /// A no-op for exact backends.
    pub fn chop(&self) -> Self {
        if S::EXACT {
            return self.clone();
        }
        let scale = self.max_magnitude();
        let mut out = self.clone();
        out.terms.retain(|_, c| !c.negligible(scale));
        out
    }

    /// Coefficientwise comparison, tolerance relative to the larger operand.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if S::EXACT {
            return self.nvars == other.nvars
                && self.terms.len() == other.terms.len()
                && self.terms.iter().zip(&other.terms).all(|((e1, c1), (e2, c2))| {
                    e1 == e2 && c1.approx_eq(c2, 0.0)
                });
        }
        let scale = self.max_magnitude().max(other.max_magnitude()).max(1.0);
        let zero = S::zero(&self.ctx);
        let keys: std::collections::BTreeSet<&Exponent> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|e| {
            let a = self.terms.get(e).unwrap_or(&zero);
            let b = other.terms.get(e).unwrap_or(&zero);
            a.sub(b).magnitude() <= tol * scale
        })
    }

    /// Re-embeds the coefficients through `f` into another field.
    pub fn map_coeffs<T: Scalar>(&self, ctx: &T::Ctx, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::from_terms(
            self.nvars,
            ctx,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Variable names used for display and JSON: `t` for one variable,
    /// `t1, t2, …` otherwise.
    pub fn var_names(&self) -> Vec<String> {
        var_names(self.nvars)
    }
}

pub fn var_names(nvars: usize) -> Vec<String> {
    if nvars == 1 {
        vec!["t".to_string()]
    } else {
        (1..=nvars).map(|i| format!("t{i}")).collect()
    }
}

impl<S: Scalar> PartialEq for LaurentPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.approx_eq(other, 0.0)
    }
}

impl<'a, S: Scalar> Add<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.checked_add(rhs).expect("incompatible Laurent polynomials")
    }
}

impl<'a, S: Scalar> Sub<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.checked_sub(rhs).expect("incompatible Laurent polynomials")
    }
}

impl<'a, S: Scalar> Mul<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.checked_mul(rhs).expect("incompatible Laurent polynomials")
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        self.neg_ref()
    }
}

impl<S: Scalar> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", S::BACKEND, self)
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.var_names();
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(x, _)| **x != 0)
                .map(|(x, n)| if *x == 1 { n.clone() } else { format!("{n}^{x}") })
                .collect();
            let mono = mono.join("*");
            let mut cs = c.to_string();
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match (mono.is_empty(), cs == "1") {
                (true, _) => write!(f, "{cs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{cs}*{mono}")?,
            }
        }
        Ok(())
    }
}
