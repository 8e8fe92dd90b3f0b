use std::fmt;

use num_integer::Integer;

use super::poly::{Exponent, LaurentPoly};
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Quotient `num / den` of Laurent polynomials; `den ≠ 0`.
///
/// Equality between rational functions is cross-multiplication equality,
/// see [`RationalFn::same_as`].
#[derive(Clone, Debug)]
pub struct RationalFn<S: Scalar> {
    pub num: LaurentPoly<S>,
    pub den: LaurentPoly<S>,
}

/// Outcome of [`rational_reduce`].
#[derive(Clone, Debug)]
pub struct Reduced<S: Scalar> {
    pub value: RationalFn<S>,
    /// The denominator reduced to `1`.
    pub polynomial: bool,
    /// `false` when the input needed a multivariate gcd and was returned as is.
    pub supported: bool,
}

impl<S: Scalar> RationalFn<S> {
    pub fn new(num: LaurentPoly<S>, den: LaurentPoly<S>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::VariableMismatch(num.nvars(), den.nvars()));
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: LaurentPoly<S>) -> Self {
        let den = LaurentPoly::one(p.nvars(), p.ctx());
        RationalFn { num: p, den }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant() && self.den.coeff(&vec![0; self.nvars()]).is_one()
    }

    pub fn substitute_product(&self) -> Self {
        RationalFn {
            num: self.num.substitute_product(),
            den: self.den.substitute_product(),
        }
    }

    /// See [`LaurentPoly::in_product_variable`].
    pub fn in_product_variable(&self) -> Option<Self> {
        Some(RationalFn {
            num: self.num.in_product_variable()?,
            den: self.den.in_product_variable()?,
        })
    }

    /// See [`LaurentPoly::inflate`].
    pub fn inflate(&self, k: i64) -> Result<Self> {
        RationalFn::new(self.num.inflate(k)?, self.den.inflate(k)?)
    }

    /// Cross-multiplication equality `num₁·den₂ = num₂·den₁`.
    pub fn same_as(&self, other: &Self, tol: f64) -> bool {
        let a = &self.num * &other.den;
        let b = &other.num * &self.den;
        a.chop().approx_eq(&b.chop(), tol)
    }

    /// Value at `t_1 = ⋯ = t_μ = 1`.
    pub fn eval_at_ones(&self) -> Result<S> {
        let d = self.den.eval_at_ones();
        if d.negligible(self.den.max_magnitude()) {
            return Err(Error::DivisionByZero);
        }
        self.num.eval_at_ones().div(&d)
    }

    pub fn map_coeffs<T: Scalar>(&self, ctx: &T::Ctx, f: impl Fn(&S) -> T) -> RationalFn<T> {
        RationalFn {
            num: self.num.map_coeffs(ctx, &f),
            den: self.den.map_coeffs(ctx, &f),
        }
    }
}

impl<S: Scalar> fmt::Display for RationalFn<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// If every exponent vector in `polys` is an integer multiple of one
/// primitive vector `v`, returns `v` (the zero vector when all are constant).
fn common_direction<S: Scalar>(polys: &[&LaurentPoly<S>]) -> Option<Exponent> {
    let nvars = polys[0].nvars();
    let mut dir: Option<Exponent> = None;
    for p in polys {
        for (e, _) in p.terms() {
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            match &dir {
                None => {
                    let g = e.iter().fold(0i64, |g, &x| g.gcd(&x));
                    let mut v: Exponent = e.iter().map(|x| x / g).collect();
                    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                        v.iter_mut().for_each(|x| *x = -*x);
                    }
                    dir = Some(v);
                }
                Some(v) => {
                    // e ∥ v  ⇔  all 2x2 minors vanish
                    let i = v.iter().position(|&x| x != 0).unwrap();
                    if (0..nvars).any(|j| e[j] * v[i] != e[i] * v[j]) || e[i] % v[i] != 0 {
                        return None;
                    }
                }
            }
        }
    }
    Some(dir.unwrap_or_else(|| vec![0; nvars]))
}

fn coordinate(e: &[i64], dir: &[i64]) -> i64 {
    match dir.iter().position(|&x| x != 0) {
        Some(i) => e[i] / dir[i],
        None => 0,
    }
}

/// Converts `p` (supported on multiples of `dir`) into `u^shift · P(u)` with
/// `P(0) ≠ 0`, where `u = t^dir`.
fn to_univariate<S: Scalar>(p: &LaurentPoly<S>, dir: &[i64]) -> (i64, UniPoly<S>) {
    let ks: Vec<(i64, S)> = p
        .terms()
        .map(|(e, c)| (coordinate(e, dir), c.clone()))
        .collect();
    let lo = ks.iter().map(|(k, _)| *k).min().unwrap_or(0);
    let hi = ks.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut coeffs = vec![S::zero(p.ctx()); (hi - lo + 1) as usize];
    for (k, c) in ks {
        coeffs[(k - lo) as usize] = c;
    }
    (lo, UniPoly::new(p.ctx(), coeffs))
}

fn from_univariate<S: Scalar>(nvars: usize, shift: i64, u: &UniPoly<S>, dir: &[i64], ctx: &S::Ctx) -> LaurentPoly<S> {
    LaurentPoly::from_terms(
        nvars,
        ctx,
        u.coeffs().iter().enumerate().map(|(k, c)| {
            let m = k as i64 + shift;
            (dir.iter().map(|d| d * m).collect(), c.clone())
        }),
    )
}

/// gcd-reduces `f`.
///
/// Supported inputs are those whose numerator and denominator are
/// polynomials in a single monomial `u = t^v` (in particular, anything in one
/// variable), or whose denominator is a monomial. The result has a monic
/// denominator; when it is `1` the value is flagged polynomial. Anything else
/// would need a multivariate gcd and is returned unchanged with
/// `supported = false`.
pub fn rational_reduce<S: Scalar>(f: &RationalFn<S>) -> Result<Reduced<S>> {
    let num = f.num.chop();
    let den = f.den.chop();
    let ctx = num.ctx().clone();
    let nvars = num.nvars();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        let value = RationalFn::from_poly(num);
        return Ok(Reduced {
            value,
            polynomial: true,
            supported: true,
        });
    }
    if den.is_monomial() {
        let q = num.divexact(&den)?;
        return Ok(Reduced {
            value: RationalFn::from_poly(q),
            polynomial: true,
            supported: true,
        });
    }
    // The common case for link invariants: the quotient is a polynomial.
    // Exact division needs no gcd and works in any number of variables.
    if let Ok(q) = num.divexact(&den) {
        return Ok(Reduced {
            value: RationalFn::from_poly(q),
            polynomial: true,
            supported: true,
        });
    }
    let Some(dir) = common_direction(&[&num, &den]) else {
        return Ok(Reduced {
            value: f.clone(),
            polynomial: false,
            supported: false,
        });
    };
    let (sn, un) = to_univariate(&num, &dir);
    let (sd, ud) = to_univariate(&den, &dir);
    let g = un.gcd(&ud)?;
    let (qn, _) = un.divrem(&g)?;
    let (qd, _) = ud.divrem(&g)?;
    let lead = qd.leading().cloned().ok_or(Error::DivisionByZero)?;
    let lead_inv = lead.inv().ok_or(Error::DivisionByZero)?;
    let qn = qn.scalar_mul(&lead_inv);
    let qd = qd.scalar_mul(&lead_inv);
    let polynomial = qd.degree() == Some(0);
    let value = RationalFn {
        num: from_univariate(nvars, sn - sd, &qn, &dir, &ctx),
        den: from_univariate(nvars, 0, &qd, &dir, &ctx),
    };
    Ok(Reduced {
        value,
        polynomial,
        supported: true,
    })
}

/// Which monomials count as units in [`equal_up_to_unit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitClass {
    /// `t_1^{2k_1} ⋯ t_μ^{2k_μ}` with coefficient exactly `1`.
    EvenMonomials,
    /// `±t_1^{k_1} ⋯ t_μ^{k_μ}`.
    AllMonomials,
}

/// A signed monomial unit `sign · t^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub sign: i8,
    pub exp: Exponent,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::poly::var_names(self.exp.len());
        let mono: Vec<String> = self
            .exp
            .iter()
            .zip(&names)
            .filter(|(e, _)| **e != 0)
            .map(|(e, n)| format!("{n}^{e}"))
            .collect();
        let body = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
        if self.sign < 0 {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

/// Default comparison tolerance: exact for exact backends, `1e-6` otherwise.
pub fn default_tolerance<S: Scalar>() -> f64 {
    if S::EXACT {
        0.0
    } else {
        1e-6
    }
}

/// Decides whether `f = u·g` for a unit `u` of the given class, returning the
/// witness `u` when it exists.
pub fn equal_up_to_unit<S: Scalar>(f: &RationalFn<S>, g: &RationalFn<S>, class: UnitClass) -> Option<Unit> {
    equal_up_to_unit_tol(f, g, class, default_tolerance::<S>())
}

pub fn equal_up_to_unit_tol<S: Scalar>(
    f: &RationalFn<S>,
    g: &RationalFn<S>,
    class: UnitClass,
    tol: f64,
) -> Option<Unit> {
    if f.nvars() != g.nvars() {
        return None;
    }
    let p = (&f.num * &g.den).chop();
    let q = (&g.num * &f.den).chop();
    if p.is_zero() || q.is_zero() {
        return (p.is_zero() && q.is_zero()).then(|| Unit {
            sign: 1,
            exp: vec![0; f.nvars()],
        });
    }
    // Align the lowest exponents: P = c·t^k·Q forces k = min(P) − min(Q).
    let (lp, cp) = p.terms().next().unwrap();
    let (lq, cq) = q.terms().next().unwrap();
    let exp: Exponent = lp.iter().zip(lq).map(|(a, b)| a - b).collect();
    let c = cp.div(cq).ok()?;
    let one = S::one(p.ctx());
    let sign: i8 = if c.approx_eq(&one, tol) {
        1
    } else if c.approx_eq(&one.neg(), tol) {
        -1
    } else {
        return None;
    };
    if class == UnitClass::EvenMonomials && (sign < 0 || exp.iter().any(|e| e % 2 != 0)) {
        return None;
    }
    let unit_coef = if sign < 0 { one.neg() } else { one };
    let shifted = q.mul_monomial(&exp, &unit_coef);
    p.approx_eq(&shifted, tol).then_some(Unit { sign, exp })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, CyclotomicField};

    type P = LaurentPoly<Cyclotomic>;

    fn poly(terms: &[(&[i64], i64)]) -> P {
        let f = CyclotomicField::new(1);
        P::from_terms(
            terms[0].0.len(),
            &f,
            terms.iter().map(|(e, c)| (e.to_vec(), Cyclotomic::from_i64(&f, *c))),
        )
    }

    fn rf(n: P, d: P) -> RationalFn<Cyclotomic> {
        RationalFn::new(n, d).unwrap()
    }

    #[test]
    fn trefoil_reduction() {
        let t6 = poly(&[(&[6], 1), (&[0], 1)]);
        let num = &t6 * &t6;
        let den = &poly(&[(&[4], 1), (&[2], -1), (&[0], 1)]) * &t6;
        let r = rational_reduce(&rf(num, den)).unwrap();
        assert!(r.polynomial && r.supported);
        assert_eq!(r.value.num, poly(&[(&[2], 1), (&[0], 1)]));
        assert!(r.value.is_polynomial());
    }

    #[test]
    fn polynomial_input_unchanged() {
        let p = poly(&[(&[3], 2), (&[0], -1)]);
        let r = rational_reduce(&RationalFn::from_poly(p.clone())).unwrap();
        assert!(r.polynomial);
        assert_eq!(r.value.num, p);
    }

    #[test]
    fn simple_cancellation() {
        let r = rational_reduce(&rf(
            poly(&[(&[2], 1), (&[0], -1)]),
            poly(&[(&[1], 1), (&[0], -1)]),
        ))
        .unwrap();
        assert_eq!(r.value.num, poly(&[(&[1], 1), (&[0], 1)]));
        assert!(r.polynomial);
    }

    #[test]
    fn non_polynomial_keeps_monic_denominator() {
        // (t^3+1)/(2t^2-2) = (t^2-t+1)/(2t-2)  →  ((1/2)t^2 - (1/2)t + 1/2)/(t - 1)
        let r = rational_reduce(&rf(
            poly(&[(&[3], 1), (&[0], 1)]),
            poly(&[(&[2], 2), (&[0], -2)]),
        ))
        .unwrap();
        assert!(!r.polynomial);
        assert_eq!(r.value.den, poly(&[(&[1], 1), (&[0], -1)]));
        assert_eq!(r.value.num.num_terms(), 3);
    }

    #[test]
    fn monomial_direction_reduction() {
        // (t1^2 t2^2 + 1)(t1 t2 - 1) / (t1 t2 - 1)
        let a = poly(&[(&[2, 2], 1), (&[0, 0], 1)]);
        let b = poly(&[(&[1, 1], 1), (&[0, 0], -1)]);
        let r = rational_reduce(&rf(&a * &b, b.clone())).unwrap();
        assert!(r.polynomial);
        assert_eq!(r.value.num, a);
    }

    #[test]
    fn genuinely_multivariate_is_flagged() {
        let a = poly(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = poly(&[(&[1, 0], 1), (&[0, 0], 1)]);
        let r = rational_reduce(&rf(a, b)).unwrap();
        assert!(!r.supported);
    }

    #[test]
    fn units() {
        let f = rf(poly(&[(&[2], 1), (&[0], 1)]), poly(&[(&[0], 1)]));
        let g = rf(poly(&[(&[4], 1), (&[2], 1)]), poly(&[(&[0], 1)]));
        let w = equal_up_to_unit(&g, &f, UnitClass::EvenMonomials).unwrap();
        assert_eq!(w, Unit { sign: 1, exp: vec![2] });
        // symmetric
        let w2 = equal_up_to_unit(&f, &g, UnitClass::EvenMonomials).unwrap();
        assert_eq!(w2.exp, vec![-2]);
        let h = rf(poly(&[(&[2], 1), (&[0], -1)]), poly(&[(&[0], 1)]));
        assert!(equal_up_to_unit(&f, &h, UnitClass::AllMonomials).is_none());
        // odd shift and sign need the larger unit class
        let k = rf(poly(&[(&[3], -1), (&[1], -1)]), poly(&[(&[0], 1)]));
        assert!(equal_up_to_unit(&k, &f, UnitClass::EvenMonomials).is_none());
        assert_eq!(
            equal_up_to_unit(&k, &f, UnitClass::AllMonomials),
            Some(Unit { sign: -1, exp: vec![1] })
        );
    }

    #[test]
    fn units_compare_across_representations() {
        // (t^2+1) vs (t^4-1)/(t^2-1)
        let f = rf(poly(&[(&[2], 1), (&[0], 1)]), poly(&[(&[0], 1)]));
        let g = rf(poly(&[(&[4], 1), (&[0], -1)]), poly(&[(&[2], 1), (&[0], -1)]));
        assert!(equal_up_to_unit(&f, &g, UnitClass::EvenMonomials).is_some());
    }
}
