use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::Scalar;
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

pub const DEFAULT_PRECISION: usize = 128;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision of the numeric backend, in mantissa bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision(pub usize);

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_PRECISION)
    }
}

impl Precision {
    pub fn bits(self) -> usize {
        self.0
    }

    pub(crate) fn with_guard(self) -> Precision {
        Precision(self.0 + 32)
    }

    /// Absolute size below which a value is treated as zero: `2^(−3·bits/4)`.
    fn zero_exponent(self) -> i32 {
        -((3 * self.0 / 4) as i32)
    }

    /// Relative threshold used by [`Scalar::negligible`]: `2^(−bits/2)`.
    fn relative_eps(self) -> f64 {
        2f64.powi(-(self.0 as i32) / 2)
    }
}

pub(crate) fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().unwrap_or(&0) as f64;
    let next = if words.len() > 1 {
        words[words.len() - 2] as f64
    } else {
        0.0
    };
    let m = (top + next / 18446744073709551616.0) / 18446744073709551616.0;
    let v = m * 2f64.powi(exp);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

fn big_from_bigint(n: &BigInt, p: usize) -> BigFloat {
    if let Ok(small) = i64::try_from(n) {
        return BigFloat::from_i64(small, p);
    }
    with_consts(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, p, RM, cc))
}

fn below(x: &BigFloat, exp: i32) -> bool {
    x.is_zero() || x.exponent().is_some_and(|e| e < exp)
}

/// Arbitrary-precision complex number.
#[derive(Clone)]
pub struct Complex {
    re: BigFloat,
    im: BigFloat,
    prec: Precision,
}

impl Complex {
    pub fn new(prec: Precision, re: BigFloat, im: BigFloat) -> Self {
        Complex { re, im, prec }
    }

    pub fn from_f64(prec: Precision, re: f64, im: f64) -> Self {
        Complex {
            re: BigFloat::from_f64(re, prec.0),
            im: BigFloat::from_f64(im, prec.0),
            prec,
        }
    }

    pub fn from_bigint(prec: &Precision, n: &BigInt) -> Self {
        Complex {
            re: big_from_bigint(n, prec.0),
            im: BigFloat::from_i64(0, prec.0),
            prec: *prec,
        }
    }

    /// Parses decimal strings such as `"1.25"` or `"-3e-5"`.
    pub fn parse(prec: Precision, re: &str, im: &str) -> Result<Self> {
        let parse = |s: &str| {
            let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, prec.0, RM, cc));
            if v.is_nan() {
                Err(Error::Json(format!("invalid decimal `{s}`")))
            } else {
                Ok(v)
            }
        };
        Ok(Complex {
            re: parse(re)?,
            im: parse(im)?,
            prec,
        })
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let _ = re.set_precision(prec.0, RM);
        let _ = im.set_precision(prec.0, RM);
        Complex { re, im, prec }
    }

    /// Decimal renderings of the real and imaginary parts.
    pub fn to_decimal_strings(&self) -> (String, String) {
        let fmt = |x: &BigFloat| {
            with_consts(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
        };
        (fmt(&self.re), fmt(&self.im))
    }

    pub fn abs_big(&self) -> BigFloat {
        let p = self.prec.0;
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
            .sqrt(p, RM)
    }

    /// Natural logarithm of the real part; used for torsion growth rates.
    pub fn ln_re(&self) -> f64 {
        let p = self.prec.0;
        let l = with_consts(|cc| self.re.ln(p, RM, cc));
        big_to_f64(&l)
    }

    fn norm_sq(&self) -> BigFloat {
        let p = self.prec.0;
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }
}

impl Scalar for Complex {
    type Ctx = Precision;

    const EXACT: bool = false;
    const BACKEND: &'static str = "complex";

    fn ctx(&self) -> Precision {
        self.prec
    }

    fn zero(ctx: &Precision) -> Self {
        Complex::from_i64(ctx, 0)
    }

    fn from_i64(ctx: &Precision, n: i64) -> Self {
        Complex {
            re: BigFloat::from_i64(n, ctx.0),
            im: BigFloat::from_i64(0, ctx.0),
            prec: *ctx,
        }
    }

    fn from_rational(ctx: &Precision, q: &BigRational) -> Self {
        let work = ctx.with_guard().0;
        let n = big_from_bigint(q.numer(), work);
        let d = big_from_bigint(q.denom(), work);
        Complex {
            re: n.div(&d, ctx.0, RM),
            im: BigFloat::from_i64(0, ctx.0),
            prec: *ctx,
        }
    }

    fn root_of_unity(ctx: &Precision, n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::RootNotInField {
                requested: 0,
                order: 0,
            });
        }
        let k = k.rem_euclid(n as i64);
        let work = ctx.with_guard().0;
        let (re, im) = with_consts(|cc| {
            let pi = cc.pi(work, RM);
            let angle = pi
                .mul(&BigFloat::from_i64(2 * k, work), work, RM)
                .div(&BigFloat::from_u64(n, work), work, RM);
            (angle.cos(work, RM, cc), angle.sin(work, RM, cc))
        });
        Ok(Complex { re, im, prec: *ctx }.with_precision(*ctx))
    }

    fn is_zero(&self) -> bool {
        let e = self.prec.zero_exponent();
        below(&self.re, e) && below(&self.im, e)
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.prec.0;
        Complex {
            re: self.re.add(&rhs.re, p, RM),
            im: self.im.add(&rhs.im, p, RM),
            prec: self.prec,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let p = self.prec.0;
        Complex {
            re: self.re.sub(&rhs.re, p, RM),
            im: self.im.sub(&rhs.im, p, RM),
            prec: self.prec,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let p = self.prec.0;
        let re = self
            .re
            .mul(&rhs.re, p, RM)
            .sub(&self.im.mul(&rhs.im, p, RM), p, RM);
        let im = self
            .re
            .mul(&rhs.im, p, RM)
            .add(&self.im.mul(&rhs.re, p, RM), p, RM);
        Complex {
            re,
            im,
            prec: self.prec,
        }
    }

    fn neg(&self) -> Self {
        Complex {
            re: self.re.neg(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.re.is_zero() && self.im.is_zero() {
            return None;
        }
        let p = self.prec.0;
        let n = self.norm_sq();
        Some(Complex {
            re: self.re.div(&n, p, RM),
            im: self.im.neg().div(&n, p, RM),
            prec: self.prec,
        })
    }

    /// Principal square root.
    fn sqrt(&self) -> Result<Self> {
        let p = self.prec.0;
        if self.re.is_zero() && self.im.is_zero() {
            return Ok(self.clone());
        }
        let two = BigFloat::from_i64(2, p);
        let r = self.abs_big();
        let a = r.add(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        let mut b = r.sub(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        if self.im.is_negative() {
            b = b.neg();
        }
        Ok(Complex {
            re: a,
            im: b,
            prec: self.prec,
        })
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let diff = self.sub(other).magnitude();
        let scale = self.magnitude().max(other.magnitude()).max(1.0);
        diff <= tol * scale
    }

    fn magnitude(&self) -> f64 {
        big_to_f64(&self.re).hypot(big_to_f64(&self.im))
    }

    fn negligible(&self, scale: f64) -> bool {
        self.is_zero() || self.magnitude() <= scale * self.prec.relative_eps()
    }

    fn to_c64(&self) -> (f64, f64) {
        (big_to_f64(&self.re), big_to_f64(&self.im))
    }

    fn to_complex(&self, prec: Precision) -> Complex {
        self.with_precision(prec)
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.re.cmp(&other.re) == Some(0) && self.im.cmp(&other.im) == Some(0)
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_c64();
        write!(f, "Complex({re:e}, {im:e}; {} bits)", self.prec.0)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_c64();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        match (re == 0.0, im == 0.0) {
            (_, true) => write!(f, "{}", fmt_f64(re)),
            (true, false) => write!(f, "{}i", fmt_f64(im)),
            (false, false) => {
                let sign = if im.partial_cmp(&0.0) == Some(Ordering::Less) {
                    '-'
                } else {
                    '+'
                };
                write!(f, "({} {} {}i)", fmt_f64(re), sign, fmt_f64(im.abs()))
            }
        }
    }
}

fn fmt_f64(x: f64) -> String {
    if (x - x.round()).abs() < 1e-12 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.12}")
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    }
}
