use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::complex::{Complex, Precision};
use super::upoly;
use super::Scalar;
use crate::error::{Error, Result};

static PHI_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Integer coefficients (constant term first) of the `n`-th cyclotomic
/// polynomial, via `Φ_n = (xⁿ − 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let cache = PHI_CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = upoly::mul_int(&den, &cyclotomic_polynomial(d));
        }
    }
    let phi = Arc::new(upoly::div_monic_int(&num, &den));
    cache.write().unwrap().insert(n, phi.clone());
    phi
}

/// The field `Q(ζ_N)`; cheap to clone.
#[derive(Clone)]
pub struct CyclotomicField {
    order: u64,
    phi: Arc<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Self {
        CyclotomicField {
            order,
            phi: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree `φ(N)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }

    /// Smallest field containing every `2p`-th and `2q`-th root of unity.
    pub fn for_torus(p: u64, q: u64) -> Self {
        Self::new((2 * p).lcm(&(2 * q)))
    }

    fn reduce(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        for k in (d..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for (i, m) in self.phi[..d].iter().enumerate() {
                poly[k - d + i] -= &c * m;
            }
        }
        poly.resize(d, BigInt::zero());
        poly
    }

    /// `ζ_N^e` as a reduced integer vector.
    fn power_of_zeta(&self, e: i64) -> Vec<BigInt> {
        let e = e.rem_euclid(self.order as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        self.reduce(v)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)
    }
}

/// Exact element of `Q(ζ_N)`: `(Σ num[k] ζ^k) / den`, reduced modulo `Φ_N`.
///
/// `num` always has length `φ(N)`, `den > 0`, and the content of `num` is
/// coprime to `den`, so structural equality is field equality.
#[derive(Clone, PartialEq)]
pub struct Cyclotomic {
    field: CyclotomicField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn from_parts(field: &CyclotomicField, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut z = Cyclotomic {
            field: field.clone(),
            num,
            den,
        };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coefficients in the power basis `1, ζ, …, ζ^{φ(N)−1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Element `Σ coeffs[k] ζ^k`; vectors longer than `φ(N)` are reduced.
    pub fn from_coeffs(field: &CyclotomicField, coeffs: &[BigRational]) -> Result<Self> {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_parts(field, field.reduce(num), den))
    }

    /// Rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Multiplicative order if the element is a root of unity in the field.
    pub fn root_order(&self) -> Option<u64> {
        let n = self.field.order;
        let one = Self::one(&self.field);
        let mut acc = self.clone();
        let bound = if n % 2 == 0 { n } else { 2 * n };
        for k in 1..=bound {
            if acc == one {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    fn mul_zeta_power(&self, e: i64) -> Self {
        let z = self.field.power_of_zeta(e);
        let prod = upoly::mul_int(&self.num, &z);
        Self::from_parts(&self.field, self.field.reduce(prod), self.den.clone())
    }

    fn check(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "mixing {:?} and {:?}",
            self.field,
            other.field
        );
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Scalar for Cyclotomic {
    type Ctx = CyclotomicField;

    const EXACT: bool = true;
    const BACKEND: &'static str = "cyclotomic";

    fn ctx(&self) -> CyclotomicField {
        self.field.clone()
    }

    fn zero(ctx: &CyclotomicField) -> Self {
        Cyclotomic {
            field: ctx.clone(),
            num: vec![BigInt::zero(); ctx.degree()],
            den: BigInt::one(),
        }
    }

    fn from_i64(ctx: &CyclotomicField, n: i64) -> Self {
        let mut z = Self::zero(ctx);
        z.num[0] = BigInt::from(n);
        z
    }

    fn from_rational(ctx: &CyclotomicField, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); ctx.degree()];
        num[0] = q.numer().clone();
        Self::from_parts(ctx, num, q.denom().clone())
    }

    fn root_of_unity(ctx: &CyclotomicField, n: u64, k: i64) -> Result<Self> {
        if n == 0 || ctx.order % n != 0 {
            return Err(Error::RootNotInField {
                requested: n,
                order: ctx.order,
            });
        }
        let step = (ctx.order / n) as i64;
        let e = (k.rem_euclid(n as i64)) * step;
        Ok(Cyclotomic {
            field: ctx.clone(),
            num: ctx.power_of_zeta(e),
            den: BigInt::one(),
        })
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return Self::from_parts(&self.field, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        Self::from_parts(&self.field, num, &self.den * &rhs.den)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.field);
        }
        let prod = upoly::mul_int(&self.num, &rhs.num);
        Self::from_parts(&self.field, self.field.reduce(prod), &self.den * &rhs.den)
    }

    fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(&self.field, &q.recip()));
        }
        let a: Vec<BigRational> = self.coeffs();
        let m: Vec<BigRational> = self
            .field
            .phi
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = upoly::inverse_mod(&a, &m)?;
        Self::from_coeffs(&self.field, &inv).ok()
    }

    /// Square roots of elements of the form `r²·ζ^k` with `r` rational; other
    /// elements are reported as irrational even when a root exists.
    fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.field.order as i64;
        for k in 0..n {
            let Some(c) = self.mul_zeta_power(-k).as_rational() else {
                continue;
            };
            let Some(r) = rational_sqrt(&c) else {
                continue;
            };
            let half = if k % 2 == 0 {
                Some(k / 2)
            } else if n % 2 == 1 {
                Some((k + n) / 2)
            } else {
                None
            };
            if let Some(h) = half {
                let root = Self::root_of_unity(&self.field, self.field.order, h)?;
                return Ok(root.mul(&Self::from_rational(&self.field, &r)));
            }
        }
        Err(Error::IrrationalDiscriminant)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn magnitude(&self) -> f64 {
        let (re, im) = self.to_c64();
        re.hypot(im)
    }

    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn to_c64(&self) -> (f64, f64) {
        let n = self.field.order as f64;
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN) / d;
            let ang = std::f64::consts::TAU * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    fn to_complex(&self, prec: Precision) -> Complex {
        let work = prec.with_guard();
        let mut acc = Complex::zero(&work);
        let mut zeta_k = Complex::one(&work);
        let zeta = Complex::root_of_unity(&work, self.field.order, 1)
            .expect("numeric roots of unity always exist");
        for c in &self.num {
            if !c.is_zero() {
                acc = acc.add(&zeta_k.mul(&Complex::from_bigint(&work, c)));
            }
            zeta_k = zeta_k.mul(&zeta);
        }
        acc.div(&Complex::from_bigint(&work, &self.den))
            .expect("denominator is positive")
            .with_precision(prec)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{k}"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        write!(f, "({})", terms.join(" + ").replace("+ -", "- "))
    }
}
