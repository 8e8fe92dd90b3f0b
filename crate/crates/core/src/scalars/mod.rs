//! Field backends shared by the polynomial and matrix code.
//!
//! Two implementations live behind [`Scalar`]:
//!
//! * [`Cyclotomic`] — exact elements of `Q(ζ_N)`, stored as canonical residues
//!   modulo the cyclotomic polynomial `Φ_N`. Zero testing is decidable, so
//!   every identity checked over this backend is an exact identity.
//! * [`Complex`] — arbitrary-precision complex floats. Used for sampled
//!   representations whose entries are not cyclotomic.
//!
//! Elements carry their field context (`N`, or the working precision) so that
//! constructors like [`Scalar::zero`] only need the context, and mixing fields
//! is caught at runtime.

mod complex;
mod cyclotomic;
mod upoly;

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};

pub use complex::{Complex, Precision, DEFAULT_PRECISION};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};

/// Field arithmetic contract used by every generic algorithm in the crate.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Field context (cyclotomic order or float precision).
    type Ctx: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    const EXACT: bool;
    const BACKEND: &'static str;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Self;
    /// `ζ_n^k`, i.e. `exp(2πik/n)`.
    fn root_of_unity(ctx: &Self::Ctx, n: u64, k: i64) -> Result<Self>;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn sqrt(&self) -> Result<Self>;

    /// Tolerance-aware equality: exact backends ignore `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    /// Approximate absolute value, for scaling decisions only.
    fn magnitude(&self) -> f64;
    /// Whether `self` is numerically insignificant next to a quantity of size
    /// `scale`. Always `is_zero()` for exact backends.
    fn negligible(&self, scale: f64) -> bool;
    fn to_c64(&self) -> (f64, f64);
    fn to_complex(&self, prec: Precision) -> Complex;

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one(&self.ctx()), 0.0)
    }
    fn div(&self, rhs: &Self) -> Result<Self> {
        rhs.inv().map(|r| self.mul(&r)).ok_or(Error::DivisionByZero)
    }
    fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.inv().ok_or(Error::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(&self.ctx());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }
    /// `2cos(2πk/n) = ζ_n^k + ζ_n^{-k}`.
    fn two_cos(ctx: &Self::Ctx, n: u64, k: i64) -> Result<Self> {
        Ok(Self::root_of_unity(ctx, n, k)?.add(&Self::root_of_unity(ctx, n, -k)?))
    }
}

/// Roots of `Z² + bZ + c`, returned with `θ1 + θ2 = −b` and `θ1 θ2 = c`.
pub fn solve_quadratic<S: Scalar>(b: &S, c: &S) -> Result<(S, S)> {
    let ctx = b.ctx();
    let four = S::from_i64(&ctx, 4);
    let disc = b.mul(b).sub(&four.mul(c));
    let root = disc.sqrt()?;
    let two = S::from_i64(&ctx, 2);
    let nb = b.neg();
    let theta1 = nb.add(&root).div(&two)?;
    let theta2 = nb.sub(&root).div(&two)?;
    Ok((theta1, theta2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_factorable_exact() {
        let f = CyclotomicField::new(1);
        let b = Cyclotomic::from_i64(&f, -3);
        let c = Cyclotomic::from_i64(&f, 2);
        let (r1, r2) = solve_quadratic(&b, &c).unwrap();
        let mut roots = vec![r1.to_c64().0, r2.to_c64().0];
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(roots, vec![1.0, 2.0]);
    }

    #[test]
    fn quadratic_unit_roots() {
        let f = CyclotomicField::new(1);
        let (r1, r2) = solve_quadratic(
            &Cyclotomic::from_i64(&f, 0),
            &Cyclotomic::from_i64(&f, -1),
        )
        .unwrap();
        assert!(r1.add(&r2).is_zero());
        assert_eq!(r1.mul(&r2), Cyclotomic::from_i64(&f, -1));
    }

    #[test]
    fn quadratic_irrational_over_q_rejected() {
        let f = CyclotomicField::new(1);
        let err = solve_quadratic(&Cyclotomic::from_i64(&f, 0), &Cyclotomic::from_i64(&f, -2))
            .unwrap_err();
        assert_eq!(err, Error::IrrationalDiscriminant);
    }

    #[test]
    fn quadratic_needs_field_root() {
        // Z² + 1 splits in Q(ζ_4) but not over Q.
        let q4 = CyclotomicField::new(4);
        let (r1, r2) =
            solve_quadratic(&Cyclotomic::from_i64(&q4, 0), &Cyclotomic::from_i64(&q4, 1)).unwrap();
        let i = Cyclotomic::root_of_unity(&q4, 4, 1).unwrap();
        assert!(r1 == i || r2 == i);
    }

    #[test]
    fn quadratic_random_numeric_residual() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let prec = Precision::default();
        for _ in 0..50 {
            let b = Complex::from_f64(prec, rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let c = Complex::from_f64(prec, rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let (t1, t2) = solve_quadratic(&b, &c).unwrap();
            for t in [&t1, &t2] {
                let r = t.mul(t).add(&b.mul(t)).add(&c);
                assert!(r.magnitude() < 1e-20, "residual {}", r.magnitude());
            }
            assert!(t1.add(&t2).approx_eq(&b.neg(), 1e-20));
        }
    }
}
