use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Small dense square matrix over a [`Scalar`] field, row-major.
#[derive(Clone, Debug)]
pub struct Mat<S: Scalar> {
    n: usize,
    ctx: S::Ctx,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(n: usize, ctx: &S::Ctx) -> Self {
        Mat {
            n,
            ctx: ctx.clone(),
            data: vec![S::zero(ctx); n * n],
        }
    }

    pub fn identity(n: usize, ctx: &S::Ctx) -> Self {
        let mut m = Self::zeros(n, ctx);
        for i in 0..n {
            m.data[i * n + i] = S::one(ctx);
        }
        m
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let ctx = c.ctx();
        let mut m = Self::zeros(n, &ctx);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from rows; fails unless square.
    pub fn from_rows(ctx: &S::Ctx, rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare {
                rows: n,
                cols: rows.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        Ok(Mat {
            n,
            ctx: ctx.clone(),
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `[[a, b], [c, d]]`.
    pub fn two_by_two(a: S, b: S, c: S, d: S) -> Self {
        let ctx = a.ctx();
        Mat {
            n: 2,
            ctx,
            data: vec![a, b, c, d],
        }
    }

    pub fn diag(entries: Vec<S>) -> Self {
        let n = entries.len();
        let ctx = entries[0].ctx();
        let mut m = Self::zeros(n, &ctx);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimension");
        let n = self.n;
        let mut out = Self::zeros(n, &self.ctx);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.data[i * n + j].add(&a.mul(&other.data[k * n + j]));
                    out.data[i * n + j] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Mat {
            n: self.n,
            ctx: self.ctx.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Mat {
            n: self.n,
            ctx: self.ctx.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Mat {
            n: self.n,
            ctx: self.ctx.clone(),
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(&self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n, &self.ctx);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    /// Determinant by Gaussian elimination (largest-magnitude pivot).
    pub fn det(&self) -> S {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = S::one(&self.ctx);
        for k in 0..n {
            let piv = (k..n)
                .filter(|&i| !a[i * n + k].is_zero())
                .max_by(|&i, &j| a[i * n + k].magnitude().total_cmp(&a[j * n + k].magnitude()));
            let Some(p) = piv else {
                return S::zero(&self.ctx);
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                det = det.neg();
            }
            let pivot = a[k * n + k].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for i in k + 1..n {
                let f = a[i * n + k].mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a[i * n + j].sub(&f.mul(&a[k * n + j]));
                    a[i * n + j] = v;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        if n == 2 {
            let d = self.det();
            let di = d.inv().ok_or(Error::DivisionByZero)?;
            let [a, b, c, e] = [&self.data[0], &self.data[1], &self.data[2], &self.data[3]];
            return Ok(Mat {
                n,
                ctx: self.ctx.clone(),
                data: vec![e.mul(&di), b.neg().mul(&di), c.neg().mul(&di), a.mul(&di)],
            });
        }
        let mut a = self.clone();
        let mut inv = Self::identity(n, &self.ctx);
        for k in 0..n {
            let p = (k..n)
                .filter(|&i| !a.get(i, k).is_zero())
                .max_by(|&i, &j| a.get(i, k).magnitude().total_cmp(&a.get(j, k).magnitude()))
                .ok_or(Error::DivisionByZero)?;
            for j in 0..n {
                a.data.swap(p * n + j, k * n + j);
                inv.data.swap(p * n + j, k * n + j);
            }
            let pinv = a.get(k, k).inv().ok_or(Error::DivisionByZero)?;
            for j in 0..n {
                a.data[k * n + j] = a.data[k * n + j].mul(&pinv);
                inv.data[k * n + j] = inv.data[k * n + j].mul(&pinv);
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a.get(i, k).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.data[i * n + j] = a.data[i * n + j].sub(&f.mul(&a.data[k * n + j]));
                    inv.data[i * n + j] = inv.data[i * n + j].sub(&f.mul(&inv.data[k * n + j]));
                }
            }
        }
        Ok(inv)
    }

    /// `self^e` for any integer `e` (negative powers via the inverse).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::identity(self.n, &self.ctx);
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

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        Ok(g.mul(self).mul(&g.inverse()?))
    }

    /// Largest entry magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(S::magnitude).fold(0.0, f64::max)
    }

    /// Entrywise comparison: exact for exact backends, else absolute `tol`
    /// scaled by `max(1, |entries|)`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.n != other.n {
            return false;
        }
        if S::EXACT {
            return self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, 0.0));
        }
        let scale = self.max_magnitude().max(other.max_magnitude()).max(1.0);
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| a.sub(b).magnitude() <= tol * scale)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&Self::identity(self.n, &self.ctx), tol)
    }

    pub fn map<T: Scalar>(&self, ctx: &T::Ctx, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            n: self.n,
            ctx: ctx.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S: Scalar> PartialEq for Mat<S> {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, 0.0)
    }
}

impl<S: Scalar> fmt::Display for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .data
            .chunks(self.n.max(1))
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, CyclotomicField};

    fn q(n: i64) -> Cyclotomic {
        Cyclotomic::from_i64(&CyclotomicField::new(1), n)
    }

    fn m(rows: &[&[i64]]) -> Mat<Cyclotomic> {
        Mat::from_rows(
            &CyclotomicField::new(1),
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), q(18));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity(0.0));
        let b = m(&[&[1, 2], &[3, 7]]);
        assert!(b.mul(&b.inverse().unwrap()).is_identity(0.0));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn powers() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5).unwrap(), m(&[&[1, 5], &[0, 1]]));
        assert_eq!(a.pow(-3).unwrap(), m(&[&[1, -3], &[0, 1]]));
        assert!(a.pow(0).unwrap().is_identity(0.0));
    }

    #[test]
    fn det_with_row_swap() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), q(-1));
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).det(), q(-1));
    }
}
