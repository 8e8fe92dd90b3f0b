use std::fmt;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Dense matrix with Laurent polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<S: Scalar> {
    rows: usize,
    cols: usize,
    nvars: usize,
    ctx: S::Ctx,
    entries: Vec<LaurentPoly<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zeros(rows: usize, cols: usize, nvars: usize, ctx: &S::Ctx) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            ctx: ctx.clone(),
            entries: vec![LaurentPoly::zero(nvars, ctx); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize, ctx: &S::Ctx) -> Self {
        let mut m = Self::zeros(n, n, nvars, ctx);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(nvars, ctx));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<S> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly<S>) {
        assert_eq!(v.nvars(), self.nvars, "entry variable count");
        self.entries[i * self.cols + j] = v;
    }

    /// Assembles a block matrix; every block in a block-row must share a
    /// height and every block in a block-column a width.
    pub fn from_blocks(blocks: &[Vec<PolyMatrix<S>>]) -> Result<Self> {
        let first = blocks
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::DimensionMismatch("empty block layout".into()))?;
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut out = Self::zeros(heights.iter().sum(), widths.iter().sum(), first.nvars, &first.ctx);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(Error::DimensionMismatch("ragged block rows".into()));
            }
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::DimensionMismatch(format!("block ({bi},{bj})")));
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Removes columns `start .. start + width`.
    pub fn remove_columns(&self, start: usize, width: usize) -> Result<Self> {
        if start + width > self.cols {
            return Err(Error::DimensionMismatch(format!(
                "columns {start}..{} of {}",
                start + width,
                self.cols
            )));
        }
        let cols = self.cols - width;
        let mut out = Self::zeros(self.rows, cols, self.nvars, &self.ctx);
        for i in 0..self.rows {
            let kept = (0..self.cols).filter(|j| *j < start || *j >= start + width);
            for (jj, j) in kept.enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars, &self.ctx);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(self.nvars, &self.ctx);
                for k in 0..self.cols {
                    acc = acc.checked_add(&self.get(i, k).checked_mul(other.get(k, j))?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact in the Laurent ring. Pivots are
    /// chosen as the nonzero candidate with the fewest terms, which keeps
    /// intermediate expression swell down. The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<LaurentPoly<S>> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let one = LaurentPoly::one(self.nvars, &self.ctx);
        if n == 0 {
            return Ok(one);
        }
        let mut a: Vec<Vec<LaurentPoly<S>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).chop()).collect())
            .collect();
        let mut prev = one;
        let mut negate = false;
        for k in 0..n {
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].num_terms());
            let Some(p) = pivot else {
                return Ok(LaurentPoly::zero(self.nvars, &self.ctx));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let cross = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = cross.chop().divexact(&prev)?.chop();
                }
                a[i][k] = LaurentPoly::zero(self.nvars, &self.ctx);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -&det } else { det })
    }

    pub fn map_entries<T: Scalar>(&self, ctx: &T::Ctx, f: impl Fn(&S) -> T) -> PolyMatrix<T> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            ctx: ctx.clone(),
            entries: self.entries.iter().map(|e| e.map_coeffs(ctx, &f)).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for PolyMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, CyclotomicField};

    type P = LaurentPoly<Cyclotomic>;

    fn f() -> CyclotomicField {
        CyclotomicField::new(1)
    }

    fn poly(terms: &[(i64, i64)]) -> P {
        P::from_terms(
            1,
            &f(),
            terms.iter().map(|(e, c)| (vec![*e], Cyclotomic::from_i64(&f(), *c))),
        )
    }

    fn mat(rows: &[&[P]]) -> PolyMatrix<Cyclotomic> {
        let mut m = PolyMatrix::zeros(rows.len(), rows[0].len(), 1, &f());
        for (i, r) in rows.iter().enumerate() {
            for (j, e) in r.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    }

    #[test]
    fn empty_and_non_square() {
        let e = PolyMatrix::<Cyclotomic>::zeros(0, 0, 1, &f());
        assert_eq!(e.determinant().unwrap(), P::one(1, &f()));
        let r = PolyMatrix::<Cyclotomic>::zeros(2, 3, 1, &f());
        assert_eq!(r.determinant().unwrap_err(), Error::NonSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn two_by_two() {
        // [[t, 1], [1, t^-1]] has det 0; [[t, 1], [-1, t]] has det t^2 + 1
        let m = mat(&[&[poly(&[(1, 1)]), poly(&[(0, 1)])], &[poly(&[(0, 1)]), poly(&[(-1, 1)])]]);
        assert!(m.determinant().unwrap().is_zero());
        let m = mat(&[&[poly(&[(1, 1)]), poly(&[(0, 1)])], &[poly(&[(0, -1)]), poly(&[(1, 1)])]]);
        assert_eq!(m.determinant().unwrap(), poly(&[(2, 1), (0, 1)]));
    }

    #[test]
    fn row_swap_flips_sign() {
        let m = mat(&[
            &[P::zero(1, &f()), poly(&[(0, 1)])],
            &[poly(&[(0, 1)]), P::zero(1, &f())],
        ]);
        assert_eq!(m.determinant().unwrap(), poly(&[(0, -1)]));
    }

    #[test]
    fn three_by_three_vandermonde() {
        // det of Vandermonde in (1, t, t^2) = (t-1)(t^2-1)(t^2-t)
        let row = |x: &P| vec![P::one(1, &f()), x.clone(), x * x];
        let xs = [P::one(1, &f()), poly(&[(1, 1)]), poly(&[(2, 1)])];
        let rows: Vec<Vec<P>> = xs.iter().map(row).collect();
        let refs: Vec<&[P]> = rows.iter().map(|r| r.as_slice()).collect();
        let d = mat(&refs).determinant().unwrap();
        let expect = &(&poly(&[(1, 1), (0, -1)]) * &poly(&[(2, 1), (0, -1)])) * &poly(&[(2, 1), (1, -1)]);
        assert_eq!(d, expect);
    }

    #[test]
    fn blocks_and_column_removal() {
        let i2 = PolyMatrix::<Cyclotomic>::identity(2, 1, &f());
        let z = PolyMatrix::<Cyclotomic>::zeros(2, 2, 1, &f());
        let m = PolyMatrix::from_blocks(&[vec![i2.clone(), z.clone()], vec![z, i2]]).unwrap();
        assert_eq!(m.rows(), 4);
        assert_eq!(m.determinant().unwrap(), P::one(1, &f()));
        let r = m.remove_columns(2, 2).unwrap();
        assert_eq!((r.rows(), r.cols()), (4, 2));
        assert!(m.remove_columns(3, 2).is_err());
    }
}
