use super::mat::Mat;
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Product of two binary forms given by coefficient vectors in powers of
/// `z1` (entry `i` multiplies `z1^i z2^{deg−i}`).
fn form_mul<S: Scalar>(a: &[S], b: &[S], ctx: &S::Ctx) -> Vec<S> {
    let mut out = vec![S::zero(ctx); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// The action of `P ∈ SL(2)` on binary forms of degree `n − 1` by
/// `f ↦ f ∘ P⁻¹`, written in the basis `z2^{n−1}, z1 z2^{n−2}, …, z1^{n−1}`.
///
/// In this basis `diag(α, α⁻¹)` maps to `diag(α^{n−1}, α^{n−3}, …, α^{1−n})`.
pub fn symmetric_power_matrix<S: Scalar>(p: &Mat<S>, n: usize) -> Result<Mat<S>> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch(format!("symmetric power needs 2x2, got {0}x{0}", p.dim())));
    }
    if n < 1 {
        return Err(Error::Representation("symmetric power degree must be at least 1".into()));
    }
    let ctx = p.ctx().clone();
    let inv = p.inverse()?;
    // z1 ↦ a z1 + b z2 and z2 ↦ c z1 + d z2, as forms indexed by z1-degree.
    let image_z1 = [inv.get(0, 1).clone(), inv.get(0, 0).clone()];
    let image_z2 = [inv.get(1, 1).clone(), inv.get(1, 0).clone()];
    let one = vec![S::one(&ctx)];
    let mut pow1 = vec![one.clone()];
    let mut pow2 = vec![one];
    for k in 1..n {
        pow1.push(form_mul(&pow1[k - 1], &image_z1, &ctx));
        pow2.push(form_mul(&pow2[k - 1], &image_z2, &ctx));
    }
    let mut out = Mat::zeros(n, &ctx);
    for k in 0..n {
        // basis vector z1^k z2^{n−1−k}
        let col = form_mul(&pow1[k], &pow2[n - 1 - k], &ctx);
        for (i, c) in col.into_iter().enumerate() {
            out.set(i, k, c);
        }
    }
    Ok(out)
}

/// Lifts a 2-dimensional representation to `SL(n)` through the symmetric
/// power.
pub fn symmetric_power<S: Scalar>(rep: &Representation<S>, n: usize) -> Result<Representation<S>> {
    if rep.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "symmetric power needs a 2-dimensional representation, got {}",
            rep.dim()
        )));
    }
    rep.map_images(|m| symmetric_power_matrix(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, CyclotomicField};

    #[test]
    fn diagonal_is_descending() {
        let f = CyclotomicField::new(12);
        let a = Cyclotomic::root_of_unity(&f, 12, 1).unwrap();
        let d = Mat::diag(vec![a.clone(), a.inv().unwrap()]);
        for n in 1..6 {
            let s = symmetric_power_matrix(&d, n).unwrap();
            let expect: Vec<Cyclotomic> = (0..n)
                .map(|k| a.pow(n as i64 - 1 - 2 * k as i64).unwrap())
                .collect();
            assert_eq!(s, Mat::diag(expect));
        }
    }

    #[test]
    fn identity_and_degree_one() {
        let f = CyclotomicField::new(1);
        let i = Mat::<Cyclotomic>::identity(2, &f);
        assert!(symmetric_power_matrix(&i, 4).unwrap().is_identity(0.0));
        let q = |n| Cyclotomic::from_i64(&f, n);
        let p = Mat::two_by_two(q(2), q(1), q(1), q(1));
        assert!(symmetric_power_matrix(&p, 1).unwrap().is_identity(0.0));
        assert!(symmetric_power_matrix(&p, 0).is_err());
    }

    #[test]
    fn homomorphism_exact() {
        let f = CyclotomicField::new(1);
        let q = |n| Cyclotomic::from_i64(&f, n);
        let p = Mat::two_by_two(q(2), q(1), q(1), q(1));
        let r = Mat::two_by_two(q(1), q(-3), q(0), q(1));
        for n in 1..7 {
            let lhs = symmetric_power_matrix(&p.mul(&r), n).unwrap();
            let rhs = symmetric_power_matrix(&p, n)
                .unwrap()
                .mul(&symmetric_power_matrix(&r, n).unwrap());
            assert_eq!(lhs, rhs);
            assert!(symmetric_power_matrix(&p, n).unwrap().det().is_one());
        }
        // character identity tr σ3(P) = (tr P)^2 − 1
        let t = p.trace();
        assert_eq!(symmetric_power_matrix(&p, 3).unwrap().trace(), t.mul(&t).sub(&q(1)));
    }
}
