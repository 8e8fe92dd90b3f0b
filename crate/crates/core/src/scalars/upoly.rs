//! Dense univariate helpers over `Z` and `Q`, used to build `Φ_N` and to
//! invert cyclotomic residues.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim_int(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Exact quotient of integer polynomials where the divisor is monic.
pub(crate) fn div_monic_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = a.to_vec();
    trim_int(&mut r);
    if r.len() <= db {
        return vec![];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - db] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            r[k - db + i] -= &c * bi;
        }
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "non-exact cyclotomic division");
    q
}

pub(crate) fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim_q(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn divrem_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_q(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = &r[k] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            r[k - db + i] -= t;
        }
        q[k - db] = c;
    }
    trim_q(&mut r);
    (q, r)
}

fn sub_mul_q(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // a - q*b
    let mut out = a.to_vec();
    let need = if q.is_empty() || b.is_empty() {
        0
    } else {
        q.len() + b.len() - 1
    };
    if out.len() < need {
        out.resize(need, BigRational::zero());
    }
    for (i, x) in q.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] -= x * y;
        }
    }
    trim_q(&mut out);
    out
}

/// Inverse of `a` modulo the (irreducible) `modulus`, or `None` if `a` is zero.
pub(crate) fn inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim_q(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, r) = divrem_q(&r0, &r1);
        let s2 = sub_mul_q(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        if r1.is_empty() {
            // gcd has positive degree: modulus was not irreducible.
            return None;
        }
    }
    let c = r1[0].recip();
    let (_, inv) = divrem_q(&s1.iter().map(|x| x * &c).collect::<Vec<_>>(), modulus);
    Some(inv)
}
