//! Oracles and generators shared by the property and acceptance suites.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::laurent::{LaurentPoly, PolyMatrix};
use twisted_alexander::presentation::{GroupRingElement, TorusLinkParams, Word};
use twisted_alexander::repn::{is_interior, torus_representation, Mat, MatrixTriple};
use twisted_alexander::scalars::{Complex, Cyclotomic, CyclotomicField, Precision, Scalar};

pub const GRID: [(usize, i64, i64); 6] = [(1, 2, 3), (1, 3, 4), (1, 2, 5), (2, 2, 3), (2, 1, 2), (3, 1, 2)];

/// Labels checked for a grid entry: the interior ones, or, when `p = 1`
/// leaves none, the boundary labels `a ∈ {0, p}` with interior `b`.
pub fn grid_labels(mu: usize, p: i64, q: i64) -> Vec<(i64, i64)> {
    let params = TorusLinkParams::new(mu, p, q).unwrap();
    let pairs = |pred: &dyn Fn(i64, i64) -> bool| -> Vec<(i64, i64)> {
        (0..=p)
            .flat_map(|a| (0..=q).map(move |b| (a, b)))
            .filter(|&(a, b)| (a - b).rem_euclid(2) == 0 && pred(a, b))
            .collect()
    };
    let interior = pairs(&|a, b| is_interior(&params, a, b));
    if !interior.is_empty() {
        return interior;
    }
    let field = CyclotomicField::for_torus(p as u64, q as u64);
    pairs(&|a, b| (a == 0 || a == p) && 0 < b && b < q)
        .into_iter()
        .filter(|&(a, b)| torus_representation::<Cyclotomic>(&field, &params, a, b).is_ok())
        .collect()
}

/// A word as an unreduced letter sequence `(generator, ±1)`.
pub type Letters = Vec<(usize, i64)>;

pub fn random_letters(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Letters {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| (rng.gen_range(0..gens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect()
}

pub fn word_of(letters: &[(usize, i64)]) -> Word {
    Word::from_syllables(letters.iter().copied())
}

/// Fox derivative straight from the product rule, one letter at a time:
/// `∂x/∂x = 1`, `∂x⁻¹/∂x = −x⁻¹`.
pub fn naive_fox(letters: &[(usize, i64)], j: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (i, &(g, e)) in letters.iter().enumerate() {
        if g != j {
            continue;
        }
        let prefix = &letters[..i];
        if e == 1 {
            out.add_term(word_of(prefix), 1);
        } else {
            let mut w = prefix.to_vec();
            w.push((g, -1));
            out.add_term(word_of(&w), -1);
        }
    }
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det<S: Scalar>(m: &[Vec<LaurentPoly<S>>], nvars: usize, ctx: &S::Ctx) -> LaurentPoly<S> {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(nvars, ctx);
    }
    let mut acc = LaurentPoly::zero(nvars, ctx);
    for j in 0..n {
        let minor: Vec<Vec<LaurentPoly<S>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor, nvars, ctx);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Random sparse Laurent polynomial with small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, f: &CyclotomicField, nvars: usize) -> LaurentPoly<Cyclotomic> {
    let terms = rng.gen_range(0..=3);
    LaurentPoly::from_terms(
        nvars,
        f,
        (0..terms).map(|_| {
            let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-2..=3)).collect();
            let c = if rng.gen_bool(0.2) {
                Cyclotomic::root_of_unity(f, f.order(), rng.gen_range(0..f.order() as i64)).unwrap()
            } else {
                Cyclotomic::from_i64(f, rng.gen_range(-3..=3))
            };
            (e, c)
        }),
    )
}

pub fn random_poly_matrix(
    rng: &mut ChaCha8Rng,
    f: &CyclotomicField,
    n: usize,
    nvars: usize,
) -> (PolyMatrix<Cyclotomic>, Vec<Vec<LaurentPoly<Cyclotomic>>>) {
    let rows: Vec<Vec<_>> = (0..n)
        .map(|_| (0..n).map(|_| random_poly(rng, f, nvars)).collect())
        .collect();
    let mut m = PolyMatrix::zeros(n, n, nvars, f);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    (m, rows)
}

/// Random element of `SL(2, Z[ζ])` as a product of elementary matrices.
pub fn random_exact_sl2(rng: &mut ChaCha8Rng, f: &CyclotomicField) -> Mat<Cyclotomic> {
    let mut m = Mat::identity(2, f);
    for _ in 0..rng.gen_range(1..=4) {
        let k = Cyclotomic::from_i64(f, rng.gen_range(-2..=2))
            .mul(&Cyclotomic::root_of_unity(f, f.order(), rng.gen_range(0..f.order() as i64)).unwrap());
        let (one, zero) = (Cyclotomic::one(f), Cyclotomic::zero(f));
        let e = if rng.gen_bool(0.5) {
            Mat::two_by_two(one.clone(), k, zero, one)
        } else {
            Mat::two_by_two(one.clone(), zero, k, one)
        };
        m = m.mul(&e);
    }
    m
}

pub fn random_complex_sl2(rng: &mut ChaCha8Rng, prec: Precision) -> Mat<Complex> {
    loop {
        let e: Vec<Complex> = (0..4)
            .map(|_| Complex::from_f64(prec, rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let d = e[0].mul(&e[3]).sub(&e[1].mul(&e[2]));
        if d.magnitude() < 0.1 {
            continue;
        }
        let di = d.inv().unwrap();
        return Mat::two_by_two(e[0].mul(&di), e[1].mul(&di), e[2].clone(), e[3].clone());
    }
}

pub fn random_triple(rng: &mut ChaCha8Rng, prec: Precision, meridians: usize) -> MatrixTriple<Complex> {
    let x = random_complex_sl2(rng, prec);
    let y = random_complex_sl2(rng, prec);
    let ms = (0..meridians).map(|_| random_complex_sl2(rng, prec)).collect();
    MatrixTriple::from_matrices(x, y, ms)
}
