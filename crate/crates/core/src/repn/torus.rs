use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::character::{extract_coordinates, from_character_case11, CharacterPoint, MatrixTriple};
use super::mat::Mat;
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::presentation::{torus_link_presentation, Presentation, TorusLinkParams};
use crate::scalars::{Complex, Precision, Scalar};

/// Checks `a ≡ b (mod 2)`, `0 ≤ a ≤ p`, `0 ≤ b ≤ q`.
pub fn check_label(params: &TorusLinkParams, a: i64, b: i64) -> Result<()> {
    if !(0..=params.p).contains(&a) || !(0..=params.q).contains(&b) {
        return Err(Error::InvalidParams(format!(
            "label (a, b) = ({a}, {b}) outside 0 ≤ a ≤ {}, 0 ≤ b ≤ {}",
            params.p, params.q
        )));
    }
    if (a - b).rem_euclid(2) != 0 {
        return Err(Error::Parity(format!("a ≡ b (mod 2) required, got a = {a}, b = {b}")));
    }
    Ok(())
}

/// Whether `(a, b)` labels an irreducible `(X, Y)` pair: `0 < a < p`, `0 < b < q`.
pub fn is_interior(params: &TorusLinkParams, a: i64, b: i64) -> bool {
    0 < a && a < params.p && 0 < b && b < params.q
}

fn sl2_int<S: Scalar>(ctx: &S::Ctx, e: [i64; 4]) -> Mat<S> {
    let f = |k| S::from_i64(ctx, k);
    Mat::two_by_two(f(e[0]), f(e[1]), f(e[2]), f(e[3]))
}

/// A fixed representation of the torus-link group with eigenvalue label
/// `(a, b)`, on the generators of [`torus_link_presentation`].
///
/// * Interior labels: `X = diag(α, α⁻¹)`, `Y = [[0, 1], [−1, t_y]]`
///   (an irreducible pair, `u = −1`), `M_i = [[1, i], [1, i + 1]]`.
/// * One of `X`, `Y` central (`a ∈ {0, p}` or `b ∈ {0, q}`): the other is
///   diagonal and `M_i = [[i + 1, 1], [i, 1]]`, which shares no eigenvector
///   with it.
///
/// Here `α = ζ_{2p}^a`, `β = ζ_{2q}^b`, so `X^p = (−1)^a I = Y^q`.
pub fn torus_representation<S: Scalar>(ctx: &S::Ctx, params: &TorusLinkParams, a: i64, b: i64) -> Result<Representation<S>> {
    check_label(params, a, b)?;
    let pres = torus_link_presentation(params)?;
    let (p, q) = (params.p, params.q);
    let alpha = S::root_of_unity(ctx, 2 * p as u64, a)?;
    let beta = S::root_of_unity(ctx, 2 * q as u64, b)?;
    let inv = |z: &S| z.inv().ok_or(Error::DivisionByZero);
    let x_central = a == 0 || a == p;
    let y_central = b == 0 || b == q;
    let k = params.mu - 1;

    let (x, y, ms) = if !x_central && !y_central {
        let t_y = beta.add(&inv(&beta)?);
        let x = Mat::diag(vec![alpha.clone(), inv(&alpha)?]);
        let y = Mat::two_by_two(S::zero(ctx), S::one(ctx), S::from_i64(ctx, -1), t_y);
        let ms = (1..=k as i64).map(|i| sl2_int(ctx, [1, i, 1, i + 1])).collect();
        (x, y, ms)
    } else {
        if x_central && y_central && k < 2 {
            return Err(Error::Reducible("X and Y both central".into()));
        }
        if k == 0 {
            return Err(Error::Reducible("abelian image for a knot with a central generator".into()));
        }
        let diag_or_central = |z: &S, central: bool| -> Result<Mat<S>> {
            Ok(if central {
                Mat::scalar(2, z.clone())
            } else {
                Mat::diag(vec![z.clone(), inv(z)?])
            })
        };
        let x = diag_or_central(&alpha, x_central)?;
        let y = diag_or_central(&beta, y_central)?;
        let ms = (1..=k as i64).map(|i| sl2_int(ctx, [i + 1, 1, i, 1])).collect();
        (x, y, ms)
    };
    let mut images: Vec<Mat<S>> = ms;
    images.push(x);
    images.push(y);
    Representation::new(&pres, images)
}

/// A random point in the interior (irreducible) component labelled
/// `(a, b)`, obtained from random matrices and rebuilt from its trace
/// coordinates.
#[derive(Clone, Debug)]
pub struct SampledPoint {
    pub index: u64,
    pub point: CharacterPoint<Complex>,
    pub triple: MatrixTriple<Complex>,
    pub representation: Representation<Complex>,
}

/// Threshold below which `tr[X, Y] − 2` is treated as zero (reducible pair).
pub const IRREDUCIBILITY_TOLERANCE: f64 = 1e-8;

fn random_complex(rng: &mut ChaCha8Rng, prec: Precision) -> Complex {
    Complex::from_f64(prec, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_sl2(rng: &mut ChaCha8Rng, prec: Precision) -> Mat<Complex> {
    loop {
        let e: Vec<Complex> = (0..4).map(|_| random_complex(rng, prec)).collect();
        let m = Mat::two_by_two(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone());
        let d = m.det();
        if d.magnitude() < 0.1 {
            continue;
        }
        let di = d.inv().expect("nonzero determinant");
        return Mat::two_by_two(e[0].mul(&di), e[1].mul(&di), e[2].clone(), e[3].clone());
    }
}

/// Draws sample number `index` for a run seeded with `seed`; each sample has
/// its own generator so that samples can be computed independently.
pub fn sample_interior_point(
    params: &TorusLinkParams,
    a: i64,
    b: i64,
    prec: Precision,
    seed: u64,
    index: u64,
) -> Result<SampledPoint> {
    check_label(params, a, b)?;
    if !is_interior(params, a, b) {
        return Err(Error::BoundaryLabel);
    }
    let pres: Presentation = torus_link_presentation(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    let alpha = Complex::root_of_unity(&prec, 2 * params.p as u64, a)?;
    let beta = Complex::root_of_unity(&prec, 2 * params.q as u64, b)?;
    let x = Mat::diag(vec![alpha.clone(), alpha.inv().ok_or(Error::DivisionByZero)?]);
    let y_diag = Mat::diag(vec![beta.clone(), beta.inv().ok_or(Error::DivisionByZero)?]);
    loop {
        let g = random_sl2(&mut rng, prec);
        let y = y_diag.conjugate_by(&g)?;
        let ms: Vec<Mat<Complex>> = (1..params.mu).map(|_| random_sl2(&mut rng, prec)).collect();
        let original = MatrixTriple::from_matrices(x.clone(), y, ms);
        let mut point = extract_coordinates(&original);
        if point.reducibility_form().magnitude() < IRREDUCIBILITY_TOLERANCE {
            continue;
        }
        point.label = Some((a, b));
        let triple = from_character_case11(params.p, params.q, &point)?;
        let representation = Representation::new(&pres, triple.generator_images())?;
        return Ok(SampledPoint {
            index,
            point,
            triple,
            representation,
        });
    }
}
