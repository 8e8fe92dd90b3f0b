use super::mat::Mat;
use crate::error::{Error, Result};
use crate::scalars::{solve_quadratic, Scalar};

/// Which explicit construction a character point belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `(X, Y)` irreducible: `u ≠ 0`.
    Case11,
    /// `(X, Y)` reducible but non-abelian: `Y` upper triangular.
    Case12,
    /// `(X, Y)` abelian and not central: both diagonal.
    Case21,
}

/// Trace coordinates attached to the `i`-th extra meridian `M_i`:
/// `tr M_i`, `tr X M_i`, `tr Y M_i`, `tr X Y M_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceQuad<S: Scalar> {
    pub t_i: S,
    pub t_xi: S,
    pub t_yi: S,
    pub t_xyi: S,
}

/// A point of the character variety in trace coordinates.
///
/// `label = Some((a, b))` records that `t_x = 2cos(πa/p)` and
/// `t_y = 2cos(πb/q)`, which lets constructions use the exact eigenvalues
/// `ζ_{2p}^a`, `ζ_{2q}^b` instead of solving for them.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterPoint<S: Scalar> {
    pub t_x: S,
    pub t_y: S,
    pub t_xy: S,
    pub quads: Vec<TraceQuad<S>>,
    pub label: Option<(i64, i64)>,
    pub case: CaseTag,
}

impl<S: Scalar> CharacterPoint<S> {
    /// Number of link components (`1 +` the number of quadruples).
    pub fn mu(&self) -> usize {
        self.quads.len() + 1
    }

    /// A point with `t_x = ζ_{2p}^a + ζ_{2p}^{−a}` and `t_y = ζ_{2q}^b + ζ_{2q}^{−b}`.
    pub fn labeled(
        ctx: &S::Ctx,
        (p, q): (i64, i64),
        (a, b): (i64, i64),
        t_xy: S,
        quads: Vec<TraceQuad<S>>,
        case: CaseTag,
    ) -> Result<Self> {
        if (a - b).rem_euclid(2) != 0 {
            return Err(Error::Parity(format!("a = {a} and b = {b} must have equal parity")));
        }
        if !(0..=p).contains(&a) || !(0..=q).contains(&b) {
            return Err(Error::InvalidCharacter(format!("label ({a}, {b}) outside 0..=p, 0..=q")));
        }
        Ok(CharacterPoint {
            t_x: S::two_cos(ctx, 2 * p as u64, a)?,
            t_y: S::two_cos(ctx, 2 * q as u64, b)?,
            t_xy,
            quads,
            label: Some((a, b)),
            case,
        })
    }

    /// `t_xy² − t_x t_y t_xy + t_x² + t_y² − 4`, which vanishes exactly when
    /// `(X, Y)` is reducible.
    pub fn reducibility_form(&self) -> S {
        let four = S::from_i64(&self.t_x.ctx(), 4);
        let (x, y, xy) = (&self.t_x, &self.t_y, &self.t_xy);
        xy.mul(xy)
            .sub(&x.mul(y).mul(xy))
            .add(&x.mul(x))
            .add(&y.mul(y))
            .sub(&four)
    }
}

/// Per-meridian construction data, kept for inspection.
#[derive(Clone, Debug)]
pub struct MeridianData<S: Scalar> {
    pub gamma: S,
    pub delta: S,
    pub epsilon: S,
    pub zeta: S,
    /// Roots of the quadratic solved for `(uδ, ε)`; interior case only.
    pub theta: Option<(S, S)>,
}

/// Matrices `X, Y, M_1, …, M_{μ−1}` with the auxiliary quantities used to
/// build them.
#[derive(Clone, Debug)]
pub struct MatrixTriple<S: Scalar> {
    pub x: Mat<S>,
    pub y: Mat<S>,
    pub ms: Vec<Mat<S>>,
    /// Entries of `Y = [[s, 1], [u, v]]` (interior case only).
    pub s: Option<S>,
    pub u: Option<S>,
    pub v: Option<S>,
    pub meridians: Vec<MeridianData<S>>,
}

impl<S: Scalar> MatrixTriple<S> {
    pub fn from_matrices(x: Mat<S>, y: Mat<S>, ms: Vec<Mat<S>>) -> Self {
        MatrixTriple {
            x,
            y,
            ms,
            s: None,
            u: None,
            v: None,
            meridians: Vec::new(),
        }
    }

    /// Images in generator order `m_1, …, m_{μ−1}, x, y`.
    pub fn generator_images(&self) -> Vec<Mat<S>> {
        let mut v = self.ms.clone();
        v.push(self.x.clone());
        v.push(self.y.clone());
        v
    }
}

/// Residual of the trace quadratic for quadruple `i`:
///
/// `t_xyi² − (t_x t_yi + t_y t_xi + t_i t_xy − t_x t_y t_i) t_xyi
///  + t_x² + t_y² + t_i² + t_xy² + t_xi² + t_yi²
///  + t_xy t_xi t_yi − t_x t_y t_xy − t_x t_i t_xi − t_y t_i t_yi − 4`.
///
/// Zero means the coordinates come from actual matrices.
pub fn check_trace_quadratic<S: Scalar>(point: &CharacterPoint<S>, i: usize) -> S {
    let TraceQuad { t_i, t_xi, t_yi, t_xyi } = &point.quads[i];
    let (tx, ty, txy) = (&point.t_x, &point.t_y, &point.t_xy);
    let four = S::from_i64(&tx.ctx(), 4);
    let linear = tx
        .mul(t_yi)
        .add(&ty.mul(t_xi))
        .add(&t_i.mul(txy))
        .sub(&tx.mul(ty).mul(t_i));
    let sq = |z: &S| z.mul(z);
    let constant = sq(tx)
        .add(&sq(ty))
        .add(&sq(t_i))
        .add(&sq(txy))
        .add(&sq(t_xi))
        .add(&sq(t_yi))
        .add(&txy.mul(t_xi).mul(t_yi))
        .sub(&tx.mul(ty).mul(txy))
        .sub(&tx.mul(t_i).mul(t_xi))
        .sub(&ty.mul(t_i).mul(t_yi))
        .sub(&four);
    sq(t_xyi).sub(&linear.mul(t_xyi)).add(&constant)
}

/// Trace coordinates of a triple. The case tag is `Case11` unless the
/// reducibility form vanishes (exactly, or to `1e-12` relative).
pub fn extract_coordinates<S: Scalar>(triple: &MatrixTriple<S>) -> CharacterPoint<S> {
    let (x, y) = (&triple.x, &triple.y);
    let xy = x.mul(y);
    let quads = triple
        .ms
        .iter()
        .map(|m| TraceQuad {
            t_i: m.trace(),
            t_xi: x.mul(m).trace(),
            t_yi: y.mul(m).trace(),
            t_xyi: xy.mul(m).trace(),
        })
        .collect();
    let mut point = CharacterPoint {
        t_x: x.trace(),
        t_y: y.trace(),
        t_xy: xy.trace(),
        quads,
        label: None,
        case: CaseTag::Case11,
    };
    if point.reducibility_form().negligible(1e12 * point.t_xy.magnitude().max(1.0)) {
        point.case = CaseTag::Case12;
    }
    point
}

fn root_tolerance<S: Scalar>() -> f64 {
    if S::EXACT {
        0.0
    } else {
        1e-12
    }
}

/// `(α, α⁻¹)` with `α + α⁻¹ = t_x`: exact `ζ_{2p}^a` when labelled,
/// otherwise a root of `Z² − t_x Z + 1`.
fn eigen_pair<S: Scalar>(t: &S, order: i64, label: Option<i64>) -> Result<(S, S)> {
    let ctx = t.ctx();
    match label {
        Some(a) => {
            let r = S::root_of_unity(&ctx, 2 * order as u64, a)?;
            let ri = r.inv().ok_or(Error::DivisionByZero)?;
            Ok((r, ri))
        }
        None => solve_quadratic(&t.neg(), &S::one(&ctx)).map_err(|e| match e {
            Error::IrrationalDiscriminant => Error::ExactRootsUnavailable,
            e => e,
        }),
    }
}

/// `γ` and `ζ = t_i − γ` from `tr M = t_i`, `tr XM = t_xi`, `X = diag(α, α⁻¹)`.
fn diagonal_entries<S: Scalar>(alpha: &S, alpha_inv: &S, q: &TraceQuad<S>) -> Result<(S, S)> {
    let denom = alpha.sub(alpha_inv);
    let gamma = q.t_xi.sub(&alpha_inv.mul(&q.t_i)).div(&denom)?;
    let zeta = q.t_i.sub(&gamma);
    Ok((gamma, zeta))
}

fn require_non_central<S: Scalar>(alpha: &S, alpha_inv: &S) -> Result<()> {
    if alpha.sub(alpha_inv).negligible(1.0) {
        return Err(Error::InvalidCharacter("t_x = ±2: X is central".into()));
    }
    Ok(())
}

/// The irreducible case: `X = diag(α, α⁻¹)`, `Y = [[s, 1], [u, t_y − s]]`
/// with `u ≠ 0`, and each `M_i = [[γ, θ/u], [θ', t_i − γ]]` where `θ, θ'`
/// are the roots of `Z² − (t_yi − v t_i − (s − v)γ)Z + u(γζ − 1)`, assigned
/// so that `tr(X Y M_i) = t_xyi`.
pub fn from_character_case11<S: Scalar>(p: i64, q: i64, point: &CharacterPoint<S>) -> Result<MatrixTriple<S>> {
    if let Some((a, b)) = point.label {
        if !(0 < a && a < p && 0 < b && b < q) {
            return Err(Error::BoundaryLabel);
        }
    }
    let ctx = point.t_x.ctx();
    let (alpha, alpha_inv) = eigen_pair(&point.t_x, p, point.label.map(|l| l.0))?;
    require_non_central(&alpha, &alpha_inv)?;
    let scale = point.t_xy.magnitude().max(1.0);
    if point.reducibility_form().negligible(1e12 * scale) {
        return Err(Error::DegenerateCase12);
    }
    let one = S::one(&ctx);
    let zero = S::zero(&ctx);
    let denom = alpha.sub(&alpha_inv);
    let s = point.t_xy.sub(&alpha_inv.mul(&point.t_y)).div(&denom)?;
    let v = point.t_y.sub(&s);
    let u = s.mul(&v).sub(&one);
    let x = Mat::two_by_two(alpha.clone(), zero.clone(), zero.clone(), alpha_inv.clone());
    let y = Mat::two_by_two(s.clone(), one.clone(), u.clone(), v.clone());
    let xy = x.mul(&y);
    let tol = root_tolerance::<S>();

    let mut ms = Vec::new();
    let mut meridians = Vec::new();
    for (i, quad) in point.quads.iter().enumerate() {
        let (gamma, zeta) = diagonal_entries(&alpha, &alpha_inv, quad)?;
        let b = quad.t_yi.sub(&v.mul(&quad.t_i)).sub(&s.sub(&v).mul(&gamma));
        let c = u.mul(&gamma.mul(&zeta).sub(&one));
        let (th1, th2) = solve_quadratic(&b.neg(), &c).map_err(|e| match e {
            Error::IrrationalDiscriminant => Error::ExactRootsUnavailable,
            e => e,
        })?;
        let build = |d: &S, e: &S| -> Result<Mat<S>> {
            Ok(Mat::two_by_two(gamma.clone(), d.div(&u)?, e.clone(), zeta.clone()))
        };
        let first = build(&th1, &th2)?;
        let second = build(&th2, &th1)?;
        let target = &quad.t_xyi;
        let scale = target.magnitude().max(1.0);
        let matches = |m: &Mat<S>| xy.mul(m).trace().approx_eq(target, tol * scale);
        let (m, delta_u, eps) = if matches(&first) {
            (first, th1.clone(), th2.clone())
        } else if matches(&second) {
            (second, th2.clone(), th1.clone())
        } else {
            return Err(Error::OffVariety { index: i + 1 });
        };
        ms.push(m);
        meridians.push(MeridianData {
            gamma,
            delta: delta_u.div(&u)?,
            epsilon: eps,
            zeta,
            theta: Some((th1, th2)),
        });
    }
    Ok(MatrixTriple {
        x,
        y,
        ms,
        s: Some(s),
        u: Some(u),
        v: Some(v),
        meridians,
    })
}

fn beta_pair<S: Scalar>(ctx: &S::Ctx, q: i64, b: i64, sign: i8) -> Result<(S, S)> {
    let beta = S::root_of_unity(ctx, 2 * q as u64, b)?;
    let beta_inv = beta.inv().ok_or(Error::DivisionByZero)?;
    Ok(if sign >= 0 { (beta, beta_inv) } else { (beta_inv, beta) })
}

fn require_label<S: Scalar>(point: &CharacterPoint<S>) -> Result<(i64, i64)> {
    point
        .label
        .ok_or_else(|| Error::InvalidCharacter("construction needs the eigenvalue label (a, b)".into()))
}

/// The reducible non-abelian case: `X = diag(α, α⁻¹)`,
/// `Y = [[β^{±1}, 1], [0, β^{∓1}]]`; each `M_i = [[γ, δ], [ε, ζ]]` with
/// `ε = t_yi − β^{±1}γ − β^{∓1}ζ` and `δ = (γζ − 1)/ε` (or `δ = 0` when
/// `ε = 0` and `γζ = 1`). At least one `ε` must be nonzero.
pub fn from_character_case12<S: Scalar>(
    p: i64,
    q: i64,
    sign: i8,
    point: &CharacterPoint<S>,
) -> Result<MatrixTriple<S>> {
    let (a, b) = require_label(point)?;
    let ctx = point.t_x.ctx();
    let (alpha, alpha_inv) = eigen_pair(&point.t_x, p, Some(a))?;
    require_non_central(&alpha, &alpha_inv)?;
    let (bp, bm) = beta_pair::<S>(&ctx, q, b, sign)?;
    let one = S::one(&ctx);
    let zero = S::zero(&ctx);
    let x = Mat::two_by_two(alpha.clone(), zero.clone(), zero.clone(), alpha_inv.clone());
    let y = Mat::two_by_two(bp.clone(), one.clone(), zero.clone(), bm.clone());
    let tol = root_tolerance::<S>();
    let expected_xy = alpha.mul(&bp).add(&alpha_inv.mul(&bm));
    if !point.t_xy.approx_eq(&expected_xy, tol) {
        return Err(Error::InvalidCharacter(format!(
            "t_xy must equal αβ^±1 + α⁻¹β^∓1 = {expected_xy}"
        )));
    }
    let entries = point
        .quads
        .iter()
        .map(|quad| {
            let (gamma, zeta) = diagonal_entries(&alpha, &alpha_inv, quad)?;
            let eps = quad.t_yi.sub(&bp.mul(&gamma)).sub(&bm.mul(&zeta));
            Ok((gamma, zeta, eps))
        })
        .collect::<Result<Vec<_>>>()?;
    if !entries.is_empty() && entries.iter().all(|(_, _, e)| e.negligible(1.0)) {
        return Err(Error::Reducible("irreducibility condition fails for every meridian".into()));
    }
    let mut ms = Vec::new();
    let mut meridians = Vec::new();
    for (i, (gamma, zeta, eps)) in entries.into_iter().enumerate() {
        let gz1 = gamma.mul(&zeta).sub(&one);
        let delta = if eps.negligible(1.0) {
            if !gz1.negligible(1.0) {
                return Err(Error::InvalidCharacter(format!(
                    "quadruple {}: ε = 0 forces γζ = 1",
                    i + 1
                )));
            }
            zero.clone()
        } else {
            gz1.div(&eps)?
        };
        ms.push(Mat::two_by_two(gamma.clone(), delta.clone(), eps.clone(), zeta.clone()));
        meridians.push(MeridianData {
            gamma,
            delta,
            epsilon: eps,
            zeta,
            theta: None,
        });
    }
    Ok(MatrixTriple {
        x,
        y,
        ms,
        s: None,
        u: None,
        v: None,
        meridians,
    })
}

/// The abelian non-central case: `X = diag(α, α⁻¹) ≠ ±I`,
/// `Y = diag(β^{±1}, β^{∓1})`, and `M_i = [[γ, 1], [γζ − 1, ζ]]`.
///
/// Each `t_yi` is determined by the other coordinates and is overwritten
/// in the returned triple; irreducibility needs `t_i ≠ ±2` and
/// `t_xi² − t_xi t_x t_i + t_i² + t_x² − 4 ≠ 0`.
pub fn from_character_case21<S: Scalar>(
    p: i64,
    q: i64,
    sign: i8,
    point: &CharacterPoint<S>,
) -> Result<MatrixTriple<S>> {
    let (a, b) = require_label(point)?;
    let ctx = point.t_x.ctx();
    let (alpha, alpha_inv) = eigen_pair(&point.t_x, p, Some(a))?;
    require_non_central(&alpha, &alpha_inv)?;
    let (bp, bm) = beta_pair::<S>(&ctx, q, b, sign)?;
    let one = S::one(&ctx);
    let zero = S::zero(&ctx);
    let two = S::from_i64(&ctx, 2);
    let four = S::from_i64(&ctx, 4);
    let x = Mat::two_by_two(alpha.clone(), zero.clone(), zero.clone(), alpha_inv.clone());
    let y = Mat::two_by_two(bp, zero.clone(), zero.clone(), bm);
    let mut ms = Vec::new();
    let mut meridians = Vec::new();
    for quad in &point.quads {
        let t1 = &quad.t_i;
        if t1.sub(&two).negligible(1.0) || t1.add(&two).negligible(1.0) {
            return Err(Error::Reducible("condition fails: t_i = ±2".into()));
        }
        let form = quad
            .t_xi
            .mul(&quad.t_xi)
            .sub(&quad.t_xi.mul(&point.t_x).mul(t1))
            .add(&t1.mul(t1))
            .add(&point.t_x.mul(&point.t_x))
            .sub(&four);
        if form.negligible(1.0) {
            return Err(Error::Reducible("condition fails: γζ = 1".into()));
        }
        let (gamma, zeta) = diagonal_entries(&alpha, &alpha_inv, quad)?;
        let eps = gamma.mul(&zeta).sub(&one);
        ms.push(Mat::two_by_two(gamma.clone(), one.clone(), eps.clone(), zeta.clone()));
        meridians.push(MeridianData {
            gamma,
            delta: one.clone(),
            epsilon: eps,
            zeta,
            theta: None,
        });
    }
    Ok(MatrixTriple {
        x,
        y,
        ms,
        s: None,
        u: None,
        v: None,
        meridians,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Complex, Cyclotomic, CyclotomicField, Precision};

    fn c(re: f64, im: f64) -> Complex {
        Complex::from_f64(Precision::default(), re, im)
    }

    fn identity_point() -> CharacterPoint<Complex> {
        let two = c(2.0, 0.0);
        CharacterPoint {
            t_x: two.clone(),
            t_y: two.clone(),
            t_xy: two.clone(),
            quads: vec![TraceQuad {
                t_i: two.clone(),
                t_xi: two.clone(),
                t_yi: two.clone(),
                t_xyi: two,
            }],
            label: None,
            case: CaseTag::Case11,
        }
    }

    #[test]
    fn identity_point_on_variety() {
        let mut p = identity_point();
        assert!(check_trace_quadratic(&p, 0).is_zero());
        p.quads[0].t_xyi = c(3.0, 0.0);
        assert!(!check_trace_quadratic(&p, 0).is_zero());
    }

    #[test]
    fn identity_extraction() {
        let f = Precision::default();
        let i = Mat::<Complex>::identity(2, &f);
        let t = MatrixTriple::from_matrices(i.clone(), i.clone(), vec![i]);
        let p = extract_coordinates(&t);
        assert!(p.t_x.approx_eq(&c(2.0, 0.0), 0.0));
        assert!(p.quads[0].t_xyi.approx_eq(&c(2.0, 0.0), 0.0));
    }

    fn trefoil_like_point() -> CharacterPoint<Complex> {
        // X = diag(i, -i), Y = [[0.3, 1], [u, v]], M random-ish, all SL2.
        let prec = Precision::default();
        let alpha = Complex::root_of_unity(&prec, 4, 1).unwrap();
        let ai = alpha.inv().unwrap();
        let z = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        let x = Mat::two_by_two(alpha, z.clone(), z, ai);
        let s = c(0.3, 0.1);
        let v = c(1.0, 0.0).sub(&s); // t_y = 1
        let u = s.mul(&v).sub(&one);
        let y = Mat::two_by_two(s, one.clone(), u, v);
        let m = Mat::two_by_two(c(1.5, 0.2), c(0.7, -0.4), c(0.3, 0.9), c(0.0, 0.0));
        let d = m.det();
        let m = Mat::two_by_two(
            m.get(0, 0).div(&d).unwrap(),
            m.get(0, 1).div(&d).unwrap(),
            m.get(1, 0).clone(),
            m.get(1, 1).clone(),
        );
        extract_coordinates(&MatrixTriple::from_matrices(x, y, vec![m]))
    }

    #[test]
    fn case11_roundtrip() {
        let point = trefoil_like_point();
        assert!(check_trace_quadratic(&point, 0).magnitude() < 1e-20);
        let t = from_character_case11(2, 3, &point).unwrap();
        let back = extract_coordinates(&t);
        for (a, b) in [
            (&point.t_x, &back.t_x),
            (&point.t_y, &back.t_y),
            (&point.t_xy, &back.t_xy),
            (&point.quads[0].t_i, &back.quads[0].t_i),
            (&point.quads[0].t_xi, &back.quads[0].t_xi),
            (&point.quads[0].t_yi, &back.quads[0].t_yi),
            (&point.quads[0].t_xyi, &back.quads[0].t_xyi),
        ] {
            assert!(a.approx_eq(b, 1e-10), "{a} vs {b}");
        }
        // X^2 = -I for a = 1, p = 2
        let x2 = t.x.pow(2).unwrap();
        assert!(x2.approx_eq(&Mat::scalar(2, c(-1.0, 0.0)), 1e-20));
    }

    #[test]
    fn case11_rejects_off_variety_and_degenerate() {
        let mut point = trefoil_like_point();
        point.quads[0].t_xyi = point.quads[0].t_xyi.add(&c(1.0, 0.0));
        assert_eq!(from_character_case11(2, 3, &point).unwrap_err(), Error::OffVariety { index: 1 });
        // u = 0: t_xy = α β + α⁻¹ β⁻¹
        let mut point = trefoil_like_point();
        let prec = Precision::default();
        let a = Complex::root_of_unity(&prec, 4, 1).unwrap();
        let b = Complex::root_of_unity(&prec, 6, 1).unwrap();
        point.t_xy = a.mul(&b).add(&a.inv().unwrap().mul(&b.inv().unwrap()));
        assert_eq!(from_character_case11(2, 3, &point).unwrap_err(), Error::DegenerateCase12);
    }

    fn exact_point(t_xy: Cyclotomic, quad: [i64; 3], t_xyi: Cyclotomic) -> CharacterPoint<Cyclotomic> {
        let f = CyclotomicField::for_torus(2, 3);
        let q = |n| Cyclotomic::from_i64(&f, n);
        CharacterPoint::labeled(
            &f,
            (2, 3),
            (1, 1),
            t_xy,
            vec![TraceQuad {
                t_i: q(quad[0]),
                t_xi: q(quad[1]),
                t_yi: q(quad[2]),
                t_xyi,
            }],
            CaseTag::Case12,
        )
        .unwrap()
    }

    #[test]
    fn case12_example() {
        let f = CyclotomicField::for_torus(2, 3);
        let a = Cyclotomic::root_of_unity(&f, 4, 1).unwrap();
        let b = Cyclotomic::root_of_unity(&f, 6, 1).unwrap();
        let txy = a.mul(&b).add(&a.inv().unwrap().mul(&b.inv().unwrap()));
        let point = exact_point(txy.clone(), [0, 0, 1], Cyclotomic::from_i64(&f, 0));
        let t = from_character_case12(2, 3, 1, &point).unwrap();
        assert!(t.ms[0].det().is_one());
        assert!(!t.meridians[0].epsilon.is_zero());
        assert_eq!(t.x.mul(&t.y).trace(), txy);
        let back = extract_coordinates(&t);
        assert_eq!(back.quads[0].t_yi, Cyclotomic::from_i64(&f, 1));
        // reducible: t_y1 making ε vanish
        let eps_zero = exact_point(txy, [0, 0, 0], Cyclotomic::from_i64(&f, 0));
        assert!(matches!(
            from_character_case12(2, 3, 1, &eps_zero),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn case21_example() {
        let f = CyclotomicField::for_torus(2, 3);
        let zero = Cyclotomic::from_i64(&f, 0);
        let point = exact_point(zero.clone(), [1, 0, 0], zero.clone());
        let t = from_character_case21(2, 3, 1, &point).unwrap();
        assert!(t.ms[0].det().is_one());
        assert!(!t.meridians[0].epsilon.is_zero());
        let bad = exact_point(zero.clone(), [2, 0, 0], zero);
        assert!(matches!(from_character_case21(2, 3, 1, &bad), Err(Error::Reducible(_))));
    }
}
