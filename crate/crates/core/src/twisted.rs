//! Wada's twisted Alexander invariant `det A_j / det Φ(x_j − 1)` of a
//! presented group with a representation.

use crate::error::{Error, Result};
use crate::fox::fox_derivative;
use crate::laurent::{
    default_tolerance, equal_up_to_unit_tol, rational_reduce, LaurentPoly, PolyMatrix, RationalFn, Unit,
    UnitClass,
};
use crate::presentation::{GroupRingElement, Presentation, Word};
use crate::repn::{PhiMap, Representation};
use crate::scalars::Scalar;

/// Relative size below which every coefficient of the denominator counts as
/// zero on inexact backends.
pub const ZERO_DENOMINATOR_TOLERANCE: f64 = 1e-12;

/// The invariant together with its reduced forms.
#[derive(Clone, Debug)]
pub struct WadaInvariant<S: Scalar> {
    /// `det A_j / det Φ(x_j − 1)` exactly as computed.
    pub value: RationalFn<S>,
    /// `value` after gcd reduction (unchanged if it needs a multivariate gcd).
    pub reduced: RationalFn<S>,
    /// `reduced` with every `t_i` replaced by `t`, then reduced again.
    pub reduced_in_t: RationalFn<S>,
    /// `reduced` rewritten in `t = t_1 ⋯ t_μ`, when every monomial is a
    /// power of that product (always the case for torus links).
    pub reduced_in_product: Option<RationalFn<S>>,
    pub removed_column: usize,
    /// Whether `reduced_in_t` has denominator 1.
    pub polynomial_flag: bool,
    pub backend: &'static str,
}

/// The `n(r) × n(l)` block matrix whose `(i, j)` block is `Φ(∂r_i/∂x_j)`.
pub fn alexander_matrix<S: Scalar>(pres: &Presentation, rep: &Representation<S>) -> Result<PolyMatrix<S>> {
    rep.validate(pres)?;
    let l = pres.num_generators();
    let n = rep.dim();
    let mu = pres.num_link_components();
    if pres.relators().is_empty() {
        return Ok(PolyMatrix::zeros(0, n * l, mu, rep.ctx()));
    }
    let mut phi = PhiMap::new(rep, pres)?;
    let mut blocks = Vec::with_capacity(pres.relators().len());
    for r in pres.relators() {
        let row = (0..l)
            .map(|j| phi.apply(&fox_derivative(r, j, l)?))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(row);
    }
    PolyMatrix::from_blocks(&blocks)
}

fn is_zero_relative<S: Scalar>(den: &LaurentPoly<S>, reference: f64) -> bool {
    if S::EXACT {
        return den.is_zero();
    }
    den.max_magnitude() <= ZERO_DENOMINATOR_TOLERANCE * reference.max(1.0)
}

/// Computes the invariant with generator `column` removed (default: the
/// last generator, which is `y` for the torus presentations).
pub fn wada_invariant<S: Scalar>(
    pres: &Presentation,
    rep: &Representation<S>,
    column: Option<usize>,
) -> Result<WadaInvariant<S>> {
    let l = pres.num_generators();
    let n = rep.dim();
    let j = column.unwrap_or(l.saturating_sub(1));
    if j >= l {
        return Err(Error::GeneratorOutOfRange { index: j, len: l });
    }
    let a = alexander_matrix(pres, rep)?;
    let mut phi = PhiMap::new(rep, pres)?;
    let xj_minus_1 = GroupRingElement::from_terms([(Word::generator(j), 1), (Word::empty(), -1)]);
    let den_matrix = phi.apply(&xj_minus_1)?;
    let den = den_matrix.determinant()?.chop();
    // Scale of det Φ(x_j − 1) if nothing cancelled: (1 + |ρ(x_j)|)^n.
    let reference = (1.0 + rep.image(j).max_magnitude()).powi(n as i32);
    if is_zero_relative(&den, reference) {
        return Err(Error::ZeroDenominator(j));
    }
    let num = a.remove_columns(j * n, n)?.determinant()?.chop();
    let value = RationalFn::new(num, den)?;
    let reduced = rational_reduce(&value)?.value;
    let in_t = rational_reduce(&reduced.substitute_product())?;
    let reduced_in_product = match reduced.in_product_variable().or_else(|| value.in_product_variable()) {
        Some(f) => Some(rational_reduce(&f)?.value),
        None => None,
    };
    Ok(WadaInvariant {
        reduced_in_product,
        value,
        reduced,
        reduced_in_t: in_t.value,
        removed_column: j,
        polynomial_flag: in_t.polynomial,
        backend: S::BACKEND,
    })
}

/// Outcome of comparing the engine against a single-variable formula.
#[derive(Clone, Debug)]
pub struct Comparison<S: Scalar> {
    pub equal: bool,
    pub witness: Option<Unit>,
    pub engine: WadaInvariant<S>,
    /// The formula, reduced, in `t = t_1 ⋯ t_μ`.
    pub formula_reduced: RationalFn<S>,
    /// The formula after `t ↦ t^μ`, which is what `t_i ↦ t` turns
    /// `t_1 ⋯ t_μ` into; this is the side compared with the engine.
    pub formula_in_t: RationalFn<S>,
}

impl<S: Scalar> Comparison<S> {
    /// Human-readable summary of both sides and the unit relating them.
    pub fn diagnostic(&self) -> String {
        let w = match &self.witness {
            Some(u) => format!("engine = {u} · formula"),
            None => "no monomial unit relates them".to_string(),
        };
        format!(
            "engine: {}\nformula: {}\n{}",
            self.engine.reduced_in_t, self.formula_in_t, w
        )
    }
}

/// Substitutes `t_i ↦ t` into the engine output and checks that it equals
/// `formula` up to a signed monomial.
///
/// `formula` is written in the product variable `t_1 ⋯ t_μ`, the usual
/// convention for closed forms of links, so it is compared after `t ↦ t^μ`.
pub fn compare_with_closed_form<S: Scalar>(
    pres: &Presentation,
    rep: &Representation<S>,
    formula: &RationalFn<S>,
    column: Option<usize>,
) -> Result<Comparison<S>> {
    compare_with_closed_form_tol(pres, rep, formula, column, default_tolerance::<S>())
}

pub fn compare_with_closed_form_tol<S: Scalar>(
    pres: &Presentation,
    rep: &Representation<S>,
    formula: &RationalFn<S>,
    column: Option<usize>,
    tol: f64,
) -> Result<Comparison<S>> {
    if formula.nvars() != 1 {
        return Err(Error::VariableMismatch(formula.nvars(), 1));
    }
    let engine = wada_invariant(pres, rep, column)?;
    let formula_reduced = rational_reduce(formula)?.value;
    let mu = pres.num_link_components() as i64;
    let formula_in_t = rational_reduce(&formula_reduced.inflate(mu)?)?.value;
    let witness = equal_up_to_unit_tol(&engine.reduced_in_t, &formula_in_t, UnitClass::AllMonomials, tol);
    Ok(Comparison {
        equal: witness.is_some(),
        witness,
        engine,
        formula_reduced,
        formula_in_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_presentation, torus_link_presentation, TorusLinkParams};
    use crate::repn::{torus_representation, Mat};
    use crate::scalars::{Cyclotomic, CyclotomicField};

    fn torus(mu: usize, p: i64, q: i64, a: i64, b: i64) -> (Presentation, Representation<Cyclotomic>) {
        let params = TorusLinkParams::new(mu, p, q).unwrap();
        let f = CyclotomicField::for_torus(p as u64, q as u64);
        (
            torus_link_presentation(&params).unwrap(),
            torus_representation(&f, &params, a, b).unwrap(),
        )
    }

    fn t_poly(f: &CyclotomicField, coeffs: &[(i64, i64)]) -> LaurentPoly<Cyclotomic> {
        LaurentPoly::from_terms(1, f, coeffs.iter().map(|(e, c)| (vec![*e], Cyclotomic::from_i64(f, *c))))
    }

    #[test]
    fn trefoil_reduces_to_t2_plus_1() {
        let (pres, rep) = torus(1, 2, 3, 1, 1);
        let w = wada_invariant(&pres, &rep, None).unwrap();
        assert_eq!(w.removed_column, 1);
        assert!(w.polynomial_flag);
        let f = rep.ctx().clone();
        let expect = RationalFn::from_poly(t_poly(&f, &[(2, 1), (0, 1)]));
        assert!(equal_up_to_unit_tol(&w.reduced_in_t, &expect, UnitClass::EvenMonomials, 0.0).is_some());
    }

    #[test]
    fn trefoil_first_block_row() {
        // the (1,1) block of row r_μ is Φ(1 + x) = I + t³X
        let (pres, rep) = torus(1, 2, 3, 1, 1);
        let a = alexander_matrix(&pres, &rep).unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 4));
        let f = rep.ctx().clone();
        let x = rep.image(0);
        let entry = |i: usize| {
            let c = x.get(i, i).clone();
            LaurentPoly::from_terms(1, &f, [(vec![0], Cyclotomic::one(&f)), (vec![3], c)])
        };
        assert_eq!(a.get(0, 0), &entry(0));
        assert_eq!(a.get(1, 1), &entry(1));
    }

    #[test]
    fn t46_first_block() {
        // block (1,1) = Φ(x²) − I = t⁶X² − I
        let (pres, rep) = torus(2, 2, 3, 1, 1);
        let a = alexander_matrix(&pres, &rep).unwrap();
        let f = rep.ctx().clone();
        let x2 = rep.image(1).pow(2).unwrap();
        for i in 0..2 {
            let expect = LaurentPoly::from_terms(
                2,
                &f,
                [(vec![6, 6], x2.get(i, i).clone()), (vec![0, 0], Cyclotomic::from_i64(&f, -1))],
            );
            assert_eq!(a.get(i, i), &expect);
        }
    }

    #[test]
    fn t24_multivariate_value() {
        let (pres, rep) = torus(2, 1, 2, 1, 1);
        let w = wada_invariant(&pres, &rep, None).unwrap();
        let f = rep.ctx().clone();
        let expect = LaurentPoly::from_terms(
            2,
            &f,
            [(vec![2, 2], Cyclotomic::one(&f)), (vec![0, 0], Cyclotomic::one(&f))],
        );
        let expect = RationalFn::from_poly(expect);
        assert!(
            equal_up_to_unit_tol(&w.reduced, &expect, UnitClass::EvenMonomials, 0.0).is_some(),
            "got {}",
            w.reduced
        );
        // t = t1 t2 gives t^2 + 1; t_i ↦ t gives t^4 + 1
        let in_prod = w.reduced_in_product.unwrap();
        assert_eq!(in_prod.num, t_poly(&f, &[(2, 1), (0, 1)]));
        assert_eq!(w.reduced_in_t.num, t_poly(&f, &[(4, 1), (0, 1)]));
        let formula = RationalFn::from_poly(t_poly(&f, &[(2, 1), (0, 1)]));
        assert!(compare_with_closed_form(&pres, &rep, &formula, None).unwrap().equal);
    }

    #[test]
    fn column_independence_and_bad_formula() {
        let (pres, rep) = torus(2, 2, 3, 1, 1);
        let wy = wada_invariant(&pres, &rep, None).unwrap();
        let wx = wada_invariant(&pres, &rep, Some(1)).unwrap();
        assert!(equal_up_to_unit_tol(&wx.reduced, &wy.reduced, UnitClass::AllMonomials, 0.0).is_some());
        let f = rep.ctx().clone();
        let wrong = RationalFn::from_poly(t_poly(&f, &[(2, 1), (0, -1)]));
        let c = compare_with_closed_form(&pres, &rep, &wrong, None).unwrap();
        assert!(!c.equal);
        assert!(c.diagnostic().contains("no monomial unit"));
    }

    #[test]
    fn unknot_without_relators() {
        let pres = parse_presentation("gens: x\nmu: 1\nabel: x=(1)\nrels:").unwrap();
        let f = CyclotomicField::new(1);
        let rep = Representation::new(&pres, vec![Mat::<Cyclotomic>::identity(2, &f)]).unwrap();
        let a = alexander_matrix(&pres, &rep).unwrap();
        assert_eq!((a.rows(), a.cols()), (0, 2));
        // det of the empty matrix over (t − 1)^2
        let w = wada_invariant(&pres, &rep, None).unwrap();
        assert!(!w.polynomial_flag);
    }

    #[test]
    fn zero_denominator_is_reported() {
        // ρ(x) = I with zero abelianization makes Φ(x − 1) = 0
        let pres = parse_presentation("gens: x y\nmu: 1\nabel: x=(0) y=(1)\nrels: x").unwrap();
        let f = CyclotomicField::new(1);
        let i = Mat::<Cyclotomic>::identity(2, &f);
        let rep = Representation::new(&pres, vec![i.clone(), i]).unwrap();
        assert_eq!(wada_invariant(&pres, &rep, Some(0)).unwrap_err(), Error::ZeroDenominator(0));
    }
}
