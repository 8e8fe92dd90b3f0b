//! Laurent polynomials, fraction-free determinants, gcd reduction of
//! rational functions and comparison up to units.

use twisted_alexander::laurent::{
    equal_up_to_unit, rational_reduce, LaurentPoly, PolyMatrix, RationalFn, UnitClass,
};
use twisted_alexander::scalars::{Cyclotomic, CyclotomicField, Scalar};

fn poly(f: &CyclotomicField, terms: &[(i64, i64)]) -> LaurentPoly<Cyclotomic> {
    LaurentPoly::from_terms(1, f, terms.iter().map(|&(e, c)| (vec![e], Cyclotomic::from_i64(f, c))))
}

fn main() -> twisted_alexander::Result<()> {
    let f = CyclotomicField::new(12);

    // (t⁶+1)² / ((t⁴−t²+1)(t⁶+1)) reduces to t² + 1
    let num = poly(&f, &[(6, 1), (0, 1)]).pow(2);
    let den = &poly(&f, &[(4, 1), (2, -1), (0, 1)]) * &poly(&f, &[(6, 1), (0, 1)]);
    let r = rational_reduce(&RationalFn::new(num, den)?)?;
    println!("reduced: {}  (polynomial: {})", r.value, r.polynomial);

    let shifted = RationalFn::from_poly(poly(&f, &[(4, -1), (2, -1)]));
    let unit = equal_up_to_unit(&shifted, &r.value, UnitClass::AllMonomials);
    println!("-t⁴ - t² = ({}) · (t² + 1)", unit.unwrap());

    // Two variables: t1²t2² + 1 stays as is; substitution t_i ↦ t
    let t12 = LaurentPoly::from_terms(
        2,
        &f,
        [(vec![2, 2], Cyclotomic::one(&f)), (vec![0, 0], Cyclotomic::one(&f))],
    );
    println!("{t12}  ↦  {}", t12.substitute_product());
    println!("in t = t1·t2: {}", t12.in_product_variable().unwrap());

    // Bareiss determinant of a Vandermonde matrix in t, t², t³
    let mut m = PolyMatrix::zeros(3, 3, 1, &f);
    for i in 0..3 {
        for j in 0..3 {
            m.set(i, j, poly(&f, &[((i as i64 + 1) * j as i64, 1)]));
        }
    }
    println!("det =\n{}", m.determinant()?);
    Ok(())
}
