//! Exact arithmetic in cyclotomic fields next to the arbitrary-precision
//! complex backend.

use twisted_alexander::scalars::{solve_quadratic, Complex, Cyclotomic, CyclotomicField, Precision, Scalar};

fn main() -> twisted_alexander::Result<()> {
    // Q(ζ_12) holds every eigenvalue needed for the trefoil
    let field = CyclotomicField::for_torus(2, 3);
    println!("Q(ζ_{}) has degree {}", field.order(), field.degree());

    let alpha = Cyclotomic::root_of_unity(&field, 4, 1)?; // e^{iπ/2}
    let beta = Cyclotomic::root_of_unity(&field, 6, 1)?; // e^{iπ/3}
    println!("α = {alpha}, α² = {}", alpha.pow(2)?);
    println!("β + β⁻¹ = {}", beta.add(&beta.inv().unwrap()));
    println!("2cos(π/6) = {}", Cyclotomic::two_cos(&field, 12, 1)?);
    println!("√3 squared = {}", Cyclotomic::two_cos(&field, 12, 1)?.pow(2)?);

    // Z² − (α + α⁻¹)Z + 1 has roots α, α⁻¹; exact square roots exist here
    let t = alpha.add(&alpha.inv().unwrap());
    let (z1, z2) = solve_quadratic(&t.neg(), &Cyclotomic::one(&field))?;
    println!("roots of Z² − {t}Z + 1: {z1}, {z2}");

    let prec = Precision(256);
    let z = Complex::from_f64(prec, 0.5, -1.25);
    let w = z.mul(&z.inv().unwrap());
    println!("z·z⁻¹ at 256 bits = {w} (|w − 1| = {:e})", w.sub(&Complex::one(&prec)).magnitude());
    println!("ζ_12 embedded: {}", Cyclotomic::root_of_unity(&field, 12, 1)?.to_complex(prec));
    Ok(())
}
