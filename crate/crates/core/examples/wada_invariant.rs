//! The twisted Alexander polynomial of the trefoil and of T(4,6) from Fox
//! calculus, including the symmetric-power lift.

use twisted_alexander::presentation::{torus_link_presentation, TorusLinkParams};
use twisted_alexander::repn::{symmetric_power, torus_representation};
use twisted_alexander::scalars::{Cyclotomic, CyclotomicField};
use twisted_alexander::twisted::{alexander_matrix, wada_invariant};

fn main() -> twisted_alexander::Result<()> {
    for (mu, p, q) in [(1, 2, 3), (2, 2, 3)] {
        let params = TorusLinkParams::new(mu, p, q)?;
        let pres = torus_link_presentation(&params)?;
        let field = CyclotomicField::for_torus(p as u64, q as u64);
        let rep = torus_representation::<Cyclotomic>(&field, &params, 1, 1)?;
        let a = alexander_matrix(&pres, &rep)?;
        println!("T({},{}) Alexander matrix is {}x{}", mu * p as usize, mu * q as usize, a.rows(), a.cols());
        for n in 2..=4 {
            let w = wada_invariant(&pres, &symmetric_power(&rep, n)?, None)?;
            println!("  n = {n}: Δ = {}", w.reduced);
            if let Some(t) = &w.reduced_in_product {
                println!("         in t = t1⋯tμ: {t}");
            }
        }
    }
    Ok(())
}
