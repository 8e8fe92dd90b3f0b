//! Closed forms for torus links checked against the Fox-calculus engine,
//! Reidemeister torsion, and the growth of log 𝕋_n / n.

use twisted_alexander::presentation::{torus_link_presentation, TorusLinkParams};
use twisted_alexander::repn::{symmetric_power, torus_representation};
use twisted_alexander::scalars::{Cyclotomic, Precision};
use twisted_alexander::torus_formulas::{
    closed_form_symn, torsion_closed_form, torsion_growth, torsion_via_evaluation, TorusEigenData,
};
use twisted_alexander::twisted::compare_with_closed_form;

fn main() -> twisted_alexander::Result<()> {
    let params = TorusLinkParams::new(1, 2, 5)?;
    let pres = torus_link_presentation(&params)?;
    for (a, b) in [(1, 1), (1, 3)] {
        let data = TorusEigenData::new(params, a, b, 2)?;
        let rep = torus_representation::<Cyclotomic>(&data.default_field(), &params, a, b)?;
        for n in 1..=4 {
            let data = data.with_n(n)?;
            let formula = closed_form_symn(&data)?;
            let c = compare_with_closed_form(&pres, &symmetric_power(&rep, n)?, &formula, None)?;
            println!("T(2,5) a={a} b={b} n={n}: {formula}  engine agrees: {}", c.equal);
        }
    }

    let t46 = TorusEigenData::new(TorusLinkParams::new(2, 2, 3)?, 1, 1, 2)?;
    let exact = torsion_closed_form(&t46)?;
    println!("T(4,6) torsion: {exact} (via Δ(1): {})", torsion_via_evaluation(&t46)?);

    let trefoil = TorusEigenData::new(TorusLinkParams::new(1, 2, 3)?, 1, 1, 2)?;
    let growth = torsion_growth(&trefoil, 200, Precision::default())?;
    for row in growth.rows.iter().step_by(20) {
        println!("n = {:3}: log𝕋/n = {:.6}  gap {:.6}", row.n, row.log_torsion_over_n, row.gap);
    }
    println!("limit (1/6) log 2 = {:.6}, final gap {:.2e}", growth.limit, growth.final_gap);
    Ok(())
}
