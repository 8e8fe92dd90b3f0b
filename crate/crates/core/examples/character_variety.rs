//! Trace coordinates of SL(2) representations of a torus link group:
//! extraction from matrices, the trace quadratic, and reconstruction.

use twisted_alexander::presentation::TorusLinkParams;
use twisted_alexander::repn::{
    check_trace_quadratic, extract_coordinates, from_character_case11, sample_interior_point,
};
use twisted_alexander::scalars::{Precision, Scalar};

fn main() -> twisted_alexander::Result<()> {
    let params = TorusLinkParams::new(2, 2, 3)?;
    let prec = Precision::default();
    let sample = sample_interior_point(&params, 1, 1, prec, 42, 0)?;
    let pt = &sample.point;
    println!("t_x = {}\nt_y = {}\nt_xy = {}", pt.t_x, pt.t_y, pt.t_xy);
    for (i, q) in pt.quads.iter().enumerate() {
        println!(
            "meridian {}: t = {}, t_x = {}, t_y = {}, t_xy = {}",
            i + 1,
            q.t_i,
            q.t_xi,
            q.t_yi,
            q.t_xyi
        );
        println!("  trace quadratic residual: {:e}", check_trace_quadratic(pt, i).magnitude());
    }
    println!("reducibility form: {}", pt.reducibility_form());

    // rebuild matrices from the traces and read the traces back
    let rebuilt = from_character_case11(params.p, params.q, pt)?;
    let again = extract_coordinates(&rebuilt);
    let drift = again.quads[0].t_xyi.sub(&pt.quads[0].t_xyi).magnitude();
    println!("X = {}\nY = {}\nM_1 = {}", rebuilt.x, rebuilt.y, rebuilt.ms[0]);
    println!("roundtrip drift in t_xy1: {drift:e}");
    Ok(())
}
