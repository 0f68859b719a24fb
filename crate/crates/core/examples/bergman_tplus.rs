//! The positive half-plane operator on constants and on a box.

use oplab::bergman::{
    apply_t, apply_tplus, default_probes, tplus_exact_norm, EndpointCase, HalfPlanePoint,
};
use oplab::func::{AsComplex, BoxFunction, One};
use oplab::hilbert::OperatorParams;

fn main() -> oplab::Result<()> {
    let params = OperatorParams::new(1.0, 0.0, 2.0)?;
    let exact = tplus_exact_norm(EndpointCase::Linf, &params, 0.0)?;
    println!("T+ 1 should equal {exact} everywhere:");
    for z in default_probes() {
        println!("  z = {:>5} + {:.1}i: {:.8}", z.x, z.y, apply_tplus(&params, &One, &z, 1e-7)?);
    }

    let f = BoxFunction::standard();
    let classical = OperatorParams::CLASSICAL;
    println!("\nbox [-1/4, 1/4] x [1, 2]:");
    for (x, y) in [(0.0, 1.0), (1.0, 0.5), (-1.0, 2.0)] {
        let z = HalfPlanePoint::new(x, y)?;
        let tp = apply_tplus(&classical, &f, &z, 1e-9)?;
        let t = apply_t(&classical, &AsComplex(f), &z, 1e-9)?;
        println!("  z = {x} + {y}i: T+ f = {tp:.10}, T f = {t:.10}, |T f| <= T+ f: {}", t.norm() <= tp);
    }
    Ok(())
}
