//! The weighted Bergman projection fixes holomorphic functions.

use oplab::bergman::{default_probes, projection_constant, reproduction_check};
use oplab::func::ShiftedPower;

fn main() -> oplab::Result<()> {
    let f = ShiftedPower { order: 3.0, t: 1.0 };
    for nu in [0.0, 0.5, 1.0] {
        println!("nu = {nu}, c = {:.10}", projection_constant(nu));
        for pt in reproduction_check(nu, &f, &default_probes()[..4], 1e-8)? {
            println!(
                "  z = {:>4} + {:.1}i: f = {:+.8}{:+.8}i, P f = {:+.8}{:+.8}i, error {:.1e}",
                pt.z.x, pt.z.y, pt.expected_re, pt.expected_im, pt.projected_re, pt.projected_im, pt.error
            );
        }
    }
    Ok(())
}
