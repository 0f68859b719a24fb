//! Off the balance relation, ‖H f_R‖/‖f_R‖ moves like a power of R, so no
//! bound can hold. On it, the ratio is flat.

use oplab::conditions::Exponent;
use oplab::func::Indicator;
use oplab::hilbert::{dilation_residual, geometric_grid, growth_exponent, GrowthOptions, OperatorParams};

fn main() -> oplab::Result<()> {
    let f = Indicator { lo: 1.0, hi: 2.0 };
    let two = Exponent::new(2.0)?;
    let grid = geometric_grid(0.25, 4.0, 5);
    // γ = 1/2 makes ‖H f‖₂ infinite, so the norm is taken over (0, 1e100]
    let opts = GrowthOptions {
        cutoff: Some(1e100),
        tol: 1e-8,
    };
    for gamma in [0.5, 1.0, 2.0] {
        let params = OperatorParams::new(0.0, 0.0, gamma)?;
        let rep = growth_exponent(two, two, 0.0, 0.0, &params, &f, &grid, &opts)?;
        println!(
            "gamma = {gamma}: fitted slope {:+.4}, dilation identity {:+.4}",
            rep.slope, rep.dilation_slope
        );
        let res = dilation_residual(&params, &f, 3.0, &[0.5, 1.0, 4.0], 1e-11)?;
        println!("  H f_3 vs 3^(γ-1) (H f)(3x): residual {res:.1e}");
    }
    Ok(())
}
