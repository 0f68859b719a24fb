//! Integrals over (0, ∞) with endpoint singularities, jumps and slow decay.

use oplab::quad::{integrate_semiaxis, integrate_truncated, SingularityHints};
use oplab::specfun::beta;

fn main() -> oplab::Result<()> {
    // ∫ t^(m-1) (1+t)^-(m+n) dt = B(m, n); the hints give the endpoint powers
    for (m, n) in [(0.5, 0.5), (0.1, 3.0), (4.0, 0.2)] {
        let hints = SingularityHints::new(m - 1.0, n + 1.0);
        let v: f64 = integrate_semiaxis(|t: f64| t.powf(m - 1.0) * (1.0 + t).powf(-m - n), &hints, 1e-12)?;
        println!("B({m}, {n}): quadrature {v:.15}, closed form {:.15}", beta(m, n)?);
    }

    // a jump, declared as a breakpoint and a support interval
    let hints = SingularityHints::new(0.0, f64::INFINITY)
        .with_breakpoints([3.0])
        .with_support(0.0, 5.0);
    let v: f64 = integrate_semiaxis(|y| if y <= 3.0 { 1.0 } else { 2.0 }, &hints, 1e-12)?;
    println!("step function: {v:.15} (exact 7)");

    // 1/(1+y) is not integrable; the hints say so before any work is done
    let hints = SingularityHints::new(0.0, 1.0);
    match integrate_semiaxis::<f64, _>(|y| 1.0 / (1.0 + y), &hints, 1e-10) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("1/(1+y): {e}"),
    }
    // but its truncation is fine
    let v: f64 = integrate_truncated(|y| Ok(1.0 / (1.0 + y)), &hints, 1e6, 1e-12)?;
    println!("truncated at 1e6: {v:.12} (ln(1+1e6) = {:.12})", (1e6f64).ln_1p());
    Ok(())
}
