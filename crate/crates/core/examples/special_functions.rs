//! Gamma and Beta values, with the identities they satisfy.

use std::f64::consts::PI;

use oplab::specfun::{beta, ln_beta, log_gamma};

fn main() -> oplab::Result<()> {
    println!("{:>8} {:>22} {:>22}", "x", "ln Γ(x)", "ln Γ(x+1) - ln x");
    for x in [1e-6, 0.5, 1.0, 2.5, 10.0, 1e3, 1e6] {
        println!("{x:>8e} {:>22.15e} {:>22.15e}", log_gamma(x)?, log_gamma(x + 1.0)? - x.ln());
    }

    // Γ(1/2)² = π
    println!("\nexp(2 ln Γ(1/2)) = {:.16}, π = {PI:.16}", (2.0 * log_gamma(0.5)?).exp());

    // B(s, 1-s) = π / sin(πs)
    for s in [0.1, 0.25, 0.5, 0.75] {
        println!("B({s}, {}) = {:.15}  π/sin(πs) = {:.15}", 1.0 - s, beta(s, 1.0 - s)?, PI / (PI * s).sin());
    }

    // large arguments stay finite in log form
    println!("\nln B(400, 500) = {:.12}", ln_beta(400.0, 500.0)?);
    Ok(())
}
