//! Find a Schur-test certificate, recheck it by quadrature and print the
//! portable document.

use oplab::conditions::Exponent;
use oplab::hilbert::{balance_gamma, OperatorParams};
use oplab::schur::{find_certificate_with, verify_document, CertificateOptions};

fn main() -> oplab::Result<()> {
    let (p, q) = (Exponent::new(1.5)?, Exponent::new(3.0)?);
    let (a, b, alpha, beta) = (0.2, -0.4, 0.3, 0.1);
    let params = OperatorParams::new(alpha, beta, balance_gamma(p, q, a, b, alpha, beta))?;
    let doc = find_certificate_with(p, q, a, b, &params, &CertificateOptions::default())?;
    let c = &doc.certificate;
    println!("d = {:.6}  t = {:.6}  s = {:.6}  r = {:.6}", c.d, c.t, c.s, c.r);
    println!("M1 = {:.10}  M2 = {:.10}  bound = {:.10}", c.m1, c.m2, c.bound);

    let report = verify_document(&doc, 40, 1e-8)?;
    println!(
        "rechecked at {} points: max residuals {:.1e}, {:.1e}",
        report.samples, report.max_residual_ee1, report.max_residual_ee2
    );

    // the classical kernel with d forced to 1/4 gives 2√π
    let classical = find_certificate_with(
        Exponent::new(2.0)?,
        Exponent::new(2.0)?,
        0.0,
        0.0,
        &OperatorParams::CLASSICAL,
        &CertificateOptions { forced_d: Some(0.25) },
    )?;
    println!(
        "\nclassical, d = 1/4: bound {:.12} (2√π = {:.12})",
        classical.certificate.bound,
        2.0 * std::f64::consts::PI.sqrt()
    );

    println!("\n{}", serde_json::to_string_pretty(&doc)?);
    Ok(())
}
