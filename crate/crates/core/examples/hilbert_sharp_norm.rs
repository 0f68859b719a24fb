//! Boundedness verdict, sharp norm and the extremal family approaching it.

use oplab::conditions::Exponent;
use oplab::hilbert::{extremal_quotient, hilbert_verdict, sharp_norm, OperatorParams, WeightedSpaceSpec};

fn main() -> oplab::Result<()> {
    let params = OperatorParams::new(0.3, 0.2, 1.5)?;
    let (p, a) = (3.0, 0.4);
    let pe = Exponent::new(p)?;
    let report = hilbert_verdict(pe, pe, a, a, &params)?;
    println!("verdict {:?} via {}", report.verdict, report.clause);
    for r in &report.relations {
        println!("  {}: residual {:e}", r.expression, r.residual);
    }
    for i in &report.inequalities {
        println!("  {}: {} vs {} -> {}", i.expression, i.lhs, i.rhs, i.holds);
    }

    let space = WeightedSpaceSpec::lp(p, a)?;
    let sharp = sharp_norm(&space, &params)?;
    println!("\nsharp norm {sharp:.12}");
    println!("{:>8} {:>14} {:>14}", "xi", "quotient", "lower bound");
    for xi in [0.5, 0.1, 0.01, 0.001] {
        let r = extremal_quotient(&space, &params, xi, 1e-10)?;
        println!("{xi:>8} {:>14.10} {:>14.10}", r.quotient, r.lower_bound);
    }
    Ok(())
}
