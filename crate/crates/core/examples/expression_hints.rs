//! Parse test functions and see what the integrators are told about them.

use oplab::func::Func1D;
use oplab::funcdsl::{ExprFunc1D, ExprFunc2D};
use oplab::func::Func2D;

fn main() -> oplab::Result<()> {
    for src in [
        "x^-0.75 * ind(x, 1, inf)",
        "exp(-x) * x^-0.5",
        "abs(log(x)) * ind(x, 0.25, 4)",
        "(1 + x)^-2 + 3 * ind(x, 2, 5)",
    ] {
        let f = ExprFunc1D::parse(src)?;
        let h = f.hints();
        println!("{src}");
        println!("  printed back: {}", f.expr());
        println!(
            "  |f| ~ x^{} near 0, x^-{} near inf, breaks {:?}, support {:?}",
            h.left_exponent, h.decay_exponent, h.breakpoints, h.support
        );
        println!("  f(0.5) = {}, f(3) = {}", f.eval(0.5)?, f.eval(3.0)?);
    }

    let g = ExprFunc2D::parse("ind(x, -1, 1) * y * exp(-y)")?;
    let h = g.hints();
    println!("\nhalf-plane: u support {:?}, v hints {:?}", h.u_support, h.v);

    match ExprFunc1D::parse("x^ * 2") {
        Ok(_) => println!("unexpected parse"),
        Err(e) => println!("\nsyntax error: {e}"),
    }
    Ok(())
}
