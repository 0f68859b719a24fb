//! Evaluable test functions on the half-line and on the upper half-plane.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::Result;
use crate::quad::{LineHints, SingularityHints};

/// A function on `(0, ∞)` that knows its own quadrature hints.
///
/// The hints describe `|f|`: `left_exponent` is `σ` with `|f(x)| ~ x^σ` as
/// `x -> 0+` and `decay_exponent` is `τ` with `|f(x)| ~ x^-τ` as `x -> ∞`.
pub trait Func1D: Send + Sync {
    fn eval(&self, x: f64) -> Result<f64>;
    fn hints(&self) -> SingularityHints;
}

impl<F: Func1D + ?Sized> Func1D for &F {
    fn eval(&self, x: f64) -> Result<f64> {
        (**self).eval(x)
    }
    fn hints(&self) -> SingularityHints {
        (**self).hints()
    }
}

impl<F: Func1D + ?Sized> Func1D for Box<F> {
    fn eval(&self, x: f64) -> Result<f64> {
        (**self).eval(x)
    }
    fn hints(&self) -> SingularityHints {
        (**self).hints()
    }
}

impl<F: Func1D + ?Sized> Func1D for Arc<F> {
    fn eval(&self, x: f64) -> Result<f64> {
        (**self).eval(x)
    }
    fn hints(&self) -> SingularityHints {
        (**self).hints()
    }
}

/// A closure together with hand-written hints.
pub struct FnFunc1D<F> {
    f: F,
    hints: SingularityHints,
}

pub fn func1d<F>(f: F, hints: SingularityHints) -> FnFunc1D<F>
where
    F: Fn(f64) -> f64 + Send + Sync,
{
    FnFunc1D { f, hints }
}

impl<F: Fn(f64) -> f64 + Send + Sync> Func1D for FnFunc1D<F> {
    fn eval(&self, x: f64) -> Result<f64> {
        Ok((self.f)(x))
    }
    fn hints(&self) -> SingularityHints {
        self.hints.clone()
    }
}

/// Indicator of the closed interval `[lo, hi]` (`hi` may be infinite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Indicator {
    pub lo: f64,
    pub hi: f64,
}

impl Func1D for Indicator {
    fn eval(&self, x: f64) -> Result<f64> {
        Ok(if x >= self.lo && x <= self.hi { 1.0 } else { 0.0 })
    }
    fn hints(&self) -> SingularityHints {
        let decay = if self.hi.is_finite() { f64::INFINITY } else { 0.0 };
        let left = if self.lo > 0.0 { f64::INFINITY } else { 0.0 };
        SingularityHints::new(left, decay)
            .with_breakpoints([self.lo, self.hi])
            .with_support(self.lo, self.hi)
    }
}

/// `x^-exponent` on `[1, ∞)`, zero on `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedPower {
    pub exponent: f64,
}

impl Func1D for TruncatedPower {
    fn eval(&self, x: f64) -> Result<f64> {
        Ok(if x >= 1.0 { x.powf(-self.exponent) } else { 0.0 })
    }
    fn hints(&self) -> SingularityHints {
        SingularityHints::new(f64::INFINITY, self.exponent)
            .with_breakpoints([1.0])
            .with_support(1.0, f64::INFINITY)
    }
}

/// `x -> f(R x)`.
#[derive(Debug, Clone, Copy)]
pub struct Dilated<F> {
    pub inner: F,
    pub r: f64,
}

impl<F: Func1D> Func1D for Dilated<F> {
    fn eval(&self, x: f64) -> Result<f64> {
        self.inner.eval(self.r * x)
    }
    fn hints(&self) -> SingularityHints {
        self.inner.hints().dilated(self.r)
    }
}

// ---------------------------------------------------------------------------

/// Quadrature hints for a function of `w = u + iv` on the upper half-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Hints2D {
    /// Jumps in the `u` direction.
    pub u_breakpoints: Vec<f64>,
    /// The function vanishes for `u` outside this interval.
    pub u_support: Option<(f64, f64)>,
    /// `|f(u, v)| ~ |u|^-u_decay` as `|u| -> ∞`, when known.
    pub u_decay: Option<f64>,
    /// A peak at `u = center` of width `v + offset`, as for `|w + i offset|^-m`.
    pub u_peak: Option<(f64, f64)>,
    /// Behaviour in `v` (breakpoints, support, endpoint exponents).
    pub v: SingularityHints,
}

impl Hints2D {
    /// Line hints for the slice at height `v`.
    pub fn line(&self, v: f64) -> LineHints {
        let (centers, widths) = match (self.u_peak, self.u_support) {
            (Some((c, off)), _) => (vec![c], vec![v + off]),
            // functions of |w| have features of width v
            (None, None) => (vec![0.0], vec![v]),
            (None, Some(_)) => (Vec::new(), Vec::new()),
        };
        LineHints {
            breakpoints: self.u_breakpoints.clone(),
            centers,
            widths,
            decay_exponent: self.u_decay,
            support: self.u_support,
        }
    }

    /// Hints for `(u, v) -> f(R u, R v)`.
    pub fn dilated(&self, r: f64) -> Self {
        Hints2D {
            u_breakpoints: self.u_breakpoints.iter().map(|b| b / r).collect(),
            u_support: self.u_support.map(|(a, b)| (a / r, b / r)),
            u_decay: self.u_decay,
            u_peak: self.u_peak.map(|(c, off)| (c / r, off / r)),
            v: self.v.dilated(r),
        }
    }
}

/// A real function on the upper half-plane.
pub trait Func2D: Send + Sync {
    fn eval(&self, u: f64, v: f64) -> Result<f64>;
    fn hints(&self) -> Hints2D;
}

/// A complex function on the upper half-plane.
pub trait ComplexFunc2D: Send + Sync {
    fn eval_complex(&self, u: f64, v: f64) -> Result<Complex64>;
    fn hints_2d(&self) -> Hints2D;
}

impl<F: Func2D + ?Sized> Func2D for &F {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        (**self).eval(u, v)
    }
    fn hints(&self) -> Hints2D {
        (**self).hints()
    }
}

impl<F: Func2D + ?Sized> Func2D for Box<F> {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        (**self).eval(u, v)
    }
    fn hints(&self) -> Hints2D {
        (**self).hints()
    }
}

/// Real functions viewed as complex ones.
pub struct AsComplex<F>(pub F);

impl<F: Func2D> ComplexFunc2D for AsComplex<F> {
    fn eval_complex(&self, u: f64, v: f64) -> Result<Complex64> {
        Ok(Complex64::new(self.0.eval(u, v)?, 0.0))
    }
    fn hints_2d(&self) -> Hints2D {
        self.0.hints()
    }
}

/// `χ_[u0,u1](u) · χ_[v0,v1](v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxFunction {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl BoxFunction {
    /// The box `[-1/4, 1/4] × [1, 2]` used in the necessity arguments.
    pub fn standard() -> Self {
        BoxFunction {
            u0: -0.25,
            u1: 0.25,
            v0: 1.0,
            v1: 2.0,
        }
    }
}

impl Func2D for BoxFunction {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        let inside = u >= self.u0 && u <= self.u1 && v >= self.v0 && v <= self.v1;
        Ok(if inside { 1.0 } else { 0.0 })
    }
    fn hints(&self) -> Hints2D {
        Hints2D {
            u_breakpoints: vec![self.u0, self.u1],
            u_support: Some((self.u0, self.u1)),
            u_decay: None,
            u_peak: None,
            v: SingularityHints::new(f64::INFINITY, f64::INFINITY)
                .with_breakpoints([self.v0, self.v1])
                .with_support(self.v0, self.v1),
        }
    }
}

/// The constant function 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct One;

impl Func2D for One {
    fn eval(&self, _u: f64, _v: f64) -> Result<f64> {
        Ok(1.0)
    }
    fn hints(&self) -> Hints2D {
        Hints2D {
            u_breakpoints: Vec::new(),
            u_support: None,
            u_decay: Some(0.0),
            u_peak: None,
            v: SingularityHints::new(0.0, 0.0),
        }
    }
}

/// `((w + i t) / i)^-order`, holomorphic on the upper half-plane.
///
/// With `t = 1` this is `(i / (w + i))^order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedPower {
    pub order: f64,
    pub t: f64,
}

impl ShiftedPower {
    pub fn value(&self, u: f64, v: f64) -> Complex64 {
        let w = Complex64::new(u, v + self.t) / Complex64::i();
        w.powf(-self.order)
    }
}

impl ComplexFunc2D for ShiftedPower {
    fn eval_complex(&self, u: f64, v: f64) -> Result<Complex64> {
        Ok(self.value(u, v))
    }
    fn hints_2d(&self) -> Hints2D {
        Hints2D {
            u_breakpoints: Vec::new(),
            u_support: None,
            u_decay: Some(self.order),
            u_peak: Some((0.0, self.t)),
            v: SingularityHints::new(0.0, self.order).with_scales([self.t]),
        }
    }
}

/// `|f|` of a complex function, as a real function.
pub struct Modulus<F>(pub F);

impl<F: ComplexFunc2D> Func2D for Modulus<F> {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        Ok(self.0.eval_complex(u, v)?.norm())
    }
    fn hints(&self) -> Hints2D {
        self.0.hints_2d()
    }
}

/// `(u, v) -> f(R u, R v)`.
#[derive(Debug, Clone, Copy)]
pub struct Dilated2D<F> {
    pub inner: F,
    pub r: f64,
}

impl<F: Func2D> Func2D for Dilated2D<F> {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        self.inner.eval(self.r * u, self.r * v)
    }
    fn hints(&self) -> Hints2D {
        self.inner.hints().dilated(self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_power_at_i() {
        let f = ShiftedPower { order: 3.0, t: 1.0 };
        let v = f.value(0.0, 1.0);
        assert!((v - Complex64::new(0.125, 0.0)).norm() < 1e-15);
        // (i/(w+i))^3 at w = 1 + i
        let w = Complex64::new(1.0, 1.0);
        let direct = (Complex64::i() / (w + Complex64::i())).powi(3);
        assert!((f.value(1.0, 1.0) - direct).norm() < 1e-14);
    }

    #[test]
    fn dilated_hints_move_breakpoints() {
        let d = Dilated {
            inner: Indicator { lo: 1.0, hi: 2.0 },
            r: 2.0,
        };
        assert_eq!(d.hints().breakpoints, vec![0.5, 1.0]);
        assert_eq!(d.eval(0.75).unwrap(), 1.0);
        assert_eq!(d.eval(1.25).unwrap(), 0.0);
    }
}
