//! Operators on the upper half-plane: mixed norms, the positive and complex
//! kernel operators `T⁺` and `T`, the weighted Bergman projection, and their
//! boundedness criteria.
//!
//! Points are `z = x + iy` and `w = u + iv` with `y, v > 0`, so
//! `z - w̄ = (x - u) + i(y + v)` always lies in the upper half-plane and the
//! principal branch of its powers is smooth on the whole domain.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::conditions::{ConditionReport, Exponent, Inequality, RelationCheck, Verdict, RELATION_EPS};
use crate::error::{Endpoint, Error, Result};
use crate::func::{ComplexFunc2D, Func1D, Func2D, Hints2D};
use crate::hilbert::{apply_h, scan_sup, OperatorParams, SupOptions};
use crate::quad::{integrate_halfplane, integrate_line, try_integrate_semiaxis, LineHints, QuadValue, SingularityHints};
use crate::specfun::beta;

/// `z = x + iy` with `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlanePoint {
    pub x: f64,
    pub y: f64,
}

impl HalfPlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && y > 0.0) {
            return Err(Error::domain(format!("{x} + {y}i is not in the upper half-plane")));
        }
        Ok(HalfPlanePoint { x, y })
    }

    pub fn i() -> Self {
        HalfPlanePoint { x: 0.0, y: 1.0 }
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Default probe grid `{1/2, 1, 2} × {-1, 0, 1}` (y × x), y-major.
pub fn default_probes() -> Vec<HalfPlanePoint> {
    let mut out = Vec::with_capacity(9);
    for y in [0.5, 1.0, 2.0] {
        for x in [-1.0, 0.0, 1.0] {
            out.push(HalfPlanePoint { x, y });
        }
    }
    out
}

/// The space `L^{p,q}_ν`: `L^p` in `x`, then `L^q(y^ν dy)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedNormSpec {
    pub p: Exponent,
    pub q: Exponent,
    /// Absent for `q = ∞`.
    pub nu: Option<f64>,
}

impl MixedNormSpec {
    pub fn new(p: Exponent, q: Exponent, nu: Option<f64>) -> Result<Self> {
        match (q.is_inf(), nu) {
            (true, Some(n)) if n != 0.0 => Err(Error::domain("no weight is allowed when q = inf")),
            (true, _) => Ok(MixedNormSpec { p, q, nu: None }),
            (false, n) => {
                let n = n.unwrap_or(0.0);
                if !(n > -1.0) {
                    return Err(Error::domain(format!("weight exponent must exceed -1, got {n}")));
                }
                Ok(MixedNormSpec { p, q, nu: Some(n) })
            }
        }
    }

    pub fn weight(&self) -> f64 {
        self.nu.unwrap_or(0.0)
    }

    /// `‖f_R‖ = R^scaling ‖f‖` for `f_R(w) = f(R w)`.
    pub fn dilation_exponent(&self) -> f64 {
        -(self.weight() + 1.0) * self.q.recip() - self.p.recip()
    }
}

/// `J_α(y) = ∫_R |x + iy|^-α dx = B(1/2, (α-1)/2) y^(1-α)`.
pub fn kernel_row_integral(alpha: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("y must be positive, got {y}")));
    }
    if !(alpha > 1.0) {
        return Err(Error::diverges(
            Endpoint::Infinity,
            format!("|x + iy|^-{alpha} is not integrable in x"),
        ));
    }
    Ok(beta(0.5, 0.5 * (alpha - 1.0))? * y.powf(1.0 - alpha))
}

/// `J_α(y)` by direct quadrature.
pub fn kernel_row_integral_quad(alpha: f64, y: f64, tol: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("y must be positive, got {y}")));
    }
    let hints = LineHints {
        centers: vec![0.0],
        widths: vec![y],
        decay_exponent: Some(alpha),
        ..LineHints::default()
    };
    integrate_line(|x: f64| Ok(x.hypot(y).powf(-alpha)), &hints, tol)
}

// ---------------------------------------------------------------------------
// mixed norms

/// `v -> (∫ |f(u, v)|^p du)^(1/p)` (or `sup_u |f|` for `p = ∞`) as a
/// half-line function.
pub struct SliceNorm<'a, F: ?Sized> {
    pub f: &'a F,
    pub p: Exponent,
    pub tol: f64,
}

impl<F: Func2D + ?Sized> SliceNorm<'_, F> {
    fn slice(&self, v: f64) -> Result<f64> {
        let hints = self.f.hints();
        if self.p.is_inf() {
            return slice_sup(self.f, &hints, v);
        }
        let p = self.p.value();
        let mut line = hints.line(v);
        line.decay_exponent = line.decay_exponent.map(|d| d * p);
        let s: f64 = integrate_line(|u| Ok(self.f.eval(u, v)?.abs().powf(p)), &line, self.tol)?;
        Ok(s.powf(1.0 / p))
    }
}

impl<F: Func2D + ?Sized> Func1D for SliceNorm<'_, F> {
    fn eval(&self, v: f64) -> Result<f64> {
        self.slice(v)
    }
    fn hints(&self) -> SingularityHints {
        slice_norm_hints(&self.f.hints(), self.p)
    }
}

/// Endpoint behaviour of the slice norm. `Hints2D::v` describes the size of
/// `f` in `v`; a peak of width `v + offset` adds `v^(1/p)` at infinity.
fn slice_norm_hints(h: &Hints2D, p: Exponent) -> SingularityHints {
    let mut v = h.v.clone();
    if h.u_peak.is_some() || (h.u_support.is_none() && h.u_decay.is_some()) {
        v.decay_exponent -= p.recip();
    }
    if let Some((_, off)) = h.u_peak {
        v.scales.push(off);
    }
    v
}

fn slice_sup<F: Func2D + ?Sized>(f: &F, hints: &Hints2D, v: f64) -> Result<f64> {
    let center = match (hints.u_peak, hints.u_support) {
        (Some((c, _)), _) => c,
        (None, Some((lo, hi))) => 0.5 * (lo + hi),
        _ => 0.0,
    };
    let opts = SupOptions::default();
    let right = scan_sup(|d| Ok(f.eval(center + d, v)?.abs()), &opts)?;
    let left = scan_sup(|d| Ok(f.eval(center - d, v)?.abs()), &opts)?;
    let mut best = f.eval(center, v)?.abs().max(right.value).max(left.value);
    for b in &hints.u_breakpoints {
        for u in [b - 1e-12 * b.abs().max(1.0), *b, b + 1e-12 * b.abs().max(1.0)] {
            best = best.max(f.eval(u, v)?.abs());
        }
    }
    Ok(best)
}

/// `‖f‖_{p,q,ν}`; for `q = ∞` the sup over `y` of the slice norms.
pub fn mixed_norm<F: Func2D + ?Sized>(f: &F, spec: &MixedNormSpec, tol: f64) -> Result<f64> {
    let slice = SliceNorm {
        f,
        p: spec.p,
        tol: (tol * 1e-2).max(1e-13),
    };
    let sh = slice.hints();
    if spec.q.is_inf() {
        let (mut lo, mut hi) = (1e-6, 1e6);
        if sh.vanishes_near_zero() {
            lo = sh.support.0;
        }
        if sh.vanishes_near_infinity() {
            hi = sh.support.1;
        }
        let opts = SupOptions {
            lo,
            hi: hi.max(lo * (1.0 + 1e-9)),
            ..SupOptions::default()
        };
        let mut best = scan_sup(|v| slice.eval(v), &opts)?.value;
        for &b in &sh.breakpoints {
            best = best.max(slice.eval(b)?);
        }
        return Ok(best);
    }
    let q = spec.q.value();
    let nu = spec.weight();
    let mut outer = sh.clone();
    outer.left_exponent = q * sh.left_exponent + nu;
    outer.decay_exponent = q * sh.decay_exponent - nu;
    let total: f64 = try_integrate_semiaxis(
        |v| {
            let s = slice.eval(v)?;
            Ok(if s == 0.0 { 0.0 } else { s.powf(q) * v.powf(nu) })
        },
        &outer,
        tol,
    )?;
    Ok(total.powf(1.0 / q))
}

// ---------------------------------------------------------------------------
// operators

/// Integrate `f(w) · kernel(z - w̄) · v^weight` over the half-plane, where
/// `|kernel(ζ)| = |ζ|^-power`.
fn half_plane_transform<V, G, K>(
    hints: &Hints2D,
    f: G,
    kernel: K,
    z: &HalfPlanePoint,
    weight: f64,
    power: f64,
    tol: f64,
) -> Result<V>
where
    V: QuadValue + std::ops::Mul<V, Output = V>,
    G: Fn(f64, f64) -> Result<V>,
    K: Fn(f64, f64) -> V,
{
    let u_decay = hints.u_decay.unwrap_or(0.0) + power;
    let mut vh = hints.v.clone();
    vh.left_exponent += weight;
    vh.decay_exponent += power - 1.0 - weight;
    vh.scales.push(z.y);
    let (x, y) = (z.x, z.y);
    integrate_halfplane(
        |u, v| {
            let fv = f(u, v)?;
            if fv.magnitude() == 0.0 {
                return Ok(V::default());
            }
            Ok(fv * kernel(x - u, y + v) * v.powf(weight))
        },
        |v| {
            let mut l = hints.line(v);
            l.centers.push(x);
            l.widths.push(y + v);
            l.decay_exponent = Some(u_decay);
            l
        },
        &vh,
        tol,
    )
}

/// `T⁺f(z) = y^α ∬ f(w) v^β |z - w̄|^-(1+γ) du dv`.
pub fn apply_tplus<F: Func2D + ?Sized>(params: &OperatorParams, f: &F, z: &HalfPlanePoint, tol: f64) -> Result<f64> {
    let power = 1.0 + params.gamma;
    let inner: f64 = half_plane_transform(
        &f.hints(),
        |u, v| f.eval(u, v),
        |a, b| a.hypot(b).powf(-power),
        z,
        params.beta,
        power,
        tol,
    )?;
    Ok(z.y.powf(params.alpha) * inner)
}

/// `Tf(z) = y^α ∬ f(w) v^β (z - w̄)^-(1+γ) du dv`, principal branch.
pub fn apply_t<F: ComplexFunc2D + ?Sized>(
    params: &OperatorParams,
    f: &F,
    z: &HalfPlanePoint,
    tol: f64,
) -> Result<Complex64> {
    let power = 1.0 + params.gamma;
    let inner: Complex64 = half_plane_transform(
        &f.hints_2d(),
        |u, v| f.eval_complex(u, v),
        |a, b| principal_power(a, b, -power),
        z,
        params.beta,
        power,
        tol,
    )?;
    Ok(z.y.powf(params.alpha) * inner)
}

/// `(a + ib)^e` on the principal branch, for `b > 0`.
fn principal_power(a: f64, b: f64, e: f64) -> Complex64 {
    let r = a.hypot(b).ln() * e;
    let th = b.atan2(a) * e;
    Complex64::from_polar(r.exp(), th)
}

/// `c_ν = (2^ν / π)(ν + 1) i^(2+ν)`, the constant for which
/// `c_ν ∬ f(w) (z - w̄)^-(2+ν) v^ν du dv` reproduces `A^2_ν` functions with
/// the principal branch. Equivalently the kernel is
/// `(2^ν / π)(ν + 1) ((z - w̄)/i)^-(2+ν)`. With the phase `e^(-iνπ/2)` and no
/// sign the integral returns `-e^(-iνπ) f(z)` instead of `f(z)`.
pub fn projection_constant(nu: f64) -> Complex64 {
    Complex64::from_polar(2f64.powf(nu) / PI * (nu + 1.0), (nu + 2.0) * PI / 2.0)
}

/// `P_ν f(z) = c_ν ∬ f(w) (z - w̄)^-(2+ν) v^ν du dv`.
pub fn bergman_project<F: ComplexFunc2D + ?Sized>(
    nu: f64,
    f: &F,
    z: &HalfPlanePoint,
    tol: f64,
) -> Result<Complex64> {
    if !(nu > -1.0) {
        return Err(Error::domain(format!("projection weight must exceed -1, got {nu}")));
    }
    let power = 2.0 + nu;
    let inner: Complex64 = half_plane_transform(
        &f.hints_2d(),
        |u, v| f.eval_complex(u, v),
        |a, b| principal_power(a, b, -power),
        z,
        nu,
        power,
        tol,
    )?;
    Ok(projection_constant(nu) * inner)
}

/// One probe of a reproduction check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReproductionPoint {
    pub z: HalfPlanePoint,
    pub expected_re: f64,
    pub expected_im: f64,
    pub projected_re: f64,
    pub projected_im: f64,
    pub error: f64,
}

/// Compare `P_ν f` with `f` at each probe point.
pub fn reproduction_check<F: ComplexFunc2D + ?Sized>(
    nu: f64,
    f: &F,
    probes: &[HalfPlanePoint],
    tol: f64,
) -> Result<Vec<ReproductionPoint>> {
    probes
        .iter()
        .map(|z| {
            let want = f.eval_complex(z.x, z.y)?;
            let got = bergman_project(nu, f, z, tol)?;
            Ok(ReproductionPoint {
                z: *z,
                expected_re: want.re,
                expected_im: want.im,
                projected_re: got.re,
                projected_im: got.im,
                error: (got - want).norm(),
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// reduction to the half-line operator

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReductionRow {
    pub y: f64,
    /// `‖(T⁺f)(· + iy)‖_{L^p}`.
    pub lhs: f64,
    /// `B(1/2, γ/2) · H(v -> ‖f_v‖_{L^p})(y)`.
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

/// Check `‖(T⁺f)_y‖_{L^p} <= B(1/2, γ/2) H_{α,β,γ}(‖f_v‖_{L^p})(y)` on `y_grid`.
pub fn reduction_bound_check<F: Func2D + ?Sized>(
    params: &OperatorParams,
    f: &F,
    p: Exponent,
    y_grid: &[f64],
    tol: f64,
) -> Result<Vec<ReductionRow>> {
    if !(params.gamma > 0.0) {
        return Err(Error::precondition(format!("gamma > 0 is required, got {}", params.gamma)));
    }
    if !p.is_finite() {
        return Err(Error::Unsupported("the reduction check needs finite p".into()));
    }
    let pv = p.value();
    let c_gamma = beta(0.5, 0.5 * params.gamma)?;
    let slice = SliceNorm {
        f,
        p,
        tol: (tol * 1e-2).max(1e-13),
    };
    let inner_tol = (tol * 1e-2).max(1e-12);
    let fh = f.hints();
    let mut rows = Vec::with_capacity(y_grid.len());
    for &y in y_grid {
        let rhs = c_gamma * apply_h(params, &slice, y, tol)?;
        let line = LineHints {
            breakpoints: fh.u_breakpoints.clone(),
            centers: fh.u_support.map(|(a, b)| vec![0.5 * (a + b)]).unwrap_or_else(|| vec![0.0]),
            widths: vec![y],
            decay_exponent: Some(pv * (1.0 + params.gamma - 1.0 + fh.u_decay.unwrap_or(0.0)).max(params.gamma)),
            support: None,
        };
        let s: f64 = integrate_line(
            |x| Ok(apply_tplus(params, f, &HalfPlanePoint { x, y }, inner_tol)?.powf(pv)),
            &line,
            tol,
        )?;
        let lhs = s.powf(1.0 / pv);
        let slack = rhs - lhs;
        rows.push(ReductionRow {
            y,
            lhs,
            rhs,
            slack,
            holds: slack >= -tol * rhs.abs().max(1.0),
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// exact norms

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndpointCase {
    /// `L^∞` to `L^∞`.
    Linf,
    /// `L^1_a` to `L^1_a`.
    L1,
}

/// Exact norm of `T⁺` on `L^∞` or `L^1_a`.
pub fn tplus_exact_norm(case: EndpointCase, params: &OperatorParams, a: f64) -> Result<f64> {
    let report = match case {
        EndpointCase::Linf => linf_report("T+", params),
        EndpointCase::L1 => l1_report("T+", params, a),
    };
    if let Some(fail) = report.first_failure() {
        return Err(Error::precondition(fail));
    }
    report
        .norm
        .ok_or_else(|| Error::precondition("no closed-form norm for this case"))
}

/// `v^-a ∬ y^(α+a) v^β |z - w̄|^-(1+γ) dx dy` at `w`; its sup over `w` is the
/// `L^1_a` norm of `T⁺`.
pub fn column_integral(params: &OperatorParams, a: f64, w: &HalfPlanePoint, tol: f64) -> Result<f64> {
    let OperatorParams { alpha, beta: bt, gamma } = *params;
    let power = 1.0 + gamma;
    let mut yh = SingularityHints::new(alpha + a, gamma - alpha - a).with_scales([w.y]);
    yh.check_convergence()?;
    yh.scales.dedup();
    let (u, v) = (w.x, w.y);
    let total: f64 = integrate_halfplane(
        |x, y| Ok(y.powf(alpha + a) * (x - u).hypot(y + v).powf(-power)),
        |y| LineHints {
            centers: vec![u],
            widths: vec![y + v],
            decay_exponent: Some(power),
            ..LineHints::default()
        },
        &yh,
        tol,
    )?;
    Ok(total * v.powf(bt - a))
}

// ---------------------------------------------------------------------------
// verdicts

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BergmanOperator {
    /// Positive kernel `|z - w̄|^-(1+γ)`.
    #[serde(rename = "T+")]
    TPlus,
    /// Complex kernel `(z - w̄)^-(1+γ)`.
    T,
    /// `P_β`, i.e. `α = 0`, `γ = β + 1`.
    #[serde(rename = "P")]
    Projection,
}

impl BergmanOperator {
    fn label(self) -> &'static str {
        match self {
            BergmanOperator::TPlus => "T+",
            BergmanOperator::T => "T",
            BergmanOperator::Projection => "P_beta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BergmanVerdictRequest {
    pub operator: BergmanOperator,
    pub source: MixedNormSpec,
    pub target: MixedNormSpec,
    pub params: OperatorParams,
}

fn regime(src: &MixedNormSpec, dst: &MixedNormSpec) -> String {
    let w = |s: &MixedNormSpec| match s.nu {
        Some(n) => format!("L^{{{},{}}}_{}", s.p, s.q, n),
        None => format!("L^{{{},{}}}", s.p, s.q),
    };
    format!("{} -> {}", w(src), w(dst))
}

fn linf_report(op: &str, params: &OperatorParams) -> ConditionReport {
    let OperatorParams { alpha, beta: bt, gamma } = *params;
    let mut r = ConditionReport::new(op, "L^inf -> L^inf", "half-plane:linf");
    r.relations
        .push(RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + bt + 1.0));
    r.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
    r.inequalities.push(Inequality::less("-1 < beta", -1.0, bt));
    let mut r = r.decide();
    if r.is_bounded() && op == "T+" {
        r.norm = beta(0.5, 0.5 * gamma)
            .and_then(|c| Ok(c * beta(bt + 1.0, alpha)?))
            .ok();
    }
    r
}

fn l1_report(op: &str, params: &OperatorParams, a: f64) -> ConditionReport {
    let OperatorParams { alpha, beta: bt, gamma } = *params;
    let mut r = ConditionReport::new(op, &format!("L^1_{a} -> L^1_{a}"), "half-plane:l1-weighted");
    r.relations
        .push(RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + bt + 1.0));
    r.inequalities.push(Inequality::less("-alpha < a+1", -alpha, a + 1.0));
    r.inequalities.push(Inequality::less("a+1 < beta+1", a + 1.0, bt + 1.0));
    let mut r = r.decide();
    if r.is_bounded() && op == "T+" {
        r.norm = beta(0.5, 0.5 * gamma)
            .and_then(|c| Ok(c * beta(bt - a, alpha + a + 1.0)?))
            .ok();
    }
    r
}

/// Boundedness of `T⁺`, `T` or `P_β` between mixed-norm spaces with a common
/// inner exponent, or on `L^∞` / `L^1_a`.
pub fn bergman_verdict(req: &BergmanVerdictRequest) -> Result<ConditionReport> {
    let params = &req.params;
    if req.operator == BergmanOperator::Projection {
        let residual = params.gamma - params.beta - 1.0;
        if params.alpha.abs() > RELATION_EPS || residual.abs() > RELATION_EPS {
            return Err(Error::precondition(format!(
                "the projection needs alpha = 0 and gamma = beta+1 (alpha = {}, gamma-beta-1 = {residual})",
                params.alpha
            )));
        }
    }
    let general = general_verdict(req)?;
    if req.operator != BergmanOperator::Projection {
        return Ok(general);
    }
    Ok(specialize_projection(req, general))
}

fn general_verdict(req: &BergmanVerdictRequest) -> Result<ConditionReport> {
    let op = req.operator.label();
    let (src, dst) = (&req.source, &req.target);
    let OperatorParams { alpha, beta: bt, gamma } = req.params;

    let both = |p: f64| src.p.value() == p && src.q.value() == p && dst.p.value() == p && dst.q.value() == p;
    if both(f64::INFINITY) {
        return Ok(linf_report(op, &req.params));
    }
    if both(1.0) {
        let (a, b) = (src.weight(), dst.weight());
        if a != b {
            return Err(Error::Unsupported(format!(
                "L^1 criterion needs the same weight on both sides (a = {a}, b = {b})"
            )));
        }
        return Ok(l1_report(op, &req.params, a));
    }
    if src.p != dst.p {
        return Err(Error::Unsupported(format!(
            "inner exponents differ ({} vs {})",
            src.p, dst.p
        )));
    }
    let p = src.p.value();
    if !(p > 1.0 && p < f64::INFINITY) {
        return Err(Error::Unsupported(format!("inner exponent p = {} must lie in (1, inf)", src.p)));
    }
    let (q, r) = (src.q, dst.q);
    let (a, b) = (src.weight(), dst.weight());
    let reg = regime(src, dst);
    let unweighted = |s: &MixedNormSpec, which: &str| -> Result<()> {
        if s.weight() != 0.0 {
            return Err(Error::Unsupported(format!(
                "the {which} space must be unweighted when its outer exponent is 1"
            )));
        }
        Ok(())
    };

    let report = if q.value() > 1.0 && q.is_finite() && r.is_finite() {
        if q.value() > r.value() {
            return Err(Error::Unsupported(format!("outer exponents need q <= r, got {q} > {r}")));
        }
        let (qv, rv) = (q.value(), r.value());
        let mut rep = ConditionReport::new(op, &reg, "half-plane:q-to-r");
        rep.relations.push(RelationCheck::new(
            "gamma = alpha+beta+1-(a+1)/q+(b+1)/r",
            gamma,
            alpha + bt + 1.0 - (a + 1.0) / qv + (b + 1.0) / rv,
        ));
        rep.inequalities
            .push(Inequality::less("-q(gamma-beta-1) < a+1", -qv * (gamma - bt - 1.0), a + 1.0));
        rep.inequalities
            .push(Inequality::less("a+1 < q(beta+1)", a + 1.0, qv * (bt + 1.0)));
        rep
    } else if q.value() > 1.0 && q.is_finite() && r.is_inf() {
        let qv = q.value();
        let mut rep = ConditionReport::new(op, &reg, "half-plane:q-to-sup");
        rep.relations.push(RelationCheck::new(
            "gamma = alpha+beta+1-(a+1)/q",
            gamma,
            alpha + bt + 1.0 - (a + 1.0) / qv,
        ));
        rep.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
        rep.inequalities
            .push(Inequality::less("a+1 < q(beta+1)", a + 1.0, qv * (bt + 1.0)));
        rep.cross_checks
            .push(Inequality::less("-q(gamma-beta-1) < a+1", -qv * (gamma - bt - 1.0), a + 1.0));
        rep
    } else if q.value() == 1.0 && r.value() > 1.0 && r.is_finite() {
        unweighted(src, "source")?;
        let rv = r.value();
        let mut rep = ConditionReport::new(op, &reg, "half-plane:one-to-r");
        rep.relations.push(RelationCheck::new(
            "gamma = alpha+beta+(b+1)/r",
            gamma,
            alpha + bt + (b + 1.0) / rv,
        ));
        rep.inequalities.push(Inequality::less("beta < gamma", bt, gamma));
        rep.inequalities.push(Inequality::less("0 < beta", 0.0, bt));
        rep
    } else if q.value() == 1.0 && r.is_inf() {
        unweighted(src, "source")?;
        let mut rep = ConditionReport::new(op, &reg, "half-plane:one-to-sup");
        rep.relations
            .push(RelationCheck::new("gamma = alpha+beta", gamma, alpha + bt));
        rep.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
        rep.inequalities.push(Inequality::less("0 < beta", 0.0, bt));
        rep
    } else if q.value() == 1.0 && r.value() == 1.0 {
        unweighted(src, "source")?;
        unweighted(dst, "target")?;
        let mut rep = ConditionReport::new(op, &reg, "half-plane:one-to-one");
        rep.relations
            .push(RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + bt + 1.0));
        rep.inequalities.push(Inequality::less("-1 < alpha", -1.0, alpha));
        rep.inequalities.push(Inequality::less("0 < beta", 0.0, bt));
        rep
    } else if q.is_inf() && r.is_inf() {
        let mut rep = ConditionReport::new(op, &reg, "half-plane:sup-to-sup");
        rep.relations
            .push(RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + bt + 1.0));
        rep.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
        rep.inequalities.push(Inequality::less("-1 < beta", -1.0, bt));
        rep
    } else {
        return Err(Error::Unsupported(format!("no criterion covers {reg}")));
    };
    Ok(report.decide())
}

/// Replace the general conditions by their `α = 0, γ = β + 1` forms where
/// these simplify; the general forms stay as cross-checks.
fn specialize_projection(req: &BergmanVerdictRequest, general: ConditionReport) -> ConditionReport {
    let bt = req.params.beta;
    let (a, b) = (req.source.weight(), req.target.weight());
    let (q, r) = (req.source.q.value(), req.target.q.value());
    let (clause, relations, inequalities) = match general.clause.as_str() {
        "half-plane:q-to-r" => (
            "projection:q-to-r",
            vec![RelationCheck::new("(a+1)/q = (b+1)/r", (a + 1.0) / q, (b + 1.0) / r)],
            vec![Inequality::less("a+1 < q(beta+1)", a + 1.0, q * (bt + 1.0))],
        ),
        "half-plane:l1-weighted" => ("projection:l1-weighted", vec![], vec![Inequality::less("a < beta", a, bt)]),
        "half-plane:one-to-r" => (
            "projection:one-to-r",
            vec![RelationCheck::new("r = b+1", r, b + 1.0)],
            vec![Inequality::less("0 < beta", 0.0, bt)],
        ),
        "half-plane:one-to-one" => ("projection:one-to-one", vec![], vec![Inequality::less("0 < beta", 0.0, bt)]),
        _ => {
            let mut g = general;
            g.clause = g.clause.replacen("half-plane", "projection", 1);
            g.norm = None;
            return g;
        }
    };
    let mut rep = ConditionReport::new(&general.operator, &general.regime, clause);
    rep.relations = relations;
    rep.inequalities = inequalities;
    rep.cross_checks = general.inequalities;
    let rep = rep.decide();
    debug_assert_eq!(rep.verdict == Verdict::Bounded, general.verdict == Verdict::Bounded);
    rep
}
