//! The half-line operators
//! `H f(x) = x^α ∫_0^∞ f(y) y^β (x+y)^-γ dy` and their adjoints.

use serde::{Deserialize, Serialize};

use crate::conditions::{ConditionReport, Exponent, Inequality, RelationCheck};
use crate::error::{Error, Result};
use crate::func::{Dilated, Func1D, TruncatedPower};
use crate::quad::{integrate_truncated, try_integrate_semiaxis, SingularityHints};
use crate::specfun::beta;

/// The kernel exponents `(α, β, γ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl OperatorParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return Err(Error::domain("operator exponents must be finite"));
        }
        Ok(OperatorParams { alpha, beta, gamma })
    }

    /// The Hilbert operator `∫ f(y)/(x+y) dy`.
    pub const CLASSICAL: OperatorParams = OperatorParams {
        alpha: 0.0,
        beta: 0.0,
        gamma: 1.0,
    };

    /// `ln(x^α y^β (x+y)^-γ)`.
    pub fn ln_kernel(&self, x: f64, y: f64) -> f64 {
        self.alpha * x.ln() + self.beta * y.ln() - self.gamma * ln_sum(x, y)
    }
}

/// `ln(x + y)` for positive `x, y` without cancellation or overflow.
pub fn ln_sum(x: f64, y: f64) -> f64 {
    if x >= y {
        x.ln() + (y / x).ln_1p()
    } else {
        y.ln() + (x / y).ln_1p()
    }
}

/// The space `L^p_a((0, ∞))` (`a` is absent for `p = ∞`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedSpaceSpec {
    pub p: Exponent,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
}

impl WeightedSpaceSpec {
    pub fn lp(p: f64, a: f64) -> Result<Self> {
        let p = Exponent::new(p)?;
        Self::new(p, a)
    }

    pub fn new(p: Exponent, a: f64) -> Result<Self> {
        if p.is_inf() {
            return Ok(Self::linf());
        }
        if !(a > -1.0) {
            return Err(Error::domain(format!("weight exponent must exceed -1, got {a}")));
        }
        Ok(WeightedSpaceSpec { p, a: Some(a) })
    }

    pub fn linf() -> Self {
        WeightedSpaceSpec {
            p: Exponent::INF,
            a: None,
        }
    }

    /// The weight exponent, 0 when absent.
    pub fn weight(&self) -> f64 {
        self.a.unwrap_or(0.0)
    }
}

fn check_point(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("evaluation point must be positive, got {x}")))
    }
}

fn weighted_integrand_hints(f: &SingularityHints, shift_left: f64, shift_decay: f64, knee: f64) -> SingularityHints {
    let mut h = f.clone();
    h.left_exponent += shift_left;
    h.decay_exponent += shift_decay;
    h.scales.push(knee);
    h
}

/// `H f(x)`.
pub fn apply_h<F: Func1D + ?Sized>(params: &OperatorParams, f: &F, x: f64, tol: f64) -> Result<f64> {
    check_point(x)?;
    let hints = weighted_integrand_hints(&f.hints(), params.beta, params.gamma - params.beta, x);
    try_integrate_semiaxis(
        |y| {
            let v = f.eval(y)?;
            Ok(if v == 0.0 {
                0.0
            } else {
                v * params.ln_kernel(x, y).exp()
            })
        },
        &hints,
        tol,
    )
}

/// The adjoint with respect to the pairings `x^b dx` and `y^a dy`:
/// `H* f(y) = y^(β-a) ∫_0^∞ f(x) x^(α+b) (x+y)^-γ dx`.
pub fn apply_h_adjoint<F: Func1D + ?Sized>(
    params: &OperatorParams,
    a: f64,
    b: f64,
    f: &F,
    y: f64,
    tol: f64,
) -> Result<f64> {
    check_point(y)?;
    let e = params.alpha + b;
    let hints = weighted_integrand_hints(&f.hints(), e, params.gamma - e, y);
    try_integrate_semiaxis(
        |x| {
            let v = f.eval(x)?;
            Ok(if v == 0.0 {
                0.0
            } else {
                let ln = (params.beta - a) * y.ln() + e * x.ln() - params.gamma * ln_sum(x, y);
                v * ln.exp()
            })
        },
        &hints,
        tol,
    )
}

/// Endpoint exponents of `x^A ∫ f(y) y^B (x+y)^-γ dy` given those of `f`.
fn image_hints(f: &SingularityHints, outer: f64, inner: f64, gamma: f64) -> SingularityHints {
    let sigma = if f.vanishes_near_zero() {
        f64::INFINITY
    } else {
        f.left_exponent
    };
    let tau = if f.vanishes_near_infinity() {
        f64::INFINITY
    } else {
        f.decay_exponent
    };
    let left = outer + (sigma + inner + 1.0 - gamma).min(0.0);
    let decay = gamma - outer - (inner + 1.0 - tau).max(0.0);
    let knees = f
        .breakpoints
        .iter()
        .chain(f.scales.iter())
        .copied()
        .chain([f.support.0, f.support.1])
        .filter(|v| v.is_finite() && *v > 0.0);
    let mut h = SingularityHints::new(left, decay).with_scales(knees);
    if !(f.support.0 < f.support.1) {
        h = h.with_support(1.0, 1.0);
    }
    h
}

/// `H f` as a half-line function; each evaluation is a quadrature at `tol`.
pub struct HImage<'a, F: ?Sized> {
    pub params: OperatorParams,
    pub f: &'a F,
    pub tol: f64,
}

impl<F: Func1D + ?Sized> Func1D for HImage<'_, F> {
    fn eval(&self, x: f64) -> Result<f64> {
        apply_h(&self.params, self.f, x, self.tol)
    }
    fn hints(&self) -> SingularityHints {
        image_hints(&self.f.hints(), self.params.alpha, self.params.beta, self.params.gamma)
    }
}

/// `H* f` as a half-line function.
pub struct HAdjointImage<'a, F: ?Sized> {
    pub params: OperatorParams,
    pub a: f64,
    pub b: f64,
    pub f: &'a F,
    pub tol: f64,
}

impl<F: Func1D + ?Sized> Func1D for HAdjointImage<'_, F> {
    fn eval(&self, y: f64) -> Result<f64> {
        apply_h_adjoint(&self.params, self.a, self.b, self.f, y, self.tol)
    }
    fn hints(&self) -> SingularityHints {
        let p = &self.params;
        image_hints(&self.f.hints(), p.beta - self.a, p.alpha + self.b, p.gamma)
    }
}

/// Tolerance for inner integrals nested inside an outer one at `tol`.
pub fn inner_tol(tol: f64) -> f64 {
    (tol * 1e-2).max(1e-13)
}

// ---------------------------------------------------------------------------
// norms

/// Settings for the essential-supremum heuristic: a log-spaced scan of
/// `[lo, hi]` followed by golden-section refinement around the best sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupOptions {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub refine_iters: usize,
}

impl Default for SupOptions {
    fn default() -> Self {
        SupOptions {
            lo: 1e-6,
            hi: 1e6,
            points: 1201,
            refine_iters: 60,
        }
    }
}

/// Largest value found and where.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupEstimate {
    pub value: f64,
    pub at: f64,
}

/// Heuristic supremum of `g` over `[opts.lo, opts.hi]` (a lower bound).
pub fn scan_sup<G: Fn(f64) -> Result<f64>>(g: G, opts: &SupOptions) -> Result<SupEstimate> {
    if !(opts.lo > 0.0 && opts.hi > opts.lo && opts.points >= 2) {
        return Err(Error::domain("sup scan needs 0 < lo < hi and at least 2 points"));
    }
    let (l0, l1) = (opts.lo.ln(), opts.hi.ln());
    let step = (l1 - l0) / (opts.points - 1) as f64;
    let mut best = SupEstimate {
        value: f64::NEG_INFINITY,
        at: opts.lo,
    };
    let mut best_i = 0;
    for i in 0..opts.points {
        let x = (l0 + step * i as f64).exp();
        let v = g(x)?;
        if v > best.value {
            best = SupEstimate { value: v, at: x };
            best_i = i;
        }
    }
    // golden section on ln x in the bracket around the best sample
    let mut a = l0 + step * best_i.saturating_sub(1) as f64;
    let mut b = l0 + step * (best_i + 1).min(opts.points - 1) as f64;
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = g(c.exp())?;
    let mut fd = g(d.exp())?;
    for _ in 0..opts.refine_iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = g(c.exp())?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = g(d.exp())?;
        }
    }
    for (v, s) in [(fc, c), (fd, d)] {
        if v > best.value {
            best = SupEstimate { value: v, at: s.exp() };
        }
    }
    Ok(best)
}

/// `‖f‖_{p,a} = (∫ |f|^p x^a dx)^(1/p)`, or the essential supremum for `p = ∞`.
pub fn weighted_lp_norm<F: Func1D + ?Sized>(f: &F, space: &WeightedSpaceSpec, tol: f64) -> Result<f64> {
    weighted_norm_impl(f, space, None, tol)
}

/// The norm restricted to `(0, cutoff]`.
pub fn weighted_lp_norm_truncated<F: Func1D + ?Sized>(
    f: &F,
    space: &WeightedSpaceSpec,
    cutoff: f64,
    tol: f64,
) -> Result<f64> {
    weighted_norm_impl(f, space, Some(cutoff), tol)
}

fn weighted_norm_impl<F: Func1D + ?Sized>(
    f: &F,
    space: &WeightedSpaceSpec,
    cutoff: Option<f64>,
    tol: f64,
) -> Result<f64> {
    if space.p.is_inf() {
        let mut opts = SupOptions::default();
        if let Some(c) = cutoff {
            opts.hi = opts.hi.min(c);
        }
        return Ok(scan_sup(|x| Ok(f.eval(x)?.abs()), &opts)?.value.max(0.0));
    }
    let p = space.p.value();
    let a = space.weight();
    let fh = f.hints();
    let mut hints = fh.clone();
    hints.left_exponent = p * fh.left_exponent + a;
    hints.decay_exponent = p * fh.decay_exponent - a;
    let integrand = |x: f64| -> Result<f64> {
        let v = f.eval(x)?.abs();
        Ok(if v == 0.0 {
            0.0
        } else {
            (p * v.ln() + a * x.ln()).exp()
        })
    };
    let total = match cutoff {
        None => try_integrate_semiaxis(integrand, &hints, tol)?,
        Some(c) => integrate_truncated(integrand, &hints, c, tol)?,
    };
    Ok(total.max(0.0).powf(1.0 / p))
}

// ---------------------------------------------------------------------------
// conditions

/// The `γ` that satisfies `γ = α+β+1-(a+1)/p+(b+1)/q` (terms with an infinite
/// exponent drop out).
pub fn balance_gamma(p: Exponent, q: Exponent, a: f64, b: f64, alpha: f64, beta: f64) -> f64 {
    let ta = if p.is_inf() { 0.0 } else { (a + 1.0) * p.recip() };
    let tb = if q.is_inf() { 0.0 } else { (b + 1.0) * q.recip() };
    alpha + beta + 1.0 - ta + tb
}

/// `-p(γ-β-1) < a+1 < p(β+1)`.
pub fn direct_form(p: f64, a: f64, params: &OperatorParams) -> [Inequality; 2] {
    let OperatorParams { beta, gamma, .. } = *params;
    [
        Inequality::less("-p(gamma-beta-1) < a+1", -p * (gamma - beta - 1.0), a + 1.0),
        Inequality::less("a+1 < p(beta+1)", a + 1.0, p * (beta + 1.0)),
    ]
}

/// `-qα < b+1 < q(γ-α)`.
pub fn adjoint_form(q: f64, b: f64, params: &OperatorParams) -> [Inequality; 2] {
    let OperatorParams { alpha, gamma, .. } = *params;
    [
        Inequality::less("-q*alpha < b+1", -q * alpha, b + 1.0),
        Inequality::less("b+1 < q(gamma-alpha)", b + 1.0, q * (gamma - alpha)),
    ]
}

/// Decide boundedness of `H : L^p_a -> L^q_b`.
pub fn hilbert_verdict(p: Exponent, q: Exponent, a: f64, b: f64, params: &OperatorParams) -> Result<ConditionReport> {
    if p > q {
        return Err(Error::domain(format!("need p <= q, got p = {p}, q = {q}")));
    }
    if p.is_finite() && !(a > -1.0) {
        return Err(Error::domain(format!("weight exponent a must exceed -1, got {a}")));
    }
    if q.is_finite() && !(b > -1.0) {
        return Err(Error::domain(format!("weight exponent b must exceed -1, got {b}")));
    }
    let OperatorParams { alpha, beta, gamma } = *params;
    let report = if q.is_finite() {
        let (pv, qv) = (p.value(), q.value());
        let mut r = ConditionReport::new("H", "L^p_a -> L^q_b, 1 <= p <= q < inf", "hilbert:finite-to-finite");
        r.relations.push(RelationCheck::new(
            "gamma = alpha+beta+1-(a+1)/p+(b+1)/q",
            gamma,
            balance_gamma(p, q, a, b, alpha, beta),
        ));
        r.inequalities.extend(direct_form(pv, a, params));
        r.cross_checks.extend(adjoint_form(qv, b, params));
        let mut r = r.decide();
        if r.is_bounded() && pv == qv && a == b {
            r.norm = sharp_norm(&WeightedSpaceSpec::lp(pv, a)?, params).ok();
        }
        r
    } else if p.is_finite() {
        if p.value() == 1.0 {
            return Err(Error::Unsupported(
                "L^1_a -> L^inf is not covered; use 1 < p < inf or p = q".into(),
            ));
        }
        let pv = p.value();
        let mut r = ConditionReport::new("H", "L^p_a -> L^inf, 1 < p < inf", "hilbert:finite-to-sup");
        r.relations.push(RelationCheck::new(
            "gamma = alpha+beta+1-(a+1)/p",
            gamma,
            balance_gamma(p, q, a, b, alpha, beta),
        ));
        r.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
        r.inequalities
            .push(Inequality::less("a+1 < p(beta+1)", a + 1.0, pv * (beta + 1.0)));
        r.cross_checks.push(Inequality::less(
            "-p(gamma-beta-1) < a+1",
            -pv * (gamma - beta - 1.0),
            a + 1.0,
        ));
        r.decide()
    } else {
        let mut r = ConditionReport::new("H", "L^inf -> L^inf", "hilbert:sup-to-sup");
        r.relations
            .push(RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + beta + 1.0));
        r.inequalities.push(Inequality::less("0 < alpha", 0.0, alpha));
        r.inequalities.push(Inequality::less("-1 < beta", -1.0, beta));
        let mut r = r.decide();
        if r.is_bounded() {
            r.norm = Some(beta_checked(beta + 1.0, alpha)?);
        }
        r
    };
    Ok(report)
}

fn beta_checked(m: f64, n: f64) -> Result<f64> {
    beta(m, n)
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}

/// The exact norm of `H` on `L^p_a` when `γ = α+β+1`.
pub fn sharp_norm(space: &WeightedSpaceSpec, params: &OperatorParams) -> Result<f64> {
    let OperatorParams { alpha, beta, gamma } = *params;
    let rel = RelationCheck::new("gamma = alpha+beta+1", gamma, alpha + beta + 1.0);
    require(rel.holds, || format!("gamma = alpha+beta+1 fails (residual {:e})", rel.residual))?;
    if space.p.is_inf() {
        require(alpha > 0.0, || format!("alpha > 0 fails (alpha = {alpha})"))?;
        require(beta > -1.0, || format!("beta > -1 fails (beta = {beta})"))?;
        return beta_checked(beta + 1.0, alpha);
    }
    let p = space.p.value();
    let a = space.weight();
    for ineq in [
        Inequality::less("-p*alpha < a+1", -p * alpha, a + 1.0),
        Inequality::less("a+1 < p(beta+1)", a + 1.0, p * (beta + 1.0)),
    ] {
        require(ineq.holds, || {
            format!("{} fails ({} vs {})", ineq.expression, ineq.lhs, ineq.rhs)
        })?;
    }
    let c = (a + 1.0) / p;
    beta_checked(beta + 1.0 - c, alpha + c)
}

// ---------------------------------------------------------------------------
// sharpness and necessity experiments

/// Rayleigh-type quotient for the truncated-power pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub xi: f64,
    pub quotient: f64,
    pub sharp: f64,
    /// `B_ξ - ξ C_ξ`, the lower bound guaranteed for this `ξ`.
    pub lower_bound: f64,
    pub pairing: f64,
    pub f_norm: f64,
    pub g_norm: f64,
}

/// `B(β+1-c, α+c) - ξ / ((β + c' - a)(β+1-c))` with `c = (a+1+ξ)/p`,
/// `c' = (a+1+ξ)/p'`.
pub fn extremal_lower_bound(space: &WeightedSpaceSpec, params: &OperatorParams, xi: f64) -> Result<f64> {
    let a = space.weight();
    let c = (a + 1.0 + xi) * space.p.recip();
    let c2 = (a + 1.0 + xi) * space.p.conjugate_recip();
    let b_xi = beta(params.beta + 1.0 - c, params.alpha + c)?;
    Ok(b_xi - xi / ((params.beta + c2 - a) * (params.beta + 1.0 - c)))
}

/// `⟨g, H f⟩_{x^a dx} / (‖f‖_{p,a} ‖g‖_{p',a})` for
/// `f = x^-(a+1+ξ)/p χ_[1,∞)` and `g = x^-(a+1+ξ)/p' χ_[1,∞)`.
pub fn extremal_quotient(space: &WeightedSpaceSpec, params: &OperatorParams, xi: f64, tol: f64) -> Result<ExtremalReport> {
    if space.p.is_inf() {
        return Err(Error::precondition("the extremal family needs finite p"));
    }
    let sharp = sharp_norm(space, params)?;
    let p = space.p.value();
    let a = space.weight();
    let top = p * (params.beta + 1.0) - (a + 1.0);
    require(xi > 0.0 && xi < top, || {
        format!("need 0 < xi < p(beta+1)-(a+1) = {top}, got {xi}")
    })?;
    let c = (a + 1.0 + xi) * space.p.recip();
    let c2 = (a + 1.0 + xi) * space.p.conjugate_recip();
    let f = TruncatedPower { exponent: c };
    let g = TruncatedPower { exponent: c2 };
    let hf = HImage {
        params: *params,
        f: &f,
        tol: inner_tol(tol),
    };
    let image = hf.hints();
    let hints = SingularityHints::new(f64::INFINITY, c2 - a + image.decay_exponent)
        .with_breakpoints([1.0])
        .with_support(1.0, f64::INFINITY);
    let pairing = try_integrate_semiaxis(
        |x| Ok(hf.eval(x)? * (a * x.ln() - c2 * x.ln()).exp()),
        &hints,
        tol,
    )?;
    let f_norm = weighted_lp_norm(&f, space, tol)?;
    let g_space = WeightedSpaceSpec::new(space.p.conjugate(), a)?;
    let g_norm = weighted_lp_norm(&g, &g_space, tol)?;
    Ok(ExtremalReport {
        xi,
        quotient: pairing / (f_norm * g_norm),
        sharp,
        lower_bound: extremal_lower_bound(space, params, xi)?,
        pairing,
        f_norm,
        g_norm,
    })
}

/// `max_x |H f_R(x) - R^(γ-β-α-1) H f(R x)| / (1 + |H f(R x)|)` over `probes`.
pub fn dilation_residual<F: Func1D>(params: &OperatorParams, f: &F, r: f64, probes: &[f64], tol: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("dilation factor must be positive, got {r}")));
    }
    let fr = Dilated { inner: f, r };
    let scale = r.powf(params.gamma - params.beta - params.alpha - 1.0);
    let mut worst: f64 = 0.0;
    for &x in probes {
        let lhs = apply_h(params, &fr, x, tol)?;
        let h = apply_h(params, f, r * x, tol)?;
        worst = worst.max((lhs - scale * h).abs() / (1.0 + h.abs()));
    }
    Ok(worst)
}

/// Slope of `log(‖H f_R‖_{q,b} / ‖f_R‖_{p,a})` against `log R` implied by
/// the dilation identity: `γ-α-β-1-(b+1)/q+(a+1)/p`.
pub fn dilation_slope(p: Exponent, q: Exponent, a: f64, b: f64, params: &OperatorParams) -> f64 {
    params.gamma - params.alpha - params.beta - 1.0 - (b + 1.0) * q.recip() + (a + 1.0) * p.recip()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthPoint {
    pub r: f64,
    pub image_norm: f64,
    pub input_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    /// Least-squares slope of the log ratio against `log R`.
    pub slope: f64,
    /// The slope implied by the dilation identity.
    pub dilation_slope: f64,
    pub cutoff: Option<f64>,
    pub points: Vec<GrowthPoint>,
}

/// Options for [`growth_exponent`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthOptions {
    /// Compute `‖H f_R‖` over `(0, cutoff]` only; needed when it is infinite.
    pub cutoff: Option<f64>,
    pub tol: f64,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        GrowthOptions {
            cutoff: None,
            tol: 1e-8,
        }
    }
}

/// Least-squares slope of `log(‖H f_R‖_{q,b} / ‖f_R‖_{p,a})` over `r_grid`.
#[allow(clippy::too_many_arguments)]
pub fn growth_exponent<F: Func1D>(
    p: Exponent,
    q: Exponent,
    a: f64,
    b: f64,
    params: &OperatorParams,
    f: &F,
    r_grid: &[f64],
    opts: &GrowthOptions,
) -> Result<GrowthReport> {
    if r_grid.len() < 2 {
        return Err(Error::domain("growth exponent needs at least two dilation factors"));
    }
    let source = WeightedSpaceSpec::new(p, a)?;
    let target = WeightedSpaceSpec::new(q, b)?;
    let mut points = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let fr = Dilated { inner: f, r };
        let image = HImage {
            params: *params,
            f: &fr,
            tol: inner_tol(opts.tol),
        };
        let image_norm = match opts.cutoff {
            Some(c) => weighted_lp_norm_truncated(&image, &target, c, opts.tol)?,
            None => weighted_lp_norm(&image, &target, opts.tol)?,
        };
        let input_norm = weighted_lp_norm(&fr, &source, opts.tol)?;
        points.push(GrowthPoint {
            r,
            image_norm,
            input_norm,
        });
    }
    let xs: Vec<f64> = points.iter().map(|g| g.r.ln()).collect();
    let ys: Vec<f64> = points
        .iter()
        .map(|g| (g.image_norm / g.input_norm).ln())
        .collect();
    Ok(GrowthReport {
        slope: least_squares_slope(&xs, &ys),
        dilation_slope: dilation_slope(p, q, a, b, params),
        cutoff: opts.cutoff,
        points,
    })
}

pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// `n` points from `lo` to `hi` in geometric progression.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (l0, l1) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp())
        .collect()
}
