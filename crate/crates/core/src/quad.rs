//! Deterministic quadrature on the half-line, on finite intervals, on the
//! real line and (as an iterated integral) on the upper half-plane.
//!
//! Half-line integrals are computed in the logarithmic variable `y = e^s`.
//! A power law `y^σ` near 0 or `y^{-τ}` near infinity becomes an exponential
//! in `s`, so endpoint power singularities of any strength `σ > -1` and any
//! decay `τ > 1` look alike. The `s`-window is bounded by the declared
//! breakpoints and length scales, padded by [`WINDOW_PAD`] on each side; the
//! contribution beyond the window is added in closed form from a local
//! exponential fit of the integrand at the window edge. This keeps every
//! evaluation point inside the range of `f64` even for near-critical
//! exponents such as `y^{-1.001}`.
//!
//! Inside the window, sub-pieces touching a breakpoint are integrated with a
//! tanh-sinh (double exponential) rule and the bulk with globally adaptive
//! Gauss-Kronrod (7/15).

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Endpoint, Error, Result};

/// Default relative tolerance for one-dimensional integrals.
pub const DEFAULT_TOL_1D: f64 = 1e-10;
/// Default relative tolerance for half-plane integrals.
pub const DEFAULT_TOL_2D: f64 = 1e-6;

/// Padding (in `ln y`) added beyond the outermost scale on each side.
pub const WINDOW_PAD: f64 = 46.0;

/// Distance (in `ln y`) between the two samples used to fit a tail.
const TAIL_FIT_STEP: f64 = 2.0;
/// Initial Gauss-Kronrod cell width in `ln y`.
const CELL_WIDTH: f64 = 4.0;
/// Step (in `ln y`) by which a tail window is pushed outward.
const TAIL_EXTENSION: f64 = 16.0;
/// Farthest `|ln y|` a tail window may reach (`e^700` is near the top of `f64`).
const MAX_LOG_EXTENT: f64 = 700.0;
/// Width of the tanh-sinh sub-piece adjacent to a breakpoint.
const EDGE_PIECE: f64 = 1.0;

/// Errors below this are accepted outright: an integrand built from
/// subnormal factors has no relative precision left to refine.
const PRECISION_FLOOR: f64 = f64::MIN_POSITIVE / f64::EPSILON;
const MAX_CELLS: usize = 6000;
const TANH_SINH_MAX_LEVEL: usize = 12;
const TANH_SINH_T_MAX: f64 = 6.0;

/// Scalar types the integrators can sum: real or complex.
pub trait QuadValue:
    Copy + Send + Sync + Default + std::fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn magnitude(self) -> f64;
    fn finite(self) -> bool;

    /// Integral over the tail of an exponential profile through `edge` (at
    /// the window edge) and `inner` (one fit step inside the window).
    ///
    /// `Ok(None)` means the profile cannot be modelled as an exponential.
    fn exponential_tail(edge: Self, inner: Self, step: f64) -> std::result::Result<Option<Self>, ()>;
}

impl QuadValue for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }

    fn finite(self) -> bool {
        self.is_finite()
    }

    fn exponential_tail(edge: f64, inner: f64, step: f64) -> std::result::Result<Option<f64>, ()> {
        if edge == 0.0 {
            return Ok(Some(0.0));
        }
        let ratio = inner / edge;
        if !(ratio > 0.0) || !ratio.is_finite() {
            return Ok(None);
        }
        if ratio <= 1.0 {
            return Err(());
        }
        let rate = ratio.ln() / step;
        Ok(Some(edge / rate))
    }
}

impl QuadValue for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }

    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn exponential_tail(edge: Self, inner: Self, step: f64) -> std::result::Result<Option<Self>, ()> {
        if edge == Complex64::default() {
            return Ok(Some(Complex64::default()));
        }
        let ratio = inner / edge;
        if !QuadValue::finite(ratio) || ratio.norm() == 0.0 {
            return Ok(None);
        }
        let rate = ratio.ln() / step;
        if rate.re <= 0.0 {
            return Err(());
        }
        Ok(Some(edge / rate))
    }
}

/// What the integrator needs to know about a half-line integrand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityHints {
    /// Points of non-smoothness (indicator edges), sorted, positive.
    pub breakpoints: Vec<f64>,
    /// `f(y) ~ y^left_exponent` as `y -> 0+`.
    pub left_exponent: f64,
    /// `f(y) ~ y^-decay_exponent` as `y -> inf`.
    pub decay_exponent: f64,
    /// Additional length scales where the integrand changes character.
    #[serde(default)]
    pub scales: Vec<f64>,
    /// The integrand vanishes outside `[support.0, support.1]`.
    #[serde(default = "full_support")]
    pub support: (f64, f64),
}

fn full_support() -> (f64, f64) {
    (0.0, f64::INFINITY)
}

impl SingularityHints {
    pub fn new(left_exponent: f64, decay_exponent: f64) -> Self {
        SingularityHints {
            breakpoints: Vec::new(),
            left_exponent,
            decay_exponent,
            scales: Vec::new(),
            support: full_support(),
        }
    }

    pub fn with_breakpoints(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.breakpoints.extend(points);
        self.normalize();
        self
    }

    pub fn with_scales(mut self, scales: impl IntoIterator<Item = f64>) -> Self {
        self.scales
            .extend(scales.into_iter().filter(|s| s.is_finite() && *s > 0.0));
        self
    }

    pub fn with_support(mut self, lo: f64, hi: f64) -> Self {
        self.support = (lo.max(0.0), hi);
        self.normalize();
        self
    }

    fn normalize(&mut self) {
        self.breakpoints.retain(|b| b.is_finite() && *b > 0.0);
        self.breakpoints.sort_by(f64::total_cmp);
        self.breakpoints.dedup();
    }

    /// True when the integrand is identically zero near 0.
    pub fn vanishes_near_zero(&self) -> bool {
        self.support.0 > 0.0
    }

    /// True when the integrand is identically zero for large arguments.
    pub fn vanishes_near_infinity(&self) -> bool {
        self.support.1.is_finite()
    }

    /// Check the convergence conditions `left_exponent > -1` and
    /// `decay_exponent > 1` at the ends that are not cut off by the support.
    pub fn check_convergence(&self) -> Result<()> {
        if !self.vanishes_near_zero() && !(self.left_exponent > -1.0) {
            return Err(Error::diverges(
                Endpoint::Zero,
                format!(
                    "integrand behaves like y^{} near 0 (needs exponent > -1)",
                    self.left_exponent
                ),
            ));
        }
        if !self.vanishes_near_infinity() && !(self.decay_exponent > 1.0) {
            return Err(Error::diverges(
                Endpoint::Infinity,
                format!(
                    "integrand decays like y^-{} (needs decay exponent > 1)",
                    self.decay_exponent
                ),
            ));
        }
        Ok(())
    }

    /// Hints for `y -> f(R y)`.
    pub fn dilated(&self, r: f64) -> Self {
        SingularityHints {
            breakpoints: self.breakpoints.iter().map(|b| b / r).collect(),
            left_exponent: self.left_exponent,
            decay_exponent: self.decay_exponent,
            scales: self.scales.iter().map(|s| s / r).collect(),
            support: (self.support.0 / r, self.support.1 / r),
        }
    }
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Cell<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
}

impl<V> PartialEq for Cell<V> {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl<V> Eq for Cell<V> {}

impl<V> PartialOrd for Cell<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V> Ord for Cell<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<V, F>(f: &F, a: f64, b: f64) -> Result<Cell<V>>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = fc.magnitude() * WGK[7];
    let mut samples = [(V::default(), V::default()); 7];
    for (j, sample) in samples.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        kronrod = kronrod + (f1 + f2) * WGK[j];
        resabs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
        *sample = (f1, f2);
    }
    let mean = kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).magnitude();
    for (j, (f1, f2)) in samples.iter().enumerate() {
        resasc += WGK[j] * ((*f1 - mean).magnitude() + (*f2 - mean).magnitude());
    }
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((kronrod - gauss) * half).magnitude();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Cell {
        a,
        b,
        value: kronrod * half,
        error,
    })
}

/// Globally adaptive Gauss-Kronrod over a set of initial intervals.
///
/// `offset` is a contribution computed elsewhere; it enters the relative
/// error target but is not returned.
fn adaptive_gk<V, F>(f: &F, intervals: &[(f64, f64)], tol: f64, offset: V) -> Result<(V, f64)>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    let mut heap = BinaryHeap::with_capacity(intervals.len() * 2);
    let mut total = V::default();
    let mut total_err = 0.0;
    for &(a, b) in intervals {
        if b > a {
            let cell = gk15(f, a, b)?;
            total = total + cell.value;
            total_err += cell.error;
            heap.push(cell);
        }
    }
    let mut cells = heap.len();
    loop {
        let target = tol * (total + offset).magnitude();
        if total_err <= target || total_err < PRECISION_FLOOR {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if cells >= MAX_CELLS || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            // whatever is left must be at the rounding floor to be accepted
            let floor: f64 = heap.iter().map(|c| c.error).sum();
            if floor <= 10.0 * target.max(1e-14 * (total + offset).magnitude()) {
                break;
            }
            return Err(Error::Accuracy {
                requested: tol,
                estimated: total_err / (total + offset).magnitude().max(f64::MIN_POSITIVE),
            });
        }
        let left = gk15(f, worst.a, mid)?;
        let right = gk15(f, mid, worst.b)?;
        total = total - worst.value + left.value + right.value;
        total_err = total_err - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        cells += 1;
    }
    // re-sum to shed accumulated cancellation from the running updates
    let mut sum = V::default();
    let mut err = 0.0;
    for c in heap.iter() {
        sum = sum + c.value;
        err += c.error;
    }
    Ok((sum, err))
}

// ---------------------------------------------------------------------------
// tanh-sinh

/// Abscissa offsets from the two ends and the weight of the node at `t`.
fn tanh_sinh_node(t: f64) -> (f64, f64, f64) {
    let u = FRAC_PI_2 * t.sinh();
    let cosh_u = u.cosh();
    let weight = FRAC_PI_2 * t.cosh() / (cosh_u * cosh_u);
    // distances (in units of the half width) from -1 and from +1
    let e = (-2.0 * u.abs()).exp();
    let near = 2.0 * e / (1.0 + e);
    let far = 2.0 / (1.0 + e);
    if u >= 0.0 {
        (far, near, weight)
    } else {
        (near, far, weight)
    }
}

/// Tanh-sinh quadrature on a finite interval; relative tolerance.
fn tanh_sinh<V, F>(f: &F, a: f64, b: f64, tol: f64) -> Result<(V, f64)>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    let half = 0.5 * (b - a);
    let eval = |t: f64| -> Result<V> {
        let (from_a, from_b, w) = tanh_sinh_node(t);
        if w == 0.0 {
            return Ok(V::default());
        }
        let x = if from_a <= from_b {
            a + half * from_a
        } else {
            b - half * from_b
        };
        if x <= a || x >= b {
            return Ok(V::default());
        }
        Ok(f(x)? * w)
    };
    let mut h = 1.0;
    let mut sum = eval(0.0)?;
    let mut k = 1;
    while (k as f64) * h <= TANH_SINH_T_MAX {
        let t = k as f64 * h;
        sum = sum + eval(t)? + eval(-t)?;
        k += 1;
    }
    let mut estimate = sum * (h * half);
    let mut last_diff = f64::INFINITY;
    for _level in 1..=TANH_SINH_MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= TANH_SINH_T_MAX {
            let t = k as f64 * h;
            sum = sum + eval(t)? + eval(-t)?;
            k += 2;
        }
        let next = sum * (h * half);
        let diff = (next - estimate).magnitude();
        estimate = next;
        let scale = estimate.magnitude();
        if diff <= tol * scale || diff < PRECISION_FLOOR {
            return Ok((estimate, diff));
        }
        // quadratic convergence: the error of this level is about diff^2 / last_diff
        if last_diff.is_finite() && diff < 1e-3 * last_diff && diff * diff / last_diff <= tol * scale {
            return Ok((estimate, diff * diff / last_diff));
        }
        last_diff = diff;
    }
    Err(Error::Accuracy {
        requested: tol,
        estimated: last_diff / estimate.magnitude().max(f64::MIN_POSITIVE),
    })
}

/// Tanh-sinh integral of `f` over `[a, b]` (endpoint singularities allowed).
pub fn integrate_interval<V, F>(f: F, a: f64, b: f64, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    try_integrate_interval(|x| Ok(f(x)), a, b, tol)
}

pub fn try_integrate_interval<V, F>(f: F, a: f64, b: f64, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("finite interval required"));
    }
    if a == b {
        return Ok(V::default());
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let checked = |x: f64| checked_eval(&f, x, x);
    Ok(tanh_sinh(&checked, lo, hi, tol)?.0 * sign)
}

/// Adaptive Gauss-Kronrod on a finite interval, for smooth integrands.
pub fn integrate_smooth<V, F>(f: F, a: f64, b: f64, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    if a == b {
        return Ok(V::default());
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let checked = |x: f64| checked_eval(&f, x, x);
    Ok(adaptive_gk(&checked, &[(lo, hi)], tol, V::default())?.0 * sign)
}

fn checked_eval<V: QuadValue, F: Fn(f64) -> Result<V>>(f: &F, x: f64, at: f64) -> Result<V> {
    let v = f(x)?;
    if v.finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite {
            at,
            value: v.magnitude(),
        })
    }
}

// ---------------------------------------------------------------------------
// half-line

/// `∫_0^∞ f(y) dy` to relative tolerance `tol`.
pub fn integrate_semiaxis<V, F>(f: F, hints: &SingularityHints, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    log_window(&|y| Ok(f(y)), hints, None, tol)
}

/// Fallible-integrand variant of [`integrate_semiaxis`].
pub fn try_integrate_semiaxis<V, F>(f: F, hints: &SingularityHints, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    log_window(&f, hints, None, tol)
}

/// `∫_0^cutoff f(y) dy`; the decay hint is not required to be > 1.
pub fn integrate_truncated<V, F>(f: F, hints: &SingularityHints, cutoff: f64, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    if !(cutoff > 0.0) {
        return Err(Error::domain(format!("cutoff must be positive, got {cutoff}")));
    }
    log_window(&f, hints, Some(cutoff), tol)
}

#[derive(Clone, Copy, PartialEq)]
enum Edge {
    Tail,
    Break,
}

fn log_window<V, F>(f: &F, hints: &SingularityHints, cutoff: Option<f64>, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut checks = hints.clone();
    if let Some(c) = cutoff {
        if c < checks.support.1 {
            checks.support.1 = c;
        }
    }
    checks.check_convergence()?;

    let mut anchors: Vec<f64> = hints
        .breakpoints
        .iter()
        .chain(hints.scales.iter())
        .copied()
        .filter(|v| v.is_finite() && *v > 0.0)
        .map(f64::ln)
        .collect();
    anchors.push(0.0);
    let lo_anchor = anchors.iter().copied().fold(f64::INFINITY, f64::min);
    let hi_anchor = anchors.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let (s_lo, left_edge) = if checks.vanishes_near_zero() {
        (checks.support.0.ln(), Edge::Break)
    } else {
        (lo_anchor - WINDOW_PAD, Edge::Tail)
    };
    let (s_hi, right_edge) = if checks.vanishes_near_infinity() {
        (checks.support.1.ln(), Edge::Break)
    } else {
        (hi_anchor + WINDOW_PAD, Edge::Tail)
    };
    if !(s_hi > s_lo) {
        return Ok(V::default());
    }

    // integrand in the log variable
    let g = |s: f64| -> Result<V> {
        let y = s.exp();
        checked_eval(f, y, y).map(|v| v * y)
    };

    let mut cuts = vec![(s_lo, left_edge)];
    for b in &hints.breakpoints {
        let s = b.ln();
        if s > s_lo && s < s_hi {
            cuts.push((s, Edge::Break));
        }
    }
    cuts.push((s_hi, right_edge));

    let mut fixed = V::default();
    let mut bulk = Vec::new();
    // Pieces touching a breakpoint go to tanh-sinh. An unmarked kink inside
    // or a panel that integrates to ~0 defeats it; those are bisected with
    // the bulk under the global error budget.
    let edge_piece = |a: f64, b: f64, fixed: &mut V, bulk: &mut Vec<(f64, f64)>| -> Result<()> {
        match tanh_sinh(&g, a, b, 0.1 * tol) {
            Ok((v, _)) => *fixed = *fixed + v,
            Err(Error::Accuracy { .. }) => bulk.push((a, b)),
            Err(e) => return Err(e),
        }
        Ok(())
    };
    for w in cuts.windows(2) {
        let (a, ea) = w[0];
        let (b, eb) = w[1];
        if b <= a {
            continue;
        }
        let mut lo = a;
        let mut hi = b;
        let width = b - a;
        if width <= 2.0 * EDGE_PIECE && (ea == Edge::Break || eb == Edge::Break) {
            edge_piece(a, b, &mut fixed, &mut bulk)?;
            continue;
        }
        if ea == Edge::Break {
            edge_piece(a, a + EDGE_PIECE, &mut fixed, &mut bulk)?;
            lo = a + EDGE_PIECE;
        }
        if eb == Edge::Break {
            edge_piece(b - EDGE_PIECE, b, &mut fixed, &mut bulk)?;
            hi = b - EDGE_PIECE;
        }
        let n = ((hi - lo) / CELL_WIDTH).ceil().max(1.0) as usize;
        let step = (hi - lo) / n as f64;
        for i in 0..n {
            let c0 = lo + step * i as f64;
            let c1 = if i + 1 == n { hi } else { c0 + step };
            bulk.push((c0, c1));
        }
    }

    let mut rough = fixed;
    if left_edge == Edge::Tail {
        rough = rough + rough_tail(tail(&g, s_lo, s_lo + TAIL_FIT_STEP, Endpoint::Zero, 0.0))?;
    }
    if right_edge == Edge::Tail {
        rough = rough + rough_tail(tail(&g, s_hi, s_hi - TAIL_FIT_STEP, Endpoint::Infinity, 0.0))?;
    }

    let (bulk_value, _) = adaptive_gk(&g, &bulk, tol, rough)?;
    let atol = 0.1 * tol * (bulk_value + rough).magnitude();
    let mut total = bulk_value + fixed;
    if left_edge == Edge::Tail {
        total = total + settled_tail(&g, s_lo, -1.0, atol, tol)?;
    }
    if right_edge == Edge::Tail {
        total = total + settled_tail(&g, s_hi, 1.0, atol, tol)?;
    }
    Ok(total)
}

/// Tail beyond `edge` (in direction `dir`), with the window pushed outward
/// until the exponential fit stops changing by more than `atol`.
///
/// Sub-leading power corrections make the local decay rate drift slowly;
/// for decay exponents close to 1 most of the mass sits in the tail, so the
/// fit has to be taken far enough out.
fn settled_tail<V, G>(g: &G, edge: f64, dir: f64, atol: f64, tol: f64) -> Result<V>
where
    V: QuadValue,
    G: Fn(f64) -> Result<V>,
{
    let endpoint = if dir > 0.0 { Endpoint::Infinity } else { Endpoint::Zero };
    let mut e = edge;
    let mut current: V = tail(g, e, e - dir * TAIL_FIT_STEP, endpoint, atol)?;
    let mut extension = V::default();
    if current.magnitude() <= atol {
        return Ok(current);
    }
    loop {
        let next = e + dir * TAIL_EXTENSION;
        if next.abs() > MAX_LOG_EXTENT {
            return Ok(extension + current);
        }
        let (lo, hi) = if dir > 0.0 { (e, next) } else { (next, e) };
        let cells: Vec<(f64, f64)> = (0..4)
            .map(|i| {
                let w = (hi - lo) / 4.0;
                (lo + w * i as f64, lo + w * (i + 1) as f64)
            })
            .collect();
        let (segment, _) = adaptive_gk(g, &cells, tol, current)?;
        let refit: V = tail(g, next, next - dir * TAIL_FIT_STEP, endpoint, atol)?;
        let change = (segment + refit - current).magnitude();
        extension = extension + segment;
        current = refit;
        e = next;
        if change <= atol {
            return Ok(extension + current);
        }
    }
}

/// The first tail estimate only sets the error scale, so an unfittable or
/// growing edge counts as zero there; [`settled_tail`] decides whether it
/// matters.
fn rough_tail<V: QuadValue>(t: Result<V>) -> Result<V> {
    match t {
        Err(Error::Accuracy { .. }) | Err(Error::Divergence { .. }) => Ok(V::default()),
        other => other,
    }
}

/// `negligible` is an absolute size below which an edge value that cannot
/// be fitted is treated as zero.
fn tail<V, G>(g: &G, edge: f64, inner: f64, endpoint: Endpoint, negligible: f64) -> Result<V>
where
    V: QuadValue,
    G: Fn(f64) -> Result<V>,
{
    let ge = g(edge)?;
    let gi = g(inner)?;
    match V::exponential_tail(ge, gi, (inner - edge).abs()) {
        Ok(Some(t)) => Ok(t),
        Ok(None) => {
            // sign change or zero inside: only acceptable when negligible
            if ge.magnitude() <= f64::EPSILON * gi.magnitude() || ge.magnitude() * TAIL_FIT_STEP <= negligible {
                Ok(V::default())
            } else {
                Err(Error::Accuracy {
                    requested: 0.0,
                    estimated: ge.magnitude(),
                })
            }
        }
        // growth far below the error budget is rounding noise in the integrand
        Err(()) if ge.magnitude() * TAIL_FIT_STEP <= negligible => Ok(V::default()),
        Err(()) => Err(Error::diverges(
            endpoint,
            format!(
                "integrand does not decay toward {endpoint} (|g| = {:e} at ln y = {edge}, {:e} at ln y = {inner})",
                ge.magnitude(),
                gi.magnitude()
            ),
        )),
    }
}

// ---------------------------------------------------------------------------
// real line and half-plane

/// What the integrator needs to know about an integrand on the real line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LineHints {
    /// Points of non-smoothness.
    pub breakpoints: Vec<f64>,
    /// Locations where the integrand has features (peaks, knees).
    pub centers: Vec<f64>,
    /// Characteristic widths of those features.
    pub widths: Vec<f64>,
    /// `|g(u)| ~ |u|^-decay` as `|u| -> inf`, when known.
    pub decay_exponent: Option<f64>,
    /// The integrand vanishes outside this interval.
    pub support: Option<(f64, f64)>,
}

/// `∫_R g(u) du`.
pub fn integrate_line<V, F>(g: F, hints: &LineHints, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V>,
{
    if let Some(d) = hints.decay_exponent {
        if !(d > 1.0) && hints.support.is_none() {
            return Err(Error::diverges(
                Endpoint::Infinity,
                format!("line integrand decays like |u|^-{d}"),
            ));
        }
    }
    let mut points: Vec<f64> = hints
        .breakpoints
        .iter()
        .copied()
        .filter(|b| b.is_finite())
        .collect();
    if let Some((lo, hi)) = hints.support {
        points.retain(|b| *b > lo && *b < hi);
        points.push(lo);
        points.push(hi);
    }
    if points.is_empty() {
        points.push(hints.centers.first().copied().unwrap_or(0.0));
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let mut total = V::default();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let local_scale = hints
            .widths
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
            .min(b - a);
        let n = (((b - a) / local_scale).ceil() as usize).clamp(1, 64);
        let step = (b - a) / n as f64;
        let cells: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let c0 = a + step * i as f64;
                (c0, if i + 1 == n { b } else { c0 + step })
            })
            .collect();
        let checked = |x: f64| checked_eval(&g, x, x);
        total = total + adaptive_gk(&checked, &cells, tol, V::default())?.0;
    }

    let half_line_scales = |origin: f64| -> Vec<f64> {
        hints
            .centers
            .iter()
            .map(|c| (c - origin).abs())
            .chain(hints.widths.iter().copied())
            .filter(|s| *s > 0.0)
            .collect()
    };
    let sub = SingularityHints::new(0.0, hints.decay_exponent.unwrap_or(2.0).max(1.0 + 1e-9));
    if hints.support.is_none() {
        let first = points[0];
        let last = points[points.len() - 1];
        let left_hints = sub.clone().with_scales(half_line_scales(first));
        total = total + log_window(&|w: f64| g(first - w), &left_hints, None, tol)?;
        let right_hints = sub.with_scales(half_line_scales(last));
        total = total + log_window(&|w: f64| g(last + w), &right_hints, None, tol)?;
    }
    Ok(total)
}

/// Iterated integral `∫_0^∞ ∫_R f(u, v) du dv` over the upper half-plane.
///
/// `line_hints(v)` describes the inner integrand at height `v`; `v_hints`
/// describes the outer integrand `v -> ∫ f(u, v) du`.
pub fn integrate_halfplane<V, F, H>(f: F, line_hints: H, v_hints: &SingularityHints, tol: f64) -> Result<V>
where
    V: QuadValue,
    F: Fn(f64, f64) -> Result<V>,
    H: Fn(f64) -> LineHints,
{
    let inner_tol = (0.01 * tol).max(1e-13);
    log_window(
        &|v: f64| integrate_line(|u| f(u, v), &line_hints(v), inner_tol),
        v_hints,
        None,
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn semiaxis_trivial_examples() {
        let h = SingularityHints::new(0.0, 2.0);
        let v: f64 = integrate_semiaxis(|y| (1.0 + y).powi(-2), &h, 1e-10).unwrap();
        assert!(rel(v, 1.0) < 1e-10, "{v}");

        let h = SingularityHints::new(-0.5, 1.5);
        let v: f64 = integrate_semiaxis(|y| y.powf(-0.5) / (1.0 + y), &h, 1e-10).unwrap();
        assert!(rel(v, PI) < 1e-10, "{v}");
    }

    #[test]
    fn semiaxis_beta_three_three() {
        let want = crate::specfun::beta(3.0, 3.0).unwrap();
        let h = SingularityHints::new(2.0, 4.0);
        let v: f64 = integrate_semiaxis(|y| y * y * (1.0 + y).powi(-6), &h, 1e-10).unwrap();
        assert!(rel(v, want) < 1e-10, "{v} vs {want}");
        assert!(rel(want, 1.0 / 30.0) < 1e-13);
    }

    #[test]
    fn near_critical_decay() {
        // ∫_1^∞ y^{-1.001} dy = 1000
        let h = SingularityHints::new(0.0, 1.001).with_support(1.0, f64::INFINITY);
        let v: f64 = integrate_semiaxis(|y| y.powf(-1.001), &h, 1e-10).unwrap();
        assert!(rel(v, 1000.0) < 1e-10, "{v}");
        // ∫_0^1 y^{-0.999} dy = 1000
        let h = SingularityHints::new(-0.999, 0.0).with_support(0.0, 1.0);
        let v: f64 = integrate_semiaxis(|y| y.powf(-0.999), &h, 1e-10).unwrap();
        assert!(rel(v, 1000.0) < 1e-10, "{v}");
    }

    #[test]
    fn divergence_signalled_from_hints() {
        let h = SingularityHints::new(-1.0, 2.0);
        let r: Result<f64> = integrate_semiaxis(|y| 1.0 / y, &h, 1e-10);
        assert!(matches!(r, Err(Error::Divergence { endpoint: Endpoint::Zero, .. })));
        let h = SingularityHints::new(0.0, 1.0);
        let r: Result<f64> = integrate_semiaxis(|y| 1.0 / (1.0 + y), &h, 1e-10);
        assert!(matches!(r, Err(Error::Divergence { endpoint: Endpoint::Infinity, .. })));
    }

    #[test]
    fn divergence_detected_numerically_with_wrong_hints() {
        let h = SingularityHints::new(0.0, 2.0);
        let r: Result<f64> = integrate_semiaxis(|y| 1.0 / (1.0 + y).sqrt(), &h, 1e-10);
        assert!(matches!(r, Err(Error::Divergence { endpoint: Endpoint::Infinity, .. })), "{r:?}");
    }

    #[test]
    fn indicator_pieces() {
        // ∫_1^2 1/(1+y) dy = ln(3/2)
        let h = SingularityHints::new(0.0, 2.0).with_support(1.0, 2.0);
        let v: f64 = integrate_semiaxis(|y| 1.0 / (1.0 + y), &h, 1e-12).unwrap();
        assert!(rel(v, 1.5f64.ln()) < 1e-12, "{v}");

        // a jump at 3 inside the support
        let h = SingularityHints::new(0.0, f64::INFINITY)
            .with_breakpoints([3.0])
            .with_support(0.0, 5.0);
        let v: f64 = integrate_semiaxis(|y| if y <= 3.0 { 1.0 } else { 2.0 }, &h, 1e-12).unwrap();
        assert!(rel(v, 7.0) < 1e-12, "{v}");
    }

    #[test]
    fn truncated_integral() {
        let h = SingularityHints::new(0.0, 1.0);
        let v: f64 = integrate_truncated(|y| Ok(1.0 / (1.0 + y)), &h, 1e6, 1e-12).unwrap();
        assert!(rel(v, (1.0f64 + 1e6).ln()) < 1e-12, "{v}");
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let v: f64 = integrate_interval(|x| x.powf(-0.5), 0.0, 1.0, 1e-12).unwrap();
        assert!(rel(v, 2.0) < 1e-9, "{v}");
        let v: f64 = integrate_interval(|x| (1.0 - x * x).sqrt(), -1.0, 1.0, 1e-12).unwrap();
        assert!(rel(v, PI / 2.0) < 1e-12, "{v}");
    }

    #[test]
    fn complex_semiaxis() {
        // ∫_0^∞ (y + i)^{-2} dy = 1/i = -i
        let h = SingularityHints::new(0.0, 2.0);
        let v: Complex64 =
            integrate_semiaxis(|y| (Complex64::new(y, 1.0)).powi(-2), &h, 1e-10).unwrap();
        assert!((v - Complex64::new(0.0, -1.0)).norm() < 1e-10, "{v}");
    }

    #[test]
    fn line_integral_lorentzian() {
        let hints = LineHints {
            centers: vec![3.0],
            widths: vec![0.5],
            decay_exponent: Some(2.0),
            ..Default::default()
        };
        // ∫ 1/((u-3)^2 + 1/4) du = 2π
        let v: f64 = integrate_line(|u| Ok(1.0 / ((u - 3.0).powi(2) + 0.25)), &hints, 1e-11).unwrap();
        assert!(rel(v, 2.0 * PI) < 1e-11, "{v}");
    }

    #[test]
    fn halfplane_examples() {
        // ∬ |u + i(1+v)|^{-3} = B(1/2, 1) ∫ (1+v)^{-2} dv = 2
        let lh = |v: f64| LineHints {
            centers: vec![0.0],
            widths: vec![1.0 + v],
            decay_exponent: Some(3.0),
            ..Default::default()
        };
        let vh = SingularityHints::new(0.0, 2.0);
        let val: f64 = integrate_halfplane(
            |u, v| Ok((u * u + (1.0 + v).powi(2)).powf(-1.5)),
            lh,
            &vh,
            1e-6,
        )
        .unwrap();
        assert!(rel(val, 2.0) < 1e-6, "{val}");

        let lh = |v: f64| LineHints {
            centers: vec![0.0],
            widths: vec![1.0 + v],
            decay_exponent: Some(5.0),
            ..Default::default()
        };
        let vh = SingularityHints::new(1.0, 3.0);
        let val: f64 = integrate_halfplane(
            |u, v| Ok(v * (u * u + (1.0 + v).powi(2)).powf(-2.5)),
            lh,
            &vh,
            1e-6,
        )
        .unwrap();
        assert!(rel(val, 2.0 / 9.0) < 1e-6, "{val}");
    }

    #[test]
    fn halfplane_box_is_zero_outside() {
        let lh = |_v: f64| LineHints {
            breakpoints: vec![-0.25, 0.25],
            support: Some((-0.25, 0.25)),
            ..Default::default()
        };
        let vh = SingularityHints::new(0.0, 2.0).with_support(1.0, 2.0);
        let val: f64 = integrate_halfplane(|_u, _v| Ok(0.0), lh, &vh, 1e-6).unwrap();
        assert_eq!(val, 0.0);
        let val: f64 = integrate_halfplane(|_u, _v| Ok(1.0), lh, &vh, 1e-6).unwrap();
        assert!(rel(val, 0.5) < 1e-12);
    }
}
