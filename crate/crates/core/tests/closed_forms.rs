//! Closed forms and stated constants for the half-line and half-plane
//! operators.

use std::f64::consts::PI;

use oplab::bergman::{
    apply_tplus, bergman_verdict, mixed_norm, projection_constant, tplus_exact_norm, BergmanOperator,
    BergmanVerdictRequest, EndpointCase, HalfPlanePoint, MixedNormSpec,
};
use oplab::conditions::Exponent;
use oplab::func::{BoxFunction, Dilated, Dilated2D, Indicator, Modulus, One, ShiftedPower, TruncatedPower};
use oplab::hilbert::{hilbert_verdict, sharp_norm, weighted_lp_norm, OperatorParams, WeightedSpaceSpec};
use oplab::schur::{sup_test_l1, sup_test_linf};
use oplab::specfun::beta;

fn ex(p: f64) -> Exponent {
    Exponent::new(p).unwrap()
}

#[test]
fn classical_hilbert_is_bounded_with_norm_pi_over_sine() {
    let v = hilbert_verdict(ex(2.0), ex(2.0), 0.0, 0.0, &OperatorParams::CLASSICAL).unwrap();
    assert!(v.is_bounded());
    let s2 = sharp_norm(&WeightedSpaceSpec::lp(2.0, 0.0).unwrap(), &OperatorParams::CLASSICAL).unwrap();
    assert!((s2 - PI).abs() < 1e-13);
    let s4 = sharp_norm(&WeightedSpaceSpec::lp(4.0, 0.0).unwrap(), &OperatorParams::CLASSICAL).unwrap();
    assert!((s4 - PI * 2f64.sqrt()).abs() < 1e-12);
    for p in [1.1, 4.0 / 3.0, 3.0, 10.0] {
        let s = sharp_norm(&WeightedSpaceSpec::lp(p, 0.0).unwrap(), &OperatorParams::CLASSICAL).unwrap();
        assert!((s / (PI / (PI / p).sin()) - 1.0).abs() < 1e-12, "p={p}");
    }
}

#[test]
fn sharp_norm_is_a_beta_value() {
    // B(β+1-(a+1)/p, α+(a+1)/p) on the diagonal γ = α+β+1
    let params = OperatorParams::new(0.3, 0.2, 1.5).unwrap();
    let (p, a) = (3.0, 0.4);
    let s = sharp_norm(&WeightedSpaceSpec::lp(p, a).unwrap(), &params).unwrap();
    let c = (a + 1.0) / p;
    assert!((s - beta(1.2 - c, 0.3 + c).unwrap()).abs() < 1e-13);
}

#[test]
fn extremal_function_norm() {
    let (p, xi) = (2.0, 0.01);
    let f = TruncatedPower { exponent: (1.0 + xi) / p };
    let n = weighted_lp_norm(&f, &WeightedSpaceSpec::lp(p, 0.0).unwrap(), 1e-12).unwrap();
    assert!((n - 10.0).abs() < 1e-8, "{n}");
}

#[test]
fn dilated_norm_identity() {
    let f = Indicator { lo: 1.0, hi: 2.0 };
    let space = WeightedSpaceSpec::lp(2.0, 0.5).unwrap();
    let n = weighted_lp_norm(&f, &space, 1e-12).unwrap();
    let nr = weighted_lp_norm(&Dilated { inner: f, r: 3.0 }, &space, 1e-12).unwrap();
    assert!((nr.powi(2) - 3f64.powf(-1.5) * n.powi(2)).abs() < 1e-9);
}

#[test]
fn tplus_of_one_is_a_beta_product() {
    for (a, b) in [(1.0, 0.0), (0.5, -0.5), (0.25, 0.5)] {
        let g = a + b + 1.0;
        let params = OperatorParams::new(a, b, g).unwrap();
        let want = beta(0.5, g / 2.0).unwrap() * beta(b + 1.0, a).unwrap();
        assert!((tplus_exact_norm(EndpointCase::Linf, &params, 0.0).unwrap() - want).abs() < 1e-12);
        for z in [HalfPlanePoint { x: 0.0, y: 1.0 }, HalfPlanePoint { x: -2.0, y: 0.3 }] {
            let v = apply_tplus(&params, &One, &z, 1e-7).unwrap();
            assert!((v / want - 1.0).abs() < 1e-5, "({a},{b}) at {z:?}: {v} vs {want}");
        }
    }
}

#[test]
fn weighted_l1_norm_of_tplus() {
    let params = OperatorParams::new(0.0, 1.0, 2.0).unwrap();
    let v = tplus_exact_norm(EndpointCase::L1, &params, 0.0).unwrap();
    assert!((v - beta(0.5, 1.0).unwrap() * beta(1.0, 1.0).unwrap()).abs() < 1e-13);
}

#[test]
fn sup_tests_are_flat() {
    let params = OperatorParams::new(0.0, 1.0, 2.0).unwrap();
    let grid = [0.1, 1.0, 10.0];
    let r = sup_test_l1(&params, 0.0, &grid, 1e-10).unwrap();
    assert!(r.spread <= 1e-8, "{r:?}");
    let params = OperatorParams::new(0.5, 0.5, 2.0).unwrap();
    let r = sup_test_linf(&params, &grid, 1e-10).unwrap();
    assert!(r.spread <= 1e-8, "{r:?}");
}

#[test]
fn shifted_power_mixed_norm() {
    // ‖f‖² = B(1/2, 3/2) ∫_0^∞ (1+v)^-3 dv = π/4 for ((w+i)/i)^-2
    let f = Modulus(ShiftedPower { order: 2.0, t: 1.0 });
    let spec = MixedNormSpec::new(ex(2.0), ex(2.0), Some(0.0)).unwrap();
    let n = mixed_norm(&f, &spec, 1e-10).unwrap();
    assert!((n * n - PI / 4.0).abs() < 1e-8, "{}", n * n);
}

#[test]
fn box_mixed_norm_dilation() {
    let f = BoxFunction::standard();
    let spec = MixedNormSpec::new(ex(2.0), ex(3.0), Some(0.5)).unwrap();
    let n = mixed_norm(&f, &spec, 1e-10).unwrap();
    let nr = mixed_norm(&Dilated2D { inner: f, r: 2.0 }, &spec, 1e-10).unwrap();
    let want = 2f64.powf(-1.5 / 3.0 - 0.5) * n;
    assert!((nr - want).abs() < 1e-6 * want);
}

#[test]
fn projection_constant_at_zero_weight() {
    let c = projection_constant(0.0);
    assert!((c.norm() - 1.0 / PI).abs() < 1e-15);
    // with the principal-branch kernel the sign is negative
    assert!((c.re + 1.0 / PI).abs() < 1e-15 && c.im.abs() < 1e-15);
}

#[test]
fn stated_bounded_regimes() {
    let s1 = MixedNormSpec::new(ex(2.0), Exponent::ONE, Some(0.0)).unwrap();
    let proj = BergmanVerdictRequest {
        operator: BergmanOperator::Projection,
        source: s1,
        target: s1,
        params: OperatorParams::new(0.0, 0.5, 1.5).unwrap(),
    };
    assert!(bergman_verdict(&proj).unwrap().is_bounded());
    let mut at_zero = proj;
    at_zero.params = OperatorParams::new(0.0, 0.0, 1.0).unwrap();
    assert!(!bergman_verdict(&at_zero).unwrap().is_bounded());

    let sinf = MixedNormSpec::new(ex(2.0), Exponent::INF, None).unwrap();
    let tplus = BergmanVerdictRequest {
        operator: BergmanOperator::TPlus,
        source: sinf,
        target: sinf,
        params: OperatorParams::new(0.5, -0.5, 1.0).unwrap(),
    };
    assert!(bergman_verdict(&tplus).unwrap().is_bounded());
}
