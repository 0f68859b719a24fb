//! Values computed independently with mpmath (tools/oracles.py, 40 digits)
//! and frozen here.

#![allow(clippy::excessive_precision)]

use oplab::bergman::{apply_t, apply_tplus, HalfPlanePoint};
use oplab::conditions::Exponent;
use oplab::func::{AsComplex, BoxFunction, TruncatedPower};
use oplab::funcdsl::ExprFunc1D;
use oplab::hilbert::{
    apply_h, apply_h_adjoint, extremal_quotient, weighted_lp_norm, OperatorParams, WeightedSpaceSpec,
};
use oplab::schur::find_certificate;

fn params(a: f64, b: f64, g: f64) -> OperatorParams {
    OperatorParams::new(a, b, g).unwrap()
}

fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let err = (got - want).abs() / want.abs().max(1e-300);
    assert!(err <= tol, "{what}: got {got}, want {want} (rel {err:.2e})");
}

#[test]
fn extremal_quotients_classical_kernel() {
    let table = [
        (4.0 / 3.0, [3.9874372275593262, 4.3931153262636396, 4.4378597119713207]),
        (4.0, [3.9874372275593262, 4.3931153262636396, 4.4378597119713207]),
        (2.0, [2.8103706339243824, 3.1053376919537989, 3.1379326630458718]),
    ];
    for (p, values) in table {
        let space = WeightedSpaceSpec::lp(p, 0.0).unwrap();
        for (xi, want) in [0.1, 0.01, 0.001].into_iter().zip(values) {
            let r = extremal_quotient(&space, &OperatorParams::CLASSICAL, xi, 1e-10).unwrap();
            assert_rel(r.quotient, want, 1e-7, &format!("p={p} xi={xi}"));
            assert!(r.lower_bound <= r.quotient + 1e-9 && r.quotient <= r.sharp + 1e-9);
        }
    }
}

#[test]
fn operator_on_truncated_power() {
    let table = [
        ((0.3, 0.2, 1.5, 0.75), [0.56338021631157112, 0.48419030213086095, 0.25032563053325812]),
        ((0.0, 0.0, 1.0, 0.5), [1.7408395027342064, 1.3510217177120799, 0.79975201011153227]),
        ((-0.2, 0.4, 0.9, 0.6), [11.105861106697966, 7.9257307490512249, 5.0990589736087437]),
    ];
    for ((a, b, g, c), values) in table {
        let f = TruncatedPower { exponent: c };
        for (x, want) in [0.5, 2.0, 10.0].into_iter().zip(values) {
            let got = apply_h(&params(a, b, g), &f, x, 1e-11).unwrap();
            assert_rel(got, want, 1e-9, &format!("({a},{b},{g},{c}) at {x}"));
        }
    }
}

#[test]
fn adjoint_of_exponential() {
    let f = ExprFunc1D::parse("exp(-x)").unwrap();
    let table = [
        ((0.3, 0.2, 1.5, 0.1, -0.3), [0.90866713523867638, 0.23836392361115289]),
        ((0.0, 0.0, 1.0, 0.0, 0.0), [0.92291063248373047, 0.36132861688822258]),
    ];
    for ((al, be, g, a, b), values) in table {
        for (y, want) in [0.5, 2.0].into_iter().zip(values) {
            let got = apply_h_adjoint(&params(al, be, g), a, b, &f, y, 1e-11).unwrap();
            assert_rel(got, want, 1e-9, &format!("adjoint at {y}"));
        }
    }
}

#[test]
fn box_under_half_plane_operators() {
    let table = [
        ((0.0, 1.0), 0.083030008136459618, -0.08242752531664041, 0.0),
        ((1.0, 0.5), 0.10370622155864346, -0.058899852672958056, -0.083622759664917034),
        ((-1.0, 2.0), 0.038343332469439468, -0.032275538193620722, 0.020417975091557226),
        ((0.0, 0.5), 0.13253609769364803, -0.13096004984692962, 0.0),
    ];
    let f = BoxFunction::standard();
    for ((x, y), tplus, re, im) in table {
        let z = HalfPlanePoint { x, y };
        let got = apply_tplus(&OperatorParams::CLASSICAL, &f, &z, 1e-9).unwrap();
        assert_rel(got, tplus, 1e-7, &format!("T+ at ({x},{y})"));
        let t = apply_t(&OperatorParams::CLASSICAL, &AsComplex(f), &z, 1e-9).unwrap();
        assert!((t.re - re).abs() < 1e-8, "Re T at ({x},{y}): {} vs {re}", t.re);
        assert!((t.im - im).abs() < 1e-8, "Im T at ({x},{y}): {} vs {im}", t.im);
    }
}

#[test]
fn weighted_norms_of_exponential() {
    let f = ExprFunc1D::parse("exp(-x)").unwrap();
    for (p, a, want) in [(3.0, 0.5, 0.55456742130601644), (1.5, -0.5, 1.2794388617850087), (2.0, 2.0, 0.5)] {
        let space = WeightedSpaceSpec::lp(p, a).unwrap();
        assert_rel(weighted_lp_norm(&f, &space, 1e-12).unwrap(), want, 1e-11, &format!("p={p} a={a}"));
    }
}

#[test]
fn certificates_match_independent_scan() {
    #[rustfmt::skip]
    let table = [
        ((2.0, 2.0, 0.0, 0.0, 0.0, 0.0, 1.0),
         [0.00048780487804878049, 0.50048780487804878, 0.24975609756097561, 0.25024390243902439,
          1.7712559962577574, 1.7736532098714151, 3.1415938832665626]),
        ((1.5, 3.0, 0.2, -0.4, 0.3, 0.1, 0.8),
         [0.0001951219512195122, 0.6669918699186993, 0.16650406504065038, 0.1666991869918699,
          1.2353465016405852, 1.6174445070537908, 1.9981044133866813]),
        ((1.0, 2.0, 0.0, 0.0, 0.25, 0.5, 1.25),
         [0.00048780487804878049, 0.00097560975609756098, -0.00012195121951219512, 0.00036585365853658537,
          0.99915505572690983, 0.81746670482910417, 0.81677599101841693]),
        ((3.0, 3.0, 1.0, 1.0, 0.5, 0.5, 2.0),
         [0.00065040650406504065, 0.66699186991869919, 0.49951219512195122, 0.50016260162601626,
          1.0717620747257562, 1.0006507308712142, 1.0724595033943769]),
    ];
    for ((p, q, a, b, al, be, g), [d, t, s, r, m1, m2, bound]) in table {
        let c = find_certificate(
            Exponent::new(p).unwrap(),
            Exponent::new(q).unwrap(),
            a,
            b,
            &params(al, be, g),
        )
        .unwrap();
        let tag = format!("({p},{q},{a},{b},{al},{be},{g})");
        for (got, want, name) in [(c.d, d, "d"), (c.t, t, "t"), (c.s, s, "s"), (c.r, r, "r")] {
            assert!((got - want).abs() < 1e-12, "{tag} {name}: {got} vs {want}");
        }
        assert_rel(c.m1, m1, 1e-11, &format!("{tag} M1"));
        assert_rel(c.m2, m2, 1e-11, &format!("{tag} M2"));
        assert_rel(c.bound, bound, 1e-11, &format!("{tag} bound"));
    }
}
