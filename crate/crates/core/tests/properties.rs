mod common;

use oplab::bergman::{mixed_norm, MixedNormSpec};
use oplab::conditions::Exponent;
use oplab::func::{Dilated, Dilated2D, Func1D};
use oplab::funcdsl::{parse, Expr, ExprFunc1D, ExprFunc2D, Fun, Var};
use oplab::hilbert::{
    adjoint_form, apply_h, apply_h_adjoint, dilation_residual, direct_form, hilbert_verdict, sharp_norm,
    weighted_lp_norm, OperatorParams, WeightedSpaceSpec,
};
use oplab::quad::{try_integrate_semiaxis, SingularityHints};
use oplab::schur::{find_certificate, verify_certificate, CertificateInput};
use oplab::specfun::{beta, log_gamma};
use proptest::prelude::*;

fn ex(p: f64) -> Exponent {
    Exponent::new(p).unwrap()
}

fn corpus_fn() -> impl Strategy<Value = &'static str> {
    prop::sample::select(common::CORPUS.to_vec())
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0.0..100.0f64).prop_map(Expr::Num),
        Just(Expr::Var(Var::X)),
        Just(Expr::Var(Var::Y)),
        (0.0..5.0f64, 5.0..10.0f64).prop_map(|(lo, hi)| Expr::Ind { var: Var::X, lo, hi }),
        (0.0..5.0f64).prop_map(|lo| Expr::Ind {
            var: Var::Y,
            lo,
            hi: f64::INFINITY
        }),
    ];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner.clone(), -3.0..3.0f64).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            (inner, prop::sample::select(vec![Fun::Exp, Fun::Log, Fun::Abs]))
                .prop_map(|(a, f)| Expr::Call(f, Box::new(a))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn beta_symmetry_and_pascal(m in 0.05..20.0f64, n in 0.05..20.0f64) {
        let b = beta(m, n).unwrap();
        prop_assert!((b - beta(n, m).unwrap()).abs() <= 1e-14 * b);
        let sum = beta(m + 1.0, n).unwrap() + beta(m, n + 1.0).unwrap();
        prop_assert!((b - sum).abs() <= 1e-12 * b, "{} vs {}", b, sum);
    }

    #[test]
    fn gamma_recurrence(x in 1e-3..50.0f64) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn conjugate_is_an_involution(p in 1.0..1e6f64) {
        let e = ex(p);
        let back = e.conjugate().conjugate().value();
        prop_assert!((back - p).abs() <= 1e-9 * p);
        prop_assert!((e.recip() + e.conjugate_recip() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn condition_forms_agree_under_the_relation(
        p in 1.0..6.0f64, dq in 0.0..4.0f64, a in -0.99..3.0f64, b in -0.99..3.0f64,
        alpha in -2.0..3.0f64, beta_ in -2.0..3.0f64,
    ) {
        let q = p + dq;
        let gamma = alpha + beta_ + 1.0 + (b + 1.0) / q - (a + 1.0) / p;
        let params = OperatorParams { alpha, beta: beta_, gamma };
        let d = direct_form(p, a, &params);
        let j = adjoint_form(q, b, &params);
        let margin = d.iter().chain(&j).map(|i| (i.rhs - i.lhs).abs()).fold(f64::INFINITY, f64::min);
        prop_assume!(margin > 1e-9);
        prop_assert_eq!(d.iter().all(|i| i.holds), j.iter().all(|i| i.holds));
    }

    #[test]
    fn display_parse_round_trip(e in expr()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, e, "{}", text);
    }

    #[test]
    fn operator_is_linear(f in corpus_fn(), g in corpus_fn(), c in -3.0..3.0f64, x in 0.05..20.0f64) {
        let params = OperatorParams::new(0.3, 0.2, 1.5).unwrap();
        let sum = ExprFunc1D::parse(&format!("({f}) + {c} * ({g})")).unwrap();
        let lhs = apply_h(&params, &sum, x, 1e-11).unwrap();
        let hf = apply_h(&params, &ExprFunc1D::parse(f).unwrap(), x, 1e-11).unwrap();
        let hg = apply_h(&params, &ExprFunc1D::parse(g).unwrap(), x, 1e-11).unwrap();
        let rhs = hf + c * hg;
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + hf.abs() + (c * hg).abs()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn dilation_covariance(
        f in corpus_fn(), r in 0.1..10.0f64,
        alpha in -0.5..1.0f64, beta_ in -0.5..1.0f64, gamma in 0.6..3.0f64,
    ) {
        let params = OperatorParams::new(alpha, beta_, gamma).unwrap();
        let f = ExprFunc1D::parse(f).unwrap();
        let res = dilation_residual(&params, &f, r, &[0.2, 1.0, 5.0], 1e-11).unwrap();
        prop_assert!(res <= 1e-9, "residual {}", res);
    }

    #[test]
    fn input_norm_scales_under_dilation(f in corpus_fn(), r in 0.1..10.0f64, p in 1.0..5.0f64, a in -0.9..2.0f64) {
        let f = ExprFunc1D::parse(f).unwrap();
        let space = WeightedSpaceSpec::lp(p, a).unwrap();
        let n = weighted_lp_norm(&f, &space, 1e-11).unwrap();
        let nr = weighted_lp_norm(&Dilated { inner: &f, r }, &space, 1e-11).unwrap();
        let want = r.powf(-(a + 1.0) / p) * n;
        prop_assert!((nr - want).abs() <= 1e-9 * want);
    }

    #[test]
    fn adjoint_duality(f in corpus_fn(), g in corpus_fn(), a in -0.5..1.5f64, b in -0.5..1.5f64) {
        let params = OperatorParams::new(0.3, 0.2, 1.5).unwrap();
        let f = ExprFunc1D::parse(f).unwrap();
        let g = ExprFunc1D::parse(g).unwrap();
        let pair = |u: &dyn Func1D, v: &ExprFunc1D, w: f64| -> f64 {
            let h = v.hints();
            let mut hints = SingularityHints::new(h.left_exponent, h.decay_exponent);
            hints.breakpoints = h.breakpoints.clone();
            hints.support = h.support;
            try_integrate_semiaxis(|x| Ok(u.eval(x)? * v.eval(x)? * x.powf(w)), &hints, 1e-11).unwrap()
        };
        let hf = oplab::func::func1d(|x| apply_h(&params, &f, x, 1e-13).unwrap(), f.hints());
        let hg = oplab::func::func1d(|y| apply_h_adjoint(&params, a, b, &g, y, 1e-13).unwrap(), g.hints());
        let lhs = pair(&hf, &g, b);
        let rhs = pair(&hg, &f, a);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn mixed_norm_dilation_law(
        src in prop::sample::select(common::CORPUS_2D.to_vec()),
        r in 0.2..5.0f64, p in 1.0..4.0f64, q in 1.0..4.0f64, nu in -0.5..2.0f64,
    ) {
        let f = ExprFunc2D::parse(src).unwrap();
        let spec = MixedNormSpec::new(ex(p), ex(q), Some(nu)).unwrap();
        let n = mixed_norm(&f, &spec, 1e-9).unwrap();
        let nr = mixed_norm(&Dilated2D { inner: &f, r }, &spec, 1e-9).unwrap();
        let want = r.powf(spec.dilation_exponent()) * n;
        prop_assert!((nr - want).abs() <= 1e-6 * want, "{} vs {}", nr, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn accepted_tuples_have_valid_certificates(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let t = common::random_balanced(&mut rng);
        let (p, q) = (ex(t.p), ex(t.q));
        let verdict = hilbert_verdict(p, q, t.a, t.b, &t.params).unwrap();
        prop_assume!(verdict.is_bounded());
        let c = find_certificate(p, q, t.a, t.b, &t.params).unwrap();
        let input = CertificateInput { p, q, a: t.a, b: t.b, params: t.params };
        verify_certificate(&c, &input, 12, 1e-8).unwrap();
    }

    #[test]
    fn certificate_dominates_sharp_norm(p in 1.1..5.0f64, a in -0.9..2.0f64, alpha in -0.5..1.5f64, beta_ in -0.5..1.5f64) {
        let params = OperatorParams::new(alpha, beta_, alpha + beta_ + 1.0).unwrap();
        let verdict = hilbert_verdict(ex(p), ex(p), a, a, &params).unwrap();
        prop_assume!(verdict.is_bounded());
        let c = find_certificate(ex(p), ex(p), a, a, &params).unwrap();
        let sharp = sharp_norm(&WeightedSpaceSpec::lp(p, a).unwrap(), &params).unwrap();
        prop_assert!(c.bound >= sharp - 1e-12, "{} < {}", c.bound, sharp);
    }
}
