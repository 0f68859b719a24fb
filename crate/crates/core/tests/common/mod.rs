#![allow(dead_code)]

use oplab::funcdsl::ExprFunc1D;
use oplab::hilbert::OperatorParams;
use rand::Rng;

/// Test functions, all supported in compact intervals away from 0.
pub const CORPUS: [&str; 20] = [
    "ind(x, 1, 2)",
    "ind(x, 0.5, 3)",
    "ind(x, 0.1, 0.2)",
    "ind(x, 5, 50)",
    "x * ind(x, 1, 4)",
    "x^2 * ind(x, 0.2, 1)",
    "x^-0.5 * ind(x, 0.3, 2)",
    "exp(-x) * ind(x, 0.5, 5)",
    "log(x) * ind(x, 1, 3)",
    "abs(log(x)) * ind(x, 0.25, 4)",
    "(1 + x)^-1 * ind(x, 0.1, 10)",
    "ind(x, 1, 2) + 2 * ind(x, 3, 4)",
    "ind(x, 1, 2) - ind(x, 2, 3)",
    "exp(-x^2) * ind(x, 0.5, 2.5)",
    "x^3 * ind(x, 0.5, 1.5)",
    "(x - 1)^2 * ind(x, 0.5, 2)",
    "ind(x, 0.01, 0.02)",
    "ind(x, 100, 200)",
    "x^-1.5 * ind(x, 2, 20)",
    "exp(x) * ind(x, 1, 2)",
];

pub fn corpus() -> Vec<ExprFunc1D> {
    CORPUS.iter().map(|s| ExprFunc1D::parse(s).unwrap()).collect()
}

/// A tuple `(p, q, a, b, params)` with `γ` set by the balance relation.
#[derive(Debug, Clone, Copy)]
pub struct Tuple {
    pub p: f64,
    pub q: f64,
    pub a: f64,
    pub b: f64,
    pub params: OperatorParams,
}

pub fn random_balanced<R: Rng>(rng: &mut R) -> Tuple {
    let p = rng.gen_range(1.05..4.0);
    let q = rng.gen_range(p..6.0);
    let a = rng.gen_range(-0.9..2.0);
    let b = rng.gen_range(-0.9..2.0);
    let alpha = rng.gen_range(-1.0..2.0);
    let beta = rng.gen_range(-1.0..2.0);
    let gamma = alpha + beta + 1.0 - (a + 1.0) / p + (b + 1.0) / q;
    Tuple {
        p,
        q,
        a,
        b,
        params: OperatorParams { alpha, beta, gamma },
    }
}

/// Half-plane test functions in the variables `x + iy`.
pub const CORPUS_2D: [&str; 6] = [
    "ind(x, -1, 1) * ind(y, 1, 2)",
    "exp(-x^2) * exp(-y)",
    "(1 + x^2)^-1 * y * exp(-y)",
    "exp(-abs(x)) * ind(y, 0.5, 3)",
    "ind(x, 0, 2) * y^2 * ind(y, 0.25, 1)",
    "(1 + x^2 + y^2)^-2",
];
