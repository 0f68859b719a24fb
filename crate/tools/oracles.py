"""Reference values for the integration tests, computed with mpmath.

Run `python3 tools/oracles.py` and paste the printed tables into
crates/core/tests/oracles.rs when a value needs regenerating.
"""
import mpmath as mp

mp.mp.dps = 40


def show(name, rows):
    print(f"// {name}")
    for r in rows:
        print("    (" + ", ".join(mp.nstr(v, 17) if not isinstance(v, str) else v for v in r) + "),")


# extremal quotients for the classical kernel: quotient = xi * <g, H f>
def pairing(p, xi):
    c = (1 + xi) / p
    G = lambda u: mp.beta(1 - c, c) - u ** (1 - c) / (1 - c) * mp.hyp2f1(1, 1 - c, 2 - c, -u)
    f = lambda s: mp.exp(-xi * s) * G(mp.exp(-s))
    pts = [0, 1, 10, 100, 1000, 10000, 100000, mp.inf]
    return mp.quad(f, pts)


rows = []
for p in [mp.mpf(4) / 3, mp.mpf(2), mp.mpf(4)]:
    for xi in [mp.mpf("0.1"), mp.mpf("0.01"), mp.mpf("0.001")]:
        rows.append((p, xi, xi * pairing(p, xi)))
show("extremal (p, xi, quotient)", rows)

# H_{α,β,γ} applied to x^{-c} on [1, ∞)
def h_trunc(al, be, ga, c, x):
    # y = 1/u turns the slowly decaying tail into a 2F1 integral on (0, 1)
    e = c - be + ga - 1
    return x ** al * mp.hyp2f1(ga, e, e + 1, -x) / e


rows = []
for (al, be, ga, c) in [(0.3, 0.2, 1.5, 0.75), (0, 0, 1, 0.5), (-0.2, 0.4, 0.9, 0.6)]:
    for x in [0.5, 2, 10]:
        al_, be_, ga_, c_, x_ = map(mp.mpf, map(str, (al, be, ga, c, x)))
        rows.append((al_, be_, ga_, c_, x_, h_trunc(al_, be_, ga_, c_, x_)))
show("apply_h truncated power (alpha, beta, gamma, c, x, value)", rows)

# adjoint: y^{β-a} ∫ f(x) x^{α+b} (x+y)^{-γ} dx with f = exp(-x)
rows = []
for (al, be, ga, a, b) in [(0.3, 0.2, 1.5, 0.1, -0.3), (0, 0, 1, 0, 0)]:
    for y in [0.5, 2]:
        al_, be_, ga_, a_, b_, y_ = map(mp.mpf, map(str, (al, be, ga, a, b, y)))
        v = y_ ** (be_ - a_) * mp.quad(lambda x: mp.exp(-x) * x ** (al_ + b_) * (x + y_) ** (-ga_), [0, 1, mp.inf])
        rows.append((al_, be_, ga_, a_, b_, y_, v))
show("adjoint of exp(-x) (alpha, beta, gamma, a, b, y, value)", rows)

# T+ of the box [-1/4,1/4]x[1,2], kernel exponents (0,0,1)
def tplus_box(x, y):
    def inner(v):
        s = y + v
        return (mp.atan((x + mp.mpf(1) / 4) / s) - mp.atan((x - mp.mpf(1) / 4) / s)) / s
    return mp.quad(inner, [1, 2])


def t_box(x, y):
    def inner(v):
        cc = mp.mpc(x, y + v)
        return 1 / (cc - mp.mpf(1) / 4) - 1 / (cc + mp.mpf(1) / 4)
    return mp.quad(inner, [1, 2])


rows = []
for (x, y) in [(0, 1), (1, 0.5), (-1, 2), (0, 0.5)]:
    x_, y_ = mp.mpf(str(x)), mp.mpf(str(y))
    tb = t_box(x_, y_)
    rows.append((x_, y_, tplus_box(x_, y_), tb.real, tb.imag))
show("box under T+ and T, (x, y, tplus, t_re, t_im)", rows)

# weighted norms of exp(-x): (Γ((a+1)) / p^(a+1))^(1/p)
rows = []
for (p, a) in [(3, 0.5), (1.5, -0.5), (2, 2)]:
    p_, a_ = mp.mpf(str(p)), mp.mpf(str(a))
    rows.append((p_, a_, (mp.gamma(a_ + 1) / p_ ** (a_ + 1)) ** (1 / p_)))
show("norm of exp(-x) (p, a, value)", rows)


# certificate witnesses by the grid scan
def certificate(p, q, a, b, al, be, ga, forced=None):
    p, q, a, b, al, be, ga = map(mp.mpf, map(str, (p, q, a, b, al, be, ga)))
    om = al + be - ga - a
    ap = (a + 1) * (1 - 1 / p)
    W = (b + 1) / q
    bma = be - a

    def feas(d):
        t = (-d - ap) / om
        if not (0 < t < 1):
            return None
        lo = max(-bma * (1 - t), -al * t - d)
        hi = min(ap + bma * t, W + al * (1 - t) - d)
        if hi - lo > mp.mpf("1e-12") * max(abs(lo) + abs(hi), 1):
            return t, (lo + hi) / 2
        return None

    if forced is not None:
        d = mp.mpf(str(forced))
        t, s = feas(d)
    else:
        for k in range(1, 1025):
            d = W * k / 1025
            got = feas(d)
            if got:
                t, s = got
                break
    r = s + d
    b2 = mp.beta(-r * q + al * (1 - t) * q + b + 1, bma * (1 - t) * q + s * q)
    m2 = b2 ** (1 / q)
    if p == 1:
        A = bma * t - s
        B = al * t + r
        m1 = A ** A * B ** B / (A + B) ** (A + B)
    else:
        pp = p / (p - 1)
        m1 = mp.beta(-s * pp + bma * t * pp + a + 1, al * t * pp + r * pp) ** (1 / pp)
    return d, t, s, r, m1, m2, m1 * m2


rows = []
for tup in [
    (2, 2, 0, 0, 0, 0, 1),
    (1.5, 3, 0.2, -0.4, 0.3, 0.1, None),
    (1, 2, 0, 0, 0.25, 0.5, 1.25),
    (3, 3, 1, 1, 0.5, 0.5, 2),
]:
    p, q, a, b, al, be, ga = tup
    if ga is None:
        ga = al + be + 1 - (a + 1) / p + (b + 1) / q
        ga = float(mp.nstr(ga, 20))
    out = certificate(p, q, a, b, al, be, ga)
    rows.append(tuple(mp.mpf(str(v)) for v in (p, q, a, b, al, be, ga)) + out)
show("certificates (p, q, a, b, alpha, beta, gamma, d, t, s, r, M1, M2, bound)", rows)
print("// forced d = 1/4:", mp.nstr(certificate(2, 2, 0, 0, 0, 0, 1, forced=0.25)[-1], 20), mp.nstr(2 * mp.sqrt(mp.pi), 20))
