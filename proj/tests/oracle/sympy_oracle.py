"""Independent expansion of the fixed-point integrand with sympy.

Prints frozen values consumed by the C++ test-suite. Run with:
    python3 tests/oracle/sympy_oracle.py
"""
import sympy as sp

x, u, v, w, S, T = sp.symbols("x u v w s t")


def ahat(expr, order):
    return sp.series(x / (sp.exp(x / 2) - sp.exp(-x / 2)), x, 0, order + 1).removeO().subs(x, expr)


def sech_half(expr, order):
    return sp.series(1 / (sp.exp(x / 2) + sp.exp(-x / 2)), x, 0, order + 1).removeO().subs(x, expr)


def reduce_top(poly, k, c):
    """Return normal form (p, q) and the integral over B_c."""
    poly = sp.Poly(sp.expand(poly), u, v)
    p = [sp.Integer(0)] * (2 * k)
    q = [sp.Integer(0)] * (2 * k)
    for (i, j), coef in poly.terms():
        if j >= 2:
            continue
        if j == 1:
            if i <= 2 * k - 1:
                q[i] += coef
        else:
            if i <= 2 * k - 1:
                p[i] += coef
            elif i == 2 * k:
                q[2 * k - 1] += c * coef
    return p, q


def truncate_total(expr, maxdeg):
    poly = sp.Poly(sp.expand(expr), u, v)
    return sum(cf * u**i * v**j for (i, j), cf in poly.terms() if i + j <= maxdeg and j <= 1)


def integrand(k, c, s, t):
    n = 2 * k
    parts = [ahat(2 * v, n), ahat(u, n) ** (2 * k - 1), ahat(u - c * v, n), sech_half(s * u + t * v, n)]
    acc = sp.Integer(1)
    for f in parts:
        acc = truncate_total(acc * truncate_total(f, n), n)
    return reduce_top(acc, k, c)


def local_datum(k, c, s, t):
    return integrand(k, c, s, t)[1][2 * k - 1]


def a1_direct(k, s):
    expr = (u / (sp.exp(u / 2) - sp.exp(-u / 2))) ** (2 * k) * (sp.exp(s * u / 2) - sp.exp(-s * u / 2)) / (
        2 * (sp.exp(s * u / 2) + sp.exp(-s * u / 2)) ** 2)
    return sp.expand(sp.series(expr, u, 0, 2 * k).removeO()).coeff(u, 2 * k - 1)


if __name__ == "__main__":
    p, q = integrand(2, 1, 2, 1)
    print("integrand k=2 c=1 s=2 t=1: p =", p, "q =", q)
    p, q = integrand(2, 3, 2, 5)
    print("integrand k=2 c=3 s=2 t=5: p =", p, "q =", q)
    for (k, c, s) in [(2, 1, 2), (2, 3, 2), (2, 1, -2), (2, 1, 4), (3, 1, 2), (3, 3, 4), (2, -1, 6)]:
        vals = [local_datum(k, c, s, t) for t in (1, 3, 5)]
        a1 = (vals[0] - vals[1]) / 2
        a0 = vals[0] + a1
        print(f"k={k} c={c} s={s}: a(t=1,3,5)={vals} A0={a0} A1={a1}")
    for k in (2, 3):
        print(f"A1 poly k={k}:", sp.expand(a1_direct(k, S)))
    for k in range(2, 6):
        print(f"a1_direct k={k} s=2:", a1_direct(k, 2), " closed:", sp.Rational((-1) ** (k - 1) * k, 2 ** (k + 1)))
    # Ahat(B_c) for k=2 c=1
    n = 4
    acc = sp.Integer(1)
    for f in [ahat(2 * v, n), ahat(u, n) ** 3, ahat(u - v, n)]:
        acc = truncate_total(acc * truncate_total(f, n), n)
    print("ahat k=2 c=1:", reduce_top(acc, 2, 1))
    acc = sp.Integer(1)
    for f in [ahat(2 * v, n), ahat(u, n) ** 3, ahat(u - 3 * v, n)]:
        acc = truncate_total(acc * truncate_total(f, n), n)
    print("ahat k=2 c=3:", reduce_top(acc, 2, 3))
    # total Chern class k=2 c=3
    chern = (1 + 2 * v) * ((1 + u) ** 4 - 3 * v * (1 + u) ** 3)
    print("chern k=2 c=3:", reduce_top(truncate_total(chern, 4), 2, 3))
    print("revert 2sinh(u/2):", sp.series(2 * sp.asinh(w / 2), w, 0, 8))
