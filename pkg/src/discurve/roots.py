"""Root finding for univariate polynomials over the coefficient protocol.

Exact input is split by squarefree decomposition first, so every numeric
factor has simple roots; linear and quadratic pieces keep exact roots
(quadratics over the rationals always do, quadratics over a quadratic field
only when the discriminant has a root in the same field).  Multiplicities
are exact byproducts of the decomposition, never numeric guesses.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .bipoly import udeg, uderiv, ueval, unorm, uto_mpc
from .coeffs import Ctx, SqrtCoef, cto_mpc, is_exact, make_sqrt, try_sqrt
from .errors import PrecisionExhausted

_EXACT_UNITY = {
    1: [Fraction(1)],
    2: [Fraction(1), Fraction(-1)],
    3: [Fraction(1),
        make_sqrt(Fraction(-1, 2), Fraction(1, 2), -3),
        make_sqrt(Fraction(-1, 2), Fraction(-1, 2), -3)],
    4: [Fraction(1), make_sqrt(0, 1, -1), Fraction(-1), make_sqrt(0, -1, -1)],
    6: [Fraction(1),
        make_sqrt(Fraction(1, 2), Fraction(1, 2), -3),
        make_sqrt(Fraction(-1, 2), Fraction(1, 2), -3),
        Fraction(-1),
        make_sqrt(Fraction(-1, 2), Fraction(-1, 2), -3),
        make_sqrt(Fraction(1, 2), Fraction(-1, 2), -3)],
}


def unity_roots(r: int, ctx: Ctx | None = None) -> list:
    """All r-th roots of unity, exact for r in {1,2,3,4,6}, else numeric.

    Ordered as exp(2 pi i k / r) for k = 0..r-1.
    """
    if r in _EXACT_UNITY:
        return list(_EXACT_UNITY[r])
    ctx = ctx or Ctx()
    with ctx.workprec():
        return [mpmath.mpc(mpmath.expjpi(mpmath.mpf(2 * k) / r)) for k in range(r)]


def _exact_linear(p: list):
    return -p[0] / p[1]


def _exact_quadratic(p: list):
    """Both roots of a quadratic when they live in a quadratic field."""
    c, b, a = p[0], p[1], p[2]
    disc = b * b - 4 * (a * c)
    if isinstance(disc, Fraction) and disc == 0:
        return None  # not squarefree; callers pre-split
    root = try_sqrt(disc)
    if root is None or not is_exact(root):
        return None
    try:
        inv = 1 / (2 * a)
        return [(-b + root) * inv, (-b - root) * inv]
    except ValueError:
        return None  # mixed radicands, fall back to numerics


def try_nth_root(w, k: int, ctx: Ctx | None = None):
    """A k-th root of w, exact when one exists in a quadratic field.

    Used to pick the representative root c with c^k = w during Puiseux
    expansion; the other choices are conjugates.  Falls back to the numeric
    principal root.
    """
    if k < 1:
        raise ValueError("root order must be positive")
    if k == 1:
        return w
    if is_exact(w):
        cand = w
        kk = k
        ok = True
        while kk % 2 == 0 and ok:
            r = try_sqrt(cand)
            if r is None or not is_exact(r):
                ok = False
            else:
                cand, kk = r, kk // 2
        if ok and kk > 1 and isinstance(cand, Fraction):
            r = _rational_nth_root(cand, kk)
            if r is not None:
                cand, kk = r, 1
        elif ok and kk > 1:
            ok = False
        if ok and kk == 1:
            return cand
    ctx = ctx or Ctx()
    with ctx.workprec():
        z = cto_mpc(w)
        if z.imag == 0 and z.real < 0 and k % 2 == 1:
            return -mpmath.mpc(mpmath.root(-z.real, k))
        return mpmath.mpc(mpmath.root(z, k))


def _rational_nth_root(q: Fraction, k: int):
    """Exact k-th root of a rational when it is again rational."""
    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    num = _int_nth_root(q.numerator, k)
    den = _int_nth_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(sign * num, den)


def _int_nth_root(n: int, k: int):
    lo, hi = 0, 1
    while hi ** k < n:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


_RAT_ROOT_CAP = 10 ** 12


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


def _rational_roots(p: list) -> tuple[list, list]:
    """Split off rational roots of a Fraction-coefficient polynomial.

    Returns (roots, residual).  Uses the rational root theorem on the
    integer-cleared polynomial; skipped when coefficients are huge.
    """
    from math import gcd

    scale = 1
    for c in p:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ip = [int(c * scale) for c in p]
    roots = []
    while ip and ip[0] == 0:
        roots.append(Fraction(0))
        ip = ip[1:]
    if len(ip) > 1:
        a0, an = abs(ip[0]), abs(ip[-1])
        if a0 <= _RAT_ROOT_CAP and an <= _RAT_ROOT_CAP:
            cands = sorted({Fraction(s * num, den)
                            for num in _divisors(a0) for den in _divisors(an)
                            for s in (1, -1)})
            work = [Fraction(c) for c in ip]
            for r in cands:
                while udeg(work) >= 1 and ueval(work, r) == 0:
                    roots.append(r)
                    work, _ = _deflate(work, r)
            ip = work
    return roots, [Fraction(c) for c in ip]


def _deflate(p: list, r) -> tuple[list, object]:
    """Synthetic division of p by (x - r); returns (quotient, remainder)."""
    out = [None] * (len(p) - 1)
    acc = p[-1]
    for k in range(len(p) - 2, -1, -1):
        out[k] = acc
        acc = p[k] + r * acc
    return unorm(out), acc


def _sort_key(ctx: Ctx):
    def key(pair):
        with ctx.workprec():
            z = cto_mpc(pair[0])
            return (z.real, z.imag)
    return key


def newton_polish(p: list, z, steps: int = 8):
    """A few Newton iterations on p at the current working precision."""
    dp = uderiv(p)
    for _ in range(steps):
        fz = ueval(p, z)
        dz = ueval(dp, z)
        if dz == 0:
            break
        z = z - fz / dz
    return z


def _polyroots(p: list, ctx: Ctx) -> list:
    """Simple numeric roots of p at ctx precision (no multiplicity logic)."""
    with ctx.workprec():
        coeffs = [cto_mpc(c) for c in reversed(p)]
        try:
            rts = mpmath.polyroots(coeffs, maxsteps=200, extraprec=ctx.prec)
        except mpmath.libmp.libhyper.NoConvergence:
            raise PrecisionExhausted("polynomial root iteration did not converge")
        return [mpmath.mpc(r) for r in rts]


def _roots_squarefree_exact(p: list, ctx: Ctx) -> list:
    """Roots of a squarefree exact polynomial, exact when degree permits."""
    found = []
    if all(isinstance(c, Fraction) for c in p) and udeg(p) >= 3:
        found, p = _rational_roots(list(p))
        if udeg(p) < 1:
            return found
    d = udeg(p)
    if d == 1:
        return found + [_exact_linear(p)]
    if d == 2:
        exact = _exact_quadratic(p)
        if exact is not None:
            return found + exact
    c = ctx
    while True:
        rts = _polyroots(p, c)
        with c.workprec():
            ok = all(abs(rts[i] - rts[j]) > c.cluster_eps
                     for i in range(len(rts)) for j in range(i + 1, len(rts)))
        if ok:
            if c.prec > ctx.prec:
                with ctx.workprec():
                    rts = [mpmath.mpc(newton_polish(uto_mpc(p), r)) for r in rts]
            return found + rts
        c = c.escalate()  # squarefree, so true roots are distinct


def _cluster_numeric(rts: list, eps) -> list[tuple]:
    """Group nearby roots; returns (mean, count) per cluster."""
    groups: list[list] = []
    for r in rts:
        for g in groups:
            if any(abs(r - s) < eps for s in g):
                g.append(r)
                break
        else:
            groups.append([r])
    out = []
    for g in groups:
        mean = sum(g) / len(g)
        out.append((mean, len(g)))
    return out


def complex_roots(p: list, ctx: Ctx | None = None) -> list[tuple]:
    """All complex roots of p with multiplicities, ordered deterministically.

    Returns [(root, multiplicity), ...].  Roots are exact field elements
    whenever the squarefree factors have degree <= 2 and the needed square
    root stays exact; otherwise mpc values at ctx precision.
    """
    from .bipoly import uyun  # local import keeps module load order simple

    ctx = ctx or Ctx()
    p = unorm(list(p))
    if udeg(p) < 1:
        return []
    if all(is_exact(c) for c in p):
        out = []
        for fac, mult in uyun(p):
            for r in _roots_squarefree_exact(fac, ctx):
                out.append((r, mult))
        out.sort(key=_sort_key(ctx))
        return out
    # numeric input: best effort clustering, multiplicity = cluster size
    rts = _polyroots(p, ctx)
    with ctx.workprec():
        clusters = _cluster_numeric(rts, ctx.cluster_eps)
        out = []
        for mean, mult in clusters:
            q = uto_mpc(p)
            for _ in range(mult - 1):
                q = uderiv(q)
            out.append((mpmath.mpc(newton_polish(q, mean)), mult))
    out.sort(key=_sort_key(ctx))
    return out
