"""Puiseux series, parametrizations, expansion and implicitization.

A PuiseuxSeries is a fractional power series in one variable with a
ramification index r (all exponents are multiples of 1/r) and a truncation
order: terms below trunc are exact and complete, nothing is known beyond.
trunc None means the series is entire, i.e. an exact finite sum.

puiseux_roots() runs the Newton polygon recursion.  Multiple edge roots
recurse on a shifted chart; once an edge root is simple the remaining tail
is unramified and is computed by Newton iteration on truncated power
series, which keeps the recursion depth bounded by the number of
characteristic exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

import mpmath

from .bipoly import BiPoly, udeg, unorm
from .coeffs import Ctx, SqrtCoef, cto_mpc, is_exact, render_coeff
from .errors import (
    InternalError,
    InvalidInput,
    NumericAmbiguity,
    ParseError,
)
from .newton_polygon import Edge, edge_polynomial, edges
from .roots import complex_roots, try_nth_root, unity_roots


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


# ---------------------------------------------------------------------------
# truncated power series with integer exponents (internal work horse)


class _IS:
    """Truncated power series: {exponent: coef} plus trunc (None = entire)."""

    __slots__ = ("t", "k")

    def __init__(self, terms: dict, k=None):
        self.t = {e: c for e, c in terms.items() if not (is_exact(c) and c == 0)
                  and (k is None or e < k)}
        self.k = k

    def ord(self):
        return min(self.t) if self.t else None

    def copy(self):
        return _IS(dict(self.t), self.k)


def _is_add(a: _IS, b: _IS) -> _IS:
    k = a.k if b.k is None else (b.k if a.k is None else min(a.k, b.k))
    out = dict(a.t)
    for e, c in b.t.items():
        out[e] = out.get(e, 0) + c
    return _IS(out, k)


def _is_neg(a: _IS) -> _IS:
    return _IS({e: -c for e, c in a.t.items()}, a.k)


def _is_scale(a: _IS, c) -> _IS:
    return _IS({e: v * c for e, v in a.t.items()}, a.k)


def _is_mul(a: _IS, b: _IS) -> _IS:
    if not a.t:
        return _IS({}, a.k if a.k is not None and b.t else a.k)
    if not b.t:
        return _IS({}, b.k)
    ka = None if a.k is None else a.k + min(b.t)
    kb = None if b.k is None else b.k + min(a.t)
    k = ka if kb is None else (kb if ka is None else min(ka, kb))
    out = {}
    for ea, ca in a.t.items():
        for eb, cb in b.t.items():
            e = ea + eb
            if k is not None and e >= k:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return _IS(out, k)


def _is_ord_ctx(a: _IS, ctx: Ctx):
    """Order with numeric noise below zero_eps ignored.

    Magnitudes inside the ambiguity band cannot be classified and escalate.
    """
    best = None
    noisy = [e for e, c in a.t.items() if not is_exact(c)]
    sig = set(a.t) - set(noisy)
    if noisy:
        with ctx.workprec():
            for e in noisy:
                m = abs(cto_mpc(a.t[e]))
                if m < ctx.zero_eps:
                    continue
                if m < ctx.band_eps:
                    raise NumericAmbiguity(
                        "series coefficient of magnitude %s in the ambiguity band" % m)
                sig.add(e)
    for e in sig:
        if best is None or e < best:
            best = e
    return best


def _is_clean(a: _IS, ctx: Ctx) -> _IS:
    """Drop numeric entries below zero_eps (band entries escalate)."""
    if all(is_exact(c) for c in a.t.values()):
        return a
    out = {}
    with ctx.workprec():
        for e, c in a.t.items():
            if not is_exact(c):
                m = abs(cto_mpc(c))
                if m < ctx.zero_eps:
                    continue
                if m < ctx.band_eps:
                    raise NumericAmbiguity(
                        "series coefficient of magnitude %s in the ambiguity band" % m)
            out[e] = c
    return _IS(out, a.k)


def _is_inv(a: _IS, target: int) -> _IS:
    """Inverse of a unit series up to the given order."""
    if 0 not in a.t:
        raise InternalError("inverting a non-unit series")
    k = target if a.k is None else min(a.k, target)
    inv0 = 1 / a.t[0]
    out = {0: inv0}
    for e in range(1, k):
        acc = None
        for d, c in a.t.items():
            if 0 < d <= e and (e - d) in out:
                term = c * out[e - d]
                acc = term if acc is None else acc + term
        if acc is not None:
            out[e] = -inv0 * acc
    return _IS(out, k)


def _is_eval_poly(coeffs: list[_IS], y: _IS) -> _IS:
    """Horner evaluation of sum coeffs[j] * y^j."""
    if not coeffs:
        return _IS({}, y.k)
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = _is_add(_is_mul(acc, y), c)
    return acc


# ---------------------------------------------------------------------------
# Puiseux series


class PuiseuxSeries:
    """Fractional power series sum c_e x^e with denominators dividing ram."""

    __slots__ = ("terms", "ram", "trunc")

    def __init__(self, terms: dict, ram: int = 1, trunc: Fraction | None = None):
        self.ram = int(ram)
        self.trunc = None if trunc is None else Fraction(trunc)
        clean = {}
        for e, c in terms.items():
            e = Fraction(e)
            if self.ram % e.denominator != 0:
                raise InternalError("exponent %s incompatible with ram %d" % (e, ram))
            if is_exact(c) and c == 0:
                continue
            if self.trunc is not None and e >= self.trunc:
                continue
            clean[e] = c
        self.terms = clean

    @property
    def entire(self) -> bool:
        return self.trunc is None

    def significant_terms(self, ctx: Ctx | None = None) -> list[tuple[Fraction, object]]:
        """Sorted (exponent, coef) pairs; numeric noise below zero_eps dropped."""
        out = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if not is_exact(c):
                ctx2 = ctx or Ctx()
                with ctx2.workprec():
                    if abs(cto_mpc(c)) < ctx2.zero_eps:
                        continue
            out.append((e, c))
        return out

    def order(self, ctx: Ctx | None = None) -> Fraction | None:
        """Smallest visible exponent, or None when no term is visible."""
        st = self.significant_terms(ctx)
        return st[0][0] if st else None

    def leading(self, ctx: Ctx | None = None):
        st = self.significant_terms(ctx)
        if not st:
            return None
        return st[0]

    def coeff(self, e) -> object:
        return self.terms.get(Fraction(e), Fraction(0))

    def truncate(self, bound: Fraction) -> "PuiseuxSeries":
        b = Fraction(bound) if self.trunc is None else min(self.trunc, Fraction(bound))
        return PuiseuxSeries(self.terms, self.ram, b)

    def map_coeff(self, fn) -> "PuiseuxSeries":
        return PuiseuxSeries({e: fn(c) for e, c in self.terms.items()},
                             self.ram, self.trunc)

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        r = lcm(self.ram, other.ram)
        t = None
        if self.trunc is not None or other.trunc is not None:
            cands = [x for x in (self.trunc, other.trunc) if x is not None]
            t = min(cands)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PuiseuxSeries(out, r, t)

    def __neg__(self):
        return PuiseuxSeries({e: -c for e, c in self.terms.items()}, self.ram, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        r = lcm(self.ram, other.ram)
        oa, ob = self._min_exp(), other._min_exp()
        cands = []
        if self.trunc is not None:
            if not other.terms:
                cands.append(self.trunc if other.trunc is None else min(self.trunc, other.trunc))
            else:
                cands.append(self.trunc + ob)
        if other.trunc is not None:
            if not self.terms:
                cands.append(other.trunc)
            else:
                cands.append(other.trunc + oa)
        t = min(cands) if cands else None
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                if t is not None and e >= t:
                    continue
                out[e] = out.get(e, 0) + ca * cb
        return PuiseuxSeries(out, r, t)

    def _min_exp(self) -> Fraction:
        return min(self.terms) if self.terms else Fraction(0)

    def scale(self, c) -> "PuiseuxSeries":
        return PuiseuxSeries({e: v * c for e, v in self.terms.items()},
                             self.ram, self.trunc)

    def conjugate(self, k: int, ctx: Ctx | None = None) -> "PuiseuxSeries":
        """Twist by the k-th ram-th root of unity: x^(1/ram) -> zeta^k x^(1/ram)."""
        r = self.ram
        units = unity_roots(r, ctx)
        out = {}
        for e, c in self.terms.items():
            m = int(e * r)
            z = units[(k * m) % r]
            if is_exact(c) != is_exact(z):
                ctx2 = ctx or Ctx()
                with ctx2.workprec():
                    out[e] = cto_mpc(c) * cto_mpc(z)
            else:
                out[e] = c * z
        return PuiseuxSeries(out, r, self.trunc)

    def conjugates(self, ctx: Ctx | None = None) -> list["PuiseuxSeries"]:
        """All ram conjugate series; exact twisting when the roots of unity
        stay exact and compatible, numeric otherwise."""
        out = []
        for k in range(self.ram):
            try:
                out.append(self.conjugate(k, ctx))
            except (ValueError, TypeError):
                ctx2 = ctx or Ctx()
                with ctx2.workprec():
                    num = self.map_coeff(cto_mpc)
                    out.append(num.conjugate(k, ctx2))
        return out

    def diff_order(self, other: "PuiseuxSeries", ctx: Ctx | None = None
                   ) -> tuple[Fraction | None, Fraction | None]:
        """(order of self - other, comparison limit).

        The order is the smallest exponent where the coefficients differ,
        None if the series agree on every exponent below the limit.  The
        limit is min of the truncation orders, None when both are entire.
        Numeric comparisons inside the ambiguity band raise NumericAmbiguity.
        """
        cands = [x for x in (self.trunc, other.trunc) if x is not None]
        limit = min(cands) if cands else None
        exps = set(self.terms) | set(other.terms)
        if limit is not None:
            exps = {e for e in exps if e < limit}
        for e in sorted(exps):
            a = self.terms.get(e, Fraction(0))
            b = other.terms.get(e, Fraction(0))
            if is_exact(a) and is_exact(b):
                if isinstance(a, Fraction) and isinstance(b, Fraction):
                    if a != b:
                        return e, limit
                elif not (type(a) is type(b) and a == b):
                    same = a == b
                    if not same:
                        return e, limit
            else:
                ctx2 = ctx or Ctx()
                with ctx2.workprec():
                    d = abs(cto_mpc(a) - cto_mpc(b))
                    if d < ctx2.zero_eps:
                        continue
                    if d < ctx2.band_eps:
                        raise NumericAmbiguity(
                            "coefficient difference %s at exponent %s is in the "
                            "ambiguity band" % (mpmath.nstr(d, 5), e))
                    return e, limit
        return None, limit

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.ram == other.ram and self.trunc == other.trunc
                and set(self.terms) == set(other.terms)
                and all(self.terms[e] == other.terms[e] for e in self.terms))

    def render(self, var: str = "x") -> str:
        st = sorted(self.terms)
        if not st:
            body = "0"
        else:
            parts = []
            for idx, e in enumerate(st):
                c = self.terms[e]
                cs = render_coeff(c)
                neg = cs.startswith("-")
                mag = cs[1:] if neg else cs
                if e == 0:
                    body_part = mag
                else:
                    xs = var if e == 1 else (
                        "%s^%d" % (var, e) if e.denominator == 1
                        else "%s^(%s)" % (var, e))
                    if mag == "1":
                        body_part = xs
                    else:
                        if any(ch in mag for ch in "+-") and not mag.startswith("sqrt"):
                            mag = "(%s)" % mag
                        body_part = "%s*%s" % (mag, xs)
                if idx == 0:
                    parts.append("-" + body_part if neg else body_part)
                else:
                    parts.append(("-" if neg else "+") + body_part)
            body = "".join(parts)
        if self.trunc is not None:
            body += "+O(%s^(%s))" % (var, self.trunc) if self.trunc.denominator != 1 \
                else "+O(%s^%s)" % (var, self.trunc)
        return body

    def __repr__(self):
        return "PuiseuxSeries(%s, ram=%d)" % (self.render(), self.ram)


def series_zero(trunc: Fraction | None = None) -> PuiseuxSeries:
    return PuiseuxSeries({}, 1, trunc)


# ---------------------------------------------------------------------------
# parametrizations


@dataclass(frozen=True)
class Parametrization:
    """Primitive parametrization x = t^n, y = sum c_k t^k (finite, k >= 1)."""

    n: int
    y_terms: tuple  # sorted tuple of (exponent, coef)

    @classmethod
    def make(cls, n: int, y_terms: dict) -> "Parametrization":
        if not isinstance(n, int) or n < 1:
            raise InvalidInput("multiplicity exponent n must be a positive integer")
        clean = []
        for k in sorted(y_terms):
            c = y_terms[k]
            if is_exact(c) and c == 0:
                continue
            if not isinstance(k, int) or k < 1:
                raise InvalidInput("parametrization exponents must be positive integers")
            clean.append((k, c))
        g = n
        for k, _ in clean:
            g = gcd(g, k)
        if n > 1 and g != 1:
            raise InvalidInput(
                "parametrization is not primitive: gcd of t-exponents is %d" % g)
        return cls(n, tuple(clean))

    @classmethod
    def parse(cls, x_str: str, y_str: str) -> "Parametrization":
        px = BiPoly.parse(x_str, ("t", "_aux"))
        n = None
        for (i, j), c in px.terms.items():
            if j != 0:
                raise ParseError("x(t) must be a polynomial in t")
            if n is not None or c != 1:
                raise ParseError("x(t) must be a single monomial t^n")
            n = i
        if n is None or n < 1:
            raise ParseError("x(t) must be t^n with n >= 1")
        py = BiPoly.parse(y_str, ("t", "_aux"))
        terms = {}
        for (i, j), c in py.terms.items():
            if j != 0:
                raise ParseError("y(t) must be a polynomial in t")
            terms[i] = c
        return cls.make(n, terms)

    @property
    def mult(self) -> int:
        """Multiplicity of the branch: min of n and the order of y."""
        oy = self.ord_y()
        return self.n if oy is None else min(self.n, oy)

    def ord_y(self) -> int | None:
        return self.y_terms[0][0] if self.y_terms else None

    def y_dict(self) -> dict:
        return dict(self.y_terms)

    def to_series(self) -> PuiseuxSeries:
        """y as a Puiseux series in x (exact, entire)."""
        return PuiseuxSeries({Fraction(k, self.n): c for k, c in self.y_terms},
                             self.n, None)

    def map_coeff(self, fn) -> "Parametrization":
        return Parametrization(self.n, tuple((k, fn(c)) for k, c in self.y_terms))

    def render(self) -> tuple[str, str]:
        xs = "t" if self.n == 1 else "t^%d" % self.n
        if not self.y_terms:
            return xs, "0"
        parts = []
        for idx, (k, c) in enumerate(self.y_terms):
            cs = render_coeff(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            ts = "t" if k == 1 else "t^%d" % k
            if mag == "1":
                body = ts
            else:
                if any(ch in mag for ch in "+-") and not mag.startswith("sqrt"):
                    mag = "(%s)" % mag
                body = "%s*%s" % (mag, ts)
            if idx == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("-" if neg else "+") + body)
        return xs, "".join(parts)


# ---------------------------------------------------------------------------
# Newton-Puiseux expansion


def _qth_root(w, q: int, ctx: Ctx):
    return try_nth_root(w, q, ctx)


def _radicands(vals) -> set:
    return {v.d for v in vals if isinstance(v, SqrtCoef) and v.b}


def _demote_mixed(f: BiPoly, ctx: Ctx, extra=()) -> BiPoly:
    """Map f to numeric coefficients when two quadratic radicals meet.

    The exact coefficient tower handles one radicand at a time; sums over
    distinct radicands have no exact representation here, so the affected
    subtree finishes numerically.
    """
    if len(_radicands([*extra, *f.terms.values()])) > 1:
        with ctx.workprec():
            return f.map_coeff(cto_mpc)
    return f


def _shift_chart(f: BiPoly, e: Edge, c, ctx: Ctx) -> BiPoly:
    """f(x1^q, x1^p (c + y1)) / x1^w with w the weighted order of the edge."""
    q, p = e.q, e.p
    f = _demote_mixed(f, ctx, extra=(c,))
    numeric = not is_exact(c) or any(not is_exact(v) for v in f.terms.values())
    if numeric:
        # all arithmetic on c must run at working precision, or the chart
        # constant term picks up ambient-precision residue that no later
        # escalation can shrink
        with ctx.workprec():
            c = cto_mpc(c)
            f = f.map_coeff(cto_mpc)
            return _shift_chart_raw(f, q, p, c)
    return _shift_chart_raw(f, q, p, c)


def _shift_chart_raw(f: BiPoly, q: int, p: int, c) -> BiPoly:
    w = min(q * i + p * j for (i, j) in f.terms)
    deg_y = max(j for (_, j) in f.terms)
    cpow = [1] * (deg_y + 1)
    for k in range(1, deg_y + 1):
        cpow[k] = cpow[k - 1] * c
    out: dict = {}
    for (i, j), coef in f.terms.items():
        base = q * i + p * j - w
        for kk in range(j + 1):
            key = (base, kk)
            val = coef * comb(j, kk) * cpow[j - kk]
            out[key] = out.get(key, 0) + val
    return BiPoly(out, f.vars)


def _newton_tail(f1: BiPoly, bound1: int, ctx: Ctx) -> _IS:
    """Unramified tail y1(x1) with f1(x1, y1) = 0, y1(0) = 0, to order bound1.

    Requires the simple-root setup: f1(0, y1) vanishes to order exactly 1.
    """
    yvar, xvar = f1.vars[1], f1.vars[0]
    f1 = _demote_mixed(f1, ctx)
    y = _IS({}, bound1)
    last = -1
    with ctx.workprec():
        coeffs = []
        for cp in f1.coeff_list(yvar):
            lst = cp.to_univariate(xvar)
            coeffs.append(_IS({i: v for i, v in enumerate(lst)}, bound1))
        dcoeffs = [_is_scale(coeffs[j], j) for j in range(1, len(coeffs))]
        for _ in range(80):
            res = _is_eval_poly(coeffs, y)
            o = _is_ord_ctx(res, ctx)
            if o is None:
                return _is_clean(y, ctx)
            if o <= last:
                raise InternalError("Newton tail stalled at order %d" % o)
            last = o
            dres = _is_eval_poly(dcoeffs, y)
            if _is_ord_ctx(dres, ctx) != 0:
                raise InternalError("Newton tail lost its simple-root certificate")
            delta = _is_mul(res, _is_inv(dres, bound1))
            y = _is_add(y, _is_neg(delta))
    raise InternalError("Newton tail did not converge")


def _positive_height(f: BiPoly, ctx: Ctx) -> int:
    es = edges(f, ctx)
    return sum(e.height for e in es)


def _np_expand(f: BiPoly, bound: Fraction, ctx: Ctx) -> list[tuple[PuiseuxSeries, int]]:
    if f.is_zero():
        raise InvalidInput("cannot expand the zero polynomial")
    f = _demote_mixed(f, ctx)
    out: list[tuple[PuiseuxSeries, int]] = []
    k0 = min(j for (_, j) in f.terms)
    if k0 > 0:
        out.append((PuiseuxSeries({}, 1, None), k0))
        f = BiPoly({(i, j - k0): c for (i, j), c in f.terms.items()}, f.vars)
    if f.deg(f.vars[1]) <= 0:
        return out
    if bound <= 0:
        h = _positive_height(f, ctx)
        if h:
            out.append((PuiseuxSeries({}, 1, Fraction(0)), h))
        return out
    for e in edges(f, ctx):
        h_poly = edge_polynomial(f, e)
        if udeg(h_poly) < 1:
            raise InternalError("edge of positive height with trivial edge polynomial")
        for w, m in complex_roots(h_poly, ctx):
            incl = e.incl
            if incl >= bound:
                out.append((PuiseuxSeries({}, 1, bound), e.q * m))
                continue
            c = _qth_root(w, e.q, ctx)
            f1 = _shift_chart(f, e, c, ctx)
            bound1 = bound * e.q - e.p
            if m == 1:
                tail = _newton_tail(f1, _ceil_frac(bound1), ctx)
                subs = [(PuiseuxSeries({Fraction(i): v for i, v in tail.t.items()},
                                       1, Fraction(tail.k)), 1)]
            else:
                subs = _np_expand(f1, bound1, ctx)
            for s1, m1 in subs:
                terms = {(Fraction(e.p) + ee) / e.q: cc
                         for ee, cc in s1.terms.items()}
                lead = Fraction(e.p, e.q)
                prev = terms.get(lead, 0)
                if is_exact(prev) and is_exact(c):
                    terms[lead] = prev + c
                else:
                    # adding at ambient precision would round the root to the
                    # interpreter default and poison every later comparison
                    with ctx.workprec():
                        terms[lead] = cto_mpc(prev) + cto_mpc(c)
                tr = None if s1.trunc is None else (Fraction(e.p) + s1.trunc) / e.q
                out.append((PuiseuxSeries(terms, e.q * s1.ram, tr), m1))
    return out


def puiseux_roots(f: BiPoly, bound, ctx: Ctx | None = None
                  ) -> list[tuple[PuiseuxSeries, int]]:
    """Puiseux roots of f tending to 0, as (representative series, mult).

    Each entry stands for ram conjugate roots, each a root of f of the given
    multiplicity, so sum(ram * mult) equals the y-degree of f when f is
    y-general with all roots vanishing at the origin.  Series are computed
    modulo x^bound.
    """
    ctx = ctx or Ctx()
    bound = Fraction(bound)
    out = _np_expand(f, bound, ctx)
    height = _positive_height(f, ctx)
    k0 = min((j for (_, j) in f.terms), default=0)
    total = sum(s.ram * m for s, m in out)
    if total != height + k0:
        raise InternalError("Puiseux root count %d does not match polygon height %d"
                            % (total, height + k0))
    def key(item):
        s, _ = item
        o = s.order(ctx)
        lead = s.leading(ctx)
        if lead is None:
            return (Fraction(10 ** 9), 0.0, 0.0)
        with ctx.workprec():
            z = cto_mpc(lead[1])
            return (o, float(z.real), float(z.imag))
    out.sort(key=key)
    return out


# ---------------------------------------------------------------------------
# composition and implicitization


def compose(f: BiPoly, s: PuiseuxSeries, ctx: Ctx | None = None) -> PuiseuxSeries:
    """f(x, s(x)) as a Puiseux series in x.

    Exact when f and s are exact and s is entire; otherwise truncated
    following the usual order bookkeeping.
    """
    ctx = ctx or Ctx()
    r = s.ram
    k = None if s.trunc is None else _ceil_frac(s.trunc * r)
    sw = _IS({int(e * r): c for e, c in s.terms.items()}, k)
    coeffs = []
    xvar, yvar = f.vars
    for cp in f.coeff_list(yvar):
        lst = cp.to_univariate(xvar)
        coeffs.append(_IS({r * i: v for i, v in enumerate(lst)}, None))
    numeric = any(not is_exact(c) for c in s.terms.values()) or \
        any(not is_exact(c) for c in f.terms.values())
    if numeric:
        with ctx.workprec():
            sw = _IS({e: cto_mpc(c) for e, c in sw.t.items()}, sw.k)
            coeffs = [_IS({e: cto_mpc(c) for e, c in cc.t.items()}, cc.k)
                      for cc in coeffs]
            acc = _is_eval_poly(coeffs, sw)
    else:
        acc = _is_eval_poly(coeffs, sw)
    tr = None if acc.k is None else Fraction(acc.k, r)
    return PuiseuxSeries({Fraction(e, r): c for e, c in acc.t.items()}, r, tr)


def _det_bipoly(M: list[list[BiPoly]]) -> BiPoly:
    """Determinant by first-row expansion with memo on column subsets."""
    n = len(M)
    if n == 0:
        return BiPoly.const(1)
    vars_ = M[0][0].vars
    memo: dict[tuple, BiPoly] = {}

    def go(cols: tuple) -> BiPoly:
        if not cols:
            return BiPoly.const(1, vars_)
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        acc = BiPoly.zero(vars_)
        for idx, cc in enumerate(cols):
            entry = M[r][cc]
            if entry.is_zero():
                continue
            sub = go(cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return go(tuple(range(n)))


def implicitize(par: Parametrization, vars: tuple[str, str] = ("x", "y")) -> BiPoly:
    """Monic degree-n equation of the branch x = t^n, y = y(t).

    Computed as det(y I - C) with C the matrix of multiplication by y(t)
    on K[x][t]/(t^n - x); the result generates the kernel of the
    substitution map, so it vanishes identically on the branch.
    """
    n = par.n
    C: list[list[dict]] = [[dict() for _ in range(n)] for _ in range(n)]
    for k, c in par.y_terms:
        for e in range(n):
            row, xs = (k + e) % n, (k + e) // n
            cell = C[row][e]
            cell[(xs, 0)] = cell.get((xs, 0), 0) + c
    yP = BiPoly.var_poly(vars[1], vars)
    M = []
    for r in range(n):
        row = []
        for e in range(n):
            ent = BiPoly(C[r][e], vars)
            row.append((yP - ent) if r == e else -ent)
        M.append(row)
    f = _det_bipoly(M)
    if f.coeff(0, n) != 1:
        raise InternalError("implicitization lost monicity in y")
    res = compose(f, par.to_series(), Ctx())
    if res.order() is not None:
        raise InternalError("implicit equation does not vanish on the branch")
    return f
