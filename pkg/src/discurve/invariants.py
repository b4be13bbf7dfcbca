"""Numerical invariants of plane branches.

Everything here works on exact data when given exact data.  The valuation
staircase (Gaussian elimination ordered by t-adic valuation) is the shared
engine: it certifies semigroup membership, ideal value sets (Tjurina
number), and value sets of pulled back differentials (Zariski invariant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bipoly import BiPoly
from .coeffs import Ctx, cto_mpc, is_exact
from .errors import (
    InfiniteIntersection,
    InsufficientTruncation,
    InternalError,
    InvalidInput,
    NumericAmbiguity,
    PrecisionExhausted,
)
from .puiseux import Parametrization, PuiseuxSeries, compose, puiseux_roots

_MAX_BOUND = 1 << 14


# ---------------------------------------------------------------------------
# characteristic exponents and the semigroup


def characteristic_exponents(obj, ctx: Ctx | None = None) -> tuple[int, ...]:
    """Characteristic exponents (beta_0, ..., beta_g) in t-units.

    Accepts a Parametrization, a PuiseuxSeries (exponents are then scaled
    by the ramification), or an irreducible branch equation as a BiPoly.
    Computed from the support alone: beta_{k+1} is the smallest exponent
    not divisible by the running gcd.  Truncated series that exhaust their
    known support before the gcd reaches 1 raise InsufficientTruncation.
    """
    if isinstance(obj, BiPoly):
        obj = _branch_series_auto(obj, ctx)
    if isinstance(obj, Parametrization):
        r = obj.n
        support = [k for k, _ in obj.y_terms]
        limit = None
    elif isinstance(obj, PuiseuxSeries):
        r = obj.ram
        support = [int(e * r) for e, _ in obj.significant_terms(ctx)]
        limit = None if obj.trunc is None else obj.trunc * r
    else:
        raise InvalidInput("need a Parametrization, PuiseuxSeries, or BiPoly")
    g0 = r
    for m in support:
        g0 = gcd(g0, m)
    if g0 > 1:
        # non-primitive: the same branch with t replaced by t^(1/g0)
        r //= g0
        support = [m // g0 for m in support]
        limit = None if limit is None else limit / g0
    out = [r]
    d = r
    for m in support:
        if d == 1:
            break
        if m % d != 0:
            out.append(m)
            d = gcd(d, m)
    if d != 1:
        if limit is not None:
            raise InsufficientTruncation(
                "support known only below %s; gcd stuck at %d" % (limit, d))
        raise InvalidInput("parametrization is not primitive (gcd %d)" % d)
    return tuple(out)


@dataclass(frozen=True)
class SemigroupInfo:
    """Value semigroup data of a branch."""

    char: tuple[int, ...]  # characteristic exponents, beta_0 first
    generators: tuple[int, ...]  # minimal generators s_0 < s_1 < ... < s_g
    conductor: int
    milnor: int  # equals the conductor for a branch
    delta: int
    genus: int  # number of characteristic pairs

    @property
    def multiplicity(self) -> int:
        return self.char[0]

    @property
    def q(self) -> int:
        """Number of semigroup gaps strictly between s_1 and the conductor."""
        if self.multiplicity == 1:
            return 0
        s1 = self.generators[1]
        gamma = _gamma_below(self, self.conductor)
        return sum(1 for v in range(s1 + 1, self.conductor) if v not in gamma)


def semigroup_from_char(beta: tuple[int, ...]) -> SemigroupInfo:
    """Generators and conductor from characteristic exponents.

    s_0 = beta_0, s_1 = beta_1 and
    s_k = (e_{k-2}/e_{k-1}) s_{k-1} + beta_k - beta_{k-1},
    with e_k = gcd(e_{k-1}, beta_k); the conductor is
    sum (e_{k-1} - e_k) beta_k - beta_0 + 1.
    """
    beta = tuple(int(b) for b in beta)
    if not beta or beta[0] < 1:
        raise InvalidInput("need beta_0 >= 1")
    n = beta[0]
    if n == 1:
        if len(beta) > 1:
            raise InvalidInput("smooth branch cannot have extra exponents")
        return SemigroupInfo((1,), (1,), 0, 0, 0, 0)
    if any(b2 <= b1 for b1, b2 in zip(beta, beta[1:])):
        raise InvalidInput("characteristic exponents must increase")
    es = [n]
    for b in beta[1:]:
        es.append(gcd(es[-1], b))
    if es[-1] != 1 or any(e2 >= e1 for e1, e2 in zip(es, es[1:])):
        raise InvalidInput("invalid characteristic sequence %r" % (beta,))
    gens = [n]
    for k in range(1, len(beta)):
        if k == 1:
            gens.append(beta[1])
        else:
            gens.append((es[k - 2] // es[k - 1]) * gens[k - 1]
                        + beta[k] - beta[k - 1])
    cond = sum((es[k - 1] - es[k]) * beta[k] for k in range(1, len(beta))) - n + 1
    delta = cond // 2
    if cond % 2 != 0:
        raise InternalError("odd conductor for a branch")
    return SemigroupInfo(beta, tuple(gens), cond, cond, delta, len(beta) - 1)


def semigroup(obj, ctx: Ctx | None = None) -> SemigroupInfo:
    """Semigroup data from a parametrization or Puiseux series."""
    return semigroup_from_char(characteristic_exponents(obj, ctx))


# ---------------------------------------------------------------------------
# valuation staircase machinery


def _dmul(a: dict, b: dict, bound: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e >= bound:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return out


def _significant_order(s: dict, ctx: Ctx | None):
    exact_mode = all(is_exact(c) for c in s.values())
    for e in sorted(s):
        c = s[e]
        if is_exact(c):
            if not (isinstance(c, Fraction) and c == 0):
                return e
            continue
        ctx2 = ctx or Ctx()
        with ctx2.workprec():
            m = abs(cto_mpc(c))
            if m < ctx2.zero_eps:
                continue
            if not exact_mode and m < ctx2.band_eps:
                raise NumericAmbiguity("staircase pivot in the ambiguity band")
            return e
    return None


def _value_set(gens: list[dict], bound: int, ctx: Ctx | None = None) -> set[int]:
    """Orders of t-series in the K-span of the given generators, below bound."""
    basis: dict[int, dict] = {}
    for s in gens:
        cur = {e: c for e, c in s.items() if e < bound}
        while True:
            o = _significant_order(cur, ctx)
            if o is None:
                break
            if o in basis:
                piv = basis[o]
                factor = cur[o] / piv[o]
                nxt = dict(cur)
                for e, c in piv.items():
                    nxt[e] = nxt.get(e, 0) - factor * c
                nxt.pop(o, None)
                cur = nxt
            else:
                basis[o] = cur
                break
    return set(basis)


def _monomials(n: int, yt: dict, bound: int) -> list[dict]:
    """All pullbacks of x^a y^b with order < bound; x = t^n, y given as a
    t-exponent dict."""
    oy = min(yt) if yt else None
    out = []
    ypow: dict = {0: Fraction(1)}
    b = 0
    while oy is not None and b * oy < bound or b == 0:
        a = 0
        while a * n + b * (oy or 0) < bound:
            mono = {e + a * n: c for e, c in ypow.items() if e + a * n < bound}
            if mono:
                out.append(mono)
            a += 1
        b += 1
        if oy is None:
            break
        ypow = _dmul(ypow, yt, bound)
        if not ypow:
            break
    return out


def _branch_series(f: BiPoly, depth: Fraction, ctx: Ctx | None) -> PuiseuxSeries:
    """The single Puiseux root orbit of an irreducible branch equation."""
    n = f.deg(f.vars[1])
    reps = puiseux_roots(f, depth, ctx)
    if len(reps) != 1 or reps[0][1] != 1 or reps[0][0].ram != n:
        raise InvalidInput("equation is not irreducible at the origin")
    return reps[0][0]


def _branch_series_auto(f: BiPoly, ctx: Ctx | None) -> PuiseuxSeries:
    """Branch series deep enough for the full characteristic sequence.

    The Milnor number (conductor) is computed first by resultant, so the
    required support depth is known a priori.
    """
    n = f.deg(f.vars[1])
    if n < 1:
        raise InvalidInput("equation has no y term")
    mu = milnor(f, "resultant", ctx)
    return _branch_series(f, Fraction(mu + 2 * n, n) + 1, ctx)


def _tdata(obj, ctx: Ctx | None, depth: Fraction | None = None):
    """(n, y t-dict, known t-bound or None, series, equation or None)."""
    if isinstance(obj, Parametrization):
        return obj.n, dict(obj.y_terms), None, obj.to_series(), None
    if isinstance(obj, BiPoly):
        if depth is None:
            ser = _branch_series_auto(obj, ctx)
        else:
            ser = _branch_series(obj, depth, ctx)
        n = ser.ram
        yt = {int(e * n): c for e, c in ser.terms.items()}
        tb = None if ser.trunc is None else int(ser.trunc * n)
        return n, yt, tb, ser, obj
    raise InvalidInput("need a Parametrization or a branch equation")


def semigroup_oracle(par: Parametrization, bound: int | None = None,
                     ctx: Ctx | None = None) -> tuple[list[int], int]:
    """Achieved t-orders of functions on the branch, by direct elimination.

    Independent of the characteristic-exponent recursion; used to
    cross-check semigroup_from_char.  Returns (sorted orders < bound, bound).
    """
    oy = par.ord_y()
    if oy is None:
        raise InvalidInput("smooth axis branch has trivial semigroup")
    if bound is None:
        bound = par.n * oy + par.n + 1
    vals = _value_set(_monomials(par.n, dict(par.y_terms), bound), bound, ctx)
    return sorted(vals), bound


def tjurina(obj, ctx: Ctx | None = None) -> int:
    """Tjurina number: dim of O/(f, f_x, f_y) for the branch equation f.

    Computed on the branch: tau = #(value set of the local ring minus value
    set of the ideal pulled back from (f_x, f_y)), an exact count by
    valuation staircases.  Accepts a Parametrization or an irreducible
    branch equation."""
    from .puiseux import implicitize

    if isinstance(obj, Parametrization):
        f = implicitize(obj)
        n, yt, tb, series, _ = _tdata(obj, ctx)
        sg = semigroup(obj)
    else:
        n0 = obj.deg(obj.vars[1])
        mu = milnor(obj, "resultant", ctx)
        n, yt, tb, series, f = _tdata(obj, ctx, Fraction(2 * mu + 2 * n0, n0) + 1)
        sg = semigroup(series, ctx)
        if sg.conductor != mu:
            raise InternalError("conductor does not match the Milnor number")
    pulls = []
    for var in f.vars:
        d = compose(f.deriv(var), series, ctx)
        if d.order(ctx) is None:
            raise InternalError("vanishing partial derivative pullback")
        lim = None if d.trunc is None else d.trunc * n
        pulls.append(({int(e * n): c for e, c in d.terms.items()}, lim))
    orders = [min(p) for p, _ in pulls]
    bound = sg.conductor + min(orders)
    for _, lim in pulls:
        if lim is not None and lim < bound:
            raise InsufficientTruncation("pullback truncated below the "
                                         "staircase bound %d" % bound)
    gens = []
    for p, _ in pulls:
        po = min(p)
        for mono in _monomials(n, yt, max(bound - po, 1)):
            gens.append(_dmul(mono, p, bound))
    ideal_vals = _value_set(gens, bound, ctx)
    ring_vals = {v for v in _gamma_below(sg, bound)}
    if not ideal_vals <= ring_vals:
        raise InternalError("ideal value outside the ring value set")
    return len(ring_vals - ideal_vals)


def _gamma_below(sg: SemigroupInfo, bound: int) -> set[int]:
    vals = {0}
    for g in sg.generators:
        new = set()
        for v in vals:
            w = v
            while w < bound:
                new.add(w)
                w += g
        vals = new
    vals |= set(range(sg.conductor, bound))
    return {v for v in vals if v < bound}


def milnor_from_semigroup(sg: SemigroupInfo) -> int:
    return sg.conductor


def zariski_invariant(obj, ctx: Ctx | None = None) -> int | None:
    """The minimal non-semigroup order of a differential value, minus n.

    None for quasi-homogeneous-like branches whose differential values all
    lie in the semigroup (no analytic modulus at this level).  Accepts a
    Parametrization or an irreducible branch equation."""
    n, yt, tb, series, _ = _tdata(obj, ctx)
    sg = semigroup(series, ctx)
    bound = sg.conductor + n + 1
    if tb is not None and tb - 1 < bound:
        raise InsufficientTruncation("series truncated below the "
                                     "differential staircase bound")
    dx = {n - 1: Fraction(n)}
    dy = {k - 1: k * c for k, c in yt.items() if k >= 1}
    gens = []
    for form in (dx, dy):
        if not form:
            continue
        po = min(form)
        for mono in _monomials(n, yt, max(bound - po, 1)):
            gens.append(_dmul(mono, form, bound))
    vals = _value_set(gens, bound, ctx)
    lam_vals = {v + 1 for v in vals}
    gamma = _gamma_below(sg, bound + 1)
    gaps = sorted(lam_vals - gamma)
    if not gaps:
        return None
    return gaps[0] - n


# ---------------------------------------------------------------------------
# intersection numbers


def intersection_with_param(par: Parametrization, g: BiPoly,
                            ctx: Ctx | None = None) -> int:
    """i0 of the branch with the curve g = 0, as ord_t g(t^n, y(t))."""
    s = compose(g, par.to_series(), ctx)
    o = s.order(ctx)
    if o is None:
        if s.entire:
            raise InfiniteIntersection("the curve contains the branch")
        raise InsufficientTruncation("intersection order beyond truncation")
    v = o * par.n
    if v.denominator != 1:
        raise InternalError("fractional intersection number")
    return int(v)


def _roots_resolved(f: BiPoly, bound: Fraction, ctx: Ctx):
    reps = puiseux_roots(f, bound, ctx)
    out = []
    for s, m in reps:
        out.extend((c, m) for c in s.conjugates(ctx))
    return out


def intersection_number(f: BiPoly, g: BiPoly, method: str = "hz",
                        ctx: Ctx | None = None) -> int:
    """Intersection multiplicity at the origin of two y-general curves.

    method 'hz': sum of the orders of root differences over all Puiseux
    roots of f and g (with conjugates), times the y-degree weights.
    method 'resultant': the x-order of Res_y(f, g); both need the leading
    y-coefficients to be units at x = 0.
    """
    ctx = ctx or Ctx()
    if method == "resultant":
        from .resultants import resultant

        r = resultant(f, g, f.vars[1])
        if r.is_zero():
            raise InfiniteIntersection("curves share a component")
        u = r.to_univariate(f.vars[0])
        for e, c in sorted(((e, c) for e, c in enumerate(u)), key=lambda t: t[0]):
            if not (is_exact(c) and c == 0):
                if is_exact(c):
                    return e
                with ctx.workprec():
                    if abs(cto_mpc(c)) >= ctx.zero_eps:
                        return e
        raise InfiniteIntersection("resultant vanished identically")
    if method != "hz":
        raise InvalidInput("unknown intersection method %r" % method)
    bound = Fraction(8)
    cur = ctx
    while True:
        try:
            rf = _roots_resolved(f, bound, cur)
            rg = _roots_resolved(g, bound, cur)
            total = Fraction(0)
            for sf, mf in rf:
                for sg_, mg in rg:
                    o, limit = sf.diff_order(sg_, cur)
                    if o is None:
                        if limit is None:
                            raise InfiniteIntersection("common Puiseux root")
                        raise InsufficientTruncation("pair agrees to bound %s" % limit)
                    total += o * mf * mg
            if total.denominator != 1:
                raise InternalError("fractional intersection number")
            return int(total)
        except InsufficientTruncation:
            if bound > _MAX_BOUND:
                raise
            bound *= 2
        except NumericAmbiguity:
            cur = cur.escalate()  # PrecisionExhausted at the ceiling


def milnor(f: BiPoly, method: str = "resultant", ctx: Ctx | None = None) -> int:
    """Milnor number of a y-general branch equation with x transversal.

    'resultant': ord_x Res_y(f, f_y) - (deg_y f - 1).
    'polar': sum over polar roots gamma of ord_x f_x(x, gamma(x)), i.e.
    the intersection of the two polar curves.
    """
    ctx = ctx or Ctx()
    yvar = f.vars[1]
    n = f.deg(yvar)
    fy = f.deriv(yvar)
    if method == "resultant":
        return intersection_number(f, fy, "resultant", ctx) - (n - 1)
    if method != "polar":
        raise InvalidInput("unknown milnor method %r" % method)
    fx = f.deriv(f.vars[0])
    bound = Fraction(8)
    cur = ctx
    while True:
        try:
            total = Fraction(0)
            for s, m in puiseux_roots(fy, bound, cur):
                d = compose(fx, s, cur)
                o = d.order(cur)
                if o is None:
                    if d.entire:
                        raise InfiniteIntersection("polar contains a branch of f_x")
                    raise InsufficientTruncation("f_x order beyond truncation")
                total += o * s.ram * m
            if total.denominator != 1:
                raise InternalError("fractional Milnor number")
            return int(total)
        except InsufficientTruncation:
            if bound > _MAX_BOUND:
                raise
            bound *= 2
        except NumericAmbiguity:
            cur = cur.escalate()
