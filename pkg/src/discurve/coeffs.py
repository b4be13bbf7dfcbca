"""Coefficient arithmetic for the exact and numeric lanes.

A coefficient is one of:

  * ``Fraction``            exact rational
  * ``SqrtCoef``            exact element a + b*sqrt(d) of a quadratic field,
                            d a squarefree integer != 0, 1 (d < 0 allowed,
                            sqrt(d) then means i*sqrt(|d|))
  * mpmath ``mpf``/``mpc``  arbitrary precision numerics

Exact operands never silently degrade: arithmetic between exact values stays
exact or raises.  Mixing an exact operand with an mpf/mpc yields an mpc at
the current mpmath working precision.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .errors import InternalError, ParseError, PrecisionExhausted

Rat = Fraction


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n == s*s*f and f squarefree, for n >= 1."""
    s, f, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            f *= p
        p += 1 if p == 2 else 2
    return s, f * n


@dataclass(frozen=True)
class SqrtCoef:
    """a + b*sqrt(d) with a, b rational, d a squarefree integer != 0, 1.

    The invariant b != 0 is enforced; purely rational values are represented
    by Fraction.  Use make_sqrt() to construct values safely.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.d == 0:
            raise ValueError("radicand must be nonzero")
        sq, free = _squarefree_split(abs(self.d))
        object.__setattr__(self, "b", self.b * sq)
        object.__setattr__(self, "d", free if self.d > 0 else -free)
        if self.b == 0 or self.d == 1:
            raise ValueError("degenerate SqrtCoef; use make_sqrt()")

    def __bool__(self) -> bool:
        return True  # b != 0 means the value is irrational, hence nonzero

    def __neg__(self):
        return SqrtCoef(-self.a, -self.b, self.d)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtCoef(self.a + other, self.b, self.d)
        if isinstance(other, SqrtCoef):
            if other.d != self.d:
                raise ValueError("cannot add sqrt(%d) and sqrt(%d) exactly" % (self.d, other.d))
            return make_sqrt(self.a + other.a, self.b + other.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, SqrtCoef)):
            return self + (-other if isinstance(other, SqrtCoef) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return make_sqrt(self.a * other, self.b * other, self.d)
        if isinstance(other, SqrtCoef):
            if other.d == self.d:
                return make_sqrt(
                    self.a * other.a + self.b * other.b * self.d,
                    self.a * other.b + self.b * other.a,
                    self.d,
                )
            if self.a == 0 and other.a == 0:
                # pure radicals: sqrt(d1)*sqrt(d2), principal branches
                sign = -1 if (self.d < 0 and other.d < 0) else 1
                return make_sqrt(Fraction(0), sign * self.b * other.b, self.d * other.d)
            raise ValueError("cannot multiply sqrt(%d) and sqrt(%d) exactly" % (self.d, other.d))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return make_sqrt(self.a / other, self.b / other, self.d)
        if isinstance(other, SqrtCoef):
            return self * other._inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out: Union[Fraction, SqrtCoef] = Fraction(1)
        base: Union[Fraction, SqrtCoef] = self
        while n:
            if n & 1:
                out = base * out
            base = base * base
            n >>= 1
        return out

    def _inverse(self) -> "SqrtCoef":
        # norm a^2 - b^2 d is nonzero since d is not a rational square
        nrm = self.a * self.a - self.b * self.b * self.d
        return SqrtCoef(self.a / nrm, -self.b / nrm, self.d)

    def conjugate(self) -> "SqrtCoef":
        return SqrtCoef(self.a, -self.b, self.d)

    def __str__(self) -> str:
        return render_coeff(self)

    def __repr__(self) -> str:
        return "SqrtCoef(%r, %r, %d)" % (self.a, self.b, self.d)


def make_sqrt(a, b, d: int):
    """a + b*sqrt(d), collapsing to Fraction when the radical part vanishes."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return a
    if d == 0:
        raise ValueError("radicand must be nonzero")
    sq, free = _squarefree_split(abs(d))
    if free == 1 and d > 0:
        return a + b * sq
    return SqrtCoef(a, b * sq, free if d > 0 else -free)


Coef = Union[Fraction, SqrtCoef, mpmath.mpf, mpmath.mpc]

_NUMERIC = (mpmath.mpf, mpmath.mpc, float, complex)


def is_exact(c) -> bool:
    return isinstance(c, (int, Fraction, SqrtCoef))


def cnorm(c) -> Coef:
    """Normalize a coefficient: ints become Fractions, numerics become mpc."""
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, SqrtCoef, mpmath.mpf, mpmath.mpc)):
        return c
    if isinstance(c, (float, complex)):
        return mpmath.mpc(c)
    if getattr(c, "RING_ELEMENT", False):
        return c
    raise InternalError("unsupported coefficient type %r" % type(c).__name__)


def cto_mpc(c) -> mpmath.mpc:
    """Convert any coefficient to an mpc at the current working precision."""
    if isinstance(c, int):
        return mpmath.mpc(c)
    if isinstance(c, Fraction):
        return mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
    if isinstance(c, SqrtCoef):
        root = mpmath.sqrt(mpmath.mpc(c.d))
        return cto_mpc(c.a) + cto_mpc(c.b) * root
    return mpmath.mpc(c)


def cabs(c) -> mpmath.mpf:
    return abs(cto_mpc(c))


def _binop(x, y, exact_op):
    x, y = cnorm(x), cnorm(y)
    if is_exact(x) and is_exact(y):
        r = exact_op(x, y)
        if r is NotImplemented:
            r = exact_op(Fraction(x) if isinstance(x, int) else x, y)
        return r
    return exact_op(cto_mpc(x), cto_mpc(y))


def cadd(x, y):
    return _binop(x, y, lambda a, b: a + b)


def csub(x, y):
    return _binop(x, y, lambda a, b: a - b)


def cmul(x, y):
    return _binop(x, y, lambda a, b: a * b)


def cdiv(x, y):
    return _binop(x, y, lambda a, b: a / b)


def cneg(x):
    return -cnorm(x)


def cis_zero(c, ctx: "Ctx | None" = None) -> bool:
    c = cnorm(c)
    if is_exact(c):
        return isinstance(c, Fraction) and c == 0
    if ctx is None:
        raise InternalError("numeric zero test requires a Ctx")
    return cabs(c) < ctx.zero_eps


def ceq(x, y, ctx: "Ctx | None" = None) -> bool:
    x, y = cnorm(x), cnorm(y)
    if is_exact(x) and is_exact(y):
        if isinstance(x, SqrtCoef) != isinstance(y, SqrtCoef):
            return False
        if isinstance(x, SqrtCoef):
            return x.a == y.a and x.b == y.b and x.d == y.d
        return x == y
    if ctx is None:
        raise InternalError("numeric comparison requires a Ctx")
    return abs(cto_mpc(x) - cto_mpc(y)) < ctx.zero_eps


def _rational_sqrt(q: Fraction):
    """Exact nonnegative square root of q >= 0 as a Fraction, or None."""
    if q < 0:
        return None
    np_, dp = q.numerator, q.denominator
    rn, rd = math.isqrt(np_), math.isqrt(dp)
    if rn * rn == np_ and rd * rd == dp:
        return Fraction(rn, rd)
    return None


def try_sqrt(c):
    """Exact square root when it exists in a quadratic field, else None.

    Fractions always succeed (result Fraction or SqrtCoef).  For SqrtCoef
    inputs, succeeds only when the root stays inside the same field Q(sqrt d).
    Numeric inputs return a numeric principal root.
    """
    c = cnorm(c)
    if isinstance(c, Fraction):
        if c == 0:
            return Fraction(0)
        n = abs(c.numerator) * c.denominator
        sq, free = _squarefree_split(n)
        return make_sqrt(0, Fraction(sq, c.denominator), free if c > 0 else -free)
    if isinstance(c, SqrtCoef):
        # solve (x + y sqrt(d))^2 = a + b sqrt(d)
        nrm = c.a * c.a - c.b * c.b * c.d
        r = _rational_sqrt(nrm) if nrm >= 0 else None
        if r is None:
            return None
        for s in (r, -r):
            x = _rational_sqrt((c.a + s) / 2)
            if x is not None and x != 0:
                return make_sqrt(x, c.b / (2 * x), c.d)
        return None
    return mpmath.sqrt(c)


@dataclass(frozen=True)
class Ctx:
    """Numeric context: working precision and the derived thresholds.

    zero_eps is the magnitude below which a computed value is declared zero,
    cluster_eps the distance below which two computed roots are declared
    equal, band_eps the start of the ambiguity band that forces escalation.
    """

    prec: int = 128
    max_prec: int = 4096

    @property
    def zero_eps(self) -> mpmath.mpf:
        return mpmath.ldexp(1, -(self.prec // 2))

    @property
    def cluster_eps(self) -> mpmath.mpf:
        return mpmath.ldexp(1, -(self.prec // 4))

    @property
    def band_eps(self) -> mpmath.mpf:
        return mpmath.ldexp(1, -(self.prec // 8))

    def escalate(self) -> "Ctx":
        if 2 * self.prec > self.max_prec:
            raise PrecisionExhausted(
                "cannot certify result below precision 2^-%d" % self.max_prec)
        return Ctx(2 * self.prec, self.max_prec)

    def workprec(self):
        return mpmath.workprec(self.prec)


_COEF_TOKEN = re.compile(r"\s*(sqrt|\d+\.\d+|\d+|[()+\-*/])")


def _tokenize_coeff(s: str):
    toks, pos = [], 0
    while pos < len(s):
        m = _COEF_TOKEN.match(s, pos)
        if m is None:
            if s[pos:].strip():
                raise ParseError("unexpected character %r" % s[pos], pos)
            break
        toks.append((m.group(1), m.start(1)))
        pos = m.end()
    return toks


class _CoeffParser:
    """Recursive descent over +, -, *, /, sqrt(), parentheses, literals."""

    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def next(self):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of coefficient")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, want):
        tok, pos = self.next()
        if tok != want:
            raise ParseError("expected %r, found %r" % (want, tok), pos)

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            w = self.term()
            v = cadd(v, w) if op == "+" else csub(v, w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op, pos = self.next()
            w = self.factor()
            if op == "/" and cis_zero(w):
                raise ParseError("division by zero", pos)
            v = cmul(v, w) if op == "*" else cdiv(v, w)
        return v

    def factor(self):
        if self.peek() == "-":
            self.next()
            return cneg(self.factor())
        if self.peek() == "+":
            self.next()
            return self.factor()
        return self.atom()

    def atom(self):
        tok, pos = self.next()
        if tok == "(":
            v = self.expr()
            self.expect(")")
            return v
        if tok == "sqrt":
            self.expect("(")
            v = self.expr()
            self.expect(")")
            r = try_sqrt(v)
            if r is None:
                raise ParseError("sqrt argument has no exact quadratic root", pos)
            return r
        if re.fullmatch(r"\d+\.\d+|\d+", tok):
            return Fraction(tok)
        raise ParseError("unexpected token %r" % tok, pos)


def parse_coeff(s: str):
    """Parse an exact coefficient like '-3/4', '0.25' or '4*sqrt(6)/9'."""
    toks = _tokenize_coeff(s)
    if not toks:
        raise ParseError("empty coefficient")
    p = _CoeffParser(toks)
    v = p.expr()
    if p.i != len(p.toks):
        raise ParseError("trailing input %r" % p.toks[p.i][0], p.toks[p.i][1])
    return v


def _render_radical(b: Fraction, d: int) -> str:
    core = "sqrt(%d)" % d
    num, den = b.numerator, b.denominator
    s = "-" if num < 0 else ""
    num = abs(num)
    if num != 1:
        core = "%d*%s" % (num, core)
    if den != 1:
        core = "%s/%d" % (core, den)
    return s + core

def render_coeff(c) -> str:
    """Inverse of parse_coeff for exact values; digit string for numerics."""
    c = cnorm(c)
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, SqrtCoef):
        rad = _render_radical(c.b, c.d)
        if c.a == 0:
            return rad
        joint = "" if rad.startswith("-") else "+"
        return "%s%s%s" % (c.a, joint, rad)
    digits = max(mpmath.mp.dps, 30)
    if isinstance(c, mpmath.mpc) and c.imag == 0:
        c = c.real
    return mpmath.nstr(c, digits)
