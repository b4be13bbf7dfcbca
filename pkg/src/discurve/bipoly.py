"""Univariate and bivariate polynomial arithmetic.

Univariate polynomials are plain lists of coefficients, lowest degree first,
normalized so the last entry is nonzero (the zero polynomial is []).  The
coefficients of one polynomial live in a single field: Fraction, SqrtCoef
with one fixed radicand, mpmath numbers, or RatFunc.

BiPoly is a sparse bivariate polynomial over an exact coefficient field.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coeffs import cnorm, cto_mpc, is_exact, render_coeff, try_sqrt
from .errors import InternalError, ParseError

# ---------------------------------------------------------------------------
# univariate helpers


def unorm(p: list) -> list:
    p = [cnorm(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def uis_zero(p: list) -> bool:
    return not unorm(list(p))


def udeg(p: list) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def ulc(p: list):
    if not p:
        raise InternalError("leading coefficient of zero polynomial")
    return p[-1]


def uadd(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else 0
        b = q[k] if k < len(q) else 0
        out.append(a + b if k < len(p) and k < len(q) else cnorm(a + b))
    return unorm(out)


def uneg(p: list) -> list:
    return [-c for c in p]


def usub(p: list, q: list) -> list:
    return uadd(p, uneg(q))


def uscale(p: list, c) -> list:
    c = cnorm(c)
    return unorm([c * a for a in p])


def ushift(p: list, k: int) -> list:
    """Multiply by x^k."""
    return [Fraction(0)] * k + list(p) if p else []


def umul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return unorm(out)


def upow(p: list, n: int) -> list:
    out, base = [Fraction(1)], list(p)
    while n:
        if n & 1:
            out = umul(out, base)
        base = umul(base, base)
        n >>= 1
    return out


def udivmod(p: list, q: list) -> tuple[list, list]:
    """Division with remainder over a coefficient field."""
    q = unorm(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = unorm(list(p))
    inv_lc = 1 / cnorm(ulc(q))
    quot = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while r and len(r) >= len(q):
        k = len(r) - len(q)
        c = r[-1] * inv_lc
        quot[k] = c
        for i in range(len(q)):
            r[k + i] = r[k + i] - c * q[i]
        r = unorm(r[:-1])
    return unorm(quot), r


def urem(p: list, q: list) -> list:
    return udivmod(p, q)[1]


def udivexact(p: list, q: list) -> list:
    quot, rem = udivmod(p, q)
    if rem:
        raise InternalError("inexact polynomial division")
    return quot


def umonic(p: list) -> list:
    p = unorm(list(p))
    if not p:
        return p
    return uscale(p, 1 / cnorm(ulc(p)))


def ugcd(p: list, q: list) -> list:
    """Monic gcd by the Euclidean algorithm."""
    a, b = unorm(list(p)), unorm(list(q))
    while b:
        a, b = b, urem(a, b)
    return umonic(a)


def uderiv(p: list) -> list:
    return unorm([k * p[k] for k in range(1, len(p))])


def ueval(p: list, x):
    acc = cnorm(0) * cnorm(x)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def uto_mpc(p: list) -> list:
    return [cto_mpc(c) for c in p]


def ufrom_roots(roots) -> list:
    """Monic polynomial with the given roots (with repetition)."""
    out = [Fraction(1)]
    for r in roots:
        out = umul(out, [-cnorm(r), Fraction(1)])
    return out


def uyun(p: list) -> list[tuple[list, int]]:
    """Squarefree decomposition: [(monic factor, multiplicity), ...].

    The product of factor^multiplicity equals p up to the leading
    coefficient.  Requires characteristic zero (always true here).
    """
    p = unorm(list(p))
    if udeg(p) < 1:
        return []
    g = ugcd(p, uderiv(p))
    if udeg(g) == 0:
        return [(umonic(p), 1)]
    out = []
    b = udivexact(p, g)
    c = udivexact(uderiv(p), g)
    d = usub(c, uderiv(b))
    i = 1
    while udeg(b) > 0:
        a = ugcd(b, d)
        if udeg(a) > 0:
            out.append((a, i))
        b = udivexact(b, a)
        c = udivexact(d, a)
        d = usub(c, uderiv(b))
        i += 1
    return out


def usquarefree(p: list) -> list:
    """Monic radical: the product of the distinct irreducible factors."""
    p = unorm(list(p))
    if udeg(p) < 1:
        return umonic(p)
    return umonic(udivexact(p, ugcd(p, uderiv(p))))


# ---------------------------------------------------------------------------
# rational functions over an exact field


class RatFunc:
    """num/den over one exact coefficient field, reduced, den monic."""

    __slots__ = ("num", "den")
    RING_ELEMENT = True  # lets cnorm() pass RatFunc values through

    def __init__(self, num, den=None, reduce=True):
        num = unorm(list(num))
        den = unorm(list(den)) if den is not None else [Fraction(1)]
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num and udeg(den) > 0:
            g = ugcd(num, den)
            if udeg(g) > 0:
                num, den = udivexact(num, g), udivexact(den, g)
        if num and ulc(den) != 1:
            inv = 1 / cnorm(ulc(den))
            num, den = uscale(num, inv), umonic(den)
        elif ulc(den) != 1:
            den = umonic(den)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c) -> "RatFunc":
        c = cnorm(c)
        return cls([] if c == 0 else [c], [Fraction(1)], reduce=False)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)) or is_exact(other):
            return RatFunc.const(other)
        return None

    def is_polynomial(self) -> bool:
        return udeg(self.den) == 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return umul(self.num, o.den) == umul(o.num, self.den)

    def __neg__(self):
        return RatFunc(uneg(self.num), self.den, reduce=False)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = uadd(umul(self.num, o.den), umul(o.num, self.den))
        return RatFunc(num, umul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(umul(self.num, o.num), umul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(umul(self.num, o.den), umul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __repr__(self):
        return "RatFunc(%r, %r)" % (self.num, self.den)


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Sparse bivariate polynomial: {(i, j): coef} with i, j the exponents
    of vars[0] and vars[1]."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: dict, vars: tuple[str, str] = ("x", "y")):
        clean = {}
        for (i, j), c in terms.items():
            c = cnorm(c)
            if c == 0:
                continue
            if i < 0 or j < 0:
                raise InternalError("negative exponent in BiPoly")
            clean[(int(i), int(j))] = c
        self.terms = clean
        self.vars = (str(vars[0]), str(vars[1]))

    # -- constructors

    @classmethod
    def zero(cls, vars=("x", "y")) -> "BiPoly":
        return cls({}, vars)

    @classmethod
    def const(cls, c, vars=("x", "y")) -> "BiPoly":
        return cls({(0, 0): c}, vars)

    @classmethod
    def var_poly(cls, name: str, vars=("x", "y")) -> "BiPoly":
        if name == vars[0]:
            return cls({(1, 0): 1}, vars)
        if name == vars[1]:
            return cls({(0, 1): 1}, vars)
        raise InternalError("unknown variable %r" % name)

    # -- inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant(self):
        return self.terms.get((0, 0), Fraction(0))

    def support(self):
        return set(self.terms)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    def _axis(self, var: str) -> int:
        if var == self.vars[0]:
            return 0
        if var == self.vars[1]:
            return 1
        raise InternalError("variable %r not in %r" % (var, self.vars))

    def deg(self, var: str) -> int:
        if not self.terms:
            return -1
        ax = self._axis(var)
        return max(k[ax] for k in self.terms)

    def total_deg(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    # -- arithmetic

    def _check_vars(self, other: "BiPoly"):
        if self.vars != other.vars:
            raise InternalError("variable mismatch %r vs %r" % (self.vars, other.vars))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.vars != other.vars or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) or is_exact(other):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check_vars(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiPoly) else -cnorm(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or is_exact(other):
            other = cnorm(other)
            return BiPoly({k: c * other for k, c in self.terms.items()}, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check_vars(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = BiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def deriv(self, var: str) -> "BiPoly":
        ax = self._axis(var)
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[ax]
            if e == 0:
                continue
            k = (i - 1, j) if ax == 0 else (i, j - 1)
            out[k] = out.get(k, Fraction(0)) + e * c
        return BiPoly(out, self.vars)

    # -- conversions

    def coeff_list(self, var: str) -> list:
        """Coefficients in var, lowest first; entries are BiPoly without var."""
        ax = self._axis(var)
        d = self.deg(var)
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            e = (i, j)[ax]
            key = (0, j) if ax == 0 else (i, 0)
            buckets[e][key] = c
        out = [BiPoly(b, self.vars) for b in buckets]
        while out and out[-1].is_zero():
            out.pop()
        return out

    @classmethod
    def from_coeff_list(cls, coeffs: list, var: str, vars=("x", "y")) -> "BiPoly":
        out = {}
        ax = 0 if var == vars[0] else 1
        for e, entry in enumerate(coeffs):
            if isinstance(entry, BiPoly):
                for (i, j), c in entry.terms.items():
                    k = (i + e, j) if ax == 0 else (i, j + e)
                    out[k] = out.get(k, Fraction(0)) + c
            else:
                k = (e, 0) if ax == 0 else (0, e)
                out[k] = out.get(k, Fraction(0)) + cnorm(entry)
        return cls(out, vars)

    def to_univariate(self, var: str) -> list:
        """Coefficient list when the polynomial only involves var."""
        ax = self._axis(var)
        other_ax = 1 - ax
        if any(k[other_ax] for k in self.terms):
            raise InternalError("polynomial is not univariate in %r" % var)
        out = [Fraction(0)] * (self.deg(var) + 1 if self.terms else 0)
        for k, c in self.terms.items():
            out[k[ax]] = c
        return unorm(out)

    def to_ratfunc_list(self, var: str) -> list[RatFunc]:
        """Coefficients in var as RatFunc in the other variable."""
        out = []
        other = self.vars[1 - self._axis(var)]
        for entry in self.coeff_list(var):
            out.append(RatFunc(entry.to_univariate(other) if not entry.is_zero() else []))
        return out

    @classmethod
    def from_ratfunc_list(cls, coeffs: list[RatFunc], var: str, vars=("x", "y")) -> "BiPoly":
        lifted = []
        other = vars[1] if var == vars[0] else vars[0]
        for r in coeffs:
            if not isinstance(r, RatFunc):
                r = RatFunc.const(r)
            if not r.is_polynomial():
                raise InternalError("nonpolynomial coefficient in from_ratfunc_list")
            c = 1 / cnorm(r.den[0])
            lifted.append(cls.from_coeff_list(uscale(r.num, c), other, vars))
        return cls.from_coeff_list(lifted, var, vars)

    def map_coeff(self, fn) -> "BiPoly":
        return BiPoly({k: fn(c) for k, c in self.terms.items()}, self.vars)

    def divexact(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient; raises InternalError if the division is inexact."""
        if isinstance(other, (int, Fraction)) or is_exact(other):
            inv = 1 / cnorm(other)
            return self * inv
        self._check_vars(other)
        if other.is_zero():
            raise ZeroDivisionError("BiPoly division by zero")
        var = self.vars[1]
        if other.deg(var) < 0 or (other.deg(var) == 0 and self.deg(var) < 0):
            var = self.vars[0]
        a = self.to_ratfunc_list(var)
        b = other.to_ratfunc_list(var)
        quot, rem = udivmod(a, b)
        if rem:
            raise InternalError("inexact bivariate division")
        return BiPoly.from_ratfunc_list(quot, var, self.vars)

    def eval(self, xv, yv):
        """Evaluate by Horner in vars[1] then vars[0]; values may be numeric."""
        acc = cnorm(0) * cnorm(xv)
        for c in reversed(self.coeff_list(self.vars[1])):
            acc = acc * yv + ueval(c.to_univariate(self.vars[0]), xv)
        return acc

    # -- parsing and printing

    @classmethod
    def parse(cls, s: str, vars: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return _parse_poly(s, vars)

    def render(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-k[1], k[0]))
        parts = []
        for idx, (i, j) in enumerate(keys):
            c = self.terms[(i, j)]
            cs = render_coeff(c)
            mono = []
            if i:
                mono.append(self.vars[0] if i == 1 else "%s^%d" % (self.vars[0], i))
            if j:
                mono.append(self.vars[1] if j == 1 else "%s^%d" % (self.vars[1], j))
            if not mono:
                body, neg = cs.lstrip("-"), cs.startswith("-")
            else:
                neg = cs.startswith("-")
                mag = cs[1:] if neg else cs
                if mag == "1":
                    body = "*".join(mono)
                else:
                    if any(ch in mag for ch in "+-") and not mag.startswith("sqrt"):
                        mag = "(%s)" % mag
                    body = "*".join([mag] + mono)
            if idx == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "BiPoly.parse(%r, vars=%r)" % (self.render(), self.vars)


_POLY_TOKEN = re.compile(r"\s*(\*\*|\^|[A-Za-z_][A-Za-z_0-9]*|\d+\.\d+|\d+|[()+\-*/])")


def _tokenize_poly(s: str):
    toks, pos = [], 0
    while pos < len(s):
        m = _POLY_TOKEN.match(s, pos)
        if m is None:
            if s[pos:].strip():
                raise ParseError("unexpected character %r" % s[pos], pos)
            break
        toks.append((m.group(1), m.start(1)))
        pos = m.end()
    return toks


_ATOM_START = re.compile(r"[A-Za-z_0-9(]")


class _PolyParser:
    def __init__(self, toks, vars):
        self.toks = toks
        self.vars = vars
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def next(self):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of polynomial")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, want):
        tok, pos = self.next()
        if tok != want:
            raise ParseError("expected %r, found %r" % (want, tok), pos)

    def expr(self) -> BiPoly:
        v = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self) -> BiPoly:
        v = self.factor()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op, pos = self.next()
                w = self.factor()
                if op == "*":
                    v = v * w
                else:
                    if not w.is_constant() or w.is_zero():
                        raise ParseError("can only divide by a nonzero constant", pos)
                    v = v * (1 / cnorm(w.constant()))
            elif nxt is not None and _ATOM_START.match(nxt):
                v = v * self.factor()  # implicit multiplication, e.g. 2x^3*y
            else:
                return v

    def factor(self) -> BiPoly:
        if self.peek() == "-":
            self.next()
            return -self.factor()
        if self.peek() == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self) -> BiPoly:
        v = self.atom()
        if self.peek() in ("^", "**"):
            self.next()
            tok, pos = self.next()
            if not re.fullmatch(r"\d+", tok):
                raise ParseError("exponent must be a nonnegative integer", pos)
            v = v ** int(tok)
        return v

    def atom(self) -> BiPoly:
        tok, pos = self.next()
        if tok == "(":
            v = self.expr()
            self.expect(")")
            return v
        if tok == "sqrt":
            self.expect("(")
            v = self.expr()
            self.expect(")")
            if not v.is_constant():
                raise ParseError("sqrt of a non-constant", pos)
            r = try_sqrt(v.constant())
            if r is None or not is_exact(r):
                raise ParseError("sqrt argument has no exact quadratic root", pos)
            return BiPoly.const(r, self.vars)
        if re.fullmatch(r"\d+\.\d+|\d+", tok):
            return BiPoly.const(Fraction(tok), self.vars)
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            if tok in self.vars:
                return BiPoly.var_poly(tok, self.vars)
            raise ParseError("unknown variable %r (expected %s or %s)"
                             % (tok, self.vars[0], self.vars[1]), pos)
        raise ParseError("unexpected token %r" % tok, pos)


def _parse_poly(s: str, vars: tuple[str, str]) -> BiPoly:
    toks = _tokenize_poly(s)
    if not toks:
        raise ParseError("empty polynomial")
    p = _PolyParser(toks, tuple(vars))
    v = p.expr()
    if p.i != len(p.toks):
        raise ParseError("trailing input %r" % p.toks[p.i][0], p.toks[p.i][1])
    return v


def parse_poly(s: str, vars: tuple[str, str] = ("x", "y")) -> BiPoly:
    """Parse a bivariate polynomial with exact coefficients."""
    return _parse_poly(s, vars)
