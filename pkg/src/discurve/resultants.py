"""Resultants, bivariate gcd and squarefree decomposition.

Two independent resultant implementations are kept on purpose: a recursive
pseudo-division route (fast enough here, no fractions) and a Sylvester matrix
with Bareiss fraction-free elimination.  Tests compare them; callers get the
pseudo-division route by default.

Both are generic over the coefficient ring: entries may be field elements
(Fraction, SqrtCoef) or BiPoly values, anything with ring operators and,
for non-fields, a divexact method.
"""

from __future__ import annotations

from fractions import Fraction

from .bipoly import BiPoly, RatFunc, udeg, ugcd, udivexact, ulc, umul, unorm, uscale, uyun
from .errors import InternalError


def _zero_one(sample):
    if isinstance(sample, BiPoly):
        return BiPoly.zero(sample.vars), BiPoly.const(1, sample.vars)
    return Fraction(0), Fraction(1)


def _divexact(a, b):
    if isinstance(a, BiPoly):
        return a.divexact(b)
    return a / b


def _strip(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def prem(A: list, B: list) -> list:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced modulo B."""
    A, B = _strip(A), _strip(B)
    if not B:
        raise ZeroDivisionError("pseudo-division by zero")
    m, n = len(A) - 1, len(B) - 1
    if m < n:
        return A
    lcB = B[-1]
    R = list(A)
    e = m - n + 1
    while R and len(R) - 1 >= n:
        k = len(R) - 1 - n
        lcR = R[-1]
        R = [lcB * c for c in R[:-1]]
        for i in range(n):
            R[k + i] = R[k + i] - lcR * B[i]
        R = _strip(R)
        e -= 1
    if e > 0:
        scale = lcB
        for _ in range(e - 1):
            scale = scale * lcB
        R = [scale * c for c in R]
    return _strip(R)


def res_list(A: list, B: list):
    """Resultant of two coefficient lists by recursive pseudo-division."""
    A, B = _strip(A), _strip(B)
    sample = (A or B or [Fraction(1)])[0]
    zero, one = _zero_one(sample)
    if not A or not B:
        return zero
    m, n = len(A) - 1, len(B) - 1
    if m == 0 and n == 0:
        return one
    if n == 0:
        b = B[0]
        out = one
        for _ in range(m):
            out = out * b
        return out
    if m == 0:
        a = A[0]
        out = one
        for _ in range(n):
            out = out * a
        return out
    if m < n:
        r = res_list(B, A)
        return -r if (m * n) % 2 else r
    R = prem(A, B)
    if not R:
        return zero
    r = len(R) - 1
    sub = res_list(B, R)
    # Res(A,B) = (-1)^(mn) lc(B)^(m-r) Res(B, R_true), and the pseudo
    # remainder R equals lc(B)^(m-n+1) R_true, so divide the surplus out.
    k = (m - n + 1) * n - (m - r)
    lcB = B[-1]
    if k < 0:
        raise InternalError("negative exponent in resultant reduction")
    for _ in range(k):
        sub = _divexact(sub, lcB)
    return -sub if (m * n) % 2 else sub


def sylvester(A: list, B: list) -> list[list]:
    """Sylvester matrix of A and B (degrees >= 1)."""
    A, B = _strip(A), _strip(B)
    m, n = len(A) - 1, len(B) - 1
    N = m + n
    zero, _ = _zero_one(A[0])
    rows = []
    ra = list(reversed(A))
    rb = list(reversed(B))
    for i in range(n):
        rows.append([zero] * i + ra + [zero] * (N - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + rb + [zero] * (N - n - 1 - i))
    return rows


def det_bareiss(M: list[list]):
    """Fraction-free determinant; entries need ring ops and exact division."""
    N = len(M)
    if N == 0:
        return Fraction(1)
    M = [row[:] for row in M]
    zero, one = _zero_one(M[0][0])
    sign = 1
    prev = one
    for k in range(N - 1):
        if M[k][k] == 0:
            for i in range(k + 1, N):
                if not (M[i][k] == 0):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, N):
            for j in range(k + 1, N):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = _divexact(num, prev)
            M[i][k] = zero
        prev = M[k][k]
    out = M[N - 1][N - 1]
    return -out if sign < 0 else out


def res_sylvester(A: list, B: list):
    """Resultant via Bareiss elimination of the Sylvester matrix."""
    A, B = _strip(A), _strip(B)
    sample = (A or B or [Fraction(1)])[0]
    zero, one = _zero_one(sample)
    if not A or not B:
        return zero
    m, n = len(A) - 1, len(B) - 1
    if m == 0 and n == 0:
        return one
    if n == 0:
        out = one
        for _ in range(m):
            out = out * B[0]
        return out
    if m == 0:
        out = one
        for _ in range(n):
            out = out * A[0]
        return out
    return det_bareiss(sylvester(A, B))


def resultant(f: BiPoly, g: BiPoly, var: str, method: str = "prs") -> BiPoly:
    """Resultant of two bivariate polynomials, eliminating var."""
    if f.vars != g.vars:
        raise InternalError("variable mismatch in resultant")
    A = f.coeff_list(var)
    B = g.coeff_list(var)
    if method == "prs":
        r = res_list(A, B)
    elif method == "sylvester":
        r = res_sylvester(A, B)
    else:
        raise InternalError("unknown resultant method %r" % method)
    if isinstance(r, BiPoly):
        return r
    return BiPoly.const(r, f.vars)


def _ratlist_to_bipoly(coeffs: list, var: str, vars: tuple[str, str]) -> BiPoly:
    """Clear denominators and content of a RatFunc coefficient list.

    Returns the primitive polynomial with leading scalar 1, a canonical
    representative of the associate class.
    """
    coeffs = [c if isinstance(c, RatFunc) else RatFunc.const(c) for c in coeffs]
    den = [Fraction(1)]
    for c in coeffs:
        g = ugcd(den, c.den)
        den = udivexact(umul(den, c.den), g) if udeg(g) >= 0 and g else umul(den, c.den)
    nums = [unorm(umul(udivexact(den, c.den), c.num)) for c in coeffs]
    content = []
    for p in nums:
        content = ugcd(content, p)
    nums = [udivexact(p, content) if p else [] for p in nums]
    top = nums[-1]
    lead = ulc(top)
    nums = [uscale(p, 1 / lead) for p in nums]
    other = vars[1] if var == vars[0] else vars[0]
    lifted = [BiPoly.from_coeff_list(p, other, vars) for p in nums]
    return BiPoly.from_coeff_list(lifted, var, vars)


def bigcd(f: BiPoly, g: BiPoly, var: str) -> BiPoly:
    """Gcd of two bivariate polynomials as polynomials in var over K(other).

    The result is primitive in the other variable with leading scalar 1;
    content common to f and g in the other variable alone is ignored.
    """
    if f.vars != g.vars:
        raise InternalError("variable mismatch in bigcd")
    a = f.to_ratfunc_list(var)
    b = g.to_ratfunc_list(var)
    h = ugcd(a, b)
    if not h:
        return BiPoly.zero(f.vars)
    return _ratlist_to_bipoly(h, var, f.vars)


def squarefree_decompose(f: BiPoly, var: str) -> tuple[BiPoly, list[tuple[BiPoly, int]]]:
    """Squarefree decomposition of f with respect to var.

    Returns (cofactor, [(factor, multiplicity), ...]) with each factor
    squarefree and primitive in var, pairwise coprime, and
    f == cofactor * prod(factor^multiplicity).  The cofactor is free of var.
    """
    if f.is_zero():
        return BiPoly.zero(f.vars), []
    parts = uyun(f.to_ratfunc_list(var))
    out = []
    prod = BiPoly.const(1, f.vars)
    for fac, mult in parts:
        p = _ratlist_to_bipoly(fac, var, f.vars)
        out.append((p, mult))
        prod = prod * p ** mult
    cofactor = f.divexact(prod)
    if cofactor.deg(var) > 0:
        raise InternalError("squarefree cofactor still involves %r" % var)
    return cofactor, out
